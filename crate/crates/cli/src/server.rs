//! HTTP API for human-vs-engine play.
//!
//! Sessions live in memory. Each session is guarded by its own lock and a move
//! that finds the lock taken is refused with 409 rather than queued.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::{json, Value};

use pml::game::{apply_move, best_move, legal_moves, solve_with_limit, EngineMove, GamePosition, GameSolution, Player};
use pml::kripke::{KripkeModel, StateId};

use crate::args::ServeArgs;
use crate::commands::{names, position_json, read_model};
use crate::{CliError, CliResult};

pub struct Session {
    pub model: KripkeModel,
    pub solution: GameSolution,
    pub position: GamePosition,
    pub human: Player,
    pub history: Vec<(Player, StateId)>,
}

impl Session {
    /// The winner once the player to move is stuck.
    fn finished(&self) -> Option<Player> {
        let p = &self.position;
        (p.started && legal_moves(p, &self.model).is_empty()).then(|| p.to_move.other())
    }

    fn play(&mut self, v: StateId) -> pml::Result<()> {
        let mover = self.position.to_move;
        self.position = apply_move(&self.position, v, &self.model)?;
        self.history.push((mover, v));
        Ok(())
    }

    /// Lets the engine move if it is its turn and the game is not over.
    fn engine_reply(&mut self) -> Option<Value> {
        if self.position.to_move == self.human || self.finished().is_some() {
            return None;
        }
        let reply = best_move(&self.position, &self.model, &self.solution);
        let v = reply.state()?;
        self.play(v).expect("engine moves are legal");
        Some(json!({ "to": self.model.name(v), "evaluation": evaluation(reply) }))
    }

    fn view(&self, id: &str) -> Value {
        json!({
            "sessionId": id,
            "role": self.human,
            "position": position_json(&self.model, &self.position, self.finished()),
            "legalMoves": self.legal_moves(),
            "history": self.history.iter().map(|(p, v)| json!({ "player": p, "to": self.model.name(*v) })).collect::<Vec<_>>(),
        })
    }

    fn legal_moves(&self) -> Vec<String> {
        if self.finished().is_some() {
            return Vec::new();
        }
        names(&self.model, legal_moves(&self.position, &self.model))
    }

    fn state(&self, name: &str) -> Result<StateId, ApiError> {
        self.model
            .state_by_name(name)
            .ok_or_else(|| ApiError::conflict("illegal-move", format!("no state named {name:?}")))
    }
}

fn evaluation(m: EngineMove) -> &'static str {
    match m {
        EngineMove::Winning(_) => "winning",
        EngineMove::Losing(_) => "losing",
        EngineMove::Resign => "resign",
    }
}

pub struct AppState {
    default_model: Option<KripkeModel>,
    default_role: Player,
    max_states: usize,
    next_id: AtomicU64,
    sessions: Mutex<HashMap<String, Arc<tokio::sync::Mutex<Session>>>>,
}

impl AppState {
    pub fn new(default_model: Option<KripkeModel>, default_role: Player, max_states: usize) -> Self {
        AppState {
            default_model,
            default_role,
            max_states,
            next_id: AtomicU64::new(1),
            sessions: Mutex::new(HashMap::new()),
        }
    }

    fn session(&self, id: &str) -> Result<Arc<tokio::sync::Mutex<Session>>, ApiError> {
        self.sessions
            .lock()
            .expect("session table poisoned")
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, "not-found", format!("no session {id:?}")))
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    kind: &'static str,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, kind: &'static str, message: impl Into<String>) -> Self {
        ApiError {
            status,
            kind,
            message: message.into(),
        }
    }

    fn conflict(kind: &'static str, message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::CONFLICT, kind, message)
    }
}

impl From<pml::Error> for ApiError {
    fn from(e: pml::Error) -> Self {
        let status = match e {
            pml::Error::IllegalMove(_) => StatusCode::CONFLICT,
            pml::Error::Budget { .. } => StatusCode::UNPROCESSABLE_ENTITY,
            _ => StatusCode::BAD_REQUEST,
        };
        ApiError::new(status, e.kind(), e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (
            self.status,
            Json(json!({ "error": self.kind, "message": self.message })),
        )
            .into_response()
    }
}

type ApiResult = Result<Json<Value>, ApiError>;

#[derive(Debug, Default, Deserialize)]
#[serde(default)]
pub struct NewSession {
    pub model: Option<KripkeModel>,
    pub role: Option<Player>,
}

#[derive(Debug, Deserialize)]
pub struct MoveRequest {
    pub to: String,
}

#[derive(Debug, Deserialize)]
pub struct WhatIf {
    pub to: String,
}

pub fn router(state: Arc<AppState>) -> Router {
    Router::new()
        .route("/session", post(create))
        .route("/session/{id}", get(show).delete(remove))
        .route("/session/{id}/move", post(play))
        .route("/session/{id}/hint", get(hint))
        .route("/session/{id}/whatif", get(what_if))
        .with_state(state)
}

async fn create(
    State(app): State<Arc<AppState>>,
    body: Option<Json<NewSession>>,
) -> Result<(StatusCode, Json<Value>), ApiError> {
    let req = body.map(|Json(b)| b).unwrap_or_default();
    let model = req.model.or_else(|| app.default_model.clone()).ok_or_else(|| {
        ApiError::new(
            StatusCode::BAD_REQUEST,
            "argument",
            "no model given and no default model",
        )
    })?;
    let solution = solve_with_limit(&model, app.max_states)?;
    let mut session = Session {
        model,
        solution,
        position: GamePosition::pregame(),
        human: req.role.unwrap_or(app.default_role),
        history: Vec::new(),
    };
    let engine = session.engine_reply();
    let id = format!("s{}", app.next_id.fetch_add(1, Ordering::Relaxed));
    let mut body = session.view(&id);
    body["engine"] = engine.unwrap_or(Value::Null);
    body["evaluation"] = session
        .solution
        .per_initial_node()
        .into_iter()
        .map(|(s, w)| (session.model.name(s).to_string(), json!(w)))
        .collect::<serde_json::Map<_, _>>()
        .into();
    app.sessions
        .lock()
        .expect("session table poisoned")
        .insert(id, Arc::new(tokio::sync::Mutex::new(session)));
    Ok((StatusCode::CREATED, Json(body)))
}

async fn show(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> ApiResult {
    let session = app.session(&id)?;
    let s = session.lock().await;
    Ok(Json(s.view(&id)))
}

async fn remove(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> Result<StatusCode, ApiError> {
    app.session(&id)?;
    app.sessions.lock().expect("session table poisoned").remove(&id);
    Ok(StatusCode::NO_CONTENT)
}

async fn play(State(app): State<Arc<AppState>>, Path(id): Path<String>, Json(req): Json<MoveRequest>) -> ApiResult {
    let session = app.session(&id)?;
    let mut s = session
        .try_lock()
        .map_err(|_| ApiError::conflict("busy", "another move on this session is in progress"))?;
    if let Some(w) = s.finished() {
        return Err(ApiError::conflict("game-over", format!("the game is over; {w} won")));
    }
    if s.position.to_move != s.human {
        return Err(ApiError::conflict(
            "not-your-turn",
            format!("it is {}'s turn", s.position.to_move),
        ));
    }
    let v = s.state(&req.to)?;
    s.play(v)?;
    let engine = s.engine_reply();
    let mut body = s.view(&id);
    body["engine"] = engine.unwrap_or(Value::Null);
    Ok(Json(body))
}

async fn hint(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> ApiResult {
    let session = app.session(&id)?;
    let s = session.lock().await;
    if s.position.to_move != s.human || s.finished().is_some() {
        return Ok(Json(json!({ "to": null, "evaluation": null })));
    }
    let m = best_move(&s.position, &s.model, &s.solution);
    Ok(Json(json!({
        "to": m.state().map(|v| s.model.name(v)),
        "evaluation": evaluation(m),
    })))
}

async fn what_if(State(app): State<Arc<AppState>>, Path(id): Path<String>, Query(q): Query<WhatIf>) -> ApiResult {
    let session = app.session(&id)?;
    let s = session.lock().await;
    let v = s.state(&q.to)?;
    let next = apply_move(&s.position, v, &s.model)?;
    let winner = s.solution.winner(&next);
    let mover = s.position.to_move;
    Ok(Json(json!({
        "to": s.model.name(v),
        "position": position_json(&s.model, &next, None),
        "winner": winner,
        "evaluation": if winner == mover { "winning" } else { "losing" },
    })))
}

/// Runs the server until interrupted.
pub fn serve_blocking(args: ServeArgs) -> CliResult<()> {
    let model = args.model.as_deref().map(read_model).transpose()?;
    if let Some(m) = &model {
        solve_with_limit(m, args.max_states)?;
    }
    let state = Arc::new(AppState::new(model, args.role.into(), args.max_states));
    let runtime = tokio::runtime::Runtime::new().map_err(|source| CliError::Io {
        path: "tokio runtime".into(),
        source,
    })?;
    runtime.block_on(async move {
        let addr = std::net::SocketAddr::from(([127, 0, 0, 1], args.port));
        let listener = tokio::net::TcpListener::bind(addr)
            .await
            .map_err(|source| CliError::Io {
                path: addr.to_string().into(),
                source,
            })?;
        eprintln!("listening on http://{addr}");
        axum::serve(listener, router(state))
            .await
            .map_err(|source| CliError::Io {
                path: addr.to_string().into(),
                source,
            })
    })
}

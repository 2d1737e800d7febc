use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use pml::bisim::{equivalent_up_to_depth, p_bisimilar_with, BisimOptions, ConfigPoint};
use pml::checker::{check_sat, check_validity, truth_set, CheckReport, Verdict};
use pml::game::{admissible_sets, semi_kernels, solve, solve_with_limit, verify_duchet_meyniel, GamePosition, Player};
use pml::generators::{
    admissibility_formula, circuit_oracle, delta_n, fmp_formula, poison_validities, tiling_formula, torus_grid_model,
    win_formula, Tile, TileSet, TilingMode,
};
use pml::kripke::{load_model, model_spaces, save_model, KripkeModel, ModelGenSpec, StateId, StateSet};
use pml::syntax::{parse_pml, PmlFormula};
use pml::translate::{ht_translate, mt_translate, standard_translation, TranslationContext};

use crate::args::{
    BisimArgs, CheckArgs, Command, Format, GenCommand, Side, SolveArgs, Target, TranslateArgs, VerifyCommand,
};
use crate::{CliError, CliResult};

/// A command result in both renderings.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub json: Value,
    pub text: String,
}

impl Output {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Output {
            json,
            text: text.into(),
        }
    }

    /// JSON is pretty-printed with sorted keys.
    pub fn render(&self, format: Format) -> String {
        let mut out = match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("values serialize"),
            Format::Text => self.text.clone(),
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        out
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_model(path: &Path) -> CliResult<KripkeModel> {
    Ok(load_model(&read(path)?)?)
}

/// Formula text, or the contents of the file after `@`.
pub fn read_formula(arg: &str) -> CliResult<PmlFormula> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read(Path::new(path))?,
        None => arg.to_string(),
    };
    Ok(parse_pml(text.trim())?)
}

pub fn state_named(m: &KripkeModel, name: &str) -> CliResult<StateId> {
    m.state_by_name(name)
        .ok_or_else(|| pml::Error::InvalidArgument(format!("no state named {name:?}")).into())
}

pub fn names(m: &KripkeModel, set: StateSet) -> Vec<String> {
    set.iter().map(|s| m.name(s).to_string()).collect()
}

fn set_text(m: &KripkeModel, set: StateSet) -> String {
    format!("{{{}}}", names(m, set).join(", "))
}

fn model_json(m: &KripkeModel) -> Value {
    serde_json::from_str(&save_model(m)).expect("saved models are JSON")
}

pub fn run(command: Command) -> CliResult<Output> {
    match command {
        Command::Check(a) => check(a),
        Command::Solve(a) => solve_cmd(a),
        Command::Semikernels(a) => {
            let m = read_model(&a.model)?;
            sets_output(&m, semi_kernels(&m)?.kernels)
        }
        Command::Admissible(a) => {
            let m = read_model(&a.model)?;
            sets_output(&m, admissible_sets(&m)?)
        }
        Command::Bisim(a) => bisim(a),
        Command::Translate(a) => translate(a),
        Command::Gen { what } => generate(what),
        Command::Verify { what } => verify(what),
        Command::Serve(_) => Err(CliError::Usage("serve is not a batch command".into())),
    }
}

fn check(a: CheckArgs) -> CliResult<Output> {
    let f = read_formula(&a.formula)?;
    if let Some(path) = &a.model {
        let m = read_model(path)?;
        let truth = truth_set(&m, m.poison_bases(), &f)?;
        return Ok(match &a.state {
            Some(name) => {
                let holds = truth.contains(state_named(&m, name)?);
                Output::new(Value::Bool(holds), holds.to_string())
            }
            None => {
                let fails = truth.complement(m.state_count());
                Output::new(
                    json!({ "holds": names(&m, truth), "fails": names(&m, fails) }),
                    format!("holds at {}\nfails at {}", set_text(&m, truth), set_text(&m, fails)),
                )
            }
        });
    }
    if a.state.is_some() {
        return Err(CliError::Usage("--state needs --model".into()));
    }
    let relations = f.max_index().map_or(1, |i| i + 1);
    let spec = match a.seed {
        Some(seed) => ModelGenSpec::random(a.max_states, seed).budget(a.budget),
        None => ModelGenSpec::exhaustive(a.max_states).up_to(),
    }
    .relations(relations);
    let report = if a.sat {
        check_sat(&f, &spec)?
    } else {
        check_validity(&f, &spec)?
    };
    Ok(report_output(&report))
}

fn report_output(r: &CheckReport) -> Output {
    let explored = r.states_explored;
    match &r.verdict {
        Verdict::Countermodel { model, state } | Verdict::Satisfiable { model, state } => {
            let verdict = match r.verdict {
                Verdict::Countermodel { .. } => "countermodel",
                _ => "satisfiable",
            };
            Output::new(
                json!({
                    "verdict": verdict,
                    "model": model_json(model),
                    "state": model.name(*state),
                    "statesExplored": explored,
                }),
                format!(
                    "{verdict} at state {} after {explored} pointed models\n{}",
                    model.name(*state),
                    save_model(model).trim_end()
                ),
            )
        }
        Verdict::Exhausted { models } => Output::new(
            json!({ "verdict": "exhausted", "models": models, "statesExplored": explored }),
            format!("exhausted: none found in {models} models ({explored} pointed models)"),
        ),
    }
}

fn solve_cmd(a: SolveArgs) -> CliResult<Output> {
    let m = read_model(&a.model)?;
    let sol = solve_with_limit(&m, a.max_states)?;
    let per = sol.per_initial_node();
    let side = |p: Player| -> StateSet { per.iter().filter(|(_, &w)| w == p).map(|(&s, _)| s).collect() };
    let mut json = json!({
        "initial": per.iter().map(|(&s, w)| (m.name(s).to_string(), json!(w))).collect::<serde_json::Map<_, _>>(),
        "proponentWinning": names(&m, side(Player::Proponent)),
        "opponentWinning": names(&m, side(Player::Opponent)),
    });
    let mut text = String::new();
    for (&s, w) in &per {
        writeln!(text, "{}: {w}", m.name(s)).unwrap();
    }
    if a.strategies {
        let mut all = serde_json::Map::new();
        for player in [Player::Proponent, Player::Opponent] {
            let moves: Vec<Value> = sol
                .strategy(player)
                .into_iter()
                .map(|(p, v)| json!({ "position": position_json(&m, &p, None), "move": m.name(v) }))
                .collect();
            all.insert(player.to_string(), Value::Array(moves));
        }
        json["strategies"] = Value::Object(all);
    }
    Ok(Output::new(json, text))
}

/// `{token, poisoned, toMove, winner?}`; the token is null before the opening.
pub fn position_json(m: &KripkeModel, p: &GamePosition, winner: Option<Player>) -> Value {
    let mut v = json!({
        "token": p.started.then(|| m.name(p.token)),
        "poisoned": names(m, p.poisoned),
        "toMove": p.to_move,
    });
    if let Some(w) = winner {
        v["winner"] = json!(w);
    }
    v
}

fn sets_output(m: &KripkeModel, sets: Vec<StateSet>) -> CliResult<Output> {
    let json = Value::Array(sets.iter().map(|&s| json!(names(m, s))).collect());
    let text: Vec<String> = sets.iter().map(|&s| set_text(m, s)).collect();
    Ok(Output::new(json, text.join("\n")))
}

fn point_json(m: &KripkeModel, c: &ConfigPoint) -> Value {
    json!({
        "state": m.name(c.current),
        "poison": c.poison.iter().map(|&s| names(m, s)).collect::<Vec<_>>(),
    })
}

fn bisim(a: BisimArgs) -> CliResult<Output> {
    let m1 = read_model(&a.model)?;
    let m2 = match &a.against {
        Some(p) => read_model(p)?,
        None => m1.clone(),
    };
    let w1 = state_named(&m1, &a.state)?;
    let w2 = state_named(&m2, &a.against_state)?;
    if let Some(d) = a.depth {
        let eq = equivalent_up_to_depth(&m1, w1, &m2, w2, d)?;
        return Ok(Output::new(
            json!({ "equivalent": eq, "depth": d }),
            format!("{} up to depth {d}", if eq { "equivalent" } else { "distinguishable" }),
        ));
    }
    let opts = BisimOptions {
        multi_index: a.multi_index,
        ..BisimOptions::default()
    };
    let r = p_bisimilar_with(&m1, w1, &m2, w2, &opts)?;
    let mut json = json!({
        "bisimilar": r.bisimilar,
        "witness": r.witness.as_ref().map(|f| f.to_string()),
        "separatedAt": r.separated_at,
        "carrierSize": r.carrier_size,
    });
    if a.relation {
        json["relation"] = r
            .relation
            .iter()
            .map(|(x, y)| json!([point_json(&m1, x), point_json(&m2, y)]))
            .collect();
    }
    let text = match &r.witness {
        Some(f) => format!("not p-bisimilar; {f} holds on the left only"),
        None => format!("p-bisimilar ({} related pairs)", r.relation.len()),
    };
    Ok(Output::new(json, text))
}

fn translate(a: TranslateArgs) -> CliResult<Output> {
    let f = read_formula(&a.formula)?;
    let (target, out) = match a.to {
        Target::St => ("st", standard_translation(&f)?.to_string()),
        Target::Mt => ("mt", mt_translate(&f)?.to_string()),
        Target::Ht => ("ht", ht_translate(&f, &mut TranslationContext::new())?.to_string()),
    };
    Ok(Output::new(
        json!({ "formula": f.to_string(), "target": target, "translation": out }),
        out,
    ))
}

fn formula_output(f: PmlFormula) -> Output {
    let text = f.to_string();
    Output::new(json!({ "formula": text }), text)
}

fn read_tiles(path: &Path) -> CliResult<TileSet> {
    let tiles: Vec<Tile> =
        serde_json::from_str(&read(path)?).map_err(|e| pml::Error::InvalidArgument(format!("tile file: {e}")))?;
    Ok(TileSet::new(tiles)?)
}

fn generate(what: GenCommand) -> CliResult<Output> {
    Ok(match what {
        GenCommand::Delta { n } => formula_output(delta_n(n)?),
        GenCommand::Win { player, k } => {
            let p = match player {
                Side::Opponent => Player::Opponent,
                Side::Proponent => Player::Proponent,
            };
            formula_output(win_formula(p, k)?)
        }
        GenCommand::Admissibility => formula_output(admissibility_formula()),
        GenCommand::Fmp => formula_output(fmp_formula()),
        GenCommand::Validities { phi, psi } => {
            let vs = poison_validities(&read_formula(&phi)?, &read_formula(&psi)?);
            let text: Vec<String> = vs.iter().map(|v| format!("{}: {}", v.name, v.formula)).collect();
            Output::new(serde_json::to_value(&vs).expect("serializes"), text.join("\n"))
        }
        GenCommand::Tiling { tiles, verbatim } => {
            let mode = if verbatim {
                TilingMode::Verbatim
            } else {
                TilingMode::Corrected
            };
            formula_output(tiling_formula(&read_tiles(&tiles)?, mode))
        }
        GenCommand::Torus { tiles, k, grid } => {
            let tiles = read_tiles(&tiles)?;
            let grid: Vec<Vec<usize>> = match grid {
                Some(g) => serde_json::from_str(&g).map_err(|e| pml::Error::InvalidArgument(format!("grid: {e}")))?,
                None => vec![vec![0; k]; k],
            };
            let m = torus_grid_model(&tiles, &grid)?;
            Output::new(model_json(&m), save_model(&m))
        }
    })
}

fn graphs(max_states: usize) -> CliResult<Vec<KripkeModel>> {
    let spec = ModelGenSpec::exhaustive(max_states).up_to().atoms(Vec::<String>::new());
    Ok(model_spaces(&spec)?
        .iter()
        .flat_map(|s| s.iter().collect::<Vec<_>>())
        .collect())
}

fn verify(what: VerifyCommand) -> CliResult<Output> {
    match what {
        VerifyCommand::SemiKernels { max_states } => {
            let r = verify_duchet_meyniel(max_states)?;
            let text = format!(
                "{} graphs, {} winnable, {} with a semi-kernel, {} violations",
                r.graphs,
                r.proponent_winnable,
                r.with_semi_kernel,
                r.violations.len()
            );
            let mut json = serde_json::to_value(&r).expect("serializes");
            json["holds"] = json!(r.holds());
            Ok(Output::new(json, text))
        }
        VerifyCommand::Validities { max_states } => {
            let spec = ModelGenSpec::exhaustive(max_states).up_to().atoms(["p"]);
            let instances = ["p", "#p", "~#p", "<>#p", "[#]#p", "<#>~#p", "[]<>p"];
            let mut failures = Vec::new();
            let mut checked = 0;
            for phi in instances {
                for psi in instances {
                    let (phi, psi) = (parse_pml(phi)?, parse_pml(psi)?);
                    for v in poison_validities(&phi, &psi) {
                        checked += 1;
                        let r = check_validity(&v.formula, &spec)?;
                        if !matches!(r.verdict, Verdict::Exhausted { .. }) {
                            failures.push(json!({
                                "name": v.name,
                                "formula": v.formula.to_string(),
                                "report": report_output(&r).json,
                            }));
                        }
                    }
                }
            }
            let text = format!("{checked} instances, {} failures", failures.len());
            Ok(Output::new(
                json!({ "instances": checked, "failures": failures, "holds": failures.is_empty() }),
                text,
            ))
        }
        VerifyCommand::Circuits { max_states, depth } => {
            let mut disagreements = Vec::new();
            let all = graphs(max_states)?;
            for m in &all {
                for n in 1..=depth {
                    let f = delta_n(n)?.poison_diamond();
                    let by_formula = !truth_set(m, m.poison_bases(), &f)?.is_empty();
                    let by_walks = m
                        .states()
                        .any(|v| circuit_oracle(m, v, n) && !m.predecessors(0, v).is_empty());
                    if by_formula != by_walks {
                        disagreements.push(json!({ "model": model_json(m), "n": n }));
                    }
                }
            }
            let text = format!("{} models, {} disagreements", all.len(), disagreements.len());
            Ok(Output::new(
                json!({ "models": all.len(), "disagreements": disagreements, "holds": disagreements.is_empty() }),
                text,
            ))
        }
        VerifyCommand::Winning { max_states, k } => {
            let mut nodes = 0u64;
            let mut mismatches = Vec::new();
            for m in graphs(max_states)? {
                let n = m.state_count();
                let k = k.unwrap_or((1 << n) * n);
                let sol = solve(&m)?;
                let truth = truth_set(&m, m.poison_bases(), &win_formula(Player::Opponent, k)?)?;
                for w in m.states() {
                    nodes += 1;
                    let by_solver = sol.initial_winner(w) == Player::Opponent;
                    if truth.contains(w) != by_solver {
                        mismatches.push(json!({
                            "model": model_json(&m),
                            "state": m.name(w),
                            "solver": sol.initial_winner(w),
                        }));
                    }
                }
            }
            let text = format!("{nodes} initial nodes, {} mismatches", mismatches.len());
            Ok(Output::new(
                json!({ "nodes": nodes, "mismatches": mismatches, "holds": mismatches.is_empty() }),
                text,
            ))
        }
        VerifyCommand::Fmp { max_states } => {
            let spec = ModelGenSpec::exhaustive(max_states).up_to().atoms(["q"]);
            let r = check_sat(&fmp_formula(), &spec)?;
            let mut out = report_output(&r);
            out.json["holds"] = json!(matches!(r.verdict, Verdict::Exhausted { .. }));
            Ok(out)
        }
    }
}

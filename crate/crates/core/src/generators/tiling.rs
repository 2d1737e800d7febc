use serde::{Deserialize, Serialize};

use crate::kripke::{KripkeModel, ModalIndex, StateSet};
use crate::syntax::PmlFormula;
use crate::{Error, Result};

type F = PmlFormula;

/// The grid relation linking the centre to every cell, and the two grid moves.
const R: ModalIndex = 0;
const VERTICAL: ModalIndex = 1;
const HORIZONTAL: ModalIndex = 2;

pub type ColorId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tile {
    pub top: ColorId,
    pub right: ColorId,
    pub bottom: ColorId,
    pub left: ColorId,
}

impl Tile {
    pub fn new(top: ColorId, right: ColorId, bottom: ColorId, left: ColorId) -> Self {
        Tile {
            top,
            right,
            bottom,
            left,
        }
    }

    pub fn uniform(c: ColorId) -> Self {
        Tile::new(c, c, c, c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Tile>", into = "Vec<Tile>")]
pub struct TileSet {
    tiles: Vec<Tile>,
}

impl TileSet {
    pub fn new(tiles: Vec<Tile>) -> Result<Self> {
        if tiles.is_empty() {
            return Err(Error::InvalidArgument("a tile set needs at least one tile".into()));
        }
        Ok(TileSet { tiles })
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Atom marking cells that carry tile `t` (zero-based): `p_t1`, `p_t2`, ...
    pub fn atom(t: usize) -> String {
        format!("p_t{}", t + 1)
    }
}

impl TryFrom<Vec<Tile>> for TileSet {
    type Error = Error;

    fn try_from(tiles: Vec<Tile>) -> Result<Self> {
        TileSet::new(tiles)
    }
}

impl From<TileSet> for Vec<Tile> {
    fn from(t: TileSet) -> Self {
        t.tiles
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TilingMode {
    /// Each `𝔭` reads the poison atom of its innermost poison modality, and the
    /// adjacency disjunctions range over `p_{t'}`.
    #[default]
    Corrected,
    /// The construction as printed: every `𝔭` is the default poison atom and
    /// the adjacency disjunctions repeat `p_t`.
    Verbatim,
}

/// φ_T = α ∧ β ∧ γ ∧ □(δ¹ ∧ δ² ∧ δ³) over relations R (index 0), vertical
/// R₁ (1) and horizontal R₂ (2).
pub fn tiling_formula(tiles: &TileSet, mode: TilingMode) -> PmlFormula {
    let q = || F::atom("q");
    let poison = |i: ModalIndex| match mode {
        TilingMode::Corrected => F::PoisonAtom(i),
        TilingMode::Verbatim => F::poison(),
    };

    let back_to_poison = |i| q().and(poison(i).diamond()).diamond();
    let alpha = F::conjunction([
        q(),
        q().not().and(q().diamond()).boxed(),
        back_to_poison(VERTICAL).poison_box_i(VERTICAL).boxed(),
        back_to_poison(HORIZONTAL).poison_box_i(HORIZONTAL).boxed(),
    ]);

    let beta = F::conjunction([VERTICAL, HORIZONTAL].map(|i| {
        let functional = poison(R).diamond_i(i).implies(poison(R).box_i(i)).boxed();
        F::True
            .diamond_i(i)
            .boxed()
            .and(q().implies(functional).boxed().poison_box())
    }));

    let commute = poison(R)
        .not()
        .box_i(HORIZONTAL)
        .box_i(VERTICAL)
        .or(poison(R).box_i(VERTICAL).box_i(HORIZONTAL));
    let gamma = q().implies(commute.boxed()).boxed().poison_box();

    let t = tiles.tiles();
    let p = |k: usize| F::atom(TileSet::atom(k));
    let delta1 =
        F::disjunction((0..t.len()).map(|k| {
            F::conjunction(std::iter::once(p(k)).chain((0..t.len()).filter(|&j| j != k).map(|j| p(j).not())))
        }));
    let adjacency = |step: ModalIndex, fits: &dyn Fn(&Tile, &Tile) -> bool| {
        F::conjunction((0..t.len()).map(|k| {
            let next = F::disjunction((0..t.len()).filter(|&j| fits(&t[k], &t[j])).map(|j| match mode {
                TilingMode::Corrected => p(j),
                TilingMode::Verbatim => p(k),
            }));
            p(k).implies(next.box_i(step))
        }))
    };
    let delta2 = adjacency(HORIZONTAL, &|a, b| b.left == a.right);
    let delta3 = adjacency(VERTICAL, &|a, b| b.bottom == a.top);

    F::conjunction([alpha, beta, gamma, F::conjunction([delta1, delta2, delta3]).boxed()])
}

/// A k×k torus realizing the grid: state `w` (labelled `q`) is R-linked both
/// ways to every cell, R₁ moves one row down and R₂ one column right, both
/// wrapping. `tiling[r][c]` is the zero-based tile index of cell (r, c).
pub fn torus_grid_model(tiles: &TileSet, tiling: &[Vec<usize>]) -> Result<KripkeModel> {
    let k = tiling.len();
    if k == 0 || tiling.iter().any(|row| row.len() != k) {
        return Err(Error::InvalidArgument(
            "the tiling must be a nonempty square grid".into(),
        ));
    }
    if let Some(&bad) = tiling.iter().flatten().find(|&&t| t >= tiles.len()) {
        return Err(Error::InvalidArgument(format!(
            "tile index {bad} out of range for {} tiles",
            tiles.len()
        )));
    }
    let cell = |r: usize, c: usize| 1 + r * k + c;
    let mut names = vec!["w".to_string()];
    for r in 0..k {
        for c in 0..k {
            names.push(format!("c{r}_{c}"));
        }
    }
    let mut m = KripkeModel::with_names(names, 3)?;
    m.set_atom("q", StateSet::singleton(0))?;
    let mut atoms = vec![StateSet::EMPTY; tiles.len()];
    for r in 0..k {
        for c in 0..k {
            let s = cell(r, c);
            m.add_edge(R, 0, s)?;
            m.add_edge(R, s, 0)?;
            m.add_edge(VERTICAL, s, cell((r + 1) % k, c))?;
            m.add_edge(HORIZONTAL, s, cell(r, (c + 1) % k))?;
            atoms[tiling[r][c]].insert(s);
        }
    }
    for (t, set) in atoms.into_iter().enumerate() {
        m.set_atom(TileSet::atom(t), set)?;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::eval_pml;
    use crate::kripke::Configuration;

    fn at_w(m: &KripkeModel, f: &PmlFormula) -> bool {
        eval_pml(&Configuration::initial(m, 0).unwrap(), f).unwrap()
    }

    #[test]
    fn delta_one_for_two_tiles() {
        let t = TileSet::new(vec![Tile::uniform(0), Tile::uniform(1)]).unwrap();
        let f = tiling_formula(&t, TilingMode::Corrected);
        let PmlFormula::And(_, cells) = &f else { panic!() };
        let PmlFormula::Box(_, body) = cells.as_ref() else {
            panic!()
        };
        let PmlFormula::And(left, _) = body.as_ref() else {
            panic!()
        };
        let PmlFormula::And(delta1, _) = left.as_ref() else {
            panic!()
        };
        assert_eq!(
            **delta1,
            crate::syntax::parse_pml("(p_t1 & ~p_t2) | (p_t2 & ~p_t1)").unwrap()
        );
    }

    #[test]
    fn torus_shape() {
        let t = TileSet::new(vec![Tile::uniform(0)]).unwrap();
        let m = torus_grid_model(&t, &[vec![0]]).unwrap();
        assert_eq!(m.state_count(), 2);
        assert!(m.has_edge(1, 1, 1) && m.has_edge(2, 1, 1));
        let m = torus_grid_model(&t, &[vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(m.state_count(), 5);
        for s in 1..5 {
            assert_eq!(m.successors(1, s).len(), 1);
            assert_eq!(m.successors(2, s).len(), 1);
        }
        assert!(torus_grid_model(&t, &[vec![1]]).is_err());
    }

    #[test]
    fn uniform_tile_tiles_the_torus() {
        let t = TileSet::new(vec![Tile::uniform(0)]).unwrap();
        let f = tiling_formula(&t, TilingMode::Corrected);
        for k in 1..=3 {
            let m = torus_grid_model(&t, &vec![vec![0; k]; k]).unwrap();
            assert!(at_w(&m, &f), "{k}x{k}");
        }
    }

    #[test]
    fn vertical_mismatch_fails() {
        let t = TileSet::new(vec![Tile::new(0, 0, 1, 0)]).unwrap();
        let f = tiling_formula(&t, TilingMode::Corrected);
        let m = torus_grid_model(&t, &[vec![0, 0], vec![0, 0]]).unwrap();
        assert!(!at_w(&m, &f));
    }
}

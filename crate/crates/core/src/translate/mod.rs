//! Truth-preserving translations of PML into first-order logic (ST), memory
//! logic (MT) and hybrid logic with `↓` (HT), and the hybrid extension of a
//! model.

use std::collections::BTreeMap;

use crate::checker::HybridModel;
use crate::kripke::{KripkeModel, ModalIndex};
use crate::syntax::{FolFormula, HybridFormula, MemoryFormula, Nominal, PmlFormula, StateVar, Var};
use crate::{Error, Result};

/// Variables bound to poisoned states and the supply of fresh variables.
///
/// `poisoned` plays the role of N for ST (tagged with the poison index that
/// introduced each variable); `binders` is S for HT. The counter only grows,
/// so no variable is handed out twice.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TranslationContext {
    pub poisoned: Vec<(ModalIndex, Var)>,
    pub binders: Vec<StateVar>,
    fresh: u32,
}

impl TranslationContext {
    pub fn new() -> Self {
        Self::default()
    }

    /// A context whose N already holds `vars` (all for index 0). Fresh
    /// variables start above them.
    pub fn with_poisoned(vars: impl IntoIterator<Item = Var>) -> Self {
        let poisoned: Vec<_> = vars.into_iter().map(|v| (0, v)).collect();
        let fresh = poisoned.iter().map(|(_, v)| v.0).max().unwrap_or(0);
        TranslationContext {
            poisoned,
            binders: Vec::new(),
            fresh,
        }
    }

    fn fresh_var(&mut self, avoid: Var) -> Var {
        self.fresh += 1;
        if self.fresh == avoid.0 {
            self.fresh += 1;
        }
        Var(self.fresh)
    }

    fn fresh_binder(&mut self) -> StateVar {
        self.fresh += 1;
        StateVar(self.fresh)
    }
}

fn unsupported_universal() -> Error {
    Error::Unsupported("the universal modality has no translation".into())
}

/// ST^N_x(φ), with N taken from `ctx.poisoned`.
pub fn st_translate(phi: &PmlFormula, ctx: &mut TranslationContext, x: Var) -> Result<FolFormula> {
    use PmlFormula as F;
    let rec = |f: &PmlFormula, ctx: &mut TranslationContext| st_translate(f, ctx, x);
    Ok(match phi {
        F::Atom(p) => FolFormula::Pred(p.clone(), x),
        F::PoisonAtom(i) => {
            let eqs = ctx
                .poisoned
                .iter()
                .filter(|(j, _)| j == i)
                .map(|&(_, y)| FolFormula::Eq(y, x))
                .reduce(FolFormula::or)
                .unwrap_or(FolFormula::False);
            FolFormula::Poison(*i, x).or(eqs)
        }
        F::True => FolFormula::True,
        F::False => FolFormula::False,
        F::Not(a) => rec(a, ctx)?.not(),
        F::And(a, b) => rec(a, ctx)?.and(rec(b, ctx)?),
        F::Or(a, b) => rec(a, ctx)?.or(rec(b, ctx)?),
        F::Implies(a, b) => rec(a, ctx)?.implies(rec(b, ctx)?),
        F::Iff(a, b) => rec(a, ctx)?.iff(rec(b, ctx)?),
        F::Diamond(i, a) | F::Box(i, a) | F::PoisonDiamond(i, a) | F::PoisonBox(i, a) => {
            let y = ctx.fresh_var(x);
            let poisons = matches!(phi, F::PoisonDiamond(..) | F::PoisonBox(..));
            if poisons {
                ctx.poisoned.push((*i, y));
            }
            let body = st_translate(a, ctx, y);
            if poisons {
                ctx.poisoned.pop();
            }
            let guard = FolFormula::Rel(*i, x, y);
            match phi {
                F::Diamond(..) | F::PoisonDiamond(..) => FolFormula::exists(y, guard.and(body?)),
                _ => FolFormula::forall(y, guard.implies(body?)),
            }
        }
        F::UDiamond(_) | F::UBox(_) => return Err(unsupported_universal()),
    })
}

/// ST^∅_x(φ): a formula with the single free variable `x`.
pub fn standard_translation(phi: &PmlFormula) -> Result<FolFormula> {
    st_translate(phi, &mut TranslationContext::new(), Var::X)
}

fn single_index(i: ModalIndex) -> Result<()> {
    if i == 0 {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "modal index {} has no counterpart in a single-relation target logic",
            i + 1
        )))
    }
}

/// MT(φ): `𝔭` becomes `(k)` and `◆` becomes `◇(r)`.
pub fn mt_translate(phi: &PmlFormula) -> Result<MemoryFormula> {
    use MemoryFormula as M;
    use PmlFormula as F;
    let b = |f: &PmlFormula| mt_translate(f).map(Box::new);
    Ok(match phi {
        F::Atom(p) => M::Atom(p.clone()),
        F::PoisonAtom(i) => {
            single_index(*i)?;
            M::Known
        }
        F::True => M::True,
        F::False => M::False,
        F::Not(a) => M::Not(b(a)?),
        F::And(x, y) => M::And(b(x)?, b(y)?),
        F::Or(x, y) => M::Or(b(x)?, b(y)?),
        F::Implies(x, y) => M::Implies(b(x)?, b(y)?),
        F::Iff(x, y) => M::Iff(b(x)?, b(y)?),
        F::Diamond(i, a) => {
            single_index(*i)?;
            M::Diamond(b(a)?)
        }
        F::Box(i, a) => {
            single_index(*i)?;
            M::Box(b(a)?)
        }
        F::PoisonDiamond(i, a) => {
            single_index(*i)?;
            mt_translate(a)?.remember().diamond()
        }
        F::PoisonBox(i, a) => {
            single_index(*i)?;
            mt_translate(a)?.remember().boxed()
        }
        F::UDiamond(_) | F::UBox(_) => return Err(unsupported_universal()),
    })
}

/// HT^S(φ) with S taken from `ctx.binders`: each `◆` binds a fresh variable
/// naming the poisoned state, and `𝔭` tests the bound variables.
pub fn ht_translate(phi: &PmlFormula, ctx: &mut TranslationContext) -> Result<HybridFormula> {
    use HybridFormula as H;
    use PmlFormula as F;
    let mut b = |f: &PmlFormula| ht_translate(f, ctx).map(Box::new);
    Ok(match phi {
        F::Atom(p) => H::Atom(p.clone()),
        F::PoisonAtom(i) => {
            single_index(*i)?;
            let vars = ctx.binders.iter().map(|&x| H::Var(x)).reduce(H::or).unwrap_or(H::False);
            H::PoisonAtom(0).or(vars)
        }
        F::True => H::True,
        F::False => H::False,
        F::Not(a) => H::Not(b(a)?),
        F::And(x, y) => H::And(b(x)?, b(y)?),
        F::Or(x, y) => H::Or(b(x)?, b(y)?),
        F::Implies(x, y) => H::Implies(b(x)?, b(y)?),
        F::Iff(x, y) => H::Iff(b(x)?, b(y)?),
        F::Diamond(i, a) => {
            single_index(*i)?;
            H::Diamond(b(a)?)
        }
        F::Box(i, a) => {
            single_index(*i)?;
            H::Box(b(a)?)
        }
        F::PoisonDiamond(i, a) | F::PoisonBox(i, a) => {
            single_index(*i)?;
            let x = ctx.fresh_binder();
            ctx.binders.push(x);
            let body = ht_translate(a, ctx);
            ctx.binders.pop();
            let bound = H::bind(x, body?);
            if matches!(phi, F::PoisonDiamond(..)) {
                bound.diamond()
            } else {
                bound.boxed()
            }
        }
        F::UDiamond(_) | F::UBox(_) => return Err(unsupported_universal()),
    })
}

/// Adds one nominal `i_<name>` per state, denoting exactly that state.
pub fn hybrid_extension(m: &KripkeModel) -> HybridModel {
    let nominals: BTreeMap<Nominal, usize> = m.states().map(|s| (Nominal(format!("i_{}", m.name(s))), s)).collect();
    HybridModel {
        base: m.clone(),
        nominals,
        assignment: BTreeMap::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_pml;

    fn st(text: &str) -> String {
        standard_translation(&parse_pml(text).unwrap()).unwrap().to_string()
    }

    #[test]
    fn st_clauses() {
        assert_eq!(st("p"), "P_p(x)");
        assert_eq!(st("#p"), "(Poison(x) | false)");
        assert_eq!(st("<#>#p"), "(exists y1. (R(x,y1) & (Poison(y1) | (y1 = y1))))");
        assert_eq!(st("[]q"), "(forall y1. (R(x,y1) -> P_q(y1)))");
    }

    #[test]
    fn st_has_one_free_variable() {
        let f = standard_translation(&parse_pml("<#>(<>#p & [#]<#>#p)").unwrap()).unwrap();
        assert_eq!(f.free_vars().into_iter().collect::<Vec<_>>(), vec![Var::X]);
    }

    #[test]
    fn universal_modality_is_rejected() {
        let f = parse_pml("[U]p").unwrap();
        assert!(matches!(standard_translation(&f), Err(Error::Unsupported(_))));
        assert!(matches!(mt_translate(&f), Err(Error::Unsupported(_))));
        assert!(matches!(
            ht_translate(&f, &mut TranslationContext::new()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn mt_clauses() {
        let mt = |t: &str| mt_translate(&parse_pml(t).unwrap()).unwrap().to_string();
        assert_eq!(mt("#p"), "(k)");
        assert_eq!(mt("<>p"), "<>p");
        assert_eq!(mt("<#>[]#p"), "<>(r)[](k)");
    }

    #[test]
    fn ht_clauses() {
        let ht = |t: &str| {
            ht_translate(&parse_pml(t).unwrap(), &mut TranslationContext::new())
                .unwrap()
                .to_string()
        };
        assert_eq!(ht("#p"), "(#p | false)");
        assert_eq!(ht("<#>#p"), "<>(down x1. (#p | x1))");
        let two = ht_translate(&parse_pml("<#><#>p").unwrap(), &mut TranslationContext::new()).unwrap();
        let binders = two.binders();
        assert_eq!(binders.len(), 2);
        assert_ne!(binders[0], binders[1]);
    }

    #[test]
    fn hybrid_extension_is_a_bijection() {
        let m = crate::fixtures::attack_graph();
        let h = hybrid_extension(&m);
        assert_eq!(h.nominals.len(), 6);
        let mut targets: Vec<_> = h.nominals.values().copied().collect();
        targets.sort();
        assert_eq!(targets, (0..6).collect::<Vec<_>>());
        assert_eq!(h.base, m);
    }
}

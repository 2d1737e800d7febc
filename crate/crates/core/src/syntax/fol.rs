use std::collections::BTreeSet;
use std::fmt;

use crate::kripke::ModalIndex;

/// First-order variable. `Var(0)` is the designated variable `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub u32);

impl Var {
    pub const X: Var = Var(0);
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            write!(f, "x")
        } else {
            write!(f, "y{}", self.0)
        }
    }
}

/// The binary fragment of first-order logic with equality: one binary relation
/// symbol per modality index, one unary predicate per atom and per poison atom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FolFormula {
    True,
    False,
    /// `P(x)` for the ordinary atom `p`.
    Pred(String, Var),
    /// `𝔓ᵢ(x)`.
    Poison(ModalIndex, Var),
    /// `x Rᵢ y`.
    Rel(ModalIndex, Var, Var),
    Eq(Var, Var),
    Not(Box<FolFormula>),
    And(Box<FolFormula>, Box<FolFormula>),
    Or(Box<FolFormula>, Box<FolFormula>),
    Implies(Box<FolFormula>, Box<FolFormula>),
    Iff(Box<FolFormula>, Box<FolFormula>),
    Exists(Var, Box<FolFormula>),
    Forall(Var, Box<FolFormula>),
}

impl FolFormula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        FolFormula::Not(Box::new(self))
    }

    pub fn and(self, rhs: FolFormula) -> Self {
        FolFormula::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: FolFormula) -> Self {
        FolFormula::Or(Box::new(self), Box::new(rhs))
    }

    pub fn implies(self, rhs: FolFormula) -> Self {
        FolFormula::Implies(Box::new(self), Box::new(rhs))
    }

    pub fn iff(self, rhs: FolFormula) -> Self {
        FolFormula::Iff(Box::new(self), Box::new(rhs))
    }

    pub fn exists(v: Var, body: FolFormula) -> Self {
        FolFormula::Exists(v, Box::new(body))
    }

    pub fn forall(v: Var, body: FolFormula) -> Self {
        FolFormula::Forall(v, Box::new(body))
    }

    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<Var>, out: &mut BTreeSet<Var>) {
        let mut note = |v: &Var, bound: &Vec<Var>| {
            if !bound.contains(v) {
                out.insert(*v);
            }
        };
        match self {
            FolFormula::True | FolFormula::False => {}
            FolFormula::Pred(_, v) | FolFormula::Poison(_, v) => note(v, bound),
            FolFormula::Rel(_, a, b) | FolFormula::Eq(a, b) => {
                note(a, bound);
                note(b, bound);
            }
            FolFormula::Not(a) => a.collect_free(bound, out),
            FolFormula::And(a, b) | FolFormula::Or(a, b) | FolFormula::Implies(a, b) | FolFormula::Iff(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            FolFormula::Exists(v, body) | FolFormula::Forall(v, body) => {
                bound.push(*v);
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Quantifier nesting depth.
    pub fn quantifier_depth(&self) -> usize {
        match self {
            FolFormula::Exists(_, b) | FolFormula::Forall(_, b) => 1 + b.quantifier_depth(),
            FolFormula::Not(a) => a.quantifier_depth(),
            FolFormula::And(a, b) | FolFormula::Or(a, b) | FolFormula::Implies(a, b) | FolFormula::Iff(a, b) => {
                a.quantifier_depth().max(b.quantifier_depth())
            }
            _ => 0,
        }
    }
}

fn rel_name(i: ModalIndex) -> String {
    if i == 0 {
        "R".into()
    } else {
        format!("R_{}", i + 1)
    }
}

/// Fully parenthesised: every connective and quantifier is wrapped.
impl fmt::Display for FolFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FolFormula::True => write!(f, "true"),
            FolFormula::False => write!(f, "false"),
            FolFormula::Pred(p, v) => write!(f, "P_{p}({v})"),
            FolFormula::Poison(0, v) => write!(f, "Poison({v})"),
            FolFormula::Poison(i, v) => write!(f, "Poison_{}({v})", i + 1),
            FolFormula::Rel(i, a, b) => write!(f, "{}({a},{b})", rel_name(*i)),
            FolFormula::Eq(a, b) => write!(f, "({a} = {b})"),
            FolFormula::Not(a) => write!(f, "~{a}"),
            FolFormula::And(a, b) => write!(f, "({a} & {b})"),
            FolFormula::Or(a, b) => write!(f, "({a} | {b})"),
            FolFormula::Implies(a, b) => write!(f, "({a} -> {b})"),
            FolFormula::Iff(a, b) => write!(f, "({a} <-> {b})"),
            FolFormula::Exists(v, b) => write!(f, "(exists {v}. {b})"),
            FolFormula::Forall(v, b) => write!(f, "(forall {v}. {b})"),
        }
    }
}

use std::fmt;

use crate::kripke::ModalIndex;

/// A nominal: a name denoting exactly one state.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Nominal(pub String);

impl fmt::Display for Nominal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A state variable bound by `↓`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateVar(pub u32);

impl fmt::Display for StateVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// Formulas of hybrid logic with the `↓` binder.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HybridFormula {
    Atom(String),
    PoisonAtom(ModalIndex),
    Nominal(Nominal),
    Var(StateVar),
    True,
    False,
    Not(Box<HybridFormula>),
    And(Box<HybridFormula>, Box<HybridFormula>),
    Or(Box<HybridFormula>, Box<HybridFormula>),
    Implies(Box<HybridFormula>, Box<HybridFormula>),
    Iff(Box<HybridFormula>, Box<HybridFormula>),
    Diamond(Box<HybridFormula>),
    Box(Box<HybridFormula>),
    /// `↓x.φ`: names the current state `x` inside `φ`.
    Bind(StateVar, Box<HybridFormula>),
}

impl HybridFormula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        HybridFormula::Not(Box::new(self))
    }

    pub fn or(self, rhs: HybridFormula) -> Self {
        HybridFormula::Or(Box::new(self), Box::new(rhs))
    }

    pub fn diamond(self) -> Self {
        HybridFormula::Diamond(Box::new(self))
    }

    pub fn boxed(self) -> Self {
        HybridFormula::Box(Box::new(self))
    }

    pub fn bind(x: StateVar, body: HybridFormula) -> Self {
        HybridFormula::Bind(x, Box::new(body))
    }

    /// Binder variables in order of occurrence.
    pub fn binders(&self) -> Vec<StateVar> {
        let mut out = Vec::new();
        self.collect_binders(&mut out);
        out
    }

    fn collect_binders(&self, out: &mut Vec<StateVar>) {
        match self {
            HybridFormula::Bind(x, b) => {
                out.push(*x);
                b.collect_binders(out);
            }
            HybridFormula::Not(a) | HybridFormula::Diamond(a) | HybridFormula::Box(a) => a.collect_binders(out),
            HybridFormula::And(a, b)
            | HybridFormula::Or(a, b)
            | HybridFormula::Implies(a, b)
            | HybridFormula::Iff(a, b) => {
                a.collect_binders(out);
                b.collect_binders(out);
            }
            _ => {}
        }
    }
}

impl fmt::Display for HybridFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HybridFormula::Atom(a) => write!(f, "{a}"),
            HybridFormula::PoisonAtom(0) => write!(f, "#p"),
            HybridFormula::PoisonAtom(i) => write!(f, "#p_{}", i + 1),
            HybridFormula::Nominal(n) => write!(f, "@{n}"),
            HybridFormula::Var(x) => write!(f, "{x}"),
            HybridFormula::True => write!(f, "true"),
            HybridFormula::False => write!(f, "false"),
            HybridFormula::Not(a) => write!(f, "~{a}"),
            HybridFormula::And(a, b) => write!(f, "({a} & {b})"),
            HybridFormula::Or(a, b) => write!(f, "({a} | {b})"),
            HybridFormula::Implies(a, b) => write!(f, "({a} -> {b})"),
            HybridFormula::Iff(a, b) => write!(f, "({a} <-> {b})"),
            HybridFormula::Diamond(a) => write!(f, "<>{a}"),
            HybridFormula::Box(a) => write!(f, "[]{a}"),
            HybridFormula::Bind(x, b) => write!(f, "(down {x}. {b})"),
        }
    }
}

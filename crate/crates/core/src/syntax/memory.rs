use std::fmt;

/// Formulas of the memory logic with remember `(r)` and known `(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MemoryFormula {
    Atom(String),
    True,
    False,
    Not(Box<MemoryFormula>),
    And(Box<MemoryFormula>, Box<MemoryFormula>),
    Or(Box<MemoryFormula>, Box<MemoryFormula>),
    Implies(Box<MemoryFormula>, Box<MemoryFormula>),
    Iff(Box<MemoryFormula>, Box<MemoryFormula>),
    Diamond(Box<MemoryFormula>),
    Box(Box<MemoryFormula>),
    /// Stores the current state, then evaluates the body.
    Remember(Box<MemoryFormula>),
    /// Holds iff the current state is stored.
    Known,
}

impl MemoryFormula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        MemoryFormula::Not(Box::new(self))
    }

    pub fn diamond(self) -> Self {
        MemoryFormula::Diamond(Box::new(self))
    }

    pub fn boxed(self) -> Self {
        MemoryFormula::Box(Box::new(self))
    }

    pub fn remember(self) -> Self {
        MemoryFormula::Remember(Box::new(self))
    }
}

impl fmt::Display for MemoryFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MemoryFormula::Atom(a) => write!(f, "{a}"),
            MemoryFormula::True => write!(f, "true"),
            MemoryFormula::False => write!(f, "false"),
            MemoryFormula::Not(a) => write!(f, "~{a}"),
            MemoryFormula::And(a, b) => write!(f, "({a} & {b})"),
            MemoryFormula::Or(a, b) => write!(f, "({a} | {b})"),
            MemoryFormula::Implies(a, b) => write!(f, "({a} -> {b})"),
            MemoryFormula::Iff(a, b) => write!(f, "({a} <-> {b})"),
            MemoryFormula::Diamond(a) => write!(f, "<>{a}"),
            MemoryFormula::Box(a) => write!(f, "[]{a}"),
            MemoryFormula::Remember(a) => write!(f, "(r){a}"),
            MemoryFormula::Known => write!(f, "(k)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_remember_and_known() {
        let f = MemoryFormula::Known.diamond().diamond().remember();
        assert_eq!(f.to_string(), "(r)<><>(k)");
    }
}

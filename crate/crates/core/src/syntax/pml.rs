use std::collections::BTreeSet;

use crate::kripke::ModalIndex;

/// Formulas of the poison modal language with `n` modality pairs and the
/// universal modality.
///
/// Indices are zero-based; the concrete syntax prints them one-based.
/// `Or`, `Implies`, `Iff`, `False` and the boxes are kept as written so the
/// printer can reproduce them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PmlFormula {
    Atom(String),
    PoisonAtom(ModalIndex),
    True,
    False,
    Not(Box<PmlFormula>),
    And(Box<PmlFormula>, Box<PmlFormula>),
    Or(Box<PmlFormula>, Box<PmlFormula>),
    Implies(Box<PmlFormula>, Box<PmlFormula>),
    Iff(Box<PmlFormula>, Box<PmlFormula>),
    Diamond(ModalIndex, Box<PmlFormula>),
    Box(ModalIndex, Box<PmlFormula>),
    PoisonDiamond(ModalIndex, Box<PmlFormula>),
    PoisonBox(ModalIndex, Box<PmlFormula>),
    UDiamond(Box<PmlFormula>),
    UBox(Box<PmlFormula>),
}

use PmlFormula as F;

/// Short constructors; the AST is verbose to build by hand otherwise.
impl PmlFormula {
    pub fn atom(name: impl Into<String>) -> Self {
        F::Atom(name.into())
    }

    /// The poison atom of the default pair.
    pub fn poison() -> Self {
        F::PoisonAtom(0)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        F::Not(Box::new(self))
    }

    pub fn and(self, rhs: PmlFormula) -> Self {
        F::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: PmlFormula) -> Self {
        F::Or(Box::new(self), Box::new(rhs))
    }

    pub fn implies(self, rhs: PmlFormula) -> Self {
        F::Implies(Box::new(self), Box::new(rhs))
    }

    pub fn iff(self, rhs: PmlFormula) -> Self {
        F::Iff(Box::new(self), Box::new(rhs))
    }

    pub fn diamond(self) -> Self {
        F::Diamond(0, Box::new(self))
    }

    pub fn boxed(self) -> Self {
        F::Box(0, Box::new(self))
    }

    pub fn poison_diamond(self) -> Self {
        F::PoisonDiamond(0, Box::new(self))
    }

    pub fn poison_box(self) -> Self {
        F::PoisonBox(0, Box::new(self))
    }

    pub fn diamond_i(self, i: ModalIndex) -> Self {
        F::Diamond(i, Box::new(self))
    }

    pub fn box_i(self, i: ModalIndex) -> Self {
        F::Box(i, Box::new(self))
    }

    pub fn poison_diamond_i(self, i: ModalIndex) -> Self {
        F::PoisonDiamond(i, Box::new(self))
    }

    pub fn poison_box_i(self, i: ModalIndex) -> Self {
        F::PoisonBox(i, Box::new(self))
    }

    pub fn u_diamond(self) -> Self {
        F::UDiamond(Box::new(self))
    }

    pub fn u_box(self) -> Self {
        F::UBox(Box::new(self))
    }

    /// Left-nested conjunction; `True` when empty.
    pub fn conjunction<I: IntoIterator<Item = PmlFormula>>(items: I) -> Self {
        items.into_iter().reduce(F::and).unwrap_or(F::True)
    }

    /// Left-nested disjunction; `False` when empty.
    pub fn disjunction<I: IntoIterator<Item = PmlFormula>>(items: I) -> Self {
        items.into_iter().reduce(F::or).unwrap_or(F::False)
    }

    /// Immediate subformulas.
    pub fn children(&self) -> Vec<&PmlFormula> {
        match self {
            F::Atom(_) | F::PoisonAtom(_) | F::True | F::False => vec![],
            F::Not(a)
            | F::Diamond(_, a)
            | F::Box(_, a)
            | F::PoisonDiamond(_, a)
            | F::PoisonBox(_, a)
            | F::UDiamond(a)
            | F::UBox(a) => vec![a],
            F::And(a, b) | F::Or(a, b) | F::Implies(a, b) | F::Iff(a, b) => vec![a, b],
        }
    }

    /// Nesting depth of all modal operators, the universal ones included.
    pub fn modal_depth(&self) -> usize {
        match self {
            F::Diamond(_, a)
            | F::Box(_, a)
            | F::PoisonDiamond(_, a)
            | F::PoisonBox(_, a)
            | F::UDiamond(a)
            | F::UBox(a) => 1 + a.modal_depth(),
            _ => self
                .children()
                .into_iter()
                .map(PmlFormula::modal_depth)
                .max()
                .unwrap_or(0),
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(PmlFormula::size).sum::<usize>()
    }

    /// Largest modality or poison-atom index used, if any.
    pub fn max_index(&self) -> Option<ModalIndex> {
        let own = match self {
            F::PoisonAtom(i) | F::Diamond(i, _) | F::Box(i, _) | F::PoisonDiamond(i, _) | F::PoisonBox(i, _) => {
                Some(*i)
            }
            _ => None,
        };
        self.children()
            .into_iter()
            .filter_map(PmlFormula::max_index)
            .chain(own)
            .max()
    }

    /// Ordinary atoms occurring in the formula.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        if let F::Atom(a) = self {
            out.insert(a.clone());
        }
        for c in self.children() {
            c.collect_atoms(out);
        }
    }

    /// Whether any poison modality, poison atom or universal modality occurs.
    pub fn uses_poison(&self) -> bool {
        matches!(self, F::PoisonAtom(_) | F::PoisonDiamond(..) | F::PoisonBox(..))
            || self.children().into_iter().any(PmlFormula::uses_poison)
    }

    pub fn uses_universal(&self) -> bool {
        matches!(self, F::UDiamond(_) | F::UBox(_)) || self.children().into_iter().any(PmlFormula::uses_universal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modal_depth_examples() {
        assert_eq!(F::atom("p").modal_depth(), 0);
        assert_eq!(F::poison().boxed().poison_diamond().modal_depth(), 2);
        assert_eq!(F::poison().u_box().and(F::atom("p")).modal_depth(), 1);
    }

    #[test]
    fn index_and_atom_queries() {
        let f = F::PoisonAtom(2).diamond_i(1).and(F::atom("q").or(F::atom("p")));
        assert_eq!(f.max_index(), Some(2));
        assert_eq!(f.atoms().into_iter().collect::<Vec<_>>(), vec!["p", "q"]);
        assert!(f.uses_poison());
        assert!(!f.uses_universal());
        assert_eq!(F::True.max_index(), None);
    }

    #[test]
    fn empty_connectives() {
        assert_eq!(F::conjunction([]), F::True);
        assert_eq!(F::disjunction([]), F::False);
        let d = F::disjunction([F::atom("a"), F::atom("b"), F::atom("c")]);
        assert_eq!(d, F::atom("a").or(F::atom("b")).or(F::atom("c")));
    }
}

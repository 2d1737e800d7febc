use std::fmt;

/// Dense state identifier, `0..n` in declaration order.
pub type StateId = usize;

/// Index of a modality pair (◇ᵢ, ◆ᵢ) and of its poison atom. Zero-based.
pub type ModalIndex = usize;

/// Largest model the bitset representation supports.
pub const MAX_STATES: usize = 64;

/// A set of states packed into a single machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet(u64);

impl StateSet {
    pub const EMPTY: StateSet = StateSet(0);

    pub fn from_bits(bits: u64) -> Self {
        StateSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All states `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_STATES);
        if n == MAX_STATES {
            StateSet(u64::MAX)
        } else {
            StateSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(s: StateId) -> Self {
        StateSet(1u64 << s)
    }

    pub fn contains(self, s: StateId) -> bool {
        s < MAX_STATES && self.0 & (1u64 << s) != 0
    }

    pub fn insert(&mut self, s: StateId) {
        self.0 |= 1u64 << s;
    }

    pub fn remove(&mut self, s: StateId) {
        self.0 &= !(1u64 << s);
    }

    pub fn with(self, s: StateId) -> Self {
        StateSet(self.0 | (1u64 << s))
    }

    pub fn without(self, s: StateId) -> Self {
        StateSet(self.0 & !(1u64 << s))
    }

    pub fn union(self, other: StateSet) -> Self {
        StateSet(self.0 | other.0)
    }

    pub fn intersection(self, other: StateSet) -> Self {
        StateSet(self.0 & other.0)
    }

    pub fn difference(self, other: StateSet) -> Self {
        StateSet(self.0 & !other.0)
    }

    /// Complement relative to `0..n`.
    pub fn complement(self, n: usize) -> Self {
        StateSet(!self.0 & StateSet::full(n).0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: StateSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<StateId> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> StateSetIter {
        StateSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<StateId> {
        self.iter().collect()
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Serializes as the ascending list of member ids.
impl serde::Serialize for StateSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<StateId> for StateSet {
    fn from_iter<I: IntoIterator<Item = StateId>>(iter: I) -> Self {
        let mut set = StateSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

impl IntoIterator for StateSet {
    type Item = StateId;
    type IntoIter = StateSetIter;

    fn into_iter(self) -> StateSetIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`StateSet`].
pub struct StateSetIter(u64);

impl Iterator for StateSetIter {
    type Item = StateId;

    fn next(&mut self) -> Option<StateId> {
        if self.0 == 0 {
            return None;
        }
        let s = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for StateSetIter {}

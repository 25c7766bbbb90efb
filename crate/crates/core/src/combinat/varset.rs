use std::cmp::Ordering;
use std::fmt;

/// Largest supported number of variables.
pub const MAX_VARS: usize = 64;

/// A subset of the variable indices `0..n`, stored as a bitmask.
///
/// The ambient size `n` is not stored; it belongs to the surrounding
/// computation (the ideal or complex the set lives in). Ordering is
/// lexicographic on the sorted index lists, so `{0,2} < {0,3} < {1,2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        if n == MAX_VARS {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_VARS);
        VarSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(VarSet::EMPTY, |acc, i| acc.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VARS && self.0 & (1u64 << i) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        self.union(VarSet::singleton(i))
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        self.difference(VarSet::singleton(i))
    }

    #[must_use]
    pub fn union(self, other: VarSet) -> Self {
        VarSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: VarSet) -> Self {
        VarSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: VarSet) -> Self {
        VarSet(self.0 & !other.0)
    }

    /// Complement inside `0..n`.
    #[must_use]
    pub fn complement(self, n: usize) -> Self {
        VarSet::full(n).difference(self)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: VarSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Largest index plus one, i.e. the smallest `n` with `self ⊆ 0..n`.
    pub fn span(self) -> usize {
        MAX_VARS - self.0.leading_zeros() as usize
    }

    /// Indices in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Position of `i` among the sorted elements of `self`.
    pub fn rank_of(self, i: usize) -> usize {
        debug_assert!(self.contains(i));
        (self.0 & ((1u64 << i) - 1)).count_ones() as usize
    }

    /// Every subset of `self`, in increasing order of the bitmask.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(VarSet(cur))
        })
    }

    /// All subsets of `self` with exactly `k` elements, in lexicographic order.
    pub fn subsets_of_size(self, k: usize) -> Vec<VarSet> {
        let elems: Vec<usize> = self.iter().collect();
        let mut out = Vec::new();
        if k > elems.len() {
            return out;
        }
        let m = elems.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(VarSet::from_indices(idx.iter().map(|&p| elems[p])));
            let mut pos = k;
            while pos > 0 && idx[pos - 1] == pos - 1 + m - k {
                pos -= 1;
            }
            if pos == 0 {
                return out;
            }
            idx[pos - 1] += 1;
            for p in pos..k {
                idx[p] = idx[p - 1] + 1;
            }
        }
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VarSet::from_indices(iter)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Removes every set that is strictly contained in another one and sorts the rest.
pub fn maximal_elements(sets: impl IntoIterator<Item = VarSet>) -> Vec<VarSet> {
    let mut sets: Vec<VarSet> = sets.into_iter().collect();
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Removes every set that strictly contains another one and sorts the rest.
pub fn minimal_elements(sets: impl IntoIterator<Item = VarSet>) -> Vec<VarSet> {
    let mut sets: Vec<VarSet> = sets.into_iter().collect();
    sets.sort_by_key(|s| s.len());
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let a = VarSet::from_indices([0, 2]);
        let b = VarSet::from_indices([0, 3]);
        let c = VarSet::from_indices([1, 2]);
        assert!(a < b && b < c);
        assert!(VarSet::EMPTY < VarSet::singleton(0));
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = VarSet::from_indices([1, 3, 4]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_subset(s)));
        assert_eq!(VarSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn subsets_of_size_are_sorted_and_complete() {
        let s = VarSet::full(5);
        let pairs = s.subsets_of_size(2);
        assert_eq!(pairs.len(), 10);
        assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(s.subsets_of_size(0), vec![VarSet::EMPTY]);
        assert_eq!(s.subsets_of_size(5), vec![s]);
        assert!(s.subsets_of_size(6).is_empty());
        assert_eq!(VarSet::EMPTY.subsets_of_size(0), vec![VarSet::EMPTY]);
    }

    #[test]
    fn rank_and_span() {
        let s = VarSet::from_indices([2, 5, 7]);
        assert_eq!(s.rank_of(5), 1);
        assert_eq!(s.span(), 8);
        assert_eq!(VarSet::full(64).len(), 64);
    }

    #[test]
    fn antichains() {
        let sets = [
            VarSet::from_indices([0, 1]),
            VarSet::from_indices([0]),
            VarSet::from_indices([2]),
            VarSet::from_indices([0, 1]),
        ];
        assert_eq!(
            maximal_elements(sets),
            vec![VarSet::from_indices([0, 1]), VarSet::from_indices([2])]
        );
        assert_eq!(
            minimal_elements(sets),
            vec![VarSet::from_indices([0]), VarSet::from_indices([2])]
        );
    }
}

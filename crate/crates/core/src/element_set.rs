//! Subsets of a small ground set packed into a single 128-bit word.

use std::cmp::Ordering;
use std::fmt;

/// Largest ground set an [`ElementSet`] can address.
pub const MAX_ELEMENTS: usize = 128;

/// A subset of `{0, .., 127}`.
///
/// The ordering is the canonical one used for circuit lists: first by
/// cardinality, then lexicographically on the ascending element list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u128);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// The full ground set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u128::MAX)
        } else {
            ElementSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < MAX_ELEMENTS);
        ElementSet(1u128 << e)
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && (self.0 >> e) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u128 << e;
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u128 << e);
    }

    #[inline]
    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | (1u128 << e))
    }

    #[inline]
    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u128 << e))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub fn symmetric_difference(self, other: Self) -> Self {
        ElementSet(self.0 ^ other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest member, if any.
    #[inline]
    pub fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    /// Number of members strictly smaller than `e`.
    #[inline]
    pub fn rank_of(self, e: usize) -> usize {
        (self.0 & ((1u128 << e) - 1)).count_ones() as usize
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

/// Ascending iterator over the members of an [`ElementSet`].
pub struct Elements(u128);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Equal cardinality: the set holding the smallest differing element
        // comes first in lexicographic order of the sorted element lists.
        let lowest = diff & diff.wrapping_neg();
        if self.0 & lowest != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Visits every `k`-subset of `{0, .., n-1}` in lexicographic order.
pub fn for_each_k_subset(n: usize, k: usize, mut f: impl FnMut(ElementSet)) {
    for_each_combination(n, k, |idx| {
        f(idx.iter().collect());
        true
    });
}

/// All `k`-subsets of `{0, .., n-1}`, lexicographic.
pub fn k_subsets(n: usize, k: usize) -> Vec<ElementSet> {
    let mut out = Vec::new();
    for_each_k_subset(n, k, |s| out.push(s));
    out
}

/// Visits every `k`-combination of indices `0..n` as a slice.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let mut i = k;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if idx[i] < i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_lex() {
        let a: ElementSet = [0, 1, 4].iter().collect();
        let b: ElementSet = [0, 2, 3].iter().collect();
        let c: ElementSet = [0, 1].iter().collect();
        assert!(a < b);
        assert!(c < a);
        let mut v = vec![b, a, c];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn k_subsets_count() {
        assert_eq!(k_subsets(5, 3).len(), 10);
        assert_eq!(k_subsets(4, 0), vec![ElementSet::EMPTY]);
        assert_eq!(k_subsets(3, 4).len(), 0);
        assert_eq!(k_subsets(4, 4), vec![ElementSet::full(4)]);
        let mut n = 0;
        for_each_combination(6, 2, |_| {
            n += 1;
            true
        });
        assert_eq!(n, 15);
        assert_eq!(binomial(28, 4), 20475);
    }

    #[test]
    fn high_elements() {
        let s = ElementSet::singleton(127).with(64).with(3);
        assert_eq!(s.to_vec(), vec![3, 64, 127]);
        assert_eq!(s.last(), Some(127));
        assert_eq!(s.rank_of(100), 2);
        assert_eq!(ElementSet::full(128).len(), 128);
    }
}

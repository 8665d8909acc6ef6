//! Matroids given by their circuits.

use std::collections::{HashMap, HashSet};

use crate::element_set::{for_each_k_subset, ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// A matroid on `{0, .., n-1}` stored as its canonically sorted circuit list.
#[derive(Clone, Debug)]
pub struct Matroid {
    n: usize,
    circuits: Vec<ElementSet>,
    by_element: Vec<Vec<usize>>,
    index: HashMap<ElementSet, usize>,
    rank: usize,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.circuits == other.circuits
    }
}

impl Eq for Matroid {}

impl Matroid {
    /// Checks the circuit axioms exhaustively and returns the canonical form.
    pub fn validate_circuits(n: usize, circuits: Vec<ElementSet>) -> Result<Matroid> {
        if n > MAX_ELEMENTS {
            return Err(Error::BadParameters(format!(
                "ground set of {n} elements exceeds the limit of {MAX_ELEMENTS}"
            )));
        }
        let ground = ElementSet::full(n);
        let mut cs = circuits;
        for &c in &cs {
            if c.is_empty() {
                return Err(Error::EmptyCircuit);
            }
            if !c.is_subset(ground) {
                return Err(Error::ElementOutOfRange(c));
            }
        }
        cs.sort();
        cs.dedup();
        for (i, &a) in cs.iter().enumerate() {
            for &b in &cs[i + 1..] {
                // sorted by size, so only `a ⊂ b` is possible
                if a.is_subset(b) {
                    return Err(Error::NotAntichain {
                        smaller: a,
                        larger: b,
                    });
                }
            }
        }
        for (i, &a) in cs.iter().enumerate() {
            for &b in &cs[i + 1..] {
                let common = a.intersection(b);
                if common.is_empty() {
                    continue;
                }
                let union = a.union(b);
                for e in common.iter() {
                    let target = union.without(e);
                    if !cs.iter().any(|c| c.is_subset(target)) {
                        return Err(Error::EliminationFailure {
                            first: a,
                            second: b,
                            element: e,
                        });
                    }
                }
            }
        }
        Ok(Self::build(n, cs))
    }

    /// Builds a matroid from a circuit family known to be valid (for instance
    /// the cycles or bonds of a graph). Sorts and deduplicates but skips the
    /// quadratic axiom checks.
    pub fn from_circuits_unchecked(n: usize, mut circuits: Vec<ElementSet>) -> Matroid {
        assert!(n <= MAX_ELEMENTS);
        circuits.sort();
        circuits.dedup();
        Self::build(n, circuits)
    }

    fn build(n: usize, circuits: Vec<ElementSet>) -> Matroid {
        let mut by_element = vec![Vec::new(); n];
        let mut index = HashMap::with_capacity(circuits.len());
        for (i, c) in circuits.iter().enumerate() {
            for e in c.iter() {
                by_element[e].push(i);
            }
            index.insert(*c, i);
        }
        let mut m = Matroid {
            n,
            circuits,
            by_element,
            index,
            rank: 0,
        };
        m.rank = m.rank_of(ElementSet::full(n));
        m
    }

    /// The uniform matroid `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if r > n || n > MAX_ELEMENTS {
            return Err(Error::BadParameters(format!("U_{{{r},{n}}}")));
        }
        if crate::element_set::binomial(n, r + 1) > 5_000_000 {
            return Err(Error::TooLarge(format!("U_{{{r},{n}}} has too many circuits")));
        }
        let mut cs = Vec::new();
        if r < n {
            for_each_k_subset(n, r + 1, |s| cs.push(s));
        }
        Ok(Self::build(n, cs))
    }

    /// The Fano plane: the seven lines `{i, i+1, i+3} mod 7` and their
    /// complements.
    pub fn fano() -> Matroid {
        let mut cs = Vec::new();
        for i in 0..7 {
            let line: ElementSet = [i, (i + 1) % 7, (i + 3) % 7].iter().collect();
            cs.push(line);
            cs.push(ElementSet::full(7).difference(line));
        }
        Matroid::from_circuits_unchecked(7, cs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn circuits(&self) -> &[ElementSet] {
        &self.circuits
    }

    pub fn num_circuits(&self) -> usize {
        self.circuits.len()
    }

    /// Indices of the circuits containing `e`, in canonical order.
    pub fn circuits_containing(&self, e: usize) -> &[usize] {
        &self.by_element[e]
    }

    pub fn circuit_index(&self, c: ElementSet) -> Option<usize> {
        self.index.get(&c).copied()
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        !self.circuits.iter().any(|c| c.is_subset(s))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Size of a maximal independent subset of `s` (greedy).
    pub fn rank_of(&self, s: ElementSet) -> usize {
        let mut indep = ElementSet::EMPTY;
        for e in s.iter() {
            let t = indep.with(e);
            if self.by_element[e].iter().all(|&i| !self.circuits[i].is_subset(t)) {
                indep = t;
            }
        }
        indep.len()
    }

    pub fn is_basis(&self, b: ElementSet) -> bool {
        b.len() == self.rank && b.is_subset(self.ground()) && self.is_independent(b)
    }

    /// All bases in canonical order.
    pub fn bases(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        let r = self.rank;
        let n = self.n;
        // Depth-first extension of independent sets in increasing element order.
        fn rec(
            m: &Matroid,
            cur: ElementSet,
            next: usize,
            r: usize,
            n: usize,
            out: &mut Vec<ElementSet>,
        ) {
            if cur.len() == r {
                out.push(cur);
                return;
            }
            let need = r - cur.len();
            for e in next..n {
                if n - e < need {
                    break;
                }
                let t = cur.with(e);
                if m.by_element[e].iter().all(|&i| !m.circuits[i].is_subset(t)) {
                    rec(m, t, e + 1, r, n, out);
                }
            }
        }
        rec(self, ElementSet::EMPTY, 0, r, n, &mut out);
        out.sort();
        out
    }

    /// The unique circuit inside `B ∪ {e}`.
    pub fn fundamental_circuit(&self, b: ElementSet, e: usize) -> Result<ElementSet> {
        if e >= self.n {
            return Err(Error::BadParameters(format!("element {e} out of range")));
        }
        if !self.is_basis(b) {
            return Err(Error::NotABasis(b));
        }
        if b.contains(e) {
            return Err(Error::ElementInBasis(e));
        }
        Ok(self.fundamental_circuit_unchecked(b, e))
    }

    /// As [`Matroid::fundamental_circuit`] without validating the inputs.
    pub fn fundamental_circuit_unchecked(&self, b: ElementSet, e: usize) -> ElementSet {
        let span = b.with(e);
        for &i in &self.by_element[e] {
            if self.circuits[i].is_subset(span) {
                return self.circuits[i];
            }
        }
        panic!("no circuit in B+e: {:?} + {}", b, e);
    }

    /// Index of the fundamental circuit `C(B, e)`.
    pub fn fundamental_circuit_index(&self, b: ElementSet, e: usize) -> usize {
        let span = b.with(e);
        for &i in &self.by_element[e] {
            if self.circuits[i].is_subset(span) {
                return i;
            }
        }
        panic!("no circuit in B+e: {:?} + {}", b, e);
    }

    /// Every two elements lie on a common circuit. Sharing a circuit is an
    /// equivalence relation on the elements, so a union-find pass suffices.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for c in &self.circuits {
            let mut it = c.iter();
            let first = it.next().unwrap();
            for e in it {
                let a = find(&mut parent, first);
                let b = find(&mut parent, e);
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        (1..self.n).all(|e| find(&mut parent, e) == root)
    }

    /// Whether `s` is a disjoint union of circuits.
    pub fn is_disjoint_union_of_circuits(&self, s: ElementSet) -> bool {
        let Some(x) = s.first() else {
            return true;
        };
        self.by_element[x].iter().any(|&i| {
            let c = self.circuits[i];
            c.is_subset(s) && self.is_disjoint_union_of_circuits(s.difference(c))
        })
    }

    /// The symmetric difference of every two circuits is a disjoint union of
    /// circuits.
    pub fn is_binary(&self) -> bool {
        let mut seen = HashSet::new();
        for (i, &a) in self.circuits.iter().enumerate() {
            for &b in &self.circuits[i + 1..] {
                let d = a.symmetric_difference(b);
                if seen.insert(d) && !self.is_disjoint_union_of_circuits(d) {
                    return false;
                }
            }
        }
        true
    }

    /// Circuits of the dual matroid. Bases of the dual are the complements of
    /// bases; every dual circuit is a fundamental circuit of some dual basis.
    pub fn cocircuits(&self) -> Vec<ElementSet> {
        let ground = self.ground();
        let bases = self.bases();
        let dual_bases: HashSet<ElementSet> = bases.iter().map(|b| ground.difference(*b)).collect();
        let mut out = HashSet::new();
        for &bd in &dual_bases {
            for e in ground.difference(bd).iter() {
                let mut c = ElementSet::singleton(e);
                for f in bd.iter() {
                    if dual_bases.contains(&bd.without(f).with(e)) {
                        c.insert(f);
                    }
                }
                out.insert(c);
            }
        }
        let mut v: Vec<ElementSet> = out.into_iter().collect();
        v.sort();
        v
    }

    pub fn dual(&self) -> Matroid {
        Matroid::from_circuits_unchecked(self.n, self.cocircuits())
    }

    /// Size of a largest circuit (0 if there are none).
    pub fn circumference(&self) -> usize {
        self.circuits.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    /// Size of a smallest cocircuit (0 if there are none).
    pub fn cogirth(&self) -> usize {
        self.cocircuits().iter().map(|c| c.len()).min().unwrap_or(0)
    }

    /// Size of a smallest cocircuit containing `e` (`None` for a loop).
    pub fn cogirth_at(&self, e: usize) -> Option<usize> {
        self.cocircuits()
            .iter()
            .filter(|c| c.contains(e))
            .map(|c| c.len())
            .min()
    }

    /// Circuits through `e`, as sets.
    pub fn star(&self, e: usize) -> Vec<ElementSet> {
        self.by_element[e].iter().map(|&i| self.circuits[i]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().map(|x| x - 1).collect()
    }

    fn g1() -> Matroid {
        Matroid::validate_circuits(5, vec![set(&[1, 2, 5]), set(&[3, 4, 5]), set(&[1, 2, 3, 4])]).unwrap()
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            Matroid::validate_circuits(4, vec![set(&[1, 2]), set(&[1, 2, 3])]),
            Err(Error::NotAntichain { .. })
        ));
        assert!(matches!(
            Matroid::validate_circuits(4, vec![ElementSet::EMPTY]),
            Err(Error::EmptyCircuit)
        ));
        assert!(matches!(
            Matroid::validate_circuits(4, vec![set(&[1, 2, 3]), set(&[1, 2, 4])]),
            Err(Error::EliminationFailure { .. })
        ));
        assert!(Matroid::validate_circuits(3, vec![set(&[1, 2, 3])]).is_ok());
    }

    #[test]
    fn g1_basics() {
        let m = g1();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bases().len(), 8);
        assert_eq!(m.fundamental_circuit(set(&[1, 3, 5]), 1).unwrap(), set(&[1, 2, 5]));
        assert!(m.is_connected());
        assert!(m.is_binary());
        assert_eq!(m.circumference(), 4);
        assert_eq!(m.cogirth(), 2);
        assert_eq!(m.cogirth_at(4), Some(3));
        let mut co = m.cocircuits();
        co.sort();
        let mut expect = vec![
            set(&[1, 2]),
            set(&[3, 4]),
            set(&[1, 3, 5]),
            set(&[2, 4, 5]),
            set(&[2, 3, 5]),
            set(&[1, 4, 5]),
        ];
        expect.sort();
        assert_eq!(co, expect);
    }

    #[test]
    fn uniform_basics() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.num_circuits(), 4);
        assert_eq!(u.bases().len(), 6);
        assert!(!u.is_binary());
        assert_eq!(u.cogirth(), 3);
        assert_eq!(u.fundamental_circuit(set(&[1, 2]), 2).unwrap(), set(&[1, 2, 3]));
        assert!(matches!(
            u.fundamental_circuit(set(&[1, 2]), 1),
            Err(Error::ElementInBasis(1))
        ));
        assert_eq!(Matroid::uniform(3, 5).unwrap().num_circuits(), 5);
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(u12.cocircuits(), vec![set(&[1, 2])]);
        let full = Matroid::uniform(3, 3).unwrap();
        assert_eq!(full.num_circuits(), 0);
        assert_eq!(full.rank(), 3);
    }

    #[test]
    fn fano_is_valid_and_binary() {
        let f = Matroid::fano();
        let v = Matroid::validate_circuits(7, f.circuits().to_vec()).unwrap();
        assert_eq!(v, f);
        assert_eq!(f.rank(), 3);
        assert!(f.is_binary());
        assert!(f.is_connected());
    }

    #[test]
    fn disconnected_sum() {
        let m = Matroid::validate_circuits(6, vec![set(&[1, 2, 3]), set(&[4, 5, 6])]).unwrap();
        assert!(!m.is_connected());
    }
}

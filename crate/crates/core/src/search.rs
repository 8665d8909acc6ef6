//! Exact minimum set cover with optional connectivity side conditions.
//!
//! Iterative deepening on the cover size. Each level is a depth-first search
//! that branches on the uncovered item with the fewest usable sets and
//! forbids earlier siblings, so every subset is visited at most once. A
//! level is cut off when the best remaining gains cannot cover what is left.

use fixedbitset::FixedBitSet;

use crate::budget::Meter;
use crate::element_set::ElementSet;
use crate::error::Result;

/// A subset of a finite item universe.
pub trait ItemSet: Clone {
    fn empty_like(universe: usize) -> Self;
    fn union_with(&mut self, other: &Self);
    fn count(&self) -> usize;
    /// Number of items in `self` but not in `covered`.
    fn count_new(&self, covered: &Self) -> usize;
    fn has(&self, i: usize) -> bool;
    fn items(&self) -> Vec<usize>;
}

impl ItemSet for ElementSet {
    fn empty_like(_: usize) -> Self {
        ElementSet::EMPTY
    }
    fn union_with(&mut self, other: &Self) {
        *self = self.union(*other);
    }
    fn count(&self) -> usize {
        self.len()
    }
    fn count_new(&self, covered: &Self) -> usize {
        self.difference(*covered).len()
    }
    fn has(&self, i: usize) -> bool {
        self.contains(i)
    }
    fn items(&self) -> Vec<usize> {
        self.to_vec()
    }
}

impl ItemSet for FixedBitSet {
    fn empty_like(universe: usize) -> Self {
        FixedBitSet::with_capacity(universe)
    }
    fn union_with(&mut self, other: &Self) {
        FixedBitSet::union_with(self, other);
    }
    fn count(&self) -> usize {
        self.count_ones(..)
    }
    fn count_new(&self, covered: &Self) -> usize {
        self.difference(covered).count()
    }
    fn has(&self, i: usize) -> bool {
        self.contains(i)
    }
    fn items(&self) -> Vec<usize> {
        self.ones().collect()
    }
}

/// Extra requirement on a cover. `missing` returns `None` when the chosen
/// family is acceptable, otherwise a list of sets at least one of which must
/// be added (an empty list means the family can never be repaired).
pub trait Connectivity {
    fn missing(&self, chosen: &[usize]) -> Option<Vec<usize>>;
}

/// No requirement.
pub struct Unconstrained;

impl Connectivity for Unconstrained {
    fn missing(&self, _: &[usize]) -> Option<Vec<usize>> {
        None
    }
}

/// The graph on the chosen sets given by `adjacent` must be connected.
pub struct Pairwise<F: Fn(usize, usize) -> bool> {
    pub adjacent: F,
    pub num_sets: usize,
}

impl<F: Fn(usize, usize) -> bool> Connectivity for Pairwise<F> {
    fn missing(&self, chosen: &[usize]) -> Option<Vec<usize>> {
        if chosen.len() <= 1 {
            return None;
        }
        let comps = components(chosen, &self.adjacent);
        if comps.len() == 1 {
            return None;
        }
        let smallest = comps.iter().min_by_key(|c| c.len()).unwrap();
        let out = (0..self.num_sets)
            .filter(|s| !chosen.contains(s))
            .filter(|&s| smallest.iter().any(|&t| (self.adjacent)(s, t)))
            .collect();
        Some(out)
    }
}

/// Custom rule from a closure.
pub struct Rule<F: Fn(&[usize]) -> Option<Vec<usize>>>(pub F);

impl<F: Fn(&[usize]) -> Option<Vec<usize>>> Connectivity for Rule<F> {
    fn missing(&self, chosen: &[usize]) -> Option<Vec<usize>> {
        (self.0)(chosen)
    }
}

/// Connected components of the chosen sets under `adjacent`.
pub fn components(chosen: &[usize], adjacent: &impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut comp_of = vec![usize::MAX; chosen.len()];
    let mut comps = Vec::new();
    for start in 0..chosen.len() {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        comp_of[start] = id;
        let mut members = vec![chosen[start]];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..chosen.len() {
                if comp_of[j] == usize::MAX && adjacent(chosen[i], chosen[j]) {
                    comp_of[j] = id;
                    members.push(chosen[j]);
                    stack.push(j);
                }
            }
        }
        comps.push(members);
    }
    comps
}

/// A minimum cover: indices into the set list, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub size: usize,
    pub members: Vec<usize>,
}

pub struct CoverProblem<'a, S: ItemSet> {
    pub universe: usize,
    pub sets: &'a [S],
}

impl<'a, S: ItemSet> CoverProblem<'a, S> {
    pub fn new(universe: usize, sets: &'a [S]) -> Self {
        CoverProblem { universe, sets }
    }

    /// Smallest cover satisfying `conn` with size in `[lower, upper)`, or
    /// `None` if there is none. `upper = None` searches up to all sets.
    pub fn minimum(
        &self,
        conn: &dyn Connectivity,
        lower: usize,
        upper: Option<usize>,
        meter: &Meter,
    ) -> Result<Option<Cover>> {
        let mut all = S::empty_like(self.universe);
        for s in self.sets {
            all.union_with(s);
        }
        if all.count() < self.universe {
            return Ok(None);
        }
        let mut item_sets = vec![Vec::new(); self.universe];
        for (j, s) in self.sets.iter().enumerate() {
            for i in s.items() {
                item_sets[i].push(j);
            }
        }
        let top = upper.unwrap_or(self.sets.len() + 1).min(self.sets.len() + 1);
        for k in lower..top {
            let mut level = Level {
                p: self,
                conn,
                k,
                item_sets: &item_sets,
                chosen: Vec::with_capacity(k),
                forbidden: vec![false; self.sets.len()],
                meter,
            };
            if level.dfs(S::empty_like(self.universe))? {
                let mut members = level.chosen;
                members.sort_unstable();
                return Ok(Some(Cover { size: k, members }));
            }
        }
        Ok(None)
    }

    /// Whether a cover of size at most `k` exists.
    pub fn exists(&self, conn: &dyn Connectivity, k: usize, meter: &Meter) -> Result<bool> {
        Ok(self.minimum(conn, 0, Some(k + 1), meter)?.is_some())
    }
}

struct Level<'a, 'b, S: ItemSet> {
    p: &'b CoverProblem<'a, S>,
    conn: &'b dyn Connectivity,
    k: usize,
    item_sets: &'b [Vec<usize>],
    chosen: Vec<usize>,
    forbidden: Vec<bool>,
    meter: &'b Meter,
}

impl<S: ItemSet> Level<'_, '_, S> {
    fn usable(&self, j: usize) -> bool {
        !self.forbidden[j] && !self.chosen.contains(&j)
    }

    fn dfs(&mut self, covered: S) -> Result<bool> {
        self.meter.tick()?;
        let uncovered = self.p.universe - covered.count();
        if uncovered == 0 {
            let Some(cands) = self.conn.missing(&self.chosen) else {
                return Ok(true);
            };
            if self.chosen.len() == self.k {
                return Ok(false);
            }
            let cands: Vec<usize> = cands.into_iter().filter(|&j| self.usable(j)).collect();
            return self.branch(&covered, &cands);
        }
        if self.chosen.len() == self.k {
            return Ok(false);
        }
        let slots = self.k - self.chosen.len();
        let mut gains: Vec<usize> = (0..self.p.sets.len())
            .filter(|&j| self.usable(j))
            .map(|j| self.p.sets[j].count_new(&covered))
            .filter(|&g| g > 0)
            .collect();
        if gains.len() > slots {
            gains.select_nth_unstable_by(slots - 1, |a, b| b.cmp(a));
            gains.truncate(slots);
        }
        if gains.iter().sum::<usize>() < uncovered {
            return Ok(false);
        }
        let mut best: Option<(usize, usize)> = None;
        for i in 0..self.p.universe {
            if covered.has(i) {
                continue;
            }
            let c = self.item_sets[i].iter().filter(|&&j| self.usable(j)).count();
            if best.is_none_or(|(bc, _)| c < bc) {
                best = Some((c, i));
                if c <= 1 {
                    break;
                }
            }
        }
        let (count, item) = best.unwrap();
        if count == 0 {
            return Ok(false);
        }
        let mut cands: Vec<usize> = self.item_sets[item].iter().copied().filter(|&j| self.usable(j)).collect();
        cands.sort_by_key(|&j| (usize::MAX - self.p.sets[j].count_new(&covered), j));
        self.branch(&covered, &cands)
    }

    fn branch(&mut self, covered: &S, cands: &[usize]) -> Result<bool> {
        let mut forbade = Vec::new();
        let mut found = false;
        for &j in cands {
            let mut next = covered.clone();
            next.union_with(&self.p.sets[j]);
            self.chosen.push(j);
            if self.dfs(next)? {
                found = true;
                break;
            }
            self.chosen.pop();
            self.forbidden[j] = true;
            forbade.push(j);
        }
        for j in forbade {
            self.forbidden[j] = false;
        }
        Ok(found)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::element_set::k_subsets;

    fn meter() -> Meter {
        Budget::default().meter("test")
    }

    /// Oracle: smallest k such that some k-subset of sets works.
    fn brute(universe: usize, sets: &[ElementSet], connected: bool) -> Option<usize> {
        let full = ElementSet::full(universe);
        for k in 0..=sets.len() {
            for pick in k_subsets(sets.len(), k) {
                let idx = pick.to_vec();
                let u = idx.iter().fold(ElementSet::EMPTY, |a, &j| a.union(sets[j]));
                if u != full {
                    continue;
                }
                if connected && components(&idx, &|a, b| sets[a].intersects(sets[b])).len() > 1 {
                    continue;
                }
                return Some(k);
            }
        }
        None
    }

    #[test]
    fn matches_brute_force_on_random_families() {
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..300 {
            let universe = 3 + (next() % 6) as usize;
            let nsets = 2 + (next() % 8) as usize;
            let sets: Vec<ElementSet> = (0..nsets)
                .map(|_| ElementSet::from_bits((next() as u128) & ((1u128 << universe) - 1)))
                .filter(|s| !s.is_empty())
                .collect();
            let p = CoverProblem::new(universe, &sets);
            let plain = p.minimum(&Unconstrained, 0, None, &meter()).unwrap().map(|c| c.size);
            assert_eq!(plain, brute(universe, &sets, false));
            let conn = Pairwise {
                adjacent: |a: usize, b: usize| sets[a].intersects(sets[b]),
                num_sets: sets.len(),
            };
            let c = p.minimum(&conn, 0, None, &meter()).unwrap();
            assert_eq!(c.as_ref().map(|c| c.size), brute(universe, &sets, true));
            if let Some(c) = c {
                let u = c.members.iter().fold(ElementSet::EMPTY, |a, &j| a.union(sets[j]));
                assert_eq!(u, ElementSet::full(universe));
            }
        }
    }

    #[test]
    fn fixed_bitset_backend() {
        let mk = |xs: &[usize]| {
            let mut b = FixedBitSet::with_capacity(5);
            for &x in xs {
                b.insert(x);
            }
            b
        };
        let sets = vec![mk(&[0, 1]), mk(&[2, 3]), mk(&[4]), mk(&[1, 2, 3, 4])];
        let c = CoverProblem::new(5, &sets)
            .minimum(&Unconstrained, 0, None, &meter())
            .unwrap()
            .unwrap();
        assert_eq!(c.size, 2);
        assert_eq!(c.members, vec![0, 3]);
    }
}

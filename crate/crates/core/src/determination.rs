//! How many circuits pin down an orientation.
//!
//! For two orientations `O`, `O'` let `D(O, O')` be the circuits on which
//! they disagree. A set `S` of circuits singles out `O` exactly when it meets
//! every `D(O, O')`. Reorienting both arguments by the same set leaves
//! `D` unchanged, so the differences from class representatives already
//! give every difference set, and `s`, `s̃`, `s̄` become hitting-set
//! questions over that family.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::budget::Budget;
use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::oriented::{OrientationSpace, OrientedMatroid, SignedSet};
use crate::search::{CoverProblem, Unconstrained};

/// The signed circuits of `om` whose supports are `s`.
pub fn orient_subset(om: &OrientedMatroid, s: &[ElementSet]) -> Result<Vec<SignedSet>> {
    s.iter().map(|&c| om.sign_of(c)).collect()
}

/// Whether exactly one orientation contains every signed circuit of `s`.
pub fn determines(space: &OrientationSpace, s: &[SignedSet]) -> Result<bool> {
    let m = space.matroid();
    let mut wanted = Vec::with_capacity(s.len());
    for x in s {
        let i = m.circuit_index(x.support()).ok_or(Error::NotACircuit(x.support()))?;
        wanted.push((i, x.canonical().neg));
    }
    let hits = (0..space.len())
        .filter(|&o| wanted.iter().all(|&(i, neg)| space.negs(o)[i] == neg))
        .take(2)
        .count();
    Ok(hits == 1)
}

/// Whether the restriction to `s` is injective on all orientations.
pub fn determines_all(space: &OrientationSpace, s: &[ElementSet]) -> Result<bool> {
    let m = space.matroid();
    let idx: Vec<usize> = s
        .iter()
        .map(|&c| m.circuit_index(c).ok_or(Error::NotACircuit(c)))
        .collect::<Result<_>>()?;
    let mut seen = HashSet::with_capacity(space.len());
    for o in 0..space.len() {
        let key: Vec<ElementSet> = idx.iter().map(|&i| space.negs(o)[i]).collect();
        if !seen.insert(key) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of a determination search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminationReport {
    pub param: &'static str,
    pub value: usize,
    /// For `s`: one determining set. For `s̄`: a set of `value - 1`
    /// circuits that does not determine all orientations.
    pub witness: Vec<ElementSet>,
    /// For `s̃`: a smallest determining signed set per reorientation class,
    /// keyed by the index of the class representative.
    pub per_orientation: Vec<(usize, Vec<SignedSet>)>,
    pub orientations: usize,
    pub classes: usize,
}

/// Difference sets from each class representative, kept inclusion-minimal.
pub struct Differences {
    space: OrientationSpace,
    /// `per_rep[k]`: minimal difference sets for representative `reps()[k]`.
    per_rep: Vec<Vec<FixedBitSet>>,
    all: Vec<FixedBitSet>,
    /// Smallest difference set over all pairs (before minimisation).
    smallest: Option<FixedBitSet>,
}

fn difference(a: &[ElementSet], b: &[ElementSet]) -> FixedBitSet {
    let mut d = FixedBitSet::with_capacity(a.len());
    for (i, (x, y)) in a.iter().zip(b).enumerate() {
        if x != y {
            d.insert(i);
        }
    }
    d
}

fn minimal(mut family: Vec<FixedBitSet>) -> Vec<FixedBitSet> {
    family.sort_by_key(|d| (d.count_ones(..), d.ones().collect::<Vec<_>>()));
    family.dedup();
    let mut kept: Vec<FixedBitSet> = Vec::new();
    for d in family {
        if !kept.iter().any(|k| k.is_subset(&d)) {
            kept.push(d);
        }
    }
    kept
}

impl Differences {
    pub fn new(space: OrientationSpace) -> Result<Differences> {
        if space.is_empty() {
            return Err(Error::NotOrientable);
        }
        let raw: Vec<Vec<FixedBitSet>> = space
            .reps()
            .par_iter()
            .map(|&r| {
                (0..space.len())
                    .filter(|&o| o != r)
                    .map(|o| difference(space.negs(r), space.negs(o)))
                    .collect()
            })
            .collect();
        let smallest = raw
            .iter()
            .flatten()
            .min_by_key(|d| (d.count_ones(..), d.ones().collect::<Vec<_>>()))
            .cloned();
        let per_rep: Vec<Vec<FixedBitSet>> = raw.into_par_iter().map(minimal).collect();
        let all = minimal(per_rep.iter().flatten().cloned().collect());
        Ok(Differences {
            space,
            per_rep,
            all,
            smallest,
        })
    }

    pub fn compute(m: &crate::Matroid, budget: &Budget) -> Result<Differences> {
        Differences::new(OrientationSpace::new(m, budget)?)
    }

    pub fn space(&self) -> &OrientationSpace {
        &self.space
    }

    /// All inclusion-minimal difference sets, as circuit index sets.
    pub fn minimal_sets(&self) -> &[FixedBitSet] {
        &self.all
    }

    fn report(&self, param: &'static str, value: usize) -> DeterminationReport {
        DeterminationReport {
            param,
            value,
            witness: Vec::new(),
            per_orientation: Vec::new(),
            orientations: self.space.len(),
            classes: self.space.num_classes(),
        }
    }

    /// Smallest set of circuit indices meeting every set of `family`.
    fn hitting_set(&self, family: &[FixedBitSet], budget: &Budget) -> Result<Vec<usize>> {
        let nc = self.space.matroid().num_circuits();
        let mut sets = vec![FixedBitSet::with_capacity(family.len()); nc];
        for (j, d) in family.iter().enumerate() {
            for c in d.ones() {
                sets[c].insert(j);
            }
        }
        let cover = CoverProblem::new(family.len(), &sets)
            .minimum(&Unconstrained, 0, None, &budget.meter("hitting set"))?
            .expect("every difference set is nonempty");
        Ok(cover.members)
    }

    fn circuits(&self, idx: &[usize]) -> Vec<ElementSet> {
        let cs = self.space.matroid().circuits();
        idx.iter().map(|&i| cs[i]).collect()
    }

    /// `s`: a smallest unsigned set determining all orientations.
    pub fn s(&self, budget: &Budget) -> Result<DeterminationReport> {
        let hit = self.hitting_set(&self.all, budget)?;
        let mut r = self.report("s", hit.len());
        r.witness = self.circuits(&hit);
        Ok(r)
    }

    /// `s̃`: the worst orientation's smallest determining signed set.
    pub fn s_tilde(&self, budget: &Budget) -> Result<DeterminationReport> {
        let per: Vec<(usize, Vec<usize>)> = self
            .space
            .reps()
            .par_iter()
            .zip(&self.per_rep)
            .map(|(&rep, fam)| Ok((rep, self.hitting_set(fam, budget)?)))
            .collect::<Result<_>>()?;
        let value = per.iter().map(|(_, h)| h.len()).max().unwrap_or(0);
        let mut r = self.report("stilde", value);
        r.per_orientation = per
            .into_iter()
            .map(|(rep, h)| {
                let om = self.space.orientation(rep);
                (rep, h.iter().map(|&i| om.signed(i)).collect())
            })
            .collect();
        Ok(r)
    }

    /// `s̄`: one more than the largest set of circuits on which two distinct
    /// orientations agree.
    pub fn s_bar(&self) -> DeterminationReport {
        let nc = self.space.matroid().num_circuits();
        let Some(d) = &self.smallest else {
            return self.report("sbar", 0);
        };
        let agree: Vec<usize> = (0..nc).filter(|&i| !d.contains(i)).collect();
        let mut r = self.report("sbar", agree.len() + 1);
        r.witness = self.circuits(&agree);
        r
    }
}

pub fn s_param(m: &crate::Matroid, budget: &Budget) -> Result<DeterminationReport> {
    Differences::compute(m, budget)?.s(budget)
}

pub fn s_tilde(m: &crate::Matroid, budget: &Budget) -> Result<DeterminationReport> {
    Differences::compute(m, budget)?.s_tilde(budget)
}

pub fn s_bar(m: &crate::Matroid, budget: &Budget) -> Result<DeterminationReport> {
    Ok(Differences::compute(m, budget)?.s_bar())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element_set::k_subsets;
    use crate::graph::Graph;
    use crate::matroid::Matroid;
    use crate::oriented::tests::ss;

    fn budget() -> Budget {
        Budget::default()
    }

    fn space(m: &Matroid) -> OrientationSpace {
        OrientationSpace::new(m, &budget()).unwrap()
    }

    /// Oracle for `s` and `s̄` straight from the definitions: scan subsets
    /// of circuits with the injectivity test.
    fn brute_s_sbar(sp: &OrientationSpace) -> (usize, usize) {
        let cs = sp.matroid().circuits().to_vec();
        let nc = cs.len();
        let subsets_of = |k: usize| -> Vec<Vec<ElementSet>> {
            k_subsets(nc, k)
                .into_iter()
                .map(|pick| pick.iter().map(|i| cs[i]).collect())
                .collect()
        };
        let s = (0..=nc)
            .find(|&k| subsets_of(k).iter().any(|s| determines_all(sp, s).unwrap()))
            .unwrap();
        let sbar = (0..=nc)
            .find(|&k| subsets_of(k).iter().all(|s| determines_all(sp, s).unwrap()))
            .unwrap();
        (s, sbar)
    }

    /// Oracle for `s̃`: per orientation, scan signed subsets with `determines`.
    fn brute_stilde(sp: &OrientationSpace) -> usize {
        let nc = sp.matroid().num_circuits();
        (0..sp.len())
            .map(|o| {
                let om = sp.orientation(o);
                (0..=nc)
                    .find(|&k| {
                        k_subsets(nc, k).into_iter().any(|pick| {
                            let signed: Vec<SignedSet> = pick.iter().map(|i| om.signed(i)).collect();
                            determines(sp, &signed).unwrap()
                        })
                    })
                    .unwrap()
            })
            .max()
            .unwrap()
    }

    fn check_against_brute(m: &Matroid) -> (usize, usize, usize) {
        let sp = space(m);
        let d = Differences::new(sp.clone()).unwrap();
        let s = d.s(&budget()).unwrap();
        let st = d.s_tilde(&budget()).unwrap();
        let sb = d.s_bar();
        let (bs, bsb) = brute_s_sbar(&sp);
        assert_eq!(s.value, bs);
        assert_eq!(sb.value, bsb);
        assert_eq!(st.value, brute_stilde(&sp));
        assert!(determines_all(&sp, &s.witness).unwrap());
        assert_eq!(sb.witness.len(), sb.value - 1);
        assert!(!determines_all(&sp, &sb.witness).unwrap());
        for (rep, signed) in &st.per_orientation {
            assert!(determines(&sp, signed).unwrap());
            let om = sp.orientation(*rep);
            for x in signed {
                assert_eq!(om.sign_of(x.support()).unwrap(), *x);
            }
        }
        (st.value, s.value, sb.value)
    }

    #[test]
    fn uniform_values() {
        assert_eq!(check_against_brute(&Matroid::uniform(2, 3).unwrap()), (1, 1, 1));
        assert_eq!(check_against_brute(&Matroid::uniform(2, 4).unwrap()), (2, 3, 3));
        assert_eq!(check_against_brute(&Matroid::uniform(3, 5).unwrap()), (3, 4, 4));
    }

    #[test]
    fn diamond_values() {
        let m = Graph::diamond().graphic_matroid(1000).unwrap();
        assert_eq!(check_against_brute(&m), (2, 2, 2));
    }

    #[test]
    fn subset_predicates() {
        let m = Matroid::uniform(2, 4).unwrap();
        let sp = space(&m);
        let m1 = OrientedMatroid::validate_signed(&m, &[ss(&[1, 2, -3]), ss(&[1, 2, -4]), ss(&[1, 3, -4]), ss(&[-2, 3, -4])]).unwrap();
        assert!(!determines(&sp, &[ss(&[1, 2, -4])]).unwrap());
        assert!(determines(&sp, &m1.signed_circuits()).unwrap());
        assert!(!determines_all(&sp, &[]).unwrap());
        let c = [0, 1, 3].iter().collect::<ElementSet>();
        assert_eq!(orient_subset(&m1, &[c]).unwrap(), vec![ss(&[1, 2, -4])]);
        for e in 0..4 {
            assert!(determines_all(&sp, &m.star(e)).unwrap());
        }
        let g1 = Graph::diamond().graphic_matroid(1000).unwrap();
        let sp1 = space(&g1);
        assert!(determines_all(&sp1, &[[0, 1, 4].iter().collect(), [2, 3, 4].iter().collect()]).unwrap());
    }
}

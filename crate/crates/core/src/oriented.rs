//! Signed circuits, oriented matroids and enumeration of all orientations of
//! a matroid.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::budget::Budget;
use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// A signed subset `(X⁺, X⁻)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedSet {
    pub pos: ElementSet,
    pub neg: ElementSet,
}

impl SignedSet {
    pub fn new(pos: ElementSet, neg: ElementSet) -> Result<SignedSet> {
        if pos.intersects(neg) {
            return Err(Error::BadParameters(format!(
                "signed set with overlapping parts {pos:?} / {neg:?}"
            )));
        }
        if pos.is_empty() && neg.is_empty() {
            return Err(Error::EmptyCircuit);
        }
        Ok(SignedSet { pos, neg })
    }

    /// The signing of `support` whose negative part is `neg`.
    pub fn from_neg(support: ElementSet, neg: ElementSet) -> SignedSet {
        SignedSet {
            pos: support.difference(neg),
            neg,
        }
    }

    pub fn support(self) -> ElementSet {
        self.pos.union(self.neg)
    }

    pub fn negate(self) -> SignedSet {
        SignedSet {
            pos: self.neg,
            neg: self.pos,
        }
    }

    /// `+1`, `-1` or `0`.
    pub fn sign(self, e: usize) -> i8 {
        if self.pos.contains(e) {
            1
        } else if self.neg.contains(e) {
            -1
        } else {
            0
        }
    }

    /// The member of `{X, -X}` whose smallest element is positive.
    pub fn canonical(self) -> SignedSet {
        match self.support().first() {
            Some(m) if self.neg.contains(m) => self.negate(),
            _ => self,
        }
    }

    /// Reverses the signs on `a`.
    pub fn reorient(self, a: ElementSet) -> SignedSet {
        SignedSet {
            pos: self.pos.difference(a).union(self.neg.intersection(a)),
            neg: self.neg.difference(a).union(self.pos.intersection(a)),
        }
    }

    /// `self⁺ ⊆ p` and `self⁻ ⊆ n`.
    pub fn conforms(self, p: ElementSet, n: ElementSet) -> bool {
        self.pos.is_subset(p) && self.neg.is_subset(n)
    }
}

impl fmt::Debug for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Elements printed 1-based, negative ones with a leading `-`.
impl fmt::Display for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.support().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            if self.neg.contains(e) {
                write!(f, "-")?;
            }
            write!(f, "{}", e + 1)?;
        }
        write!(f, "}}")
    }
}

/// Canonical negative part of circuit `c` after reversing the signs on `a`.
#[inline]
pub(crate) fn reorient_neg(c: ElementSet, neg: ElementSet, a: ElementSet) -> ElementSet {
    let flipped = neg.symmetric_difference(a.intersection(c));
    if flipped.contains(c.first().unwrap()) {
        c.difference(flipped)
    } else {
        flipped
    }
}

/// An orientation of a matroid: one canonical signed representative per
/// circuit, stored as the negative part (index-aligned with the circuits).
#[derive(Clone, Debug)]
pub struct OrientedMatroid {
    matroid: Arc<Matroid>,
    negs: Vec<ElementSet>,
}

impl PartialEq for OrientedMatroid {
    fn eq(&self, other: &Self) -> bool {
        *self.matroid == *other.matroid && self.negs == other.negs
    }
}

impl Eq for OrientedMatroid {}

impl OrientedMatroid {
    /// Validates a signing (any member of each `±` pair, in any order) and
    /// checks signed elimination over the full `±` closure.
    pub fn validate_signed(m: &Matroid, signing: &[SignedSet]) -> Result<OrientedMatroid> {
        let negs = Self::align(m, signing)?;
        let om = OrientedMatroid {
            matroid: Arc::new(m.clone()),
            negs,
        };
        om.check_elimination()?;
        Ok(om)
    }

    /// Same as [`OrientedMatroid::validate_signed`] without the elimination
    /// check. For signings that are valid by construction.
    pub fn from_signing_unchecked(m: Arc<Matroid>, signing: &[SignedSet]) -> Result<OrientedMatroid> {
        let negs = Self::align(&m, signing)?;
        Ok(OrientedMatroid { matroid: m, negs })
    }

    pub(crate) fn from_negs(matroid: Arc<Matroid>, negs: Vec<ElementSet>) -> OrientedMatroid {
        debug_assert_eq!(matroid.num_circuits(), negs.len());
        OrientedMatroid { matroid, negs }
    }

    fn align(m: &Matroid, signing: &[SignedSet]) -> Result<Vec<ElementSet>> {
        let mut negs = vec![None; m.num_circuits()];
        for s in signing {
            if s.pos.intersects(s.neg) {
                return Err(Error::BadParameters(format!("signed set {s} has overlapping parts")));
            }
            let Some(i) = m.circuit_index(s.support()) else {
                return Err(Error::UnderlyingMismatch {
                    signed: s.to_string(),
                    expected: s.support(),
                });
            };
            let c = s.canonical();
            match negs[i] {
                Some(prev) if prev != c.neg => {
                    return Err(Error::BadParameters(format!("circuit {:?} signed twice", m.circuits()[i])))
                }
                _ => negs[i] = Some(c.neg),
            }
        }
        negs.into_iter()
            .enumerate()
            .map(|(i, n)| {
                n.ok_or_else(|| Error::UnderlyingMismatch {
                    signed: "(missing)".into(),
                    expected: m.circuits()[i],
                })
            })
            .collect()
    }

    fn check_elimination(&self) -> Result<()> {
        let m = &*self.matroid;
        for check in elimination_checks(m) {
            let get = |i: usize| SignedSet::from_neg(m.circuits()[i], self.negs[i]);
            if !check.holds(&get) {
                return Err(Error::SignedEliminationFailure {
                    first: get(check.x).to_string(),
                    second: get(check.y).to_string(),
                    element: check.e,
                });
            }
        }
        Ok(())
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn matroid_arc(&self) -> &Arc<Matroid> {
        &self.matroid
    }

    /// Canonical negative parts, aligned with `matroid().circuits()`.
    pub fn negs(&self) -> &[ElementSet] {
        &self.negs
    }

    pub fn signed(&self, i: usize) -> SignedSet {
        SignedSet::from_neg(self.matroid.circuits()[i], self.negs[i])
    }

    pub fn signed_circuits(&self) -> Vec<SignedSet> {
        (0..self.negs.len()).map(|i| self.signed(i)).collect()
    }

    /// Signed version of circuit `c`.
    pub fn sign_of(&self, c: ElementSet) -> Result<SignedSet> {
        self.matroid
            .circuit_index(c)
            .map(|i| self.signed(i))
            .ok_or(Error::NotACircuit(c))
    }

    pub fn reorient(&self, a: ElementSet) -> OrientedMatroid {
        let cs = self.matroid.circuits();
        let negs = cs
            .iter()
            .zip(&self.negs)
            .map(|(&c, &n)| reorient_neg(c, n, a))
            .collect();
        OrientedMatroid {
            matroid: self.matroid.clone(),
            negs,
        }
    }

    /// The orbit under all `2^n` reorientations.
    pub fn reorientation_class(&self, budget: &Budget) -> Result<Vec<OrientedMatroid>> {
        let n = self.matroid.n();
        if n >= 40 || (1usize << n) > budget.orientations.saturating_mul(2) {
            return Err(Error::BudgetExceeded(format!("2^{n} reorientations")));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for bits in 0u128..(1u128 << n) {
            let r = self.reorient(ElementSet::from_bits(bits));
            if seen.insert(r.negs.clone()) {
                out.push(r);
            }
        }
        out.sort_by(|a, b| a.negs.cmp(&b.negs));
        Ok(out)
    }
}

/// One instance of weak signed elimination: circuits `x`, `y` sharing `e`,
/// oriented so that `e ∈ X⁺ ∩ Y⁻`; some candidate (or its negative) must
/// conform to `((X⁺∪Y⁺)∖e, (X⁻∪Y⁻)∖e)`. Swapping or negating both circuits
/// gives the same requirement, so one check per pair and element suffices.
#[derive(Clone, Debug)]
pub(crate) struct ElimCheck {
    pub x: usize,
    pub y: usize,
    pub e: usize,
    pub candidates: Vec<usize>,
}

impl ElimCheck {
    pub fn holds(&self, get: &dyn Fn(usize) -> SignedSet) -> bool {
        let mut xs = get(self.x);
        if xs.neg.contains(self.e) {
            xs = xs.negate();
        }
        let mut ys = get(self.y);
        if ys.pos.contains(self.e) {
            ys = ys.negate();
        }
        let p = xs.pos.union(ys.pos).without(self.e);
        let n = xs.neg.union(ys.neg).without(self.e);
        self.candidates.iter().any(|&z| {
            let zs = get(z);
            zs.conforms(p, n) || zs.negate().conforms(p, n)
        })
    }
}

pub(crate) fn elimination_checks(m: &Matroid) -> Vec<ElimCheck> {
    let cs = m.circuits();
    let mut out = Vec::new();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            let common = cs[i].intersection(cs[j]);
            if common.is_empty() {
                continue;
            }
            let union = cs[i].union(cs[j]);
            for e in common.iter() {
                let target = union.without(e);
                let candidates = (0..cs.len()).filter(|&k| cs[k].is_subset(target)).collect();
                out.push(ElimCheck {
                    x: i,
                    y: j,
                    e,
                    candidates,
                });
            }
        }
    }
    out
}

/// All orientations of a connected matroid together with their
/// reorientation classes.
#[derive(Clone, Debug)]
pub struct OrientationSpace {
    matroid: Arc<Matroid>,
    negs: Vec<Vec<ElementSet>>,
    class_of: Vec<usize>,
    reps: Vec<usize>,
    index: HashMap<Vec<ElementSet>, usize>,
}

impl OrientationSpace {
    pub fn new(m: &Matroid, budget: &Budget) -> Result<OrientationSpace> {
        Self::from_arc(Arc::new(m.clone()), budget)
    }

    pub fn from_arc(m: Arc<Matroid>, budget: &Budget) -> Result<OrientationSpace> {
        let n = m.n();
        if !m.is_connected() {
            return Err(Error::NotConnected);
        }
        let per_class = if n == 0 { 1u128 } else { 1u128 << (n - 1) };
        if per_class > budget.orientations as u128 {
            return Err(Error::BudgetExceeded(format!(
                "a reorientation class of a {n}-element matroid has 2^{} members",
                n.saturating_sub(1)
            )));
        }
        let stop_after_one = m.is_binary();
        let normal_forms = search_normal_forms(&m, stop_after_one, budget)?;
        let total = normal_forms.len() as u128 * per_class;
        if total > budget.orientations as u128 {
            return Err(Error::BudgetExceeded(format!("{total} orientations")));
        }
        let cs = m.circuits();
        let fixed = ElementSet::full(n.saturating_sub(1));
        let mut all: Vec<(Vec<ElementSet>, usize)> = Vec::with_capacity(total as usize);
        for (k, nf) in normal_forms.iter().enumerate() {
            for bits in 0..per_class {
                let a = ElementSet::from_bits(bits).intersection(fixed);
                let v = cs.iter().zip(nf).map(|(&c, &neg)| reorient_neg(c, neg, a)).collect();
                all.push((v, k));
            }
        }
        all.sort();
        let mut class_first = vec![usize::MAX; normal_forms.len()];
        let mut negs = Vec::with_capacity(all.len());
        let mut class_of = Vec::with_capacity(all.len());
        for (i, (v, k)) in all.into_iter().enumerate() {
            if class_first[k] == usize::MAX {
                class_first[k] = i;
            }
            negs.push(v);
            class_of.push(k);
        }
        // Renumber classes by their first (smallest) member.
        let mut order: Vec<usize> = (0..normal_forms.len()).collect();
        order.sort_by_key(|&k| class_first[k]);
        let mut renumber = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new;
        }
        for c in class_of.iter_mut() {
            *c = renumber[*c];
        }
        let reps = order.iter().map(|&k| class_first[k]).collect();
        let index = negs.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Ok(OrientationSpace {
            matroid: m,
            negs,
            class_of,
            reps,
            index,
        })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn matroid_arc(&self) -> &Arc<Matroid> {
        &self.matroid
    }

    pub fn len(&self) -> usize {
        self.negs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.negs.is_empty()
    }

    pub fn negs(&self, i: usize) -> &[ElementSet] {
        &self.negs[i]
    }

    pub fn orientation(&self, i: usize) -> OrientedMatroid {
        OrientedMatroid::from_negs(self.matroid.clone(), self.negs[i].clone())
    }

    pub fn orientations(&self) -> Vec<OrientedMatroid> {
        (0..self.len()).map(|i| self.orientation(i)).collect()
    }

    pub fn position(&self, om: &OrientedMatroid) -> Option<usize> {
        self.index.get(om.negs()).copied()
    }

    /// Index of the smallest member of each reorientation class.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    pub fn is_orientable(&self) -> bool {
        !self.negs.is_empty()
    }
}

pub fn enumerate_orientations(m: &Matroid, budget: &Budget) -> Result<Vec<OrientedMatroid>> {
    Ok(OrientationSpace::new(m, budget)?.orientations())
}

pub fn count_reorientation_classes(m: &Matroid, budget: &Budget) -> Result<usize> {
    Ok(OrientationSpace::new(m, budget)?.num_classes())
}

/// Whether `c` is a fundamental circuit of the basis `b`.
pub fn covers(m: &Matroid, c: ElementSet, b: ElementSet) -> Result<bool> {
    if !m.is_basis(b) {
        return Err(Error::NotABasis(b));
    }
    if m.circuit_index(c).is_none() {
        return Err(Error::NotACircuit(c));
    }
    Ok(c.difference(b).len() == 1)
}

/// Relative-sign requirements fixing one signing per reorientation class:
/// for a basis `B0` and a spanning tree of the bipartite graph `b ~ e` iff
/// `b ∈ C(B0, e)`, the tree pairs carry opposite signs in `C(B0, e)`.
fn gauge(m: &Matroid) -> Vec<(usize, usize, usize)> {
    let n = m.n();
    let Some(&b0) = m.bases().first() else {
        return Vec::new();
    };
    let mut adj = vec![Vec::new(); n];
    for e in m.ground().difference(b0).iter() {
        let ci = m.fundamental_circuit_index(b0, e);
        for b in m.circuits()[ci].without(e).iter() {
            adj[e].push((b, ci));
            adj[b].push((e, ci));
        }
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    if n > 0 {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(x) = queue.pop_front() {
        for &(y, ci) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                out.push((ci, x, y));
                queue.push_back(y);
            }
        }
    }
    out
}

/// Backtracking with forward checking over canonical signings, one per
/// circuit, restricted to the gauge-fixed normal forms.
fn search_normal_forms(m: &Matroid, stop_after_one: bool, budget: &Budget) -> Result<Vec<Vec<ElementSet>>> {
    let cs = m.circuits();
    let nc = cs.len();
    if nc == 0 {
        return Ok(vec![Vec::new()]);
    }
    let gauge = gauge(m);
    let mut domains: Vec<Vec<ElementSet>> = Vec::with_capacity(nc);
    let mut total: u128 = 0;
    for (i, &c) in cs.iter().enumerate() {
        let free = c.without(c.first().unwrap());
        if free.len() > 20 {
            return Err(Error::TooLarge(format!("circuit of size {}", c.len())));
        }
        let elems = free.to_vec();
        let mut dom = Vec::with_capacity(1 << elems.len());
        for bits in 0u32..(1u32 << elems.len()) {
            let neg: ElementSet = elems
                .iter()
                .enumerate()
                .filter(|(k, _)| bits >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let ok = gauge
                .iter()
                .filter(|g| g.0 == i)
                .all(|&(_, a, b)| neg.contains(a) != neg.contains(b));
            if ok {
                dom.push(neg);
            }
        }
        total += dom.len() as u128;
        domains.push(dom);
    }
    if total > 50_000_000 {
        return Err(Error::TooLarge(format!("{total} candidate circuit signings")));
    }
    let checks = elimination_checks(m);
    let mut involved: Vec<Vec<usize>> = vec![Vec::new(); nc];
    let mut members: Vec<Vec<usize>> = Vec::with_capacity(checks.len());
    for (k, ch) in checks.iter().enumerate() {
        let mut vs = vec![ch.x, ch.y];
        vs.extend(&ch.candidates);
        vs.sort_unstable();
        vs.dedup();
        for &v in &vs {
            involved[v].push(k);
        }
        members.push(vs);
    }
    let mut st = Search {
        cs,
        checks: &checks,
        involved: &involved,
        members: &members,
        unassigned: members.iter().map(|v| v.len()).collect(),
        assign: vec![None; nc],
        domains,
        trail: Vec::new(),
        out: Vec::new(),
        stop_after_one,
        meter: budget.meter("orientation search"),
    };
    st.run()?;
    let mut out = st.out;
    out.sort();
    Ok(out)
}

struct Search<'a> {
    cs: &'a [ElementSet],
    checks: &'a [ElimCheck],
    involved: &'a [Vec<usize>],
    members: &'a [Vec<usize>],
    unassigned: Vec<usize>,
    assign: Vec<Option<ElementSet>>,
    domains: Vec<Vec<ElementSet>>,
    trail: Vec<(usize, Vec<ElementSet>)>,
    out: Vec<Vec<ElementSet>>,
    stop_after_one: bool,
    meter: crate::budget::Meter,
}

impl Search<'_> {
    fn run(&mut self) -> Result<()> {
        if self.domains.iter().any(|d| d.is_empty()) {
            return Ok(());
        }
        self.rec().map(|_| ())
    }

    /// Returns `Ok(true)` when the search should stop.
    fn rec(&mut self) -> Result<bool> {
        self.meter.tick()?;
        let var = (0..self.cs.len())
            .filter(|&i| self.assign[i].is_none())
            .min_by_key(|&i| (self.domains[i].len(), usize::MAX - self.involved[i].len()));
        let Some(var) = var else {
            self.out.push(self.assign.iter().map(|a| a.unwrap()).collect());
            return Ok(self.stop_after_one);
        };
        let values = self.domains[var].clone();
        for val in values {
            let mark = self.trail.len();
            self.assign[var] = Some(val);
            let ok = self.propagate(var);
            if ok && self.rec()? {
                return Ok(true);
            }
            self.undo(var, mark);
        }
        Ok(false)
    }

    fn value(&self, i: usize, override_var: usize, override_val: ElementSet) -> SignedSet {
        let neg = if i == override_var {
            override_val
        } else {
            self.assign[i].unwrap()
        };
        SignedSet::from_neg(self.cs[i], neg)
    }

    fn propagate(&mut self, var: usize) -> bool {
        let mut ok = true;
        for &k in &self.involved[var] {
            self.unassigned[k] -= 1;
            if !ok || self.unassigned[k] != 1 {
                continue;
            }
            let u = *self.members[k]
                .iter()
                .find(|&&v| self.assign[v].is_none())
                .unwrap();
            let check = &self.checks[k];
            let kept: Vec<ElementSet> = self.domains[u]
                .iter()
                .copied()
                .filter(|&val| check.holds(&|i| self.value(i, u, val)))
                .collect();
            if kept.len() != self.domains[u].len() {
                let old = std::mem::replace(&mut self.domains[u], kept);
                self.trail.push((u, old));
                if self.domains[u].is_empty() {
                    ok = false;
                }
            }
        }
        ok
    }

    fn undo(&mut self, var: usize, mark: usize) {
        for &k in &self.involved[var] {
            self.unassigned[k] += 1;
        }
        while self.trail.len() > mark {
            let (u, old) = self.trail.pop().unwrap();
            self.domains[u] = old;
        }
        self.assign[var] = None;
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn ss(xs: &[i32]) -> SignedSet {
        let mut pos = ElementSet::EMPTY;
        let mut neg = ElementSet::EMPTY;
        for &x in xs {
            if x > 0 {
                pos.insert(x as usize - 1);
            } else {
                neg.insert((-x) as usize - 1);
            }
        }
        SignedSet { pos, neg }
    }

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n).unwrap()
    }

    fn m1() -> OrientedMatroid {
        OrientedMatroid::validate_signed(
            &u(2, 4),
            &[ss(&[1, 2, -3]), ss(&[1, 2, -4]), ss(&[1, 3, -4]), ss(&[-2, 3, -4])],
        )
        .unwrap()
    }

    fn m2() -> OrientedMatroid {
        OrientedMatroid::validate_signed(
            &u(2, 4),
            &[ss(&[1, -2, 3]), ss(&[1, 2, -4]), ss(&[1, 3, -4]), ss(&[2, -3, -4])],
        )
        .unwrap()
    }

    #[test]
    fn signed_set_basics() {
        let x = ss(&[-1, 2, 3]);
        assert_eq!(x.canonical(), ss(&[1, -2, -3]));
        assert_eq!(x.to_string(), "{-1,2,3}");
        assert_eq!(x.reorient(ElementSet::singleton(0)), ss(&[1, 2, 3]));
        assert_eq!(x.sign(1), 1);
    }

    #[test]
    fn u24_examples_validate() {
        let a = m1();
        let b = m2();
        assert_ne!(a, b);
        let bad = OrientedMatroid::validate_signed(
            &u(2, 4),
            &[ss(&[1, 2, 3]), ss(&[1, 2, 4]), ss(&[1, 3, 4]), ss(&[2, 3, 4])],
        );
        assert!(matches!(bad, Err(Error::SignedEliminationFailure { .. })));
        let mismatch = OrientedMatroid::validate_signed(&u(2, 4), &[ss(&[1, 2])]);
        assert!(matches!(mismatch, Err(Error::UnderlyingMismatch { .. })));
    }

    #[test]
    fn m1_and_m2_not_reorientations() {
        let a = m1();
        let b = m2();
        for bits in 0u128..16 {
            assert_ne!(a.reorient(ElementSet::from_bits(bits)), b);
        }
        assert_eq!(a.reorient(ElementSet::full(4)), a);
        assert_eq!(a.reorient(ElementSet::EMPTY), a);
    }

    /// Oracle: every combination of canonical signings, filtered by the
    /// elimination axiom.
    fn brute_force_count(m: &Matroid) -> usize {
        let cs = m.circuits();
        let sizes: Vec<usize> = cs.iter().map(|c| c.len() - 1).collect();
        let total_bits: usize = sizes.iter().sum();
        let mut count = 0;
        for code in 0u64..(1u64 << total_bits) {
            let mut shift = 0;
            let mut signing = Vec::new();
            for (c, &s) in cs.iter().zip(&sizes) {
                let bits = (code >> shift) & ((1 << s) - 1);
                shift += s;
                let free = c.without(c.first().unwrap()).to_vec();
                let neg: ElementSet = free
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| bits >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                signing.push(SignedSet::from_neg(*c, neg));
            }
            if OrientedMatroid::validate_signed(m, &signing).is_ok() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let b = Budget::default();
        for (r, n) in [(2, 3), (2, 4), (1, 3), (3, 4), (3, 5)] {
            let m = u(r, n);
            assert_eq!(
                enumerate_orientations(&m, &b).unwrap().len(),
                brute_force_count(&m),
                "U_{r},{n}"
            );
        }
        assert_eq!(enumerate_orientations(&u(2, 3), &b).unwrap().len(), 4);
        assert_eq!(enumerate_orientations(&u(2, 4), &b).unwrap().len(), 24);
    }

    #[test]
    fn classes() {
        let b = Budget::default();
        assert_eq!(count_reorientation_classes(&u(2, 4), &b).unwrap(), 3);
        assert_eq!(count_reorientation_classes(&u(2, 5), &b).unwrap(), 12);
        let space = OrientationSpace::new(&u(2, 3), &b).unwrap();
        let om = space.orientation(0);
        assert_eq!(om.reorientation_class(&b).unwrap().len(), 4);
    }

    #[test]
    fn graph_matroid_counts() {
        use crate::graph::Graph;
        let b = Budget::default();
        assert!(enumerate_orientations(&Matroid::fano(), &b).unwrap().is_empty());
        let cases = [
            (Graph::diamond(), false, 16),
            (Graph::complete(4).unwrap(), false, 32),
            (Graph::complete(4).unwrap(), true, 32),
            (Graph::complete_bipartite(2, 4).unwrap(), false, 128),
            (Graph::complete_bipartite(2, 4).unwrap(), true, 128),
            (Graph::hypercube(3).unwrap(), false, 2048),
            (Graph::hypercube(3).unwrap(), true, 2048),
        ];
        for (g, dual, count) in cases {
            let m = if dual {
                g.cographic_matroid(10_000).unwrap()
            } else {
                g.graphic_matroid(10_000).unwrap()
            };
            let t = std::time::Instant::now();
            let space = OrientationSpace::new(&m, &b).unwrap();
            eprintln!("{} circuits: {:?}", m.num_circuits(), t.elapsed());
            assert_eq!(space.len(), count);
            assert_eq!(space.num_classes(), 1);
        }
    }

    #[test]
    fn covers_predicate() {
        let m = u(2, 4);
        let c: ElementSet = [0, 1, 2].iter().collect();
        assert!(covers(&m, c, [0, 1].iter().collect()).unwrap());
        assert!(!covers(&m, c, [0, 3].iter().collect()).unwrap());
    }
}

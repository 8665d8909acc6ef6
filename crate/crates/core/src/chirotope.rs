//! Basis orientations: propagation along basis exchanges, determinant signs of
//! vector configurations, and invertible bases.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::element_set::{for_each_k_subset, ElementSet};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::oriented::{OrientationSpace, OrientedMatroid, SignedSet};

/// Signs of the sorted bases of a matroid. Values on ordered tuples follow
/// by alternation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chirotope {
    bases: Arc<Vec<ElementSet>>,
    index: Arc<HashMap<ElementSet, usize>>,
    signs: Vec<i8>,
}

impl Chirotope {
    pub fn new(bases: Vec<ElementSet>, signs: Vec<i8>) -> Chirotope {
        assert_eq!(bases.len(), signs.len());
        let index = bases.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        Chirotope {
            bases: Arc::new(bases),
            index: Arc::new(index),
            signs,
        }
    }

    fn with_signs(&self, signs: Vec<i8>) -> Chirotope {
        Chirotope {
            bases: self.bases.clone(),
            index: self.index.clone(),
            signs,
        }
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Sign of a sorted basis, 0 for a non-basis.
    pub fn value(&self, b: ElementSet) -> i8 {
        self.index.get(&b).map_or(0, |&i| self.signs[i])
    }

    /// Value on an ordered tuple of distinct elements.
    pub fn value_ordered(&self, tuple: &[usize]) -> i8 {
        let set: ElementSet = tuple.iter().collect();
        if set.len() != tuple.len() {
            return 0;
        }
        let mut inversions = 0;
        for i in 0..tuple.len() {
            for j in i + 1..tuple.len() {
                if tuple[i] > tuple[j] {
                    inversions += 1;
                }
            }
        }
        let v = self.value(set);
        if inversions % 2 == 1 {
            -v
        } else {
            v
        }
    }

    /// Scaled so that the first basis is positive.
    pub fn normalized(&self) -> Chirotope {
        match self.signs.first() {
            Some(&-1) => self.with_signs(self.signs.iter().map(|s| -s).collect()),
            _ => self.clone(),
        }
    }

    pub fn equal_up_to_sign(&self, other: &Chirotope) -> bool {
        self.bases == other.bases && self.normalized().signs == other.normalized().signs
    }

    /// The sign map with the value on `b` reversed.
    pub fn flipped(&self, b: ElementSet) -> Chirotope {
        let mut signs = self.signs.clone();
        if let Some(&i) = self.index.get(&b) {
            signs[i] = -signs[i];
        }
        self.with_signs(signs)
    }

    /// Whether every 3-term Grassmann–Plücker relation containing `b` holds.
    /// With `flip` the relations are evaluated as if `χ(b)` were reversed.
    pub fn gp_holds_at(&self, b: ElementSet, n: usize, flip: bool) -> bool {
        let r = b.len();
        if r < 2 {
            return true;
        }
        let outside = ElementSet::full(n).difference(b).to_vec();
        let val = |s: ElementSet| -> i8 {
            let v = self.value(s);
            if flip && s == b {
                -v
            } else {
                v
            }
        };
        // χ on the tuple (X sorted, p, q)
        let chi = |x: ElementSet, p: usize, q: usize| -> i8 {
            let v = val(x.with(p).with(q));
            if v == 0 {
                return 0;
            }
            let inv = x.len() - x.rank_of(p) + x.len() - x.rank_of(q) + usize::from(p > q);
            if inv % 2 == 1 {
                -v
            } else {
                v
            }
        };
        let bv = b.to_vec();
        for i in 0..r {
            for j in i + 1..r {
                let (a, bb) = (bv[i], bv[j]);
                let x = b.without(a).without(bb);
                for k in 0..outside.len() {
                    for l in k + 1..outside.len() {
                        let (c, d) = (outside[k], outside[l]);
                        let t1 = chi(x, a, bb) * chi(x, c, d);
                        let t2 = -chi(x, a, c) * chi(x, bb, d);
                        let t3 = chi(x, a, d) * chi(x, bb, c);
                        let ts = [t1, t2, t3];
                        let all_zero = ts.iter().all(|&t| t == 0);
                        let mixed = ts.contains(&1) && ts.contains(&-1);
                        if !all_zero && !mixed {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Every 3-term Grassmann–Plücker relation holds.
    pub fn satisfies_gp(&self, n: usize) -> bool {
        self.bases.iter().all(|&b| self.gp_holds_at(b, n, false))
    }
}

/// Propagates `χ(B0) = +1` along basis exchanges using fundamental-circuit
/// signs, and verifies every exchange edge.
///
/// For bases `B' = R + e'` and `B = R + e`, with `σ` the signs of `C(B', e)`:
/// `χ(e, R) = -σ(e) σ(e') χ(e', R)`.
pub fn chirotope_of(om: &OrientedMatroid) -> Result<Chirotope> {
    let m = om.matroid();
    let bases = m.bases();
    let index: HashMap<ElementSet, usize> = bases.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let mut signs = vec![0i8; bases.len()];
    if bases.is_empty() {
        return Ok(Chirotope::new(bases, signs));
    }
    signs[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    let mut seen = vec![false; bases.len()];
    seen[0] = true;
    let ground = m.ground();
    while let Some(i) = queue.pop_front() {
        let bp = bases[i];
        for e in ground.difference(bp).iter() {
            let ci = m.fundamental_circuit_index(bp, e);
            let sc: SignedSet = om.signed(ci);
            for ep in sc.support().without(e).iter() {
                let b = bp.without(ep).with(e);
                let p = b.rank_of(e);
                let pp = bp.rank_of(ep);
                let mut v = -sc.sign(e) * sc.sign(ep) * signs[i];
                if (p + pp) % 2 == 1 {
                    v = -v;
                }
                let j = index[&b];
                if seen[j] {
                    if signs[j] != v {
                        return Err(Error::InconsistentPropagation(b));
                    }
                } else {
                    seen[j] = true;
                    signs[j] = v;
                    queue.push_back(j);
                }
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::NotConnected);
    }
    Ok(Chirotope::new(bases, signs))
}

/// Exact determinant by fraction-free elimination.
pub fn determinant(rows: &[Vec<i128>]) -> i128 {
    let n = rows.len();
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&p| a[p][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Uniform oriented matroid of a vector configuration in general position:
/// `χ(B)` is the sign of the determinant of the columns of `B` (sorted) and a
/// circuit `c_0 < .. < c_r` has coefficients `(-1)^i det(C - c_i)`.
pub fn chirotope_from_vectors(vectors: &[Vec<i64>]) -> Result<(Chirotope, OrientedMatroid)> {
    let n = vectors.len();
    let Some(r) = vectors.first().map(|v| v.len()) else {
        return Err(Error::BadParameters("empty configuration".into()));
    };
    if r == 0 || r > n || vectors.iter().any(|v| v.len() != r) {
        return Err(Error::BadParameters("vectors must share a length r with 1 ≤ r ≤ n".into()));
    }
    let det_of = |s: ElementSet| -> i128 {
        let cols: Vec<Vec<i128>> = s.iter().map(|i| vectors[i].iter().map(|&x| x as i128).collect()).collect();
        determinant(&cols)
    };
    let mut bases = Vec::new();
    let mut signs = Vec::new();
    let mut dets = HashMap::new();
    let mut degenerate = None;
    for_each_k_subset(n, r, |s| {
        let d = det_of(s);
        if d == 0 && degenerate.is_none() {
            degenerate = Some(s);
        }
        dets.insert(s, d.signum() as i8);
        bases.push(s);
        signs.push(d.signum() as i8);
    });
    if let Some(s) = degenerate {
        return Err(Error::DegenerateConfiguration(s));
    }
    let m = Arc::new(Matroid::uniform(r, n)?);
    let mut signing = Vec::with_capacity(m.num_circuits());
    for &c in m.circuits() {
        let mut pos = ElementSet::EMPTY;
        let mut neg = ElementSet::EMPTY;
        for (i, e) in c.iter().enumerate() {
            let mut s = dets[&c.without(e)];
            if i % 2 == 1 {
                s = -s;
            }
            if s > 0 {
                pos.insert(e);
            } else {
                neg.insert(e);
            }
        }
        signing.push(SignedSet { pos, neg });
    }
    let om = OrientedMatroid::from_signing_unchecked(m, &signing)?;
    bases.sort();
    let signs = bases.iter().map(|b| dets[b]).collect();
    Ok((Chirotope::new(bases, signs), om))
}

/// Normalized chirotopes of every orientation in the space.
pub fn all_chirotopes(space: &OrientationSpace) -> Result<Vec<Chirotope>> {
    (0..space.len())
        .map(|i| chirotope_of(&space.orientation(i)).map(|c| c.normalized()))
        .collect()
}

/// Bases whose sign can be reversed alone, decided by membership: the
/// flipped sign map must be the chirotope of an enumerated orientation.
pub fn invertible_bases(om: &OrientedMatroid, known: &HashSet<Vec<i8>>) -> Result<Vec<ElementSet>> {
    let chi = chirotope_of(om)?;
    Ok(chi
        .bases()
        .iter()
        .copied()
        .filter(|&b| known.contains(chi.flipped(b).normalized().signs()))
        .collect())
}

/// The set of normalized sign vectors, for [`invertible_bases`].
pub fn chirotope_set(space: &OrientationSpace) -> Result<HashSet<Vec<i8>>> {
    Ok(all_chirotopes(space)?.into_iter().map(|c| c.signs).collect())
}

/// Bases whose reversal keeps every 3-term Grassmann–Plücker relation.
pub fn invertible_bases_gp(chi: &Chirotope, n: usize) -> Vec<ElementSet> {
    chi.bases()
        .iter()
        .copied()
        .filter(|&b| chi.gp_holds_at(b, n, true))
        .collect()
}

//! Explicit covers of hypercubes and complete graphs, the alternating
//! determining sets of corank-2 uniform oriented matroids, and the
//! grid-plus-diagonals line arrangement.
//!
//! Every graph construction returns a certificate that has already been
//! re-verified; a failed check is an error, never a silent output.

use crate::budget::{Budget, Meter};
use crate::certificate::{CoverCertificate, CoverKind};
use crate::chirotope::{chirotope_from_vectors, invertible_bases_gp, Chirotope};
use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oriented::{OrientedMatroid, SignedSet};

fn bad(msg: String) -> Error {
    Error::BadParameters(msg)
}

fn certify(g: &Graph, cert: CoverCertificate) -> Result<CoverCertificate> {
    cert.verify(g)?;
    Ok(cert)
}

/// Edges of the closed walk through `vs`.
fn cycle_edges(g: &Graph, vs: &[usize]) -> Result<ElementSet> {
    let mut out = path_edges(g, vs)?;
    let (a, b) = (vs[vs.len() - 1], vs[0]);
    out.insert(g.edge_between(a, b).ok_or_else(|| bad(format!("no edge {a}-{b}")))?);
    Ok(out)
}

fn path_edges(g: &Graph, vs: &[usize]) -> Result<ElementSet> {
    let mut out = ElementSet::EMPTY;
    for w in vs.windows(2) {
        out.insert(g.edge_between(w[0], w[1]).ok_or_else(|| bad(format!("no edge {}-{}", w[0], w[1])))?);
    }
    Ok(out)
}

// ---------------------------------------------------------------- hypercube

fn hypercube_checked(n: usize, lo: usize) -> Result<Graph> {
    if n < lo || n > 5 {
        return Err(bad(format!("hypercube dimension must be in {lo}..=5 (edge sets hold 128 edges), got {n}")));
    }
    Graph::hypercube(n)
}

/// Vertices of `Q_d` reachable from `start` without using `cut`.
fn side_of(g: &Graph, cut: ElementSet, start: usize) -> u64 {
    let keep = g.all_edges().difference(cut);
    let reach = g.reach(start, keep, ElementSet::full(g.v()));
    reach.iter().fold(0u64, |a, v| a | 1 << v)
}

/// Edges of `g` with both ends in `side` (a vertex bitmask).
fn induced(g: &Graph, side: u64) -> ElementSet {
    (0..g.m())
        .filter(|&i| {
            let (a, b) = g.edge(i);
            side >> a & 1 == 1 && side >> b & 1 == 1
        })
        .collect()
}

/// Two bonds partitioning `E(Q_n)`, built by doubling from the two perfect
/// matchings of `Q_2`.
pub fn qn_bond_partition(n: usize) -> Result<CoverCertificate> {
    let g = hypercube_checked(n, 2)?;
    // Each bond is stored as the vertex side containing 0.
    let q2 = Graph::hypercube(2)?;
    let m0: ElementSet = (0..4).filter(|&x| x & 1 == 0).map(|x| q2.edge_between(x, x | 1).unwrap()).collect();
    let m1 = q2.all_edges().difference(m0);
    let mut sides = [side_of(&q2, m0, 0), side_of(&q2, m1, 0)];
    for d in 3..=n {
        let gd = Graph::hypercube(d)?;
        let half = 1usize << (d - 1);
        let low_mask = (1u64 << half) - 1;
        let c = |j: usize, i: usize| if i == 1 { sides[j] } else { !sides[j] & low_mask };
        let up = |s: u64| s << half;
        let matching = |a: u64, b: u64| -> ElementSet {
            let both = a & b;
            (0..half)
                .filter(|&x| both >> x & 1 == 1)
                .map(|x| gd.edge_between(x, x + half).unwrap())
                .collect()
        };
        let e1 = induced(&gd, c(0, 1))
            .union(matching(c(0, 1) & c(1, 1), c(0, 1) & c(1, 1)))
            .union(induced(&gd, up(c(1, 1))));
        let e2 = induced(&gd, c(0, 2))
            .union(matching(c(0, 2) & c(1, 2), c(0, 2) & c(1, 2)))
            .union(induced(&gd, up(c(1, 2))));
        let e3 = induced(&gd, c(1, 2))
            .union(matching(c(0, 1) & c(1, 2), c(0, 1) & c(1, 2)))
            .union(induced(&gd, up(c(0, 1))));
        let e4 = induced(&gd, c(1, 1))
            .union(matching(c(0, 2) & c(1, 1), c(0, 2) & c(1, 1)))
            .union(induced(&gd, up(c(0, 2))));
        let (b1, b2) = (e1.union(e2), e3.union(e4));
        sides = [side_of(&gd, b1, 0), side_of(&gd, b2, 0)];
        if d == n {
            return certify(&g, CoverCertificate::new(CoverKind::BondPartition, &format!("Q{n}"), vec![b1, b2], false));
        }
    }
    let b = [g.cut(ElementSet::from_bits(sides[0] as u128)), g.cut(ElementSet::from_bits(sides[1] as u128))];
    certify(&g, CoverCertificate::new(CoverKind::BondPartition, "Q2", b.to_vec(), false))
}

/// The bond partition plus a third bond meeting both parts.
pub fn qn_connected_bond_cover(n: usize) -> Result<CoverCertificate> {
    let g = hypercube_checked(n, 2)?;
    let part = qn_bond_partition(n)?.members;
    let third = (0..n)
        .map(|dir| g.cut((0..g.v()).filter(|x| x >> dir & 1 == 0).collect()))
        .find(|b| !part.contains(b))
        .unwrap_or_else(|| g.cut(ElementSet::singleton(0)));
    let mut members = part;
    members.push(third);
    certify(&g, CoverCertificate::new(CoverKind::BondCover, &format!("Q{n}"), members, true))
}

/// Depth-first search for Hamiltonian cycles through vertex 0 that contain
/// every edge of `forced`; `accept` decides whether to stop.
fn hamiltonian_search(
    g: &Graph,
    forced: ElementSet,
    meter: &Meter,
    accept: &mut dyn FnMut(ElementSet) -> bool,
) -> Result<Option<ElementSet>> {
    struct St<'a> {
        g: &'a Graph,
        forced: ElementSet,
        path: Vec<usize>,
        on: Vec<bool>,
        edges: ElementSet,
    }
    fn forced_at(st: &St, x: usize) -> Vec<(usize, usize)> {
        st.g.incident(x).iter().copied().filter(|&(_, i)| st.forced.contains(i)).collect()
    }
    fn rec(st: &mut St, meter: &Meter, accept: &mut dyn FnMut(ElementSet) -> bool) -> Result<Option<ElementSet>> {
        meter.tick()?;
        let x = *st.path.last().unwrap();
        let fx = forced_at(st, x);
        let in_edge = if st.path.len() >= 2 {
            st.g.edge_between(st.path[st.path.len() - 2], x)
        } else {
            None
        };
        let in_forced = in_edge.is_some_and(|i| st.forced.contains(i));
        let need: Option<usize> = match (in_edge.is_some(), in_forced, fx.len()) {
            (true, false, 2) => return Ok(None),
            (true, false, 1) => Some(fx[0].1),
            (true, true, 2) => fx.iter().map(|&(_, i)| i).find(|&i| Some(i) != in_edge),
            _ => None,
        };
        if st.path.len() == st.g.v() {
            let Some(close) = st.g.edge_between(x, st.path[0]) else {
                return Ok(None);
            };
            if need.is_some_and(|i| i != close) {
                return Ok(None);
            }
            let cyc = st.edges.with(close);
            if !st.forced.is_subset(cyc) {
                return Ok(None);
            }
            return Ok(if accept(cyc) { Some(cyc) } else { None });
        }
        let nbrs: Vec<(usize, usize)> = st.g.incident(x).to_vec();
        for (y, i) in nbrs {
            if st.on[y] || need.is_some_and(|k| k != i) {
                continue;
            }
            st.on[y] = true;
            st.path.push(y);
            st.edges.insert(i);
            if let Some(c) = rec(st, meter, accept)? {
                return Ok(Some(c));
            }
            st.edges.remove(i);
            st.path.pop();
            st.on[y] = false;
        }
        Ok(None)
    }
    let mut on = vec![false; g.v()];
    on[0] = true;
    let mut st = St {
        g,
        forced,
        path: vec![0],
        on,
        edges: ElementSet::EMPTY,
    };
    rec(&mut st, meter, accept)
}

/// Partition of `E(Q_n)` (n even, 2 ≤ n ≤ 4) into `n/2` Hamiltonian cycles.
pub fn qn_hamiltonian_decomposition(n: usize, budget: &Budget) -> Result<Vec<ElementSet>> {
    let g = Graph::hypercube(n)?;
    match n {
        2 => Ok(vec![g.all_edges()]),
        4 => {
            let all = g.all_edges();
            let meter = budget.meter("hamiltonian decomposition");
            let mut ok = |c: ElementSet| crate::certificate::is_cycle(&g, all.difference(c)) && all.difference(c).len() == g.v();
            let h = hamiltonian_search(&g, ElementSet::EMPTY, &meter, &mut ok)?
                .ok_or_else(|| Error::ConstructionCheckFailed("Q4 has no Hamiltonian decomposition".into()))?;
            Ok(vec![h, all.difference(h)])
        }
        _ => Err(bad(format!("Hamiltonian decompositions are only searched for n ∈ {{2, 4}}, got {n}"))),
    }
}

/// Connected cover of `Q_n` by `⌈(n+1)/2⌉` cycles, for `3 ≤ n ≤ 5`.
pub fn qn_connected_cycle_cover(n: usize, budget: &Budget) -> Result<CoverCertificate> {
    let g = hypercube_checked(n, 3)?;
    let meter = budget.meter("hypercube cycle cover");
    let members = if n.is_multiple_of(2) {
        let mut p = qn_hamiltonian_decomposition(n, budget)?;
        let x: ElementSet = (0..g.v()).filter(|x| x & 1 == 0).map(|x| g.edge_between(x, x | 1).unwrap()).collect();
        let ext = hamiltonian_search(&g, x, &meter, &mut |_| true)?
            .ok_or_else(|| Error::ConstructionCheckFailed("no Hamiltonian cycle through the matching".into()))?;
        p.push(ext);
        p
    } else {
        odd_cycle_cover(n, &g, budget, &meter)?
    };
    certify(&g, CoverCertificate::new(CoverKind::CycleCover, &format!("Q{n}"), members, true))
}

fn odd_cycle_cover(n: usize, g: &Graph, budget: &Budget, meter: &Meter) -> Result<Vec<ElementSet>> {
    let low = Graph::hypercube(n - 1)?;
    let part = qn_hamiltonian_decomposition(n - 1, budget)?;
    let top = 1usize << (n - 1);
    let dir = n - 2;
    let lift = |i: usize, shift: usize| {
        let (a, b) = low.edge(i);
        g.edge_between(a + shift, b + shift).unwrap()
    };
    // One edge of X_{n-1} from each cycle: the least index.
    let mut x_edges = Vec::new();
    let mut joined = Vec::new();
    for c in &part {
        let i = c
            .iter()
            .find(|&i| {
                let (a, b) = low.edge(i);
                a ^ b == 1 << dir
            })
            .ok_or_else(|| Error::ConstructionCheckFailed("cycle misses the coordinate matching".into()))?;
        let (v, w) = low.edge(i);
        x_edges.push((v, w));
        let mut cc: ElementSet = c.iter().filter(|&j| j != i).flat_map(|j| [lift(j, 0), lift(j, top)]).collect();
        cc.insert(g.edge_between(v, v + top).unwrap());
        cc.insert(g.edge_between(w, w + top).unwrap());
        joined.push(cc);
    }
    let on_x = |u: usize| x_edges.iter().any(|&(v, w)| u == v || u == w);
    let mut rest = ElementSet::EMPTY;
    for &(v, w) in &x_edges {
        rest.insert(g.edge_between(v, w).unwrap());
        rest.insert(g.edge_between(v + top, w + top).unwrap());
    }
    for u in (0..top).filter(|&u| !on_x(u)) {
        rest.insert(g.edge_between(u, u + top).unwrap());
    }
    let closing = if ((n - 1) / 2).is_multiple_of(2) {
        Some(blow_up(n, g, &x_edges)?)
    } else {
        None
    };
    let closing = match closing {
        Some(c) => c,
        None => {
            let mut meets_all = |c: ElementSet| joined.iter().all(|j| j.intersects(c));
            hamiltonian_search(g, rest, meter, &mut meets_all)?
                .ok_or_else(|| Error::ConstructionCheckFailed("no closing Hamiltonian cycle".into()))?
        }
    };
    if !rest.is_subset(closing) {
        return Err(Error::ConstructionCheckFailed("closing cycle misses uncovered edges".into()));
    }
    joined.push(closing);
    Ok(joined)
}

/// Blow a Gray-code Hamiltonian cycle of `Q_{n-2}` up to a Hamiltonian
/// cycle of `Q_n`. Each vertex `u` of `Q_{n-2}` is a square spanned by the
/// last two coordinates; the walk uses both of the square's uncovered
/// parallel edges and flips the other coordinate.
fn blow_up(n: usize, g: &Graph, x_edges: &[(usize, usize)]) -> Result<ElementSet> {
    let k = n - 2;
    let (bit_a, bit_b) = (1usize << k, 1usize << (k + 1));
    let type_one = |u: usize| x_edges.iter().any(|&(v, w)| v.min(w) == u);
    let mut corner = 0usize;
    let mut walk = Vec::with_capacity(g.v());
    for i in 0..1usize << k {
        let u = i ^ (i >> 1);
        let (t, s) = if type_one(u) { (bit_a, bit_b) } else { (bit_b, bit_a) };
        walk.extend([u | corner, u | (corner ^ t), u | (corner ^ t ^ s), u | (corner ^ s)]);
        corner ^= s;
    }
    if corner != 0 {
        return Err(Error::ConstructionCheckFailed("blow-up does not close".into()));
    }
    cycle_edges(g, &walk)
}

// ----------------------------------------------------------- complete graph

fn complete_checked(n: usize, lo: usize) -> Result<Graph> {
    if n < lo || n > 16 {
        return Err(bad(format!("complete graph order must be in {lo}..=16, got {n}")));
    }
    Graph::complete(n)
}

/// `⌈log₂ n⌉` bonds: the cuts by each binary digit of the vertex label.
pub fn kn_bipartite_bond_cover(n: usize) -> Result<CoverCertificate> {
    let g = complete_checked(n, 2)?;
    let bits = (usize::BITS - (n - 1).leading_zeros()) as usize;
    let members: Vec<ElementSet> = (0..bits)
        .map(|i| g.cut((0..n).filter(|v| v >> i & 1 == 0).collect()))
        .collect();
    certify(&g, CoverCertificate::new(CoverKind::BondCover, &format!("K{n}"), members, true))
}

/// Vertex sequence of the zig-zag path `P_i` on `Z_n`: `i, i+1, i+1-2, …`.
fn zigzag(n: usize, i: usize) -> Vec<usize> {
    let mut v = vec![i % n];
    let mut x = i as i64;
    for k in 1..n as i64 {
        x += if k % 2 == 1 { k } else { -k };
        v.push(x.rem_euclid(n as i64) as usize);
    }
    v
}

/// The `n/2` zig-zag Hamiltonian paths partitioning `E(K_n)`, n even.
pub fn kn_zigzag_paths(n: usize) -> Result<Vec<ElementSet>> {
    if n % 2 == 1 || n < 2 {
        return Err(bad(format!("zig-zag paths need an even order, got {n}")));
    }
    let g = complete_checked(n, 2)?;
    let paths: Vec<ElementSet> = (0..n / 2).map(|i| path_edges(&g, &zigzag(n, i))).collect::<Result<_>>()?;
    certify(&g, CoverCertificate::new(CoverKind::PathPartition, &format!("K{n}"), paths.clone(), n == 2))?;
    Ok(paths)
}

/// Partition of `E(K_n)`, n odd, into `(n-1)/2` Hamiltonian cycles: zig-zag
/// paths on `Z_{n-1}` closed through the extra vertex `n-1`.
pub fn kn_hamiltonian_decomposition(n: usize) -> Result<Vec<ElementSet>> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(bad(format!("need an odd order ≥ 3, got {n}")));
    }
    let g = complete_checked(n, 3)?;
    (0..(n - 1) / 2)
        .map(|i| {
            let mut vs = zigzag(n - 1, i);
            vs.push(n - 1);
            cycle_edges(&g, &vs)
        })
        .collect()
}

/// Connected cycle cover of `K_n` of size `⌈n/2⌉`, `4 ≤ n ≤ 16`.
pub fn kn_connected_cycle_cover(n: usize) -> Result<CoverCertificate> {
    let g = complete_checked(n, 4)?;
    let name = format!("K{n}");
    if n % 2 == 1 {
        let mut members = kn_hamiltonian_decomposition(n)?;
        let vs: Vec<usize> = (0..=n.div_ceil(2)).collect();
        members.push(cycle_edges(&g, &vs)?);
        return certify(&g, CoverCertificate::new(CoverKind::CycleCover, &name, members, true));
    }
    if n % 4 == 2 || n == 4 {
        let members = (0..n / 2).map(|i| cycle_edges(&g, &zigzag(n, i))).collect::<Result<_>>()?;
        return certify(&g, CoverCertificate::new(CoverKind::CycleCover, &name, members, true));
    }
    // n ≡ 0 (mod 4): lift the closed zig-zags of K_{n-2} through v and w.
    let m = n - 2;
    let (v, w) = (m, m + 1);
    let mut last = None;
    for (mid_via, swap_c) in [(v, false), (w, false), (v, true), (w, true)] {
        let end_via = if mid_via == v { w } else { v };
        let mut members = Vec::new();
        for i in 0..m / 2 {
            let p = zigzag(m, i);
            // Middle edge of the path and the closing edge are the long diagonals.
            let mut vs = p[..m / 2].to_vec();
            vs.push(mid_via);
            vs.extend_from_slice(&p[m / 2..]);
            vs.push(end_via);
            members.push(cycle_edges(&g, &vs)?);
        }
        let (a, b) = if swap_c { (w, v) } else { (v, w) };
        let mut c = ElementSet::EMPTY;
        for j in 0..m / 2 {
            c.insert(g.edge_between(j, j + m / 2).unwrap());
        }
        for k in 0..m / 2 {
            let (x, y) = (2 * k + 1, (2 * k + 2) % m);
            if (x, y) != (m / 2, m / 2 + 1) {
                c.insert(g.edge_between(x, y).unwrap());
            }
        }
        c.insert(g.edge_between(m / 2, a).unwrap());
        c.insert(g.edge_between(m / 2 + 1, b).unwrap());
        c.insert(g.edge_between(v, w).unwrap());
        members.push(c);
        let cert = CoverCertificate::new(CoverKind::CycleCover, &name, members, true);
        match cert.verify(&g) {
            Ok(()) => return Ok(cert),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap())
}

// ------------------------------------------------------ uniform, corank two

/// A determining set of `⌈n/2⌉` signed circuits of an orientation of
/// `U_{n-2,n}`. The circuits `E - f` are the cocircuits of the rank-2
/// dual; their signs give the dual chirotope, hence the circular order of
/// the `2n` points on the circle, and every other point is taken.
pub fn unif_corank2_determining_set(om: &OrientedMatroid) -> Result<Vec<SignedSet>> {
    let m = om.matroid();
    let n = m.n();
    if n < 3 || m.rank() + 2 != n || m.num_circuits() != n || m.circuits().iter().any(|c| c.len() != n - 1) {
        return Err(Error::NotCorankTwo);
    }
    let full = ElementSet::full(n);
    let circuit = |f: usize| om.sign_of(full.without(f));
    let s: Vec<SignedSet> = (0..n).map(circuit).collect::<Result<_>>()?;
    // χ*(f, g) = ε_f · s_f(g); antisymmetry fixes ε up to a global sign.
    let mut eps = vec![1i8; n];
    for g in 1..n {
        eps[g] = -s[0].sign(g) * s[g].sign(0);
    }
    let chi = |f: usize, g: usize| eps[f] * s[f].sign(g);
    for f in 0..n {
        for g in 0..n {
            if f != g && chi(f, g) != -chi(g, f) {
                return Err(Error::InconsistentPropagation(ElementSet::EMPTY.with(f).with(g)));
            }
        }
    }
    // Points other than 0 moved into the open upper half plane, by angle.
    let sigma: Vec<i8> = (0..n).map(|g| if g == 0 { 1 } else { chi(0, g) }).collect();
    let mut upper: Vec<usize> = (1..n).collect();
    upper.sort_by(|&a, &b| {
        if sigma[a] * sigma[b] * chi(a, b) > 0 {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let mut order = vec![0];
    order.extend(upper);
    let k = n.div_ceil(2);
    Ok((0..k).map(|i| s[order[2 * i]]).collect())
}

// ------------------------------------------------------- grid and diagonals

/// A line `a·x + b·y = c` with integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Line {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

/// Labels of the lines of the arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineKind {
    /// `x = k`, slightly tilted.
    Vertical(usize),
    /// `y = k`, slightly tilted.
    Horizontal(usize),
    /// `x + y = j + ε`, slightly tilted.
    Diagonal(usize),
}

/// The rank-3 grid arrangement: `x = k`, `y = k` for `k = 1..ℓ` and the
/// diagonals `x + y = j + ε` for `j = 2..2ℓ`. Every line gets a distinct
/// tilt of order `1/tilt` so that no two are parallel and no three meet.
pub struct GridConfiguration {
    pub ell: usize,
    pub lines: Vec<Line>,
    pub kinds: Vec<LineKind>,
}

impl GridConfiguration {
    /// `eps = (num, den)` must satisfy `0 < num/den < 1`.
    pub fn new(ell: usize, eps: (i64, i64), tilt: i64) -> Result<GridConfiguration> {
        let (num, den) = eps;
        if !(2..=8).contains(&ell) || num <= 0 || num >= den || tilt < 100 {
            return Err(bad(format!("grid needs 2 ≤ ℓ ≤ 8, 0 < ε < 1 and tilt ≥ 100; got ℓ={ell}")));
        }
        let mut lines = Vec::new();
        let mut kinds = Vec::new();
        for k in 1..=ell as i64 {
            // x + (k²/tilt)·y = k, scaled by tilt.
            lines.push(Line { a: tilt, b: k * k, c: k * tilt });
            kinds.push(LineKind::Vertical(k as usize));
        }
        for k in 1..=ell as i64 {
            lines.push(Line { a: k * k, b: tilt, c: k * tilt });
            kinds.push(LineKind::Horizontal(k as usize));
        }
        for j in 2..=2 * ell as i64 {
            // x + (1 + j²/tilt)·y = j + num/den, scaled by tilt·den.
            lines.push(Line {
                a: tilt * den,
                b: (tilt + j * j) * den,
                c: (j * den + num) * tilt,
            });
            kinds.push(LineKind::Diagonal(j as usize));
        }
        Ok(GridConfiguration { ell, lines, kinds })
    }

    /// Homogeneous vectors `(a, b, -c)`.
    pub fn vectors(&self) -> Vec<Vec<i64>> {
        self.lines.iter().map(|l| vec![l.a, l.b, -l.c]).collect()
    }

    fn index(&self, kind: LineKind) -> usize {
        self.kinds.iter().position(|&k| k == kind).unwrap()
    }

    /// The triangles next to the grid vertices `(k, m)` in direction
    /// `(1, 1)`: bounded by `x = k`, `y = m` and the diagonal `j = k + m`.
    pub fn simplex_witnesses(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        for k in 1..=self.ell {
            for m in 1..=self.ell {
                out.push(
                    [
                        self.index(LineKind::Vertical(k)),
                        self.index(LineKind::Horizontal(m)),
                        self.index(LineKind::Diagonal(k + m)),
                    ]
                    .iter()
                    .collect(),
                );
            }
        }
        out
    }
}

/// What the grid instance certifies about its orientation.
pub struct GridReport {
    pub elements: usize,
    pub chirotope: Chirotope,
    pub oriented: OrientedMatroid,
    pub witnesses: Vec<ElementSet>,
    /// Witnesses that are invertible bases of the rank-3 chirotope.
    pub invertible_witnesses: usize,
    /// No two witnesses share two lines, so the circuits covering them are
    /// pairwise distinct.
    pub pairwise_disjoint: bool,
}

/// Builds the rank-3 arrangement, its chirotope, and checks the `ℓ²`
/// simplex witnesses with the Grassmann–Plücker mutation test.
pub fn grid_diagonal_configuration(r: usize, ell: usize, eps: (i64, i64)) -> Result<GridReport> {
    if r != 3 {
        return Err(bad(format!("only rank 3 is realised, got {r}")));
    }
    let cfg = GridConfiguration::new(ell, eps, 1000)?;
    let (chi, om) = chirotope_from_vectors(&cfg.vectors())?;
    let n = cfg.lines.len();
    let inv: std::collections::HashSet<ElementSet> = invertible_bases_gp(&chi, n).into_iter().collect();
    let witnesses = cfg.simplex_witnesses();
    let invertible_witnesses = witnesses.iter().filter(|w| inv.contains(w)).count();
    let pairwise_disjoint = witnesses
        .iter()
        .enumerate()
        .all(|(i, a)| witnesses[i + 1..].iter().all(|b| a.intersection(*b).len() <= 1));
    Ok(GridReport {
        elements: n,
        chirotope: chi,
        oriented: om,
        witnesses,
        invertible_witnesses,
        pairwise_disjoint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::determination::determines;
    use crate::matroid::Matroid;
    use crate::oriented::OrientationSpace;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn hypercube_bonds() {
        for n in 2..=5 {
            let p = qn_bond_partition(n).unwrap();
            assert_eq!(p.size, 2);
            if n >= 3 {
                assert_eq!(p.members[0].len() + p.members[1].len(), n << (n - 1));
            }
            let c = qn_connected_bond_cover(n).unwrap();
            assert_eq!(c.size, 3);
        }
        let p3 = qn_bond_partition(3).unwrap();
        assert_eq!((p3.members[0].len(), p3.members[1].len()), (6, 6));
        let p5 = qn_bond_partition(5).unwrap();
        assert_eq!((p5.members[0].len(), p5.members[1].len()), (40, 40));
    }

    #[test]
    fn hypercube_cycles() {
        for (n, size) in [(3, 2), (4, 3), (5, 3)] {
            let c = qn_connected_cycle_cover(n, &b()).unwrap();
            assert_eq!(c.size, size, "Q{n}");
        }
        let d = qn_hamiltonian_decomposition(4, &b()).unwrap();
        assert!(!d[0].intersects(d[1]));
    }

    #[test]
    fn complete_graph_covers() {
        for n in 2..=8 {
            let c = kn_bipartite_bond_cover(n).unwrap();
            assert_eq!(c.size, (usize::BITS - (n - 1).leading_zeros()) as usize);
        }
        for n in [4, 6, 8] {
            let p = kn_zigzag_paths(n).unwrap();
            assert_eq!(p.len(), n / 2);
            assert!(p.iter().all(|x| x.len() == n - 1));
        }
        for n in 4..=16 {
            let c = kn_connected_cycle_cover(n).unwrap();
            assert_eq!(c.size, n.div_ceil(2), "K{n}");
        }
    }

    #[test]
    fn corank_two_alternating_sets() {
        for n in 3..=5 {
            let m = Matroid::uniform(n - 2, n).unwrap();
            let sp = OrientationSpace::new(&m, &b()).unwrap();
            for o in 0..sp.len() {
                let s = unif_corank2_determining_set(&sp.orientation(o)).unwrap();
                assert_eq!(s.len(), n.div_ceil(2));
                assert!(determines(&sp, &s).unwrap(), "n={n} orientation {o}");
            }
        }
        let m = Matroid::uniform(2, 4).unwrap();
        let sp = OrientationSpace::new(&m, &b()).unwrap();
        for o in 0..sp.len() {
            let om = sp.orientation(o);
            for x in om.signed_circuits() {
                assert!(!determines(&sp, &[x]).unwrap());
            }
        }
    }

    #[test]
    fn grid_witnesses() {
        for ell in 2..=3 {
            let g = grid_diagonal_configuration(3, ell, (1, 2)).unwrap();
            assert_eq!(g.elements, 4 * ell - 1);
            assert_eq!(g.witnesses.len(), ell * ell);
            assert_eq!(g.invertible_witnesses, ell * ell);
            assert!(g.pairwise_disjoint);
        }
        let half = grid_diagonal_configuration(3, 2, (1, 2)).unwrap();
        let quarter = grid_diagonal_configuration(3, 2, (1, 4)).unwrap();
        assert!(half.chirotope.equal_up_to_sign(&quarter.chirotope));
    }
}

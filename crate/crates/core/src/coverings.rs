//! Covering parameters: element and base coverings, weak coverings, the
//! base and intersection graphs and their connectivity numbers.

use std::collections::{HashMap, HashSet, VecDeque};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::budget::{Budget, Meter};
use crate::chirotope::{chirotope_set, invertible_bases};
use crate::element_set::{binomial, k_subsets, ElementSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matroid::Matroid;
use crate::oriented::OrientationSpace;
use crate::search::{components, Connectivity, CoverProblem, Pairwise, Rule, Unconstrained};

/// A minimum covering together with the sets achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covering {
    pub value: usize,
    pub members: Vec<ElementSet>,
}

/// Intersection graph of a family: edges between members that meet.
pub fn intersection_graph(s: &[ElementSet]) -> Vec<Vec<usize>> {
    (0..s.len())
        .map(|i| (0..s.len()).filter(|&j| j != i && s[i].intersects(s[j])).collect())
        .collect()
}

/// Whether the family covers `ground` and has a connected intersection graph.
pub fn is_connected_element_cover(ground: ElementSet, s: &[ElementSet]) -> bool {
    if s.is_empty() {
        return false;
    }
    let union = s.iter().fold(ElementSet::EMPTY, |a, &c| a.union(c));
    let idx: Vec<usize> = (0..s.len()).collect();
    union == ground && components(&idx, &|a, b| s[a].intersects(s[b])).len() == 1
}

/// Smallest subfamily of `sets` covering the first `n` elements, connected
/// if asked. Searches sizes from `lower` upwards.
pub fn min_element_cover(
    n: usize,
    sets: &[ElementSet],
    connected: bool,
    lower: usize,
    budget: &Budget,
) -> Result<Option<Covering>> {
    let meter = budget.meter("element cover");
    let p = CoverProblem::new(n, sets);
    let cover = if connected {
        let conn = Pairwise {
            adjacent: |a: usize, b: usize| sets[a].intersects(sets[b]),
            num_sets: sets.len(),
        };
        p.minimum(&conn, lower, None, &meter)?
    } else {
        p.minimum(&Unconstrained, lower, None, &meter)?
    };
    Ok(cover.map(|c| Covering {
        value: c.size,
        members: c.members.iter().map(|&i| sets[i]).collect(),
    }))
}

fn counting_bound(n: usize, sets: &[ElementSet]) -> usize {
    let big = sets.iter().map(|s| s.len()).max().unwrap_or(1).max(1);
    n.div_ceil(big)
}

/// `c(M)`: smallest element covering by circuits.
pub fn c(m: &Matroid, budget: &Budget) -> Result<Covering> {
    let lower = counting_bound(m.n(), m.circuits());
    min_element_cover(m.n(), m.circuits(), false, lower, budget)?.ok_or(Error::NotConnected)
}

/// `cc(M)`: smallest connected element covering by circuits.
pub fn cc(m: &Matroid, budget: &Budget) -> Result<Covering> {
    let circ = m.circumference().max(1);
    let lower = counting_bound(m.n(), m.circuits()).max((m.n().saturating_sub(1)).div_ceil(circ));
    min_element_cover(m.n(), m.circuits(), true, lower, budget)?.ok_or(Error::NotConnected)
}

/// `bc(G) = c(M*(G))`.
pub fn bc(g: &Graph, budget: &Budget) -> Result<Covering> {
    let bonds = g.bonds(budget.enumeration)?;
    let lower = counting_bound(g.m(), &bonds);
    min_element_cover(g.m(), &bonds, false, lower, budget)?.ok_or(Error::NotConnected)
}

/// `cbc(G) = cc(M*(G))`.
pub fn cbc(g: &Graph, budget: &Budget) -> Result<Covering> {
    let bonds = g.bonds(budget.enumeration)?;
    let lower = counting_bound(g.m(), &bonds);
    min_element_cover(g.m(), &bonds, true, lower, budget)?.ok_or(Error::NotConnected)
}

/// Bases with the exchange edges of the base graph. Each edge `B ~ B'`
/// (|B Δ B'| = 2) carries the unique circuit inside `B ∪ B'`.
pub struct BaseGraph {
    pub bases: Vec<ElementSet>,
    pub edges: Vec<(usize, usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    /// `covering[c]`: the bases covered by circuit `c`.
    pub covering: Vec<FixedBitSet>,
}

impl BaseGraph {
    pub fn new(m: &Matroid) -> BaseGraph {
        let bases = m.bases();
        let index: HashMap<ElementSet, usize> = bases.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let mut edges = Vec::new();
        let mut adj = vec![Vec::new(); bases.len()];
        let mut covering = vec![FixedBitSet::with_capacity(bases.len()); m.num_circuits()];
        for (i, &b) in bases.iter().enumerate() {
            for e in m.ground().difference(b).iter() {
                let ci = m.fundamental_circuit_index(b, e);
                covering[ci].insert(i);
                for f in m.circuits()[ci].without(e).iter() {
                    let j = index[&b.without(f).with(e)];
                    if i < j {
                        edges.push((i, j, ci));
                    }
                    adj[i].push((j, ci));
                }
            }
        }
        BaseGraph {
            bases,
            edges,
            adj,
            covering,
        }
    }

    /// Components of `B_S` where `allowed[c]` marks the circuits of `S`.
    pub fn components(&self, allowed: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.bases.len()];
        let mut out = Vec::new();
        for s in 0..self.bases.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let x = comp[k];
                k += 1;
                for &(y, c) in &self.adj[x] {
                    if allowed[c] && !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    fn adj(&self, x: usize) -> &[(usize, usize)] {
        &self.adj[x]
    }
}

/// Whether `s` covers every basis and `B_S` is connected.
pub fn is_connected_base_cover(m: &Matroid, s: &[ElementSet]) -> Result<bool> {
    let g = BaseGraph::new(m);
    let mut allowed = vec![false; m.num_circuits()];
    for &c in s {
        allowed[m.circuit_index(c).ok_or(Error::NotACircuit(c))?] = true;
    }
    let mut covered = FixedBitSet::with_capacity(g.bases.len());
    for (ci, cov) in g.covering.iter().enumerate() {
        if allowed[ci] {
            covered.union_with(cov);
        }
    }
    Ok(covered.count_ones(..) == g.bases.len() && g.components(&allowed).len() == 1)
}

/// `CC(M)`: smallest connected base covering.
pub fn cc_base(m: &Matroid, budget: &Budget) -> Result<Covering> {
    let g = BaseGraph::new(m);
    let nc = m.num_circuits();
    let rule = Rule(|chosen: &[usize]| {
        let mut allowed = vec![false; nc];
        for &c in chosen {
            allowed[c] = true;
        }
        let comps = g.components(&allowed);
        if comps.len() <= 1 {
            return None;
        }
        let smallest = comps.iter().min_by_key(|c| c.len()).unwrap();
        let mut out: Vec<usize> = smallest
            .iter()
            .flat_map(|&x| g.adj(x).iter().map(|&(_, c)| c))
            .filter(|&c| !allowed[c])
            .collect();
        out.sort_unstable();
        out.dedup();
        Some(out)
    });
    let lower = g.bases.len().div_ceil(max_cover(&g.covering));
    let cover = CoverProblem::new(g.bases.len(), &g.covering)
        .minimum(&rule, lower, None, &budget.meter("base cover"))?
        .ok_or(Error::NotConnected)?;
    Ok(Covering {
        value: cover.size,
        members: cover.members.iter().map(|&i| m.circuits()[i]).collect(),
    })
}

fn max_cover(sets: &[FixedBitSet]) -> usize {
    sets.iter().map(|s| s.count_ones(..)).max().unwrap_or(1).max(1)
}

/// Invertible bases of every class representative, computed by membership
/// in the set of chirotopes of all orientations.
pub fn invertible_by_class(space: &OrientationSpace) -> Result<Vec<Vec<ElementSet>>> {
    let known = chirotope_set(space)?;
    space
        .reps()
        .par_iter()
        .map(|&r| invertible_bases(&space.orientation(r), &known))
        .collect()
}

/// `(WC, W̃C)`: smallest unsigned weak covering, and the worst orientation's
/// smallest weak covering. Invertibility of a base is preserved by
/// reorientation, so class representatives suffice.
pub fn weak_cover_params(space: &OrientationSpace, budget: &Budget) -> Result<(Covering, Covering)> {
    if space.is_empty() {
        return Err(Error::NotOrientable);
    }
    let m = space.matroid();
    let inv = invertible_by_class(space)?;
    let union: Vec<ElementSet> = {
        let mut all: Vec<ElementSet> = inv.iter().flatten().copied().collect::<HashSet<_>>().into_iter().collect();
        all.sort();
        all
    };
    let wc = min_base_cover(m, &union, budget)?;
    let mut worst = Covering {
        value: 0,
        members: Vec::new(),
    };
    for bases in &inv {
        let w = min_base_cover(m, bases, budget)?;
        if w.value > worst.value {
            worst = w;
        }
    }
    Ok((wc, worst))
}

/// Smallest set of circuits covering each of `bases` in the fundamental
/// circuit sense (`|C \ B| = 1`, `C ⊆ B ∪ e`).
pub fn min_base_cover(m: &Matroid, bases: &[ElementSet], budget: &Budget) -> Result<Covering> {
    let mut sets = vec![FixedBitSet::with_capacity(bases.len()); m.num_circuits()];
    for (j, &b) in bases.iter().enumerate() {
        for e in m.ground().difference(b).iter() {
            sets[m.fundamental_circuit_index(b, e)].insert(j);
        }
    }
    let cover = CoverProblem::new(bases.len(), &sets)
        .minimum(&Unconstrained, 0, None, &budget.meter("weak cover"))?
        .expect("every basis has a fundamental circuit");
    Ok(Covering {
        value: cover.size,
        members: cover.members.iter().map(|&i| m.circuits()[i]).collect(),
    })
}

/// `λ(M)`: the fewest circuits whose removal disconnects `B_C`. Uncovered
/// bases are isolated vertices, so `λ ≤ |E| - r` whenever there are two
/// bases; `None` when `B_C` has a single vertex.
pub fn lambda(m: &Matroid, budget: &Budget) -> Result<Option<usize>> {
    let g = BaseGraph::new(m);
    let nb = g.bases.len();
    if nb < 2 {
        return Ok(None);
    }
    // Isolating a basis removes all of its fundamental circuits.
    let mut best = (0..nb)
        .map(|x| {
            let mut ls: Vec<usize> = g.adj(x).iter().map(|&(_, c)| c).collect();
            ls.sort_unstable();
            ls.dedup();
            ls.len()
        })
        .min()
        .unwrap();
    let meter = budget.meter("lambda");
    let mut cut = vec![false; m.num_circuits()];
    let mut kept = vec![false; m.num_circuits()];
    for t in 1..nb {
        label_cut(&g, 0, t, &mut cut, &mut kept, 0, &mut best, &meter)?;
    }
    Ok(Some(best))
}

/// Shortest path from `s` to `t` avoiding cut labels, as a list of labels.
fn path_labels(g: &BaseGraph, s: usize, t: usize, cut: &[bool]) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.bases.len()];
    let mut via = vec![usize::MAX; g.bases.len()];
    prev[s] = s;
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        if x == t {
            let mut out = Vec::new();
            let mut y = t;
            while y != s {
                out.push(via[y]);
                y = prev[y];
            }
            out.sort_unstable();
            out.dedup();
            return Some(out);
        }
        for &(y, c) in g.adj(x) {
            if !cut[c] && prev[y] == usize::MAX {
                prev[y] = x;
                via[y] = c;
                q.push_back(y);
            }
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn label_cut(
    g: &BaseGraph,
    s: usize,
    t: usize,
    cut: &mut [bool],
    kept: &mut [bool],
    depth: usize,
    best: &mut usize,
    meter: &Meter,
) -> Result<()> {
    meter.tick()?;
    let Some(labels) = path_labels(g, s, t, cut) else {
        *best = (*best).min(depth);
        return Ok(());
    };
    if depth + 1 >= *best {
        return Ok(());
    }
    let free: Vec<usize> = labels.into_iter().filter(|&c| !kept[c]).collect();
    let mut pinned = Vec::new();
    for c in free {
        cut[c] = true;
        label_cut(g, s, t, cut, kept, depth + 1, best, meter)?;
        cut[c] = false;
        kept[c] = true;
        pinned.push(c);
        if depth + 1 >= *best {
            break;
        }
    }
    for c in pinned {
        kept[c] = false;
    }
    Ok(())
}

/// `Δ(M) = max_e |S_e|`.
pub fn delta(m: &Matroid) -> usize {
    (0..m.n()).map(|e| m.circuits_containing(e).len()).max().unwrap_or(0)
}

/// `min_e |S_e|`: the quantity for which every larger-than-`|C| - δ`
/// family of circuits covers the ground set.
pub fn delta_min(m: &Matroid) -> usize {
    (0..m.n()).map(|e| m.circuits_containing(e).len()).min().unwrap_or(0)
}

/// Vertex connectivity of a graph given by adjacency lists. A complete
/// graph on `k` vertices gets `k - 1`.
pub fn vertex_connectivity(adj: &[Vec<usize>]) -> usize {
    let k = adj.len();
    if k <= 1 {
        return 0;
    }
    let sets: Vec<HashSet<usize>> = adj.iter().map(|a| a.iter().copied().collect()).collect();
    let mut best = k - 1;
    // Some vertex among the first best+1 lies outside a minimum separator.
    let mut i = 0;
    while i <= best && i < k {
        for j in 0..k {
            if j != i && !sets[i].contains(&j) {
                best = best.min(disjoint_paths(adj, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// Internally vertex-disjoint `s`-`t` paths, counted up to `limit`.
fn disjoint_paths(adj: &[Vec<usize>], s: usize, t: usize, limit: usize) -> usize {
    // Split v into v_in = 2v, v_out = 2v+1 with unit capacity between.
    let k = adj.len();
    let mut cap: HashMap<(usize, usize), i32> = HashMap::new();
    let mut nbr = vec![Vec::new(); 2 * k];
    let mut add = |a: usize, b: usize, c: i32, cap: &mut HashMap<(usize, usize), i32>| {
        *cap.entry((a, b)).or_insert(0) += c;
        cap.entry((b, a)).or_insert(0);
        nbr[a].push(b);
        nbr[b].push(a);
    };
    for v in 0..k {
        let c = if v == s || v == t { k as i32 } else { 1 };
        add(2 * v, 2 * v + 1, c, &mut cap);
        for &w in &adj[v] {
            add(2 * v + 1, 2 * w, 1, &mut cap);
        }
    }
    let (src, dst) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < limit {
        let mut prev = vec![usize::MAX; 2 * k];
        prev[src] = src;
        let mut q = VecDeque::from([src]);
        while let Some(x) = q.pop_front() {
            if x == dst {
                break;
            }
            for &y in &nbr[x] {
                if prev[y] == usize::MAX && cap[&(x, y)] > 0 {
                    prev[y] = x;
                    q.push_back(y);
                }
            }
        }
        if prev[dst] == usize::MAX {
            break;
        }
        let mut y = dst;
        while y != src {
            let x = prev[y];
            *cap.get_mut(&(x, y)).unwrap() -= 1;
            *cap.get_mut(&(y, x)).unwrap() += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

/// `κ(I_C)`. With a single circuit the graph is one vertex with nothing to
/// separate; it is given the value 1, which is what the exact formula for
/// `s̄` on single-class matroids requires there.
pub fn kappa_ic(m: &Matroid) -> usize {
    if m.num_circuits() == 1 {
        return 1;
    }
    vertex_connectivity(&intersection_graph(m.circuits()))
}

/// Whether the contraction `M/e` is connected: the minimal nonempty sets
/// among `C - e` cover `E - e` and their intersection graph is connected.
pub fn contraction_connected(m: &Matroid, e: usize) -> bool {
    let mut sets: Vec<ElementSet> = m.circuits().iter().map(|c| c.without(e)).filter(|c| !c.is_empty()).collect();
    sets.sort_by_key(|c| c.len());
    let mut minimal: Vec<ElementSet> = Vec::new();
    for c in sets {
        if !minimal.iter().any(|d| d.is_subset(c)) {
            minimal.push(c);
        }
    }
    is_connected_element_cover(m.ground().without(e), &minimal)
}

/// `θ_e`: fewest circuits through `e` covering the ground set.
pub fn theta(m: &Matroid, e: usize, budget: &Budget) -> Result<Option<usize>> {
    let star: Vec<ElementSet> = m.star(e);
    Ok(min_element_cover(m.n(), &star, false, 1, budget)?.map(|c| c.value))
}

/// Blocks of a covering-design search: all `k`-subsets of `[n]` as sets of
/// the `r`-subsets they contain.
fn design_instance(n: usize, k: usize, r: usize) -> Result<(Vec<ElementSet>, Vec<FixedBitSet>)> {
    if !(1 <= r && r <= k && k <= n) || n > 128 {
        return Err(Error::BadParameters(format!("need 1 ≤ r ≤ k ≤ n, got n={n} k={k} r={r}")));
    }
    let items = k_subsets(n, r);
    let index: HashMap<ElementSet, usize> = items.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let blocks = k_subsets(n, k);
    let sets = blocks
        .iter()
        .map(|&b| {
            let mut f = FixedBitSet::with_capacity(items.len());
            for sub in k_subsets(k, r) {
                let members = b.to_vec();
                let s: ElementSet = sub.iter().map(|i| members[i]).collect();
                f.insert(index[&s]);
            }
            f
        })
        .collect();
    Ok((blocks, sets))
}

/// `C(n,k,r)` or `CC(n,k,r)` with a witness. Blocks are adjacent in `G(B)`
/// when they share an `r`-subset.
pub fn covering_design(n: usize, k: usize, r: usize, connected: bool, budget: &Budget) -> Result<Covering> {
    let (blocks, sets) = design_instance(n, k, r)?;
    let items = binomial(n, r) as usize;
    let per_block = binomial(k, r) as usize;
    let lower = items.div_ceil(per_block);
    let meter = budget.meter("covering design");
    let p = CoverProblem::new(items, &sets);
    let conn: Box<dyn Connectivity> = if connected {
        Box::new(Pairwise {
            adjacent: |a: usize, b: usize| blocks[a].intersection(blocks[b]).len() >= r,
            num_sets: blocks.len(),
        })
    } else {
        Box::new(Unconstrained)
    };
    let cover = p.minimum(conn.as_ref(), lower, None, &meter)?.expect("all blocks cover");
    Ok(Covering {
        value: cover.size,
        members: cover.members.iter().map(|&i| blocks[i]).collect(),
    })
}

pub fn covering_number(n: usize, k: usize, r: usize, budget: &Budget) -> Result<usize> {
    Ok(covering_design(n, k, r, false, budget)?.value)
}

pub fn connected_covering_number(n: usize, k: usize, r: usize, budget: &Budget) -> Result<usize> {
    Ok(covering_design(n, k, r, true, budget)?.value)
}

/// Binary with every cocircuit of even size.
pub fn is_eulerian(m: &Matroid) -> bool {
    m.is_binary() && m.cocircuits().iter().all(|c| c.len() % 2 == 0)
}

/// `M(G)` is Eulerian iff every vertex has even degree.
pub fn graphic_is_eulerian(g: &Graph) -> bool {
    (0..g.v()).all(|x| g.degree(x).is_multiple_of(2))
}

/// `M*(G)` is Eulerian iff every cycle of `G` is even, i.e. `G` is bipartite.
pub fn cographic_is_eulerian(g: &Graph) -> bool {
    g.is_bipartite()
}

/// Whether the cocircuits of size at most 3 cover the ground set and have a
/// connected intersection graph.
pub fn check_thm3_preconditions(m: &Matroid) -> bool {
    let small: Vec<ElementSet> = m.cocircuits().into_iter().filter(|c| c.len() <= 3).collect();
    is_connected_element_cover(m.ground(), &small)
}

/// The same check for `M*(G)` read off the graph: the small cocircuits of
/// `M*(G)` are the triangles of `G` (the graph is simple).
pub fn cographic_thm3_preconditions(g: &Graph) -> bool {
    let mut triangles = Vec::new();
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        for c in g.neighbours(a).intersection(g.neighbours(b)).iter().filter(|&c| c > b.max(a)) {
            let (x, y) = (g.edge_between(a, c).unwrap(), g.edge_between(b, c).unwrap());
            triangles.push(ElementSet::singleton(i).with(x).with(y));
        }
    }
    is_connected_element_cover(g.all_edges(), &triangles)
}

/// All the covering parameters of one matroid.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct ParamTable {
    pub name: String,
    pub elements: usize,
    pub rank: usize,
    pub circuits: usize,
    pub circ: usize,
    pub cogirth: usize,
    pub c: Option<usize>,
    pub cc: Option<usize>,
    pub cc_base: Option<usize>,
    pub wc: Option<usize>,
    pub wc_tilde: Option<usize>,
    pub lambda: Option<usize>,
    pub delta: usize,
    pub delta_min: usize,
    pub kappa_ic: usize,
    pub theta: Vec<Option<usize>>,
}

impl ParamTable {
    /// Computes every entry; budget failures leave the entry empty.
    pub fn compute(name: &str, m: &Matroid, budget: &Budget) -> ParamTable {
        let space = OrientationSpace::new(m, budget).ok().filter(|s| !s.is_empty());
        let weak = space.as_ref().and_then(|s| weak_cover_params(s, budget).ok());
        ParamTable {
            name: name.to_string(),
            elements: m.n(),
            rank: m.rank(),
            circuits: m.num_circuits(),
            circ: m.circumference(),
            cogirth: m.cogirth(),
            c: c(m, budget).ok().map(|x| x.value),
            cc: cc(m, budget).ok().map(|x| x.value),
            cc_base: cc_base(m, budget).ok().map(|x| x.value),
            wc: weak.as_ref().map(|w| w.0.value),
            wc_tilde: weak.as_ref().map(|w| w.1.value),
            lambda: lambda(m, budget).ok().flatten(),
            delta: delta(m),
            delta_min: delta_min(m),
            kappa_ic: kappa_ic(m),
            theta: (0..m.n()).map(|e| theta(m, e, budget).ok().flatten()).collect(),
        }
    }

    /// CSV with one row per table; `theta` is written as `;`-separated values.
    pub fn to_csv(tables: &[ParamTable]) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = [
            "name", "elements", "rank", "circuits", "circ", "cogirth", "c", "cc", "CC", "WC", "WC_tilde", "lambda",
            "delta", "delta_min", "kappa_IC", "theta",
        ];
        w.write_record(header).map_err(|e| Error::Parse(e.to_string()))?;
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        for t in tables {
            let theta: Vec<String> = t.theta.iter().map(|&x| opt(x)).collect();
            w.write_record([
                t.name.clone(),
                t.elements.to_string(),
                t.rank.to_string(),
                t.circuits.to_string(),
                t.circ.to_string(),
                t.cogirth.to_string(),
                opt(t.c),
                opt(t.cc),
                opt(t.cc_base),
                opt(t.wc),
                opt(t.wc_tilde),
                opt(t.lambda),
                t.delta.to_string(),
                t.delta_min.to_string(),
                t.kappa_ic.to_string(),
                theta.join(";"),
            ])
            .map_err(|e| Error::Parse(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().collect()
    }

    fn diamond() -> Matroid {
        Graph::diamond().graphic_matroid(1000).unwrap()
    }

    /// Oracle: λ straight from the definition, over all circuit subsets.
    fn brute_lambda(m: &Matroid) -> usize {
        let g = BaseGraph::new(m);
        let nc = m.num_circuits();
        (1..=nc)
            .find(|&k| {
                k_subsets(nc, k).into_iter().any(|rm| {
                    let allowed: Vec<bool> = (0..nc).map(|i| !rm.contains(i)).collect();
                    g.components(&allowed).len() > 1
                })
            })
            .unwrap()
    }

    /// Oracle: vertex connectivity by removing vertex subsets.
    fn brute_kappa(adj: &[Vec<usize>]) -> usize {
        let k = adj.len();
        for size in 0..k.saturating_sub(1) {
            for rm in k_subsets(k, size) {
                let rest: Vec<usize> = (0..k).filter(|&v| !rm.contains(v)).collect();
                if components(&rest, &|a, b| adj[a].contains(&b)).len() > 1 {
                    return size;
                }
            }
        }
        k - 1
    }

    #[test]
    fn element_covers() {
        let m = diamond();
        assert!(is_connected_element_cover(m.ground(), &[set(&[0, 1, 4]), set(&[2, 3, 4])]));
        assert!(!is_connected_element_cover(m.ground(), &[]));
        assert!(!is_connected_element_cover(m.ground(), &[set(&[0, 1, 2, 3])]));
        assert_eq!(c(&m, &b()).unwrap().value, 2);
        assert_eq!(cc(&m, &b()).unwrap().value, 2);
        let k24 = Graph::complete_bipartite(2, 4).unwrap().graphic_matroid(1000).unwrap();
        assert_eq!(c(&k24, &b()).unwrap().value, 2);
        assert_eq!(cc(&k24, &b()).unwrap().value, 3);
        assert_eq!(bc(&Graph::hypercube(3).unwrap(), &b()).unwrap().value, 2);
        assert_eq!(cbc(&Graph::hypercube(3).unwrap(), &b()).unwrap().value, 3);
    }

    #[test]
    fn base_covers() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(cc_base(&u23, &b()).unwrap().value, 1);
        let u24 = Matroid::uniform(2, 4).unwrap();
        let w = cc_base(&u24, &b()).unwrap();
        assert_eq!(w.value, 3);
        assert!(is_connected_base_cover(&u24, &w.members).unwrap());
        // In U_{2,4} every triple covers its three pairs and B_C is the
        // line graph of K_4 on the pairs; each basis has two exchanges per circuit.
        let g = BaseGraph::new(&u24);
        assert_eq!(g.bases.len(), 6);
        assert_eq!(g.edges.len(), 12);
    }

    #[test]
    fn lambda_matches_definition() {
        for m in [
            Matroid::uniform(2, 3).unwrap(),
            Matroid::uniform(2, 4).unwrap(),
            Matroid::uniform(2, 5).unwrap(),
            Matroid::uniform(3, 5).unwrap(),
            diamond(),
            Graph::complete(4).unwrap().graphic_matroid(1000).unwrap(),
        ] {
            let l = lambda(&m, &b()).unwrap().unwrap();
            assert_eq!(l, brute_lambda(&m));
            assert!(l <= m.n() - m.rank());
        }
        assert_eq!(lambda(&Matroid::uniform(2, 4).unwrap(), &b()).unwrap(), Some(2));
    }

    #[test]
    fn kappa_matches_brute_force() {
        for m in [
            diamond(),
            Matroid::uniform(2, 4).unwrap(),
            Graph::complete(4).unwrap().graphic_matroid(1000).unwrap(),
            Graph::complete_bipartite(2, 4).unwrap().graphic_matroid(1000).unwrap(),
            Graph::complete(4).unwrap().cographic_matroid(1000).unwrap(),
        ] {
            let adj = intersection_graph(m.circuits());
            assert_eq!(vertex_connectivity(&adj), brute_kappa(&adj));
        }
        let m = diamond();
        assert_eq!(kappa_ic(&m), 2);
        assert_eq!(kappa_ic(&Matroid::uniform(2, 3).unwrap()), 1);
        assert_eq!(delta(&m), 2);
        assert_eq!(theta(&m, 4, &b()).unwrap(), Some(2));
        // A path a-b-c has a cut vertex.
        assert_eq!(vertex_connectivity(&[vec![1], vec![0, 2], vec![1]]), 1);
    }

    #[test]
    fn designs() {
        assert_eq!(covering_number(4, 3, 2, &b()).unwrap(), 3);
        assert_eq!(connected_covering_number(4, 3, 2, &b()).unwrap(), 3);
        assert_eq!(covering_number(5, 4, 3, &b()).unwrap(), 4);
        assert_eq!(connected_covering_number(5, 4, 3, &b()).unwrap(), 4);
        assert_eq!(covering_number(5, 5, 2, &b()).unwrap(), 1);
        assert_eq!(covering_number(5, 3, 2, &b()).unwrap(), 4);
    }

    #[test]
    fn weak_covers() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let sp = OrientationSpace::new(&u24, &b()).unwrap();
        let (wc, wct) = weak_cover_params(&sp, &b()).unwrap();
        assert_eq!(wc.value, 3);
        assert!(wct.value <= 2);
        let u23 = Matroid::uniform(2, 3).unwrap();
        let sp = OrientationSpace::new(&u23, &b()).unwrap();
        let (_, wct) = weak_cover_params(&sp, &b()).unwrap();
        assert!(wct.value <= 1);
    }

    #[test]
    fn contractions() {
        // Contracting one of four parallel elements leaves three loops.
        assert!(!contraction_connected(&Matroid::uniform(1, 4).unwrap(), 0));
        assert!(contraction_connected(&Matroid::uniform(2, 4).unwrap(), 0));
        let k4 = Graph::complete(4).unwrap().graphic_matroid(100).unwrap();
        assert!((0..6).all(|e| contraction_connected(&k4, e)));
        // The diamond's middle edge: contracting it leaves two parallel pairs.
        assert!(!contraction_connected(&diamond(), 4));
        assert!(contraction_connected(&diamond(), 0));
    }

    #[test]
    fn eulerian() {
        let q4 = Graph::hypercube(4).unwrap();
        assert!(graphic_is_eulerian(&q4));
        let q3 = Graph::hypercube(3).unwrap();
        assert!(cographic_is_eulerian(&q3));
        let q3c = q3.cographic_matroid(1000).unwrap();
        assert_eq!(is_eulerian(&q3c), cographic_is_eulerian(&q3));
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(is_eulerian(&k4.graphic_matroid(1000).unwrap()), graphic_is_eulerian(&k4));
        assert!(check_thm3_preconditions(&k4.cographic_matroid(1000).unwrap()));
        // The triangle route agrees with the cocircuit route.
        for g in [Graph::complete(5).unwrap(), Graph::complete_bipartite(2, 3).unwrap(), Graph::diamond(), q3] {
            let direct = check_thm3_preconditions(&g.cographic_matroid(10_000).unwrap());
            assert_eq!(cographic_thm3_preconditions(&g), direct);
        }
        assert!(!cographic_thm3_preconditions(&Graph::complete(2).unwrap()));
    }

    #[test]
    fn csv_export() {
        let t = ParamTable::compute("G1", &diamond(), &b());
        let s = ParamTable::to_csv(std::slice::from_ref(&t)).unwrap();
        assert!(s.starts_with("name,elements"));
        assert_eq!(s.lines().count(), 2);
        assert_eq!(t.cc, Some(2));
    }
}

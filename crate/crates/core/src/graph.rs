//! Simple graphs whose edges are the elements of graphic and cographic
//! matroids.

use crate::element_set::{ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// Largest vertex count (vertex sets are packed like edge sets).
pub const MAX_VERTICES: usize = 128;

/// A simple undirected graph. Edge `i` is matroid element `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    v: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    nbrs: Vec<ElementSet>,
    connected: bool,
}

impl Graph {
    pub fn new(v: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if v == 0 || v > MAX_VERTICES {
            return Err(Error::BadParameters(format!("{v} vertices")));
        }
        if edges.len() > MAX_ELEMENTS {
            return Err(Error::BadParameters(format!(
                "{} edges exceed the limit of {MAX_ELEMENTS}",
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); v];
        let mut nbrs = vec![ElementSet::EMPTY; v];
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a >= v || b >= v {
                return Err(Error::BadParameters(format!("edge {i} = ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::BadParameters(format!("edge {i} is a loop")));
            }
            if nbrs[a].contains(b) {
                return Err(Error::BadParameters(format!("edge {i} = ({a},{b}) is parallel")));
            }
            adj[a].push((b, i));
            adj[b].push((a, i));
            nbrs[a].insert(b);
            nbrs[b].insert(a);
        }
        let mut g = Graph {
            v,
            edges,
            adj,
            nbrs,
            connected: false,
        };
        g.connected = g.components(ElementSet::full(g.m())).len() == 1;
        Ok(g)
    }

    /// `K_n` on `0..n`, edges `(i, j)` with `i < j` in lexicographic order.
    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::BadParameters("K_0".into()));
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::new(n, edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`, edges `(i, a+j)` lexicographic.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        if a == 0 || b == 0 {
            return Err(Error::BadParameters(format!("K_{{{a},{b}}}")));
        }
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        Graph::new(a + b, edges)
    }

    /// `Q_n` on the `n`-bit strings. Direction `i` occupies the edge block
    /// `i * 2^{n-1} ..`; inside a block the edge `(x, x | 1 << i)` is ordered by
    /// `x` (which has bit `i` clear).
    pub fn hypercube(n: usize) -> Result<Graph> {
        if n == 0 || n * (1usize << (n - 1)) > MAX_ELEMENTS {
            return Err(Error::BadParameters(format!("Q_{n}")));
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for x in 0..1usize << n {
                if x >> i & 1 == 0 {
                    edges.push((x, x | 1 << i));
                }
            }
        }
        Graph::new(1 << n, edges)
    }

    /// The diamond (`K_4` minus an edge), edges labelled so that its cycles
    /// are `{0,1,4}`, `{2,3,4}` and `{0,1,2,3}`.
    pub fn diamond() -> Graph {
        Graph::new(4, vec![(0, 2), (2, 1), (0, 3), (3, 1), (0, 1)]).unwrap()
    }

    /// The cycle `C_n`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::BadParameters(format!("C_{n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn all_edges(&self) -> ElementSet {
        ElementSet::full(self.m())
    }

    /// `(neighbour, edge index)` pairs of `x`.
    pub fn incident(&self, x: usize) -> &[(usize, usize)] {
        &self.adj[x]
    }

    pub fn neighbours(&self, x: usize) -> ElementSet {
        self.nbrs[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.adj[a].iter().find(|&&(y, _)| y == b).map(|&(_, i)| i)
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Vertex sets of the components of `(V, edges)`.
    pub fn components(&self, edges: ElementSet) -> Vec<ElementSet> {
        let mut seen = ElementSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.v {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach(s, edges, ElementSet::full(self.v));
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `allowed` using edges in `edges`.
    pub fn reach(&self, s: usize, edges: ElementSet, allowed: ElementSet) -> ElementSet {
        let mut comp = ElementSet::singleton(s);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &(y, i) in &self.adj[x] {
                if edges.contains(i) && allowed.contains(y) && !comp.contains(y) {
                    comp.insert(y);
                    stack.push(y);
                }
            }
        }
        comp
    }

    /// Edges with exactly one endpoint in `side`.
    pub fn cut(&self, side: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if side.contains(a) != side.contains(b) {
                out.insert(i);
            }
        }
        out
    }

    /// Vertices touched by an edge set.
    pub fn touched(&self, edges: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for i in edges.iter() {
            let (a, b) = self.edges[i];
            out.insert(a);
            out.insert(b);
        }
        out
    }

    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![u8::MAX; self.v];
        for s in 0..self.v {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &(y, _) in &self.adj[x] {
                    if colour[y] == u8::MAX {
                        colour[y] = 1 - colour[x];
                        stack.push(y);
                    } else if colour[y] == colour[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Edge sets of all simple cycles, canonically sorted. Fails with
    /// [`Error::TooLarge`] once more than `cap` cycles have been found.
    pub fn simple_cycles(&self, cap: usize) -> Result<Vec<ElementSet>> {
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(self.v);
        for s in 0..self.v {
            path.clear();
            path.push(s);
            let allowed = ElementSet::full(self.v).difference(ElementSet::full(s + 1));
            self.cycles_from(s, allowed, ElementSet::singleton(s), ElementSet::EMPTY, &mut path, cap, &mut out)?;
        }
        out.sort();
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn cycles_from(
        &self,
        s: usize,
        allowed: ElementSet,
        on_path: ElementSet,
        used: ElementSet,
        path: &mut Vec<usize>,
        cap: usize,
        out: &mut Vec<ElementSet>,
    ) -> Result<()> {
        let x = *path.last().unwrap();
        for &(y, i) in &self.adj[x] {
            if y == s {
                // each cycle is seen in both directions; keep one
                if path.len() >= 3 && path[1] < x {
                    out.push(used.with(i));
                    if out.len() > cap {
                        return Err(Error::TooLarge(format!("more than {cap} cycles")));
                    }
                }
            } else if allowed.contains(y) && !on_path.contains(y) {
                path.push(y);
                self.cycles_from(s, allowed, on_path.with(y), used.with(i), path, cap, out)?;
                path.pop();
            }
        }
        Ok(())
    }

    /// All bonds, canonically sorted: cuts `δ(S)` where `S ∋ 0` and both `S`
    /// and its complement induce connected subgraphs.
    pub fn bonds(&self, cap: usize) -> Result<Vec<ElementSet>> {
        if !self.connected {
            return Err(Error::BadParameters("bonds of a disconnected graph".into()));
        }
        let all_v = ElementSet::full(self.v);
        let all_e = self.all_edges();
        let mut out = Vec::new();
        let mut err = None;
        self.connected_sets(
            ElementSet::singleton(0),
            self.nbrs[0],
            ElementSet::singleton(0),
            &mut |s| {
                let rest = all_v.difference(s);
                if rest.is_empty() {
                    return true;
                }
                let start = rest.first().unwrap();
                if self.reach(start, all_e, rest) == rest {
                    out.push(self.cut(s));
                    if out.len() > cap {
                        err = Some(Error::TooLarge(format!("more than {cap} bonds")));
                        return false;
                    }
                }
                true
            },
        );
        if let Some(e) = err {
            return Err(e);
        }
        out.sort();
        Ok(out)
    }

    /// Visits every connected vertex set containing `set` exactly once.
    fn connected_sets(
        &self,
        set: ElementSet,
        ext: ElementSet,
        excluded: ElementSet,
        f: &mut dyn FnMut(ElementSet) -> bool,
    ) -> bool {
        if !f(set) {
            return false;
        }
        let mut ext = ext;
        let mut excluded = excluded;
        while let Some(x) = ext.first() {
            ext.remove(x);
            let grown = set.with(x);
            let new_ext = ext.union(self.nbrs[x].difference(grown).difference(excluded));
            if !self.connected_sets(grown, new_ext, excluded.with(x), f) {
                return false;
            }
            excluded.insert(x);
        }
        true
    }

    pub fn graphic_matroid(&self, cap: usize) -> Result<Matroid> {
        Ok(Matroid::from_circuits_unchecked(self.m(), self.simple_cycles(cap)?))
    }

    pub fn cographic_matroid(&self, cap: usize) -> Result<Matroid> {
        Ok(Matroid::from_circuits_unchecked(self.m(), self.bonds(cap)?))
    }

    /// Some Hamiltonian cycle (as an edge set), or `None` if there is none.
    /// Plain depth-first search; intended for the small, highly symmetric
    /// graphs used here.
    pub fn hamiltonian_cycle(&self) -> Option<ElementSet> {
        if self.v < 3 {
            return None;
        }
        let mut path = vec![0usize];
        let mut edges = ElementSet::EMPTY;
        if self.ham_rec(&mut path, ElementSet::singleton(0), &mut edges) {
            Some(edges)
        } else {
            None
        }
    }

    fn ham_rec(&self, path: &mut Vec<usize>, on: ElementSet, edges: &mut ElementSet) -> bool {
        let x = *path.last().unwrap();
        if path.len() == self.v {
            if let Some(i) = self.edge_between(x, 0) {
                edges.insert(i);
                return true;
            }
            return false;
        }
        for &(y, i) in &self.adj[x] {
            if on.contains(y) {
                continue;
            }
            path.push(y);
            edges.insert(i);
            if self.ham_rec(path, on.with(y), edges) {
                return true;
            }
            edges.remove(i);
            path.pop();
        }
        false
    }

    /// Length of a longest cycle. Returns `v` when a Hamiltonian cycle exists,
    /// otherwise falls back to enumerating cycles (bounded by `cap`).
    pub fn circumference(&self, cap: usize) -> Result<usize> {
        if self.hamiltonian_cycle().is_some() {
            return Ok(self.v);
        }
        Ok(self.simple_cycles(cap)?.iter().map(|c| c.len()).max().unwrap_or(0))
    }
}

/// Index of edge `(i, j)` of `K_n`.
pub fn complete_edge_index(n: usize, i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// Index of the edge of `Q_n` joining `x` to `x ^ (1 << dir)`.
pub fn hypercube_edge_index(n: usize, x: usize, dir: usize) -> usize {
    let low = x & !(1 << dir);
    let rank = ((low >> (dir + 1)) << dir) | (low & ((1 << dir) - 1));
    dir * (1 << (n - 1)) + rank
}

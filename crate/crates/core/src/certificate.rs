//! Machine-checkable covering certificates.
//!
//! The checks here only use the edge list of the graph and are written
//! without the enumeration code in `graph`, so a construction and its
//! verification never share logic.

use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverKind {
    ElementCover,
    BaseCover,
    WeakCover,
    BondCover,
    CycleCover,
    /// Bonds that partition the edge set.
    BondPartition,
    /// Paths that partition the edge set.
    PathPartition,
}

/// A family of edge sets of a named graph with the properties it claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCertificate {
    pub kind: CoverKind,
    pub graph: String,
    pub members: Vec<ElementSet>,
    pub size: usize,
    pub connected: bool,
}

impl CoverCertificate {
    pub fn new(kind: CoverKind, graph: &str, members: Vec<ElementSet>, connected: bool) -> Self {
        CoverCertificate {
            kind,
            graph: graph.to_string(),
            size: members.len(),
            members,
            connected,
        }
    }

    /// Re-checks every claim against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let fail = |why: String| Err(Error::ConstructionCheckFailed(format!("{}: {why}", self.graph)));
        if self.size != self.members.len() {
            return fail(format!("size {} but {} members", self.size, self.members.len()));
        }
        let all = ElementSet::full(g.m());
        let union = self.members.iter().fold(ElementSet::EMPTY, |a, &x| a.union(x));
        if union != all {
            return fail("members do not cover every edge".into());
        }
        for (i, &x) in self.members.iter().enumerate() {
            let ok = match self.kind {
                CoverKind::BondCover | CoverKind::BondPartition => is_bond(g, x),
                CoverKind::CycleCover => is_cycle(g, x),
                CoverKind::PathPartition => is_path(g, x),
                CoverKind::ElementCover | CoverKind::BaseCover | CoverKind::WeakCover => !x.is_empty(),
            };
            if !ok {
                return fail(format!("member {} is not a {:?} member", i + 1, self.kind));
            }
        }
        if matches!(self.kind, CoverKind::BondPartition | CoverKind::PathPartition) {
            let total: usize = self.members.iter().map(|x| x.len()).sum();
            if total != g.m() {
                return fail("members overlap".into());
            }
        }
        if self.connected != intersection_connected(&self.members) {
            return fail(format!("connectivity claim {} is false", self.connected));
        }
        Ok(())
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn union_find(g: &Graph, edges: ElementSet) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..g.v()).collect();
    for i in edges.iter() {
        let (a, b) = g.edges()[i];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    (0..g.v()).map(|x| find(&mut parent, x)).collect()
}

/// `x` is a bond: removing it leaves exactly two components and each
/// removed edge joins them.
pub fn is_bond(g: &Graph, x: ElementSet) -> bool {
    if x.is_empty() {
        return false;
    }
    let rest = ElementSet::full(g.m()).difference(x);
    let root = union_find(g, rest);
    let mut roots: Vec<usize> = root.clone();
    roots.sort_unstable();
    roots.dedup();
    roots.len() == 2
        && x.iter().all(|i| {
            let (a, b) = g.edges()[i];
            root[a] != root[b]
        })
}

fn degrees(g: &Graph, x: ElementSet) -> Vec<usize> {
    let mut deg = vec![0; g.v()];
    for i in x.iter() {
        let (a, b) = g.edges()[i];
        deg[a] += 1;
        deg[b] += 1;
    }
    deg
}

fn touched_connected(g: &Graph, x: ElementSet, deg: &[usize]) -> bool {
    let root = union_find(g, x);
    let mut roots: Vec<usize> = (0..g.v()).filter(|&v| deg[v] > 0).map(|v| root[v]).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len() == 1
}

/// `x` is the edge set of a simple cycle.
pub fn is_cycle(g: &Graph, x: ElementSet) -> bool {
    let deg = degrees(g, x);
    x.len() >= 3 && deg.iter().all(|&d| d == 0 || d == 2) && touched_connected(g, x, &deg)
}

/// `x` is the edge set of a simple path with at least one edge.
pub fn is_path(g: &Graph, x: ElementSet) -> bool {
    let deg = degrees(g, x);
    let ends = deg.iter().filter(|&&d| d == 1).count();
    !x.is_empty() && ends == 2 && deg.iter().all(|&d| d <= 2) && touched_connected(g, x, &deg)
}

/// The members' intersection graph is connected.
pub fn intersection_connected(members: &[ElementSet]) -> bool {
    if members.is_empty() {
        return false;
    }
    let mut seen = vec![false; members.len()];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..members.len() {
            if !seen[j] && members[i].intersects(members[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&s| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().collect()
    }

    #[test]
    fn predicates_on_small_graphs() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_cycle(&c4, ElementSet::full(4)));
        assert!(is_bond(&c4, set(&[0, 2])));
        assert!(is_bond(&c4, set(&[0, 1])));
        assert!(!is_bond(&c4, set(&[0])));
        assert!(!is_bond(&c4, set(&[0, 1, 2])));
        assert!(is_path(&c4, set(&[0, 1])));
        assert!(!is_path(&c4, ElementSet::full(4)));
        let k4 = Graph::complete(4).unwrap();
        // Two disjoint edges are neither a cycle nor a path.
        let (a, b) = (k4.edge_between(0, 1).unwrap(), k4.edge_between(2, 3).unwrap());
        assert!(!is_cycle(&k4, set(&[a, b])));
        assert!(!is_path(&k4, set(&[a, b])));
    }

    #[test]
    fn certificate_claims_are_checked() {
        let c4 = Graph::cycle(4).unwrap();
        let good = CoverCertificate::new(CoverKind::BondPartition, "C4", vec![set(&[0, 2]), set(&[1, 3])], false);
        good.verify(&c4).unwrap();
        let lying = CoverCertificate::new(CoverKind::BondPartition, "C4", vec![set(&[0, 2]), set(&[1, 3])], true);
        assert!(lying.verify(&c4).is_err());
        let short = CoverCertificate::new(CoverKind::BondCover, "C4", vec![set(&[0, 2])], true);
        assert!(short.verify(&c4).is_err());
    }
}

//! JSON formats and instance generators.
//!
//! Elements (matroid elements, graph edges) are 1-based in every serialized
//! form and 0-based in memory. Graph vertices stay 0-based: a hypercube
//! vertex is its bit string and a complete-graph vertex is its residue.
//!
//! Edge numbering of the generators, which certificates refer to:
//! - `K<n>`: pairs `(i, j)`, `i < j`, in lexicographic order.
//! - `K<a>,<b>`: left vertices `0..a`, right `a..a+b`; edge `(i, a+j)` has
//!   index `i·b + j`.
//! - `Q<n>`: by direction `d` ascending, then by vertex `x` ascending, over
//!   the edges `(x, x | 1<<d)` with bit `d` of `x` clear.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::certificate::{CoverCertificate, CoverKind};
use crate::determination::DeterminationReport;
use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matroid::Matroid;
use crate::oriented::{OrientedMatroid, SignedSet};

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

/// 1-based element list of a set.
pub fn to_one_based(s: ElementSet) -> Vec<usize> {
    s.iter().map(|e| e + 1).collect()
}

/// Set from a 1-based element list, checked against the ground set size.
pub fn from_one_based(xs: &[usize], n: usize) -> Result<ElementSet> {
    let mut s = ElementSet::EMPTY;
    for &x in xs {
        if x == 0 || x > n {
            return Err(Error::Parse(format!("element {x} outside 1..={n}")));
        }
        s.insert(x - 1);
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    pub circuits: Vec<Vec<usize>>,
}

impl MatroidJson {
    pub fn from_matroid(m: &Matroid, labels: Option<&[String]>) -> MatroidJson {
        MatroidJson {
            n: m.n(),
            labels: labels
                .map(|l| l.to_vec())
                .unwrap_or_else(|| (1..=m.n()).map(|i| i.to_string()).collect()),
            circuits: m.circuits().iter().map(|&c| to_one_based(c)).collect(),
        }
    }

    /// Validates the circuit axioms.
    pub fn to_matroid(&self) -> Result<Matroid> {
        if !self.labels.is_empty() && self.labels.len() != self.n {
            return Err(Error::Parse(format!("{} labels for {} elements", self.labels.len(), self.n)));
        }
        let circuits = self.circuits.iter().map(|c| from_one_based(c, self.n)).collect::<Result<_>>()?;
        Matroid::validate_circuits(self.n, circuits)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub v: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> GraphJson {
        GraphJson {
            v: g.v(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.v, self.edges.iter().map(|e| (e[0], e[1])).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedJson {
    pub pos: Vec<usize>,
    pub neg: Vec<usize>,
}

impl SignedJson {
    pub fn from_signed(x: SignedSet) -> SignedJson {
        SignedJson {
            pos: to_one_based(x.pos),
            neg: to_one_based(x.neg),
        }
    }

    pub fn to_signed(&self, n: usize) -> Result<SignedSet> {
        SignedSet::new(from_one_based(&self.pos, n)?, from_one_based(&self.neg, n)?)
    }
}

/// An oriented matroid: one canonical signed circuit per circuit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedJson {
    pub matroid: MatroidJson,
    pub circuits: Vec<SignedJson>,
}

impl OrientedJson {
    pub fn from_oriented(om: &OrientedMatroid) -> OrientedJson {
        OrientedJson {
            matroid: MatroidJson::from_matroid(om.matroid(), None),
            circuits: om.signed_circuits().into_iter().map(|x| SignedJson::from_signed(x.canonical())).collect(),
        }
    }

    /// Validates both the circuit axioms and signed elimination.
    pub fn to_oriented(&self) -> Result<OrientedMatroid> {
        let m = self.matroid.to_matroid()?;
        let signing = self.circuits.iter().map(|x| x.to_signed(m.n())).collect::<Result<Vec<_>>>()?;
        OrientedMatroid::validate_signed(&m, &signing)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub kind: CoverKind,
    pub graph: String,
    pub members: Vec<Vec<usize>>,
    pub size: usize,
    pub connected: bool,
}

impl CertificateJson {
    pub fn from_certificate(c: &CoverCertificate) -> CertificateJson {
        CertificateJson {
            kind: c.kind,
            graph: c.graph.clone(),
            members: c.members.iter().map(|&x| to_one_based(x)).collect(),
            size: c.size,
            connected: c.connected,
        }
    }

    /// Parses the members against the named graph and re-verifies.
    pub fn to_certificate(&self) -> Result<(Graph, CoverCertificate)> {
        let g = graph_by_name(&self.graph)?;
        let members = self.members.iter().map(|x| from_one_based(x, g.m())).collect::<Result<_>>()?;
        let c = CoverCertificate {
            kind: self.kind,
            graph: self.graph.clone(),
            members,
            size: self.size,
            connected: self.connected,
        };
        c.verify(&g)?;
        Ok((g, c))
    }
}

/// `{"<param>": value, "witness": [...], ...}`.
pub fn report_json(r: &DeterminationReport) -> Value {
    let witness: Vec<Vec<usize>> = r.witness.iter().map(|&c| to_one_based(c)).collect();
    let per: Vec<Value> = r
        .per_orientation
        .iter()
        .map(|(o, s)| {
            json!({
                "orientation": o,
                "circuits": s.iter().map(|&x| SignedJson::from_signed(x)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        r.param: r.value,
        "param": r.param,
        "witness": witness,
        "per_orientation": per,
        "orientations": r.orientations,
        "classes": r.classes,
    })
}

pub fn to_string<T: Serialize>(x: &T) -> Result<String> {
    serde_json::to_string_pretty(x).map_err(parse_err)
}

pub fn from_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(parse_err)
}

// ---------------------------------------------------------------- generators

fn num(s: &str, what: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad {what} in generator: {s:?}")))
}

/// `K<n>`, `K<a>,<b>`, `Q<n>`, `C<n>`, `G1` (also `diamond`).
pub fn graph_by_name(name: &str) -> Result<Graph> {
    let name = name.trim();
    if name.eq_ignore_ascii_case("g1") || name.eq_ignore_ascii_case("diamond") {
        return Ok(Graph::diamond());
    }
    let (head, rest) = name.split_at(name.chars().next().map_or(0, |c| c.len_utf8()));
    match head {
        "K" => match rest.split_once(',') {
            Some((a, b)) => Graph::complete_bipartite(num(a, "part size")?, num(b, "part size")?),
            None => Graph::complete(num(rest, "order")?),
        },
        "Q" => Graph::hypercube(num(rest, "dimension")?),
        "C" => Graph::cycle(num(rest, "length")?),
        _ => Err(Error::Parse(format!("unknown graph {name:?}"))),
    }
}

/// A named instance: a matroid and, for graphic and cographic ones, the
/// graph it came from.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub matroid: Matroid,
    pub graph: Option<Graph>,
    pub cographic: bool,
}

/// `U:r,n`, `fano`, `graphic:<graph>`, `cographic:<graph>` or a bare graph
/// name (graphic).
pub fn generate(spec: &str, budget: &Budget) -> Result<Instance> {
    let spec = spec.trim();
    let cap = budget.enumeration;
    if let Some(rest) = spec.strip_prefix("U:") {
        let (r, n) = rest.split_once(',').ok_or_else(|| Error::Parse(format!("expected U:r,n, got {spec:?}")))?;
        let (r, n) = (num(r, "rank")?, num(n, "size")?);
        return Ok(Instance {
            name: format!("U{r},{n}"),
            matroid: Matroid::uniform(r, n)?,
            graph: None,
            cographic: false,
        });
    }
    if spec.eq_ignore_ascii_case("fano") || spec.eq_ignore_ascii_case("F7") {
        return Ok(Instance {
            name: "F7".into(),
            matroid: Matroid::fano(),
            graph: None,
            cographic: false,
        });
    }
    let (cographic, gname) = if let Some(g) = spec.strip_prefix("cographic:") {
        (true, g)
    } else {
        (false, spec.strip_prefix("graphic:").unwrap_or(spec))
    };
    let g = graph_by_name(gname)?;
    let matroid = if cographic { g.cographic_matroid(cap)? } else { g.graphic_matroid(cap)? };
    Ok(Instance {
        name: format!("{}({gname})", if cographic { "M*" } else { "M" }),
        matroid,
        graph: Some(g),
        cographic,
    })
}

/// Reads a matroid from JSON text: a matroid, an oriented matroid (its
/// underlying matroid) or a graph (its cycle matroid).
pub fn matroid_from_json(text: &str, budget: &Budget) -> Result<Matroid> {
    let v: Value = from_str(text)?;
    if v.get("matroid").is_some() {
        Ok(from_str::<OrientedJson>(text)?.to_oriented()?.matroid().clone())
    } else if v.get("edges").is_some() {
        from_str::<GraphJson>(text)?.to_graph()?.graphic_matroid(budget.enumeration)
    } else {
        from_str::<MatroidJson>(text)?.to_matroid()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::kn_bipartite_bond_cover;
    use crate::oriented::OrientationSpace;

    #[test]
    fn matroid_round_trip() {
        let m = Matroid::uniform(2, 4).unwrap();
        let j = MatroidJson::from_matroid(&m, None);
        assert_eq!(j.circuits[0], vec![1, 2, 3]);
        let back: MatroidJson = from_str(&to_string(&j).unwrap()).unwrap();
        assert_eq!(back.to_matroid().unwrap().circuits(), m.circuits());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(from_str::<MatroidJson>("{\"n\": 3"), Err(Error::Parse(_))));
        let j = MatroidJson {
            n: 3,
            labels: vec![],
            circuits: vec![vec![0, 1]],
        };
        assert!(j.to_matroid().is_err());
        // Not an antichain.
        let j = MatroidJson {
            n: 3,
            labels: vec![],
            circuits: vec![vec![1, 2], vec![1, 2, 3]],
        };
        assert!(j.to_matroid().is_err());
    }

    #[test]
    fn oriented_round_trip() {
        let m = Matroid::uniform(2, 4).unwrap();
        let sp = OrientationSpace::new(&m, &Budget::default()).unwrap();
        for om in sp.orientations() {
            let j = OrientedJson::from_oriented(&om);
            let text = to_string(&j).unwrap();
            let back = from_str::<OrientedJson>(&text).unwrap().to_oriented().unwrap();
            assert_eq!(OrientedJson::from_oriented(&back), j);
            assert_eq!(sp.position(&back), sp.position(&om));
        }
    }

    #[test]
    fn certificate_round_trip() {
        let c = kn_bipartite_bond_cover(5).unwrap();
        let j = CertificateJson::from_certificate(&c);
        let text = to_string(&j).unwrap();
        assert!(text.contains("\"bond-cover\""));
        let (_, back) = from_str::<CertificateJson>(&text).unwrap().to_certificate().unwrap();
        assert_eq!(back, c);
        let mut bad = j.clone();
        bad.members.pop();
        bad.size -= 1;
        assert!(bad.to_certificate().is_err());
    }

    #[test]
    fn generators() {
        let b = Budget::default();
        assert_eq!(generate("U:2,4", &b).unwrap().matroid.num_circuits(), 4);
        assert_eq!(generate("graphic:K4", &b).unwrap().matroid.num_circuits(), 7);
        assert_eq!(generate("cographic:K4", &b).unwrap().matroid.num_circuits(), 7);
        assert_eq!(generate("graphic:K2,4", &b).unwrap().matroid.num_circuits(), 6);
        assert_eq!(generate("graphic:Q3", &b).unwrap().matroid.num_circuits(), 28);
        assert_eq!(generate("G1", &b).unwrap().matroid.num_circuits(), 3);
        assert_eq!(generate("fano", &b).unwrap().matroid.n(), 7);
        assert!(generate("X9", &b).is_err());
        assert!(generate("U:2", &b).is_err());
    }

    #[test]
    fn graph_json_round_trip() {
        let g = Graph::hypercube(3).unwrap();
        let j = GraphJson::from_graph(&g);
        let back = from_str::<GraphJson>(&to_string(&j).unwrap()).unwrap().to_graph().unwrap();
        assert_eq!(back.edges(), g.edges());
        let text = to_string(&j).unwrap();
        assert_eq!(matroid_from_json(&text, &Budget::default()).unwrap().num_circuits(), 28);
    }
}

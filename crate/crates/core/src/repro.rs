//! Reproduction suites: each row recomputes one published value or
//! inequality on one instance and compares it with the closed formula (or
//! an independent oracle).

use std::fmt::Display;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::budget::Budget;
use crate::certificate::is_bond;
use crate::chirotope::Chirotope;
use crate::constructions::{
    grid_diagonal_configuration, kn_bipartite_bond_cover, kn_connected_cycle_cover, qn_bond_partition,
    qn_connected_bond_cover, qn_connected_cycle_cover, unif_corank2_determining_set,
};
use crate::coverings::{
    self, cographic_is_eulerian, cographic_thm3_preconditions, delta, graphic_is_eulerian, is_connected_element_cover,
    kappa_ic, weak_cover_params,
};
use crate::determination::{determines, determines_all, Differences};
use crate::element_set::binomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::generate;
use crate::matroid::Matroid;
use crate::oriented::OrientationSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// The statement's hypotheses do not hold on this instance.
    Inapplicable,
}

/// Where the expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// A closed formula or inequality from the literature.
    Formula,
    /// An independent exhaustive computation.
    Oracle,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproResult {
    pub id: String,
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub provenance: Provenance,
    pub status: Status,
    pub runtime_ms: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Uniform,
    Regular,
    Hypercube,
    Complete,
    Bounds,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "uniform" => Suite::Uniform,
            "regular" => Suite::Regular,
            "hypercube" => Suite::Hypercube,
            "complete" => Suite::Complete,
            "bounds" => Suite::Bounds,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// What a row check returns: expected, computed, whether they agree.
type Check = Result<(String, String, bool)>;

fn row(id: &str, instance: &str, provenance: Provenance, f: impl FnOnce() -> Check) -> ReproResult {
    let start = Instant::now();
    let (expected, computed, status) = match f() {
        Ok((e, c, ok)) => (e, c, if ok { Status::Pass } else { Status::Fail }),
        Err(Error::BudgetExceeded(what)) | Err(Error::TooLarge(what)) => {
            (String::new(), format!("budget: {what}"), Status::Skipped)
        }
        Err(e) => (String::new(), format!("error: {e}"), Status::Fail),
    };
    ReproResult {
        id: id.into(),
        instance: instance.into(),
        expected,
        computed,
        provenance,
        status,
        runtime_ms: start.elapsed().as_millis(),
    }
}

fn eq<T: PartialEq + Display>(expected: T, computed: T) -> Check {
    Ok((expected.to_string(), computed.to_string(), expected == computed))
}

pub fn run(suite: Suite, budget: &Budget) -> Vec<ReproResult> {
    match suite {
        Suite::Uniform => uniform(budget),
        Suite::Regular => regular(budget),
        Suite::Hypercube => hypercube(budget),
        Suite::Complete => complete(budget),
        Suite::Bounds => bounds(budget),
        Suite::All => [Suite::Uniform, Suite::Regular, Suite::Hypercube, Suite::Complete, Suite::Bounds]
            .into_iter()
            .flat_map(|s| run(s, budget))
            .collect(),
    }
}

/// CSV of the rows; only the last column depends on the run.
pub fn to_csv(rows: &[ReproResult]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Parse(e.to_string()))?;
    }
    String::from_utf8(w.into_inner().map_err(|e| Error::Parse(e.to_string()))?).map_err(|e| Error::Parse(e.to_string()))
}

fn uniform(b: &Budget) -> Vec<ReproResult> {
    use Provenance::*;
    let mut out = Vec::new();
    for n in 3..=5usize {
        let name = format!("U{},{n}", n - 2);
        let d = || Differences::compute(&Matroid::uniform(n - 2, n)?, b);
        out.push(row("uniform-corank2-s", &name, Formula, || eq(n - 1, d()?.s(b)?.value)));
        out.push(row("uniform-corank2-stilde", &name, Formula, || eq(n.div_ceil(2), d()?.s_tilde(b)?.value)));
        out.push(row("uniform-corank2-alternating-sets", &name, Formula, || {
            let sp = OrientationSpace::new(&Matroid::uniform(n - 2, n)?, b)?;
            let mut good = 0;
            for o in 0..sp.len() {
                let s = unif_corank2_determining_set(&sp.orientation(o))?;
                if s.len() == n.div_ceil(2) && determines(&sp, &s)? {
                    good += 1;
                }
            }
            Ok((
                format!("{} of {} determined by {} circuits", sp.len(), sp.len(), n.div_ceil(2)),
                format!("{good} of {}", sp.len()),
                good == sp.len(),
            ))
        }));
    }
    for n in 3..=5usize {
        for r in 1..n {
            let expected = binomial(n, r + 1) as usize + r + 1 - n;
            out.push(row("uniform-sbar", &format!("U{r},{n}"), Formula, || {
                eq(expected, Differences::compute(&Matroid::uniform(r, n)?, b)?.s_bar().value)
            }));
        }
    }
    for (r, n) in [(2, 4), (2, 5), (3, 5)] {
        out.push(row("uniform-sandwich", &format!("U{r},{n}"), Formula, || {
            let m = Matroid::uniform(r, n)?;
            let d = Differences::compute(&m, b)?;
            let s = d.s(b)?.value;
            let lo = coverings::covering_number(n, r + 1, r, b)?;
            let hi = coverings::connected_covering_number(n, r + 1, r, b)?;
            let wc = weak_cover_params(d.space(), b)?.0.value;
            Ok((
                "C(n,r+1,r) <= s <= CC(n,r+1,r), WC = C(n,r+1,r)".into(),
                format!("C={lo} s={s} CC={hi} WC={wc}"),
                lo <= s && s <= hi && wc == lo,
            ))
        }));
    }
    for ell in [2usize, 3] {
        out.push(row("grid-diagonal-witnesses", &format!("r=3 l={ell}"), Formula, || {
            let g = grid_diagonal_configuration(3, ell, (1, 2))?;
            let other = grid_diagonal_configuration(3, ell, (1, 4))?;
            let same: bool = Chirotope::equal_up_to_sign(&g.chirotope, &other.chirotope);
            let forced = if g.pairwise_disjoint { g.invertible_witnesses } else { 0 };
            Ok((
                format!(">= {} pairwise disjoint invertible witnesses", ell * ell),
                format!("{forced} (n={}, eps-independent={same})", g.elements),
                forced >= ell * ell && same,
            ))
        }));
    }
    out
}

const REGULAR: [&str; 4] = ["graphic:G1", "graphic:K4", "graphic:K2,4", "graphic:Q3"];

fn regular(b: &Budget) -> Vec<ReproResult> {
    use Provenance::*;
    let mut out = Vec::new();
    for spec in REGULAR {
        out.push(row("single-class-equalities", spec, Formula, || {
            let m = generate(spec, b)?.matroid;
            let d = Differences::compute(&m, b)?;
            let (s, st) = (d.s(b)?.value, d.s_tilde(b)?.value);
            let cover = coverings::cc(&m, b)?;
            // The minimum connected cover is itself a determining set of size s.
            let common = cover.value == s && determines_all(d.space(), &cover.members)?;
            Ok((
                "stilde = s = cc, common witness".into(),
                format!("stilde={st} s={s} cc={} common={common}", cover.value),
                st == s && s == cover.value && common,
            ))
        }));
        out.push(row("single-class-sbar", spec, Formula, || {
            let m = generate(spec, b)?.matroid;
            let expected = m.num_circuits() + 1 - delta(&m).min(kappa_ic(&m));
            eq(expected, Differences::compute(&m, b)?.s_bar().value)
        }));
        out.push(row("regular-orientation-count", spec, Formula, || {
            let m = generate(spec, b)?.matroid;
            eq(1usize << (m.n() - 1), OrientationSpace::new(&m, b)?.len())
        }));
    }
    out.push(row("binary-non-regular-not-orientable", "F7", Formula, || {
        eq(0, OrientationSpace::new(&Matroid::fano(), b)?.len())
    }));
    out
}

fn hypercube(b: &Budget) -> Vec<ReproResult> {
    use Provenance::*;
    let mut out = Vec::new();
    for n in 3..=5usize {
        let name = format!("Q{n}");
        let expected = (n + 1).div_ceil(2);
        out.push(row("hypercube-cycle-cover", &name, Formula, || {
            eq(expected, qn_connected_cycle_cover(n, b)?.size)
        }));
        if n <= 4 {
            out.push(row("hypercube-cc-exact", &name, Oracle, || {
                eq(expected, coverings::cc(&generate(&name, b)?.matroid, b)?.value)
            }));
        } else {
            out.push(row("hypercube-cc-lower-bound", &name, Formula, || {
                let g = Graph::hypercube(n)?;
                // Longest cycles are Hamiltonian.
                let by_count = (g.m() - 1).div_ceil(g.v());
                let lower = if graphic_is_eulerian(&g) && by_count <= 2 { 3 } else { by_count };
                eq(expected, lower)
            }));
        }
        if n % 2 == 0 {
            out.push(row("hypercube-eulerian-excludes-two", &name, Formula, || {
                let g = Graph::hypercube(n)?;
                Ok(("Eulerian".into(), graphic_is_eulerian(&g).to_string(), graphic_is_eulerian(&g)))
            }));
        }
    }
    for n in 2..=5usize {
        let name = format!("Q{n}");
        out.push(row("hypercube-bond-partition", &name, Formula, || {
            let g = Graph::hypercube(n)?;
            let cert = qn_bond_partition(n)?;
            let single = is_bond(&g, g.all_edges());
            Ok((
                "bc = 2".into(),
                format!("partition into {} bonds, E is a bond: {single}", cert.size),
                cert.size == 2 && !single,
            ))
        }));
        out.push(row("hypercube-connected-bond-cover", &name, Formula, || {
            let g = Graph::hypercube(n)?;
            let cert = qn_connected_bond_cover(n)?;
            let eulerian = cographic_is_eulerian(&g);
            Ok((
                "cbc = 3".into(),
                format!("certificate {} bonds, cographic Eulerian: {eulerian}", cert.size),
                cert.size == 3 && eulerian,
            ))
        }));
        if n <= 4 {
            out.push(row("hypercube-bc-cbc-exact", &name, Oracle, || {
                let g = Graph::hypercube(n)?;
                let (bc, cbc) = (coverings::bc(&g, b)?.value, coverings::cbc(&g, b)?.value);
                Ok(("bc=2 cbc=3".into(), format!("bc={bc} cbc={cbc}"), bc == 2 && cbc == 3))
            }));
        }
    }
    out
}

fn complete(b: &Budget) -> Vec<ReproResult> {
    use Provenance::*;
    let mut out = Vec::new();
    for n in 4..=8usize {
        let name = format!("K{n}");
        let half = n.div_ceil(2);
        out.push(row("complete-cycle-cover", &name, Formula, || eq(half, kn_connected_cycle_cover(n)?.size)));
        out.push(row("complete-c-exact", &name, Formula, || {
            eq(n / 2, coverings::c(&generate(&name, b)?.matroid, b)?.value)
        }));
        out.push(row("complete-cc-exact", &name, Oracle, || {
            eq(half, coverings::cc(&generate(&name, b)?.matroid, b)?.value)
        }));
        if n >= 7 {
            out.push(row("complete-cc-parity-bound", &name, Formula, || {
                let g = Graph::complete(n)?;
                let c = coverings::c(&generate(&name, b)?.matroid, b)?.value;
                // A cover of size c by Hamiltonian cycles with c·n = |E| is a
                // partition, hence disconnected.
                let lower = if c * n == g.m() { c + 1 } else { c };
                eq(half, lower)
            }));
        }
    }
    for n in 2..=8usize {
        let name = format!("K{n}");
        let bits = (usize::BITS - (n - 1).leading_zeros()) as usize;
        out.push(row("complete-bond-cover", &name, Formula, || {
            let g = Graph::complete(n)?;
            let cert = kn_bipartite_bond_cover(n)?;
            let bc = coverings::bc(&g, b)?;
            let cbc = coverings::cbc(&g, b)?.value;
            let connected = is_connected_element_cover(g.all_edges(), &bc.members);
            // Every edge of K_n lies in a triangle for n >= 3; K_2 has none.
            let pre = n == 2 || cographic_thm3_preconditions(&g);
            Ok((
                format!("bc = cbc = {bits}"),
                format!(
                    "certificate={} bc={} cbc={cbc} min cover connected={connected} preconditions={pre}",
                    cert.size, bc.value
                ),
                cert.size == bits && bc.value == bits && cbc == bits && connected && pre,
            ))
        }));
    }
    for n in [4usize, 6] {
        let name = format!("K2,{n}");
        out.push(row("k2n-make-connected-tight", &name, Formula, || {
            let m = generate(&name, b)?.matroid;
            let (c, cc) = (coverings::c(&m, b)?.value, coverings::cc(&m, b)?.value);
            Ok((
                format!("c={} cc={}", n / 2, n - 1),
                format!("c={c} cc={cc}"),
                c == n / 2 && cc == 2 * c - 1,
            ))
        }));
    }
    out
}

/// Matroids on which the general bounds are checked.
pub const CORPUS: [&str; 16] = [
    "U:1,4",
    "U:2,3",
    "U:2,4",
    "U:2,5",
    "U:3,4",
    "U:3,5",
    "graphic:G1",
    "graphic:K4",
    "graphic:K2,4",
    "graphic:Q2",
    "graphic:Q3",
    "cographic:G1",
    "cographic:K4",
    "cographic:K2,4",
    "cographic:Q2",
    "cographic:Q3",
];

fn bounds(b: &Budget) -> Vec<ReproResult> {
    use Provenance::*;
    let mut out = Vec::new();
    for spec in CORPUS {
        out.push(row("determination-bounds", spec, Formula, || {
            let m = generate(spec, b)?.matroid;
            let d = Differences::compute(&m, b)?;
            let (s, st, sb) = (d.s(b)?.value, d.s_tilde(b)?.value, d.s_bar().value);
            let (wc, wct) = weak_cover_params(d.space(), b)?;
            let cc = coverings::cc(&m, b)?.value;
            let big = coverings::cc_base(&m, b)?.value;
            let lambda = coverings::lambda(&m, b)?.ok_or(Error::NotConnected)?;
            let nc = m.num_circuits();
            let min_star = (0..m.n()).map(|e| m.star(e).len()).min().unwrap_or(0);
            let lo = nc + 1 - delta(&m).min(kappa_ic(&m));
            let hi = nc + 1 - lambda.min(m.n() - m.rank());
            let ok = st <= s
                && s <= sb
                && s <= min_star
                && wct.value <= st
                && wc.value <= s
                && cc <= st
                && s <= big
                && lo <= sb
                && sb <= hi;
            Ok((
                "stilde<=s<=sbar, s<=|S_e|, WC~<=stilde, WC<=s, cc<=stilde, s<=CC, sbar in [lo,hi]".into(),
                format!(
                    "stilde={st} s={s} sbar={sb} min|S_e|={min_star} WC~={} WC={} cc={cc} CC={big} lo={lo} hi={hi}",
                    wct.value, wc.value
                ),
                ok,
            ))
        }));
        out.push(row("stars-determine-all", spec, Formula, || {
            let m = generate(spec, b)?.matroid;
            let sp = OrientationSpace::new(&m, b)?;
            let mut good = 0;
            for e in 0..m.n() {
                if determines_all(&sp, &m.star(e))? {
                    good += 1;
                }
            }
            eq(m.n(), good)
        }));
        out.push(row("make-connected", spec, Formula, || {
            let m = generate(spec, b)?.matroid;
            let (c, cc) = (coverings::c(&m, b)?.value, coverings::cc(&m, b)?.value);
            Ok(("c <= cc <= 2c-1".into(), format!("c={c} cc={cc}"), c <= cc && cc < 2 * c))
        }));
        if spec.contains("graphic") {
            out.push(edge_vertex_bound(spec, b));
        }
    }
    out
}

/// `(|E|-1)/circ <= cc <= θ_e <= |E| - r + 2 - g*_e` for regular `M`. The
/// upper bound is only known when some contraction `M/e` is connected; the
/// row is marked inapplicable otherwise.
fn edge_vertex_bound(spec: &str, b: &Budget) -> ReproResult {
    let mut r = row("edge-vertex-bound", spec, Provenance::Formula, || {
        let m = generate(spec, b)?.matroid;
        let cc = coverings::cc(&m, b)?.value;
        let (n, r, circ) = (m.n(), m.rank(), m.circumference());
        let Some(e) = (0..n).find(|&e| coverings::contraction_connected(&m, e)) else {
            return Ok(("M/e connected for some e".into(), "no such e".into(), false));
        };
        let theta = coverings::theta(&m, e, b)?.ok_or(Error::NotConnected)?;
        let ge = m.cogirth_at(e).ok_or(Error::NotConnected)?;
        Ok((
            "(|E|-1)/circ <= cc <= theta_e <= |E|-r+2-g*_e".into(),
            format!("{}/{circ} <= {cc} <= {theta} <= {} (e={})", n - 1, n + 2 - r - ge, e + 1),
            cc * circ >= n - 1 && cc <= theta && theta + r + ge <= n + 2,
        ))
    });
    if r.computed == "no such e" {
        r.status = Status::Inapplicable;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("hypercube".parse::<Suite>().unwrap(), Suite::Hypercube);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn csv_is_deterministic_up_to_runtime() {
        let b = Budget::default();
        let strip = |rows: Vec<ReproResult>| {
            let rows: Vec<ReproResult> = rows.into_iter().map(|r| ReproResult { runtime_ms: 0, ..r }).collect();
            to_csv(&rows).unwrap()
        };
        let a = strip(run(Suite::Regular, &b));
        assert_eq!(a, strip(run(Suite::Regular, &b)));
        assert!(a.starts_with("id,instance,expected,computed,provenance,status,runtime_ms"));
    }

    #[test]
    fn budget_exhaustion_is_skipped() {
        let tiny = Budget {
            nodes: 5,
            ..Budget::default()
        };
        let rows = run(Suite::Complete, &tiny);
        assert!(rows.iter().any(|r| r.status == Status::Skipped));
        assert!(rows.iter().all(|r| r.status != Status::Fail), "{rows:?}");
    }
}

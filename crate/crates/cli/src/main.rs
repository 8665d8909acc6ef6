use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use omdet::certificate::{intersection_connected, CoverCertificate, CoverKind};
use omdet::constructions::{
    kn_bipartite_bond_cover, kn_connected_cycle_cover, kn_zigzag_paths, qn_bond_partition, qn_connected_bond_cover,
    qn_connected_cycle_cover,
};
use omdet::coverings::{self, covering_design, weak_cover_params, ParamTable};
use omdet::determination::Differences;
use omdet::io::{self, generate, graph_by_name, matroid_from_json, report_json, to_one_based, CertificateJson, OrientedJson};
use omdet::repro::{self, Status, Suite};
use omdet::{Budget, ElementSet, Error, Graph, Matroid, OrientationSpace};

/// Exact determination and covering parameters of (oriented) matroids.
#[derive(Parser)]
#[command(name = "omdet", version)]
struct Cli {
    #[command(flatten)]
    limits: Limits,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Limits {
    /// Most orientations an enumeration may hold.
    #[arg(long, global = true, env = "OMDET_BUDGET_ORIENTATIONS", default_value_t = 1 << 16)]
    budget_orientations: usize,
    /// Most search nodes one subset search may visit.
    #[arg(long, alias = "budget", global = true, env = "OMDET_BUDGET_SUBSETS", default_value_t = 200_000_000)]
    budget_subsets: u64,
    /// Most cycles or bonds a graph enumeration may list.
    #[arg(long, global = true, env = "OMDET_BUDGET_ENUMERATION", default_value_t = 50_000)]
    budget_enumeration: usize,
    /// Wall-clock limit per search, in seconds.
    #[arg(long, global = true, env = "OMDET_BUDGET_TIME_LIMIT")]
    time_limit: Option<f64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "OMDET_THREADS")]
    threads: Option<usize>,
}

impl Limits {
    fn budget(&self) -> Budget {
        Budget {
            orientations: self.budget_orientations,
            nodes: self.budget_subsets,
            enumeration: self.budget_enumeration,
            time_limit: self.time_limit.map(Duration::from_secs_f64),
        }
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Generator: U:r,n, fano, graphic:<G>, cographic:<G> or a graph name
    /// (K<n>, K<a>,<b>, Q<n>, C<n>, G1).
    #[arg(long)]
    gen: Option<String>,
    /// JSON file (matroid, oriented matroid or graph) or a generator.
    #[arg(long)]
    matroid: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    S,
    Stilde,
    Sbar,
    C,
    Cc,
    Bc,
    Cbc,
    #[value(name = "CC")]
    BigCc,
    #[value(name = "WC")]
    Wc,
    Lambda,
    Delta,
    Kappa,
    Theta,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    QnCycleCover,
    QnBondPartition,
    QnBondCover,
    KnBondCover,
    KnCycleCover,
    KnZigzagPaths,
}

#[derive(Subcommand)]
enum Cmd {
    /// One parameter as JSON, or the whole parameter table.
    Params {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        param: Option<Param>,
        /// Print the parameter table as CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// A covering parameter, optionally writing its witness.
    Cover {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        param: Param,
        /// Write the minimum cover (a certificate when the graph is known).
        #[arg(long)]
        emit_witness: Option<PathBuf>,
    },
    /// Covering number C(n,k,r), or CC(n,k,r) with --connected.
    Design {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        connected: bool,
    },
    /// A verified cover certificate from an explicit construction.
    Construct {
        #[arg(value_enum)]
        name: Construction,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Every orientation (or one per reorientation class) as JSON.
    Enumerate {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        reps: bool,
    },
    /// Re-verify a certificate file.
    Verify { certificate: PathBuf },
    /// Rerun the reproduction suites.
    Repro {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        csv: bool,
    },
}

/// Failure with an exit code: 2 input, 3 budget, 4 construction, 1 other.
struct Fail {
    code: u8,
    msg: String,
    partial: Option<Value>,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = match &e {
            Error::BudgetExceeded(_) | Error::TooLarge(_) => 3,
            Error::ConstructionCheckFailed(_) => 4,
            Error::NotOrientable | Error::NotConnected | Error::DegenerateConfiguration(_) | Error::NotCorankTwo => 1,
            _ => 2,
        };
        Fail { code, msg: e.to_string(), partial: None }
    }
}

type Run<T> = std::result::Result<T, Fail>;

/// The cover behind a parameter value, for `--emit-witness`.
type Witness = Option<(CoverKind, Vec<ElementSet>)>;

struct Loaded {
    matroid: Matroid,
    /// The generating graph with its name, when there is one.
    graph: Option<(String, Graph)>,
    cographic: bool,
}

fn load(src: &Source, budget: &Budget) -> Run<Loaded> {
    let spec = src.gen.as_deref().or(src.matroid.as_deref()).unwrap();
    if src.matroid.is_some() && Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| Fail { code: 2, msg: format!("{spec}: {e}"), partial: None })?;
        return Ok(Loaded { matroid: matroid_from_json(&text, budget)?, graph: None, cographic: false });
    }
    let inst = generate(spec, budget)?;
    let name = spec.trim();
    let name = name.strip_prefix("cographic:").or(name.strip_prefix("graphic:")).unwrap_or(name);
    Ok(Loaded {
        matroid: inst.matroid,
        graph: inst.graph.map(|g| (name.to_string(), g)),
        cographic: inst.cographic,
    })
}

fn sets(xs: &[ElementSet]) -> Vec<Vec<usize>> {
    xs.iter().map(|&x| to_one_based(x)).collect()
}

/// JSON value of one parameter plus the cover behind it, if any.
fn param_value(p: Param, l: &Loaded, budget: &Budget) -> omdet::Result<(Value, Witness)> {
    let m = &l.matroid;
    let graph = || {
        l.graph
            .as_ref()
            .map(|(_, g)| g)
            .ok_or_else(|| Error::BadParameters("bond covers need a graph generator".into()))
    };
    let circuit_kind = if l.cographic { CoverKind::BondCover } else { CoverKind::CycleCover };
    let cover = |name: &str, cov: coverings::Covering, kind| {
        let v = json!({ name: cov.value, "param": name, "witness": sets(&cov.members) });
        (v, Some((kind, cov.members)))
    };
    Ok(match p {
        Param::S | Param::Stilde | Param::Sbar => {
            let d = Differences::compute(m, budget)?;
            let r = match p {
                Param::S => d.s(budget)?,
                Param::Stilde => d.s_tilde(budget)?,
                _ => d.s_bar(),
            };
            (report_json(&r), None)
        }
        Param::C => cover("c", coverings::c(m, budget)?, circuit_kind),
        Param::Cc => cover("cc", coverings::cc(m, budget)?, circuit_kind),
        Param::Bc => cover("bc", coverings::bc(graph()?, budget)?, CoverKind::BondCover),
        Param::Cbc => cover("cbc", coverings::cbc(graph()?, budget)?, CoverKind::BondCover),
        Param::BigCc => cover("CC", coverings::cc_base(m, budget)?, CoverKind::ElementCover),
        Param::Wc => {
            let space = OrientationSpace::new(m, budget)?;
            if space.is_empty() {
                return Err(Error::NotOrientable);
            }
            let (wc, wct) = weak_cover_params(&space, budget)?;
            let v = json!({ "WC": wc.value, "WC_tilde": wct.value, "param": "WC", "witness": sets(&wc.members) });
            (v, Some((CoverKind::WeakCover, wc.members)))
        }
        Param::Lambda => (json!({ "lambda": coverings::lambda(m, budget)?, "param": "lambda" }), None),
        Param::Delta => (
            json!({ "delta": coverings::delta(m), "delta_min": coverings::delta_min(m), "param": "delta" }),
            None,
        ),
        Param::Kappa => (json!({ "kappa": coverings::kappa_ic(m), "param": "kappa" }), None),
        Param::Theta => {
            let theta = (0..m.n()).map(|e| coverings::theta(m, e, budget)).collect::<omdet::Result<Vec<_>>>()?;
            (json!({ "theta": theta, "param": "theta" }), None)
        }
    })
}

fn param_name(p: Param) -> String {
    p.to_possible_value().unwrap().get_name().to_string()
}

fn one_param(p: Param, l: &Loaded, budget: &Budget) -> Run<(Value, Witness)> {
    param_value(p, l, budget).map_err(|e| {
        let mut f = Fail::from(e);
        if f.code == 3 {
            f.partial = Some(json!({ "param": param_name(p), "status": "skipped", "reason": f.msg }));
        }
        f
    })
}

fn pretty(v: &Value) -> Run<String> {
    Ok(io::to_string(v)?)
}

fn write_out(path: Option<&Path>, text: &str) -> Run<()> {
    match path {
        Some(p) => std::fs::write(p, format!("{text}\n"))
            .map_err(|e| Fail { code: 1, msg: format!("{}: {e}", p.display()), partial: None }),
        None => {
            emit(text);
            Ok(())
        }
    }
}

/// Re-verifies against the named graph before anything is written.
fn emit_certificate(cert: &CoverCertificate, out: Option<&Path>) -> Run<()> {
    cert.verify(&graph_by_name(&cert.graph)?)?;
    write_out(out, &io::to_string(&CertificateJson::from_certificate(cert))?)
}

fn construct(name: Construction, n: usize, budget: &Budget) -> omdet::Result<CoverCertificate> {
    Ok(match name {
        Construction::QnCycleCover => qn_connected_cycle_cover(n, budget)?,
        Construction::QnBondPartition => qn_bond_partition(n)?,
        Construction::QnBondCover => qn_connected_bond_cover(n)?,
        Construction::KnBondCover => kn_bipartite_bond_cover(n)?,
        Construction::KnCycleCover => kn_connected_cycle_cover(n)?,
        Construction::KnZigzagPaths => {
            let paths = kn_zigzag_paths(n)?;
            let connected = intersection_connected(&paths);
            CoverCertificate::new(CoverKind::PathPartition, &format!("K{n}"), paths, connected)
        }
    })
}

fn repro_table(rows: &[repro::ReproResult]) -> String {
    let status = |r: &repro::ReproResult| serde_json::to_value(r.status).unwrap().as_str().unwrap_or_default().to_string();
    let mut cells = vec![["id", "instance", "expected", "computed", "status", "ms"].map(String::from)];
    for r in rows {
        cells.push([
            r.id.clone(),
            r.instance.clone(),
            r.expected.clone(),
            r.computed.clone(),
            status(r),
            r.runtime_ms.to_string(),
        ]);
    }
    let widths: Vec<usize> = (0..6).map(|i| cells.iter().map(|c| c[i].chars().count()).max().unwrap()).collect();
    let mut out = String::new();
    for c in &cells {
        let line: Vec<String> = c.iter().zip(&widths).map(|(x, &w)| format!("{x:<w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    let count = |s| rows.iter().filter(|r| r.status == s).count();
    out.push_str(&format!(
        "{} rows: {} pass, {} fail, {} skipped, {} inapplicable",
        rows.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped),
        count(Status::Inapplicable)
    ));
    out
}

/// Prints to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn run(cli: Cli) -> Run<u8> {
    let budget = cli.limits.budget();
    match cli.cmd {
        Cmd::Params { source, param: Some(p), .. } => {
            let l = load(&source, &budget)?;
            emit(&pretty(&one_param(p, &l, &budget)?.0)?);
        }
        Cmd::Params { source, param: None, csv } => {
            let l = load(&source, &budget)?;
            let name = source.gen.as_deref().or(source.matroid.as_deref()).unwrap();
            let table = ParamTable::compute(name, &l.matroid, &budget);
            if csv {
                emit(ParamTable::to_csv(&[table])?.trim_end());
            } else {
                emit(&io::to_string(&table)?);
            }
        }
        Cmd::Cover { source, param, emit_witness } => {
            let l = load(&source, &budget)?;
            let (value, witness) = one_param(param, &l, &budget)?;
            emit(&pretty(&value)?);
            if let Some(path) = emit_witness {
                let Some((kind, members)) = witness else {
                    return Err(Fail { code: 2, msg: "this parameter has no cover witness".into(), partial: None });
                };
                match (&l.graph, kind) {
                    (Some((name, _)), CoverKind::CycleCover | CoverKind::BondCover) => {
                        let connected = intersection_connected(&members);
                        emit_certificate(&CoverCertificate::new(kind, name, members, connected), Some(&path))?;
                    }
                    _ => {
                        let v = json!({ "param": param_name(param), "members": sets(&members) });
                        write_out(Some(&path), &pretty(&v)?)?;
                    }
                }
            }
        }
        Cmd::Design { n, k, r, connected } => {
            let cov = covering_design(n, k, r, connected, &budget)?;
            let name = if connected { "CC" } else { "C" };
            let v = json!({ name: cov.value, "n": n, "k": k, "r": r, "blocks": sets(&cov.members) });
            emit(&pretty(&v)?);
        }
        Cmd::Construct { name, n, out } => {
            emit_certificate(&construct(name, n, &budget)?, out.as_deref())?;
        }
        Cmd::Enumerate { source, reps } => {
            let l = load(&source, &budget)?;
            let space = OrientationSpace::new(&l.matroid, &budget)?;
            let picked: Vec<usize> = if reps { space.reps().to_vec() } else { (0..space.len()).collect() };
            let list: Vec<OrientedJson> =
                picked.iter().map(|&i| OrientedJson::from_oriented(&space.orientation(i))).collect();
            let v = json!({ "count": space.len(), "classes": space.num_classes(), "orientations": list });
            emit(&pretty(&v)?);
        }
        Cmd::Verify { certificate } => {
            let text = std::fs::read_to_string(&certificate)
                .map_err(|e| Fail { code: 2, msg: format!("{}: {e}", certificate.display()), partial: None })?;
            let (_, cert) = io::from_str::<CertificateJson>(&text)?.to_certificate()?;
            emit(&format!("ok: {} {:?} of size {}", cert.graph, cert.kind, cert.size));
        }
        Cmd::Repro { suite, csv } => {
            let suite: Suite = suite.parse()?;
            let rows = repro::run(suite, &budget);
            if csv {
                emit(repro::to_csv(&rows)?.trim_end());
            } else {
                emit(&repro_table(&rows));
            }
            if rows.iter().any(|r| r.status == Status::Fail) {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.limits.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("omdet: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if let Some(p) = f.partial {
                emit(&serde_json::to_string_pretty(&p).unwrap());
            }
            eprintln!("omdet: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

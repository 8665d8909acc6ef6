use std::path::PathBuf;
use std::process::{Command, Output};

use omdet::io::{self, CertificateJson, MatroidJson, OrientedJson};
use omdet::{Budget, Graph, OrientationSpace};
use serde_json::Value;

fn omdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omdet")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn sbar_of_u24() {
    let out = omdet(&["params", "--gen", "U:2,4", "--param", "sbar"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["sbar"], 3);
    // The witness is a non-determining set of sbar - 1 circuits.
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn cc_of_k4() {
    let v = json(&omdet(&["params", "--gen", "graphic:K4", "--param", "cc"]));
    assert_eq!(v["cc"], 2);
}

#[test]
fn s_from_a_matroid_file() {
    let m = Graph::diamond().graphic_matroid(100).unwrap();
    let path = tmp("g1.json");
    std::fs::write(&path, io::to_string(&MatroidJson::from_matroid(&m, None)).unwrap()).unwrap();
    let v = json(&omdet(&["params", "--matroid", path.to_str().unwrap(), "--param", "s"]));
    assert_eq!(v["s"], 2);
}

#[test]
fn param_table_csv() {
    let out = omdet(&["params", "--gen", "U:2,4", "--csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("name,elements,rank"));
    assert!(lines.next().unwrap().starts_with("\"U:2,4\",4,2,4,"));
}

#[test]
fn constructions_round_trip() {
    for (name, n, size) in [("kn-bond-cover", "8", 3), ("qn-bond-partition", "4", 2), ("kn-cycle-cover", "6", 3)] {
        let out = omdet(&["construct", name, "--n", n]);
        assert!(out.status.success(), "{name}");
        let text = String::from_utf8(out.stdout).unwrap();
        let parsed: CertificateJson = io::from_str(&text).unwrap();
        let (_, cert) = parsed.to_certificate().unwrap();
        assert_eq!(cert.size, size, "{name}");
        assert_eq!(io::to_string(&CertificateJson::from_certificate(&cert)).unwrap(), text.trim_end());
    }
}

#[test]
fn construct_writes_to_file() {
    let path = tmp("q5.json");
    let out = omdet(&["construct", "qn-cycle-cover", "--n", "5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let parsed: CertificateJson = io::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let (_, cert) = parsed.to_certificate().unwrap();
    assert_eq!((cert.size, cert.connected), (3, true));
}

#[test]
fn cover_witness_is_a_certificate() {
    let path = tmp("q3-cc.json");
    let v = json(&omdet(&["cover", "--gen", "graphic:Q3", "--param", "cc", "--emit-witness", path.to_str().unwrap()]));
    assert_eq!(v["cc"], 2);
    let parsed: CertificateJson = io::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let (_, cert) = parsed.to_certificate().unwrap();
    assert_eq!((cert.size, cert.connected), (2, true));
}

#[test]
fn bond_covers_of_complete_graphs() {
    let v = json(&omdet(&["cover", "--gen", "K5", "--param", "cbc"]));
    assert_eq!(v["cbc"], 3);
}

#[test]
fn design_numbers() {
    assert_eq!(json(&omdet(&["design", "--n", "5", "--k", "3", "--r", "2"]))["C"], 4);
    assert_eq!(json(&omdet(&["design", "--n", "5", "--k", "3", "--r", "2", "--connected"]))["CC"], 5);
}

#[test]
fn enumerate_round_trip() {
    let v = json(&omdet(&["enumerate", "--gen", "U:2,4"]));
    assert_eq!(v["count"], 24);
    let m = omdet::Matroid::uniform(2, 4).unwrap();
    let space = OrientationSpace::new(&m, &Budget::default()).unwrap();
    let mut seen: Vec<usize> = v["orientations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| {
            let o: OrientedJson = serde_json::from_value(o.clone()).unwrap();
            space.position(&o.to_oriented().unwrap()).unwrap()
        })
        .collect();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), 24);
}

#[test]
fn fano_has_no_orientations() {
    let v = json(&omdet(&["enumerate", "--gen", "fano"]));
    assert_eq!(v["count"], 0);
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(omdet(&["params", "--gen", "X9", "--param", "s"]).status.code(), Some(2));
    assert_eq!(omdet(&["params", "--gen", "U:2,4", "--param", "nope"]).status.code(), Some(2));
    assert_eq!(omdet(&["construct", "kn-cycle-cover", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3_with_status() {
    let out = omdet(&["params", "--gen", "graphic:Q3", "--param", "s", "--budget-subsets", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["status"], "skipped");
    let out = Command::new(env!("CARGO_BIN_EXE_omdet"))
        .args(["params", "--gen", "graphic:Q3", "--param", "s"])
        .env("OMDET_BUDGET_SUBSETS", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn thread_count_does_not_change_output() {
    let one = omdet(&["--threads", "1", "params", "--gen", "U:2,5", "--param", "stilde"]);
    let many = omdet(&["params", "--gen", "U:2,5", "--param", "stilde"]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn repro_csv_is_deterministic() {
    let strip = |o: Output| -> Vec<String> {
        assert!(o.status.success());
        String::from_utf8(o.stdout)
            .unwrap()
            .lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect()
    };
    let a = strip(omdet(&["repro", "--suite", "uniform", "--csv"]));
    let b = strip(omdet(&["repro", "--suite", "uniform", "--csv"]));
    assert_eq!(a, b);
    assert!(a.iter().skip(1).all(|l| l.ends_with(",pass")));
}

#[test]
fn repro_hypercube_passes() {
    let out = omdet(&["repro", "--suite", "hypercube"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 fail"));
    assert_eq!(omdet(&["repro", "--suite", "bogus"]).status.code(), Some(2));
}

#[test]
fn tampered_certificate_exits_4() {
    let path = tmp("k8.json");
    let out = omdet(&["construct", "kn-bond-cover", "--n", "8", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(omdet(&["verify", path.to_str().unwrap()]).status.success());
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    v["members"][0].as_array_mut().unwrap().pop();
    std::fs::write(&path, v.to_string()).unwrap();
    assert_eq!(omdet(&["verify", path.to_str().unwrap()]).status.code(), Some(4));
}

use std::process::{Command, Output};

use dynkin_ar_cli::commands::{EnumerateReport, QuasiCommuteReport, RootsReport};
use dynkin_ar_cli::error::ErrorReport;
use dynkin_ar_cli::report::{PairReport, Verdict, VerifyReport};
use serde::de::DeserializeOwned;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dynkin-ar")).args(args).output().expect("binary runs")
}

fn json<T: DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug>(out: &Output) -> T {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let value: T = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    // round trip: printing the parsed value reproduces the bytes
    assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text);
    value
}

fn check_pair(ty: &str, lambda: &str, kappa: &str) -> (PairReport, i32) {
    let out = run(&["check-pair", "--type", ty, "--lambda", lambda, "--kappa", kappa, "--seed", "3"]);
    (json(&out), out.status.code().unwrap())
}

#[test]
fn roots_counts() {
    let a3: RootsReport = json(&run(&["roots", "--type", "A3", "--orientation", "linear", "--format", "json"]));
    assert_eq!(a3.roots.len(), 6);
    assert_eq!(a3.word, [1, 2, 3, 1, 2, 1]);
    let d4: RootsReport = json(&run(&["roots", "--type", "D4", "--format", "json"]));
    assert_eq!(d4.roots.len(), 12);
    assert_eq!(d4.roots.iter().filter(|r| r.projective).count(), 4);
    assert_eq!(d4.roots.iter().filter(|r| r.theta).count(), 4);
    let table = String::from_utf8(run(&["roots", "--type", "A3"]).stdout).unwrap();
    assert_eq!(table.lines().count(), 1 + 2 + 6);
}

#[test]
fn check_pair_examples() {
    let (same, code) = check_pair("A3", "tau-orbit base=[1,1] len=2", "tau-orbit base=[1,1] len=2");
    assert_eq!((same.criterion, same.oracle.via_forms, same.agreement, code), (Some(true), 0, Some(true), 0));
    assert_eq!(same.verdict, Verdict::ExtVanishes);

    let (shift, code) = check_pair("A3", "tau-orbit base=[1,1] len=1", "tau-orbit base=[2,2] len=1");
    assert_eq!((shift.criterion, shift.oracle.via_forms, shift.agreement, code), (Some(false), 1, Some(true), 0));

    // τ of ([2,2],[1,1]) has projective top [3,3] without being a full orbit
    let (outside, code) = check_pair("A3", "tau-orbit base=[1,1] len=2", "tau-orbit base=[2,2] len=2");
    assert_eq!((outside.verdict, outside.criterion, outside.oracle.via_forms, code), (Verdict::OutsideHypotheses, None, 1, 0));

    let (frozen, code) = check_pair("A3", "tau-orbit base=[1,1] len=3", "tau-orbit base=[1,2] len=1");
    assert_eq!((frozen.verdict, frozen.oracle.via_forms, frozen.agreement, code), (Verdict::Frozen, 0, Some(true), 0));

    let (kostant, _) = check_pair("A3", "parts=[[1,2];[2,3]]", "tau-orbit base=[1,1] len=1");
    assert_eq!(kostant.verdict, Verdict::OutsideHypotheses);
    assert_eq!(kostant.oracle.via_forms, kostant.oracle.via_coker);
}

#[test]
fn invalid_input_exits_two_with_structured_error() {
    let out = run(&["check-pair", "--type", "A3", "--lambda", "tau-orbit base=[1,4] len=1", "--kappa", "tau-orbit base=[1,1] len=1"]);
    assert_eq!(out.status.code(), Some(2));
    let err: ErrorReport = json(&out);
    assert_eq!(err.error.kind, "InvalidInput");
    assert_eq!(run(&["roots", "--type", "F4"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--type", "A3", "--orientation", "1>2,2>1"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--type", "A3", "--field", "prime:4"]).status.code(), Some(2));
    assert_eq!(run(&["quasicommute", "--type", "A3", "D(2,4)", "D(0,1)"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nosuch"]).status.code(), Some(2));
    let threads = Command::new(env!("CARGO_BIN_EXE_dynkin-ar")).env("DYNKIN_AR_THREADS", "0").args(["roots", "--type", "A2"]).output().unwrap();
    assert_eq!(threads.status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let out = run(&["verify", "--type", "A3", "--suite", "theorem"]);
    assert_eq!(out.status.code(), Some(0));
    let r: VerifyReport = json(&out);
    assert_eq!(r.suites[0].counts.mismatches, 0);
    assert_eq!(r.suites[0].counts.checked, 16);

    let r: VerifyReport = json(&run(&["verify", "--suite", "zab", "--trials", "200", "--seed", "7"]));
    assert_eq!((r.suites[0].counts.checked, r.suites[0].counts.agreements), (200, 200));

    let out = run(&["verify", "--type", "E6", "--suite", "fourcases"]);
    assert_eq!(out.status.code(), Some(0));
    let r: VerifyReport = json(&out);
    assert!(r.suites[0].counts.multiplicity_flags > 0);
    assert_eq!(r.suites[0].counts.mismatches, 0);
}

#[test]
fn verify_is_stable_across_threads_and_fields() {
    let args = ["verify", "--type", "D4", "--orientation", "bipartite", "--suite", "theorem,minors", "--seed", "5"];
    let one = Command::new(env!("CARGO_BIN_EXE_dynkin-ar")).env("DYNKIN_AR_THREADS", "1").args(args).output().unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_dynkin-ar")).env("DYNKIN_AR_THREADS", "4").args(args).output().unwrap();
    assert_eq!(one.stdout, many.stdout);
    let mut prime_args = args.to_vec();
    prime_args.extend(["--field", "prime:1000003"]);
    let prime: VerifyReport = json(&run(&prime_args));
    let rational: VerifyReport = json(&one);
    assert_eq!(prime.suites[0].counts, rational.suites[0].counts);
    assert_eq!(prime.field, "prime:1000003");
}

#[test]
fn enumerate_small_and_symmetric() {
    let a2: EnumerateReport = json(&run(&["enumerate", "--type", "A2", "--format", "json"]));
    assert_eq!(a2.partitions, ["tau-orbit base=[1,1] len=1"]);
    assert_eq!(a2.pairs.len(), 1);
    let a4: EnumerateReport = json(&run(&["enumerate", "--type", "A4", "--format", "json", "--oracle"]));
    let n = a4.partitions.len();
    assert_eq!(a4.pairs.len(), n * n);
    for i in 0..n {
        for j in 0..n {
            assert_eq!(a4.pairs[i * n + j].criterion, a4.pairs[j * n + i].criterion);
            assert_eq!(a4.pairs[i * n + j].ext.map(|e| e == 0), Some(a4.pairs[i * n + j].criterion));
        }
    }
    let csv = String::from_utf8(run(&["enumerate", "--type", "A3", "--format", "csv"]).stdout).unwrap();
    assert!(csv.starts_with("lambda,kappa,criterion,r_fwd,r_windowed_fwd,r_weighted_fwd,m_fwd,p_fwd,"));
    assert_eq!(csv.lines().count(), 1 + 16);
}

#[test]
fn quasicommute_examples() {
    let q = |z1: &str, z2: &str| -> QuasiCommuteReport { json(&run(&["quasicommute", "--type", "A3", z1, z2, "--oracle"])) };
    let same = q("D(0,4)", "D(0,4)^3");
    assert_eq!((same.verdict.as_str(), same.oracle_ext), ("quasi-commuting", Some(0)));
    let shifted = q("D(1,4)", "D(0,1)");
    assert_eq!(shifted.verdict, "not-quasi-commuting");
    assert_eq!(shifted.failing, [["D(1,4)".to_string(), "D(0,1)".to_string()]]);
    assert_eq!(shifted.agreement, Some(true));
    // θ_1, θ_2 at shift 0, length 1
    let theta = q("D(0,1)", "D(0,2)");
    assert_eq!((theta.verdict.as_str(), theta.agreement), ("quasi-commuting", Some(true)));
    let frozen = q("D(0,6) * D(0,4)", "D(0,1)");
    assert_eq!(frozen.frozen, ["D(0,6)"]);
}

#[test]
fn homtable_and_out_file() {
    let dir = std::env::temp_dir().join(format!("dynkin-ar-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hom.csv");
    let out = run(&["homtable", "--type", "A2", "--which", "hom", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next().unwrap(), "hom,\"[1,1]\",\"[1,2]\",\"[2,2]\"");
    assert_eq!(text.lines().count(), 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

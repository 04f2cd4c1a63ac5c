use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn tuza(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tuza"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the process may exit before reading stdin on usage errors
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn generate(args: &[&str]) -> String {
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    let out = tuza(&full, "");
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

fn report(args: &[&str], graph: &str) -> (i32, Value) {
    let out = tuza(args, graph);
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json)
}

fn bound<'a>(r: &'a Value, name: &str) -> &'a Value {
    r["bounds"].as_array().unwrap().iter().find(|b| b["name"] == name).unwrap()
}

#[test]
fn certify_chain_on_k4() {
    let (code, r) = report(&["certify-chain"], &generate(&["K4"]));
    assert_eq!(code, 0);
    assert_eq!(r["nu"], 1);
    assert_eq!(r["tau"], 2);
    assert_eq!(r["nustar"], "2/1");
    assert_eq!(r["ok"], true);
    for name in ["duality", "tau", "nu", "two-nu", "krivelevich", "haxell"] {
        assert_eq!(bound(&r, name)["status"], "pass", "{name}");
    }
}

#[test]
fn lp_on_g1() {
    let (code, r) = report(&["lp"], &generate(&["gk", "--k", "1"]));
    assert_eq!(code, 0);
    assert_eq!(r["nustar"], "5/2");
    assert!(r["certificates"]["fractional_packing"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["value"].is_string()));
}

#[test]
fn kriv_on_w5() {
    let (code, r) = report(&["kriv"], &generate(&["W5"]));
    assert_eq!(code, 0);
    let b = bound(&r, "krivelevich");
    assert_eq!(b["status"], "pass");
    assert!(b["achieved"].as_str().unwrap().parse::<u64>().unwrap() <= 4);
}

#[test]
fn input_file_and_skip_exact() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(generate(&["W5"]).as_bytes()).unwrap();
    let path = f.path().to_str().unwrap();
    let (code, r) = report(&["solve", "--input", path], "");
    assert_eq!(code, 0);
    assert_eq!((r["nu"].as_u64(), r["tau"].as_u64()), (Some(2), Some(3)));
    let (code, r) = report(&["certify-chain", "--skip-exact", "--input", path], "");
    assert_eq!(code, 0);
    assert!(r["nu"].is_null());
    assert_eq!(bound(&r, "two-nu")["status"], "unchecked");
    assert_eq!(bound(&r, "krivelevich")["status"], "pass");
}

#[test]
fn haxell_and_planar() {
    let (code, r) = report(&["haxell"], &generate(&["K5"]));
    assert_eq!(code, 0);
    assert_eq!(r["certificates"]["candidates"].as_array().unwrap().len(), 5);
    let (code, r) = report(&["planar"], &generate(&["octahedron"]));
    assert_eq!(code, 0);
    assert_eq!(bound(&r, "planar")["status"], "pass");
    assert_eq!(bound(&r, "planar-tau")["status"], "pass");
    let (code, r) = report(&["planar"], &generate(&["K5"]));
    assert_eq!(code, 0);
    assert_eq!(bound(&r, "planar")["status"], "unchecked");
}

#[test]
fn exit_codes() {
    let out = tuza(&["solve"], "p 2\ne 0 5 1\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(tuza(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(tuza(&["solve", "--no-such-flag"], "").status.code(), Some(2));
    assert_eq!(tuza(&["generate", "gk"], "").status.code(), Some(2));
    assert_eq!(tuza(&["haxell", "--budget", "1"], &generate(&["K6"])).status.code(), Some(1));
}

#[test]
fn generate_families() {
    let g = generate(&["random", "--n", "6", "--m", "9", "--mult", "3", "--seed", "4"]);
    assert_eq!(g, generate(&["random", "--n", "6", "--m", "9", "--mult", "3", "--seed", "4"]));
    assert_eq!(g.lines().filter(|l| l.starts_with('e')).count(), 9);
    assert!(generate(&["apex:c5"]).starts_with("p 6\n"));
    assert!(generate(&["triangle-free", "--n", "12", "--seed", "2"]).starts_with("p 12\n"));
    assert!(generate(&["stacked:8:1"]).starts_with("p 8\n"));
}

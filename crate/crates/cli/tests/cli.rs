mod common;

use std::process::Command;

use common::{assert_valid, fixture, load, run, schema, valid_fixtures};
use poisson_kit_cli::structure::StructureFile;
use serde_json::Value;

#[test]
fn fixtures_parse_and_round_trip() {
    let files = valid_fixtures();
    assert!(files.len() >= 8);
    for path in files {
        let f = load(&path);
        let again = StructureFile::parse(&f.to_text()).unwrap();
        assert_eq!(again, f, "{}", path.display());
        assert_eq!(again.bivector().unwrap(), f.bivector().unwrap());
    }
}

#[test]
fn every_command_emits_schema_valid_json() {
    let schema = schema();
    assert!(common::run_all_fixture_commands(&schema) > 40);
    let extra: [&[&str]; 4] = [
        &["tjurina", "w^2 - z^3", "--point", "0,0"],
        &["tjurina", "x*y", "--vars", "x,y"],
        &["identities", "--cases", "2"],
        &["report", "--betti", "1,2,0", "FIXTURE"],
    ];
    let node = fixture("surface_node.poisson");
    for args in extra {
        let args: Vec<&str> = args.iter().map(|a| if *a == "FIXTURE" { node.as_str() } else { a }).collect();
        let (code, v) = run(&args);
        assert_eq!(code, 0, "{args:?}");
        assert_valid(&schema, &args, &v);
    }
}

#[test]
fn exit_codes() {
    common::check_exit_codes(&schema());
}

#[test]
fn error_payloads() {
    let (_, v) = run(&["check", &fixture("invalid/unknown_variable.poisson")]);
    let e = &v["result"]["error"];
    assert_eq!(e["class"], "parse");
    assert_eq!((e["line"].as_u64(), e["column"].as_u64()), (Some(3), Some(16)));

    let (_, v) = run(&["modular", &fixture("not_poisson.poisson")]);
    assert_eq!(v["result"]["error"]["class"], "precondition");
    assert_eq!(v["result"]["error"]["jacobiator"]["text"], "(2*y) dx^dy^dz");

    let (_, v) = run(&["check", &fixture("not_poisson.poisson")]);
    assert_eq!(v["result"]["jacobi_holds"], false);
    assert_eq!(v["result"]["jacobiator"]["text"], "(2*y) dx^dy^dz");
}

#[test]
fn reported_values() {
    let (_, v) = run(&["report", &fixture("surface_node.poisson")]);
    assert_eq!(v["result"]["holonomy"]["verdict"], "SurfaceHolonomic");
    assert_eq!(v["result"]["surface"]["leaves"]["tjurina_total"], 1);
    let (_, v) = run(&["report", &fixture("double_line.poisson")]);
    assert_eq!(v["result"]["holonomy"]["verdict"], "NotLogSymplectic");
    assert_eq!(v["result"]["surface"]["leaves"]["tjurina_total"], "INFINITE");
    let (_, v) = run(&["report", &fixture("diagonal_lambda4.poisson")]);
    assert_eq!(v["result"]["holonomy"]["verdict"], "ObstructedByModularLeaves");
    assert_eq!(v["result"]["holonomy"]["witness"]["dimension"], 1);
    assert_eq!(v["result"]["surface"], Value::Null);

    for (f, tau) in [("w*z", 1), ("w^2 - z^3", 2), ("w^3 - z^3", 4)] {
        let (_, v) = run(&["tjurina", f]);
        assert_eq!(v["result"]["tjurina"], tau, "{f}");
    }
    let (_, v) = run(&["tjurina", &fixture("three_lines.poisson")]);
    assert_eq!(v["result"]["tjurina"], 4);
    let (_, v) = run(&["tjurina", "w^2 - z^3", "--point", "1,1"]);
    assert_eq!(v["result"]["tjurina"], 0);

    let (_, v) = run(&["modular", &fixture("so3.poisson")]);
    assert_eq!(v["result"]["unimodular"], true);
    let (_, v) = run(&["modular", &fixture("surface_node.poisson")]);
    assert_eq!(v["result"]["lie_derivative_vanishes"], true);
    assert_eq!(v["result"]["unimodular"], false);
}

#[test]
fn payload_is_deterministic() {
    let p = fixture("jacobian_cubic.poisson");
    let (_, a) = run(&["cohomology", &p, "--kmax", "2", "--wmax", "3"]);
    let (_, b) = run(&["cohomology", &p, "--kmax", "2", "--wmax", "3"]);
    assert_eq!(a["result"], b["result"]);
    assert_eq!(a["input_digest"], b["input_digest"]);
    assert_eq!(a["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn text_mode() {
    let out = Command::new(env!("CARGO_BIN_EXE_poisson-kit"))
        .args(["cohomology", &fixture("symplectic_plane.poisson"), "--kmax", "2", "--wmax", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("H^2"));
    let out = Command::new(env!("CARGO_BIN_EXE_poisson-kit"))
        .args(["check", &fixture("invalid/truncated.poisson")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 3"));
}

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use jsonschema::JSONSchema;
use poisson_kit_cli::structure::StructureFile;
use poisson_kit_cli::SCHEMA;
use serde_json::Value;

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn valid_fixtures() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(fixtures())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "poisson"))
        .collect();
    v.sort();
    v
}

pub fn fixture(name: &str) -> String {
    fixtures().join(name).to_string_lossy().into_owned()
}

pub fn load(path: &Path) -> StructureFile {
    StructureFile::parse(&std::fs::read_to_string(path).unwrap()).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_poisson-kit")).arg("--json").args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{stdout}"));
    (out.status.code().unwrap(), json)
}

pub fn schema() -> JSONSchema {
    let s: Value = serde_json::from_str(SCHEMA).unwrap();
    JSONSchema::compile(&s).unwrap()
}

pub fn assert_valid(schema: &JSONSchema, args: &[&str], v: &Value) {
    if let Err(errors) = schema.validate(v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{args:?} violates the schema:\n{}", msgs.join("\n"));
    }
}

/// Every command on every fixture, schema-checked.
pub fn run_all_fixture_commands(schema: &JSONSchema) -> usize {
    let mut count = 0;
    for path in valid_fixtures() {
        let p = path.to_string_lossy().into_owned();
        let file = load(&path);
        let mut calls: Vec<Vec<&str>> = vec![vec!["check", &p], vec!["modular", &p], vec!["report", &p]];
        calls.push(vec!["cohomology", &p, "--kmax", "2", "--wmax", "2"]);
        if file.curve.is_some() || file.chart.dim() == 2 {
            calls.push(vec!["tjurina", &p]);
        }
        for args in &calls {
            let (_, v) = run(args);
            assert_valid(schema, args, &v);
            assert_eq!(v["command"], args[0]);
            count += 1;
        }
    }
    count
}

/// `(arguments, expected exit code)` covering every exit class.
pub fn exit_code_cases() -> Vec<(Vec<String>, i32)> {
    let s = |x: &str| x.to_string();
    vec![
        (vec![s("check"), fixture("surface_node.poisson")], 0),
        (vec![s("check"), fixture("not_poisson.poisson")], 3),
        (vec![s("modular"), fixture("not_poisson.poisson")], 3),
        (vec![s("report"), fixture("not_poisson.poisson")], 3),
        (vec![s("check"), fixture("invalid/unknown_variable.poisson")], 2),
        (vec![s("check"), fixture("invalid/bad_order.poisson")], 2),
        (vec![s("report"), fixture("invalid/truncated.poisson")], 2),
        (vec![s("check"), fixture("missing.poisson")], 2),
        (vec![s("tjurina"), s("w^2 - ")], 2),
        (vec![s("cohomology"), fixture("so3.poisson"), s("--cap"), s("1")], 4),
        (vec![s("cohomology"), fixture("weighted_e6.poisson"), s("--wmax"), s("-1")], 0),
        (vec![s("tjurina"), s("w^4 + w^2*z^3 + z^5"), s("--budget"), s("3")], 4),
        (vec![s("tjurina"), s("w^2")], 0),
        (vec![s("identities"), s("--cases"), s("2")], 0),
    ]
}

pub fn check_exit_codes(schema: &JSONSchema) {
    for (args, expected) in exit_code_cases() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, v) = run(&args);
        assert_eq!(code, expected, "{args:?}: {v}");
        assert_valid(schema, &args, &v);
    }
}

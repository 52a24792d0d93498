use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use snhom_core::groups::hausdorff_les_witness;
use snhom_core::io::{TaskBuilder, TaskFile};
use snhom_core::laws::{check, instance_task, Instance, Suite};
use snhom_core::linalg::Field;
use snhom_core::sn::{PairMap, PairSpace};
use snhom_core::Matrix;

const F2: Field = Field::Prime { p: 2 };

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn snhom(args: &[&str], env: &[(&str, &str)]) -> (i32, Value, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_snhom"));
    cmd.args(args);
    for var in ["SNHOM_FORMAT", "SNHOM_MAX_DEGREE", "SNHOM_RESOURCE_CAP", "SNHOM_MAX_ORDER"] {
        cmd.env_remove(var);
    }
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, stdout)
}

fn write_task(dir: &tempfile::TempDir, name: &str, task: &TaskFile) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, serde_json::to_string_pretty(task).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn trivial_z2_coefficients_give_four_lines() {
    let (code, r, _) = snhom(&["compute", data("z2_trivial.json").to_str().unwrap()], &[]);
    assert_eq!(code, 0);
    let results = r["results"].as_array().unwrap();
    assert_eq!(results.len(), 4);
    for (n, x) in results.iter().enumerate() {
        assert_eq!(x["degree"], n);
        assert_eq!(x["invariants"], serde_json::json!({ "w": 0, "h_null": 0, "h_quot": 1 }));
    }
    assert_eq!(r["passed"], true);
}

#[test]
fn degree_zero_reports_coinvariants() {
    let (code, r, _) = snhom(&["compute", data("regular_degree0.json").to_str().unwrap()], &[]);
    assert_eq!(code, 0);
    let x = &r["results"][0];
    // F_2[ℤ/3] with null spanned by the norm element: coinvariants (F_2, F_2)
    assert_eq!(x["coinvariants"], serde_json::json!({ "dim": 1, "null_dim": 1 }));
    assert_eq!(x["q_r"]["dim"], 1);
}

#[test]
fn malformed_matrix_exits_2_with_location() {
    let (code, r, _) = snhom(&["compute", data("bad_matrix.json").to_str().unwrap()], &[]);
    assert_eq!(code, 2);
    assert_eq!(r["error"]["kind"], "validation");
    assert_eq!(r["error"]["detail"]["at"], "modules.M.action.g, row 0");
}

#[test]
fn syntax_errors_carry_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("syn.json");
    std::fs::write(&path, "{\n  \"field\": \"F2\",\n  \"task\": { \"op\": }\n}\n").unwrap();
    let (code, r, _) = snhom(&["compute", path.to_str().unwrap()], &[]);
    assert_eq!(code, 2);
    assert_eq!(r["error"]["detail"], serde_json::json!({ "line": 3, "column": 19 }));
}

#[test]
fn unresolved_references_are_listed() {
    let (code, r, _) = snhom(&["compute", data("unresolved.json").to_str().unwrap()], &[]);
    assert_eq!(code, 2);
    let names = r["error"]["detail"]["unresolved"].as_array().unwrap();
    assert_eq!(names.len(), 2, "{names:?}");
}

#[test]
fn missing_file_is_a_validation_error() {
    let (code, _, _) = snhom(&["compute", "/nonexistent/task.json"], &[]);
    assert_eq!(code, 2);
}

#[test]
fn resource_cap_from_flag_or_environment() {
    let file = data("z2_trivial.json");
    let file = file.to_str().unwrap();
    let (code, r, _) = snhom(&["--resource-cap", "10", "compute", file], &[]);
    assert_eq!(code, 3);
    assert_eq!(r["error"]["kind"], "resource_limit");
    let (code, _, _) = snhom(&["compute", file], &[("SNHOM_RESOURCE_CAP", "10")]);
    assert_eq!(code, 3);
    let (code, _, _) = snhom(&["--resource-cap", "100", "compute", file], &[("SNHOM_RESOURCE_CAP", "10")]);
    assert_eq!(code, 0);
    let (code, _, _) = snhom(&["--max-order", "1", "compute", file], &[]);
    assert_eq!(code, 3);
}

#[test]
fn reports_are_deterministic() {
    let file = data("z2_trivial.json");
    let a = snhom(&["compute", file.to_str().unwrap()], &[]).1;
    let b = snhom(&["compute", file.to_str().unwrap()], &[]).1;
    assert_eq!(a["report_sha256"], b["report_sha256"]);
    assert_eq!(without_timing(a), without_timing(b));
    let a = snhom(&["check-laws", "--suite", "sn", "--seed", "4", "--cases", "20"], &[]).1;
    let b = snhom(&["check-laws", "--suite", "sn", "--seed", "4", "--cases", "20"], &[]).1;
    assert_eq!(without_timing(a), without_timing(b));
}

#[test]
fn ladder_suite_seed_1_passes() {
    let (code, r, _) = snhom(&["check-laws", "--suite", "ladder", "--seed", "1", "--cases", "100"], &[]);
    assert_eq!(code, 0);
    assert_eq!(r["passed"], true);
    assert_eq!(r["results"][0]["cases"], 100);
}

#[test]
fn duality_suite_seed_7_reports_witnesses() {
    let (code, r, _) = snhom(&["check-laws", "--suite", "duality", "--seed", "7", "--cases", "6"], &[]);
    assert_eq!(code, 0);
    assert!(r["results"][0]["witnesses"].as_u64().unwrap() > 0);
}

#[test]
fn zero_cases_is_an_empty_pass() {
    let (code, r, _) = snhom(&["check-laws", "--suite", "ladder", "--cases", "0"], &[]);
    assert_eq!(code, 0);
    assert_eq!(r["results"][0]["checks"], 0);
    assert_eq!(r["results"][0]["failed"], serde_json::json!([]));
}

#[test]
fn unknown_suite_is_rejected() {
    let (code, r, _) = snhom(&["check-laws", "--suite", "nope"], &[]);
    assert_eq!(code, 2);
    assert_eq!(r["error"]["detail"]["at"], "--suite");
}

#[test]
fn failing_instance_round_trips_through_a_task_file() {
    // g f != 0, so the ladder cannot be built: a genuine failing instance
    let line = PairSpace::hausdorff(F2, 1);
    let id = PairMap::new(line.clone(), line.clone(), Matrix::identity(F2, 1)).unwrap();
    let inst = Instance::Pair(id.clone(), id);
    let out = check(Suite::Ladder, &inst, &Default::default());
    assert!(!out.failures.is_empty());
    let task = instance_task(Suite::Ladder, out.culprit.as_ref().unwrap());

    let dir = tempfile::tempdir().unwrap();
    let path = write_task(&dir, "witness.json", &task);
    let (code, r, _) = snhom(&["compute", &path], &[]);
    assert_eq!(code, 1);
    assert_eq!(r["passed"], false);
    let failures: Vec<String> = serde_json::from_value(r["results"][0]["failures"].clone()).unwrap();
    assert_eq!(failures, out.failures);
}

#[test]
fn generated_instances_reproduce_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    for suite in [Suite::Ladder, Suite::Hearts, Suite::DeltaFunctor, Suite::Counterexamples] {
        let inst = snhom_core::laws::generate(suite, 9, 4);
        let expected = check(suite, &inst, &Default::default());
        let path = write_task(&dir, &format!("{}.json", suite.name()), &instance_task(suite, &inst));
        let (code, r, _) = snhom(&["compute", &path], &[]);
        assert_eq!(code, 0, "{suite:?}");
        assert_eq!(r["results"][0]["checks"], expected.checks);
    }
}

#[test]
fn les_command_finds_the_stored_hausdorffified_failure() {
    let task = TaskBuilder::new(F2, "les")
        .sequence("sigma", &hausdorff_les_witness())
        .arg("sequence", "sigma")
        .degrees(0, 2)
        .build();
    let dir = tempfile::tempdir().unwrap();
    let path = write_task(&dir, "les.json", &task);
    let (code, r, _) = snhom(&["les", &path], &[]);
    assert_eq!(code, 0);
    assert_eq!(r["hausdorffified"]["heart_exact"], true);
    assert_eq!(r["hausdorffified"]["non_exact_nodes"], serde_json::json!([2, 5]));
}

#[test]
fn duality_command_on_a_non_hausdorff_module() {
    // the task's window [0, 0] takes precedence over --max-degree
    let (code, r, _) = snhom(&["--max-degree", "2", "duality", data("regular_degree0.json").to_str().unwrap()], &[]);
    assert_eq!(code, 0);
    assert_eq!(r["op"], "duality");
    assert_eq!(r["results"].as_array().unwrap().len(), 1);
    assert_eq!(r["passed"], true);

    let (code, r, _) = snhom(&["--max-degree", "2", "duality", data("z2_regular_no_window.json").to_str().unwrap()], &[]);
    assert_eq!(code, 0);
    assert_eq!(r["results"].as_array().unwrap().len(), 3);
    assert_eq!(r["witnesses"].as_array().unwrap().len(), 3);
}

#[test]
fn text_format_leads_with_check_lines() {
    let (code, _, text) = snhom(&["--format", "text", "compute", data("z2_trivial.json").to_str().unwrap()], &[]);
    assert_eq!(code, 0);
    assert!(text.starts_with("PASS "));
    assert!(text.contains("report_sha256: "));
    let (_, _, env_text) = snhom(&["compute", data("z2_trivial.json").to_str().unwrap()], &[("SNHOM_FORMAT", "text")]);
    assert!(env_text.starts_with("PASS "));
}

#[test]
fn ladder_task_reports_witness_matrices() {
    let (code, r, _) = snhom(&["compute", data("mirror_ladder.json").to_str().unwrap()], &[]);
    assert_eq!(code, 0);
    assert_eq!(r["results"][0]["objects"]["x"], serde_json::json!({ "dim": 0, "null_dim": 0 }));
    assert_eq!(r["results"][0]["phi"]["strict"], false);
    assert_eq!(r["witnesses"].as_array().unwrap().len(), 6);
}

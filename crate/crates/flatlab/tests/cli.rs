use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(name)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("flatlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn flatlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatlab"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const IDEAL: &str =
    "field Q\nbase R = poly(s, t)\nmodule M over R : gens 2 ; rel (t, -s)\ntask flat M d=2\n";

const IDEAL_CERTIFICATE: &str = r#"{"verdict":"NotFlat","method":"main-criterion","d":2,"base":{"field":"Q","vars":["s","t"]},"witness":{"element":"(0, 1, -1, 0)","annihilator":"s","h":"s*t"},"stats":{"gb_pairs":8,"max_poly_terms":2,"wall_ms":0},"module":"gens 2 ; rel (t, -s)"}"#;

#[test]
fn ideal_module_certificate_is_stable() {
    let file = scratch("ideal.flat", IDEAL);
    let out = flatlab(&["run", file.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim_end(), IDEAL_CERTIFICATE);
}

#[test]
fn output_bytes_are_deterministic() {
    let file = corpus("hypersurface.flat");
    let a = flatlab(&["run", file.to_str().unwrap(), "--json", "--all-audits"]);
    let b = flatlab(&["run", file.to_str().unwrap(), "--json", "--all-audits"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn precondition_failure_exits_nonzero_with_an_error_object() {
    let file = scratch(
        "low.flat",
        "base R = poly(s, t)\nmodule M over R : gens 2 ; rel (t, -s)\ntask flat M d=1\n",
    );
    let out = flatlab(&["run", file.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["error"]["kind"], "precondition");
}

#[test]
fn syntax_error_exits_two_with_position() {
    let file = scratch(
        "arity.flat",
        "base R = poly(s, t)\nmodule M over R : gens 2 ; rel (t, -s, s)\n",
    );
    let out = flatlab(&["run", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stderr).unwrap().trim()).unwrap();
    assert_eq!(v["error"]["kind"], "syntax");
    assert!(v["error"]["message"]
        .as_str()
        .unwrap()
        .starts_with("line 2, column"));
}

#[test]
fn missing_file_is_an_io_error() {
    let out = flatlab(&["run", "/nonexistent/problem.flat"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failed_expectation_exits_one() {
    let file = scratch(
        "expect.flat",
        "base R = poly(s, t)\nmodule M over R : gens 1 ; rel (s)\ntask flat M expect=Flat\n",
    );
    let out = flatlab(&["run", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("expected Flat"));
}

#[test]
fn certificates_recheck_from_the_command_line() {
    let file = scratch("cert-problem.flat", IDEAL);
    let good = scratch("good.json", IDEAL_CERTIFICATE);
    let out = flatlab(&["check-cert", good.to_str().unwrap(), file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let forged = scratch(
        "forged.json",
        &IDEAL_CERTIFICATE.replace(r#""annihilator":"s""#, r#""annihilator":"s - 1""#),
    );
    let out = flatlab(&[
        "check-cert",
        forged.to_str().unwrap(),
        file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));

    let junk = scratch("junk.json", "{ not json");
    let out = flatlab(&["check-cert", junk.to_str().unwrap(), file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_counts_relations() {
    let file = scratch(
        "bench.flat",
        "base R = poly(s, t)\nmodule M over R : gens 2 ; rel (t, -s)\ntask bench M dmax=3\n",
    );
    let out = flatlab(&["bench", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(2)
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(
        text.lines().nth(1),
        Some("d,generators,relations,gb_pairs,wall_ms")
    );
    let shape: Vec<(&str, &str, &str)> = rows.iter().map(|r| (r[0], r[1], r[2])).collect();
    assert_eq!(
        shape,
        vec![("1", "2", "1"), ("2", "4", "4"), ("3", "8", "12")]
    );
}

#[test]
fn free_module_bench_has_no_relations() {
    let file = scratch(
        "bench-free.flat",
        "base R = poly(s, t)\nmodule F over R : gens 1\n",
    );
    let out = flatlab(&["bench", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out)
        .lines()
        .skip(2)
        .all(|l| l.split(',').nth(2) == Some("0")));
}

//! Golden-file tests for the command-line adapter: byte-identical output
//! across runs and against frozen expectations.

use std::path::PathBuf;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = posmon::cli::run(&args, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn golden(args: &[&str], expected: &str) {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "stderr: {err}");
    assert_eq!(out, expected);
    // Byte-identical across runs.
    let (_, again, _) = run(args);
    assert_eq!(out, again);
}

#[test]
fn irreducibles_text() {
    golden(
        &["irreducibles", &fixture("p1.json")],
        "{c}\n{d}\n{a,c,d}\n{b,c,d}\n{a,b,c,d}\ncount: 5\n",
    );
}

#[test]
fn irreducibles_json() {
    let (code, out, _) = run(&["--format", "json", "irreducibles", &fixture("p1.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 5);
    assert_eq!(v["irreducibles"][0], serde_json::json!(["c"]));
    assert_eq!(v["irreducibles"][4], serde_json::json!(["a", "b", "c", "d"]));
}

#[test]
fn decompose_text() {
    golden(
        &["decompose", &fixture("p1.json"), "--function", "1,1,2,2"],
        "{c} + {d} + {a,b,c,d}\n",
    );
}

#[test]
fn decompose_rejects_non_monotone() {
    let (code, _, err) = run(&["decompose", &fixture("p1.json"), "--function", "2,0,1,1"]);
    assert_eq!(code, 1);
    assert!(err.contains("not monotone"), "{err}");
}

#[test]
fn presentation_text() {
    golden(
        &["presentation", &fixture("p1.json")],
        "{a,c,d} + {b,c,d} = {c} + {d} + {a,b,c,d}\n",
    );
}

#[test]
fn groebner_text() {
    golden(
        &["groebner", &fixture("p1.json")],
        "# term order: degree = cardinality, ties = revlex over the generator order below\n\
         # generators: x_{c} x_{d} x_{a,c,d} x_{b,c,d} x_{a,b,c,d}\n\
         x_{a,c,d}*x_{b,c,d} - x_{c}*x_{d}*x_{a,b,c,d}\n",
    );
}

#[test]
fn cone_text_and_json() {
    golden(
        &["cone", &fixture("p1.json")],
        "rays:\n  (0,0,1,0)\n  (0,0,0,1)\n  (1,0,1,1)\n  (0,1,1,1)\n  (1,1,1,1)\n\
         facets:\n  f(a) >= 0\n  f(b) >= 0\n  f(a) <= f(c)\n  f(a) <= f(d)\n  f(b) <= f(c)\n  f(b) <= f(d)\n",
    );
    let (code, out, _) = run(&["--format", "json", "cone", &fixture("p1.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rays"][0], serde_json::json!([0, 0, 1, 0]));
    assert_eq!(v["facets"][0], serde_json::json!({"kind": "nonneg", "x": "a"}));
    assert_eq!(
        v["facets"][2],
        serde_json::json!({"kind": "cover", "x": "a", "y": "c"})
    );
}

#[test]
fn gorenstein_variants() {
    golden(&["gorenstein", &fixture("p3.json")], "gorenstein: false\n");
    let (code, out, _) = run(&["gorenstein", &fixture("uniform24.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("gorenstein: true\nlevel: 1,2,2,3,"), "{out}");
    golden(&["gorenstein", "--uniform", "1,3"], "gorenstein: false\n");
}

#[test]
fn type_subcommand() {
    golden(&["type", &fixture("p3.json")], "3\n");
    golden(&["type", "--uniform", "3,4"], "3\n");
    golden(&["type", "--uniform", "2,4"], "1\n");

    let (code, out, _) = run(&["--format", "json", "type", &fixture("p3.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cm_type"], 3);
    assert_eq!(
        v["interior"]["elements"],
        serde_json::json!(["a", "b", "c", "d", "e"])
    );
    assert_eq!(
        v["interior"]["generators"],
        serde_json::json!([[1, 2, 3, 1, 4], [1, 2, 3, 2, 4], [1, 2, 3, 3, 4]])
    );
}

#[test]
fn primes_subcommand() {
    golden(&["primes", &fixture("p2.json")], "{a,b,c,d}\ncount: 1\n");
    golden(&["primes", &fixture("p1.json")], "count: 0\n");
    golden(&["primes", "--uniform", "1,3"], "count: 0\n");
}

#[test]
fn validate_matroid_paths() {
    golden(&["validate-matroid", &fixture("uniform24.json")], "ok\n");
    let (code, _, err) = run(&["validate-matroid", &fixture("bad_matroid.json")]);
    assert_eq!(code, 1);
    assert!(err.contains("rank drops from {a} to {ab}"), "{err}");
}

#[test]
fn check_axioms_text() {
    golden(
        &[
            "check-axioms",
            &fixture("loop_coloop.json"),
            &fixture("mult2.json"),
        ],
        "A1: true\nA2: true\nP: true\n",
    );
}

#[test]
fn slice_text_and_json() {
    golden(
        &["slice", &fixture("mult2.json"), "-p", "2"],
        "p: 2\n{}: 1\n{a}: 2\n{b}: 1\n{ab}: 2\n",
    );
    let (code, out, _) = run(&["--format", "json", "slice", &fixture("mult2.json"), "-p", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["p"], 3);
    assert_eq!(v["values"]["a"], 1);
    assert_eq!(v["values"]["b"], 0);
}

#[test]
fn count_and_table_text() {
    golden(&["count", "--uniform", "1,3", "--no-cache"], "20\n");
    golden(
        &["table1", "--max-n", "3", "--no-cache"],
        "n=1: 2 2\nn=2: 5 5 5\nn=3: 19 20 20 19\n",
    );
}

#[test]
fn table1_tsv_shape() {
    let (code, out, _) = run(&["--format", "tsv", "table1", "--max-n", "2", "--no-cache"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n\tk\tcount\tmillis\tmethod");
    assert!(lines[1].starts_with("1\t0\t2\t"));
    assert!(lines[2].starts_with("1\t1\t2\t0\tdual-of-k=0"));
    assert_eq!(lines.len(), 1 + 2 + 3);
}

#[test]
fn sweep_text() {
    let (code, out, _) = run(&["sweep", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("matroids on 2 elements: 5\n"), "{out}");
    assert!(out.contains("rank 1: 3 matroids, max 5, uniform 5, uniform attains max: true"));
    assert!(out.trim_end().ends_with("global max 5 vs half-rank uniform 5: attained true"));
}

#[test]
fn cache_round_trip_via_env() {
    // This is the only test that reads the cache directory variable; the
    // other count invocations all pass --no-cache.
    let dir = std::env::temp_dir().join(format!("posmon-cli-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::env::set_var("POSMON_CACHE", &dir);

    let (code, first, _) = run(&["count", "--uniform", "2,4"]);
    assert_eq!(code, 0);
    assert_eq!(first, "290\n");
    assert!(dir.join("counts.json").is_file());

    let (code, second, _) = run(&["--format", "json", "count", "--uniform", "2,4"]);
    assert_eq!(code, 0);
    assert!(second.contains("\"count\": \"290\""));
    assert!(second.contains("cache("), "second run should hit the cache: {second}");

    std::env::remove_var("POSMON_CACHE");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn invalid_json_is_exit_1_with_diagnostic() {
    let dir = std::env::temp_dir().join(format!("posmon-badjson-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{ not json").unwrap();
    let (code, _, err) = run(&["irreducibles", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("not valid JSON"), "{err}");

    std::fs::write(&path, r#"{"elements":["a","b"],"relations":[["a","b"],["b","a"]]}"#).unwrap();
    let (code, _, err) = run(&["irreducibles", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("cycle"), "{err}");
    let _ = std::fs::remove_dir_all(&dir);
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ringlab::predicates::classify_ring;
use ringlab::{builtin_example, read_ring_file, PaperExample};

fn ringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn shipped_ring() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../rings/ex-2-1-ii.json")
}

#[test]
fn shipped_file_is_the_paper_ring() {
    let from_file = read_ring_file(&shipped_ring(), 64).unwrap();
    let built = builtin_example(PaperExample::TwoOneII).unwrap();
    assert_eq!(from_file.labels(), ["0", "a", "b", "c"]);
    assert_eq!(from_file.add_table(), built.add_table());
    assert_eq!(from_file.mul_table(), built.mul_table());
    let o = ringlab(&["validate", shipped_ring().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ok: paper:ex-2-1-ii: order 4, noncommutative, no identity"));
}

#[test]
fn two_sided_ideals_of_z12() {
    let o = ringlab(&["ideals", "zmod:12", "--kind", "two-sided"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "6 two-sided ideals of zmod:12");
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[2], "{0,6}");
}

#[test]
fn classification_matches_the_library() {
    let o = ringlab(&["classify", "tri:2:2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let ring = "tri:2:2"
        .parse::<ringlab::GeneratorSpec>()
        .unwrap()
        .build(64)
        .unwrap()
        .ring;
    for rec in classify_ring(&ring) {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let row = text
            .lines()
            .find(|l| l.split(" | ").next().map(str::trim) == Some(&rec.ideal.subset().to_string()))
            .unwrap_or_else(|| panic!("no row for {}", rec.ideal.subset()));
        let cells: Vec<&str> = row.split(" | ").map(str::trim).collect();
        assert_eq!(
            cells[1..],
            [
                yes(rec.two_sided),
                &rec.square.to_string(),
                yes(rec.is_idempotent),
                yes(rec.is_prime),
                yes(rec.is_weakly_prime),
                yes(rec.is_almost_prime),
                yes(rec.is_minimal)
            ]
        );
    }
}

#[test]
fn classify_single_ideal_by_label() {
    let o = ringlab(&["classify", "paper:ex-2-1-ii", "--ideal", "0,c"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("{0,c} | yes       | {0}"), "{text}");
    assert!(!text.contains("right ideals:"));

    let o = ringlab(&["classify", "paper:ex-2-1-ii", "--ideal", "a"]);
    assert_eq!(o.status.code(), Some(1), "not containing zero");
    let o = ringlab(&["classify", "paper:ex-2-1-ii", "--ideal", "0,zz"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn generate_product_and_quotient_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let z6 = dir.path().join("z6.json");
    assert_eq!(
        ringlab(&["generate", "zmod:6", "-o", z6.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
    let r = read_ring_file(&z6, 64).unwrap();
    assert_eq!(r.add_table(), ringlab::zmod(6).add_table());
    assert_eq!(r.mul_table(), ringlab::zmod(6).mul_table());

    let o = ringlab(&["product", z6.to_str().unwrap(), "zmod:2"]);
    assert_eq!(o.status.code(), Some(0));
    let p = ringlab::parse_ring_str(&stdout(&o), 64).unwrap();
    assert_eq!(p.order(), 12);
    assert_eq!(p.name(), "product:zmod:6,zmod:2");

    let q = dir.path().join("q.json");
    let o = ringlab(&["quotient", "zmod:12", "--ideal", "0,4,8", "-o", q.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let q = read_ring_file(&q, 64).unwrap();
    assert_eq!(q.order(), 4);
    assert!(ringlab::find_isomorphism(&q, &ringlab::zmod(4)).unwrap().is_some());

    let o = ringlab(&["quotient", "paper:ex-2-1-ii", "--ideal", "0,a"]);
    assert_eq!(o.status.code(), Some(1), "right ideal only");
}

#[test]
fn invalid_files_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let shape = dir.path().join("shape.json");
    std::fs::write(
        &shape,
        r#"{"name": "x", "order": 2, "add": [[0,1,2],[1,2,0],[2,0,1]], "mul": [[0,0,0],[0,1,2],[0,2,1]]}"#,
    )
    .unwrap();
    let o = ringlab(&["validate", shape.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("order is 2"));

    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"name": "x", "order": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,0]]"#,
    )
    .unwrap();
    let o = ringlab(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));

    let nondist = dir.path().join("nd.json");
    std::fs::write(
        &nondist,
        r#"{"name": "x", "order": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,0]], "labels": ["0"]}"#,
    )
    .unwrap();
    assert_eq!(ringlab(&["validate", nondist.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn usage_and_io_errors_exit_with_three() {
    assert_eq!(ringlab(&["validate", "nope:1"]).status.code(), Some(3));
    assert_eq!(ringlab(&["validate", "missing.json"]).status.code(), Some(3));
    assert_eq!(ringlab(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(ringlab(&["verify", "--theorems", "thm-nope"]).status.code(), Some(3));
    assert_eq!(
        ringlab(&["verify", "--corpus", "/nonexistent-dir"]).status.code(),
        Some(3)
    );
    assert_eq!(ringlab(&["--help"]).status.code(), Some(0));
}

#[test]
fn max_order_bounds_constructions() {
    assert_eq!(
        ringlab(&["--max-order", "20", "validate", "tri:3:2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        ringlab(&["--max-order", "30", "validate", "tri:3:2"]).status.code(),
        Some(0)
    );
}

#[test]
fn verify_over_a_directory_corpus() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(shipped_ring(), dir.path().join("a.json")).unwrap();
    let z4 = dir.path().join("b.json");
    assert_eq!(
        ringlab(&["generate", "zmod:4", "-o", z4.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
    let report = dir.path().join("report.json");
    let md = dir.path().join("summary.md");
    let o = ringlab(&[
        "verify",
        "--corpus",
        dir.path().to_str().unwrap(),
        "--theorems",
        "thm-p2zero,thm-equiv-5",
        "--report",
        report.to_str().unwrap(),
        "--markdown",
        md.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["corpus"][0]["name"], "paper:ex-2-1-ii");
    assert_eq!(json["corpus"][1]["source"].as_str().unwrap(), z4.to_str().unwrap());
    assert_eq!(json["theorems"][0]["theorem_id"], "thm-equiv-5");
    assert_eq!(json["theorems"][0]["filtered"][0], "paper:ex-2-1-ii");
    assert_eq!(std::fs::read_to_string(&md).unwrap(), stdout(&o));
}

#[test]
fn violations_exit_with_two_and_are_explained() {
    let o = ringlab(&[
        "verify",
        "--theorems",
        "thm-quotient-weakly",
        "--mutation",
        "weakly-prime-ignores-nonzero",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("violation of thm-quotient-weakly in"), "{err}");
    assert!(err.contains("P/P^2 = {"), "{err}");
}

use std::path::PathBuf;
use std::process::{Command, Output};

use arrcount::enumeration::{
    char_number_generic_lines, count_dconed, incidence_class, CharNumberTable, Family,
};
use arrcount::incidence::{pappus_realization, IncidenceSpec, Realization};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrcount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    let prefix = format!("{key}: ");
    text.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("no `{key}` in\n{text}"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("arrcount-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn dconed_count_matches_library() {
    let text = stdout(&["count", "d-coned", "--d", "1", "--k", "9", "--n", "5"]);
    assert_eq!(field(&text, "result"), "148467792706702950173442750");
    assert_eq!(
        field(&text, "result"),
        count_dconed(1, 9, 5).unwrap().to_string()
    );
    assert_eq!(field(&text, "dimension"), "35");
    assert!(field(&text, "term(1,8,0)").starts_with("14 * 9 * "));
}

#[test]
fn naive_count_flag() {
    let text = stdout(&[
        "count", "d-coned", "--d", "1", "--k", "4", "--n", "3", "--naive",
    ]);
    assert_eq!(field(&text, "result"), "280");
    assert_eq!(field(&text, "full_count"), "1330");
}

#[test]
fn charnum_single_entry_and_table() {
    let text = stdout(&["charnum", "--family", "generic3", "--p", "2"]);
    assert_eq!(field(&text, "result"), "48");
    assert_eq!(
        field(&text, "result"),
        char_number_generic_lines(3, 2).unwrap().to_string()
    );

    let text = stdout(&["charnum", "--family", "generic4"]);
    assert_eq!(
        field(&text, "result"),
        "16695,17955,13185,8190,4410,2070,855,315,105"
    );

    let text = stdout(&["charnum", "--family", "pencil", "--k", "4"]);
    let table = CharNumberTable::for_family(Family::Pencil(4)).unwrap();
    let row: Vec<String> = table.entries().iter().map(|e| e.to_string()).collect();
    assert_eq!(field(&text, "result"), row.join(","));
}

#[test]
fn zeuthen_example() {
    let text = stdout(&[
        "zeuthen",
        "--family",
        "generic4",
        "--points",
        "3",
        "--curves",
        "1:0,2:2,2:2,2:2,2:2",
    ]);
    assert_eq!(field(&text, "result"), "671760");
}

#[test]
fn schubert_degree_command() {
    let text = stdout(&["schubert", "degree", "--d", "1", "--n", "3", "--s", "0,4,0"]);
    assert_eq!(field(&text, "result"), "2");
}

#[test]
fn incidence_class_output_is_library_display() {
    let (_, class) = incidence_class(3).unwrap();
    let text = stdout(&["class", "incidence", "--k", "3"]);
    assert_eq!(field(&text, "result"), class.to_string());
    let text = stdout(&[
        "class",
        "incidence",
        "--k",
        "3",
        "--coefficient",
        "x1*x2*x3*y12*y13*y23",
    ]);
    assert_eq!(field(&text, "result"), "2");
}

#[test]
fn tutte_from_file() {
    let dir = scratch("tutte");
    let path = dir.join("lines.arr");
    std::fs::write(&path, "2\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n").unwrap();
    let text = stdout(&[
        "tutte",
        "--arrangement",
        path.to_str().unwrap(),
        "--q",
        "1",
        "--xs",
        "0,2,4,6",
    ]);
    assert_eq!(field(&text, "result"), "105");
    assert_eq!(field(&text, "generic"), "true");
}

#[test]
fn pappus_files_round_trip_and_dimension() {
    let dir = scratch("pappus");
    let spec_path = dir.join("pappus.spec");
    let real_path = dir.join("pappus.real");
    let text = stdout(&[
        "pappus",
        "--spec-out",
        spec_path.to_str().unwrap(),
        "--realization-out",
        real_path.to_str().unwrap(),
    ]);
    assert_eq!(field(&text, "result"), "27");

    let (spec, r) = pappus_realization();
    let spec_text = std::fs::read_to_string(&spec_path).unwrap();
    let real_text = std::fs::read_to_string(&real_path).unwrap();
    assert_eq!(spec_text, spec.to_string());
    assert_eq!(IncidenceSpec::parse(&spec_text).unwrap(), spec);
    assert_eq!(Realization::parse(&real_text).unwrap(), r);

    let text = stdout(&["dim", "--spec", spec_path.to_str().unwrap()]);
    assert_eq!(field(&text, "result"), "9");

    let text = stdout(&[
        "dim",
        "--spec",
        spec_path.to_str().unwrap(),
        "--realization",
        real_path.to_str().unwrap(),
    ]);
    assert_eq!(field(&text, "virtual_dimension"), "9");
    assert_eq!(field(&text, "jacobian_rank"), "26");
    assert_eq!(field(&text, "actual_dimension"), "10");
}

#[test]
fn json_output() {
    let out = stdout(&["--json", "count", "generic", "--k", "3", "--n", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"], "15");
    assert!(v["command"].as_str().unwrap().contains("count generic"));
}

#[test]
fn bad_input_fails_with_diagnostic() {
    let cases: [&[&str]; 5] = [
        &["count", "generic", "--k", "2", "--n", "2"],
        &["charnum", "--family", "generic3", "--p", "7"],
        &["schubert", "degree", "--d", "1", "--n", "3", "--s", "0,3,0"],
        &["class", "incidence", "--k", "5"],
        &["charnum", "--family", "pencil"],
    ];
    for args in cases {
        let out = run(args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(
            String::from_utf8_lossy(&out.stderr).starts_with("error:"),
            "{args:?}"
        );
    }

    let out = run(&["count", "sideways"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = scratch("bad");
    let path = dir.join("bad.spec");
    std::fs::write(&path, "n 2\nlines 1\npoints 1\n0 x\n").unwrap();
    let out = run(&["dim", "--spec", path.to_str().unwrap()]);
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 4"), "{stderr}");
}

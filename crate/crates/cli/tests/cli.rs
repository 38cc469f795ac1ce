use std::process::{Command, Output};

use roughgroup::verifier::{CheckReport, SuiteReport};

const V4: &str = "I,(12)(34),(13)(24),(14)(23)";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_roughgroup")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, serde_json::Value, String) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    let text = stdout(&o);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (o.status.code().unwrap(), value, text)
}

fn rerender(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn strings(v: &serde_json::Value) -> Vec<String> {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn group_summaries() {
    let (code, v, text) = json(&["group", "--builtin", "quaternion8"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 8);
    assert_eq!(v["normal_subgroups"].as_array().unwrap().len(), 6);
    assert_eq!(rerender(&v), text);
    let (_, v, _) = json(&["group", "--builtin", "symmetric4"]);
    let sizes: Vec<usize> = v["normal_subgroups"].as_array().unwrap().iter().map(|s| s.as_array().unwrap().len()).collect();
    assert_eq!(sizes, [1, 4, 12, 24]);
    let (_, v, _) = json(&["group", "--group", "cyclic1"]);
    assert_eq!(v["order"], 1);
}

#[test]
fn group_files() {
    let dir = std::env::temp_dir().join(format!("roughgroup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("z2.json");
    std::fs::write(&good, r#"{"kind":"cayley","labels":["e","a"],"table":[[0,1],[1,0]]}"#).unwrap();
    let (code, v, _) = json(&["group", "--group", good.to_str().unwrap()]);
    assert_eq!((code, v["order"].as_u64(), v["name"].as_str()), (0, Some(2), Some("z2")));
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"kind":"cayley","labels":["e","a","b"],"table":[[0,1,2],[1,1,0],[2,0,1]]}"#).unwrap();
    let o = run(&["group", "--group", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("axiom"));
    let junk = dir.join("junk.json");
    std::fs::write(&junk, "{not json").unwrap();
    assert_eq!(run(&["group", "--group", junk.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn approximations() {
    let h = format!("{V4},(12),(34),(1324),(1423)");
    let (code, v, text) = json(&["approx", "--group", "symmetric4", "--normal", V4, "--subset", &h]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["lower"]), ["N"]);
    assert_eq!(v["upper"].as_array().unwrap().len(), 4);
    assert_eq!(v["is_rough"], true);
    assert_eq!(rerender(&v), text);

    let (_, v, _) = json(&["approx", "--group", "quaternion8", "--normal", "1,-1", "--subset", r#"["1","-1","i","j"]"#]);
    assert_eq!(strings(&v["lower"]), ["N", "iN", "jN"]);
    assert_eq!(v["lower"], v["upper"]);

    let (_, v, _) = json(&["approx", "--group", "alternating4", "--normal", V4, "--subset", &all_labels("alternating4")]);
    assert_eq!(v["lower"], v["upper"]);
    assert_eq!(v["lower"].as_array().unwrap().len(), 3);

    let (_, v, _) = json(&["classify", "--group", "symmetric4", "--normal", V4, "--subset", &h]);
    assert_eq!((v["lower_is_normal"].as_bool(), v["upper_is_subgroup"].as_bool()), (Some(true), Some(false)));
}

fn all_labels(group: &str) -> String {
    let (_, v, _) = json(&["group", "--group", group]);
    strings(&v["elements"]).join(",")
}

#[test]
fn input_errors_exit_two() {
    let cases: [&[&str]; 7] = [
        &["approx", "--group", "symmetric4", "--normal", "I,(12)", "--subset", "I,(12)"],
        &["approx", "--group", "symmetric4", "--normal", V4, "--subset", "I,(12)"],
        &["approx", "--group", "symmetric4", "--normal", "I,(99)", "--subset", "I"],
        &["group", "--group", "frobenius20"],
        &["verify", "--corpus", "cyclic2", "--statements", "Prop99"],
        &["hunt", "--property", "nope", "--corpus", "cyclic2"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!String::from_utf8_lossy(&o.stderr).contains("panicked"), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn nested_maps() {
    let a4 = all_labels("alternating4");
    let (code, v, text) = json(&["thm8", "--group", "symmetric4", "--n", V4, "--m", &a4, "--h", &a4]);
    assert_eq!(code, 0);
    assert_eq!(v["phi"]["kernel"], v["M/N"]);
    assert_eq!(v["M/N"].as_array().unwrap().len(), 3);
    assert_eq!(v["phi"]["surjective"], true);
    assert_eq!(rerender(&v), text);
    let o = run(&["thm8", "--group", "symmetric4", "--n", &a4, "--m", V4, "--h", &a4]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let (code, v, text) = json(&["verify", "--corpus", "trivial"]);
    assert_eq!((code, v["total_failures"].as_u64()), (0, Some(0)));
    let typed: SuiteReport = serde_json::from_str(&text).unwrap();
    assert_eq!(rerender(&serde_json::to_value(&typed).unwrap()), text);

    let (code, v, _) = json(&["verify", "--corpus", "quaternion8,alternating4,symmetric4", "--statements", "all"]);
    assert_eq!((code, v["total_failures"].as_u64()), (0, Some(0)));

    let o = run(&["verify", "--corpus", "symmetric4", "--statements", "Example22"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "--corpus", "symmetric4", "--statements", "Example13,Example22"]);
    assert_eq!(o.status.code(), Some(1), "the listed product data does not hold in S4");
    assert!(stdout(&o).contains("lower((H1H2)/N): actual"));

    let a = run(&["verify", "--corpus", "symmetric3,klein4", "--format", "json", "--seed", "3"]);
    let b = run(&["verify", "--corpus", "symmetric3,klein4", "--format", "json", "--seed", "3", "--sequential"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(run(&["verify", "--all-small", "4"]).status.code(), Some(0));
}

#[test]
fn hunts() {
    let (code, v, text) = json(&["hunt", "--property", "upper-not-subgroup", "--corpus", "symmetric4", "--expect", "some"]);
    assert_eq!(code, 0);
    assert_eq!(rerender(&v), text);
    let reports: Vec<CheckReport> = serde_json::from_value(v["witnesses"].clone()).unwrap();
    let mut h22: Vec<String> = format!("{V4},(12),(34),(1324),(1423)").split(',').map(String::from).collect();
    h22.sort();
    let has_22 = reports.iter().any(|r| {
        let mut h = r.h1.clone().unwrap();
        h.sort();
        h == h22 && r.n.len() == 4
    });
    assert!(has_22);

    let (code, v, _) = json(&["hunt", "--property", "cor12-fails-without-subgroups", "--corpus", "alternating4", "--limit", "100000"]);
    assert_eq!(code, 0);
    let reports: Vec<CheckReport> = serde_json::from_value(v["witnesses"].clone()).unwrap();
    let want = |extra: [&str; 2]| {
        let mut s: Vec<String> = V4.split(',').chain(extra).map(String::from).collect();
        s.sort();
        s
    };
    let sorted = |v: &Option<Vec<String>>| {
        let mut v = v.clone().unwrap();
        v.sort();
        v
    };
    assert!(reports.iter().any(|r| sorted(&r.h1) == want(["(123)", "(124)"]) && sorted(&r.h2) == want(["(132)", "(142)"])));

    let (code, v, _) = json(&["hunt", "--property", "upper-not-subgroup", "--corpus", "cyclic12", "--expect", "none"]);
    assert_eq!((code, v["total"].as_u64()), (0, Some(0)));
    let o = run(&["hunt", "--property", "upper-not-subgroup", "--corpus", "cyclic12", "--expect", "some"]);
    assert_eq!(o.status.code(), Some(1));

    let (_, v, _) = json(&["hunt", "--property", "lower-product-strict", "--corpus", "symmetric4", "--limit", "2"]);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 2);
    assert!(v["total"].as_u64().unwrap() > 2);
}

#[test]
fn text_output_is_aligned() {
    let o = run(&["verify", "--corpus", "klein4", "--statements", "Prop2.1,Thm8.3"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("Prop2.1") || l.starts_with("Thm8.3") || l.starts_with("statement")).collect();
    assert_eq!(lines.len(), 3);
    let col = |l: &str| {
        let gap = l.find(' ').unwrap();
        gap + l[gap..].find(|c: char| c != ' ').unwrap()
    };
    assert_eq!(col(lines[0]), col(lines[1]));
    assert_eq!(col(lines[1]), col(lines[2]));
    assert!(text.ends_with("0 failures\n"));
}

use std::process::{Command, Output};

use serde_json::Value;

fn braidlift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidlift")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_records(args: &[&str]) -> Vec<Value> {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = braidlift(&full);
    stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn topology_rows_end_at_k() {
    let o = braidlift(&["topology", "--sheets", "3", "--k", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    assert!(last.contains("k=7") && last.contains("boundary=1") && last.contains("genus=6"), "{last}");
}

#[test]
fn topology_with_explicit_monodromy() {
    let recs = json_records(&["topology", "--monodromy", "(0 1 2),(0 2 1)"]);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["boundary"], 3);
    assert_eq!(recs[0]["genus"], 0);
    assert_eq!(recs[0]["euler_char"], -1);
    assert_eq!(recs[0]["boundary_monodromy"], "()");
}

#[test]
fn verify_braid_k4_passes() {
    let o = braidlift(&["verify-braid", "--k", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_records(&["verify-braid", "--k", "4"]);
    let relations: Vec<&Value> = recs.iter().filter(|r| r["record"] == "relation").collect();
    assert!(!relations.is_empty());
    assert!(relations.iter().all(|r| r["holds"] == true));
    for level in ["base", "functor", "pi1"] {
        assert!(relations.iter().any(|r| r["level"] == level), "{level}");
    }
    let summary = recs.last().unwrap();
    assert_eq!(summary["record"], "summary");
    assert_eq!(summary["failures"], 0);
}

#[test]
fn act_reports_pi1_images() {
    let recs = json_records(&["act", "--k", "3", "--word", "s1"]);
    let image = |g: &str| {
        recs.iter()
            .find(|r| r["record"] == "generator_image" && r["generator"] == g)
            .map(|r| r["image"].as_str().unwrap().to_string())
            .unwrap()
    };
    assert_eq!(image("x1"), "x1 y1");
    assert_eq!(image("y1"), "x1^-1");
    let presentation = &recs[0];
    assert_eq!(presentation["record"], "presentation");
    assert_eq!(presentation["arrows"].as_array().unwrap().len(), 12);
    assert_eq!(presentation["arrows"][3]["name"], "a1");
    assert_eq!(presentation["arrows"][3]["src"], "p1");
    assert_eq!(presentation["arrows"][3]["dst"], "p2");
}

#[test]
fn act_applies_a_groupoid_word() {
    let recs = json_records(&["act", "--k", "4", "--word", "s2 s3 s2", "--apply", "a1"]);
    let last = recs.last().unwrap();
    assert_eq!(last["record"], "word_image");
    assert_eq!(last["image"], "a1 c2 b3");
}

#[test]
fn inverse_word_undoes_word() {
    let recs = json_records(&["act", "--k", "4", "--word", "s1 dx2 dz3^-1 dz3 dx2^-1 s1^-1"]);
    for r in recs.iter().filter(|r| r["record"] == "arrow_image") {
        assert_eq!(r["arrow"], r["image"]);
    }
    assert!(!recs.iter().any(|r| r["record"] == "object_image"));
}

#[test]
fn decomposition_frozen_order_passes() {
    let o = braidlift(&["verify-decomposition", "--k", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_records(&["verify-decomposition", "--k", "4"]);
    for r in recs.iter().filter(|r| r["record"] == "decomposition") {
        assert_eq!(r["holds"], r["frozen"], "{r}");
    }
}

#[test]
fn pi1_tables_exit_zero_with_flags() {
    let o = braidlift(&["verify-pi1-tables", "--k", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_records(&["verify-pi1-tables", "--k", "5"]);
    assert!(recs.iter().any(|r| r["status"] == "flagged"));
    assert!(!recs.iter().any(|r| r["status"] == "mismatch"));
    let summary = recs.last().unwrap();
    assert_eq!(summary["pass"], true);
    assert!(summary["flagged"].as_u64().unwrap() > 0);
}

#[test]
fn parse_errors_exit_2_and_name_the_token() {
    let cases: [(&[&str], &str); 5] = [
        (&["act", "--k", "3", "--word", "s1 q2"], "q2"),
        (&["act", "--k", "3", "--word", "s7"], "s7"),
        (&["act", "--k", "3", "--word", "s1", "--apply", "a0 z9"], "z9"),
        (&["topology", "--monodromy", "(0 1 5)"], "5"),
        (&["verify-braid", "--k", "1"], "--k 1"),
    ];
    for (args, token) in cases {
        let o = braidlift(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains(token), "{args:?}: {err}");
    }
    assert_eq!(braidlift(&["topology", "--k", "x"]).status.code(), Some(2));
    assert_eq!(braidlift(&["act", "--k", "3"]).status.code(), Some(2));
    assert_eq!(braidlift(&["act", "--k", "3", "--sheets", "2", "--word", "s1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--format", "json", "verify-decomposition", "--k", "5"][..],
        &["verify-pi1-tables", "--k", "5"][..],
        &["act", "--k", "5", "--word", "s1 s2^-1 dy3"][..],
    ] {
        assert_eq!(braidlift(args).stdout, braidlift(args).stdout, "{args:?}");
    }
}

fn scalars(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => m.values().for_each(|x| scalars(x, out)),
        Value::Array(a) => a.iter().for_each(|x| scalars(x, out)),
        Value::String(s) => out.push(s.clone()),
        other => out.push(other.to_string()),
    }
}

#[test]
fn text_and_json_carry_the_same_facts() {
    for args in [
        &["topology", "--k", "5"][..],
        &["verify-braid", "--k", "3"][..],
        &["verify-decomposition", "--k", "3"][..],
        &["verify-pi1-tables", "--k", "4"][..],
        &["act", "--k", "3", "--word", "s1 dz2", "--apply", "c0 c1"][..],
    ] {
        let text = stdout(&braidlift(args));
        let mut json_args = vec!["--format", "json"];
        json_args.extend_from_slice(args);
        let json: Vec<Value> = stdout(&braidlift(&json_args))
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        // Text output renders the records in order, one block per record.
        let blocks: Vec<&str> = text.lines().filter(|l| !l.starts_with(' ')).collect();
        assert_eq!(blocks.len(), json.len(), "{args:?}");
        for r in &json {
            let mut facts = Vec::new();
            scalars(r, &mut facts);
            for f in facts {
                assert!(text.contains(&f), "{args:?}: `{f}` missing from text");
            }
        }
    }
}

#[test]
fn help_documents_word_syntax() {
    let help = stdout(&braidlift(&["--help"]));
    assert!(help.contains("s1 s2^-1 s1"));
    assert!(help.contains("A3"));
    let act = stdout(&braidlift(&["act", "--help"]));
    assert!(act.contains("rightmost"));
}

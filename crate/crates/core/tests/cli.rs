use std::process::Command;

use serde_json::Value;
use wardbinom::RingElement;

fn wardbinom(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_wardbinom"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn lines(text: &str) -> Vec<&str> {
    text.lines().collect()
}

#[test]
fn seq_examples() {
    let (code, out, _) = wardbinom(&["seq", "--family", "u", "--s", "1", "--t", "1", "--maxn", "6"]);
    assert_eq!(code, 0);
    assert_eq!(lines(&out), ["0", "1", "1", "2", "3", "5", "8"]);

    let (_, out, _) = wardbinom(&["seq", "--family", "v", "--s", "1", "--t", "1", "--maxn", "4"]);
    assert_eq!(lines(&out), ["2", "1", "3", "4", "7"]);

    let (_, out, _) = wardbinom(&["seq", "--family", "u", "--s", "1+x", "--t", "-x", "--maxn", "3"]);
    assert_eq!(lines(&out), ["0", "1", "x+1", "x^2+x+1"]);
}

#[test]
fn seq_h_family_and_formats() {
    let (_, out, _) = wardbinom(&["seq", "--family", "h", "--s", "1", "--t", "1", "--a", "1", "--b", "2", "--maxn", "5"]);
    assert_eq!(lines(&out), ["1", "2", "3", "5", "8", "13"]);
    let (_, out, _) = wardbinom(&["seq", "--family", "v", "--s", "1", "--t", "1", "--maxn", "2", "--format", "json"]);
    assert_eq!(out.trim(), r#"["2","1","3"]"#);
    let (_, out, _) = wardbinom(&["seq", "--family", "u", "--s", "x+1", "--t", "-x", "--maxn", "3", "--format", "tex"]);
    assert_eq!(lines(&out)[3], r"U_{3} = x^{2}+x+1 \\");
}

#[test]
fn table_examples() {
    let (code, out, _) = wardbinom(&["table", "--family", "u", "--s", "1", "--t", "1", "--maxn", "5", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(lines(&out), ["1", "1,1", "1,1,1", "1,2,2,1", "1,3,6,3,1", "1,5,15,15,5,1"]);

    let (code, out, _) = wardbinom(&["table", "--family", "v", "--s", "1", "--t", "1", "--maxn", "4", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(lines(&out)[4].split(',').nth(2), Some("28/3"));
    for row in lines(&out) {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells.first(), Some(&"1"));
        assert_eq!(cells.last(), Some(&"1"));
    }
}

#[test]
fn table_marks_non_polynomial_and_zero_cells() {
    let (code, out, _) = wardbinom(&["table", "--family", "mixed", "--s", "x+1", "--t", "-x", "--maxn", "3", "--oracle"]);
    assert_eq!(code, 0);
    let last = lines(&out)[3].split(',').next_back().unwrap().to_string();
    assert!(last.starts_with('(') && last.contains(")/("), "{last}");

    let (code, out, _) = wardbinom(&["table", "--family", "v", "--s", "0", "--t", "1", "--maxn", "2"]);
    assert_eq!(code, 0);
    assert_eq!(lines(&out)[1], "ZERO-TERM,ZERO-TERM");
}

#[test]
fn multinomial_table() {
    let (code, out, _) = wardbinom(&["table", "--family", "multinomial", "--s", "1", "--t", "1", "--parts", "1,1,2", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "6");
    let (code, _, _) = wardbinom(&["table", "--family", "multinomial"]);
    assert_eq!(code, 2);
}

#[test]
fn table_formats_carry_the_same_values() {
    let base = ["table", "--family", "mixed", "--s", "x+1", "--t", "-x", "--maxn", "4"];
    let (_, csv, _) = wardbinom(&base);
    let (_, json, _) = wardbinom(&[&base[..], &["--format", "json"]].concat());
    let (_, tex, _) = wardbinom(&[&base[..], &["--format", "tex"]].concat());

    let doc: Value = serde_json::from_str(&json).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    let csv_rows = lines(&csv);
    assert_eq!(rows.len(), csv_rows.len());
    for (json_row, csv_row) in rows.iter().zip(&csv_rows) {
        let csv_cells: Vec<&str> = csv_row.split(',').collect();
        for (cell, text) in json_row.as_array().unwrap().iter().zip(csv_cells) {
            match cell {
                Value::String(v) => {
                    let a: RingElement = v.parse().unwrap();
                    let b: RingElement = text.parse().unwrap();
                    assert_eq!(a, b);
                }
                Value::Object(f) => {
                    let expected = format!("({})/({})", f["num"].as_str().unwrap(), f["den"].as_str().unwrap());
                    assert_eq!(expected, text);
                }
                other => panic!("unexpected cell {other}"),
            }
        }
    }
    assert_eq!(lines(&tex).len(), csv_rows.len());
    assert!(tex.contains(r"\binom{2}{1,1}_{\langle\cdot\rangle/\{\cdot\}} = x^{2}+1"));
}

#[test]
fn verify_examples() {
    let (code, out, _) = wardbinom(&["verify", "--identity", "eq8", "--s", "1", "--t", "1", "--maxn", "20"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("identity,s,t,a,b,r,sidx,lhs,rhs,status\n"));
    assert!(!out.contains("FAILS"));

    let (code, _, _) = wardbinom(&["verify", "--identity", "eq15", "--s", "1+x", "--t", "-x", "--maxn", "8"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_mixed_variants_split() {
    let args = |label| vec!["verify", "--identity", label, "--s", "3", "--t", "-2", "--maxn", "10"];
    let (printed, out_paper, _) = wardbinom(&args("eq14-paper"));
    let (derived, _, _) = wardbinom(&args("eq14-derived"));
    assert_eq!((printed, derived), (5, 0));
    assert!(out_paper.contains("# eq14-paper minimal counterexample: s=3 t=-2 r=1 sidx=1"));

    let (code, out, _) = wardbinom(&["verify", "--identity", "eq14", "--s", "1", "--t", "1", "--maxn", "6", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["passed"], Value::Bool(true));
    let summary = doc["summary"].as_array().unwrap();
    assert!(summary[0].as_str().unwrap().contains("eq14-derived"));
}

#[test]
fn verify_pq_convention_and_degenerate_warning() {
    let (code, _, err) = wardbinom(&["verify", "--identity", "eq8,eq12", "--P", "2", "--Q", "1", "--maxn", "6"]);
    assert_eq!(code, 0);
    assert!(err.contains("repeated characteristic root"));
    let (code, _, _) = wardbinom(&["verify", "--identity", "eq8", "--s", "2", "--t", "0"]);
    assert_eq!(code, 3);
}

#[test]
fn verify_tex_output() {
    let (code, out, _) = wardbinom(&["verify", "--identity", "eq12", "--s", "x+1", "--t", "-x", "--maxn", "3", "--format", "tex"]);
    assert_eq!(code, 0);
    assert!(out.lines().next().unwrap().starts_with(r"\text{eq12}\ (s,t)=(x+1,-x)"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--identity", "eq9,thm1-equiv", "--s", "-2", "--t", "3", "--maxn", "12"];
    assert_eq!(wardbinom(&args), wardbinom(&args));
}

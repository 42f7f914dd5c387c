use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn aag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

const EXAMPLE1: [&str; 10] = ["--a", "155", "--d", "1", "--h", "4", "--k", "20", "--c", "177"];
const SWEEP: [&str; 10] = [
    "--a", "150..165", "--d", "-5..10", "--c", "170..186", "--k", "19..20", "--h", "1..4",
];

fn with<'a>(head: &[&'a str], tail: &[&'a str]) -> Vec<&'a str> {
    head.iter().chain(tail).copied().collect()
}

#[test]
fn analyze_example_json() {
    let o = aag(&with(&["analyze"], &with(&EXAMPLE1, &["--json", "--oracle-verify"])));
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "AlmostSymmetric");
    assert_eq!(v["family"], "Thm5.3-(ii)");
    assert_eq!(v["frobenius"], 2168);
    assert_eq!(v["pf"], serde_json::json!([1084, 2168]));
    assert_eq!(v["type"], 2);
    assert_eq!(v["solved"]["p"], 8);
    assert_eq!(v["case_trace"], "PF1: clause 2b; PF2: clause 7i");
    assert_eq!(v["oracle_agrees"], true);
    assert_eq!(v["fast_path_used"], false);
    assert_eq!(v["table"]["mu"], 1);
}

#[test]
fn analyze_fast_path_and_text() {
    let o = aag(&with(&["analyze"], &with(&EXAMPLE1, &["--json", "--fast"])));
    assert_eq!(json(&o)["fast_path_used"], true);
    let o = aag(&with(&["analyze"], &with(&EXAMPLE1, &["--grobner"])));
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("F(S) = 2168"), "{text}");
    assert!(text.contains("PF1: clause 2b; PF2: clause 7i"));
    assert!(text.contains("certified: true"));
    assert!(text.contains("x21^8 - x0*x1*x20 [D]"));
}

#[test]
fn analyze_apery_listing() {
    let o = aag(&with(&["analyze"], &with(&EXAMPLE1, &["--apery"])));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip_while(|l| *l != "y,z,phi").skip(1).collect();
    assert_eq!(rows.len(), 155);
    assert!(rows.contains(&"21,6,2323"));
}

#[test]
fn validation_errors_exit_2() {
    let o = aag(&["analyze", "--a", "6", "--d", "2", "--h", "1", "--k", "3", "--c", "7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("gcd(a,d)=2"));
    let o = aag(&["analyze", "--a", "6", "--d", "2", "--h", "1", "--k", "3", "--c", "7", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["error"], "gcd_violation");
    assert_eq!(v["reason"], "gcd(a,d)=2");
    let o = aag(&["analyze", "--a", "7", "--d", "1", "--h", "1", "--k", "3", "--c", "14"]);
    assert_eq!(o.status.code(), Some(2));
    let o = aag(&["oracle", "--gens", "4,6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(aag(&["analyze", "--a", "6"]).status.code(), Some(64));
    assert_eq!(aag(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(aag(&["analyze", "--a", "x", "--d", "1", "--h", "1", "--k", "3", "--c", "7"]).status.code(), Some(64));
    assert_eq!(aag(&with(&["scan"], &with(&SWEEP, &["--format", "xml"]))).status.code(), Some(64));
    assert_eq!(aag(&["scan", "--a", "1..4:0", "--d", "1", "--c", "1", "--k", "3", "--h", "1"]).status.code(), Some(64));
    assert_eq!(aag(&["--help"]).status.code(), Some(0));
}

#[test]
fn scan_reproduces_sweep() {
    let o = aag(&with(&["scan"], &with(&SWEEP, &["--hypothesis-only", "--oracle-verify"])));
    assert_eq!(o.status.code(), Some(0));
    let recs: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 7);
    assert!(recs.iter().all(|r| r["oracle_agrees"] == true));
    assert_eq!(recs[0]["family"], "Thm5.3-(ii)");
}

#[test]
fn scan_is_deterministic_across_workers() {
    let args = with(&["scan"], &with(&SWEEP, &["--pivot-filter", "hypothesis", "--all"]));
    let one = aag(&with(&args, &["--workers", "1"]));
    let three = aag(&with(&args, &["--workers", "3"]));
    assert_eq!(one.status.code(), Some(0));
    assert!(!one.stdout.is_empty());
    assert_eq!(one.stdout, three.stdout);
}

#[test]
fn scan_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let o = aag(&with(
        &["scan"],
        &with(&SWEEP, &["--hypothesis-only", "--format", "csv", "--output", path.to_str().unwrap()]),
    ));
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header.join(","),
        "a,d,c,k,h,verdict,family,l,p,sigma,r,type,frobenius,fast_path,hypothesis_ok"
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[1].iter().take(12).collect::<Vec<_>>().join(","), "163,-2,170,19,1,AlmostSymmetric,Thm5.3-(i),14,3,4,-2,6");
}

#[test]
fn scan_empty_range() {
    let o = aag(&["scan", "--a", "10..9", "--d", "1", "--c", "5", "--k", "3", "--h", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn scan_explains_skips() {
    let o = aag(&with(&["scan"], &with(&SWEEP, &["--hypothesis-only", "--explain-skips"])));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("skipped gcd_violation: 12104"), "{err}");
    assert!(err.contains("skipped pivot_filter: 6746"));
}

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/scan_record.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

#[test]
fn scan_records_match_schema() {
    let v = schema();
    let o = aag(&["scan", "--a", "20..60", "--d", "-3..3", "--c", "30..60", "--k", "3..4", "--h", "1..2", "--all", "--oracle-verify"]);
    assert_eq!(o.status.code(), Some(0));
    let mut verdicts = std::collections::BTreeSet::new();
    for line in stdout(&o).lines() {
        let rec: Value = serde_json::from_str(line).unwrap();
        assert!(v.is_valid(&rec), "{line}");
        verdicts.insert(rec["verdict"].as_str().unwrap().to_string());
    }
    assert!(verdicts.len() >= 3, "{verdicts:?}");
    let big = serde_json::json!({
        "a": "9007199254740993", "d": 1, "c": 7, "k": 3, "h": 1,
        "verdict": "NeitherSpecial", "family": null, "l": null, "p": null, "sigma": null, "r": null,
        "type": 3, "frobenius": "63050394783186948", "fast_path_used": false, "hypothesis_ok": true
    });
    assert!(v.is_valid(&big));
    let bad = serde_json::json!({"a": 1.5, "d": 1, "c": 7, "k": 3, "h": 1, "error": "x"});
    assert!(!v.is_valid(&bad));
}

#[test]
fn large_values_are_strings() {
    let o = aag(&["analyze", "--a", "9007199254740993", "--d", "1", "--h", "1", "--k", "3", "--c", "13", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["params"]["a"], "9007199254740993");
    assert_eq!(v["params"]["c"], 13);
    let f = &v["frobenius"];
    assert!(f.is_string(), "{f}");
    let f: i128 = f.as_str().unwrap().parse().unwrap();
    assert!(f > 1 << 53);
}

#[test]
fn verify_command() {
    let grid = ["--a", "20..80", "--d", "-4..4", "--c", "30..100:3", "--k", "3..4", "--h", "1..2"];
    let o = aag(&with(&["verify"], &with(&grid, &["--json"])));
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    assert!(v["checked"].as_u64().unwrap() > 1000);
    assert_eq!(v["mismatches"], serde_json::json!({}));
    assert!(v["skipped"]["pivot_filter"].as_u64().unwrap() > 0);
    let o = aag(&with(&["verify"], &with(&grid, &["--order", "inverted"])));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("grobner"));
}

#[test]
fn oracle_command() {
    let o = aag(&["oracle", "--gens", "5,6,7,8,9"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["pf"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(v["type"], 4);
    assert_eq!(v["genus"], 4);
}

#[test]
fn table_command() {
    let o = aag(&with(&["table"], &EXAMPLE1));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.contains("22   1   -1") && l.ends_with("<- mu")), "{text}");
    let o = aag(&with(&["table"], &with(&EXAMPLE1, &["--json"])));
    let v = json(&o);
    assert_eq!(v["rows"][2]["r_prime"], -1);
    assert_eq!(v["tilde"]["r"], 12);
}

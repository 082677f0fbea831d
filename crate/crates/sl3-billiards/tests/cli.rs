use std::fs;

use sl3_billiards::cli::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use sl3_billiards::PatternDocument;

fn args(s: &str) -> Vec<String> {
    std::iter::once("sl3-billiards".to_string())
        .chain(s.split_whitespace().map(String::from))
        .collect()
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("v.txt");
    let out = out.display();
    assert_eq!(run(args(&format!("verify --ell 3 --max-label 60 --out {out}"))), EXIT_OK);
    assert_eq!(
        run(args(&format!("verify --ell 5 --max-label 40 --lambda-variant printed --out {out}"))),
        EXIT_FAILED
    );
    assert_eq!(run(args("generate --ell 2 --max-label 10")), EXIT_USAGE);
    assert_eq!(run(args("generate --ell 5 --format pdf")), EXIT_USAGE);
    assert_eq!(run(args("render --ell 5 --input x.json --max-label 4")), EXIT_USAGE);
    assert_eq!(run(args("frobnicate")), EXIT_USAGE);
}

#[test]
fn generate_then_render_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("z.json");
    let svg = dir.path().join("z.svg");
    let code = run(args(&format!("generate -l 5 -n 21 --jobs 3 --out {}", json.display())));
    assert_eq!(code, EXIT_OK);
    let doc = PatternDocument::from_json(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(doc.points.len(), 5);
    let code = run(args(&format!("render -l 5 --input {} --out {}", json.display(), svg.display())));
    assert_eq!(code, EXIT_OK);
    let text = fs::read_to_string(&svg).unwrap();
    for s in ["12(1)", "14(1)", "16(1)", "18(1)", "21(v)"] {
        assert_eq!(text.matches(&format!(">{s}<")).count(), 1, "{s}");
    }
}

#[test]
fn zeta_output_feeds_compare() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("t.csv");
    let report = dir.path().join("r.txt");
    let code = run(args(&format!("zeta -l 5 --max-i 20 --out {}", table.display())));
    assert_eq!(code, EXIT_OK);
    let cmd = format!("compare -l 5 --table {} --out {}", table.display(), report.display());
    assert_eq!(run(args(&cmd)), EXIT_OK);
    assert!(fs::read_to_string(&report).unwrap().contains("mismatches=0"));

    let text = fs::read_to_string(&table).unwrap().replace("12,0120120121,0,1", "12,0120120121,0,2");
    fs::write(&table, text).unwrap();
    assert_eq!(run(args(&cmd)), EXIT_FAILED);
    assert!(fs::read_to_string(&report).unwrap().contains("mismatches=1"));

    fs::write(&table, "i,y,minDeg,coeffs\n3,012,0,x\n").unwrap();
    assert_eq!(run(args(&cmd)), EXIT_USAGE);
}

#[test]
fn growth_report_passes_at_133() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.txt");
    assert_eq!(run(args(&format!("growth -l 5 -n 133 --out {}", out.display()))), EXIT_OK);
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("133,10"));
    assert!(text.contains("133(v^13) mult 4 ok"));
}

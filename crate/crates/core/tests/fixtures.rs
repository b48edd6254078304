use std::path::PathBuf;

use fanoscope::discriminant::assemble_global;
use fanoscope::invariants::analyze;
use fanoscope::io::{load_fixture, Fixture};

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixtures() -> Vec<(String, Fixture)> {
    let mut out: Vec<(String, Fixture)> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().map_or(false, |x| x == "json"))
        .filter_map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            // manifests share the directory
            if text.contains("\"rows\"") {
                return None;
            }
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            Some((name, load_fixture(&p).unwrap()))
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn check(file: &str, what: &str, want: Option<i64>, got: Option<i64>, failures: &mut Vec<String>) {
    if let Some(w) = want {
        if got != Some(w) {
            failures.push(format!("{}: {} expected {}, got {:?}", file, what, w, got));
        }
    }
}

#[test]
fn every_fixture_reproduces_its_expected_values() {
    let mut failures = Vec::new();
    let all = fixtures();
    assert!(all.len() >= 10);
    for (file, fx) in &all {
        let data = match fx.build() {
            Ok(d) => d,
            Err(e) => {
                failures.push(format!("{}: build failed: {}", file, e));
                continue;
            }
        };
        let report = match analyze(&data, &fx.known_values()) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{}: analysis failed: {}", file, e));
                continue;
            }
        };
        let graph = assemble_global(&data).unwrap();
        assert_eq!(graph.census.p as i64, report.p as i64, "{}", file);
        assert_eq!(graph.census.n as i64, report.n, "{}", file);
        assert_eq!(graph.census.boundary as i64, report.boundary, "{}", file);
        let Some(exp) = &fx.expected else { continue };
        check(file, "degree", exp.degree, Some(report.degree), &mut failures);
        check(file, "p", exp.p, Some(report.p as i64), &mut failures);
        check(file, "n", exp.n, Some(report.n), &mut failures);
        check(file, "euler", exp.euler, Some(report.euler), &mut failures);
        check(file, "boundary", exp.boundary, Some(report.boundary), &mut failures);
        check(file, "vertices", exp.vertices, Some(report.vertices as i64), &mut failures);
        check(file, "b2", exp.b2, report.b2, &mut failures);
        check(file, "b3", exp.b3, report.b3, &mut failures);
        check(file, "index", exp.index, report.index, &mut failures);
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

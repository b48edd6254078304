//! Acceptance run: one line per criterion. Parts that need the reflexive
//! database run only when `FANOSCOPE_DB` names the file.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use fanoscope::degeneration::{facet_decompositions, DegenerationData, Method};
use fanoscope::gamma::{b2, bar_t_sections, build_system, solve};
use fanoscope::invariants::{analyze, degree, euler_number, euler_smooth_mink};
use fanoscope::io::{load_fixture, load_manifest, parse_polytope, Fixture};
use fanoscope::linalg::{int, Rat};
use fanoscope::minkowski::enumerate_smooth_decompositions;
use fanoscope::polygon::Polygon;
use fanoscope::polytope::LatticePolytope;
use fanoscope_cli::batch::{all_choices, database_ids, load_database, run_table, verify24, RowStatus};
use fanoscope_cli::input::method1_with_choice;
use proptest::prelude::RngExt;
use proptest::test_runner::{RngAlgorithm, TestRng};
use serde_json::Value;

/// Criteria this artifact cannot meet, with the reason.
const KNOWN_GAPS: &[(usize, &str)] = &[(
    11,
    "MM2,2, MM3,2, MM3,4, MM3,5, MM4,2 and MM5,1 are specified only through figures; \
     no degeneration data can be built for them",
)];

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Partial,
    Skip,
    Fail,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Partial => "PARTIAL",
            Status::Skip => "SKIP",
            Status::Fail => "FAIL",
        }
    }
}

struct Outcome {
    status: Status,
    detail: String,
}

type Check = Result<Outcome, String>;

fn pass(detail: impl Into<String>) -> Check {
    Ok(Outcome {
        status: Status::Pass,
        detail: detail.into(),
    })
}

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture(name: &str) -> Fixture {
    load_fixture(&root().join("fixtures").join(name)).expect("bundled fixture")
}

fn database() -> Option<PathBuf> {
    std::env::var_os("FANOSCOPE_DB").map(PathBuf::from)
}

fn gated(bundled: String, db_part: impl FnOnce(&Path) -> Result<String, String>) -> Check {
    match database() {
        None => Ok(Outcome {
            status: Status::Partial,
            detail: format!("{}; database part skipped, FANOSCOPE_DB unset", bundled),
        }),
        Some(path) => {
            let more = db_part(&path)?;
            pass(format!("{}; {}", bundled, more))
        }
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{}: expected {:?}, got {:?}", what, want, got))
    }
}

fn cli(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_fanoscope"))
        .args(args)
        .current_dir(root())
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn field(v: &Value, key: &str) -> Option<i64> {
    v.get(key).and_then(Value::as_i64)
}

fn report_row(v: &Value) -> [Option<i64>; 7] {
    ["degree", "p", "n", "euler", "b2", "b3", "index"].map(|k| field(v, k))
}

fn criterion_1() -> Check {
    let r = cli(&["analyze", "fixtures/polytopes/p3.json"])?;
    expect(
        "degree, p, n, χ, b2, b3, index",
        report_row(&r),
        [64, 4, 24, 4, 1, 0, 4].map(Some),
    )?;
    pass("degree 64, p 4, n 24, χ 4, b2 1, b3 0, index 4")
}

fn criterion_2() -> Check {
    let r = cli(&["analyze", "fixtures/polytopes/cube.txt"])?;
    expect(
        "degree, p, n, χ, b2",
        report_row(&r)[..5].to_vec(),
        vec![Some(8), Some(0), Some(48), Some(-24), Some(1)],
    )?;
    pass("degree 8, p 0, n 48, χ −24, b2 1")
}

fn criterion_3() -> Check {
    let data = fixture("b3_cubic.json").build().map_err(|e| e.to_string())?;
    let e = euler_number(&data).map_err(|e| e.to_string())?;
    expect("p", e.census.p, 3)?;
    expect("n", e.census.n, 27)?;
    expect("|Δ∩∂B|", e.census.boundary, 18)?;
    expect("slab formula", e.slab_formula, -6)?;
    expect("node formula", e.node_formula, -6)?;
    expect("degree", degree(&data.polytope).map_err(|e| e.to_string())?.degree, 24)?;
    expect(
        "|P°∩M|",
        data.dual.lattice_points().map_err(|e| e.to_string())?.len(),
        15,
    )?;
    pass("p 3, n 27, |Δ∩∂B| 18, both formulas −6, degree 24 from 15 points")
}

fn criterion_4() -> Check {
    let fx = fixture("v2.json");
    let data = fx.build().map_err(|e| e.to_string())?;
    let r = analyze(&data, &fx.known_values()).map_err(|e| e.to_string())?;
    expect("p, n, χ", (r.p, r.n, r.euler), (20, 144, -100))?;
    let d = degree(&data.polytope).map_err(|e| e.to_string())?;
    expect("degree, dilation, boundary points", (d.degree, d.dilation, d.boundary_points), (2, 3, 11))?;
    pass("p 20, n 144, χ −100, degree 2 from 11 boundary points of 3·P°")
}

fn criterion_5() -> Check {
    let fx = fixture("b1.json");
    let data = fx.build().map_err(|e| e.to_string())?;
    let r = analyze(&data, &fx.known_values()).map_err(|e| e.to_string())?;
    expect("p, n, χ, index", (r.p, r.n, r.euler, r.index), (6, 66, -38, Some(2)))?;
    pass("p 6, n 66, χ −38, index 2")
}

fn criterion_6() -> Check {
    let hexagon = Polygon::from_i64(&[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]]);
    let square = Polygon::from_i64(&[[0, 0], [1, 0], [1, 1], [0, 1]]);
    expect("hexagon", enumerate_smooth_decompositions(&hexagon).len(), 2)?;
    expect("unit square", enumerate_smooth_decompositions(&square).len(), 1)?;
    pass("hexagon 2, unit square 1")
}

/// Every bundled polytope: the fixtures and the polytope inputs.
fn bundled_polytopes() -> Result<Vec<(String, LatticePolytope)>, String> {
    let mut out = Vec::new();
    for (name, fx) in bundled_fixtures()? {
        out.push((name, fx.polytope().map_err(|e| e.to_string())?));
    }
    let mut files: Vec<PathBuf> = std::fs::read_dir(root().join("fixtures/polytopes"))
        .map_err(|e| e.to_string())?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    files.sort();
    for f in files {
        let p = parse_polytope(&f).map_err(|e| e.to_string())?;
        out.push((f.file_name().unwrap().to_string_lossy().into_owned(), p.polytope));
    }
    Ok(out)
}

fn bundled_fixtures() -> Result<Vec<(String, Fixture)>, String> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(root().join("fixtures"))
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().map_or(false, |x| x == "json"))
        .collect();
    files.sort();
    let mut out = Vec::new();
    for f in files {
        let text = std::fs::read_to_string(&f).map_err(|e| e.to_string())?;
        if text.contains("\"rows\"") {
            continue;
        }
        out.push((
            f.file_name().unwrap().to_string_lossy().into_owned(),
            load_fixture(&f).map_err(|e| e.to_string())?,
        ));
    }
    Ok(out)
}

fn criterion_7() -> Check {
    let mut checked = 0;
    for (name, p) in bundled_polytopes()? {
        if !p.is_reflexive() {
            continue;
        }
        let s = p.identity24().map_err(|e| format!("{}: {}", name, e))?;
        expect(&name, s, int(24))?;
        checked += 1;
    }
    gated(format!("{} bundled reflexive polytopes give 24", checked), |db| {
        let start = Instant::now();
        let (entries, warning) = load_database(db, None).map_err(|e| e.to_string())?;
        if let Some(w) = warning {
            return Err(w);
        }
        let list: Vec<_> = entries.into_iter().collect();
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
        let rows = verify24(&list, workers).map_err(|e| e.to_string())?;
        let bad: Vec<usize> = rows.iter().filter(|r| !r.pass).map(|r| r.id).collect();
        if !bad.is_empty() {
            return Err(format!("identity fails for ids {:?}", bad));
        }
        Ok(format!("all {} database entries give 24 in {:.1?}", rows.len(), start.elapsed()))
    })
}

fn euler_routes(name: &str, data: &DegenerationData) -> Result<(), String> {
    let e = euler_number(data).map_err(|e| format!("{}: {}", name, e))?;
    expect(&format!("{} formulas", name), e.slab_formula, e.node_formula)?;
    if data.method == Method::SmoothDecompositions {
        expect(
            &format!("{} closed form", name),
            euler_smooth_mink(data).map_err(|e| e.to_string())?,
            e.euler,
        )?;
    }
    Ok(())
}

fn criterion_8() -> Check {
    let mut checked = 0;
    for (name, fx) in bundled_fixtures()? {
        euler_routes(&name, &fx.build().map_err(|e| e.to_string())?)?;
        checked += 1;
    }
    gated(format!("{} bundled fixtures agree", checked), |db| {
        let (entries, _) = load_database(db, None).map_err(|e| e.to_string())?;
        let mut ids: Vec<usize> = entries.keys().copied().collect();
        let mut rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
        for i in (1..ids.len()).rev() {
            let j = rng.random_range(0..=i);
            ids.swap(i, j);
        }
        let mut used = 0;
        for id in ids {
            if used == 200 {
                break;
            }
            let p = &entries[&id];
            let Ok(decs) = facet_decompositions(p) else { continue };
            let data = method1_with_choice(&id.to_string(), p, &vec![0; decs.len()]).map_err(|e| e.to_string())?;
            euler_routes(&format!("database entry {}", id), &data)?;
            used += 1;
        }
        expect("sampled entries", used, 200)?;
        Ok("200 sampled database entries agree".to_string())
    })
}

fn b2_values(p: &LatticePolytope) -> Result<(BTreeSet<i64>, Vec<(usize, i64)>), String> {
    let mut set = BTreeSet::new();
    let mut census = Vec::new();
    for c in all_choices(p).map_err(|e| e.to_string())? {
        let data = method1_with_choice("entry", p, &c).map_err(|e| e.to_string())?;
        set.insert(b2(&data).map_err(|e| e.to_string())?);
        let e = euler_number(&data).map_err(|e| e.to_string())?;
        census.push((e.census.p, e.census.n));
    }
    Ok((set, census))
}

fn criterion_9() -> Check {
    let mut systems = 0;
    for (name, fx) in bundled_fixtures()? {
        let data = fx.build().map_err(|e| e.to_string())?;
        if data.method != Method::SmoothDecompositions {
            continue;
        }
        let sys = build_system(&data).map_err(|e| format!("{}: {}", name, e))?;
        for m in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [2, -3, 5]] {
            let m: Vec<Rat> = m.iter().map(|&x| Rat::from_integer(int(x))).collect();
            if !sys.satisfied_by_character(&m) {
                return Err(format!("{}: baseline fails", name));
            }
        }
        systems += 1;
    }
    for name in ["p3.json", "v8_cube.json"] {
        let data = fixture(name).build().map_err(|e| e.to_string())?;
        expect(&format!("dim Γ for {}", name), solve(&data).map_err(|e| e.to_string())?.dimension, 3)?;
    }
    gated(
        format!("baseline holds for {} Γ systems; dim Γ = 3 for ℙ³ and the cube", systems),
        |db| {
            let ids: BTreeSet<usize> = [3874, 3031, 1886, 155].into_iter().collect();
            let (entries, _) = load_database(db, Some(&ids)).map_err(|e| e.to_string())?;
            let get = |id: usize| entries.get(&id).ok_or(format!("database has no entry {}", id));
            expect("b2 over choices for 3874", b2_values(get(3874)?)?.0, [1, 2, 3].into())?;
            expect("b2 over choices for 3031", b2_values(get(3031)?)?.0, [1, 2].into())?;
            let p = get(1886)?;
            let decs = facet_decompositions(p).map_err(|e| e.to_string())?;
            let data = method1_with_choice("1886", p, &vec![0; decs.len()]).map_err(|e| e.to_string())?;
            expect("b2 for 1886", b2(&data).map_err(|e| e.to_string())?, 1)?;
            expect(
                "barT sections for 1886",
                bar_t_sections(&data).map_err(|e| e.to_string())?,
                solve(&data).map_err(|e| e.to_string())?.dimension,
            )?;
            let (_, census) = b2_values(get(155)?)?;
            let ps: BTreeSet<usize> = census.iter().map(|c| c.0).collect();
            let ns: BTreeSet<i64> = census.iter().map(|c| c.1).collect();
            expect("p over choices for 155", ps, [6, 8].into())?;
            expect("n over choices for 155", ns, [24].into())?;
            Ok("3874 gives b2 1, 2, 3; 3031 gives 1, 2; 1886 gives 1 on both routes; 155 gives p 6 or 8 with n 24".into())
        },
    )
}

fn criterion_10() -> Check {
    for (file, euler) in [
        ("mm7_1_diamond.json", 16),
        ("mm8_1_triangle.json", 18),
        ("mm5_3_hexagon.json", 12),
    ] {
        let data = fixture(file).build().map_err(|e| e.to_string())?;
        let e = euler_number(&data).map_err(|e| e.to_string())?;
        expect(file, (e.euler, e.census.p, e.census.n), (euler, 0, 0))?;
    }
    pass("diamond 16, triangle 18, hexagon 12, no nodes")
}

fn criterion_11() -> Check {
    let manifest = load_manifest(&root().join("fixtures/appendix.json")).map_err(|e| e.to_string())?;
    let mut reproduced = Vec::new();
    let mut missing = Vec::new();
    for row in &manifest.rows {
        let method2 = ["MM2,1", "MM2,2", "MM2,3", "MM2,5", "MM3,2", "MM3,4", "MM3,5", "MM4,2", "MM5,1"];
        if !method2.contains(&row.name.as_str()) {
            continue;
        }
        let Some(file) = &row.fixture else {
            missing.push(row.name.clone());
            continue;
        };
        let fx = fixture(file);
        let known = fx.known.as_ref().ok_or(format!("{}: no recorded b2", row.name))?;
        expect(&format!("{} b2 source", row.name), known.source.as_str(), "paper")?;
        let r = analyze(&fx.build().map_err(|e| e.to_string())?, &fx.known_values()).map_err(|e| e.to_string())?;
        let want = row.expected.as_ref().ok_or("row without values")?;
        expect(
            &row.name,
            (Some(r.degree), Some(r.p as i64), Some(r.n), Some(r.euler)),
            (want.degree, want.p, want.n, want.euler),
        )?;
        if let Some(b) = fx.expected.as_ref().and_then(|e| e.boundary) {
            expect(&format!("{} |Δ∩∂B|", row.name), r.boundary, b)?;
        }
        reproduced.push(row.name.clone());
    }
    let detail = format!("reproduced {}", reproduced.join(", "));
    if missing.is_empty() {
        pass(detail)
    } else {
        Ok(Outcome {
            status: Status::Fail,
            detail: format!("{}; no construction for {}", detail, missing.join(", ")),
        })
    }
}

fn criterion_12() -> Check {
    let Some(db) = database() else {
        return Ok(Outcome {
            status: Status::Skip,
            detail: "needs the database, FANOSCOPE_DB unset".into(),
        });
    };
    let path = root().join("fixtures/appendix.json");
    let manifest = load_manifest(&path).map_err(|e| e.to_string())?;
    let (entries, _) = load_database(&db, Some(&database_ids(&manifest))).map_err(|e| e.to_string())?;
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let rows = run_table(&manifest, &root().join("fixtures"), Some(&entries), workers).map_err(|e| e.to_string())?;
    let mut bad = Vec::new();
    let mut good = 0;
    for (row, spec) in rows.iter().zip(&manifest.rows) {
        if !spec.from_database {
            continue;
        }
        if row.status == RowStatus::Match {
            good += 1;
        } else {
            bad.push(format!("{} ({:?}: {})", row.name, row.status, row.detail));
        }
    }
    if bad.is_empty() {
        pass(format!("{} database rows reproduced", good))
    } else {
        Err(format!("offending rows: {}", bad.join("; ")))
    }
}

fn main() {
    let criteria: [(usize, fn() -> Check); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let mut unexpected = Vec::new();
    for (n, check) in criteria {
        let outcome = check().unwrap_or_else(|detail| Outcome {
            status: Status::Fail,
            detail,
        });
        let gap = KNOWN_GAPS.iter().find(|(k, _)| *k == n);
        let note = match (outcome.status, gap) {
            (Status::Fail, Some((_, why))) => format!(" [known gap: {}]", why),
            (Status::Fail, None) => {
                unexpected.push(n);
                String::new()
            }
            _ => String::new(),
        };
        println!("criterion {:>2}: {:<7} {}{}", n, outcome.status.label(), outcome.detail, note);
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {:?}", unexpected);
        std::process::exit(1);
    }
}

//! Database sweeps and table replays. Results are always ordered by input
//! position, whatever the number of workers.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use fanoscope::degeneration::{facet_decompositions, DegenerationData};
use fanoscope::invariants::{analyze, degree, euler_number};
use fanoscope::io::{count_warning, ingest_database, Expected, Fixture, Manifest, ManifestRow};
use fanoscope::polytope::LatticePolytope;
use fanoscope::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::method1_with_choice;

/// The largest number of decomposition combinations tried for one polytope.
pub const CHOICE_CAP: usize = 1024;

/// Every combination of one index per facet, in lexicographic order.
pub fn choice_combinations(counts: &[usize], cap: usize) -> Result<Vec<Vec<usize>>> {
    let total = counts.iter().try_fold(1usize, |acc, &c| acc.checked_mul(c));
    match total {
        Some(0) => return Ok(Vec::new()),
        Some(t) if t <= cap => {}
        _ => {
            return Err(Error::Unsupported(format!(
                "more than {} decomposition choices",
                cap
            )))
        }
    }
    let mut out = vec![vec![0; counts.len()]];
    loop {
        let mut next = out.last().unwrap().clone();
        let mut i = counts.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            next[i] += 1;
            if next[i] < counts[i] {
                break;
            }
            next[i] = 0;
        }
        out.push(next);
    }
}

/// Every decomposition choice for the facets of `p`.
pub fn all_choices(p: &LatticePolytope) -> Result<Vec<Vec<usize>>> {
    let counts: Vec<usize> = facet_decompositions(p)?.iter().map(Vec::len).collect();
    choice_combinations(&counts, CHOICE_CAP)
}

/// The four table columns computed from data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub degree: i64,
    pub p: i64,
    pub n: i64,
    pub euler: i64,
}

impl Counts {
    fn from_expected(e: &Expected) -> Option<Counts> {
        Some(Counts {
            degree: e.degree?,
            p: e.p?,
            n: e.n?,
            euler: e.euler?,
        })
    }
}

/// Degree, node counts and Euler number of smooth data.
pub fn counts_of(data: &DegenerationData) -> Result<Counts> {
    let e = euler_number(data)?;
    Ok(Counts {
        degree: degree(&data.polytope)?.degree,
        p: e.census.p as i64,
        n: e.census.n,
        euler: e.euler,
    })
}

/// One line of a `verify24` sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identity24Row {
    pub id: usize,
    /// `Σ ℓ(E)·ℓ(E★)`, or the error that prevented it.
    pub sum: String,
    pub pass: bool,
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Io(e.to_string()))
}

/// Checks the edge-length identity on every polytope with `workers` threads.
pub fn verify24(polytopes: &[(usize, LatticePolytope)], workers: usize) -> Result<Vec<Identity24Row>> {
    let rows = pool(workers)?.install(|| {
        polytopes
            .par_iter()
            .map(|(id, p)| match p.identity24() {
                Ok(s) => Identity24Row {
                    id: *id,
                    pass: s == 24.into(),
                    sum: s.to_string(),
                },
                Err(e) => Identity24Row {
                    id: *id,
                    sum: format!("error: {}", e),
                    pass: false,
                },
            })
            .collect()
    });
    Ok(rows)
}

/// Reads database entries, keeping only `wanted` when given. Returns the
/// entries and the size warning, if any.
pub fn load_database(
    path: &Path,
    wanted: Option<&BTreeSet<usize>>,
) -> Result<(BTreeMap<usize, LatticePolytope>, Option<String>)> {
    let mut reader = ingest_database(path)?;
    let mut out = BTreeMap::new();
    for entry in reader.by_ref() {
        let (id, p) = entry?;
        if wanted.map_or(true, |w| w.contains(&id)) {
            out.insert(id, p);
        }
    }
    Ok((out, count_warning(reader.entries_read())))
}

/// Outcome of one table row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    /// Computed and equal to the expected values.
    Match,
    /// Computed and different from the expected values.
    Mismatch,
    /// Computed with nothing to compare against.
    Computed,
    /// Not computed: no construction or no database.
    Skipped,
    /// The construction raised an error.
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub name: String,
    pub palp_id: Option<usize>,
    pub computed: Option<Counts>,
    pub expected: Option<Counts>,
    pub choice: Option<Vec<usize>>,
    pub status: RowStatus,
    pub detail: String,
}

fn finish(row: &ManifestRow, computed: Counts, choice: Option<Vec<usize>>) -> TableRow {
    let expected = row.expected.as_ref().and_then(Counts::from_expected);
    let status = match expected {
        None => RowStatus::Computed,
        Some(e) if e == computed => RowStatus::Match,
        Some(_) => RowStatus::Mismatch,
    };
    TableRow {
        name: row.name.clone(),
        palp_id: row.palp_id,
        computed: Some(computed),
        expected,
        choice,
        status,
        detail: String::new(),
    }
}

fn not_computed(row: &ManifestRow, status: RowStatus, detail: String) -> TableRow {
    TableRow {
        name: row.name.clone(),
        palp_id: row.palp_id,
        computed: None,
        expected: row.expected.as_ref().and_then(Counts::from_expected),
        choice: None,
        status,
        detail,
    }
}

fn fixture_row(row: &ManifestRow, fixture: &Fixture) -> TableRow {
    let result = fixture.build().and_then(|d| analyze(&d, &fixture.known_values()));
    match result {
        Ok(r) => finish(
            row,
            Counts {
                degree: r.degree,
                p: r.p as i64,
                n: r.n,
                euler: r.euler,
            },
            None,
        ),
        Err(e) => not_computed(row, RowStatus::Failed, e.to_string()),
    }
}

/// A database row: the stated choice, or the first choice reproducing the
/// expected values, or the first choice when none does.
fn database_row(row: &ManifestRow, p: &LatticePolytope) -> TableRow {
    let compute = |c: &[usize]| method1_with_choice(&row.name, p, c).and_then(|d| counts_of(&d));
    if let Some(c) = &row.choice {
        return match compute(c) {
            Ok(counts) => finish(row, counts, Some(c.clone())),
            Err(e) => not_computed(row, RowStatus::Failed, e.to_string()),
        };
    }
    let choices = match all_choices(p) {
        Ok(c) => c,
        Err(e) => return not_computed(row, RowStatus::Failed, e.to_string()),
    };
    let expected = row.expected.as_ref().and_then(Counts::from_expected);
    let mut first: Option<(Vec<usize>, Counts)> = None;
    let mut last_error = None;
    for c in &choices {
        match compute(c) {
            Ok(counts) => {
                if expected == Some(counts) {
                    return finish(row, counts, Some(c.clone()));
                }
                first.get_or_insert((c.clone(), counts));
            }
            Err(e) => last_error = Some(e),
        }
    }
    match first {
        Some((c, counts)) => {
            let mut out = finish(row, counts, Some(c));
            if out.status == RowStatus::Mismatch {
                out.detail = format!("no choice among {} reproduces the row", choices.len());
            }
            out
        }
        None => not_computed(
            row,
            RowStatus::Failed,
            last_error.map_or_else(|| "no smooth decomposition choice".to_string(), |e| e.to_string()),
        ),
    }
}

/// Replays every manifest row. Fixture paths are relative to `base`.
pub fn run_table(
    manifest: &Manifest,
    base: &Path,
    database: Option<&BTreeMap<usize, LatticePolytope>>,
    workers: usize,
) -> Result<Vec<TableRow>> {
    let fixtures: Vec<Option<Fixture>> = manifest
        .rows
        .iter()
        .map(|r| {
            r.fixture
                .as_ref()
                .map(|f| fanoscope::io::load_fixture(&base.join(f)))
                .transpose()
        })
        .collect::<Result<_>>()?;
    let rows = pool(workers)?.install(|| {
        manifest
            .rows
            .par_iter()
            .zip(fixtures.par_iter())
            .map(|(row, fixture)| {
                if let Some(f) = fixture {
                    return fixture_row(row, f);
                }
                if !row.from_database {
                    return not_computed(row, RowStatus::Skipped, "no construction available".into());
                }
                let Some(id) = row.palp_id else {
                    return not_computed(row, RowStatus::Failed, "database row without an id".into());
                };
                match database.map(|db| db.get(&id)) {
                    None => not_computed(row, RowStatus::Skipped, "database not supplied".into()),
                    Some(None) => not_computed(row, RowStatus::Failed, format!("database has no entry {}", id)),
                    Some(Some(p)) => database_row(row, p),
                }
            })
            .collect()
    });
    Ok(rows)
}

/// Database ids a manifest needs.
pub fn database_ids(manifest: &Manifest) -> BTreeSet<usize> {
    manifest
        .rows
        .iter()
        .filter(|r| r.from_database)
        .filter_map(|r| r.palp_id)
        .collect()
}

/// Writes the table as CSV with the columns Name, PALP ID, Degree, p, n, χ.
/// Rows that were not computed keep their numeric cells empty.
pub fn write_table_csv<W: std::io::Write>(rows: &[TableRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["Name", "PALP ID", "Degree", "p", "n", "χ"]).map_err(io)?;
    for r in rows {
        let id = r.palp_id.map_or_else(|| "n/a".to_string(), |i| i.to_string());
        let cells = match r.computed {
            Some(c) => [c.degree, c.p, c.n, c.euler].map(|x| x.to_string()),
            None => Default::default(),
        };
        w.write_record([r.name.as_str(), id.as_str()].into_iter().chain(cells.iter().map(String::as_str)))
            .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

/// Writes a `verify24` sweep as CSV with the columns id, sum, pass.
pub fn write_identity_csv<W: std::io::Write>(rows: &[Identity24Row], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_are_lexicographic() {
        let c = choice_combinations(&[2, 1, 3], 100).unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c[0], vec![0, 0, 0]);
        assert_eq!(c[1], vec![0, 0, 1]);
        assert_eq!(c[5], vec![1, 0, 2]);
        assert!(choice_combinations(&[2, 0], 100).unwrap().is_empty());
        assert!(choice_combinations(&[], 100).unwrap() == vec![Vec::<usize>::new()]);
        assert!(matches!(choice_combinations(&[64, 64], 100), Err(Error::Unsupported(_))));
    }

    #[test]
    fn identity_sweep_orders_by_id() {
        let p3 = LatticePolytope::from_i64(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]).unwrap();
        let cube = LatticePolytope::from_i64(&[
            [-1, -1, -1],
            [-1, -1, 1],
            [-1, 1, -1],
            [-1, 1, 1],
            [1, -1, -1],
            [1, -1, 1],
            [1, 1, -1],
            [1, 1, 1],
        ])
        .unwrap();
        let input: Vec<(usize, LatticePolytope)> = (0..12)
            .map(|i| (i, if i % 2 == 0 { p3.clone() } else { cube.clone() }))
            .collect();
        let one = verify24(&input, 1).unwrap();
        let four = verify24(&input, 4).unwrap();
        assert_eq!(one, four);
        assert!(one.iter().all(|r| r.pass && r.sum == "24"));
        assert_eq!(one.iter().map(|r| r.id).collect::<Vec<_>>(), (0..12).collect::<Vec<_>>());
    }
}

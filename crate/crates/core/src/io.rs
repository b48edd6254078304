//! Reading and writing polytopes, the reflexive database list, degeneration
//! fixtures and table manifests.

use crate::degeneration::{
    method1_data, method3_data, facet_decompositions, DegenerationData, EdgeData, Method, RayData, RayEntry,
};
use crate::error::{Error, Result};
use crate::fan::GeneralizedFan;
use crate::invariants::KnownValues;
use crate::linalg::{int, primitive, Int, IntVector, Rat, RatVector};
use crate::polygon::Polygon;
use crate::polytope::LatticePolytope;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::io::BufRead;
use std::path::Path;

/// The number of entries in the list of three-dimensional reflexive
/// polytopes.
pub const DATABASE_SIZE: usize = 4319;

/// A polytope read from a file, with its optional name and database id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeFile {
    pub name: Option<String>,
    pub palp_id: Option<usize>,
    pub polytope: LatticePolytope,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawPolytope {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    palp_id: Option<usize>,
    vertices: Vec<Vec<i64>>,
}

fn polytope_from_rows(rows: &[Vec<i64>]) -> Result<LatticePolytope> {
    let pts: Vec<IntVector> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    if let Some(bad) = pts.iter().find(|p| p.len() != 3) {
        return Err(Error::Validation(format!("vertex {:?} does not have three coordinates", bad)));
    }
    let p = LatticePolytope::from_int_points(&pts)?;
    if !p.origin_is_interior() {
        return Err(Error::OriginNotInterior);
    }
    Ok(p)
}

/// Parses a polytope from JSON `{"name", "palp_id", "vertices"}` or from a
/// text matrix with an `r c` header. A `3 × k` matrix lists vertices as
/// columns, a `k × 3` matrix as rows; `3 × 3` is read as rows.
pub fn parse_polytope_str(text: &str) -> Result<PolytopeFile> {
    if text.trim_start().starts_with('{') {
        let raw: RawPolytope = serde_json::from_str(text).map_err(json_error)?;
        return Ok(PolytopeFile {
            name: raw.name,
            palp_id: raw.palp_id,
            polytope: polytope_from_rows(&raw.vertices)?,
        });
    }
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let rows = read_matrix(&mut lines)?.ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "empty input".into(),
    })?;
    Ok(PolytopeFile {
        name: None,
        palp_id: None,
        polytope: polytope_from_rows(&rows)?,
    })
}

pub fn parse_polytope(path: &Path) -> Result<PolytopeFile> {
    parse_polytope_str(&read_file(path)?)
}

/// Integer tokens of a line with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.char_indices()
        .filter(|&(i, c)| !c.is_whitespace() && (i == 0 || line[..i].ends_with(char::is_whitespace)))
        .map(move |(i, _)| {
            let rest = &line[i..];
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            (line[..i].chars().count() + 1, &rest[..end])
        })
}

fn int_token(line: usize, column: usize, tok: &str) -> Result<i64> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        column,
        message: format!("expected an integer, found `{}`", tok),
    })
}

/// Reads one `r c` header and its matrix, returning vertices as rows.
/// Header tokens after the two dimensions are ignored.
fn read_matrix<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Option<Vec<Vec<i64>>>> {
    let (hline, header) = loop {
        match lines.next() {
            None => return Ok(None),
            Some((_, l)) if l.trim().is_empty() => continue,
            Some(x) => break x,
        }
    };
    let mut toks = tokens(header);
    let mut dim = |what: &str| -> Result<usize> {
        let (col, t) = toks.next().ok_or(Error::Parse {
            line: hline,
            column: header.len() + 1,
            message: format!("missing {} in header", what),
        })?;
        let v = int_token(hline, col, t)?;
        usize::try_from(v).map_err(|_| Error::Parse {
            line: hline,
            column: col,
            message: format!("negative {}", what),
        })
    };
    let r = dim("row count")?;
    let c = dim("column count")?;
    let mut m = Vec::with_capacity(r);
    while m.len() < r {
        let (ln, l) = lines.next().ok_or(Error::Parse {
            line: hline + m.len() + 1,
            column: 1,
            message: format!("expected {} matrix rows, found {}", r, m.len()),
        })?;
        if l.trim().is_empty() {
            continue;
        }
        let row: Vec<i64> = tokens(l).map(|(col, t)| int_token(ln, col, t)).collect::<Result<_>>()?;
        if row.len() != c {
            return Err(Error::Parse {
                line: ln,
                column: 1,
                message: format!("expected {} entries, found {}", c, row.len()),
            });
        }
        m.push(row);
    }
    if c == 3 {
        Ok(Some(m))
    } else if r == 3 {
        Ok(Some((0..c).map(|j| m.iter().map(|row| row[j]).collect()).collect()))
    } else {
        Err(Error::Parse {
            line: hline,
            column: 1,
            message: format!("a {}×{} matrix does not describe points of rank 3", r, c),
        })
    }
}

fn int_rows(p: &LatticePolytope) -> Result<Vec<Vec<i64>>> {
    p.int_vertices()?
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| {
                    num_traits::ToPrimitive::to_i64(x)
                        .ok_or_else(|| Error::Unsupported("coordinate does not fit in 64 bits".into()))
                })
                .collect()
        })
        .collect()
}

/// JSON form of a polytope.
pub fn write_polytope_json(file: &PolytopeFile) -> Result<String> {
    let raw = RawPolytope {
        name: file.name.clone(),
        palp_id: file.palp_id,
        vertices: int_rows(&file.polytope)?,
    };
    serde_json::to_string_pretty(&raw).map_err(|e| Error::Io(e.to_string()))
}

/// Text form: a `3 k` header and the vertices as columns.
pub fn write_polytope_text(p: &LatticePolytope) -> Result<String> {
    let rows = int_rows(p)?;
    let mut out = format!("3 {}\n", rows.len());
    for j in 0..3 {
        let line: Vec<String> = rows.iter().map(|v| v[j].to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    Ok(out)
}

/// Streaming reader of the reflexive database list: consecutive blocks of an
/// `r c` header line followed by the matrix, numbered from zero.
pub struct DatabaseReader<R: BufRead> {
    lines: std::iter::Enumerate<std::io::Lines<R>>,
    next_id: usize,
    failed: bool,
}

impl<R: BufRead> DatabaseReader<R> {
    pub fn new(reader: R) -> Self {
        DatabaseReader {
            lines: reader.lines().enumerate(),
            next_id: 0,
            failed: false,
        }
    }

    /// Number of entries yielded so far.
    pub fn entries_read(&self) -> usize {
        self.next_id
    }
}

impl<R: BufRead> Iterator for DatabaseReader<R> {
    type Item = Result<(usize, LatticePolytope)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let mut buffer: Vec<(usize, String)> = Vec::new();
        let mut header_rows = None;
        loop {
            match self.lines.next() {
                None => break,
                Some((i, Ok(l))) => {
                    if buffer.is_empty() && l.trim().is_empty() {
                        continue;
                    }
                    if buffer.is_empty() {
                        header_rows = tokens(&l).next().and_then(|(_, t)| t.parse::<usize>().ok());
                    }
                    buffer.push((i + 1, l));
                    if let Some(r) = header_rows {
                        if buffer.len() == r + 1 {
                            break;
                        }
                    } else {
                        break;
                    }
                }
                Some((_, Err(e))) => {
                    self.failed = true;
                    return Some(Err(Error::Io(e.to_string())));
                }
            }
        }
        if buffer.is_empty() {
            return None;
        }
        let mut it = buffer.iter().map(|(n, l)| (*n, l.as_str()));
        let result = read_matrix(&mut it).and_then(|rows| {
            let rows = rows.expect("non-empty block");
            polytope_from_rows(&rows)
        });
        let id = self.next_id;
        self.next_id += 1;
        match result {
            Ok(p) => Some(Ok((id, p))),
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

/// Opens the database list for streaming.
pub fn ingest_database(path: &Path) -> Result<DatabaseReader<std::io::BufReader<std::fs::File>>> {
    let f = std::fs::File::open(path).map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))?;
    Ok(DatabaseReader::new(std::io::BufReader::new(f)))
}

/// A warning when a database file does not have the expected size.
pub fn count_warning(count: usize) -> Option<String> {
    (count != DATABASE_SIZE).then(|| {
        format!(
            "database has {} entries, expected {}; ids may not match the published list",
            count, DATABASE_SIZE
        )
    })
}

/// A rational coordinate written as an integer or a string `"a/b"`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    pub fn to_rat(&self) -> Result<Rat> {
        match self {
            Number::Int(v) => Ok(Rat::from_integer(int(*v))),
            Number::Text(s) => {
                let bad = || Error::Validation(format!("`{}` is not a rational number", s));
                let s = s.trim().replace('−', "-");
                match s.split_once('/') {
                    Some((a, b)) => {
                        let a: Int = a.trim().parse().map_err(|_| bad())?;
                        let b: Int = b.trim().parse().map_err(|_| bad())?;
                        if b.is_zero() {
                            return Err(bad());
                        }
                        Ok(Rat::new(a, b))
                    }
                    None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
                }
            }
        }
    }
}

fn point(p: &[Number]) -> Result<RatVector> {
    p.iter().map(Number::to_rat).collect()
}

fn ivec3(v: &[i64; 3]) -> IntVector {
    v.iter().map(|&x| int(x)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FanSpec {
    /// The normal fan of `P`.
    Normal,
    /// A complete plane fan times a line.
    Line {
        direction: [i64; 3],
        generators: Vec<[i64; 3]>,
    },
    Explicit {
        rays: Vec<[i64; 3]>,
        two_cones: Vec<[usize; 2]>,
        three_cones: Vec<Vec<usize>>,
    },
}

impl FanSpec {
    pub fn build(&self, p: &LatticePolytope) -> Result<GeneralizedFan> {
        match self {
            FanSpec::Normal => GeneralizedFan::normal_fan(p),
            FanSpec::Line {
                direction,
                generators,
            } => GeneralizedFan::line_fan(&ivec3(direction), &generators.iter().map(ivec3).collect::<Vec<_>>()),
            FanSpec::Explicit {
                rays,
                two_cones,
                three_cones,
            } => GeneralizedFan::explicit(&rays.iter().map(ivec3).collect::<Vec<_>>(), two_cones, three_cones),
        }
    }
}

/// A label value: an integer or `"bound"` for `⌊ℓ(E★)/r(E★)⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum LabelValue {
    Int(i64),
    Word(String),
}

/// One labelling rule. Exactly one selector is set: an edge of `P°` by its
/// endpoints, every edge through a point, or every edge. `through` and
/// `all` only touch edges lying in a two-cone. Later rules override
/// earlier ones.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct LabelRule {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<[[Number; 3]; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub through: Option<[Number; 3]>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub all: bool,
    pub label: LabelValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SummandSpec {
    /// Vertices in `N`, in a translate of the annihilator of the ray.
    pub vertices: Vec<[i64; 3]>,
    #[serde(default = "one")]
    pub count: usize,
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RaySpec {
    pub ray: [i64; 3],
    pub summands: Vec<SummandSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Construction {
    /// Normal fan with smooth decompositions of the facets of `P`; `choice`
    /// picks one decomposition per facet, the first by default.
    SmoothDecompositions {
        polytope: Vec<[i64; 3]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        choice: Option<Vec<usize>>,
    },
    /// `P° = Q × [−1, 1]` over the polygon `Q`.
    Product { base: Vec<[i64; 2]> },
    /// Fan, labels and ray data given explicitly; rays not listed carry
    /// the point summand.
    Explicit {
        polytope: Vec<[i64; 3]>,
        fan: FanSpec,
        labels: Vec<LabelRule>,
        #[serde(default)]
        rays: Vec<RaySpec>,
    },
}

/// Values that come from the literature rather than from this crate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct KnownSpec {
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b2: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<usize>,
}

/// Values a fixture is expected to reproduce.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b2: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b3: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<i64>,
}

const SOURCES: [&str; 2] = ["paper", "derived"];

/// A degeneration fixture.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub palp_id: Option<usize>,
    pub construction: Construction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub known: Option<KnownSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

pub fn parse_fixture_str(text: &str) -> Result<Fixture> {
    let f: Fixture = serde_json::from_str(text).map_err(json_error)?;
    for source in f
        .known
        .iter()
        .map(|k| &k.source)
        .chain(f.expected.iter().map(|e| &e.source))
    {
        if !SOURCES.contains(&source.as_str()) {
            return Err(Error::Validation(format!("unknown source tag `{}`", source)));
        }
    }
    Ok(f)
}

pub fn load_fixture(path: &Path) -> Result<Fixture> {
    parse_fixture_str(&read_file(path)?)
}

fn polytope_of(vertices: &[[i64; 3]]) -> Result<LatticePolytope> {
    polytope_from_rows(&vertices.iter().map(|v| v.to_vec()).collect::<Vec<_>>())
}

impl Fixture {
    /// Values to feed into the analysis.
    pub fn known_values(&self) -> KnownValues {
        match &self.known {
            Some(k) => KnownValues {
                b2: k.b2,
                vertex_count: k.vertices,
            },
            None => KnownValues::default(),
        }
    }

    /// The polytope `P` of the fixture.
    pub fn polytope(&self) -> Result<LatticePolytope> {
        match &self.construction {
            Construction::SmoothDecompositions { polytope, .. } | Construction::Explicit { polytope, .. } => {
                polytope_of(polytope)
            }
            Construction::Product { .. } => Ok(self.build()?.polytope),
        }
    }

    /// Builds and validates the degeneration data.
    pub fn build(&self) -> Result<DegenerationData> {
        let data = match &self.construction {
            Construction::SmoothDecompositions { polytope, choice } => {
                let p = polytope_of(polytope)?;
                let decs = facet_decompositions(&p)?;
                let picks = match choice {
                    Some(c) if c.len() != decs.len() => {
                        return Err(Error::Validation(format!(
                            "choice lists {} facets, the polytope has {}",
                            c.len(),
                            decs.len()
                        )))
                    }
                    Some(c) => c.clone(),
                    None => vec![0; decs.len()],
                };
                let chosen = decs
                    .iter()
                    .zip(&picks)
                    .enumerate()
                    .map(|(f, (d, &i))| {
                        d.get(i).cloned().ok_or_else(|| {
                            Error::Validation(format!("facet {} has {} decompositions, not {}", f, d.len(), i + 1))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                method1_data(self.name.clone(), &p, &chosen)?
            }
            Construction::Product { base } => {
                let q = Polygon::from_int_points(&base.iter().map(|v| vec![int(v[0]), int(v[1])]).collect::<Vec<_>>());
                method3_data(self.name.clone(), &q)?
            }
            Construction::Explicit {
                polytope,
                fan,
                labels,
                rays,
            } => build_explicit(&self.name, &polytope_of(polytope)?, fan, labels, rays)?,
        };
        data.validate()?;
        Ok(data)
    }
}

fn build_explicit(
    name: &str,
    p: &LatticePolytope,
    fan_spec: &FanSpec,
    rules: &[LabelRule],
    rays: &[RaySpec],
) -> Result<DegenerationData> {
    let fan = fan_spec.build(p)?;
    let mut entries: Vec<RayEntry> = fan.rays().iter().map(|r| RayEntry::trivial(r)).collect();
    for spec in rays {
        let r = primitive(&ivec3(&spec.ray));
        let k = fan
            .rays()
            .iter()
            .position(|x| *x == r)
            .ok_or_else(|| Error::Validation(format!("{:?} is not a distinguished ray", spec.ray)))?;
        let mut pieces = Vec::new();
        for s in &spec.summands {
            let verts: Vec<IntVector> = s.vertices.iter().map(ivec3).collect();
            for _ in 0..s.count {
                pieces.push(verts.clone());
            }
        }
        entries[k] = RayEntry::from_vertices(&r, &pieces)?;
    }
    let ray_data = RayData { entries };
    let unlabelled = DegenerationData::new(name, Method::Explicit, p.clone(), fan, EdgeData::new(), ray_data)?;
    let dual = &unlabelled.dual;
    let mut edge_data = EdgeData::new();
    for rule in rules {
        let selectors = rule.edge.is_some() as u8 + rule.through.is_some() as u8 + rule.all as u8;
        if selectors != 1 {
            return Err(Error::Validation("a label rule needs exactly one selector".into()));
        }
        let targets: Vec<usize> = if let Some([a, b]) = &rule.edge {
            let (a, b) = (point(a)?, point(b)?);
            let e = (0..dual.edges().len())
                .find(|&e| {
                    let [p, q] = dual.edge_points(e);
                    (p == a && q == b) || (p == b && q == a)
                })
                .ok_or_else(|| Error::Validation(format!("no edge of P° between {:?} and {:?}", a, b)))?;
            vec![e]
        } else {
            let through = rule.through.as_ref().map(|t| point(t)).transpose()?;
            if let Some(t) = &through {
                if !dual.vertices().contains(t) {
                    return Err(Error::Validation(format!("{:?} is not a vertex of P°", t)));
                }
            }
            unlabelled
                .edges_in_two_cones()
                .into_iter()
                .filter(|&e| match &through {
                    Some(t) => dual.edge_points(e).contains(t),
                    None => true,
                })
                .collect()
        };
        for e in targets {
            let value = match &rule.label {
                LabelValue::Int(v) => int(*v),
                LabelValue::Word(w) if w == "bound" => unlabelled.edge_bound(e)?,
                LabelValue::Word(w) => {
                    return Err(Error::Validation(format!("unknown label `{}`", w)));
                }
            };
            edge_data.set(e, value);
        }
    }
    DegenerationData::new(
        unlabelled.name,
        unlabelled.method,
        unlabelled.polytope,
        unlabelled.fan,
        edge_data,
        unlabelled.ray_data,
    )
}

/// One row of a table manifest: a fixture file, or a database entry with a
/// decomposition choice.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestRow {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub palp_id: Option<usize>,
    /// Path relative to the manifest.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    /// Build from database entry `palp_id` with smooth decompositions.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub from_database: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub choice: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub rows: Vec<ManifestRow>,
}

pub fn load_manifest(path: &Path) -> Result<Manifest> {
    serde_json::from_str(&read_file(path)?).map_err(json_error)
}

//! Numerical invariants of the model: node census, Euler number by two
//! independent routes and the closed forms, anticanonical degree, `b₃`,
//! Fano index and the `p₁c₁` helper.

use crate::degeneration::{check_smooth_data, DegenerationData, Method, SlabEdgeKind};
use crate::error::{Error, Result};
use crate::gamma;
use crate::linalg::{gcd_all, int, primitive, primitive_from_rat, rat_from_int, to_int_vec, Int, IntMatrix, IntVector, Rat};
use crate::polygon::Polygon;
use crate::polytope::{gorenstein_index, LatticePolytope};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

fn small(x: &Int, what: &str) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Unsupported(format!("{} does not fit in 64 bits", what)))
}

/// Counts read off the slabs and the ray data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    /// Positive nodes: two-dimensional summands.
    pub p: usize,
    /// One-dimensional summands.
    pub d: usize,
    /// Negative nodes: `Σ_s 2·Area(P_D)`.
    pub n: i64,
    /// `|Δ ∩ ∂B|`: segments of `∂P_D` dual to slab edges on `∂P°`.
    pub boundary: i64,
    /// `Σ_s b_s`.
    pub perimeter: i64,
    /// `Σ_s (1 − i_s)`.
    pub genus_defect: i64,
}

/// Collects the census and checks `Σ_s b_s = |Δ ∩ ∂B| + 3p + 2d`.
pub fn census(data: &DegenerationData) -> Result<Census> {
    let mut n = Int::zero();
    let mut boundary = Int::zero();
    let mut perimeter = Int::zero();
    let mut defect = Int::zero();
    for slab in &data.slabs {
        n += &slab.twice_area;
        perimeter += &slab.boundary;
        defect += Int::one() - &slab.interior;
        for e in &slab.edges {
            if let SlabEdgeKind::Boundary { .. } = e.kind {
                boundary += &e.section_length;
            }
        }
    }
    let c = Census {
        p: data.triangle_count(),
        d: data.segment_count(),
        n: small(&n, "n")?,
        boundary: small(&boundary, "boundary count")?,
        perimeter: small(&perimeter, "perimeter")?,
        genus_defect: small(&defect, "Σ(1 − i)")?,
    };
    if c.perimeter != c.boundary + 3 * c.p as i64 + 2 * c.d as i64 {
        return Err(Error::Compatibility(format!(
            "Σ b_s = {} but |Δ∩∂B| + 3p + 2d = {}",
            c.perimeter,
            c.boundary + 3 * c.p as i64 + 2 * c.d as i64
        )));
    }
    Ok(c)
}

/// Both evaluations of the Euler number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub euler: i64,
    /// `2Σ_s(1 − i_s) − 2|J| + V(B)`.
    pub slab_formula: i64,
    /// `p − n + |Δ∩∂B| + V(B)`.
    pub node_formula: i64,
    pub vertex_count: usize,
    pub census: Census,
}

/// The Euler number with `V(B)` from the vertex classification.
pub fn euler_number(data: &DegenerationData) -> Result<EulerReport> {
    let report = check_smooth_data(data);
    if let Some(v) = report.violations.first() {
        return Err(Error::Validation(format!("data is not smooth: {}", v)));
    }
    euler_number_with_vertices(data, report.corner_count())
}

/// The Euler number for a given vertex count `V(B)`. Both formulas are
/// evaluated and must agree; the result must be even.
pub fn euler_number_with_vertices(data: &DegenerationData, vertex_count: usize) -> Result<EulerReport> {
    let c = census(data)?;
    let v = vertex_count as i64;
    let j = (c.p + c.d) as i64;
    let slab_formula = 2 * c.genus_defect - 2 * j + v;
    let node_formula = c.p as i64 - c.n + c.boundary + v;
    if slab_formula != node_formula {
        return Err(Error::FormulaMismatch(format!(
            "slab formula gives {}, node census gives {}",
            slab_formula, node_formula
        )));
    }
    if slab_formula % 2 != 0 {
        return Err(Error::InconsistentInvariants(format!(
            "odd Euler number {}",
            slab_formula
        )));
    }
    Ok(EulerReport {
        euler: slab_formula,
        slab_formula,
        node_formula,
        vertex_count,
        census: c,
    })
}

/// `24 + T − Σ_E ℓ(E)·ℓ(E★)²` for data built from smooth decompositions.
pub fn euler_smooth_mink(data: &DegenerationData) -> Result<i64> {
    if data.method != Method::SmoothDecompositions {
        return Err(Error::Unsupported(
            "closed form applies to data built from smooth decompositions".into(),
        ));
    }
    let mut total = rat_from_int(&int(24 + data.triangle_count() as i64));
    for e in 0..data.dual.edges().len() {
        let star = rat_from_int(&data.dual_edge_length(e)?);
        total -= data.dual.edge_length(e) * &star * &star;
    }
    if !total.is_integer() {
        return Err(Error::NotIntegral("P° has fractional edge lengths".into()));
    }
    small(&total.to_integer(), "Euler number")
}

/// Euler number of `dP × ℙ¹`-type products over a polygon `Q` with `Q°`
/// integral: `2Σ_v a_v` with `a_v = ℓ(v★)`, and the degree
/// `12 − Σ_v a_v` of the del Pezzo surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductReport {
    pub euler: i64,
    pub del_pezzo_degree: i64,
    pub labels: Vec<i64>,
}

/// Evaluates the product closed form from the two-dimensional data of `Q`
/// alone.
pub fn euler_product(q: &Polygon) -> Result<ProductReport> {
    let verts = q
        .int_vertices()
        .ok_or_else(|| Error::NotIntegral("base polygon".into()))?;
    let polar = Polygon::from_inequalities(
        &verts
            .iter()
            .map(|v| (v.clone(), -Rat::one()))
            .collect::<Vec<_>>(),
    )
    .ok_or(Error::OriginNotInterior)?;
    let mut labels = Vec::new();
    for v in &verts {
        let face = polar.face_minimizing(v);
        let ends: Vec<IntVector> = face
            .iter()
            .map(|x| to_int_vec(x).ok_or_else(|| Error::NotIntegral("dual polygon".into())))
            .collect::<Result<_>>()?;
        let r = gorenstein_index(&ends)?;
        if !r.is_one() {
            return Err(Error::Unsupported(format!(
                "dual edge of vertex {:?} has Gorenstein index {}",
                v, r
            )));
        }
        let len = polar.face_length(v);
        labels.push(small(&len.to_integer(), "label")?);
    }
    let sum: i64 = labels.iter().sum();
    Ok(ProductReport {
        euler: 2 * sum,
        del_pezzo_degree: 12 - sum,
        labels,
    })
}

/// The anticanonical degree and how it was computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub degree: i64,
    /// Least `k` with `k·P°` integral.
    pub dilation: i64,
    /// Boundary lattice points of `k·P°`.
    pub boundary_points: usize,
}

/// `2|P°∩M| − 6` for reflexive `P`, cross-checked with the normalized area
/// of `∂P°`; otherwise the normalized boundary area of `k·P°` over `k²`.
pub fn degree(p: &LatticePolytope) -> Result<DegreeReport> {
    let dual = p.polar_dual()?;
    let k = dual.denominator();
    let dilated = dual.dilate(&k);
    let (total, _, boundary_points) = dilated.point_counts()?;
    let area = dilated.boundary_normalized_area()?;
    let k2 = rat_from_int(&(&k * &k));
    let scaled = &area / &k2;
    if scaled != dual.boundary_normalized_area()? {
        return Err(Error::FormulaMismatch(
            "boundary area does not scale with the dilation".into(),
        ));
    }
    if !scaled.is_integer() {
        return Err(Error::InconsistentInvariants(format!(
            "fractional degree {}",
            scaled
        )));
    }
    let degree = scaled.to_integer();
    if k.is_one() {
        let by_points = int(2 * total as i64 - 6);
        if by_points != degree {
            return Err(Error::FormulaMismatch(format!(
                "2|P°∩M| − 6 = {} but the boundary area is {}",
                by_points, degree
            )));
        }
    }
    Ok(DegreeReport {
        degree: small(&degree, "degree")?,
        dilation: small(&k, "dilation")?,
        boundary_points,
    })
}

/// `b₃ = 2 + 2b₂ − e`, which must be even and non-negative.
pub fn b3_from(euler: i64, b2: i64) -> Result<i64> {
    let b3 = 2 + 2 * b2 - euler;
    if b3 < 0 || b3 % 2 != 0 {
        return Err(Error::InconsistentInvariants(format!(
            "b₃ = 2 + 2·{} − ({}) = {}",
            b2, euler, b3
        )));
    }
    Ok(b3)
}

/// `p₁c₁ = −K³ − 48`.
pub fn p1c1_expected(degree: i64) -> i64 {
    degree - 48
}

/// How the Fano index was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexMethod {
    /// Kernel of the gluing map on the cells over the facets of `P°`.
    Gluing,
    /// Number of boundary components cut out by the creases of `∂P°`.
    BoundaryComponents,
    /// The degree has no cube divisor above one.
    CubeFreeDegree,
}

impl IndexMethod {
    pub fn name(self) -> &'static str {
        match self {
            IndexMethod::Gluing => "gluing",
            IndexMethod::BoundaryComponents => "boundary_components",
            IndexMethod::CubeFreeDegree => "cube_free_degree",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanoIndex {
    pub index: i64,
    pub method: IndexMethod,
}

/// Greatest `k` with `k³ | n`.
fn cube_root_divisor(n: i64) -> i64 {
    let n = n.abs();
    (1..=n).take_while(|k| k * k * k <= n).filter(|k| n % (k * k * k) == 0).max().unwrap_or(1)
}

/// The Fano index.
///
/// For a pointed fan whose maximal cones are the cones over the facets of an
/// integral `P°`, each cell carries one integer coordinate, each wall over
/// an edge `E` between facets `F₁, F₂` gives the relation
/// `ℓ(E)/d_{F₁}·t₁ = ℓ(E)/d_{F₂}·t₂` with `d_F` the gcd of the edge lengths
/// of `F`, and the index is the divisibility of the boundary tuple `(d_F)`
/// in the saturated kernel. Line fans use the count of boundary
/// components, and otherwise a cube-free degree forces index one.
pub fn fano_index(data: &DegenerationData) -> Result<FanoIndex> {
    if data.method == Method::Product {
        return Err(Error::NotRankOne("product models have Picard rank above one".into()));
    }
    if data.fan.is_pointed() && data.dual.is_integral() {
        if let Some(index) = gluing_index(data)? {
            return Ok(FanoIndex {
                index,
                method: IndexMethod::Gluing,
            });
        }
    }
    let deg = degree(&data.polytope)?.degree;
    if !data.fan.is_pointed() {
        let c = boundary_components(data)? as i64;
        if deg % (c * c * c) != 0 {
            return Err(Error::InconsistentInvariants(format!(
                "{} boundary components but degree {}",
                c, deg
            )));
        }
        if cube_root_divisor(deg) != c {
            return Err(Error::Unsupported(format!(
                "{} boundary components do not pin the index for degree {}",
                c, deg
            )));
        }
        return Ok(FanoIndex {
            index: c,
            method: IndexMethod::BoundaryComponents,
        });
    }
    if cube_root_divisor(deg) == 1 {
        return Ok(FanoIndex {
            index: 1,
            method: IndexMethod::CubeFreeDegree,
        });
    }
    Err(Error::Unsupported(
        "no index computation applies to this fan".into(),
    ))
}

fn gluing_index(data: &DegenerationData) -> Result<Option<i64>> {
    let dual = &data.dual;
    let vertex_dirs: Vec<IntVector> = dual.vertices().iter().map(|v| primitive_from_rat(v)).collect();
    let as_set = |gens: &[IntVector]| {
        let mut g: Vec<IntVector> = gens.iter().map(|x| primitive(x)).collect();
        g.sort();
        g
    };
    let mut cells = Vec::new();
    for cone in data.fan.three_cones() {
        let gens = as_set(&cone.generators);
        let facet = dual.facets().iter().position(|f| {
            let mut vs: Vec<IntVector> = f.vertices.iter().map(|&i| vertex_dirs[i].clone()).collect();
            vs.sort();
            vs == gens
        });
        match facet {
            Some(f) => cells.push(f),
            None => return Ok(None),
        }
    }
    let facet_edges = |f: usize| -> Vec<usize> {
        let vs = &dual.facets()[f].vertices;
        (0..dual.edges().len())
            .filter(|&e| dual.edges()[e].vertices.iter().all(|v| vs.contains(v)))
            .collect()
    };
    let mut d = Vec::new();
    for &f in &cells {
        let lengths: Vec<Int> = facet_edges(f)
            .iter()
            .map(|&e| dual.edge_length(e).to_integer())
            .collect();
        d.push(gcd_all(&lengths));
    }
    let mut rows = Vec::new();
    for cone in data.fan.two_cones() {
        let gens = as_set(&cone.generators);
        let edge = (0..dual.edges().len()).find(|&e| {
            let mut vs: Vec<IntVector> = dual.edges()[e].vertices.iter().map(|&i| vertex_dirs[i].clone()).collect();
            vs.sort();
            vs == gens
        });
        let Some(e) = edge else { return Ok(None) };
        let len = dual.edge_length(e).to_integer();
        let sides: Vec<usize> = (0..cells.len())
            .filter(|&c| {
                let vs = &dual.facets()[cells[c]].vertices;
                dual.edges()[e].vertices.iter().all(|v| vs.contains(v))
            })
            .collect();
        if sides.len() != 2 {
            return Err(Error::InvalidFan(format!("wall over edge {} bounds {} cells", e, sides.len())));
        }
        let mut row = vec![Int::zero(); cells.len()];
        row[sides[0]] = &len / &d[sides[0]];
        row[sides[1]] = -(&len / &d[sides[1]]);
        rows.push(row);
    }
    let kernel = crate::linalg::integer_kernel(&IntMatrix::from_rows(rows, cells.len()));
    if kernel.len() != 1 {
        return Err(Error::NotRankOne(format!("gluing kernel has rank {}", kernel.len())));
    }
    let index = crate::linalg::index_in_saturation(&d, &kernel)
        .map_err(|_| Error::InconsistentInvariants("boundary tuple outside the gluing kernel".into()))?;
    Ok(Some(small(&index.abs(), "index")?))
}

/// Components of `∂P°` after cutting along creases: edges outside the
/// two-cones or labelled below `⌊ℓ(E★)/r(E★)⌋`.
pub fn boundary_components(data: &DegenerationData) -> Result<usize> {
    let dual = &data.dual;
    let nf = dual.facets().len();
    let mut parent: Vec<usize> = (0..nf).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for e in 0..dual.edges().len() {
        let smooth = data.edge_in_cone(e).is_some() && data.edge_data.get(e) == data.edge_bound(e)?;
        if !smooth {
            continue;
        }
        let ends = dual.edges()[e].vertices;
        let sides: Vec<usize> = (0..nf)
            .filter(|&f| ends.iter().all(|v| dual.facets()[f].vertices.contains(v)))
            .collect();
        if let [a, b] = sides[..] {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let mut roots: Vec<usize> = (0..nf).map(|f| find(&mut parent, f)).collect();
    roots.sort();
    roots.dedup();
    Ok(roots.len())
}

/// Values not derivable here, supplied with a dataset.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnownValues {
    pub b2: Option<i64>,
    pub vertex_count: Option<usize>,
}

/// All invariants of a dataset with the route each value took.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub degree: i64,
    pub p: usize,
    pub n: i64,
    pub euler: i64,
    pub b2: Option<i64>,
    pub b3: Option<i64>,
    pub index: Option<i64>,
    pub d: usize,
    pub boundary: i64,
    pub vertices: usize,
    pub p1c1: i64,
    pub method: Method,
    pub provenance: BTreeMap<String, String>,
}

/// Validates the data and computes every invariant that applies.
pub fn analyze(data: &DegenerationData, known: &KnownValues) -> Result<InvariantReport> {
    data.validate()?;
    let smooth = check_smooth_data(data);
    if let Some(v) = smooth.violations.first() {
        return Err(Error::Validation(format!("data is not smooth: {}", v)));
    }
    let mut provenance = BTreeMap::new();
    if !smooth.relaxed.is_empty() {
        provenance.insert(
            "relaxed".to_string(),
            smooth
                .relaxed
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; "),
        );
    }
    let classified = smooth.corner_count();
    let vertices = match known.vertex_count {
        Some(v) if v != classified => {
            provenance.insert(
                "vertices".to_string(),
                format!("supplied; classification gives {}", classified),
            );
            v
        }
        Some(v) => {
            provenance.insert("vertices".to_string(), "supplied, agrees with classification".to_string());
            v
        }
        None => {
            provenance.insert("vertices".to_string(), "classification".to_string());
            classified
        }
    };
    let euler = euler_number_with_vertices(data, vertices)?;
    provenance.insert("euler".to_string(), "slab formula = node census".to_string());
    if data.method == Method::SmoothDecompositions {
        let closed = euler_smooth_mink(data)?;
        if closed != euler.euler {
            return Err(Error::FormulaMismatch(format!(
                "closed form gives {}, slabs give {}",
                closed, euler.euler
            )));
        }
        provenance.insert(
            "euler".to_string(),
            "slab formula = node census = closed form".to_string(),
        );
    }
    let deg = degree(&data.polytope)?;
    provenance.insert(
        "degree".to_string(),
        if deg.dilation == 1 {
            "2|P°∩M| − 6 = boundary area".to_string()
        } else {
            format!("boundary area of {}·P° / {}", deg.dilation, deg.dilation * deg.dilation)
        },
    );
    let b2 = if data.method == Method::SmoothDecompositions {
        provenance.insert("b2".to_string(), "gamma".to_string());
        Some(gamma::b2(data)?)
    } else if let Some(b) = known.b2 {
        provenance.insert("b2".to_string(), "paper".to_string());
        Some(b)
    } else {
        None
    };
    let b3 = match b2 {
        Some(b) => Some(b3_from(euler.euler, b)?),
        None => None,
    };
    let rank_above_one = b2.filter(|&b| b != 1);
    let index = match fano_index(data) {
        Ok(fi) if fi.method != IndexMethod::Gluing && rank_above_one.is_some() => {
            provenance.insert(
                "index".to_string(),
                format!("unavailable: {} needs b2 = 1", fi.method.name()),
            );
            None
        }
        Err(Error::InconsistentInvariants(_)) if rank_above_one.is_some() => {
            provenance.insert("index".to_string(), "unavailable: b2 above one".to_string());
            None
        }
        Ok(fi) => {
            provenance.insert("index".to_string(), fi.method.name().to_string());
            Some(fi.index)
        }
        Err(e @ (Error::NotRankOne(_) | Error::Unsupported(_))) => {
            provenance.insert("index".to_string(), format!("unavailable: {}", e));
            None
        }
        Err(e) => return Err(e),
    };
    Ok(InvariantReport {
        name: data.name.clone(),
        degree: deg.degree,
        p: euler.census.p,
        n: euler.census.n,
        euler: euler.euler,
        b2,
        b3,
        index,
        d: euler.census.d,
        boundary: euler.census.boundary,
        vertices,
        p1c1: p1c1_expected(deg.degree),
        method: data.method,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneration::{method1_default, method3_data};

    fn simplex() -> LatticePolytope {
        LatticePolytope::from_i64(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]).unwrap()
    }

    fn cube() -> LatticePolytope {
        let mut pts = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-1, 1] {
                    pts.push([x, y, z]);
                }
            }
        }
        LatticePolytope::from_i64(&pts).unwrap()
    }

    #[test]
    fn projective_space_row() {
        let data = method1_default("P3", &simplex()).unwrap();
        let r = analyze(&data, &KnownValues::default()).unwrap();
        assert_eq!((r.degree, r.p, r.n, r.euler), (64, 4, 24, 4));
        assert_eq!((r.b2, r.b3, r.index), (Some(1), Some(0), Some(4)));
        assert_eq!(r.boundary, 24);
        assert_eq!(r.p1c1, 16);
        assert_eq!(euler_smooth_mink(&data).unwrap(), 4);
    }

    #[test]
    fn cube_row() {
        let data = method1_default("V8", &cube()).unwrap();
        let r = analyze(&data, &KnownValues::default()).unwrap();
        assert_eq!((r.degree, r.p, r.n, r.euler), (8, 0, 48, -24));
        assert_eq!(r.b2, Some(1));
        assert_eq!(r.b3, Some(28));
        // the (2,2,2) complete intersection in ℙ⁶ has index 7 − 6 = 1
        assert_eq!(r.index, Some(1));
    }

    #[test]
    fn octahedron_is_the_quadric_cone_side() {
        // P = octahedron, P° = cube: the degree of ℙ¹×ℙ¹×ℙ¹ is 48
        let p = LatticePolytope::from_i64(&[
            [1, 0, 0],
            [-1, 0, 0],
            [0, 1, 0],
            [0, -1, 0],
            [0, 0, 1],
            [0, 0, -1],
        ])
        .unwrap();
        let deg = degree(&p).unwrap();
        assert_eq!(deg.degree, 48);
        let data = method1_default("P1^3", &p).unwrap();
        // index of (ℙ¹)³ is 2: every facet of the cube has edge length 2
        assert_eq!(fano_index(&data).unwrap().index, 2);
    }

    #[test]
    fn products_by_two_routes() {
        let cases: [(&[[i64; 2]], i64, i64); 3] = [
            (&[[1, 0], [0, 1], [-1, 0], [0, -1]], 16, 4),
            (&[[1, 0], [0, 1], [-1, -1]], 18, 3),
            (&[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]], 12, 6),
        ];
        for (verts, euler, dp) in cases {
            let q = Polygon::from_i64(verts);
            let closed = euler_product(&q).unwrap();
            assert_eq!(closed.euler, euler);
            assert_eq!(closed.del_pezzo_degree, dp);
            let data = method3_data("prod", &q).unwrap();
            let r = analyze(&data, &KnownValues::default()).unwrap();
            assert_eq!((r.p, r.n, r.euler), (0, 0, euler));
            assert_eq!(r.index, None);
        }
    }

    #[test]
    fn product_closed_form_needs_an_integral_polar() {
        let q = Polygon::from_i64(&[[1, 0], [0, 1], [-1, -3]]);
        assert!(matches!(euler_product(&q), Err(Error::NotIntegral(_))));
    }

    #[test]
    fn b3_relation() {
        assert_eq!(b3_from(-16, 2).unwrap(), 22);
        assert_eq!(b3_from(4, 1).unwrap(), 0);
        assert_eq!(b3_from(-100, 1).unwrap(), 104);
        assert!(matches!(b3_from(10, 1), Err(Error::InconsistentInvariants(_))));
        assert!(matches!(b3_from(-3, 1), Err(Error::InconsistentInvariants(_))));
    }

    #[test]
    fn p1c1_arithmetic() {
        assert_eq!(p1c1_expected(64), 16);
        assert_eq!(p1c1_expected(24), -24);
        assert_eq!(p1c1_expected(2), -46);
    }

    #[test]
    fn cube_divisors() {
        assert_eq!(cube_root_divisor(8), 2);
        assert_eq!(cube_root_divisor(24), 2);
        assert_eq!(cube_root_divisor(64), 4);
        assert_eq!(cube_root_divisor(2), 1);
        assert_eq!(cube_root_divisor(54), 3);
    }
}

//! Degeneration data `(Σ, C, J)` on a Fano polytope `P`: edge labels on
//! `P°`, ray data made of standard-simplex summands, the slabs cut out of
//! `P°` by the two-cones of `Σ` with their polygons of sections, and the
//! validity and smoothness checks.

use crate::error::{Error, Result};
use crate::fan::{cone_contains, GeneralizedFan};
use crate::linalg::{
    coordinates, det2_int, dot_int, gcd_all, int, integer_kernel, is_zero_int, neg_int, pair, primitive,
    primitive_from_rat, rat_from_int, sub_int, to_int_vec, to_rat_vec, Int, IntMatrix, IntVector,
    Rat, RatVector,
};
use crate::minkowski::{minkowski_sum, enumerate_smooth_decompositions, MinkowskiDecomposition, Summand};
use crate::polygon::{div_floor, Polygon};
use crate::polytope::{gorenstein_index, LatticePolytope, PlaneChart};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// How a dataset was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Normal fan of `P`, labels `ℓ(E★)`, and smooth Minkowski
    /// decompositions of the facets of `P`.
    SmoothDecompositions,
    /// `P° = Q × [−1, 1]` with the product of the fan of `Q` and a line.
    Product,
    /// Fan, labels and ray data supplied explicitly.
    Explicit,
}

/// Labels `a_E` on edges of `P°`, keyed by edge index. Unlabelled edges
/// carry zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeData {
    labels: BTreeMap<usize, Int>,
}

impl EdgeData {
    pub fn new() -> EdgeData {
        EdgeData::default()
    }

    pub fn set(&mut self, edge: usize, label: Int) {
        self.labels.insert(edge, label);
    }

    pub fn get(&self, edge: usize) -> Int {
        self.labels.get(&edge).cloned().unwrap_or_else(Int::zero)
    }

    pub fn labels(&self) -> impl Iterator<Item = (usize, &Int)> {
        self.labels.iter().map(|(e, a)| (*e, a))
    }
}

/// A basis of the annihilator `ρ^⊥ ⊂ N` of a ray.
pub fn perp_basis(ray: &[Int]) -> [IntVector; 2] {
    let k = integer_kernel(&IntMatrix::from_rows(vec![ray.to_vec()], 3));
    [k[0].clone(), k[1].clone()]
}

/// The ray data at one distinguished ray `ρ`: summands written in a basis of
/// `ρ^⊥`, so that `m ∈ M/ρ` pairs with them through [`RayEntry::project`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayEntry {
    pub basis: [IntVector; 2],
    pub summands: Vec<Summand>,
}

impl RayEntry {
    /// The entry `{0}`.
    pub fn trivial(ray: &[Int]) -> RayEntry {
        RayEntry {
            basis: perp_basis(ray),
            summands: vec![Summand::Point],
        }
    }

    /// An entry from summands given by their vertices in `N`; each summand
    /// must lie in a translate of `ρ^⊥`.
    pub fn from_vertices(ray: &[Int], pieces: &[Vec<IntVector>]) -> Result<RayEntry> {
        let basis = perp_basis(ray);
        let mut entry = RayEntry {
            basis,
            summands: Vec::new(),
        };
        for piece in pieces {
            let local: Vec<IntVector> = piece
                .iter()
                .map(|p| entry.local(&sub_int(p, &piece[0])))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Validation("summand not parallel to the ray's annihilator".into()))?;
            entry.summands.push(summand_from_local(&local)?);
        }
        Ok(entry)
    }

    /// Coordinates `(⟨m, b₀⟩, ⟨m, b₁⟩)` of the image of `m` in `M/ρ`.
    pub fn project(&self, m: &[Int]) -> IntVector {
        vec![dot_int(m, &self.basis[0]), dot_int(m, &self.basis[1])]
    }

    /// Coordinates of a vector of `ρ^⊥` in the basis.
    pub fn local(&self, v: &[Int]) -> Option<IntVector> {
        let b = [to_rat_vec(&self.basis[0]), to_rat_vec(&self.basis[1])];
        coordinates(&to_rat_vec(v), &b).and_then(|c| to_int_vec(&c))
    }

    /// The Minkowski sum `P_{L_ρ}` of the summands.
    pub fn sum(&self) -> Polygon {
        minkowski_sum(&self.summands)
    }

    pub fn triangles(&self) -> usize {
        self.summands.iter().filter(|s| s.is_triangle()).count()
    }

    pub fn segments(&self) -> usize {
        self.summands.iter().filter(|s| s.is_segment()).count()
    }
}

/// The standard simplex with the given vertices in plane coordinates.
pub fn summand_from_local(pts: &[IntVector]) -> Result<Summand> {
    match pts.len() {
        1 => Ok(Summand::Point),
        2 => {
            let d = sub_int(&pts[1], &pts[0]);
            if gcd_all(&d) != Int::one() {
                return Err(Error::Validation("segment summand is not primitive".into()));
            }
            Ok(Summand::segment(&d))
        }
        3 => {
            let a = sub_int(&pts[1], &pts[0]);
            let b = sub_int(&pts[2], &pts[1]);
            let c = sub_int(&pts[0], &pts[2]);
            let det = det2_int(&a, &b);
            if det.abs() != Int::one() {
                return Err(Error::Validation("triangle summand is not unimodular".into()));
            }
            if det.is_negative() {
                // clockwise input: the counterclockwise edge vectors are the negatives
                let (a, b, c) = (neg_int(&a), neg_int(&b), neg_int(&c));
                return Ok(Summand::triangle(&a, &b, &c));
            }
            Ok(Summand::triangle(&a, &b, &c))
        }
        _ => Err(Error::Validation("summands have one, two or three vertices".into())),
    }
}

/// Ray data: one entry per distinguished ray of the fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayData {
    pub entries: Vec<RayEntry>,
}

impl RayData {
    /// Number of two-dimensional summands.
    pub fn triangles(&self) -> usize {
        self.entries.iter().map(|e| e.triangles()).sum()
    }

    /// Number of one-dimensional summands.
    pub fn segments(&self) -> usize {
        self.entries.iter().map(|e| e.segments()).sum()
    }
}

/// Where an edge of a slab polygon `c` lies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SlabEdgeKind {
    /// Along a distinguished ray of a pointed fan.
    Ray { ray: usize },
    /// Along the minimal line of a line fan.
    Line,
    /// On the boundary of `P°`, inside the edge `edge` of `P°` when given,
    /// otherwise across a facet.
    Boundary { edge: Option<usize> },
}

/// An edge of a slab polygon with its divisor coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlabEdge {
    pub kind: SlabEdgeKind,
    /// Endpoints in `M_ℚ`, counterclockwise in the slab chart.
    pub points: [RatVector; 2],
    /// Primitive inner normal in the dual of the slab lattice.
    pub normal: IntVector,
    pub coefficient: Int,
    /// Lattice length of the face of `P_D` dual to this edge.
    pub section_length: Int,
}

/// A slab `(c, D)`: `c = τ ∩ P°` for a two-cone `τ`, with the divisor `D`
/// and its polygon of sections `P_D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slab {
    pub cone: usize,
    pub chart: PlaneChart,
    /// The polygon `c` in chart coordinates.
    pub polygon: Polygon,
    pub edges: Vec<SlabEdge>,
    /// `P_D = {m : ⟨m, u_F⟩ ≥ −a_F}`.
    pub sections: Polygon,
    /// The lattice points `m_v` cutting out `D` on the cone of each vertex
    /// of `c`.
    pub witnesses: Vec<IntVector>,
    pub twice_area: Int,
    /// Lattice perimeter of `P_D`; a segment counts both of its sides.
    pub boundary: Int,
    /// `(2A − b + 2)/2`, the interior point count for a genuine polygon.
    pub interior: Int,
}

impl Slab {
    /// The polygon `c` as points of `M_ℚ`.
    pub fn global_vertices(&self) -> Vec<RatVector> {
        self.polygon
            .vertices()
            .iter()
            .map(|v| self.chart.global(v))
            .collect()
    }
}

/// A failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub subject: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.subject, self.message)
    }
}

fn violation(subject: impl Into<String>, message: impl Into<String>) -> Violation {
    Violation {
        subject: subject.into(),
        message: message.into(),
    }
}

fn fmt_point(x: &[Rat]) -> String {
    let parts: Vec<String> = x.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

/// A validated-on-construction triple `(Σ, C, J)` with its slabs.
#[derive(Clone, Debug)]
pub struct DegenerationData {
    pub name: String,
    pub method: Method,
    pub polytope: LatticePolytope,
    pub dual: LatticePolytope,
    pub fan: GeneralizedFan,
    pub edge_data: EdgeData,
    pub ray_data: RayData,
    pub slabs: Vec<Slab>,
}

fn parallel_to(x: &[Rat], l: &[Int]) -> bool {
    if x.iter().all(|c| c.is_zero()) {
        return true;
    }
    let xi = primitive_from_rat(x);
    is_zero_int(&crate::linalg::cross_int(&xi, l))
}

fn on_closed_ray(x: &[Rat], r: &[Int]) -> bool {
    cone_contains(&[r.to_vec()], x)
}

fn edge_contains(dual: &LatticePolytope, e: usize, x: &[Rat]) -> bool {
    dual.edges()[e]
        .facets
        .iter()
        .all(|&f| pair(&dual.facets()[f].normal, x) == dual.facets()[f].level)
}

fn primitive_ineq(n: IntVector, level: Rat) -> (IntVector, Rat) {
    let g = gcd_all(&n);
    let gr = rat_from_int(&g);
    (n.iter().map(|x| x / &g).collect(), level / gr)
}

fn to_int(x: &Rat, what: &str) -> Result<Int> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::NotIntegral(format!("{} = {}", what, x)))
    }
}

fn build_slab(
    dual: &LatticePolytope,
    fan: &GeneralizedFan,
    edge_data: &EdgeData,
    tau: usize,
) -> Result<Slab> {
    let [a, b] = fan.plane_of(tau);
    let chart = PlaneChart::linear(&to_rat_vec(&a), &to_rat_vec(&b))?;
    let local = |v: &IntVector| -> IntVector {
        to_int_vec(&chart.local(&to_rat_vec(v)).expect("generator lies in its plane"))
            .expect("saturated chart")
    };
    let mut ineqs: Vec<(IntVector, Rat)> = Vec::new();
    for f in dual.facets() {
        let n = chart.pull_functional(&f.normal);
        if !is_zero_int(&n) {
            ineqs.push(primitive_ineq(n, f.level.clone()));
        }
    }
    let cone = &fan.two_cones()[tau];
    match fan.lineality() {
        Some(l) => {
            let u = local(l);
            let g = local(&cone.generators[0]);
            let mut w = vec![-u[1].clone(), u[0].clone()];
            if dot_int(&w, &g).is_negative() {
                w = w.iter().map(|x| -x).collect();
            }
            ineqs.push(primitive_ineq(w, Rat::zero()));
        }
        None => {
            let mut u1 = local(&cone.generators[0]);
            let mut u2 = local(&cone.generators[1]);
            if det2_int(&u1, &u2).is_negative() {
                std::mem::swap(&mut u1, &mut u2);
            }
            ineqs.push(primitive_ineq(vec![-u1[1].clone(), u1[0].clone()], Rat::zero()));
            ineqs.push(primitive_ineq(vec![u2[1].clone(), -u2[0].clone()], Rat::zero()));
        }
    }
    let polygon = Polygon::from_inequalities(&ineqs)
        .filter(|p| p.dimension() == 2)
        .ok_or_else(|| Error::InvalidFan(format!("two-cone {} meets P° in a degenerate set", tau)))?;

    let mut edges = Vec::new();
    for (p, q) in polygon.edges() {
        let d = crate::linalg::sub_rat(&q, &p);
        let normal = primitive_from_rat(&[-d[1].clone(), d[0].clone()]);
        let (gp, gq) = (chart.global(&p), chart.global(&q));
        let kind = if fan
            .lineality()
            .map(|l| parallel_to(&gp, l) && parallel_to(&gq, l))
            .unwrap_or(false)
        {
            SlabEdgeKind::Line
        } else if let Some(k) = (0..fan.rays().len())
            .find(|&k| fan.is_pointed() && on_closed_ray(&gp, &fan.rays()[k]) && on_closed_ray(&gq, &fan.rays()[k]))
        {
            SlabEdgeKind::Ray { ray: k }
        } else {
            let edge = (0..dual.edges().len())
                .find(|&e| edge_contains(dual, e, &gp) && edge_contains(dual, e, &gq));
            SlabEdgeKind::Boundary { edge }
        };
        let coefficient = match kind {
            SlabEdgeKind::Boundary { edge: Some(e) } => edge_data.get(e),
            _ => Int::zero(),
        };
        edges.push(SlabEdge {
            kind,
            points: [gp, gq],
            normal,
            coefficient,
            section_length: Int::zero(),
        });
    }

    let section_ineqs: Vec<(IntVector, Rat)> = edges
        .iter()
        .map(|e| (e.normal.clone(), -rat_from_int(&e.coefficient)))
        .collect();
    let sections =
        Polygon::from_inequalities(&section_ineqs).ok_or(Error::EmptyLinearSystem(tau))?;

    // the vertex between edges k and k+1 gives the witness m_v
    let k = edges.len();
    let mut witnesses = Vec::with_capacity(k);
    for i in 0..k {
        let (f, g) = (&edges[i], &edges[(i + 1) % k]);
        let det = det2_int(&f.normal, &g.normal);
        let d = rat_from_int(&det);
        let (bf, bg) = (-rat_from_int(&f.coefficient), -rat_from_int(&g.coefficient));
        let x = (&bf * rat_from_int(&g.normal[1]) - &bg * rat_from_int(&f.normal[1])) / &d;
        let y = (&bg * rat_from_int(&f.normal[0]) - &bf * rat_from_int(&g.normal[0])) / &d;
        let m = vec![x, y];
        if !section_ineqs.iter().all(|(n, c)| pair(n, &m) >= *c) {
            return Err(Error::NotNef(tau));
        }
        witnesses.push(to_int_vec(&m).ok_or(Error::NotCartier(tau))?);
    }
    if !sections.is_integral() {
        return Err(Error::NotBasepointFree(tau));
    }

    let mut boundary = Int::zero();
    for e in edges.iter_mut() {
        e.section_length = to_int(&sections.face_length(&e.normal), "section face length")?;
        boundary += &e.section_length;
    }
    let twice_area = to_int(&sections.normalized_area(), "normalized area")?;
    let interior = (&twice_area - &boundary + int(2)) / int(2);
    if sections.dimension() == 2 {
        let (_, i, b) = sections.point_counts();
        if Int::from(i) != interior || Int::from(b) != boundary {
            return Err(Error::FormulaMismatch(format!(
                "slab {}: lattice counts ({}, {}) disagree with Pick ({}, {})",
                tau, i, b, interior, boundary
            )));
        }
    }
    Ok(Slab {
        cone: tau,
        chart,
        polygon,
        edges,
        sections,
        witnesses,
        twice_area,
        boundary,
        interior,
    })
}

impl DegenerationData {
    /// Assembles the data and computes every slab. Fails if some slab divisor
    /// is not nef, not Cartier, not basepoint free, or has no sections.
    pub fn new(
        name: impl Into<String>,
        method: Method,
        polytope: LatticePolytope,
        fan: GeneralizedFan,
        edge_data: EdgeData,
        ray_data: RayData,
    ) -> Result<DegenerationData> {
        let dual = polytope.polar_dual()?;
        if ray_data.entries.len() != fan.rays().len() {
            return Err(Error::Validation(format!(
                "ray data has {} entries for {} distinguished rays",
                ray_data.entries.len(),
                fan.rays().len()
            )));
        }
        for (k, entry) in ray_data.entries.iter().enumerate() {
            for b in &entry.basis {
                if !dot_int(b, &fan.rays()[k]).is_zero() {
                    return Err(Error::Validation(format!(
                        "ray data basis at ray {} does not annihilate the ray",
                        k
                    )));
                }
            }
        }
        let slabs = (0..fan.two_cones().len())
            .into_par_iter()
            .map(|t| build_slab(&dual, &fan, &edge_data, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(DegenerationData {
            name: name.into(),
            method,
            polytope,
            dual,
            fan,
            edge_data,
            ray_data,
            slabs,
        })
    }

    /// Number of positive nodes `p` (two-dimensional summands).
    pub fn triangle_count(&self) -> usize {
        self.ray_data.triangles()
    }

    /// Number of one-dimensional summands `d`.
    pub fn segment_count(&self) -> usize {
        self.ray_data.segments()
    }

    /// Edges of `P°` contained in some two-cone.
    pub fn edges_in_two_cones(&self) -> Vec<usize> {
        (0..self.dual.edges().len())
            .filter(|&e| self.edge_in_cone(e).is_some())
            .collect()
    }

    /// A two-cone containing edge `e` of `P°`.
    pub fn edge_in_cone(&self, e: usize) -> Option<usize> {
        let [p, q] = self.dual.edge_points(e);
        (0..self.fan.two_cones().len()).find(|&t| {
            let c = &self.fan.two_cones()[t];
            self.fan.contains(c, &p) && self.fan.contains(c, &q)
        })
    }

    fn dual_edge_ints(&self, e: usize) -> Result<Vec<IntVector>> {
        let de = self
            .dual
            .dual_edge(e, &self.polytope)
            .ok_or_else(|| Error::Validation(format!("edge {} of P° has no dual edge", e)))?;
        self.polytope
            .edge_points(de)
            .iter()
            .map(|p| to_int_vec(p).ok_or_else(|| Error::NotIntegral("P is not integral".into())))
            .collect()
    }

    /// Lattice length `ℓ(E★)` of the edge of `P` dual to edge `e` of `P°`.
    pub fn dual_edge_length(&self, e: usize) -> Result<Int> {
        let pts = self.dual_edge_ints(e)?;
        Ok(gcd_all(&sub_int(&pts[1], &pts[0])))
    }

    /// Gorenstein index `r(E★)`.
    pub fn dual_edge_gorenstein(&self, e: usize) -> Result<Int> {
        gorenstein_index(&self.dual_edge_ints(e)?)
    }

    /// The largest admissible label `⌊ℓ(E★)/r(E★)⌋`.
    pub fn edge_bound(&self, e: usize) -> Result<Int> {
        Ok(div_floor(&self.dual_edge_length(e)?, &self.dual_edge_gorenstein(e)?))
    }

    /// The point where distinguished ray `k` leaves `P°`.
    pub fn ray_exit_point(&self, k: usize) -> RatVector {
        let r = &self.fan.rays()[k];
        let t = self
            .dual
            .facets()
            .iter()
            .filter_map(|f| {
                let s = dot_int(&f.normal, r);
                if s.is_negative() {
                    Some(&f.level / rat_from_int(&s))
                } else {
                    None
                }
            })
            .min()
            .expect("origin is interior");
        r.iter().map(|x| rat_from_int(x) * &t).collect()
    }

    /// Gorenstein index `r(F★)` for the minimal face `F` of `P°` meeting
    /// distinguished ray `k`.
    pub fn ray_face_gorenstein(&self, k: usize) -> Result<Int> {
        let x = self.ray_exit_point(k);
        let verts: Vec<IntVector> = self
            .dual
            .facets()
            .iter()
            .filter(|f| pair(&f.normal, &x) == f.level)
            .map(|f| {
                let s = -f.level.clone();
                let v: RatVector = f.normal.iter().map(|c| rat_from_int(c) / &s).collect();
                to_int_vec(&v).ok_or_else(|| Error::NotIntegral("P is not integral".into()))
            })
            .collect::<Result<_>>()?;
        gorenstein_index(&verts)
    }

    /// `ℓ_{C,ρ}(τ)`: the label of the edge of `P°` inside `τ` meeting ray
    /// `k`, or zero.
    pub fn label_at(&self, tau: usize, k: usize) -> Int {
        let cone = &self.fan.two_cones()[tau];
        let r = &self.fan.rays()[k];
        for e in 0..self.dual.edges().len() {
            let [p, q] = self.dual.edge_points(e);
            if !(self.fan.contains(cone, &p) && self.fan.contains(cone, &q)) {
                continue;
            }
            if on_closed_ray(&p, r) || on_closed_ray(&q, r) {
                return self.edge_data.get(e);
            }
        }
        Int::zero()
    }

    /// Runs the structural checks and fails on the first violation.
    pub fn validate(&self) -> Result<()> {
        if let Some(v) = check_convexity(self).into_iter().next() {
            return Err(Error::Validation(v.to_string()));
        }
        let compat = check_compatibility(self);
        if let Some(v) = compat.iter().find(|v| v.message.starts_with("unmatched")) {
            return Err(Error::UnmatchedSummandDirection(v.to_string()));
        }
        if let Some(v) = compat.into_iter().next() {
            return Err(Error::Compatibility(v.to_string()));
        }
        if let Some(v) = check_stubs(self).into_iter().next() {
            return Err(Error::Compatibility(v.to_string()));
        }
        Ok(())
    }
}

/// Labels must be non-negative, at most `⌊ℓ(E★)/r(E★)⌋`, and only on
/// edges inside two-cones.
pub fn check_convexity(data: &DegenerationData) -> Vec<Violation> {
    let mut out = Vec::new();
    for (e, a) in data.edge_data.labels() {
        let subject = format!("edge {}", e);
        if a.is_zero() {
            continue;
        }
        if data.edge_in_cone(e).is_none() {
            out.push(violation(subject, "label on an edge outside every two-cone"));
            continue;
        }
        if a.is_negative() {
            out.push(violation(subject, format!("negative label {}", a)));
            continue;
        }
        match data.edge_bound(e) {
            Ok(bound) if *a > bound => out.push(violation(
                subject,
                format!("label {} exceeds the bound {}", a, bound),
            )),
            Ok(_) => {}
            Err(err) => out.push(violation(subject, err.to_string())),
        }
    }
    out
}

/// Smooth edge data: `a_E ∈ {ℓ(E★) − 1, ℓ(E★)}` when `r(E★) = 1`, and
/// `a_E = ⌊ℓ(E★)/r(E★)⌋` otherwise, for every edge inside a two-cone.
pub fn check_smooth_edge_data(data: &DegenerationData) -> Vec<Violation> {
    let mut out = Vec::new();
    for e in data.edges_in_two_cones() {
        let a = data.edge_data.get(e);
        let subject = format!("edge {}", e);
        let (bound, r) = match (data.edge_bound(e), data.dual_edge_gorenstein(e)) {
            (Ok(b), Ok(r)) => (b, r),
            (Err(err), _) | (_, Err(err)) => {
                out.push(violation(subject, err.to_string()));
                continue;
            }
        };
        let ok = if r.is_one() {
            a == bound || a == &bound - 1
        } else {
            a == bound
        };
        if !ok {
            out.push(violation(
                subject,
                format!("label {} is not smooth (bound {}, r = {})", a, bound, r),
            ));
        }
    }
    out
}

/// Compatibility of `C` and `J`: at each distinguished ray `ρ` and each
/// two-cone `τ ⊇ ρ`, the edge of `P_{L_ρ}` in the direction of `τ/ρ` has
/// length `ℓ_{C,ρ}(τ)/r(F★)`; every summand edge must point along some
/// `τ/ρ`.
pub fn check_compatibility(data: &DegenerationData) -> Vec<Violation> {
    let mut out = Vec::new();
    for (k, entry) in data.ray_data.entries.iter().enumerate() {
        let subject = format!("ray {}", k);
        let r = match data.ray_face_gorenstein(k) {
            Ok(r) => r,
            Err(err) => {
                out.push(violation(subject, err.to_string()));
                continue;
            }
        };
        let cones = data.fan.cones_containing_ray(k);
        let directions: Vec<IntVector> = cones
            .iter()
            .map(|&t| primitive(&entry.project(&data.fan.quotient_generator(t, k))))
            .collect();
        for (i, &t) in cones.iter().enumerate() {
            let label = rat_from_int(&data.label_at(t, k));
            let expected = label / rat_from_int(&r);
            let got: Rat = entry
                .summands
                .iter()
                .map(|s| s.face_length(&directions[i]))
                .sum();
            if got != expected {
                out.push(violation(
                    format!("ray {} / two-cone {}", k, t),
                    format!("summands give edge length {}, labels require {}", got, expected),
                ));
            }
        }
        for s in &entry.summands {
            for e in s.edge_vectors() {
                let inner = primitive(&[-e[1].clone(), e[0].clone()]);
                if !directions.contains(&inner) {
                    out.push(violation(
                        subject.clone(),
                        format!("unmatched summand direction {:?}", e),
                    ));
                }
            }
        }
    }
    out
}

/// Slab-side compatibility: the face of `P_D` dual to an edge of `c` along
/// a distinguished ray has as many lattice segments as the summands at that
/// ray have edges in the direction of the slab.
pub fn check_stubs(data: &DegenerationData) -> Vec<Violation> {
    let mut out = Vec::new();
    for slab in &data.slabs {
        for edge in &slab.edges {
            let rays: Vec<usize> = match edge.kind {
                SlabEdgeKind::Ray { ray } => vec![ray],
                SlabEdgeKind::Line => (0..data.fan.rays().len()).collect(),
                SlabEdgeKind::Boundary { .. } => continue,
            };
            let mut expected = Rat::zero();
            for k in rays {
                let entry = &data.ray_data.entries[k];
                let g = primitive(&entry.project(&data.fan.quotient_generator(slab.cone, k)));
                for s in &entry.summands {
                    expected += s.face_length(&g);
                }
            }
            if expected != rat_from_int(&edge.section_length) {
                out.push(violation(
                    format!("slab {}", slab.cone),
                    format!(
                        "{} boundary segments of P_D along {:?}, summands supply {}",
                        edge.section_length, edge.kind, expected
                    ),
                ));
            }
        }
    }
    out
}

/// Classification of a vertex `v` of `P°`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexClass {
    pub vertex: usize,
    /// Dimension of the smallest cone of `Σ` containing `v`.
    pub cone_dim: usize,
    /// Whether `v` stays a corner of the boundary of the affine manifold.
    pub corner: bool,
}

/// Outcome of the smoothness check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessReport {
    pub violations: Vec<Violation>,
    /// Vertex conditions waived for explicit data: a vertex in a two-cone
    /// whose cone over `v★` is not a Gorenstein Cayley sum.
    #[serde(default)]
    pub relaxed: Vec<Violation>,
    pub vertices: Vec<VertexClass>,
}

impl SmoothnessReport {
    pub fn is_smooth(&self) -> bool {
        self.violations.is_empty()
    }

    /// The number of corners of the boundary.
    pub fn corner_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.corner).count()
    }
}

fn count_vectors(vs: &[IntVector]) -> BTreeMap<IntVector, i64> {
    let mut m = BTreeMap::new();
    for v in vs {
        *m.entry(v.clone()).or_insert(0) += 1;
    }
    m
}

/// Dimension of the standard simplex with the given boundary word, if it is
/// one.
fn standard_simplex_dim(edges: &[IntVector]) -> Option<usize> {
    match edges.len() {
        0 => Some(0),
        2 if edges[0].iter().zip(&edges[1]).all(|(a, b)| (a + b).is_zero()) => Some(1),
        3 if det2_int(&edges[0], &edges[1]).abs().is_one() => Some(2),
        _ => None,
    }
}

impl DegenerationData {
    fn vertex_star(&self, v: usize) -> Result<Vec<IntVector>> {
        let f = self
            .dual
            .dual_facet_of_vertex(v, &self.polytope)
            .ok_or_else(|| Error::Validation(format!("vertex {} of P° has no dual facet", v)))?;
        self.polytope.facets()[f]
            .vertices
            .iter()
            .map(|&w| {
                to_int_vec(self.polytope.vertex(w))
                    .ok_or_else(|| Error::NotIntegral("P is not integral".into()))
            })
            .collect()
    }

    fn classify_on_ray(&self, v: usize, k: usize) -> std::result::Result<bool, String> {
        let star = self.vertex_star(v).map_err(|e| e.to_string())?;
        let r = gorenstein_index(&star).map_err(|e| e.to_string())?;
        let entry = &self.ray_data.entries[k];
        let local: Vec<IntVector> = star
            .iter()
            .map(|w| entry.local(&sub_int(w, &star[0])))
            .collect::<Option<_>>()
            .ok_or("dual facet is not parallel to the ray's annihilator")?;
        let star_poly = Polygon::from_int_points(&local);
        let mut counts = count_vectors(&star_poly.edge_vector_multiset());
        let r_i64: i64 = r.to_string().parse().map_err(|_| "huge Gorenstein index")?;
        for (w, c) in count_vectors(&entry.sum().edge_vector_multiset()) {
            *counts.entry(w).or_insert(0) -= r_i64 * c;
        }
        if counts.values().any(|&c| c < 0) {
            return Err(format!("v★ is not r(v★)·P_L + S with r = {}", r));
        }
        let mut residual: Vec<IntVector> = Vec::new();
        for (w, c) in counts {
            for _ in 0..c {
                residual.push(w.clone());
            }
        }
        // boundary word in counterclockwise order for the determinant test
        residual.sort_by(|a, b| angle_order(a, b));
        let dim = standard_simplex_dim(&residual)
            .ok_or_else(|| format!("residual summand with edges {:?} is not a standard simplex", residual))?;
        if dim > 0 && !r.is_one() {
            return Err(format!("S_v has dimension {} but r(v★) = {}", dim, r));
        }
        Ok(dim == 2)
    }

    fn classify_on_two_cone(&self, v: usize, tau: usize) -> std::result::Result<bool, String> {
        let star = self.vertex_star(v).map_err(|e| e.to_string())?;
        let r = gorenstein_index(&star).map_err(|e| e.to_string())?;
        if !r.is_one() {
            return Err(format!("cone over v★ is not Gorenstein (r = {})", r));
        }
        let slab = &self.slabs[tau];
        let proj: Vec<RatVector> = star
            .iter()
            .map(|w| to_rat_vec(&slab.chart.pull_functional(w)))
            .collect();
        let hull = Polygon::hull(&proj);
        if hull.dimension() != 1
            || crate::polygon::segment_lattice_length(&hull.vertices()[0], &hull.vertices()[1])
                != Rat::one()
        {
            return Err("v★ is not a Cayley sum of two segments along τ".into());
        }
        let x = self.dual.vertex(v);
        let mut sides = Vec::new();
        for e in &slab.edges {
            if e.points[0] != *x && e.points[1] != *x {
                continue;
            }
            match e.kind {
                SlabEdgeKind::Boundary { edge: Some(pe) } => {
                    let bound = self.edge_bound(pe).map_err(|e| e.to_string())?;
                    sides.push(Some((self.edge_data.get(pe), bound)));
                }
                _ => sides.push(None),
            }
        }
        if sides.len() != 2 {
            return Err(format!("{} slab edges at the vertex", sides.len()));
        }
        // the label conditions are read on the deficits ℓ − a, which vanish on
        // sides that are not edges of P°
        let deficit = |s: &Option<(Int, Int)>| {
            s.as_ref()
                .map(|(a, bound)| bound - a)
                .unwrap_or_else(Int::zero)
        };
        let (d1, d2) = (deficit(&sides[0]), deficit(&sides[1]));
        if (&d1 - &d2).abs() > Int::one() {
            return Err("label deficits on the two sides differ by more than one".into());
        }
        if sides.iter().all(|s| s.is_some()) && d1.is_positive() && d2.is_positive() {
            return Err("neither side carries its maximal label".into());
        }
        let deficits = [d1, d2].iter().filter(|d| d.is_positive()).count();
        Ok(deficits == 1)
    }

    fn classify_in_chamber(&self, v: usize) -> std::result::Result<bool, String> {
        let star = self.vertex_star(v).map_err(|e| e.to_string())?;
        if star.len() != 3 || !crate::linalg::det3_int(&star[0], &star[1], &star[2]).abs().is_one() {
            return Err("cone over v★ is not smooth".into());
        }
        Ok(true)
    }
}

fn angle_order(a: &[Int], b: &[Int]) -> std::cmp::Ordering {
    let half = |v: &[Int]| -> u8 {
        if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
            0
        } else {
            1
        }
    };
    half(a)
        .cmp(&half(b))
        .then_with(|| Int::zero().cmp(&det2_int(a, b)))
}

/// Smooth degeneration data: smooth edge and ray data plus the conditions at
/// each vertex of `P°`, classified by the dimension of its minimal cone.
pub fn check_smooth_data(data: &DegenerationData) -> SmoothnessReport {
    let mut report = SmoothnessReport {
        violations: check_smooth_edge_data(data),
        relaxed: Vec::new(),
        vertices: Vec::new(),
    };
    for (k, entry) in data.ray_data.entries.iter().enumerate() {
        for s in &entry.summands {
            let ok = match s {
                Summand::Point => true,
                Summand::Segment { direction } => gcd_all(direction).is_one(),
                Summand::Triangle { edges } => det2_int(&edges[0], &edges[1]).abs().is_one(),
            };
            if !ok {
                report
                    .violations
                    .push(violation(format!("ray {}", k), "summand is not a standard simplex"));
            }
        }
    }
    for v in 0..data.dual.vertices().len() {
        let x = data.dual.vertex(v);
        let dim = data.fan.minimal_cone_dim(x);
        let verdict = match dim {
            1 => {
                let k = data.fan.ray_through(x).expect("vertex on a distinguished ray");
                data.classify_on_ray(v, k)
            }
            2 => {
                let t = data.fan.two_cone_through(x).expect("vertex in a two-cone");
                data.classify_on_two_cone(v, t)
            }
            _ => data.classify_in_chamber(v),
        };
        let corner = match verdict {
            Ok(c) => c,
            Err(msg) => {
                let entry = violation(format!("vertex {} {}", v, fmt_point(x)), msg);
                if dim == 2 && data.method == Method::Explicit {
                    report.relaxed.push(entry);
                } else {
                    report.violations.push(entry);
                }
                false
            }
        };
        report.vertices.push(VertexClass {
            vertex: v,
            cone_dim: dim,
            corner,
        });
    }
    report
}

/// Smooth decompositions of every facet of `P`, in facet order.
pub fn facet_decompositions(p: &LatticePolytope) -> Result<Vec<Vec<MinkowskiDecomposition>>> {
    (0..p.facets().len())
        .map(|f| {
            let d = enumerate_smooth_decompositions(&p.facet_polygon(f)?);
            if d.is_empty() {
                Err(Error::NoSmoothDecomposition(f))
            } else {
                Ok(d)
            }
        })
        .collect()
}

/// Data from smooth Minkowski decompositions of the facets of a reflexive
/// polytope: `Σ` the normal fan, `a_E = ℓ(E★)` and `J(ρ_v)` the chosen
/// decomposition of `v★`. `choice[f]` decomposes facet `f` of `P`, written in
/// the coordinates of [`LatticePolytope::facet_chart`].
pub fn method1_data(
    name: impl Into<String>,
    p: &LatticePolytope,
    choice: &[MinkowskiDecomposition],
) -> Result<DegenerationData> {
    if !p.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    if choice.len() != p.facets().len() {
        return Err(Error::Validation(format!(
            "{} decompositions for {} facets",
            choice.len(),
            p.facets().len()
        )));
    }
    let dual = p.polar_dual()?;
    let fan = GeneralizedFan::normal_fan(p)?;
    let mut entries = Vec::with_capacity(dual.vertices().len());
    for v in 0..dual.vertices().len() {
        let f = dual
            .dual_facet_of_vertex(v, p)
            .ok_or_else(|| Error::Validation(format!("vertex {} of P° has no dual facet", v)))?;
        if choice[f].sum() != p.facet_polygon(f)?.normalize_translation() {
            return Err(Error::Validation(format!(
                "chosen decomposition does not sum to facet {}",
                f
            )));
        }
        entries.push(RayEntry {
            basis: p.facet_chart(f)?.basis,
            summands: choice[f].summands.clone(),
        });
    }
    let mut data = DegenerationData::new(
        name,
        Method::SmoothDecompositions,
        p.clone(),
        fan,
        EdgeData::new(),
        RayData { entries },
    )?;
    let mut edge_data = EdgeData::new();
    for e in 0..data.dual.edges().len() {
        if !data.dual_edge_gorenstein(e)?.is_one() {
            return Err(Error::Unsupported(format!(
                "edge {} of P° has a dual edge with Gorenstein index above one",
                e
            )));
        }
        edge_data.set(e, data.dual_edge_length(e)?);
    }
    data = DegenerationData::new(
        data.name,
        data.method,
        data.polytope,
        data.fan,
        edge_data,
        data.ray_data,
    )?;
    Ok(data)
}

/// [`method1_data`] with the first decomposition of every facet.
pub fn method1_default(name: impl Into<String>, p: &LatticePolytope) -> Result<DegenerationData> {
    let choice: Vec<MinkowskiDecomposition> = facet_decompositions(p)?
        .into_iter()
        .map(|mut d| d.swap_remove(0))
        .collect();
    method1_data(name, p, &choice)
}

/// Product data over a Fano polygon `Q`: `P° = Q × [−1, 1]`, the fan of `Q`
/// times the vertical line, vertical edges `E_v` labelled
/// `⌊ℓ(v★)/r(v★)⌋`, and trivial ray data.
pub fn method3_data(name: impl Into<String>, q: &Polygon) -> Result<DegenerationData> {
    if q.dimension() != 2 || !q.is_integral() {
        return Err(Error::Validation("base must be a two-dimensional lattice polygon".into()));
    }
    let zero = vec![Rat::zero(), Rat::zero()];
    if !q.contains(&zero) || q.is_boundary_point(&zero) {
        return Err(Error::OriginNotInterior);
    }
    let base = q.int_vertices().expect("integral");
    if base.iter().any(|v| !gcd_all(v).is_one()) {
        return Err(Error::Validation("base polygon has non-primitive vertices".into()));
    }
    let mut pts = Vec::new();
    for v in &base {
        for z in [-1, 1] {
            pts.push(vec![v[0].clone(), v[1].clone(), int(z)]);
        }
    }
    let dual = LatticePolytope::from_int_points(&pts)?;
    let p = dual.polar_dual()?;
    let lifts: Vec<IntVector> = base
        .iter()
        .map(|v| vec![v[0].clone(), v[1].clone(), Int::zero()])
        .collect();
    let fan = GeneralizedFan::line_fan(&[int(0), int(0), int(1)], &lifts)?;
    let entries = fan.rays().iter().map(|r| RayEntry::trivial(r)).collect();
    let data = DegenerationData::new(
        name,
        Method::Product,
        p,
        fan,
        EdgeData::new(),
        RayData { entries },
    )?;
    let mut edge_data = EdgeData::new();
    for e in 0..data.dual.edges().len() {
        let [a, b] = data.dual.edge_points(e);
        if a[0] == b[0] && a[1] == b[1] {
            edge_data.set(e, data.edge_bound(e)?);
        }
    }
    DegenerationData::new(
        data.name,
        data.method,
        data.polytope,
        data.fan,
        edge_data,
        data.ray_data,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{ivec, rat};

    fn p3() -> LatticePolytope {
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

    fn octahedron() -> LatticePolytope {
        LatticePolytope::from_i64(&[
            [1, 0, 0],
            [-1, 0, 0],
            [0, 1, 0],
            [0, -1, 0],
            [0, 0, 1],
            [0, 0, -1],
        ])
        .unwrap()
    }

    /// The cubic surface model: `P = conv{(0,0,1), (−1,−1,−1), (−1,2,−1),
    /// (2,−1,−1)}` with the plane fan of a triangle times the vertical line.
    fn cubic() -> DegenerationData {
        let p = LatticePolytope::from_i64(&[[0, 0, 1], [-1, -1, -1], [-1, 2, -1], [2, -1, -1]])
            .unwrap();
        let fan = GeneralizedFan::line_fan(
            &ivec(&[0, 0, 1]),
            &[ivec(&[1, 0, 0]), ivec(&[0, 1, 0]), ivec(&[-1, -1, 0])],
        )
        .unwrap();
        let dual = p.polar_dual().unwrap();
        let mut edge_data = EdgeData::new();
        let top = vec![rat(0, 1), rat(0, 1), rat(1, 1)];
        for e in 0..dual.edges().len() {
            let [a, b] = dual.edge_points(e);
            if a == top || b == top {
                edge_data.set(e, int(3));
            }
        }
        let tri = |a: [i64; 3], b: [i64; 3], c: [i64; 3]| vec![ivec(&a), ivec(&b), ivec(&c)];
        let plus = RayEntry::from_vertices(
            &ivec(&[0, 0, 1]),
            &vec![tri([0, 0, 0], [1, 0, 0], [0, 1, 0]); 3],
        )
        .unwrap();
        let minus = RayEntry::trivial(&ivec(&[0, 0, -1]));
        DegenerationData::new(
            "cubic",
            Method::Explicit,
            p,
            fan,
            edge_data,
            RayData {
                entries: vec![plus, minus],
            },
        )
        .unwrap()
    }

    fn v2() -> DegenerationData {
        let p = LatticePolytope::from_i64(&[[-1, -1, -1], [5, -1, -1], [-1, 5, -1], [-1, -1, 5]])
            .unwrap();
        let fan = GeneralizedFan::normal_fan(&p).unwrap();
        let dual = p.polar_dual().unwrap();
        let mut edge_data = EdgeData::new();
        for e in 0..dual.edges().len() {
            edge_data.set(e, int(6));
        }
        let mut entries = Vec::new();
        for r in fan.rays() {
            let sum = r.iter().fold(Int::zero(), |s, x| s + x);
            let piece: Vec<IntVector> = if sum.is_negative() {
                vec![ivec(&[0, 0, 0]), ivec(&[-1, 1, 0]), ivec(&[-1, 0, 1])]
            } else {
                let mut pts = vec![ivec(&[0, 0, 0])];
                for j in 0..3 {
                    if r[j].is_zero() {
                        let mut e = ivec(&[0, 0, 0]);
                        e[j] = int(1);
                        pts.push(e);
                    }
                }
                pts
            };
            let count = if sum.is_negative() { 2 } else { 6 };
            entries.push(RayEntry::from_vertices(r, &vec![piece; count]).unwrap());
        }
        DegenerationData::new("V2", Method::Explicit, p, fan, edge_data, RayData { entries }).unwrap()
    }

    #[test]
    fn method1_simplex() {
        let data = method1_default("P3", &p3()).unwrap();
        assert_eq!(data.triangle_count(), 4);
        assert_eq!(data.slabs.len(), 6);
        for e in 0..6 {
            assert_eq!(data.edge_data.get(e), int(1));
        }
        data.validate().unwrap();
        assert!(check_smooth_data(&data).is_smooth());
        assert_eq!(check_smooth_data(&data).corner_count(), 0);
        let n: Int = data.slabs.iter().map(|s| s.twice_area.clone()).sum();
        assert_eq!(n, int(24));
    }

    #[test]
    fn method1_cube_and_octahedron() {
        let data = method1_default("V8", &cube()).unwrap();
        assert_eq!(data.segment_count(), 24);
        assert_eq!(data.triangle_count(), 0);
        for (_, a) in data.edge_data.labels() {
            assert_eq!(*a, int(2));
        }
        data.validate().unwrap();
        assert!(check_smooth_data(&data).is_smooth());
        let oct = method1_default("oct", &octahedron()).unwrap();
        assert_eq!(oct.triangle_count(), 8);
        oct.validate().unwrap();
        assert!(check_smooth_data(&oct).is_smooth());
    }

    #[test]
    fn cubic_slabs_are_triple_triangles() {
        let data = cubic();
        data.validate().unwrap();
        assert_eq!(data.slabs.len(), 3);
        for s in &data.slabs {
            assert_eq!(s.twice_area, int(9));
            assert_eq!(s.interior, int(1));
            assert_eq!(s.boundary, int(9));
        }
        let report = check_smooth_data(&data);
        assert!(report.is_smooth(), "{:?} {:?}", report, data.dual.vertices());
    }

    #[test]
    fn v2_slabs() {
        let data = v2();
        data.validate().unwrap();
        let mut areas: Vec<(Int, Int)> = data
            .slabs
            .iter()
            .map(|s| (s.twice_area.clone(), s.interior.clone()))
            .collect();
        areas.sort();
        assert_eq!(
            areas,
            vec![
                (int(12), int(2)),
                (int(12), int(2)),
                (int(12), int(2)),
                (int(36), int(10)),
                (int(36), int(10)),
                (int(36), int(10))
            ]
        );
        let small = data.slabs.iter().find(|s| s.twice_area == int(12)).unwrap();
        let target = Polygon::from_i64(&[[0, 0], [6, 0], [0, 2]]);
        assert_eq!(
            crate::minkowski::edge_vector_multiset(&small.sections).len(),
            crate::minkowski::edge_vector_multiset(&target).len()
        );
    }

    #[test]
    fn products_label_vertical_edges() {
        let diamond = Polygon::from_i64(&[[1, 0], [0, 1], [-1, 0], [0, -1]]);
        let triangle = Polygon::from_i64(&[[1, 0], [0, 1], [-1, -1]]);
        let hexagon = Polygon::from_i64(&[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]]);
        for (q, label) in [(diamond, 2), (triangle, 3), (hexagon, 1)] {
            let data = method3_data("product", &q).unwrap();
            data.validate().unwrap();
            let labels: Vec<Int> = data.edge_data.labels().map(|(_, a)| a.clone()).collect();
            assert_eq!(labels.len(), q.vertices().len());
            assert!(labels.iter().all(|a| *a == int(label)));
            assert!(check_smooth_data(&data).is_smooth());
            for s in &data.slabs {
                assert_eq!(s.sections.dimension(), 1);
                assert_eq!(s.boundary, int(2 * label));
            }
        }
    }

    #[test]
    fn edge_label_boundaries() {
        let data = method1_default("P3", &p3()).unwrap();
        let rebuild = |a: i64| {
            let mut edge_data = data.edge_data.clone();
            edge_data.set(0, int(a));
            DegenerationData::new(
                "P3",
                Method::Explicit,
                data.polytope.clone(),
                data.fan.clone(),
                edge_data,
                data.ray_data.clone(),
            )
        };
        let lowered = rebuild(0).unwrap();
        assert!(check_smooth_edge_data(&lowered).is_empty());
        // a negative label leaves an empty or non-nef linear system
        match rebuild(-1) {
            Ok(d) => assert!(!check_convexity(&d).is_empty()),
            Err(_) => {}
        }
        match rebuild(2) {
            Ok(d) => assert!(!check_convexity(&d).is_empty()),
            Err(_) => {}
        }
    }

    #[test]
    fn wrong_ray_data_is_rejected() {
        let p = LatticePolytope::from_i64(&[
            [1, 0, 1],
            [1, 1, 1],
            [0, 1, 1],
            [-1, 0, 1],
            [-1, -1, 1],
            [0, -1, 1],
            [0, 0, -1],
        ])
        .unwrap();
        assert!(p.is_reflexive());
        let data = method1_default("hex", &p).unwrap();
        data.validate().unwrap();
        let mut ray_data = data.ray_data.clone();
        let k = ray_data
            .entries
            .iter()
            .position(|e| e.summands.len() >= 2)
            .expect("a hexagon facet");
        ray_data.entries[k].summands.truncate(1);
        let broken = DegenerationData::new(
            "hex",
            Method::Explicit,
            data.polytope.clone(),
            data.fan.clone(),
            data.edge_data.clone(),
            ray_data,
        )
        .unwrap();
        assert!(!check_compatibility(&broken).is_empty());
        assert!(!check_smooth_data(&broken).is_smooth());
        assert!(broken.validate().is_err());
    }
}

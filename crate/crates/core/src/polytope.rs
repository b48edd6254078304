//! Lattice polytopes of rank 2 and 3: exact hulls, face lattices, polar
//! duality, lattice lengths, Gorenstein indices and lattice point counts.

use crate::error::{Error, Result};
use crate::linalg::{
    coordinates, cross_rat, det3_rat, gcd_all, int, integer_kernel, is_integral,
    lattice_basis_of_span, pair, primitive_from_rat, rat_from_int, saturate, sub_rat, to_int_vec,
    to_rat_vec, Int, IntMatrix, IntVector, Rat, RatMatrix, RatVector,
};
use crate::polygon::{int_bounding_box, segment_lattice_length, sort_ccw, Polygon};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

/// A facet: primitive inner normal `n` with `⟨n, x⟩ ≥ level` on the polytope
/// and equality on the facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: IntVector,
    pub level: Rat,
    /// Vertex indices; in rank 3 in cyclic order around the facet.
    pub vertices: Vec<usize>,
}

/// An edge: its two vertex indices (ascending) and the facets containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub vertices: [usize; 2],
    pub facets: Vec<usize>,
}

/// A convex polytope with rational vertices in a lattice of rank 2 or 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    rank: usize,
    vertices: Vec<RatVector>,
    facets: Vec<Facet>,
    edges: Vec<Edge>,
}

/// An affine chart of a plane in ℚ³: `x = origin + s·b₀ + t·b₁` where
/// `b₀, b₁` form a basis of the saturated direction lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneChart {
    pub origin: RatVector,
    pub basis: [IntVector; 2],
}

impl PlaneChart {
    /// Chart of the affine plane through `points` (at least three, not
    /// collinear), based at the first point.
    pub fn through(points: &[RatVector]) -> Result<PlaneChart> {
        let origin = points[0].clone();
        let dirs: Vec<RatVector> = points[1..].iter().map(|p| sub_rat(p, &origin)).collect();
        let basis = lattice_basis_of_span(&dirs, 3);
        if basis.len() != 2 {
            return Err(Error::NotFullDimensional(
                "points do not span a plane".into(),
            ));
        }
        Ok(PlaneChart {
            origin,
            basis: [basis[0].clone(), basis[1].clone()],
        })
    }

    /// Chart of the linear plane spanned by two independent vectors.
    pub fn linear(a: &[Rat], b: &[Rat]) -> Result<PlaneChart> {
        let mut chart = PlaneChart::through(&[vec![Rat::zero(); 3], a.to_vec(), b.to_vec()])?;
        chart.origin = vec![Rat::zero(); 3];
        Ok(chart)
    }

    /// Local coordinates of a point of the plane.
    pub fn local(&self, x: &[Rat]) -> Result<RatVector> {
        let basis = [to_rat_vec(&self.basis[0]), to_rat_vec(&self.basis[1])];
        coordinates(&sub_rat(x, &self.origin), &basis).ok_or(Error::NotInSpan)
    }

    pub fn global(&self, c: &[Rat]) -> RatVector {
        (0..3)
            .map(|k| {
                &self.origin[k]
                    + &c[0] * rat_from_int(&self.basis[0][k])
                    + &c[1] * rat_from_int(&self.basis[1][k])
            })
            .collect()
    }

    /// Pulls a functional on ℤ³ back to local coordinates.
    pub fn pull_functional(&self, u: &[Int]) -> IntVector {
        vec![
            crate::linalg::dot_int(u, &self.basis[0]),
            crate::linalg::dot_int(u, &self.basis[1]),
        ]
    }

    /// The convex hull of points of the plane, in local coordinates.
    pub fn polygon_of(&self, points: &[RatVector]) -> Result<Polygon> {
        let local: Result<Vec<RatVector>> = points.iter().map(|p| self.local(p)).collect();
        Ok(Polygon::hull(&local?))
    }
}

fn normalize_plane(normal: &[Rat], through: &[Rat]) -> (IntVector, Rat) {
    let n = primitive_from_rat(normal);
    let level = pair(&n, through);
    (n, level)
}

impl LatticePolytope {
    /// Convex hull of a finite set of points spanning ℚ² or ℚ³.
    pub fn convex_hull(points: &[RatVector]) -> Result<LatticePolytope> {
        if points.is_empty() {
            return Err(Error::NotFullDimensional("no points".into()));
        }
        let rank = points[0].len();
        if rank != 2 && rank != 3 {
            return Err(Error::NotFullDimensional(format!(
                "ambient rank {rank} is not 2 or 3"
            )));
        }
        let mut pts: Vec<RatVector> = points.to_vec();
        pts.sort();
        pts.dedup();
        let diffs: Vec<RatVector> = pts[1..].iter().map(|p| sub_rat(p, &pts[0])).collect();
        let r = if diffs.is_empty() {
            0
        } else {
            RatMatrix::from_rows(diffs, rank).rank()
        };
        if r < rank {
            return Err(Error::NotFullDimensional(format!(
                "points span an affine space of dimension {r}"
            )));
        }
        if rank == 2 {
            return Ok(Self::hull2(&pts));
        }
        Ok(Self::hull3(&pts))
    }

    pub fn from_i64(points: &[[i64; 3]]) -> Result<LatticePolytope> {
        let pts: Vec<RatVector> = points
            .iter()
            .map(|p| p.iter().map(|&x| Rat::from_integer(int(x))).collect())
            .collect();
        Self::convex_hull(&pts)
    }

    pub fn from_int_points(points: &[IntVector]) -> Result<LatticePolytope> {
        Self::convex_hull(&points.iter().map(|p| to_rat_vec(p)).collect::<Vec<_>>())
    }

    fn hull2(pts: &[RatVector]) -> LatticePolytope {
        let poly = Polygon::hull(pts);
        let mut vertices = poly.vertices().to_vec();
        vertices.sort();
        let index = |v: &RatVector| vertices.iter().position(|w| w == v).unwrap();
        let mut facets: Vec<Facet> = poly
            .edges()
            .iter()
            .zip(poly.inner_normals())
            .map(|((a, b), (normal, level))| {
                let mut vs = vec![index(a), index(b)];
                vs.sort();
                Facet {
                    normal,
                    level,
                    vertices: vs,
                }
            })
            .collect();
        facets.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        let edges = facets
            .iter()
            .enumerate()
            .map(|(i, f)| Edge {
                vertices: [f.vertices[0], f.vertices[1]],
                facets: vec![i],
            })
            .collect();
        LatticePolytope {
            rank: 2,
            vertices,
            facets,
            edges,
        }
    }

    fn hull3(pts: &[RatVector]) -> LatticePolytope {
        let m = pts.len();
        let mut planes: BTreeSet<(IntVector, Rat)> = BTreeSet::new();
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    let normal = cross_rat(&sub_rat(&pts[j], &pts[i]), &sub_rat(&pts[k], &pts[i]));
                    if normal.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    let (n, level) = normalize_plane(&normal, &pts[i]);
                    if planes.contains(&(n.clone(), level.clone())) {
                        continue;
                    }
                    let neg: IntVector = n.iter().map(|x| -x).collect();
                    if planes.contains(&(neg.clone(), -level.clone())) {
                        continue;
                    }
                    let vals: Vec<Rat> = pts.iter().map(|p| pair(&n, p)).collect();
                    if vals.iter().all(|v| *v >= level) {
                        planes.insert((n, level));
                    } else if vals.iter().all(|v| *v <= level) {
                        planes.insert((neg, -level));
                    }
                }
            }
        }
        let planes: Vec<(IntVector, Rat)> = planes.into_iter().collect();
        // extreme points: incident facet normals of full rank
        let mut vertices: Vec<RatVector> = pts
            .iter()
            .filter(|p| {
                let inc: Vec<RatVector> = planes
                    .iter()
                    .filter(|(n, l)| pair(n, p) == *l)
                    .map(|(n, _)| to_rat_vec(n))
                    .collect();
                !inc.is_empty() && RatMatrix::from_rows(inc, 3).rank() == 3
            })
            .cloned()
            .collect();
        vertices.sort();
        let mut facets: Vec<Facet> = planes
            .into_iter()
            .map(|(normal, level)| {
                let mut vs: Vec<usize> = (0..vertices.len())
                    .filter(|&i| pair(&normal, &vertices[i]) == level)
                    .collect();
                order_facet_vertices(&mut vs, &vertices, &normal);
                Facet {
                    normal,
                    level,
                    vertices: vs,
                }
            })
            .collect();
        facets.sort_by(|a, b| {
            let mut x = a.vertices.clone();
            let mut y = b.vertices.clone();
            x.sort();
            y.sort();
            x.cmp(&y)
        });
        let mut edges = Vec::new();
        for f in 0..facets.len() {
            for g in f + 1..facets.len() {
                let common: Vec<usize> = facets[f]
                    .vertices
                    .iter()
                    .filter(|v| facets[g].vertices.contains(v))
                    .copied()
                    .collect();
                if common.len() >= 2 {
                    let mut vs = [common[0], common[1]];
                    vs.sort();
                    edges.push(Edge {
                        vertices: vs,
                        facets: vec![f, g],
                    });
                }
            }
        }
        edges.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        LatticePolytope {
            rank: 3,
            vertices,
            facets,
            edges,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &RatVector {
        &self.vertices[i]
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(|v| is_integral(v))
    }

    pub fn int_vertices(&self) -> Result<Vec<IntVector>> {
        self.vertices
            .iter()
            .map(|v| to_int_vec(v).ok_or_else(|| Error::NotIntegral(format!("{v:?}"))))
            .collect()
    }

    /// Whether the origin lies in the interior.
    pub fn origin_is_interior(&self) -> bool {
        self.facets.iter().all(|f| f.level.is_negative())
    }

    /// Whether `self` is Fano: integral, primitive vertices, origin interior.
    pub fn is_fano(&self) -> bool {
        self.origin_is_interior()
            && self
                .vertices
                .iter()
                .all(|v| to_int_vec(v).is_some_and(|w| gcd_all(&w) == int(1)))
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.facets.iter().all(|f| pair(&f.normal, x) >= f.level)
    }

    pub fn is_boundary_point(&self, x: &[Rat]) -> bool {
        self.contains(x) && self.facets.iter().any(|f| pair(&f.normal, x) == f.level)
    }

    /// The polar `{u : ⟨u, v⟩ ≥ −1 for all v}`.
    pub fn polar_dual(&self) -> Result<LatticePolytope> {
        if !self.origin_is_interior() {
            return Err(Error::OriginNotInterior);
        }
        let pts: Vec<RatVector> = self
            .facets
            .iter()
            .map(|f| {
                let s = -f.level.clone();
                f.normal.iter().map(|x| rat_from_int(x) / &s).collect()
            })
            .collect();
        Self::convex_hull(&pts)
    }

    /// Reflexive: origin interior and both the polytope and its polar are
    /// integral.
    pub fn is_reflexive(&self) -> bool {
        self.is_integral()
            && self
                .polar_dual()
                .map(|d| d.is_integral())
                .unwrap_or(false)
    }

    /// Vertex indices of `dual` forming the face dual to the face of `self`
    /// with the given vertex indices: those `w` with `⟨w, x⟩ = −1` on the face.
    pub fn dual_face(&self, face: &[usize], dual: &LatticePolytope) -> Vec<usize> {
        let minus_one = Rat::from_integer(int(-1));
        (0..dual.vertices.len())
            .filter(|&w| {
                face.iter().all(|&x| {
                    crate::linalg::dot_rat(&dual.vertices[w], &self.vertices[x]) == minus_one
                })
            })
            .collect()
    }

    /// Index of the edge of `dual` dual to edge `e` of `self` (rank 3).
    pub fn dual_edge(&self, e: usize, dual: &LatticePolytope) -> Option<usize> {
        let vs = self.dual_face(&self.edges[e].vertices, dual);
        if vs.len() != 2 {
            return None;
        }
        dual.edge_index(vs[0], vs[1])
    }

    /// Index of the facet of `dual` dual to vertex `v` of `self`.
    pub fn dual_facet_of_vertex(&self, v: usize, dual: &LatticePolytope) -> Option<usize> {
        let mut vs = self.dual_face(&[v], dual);
        vs.sort();
        dual.facets.iter().position(|f| {
            let mut w = f.vertices.clone();
            w.sort();
            w == vs
        })
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a < b { [a, b] } else { [b, a] };
        self.edges.iter().position(|e| e.vertices == key)
    }

    /// Lattice length of an edge; rational for rational edges.
    pub fn edge_length(&self, e: usize) -> Rat {
        let [a, b] = self.edges[e].vertices;
        segment_lattice_length(&self.vertices[a], &self.vertices[b])
    }

    /// Primitive direction of an edge, pointing from its first to second vertex.
    pub fn edge_direction(&self, e: usize) -> IntVector {
        let [a, b] = self.edges[e].vertices;
        primitive_from_rat(&sub_rat(&self.vertices[b], &self.vertices[a]))
    }

    pub fn edge_points(&self, e: usize) -> [RatVector; 2] {
        let [a, b] = self.edges[e].vertices;
        [self.vertices[a].clone(), self.vertices[b].clone()]
    }

    /// Facets containing a vertex.
    pub fn facets_of_vertex(&self, v: usize) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&f| self.facets[f].vertices.contains(&v))
            .collect()
    }

    /// Edges containing a vertex.
    pub fn edges_of_vertex(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| self.edges[e].vertices.contains(&v))
            .collect()
    }

    /// Intrinsic chart of a facet of a rank-3 polytope, based at its first
    /// vertex.
    pub fn facet_chart(&self, f: usize) -> Result<PlaneChart> {
        let pts: Vec<RatVector> = self.facets[f]
            .vertices
            .iter()
            .map(|&v| self.vertices[v].clone())
            .collect();
        PlaneChart::through(&pts)
    }

    /// A facet of a rank-3 polytope as a polygon in intrinsic coordinates.
    pub fn facet_polygon(&self, f: usize) -> Result<Polygon> {
        let chart = self.facet_chart(f)?;
        let pts: Vec<RatVector> = self.facets[f]
            .vertices
            .iter()
            .map(|&v| self.vertices[v].clone())
            .collect();
        chart.polygon_of(&pts)
    }

    /// All lattice points, by bounding-box scan and membership test.
    pub fn lattice_points(&self) -> Result<Vec<IntVector>> {
        if !self.is_integral() {
            return Err(Error::NotIntegral(
                "lattice point counts need an integral polytope; dilate first".into(),
            ));
        }
        let (lo, hi) = int_bounding_box(&self.vertices);
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            if self.contains(&to_rat_vec(&cur)) {
                out.push(cur.clone());
            }
            // odometer increment
            let mut k = 0;
            loop {
                if k == self.rank {
                    return Ok(out);
                }
                cur[k] += 1;
                if cur[k] <= hi[k] {
                    break;
                }
                cur[k] = lo[k].clone();
                k += 1;
            }
        }
    }

    /// (total, interior, boundary) lattice point counts.
    pub fn point_counts(&self) -> Result<(usize, usize, usize)> {
        let pts = self.lattice_points()?;
        let boundary = pts
            .iter()
            .filter(|p| self.is_boundary_point(&to_rat_vec(p)))
            .count();
        Ok((pts.len(), pts.len() - boundary, boundary))
    }

    /// The dilation `k·P`.
    pub fn dilate(&self, k: &Int) -> LatticePolytope {
        let kr = rat_from_int(k);
        Self::convex_hull(
            &self
                .vertices
                .iter()
                .map(|v| v.iter().map(|x| x * &kr).collect())
                .collect::<Vec<_>>(),
        )
        .expect("dilation of a full-dimensional polytope")
    }

    /// Least `k > 0` with `k·P` integral.
    pub fn denominator(&self) -> Int {
        let mut k = int(1);
        for v in &self.vertices {
            for x in v {
                k = num_integer::Integer::lcm(&k, x.denom());
            }
        }
        k
    }

    /// Sum over facets of their normalized areas in intrinsic lattice
    /// coordinates (rank 3).
    pub fn boundary_normalized_area(&self) -> Result<Rat> {
        let mut total = Rat::zero();
        for f in 0..self.facets.len() {
            total += self.facet_polygon(f)?.normalized_area();
        }
        Ok(total)
    }

    /// Normalized volume `rank! · vol` by coning the facets from a vertex.
    pub fn normalized_volume(&self) -> Rat {
        let apex = &self.vertices[0];
        let mut total = Rat::zero();
        if self.rank == 2 {
            return Polygon::hull(&self.vertices).normalized_area();
        }
        for f in &self.facets {
            if f.vertices.contains(&0) {
                continue;
            }
            let vs = &f.vertices;
            for i in 1..vs.len() - 1 {
                let a = sub_rat(&self.vertices[vs[0]], apex);
                let b = sub_rat(&self.vertices[vs[i]], apex);
                let c = sub_rat(&self.vertices[vs[i + 1]], apex);
                total += det3_rat(&a, &b, &c).abs();
            }
        }
        total
    }

    /// `Σ_E ℓ(E)·ℓ(E★)` over the edges of the polar of a reflexive polytope.
    pub fn identity24(&self) -> Result<Int> {
        if !self.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        let dual = self.polar_dual()?;
        let mut total = Rat::zero();
        for e in 0..dual.edges.len() {
            let star = dual
                .dual_edge(e, self)
                .ok_or_else(|| Error::InvalidFan("edge without dual edge".into()))?;
            total += dual.edge_length(e) * self.edge_length(star);
        }
        Ok(total.to_integer())
    }
}

/// Orders a facet's vertex indices cyclically (counterclockwise seen from
/// the side the inner normal points away from).
fn order_facet_vertices(vs: &mut Vec<usize>, vertices: &[RatVector], normal: &[Int]) {
    if vs.len() < 3 {
        return;
    }
    let pts: Vec<RatVector> = vs.iter().map(|&i| vertices[i].clone()).collect();
    let chart = match PlaneChart::through(&pts) {
        Ok(c) => c,
        Err(_) => return,
    };
    let mut local: Vec<(RatVector, usize)> = vs
        .iter()
        .map(|&i| (chart.local(&vertices[i]).unwrap(), i))
        .collect();
    let mut coords: Vec<RatVector> = local.iter().map(|(c, _)| c.clone()).collect();
    sort_ccw(&mut coords);
    local.sort_by_key(|(c, _)| coords.iter().position(|d| d == c).unwrap());
    // orientation of the chart relative to the outer normal
    let b0 = to_rat_vec(&chart.basis[0]);
    let b1 = to_rat_vec(&chart.basis[1]);
    let outer: RatVector = normal.iter().map(|x| -rat_from_int(x)).collect();
    let orient = crate::linalg::dot_rat(&cross_rat(&b0, &b1), &outer);
    *vs = local.into_iter().map(|(_, i)| i).collect();
    if orient.is_negative() {
        vs.reverse();
    }
}

/// Gorenstein index of the cone over an integral face `Q` (given by its
/// vertices): `|⟨u, Q⟩|` for the primitive functional `u` on the saturated
/// lattice spanned by `Q` that is constant on `Q`.
pub fn gorenstein_index(face: &[IntVector]) -> Result<Int> {
    let n = face[0].len();
    let lattice = saturate(face, n);
    let mut diffs = Vec::new();
    for p in &face[1..] {
        diffs.push(crate::linalg::sub_int(p, &face[0]));
    }
    let affine_dim = if diffs.is_empty() {
        0
    } else {
        RatMatrix::from_rows(diffs.iter().map(|d| to_rat_vec(d)).collect(), n).rank()
    };
    if lattice.len() != affine_dim + 1 {
        return Err(Error::NotStrictlyConvex);
    }
    let basis: Vec<RatVector> = lattice.iter().map(|b| to_rat_vec(b)).collect();
    let local: Vec<IntVector> = face
        .iter()
        .map(|p| {
            let c = coordinates(&to_rat_vec(p), &basis).expect("face lies in its span");
            to_int_vec(&c).expect("saturated coordinates are integral")
        })
        .collect();
    let k = lattice.len();
    let rows: Vec<IntVector> = local[1..]
        .iter()
        .map(|p| crate::linalg::sub_int(p, &local[0]))
        .collect();
    let u = if rows.is_empty() {
        vec![int(1)]
    } else {
        let ker = integer_kernel(&IntMatrix::from_rows(rows, k));
        if ker.len() != 1 {
            return Err(Error::NotStrictlyConvex);
        }
        ker[0].clone()
    };
    let value = crate::linalg::dot_int(&u, &local[0]);
    if value.is_zero() {
        return Err(Error::NotStrictlyConvex);
    }
    Ok(value.abs())
}

/// Normalized area `2A` of an integral polygon from Pick's theorem.
pub fn pick_area(polygon: &Polygon) -> Result<Int> {
    polygon
        .pick_area()
        .ok_or_else(|| Error::NotIntegral("Pick's theorem needs an integral polygon".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{ivec, rat};
    use proptest::prelude::*;

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

    fn rv(v: &[(i64, i64)]) -> RatVector {
        v.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    #[test]
    fn simplex_face_counts() {
        let p = p3();
        assert_eq!(
            (p.vertices().len(), p.edges().len(), p.facets().len()),
            (4, 6, 4)
        );
    }

    #[test]
    fn cube_center_is_discarded() {
        let mut pts = vec![[0, 0, 0]];
        for x in [0, 1] {
            for y in [0, 1] {
                for z in [0, 1] {
                    pts.push([x, y, z]);
                }
            }
        }
        let c = LatticePolytope::from_i64(&pts).unwrap();
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.facets().len(), 6);
    }

    #[test]
    fn octahedron_faces() {
        let o = octahedron();
        assert_eq!(o.edges().len(), 12);
        assert_eq!(o.facets().len(), 8);
    }

    #[test]
    fn flat_input_is_rejected() {
        let e = LatticePolytope::from_i64(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]]);
        assert!(matches!(e, Err(Error::NotFullDimensional(_))));
    }

    #[test]
    fn polar_of_simplex() {
        let d = p3().polar_dual().unwrap();
        let expect = LatticePolytope::from_i64(&[
            [-1, -1, -1],
            [3, -1, -1],
            [-1, 3, -1],
            [-1, -1, 3],
        ])
        .unwrap();
        assert_eq!(d.vertices(), expect.vertices());
    }

    #[test]
    fn polar_of_octahedron_is_cube() {
        assert_eq!(octahedron().polar_dual().unwrap().vertices(), cube().vertices());
    }

    #[test]
    fn polar_with_rational_vertex() {
        let p = LatticePolytope::from_i64(&[[0, 0, 1], [-1, -1, -1], [-1, 5, -1], [5, -1, -1]])
            .unwrap();
        let d = p.polar_dual().unwrap();
        assert!(d
            .vertices()
            .contains(&rv(&[(-1, 2), (-1, 2), (-1, 1)])));
        assert!(!d.is_integral());
    }

    #[test]
    fn origin_outside_is_rejected() {
        let p = LatticePolytope::from_i64(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(p.polar_dual(), Err(Error::OriginNotInterior));
    }

    #[test]
    fn reflexivity() {
        assert!(p3().is_reflexive());
        let v2 = LatticePolytope::from_i64(&[
            [-1, -1, -1],
            [5, -1, -1],
            [-1, 5, -1],
            [-1, -1, 5],
        ])
        .unwrap();
        assert!(v2.is_fano());
        assert!(!v2.is_reflexive());
    }

    #[test]
    fn simplex_edge_dual_has_length_four() {
        let p = p3();
        let d = p.polar_dual().unwrap();
        let a = p.vertices().iter().position(|v| *v == rv(&[(1, 1), (0, 1), (0, 1)])).unwrap();
        let b = p.vertices().iter().position(|v| *v == rv(&[(0, 1), (1, 1), (0, 1)])).unwrap();
        let e = p.edge_index(a, b).unwrap();
        let star = p.dual_edge(e, &d).unwrap();
        assert_eq!(p.edge_length(e), rat(1, 1));
        assert_eq!(d.edge_length(star), rat(4, 1));
    }

    #[test]
    fn gorenstein_examples() {
        assert_eq!(gorenstein_index(&[ivec(&[2, -1]), ivec(&[-1, 2])]).unwrap(), int(1));
        assert_eq!(gorenstein_index(&[ivec(&[1, 1]), ivec(&[-1, 1])]).unwrap(), int(1));
        assert_eq!(gorenstein_index(&[ivec(&[2, 0]), ivec(&[2, 1])]).unwrap(), int(2));
        assert_eq!(
            gorenstein_index(&[ivec(&[1, 0, 2]), ivec(&[0, 1, 2]), ivec(&[0, 0, 2])]).unwrap(),
            int(2)
        );
        assert_eq!(
            gorenstein_index(&[ivec(&[1, 0]), ivec(&[-1, 0])]),
            Err(Error::NotStrictlyConvex)
        );
    }

    #[test]
    fn reflexive_edges_have_unit_index() {
        let p = p3();
        for e in 0..p.edges().len() {
            let pts = p.edge_points(e);
            let face: Vec<IntVector> = pts.iter().map(|x| to_int_vec(x).unwrap()).collect();
            assert_eq!(gorenstein_index(&face).unwrap(), int(1));
        }
    }

    #[test]
    fn lattice_point_counts() {
        let d = p3().polar_dual().unwrap();
        assert_eq!(d.point_counts().unwrap().0, 35);
        assert_eq!(d.point_counts().unwrap().1, 1);
        let cubic = LatticePolytope::from_i64(&[[0, 0, 1], [-2, -2, -1], [2, 0, -1], [0, 2, -1]])
            .unwrap();
        assert_eq!(cubic.point_counts().unwrap().0, 15);
    }

    #[test]
    fn dilated_polar_of_v2() {
        let v2 = LatticePolytope::from_i64(&[
            [-1, -1, -1],
            [5, -1, -1],
            [-1, 5, -1],
            [-1, -1, 5],
        ])
        .unwrap();
        let d = v2.polar_dual().unwrap();
        assert!(matches!(d.lattice_points(), Err(Error::NotIntegral(_))));
        assert_eq!(d.denominator(), int(3));
        let d3 = d.dilate(&int(3));
        assert_eq!(d3.point_counts().unwrap().2, 11);
        assert_eq!(d3.boundary_normalized_area().unwrap(), rat(18, 1));
        assert_eq!(d.boundary_normalized_area().unwrap(), rat(2, 1));
        assert_eq!(d.normalized_volume(), rat(2, 1));
    }

    #[test]
    fn pick_area_examples() {
        let t = Polygon::from_i64(&[[0, 0], [1, 0], [0, 1]]);
        assert_eq!(pick_area(&t).unwrap(), int(1));
        let t3 = Polygon::from_i64(&[[0, 0], [3, 0], [0, 3]]);
        assert_eq!(pick_area(&t3).unwrap(), int(9));
        assert_eq!(t3.point_counts().1, 1);
        let v2 = Polygon::from_i64(&[[0, 0], [6, 0], [0, 2]]);
        assert_eq!(pick_area(&v2).unwrap(), int(12));
    }

    #[test]
    fn identity24_examples() {
        assert_eq!(p3().identity24().unwrap(), int(24));
        assert_eq!(cube().identity24().unwrap(), int(24));
        assert_eq!(octahedron().identity24().unwrap(), int(24));
    }

    #[test]
    fn polygon_rank_two_hull() {
        let p = LatticePolytope::convex_hull(&[
            rv(&[(1, 1), (0, 1)]),
            rv(&[(0, 1), (1, 1)]),
            rv(&[(-1, 1), (-1, 1)]),
            rv(&[(0, 1), (0, 1)]),
        ])
        .unwrap();
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(p.edges().len(), 3);
        assert!(p.is_reflexive());
        assert_eq!(p.point_counts().unwrap(), (4, 1, 3));
    }

    #[test]
    fn facet_cycles_are_consistent() {
        let c = cube();
        for f in c.facets() {
            assert_eq!(f.vertices.len(), 4);
            for i in 0..4 {
                let a = f.vertices[i];
                let b = f.vertices[(i + 1) % 4];
                assert!(c.edge_index(a, b).is_some());
            }
        }
    }

    fn random_polytope() -> impl Strategy<Value = LatticePolytope> {
        prop::collection::vec((-3i64..=3, -3i64..=3, -3i64..=3), 4..9).prop_filter_map(
            "full-dimensional with interior origin",
            |pts| {
                let mut all: Vec<[i64; 3]> = pts.iter().map(|&(x, y, z)| [x, y, z]).collect();
                all.extend([[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]);
                LatticePolytope::from_i64(&all).ok()
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn double_polar_is_identity(p in random_polytope()) {
            let d = p.polar_dual().unwrap();
            let dd = d.polar_dual().unwrap();
            prop_assert_eq!(dd.vertices(), p.vertices());
        }

        #[test]
        fn face_dimensions_are_complementary(p in random_polytope()) {
            let d = p.polar_dual().unwrap();
            for v in 0..p.vertices().len() {
                prop_assert!(p.dual_facet_of_vertex(v, &d).is_some());
            }
            for e in 0..p.edges().len() {
                prop_assert!(p.dual_edge(e, &d).is_some());
            }
            prop_assert_eq!(p.edges().len(), d.edges().len());
            prop_assert_eq!(p.vertices().len() + p.facets().len(), p.edges().len() + 2);
        }

        #[test]
        fn boundary_area_matches_volume_for_polars(p in random_polytope()) {
            // facets of the polar of a Fano polytope sit at lattice distance 1
            prop_assume!(p.is_fano());
            let d = p.polar_dual().unwrap();
            prop_assert_eq!(d.boundary_normalized_area().unwrap(), d.normalized_volume());
        }

        #[test]
        fn counts_add_up(p in random_polytope()) {
            let (t, i, b) = p.point_counts().unwrap();
            prop_assert_eq!(t, i + b);
            if p.is_reflexive() {
                let (_, di, _) = p.polar_dual().unwrap().point_counts().unwrap();
                prop_assert_eq!(di, 1);
            }
        }
    }
}

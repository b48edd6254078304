//! Convex lattice polygons in a rank-2 lattice, possibly degenerate.
//!
//! A [`Polygon`] is stored as its vertex cycle in counterclockwise order. Points
//! and segments are allowed because polygons of sections and Minkowski
//! summands can collapse.

use crate::linalg::{
    det2_rat, dot_rat, gcd_all, int, is_integral, pair, primitive_from_rat, rat_from_int,
    sub_rat, to_int_vec, to_rat_vec, Int, IntVector, Rat, RatVector,
};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// A convex polygon (or segment, or point) with rational vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polygon {
    vertices: Vec<RatVector>,
}

/// Orientation of the triangle (o, a, b): positive for a counterclockwise turn.
fn orient(o: &[Rat], a: &[Rat], b: &[Rat]) -> Rat {
    det2_rat(&sub_rat(a, o), &sub_rat(b, o))
}

impl Polygon {
    /// Convex hull of a finite point set (Andrew's monotone chain, exact).
    pub fn hull(points: &[RatVector]) -> Polygon {
        let mut pts: Vec<RatVector> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() <= 1 {
            return Polygon { vertices: pts };
        }
        let mut lower: Vec<RatVector> = Vec::new();
        for p in &pts {
            while lower.len() >= 2
                && !orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
            {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<RatVector> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2
                && !orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
            {
                upper.pop();
            }
            upper.push(p.clone());
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        // a collinear input leaves the two endpoints
        let mut v = lower;
        v.dedup();
        if v.len() == 2 && v[0] == v[1] {
            v.pop();
        }
        Polygon { vertices: v }
    }

    pub fn from_int_points(points: &[IntVector]) -> Polygon {
        Polygon::hull(&points.iter().map(|p| to_rat_vec(p)).collect::<Vec<_>>())
    }

    pub fn from_i64(points: &[[i64; 2]]) -> Polygon {
        Polygon::hull(
            &points
                .iter()
                .map(|p| vec![Rat::from_integer(int(p[0])), Rat::from_integer(int(p[1]))])
                .collect::<Vec<_>>(),
        )
    }

    /// The polygon `{m : ⟨m, n_i⟩ ≥ b_i}`; `None` if empty. Unbounded systems
    /// are a caller error and yield only the vertices that exist.
    pub fn from_inequalities(ineqs: &[(IntVector, Rat)]) -> Option<Polygon> {
        let mut cands = Vec::new();
        for i in 0..ineqs.len() {
            for j in i + 1..ineqs.len() {
                let (a, ba) = &ineqs[i];
                let (b, bb) = &ineqs[j];
                let det = &a[0] * &b[1] - &a[1] * &b[0];
                if det.is_zero() {
                    continue;
                }
                let d = rat_from_int(&det);
                // Cramer's rule for a·m = ba, b·m = bb
                let x = (ba * rat_from_int(&b[1]) - bb * rat_from_int(&a[1])) / &d;
                let y = (bb * rat_from_int(&a[0]) - ba * rat_from_int(&b[0])) / &d;
                let m = vec![x, y];
                if ineqs.iter().all(|(n, c)| pair(n, &m) >= *c) {
                    cands.push(m);
                }
            }
        }
        if cands.is_empty() {
            None
        } else {
            Some(Polygon::hull(&cands))
        }
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    /// 0 for a point, 1 for a segment, 2 for a genuine polygon.
    pub fn dimension(&self) -> usize {
        match self.vertices.len() {
            0 | 1 => 0,
            2 => 1,
            _ => 2,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(|v| is_integral(v))
    }

    pub fn int_vertices(&self) -> Option<Vec<IntVector>> {
        self.vertices.iter().map(|v| to_int_vec(v)).collect()
    }

    /// Edges as consecutive vertex pairs in counterclockwise order. A segment
    /// has its two sides; a point has none.
    pub fn edges(&self) -> Vec<(RatVector, RatVector)> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        (0..n)
            .map(|i| (self.vertices[i].clone(), self.vertices[(i + 1) % n].clone()))
            .collect()
    }

    /// Twice the Euclidean area, i.e. the normalized area in ℤ².
    pub fn normalized_area(&self) -> Rat {
        let n = self.vertices.len();
        if n < 3 {
            return Rat::zero();
        }
        let mut s = Rat::zero();
        for i in 0..n {
            s += det2_rat(&self.vertices[i], &self.vertices[(i + 1) % n]);
        }
        s.abs()
    }

    /// Lattice points by bounding-box scan and membership test.
    pub fn lattice_points(&self) -> Vec<IntVector> {
        if self.vertices.is_empty() {
            return Vec::new();
        }
        let (lo, hi) = bounding_box(&self.vertices);
        let mut out = Vec::new();
        let mut x = lo[0].clone();
        while x <= hi[0] {
            let mut y = lo[1].clone();
            while y <= hi[1] {
                let p = vec![x.clone(), y.clone()];
                if self.contains(&to_rat_vec(&p)) {
                    out.push(p);
                }
                y += 1;
            }
            x += 1;
        }
        out
    }

    pub fn contains(&self, p: &[Rat]) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => self.vertices[0] == p,
            2 => {
                let (a, b) = (&self.vertices[0], &self.vertices[1]);
                if !orient(a, b, p).is_zero() {
                    return false;
                }
                let d = sub_rat(b, a);
                let t = dot_rat(&sub_rat(p, a), &d);
                !t.is_negative() && t <= dot_rat(&d, &d)
            }
            n => (0..n).all(|i| {
                !orient(&self.vertices[i], &self.vertices[(i + 1) % n], p).is_negative()
            }),
        }
    }

    pub fn is_boundary_point(&self, p: &[Rat]) -> bool {
        match self.vertices.len() {
            0..=2 => self.contains(p),
            n => (0..n).any(|i| {
                let a = &self.vertices[i];
                let b = &self.vertices[(i + 1) % n];
                orient(a, b, p).is_zero() && Polygon::hull(&[a.clone(), b.clone()]).contains(p)
            }),
        }
    }

    /// (total, interior, boundary) lattice point counts. For a segment or a
    /// point every lattice point is on the boundary.
    pub fn point_counts(&self) -> (usize, usize, usize) {
        let pts = self.lattice_points();
        let total = pts.len();
        let boundary = pts
            .iter()
            .filter(|p| self.is_boundary_point(&to_rat_vec(p)))
            .count();
        (total, total - boundary, boundary)
    }

    /// Normalized area from Pick's theorem, `2A = 2i + b − 2`; only for
    /// integral two-dimensional polygons.
    pub fn pick_area(&self) -> Option<Int> {
        if self.dimension() < 2 || !self.is_integral() {
            return None;
        }
        let (_, i, b) = self.point_counts();
        Some(int(2 * i as i64 + b as i64 - 2))
    }

    /// Primitive edge directions, each repeated by the lattice length of its
    /// edge, walking the boundary counterclockwise. Requires an integral
    /// polygon; a segment contributes both directions.
    pub fn edge_vector_multiset(&self) -> Vec<IntVector> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            let d = to_int_vec(&sub_rat(&b, &a)).expect("integral polygon");
            let g = gcd_all(&d);
            let w: IntVector = d.iter().map(|x| x / &g).collect();
            let mut k = Int::zero();
            while k < g {
                out.push(w.clone());
                k += 1;
            }
        }
        out
    }

    /// The face minimising `⟨n, ·⟩` as a vertex list (one or two points).
    pub fn face_minimizing(&self, n: &[Int]) -> Vec<RatVector> {
        if self.vertices.is_empty() {
            return Vec::new();
        }
        let min = self.vertices.iter().map(|v| pair(n, v)).min().unwrap();
        self.vertices
            .iter()
            .filter(|v| pair(n, v) == min)
            .cloned()
            .collect()
    }

    /// Lattice length of the face minimising `⟨n, ·⟩` (zero for a vertex).
    pub fn face_length(&self, n: &[Int]) -> Rat {
        let f = self.face_minimizing(n);
        if f.len() < 2 {
            return Rat::zero();
        }
        segment_lattice_length(&f[0], &f[1])
    }

    /// Translate so that the lexicographically smallest vertex is the origin.
    pub fn normalize_translation(&self) -> Polygon {
        let Some(min) = self.vertices.iter().min().cloned() else {
            return self.clone();
        };
        Polygon::hull(
            &self
                .vertices
                .iter()
                .map(|v| sub_rat(v, &min))
                .collect::<Vec<_>>(),
        )
    }

    pub fn translate(&self, t: &[Rat]) -> Polygon {
        Polygon {
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().zip(t).map(|(a, b)| a + b).collect())
                .collect(),
        }
    }

    pub fn minkowski_sum(&self, other: &Polygon) -> Polygon {
        let mut pts = Vec::new();
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Polygon::hull(&pts)
    }

    pub fn scale(&self, k: &Rat) -> Polygon {
        Polygon::hull(
            &self
                .vertices
                .iter()
                .map(|v| v.iter().map(|x| x * k).collect())
                .collect::<Vec<_>>(),
        )
    }

    /// Image under an integer 2×2 matrix acting on column vectors.
    pub fn transform(&self, m: &[[i64; 2]; 2]) -> Polygon {
        let r = |x: i64| Rat::from_integer(int(x));
        Polygon::hull(
            &self
                .vertices
                .iter()
                .map(|v| {
                    vec![
                        r(m[0][0]) * &v[0] + r(m[0][1]) * &v[1],
                        r(m[1][0]) * &v[0] + r(m[1][1]) * &v[1],
                    ]
                })
                .collect::<Vec<_>>(),
        )
    }

    /// Primitive inner normals of the edges of a two-dimensional polygon,
    /// paired with the support value: `⟨n, x⟩ ≥ level` on the polygon.
    pub fn inner_normals(&self) -> Vec<(IntVector, Rat)> {
        if self.dimension() < 2 {
            return Vec::new();
        }
        self.edges()
            .iter()
            .map(|(a, b)| {
                let d = sub_rat(b, a);
                // counterclockwise boundary: the interior is to the left
                let n = primitive_from_rat(&[-d[1].clone(), d[0].clone()]);
                let level = pair(&n, a);
                (n, level)
            })
            .collect()
    }
}

/// Lattice length of a rational segment: `b − a = t·w` with `w` primitive.
pub fn segment_lattice_length(a: &[Rat], b: &[Rat]) -> Rat {
    let d = sub_rat(b, a);
    if d.iter().all(|x| x.is_zero()) {
        return Rat::zero();
    }
    let w = primitive_from_rat(&d);
    let (i, wi) = w
        .iter()
        .enumerate()
        .find(|(_, x)| !x.is_zero())
        .expect("nonzero direction");
    (&d[i] / rat_from_int(wi)).abs()
}

fn bounding_box(points: &[RatVector]) -> (IntVector, IntVector) {
    let dim = points[0].len();
    let lo = (0..dim)
        .map(|k| points.iter().map(|p| p[k].floor().to_integer()).min().unwrap())
        .collect();
    let hi = (0..dim)
        .map(|k| points.iter().map(|p| p[k].ceil().to_integer()).max().unwrap())
        .collect();
    (lo, hi)
}

pub(crate) fn int_bounding_box(points: &[RatVector]) -> (IntVector, IntVector) {
    bounding_box(points)
}

/// Sorts 2D points counterclockwise around their centroid.
pub fn sort_ccw(points: &mut [RatVector]) {
    if points.len() < 3 {
        return;
    }
    let k = Rat::from_integer(int(points.len() as i64));
    let c: RatVector = (0..2)
        .map(|i| points.iter().map(|p| p[i].clone()).sum::<Rat>() / &k)
        .collect();
    let half = |p: &[Rat]| -> u8 {
        let (x, y) = (&p[0] - &c[0], &p[1] - &c[1]);
        if y.is_positive() || (y.is_zero() && x.is_positive()) {
            0
        } else {
            1
        }
    };
    points.sort_by(|a, b| {
        let (ha, hb) = (half(a), half(b));
        if ha != hb {
            return ha.cmp(&hb);
        }
        let o = orient(&c, a, b);
        if o.is_positive() {
            Ordering::Less
        } else if o.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    });
}

/// `gcd`-based test that a 2D integer vector is primitive.
pub fn is_primitive(v: &[Int]) -> bool {
    gcd_all(v).is_one()
}

/// Integer division helper used by lattice scans.
pub fn div_floor(a: &Int, b: &Int) -> Int {
    a.div_floor(b)
}

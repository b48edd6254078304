//! Smooth Minkowski decompositions of lattice polygons into standard
//! simplices: unit segments and unimodular triangles.

use crate::linalg::{det2_int, int, to_rat_vec, Int, IntVector, Rat};
use crate::polygon::Polygon;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A standard simplex summand, normalized up to translation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Summand {
    /// The zero polygon `{0}`.
    Point,
    /// A unit segment with primitive direction; the sign is normalized so the
    /// first nonzero coordinate is positive.
    Segment { direction: IntVector },
    /// A unimodular triangle given by its counterclockwise edge vectors,
    /// rotated so the lexicographically smallest comes first.
    Triangle { edges: [IntVector; 3] },
}

impl Summand {
    pub fn segment(v: &[Int]) -> Summand {
        let first = v.iter().find(|x| !x.is_zero()).expect("nonzero direction");
        let direction = if first.is_negative() {
            v.iter().map(|x| -x).collect()
        } else {
            v.to_vec()
        };
        Summand::Segment { direction }
    }

    /// A triangle from three edge vectors summing to zero, in any order.
    pub fn triangle(a: &[Int], b: &[Int], c: &[Int]) -> Summand {
        let (a, b, c) = (a.to_vec(), b.to_vec(), c.to_vec());
        // counterclockwise order has det(a, b) > 0
        let mut e = if det2_int(&a, &b).is_positive() {
            [a, b, c]
        } else {
            [a, c, b]
        };
        let k = (0..3).min_by(|&i, &j| e[i].cmp(&e[j])).unwrap();
        e.rotate_left(k);
        Summand::Triangle { edges: e }
    }

    /// The standard triangle `conv{0, e₁, e₂}`.
    pub fn standard_triangle() -> Summand {
        Summand::triangle(&[int(1), int(0)], &[int(-1), int(1)], &[int(0), int(-1)])
    }

    pub fn is_triangle(&self) -> bool {
        matches!(self, Summand::Triangle { .. })
    }

    pub fn is_segment(&self) -> bool {
        matches!(self, Summand::Segment { .. })
    }

    /// The summand as a polygon with its lexicographically smallest vertex at
    /// the origin.
    pub fn polygon(&self) -> Polygon {
        let z = || vec![Int::zero(), Int::zero()];
        let pts: Vec<IntVector> = match self {
            Summand::Point => vec![z()],
            Summand::Segment { direction } => vec![z(), direction.clone()],
            Summand::Triangle { edges } => {
                let p1 = edges[0].clone();
                let p2: IntVector = p1.iter().zip(&edges[1]).map(|(x, y)| x + y).collect();
                vec![z(), p1, p2]
            }
        };
        Polygon::from_int_points(&pts).normalize_translation()
    }

    /// Lattice length of the face minimizing `⟨g, ·⟩`.
    pub fn face_length(&self, g: &[Int]) -> Rat {
        self.polygon().face_length(g)
    }

    /// Edge vectors of the summand as a counterclockwise boundary word.
    pub fn edge_vectors(&self) -> Vec<IntVector> {
        match self {
            Summand::Point => Vec::new(),
            Summand::Segment { direction } => {
                vec![direction.clone(), direction.iter().map(|x| -x).collect()]
            }
            Summand::Triangle { edges } => edges.to_vec(),
        }
    }
}

/// A decomposition of a polygon into standard simplices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinkowskiDecomposition {
    /// Summands in sorted order.
    pub summands: Vec<Summand>,
}

impl MinkowskiDecomposition {
    pub fn triangles(&self) -> usize {
        self.summands.iter().filter(|s| s.is_triangle()).count()
    }

    pub fn segments(&self) -> usize {
        self.summands.iter().filter(|s| s.is_segment()).count()
    }

    pub fn sum(&self) -> Polygon {
        minkowski_sum(&self.summands)
    }
}

/// Primitive edge directions of an integral polygon, each repeated by the
/// lattice length of its edge, in counterclockwise order.
pub fn edge_vector_multiset(polygon: &Polygon) -> Vec<IntVector> {
    polygon.edge_vector_multiset()
}

/// The Minkowski sum of summands, normalized up to translation.
pub fn minkowski_sum(summands: &[Summand]) -> Polygon {
    let mut acc = Polygon::hull(&[to_rat_vec(&[int(0), int(0)])]);
    for s in summands {
        acc = acc.minkowski_sum(&s.polygon());
    }
    acc.normalize_translation()
}

/// All decompositions of an integral polygon into unit segments and
/// unimodular triangles; empty when none exists.
pub fn enumerate_smooth_decompositions(polygon: &Polygon) -> Vec<MinkowskiDecomposition> {
    if polygon.dimension() == 0 || !polygon.is_integral() {
        return Vec::new();
    }
    let mut counts: BTreeMap<IntVector, usize> = BTreeMap::new();
    for v in edge_vector_multiset(polygon) {
        *counts.entry(v).or_default() += 1;
    }
    let mut found: Vec<Vec<Summand>> = Vec::new();
    let mut current = Vec::new();
    search(&mut counts, &mut current, &mut found);
    found.sort();
    found.dedup();
    found
        .into_iter()
        .map(|summands| MinkowskiDecomposition { summands })
        .collect()
}

fn take(counts: &mut BTreeMap<IntVector, usize>, v: &IntVector) -> bool {
    match counts.get_mut(v) {
        Some(c) if *c > 0 => {
            *c -= 1;
            if *c == 0 {
                counts.remove(v);
            }
            true
        }
        _ => false,
    }
}

fn give(counts: &mut BTreeMap<IntVector, usize>, v: &IntVector) {
    *counts.entry(v.clone()).or_default() += 1;
}

fn search(
    counts: &mut BTreeMap<IntVector, usize>,
    current: &mut Vec<Summand>,
    found: &mut Vec<Vec<Summand>>,
) {
    let Some(v) = counts.keys().next().cloned() else {
        let mut d = current.clone();
        d.sort();
        found.push(d);
        return;
    };
    // the smallest remaining vector must belong to the next part
    take(counts, &v);
    let neg: IntVector = v.iter().map(|x| -x).collect();
    if take(counts, &neg) {
        current.push(Summand::segment(&v));
        search(counts, current, found);
        current.pop();
        give(counts, &neg);
    }
    let candidates: Vec<IntVector> = counts.keys().cloned().collect();
    for a in candidates {
        if !det2_int(&v, &a).abs().is_one() {
            continue;
        }
        let b: IntVector = v.iter().zip(&a).map(|(x, y)| -(x + y)).collect();
        if b < a {
            continue;
        }
        if !take(counts, &a) {
            continue;
        }
        if take(counts, &b) {
            current.push(Summand::triangle(&v, &a, &b));
            search(counts, current, found);
            current.pop();
            give(counts, &b);
        }
        give(counts, &a);
    }
    give(counts, &v);
}

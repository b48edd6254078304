//! Generalized fans in `M_ℚ`: complete fans whose cones may all contain a
//! common linear subspace, the minimal cone. Only the pointed case and the
//! case of a line are needed.

use crate::error::{Error, Result};
use crate::linalg::{
    cross_int, det2_int, dot_int, integer_kernel, is_zero_int, neg_int, primitive, Int, IntMatrix, IntVector, Rat, RatMatrix, RatVector,
};
use crate::polytope::LatticePolytope;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// A cone of a generalized fan. The fan's minimal cone is implicitly added
/// to every cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cone {
    /// Primitive generators, not counting the minimal cone.
    pub generators: Vec<IntVector>,
    /// Indices of the distinguished rays contained in the cone.
    pub rays: Vec<usize>,
}

/// A complete generalized fan in a rank-3 lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedFan {
    lineality: Option<IntVector>,
    rays: Vec<IntVector>,
    two_cones: Vec<Cone>,
    three_cones: Vec<Cone>,
}

fn sign_normalize(v: IntVector) -> IntVector {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => neg_int(&v),
        _ => v,
    }
}

/// Whether `x` is a non-negative combination of `gens`. By Carathéodory it
/// suffices to try linearly independent subsets of size at most three.
pub fn cone_contains(gens: &[IntVector], x: &[Rat]) -> bool {
    if x.iter().all(|c| c.is_zero()) {
        return true;
    }
    let n = gens.len();
    let try_subset = |idx: &[usize]| -> bool {
        let rows: Vec<RatVector> = (0..3)
            .map(|j| idx.iter().map(|&i| Rat::from_integer(gens[i][j].clone())).collect())
            .collect();
        let m = RatMatrix::from_rows(rows, idx.len());
        if m.rank() != idx.len() {
            return false;
        }
        match m.solve(x) {
            Some(c) => c.iter().all(|t| !t.is_negative()),
            None => false,
        }
    };
    for i in 0..n {
        if try_subset(&[i]) {
            return true;
        }
        for j in i + 1..n {
            if try_subset(&[i, j]) {
                return true;
            }
            for k in j + 1..n {
                if try_subset(&[i, j, k]) {
                    return true;
                }
            }
        }
    }
    false
}

impl GeneralizedFan {
    /// The normal fan of a Fano polytope `P`: rays through the vertices of
    /// `P°` and cones over its faces.
    pub fn normal_fan(p: &LatticePolytope) -> Result<GeneralizedFan> {
        let dual = p.polar_dual()?;
        let rays: Vec<IntVector> = dual
            .vertices()
            .iter()
            .map(|v| crate::linalg::primitive_from_rat(v))
            .collect();
        let two_cones = dual
            .edges()
            .iter()
            .map(|e| Cone {
                generators: e.vertices.iter().map(|&i| rays[i].clone()).collect(),
                rays: e.vertices.to_vec(),
            })
            .collect();
        let three_cones = dual
            .facets()
            .iter()
            .map(|f| Cone {
                generators: f.vertices.iter().map(|&i| rays[i].clone()).collect(),
                rays: f.vertices.clone(),
            })
            .collect();
        Ok(GeneralizedFan {
            lineality: None,
            rays,
            two_cones,
            three_cones,
        })
    }

    /// The product of a complete fan in the quotient by a line with that
    /// line. `generators` are lifts of the quotient rays, in any order.
    pub fn line_fan(direction: &[Int], generators: &[IntVector]) -> Result<GeneralizedFan> {
        if is_zero_int(direction) {
            return Err(Error::InvalidFan("zero line direction".into()));
        }
        let line = primitive(direction);
        // coordinates on the quotient: pair with a basis of the annihilator
        let perp = integer_kernel(&IntMatrix::from_rows(vec![line.clone()], 3));
        let quotient = |g: &IntVector| -> IntVector {
            vec![dot_int(g, &perp[0]), dot_int(g, &perp[1])]
        };
        let mut gens: Vec<(IntVector, IntVector)> = Vec::new();
        for g in generators {
            let q = quotient(g);
            if is_zero_int(&q) {
                return Err(Error::InvalidFan("generator lies on the line".into()));
            }
            if gens.iter().any(|(_, p)| primitive(p) == primitive(&q)) {
                return Err(Error::InvalidFan("repeated quotient ray".into()));
            }
            gens.push((g.clone(), q));
        }
        if gens.len() < 3 {
            return Err(Error::InvalidFan("quotient fan has fewer than three rays".into()));
        }
        gens.sort_by(|a, b| angle_cmp(&a.1, &b.1));
        let k = gens.len();
        for i in 0..k {
            let (a, b) = (&gens[i].1, &gens[(i + 1) % k].1);
            if !det2_int(a, b).is_positive() {
                return Err(Error::InvalidFan("quotient fan is not complete".into()));
            }
        }
        let rays = vec![line.clone(), neg_int(&line)];
        let two_cones = gens
            .iter()
            .map(|(g, _)| Cone {
                generators: vec![primitive(g)],
                rays: vec![0, 1],
            })
            .collect();
        let three_cones = (0..k)
            .map(|i| Cone {
                generators: vec![primitive(&gens[i].0), primitive(&gens[(i + 1) % k].0)],
                rays: vec![0, 1],
            })
            .collect();
        Ok(GeneralizedFan {
            lineality: Some(line),
            rays,
            two_cones,
            three_cones,
        })
    }

    /// A pointed fan from rays and cones given by ray indices.
    pub fn explicit(
        rays: &[IntVector],
        two_cones: &[[usize; 2]],
        three_cones: &[Vec<usize>],
    ) -> Result<GeneralizedFan> {
        let rays: Vec<IntVector> = rays.iter().map(|r| primitive(r)).collect();
        for c in two_cones {
            if c.iter().any(|&i| i >= rays.len()) || is_zero_int(&cross_int(&rays[c[0]], &rays[c[1]])) {
                return Err(Error::InvalidFan(format!("bad two-cone {:?}", c)));
            }
        }
        for c in three_cones {
            if c.iter().any(|&i| i >= rays.len()) {
                return Err(Error::InvalidFan(format!("bad three-cone {:?}", c)));
            }
        }
        for c in two_cones {
            if !three_cones.iter().any(|t| t.contains(&c[0]) && t.contains(&c[1])) {
                return Err(Error::InvalidFan(format!(
                    "two-cone {:?} lies in no three-cone",
                    c
                )));
            }
        }
        let make = |idx: &[usize]| Cone {
            generators: idx.iter().map(|&i| rays[i].clone()).collect(),
            rays: idx.to_vec(),
        };
        Ok(GeneralizedFan {
            lineality: None,
            two_cones: two_cones.iter().map(|c| make(c)).collect(),
            three_cones: three_cones.iter().map(|c| make(c)).collect(),
            rays,
        })
    }

    /// Primitive direction of the minimal cone when it is a line.
    pub fn lineality(&self) -> Option<&IntVector> {
        self.lineality.as_ref()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_none()
    }

    /// The distinguished rays: all rays of a pointed fan, or the two halves of
    /// the minimal line.
    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn two_cones(&self) -> &[Cone] {
        &self.two_cones
    }

    pub fn three_cones(&self) -> &[Cone] {
        &self.three_cones
    }

    /// All generators of a cone including the minimal cone.
    pub fn full_generators(&self, cone: &Cone) -> Vec<IntVector> {
        let mut g = cone.generators.clone();
        if let Some(l) = &self.lineality {
            g.push(l.clone());
            g.push(neg_int(l));
        }
        g
    }

    pub fn contains(&self, cone: &Cone, x: &[Rat]) -> bool {
        cone_contains(&self.full_generators(cone), x)
    }

    /// Two spanning vectors of the plane of a two-cone.
    pub fn plane_of(&self, tau: usize) -> [IntVector; 2] {
        let c = &self.two_cones[tau];
        match &self.lineality {
            Some(l) => [l.clone(), c.generators[0].clone()],
            None => [c.generators[0].clone(), c.generators[1].clone()],
        }
    }

    /// The primitive annihilator `ν_τ` of the plane of a two-cone, with its
    /// first nonzero coordinate positive.
    pub fn annihilator(&self, tau: usize) -> IntVector {
        let [a, b] = self.plane_of(tau);
        sign_normalize(primitive(&cross_int(&a, &b)))
    }

    /// Two-cones containing the distinguished ray `rho`.
    pub fn cones_containing_ray(&self, rho: usize) -> Vec<usize> {
        (0..self.two_cones.len())
            .filter(|&t| self.two_cones[t].rays.contains(&rho))
            .collect()
    }

    /// A lift of the generator of the image of `tau` in the quotient by `rho`.
    pub fn quotient_generator(&self, tau: usize, rho: usize) -> IntVector {
        let c = &self.two_cones[tau];
        match &self.lineality {
            Some(_) => c.generators[0].clone(),
            None => {
                let k = c.rays.iter().position(|&r| r != rho).expect("two distinct rays");
                c.generators[k].clone()
            }
        }
    }

    /// Dimension of the smallest cone containing `x`: 0 at the origin, 1 on
    /// a distinguished ray (or the minimal line), 2 on a two-cone, else 3.
    pub fn minimal_cone_dim(&self, x: &[Rat]) -> usize {
        if x.iter().all(|c| c.is_zero()) {
            return 0;
        }
        if let Some(l) = &self.lineality {
            if is_zero_int(&cross_rat_int(x, l)) {
                return 1;
            }
        } else if self.rays.iter().any(|r| cone_contains(&[r.clone()], x)) {
            return 1;
        }
        if self.two_cones.iter().any(|c| self.contains(c, x)) {
            return 2;
        }
        3
    }

    /// The distinguished ray through `x`, if any.
    pub fn ray_through(&self, x: &[Rat]) -> Option<usize> {
        if x.iter().all(|c| c.is_zero()) {
            return None;
        }
        (0..self.rays.len()).find(|&r| cone_contains(&[self.rays[r].clone()], x))
    }

    /// The two-cone whose relative interior contains `x`, if any.
    pub fn two_cone_through(&self, x: &[Rat]) -> Option<usize> {
        (0..self.two_cones.len()).find(|&t| self.contains(&self.two_cones[t], x))
    }
}

/// Sign pattern of `x × l` for rational `x`, scaled to integers.
fn cross_rat_int(x: &[Rat], l: &[Int]) -> IntVector {
    let xi = crate::linalg::primitive_from_rat(x);
    cross_int(&xi, l)
}

/// Orders plane vectors by angle in `[0, 2π)`.
fn angle_cmp(a: &[Int], b: &[Int]) -> std::cmp::Ordering {
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

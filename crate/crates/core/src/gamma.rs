//! The linear system `Γ(Σ, J)` of compatible quotient classes on the
//! two-cones of a pointed fan, its dimension and `b₂ = dim Γ − 2`.
//!
//! Unknowns are one scalar `α_σ` per two-cone, the coordinate of
//! `M_ℚ/⟨σ⟩` obtained by pairing with the annihilator `ν_σ`, and one vector
//! `m̄_D ∈ M_ℚ` per triangle summand, defined up to the ray it sits on.

use crate::degeneration::{DegenerationData, Method};
use crate::error::{Error, Result};
use crate::linalg::{
    det2_int, int, kernel_basis, neg_int, primitive, rat_from_int, to_rat_vec, Int, IntVector, Rat,
    RatMatrix, RatVector,
};
use crate::minkowski::Summand;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::cmp::Ordering;

/// The equations of `Γ(Σ, J)` as rows over the unknowns
/// `(α_0, …, α_{s−1}, m̄_0, …, m̄_{t−1})`.
#[derive(Clone, Debug)]
pub struct GammaSystem {
    pub two_cones: usize,
    pub auxiliaries: usize,
    /// The annihilators `ν_σ`, one per two-cone.
    pub normals: Vec<IntVector>,
    pub rows: Vec<RatVector>,
}

impl GammaSystem {
    pub fn unknowns(&self) -> usize {
        self.two_cones + 3 * self.auxiliaries
    }

    pub fn matrix(&self) -> RatMatrix {
        RatMatrix::from_rows(self.rows.clone(), self.unknowns())
    }

    /// Whether `α_σ = ⟨m, ν_σ⟩`, `m̄_D = m` solves every equation.
    pub fn satisfied_by_character(&self, m: &[Rat]) -> bool {
        let mut x: RatVector = self
            .normals
            .iter()
            .map(|nu| nu.iter().zip(m).map(|(a, b)| rat_from_int(a) * b).sum())
            .collect();
        for _ in 0..self.auxiliaries {
            x.extend(m.iter().cloned());
        }
        self.rows.iter().all(|row| {
            row.iter()
                .zip(&x)
                .map(|(a, b)| a * b)
                .sum::<Rat>()
                .is_zero()
        })
    }
}

/// The solution of a Γ system restricted to the `α` coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct GammaSolution {
    pub dimension: usize,
    pub b2: i64,
    /// A basis of the solution space in the `α` coordinates, as strings.
    pub basis: Vec<Vec<String>>,
}

/// Two-cones at ray `k` whose quotient directions are the inner normals of
/// the edges of `summand`, in edge order.
fn participating(data: &DegenerationData, k: usize, summand: &Summand) -> Result<Vec<usize>> {
    let entry = &data.ray_data.entries[k];
    let cones = data.fan.cones_containing_ray(k);
    summand
        .edge_vectors()
        .iter()
        .map(|e| {
            let inner = primitive(&[-e[1].clone(), e[0].clone()]);
            cones
                .iter()
                .copied()
                .find(|&t| primitive(&entry.project(&data.fan.quotient_generator(t, k))) == inner)
                .ok_or_else(|| {
                    Error::Validation(format!(
                        "diagram incomplete: no two-cone at ray {} in direction {:?}",
                        k, inner
                    ))
                })
        })
        .collect()
}

fn require_smooth_decompositions(data: &DegenerationData) -> Result<()> {
    if data.method != Method::SmoothDecompositions || !data.fan.is_pointed() {
        return Err(Error::Unsupported(
            "Γ is defined for normal-fan data built from smooth decompositions".into(),
        ));
    }
    Ok(())
}

/// Builds the Γ system of data built from smooth decompositions.
pub fn build_system(data: &DegenerationData) -> Result<GammaSystem> {
    require_smooth_decompositions(data)?;
    let s = data.fan.two_cones().len();
    let normals: Vec<IntVector> = (0..s).map(|t| data.fan.annihilator(t)).collect();
    let t = data.triangle_count();
    let width = s + 3 * t;
    let mut rows = Vec::new();
    let mut aux = 0;
    for (k, entry) in data.ray_data.entries.iter().enumerate() {
        for summand in &entry.summands {
            match summand {
                Summand::Point => {}
                Summand::Triangle { .. } => {
                    for sigma in participating(data, k, summand)? {
                        let mut row = vec![Rat::zero(); width];
                        row[sigma] = -Rat::one();
                        for j in 0..3 {
                            row[s + 3 * aux + j] = rat_from_int(&normals[sigma][j]);
                        }
                        rows.push(row);
                    }
                    aux += 1;
                }
                Summand::Segment { .. } => {
                    let cones = participating(data, k, summand)?;
                    let (a, b) = (cones[0], cones[1]);
                    let eps = if normals[a] == normals[b] {
                        Rat::one()
                    } else if normals[a] == neg_int(&normals[b]) {
                        -Rat::one()
                    } else {
                        return Err(Error::Validation(format!(
                            "segment at ray {} joins two-cones {} and {} spanning different planes",
                            k, a, b
                        )));
                    };
                    let mut row = vec![Rat::zero(); width];
                    row[a] = eps;
                    row[b] = -Rat::one();
                    rows.push(row);
                }
            }
        }
    }
    let system = GammaSystem {
        two_cones: s,
        auxiliaries: t,
        normals,
        rows,
    };
    check_baseline(&system)?;
    Ok(system)
}

fn check_baseline(system: &GammaSystem) -> Result<()> {
    for i in 0..3 {
        let mut m = vec![Rat::zero(); 3];
        m[i] = Rat::one();
        if !system.satisfied_by_character(&m) {
            return Err(Error::BaselineMissing);
        }
    }
    Ok(())
}

/// `dim Γ`: the nullity of the system minus one gauge direction per
/// auxiliary unknown.
pub fn gamma_dimension(system: &GammaSystem) -> usize {
    let nullity = system.unknowns() - system.matrix().rank();
    nullity - system.auxiliaries
}

/// `dim Γ` together with `b₂` and a basis in the `α` coordinates.
pub fn solve(data: &DegenerationData) -> Result<GammaSolution> {
    let system = build_system(data)?;
    let dimension = gamma_dimension(&system);
    if dimension < 3 {
        return Err(Error::InconsistentInvariants(format!(
            "dim Γ = {} is below the torus baseline",
            dimension
        )));
    }
    let projected: Vec<RatVector> = kernel_basis(&system.matrix())
        .into_iter()
        .map(|v| v[..system.two_cones].to_vec())
        .collect();
    let (reduced, pivots) = RatMatrix::from_rows(projected, system.two_cones).rref();
    let basis = (0..pivots.len())
        .map(|i| reduced.row(i).iter().map(|x| x.to_string()).collect())
        .collect();
    Ok(GammaSolution {
        dimension,
        b2: dimension as i64 - 2,
        basis,
    })
}

/// `b₂ = dim Γ − 2`.
pub fn b2(data: &DegenerationData) -> Result<i64> {
    Ok(solve(data)?.b2)
}

/// Counterclockwise order of nonzero plane vectors starting from the
/// positive x-axis.
fn angle_order(a: &[Int], b: &[Int]) -> Ordering {
    let half = |v: &[Int]| v[1].is_negative() || (v[1].is_zero() && v[0].is_negative());
    match (half(a), half(b)) {
        (false, true) => Ordering::Less,
        (true, false) => Ordering::Greater,
        _ => Int::zero().cmp(&det2_int(a, b)),
    }
}

/// The cyclic sequence `a_i` with `u_{i−1} + u_{i+1} = a_i·u_i` of a smooth
/// complete plane fan, brought to a normal form under rotation and
/// reflection. `None` if the fan is not smooth.
pub fn smooth_fan_signature(rays: &[IntVector]) -> Option<Vec<Int>> {
    let mut rays: Vec<IntVector> = rays.iter().map(|r| primitive(r)).collect();
    rays.sort_by(|a, b| angle_order(a, b));
    rays.dedup();
    let n = rays.len();
    if n < 3 {
        return None;
    }
    let mut seq = Vec::with_capacity(n);
    for i in 0..n {
        let prev = &rays[(i + n - 1) % n];
        let cur = &rays[i];
        let next = &rays[(i + 1) % n];
        if !det2_int(cur, next).is_one() {
            return None;
        }
        let w = [&prev[0] + &next[0], &prev[1] + &next[1]];
        // det(cur, next) = 1 gives a_i = det(w, next)
        let a = det2_int(&w, next);
        if [&a * &cur[0], &a * &cur[1]] != w {
            return None;
        }
        seq.push(a);
    }
    let mut best: Option<Vec<Int>> = None;
    for reversed in [false, true] {
        let base: Vec<Int> = if reversed {
            seq.iter().rev().cloned().collect()
        } else {
            seq.clone()
        };
        for r in 0..n {
            let rot: Vec<Int> = base[r..].iter().chain(&base[..r]).cloned().collect();
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best
}

/// Signatures of the fans of `ℙ²`, `ℙ¹×ℙ¹`, `𝔽₁` and the blow-up of `ℙ²`
/// in two points.
fn admissible_signatures() -> Vec<Vec<Int>> {
    let fans: [&[[i64; 2]]; 4] = [
        &[[1, 0], [0, 1], [-1, -1]],
        &[[1, 0], [0, 1], [-1, 0], [0, -1]],
        &[[1, 0], [0, 1], [-1, 1], [0, -1]],
        &[[1, 0], [1, 1], [0, 1], [-1, 1], [0, -1]],
    ];
    fans.iter()
        .map(|f| {
            let rays: Vec<IntVector> = f.iter().map(|r| vec![int(r[0]), int(r[1])]).collect();
            smooth_fan_signature(&rays).expect("reference fans are smooth")
        })
        .collect()
}

/// Dimension of the global sections of the system that assigns
/// `M_ℚ/⟨σ⟩` to each two-cone and asks every ray to see a single class of
/// `M_ℚ/⟨ρ⟩`. Applies when every quotient fan at a ray is the fan of `ℙ²`,
/// `ℙ¹×ℙ¹`, `𝔽₁` or the blow-up of `ℙ²` in two points.
pub fn bar_t_sections(data: &DegenerationData) -> Result<usize> {
    if !data.fan.is_pointed() {
        return Err(Error::FastPathInapplicable("fan has a minimal line".into()));
    }
    let allowed = admissible_signatures();
    let s = data.fan.two_cones().len();
    let rays = data.fan.rays().len();
    let width = s + 3 * rays;
    let mut rows = Vec::new();
    for k in 0..rays {
        let entry = &data.ray_data.entries[k];
        let cones = data.fan.cones_containing_ray(k);
        let quotient: Vec<IntVector> = cones
            .iter()
            .map(|&t| entry.project(&data.fan.quotient_generator(t, k)))
            .collect();
        match smooth_fan_signature(&quotient) {
            Some(sig) if allowed.contains(&sig) => {}
            _ => {
                return Err(Error::FastPathInapplicable(format!(
                    "quotient fan at ray {} is not one of the four admissible surfaces",
                    k
                )))
            }
        }
        for &t in &cones {
            let nu = to_rat_vec(&data.fan.annihilator(t));
            let mut row = vec![Rat::zero(); width];
            row[t] = -Rat::one();
            for j in 0..3 {
                row[s + 3 * k + j] = nu[j].clone();
            }
            rows.push(row);
        }
    }
    let rank = RatMatrix::from_rows(rows, width).rank();
    Ok(width - rank - rays)
}

//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers ([`Int`]) and reduced
//! rationals ([`Rat`]). Matrices are small (a few dozen rows at most), so the
//! algorithms favour clarity and determinism over asymptotic speed.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub type Int = BigInt;
pub type Rat = BigRational;
pub type IntVector = Vec<Int>;
pub type RatVector = Vec<Rat>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_from_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

pub fn ivec(v: &[i64]) -> IntVector {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn to_rat_vec(v: &[Int]) -> RatVector {
    v.iter().map(rat_from_int).collect()
}

/// Returns the integer vector if every coordinate is integral.
pub fn to_int_vec(v: &[Rat]) -> Option<IntVector> {
    v.iter()
        .map(|x| if x.is_integer() { Some(x.to_integer()) } else { None })
        .collect()
}

pub fn is_integral(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Pairing of an integer covector with a rational vector.
pub fn pair(u: &[Int], v: &[Rat]) -> Rat {
    u.iter().zip(v).map(|(x, y)| rat_from_int(x) * y).sum()
}

pub fn sub_rat(a: &[Rat], b: &[Rat]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_rat(a: &[Rat], b: &[Rat]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale_rat(a: &[Rat], s: &Rat) -> RatVector {
    a.iter().map(|x| x * s).collect()
}

pub fn sub_int(a: &[Int], b: &[Int]) -> IntVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_int(a: &[Int], b: &[Int]) -> IntVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn neg_int(a: &[Int]) -> IntVector {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_int(a: &[Int]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn gcd_all(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divides an integer vector by the gcd of its entries. The zero vector is
/// returned unchanged.
pub fn primitive(v: &[Int]) -> IntVector {
    let g = gcd_all(v);
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Least common multiple of the denominators of a rational vector.
pub fn common_denominator(v: &[Rat]) -> Int {
    v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()))
}

/// Clears denominators and divides out the content: the primitive integer
/// vector on the ray through a nonzero rational vector.
pub fn primitive_from_rat(v: &[Rat]) -> IntVector {
    let l = common_denominator(v);
    let scaled: IntVector = v
        .iter()
        .map(|x| (x * rat_from_int(&l)).to_integer())
        .collect();
    primitive(&scaled)
}

/// 3D cross product.
pub fn cross_rat(a: &[Rat], b: &[Rat]) -> RatVector {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn cross_int(a: &[Int], b: &[Int]) -> IntVector {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn det2_int(a: &[Int], b: &[Int]) -> Int {
    &a[0] * &b[1] - &a[1] * &b[0]
}

pub fn det2_rat(a: &[Rat], b: &[Rat]) -> Rat {
    &a[0] * &b[1] - &a[1] * &b[0]
}

pub fn det3_rat(a: &[Rat], b: &[Rat], c: &[Rat]) -> Rat {
    dot_rat(a, &cross_rat(b, c))
}

pub fn det3_int(a: &[Int], b: &[Int], c: &[Int]) -> Int {
    dot_int(a, &cross_int(b, c))
}

/// A dense matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Int>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![Int::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Int::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed to describe a matrix with
    /// no rows.
    pub fn from_rows(rows: Vec<IntVector>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| ivec(r)).collect(), cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[IntVector] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i][j] += &self.data[i][k] * &other.data[k][j];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> IntVector {
        self.data.iter().map(|r| dot_int(r, v)).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.data[i][j].is_zero()))
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut a = self.data.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::from_rows(
            self.data.iter().map(|r| to_rat_vec(r)).collect(),
            self.cols,
        )
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.data.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in &mut self.data {
            r.swap(i, j);
        }
    }

    /// row_i += k * row_j
    fn add_row_multiple(&mut self, i: usize, j: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        let rj = self.data[j].clone();
        for (x, y) in self.data[i].iter_mut().zip(&rj) {
            *x += k * y;
        }
    }

    /// col_i += k * col_j
    fn add_col_multiple(&mut self, i: usize, j: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for r in &mut self.data {
            let y = r[j].clone();
            r[i] += k * y;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.data[i] {
            *x = -&*x;
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.data.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", parts.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A dense matrix of reduced rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rat>>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<RatVector>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        RatMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i]
    }

    pub fn mul_vec(&self, v: &[Rat]) -> RatVector {
        self.data.iter().map(|r| dot_rat(r, v)).collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].recip();
            for x in a[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..self.rows {
                if i != r && !a[i][c].is_zero() {
                    let k = a[i][c].clone();
                    let pr = a[r].clone();
                    for (x, y) in a[i].iter_mut().zip(&pr) {
                        *x -= &k * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (RatMatrix::from_rows(a, self.cols), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves `A x = b`, returning one solution if the system is consistent.
    pub fn solve(&self, b: &[Rat]) -> Option<RatVector> {
        assert_eq!(b.len(), self.rows);
        let aug: Vec<RatVector> = self
            .data
            .iter()
            .zip(b)
            .map(|(r, x)| {
                let mut r = r.clone();
                r.push(x.clone());
                r
            })
            .collect();
        let (red, pivots) = RatMatrix::from_rows(aug, self.cols + 1).rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.data[i][self.cols].clone();
        }
        Some(x)
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `H = U·A`. Pivots are positive and entries above a pivot lie in
/// `[0, pivot)`; zero rows come last.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let m = a.rows();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut r = 0;
    for c in 0..a.cols() {
        if r == m {
            break;
        }
        loop {
            // smallest nonzero entry at or below row r becomes the pivot
            let best = (r..m)
                .filter(|&i| !h.data[i][c].is_zero())
                .min_by(|&i, &j| h.data[i][c].abs().cmp(&h.data[j][c].abs()).then(i.cmp(&j)));
            let Some(p) = best else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..m {
                if h.data[i][c].is_zero() {
                    continue;
                }
                let q = h.data[i][c].div_floor(&h.data[r][c]);
                h.add_row_multiple(i, r, &-&q);
                u.add_row_multiple(i, r, &-&q);
                if !h.data[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.data[r][c].is_zero() {
            continue;
        }
        if h.data[r][c].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.data[i][c].div_floor(&h.data[r][c]);
            h.add_row_multiple(i, r, &-&q);
            u.add_row_multiple(i, r, &-&q);
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form: returns `(S, U, V)` with `U`, `V` unimodular,
/// `S = U·A·V` diagonal, non-negative, and `d₁ | d₂ | …`.
pub fn snf(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (m, n) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        loop {
            // move the smallest nonzero entry of the trailing block to (t, t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if s.data[i][j].is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => s.data[i][j].abs() < s.data[bi][bj].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish_snf(s, u, v);
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..m {
                let q = s.data[i][t].div_floor(&s.data[t][t]);
                s.add_row_multiple(i, t, &-&q);
                u.add_row_multiple(i, t, &-&q);
                if !s.data[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = s.data[t][j].div_floor(&s.data[t][t]);
                s.add_col_multiple(j, t, &-&q);
                v.add_col_multiple(j, t, &-&q);
                if !s.data[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole trailing block
            let offending = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !(&s.data[i][j] % &s.data[t][t]).is_zero());
            match offending {
                Some((i, _)) => {
                    s.add_row_multiple(t, i, &Int::one());
                    u.add_row_multiple(t, i, &Int::one());
                }
                None => break,
            }
        }
        if s.data[t][t].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    finish_snf(s, u, v)
}

fn finish_snf(
    mut s: IntMatrix,
    mut u: IntMatrix,
    v: IntMatrix,
) -> (IntMatrix, IntMatrix, IntMatrix) {
    for t in 0..s.rows().min(s.cols()) {
        if s.data[t][t].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    (s, u, v)
}

/// Basis of the right null space of a rational matrix, one vector per free
/// column of the reduced row echelon form.
pub fn kernel_basis(a: &RatMatrix) -> Vec<RatVector> {
    let (red, pivots) = a.rref();
    let n = a.cols();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -red.data[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Saturated basis of the integer vectors `x` with `A x = 0`.
pub fn integer_kernel(a: &IntMatrix) -> Vec<IntVector> {
    let n = a.cols();
    if a.rows() == 0 {
        return IntMatrix::identity(n).data;
    }
    // H = U·Aᵀ; rows of U matching zero rows of H span the left kernel of Aᵀ
    let (h, u) = hnf(&a.transpose());
    (0..n)
        .filter(|&i| is_zero_int(h.row(i)))
        .map(|i| u.row(i).to_vec())
        .collect()
}

/// Basis of the saturation `span_ℚ(L) ∩ ℤⁿ` of the lattice spanned by `basis`.
pub fn saturate(basis: &[IntVector], n: usize) -> Vec<IntVector> {
    let rows: Vec<RatVector> = basis.iter().map(|b| to_rat_vec(b)).collect();
    let annihilator: Vec<IntVector> = kernel_basis(&RatMatrix::from_rows(rows, n))
        .iter()
        .map(|w| primitive_from_rat(w))
        .collect();
    let sat = integer_kernel(&IntMatrix::from_rows(annihilator, n));
    // present the result in Hermite normal form for determinism
    let (h, _) = hnf(&IntMatrix::from_rows(sat, n));
    h.data.into_iter().filter(|r| !is_zero_int(r)).collect()
}

/// Coordinates of `v` in a basis (rows), if `v` lies in the rational span.
pub fn coordinates(v: &[Rat], basis: &[RatVector]) -> Option<RatVector> {
    let n = v.len();
    let k = basis.len();
    // solve Σ c_i b_i = v, i.e. Bᵀ c = v
    let rows: Vec<RatVector> = (0..n)
        .map(|j| (0..k).map(|i| basis[i][j].clone()).collect())
        .collect();
    RatMatrix::from_rows(rows, k).solve(v)
}

/// The largest `k` such that `v / k` lies in the saturation of the lattice
/// spanned by `basis`.
pub fn index_in_saturation(v: &[Int], basis: &[IntVector]) -> Result<Int> {
    let n = v.len();
    let sat = saturate(basis, n);
    let sat_rat: Vec<RatVector> = sat.iter().map(|b| to_rat_vec(b)).collect();
    let c = coordinates(&to_rat_vec(v), &sat_rat).ok_or(Error::NotInSpan)?;
    let c = to_int_vec(&c).ok_or(Error::NotInSpan)?;
    let g = gcd_all(&c);
    if g.is_zero() {
        return Err(Error::NotInSpan);
    }
    Ok(g)
}

/// A basis of the saturated lattice `span_ℚ(vectors) ∩ ℤⁿ`.
pub fn lattice_basis_of_span(vectors: &[RatVector], n: usize) -> Vec<IntVector> {
    let ints: Vec<IntVector> = vectors
        .iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .map(|v| primitive_from_rat(v))
        .collect();
    saturate(&ints, n)
}

/// Extends a saturated basis of a sublattice to a basis of ℤⁿ, returning the
/// complementary vectors.
pub fn complete_basis(basis: &[IntVector], n: usize) -> Vec<IntVector> {
    if basis.is_empty() {
        return IntMatrix::identity(n).data;
    }
    // Bᵀ = U⁻¹ S V⁻¹ with S = [I; 0] for a saturated B; the columns of U⁻¹
    // beyond the rank complete the basis.
    let b = IntMatrix::from_rows(basis.to_vec(), n);
    let (_, u, _) = snf(&b.transpose());
    let uinv = unimodular_inverse(&u);
    let k = basis.len();
    (k..n).map(|j| (0..n).map(|i| uinv.get(i, j).clone()).collect()).collect()
}

/// Inverse of a unimodular matrix.
pub fn unimodular_inverse(u: &IntMatrix) -> IntMatrix {
    let n = u.rows();
    let inv = rat_inverse(&u.to_rat()).expect("unimodular matrix is invertible");
    let mut out = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            assert!(inv.data[i][j].is_integer(), "matrix is not unimodular");
            out.set(i, j, inv.data[i][j].to_integer());
        }
    }
    out
}

/// Inverse of a square rational matrix, if it exists.
pub fn rat_inverse(a: &RatMatrix) -> Option<RatMatrix> {
    let n = a.rows();
    assert_eq!(n, a.cols());
    let aug: Vec<RatVector> = a
        .data
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let (red, pivots) = RatMatrix::from_rows(aug, 2 * n).rref();
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(RatMatrix::from_rows(
        red.data.iter().map(|r| r[n..].to_vec()).collect(),
        n,
    ))
}

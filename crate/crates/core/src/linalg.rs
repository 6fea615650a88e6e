//! Exact rational scalars and the dense linear algebra used everywhere else.
//!
//! Matrices represent linear maps in column convention: column `j` holds the
//! coordinates of the image of basis vector `e_j`. A [`Tensor3`] stores the
//! structure constants of a bilinear product, `t(i, j, k)` being the
//! coefficient of `e_k` in `e_i ∘ e_j`.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Rational scalar `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// `(-1)^e` as a scalar.
pub fn sign_pow(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// Parses `"p"` or `"p/q"` with `q > 0`, reducing to lowest terms.
pub fn parse_scalar(s: &str) -> std::result::Result<Scalar, String> {
    let bad = || format!("malformed rational {s:?}");
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let valid_int = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.starts_with('-') || !valid_int(d) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(n, d))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

/// A coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_i64(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// Concatenation, used for direct sums `A ⊕ V`.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Vector(v)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    fn check_same(&self, other: &Vector) {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        self.check_same(rhs);
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        &self + &rhs
    }
}

impl AddAssign<&Vector> for Vector {
    fn add_assign(&mut self, rhs: &Vector) {
        self.check_same(rhs);
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        self.check_same(rhs);
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        &self - &rhs
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.into_iter().map(|x| -x).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for Vector {
    /// Renders as a combination of basis vectors, e.g. `-2e2 + 1/3e1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let coeff = if mag.is_one() { String::new() } else { mag.to_string() };
            if first {
                let sign = if c.is_negative() { "-" } else { "" };
                write!(f, "{sign}{coeff}e{}", i + 1)?;
            } else {
                let sign = if c.is_negative() { " - " } else { " + " };
                write!(f, "{sign}{coeff}e{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Dense row-major matrix of exact scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn diag(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn diag_i64(entries: &[i64]) -> Self {
        Self::diag(&entries.iter().map(|&e| int(e)).collect::<Vec<_>>())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from nested rows; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dims("ragged matrix rows"));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Square-or-not integer matrix from rows. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vector]) -> Self {
        Self::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Image of `e_j`.
    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|r| self.get(r, j).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Entries in row-major order.
    pub fn flatten(&self) -> Vector {
        Vector(self.data.clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows) && self.is_square()
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Applies the map to a coordinate vector.
    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimension mismatch");
        Vector(
            (0..self.rows)
                .map(|r| {
                    let mut acc = Scalar::zero();
                    for (a, b) in self.row(r).iter().zip(v.iter()) {
                        if !a.is_zero() && !b.is_zero() {
                            acc += a * b;
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::dims(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dims("matrix sum of different shapes"));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.try_add(&other.scale(&-Scalar::one()))
    }

    /// Non-negative integer power of a square matrix.
    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        m
    }

    /// Reduced row-echelon form and the list of pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c) - &factor * m.get(row, c);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::dims(format!("cannot invert {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular(format!("{n}x{n} matrix has rank < {n}")));
        }
        Ok(Matrix::from_fn(n, n, |r, c| red.get(r, n + c).clone()))
    }

    /// Kernel basis, one vector per free column of the reduced row-echelon
    /// form, in increasing free-column order.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (red, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = Vector::zeros(self.cols);
            v.0[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v.0[p] = -red.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self · x = b`, returning one solution if consistent.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert_eq!(self.rows, b.dim());
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = Vector::zeros(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x.0[p] = red.get(r, self.cols).clone();
        }
        Some(x)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    /// Panics on shape mismatch; use [`Matrix::try_mul`] for a checked product.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix shape mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix shape mismatch")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix shape mismatch")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-Scalar::one())
    }
}

/// Structure constants of a bilinear map `A × A → A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Tensor3 { dim, data: vec![Scalar::zero(); dim * dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { dim, data }
    }

    /// Sparse integer constructor from `(i, j, k, coefficient)` entries.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut t = Self::zeros(dim);
        for &(i, j, k, c) in entries {
            let v = t.get(i, j, k) + int(c);
            t.set(i, j, k, v);
        }
        t
    }

    /// Builds the tensor from a bilinear function evaluated on basis pairs.
    pub fn from_products(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut t = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                for k in 0..dim {
                    t.set(i, j, k, v[k].clone());
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let idx = self.idx(i, j, k);
        self.data[idx] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// `e_i ∘ e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let start = self.idx(i, j, 0);
        Vector(self.data[start..start + self.dim].to_vec())
    }

    /// `x ∘ y` for coordinate vectors. Panics on dimension mismatch.
    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        assert!(x.dim() == self.dim && y.dim() == self.dim, "bilinear dimension mismatch");
        let mut z = Vector::zeros(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                let start = self.idx(i, j, 0);
                for k in 0..self.dim {
                    let t = &self.data[start + k];
                    if !t.is_zero() {
                        z.0[k] += &c * t;
                    }
                }
            }
        }
        z
    }

    /// Matrix of left multiplication `y ↦ x ∘ y`.
    pub fn left_mul(&self, x: &Vector) -> Matrix {
        let cols: Vec<Vector> =
            (0..self.dim).map(|j| self.apply(x, &Vector::basis(self.dim, j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Tensor of `(x, y) ↦ f(x ∘ y)`.
    pub fn compose_left(&self, f: &Matrix) -> Tensor3 {
        assert!(f.is_square() && f.rows() == self.dim);
        Tensor3::from_products(self.dim, |i, j| f.apply(&self.basis_product(i, j)))
    }

    /// Tensor of `(x, y) ↦ y ∘ x`.
    pub fn flip(&self) -> Tensor3 {
        Tensor3::from_fn(self.dim, |i, j, k| self.get(j, i, k).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Tensor3 {
        Tensor3 { dim: self.dim, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Transport of structure along an invertible change of coordinates `g`:
    /// `(x, y) ↦ g(g⁻¹x ∘ g⁻¹y)`.
    pub fn conjugate(&self, g: &Matrix, g_inv: &Matrix) -> Tensor3 {
        let cols: Vec<Vector> = (0..self.dim).map(|j| g_inv.column(j)).collect();
        Tensor3::from_products(self.dim, |i, j| g.apply(&self.apply(&cols[i], &cols[j])))
    }

    /// Block sum: products inside each summand, zero across.
    pub fn direct_sum(&self, other: &Tensor3) -> Tensor3 {
        let n = self.dim;
        let m = other.dim;
        let mut t = Tensor3::zeros(n + m);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t.set(i, j, k, self.get(i, j, k).clone());
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    t.set(n + i, n + j, n + k, other.get(i, j, k).clone());
                }
            }
        }
        t
    }

    /// Nested `[i][j][k]` view.
    pub fn to_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product(i, j).0).collect())
            .collect()
    }

    pub fn from_nested(nested: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let n = nested.len();
        let mut data = Vec::with_capacity(n * n * n);
        for row in nested {
            if row.len() != n {
                return Err(Error::dims(format!("tensor slice of length {} in dimension {n}", row.len())));
            }
            for fibre in row {
                if fibre.len() != n {
                    return Err(Error::dims(format!("tensor fibre of length {} in dimension {n}", fibre.len())));
                }
                data.extend(fibre);
            }
        }
        Ok(Tensor3 { dim: n, data })
    }
}

impl Add for &Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, rhs.dim, "tensor dimension mismatch");
        Tensor3 { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, rhs.dim, "tensor dimension mismatch");
        Tensor3 { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

/// Exact matrix product; errors on shape mismatch.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.try_mul(b)
}

/// Exact inverse; [`Error::Singular`] when the matrix has no inverse.
pub fn mat_inverse(a: &Matrix) -> Result<Matrix> {
    a.inverse()
}

/// Kernel basis in reduced row-echelon pivot order.
pub fn solve_nullspace(a: &Matrix) -> Vec<Vector> {
    a.nullspace()
}

/// `z_k = Σ x_i y_j t(i, j, k)`.
pub fn apply_bilinear(t: &Tensor3, x: &Vector, y: &Vector) -> Result<Vector> {
    if x.dim() != t.dim() || y.dim() != t.dim() {
        return Err(Error::dims(format!(
            "bilinear map of dimension {} applied to vectors of dimension {} and {}",
            t.dim(),
            x.dim(),
            y.dim()
        )));
    }
    Ok(t.apply(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive triple-loop product used as an independent oracle.
    fn naive_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; b[0].len()]; a.len()];
        for i in 0..a.len() {
            for j in 0..b[0].len() {
                for k in 0..b.len() {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        out
    }

    #[test]
    fn mat_mul_examples() {
        let id = Matrix::identity(2);
        assert_eq!(mat_mul(&id, &id).unwrap(), id);

        let d = Matrix::diag_i64(&[2, 4]);
        let dinv = Matrix::diag(&[frac(1, 2), frac(1, 4)]);
        assert_eq!(mat_mul(&d, &dinv).unwrap(), id);

        let a = vec![vec![1, 1], vec![0, 1]];
        let b = vec![vec![1, 0], vec![1, 1]];
        let expected = naive_mul(&a, &b);
        assert_eq!(expected, vec![vec![2, 1], vec![1, 1]]);
        let got = mat_mul(&Matrix::from_i64(&[&[1, 1], &[0, 1]]), &Matrix::from_i64(&[&[1, 0], &[1, 1]]))
            .unwrap();
        assert_eq!(got, Matrix::from_i64(&[&[2, 1], &[1, 1]]));
    }

    #[test]
    fn mat_mul_rejects_shape_mismatch() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(mat_mul(&a, &a), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(mat_inverse(&Matrix::identity(3)).unwrap(), Matrix::identity(3));
        assert_eq!(
            mat_inverse(&Matrix::diag_i64(&[2, 4])).unwrap(),
            Matrix::diag(&[frac(1, 2), frac(1, 4)])
        );
        let a = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let inv = mat_inverse(&a).unwrap();
        assert_eq!(inv, Matrix::from_i64(&[&[1, -1], &[0, 1]]));
        assert!((&inv * &a).is_identity());
    }

    #[test]
    fn inverse_detects_singular() {
        let a = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(matches!(a.inverse(), Err(Error::Singular(_))));
        assert!(matches!(Matrix::zeros(2, 3).inverse(), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(solve_nullspace(&Matrix::zeros(2, 2)).len(), 2);
        assert!(solve_nullspace(&Matrix::identity(2)).is_empty());
        let ker = solve_nullspace(&Matrix::from_i64(&[&[1, 1], &[1, 1]]));
        assert_eq!(ker, vec![Vector::from_i64(&[-1, 1])]);
    }

    #[test]
    fn nullspace_vectors_are_in_kernel() {
        let a = Matrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ker = a.nullspace();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(a.apply(v).is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        let x = a.solve(&Vector::from_i64(&[2, 2])).unwrap();
        assert_eq!(a.apply(&x), Vector::from_i64(&[2, 2]));
        assert!(a.solve(&Vector::from_i64(&[1, 2])).is_none());
    }

    #[test]
    fn apply_bilinear_examples() {
        // F1: e1e1 = e1, e1e2 = e2e1 = e2.
        let f1 = Tensor3::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]);
        let e1 = Vector::basis(2, 0);
        let e2 = Vector::basis(2, 1);
        assert_eq!(apply_bilinear(&f1, &e1, &e2).unwrap(), e2);
        assert!(apply_bilinear(&f1, &Vector::zeros(2), &e2).unwrap().is_zero());
        let f2 = Tensor3::from_entries(2, &[(0, 0, 1, 1)]);
        assert_eq!(apply_bilinear(&f2, &e1, &e1).unwrap(), e2);
        assert!(apply_bilinear(&f2, &e1, &Vector::zeros(3)).is_err());
    }

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("1/-2").is_err());
        assert!(parse_scalar("1.5").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("+1").is_err());
        assert_eq!(format_scalar(&frac(4, 2)), "2");
        assert_eq!(format_scalar(&frac(-2, 6)), "-1/3");
    }

    #[test]
    fn vector_display() {
        assert_eq!(Vector::from_i64(&[0, -2]).to_string(), "-2e2");
        assert_eq!(Vector::from_i64(&[1, -1]).to_string(), "e1 - e2");
        assert_eq!(Vector::zeros(3).to_string(), "0");
    }
}

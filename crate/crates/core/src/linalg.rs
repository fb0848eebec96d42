//! Dense complex linear algebra used by every construction.
//!
//! Matrices are stored row-major in a flat `Vec`. Everything here is sized for
//! operators on spaces of dimension at most a few hundred, so no sparse or
//! blocked storage is provided.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

/// Numerical thresholds shared by every check.
///
/// `absolute` bounds orthogonality residuals and entrywise deviations,
/// `relative` is the fraction of the largest Gram eigenvalue below which an
/// eigenvalue counts as zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    pub absolute: f64,
    pub relative: f64,
}

impl Tolerance {
    pub const DEFAULT_ABSOLUTE: f64 = 1e-12;
    pub const DEFAULT_RELATIVE: f64 = 1e-9;

    pub fn new(absolute: f64, relative: f64) -> Result<Self> {
        if !(absolute > 0.0 && absolute.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "absolute tolerance must be positive, got {absolute}"
            )));
        }
        if !(relative > 0.0 && relative.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "relative tolerance must be positive, got {relative}"
            )));
        }
        Ok(Self { absolute, relative })
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            absolute: Self::DEFAULT_ABSOLUTE,
            relative: Self::DEFAULT_RELATIVE,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    entries: Vec<C64>,
}

impl ComplexVector {
    pub fn new(entries: Vec<C64>) -> Self {
        Self { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            entries: vec![ZERO; dim],
        }
    }

    /// Standard basis vector `e_index` (0-based).
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[index] = ONE;
        v
    }

    pub fn from_real(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut [C64] {
        &mut self.entries
    }

    pub fn into_entries(self) -> Vec<C64> {
        self.entries
    }

    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `⟨self, other⟩`, antilinear in `self`.
    pub fn inner(&self, other: &ComplexVector) -> Result<C64> {
        check_dim("vector inner product", self.dim(), other.dim())?;
        Ok(dot_conj_left(&self.entries, &other.entries))
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self::new(self.entries.iter().map(|&z| z * factor).collect())
    }

    pub fn normalized(&self) -> Self {
        self.scale(C64::new(1.0 / self.norm(), 0.0))
    }

    pub fn kron(&self, other: &ComplexVector) -> Self {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for &a in &self.entries {
            out.extend(other.entries.iter().map(|&b| a * b));
        }
        Self::new(out)
    }

    pub fn max_abs_diff(&self, other: &ComplexVector) -> Result<f64> {
        check_dim("vector comparison", self.dim(), other.dim())?;
        Ok(max_abs_diff(&self.entries, &other.entries))
    }
}

impl Index<usize> for ComplexVector {
    type Output = C64;

    fn index(&self, i: usize) -> &C64 {
        &self.entries[i]
    }
}

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::InvalidShape {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_real(rows: usize, cols: usize, values: &[f64]) -> Result<Self> {
        Self::new(rows, cols, values.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn diagonal(values: &[C64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    /// Stacks equal-length vectors as the columns of a matrix.
    pub fn from_columns(columns: &[ComplexVector]) -> Result<Self> {
        let first = columns.first().ok_or(Error::InvalidShape {
            rows: 0,
            cols: 0,
            len: 0,
        })?;
        let rows = first.dim();
        for c in columns {
            check_dim("column stacking", rows, c.dim())?;
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j][i]))
    }

    /// A vector viewed as a one-column matrix.
    pub fn column_matrix(v: &ComplexVector) -> Self {
        Self {
            rows: v.dim(),
            cols: 1,
            data: v.entries().to_vec(),
        }
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

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> ComplexVector {
        ComplexVector::new((0..self.rows).map(|i| self[(i, j)]).collect())
    }

    pub fn columns(&self) -> Vec<ComplexVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * factor).collect(),
        }
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<Self> {
        self.check_same_shape("matrix addition", other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<Self> {
        self.check_same_shape("matrix subtraction", other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Result<Self> {
        check_dim("matrix product", self.cols, other.rows)?;
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let b_row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &ComplexVector) -> Result<ComplexVector> {
        check_dim("matrix-vector product", self.cols, v.dim())?;
        Ok(ComplexVector::new(
            self.data
                .chunks_exact(self.cols)
                .map(|row| row.iter().zip(v.entries()).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    /// `self^power` by repeated multiplication; `power = 0` gives the identity.
    pub fn pow(&self, power: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                context: "matrix power",
                expected: self.rows,
                found: self.cols,
            });
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..power {
            acc = acc.matmul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> Result<f64> {
        self.check_same_shape("matrix comparison", other)?;
        Ok(max_abs_diff(&self.data, &other.data))
    }

    pub fn approx_eq(&self, other: &ComplexMatrix, tol: f64) -> bool {
        matches!(self.max_abs_diff(other), Ok(d) if d < tol)
    }

    /// `‖M·M† − I‖_max`, or infinity for a non-square matrix.
    pub fn unitarity_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let prod = self.matmul(&self.adjoint()).expect("square");
        prod.max_abs_diff(&Self::identity(self.rows)).expect("same shape")
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() < tol
    }

    /// `‖S†S − I‖_max`, measuring how far the columns are from orthonormal.
    pub fn isometry_defect(&self) -> f64 {
        let prod = self.adjoint().matmul(self).expect("conformable");
        prod.max_abs_diff(&Self::identity(self.cols)).expect("same shape")
    }

    fn check_same_shape(&self, context: &'static str, other: &ComplexMatrix) -> Result<()> {
        check_dim(context, self.rows, other.rows)?;
        check_dim(context, self.cols, other.cols)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Panics on non-conformable shapes; use [`ComplexMatrix::matmul`] when the
/// shapes are not known statically.
impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("non-conformable matrix product")
    }
}

/// Kronecker product; block `(i, j)` of the result is `a[i, j] * b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut data = Vec::with_capacity(rows * cols);
    for ai in 0..a.rows {
        for bi in 0..b.rows {
            for aj in 0..a.cols {
                let x = a[(ai, aj)];
                data.extend(b.data[bi * b.cols..(bi + 1) * b.cols].iter().map(|&y| x * y));
            }
        }
    }
    ComplexMatrix { rows, cols, data }
}

/// Hilbert–Schmidt inner product `tr(A·B†)`; linear in `a`, antilinear in `b`.
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<C64> {
    check_square(a)?;
    check_square(b)?;
    check_dim("Hilbert-Schmidt inner product", a.rows, b.rows)?;
    Ok(dot_conj_right(&a.data, &b.data))
}

/// Gram matrix `G[a, b] = hs_inner(ops[a], ops[b])`.
///
/// Entries are computed row-parallel; each entry is a single sequential sum,
/// so the result does not depend on the thread schedule.
pub fn gram_matrix(ops: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    let m = common_square_dim(ops)?;
    let count = ops.len();
    if count == 0 {
        return Err(Error::InvalidShape {
            rows: 0,
            cols: 0,
            len: 0,
        });
    }
    debug_assert!(m > 0);
    let upper: Vec<Vec<C64>> = (0..count)
        .into_par_iter()
        .map(|a| {
            (a..count)
                .map(|b| dot_conj_right(&ops[a].data, &ops[b].data))
                .collect()
        })
        .collect();
    let mut g = ComplexMatrix::zeros(count, count);
    for (a, row) in upper.iter().enumerate() {
        for (offset, &v) in row.iter().enumerate() {
            let b = a + offset;
            g[(a, b)] = v;
            g[(b, a)] = v.conj();
        }
    }
    Ok(g)
}

/// Dimension of the span of `ops`, read off the spectrum of the Gram matrix.
///
/// When there are more operators than matrix entries the equivalent
/// `m² × m²` second-moment matrix `Σ vec(A)* vec(A)ᵀ` is decomposed instead;
/// it has the same nonzero spectrum as the Gram matrix.
pub fn gram_rank(ops: &[ComplexMatrix], tol: Tolerance) -> Result<usize> {
    if ops.is_empty() {
        return Ok(0);
    }
    let m = common_square_dim(ops)?;
    let entries = m * m;
    let psd = if ops.len() <= entries {
        gram_matrix(ops)?
    } else {
        second_moment_matrix(ops, entries)
    };
    let eigenvalues = hermitian_eigenvalues(&psd)?;
    Ok(count_above_relative(&eigenvalues, tol.relative))
}

fn second_moment_matrix(ops: &[ComplexMatrix], entries: usize) -> ComplexMatrix {
    let rows: Vec<Vec<C64>> = (0..entries)
        .into_par_iter()
        .map(|s| {
            (s..entries)
                .map(|t| ops.iter().map(|op| op.data[s].conj() * op.data[t]).sum())
                .collect()
        })
        .collect();
    let mut h = ComplexMatrix::zeros(entries, entries);
    for (s, row) in rows.iter().enumerate() {
        for (offset, &v) in row.iter().enumerate() {
            let t = s + offset;
            h[(s, t)] = v;
            h[(t, s)] = v.conj();
        }
    }
    h
}

/// Eigenvalues of a Hermitian matrix in nondecreasing order. Only the lower
/// triangle is read.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    check_square(m)?;
    let mat = faer::Mat::<faer::c64>::from_fn(m.rows, m.cols, |i, j| m[(i, j)]);
    mat.self_adjoint_eigenvalues(faer::Side::Lower)
        .map_err(|e| Error::Numerical(format!("{e:?}")))
}

/// Number of eigenvalues strictly above `relative * λ_max`.
pub fn count_above_relative(eigenvalues: &[f64], relative: f64) -> usize {
    let max = eigenvalues.iter().copied().fold(0.0, f64::max);
    if max <= 0.0 {
        return 0;
    }
    let threshold = relative * max;
    eigenvalues.iter().filter(|&&e| e > threshold).count()
}

/// Modified Gram–Schmidt with one reorthogonalization pass.
///
/// Vectors are processed in input order; a vector whose residual norm after
/// projection falls below `tol.absolute` is dropped.
pub fn orthonormalize(vectors: &[ComplexVector], tol: Tolerance) -> Vec<ComplexVector> {
    let mut basis: Vec<ComplexVector> = Vec::new();
    for v in vectors {
        if let Some(first) = basis.first() {
            if first.dim() != v.dim() {
                continue;
            }
        }
        let mut w = v.entries().to_vec();
        for _pass in 0..2 {
            for q in &basis {
                let c = dot_conj_left(q.entries(), &w);
                for (wi, qi) in w.iter_mut().zip(q.entries()) {
                    *wi -= c * qi;
                }
            }
        }
        let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < tol.absolute {
            continue;
        }
        let inv = 1.0 / norm;
        basis.push(ComplexVector::new(w.into_iter().map(|z| z * inv).collect()));
    }
    basis
}

/// `Σ conj(x_i)·y_i`.
fn dot_conj_left(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

/// `Σ x_i·conj(y_i)`.
fn dot_conj_right(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

fn max_abs_diff(x: &[C64], y: &[C64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
}

fn check_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        });
    }
    Ok(())
}

fn check_square(m: &ComplexMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            context: "square matrix required",
            expected: m.rows,
            found: m.cols,
        });
    }
    Ok(())
}

fn common_square_dim(ops: &[ComplexMatrix]) -> Result<usize> {
    let Some(first) = ops.first() else {
        return Ok(0);
    };
    for op in ops {
        check_square(op)?;
        check_dim("operator family", first.rows, op.rows)?;
    }
    Ok(first.rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap()
    }

    fn sigma_y() -> ComplexMatrix {
        ComplexMatrix::new(2, 2, vec![ZERO, c(0.0, 1.0), c(0.0, -1.0), ZERO]).unwrap()
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(kron(&i2, &i2), ComplexMatrix::identity(4));
    }

    #[test]
    fn kron_of_uniform_vectors() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let u = ComplexVector::from_real(&[s, s]);
        let uu = u.kron(&u);
        let expected = ComplexVector::from_real(&[0.5, 0.5, 0.5, 0.5]);
        assert!(uu.max_abs_diff(&expected).unwrap() < 1e-15);

        let as_matrices = kron(&ComplexMatrix::column_matrix(&u), &ComplexMatrix::column_matrix(&u));
        assert_eq!(as_matrices.column(0), uu);
    }

    #[test]
    fn kron_sigma_x_permutes_blocks() {
        let op = kron(&sigma_x(), &ComplexMatrix::identity(2));
        let e11 = ComplexVector::basis(2, 0).kron(&ComplexVector::basis(2, 0));
        let e21 = ComplexVector::basis(2, 1).kron(&ComplexVector::basis(2, 0));
        assert_eq!(op.mul_vec(&e11).unwrap(), e21);
    }

    #[test]
    fn kron_shape_and_blocks() {
        let a = ComplexMatrix::from_fn(2, 3, |i, j| c((i * 3 + j) as f64, 1.0));
        let b = ComplexMatrix::from_fn(3, 2, |i, j| c(0.5, (i + j) as f64));
        let k = kron(&a, &b);
        assert_eq!((k.rows(), k.cols()), (6, 6));
        for i in 0..2 {
            for j in 0..3 {
                for p in 0..3 {
                    for q in 0..2 {
                        assert_eq!(k[(i * 3 + p, j * 2 + q)], a[(i, j)] * b[(p, q)]);
                    }
                }
            }
        }
    }

    #[test]
    fn hs_inner_examples() {
        assert_eq!(
            hs_inner(&ComplexMatrix::identity(5), &ComplexMatrix::identity(5)).unwrap(),
            c(5.0, 0.0)
        );
        assert_eq!(hs_inner(&sigma_x(), &sigma_y()).unwrap(), ZERO);
        assert!(matches!(
            hs_inner(&ComplexMatrix::identity(2), &ComplexMatrix::identity(3)),
            Err(Error::DimensionMismatch { .. })
        ));
        let rect = ComplexMatrix::zeros(2, 3);
        assert!(hs_inner(&rect, &rect).is_err());
    }

    #[test]
    fn gram_rank_examples() {
        let tol = Tolerance::default();
        assert_eq!(gram_rank(&[], tol).unwrap(), 0);
        assert_eq!(gram_rank(&[ComplexMatrix::identity(3)], tol).unwrap(), 1);
        let a = ComplexMatrix::from_fn(3, 3, |i, j| c(i as f64 - j as f64, (i * j) as f64));
        let family = [a.clone(), a.scale(c(2.0, 0.0)), a.scale(c(0.0, 1.0))];
        assert_eq!(gram_rank(&family, tol).unwrap(), 1);
        assert!(gram_rank(&[ComplexMatrix::identity(2), ComplexMatrix::identity(3)], tol).is_err());
        assert_eq!(gram_rank(&[ComplexMatrix::zeros(2, 2)], tol).unwrap(), 0);
    }

    #[test]
    fn gram_rank_uses_second_moment_for_many_operators() {
        // 6 operators in a 4-dimensional operator space; rank is capped at 4.
        let tol = Tolerance::default();
        let ops: Vec<_> = (0..6)
            .map(|k| ComplexMatrix::from_fn(2, 2, |i, j| c(((k + 1) * (i + 2 * j + 1)) as f64 % 5.0, (k * i) as f64)))
            .collect();
        let via_gram = hermitian_eigenvalues(&gram_matrix(&ops).unwrap()).unwrap();
        assert_eq!(gram_rank(&ops, tol).unwrap(), count_above_relative(&via_gram, tol.relative));
        assert!(gram_rank(&ops, tol).unwrap() <= 4);
    }

    #[test]
    fn orthonormalize_examples() {
        let tol = Tolerance::default();
        let v = ComplexVector::from_real(&[1.0, 2.0, 0.0]);
        assert_eq!(orthonormalize(&[v.clone(), v.clone()], tol).len(), 1);
        assert!(orthonormalize(&[ComplexVector::zeros(3)], tol).is_empty());

        let plus = ComplexVector::from_real(&[1.0, 0.0]).kron(&ComplexVector::from_real(&[1.0, 1.0]));
        let minus = ComplexVector::from_real(&[0.0, 1.0]).kron(&ComplexVector::from_real(&[1.0, -1.0]));
        assert!((plus.norm_sqr() - 2.0).abs() < 1e-15);
        let basis = orthonormalize(&[plus, minus], tol);
        assert_eq!(basis.len(), 2);
        assert!(basis[0].inner(&basis[1]).unwrap().norm() < 1e-15);
        for b in &basis {
            assert!((b.norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn tolerance_rejects_nonpositive() {
        assert!(Tolerance::new(0.0, 1e-9).is_err());
        assert!(Tolerance::new(1e-12, -1.0).is_err());
        assert!(Tolerance::new(f64::NAN, 1e-9).is_err());
        assert_eq!(Tolerance::new(1e-12, 1e-9).unwrap(), Tolerance::default());
    }

    #[test]
    fn shape_errors() {
        assert!(ComplexMatrix::new(2, 2, vec![ZERO; 3]).is_err());
        assert!(ComplexMatrix::new(0, 2, vec![]).is_err());
        let a = ComplexMatrix::zeros(2, 3);
        assert!(a.matmul(&a).is_err());
        assert!(a.pow(2).is_err());
        assert!(ComplexMatrix::from_columns(&[]).is_err());
    }

    #[test]
    fn adjoint_and_unitarity() {
        let y = sigma_y();
        assert_eq!(y.adjoint(), y);
        assert!(y.is_unitary(1e-15));
        assert!(!ComplexMatrix::zeros(2, 2).is_unitary(1e-3));
        let a = ComplexMatrix::from_fn(2, 3, |i, j| c(i as f64, j as f64));
        assert_eq!(a.adjoint().adjoint(), a);
    }
}

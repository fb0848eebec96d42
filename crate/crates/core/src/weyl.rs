//! Fourier basis and generalized Pauli (Weyl) operators on ℂⁿ.
//!
//! Conventions follow the construction this crate verifies, which is the
//! reverse of the usual qudit convention: `X` is diagonal in the standard
//! basis, `X e_j = ω^j e_j`, and `Z` is diagonal in the Fourier basis,
//! `Z f_j = ω^j f_j`, with `ω = e^{2πi/n}`. Consequently `X` shifts the
//! Fourier basis (`X f_j = f_{j+1}`) and `Z` shifts the standard basis
//! backwards (`Z e_k = e_{k-1}`). All indices are 0-based.
//!
//! [`WeylLabel`] is an exact representation of `ω^phase · X^kx · Z^kz`;
//! products, powers and adjoints are carried out on the integer exponents
//! using `Z^a X^b = ω^{ab} X^b Z^a`.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{kron, ComplexMatrix, ComplexVector, C64};

/// `ω^k = e^{2πik/n}`, with `k` reduced mod `n` first.
pub fn omega_pow(n: usize, k: i64) -> C64 {
    let r = k.rem_euclid(n as i64);
    if r == 0 {
        return C64::new(1.0, 0.0);
    }
    C64::from_polar(1.0, 2.0 * PI * r as f64 / n as f64)
}

#[derive(Debug, Clone)]
pub struct FourierBasis {
    n: usize,
    vectors: Vec<ComplexVector>,
}

impl FourierBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vectors(&self) -> &[ComplexVector] {
        &self.vectors
    }

    /// `f_j` for a 0-based index reduced mod `n`.
    pub fn vector(&self, j: usize) -> &ComplexVector {
        &self.vectors[j % self.n]
    }

    /// The unitary whose columns are `f_0 .. f_{n-1}`.
    pub fn matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_columns(&self.vectors).expect("nonempty basis")
    }
}

/// Columns of the complex Hadamard matrix `a_{jk} = ω^{jk}`, scaled by `1/√n`.
pub fn fourier_basis(n: usize) -> Result<FourierBasis> {
    if n == 0 {
        return Err(Error::InvalidParameter("Fourier basis needs n >= 1".into()));
    }
    let scale = 1.0 / (n as f64).sqrt();
    let vectors = (0..n)
        .map(|j| {
            ComplexVector::new(
                (0..n)
                    .map(|k| omega_pow(n, (j * k) as i64) * scale)
                    .collect(),
            )
        })
        .collect();
    Ok(FourierBasis { n, vectors })
}

/// `X = diag(1, ω, …, ω^{n-1})`.
pub fn x_matrix(n: usize) -> ComplexMatrix {
    let diag: Vec<C64> = (0..n).map(|j| omega_pow(n, j as i64)).collect();
    ComplexMatrix::diagonal(&diag)
}

/// `Z = F·diag(1, ω, …, ω^{n-1})·F†`, built from the Fourier basis.
pub fn z_matrix(n: usize) -> ComplexMatrix {
    let f = fourier_basis(n).expect("n >= 1").matrix();
    &(&f * &x_matrix(n)) * &f.adjoint()
}

/// Exact label of the scaled Weyl operator `ω^phase_exp · X^kx · Z^kz`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylLabel {
    n: usize,
    kx: usize,
    kz: usize,
    phase_exp: usize,
}

impl WeylLabel {
    /// Reduces all exponents into `[0, n)`.
    pub fn new(n: usize, kx: i64, kz: i64, phase_exp: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("Weyl label needs n >= 1".into()));
        }
        let m = n as i64;
        Ok(Self {
            n,
            kx: kx.rem_euclid(m) as usize,
            kz: kz.rem_euclid(m) as usize,
            phase_exp: phase_exp.rem_euclid(m) as usize,
        })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n > 0);
        Self {
            n,
            kx: 0,
            kz: 0,
            phase_exp: 0,
        }
    }

    /// `X^kx Z^kz` with trivial phase.
    pub fn xz(n: usize, kx: usize, kz: usize) -> Self {
        assert!(n > 0);
        Self {
            n,
            kx: kx % n,
            kz: kz % n,
            phase_exp: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kx(&self) -> usize {
        self.kx
    }

    pub fn kz(&self) -> usize {
        self.kz
    }

    pub fn phase_exp(&self) -> usize {
        self.phase_exp
    }

    pub fn exponents(&self) -> (usize, usize) {
        (self.kx, self.kz)
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.kx == 0 && self.kz == 0
    }

    pub fn phase(&self) -> C64 {
        omega_pow(self.n, self.phase_exp as i64)
    }

    pub fn mul(&self, other: &WeylLabel) -> Result<WeylLabel> {
        label_mul(self, other)
    }

    pub fn pow(&self, s: usize) -> WeylLabel {
        label_pow(self, s)
    }

    pub fn adjoint(&self) -> WeylLabel {
        label_adjoint(self)
    }

    pub fn dense(&self) -> ComplexMatrix {
        weyl_dense(self)
    }

    /// Image of the standard basis vector `e_k`: returns `(target, phase
    /// exponent)` with `ω^phase · X^kx Z^kz e_k = ω^e · e_target`.
    pub fn act_on_basis(&self, k: usize) -> (usize, usize) {
        let n = self.n;
        let target = (k + n - self.kz) % n;
        let e = (self.phase_exp + self.kx * target) % n;
        (target, e)
    }
}

impl fmt::Display for WeylLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.phase_exp != 0 {
            write!(f, "w^{}·", self.phase_exp)?;
        }
        match (self.kx, self.kz) {
            (0, 0) => write!(f, "I"),
            (x, 0) => write!(f, "X^{x}"),
            (0, z) => write!(f, "Z^{z}"),
            (x, z) => write!(f, "X^{x}Z^{z}"),
        }
    }
}

/// Dense realization `ω^phase · X^kx · Z^kz`, computed by matrix products
/// of the diagonal `X` and the Fourier-conjugated `Z`.
pub fn weyl_dense(label: &WeylLabel) -> ComplexMatrix {
    let n = label.n;
    let xk = x_matrix(n).pow(label.kx).expect("square");
    let zk = z_matrix(n).pow(label.kz).expect("square");
    (&xk * &zk).scale(label.phase())
}

/// Product `a·b` in canonical X-then-Z order.
///
/// `X^a Z^b X^c Z^d = ω^{bc} X^{a+c} Z^{b+d}`.
pub fn label_mul(a: &WeylLabel, b: &WeylLabel) -> Result<WeylLabel> {
    if a.n != b.n {
        return Err(Error::ModulusMismatch {
            left: a.n,
            right: b.n,
        });
    }
    let n = a.n;
    Ok(WeylLabel {
        n,
        kx: (a.kx + b.kx) % n,
        kz: (a.kz + b.kz) % n,
        phase_exp: (a.phase_exp + b.phase_exp + a.kz * b.kx) % n,
    })
}

pub fn label_pow(a: &WeylLabel, s: usize) -> WeylLabel {
    let mut acc = WeylLabel::identity(a.n);
    for _ in 0..s {
        acc = label_mul(&acc, a).expect("same modulus");
    }
    acc
}

/// `(ω^p X^a Z^b)† = ω^{ab - p} X^{-a} Z^{-b}`.
pub fn label_adjoint(a: &WeylLabel) -> WeylLabel {
    let n = a.n;
    WeylLabel {
        n,
        kx: (n - a.kx) % n,
        kz: (n - a.kz) % n,
        phase_exp: ((a.kx * a.kz) % n + n - a.phase_exp) % n,
    }
}

/// A tensor product `L ⊗ R` of two Weyl labels on ℂⁿ ⊗ ℂⁿ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylLabelPair {
    left: WeylLabel,
    right: WeylLabel,
}

/// Exponents `(kx_left, kz_left, kx_right, kz_right)`; the span-relevant part
/// of a label pair.
pub type ExponentQuad = (usize, usize, usize, usize);

impl WeylLabelPair {
    pub fn new(left: WeylLabel, right: WeylLabel) -> Result<Self> {
        if left.n != right.n {
            return Err(Error::ModulusMismatch {
                left: left.n,
                right: right.n,
            });
        }
        Ok(Self { left, right })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            left: WeylLabel::identity(n),
            right: WeylLabel::identity(n),
        }
    }

    /// `X^m Z^k ⊗ X^j Z^s` with trivial phases.
    pub fn xz(n: usize, m: usize, k: usize, j: usize, s: usize) -> Self {
        Self {
            left: WeylLabel::xz(n, m, k),
            right: WeylLabel::xz(n, j, s),
        }
    }

    pub fn n(&self) -> usize {
        self.left.n
    }

    pub fn left(&self) -> &WeylLabel {
        &self.left
    }

    pub fn right(&self) -> &WeylLabel {
        &self.right
    }

    pub fn exponents(&self) -> ExponentQuad {
        (self.left.kx, self.left.kz, self.right.kx, self.right.kz)
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.left.is_identity_up_to_phase() && self.right.is_identity_up_to_phase()
    }

    pub fn adjoint(&self) -> Self {
        Self {
            left: label_adjoint(&self.left),
            right: label_adjoint(&self.right),
        }
    }

    pub fn mul(&self, other: &WeylLabelPair) -> Result<Self> {
        Ok(Self {
            left: label_mul(&self.left, &other.left)?,
            right: label_mul(&self.right, &other.right)?,
        })
    }

    /// Dense `n² × n²` realization `weyl_dense(left) ⊗ weyl_dense(right)`.
    pub fn dense(&self) -> ComplexMatrix {
        kron(&weyl_dense(&self.left), &weyl_dense(&self.right))
    }

    /// Applies the operator to every column of `m` (shape `n² × c`) using the
    /// monomial structure of Weyl operators, without forming the dense matrix.
    pub fn apply_columns(&self, m: &ComplexMatrix) -> Result<ComplexMatrix> {
        let n = self.n();
        let dim = n * n;
        if m.rows() != dim {
            return Err(Error::DimensionMismatch {
                context: "Weyl operator application",
                expected: dim,
                found: m.rows(),
            });
        }
        let phases: Vec<C64> = (0..n).map(|t| omega_pow(n, t as i64)).collect();
        let mut out = ComplexMatrix::zeros(dim, m.cols());
        for k1 in 0..n {
            let (t1, e1) = self.left.act_on_basis(k1);
            for k2 in 0..n {
                let (t2, e2) = self.right.act_on_basis(k2);
                let phase = phases[(e1 + e2) % n];
                let (src, dst) = (k1 * n + k2, t1 * n + t2);
                for c in 0..m.cols() {
                    out[(dst, c)] = phase * m[(src, c)];
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &ComplexVector) -> Result<ComplexVector> {
        Ok(self.apply_columns(&ComplexMatrix::column_matrix(v))?.column(0))
    }
}

impl fmt::Display for WeylLabelPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.left, self.right)
    }
}

//! Builders for the three graph/code families, the residue set that governs
//! the entangled construction, closed-form dimension claims and the
//! classical dimension bounds they are compared against.
//!
//! * `section2`: Pauli errors on ℂ² ⊗ ℂ² with the code `span{f₊, f₋}`.
//! * `section3`: powers of `XZ^k ⊗ I` and `I ⊗ XZ^k` on ℂⁿ ⊗ ℂⁿ with the
//!   separable code `span{f_j ⊗ f_j}`.
//! * `section4`: the enlarged graph `Lin(𝒜 ∪ ℬ ∪ 𝒞 ∪ 𝒱)` with the entangled
//!   code spanned by subgroup-coset vectors `q_k`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CodeSpace, GraphMetadata, OperatorGraph};
use crate::linalg::{kron, ComplexMatrix, ComplexVector, Tolerance, C64, ONE, ZERO};
use crate::weyl::{fourier_basis, label_pow, x_matrix, z_matrix, WeylLabel, WeylLabelPair};

pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::new(2, 2, vec![ZERO, ONE, ONE, ZERO]).expect("2x2")
}

/// `σ_y` with the sign convention `[[0, i], [-i, 0]]`.
pub fn sigma_y() -> ComplexMatrix {
    let i = C64::new(0.0, 1.0);
    ComplexMatrix::new(2, 2, vec![ZERO, i, -i, ZERO]).expect("2x2")
}

pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::new(2, 2, vec![ONE, ZERO, ZERO, -ONE]).expect("2x2")
}

/// The four errors `T = σx⊗I`, `U = σy⊗I`, `V = I⊗σy`, `W = I⊗σz`.
pub fn section2_errors() -> Vec<(&'static str, ComplexMatrix)> {
    let i2 = ComplexMatrix::identity(2);
    vec![
        ("T", kron(&sigma_x(), &i2)),
        ("U", kron(&sigma_y(), &i2)),
        ("V", kron(&i2, &sigma_y())),
        ("W", kron(&i2, &sigma_z())),
    ]
}

/// Unnormalized `f₊ = e₁⊗(1,1)` and `f₋ = e₂⊗(1,−1)`.
pub fn section2_code_vectors() -> (ComplexVector, ComplexVector) {
    let plus = ComplexVector::from_real(&[1.0, 0.0]).kron(&ComplexVector::from_real(&[1.0, 1.0]));
    let minus = ComplexVector::from_real(&[0.0, 1.0]).kron(&ComplexVector::from_real(&[1.0, -1.0]));
    (plus, minus)
}

/// `(label, ⟨a, x b⟩)` for `x ∈ {T, U, V, W}` and `a, b ∈ {f₊, f₋}`.
pub fn proposition1_inner_products() -> Vec<(String, C64)> {
    let (plus, minus) = section2_code_vectors();
    let words = [("f+", &plus), ("f-", &minus)];
    let mut out = Vec::with_capacity(16);
    for (name, x) in section2_errors() {
        for (a_name, a) in words {
            for (b_name, b) in words {
                let value = a.inner(&x.mul_vec(b).expect("4x4")).expect("dim 4");
                out.push((format!("({a_name}, {name} {b_name})"), value));
            }
        }
    }
    out
}

/// Graph spanned by the identity and the named subset of `T, U, V, W`.
pub fn build_section2_subset(names: &[&str]) -> Result<OperatorGraph> {
    let errors = section2_errors();
    let mut ops = Vec::with_capacity(names.len());
    for name in names {
        let (_, m) = errors
            .iter()
            .find(|(n, _)| n == name)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown generator {name:?}; expected T, U, V or W")))?;
        ops.push(m.clone());
    }
    OperatorGraph::from_dense(4, ops, Tolerance::default(), GraphMetadata::new("section2"))
}

pub fn build_section2() -> Result<(OperatorGraph, CodeSpace)> {
    let graph = build_section2_subset(&["T", "U", "V", "W"])?;
    let (plus, minus) = section2_code_vectors();
    let code = CodeSpace::from_vectors(&[plus, minus], vec!["f+".into(), "f-".into()], Tolerance::default())?;
    Ok((graph, code))
}

/// `Lin{I⊗I, I⊗σx}` with the code `ℂ² ⊗ (1, 0)ᵀ`.
pub fn build_bit_flip_example() -> Result<(OperatorGraph, CodeSpace)> {
    let op = kron(&ComplexMatrix::identity(2), &sigma_x());
    let graph = OperatorGraph::from_dense(4, vec![op], Tolerance::default(), GraphMetadata::new("bit-flip"))?;
    let e0 = ComplexVector::basis(2, 0);
    let code = CodeSpace::from_vectors(
        &[e0.kron(&e0), ComplexVector::basis(2, 1).kron(&e0)],
        vec!["e1⊗e1".into(), "e2⊗e1".into()],
        Tolerance::default(),
    )?;
    Ok((graph, code))
}

fn check_section3_n(n: usize, allow_degenerate: bool) -> Result<()> {
    let min = if allow_degenerate { 2 } else { 3 };
    if n < min {
        return Err(Error::InvalidParameter(if allow_degenerate || n < 2 {
            format!("section3 requires n >= 2 (got n = {n})")
        } else {
            format!("section3 requires n > 2 (got n = {n}); use the degenerate override for n = 2")
        }));
    }
    Ok(())
}

/// Labels of `(U_k)^s = (XZ^k)^s ⊗ I` and `(V_k)^s = I ⊗ (XZ^k)^s` for
/// `0 ≤ k < n`, `1 ≤ s < n`.
pub fn section3_labels(n: usize) -> Vec<WeylLabelPair> {
    let id = WeylLabel::identity(n);
    let mut out = Vec::with_capacity(2 * n * (n - 1));
    for k in 0..n {
        for s in 1..n {
            let power = label_pow(&WeylLabel::xz(n, 1, k), s);
            out.push(WeylLabelPair::new(power, id).expect("same n"));
            out.push(WeylLabelPair::new(id, power).expect("same n"));
        }
    }
    out
}

/// `span{h_j = f_j ⊗ f_j}`.
pub fn section3_code(n: usize) -> Result<CodeSpace> {
    let basis = fourier_basis(n)?;
    let vectors: Vec<ComplexVector> = basis.vectors().iter().map(|f| f.kron(f)).collect();
    let names = (1..=n).map(|j| format!("h_{j}")).collect();
    CodeSpace::from_vectors(&vectors, names, Tolerance::default())
}

pub fn build_section3(n: usize, allow_degenerate: bool) -> Result<(OperatorGraph, CodeSpace)> {
    check_section3_n(n, allow_degenerate)?;
    let meta = GraphMetadata::new("section3").with_param("n", n as i64);
    let graph = OperatorGraph::from_labels(n, section3_labels(n), meta)?;
    Ok((graph, section3_code(n)?))
}

/// Largest `|⟨h_j, W h_m⟩|` over `W ∈ {(U_k)^s, (V_k)^s}`, with the powers
/// formed by dense matrix multiplication.
pub fn proposition2_residual(n: usize) -> Result<f64> {
    check_section3_n(n, true)?;
    let code = section3_code(n)?;
    let h: Vec<ComplexVector> = code.isometry().columns();
    let (x, z) = (x_matrix(n), z_matrix(n));
    let id = ComplexMatrix::identity(n);
    let mut worst: f64 = 0.0;
    for k in 0..n {
        let xz_k = &x * &z.pow(k)?;
        for s in 1..n {
            let power = xz_k.pow(s)?;
            for op in [kron(&power, &id), kron(&id, &power)] {
                for hj in &h {
                    for hm in &h {
                        worst = worst.max(hj.inner(&op.mul_vec(hm)?)?.norm());
                    }
                }
            }
        }
    }
    Ok(worst)
}

/// Parameters `(p, y, h, d)` of the entangled construction, `n = p·y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Section4Params {
    pub p: usize,
    pub y: usize,
    pub h: usize,
    pub d: usize,
}

impl Section4Params {
    pub fn new(p: usize, y: usize, h: usize, d: usize) -> Result<Self> {
        Self::with_override(p, y, h, d, false)
    }

    /// `allow_degenerate` admits `d = 1`, which gives a one-dimensional code.
    pub fn with_override(p: usize, y: usize, h: usize, d: usize, allow_degenerate: bool) -> Result<Self> {
        let fail = |msg: String| Err(Error::InvalidParameter(msg));
        if p < 2 {
            return fail(format!("p >= 2 violated: p = {p}"));
        }
        if y < 2 {
            return fail(format!("y >= 2 violated: y = {y}"));
        }
        let d_min = if allow_degenerate { 1 } else { 2 };
        if d < d_min {
            return fail(if d == 1 {
                "d >= 2 violated: d = 1 gives a one-dimensional code (use the degenerate override)".to_string()
            } else {
                format!("d >= {d_min} violated: d = {d}")
            });
        }
        if (h + 1) * (d + 1) < y {
            return fail(format!(
                "(h+1)(d+1) >= y violated: ({h}+1)({d}+1) = {} < {y}",
                (h + 1) * (d + 1)
            ));
        }
        if y < (h + 1) * d {
            return fail(format!("y >= (h+1)d violated: {y} < ({h}+1)·{d} = {}", (h + 1) * d));
        }
        Ok(Self { p, y, h, d })
    }

    pub fn n(&self) -> usize {
        self.p * self.y
    }

    /// All parameter points with `d ≥ 2` and `p·y ≤ n_max`, sorted by
    /// `(n, p, y, h, d)`.
    pub fn enumerate(n_max: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for n in 4..=n_max {
            for p in 2..=n / 2 {
                if n % p != 0 {
                    continue;
                }
                let y = n / p;
                for h in 0..y {
                    for d in 2..=y {
                        if let Ok(params) = Self::new(p, y, h, d) {
                            out.push(params);
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Section4Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p={}, y={}, h={}, d={})", self.p, self.y, self.h, self.d)
    }
}

/// Shifts `m` whose residue mod `y` avoids `(d−j)(h+1)` and `y+(j−d)(h+1)`
/// for every `1 ≤ j ≤ d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueSetA {
    pub y: usize,
    pub h: usize,
    pub d: usize,
    allowed: BTreeSet<usize>,
}

impl ResidueSetA {
    pub fn allowed(&self) -> &BTreeSet<usize> {
        &self.allowed
    }

    pub fn contains(&self, m: usize) -> bool {
        self.allowed.contains(&(m % self.y))
    }

    /// Members of `A` in `[0, limit)`.
    pub fn members(&self, limit: usize) -> Vec<usize> {
        (0..limit).filter(|&m| self.contains(m)).collect()
    }

    /// `#A′ = #(A ∩ [1, n))`.
    pub fn count_a_prime(&self, n: usize) -> usize {
        (1..n).filter(|&m| self.contains(m)).count()
    }
}

pub fn residue_set_a(y: usize, h: usize, d: usize) -> ResidueSetA {
    assert!(y > 0);
    let (yi, step, di) = (y as i64, (h + 1) as i64, d as i64);
    let mut excluded = BTreeSet::new();
    for j in 1..=di {
        excluded.insert(((di - j) * step).rem_euclid(yi) as usize);
        excluded.insert((yi + (j - di) * step).rem_euclid(yi) as usize);
    }
    let allowed = (0..y).filter(|r| !excluded.contains(r)).collect();
    ResidueSetA { y, h, d, allowed }
}

/// Normalized `q_1 … q_d`: `q_1` is the uniform superposition of `f_j ⊗ f_j`
/// over the order-`p` subgroup `{0, y, …, (p−1)y}` of ℤ_n and
/// `q_{k+1} = (X^{h+1} ⊗ X^{h+1}) q_k`.
pub fn q_vectors(params: &Section4Params) -> Result<Vec<ComplexVector>> {
    let n = params.n();
    let basis = fourier_basis(n)?;
    let mut q1 = ComplexVector::zeros(n * n);
    for t in 0..params.p {
        let f = basis.vector(t * params.y);
        for (acc, v) in q1.entries_mut().iter_mut().zip(f.kron(f).entries()) {
            *acc += v;
        }
    }
    let q1 = q1.scale(C64::new(1.0 / (params.p as f64).sqrt(), 0.0));
    let step = x_matrix(n).pow(params.h + 1)?;
    let shift = kron(&step, &step);
    let mut out = vec![q1];
    for _ in 1..params.d {
        let next = shift.mul_vec(out.last().expect("nonempty"))?;
        out.push(next);
    }
    Ok(out)
}

pub fn build_code_k1(params: &Section4Params) -> Result<CodeSpace> {
    let names = (1..=params.d).map(|k| format!("q_{k}")).collect();
    CodeSpace::from_vectors(&q_vectors(params)?, names, Tolerance::default())
}

/// 𝒜: `X^m Z^k ⊗ X^j Z^s` with `m ≠ j`.
pub fn family_a(n: usize) -> Vec<WeylLabelPair> {
    let mut out = Vec::with_capacity(n * n * n * (n - 1));
    for m in 0..n {
        for j in (0..n).filter(|&j| j != m) {
            for k in 0..n {
                for s in 0..n {
                    out.push(WeylLabelPair::xz(n, m, k, j, s));
                }
            }
        }
    }
    out
}

/// ℬ: `X^m Z^k ⊗ X^m Z^s` with `m ∈ A`.
pub fn family_b(params: &Section4Params) -> Vec<WeylLabelPair> {
    let n = params.n();
    let a = residue_set_a(params.y, params.h, params.d);
    let mut out = Vec::new();
    for m in a.members(n) {
        for k in 0..n {
            for s in 0..n {
                out.push(WeylLabelPair::xz(n, m, k, m, s));
            }
        }
    }
    out
}

/// 𝒞: `X^m Z^k ⊗ X^m Z^s` with `k + s ≢ 0 (mod p)`.
pub fn family_c(params: &Section4Params) -> Vec<WeylLabelPair> {
    let n = params.n();
    let mut out = Vec::new();
    for m in 0..n {
        for k in 0..n {
            for s in 0..n {
                if (k + s) % params.p != 0 {
                    out.push(WeylLabelPair::xz(n, m, k, m, s));
                }
            }
        }
    }
    out
}

fn section4_meta(name: &str, params: &Section4Params) -> GraphMetadata {
    GraphMetadata::new(name)
        .with_param("p", params.p as i64)
        .with_param("y", params.y as i64)
        .with_param("h", params.h as i64)
        .with_param("d", params.d as i64)
}

/// `𝒱₁ = Lin(𝒜 ∪ ℬ ∪ 𝒞 ∪ 𝒱)` with the code `K₁ = span{q_k}`.
pub fn build_section4(params: &Section4Params) -> Result<(OperatorGraph, CodeSpace)> {
    let n = params.n();
    let pairs = family_a(n)
        .into_iter()
        .chain(family_b(params))
        .chain(family_c(params))
        .chain(section3_labels(n));
    let graph = OperatorGraph::from_labels(n, pairs, section4_meta("section4", params))?;
    Ok((graph, build_code_k1(params)?))
}

/// `Lin(𝒜 ∪ {I})` with the separable code `span{h_j}`.
pub fn build_remark2(params: &Section4Params) -> Result<(OperatorGraph, CodeSpace)> {
    let n = params.n();
    let graph = OperatorGraph::from_labels(n, family_a(n), section4_meta("remark2", params))?;
    Ok((graph, section3_code(n)?))
}

/// Residuals of the three facts the anticlique argument for `K₁` uses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProofStepResiduals {
    /// `max |⟨(X^m⊗X^m) q_k, q_j⟩|` over `m ∈ A′` and all `k, j`.
    pub b_orthogonality: f64,
    /// `max |⟨(I⊗Z^{k+s}) q_1, q_1⟩|` over `k + s ≢ 0 (mod p)`.
    pub c_orthogonality: f64,
    /// `max ‖(X^y⊗X^y) q_k − q_k‖_max`.
    pub period_invariance: f64,
}

impl ProofStepResiduals {
    pub fn max(&self) -> f64 {
        self.b_orthogonality.max(self.c_orthogonality).max(self.period_invariance)
    }
}

pub fn section4_proof_checks(params: &Section4Params) -> Result<ProofStepResiduals> {
    let n = params.n();
    let q = q_vectors(params)?;
    let x = x_matrix(n);
    let a = residue_set_a(params.y, params.h, params.d);

    let mut b_orthogonality: f64 = 0.0;
    for m in (1..n).filter(|&m| a.contains(m)) {
        let xm = x.pow(m)?;
        let shift = kron(&xm, &xm);
        for qk in &q {
            let moved = shift.mul_vec(qk)?;
            for qj in &q {
                b_orthogonality = b_orthogonality.max(moved.inner(qj)?.norm());
            }
        }
    }

    let z = z_matrix(n);
    let id = ComplexMatrix::identity(n);
    let mut c_orthogonality: f64 = 0.0;
    for r in (1..n).filter(|r| r % params.p != 0) {
        let op = kron(&id, &z.pow(r)?);
        c_orthogonality = c_orthogonality.max(op.mul_vec(&q[0])?.inner(&q[0])?.norm());
    }

    let xy = x.pow(params.y)?;
    let period = kron(&xy, &xy);
    let mut period_invariance: f64 = 0.0;
    for qk in &q {
        period_invariance = period_invariance.max(period.mul_vec(qk)?.max_abs_diff(qk)?);
    }

    Ok(ProofStepResiduals {
        b_orthogonality,
        c_orthogonality,
        period_invariance,
    })
}

/// `2n(n−1) + 1`, the claimed dimension of the `section3` graph.
pub fn theorem2_dim(n: usize) -> u64 {
    let n = n as u64;
    2 * n * (n.saturating_sub(1)) + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Theorem4Prediction {
    pub value: u64,
    pub a_prime_count: u64,
    pub r_a: u64,
}

/// `n³(n−1) + #A′·n² + (n − #A′)·(y(p−1)(p+2)/2 + n(y−1)/2) + 1`.
pub fn theorem4_dim(params: &Section4Params) -> Theorem4Prediction {
    let (p, y) = (params.p as u64, params.y as u64);
    let n = p * y;
    let a_prime = residue_set_a(params.y, params.h, params.d).count_a_prime(params.n()) as u64;
    let r_a = n - a_prime;
    let per_shift = y * (p - 1) * (p + 2) / 2 + n * (y - 1) / 2;
    Theorem4Prediction {
        value: n * n * n * (n - 1) + a_prime * n * n + r_a * per_shift + 1,
        a_prime_count: a_prime,
        r_a,
    }
}

/// Closed-form dimension claims. These are claims under test, never ground
/// truth; `paper_claimed` is always set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PredictedDims {
    pub n: usize,
    pub thm2: u64,
    pub thm4: Option<Theorem4Prediction>,
    pub params: Option<Section4Params>,
    pub paper_claimed: bool,
}

pub fn predicted_dims(n: usize, params: Option<&Section4Params>) -> PredictedDims {
    PredictedDims {
        n,
        thm2: theorem2_dim(n),
        thm4: params.map(theorem4_dim),
        params: params.copied(),
        paper_claimed: true,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Largest `v` with `v(v+1) ≤ dim H / dim K`.
    pub knill_max: u64,
    /// `⌊(dim H − dim K)/(dim K − 1)⌋`, the commutative-graph bound.
    pub commutative_max: u64,
}

pub fn baseline_bounds(dim_h: usize, dim_k: usize) -> Result<Bounds> {
    if dim_k < 2 {
        return Err(Error::InvalidParameter(format!("bounds need dim K >= 2 (got {dim_k})")));
    }
    if dim_h < dim_k {
        return Err(Error::InvalidParameter(format!("bounds need dim H >= dim K (got {dim_h} < {dim_k})")));
    }
    let (h, k) = (dim_h as u64, dim_k as u64);
    let mut v = 0u64;
    while (v + 1) * (v + 2) * k <= h {
        v += 1;
    }
    Ok(Bounds {
        knill_max: v,
        commutative_max: (h - k) / (k - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graph_dim, is_anticlique, DimMethod};

    #[test]
    fn two_qubit_inner_products_vanish() {
        let values = proposition1_inner_products();
        assert_eq!(values.len(), 16);
        for (name, v) in values {
            assert!(v.norm() < 1e-12, "{name} = {v}");
        }
    }

    #[test]
    fn two_qubit_graph_and_code() {
        let (g, code) = build_section2().unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(code.code_dim(), 2);
        assert_eq!(graph_dim(&g, DimMethod::Gram, Tolerance::default()).unwrap().gram, Some(5));
        assert!(is_anticlique(&g, &code, Tolerance::default()).unwrap().verdict);
        assert!(build_section2_subset(&["Q"]).is_err());
    }

    #[test]
    fn separable_rejects_small_n() {
        let err = build_section3(2, false).unwrap_err();
        assert!(err.to_string().contains("n > 2"));
        assert!(build_section3(2, true).is_ok());
        assert!(build_section3(1, true).is_err());
    }

    #[test]
    fn residue_set_examples() {
        let a = residue_set_a(4, 1, 2);
        assert_eq!(a.allowed().iter().copied().collect::<Vec<_>>(), vec![1, 3]);
        assert!(residue_set_a(2, 0, 2).allowed().is_empty());
        for (y, h, d) in [(3, 0, 2), (5, 1, 2), (6, 2, 2), (7, 0, 6)] {
            assert!(!residue_set_a(y, h, d).contains(0));
        }
        assert_eq!(a.members(8), vec![1, 3, 5, 7]);
        assert_eq!(a.count_a_prime(8), 4);
    }

    #[test]
    fn params_validation() {
        assert!(Section4Params::new(2, 4, 1, 2).is_ok());
        let err = Section4Params::new(2, 7, 1, 2).unwrap_err().to_string();
        assert!(err.contains("(h+1)(d+1) >= y"), "{err}");
        let err = Section4Params::new(2, 3, 1, 2).unwrap_err().to_string();
        assert!(err.contains("y >= (h+1)d"), "{err}");
        assert!(Section4Params::new(1, 4, 1, 2).is_err());
        assert!(Section4Params::new(2, 1, 0, 2).is_err());
        assert!(Section4Params::new(2, 2, 0, 1).is_err());
        assert!(Section4Params::with_override(2, 2, 0, 1, true).is_ok());
        assert_eq!(Section4Params::new(3, 4, 1, 2).unwrap().n(), 12);
    }

    #[test]
    fn enumerate_is_sorted_and_valid() {
        let all = Section4Params::enumerate(12);
        assert!(all.contains(&Section4Params { p: 2, y: 4, h: 1, d: 2 }));
        assert!(all.iter().all(|p| p.n() <= 12 && p.d >= 2));
        let keys: Vec<_> = all.iter().map(|p| (p.n(), p.p, p.y, p.h, p.d)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(Section4Params::enumerate(3).is_empty());
    }

    #[test]
    fn q_vectors_for_reference_params() {
        // q_1 ∝ f_0⊗f_0 + f_4⊗f_4, q_2 ∝ f_2⊗f_2 + f_6⊗f_6 (0-based).
        let params = Section4Params::new(2, 4, 1, 2).unwrap();
        let q = q_vectors(&params).unwrap();
        let basis = fourier_basis(8).unwrap();
        let hh = |j: usize| basis.vector(j).kron(basis.vector(j));
        let s = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let add = |a: ComplexVector, b: ComplexVector| {
            ComplexVector::new(a.entries().iter().zip(b.entries()).map(|(x, y)| (x + y) * s).collect())
        };
        assert!(q[0].max_abs_diff(&add(hh(0), hh(4))).unwrap() < 1e-12);
        assert!(q[1].max_abs_diff(&add(hh(2), hh(6))).unwrap() < 1e-12);
    }

    #[test]
    fn bounds_examples() {
        let b = |h, k| baseline_bounds(h, k).unwrap();
        assert_eq!(b(16, 2), Bounds { knill_max: 2, commutative_max: 14 });
        assert_eq!(b(81, 3), Bounds { knill_max: 4, commutative_max: 39 });
        assert_eq!(b(4, 2), Bounds { knill_max: 1, commutative_max: 2 });
        assert!(baseline_bounds(4, 1).is_err());
        assert!(baseline_bounds(2, 3).is_err());
    }

    #[test]
    fn formula_arithmetic() {
        assert_eq!(theorem2_dim(3), 13);
        assert_eq!(theorem2_dim(4), 25);
        let t4 = theorem4_dim(&Section4Params::new(2, 4, 1, 2).unwrap());
        assert_eq!(t4, Theorem4Prediction { value: 3921, a_prime_count: 4, r_a: 4 });
        let pd = predicted_dims(8, Some(&Section4Params::new(2, 4, 1, 2).unwrap()));
        assert!(pd.paper_claimed);
        assert_eq!(pd.thm2, 113);
    }
}

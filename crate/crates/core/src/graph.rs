//! Operator graphs (operator systems), code spaces and the anticlique test.
//!
//! A graph is stored as a generating family that always contains the
//! identity and the adjoint of every generator. Graphs made of Weyl tensor
//! operators keep their exact labels, which gives a second way to count
//! the span dimension: distinct exponent quadruples are Hilbert–Schmidt
//! orthogonal, so their number is the dimension.

use std::collections::HashSet;
use std::fmt;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{gram_rank, orthonormalize, ComplexMatrix, ComplexVector, Tolerance, C64};
use crate::weyl::{ExponentQuad, WeylLabelPair};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphMetadata {
    pub name: String,
    pub params: Vec<(String, i64)>,
}

impl GraphMetadata {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            params: Vec::new(),
        }
    }

    pub fn with_param(mut self, key: impl Into<String>, value: i64) -> Self {
        self.params.push((key.into(), value));
        self
    }
}

#[derive(Debug, Clone)]
pub enum Generators {
    Dense(Vec<ComplexMatrix>),
    Labels(Vec<WeylLabelPair>),
}

#[derive(Debug, Clone)]
pub struct OperatorGraph {
    space_dim: usize,
    generators: Generators,
    metadata: GraphMetadata,
}

impl OperatorGraph {
    /// Graph spanned by dense operators, closed under adjoints and
    /// containing the identity. Operators equal (within `tol.absolute`) to
    /// one already present are skipped.
    pub fn from_dense(
        space_dim: usize,
        ops: Vec<ComplexMatrix>,
        tol: Tolerance,
        metadata: GraphMetadata,
    ) -> Result<Self> {
        for op in &ops {
            if op.rows() != space_dim || op.cols() != space_dim {
                return Err(Error::DimensionMismatch {
                    context: "graph generator",
                    expected: space_dim,
                    found: if op.rows() != space_dim { op.rows() } else { op.cols() },
                });
            }
        }
        let mut gens: Vec<ComplexMatrix> = vec![ComplexMatrix::identity(space_dim)];
        let mut push_unique = |m: ComplexMatrix| {
            if !gens.iter().any(|g| g.approx_eq(&m, tol.absolute)) {
                gens.push(m);
            }
        };
        for op in &ops {
            push_unique(op.clone());
        }
        for op in &ops {
            push_unique(op.adjoint());
        }
        Ok(Self {
            space_dim,
            generators: Generators::Dense(gens),
            metadata,
        })
    }

    /// See [`graph_from_labels`].
    pub fn from_labels(
        n: usize,
        pairs: impl IntoIterator<Item = WeylLabelPair>,
        metadata: GraphMetadata,
    ) -> Result<Self> {
        let pairs: Vec<WeylLabelPair> = pairs.into_iter().collect();
        if let Some(bad) = pairs.iter().find(|p| p.n() != n) {
            return Err(Error::ModulusMismatch {
                left: n,
                right: bad.n(),
            });
        }
        let mut seen: HashSet<ExponentQuad> = HashSet::new();
        let mut gens = Vec::with_capacity(2 * pairs.len() + 1);
        let candidates = std::iter::once(WeylLabelPair::identity(n))
            .chain(pairs.iter().copied())
            .chain(pairs.iter().map(WeylLabelPair::adjoint));
        for pair in candidates {
            if seen.insert(pair.exponents()) {
                gens.push(pair);
            }
        }
        Ok(Self {
            space_dim: n * n,
            generators: Generators::Labels(gens),
            metadata,
        })
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn metadata(&self) -> &GraphMetadata {
        &self.metadata
    }

    pub fn generators(&self) -> &Generators {
        &self.generators
    }

    pub fn len(&self) -> usize {
        match &self.generators {
            Generators::Dense(g) => g.len(),
            Generators::Labels(g) => g.len(),
        }
    }

    /// Never true: the identity is always a generator.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn labels(&self) -> Option<&[WeylLabelPair]> {
        match &self.generators {
            Generators::Labels(g) => Some(g),
            Generators::Dense(_) => None,
        }
    }

    pub fn dense_generator(&self, i: usize) -> ComplexMatrix {
        match &self.generators {
            Generators::Dense(g) => g[i].clone(),
            Generators::Labels(g) => g[i].dense(),
        }
    }

    /// Lowers every generator to a dense `space_dim × space_dim` matrix.
    pub fn dense_generators(&self) -> Vec<ComplexMatrix> {
        match &self.generators {
            Generators::Dense(g) => g.clone(),
            Generators::Labels(g) => g.par_iter().map(WeylLabelPair::dense).collect(),
        }
    }

    pub fn generator_name(&self, i: usize) -> String {
        match &self.generators {
            Generators::Dense(_) => format!("#{i}"),
            Generators::Labels(g) => g[i].to_string(),
        }
    }
}

/// Operator system generated by Weyl tensor operators on ℂⁿ ⊗ ℂⁿ.
///
/// The generator list is the identity, then `pairs`, then their
/// label-level adjoints, deduplicated by exponent quadruple (phases do not
/// affect the span).
pub fn graph_from_labels(
    n: usize,
    pairs: impl IntoIterator<Item = WeylLabelPair>,
) -> Result<OperatorGraph> {
    OperatorGraph::from_labels(n, pairs, GraphMetadata::new("labels"))
}

/// Number of distinct exponent quadruples.
pub fn label_count(pairs: &[WeylLabelPair]) -> usize {
    pairs.iter().map(WeylLabelPair::exponents).collect::<HashSet<_>>().len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimMethod {
    Labels,
    Gram,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphDim {
    pub labels: Option<usize>,
    pub gram: Option<usize>,
}

impl GraphDim {
    /// `Some(true)` when both oracles ran and agree.
    pub fn agree(&self) -> Option<bool> {
        match (self.labels, self.gram) {
            (Some(l), Some(g)) => Some(l == g),
            _ => None,
        }
    }

    pub fn value(&self) -> Option<usize> {
        self.labels.or(self.gram)
    }
}

pub fn graph_dim(g: &OperatorGraph, method: DimMethod, tol: Tolerance) -> Result<GraphDim> {
    let labels = match method {
        DimMethod::Labels | DimMethod::Both => {
            Some(label_count(g.labels().ok_or(Error::LabelsUnavailable)?))
        }
        DimMethod::Gram => None,
    };
    let gram = match method {
        DimMethod::Gram | DimMethod::Both => Some(gram_rank(&g.dense_generators(), tol)?),
        DimMethod::Labels => None,
    };
    Ok(GraphDim { labels, gram })
}

/// Both oracles evaluated on a seeded random subset of the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SampleCheck {
    pub size: usize,
    pub seed: u64,
    pub labels: usize,
    pub gram: usize,
}

impl SampleCheck {
    pub fn agree(&self) -> bool {
        self.labels == self.gram
    }
}

/// Indices of `size` generators drawn without replacement, sorted.
pub fn sample_indices(total: usize, size: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = index::sample(&mut rng, total, size.min(total)).into_vec();
    picked.sort_unstable();
    picked
}

pub fn sampled_oracle_check(
    g: &OperatorGraph,
    size: usize,
    seed: u64,
    tol: Tolerance,
) -> Result<SampleCheck> {
    let labels = g.labels().ok_or(Error::LabelsUnavailable)?;
    let picked = sample_indices(labels.len(), size, seed);
    let subset: Vec<WeylLabelPair> = picked.iter().map(|&i| labels[i]).collect();
    let dense: Vec<ComplexMatrix> = subset.par_iter().map(WeylLabelPair::dense).collect();
    Ok(SampleCheck {
        size: subset.len(),
        seed,
        labels: label_count(&subset),
        gram: gram_rank(&dense, tol)?,
    })
}

/// A code subspace `K`, held as an isometry `S` whose columns form an
/// orthonormal basis of `K`; the projection is `P_K = S·S†`.
#[derive(Debug, Clone)]
pub struct CodeSpace {
    isometry: ComplexMatrix,
    basis_names: Vec<String>,
}

impl CodeSpace {
    /// Orthonormalizes `vectors` in order. Fails if they are linearly
    /// dependent or if the names do not match the vectors.
    pub fn from_vectors(vectors: &[ComplexVector], names: Vec<String>, tol: Tolerance) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::InvalidParameter("code space needs at least one vector".into()));
        }
        if names.len() != vectors.len() {
            return Err(Error::DimensionMismatch {
                context: "code basis names",
                expected: vectors.len(),
                found: names.len(),
            });
        }
        let basis = orthonormalize(vectors, tol);
        if basis.len() != vectors.len() {
            return Err(Error::InvalidParameter(format!(
                "code vectors span only {} of {} dimensions",
                basis.len(),
                vectors.len()
            )));
        }
        Self::from_isometry(ComplexMatrix::from_columns(&basis)?, names, tol)
    }

    pub fn from_isometry(isometry: ComplexMatrix, names: Vec<String>, tol: Tolerance) -> Result<Self> {
        if names.len() != isometry.cols() {
            return Err(Error::DimensionMismatch {
                context: "code basis names",
                expected: isometry.cols(),
                found: names.len(),
            });
        }
        let residual = isometry.isometry_defect();
        if residual.is_nan() || residual >= tol.absolute {
            return Err(Error::NotIsometry { residual });
        }
        Ok(Self {
            isometry,
            basis_names: names,
        })
    }

    pub fn space_dim(&self) -> usize {
        self.isometry.rows()
    }

    pub fn code_dim(&self) -> usize {
        self.isometry.cols()
    }

    pub fn isometry(&self) -> &ComplexMatrix {
        &self.isometry
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_vector(&self, j: usize) -> ComplexVector {
        self.isometry.column(j)
    }

    /// The same subspace with the basis `S·U` for a unitary `U`.
    pub fn rotated(&self, u: &ComplexMatrix, tol: Tolerance) -> Result<Self> {
        let names = (0..self.code_dim()).map(|j| format!("b_{}", j + 1)).collect();
        Self::from_isometry(self.isometry.matmul(u)?, names, tol)
    }
}

fn check_compatible(g: &OperatorGraph, code: &CodeSpace) -> Result<()> {
    if g.space_dim() != code.space_dim() {
        return Err(Error::DimensionMismatch {
            context: "graph vs code space",
            expected: g.space_dim(),
            found: code.space_dim(),
        });
    }
    Ok(())
}

/// `S†·V·S` for every generator `V`, i.e. `P_K V P_K` restricted to `K`.
pub fn compress(g: &OperatorGraph, code: &CodeSpace) -> Result<Vec<ComplexMatrix>> {
    check_compatible(g, code)?;
    let s = code.isometry();
    let s_adj = s.adjoint();
    match g.generators() {
        Generators::Dense(ops) => ops
            .par_iter()
            .map(|v| s_adj.matmul(&v.matmul(s)?))
            .collect(),
        Generators::Labels(pairs) => pairs
            .par_iter()
            .map(|p| s_adj.matmul(&p.apply_columns(s)?))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompressionReport {
    /// True when the compressions span a one-dimensional space and each is
    /// a multiple of the identity within the absolute tolerance.
    pub verdict: bool,
    pub compressed_dim: usize,
    /// `max_V ‖S†VS − c_V·I‖_max`.
    pub residual: f64,
    #[serde(skip)]
    pub c_values: Vec<C64>,
}

pub fn is_anticlique(g: &OperatorGraph, code: &CodeSpace, tol: Tolerance) -> Result<CompressionReport> {
    let compressions = compress(g, code)?;
    summarize_compressions(&compressions, tol)
}

fn summarize_compressions(compressions: &[ComplexMatrix], tol: Tolerance) -> Result<CompressionReport> {
    let compressed_dim = gram_rank(compressions, tol)?;
    let mut residual: f64 = 0.0;
    let mut c_values = Vec::with_capacity(compressions.len());
    for c in compressions {
        let d = c.rows();
        let c_v = c.trace() / d as f64;
        let target = ComplexMatrix::identity(d).scale(c_v);
        residual = residual.max(c.max_abs_diff(&target)?);
        c_values.push(c_v);
    }
    Ok(CompressionReport {
        verdict: compressed_dim == 1 && residual < tol.absolute,
        compressed_dim,
        residual,
        c_values,
    })
}

/// Knill–Laflamme table: entry `(j, k)` of `tables[v]` is `⟨s_j, V_v s_k⟩`
/// for the code basis `s_j`.
#[derive(Debug, Clone)]
pub struct KlTable {
    pub tables: Vec<ComplexMatrix>,
}

impl KlTable {
    pub fn max_off_diagonal(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for t in &self.tables {
            for j in 0..t.rows() {
                for k in 0..t.cols() {
                    if j != k {
                        worst = worst.max(t[(j, k)].norm());
                    }
                }
            }
        }
        worst
    }

    /// Largest spread `max_j |t_jj − t_00|` over generators.
    pub fn max_diagonal_spread(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for t in &self.tables {
            let first = t[(0, 0)];
            for j in 1..t.rows() {
                worst = worst.max((t[(j, j)] - first).norm());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.tables.iter().map(ComplexMatrix::max_abs).fold(0.0, f64::max)
    }
}

pub fn kl_table(g: &OperatorGraph, code: &CodeSpace) -> Result<KlTable> {
    Ok(KlTable {
        tables: compress(g, code)?,
    })
}

impl fmt::Display for CompressionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "anticlique={} compressed_dim={} residual={:.3e}",
            self.verdict, self.compressed_dim, self.residual
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{fourier_basis, WeylLabel};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn empty_label_graph_is_identity() {
        let g = graph_from_labels(4, []).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(graph_dim(&g, DimMethod::Both, tol()).unwrap(), GraphDim { labels: Some(1), gram: Some(1) });
    }

    #[test]
    fn adjoint_closure_adds_inverse_shift() {
        let g = graph_from_labels(3, [WeylLabelPair::xz(3, 1, 0, 0, 0)]).unwrap();
        let quads: Vec<_> = g.labels().unwrap().iter().map(|p| p.exponents()).collect();
        assert_eq!(quads, vec![(0, 0, 0, 0), (1, 0, 0, 0), (2, 0, 0, 0)]);
        let d = graph_dim(&g, DimMethod::Both, tol()).unwrap();
        assert_eq!(d.labels, Some(3));
        assert_eq!(d.agree(), Some(true));
    }

    #[test]
    fn mixed_modulus_rejected() {
        let err = graph_from_labels(3, [WeylLabelPair::identity(4)]).unwrap_err();
        assert!(matches!(err, Error::ModulusMismatch { .. }));
    }

    #[test]
    fn labels_method_needs_labels() {
        let g = OperatorGraph::from_dense(2, vec![], tol(), GraphMetadata::new("dense")).unwrap();
        assert_eq!(graph_dim(&g, DimMethod::Labels, tol()), Err(Error::LabelsUnavailable));
        assert_eq!(graph_dim(&g, DimMethod::Gram, tol()).unwrap().gram, Some(1));
    }

    #[test]
    fn dense_graph_closes_under_adjoint() {
        let shift = ComplexMatrix::from_real(3, 3, &[0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0]).unwrap();
        let g = OperatorGraph::from_dense(3, vec![shift.clone()], tol(), GraphMetadata::new("cyclic")).unwrap();
        assert_eq!(g.len(), 3);
        assert!(g.dense_generators().iter().any(|m| m.approx_eq(&shift.adjoint(), 1e-15)));
        let bad = OperatorGraph::from_dense(2, vec![shift], tol(), GraphMetadata::new("bad"));
        assert!(bad.is_err());
    }

    #[test]
    fn code_space_rejects_dependent_vectors() {
        let v = ComplexVector::basis(4, 1);
        let err = CodeSpace::from_vectors(&[v.clone(), v.scale(C64::new(2.0, 0.0))], vec!["a".into(), "b".into()], tol());
        assert!(err.is_err());
        assert!(CodeSpace::from_vectors(&[v], vec![], tol()).is_err());
        let not_iso = ComplexMatrix::from_real(2, 1, &[1.0, 1.0]).unwrap();
        assert!(matches!(
            CodeSpace::from_isometry(not_iso, vec!["x".into()], tol()),
            Err(Error::NotIsometry { .. })
        ));
    }

    #[test]
    fn compress_identity_gives_identity() {
        let g = graph_from_labels(3, []).unwrap();
        let basis = fourier_basis(3).unwrap();
        let code = CodeSpace::from_vectors(
            &[basis.vector(0).kron(basis.vector(1)), basis.vector(2).kron(basis.vector(2))],
            vec!["a".into(), "b".into()],
            tol(),
        )
        .unwrap();
        let c = compress(&g, &code).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].approx_eq(&ComplexMatrix::identity(2), 1e-12));
    }

    #[test]
    fn compress_dimension_mismatch() {
        let g = graph_from_labels(3, []).unwrap();
        let code = CodeSpace::from_vectors(&[ComplexVector::basis(4, 0)], vec!["e".into()], tol()).unwrap();
        assert!(compress(&g, &code).is_err());
        assert!(is_anticlique(&g, &code, tol()).is_err());
        assert!(kl_table(&g, &code).is_err());
    }

    #[test]
    fn diagonal_error_is_not_anticlique() {
        // X ⊗ I on span{e_0⊗e_0, e_1⊗e_0} compresses to diag(1, ω).
        let n = 3;
        let g = graph_from_labels(n, [WeylLabelPair::xz(n, 1, 0, 0, 0)]).unwrap();
        let e = |i: usize, j: usize| ComplexVector::basis(n, i).kron(&ComplexVector::basis(n, j));
        let code = CodeSpace::from_vectors(&[e(0, 0), e(1, 0)], vec!["e11".into(), "e21".into()], tol()).unwrap();
        let report = is_anticlique(&g, &code, tol()).unwrap();
        assert!(!report.verdict);
        assert!(report.compressed_dim > 1);
        let x_comp = &compress(&g, &code).unwrap()[1];
        let omega = crate::weyl::omega_pow(n, 1);
        assert!(x_comp.approx_eq(&ComplexMatrix::diagonal(&[C64::new(1.0, 0.0), omega]), 1e-12));
    }

    #[test]
    fn label_and_dense_compression_agree() {
        let n = 4;
        let pairs = [
            WeylLabelPair::new(WeylLabel::new(n, 1, 2, 1).unwrap(), WeylLabel::new(n, 3, 0, 0).unwrap()).unwrap(),
            WeylLabelPair::xz(n, 0, 1, 2, 3),
        ];
        let g = graph_from_labels(n, pairs).unwrap();
        let dense = OperatorGraph::from_dense(n * n, g.dense_generators(), tol(), GraphMetadata::new("dense")).unwrap();
        let basis = fourier_basis(n).unwrap();
        let vecs: Vec<_> = (0..3).map(|j| basis.vector(j).kron(basis.vector(j + 1))).collect();
        let code = CodeSpace::from_vectors(&vecs, vec!["a".into(), "b".into(), "c".into()], tol()).unwrap();
        let a = compress(&g, &code).unwrap();
        let b = compress(&dense, &code).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert!(x.approx_eq(y, 1e-12));
        }
    }

    #[test]
    fn sample_indices_are_deterministic_and_distinct() {
        let a = sample_indices(100, 20, 9);
        assert_eq!(a, sample_indices(100, 20, 9));
        assert_eq!(a.iter().collect::<HashSet<_>>().len(), 20);
        assert_eq!(sample_indices(5, 20, 1), vec![0, 1, 2, 3, 4]);
    }
}

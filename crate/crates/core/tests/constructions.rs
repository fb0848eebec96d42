//! Construction-level checks against independent oracles written here.

use std::collections::{BTreeSet, HashSet};

use anticlique::constructions::{
    build_bit_flip_example, build_remark2, build_section2, build_section2_subset, build_section3, build_section4,
    family_a, predicted_dims, proposition2_residual, q_vectors, residue_set_a, section4_proof_checks, theorem4_dim,
    Section4Params,
};
use anticlique::graph::{graph_dim, is_anticlique, sampled_oracle_check};
use anticlique::weyl::ExponentQuad;
use anticlique::{DimMethod, OperatorGraph, Tolerance, WeylLabelPair};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn quads(g: &OperatorGraph) -> HashSet<ExponentQuad> {
    g.labels().expect("label graph").iter().map(WeylLabelPair::exponents).collect()
}

/// Residues `m (mod y)` for which `X^m ⊗ X^m` maps the support of every
/// q-vector off the support of every q-vector. `q_k` lives on the pairs
/// `f_j ⊗ f_j` with `j ≡ (k−1)(h+1) (mod y)`, and the shift sends `j` to `j+m`.
fn residues_by_support(y: usize, h: usize, d: usize) -> BTreeSet<usize> {
    let offsets: Vec<usize> = (0..d).map(|k| k * (h + 1) % y).collect();
    (0..y)
        .filter(|&m| offsets.iter().all(|&a| offsets.iter().all(|&b| (a + m) % y != b)))
        .collect()
}

/// Brute-force classification of every exponent quadruple of ℤ_n⁴ against
/// the defining predicates of the four families of `𝒱₁`.
fn entangled_quads_by_predicate(p: usize, y: usize, h: usize, d: usize) -> [usize; 4] {
    let n = p * y;
    let a = residues_by_support(y, h, d);
    // (XZ^k)^t carries the exponents (t, kt).
    let power = |a: usize, b: usize| (1..n).any(|t| a == t && (0..n).any(|k| b == k * t % n));
    let separable = |m: usize, k: usize, j: usize, s: usize| {
        (j == 0 && s == 0 && power(m, k)) || (m == 0 && k == 0 && power(j, s))
    };
    let mut counts = [0usize; 4];
    for m in 0..n {
        for k in 0..n {
            for j in 0..n {
                for s in 0..n {
                    if (m, k, j, s) == (0, 0, 0, 0) {
                        counts[3] += 1;
                    } else if m != j {
                        counts[0] += 1;
                    } else if a.contains(&(m % y)) {
                        counts[1] += 1;
                    } else if (k + s) % p != 0 || separable(m, k, j, s) {
                        counts[2] += 1;
                    }
                }
            }
        }
    }
    counts
}

#[test]
fn two_qubit_graph_and_code() {
    let tol = Tolerance::default();
    let (g, code) = build_section2().unwrap();
    assert_eq!(code.code_dim(), 2);
    let dim = graph_dim(&g, DimMethod::Gram, tol).unwrap();
    assert_eq!(dim.gram, Some(5));
    assert!(is_anticlique(&g, &code, tol).unwrap().verdict);

    let partial = build_section2_subset(&["T", "V"]).unwrap();
    assert_eq!(graph_dim(&partial, DimMethod::Gram, tol).unwrap().gram, Some(3));
    assert!(is_anticlique(&partial, &code, tol).unwrap().verdict);
    assert!(build_section2_subset(&["Q"]).is_err());

    let (flip, flip_code) = build_bit_flip_example().unwrap();
    let report = is_anticlique(&flip, &flip_code, tol).unwrap();
    assert!(report.verdict);
    assert_eq!(report.compressed_dim, 1);
}

#[test]
fn separable_dimension_matches_gcd_count() {
    let tol = Tolerance::default();
    for n in 3..=8 {
        let (g, code) = build_section3(n, false).unwrap();
        let expected: usize = (1..n).map(|s| 2 * n / gcd(n, s)).sum::<usize>() + 1;
        let method = if n <= 6 { DimMethod::Both } else { DimMethod::Labels };
        let dim = graph_dim(&g, method, tol).unwrap();
        assert_eq!(dim.labels, Some(expected), "n = {n}");
        if n <= 6 {
            assert_eq!(dim.gram, Some(expected), "n = {n}");
        }
        let report = is_anticlique(&g, &code, tol).unwrap();
        assert!(report.verdict, "n = {n}: {report}");
    }
}

#[test]
fn separable_compressions_vanish_densely() {
    for n in 3..=6 {
        let r = proposition2_residual(n).unwrap();
        assert!(r < 1e-12, "n = {n}: {r:e}");
    }
}

#[test]
fn separable_requires_n_above_two() {
    let err = build_section3(2, false).unwrap_err().to_string();
    assert!(err.contains("n > 2"), "{err}");
    assert!(build_section3(2, true).is_ok());
    assert!(build_section3(1, true).is_err());
}

#[test]
fn residue_set_matches_support_oracle() {
    for params in Section4Params::enumerate(24) {
        let a = residue_set_a(params.y, params.h, params.d);
        let expected = residues_by_support(params.y, params.h, params.d);
        assert_eq!(a.allowed(), &expected, "{params}");
    }
}

#[test]
fn q_vectors_are_orthonormal() {
    for params in Section4Params::enumerate(12) {
        let q = q_vectors(&params).unwrap();
        assert_eq!(q.len(), params.d);
        for (i, qi) in q.iter().enumerate() {
            for (j, qj) in q.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                let v = qi.inner(qj).unwrap();
                assert!((v.re - expected).abs() < 1e-12 && v.im.abs() < 1e-12, "{params}: <q{i}, q{j}> = {v}");
            }
        }
    }
}

#[test]
fn entangled_label_count_matches_predicates() {
    for params in Section4Params::enumerate(12) {
        let (g, _) = build_section4(&params).unwrap();
        let counts = entangled_quads_by_predicate(params.p, params.y, params.h, params.d);
        assert_eq!(g.len(), counts.iter().sum::<usize>(), "{params}");
    }
    assert_eq!(entangled_quads_by_predicate(2, 4, 1, 2), [3584, 256, 128, 1]);
}

#[test]
fn entangled_anticlique_and_proof_steps() {
    let tol = Tolerance::default();
    for params in Section4Params::enumerate(12) {
        let (g, code) = build_section4(&params).unwrap();
        let report = is_anticlique(&g, &code, tol).unwrap();
        assert!(report.verdict, "{params}: {report}");
        let steps = section4_proof_checks(&params).unwrap();
        assert!(steps.max() < 1e-12, "{params}: {steps:?}");
    }
}

#[test]
fn entangled_graph_contains_separable_graph() {
    for params in Section4Params::enumerate(12) {
        let (big, _) = build_section4(&params).unwrap();
        let (small, _) = build_section3(params.n(), true).unwrap();
        assert!(quads(&small).is_subset(&quads(&big)), "{params}");
    }
}

#[test]
fn family_a_is_adjoint_closed() {
    let a: HashSet<ExponentQuad> = family_a(4).iter().map(WeylLabelPair::exponents).collect();
    assert_eq!(a.len(), 4 * 4 * 4 * 3);
    for pair in family_a(4) {
        assert!(a.contains(&pair.adjoint().exponents()));
    }
}

#[test]
fn oracles_agree_on_small_entangled_graphs() {
    let tol = Tolerance::default();
    for params in Section4Params::enumerate(6) {
        let (g, _) = build_section4(&params).unwrap();
        let dim = graph_dim(&g, DimMethod::Both, tol).unwrap();
        assert_eq!(dim.agree(), Some(true), "{params}: {dim:?}");
    }
    let (g, _) = build_section4(&Section4Params::new(2, 4, 1, 2).unwrap()).unwrap();
    for seed in [1, 2, 3] {
        let sample = sampled_oracle_check(&g, 200, seed, tol).unwrap();
        assert!(sample.agree(), "seed {seed}: {sample:?}");
        assert_eq!(sample.size, 200);
    }
}

#[test]
fn off_diagonal_family_graph() {
    let tol = Tolerance::default();
    let params = Section4Params::new(2, 4, 1, 2).unwrap();
    let (g, code) = build_remark2(&params).unwrap();
    assert_eq!(g.len(), 8 * 8 * 8 * 7 + 1);
    assert!(is_anticlique(&g, &code, tol).unwrap().verdict);
}

#[test]
fn claimed_dimension_arithmetic_at_n8() {
    let params = Section4Params::new(2, 4, 1, 2).unwrap();
    let prediction = theorem4_dim(&params);
    let (n, p, y) = (8u64, 2u64, 4u64);
    let a_prime = (1..8usize).filter(|m| residues_by_support(4, 1, 2).contains(&(m % 4))).count() as u64;
    assert_eq!(prediction.a_prime_count, a_prime);
    let expected = n.pow(3) * (n - 1) + a_prime * n * n + (n - a_prime) * (y * (p - 1) * (p + 2) / 2 + n * (y - 1) / 2) + 1;
    assert_eq!(prediction.value, expected);
    assert_eq!(prediction.value, 3921);
    let dims = predicted_dims(8, Some(&params));
    assert_eq!(dims.thm2, 113);
    assert!(dims.paper_claimed);
}

#[test]
fn parameter_constraints_name_the_inequality() {
    let err = Section4Params::new(2, 4, 0, 2).unwrap_err().to_string();
    assert!(err.contains("(h+1)(d+1) >= y"), "{err}");
    let err = Section4Params::new(2, 4, 2, 2).unwrap_err().to_string();
    assert!(err.contains("y >= (h+1)d"), "{err}");
    assert!(Section4Params::new(2, 4, 1, 1).is_err());
    assert!(Section4Params::with_override(2, 4, 1, 1, true).is_ok());
}

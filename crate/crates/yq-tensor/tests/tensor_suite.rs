//! Operator identities on `C^{1|1}` and `C^{n|n}`, and the numeric RTT
//! oracle.

use std::time::Instant;

use yq_core::{index_at_position, FreeRing, GenSymbol, Ring, Scalar, ScalarRing, SuperPoly};
use yq_series::TruncSeries;
use yq_tensor::*;

/// Applies an arity-2 scalar operator to the basis vector `e_a ⊗ e_b`
/// (layout positions), returning the dense result vector.
fn apply(op: &SuperTensor<Scalar>, a: usize, b: usize) -> Vec<Scalar> {
    let dim = op.dim();
    let mut out = vec![Scalar::ZERO; dim * dim];
    for (key, c) in op.iter() {
        let (i, j) = key_get(*key, 0);
        let (k, l) = key_get(*key, 1);
        if j != a || l != b {
            continue;
        }
        // (E_ij ⊗ E_kl)(e_a ⊗ e_b) = (−1)^{|E_kl||e_a|} E_ij e_a ⊗ E_kl e_b
        let sign = Scalar::sign((k + l) % 2 == 1 && a % 2 == 1);
        out[i * dim + k] += &(c * &sign);
    }
    out
}

#[test]
fn flip_operator_matches_vector_oracle() {
    for dim in [2, 4, 6] {
        let p = build_operator(OperatorName::P, dim, 0, 1, 2);
        for a in 0..dim {
            for b in 0..dim {
                let got = apply(&p, a, b);
                let mut want = vec![Scalar::ZERO; dim * dim];
                want[b * dim + a] = Scalar::sign(a % 2 == 1 && b % 2 == 1);
                assert_eq!(got, want, "P on e{a} ⊗ e{b}");
            }
        }
    }
}

#[test]
fn q_operator_matches_vector_oracle() {
    // Q(e_a ⊗ e_b) = (−1)^{|a||b|+|a|}·... derived from Q = −P J¹J²: compute via J.
    for dim in [2, 4] {
        let q = build_operator(OperatorName::Q, dim, 0, 1, 2);
        for a in 0..dim {
            for b in 0..dim {
                let got = apply(&q, a, b);
                // Q = Σ (−1)^{|j|} E_ij ⊗ E_{−j,−i}: nonzero iff j = label(a), −i = label(b).
                let la = index_at_position(a as u32);
                let lb = index_at_position(b as u32);
                let i = -lb;
                let k = -la;
                let ipos = yq_core::index_position(i) as usize;
                let kpos = yq_core::index_position(k) as usize;
                let mut want = vec![Scalar::ZERO; dim * dim];
                let parity_j = la < 0;
                let parity_ekl = (k < 0) ^ (lb < 0);
                want[ipos * dim + kpos] = Scalar::sign(parity_j ^ (parity_ekl && la < 0));
                assert_eq!(got, want, "Q on e{a} ⊗ e{b}");
            }
        }
    }
}

#[test]
fn pq_lemma_holds() {
    let res = verify_pq_identities();
    assert_eq!(res.len(), 26);
    for r in &res {
        assert!(r.pass, "{}", r.name);
    }
}

#[test]
fn pq_lemma_detects_sign_errors() {
    let a = eval_pq_product("Q12 Q13", 2, 3);
    let b = eval_pq_product("P23 Q12", 2, 3);
    assert_ne!(a, b);
    assert_eq!(a, eval_pq_product("-P23 Q12", 2, 3));
}

#[test]
fn operator_identities_hold() {
    for dim in [2, 4, 6] {
        for r in verify_operator_identities(dim) {
            assert!(r.pass, "{}", r.name);
        }
    }
}

#[test]
fn j_is_odd_and_squares_to_minus_one() {
    let j = j_operator(2, 0, 1);
    let tr = TensorRing::new(&ScalarRing, 1, 2);
    for (k, _) in j.iter() {
        assert!(j.key_parity(*k));
    }
    assert_eq!(tr.mul(&j, &j), tr.neg(&tr.one()));
}

#[test]
fn k_operator_equals_p_form() {
    let rr = TensorRing::new(&RatRing, 2, 2);
    let k = k_operator(2, 0, 1, 2);
    let p = rr.lift(&build_operator(OperatorName::P, 2, 0, 1, 2));
    let jj = rr.lift(&TensorRing::new(&ScalarRing, 2, 2).mul(&j_operator(2, 0, 2), &j_operator(2, 1, 2)));
    let pjj = rr.mul(&p, &jj);
    let other = rr.sub(&rr.mul_coeff_right(&p, &RatUV::inv_u_minus_v()), &rr.mul_coeff_right(&pjj, &RatUV::inv_u_plus_v()));
    assert!(rr.is_zero(&rr.sub(&k, &other)));
}

#[test]
fn supertrace_and_tau() {
    let t = unit_at(1, 4, 0, -1, -1);
    assert_eq!(supertrace(&ScalarRing, &t), Scalar::int(-1));
    let e = unit_at(1, 4, 0, -1, -2);
    let tt = tau_on_factor(&ScalarRing, &e, 0);
    // τ(E_{-1,-2}) = (−1)^{1+1} E_{-2,-1}
    assert_eq!(tt, unit_at(1, 4, 0, -2, -1));
    let e = unit_at(1, 4, 0, -1, 2);
    let neg = TensorRing::new(&ScalarRing, 1, 4).neg(&unit_at(1, 4, 0, 2, -1));
    assert_eq!(tau_on_factor(&ScalarRing, &e, 0), neg);
}

#[test]
fn numeric_rtt_in_defining_representation() {
    let start = Instant::now();
    for n in 1..=3 {
        assert!(verify_rtt_numeric(n), "n = {n}");
    }
    assert!(start.elapsed().as_secs_f64() < 10.0);
}

#[test]
fn numeric_rtt_detects_wrong_r_matrix() {
    use yq_rtt::MatrixRing;
    let n = 2;
    let lr = LaurentRing { inner: MatrixRing { dim: 2 * n } };
    let tr = TensorRing::new(&lr, 2, 2 * n);
    let r = cleared_r_matrix(n);
    // drop the Q-part: (u²−v²) − (u+v)P alone must fail
    let q = tr.lift(&build_operator(OperatorName::Q, 2 * n, 0, 1, 2));
    let id = yq_rtt::DenseMatrix::identity(2 * n);
    let umv = lr.add(&lr.monomial(1, 0, id.clone()), &lr.monomial(0, 1, id.scale(&Scalar::int(-1))));
    let bad = tr.add(&r, &tr.mul_coeff_right(&q, &umv));
    let t1 = defining_t_matrix(n, 0, false);
    let t2 = defining_t_matrix(n, 1, true);
    let diff = tr.sub(&tr.mul(&tr.mul(&bad, &t1), &t2), &tr.mul(&tr.mul(&t2, &t1), &bad));
    assert!(!tr.is_zero(&diff));
}

fn free_series(row: i32, col: i32, order: usize) -> TruncSeries<SuperPoly> {
    TruncSeries::from_fn(order, |k| {
        if k == 0 {
            if row == col { SuperPoly::one() } else { SuperPoly::zero() }
        } else {
            SuperPoly::gen(GenSymbol::new(row, col, k as u32).unwrap())
        }
    })
}

#[test]
fn pq_transform_of_yq_matrices() {
    let ring = FreeRing { trunc: 100 };
    let a = free_series(1, 1, 3);
    let b = free_series(-1, 1, 3);
    for (i, j) in [(0, 1), (1, 0), (0, 2), (1, 2)] {
        for r in verify_pq_transform(&ring, &a, &b, 3, i, j) {
            assert!(r.pass, "{}", r.name);
        }
    }
}

#[test]
fn lambda_lemma_for_symmetric_matrices() {
    let ring = FreeRing { trunc: 100 };
    for n in [1usize, 2] {
        let dim = 2 * n;
        let entry = |p: usize, q: usize| {
            let (i, j) = (index_at_position(p as u32), index_at_position(q as u32));
            if j > 0 {
                free_series(i, j, 2)
            } else {
                free_series(-i, -j, 2).substitute_neg(&ring)
            }
        };
        let res = verify_lambda_lemma(&ring, dim, entry).expect("symmetric input");
        for r in res {
            assert!(r.pass, "n={n}: {}", r.name);
        }
    }
}

#[test]
fn lambda_lemma_rejects_asymmetric_input() {
    let ring = FreeRing { trunc: 100 };
    let entry = |p: usize, q: usize| {
        let (i, j) = (index_at_position(p as u32), index_at_position(q as u32));
        free_series(i.abs() * i.signum(), j.abs(), 2)
    };
    assert_eq!(verify_lambda_lemma(&ring, 2, entry), Err(LambdaLemmaError::NotSymmetric));
}

#[test]
fn tensor_suite_runs_quickly() {
    let start = Instant::now();
    let _ = verify_pq_identities();
    for dim in [2, 4, 6] {
        let _ = verify_operator_identities(dim);
    }
    assert!(start.elapsed().as_secs_f64() < 1.0);
}

//! The named operators of the R-matrix calculus and the identities among them.

use yq_core::{index_at_position, index_position, Parity, Ring, Scalar, ScalarRing};
use yq_series::{SeriesRing, TruncSeries};

use crate::rational::{RatRing, RatUV};
use crate::tensor::{key_get, key_set, SuperTensor, TensorKey, TensorRing};

/// The operators that can be built by [`build_operator`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorName {
    /// `P = Σ (−1)^{|j|} E_{ij} ⊗ E_{ji}` (super flip).
    P,
    /// `Q = Σ (−1)^{|j|} E_{ij} ⊗ E_{−j,−i}`.
    Q,
    /// `Λ = Σ (−1)^{|i||j|} E_{ij} ⊗ E_{ij}`.
    Lambda,
    /// `Θ = Σ (−1)^{|i||j|+|i|+|j|} E_{ij} ⊗ E_{−i,−j}`.
    Theta,
}

fn label(p: usize) -> i32 {
    index_at_position(p as u32)
}

fn pos(i: i32) -> usize {
    index_position(i) as usize
}

fn odd(i: i32) -> bool {
    i < 0
}

fn labels(dim: usize) -> Vec<i32> {
    (0..dim).map(label).collect()
}

fn diag_fill(arity: usize, dim: usize, skip: &[usize]) -> Vec<TensorKey> {
    let mut keys = vec![0u64];
    for k in 0..arity {
        if skip.contains(&k) {
            continue;
        }
        keys = keys.into_iter().flat_map(|key| (0..dim).map(move |p| key_set(key, k, p, p))).collect();
    }
    keys
}

/// `E_{ij}` in slot `slot` (0-based), identity elsewhere.
pub fn unit_at(arity: usize, dim: usize, slot: usize, i: i32, j: i32) -> SuperTensor<Scalar> {
    let mut t = SuperTensor::zero(arity, dim);
    for key in diag_fill(arity, dim, &[slot]) {
        t.add_entry(&ScalarRing, key_set(key, slot, pos(i), pos(j)), Scalar::ONE);
    }
    t
}

/// `Σ c · x ⊗ y` placed with `x` in slot `a` and `y` in slot `b` (0-based,
/// `a ≠ b`); when `a > b` the factors are exchanged with the Koszul sign.
pub fn two_slot(
    arity: usize,
    dim: usize,
    a: usize,
    b: usize,
    terms: &[((i32, i32), (i32, i32), Scalar)],
) -> SuperTensor<Scalar> {
    assert!(a != b && a < arity && b < arity, "bad slots");
    let mut t = SuperTensor::zero(arity, dim);
    for key in diag_fill(arity, dim, &[a, b]) {
        for ((i, j), (k, l), c) in terms {
            let mut c = c.clone();
            if a > b && (odd(*i) ^ odd(*j)) && (odd(*k) ^ odd(*l)) {
                c = -c;
            }
            let key = key_set(key_set(key, a, pos(*i), pos(*j)), b, pos(*k), pos(*l));
            t.add_entry(&ScalarRing, key, c);
        }
    }
    t
}

fn operator_terms(name: OperatorName, dim: usize) -> Vec<((i32, i32), (i32, i32), Scalar)> {
    let ls = labels(dim);
    let mut v = Vec::new();
    for &i in &ls {
        for &j in &ls {
            let (x, y, s) = match name {
                OperatorName::P => ((i, j), (j, i), odd(j)),
                OperatorName::Q => ((i, j), (-j, -i), odd(j)),
                OperatorName::Lambda => ((i, j), (i, j), odd(i) && odd(j)),
                OperatorName::Theta => ((i, j), (-i, -j), (odd(i) && odd(j)) ^ odd(i) ^ odd(j)),
            };
            v.push((x, y, Scalar::sign(s)));
        }
    }
    v
}

/// The operator `name` on `C^{dim}` placed at slots `(a, b)` of an arity-`m` tensor.
pub fn build_operator(name: OperatorName, dim: usize, a: usize, b: usize, arity: usize) -> SuperTensor<Scalar> {
    two_slot(arity, dim, a, b, &operator_terms(name, dim))
}

/// `J = Σ (−1)^{|i|} E_{i,−i}` in slot `slot`; an odd operator.
pub fn j_operator(dim: usize, slot: usize, arity: usize) -> SuperTensor<Scalar> {
    let mut t = SuperTensor::zero(arity, dim);
    for i in labels(dim) {
        let u = unit_at(arity, dim, slot, i, -i);
        for (k, c) in u.iter() {
            t.add_entry(&ScalarRing, *k, c * &Scalar::sign(odd(i)));
        }
    }
    t
}

/// `K(u,v) = P/(u−v) + Q/(u+v)` on `C^{dim}` at slots `(a, b)`.
pub fn k_operator(dim: usize, a: usize, b: usize, arity: usize) -> SuperTensor<RatUV> {
    let ring = TensorRing::new(&RatRing, arity, dim);
    let p = ring.lift(&build_operator(OperatorName::P, dim, a, b, arity));
    let q = ring.lift(&build_operator(OperatorName::Q, dim, a, b, arity));
    ring.add(&ring.mul_coeff_right(&p, &RatUV::inv_u_minus_v()), &ring.mul_coeff_right(&q, &RatUV::inv_u_plus_v()))
}

/// `R(u,v) = 1 − P/(u−v) − Q/(u+v)` on `C^{dim}` at slots `(a, b)`.
pub fn r_operator(dim: usize, a: usize, b: usize, arity: usize) -> SuperTensor<RatUV> {
    let ring = TensorRing::new(&RatRing, arity, dim);
    ring.sub(&ring.one(), &k_operator(dim, a, b, arity))
}

/// Substitutes `(u, v) → (−u, −v)` in a rational tensor.
pub fn negate_uv(t: &SuperTensor<RatUV>) -> SuperTensor<RatUV> {
    t.map(|c| c.negate_uv(), |c| c.num.is_empty())
}

/// `τ(E_{ij}) = (−1)^{|i||j|+|i|} E_{ji}` applied to slot `slot`.
pub fn tau_on_factor<R: Ring>(r: &R, t: &SuperTensor<R::Elem>, slot: usize) -> SuperTensor<R::Elem> {
    t.relabel(r, |key| {
        let (p, q) = key_get(key, slot);
        let (i, j) = (label(p), label(q));
        (key_set(key, slot, q, p), (odd(i) && odd(j)) ^ odd(i))
    })
}

/// Supertrace `Σ (−1)^{|i|} a_{ii}` of an arity-1 tensor.
pub fn supertrace<R: Ring>(r: &R, t: &SuperTensor<R::Elem>) -> R::Elem {
    assert_eq!(t.arity(), 1, "supertrace needs a single slot");
    let mut acc = r.zero();
    for p in 0..t.dim() {
        if let Some(c) = t.get(key_set(0, 0, p, p)) {
            acc = if p % 2 == 1 { r.sub(&acc, c) } else { r.add(&acc, c) };
        }
    }
    acc
}

/// Places a matrix `Σ E_{ij} ⊗ x_{ij}` (given by layout positions) in slot `slot`.
pub fn place_matrix<R: Ring>(
    r: &R,
    arity: usize,
    dim: usize,
    slot: usize,
    entry: impl Fn(usize, usize) -> R::Elem,
) -> SuperTensor<R::Elem> {
    let mut t = SuperTensor::zero(arity, dim);
    for p in 0..dim {
        for q in 0..dim {
            let x = entry(p, q);
            if r.is_zero(&x) {
                continue;
            }
            for key in diag_fill(arity, dim, &[slot]) {
                t.add_entry(r, key_set(key, slot, p, q), x.clone());
            }
        }
    }
    t
}

/// One chain `X₁ = X₂ = …` of the PQ lemma, each side a signed product of
/// `P^{ab}` / `Q^{ab}` factors on `(C^{1|1})^{⊗3}`.
pub const PQ_CHAINS: &[&str] = &[
    "P12 P13 = P23 P12 = P13 P23",
    "P12 P23 = P13 P12 = P23 P13",
    "P12 Q13 = Q23 P12 = Q13 Q23",
    "P12 Q23 = Q13 P12 = Q23 Q13",
    "Q12 Q13 = -P23 Q12 = -Q13 P23",
    "Q12 P23 = -Q13 Q12 = P23 Q13",
    "Q12 P13 = -Q23 Q12 = -P13 Q23",
    "Q12 Q23 = -P13 Q12 = Q23 P13",
    "P12 P13 P23 = P23 P13 P12",
    "P12 Q13 Q23 = Q23 Q13 P12",
    "Q12 Q13 P23 = P23 Q13 Q12",
    "Q12 P13 Q23 = Q23 P13 Q12",
    "P12 P13 Q23 = P23 Q13 P12 = Q12 P13 P23 = Q23 Q13 Q12",
    "Q23 P13 P12 = P12 Q13 P23 = P23 P13 Q12 = Q12 Q13 Q23",
];

/// Evaluates one side like `-Q13 P23` on `(C^{dim})^{⊗arity}`.
pub fn eval_pq_product(side: &str, dim: usize, arity: usize) -> SuperTensor<Scalar> {
    let ring = TensorRing::new(&ScalarRing, arity, dim);
    let side = side.trim();
    let (neg, body) = match side.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, side),
    };
    let mut acc = ring.one();
    for f in body.split_whitespace() {
        let bytes = f.as_bytes();
        let name = match bytes[0] {
            b'P' => OperatorName::P,
            b'Q' => OperatorName::Q,
            _ => panic!("unknown operator {f}"),
        };
        let a = (bytes[1] - b'1') as usize;
        let b = (bytes[2] - b'1') as usize;
        acc = ring.mul(&acc, &build_operator(name, dim, a, b, arity));
    }
    if neg {
        ring.neg(&acc)
    } else {
        acc
    }
}

fn same<R: Ring>(r: &R, a: &R::Elem, b: &R::Elem) -> bool {
    r.is_zero(&r.sub(a, b))
}

/// Outcome of one named identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityResult {
    /// Identity text.
    pub name: String,
    /// Whether it holds exactly.
    pub pass: bool,
}

/// Checks every chain of [`PQ_CHAINS`] in `End(C^{1|1})^{⊗3}`; one result
/// per adjacent equality (26 in total).
pub fn verify_pq_identities() -> Vec<IdentityResult> {
    let mut out = Vec::new();
    for chain in PQ_CHAINS {
        let sides: Vec<&str> = chain.split('=').collect();
        let vals: Vec<_> = sides.iter().map(|s| eval_pq_product(s, 2, 3)).collect();
        for k in 1..sides.len() {
            out.push(IdentityResult {
                name: format!("{} = {}", sides[k - 1].trim(), sides[k].trim()),
                pass: vals[k - 1] == vals[k],
            });
        }
    }
    out
}

/// The auxiliary identities of the tensor suite: `P² = 1`, `Λ² = Θ² = ΛΘ =
/// ΘΛ = 0` on `C^{dim}`, `R(−u,−v)R(u,v) = 1 − 1/(u−v)² − 1/(u+v)²`, and the
/// two forms of `K(u,v)` together with both `J` exchange rules on `C^{1|1}`.
pub fn verify_operator_identities(dim: usize) -> Vec<IdentityResult> {
    let sr = TensorRing::new(&ScalarRing, 2, dim);
    let p = build_operator(OperatorName::P, dim, 0, 1, 2);
    let q = build_operator(OperatorName::Q, dim, 0, 1, 2);
    let lam = build_operator(OperatorName::Lambda, dim, 0, 1, 2);
    let th = build_operator(OperatorName::Theta, dim, 0, 1, 2);
    let zero = sr.zero();
    let mut out = vec![
        IdentityResult { name: format!("P^2 = 1 (dim {dim})"), pass: sr.mul(&p, &p) == sr.one() },
        IdentityResult { name: format!("Lambda^2 = 0 (dim {dim})"), pass: sr.mul(&lam, &lam) == zero },
        IdentityResult { name: format!("Theta^2 = 0 (dim {dim})"), pass: sr.mul(&th, &th) == zero },
        IdentityResult { name: format!("Lambda Theta = 0 (dim {dim})"), pass: sr.mul(&lam, &th) == zero },
        IdentityResult { name: format!("Theta Lambda = 0 (dim {dim})"), pass: sr.mul(&th, &lam) == zero },
        IdentityResult {
            name: format!("Lambda = (id x tau)(P) (dim {dim})"),
            pass: tau_on_factor(&ScalarRing, &p, 1) == lam,
        },
        IdentityResult {
            name: format!("Theta = (id x tau)(Q) (dim {dim})"),
            pass: tau_on_factor(&ScalarRing, &q, 1) == th,
        },
    ];
    let rr = TensorRing::new(&RatRing, 2, dim);
    let r = r_operator(dim, 0, 1, 2);
    let lhs = rr.mul(&negate_uv(&r), &r);
    let two = |minus: u32, plus: u32| RatUV { num: RatUV::monomial(0, 0, Scalar::ONE).num, minus, plus };
    let rhs_c = RatRing.sub(&RatRing.sub(&RatRing.one(), &two(2, 0)), &two(0, 2));
    let rhs = rr.from_coeff(rhs_c);
    out.push(IdentityResult {
        name: format!("R(-u,-v)R(u,v) = 1 - 1/(u-v)^2 - 1/(u+v)^2 (dim {dim})"),
        pass: rr.is_zero(&rr.sub(&lhs, &rhs)),
    });
    if dim == 2 {
        let j1 = j_operator(2, 0, 2);
        let j2 = j_operator(2, 1, 2);
        let pjj = sr.mul(&sr.mul(&p, &j1), &j2);
        out.push(IdentityResult { name: "Q = -P J1 J2".into(), pass: q == sr.neg(&pjj) });
        out.push(IdentityResult { name: "P J1 = J2 P".into(), pass: sr.mul(&p, &j1) == sr.mul(&j2, &p) });
        // With the graded flip, `P(1⊗x) = (x⊗1)P` for every homogeneous `x`,
        // so this exchange rule holds as well.
        out.push(IdentityResult { name: "P J2 = J1 P".into(), pass: sr.mul(&p, &j2) == sr.mul(&j1, &p) });
    }
    out
}

/// The YQ-form matrix with `x₁₁ = a`, `x₋₁,₁ = b` as a function of layout
/// positions `(p, q)` in `{0, 1}` (position 1 is the label `−1`).
pub fn yq_entry<E: Clone, R: Ring<Elem = E>>(
    sr: &SeriesRing<'_, R>,
    a: &TruncSeries<E>,
    b: &TruncSeries<E>,
    p: usize,
    q: usize,
) -> TruncSeries<E> {
    match (p, q) {
        (0, 0) => a.clone(),
        (1, 0) => b.clone(),
        (0, 1) => b.substitute_neg(sr.inner),
        _ => a.substitute_neg(sr.inner),
    }
}

/// Checks `P^{ij}X^i(u) = X^j(u)P^{ij}`, `Q^{ij}X^i(u) = X^j(−u)Q^{ij}` and,
/// for every slot `k ∉ {i, j}`, `P^{ij}X^k = X^kP^{ij}`, `Q^{ij}X^k = X^kQ^{ij}`
/// for the YQ matrix with entries `a`, `b`.
pub fn verify_pq_transform<R: Ring>(
    ring: &R,
    a: &TruncSeries<R::Elem>,
    b: &TruncSeries<R::Elem>,
    arity: usize,
    i: usize,
    j: usize,
) -> Vec<IdentityResult> {
    let order = a.order().min(b.order());
    let sr = SeriesRing::new(ring, order);
    let tr = TensorRing::new(&sr, arity, 2);
    let xs = |slot: usize, neg: bool| {
        place_matrix(&sr, arity, 2, slot, |p, q| {
            let e = yq_entry(&sr, a, b, p, q);
            if neg {
                e.substitute_neg(ring)
            } else {
                e
            }
        })
    };
    let p = tr.lift(&build_operator(OperatorName::P, 2, i, j, arity));
    let q = tr.lift(&build_operator(OperatorName::Q, 2, i, j, arity));
    let mut out = vec![
        IdentityResult {
            name: format!("P{i}{j} X{i}(u) = X{j}(u) P{i}{j}"),
            pass: same(&tr, &tr.mul(&p, &xs(i, false)), &tr.mul(&xs(j, false), &p)),
        },
        IdentityResult {
            name: format!("Q{i}{j} X{i}(u) = X{j}(-u) Q{i}{j}"),
            pass: same(&tr, &tr.mul(&q, &xs(i, false)), &tr.mul(&xs(j, true), &q)),
        },
    ];
    for k in (0..arity).filter(|&k| k != i && k != j) {
        out.push(IdentityResult {
            name: format!("P{i}{j} X{k}(u) = X{k}(u) P{i}{j}"),
            pass: same(&tr, &tr.mul(&p, &xs(k, false)), &tr.mul(&xs(k, false), &p)),
        });
        out.push(IdentityResult {
            name: format!("Q{i}{j} X{k}(u) = X{k}(u) Q{i}{j}"),
            pass: same(&tr, &tr.mul(&q, &xs(k, false)), &tr.mul(&xs(k, false), &q)),
        });
    }
    out
}

/// Errors of [`verify_lambda_lemma`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LambdaLemmaError {
    /// The input does not satisfy `a_{ij}(u) = a_{−i,−j}(−u)`.
    #[error("matrix entries do not satisfy a_ij(u) = a_(-i,-j)(-u)")]
    NotSymmetric,
}

/// Checks the three identities
/// `(Λ⊗1)τ₂(A²(u)) = (Λ⊗1)A¹(u)`, `τ₂(A²(u))(Θ⊗1) = A¹(−u)(Θ⊗1)` and
/// `(Λ⊗1)A¹(u)(Λ⊗1) = Λ⊗str(A(u))` for `A = Σ E_{ij} ⊗ a_{ij}(u)` given by
/// layout positions.
pub fn verify_lambda_lemma<R: Ring>(
    ring: &R,
    dim: usize,
    entry: impl Fn(usize, usize) -> TruncSeries<R::Elem>,
) -> Result<Vec<IdentityResult>, LambdaLemmaError> {
    let order = entry(0, 0).order();
    let sr = SeriesRing::new(ring, order);
    for p in 0..dim {
        for q in 0..dim {
            let lhs = entry(p, q);
            let rhs = entry(pos(-label(p)), pos(-label(q))).substitute_neg(ring);
            if !sr.is_zero(&sr.sub(&lhs, &rhs)) {
                return Err(LambdaLemmaError::NotSymmetric);
            }
        }
    }
    let tr = TensorRing::new(&sr, 2, dim);
    let lam = tr.lift(&build_operator(OperatorName::Lambda, dim, 0, 1, 2));
    let th = tr.lift(&build_operator(OperatorName::Theta, dim, 0, 1, 2));
    let a1 = place_matrix(&sr, 2, dim, 0, &entry);
    let a1_neg = place_matrix(&sr, 2, dim, 0, |p, q| entry(p, q).substitute_neg(ring));
    let a2 = place_matrix(&sr, 2, dim, 1, &entry);
    let ta2 = tau_on_factor(&sr, &a2, 1);
    let one_slot = place_matrix(&sr, 1, dim, 0, &entry);
    let str_a = supertrace(&sr, &one_slot);
    Ok(vec![
        IdentityResult { name: "(L x 1) tau2(A^2) = (L x 1) A^1".into(), pass: same(&tr, &tr.mul(&lam, &ta2), &tr.mul(&lam, &a1)) },
        IdentityResult {
            name: "tau2(A^2) (Th x 1) = A^1(-u) (Th x 1)".into(),
            pass: same(&tr, &tr.mul(&ta2, &th), &tr.mul(&a1_neg, &th)),
        },
        IdentityResult {
            name: "(L x 1) A^1 (L x 1) = L x str(A)".into(),
            pass: same(&tr, &tr.mul(&tr.mul(&lam, &a1), &lam), &tr.mul_coeff_right(&lam, &str_a)),
        },
    ])
}

/// Parity of a label (re-exported convenience).
pub fn label_parity(i: i32) -> Parity {
    Parity::of_index(i)
}

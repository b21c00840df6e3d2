//! The verification suites behind `yq verify`.
//!
//! Every suite turns its checks into [`CheckRecord`]s with stable ids; the
//! report sorts them by id, so output is deterministic for a fixed
//! configuration and seed.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use yq_center::{
    berezinian_check, blockwise_lambda_identity, centrality_matrix, ev_center_corollary, lambda_identity,
    z_from_product, z_from_supertrace, CenterError,
};
use yq_core::{GenSymbol, Monomial, Scalar, SuperPoly};
use yq_gauss::{
    defining_block_matrix, generator_block_matrix, numeric_factor_mismatches, omega_checks, yangian_gauss, BlockRing,
    GaussError,
};
use yq_rtt::{ev_poly, gr_leading_check, reduce, MatrixRing, Strategy, YangianContext};
use yq_tensor::{verify_operator_identities, verify_pq_identities, verify_rtt_numeric};
use yq_verify::{
    bind_hprime, group_outcomes, grprime_tables, lookup, psi_composition_check, verify_suites, Env, EvalError, Status,
    Suite, VerifyError, VerifyResult,
};

use crate::config::SuiteName;

fn status_str<S: Serializer>(s: &Status, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&s.to_string())
}

/// One line of the report body.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    /// Stable identifier.
    pub id: String,
    /// Suite that produced the check.
    pub suite: SuiteName,
    /// Rank.
    pub n: usize,
    /// Truncation order (or the analogous size bound of the check).
    pub order: usize,
    /// Outcome.
    #[serde(serialize_with = "status_str")]
    pub status: Status,
    /// Highest total degree compared, for series checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    /// Number of index instances, for catalog checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instances: Option<usize>,
    /// The failing index instance.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    /// Description, witness or diagnostic.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Wall time; reported in the timing section only.
    #[serde(skip)]
    pub seconds: f64,
}

impl CheckRecord {
    fn new(id: impl Into<String>, suite: SuiteName, n: usize, order: usize, pass: bool) -> CheckRecord {
        CheckRecord {
            id: id.into(),
            suite,
            n,
            order,
            status: if pass { Status::Pass } else { Status::Fail },
            degree: None,
            instances: None,
            instance: None,
            detail: None,
            seconds: 0.0,
        }
    }

    fn detail(mut self, d: impl Into<String>) -> CheckRecord {
        self.detail = Some(d.into());
        self
    }

    fn timed(mut self, since: Instant) -> CheckRecord {
        self.seconds = since.elapsed().as_secs_f64();
        self
    }

    fn from_verify(r: VerifyResult, suite: SuiteName) -> CheckRecord {
        CheckRecord {
            id: r.id,
            suite,
            n: r.n,
            order: r.order,
            status: r.status,
            degree: Some(r.degree),
            instances: Some(r.instances),
            instance: r.instance,
            detail: r.witness,
            seconds: r.seconds,
        }
    }

    /// True if the status is pass.
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// One cell of the centrality matrix in the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralityCell {
    /// Coefficient index of `z`.
    pub r: usize,
    /// The generator `t[i,j,s]`.
    pub generator: String,
    /// Whether `[z_r, generator]` vanishes.
    pub commutes: bool,
}

/// The center section of the report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CenterSection {
    /// Coefficients `z_0, …, z_L` in canonical text form.
    pub z: Vec<String>,
    /// Whether the supertrace and Gauss-product routes agree.
    pub routes_equal: bool,
    /// Brackets `[z_r, t_{ij}^{(s)}]` for `r + s ≤ L`.
    pub centrality: Vec<CentralityCell>,
}

/// Everything a suite contributes to the report.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SuiteOutput {
    /// Check results.
    pub records: Vec<CheckRecord>,
    /// Inferred definitions, e.g. the `h′` binding.
    pub bindings: BTreeMap<String, String>,
    /// Identities with alternative forms: whether any form holds.
    pub groups: BTreeMap<String, bool>,
    /// The center section, for the center suite.
    pub center: Option<CenterSection>,
}

/// Failures that stop a suite from producing results.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    /// A Gauss factor or inverse could not be formed.
    #[error(transparent)]
    Gauss(#[from] GaussError),
    /// The verifier could not run a relation.
    #[error(transparent)]
    Verify(#[from] VerifyError),
    /// A center computation failed.
    #[error(transparent)]
    Center(#[from] CenterError),
    /// A relation failed to evaluate.
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Runs one suite at rank `n` and order `L`.
pub fn run_suite(suite: SuiteName, n: usize, order: usize, seed: u64) -> Result<SuiteOutput, SuiteError> {
    match suite {
        SuiteName::Tensor => Ok(tensor_suite(n)),
        SuiteName::Rtt => Ok(rtt_suite(n, order, seed)),
        SuiteName::Gauss => gauss_suite(n, order),
        SuiteName::Drinfeld => catalog_suite(SuiteName::Drinfeld, Suite::Drinfeld, n, order),
        SuiteName::Serre => catalog_suite(SuiteName::Serre, Suite::Serre, n, order),
        SuiteName::Embedding => embedding_suite(n, order),
        SuiteName::Center => center_suite(n, order),
        SuiteName::Grprime => grprime_suite(n, order),
    }
}

/// The 20 `P`/`Q` identities on `C^{1|1}` and the auxiliary operator
/// identities on `C^{1|1}` and `C^{n|n}`.
pub fn tensor_suite(n: usize) -> SuiteOutput {
    let s = SuiteName::Tensor;
    let start = Instant::now();
    let mut records: Vec<CheckRecord> = verify_pq_identities()
        .into_iter()
        .enumerate()
        .map(|(i, r)| CheckRecord::new(format!("tensor.pq.{:02}", i + 1), s, n, 0, r.pass).detail(r.name))
        .collect();
    let mut dims = vec![2];
    if n > 1 {
        dims.push(2 * n);
    }
    for dim in dims {
        for (i, r) in verify_operator_identities(dim).into_iter().enumerate() {
            records.push(CheckRecord::new(format!("tensor.op.d{dim}.{:02}", i + 1), s, n, 0, r.pass).detail(r.name));
        }
    }
    let secs = start.elapsed().as_secs_f64() / records.len() as f64;
    records.iter_mut().for_each(|r| r.seconds = secs);
    SuiteOutput { records, ..Default::default() }
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_degree: u32) -> SuperPoly {
    let mut budget = rng.gen_range(1..=max_degree);
    let mut w = Vec::new();
    while budget > 0 {
        let level = rng.gen_range(1..=budget);
        budget -= level;
        let row = rng.gen_range(1..=n as i32) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let col = rng.gen_range(1..=n as i32);
        w.push(GenSymbol::new(row, col, level).expect("indices in range"));
    }
    SuperPoly::term(Monomial::from_slice(&w), Scalar::ONE)
}

/// Reduces `count` random words of filtration degree `≤ max_degree`
/// (ranks cycling through `ranks`) with the leftmost and rightmost
/// strategies; returns how many disagree with each other or with the
/// cached normal form.
pub fn confluence_discrepancies(ranks: &[usize], max_degree: u32, count: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ctxs: Vec<YangianContext> = ranks.iter().map(|&n| YangianContext::new(n)).collect();
    (0..count)
        .filter(|trial| {
            let k = trial % ranks.len();
            let (n, ctx) = (ranks[k], &ctxs[k]);
            let w = random_word(&mut rng, n, max_degree);
            let left = reduce(ctx, &w, Strategy::Leftmost);
            let right = reduce(ctx, &w, Strategy::Rightmost);
            left != right || left != ctx.normal_form(&w)
        })
        .count()
}

/// Applies `ev` (in the defining representation) to `count` random
/// combinations of three words before and after normal ordering; returns the
/// number of mismatches.
pub fn ev_normal_form_mismatches(ranks: &[usize], max_degree: u32, count: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ctxs: Vec<YangianContext> = ranks.iter().map(|&n| YangianContext::new(n)).collect();
    (0..count)
        .filter(|trial| {
            let k = trial % ranks.len();
            let (n, ctx) = (ranks[k], &ctxs[k]);
            let mut p = SuperPoly::zero();
            for _ in 0..3 {
                let c = Scalar::new(rng.gen_range(-5..=5), rng.gen_range(1..=3));
                p.add_scaled(&random_word(&mut rng, n, max_degree), &c);
            }
            ev_poly(n, &ctx.normal_form(&p)) != ev_poly(n, &p)
        })
        .count()
}

/// The numeric RTT oracle and the rewriting checks at rank `n`.
pub fn rtt_suite(n: usize, order: usize, seed: u64) -> SuiteOutput {
    let s = SuiteName::Rtt;
    let mut records = Vec::new();
    let start = Instant::now();
    records.push(
        CheckRecord::new("rtt.numeric", s, n, 0, verify_rtt_numeric(n))
            .detail("(u^2 - v^2)(R T1 T2 - T2 T1 R) = 0 in the defining representation")
            .timed(start),
    );
    let start = Instant::now();
    let bad = confluence_discrepancies(&[n], order as u32, 1000, seed);
    records.push(
        CheckRecord::new("rtt.confluence", s, n, order, bad == 0)
            .detail(format!("1000 random words, leftmost vs rightmost reduction: {bad} discrepancies"))
            .timed(start),
    );
    let start = Instant::now();
    let bad = ev_normal_form_mismatches(&[n], order as u32, 500, seed.wrapping_add(1));
    records.push(
        CheckRecord::new("rtt.ev_normal_form", s, n, order, bad == 0)
            .detail(format!("500 random elements, ev(normal_form(p)) = ev(p): {bad} mismatches"))
            .timed(start),
    );
    SuiteOutput { records, ..Default::default() }
}

/// Gauss decomposition (both routes, reconstruction, numeric factors) and
/// the six `ω` families.
pub fn gauss_suite(n: usize, order: usize) -> Result<SuiteOutput, SuiteError> {
    let s = SuiteName::Gauss;
    let ctx = YangianContext::new(n);
    let br = BlockRing::new(&ctx, order);
    let start = Instant::now();
    let t = generator_block_matrix(&ctx, order);
    let q = br.gauss_quasideterminant(&t)?;
    let e = br.gauss_elimination(&t)?;
    let mut records = vec![
        CheckRecord::new("gauss.routes", s, n, order, br.gauss_equal(&q, &e))
            .detail("quasi-determinant factors equal elimination factors")
            .timed(start),
    ];
    let start = Instant::now();
    records.push(
        CheckRecord::new("gauss.reconstruct", s, n, order, br.equal(&br.reconstruct(&q), &t))
            .detail("F H E = T")
            .timed(start),
    );
    records.push(
        CheckRecord::new("gauss.invariants", s, n, order, br.check_invariants(&q))
            .detail("F lower and E upper unitriangular, H block diagonal"),
    );
    let start = Instant::now();
    let bad = numeric_factor_mismatches(n, &q, order)?;
    let names: Vec<String> = bad.iter().map(|b| b.to_string()).collect();
    records.push(
        CheckRecord::new("gauss.numeric", s, n, order, bad.is_empty())
            .detail(if bad.is_empty() {
                "ev of every factor equals the factor of ev(T)".to_string()
            } else {
                format!("mismatched series: {}", names.join(", "))
            })
            .timed(start),
    );
    let start = Instant::now();
    let omega = omega_checks(&ctx, &q);
    let secs = start.elapsed().as_secs_f64() / omega.len().max(1) as f64;
    for (i, r) in omega.into_iter().enumerate() {
        let mut rec = CheckRecord::new(format!("omega.{:02}", i + 1), s, n, order, r.pass).detail(r.name);
        rec.seconds = secs;
        records.push(rec);
    }
    Ok(SuiteOutput { records, ..Default::default() })
}

fn symbolic_env(ctx: &YangianContext, order: usize) -> Result<(Env<'_, YangianContext>, BTreeMap<String, String>), SuiteError> {
    let mut env = Env::symbolic(ctx, order)?;
    let mut bindings = BTreeMap::new();
    if ctx.n() >= 2 {
        let b = bind_hprime(&mut env);
        let text = b.map(|b| b.to_string()).unwrap_or_else(|| "unresolved: no candidate satisfies the probes".into());
        bindings.insert("hprime".to_string(), text);
    }
    Ok((env, bindings))
}

/// Alternative groups only (ids that stand alone are omitted), together
/// with the members of each group that verify.
fn alternative_groups(results: &[VerifyResult]) -> (BTreeMap<String, bool>, BTreeMap<String, String>) {
    let mut members: BTreeMap<String, Vec<&str>> = BTreeMap::new();
    for r in results {
        if let Some(g) = lookup(&r.id).and_then(|s| s.alternative) {
            let e = members.entry(g.to_string()).or_default();
            if r.passed() {
                e.push(&r.id);
            }
        }
    }
    let mut groups = group_outcomes(results);
    groups.retain(|k, _| members.contains_key(k));
    let verifying = members
        .into_iter()
        .map(|(g, ids)| (format!("variant:{g}"), if ids.is_empty() { "none".to_string() } else { ids.join(", ") }))
        .collect();
    (groups, verifying)
}

/// Every catalog entry of `suite` applicable at rank `n`.
pub fn catalog_suite(name: SuiteName, suite: Suite, n: usize, order: usize) -> Result<SuiteOutput, SuiteError> {
    let ctx = YangianContext::new(n);
    let (env, mut bindings) = symbolic_env(&ctx, order)?;
    let results = verify_suites(&env, &[suite])?;
    let (groups, verifying) = alternative_groups(&results);
    bindings.extend(verifying);
    let records = results.into_iter().map(|r| CheckRecord::from_verify(r, name)).collect();
    Ok(SuiteOutput { records, bindings, groups, center: None })
}

/// The embedding relations, plus `ψ_m ∘ ψ_1 = ψ_{m+1}` when `n ≥ 3`.
pub fn embedding_suite(n: usize, order: usize) -> Result<SuiteOutput, SuiteError> {
    let mut out = catalog_suite(SuiteName::Embedding, Suite::Embedding, n, order)?;
    if n >= 3 {
        let start = Instant::now();
        let bad = psi_composition_check(n, 1, order)?;
        let detail = match bad {
            None => "psi_1 composed with psi_1 equals psi_2 on generators".to_string(),
            Some((i, j)) => format!("first mismatch at generator block ({i},{j})"),
        };
        out.records.push(
            CheckRecord::new("emb.compose", SuiteName::Embedding, n, order, bad.is_none()).detail(detail).timed(start),
        );
    }
    Ok(out)
}

/// The central series: both routes, evenness, centrality, the Λ-identity,
/// the evaluation image and the Berezinian factors.
pub fn center_suite(n: usize, order: usize) -> Result<SuiteOutput, SuiteError> {
    let s = SuiteName::Center;
    let ctx = YangianContext::new(n);
    let mut records = Vec::new();
    let start = Instant::now();
    let z = z_from_supertrace(&ctx, order)?;
    let (zp, _) = z_from_product(&ctx, order)?;
    let routes_equal = z == zp;
    records.push(
        CheckRecord::new("center.routes", s, n, order, routes_equal)
            .detail("1 - str(T dT~) equals the product of 1 - str(H_a dH~_a)")
            .timed(start),
    );
    let odd = z.nonzero_odd_coefficients();
    records.push(
        CheckRecord::new("center.even", s, n, order, odd.is_empty() && z.is_unital())
            .detail(format!("constant term 1; nonzero odd coefficients: {odd:?}")),
    );
    let start = Instant::now();
    let cells = centrality_matrix(&ctx, &z, order);
    let bad = cells.iter().filter(|c| !c.commutes).count();
    records.push(
        CheckRecord::new("center.centrality", s, n, order, bad == 0)
            .detail(format!("{} brackets [z_r, t_ij^(s)] with r + s <= {order}: {bad} nonzero", cells.len()))
            .timed(start),
    );
    let start = Instant::now();
    let lam = lambda_identity(&ctx, order)?;
    records.push(
        CheckRecord::new("center.lambda", s, n, order, lam.pass)
            .detail("(Lambda x 1) T1(u) tau2(T~2(u)) = Lambda x z(u)")
            .timed(start),
    );
    let start = Instant::now();
    let blocks = blockwise_lambda_identity(&ctx, order)?;
    let failed: Vec<&str> = blocks.iter().filter(|b| !b.pass).map(|b| b.name.as_str()).collect();
    records.push(
        CheckRecord::new("center.lambda.block", s, n, order, failed.is_empty())
            .detail(format!("{} block identities, failing: {failed:?}", blocks.len()))
            .timed(start),
    );
    let start = Instant::now();
    let ev = ev_center_corollary(n, order.saturating_sub(1).max(1))?;
    records.push(
        CheckRecord::new("center.ev.stated", s, n, order, ev.stated_holds())
            .detail(format!("ev(z) = 1 + sum_k str(G^(k+1)) u^(-k-1), per k: {:?}", ev.stated))
            .timed(start),
    );
    records.push(
        CheckRecord::new("center.ev.shifted", s, n, order, ev.shifted_holds())
            .detail(format!("ev(z) = 1 + sum_k str(G^k) u^(-k-1), per k: {:?}", ev.shifted)),
    );
    let start = Instant::now();
    let gd = yangian_gauss(&ctx, order)?;
    let sym = berezinian_check(&BlockRing::new(&ctx, order), &gd.h)?;
    let mr = MatrixRing { dim: 2 * n };
    let nbr = BlockRing::new(&mr, order);
    let num = berezinian_check(&nbr, &nbr.gauss_elimination(&defining_block_matrix(n, order))?.h)?;
    let pass = sym.iter().all(|f| f.pass) && num.iter().all(|f| f.pass);
    records.push(
        CheckRecord::new("center.berezinian", s, n, order, pass)
            .detail("z_a(u) = C_a(u)C_a(-u) - D_a(u)D_a(-u) for every block, symbolically and under ev")
            .timed(start),
    );
    let center = CenterSection {
        z: z.coefficient_texts(),
        routes_equal,
        centrality: cells
            .into_iter()
            .map(|c| CentralityCell { r: c.r, generator: c.generator.to_string(), commutes: c.commutes })
            .collect(),
    };
    Ok(SuiteOutput { records, center: Some(center), ..Default::default() })
}

/// Leading-term tables for the second filtration and the leading-term map
/// on generator pairs of total loop degree `≤ L`.
pub fn grprime_suite(n: usize, order: usize) -> Result<SuiteOutput, SuiteError> {
    let s = SuiteName::Grprime;
    let ctx = YangianContext::new(n);
    let start = Instant::now();
    let gd = yangian_gauss(&ctx, order)?;
    let max_rs = order - 1;
    let mut records: Vec<CheckRecord> = grprime_tables(&ctx, &gd, max_rs)
        .into_iter()
        .map(|t| {
            let detail = match t.failures.first() {
                None => format!("{} brackets with r + s <= {max_rs}", t.checked),
                Some(f) => format!("{} of {} brackets fail; first: {f}", t.failures.len(), t.checked),
            };
            CheckRecord::new(t.id, s, n, max_rs, t.passed()).detail(detail)
        })
        .collect();
    let secs = start.elapsed().as_secs_f64() / records.len().max(1) as f64;
    records.iter_mut().for_each(|r| r.seconds = secs);
    let start = Instant::now();
    let gens = ctx.generators(order as u32 + 1);
    let pairs: Vec<(GenSymbol, GenSymbol)> = gens
        .iter()
        .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| (a.level() + b.level()) as usize <= order + 2)
        .collect();
    use rayon::prelude::*;
    let bad: Vec<String> =
        pairs.par_iter().filter(|(a, b)| !gr_leading_check(&ctx, *a, *b)).map(|(a, b)| format!("[{a}, {b}]")).collect();
    records.push(
        CheckRecord::new("gr.leading", s, n, order, bad.is_empty())
            .detail(format!("{} generator pairs with loop degree r + s <= {order}; failing: {bad:?}", pairs.len()))
            .timed(start),
    );
    Ok(SuiteOutput { records, ..Default::default() })
}

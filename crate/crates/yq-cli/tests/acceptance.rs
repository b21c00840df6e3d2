//! Acceptance run: one line per criterion, with the sizes and time limits
//! pinned below.  All comparisons are exact over `Q`; only the two time
//! limits are tolerances.
//!
//! Some printed relations do not hold as stated (their corrected forms do);
//! those criteria are reported as failing, and the run succeeds iff the set
//! of failing criteria is exactly [`EXPECTED_FAILING`].

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use yq_center::{
    berezinian_check, centrality_matrix, ev_center_corollary, lambda_identity, z_from_product, z_from_supertrace,
};
use yq_cli::suites::{confluence_discrepancies, ev_normal_form_mismatches};
use yq_gauss::{
    generator_block_matrix, numeric_factor_mismatches, omega_checks, yangian_gauss, BlockRing,
};
use yq_rtt::{gr_leading_check, YangianContext};
use yq_tensor::{verify_operator_identities, verify_pq_identities, verify_rtt_numeric};
use yq_verify::{
    bind_hprime, grprime_tables, lookup, verify_in, verify_psi_identities, verify_suites, Env, Suite, VerifyResult,
};

/// Time limit of criterion 1.
const TENSOR_LIMIT: Duration = Duration::from_secs(1);
/// Time limit of criterion 2.
const RTT_LIMIT: Duration = Duration::from_secs(10);
/// Seed of the random words in criterion 3.
const SEED: u64 = 2024;

/// Criteria that fail because a printed relation is wrong as stated.
const EXPECTED_FAILING: [usize; 4] = [5, 7, 8, 9];

struct Line {
    criterion: usize,
    pass: bool,
    detail: String,
    seconds: f64,
}

fn failing_ids(results: &[VerifyResult]) -> Vec<String> {
    results.iter().filter(|r| !r.passed()).map(|r| format!("{} ({})", r.id, r.status)).collect()
}

fn criterion_1() -> (bool, String) {
    let start = Instant::now();
    let pq = verify_pq_identities();
    let ops = verify_operator_identities(2);
    let elapsed = start.elapsed();
    let bad: Vec<String> = pq.iter().chain(&ops).filter(|r| !r.pass).map(|r| r.name.clone()).collect();
    let pass = bad.is_empty() && elapsed < TENSOR_LIMIT;
    let detail = format!(
        "{} P/Q equalities, {} operator identities, failing {bad:?}, {:.3}s (limit {}s)",
        pq.len(),
        ops.len(),
        elapsed.as_secs_f64(),
        TENSOR_LIMIT.as_secs()
    );
    (pass, detail)
}

fn criterion_2() -> (bool, String) {
    let start = Instant::now();
    let ok: Vec<bool> = (1..=3).map(verify_rtt_numeric).collect();
    let elapsed = start.elapsed();
    let pass = ok.iter().all(|&b| b) && elapsed < RTT_LIMIT;
    (pass, format!("n=1,2,3: {ok:?}, {:.3}s (limit {}s)", elapsed.as_secs_f64(), RTT_LIMIT.as_secs()))
}

fn criterion_3() -> (bool, String) {
    let confluence = confluence_discrepancies(&[1, 2], 5, 1000, SEED);
    let ev = ev_normal_form_mismatches(&[1, 2, 3], 5, 500, SEED + 1);
    (
        confluence == 0 && ev == 0,
        format!("1000 words (n<=2, degree<=5): {confluence} discrepancies; 500 elements: {ev} ev mismatches"),
    )
}

fn criterion_4() -> (bool, String) {
    let mut notes = Vec::new();
    let mut pass = true;
    for (n, order) in [(2, 6), (3, 4)] {
        let ctx = YangianContext::new(n);
        let br = BlockRing::new(&ctx, order);
        let t = generator_block_matrix(&ctx, order);
        let q = br.gauss_quasideterminant(&t).expect("quasi-determinants exist");
        let e = br.gauss_elimination(&t).expect("elimination succeeds");
        let reconstruct = br.equal(&br.reconstruct(&e), &t);
        let routes = br.gauss_equal(&q, &e);
        let numeric = numeric_factor_mismatches(n, &q, order).expect("numeric decomposition exists");
        pass &= reconstruct && routes && numeric.is_empty();
        notes.push(format!(
            "n={n} L={order}: FHE=T {reconstruct}, routes agree {routes}, numeric mismatches {}",
            numeric.len()
        ));
    }
    (pass, notes.join("; "))
}

/// Criteria 5 and 6 share the rank-three environment.
fn criteria_5_and_6() -> ((bool, String), (bool, String)) {
    let ctx2 = YangianContext::new(2);
    let mut env2 = Env::symbolic(&ctx2, 5).expect("environment");
    let hprime = bind_hprime(&mut env2).map(|b| b.to_string()).unwrap_or_else(|| "unresolved".into());
    let dr2 = verify_suites(&env2, &[Suite::Drinfeld]).expect("drinfeld suite runs");
    let printed: Vec<VerifyResult> = dr2.iter().filter(|r| r.id.starts_with("dr.") && !r.id.ends_with(".fix")).cloned().collect();
    let fixes_pass = dr2.iter().filter(|r| r.id.ends_with(".fix")).all(VerifyResult::passed);

    let ctx3 = YangianContext::new(3);
    let mut env3 = Env::symbolic(&ctx3, 4).expect("environment");
    bind_hprime(&mut env3);
    let serre: Vec<VerifyResult> = ["dr.eserre1", "dr.eserre2", "dr.eserre3", "dr.eserre4"]
        .iter()
        .chain(&["dr.fserre1", "dr.fserre2", "dr.fserre3", "dr.fserre4"])
        .map(|id| verify_in(&env3, &lookup(id).expect("in catalog"), &[]).expect("runs"))
        .collect();
    let c5_bad: Vec<String> = failing_ids(&printed).into_iter().chain(failing_ids(&serre)).collect();
    let c5 = (
        c5_bad.is_empty(),
        format!(
            "{} rank-two relations at L=5 and 8 Serre relations at n=3 L=4; h' = {hprime}; failing {c5_bad:?}; corrected forms pass: {fixes_pass}",
            printed.len()
        ),
    );

    let q2: Vec<VerifyResult> = dr2.iter().filter(|r| r.id.starts_with("q2.")).cloned().collect();
    let q3: Vec<VerifyResult> = verify_suites(&env3, &[Suite::Serre]).expect("serre suite runs");
    let component = |id: &str| id.starts_with("q3.Serre.");
    let e1e2: Vec<&str> = q3.iter().filter(|r| r.id.starts_with("q3.e1e2.") && r.passed()).map(|r| r.id.as_str()).collect();
    let labelled: Vec<&VerifyResult> =
        q2.iter().chain(q3.iter().filter(|r| !component(&r.id) && !r.id.starts_with("q3.e1e2."))).collect();
    let bad: Vec<String> = labelled.iter().filter(|r| !r.passed()).map(|r| r.id.clone()).collect();
    let components_bad: Vec<&str> = q3.iter().filter(|r| component(&r.id) && !r.passed()).map(|r| r.id.as_str()).collect();
    let c6 = (
        bad.is_empty() && !e1e2.is_empty(),
        format!(
            "{} labelled relations (q2 at L=5, q3 at L=4), failing {bad:?}; e1e2 variant verifying: {e1e2:?}; unlabelled components failing: {components_bad:?}",
            labelled.len()
        ),
    );
    (c5, c6)
}

fn criterion_7() -> (bool, String) {
    let ctx = YangianContext::new(2);
    let env = Env::symbolic(&ctx, 4).expect("environment");
    let mut results: Vec<VerifyResult> = ["emb.rtt", "emb.com"]
        .iter()
        .map(|id| verify_in(&env, &lookup(id).expect("in catalog"), &[]).expect("runs"))
        .collect();
    let mut corrected = true;
    for (m, n) in [(1, 1), (1, 2)] {
        for r in verify_psi_identities(m, n, 4).expect("runs") {
            if r.id == "emb.qnpsi2.u" {
                corrected &= r.passed();
            } else {
                results.push(VerifyResult { id: format!("{} (m={m},n={n})", r.id), ..r });
            }
        }
    }
    let bad = failing_ids(&results);
    (bad.is_empty(), format!("{} checks at L=4, failing {bad:?}; corrected form passes: {corrected}", results.len()))
}

fn criterion_8() -> (bool, String) {
    let mut notes = Vec::new();
    let mut pass = true;
    for (n, order) in [(1, 6), (2, 5)] {
        let ctx = YangianContext::new(n);
        let z = z_from_supertrace(&ctx, order).expect("z exists");
        let (zp, _) = z_from_product(&ctx, order).expect("z exists");
        let routes = z == zp;
        let even = z.nonzero_odd_coefficients().is_empty();
        let cells = centrality_matrix(&ctx, &z, 6);
        let central = cells.iter().all(|c| c.commutes);
        pass &= routes && even && central;
        notes.push(format!("n={n} L={order}: routes {routes}, even {even}, {} brackets central {central}", cells.len()));
    }
    for (n, order) in [(1, 5), (2, 4)] {
        let lam = lambda_identity(&YangianContext::new(n), order).expect("lambda identity runs");
        pass &= lam.pass;
        notes.push(format!("lambda n={n} L={order}: {}", lam.pass));
    }
    let mut stated = true;
    let mut shifted = true;
    for n in 1..=3 {
        let ev = ev_center_corollary(n, 6).expect("ev corollary runs");
        stated &= ev.stated_holds();
        shifted &= ev.shifted_holds();
    }
    pass &= stated;
    notes.push(format!("ev(z) as stated (G^(k+1)) {stated}, with G^k {shifted}"));
    let ctx = YangianContext::new(1);
    let gd = yangian_gauss(&ctx, 6).expect("gauss");
    let ber = berezinian_check(&BlockRing::new(&ctx, 6), &gd.h).expect("berezinian").iter().all(|f| f.pass);
    pass &= ber;
    notes.push(format!("berezinian n=1 L=6: {ber}"));
    (pass, notes.join("; "))
}

fn criterion_9() -> (bool, String) {
    let ctx = YangianContext::new(2);
    let gd = yangian_gauss(&ctx, 6).expect("gauss");
    let tables2 = grprime_tables(&ctx, &gd, 5);
    let gens = ctx.generators(7);
    let mut leading_bad = 0;
    let mut pairs = 0;
    for &a in &gens {
        for &b in &gens {
            if a.level() + b.level() <= 7 {
                pairs += 1;
                leading_bad += usize::from(!gr_leading_check(&ctx, a, b));
            }
        }
    }
    let ctx3 = YangianContext::new(3);
    let gd3 = yangian_gauss(&ctx3, 4).expect("gauss");
    let tables3: Vec<_> =
        grprime_tables(&ctx3, &gd3, 3).into_iter().filter(|t| ["gr.ee", "gr.eet", "gr.etet"].contains(&t.id)).collect();
    let printed2: Vec<_> = tables2.iter().filter(|t| !t.id.ends_with(".fix")).collect();
    let bad: Vec<String> = printed2
        .iter()
        .map(|t| format!("{} (n=2)", t.id))
        .zip(printed2.iter().map(|t| t.passed()))
        .chain(tables3.iter().map(|t| (format!("{} (n=3)", t.id), t.passed())))
        .filter(|(_, ok)| !ok)
        .map(|(id, _)| id)
        .collect();
    let fixes = tables2.iter().filter(|t| t.id.ends_with(".fix")).all(|t| t.passed());
    (
        bad.is_empty() && leading_bad == 0,
        format!(
            "{pairs} generator pairs (n=2, r+s<=5): {leading_bad} leading-term failures; tables failing {bad:?}; corrected tables pass: {fixes}"
        ),
    )
}

fn criterion_10() -> (bool, String) {
    let ctx = YangianContext::new(3);
    let gd = yangian_gauss(&ctx, 5).expect("gauss");
    let res = omega_checks(&ctx, &gd);
    let bad: Vec<&str> = res.iter().filter(|r| !r.pass).map(|r| r.name.as_str()).collect();
    (bad.is_empty(), format!("{} instances of the six families at n=3 L=5, failing {bad:?}", res.len()))
}

fn timed(criterion: usize, f: impl FnOnce() -> (bool, String)) -> Line {
    let start = Instant::now();
    let (pass, detail) = f();
    Line { criterion, pass, detail, seconds: start.elapsed().as_secs_f64() }
}

fn main() -> ExitCode {
    let mut lines = vec![timed(1, criterion_1), timed(2, criterion_2), timed(3, criterion_3), timed(4, criterion_4)];
    let start = Instant::now();
    let (c5, c6) = criteria_5_and_6();
    let secs = start.elapsed().as_secs_f64();
    lines.push(Line { criterion: 5, pass: c5.0, detail: c5.1, seconds: secs });
    lines.push(Line { criterion: 6, pass: c6.0, detail: c6.1, seconds: 0.0 });
    lines.extend([timed(7, criterion_7), timed(8, criterion_8), timed(9, criterion_9), timed(10, criterion_10)]);
    for l in &lines {
        println!(
            "criterion {:>2}: {} ({:.2}s) {}",
            l.criterion,
            if l.pass { "PASS" } else { "FAIL" },
            l.seconds,
            l.detail
        );
    }
    let failing: BTreeSet<usize> = lines.iter().filter(|l| !l.pass).map(|l| l.criterion).collect();
    let expected: BTreeSet<usize> = EXPECTED_FAILING.into_iter().collect();
    if failing == expected {
        println!("acceptance: failing criteria {failing:?} match the documented set");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failing:?}, documented {expected:?}");
        ExitCode::FAILURE
    }
}

//! Leading-term checks in the associated graded of the second filtration,
//! where `t_{ij}^{(r)}` has degree `r − 1`.
//!
//! A bracket identity `[π(x), π(y)] = π(z)` in degree `d` holds iff
//! `[x, y] − z` has no monomial of loop degree `≥ d` in PBW normal form.

use yq_core::{Ring, Scalar, SuperPoly};
use yq_gauss::{root_element, GaussData};
use yq_rtt::YangianContext;

/// Outcome of one family of leading-term identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableResult {
    /// Family id: `gr.hh`, `gr.hht`, `gr.htht`, `gr.ee`, `gr.eet`, `gr.etet`,
    /// and the sign-corrected `gr.htht.fix`, `gr.etet.fix`.
    pub id: &'static str,
    /// Number of index/degree instances checked.
    pub checked: usize,
    /// Failing instances, e.g. `a=1 b=2 c=2 d=3 r=0 s=1`.
    pub failures: Vec<String>,
}

impl TableResult {
    /// True if no instance failed.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn top_vanishes(p: &SuperPoly, degree: u32) -> bool {
    p.iter().all(|(m, _)| m.loop_degree() < degree)
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

struct Table<'a> {
    ctx: &'a YangianContext,
    result: TableResult,
}

impl<'a> Table<'a> {
    fn check(&mut self, lhs: SuperPoly, rhs: SuperPoly, degree: usize, label: impl FnOnce() -> String) {
        self.result.checked += 1;
        if !top_vanishes(&self.ctx.sub(&lhs, &rhs), degree as u32) {
            self.result.failures.push(label());
        }
    }
}

/// Checks the six families of graded bracket identities for all index cases
/// of rank `ctx.n()` and all `r + s ≤ max_rs`.  `gd` must be exact to order
/// at least `max_rs + 1`.
pub fn grprime_tables(ctx: &YangianContext, gd: &GaussData<SuperPoly>, max_rs: usize) -> Vec<TableResult> {
    let n = ctx.n();
    let scaled = |k: i64, p: &SuperPoly| ctx.scale(&Scalar::int(k), p);
    let table = |id| Table { ctx, result: TableResult { id, checked: 0, failures: Vec::new() } };
    let (mut hh, mut hht, mut htht) = (table("gr.hh"), table("gr.hht"), table("gr.htht"));
    let (mut ee, mut eet, mut etet) = (table("gr.ee"), table("gr.eet"), table("gr.etet"));
    let (mut htht_fix, mut etet_fix) = (table("gr.htht.fix"), table("gr.etet.fix"));
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    for r in 0..=max_rs {
        for s in 0..=max_rs - r {
            let d = r + s;
            for a in 1..=n {
                let (h, hb) = (gd.h(a), gd.hbar(a));
                let label = || format!("a={a} r={r} s={s}");
                hh.check(ctx.bracket(h.coeff(r + 1), h.coeff(s + 1)), ctx.zero(), d, label);
                let rhs = scaled(sign(r) - 1, hb.coeff(d + 1));
                hht.check(ctx.bracket(h.coeff(r + 1), hb.coeff(s + 1)), rhs, d, label);
                let lhs = ctx.bracket(hb.coeff(r + 1), hb.coeff(s + 1));
                let rhs = scaled(sign(r) + sign(s), h.coeff(d + 1));
                htht.check(lhs.clone(), rhs, d, label);
                let rhs = scaled(-(sign(r) + sign(s)), h.coeff(d + 1));
                htht_fix.check(lhs, rhs, d, label);
            }
            for &(a, b) in &pairs {
                for &(c, dd) in &pairs {
                    let label = || format!("a={a} b={b} c={c} d={dd} r={r} s={s}");
                    let root = |x, y, k, bar| root_element(ctx, gd, x, y, k, bar);
                    // δ_bc-term and δ_ad-term with their signs.
                    let rhs = |bar: bool, sb: i64, sa: i64| {
                        let mut out = ctx.zero();
                        if b == c {
                            out = ctx.add(&out, &scaled(sb, &root(a, dd, d + 1, bar)));
                        }
                        if a == dd {
                            out = ctx.sub(&out, &scaled(sa, &root(c, b, d + 1, bar)));
                        }
                        out
                    };
                    let (e1, eb1) = (root(a, b, r + 1, false), root(a, b, r + 1, true));
                    let (e2, eb2) = (root(c, dd, s + 1, false), root(c, dd, s + 1, true));
                    ee.check(ctx.bracket(&e1, &e2), rhs(false, 1, 1), d, label);
                    eet.check(ctx.bracket(&e1, &eb2), rhs(true, sign(r), 1), d, label);
                    let lhs = ctx.bracket(&eb1, &eb2);
                    etet.check(lhs.clone(), rhs(false, sign(r), sign(s)), d, label);
                    etet_fix.check(lhs, rhs(false, -sign(r), sign(s)), d, label);
                }
            }
        }
    }
    vec![
        hh.result,
        hht.result,
        htht.result,
        htht_fix.result,
        ee.result,
        eet.result,
        etet.result,
        etet_fix.result,
    ]
}

//! Leading terms in the associated graded of the second filtration.

use yq_gauss::yangian_gauss;
use yq_rtt::{gr_leading_check, YangianContext};
use yq_verify::grprime_tables;

fn failing(n: usize, max_rs: usize) -> Vec<&'static str> {
    let ctx = YangianContext::new(n);
    let gd = yangian_gauss(&ctx, max_rs + 1).unwrap();
    let tables = grprime_tables(&ctx, &gd, max_rs);
    assert!(tables.iter().all(|t| t.checked > 0));
    tables.iter().filter(|t| !t.passed()).map(|t| t.id).collect()
}

#[test]
fn tables_rank_three() {
    // The printed odd–odd tables differ by a sign from the relations that hold;
    // the corrected families pass.
    assert_eq!(failing(3, 3), vec!["gr.htht", "gr.etet"]);
}

#[test]
fn tables_rank_two() {
    assert_eq!(failing(2, 5), vec!["gr.htht"]);
}

#[test]
fn generator_brackets_match_the_current_algebra() {
    let ctx = YangianContext::new(2);
    let gens = ctx.generators(5);
    for &g1 in &gens {
        for &g2 in &gens {
            if g1.level() + g2.level() <= 5 {
                assert!(gr_leading_check(&ctx, g1, g2), "{g1:?} {g2:?}");
            }
        }
    }
}

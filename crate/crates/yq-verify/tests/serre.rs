//! Rank-three relations and the Serre relations.

use yq_rtt::YangianContext;
use yq_verify::{bind_hprime, group_outcomes, lookup, verify_in, verify_suites, Env, Status, Suite};

#[test]
fn rank_three_suite_at_order_four() {
    let ctx = YangianContext::new(3);
    let mut env = Env::symbolic(&ctx, 4).unwrap();
    bind_hprime(&mut env);
    let results = verify_suites(&env, &[Suite::Serre]).unwrap();
    let failing: Vec<_> = results.iter().filter(|r| !r.passed()).map(|r| r.id.as_str()).collect();
    assert_eq!(failing, vec!["q3.Serre.1", "q3.Serre.2", "q3.Serre.3", "q3.Serre.4", "q3.e1e2.plus"]);
    assert!(results.iter().all(|r| r.status != Status::Precondition));
    let groups = group_outcomes(&results);
    assert!(groups.values().all(|&ok| ok), "{groups:?}");
    for k in 1..=4 {
        for id in [format!("dr.eserre{k}"), format!("dr.fserre{k}")] {
            assert!(results.iter().any(|r| r.id == id && r.passed()), "{id}");
        }
    }
}

#[test]
fn simplified_serre_is_the_leading_coefficient() {
    // The simplified relation is the u^{-1} coefficient of the full one; both
    // are checked per w-coefficient.
    let ctx = YangianContext::new(3);
    let env = Env::symbolic(&ctx, 3).unwrap();
    for id in ["q3.Serre", "q3.serresim"] {
        let r = verify_in(&env, &lookup(id).unwrap(), &[('t', 1)]).unwrap();
        assert!(r.passed(), "{id}: {:?}", r.witness);
        assert_eq!(r.instances, 2);
    }
}

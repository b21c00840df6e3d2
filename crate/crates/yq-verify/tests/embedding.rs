//! The embeddings `ψ_m` and their commutation identities.

use yq_rtt::YangianContext;
use yq_verify::{lookup, psi_composition_check, verify_in, verify_psi_identities, Env, EvalError, Evaluator, Status};

fn by_id(rs: &[yq_verify::VerifyResult], id: &str) -> Status {
    rs.iter().find(|r| r.id == id).unwrap().status
}

#[test]
fn psi_identities_small_ranks() {
    for (m, n, order) in [(1, 1, 4), (1, 2, 3)] {
        let rs = verify_psi_identities(m, n, order).unwrap();
        assert_eq!(by_id(&rs, "emb.qnpsi1"), Status::Pass, "m={m} n={n}");
        assert_eq!(by_id(&rs, "emb.qnpsi2"), Status::Precondition, "m={m} n={n}");
        assert_eq!(by_id(&rs, "emb.qnpsi2.u"), Status::Pass, "m={m} n={n}");
    }
}

#[test]
fn psi_images_satisfy_rtt_and_commute_with_the_upper_corner() {
    let ctx = YangianContext::new(2);
    let env = Env::symbolic(&ctx, 4).unwrap();
    for id in ["emb.rtt", "emb.com"] {
        let r = verify_in(&env, &lookup(id).unwrap(), &[]).unwrap();
        assert!(r.passed(), "{id}: {:?}", r.witness);
    }
}

#[test]
fn psi_composes() {
    assert_eq!(psi_composition_check(3, 1, 3).unwrap(), None);
    assert!(psi_composition_check(2, 1, 3).is_err());
}

#[test]
fn index_at_or_below_m_is_rejected() {
    let ctx = YangianContext::new(2);
    let env = Env::symbolic(&ctx, 3).unwrap();
    let rel = yq_verify::parse_relation(lookup("emb.qnpsi2.u").unwrap().text).unwrap();
    let ev = Evaluator::new(&env, 2, vec![('m', 1), ('a', 1), ('b', 1), ('c', 1)]);
    assert!(matches!(ev.check(&rel), Err(EvalError::BadIndex(_))));
}

//! Catalog integrity: ids, parsing, index ranges and alternative groups.

use std::collections::BTreeSet;

use yq_verify::{catalog, instances, lookup, parse_relation, Domain, Suite};

const DRINFELD_IDS: [&str; 48] = [
    "dr.hahb", "dr.haha", "dr.hahta", "dr.htahta", "dr.haeb", "dr.haea", "dr.haeta", "dr.htaea", "dr.ha1ea",
    "dr.ha1eta", "dr.hta1ea", "dr.hta1eta", "dr.hafb", "dr.hafa", "dr.hafta", "dr.ha1fa", "dr.ha1fta", "dr.hta1fa",
    "dr.hta1fta", "dr.eafb", "dr.eafa", "dr.eafta", "dr.etafa", "dr.etafta", "dr.eaeb", "dr.eaea", "dr.eaeta",
    "dr.etaeta", "dr.eaea1", "dr.eaeta1", "dr.ecircle", "dr.etcircle", "dr.fafb", "dr.fafa", "dr.fafta", "dr.ftafta",
    "dr.fafa1", "dr.ftafa1", "dr.fcircle", "dr.ftcircle", "dr.eserre1", "dr.eserre2", "dr.eserre3", "dr.eserre4",
    "dr.fserre1", "dr.fserre2", "dr.fserre3", "dr.fserre4",
];

#[test]
fn ids_are_unique() {
    let ids: Vec<_> = catalog().iter().map(|s| s.id).collect();
    let set: BTreeSet<_> = ids.iter().collect();
    assert_eq!(ids.len(), set.len());
}

#[test]
fn drinfeld_manifest_is_complete() {
    let printed: BTreeSet<&str> =
        catalog().iter().map(|s| s.id).filter(|id| id.starts_with("dr.") && !id.ends_with(".fix")).collect();
    let want: BTreeSet<&str> = DRINFELD_IDS.into_iter().collect();
    assert_eq!(printed, want);
}

#[test]
fn every_entry_parses() {
    for spec in catalog() {
        let rel = parse_relation(spec.text).unwrap_or_else(|e| panic!("{}: {e}", spec.id));
        assert!(rel.sides.len() >= 2, "{}", spec.id);
    }
}

#[test]
fn every_correction_shares_a_group_with_its_printed_form() {
    for spec in catalog().into_iter().filter(|s| s.id.ends_with(".fix")) {
        let printed = spec.id.trim_end_matches(".fix");
        let orig = lookup(printed).expect("printed form present");
        assert_eq!(orig.alternative, spec.alternative);
        assert_eq!(spec.alternative, Some(printed));
    }
}

#[test]
fn groups_have_at_least_two_members() {
    let all = catalog();
    for g in all.iter().filter_map(|s| s.alternative) {
        assert!(all.iter().filter(|s| s.alternative == Some(g)).count() >= 2, "{g}");
    }
}

#[test]
fn serre_entries_belong_to_the_serre_suite() {
    for spec in catalog() {
        if spec.id.contains("serre") || spec.id.contains("Serre") {
            assert_eq!(spec.suite, Suite::Serre, "{}", spec.id);
            assert!(spec.min_n >= 3);
        }
    }
}

#[test]
fn instances_respect_ranges_and_filters() {
    let haeb = lookup("dr.haeb").unwrap();
    let inst = instances(&haeb, 3, 4);
    // a ∈ 1..=3, b ∈ 1..=2 with a ∉ {b, b+1}.
    assert_eq!(inst, vec![vec![('a', 1), ('b', 2)], vec![('a', 3), ('b', 1)]]);
    let eaea1 = lookup("dr.eaea1").unwrap();
    assert_eq!(eaea1.vars[0].1, Domain::Inner);
    assert_eq!(instances(&eaea1, 3, 4).len(), 1);
    let serre = lookup("dr.eserre1").unwrap();
    assert!(instances(&serre, 3, 4).iter().all(|b| (b[0].1 - b[1].1).abs() == 1));
}

#[test]
fn embedding_instances_keep_a_above_m() {
    let spec = lookup("emb.qnpsi1").unwrap();
    for b in instances(&spec, 3, 3) {
        let get = |c| b.iter().find(|(v, _)| *v == c).unwrap().1;
        assert!(get('a') > get('m'));
    }
}

mod common;

use codegree::analysis::{
    check_lemma21, check_lemma22, counting_identity, frattini_quotient_check, thm12_certificate,
    thm13_predicates, thm23_scan, verify_counterexample, Thm12Outcome, Verdict,
};
use codegree::chartab::{char_table, class_constants};
use codegree::cli::{build, catalog_expectations, parse_catalog};
use codegree::permgroup::{
    center, derived_subgroup, frattini_subgroup, quotient_group, Group, DEFAULT_ORDER_CAP,
};
use codegree::pseudoalg::{
    abelian_pseudo, codegree, prime_power_spectrum, pseudo_algebra, pseudo_algebra_of,
    pseudo_equal, AbelianType,
};
use codegree::Error;

use common::*;

fn g(spec: &str) -> Group {
    build(spec, DEFAULT_ORDER_CAP).unwrap()
}

fn ty(s: &str) -> AbelianType {
    s.parse().unwrap()
}

#[test]
fn abelian_tables_match_direct_construction_up_to_order_64() {
    for n in 1..=64 {
        for t in abelian_types_of_order(n) {
            let group = abelian_spec(&t).build(DEFAULT_ORDER_CAP).unwrap();
            let table = char_table(&group).unwrap();
            let e = table.exponent();
            let mut dixon: Vec<Vec<u64>> = table
                .irreducibles()
                .iter()
                .map(|chi| {
                    chi.values
                        .iter()
                        .map(|v| {
                            assert_eq!(v.terms().len(), 1);
                            v.terms()[0].0 as u64
                        })
                        .collect()
                })
                .collect();
            let mut direct = direct_linear_rows(&group, &t.cyclic_factors(), e);
            dixon.sort();
            direct.sort();
            assert_eq!(dixon, direct, "{t}");
            assert_eq!(pseudo_algebra_of(&table), abelian_pseudo(&t), "{t}");
        }
    }
}

#[test]
fn kernels_and_codegrees_match_brute_force() {
    let mut groups: Vec<Group> = Vec::new();
    for file in ["named.cat", "two_groups_le64.cat"] {
        groups.extend(catalog(file).groups);
    }
    for spec in [
        "dihedral:5",
        "dihedral:12",
        "ut3:3",
        "cyclic:12*dihedral:3",
        "abelian:[4,6]",
    ] {
        groups.push(g(spec));
    }
    for group in groups.iter().filter(|g| g.order() <= 64) {
        let table = char_table(group).unwrap();
        let brute = brute_kernel_orders(&table);
        for (chi, k) in table.irreducibles().iter().zip(&brute) {
            let kernel = table.kernel_of(chi);
            assert_eq!(kernel.order() as u64, *k, "{}", group.name());
            assert!(kernel.is_normal());
            assert_eq!(codegree(&table, chi), group.order() as u64 / k / chi.degree);
        }
        assert_eq!(
            brute_pseudo(&table),
            pseudo_algebra_of(&table),
            "{}",
            group.name()
        );
    }
}

#[test]
fn shipped_catalog_expectations_hold() {
    for file in CATALOGS {
        let cat = catalog(file);
        let reports = catalog_expectations(&cat).unwrap();
        assert_eq!(
            reports.len(),
            cat.len(),
            "{file}: every entry carries a pseudo line"
        );
        for r in reports {
            assert_eq!(r.verdict, Verdict::Pass, "{r}");
        }
    }
}

#[test]
fn catalog_sizes() {
    assert_eq!(catalog("two_groups_le64.cat").len(), 341);
    let c = catalog("c128.cat");
    assert_eq!(c.len(), 3);
    assert!(c.groups.iter().all(|g| g.order() == 128));
    assert!(parse_catalog("", "empty").unwrap().is_empty());
}

#[test]
fn nonprincipal_codegree_exceeds_degree() {
    for file in CATALOGS {
        for group in &catalog(file).groups {
            let table = char_table(group).unwrap();
            for chi in &table.irreducibles()[1..] {
                assert!(codegree(&table, chi) > chi.degree, "{}", group.name());
            }
        }
    }
}

#[test]
fn class_constants_match_pair_count_on_small_groups() {
    let q8 = format!("file:{}#q8", data_path("named.cat"));
    for spec in ["dihedral:4", &q8, "dihedral:5"] {
        let group = g(spec);
        let c = group.classes();
        for i in 0..c.len() {
            for j in 0..c.len() {
                for k in 0..c.len() {
                    let z = c.reps()[k];
                    let mut count = 0;
                    for x in 0..group.order() {
                        for y in 0..group.order() {
                            if c.class_of(x) == i && c.class_of(y) == j && group.mul(x, y) == z {
                                count += 1;
                            }
                        }
                    }
                    assert_eq!(class_constants(&group, c, i, j, k), count);
                }
            }
        }
    }
}

#[test]
fn dihedral_and_quaternion_share_pseudo_algebra() {
    let d8 = g("dihedral:4");
    let q8 = build(
        &format!("file:{}#q8", data_path("named.cat")),
        DEFAULT_ORDER_CAP,
    )
    .unwrap();
    assert_eq!(q8.name(), "q8");
    let (pd, pq) = (pseudo_algebra(&d8).unwrap(), pseudo_algebra(&q8).unwrap());
    assert!(pseudo_equal(&pd, &pq));
    assert_eq!(pd.to_string(), "(1,1) (2,3) (4,1)");
    assert_ne!(element_order_counts(&d8), element_order_counts(&q8));
}

#[test]
fn counting_identity_examples() {
    for spec in ["dihedral:4", "ut3:3", "cyclic:1", "dihedral:7*cyclic:3"] {
        let r = counting_identity(&g(spec)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
    }
    let r = counting_identity(&g("ut3:3")).unwrap();
    assert!(r.detail.contains("9·1 + 2·9"), "{r}");
}

#[test]
fn constructor_facts() {
    let u = g("ut3:3");
    assert_eq!((u.order(), u.exponent(), u.degree()), (27, 3, 27));
    assert_eq!(center(&u).order(), 3);
    let a = g("abelian:2:[3,1,1]");
    assert_eq!((a.order(), a.exponent()), (32, 8));
    assert_eq!(
        pseudo_algebra(&g("dihedral:4")).unwrap().to_string(),
        "(1,1) (2,3) (4,1)"
    );
}

#[test]
fn frattini_quotients() {
    assert!(frattini_quotient_check(&g("abelian:2:[3,1]"), 2).unwrap());
    assert!(!frattini_quotient_check(&g("cyclic:8"), 2).unwrap());
    assert!(frattini_quotient_check(&g("ut3:3"), 3).unwrap());
    assert_eq!(
        frattini_quotient_check(&g("dihedral:3"), 2).unwrap_err(),
        Error::NotPrimePower(6)
    );
    // The witnesses match C8×C2×C2, whose Frattini quotient is C2³, so their
    // own quotient has order 8 (confirmed independently in GAP).
    for group in &catalog("c128.cat").groups {
        assert!(
            !frattini_quotient_check(group, 2).unwrap(),
            "{}",
            group.name()
        );
        let phi = frattini_subgroup(group);
        assert_eq!(phi.index(), 8);
        assert_eq!(quotient_group(group, &phi).unwrap().exponent(), 2);
    }
}

#[test]
fn lemma_checks_on_witnesses_and_guards() {
    let target = ty("2:[3,1,1]");
    for group in &catalog("c128.cat").groups {
        assert_eq!(
            check_lemma21(group, &target).unwrap().verdict,
            Verdict::Pass
        );
        let out = check_lemma22(group, &target).unwrap();
        assert_eq!(out.report.verdict, Verdict::Pass);
        let pr = out.prediction.unwrap();
        assert_eq!(Some((pr.k1, pr.k2)), out.observed);
        assert_eq!(
            verify_counterexample(group, &target).unwrap().verdict,
            Verdict::Pass
        );
    }
    let na = |r: Verdict| assert_eq!(r, Verdict::NotApplicable);
    na(check_lemma21(&g("abelian:2:[3,1,1]"), &target)
        .unwrap()
        .verdict);
    na(check_lemma21(&g("dihedral:4"), &target).unwrap().verdict);
    // cd = {1,2}: the precondition filter of the degree-count check.
    na(check_lemma22(&g("dihedral:4"), &target)
        .unwrap()
        .report
        .verdict);
    assert_eq!(
        verify_counterexample(&g("dihedral:4"), &ty("2:[3]"))
            .unwrap()
            .verdict,
        Verdict::Fail
    );
    assert_eq!(
        verify_counterexample(&g("abelian:2:[3,1,1]"), &target)
            .unwrap()
            .verdict,
        Verdict::Fail
    );
}

#[test]
fn thm12_outcomes_and_guards() {
    for (p, n) in [(2, 3), (2, 4), (3, 3), (2, 5)] {
        let spec = format!("abelian:{p}:[{n},1]");
        let cert = thm12_certificate(&g(&spec), p, n).unwrap();
        assert_eq!(cert.outcome, Thm12Outcome::IsomorphicToA);
    }
    assert!(matches!(
        thm12_certificate(&g("ut3:3"), 3, 3),
        Err(Error::HypothesisUnmet(_))
    ));
    assert!(matches!(
        thm12_certificate(&g("abelian:2:[2,1]"), 2, 2),
        Err(Error::HypothesisUnmet(_))
    ));
    // No order-≤64 2-group other than the abelian one meets the hypothesis,
    // so the p = 2 certificate is never the exceptional case here.
    for group in &catalog("two_groups_le64.cat").groups {
        for n in 3..=5 {
            if let Ok(cert) = thm12_certificate(group, 2, n) {
                assert_ne!(cert.outcome, Thm12Outcome::Case2);
                assert_eq!(
                    cert.outcome,
                    Thm12Outcome::IsomorphicToA,
                    "{}",
                    group.name()
                );
            }
        }
    }
}

#[test]
fn thm13_predicates_on_ut3() {
    let u = g("ut3:3");
    let pr = thm13_predicates(&u).unwrap();
    assert!(pr.metacyclic_maximal_subgroup);
    assert!(pr.derived_two_generated);
    assert!(pr.derived_abelian);
    let quotient_shape = derived_subgroup(&u);
    assert_eq!(quotient_shape.order(), 3);
    assert!(thm13_predicates(&g("dihedral:3")).is_err());
}

#[test]
fn thm23_scan_edges() {
    let empty = thm23_scan(&[], 2, 3).unwrap();
    assert_eq!((empty.checked, empty.report.verdict), (0, Verdict::Pass));
    let scan = thm23_scan(&[g("abelian:2:[3,1]"), g("dihedral:8")], 2, 3).unwrap();
    assert_eq!(scan.matched, vec!["abelian:2:[3,1]".to_string()]);
    assert_eq!(scan.metacyclic_matched, scan.matched);
    assert!(scan.violations.is_empty());
}

#[test]
fn qian_instances_and_converse_on_p_groups() {
    for file in CATALOGS {
        for group in &catalog(file).groups {
            let spectrum = prime_power_spectrum(&pseudo_algebra(group).unwrap());
            match (spectrum, group.prime_power()) {
                (Some(p), pp) => assert_eq!(pp.map(|x| x.0), Some(p), "{}", group.name()),
                (None, Some(_)) => assert_eq!(group.order(), 1),
                (None, None) => {}
            }
        }
    }
}

//! Fixed examples: values read off the worked examples and values computed
//! here by hand-written formulas.

mod common;

use resilat::basic::{self, basic_axioms, g_of_a, mv_chain};
use resilat::format::{FileKind, Structure};
use resilat::lattice::FiniteLattice;
use resilat::logics::{self, check_omi, check_omi_star, three_potency};
use resilat::sections::{self, check_p1_p4};
use resilat::{corpus, identities, transform};

fn groupoid(name: &str) -> resilat::residuation::RrlGroupoid {
    match transform::transform(&corpus::get(name).unwrap(), FileKind::RrlGroupoid)
        .unwrap()
        .0
    {
        Structure::Groupoid(g) => g,
        _ => unreachable!(),
    }
}

#[test]
fn mo2_groupoid_is_lukasiewicz_type_but_not_commutative() {
    let g = groupoid("mo2");
    assert!(g.lukasiewicz_type().holds());
    assert!(check_omi_star(&g).holds());
    let w = g.commutative().witness().unwrap().to_vec();
    let names: Vec<&str> = w.iter().map(|&i| g.names()[i].as_str()).collect();
    assert_eq!(names, ["a", "b"]);
    assert_ne!(g.odot(w[0], w[1]), g.odot(w[1], w[0]));
    // Non-commutative Łukasiewicz type rules out associativity.
    assert!(g.associative().fails());
}

#[test]
fn mo2_operations_follow_the_lattice_formulas() {
    let m = logics::mo2();
    let l = &m.lattice;
    let t = |x| m.tilde.apply(x);
    let g = m.to_groupoid().unwrap();
    for x in l.elements() {
        for y in l.elements() {
            assert_eq!(g.arrow(x, y), l.join(l.meet(x, y), t(x)));
            assert_eq!(g.odot(x, y), l.meet(l.join(x, t(y)), y));
        }
        assert_eq!(g.neg(x), t(x));
    }
}

#[test]
fn mo2_basic_algebra_satisfies_omi_and_matches_the_groupoid() {
    let m = logics::mo2();
    let a = m.to_basic().unwrap();
    assert!(check_omi(&a).holds());
    let l = &m.lattice;
    for x in l.elements() {
        assert_eq!(a.oplus(x, x), x);
        for y in l.elements() {
            assert_eq!(a.oplus(x, y), l.join(l.meet(x, m.tilde.apply(y)), y));
        }
    }
    assert_eq!(g_of_a(&a).unwrap(), m.to_groupoid().unwrap());
}

#[test]
fn o6_is_not_orthomodular() {
    let (l, map) = logics::o6();
    assert!(logics::check_orthomodular(&l, &map).is_err());
}

#[test]
fn godel_chain_is_not_involutive() {
    let g = corpus::godel_groupoid(3);
    assert!(g.involutive().fails());
    assert!(g.integral().holds());
    assert!(g.divisibility().holds());
    assert!(transform::transform(&Structure::Groupoid(g), FileKind::BasicAlgebra).is_err());
}

#[test]
fn n5_is_sectionally_pseudocomplemented_and_not_distributive() {
    let s = corpus::n5_involution();
    assert!(!s.lattice.is_distributive());
    let family = sections::sectional_pseudocomplement_family(&s.lattice).unwrap();
    let imp = sections::implication_from_family(&s.lattice, &family);
    let p = check_p1_p4(&s.lattice, &imp);
    for v in [&p.p1, &p.p2, &p.p3, &p.p4] {
        assert!(v.holds(), "{v:?}");
    }
    assert!(p.p4_meet.fails());
}

#[test]
fn n5_pseudocomplements_by_hand() {
    let s = corpus::n5_involution();
    let l = &s.lattice;
    let ix = |n: &str| l.index(n).unwrap();
    // 0 < a < c < 1 and 0 < b < 1.
    let pc =
        |a, x| sections::sectional_pseudocomplement(l, ix(a), ix(x)).map(|y| l.name(y).to_string());
    assert_eq!(pc("0", "a").as_deref(), Some("b"));
    assert_eq!(pc("0", "c").as_deref(), Some("b"));
    assert_eq!(pc("0", "b").as_deref(), Some("c"));
    assert_eq!(pc("a", "c").as_deref(), Some("a"));
    assert_eq!(pc("a", "b"), None);
    assert_eq!(pc("b", "b").as_deref(), Some("1"));
    assert_eq!(pc("a", "1").as_deref(), Some("a"));
}

#[test]
fn m3_is_not_sectionally_pseudocomplemented() {
    let l = FiniteLattice::build(
        ["0", "a", "b", "c", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "1"),
            ("b", "1"),
            ("c", "1"),
        ],
    )
    .unwrap();
    assert!(sections::sectional_pseudocomplement_family(&l).is_err());
}

/// The three-element Kleene chain with `~x = 2 - x`, worked by hand.
fn nelson3_by_hand() -> ([[usize; 3]; 3], [[usize; 3]; 3]) {
    let neg = |x: usize| 2 - x;
    let rpc = |a: usize, b: usize| if a <= b { 2 } else { b };
    let arrow = |x: usize, y: usize| rpc(x, neg(x).max(y));
    let mut imp = [[0; 3]; 3];
    let mut star = [[0; 3]; 3];
    for x in 0..3 {
        for y in 0..3 {
            imp[x][y] = arrow(x, y).min(arrow(neg(y), neg(x)));
            star[x][y] = neg(arrow(x, neg(y))).max(neg(arrow(y, neg(x))));
        }
    }
    (imp, star)
}

#[test]
fn nelson_chain_groupoid_matches_hand_computation() {
    let (imp, star) = nelson3_by_hand();
    let g = logics::nelson_to_residuated(&corpus::nelson_chain(3)).unwrap();
    for x in 0..3 {
        for y in 0..3 {
            assert_eq!(g.arrow(x, y), imp[x][y], "⇒ at ({x}, {y})");
            assert_eq!(g.odot(x, y), star[x][y], "∗ at ({x}, {y})");
        }
    }
    // ∗ is the Łukasiewicz product, so its residual ⇒ is too: this is Ł3.
    assert_eq!(g, corpus::lukasiewicz_groupoid(3));
}

#[test]
fn nelson_chain_groupoid_properties() {
    let g = logics::nelson_to_residuated(&corpus::nelson_chain(3)).unwrap();
    for v in [
        g.integral(),
        g.commutative(),
        g.associative(),
        g.involutive(),
        g.condition_c(),
        identities::i3(g.lattice(), g.derived_implication()),
        three_potency(&g),
    ] {
        assert!(v.holds(), "{v:?}");
    }
    assert_eq!(g.arrow_table(), g.derived_implication());
}

#[test]
fn lukasiewicz_three_passes_the_axioms() {
    let a = mv_chain(3).unwrap();
    for (name, v) in basic_axioms(a.oplus_table(), a.neg_table(), a.zero()) {
        assert!(v.holds(), "{name}");
    }
    assert!(a.is_mv());
}

#[test]
fn lukasiewicz_chains_match_the_truncated_sum() {
    for n in 2..=5 {
        let top = n - 1;
        let a = mv_chain(n).unwrap();
        for x in 0..n {
            assert_eq!(a.neg(x), top - x);
            for y in 0..n {
                assert_eq!(a.oplus(x, y), (x + y).min(top));
            }
        }
        assert_eq!(g_of_a(&a).unwrap(), corpus::lukasiewicz_groupoid(n));
    }
}

#[test]
fn reduct_of_lukasiewicz_four_satisfies_its_identities() {
    let a = mv_chain(4).unwrap();
    let r = basic::implication_reduct(&a);
    let report = r.report();
    for (name, v) in report.all() {
        assert!(v.holds(), "{name}");
    }
    for x in 0..4 {
        for y in 0..4 {
            assert_eq!(r.implies(x, y), (3 - x + y).min(3));
        }
    }
}

#[test]
fn every_built_in_groupoid_satisfies_basic_laws() {
    for (name, g) in common::corpus_groupoids() {
        for (i, v) in g.basic_laws().iter().enumerate() {
            assert!(!v.fails(), "{name}: item {}", i + 1);
        }
    }
}

#[test]
fn reduct_identities_hold_on_every_small_basic_algebra() {
    let caps = resilat::enumerate::SizeCaps::default();
    for n in 1..=5 {
        for a in resilat::enumerate::enumerate_basic_algebras(n, &caps).unwrap() {
            let report = basic::implication_reduct(&a).report();
            for (name, v) in report.all() {
                assert!(v.holds(), "order {n}: {name} {v:?}");
            }
        }
    }
}

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use resilat::basic::{self, BasicAlgebra};
use resilat::congruence::{self, Algebra, Congruence};
use resilat::enumerate::{enumerate_basic_algebras, SizeCaps};
use resilat::format::Structure;
use resilat::residuation::RrlGroupoid;
use resilat::transform;

fn groupoids() -> &'static [(String, RrlGroupoid)] {
    static POP: OnceLock<Vec<(String, RrlGroupoid)>> = OnceLock::new();
    POP.get_or_init(|| common::population(4))
}

fn basics() -> &'static [BasicAlgebra] {
    static POP: OnceLock<Vec<BasicAlgebra>> = OnceLock::new();
    POP.get_or_init(|| {
        let caps = SizeCaps::default();
        (1..=5)
            .flat_map(|n| enumerate_basic_algebras(n, &caps).unwrap())
            .collect()
    })
}

fn groupoid() -> impl Strategy<Value = &'static RrlGroupoid> {
    (0..groupoids().len()).prop_map(|i| &groupoids()[i].1)
}

fn with_perm<T: std::fmt::Debug + Sync + 'static>(
    s: impl Strategy<Value = &'static T>,
    size: fn(&T) -> usize,
) -> impl Strategy<Value = (&'static T, Vec<usize>)> {
    s.prop_flat_map(move |x| {
        (
            Just(x),
            Just((0..size(x)).collect::<Vec<_>>()).prop_shuffle(),
        )
    })
}

/// Whether `c` is compatible with every operation, checked cell by cell.
fn compatible<A: Algebra>(alg: &A, c: &Congruence) -> bool {
    let ops = alg.operations();
    let n = ops.size;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| c.related(a, b))
        .collect();
    ops.unary
        .iter()
        .all(|u| pairs.iter().all(|&(a, b)| c.related(u[a], u[b])))
        && ops.binary.iter().all(|op| {
            pairs.iter().all(|&(a, b)| {
                pairs
                    .iter()
                    .all(|&(x, y)| c.related(op.get(a, x), op.get(b, y)))
            })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn file_encoding_round_trips(g in groupoid()) {
        let s = Structure::Groupoid(g.clone());
        let text = s.to_json();
        let back = Structure::parse(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn relabelling_preserves_the_canonical_form((g, perm) in with_perm(groupoid(), RrlGroupoid::size)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(h.canonical().code, g.canonical().code);
    }

    #[test]
    fn relabelling_preserves_every_flag((g, perm) in with_perm(groupoid(), RrlGroupoid::size)) {
        let h = g.relabel(&perm);
        let before: Vec<_> = g.classify().flags().into_iter().map(|(k, v)| (k, v.value())).collect();
        let after: Vec<_> = h.classify().flags().into_iter().map(|(k, v)| (k, v.value())).collect();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn basic_laws_never_fails(g in groupoid()) {
        for v in g.basic_laws() {
            prop_assert!(!v.fails(), "{:?}", v);
        }
    }

    #[test]
    fn biconditionals_agree(g in groupoid()) {
        let report = g.biconditionals();
        prop_assert_eq!(report.disagreements().count(), 0);
    }

    #[test]
    fn commutativity_witness_is_least(g in groupoid()) {
        if let Some(w) = g.commutative().witness() {
            let (x, y) = (w[0], w[1]);
            prop_assert_ne!(g.odot(x, y), g.odot(y, x));
            for a in 0..g.size() {
                for b in 0..g.size() {
                    if (a, b) < (x, y) {
                        prop_assert_eq!(g.odot(a, b), g.odot(b, a));
                    }
                }
            }
        }
    }

    #[test]
    fn residuation_holds_cell_by_cell(g in groupoid()) {
        let l = g.lattice();
        for x in l.elements() {
            prop_assert_eq!(g.odot(g.one(), x), x);
            for y in l.elements() {
                for z in l.elements() {
                    prop_assert_eq!(l.leq(g.odot(x, y), z), l.leq(x, g.arrow(y, z)));
                }
            }
        }
    }

    #[test]
    fn principal_congruences_are_least((g, a, b) in groupoid().prop_flat_map(|g| (Just(g), 0..g.size(), 0..g.size()))) {
        let theta = congruence::principal_congruence(g, a, b);
        prop_assert!(theta.related(a, b));
        prop_assert!(compatible(g, &theta));
        for c in &congruence::all_congruences(g).congruences {
            prop_assert!(compatible(g, c));
            if c.related(a, b) {
                prop_assert!(theta.refines(c));
            }
        }
    }

    #[test]
    fn malcev_term_holds(g in groupoid()) {
        let terms = congruence::check_terms(g);
        prop_assert!(terms.violation().is_none(), "{:?}", terms.violation());
    }

    #[test]
    fn basic_algebras_survive_every_round_trip(i in 0..basics().len()) {
        let a = &basics()[i];
        for trip in transform::roundtrip(&Structure::Basic(a.clone())).unwrap() {
            prop_assert!(trip.exact, "{}", trip.route);
        }
        let g = basic::g_of_a(a).unwrap();
        prop_assert!(g.lukasiewicz_type().holds());
    }

    #[test]
    fn basic_algebra_relabelling_is_an_isomorphism((a, perm) in with_perm((0..basics().len()).prop_map(|i| &basics()[i]), BasicAlgebra::size)) {
        let b = a.relabel(&perm);
        prop_assert_eq!(b.canonical().code, a.canonical().code);
        for x in 0..a.size() {
            prop_assert_eq!(b.neg(x), perm.iter().position(|&o| o == a.neg(perm[x])).unwrap());
        }
    }
}

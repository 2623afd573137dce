//! Built-in example structures.

use crate::basic::mv_chain;
use crate::format::Structure;
use crate::lattice::{FiniteLattice, Involution};
use crate::logics;
use crate::ops::BinaryOp;
use crate::residuation::RrlGroupoid;
use crate::sections::{self, FamilyMode, SectionFamily, SectionedLattice};

pub const NAMES: [&str; 9] = [
    "c2",
    "lukasiewicz-3",
    "lukasiewicz-4",
    "godel-3",
    "boolean-4",
    "n5-involution",
    "mo2",
    "o6",
    "nelson-3",
];

pub fn get(name: &str) -> Option<Structure> {
    Some(match name {
        "c2" => Structure::Groupoid(lukasiewicz_groupoid(2)),
        "lukasiewicz-3" => Structure::Basic(mv_chain(3).expect("valid")),
        "lukasiewicz-4" => Structure::Basic(mv_chain(4).expect("valid")),
        "godel-3" => Structure::Groupoid(godel_groupoid(3)),
        "boolean-4" => Structure::Groupoid(logics::boolean(2).to_groupoid().expect("valid")),
        "n5-involution" => Structure::Sectioned(n5_involution()),
        "mo2" => Structure::Sectioned(mo2_sectioned()),
        "o6" => {
            let (l, map) = logics::o6();
            let t = Involution::new(&l, map).expect("valid");
            Structure::Lattice(l, Some(t))
        }
        "nelson-3" => Structure::Nelson(nelson_chain(3)),
        _ => return None,
    })
}

/// Every built-in, in listing order.
pub fn all() -> Vec<(&'static str, Structure)> {
    NAMES
        .iter()
        .map(|&n| (n, get(n).expect("listed")))
        .collect()
}

/// The `n`-element Łukasiewicz chain as a groupoid:
/// `x⊙y = max(0, x+y-1)`, `x→y = min(1, 1-x+y)`.
pub fn lukasiewicz_groupoid(n: usize) -> RrlGroupoid {
    let top = n - 1;
    let l = FiniteLattice::chain(n);
    let odot = BinaryOp::from_fn(n, |x, y| (x + y).saturating_sub(top));
    let arrow = BinaryOp::from_fn(n, |x, y| (top - x + y).min(top));
    RrlGroupoid::new(l, odot, arrow).expect("valid")
}

/// The `n`-element Gödel chain: `⊙ = ∧`, `x→y = 1` if `x ≤ y` else `y`.
pub fn godel_groupoid(n: usize) -> RrlGroupoid {
    let l = FiniteLattice::chain(n);
    let top = n - 1;
    let odot = l.meet_table().clone();
    let arrow = BinaryOp::from_fn(n, |x, y| if x <= y { top } else { y });
    RrlGroupoid::new(l, odot, arrow).expect("valid")
}

/// `N5` (`0 < a < c < 1`, `0 < b < 1`) with `0↔1`, `a↔c`, `b` fixed, and
/// its sectional pseudocomplements.
pub fn n5_involution() -> SectionedLattice {
    let l = FiniteLattice::build(
        ["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
    )
    .expect("valid");
    let tilde = Involution::new(&l, vec![4, 3, 2, 1, 0]).expect("valid");
    let family = sections::sectional_pseudocomplement_family(&l).expect("valid");
    SectionedLattice::new(l, Some(tilde), family)
}

/// `MO2` with its orthocomplement and `x^a = ~x ∨ a`.
pub fn mo2_sectioned() -> SectionedLattice {
    let m = logics::mo2();
    let l = m.lattice;
    let family = SectionFamily::from_fn(&l, FamilyMode::Involutive, |a, x| {
        l.join(m.tilde.apply(x), a)
    })
    .expect("valid");
    SectionedLattice::new(l, Some(m.tilde), family)
}

/// The chain of `n` elements as a Nelson algebra.
pub fn nelson_chain(n: usize) -> logics::NelsonAlgebra {
    let l = FiniteLattice::chain(n);
    let t = Involution::new(&l, (0..n).rev().collect()).expect("valid");
    let k = logics::check_kleene(&l, &t).expect("chains are Kleene");
    logics::build_nelson(k).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_example_reparses() {
        for (name, s) in all() {
            assert_eq!(Structure::parse(&s.to_json()).unwrap(), s, "{name}");
        }
    }
}

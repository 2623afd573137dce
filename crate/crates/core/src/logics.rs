//! Kleene and Nelson algebras, and orthomodular lattices, reduced to
//! groupoids and basic algebras.

use thiserror::Error;

use crate::basic::{BasicAlgebra, BasicError};
use crate::lattice::{FiniteLattice, Involution, InvolutionError};
use crate::ops::{BinaryOp, Elem};
use crate::residuation::{ResiduationError, RrlGroupoid};
use crate::verdict::{forall2, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LogicError {
    #[error("lattice is not distributive at ({x}, {y}, {z})")]
    NotDistributive { x: String, y: String, z: String },
    #[error("normality fails: {x}∧~{x} ≰ {y}∨~{y}")]
    NormalityFails { x: String, y: String },
    #[error("{a} ▷ (~{a} ∨ {b}) does not exist")]
    MissingRelativePseudocomplement { a: String, b: String },
    #[error("Nelson identity fails at ({x}, {y}, {z})")]
    NelsonIdentityFails { x: String, y: String, z: String },
    #[error("given arrow differs from the constructed one at ({x}, {y})")]
    ArrowMismatch { x: String, y: String },
    #[error("constructed groupoid is invalid: {0}")]
    ConstructionInvalid(ResiduationError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
    #[error("{x} ∧ ~{x} ≠ 0")]
    NotOrthocomplemented { x: String },
    #[error("orthomodular law fails: {x} ≤ {y} but {x} ∨ (~{x} ∧ {y}) ≠ {y}")]
    OrthomodularFails { x: String, y: String },
    #[error(transparent)]
    Basic(#[from] BasicError),
}

/// A distributive lattice with an antitone involution satisfying
/// `x∧~x ≤ y∨~y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KleeneAlgebra {
    pub lattice: FiniteLattice,
    pub tilde: Involution,
}

pub fn check_kleene(l: &FiniteLattice, tilde: &Involution) -> Result<KleeneAlgebra, LogicError> {
    if let Some((x, y, z)) = l.distributivity_witness() {
        return Err(LogicError::NotDistributive {
            x: l.name(x).into(),
            y: l.name(y).into(),
            z: l.name(z).into(),
        });
    }
    let t = |x| tilde.apply(x);
    if let Some(w) = forall2(l.size(), |x, y| l.leq(l.meet(x, t(x)), l.join(y, t(y)))).witness() {
        return Err(LogicError::NormalityFails {
            x: l.name(w[0]).into(),
            y: l.name(w[1]).into(),
        });
    }
    Ok(KleeneAlgebra {
        lattice: l.clone(),
        tilde: tilde.clone(),
    })
}

/// `a ▷ b`: the greatest `x` with `a ∧ x ≤ b`, if any.
pub fn relative_pseudocomplement(l: &FiniteLattice, a: Elem, b: Elem) -> Option<Elem> {
    let below: Vec<Elem> = l.elements().filter(|&x| l.leq(l.meet(a, x), b)).collect();
    below
        .iter()
        .copied()
        .find(|&m| below.iter().all(|&x| l.leq(x, m)))
}

/// A Kleene algebra with `x→y := x ▷ (~x ∨ y)` satisfying
/// `(x∧y)→z = x→(y→z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NelsonAlgebra {
    pub kleene: KleeneAlgebra,
    arrow: BinaryOp,
}

impl NelsonAlgebra {
    pub fn arrow(&self, x: Elem, y: Elem) -> Elem {
        self.arrow.get(x, y)
    }

    pub fn arrow_table(&self) -> &BinaryOp {
        &self.arrow
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.kleene.lattice
    }

    /// Checks a stored arrow against the construction.
    pub fn with_arrow(kleene: KleeneAlgebra, arrow: &BinaryOp) -> Result<Self, LogicError> {
        let n = build_nelson(kleene)?;
        let l = n.lattice();
        if let Some((x, y)) = l
            .elements()
            .flat_map(|x| l.elements().map(move |y| (x, y)))
            .find(|&(x, y)| arrow.size() != l.size() || arrow.get(x, y) != n.arrow(x, y))
        {
            return Err(LogicError::ArrowMismatch {
                x: l.name(x).into(),
                y: l.name(y).into(),
            });
        }
        Ok(n)
    }
}

pub fn build_nelson(k: KleeneAlgebra) -> Result<NelsonAlgebra, LogicError> {
    let l = &k.lattice;
    let n = l.size();
    let mut arrow = BinaryOp::from_fn(n, |_, _| 0);
    for x in l.elements() {
        for y in l.elements() {
            let target = l.join(k.tilde.apply(x), y);
            match relative_pseudocomplement(l, x, target) {
                Some(v) => arrow.set(x, y, v),
                None => {
                    return Err(LogicError::MissingRelativePseudocomplement {
                        a: l.name(x).into(),
                        b: l.name(y).into(),
                    })
                }
            }
        }
    }
    let a = |x, y| arrow.get(x, y);
    let v = crate::verdict::forall3(n, |x, y, z| a(l.meet(x, y), z) == a(x, a(y, z)));
    if let Some(w) = v.witness() {
        return Err(LogicError::NelsonIdentityFails {
            x: l.name(w[0]).into(),
            y: l.name(w[1]).into(),
            z: l.name(w[2]).into(),
        });
    }
    Ok(NelsonAlgebra { kleene: k, arrow })
}

/// The integral commutative residuated lattice of a Nelson algebra:
/// `x⇒y := (x→y)∧(~y→~x)` and `x∗y := ~(x→~y)∨~(y→~x)`.
pub fn nelson_to_residuated(n: &NelsonAlgebra) -> Result<RrlGroupoid, LogicError> {
    let l = n.lattice();
    let t = |x| n.kleene.tilde.apply(x);
    let imp = BinaryOp::from_fn(l.size(), |x, y| l.meet(n.arrow(x, y), n.arrow(t(y), t(x))));
    let star = BinaryOp::from_fn(l.size(), |x, y| {
        l.join(t(n.arrow(x, t(y))), t(n.arrow(y, t(x))))
    });
    RrlGroupoid::new(l.clone(), star, imp).map_err(LogicError::ConstructionInvalid)
}

/// `x⇒(x⇒(x⇒y)) = x⇒(x⇒y)` for the groupoid's residuum.
pub fn three_potency(g: &RrlGroupoid) -> Verdict {
    let a = |x, y| g.arrow(x, y);
    forall2(g.size(), |x, y| a(x, a(x, a(x, y))) == a(x, a(x, y)))
}

/// An orthocomplemented lattice satisfying the orthomodular law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthomodularLattice {
    pub lattice: FiniteLattice,
    pub tilde: Involution,
}

/// Validates `map` as an involution, then the complement law, then (OML).
pub fn check_orthomodular(
    l: &FiniteLattice,
    map: &[Elem],
) -> Result<OrthomodularLattice, LogicError> {
    let tilde = Involution::new(l, map.to_vec())?;
    let t = |x| tilde.apply(x);
    if let Some(x) = l.elements().find(|&x| l.meet(x, t(x)) != l.bottom()) {
        return Err(LogicError::NotOrthocomplemented {
            x: l.name(x).into(),
        });
    }
    let v = forall2(l.size(), |x, y| {
        !l.leq(x, y) || l.join(x, l.meet(t(x), y)) == y
    });
    if let Some(w) = v.witness() {
        return Err(LogicError::OrthomodularFails {
            x: l.name(w[0]).into(),
            y: l.name(w[1]).into(),
        });
    }
    Ok(OrthomodularLattice {
        lattice: l.clone(),
        tilde,
    })
}

impl OrthomodularLattice {
    /// `x→y := (x∧y)∨~x`, `x⊙y := (x∨~y)∧y`.
    pub fn to_groupoid(&self) -> Result<RrlGroupoid, LogicError> {
        let l = &self.lattice;
        let t = |x| self.tilde.apply(x);
        let arrow = BinaryOp::from_fn(l.size(), |x, y| l.join(l.meet(x, y), t(x)));
        let odot = BinaryOp::from_fn(l.size(), |x, y| l.meet(l.join(x, t(y)), y));
        RrlGroupoid::new(l.clone(), odot, arrow).map_err(LogicError::ConstructionInvalid)
    }

    /// `x⊕y := (x∧~y)∨y`, `⌉ := ~`.
    pub fn to_basic(&self) -> Result<BasicAlgebra, LogicError> {
        let l = &self.lattice;
        let t = |x| self.tilde.apply(x);
        let oplus = BinaryOp::from_fn(l.size(), |x, y| l.join(l.meet(x, t(y)), y));
        Ok(BasicAlgebra::new(
            l.names().to_vec(),
            oplus,
            self.tilde.map().to_vec(),
            l.bottom(),
        )?)
    }
}

pub fn oml_to_groupoid(l: &FiniteLattice, map: &[Elem]) -> Result<RrlGroupoid, LogicError> {
    check_orthomodular(l, map)?.to_groupoid()
}

/// (OMI): `y = y⊕(x∧y)`.
pub fn check_omi(a: &BasicAlgebra) -> Verdict {
    let l = a.lattice();
    forall2(a.size(), |x, y| a.oplus(y, l.meet(x, y)) == y)
}

/// (OMI*): `y = (⌉x∨⌉y)⇒y` with the derived implication.
pub fn check_omi_star(g: &RrlGroupoid) -> Verdict {
    let l = g.lattice();
    forall2(g.size(), |x, y| {
        g.implies(l.join(g.neg(x), g.neg(y)), y) == y
    })
}

/// `MO2`: two four-element Boolean blocks glued at 0 and 1.
pub fn mo2() -> OrthomodularLattice {
    let l = FiniteLattice::build(
        ["0", "a", "a'", "b", "b'", "1"],
        &[
            ("0", "a"),
            ("0", "a'"),
            ("0", "b"),
            ("0", "b'"),
            ("a", "1"),
            ("a'", "1"),
            ("b", "1"),
            ("b'", "1"),
        ],
    )
    .expect("MO2 is a lattice");
    check_orthomodular(&l, &[5, 2, 1, 4, 3, 0]).expect("MO2 is orthomodular")
}

/// The benzene ring `O6` with its orthocomplement: `0 < a < b < 1`,
/// `0 < b' < a' < 1`.
pub fn o6() -> (FiniteLattice, Vec<Elem>) {
    let l = FiniteLattice::build(
        ["0", "a", "b", "b'", "a'", "1"],
        &[
            ("0", "a"),
            ("a", "b"),
            ("b", "1"),
            ("0", "b'"),
            ("b'", "a'"),
            ("a'", "1"),
        ],
    )
    .expect("O6 is a lattice");
    (l, vec![5, 4, 3, 2, 1, 0])
}

/// The Boolean lattice of subsets of a `k`-element set with complement.
/// Element `i` is the subset with bit mask `i`.
pub fn boolean(k: u32) -> OrthomodularLattice {
    let n = 1usize << k;
    let full = n - 1;
    let name = |m: usize| match m {
        0 => "0".to_string(),
        m if m == full => "1".to_string(),
        m => (0..k as usize)
            .filter(|b| m >> b & 1 == 1)
            .map(|b| (b'a' + b as u8) as char)
            .collect(),
    };
    let names: Vec<String> = (0..n).map(name).collect();
    let leq = (0..n * n).map(|i| (i / n) & !(i % n) == 0).collect();
    let l = FiniteLattice::from_order(names, leq).expect("Boolean lattice");
    let map: Vec<Elem> = (0..n).map(|m| full ^ m).collect();
    check_orthomodular(&l, &map).expect("Boolean lattices are orthomodular")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_kleene(n: usize) -> KleeneAlgebra {
        let l = FiniteLattice::chain(n);
        let t = Involution::new(&l, (0..n).rev().collect()).unwrap();
        check_kleene(&l, &t).unwrap()
    }

    #[test]
    fn chain_rpc() {
        let l = FiniteLattice::chain(3);
        assert_eq!(relative_pseudocomplement(&l, 1, 0), Some(0));
        assert_eq!(relative_pseudocomplement(&l, 0, 1), Some(2));
        let c2 = FiniteLattice::chain(2);
        assert_eq!(relative_pseudocomplement(&c2, 1, 0), Some(0));
    }

    #[test]
    fn n5_is_not_kleene() {
        let l = FiniteLattice::build(
            ["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
        )
        .unwrap();
        let t = Involution::new(&l, vec![4, 3, 2, 1, 0]).unwrap();
        assert!(matches!(
            check_kleene(&l, &t),
            Err(LogicError::NotDistributive { .. })
        ));
    }

    #[test]
    fn three_element_nelson() {
        let n = build_nelson(chain_kleene(3)).unwrap();
        assert_eq!(n.arrow(1, 0), 2);
        assert_eq!(n.arrow(2, 1), 1);
        let g = nelson_to_residuated(&n).unwrap();
        let c = g.classify();
        assert!(c.integral.holds() && c.commutative.holds() && c.associative.holds());
        assert!(three_potency(&g).holds());
        assert_eq!(g.arrow_table(), g.derived_implication());
        assert_eq!(g.neg_table(), n.kleene.tilde.map());
    }

    #[test]
    fn mo2_groupoid_is_not_commutative() {
        let m = mo2();
        let g = m.to_groupoid().unwrap();
        assert!(g.lukasiewicz_type().holds());
        assert!(check_omi_star(&g).holds());
        assert_eq!(g.commutative().witness(), Some(&[1, 3][..]));
        let a = m.to_basic().unwrap();
        assert!(check_omi(&a).holds());
        assert!(a.idempotent().holds());
        assert!(!a.is_mv());
    }

    #[test]
    fn o6_is_not_orthomodular() {
        let (l, map) = o6();
        assert_eq!(
            check_orthomodular(&l, &map).unwrap_err(),
            LogicError::OrthomodularFails {
                x: "a".into(),
                y: "b".into()
            }
        );
    }

    #[test]
    fn boolean_names() {
        let b = boolean(2);
        assert_eq!(b.lattice.names(), ["0", "a", "b", "1"]);
        assert!(b.to_groupoid().unwrap().commutative().holds());
    }
}

//! Basic algebras `(A, ⊕, ⌉, 0)` and their implication reducts.
//!
//! A basic algebra satisfies
//!
//! * (BA1) `x⊕0 = x`
//! * (BA2) `⌉⌉x = x`
//! * (BA3) `⌉(⌉x⊕y)⊕y = ⌉(⌉y⊕x)⊕x`
//! * (BA4) `⌉(⌉(⌉(x⊕y)⊕y)⊕z)⊕(x⊕z) = 1`
//!
//! with `1 := ⌉0`. It is a bounded lattice under `x ≤ y ⟺ ⌉x⊕y = 1`.
//!
//! ```
//! use resilat::basic::mv_chain;
//!
//! let l3 = mv_chain(3).unwrap();
//! assert!(l3.is_mv());
//! assert_eq!(l3.lattice().names(), ["0", "1/2", "1"]);
//! ```

use serde::Serialize;
use thiserror::Error;

use crate::canon::{self, Canonical};
use crate::lattice::{chain_names, FiniteLattice};
use crate::ops::{invert, relabel_unary, BinaryOp, Elem};
use crate::residuation::{ResiduationError, RrlGroupoid};
use crate::sections::{FamilyMode, SectionError, SectionFamily, SectionedLattice};
use crate::verdict::{forall1, forall2, forall3, RenderedVerdict, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BasicError {
    #[error("table sizes disagree with the {expected} declared elements")]
    Shape { expected: usize },
    #[error("axiom {axiom} fails (witness: {})", witness.join(", "))]
    AxiomFails {
        axiom: &'static str,
        witness: Vec<String>,
    },
    #[error("derived order is inconsistent: {0}")]
    InternalInconsistency(String),
    #[error("groupoid is not of Łukasiewicz type: {what} (witness: {})", witness.join(", "))]
    NotLukasiewiczType {
        what: &'static str,
        witness: Vec<String>,
    },
    #[error("implication fails ({name}) (witness: {})", witness.join(", "))]
    IdentityFails {
        name: &'static str,
        witness: Vec<String>,
    },
    #[error("reduct cannot be reconstructed: {0}")]
    NotReconstructible(String),
    #[error("a Łukasiewicz chain needs at least 2 elements, got {0}")]
    InvalidSize(usize),
    #[error(transparent)]
    Section(#[from] SectionError),
    #[error(transparent)]
    Residuation(#[from] ResiduationError),
}

fn witness_names(names: &[String], v: &Verdict) -> Vec<String> {
    v.witness()
        .unwrap_or(&[])
        .iter()
        .map(|&e| names[e].clone())
        .collect()
}

/// The four axioms evaluated on raw tables, in order.
pub fn basic_axioms(oplus: &BinaryOp, neg: &[Elem], zero: Elem) -> [(&'static str, Verdict); 4] {
    let n = oplus.size();
    let one = neg[zero];
    let o = |x, y| oplus.get(x, y);
    [
        ("BA1", forall1(n, |x| o(x, zero) == x)),
        ("BA2", forall1(n, |x| neg[neg[x]] == x)),
        (
            "BA3",
            forall2(n, |x, y| o(neg[o(neg[x], y)], y) == o(neg[o(neg[y], x)], x)),
        ),
        (
            "BA4",
            forall3(n, |x, y, z| {
                o(neg[o(neg[o(neg[o(x, y)], y)], z)], o(x, z)) == one
            }),
        ),
    ]
}

/// A validated basic algebra together with its induced lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasicAlgebra {
    oplus: BinaryOp,
    neg: Vec<Elem>,
    zero: Elem,
    lattice: FiniteLattice,
}

impl BasicAlgebra {
    pub fn new(
        names: Vec<String>,
        oplus: BinaryOp,
        neg: Vec<Elem>,
        zero: Elem,
    ) -> Result<Self, BasicError> {
        let n = names.len();
        if n == 0 || oplus.size() != n || neg.len() != n || zero >= n || neg.iter().any(|&v| v >= n)
        {
            return Err(BasicError::Shape { expected: n });
        }
        for (axiom, v) in basic_axioms(&oplus, &neg, zero) {
            if v.fails() {
                return Err(BasicError::AxiomFails {
                    axiom,
                    witness: witness_names(&names, &v),
                });
            }
        }
        let lattice = induced_lattice(names, &oplus, &neg, zero)?;
        Ok(Self {
            oplus,
            neg,
            zero,
            lattice,
        })
    }

    pub fn names(&self) -> &[String] {
        self.lattice.names()
    }

    pub fn size(&self) -> usize {
        self.neg.len()
    }

    pub fn oplus(&self, x: Elem, y: Elem) -> Elem {
        self.oplus.get(x, y)
    }

    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x]
    }

    pub fn oplus_table(&self) -> &BinaryOp {
        &self.oplus
    }

    pub fn neg_table(&self) -> &[Elem] {
        &self.neg
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    /// `1 := ⌉0`.
    pub fn one(&self) -> Elem {
        self.neg[self.zero]
    }

    /// The lattice ordered by `x ≤ y ⟺ ⌉x⊕y = 1`.
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    /// MV-algebras are exactly the associative basic algebras.
    pub fn is_mv(&self) -> bool {
        self.associative().holds()
    }

    pub fn associative(&self) -> Verdict {
        let o = &self.oplus;
        forall3(self.size(), |x, y, z| {
            o.get(x, o.get(y, z)) == o.get(o.get(x, y), z)
        })
    }

    pub fn commutative(&self) -> Verdict {
        forall2(self.size(), |x, y| self.oplus(x, y) == self.oplus(y, x))
    }

    /// `x⊕x = x`.
    pub fn idempotent(&self) -> Verdict {
        forall1(self.size(), |x| self.oplus(x, x) == x)
    }

    pub fn relabel(&self, perm: &[Elem]) -> Self {
        Self {
            oplus: self.oplus.relabel(perm),
            neg: relabel_unary(&self.neg, perm),
            zero: invert(perm)[self.zero],
            lattice: self.lattice.relabel(perm),
        }
    }

    /// Canonical form of `(≤, ⊕, ⌉)` with 0 and 1 fixed.
    pub fn canonical(&self) -> Canonical {
        canon::canonicalize(&canon::Structure {
            size: self.size(),
            bottom: self.lattice.bottom(),
            top: self.lattice.top(),
            order: self.lattice.order_matrix(),
            binary: vec![&self.oplus],
            unary: vec![&self.neg],
            partial: Vec::new(),
        })
    }
}

fn induced_lattice(
    names: Vec<String>,
    oplus: &BinaryOp,
    neg: &[Elem],
    zero: Elem,
) -> Result<FiniteLattice, BasicError> {
    let n = names.len();
    let one = neg[zero];
    let leq: Vec<bool> = (0..n * n)
        .map(|i| oplus.get(neg[i / n], i % n) == one)
        .collect();
    let l = FiniteLattice::from_order(names, leq)
        .map_err(|e| BasicError::InternalInconsistency(e.to_string()))?;
    if l.bottom() != zero || l.top() != one {
        return Err(BasicError::InternalInconsistency(
            "0 and 1 are not the bounds".into(),
        ));
    }
    let join = |x: Elem, y: Elem| oplus.get(neg[oplus.get(neg[x], y)], y);
    if let Some((x, y)) = pairs(n).find(|&(x, y)| l.join(x, y) != join(x, y)) {
        return Err(BasicError::InternalInconsistency(format!(
            "join of {} and {} disagrees with ⌉(⌉x⊕y)⊕y",
            l.name(x),
            l.name(y)
        )));
    }
    Ok(l)
}

fn pairs(n: usize) -> impl Iterator<Item = (Elem, Elem)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

/// The `n`-element Łukasiewicz chain: `e_i⊕e_j = e_{min(i+j, n-1)}`,
/// `⌉e_i = e_{n-1-i}`.
pub fn mv_chain(n: usize) -> Result<BasicAlgebra, BasicError> {
    if n < 2 {
        return Err(BasicError::InvalidSize(n));
    }
    let oplus = BinaryOp::from_fn(n, |i, j| (i + j).min(n - 1));
    let neg = (0..n).map(|i| n - 1 - i).collect();
    BasicAlgebra::new(chain_names(n), oplus, neg, 0)
}

/// `x⊕y := (x^0 ∨ y)^y`, `⌉x := x^0` from sectional involutions.
pub fn a_of_l(l: &FiniteLattice, family: &SectionFamily) -> Result<BasicAlgebra, BasicError> {
    crate::sections::require_involutive(l, family)?;
    let b = l.bottom();
    let neg: Vec<Elem> = l.elements().map(|x| family.apply(b, x)).collect();
    let oplus = BinaryOp::from_fn(l.size(), |x, y| family.apply(y, l.join(neg[x], y)));
    BasicAlgebra::new(l.names().to_vec(), oplus, neg, b)
}

/// `x^a := ⌉x⊕a` on the induced lattice.
pub fn l_of_a(a: &BasicAlgebra) -> Result<SectionedLattice, BasicError> {
    let l = a.lattice();
    let family =
        SectionFamily::from_fn(l, FamilyMode::Involutive, |base, x| a.oplus(a.neg(x), base))?;
    Ok(SectionedLattice::new(l.clone(), None, family))
}

/// `x⊙y := ⌉(⌉x⊕⌉y)`, `x→y := y⊕⌉x`.
pub fn g_of_a(a: &BasicAlgebra) -> Result<RrlGroupoid, BasicError> {
    let n = a.size();
    let odot = BinaryOp::from_fn(n, |x, y| a.neg(a.oplus(a.neg(x), a.neg(y))));
    let arrow = BinaryOp::from_fn(n, |x, y| a.oplus(y, a.neg(x)));
    Ok(RrlGroupoid::new(a.lattice().clone(), odot, arrow)?)
}

/// `x⊕y := ⌉(⌉x⊙⌉y)` for a groupoid of Łukasiewicz type.
pub fn a_of_g(g: &RrlGroupoid) -> Result<BasicAlgebra, BasicError> {
    for (what, v) in [
        ("not integral", g.integral()),
        ("not involutive", g.involutive()),
        ("Łukasiewicz identity fails", g.lukasiewicz_identity()),
    ] {
        if v.fails() {
            return Err(BasicError::NotLukasiewiczType {
                what,
                witness: witness_names(g.names(), &v),
            });
        }
    }
    let oplus = BinaryOp::from_fn(g.size(), |x, y| g.neg(g.odot(g.neg(x), g.neg(y))));
    BasicAlgebra::new(g.names().to_vec(), oplus, g.neg_table().to_vec(), g.zero())
}

/// Associativity and commutativity of `⊕` against those of the
/// corresponding `⊙`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperationCorrespondence {
    pub oplus_associative: bool,
    pub odot_associative: bool,
    pub oplus_commutative: bool,
    pub odot_commutative: bool,
}

impl OperationCorrespondence {
    pub fn agrees(&self) -> bool {
        self.oplus_associative == self.odot_associative
            && self.oplus_commutative == self.odot_commutative
    }
}

pub fn check_operation_correspondence(
    a: &BasicAlgebra,
) -> Result<OperationCorrespondence, BasicError> {
    let g = g_of_a(a)?;
    Ok(OperationCorrespondence {
        oplus_associative: a.associative().holds(),
        odot_associative: g.associative().holds(),
        oplus_commutative: a.commutative().holds(),
        odot_commutative: g.commutative().holds(),
    })
}

/// `(A, ⇒, 0)` with `1 := 0⇒0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ImplicationReduct {
    names: Vec<String>,
    imp: BinaryOp,
    zero: Elem,
}

/// The identities an implication reduct must satisfy, plus the laws
/// derived from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductReport {
    /// `x⇒x = 1`, `x⇒1 = 1`, `1⇒x = x`.
    pub i0_star: Verdict,
    /// `y⇒(x⇒y) = 1`.
    pub i1_star: Verdict,
    /// `(x⇒y)⇒y = (y⇒x)⇒x`.
    pub lukasiewicz: Verdict,
    /// `(((x⇒y)⇒y)⇒z)⇒(x⇒z) = 1`.
    pub i4: Verdict,
    /// `0⇒x = 1`.
    pub i5: Verdict,
    /// `x ≤ y :⟺ x⇒y = 1` is a partial order.
    pub partial_order: Verdict,
    /// `(x⇒y)⇒y` is the least upper bound.
    pub join: Verdict,
    /// `x ≤ y` implies `y⇒z ≤ x⇒z`.
    pub antitone: Verdict,
    /// `((x⇒y)⇒y)⇒y = x⇒y`.
    pub triple: Verdict,
}

impl ReductReport {
    fn axioms(&self) -> [(&'static str, &Verdict); 5] {
        [
            ("I0*", &self.i0_star),
            ("I1*", &self.i1_star),
            ("Ł", &self.lukasiewicz),
            ("I4", &self.i4),
            ("I5", &self.i5),
        ]
    }

    /// The defining identities hold.
    pub fn axioms_hold(&self) -> bool {
        self.axioms().iter().all(|(_, v)| v.holds())
    }

    pub fn all(&self) -> [(&'static str, &Verdict); 9] {
        let [a, b, c, d, e] = self.axioms();
        [
            a,
            b,
            c,
            d,
            e,
            ("partial_order", &self.partial_order),
            ("join", &self.join),
            ("antitone", &self.antitone),
            ("triple", &self.triple),
        ]
    }

    pub fn render(&self, names: &[String]) -> indexmap::IndexMap<&'static str, RenderedVerdict> {
        self.all()
            .into_iter()
            .map(|(k, v)| (k, v.render(names)))
            .collect()
    }
}

/// Evaluates every reduct identity on a raw `⇒` table.
pub fn check_reduct_identities(imp: &BinaryOp, zero: Elem) -> ReductReport {
    let n = imp.size();
    let i = |x, y| imp.get(x, y);
    let one = i(zero, zero);
    let le = |x, y| i(x, y) == one;
    let join = |x, y| i(i(x, y), y);
    ReductReport {
        i0_star: forall1(n, |x| i(x, x) == one && i(x, one) == one && i(one, x) == x),
        i1_star: forall2(n, |x, y| i(y, i(x, y)) == one),
        lukasiewicz: forall2(n, |x, y| join(x, y) == join(y, x)),
        i4: forall3(n, |x, y, z| i(i(join(x, y), z), i(x, z)) == one),
        i5: forall1(n, |x| i(zero, x) == one),
        partial_order: forall3(n, |x, y, z| {
            le(x, x) && (!(le(x, y) && le(y, x)) || x == y) && (!(le(x, y) && le(y, z)) || le(x, z))
        }),
        join: forall3(n, |x, y, z| {
            let j = join(x, y);
            le(x, j) && le(y, j) && (!(le(x, z) && le(y, z)) || le(j, z))
        }),
        antitone: forall3(n, |x, y, z| !le(x, y) || le(i(y, z), i(x, z))),
        triple: forall2(n, |x, y| i(join(x, y), y) == i(x, y)),
    }
}

impl ImplicationReduct {
    pub fn new(names: Vec<String>, imp: BinaryOp, zero: Elem) -> Result<Self, BasicError> {
        if imp.size() != names.len() || zero >= names.len() {
            return Err(BasicError::Shape {
                expected: names.len(),
            });
        }
        let report = check_reduct_identities(&imp, zero);
        if let Some((name, v)) = report.axioms().into_iter().find(|(_, v)| v.fails()) {
            return Err(BasicError::IdentityFails {
                name,
                witness: witness_names(&names, v),
            });
        }
        Ok(Self { names, imp, zero })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn imp_table(&self) -> &BinaryOp {
        &self.imp
    }

    pub fn implies(&self, x: Elem, y: Elem) -> Elem {
        self.imp.get(x, y)
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    /// `1 := 0⇒0`.
    pub fn one(&self) -> Elem {
        self.imp.get(self.zero, self.zero)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn report(&self) -> ReductReport {
        check_reduct_identities(&self.imp, self.zero)
    }
}

/// `x⇒y := ⌉x⊕y`.
pub fn implication_reduct(a: &BasicAlgebra) -> ImplicationReduct {
    let imp = BinaryOp::from_fn(a.size(), |x, y| a.oplus(a.neg(x), y));
    ImplicationReduct {
        names: a.names().to_vec(),
        imp,
        zero: a.zero(),
    }
}

/// The order `x ≤ y :⟺ x⇒y = 1` and its join `(x⇒y)⇒y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductOrder {
    pub leq: Vec<bool>,
    pub join: BinaryOp,
}

pub fn reduct_order(r: &ImplicationReduct) -> ReductOrder {
    let n = r.size();
    let one = r.one();
    ReductOrder {
        leq: (0..n * n).map(|i| r.implies(i / n, i % n) == one).collect(),
        join: BinaryOp::from_fn(n, |x, y| r.implies(r.implies(x, y), y)),
    }
}

/// `⌉x := x⇒0`, `x⊕y := ⌉x⇒y`; the result's implication reproduces `⇒`.
pub fn b_of_reduct(r: &ImplicationReduct) -> Result<BasicAlgebra, BasicError> {
    let z = r.zero();
    let neg: Vec<Elem> = (0..r.size()).map(|x| r.implies(x, z)).collect();
    let oplus = BinaryOp::from_fn(r.size(), |x, y| r.implies(neg[x], y));
    let a = BasicAlgebra::new(r.names.clone(), oplus, neg, z)
        .map_err(|e| BasicError::NotReconstructible(e.to_string()))?;
    if implication_reduct(&a).imp != r.imp {
        return Err(BasicError::NotReconstructible(
            "implication of the reconstructed algebra differs".into(),
        ));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_size_rejected() {
        assert_eq!(mv_chain(1).unwrap_err(), BasicError::InvalidSize(1));
    }

    #[test]
    fn four_chain_entries() {
        let a = mv_chain(4).unwrap();
        assert_eq!(a.oplus(1, 2), 3);
        assert_eq!(a.neg(1), 2);
        assert!(a.is_mv());
    }

    #[test]
    fn broken_negation_fails_ba2() {
        let oplus = BinaryOp::from_fn(3, |i, j| (i + j).min(2));
        let err = BasicAlgebra::new(chain_names(3), oplus, vec![2, 0, 0], 0).unwrap_err();
        assert_eq!(
            err,
            BasicError::AxiomFails {
                axiom: "BA2",
                witness: vec!["1/2".into()]
            }
        );
    }

    #[test]
    fn three_chain_transforms() {
        let a = mv_chain(3).unwrap();
        assert_eq!(a.lattice(), &FiniteLattice::chain(3));
        let s = l_of_a(&a).unwrap();
        assert_eq!(a_of_l(&s.lattice, &s.family).unwrap(), a);
        let g = g_of_a(&a).unwrap();
        assert!(g.lukasiewicz_type().holds());
        assert_eq!(a_of_g(&g).unwrap(), a);
    }

    #[test]
    fn reduct_roundtrip() {
        let a = mv_chain(3).unwrap();
        let r = implication_reduct(&a);
        assert_eq!(r.implies(1, 0), 1);
        assert!(r.report().all().iter().all(|(_, v)| v.holds()));
        assert_eq!(b_of_reduct(&r).unwrap(), a);
        let order = reduct_order(&r);
        assert_eq!(&order.leq, a.lattice().order_matrix());
        assert_eq!(&order.join, a.lattice().join_table());
    }

    #[test]
    fn operation_correspondence_on_chain() {
        let r = check_operation_correspondence(&mv_chain(3).unwrap()).unwrap();
        assert!(r.oplus_associative && r.odot_associative && r.agrees());
    }
}

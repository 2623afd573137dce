//! Identities of an implication-like operation `⇒` over a bounded lattice.
//!
//! These are shared by the groupoid classifier, the sectional-map
//! correspondence and the pseudocomplement characterization.

use crate::lattice::FiniteLattice;
use crate::ops::BinaryOp;
use crate::verdict::{forall2, forall3, Verdict};

/// (I0): `(x∨y)⇒y = x⇒y`, `x⇒x = 1`, `1⇒x = x`.
///
/// A witness is `[x, y]`; the unary clauses report `[x, x]`.
pub fn i0(l: &FiniteLattice, imp: &BinaryOp) -> Verdict {
    let top = l.top();
    forall2(l.size(), |x, y| {
        imp.get(l.join(x, y), y) == imp.get(x, y) && imp.get(x, x) == top && imp.get(top, x) == x
    })
}

/// (I1): `(x⇒y) ∧ y = y`.
pub fn i1(l: &FiniteLattice, imp: &BinaryOp) -> Verdict {
    forall2(l.size(), |x, y| l.meet(imp.get(x, y), y) == y)
}

/// (I2): `x ≤ y` implies `y⇒z ≤ x⇒z`.
pub fn i2(l: &FiniteLattice, imp: &BinaryOp) -> Verdict {
    forall3(l.size(), |x, y, z| {
        !l.leq(x, y) || l.leq(imp.get(y, z), imp.get(x, z))
    })
}

/// (I3): `[(x⇒y)⇒y] ∧ (x∨y) = x∨y`.
pub fn i3(l: &FiniteLattice, imp: &BinaryOp) -> Verdict {
    forall2(l.size(), |x, y| {
        let j = l.join(x, y);
        l.meet(imp.get(imp.get(x, y), y), j) == j
    })
}

/// (I3*): `(x⇒y)⇒y = x∨y`.
pub fn i3_star(l: &FiniteLattice, imp: &BinaryOp) -> Verdict {
    forall2(l.size(), |x, y| imp.get(imp.get(x, y), y) == l.join(x, y))
}

/// Łukasiewicz identity: `(x⇒y)⇒y = (y⇒x)⇒x`.
pub fn lukasiewicz(imp: &BinaryOp) -> Verdict {
    forall2(imp.size(), |x, y| {
        imp.get(imp.get(x, y), y) == imp.get(imp.get(y, x), x)
    })
}

/// `x ≤ y ⟺ x⇒y = 1`.
pub fn order_by_implication(l: &FiniteLattice, imp: &BinaryOp) -> Verdict {
    forall2(l.size(), |x, y| l.leq(x, y) == (imp.get(x, y) == l.top()))
}

/// (P1): `x⇒x = 1`, `1⇒x = x`.
pub fn p1(l: &FiniteLattice, imp: &BinaryOp) -> Verdict {
    let top = l.top();
    crate::verdict::forall1(l.size(), |x| imp.get(x, x) == top && imp.get(top, x) == x)
}

/// (P2): `(x∨y)⇒y = x⇒y`, `y ∧ (x⇒y) = y`.
pub fn p2(l: &FiniteLattice, imp: &BinaryOp) -> Verdict {
    forall2(l.size(), |x, y| {
        imp.get(l.join(x, y), y) == imp.get(x, y) && l.meet(y, imp.get(x, y)) == y
    })
}

/// (P3): same statement as (I3).
pub fn p3(l: &FiniteLattice, imp: &BinaryOp) -> Verdict {
    i3(l, imp)
}

/// The left-hand side shared by both readings of (P4):
/// `([(x∨z)∧(y∨z)]⇒z) ∧ ([(x∨z)∧(y⇒z)]⇒z)`.
fn p4_lhs(l: &FiniteLattice, imp: &BinaryOp, x: usize, y: usize, z: usize) -> usize {
    let xz = l.join(x, z);
    let left = imp.get(l.meet(xz, l.join(y, z)), z);
    let right = imp.get(l.meet(xz, imp.get(y, z)), z);
    l.meet(left, right)
}

/// (P4) with right-hand side `x ∧ z`.
///
/// Since every `u⇒z` lies above `z` whenever (P2) holds, the left side is
/// at least `z` while `x ∧ z` is at most `z`; the identity therefore fails
/// on every lattice with more than one element (`x = 0, z = 1`). It is kept
/// so reports can show the counterexample.
pub fn p4_meet(l: &FiniteLattice, imp: &BinaryOp) -> Verdict {
    forall3(l.size(), |x, y, z| p4_lhs(l, imp, x, y, z) == l.meet(x, z))
}

/// (P4) with right-hand side `x⇒z`, the reading that holds for relative
/// pseudocomplementation and is used by the characterization checks.
pub fn p4(l: &FiniteLattice, imp: &BinaryOp) -> Verdict {
    forall3(l.size(), |x, y, z| p4_lhs(l, imp, x, y, z) == imp.get(x, z))
}

/// The four conditions (I0)–(I3) in one report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationChecks {
    pub i0: Verdict,
    pub i1: Verdict,
    pub i2: Verdict,
    pub i3: Verdict,
}

impl ImplicationChecks {
    pub fn new(l: &FiniteLattice, imp: &BinaryOp) -> Self {
        Self {
            i0: i0(l, imp),
            i1: i1(l, imp),
            i2: i2(l, imp),
            i3: i3(l, imp),
        }
    }

    pub fn all_hold(&self) -> bool {
        self.i0.holds() && self.i1.holds() && self.i2.holds() && self.i3.holds()
    }

    /// The first failing identity, by name.
    pub fn first_failure(&self) -> Option<(&'static str, &Verdict)> {
        [
            ("I0", &self.i0),
            ("I1", &self.i1),
            ("I2", &self.i2),
            ("I3", &self.i3),
        ]
        .into_iter()
        .find(|(_, v)| v.fails())
    }
}

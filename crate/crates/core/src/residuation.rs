//! Right-residuated l-groupoids as operation tables.
//!
//! A right-residuated l-groupoid is a bounded lattice with a groupoid
//! operation `⊙` satisfying `1⊙x = x` and a right residual `→`:
//!
//! ```text
//! x ⊙ y ≤ z   ⟺   x ≤ y → z
//! ```
//!
//! On a finite lattice either table determines the other, so
//! [`derive_arrow_from_odot`] and [`derive_odot_from_arrow`] reconstruct the
//! missing half and then validate the pair. [`RrlGroupoid::classify`] and
//! [`RrlGroupoid::biconditionals`] evaluate every structural property by
//! exhaustive quantification.

use serde::Serialize;
use thiserror::Error;

use crate::canon::{self, Canonical};
use crate::identities;
use crate::lattice::FiniteLattice;
use crate::ops::{BinaryOp, Elem};
use crate::verdict::{forall1, forall2, forall3, RenderedVerdict, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResiduationError {
    #[error("{table} table has size {got}, lattice has {expected} elements")]
    Shape {
        table: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("unit law fails: 1⊙{x} = {got}")]
    UnitFails { x: String, got: String },
    #[error("right-adjointness fails at x={x}, y={y}, z={z}")]
    AdjointnessFails { x: String, y: String, z: String },
    #[error("no residual exists: adjointness fails at x={x}, y={y}, z={z}")]
    NotResiduated { x: String, y: String, z: String },
    #[error("{statement} violated (witness: {})", witness.join(", "))]
    BiconditionalViolation {
        statement: &'static str,
        witness: Vec<String>,
    },
}

/// A validated right-residuated l-groupoid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RrlGroupoid {
    lattice: FiniteLattice,
    odot: BinaryOp,
    arrow: BinaryOp,
    neg: Vec<Elem>,
    imp: BinaryOp,
}

fn check_shape(
    l: &FiniteLattice,
    table: &'static str,
    op: &BinaryOp,
) -> Result<(), ResiduationError> {
    if op.size() != l.size() {
        return Err(ResiduationError::Shape {
            table,
            expected: l.size(),
            got: op.size(),
        });
    }
    Ok(())
}

/// The least triple `(x, y, z)` at which adjointness fails.
fn adjointness_witness(l: &FiniteLattice, odot: &BinaryOp, arrow: &BinaryOp) -> Option<[Elem; 3]> {
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                if l.leq(odot.get(x, y), z) != l.leq(x, arrow.get(y, z)) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

fn unit_witness(l: &FiniteLattice, odot: &BinaryOp) -> Option<Elem> {
    l.elements().find(|&x| odot.get(l.top(), x) != x)
}

impl RrlGroupoid {
    /// Validates the unit law and right-adjointness.
    pub fn new(
        lattice: FiniteLattice,
        odot: BinaryOp,
        arrow: BinaryOp,
    ) -> Result<Self, ResiduationError> {
        check_shape(&lattice, "⊙", &odot)?;
        check_shape(&lattice, "→", &arrow)?;
        if let Some(x) = unit_witness(&lattice, &odot) {
            return Err(ResiduationError::UnitFails {
                x: lattice.name(x).to_string(),
                got: lattice.name(odot.get(lattice.top(), x)).to_string(),
            });
        }
        if let Some([x, y, z]) = adjointness_witness(&lattice, &odot, &arrow) {
            return Err(ResiduationError::AdjointnessFails {
                x: lattice.name(x).to_string(),
                y: lattice.name(y).to_string(),
                z: lattice.name(z).to_string(),
            });
        }
        Ok(Self::assemble(lattice, odot, arrow))
    }

    /// Builds the groupoid from tables already known to be valid.
    pub(crate) fn assemble(lattice: FiniteLattice, odot: BinaryOp, arrow: BinaryOp) -> Self {
        let bottom = lattice.bottom();
        let neg: Vec<Elem> = lattice.elements().map(|x| arrow.get(x, bottom)).collect();
        let imp = BinaryOp::from_fn(lattice.size(), |x, y| arrow.get(neg[y], neg[x]));
        Self {
            lattice,
            odot,
            arrow,
            neg,
            imp,
        }
    }

    /// Builds the groupoid from `⊙`, deriving `→`.
    pub fn from_odot(lattice: FiniteLattice, odot: BinaryOp) -> Result<Self, ResiduationError> {
        let arrow = derive_arrow_from_odot(&lattice, &odot)?;
        Ok(Self::assemble(lattice, odot, arrow))
    }

    /// Builds the groupoid from `→`, deriving `⊙`.
    pub fn from_arrow(lattice: FiniteLattice, arrow: BinaryOp) -> Result<Self, ResiduationError> {
        let odot = derive_odot_from_arrow(&lattice, &arrow)?;
        Ok(Self::assemble(lattice, odot, arrow))
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn odot_table(&self) -> &BinaryOp {
        &self.odot
    }

    pub fn arrow_table(&self) -> &BinaryOp {
        &self.arrow
    }

    /// The derived implication `x ⇒ y := ⌉y → ⌉x` as a table.
    pub fn derived_implication(&self) -> &BinaryOp {
        &self.imp
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    #[inline]
    pub fn odot(&self, x: Elem, y: Elem) -> Elem {
        self.odot.get(x, y)
    }

    #[inline]
    pub fn arrow(&self, x: Elem, y: Elem) -> Elem {
        self.arrow.get(x, y)
    }

    /// `⌉x := x → 0`.
    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x]
    }

    pub fn neg_table(&self) -> &[Elem] {
        &self.neg
    }

    /// `x ⇒ y`.
    #[inline]
    pub fn implies(&self, x: Elem, y: Elem) -> Elem {
        self.imp.get(x, y)
    }

    pub fn zero(&self) -> Elem {
        self.lattice.bottom()
    }

    pub fn one(&self) -> Elem {
        self.lattice.top()
    }

    pub fn names(&self) -> &[String] {
        self.lattice.names()
    }

    pub fn relabel(&self, perm: &[Elem]) -> Self {
        Self::assemble(
            self.lattice.relabel(perm),
            self.odot.relabel(perm),
            self.arrow.relabel(perm),
        )
    }

    /// Canonical code of the bundle (order, `⊙`, `→`) up to isomorphism.
    pub fn canonical(&self) -> Canonical {
        canon::canonicalize(&canon::Structure {
            size: self.size(),
            bottom: self.zero(),
            top: self.one(),
            order: self.lattice.order_matrix(),
            binary: vec![&self.odot, &self.arrow],
            unary: Vec::new(),
            partial: Vec::new(),
        })
    }

    // Individual properties. Each is an exhaustive check.

    pub fn integral(&self) -> Verdict {
        let one = self.one();
        forall1(self.size(), |x| {
            self.odot(one, x) == x && self.odot(x, one) == x
        })
    }

    pub fn commutative(&self) -> Verdict {
        forall2(self.size(), |x, y| self.odot(x, y) == self.odot(y, x))
    }

    pub fn associative(&self) -> Verdict {
        forall3(self.size(), |x, y, z| {
            self.odot(self.odot(x, y), z) == self.odot(x, self.odot(y, z))
        })
    }

    /// `⌉⌉x = x`.
    pub fn double_negation(&self) -> Verdict {
        forall1(self.size(), |x| self.neg(self.neg(x)) == x)
    }

    /// `⌉` is an antitone involution.
    pub fn involutive(&self) -> Verdict {
        let l = &self.lattice;
        self.double_negation().and(|| {
            forall2(self.size(), |x, y| {
                !l.leq(x, y) || l.leq(self.neg(y), self.neg(x))
            })
        })
    }

    /// (C): `z ≤ x⊙y ⟺ y→⌉x ≤ ⌉z`.
    pub fn condition_c(&self) -> Verdict {
        let l = &self.lattice;
        forall3(self.size(), |x, y, z| {
            l.leq(z, self.odot(x, y)) == l.leq(self.arrow(y, self.neg(x)), self.neg(z))
        })
    }

    /// `(x→y)⊙x = x∧y`.
    pub fn divisibility(&self) -> Verdict {
        let l = &self.lattice;
        forall2(self.size(), |x, y| {
            self.odot(self.arrow(x, y), x) == l.meet(x, y)
        })
    }

    /// `x⊙y = ⌉(y→⌉x)`.
    pub fn negation_formula(&self) -> Verdict {
        forall2(self.size(), |x, y| {
            self.odot(x, y) == self.neg(self.arrow(y, self.neg(x)))
        })
    }

    /// (D): `(x⊙y)⇒z = x⇒(y⇒z)`.
    pub fn identity_d(&self) -> Verdict {
        forall3(self.size(), |x, y, z| {
            self.implies(self.odot(x, y), z) == self.implies(x, self.implies(y, z))
        })
    }

    pub fn lukasiewicz_identity(&self) -> Verdict {
        identities::lukasiewicz(&self.imp)
    }

    /// Integral, involutive and satisfying the Łukasiewicz identity.
    pub fn lukasiewicz_type(&self) -> Verdict {
        self.integral()
            .and(|| self.involutive())
            .and(|| self.lukasiewicz_identity())
    }

    /// Six basic laws: `⌉0 = 1`, `x ≤ y ⟺ x→y = 1`, `0` absorbs `⊙`,
    /// monotonicity of `⊙` and `x→·`, `x⊙y ≤ y` with `y→z = y→(y∧z)`,
    /// and `⌉1 = 0` (guarded by double negation).
    pub fn basic_laws(&self) -> [Verdict; 6] {
        let l = &self.lattice;
        let (zero, one) = (self.zero(), self.one());
        let n = self.size();
        [
            if self.neg(zero) == one {
                Verdict::Holds
            } else {
                Verdict::Fails(vec![zero])
            },
            forall2(n, |a, b| l.leq(a, b) == (self.arrow(a, b) == one)),
            forall1(n, |a| {
                self.odot(a, zero) == zero && self.odot(zero, a) == zero
            }),
            forall3(n, |x, y, z| {
                !l.leq(y, z)
                    || (l.leq(self.odot(y, x), self.odot(z, x))
                        && l.leq(self.arrow(x, y), self.arrow(x, z)))
            }),
            forall3(n, |x, y, z| {
                l.leq(self.odot(x, y), y) && self.arrow(y, z) == self.arrow(y, l.meet(y, z))
            }),
            Verdict::guarded(self.double_negation().holds(), || {
                if self.neg(one) == zero {
                    Verdict::Holds
                } else {
                    Verdict::Fails(vec![one])
                }
            }),
        ]
    }

    /// In the involutive case: (I0), (I1), (I2) and `x ≤ y ⟺ x⇒y = 1`.
    pub fn involutive_implication_laws(&self) -> Verdict {
        Verdict::guarded(self.involutive().holds(), || {
            let l = &self.lattice;
            identities::i0(l, &self.imp)
                .and(|| identities::i1(l, &self.imp))
                .and(|| identities::i2(l, &self.imp))
                .and(|| identities::order_by_implication(l, &self.imp))
        })
    }

    /// For commutative integral associative instances with double negation:
    /// `⇒` and `→` coincide and each `x ↦ x→a` on `[a,1]` is an antitone
    /// extensive self-map of the section.
    pub fn residuated_lattice_sections(&self) -> Verdict {
        let guard = self.commutative().holds()
            && self.integral().holds()
            && self.associative().holds()
            && self.double_negation().holds();
        Verdict::guarded(guard, || {
            let l = &self.lattice;
            let n = self.size();
            forall2(n, |x, y| self.implies(x, y) == self.arrow(x, y)).and(|| {
                forall3(n, |a, x, y| {
                    if !l.leq(a, x) || !l.leq(a, y) {
                        return true;
                    }
                    let xa = self.arrow(x, a);
                    let into = l.leq(a, xa);
                    let antitone = !l.leq(x, y) || l.leq(self.arrow(y, a), xa);
                    let extensive = l.leq(x, self.arrow(xa, a));
                    into && antitone && extensive
                })
            })
        })
    }

    pub fn classify(&self) -> PropertyReport {
        let l = &self.lattice;
        let imp = &self.imp;
        PropertyReport {
            integral: self.integral(),
            commutative: self.commutative(),
            associative: self.associative(),
            double_negation: self.double_negation(),
            involutive: self.involutive(),
            condition_c: self.condition_c(),
            divisibility: self.divisibility(),
            negation_formula: self.negation_formula(),
            i0: identities::i0(l, imp),
            i1: identities::i1(l, imp),
            i2: identities::i2(l, imp),
            i3: identities::i3(l, imp),
            i3_star: identities::i3_star(l, imp),
            identity_d: self.identity_d(),
            lukasiewicz_identity: self.lukasiewicz_identity(),
            lukasiewicz_type: self.lukasiewicz_type(),
            basic_laws: self.basic_laws(),
        }
    }

    /// Evaluates both sides of every structural biconditional.
    pub fn biconditionals(&self) -> BiconditionalReport {
        let p = self.classify();
        let derived_zero = forall1(self.size(), |x| self.implies(x, self.zero()) == self.neg(x));
        let implications_agree =
            forall2(self.size(), |x, y| self.implies(x, y) == self.arrow(x, y));
        let involutive = p.involutive.holds();
        let negation_guard = involutive && p.negation_formula.holds();

        let items = vec![
            Biconditional::new(
                "dn_c_negation",
                "(DN ∧ C) ⟺ (involutive ∧ x⊙y = ⌉(y→⌉x))",
                true,
                vec![
                    (
                        "DN ∧ C",
                        p.double_negation.clone().and(|| p.condition_c.clone()),
                    ),
                    (
                        "involutive ∧ x⊙y=⌉(y→⌉x)",
                        p.involutive.clone().and(|| p.negation_formula.clone()),
                    ),
                ],
            ),
            Biconditional::new(
                "involutive_i3",
                "involutive ⟹ (I3 ⟺ x⊙y = ⌉(y→⌉x) ⟺ C)",
                involutive,
                vec![
                    ("I3", p.i3.clone()),
                    ("x⊙y=⌉(y→⌉x)", p.negation_formula.clone()),
                    ("C", p.condition_c.clone()),
                ],
            ),
            Biconditional::new(
                "integral_zero",
                "integral ⟺ x⇒0 = x→0",
                negation_guard,
                vec![("integral", p.integral.clone()), ("x⇒0=x→0", derived_zero)],
            ),
            Biconditional::new(
                "commutative_implication",
                "commutative ⟺ ⇒ = →",
                negation_guard,
                vec![
                    ("commutative", p.commutative.clone()),
                    ("⇒=→", implications_agree),
                ],
            ),
            Biconditional::new(
                "associative_d",
                "associative ⟺ (D)",
                negation_guard,
                vec![
                    ("associative", p.associative.clone()),
                    ("D", p.identity_d.clone()),
                ],
            ),
            Biconditional::new(
                "associative_residuated",
                "involutive ∧ I3 ⟹ (associative ⟺ integral commutative residuated lattice)",
                involutive && p.i3.holds(),
                vec![
                    ("associative", p.associative.clone()),
                    (
                        "integral ∧ commutative ∧ associative",
                        p.integral
                            .clone()
                            .and(|| p.commutative.clone())
                            .and(|| p.associative.clone()),
                    ),
                ],
            ),
            Biconditional::new(
                "lukasiewicz_equivalents",
                "(Ł ∧ involutive) ⟺ (I3* ∧ involutive) ⟺ (DN ∧ divisibility ∧ C)",
                true,
                vec![
                    (
                        "Ł ∧ involutive",
                        p.lukasiewicz_identity.clone().and(|| p.involutive.clone()),
                    ),
                    (
                        "I3* ∧ involutive",
                        p.i3_star.clone().and(|| p.involutive.clone()),
                    ),
                    (
                        "DN ∧ divisibility ∧ C",
                        p.double_negation
                            .clone()
                            .and(|| p.divisibility.clone())
                            .and(|| p.condition_c.clone()),
                    ),
                ],
            ),
        ];
        BiconditionalReport { items }
    }

    /// Like [`Self::biconditionals`], but a disagreement is an error.
    pub fn check_biconditionals(&self) -> Result<BiconditionalReport, ResiduationError> {
        let report = self.biconditionals();
        if let Some(bad) = report
            .items
            .iter()
            .find(|b| b.agreement == Agreement::Disagree)
        {
            let witness = bad
                .sides
                .iter()
                .find_map(|(_, v)| v.witness())
                .unwrap_or(&[])
                .iter()
                .map(|&e| self.lattice.name(e).to_string())
                .collect();
            return Err(ResiduationError::BiconditionalViolation {
                statement: bad.statement,
                witness,
            });
        }
        Ok(report)
    }
}

/// `y → z := ⋁{x : x⊙y ≤ z}`, returned only if the pair is residuated.
pub fn derive_arrow_from_odot(
    l: &FiniteLattice,
    odot: &BinaryOp,
) -> Result<BinaryOp, ResiduationError> {
    check_shape(l, "⊙", odot)?;
    let arrow = BinaryOp::from_fn(l.size(), |y, z| {
        l.join_all(l.elements().filter(|&x| l.leq(odot.get(x, y), z)))
    });
    validate_pair(l, odot, arrow)
}

/// `x ⊙ y := ⋀{z : x ≤ y→z}`, returned only if the pair is residuated.
pub fn derive_odot_from_arrow(
    l: &FiniteLattice,
    arrow: &BinaryOp,
) -> Result<BinaryOp, ResiduationError> {
    check_shape(l, "→", arrow)?;
    let odot = BinaryOp::from_fn(l.size(), |x, y| {
        l.meet_all(l.elements().filter(|&z| l.leq(x, arrow.get(y, z))))
    });
    // Without a unit-respecting `⊙` there is no groupoid with this residual
    // at all, so a unit failure is reported as non-residuation as well.
    match validate_pair(l, &odot, arrow.clone()) {
        Ok(_) => Ok(odot),
        Err(ResiduationError::UnitFails { .. }) => {
            let x = unit_witness(l, &odot).expect("unit failure has a witness");
            Err(ResiduationError::NotResiduated {
                x: l.name(l.top()).to_string(),
                y: l.name(x).to_string(),
                z: l.name(odot.get(l.top(), x)).to_string(),
            })
        }
        Err(e) => Err(e),
    }
}

fn validate_pair(
    l: &FiniteLattice,
    odot: &BinaryOp,
    arrow: BinaryOp,
) -> Result<BinaryOp, ResiduationError> {
    if let Some(x) = unit_witness(l, odot) {
        return Err(ResiduationError::UnitFails {
            x: l.name(x).to_string(),
            got: l.name(odot.get(l.top(), x)).to_string(),
        });
    }
    if let Some([x, y, z]) = adjointness_witness(l, odot, &arrow) {
        return Err(ResiduationError::NotResiduated {
            x: l.name(x).to_string(),
            y: l.name(y).to_string(),
            z: l.name(z).to_string(),
        });
    }
    Ok(arrow)
}

/// Exhaustive truth values of the structural properties of one groupoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub integral: Verdict,
    pub commutative: Verdict,
    pub associative: Verdict,
    pub double_negation: Verdict,
    pub involutive: Verdict,
    pub condition_c: Verdict,
    pub divisibility: Verdict,
    pub negation_formula: Verdict,
    pub i0: Verdict,
    pub i1: Verdict,
    pub i2: Verdict,
    pub i3: Verdict,
    pub i3_star: Verdict,
    pub identity_d: Verdict,
    pub lukasiewicz_identity: Verdict,
    pub lukasiewicz_type: Verdict,
    pub basic_laws: [Verdict; 6],
}

impl PropertyReport {
    /// Flag name and verdict, in report order.
    pub fn flags(&self) -> Vec<(&'static str, &Verdict)> {
        vec![
            ("integral", &self.integral),
            ("commutative", &self.commutative),
            ("associative", &self.associative),
            ("double_negation", &self.double_negation),
            ("involutive", &self.involutive),
            ("condition_c", &self.condition_c),
            ("divisibility", &self.divisibility),
            ("negation_formula", &self.negation_formula),
            ("i0", &self.i0),
            ("i1", &self.i1),
            ("i2", &self.i2),
            ("i3", &self.i3),
            ("i3_star", &self.i3_star),
            ("identity_d", &self.identity_d),
            ("lukasiewicz_identity", &self.lukasiewicz_identity),
            ("lukasiewicz_type", &self.lukasiewicz_type),
        ]
    }

    pub fn render(&self, names: &[String]) -> RenderedReport {
        RenderedReport {
            flags: self
                .flags()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.render(names)))
                .collect(),
            basic_laws: self.basic_laws.iter().map(|v| v.render(names)).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RenderedReport {
    pub flags: indexmap::IndexMap<String, RenderedVerdict>,
    pub basic_laws: Vec<RenderedVerdict>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    Agree,
    Disagree,
    NotApplicable,
}

/// One biconditional: all sides must have the same truth value when the
/// guard holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biconditional {
    pub name: &'static str,
    pub statement: &'static str,
    pub guard: bool,
    pub sides: Vec<(&'static str, Verdict)>,
    pub agreement: Agreement,
}

impl Biconditional {
    fn new(
        name: &'static str,
        statement: &'static str,
        guard: bool,
        sides: Vec<(&'static str, Verdict)>,
    ) -> Self {
        let agreement = if !guard {
            Agreement::NotApplicable
        } else if sides.windows(2).all(|w| w[0].1.holds() == w[1].1.holds()) {
            Agreement::Agree
        } else {
            Agreement::Disagree
        };
        Self {
            name,
            statement,
            guard,
            sides,
            agreement,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiconditionalReport {
    pub items: Vec<Biconditional>,
}

impl BiconditionalReport {
    pub fn disagreements(&self) -> impl Iterator<Item = &Biconditional> {
        self.items
            .iter()
            .filter(|b| b.agreement == Agreement::Disagree)
    }

    pub fn get(&self, name: &str) -> Option<&Biconditional> {
        self.items.iter().find(|b| b.name == name)
    }

    pub fn render(&self, names: &[String]) -> Vec<RenderedBiconditional> {
        self.items
            .iter()
            .map(|b| RenderedBiconditional {
                name: b.name,
                statement: b.statement,
                agreement: b.agreement,
                sides: b
                    .sides
                    .iter()
                    .map(|(label, v)| (label.to_string(), v.render(names)))
                    .collect(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RenderedBiconditional {
    pub name: &'static str,
    pub statement: &'static str,
    pub agreement: Agreement,
    pub sides: indexmap::IndexMap<String, RenderedVerdict>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> FiniteLattice {
        FiniteLattice::chain(3)
    }

    fn lukasiewicz3() -> RrlGroupoid {
        // Indices 0 < 1 < 2 stand for 0 < 1/2 < 1.
        let odot = BinaryOp::from_fn(3, |x, y| (x + y).saturating_sub(2));
        let arrow = BinaryOp::from_fn(3, |x, y| (2 - x + y).min(2));
        RrlGroupoid::new(c3(), odot, arrow).unwrap()
    }

    fn godel3() -> RrlGroupoid {
        let arrow = BinaryOp::from_fn(3, |x, y| if x <= y { 2 } else { y });
        RrlGroupoid::from_arrow(c3(), arrow).unwrap()
    }

    #[test]
    fn boolean_two_chain_is_valid() {
        let l = FiniteLattice::chain(2);
        let odot = l.meet_table().clone();
        let arrow = BinaryOp::from_fn(2, |x, y| if x <= y { 1 } else { 0 });
        assert!(RrlGroupoid::new(l, odot, arrow).is_ok());
    }

    #[test]
    fn all_ones_arrow_fails_adjointness() {
        let l = c3();
        let odot = l.meet_table().clone();
        let arrow = BinaryOp::from_fn(3, |_, _| 2);
        let err = RrlGroupoid::new(l, odot, arrow).unwrap_err();
        assert_eq!(
            err,
            ResiduationError::AdjointnessFails {
                x: "1/2".into(),
                y: "1/2".into(),
                z: "0".into()
            }
        );
    }

    #[test]
    fn lukasiewicz_arrow_derived() {
        let g = lukasiewicz3();
        let arrow = derive_arrow_from_odot(g.lattice(), g.odot_table()).unwrap();
        assert_eq!(arrow.get(1, 0), 1);
        assert_eq!(&arrow, g.arrow_table());
    }

    #[test]
    fn non_residuated_odot_rejected() {
        // m⊙m = 1 cannot be residuated: m ≤ m→m would need m⊙m ≤ m.
        let odot = BinaryOp::from_fn(3, |x, y| match (x, y) {
            (2, y) => y,
            (1, 1) => 2,
            (1, 2) => 1,
            _ => 0,
        });
        let err = derive_arrow_from_odot(&c3(), &odot).unwrap_err();
        assert!(matches!(err, ResiduationError::NotResiduated { .. }));
    }

    #[test]
    fn godel_arrow_gives_meet() {
        let g = godel3();
        assert_eq!(g.odot_table(), g.lattice().meet_table());
    }

    #[test]
    fn arrow_with_one_to_zero_equal_one_rejected() {
        let l = FiniteLattice::chain(2);
        let arrow = BinaryOp::from_fn(2, |_, _| 1);
        assert!(matches!(
            derive_odot_from_arrow(&l, &arrow),
            Err(ResiduationError::NotResiduated { .. })
        ));
    }

    #[test]
    fn negations() {
        let l3 = lukasiewicz3();
        assert_eq!(l3.neg(1), 1);
        assert_eq!(l3.derived_implication(), l3.arrow_table());
        assert!((0..3).all(|x| l3.implies(x, x) == 2));

        let g = godel3();
        assert_eq!((g.neg(1), g.neg(0)), (0, 2));
        assert_eq!(g.implies(1, 0), 0);
        assert_eq!(g.arrow(1, 0), 0);
        assert_eq!(g.implies(0, 1), 2);
    }

    #[test]
    fn classify_lukasiewicz3() {
        let r = lukasiewicz3().classify();
        for v in [
            &r.integral,
            &r.commutative,
            &r.associative,
            &r.involutive,
            &r.condition_c,
            &r.divisibility,
            &r.lukasiewicz_type,
        ] {
            assert!(v.holds());
        }
        assert!(r.basic_laws.iter().all(Verdict::holds));
    }

    #[test]
    fn classify_godel3() {
        let r = godel3().classify();
        assert_eq!(r.involutive, Verdict::Fails(vec![1]));
        assert!(r.divisibility.holds());
        assert!(r.integral.holds());
        assert_eq!(r.basic_laws[5], Verdict::NotApplicable);
    }

    #[test]
    fn biconditionals_agree_on_chains() {
        let b = lukasiewicz3().check_biconditionals().unwrap();
        assert!(b.items.iter().all(|i| i.agreement == Agreement::Agree));
        let g = godel3().check_biconditionals().unwrap();
        let p1 = g.get("dn_c_negation").unwrap();
        assert_eq!(p1.agreement, Agreement::Agree);
        assert!(p1.sides.iter().all(|(_, v)| v.fails()));
    }
}

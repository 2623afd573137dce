//! Sectional mappings and their correspondence with residuated groupoids.
//!
//! A section family assigns to every `a` a map `x ↦ x^a` of the interval
//! `[a, 1]` into itself. The family is *extensive* when every map is antitone
//! with `x^{aa} ≥ x` and `1^a = a`, and *involutive* when additionally
//! `x^{aa} = x`.
//!
//! The two directions of the correspondence:
//!
//! * [`g_of_l`]: involution `~` plus extensive family ↦ groupoid with
//!   `x→y := (~x ∨ ~y)^{~x}` and `x⊙y := ~[(x ∨ ~y)^{~y}]`;
//! * [`l_of_g`]: involutive groupoid whose derived implication satisfies
//!   (I3) ↦ `~x := x→0` and `x^a := x⇒a`.
//!
//! For involutive families no separate `~` is needed: `~x := x^0`
//! ([`g_of_l_involutive`], [`l_of_g_involutive`]).

use serde::Serialize;
use thiserror::Error;

use crate::canon::{self, Canonical};
use crate::identities::{self, ImplicationChecks};
use crate::lattice::{FiniteLattice, Involution};
use crate::ops::{invert, BinaryOp, Elem};
use crate::residuation::{ResiduationError, RrlGroupoid};
use crate::verdict::{forall2, RenderedVerdict, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyMode {
    Extensive,
    Involutive,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SectionError {
    #[error("family has {got} sections, lattice has {expected} elements")]
    Shape { expected: usize, got: usize },
    #[error("section [{a}, 1] has no image for {x}")]
    MissingEntry { a: String, x: String },
    #[error("section [{a}, 1] assigns an image to {x}, which is outside it")]
    OutsideSection { a: String, x: String },
    #[error("{x}^{a} = {image} lies outside [{a}, 1]")]
    NotIntoSection { a: String, x: String, image: String },
    #[error("map on [{a}, 1] is not antitone: {x} ≤ {y} but {x}^{a} ≱ {y}^{a}")]
    NotAntitone { a: String, x: String, y: String },
    #[error("map on [{a}, 1] is not extensive at {x}")]
    NotExtensive { a: String, x: String },
    #[error("map on [{a}, 1] is not an involution at {x}")]
    NotInvolutive { a: String, x: String },
    #[error("1^{a} ≠ {a}")]
    UnitImageFails { a: String },
    #[error("implication fails ({name}) (witness: {})", witness.join(", "))]
    IdentityFails {
        name: &'static str,
        witness: Vec<String>,
    },
    #[error("precondition fails: {what} (witness: {})", witness.join(", "))]
    PreconditionFails {
        what: &'static str,
        witness: Vec<String>,
    },
    #[error("a separate involution ~ is required")]
    MissingInvolution,
    #[error("section [{a}, 1]: {x} has no pseudocomplement")]
    NotSectionallyPseudocomplemented { a: String, x: String },
    #[error(transparent)]
    Residuation(#[from] ResiduationError),
}

fn names_of(l: &FiniteLattice, w: &[Elem]) -> Vec<String> {
    w.iter().map(|&e| l.name(e).to_string()).collect()
}

/// A validated family of sectional maps `x ↦ x^a`, one per base `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SectionFamily {
    size: usize,
    /// Row-major `[a][x]`; `None` outside `[a, 1]`.
    maps: Vec<Option<Elem>>,
    mode: FamilyMode,
}

impl SectionFamily {
    /// Validates `maps[a][x]` (defined exactly on `x ∈ [a,1]`) in the given
    /// mode. Witnesses are reported for the least base, then least element.
    pub fn new(
        l: &FiniteLattice,
        maps: Vec<Vec<Option<Elem>>>,
        mode: FamilyMode,
    ) -> Result<Self, SectionError> {
        let n = l.size();
        if maps.len() != n || maps.iter().any(|m| m.len() != n) {
            return Err(SectionError::Shape {
                expected: n,
                got: maps.len(),
            });
        }
        let name = |e: Elem| l.name(e).to_string();
        for a in l.elements() {
            let m = &maps[a];
            for x in l.elements() {
                match (l.leq(a, x), m[x]) {
                    (true, None) => {
                        return Err(SectionError::MissingEntry {
                            a: name(a),
                            x: name(x),
                        })
                    }
                    (false, Some(_)) => {
                        return Err(SectionError::OutsideSection {
                            a: name(a),
                            x: name(x),
                        })
                    }
                    (true, Some(v)) if v >= n || !l.leq(a, v) => {
                        return Err(SectionError::NotIntoSection {
                            a: name(a),
                            x: name(x),
                            image: if v < n { name(v) } else { v.to_string() },
                        })
                    }
                    _ => {}
                }
            }
            let at = |x: Elem| m[x].expect("checked above");
            let section: Vec<Elem> = l.elements().filter(|&x| l.leq(a, x)).collect();
            for &x in &section {
                for &y in &section {
                    if l.leq(x, y) && !l.leq(at(y), at(x)) {
                        return Err(SectionError::NotAntitone {
                            a: name(a),
                            x: name(x),
                            y: name(y),
                        });
                    }
                }
            }
            for &x in &section {
                if !l.leq(x, at(at(x))) {
                    return Err(SectionError::NotExtensive {
                        a: name(a),
                        x: name(x),
                    });
                }
            }
            if at(l.top()) != a {
                return Err(SectionError::UnitImageFails { a: name(a) });
            }
            if mode == FamilyMode::Involutive {
                if let Some(&x) = section.iter().find(|&&x| at(at(x)) != x) {
                    return Err(SectionError::NotInvolutive {
                        a: name(a),
                        x: name(x),
                    });
                }
            }
        }
        Ok(Self {
            size: n,
            maps: maps.into_iter().flatten().collect(),
            mode,
        })
    }

    /// Builds the family `x^a := f(a, x)` for `x ∈ [a,1]` and validates it.
    pub fn from_fn(
        l: &FiniteLattice,
        mode: FamilyMode,
        mut f: impl FnMut(Elem, Elem) -> Elem,
    ) -> Result<Self, SectionError> {
        let maps = l
            .elements()
            .map(|a| l.elements().map(|x| l.leq(a, x).then(|| f(a, x))).collect())
            .collect();
        Self::new(l, maps, mode)
    }

    /// `x^a`. Panics if `x ∉ [a, 1]`.
    #[inline]
    pub fn apply(&self, a: Elem, x: Elem) -> Elem {
        self.maps[a * self.size + x].expect("element outside the section")
    }

    pub fn get(&self, a: Elem, x: Elem) -> Option<Elem> {
        self.maps[a * self.size + x]
    }

    pub fn mode(&self) -> FamilyMode {
        self.mode
    }

    /// Every map is an involution on its section.
    pub fn is_involutive(&self) -> bool {
        (0..self.size).all(|a| {
            (0..self.size).all(|x| match self.get(a, x) {
                Some(v) => self.apply(a, v) == x,
                None => true,
            })
        })
    }

    /// Same maps, tagged with the strongest mode they satisfy.
    pub fn strongest(mut self) -> Self {
        if self.is_involutive() {
            self.mode = FamilyMode::Involutive;
        }
        self
    }

    pub fn partial_table(&self) -> &[Option<Elem>] {
        &self.maps
    }

    pub fn relabel(&self, perm: &[Elem]) -> Self {
        let n = self.size;
        let inv = invert(perm);
        let mut maps = vec![None; n * n];
        for a in 0..n {
            for x in 0..n {
                maps[a * n + x] = self.get(perm[a], perm[x]).map(|v| inv[v]);
            }
        }
        Self {
            size: n,
            maps,
            mode: self.mode,
        }
    }

    pub fn rows(&self) -> Vec<Vec<Option<Elem>>> {
        self.maps.chunks(self.size).map(<[_]>::to_vec).collect()
    }
}

/// A bounded lattice with an optional global involution `~` and a family of
/// sectional maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SectionedLattice {
    pub lattice: FiniteLattice,
    pub tilde: Option<Involution>,
    pub family: SectionFamily,
}

impl SectionedLattice {
    pub fn new(lattice: FiniteLattice, tilde: Option<Involution>, family: SectionFamily) -> Self {
        Self {
            lattice,
            tilde,
            family,
        }
    }

    /// `x ⇒ y := (x∨y)^y`.
    pub fn implication(&self) -> BinaryOp {
        implication_from_family(&self.lattice, &self.family)
    }

    pub fn canonical(&self) -> Canonical {
        let tilde: Vec<&[Elem]> = self.tilde.iter().map(|t| t.map()).collect();
        canon::canonicalize(&canon::Structure {
            size: self.lattice.size(),
            bottom: self.lattice.bottom(),
            top: self.lattice.top(),
            order: self.lattice.order_matrix(),
            binary: Vec::new(),
            unary: tilde,
            partial: vec![self.family.partial_table()],
        })
    }

    pub fn relabel(&self, perm: &[Elem]) -> Self {
        Self {
            lattice: self.lattice.relabel(perm),
            tilde: self.tilde.as_ref().map(|t| t.relabel(perm)),
            family: self.family.relabel(perm),
        }
    }
}

/// `x ⇒ y := (x ∨ y)^y`.
pub fn implication_from_family(l: &FiniteLattice, f: &SectionFamily) -> BinaryOp {
    BinaryOp::from_fn(l.size(), |x, y| f.apply(y, l.join(x, y)))
}

/// Reads `x^a := x ⇒ a` off an implication satisfying (I0)–(I3).
pub fn family_from_implication(
    l: &FiniteLattice,
    imp: &BinaryOp,
) -> Result<SectionFamily, SectionError> {
    let checks = ImplicationChecks::new(l, imp);
    if let Some((name, v)) = checks.first_failure() {
        return Err(SectionError::IdentityFails {
            name,
            witness: names_of(l, v.witness().unwrap_or(&[])),
        });
    }
    let family = SectionFamily::from_fn(l, FamilyMode::Extensive, |a, x| imp.get(x, a))?;
    Ok(family.strongest())
}

fn groupoid_from_tilde(
    l: &FiniteLattice,
    tilde: impl Fn(Elem) -> Elem,
    f: &SectionFamily,
) -> Result<RrlGroupoid, SectionError> {
    let n = l.size();
    let arrow = BinaryOp::from_fn(n, |x, y| f.apply(tilde(x), l.join(tilde(x), tilde(y))));
    let odot = BinaryOp::from_fn(n, |x, y| tilde(f.apply(tilde(y), l.join(x, tilde(y)))));
    Ok(RrlGroupoid::new(l.clone(), odot, arrow)?)
}

/// Lattice with involution and extensive family ↦ involutive groupoid.
pub fn g_of_l(s: &SectionedLattice) -> Result<RrlGroupoid, SectionError> {
    let tilde = s.tilde.as_ref().ok_or(SectionError::MissingInvolution)?;
    groupoid_from_tilde(&s.lattice, |x| tilde.apply(x), &s.family)
}

/// Lattice with sectional involutions ↦ integral involutive groupoid, using
/// `~x := x^0`.
pub fn g_of_l_involutive(
    l: &FiniteLattice,
    f: &SectionFamily,
) -> Result<RrlGroupoid, SectionError> {
    require_involutive(l, f)?;
    let bottom = l.bottom();
    groupoid_from_tilde(l, |x| f.apply(bottom, x), f)
}

pub(crate) fn require_involutive(l: &FiniteLattice, f: &SectionFamily) -> Result<(), SectionError> {
    for a in l.elements() {
        for x in l.elements().filter(|&x| l.leq(a, x)) {
            if f.apply(a, f.apply(a, x)) != x {
                return Err(SectionError::NotInvolutive {
                    a: l.name(a).to_string(),
                    x: l.name(x).to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Involutive groupoid with (I3) ↦ lattice with `~x := x→0` and `x^a := x⇒a`.
pub fn l_of_g(g: &RrlGroupoid) -> Result<SectionedLattice, SectionError> {
    let l = g.lattice();
    let involutive = g.involutive();
    if let Some(w) = involutive.witness() {
        return Err(SectionError::PreconditionFails {
            what: "groupoid is not involutive",
            witness: names_of(l, w),
        });
    }
    let i3 = identities::i3(l, g.derived_implication());
    if let Some(w) = i3.witness() {
        return Err(SectionError::PreconditionFails {
            what: "derived implication violates (I3)",
            witness: names_of(l, w),
        });
    }
    let tilde = Involution::new(l, g.neg_table().to_vec()).expect("involutive groupoid");
    let family =
        SectionFamily::from_fn(l, FamilyMode::Extensive, |a, x| g.implies(x, a))?.strongest();
    Ok(SectionedLattice::new(l.clone(), Some(tilde), family))
}

/// Integral involutive groupoid with (I3*) ↦ lattice with sectional
/// involutions `x^a := x⇒a` (no separate `~`).
pub fn l_of_g_involutive(g: &RrlGroupoid) -> Result<SectionedLattice, SectionError> {
    let l = g.lattice();
    for (what, v) in [
        ("groupoid is not integral", g.integral()),
        ("groupoid is not involutive", g.involutive()),
        (
            "derived implication violates (I3*)",
            identities::i3_star(l, g.derived_implication()),
        ),
    ] {
        if let Some(w) = v.witness() {
            return Err(SectionError::PreconditionFails {
                what,
                witness: names_of(l, w),
            });
        }
    }
    let family = SectionFamily::from_fn(l, FamilyMode::Involutive, |a, x| g.implies(x, a))?;
    Ok(SectionedLattice::new(l.clone(), None, family))
}

/// Pseudocomplement of `x` in `[a, 1]`: the greatest `y ≥ a` with `y ∧ x = a`.
pub fn sectional_pseudocomplement(l: &FiniteLattice, a: Elem, x: Elem) -> Option<Elem> {
    let candidates: Vec<Elem> = l
        .elements()
        .filter(|&y| l.leq(a, y) && l.meet(y, x) == a)
        .collect();
    candidates
        .iter()
        .copied()
        .find(|&m| candidates.iter().all(|&y| l.leq(y, m)))
}

/// The family of sectional pseudocomplements, if every section is
/// pseudocomplemented.
pub fn sectional_pseudocomplement_family(l: &FiniteLattice) -> Result<SectionFamily, SectionError> {
    let mut maps = vec![vec![None; l.size()]; l.size()];
    for a in l.elements() {
        for x in l.elements().filter(|&x| l.leq(a, x)) {
            match sectional_pseudocomplement(l, a, x) {
                Some(p) => maps[a][x] = Some(p),
                None => {
                    return Err(SectionError::NotSectionallyPseudocomplemented {
                        a: l.name(a).to_string(),
                        x: l.name(x).to_string(),
                    })
                }
            }
        }
    }
    Ok(SectionFamily::new(l, maps, FamilyMode::Extensive)?.strongest())
}

/// Identities (P1)–(P4) of an implication, plus the `x ∧ z` variant of (P4).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudocomplementIdentities {
    pub p1: Verdict,
    pub p2: Verdict,
    pub p3: Verdict,
    pub p4: Verdict,
    pub p4_meet: Verdict,
}

impl PseudocomplementIdentities {
    pub fn render(&self, names: &[String]) -> indexmap::IndexMap<&'static str, RenderedVerdict> {
        [
            ("p1", &self.p1),
            ("p2", &self.p2),
            ("p3", &self.p3),
            ("p4", &self.p4),
            ("p4_meet", &self.p4_meet),
        ]
        .into_iter()
        .map(|(k, v)| (k, v.render(names)))
        .collect()
    }
}

pub fn check_p1_p4(l: &FiniteLattice, imp: &BinaryOp) -> PseudocomplementIdentities {
    PseudocomplementIdentities {
        p1: identities::p1(l, imp),
        p2: identities::p2(l, imp),
        p3: identities::p3(l, imp),
        p4: identities::p4(l, imp),
        p4_meet: identities::p4_meet(l, imp),
    }
}

/// Both sides of the pseudocomplement characterization of an involutive
/// groupoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudocomplementCharacterization {
    /// `None` when the groupoid is not involutive.
    pub applicable: bool,
    /// The derived implication satisfies (P3) and (P4).
    pub identities: Verdict,
    /// The lattice is sectionally pseudocomplemented and `x⇒y` is the
    /// pseudocomplement of `x` in `[y,1]` whenever `x ≥ y`.
    pub pseudocomplemented: Verdict,
}

impl PseudocomplementCharacterization {
    pub fn agrees(&self) -> bool {
        !self.applicable || self.identities.holds() == self.pseudocomplemented.holds()
    }
}

pub fn check_pseudocomplement_characterization(
    g: &RrlGroupoid,
) -> PseudocomplementCharacterization {
    let l = g.lattice();
    let imp = g.derived_implication();
    let applicable = g.involutive().holds();
    let identities = Verdict::guarded(applicable, || {
        identities::p3(l, imp).and(|| identities::p4(l, imp))
    });
    let pseudocomplemented = Verdict::guarded(applicable, || {
        forall2(l.size(), |x, y| {
            !l.leq(y, x) || sectional_pseudocomplement(l, y, x) == Some(imp.get(x, y))
        })
    });
    PseudocomplementCharacterization {
        applicable,
        identities,
        pseudocomplemented,
    }
}

/// For the groupoid built from `~` and the sectional pseudocomplements:
/// `(integral, boolean lattice)`. The two agree on every input.
pub fn check_boolean_integral(
    l: &FiniteLattice,
    tilde: &Involution,
) -> Result<(bool, bool), SectionError> {
    let family = sectional_pseudocomplement_family(l)?;
    let g = g_of_l(&SectionedLattice::new(
        l.clone(),
        Some(tilde.clone()),
        family,
    ))?;
    Ok((g.integral().holds(), l.is_boolean()))
}

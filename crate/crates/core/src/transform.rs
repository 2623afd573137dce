//! Conversions between structure kinds, and round trips through them.
//!
//! The conversion graph:
//!
//! ```text
//! lattice ──▶ sectioned-lattice ◀──▶ rrl-groupoid ◀──▶ basic-algebra ◀──▶ implication-reduct
//!    └──────────────────────────────▶     ▲      ◀──▶ sectioned-lattice
//! kleene ──▶ nelson ──────────────────────┘
//! ```
//!
//! `transform` follows a shortest path; ties go to the edge listed first.

use std::collections::VecDeque;

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::basic::{self, BasicError};
use crate::format::{FileKind, Provenance, Structure};
use crate::logics::{self, LogicError};
use crate::residuation::ResiduationError;
use crate::sections::{self, SectionError, SectionedLattice};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("no conversion from {from} to {to}")]
    UnreachableTarget { from: FileKind, to: FileKind },
    #[error("no round trip is defined for {0}")]
    NoRoundTrip(FileKind),
    #[error("{0} requires a separate involution `neg`")]
    MissingNeg(FileKind),
    #[error(transparent)]
    Section(#[from] SectionError),
    #[error(transparent)]
    Basic(#[from] BasicError),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Residuation(#[from] ResiduationError),
}

use FileKind::*;

/// Every single-step conversion with the construction it applies.
pub const EDGES: &[(FileKind, FileKind, &str)] = &[
    (Lattice, RrlGroupoid, "x→y = (x∧y)∨~x, x⊙y = (x∨~y)∧y"),
    (
        Lattice,
        SectionedLattice,
        "x^a = pseudocomplement of x in [a,1]",
    ),
    (
        SectionedLattice,
        RrlGroupoid,
        "x→y = (~x∨~y)^{~x}, x⊙y = ~[(x∨~y)^{~y}]",
    ),
    (SectionedLattice, BasicAlgebra, "x⊕y = (x^0∨y)^y, ⌉x = x^0"),
    (RrlGroupoid, BasicAlgebra, "x⊕y = ⌉(⌉x⊙⌉y)"),
    (RrlGroupoid, SectionedLattice, "~x = x→0, x^a = x⇒a"),
    (BasicAlgebra, RrlGroupoid, "x⊙y = ⌉(⌉x⊕⌉y), x→y = y⊕⌉x"),
    (BasicAlgebra, SectionedLattice, "x^a = ⌉x⊕a"),
    (BasicAlgebra, ImplicationReduct, "x⇒y = ⌉x⊕y"),
    (ImplicationReduct, BasicAlgebra, "⌉x = x⇒0, x⊕y = ⌉x⇒y"),
    (Kleene, Nelson, "x→y = x▷(~x∨y)"),
    (
        Nelson,
        RrlGroupoid,
        "x⇒y = (x→y)∧(~y→~x), x∗y = ~(x→~y)∨~(y→~x)",
    ),
];

/// Shortest chain of conversions from `from` to `to`.
pub fn path(from: FileKind, to: FileKind) -> Option<Vec<(FileKind, FileKind, &'static str)>> {
    let mut prev: std::collections::HashMap<FileKind, (FileKind, FileKind, &'static str)> =
        Default::default();
    let mut queue = VecDeque::from([from]);
    let mut seen = vec![from];
    while let Some(k) = queue.pop_front() {
        if k == to {
            let mut out = Vec::new();
            let mut cur = to;
            while cur != from {
                let e = prev[&cur];
                out.push(e);
                cur = e.0;
            }
            out.reverse();
            return Some(out);
        }
        for &e in EDGES.iter().filter(|e| e.0 == k) {
            if !seen.contains(&e.1) {
                seen.push(e.1);
                prev.insert(e.1, e);
                queue.push_back(e.1);
            }
        }
    }
    None
}

/// Applies one edge of the conversion graph.
pub fn step(s: &Structure, to: FileKind) -> Result<Structure, TransformError> {
    let from = s.kind();
    Ok(match (s, to) {
        (Structure::Lattice(l, tilde), RrlGroupoid) => {
            let t = tilde.as_ref().ok_or(TransformError::MissingNeg(from))?;
            Structure::Groupoid(logics::oml_to_groupoid(l, t.map())?)
        }
        (Structure::Lattice(l, tilde), SectionedLattice) => {
            let family = sections::sectional_pseudocomplement_family(l)?;
            Structure::Sectioned(SectionedLattice::new(l.clone(), tilde.clone(), family))
        }
        (Structure::Sectioned(sl), RrlGroupoid) => Structure::Groupoid(match sl.tilde {
            Some(_) => sections::g_of_l(sl)?,
            None => sections::g_of_l_involutive(&sl.lattice, &sl.family)?,
        }),
        (Structure::Sectioned(sl), BasicAlgebra) => {
            Structure::Basic(basic::a_of_l(&sl.lattice, &sl.family)?)
        }
        (Structure::Groupoid(g), BasicAlgebra) => Structure::Basic(basic::a_of_g(g)?),
        (Structure::Groupoid(g), SectionedLattice) => Structure::Sectioned(sections::l_of_g(g)?),
        (Structure::Basic(a), RrlGroupoid) => Structure::Groupoid(basic::g_of_a(a)?),
        (Structure::Basic(a), SectionedLattice) => Structure::Sectioned(basic::l_of_a(a)?),
        (Structure::Basic(a), ImplicationReduct) => Structure::Reduct(basic::implication_reduct(a)),
        (Structure::Reduct(r), BasicAlgebra) => Structure::Basic(basic::b_of_reduct(r)?),
        (Structure::Kleene(k), Nelson) => Structure::Nelson(logics::build_nelson(k.clone())?),
        (Structure::Nelson(n), RrlGroupoid) => {
            Structure::Groupoid(logics::nelson_to_residuated(n)?)
        }
        _ => return Err(TransformError::UnreachableTarget { from, to }),
    })
}

/// SHA-256 of the structure's file encoding, in hex.
pub fn fingerprint(s: &Structure) -> String {
    Sha256::digest(s.to_json().as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Converts along the shortest path, recording the constructions used.
pub fn transform(s: &Structure, to: FileKind) -> Result<(Structure, Provenance), TransformError> {
    let from = s.kind();
    let route = path(from, to).ok_or(TransformError::UnreachableTarget { from, to })?;
    let mut cur = s.clone();
    let mut steps = Vec::new();
    for (a, b, how) in route {
        cur = step(&cur, b)?;
        steps.push(format!("{a} -> {b}: {how}"));
    }
    Ok((
        cur,
        Provenance {
            source_kind: from.to_string(),
            source_sha256: fingerprint(s),
            steps,
        },
    ))
}

/// Outcome of one round trip.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTrip {
    pub route: String,
    pub exact: bool,
}

fn trip(
    s: &Structure,
    route: &str,
    there: impl FnOnce(&Structure) -> Result<Structure, TransformError>,
    back: impl FnOnce(&Structure) -> Result<Structure, TransformError>,
) -> Result<RoundTrip, TransformError> {
    let out = back(&there(s)?)?;
    Ok(RoundTrip {
        route: route.to_string(),
        exact: &out == s && out.to_json() == s.to_json(),
    })
}

/// Every round trip that applies to `s`. A failed precondition on the
/// outbound leg is an error; a mismatch on return is reported as inexact.
pub fn roundtrip(s: &Structure) -> Result<Vec<RoundTrip>, TransformError> {
    use Structure as S;
    let mut out = Vec::new();
    match s {
        S::Sectioned(sl) if sl.tilde.is_some() => out.push(trip(
            s,
            "sectioned-lattice -> rrl-groupoid -> sectioned-lattice",
            |s| step(s, RrlGroupoid),
            |g| step(g, SectionedLattice),
        )?),
        S::Sectioned(_) => {
            let inv = |g: &Structure| match g {
                S::Groupoid(g) => Ok(S::Sectioned(sections::l_of_g_involutive(g)?)),
                _ => unreachable!(),
            };
            out.push(trip(
                s,
                "sectioned-lattice -> rrl-groupoid -> sectioned-lattice (sectional involutions)",
                |s| step(s, RrlGroupoid),
                inv,
            )?);
            out.push(trip(
                s,
                "sectioned-lattice -> basic-algebra -> sectioned-lattice",
                |s| step(s, BasicAlgebra),
                |a| step(a, SectionedLattice),
            )?);
        }
        S::Groupoid(g) => {
            out.push(trip(
                s,
                "rrl-groupoid -> sectioned-lattice -> rrl-groupoid",
                |s| step(s, SectionedLattice),
                |l| step(l, RrlGroupoid),
            )?);
            if g.lukasiewicz_type().holds() {
                out.push(trip(
                    s,
                    "rrl-groupoid -> sectioned-lattice -> rrl-groupoid (sectional involutions)",
                    |_| Ok(S::Sectioned(sections::l_of_g_involutive(g)?)),
                    |l| step(l, RrlGroupoid),
                )?);
                out.push(trip(
                    s,
                    "rrl-groupoid -> basic-algebra -> rrl-groupoid",
                    |s| step(s, BasicAlgebra),
                    |a| step(a, RrlGroupoid),
                )?);
            }
        }
        S::Basic(_) => {
            for (mid, route) in [
                (
                    SectionedLattice,
                    "basic-algebra -> sectioned-lattice -> basic-algebra",
                ),
                (
                    RrlGroupoid,
                    "basic-algebra -> rrl-groupoid -> basic-algebra",
                ),
                (
                    ImplicationReduct,
                    "basic-algebra -> implication-reduct -> basic-algebra",
                ),
            ] {
                out.push(trip(s, route, |s| step(s, mid), |m| step(m, BasicAlgebra))?);
            }
        }
        S::Reduct(_) => out.push(trip(
            s,
            "implication-reduct -> basic-algebra -> implication-reduct",
            |s| step(s, BasicAlgebra),
            |a| step(a, ImplicationReduct),
        )?),
        _ => return Err(TransformError::NoRoundTrip(s.kind())),
    }
    Ok(out)
}

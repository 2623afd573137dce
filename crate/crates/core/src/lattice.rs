//! Finite bounded lattices, antitone involutions and sections.
//!
//! A [`FiniteLattice`] is built from any generating relation (typically the
//! Hasse diagram); the reflexive-transitive closure is taken, antisymmetry is
//! verified and the join/meet tables are computed once. Every other structure
//! in the crate sits on top of one.

use std::collections::HashMap;
use std::ops::Range;

use thiserror::Error;

use crate::canon::{self, Canonical};
use crate::ops::{invert, relabel_unary, BinaryOp, Elem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("carrier is empty")]
    Empty,
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order has a cycle: `{0}` ≤ `{1}` ≤ `{0}`")]
    CycleError(String, String),
    #[error("relation is not a partial order at `{0}`, `{1}`")]
    NotPartialOrder(String, String),
    #[error("no global {0}")]
    NoBounds(&'static str),
    #[error("`{x}` and `{y}` have no unique {missing}")]
    NotALattice {
        x: String,
        y: String,
        missing: &'static str,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("map has {got} entries, expected {expected}")]
    WrongSize { expected: usize, got: usize },
    #[error("map sends `{0}` outside the carrier")]
    OutOfRange(String),
    #[error("not involutive: `{x}` ↦ `{image}` ↦ `{back}`")]
    NotInvolutive {
        x: String,
        image: String,
        back: String,
    },
    #[error("not antitone: `{x}` ≤ `{y}` but ~`{y}` ≰ ~`{x}`")]
    NotAntitone { x: String, y: String },
}

/// A finite lattice with least and greatest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteLattice {
    names: Vec<String>,
    leq: Vec<bool>,
    join: BinaryOp,
    meet: BinaryOp,
    bottom: Elem,
    top: Elem,
}

impl FiniteLattice {
    /// Builds a lattice from element names and a generating order relation.
    ///
    /// ```
    /// use resilat::lattice::FiniteLattice;
    /// let n5 = FiniteLattice::build(
    ///     ["0", "a", "b", "c", "1"],
    ///     &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
    /// ).unwrap();
    /// assert!(!n5.is_distributive());
    /// ```
    pub fn build<N, S>(names: N, order_pairs: &[(S, S)]) -> Result<Self, LatticeError>
    where
        N: IntoIterator,
        N::Item: Into<String>,
        S: AsRef<str>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(LatticeError::DuplicateName(name.clone()));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| LatticeError::UnknownElement(s.to_string()))
        };
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in order_pairs {
            let (a, b) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if leq[x * n + y] && leq[y * n + x] {
                    return Err(LatticeError::CycleError(names[x].clone(), names[y].clone()));
                }
            }
        }
        Self::from_closed_order(names, leq)
    }

    /// Builds a lattice from a complete `leq` matrix, checking that it is a
    /// partial order first.
    pub fn from_order(names: Vec<String>, leq: Vec<bool>) -> Result<Self, LatticeError> {
        let n = names.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        assert_eq!(leq.len(), n * n, "order matrix has the wrong shape");
        let at = |x: usize, y: usize| leq[x * n + y];
        for x in 0..n {
            if !at(x, x) {
                return Err(LatticeError::NotPartialOrder(
                    names[x].clone(),
                    names[x].clone(),
                ));
            }
            for y in 0..n {
                if x != y && at(x, y) && at(y, x) {
                    return Err(LatticeError::NotPartialOrder(
                        names[x].clone(),
                        names[y].clone(),
                    ));
                }
                for z in 0..n {
                    if at(x, y) && at(y, z) && !at(x, z) {
                        return Err(LatticeError::NotPartialOrder(
                            names[x].clone(),
                            names[z].clone(),
                        ));
                    }
                }
            }
        }
        Self::from_closed_order(names, leq)
    }

    fn from_closed_order(names: Vec<String>, leq: Vec<bool>) -> Result<Self, LatticeError> {
        let n = names.len();
        let at = |x: usize, y: usize| leq[x * n + y];
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| at(b, x)))
            .ok_or(LatticeError::NoBounds("minimum"))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| at(x, t)))
            .ok_or(LatticeError::NoBounds("maximum"))?;

        let mut join = BinaryOp::from_fn(n, |_, _| 0);
        let mut meet = BinaryOp::from_fn(n, |_, _| 0);
        for x in 0..n {
            for y in 0..n {
                let upper: Vec<Elem> = (0..n).filter(|&u| at(x, u) && at(y, u)).collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&u| upper.iter().all(|&v| at(u, v)))
                    .ok_or_else(|| LatticeError::NotALattice {
                        x: names[x].clone(),
                        y: names[y].clone(),
                        missing: "join",
                    })?;
                let lower: Vec<Elem> = (0..n).filter(|&l| at(l, x) && at(l, y)).collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&l| lower.iter().all(|&v| at(v, l)))
                    .ok_or_else(|| LatticeError::NotALattice {
                        x: names[x].clone(),
                        y: names[y].clone(),
                        missing: "meet",
                    })?;
                join.set(x, y, lub);
                meet.set(x, y, glb);
            }
        }
        Ok(Self {
            names,
            leq,
            join,
            meet,
            bottom,
            top,
        })
    }

    /// The `n`-element chain, elements named `k/(n-1)` in lowest terms.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1, "a chain needs at least one element");
        let names = chain_names(n);
        let pairs: Vec<(String, String)> = names
            .windows(2)
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect();
        Self::build(names, &pairs).expect("chains are lattices")
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> Range<Elem> {
        0..self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn index(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.size() + y]
    }

    #[inline]
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join.get(x, y)
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet.get(x, y)
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn order_matrix(&self) -> &[bool] {
        &self.leq
    }

    pub fn join_table(&self) -> &BinaryOp {
        &self.join
    }

    pub fn meet_table(&self) -> &BinaryOp {
        &self.meet
    }

    /// Join of a set; the empty join is the bottom.
    pub fn join_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a set; the empty meet is the top.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Covering pairs `(x, y)` with `x ⋖ y`, in index order.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.elements() {
                if self.lt(x, y) && !self.elements().any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// `true` iff `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples.
    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    pub fn distributivity_witness(&self) -> Option<(Elem, Elem, Elem)> {
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Distributive and every element has a complement.
    pub fn is_boolean(&self) -> bool {
        self.is_distributive()
            && self.elements().all(|x| {
                self.elements()
                    .any(|y| self.join(x, y) == self.top && self.meet(x, y) == self.bottom)
            })
    }

    pub fn in_section(&self, base: Elem, x: Elem) -> bool {
        self.leq(base, x)
    }

    /// The interval `[base, 1]`.
    pub fn section(&self, base: Elem) -> Section {
        Section {
            base,
            members: self.elements().filter(|&x| self.leq(base, x)).collect(),
        }
    }

    /// An order isomorphism `self → other`, if one exists.
    pub fn isomorphism_to(&self, other: &FiniteLattice) -> Option<Vec<Elem>> {
        are_isomorphic(self, other)
    }

    pub fn canonical(&self) -> Canonical {
        canon::canonicalize(&canon::Structure {
            size: self.size(),
            bottom: self.bottom,
            top: self.top,
            order: &self.leq,
            binary: Vec::new(),
            unary: Vec::new(),
            partial: Vec::new(),
        })
    }

    /// Representation shared by exactly the lattices isomorphic to this one.
    pub fn canonical_form(&self) -> Vec<u8> {
        self.canonical().code
    }

    /// Renumbers elements so that new element `i` is old element `perm[i]`.
    pub fn relabel(&self, perm: &[Elem]) -> Self {
        let n = self.size();
        let inv = invert(perm);
        let names = perm.iter().map(|&old| self.names[old].clone()).collect();
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = self.leq(perm[x], perm[y]);
            }
        }
        Self {
            names,
            leq,
            join: self.join.relabel(perm),
            meet: self.meet.relabel(perm),
            bottom: inv[self.bottom],
            top: inv[self.top],
        }
    }

    /// Same lattice with different element names.
    pub fn with_names(&self, names: Vec<String>) -> Result<Self, LatticeError> {
        assert_eq!(names.len(), self.size());
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n) {
                return Err(LatticeError::DuplicateName(n.clone()));
            }
        }
        Ok(Self {
            names,
            ..self.clone()
        })
    }
}

/// `k/(n-1)` in lowest terms, for `k = 0..n`.
pub fn chain_names(n: usize) -> Vec<String> {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (0..n)
        .map(|k| {
            let d = n.saturating_sub(1).max(1);
            if k == 0 {
                "0".to_string()
            } else if k == d {
                "1".to_string()
            } else {
                let g = gcd(k, d);
                format!("{}/{}", k / g, d / g)
            }
        })
        .collect()
}

/// Searches for an order isomorphism `l1 → l2` by backtracking.
pub fn are_isomorphic(l1: &FiniteLattice, l2: &FiniteLattice) -> Option<Vec<Elem>> {
    let n = l1.size();
    if n != l2.size() {
        return None;
    }
    let degree = |l: &FiniteLattice, x: Elem| {
        (
            l.elements().filter(|&y| l.leq(y, x)).count(),
            l.elements().filter(|&y| l.leq(x, y)).count(),
        )
    };
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        l1: &FiniteLattice,
        l2: &FiniteLattice,
        x: Elem,
        map: &mut Vec<Elem>,
        used: &mut Vec<bool>,
        degree: &dyn Fn(&FiniteLattice, Elem) -> (usize, usize),
    ) -> bool {
        let n = l1.size();
        if x == n {
            return true;
        }
        for y in 0..n {
            if used[y] || degree(l1, x) != degree(l2, y) {
                continue;
            }
            let consistent = (0..x)
                .all(|p| l1.leq(p, x) == l2.leq(map[p], y) && l1.leq(x, p) == l2.leq(y, map[p]));
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if extend(l1, l2, x + 1, map, used, degree) {
                return true;
            }
            used[y] = false;
        }
        false
    }
    extend(l1, l2, 0, &mut map, &mut used, &degree).then_some(map)
}

/// An interval `[base, 1]` of a host lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub base: Elem,
    /// Sorted by index.
    pub members: Vec<Elem>,
}

impl Section {
    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// A validated antitone involution `x ↦ ~x` on a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Involution {
    map: Vec<Elem>,
}

impl Involution {
    pub fn new(lattice: &FiniteLattice, map: Vec<Elem>) -> Result<Self, InvolutionError> {
        let n = lattice.size();
        if map.len() != n {
            return Err(InvolutionError::WrongSize {
                expected: n,
                got: map.len(),
            });
        }
        if let Some(x) = (0..n).find(|&x| map[x] >= n) {
            return Err(InvolutionError::OutOfRange(lattice.name(x).to_string()));
        }
        for x in 0..n {
            if map[map[x]] != x {
                return Err(InvolutionError::NotInvolutive {
                    x: lattice.name(x).to_string(),
                    image: lattice.name(map[x]).to_string(),
                    back: lattice.name(map[map[x]]).to_string(),
                });
            }
        }
        for x in 0..n {
            for y in 0..n {
                if lattice.leq(x, y) && !lattice.leq(map[y], map[x]) {
                    return Err(InvolutionError::NotAntitone {
                        x: lattice.name(x).to_string(),
                        y: lattice.name(y).to_string(),
                    });
                }
            }
        }
        Ok(Self { map })
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn relabel(&self, perm: &[Elem]) -> Self {
        Self {
            map: relabel_unary(&self.map, perm),
        }
    }

    /// `x ∧ ~x = 0` for every `x`.
    pub fn is_orthocomplement(&self, lattice: &FiniteLattice) -> bool {
        lattice
            .elements()
            .all(|x| lattice.meet(x, self.apply(x)) == lattice.bottom())
    }
}

/// Validates a candidate involution map against a lattice.
pub fn validate_involution(
    lattice: &FiniteLattice,
    map: Vec<Elem>,
) -> Result<Involution, InvolutionError> {
    Involution::new(lattice, map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n5() -> FiniteLattice {
        FiniteLattice::build(
            ["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
        )
        .unwrap()
    }

    #[test]
    fn two_chain_tables() {
        let c2 = FiniteLattice::build(["0", "1"], &[("0", "1")]).unwrap();
        assert_eq!(c2.join_table().cells(), &[0, 1, 1, 1]);
        assert_eq!(c2.meet_table().cells(), &[0, 0, 0, 1]);
        assert_eq!((c2.bottom(), c2.top()), (0, 1));
    }

    #[test]
    fn n5_is_not_distributive() {
        let l = n5();
        assert!(!l.is_distributive());
        let b = l.index("b").unwrap();
        let sec = l.section(b);
        let names: Vec<&str> = sec.members.iter().map(|&x| l.name(x)).collect();
        assert_eq!(names, ["b", "1"]);
    }

    #[test]
    fn missing_top_is_no_bounds() {
        let err = FiniteLattice::build(["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("0", "1")])
            .unwrap_err();
        assert_eq!(err, LatticeError::NoBounds("maximum"));
    }

    #[test]
    fn cycle_detected() {
        let err = FiniteLattice::build(["0", "a", "1"], &[("0", "a"), ("a", "0"), ("a", "1")])
            .unwrap_err();
        assert!(matches!(err, LatticeError::CycleError(..)));
    }

    #[test]
    fn bowtie_is_not_a_lattice() {
        let err = FiniteLattice::build(
            ["0", "a", "b", "c", "d", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "1"),
                ("d", "1"),
            ],
        )
        .unwrap_err();
        assert!(matches!(
            err,
            LatticeError::NotALattice {
                missing: "join",
                ..
            }
        ));
    }

    #[test]
    fn n5_involution_checks() {
        let l = n5();
        let idx = |s| l.index(s).unwrap();
        let mut map = vec![0; 5];
        map[idx("0")] = idx("1");
        map[idx("1")] = idx("0");
        map[idx("a")] = idx("c");
        map[idx("c")] = idx("a");
        map[idx("b")] = idx("b");
        assert!(Involution::new(&l, map.clone()).is_ok());
        map[idx("a")] = idx("a");
        map[idx("b")] = idx("c");
        map[idx("c")] = idx("b");
        assert!(matches!(
            Involution::new(&l, map),
            Err(InvolutionError::NotAntitone { .. })
        ));
    }

    #[test]
    fn identity_on_three_chain_is_not_antitone() {
        let l = FiniteLattice::chain(3);
        let err = Involution::new(&l, vec![0, 1, 2]).unwrap_err();
        assert!(matches!(err, InvolutionError::NotAntitone { .. }));
        assert!(Involution::new(&l, vec![2, 1, 0]).is_ok());
    }

    #[test]
    fn two_chain_isomorphism_is_identity() {
        let c = FiniteLattice::chain(2);
        assert_eq!(are_isomorphic(&c, &c), Some(vec![0, 1]));
    }

    #[test]
    fn section_at_bottom_is_everything() {
        let l = n5();
        assert_eq!(
            l.section(l.bottom()).members,
            l.elements().collect::<Vec<_>>()
        );
    }

    #[test]
    fn chain_naming() {
        assert_eq!(chain_names(3), ["0", "1/2", "1"]);
        assert_eq!(chain_names(5), ["0", "1/4", "1/2", "3/4", "1"]);
    }
}

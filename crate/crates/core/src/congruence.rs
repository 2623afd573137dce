//! Congruence lattices of finite algebras and the regularity suite.
//!
//! Congruences are computed for the full set of basic operations of a
//! structure, lattice operations included.

use rayon::prelude::*;
use serde::Serialize;

use crate::basic::{BasicAlgebra, ImplicationReduct};
use crate::lattice::FiniteLattice;
use crate::ops::{BinaryOp, Elem};
use crate::residuation::RrlGroupoid;
use crate::verdict::{forall2, forall3, RenderedVerdict, Verdict};

/// The basic operations of an algebra, as tables.
#[derive(Clone, Debug)]
pub struct Operations<'a> {
    pub size: usize,
    pub unary: Vec<&'a [Elem]>,
    pub binary: Vec<&'a BinaryOp>,
}

/// Anything whose congruences can be computed.
pub trait Algebra {
    fn operations(&self) -> Operations<'_>;
}

impl Algebra for FiniteLattice {
    fn operations(&self) -> Operations<'_> {
        Operations {
            size: self.size(),
            unary: Vec::new(),
            binary: vec![self.join_table(), self.meet_table()],
        }
    }
}

impl Algebra for RrlGroupoid {
    fn operations(&self) -> Operations<'_> {
        let l = self.lattice();
        Operations {
            size: self.size(),
            unary: Vec::new(),
            binary: vec![
                l.join_table(),
                l.meet_table(),
                self.odot_table(),
                self.arrow_table(),
            ],
        }
    }
}

impl Algebra for BasicAlgebra {
    fn operations(&self) -> Operations<'_> {
        Operations {
            size: self.size(),
            unary: vec![self.neg_table()],
            binary: vec![self.oplus_table()],
        }
    }
}

impl Algebra for ImplicationReduct {
    fn operations(&self) -> Operations<'_> {
        Operations {
            size: self.size(),
            unary: Vec::new(),
            binary: vec![self.imp_table()],
        }
    }
}

/// A partition of `0..n`; class ids are assigned in order of least member.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    class_of: Vec<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }

    /// Returns true when two classes were merged.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (a, b) = (self.find(x), self.find(y));
        if a == b {
            return false;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.0[hi] = lo;
        true
    }
}

impl Congruence {
    pub fn identity(n: usize) -> Self {
        Self {
            class_of: (0..n).collect(),
        }
    }

    pub fn all(n: usize) -> Self {
        Self {
            class_of: vec![0; n],
        }
    }

    fn from_union_find(mut uf: UnionFind) -> Self {
        let n = uf.0.len();
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        let class_of = (0..n)
            .map(|x| {
                let r = uf.find(x);
                if ids[r] == usize::MAX {
                    ids[r] = next;
                    next += 1;
                }
                ids[r]
            })
            .collect();
        Self { class_of }
    }

    pub fn size(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, x: Elem) -> usize {
        self.class_of[x]
    }

    pub fn related(&self, x: Elem, y: Elem) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn class_count(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    /// `θ[x]`, sorted.
    pub fn class(&self, x: Elem) -> Vec<Elem> {
        (0..self.size()).filter(|&y| self.related(x, y)).collect()
    }

    /// All classes, sorted by least member.
    pub fn classes(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Self) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..x).all(|y| !self.related(x, y) || other.related(x, y)))
    }

    pub fn meet(&self, other: &Self) -> Self {
        let n = self.size();
        let mut uf = UnionFind::new(n);
        for x in 0..n {
            for y in 0..x {
                if self.related(x, y) && other.related(x, y) {
                    uf.union(x, y);
                }
            }
        }
        Self::from_union_find(uf)
    }

    pub fn render(&self, names: &[String]) -> Vec<Vec<String>> {
        self.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|x| names[x].clone()).collect())
            .collect()
    }
}

/// Closes the pairs under compatibility with every operation.
fn close(ops: &Operations<'_>, pairs: impl IntoIterator<Item = (Elem, Elem)>) -> Congruence {
    let mut uf = UnionFind::new(ops.size);
    let mut work: Vec<(Elem, Elem)> = Vec::new();
    for (x, y) in pairs {
        if uf.union(x, y) {
            work.push((x, y));
        }
    }
    while let Some((x, y)) = work.pop() {
        let mut push = |uf: &mut UnionFind, a: Elem, b: Elem| {
            if uf.union(a, b) {
                work.push((a, b));
            }
        };
        for u in &ops.unary {
            push(&mut uf, u[x], u[y]);
        }
        for f in &ops.binary {
            for z in 0..ops.size {
                push(&mut uf, f.get(x, z), f.get(y, z));
                push(&mut uf, f.get(z, x), f.get(z, y));
            }
        }
    }
    Congruence::from_union_find(uf)
}

/// The least congruence identifying `a` and `b`.
pub fn principal_congruence<A: Algebra + ?Sized>(alg: &A, a: Elem, b: Elem) -> Congruence {
    close(&alg.operations(), [(a, b)])
}

/// `θ ∨ φ`.
pub fn join<A: Algebra + ?Sized>(alg: &A, theta: &Congruence, phi: &Congruence) -> Congruence {
    let pairs = (0..theta.size()).flat_map(|x| {
        let t = theta.class(x)[0];
        let p = phi.class(x)[0];
        [(x, t), (x, p)]
    });
    close(&alg.operations(), pairs.collect::<Vec<_>>())
}

/// All congruences, ordered by refinement with `Δ` first and `∇` last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceLattice {
    pub congruences: Vec<Congruence>,
    /// `leq[i * k + j]` iff congruence `i` refines congruence `j`.
    pub leq: Vec<bool>,
}

impl CongruenceLattice {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    pub fn index_of(&self, c: &Congruence) -> Option<usize> {
        self.congruences
            .binary_search_by(|x| cmp_key(x).cmp(&cmp_key(c)))
            .ok()
    }

    /// Least upper bound by index.
    pub fn join_index(&self, i: usize, j: usize) -> usize {
        (0..self.len())
            .filter(|&k| self.leq(i, k) && self.leq(j, k))
            .find(|&k| {
                (0..self.len()).all(|m| !(self.leq(i, m) && self.leq(j, m)) || self.leq(k, m))
            })
            .expect("congruences form a lattice")
    }

    /// Greatest lower bound by index.
    pub fn meet_index(&self, i: usize, j: usize) -> usize {
        self.index_of(&self.congruences[i].meet(&self.congruences[j]))
            .expect("congruences are closed under intersection")
    }
}

fn cmp_key(c: &Congruence) -> (std::cmp::Reverse<usize>, &[usize]) {
    (std::cmp::Reverse(c.class_count()), &c.class_of)
}

pub fn all_congruences<A: Algebra + Sync + ?Sized>(alg: &A) -> CongruenceLattice {
    let n = alg.operations().size;
    let pairs: Vec<(Elem, Elem)> = (0..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
    let mut found: Vec<Congruence> = pairs
        .par_iter()
        .map(|&(a, b)| principal_congruence(alg, a, b))
        .collect();
    found.push(Congruence::identity(n));
    found.sort();
    found.dedup();
    loop {
        let mut added = Vec::new();
        for i in 0..found.len() {
            for j in 0..i {
                let c = join(alg, &found[i], &found[j]);
                if found.binary_search(&c).is_err() && !added.contains(&c) {
                    added.push(c);
                }
            }
        }
        if added.is_empty() {
            break;
        }
        found.extend(added);
        found.sort();
        found.dedup();
    }
    found.sort_by(|x, y| cmp_key(x).cmp(&cmp_key(y)));
    let k = found.len();
    let leq = (0..k * k)
        .map(|i| found[i / k].refines(&found[i % k]))
        .collect();
    CongruenceLattice {
        congruences: found,
        leq,
    }
}

fn composes(theta: &Congruence, phi: &Congruence, x: Elem, z: Elem) -> bool {
    (0..theta.size()).any(|y| theta.related(x, y) && phi.related(y, z))
}

/// First pair of congruence indices with `θ∘φ ≠ φ∘θ`.
pub fn permutability_witness(cl: &CongruenceLattice) -> Option<(usize, usize)> {
    let k = cl.len();
    (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let (t, p) = (&cl.congruences[i], &cl.congruences[j]);
            let n = t.size();
            (0..n).any(|x| (0..n).any(|z| composes(t, p, x, z) != composes(p, t, x, z)))
        })
}

pub fn check_permutable(cl: &CongruenceLattice) -> bool {
    permutability_witness(cl).is_none()
}

/// First triple of congruence indices violating distributivity.
pub fn distributivity_witness(cl: &CongruenceLattice) -> Option<(usize, usize, usize)> {
    let k = cl.len();
    forall3(k, |x, y, z| {
        cl.meet_index(x, cl.join_index(y, z))
            == cl.join_index(cl.meet_index(x, y), cl.meet_index(x, z))
    })
    .witness()
    .map(|w| (w[0], w[1], w[2]))
}

pub fn check_distributive_con(cl: &CongruenceLattice) -> bool {
    distributivity_witness(cl).is_none()
}

/// Direct regularity checks against the congruence lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    /// `θ[c] = φ[c]` implies `θ = φ`.
    pub c_regular: bool,
    /// `θ[a] = φ[a]` implies `θ[c] = φ[c]`.
    pub c_locally_regular: bool,
    /// Every congruence is determined by any one of its classes.
    pub regular: bool,
}

pub fn check_regularity(cl: &CongruenceLattice, c: Elem) -> RegularityReport {
    let cs = &cl.congruences;
    let n = cs.first().map_or(0, Congruence::size);
    let pairs = || (0..cs.len()).flat_map(|i| (0..cs.len()).map(move |j| (&cs[i], &cs[j])));
    let c_regular = pairs().all(|(t, p)| t.class(c) != p.class(c) || t == p);
    let c_locally_regular =
        pairs().all(|(t, p)| (0..n).all(|a| t.class(a) != p.class(a) || t.class(c) == p.class(c)));
    let regular = pairs().all(|(t, p)| (0..n).all(|a| t.class(a) != p.class(a) || t == p));
    RegularityReport {
        c_regular,
        c_locally_regular,
        regular,
    }
}

/// The term conditions behind permutability and regularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermReport {
    /// `p(x,y,y) = x` and `p(x,x,y) = y`.
    pub malcev: Verdict,
    /// `b(x,y) = 1 ⟺ x = y`.
    pub one_regular: Verdict,
    /// Under double negation: `t(x,y) = 0 ⟺ x = y`.
    pub zero_regular: Verdict,
    /// Under double negation and divisibility:
    /// `p₁(x,y) = x ∧ p₂(x,y) = x ⟺ y = 0`.
    pub locally_zero_regular: Verdict,
}

impl TermReport {
    pub fn clauses(&self) -> [(&'static str, &Verdict); 4] {
        [
            ("malcev", &self.malcev),
            ("one_regular", &self.one_regular),
            ("zero_regular", &self.zero_regular),
            ("locally_zero_regular", &self.locally_zero_regular),
        ]
    }

    /// The first clause that fails, which on a valid groupoid is a bug.
    pub fn violation(&self) -> Option<(&'static str, &Verdict)> {
        self.clauses().into_iter().find(|(_, v)| v.fails())
    }

    pub fn render(&self, names: &[String]) -> indexmap::IndexMap<&'static str, RenderedVerdict> {
        self.clauses()
            .into_iter()
            .map(|(k, v)| (k, v.render(names)))
            .collect()
    }
}

/// `p(x,y,z) = [((y→z)∧(z→y))⊙x] ∨ [((x→y)∧(y→x))⊙z]`.
pub fn malcev_term(g: &RrlGroupoid, x: Elem, y: Elem, z: Elem) -> Elem {
    let l = g.lattice();
    let left = g.odot(biimp(g, y, z), x);
    let right = g.odot(biimp(g, x, y), z);
    l.join(left, right)
}

/// `b(x,y) = (x→y)∧(y→x)`.
pub fn biimp(g: &RrlGroupoid, x: Elem, y: Elem) -> Elem {
    g.lattice().meet(g.arrow(x, y), g.arrow(y, x))
}

pub fn check_terms(g: &RrlGroupoid) -> TermReport {
    let (zero, one) = (g.zero(), g.one());
    let l = g.lattice();
    let dn = g.double_negation().holds();
    let div = g.divisibility().holds();
    let n = g.size();
    TermReport {
        malcev: forall2(n, |x, y| {
            malcev_term(g, x, y, y) == x && malcev_term(g, x, x, y) == y
        }),
        one_regular: forall2(n, |x, y| (biimp(g, x, y) == one) == (x == y)),
        zero_regular: Verdict::guarded(dn, || {
            forall2(n, |x, y| {
                (g.arrow(biimp(g, x, y), zero) == zero) == (x == y)
            })
        }),
        locally_zero_regular: Verdict::guarded(dn && div, || {
            forall2(n, |x, y| {
                let p1 = g.arrow(g.arrow(x, y), zero);
                let p2 = l.join(x, y);
                (p1 == x && p2 == x) == (y == zero)
            })
        }),
    }
}

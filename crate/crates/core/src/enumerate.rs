//! Exhaustive enumeration of small models up to isomorphism.
//!
//! Output order never depends on the thread count: candidates are generated
//! in a fixed order, deduplicated by canonical form and sorted by it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::basic::{a_of_l, BasicAlgebra};
use crate::lattice::{FiniteLattice, Involution};
use crate::ops::{BinaryOp, Elem};
use crate::residuation::RrlGroupoid;
use crate::sections::{self, FamilyMode, SectionFamily};

pub const SIZE_CAP_ENV: &str = "RESILAT_SIZE_CAP";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error(
        "{kind} enumeration of size {size} exceeds the cap {cap} (set {SIZE_CAP_ENV} to raise it)"
    )]
    SizeCapExceeded { kind: Kind, size: usize, cap: usize },
    #[error("size must be at least 1")]
    EmptyCarrier,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Lattice,
    RrlGroupoid,
    BasicAlgebra,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Lattice => "lattice",
            Kind::RrlGroupoid => "rrl-groupoid",
            Kind::BasicAlgebra => "basic-algebra",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lattice" => Ok(Kind::Lattice),
            "rrl-groupoid" => Ok(Kind::RrlGroupoid),
            "basic-algebra" => Ok(Kind::BasicAlgebra),
            other => Err(format!("cannot enumerate kind `{other}`")),
        }
    }
}

/// Largest carrier each kind may be enumerated at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCaps {
    pub lattice: usize,
    pub groupoid: usize,
    pub basic: usize,
}

impl Default for SizeCaps {
    fn default() -> Self {
        Self {
            lattice: 7,
            groupoid: 5,
            basic: 5,
        }
    }
}

impl SizeCaps {
    /// Defaults, with every cap replaced by `RESILAT_SIZE_CAP` when set.
    pub fn from_env() -> Self {
        match std::env::var(SIZE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            Some(cap) => Self {
                lattice: cap,
                groupoid: cap,
                basic: cap,
            },
            None => Self::default(),
        }
    }

    pub fn cap(&self, kind: Kind) -> usize {
        match kind {
            Kind::Lattice => self.lattice,
            Kind::RrlGroupoid => self.groupoid,
            Kind::BasicAlgebra => self.basic,
        }
    }

    pub fn check(&self, kind: Kind, size: usize) -> Result<(), EnumerationError> {
        if size == 0 {
            return Err(EnumerationError::EmptyCarrier);
        }
        let cap = self.cap(kind);
        if size > cap {
            return Err(EnumerationError::SizeCapExceeded { kind, size, cap });
        }
        Ok(())
    }
}

/// Names for enumerated lattices: `0`, `a`, `b`, …, `1`.
fn enumeration_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == n - 1 => "1".to_string(),
            i => ((b'a' + (i - 1) as u8) as char).to_string(),
        })
        .collect()
}

/// All lattices of order `n` up to isomorphism, relabelled canonically and
/// sorted by canonical form.
pub fn enumerate_lattices(
    n: usize,
    caps: &SizeCaps,
) -> Result<Vec<FiniteLattice>, EnumerationError> {
    caps.check(Kind::Lattice, n)?;
    if n <= 2 {
        return Ok(vec![FiniteLattice::chain(n)
            .with_names(enumeration_names(n))
            .expect("distinct")]);
    }
    let m = n - 2;
    // Strict order among middle elements, upper triangular in index order.
    let slots: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let total: u64 = 1 << slots.len();
    let found: BTreeMap<Vec<u8>, FiniteLattice> = (0..total)
        .into_par_iter()
        .filter_map(|mask| {
            let mut lt = vec![false; m * m];
            for (k, &(i, j)) in slots.iter().enumerate() {
                lt[i * m + j] = mask >> k & 1 == 1;
            }
            // Transitivity of the strict order.
            for i in 0..m {
                for j in i + 1..m {
                    for k in j + 1..m {
                        if lt[i * m + j] && lt[j * m + k] && !lt[i * m + k] {
                            return None;
                        }
                    }
                }
            }
            let leq: Vec<bool> = (0..n * n)
                .map(|idx| {
                    let (x, y) = (idx / n, idx % n);
                    x == y
                        || x == 0
                        || y == n - 1
                        || (x < n - 1 && y > 0 && lt[(x - 1) * m + (y - 1)])
                })
                .collect();
            let l = FiniteLattice::from_order(enumeration_names(n), leq).ok()?;
            let c = l.canonical();
            Some((c.code, l.relabel(&c.perm)))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(BTreeMap::new(), |mut acc, (code, l)| {
            acc.entry(code).or_insert(l);
            acc
        });
    Ok(found
        .into_values()
        .map(|l| l.with_names(enumeration_names(n)).expect("distinct"))
        .collect())
}

/// All antitone involutions of `l` (labelled, not up to automorphism).
pub fn enumerate_involutions(l: &FiniteLattice) -> Vec<Involution> {
    fn go(l: &FiniteLattice, map: &mut Vec<Option<Elem>>, out: &mut Vec<Involution>) {
        let Some(x) = map.iter().position(Option::is_none) else {
            let m: Vec<Elem> = map.iter().map(|v| v.expect("filled")).collect();
            if let Ok(inv) = Involution::new(l, m) {
                out.push(inv);
            }
            return;
        };
        for y in x..l.size() {
            if map[y].is_some() {
                continue;
            }
            map[x] = Some(y);
            map[y] = Some(x);
            let consistent = l.elements().all(|a| {
                l.elements().all(|b| match (map[a], map[b]) {
                    (Some(fa), Some(fb)) => !l.leq(a, b) || l.leq(fb, fa),
                    _ => true,
                })
            });
            if consistent {
                go(l, map, out);
            }
            map[x] = None;
            map[y] = None;
        }
    }
    let mut out = Vec::new();
    go(l, &mut vec![None; l.size()], &mut out);
    out
}

/// All maps of the section `[a, 1]` that are antitone and extensive (or
/// involutive) with `1^a = a`, each as a full-length row.
fn section_maps(l: &FiniteLattice, a: Elem, mode: FamilyMode) -> Vec<Vec<Option<Elem>>> {
    let members: Vec<Elem> = l.elements().filter(|&x| l.leq(a, x)).collect();
    let mut out = Vec::new();
    let mut row = vec![None; l.size()];
    fn go(
        l: &FiniteLattice,
        a: Elem,
        members: &[Elem],
        k: usize,
        row: &mut Vec<Option<Elem>>,
        mode: FamilyMode,
        out: &mut Vec<Vec<Option<Elem>>>,
    ) {
        if k == members.len() {
            let ok = members.iter().all(|&x| {
                let xx = row[row[x].expect("filled")].expect("filled");
                match mode {
                    FamilyMode::Extensive => l.leq(x, xx),
                    FamilyMode::Involutive => x == xx,
                }
            });
            if ok {
                out.push(row.clone());
            }
            return;
        }
        let x = members[k];
        let choices: Vec<Elem> = if x == l.top() {
            vec![a]
        } else {
            members.to_vec()
        };
        for v in choices {
            row[x] = Some(v);
            let antitone = members[..=k].iter().all(|&y| {
                let fy = row[y].expect("assigned");
                (!l.leq(x, y) || l.leq(fy, v)) && (!l.leq(y, x) || l.leq(v, fy))
            });
            if antitone {
                go(l, a, members, k + 1, row, mode, out);
            }
        }
        row[x] = None;
    }
    go(l, a, &members, 0, &mut row, mode, &mut out);
    out
}

/// Every section family of `l` in the given mode (labelled).
pub fn enumerate_section_families(l: &FiniteLattice, mode: FamilyMode) -> Vec<SectionFamily> {
    let per_base: Vec<Vec<Vec<Option<Elem>>>> =
        l.elements().map(|a| section_maps(l, a, mode)).collect();
    let mut out = Vec::new();
    for_each_product(&per_base, &mut |rows| {
        let maps = rows.iter().map(|r| (*r).clone()).collect();
        out.push(SectionFamily::new(l, maps, mode).expect("generated maps are valid"));
    });
    out
}

fn for_each_product<T>(choices: &[Vec<T>], f: &mut impl FnMut(&[&T])) {
    fn go<'a, T>(choices: &'a [Vec<T>], picked: &mut Vec<&'a T>, f: &mut impl FnMut(&[&T])) {
        match choices.split_first() {
            None => f(picked),
            Some((first, rest)) => {
                for c in first {
                    picked.push(c);
                    go(rest, picked, f);
                    picked.pop();
                }
            }
        }
    }
    go(choices, &mut Vec::new(), f);
}

/// Join-preserving maps `f` (with `f(0) = 0`) and `f(1) = y`: the possible
/// columns `x ↦ x⊙y` of a residuated groupoid.
fn odot_columns(l: &FiniteLattice, y: Elem) -> Vec<Vec<Elem>> {
    let n = l.size();
    let mut out = Vec::new();
    let mut col: Vec<Option<Elem>> = vec![None; n];
    col[l.bottom()] = Some(l.bottom());
    if col[l.top()].is_some_and(|v| v != y) {
        // One-element lattice: bottom is top.
        return if y == l.bottom() {
            vec![vec![y]]
        } else {
            Vec::new()
        };
    }
    col[l.top()] = Some(y);
    fn go(l: &FiniteLattice, x: Elem, col: &mut Vec<Option<Elem>>, out: &mut Vec<Vec<Elem>>) {
        let n = l.size();
        if x == n {
            out.push(col.iter().map(|v| v.expect("filled")).collect());
            return;
        }
        if col[x].is_some() {
            return go(l, x + 1, col, out);
        }
        for v in 0..n {
            col[x] = Some(v);
            let ok = (0..n).all(|a| {
                (0..n).all(|b| match (col[a], col[b], col[l.join(a, b)]) {
                    (Some(fa), Some(fb), Some(fj)) => l.join(fa, fb) == fj,
                    _ => true,
                })
            });
            if ok {
                go(l, x + 1, col, out);
            }
        }
        col[x] = None;
    }
    go(l, 0, &mut col, &mut out);
    out
}

/// Every residuated groupoid on `l` (labelled), in lexicographic order of
/// the `⊙` columns.
pub fn enumerate_rrl_groupoids_labelled(l: &FiniteLattice) -> Vec<RrlGroupoid> {
    let columns: Vec<Vec<Vec<Elem>>> = l.elements().map(|y| odot_columns(l, y)).collect();
    let mut out = Vec::new();
    for_each_product(&columns, &mut |cols| {
        let odot = BinaryOp::from_fn(l.size(), |x, y| cols[y][x]);
        out.push(
            RrlGroupoid::from_odot(l.clone(), odot)
                .expect("join-preserving columns are residuated"),
        );
    });
    out
}

/// Residuated groupoids on `l` up to isomorphism, sorted by canonical form.
pub fn enumerate_rrl_groupoids(l: &FiniteLattice) -> Vec<RrlGroupoid> {
    dedup_by_canonical(enumerate_rrl_groupoids_labelled(l), RrlGroupoid::canonical)
}

fn dedup_by_canonical<T>(
    items: Vec<T>,
    key: impl Fn(&T) -> crate::canon::Canonical + Sync + Send,
) -> Vec<T>
where
    T: Send,
{
    let keyed: Vec<(Vec<u8>, T)> = items.into_par_iter().map(|t| (key(&t).code, t)).collect();
    let mut map = BTreeMap::new();
    for (k, t) in keyed {
        map.entry(k).or_insert(t);
    }
    map.into_values().collect()
}

/// All residuated groupoids of order `n` up to isomorphism.
pub fn enumerate_groupoids(
    n: usize,
    caps: &SizeCaps,
) -> Result<Vec<RrlGroupoid>, EnumerationError> {
    caps.check(Kind::RrlGroupoid, n)?;
    let lattices = enumerate_lattices(
        n,
        &SizeCaps {
            lattice: n,
            ..*caps
        },
    )?;
    Ok(lattices
        .par_iter()
        .flat_map_iter(enumerate_rrl_groupoids)
        .collect())
}

/// All basic algebras of order `n` up to isomorphism, built from lattices
/// with sectional involutions.
pub fn enumerate_basic_algebras(
    n: usize,
    caps: &SizeCaps,
) -> Result<Vec<BasicAlgebra>, EnumerationError> {
    caps.check(Kind::BasicAlgebra, n)?;
    let lattices = enumerate_lattices(
        n,
        &SizeCaps {
            lattice: n,
            ..*caps
        },
    )?;
    let per_lattice: Vec<Vec<BasicAlgebra>> = lattices
        .par_iter()
        .map(|l| {
            let algebras = enumerate_section_families(l, FamilyMode::Involutive)
                .iter()
                .map(|f| a_of_l(l, f).expect("sectional involutions give basic algebras"))
                .collect();
            dedup_by_canonical(algebras, BasicAlgebra::canonical)
        })
        .collect();
    Ok(per_lattice.into_iter().flatten().collect())
}

/// Instance counts for one kind and size, with per-flag counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub kind: Kind,
    pub size: usize,
    pub total: usize,
    pub flags: IndexMap<String, usize>,
}

fn tally<T: Sync>(
    items: &[T],
    flags: impl Fn(&T) -> Vec<(&'static str, bool)> + Sync + Send,
) -> IndexMap<String, usize> {
    let rows: Vec<Vec<(&'static str, bool)>> = items.par_iter().map(flags).collect();
    let mut out: IndexMap<String, usize> = IndexMap::new();
    for row in rows {
        for (k, v) in row {
            *out.entry(k.to_string()).or_default() += v as usize;
        }
    }
    out
}

fn lattice_flags(l: &FiniteLattice) -> Vec<(&'static str, bool)> {
    vec![
        ("distributive", l.is_distributive()),
        ("boolean", l.is_boolean()),
        (
            "sectionally_pseudocomplemented",
            sections::sectional_pseudocomplement_family(l).is_ok(),
        ),
        ("has_involution", !enumerate_involutions(l).is_empty()),
    ]
}

fn groupoid_flags(g: &RrlGroupoid) -> Vec<(&'static str, bool)> {
    g.classify()
        .flags()
        .into_iter()
        .map(|(k, v)| (k, v.holds()))
        .collect()
}

fn basic_flags(a: &BasicAlgebra) -> Vec<(&'static str, bool)> {
    vec![
        ("mv", a.is_mv()),
        ("commutative", a.commutative().holds()),
        ("idempotent", a.idempotent().holds()),
        ("distributive", a.lattice().is_distributive()),
    ]
}

pub fn census_row(kind: Kind, n: usize, caps: &SizeCaps) -> Result<CensusRow, EnumerationError> {
    let (total, flags) = match kind {
        Kind::Lattice => {
            let xs = enumerate_lattices(n, caps)?;
            (xs.len(), tally(&xs, lattice_flags))
        }
        Kind::RrlGroupoid => {
            let xs = enumerate_groupoids(n, caps)?;
            (xs.len(), tally(&xs, groupoid_flags))
        }
        Kind::BasicAlgebra => {
            let xs = enumerate_basic_algebras(n, caps)?;
            (xs.len(), tally(&xs, basic_flags))
        }
    };
    Ok(CensusRow {
        kind,
        size: n,
        total,
        flags,
    })
}

pub fn census(
    kind: Kind,
    sizes: impl IntoIterator<Item = usize>,
    caps: &SizeCaps,
) -> Result<Vec<CensusRow>, EnumerationError> {
    sizes
        .into_iter()
        .map(|n| census_row(kind, n, caps))
        .collect()
}

/// CSV with columns `kind,size,flag,count`; the total is flag `total`.
pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from("kind,size,flag,count\n");
    for r in rows {
        out.push_str(&format!("{},{},total,{}\n", r.kind, r.size, r.total));
        for (flag, count) in &r.flags {
            out.push_str(&format!("{},{},{},{}\n", r.kind, r.size, flag, count));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_counts() {
        let caps = SizeCaps::default();
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_lattices(n, &caps).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn cap_is_enforced() {
        let caps = SizeCaps::default();
        assert_eq!(
            enumerate_lattices(8, &caps).unwrap_err(),
            EnumerationError::SizeCapExceeded {
                kind: Kind::Lattice,
                size: 8,
                cap: 7
            }
        );
    }

    #[test]
    fn chain_involution_is_unique() {
        assert_eq!(enumerate_involutions(&FiniteLattice::chain(3)).len(), 1);
    }

    #[test]
    fn groupoids_on_small_chains() {
        assert_eq!(enumerate_rrl_groupoids(&FiniteLattice::chain(2)).len(), 1);
        assert_eq!(enumerate_rrl_groupoids(&FiniteLattice::chain(3)).len(), 6);
        assert_eq!(enumerate_rrl_groupoids(&FiniteLattice::chain(1)).len(), 1);
    }

    #[test]
    fn single_basic_algebra_of_order_three() {
        let caps = SizeCaps::default();
        assert_eq!(enumerate_basic_algebras(3, &caps).unwrap().len(), 1);
    }

    #[test]
    fn csv_layout() {
        let rows = census(Kind::Lattice, 1..=2, &SizeCaps::default()).unwrap();
        let csv = census_csv(&rows);
        assert!(csv.starts_with("kind,size,flag,count\nlattice,1,total,1\n"));
    }
}

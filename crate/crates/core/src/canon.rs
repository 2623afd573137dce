//! Canonical encodings of finite ordered structures under relabelling.
//!
//! A structure is a bounded partial order plus any number of operation
//! tables. Its canonical code is the lexicographically least encoding over
//! all relabellings that send the bottom to position 0, the top to the last
//! position, and list elements along a linear extension of the order. That
//! set of relabellings is isomorphism-invariant, so two structures receive
//! the same code exactly when they are isomorphic.

use crate::ops::{invert, BinaryOp, Elem};

/// Borrowed view of a structure to canonicalize.
pub struct Structure<'a> {
    pub size: usize,
    pub bottom: Elem,
    pub top: Elem,
    /// Row-major `leq` matrix.
    pub order: &'a [bool],
    pub binary: Vec<&'a BinaryOp>,
    pub unary: Vec<&'a [Elem]>,
    /// Row-major partial binary tables (e.g. sectional maps `x^a` at `[a][x]`).
    pub partial: Vec<&'a [Option<Elem>]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub code: Vec<u8>,
    /// `perm[new] = old`: the relabelling that realizes `code`.
    pub perm: Vec<Elem>,
}

impl Structure<'_> {
    fn encode(&self, perm: &[Elem], out: &mut Vec<u8>) {
        let n = self.size;
        let inv = invert(perm);
        out.clear();
        out.push(n as u8);
        for &p in perm {
            for &q in perm {
                out.push(self.order[p * n + q] as u8);
            }
        }
        for op in &self.binary {
            for &p in perm {
                for &q in perm {
                    out.push(inv[op.get(p, q)] as u8);
                }
            }
        }
        for map in &self.unary {
            for &p in perm {
                out.push(inv[map[p]] as u8);
            }
        }
        for table in &self.partial {
            for &p in perm {
                for &q in perm {
                    out.push(table[p * n + q].map_or(0, |v| inv[v] as u8 + 1));
                }
            }
        }
    }
}

pub fn canonicalize(s: &Structure<'_>) -> Canonical {
    let n = s.size;
    assert!(n > 0 && n < 255, "carrier size out of range");
    if n == 1 {
        let mut code = Vec::new();
        s.encode(&[0], &mut code);
        return Canonical {
            code,
            perm: vec![0],
        };
    }
    let mut search = Search {
        s,
        perm: vec![usize::MAX; n],
        used: vec![false; n],
        best: None,
        scratch: Vec::new(),
    };
    search.perm[0] = s.bottom;
    search.perm[n - 1] = s.top;
    search.used[s.bottom] = true;
    search.used[s.top] = true;
    search.fill(1);
    let (code, perm) = search.best.expect("a linear extension always exists");
    Canonical { code, perm }
}

struct Search<'s, 'a> {
    s: &'s Structure<'a>,
    perm: Vec<Elem>,
    used: Vec<bool>,
    best: Option<(Vec<u8>, Vec<Elem>)>,
    scratch: Vec<u8>,
}

impl Search<'_, '_> {
    fn fill(&mut self, pos: usize) {
        let n = self.s.size;
        if pos == n - 1 {
            self.s.encode(&self.perm, &mut self.scratch);
            let better = match &self.best {
                None => true,
                Some((code, _)) => self.scratch < *code,
            };
            if better {
                self.best = Some((self.scratch.clone(), self.perm.clone()));
            }
            return;
        }
        for e in 0..n {
            if self.used[e] {
                continue;
            }
            // Only linear extensions: everything strictly below `e` is placed.
            let ready = (0..n).all(|d| d == e || !self.s.order[d * n + e] || self.used[d]);
            if !ready {
                continue;
            }
            self.used[e] = true;
            self.perm[pos] = e;
            self.fill(pos + 1);
            self.used[e] = false;
        }
    }
}

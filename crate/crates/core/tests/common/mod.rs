//! Brute-force oracles that share no code with the library, plus the test
//! populations.

#![allow(dead_code)]

use resilat::basic::g_of_a;
use resilat::enumerate::{enumerate_groupoids, SizeCaps};
use resilat::format::Structure;
use resilat::residuation::RrlGroupoid;
use resilat::{corpus, logics, sections};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Bounded lattices on `n` elements up to isomorphism, counted by trying
/// every strict order on the non-bounds.
pub fn lattice_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let perms = permutations(m);
    let mut seen = std::collections::HashSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut lt = vec![vec![false; m]; m];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                lt[i][j] = true;
            }
        }
        let strict_order = (0..m).all(|i| {
            (0..m).all(|j| !(lt[i][j] && lt[j][i]))
                && (0..m).all(|j| (0..m).all(|k| !(lt[i][j] && lt[j][k]) || lt[i][k]))
        });
        if !strict_order {
            continue;
        }
        // Inner elements have the top as an upper bound, so every pair has a
        // join iff its inner upper bounds, if any, have a least element.
        let leq = |i: usize, j: usize| i == j || lt[i][j];
        let has_joins = (0..m).all(|a| {
            (0..m).all(|b| {
                let ubs: Vec<usize> = (0..m).filter(|&u| leq(a, u) && leq(b, u)).collect();
                ubs.is_empty() || ubs.iter().any(|&u| ubs.iter().all(|&w| leq(u, w)))
            })
        });
        let has_meets = (0..m).all(|a| {
            (0..m).all(|b| {
                let lbs: Vec<usize> = (0..m).filter(|&u| leq(u, a) && leq(u, b)).collect();
                lbs.is_empty() || lbs.iter().any(|&u| lbs.iter().all(|&w| leq(w, u)))
            })
        });
        if !(has_joins && has_meets) {
            continue;
        }
        let code = perms
            .iter()
            .map(|p| {
                let mut bits = vec![false; m * m];
                for i in 0..m {
                    for j in 0..m {
                        bits[p[i] * m + p[j]] = lt[i][j];
                    }
                }
                bits
            })
            .min()
            .expect("nonempty");
        seen.insert(code);
    }
    seen.len()
}

/// Every `⊙` table on the `n`-chain with `1⊙x = x` that has a right
/// residual, found by trying all `n^(n²)` tables.
pub fn chain_groupoid_count(n: usize) -> usize {
    let cells = n * n;
    let top = n - 1;
    let mut count = 0;
    let mut t = vec![0usize; cells];
    'tables: loop {
        let ok = (0..n).all(|x| t[top * n + x] == x)
            && (0..n).all(|y| {
                (0..n).all(|z| {
                    let below: Vec<bool> = (0..n).map(|x| t[x * n + y] <= z).collect();
                    let r = (0..n).filter(|&x| below[x]).max();
                    match r {
                        Some(r) => (0..n).all(|x| below[x] == (x <= r)),
                        None => false,
                    }
                })
            });
        count += ok as usize;
        for cell in t.iter_mut() {
            *cell += 1;
            if *cell < n {
                continue 'tables;
            }
            *cell = 0;
        }
        break;
    }
    count
}

/// Basic algebras `(A, ⊕, ⌉, 0)` on `n` elements up to isomorphism, by
/// trying every table, involution and constant against the four axioms.
pub fn basic_algebra_count(n: usize) -> usize {
    let perms = permutations(n);
    let negs: Vec<&Vec<usize>> = perms
        .iter()
        .filter(|p| (0..n).all(|x| p[p[x]] == x))
        .collect();
    let cells = n * n;
    let mut seen = std::collections::HashSet::new();
    let mut t = vec![0usize; cells];
    'tables: loop {
        for neg in &negs {
            for zero in 0..n {
                let add = |x: usize, y: usize| t[x * n + y];
                let one = neg[zero];
                let ba1 = (0..n).all(|x| add(x, zero) == x);
                let ba3 = ba1
                    && (0..n).all(|x| {
                        (0..n).all(|y| add(neg[add(neg[x], y)], y) == add(neg[add(neg[y], x)], x))
                    });
                let ba4 = ba3
                    && (0..n).all(|x| {
                        (0..n).all(|y| {
                            (0..n).all(|z| {
                                add(neg[add(neg[add(neg[add(x, y)], y)], z)], add(x, z)) == one
                            })
                        })
                    });
                if ba4 {
                    let code = perms
                        .iter()
                        .map(|p| {
                            let mut table = vec![0; cells];
                            for x in 0..n {
                                for y in 0..n {
                                    table[p[x] * n + p[y]] = p[add(x, y)];
                                }
                            }
                            let mut ng = vec![0; n];
                            for x in 0..n {
                                ng[p[x]] = p[neg[x]];
                            }
                            (table, ng, p[zero])
                        })
                        .min()
                        .expect("nonempty");
                    seen.insert(code);
                }
            }
        }
        for cell in t.iter_mut() {
            *cell += 1;
            if *cell < n {
                continue 'tables;
            }
            *cell = 0;
        }
        break;
    }
    seen.len()
}

/// The groupoid behind every built-in example that has one.
pub fn corpus_groupoids() -> Vec<(String, RrlGroupoid)> {
    corpus::all()
        .into_iter()
        .filter_map(|(name, s)| {
            let g = match s {
                Structure::Groupoid(g) => g,
                Structure::Basic(a) => g_of_a(&a).ok()?,
                Structure::Sectioned(sl) => sections::g_of_l(&sl).ok()?,
                Structure::Lattice(l, Some(t)) => logics::oml_to_groupoid(&l, t.map()).ok()?,
                Structure::Nelson(n) => logics::nelson_to_residuated(&n).ok()?,
                _ => return None,
            };
            Some((name.to_string(), g))
        })
        .collect()
}

/// Built-in groupoids followed by every groupoid on lattices of order ≤ `max`.
pub fn population(max: usize) -> Vec<(String, RrlGroupoid)> {
    let caps = SizeCaps::default();
    let mut out = corpus_groupoids();
    for n in 1..=max {
        for (i, g) in enumerate_groupoids(n, &caps)
            .expect("within caps")
            .into_iter()
            .enumerate()
        {
            out.push((format!("order {n} #{i}"), g));
        }
    }
    out
}

/// Like [`basic_algebra_count`], but with `0` and `1` pinned to the first and
/// last index and the column `x⊕0 = x` filled in, which makes order 4
/// feasible. Isomorphisms then fix both ends.
pub fn basic_algebra_count_pinned(n: usize) -> usize {
    if n == 1 {
        return 1;
    }
    let (zero, one) = (0, n - 1);
    let inner: Vec<Vec<usize>> = permutations(n - 2);
    let perms: Vec<Vec<usize>> = inner
        .iter()
        .map(|p| {
            std::iter::once(0)
                .chain(p.iter().map(|&i| i + 1))
                .chain([one])
                .collect()
        })
        .collect();
    // Involutions of the inner elements, with 0 and 1 swapped.
    let negs: Vec<Vec<usize>> = perms
        .iter()
        .filter(|p| (0..n).all(|x| p[p[x]] == x))
        .map(|p| {
            let mut q = p.clone();
            q.swap(zero, one);
            q
        })
        .collect();
    let free: Vec<usize> = (0..n * n).filter(|c| c % n != zero).collect();
    let mut t: Vec<usize> = (0..n * n)
        .map(|c| if c % n == zero { c / n } else { 0 })
        .collect();
    let mut seen = std::collections::HashSet::new();
    'tables: loop {
        for neg in &negs {
            let add = |x: usize, y: usize| t[x * n + y];
            let ba3 = (0..n).all(|x| {
                (0..n).all(|y| add(neg[add(neg[x], y)], y) == add(neg[add(neg[y], x)], x))
            });
            let ba4 = ba3
                && (0..n).all(|x| {
                    (0..n).all(|y| {
                        (0..n).all(|z| {
                            add(neg[add(neg[add(neg[add(x, y)], y)], z)], add(x, z)) == one
                        })
                    })
                });
            if ba4 {
                let code = perms
                    .iter()
                    .map(|p| {
                        let mut table = vec![0; n * n];
                        for x in 0..n {
                            for y in 0..n {
                                table[p[x] * n + p[y]] = p[add(x, y)];
                            }
                        }
                        let mut ng = vec![0; n];
                        for x in 0..n {
                            ng[p[x]] = p[neg[x]];
                        }
                        (table, ng)
                    })
                    .min()
                    .expect("nonempty");
                seen.insert(code);
            }
        }
        for &c in &free {
            t[c] += 1;
            if t[c] < n {
                continue 'tables;
            }
            t[c] = 0;
        }
        break;
    }
    seen.len()
}

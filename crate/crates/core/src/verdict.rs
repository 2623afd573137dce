//! Three-valued outcomes of exhaustive identity checks.
//!
//! Every quantified property is evaluated over the whole carrier. A failure
//! carries the least counterexample tuple in index order, so reports are
//! deterministic.

use serde::Serialize;

use crate::ops::Elem;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    /// The least failing tuple, in the quantifier order of the property.
    Fails(Vec<Elem>),
    /// A hypothesis of the property is false, so nothing was asserted.
    NotApplicable,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self, Verdict::NotApplicable)
    }

    pub fn witness(&self) -> Option<&[Elem]> {
        match self {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }

    /// `Some(true)` / `Some(false)` / `None` for not-applicable.
    pub fn value(&self) -> Option<bool> {
        match self {
            Verdict::Holds => Some(true),
            Verdict::Fails(_) => Some(false),
            Verdict::NotApplicable => None,
        }
    }

    /// Evaluates `check` only when `guard` holds.
    pub fn guarded(guard: bool, check: impl FnOnce() -> Verdict) -> Verdict {
        if guard {
            check()
        } else {
            Verdict::NotApplicable
        }
    }

    /// Conjunction; the first failure wins.
    pub fn and(self, other: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Holds => other(),
            v => v,
        }
    }

    pub fn render(&self, names: &[String]) -> RenderedVerdict {
        match self {
            Verdict::Holds => RenderedVerdict {
                status: "holds",
                witness: None,
            },
            Verdict::Fails(w) => RenderedVerdict {
                status: "fails",
                witness: Some(w.iter().map(|&e| names[e].clone()).collect()),
            },
            Verdict::NotApplicable => RenderedVerdict {
                status: "n/a",
                witness: None,
            },
        }
    }
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails(Vec::new())
        }
    }
}

/// A verdict with element names substituted, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RenderedVerdict {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl std::fmt::Display for RenderedVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.witness {
            Some(w) => write!(f, "{} ({})", self.status, w.join(", ")),
            None => f.write_str(self.status),
        }
    }
}

pub fn forall1(n: usize, mut prop: impl FnMut(Elem) -> bool) -> Verdict {
    for x in 0..n {
        if !prop(x) {
            return Verdict::Fails(vec![x]);
        }
    }
    Verdict::Holds
}

pub fn forall2(n: usize, mut prop: impl FnMut(Elem, Elem) -> bool) -> Verdict {
    for x in 0..n {
        for y in 0..n {
            if !prop(x, y) {
                return Verdict::Fails(vec![x, y]);
            }
        }
    }
    Verdict::Holds
}

pub fn forall3(n: usize, mut prop: impl FnMut(Elem, Elem, Elem) -> bool) -> Verdict {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !prop(x, y, z) {
                    return Verdict::Fails(vec![x, y, z]);
                }
            }
        }
    }
    Verdict::Holds
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_is_least_tuple() {
        let v = forall2(4, |x, y| x + y < 3);
        assert_eq!(v, Verdict::Fails(vec![0, 3]));
        assert_eq!(forall3(3, |_, _, _| true), Verdict::Holds);
    }

    #[test]
    fn guard_short_circuits() {
        let v = Verdict::guarded(false, || panic!("not evaluated"));
        assert_eq!(v.value(), None);
    }
}

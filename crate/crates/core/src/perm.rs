//! Permutations of sheet indices.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, …, n-1}` stored as its image table: sheet `s` goes to
/// `images[s]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// The single cycle `c[0] -> c[1] -> … -> c[0]` on `n` sheets.
    pub fn cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for (pos, &s) in cycle.iter().enumerate() {
            if s >= n || seen[s] {
                return Err(Error::NotAPermutation(format!("cycle {cycle:?} on {n} sheets")));
            }
            seen[s] = true;
            images[s] = cycle[(pos + 1) % cycle.len()];
        }
        Ok(Self { images })
    }

    /// The cycle `0 -> 1 -> … -> n-1 -> 0`.
    pub fn standard_cycle(n: usize) -> Self {
        Self {
            images: (0..n).map(|s| (s + 1) % n.max(1)).collect(),
        }
    }

    pub fn sheets(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, sheet: usize) -> usize {
        self.images[sheet]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(s, &t)| s == t)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.sheets() != other.sheets() {
            return Err(Error::SizeMismatch {
                expected: self.sheets(),
                found: other.sheets(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&s| self.images[s]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.sheets()];
        for (s, &t) in self.images.iter().enumerate() {
            images[t] = s;
        }
        Permutation { images }
    }

    /// `r ∘ self ∘ r⁻¹`, the same permutation after relabelling sheets by `r`.
    pub fn conjugate_by(&self, r: &Permutation) -> Result<Permutation> {
        r.compose(self)?.compose(&r.inverse())
    }

    /// Cycle decomposition including fixed points. Each cycle starts at its
    /// least element and cycles are sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.sheets();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                cycle.push(s);
                s = self.images[s];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Parses cycle notation such as `(0 1 2)`, `(0 1)(2)` or `()` for a
    /// permutation on `sheets` elements. Cycles may be separated by spaces
    /// or commas inside the parentheses. Cycles must be disjoint.
    pub fn parse_cycles(text: &str, sheets: usize) -> Result<Permutation> {
        let text = text.trim();
        let mut images: Vec<usize> = (0..sheets).collect();
        let mut used = vec![false; sheets];
        let mut rest = text;
        if rest.is_empty() {
            return Err(Error::Parse {
                token: String::new(),
                reason: "empty permutation, use `()` for the identity",
            });
        }
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| Error::Parse {
                token: rest.to_string(),
                reason: "expected `(`",
            })?;
            let close = open.find(')').ok_or_else(|| Error::Parse {
                token: rest.to_string(),
                reason: "missing `)`",
            })?;
            let body = &open[..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
                let s: usize = tok.parse().map_err(|_| Error::Parse {
                    token: tok.to_string(),
                    reason: "expected a sheet index",
                })?;
                if s >= sheets {
                    return Err(Error::OutOfRange {
                        what: "sheet index",
                        value: s,
                        min: 0,
                        max: sheets.saturating_sub(1),
                    });
                }
                if used[s] {
                    return Err(Error::Parse {
                        token: tok.to_string(),
                        reason: "sheet appears in more than one place",
                    });
                }
                used[s] = true;
                cycle.push(s);
            }
            for (pos, &s) in cycle.iter().enumerate() {
                images[s] = cycle[(pos + 1) % cycle.len()];
            }
            rest = open[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|s| s.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

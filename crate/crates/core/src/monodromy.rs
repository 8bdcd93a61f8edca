//! Branched covers of the disk given by monodromy, and their topology.
//!
//! A cover of degree `n` with `k` branch points `p_1, …, p_k` is described by
//! one permutation of the sheets per branch point: a loop around `p_i`
//! carries sheet `s` to sheet `σ_i(s)`. Sheets `0, 1, 2` are the sheets
//! called `a, b, c` in the cut-and-paste picture, so the 3-cycle
//! `(0 1 2)` is the pasting `a → b → c → a`.
//!
//! The base disk has `χ = 1`. The cover has
//!
//! ```text
//! χ(X) = n − Σ_p (n − #cycles(σ_p))
//! b    = #cycles(σ_1 · σ_2 ⋯ σ_k)     (σ_1 applied first)
//! g    = (2 − χ − b) / 2              (connected covers only)
//! ```

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromySpec {
    sheets: usize,
    branch_perms: Vec<Permutation>,
}

/// Topology of the total space of a cover.
///
/// When `connected` is false the genus is not defined and is reported as 0;
/// callers must not use it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceInvariants {
    pub euler_char: i64,
    pub boundary_components: usize,
    pub genus: usize,
    pub connected: bool,
}

/// One row `(k, b, g)` of a table of covers with `k` branch points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TableRow {
    pub k: usize,
    pub boundary: usize,
    pub genus: usize,
}

impl MonodromySpec {
    pub fn new(sheets: usize, branch_perms: Vec<Permutation>) -> Result<Self> {
        if sheets == 0 {
            return Err(Error::OutOfRange {
                what: "sheet count",
                value: 0,
                min: 1,
                max: usize::MAX,
            });
        }
        if let Some(bad) = branch_perms.iter().find(|p| p.sheets() != sheets) {
            return Err(Error::SizeMismatch {
                expected: sheets,
                found: bad.sheets(),
            });
        }
        Ok(Self { sheets, branch_perms })
    }

    /// `k` branch points all carrying the same permutation.
    pub fn uniform(perm: Permutation, k: usize) -> Self {
        Self {
            sheets: perm.sheets(),
            branch_perms: core::iter::repeat_n(perm, k).collect(),
        }
    }

    /// The cyclic `n`-fold cover: every branch point carries `0 → 1 → … → n-1 → 0`.
    pub fn cyclic(sheets: usize, k: usize) -> Result<Self> {
        if sheets == 0 {
            return Self::new(0, Vec::new());
        }
        Ok(Self::uniform(Permutation::standard_cycle(sheets), k))
    }

    /// Parses a list of branch-point permutations in cycle notation separated
    /// by `,` or `;` outside parentheses, e.g. `(0 1 2),(0 2 1)`. An empty or
    /// blank string is the unbranched cover.
    pub fn parse(sheets: usize, text: &str) -> Result<Self> {
        let mut perms = Vec::new();
        let mut depth = 0usize;
        let mut start = 0;
        let bytes = text.as_bytes();
        for (pos, &ch) in bytes.iter().enumerate() {
            match ch {
                b'(' => depth += 1,
                b')' => depth = depth.saturating_sub(1),
                b',' | b';' if depth == 0 => {
                    perms.push(Permutation::parse_cycles(&text[start..pos], sheets)?);
                    start = pos + 1;
                }
                _ => {}
            }
        }
        let tail = text[start..].trim();
        if !tail.is_empty() {
            perms.push(Permutation::parse_cycles(tail, sheets)?);
        } else if !perms.is_empty() {
            return Err(Error::Parse {
                token: text.to_string(),
                reason: "trailing separator",
            });
        }
        Self::new(sheets, perms)
    }

    pub fn sheets(&self) -> usize {
        self.sheets
    }

    pub fn branch_points(&self) -> usize {
        self.branch_perms.len()
    }

    pub fn branch_perms(&self) -> &[Permutation] {
        &self.branch_perms
    }

    /// Monodromy around the boundary circle: `σ_1` first, then `σ_2`, …, `σ_k`.
    pub fn boundary_monodromy(&self) -> Permutation {
        self.branch_perms
            .iter()
            .fold(Permutation::identity(self.sheets), |acc, p| {
                p.compose(&acc).expect("sheet counts checked at construction")
            })
    }

    /// True iff the branch permutations generate a transitive group.
    pub fn is_connected_cover(&self) -> bool {
        let n = self.sheets;
        let mut reached = alloc::vec![false; n];
        let mut stack = alloc::vec![0usize];
        reached[0] = true;
        while let Some(s) = stack.pop() {
            for p in &self.branch_perms {
                let t = p.apply(s);
                if !reached[t] {
                    reached[t] = true;
                    stack.push(t);
                }
            }
        }
        reached.into_iter().all(|r| r)
    }

    pub fn surface_invariants(&self) -> SurfaceInvariants {
        let n = self.sheets as i64;
        let ramification: i64 = self
            .branch_perms
            .iter()
            .map(|p| n - p.cycle_count() as i64)
            .sum();
        let euler_char = n - ramification;
        let boundary_components = self.boundary_monodromy().cycle_count();
        let connected = self.is_connected_cover();
        let genus = if connected {
            let twice = 2 - euler_char - boundary_components as i64;
            debug_assert!(twice >= 0 && twice % 2 == 0);
            (twice / 2) as usize
        } else {
            0
        };
        SurfaceInvariants {
            euler_char,
            boundary_components,
            genus,
            connected,
        }
    }
}

fn uniform_table(perm: &Permutation, k_max: usize) -> Vec<TableRow> {
    (1..=k_max)
        .map(|k| {
            let inv = MonodromySpec::uniform(perm.clone(), k).surface_invariants();
            TableRow {
                k,
                boundary: inv.boundary_components,
                genus: inv.genus,
            }
        })
        .collect()
}

/// Rows `k = 1..=k_max` for the cyclic `sheets`-fold cover.
pub fn cyclic_table(sheets: usize, k_max: usize) -> Vec<TableRow> {
    uniform_table(&Permutation::standard_cycle(sheets), k_max)
}

/// Rows for the 3-fold cover with every branch point carrying `(0 1 2)`.
pub fn three_fold_table(k_max: usize) -> Vec<TableRow> {
    cyclic_table(3, k_max)
}

/// Rows for the 2-fold cover with every branch point carrying `(0 1)`.
pub fn two_fold_table(k_max: usize) -> Vec<TableRow> {
    cyclic_table(2, k_max)
}

/// Closed form for the 3-fold family: `(b, g) = (3, k-2)` when `3 | k`,
/// otherwise `(1, k-1)`.
pub fn three_fold_closed_form(k: usize) -> (usize, usize) {
    assert!(k >= 1);
    if k.is_multiple_of(3) {
        (3, k - 2)
    } else {
        (1, k - 1)
    }
}

/// Closed form for the 2-fold family: `b = 2 - (k mod 2)`, `g = ⌊(k-1)/2⌋`.
pub fn two_fold_closed_form(k: usize) -> (usize, usize) {
    assert!(k >= 1);
    (2 - k % 2, (k - 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c3() -> Permutation {
        Permutation::cycle(3, &[0, 1, 2]).unwrap()
    }

    fn inv(spec: &MonodromySpec) -> (i64, usize, usize) {
        let s = spec.surface_invariants();
        assert!(s.connected);
        (s.euler_char, s.boundary_components, s.genus)
    }

    #[test]
    fn connectivity() {
        assert!(MonodromySpec::new(3, vec![c3()]).unwrap().is_connected_cover());
        assert!(!MonodromySpec::new(3, vec![]).unwrap().is_connected_cover());
        let t = Permutation::cycle(2, &[0, 1]).unwrap();
        assert!(MonodromySpec::new(2, vec![t.clone(), t]).unwrap().is_connected_cover());
        assert!(MonodromySpec::new(1, vec![]).unwrap().is_connected_cover());
        let t01 = Permutation::cycle(3, &[0, 1]).unwrap();
        assert!(!MonodromySpec::new(3, vec![t01.clone(), t01]).unwrap().is_connected_cover());
    }

    #[test]
    fn invariants_examples() {
        assert_eq!(inv(&MonodromySpec::uniform(c3(), 2)), (-1, 1, 1));
        assert_eq!(inv(&MonodromySpec::uniform(c3(), 3)), (-3, 3, 1));
        let t = Permutation::cycle(2, &[0, 1]).unwrap();
        assert_eq!(inv(&MonodromySpec::uniform(t, 3)), (-1, 1, 1));
        let pants = MonodromySpec::new(3, vec![c3(), c3().inverse()]).unwrap();
        assert_eq!(inv(&pants), (-1, 3, 0));
        assert_eq!(inv(&MonodromySpec::new(1, vec![]).unwrap()), (1, 1, 0));
    }

    #[test]
    fn disconnected_cover_reports_sentinel_genus() {
        let s = MonodromySpec::new(3, vec![]).unwrap().surface_invariants();
        assert_eq!(
            s,
            SurfaceInvariants {
                euler_char: 3,
                boundary_components: 3,
                genus: 0,
                connected: false
            }
        );
    }

    #[test]
    fn mismatched_sheets_rejected() {
        let err = MonodromySpec::new(3, vec![c3(), Permutation::identity(2)]);
        assert_eq!(err, Err(Error::SizeMismatch { expected: 3, found: 2 }));
    }

    #[test]
    fn three_fold_table_rows() {
        let t = three_fold_table(7);
        assert_eq!(t[0], TableRow { k: 1, boundary: 1, genus: 0 });
        assert_eq!(t[5], TableRow { k: 6, boundary: 3, genus: 4 });
        assert_eq!(t[6], TableRow { k: 7, boundary: 1, genus: 6 });
    }

    #[test]
    fn parse_spec() {
        let m = MonodromySpec::parse(3, "(0 1 2),(0 2 1)").unwrap();
        assert_eq!(m.branch_points(), 2);
        assert_eq!(m.branch_perms()[1], c3().inverse());
        let m = MonodromySpec::parse(3, "(0 1)(2); (1 2)").unwrap();
        assert_eq!(m.branch_points(), 2);
        assert_eq!(MonodromySpec::parse(3, "  ").unwrap().branch_points(), 0);
        assert!(MonodromySpec::parse(3, "(0 1 2),").is_err());
        assert!(MonodromySpec::parse(3, "(0 1 3)").is_err());
    }

    #[test]
    fn boundary_monodromy_order() {
        // σ_1 = (0 1), σ_2 = (1 2). σ_1 first: 0 -> 1 -> 2, so the product is (0 2 1).
        let m = MonodromySpec::new(
            3,
            vec![Permutation::cycle(3, &[0, 1]).unwrap(), Permutation::cycle(3, &[1, 2]).unwrap()],
        )
        .unwrap();
        assert_eq!(m.boundary_monodromy(), Permutation::cycle(3, &[0, 2, 1]).unwrap());
    }
}

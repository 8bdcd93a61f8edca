//! The published `π₁` actions of `β̃_i`, `D_{x_i}`, `D_{y_i}`, `D_{z_i}`,
//! line by line, compared against the automorphisms derived from the
//! groupoid functors.
//!
//! A line is a template over `i` (and `j` for the far lines) such as
//! `x{i+1} -> x{i} y{i} x{i+1} x{i}^-1`. Two printed lines are suspected
//! typos; they carry a second, intended reading and are reported as
//! [`LineStatus::Flagged`] instead of being asserted. Generators that no
//! line mentions are expected to be fixed.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{induced_automorphism, FreeGroupWord, GenKind, Generator, SpanningTree};
use crate::error::{Error, Result};
use crate::mcg::Generator as Catalog;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineStatus {
    Match,
    Mismatch,
    Flagged,
}

impl LineStatus {
    pub fn name(self) -> &'static str {
        match self {
            LineStatus::Match => "match",
            LineStatus::Mismatch => "mismatch",
            LineStatus::Flagged => "flagged",
        }
    }
}

/// One instance (fixed `i`, and `j` for far lines) of a table line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableLineCheck {
    pub generator: Catalog,
    pub k: usize,
    pub i: usize,
    pub j: Option<usize>,
    /// The line template, or `unlisted` for implicit fixed generators.
    pub line: &'static str,
    pub target: Generator,
    pub status: LineStatus,
    /// Derived image of `target`.
    pub derived: FreeGroupWord,
    /// The printed right-hand side at this `i`, `j`.
    pub printed: FreeGroupWord,
    /// For flagged lines: the intended reading's target, its derived image,
    /// and whether that reading matches.
    pub intended: Option<(Generator, FreeGroupWord, bool)>,
}

struct Line {
    text: &'static str,
    j_min: Option<usize>,
    intended: Option<&'static str>,
}

const fn line(text: &'static str) -> Line {
    Line {
        text,
        j_min: None,
        intended: None,
    }
}

const fn far(text: &'static str, j_min: usize) -> Line {
    Line {
        text,
        j_min: Some(j_min),
        intended: None,
    }
}

const fn suspect(text: &'static str, j_min: usize, intended: &'static str) -> Line {
    Line {
        text,
        j_min: Some(j_min),
        intended: Some(intended),
    }
}

const BETA_TILDE_LINES: &[Line] = &[
    line("x{i-1} -> x{i-1} y{i-1} y{i} y{i-1}^-1"),
    line("y{i-1} -> y{i-1} y{i}^-1 x{i}^-1"),
    line("x{i} -> x{i} y{i}"),
    line("y{i} -> x{i}^-1"),
    line("x{i+1} -> x{i} y{i} x{i+1} x{i}^-1"),
    line("y{i+1} -> x{i} y{i+1} y{i}^-1 x{i}^-2"),
    far("x{i+j} -> x{i}^2 y{i} x{i+j} y{i}^-1 x{i}^-2", 2),
    // Printed with the left-hand side x_{i+j} a second time.
    suspect(
        "x{i+j} -> x{i}^2 y{i} y{i+j} y{i}^-1 x{i}^-2",
        2,
        "y{i+j} -> x{i}^2 y{i} y{i+j} y{i}^-1 x{i}^-2",
    ),
];

const DEHN_X_LINES: &[Line] = &[
    line("y{i-1} -> y{i-1} x{i}^-1"),
    line("y{i} -> y{i} x{i}^-1"),
    line("x{i+1} -> x{i} x{i+1} x{i}^-1"),
    line("y{i+1} -> x{i} y{i+1} y{i}^-1 x{i}^-1 y{i} x{i}^-1"),
    far("x{i+j} -> x{i} y{i}^-1 x{i} y{i} x{i+j} y{i}^-1 x{i}^-1 y{i} x{i}^-1", 2),
    far("y{i+j} -> x{i} y{i}^-1 x{i} y{i} y{i+j} y{i}^-1 x{i}^-1 y{i} x{i}^-1", 2),
];

const DEHN_Y_LINES: &[Line] = &[
    line("x{i-1} -> x{i-1} y{i-1} y{i}^-1 y{i-1}^-1"),
    line("x{i} -> x{i} y{i}^-1"),
    line("x{i+1} -> x{i+1} y{i}^-1"),
    // Printed with y_{i+1} on the right for every j ≥ 1.
    suspect("y{i+j} -> y{i} y{i+1} y{i}^-1", 1, "y{i+j} -> y{i} y{i+j} y{i}^-1"),
    far("x{i+j} -> y{i} x{i+j} y{i}^-1", 2),
];

const DEHN_Z_LINES: &[Line] = &[
    line("x{i-1} -> x{i-1} y{i-1} y{i}^-1 x{i}^-1 y{i-1}^-1"),
    line("y{i-1} -> y{i-1} x{i} y{i}"),
    line("x{i} -> y{i}^-1"),
    line("y{i} -> y{i} x{i} y{i}"),
    line("x{i+1} -> y{i}^-1 x{i}^-1 x{i+1}"),
    line("y{i+1} -> y{i+1} x{i} y{i}"),
    far("x{i+j} -> y{i}^-1 x{i}^-1 x{i+j} x{i} y{i}", 2),
    far("y{i+j} -> y{i}^-1 x{i}^-1 y{i+j} x{i} y{i}", 2),
];

fn lines_for(g: Catalog) -> &'static [Line] {
    match g {
        Catalog::BetaTilde => BETA_TILDE_LINES,
        Catalog::DehnX => DEHN_X_LINES,
        Catalog::DehnY => DEHN_Y_LINES,
        Catalog::DehnZ => DEHN_Z_LINES,
        Catalog::Beta => &[],
    }
}

// Expands `x{i+j}^-2`-style tokens; `None` if an index leaves 1..=k-1.
fn expand_token(token: &str, i: usize, j: usize, k: usize) -> Result<Option<FreeGroupWord>> {
    let bad = || Error::Parse {
        token: token.into(),
        reason: "bad table template token",
    };
    let kind = match token.as_bytes().first() {
        Some(b'x') => GenKind::X,
        Some(b'y') => GenKind::Y,
        _ => return Err(bad()),
    };
    let open = token.find('{').ok_or_else(bad)?;
    let close = token.find('}').ok_or_else(bad)?;
    let index = match &token[open + 1..close] {
        "i" => i as isize,
        "i-1" => i as isize - 1,
        "i+1" => i as isize + 1,
        "i+j" => (i + j) as isize,
        _ => return Err(bad()),
    };
    let exp: i64 = match token[close + 1..].strip_prefix('^') {
        Some(e) => e.parse().map_err(|_| bad())?,
        None => 1,
    };
    if index < 1 || index as usize > k - 1 {
        return Ok(None);
    }
    Ok(Some(FreeGroupWord::generator(Generator { kind, index: index as usize }).pow(exp)))
}

// (target, rhs) of a template at (i, j), or None when out of range.
fn expand(text: &str, i: usize, j: usize, k: usize) -> Result<Option<(Generator, FreeGroupWord)>> {
    let (lhs, rhs) = text.split_once(" -> ").ok_or_else(|| Error::Parse {
        token: text.into(),
        reason: "table line needs `->`",
    })?;
    let Some(target) = expand_token(lhs, i, j, k)? else {
        return Ok(None);
    };
    let target = target.letters()[0].generator;
    let mut word = FreeGroupWord::identity();
    for tok in rhs.split_whitespace() {
        match expand_token(tok, i, j, k)? {
            Some(w) => word = word.mul(&w),
            None => return Ok(None),
        }
    }
    Ok(Some((target, word)))
}

/// Checks every line of every display for all `1 ≤ i ≤ k-1` (and all valid
/// `j`), then checks that generators no line mentions are fixed.
pub fn check_pi1_tables(k: usize) -> Result<Vec<TableLineCheck>> {
    if k < 2 {
        return Err(Error::OutOfRange {
            what: "branch point count",
            value: k,
            min: 2,
            max: usize::MAX,
        });
    }
    let tree = SpanningTree::new(k)?;
    let mut out = Vec::new();
    for generator in Catalog::COVER {
        for i in 1..k {
            let auto = induced_automorphism(&generator.build(i, k)?, &tree)?;
            let mut covered = BTreeSet::new();
            for l in lines_for(generator) {
                let js: Vec<Option<usize>> = match l.j_min {
                    None => alloc::vec![None],
                    Some(min) => (min..k.saturating_sub(i)).map(Some).collect(),
                };
                for j in js {
                    let Some((target, printed)) = expand(l.text, i, j.unwrap_or(0), k)? else {
                        continue;
                    };
                    let derived = auto.image(target).clone();
                    let literal = derived == printed;
                    let (status, intended) = match l.intended {
                        None => {
                            covered.insert(target);
                            (if literal { LineStatus::Match } else { LineStatus::Mismatch }, None)
                        }
                        Some(reading) => {
                            let (t2, w2) = expand(reading, i, j.unwrap_or(0), k)?.ok_or_else(|| {
                                Error::Parse {
                                    token: reading.into(),
                                    reason: "intended reading out of range",
                                }
                            })?;
                            covered.insert(t2);
                            let d2 = auto.image(t2).clone();
                            let ok = d2 == w2;
                            (LineStatus::Flagged, Some((t2, d2, ok)))
                        }
                    };
                    out.push(TableLineCheck {
                        generator,
                        k,
                        i,
                        j,
                        line: l.text,
                        target,
                        status,
                        derived,
                        printed,
                        intended,
                    });
                }
            }
            for target in tree.generators() {
                if covered.contains(&target) {
                    continue;
                }
                let derived = auto.image(target).clone();
                let printed = FreeGroupWord::generator(target);
                let status = if derived == printed {
                    LineStatus::Match
                } else {
                    LineStatus::Mismatch
                };
                out.push(TableLineCheck {
                    generator,
                    k,
                    i,
                    j: None,
                    line: "unlisted",
                    target,
                    status,
                    derived,
                    printed,
                    intended: None,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn templates_expand() {
        let (t, w) = expand("x{i+1} -> x{i} y{i} x{i+1} x{i}^-1", 2, 0, 5).unwrap().unwrap();
        assert_eq!(t, Generator::x(3));
        assert_eq!(w.to_string(), "x2 y2 x3 x2^-1");
        assert!(expand("x{i-1} -> x{i-1}", 1, 0, 5).unwrap().is_none());
        assert!(expand("x{i+1} -> x{i+1}", 4, 0, 5).unwrap().is_none());
        let (_, w) = expand("x{i+j} -> x{i}^2 y{i}", 1, 2, 5).unwrap().unwrap();
        assert_eq!(w.to_string(), "x1 x1 y1");
    }

    #[test]
    fn k5_tables() {
        let checks = check_pi1_tables(5).unwrap();
        assert!(checks.iter().all(|c| c.status != LineStatus::Mismatch));
        let flagged: Vec<_> = checks.iter().filter(|c| c.status == LineStatus::Flagged).collect();
        assert!(!flagged.is_empty());
        assert!(flagged.iter().all(|c| c.intended.as_ref().unwrap().2));
        let line = checks
            .iter()
            .find(|c| c.generator == Catalog::BetaTilde && c.i == 2 && c.target == Generator::y(2))
            .unwrap();
        assert_eq!(line.status, LineStatus::Match);
        assert_eq!(line.derived.to_string(), "x2^-1");
    }

    #[test]
    fn k2_is_degenerate() {
        let checks = check_pi1_tables(2).unwrap();
        assert!(checks.iter().all(|c| c.j.is_none() && c.i == 1));
        assert!(checks.iter().all(|c| c.status == LineStatus::Match));
        assert!(check_pi1_tables(1).is_err());
    }
}

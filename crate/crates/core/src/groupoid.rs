//! Free groupoids on the punctured disk and on its 3-fold cover.
//!
//! The base groupoid has objects `p_0, …, p_{k+1}` (two boundary points and
//! the `k` branch points) and arrows `a_i: p_i → p_{i+1}` for `0 ≤ i ≤ k`.
//!
//! The cover groupoid has the six boundary objects `a0.start`, `b0.start`,
//! `c0.start`, `ak.end`, `bk.end`, `ck.end` together with the branch points
//! `p_1, …, p_k`, and three lifts `a_i, b_i, c_i` of every base arrow:
//!
//! ```text
//! a_0: a0.start → p_1     b_0: b0.start → p_1     c_0: c0.start → p_1
//! a_i, b_i, c_i: p_i → p_{i+1}                    (1 ≤ i ≤ k-1)
//! a_k: p_k → ak.end       b_k: p_k → bk.end       c_k: p_k → ck.end
//! ```
//!
//! Both groupoids are free, so two words represent the same morphism iff
//! they share endpoints and have the same free reduction.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// The three sheets of the cover, called `a`, `b`, `c` (indices 0, 1, 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sheet {
    A,
    B,
    C,
}

impl Sheet {
    pub const ALL: [Sheet; 3] = [Sheet::A, Sheet::B, Sheet::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Sheet::A => 'a',
            Sheet::B => 'b',
            Sheet::C => 'c',
        }
    }

    fn from_letter(ch: char) -> Option<Sheet> {
        match ch.to_ascii_lowercase() {
            'a' => Some(Sheet::A),
            'b' => Some(Sheet::B),
            'c' => Some(Sheet::C),
            _ => None,
        }
    }
}

/// A generating arrow. Base-groupoid arrows all live on sheet `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub sheet: Sheet,
    pub index: usize,
}

impl Arrow {
    pub const fn new(sheet: Sheet, index: usize) -> Self {
        Self { sheet, index }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sheet.letter(), self.index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Object {
    /// A branch point `p_i`, or for the base groupoid also `p_0` and `p_{k+1}`.
    Point(usize),
    /// Start of the boundary arrow `s_0` on sheet `s` of the cover.
    Start(Sheet),
    /// End of the boundary arrow `s_k` on sheet `s` of the cover; carries `k`.
    End(Sheet, usize),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Point(i) => write!(f, "p{i}"),
            Object::Start(s) => write!(f, "{}0.start", s.letter()),
            Object::End(s, k) => write!(f, "{}{k}.end", s.letter()),
        }
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: Arrow,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(arrow: Arrow, inverse: bool) -> Self {
        Self { arrow, inverse }
    }

    pub const fn pos(arrow: Arrow) -> Self {
        Self::new(arrow, false)
    }

    pub const fn neg(arrow: Arrow) -> Self {
        Self::new(arrow, true)
    }

    pub fn inv(self) -> Self {
        Self::new(self.arrow, !self.inverse)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.arrow)
        } else {
            write!(f, "{}", self.arrow)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupoidKind {
    Base,
    Cover,
}

/// One of the two free groupoid presentations, determined by its kind and
/// the number of branch points `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupoidPresentation {
    kind: GroupoidKind,
    k: usize,
}

impl GroupoidPresentation {
    pub fn base(k: usize) -> Result<Self> {
        Self::with_kind(GroupoidKind::Base, k)
    }

    pub fn cover(k: usize) -> Result<Self> {
        Self::with_kind(GroupoidKind::Cover, k)
    }

    fn with_kind(kind: GroupoidKind, k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::OutOfRange {
                what: "branch point count",
                value: k,
                min: 1,
                max: usize::MAX,
            });
        }
        Ok(Self { kind, k })
    }

    pub fn kind(&self) -> GroupoidKind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn objects(&self) -> Vec<Object> {
        let k = self.k;
        match self.kind {
            GroupoidKind::Base => (0..=k + 1).map(Object::Point).collect(),
            GroupoidKind::Cover => Sheet::ALL
                .iter()
                .map(|&s| Object::Start(s))
                .chain((1..=k).map(Object::Point))
                .chain(Sheet::ALL.iter().map(|&s| Object::End(s, k)))
                .collect(),
        }
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        match self.kind {
            GroupoidKind::Base => (0..=self.k).map(|i| Arrow::new(Sheet::A, i)).collect(),
            GroupoidKind::Cover => (0..=self.k)
                .flat_map(|i| Sheet::ALL.iter().map(move |&s| Arrow::new(s, i)))
                .collect(),
        }
    }

    pub fn contains_arrow(&self, arrow: Arrow) -> bool {
        arrow.index <= self.k && (self.kind == GroupoidKind::Cover || arrow.sheet == Sheet::A)
    }

    pub fn contains_object(&self, obj: Object) -> bool {
        let k = self.k;
        match (self.kind, obj) {
            (GroupoidKind::Base, Object::Point(i)) => i <= k + 1,
            (GroupoidKind::Base, _) => false,
            (GroupoidKind::Cover, Object::Point(i)) => (1..=k).contains(&i),
            (GroupoidKind::Cover, Object::Start(_)) => true,
            (GroupoidKind::Cover, Object::End(_, kk)) => kk == k,
        }
    }

    /// Objects that every mapping class must fix.
    pub fn is_boundary(&self, obj: Object) -> bool {
        match obj {
            Object::Point(i) => self.kind == GroupoidKind::Base && (i == 0 || i == self.k + 1),
            Object::Start(_) | Object::End(..) => self.kind == GroupoidKind::Cover,
        }
    }

    pub fn boundary_objects(&self) -> Vec<Object> {
        self.objects()
            .into_iter()
            .filter(|&o| self.is_boundary(o))
            .collect()
    }

    /// Source and target of a generating arrow.
    pub fn endpoints(&self, arrow: Arrow) -> Option<(Object, Object)> {
        if !self.contains_arrow(arrow) {
            return None;
        }
        let i = arrow.index;
        let k = self.k;
        Some(match self.kind {
            GroupoidKind::Base => (Object::Point(i), Object::Point(i + 1)),
            GroupoidKind::Cover => {
                let src = if i == 0 {
                    Object::Start(arrow.sheet)
                } else {
                    Object::Point(i)
                };
                let dst = if i == k {
                    Object::End(arrow.sheet, k)
                } else {
                    Object::Point(i + 1)
                };
                (src, dst)
            }
        })
    }

    fn letter_endpoints(&self, letter: Letter) -> Result<(Object, Object)> {
        let (s, t) = self
            .endpoints(letter.arrow)
            .ok_or_else(|| Error::UnknownArrow(letter.arrow.to_string()))?;
        Ok(if letter.inverse { (t, s) } else { (s, t) })
    }

    /// True iff the underlying graph is connected.
    pub fn is_connected(&self) -> bool {
        let objects = self.objects();
        let mut reached = alloc::vec![objects[0]];
        let mut frontier = alloc::vec![objects[0]];
        let arrows = self.arrows();
        while let Some(o) = frontier.pop() {
            for &a in &arrows {
                let (s, t) = self.endpoints(a).expect("own arrow");
                for (from, to) in [(s, t), (t, s)] {
                    if from == o && !reached.contains(&to) {
                        reached.push(to);
                        frontier.push(to);
                    }
                }
            }
        }
        reached.len() == objects.len()
    }

    /// Rank of the free fundamental group at any object: `#arrows − #objects + 1`.
    pub fn rank(&self) -> usize {
        self.arrows().len() + 1 - self.objects().len()
    }

    pub fn identity(&self, obj: Object) -> Result<GroupoidWord> {
        if !self.contains_object(obj) {
            return Err(Error::UnknownObject(obj.to_string()));
        }
        Ok(GroupoidWord::identity_at(obj))
    }

    pub fn arrow_word(&self, arrow: Arrow) -> Result<GroupoidWord> {
        self.word(&[Letter::pos(arrow)])
    }

    /// Builds a word from a non-empty letter sequence, checking composability.
    pub fn word(&self, letters: &[Letter]) -> Result<GroupoidWord> {
        let first = letters.first().ok_or_else(|| Error::Parse {
            token: String::new(),
            reason: "an empty word needs an explicit base object",
        })?;
        let (source, _) = self.letter_endpoints(*first)?;
        self.word_from(source, letters)
    }

    /// Builds a word starting at `source`; the empty sequence is the identity there.
    pub fn word_from(&self, source: Object, letters: &[Letter]) -> Result<GroupoidWord> {
        if !self.contains_object(source) {
            return Err(Error::UnknownObject(source.to_string()));
        }
        let mut at = source;
        let mut prev: Option<Letter> = None;
        for &l in letters {
            let (s, t) = self.letter_endpoints(l)?;
            if s != at {
                return Err(Error::NotComposable {
                    left: prev.map_or_else(|| at.to_string(), |p| p.to_string()),
                    right: l.to_string(),
                    at: at.to_string(),
                    next: s.to_string(),
                });
            }
            at = t;
            prev = Some(l);
        }
        Ok(GroupoidWord {
            source,
            target: at,
            letters: letters.to_vec(),
        })
    }

    /// Parses one letter: `a3`, `a3^-1`, or the uppercase shorthand `A3` for
    /// the inverse.
    pub fn parse_letter(&self, token: &str) -> Result<Letter> {
        let letter = parse_letter_token(token)?;
        if !self.contains_arrow(letter.arrow) {
            return Err(Error::UnknownArrow(token.to_string()));
        }
        Ok(letter)
    }

    /// Parses a whitespace-separated, non-empty word such as `c0 b1 a1^-1 c0^-1`.
    pub fn parse_word(&self, text: &str) -> Result<GroupoidWord> {
        let letters = self.parse_letters(text)?;
        self.word(&letters)
    }

    /// Like [`parse_word`](Self::parse_word) but anchored at `source`, so
    /// that the empty string and `1` denote the identity there.
    pub fn parse_word_from(&self, source: Object, text: &str) -> Result<GroupoidWord> {
        let letters = self.parse_letters(text)?;
        self.word_from(source, &letters)
    }

    fn parse_letters(&self, text: &str) -> Result<Vec<Letter>> {
        text.split_whitespace()
            .filter(|t| *t != "1")
            .map(|t| self.parse_letter(t))
            .collect()
    }

    /// Parses an object name: `p3`, `a0.start`, `c3.end`.
    pub fn parse_object(&self, text: &str) -> Result<Object> {
        let unknown = || Error::UnknownObject(text.to_string());
        let obj = if let Some(num) = text.strip_prefix('p') {
            Object::Point(num.parse().map_err(|_| unknown())?)
        } else if let Some((head, tail)) = text.split_once('.') {
            let mut chars = head.chars();
            let sheet = chars.next().and_then(Sheet::from_letter).ok_or_else(unknown)?;
            let idx: usize = chars.as_str().parse().map_err(|_| unknown())?;
            match tail {
                "start" if idx == 0 => Object::Start(sheet),
                "end" => Object::End(sheet, idx),
                _ => return Err(unknown()),
            }
        } else {
            return Err(unknown());
        };
        if !self.contains_object(obj) {
            return Err(unknown());
        }
        Ok(obj)
    }
}

fn parse_letter_token(token: &str) -> Result<Letter> {
    let bad = |reason| Error::Parse {
        token: token.to_string(),
        reason,
    };
    let (body, inverse_suffix) = match token.split_once('^') {
        Some((body, "-1")) => (body, true),
        Some((body, "1")) => (body, false),
        Some(_) => return Err(bad("only the exponents 1 and -1 are allowed")),
        None => (token, false),
    };
    let mut chars = body.chars();
    let head = chars.next().ok_or_else(|| bad("empty letter"))?;
    let sheet = Sheet::from_letter(head).ok_or_else(|| bad("arrow names start with a, b or c"))?;
    let index: usize = chars
        .as_str()
        .parse()
        .map_err(|_| bad("expected an arrow index"))?;
    let inverse = inverse_suffix ^ head.is_ascii_uppercase();
    Ok(Letter::new(Arrow::new(sheet, index), inverse))
}

/// A composable signed word in a free groupoid. Composability is checked
/// when the word is built through a [`GroupoidPresentation`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupoidWord {
    source: Object,
    target: Object,
    letters: Vec<Letter>,
}

impl GroupoidWord {
    pub(crate) fn identity_at(obj: Object) -> Self {
        Self {
            source: obj,
            target: obj,
            letters: Vec::new(),
        }
    }

    pub fn source(&self) -> Object {
        self.source
    }

    pub fn target(&self) -> Object {
        self.target
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inv())
    }

    /// Free reduction: cancels every adjacent `x x⁻¹` pair.
    pub fn reduce(&self) -> GroupoidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            push_reducing(&mut out, l);
        }
        GroupoidWord {
            source: self.source,
            target: self.target,
            letters: out,
        }
    }

    /// `self` followed by `other`, freely reduced.
    pub fn concat(&self, other: &GroupoidWord) -> Result<GroupoidWord> {
        if self.target != other.source {
            return Err(Error::NotComposable {
                left: self.to_string(),
                right: other.to_string(),
                at: self.target.to_string(),
                next: other.source.to_string(),
            });
        }
        let mut out = self.reduce().letters;
        for &l in &other.letters {
            push_reducing(&mut out, l);
        }
        Ok(GroupoidWord {
            source: self.source,
            target: other.target,
            letters: out,
        })
    }

    pub fn inverse(&self) -> GroupoidWord {
        GroupoidWord {
            source: self.target,
            target: self.source,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Appends `other` in place, reducing at the seam. Endpoints must match.
    pub(crate) fn extend_reducing(&mut self, other: &GroupoidWord) {
        debug_assert_eq!(self.target, other.source);
        for &l in &other.letters {
            push_reducing(&mut self.letters, l);
        }
        self.target = other.target;
    }
}

fn push_reducing(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inv()) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Equality of morphisms in the free groupoid: same endpoints and the same
/// reduced letter sequence.
pub fn words_equal(u: &GroupoidWord, v: &GroupoidWord) -> bool {
    u.source == v.source && u.target == v.target && u.reduce().letters == v.reduce().letters
}

impl fmt::Display for GroupoidWord {
    /// Letters separated by spaces; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| format!("{l}")).collect();
        f.write_str(&parts.join(" "))
    }
}

//! Mapping classes as self-functors of a free groupoid presentation.
//!
//! A functor of a free groupoid is determined by where it sends objects and
//! generating arrows, so a [`MappingClass`] stores exactly that: a bijection
//! of objects fixing the boundary, and for every arrow `g: s → t` a reduced
//! word from `F(s)` to `F(t)`. Arrows and objects not stored are fixed.
//!
//! The catalog holds the half twist `β_i` on the base groupoid, its 3-fold
//! lift `β̃_i` on the cover groupoid, and the Dehn twists `D_{x_i}`,
//! `D_{y_i}`, `D_{z_i}`. Each acts on the arrows with index `i-1, i, i+1`
//! only. For `i = 1` the `i-1` rules act on the start arrows `a_0, b_0, c_0`
//! and for `i = k-1` the `i+1` rules act on the end arrows `a_k, b_k, c_k`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::groupoid::{
    Arrow, GroupoidKind, GroupoidPresentation, GroupoidWord, Letter, Object, Sheet,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingClass {
    presentation: GroupoidPresentation,
    object_map: BTreeMap<Object, Object>,
    images: BTreeMap<Arrow, GroupoidWord>,
}

impl MappingClass {
    /// Validates and normalizes a functor. Entries that map an object or an
    /// arrow to itself are dropped and images are stored reduced.
    pub fn new(
        presentation: GroupoidPresentation,
        object_map: BTreeMap<Object, Object>,
        images: BTreeMap<Arrow, GroupoidWord>,
    ) -> Result<Self> {
        let objects = presentation.objects();
        for (&from, &to) in &object_map {
            if !presentation.contains_object(from) {
                return Err(Error::UnknownObject(from.to_string()));
            }
            if !presentation.contains_object(to) {
                return Err(Error::UnknownObject(to.to_string()));
            }
            if from != to && presentation.is_boundary(from) {
                return Err(Error::InvalidMappingClass(format!(
                    "boundary object {from} must be fixed"
                )));
            }
        }
        let mapped = |o: Object| object_map.get(&o).copied().unwrap_or(o);
        let mut targets: Vec<Object> = objects.iter().map(|&o| mapped(o)).collect();
        targets.sort();
        targets.dedup();
        if targets.len() != objects.len() {
            return Err(Error::InvalidMappingClass("object map is not a bijection".into()));
        }
        let mut stored = BTreeMap::new();
        for (arrow, word) in images {
            let (s, t) = presentation
                .endpoints(arrow)
                .ok_or_else(|| Error::UnknownArrow(arrow.to_string()))?;
            if word.source() != mapped(s) || word.target() != mapped(t) {
                return Err(Error::InvalidMappingClass(format!(
                    "image of {arrow} runs {} -> {}, expected {} -> {}",
                    word.source(),
                    word.target(),
                    mapped(s),
                    mapped(t)
                )));
            }
            let word = word.reduce();
            if !is_single(&word, arrow) {
                stored.insert(arrow, word);
            }
        }
        // Arrows left implicit are fixed, so their endpoints must be too.
        for arrow in presentation.arrows() {
            if stored.contains_key(&arrow) {
                continue;
            }
            let (s, t) = presentation.endpoints(arrow).expect("own arrow");
            if mapped(s) != s || mapped(t) != t {
                return Err(Error::InvalidMappingClass(format!(
                    "no image given for {arrow} although its endpoints move"
                )));
            }
        }
        let object_map = object_map.into_iter().filter(|(a, b)| a != b).collect();
        Ok(Self {
            presentation,
            object_map,
            images: stored,
        })
    }

    pub fn identity(presentation: GroupoidPresentation) -> Self {
        Self {
            presentation,
            object_map: BTreeMap::new(),
            images: BTreeMap::new(),
        }
    }

    pub fn presentation(&self) -> GroupoidPresentation {
        self.presentation
    }

    pub fn is_identity(&self) -> bool {
        self.object_map.is_empty() && self.images.is_empty()
    }

    pub fn map_object(&self, obj: Object) -> Object {
        self.object_map.get(&obj).copied().unwrap_or(obj)
    }

    pub fn image(&self, arrow: Arrow) -> Result<GroupoidWord> {
        match self.images.get(&arrow) {
            Some(w) => Ok(w.clone()),
            None => self.presentation.arrow_word(arrow),
        }
    }

    /// Arrows whose image is not the arrow itself.
    pub fn support(&self) -> impl Iterator<Item = (&Arrow, &GroupoidWord)> {
        self.images.iter()
    }

    /// Image of a word, freely reduced.
    pub fn apply(&self, word: &GroupoidWord) -> Result<GroupoidWord> {
        let mut out = GroupoidWord::identity_at(self.map_object(word.source()));
        for &l in word.letters() {
            if !self.presentation.contains_arrow(l.arrow) {
                return Err(Error::UnknownArrow(l.arrow.to_string()));
            }
            let img = self.image(l.arrow)?;
            if l.inverse {
                out.extend_reducing(&img.inverse());
            } else {
                out.extend_reducing(&img);
            }
        }
        Ok(out)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &MappingClass) -> Result<MappingClass> {
        if self.presentation != other.presentation {
            return Err(Error::PresentationMismatch);
        }
        let mut object_map = BTreeMap::new();
        for o in self.presentation.objects() {
            let to = self.map_object(other.map_object(o));
            if to != o {
                object_map.insert(o, to);
            }
        }
        let mut images = BTreeMap::new();
        for arrow in self.presentation.arrows() {
            let img = self.apply(&other.image(arrow)?)?;
            if !is_single(&img, arrow) {
                images.insert(arrow, img);
            }
        }
        Ok(MappingClass {
            presentation: self.presentation,
            object_map,
            images,
        })
    }

    /// Inverse functor.
    ///
    /// Keeps pairs `(w, e)` with `self(e) = w`, starting from `(self(g), g)`
    /// for every arrow `g`, and shortens the `w` by multiplying with other
    /// pairs until every `w` is a single letter `h^{±1}`; then
    /// `self⁻¹(h) = e^{±1}`. The result is checked against the identity.
    pub fn inverse(&self) -> Result<MappingClass> {
        let pres = self.presentation;
        let mut pairs: Vec<(GroupoidWord, GroupoidWord)> = pres
            .arrows()
            .into_iter()
            .map(|a| Ok((self.image(a)?, pres.arrow_word(a)?)))
            .collect::<Result<_>>()?;

        while let Some((j, pair)) = find_shortening(&pairs) {
            pairs[j] = pair;
        }

        let mut object_map = BTreeMap::new();
        for (&from, &to) in &self.object_map {
            object_map.insert(to, from);
        }
        let mut images = BTreeMap::new();
        for (w, e) in pairs {
            let [letter] = w.letters() else {
                return Err(Error::NotInvertible(format!(
                    "stuck at image word `{w}` of length {}",
                    w.len()
                )));
            };
            let pre = if letter.inverse { e.inverse() } else { e };
            if images.insert(letter.arrow, pre).is_some() {
                return Err(Error::NotInvertible(format!(
                    "arrow {} is hit twice",
                    letter.arrow
                )));
            }
        }
        let inv = MappingClass::new(pres, object_map, images)?;
        if !self.compose(&inv)?.is_identity() || !inv.compose(self)?.is_identity() {
            return Err(Error::NotInvertible("candidate inverse failed the check".into()));
        }
        Ok(inv)
    }

    /// `self` composed with itself `n` times; negative `n` uses the inverse.
    pub fn power(&self, n: i64) -> Result<MappingClass> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = MappingClass::identity(self.presentation);
        for _ in 0..n.unsigned_abs() {
            acc = base.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Arrows on which two functors disagree, with both images.
    pub fn disagreements(&self, other: &MappingClass) -> Result<Vec<FailingArrow>> {
        if self.presentation != other.presentation {
            return Err(Error::PresentationMismatch);
        }
        let mut out = Vec::new();
        for arrow in self.presentation.arrows() {
            let lhs = self.image(arrow)?;
            let rhs = other.image(arrow)?;
            if lhs != rhs {
                out.push(FailingArrow { arrow, lhs, rhs });
            }
        }
        Ok(out)
    }

    pub fn objects_agree(&self, other: &MappingClass) -> bool {
        self.object_map == other.object_map
    }
}

fn is_single(word: &GroupoidWord, arrow: Arrow) -> bool {
    word.letters() == [Letter::pos(arrow)]
}

// One length-reducing move on the pair list, if any exists.
fn find_shortening(pairs: &[(GroupoidWord, GroupoidWord)]) -> Option<(usize, (GroupoidWord, GroupoidWord))> {
    for (j, (wj, ej)) in pairs.iter().enumerate() {
        if wj.len() <= 1 {
            continue;
        }
        for (l, (wl, el)) in pairs.iter().enumerate() {
            if l == j || wl.is_empty() {
                continue;
            }
            for flip in [false, true] {
                let (w, e) = if flip {
                    (wl.inverse(), el.inverse())
                } else {
                    (wl.clone(), el.clone())
                };
                if let (Ok(nw), Ok(ne)) = (w.concat(wj), e.concat(ej)) {
                    if nw.len() < wj.len() {
                        return Some((j, (nw, ne)));
                    }
                }
                if let (Ok(nw), Ok(ne)) = (wj.concat(&w), ej.concat(&e)) {
                    if nw.len() < wj.len() {
                        return Some((j, (nw, ne)));
                    }
                }
            }
        }
    }
    None
}

/// `f == g` as functors: same object map and the same reduced image on
/// every generating arrow.
pub fn mc_equal(f: &MappingClass, g: &MappingClass) -> bool {
    f == g
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailingArrow {
    pub arrow: Arrow,
    pub lhs: GroupoidWord,
    pub rhs: GroupoidWord,
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// One letter of a catalog image: sheet, index offset from `i`, inverse flag.
type Piece = (Sheet, i8, bool);
/// Arrow (sheet, offset from `i`) and the letters of its image.
type Rule = (Sheet, i8, &'static [Piece]);

use Sheet::{A, B, C};

const BETA: &[Rule] = &[
    (A, -1, &[(A, -1, false), (A, 0, false)]),
    (A, 0, &[(A, 0, true)]),
    (A, 1, &[(A, 0, false), (A, 1, false)]),
];

const BETA_TILDE: &[Rule] = &[
    (A, -1, &[(A, -1, false), (C, 0, false)]),
    (B, -1, &[(B, -1, false), (A, 0, false)]),
    (C, -1, &[(C, -1, false), (B, 0, false)]),
    (A, 0, &[(B, 0, true)]),
    (B, 0, &[(C, 0, true)]),
    (C, 0, &[(A, 0, true)]),
    (A, 1, &[(C, 0, false), (A, 1, false)]),
    (B, 1, &[(A, 0, false), (B, 1, false)]),
    (C, 1, &[(B, 0, false), (C, 1, false)]),
];

const DEHN_X: &[Rule] = &[
    (A, -1, &[(A, -1, false), (A, 0, false)]),
    (B, -1, &[(B, -1, false), (A, 0, false)]),
    (C, -1, &[(C, -1, false), (B, 0, false)]),
    (A, 0, &[(B, 0, true)]),
    (B, 0, &[(A, 0, true)]),
    (C, 0, &[(A, 0, true), (C, 0, false), (A, 0, true)]),
    (A, 1, &[(A, 0, false), (A, 1, false)]),
    (B, 1, &[(A, 0, false), (B, 1, false)]),
    (C, 1, &[(B, 0, false), (C, 1, false)]),
];

const DEHN_Y: &[Rule] = &[
    (A, -1, &[(A, -1, false), (A, 0, false)]),
    (B, -1, &[(B, -1, false), (C, 0, false)]),
    (C, -1, &[(C, -1, false), (A, 0, false)]),
    (A, 0, &[(C, 0, true)]),
    (B, 0, &[(A, 0, true), (B, 0, false), (A, 0, true)]),
    (C, 0, &[(A, 0, true)]),
    (A, 1, &[(A, 0, false), (A, 1, false)]),
    (B, 1, &[(C, 0, false), (B, 1, false)]),
    (C, 1, &[(A, 0, false), (C, 1, false)]),
];

const DEHN_Z: &[Rule] = &[
    (A, -1, &[(A, -1, false), (B, 0, false)]),
    (B, -1, &[(B, -1, false), (C, 0, false)]),
    (C, -1, &[(C, -1, false), (C, 0, false)]),
    (A, 0, &[(C, 0, true), (A, 0, false), (C, 0, true)]),
    (B, 0, &[(C, 0, true)]),
    (C, 0, &[(B, 0, true)]),
    (A, 1, &[(B, 0, false), (A, 1, false)]),
    (B, 1, &[(C, 0, false), (B, 1, false)]),
    (C, 1, &[(C, 0, false), (C, 1, false)]),
];

/// The catalog generators, all indexed by `1 ≤ i ≤ k-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// Half twist `β_i` on the base groupoid.
    Beta,
    /// Lifted half twist `β̃_i` on the cover groupoid.
    BetaTilde,
    DehnX,
    DehnY,
    DehnZ,
}

impl Generator {
    pub const COVER: [Generator; 4] = [
        Generator::BetaTilde,
        Generator::DehnX,
        Generator::DehnY,
        Generator::DehnZ,
    ];

    fn rules(self) -> &'static [Rule] {
        match self {
            Generator::Beta => BETA,
            Generator::BetaTilde => BETA_TILDE,
            Generator::DehnX => DEHN_X,
            Generator::DehnY => DEHN_Y,
            Generator::DehnZ => DEHN_Z,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Beta => "beta",
            Generator::BetaTilde => "beta_tilde",
            Generator::DehnX => "dehn_x",
            Generator::DehnY => "dehn_y",
            Generator::DehnZ => "dehn_z",
        }
    }

    pub fn presentation(self, k: usize) -> Result<GroupoidPresentation> {
        match self {
            Generator::Beta => GroupoidPresentation::base(k),
            _ => GroupoidPresentation::cover(k),
        }
    }

    /// The functor for index `i` on `k` branch points.
    pub fn build(self, i: usize, k: usize) -> Result<MappingClass> {
        let pres = self.presentation(k)?;
        if i < 1 || i + 1 > k {
            return Err(Error::OutOfRange {
                what: "generator index",
                value: i,
                min: 1,
                max: k.saturating_sub(1),
            });
        }
        let at = |sheet: Sheet, off: i8| Arrow::new(sheet, (i as isize + off as isize) as usize);
        let mut images = BTreeMap::new();
        for &(sheet, off, pieces) in self.rules() {
            let letters: Vec<Letter> = pieces
                .iter()
                .map(|&(s, o, inv)| Letter::new(at(s, o), inv))
                .collect();
            images.insert(at(sheet, off), pres.word(&letters)?);
        }
        let mut object_map = BTreeMap::new();
        object_map.insert(Object::Point(i), Object::Point(i + 1));
        object_map.insert(Object::Point(i + 1), Object::Point(i));
        MappingClass::new(pres, object_map, images)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn beta(i: usize, k: usize) -> Result<MappingClass> {
    Generator::Beta.build(i, k)
}

pub fn beta_tilde(i: usize, k: usize) -> Result<MappingClass> {
    Generator::BetaTilde.build(i, k)
}

pub fn dehn_x(i: usize, k: usize) -> Result<MappingClass> {
    Generator::DehnX.build(i, k)
}

pub fn dehn_y(i: usize, k: usize) -> Result<MappingClass> {
    Generator::DehnY.build(i, k)
}

pub fn dehn_z(i: usize, k: usize) -> Result<MappingClass> {
    Generator::DehnZ.build(i, k)
}

/// Applies `steps` one after another to `word` and returns every
/// intermediate image, the last being `(steps[n-1] ∘ … ∘ steps[0])(word)`.
pub fn trace(steps: &[&MappingClass], word: &GroupoidWord) -> Result<Vec<GroupoidWord>> {
    let mut out = Vec::with_capacity(steps.len());
    let mut cur = word.clone();
    for f in steps {
        cur = f.apply(&cur)?;
        out.push(cur.clone());
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Braid words
// ---------------------------------------------------------------------------

/// A word in catalog generators such as `s1 s2^-1 s1` (`s_i` is `β̃_i`),
/// optionally using `dx1`, `dy1`, `dz1` for the Dehn twists.
///
/// A word `g_1 g_2 ⋯ g_n` denotes `g_1 ∘ g_2 ∘ ⋯ ∘ g_n`: the rightmost
/// letter acts first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidLetter {
    pub generator: Generator,
    pub index: usize,
    pub inverse: bool,
}

impl BraidWord {
    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    /// The composed functor on the cover groupoid with `k` branch points.
    pub fn to_cover_class(&self, k: usize) -> Result<MappingClass> {
        self.compose_with(k, |g| g)
    }

    /// The composed functor on the base groupoid; only `s_i` letters allowed.
    pub fn to_base_class(&self, k: usize) -> Result<MappingClass> {
        if let Some(l) = self.letters.iter().find(|l| l.generator != Generator::BetaTilde) {
            return Err(Error::Parse {
                token: format!("{}{}", token_prefix(l.generator), l.index),
                reason: "only s_i letters act on the base groupoid",
            });
        }
        self.compose_with(k, |_| Generator::Beta)
    }

    fn compose_with(&self, k: usize, map: impl Fn(Generator) -> Generator) -> Result<MappingClass> {
        let g = map(Generator::BetaTilde);
        let mut acc = MappingClass::identity(g.presentation(k)?);
        for l in self.letters.iter().rev() {
            let mut f = map(l.generator).build(l.index, k)?;
            if l.inverse {
                f = f.inverse()?;
            }
            acc = acc.compose_left(&f)?;
        }
        Ok(acc)
    }
}

impl MappingClass {
    // `f ∘ self`
    fn compose_left(&self, f: &MappingClass) -> Result<MappingClass> {
        f.compose(self)
    }
}

fn token_prefix(g: Generator) -> &'static str {
    match g {
        Generator::Beta | Generator::BetaTilde => "s",
        Generator::DehnX => "dx",
        Generator::DehnY => "dy",
        Generator::DehnZ => "dz",
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let bad = |reason| Error::Parse {
                token: token.to_string(),
                reason,
            };
            let (body, inverse) = match token.split_once('^') {
                Some((b, "-1")) => (b, true),
                Some((b, "1")) => (b, false),
                Some(_) => return Err(bad("only the exponents 1 and -1 are allowed")),
                None => (token, false),
            };
            let (generator, num) = if let Some(n) = body.strip_prefix("dx") {
                (Generator::DehnX, n)
            } else if let Some(n) = body.strip_prefix("dy") {
                (Generator::DehnY, n)
            } else if let Some(n) = body.strip_prefix("dz") {
                (Generator::DehnZ, n)
            } else if let Some(n) = body.strip_prefix('s') {
                (Generator::BetaTilde, n)
            } else {
                return Err(bad("expected s<i>, dx<i>, dy<i> or dz<i>"));
            };
            let index: usize = num.parse().map_err(|_| bad("expected a generator index"))?;
            if index == 0 {
                return Err(bad("generator indices start at 1"));
            }
            letters.push(BraidLetter {
                generator,
                index,
                inverse,
            });
        }
        Ok(Self { letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", token_prefix(l.generator), l.index)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    /// `g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}`
    Braid,
    /// `g_i g_j = g_j g_i` for `|i - j| ≥ 2`
    Commute,
}

impl RelationKind {
    pub fn name(self) -> &'static str {
        match self {
            RelationKind::Braid => "braid",
            RelationKind::Commute => "commute",
        }
    }
}

/// Outcome of one relation at the functor level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub kind: RelationKind,
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub objects_agree: bool,
    pub failing_arrows: Vec<FailingArrow>,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.objects_agree && self.failing_arrows.is_empty()
    }
}

/// The two sides of every braid relation (`j = i + 1`) and far commutation
/// (`j ≥ i + 2`) among generators `1..=k-1`.
pub fn relation_sides<T>(
    k: usize,
    build: impl Fn(usize) -> Result<T>,
    compose: impl Fn(&T, &T) -> Result<T>,
) -> Result<Vec<(RelationKind, usize, usize, T, T)>> {
    let gens: Vec<T> = (1..k).map(&build).collect::<Result<_>>()?;
    let g = |i: usize| &gens[i - 1];
    let mut out = Vec::new();
    for i in 1..k.saturating_sub(1) {
        let lhs = compose(&compose(g(i), g(i + 1))?, g(i))?;
        let rhs = compose(&compose(g(i + 1), g(i))?, g(i + 1))?;
        out.push((RelationKind::Braid, i, i + 1, lhs, rhs));
    }
    for i in 1..k {
        for j in i + 2..k {
            let lhs = compose(g(i), g(j))?;
            let rhs = compose(g(j), g(i))?;
            out.push((RelationKind::Commute, i, j, lhs, rhs));
        }
    }
    Ok(out)
}

fn check_relations_for(generator: Generator, k: usize) -> Result<Vec<RelationCheck>> {
    relation_sides(k, |i| generator.build(i, k), |f, g| f.compose(g))?
        .into_iter()
        .map(|(kind, i, j, lhs, rhs)| {
            Ok(RelationCheck {
                kind,
                k,
                i,
                j,
                objects_agree: lhs.objects_agree(&rhs),
                failing_arrows: lhs.disagreements(&rhs)?,
            })
        })
        .collect()
}

/// Braid relations and far commutations of the lifts `β̃_i` on the cover
/// groupoid. Every relation is checked; failures carry their witnesses.
pub fn check_braid_relations(k: usize) -> Result<Vec<RelationCheck>> {
    check_relations_for(Generator::BetaTilde, k)
}

/// The same relations for the half twists `β_i` on the base groupoid.
pub fn check_base_braid_relations(k: usize) -> Result<Vec<RelationCheck>> {
    check_relations_for(Generator::Beta, k)
}

// ---------------------------------------------------------------------------
// Covering projection
// ---------------------------------------------------------------------------

/// The covering map on groupoids: `a_i, b_i, c_i ↦ a_i`, start objects to
/// `p_0`, end objects to `p_{k+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Projection {
    cover: GroupoidPresentation,
    base: GroupoidPresentation,
}

impl Projection {
    pub fn new(k: usize) -> Result<Self> {
        Ok(Self {
            cover: GroupoidPresentation::cover(k)?,
            base: GroupoidPresentation::base(k)?,
        })
    }

    pub fn cover(&self) -> GroupoidPresentation {
        self.cover
    }

    pub fn base(&self) -> GroupoidPresentation {
        self.base
    }

    pub fn object(&self, obj: Object) -> Object {
        match obj {
            Object::Point(i) => Object::Point(i),
            Object::Start(_) => Object::Point(0),
            Object::End(..) => Object::Point(self.cover.k() + 1),
        }
    }

    /// Letterwise image, freely reduced.
    pub fn word(&self, word: &GroupoidWord) -> Result<GroupoidWord> {
        let letters: Vec<Letter> = word
            .letters()
            .iter()
            .map(|l| Letter::new(Arrow::new(Sheet::A, l.arrow.index), l.inverse))
            .collect();
        Ok(self.base.word_from(self.object(word.source()), &letters)?.reduce())
    }

    /// Checks `project ∘ lift = base ∘ project` on every cover arrow, and on
    /// objects. Returns the arrows where it fails.
    pub fn equivariance_failures(
        &self,
        lift: &MappingClass,
        base: &MappingClass,
    ) -> Result<Vec<Arrow>> {
        if lift.presentation() != self.cover || base.presentation() != self.base {
            return Err(Error::PresentationMismatch);
        }
        debug_assert_eq!(self.cover.kind(), GroupoidKind::Cover);
        let mut out = Vec::new();
        for arrow in self.cover.arrows() {
            let g = self.cover.arrow_word(arrow)?;
            let up = self.word(&lift.apply(&g)?)?;
            let down = base.apply(&self.word(&g)?)?;
            if up != down {
                out.push(arrow);
            }
        }
        Ok(out)
    }
}

//! The fundamental group of the cover and the automorphisms induced on it.
//!
//! The spanning tree of the cover groupoid is the `c`-chain together with
//! the six boundary arrows:
//!
//! ```text
//! { a_0, b_0, c_0, c_1, …, c_{k-1}, a_k, b_k, c_k }
//! ```
//!
//! based at `c0.start`. Writing `C_i = c_0 c_1 ⋯ c_{i-1}` for the tree path
//! to `p_i`, the non-tree arrows give the generators
//!
//! ```text
//! a_i  ↦  C_i a_i c_i⁻¹ C_i⁻¹  =  y_i
//! b_i  ↦  C_i b_i c_i⁻¹ C_i⁻¹  =  x_i y_i
//! ```
//!
//! where `x_i = C_i b_i a_i⁻¹ C_i⁻¹` and `y_i = C_i a_i c_i⁻¹ C_i⁻¹`, so the
//! standard graph rewriting lands directly in the basis `{x_i, y_i}`.

mod decomposition;
mod tables;

pub use decomposition::{check_decomposition, DecompositionCheck, DecompositionOrder};
pub use tables::{check_pi1_tables, LineStatus, TableLineCheck};

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::groupoid::{Arrow, GroupoidPresentation, GroupoidWord, Letter, Object, Sheet};
use crate::mcg::{self, MappingClass, RelationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    X,
    Y,
}

/// A basis element `x_i` or `y_i`, `1 ≤ i ≤ k-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
}

impl Generator {
    pub const fn x(index: usize) -> Self {
        Self {
            kind: GenKind::X,
            index,
        }
    }

    pub const fn y(index: usize) -> Self {
        Self {
            kind: GenKind::Y,
            index,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            GenKind::X => 'x',
            GenKind::Y => 'y',
        };
        write!(f, "{c}{}", self.index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeLetter {
    pub generator: Generator,
    pub inverse: bool,
}

impl FreeLetter {
    fn inv(self) -> Self {
        Self {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word in the generators `x_i`, `y_i`. Every constructor
/// reduces, so structural equality is equality in the free group.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeGroupWord {
    letters: Vec<FreeLetter>,
}

impl FreeGroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: Generator) -> Self {
        Self {
            letters: alloc::vec![FreeLetter {
                generator: g,
                inverse: false
            }],
        }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = FreeLetter>) -> Self {
        let mut w = Self::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: FreeLetter) {
        if self.letters.last() == Some(&l.inv()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FreeGroupWord) -> FreeGroupWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> FreeGroupWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Self::identity(), |acc, _| acc.mul(&base))
    }

    pub fn conjugate_by(&self, c: &FreeGroupWord) -> FreeGroupWord {
        c.mul(self).mul(&c.inverse())
    }

    /// Substitutes `images` for each generator.
    pub fn substitute(&self, images: &impl Fn(Generator) -> FreeGroupWord) -> FreeGroupWord {
        let mut out = Self::identity();
        for l in &self.letters {
            let img = images(l.generator);
            out = out.mul(&if l.inverse { img.inverse() } else { img });
        }
        out
    }

    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.generator.index).max().unwrap_or(0)
    }
}

impl FromStr for FreeGroupWord {
    type Err = Error;

    /// Whitespace-separated letters `x3`, `y1^-1`, `x2^2`; `1` is the identity.
    fn from_str(text: &str) -> Result<Self> {
        let mut w = FreeGroupWord::identity();
        for token in text.split_whitespace().filter(|t| *t != "1") {
            let bad = |reason| Error::Parse {
                token: token.to_string(),
                reason,
            };
            let (body, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e.parse::<i64>().map_err(|_| bad("bad exponent"))?),
                None => (token, 1),
            };
            let kind = match body.chars().next() {
                Some('x') => GenKind::X,
                Some('y') => GenKind::Y,
                _ => return Err(bad("generators are x<i> or y<i>")),
            };
            let index: usize = body[1..].parse().map_err(|_| bad("expected a generator index"))?;
            if index == 0 {
                return Err(bad("generator indices start at 1"));
            }
            w = w.mul(&FreeGroupWord::generator(Generator { kind, index }).pow(exp));
        }
        Ok(w)
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.generator)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// The fixed spanning tree of the cover groupoid described in the module
/// docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpanningTree {
    presentation: GroupoidPresentation,
}

impl SpanningTree {
    pub fn new(k: usize) -> Result<Self> {
        Ok(Self {
            presentation: GroupoidPresentation::cover(k)?,
        })
    }

    pub fn k(&self) -> usize {
        self.presentation.k()
    }

    pub fn presentation(&self) -> GroupoidPresentation {
        self.presentation
    }

    pub fn base(&self) -> Object {
        Object::Start(Sheet::C)
    }

    pub fn is_tree_arrow(&self, arrow: Arrow) -> bool {
        arrow.sheet == Sheet::C || arrow.index == 0 || arrow.index == self.k()
    }

    pub fn tree_arrows(&self) -> Vec<Arrow> {
        self.presentation
            .arrows()
            .into_iter()
            .filter(|&a| self.is_tree_arrow(a))
            .collect()
    }

    pub fn rank(&self) -> usize {
        2 * (self.k() - 1)
    }

    /// `x_1, …, x_{k-1}, y_1, …, y_{k-1}`.
    pub fn generators(&self) -> Vec<Generator> {
        let n = self.k() - 1;
        (1..=n)
            .map(Generator::x)
            .chain((1..=n).map(Generator::y))
            .collect()
    }

    /// The tree path from the base object to `obj`.
    pub fn tree_path(&self, obj: Object) -> Result<GroupoidWord> {
        let k = self.k();
        let chain = |n: usize| -> Vec<Letter> {
            (0..n).map(|t| Letter::pos(Arrow::new(Sheet::C, t))).collect()
        };
        let letters = match obj {
            Object::Point(i) => chain(i),
            Object::Start(Sheet::C) => Vec::new(),
            Object::Start(s) => alloc::vec![Letter::pos(Arrow::new(Sheet::C, 0)), Letter::neg(Arrow::new(s, 0))],
            Object::End(s, _) => {
                let mut l = chain(k);
                l.push(Letter::pos(Arrow::new(s, k)));
                l
            }
        };
        if !self.presentation.contains_object(obj) {
            return Err(Error::UnknownObject(obj.to_string()));
        }
        Ok(self.presentation.word_from(self.base(), &letters)?.reduce())
    }

    /// The basis element for a non-tree arrow; identity for tree arrows.
    pub fn arrow_generator(&self, arrow: Arrow) -> FreeGroupWord {
        if self.is_tree_arrow(arrow) {
            return FreeGroupWord::identity();
        }
        let i = arrow.index;
        match arrow.sheet {
            Sheet::A => FreeGroupWord::generator(Generator::y(i)),
            Sheet::B => FreeGroupWord::generator(Generator::x(i)).mul(&FreeGroupWord::generator(Generator::y(i))),
            Sheet::C => unreachable!("c arrows are tree arrows"),
        }
    }

    // C_i w C_i⁻¹ for a word w from p_i to p_i.
    fn conjugated_loop(&self, i: usize, middle: &[Letter]) -> Result<GroupoidWord> {
        if i < 1 || i + 1 > self.k() {
            return Err(Error::OutOfRange {
                what: "loop index",
                value: i,
                min: 1,
                max: self.k() - 1,
            });
        }
        let c = self.tree_path(Object::Point(i))?;
        let m = self.presentation.word_from(Object::Point(i), middle)?;
        c.concat(&m)?.concat(&c.inverse())
    }

    /// `x_i = C_i b_i a_i⁻¹ C_i⁻¹`.
    pub fn x_loop(&self, i: usize) -> Result<GroupoidWord> {
        self.conjugated_loop(i, &[Letter::pos(Arrow::new(Sheet::B, i)), Letter::neg(Arrow::new(Sheet::A, i))])
    }

    /// `y_i = C_i a_i c_i⁻¹ C_i⁻¹`.
    pub fn y_loop(&self, i: usize) -> Result<GroupoidWord> {
        self.conjugated_loop(i, &[Letter::pos(Arrow::new(Sheet::A, i)), Letter::neg(Arrow::new(Sheet::C, i))])
    }

    /// `z_i = C_i c_i b_i⁻¹ C_i⁻¹`.
    pub fn z_loop(&self, i: usize) -> Result<GroupoidWord> {
        self.conjugated_loop(i, &[Letter::pos(Arrow::new(Sheet::C, i)), Letter::neg(Arrow::new(Sheet::B, i))])
    }

    pub fn basis_loop(&self, g: Generator) -> Result<GroupoidWord> {
        match g.kind {
            GenKind::X => self.x_loop(g.index),
            GenKind::Y => self.y_loop(g.index),
        }
    }
}

/// Rewrites a loop at the tree's base object in the basis `{x_i, y_i}`.
pub fn loop_to_basis(word: &GroupoidWord, tree: &SpanningTree) -> Result<FreeGroupWord> {
    if word.source() != tree.base() || word.target() != tree.base() {
        return Err(Error::NotALoop {
            base: tree.base().to_string(),
            start: word.source().to_string(),
            end: word.target().to_string(),
        });
    }
    let pres = tree.presentation();
    let mut out = FreeGroupWord::identity();
    for l in word.letters() {
        if !pres.contains_arrow(l.arrow) {
            return Err(Error::UnknownArrow(l.arrow.to_string()));
        }
        let g = tree.arrow_generator(l.arrow);
        out = out.mul(&if l.inverse { g.inverse() } else { g });
    }
    Ok(out)
}

/// An endomorphism of the free group on `x_1..x_{k-1}, y_1..y_{k-1}` given
/// by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi1Automorphism {
    k: usize,
    images: BTreeMap<Generator, FreeGroupWord>,
}

impl Pi1Automorphism {
    pub fn identity(k: usize) -> Self {
        Self::from_fn(k, FreeGroupWord::generator)
    }

    fn from_fn(k: usize, f: impl Fn(Generator) -> FreeGroupWord) -> Self {
        let n = k.saturating_sub(1);
        let images = (1..=n)
            .flat_map(|i| [Generator::x(i), Generator::y(i)])
            .map(|g| (g, f(g)))
            .collect();
        Self { k, images }
    }

    /// Builds an automorphism from explicit images; unlisted generators are fixed.
    pub fn from_images(k: usize, images: impl IntoIterator<Item = (Generator, FreeGroupWord)>) -> Result<Self> {
        let mut out = Self::identity(k);
        for (g, w) in images {
            if w.max_index() >= k || !out.images.contains_key(&g) {
                return Err(Error::OutOfRange {
                    what: "generator index",
                    value: g.index.max(w.max_index()),
                    min: 1,
                    max: k.saturating_sub(1),
                });
            }
            out.images.insert(g, w);
        }
        Ok(out)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn image(&self, g: Generator) -> &FreeGroupWord {
        &self.images[&g]
    }

    pub fn images(&self) -> impl Iterator<Item = (&Generator, &FreeGroupWord)> {
        self.images.iter()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .all(|(&g, w)| *w == FreeGroupWord::generator(g))
    }

    pub fn apply(&self, word: &FreeGroupWord) -> FreeGroupWord {
        word.substitute(&|g| self.images[&g].clone())
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Pi1Automorphism) -> Result<Pi1Automorphism> {
        if self.k != other.k {
            return Err(Error::SizeMismatch {
                expected: self.k,
                found: other.k,
            });
        }
        Ok(Self::from_fn(self.k, |g| self.apply(other.image(g))))
    }

    /// Generators on which two automorphisms differ.
    pub fn disagreements(&self, other: &Pi1Automorphism) -> Vec<(Generator, FreeGroupWord, FreeGroupWord)> {
        self.images
            .iter()
            .filter_map(|(&g, w)| {
                let v = other.images.get(&g).cloned().unwrap_or_else(|| FreeGroupWord::generator(g));
                (*w != v).then(|| (g, w.clone(), v))
            })
            .collect()
    }
}

pub fn compose_autos(f: &Pi1Automorphism, g: &Pi1Automorphism) -> Result<Pi1Automorphism> {
    f.compose(g)
}

/// The automorphism of `π₁` at the tree's base object induced by a functor
/// of the cover groupoid: each basis loop is pushed through `f` and rewritten.
pub fn induced_automorphism(f: &MappingClass, tree: &SpanningTree) -> Result<Pi1Automorphism> {
    if f.presentation() != tree.presentation() {
        return Err(Error::PresentationMismatch);
    }
    let mut images = BTreeMap::new();
    for g in tree.generators() {
        let image = f.apply(&tree.basis_loop(g)?)?;
        images.insert(g, loop_to_basis(&image, tree)?);
    }
    Ok(Pi1Automorphism { k: tree.k(), images })
}

/// A place where two functors differ on the full subgroupoid spanned by
/// the boundary objects: either a basis loop or the tree path to a boundary
/// object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryDisagreement {
    pub path: String,
    pub lhs: GroupoidWord,
    pub rhs: GroupoidWord,
}

/// Compares two functors on all morphisms between boundary objects. Both
/// must fix the boundary; the subgroupoid is generated by the basis loops
/// and the tree paths from the base to the other five boundary objects.
pub fn boundary_disagreements(
    f: &MappingClass,
    g: &MappingClass,
    tree: &SpanningTree,
) -> Result<Vec<BoundaryDisagreement>> {
    let pres = tree.presentation();
    if f.presentation() != pres || g.presentation() != pres {
        return Err(Error::PresentationMismatch);
    }
    let mut probes: Vec<(String, GroupoidWord)> = Vec::new();
    for gen in tree.generators() {
        probes.push((gen.to_string(), tree.basis_loop(gen)?));
    }
    for obj in pres.boundary_objects() {
        if obj != tree.base() {
            probes.push((alloc::format!("{} -> {}", tree.base(), obj), tree.tree_path(obj)?));
        }
    }
    let mut out = Vec::new();
    for (path, w) in probes {
        let lhs = f.apply(&w)?;
        let rhs = g.apply(&w)?;
        if lhs != rhs {
            out.push(BoundaryDisagreement { path, lhs, rhs });
        }
    }
    Ok(out)
}

/// Outcome of one relation among the induced automorphisms of the `β̃_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi1RelationCheck {
    pub kind: RelationKind,
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub failing_generators: Vec<(Generator, FreeGroupWord, FreeGroupWord)>,
}

impl Pi1RelationCheck {
    pub fn holds(&self) -> bool {
        self.failing_generators.is_empty()
    }
}

/// Braid relations and far commutations for the automorphisms induced by
/// the lifts `β̃_i`.
pub fn check_pi1_braid_relations(k: usize) -> Result<Vec<Pi1RelationCheck>> {
    let tree = SpanningTree::new(k)?;
    let sides = mcg::relation_sides(
        k,
        |i| induced_automorphism(&mcg::beta_tilde(i, k)?, &tree),
        |f, g| f.compose(g),
    )?;
    Ok(sides
        .into_iter()
        .map(|(kind, i, j, lhs, rhs)| Pi1RelationCheck {
            kind,
            k,
            i,
            j,
            failing_generators: lhs.disagreements(&rhs),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(s: &str) -> FreeGroupWord {
        s.parse().unwrap()
    }

    #[test]
    fn free_word_basics() {
        assert_eq!(fw("x1 x1^-1"), FreeGroupWord::identity());
        assert_eq!(fw("x1^2 y1"), fw("x1 x1 y1"));
        assert_eq!(fw("x1^-2").to_string(), "x1^-1 x1^-1");
        assert_eq!(fw("1").to_string(), "1");
        assert_eq!(fw("x1 y2").inverse(), fw("y2^-1 x1^-1"));
        assert!("z1".parse::<FreeGroupWord>().is_err());
        assert!("x0".parse::<FreeGroupWord>().is_err());
    }

    #[test]
    fn tree_shape() {
        for k in 1..=12 {
            let t = SpanningTree::new(k).unwrap();
            let pres = t.presentation();
            assert_eq!(t.tree_arrows().len(), pres.objects().len() - 1);
            assert_eq!(pres.arrows().len() - t.tree_arrows().len(), t.rank());
            for o in pres.objects() {
                let p = t.tree_path(o).unwrap();
                assert_eq!(p.source(), t.base());
                assert_eq!(p.target(), o);
                assert!(p.letters().iter().all(|l| t.is_tree_arrow(l.arrow)));
            }
        }
    }

    #[test]
    fn loop_examples() {
        let k = 4;
        let t = SpanningTree::new(k).unwrap();
        for i in 1..k {
            assert_eq!(loop_to_basis(&t.x_loop(i).unwrap(), &t).unwrap(), FreeGroupWord::generator(Generator::x(i)));
            assert_eq!(loop_to_basis(&t.y_loop(i).unwrap(), &t).unwrap(), FreeGroupWord::generator(Generator::y(i)));
            let z = loop_to_basis(&t.z_loop(i).unwrap(), &t).unwrap();
            assert_eq!(z, fw(&alloc::format!("y{i}^-1 x{i}^-1")));
        }
        let e = t.presentation().identity(t.base()).unwrap();
        assert!(loop_to_basis(&e, &t).unwrap().is_identity());
        let not_loop = t.presentation().parse_word("c0 a1").unwrap();
        assert!(matches!(loop_to_basis(&not_loop, &t), Err(Error::NotALoop { .. })));
    }

    #[test]
    fn induced_beta_tilde() {
        let k = 4;
        let t = SpanningTree::new(k).unwrap();
        let a = induced_automorphism(&mcg::beta_tilde(2, k).unwrap(), &t).unwrap();
        assert_eq!(*a.image(Generator::x(2)), fw("x2 y2"));
        assert_eq!(*a.image(Generator::y(2)), fw("x2^-1"));
        assert_eq!(*a.image(Generator::x(3)), fw("x2 y2 x3 x2^-1"));
        let d = induced_automorphism(&mcg::dehn_y(2, k).unwrap(), &t).unwrap();
        assert_eq!(*d.image(Generator::x(2)), fw("x2 y2^-1"));
        let id = MappingClass::identity(t.presentation());
        assert!(induced_automorphism(&id, &t).unwrap().is_identity());
    }

    #[test]
    fn compose_autos_examples() {
        let k = 3;
        let t = SpanningTree::new(k).unwrap();
        let b = mcg::beta_tilde(1, k).unwrap();
        let f = induced_automorphism(&b, &t).unwrap();
        let finv = induced_automorphism(&b.inverse().unwrap(), &t).unwrap();
        assert_eq!(compose_autos(&Pi1Automorphism::identity(k), &f).unwrap(), f);
        assert!(compose_autos(&f, &finv).unwrap().is_identity());
        assert!(compose_autos(&f, &Pi1Automorphism::identity(4)).is_err());
        assert!(check_pi1_braid_relations(k).unwrap().iter().all(|c| c.holds()));
    }

    #[test]
    fn from_images_bounds() {
        assert!(Pi1Automorphism::from_images(3, [(Generator::x(1), fw("x2"))]).is_ok());
        assert!(Pi1Automorphism::from_images(3, [(Generator::x(1), fw("x3"))]).is_err());
        assert!(Pi1Automorphism::from_images(3, [(Generator::y(3), fw("x1"))]).is_err());
    }
}

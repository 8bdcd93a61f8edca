//! Branched 3-fold covers of the disk and the lifted braid action on their
//! fundamental groupoid.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! * [`perm`] and [`monodromy`]: sheet permutations, monodromy data and the
//!   topology (Euler characteristic, boundary count, genus) of the cover;
//! * [`groupoid`]: free groupoids on the base disk and on the cover, with
//!   composable signed words and free reduction;
//! * [`mcg`]: mapping classes as self-functors of those groupoids, the
//!   catalog of half twists, their lifts and the Dehn twists `D_x`, `D_y`,
//!   `D_z`, and braid relation checks;
//! * [`pi1`]: the spanning-tree basis `{x_i, y_i}` of the cover's
//!   fundamental group, induced automorphisms, and the table and
//!   decomposition checks.
//!
//! Composition convention, used everywhere: `f ∘ g` (and `compose(f, g)`)
//! applies `g` first, then `f`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod groupoid;
pub mod mcg;
pub mod monodromy;
pub mod perm;
pub mod pi1;

pub use error::{Error, Result};
pub use groupoid::{Arrow, GroupoidKind, GroupoidPresentation, GroupoidWord, Letter, Object, Sheet};
pub use mcg::{BraidWord, MappingClass};
pub use monodromy::{MonodromySpec, SurfaceInvariants};
pub use perm::Permutation;
pub use pi1::{FreeGroupWord, Generator, Pi1Automorphism, SpanningTree};

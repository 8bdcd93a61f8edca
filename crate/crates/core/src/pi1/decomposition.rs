//! `β̃_i` as a product of two inverse Dehn twists.
//!
//! Both products of `D_{y_i}⁻¹` and `D_{z_i}⁻¹` are compared with `β̃_i` at
//! three strengths:
//!
//! * `π₁`: the induced automorphisms at the base object agree;
//! * boundary: the functors agree on every morphism between boundary
//!   objects, which is what equality in the mapping class group of the
//!   surface (boundary fixed pointwise) amounts to;
//! * strict: the functors agree on every object and generating arrow of the
//!   cover groupoid, branch points included.
//!
//! The Dehn twist functors each swap `p_i` and `p_{i+1}`, so either product
//! fixes both points while `β̃_i` swaps them: the strict comparison fails
//! for both orders and only the first two decide the result.

use alloc::vec::Vec;

use super::{
    boundary_disagreements, induced_automorphism, BoundaryDisagreement, FreeGroupWord, Generator,
    SpanningTree,
};
use crate::error::{Error, Result};
use crate::mcg::{self, FailingArrow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecompositionOrder {
    /// `D_{z_i}⁻¹ ∘ D_{y_i}⁻¹`: `D_{y_i}⁻¹` acts first.
    ZAfterY,
    /// `D_{y_i}⁻¹ ∘ D_{z_i}⁻¹`: `D_{z_i}⁻¹` acts first.
    YAfterZ,
}

impl DecompositionOrder {
    pub const BOTH: [DecompositionOrder; 2] = [DecompositionOrder::ZAfterY, DecompositionOrder::YAfterZ];

    pub fn name(self) -> &'static str {
        match self {
            DecompositionOrder::ZAfterY => "dz^-1 . dy^-1",
            DecompositionOrder::YAfterZ => "dy^-1 . dz^-1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionCheck {
    pub k: usize,
    pub i: usize,
    pub order: DecompositionOrder,
    pub pi1_failures: Vec<(Generator, FreeGroupWord, FreeGroupWord)>,
    pub boundary_failures: Vec<BoundaryDisagreement>,
    pub objects_agree: bool,
    pub functor_failures: Vec<FailingArrow>,
}

impl DecompositionCheck {
    pub fn pi1_holds(&self) -> bool {
        self.pi1_failures.is_empty()
    }

    pub fn boundary_holds(&self) -> bool {
        self.boundary_failures.is_empty()
    }

    pub fn strict_holds(&self) -> bool {
        self.objects_agree && self.functor_failures.is_empty()
    }

    /// Equality as mapping classes of the surface.
    pub fn holds(&self) -> bool {
        self.pi1_holds() && self.boundary_holds()
    }
}

/// Runs both composition orders for every `1 ≤ i ≤ k-1`.
pub fn check_decomposition(k: usize) -> Result<Vec<DecompositionCheck>> {
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
    for i in 1..k {
        let beta = mcg::beta_tilde(i, k)?;
        let beta_pi1 = induced_automorphism(&beta, &tree)?;
        let inv_y = mcg::dehn_y(i, k)?.inverse()?;
        let inv_z = mcg::dehn_z(i, k)?.inverse()?;
        for order in DecompositionOrder::BOTH {
            let product = match order {
                DecompositionOrder::ZAfterY => inv_z.compose(&inv_y)?,
                DecompositionOrder::YAfterZ => inv_y.compose(&inv_z)?,
            };
            let product_pi1 = induced_automorphism(&product, &tree)?;
            out.push(DecompositionCheck {
                k,
                i,
                order,
                pi1_failures: beta_pi1.disagreements(&product_pi1),
                boundary_failures: boundary_disagreements(&beta, &product, &tree)?,
                objects_agree: beta.objects_agree(&product),
                functor_failures: beta.disagreements(&product)?,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_orders() {
        let checks = check_decomposition(3).unwrap();
        assert_eq!(checks.len(), 4);
        for c in &checks {
            match c.order {
                DecompositionOrder::ZAfterY => assert!(c.holds()),
                DecompositionOrder::YAfterZ => {
                    assert!(!c.holds());
                    assert!(!c.pi1_failures.is_empty());
                }
            }
            assert!(!c.objects_agree);
            assert!(!c.strict_holds());
        }
    }

    #[test]
    fn k2_holds() {
        let checks = check_decomposition(2).unwrap();
        let c = checks.iter().find(|c| c.order == DecompositionOrder::ZAfterY).unwrap();
        assert!(c.holds());
        assert!(check_decomposition(1).is_err());
    }
}

//! Tropical dot-product representations and the constructions that build
//! them. Every constructor returns a [`Representation`] that
//! [`crate::verifier::verify`] can check against its target graph.

mod caterpillar;
mod covers;
mod generic;
mod joins;
mod recognize;

pub use caterpillar::{caterpillar_2dim, forest_of_caterpillars};
pub use covers::{maxplus_from_cover, minplus_from_intersection, threshold_1dim};
pub use generic::{
    maxplus_generic, maxplus_generic_with, minplus_extend_vertex, minplus_from_induced_threshold,
    minplus_generic, minplus_generic_with, MaxPlusVariant, MinPlusVariant,
};
pub use joins::{cycle_3dim, join_clique, multipartite_kdim};
pub use recognize::{
    caterpillar_layout, caterpillar_rep_for, cycle_order, cycle_rep_for, multipartite_parts,
    multipartite_rep_for,
};

use alloc::vec::Vec;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::tropical::{trop_dot, Algebra, Rational, TropicalValue, TropicalVector};

/// `f: V → T^k` together with its algebra and threshold `t > 0`:
/// `uv ∈ E ⇔ f(u) ⊙ f(v) ≥ t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    algebra: Algebra,
    threshold: Rational,
    dim: usize,
    vectors: Vec<TropicalVector>,
}

impl Representation {
    /// Checks: `t > 0`, `dim ≥ 1`, all vectors of length `dim`, and no
    /// infinity foreign to the algebra (`-inf` in min-plus, `+inf` in
    /// max-plus).
    pub fn new(
        algebra: Algebra,
        threshold: Rational,
        dim: usize,
        vectors: Vec<TropicalVector>,
    ) -> Result<Self> {
        if !threshold.is_positive() {
            return Err(Error::InvalidRepresentation("threshold must be positive".into()));
        }
        if dim == 0 {
            return Err(Error::InvalidRepresentation("dimension must be at least 1".into()));
        }
        let foreign = algebra.dual().zero();
        for (v, vec) in vectors.iter().enumerate() {
            if vec.dim() != dim {
                return Err(Error::InvalidRepresentation(alloc::format!(
                    "vertex {v} has dimension {} instead of {dim}",
                    vec.dim()
                )));
            }
            if vec.contains(&foreign) {
                return Err(Error::InvalidRepresentation(alloc::format!(
                    "vertex {v} uses {foreign}, which is not allowed in {algebra}"
                )));
            }
        }
        Ok(Representation {
            algebra,
            threshold,
            dim,
            vectors,
        })
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn threshold(&self) -> &Rational {
        &self.threshold
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of represented vertices.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[TropicalVector] {
        &self.vectors
    }

    pub fn vector(&self, v: usize) -> &TropicalVector {
        &self.vectors[v]
    }

    pub fn dot(&self, u: usize, v: usize) -> TropicalValue {
        trop_dot(&self.vectors[u], &self.vectors[v], self.algebra)
            .expect("validated representations have uniform dimension and one kind of infinity")
    }

    /// The same vectors read in the other algebra. Only meaningful for
    /// `dim == 1`, where min and max coincide.
    pub fn with_algebra(&self, algebra: Algebra) -> Result<Self> {
        Representation::new(algebra, self.threshold.clone(), self.dim, self.vectors.clone())
    }

    /// Moves vector `i` to vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.len() {
            return Err(Error::BadParameter("ordering length differs from vertex count".into()));
        }
        let mut slots: Vec<Option<TropicalVector>> = alloc::vec![None; self.len()];
        for (i, &target) in order.iter().enumerate() {
            let slot = slots
                .get_mut(target)
                .ok_or_else(|| Error::BadParameter("ordering is not a permutation".into()))?;
            if slot.replace(self.vectors[i].clone()).is_some() {
                return Err(Error::BadParameter("ordering is not a permutation".into()));
            }
        }
        let vectors = slots.into_iter().map(|v| v.expect("filled")).collect();
        Representation::new(self.algebra, self.threshold.clone(), self.dim, vectors)
    }
}

/// Multiplies every finite entry by `new_t / t`, moving the representation to
/// threshold `new_t`.
pub fn rescale(rep: &Representation, new_t: &Rational) -> Result<Representation> {
    if !new_t.is_positive() {
        return Err(Error::BadParameter("threshold must be positive".into()));
    }
    let factor = new_t / rep.threshold();
    let vectors = rep.vectors().iter().map(|v| v.scale(&factor)).collect();
    Representation::new(rep.algebra(), new_t.clone(), rep.dim(), vectors)
}

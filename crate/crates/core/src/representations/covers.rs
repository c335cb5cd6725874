//! Representations read off threshold covers: one coordinate per part, each
//! coordinate holding that part's threshold weights.

use alloc::vec::Vec;

use crate::cover::{CoverMode, CoverSolution};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::threshold::threshold_weights;
use crate::tropical::{int, Algebra, Rational, TropicalValue, TropicalVector};

use super::Representation;

/// One-dimensional representation of a threshold graph. Valid in both
/// algebras since min and max of one value agree.
pub fn threshold_1dim(g: &Graph, t: &Rational, algebra: Algebra) -> Result<Representation> {
    let w = threshold_weights(g, t)?;
    let vectors = w
        .weights
        .into_iter()
        .map(|x| TropicalVector::new(alloc::vec![TropicalValue::Finite(x)]))
        .collect::<Result<Vec<_>>>()?;
    Representation::new(algebra, t.clone(), 1, vectors)
}

fn from_parts(g: &Graph, cover: &CoverSolution, algebra: Algebra) -> Result<Representation> {
    if cover.parts.is_empty() {
        return Err(Error::InvalidCover("a representation needs at least one part".into()));
    }
    let t = int(1);
    let columns = cover
        .part_graphs(g.n())?
        .iter()
        .map(|p| threshold_weights(p, &t).map(|w| w.weights))
        .collect::<Result<Vec<_>>>()?;
    let vectors = (0..g.n())
        .map(|v| {
            TropicalVector::from_rationals(columns.iter().map(|col| col[v].clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(algebra, t, cover.size(), vectors)
}

/// Max-plus representation from a union cover: `uv` is an edge iff some
/// part's weights reach `t`.
pub fn maxplus_from_cover(g: &Graph, cover: &CoverSolution) -> Result<Representation> {
    if cover.mode != CoverMode::Union {
        return Err(Error::InvalidCover("expected a union cover".into()));
    }
    cover.validate(g)?;
    from_parts(g, cover, Algebra::MaxPlus)
}

/// Min-plus representation from an intersection cover: `uv` is an edge iff
/// every part's weights reach `t`.
pub fn minplus_from_intersection(g: &Graph, cover: &CoverSolution) -> Result<Representation> {
    if cover.mode != CoverMode::Intersection {
        return Err(Error::InvalidCover("expected an intersection cover".into()));
    }
    cover.validate(g)?;
    from_parts(g, cover, Algebra::MinPlus)
}

//! Dimension-`n` representations that exist for every graph, and the
//! one-vertex extension step.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::ExactLimits;
use crate::threshold::max_induced_threshold;
use crate::tropical::{int, Algebra, Rational, TropicalValue, TropicalVector};
use crate::verifier::verify;

use super::{threshold_1dim, Representation};

/// Entry sets for the upper-triangular min-plus construction. Vertex `v_i`
/// gets `diag` at coordinate `i`, `+inf` below it, and above it `edge` or
/// `non_edge` depending on adjacency with `v_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MinPlusVariant {
    /// `diag = t/6`, `edge = 7t/6`, `non_edge = 2t/3`: every edge dot is
    /// exactly `4t/3` and every non-edge dot exactly `5t/6`.
    #[default]
    Balanced,
    /// `diag = t/3`, `edge = t`, `non_edge = t/2`. Valid, but an edge dot
    /// drops to `t` when some later vertex is adjacent to neither endpoint.
    Simple,
}

impl MinPlusVariant {
    fn entries(self, t: &Rational) -> (Rational, Rational, Rational) {
        let frac = |n: i64, d: i64| t * int(n) / int(d);
        match self {
            MinPlusVariant::Balanced => (frac(1, 6), frac(7, 6), frac(2, 3)),
            MinPlusVariant::Simple => (frac(1, 3), t.clone(), frac(1, 2)),
        }
    }
}

/// Entry sets for the diagonal max-plus construction: `diag` at the vertex's
/// own coordinate, `neighbour` at each neighbour's coordinate, 0 elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MaxPlusVariant {
    /// `diag = 2t/3`, `neighbour = t/3`: edge dot `t`, non-edge dot `≤ 2t/3`.
    #[default]
    Repaired,
    /// `diag = t`, `neighbour = t/3`. Broken: two non-adjacent vertices
    /// reach `t + 0 = t` on their own coordinates.
    Simple,
}

fn check_t(t: &Rational) -> Result<()> {
    if !t.is_positive() {
        return Err(Error::BadParameter("threshold must be positive".into()));
    }
    Ok(())
}

fn check_nonempty(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::BadParameter("graph has no vertices".into()));
    }
    Ok(())
}

/// Dimension-`n` min-plus representation of any graph.
pub fn minplus_generic(g: &Graph, t: &Rational) -> Result<Representation> {
    minplus_generic_with(g, t, MinPlusVariant::default())
}

pub fn minplus_generic_with(
    g: &Graph,
    t: &Rational,
    variant: MinPlusVariant,
) -> Result<Representation> {
    check_t(t)?;
    check_nonempty(g)?;
    let n = g.n();
    let (diag, edge, non_edge) = variant.entries(t);
    let vectors = (0..n)
        .map(|i| {
            let entries = (0..n).map(|j| match j.cmp(&i) {
                core::cmp::Ordering::Less => TropicalValue::PosInf,
                core::cmp::Ordering::Equal => TropicalValue::Finite(diag.clone()),
                core::cmp::Ordering::Greater if g.has_edge(i, j) => TropicalValue::Finite(edge.clone()),
                core::cmp::Ordering::Greater => TropicalValue::Finite(non_edge.clone()),
            });
            TropicalVector::new(entries.collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(Algebra::MinPlus, t.clone(), n, vectors)
}

/// Dimension-`n` max-plus representation of any graph.
pub fn maxplus_generic(g: &Graph, t: &Rational) -> Result<Representation> {
    maxplus_generic_with(g, t, MaxPlusVariant::default())
}

pub fn maxplus_generic_with(
    g: &Graph,
    t: &Rational,
    variant: MaxPlusVariant,
) -> Result<Representation> {
    check_t(t)?;
    check_nonempty(g)?;
    let n = g.n();
    let diag = match variant {
        MaxPlusVariant::Repaired => t * int(2) / int(3),
        MaxPlusVariant::Simple => t.clone(),
    };
    let neighbour = t / int(3);
    let vectors = (0..n)
        .map(|i| {
            let entries = (0..n).map(|j| {
                TropicalValue::Finite(if i == j {
                    diag.clone()
                } else if g.has_edge(i, j) {
                    neighbour.clone()
                } else {
                    int(0)
                })
            });
            TropicalVector::new(entries.collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(Algebra::MaxPlus, t.clone(), n, vectors)
}

/// Given a valid min-plus representation of `g − v` (vertices in `g`'s
/// order with `v` skipped), adds one coordinate: `t` for neighbours of `v`,
/// `t/2` for the rest, and maps `v` to `(+inf, …, +inf, t/3)`.
pub fn minplus_extend_vertex(rep: &Representation, g: &Graph, v: usize) -> Result<Representation> {
    if rep.algebra() != Algebra::MinPlus {
        return Err(Error::InvalidInputRepresentation("expected a min-plus representation".into()));
    }
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let rest = g.remove_vertex(v)?;
    let report = verify(&rest, rep).map_err(|e| Error::InvalidInputRepresentation(e.to_string()))?;
    if !report.valid {
        return Err(Error::InvalidInputRepresentation(alloc::format!(
            "not a representation of the graph minus vertex {v} ({} violations)",
            report.violations.len()
        )));
    }
    let t = rep.threshold();
    let k = rep.dim();
    let mut vectors = Vec::with_capacity(g.n());
    for u in 0..g.n() {
        if u == v {
            let mut entries = alloc::vec![TropicalValue::PosInf; k];
            entries.push(TropicalValue::Finite(t / int(3)));
            vectors.push(TropicalVector::new(entries)?);
        } else {
            let old = if u < v { u } else { u - 1 };
            let last = if g.has_edge(u, v) { t.clone() } else { t / int(2) };
            vectors.push(rep.vector(old).extended(TropicalValue::Finite(last)));
        }
    }
    Representation::new(Algebra::MinPlus, t.clone(), k + 1, vectors)
}

/// Min-plus representation of dimension `n − k + 1`, where `k` is the size of
/// the largest induced threshold subgraph: a 1-dimensional representation of
/// that subgraph, then one extension per remaining vertex.
pub fn minplus_from_induced_threshold(
    g: &Graph,
    t: &Rational,
    limits: &ExactLimits,
) -> Result<Representation> {
    check_t(t)?;
    let core = max_induced_threshold(g, limits.induced_vertices)?;
    let mut order = core.clone();
    let mut rep = threshold_1dim(&g.induced(&order)?, t, Algebra::MinPlus)?;
    for w in (0..g.n()).filter(|w| !core.contains(w)) {
        order.push(w);
        let h = g.induced(&order)?;
        rep = minplus_extend_vertex(&rep, &h, order.len() - 1)?;
    }
    rep.permuted(&order)
}

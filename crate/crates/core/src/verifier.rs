//! Ground truth: realize graphs from vectors, check representations, split
//! them into per-coordinate threshold slices, and compute both tropical
//! dimensions exactly through threshold covers.

use alloc::vec::Vec;

use crate::cover::{fallback_cover, theta, theta_bounds, CoverSolution};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::isomorphism_classes;
use crate::limits::ExactLimits;
use crate::representations::{
    caterpillar_rep_for, cycle_rep_for, maxplus_from_cover, minplus_from_induced_threshold,
    minplus_from_intersection, multipartite_rep_for, threshold_1dim, Representation,
};
use crate::threshold::is_threshold;
use crate::tropical::{int, trop_dot, Algebra, Rational, TropicalValue, TropicalVector};

/// The graph with `uv ∈ E ⇔ f(u) ⊙ f(v) ≥ t`.
pub fn realize_graph(vectors: &[TropicalVector], t: &Rational, alg: Algebra) -> Result<Graph> {
    if let Some(first) = vectors.first() {
        if let Some(bad) = vectors.iter().find(|v| v.dim() != first.dim()) {
            return Err(Error::DimensionMismatch {
                left: first.dim(),
                right: bad.dim(),
            });
        }
    }
    let mut g = Graph::empty(vectors.len());
    for u in 0..vectors.len() {
        for v in u + 1..vectors.len() {
            if trop_dot(&vectors[u], &vectors[v], alg)?.reaches(t) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Edge,
    NonEdge,
}

/// A pair whose dot product disagrees with the target graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub dot: TropicalValue,
    pub expected: Relation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Checks every pair of `rep` against `g`.
pub fn verify(g: &Graph, rep: &Representation) -> Result<VerificationReport> {
    if rep.len() != g.n() {
        return Err(Error::VertexMismatch {
            rep: rep.len(),
            graph: g.n(),
        });
    }
    let t = rep.threshold();
    let mut violations = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let dot = rep.dot(u, v);
            let edge = g.has_edge(u, v);
            if dot.reaches(t) != edge {
                violations.push(Violation {
                    u,
                    v,
                    dot,
                    expected: if edge { Relation::Edge } else { Relation::NonEdge },
                });
            }
        }
    }
    Ok(VerificationReport {
        valid: violations.is_empty(),
        violations,
    })
}

/// One threshold graph per coordinate `j`: `uv` is an edge when
/// `f(u)_j + f(v)_j ≥ t`. A `+inf` entry reaches everything, `-inf` nothing.
/// Max-plus realizes the union of the slices, min-plus the intersection.
pub fn project_slices(rep: &Representation) -> Vec<Graph> {
    let t = rep.threshold();
    (0..rep.dim())
        .map(|j| {
            let mut g = Graph::empty(rep.len());
            for u in 0..rep.len() {
                for v in u + 1..rep.len() {
                    let a = &rep.vector(u).entries()[j];
                    let b = &rep.vector(v).entries()[j];
                    let reached = match (a, b) {
                        (TropicalValue::NegInf, _) | (_, TropicalValue::NegInf) => false,
                        (TropicalValue::PosInf, _) | (_, TropicalValue::PosInf) => true,
                        (TropicalValue::Finite(x), TropicalValue::Finite(y)) => x + y >= *t,
                    };
                    if reached {
                        g.add_edge(u, v).expect("in range");
                    }
                }
            }
            g
        })
        .collect()
}

/// How a [`DimensionResult`] was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimensionMethod {
    Exact,
    /// Inclusive `(lower, upper)` ranges; the reported values are the
    /// upper ends, achieved by the witnesses.
    BoundsOnly {
        min_plus: (usize, usize),
        max_plus: (usize, usize),
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionResult {
    pub rho_min_plus: usize,
    pub rho_max_plus: usize,
    pub min_plus_witness: Representation,
    pub max_plus_witness: Representation,
    pub method: DimensionMethod,
}

impl DimensionResult {
    pub fn is_exact(&self) -> bool {
        self.method == DimensionMethod::Exact
    }
}

/// `Θ(h)` as a union cover plus its `(lower, upper)` range, degrading to
/// bounds and a heuristic cover when the exact search is over the limits.
fn cover_with_range(h: &Graph, limits: &ExactLimits) -> Result<(CoverSolution, usize, usize)> {
    match theta(h, limits) {
        Ok(cover) => {
            let k = cover.size();
            Ok((cover, k, k))
        }
        Err(Error::TooLarge { .. }) => {
            let cover = fallback_cover(h, limits);
            let lower = theta_bounds(h, limits).map_or(2, |b| b.lower);
            Ok((cover.clone(), lower.min(cover.size()), cover.size()))
        }
        Err(e) => Err(e),
    }
}

/// Both tropical dimensions of `g` with witnesses:
/// `ρ_T̂(g) = Θ(g)` and `ρ_T(g) = Θ̂(g) = Θ(ḡ)`, each at least 1.
///
/// Over the exact limits each side degrades to a range whose upper end is
/// the smallest witness found (heuristic cover, or on the min-plus side a
/// caterpillar, multipartite, cycle or induced-threshold construction).
pub fn rho(g: &Graph, limits: &ExactLimits) -> Result<DimensionResult> {
    let one = int(1);
    if is_threshold(g).is_threshold() {
        return Ok(DimensionResult {
            rho_min_plus: 1,
            rho_max_plus: 1,
            min_plus_witness: threshold_1dim(g, &one, Algebra::MinPlus)?,
            max_plus_witness: threshold_1dim(g, &one, Algebra::MaxPlus)?,
            method: DimensionMethod::Exact,
        });
    }
    // Neither g nor its complement is threshold, so both covers have at
    // least two parts.
    let (union, max_lo, max_hi) = cover_with_range(g, limits)?;
    let (co_union, min_lo, min_hi) = cover_with_range(&g.complement(), limits)?;
    let intersection = co_union.complemented(g.n())?;
    let mut min_plus_witness = minplus_from_intersection(g, &intersection)?;
    let mut min_hi = min_hi;
    if min_lo < min_hi {
        // Structured constructions can beat the heuristic cover.
        let candidates = [
            caterpillar_rep_for(g, 2),
            multipartite_rep_for(g),
            cycle_rep_for(g),
            minplus_from_induced_threshold(g, &one, limits),
        ];
        for rep in candidates.into_iter().flatten() {
            if rep.dim() < min_hi {
                min_hi = rep.dim();
                min_plus_witness = rep;
            }
        }
    }
    let method = if max_lo == max_hi && min_lo == min_hi {
        DimensionMethod::Exact
    } else {
        DimensionMethod::BoundsOnly {
            min_plus: (min_lo, min_hi),
            max_plus: (max_lo, max_hi),
        }
    };
    Ok(DimensionResult {
        rho_min_plus: min_hi,
        rho_max_plus: max_hi,
        min_plus_witness,
        max_plus_witness: maxplus_from_cover(g, &union)?,
        method,
    })
}

/// Comparison of `ρ_T` against `ρ_T̂` for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureEntry {
    pub graph: Graph,
    pub rho_min_plus: usize,
    pub rho_max_plus: usize,
}

impl ConjectureEntry {
    pub fn holds(&self) -> bool {
        self.rho_min_plus <= self.rho_max_plus
    }

    pub fn strict(&self) -> bool {
        self.rho_min_plus < self.rho_max_plus
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n_max: usize,
    /// One entry per isomorphism class on `1..=n_max` vertices, by vertex
    /// count then canonical code.
    pub entries: Vec<ConjectureEntry>,
}

impl ConjectureReport {
    /// Graphs with `ρ_T > ρ_T̂`.
    pub fn counterexamples(&self) -> impl Iterator<Item = &ConjectureEntry> {
        self.entries.iter().filter(|e| !e.holds())
    }

    /// Graphs with `ρ_T < ρ_T̂`.
    pub fn strict(&self) -> impl Iterator<Item = &ConjectureEntry> {
        self.entries.iter().filter(|e| e.strict())
    }

    pub fn equal_count(&self) -> usize {
        self.entries.iter().filter(|e| e.rho_min_plus == e.rho_max_plus).count()
    }
}

/// Largest vertex count [`check_conjecture`] accepts.
pub const CONJECTURE_MAX_N: usize = 7;

/// Computes both dimensions exactly for every graph on at most `n_max`
/// vertices up to isomorphism, and records how they compare.
pub fn check_conjecture(n_max: usize, limits: &ExactLimits) -> Result<ConjectureReport> {
    if n_max > CONJECTURE_MAX_N {
        return Err(Error::TooLarge {
            what: "vertices",
            actual: n_max,
            limit: CONJECTURE_MAX_N,
        });
    }
    let mut entries = Vec::new();
    for n in 1..=n_max {
        for graph in isomorphism_classes(n)? {
            let r = rho(&graph, limits)?;
            if !r.is_exact() {
                return Err(Error::TooLarge {
                    what: "exact cover search",
                    actual: n,
                    limit: limits.cover_vertices,
                });
            }
            entries.push(ConjectureEntry {
                graph,
                rho_min_plus: r.rho_min_plus,
                rho_max_plus: r.rho_max_plus,
            });
        }
    }
    Ok(ConjectureReport { n_max, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_multipartite, cycle, matching, path, star};
    use crate::representations::{caterpillar_2dim, minplus_generic, rescale};
    use crate::generators::CaterpillarSpec;
    use crate::tropical::rat;

    fn lim() -> ExactLimits {
        ExactLimits::default()
    }

    #[test]
    fn realize_small_cases() {
        let zeros: Vec<TropicalVector> = (0..4)
            .map(|_| TropicalVector::from_rationals([int(0), int(0)]).unwrap())
            .collect();
        assert_eq!(realize_graph(&zeros, &int(1), Algebra::MinPlus).unwrap(), Graph::empty(4));
        let mixed = [
            TropicalVector::from_rationals([int(0)]).unwrap(),
            TropicalVector::from_rationals([int(0), int(1)]).unwrap(),
        ];
        assert!(matches!(
            realize_graph(&mixed, &int(1), Algebra::MaxPlus),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn verify_examples() {
        let p4 = path(4).unwrap();
        let rep = caterpillar_2dim(&CaterpillarSpec::path(4).unwrap(), 2).unwrap();
        assert!(verify(&p4, &rep).unwrap().valid);
        assert!(verify(&p4, &rescale(&rep, &int(7)).unwrap()).unwrap().valid);

        let wrong = minplus_generic(&cycle(4).unwrap(), &int(1)).unwrap();
        let report = verify(&p4, &wrong).unwrap();
        assert!(!report.valid);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].expected, Relation::NonEdge);
        assert_eq!(report.violations[0].dot, TropicalValue::from_ratio(4, 3));

        assert!(matches!(
            verify(&path(3).unwrap(), &rep),
            Err(Error::VertexMismatch { rep: 4, graph: 3 })
        ));
    }

    #[test]
    fn slices_of_a_threshold_rep() {
        let g = star(3).unwrap();
        let rep = threshold_1dim(&g, &rat(5, 2), Algebra::MinPlus).unwrap();
        assert_eq!(project_slices(&rep), alloc::vec![g]);
    }

    #[test]
    fn infinite_entries_in_slices() {
        let v = |a: TropicalValue, b: TropicalValue| TropicalVector::new(alloc::vec![a, b]).unwrap();
        let rep = Representation::new(
            Algebra::MinPlus,
            int(1),
            2,
            alloc::vec![
                v(TropicalValue::PosInf, TropicalValue::from_int(0)),
                v(TropicalValue::from_int(-5), TropicalValue::from_int(0)),
                v(TropicalValue::from_int(-5), TropicalValue::from_int(1)),
            ],
        )
        .unwrap();
        let slices = project_slices(&rep);
        assert_eq!(slices[0], Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap());
        assert_eq!(slices[1], Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap());
        let realized = realize_graph(rep.vectors(), rep.threshold(), rep.algebra()).unwrap();
        assert_eq!(realized, slices[0].intersection(&slices[1]).unwrap());
    }

    #[test]
    fn rho_table() {
        let check = |g: Graph, min: usize, max: usize| {
            let r = rho(&g, &lim()).unwrap();
            assert!(r.is_exact());
            assert_eq!((r.rho_min_plus, r.rho_max_plus), (min, max), "{g:?}");
            assert_eq!(r.min_plus_witness.dim(), min);
            assert_eq!(r.max_plus_witness.dim(), max);
            assert!(verify(&g, &r.min_plus_witness).unwrap().valid);
            assert!(verify(&g, &r.max_plus_witness).unwrap().valid);
        };
        check(path(6).unwrap(), 2, 3);
        check(path(4).unwrap(), 2, 2);
        check(cycle(4).unwrap(), 2, 2);
        check(matching(2).unwrap(), 2, 2);
        check(complete_multipartite(&[3, 3]).unwrap(), 2, 3);
        check(star(4).unwrap(), 1, 1);
        check(complete(4).unwrap(), 1, 1);
        check(Graph::empty(3), 1, 1);
        check(Graph::empty(0), 1, 1);
    }

    #[test]
    fn rho_degrades_to_bounds() {
        let limits = lim().with_cover_vertices(4);
        // Spider with three legs of length 2: not a caterpillar.
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let r = rho(&g, &limits).unwrap();
        assert!(!r.is_exact());
        assert!(verify(&g, &r.min_plus_witness).unwrap().valid);
        assert!(verify(&g, &r.max_plus_witness).unwrap().valid);
        let DimensionMethod::BoundsOnly { min_plus, max_plus } = r.method else {
            unreachable!()
        };
        assert_eq!(max_plus, (3, 3));
        assert_eq!(min_plus.0, 2);
        assert_eq!(r.min_plus_witness.dim(), min_plus.1);
    }

    #[test]
    fn structured_witnesses_pin_large_graphs() {
        // Over the exact limits, but the caterpillar witness meets the lower
        // bound and the max-plus bounds collapse.
        let g = path(20).unwrap();
        let r = rho(&g, &lim()).unwrap();
        assert!(r.is_exact());
        assert_eq!((r.rho_min_plus, r.rho_max_plus), (2, 10));
        assert_eq!(r.min_plus_witness.dim(), 2);
        assert!(verify(&g, &r.min_plus_witness).unwrap().valid);
        assert!(verify(&g, &r.max_plus_witness).unwrap().valid);
    }

    #[test]
    fn conjecture_small() {
        let r = check_conjecture(1, &lim()).unwrap();
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.counterexamples().count(), 0);

        let r = check_conjecture(4, &lim()).unwrap();
        assert_eq!(r.entries.len(), 1 + 2 + 4 + 11);
        assert_eq!(r.counterexamples().count(), 0);

        assert!(check_conjecture(8, &lim()).is_err());
    }
}

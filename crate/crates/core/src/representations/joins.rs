//! Joins with cliques, complete multipartite graphs and cycles.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::generators::{cycle, CaterpillarSpec};
use crate::graph::Graph;
use crate::tropical::{int, Algebra, Rational, TropicalValue, TropicalVector};
use crate::verifier::verify;

use super::{caterpillar_2dim, minplus_extend_vertex, Representation};

/// Extends a valid representation of `g` to one of `g ∨ K_m` in the same
/// dimension and algebra. The new vertices, numbered after `g`'s, all get
/// `c` with `c_i = max(t, t − min_u f(u)_i)` over finite entries, which
/// reaches `t` against every vertex. In max-plus every vertex of `g` needs a
/// finite entry for that to work.
pub fn join_clique(g: &Graph, rep: &Representation, m: usize) -> Result<Representation> {
    let report = verify(g, rep).map_err(|e| Error::InvalidInputRepresentation(e.to_string()))?;
    if !report.valid {
        return Err(Error::InvalidInputRepresentation(alloc::format!(
            "representation does not realize the graph ({} violations)",
            report.violations.len()
        )));
    }
    let t = rep.threshold();
    if rep.algebra() == Algebra::MaxPlus {
        if let Some(v) = rep.vectors().iter().position(|x| !x.entries().iter().any(TropicalValue::is_finite)) {
            return Err(Error::InvalidInputRepresentation(alloc::format!(
                "vertex {v} has no finite entry, so nothing can reach it in max-plus"
            )));
        }
    }
    let entries: Vec<Rational> = (0..rep.dim())
        .map(|i| {
            rep.vectors()
                .iter()
                .filter_map(|x| x.entries()[i].as_finite())
                .min()
                .map_or_else(|| t.clone(), |low| (t - low).max(t.clone()))
        })
        .collect();
    let c = TropicalVector::from_rationals(entries)?;
    let mut vectors = rep.vectors().to_vec();
    vectors.extend(core::iter::repeat_n(c, m));
    Representation::new(rep.algebra(), t.clone(), rep.dim(), vectors)
}

/// Min-plus representation of the complete multipartite graph with the
/// given part sizes (`t = 1`, vertices numbered part by part). Each part of
/// size at least 2 owns a coordinate: its vertices are 0 there and 1
/// elsewhere. Singleton parts form a clique joined to the rest and get the
/// all-ones vector, so the dimension is `max(k − m, 1)` for `m` singletons.
pub fn multipartite_kdim(sizes: &[usize]) -> Result<Representation> {
    if sizes.len() < 2 {
        return Err(Error::BadParameter("need at least two parts".into()));
    }
    if sizes.contains(&0) {
        return Err(Error::BadParameter("part sizes must be positive".into()));
    }
    let big = sizes.iter().filter(|&&s| s > 1).count();
    let dim = big.max(1);
    let mut vectors = Vec::with_capacity(sizes.iter().sum());
    let mut coordinate = 0;
    for &size in sizes {
        let zero_at = (size > 1).then_some(coordinate);
        if size > 1 {
            coordinate += 1;
        }
        let v = TropicalVector::from_rationals((0..dim).map(|i| int(i64::from(Some(i) != zero_at))))?;
        vectors.extend(core::iter::repeat_n(v, size));
    }
    Representation::new(Algebra::MinPlus, int(1), dim, vectors)
}

/// Three-dimensional min-plus representation of `C_n` (`n ≥ 5`): the
/// caterpillar representation of the path `C_n − v`, extended by `v`.
pub fn cycle_3dim(n: usize) -> Result<Representation> {
    if n < 5 {
        return Err(Error::BadParameter(alloc::format!("need n >= 5, got {n}")));
    }
    let path_rep = caterpillar_2dim(&CaterpillarSpec::path(n - 1)?, 2)?;
    minplus_extend_vertex(&path_rep, &cycle(n)?, n - 1)
}

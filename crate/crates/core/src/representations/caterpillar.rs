//! Two-dimensional min-plus representations of caterpillars and forests of
//! caterpillars (threshold `t = 1`).
//!
//! Spine vertex `p_i` with `d = ⌊(i−1)/2⌋` and offset `k ≥ 2` maps to
//! `(1/(k+d), (k+d)/(k+d+1))` for odd `i` and `((k+d)/(k+d+1), 1/(k+d+1))`
//! for even `i`. Consecutive spine vertices meet at exactly 1 and every
//! other spine pair falls short in one coordinate. A leaf on `p_i` maps to
//! `(1, 1) − f(p_i)`, so it meets `p_i` at exactly 1 in both coordinates.
//! All leaves on one spine vertex share a vector, so leaf order is
//! irrelevant.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::generators::CaterpillarSpec;
use crate::tropical::{int, Algebra, Rational, TropicalValue, TropicalVector};

use super::Representation;

fn spine_vector(i: usize, k: usize) -> [Rational; 2] {
    let d = (i - 1) / 2;
    let base = int((k + d) as i64);
    let one = int(1);
    if i % 2 == 1 {
        [&one / &base, &base / (&base + &one)]
    } else {
        [&base / (&base + &one), &one / (&base + &one)]
    }
}

fn to_vector([a, b]: [Rational; 2]) -> TropicalVector {
    TropicalVector::new(alloc::vec![TropicalValue::Finite(a), TropicalValue::Finite(b)])
        .expect("two entries")
}

/// Appends the vectors of one caterpillar whose spine labels start at
/// `first_index`; returns the last spine label used.
fn push_caterpillar(
    spec: &CaterpillarSpec,
    k: usize,
    first_index: usize,
    out: &mut Vec<TropicalVector>,
) -> usize {
    let m = spec.spine_length();
    let spine: Vec<[Rational; 2]> = (0..m).map(|s| spine_vector(first_index + s, k)).collect();
    out.extend(spine.iter().cloned().map(to_vector));
    let one = int(1);
    for parent in spec.leaf_parents() {
        let [a, b] = &spine[parent - 1];
        out.push(to_vector([&one - a, &one - b]));
    }
    first_index + m - 1
}

fn check_offset(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::BadParameter(alloc::format!("offset k must be at least 2, got {k}")));
    }
    Ok(())
}

/// Two-dimensional min-plus representation of the caterpillar `spec`, in
/// the vertex order of [`crate::generators::caterpillar`].
pub fn caterpillar_2dim(spec: &CaterpillarSpec, k: usize) -> Result<Representation> {
    check_offset(k)?;
    let mut vectors = Vec::with_capacity(spec.vertex_count());
    push_caterpillar(spec, k, 1, &mut vectors);
    Representation::new(Algebra::MinPlus, int(1), 2, vectors)
}

/// Two-dimensional min-plus representation of a disjoint union of
/// caterpillars. Spine labels continue across components, each component
/// starting two past the last label used, so no spine vertices of different
/// components are consecutive.
pub fn forest_of_caterpillars(specs: &[CaterpillarSpec], k: usize) -> Result<Representation> {
    check_offset(k)?;
    if specs.is_empty() {
        return Err(Error::BadSpec("need at least one caterpillar".into()));
    }
    let total = specs.iter().map(CaterpillarSpec::vertex_count).sum();
    let mut vectors = Vec::with_capacity(total);
    let mut next = 1;
    for spec in specs {
        next = push_caterpillar(spec, k, next, &mut vectors) + 2;
    }
    Representation::new(Algebra::MinPlus, int(1), 2, vectors)
}

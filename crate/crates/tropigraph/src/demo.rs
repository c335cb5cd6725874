//! The two application examples: pairing students by combined skill
//! ratings (min-plus) and spotting mutual funds with shared holdings
//! (max-plus).

use std::fmt::Write as _;

use tropigraph_core::tropical::{format_rational, int};
use tropigraph_core::{realize_graph, Algebra, Graph, Rational, TropicalVector};

pub struct Demo {
    pub title: &'static str,
    pub labels: &'static [&'static str],
    pub ratings: &'static [&'static [i64]],
    pub algebra: Algebra,
    pub threshold: i64,
}

/// Skill ratings (0 to 3) in polynomials, algebraic simplification,
/// derivatives and integrals.
pub const STUDENTS: Demo = Demo {
    title: "students",
    labels: &["A", "B", "C", "D", "E", "F"],
    ratings: &[
        &[2, 2, 1, 0],
        &[1, 2, 2, 1],
        &[1, 1, 3, 3],
        &[3, 3, 0, 0],
        &[2, 1, 3, 2],
        &[1, 2, 2, 3],
    ],
    algebra: Algebra::MinPlus,
    threshold: 3,
};

/// Holdings (1 = held) of stock alpha, stock beta, bond delta, bond gamma
/// and a precious metal.
pub const FUNDS: Demo = Demo {
    title: "funds",
    labels: &["A", "B", "C", "D", "E", "F", "H"],
    ratings: &[
        &[1, 0, 0, 1, 0],
        &[1, 1, 0, 0, 0],
        &[0, 0, 1, 1, 0],
        &[0, 0, 1, 1, 1],
        &[0, 1, 1, 0, 1],
        &[1, 0, 0, 0, 1],
        &[0, 1, 0, 1, 0],
    ],
    algebra: Algebra::MaxPlus,
    threshold: 2,
};

impl Demo {
    pub fn by_name(name: &str) -> Option<&'static Demo> {
        match name {
            "students" => Some(&STUDENTS),
            "funds" => Some(&FUNDS),
            _ => None,
        }
    }

    pub fn vectors(&self) -> Vec<TropicalVector> {
        self.ratings
            .iter()
            .map(|r| TropicalVector::from_rationals(r.iter().map(|&x| int(x))).expect("non-empty"))
            .collect()
    }

    pub fn threshold(&self) -> Rational {
        int(self.threshold)
    }

    pub fn graph(&self) -> Graph {
        realize_graph(&self.vectors(), &self.threshold(), self.algebra).expect("uniform dimension")
    }

    pub fn label_set(&self, vs: &[usize]) -> String {
        let names: Vec<&str> = vs.iter().map(|&v| self.labels[v]).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn edge_labels(&self) -> Vec<String> {
        self.graph()
            .edges()
            .map(|(u, v)| format!("{}{}", self.labels[u], self.labels[v]))
            .collect()
    }
}

/// A perfect matching found by repeatedly pairing an unmatched vertex of
/// least remaining degree, backtracking when stuck.
pub fn pairing(g: &Graph) -> Option<Vec<(usize, usize)>> {
    fn go(g: &Graph, free: &mut Vec<bool>, out: &mut Vec<(usize, usize)>) -> bool {
        let remaining_degree = |v: usize, free: &[bool]| g.neighbors(v).filter(|&u| free[u]).count();
        let Some(v) = (0..g.n())
            .filter(|&v| free[v])
            .min_by_key(|&v| remaining_degree(v, free))
        else {
            return true;
        };
        let options: Vec<usize> = g.neighbors(v).filter(|&u| free[u]).collect();
        for u in options {
            free[v] = false;
            free[u] = false;
            out.push((v.min(u), v.max(u)));
            if go(g, free, out) {
                return true;
            }
            out.pop();
            free[v] = true;
            free[u] = true;
        }
        false
    }
    let mut free = vec![true; g.n()];
    let mut out = Vec::new();
    go(g, &mut free, &mut out).then_some(out)
}

/// Whether `set` is independent and no other vertex can be added.
pub fn is_maximal_independent(g: &Graph, set: &[usize]) -> bool {
    g.is_independent(set)
        && (0..g.n())
            .filter(|v| !set.contains(v))
            .all(|v| set.iter().any(|&u| g.has_edge(u, v)))
}

pub fn render(demo: &Demo) -> String {
    let g = demo.graph();
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "demo: {}", demo.title).unwrap();
    writeln!(w, "algebra: {}", demo.algebra).unwrap();
    writeln!(w, "threshold: {}", format_rational(&demo.threshold())).unwrap();
    writeln!(w, "vectors:").unwrap();
    for (label, r) in demo.labels.iter().zip(demo.ratings) {
        let entries: Vec<String> = r.iter().map(ToString::to_string).collect();
        writeln!(w, "  {label} = [{}]", entries.join(", ")).unwrap();
    }
    writeln!(w, "edges: {}", demo.edge_labels().join(" ")).unwrap();
    match demo.algebra {
        Algebra::MinPlus => match pairing(&g) {
            Some(pairs) => {
                let shown: Vec<String> = pairs.iter().map(|&(u, v)| demo.label_set(&[u, v])).collect();
                writeln!(w, "pairs: {}", shown.join(" ")).unwrap();
            }
            None => writeln!(w, "pairs: none").unwrap(),
        },
        Algebra::MaxPlus => {
            let alpha = tropigraph_core::independence::max_independent_set(&g, 64).expect("small");
            let omega = tropigraph_core::independence::max_clique(&g, 64).expect("small");
            let ae = [0, 4];
            writeln!(
                w,
                "independent {}: {}",
                demo.label_set(&ae),
                if is_maximal_independent(&g, &ae) { "maximal" } else { "not maximal" }
            )
            .unwrap();
            writeln!(w, "independence number: {}", alpha.len()).unwrap();
            writeln!(w, "maximum clique: {}", demo.label_set(&omega)).unwrap();
        }
    }
    out
}

//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always reach the terminal.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropigraph::demo::{FUNDS, STUDENTS};
use tropigraph_core::cover::{theta, theta_hat, CoverMode};
use tropigraph_core::generators::{
    caterpillar, caterpillar_forest, complete, complete_multipartite, cycle, matching, path, star,
    CaterpillarSpec,
};
use tropigraph_core::iso::{are_isomorphic, isomorphism_classes};
use tropigraph_core::representations::{
    caterpillar_2dim, forest_of_caterpillars, maxplus_from_cover, maxplus_generic,
    maxplus_generic_with, minplus_from_intersection, minplus_generic, MaxPlusVariant,
};
use tropigraph_core::tropical::{int, rat};
use tropigraph_core::{
    check_conjecture, project_slices, realize_graph, rho, verify, Algebra, ExactLimits, Graph,
    Representation, TropicalValue, TropicalVector,
};

struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

/// Representations produced while checking criteria 1 to 3, with their
/// target graphs, replayed by criterion 4.
#[derive(Default)]
struct Produced {
    reps: Vec<(Graph, Representation)>,
    graphs: Vec<Graph>,
}

fn lim() -> ExactLimits {
    ExactLimits::default()
}

fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0..1u64 << pairs.len()).map(move |code| {
        Graph::from_edges(
            n,
            pairs.iter().enumerate().filter(|(k, _)| code >> k & 1 == 1).map(|(_, &e)| e),
        )
        .unwrap()
    })
}

fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut g = Graph::empty(n);
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

// ---------------------------------------------------------------- oracles

/// Threshold test by forbidden induced subgraphs: no 4 vertices inducing
/// 2K2, P4 or C4.
fn oracle_is_threshold(adj: &[u32]) -> bool {
    let n = adj.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let set = 1 << a | 1 << b | 1 << c | 1 << d;
                    let mut degs: Vec<u32> =
                        [a, b, c, d].iter().map(|&v| (adj[v] & set).count_ones()).collect();
                    degs.sort_unstable();
                    let induced = matches!(degs[..], [1, 1, 1, 1] | [1, 1, 2, 2] | [2, 2, 2, 2]);
                    if induced {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn adjacency(n: usize, edges: &[(usize, usize)], subset: u32) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for (k, &(u, v)) in edges.iter().enumerate() {
        if subset >> k & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

/// Θ by listing every maximal threshold edge subset and solving the set
/// cover by increasing size.
fn oracle_theta(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    if m == 0 {
        return 0;
    }
    let threshold: Vec<bool> =
        (0..1u32 << m).map(|s| oracle_is_threshold(&adjacency(g.n(), &edges, s))).collect();
    let maximal: Vec<u32> = (0..1u32 << m)
        .filter(|&s| threshold[s as usize])
        .filter(|&s| (0..m).all(|k| s >> k & 1 == 1 || !threshold[(s | 1 << k) as usize]))
        .collect();
    let full = (1u32 << m) - 1;
    for k in 1..=m {
        if covers(&maximal, k, 0, 0, full) {
            return k;
        }
    }
    unreachable!("single edges are threshold")
}

fn covers(sets: &[u32], k: usize, start: usize, acc: u32, full: u32) -> bool {
    if acc == full {
        return true;
    }
    if k == 0 {
        return false;
    }
    (start..sets.len()).any(|i| covers(sets, k - 1, i + 1, acc | sets[i], full))
}

fn oracle_alpha(g: &Graph) -> usize {
    let n = g.n();
    (0..1u32 << n)
        .filter(|&s| g.edges().all(|(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn oracle_students_edges() -> Vec<String> {
    let mut edges = Vec::new();
    for u in 0..STUDENTS.ratings.len() {
        for v in u + 1..STUDENTS.ratings.len() {
            let dot = STUDENTS.ratings[u].iter().zip(STUDENTS.ratings[v]).map(|(a, b)| a + b).min();
            if dot.unwrap() >= STUDENTS.threshold {
                edges.push(format!("{}{}", STUDENTS.labels[u], STUDENTS.labels[v]));
            }
        }
    }
    edges
}

// ------------------------------------------------------------- criteria

fn criterion_1(out: &mut Outcome, produced: &mut Produced) {
    let t = int(1);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut graphs: Vec<Graph> = (1..=5).flat_map(labeled_graphs).collect();
    for n in [6, 7] {
        graphs.extend((0..200).map(|_| random_graph(n, &mut rng)));
    }
    let (edge_dot, non_edge_dot) = (TropicalValue::from_ratio(4, 3), TropicalValue::from_ratio(5, 6));
    for g in &graphs {
        let min = minplus_generic(g, &t).unwrap();
        let max = maxplus_generic(g, &t).unwrap();
        out.check(verify(g, &min).unwrap().valid, || format!("min-plus invalid on {g:?}"));
        out.check(verify(g, &max).unwrap().valid, || format!("max-plus invalid on {g:?}"));
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let want = if g.has_edge(u, v) { &edge_dot } else { &non_edge_dot };
                out.check(&min.dot(u, v) == want, || {
                    format!("min-plus dot {u}{v} = {} on {g:?}", min.dot(u, v))
                });
            }
        }
        produced.reps.push((g.clone(), min));
        produced.reps.push((g.clone(), max));
        produced.graphs.push(g.clone());
    }
    out.note(format!("{} graphs", graphs.len()));
}

fn criterion_2(out: &mut Outcome, produced: &mut Produced) {
    let table: Vec<(&str, Graph, Option<usize>, Option<usize>)> = vec![
        ("C4", cycle(4).unwrap(), Some(2), None),
        ("2K2", matching(2).unwrap(), Some(2), None),
        ("P4", path(4).unwrap(), Some(2), Some(2)),
        ("P6", path(6).unwrap(), Some(2), Some(3)),
        ("K3,3", complete_multipartite(&[3, 3]).unwrap(), Some(2), None),
    ];
    for (name, g, min, max) in table {
        let r = rho(&g, &lim()).unwrap();
        out.check(r.is_exact(), || format!("{name}: not exact"));
        if let Some(min) = min {
            out.check(r.rho_min_plus == min, || format!("{name}: rho_T = {}", r.rho_min_plus));
        }
        if let Some(max) = max {
            out.check(r.rho_max_plus == max, || format!("{name}: rho_T^ = {}", r.rho_max_plus));
        }
        out.check(r.min_plus_witness.dim() == r.rho_min_plus, || format!("{name}: witness dim"));
        out.check(r.max_plus_witness.dim() == r.rho_max_plus, || format!("{name}: witness dim"));
        produced.reps.push((g.clone(), r.min_plus_witness));
        produced.reps.push((g.clone(), r.max_plus_witness));
        produced.graphs.push(g);
    }
    // Threshold graphs: every one on at most 6 vertices, plus larger stars
    // and cliques.
    let mut count = 0;
    let extra = [star(9).unwrap(), complete(8).unwrap(), Graph::empty(5)];
    for g in (1..=6).flat_map(|n| isomorphism_classes(n).unwrap()).chain(extra) {
        let adj: Vec<u32> = (0..g.n()).map(|v| g.row_mask(v) as u32).collect();
        if !oracle_is_threshold(&adj) {
            continue;
        }
        count += 1;
        let r = rho(&g, &lim()).unwrap();
        out.check(r.rho_max_plus == 1 && r.rho_min_plus == 1, || format!("threshold {g:?}"));
        produced.reps.push((g.clone(), r.max_plus_witness));
    }
    out.note(format!("{count} threshold graphs"));
}

fn criterion_3(out: &mut Outcome, produced: &mut Produced) {
    let classes = isomorphism_classes(6).unwrap();
    out.check(classes.len() == 156, || format!("{} classes", classes.len()));
    for g in &classes {
        let cover = theta(g, &lim()).unwrap();
        let expected = oracle_theta(g);
        out.check(cover.size() == expected, || {
            format!("{g:?}: branch and bound {} vs oracle {expected}", cover.size())
        });
        out.check(cover.validate(g).is_ok(), || format!("{g:?}: invalid witness"));
        if cover.size() > 0 {
            produced.reps.push((g.clone(), maxplus_from_cover(g, &cover).unwrap()));
        }
        let hat = theta_hat(g, &lim()).unwrap();
        if hat.size() > 0 {
            produced.reps.push((g.clone(), minplus_from_intersection(g, &hat).unwrap()));
        }
        produced.graphs.push(g.clone());
    }
}

fn criterion_4(out: &mut Outcome, produced: &Produced) {
    for (g, rep) in &produced.reps {
        let realized = realize_graph(rep.vectors(), rep.threshold(), rep.algebra()).unwrap();
        out.check(&realized == g, || format!("{g:?}: representation does not realize it"));
        let slices = project_slices(rep);
        let combined = match rep.algebra() {
            Algebra::MaxPlus => slices.iter().fold(Graph::empty(g.n()), |a, s| a.union(s).unwrap()),
            Algebra::MinPlus => slices
                .iter()
                .fold(Graph::empty(g.n()).complement(), |a, s| a.intersection(s).unwrap()),
        };
        out.check(combined == realized, || format!("{g:?}: slice law fails for {}", rep.algebra()));
    }
    for g in &produced.graphs {
        let r = rho(g, &lim()).unwrap();
        let co = theta(&g.complement(), &lim()).unwrap().size();
        out.check(r.rho_min_plus == co.max(1), || {
            format!("{g:?}: rho_T {} vs theta(complement) {co}", r.rho_min_plus)
        });
        let hat = theta_hat(g, &lim()).unwrap();
        out.check(hat.mode == CoverMode::Intersection && hat.size() == co, || {
            format!("{g:?}: theta_hat differs from theta of the complement")
        });
    }
    out.note(format!("{} representations, {} graphs", produced.reps.len(), produced.graphs.len()));
}

fn criterion_5(out: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let specs: Vec<CaterpillarSpec> = (0..100)
        .map(|_| {
            let m = rng.gen_range(1..=15);
            let leaves = (1..=m).map(|i| (i, rng.gen_range(0..=3))).collect();
            CaterpillarSpec::new(m, leaves).unwrap()
        })
        .collect();
    let one = TropicalValue::from_int(1);
    let check_rep = |out: &mut Outcome, g: &Graph, rep: &Representation| {
        out.check(rep.dim() == 2 && verify(g, rep).unwrap().valid, || format!("{g:?}: invalid"));
        for (u, v) in g.edges() {
            out.check(rep.dot(u, v) == one, || format!("{g:?}: edge {u}{v} dot {}", rep.dot(u, v)));
        }
    };
    for (i, spec) in specs.iter().enumerate() {
        let k = 2 + i % 3;
        let g = caterpillar(spec).unwrap();
        check_rep(out, &g, &caterpillar_2dim(spec, k).unwrap());
    }
    for chunk in specs.chunks(4) {
        let g = caterpillar_forest(chunk).unwrap();
        check_rep(out, &g, &forest_of_caterpillars(chunk, 2).unwrap());
    }
    let p4 = caterpillar_2dim(&CaterpillarSpec::path(4).unwrap(), 2).unwrap();
    let hand = [[(1, 2), (2, 3)], [(2, 3), (1, 3)], [(1, 3), (3, 4)], [(3, 4), (1, 4)]];
    for (v, [a, b]) in hand.iter().enumerate() {
        let want = TropicalVector::from_rationals([rat(a.0, a.1), rat(b.0, b.1)]).unwrap();
        out.check(p4.vector(v) == &want, || format!("P4 vertex {v}: {}", p4.vector(v)));
    }
}

fn criterion_6(out: &mut Outcome) {
    let mut checked = 0;
    let mut triangle_free = 0;
    for n in 1..=6 {
        for g in isomorphism_classes(n).unwrap() {
            let th = theta(&g, &lim()).unwrap().size();
            let bound = n - oracle_alpha(&g);
            checked += 1;
            out.check(th <= bound, || format!("{g:?}: theta {th} > n - alpha {bound}"));
            if g.is_triangle_free() {
                triangle_free += 1;
                out.check(th == bound, || format!("{g:?}: triangle-free theta {th} != {bound}"));
            }
        }
    }
    out.note(format!("{checked} classes, {triangle_free} triangle-free"));
}

fn criterion_7(out: &mut Outcome) {
    let report = check_conjecture(6, &lim()).unwrap();
    let expected: usize = (1..=6).map(|n| isomorphism_classes(n).unwrap().len()).sum();
    out.check(report.entries.len() == expected, || {
        format!("{} entries for {expected} classes", report.entries.len())
    });
    let p6 = path(6).unwrap();
    let has_p6 = report
        .strict()
        .any(|e| are_isomorphic(&e.graph, &p6).unwrap() && e.rho_min_plus == 2 && e.rho_max_plus == 3);
    out.check(has_p6, || "P6 strict witness missing".into());
    out.note(format!(
        "{} classes: {} equal, {} strict, {} counterexamples",
        report.entries.len(),
        report.equal_count(),
        report.strict().count(),
        report.counterexamples().count()
    ));
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_tropigraph"))
        .args(args)
        .output()
        .expect("binary runs");
    (output.status.code().unwrap_or(-1), String::from_utf8(output.stdout).unwrap())
}

fn criterion_8(out: &mut Outcome) {
    // Frozen from direct evaluation of the ratings before the demo existed.
    let frozen = ["AC", "AF", "BE", "CD", "EF"];
    out.check(oracle_students_edges() == frozen, || "oracle disagrees with frozen edges".into());

    let (code, text) = run_cli(&["demo", "students"]);
    out.check(code == 0, || format!("demo students exit {code}"));
    let edges: Vec<&str> = text
        .lines()
        .find_map(|l| l.strip_prefix("edges: "))
        .map(|l| l.split_whitespace().collect())
        .unwrap_or_default();
    out.check(edges == frozen, || format!("students edges {edges:?}"));
    for pair in ["{B,E}", "{A,F}", "{C,D}"] {
        out.check(text.contains(pair), || format!("pair {pair} missing"));
    }

    let (code, text) = run_cli(&["demo", "funds"]);
    out.check(code == 0, || format!("demo funds exit {code}"));
    out.check(text.contains("independent {A,E}: maximal"), || "funds: {A,E} not maximal".into());
    let g = FUNDS.graph();
    let maximal = !g.has_edge(0, 4) && (0..7).filter(|&v| v != 0 && v != 4).all(|v| g.has_edge(0, v) || g.has_edge(4, v));
    out.check(maximal, || "funds graph: {A,E} not maximal".into());
}

fn criterion_9(out: &mut Outcome) {
    let two = Graph::empty(2);
    let simple = maxplus_generic_with(&two, &int(1), MaxPlusVariant::Simple).unwrap();
    let report = verify(&two, &simple).unwrap();
    out.check(!report.valid, || "simple construction unexpectedly verifies".into());
    out.note(format!(
        "simple variant on 2 isolated vertices: {} violation(s), dot {}",
        report.violations.len(),
        report.violations.first().map(|v| v.dot.to_string()).unwrap_or_default()
    ));
    let mut count = 0;
    for n in 1..=7 {
        for g in isomorphism_classes(n).unwrap() {
            count += 1;
            let rep = maxplus_generic(&g, &int(1)).unwrap();
            out.check(verify(&g, &rep).unwrap().valid, || format!("repaired fails on {g:?}"));
        }
    }
    out.note(format!("repaired construction on {count} classes"));
}

type Check = Box<dyn FnMut(&mut Outcome, &mut Produced)>;

fn main() {
    let mut produced = Produced::default();
    let mut criteria: Vec<(usize, &str, Option<Duration>, Check)> = vec![
        (1, "existence constructions", Some(Duration::from_secs(30)), Box::new(criterion_1)),
        (2, "dimension table", Some(Duration::from_secs(10)), Box::new(criterion_2)),
        (3, "branch and bound matches oracle", None, Box::new(criterion_3)),
        (4, "duality and slice laws", None, Box::new(|o, p| criterion_4(o, p))),
        (5, "caterpillar suite", Some(Duration::from_secs(10)), Box::new(|o, _| criterion_5(o))),
        (6, "Chvatal bound", None, Box::new(|o, _| criterion_6(o))),
        (7, "conjecture sweep", Some(Duration::from_secs(300)), Box::new(|o, _| criterion_7(o))),
        (8, "application replay", None, Box::new(|o, _| criterion_8(o))),
        (9, "max-plus repair gate", None, Box::new(|o, _| criterion_9(o))),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria.iter_mut() {
        let mut out = Outcome::new();
        let start = Instant::now();
        run(&mut out, &mut produced);
        let elapsed = start.elapsed();
        if let Some(budget) = budget {
            out.check(elapsed < *budget, || format!("took {elapsed:?}, budget {budget:?}"));
        }
        let status = if out.failures.is_empty() { "PASS" } else { "FAIL" };
        let notes = if out.notes.is_empty() { String::new() } else { format!("; {}", out.notes.join("; ")) };
        println!("criterion {id} ({name}): {status} [{:.2}s{notes}]", elapsed.as_secs_f64());
        for f in out.failures.iter().filter(|f| !f.is_empty()) {
            println!("    {f}");
        }
        if !out.failures.is_empty() {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

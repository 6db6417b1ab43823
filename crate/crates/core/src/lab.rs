//! Exhaustive small-scale verification suites.
//!
//! Each suite returns a [`VerificationReport`]. A report passes when every
//! named check holds and every listed counterexample is flagged as expected.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::autgroup::automorphism_group;
use crate::combinatorics::{binomial, Subsets};
use crate::error::{Error, Result};
use crate::fault::{
    build_global_sparing, homogeneity_spectrum_report, is_k_fault_tolerant_realization, OrderMode, SparePolicy,
};
use crate::graph::io::emit_graph6;
use crate::graph::{Graph, VertexSet};
use crate::perm::{parse_cycles, PermGroup, Universe};
use crate::subiso::contains_subgraph_after_faults;

/// Largest vertex count accepted by [`enumerate_labeled_graphs`].
pub const LABELED_ENUMERATION_CAP: usize = 7;

/// The labeled graph on `n` vertices whose edges are the set bits of `mask`.
/// Bit `t` stands for the `t`-th vertex pair in column order
/// `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> t & 1 == 1 {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    Graph::new(n, edges).expect("pairs are in range")
}

/// All `2^C(n,2)` labeled graphs on `n` vertices in edge-mask order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let count = graph_count(n)?;
    Ok((0..count).map(move |mask| labeled_graph(n, mask)))
}

fn graph_count(n: usize) -> Result<u64> {
    if n > LABELED_ENUMERATION_CAP {
        let pairs = binomial(n, 2);
        let size = if pairs < 128 { 1u128 << pairs } else { u128::MAX };
        return Err(Error::UniverseTooLarge { size, cap: 1 << binomial(LABELED_ENUMERATION_CAP, 2) });
    }
    Ok(1 << binomial(n, 2))
}

/// A re-checkable object attached to a counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Instance {
    Graph { n: usize, graph6: String },
    Group { degree: usize, generators: Vec<String> },
}

impl Instance {
    pub fn graph(g: &Graph) -> Self {
        Instance::Graph { n: g.order(), graph6: emit_graph6(g).expect("suite graphs are small") }
    }

    pub fn group(g: &PermGroup) -> Self {
        Instance::Group { degree: g.degree(), generators: g.generators().iter().map(|p| p.to_string()).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub instance: Instance,
    pub description: String,
    /// Documented boundary cases are expected; anything else fails the suite.
    pub expected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub instances_checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub checks: Vec<Check>,
    pub parameters: BTreeMap<String, Value>,
    pub notes: Vec<String>,
    /// Wall-clock time; omitted from JSON when cleared.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            instances_checked: 0,
            counterexamples: Vec::new(),
            checks: Vec::new(),
            parameters: BTreeMap::new(),
            notes: Vec::new(),
            elapsed_ms: None,
        }
    }

    fn check(&mut self, name: &str, expected: impl ToString, observed: impl ToString) {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        let passed = expected == observed;
        self.checks.push(Check { name: name.to_string(), expected, observed, passed });
    }

    fn param(&mut self, key: &str, value: Value) {
        self.parameters.insert(key.to_string(), value);
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        self
    }

    pub fn unexpected_counterexamples(&self) -> impl Iterator<Item = &Counterexample> {
        self.counterexamples.iter().filter(|c| !c.expected)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.unexpected_counterexamples().next().is_none()
    }
}

/// Runs `test` on every labeled graph with `n` vertices in parallel and
/// collects the reported problems in mask order.
fn scan_graphs<F>(n: usize, test: F) -> Result<(u64, Vec<Counterexample>)>
where
    F: Fn(&Graph) -> Option<Counterexample> + Sync,
{
    let count = graph_count(n)?;
    let found = (0..count).into_par_iter().filter_map(|mask| test(&labeled_graph(n, mask))).collect();
    Ok((count, found))
}

/// Whether all 3-vertex induced subgraphs have the same edge count, which
/// for 3-vertex graphs is the same as being pairwise isomorphic.
pub fn three_subsets_uniform(g: &Graph) -> bool {
    let mut counts = Subsets::new(g.order(), 3).map(|t| g.edges_within_mask(VertexSet::new(t).to_mask()));
    match counts.next() {
        Some(first) => counts.all(|c| c == first),
        None => true,
    }
}

fn three_subset_witness(g: &Graph) -> Option<Counterexample> {
    (g.edge_count() > 0 && !g.is_complete() && three_subsets_uniform(g)).then(|| Counterexample {
        instance: Instance::graph(g),
        description: "every 3-subset induces the same subgraph but the graph is not complete".into(),
        expected: false,
    })
}

/// Graphs with at least one edge whose 3-vertex induced subgraphs are all
/// isomorphic are complete, for `n_min..=n_max` vertices (`5 <= n_min`).
/// A run at 4 vertices lists the non-complete witnesses as expected
/// boundary cases.
pub fn verify_theorem_3subsets(n_min: usize, n_max: usize) -> Result<VerificationReport> {
    if !(5 <= n_min && n_min <= n_max && n_max <= LABELED_ENUMERATION_CAP) {
        return Err(Error::InvalidRange(format!("need 5 <= n_min <= n_max <= 7, got {n_min}..={n_max}")));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem3subsets");
    report.param("n_min", json!(n_min));
    report.param("n_max", json!(n_max));
    for n in n_min..=n_max {
        let (count, found) = scan_graphs(n, three_subset_witness)?;
        report.instances_checked += count;
        report.counterexamples.extend(found);
    }

    let (count, boundary) = scan_graphs(4, three_subset_witness)?;
    report.instances_checked += count;
    let witnesses: Vec<String> = boundary
        .iter()
        .map(|c| match &c.instance {
            Instance::Graph { graph6, .. } => graph6.clone(),
            Instance::Group { .. } => unreachable!(),
        })
        .collect();
    let c4 = emit_graph6(&Graph::cycle(4))?;
    let two_k2 = emit_graph6(&Graph::cycle(4).complement())?;
    report.check("boundary witnesses on 4 vertices include C4", true, witnesses.contains(&c4));
    report.check("boundary witnesses on 4 vertices include 2K2", true, witnesses.contains(&two_k2));
    report.param("boundary_witnesses", json!(witnesses));
    report.counterexamples.extend(boundary.into_iter().map(|c| Counterexample {
        description: "boundary case on 4 vertices".into(),
        expected: true,
        ..c
    }));
    Ok(report.timed(start))
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u32).map(BigUint::from).product()
}

/// Nonempty graphs whose automorphism group is k-homogeneous for some
/// `2 <= k <= n-2` are complete, with the full symmetric group.
pub fn verify_main_theorem(n_max: usize) -> Result<VerificationReport> {
    if !(4..=LABELED_ENUMERATION_CAP).contains(&n_max) {
        return Err(Error::InvalidRange(format!("need 4 <= n_max <= 7, got {n_max}")));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("main");
    report.param("n_max", json!(n_max));
    for n in 4..=n_max {
        let full = factorial(n);
        let (count, found) = scan_graphs(n, |g| {
            if g.edge_count() == 0 {
                return None;
            }
            let aut = automorphism_group(g).expect("degree within range");
            let problem = (2..=n - 2).find_map(|k| match aut.homogeneity[k] {
                None => Some(format!("{k}-homogeneity undecided")),
                Some(true) if !g.is_complete() => Some(format!("{k}-homogeneous but not complete")),
                Some(true) if aut.order != full => Some(format!("{k}-homogeneous but |Aut| = {}", aut.order)),
                _ => None,
            })?;
            Some(Counterexample { instance: Instance::graph(g), description: problem, expected: false })
        })?;
        report.instances_checked += count;
        report.counterexamples.extend(found);
    }

    let k5 = automorphism_group(&Graph::complete(5))?;
    report.check("K5 is 2- and 3-homogeneous", "[true,true]", json!([k5.homogeneity[2], k5.homogeneity[3]]));
    let c6 = automorphism_group(&Graph::cycle(6))?;
    report.check("C6 is not k-homogeneous for k = 2, 3, 4", "[false,false,false]", json!(&c6.homogeneity[2..=4]));
    report.notes.push("the k = 2 instances cover the two-fault-tolerant case".into());
    Ok(report.timed(start))
}

/// The lemma group `<(1234567), (235)(476)>`.
pub fn lemma_group() -> PermGroup {
    let x = parse_cycles("(1234567)", 7).expect("valid cycle");
    let y = parse_cycles("(235)(476)", 7).expect("valid cycle");
    PermGroup::new(7, vec![x, y]).expect("degree 7")
}

pub fn verify_lemma_s7() -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("lemma-s7");
    let g = lemma_group();
    let (x, y) = (&g.generators()[0], &g.generators()[1]);
    report.param("generators", json!(Instance::group(&g)));
    report.param("order", json!(u64::try_from(&g.order()).expect("small group")));
    report.check("group order", 21, g.order());
    report.check("xy = yx^2", true, x.compose(y)? == y.compose(&x.compose(x)?)?);
    report.check("2-homogeneous", true, g.is_k_homogeneous(2)?);
    report.check("2-transitive", false, g.is_k_transitive(2)?);
    report.check("orbit size of an ordered pair", 21, g.orbit_of_tuple(&[0, 1])?.len());
    report.check("orbits on ordered pairs", 2, g.count_orbits_on_ktuples(2)?);
    report.check("order below the 42 needed for 2-transitivity", true, g.order() < BigUint::from(42u32));
    report.instances_checked = 1;
    Ok(report.timed(start))
}

pub fn verify_q3_example() -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("q3");
    let q3 = Graph::hypercube(3);
    let x = build_global_sparing(&q3, 2, SparePolicy::Universal);
    report.param("host", json!(Instance::graph(&x)));

    let ftr = is_k_fault_tolerant_realization(&x, &q3, 2, OrderMode::Strict)?;
    report.check("2-fault-tolerant realization", true, ftr.verdict);
    report.check("fault pairs checked", 45, ftr.checked_subsets);

    let spectrum = homogeneity_spectrum_report(&x)?;
    let inner: Vec<Option<bool>> = spectrum[1..=9].iter().map(|e| e.homogeneous).collect();
    report.check("k-homogeneous for k = 1..9", json!(vec![Some(false); 9]), json!(inner));
    report.check("vertex-transitive", false, automorphism_group(&x)?.vertex_transitive);

    let degrees = x.degree_sequence();
    report.check("spare degrees", "[8,8]", json!(&degrees[8..]));
    report.check("cube-vertex degrees", json!(vec![5; 8]), json!(&degrees[..8]));

    let c6 = Graph::cycle(6);
    let antipodal = contains_subgraph_after_faults(&q3, &c6, &VertexSet::new([0, 7]))?;
    report.check("antipodal removal leaves a 6-cycle", true, antipodal.is_some());
    let adjacent = contains_subgraph_after_faults(&q3, &c6, &VertexSet::new([0, 1]))?;
    report.check("adjacent removal leaves a 6-cycle", true, adjacent.is_some());
    report.instances_checked = ftr.checked_subsets as u64;
    Ok(report.timed(start))
}

/// The fixed group corpus for [`verify_group_lemmas`].
pub fn group_corpus() -> Vec<(String, PermGroup)> {
    let d4 =
        PermGroup::new(4, vec![parse_cycles("(1 2 3 4)", 4).expect("valid"), parse_cycles("(2 4)", 4).expect("valid")])
            .expect("degree 4");
    let aut_q3 = crate::autgroup::automorphism_perm_group(&Graph::hypercube(3)).expect("degree 8");
    vec![
        ("S7".into(), PermGroup::symmetric(7).expect("degree 7")),
        ("lemma group".into(), lemma_group()),
        ("C7".into(), PermGroup::cyclic(7).expect("degree 7")),
        ("D4 on C4".into(), d4),
        ("trivial on 5 points".into(), PermGroup::trivial(5).expect("degree 5")),
        ("Aut(Q3)".into(), aut_q3),
    ]
}

/// k-transitive implies k-homogeneous; k-homogeneous iff (n-k)-homogeneous;
/// k-transitive implies (k-1)-transitive; orbit counts on m-subsets never
/// exceed those on k-subsets for `m <= k`, `m + k <= n`.
pub fn verify_group_lemmas(corpus: &[(String, PermGroup)]) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("group-lemmas");
    report.param("corpus", json!(corpus.iter().map(|(name, _)| name).collect::<Vec<_>>()));
    for (name, g) in corpus {
        let n = g.degree();
        let hom = (0..=n).map(|k| g.is_k_homogeneous(k)).collect::<Result<Vec<_>>>()?;
        let trans = (0..=n).map(|k| g.is_k_transitive(k)).collect::<Result<Vec<_>>>()?;
        let mut violations = Vec::new();
        for k in 0..=n {
            report.instances_checked += 3;
            if trans[k] && !hom[k] {
                violations.push(format!("{k}-transitive but not {k}-homogeneous"));
            }
            if hom[k] != hom[n - k] {
                violations.push(format!("{k}-homogeneity differs from {}-homogeneity", n - k));
            }
            if k > 0 && trans[k] && !trans[k - 1] {
                violations.push(format!("{k}-transitive but not {}-transitive", k - 1));
            }
        }
        for k in 0..=n {
            for m in 0..=k.min(n - k) {
                report.instances_checked += 1;
                let c = g.orbit_count_monotonicity_check(m, k)?;
                if !c.holds {
                    violations.push(format!("{} orbits on {m}-subsets but {} on {k}-subsets", c.orbits_m, c.orbits_k));
                }
            }
        }
        report.counterexamples.extend(violations.into_iter().map(|v| Counterexample {
            instance: Instance::group(g),
            description: format!("{name}: {v}"),
            expected: false,
        }));
    }
    if let Some((_, g)) = corpus.iter().find(|(name, _)| name == "lemma group") {
        report.check(
            "lemma group 2-homogeneous iff 5-homogeneous",
            "[true,true]",
            json!([g.is_k_homogeneous(2)?, g.is_k_homogeneous(5)?]),
        );
        report.check("lemma group orbits on 5-subsets", 1, g.orbit_decomposition(Universe::Subsets { k: 5 })?.len());
    }
    Ok(report.timed(start))
}

/// Graphs with some k-homogeneous automorphism group, `2 <= k <= n-2`, are
/// i-homogeneous for all `i < k` and have the full symmetric group. Cycles
/// show that 1- and (n-1)-homogeneity alone do not force this.
pub fn corollary_checks(n_max: usize) -> Result<VerificationReport> {
    if !(4..=LABELED_ENUMERATION_CAP).contains(&n_max) {
        return Err(Error::InvalidRange(format!("need 4 <= n_max <= 7, got {n_max}")));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("corollaries");
    report.param("n_max", json!(n_max));
    for n in 4..=n_max {
        let full = factorial(n);
        let (count, found) = scan_graphs(n, |g| {
            let aut = automorphism_group(g).expect("degree within range");
            let k = (2..=n - 2).rev().find(|&k| aut.homogeneity[k] == Some(true))?;
            let description = if let Some(i) = (1..k).find(|&i| aut.homogeneity[i] != Some(true)) {
                format!("{k}-homogeneous but not {i}-homogeneous")
            } else if aut.order != full {
                format!("{k}-homogeneous but |Aut| = {}", aut.order)
            } else {
                return None;
            };
            Some(Counterexample { instance: Instance::graph(g), description, expected: false })
        })?;
        report.instances_checked += count;
        report.counterexamples.extend(found);
    }
    for n in 5..=8 {
        let aut = automorphism_group(&Graph::cycle(n))?;
        let mut expected = vec![Some(false); n + 1];
        for k in [0, 1, n - 1, n] {
            expected[k] = Some(true);
        }
        report.check(&format!("C{n} homogeneity spectrum"), json!(expected), json!(aut.homogeneity));
    }
    let k6 = automorphism_group(&Graph::complete(6))?;
    report.check("K6 homogeneous at every k", true, k6.homogeneity.iter().all(|&h| h == Some(true)));
    Ok(report.timed(start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Theorem3Subsets,
    Main,
    LemmaS7,
    Q3,
    GroupLemmas,
    Corollaries,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "theorem3subsets" => Suite::Theorem3Subsets,
            "main" => Suite::Main,
            "lemma-s7" => Suite::LemmaS7,
            "q3" => Suite::Q3,
            "group-lemmas" => Suite::GroupLemmas,
            "corollaries" => Suite::Corollaries,
            "all" => Suite::All,
            other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
        })
    }
}

pub const DEFAULT_N_MAX: usize = 6;

/// Runs one suite, or all of them in a fixed order. `n_max` applies to the
/// enumeration suites.
pub fn run_suite(suite: Suite, n_max: usize) -> Result<Vec<VerificationReport>> {
    Ok(match suite {
        Suite::Theorem3Subsets => vec![verify_theorem_3subsets(5, n_max)?],
        Suite::Main => vec![verify_main_theorem(n_max)?],
        Suite::LemmaS7 => vec![verify_lemma_s7()?],
        Suite::Q3 => vec![verify_q3_example()?],
        Suite::GroupLemmas => vec![verify_group_lemmas(&group_corpus())?],
        Suite::Corollaries => vec![corollary_checks(n_max)?],
        Suite::All => {
            [Suite::LemmaS7, Suite::Q3, Suite::GroupLemmas, Suite::Theorem3Subsets, Suite::Main, Suite::Corollaries]
                .into_iter()
                .map(|s| run_suite(s, n_max))
                .collect::<Result<Vec<_>>>()?
                .concat()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(enumerate_labeled_graphs(6).unwrap().count(), 32768);
        assert!(matches!(enumerate_labeled_graphs(8), Err(Error::UniverseTooLarge { .. })));
        assert_eq!(enumerate_labeled_graphs(0).unwrap().count(), 1);
    }

    #[test]
    fn labeled_graphs_are_distinct_and_in_mask_order() {
        let graphs: Vec<Graph> = enumerate_labeled_graphs(4).unwrap().collect();
        let set: std::collections::HashSet<_> = graphs.iter().cloned().collect();
        assert_eq!(set.len(), 64);
        assert_eq!(graphs[0], Graph::empty(4));
        assert_eq!(graphs[1].edges(), &[(0, 1)]);
        assert_eq!(graphs[2].edges(), &[(0, 2)]);
        assert_eq!(graphs[4].edges(), &[(1, 2)]);
        assert_eq!(graphs[63], Graph::complete(4));
    }

    #[test]
    fn uniform_three_subsets() {
        assert!(three_subsets_uniform(&Graph::cycle(4)));
        assert!(three_subsets_uniform(&Graph::complete(5)));
        assert!(!three_subsets_uniform(&Graph::cycle(5)));
    }

    #[test]
    fn boundary_witnesses_on_four_vertices() {
        let report = verify_theorem_3subsets(5, 5).unwrap();
        assert!(report.passed(), "{report:#?}");
        assert_eq!(report.instances_checked, 1024 + 64);
        // three perfect matchings and three 4-cycles
        assert_eq!(report.counterexamples.len(), 6);
        assert!(report.counterexamples.iter().all(|c| c.expected));
        assert!(verify_theorem_3subsets(4, 6).is_err());
        assert!(verify_theorem_3subsets(6, 5).is_err());
    }

    #[test]
    fn small_suites_pass() {
        for report in [verify_lemma_s7().unwrap(), verify_q3_example().unwrap()] {
            assert!(report.passed(), "{report:#?}");
        }
        let report = verify_group_lemmas(&group_corpus()).unwrap();
        assert!(report.passed(), "{report:#?}");
        assert!(report.instances_checked > 0);
    }

    #[test]
    fn enumeration_suites_pass_at_five() {
        let main = verify_main_theorem(5).unwrap();
        assert!(main.passed(), "{main:#?}");
        assert_eq!(main.instances_checked, 64 + 1024);
        let cor = corollary_checks(5).unwrap();
        assert!(cor.passed(), "{cor:#?}");
    }

    #[test]
    fn failed_checks_fail_the_report() {
        let mut r = VerificationReport::new("x");
        r.check("a", 1, 1);
        assert!(r.passed());
        r.counterexamples.push(Counterexample {
            instance: Instance::graph(&Graph::cycle(4)),
            description: String::new(),
            expected: true,
        });
        assert!(r.passed());
        r.check("b", 1, 2);
        assert!(!r.passed());
    }

    #[test]
    fn bad_parameters() {
        assert!(verify_main_theorem(3).is_err());
        assert!(verify_main_theorem(8).is_err());
        assert!(corollary_checks(8).is_err());
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!("lemma-s7".parse::<Suite>().unwrap(), Suite::LemmaS7);
    }
}

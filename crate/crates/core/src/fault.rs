//! Fault-tolerant realizations and automorphic reconfiguration.
//!
//! A host `X` is a k-fault-tolerant realization of a basic graph `Y` when
//! `X` has `|V(Y)| + k` vertices and `X - F` still contains `Y` for every
//! k-subset `F`. Automorphic reconfiguration recovers from a fault set `F`
//! by an automorphism of `X` carrying the spare set `S` onto `F`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::autgroup::{automorphism_group, is_automorphism, AutomorphismGroup};
use crate::combinatorics::{binomial, Subsets};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::perm::Permutation;
use crate::subiso::contains_subgraph_after_faults;

/// How the host order is compared with `|V(Y)| + k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderMode {
    /// `|V(X)| = |V(Y)| + k`.
    #[default]
    Strict,
    /// `|V(X)| >= |V(Y)| + k`.
    Relaxed,
}

/// Outcome of a fault-tolerance scan.
///
/// Fault sets are visited in lexicographic order. On failure the scan stops
/// at the first failing set, and `checked_subsets` is that set's position in
/// the order, counting from 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizationCheck {
    pub basic: Graph,
    pub host: Graph,
    pub k: usize,
    pub verdict: bool,
    pub counterexample: Option<VertexSet>,
    pub checked_subsets: u128,
}

/// Scans every k-subset of host vertices, in parallel over contiguous blocks
/// of the lexicographic order.
pub fn is_k_fault_tolerant_realization(
    host: &Graph,
    basic: &Graph,
    k: usize,
    mode: OrderMode,
) -> Result<RealizationCheck> {
    let required = basic.order() + k;
    let order_ok = match mode {
        OrderMode::Strict => host.order() == required,
        OrderMode::Relaxed => host.order() >= required,
    };
    if !order_ok {
        return Err(Error::OrderMismatch { host: host.order(), required });
    }
    let n = host.order();
    let total = binomial(n, k);
    const BLOCK: u128 = 256;
    let blocks = total.div_ceil(BLOCK);
    let first_failure = (0..blocks as u64).into_par_iter().find_map_first(|b| {
        let start = b as u128 * BLOCK;
        let len = BLOCK.min(total - start);
        Subsets::starting_at(n, k, start).take(len as usize).enumerate().find_map(|(i, faults)| {
            let faults = VertexSet::new(faults);
            let ok = contains_subgraph_after_faults(host, basic, &faults).expect("subsets are in range").is_some();
            (!ok).then_some((start + i as u128, faults))
        })
    });
    let (verdict, counterexample, checked_subsets) = match first_failure {
        Some((rank, faults)) => (false, Some(faults), rank + 1),
        None => (true, None, total),
    };
    Ok(RealizationCheck { basic: basic.clone(), host: host.clone(), k, verdict, counterexample, checked_subsets })
}

/// How spare vertices are wired in a global-sparing supergraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SparePolicy {
    /// Every spare adjacent to every basic vertex; spares mutually nonadjacent.
    Universal,
    /// As `Universal`, with the spares also forming a clique.
    UniversalClique,
}

impl std::str::FromStr for SparePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "universal" => Ok(SparePolicy::Universal),
            "universal-clique" => Ok(SparePolicy::UniversalClique),
            other => Err(Error::Parse(format!("unknown spare policy {other:?}"))),
        }
    }
}

/// Adds `k` spares labeled `n..n+k` to `basic`.
pub fn build_global_sparing(basic: &Graph, k: usize, policy: SparePolicy) -> Graph {
    let n = basic.order();
    let mut edges: Vec<(usize, usize)> = basic.edges().to_vec();
    for s in n..n + k {
        edges.extend((0..n).map(|v| (v, s)));
        if policy == SparePolicy::UniversalClique {
            edges.extend((n..s).map(|t| (t, s)));
        }
    }
    Graph::new(n + k, edges).expect("spare edges are in range")
}

/// An automorphism carrying the spare set onto the fault set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconfigPlan {
    pub host: Graph,
    pub spares: VertexSet,
    pub faults: VertexSet,
    pub automorphism: Permutation,
    /// For every nonfaulty vertex, the vertex whose role it takes over:
    /// its preimage under the automorphism.
    pub relabel: BTreeMap<usize, usize>,
}

impl ReconfigPlan {
    /// Rechecks `spares^g = faults`, `g` in `Aut(host)`, and the relabel map.
    pub fn is_valid(&self) -> bool {
        let g = &self.automorphism;
        if g.degree() != self.host.order() || !is_automorphism(&self.host, g).unwrap_or(false) {
            return false;
        }
        let image = VertexSet::new(self.spares.members().iter().map(|&s| g.apply(s)));
        let relabel_ok = (0..self.host.order())
            .filter(|v| !self.faults.contains(*v))
            .all(|v| self.relabel.get(&v).is_some_and(|&r| g.apply(r) == v && !self.spares.contains(r)));
        image == self.faults && relabel_ok && self.relabel.len() + self.faults.len() == self.host.order()
    }
}

/// Reconfiguration searches against one host, reusing its automorphism group.
#[derive(Clone, Debug)]
pub struct Reconfigurator {
    host: Graph,
    aut: AutomorphismGroup,
}

impl Reconfigurator {
    pub fn new(host: &Graph) -> Result<Self> {
        Ok(Reconfigurator { host: host.clone(), aut: automorphism_group(host)? })
    }

    pub fn automorphisms(&self) -> &AutomorphismGroup {
        &self.aut
    }

    pub fn find(&self, spares: &VertexSet, faults: &VertexSet) -> Result<Option<ReconfigPlan>> {
        let n = self.host.order();
        spares.check_within(n)?;
        faults.check_within(n)?;
        if spares.len() != faults.len() {
            return Err(Error::SizeMismatch { spares: spares.len(), faults: faults.len() });
        }
        let Some(g) = self.aut.group.subset_transporter(spares, faults)? else {
            return Ok(None);
        };
        let inverse = g.inverse();
        let relabel = (0..n).filter(|&v| !faults.contains(v)).map(|v| (v, inverse.apply(v))).collect();
        Ok(Some(ReconfigPlan {
            host: self.host.clone(),
            spares: spares.clone(),
            faults: faults.clone(),
            automorphism: g,
            relabel,
        }))
    }
}

pub fn find_reconfiguration(host: &Graph, spares: &VertexSet, faults: &VertexSet) -> Result<Option<ReconfigPlan>> {
    Reconfigurator::new(host)?.find(spares, faults)
}

/// One row of the homogeneity spectrum. Automorphic reconfiguration for
/// every pair of k-sets is possible exactly when `Aut(host)` is
/// k-homogeneous, so the two flags agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub k: usize,
    pub homogeneous: Option<bool>,
    pub supports_automorphic_reconfiguration: Option<bool>,
}

pub fn homogeneity_spectrum_report(host: &Graph) -> Result<Vec<SpectrumEntry>> {
    Ok(spectrum_from(&automorphism_group(host)?))
}

pub fn spectrum_from(aut: &AutomorphismGroup) -> Vec<SpectrumEntry> {
    aut.homogeneity
        .iter()
        .enumerate()
        .map(|(k, &h)| SpectrumEntry { k, homogeneous: h, supports_automorphic_reconfiguration: h })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xq3() -> Graph {
        build_global_sparing(&Graph::hypercube(3), 2, SparePolicy::Universal)
    }

    #[test]
    fn cube_with_two_spares_is_two_fault_tolerant() {
        let check = is_k_fault_tolerant_realization(&xq3(), &Graph::hypercube(3), 2, OrderMode::Strict).unwrap();
        assert!(check.verdict);
        assert_eq!(check.checked_subsets, 45);
        assert_eq!(check.counterexample, None);
    }

    #[test]
    fn complete_hosts_tolerate_everything() {
        let basic = Graph::new(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let check = is_k_fault_tolerant_realization(&Graph::complete(8), &basic, 3, OrderMode::Strict).unwrap();
        assert!(check.verdict);
        assert_eq!(check.checked_subsets, 56);
    }

    #[test]
    fn isolated_spares_fail_on_adjacent_faults() {
        let q3 = Graph::hypercube(3);
        let host = Graph::new(10, q3.edges().iter().copied()).unwrap();
        let check = is_k_fault_tolerant_realization(&host, &q3, 2, OrderMode::Strict).unwrap();
        assert!(!check.verdict);
        let f = check.counterexample.unwrap();
        // lexicographically first failing pair
        assert_eq!(f, VertexSet::new([0, 1]));
        assert!(q3.has_edge(0, 1));
        assert_eq!(check.checked_subsets, 1);
    }

    #[test]
    fn order_modes() {
        let q3 = Graph::hypercube(3);
        let err = is_k_fault_tolerant_realization(&xq3(), &q3, 1, OrderMode::Strict).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { host: 10, required: 9 });
        assert!(is_k_fault_tolerant_realization(&xq3(), &q3, 1, OrderMode::Relaxed).unwrap().verdict);
        assert!(is_k_fault_tolerant_realization(&xq3(), &q3, 3, OrderMode::Relaxed).is_err());
    }

    #[test]
    fn sparing_constructions() {
        let x = xq3();
        assert_eq!(x.order(), 10);
        assert_eq!(x.edge_count(), 28);
        let degrees = x.degree_sequence();
        assert_eq!(&degrees[8..], &[8, 8]);
        assert_eq!(&degrees[..8], &[5; 8]);
        assert!(!x.has_edge(8, 9));
        let y = Graph::cycle(5);
        assert_eq!(build_global_sparing(&y, 0, SparePolicy::Universal), y);
        assert_eq!(build_global_sparing(&Graph::complete(2), 1, SparePolicy::UniversalClique), Graph::complete(3));
        assert_eq!(build_global_sparing(&y, 3, SparePolicy::UniversalClique).edge_count(), 5 + 15 + 3);
    }

    #[test]
    fn reconfiguration_on_complete_host() {
        let plan = find_reconfiguration(&Graph::complete(6), &VertexSet::new([4, 5]), &VertexSet::new([0, 3]))
            .unwrap()
            .unwrap();
        assert!(plan.is_valid());
        assert_eq!(plan.relabel.len(), 4);
    }

    #[test]
    fn reconfiguration_on_cube_host() {
        let r = Reconfigurator::new(&xq3()).unwrap();
        let spares = VertexSet::new([8, 9]);
        let plan = r.find(&spares, &spares).unwrap().unwrap();
        assert!(plan.automorphism.is_identity());
        assert!(plan.is_valid());
        assert_eq!(r.find(&spares, &VertexSet::new([3, 8])).unwrap(), None);
        assert_eq!(r.find(&spares, &VertexSet::new([3, 5])).unwrap(), None);
        assert!(matches!(r.find(&spares, &VertexSet::new([3])), Err(Error::SizeMismatch { .. })));
        assert!(matches!(r.find(&spares, &VertexSet::new([3, 10])), Err(Error::InvalidVertex { .. })));
    }

    #[test]
    fn spectrum_of_cube_host() {
        let report = homogeneity_spectrum_report(&xq3()).unwrap();
        assert_eq!(report.len(), 11);
        for e in &report {
            let expected = e.k == 0 || e.k == 10;
            assert_eq!(e.homogeneous, Some(expected), "k = {}", e.k);
            assert_eq!(e.supports_automorphic_reconfiguration, e.homogeneous);
        }
        let k5 = homogeneity_spectrum_report(&Graph::complete(5)).unwrap();
        assert!(k5.iter().all(|e| e.homogeneous == Some(true)));
    }

    #[test]
    fn tampered_plans_are_rejected() {
        let mut plan =
            find_reconfiguration(&Graph::cycle(5), &VertexSet::new([0]), &VertexSet::new([2])).unwrap().unwrap();
        assert!(plan.is_valid());
        plan.faults = VertexSet::new([3]);
        assert!(!plan.is_valid());
    }
}

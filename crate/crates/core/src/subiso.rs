//! Non-induced subgraph containment by backtracking.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// An injective map from pattern vertices to host vertices carrying every
/// pattern edge onto a host edge. `map[i]` is the image of pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Checks injectivity and edge preservation directly, without reference
    /// to how the map was found.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.order() || self.map.iter().any(|&h| h >= host.order()) {
            return false;
        }
        let mut images = self.map.clone();
        images.sort_unstable();
        images.dedup();
        images.len() == self.map.len() && pattern.edges().iter().all(|&(u, v)| host.has_edge(self.map[u], self.map[v]))
    }
}

/// Searches for a copy of `pattern` inside `host` (extra host edges are
/// allowed). Pattern vertices are placed in order of descending degree and
/// host candidates tried in ascending order, so the witness is deterministic.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let (n, m) = (pattern.order(), host.order());
    if n > m || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&p| (std::cmp::Reverse(pattern.degree(p)), p));
    let mut position = vec![0; n];
    for (i, &p) in order.iter().enumerate() {
        position[p] = i;
    }
    // for each pattern vertex, the neighbors placed before it
    let earlier: Vec<Vec<usize>> =
        order.iter().map(|&p| pattern.neighbors(p).filter(|&q| position[q] < position[p]).collect()).collect();
    let later_degree: Vec<usize> = order.iter().zip(&earlier).map(|(&p, e)| pattern.degree(p) - e.len()).collect();

    let mut search = Search {
        host,
        order: &order,
        earlier: &earlier,
        later_degree: &later_degree,
        map: vec![usize::MAX; n],
        used: vec![false; m],
        host_degree: host.degree_sequence(),
        pattern_degree: pattern.degree_sequence(),
    };
    search.extend(0).then_some(Embedding { map: search.map })
}

struct Search<'a> {
    host: &'a Graph,
    order: &'a [usize],
    earlier: &'a [Vec<usize>],
    later_degree: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    host_degree: Vec<usize>,
    pattern_degree: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let p = self.order[i];
        for h in 0..self.host.order() {
            if self.used[h] || self.host_degree[h] < self.pattern_degree[p] {
                continue;
            }
            if !self.earlier[i].iter().all(|&q| self.host.has_edge(self.map[q], h)) {
                continue;
            }
            // enough free host neighbors for the pattern neighbors still to come
            let free = self.host.neighbors(h).filter(|&x| !self.used[x]).count();
            if free < self.later_degree[i] {
                continue;
            }
            self.map[p] = h;
            self.used[h] = true;
            if self.extend(i + 1) {
                return true;
            }
            self.used[h] = false;
        }
        self.map[p] = usize::MAX;
        false
    }
}

/// Like [`contains_subgraph`] on `host - faults`, with the witness expressed
/// in the original host labels.
pub fn contains_subgraph_after_faults(host: &Graph, pattern: &Graph, faults: &VertexSet) -> Result<Option<Embedding>> {
    let (survivors, relabel) = host.delete_vertices(faults)?;
    let mut original = vec![0; survivors.order()];
    for (old, new) in relabel.iter().enumerate() {
        if let Some(new) = *new {
            original[new] = old;
        }
    }
    Ok(contains_subgraph(&survivors, pattern).map(|e| Embedding { map: e.map.iter().map(|&v| original[v]).collect() }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3_with_universal_spares() -> Graph {
        let q3 = Graph::hypercube(3);
        let spares = (8..10).flat_map(|s| (0..8).map(move |v| (v, s)));
        Graph::new(10, q3.edges().iter().copied().chain(spares)).unwrap()
    }

    #[test]
    fn hexagon_inside_damaged_cube() {
        let (host, _) = Graph::hypercube(3).delete_vertices(&VertexSet::new([0, 7])).unwrap();
        let e = contains_subgraph(&host, &Graph::cycle(6)).unwrap();
        assert!(e.is_valid(&host, &Graph::cycle(6)));
    }

    #[test]
    fn basic_examples() {
        let k4 = Graph::complete(4);
        assert!(contains_subgraph(&k4, &Graph::cycle(4)).unwrap().is_valid(&k4, &Graph::cycle(4)));
        assert_eq!(contains_subgraph(&Graph::cycle(4), &Graph::complete(3)), None);
        assert_eq!(contains_subgraph(&Graph::cycle(3), &Graph::empty(4)), None);
        assert_eq!(contains_subgraph(&Graph::empty(0), &Graph::empty(0)), Some(Embedding::new(vec![])));
        assert!(contains_subgraph(&Graph::empty(3), &Graph::empty(2)).is_some());
    }

    #[test]
    fn faulty_spares_leave_the_cube() {
        let host = q3_with_universal_spares();
        let q3 = Graph::hypercube(3);
        let e = contains_subgraph_after_faults(&host, &q3, &VertexSet::new([8, 9])).unwrap().unwrap();
        assert!(e.is_valid(&host, &q3));
        assert!(e.map().iter().all(|&v| v < 8));
    }

    #[test]
    fn witnesses_use_original_labels() {
        let k5 = Graph::complete(5);
        let e = contains_subgraph_after_faults(&k5, &Graph::complete(4), &VertexSet::new([1])).unwrap().unwrap();
        assert!(!e.map().contains(&1));
        assert!(e.is_valid(&k5, &Graph::complete(4)));
        let g = Graph::hypercube(3);
        let id = contains_subgraph_after_faults(&g, &g, &VertexSet::empty()).unwrap().unwrap();
        assert_eq!(id.map(), &[0, 1, 2, 3, 4, 5, 6, 7]);
        assert!(contains_subgraph_after_faults(&g, &g, &VertexSet::new([8])).is_err());
    }

    #[test]
    fn adjacent_faults_kill_the_bare_cube() {
        let q3 = Graph::hypercube(3);
        let isolated_spares = Graph::new(10, q3.edges().iter().copied()).unwrap();
        assert_eq!(contains_subgraph_after_faults(&isolated_spares, &q3, &VertexSet::new([0, 1])).unwrap(), None);
    }

    #[test]
    fn checker_rejects_bad_maps() {
        let k3 = Graph::complete(3);
        let p3 = Graph::path(3);
        assert!(!Embedding::new(vec![0, 0, 1]).is_valid(&k3, &p3));
        assert!(!Embedding::new(vec![0, 1]).is_valid(&k3, &p3));
        assert!(!Embedding::new(vec![0, 1, 3]).is_valid(&k3, &p3));
        assert!(!Embedding::new(vec![0, 1, 2]).is_valid(&p3, &k3));
        assert!(Embedding::new(vec![1, 0, 2]).is_valid(&k3, &p3));
    }
}

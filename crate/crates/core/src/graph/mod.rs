//! Simple undirected graphs on the dense vertex set `0..n`.

use std::fmt;
use std::str::FromStr;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};

pub mod io;

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are kept as a sorted list of pairs `(u, v)` with `u < v`, alongside
/// a bit matrix for constant-time adjacency queries. Values are immutable
/// once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from a list of pairs. Pairs are normalized to `u < v`
    /// and duplicates collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidEdge { u, v, n });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_normalized(n, normalized))
    }

    fn from_normalized(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let words = n.div_ceil(64).max(1);
        let mut adj = vec![0u64; n * words];
        for &(u, v) in &edges {
            adj[u * words + v / 64] |= 1 << (v % 64);
            adj[v * words + u / 64] |= 1 << (u % 64);
        }
        Graph { n, edges, words, adj }
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_normalized(n, Vec::new())
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        Self::from_normalized(n, edges)
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`. For `n < 3` this is the path.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
        }
        Self::from_normalized(n, edges)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_normalized(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// The `d`-dimensional hypercube `Q_d`: vertices are the integers below
    /// `2^d`, adjacent when their binary labels differ in exactly one bit.
    pub fn hypercube(d: u32) -> Self {
        let n = 1usize << d;
        let edges = (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b)))).filter(|&(u, v)| u < v).collect();
        Self::from_normalized(n, edges)
    }

    /// Built-in families by name: `K<n>`, `C<n>`, `P<n>`, `E<n>` (edgeless),
    /// `Q<d>`, and any of these followed by `+<k>spares`, which adds `k`
    /// spares joined to every original vertex.
    pub fn named(name: &str) -> Result<Graph> {
        let bad = || Error::Parse(format!("unknown built-in graph {name:?}"));
        if let Some((base, spares)) = name.split_once('+') {
            let k = spares.strip_suffix("spares").and_then(|k| k.parse().ok()).ok_or_else(bad)?;
            let base = Graph::named(base)?;
            return Ok(crate::fault::build_global_sparing(&base, k, crate::fault::SparePolicy::Universal));
        }
        let mut chars = name.chars();
        let family = chars.next().ok_or_else(bad)?;
        let size: usize = chars.as_str().parse().map_err(|_| bad())?;
        match family {
            'K' => Ok(Graph::complete(size)),
            'C' if size >= 3 => Ok(Graph::cycle(size)),
            'P' => Ok(Graph::path(size)),
            'E' => Ok(Graph::empty(size)),
            'Q' if size <= 12 => Ok(Graph::hypercube(size as u32)),
            _ => Err(bad()),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each pair with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.words..(v + 1) * self.words];
        row.iter().enumerate().flat_map(|(w, &bits)| BitIter(bits).map(move |b| w * 64 + b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v * self.words..(v + 1) * self.words].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        let edges =
            (0..self.n).flat_map(|v| (0..v).map(move |u| (u, v))).filter(|&(u, v)| !self.has_edge(u, v)).collect();
        Self::from_normalized(self.n, edges)
    }

    /// Removes the vertices in `removed` and relabels the survivors
    /// `0..n-|removed|` in their original relative order.
    ///
    /// Returns the smaller graph together with the old-to-new label map
    /// (`None` for removed vertices).
    pub fn delete_vertices(&self, removed: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        removed.check_within(self.n)?;
        let mut relabel = vec![None; self.n];
        let mut next = 0;
        for (v, slot) in relabel.iter_mut().enumerate() {
            if !removed.contains(v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| Some((relabel[u]?, relabel[v]?))).collect();
        Ok((Self::from_normalized(next, edges), relabel))
    }

    /// The subgraph induced on `kept`, relabeled `0..|kept|` in ascending order.
    pub fn induced_subgraph(&self, kept: &VertexSet) -> Result<Graph> {
        kept.check_within(self.n)?;
        let (g, _) = self.delete_vertices(&kept.complement(self.n))?;
        Ok(g)
    }

    /// Number of edges with both endpoints in `vertices` (given as a bit mask;
    /// only meaningful for graphs with at most 64 vertices).
    pub(crate) fn edges_within_mask(&self, vertices: u64) -> usize {
        debug_assert!(self.n <= 64);
        BitIter(vertices).map(|v| (self.adj[v * self.words] & vertices).count_ones() as usize).sum::<usize>() / 2
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("edges", &self.edges)?;
        s.end()
    }
}

/// Iterates the set bit positions of a word in ascending order.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        VertexSet(BitIter(mask).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Fails with `InvalidVertex` when a member is not below `n`.
    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&vertex) if vertex >= n => Err(Error::InvalidVertex { vertex, n }),
            _ => Ok(()),
        }
    }

    /// The vertices of `0..n` not in this set.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    /// Bit mask of the members; every member must be below 64.
    pub(crate) fn to_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Parses comma-separated 0-based indices such as `8,9`. An empty string is
/// the empty set.
impl FromStr for VertexSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        if s.trim().is_empty() {
            return Ok(VertexSet::empty());
        }
        s.split(',')
            .map(|tok| tok.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad vertex index {tok:?}: {e}"))))
            .collect::<Result<Vec<_>>>()
            .map(VertexSet::new)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

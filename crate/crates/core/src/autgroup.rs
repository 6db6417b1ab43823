//! Automorphism groups of graphs.
//!
//! The search refines vertex colorings to equitable partitions and then
//! individualizes vertices, backtracking over the first non-singleton cell.
//! The leftmost leaf is the reference labeling; any other leaf whose induced
//! relabeling preserves the edge set yields an automorphism. Orbits of the
//! automorphisms already found prune sibling branches, and the generators
//! found along the leftmost path form a strong generating set relative to the
//! individualized vertices.

use num_bigint::BigUint;
use serde::Serialize;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{PermGroup, Permutation};

/// `Aut(X)` together with the symmetry facts derived from it.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub group: PermGroup,
    pub order: BigUint,
    pub vertex_transitive: bool,
    /// `homogeneity[k]` for `k = 0..=n`; `None` where the orbit computation
    /// hit the universe cap.
    pub homogeneity: Vec<Option<bool>>,
}

impl AutomorphismGroup {
    /// Largest `k` such that the group is i-homogeneous for every `i <= k`.
    pub fn max_homogeneity(&self) -> usize {
        self.homogeneity.iter().take_while(|h| **h == Some(true)).count().saturating_sub(1)
    }
}

/// Serializable summary, used by reports.
#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismSummary {
    pub order: String,
    pub generators: Vec<String>,
    pub vertex_transitive: bool,
    pub homogeneity: Vec<Option<bool>>,
    pub max_homogeneity: usize,
}

impl From<&AutomorphismGroup> for AutomorphismSummary {
    fn from(a: &AutomorphismGroup) -> Self {
        AutomorphismSummary {
            order: a.order.to_string(),
            generators: a.group.generators().iter().map(ToString::to_string).collect(),
            vertex_transitive: a.vertex_transitive,
            homogeneity: a.homogeneity.clone(),
            max_homogeneity: a.max_homogeneity(),
        }
    }
}

/// Whether `p` maps the edge set of `g` onto itself.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.degree() != g.order() {
        return Err(Error::DegreeMismatch { expected: g.order(), found: p.degree() });
    }
    Ok(g.edges().iter().all(|&(u, v)| g.has_edge(p.apply(u), p.apply(v))))
}

/// Computes `Aut(g)` and its homogeneity spectrum.
pub fn automorphism_group(g: &Graph) -> Result<AutomorphismGroup> {
    let group = automorphism_perm_group(g)?;
    let order = group.order();
    let n = g.order();
    let factorial: BigUint = (1..=n).map(BigUint::from).product();
    let homogeneity = (0..=n)
        .map(|k| {
            // an orbit is never larger than the group
            if order < BigUint::from(binomial(n, k)) {
                return Some(false);
            }
            if order == factorial {
                return Some(true);
            }
            group.is_k_homogeneous(k).ok()
        })
        .collect::<Vec<_>>();
    let vertex_transitive = n == 0 || homogeneity[1] == Some(true);
    Ok(AutomorphismGroup { group, order, vertex_transitive, homogeneity })
}

/// Computes `Aut(g)` as a permutation group with a ready stabilizer chain.
pub fn automorphism_perm_group(g: &Graph) -> Result<PermGroup> {
    let n = g.order();
    if n > crate::perm::MAX_DEGREE {
        return Err(Error::DegreeTooLarge(n));
    }
    if g.edge_count() == 0 || g.is_complete() {
        return PermGroup::symmetric(n);
    }
    let search = search(g);
    let group = PermGroup::from_strong_generators(n, search.generators, &search.base)?;
    debug_assert_eq!(group.order(), search.orbit_sizes.iter().map(|&s| BigUint::from(s)).product::<BigUint>());
    Ok(group)
}

/// Generators and base produced by the backtracking search.
#[derive(Debug, Clone)]
pub(crate) struct SearchResult {
    pub(crate) generators: Vec<Permutation>,
    pub(crate) base: Vec<usize>,
    pub(crate) orbit_sizes: Vec<usize>,
}

struct Refined {
    colors: Vec<u32>,
    cells: usize,
    /// Cell sizes and quotient-matrix rows in color order.
    invariant: Vec<u32>,
}

impl Refined {
    fn is_discrete(&self) -> bool {
        self.cells == self.colors.len()
    }

    /// Members of the first non-singleton cell, ascending.
    fn target_cell(&self) -> (u32, Vec<usize>) {
        let mut sizes = vec![0usize; self.cells];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        let c = sizes.iter().position(|&s| s > 1).expect("non-discrete coloring") as u32;
        (c, self.cell(c))
    }

    fn cell(&self, color: u32) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == color).collect()
    }
}

struct Node {
    refined: Refined,
    cell_color: u32,
    cell: Vec<usize>,
    chosen: usize,
}

/// Refines `colors` (dense ranks) until every vertex in a cell sees the same
/// number of neighbors in every cell.
fn refine(g: &Graph, mut colors: Vec<u32>) -> Refined {
    let n = g.order();
    let mut cells = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    loop {
        let mut signatures: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut counts = vec![0u32; cells];
                for w in g.neighbors(v) {
                    counts[colors[w] as usize] += 1;
                }
                (colors[v], counts, v)
            })
            .collect();
        signatures.sort_unstable();
        let mut next = vec![0u32; n];
        let mut rank = 0u32;
        let mut invariant = Vec::new();
        for i in 0..n {
            let (prev, cur) = (i.checked_sub(1).map(|j| &signatures[j]), &signatures[i]);
            if prev.is_some_and(|p| p.0 != cur.0 || p.1 != cur.1) {
                rank += 1;
            }
            next[signatures[i].2] = rank;
        }
        let new_cells = if n == 0 { 0 } else { rank as usize + 1 };
        if new_cells == cells {
            let mut i = 0;
            while i < n {
                let j = (i..n).find(|&j| signatures[j].0 != signatures[i].0).unwrap_or(n);
                invariant.push((j - i) as u32);
                invariant.extend_from_slice(&signatures[i].1);
                i = j;
            }
            return Refined { colors: next, cells, invariant };
        }
        colors = next;
        cells = new_cells;
    }
}

/// Gives `v` its own cell placed immediately before the rest of its cell.
fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let c = colors[v];
    colors.iter().enumerate().map(|(x, &cx)| if x == v || cx < c { cx } else { cx + 1 }).collect()
}

pub(crate) fn search(g: &Graph) -> SearchResult {
    let n = g.order();
    let mut path: Vec<Node> = Vec::new();
    let mut current = refine(g, vec![0; n]);
    while !current.is_discrete() {
        let (cell_color, cell) = current.target_cell();
        let chosen = cell[0];
        let next = refine(g, individualize(&current.colors, chosen));
        path.push(Node { refined: current, cell_color, cell, chosen });
        current = next;
    }
    let first_leaf = current;
    let invariants: Vec<&[u32]> = path
        .iter()
        .map(|node| node.refined.invariant.as_slice())
        .chain(std::iter::once(first_leaf.invariant.as_slice()))
        .collect();

    let mut generators: Vec<Permutation> = Vec::new();
    let mut orbit_sizes = vec![1; path.len()];
    let base: Vec<usize> = path.iter().map(|node| node.chosen).collect();

    for depth in (0..path.len()).rev() {
        let node = &path[depth];
        let mut orbit = point_orbit(n, &generators, node.chosen);
        let mut rejected = vec![false; n];
        for &w in &node.cell[1..] {
            if orbit[w] || rejected[w] {
                continue;
            }
            let ctx = Leafward {
                g,
                path: &path,
                invariants: &invariants,
                first_leaf: &first_leaf.colors,
                fixed: &base[..depth],
                target: (node.chosen, w),
            };
            let start = refine(g, individualize(&node.refined.colors, w));
            match ctx.find(start, depth + 1) {
                Some(aut) => {
                    generators.push(aut);
                    orbit = point_orbit(n, &generators, node.chosen);
                }
                None => {
                    for (x, &inside) in point_orbit(n, &generators, w).iter().enumerate() {
                        rejected[x] |= inside;
                    }
                }
            }
        }
        orbit_sizes[depth] = orbit.iter().filter(|&&b| b).count();
    }
    SearchResult { generators, base, orbit_sizes }
}

fn point_orbit(n: usize, generators: &[Permutation], start: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(a) = stack.pop() {
        for g in generators {
            let b = g.apply(a);
            if !std::mem::replace(&mut seen[b], true) {
                stack.push(b);
            }
        }
    }
    seen
}

/// Depth-first search below one branch for a leaf equivalent to the
/// reference leaf under an automorphism.
struct Leafward<'a> {
    g: &'a Graph,
    path: &'a [Node],
    invariants: &'a [&'a [u32]],
    first_leaf: &'a [u32],
    /// Vertices the automorphism must fix.
    fixed: &'a [usize],
    /// `(from, to)` the automorphism must send `from` to `to`.
    target: (usize, usize),
}

impl Leafward<'_> {
    fn find(&self, refined: Refined, depth: usize) -> Option<Permutation> {
        if refined.invariant != self.invariants[depth] {
            return None;
        }
        if depth == self.path.len() {
            return self.leaf_automorphism(&refined.colors);
        }
        let color = self.path[depth].cell_color;
        for w in refined.cell(color) {
            let next = refine(self.g, individualize(&refined.colors, w));
            if let Some(aut) = self.find(next, depth + 1) {
                return Some(aut);
            }
        }
        None
    }

    fn leaf_automorphism(&self, colors: &[u32]) -> Option<Permutation> {
        let n = colors.len();
        let mut by_color = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            by_color[c as usize] = v;
        }
        let images: Vec<usize> = self.first_leaf.iter().map(|&c| by_color[c as usize]).collect();
        let (from, to) = self.target;
        if images[from] != to || self.fixed.iter().any(|&v| images[v] != v) {
            return None;
        }
        let p = Permutation::from_images(images).expect("discrete colorings give a bijection");
        is_automorphism(self.g, &p).ok()?.then_some(p)
    }
}

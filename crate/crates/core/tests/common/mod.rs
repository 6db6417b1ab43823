//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the search code being checked.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use ftspare::graph::Graph;
use ftspare::perm::{PermGroup, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;

/// Adjacency matrix read through the public edge list only.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Number of vertex permutations preserving adjacency and nonadjacency,
/// by extending partial bijections one vertex at a time.
pub fn count_automorphisms(g: &Graph) -> u64 {
    fn go(m: &[Vec<bool>], image: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let i = image.len();
        if i == m.len() {
            return 1;
        }
        let mut total = 0;
        for h in 0..m.len() {
            if used[h] || !(0..i).all(|j| m[i][j] == m[h][image[j]]) {
                continue;
            }
            used[h] = true;
            image.push(h);
            total += go(m, image, used);
            image.pop();
            used[h] = false;
        }
        total
    }
    let m = matrix(g);
    go(&m, &mut Vec::new(), &mut vec![false; g.order()])
}

/// Whether some injection of pattern vertices into host vertices carries
/// every pattern edge onto a host edge, trying every injection.
pub fn brute_contains(host: &Graph, pattern: &Graph) -> bool {
    fn go(h: &[Vec<bool>], p: &[Vec<bool>], image: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if image.len() == p.len() {
            return (0..p.len()).all(|a| (0..a).all(|b| !p[a][b] || h[image[a]][image[b]]));
        }
        for x in 0..h.len() {
            if !used[x] {
                used[x] = true;
                image.push(x);
                let found = go(h, p, image, used);
                image.pop();
                used[x] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    if pattern.order() > host.order() {
        return false;
    }
    go(&matrix(host), &matrix(pattern), &mut Vec::new(), &mut vec![false; host.order()])
}

/// All elements of the group, by closing the generators under products.
pub fn closure(g: &PermGroup) -> Vec<Permutation> {
    let id = Permutation::identity(g.degree());
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for s in g.generators() {
            let q = p.compose(s).unwrap();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn k_subsets(n: usize, k: usize) -> Vec<BTreeSet<usize>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

pub fn k_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .iter()
            .flat_map(|t| {
                (0..n).filter(|x| !t.contains(x)).map(|x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// Orbit count on k-subsets computed from the full element list.
pub fn brute_subset_orbits(elements: &[Permutation], n: usize, k: usize) -> usize {
    let mut seen = HashSet::new();
    let mut orbits = 0;
    for s in k_subsets(n, k) {
        if seen.contains(&s) {
            continue;
        }
        orbits += 1;
        for g in elements {
            seen.insert(s.iter().map(|&x| g.apply(x)).collect::<BTreeSet<_>>());
        }
    }
    orbits
}

pub fn brute_tuple_orbits(elements: &[Permutation], n: usize, k: usize) -> usize {
    let mut seen = HashSet::new();
    let mut orbits = 0;
    for t in k_tuples(n, k) {
        if seen.contains(&t) {
            continue;
        }
        orbits += 1;
        for g in elements {
            seen.insert(t.iter().map(|&x| g.apply(x)).collect::<Vec<_>>());
        }
    }
    orbits
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Graph::new(n, edges.into_iter().filter(|_| rng.gen_bool(p))).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

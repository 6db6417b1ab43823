//! Orbits of a permutation group on points, k-subsets and k-tuples.
//!
//! Every orbit is computed as the breadth-first closure of one element under
//! the generators; the group itself is never enumerated.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::{PermGroup, Permutation};
use crate::combinatorics::{binomial, falling_factorial, MaskRanker};
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Default bound on the number of elements an orbit or universe may hold.
pub const DEFAULT_UNIVERSE_CAP: usize = 10_000_000;

/// The set a group is acting on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Universe {
    Points,
    Subsets { k: usize },
    Tuples { k: usize },
}

/// A partition of a universe into orbits. Elements are written as point
/// lists: `[p]` for a point, the sorted members for a subset, the entries
/// for a tuple. Orbits are listed by their first element in lexicographic
/// order; members within an orbit in discovery order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitDecomposition {
    pub universe: Universe,
    pub orbits: Vec<Vec<Vec<usize>>>,
}

impl OrbitDecomposition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }
}

/// Orbit counts on m-subsets and k-subsets; `holds` is `orbits_k >= orbits_m`,
/// which is a theorem whenever `m <= k` and `m + k <= degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonotonicityCheck {
    pub m: usize,
    pub k: usize,
    pub orbits_m: usize,
    pub orbits_k: usize,
    pub holds: bool,
}

fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

impl PermGroup {
    fn check_point(&self, point: usize) -> Result<()> {
        if point >= self.degree() {
            return Err(Error::InvalidPoint { point, degree: self.degree() });
        }
        Ok(())
    }

    fn check_arity(&self, k: usize) -> Result<()> {
        if k > self.degree() {
            return Err(Error::InvalidRange(format!("arity {k} exceeds the degree {}", self.degree())));
        }
        Ok(())
    }

    pub fn orbit_of_point(&self, a: usize) -> Result<Vec<usize>> {
        self.check_point(a)?;
        let mut seen = vec![false; self.degree()];
        seen[a] = true;
        let mut orbit = vec![a];
        let mut head = 0;
        while head < orbit.len() {
            let b = orbit[head];
            head += 1;
            for g in self.generators() {
                let c = g.apply(b);
                if !std::mem::replace(&mut seen[c], true) {
                    orbit.push(c);
                }
            }
        }
        Ok(orbit)
    }

    fn subset_orbit_masks(&self, start: u64) -> Result<Vec<u64>> {
        let mut seen = HashSet::from([start]);
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let s = orbit[head];
            head += 1;
            for g in self.generators() {
                let t = g.apply_mask(s);
                if seen.insert(t) {
                    if orbit.len() >= self.cap() {
                        return Err(Error::OrbitTooLarge { cap: self.cap() });
                    }
                    orbit.push(t);
                }
            }
        }
        Ok(orbit)
    }

    /// Orbit of a subset under the induced action on subsets of its size.
    pub fn orbit_of_subset(&self, s: &VertexSet) -> Result<Vec<VertexSet>> {
        if let Some(&point) = s.members().last() {
            self.check_point(point)?;
        }
        Ok(self.subset_orbit_masks(s.to_mask())?.into_iter().map(VertexSet::from_mask).collect())
    }

    fn check_tuple(&self, t: &[usize]) -> Result<()> {
        let mut seen = vec![false; self.degree()];
        for &p in t {
            self.check_point(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidTuple(p));
            }
        }
        Ok(())
    }

    fn tuple_orbit(&self, start: Vec<u8>, seen: &mut HashSet<Vec<u8>>) -> Result<Vec<Vec<u8>>> {
        seen.insert(start.clone());
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            for g in self.generators() {
                let image: Vec<u8> = orbit[head].iter().map(|&p| g.apply(p as usize) as u8).collect();
                if !seen.contains(&image) {
                    if orbit.len() >= self.cap() {
                        return Err(Error::OrbitTooLarge { cap: self.cap() });
                    }
                    seen.insert(image.clone());
                    orbit.push(image);
                }
            }
            head += 1;
        }
        Ok(orbit)
    }

    /// Orbit of a tuple of distinct points under the componentwise action.
    pub fn orbit_of_tuple(&self, t: &[usize]) -> Result<Vec<Vec<usize>>> {
        self.check_tuple(t)?;
        let start = t.iter().map(|&p| p as u8).collect();
        let orbit = self.tuple_orbit(start, &mut HashSet::new())?;
        Ok(orbit.into_iter().map(|t| t.into_iter().map(usize::from).collect()).collect())
    }

    fn check_universe(&self, size: u128) -> Result<()> {
        if size > self.cap() as u128 {
            return Err(Error::UniverseTooLarge { size, cap: self.cap() });
        }
        Ok(())
    }

    /// Splits the chosen universe into orbits.
    pub fn orbit_decomposition(&self, universe: Universe) -> Result<OrbitDecomposition> {
        let n = self.degree();
        let orbits = match universe {
            Universe::Points => {
                let mut seen = vec![false; n];
                let mut orbits = Vec::new();
                for a in 0..n {
                    if seen[a] {
                        continue;
                    }
                    let orbit = self.orbit_of_point(a)?;
                    orbit.iter().for_each(|&b| seen[b] = true);
                    orbits.push(orbit.into_iter().map(|b| vec![b]).collect());
                }
                orbits
            }
            Universe::Subsets { k } => {
                self.check_arity(k)?;
                self.check_universe(binomial(n, k))?;
                let mut seen = HashSet::new();
                let mut orbits = Vec::new();
                for s in crate::combinatorics::Subsets::new(n, k) {
                    let mask = VertexSet::new(s).to_mask();
                    if seen.contains(&mask) {
                        continue;
                    }
                    let orbit = self.subset_orbit_masks(mask)?;
                    seen.extend(orbit.iter().copied());
                    orbits.push(orbit.into_iter().map(|m| VertexSet::from_mask(m).members().to_vec()).collect());
                }
                orbits
            }
            Universe::Tuples { k } => {
                let mut orbits = Vec::new();
                self.for_each_tuple_orbit(k, |orbit| {
                    orbits.push(orbit.into_iter().map(|t| t.into_iter().map(usize::from).collect()).collect())
                })?;
                orbits
            }
        };
        Ok(OrbitDecomposition { universe, orbits })
    }

    fn for_each_tuple_orbit(&self, k: usize, mut visit: impl FnMut(Vec<Vec<u8>>)) -> Result<()> {
        let n = self.degree();
        self.check_arity(k)?;
        self.check_universe(falling_factorial(n, k))?;
        let mut seen = HashSet::new();
        let mut tuple: Vec<u8> = Vec::with_capacity(k);
        let mut used = vec![false; n];
        // iterative lexicographic enumeration of injective k-tuples
        fn rec(
            g: &PermGroup,
            k: usize,
            tuple: &mut Vec<u8>,
            used: &mut [bool],
            seen: &mut HashSet<Vec<u8>>,
            visit: &mut dyn FnMut(Vec<Vec<u8>>),
        ) -> Result<()> {
            if tuple.len() == k {
                if !seen.contains(tuple) {
                    visit(g.tuple_orbit(tuple.clone(), seen)?);
                }
                return Ok(());
            }
            for p in 0..used.len() {
                if !used[p] {
                    used[p] = true;
                    tuple.push(p as u8);
                    rec(g, k, tuple, used, seen, visit)?;
                    tuple.pop();
                    used[p] = false;
                }
            }
            Ok(())
        }
        rec(self, k, &mut tuple, &mut used, &mut seen, &mut visit)
    }

    /// Number of orbits on the k-subsets of the point set; 1 for `k = 0`.
    pub fn count_orbits_on_ksubsets(&self, k: usize) -> Result<usize> {
        let n = self.degree();
        self.check_arity(k)?;
        let size = binomial(n, k);
        self.check_universe(size)?;
        let ranker = MaskRanker::new(n, k);
        let mut seen = vec![false; size as usize];
        let mut count = 0;
        // Gosper's hack walks the k-bit masks below 2^n in increasing order
        let limit: u128 = 1u128 << n;
        let mut mask: u128 = low_mask(k) as u128;
        while mask < limit {
            let m = mask as u64;
            if !seen[ranker.rank(m)] {
                count += 1;
                for t in self.subset_orbit_masks(m)? {
                    seen[ranker.rank(t)] = true;
                }
            }
            if mask == 0 {
                break;
            }
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        Ok(count)
    }

    pub fn count_orbits_on_points(&self) -> usize {
        self.orbit_decomposition(Universe::Points).map(|d| d.len()).unwrap_or(0)
    }

    pub fn count_orbits_on_ktuples(&self, k: usize) -> Result<usize> {
        let mut count = 0;
        self.for_each_tuple_orbit(k, |_| count += 1)?;
        Ok(count)
    }

    /// Whether the group is transitive on k-subsets, decided by the size of
    /// the orbit of `{0, ..., k-1}`.
    pub fn is_k_homogeneous(&self, k: usize) -> Result<bool> {
        self.check_arity(k)?;
        let orbit = self.subset_orbit_masks(low_mask(k))?;
        Ok(orbit.len() as u128 == binomial(self.degree(), k))
    }

    /// Whether the group is transitive on k-tuples of distinct points,
    /// decided by the size of the orbit of `(0, ..., k-1)`.
    pub fn is_k_transitive(&self, k: usize) -> Result<bool> {
        self.check_arity(k)?;
        let start: Vec<u8> = (0..k as u8).collect();
        let orbit = self.tuple_orbit(start, &mut HashSet::new())?;
        Ok(orbit.len() as u128 == falling_factorial(self.degree(), k))
    }

    /// Compares orbit counts on m-subsets and k-subsets. Requires
    /// `m <= k` and `m + k <= degree`.
    pub fn orbit_count_monotonicity_check(&self, m: usize, k: usize) -> Result<MonotonicityCheck> {
        if m > k || m + k > self.degree() {
            return Err(Error::InvalidRange(format!(
                "need m <= k and m + k <= {}, got m = {m}, k = {k}",
                self.degree()
            )));
        }
        let orbits_m = self.count_orbits_on_ksubsets(m)?;
        let orbits_k = self.count_orbits_on_ksubsets(k)?;
        Ok(MonotonicityCheck { m, k, orbits_m, orbits_k, holds: orbits_k >= orbits_m })
    }

    /// Finds a group element mapping the set `from` onto the set `to`, by
    /// breadth-first search over the orbit of `from` with parent links.
    pub fn subset_transporter(&self, from: &VertexSet, to: &VertexSet) -> Result<Option<Permutation>> {
        if from.len() != to.len() {
            return Err(Error::SizeMismatch { spares: from.len(), faults: to.len() });
        }
        for s in [from, to] {
            if let Some(&point) = s.members().last() {
                self.check_point(point)?;
            }
        }
        let (start, goal) = (from.to_mask(), to.to_mask());
        let mut parent: HashMap<u64, Option<(u64, usize)>> = HashMap::from([(start, None)]);
        let mut queue = VecDeque::from([start]);
        while let Some(s) = queue.pop_front() {
            if s == goal {
                break;
            }
            for (i, g) in self.generators().iter().enumerate() {
                let t = g.apply_mask(s);
                if !parent.contains_key(&t) {
                    if parent.len() >= self.cap() {
                        return Err(Error::OrbitTooLarge { cap: self.cap() });
                    }
                    parent.insert(t, Some((s, i)));
                    queue.push_back(t);
                }
            }
        }
        if !parent.contains_key(&goal) {
            return Ok(None);
        }
        let mut path = Vec::new();
        let mut cur = goal;
        while let Some((prev, i)) = parent[&cur] {
            path.push(i);
            cur = prev;
        }
        let element =
            path.iter().rev().fold(Permutation::identity(self.degree()), |acc, &i| acc.then(&self.generators()[i]));
        Ok(Some(element))
    }
}

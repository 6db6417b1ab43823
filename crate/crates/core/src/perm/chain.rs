//! Deterministic Schreier–Sims stabilizer chains.

use std::collections::VecDeque;

use num_bigint::BigUint;

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Strong generators whose first moved base point is this level's.
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
}

/// A base with transversals for the chain of point stabilizers of a group.
///
/// Base points are chosen as the smallest point moved by the first
/// generator (or sifted residue) that fixes every earlier base point.
#[derive(Clone, Debug)]
pub(crate) struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub(crate) fn build(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabilizerChain { degree, levels: Vec::new() };
        for g in generators.iter().filter(|g| !g.is_identity()) {
            let moved_level = chain.levels.iter().position(|l| g.apply(l.base) != l.base);
            let level = match moved_level {
                Some(i) => i,
                None => chain.push_level(g.first_moved().expect("non-identity")),
            };
            chain.levels[level].generators.push(g.clone());
        }

        // Work downwards; every level above `i` is complete when `i` is processed.
        let mut i = chain.levels.len();
        while i > 0 {
            let level = i - 1;
            chain.rebuild_transversal(level);
            match chain.first_failing_schreier_generator(level) {
                Some((residue, at)) => {
                    let target = if at == chain.levels.len() {
                        chain.push_level(residue.first_moved().expect("non-identity residue"))
                    } else {
                        at
                    };
                    chain.levels[target].generators.push(residue);
                    i = target + 1;
                }
                None => i -= 1,
            }
        }
        chain
    }

    /// Builds the chain from a base and a strong generating set relative to
    /// it, computing transversals only. The caller guarantees the strong
    /// generating property.
    pub(crate) fn from_strong_generators(degree: usize, base: &[usize], generators: &[Permutation]) -> Self {
        let mut chain = StabilizerChain { degree, levels: Vec::new() };
        for &b in base {
            chain.push_level(b);
        }
        for g in generators.iter().filter(|g| !g.is_identity()) {
            let level = chain
                .levels
                .iter()
                .position(|l| g.apply(l.base) != l.base)
                .expect("strong generator fixes the whole base");
            chain.levels[level].generators.push(g.clone());
        }
        for level in (0..chain.levels.len()).rev() {
            chain.rebuild_transversal(level);
        }
        chain
    }

    fn push_level(&mut self, base: usize) -> usize {
        self.levels.push(Level {
            base,
            generators: Vec::new(),
            orbit: Vec::new(),
            transversal: Vec::new(),
            inverse: Vec::new(),
        });
        self.levels.len() - 1
    }

    /// Strong generators of the stabilizer of the first `level` base points.
    fn strong_generators(&self, level: usize) -> impl Iterator<Item = &Permutation> {
        self.levels[level..].iter().flat_map(|l| l.generators.iter())
    }

    fn rebuild_transversal(&mut self, level: usize) {
        let base = self.levels[level].base;
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[base] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![base];
        let mut queue = VecDeque::from([base]);
        let gens: Vec<Permutation> = self.strong_generators(level).cloned().collect();
        while let Some(b) = queue.pop_front() {
            for s in &gens {
                let c = s.apply(b);
                if transversal[c].is_none() {
                    let u = transversal[b].as_ref().expect("orbit point").then(s);
                    transversal[c] = Some(u);
                    orbit.push(c);
                    queue.push_back(c);
                }
            }
        }
        let inverse = transversal.iter().map(|u| u.as_ref().map(Permutation::inverse)).collect();
        let l = &mut self.levels[level];
        l.orbit = orbit;
        l.transversal = transversal;
        l.inverse = inverse;
    }

    /// Finds a Schreier generator of `level` that does not sift through the
    /// levels below it, returning the residue and the level where sifting
    /// stopped.
    fn first_failing_schreier_generator(&self, level: usize) -> Option<(Permutation, usize)> {
        let l = &self.levels[level];
        for &b in &l.orbit {
            let ub = l.transversal[b].as_ref().expect("orbit point");
            for s in self.strong_generators(level) {
                let c = s.apply(b);
                let schreier = ub.then(s).then(l.inverse[c].as_ref().expect("orbit point"));
                if schreier.is_identity() {
                    continue;
                }
                let (residue, at) = self.sift(schreier, level + 1);
                if !residue.is_identity() {
                    return Some((residue, at));
                }
            }
        }
        None
    }

    /// Strips `g` through the levels from `from` on. Returns the residue and
    /// the index of the level where it left the transversal (or the chain
    /// length if it passed every level).
    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (i, l) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(l.base);
            match &l.inverse[b] {
                Some(inv) => g = g.then(inv),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        let (residue, _) = self.sift(g.clone(), 0);
        residue.is_identity()
    }

    pub(crate) fn order(&self) -> BigUint {
        self.levels.iter().map(|l| BigUint::from(l.orbit.len())).product()
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub(crate) fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }
}

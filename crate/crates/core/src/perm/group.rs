use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;

use super::chain::StabilizerChain;
use super::orbit::DEFAULT_UNIVERSE_CAP;
use super::{parse_cycles, Permutation};
use crate::error::{Error, Result};

/// Largest supported group degree; subsets are handled as 64-bit masks.
pub const MAX_DEGREE: usize = 64;

/// A permutation group given by generators.
///
/// The stabilizer chain is built on first use and cached; after that every
/// query is read-only.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    cap: usize,
    chain: OnceLock<StabilizerChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
        Ok(PermGroup { degree, generators, cap: DEFAULT_UNIVERSE_CAP, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        Self::new(degree, Vec::new())
    }

    /// `Sym(0..degree)`, generated by a transposition and an n-cycle.
    pub fn symmetric(degree: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::cycle(degree, &[0, 1])?);
        }
        if degree >= 3 {
            gens.push(Permutation::cycle(degree, &(0..degree).collect::<Vec<_>>())?);
        }
        Self::new(degree, gens)
    }

    /// The cyclic group generated by `(0 1 ... n-1)`.
    pub fn cyclic(degree: usize) -> Result<Self> {
        let gens =
            if degree >= 2 { vec![Permutation::cycle(degree, &(0..degree).collect::<Vec<_>>())?] } else { Vec::new() };
        Self::new(degree, gens)
    }

    /// A group whose generators are known to be a strong generating set
    /// relative to `base`; the chain is assembled without sifting.
    pub(crate) fn from_strong_generators(degree: usize, generators: Vec<Permutation>, base: &[usize]) -> Result<Self> {
        let group = Self::new(degree, generators)?;
        let chain = StabilizerChain::from_strong_generators(degree, base, &group.generators);
        let _ = group.chain.set(chain);
        Ok(group)
    }

    /// Forgets any cached chain, so the next query rebuilds it by Schreier–Sims.
    pub fn without_cached_chain(&self) -> Self {
        PermGroup::new(self.degree, self.generators.clone()).expect("validated on construction").with_cap(self.cap)
    }

    /// Sets the element cap for orbit and universe enumerations.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub(crate) fn chain(&self) -> &StabilizerChain {
        self.chain.get_or_init(|| StabilizerChain::build(self.degree, &self.generators))
    }

    /// Exact group order from the stabilizer chain.
    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Base points of the stabilizer chain.
    pub fn base(&self) -> Vec<usize> {
        self.chain().base()
    }

    /// Basic orbit lengths; their product is the group order.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.chain().transversal_sizes()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: p.degree() });
        }
        Ok(self.chain().contains(p))
    }

    /// Whether `self` and `other` are the same subgroup of `Sym(degree)`.
    pub fn same_group(&self, other: &PermGroup) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for g in self.generators() {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Reads the generator-list format: a line `degree n`, then one
    /// permutation per line in 1-based cycle notation. Blank lines and `#`
    /// comments are skipped; an empty cycle line `()` is the identity.
    pub fn parse_generator_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty generator list".into()))?;
        let degree = header
            .strip_prefix("degree")
            .and_then(|d| d.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("expected 'degree n' header, got {header:?}")))?;
        let generators = lines.map(|l| parse_cycles(l, degree)).collect::<Result<Vec<_>>>()?;
        Self::new(degree, generators)
    }

    pub fn emit_generator_list(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        for g in &self.generators {
            out.push_str(&format!("{g}\n"));
        }
        out
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup").field("degree", &self.degree).field("generators", &self.generators).finish()
    }
}

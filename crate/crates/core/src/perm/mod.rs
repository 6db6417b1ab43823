//! Permutations, permutation groups and their induced actions.
//!
//! Groups act on the right: the image of `a` under `p` is written `a^p`, and
//! `p.compose(&q)` is the permutation `a -> (a^p)^q`, i.e. `p` is applied
//! first. Internally points are 0-based; cycle notation is read and written
//! 1-based.

use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use crate::error::{Error, Result};

mod chain;
mod group;
mod orbit;

pub use group::{PermGroup, MAX_DEGREE};
pub use orbit::{MonotonicityCheck, OrbitDecomposition, Universe, DEFAULT_UNIVERSE_CAP};

/// A bijection of `0..degree`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Fails with `Parse` if `images` is not a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Parse(format!("{images:?} is not a permutation of 0..{n}")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    /// The cycle `(c0 c1 ... cm)` on `degree` points, 0-based.
    pub fn cycle(degree: usize, points: &[usize]) -> Result<Self> {
        Self::from_cycles(degree, &[points.to_vec()])
    }

    /// Builds a permutation from disjoint 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::Parse(format!("point {} exceeds degree {degree}", p + 1)));
                }
                if std::mem::replace(&mut used[p], true) {
                    return Err(Error::Parse(format!("point {} repeated in cycle notation", p + 1)));
                }
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `a^self`. Panics if `a` is out of range; see [`Permutation::try_apply`].
    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn try_apply(&self, a: usize) -> Result<usize> {
        self.images.get(a).copied().ok_or(Error::InvalidPoint { point: a, degree: self.degree() })
    }

    /// The product `self * other`: apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(self.then(other))
    }

    #[inline]
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&a| other.images[a]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (a, &b) in self.images.iter().enumerate() {
            images[b] = a;
        }
        Permutation { images }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(a, &b)| a == b)
    }

    /// Smallest point not fixed, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(a, &b)| a != b).map(|(a, _)| a)
    }

    /// Image of a point set given as a bit mask (degree at most 64).
    #[inline]
    pub(crate) fn apply_mask(&self, mut mask: u64) -> u64 {
        let mut out = 0;
        while mask != 0 {
            let a = mask.trailing_zeros() as usize;
            out |= 1 << self.images[a];
            mask &= mask - 1;
        }
        out
    }

    /// Nontrivial cycles, each starting at its smallest point, 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut a = self.images[start];
            while a != start {
                seen[a] = true;
                cycle.push(a);
                a = self.images[a];
            }
            out.push(cycle);
        }
        out
    }

    /// Order of the permutation as a group element (lcm of cycle lengths).
    pub fn element_order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles().iter().fold(1, |acc, c| {
            let l = c.len() as u64;
            acc / gcd(acc, l) * l
        })
    }
}

/// Reads 1-based disjoint cycle notation such as `(1 2 3)(4 5)`.
///
/// Points inside a cycle may be separated by spaces or commas. When the
/// degree is at most 9, a cycle written without separators (`(235)`) is read
/// digit by digit. Points not mentioned are fixed.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body_start = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in cycle notation at {rest:?}")))?;
        let close = body_start.find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
        let body = &body_start[..close];
        let tokens: Vec<&str> = body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
        let tokens: Vec<String> = if tokens.len() == 1 && tokens[0].len() > 1 && degree <= 9 {
            tokens[0].chars().map(String::from).collect()
        } else {
            tokens.into_iter().map(String::from).collect()
        };
        let mut cycle = Vec::with_capacity(tokens.len());
        for tok in &tokens {
            let p: usize = tok.parse().map_err(|_| Error::Parse(format!("bad point {tok:?} in cycle notation")))?;
            if p == 0 || p > degree {
                return Err(Error::Parse(format!("point {p} outside 1..={degree}")));
            }
            cycle.push(p - 1);
        }
        cycles.push(cycle);
        rest = body_start[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles)
}

/// 1-based cycle notation; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self)
    }
}

/// `&p * &q` applies `p` first. Panics on a degree mismatch.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in permutation product");
        self.then(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Permutation {
        parse_cycles("(1 2 3 4 5 6 7)", 7).unwrap()
    }

    fn y() -> Permutation {
        parse_cycles("(2 3 5)(4 7 6)", 7).unwrap()
    }

    #[test]
    fn seven_cycle_wraps() {
        assert_eq!(x().apply(6), 0);
        assert_eq!(x().apply(0), 1);
        assert_eq!(parse_cycles("(1234567)", 7).unwrap(), x());
    }

    #[test]
    fn y_fixes_the_first_point() {
        let y = y();
        assert_eq!(y.apply(0), 0);
        assert_eq!(y.apply(1), 2);
        assert_eq!(y.apply(4), 1);
        assert_eq!(y.apply(3), 6);
        assert_eq!(parse_cycles("(235)(476)", 7).unwrap(), y);
        assert_eq!(y.to_string(), "(2 3 5)(4 7 6)");
    }

    #[test]
    fn xy_equals_y_x_squared() {
        let (x, y) = (x(), y());
        let lhs = x.compose(&y).unwrap();
        let rhs = y.compose(&x.compose(&x).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_is_left_to_right() {
        let (x, y) = (x(), y());
        let xy = &x * &y;
        for a in 0..7 {
            assert_eq!(xy.apply(a), y.apply(x.apply(a)));
        }
    }

    #[test]
    fn inverse_and_identity() {
        let p = y();
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert_eq!(parse_cycles("", 5).unwrap(), Permutation::identity(5));
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(x().pow(7), Permutation::identity(7));
        assert_eq!(x().element_order(), 7);
        assert_eq!(y().element_order(), 3);
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let err = Permutation::identity(3).compose(&Permutation::identity(4)).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { expected: 3, found: 4 });
    }

    #[test]
    fn bad_cycle_notation() {
        assert!(matches!(parse_cycles("(1 2 1)", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("(1 2)(2 3)", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("(1 4)", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("(0 1)", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("(1 2", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("1 2", 3), Err(Error::Parse(_))));
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn multi_digit_points() {
        let p = parse_cycles("(1 10)(2,11)", 12).unwrap();
        assert_eq!(p.apply(9), 0);
        assert_eq!(p.apply(10), 1);
        assert_eq!(parse_cycles(&p.to_string(), 12).unwrap(), p);
    }

    #[test]
    fn masks() {
        let p = Permutation::cycle(4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(p.apply_mask(0b0101), 0b1010);
        assert_eq!(p.apply_mask(0), 0);
        assert_eq!(p.first_moved(), Some(0));
        assert_eq!(Permutation::identity(4).first_moved(), None);
    }
}

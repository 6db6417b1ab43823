//! Counting helpers and lexicographic k-subset enumeration.

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// `n (n-1) ... (n-k+1)`, the number of k-tuples of distinct points.
pub fn falling_factorial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).try_fold(1u128, |acc, i| acc.checked_mul((n - i) as u128)).unwrap_or(u128::MAX)
}

/// Lexicographic iterator over the k-subsets of `0..n`, each yielded as a
/// strictly increasing vector.
#[derive(Debug, Clone)]
pub struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Subsets {
    pub fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (0..k).collect());
        Subsets { n, current }
    }

    /// Starts the enumeration at the subset with the given lexicographic rank.
    pub fn starting_at(n: usize, k: usize, rank: u128) -> Self {
        let current = (rank < binomial(n, k)).then(|| unrank_lex(n, k, rank));
        Subsets { n, current }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let k = next.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                return Some(out);
            }
        }
        Some(out)
    }
}

/// The k-subset of `0..n` at position `rank` in lexicographic order.
pub fn unrank_lex(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        let remaining = k - slot - 1;
        loop {
            let block = binomial(n - next - 1, remaining);
            if rank < block {
                break;
            }
            rank -= block;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

/// Lexicographic rank of a strictly increasing k-subset of `0..n`.
pub fn rank_lex(n: usize, subset: &[usize]) -> u128 {
    let k = subset.len();
    let mut rank = 0u128;
    let mut prev = 0usize;
    for (slot, &x) in subset.iter().enumerate() {
        for skipped in prev..x {
            rank += binomial(n - skipped - 1, k - slot - 1);
        }
        prev = x + 1;
    }
    rank
}

/// Table-driven colexicographic ranking of subsets stored as bit masks.
#[derive(Debug, Clone)]
pub(crate) struct MaskRanker {
    table: Vec<Vec<usize>>,
}

impl MaskRanker {
    /// Ranks k-subsets of `0..n`; the caller guarantees `C(n, k)` fits in `usize`.
    pub(crate) fn new(n: usize, k: usize) -> Self {
        let table = (0..=n).map(|p| (0..=k).map(|i| binomial(p, i) as usize).collect()).collect();
        MaskRanker { table }
    }

    pub(crate) fn rank(&self, mut mask: u64) -> usize {
        let mut rank = 0;
        let mut i = 1;
        while mask != 0 {
            let p = mask.trailing_zeros() as usize;
            rank += self.table[p][i];
            mask &= mask - 1;
            i += 1;
        }
        rank
    }
}

//! Fixed-cardinality subsets of `0..n` (n ≤ 64) as bitmasks in colexicographic
//! order, with ranking and unranking so a level can be cut into contiguous
//! rank ranges.
//!
//! Colex order on k-subsets coincides with ascending numeric order of their
//! masks, so successors come from Gosper's hack.

/// Binomial coefficient C(n, k) in `u64`, saturating on overflow.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Colex rank of a mask: Σ C(c_i, i) over its members c_1 < c_2 < … (1-based i).
pub fn rank(mask: u64) -> u64 {
    let mut r = 0;
    let mut bits = mask;
    let mut i = 1;
    while bits != 0 {
        let c = bits.trailing_zeros() as usize;
        r += binomial(c, i);
        bits &= bits - 1;
        i += 1;
    }
    r
}

/// The k-subset of rank `r` in colex order.
pub fn unrank(mut r: u64, k: usize) -> u64 {
    let mut mask = 0u64;
    for i in (1..=k).rev() {
        // Largest c with C(c, i) <= r.
        let mut c = i - 1;
        while binomial(c + 1, i) <= r {
            c += 1;
        }
        r -= binomial(c, i);
        mask |= 1u64 << c;
    }
    mask
}

/// Next mask with the same popcount (Gosper's hack). Caller bounds the universe.
#[inline]
pub fn next(mask: u64) -> u64 {
    let low = mask & mask.wrapping_neg();
    let ripple = mask.wrapping_add(low);
    if ripple == 0 {
        return 0;
    }
    (((ripple ^ mask) >> 2) / low) | ripple
}

/// Iterator over the k-subsets with colex ranks in `[start, end)`.
#[derive(Debug, Clone)]
pub struct RankRange {
    current: u64,
    remaining: u64,
    empty_set: bool,
}

impl RankRange {
    pub fn new(k: usize, start: u64, end: u64) -> Self {
        let remaining = end.saturating_sub(start);
        Self {
            current: if k == 0 { 0 } else { unrank(start, k) },
            remaining,
            empty_set: k == 0,
        }
    }
}

impl Iterator for RankRange {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self.current;
        if !self.empty_set && self.remaining > 0 {
            self.current = next(self.current);
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

/// All k-subsets of `0..n`, in colex order.
pub fn all(n: usize, k: usize) -> RankRange {
    RankRange::new(k, 0, binomial(n, k))
}

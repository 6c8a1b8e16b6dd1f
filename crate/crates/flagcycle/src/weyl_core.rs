//! Signed permutations and the hyperoctahedral-type Weyl groups.
//!
//! Elements of the groups `S_n ⋉ Z_2^n` (types B/C) and `S_n ⋉ Z_2^{n-1}`
//! (type D) are stored in one-line notation as a sequence of `n` nonzero
//! signed integers whose absolute values form a permutation of `1..=n`.
//! The module provides the group law, the simple generator sets used
//! throughout the crate, a breadth-first word-length oracle over those
//! generators, and closed-form length algorithms for both families.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Which semidirect product the element lives in.
///
/// `FullSign` is `S_n ⋉ Z_2^n` (any sign pattern is allowed); `EvenSign`
/// is `S_n ⋉ Z_2^{n-1}` (only sign patterns with an even number of minus
/// signs occur).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeylFamily {
    FullSign,
    EvenSign,
}

/// Errors raised while constructing or combining signed permutations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("entry list is empty or has wrong length (expected {expected}, got {got})")]
    BadLength { expected: usize, got: usize },
    #[error("entries' absolute values are not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("even-sign family requires an even number of negative entries, got {0}")]
    OddSignCount(usize),
    #[error("could not parse entry {0:?} as a nonzero integer")]
    BadEntry(String),
    #[error("mismatched rank or family between operands")]
    Mismatch,
    #[error("rank {0} exceeds the enumeration cap of {1}")]
    CapExceeded(usize, usize),
    #[error("rank must be at least {0}")]
    RankTooSmall(usize),
}

/// A signed permutation in one-line notation.
///
/// `entries[i]` is the image of `i+1`; a negative value marks a sign
/// change. The invariants (absolute values a permutation, parity for
/// `EvenSign`) are enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    entries: Vec<i32>,
    family: WeylFamily,
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl SignedPermutation {
    /// Validates and wraps a one-line entry vector.
    pub fn new(entries: Vec<i32>, family: WeylFamily) -> Result<Self, WeylError> {
        let n = entries.len();
        if n == 0 {
            return Err(WeylError::BadLength { expected: 1, got: 0 });
        }
        let mut seen = vec![false; n];
        for &e in &entries {
            let a = e.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(WeylError::NotAPermutation(n));
            }
            seen[a - 1] = true;
        }
        if family == WeylFamily::EvenSign {
            let negs = entries.iter().filter(|&&e| e < 0).count();
            if negs % 2 != 0 {
                return Err(WeylError::OddSignCount(negs));
            }
        }
        Ok(SignedPermutation { entries, family })
    }

    /// Parses a comma- or whitespace-separated list of signed integers.
    pub fn parse(text: &str, n: usize, family: WeylFamily) -> Result<Self, WeylError> {
        let mut entries = Vec::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let v: i32 = tok
                .parse()
                .map_err(|_| WeylError::BadEntry(tok.to_string()))?;
            if v == 0 {
                return Err(WeylError::BadEntry(tok.to_string()));
            }
            entries.push(v);
        }
        if entries.len() != n {
            return Err(WeylError::BadLength { expected: n, got: entries.len() });
        }
        Self::new(entries, family)
    }

    /// The identity element.
    pub fn identity(n: usize, family: WeylFamily) -> Self {
        SignedPermutation { entries: (1..=n as i32).collect(), family }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn family(&self) -> WeylFamily {
        self.family
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    /// Number of negative entries.
    pub fn neg_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e < 0).count()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &e)| e == i as i32 + 1)
    }

    /// Group law: `(u ∘ w)_i = sign(w_i) · u_{|w_i|}`.
    pub fn compose(&self, w: &SignedPermutation) -> Result<SignedPermutation, WeylError> {
        if self.n() != w.n() || self.family != w.family {
            return Err(WeylError::Mismatch);
        }
        let entries = w
            .entries
            .iter()
            .map(|&wi| {
                let u = self.entries[(wi.unsigned_abs() - 1) as usize];
                if wi < 0 { -u } else { u }
            })
            .collect();
        Ok(SignedPermutation { entries, family: self.family })
    }

    /// The group inverse: `u` with `compose(self, u) = identity`.
    pub fn inverse(&self) -> SignedPermutation {
        let n = self.n();
        let mut entries = vec![0i32; n];
        for (i, &e) in self.entries.iter().enumerate() {
            let a = (e.unsigned_abs() - 1) as usize;
            entries[a] = if e < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        SignedPermutation { entries, family: self.family }
    }

    /// Flips every sign: entrywise `w_i ↦ -w_i` (stays in the same family
    /// only when the parity permits; the caller chooses the family).
    pub fn with_entries(&self, entries: Vec<i32>) -> Result<SignedPermutation, WeylError> {
        Self::new(entries, self.family)
    }
}

/// The simple generator set used for word length.
///
/// `FullSign`: the `n-1` adjacent transpositions plus the sign flip at the
/// last position `(…, a) ↦ (…, -a)`. `EvenSign`: the `n-1` adjacent
/// transpositions plus the coupled flip of the last pair
/// `(…, a, b) ↦ (…, -b, -a)`.
pub fn simple_generators(n: usize, family: WeylFamily) -> Result<Vec<SignedPermutation>, WeylError> {
    if n < 2 {
        return Err(WeylError::RankTooSmall(2));
    }
    let mut gens = Vec::with_capacity(n);
    for i in 0..n - 1 {
        let mut e: Vec<i32> = (1..=n as i32).collect();
        e.swap(i, i + 1);
        gens.push(SignedPermutation { entries: e, family });
    }
    match family {
        WeylFamily::FullSign => {
            let mut e: Vec<i32> = (1..=n as i32).collect();
            e[n - 1] = -(n as i32);
            gens.push(SignedPermutation { entries: e, family });
        }
        WeylFamily::EvenSign => {
            let mut e: Vec<i32> = (1..=n as i32).collect();
            e[n - 2] = -(n as i32);
            e[n - 1] = -(n as i32 - 1);
            gens.push(SignedPermutation { entries: e, family });
        }
    }
    Ok(gens)
}

/// Group order: `n!·2^n` for `FullSign`, `n!·2^{n-1}` for `EvenSign`.
pub fn group_order(n: usize, family: WeylFamily) -> u64 {
    let fact: u64 = (1..=n as u64).product();
    match family {
        WeylFamily::FullSign => fact << n,
        WeylFamily::EvenSign => fact << (n - 1),
    }
}

/// Enumerates the whole group in a canonical order: lexicographic on the
/// absolute-value pattern, then on the sign pattern (`+` before `-` at the
/// first differing slot).
pub fn enumerate_group(
    n: usize,
    family: WeylFamily,
    cap: Option<usize>,
) -> Result<Vec<SignedPermutation>, WeylError> {
    if let Some(cap) = cap {
        if n > cap {
            return Err(WeylError::CapExceeded(n, cap));
        }
    }
    let mut out = Vec::with_capacity(group_order(n, family) as usize);
    let mut perm: Vec<i32> = (1..=n as i32).collect();
    loop {
        for mask in 0u32..(1 << n) {
            if family == WeylFamily::EvenSign && mask.count_ones() % 2 != 0 {
                continue;
            }
            let entries: Vec<i32> = perm
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask & (1 << i) != 0 { -v } else { v })
                .collect();
            out.push(SignedPermutation { entries, family });
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

/// Advances `v` to the next lexicographic permutation; returns false when
/// `v` was already the last one.
fn next_permutation(v: &mut [i32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Breadth-first word-length table for a whole group, over
/// [`simple_generators`]. Built once; lookups are O(1).
pub struct LengthTable {
    n: usize,
    family: WeylFamily,
    dist: HashMap<Vec<i32>, u32>,
}

impl LengthTable {
    /// Runs BFS from the identity through right multiplication by the
    /// simple generators until the group is exhausted.
    pub fn build(n: usize, family: WeylFamily) -> Result<Self, WeylError> {
        let gens = simple_generators(n, family)?;
        let id = SignedPermutation::identity(n, family);
        let mut dist: HashMap<Vec<i32>, u32> = HashMap::new();
        dist.insert(id.entries.clone(), 0);
        let mut frontier = vec![id];
        let mut d = 0u32;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for w in &frontier {
                for g in &gens {
                    let wg = w.compose(g).expect("same group");
                    if !dist.contains_key(&wg.entries) {
                        dist.insert(wg.entries.clone(), d);
                        next.push(wg);
                    }
                }
            }
            frontier = next;
        }
        Ok(LengthTable { n, family, dist })
    }

    /// Word length of `w` over the simple generators.
    pub fn length(&self, w: &SignedPermutation) -> Result<u32, WeylError> {
        if w.n() != self.n || w.family() != self.family {
            return Err(WeylError::Mismatch);
        }
        self.dist.get(w.entries()).copied().ok_or(WeylError::Mismatch)
    }

    /// Number of elements reached (the group order).
    pub fn count(&self) -> usize {
        self.dist.len()
    }
}

/// Convenience single-element BFS length (builds a table internally; prefer
/// [`LengthTable`] for bulk queries).
pub fn length_bfs(w: &SignedPermutation) -> Result<u32, WeylError> {
    if w.n() == 1 {
        // Rank 1 has no adjacent transposition; handle directly.
        return match (w.family(), w.entries()[0]) {
            (WeylFamily::FullSign, -1) => Ok(1),
            _ => Ok(0),
        };
    }
    LengthTable::build(w.n(), w.family())?.length(w)
}

/// The auxiliary unsigned permutation `w̃`: the positive entries of `w` in
/// order of appearance fill the leading boxes; the absolute values of the
/// negative entries, again in order of appearance, fill the trailing boxes
/// from the right end inward.
fn tilde(w: &SignedPermutation) -> Vec<i32> {
    let n = w.n();
    let mut t = vec![0i32; n];
    let mut lo = 0usize;
    let mut hi = n;
    for &e in w.entries() {
        if e > 0 {
            t[lo] = e;
            lo += 1;
        } else {
            hi -= 1;
            t[hi] = -e;
        }
    }
    t
}

/// `L(w̃) = n(n-1)/2 − #{(i,k): i<k, w̃_i < w̃_k}` — the number of
/// inversions of `w̃`.
fn big_l(t: &[i32]) -> u32 {
    let n = t.len();
    let ascents: usize = (0..n)
        .map(|i| (i + 1..n).filter(|&k| t[i] < t[k]).count())
        .sum();
    (n * (n - 1) / 2 - ascents) as u32
}

/// Closed-form length for the full-sign family:
/// `l(w) = L(w̃) + Σ_{negative positions j} (n − j) + m`.
pub fn length_paper_c(w: &SignedPermutation) -> Result<u32, WeylError> {
    if w.family() != WeylFamily::FullSign {
        return Err(WeylError::Mismatch);
    }
    let n = w.n() as u32;
    let t = tilde(w);
    let mut f = 0u32;
    let mut m = 0u32;
    for (i, &e) in w.entries().iter().enumerate() {
        if e < 0 {
            f += n - (i as u32 + 1);
            m += 1;
        }
    }
    Ok(big_l(&t) + f + m)
}

/// Closed-form length for the even-sign family: with the negative entries
/// at positions `k_1 < … < k_{2m}`,
/// `l(w) = L(w̃) + Σ_{j=1}^{m} (2n − 1 − k_{2j} − k_{2j-1}) + m`.
pub fn length_paper_d(w: &SignedPermutation) -> Result<u32, WeylError> {
    if w.family() != WeylFamily::EvenSign {
        return Err(WeylError::Mismatch);
    }
    let n = w.n() as u32;
    let t = tilde(w);
    let ks: Vec<u32> = w
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e < 0)
        .map(|(i, _)| i as u32 + 1)
        .collect();
    let m = (ks.len() / 2) as u32;
    let mut f = 0u32;
    for j in 0..m as usize {
        f += 2 * n - 1 - ks[2 * j + 1] - ks[2 * j];
    }
    Ok(big_l(&t) + f + m)
}

/// Dispatches to the family's closed-form length.
pub fn length_paper(w: &SignedPermutation) -> Result<u32, WeylError> {
    match w.family() {
        WeylFamily::FullSign => length_paper_c(w),
        WeylFamily::EvenSign => length_paper_d(w),
    }
}

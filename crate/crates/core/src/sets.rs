//! Finite sets of non-negative integers and their sum sets.
//!
//! Two representations live here. [`LabelSet`] is a characteristic bit-vector
//! over the values `0..=bound` and is what labels carry around. Once a ground
//! set `X` is fixed, subsets of `X` are also handled as position masks
//! (`u32`, bit `i` standing for the `i`-th smallest element of `X`), and
//! [`MaskAlgebra`] evaluates sum sets directly on those masks.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest element accepted in a ground set.
pub const MAX_GROUND_VALUE: u32 = 1 << 16;

/// Largest representation bound a [`LabelSet`] may use.
pub const MAX_BOUND: u32 = 2 * MAX_GROUND_VALUE;

/// Ground sets with more elements than this cannot be addressed by masks.
pub const MAX_MASK_WIDTH: usize = 31;

/// A non-empty finite set of non-negative integers, stored as a bit-vector
/// over `0..=bound`.
///
/// Equality, hashing and ordering look only at the members. The ordering is
/// value-lexicographic on the ascending member lists, so `{0,1,2} < {0,2} <
/// {1}`.
#[derive(Clone)]
pub struct LabelSet {
    // trimmed: the last word is non-zero
    words: Vec<u64>,
    bound: u32,
}

impl LabelSet {
    /// Builds a set whose members must not exceed `bound`.
    pub fn with_bound<I: IntoIterator<Item = u32>>(members: I, bound: u32) -> Result<Self> {
        if bound > MAX_BOUND {
            return Err(Error::Representation {
                bound: MAX_BOUND,
                value: u64::from(bound),
            });
        }
        let mut words = Vec::new();
        for m in members {
            if m > bound {
                return Err(Error::Representation {
                    bound,
                    value: u64::from(m),
                });
            }
            let w = (m / 64) as usize;
            if words.len() <= w {
                words.resize(w + 1, 0);
            }
            words[w] |= 1u64 << (m % 64);
        }
        if words.is_empty() {
            return Err(Error::Domain("the empty set is not a legal label".into()));
        }
        Ok(Self { words, bound })
    }

    /// Builds a set with the natural bound `2 * max`, which is enough for any
    /// sum with another set of no larger maximum.
    pub fn new<I: IntoIterator<Item = u32>>(members: I) -> Result<Self> {
        let members: Vec<u32> = members.into_iter().collect();
        let max = members.iter().copied().max().unwrap_or(0);
        Self::with_bound(members, max.saturating_mul(2))
    }

    pub fn singleton(value: u32) -> Result<Self> {
        Self::new([value])
    }

    /// Same members, different representation bound.
    pub fn rebound(&self, bound: u32) -> Result<Self> {
        Self::with_bound(self.members(), bound)
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Cardinality (the set-indexing number of whatever element carries it).
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min_member(&self) -> u32 {
        self.members().next().expect("label sets are non-empty")
    }

    pub fn max_member(&self) -> u32 {
        let last = self.words.len() - 1;
        last as u32 * 64 + (63 - self.words[last].leading_zeros())
    }

    pub fn contains(&self, value: u32) -> bool {
        let w = (value / 64) as usize;
        w < self.words.len() && self.words[w] & (1u64 << (value % 64)) != 0
    }

    pub fn is_subset(&self, other: &LabelSet) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn members(&self) -> Members<'_> {
        Members {
            words: &self.words,
            index: 0,
            current: self.words[0],
        }
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.members().collect()
    }

    /// `self + other = {a + b : a ∈ self, b ∈ other}` under the larger of the
    /// two bounds.
    pub fn sum(&self, other: &LabelSet) -> Result<LabelSet> {
        sumset(self, other)
    }
}

/// Ascending iterator over the members of a [`LabelSet`].
pub struct Members<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Members<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros();
                self.current &= self.current - 1;
                return Some(self.index as u32 * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

/// Sum set of two label sets.
///
/// The result uses `max(a.bound, b.bound)`; a sum whose maximum exceeds that
/// bound is a representation error rather than a silent widening.
pub fn sumset(a: &LabelSet, b: &LabelSet) -> Result<LabelSet> {
    let bound = a.bound.max(b.bound);
    let top = u64::from(a.max_member()) + u64::from(b.max_member());
    if top > u64::from(bound) {
        return Err(Error::Representation { bound, value: top });
    }
    let len = (top / 64) as usize + 1;
    let mut out = vec![0u64; len];
    // shift the set with fewer members
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    for x in small.members() {
        let ws = (x / 64) as usize;
        let bs = x % 64;
        for (i, &w) in large.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            out[i + ws] |= w << bs;
            if bs != 0 && i + ws + 1 < len {
                out[i + ws + 1] |= w >> (64 - bs);
            }
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Ok(LabelSet { words: out, bound })
}

impl PartialEq for LabelSet {
    fn eq(&self, other: &Self) -> bool {
        self.words == other.words
    }
}

impl Eq for LabelSet {}

impl Hash for LabelSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.words.hash(state);
    }
}

impl Ord for LabelSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members().cmp(other.members())
    }
}

impl PartialOrd for LabelSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for LabelSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.members())
    }
}

impl<'de> Deserialize<'de> for LabelSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let values = Vec::<u32>::deserialize(deserializer)?;
        LabelSet::new(values).map_err(serde::de::Error::custom)
    }
}

/// The finite ground set `X` of non-negative integers whose non-empty
/// subsets are the available labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    values: Vec<u32>,
}

impl GroundSet {
    /// Sorts `values`; duplicates are rejected, not merged.
    pub fn new(mut values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("ground set must be non-empty".into()));
        }
        values.sort_unstable();
        if let Some(w) = values.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Domain(format!("duplicate ground-set element {}", w[0])));
        }
        if let Some(&v) = values.iter().find(|&&v| v > MAX_GROUND_VALUE) {
            return Err(Error::Domain(format!(
                "ground-set element {v} exceeds {MAX_GROUND_VALUE}"
            )));
        }
        Ok(Self { values })
    }

    /// Parses a comma-separated list such as `0,1,2`.
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Domain(format!("invalid ground-set element {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_zero(&self) -> bool {
        self.values[0] == 0
    }

    pub fn max_value(&self) -> u32 {
        *self.values.last().expect("non-empty")
    }

    /// Smallest non-zero element, if any.
    pub fn min_nonzero(&self) -> Option<u32> {
        self.nth_nonzero(0)
    }

    /// The `k`-th smallest non-zero element (0-based).
    pub fn nth_nonzero(&self, k: usize) -> Option<u32> {
        self.values.iter().copied().filter(|&v| v != 0).nth(k)
    }

    /// Representation bound shared by every label of a computation over X.
    pub fn bound(&self) -> u32 {
        2 * self.max_value()
    }

    pub fn index_of(&self, value: u32) -> Option<usize> {
        self.values.binary_search(&value).ok()
    }

    /// A label over this ground set's bound. Members need not lie in `X`.
    pub fn label(&self, members: &[u32]) -> Result<LabelSet> {
        LabelSet::with_bound(members.iter().copied(), self.bound())
    }

    pub fn full_set(&self) -> LabelSet {
        self.label(&self.values).expect("X fits its own bound")
    }

    pub fn contains_set(&self, s: &LabelSet) -> bool {
        s.members().all(|m| self.index_of(m).is_some())
    }

    /// Position mask of `s`, or `None` when `s ⊄ X` or X is too wide.
    pub fn mask_of(&self, s: &LabelSet) -> Option<u32> {
        if self.len() > MAX_MASK_WIDTH {
            return None;
        }
        s.members()
            .try_fold(0u32, |acc, m| self.index_of(m).map(|i| acc | (1 << i)))
    }

    pub fn set_of_mask(&self, mask: u32) -> LabelSet {
        let members = (0..self.len()).filter(|i| mask & (1 << i) != 0).map(|i| self.values[i]);
        LabelSet::with_bound(members, self.bound()).expect("non-empty mask over X")
    }

    /// Number of non-empty subsets, `2^|X| - 1`.
    pub fn powerset_size(&self) -> usize {
        (1usize << self.len()) - 1
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GroundSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GroundSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let values = Vec::<u32>::deserialize(deserializer)?;
        GroundSet::new(values).map_err(serde::de::Error::custom)
    }
}

/// Compares two position masks value-lexicographically, matching the
/// ordering of the corresponding [`LabelSet`]s.
pub fn mask_cmp(mut a: u32, mut b: u32) -> Ordering {
    loop {
        match (a, b) {
            (0, 0) => return Ordering::Equal,
            (0, _) => return Ordering::Less,
            (_, 0) => return Ordering::Greater,
            _ => {
                let (la, lb) = (a.trailing_zeros(), b.trailing_zeros());
                if la != lb {
                    return la.cmp(&lb);
                }
                a &= a - 1;
                b &= b - 1;
            }
        }
    }
}

const NO_POSITION: u8 = u8::MAX;

/// Sum-set arithmetic on position masks over a fixed ground set.
#[derive(Clone, Debug)]
pub struct MaskAlgebra {
    n: usize,
    // plus[i * n + j] = position of x_i + x_j in X
    plus: Vec<u8>,
    zero: u32,
}

impl MaskAlgebra {
    pub fn new(ground: &GroundSet) -> Result<Self> {
        let n = ground.len();
        if n > MAX_MASK_WIDTH {
            return Err(Error::Capacity {
                what: "|X| for mask arithmetic",
                actual: n,
                limit: MAX_MASK_WIDTH,
            });
        }
        let v = ground.values();
        let mut plus = vec![NO_POSITION; n * n];
        for i in 0..n {
            for j in 0..n {
                if let Some(p) = ground.index_of(v[i] + v[j]) {
                    plus[i * n + j] = p as u8;
                }
            }
        }
        let zero = if ground.contains_zero() { 1 } else { 0 };
        Ok(Self { n, plus, zero })
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    /// Mask of `{0}`, or 0 when `0 ∉ X`.
    pub fn zero(&self) -> u32 {
        self.zero
    }

    /// `{x_i} + C` as a mask, `None` if it leaves X.
    #[inline]
    pub fn shift(&self, i: usize, c: u32) -> Option<u32> {
        let row = &self.plus[i * self.n..(i + 1) * self.n];
        let mut out = 0u32;
        let mut rest = c;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let p = row[j];
            if p == NO_POSITION {
                return None;
            }
            out |= 1 << p;
        }
        Some(out)
    }

    /// `A + B` as a mask, `None` if the sum set is not contained in X.
    #[inline]
    pub fn sum(&self, a: u32, b: u32) -> Option<u32> {
        let (a, b) = if a.count_ones() <= b.count_ones() { (a, b) } else { (b, a) };
        let mut out = 0u32;
        let mut rest = a;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.shift(i, b)?;
        }
        Some(out)
    }

    /// Positions `j` with `x_i + x_j ∈ S`.
    #[inline]
    pub fn allowed(&self, i: usize, s: u32) -> u32 {
        let row = &self.plus[i * self.n..(i + 1) * self.n];
        let mut out = 0u32;
        for (j, &p) in row.iter().enumerate() {
            if p != NO_POSITION && s & (1 << p) != 0 {
                out |= 1 << j;
            }
        }
        out
    }

    /// All non-empty masks in value-lexicographic order.
    pub fn canonical_masks(&self) -> Vec<u32> {
        let mut masks: Vec<u32> = (1..=self.full()).collect();
        masks.sort_by(|&a, &b| mask_cmp(a, b));
        masks
    }
}

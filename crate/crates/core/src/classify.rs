//! Classification of `P(X) - {∅}` under non-trivial sum-set decomposition.
//!
//! A decomposition `S = B + C` with `B, C ⊆ X` is trivial when one summand is
//! `{0}`. Every subset falls into one of two classes:
//!
//! * non-sum-sets (`rho` of them): no non-trivial decomposition exists;
//! * sum sets: at least one non-trivial decomposition exists.
//!
//! The B-family is the part of the non-sum-sets that are also not non-trivial
//! summands, i.e. admit no `C ≠ {0}` with `S + C ⊆ X`. Such a set can only be
//! adjacent to the `{0}` vertex in a sequentially labeled graph.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sets::{mask_cmp, GroundSet, LabelSet, MaskAlgebra};

/// Default capacity guard for [`classify_powerset`].
pub const DEFAULT_CLASSIFY_LIMIT: usize = 16;

/// Hard ceiling regardless of configuration.
pub const MAX_CLASSIFY_LIMIT: usize = 20;

pub type Decomposition = (LabelSet, LabelSet);

/// Walks the decompositions of `s` with `min(B) <= min(C)`, handing each
/// `(B, C)` mask pair to `visit`. With `maximal_only`, only the largest `B`
/// for each `C` is tried, which is enough to decide existence.
/// Returns early when `visit` returns `true`.
fn walk_decompositions(
    alg: &MaskAlgebra,
    ground: &GroundSet,
    s: u32,
    maximal_only: bool,
    mut visit: impl FnMut(u32, u32) -> bool,
) -> bool {
    let n = alg.width();
    let values = ground.values();
    let zero = alg.zero();
    let allowed: Vec<u32> = (0..n).map(|k| alg.allowed(k, s)).collect();
    let smin = values[s.trailing_zeros() as usize];
    for i in 0..n {
        let xi = values[i];
        if 2 * xi > smin {
            break;
        }
        let Some(cpos) = ground.index_of(smin - xi) else {
            continue;
        };
        let cbit = 1u32 << cpos;
        let above = !((cbit << 1).wrapping_sub(1));
        let rest = allowed[i] & above;
        let mut sub = rest;
        loop {
            let c = cbit | sub;
            if c != zero {
                let bmax = (0..n)
                    .filter(|&k| allowed[k] & c == c)
                    .fold(0u32, |acc, k| acc | (1 << k));
                debug_assert!(bmax & (1 << i) != 0);
                if maximal_only {
                    if bmax != zero && alg.sum(bmax, c) == Some(s) && visit(bmax, c) {
                        return true;
                    }
                } else {
                    // B must keep x_i as its minimum
                    let free = bmax & !((1u32 << (i + 1)).wrapping_sub(1));
                    let mut bsub = free;
                    loop {
                        let b = (1u32 << i) | bsub;
                        if b != zero && alg.sum(b, c) == Some(s) && visit(b, c) {
                            return true;
                        }
                        if bsub == 0 {
                            break;
                        }
                        bsub = (bsub - 1) & free;
                    }
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    false
}

fn mask_is_sumset(alg: &MaskAlgebra, ground: &GroundSet, s: u32) -> bool {
    walk_decompositions(alg, ground, s, true, |_, _| true)
}

fn mask_is_summand(alg: &MaskAlgebra, s: u32) -> bool {
    if s == alg.zero() {
        return false;
    }
    let full = alg.full();
    let mut partners = full;
    let mut rest = s;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        partners &= alg.allowed(i, full);
    }
    partners & !alg.zero() != 0
}

fn mask_decompositions(alg: &MaskAlgebra, ground: &GroundSet, s: u32) -> Vec<(u32, u32)> {
    let mut pairs = BTreeSet::new();
    walk_decompositions(alg, ground, s, false, |b, c| {
        let (lo, hi) = if mask_cmp(b, c).is_le() { (b, c) } else { (c, b) };
        pairs.insert((MaskKey(lo), MaskKey(hi)));
        false
    });
    pairs.into_iter().map(|(a, b)| (a.0, b.0)).collect()
}

#[derive(PartialEq, Eq)]
struct MaskKey(u32);

impl Ord for MaskKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        mask_cmp(self.0, other.0)
    }
}

impl PartialOrd for MaskKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn subset_mask(s: &LabelSet, x: &GroundSet) -> Result<u32> {
    x.mask_of(s)
        .ok_or_else(|| Error::Domain(format!("{s} is not a subset of {x}")))
}

/// All unordered pairs `{B, C}` of non-empty subsets of `x`, neither equal to
/// `{0}`, with `B + C = s`. Pairs are ordered by their smaller member, then by
/// the larger one.
pub fn nontrivial_decompositions(s: &LabelSet, x: &GroundSet) -> Result<Vec<Decomposition>> {
    let alg = MaskAlgebra::new(x)?;
    let mask = subset_mask(s, x)?;
    Ok(mask_decompositions(&alg, x, mask)
        .into_iter()
        .map(|(b, c)| (x.set_of_mask(b), x.set_of_mask(c)))
        .collect())
}

pub fn is_nontrivial_sumset(s: &LabelSet, x: &GroundSet) -> Result<bool> {
    let alg = MaskAlgebra::new(x)?;
    let mask = subset_mask(s, x)?;
    Ok(mask_is_sumset(&alg, x, mask))
}

/// Whether some `C ⊆ X`, `C ≠ {0}`, gives `s + C ⊆ X`, with `s ≠ {0}`.
///
/// `{0}` itself is never a non-trivial summand: `{0} + C = C` is the trivial
/// decomposition of `C`.
pub fn is_nontrivial_summand(s: &LabelSet, x: &GroundSet) -> Result<bool> {
    let alg = MaskAlgebra::new(x)?;
    let mask = subset_mask(s, x)?;
    Ok(mask_is_summand(&alg, mask))
}

/// Partition of `P(X) - {∅}` into non-sum-sets and sum sets, plus the
/// B-family. Lists are in value-lexicographic order.
#[derive(Debug)]
pub struct PowersetClassification {
    ground: GroundSet,
    algebra: MaskAlgebra,
    non_sumsets: Vec<LabelSet>,
    sumsets: Vec<LabelSet>,
    b_family: Vec<LabelSet>,
    non_sumset_masks: Vec<u32>,
    sumset_masks: Vec<u32>,
    b_masks: Vec<u32>,
    decompositions: OnceLock<BTreeMap<LabelSet, Vec<Decomposition>>>,
}

impl PowersetClassification {
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn algebra(&self) -> &MaskAlgebra {
        &self.algebra
    }

    pub fn non_sumsets(&self) -> &[LabelSet] {
        &self.non_sumsets
    }

    pub fn sumsets(&self) -> &[LabelSet] {
        &self.sumsets
    }

    pub fn b_family(&self) -> &[LabelSet] {
        &self.b_family
    }

    pub fn rho(&self) -> usize {
        self.non_sumsets.len()
    }

    pub fn rho_prime(&self) -> usize {
        self.b_family.len()
    }

    pub fn non_sumset_masks(&self) -> &[u32] {
        &self.non_sumset_masks
    }

    pub fn sumset_masks(&self) -> &[u32] {
        &self.sumset_masks
    }

    pub fn b_masks(&self) -> &[u32] {
        &self.b_masks
    }

    pub fn is_sumset_mask(&self, mask: u32) -> bool {
        self.sumset_masks.binary_search_by(|&m| mask_cmp(m, mask)).is_ok()
    }

    /// Non-trivial decompositions of every sum set, computed on first use.
    pub fn decompositions(&self) -> &BTreeMap<LabelSet, Vec<Decomposition>> {
        self.decompositions.get_or_init(|| {
            self.sumset_masks
                .iter()
                .map(|&s| {
                    let pairs = mask_decompositions(&self.algebra, &self.ground, s)
                        .into_iter()
                        .map(|(b, c)| (self.ground.set_of_mask(b), self.ground.set_of_mask(c)))
                        .collect();
                    (self.ground.set_of_mask(s), pairs)
                })
                .collect()
        })
    }

    /// Decompositions of one sum set as mask pairs, without touching the cache.
    pub fn decomposition_masks(&self, s: u32) -> Vec<(u32, u32)> {
        mask_decompositions(&self.algebra, &self.ground, s)
    }
}

#[derive(Serialize)]
struct ClassificationJson<'a> {
    ground: &'a GroundSet,
    non_sumsets: &'a [LabelSet],
    sumsets: &'a [LabelSet],
    b_family: &'a [LabelSet],
    rho: usize,
    rho_prime: usize,
}

impl Serialize for PowersetClassification {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ClassificationJson {
            ground: &self.ground,
            non_sumsets: &self.non_sumsets,
            sumsets: &self.sumsets,
            b_family: &self.b_family,
            rho: self.rho(),
            rho_prime: self.rho_prime(),
        }
        .serialize(serializer)
    }
}

pub fn classify_powerset(x: &GroundSet) -> Result<PowersetClassification> {
    classify_powerset_with_limit(x, DEFAULT_CLASSIFY_LIMIT)
}

pub fn classify_powerset_with_limit(x: &GroundSet, limit: usize) -> Result<PowersetClassification> {
    let limit = limit.min(MAX_CLASSIFY_LIMIT);
    if x.len() > limit {
        return Err(Error::Capacity {
            what: "|X| for classification",
            actual: x.len(),
            limit,
        });
    }
    if !x.contains_zero() {
        return Err(Error::Domain(format!("classification needs 0 in X, got {x}")));
    }
    let algebra = MaskAlgebra::new(x)?;
    let mut non_sumset_masks = Vec::new();
    let mut sumset_masks = Vec::new();
    for s in algebra.canonical_masks() {
        if mask_is_sumset(&algebra, x, s) {
            sumset_masks.push(s);
        } else {
            non_sumset_masks.push(s);
        }
    }
    let b_masks: Vec<u32> = non_sumset_masks
        .iter()
        .copied()
        .filter(|&s| !mask_is_summand(&algebra, s))
        .collect();
    let to_sets = |ms: &[u32]| ms.iter().map(|&m| x.set_of_mask(m)).collect::<Vec<_>>();
    Ok(PowersetClassification {
        ground: x.clone(),
        non_sumsets: to_sets(&non_sumset_masks),
        sumsets: to_sets(&sumset_masks),
        b_family: to_sets(&b_masks),
        algebra,
        non_sumset_masks,
        sumset_masks,
        b_masks,
        decompositions: OnceLock::new(),
    })
}

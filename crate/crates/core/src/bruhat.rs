//! Bruhat order on `W^P` through sorted head prefixes: `λ <= δ` iff for every
//! `k <= m` the sorted first `k` entries of `λ` are entrywise at most those of `δ`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::root_system::FlagContext;
use crate::weyl::{enumerate_wodd, enumerate_wp, min_rep, CosetRep};

/// `Λ^k`: the first `k` head entries in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SortedPrefix(pub Vec<u8>);

impl SortedPrefix {
    pub fn leq(&self, other: &SortedPrefix) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `|Λ^k ∩ {1, …, k}|`
    pub fn count_at_most(&self, bound: u8) -> usize {
        self.0.iter().filter(|&&v| v <= bound).count()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }
}

pub fn sorted_prefix(rep: &CosetRep, k: usize) -> Result<SortedPrefix> {
    if k == 0 || k > rep.len() {
        return Err(Error::PrefixOutOfRange { k, m: rep.len() });
    }
    let mut v = rep.values()[..k].to_vec();
    v.sort_unstable();
    Ok(SortedPrefix(v))
}

pub fn leq(lambda: &CosetRep, delta: &CosetRep) -> Result<bool> {
    if lambda.len() != delta.len() {
        return Err(Error::ContextMismatch(lambda.len(), delta.len()));
    }
    Ok(precedes(lambda, delta))
}

/// [`leq`] for heads already known to have equal length.
pub(crate) fn precedes(lambda: &CosetRep, delta: &CosetRep) -> bool {
    let mut a: Vec<u8> = Vec::with_capacity(lambda.len());
    let mut b: Vec<u8> = Vec::with_capacity(delta.len());
    for (&x, &y) in lambda.values().iter().zip(delta.values()) {
        let pos = a.partition_point(|&v| v < x);
        a.insert(pos, x);
        let pos = b.partition_point(|&v| v < y);
        b.insert(pos, y);
        if a.iter().zip(&b).any(|(p, q)| p > q) {
            return false;
        }
    }
    true
}

/// Every `μ` in `W^P` (or `W^odd` when `odd_only`) with `μ <= λ`, sorted.
pub fn down_set(lambda: &CosetRep, ctx: &FlagContext, odd_only: bool) -> Vec<CosetRep> {
    let universe = if odd_only {
        enumerate_wodd(ctx)
    } else {
        enumerate_wp(ctx)
    };
    universe
        .into_par_iter()
        .filter(|mu| precedes(mu, lambda))
        .collect()
}

/// Elements of `s` not strictly below another element of `s`, sorted and deduplicated.
pub fn maximal(s: &[CosetRep]) -> Vec<CosetRep> {
    let mut items = s.to_vec();
    items.sort();
    items.dedup();
    let keep: Vec<bool> = items
        .par_iter()
        .map(|x| !items.iter().any(|y| y != x && precedes(x, y)))
        .collect();
    items
        .into_iter()
        .zip(keep)
        .filter_map(|(x, k)| k.then_some(x))
        .collect()
}

/// Dimension of the Schubert variety `X(λ)`: the length of its minimal window.
pub fn schubert_dim(lambda: &CosetRep, ctx: &FlagContext) -> Result<usize> {
    Ok(min_rep(lambda, ctx)?.length())
}

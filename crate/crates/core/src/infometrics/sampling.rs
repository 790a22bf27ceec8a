//! Deterministic choice of fragments and partitions.
//!
//! Every draw uses its own ChaCha8 stream, derived from the run seed, the
//! sweep point, the kind of average and the subset size. Results therefore do
//! not depend on thread count or evaluation order.

use itertools::Itertools;
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum DrawKind {
    Fragment = 1,
    Partition = 2,
}

pub(crate) fn rng_for(seed: u64, point: u64, kind: DrawKind, size: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((point << 24) | ((kind as u64) << 16) | size as u64);
    rng
}

/// A set of ancillas, by one-based ancilla number.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FragmentSample {
    pub ancillas: Vec<usize>,
}

/// One ancilla `B` and a disjoint set `C` of `l` ancillas, both one-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionSample {
    pub b: usize,
    pub c: Vec<usize>,
}

/// Keeps all items if there are at most `budget`, otherwise a uniform draw of
/// `budget` of them without replacement, in enumeration order.
fn thin<T>(mut items: Vec<T>, budget: usize, rng: &mut ChaCha8Rng) -> (Vec<T>, bool) {
    if items.len() <= budget {
        return (items, true);
    }
    let mut picks = index::sample(rng, items.len(), budget).into_vec();
    picks.sort_unstable();
    let mut keep = vec![false; items.len()];
    for p in picks {
        keep[p] = true;
    }
    let mut flags = keep.into_iter();
    items.retain(|_| flags.next().unwrap_or(false));
    (items, false)
}

/// The size-`k` fragments of `E_1 … E_N` to average over, and whether the list
/// is exhaustive.
pub fn select_fragments(
    num_ancillas: usize,
    k: usize,
    budget: usize,
    seed: u64,
    point: u64,
) -> (Vec<FragmentSample>, bool) {
    let all = (1..=num_ancillas)
        .combinations(k)
        .map(|ancillas| FragmentSample { ancillas })
        .collect();
    thin(all, budget, &mut rng_for(seed, point, DrawKind::Fragment, k))
}

/// The `(B, C)` partitions with `|C| = l` to average over. `B` ranges over
/// `b_choices`; `C` over the other ancillas. Partitions that would leave no
/// ancilla for the remainder `D` are skipped.
pub fn select_partitions(
    num_ancillas: usize,
    b_choices: &[usize],
    l: usize,
    budget: usize,
    seed: u64,
    point: u64,
) -> (Vec<PartitionSample>, bool) {
    let mut all = Vec::new();
    if l + 1 < num_ancillas {
        for &b in b_choices {
            let rest = (1..=num_ancillas).filter(|&a| a != b);
            all.extend(rest.combinations(l).map(|c| PartitionSample { b, c }));
        }
    }
    thin(all, budget, &mut rng_for(seed, point, DrawKind::Partition, l))
}

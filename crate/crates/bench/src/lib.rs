//! Shared inputs for the benchmarks.

use sl3_fusion::DominantWeight;

/// Pairs of increasing size covering both kinds.
pub fn sample_pairs() -> Vec<(DominantWeight, DominantWeight)> {
    [(1, 1, 1, 1), (3, 2, 2, 1), (2, 1, 1, 4), (5, 5, 4, 3), (8, 6, 5, 7)]
        .into_iter()
        .map(|(a, b, c, d)| (DominantWeight::new(a, b), DominantWeight::new(c, d)))
        .collect()
}

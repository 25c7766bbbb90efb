//! Shared inputs for the benchmarks.

use moncoh::{IdealSampler, MonomialIdeal, VarSet};

/// The square `(ab, bc, cd, ad)` plus the diagonal `ac`.
pub fn square_with_diagonal() -> MonomialIdeal {
    MonomialIdeal::squarefree(
        4,
        [[0, 1], [1, 2], [2, 3], [0, 3], [0, 2]].map(VarSet::from_indices),
    )
    .expect("valid ideal")
}

/// Edge ideal of the `n`-cycle.
pub fn cycle(n: usize) -> MonomialIdeal {
    MonomialIdeal::squarefree(n, (0..n).map(|i| VarSet::from_indices([i, (i + 1) % n])))
        .expect("valid ideal")
}

pub fn random_corpus(
    seed: u64,
    count: usize,
    max_vars: usize,
    max_gens: usize,
) -> Vec<MonomialIdeal> {
    IdealSampler::new(seed, max_vars, max_gens).ideals(count)
}

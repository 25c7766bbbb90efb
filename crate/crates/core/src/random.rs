//! Seeded random squarefree monomial ideals for property and oracle runs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::{MonomialIdeal, MultiDegree, VarSet};

/// Deterministic generator of squarefree, nonzero, proper monomial ideals.
#[derive(Clone, Debug)]
pub struct IdealSampler {
    rng: ChaCha8Rng,
    max_vars: usize,
    max_gens: usize,
}

impl IdealSampler {
    /// Ideals in `1..=max_vars` variables with `1..=max_gens` generators
    /// before minimalization.
    pub fn new(seed: u64, max_vars: usize, max_gens: usize) -> Self {
        assert!((1..=64).contains(&max_vars) && max_gens >= 1);
        IdealSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_vars,
            max_gens,
        }
    }

    pub fn next_ideal(&mut self) -> MonomialIdeal {
        let n = self.rng.gen_range(1..=self.max_vars);
        let r = self.rng.gen_range(1..=self.max_gens);
        let full = VarSet::full(n).bits();
        let supports: Vec<VarSet> = (0..r)
            .map(|_| loop {
                let bits = self.rng.gen::<u64>() & full;
                if bits != 0 {
                    break VarSet::from_bits(bits);
                }
            })
            .collect();
        MonomialIdeal::squarefree(n, supports).expect("nonempty supports give a proper ideal")
    }

    pub fn ideals(&mut self, count: usize) -> Vec<MonomialIdeal> {
        (0..count).map(|_| self.next_ideal()).collect()
    }

    /// A uniform degree in `[lo, hi]^n`.
    pub fn degree(&mut self, n: usize, lo: i64, hi: i64) -> MultiDegree {
        MultiDegree::new((0..n).map(|_| self.rng.gen_range(lo..=hi)).collect())
    }

    pub fn index(&mut self, upto: usize) -> usize {
        self.rng.gen_range(0..upto)
    }
}

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::combinat::SimplicialComplex;
use crate::error::Result;
use crate::field::Field;
use crate::homology::{cohomology_basis, induced_map, CohomologyBasis};
use crate::matrix::Matrix;

type CacheKey = (SimplicialComplex, i64);

/// Computation context: a coefficient field plus a shared cache of
/// cohomology bases keyed by `(complex, degree)`.
///
/// The same handful of full subcomplexes recurs across degrees, indices and
/// the structural queries, so every cohomology computation goes through
/// here. The cache is safe to share between threads.
#[derive(Debug)]
pub struct Engine<F: Field> {
    field: F,
    cache: RwLock<HashMap<CacheKey, Arc<CohomologyBasis<F::Elem>>>>,
}

impl<F: Field> Engine<F> {
    pub fn new(field: F) -> Self {
        Engine {
            field,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.read().expect("cohomology cache poisoned").len()
    }

    /// Reduced cohomology `H^q(Δ; k)`; zero for `q < -1` and for the void complex.
    pub fn reduced_cohomology(
        &self,
        complex: &SimplicialComplex,
        q: i64,
    ) -> Arc<CohomologyBasis<F::Elem>> {
        let key = (complex.clone(), q);
        if let Some(hit) = self
            .cache
            .read()
            .expect("cohomology cache poisoned")
            .get(&key)
        {
            return Arc::clone(hit);
        }
        let basis = Arc::new(cohomology_basis(&self.field, complex, q));
        let mut cache = self.cache.write().expect("cohomology cache poisoned");
        Arc::clone(cache.entry(key).or_insert(basis))
    }

    /// The map `H^q(Δ) → H^q(Δ')` induced by `Δ' ⊆ Δ`.
    pub fn restriction_on_cohomology(
        &self,
        complex: &SimplicialComplex,
        sub: &SimplicialComplex,
        q: i64,
    ) -> Result<Matrix<F::Elem>> {
        let source = self.reduced_cohomology(complex, q);
        let target = self.reduced_cohomology(sub, q);
        induced_map(&self.field, &source, &target)
    }
}

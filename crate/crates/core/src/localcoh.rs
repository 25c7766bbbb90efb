//! Graded pieces of `H^i_B(R)` and `Ext^i_R(R/B, R)` through simplicial
//! cohomology, multiplication maps between them, and multigraded Betti
//! numbers via Hochster's formula.
//!
//! For squarefree `B` the degree `α` piece of `H^i_B(R)` is
//! `H^{i-2}(Δ_{I_α}; k)` where `Δ` is the Stanley–Reisner complex of `B^∨`
//! and `I_α` the set of coordinates `≤ -1`. The same value comes out of the
//! generator-indexed complex `T_{I_α}`. `Ext^i_R(R/B, R)` agrees with
//! `H^i_B(R)` in degrees `≥ (-1,…,-1)` and vanishes elsewhere.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use crate::combinat::{
    delta_alpha, stanley_reisner_complex, t_complex, MonomialIdeal, MultiDegree, SimplicialComplex,
    VarSet,
};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::CohomologyBasis;
use crate::matrix::Matrix;

/// One multigraded piece of a local cohomology or Ext module.
#[derive(Clone, Debug)]
pub struct GradedPiece<E> {
    pub ideal: MonomialIdeal,
    pub index: i64,
    pub degree: MultiDegree,
    pub dim: usize,
    /// The cohomology group realizing the piece; absent when the piece is
    /// zero for degree reasons alone.
    pub basis: Option<Arc<CohomologyBasis<E>>>,
}

/// Which module a Hilbert-function query is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradedModule {
    LocalCohomology,
    Ext,
}

/// Multigraded Betti numbers `β_{i,α}` of a squarefree ideal; only nonzero
/// entries are stored, keyed by `(i, supp α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub ideal: MonomialIdeal,
    entries: BTreeMap<(usize, VarSet), usize>,
}

impl BettiTable {
    pub fn from_entries(
        ideal: MonomialIdeal,
        entries: impl IntoIterator<Item = ((usize, VarSet), usize)>,
    ) -> Self {
        BettiTable {
            ideal,
            entries: entries.into_iter().filter(|(_, v)| *v > 0).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    /// `β_{i,α}` for the squarefree degree with support `alpha`.
    pub fn get(&self, i: i64, alpha: VarSet) -> usize {
        if i < 0 {
            return 0;
        }
        self.entries.get(&(i as usize, alpha)).copied().unwrap_or(0)
    }

    /// `β_{i,α}` for an arbitrary multidegree; zero off `{0,1}^n`.
    pub fn get_degree(&self, i: i64, alpha: &MultiDegree) -> usize {
        if !alpha.is_squarefree_degree() {
            return 0;
        }
        self.get(i, alpha.support())
    }

    /// Nonzero entries as `((i, supp α), β)`, ordered by `i` then `α`.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, VarSet), usize)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }
}

/// One summand `t^{-α} ∏_{j ∉ supp α} (1 - t_j)^{-1}` of the Hilbert series
/// of `Ext^i_R(R/B, R)`, repeated `multiplicity` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTerm {
    /// `supp α`.
    pub shift: VarSet,
    /// The coordinates in which the term is a geometric series.
    pub free: VarSet,
    pub multiplicity: usize,
}

impl HilbertTerm {
    /// Coefficient of `t^β`: nonzero iff `β_j = -1` on `supp α` and `β_j ≥ 0` elsewhere.
    pub fn value_at(&self, beta: &MultiDegree) -> usize {
        let hit = beta.coords().iter().enumerate().all(|(j, &b)| {
            if self.shift.contains(j) {
                b == -1
            } else {
                b >= 0
            }
        });
        if hit {
            self.multiplicity
        } else {
            0
        }
    }
}

/// Sum of the closed-form terms at `beta`.
pub fn evaluate_hilbert_series(terms: &[HilbertTerm], beta: &MultiDegree) -> usize {
    terms.iter().map(|t| t.value_at(beta)).sum()
}

fn require_lc_input(ideal: &MonomialIdeal, alpha: &MultiDegree) -> Result<()> {
    ideal.require_nonzero()?;
    ideal.require_squarefree()?;
    alpha.check_nvars(ideal.nvars())
}

impl<F: Field> Engine<F> {
    fn piece_from_complex(
        &self,
        ideal: &MonomialIdeal,
        i: i64,
        alpha: &MultiDegree,
        complex: &SimplicialComplex,
    ) -> GradedPiece<F::Elem> {
        let basis = self.reduced_cohomology(complex, i - 2);
        GradedPiece {
            ideal: ideal.clone(),
            index: i,
            degree: alpha.clone(),
            dim: basis.dim(),
            basis: Some(basis),
        }
    }

    fn zero_piece(
        &self,
        ideal: &MonomialIdeal,
        i: i64,
        alpha: &MultiDegree,
    ) -> GradedPiece<F::Elem> {
        GradedPiece {
            ideal: ideal.clone(),
            index: i,
            degree: alpha.clone(),
            dim: 0,
            basis: None,
        }
    }

    /// `H^i_B(R)_α ≅ H^{i-2}(Δ_{I_α}; k)`.
    pub fn lc_piece(
        &self,
        ideal: &MonomialIdeal,
        i: i64,
        alpha: &MultiDegree,
    ) -> Result<GradedPiece<F::Elem>> {
        require_lc_input(ideal, alpha)?;
        let delta = stanley_reisner_complex(ideal)?;
        let sub = delta.full_subcomplex(alpha.negative_support());
        Ok(self.piece_from_complex(ideal, i, alpha, &sub))
    }

    /// `H^i_B(R)_α ≅ H^{i-2}(T_{I_α}; k)`, through the complex on generators.
    pub fn lc_piece_via_t(
        &self,
        ideal: &MonomialIdeal,
        i: i64,
        alpha: &MultiDegree,
    ) -> Result<GradedPiece<F::Elem>> {
        require_lc_input(ideal, alpha)?;
        let t = t_complex(ideal, alpha.negative_support())?;
        Ok(self.piece_from_complex(ideal, i, alpha, &t))
    }

    /// `Ext^i_R(R/B, R)_β`: equal to `H^i_B(R)_β` when `β ≥ (-1,…,-1)`, zero otherwise.
    pub fn ext_piece(
        &self,
        ideal: &MonomialIdeal,
        i: i64,
        beta: &MultiDegree,
    ) -> Result<GradedPiece<F::Elem>> {
        require_lc_input(ideal, beta)?;
        if !beta.is_at_least(-1) {
            return Ok(self.zero_piece(ideal, i, beta));
        }
        self.lc_piece(ideal, i, beta)
    }

    /// `Ext^i_R(R/B, R)_α ≅ H^{i-2}(Δ_α; k)` for any nonzero monomial ideal.
    pub fn ext_piece_general(
        &self,
        ideal: &MonomialIdeal,
        i: i64,
        alpha: &MultiDegree,
    ) -> Result<GradedPiece<F::Elem>> {
        ideal.require_nonzero()?;
        alpha.check_nvars(ideal.nvars())?;
        let complex = delta_alpha(ideal, alpha)?;
        Ok(self.piece_from_complex(ideal, i, alpha, &complex))
    }

    /// Multiplication by `X_l` from `H^i_B(R)_α` to `H^i_B(R)_{α+e_l}`, as
    /// the restriction `H^{i-2}(Δ_{I_α}) → H^{i-2}(Δ_{I_{α+e_l}})`.
    pub fn multiplication_map(
        &self,
        ideal: &MonomialIdeal,
        i: i64,
        alpha: &MultiDegree,
        l: usize,
    ) -> Result<Matrix<F::Elem>> {
        require_lc_input(ideal, alpha)?;
        if l >= ideal.nvars() {
            return Err(Error::Argument(format!(
                "variable index {l} out of range for {} variables",
                ideal.nvars()
            )));
        }
        let delta = stanley_reisner_complex(ideal)?;
        let source = delta.full_subcomplex(alpha.negative_support());
        let target = delta.full_subcomplex(alpha.bumped(l).negative_support());
        self.restriction_on_cohomology(&source, &target, i - 2)
    }

    /// `β_{i,α}(Δ)` from a Stanley–Reisner complex: `H^{|α|-i-2}(Δ_{supp α})`.
    pub(crate) fn betti_from_complex(
        &self,
        sr_complex: &SimplicialComplex,
        i: i64,
        support: VarSet,
    ) -> usize {
        if i < 0 {
            return 0;
        }
        let q = support.len() as i64 - i - 2;
        self.reduced_cohomology(&sr_complex.full_subcomplex(support), q)
            .dim()
    }

    /// `β_{i,α}(I) = dim Tor_i(I, k)_α` by Hochster's formula, using the
    /// Stanley–Reisner complex of `I` (the complex `Δ` built from `I^∨`).
    pub fn hochster_betti(
        &self,
        ideal: &MonomialIdeal,
        i: i64,
        alpha: &MultiDegree,
    ) -> Result<usize> {
        ideal.require_reduced_proper()?;
        alpha.check_nvars(ideal.nvars())?;
        if !alpha.is_squarefree_degree() {
            return Ok(0);
        }
        let sr = stanley_reisner_complex(&ideal.alexander_dual()?)?;
        Ok(self.betti_from_complex(&sr, i, alpha.support()))
    }

    /// Every nonzero `β_{i,α}(I)`.
    pub fn betti_table(&self, ideal: &MonomialIdeal) -> Result<BettiTable> {
        ideal.require_reduced_proper()?;
        let n = ideal.nvars();
        let sr = stanley_reisner_complex(&ideal.alexander_dual()?)?;
        let supports: Vec<VarSet> = VarSet::full(n)
            .subsets()
            .filter(|s| !s.is_empty())
            .collect();
        let entries: Vec<((usize, VarSet), usize)> = supports
            .par_iter()
            .flat_map_iter(|&s| {
                let sr = &sr;
                // β_{i,α} needs |α| - i - 2 ≥ -1
                (0..s.len()).map(move |i| ((i, s), self.betti_from_complex(sr, i as i64, s)))
            })
            .collect();
        Ok(BettiTable::from_entries(ideal.clone(), entries))
    }

    /// Dimensions of `H^i_B(R)_α` (or `Ext^i_R(R/B,R)_α`) over the box `[lo, hi]`.
    /// Values are memoized on `I_α`.
    pub fn hilbert_function_box(
        &self,
        ideal: &MonomialIdeal,
        i: i64,
        lo: &MultiDegree,
        hi: &MultiDegree,
        module: GradedModule,
    ) -> Result<Vec<(MultiDegree, usize)>> {
        require_lc_input(ideal, lo)?;
        let points = MultiDegree::box_points(lo, hi)?;
        let delta = stanley_reisner_complex(ideal)?;
        let mut memo: HashMap<VarSet, usize> = HashMap::new();
        let mut out = Vec::with_capacity(points.len());
        for alpha in points {
            let value = if module == GradedModule::Ext && !alpha.is_at_least(-1) {
                0
            } else {
                let key = alpha.negative_support();
                *memo.entry(key).or_insert_with(|| {
                    self.reduced_cohomology(&delta.full_subcomplex(key), i - 2)
                        .dim()
                })
            };
            out.push((alpha, value));
        }
        Ok(out)
    }

    /// The Hilbert series of `Ext^i_R(R/B, R)` as the terms
    /// `(α, supp(α)^c, β_{|α|-i,α}(B^∨))` with nonzero multiplicity.
    pub fn hilbert_series_closed_form(
        &self,
        ideal: &MonomialIdeal,
        i: i64,
    ) -> Result<Vec<HilbertTerm>> {
        ideal.require_reduced_proper()?;
        let n = ideal.nvars();
        let dual_table = self.betti_table(&ideal.alexander_dual()?)?;
        let mut terms: Vec<HilbertTerm> = VarSet::full(n)
            .subsets()
            .filter_map(|alpha| {
                let m = dual_table.get(alpha.len() as i64 - i, alpha);
                (m > 0).then(|| HilbertTerm {
                    shift: alpha,
                    free: alpha.complement(n),
                    multiplicity: m,
                })
            })
            .collect();
        terms.sort_by_key(|t| (t.shift.len(), t.shift));
        Ok(terms)
    }
}

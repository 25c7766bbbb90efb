//! Taylor resolutions of Frobenius powers and their degree strands: an
//! independent, brute-force route to `Ext^i_R(R/B^[d], R)_α` and
//! `Tor_i^R(I, k)_α`.

use std::collections::HashMap;

use crate::combinat::{Monomial, MonomialIdeal, MultiDegree, VarSet};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{strand_cohomology, CochainComplex};
use crate::matrix::Matrix;

/// Largest generator count accepted by the oracle.
pub const MAX_TAYLOR_GENERATORS: usize = 20;

/// The Taylor complex of `B^[d]`: basis `f^d_I` for `I ⊆ {1..r}` in
/// homological degree `|I|`, with `deg f^d_I = d·deg(m_I)` and
/// `∂ f_I = Σ_{i∈I} (-1)^{pos(i,I)} (m_I/m_{I∖i}) f_{I∖i}`.
#[derive(Clone, Debug)]
pub struct TaylorComplex {
    nvars: usize,
    power: u32,
    /// `m_i^d`.
    generators: Vec<Monomial>,
}

/// One term `sign · coefficient · f_target` of `∂ f_source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaylorTerm {
    pub target: VarSet,
    pub sign: i64,
    pub coefficient: Monomial,
}

pub fn build_taylor(ideal: &MonomialIdeal, d: u32) -> Result<TaylorComplex> {
    ideal.require_nonzero()?;
    if d == 0 {
        return Err(Error::Argument("Frobenius power must be positive".into()));
    }
    let r = ideal.num_gens();
    if r > MAX_TAYLOR_GENERATORS {
        return Err(Error::ResourceLimit(format!(
            "Taylor complex on {r} generators exceeds the cap of {MAX_TAYLOR_GENERATORS}"
        )));
    }
    Ok(TaylorComplex {
        nvars: ideal.nvars(),
        power: d,
        generators: ideal.gens().iter().map(|g| g.pow(d)).collect(),
    })
}

impl TaylorComplex {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// `C(r, p)` subsets of size `p` in lexicographic order.
    pub fn basis(&self, p: usize) -> Vec<VarSet> {
        VarSet::full(self.generators.len()).subsets_of_size(p)
    }

    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.generators.len())
            .map(|p| self.basis(p).len())
            .collect()
    }

    /// `lcm(m_i^d | i ∈ I)`; the unit monomial for `I = ∅`.
    pub fn label(&self, subset: VarSet) -> Monomial {
        subset.iter().fold(Monomial::one(self.nvars), |acc, i| {
            acc.lcm(&self.generators[i])
        })
    }

    pub fn degree(&self, subset: VarSet) -> MultiDegree {
        self.label(subset).degree()
    }

    pub fn boundary(&self, subset: VarSet) -> Vec<TaylorTerm> {
        let label = self.label(subset);
        subset
            .iter()
            .enumerate()
            .map(|(pos, i)| {
                let target = subset.without(i);
                let coefficient = label
                    .checked_div(&self.label(target))
                    .expect("lcm of a subset divides lcm of the superset");
                TaylorTerm {
                    target,
                    sign: if pos % 2 == 0 { 1 } else { -1 },
                    coefficient,
                }
            })
            .collect()
    }

    /// Symbolic check of `∂∘∂ = 0` on every basis element.
    pub fn check_square_zero(&self) -> Result<()> {
        for p in 2..=self.generators.len() {
            for subset in self.basis(p) {
                let mut acc: HashMap<(VarSet, Monomial), i64> = HashMap::new();
                for outer in self.boundary(subset) {
                    for inner in self.boundary(outer.target) {
                        let key = (inner.target, outer.coefficient.mul(&inner.coefficient));
                        *acc.entry(key).or_insert(0) += outer.sign * inner.sign;
                    }
                }
                if let Some(((t, m), c)) = acc.into_iter().find(|(_, c)| *c != 0) {
                    return Err(Error::NotAComplex(format!(
                        "∂∂ f_{subset:?} has coefficient {c}·{m:?} on f_{t:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `H_0 = R/B^[d]`: the image of `∂_1` is generated by the `m_i^d`.
    pub fn check_h0(&self) -> bool {
        let image: Vec<Monomial> = self
            .basis(1)
            .into_iter()
            .flat_map(|s| self.boundary(s))
            .map(|t| t.coefficient)
            .collect();
        match MonomialIdeal::new(self.nvars, image) {
            Ok(ideal) => ideal.same_ideal(
                &MonomialIdeal::new(self.nvars, self.generators.iter().cloned()).expect("nonzero"),
            ),
            Err(_) => false,
        }
    }

    /// The degree-`α` strand of `Hom_R(F^d_•, R)` as a cochain complex with
    /// position `p` spanned by `X^{α+deg f_I} e_I`, `|I| = p`, `α + deg f_I ≥ 0`.
    pub fn dual_strand<F: Field>(
        &self,
        field: &F,
        alpha: &MultiDegree,
    ) -> Result<CochainComplex<F::Elem>> {
        alpha.check_nvars(self.nvars)?;
        let r = self.generators.len();
        let mut bases: Vec<Vec<(VarSet, Monomial)>> = Vec::with_capacity(r + 1);
        for p in 0..=r {
            let layer = self
                .basis(p)
                .into_iter()
                .filter_map(|s| {
                    let shifted: Vec<i64> = alpha
                        .coords()
                        .iter()
                        .zip(self.label(s).exps())
                        .map(|(a, e)| a + i64::from(*e))
                        .collect();
                    Monomial::from_degree(&MultiDegree::new(shifted)).map(|n| (s, n))
                })
                .collect();
            bases.push(layer);
        }
        let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
        let mut maps = Vec::with_capacity(r);
        for p in 0..r {
            let index: HashMap<VarSet, usize> = bases[p + 1]
                .iter()
                .enumerate()
                .map(|(k, (s, _))| (*s, k))
                .collect();
            let mut m = Matrix::zeros(field, dims[p + 1], dims[p]);
            for (col, (source, n)) in bases[p].iter().enumerate() {
                let source_label = self.label(*source);
                for i in VarSet::full(r).difference(*source).iter() {
                    let upper = source.with(i);
                    let row = *index.get(&upper).ok_or_else(|| {
                        Error::NotAComplex("dual Taylor map leaves the strand".into())
                    })?;
                    let quotient = self
                        .label(upper)
                        .checked_div(&source_label)
                        .expect("lcm of a subset divides lcm of the superset");
                    if n.mul(&quotient) != bases[p + 1][row].1 {
                        return Err(Error::NotAComplex("dual Taylor map changes degree".into()));
                    }
                    let sign = if upper.rank_of(i) % 2 == 0 { 1 } else { -1 };
                    m.set(row, col, field.from_i64(sign));
                }
            }
            maps.push(m);
        }
        CochainComplex::new(dims, maps)
    }

    /// The degree-`α` strand of `F_• ⊗ k`, reindexed as a cochain complex:
    /// homological degree `p` sits at position `r - p`.
    pub fn tensor_k_strand<F: Field>(
        &self,
        field: &F,
        alpha: &MultiDegree,
    ) -> Result<CochainComplex<F::Elem>> {
        alpha.check_nvars(self.nvars)?;
        let r = self.generators.len();
        let bases: Vec<Vec<VarSet>> = (0..=r)
            .map(|p| {
                self.basis(p)
                    .into_iter()
                    .filter(|s| &self.degree(*s) == alpha)
                    .collect()
            })
            .collect();
        let dims: Vec<usize> = (0..=r).rev().map(|p| bases[p].len()).collect();
        let mut maps = Vec::with_capacity(r);
        for p in (1..=r).rev() {
            let index: HashMap<VarSet, usize> = bases[p - 1]
                .iter()
                .enumerate()
                .map(|(k, s)| (*s, k))
                .collect();
            let mut m = Matrix::zeros(field, bases[p - 1].len(), bases[p].len());
            for (col, source) in bases[p].iter().enumerate() {
                for term in self.boundary(*source) {
                    if let Some(&row) = index.get(&term.target) {
                        if term.coefficient.is_one() {
                            m.set(row, col, field.from_i64(term.sign));
                        }
                    }
                }
            }
            maps.push(m);
        }
        CochainComplex::new(dims, maps)
    }
}

/// `dim Ext^i_R(R/B^[d], R)_α` from the dual Taylor strand.
pub fn ext_via_taylor<F: Field>(
    field: &F,
    ideal: &MonomialIdeal,
    d: u32,
    i: i64,
    alpha: &MultiDegree,
) -> Result<usize> {
    let taylor = build_taylor(ideal, d)?;
    let strand = taylor.dual_strand(field, alpha)?;
    strand.check(field)?;
    strand_cohomology(field, &strand, i)
}

/// `dim Tor_i^R(I, k)_α = dim H_{i+1}` of the degree-`α` strand of the
/// Taylor complex of `R/I` tensored with `k`.
pub fn tor_via_taylor<F: Field>(
    field: &F,
    ideal: &MonomialIdeal,
    i: i64,
    alpha: &MultiDegree,
) -> Result<usize> {
    ideal.require_reduced_proper()?;
    alpha.check_nvars(ideal.nvars())?;
    if i < 0 {
        return Ok(0);
    }
    let taylor = build_taylor(ideal, 1)?;
    let strand = taylor.tensor_k_strand(field, alpha)?;
    strand.check(field)?;
    let r = taylor.num_generators() as i64;
    strand_cohomology(field, &strand, r - (i + 1))
}

/// Values of `ext_via_taylor(B, d, i, α)` for `d = 1..=d_max` against `lc_piece(B, i, α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationReport {
    pub index: i64,
    pub degree: MultiDegree,
    /// `(d, dim Ext^i(R/B^[d], R)_α)`.
    pub values: Vec<(u32, usize)>,
    /// Smallest `d ≥ 1` with `α ≥ (-d,…,-d)`.
    pub first_stable: u32,
    pub local_cohomology: usize,
    pub consistent: bool,
}

impl<F: Field> Engine<F> {
    pub fn stabilization_check(
        &self,
        ideal: &MonomialIdeal,
        i: i64,
        alpha: &MultiDegree,
        d_max: u32,
    ) -> Result<StabilizationReport> {
        let lc = self.lc_piece(ideal, i, alpha)?.dim;
        let depth = alpha.coords().iter().map(|a| -a).max().unwrap_or(0).max(1);
        let first_stable =
            u32::try_from(depth).map_err(|_| Error::Argument("degree out of range".into()))?;
        let mut values = Vec::new();
        let mut consistent = true;
        for d in 1..=d_max {
            let v = ext_via_taylor(self.field(), ideal, d, i, alpha)?;
            let expected = if d >= first_stable { lc } else { 0 };
            consistent &= v == expected;
            values.push((d, v));
        }
        Ok(StabilizationReport {
            index: i,
            degree: alpha.clone(),
            values,
            first_stable,
            local_cohomology: lc,
            consistent,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn vs(v: &[usize]) -> VarSet {
        VarSet::from_indices(v.iter().copied())
    }

    fn sq(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::squarefree(n, sets.iter().map(|s| vs(s))).unwrap()
    }

    fn deg(v: &[i64]) -> MultiDegree {
        MultiDegree::new(v.to_vec())
    }

    #[test]
    fn two_generator_complex() {
        let t = build_taylor(&sq(4, &[&[0, 1], &[2, 3]]), 1).unwrap();
        assert_eq!(t.ranks(), vec![1, 2, 1]);
        assert_eq!(t.basis(1), vec![vs(&[0]), vs(&[1])]);
        assert_eq!(t.degree(vs(&[0, 1])), deg(&[1, 1, 1, 1]));
        t.check_square_zero().unwrap();
        assert!(t.check_h0());
        let t2 = build_taylor(&sq(4, &[&[0, 1], &[2, 3]]), 2).unwrap();
        assert_eq!(t2.degree(vs(&[0, 1])), deg(&[2, 2, 2, 2]));
        assert!(t2.check_h0());
    }

    #[test]
    fn boundary_signs() {
        let t = build_taylor(&sq(3, &[&[0], &[1, 2]]), 1).unwrap();
        let b = t.boundary(vs(&[0, 1]));
        assert_eq!(b[0].target, vs(&[1]));
        assert_eq!(
            (b[0].sign, b[0].coefficient.clone()),
            (1, Monomial::new(vec![1, 0, 0]))
        );
        assert_eq!(
            (b[1].sign, b[1].coefficient.clone()),
            (-1, Monomial::new(vec![0, 1, 1]))
        );
    }

    #[test]
    fn square_zero_on_larger_complexes() {
        let b = sq(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3], &[0, 2]]);
        for d in 1..=3 {
            build_taylor(&b, d).unwrap().check_square_zero().unwrap();
        }
    }

    #[test]
    fn too_many_generators() {
        let n = 21;
        let b = MonomialIdeal::squarefree(n, (0..n).map(VarSet::singleton)).unwrap();
        assert!(matches!(build_taylor(&b, 1), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn ext_strands() {
        let q = Rationals;
        let b = sq(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(
            ext_via_taylor(&q, &b, 1, 2, &deg(&[-1, -1, -1, -1])).unwrap(),
            1
        );
        assert_eq!(
            ext_via_taylor(&q, &b, 1, 2, &deg(&[-2, -1, -1, -1])).unwrap(),
            0
        );
        let e = Engine::new(q);
        let lc = e.lc_piece(&b, 2, &deg(&[-2, -1, -1, -1])).unwrap().dim;
        assert_eq!(lc, 1);
        assert_eq!(
            ext_via_taylor(&Rationals, &b, 2, 2, &deg(&[-2, -1, -1, -1])).unwrap(),
            lc
        );
        // some α_j < -d leaves nothing in the strand
        let strand = build_taylor(&b, 1)
            .unwrap()
            .dual_strand(&Rationals, &deg(&[-2, 0, 0, 0]))
            .unwrap();
        assert!(strand.dims().iter().all(|&k| k == 0));
    }

    #[test]
    fn ext_of_non_squarefree() {
        let q = Rationals;
        let e = Engine::new(q);
        let b =
            MonomialIdeal::new(2, [Monomial::new(vec![2, 0]), Monomial::new(vec![1, 1])]).unwrap();
        for a0 in -4..=1 {
            for a1 in -4..=1 {
                let alpha = deg(&[a0, a1]);
                for i in 0..=2 {
                    assert_eq!(
                        ext_via_taylor(&Rationals, &b, 1, i, &alpha).unwrap(),
                        e.ext_piece_general(&b, i, &alpha).unwrap().dim,
                        "i={i} α={alpha}"
                    );
                }
            }
        }
    }

    #[test]
    fn tor_of_dual_of_intro() {
        let q = Rationals;
        let dual = sq(4, &[&[1, 3], &[1, 2], &[0, 3], &[0, 2]]);
        assert_eq!(
            tor_via_taylor(&q, &dual, 0, &deg(&[0, 1, 0, 1])).unwrap(),
            1
        );
        assert_eq!(
            tor_via_taylor(&q, &dual, 2, &deg(&[1, 1, 1, 1])).unwrap(),
            1
        );
        assert_eq!(
            tor_via_taylor(&q, &dual, 1, &deg(&[1, 1, 1, 1])).unwrap(),
            0
        );
        assert_eq!(
            tor_via_taylor(&q, &dual, 0, &deg(&[0, 2, 0, 1])).unwrap(),
            0
        );
        let e = Engine::new(PrimeField::new(32003).unwrap());
        let f = PrimeField::new(32003).unwrap();
        for alpha in VarSet::full(4).subsets() {
            let a = MultiDegree::indicator(4, alpha);
            for i in 0..4 {
                assert_eq!(
                    tor_via_taylor(&f, &dual, i, &a).unwrap(),
                    e.hochster_betti(&dual, i, &a).unwrap()
                );
            }
        }
    }

    #[test]
    fn stabilization_reports() {
        let e = Engine::new(Rationals);
        let b = sq(4, &[&[0, 1], &[2, 3]]);
        let r = e
            .stabilization_check(&b, 2, &deg(&[-2, -1, -1, -1]), 3)
            .unwrap();
        assert_eq!(r.first_stable, 2);
        assert_eq!(r.values, vec![(1, 0), (2, 1), (3, 1)]);
        assert!(r.consistent);
        let r = e
            .stabilization_check(&b, 2, &deg(&[0, 1, 0, 0]), 2)
            .unwrap();
        assert_eq!(r.first_stable, 1);
        assert!(r.values.iter().all(|(_, v)| *v == 0));
        assert!(r.consistent);
    }
}

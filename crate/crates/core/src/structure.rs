//! Structure of `Ext^i_R(R/B, R)` read off the Betti numbers of `B^∨`:
//! filtration subquotients, the multigraded Betti diagram, the Betti
//! inequality between `B` and `B^∨`, and associated primes.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::combinat::{stanley_reisner_complex, MonomialIdeal, MultiDegree, VarSet};
use crate::engine::Engine;
use crate::error::Result;
use crate::field::Field;
use crate::localcoh::{BettiTable, HilbertTerm};
use crate::matrix::{rank, Matrix};

/// Subquotients `M_l / M_{l-1} ≅ ⊕_{|α|=l} (R/P_α(α))^{β_{l-i,α}(B^∨)}`
/// of the filtration of `Ext^i_R(R/B, R)` by degree generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    pub ideal: MonomialIdeal,
    pub index: i64,
    /// `layers[l]` lists `(supp α, multiplicity)` for `|α| = l`, nonzero only.
    pub layers: Vec<Vec<(VarSet, usize)>>,
}

impl FiltrationReport {
    /// `dim Ext^i_R(R/B,R)_β` as predicted by the subquotients.
    pub fn dim_at(&self, beta: &MultiDegree) -> usize {
        let n = self.ideal.nvars();
        self.layers
            .iter()
            .flatten()
            .map(|&(alpha, m)| {
                HilbertTerm {
                    shift: alpha,
                    free: alpha.complement(n),
                    multiplicity: m,
                }
                .value_at(beta)
            })
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.layers.iter().all(Vec::is_empty)
    }
}

/// The multigraded Betti diagram: cell `(row, col)` holds `β_{col,α}` for
/// `|α| = row + col`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiDiagram {
    pub table: BettiTable,
    pub cells: BTreeMap<(usize, usize), Vec<(VarSet, usize)>>,
}

impl BettiDiagram {
    pub fn from_table(table: BettiTable) -> Self {
        let mut cells: BTreeMap<(usize, usize), Vec<(VarSet, usize)>> = BTreeMap::new();
        for ((j, alpha), b) in table.nonzero() {
            let row = alpha.len() - j;
            cells.entry((row, j)).or_default().push((alpha, b));
        }
        BettiDiagram { table, cells }
    }

    /// Total Betti number in each cell.
    pub fn totals(&self) -> BTreeMap<(usize, usize), usize> {
        self.cells
            .iter()
            .map(|(k, v)| (*k, v.iter().map(|(_, b)| b).sum()))
            .collect()
    }

    /// Column view: for each homological index `i`, the pieces
    /// `E'_{j,i} = ⊕_{|α|=i+j} k(-α)^{β_{i,α}}` keyed by `j`.
    pub fn columns(&self) -> BTreeMap<usize, BTreeMap<usize, Vec<(VarSet, usize)>>> {
        let mut out: BTreeMap<usize, BTreeMap<usize, Vec<(VarSet, usize)>>> = BTreeMap::new();
        for (&(row, col), entries) in &self.cells {
            out.entry(col).or_default().insert(row, entries.clone());
        }
        out
    }

    /// The row view: the modules `E_{i,j}` whose direct sum over `j` gives the
    /// subquotients of the filtration of `Ext^i` for the dual ideal.
    pub fn rows(&self) -> BTreeMap<usize, BTreeMap<usize, Vec<(VarSet, usize)>>> {
        let mut out: BTreeMap<usize, BTreeMap<usize, Vec<(VarSet, usize)>>> = BTreeMap::new();
        for (&(row, col), entries) in &self.cells {
            out.entry(row).or_default().insert(col, entries.clone());
        }
        out
    }
}

/// `(i, α)` is extremal when `β_{j,α'} = 0` for all `j ≥ i` and `α' ⊋ α`
/// with `|α'| - |α| ≥ j - i`. The value `β_{i,α}` itself is not constrained.
pub fn is_extremal(table: &BettiTable, i: usize, alpha: VarSet) -> bool {
    !table
        .nonzero()
        .any(|((j, a), _)| j >= i && alpha.is_proper_subset(a) && a.len() - alpha.len() >= j - i)
}

/// One `(i, α)` line of the comparison between the Betti numbers of `B`
/// and `B^∨`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiInequalityRow {
    pub index: usize,
    pub support: VarSet,
    /// `β_{i,α}(B)`.
    pub lhs: usize,
    /// `Σ_{α ⊆ α'} β_{|α|-i-1,α'}(B^∨)`.
    pub rhs: usize,
    /// `|α| - i - 1`.
    pub dual_index: i64,
    /// `β_{|α|-i-1,α}(B^∨)`.
    pub dual_value: usize,
    pub dual_extremal: bool,
    pub extremal: bool,
    /// Whether `β_{i,α}(B) = β_{|α|-i-1,α}(B^∨)`; only asserted when the dual entry is extremal.
    pub equal: bool,
    pub violation: bool,
}

#[derive(Clone, Debug)]
pub struct BettiInequalityReport {
    pub ideal: MonomialIdeal,
    pub rows: Vec<BettiInequalityRow>,
}

impl BettiInequalityReport {
    pub fn violations(&self) -> impl Iterator<Item = &BettiInequalityRow> {
        self.rows.iter().filter(|r| r.violation)
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }

    /// Rows whose dual entry is a nonzero extremal Betti number of `B^∨`.
    pub fn extremal_pairs(&self) -> impl Iterator<Item = &BettiInequalityRow> {
        self.rows
            .iter()
            .filter(|r| r.dual_extremal && r.dual_value > 0)
    }
}

/// A set of monomial primes `P_F = (X_j | j ∈ F)`, sorted by size then lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrimeIdealSet {
    primes: Vec<VarSet>,
}

impl PrimeIdealSet {
    pub fn new(primes: impl IntoIterator<Item = VarSet>) -> Self {
        let mut primes: Vec<VarSet> = primes.into_iter().collect();
        primes.sort_by_key(|p| (p.len(), *p));
        primes.dedup();
        PrimeIdealSet { primes }
    }

    pub fn iter(&self) -> impl Iterator<Item = VarSet> + '_ {
        self.primes.iter().copied()
    }

    pub fn contains(&self, p: VarSet) -> bool {
        self.primes.contains(&p)
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Inclusion-minimal members.
    pub fn minimal(&self) -> PrimeIdealSet {
        PrimeIdealSet::new(
            self.primes
                .iter()
                .filter(|p| !self.primes.iter().any(|q| q.is_proper_subset(**p)))
                .copied(),
        )
    }

    pub fn render(&self, names: &[String]) -> String {
        self.primes
            .iter()
            .map(|p| {
                let vars: Vec<&str> = p.iter().map(|j| names[j].as_str()).collect();
                format!("({})", vars.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl<F: Field> Engine<F> {
    pub fn filtration_quotients(&self, ideal: &MonomialIdeal, i: i64) -> Result<FiltrationReport> {
        ideal.require_reduced_proper()?;
        let n = ideal.nvars();
        let dual_table = self.betti_table(&ideal.alexander_dual()?)?;
        let mut layers = vec![Vec::new(); n + 1];
        for alpha in VarSet::full(n).subsets() {
            let l = alpha.len();
            let m = dual_table.get(l as i64 - i, alpha);
            if m > 0 {
                layers[l].push((alpha, m));
            }
        }
        for layer in &mut layers {
            layer.sort();
        }
        Ok(FiltrationReport {
            ideal: ideal.clone(),
            index: i,
            layers,
        })
    }

    pub fn betti_diagram(&self, ideal: &MonomialIdeal) -> Result<BettiDiagram> {
        Ok(BettiDiagram::from_table(self.betti_table(ideal)?))
    }

    /// Checks `β_{i,α}(B) ≤ Σ_{α≤α'} β_{|α|-i-1,α'}(B^∨)` for every
    /// `i ≥ 0`, `α ∈ {0,1}^n`, and the equality and extremality transfer
    /// for extremal entries of `B^∨`.
    pub fn check_betti_inequality(&self, ideal: &MonomialIdeal) -> Result<BettiInequalityReport> {
        ideal.require_reduced_proper()?;
        let n = ideal.nvars();
        let table = self.betti_table(ideal)?;
        let dual = self.betti_table(&ideal.alexander_dual()?)?;
        let mut rows = Vec::new();
        for i in 0..=n {
            for alpha in VarSet::full(n).subsets() {
                let lhs = table.get(i as i64, alpha);
                let k = alpha.len() as i64 - i as i64 - 1;
                let rhs: usize = dual
                    .nonzero()
                    .filter(|((j, a), _)| *j as i64 == k && alpha.is_subset(*a))
                    .map(|(_, b)| b)
                    .sum();
                let dual_value = dual.get(k, alpha);
                let dual_extremal = k >= 0 && is_extremal(&dual, k as usize, alpha);
                let extremal = is_extremal(&table, i, alpha);
                let equal = lhs == dual_value;
                let violation = lhs > rhs || (dual_extremal && !(equal && extremal));
                rows.push(BettiInequalityRow {
                    index: i,
                    support: alpha,
                    lhs,
                    rhs,
                    dual_index: k,
                    dual_value,
                    dual_extremal,
                    extremal,
                    equal,
                    violation,
                });
            }
        }
        Ok(BettiInequalityReport {
            ideal: ideal.clone(),
            rows,
        })
    }

    /// `P_F ∈ Ass(Ext^i_R(R/B,R))` iff the restrictions
    /// `H^{i-2}(Δ_F) → H^{i-2}(Δ_{F∖j})`, `j ∈ F`, have a common nonzero
    /// kernel, tested with one rank computation on the stacked matrix.
    pub fn associated_primes(&self, ideal: &MonomialIdeal, i: i64) -> Result<PrimeIdealSet> {
        ideal.require_reduced_proper()?;
        let n = ideal.nvars();
        let delta = stanley_reisner_complex(ideal)?;
        let mut candidates: Vec<VarSet> = VarSet::full(n)
            .subsets()
            .filter(|f| !f.is_empty())
            .collect();
        candidates.sort_by_key(|f| (f.len(), *f));
        let hits: Vec<Option<VarSet>> = candidates
            .par_iter()
            .map(|&f| -> Result<Option<VarSet>> {
                let source = delta.full_subcomplex(f);
                let dim = self.reduced_cohomology(&source, i - 2).dim();
                if dim == 0 {
                    return Ok(None);
                }
                let blocks = f
                    .iter()
                    .map(|j| {
                        self.restriction_on_cohomology(
                            &source,
                            &delta.full_subcomplex(f.without(j)),
                            i - 2,
                        )
                    })
                    .collect::<Result<Vec<Matrix<F::Elem>>>>()?;
                let stacked = Matrix::vstack(dim, &blocks);
                Ok((rank(self.field(), &stacked) < dim).then_some(f))
            })
            .collect::<Result<_>>()?;
        Ok(PrimeIdealSet::new(hits.into_iter().flatten()))
    }

    /// Minimal associated primes from the Betti numbers of `B^∨` alone:
    /// `P_α` with `β_{|α|-i,α}(B^∨) ≠ 0` and no smaller `α'` with
    /// `β_{|α'|-i,α'}(B^∨) ≠ 0`.
    pub fn minimal_associated_primes(
        &self,
        ideal: &MonomialIdeal,
        i: i64,
    ) -> Result<PrimeIdealSet> {
        Ok(PrimeIdealSet::new(self.betti_support(ideal, i)?).minimal())
    }

    /// `{supp α | β_{|α|-i,α}(B^∨) ≠ 0}`, which contains every associated prime.
    pub fn betti_support(&self, ideal: &MonomialIdeal, i: i64) -> Result<Vec<VarSet>> {
        ideal.require_reduced_proper()?;
        let n = ideal.nvars();
        let dual = self.betti_table(&ideal.alexander_dual()?)?;
        let mut out: Vec<VarSet> = VarSet::full(n)
            .subsets()
            .filter(|a| dual.get(a.len() as i64 - i, *a) > 0)
            .collect();
        out.sort_by_key(|f| (f.len(), *f));
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn vs(v: &[usize]) -> VarSet {
        VarSet::from_indices(v.iter().copied())
    }

    fn sq(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::squarefree(n, sets.iter().map(|s| vs(s))).unwrap()
    }

    fn intro() -> MonomialIdeal {
        sq(4, &[&[0, 1], &[2, 3]])
    }

    fn example_one() -> MonomialIdeal {
        sq(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3], &[0, 2]])
    }

    fn example_two() -> MonomialIdeal {
        sq(3, &[&[0], &[1, 2]])
    }

    #[test]
    fn filtration_of_intro_example() {
        let e = Engine::new(Rationals);
        let f = e.filtration_quotients(&intro(), 2).unwrap();
        assert!(f.layers[0].is_empty() && f.layers[1].is_empty());
        let l2: Vec<VarSet> = f.layers[2].iter().map(|(a, _)| *a).collect();
        assert_eq!(l2, vec![vs(&[0, 2]), vs(&[0, 3]), vs(&[1, 2]), vs(&[1, 3])]);
        assert_eq!(f.layers[3].len(), 4);
        assert_eq!(f.layers[4], vec![(VarSet::full(4), 1)]);
        assert!(f.layers.iter().flatten().all(|(_, m)| *m == 1));
        for i in [0, 1] {
            assert!(e.filtration_quotients(&intro(), i).unwrap().is_zero());
        }
    }

    #[test]
    fn filtration_of_maximal_ideal() {
        let e = Engine::new(Rationals);
        for n in 1..=4 {
            let m = MonomialIdeal::squarefree(n, (0..n).map(VarSet::singleton)).unwrap();
            let f = e.filtration_quotients(&m, n as i64).unwrap();
            for (l, layer) in f.layers.iter().enumerate() {
                if l == n {
                    assert_eq!(layer, &vec![(VarSet::full(n), 1)]);
                } else {
                    assert!(layer.is_empty());
                }
            }
        }
    }

    #[test]
    fn betti_diagrams() {
        let e = Engine::new(Rationals);
        let dual = intro().alexander_dual().unwrap();
        let d = e.betti_diagram(&dual).unwrap();
        let cols = d.columns();
        let per_col: Vec<usize> = cols
            .values()
            .map(|rows| rows.values().map(Vec::len).sum())
            .collect();
        assert_eq!(per_col, vec![4, 4, 1]);
        // all entries sit in row 2
        assert!(d.cells.keys().all(|(row, _)| *row == 2));

        let principal = MonomialIdeal::squarefree(3, [VarSet::full(3)]).unwrap();
        let d = e.betti_diagram(&principal).unwrap();
        assert_eq!(
            d.table.nonzero().collect::<Vec<_>>(),
            vec![((0, VarSet::full(3)), 1)]
        );

        let i = sq(3, &[&[0, 1], &[0, 2]]);
        let t = e.betti_table(&i).unwrap();
        assert_eq!(
            t.nonzero().collect::<Vec<_>>(),
            vec![
                ((0, vs(&[0, 1])), 1),
                ((0, vs(&[0, 2])), 1),
                ((1, vs(&[0, 1, 2])), 1)
            ]
        );
    }

    #[test]
    fn extremality() {
        let e = Engine::new(Rationals);
        let t = e.betti_table(&intro().alexander_dual().unwrap()).unwrap();
        assert!(is_extremal(&t, 2, VarSet::full(4)));
        assert!(!is_extremal(&t, 0, vs(&[1, 3])));
        let principal = MonomialIdeal::squarefree(3, [VarSet::full(3)]).unwrap();
        let t = e.betti_table(&principal).unwrap();
        assert!(is_extremal(&t, 0, VarSet::full(3)));
    }

    #[test]
    fn betti_inequality_holds_on_examples() {
        let e = Engine::new(Rationals);
        for b in [intro(), example_one(), example_two()] {
            let report = e.check_betti_inequality(&b).unwrap();
            assert!(
                report.is_clean(),
                "{:?}",
                report.violations().collect::<Vec<_>>()
            );
            assert!(report.extremal_pairs().count() > 0);
        }
        let n = 4;
        let principal = MonomialIdeal::squarefree(n, [VarSet::full(n)]).unwrap();
        let report = e.check_betti_inequality(&principal).unwrap();
        let row = report
            .rows
            .iter()
            .find(|r| r.index == 0 && r.support == VarSet::full(n))
            .unwrap();
        assert_eq!((row.lhs, row.dual_value, row.dual_index), (1, 1, 3));
        assert!(row.dual_extremal && row.extremal);
    }

    #[test]
    fn associated_primes_of_examples() {
        let e = Engine::new(Rationals);
        let ass = e.associated_primes(&example_one(), 3).unwrap();
        assert_eq!(ass, PrimeIdealSet::new([vs(&[0, 1, 3]), vs(&[1, 2, 3])]));
        let ass = e.associated_primes(&example_two(), 2).unwrap();
        assert_eq!(ass, PrimeIdealSet::new([vs(&[0, 1]), vs(&[0, 2])]));
        assert_eq!(
            e.betti_support(&example_two(), 2).unwrap(),
            vec![vs(&[0, 1]), vs(&[0, 2]), vs(&[0, 1, 2])]
        );
        let ass = e.associated_primes(&intro(), 2).unwrap();
        assert_eq!(
            ass,
            PrimeIdealSet::new([vs(&[0, 2]), vs(&[0, 3]), vs(&[1, 2]), vs(&[1, 3])])
        );
    }

    #[test]
    fn minimal_primes_agree() {
        let e = Engine::new(Rationals);
        for (b, i) in [(example_one(), 3), (example_two(), 2), (intro(), 2)] {
            let ass = e.associated_primes(&b, i).unwrap();
            assert_eq!(ass.minimal(), e.minimal_associated_primes(&b, i).unwrap());
        }
        assert!(e.minimal_associated_primes(&intro(), 0).unwrap().is_empty());
        let rendered = e
            .associated_primes(&example_one(), 3)
            .unwrap()
            .render(&crate::combinat::default_names(4));
        assert_eq!(rendered, "(a,b,d) (b,c,d)");
    }
}

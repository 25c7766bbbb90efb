use std::fmt;

use super::monomial::{default_names, Monomial};
use super::varset::{minimal_elements, VarSet, MAX_VARS};
use crate::error::{Error, Result};

/// A monomial ideal given by its minimal generators.
///
/// Generators keep the order in which they were supplied, with non-minimal
/// and repeated ones dropped. That order fixes the vertex labels of the
/// generator-indexed complexes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
    squarefree: bool,
}

impl MonomialIdeal {
    /// Minimalizes `gens` into an ideal of `k[X_1..X_n]`.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::Argument(format!(
                "{nvars} variables requested, at most {MAX_VARS} supported"
            )));
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
        }
        Ok(Self::from_minimalized(nvars, minimalize(gens)))
    }

    /// Like [`MonomialIdeal::new`], inferring the ambient size from the first generator.
    pub fn minimalize(gens: Vec<Monomial>) -> Result<Self> {
        let n = gens
            .first()
            .map(Monomial::nvars)
            .ok_or_else(|| Error::Argument("empty generator list".into()))?;
        Self::new(n, gens)
    }

    pub fn squarefree(nvars: usize, supports: impl IntoIterator<Item = VarSet>) -> Result<Self> {
        let gens: Vec<Monomial> = supports
            .into_iter()
            .map(|s| {
                if s.span() > nvars {
                    Err(Error::DimensionMismatch {
                        expected: nvars,
                        found: s.span(),
                    })
                } else {
                    Ok(Monomial::from_varset(nvars, s))
                }
            })
            .collect::<Result<_>>()?;
        Self::new(nvars, gens)
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_minimalized(nvars, Vec::new())
    }

    fn from_minimalized(nvars: usize, gens: Vec<Monomial>) -> Self {
        let squarefree = gens.iter().all(Monomial::is_squarefree);
        MonomialIdeal {
            nvars,
            gens,
            squarefree,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.squarefree
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    /// Generator supports; for squarefree ideals these determine the ideal.
    pub fn supports(&self) -> Vec<VarSet> {
        self.gens.iter().map(Monomial::support).collect()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Membership of the squarefree monomial `X^F`.
    pub fn contains_squarefree(&self, set: VarSet) -> bool {
        self.gens
            .iter()
            .any(|g| g.is_squarefree() && g.support().is_subset(set))
    }

    /// Same ideal: equal generator sets regardless of order.
    pub fn same_ideal(&self, other: &MonomialIdeal) -> bool {
        if self.nvars != other.nvars || self.gens.len() != other.gens.len() {
            return false;
        }
        let mut a = self.gens.clone();
        let mut b = other.gens.clone();
        a.sort();
        b.sort();
        a == b
    }

    pub fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::Domain("the zero ideal is not supported here".into()));
        }
        Ok(())
    }

    pub fn require_squarefree(&self) -> Result<()> {
        if !self.squarefree {
            return Err(Error::Unsupported(
                "operation requires a squarefree monomial ideal".into(),
            ));
        }
        Ok(())
    }

    /// Squarefree, nonzero and proper.
    pub fn require_reduced_proper(&self) -> Result<()> {
        self.require_squarefree()?;
        self.require_nonzero()?;
        if self.is_unit() {
            return Err(Error::Domain("the unit ideal is not supported here".into()));
        }
        Ok(())
    }

    /// `B^[d] = (m_1^d, …, m_r^d)`.
    pub fn frobenius_power(&self, d: u32) -> Result<MonomialIdeal> {
        self.require_squarefree()?;
        if d < 1 {
            return Err(Error::Argument("Frobenius power needs d >= 1".into()));
        }
        Ok(Self::from_minimalized(
            self.nvars,
            self.gens.iter().map(|g| g.pow(d)).collect(),
        ))
    }

    /// The radical, generated by the supports of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        let supports = minimal_elements(self.supports());
        Self::from_minimalized(
            self.nvars,
            supports
                .into_iter()
                .map(|s| Monomial::from_varset(self.nvars, s))
                .collect(),
        )
    }

    /// `B^∨ = (X^F | X^{F^c} ∉ B)`.
    ///
    /// `X^F` lies in `B^∨` exactly when `F` meets every generator support,
    /// so the minimal generators are the minimal transversals of the
    /// supports. They are listed so that their complements (the facets of
    /// the Stanley–Reisner complex of `B`) come out in lexicographic order.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        self.require_squarefree()?;
        self.require_nonzero()?;
        if self.is_unit() {
            return Err(Error::Domain("the unit ideal has no Alexander dual".into()));
        }
        let mut transversals = vec![VarSet::EMPTY];
        for s in self.supports() {
            let mut next = Vec::with_capacity(transversals.len() * s.len());
            for t in &transversals {
                if !t.intersection(s).is_empty() {
                    next.push(*t);
                } else {
                    next.extend(s.iter().map(|v| t.with(v)));
                }
            }
            transversals = minimal_elements(next);
        }
        let n = self.nvars;
        let mut facets: Vec<VarSet> = transversals.iter().map(|t| t.complement(n)).collect();
        facets.sort();
        Ok(Self::from_minimalized(
            n,
            facets
                .into_iter()
                .map(|f| Monomial::from_varset(n, f.complement(n)))
                .collect(),
        ))
    }

    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(names)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Drops repeated and non-minimal generators, keeping first occurrences in order.
pub fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        let redundant = gens
            .iter()
            .enumerate()
            .any(|(j, h)| j != k && h.divides(g) && (h != g || j < k));
        if !redundant {
            kept.push(g.clone());
        }
    }
    kept
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&default_names(self.nvars)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::squarefree(
            n,
            sets.iter().map(|s| VarSet::from_indices(s.iter().copied())),
        )
        .unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = MonomialIdeal::minimalize(vec![
            mono(&[1, 1, 0, 0]),
            mono(&[1, 1, 1, 0]),
            mono(&[0, 0, 1, 1]),
        ])
        .unwrap();
        assert_eq!(i.gens(), &[mono(&[1, 1, 0, 0]), mono(&[0, 0, 1, 1])]);
        assert!(i.is_squarefree());

        let i = MonomialIdeal::minimalize(vec![mono(&[1, 1, 0, 0]), mono(&[0, 0, 1, 1])]).unwrap();
        assert_eq!(i.num_gens(), 2);

        let i = MonomialIdeal::minimalize(vec![mono(&[1]), mono(&[2])]).unwrap();
        assert_eq!(i.gens(), &[mono(&[1])]);

        let i = MonomialIdeal::minimalize(vec![mono(&[2, 0]), mono(&[2, 0])]).unwrap();
        assert_eq!(i.num_gens(), 1);
        assert!(!i.is_squarefree());
    }

    #[test]
    fn minimalize_rejects_mixed_sizes() {
        let err = MonomialIdeal::minimalize(vec![mono(&[1, 0]), mono(&[1, 0, 0])]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn frobenius_powers() {
        let b = sq(4, &[&[0, 1], &[2, 3]]);
        let b2 = b.frobenius_power(2).unwrap();
        assert_eq!(b2.gens(), &[mono(&[2, 2, 0, 0]), mono(&[0, 0, 2, 2])]);
        assert!(b.frobenius_power(1).unwrap().same_ideal(&b));
        let b = sq(3, &[&[0], &[1, 2]]);
        assert_eq!(
            b.frobenius_power(3).unwrap().gens(),
            &[mono(&[3, 0, 0]), mono(&[0, 3, 3])]
        );
        assert!(matches!(b.frobenius_power(0), Err(Error::Argument(_))));
    }

    #[test]
    fn membership() {
        let b = sq(4, &[&[0, 1], &[2, 3]]);
        assert!(b.contains(&mono(&[1, 1, 0, 1])));
        assert!(!b.contains(&mono(&[1, 0, 1, 0])));
        let b = sq(3, &[&[0], &[1, 2]]);
        assert!(!b.contains(&Monomial::one(3)));
    }

    #[test]
    fn dual_of_intro_example() {
        let b = sq(4, &[&[0, 1], &[2, 3]]);
        let dual = b.alexander_dual().unwrap();
        // bd, bc, ad, ac
        let expected = sq(4, &[&[1, 3], &[1, 2], &[0, 3], &[0, 2]]);
        assert_eq!(dual.gens(), expected.gens());
        assert_eq!(format!("{dual:?}"), "(bd, bc, ad, ac)");
    }

    #[test]
    fn dual_of_maximal_ideal_is_principal() {
        for n in 1..=6 {
            let m = MonomialIdeal::squarefree(n, (0..n).map(VarSet::singleton)).unwrap();
            let dual = m.alexander_dual().unwrap();
            assert_eq!(dual.gens(), &[Monomial::from_varset(n, VarSet::full(n))]);
        }
    }

    #[test]
    fn dual_matches_subset_enumeration() {
        // oracle: enumerate all F ⊆ {a,b,c} and keep those with X^{F^c} ∉ B
        let b = sq(3, &[&[0], &[1, 2]]);
        let candidates: Vec<Monomial> = VarSet::full(3)
            .subsets()
            .filter(|f| !b.contains(&Monomial::from_varset(3, f.complement(3))))
            .map(|f| Monomial::from_varset(3, f))
            .collect();
        let oracle = MonomialIdeal::new(3, candidates).unwrap();
        let dual = b.alexander_dual().unwrap();
        assert!(dual.same_ideal(&oracle));
        assert!(dual.same_ideal(&sq(3, &[&[0, 1], &[0, 2]])));
    }

    #[test]
    fn dual_rejects_bad_input() {
        let b = MonomialIdeal::new(2, vec![mono(&[2, 0])]).unwrap();
        assert!(matches!(b.alexander_dual(), Err(Error::Unsupported(_))));
        assert!(matches!(
            MonomialIdeal::zero(2).alexander_dual(),
            Err(Error::Domain(_))
        ));
        let unit = MonomialIdeal::new(2, vec![Monomial::one(2)]).unwrap();
        assert!(matches!(unit.alexander_dual(), Err(Error::Domain(_))));
    }
}

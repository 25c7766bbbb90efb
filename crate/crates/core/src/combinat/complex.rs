use std::collections::BTreeSet;
use std::fmt;

use super::ideal::MonomialIdeal;
use super::monomial::MultiDegree;
use super::varset::{maximal_elements, minimal_elements, VarSet};
use crate::error::{Error, Result};

/// A finite abstract simplicial complex, stored by its facets.
///
/// The void complex has no faces at all. The empty complex has exactly one
/// face, `∅`, and is stored as `Faces([∅])`. The two have different reduced
/// cohomology.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    universe: usize,
    kind: ComplexKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ComplexKind {
    Void,
    /// Pairwise incomparable facets, sorted; never empty.
    Faces(Vec<VarSet>),
}

impl SimplicialComplex {
    pub fn void(universe: usize) -> Self {
        SimplicialComplex {
            universe,
            kind: ComplexKind::Void,
        }
    }

    /// The complex `{∅}`.
    pub fn empty(universe: usize) -> Self {
        SimplicialComplex {
            universe,
            kind: ComplexKind::Faces(vec![VarSet::EMPTY]),
        }
    }

    /// All subsets of `vertices`.
    pub fn simplex(universe: usize, vertices: VarSet) -> Self {
        Self::from_faces(universe, [vertices])
    }

    /// Downward closure of `faces`; with no faces at all this is the void complex.
    pub fn from_faces(universe: usize, faces: impl IntoIterator<Item = VarSet>) -> Self {
        let facets = maximal_elements(faces);
        debug_assert!(facets.iter().all(|f| f.span() <= universe));
        if facets.is_empty() {
            Self::void(universe)
        } else {
            SimplicialComplex {
                universe,
                kind: ComplexKind::Faces(facets),
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn kind(&self) -> &ComplexKind {
        &self.kind
    }

    pub fn is_void(&self) -> bool {
        matches!(self.kind, ComplexKind::Void)
    }

    /// Facets; empty for the void complex.
    pub fn facets(&self) -> &[VarSet] {
        match &self.kind {
            ComplexKind::Void => &[],
            ComplexKind::Faces(f) => f,
        }
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets().iter().any(|f| face.is_subset(*f))
    }

    pub fn vertices(&self) -> VarSet {
        self.facets()
            .iter()
            .fold(VarSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// Largest face dimension; `None` for void, `Some(-1)` for `{∅}`.
    pub fn dimension(&self) -> Option<i64> {
        self.facets().iter().map(|f| f.len() as i64 - 1).max()
    }

    /// Faces of dimension `q` (that is, with `q + 1` vertices), sorted lexicographically.
    pub fn faces_of_dim(&self, q: i64) -> Vec<VarSet> {
        if q < -1 {
            return Vec::new();
        }
        let k = (q + 1) as usize;
        let mut out = BTreeSet::new();
        for f in self.facets() {
            if f.len() >= k {
                out.extend(f.subsets_of_size(k));
            }
        }
        out.into_iter().collect()
    }

    /// Number of faces in each dimension `-1, 0, 1, …`; empty for the void complex.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dimension() {
            None => Vec::new(),
            Some(d) => (-1..=d).map(|q| self.faces_of_dim(q).len()).collect(),
        }
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets().iter().all(|f| other.contains_face(*f))
    }

    /// Minimal subsets of the vertex universe that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<VarSet> {
        let nonfaces = VarSet::full(self.universe)
            .subsets()
            .filter(|s| !self.contains_face(*s));
        minimal_elements(nonfaces)
    }

    /// `Δ_I = {F ∈ Δ | F ⊆ I}`, and the void complex when `I = ∅`.
    pub fn full_subcomplex(&self, subset: VarSet) -> SimplicialComplex {
        if subset.is_empty() || self.is_void() {
            return Self::void(self.universe);
        }
        Self::from_faces(
            self.universe,
            self.facets().iter().map(|f| f.intersection(subset)),
        )
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ComplexKind::Void => write!(f, "Void"),
            ComplexKind::Faces(facets) => f.debug_set().entries(facets).finish(),
        }
    }
}

/// `Δ = {F | ∏_{j∉F} X_j ∈ B}`, the Stanley–Reisner complex of `B^∨`.
///
/// `F` is a face iff `F^c` contains some generator support, so the facets
/// are the complements of the generator supports.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    ideal.require_squarefree()?;
    if ideal.is_zero() {
        return Err(Error::Domain(
            "the complex of the zero ideal would be void".into(),
        ));
    }
    let n = ideal.nvars();
    Ok(SimplicialComplex::from_faces(
        n,
        ideal.supports().into_iter().map(|s| s.complement(n)),
    ))
}

/// `T_I = ⋃_{i∈I} T_i` on the generator indices, with
/// `T_i = {J | X_i ∤ m_J}`; void when `I = ∅`.
///
/// Each `T_i` is the full simplex on the generators not divisible by `X_i`.
pub fn t_complex(ideal: &MonomialIdeal, subset: VarSet) -> Result<SimplicialComplex> {
    ideal.require_squarefree()?;
    let r = ideal.num_gens();
    if r > super::varset::MAX_VARS {
        return Err(Error::ResourceLimit(format!(
            "{r} generators exceed the vertex limit"
        )));
    }
    if subset.is_empty() {
        return Ok(SimplicialComplex::void(r));
    }
    let supports = ideal.supports();
    let pieces = subset.iter().map(|i| {
        supports
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.contains(i))
            .map(|(j, _)| j)
            .collect::<VarSet>()
    });
    Ok(SimplicialComplex::from_faces(r, pieces))
}

/// `Δ_α`: `J` is a face iff some generator `g` has `α_j + deg(g)_j < 0`
/// for all `j ∈ J`. Void exactly when `α ≥ 0`.
pub fn delta_alpha(ideal: &MonomialIdeal, alpha: &MultiDegree) -> Result<SimplicialComplex> {
    ideal.require_nonzero()?;
    let n = ideal.nvars();
    alpha.check_nvars(n)?;
    if alpha.is_at_least(0) {
        return Ok(SimplicialComplex::void(n));
    }
    let a = alpha.coords();
    let pieces = ideal.gens().iter().map(|g| {
        g.exps()
            .iter()
            .enumerate()
            .filter(|(j, &e)| a[*j] + i64::from(e) < 0)
            .map(|(j, _)| j)
            .collect::<VarSet>()
    });
    Ok(SimplicialComplex::from_faces(n, pieces))
}

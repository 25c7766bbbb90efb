//! Reduced simplicial cohomology over an exact field, and maps induced on
//! cohomology by inclusions of complexes.
//!
//! Faces of each dimension are ordered lexicographically on their vertex
//! indices. The coboundary of a `q`-cochain `φ` is
//! `δφ(σ) = Σ_k (-1)^k φ(σ ∖ v_k)` where `v_k` is the `k`-th vertex of `σ`.
//! The augmentation is the empty face in degree `-1`.

use std::collections::HashMap;

use crate::combinat::{SimplicialComplex, VarSet};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::matrix::{kernel_basis, rank, rref, solve, Matrix};

/// The coboundary `C^q → C^{q+1}` as a `|upper| × |lower|` matrix, where
/// `lower` are the `q`-faces and `upper` the `(q+1)`-faces.
pub fn coboundary_matrix<F: Field>(
    field: &F,
    lower: &[VarSet],
    upper: &[VarSet],
) -> Matrix<F::Elem> {
    let index: HashMap<VarSet, usize> = lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut m = Matrix::zeros(field, upper.len(), lower.len());
    for (row, sigma) in upper.iter().enumerate() {
        for (k, v) in sigma.iter().enumerate() {
            if let Some(&col) = index.get(&sigma.without(v)) {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                m.set(row, col, field.from_i64(sign));
            }
        }
    }
    m
}

/// A basis of `H^q(Δ; k)` given by cocycle representatives.
#[derive(Clone, Debug)]
pub struct CohomologyBasis<E> {
    pub complex: SimplicialComplex,
    pub degree: i64,
    pub field: FieldSpec,
    /// The `q`-faces; cochains are vectors indexed by this list.
    pub faces: Vec<VarSet>,
    /// The `(q+1)`-faces, indexing the rows of `coboundary`.
    pub upper_faces: Vec<VarSet>,
    /// `δ^q`.
    pub coboundary: Matrix<E>,
    pub representatives: Vec<Vec<E>>,
    /// Columns: the representatives followed by the columns of `δ^{q-1}`.
    coset_system: Matrix<E>,
}

impl<E: Clone> CohomologyBasis<E> {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

/// Computes `H^q(Δ; k)` with echelon-form coset representatives.
///
/// Void has no cochains in any degree; `{∅}` has the single `(-1)`-face.
pub fn cohomology_basis<F: Field>(
    field: &F,
    complex: &SimplicialComplex,
    q: i64,
) -> CohomologyBasis<F::Elem> {
    let lower = complex.faces_of_dim(q - 1);
    let faces = complex.faces_of_dim(q);
    let upper = complex.faces_of_dim(q + 1);
    let d_lo = coboundary_matrix(field, &lower, &faces);
    let d_hi = coboundary_matrix(field, &faces, &upper);

    let cocycles = kernel_basis(field, &d_hi);
    // [δ^{q-1} | Z]: pivots landing in the Z block are independent mod coboundaries
    let mut columns: Vec<Vec<F::Elem>> = (0..d_lo.cols()).map(|j| d_lo.column(j)).collect();
    columns.extend(cocycles.iter().cloned());
    let stacked = Matrix::from_columns(field, faces.len(), &columns);
    let pivots = rref(field, &stacked).pivots;
    let representatives: Vec<Vec<F::Elem>> = pivots
        .into_iter()
        .filter(|&p| p >= d_lo.cols())
        .map(|p| cocycles[p - d_lo.cols()].clone())
        .collect();

    let mut system_cols = representatives.clone();
    system_cols.extend((0..d_lo.cols()).map(|j| d_lo.column(j)));
    let coset_system = Matrix::from_columns(field, faces.len(), &system_cols);

    CohomologyBasis {
        complex: complex.clone(),
        degree: q,
        field: field.spec(),
        faces,
        upper_faces: upper,
        coboundary: d_hi,
        representatives,
        coset_system,
    }
}

impl<E: Clone + PartialEq> CohomologyBasis<E> {
    /// Coordinates of the class of `cocycle` in this basis. Fails if the
    /// vector is not a cocycle.
    pub fn coordinates<F: Field<Elem = E>>(&self, field: &F, cocycle: &[E]) -> Result<Vec<E>> {
        if cocycle.len() != self.faces.len() {
            return Err(Error::Precondition(format!(
                "cochain has {} entries, expected {}",
                cocycle.len(),
                self.faces.len()
            )));
        }
        let x = solve(field, &self.coset_system, cocycle).ok_or_else(|| {
            Error::NotAComplex("restricted cochain is not a cocycle of the subcomplex".into())
        })?;
        Ok(x[..self.dim()].to_vec())
    }

    pub fn is_cocycle<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        self.coboundary
            .apply(field, v)
            .iter()
            .all(|x| field.is_zero(x))
    }
}

/// Matrix of `H^q(Δ) → H^q(Δ')` induced by the inclusion `Δ' ⊆ Δ`,
/// in the coordinates of the two bases (`dim target × dim source`).
pub fn induced_map<F: Field>(
    field: &F,
    source: &CohomologyBasis<F::Elem>,
    target: &CohomologyBasis<F::Elem>,
) -> Result<Matrix<F::Elem>> {
    if source.field != target.field || source.field != field.spec() {
        return Err(Error::FieldMismatch {
            left: source.field.to_string(),
            right: target.field.to_string(),
        });
    }
    if source.degree != target.degree {
        return Err(Error::Precondition(format!(
            "cohomological degrees differ: {} vs {}",
            source.degree, target.degree
        )));
    }
    if !target.complex.is_subcomplex_of(&source.complex) {
        return Err(Error::Precondition(
            "target complex is not a subcomplex of the source".into(),
        ));
    }
    let index: HashMap<VarSet, usize> = source
        .faces
        .iter()
        .enumerate()
        .map(|(i, f)| (*f, i))
        .collect();
    let selection: Vec<usize> = target.faces.iter().map(|f| index[f]).collect();
    let mut out = Matrix::zeros(field, target.dim(), source.dim());
    for (j, rep) in source.representatives.iter().enumerate() {
        let restricted: Vec<F::Elem> = selection.iter().map(|&i| rep[i].clone()).collect();
        let coords = target.coordinates(field, &restricted)?;
        for (i, c) in coords.into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    Ok(out)
}

/// A finite cochain complex `V_0 → V_1 → … → V_m` of finite-dimensional
/// spaces; `maps[k]` is the `dims[k+1] × dims[k]` matrix of `V_k → V_{k+1}`.
#[derive(Clone, Debug)]
pub struct CochainComplex<E> {
    dims: Vec<usize>,
    maps: Vec<Matrix<E>>,
}

impl<E: Clone> CochainComplex<E> {
    pub fn new(dims: Vec<usize>, maps: Vec<Matrix<E>>) -> Result<Self> {
        if dims.is_empty() && maps.is_empty() {
            return Ok(CochainComplex { dims, maps });
        }
        if maps.len() + 1 != dims.len() {
            return Err(Error::Argument(format!(
                "{} spaces need {} maps, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                maps.len()
            )));
        }
        for (k, m) in maps.iter().enumerate() {
            if m.cols() != dims[k] || m.rows() != dims[k + 1] {
                return Err(Error::Argument(format!(
                    "map {k} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    dims[k + 1],
                    dims[k]
                )));
            }
        }
        Ok(CochainComplex { dims, maps })
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix<E>] {
        &self.maps
    }

    /// Checks that every pair of consecutive maps composes to zero.
    pub fn check<F: Field<Elem = E>>(&self, field: &F) -> Result<()> {
        for k in 1..self.maps.len() {
            if !self.maps[k].mul(field, &self.maps[k - 1]).is_zero(field) {
                return Err(Error::NotAComplex(format!(
                    "maps {} and {} do not compose to zero",
                    k - 1,
                    k
                )));
            }
        }
        Ok(())
    }

    /// `dim ker(V_pos → V_{pos+1}) − rank(V_{pos-1} → V_pos)`; zero outside the range.
    pub fn cohomology_dim<F: Field<Elem = E>>(&self, field: &F, pos: i64) -> Result<usize> {
        if pos < 0 || pos as usize >= self.dims.len() {
            return Ok(0);
        }
        let pos = pos as usize;
        let incoming = pos.checked_sub(1).map(|k| &self.maps[k]);
        let outgoing = self.maps.get(pos);
        if let (Some(a), Some(b)) = (incoming, outgoing) {
            if !b.mul(field, a).is_zero(field) {
                return Err(Error::NotAComplex(format!(
                    "maps into and out of position {pos} do not compose to zero"
                )));
            }
        }
        let rank_in = incoming.map_or(0, |m| rank(field, m));
        let rank_out = outgoing.map_or(0, |m| rank(field, m));
        Ok(self.dims[pos] - rank_out - rank_in)
    }
}

/// Dimension of the cohomology of `complex` at `position`.
pub fn strand_cohomology<F: Field>(
    field: &F,
    complex: &CochainComplex<F::Elem>,
    position: i64,
) -> Result<usize> {
    complex.cohomology_dim(field, position)
}

/// The augmented cochain complex of `Δ`, starting in degree `-1` at position 0.
pub fn augmented_cochain_complex<F: Field>(
    field: &F,
    complex: &SimplicialComplex,
) -> CochainComplex<F::Elem> {
    let Some(top) = complex.dimension() else {
        return CochainComplex {
            dims: Vec::new(),
            maps: Vec::new(),
        };
    };
    let faces: Vec<Vec<VarSet>> = (-1..=top).map(|q| complex.faces_of_dim(q)).collect();
    let dims = faces.iter().map(Vec::len).collect();
    let maps = faces
        .windows(2)
        .map(|w| coboundary_matrix(field, &w[0], &w[1]))
        .collect();
    CochainComplex { dims, maps }
}

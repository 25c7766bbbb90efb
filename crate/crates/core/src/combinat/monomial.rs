use std::fmt;

use super::varset::{VarSet, MAX_VARS};
use crate::error::{Error, Result};

/// An element of the grading group `Z^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(Vec<i64>);

impl MultiDegree {
    pub fn new(coords: Vec<i64>) -> Self {
        assert!(coords.len() <= MAX_VARS);
        MultiDegree(coords)
    }

    pub fn zero(n: usize) -> Self {
        MultiDegree(vec![0; n])
    }

    /// The 0/1 vector with ones on `set`.
    pub fn indicator(n: usize, set: VarSet) -> Self {
        MultiDegree((0..n).map(|j| set.contains(j) as i64).collect())
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `I_α`, the coordinates that are at most `-1`.
    pub fn negative_support(&self) -> VarSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c <= -1)
            .map(|(j, _)| j)
            .collect()
    }

    /// The coordinates equal to one; meaningful for 0/1 vectors.
    pub fn support(&self) -> VarSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, _)| j)
            .collect()
    }

    /// `|α|`, the sum of the coordinates.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_squarefree_degree(&self) -> bool {
        self.0.iter().all(|&c| c == 0 || c == 1)
    }

    /// `α ≥ (c,…,c)` coordinatewise.
    pub fn is_at_least(&self, c: i64) -> bool {
        self.0.iter().all(|&x| x >= c)
    }

    /// Coordinatewise comparison `self ≤ other`.
    pub fn le(&self, other: &MultiDegree) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `α + e_l`.
    #[must_use]
    pub fn bumped(&self, l: usize) -> Self {
        let mut c = self.0.clone();
        c[l] += 1;
        MultiDegree(c)
    }

    #[must_use]
    pub fn negated(&self) -> Self {
        MultiDegree(self.0.iter().map(|x| -x).collect())
    }

    pub fn check_nvars(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.0.len(),
            });
        }
        Ok(())
    }

    /// Every integer vector in the box `[lo, hi]`, in lexicographic order.
    pub fn box_points(lo: &MultiDegree, hi: &MultiDegree) -> Result<Vec<MultiDegree>> {
        hi.check_nvars(lo.nvars())?;
        if !lo.le(hi) {
            return Err(Error::Argument(format!(
                "box lower corner {lo:?} is not below upper corner {hi:?}"
            )));
        }
        let mut out = vec![lo.clone()];
        for j in (0..lo.nvars()).rev() {
            let mut next = Vec::with_capacity(out.len() * (hi.0[j] - lo.0[j] + 1) as usize);
            for p in &out {
                for v in lo.0[j]..=hi.0[j] {
                    let mut q = p.0.clone();
                    q[j] = v;
                    next.push(MultiDegree(q));
                }
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }
}

impl fmt::Debug for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<Vec<i64>> for MultiDegree {
    fn from(v: Vec<i64>) -> Self {
        MultiDegree::new(v)
    }
}

/// A monomial `X^e` with nonnegative exponent vector `e`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        assert!(exps.len() <= MAX_VARS);
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The squarefree monomial `X^F`.
    pub fn from_varset(n: usize, set: VarSet) -> Self {
        debug_assert!(set.span() <= n);
        Monomial {
            exps: (0..n).map(|j| set.contains(j) as u32).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VarSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, _)| j)
            .collect()
    }

    pub fn degree(&self) -> MultiDegree {
        MultiDegree(self.exps.iter().map(|&e| e as i64).collect())
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    #[must_use]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    #[must_use]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    #[must_use]
    pub fn pow(&self, d: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * d).collect(),
        }
    }

    /// The monomial of degree `deg`, if every coordinate is nonnegative.
    pub fn from_degree(deg: &MultiDegree) -> Option<Monomial> {
        deg.coords()
            .iter()
            .map(|&c| u32::try_from(c).ok())
            .collect::<Option<Vec<_>>>()
            .map(|exps| Monomial { exps })
    }

    /// Renders as a product such as `a^2*b`, or `1` for the unit.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (j, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[j].clone()),
                _ => parts.push(format!("{}^{e}", names[j])),
            }
        }
        let single_letters = names.iter().all(|n| n.chars().count() == 1);
        parts.join(if single_letters { "" } else { "*" })
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&default_names(self.nvars())))
    }
}

/// `a, b, c, …` for up to 26 variables, otherwise `x1, x2, …`.
pub fn default_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n)
            .map(|j| ((b'a' + j as u8) as char).to_string())
            .collect()
    } else {
        (1..=n).map(|j| format!("x{j}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_support_and_total() {
        let a = MultiDegree::new(vec![-1, 0, -3, 2]);
        assert_eq!(a.negative_support(), VarSet::from_indices([0, 2]));
        assert_eq!(a.total(), -2);
        assert!(!a.is_at_least(-1));
        assert!(a.is_at_least(-3));
    }

    #[test]
    fn box_points_cover_the_box() {
        let lo = MultiDegree::new(vec![-1, 0]);
        let hi = MultiDegree::new(vec![1, 2]);
        let pts = MultiDegree::box_points(&lo, &hi).unwrap();
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[0], lo);
        assert_eq!(pts[8], hi);
        assert!(MultiDegree::box_points(&hi, &lo).is_err());
        assert!(MultiDegree::box_points(&lo, &MultiDegree::zero(3)).is_err());
    }

    #[test]
    fn monomial_arithmetic() {
        let ab = Monomial::new(vec![1, 1, 0]);
        let a2c = Monomial::new(vec![2, 0, 1]);
        assert_eq!(ab.lcm(&a2c), Monomial::new(vec![2, 1, 1]));
        assert!(ab.divides(&ab.mul(&a2c)));
        assert_eq!(a2c.checked_div(&ab), None);
        assert_eq!(ab.pow(3).exps(), &[3, 3, 0]);
        assert_eq!(format!("{a2c:?}"), "a^2c");
        assert_eq!(Monomial::one(2).render(&default_names(2)), "1");
    }
}

//! Low-degree exterior algebra on the edge symbols `e_1, …, e_n`.
//!
//! Monomials `e_S` are indexed by strictly increasing edge-id tuples. Vectors
//! are sparse maps from monomials to coefficients in any [`Scalar`]. The
//! Orlik–Solomon quantities needed for φ₃ are ranks of spans of
//! `∂e_S` (degree 2) and `e_t ∧ ∂e_S` (degree 3) over the dependent 3-sets `S`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use thiserror::Error;

use crate::gain_graph::EdgeId;
use crate::linalg::{SparseEchelon, SparseRow};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("monomial indices must be strictly increasing, got {0:?}")]
    Unsorted(Vec<EdgeId>),
    #[error("monomial {subset:?} has degree {found}, expected {expected}")]
    WrongDegree {
        subset: Vec<EdgeId>,
        expected: usize,
        found: usize,
    },
    #[error("index {index} outside 1..={n}")]
    OutOfRange { index: EdgeId, n: usize },
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// A basis monomial of `E^degree` over `n` symbols, with its position in the
/// lexicographic order of all `C(n, degree)` sorted subsets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    pub subset: Vec<EdgeId>,
    pub ordinal: usize,
}

impl BasisIndex {
    pub fn new(subset: Vec<EdgeId>, n: usize) -> Result<Self, ExteriorError> {
        check_sorted(&subset)?;
        if let Some(&bad) = subset.iter().find(|&&i| i == 0 || i > n) {
            return Err(ExteriorError::OutOfRange { index: bad, n });
        }
        let ordinal = lex_rank(&subset, n);
        Ok(Self { subset, ordinal })
    }

    pub fn from_ordinal(ordinal: usize, degree: usize, n: usize) -> Option<Self> {
        (ordinal < binomial(n, degree)).then(|| Self {
            subset: lex_unrank(ordinal, degree, n),
            ordinal,
        })
    }

    pub fn degree(&self) -> usize {
        self.subset.len()
    }
}

/// Position of a sorted subset of `1..=n` among all subsets of the same size
/// in lexicographic order.
pub fn lex_rank(subset: &[EdgeId], n: usize) -> usize {
    let k = subset.len();
    let mut rank = 0;
    let mut prev = 0;
    for (pos, &x) in subset.iter().enumerate() {
        // Subsets agreeing so far but with a smaller element at `pos`.
        for smaller in prev + 1..x {
            rank += binomial(n - smaller, k - pos - 1);
        }
        prev = x;
    }
    rank
}

pub fn lex_unrank(mut ordinal: usize, k: usize, n: usize) -> Vec<EdgeId> {
    let mut out = Vec::with_capacity(k);
    let mut next = 1;
    for pos in 0..k {
        loop {
            let block = binomial(n - next, k - pos - 1);
            if ordinal < block {
                break;
            }
            ordinal -= block;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

fn check_sorted(s: &[EdgeId]) -> Result<(), ExteriorError> {
    if s.windows(2).all(|w| w[0] < w[1]) {
        Ok(())
    } else {
        Err(ExteriorError::Unsorted(s.to_vec()))
    }
}

/// A homogeneous element of the exterior algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct ExteriorVector<T> {
    degree: usize,
    terms: BTreeMap<Vec<EdgeId>, T>,
}

impl<T: Scalar> ExteriorVector<T> {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(subset: Vec<EdgeId>) -> Result<Self, ExteriorError> {
        check_sorted(&subset)?;
        let mut v = Self::zero(subset.len());
        v.terms.insert(subset, T::one());
        Ok(v)
    }

    /// Builds a vector from `(subset, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<EdgeId>, T)>,
    ) -> Result<Self, ExteriorError> {
        let mut v = Self::zero(degree);
        for (s, c) in terms {
            check_sorted(&s)?;
            if s.len() != degree {
                return Err(ExteriorError::WrongDegree {
                    found: s.len(),
                    subset: s,
                    expected: degree,
                });
            }
            v.add_term(s, c);
        }
        Ok(v)
    }

    fn add_term(&mut self, s: Vec<EdgeId>, c: T) {
        match self.terms.entry(s) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, subset: &[EdgeId]) -> T {
        self.terms.get(subset).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<EdgeId>, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree, other.degree,
            "adding vectors of different degree"
        );
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = Self::zero(self.degree);
        if k.is_zero() {
            return out;
        }
        for (s, c) in &self.terms {
            out.terms.insert(s.clone(), c.clone() * k.clone());
        }
        out
    }

    /// The differential `∂e_S = Σ_j (−1)^{j−1} e_{S∖s_j}`, extended linearly.
    pub fn boundary(&self) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        for (s, c) in &self.terms {
            for j in 0..s.len() {
                let mut face = s.clone();
                face.remove(j);
                let sign = if j % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(face, sign);
            }
        }
        out
    }

    /// Left multiplication by the generator `e_t`.
    pub fn wedge_left(&self, t: EdgeId) -> Self {
        let mut out = Self::zero(self.degree + 1);
        for (s, c) in &self.terms {
            if s.binary_search(&t).is_ok() {
                continue;
            }
            // Moving e_t past every smaller index flips the sign once each.
            let pos = s.partition_point(|&x| x < t);
            let mut m = s.clone();
            m.insert(pos, t);
            let coeff = if pos % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_term(m, coeff);
        }
        out
    }

    /// Sparse row over the lexicographic basis of `E^degree` on `n` symbols.
    pub fn to_row(&self, n: usize) -> SparseRow<T> {
        self.terms
            .iter()
            .map(|(s, c)| (lex_rank(s, n), c.clone()))
            .collect()
    }
}

/// `∂e_{ijk} = e_{jk} − e_{ik} + e_{ij}` for `i < j < k`.
pub fn boundary3<T: Scalar>(s: [EdgeId; 3]) -> Result<ExteriorVector<T>, ExteriorError> {
    Ok(ExteriorVector::monomial(s.to_vec())?.boundary())
}

/// `e_t ∧ v`.
pub fn wedge1<T: Scalar>(t: EdgeId, v: &ExteriorVector<T>) -> ExteriorVector<T> {
    v.wedge_left(t)
}

/// Rank of `I²`: the span of `∂e_S` over the dependent 3-sets.
pub fn dim_i2<T: Scalar>(n: usize, dependent: &[[EdgeId; 3]]) -> Result<usize, ExteriorError> {
    let mut ech = SparseEchelon::<T>::new();
    for &s in dependent {
        ech.insert(boundary3::<T>(s)?.to_row(n));
    }
    Ok(ech.rank())
}

/// `dim A² = C(n,2) − dim I²`.
pub fn dim_a2<T: Scalar>(n: usize, dependent: &[[EdgeId; 3]]) -> Result<usize, ExteriorError> {
    Ok(binomial(n, 2) - dim_i2::<T>(n, dependent)?)
}

/// Size and rank of `F₃ = { e_t ∂e_S : S dependent, t ∉ S }`.
pub fn span_f3<T: Scalar>(
    n: usize,
    dependent: &[[EdgeId; 3]],
) -> Result<(usize, usize), ExteriorError> {
    let mut ech = SparseEchelon::<T>::new();
    for &s in dependent {
        let b = boundary3::<T>(s)?;
        for t in (1..=n).filter(|t| !s.contains(t)) {
            ech.insert(wedge1(t, &b).to_row(n));
        }
    }
    Ok((ech.rows_seen(), ech.rank()))
}

/// Rank of `I³₂ = I² · E¹`, from the full spanning set `e_t ∂e_S`, `t ∈ [n]`.
pub fn dim_i3_2<T: Scalar>(n: usize, dependent: &[[EdgeId; 3]]) -> Result<usize, ExteriorError> {
    let mut ech = SparseEchelon::<T>::new();
    for &s in dependent {
        let b = boundary3::<T>(s)?;
        for t in 1..=n {
            let w = wedge1(t, &b);
            if !w.is_zero() {
                ech.insert(w.to_row(n));
            }
        }
    }
    Ok(ech.rank())
}

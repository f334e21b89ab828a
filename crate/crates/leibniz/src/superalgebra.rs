//! ℤ₂-graded algebras presented by structure constants.
//!
//! A [`SuperAlgebra`] is a graded vector space `L = L₀ ⊕ L₁` with basis
//! `x1..xn` (even) followed by `y1..ym` (odd) and a bilinear bracket given by
//! a sparse table of structure constants. Omitted products are zero. The
//! constructor enforces grading compatibility: the product of elements of
//! parities `α` and `β` may only have support on the parity `α+β` block.
//!
//! The bracket is written in the right convention: right multiplications
//! `z ↦ [z, x]` are the derivations, and the graded identity checked by
//! [`SuperAlgebra::check_leibniz_superidentity`] is
//! `[x,[y,z]] = [[x,y],z] − (−1)^{|y||z|}[[x,z],y]`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::linalg::{Matrix, RowReducer, VectorSpaceBasis};
use crate::rational::Rational;

/// ℤ₂ degree of a homogeneous element or map.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// 0 for even, 1 for odd; the sign bookkeeping works on these bits.
    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(bit: usize) -> Self {
        if bit.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// Structure-constant table: `(left index, right index) → product vector`.
pub type StructureTable = BTreeMap<(usize, usize), Vec<Rational>>;

/// A finite-dimensional ℤ₂-graded algebra with a bilinear bracket.
///
/// Basis indices `0..even_dim` are the even elements `x1..xn`, indices
/// `even_dim..even_dim+odd_dim` the odd elements `y1..ym`. Immutable after
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAlgebra {
    even_dim: usize,
    odd_dim: usize,
    table: StructureTable,
}

/// A basis triple on which the graded Leibniz identity fails, with the
/// residual `[x,[y,z]] − [[x,y],z] + (−1)^{|y||z|}[[x,z],y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Rational>,
}

/// Dimensions of the lower central series `L¹ ⊇ L² ⊇ …` with
/// `L^{k+1} = [L^k, L¹]`, and the nilindex when the series reaches zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSeriesReport {
    /// `dims[k]` is `dim L^{k+1}`; the list stops once the series
    /// stabilises (at zero for nilpotent algebras).
    pub dims: Vec<usize>,
    /// Smallest `p` with `L^p = 0`, or `None` when the algebra is not
    /// nilpotent.
    pub nilindex: Option<usize>,
}

impl SuperAlgebra {
    /// Validates and builds an algebra from a sparse structure table.
    ///
    /// Zero product vectors are dropped; every kept entry must have length
    /// `even_dim + odd_dim` and respect the grading.
    pub fn new(
        even_dim: usize,
        odd_dim: usize,
        table: StructureTable,
    ) -> Result<Self, AlgebraError> {
        let dim = even_dim + odd_dim;
        let mut clean: StructureTable = BTreeMap::new();
        for ((i, j), value) in table {
            for &idx in [i, j].iter() {
                if idx >= dim {
                    return Err(AlgebraError::IndexOutOfRange { index: idx, dim });
                }
            }
            if value.len() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    got: value.len(),
                });
            }
            if value.iter().all(Rational::is_zero) {
                continue;
            }
            let product_parity =
                Parity::from_bit(parity_of(even_dim, i).bit() + parity_of(even_dim, j).bit());
            for (k, coeff) in value.iter().enumerate() {
                if !coeff.is_zero() && parity_of(even_dim, k) != product_parity {
                    return Err(AlgebraError::GradingViolation { left: i, right: j });
                }
            }
            clean.insert((i, j), value);
        }
        Ok(SuperAlgebra {
            even_dim,
            odd_dim,
            table: clean,
        })
    }

    pub fn even_dim(&self) -> usize {
        self.even_dim
    }

    pub fn odd_dim(&self) -> usize {
        self.odd_dim
    }

    pub fn dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    pub fn parity_of(&self, index: usize) -> Parity {
        parity_of(self.even_dim, index)
    }

    /// `x1..xn` then `y1..ym`.
    pub fn basis_name(&self, index: usize) -> String {
        basis_name(self.even_dim, index)
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        let (prefix, rest) = name.split_at(1);
        let k: usize = rest.parse().ok().filter(|&k| k >= 1)?;
        match prefix {
            "x" if k <= self.even_dim => Some(k - 1),
            "y" if k <= self.odd_dim => Some(self.even_dim + k - 1),
            _ => None,
        }
    }

    /// Sparse view of the structure table.
    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    /// Product of two basis elements, `None` meaning zero.
    pub fn product_basis(&self, i: usize, j: usize) -> Option<&[Rational]> {
        self.table.get(&(i, j)).map(Vec::as_slice)
    }

    /// Bilinear extension of the table to arbitrary coordinate vectors.
    pub fn product(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        let dim = self.dim();
        for w in [u, v] {
            if w.len() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    got: w.len(),
                });
            }
        }
        let mut out = vec![Rational::zero(); dim];
        for ((i, j), value) in &self.table {
            if u[*i].is_zero() || v[*j].is_zero() {
                continue;
            }
            let weight = &u[*i] * &v[*j];
            for (k, coeff) in value.iter().enumerate() {
                if !coeff.is_zero() {
                    let t = &out[k] + &weight * coeff;
                    out[k] = t;
                }
            }
        }
        Ok(out)
    }

    fn basis_vector(&self, index: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[index] = crate::rational::rat(1);
        v
    }

    /// Evaluates the graded Leibniz identity on every basis triple and
    /// returns the failures. Violations are data, not errors: an empty list
    /// certifies a Leibniz superalgebra.
    pub fn check_leibniz_superidentity(&self) -> Vec<IdentityViolation> {
        let dim = self.dim();
        let mut violations = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let residual = self.identity_residual(i, j, k);
                    if residual.iter().any(|c| !c.is_zero()) {
                        violations.push(IdentityViolation {
                            triple: (i, j, k),
                            residual,
                        });
                    }
                }
            }
        }
        violations
    }

    /// `[e_i,[e_j,e_k]] − [[e_i,e_j],e_k] + (−1)^{|e_j||e_k|}[[e_i,e_k],e_j]`.
    fn identity_residual(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let dim = self.dim();
        let mut acc = vec![Rational::zero(); dim];
        // [e_i, [e_j, e_k]]
        if let Some(jk) = self.product_basis(j, k) {
            for (b, c) in nonzero(jk) {
                if let Some(p) = self.product_basis(i, b) {
                    axpy(&mut acc, c, p);
                }
            }
        }
        // −[[e_i, e_j], e_k]
        if let Some(ij) = self.product_basis(i, j) {
            for (b, c) in nonzero(ij) {
                if let Some(p) = self.product_basis(b, k) {
                    let neg = -c.clone();
                    axpy(&mut acc, &neg, p);
                }
            }
        }
        // +(−1)^{|e_j||e_k|} [[e_i, e_k], e_j]
        let sign_bit = self.parity_of(j).bit() * self.parity_of(k).bit();
        if let Some(ik) = self.product_basis(i, k) {
            for (b, c) in nonzero(ik) {
                if let Some(p) = self.product_basis(b, j) {
                    let signed = if sign_bit.is_multiple_of(2) {
                        c.clone()
                    } else {
                        -c.clone()
                    };
                    axpy(&mut acc, &signed, p);
                }
            }
        }
        acc
    }

    /// Lower central series dimensions, computed until stabilisation.
    pub fn lower_central_series(&self) -> CentralSeriesReport {
        let dim = self.dim();
        let mut dims = vec![dim];
        let mut current =
            VectorSpaceBasis::from_vectors(dim, (0..dim).map(|i| self.basis_vector(i)))
                .expect("basis vectors have the ambient length");
        // The series of a d-dimensional algebra stabilises within d steps.
        for _ in 0..dim + 1 {
            let mut reducer = RowReducer::new(dim);
            for v in current.vectors() {
                for j in 0..dim {
                    let prod = self
                        .product(v, &self.basis_vector(j))
                        .expect("dimensions agree");
                    if prod.iter().any(|c| !c.is_zero()) {
                        reducer.push_dense(&prod);
                    }
                }
            }
            let next = reducer.into_row_space_basis();
            let d = next.dim();
            if d == *dims.last().unwrap() {
                break;
            }
            dims.push(d);
            current = next;
            if d == 0 {
                break;
            }
        }
        let nilindex = if *dims.last().unwrap() == 0 {
            Some(dims.len())
        } else {
            None
        };
        CentralSeriesReport { dims, nilindex }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().nilindex.is_some()
    }

    /// True exactly when the central series dimensions are
    /// `(N, N−1, …, 1, 0)` for `N = dim L`.
    pub fn is_null_filiform(&self) -> bool {
        let report = self.lower_central_series();
        if report.nilindex.is_none() {
            return false;
        }
        let n = self.dim();
        report.dims.len() == n + 1 && report.dims.iter().enumerate().all(|(i, &d)| d == n - i)
    }

    /// `dim(L/L²)`, the number of generators of a nilpotent algebra.
    pub fn minimal_generator_count(&self) -> Result<usize, AlgebraError> {
        let report = self.lower_central_series();
        if report.nilindex.is_none() {
            return Err(AlgebraError::NotNilpotent);
        }
        let derived = report.dims.get(1).copied().unwrap_or(0);
        Ok(self.dim() - derived)
    }

    /// For each basis element `e`, the determinant of the matrix with rows
    /// `e, e², e³, …, eⁿ` where `e^{k+1} = [e^k, e]`. A nonzero determinant
    /// certifies that `e` generates the algebra.
    ///
    /// Only defined for algebras with trivial odd part.
    pub fn generator_certificate(&self) -> Result<Vec<(usize, Rational)>, AlgebraError> {
        if self.odd_dim != 0 {
            return Err(AlgebraError::OddPartNotTrivial);
        }
        let n = self.dim();
        let mut certificates = Vec::with_capacity(n);
        for i in 0..n {
            let e = self.basis_vector(i);
            let mut rows = Vec::with_capacity(n);
            let mut power = e.clone();
            rows.push(power.clone());
            for _ in 1..n {
                power = self.product(&power, &e)?;
                rows.push(power.clone());
            }
            let det = Matrix::from_rows(rows)?.determinant()?;
            certificates.push((i, det));
        }
        Ok(certificates)
    }

    /// Conjugates the structure constants by an invertible matrix `t` whose
    /// columns are the new basis vectors: `μ'(u, v) = t⁻¹ μ(tu, tv)`.
    ///
    /// The new basis must respect the grading; for algebras with trivial odd
    /// part any invertible `t` works.
    pub fn change_of_basis(&self, t: &Matrix) -> Result<SuperAlgebra, AlgebraError> {
        let dim = self.dim();
        if t.rows() != dim || t.cols() != dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim,
                got: t.rows().max(t.cols()),
            });
        }
        let inv = t.inverse().ok_or_else(|| {
            AlgebraError::InvalidConstruction("change of basis is singular".into())
        })?;
        let column = |j: usize| -> Vec<Rational> { (0..dim).map(|r| t.at(r, j).clone()).collect() };
        let mut table = StructureTable::new();
        for i in 0..dim {
            let ti = column(i);
            for j in 0..dim {
                let tj = column(j);
                let prod = self.product(&ti, &tj)?;
                let coords = inv.apply(&prod)?;
                if coords.iter().any(|c| !c.is_zero()) {
                    table.insert((i, j), coords);
                }
            }
        }
        SuperAlgebra::new(self.even_dim, self.odd_dim, table)
    }
}

pub(crate) fn parity_of(even_dim: usize, index: usize) -> Parity {
    if index < even_dim {
        Parity::Even
    } else {
        Parity::Odd
    }
}

pub(crate) fn basis_name(even_dim: usize, index: usize) -> String {
    if index < even_dim {
        format!("x{}", index + 1)
    } else {
        format!("y{}", index - even_dim + 1)
    }
}

pub(crate) fn nonzero(v: &[Rational]) -> impl Iterator<Item = (usize, &Rational)> {
    v.iter()
        .enumerate()
        .filter_map(|(i, c)| if c.is_zero() { None } else { Some((i, c)) })
}

pub(crate) fn axpy(acc: &mut [Rational], factor: &Rational, v: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            let t = &*a + factor * b;
            *a = t;
        }
    }
}

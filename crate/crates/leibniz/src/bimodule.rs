//! Bimodules over a Leibniz superalgebra, the coefficients of cohomology.
//!
//! A [`Bimodule`] `M = M₀ ⊕ M₁` carries two graded actions, `[x, m]` and
//! `[m, x]` for `x` in the algebra and `m` in the module, subject to three
//! axioms that mirror the Leibniz superidentity with one argument replaced
//! by a module element. [`check_module_axioms`] evaluates all three on every
//! basis triple; [`adjoint_module`] equips the algebra with its own product,
//! the coefficient module used throughout the deformation theory.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::rational::Rational;
use crate::superalgebra::{axpy, nonzero, parity_of, Parity, SuperAlgebra};

/// Sparse action table: `(first index, second index) → module vector`.
pub type ActionTable = BTreeMap<(usize, usize), Vec<Rational>>;

/// A ℤ₂-graded bimodule over a Leibniz superalgebra.
///
/// `left_action[(i, j)]` stores `[x_i, m_j]` and `right_action[(j, i)]`
/// stores `[m_j, x_i]`, both as coordinate vectors over the module basis.
/// Absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    even_dim: usize,
    odd_dim: usize,
    left_action: ActionTable,
    right_action: ActionTable,
}

/// Which of the three module axioms failed on a basis triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleAxiom {
    /// `[m,[x,y]] = [[m,x],y] − (−1)^{|x||y|}[[m,y],x]`
    ModuleFirst,
    /// `[x,[m,y]] = [[x,m],y] − (−1)^{|y||m|}[[x,y],m]`
    ModuleMiddle,
    /// `[x,[y,m]] = [[x,y],m] − (−1)^{|m||y|}[[x,m],y]`
    ModuleLast,
}

/// A failed axiom instance together with its residual (LHS − RHS).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: ModuleAxiom,
    /// Basis indices in the order the axiom lists its arguments; the module
    /// index is the one in the position of `m`.
    pub triple: (usize, usize, usize),
    pub residual: Vec<Rational>,
}

impl Bimodule {
    /// Validates action tables against the algebra's grading.
    pub fn new(
        algebra: &SuperAlgebra,
        even_dim: usize,
        odd_dim: usize,
        left_action: ActionTable,
        right_action: ActionTable,
    ) -> Result<Self, AlgebraError> {
        let module_dim = even_dim + odd_dim;
        let check = |table: &ActionTable, alg_first: bool| -> Result<(), AlgebraError> {
            for (&(a, b), value) in table {
                let (alg_idx, mod_idx) = if alg_first { (a, b) } else { (b, a) };
                if alg_idx >= algebra.dim() {
                    return Err(AlgebraError::IndexOutOfRange {
                        index: alg_idx,
                        dim: algebra.dim(),
                    });
                }
                if mod_idx >= module_dim {
                    return Err(AlgebraError::IndexOutOfRange {
                        index: mod_idx,
                        dim: module_dim,
                    });
                }
                if value.len() != module_dim {
                    return Err(AlgebraError::DimensionMismatch {
                        expected: module_dim,
                        got: value.len(),
                    });
                }
                let target = Parity::from_bit(
                    algebra.parity_of(alg_idx).bit() + parity_of(even_dim, mod_idx).bit(),
                );
                for (k, coeff) in value.iter().enumerate() {
                    if !coeff.is_zero() && parity_of(even_dim, k) != target {
                        return Err(AlgebraError::GradingViolation { left: a, right: b });
                    }
                }
            }
            Ok(())
        };
        check(&left_action, true)?;
        check(&right_action, false)?;
        let strip = |table: ActionTable| -> ActionTable {
            table
                .into_iter()
                .filter(|(_, v)| v.iter().any(|c| !c.is_zero()))
                .collect()
        };
        Ok(Bimodule {
            even_dim,
            odd_dim,
            left_action: strip(left_action),
            right_action: strip(right_action),
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

    /// `[x_i, m_j]` on basis elements, `None` meaning zero.
    pub fn left_basis(&self, algebra_index: usize, module_index: usize) -> Option<&[Rational]> {
        self.left_action
            .get(&(algebra_index, module_index))
            .map(Vec::as_slice)
    }

    /// `[m_j, x_i]` on basis elements, `None` meaning zero.
    pub fn right_basis(&self, module_index: usize, algebra_index: usize) -> Option<&[Rational]> {
        self.right_action
            .get(&(module_index, algebra_index))
            .map(Vec::as_slice)
    }

    /// `[x, m]` extended bilinearly; `x` over the algebra basis, `m` over
    /// the module basis.
    pub fn left(&self, x: &[Rational], m: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (&(i, j), value) in &self.left_action {
            if x[i].is_zero() || m[j].is_zero() {
                continue;
            }
            let w = &x[i] * &m[j];
            axpy(&mut out, &w, value);
        }
        out
    }

    /// `[m, x]` extended bilinearly.
    pub fn right(&self, m: &[Rational], x: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (&(j, i), value) in &self.right_action {
            if m[j].is_zero() || x[i].is_zero() {
                continue;
            }
            let w = &m[j] * &x[i];
            axpy(&mut out, &w, value);
        }
        out
    }

    pub(crate) fn left_table(&self) -> &ActionTable {
        &self.left_action
    }

    pub(crate) fn right_table(&self) -> &ActionTable {
        &self.right_action
    }
}

/// The algebra acting on itself by its own product.
pub fn adjoint_module(a: &SuperAlgebra) -> Bimodule {
    let left = a.table().clone();
    let right = a.table().clone();
    Bimodule::new(a, a.even_dim(), a.odd_dim(), left, right)
        .expect("the algebra table is already graded")
}

/// Evaluates the three module axioms on every basis triple and returns the
/// failures. Empty output certifies a module.
pub fn check_module_axioms(a: &SuperAlgebra, module: &Bimodule) -> Vec<AxiomViolation> {
    let alg_dim = a.dim();
    let mod_dim = module.dim();
    let mut violations = Vec::new();
    let mut push = |axiom, triple, residual: Vec<Rational>| {
        if residual.iter().any(|c: &Rational| !c.is_zero()) {
            violations.push(AxiomViolation {
                axiom,
                triple,
                residual,
            });
        }
    };

    let sign = |bit: usize, v: &[Rational]| -> Vec<Rational> {
        if bit.is_multiple_of(2) {
            v.to_vec()
        } else {
            v.iter().map(|c| -c.clone()).collect()
        }
    };

    for m in 0..mod_dim {
        for x in 0..alg_dim {
            for y in 0..alg_dim {
                let pm = module.parity_of(m).bit();
                let px = a.parity_of(x).bit();
                let py = a.parity_of(y).bit();

                // [m,[x,y]] − [[m,x],y] + (−1)^{|x||y|}[[m,y],x]
                let mut residual = vec![Rational::zero(); mod_dim];
                if let Some(xy) = a.product_basis(x, y) {
                    for (b, c) in nonzero(xy) {
                        if let Some(v) = module.right_basis(m, b) {
                            axpy(&mut residual, c, v);
                        }
                    }
                }
                if let Some(mx) = module.right_basis(m, x) {
                    for (b, c) in nonzero(mx) {
                        if let Some(v) = module.right_basis(b, y) {
                            let neg = -c.clone();
                            axpy(&mut residual, &neg, v);
                        }
                    }
                }
                if let Some(my) = module.right_basis(m, y) {
                    for (b, c) in nonzero(my) {
                        if let Some(v) = module.right_basis(b, x) {
                            axpy(&mut residual, c, &sign(px * py, v));
                        }
                    }
                }
                push(ModuleAxiom::ModuleFirst, (m, x, y), residual);

                // [x,[m,y]] − [[x,m],y] + (−1)^{|y||m|}[[x,y],m]
                let mut residual = vec![Rational::zero(); mod_dim];
                if let Some(my) = module.right_basis(m, y) {
                    for (b, c) in nonzero(my) {
                        if let Some(v) = module.left_basis(x, b) {
                            axpy(&mut residual, c, v);
                        }
                    }
                }
                if let Some(xm) = module.left_basis(x, m) {
                    for (b, c) in nonzero(xm) {
                        if let Some(v) = module.right_basis(b, y) {
                            let neg = -c.clone();
                            axpy(&mut residual, &neg, v);
                        }
                    }
                }
                if let Some(xy) = a.product_basis(x, y) {
                    for (b, c) in nonzero(xy) {
                        if let Some(v) = module.left_basis(b, m) {
                            axpy(&mut residual, c, &sign(py * pm, v));
                        }
                    }
                }
                push(ModuleAxiom::ModuleMiddle, (x, m, y), residual);

                // [x,[y,m]] − [[x,y],m] + (−1)^{|m||y|}[[x,m],y]
                let mut residual = vec![Rational::zero(); mod_dim];
                if let Some(ym) = module.left_basis(y, m) {
                    for (b, c) in nonzero(ym) {
                        if let Some(v) = module.left_basis(x, b) {
                            axpy(&mut residual, c, v);
                        }
                    }
                }
                if let Some(xy) = a.product_basis(x, y) {
                    for (b, c) in nonzero(xy) {
                        if let Some(v) = module.left_basis(b, m) {
                            let neg = -c.clone();
                            axpy(&mut residual, &neg, v);
                        }
                    }
                }
                if let Some(xm) = module.left_basis(x, m) {
                    for (b, c) in nonzero(xm) {
                        if let Some(v) = module.right_basis(b, y) {
                            axpy(&mut residual, c, &sign(pm * py, v));
                        }
                    }
                }
                push(ModuleAxiom::ModuleLast, (x, y, m), residual);
            }
        }
    }
    violations
}

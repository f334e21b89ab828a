//! Homogeneous multilinear cochains and the graded coboundary operator.
//!
//! A degree-`k` cochain of parity `p` with values in a bimodule `M` is a
//! multilinear map `L^⊗k → M` whose value on homogeneous arguments lands in
//! the parity block prescribed by `|f(a_1,…,a_k)| = |a_1|+⋯+|a_k|+p`.
//! No skew-symmetry is imposed: the complex is the unrestricted (Loday) one,
//! which is the convention that reproduces the published dimension counts.
//! Degree-0 cochains are module elements.
//!
//! [`differential`] implements the coboundary operator
//!
//! ```text
//! (df)(a_1, …, a_{k+1}) = [a_1, f(a_2, …, a_{k+1})]
//!   + Σ_{i=2}^{k+1} (−1)^{i + |a_i|(|f| + |a_{i+1}| + ⋯ + |a_{k+1}|)}
//!         [f(a_1, …, â_i, …, a_{k+1}), a_i]
//!   + Σ_{i<j} (−1)^{j+1 + |a_j|(|a_{i+1}| + ⋯ + |a_{j−1}|)}
//!         f(a_1, …, a_{i−1}, [a_i, a_j], a_{i+1}, …, â_j, …, a_{k+1})
//! ```
//!
//! on basis tuples and extends multilinearly; `d ∘ d = 0` exactly. On a
//! degree-0 element `m` the formula specialises to `x ↦ [x, m]`, so degree-1
//! coboundaries with adjoint coefficients are the inner derivations.

use num_traits::Zero;

use crate::bimodule::Bimodule;
use crate::error::AlgebraError;
use crate::rational::Rational;
use crate::superalgebra::{axpy, nonzero, parity_of, Parity, SuperAlgebra};

/// A homogeneous multilinear map `L^⊗k → M`, stored as a dense coefficient
/// tensor indexed by `(input tuple; output index)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    parity: Parity,
    input_even: usize,
    input_odd: usize,
    output_even: usize,
    output_odd: usize,
    /// Tuple-major, output-minor; length `(input dim)^degree × output dim`.
    coeffs: Vec<Rational>,
}

impl Cochain {
    /// The zero cochain of the given shape; inputs range over the algebra,
    /// outputs over the module.
    pub fn zero(a: &SuperAlgebra, module: &Bimodule, degree: usize, parity: Parity) -> Self {
        let input_dim = a.dim();
        let output_dim = module.dim();
        let size = input_dim.pow(degree as u32) * output_dim;
        Cochain {
            degree,
            parity,
            input_even: a.even_dim(),
            input_odd: a.odd_dim(),
            output_even: module.even_dim(),
            output_odd: module.odd_dim(),
            coeffs: vec![Rational::zero(); size],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn input_dim(&self) -> usize {
        self.input_even + self.input_odd
    }

    pub fn output_dim(&self) -> usize {
        self.output_even + self.output_odd
    }

    fn flat_index(&self, inputs: &[usize]) -> usize {
        assert_eq!(inputs.len(), self.degree, "wrong tuple length");
        let dim = self.input_dim();
        let mut idx = 0usize;
        for &i in inputs {
            assert!(i < dim, "input index out of range");
            idx = idx * dim + i;
        }
        idx
    }

    /// Parity the output must have for the given input tuple.
    pub fn output_parity(&self, inputs: &[usize]) -> Parity {
        let sum: usize = inputs
            .iter()
            .map(|&i| parity_of(self.input_even, i).bit())
            .sum();
        Parity::from_bit(sum + self.parity.bit())
    }

    /// Sets the coefficient of the output basis element `output` on the
    /// basis tuple `inputs`. A nonzero value on a parity-forbidden position
    /// is rejected.
    pub fn set(
        &mut self,
        inputs: &[usize],
        output: usize,
        value: Rational,
    ) -> Result<(), AlgebraError> {
        let allowed = self.output_parity(inputs);
        if parity_of(self.output_even, output) != allowed && !value.is_zero() {
            return Err(AlgebraError::GradingViolation {
                left: inputs.first().copied().unwrap_or(0),
                right: output,
            });
        }
        let base = self.flat_index(inputs) * self.output_dim();
        self.coeffs[base + output] = value;
        Ok(())
    }

    /// Value on a basis tuple, as a slice over the module basis.
    pub fn value(&self, inputs: &[usize]) -> &[Rational] {
        let out = self.output_dim();
        let base = self.flat_index(inputs) * out;
        &self.coeffs[base..base + out]
    }

    /// Value on arbitrary coordinate vectors, extended multilinearly.
    pub fn evaluate(&self, args: &[&[Rational]]) -> Result<Vec<Rational>, AlgebraError> {
        if args.len() != self.degree {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.degree,
                got: args.len(),
            });
        }
        let dim = self.input_dim();
        for arg in args {
            if arg.len() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    got: arg.len(),
                });
            }
        }
        let mut acc = vec![Rational::zero(); self.output_dim()];
        let mut tuple = vec![0usize; self.degree];
        self.eval_rec(
            args,
            &mut tuple,
            0,
            &Rational::from_integer(1.into()),
            &mut acc,
        );
        Ok(acc)
    }

    fn eval_rec(
        &self,
        args: &[&[Rational]],
        tuple: &mut [usize],
        pos: usize,
        weight: &Rational,
        acc: &mut [Rational],
    ) {
        if pos == args.len() {
            axpy(acc, weight, self.value(tuple));
            return;
        }
        for (i, c) in nonzero(args[pos]) {
            tuple[pos] = i;
            let w = weight * c;
            self.eval_rec(args, tuple, pos + 1, &w, acc);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> Cochain {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            if !c.is_zero() {
                *c *= factor;
            }
        }
        out
    }

    fn same_shape(&self, other: &Cochain) -> bool {
        self.degree == other.degree
            && self.parity == other.parity
            && self.input_even == other.input_even
            && self.input_odd == other.input_odd
            && self.output_even == other.output_even
            && self.output_odd == other.output_odd
    }
}

impl std::ops::Add for &Cochain {
    type Output = Cochain;

    fn add(self, rhs: &Cochain) -> Cochain {
        assert!(self.same_shape(rhs), "cochain shape mismatch");
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
        out
    }
}

impl std::ops::Sub for &Cochain {
    type Output = Cochain;

    fn sub(self, rhs: &Cochain) -> Cochain {
        assert!(self.same_shape(rhs), "cochain shape mismatch");
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
        out
    }
}

impl std::ops::Neg for &Cochain {
    type Output = Cochain;

    fn neg(self) -> Cochain {
        self.scale(&-crate::rational::rat(1))
    }
}

/// Enumeration of the coefficient basis of `C^k_p(L, M)`.
///
/// Basis positions are ordered lexicographically by `(input tuple, output
/// index)` with inputs most significant; only parity-admissible positions
/// are counted. The output indices admissible for a tuple always form one
/// contiguous parity block of the module basis.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    degree: usize,
    parity: Parity,
    input_even: usize,
    input_odd: usize,
    output_even: usize,
    output_odd: usize,
    /// Starting basis position of each flat tuple index.
    offsets: Vec<usize>,
    dim: usize,
}

impl CochainSpace {
    pub fn new(a: &SuperAlgebra, module: &Bimodule, degree: usize, parity: Parity) -> Self {
        let input_dim = a.dim();
        let tuple_count = input_dim.pow(degree as u32);
        let mut offsets = Vec::with_capacity(tuple_count);
        let mut dim = 0usize;
        let mut tuple = vec![0usize; degree];
        loop {
            offsets.push(dim);
            let out_parity = Parity::from_bit(
                tuple.iter().map(|&i| a.parity_of(i).bit()).sum::<usize>() + parity.bit(),
            );
            dim += match out_parity {
                Parity::Even => module.even_dim(),
                Parity::Odd => module.odd_dim(),
            };
            if !advance(&mut tuple, input_dim) {
                break;
            }
        }
        CochainSpace {
            degree,
            parity,
            input_even: a.even_dim(),
            input_odd: a.odd_dim(),
            output_even: module.even_dim(),
            output_odd: module.odd_dim(),
            offsets,
            dim,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Number of free coefficients.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn input_dim(&self) -> usize {
        self.input_even + self.input_odd
    }

    pub fn output_dim(&self) -> usize {
        self.output_even + self.output_odd
    }

    fn flat(&self, inputs: &[usize]) -> usize {
        let dim = self.input_dim();
        let mut idx = 0usize;
        for &i in inputs {
            idx = idx * dim + i;
        }
        idx
    }

    fn block(&self, inputs: &[usize]) -> (Parity, usize, usize) {
        let sum: usize = inputs
            .iter()
            .map(|&i| parity_of(self.input_even, i).bit())
            .sum();
        let parity = Parity::from_bit(sum + self.parity.bit());
        match parity {
            Parity::Even => (parity, 0, self.output_even),
            Parity::Odd => (parity, self.output_even, self.output_odd),
        }
    }

    /// Basis position of the coefficient at `(inputs; output)`, or `None`
    /// when the position is parity-forbidden.
    pub fn position(&self, inputs: &[usize], output: usize) -> Option<usize> {
        let (_, start, len) = self.block(inputs);
        if output < start || output >= start + len {
            return None;
        }
        Some(self.offsets[self.flat(inputs)] + output - start)
    }

    /// Inverse of [`CochainSpace::position`].
    pub fn basis_position(&self, index: usize) -> (Vec<usize>, usize) {
        debug_assert!(index < self.dim);
        // Binary search over the offset table.
        let flat = match self.offsets.binary_search(&index) {
            Ok(mut t) => {
                // Several empty tuples may share an offset; take the last.
                while t + 1 < self.offsets.len() && self.offsets[t + 1] == index {
                    t += 1;
                }
                t
            }
            Err(t) => t - 1,
        };
        let mut inputs = vec![0usize; self.degree];
        let dim = self.input_dim();
        let mut rem = flat;
        for slot in inputs.iter_mut().rev() {
            *slot = rem % dim;
            rem /= dim;
        }
        let (_, start, _) = self.block(&inputs);
        (inputs, start + index - self.offsets[flat])
    }

    /// Coefficient vector of a cochain in this basis order.
    pub fn coefficient_vector(&self, c: &Cochain) -> Result<Vec<Rational>, AlgebraError> {
        if c.degree != self.degree
            || c.parity != self.parity
            || c.input_even != self.input_even
            || c.input_odd != self.input_odd
            || c.output_even != self.output_even
            || c.output_odd != self.output_odd
        {
            return Err(AlgebraError::WrongCochainShape {
                expected_degree: self.degree,
                expected_parity: self.parity,
            });
        }
        let mut v = vec![Rational::zero(); self.dim];
        for (idx, slot) in v.iter_mut().enumerate() {
            let (inputs, output) = self.basis_position(idx);
            *slot = c.value(&inputs)[output].clone();
        }
        Ok(v)
    }

    /// Rebuilds a cochain from its coefficient vector.
    pub fn cochain_from_vector(&self, v: &[Rational]) -> Result<Cochain, AlgebraError> {
        if v.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        let mut c = Cochain {
            degree: self.degree,
            parity: self.parity,
            input_even: self.input_even,
            input_odd: self.input_odd,
            output_even: self.output_even,
            output_odd: self.output_odd,
            coeffs: vec![
                Rational::zero();
                self.input_dim().pow(self.degree as u32) * self.output_dim()
            ],
        };
        for (idx, value) in v.iter().enumerate() {
            if value.is_zero() {
                continue;
            }
            let (inputs, output) = self.basis_position(idx);
            c.set(&inputs, output, value.clone())?;
        }
        Ok(c)
    }
}

/// Advances a mixed-radix tuple lexicographically; false at wrap-around.
pub(crate) fn advance(tuple: &mut [usize], base: usize) -> bool {
    for slot in tuple.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

/// The coboundary operator: maps a degree-`k` cochain to a degree-`k+1`
/// cochain of the same parity.
pub fn differential(a: &SuperAlgebra, module: &Bimodule, f: &Cochain) -> Cochain {
    assert_eq!(
        f.input_dim(),
        a.dim(),
        "cochain inputs must match the algebra"
    );
    assert_eq!(
        f.output_dim(),
        module.dim(),
        "cochain outputs must match the module"
    );
    let k = f.degree;
    let mut result = Cochain::zero(a, module, k + 1, f.parity);
    let dim = a.dim();
    let out_dim = module.dim();
    let pf = f.parity.bit();

    let mut tuple = vec![0usize; k + 1];
    loop {
        let parities: Vec<usize> = tuple.iter().map(|&i| a.parity_of(i).bit()).collect();
        // suffix[q] = |a_{q}| + |a_{q+1}| + ⋯ (0-based), suffix[k+1] = 0.
        let mut suffix = vec![0usize; k + 2];
        for q in (0..=k).rev() {
            suffix[q] = suffix[q + 1] + parities[q];
        }

        let mut acc = vec![Rational::zero(); out_dim];

        // [a_1, f(a_2, …, a_{k+1})]
        let tail = &tuple[1..];
        for (b, c) in nonzero(f.value(tail)) {
            if let Some(v) = module.left_basis(tuple[0], b) {
                axpy(&mut acc, c, v);
            }
        }

        // Σ_i ± [f(…, â_i, …), a_i]
        let mut reduced = Vec::with_capacity(k);
        for q in 1..=k {
            reduced.clear();
            reduced.extend_from_slice(&tuple[..q]);
            reduced.extend_from_slice(&tuple[q + 1..]);
            let exponent = (q + 1) + parities[q] * (pf + suffix[q + 1]);
            let negative = exponent % 2 == 1;
            for (b, c) in nonzero(f.value(&reduced)) {
                if let Some(v) = module.right_basis(b, tuple[q]) {
                    let w = if negative { -c.clone() } else { c.clone() };
                    axpy(&mut acc, &w, v);
                }
            }
        }

        // Σ_{i<j} ± f(…, [a_i, a_j], …, â_j, …)
        let mut spliced = vec![0usize; k.max(1)];
        for q in 1..=k {
            for p in 0..q {
                let Some(prod) = a.product_basis(tuple[p], tuple[q]) else {
                    continue;
                };
                let between = suffix[p + 1] - suffix[q];
                let exponent = (q + 2) + parities[q] * between;
                let negative = exponent % 2 == 1;
                spliced.clear();
                spliced.extend_from_slice(&tuple[..q]);
                spliced.extend_from_slice(&tuple[q + 1..]);
                for (b, c) in nonzero(prod) {
                    spliced[p] = b;
                    let w = if negative { -c.clone() } else { c.clone() };
                    axpy(&mut acc, &w, f.value(&spliced));
                }
            }
        }

        let base = result.flat_index(&tuple) * out_dim;
        for (o, v) in acc.into_iter().enumerate() {
            result.coeffs[base + o] = v;
        }
        if !advance(&mut tuple, dim) {
            break;
        }
    }
    result
}

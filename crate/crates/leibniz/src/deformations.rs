//! Infinitesimal and linearly integrable deformations.
//!
//! An infinitesimal deformation of an algebra `μ₀` is an even 2-cocycle
//! `φ`; the deformed product is the linear family `μ_t = μ₀ + tφ`. The
//! family is a Leibniz superalgebra for every `t` exactly when `φ`
//! satisfies the quadratic compatibility condition
//!
//! ```text
//! φ(x, φ(y, z)) − φ(φ(x, y), z) + (−1)^{|y||z|} φ(φ(x, z), y) = 0,
//! ```
//!
//! which [`is_linearly_integrable`] evaluates exactly on all basis triples.
//! Two deformation directions are equivalent exactly when they differ by a
//! coboundary ([`cohomologous`]); the deformed families of the
//! null-filiform catalog are provided by [`family`], and
//! [`canonical_single_generated`] reduces any single-generated Leibniz
//! algebra to its canonical tail parameters.

use num_traits::{One, Zero};

use crate::bimodule::adjoint_module;
use crate::catalog::{nf_algebra, nf_superalgebra};
use crate::cochain::{differential, Cochain, CochainSpace};
use crate::cohomology::{coboundary_basis, derivations};
use crate::error::AlgebraError;
use crate::linalg::Matrix;
use crate::rational::{rat, rational_root, Rational};
use crate::standard_cocycles::{nf_phi, nn1_phi, nn_psi};
use crate::superalgebra::{nonzero, Parity, StructureTable, SuperAlgebra};

/// A linear one-parameter deformation `μ₀ + tφ` of a base algebra.
///
/// The direction is validated at construction: it must be an even 2-cochain
/// with adjoint coefficients that the coboundary operator annihilates.
#[derive(Clone, Debug)]
pub struct Deformation {
    base: SuperAlgebra,
    direction: Cochain,
    parameter: Rational,
}

impl Deformation {
    pub fn new(
        base: SuperAlgebra,
        direction: Cochain,
        parameter: Rational,
    ) -> Result<Self, AlgebraError> {
        if direction.degree() != 2 || direction.parity() != Parity::Even {
            return Err(AlgebraError::WrongCochainShape {
                expected_degree: 2,
                expected_parity: Parity::Even,
            });
        }
        if direction.input_dim() != base.dim() || direction.output_dim() != base.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: base.dim(),
                got: direction.input_dim(),
            });
        }
        let adj = adjoint_module(&base);
        if !differential(&base, &adj, &direction).is_zero() {
            return Err(AlgebraError::NotACocycle);
        }
        Ok(Deformation {
            base,
            direction,
            parameter,
        })
    }

    pub fn base(&self) -> &SuperAlgebra {
        &self.base
    }

    pub fn direction(&self) -> &Cochain {
        &self.direction
    }

    pub fn parameter(&self) -> &Rational {
        &self.parameter
    }

    /// The algebra with product `μ₀ + t·φ`. Whether the result satisfies
    /// the Leibniz superidentity is the caller's concern; it does for all
    /// `t` exactly when the direction is linearly integrable.
    pub fn deform(&self) -> SuperAlgebra {
        let dim = self.base.dim();
        let mut table = StructureTable::new();
        for i in 0..dim {
            for j in 0..dim {
                let mut value: Vec<Rational> = match self.base.product_basis(i, j) {
                    Some(v) => v.to_vec(),
                    None => vec![Rational::zero(); dim],
                };
                for (o, c) in nonzero(self.direction.value(&[i, j])) {
                    let t = &value[o] + &self.parameter * c;
                    value[o] = t;
                }
                if value.iter().any(|c| !c.is_zero()) {
                    table.insert((i, j), value);
                }
            }
        }
        SuperAlgebra::new(self.base.even_dim(), self.base.odd_dim(), table)
            .expect("an even direction preserves the grading")
    }
}

/// A basis triple violating the compatibility condition, with the residual
/// of the left-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegrabilityViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Rational>,
}

/// Checks the quadratic compatibility condition for an even 2-cochain on
/// every basis triple. The boolean is `true` exactly when no triple
/// violates it, i.e. when `μ₀ + tφ` is a Leibniz superalgebra for all `t`.
pub fn is_linearly_integrable(
    a: &SuperAlgebra,
    phi: &Cochain,
) -> Result<(bool, Vec<IntegrabilityViolation>), AlgebraError> {
    if phi.degree() != 2 || phi.parity() != Parity::Even {
        return Err(AlgebraError::WrongCochainShape {
            expected_degree: 2,
            expected_parity: Parity::Even,
        });
    }
    if phi.input_dim() != a.dim() || phi.output_dim() != a.dim() {
        return Err(AlgebraError::DimensionMismatch {
            expected: a.dim(),
            got: phi.input_dim(),
        });
    }
    let dim = a.dim();
    let basis = |i: usize| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        v[i] = rat(1);
        v
    };
    let mut violations = Vec::new();
    for x in 0..dim {
        let ex = basis(x);
        for y in 0..dim {
            let ey = basis(y);
            for z in 0..dim {
                let ez = basis(z);
                let inner_yz = phi.value(&[y, z]);
                let first = phi.evaluate(&[&ex, inner_yz])?;
                let inner_xy = phi.value(&[x, y]);
                let second = phi.evaluate(&[inner_xy, &ez])?;
                let inner_xz = phi.value(&[x, z]);
                let third = phi.evaluate(&[inner_xz, &ey])?;
                let sign_bit = a.parity_of(y).bit() * a.parity_of(z).bit();
                let mut residual = first;
                for (r, s) in residual.iter_mut().zip(&second) {
                    *r -= s;
                }
                for (r, t) in residual.iter_mut().zip(&third) {
                    if sign_bit.is_multiple_of(2) {
                        *r += t;
                    } else {
                        *r -= t;
                    }
                }
                if residual.iter().any(|c| !c.is_zero()) {
                    violations.push(IntegrabilityViolation {
                        triple: (x, y, z),
                        residual,
                    });
                }
            }
        }
    }
    Ok((violations.is_empty(), violations))
}

/// The three deformation families of the null-filiform catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// `NF^n` with tail `[x_n, x_1] = t Σ a_k x_k`; dimensions `(n, 0)`.
    Mu,
    /// `NF^{n,n}` deformed along `Σ b_k ψ_{n,k}`; dimensions `(n, n)`.
    Nu,
    /// `NF^{n,n+1}` deformed along `Σ c_k φ_{n+1,k}`; dimensions `(n, n+1)`.
    Eta,
}

impl std::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyKind::Mu => write!(f, "mu"),
            FamilyKind::Nu => write!(f, "nu"),
            FamilyKind::Eta => write!(f, "eta"),
        }
    }
}

/// Parameters `(a_2, …, a_n)` of one member of a deformation family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub kind: FamilyKind,
    pub n: usize,
    /// Length `n − 1`: the coefficients indexed `2..=n`.
    pub params: Vec<Rational>,
}

impl FamilyParams {
    pub fn new(kind: FamilyKind, n: usize, params: Vec<Rational>) -> Result<Self, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::InvalidConstruction(
                "families need n >= 2".into(),
            ));
        }
        if params.len() != n - 1 {
            return Err(AlgebraError::InvalidConstruction(format!(
                "expected {} parameters, got {}",
                n - 1,
                params.len()
            )));
        }
        Ok(FamilyParams { kind, n, params })
    }

    /// Coefficient `a_k` for `2 ≤ k ≤ n`.
    fn coeff(&self, k: usize) -> &Rational {
        &self.params[k - 2]
    }
}

/// Builds the deformed multiplication table of a family member literally.
///
/// The same algebra is obtained by deforming the catalog base along the
/// corresponding cocycle combination; the test suite checks that equality.
pub fn family(fp: &FamilyParams, t: &Rational) -> Result<SuperAlgebra, AlgebraError> {
    let n = fp.n;
    match fp.kind {
        FamilyKind::Mu => {
            let base = nf_algebra(n)?;
            let mut table = base.table().clone();
            let mut tail = vec![Rational::zero(); n];
            for k in 2..=n {
                tail[k - 1] = t * fp.coeff(k);
            }
            if tail.iter().any(|c| !c.is_zero()) {
                table.insert((n - 1, 0), tail);
            }
            SuperAlgebra::new(n, 0, table)
        }
        FamilyKind::Nu => {
            let base = nf_superalgebra(n, n)?;
            let dim = 2 * n;
            let x = |i: usize| i - 1;
            let y = |i: usize| n + i - 1;
            let mut table = base.table().clone();
            // [x_n, y_1] = t Σ b_k y_k, [y_n, x_1] = 2t Σ b_k y_k,
            // [x_n, x_1] = 2t Σ b_k x_k.
            let mut xy = vec![Rational::zero(); dim];
            let mut yx = vec![Rational::zero(); dim];
            let mut xx = vec![Rational::zero(); dim];
            for k in 2..=n {
                let b = t * fp.coeff(k);
                xy[y(k)] = b.clone();
                yx[y(k)] = rat(2) * &b;
                xx[x(k)] = rat(2) * &b;
            }
            for (key, value) in [((x(n), y(1)), xy), ((y(n), x(1)), yx), ((x(n), x(1)), xx)] {
                if value.iter().any(|c| !c.is_zero()) {
                    table.insert(key, value);
                }
            }
            SuperAlgebra::new(n, n, table)
        }
        FamilyKind::Eta => {
            let base = nf_superalgebra(n, n + 1)?;
            let dim = 2 * n + 1;
            let x = |i: usize| i - 1;
            let y = |i: usize| n + i - 1;
            let mut table = base.table().clone();
            // [x_n, x_1] = t Σ c_k x_k, [y_{n+1}, x_1] = t Σ c_k y_{k+1},
            // [y_{n+1}, y_1] = t Σ c_k x_k.
            let mut xx = vec![Rational::zero(); dim];
            let mut y_top_x = vec![Rational::zero(); dim];
            let mut y_top_y = vec![Rational::zero(); dim];
            for k in 2..=n {
                let c = t * fp.coeff(k);
                xx[x(k)] = c.clone();
                y_top_x[y(k + 1)] = c.clone();
                y_top_y[x(k)] = c;
            }
            for (key, value) in [
                ((x(n), x(1)), xx),
                ((y(n + 1), x(1)), y_top_x),
                ((y(n + 1), y(1)), y_top_y),
            ] {
                if value.iter().any(|c| !c.is_zero()) {
                    table.insert(key, value);
                }
            }
            SuperAlgebra::new(n, n + 1, table)
        }
    }
}

/// The cocycle combination along which [`family`] deforms its base.
pub fn family_direction(fp: &FamilyParams) -> Cochain {
    let n = fp.n;
    let combine = |mk: &dyn Fn(usize) -> Cochain| -> Cochain {
        let mut acc = mk(2).scale(fp.coeff(2));
        for k in 3..=n {
            acc = &acc + &mk(k).scale(fp.coeff(k));
        }
        acc
    };
    match fp.kind {
        FamilyKind::Mu => combine(&|k| nf_phi(n, n, k)),
        FamilyKind::Nu => combine(&|k| nn_psi(n, n, k)),
        FamilyKind::Eta => combine(&|k| nn1_phi(n, n + 1, k)),
    }
}

/// True exactly when two even 2-cocycles define equivalent deformations,
/// i.e. their difference is a coboundary.
pub fn cohomologous(
    a: &SuperAlgebra,
    phi1: &Cochain,
    phi2: &Cochain,
) -> Result<bool, AlgebraError> {
    let adj = adjoint_module(a);
    for phi in [phi1, phi2] {
        if phi.degree() != 2 || phi.parity() != Parity::Even {
            return Err(AlgebraError::WrongCochainShape {
                expected_degree: 2,
                expected_parity: Parity::Even,
            });
        }
        if !differential(a, &adj, phi).is_zero() {
            return Err(AlgebraError::NotACocycle);
        }
    }
    let space = CochainSpace::new(a, &adj, 2, Parity::Even);
    let diff = phi1 - phi2;
    let v = space.coefficient_vector(&diff)?;
    coboundary_basis(a, &adj, 2, Parity::Even).in_span(&v)
}

/// Canonical form of a single-generated Leibniz algebra.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// Tail coefficients `(a_2, …, a_n)` of the canonical table.
    pub params: Vec<Rational>,
    /// Whether the leading parameter was rescaled to one (trivially true
    /// when all parameters vanish).
    pub normalized: bool,
    /// Present when a rescaling happened or was obstructed.
    pub scale_note: Option<String>,
    /// The canonical multiplication table, `μ₁`-shaped.
    pub algebra: SuperAlgebra,
    /// The chosen generator, as a coordinate vector in the input basis.
    pub generator: Vec<Rational>,
}

/// The rows `v, v², …, vⁿ` of right powers, `v^{k+1} = [v^k, v]`.
fn power_rows(a: &SuperAlgebra, v: &[Rational]) -> Result<Vec<Vec<Rational>>, AlgebraError> {
    let n = a.dim();
    let mut rows = vec![v.to_vec()];
    for _ in 1..n {
        let next = a.product(rows.last().unwrap(), v)?;
        rows.push(next);
    }
    Ok(rows)
}

fn generates(a: &SuperAlgebra, v: &[Rational]) -> Result<bool, AlgebraError> {
    let det = Matrix::from_rows(power_rows(a, v)?)?.determinant()?;
    Ok(!det.is_zero())
}

/// Deterministic generator search: first the basis elements (a complete
/// test for nilpotent algebras, where any element outside `L²` generates),
/// then points on the moment curve `Σ tⁱ e_i` for non-nilpotent inputs.
fn find_generator(a: &SuperAlgebra) -> Result<Vec<Rational>, AlgebraError> {
    let n = a.dim();
    for (i, det) in a.generator_certificate()? {
        if !det.is_zero() {
            let mut e = vec![Rational::zero(); n];
            e[i] = rat(1);
            return Ok(e);
        }
    }
    if !a.is_nilpotent() {
        for t in 1..=(4 * n * n + 1) as i64 {
            let v: Vec<Rational> = (0..n as u32).map(|i| rat(t).pow(i as i32)).collect();
            if generates(a, &v)? {
                return Ok(v);
            }
        }
    }
    Err(AlgebraError::NotSingleGenerated)
}

/// Reduces a single-generated Leibniz algebra (trivial odd part) to its
/// canonical basis `v, [v,v], [[v,v],v], …` and reads off the tail
/// `[v_n, v_1] = Σ_{k≥2} a_k v_k`.
///
/// The generator is chosen deterministically: the first basis element whose
/// powers have a nonzero determinant (for non-nilpotent input, falling back
/// to a fixed curve of candidate vectors). If the first nonvanishing
/// parameter `a_j` admits a rational `(n−j+1)`-th root, the basis is
/// rescaled so that `a_j = 1`; otherwise the parameters are reported
/// unscaled.
pub fn canonical_single_generated(a: &SuperAlgebra) -> Result<CanonicalForm, AlgebraError> {
    if a.odd_dim() != 0 {
        return Err(AlgebraError::OddPartNotTrivial);
    }
    let n = a.dim();
    let generator = find_generator(a)?;
    let powers = power_rows(a, &generator)?;
    let mut t = Matrix::zero(n, n);
    for (j, v) in powers.iter().enumerate() {
        for (i, c) in v.iter().enumerate() {
            *t.at_mut(i, j) = c.clone();
        }
    }
    let canonical = a.change_of_basis(&t)?;

    // The table must now be exactly mu-shaped: [v_i, v_1] = v_{i+1} below
    // the top row, a tail with no v_1 component at the top, nothing else.
    let mut params = vec![Rational::zero(); n.saturating_sub(1)];
    for ((i, j), value) in canonical.table() {
        if *j != 0 {
            return Err(AlgebraError::InvalidConstruction(
                "the input is not a Leibniz algebra: canonical products survive off the \
                 generator column"
                    .into(),
            ));
        }
        if *i < n - 1 {
            let ok = nonzero(value).all(|(k, c)| k == i + 1 && c.is_one());
            if !ok {
                return Err(AlgebraError::InvalidConstruction(
                    "canonical basis does not shift under the generator".into(),
                ));
            }
        } else {
            if !value[0].is_zero() {
                return Err(AlgebraError::InvalidConstruction(
                    "the input is not a Leibniz algebra: the canonical tail has a \
                     generator component"
                        .into(),
                ));
            }
            params.clone_from_slice(&value[1..n]);
        }
    }

    // Rescale the first nonvanishing parameter to one when the required
    // root exists in the rationals.
    let leading = params.iter().position(|c| !c.is_zero());
    let (params, normalized, scale_note) = match leading {
        None => (params, true, None),
        Some(pos) => {
            let j = pos + 2;
            let root_index = (n - j + 1) as u32;
            let a_j = params[pos].clone();
            match rational_root(&a_j, root_index) {
                Some(lambda) => {
                    // v_i' = λ^{−i} v_i sends a_k to a_k λ^{k−n−1}.
                    let mut scaled = params.clone();
                    for (idx, c) in scaled.iter_mut().enumerate() {
                        let k = idx + 2;
                        let drop = (n + 1 - k) as u32;
                        if !c.is_zero() {
                            *c /= lambda.pow(drop.try_into().expect("small exponent"));
                        }
                    }
                    let note = if lambda.is_one() {
                        None
                    } else {
                        Some(format!(
                            "rescaled by the rational root {lambda} of {a_j} (index {root_index})"
                        ))
                    };
                    (scaled, true, note)
                }
                None => (
                    params,
                    false,
                    Some(format!(
                        "normalisation needs a rational root of index {root_index} of {a_j}; \
                         none exists"
                    )),
                ),
            }
        }
    };

    let fp = FamilyParams::new(FamilyKind::Mu, n, params.clone());
    let algebra = match fp {
        Ok(fp) => family(&fp, &rat(1))?,
        // n = 1: the only single-generated algebra is the abelian line.
        Err(_) => nf_algebra(n)?,
    };
    Ok(CanonicalForm {
        params,
        normalized,
        scale_note,
        algebra,
        generator,
    })
}

/// Dimension of the even derivation algebra of a family member at `t = 1`.
/// Requires a nonzero parameter vector (the catalog base is excluded).
pub fn derivation_dim_of_family(fp: &FamilyParams) -> Result<usize, AlgebraError> {
    if fp.params.iter().all(Rational::is_zero) {
        return Err(AlgebraError::InvalidConstruction(
            "all-zero parameters give the catalog algebra; use it directly".into(),
        ));
    }
    let algebra = family(fp, &rat(1))?;
    Ok(derivations(&algebra, Parity::Even).dim())
}

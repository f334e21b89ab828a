//! Cocycle, coboundary and cohomology spaces as exact kernel and image
//! computations.
//!
//! The coboundary operator restricted to `C^k_p(L, M)` is assembled as a
//! sparse matrix row by row — one row per admissible `(tuple, output)`
//! position of `C^{k+1}_p` — and reduced incrementally, so the full dense
//! matrix of larger algebras is never materialised. `ZL^k_p` is the kernel,
//! `BL^k_p` the image of the operator one degree down (for `k = 1`, the
//! image of the module `C⁰ = M`, i.e. inner derivations when the
//! coefficients are adjoint), and `HL^k_p` the quotient, reported by its
//! dimension.
//!
//! Rows and columns are ordered lexicographically by `(input tuple, output
//! index)`; every basis this module returns is in reduced row echelon form,
//! so results are deterministic and independent of assembly order.

use num_traits::Zero;

use crate::bimodule::Bimodule;
use crate::cochain::{advance, differential, Cochain, CochainSpace};
use crate::error::AlgebraError;
use crate::linalg::{Matrix, RowReducer, SparseRow, VectorSpaceBasis};
use crate::rational::Rational;
use crate::superalgebra::{nonzero, Parity, SuperAlgebra};

/// Cocycles, coboundaries and the cohomology dimension of one degree and
/// parity. Both bases live in the coefficient space of `C^k_p`, ordered as
/// in [`CochainSpace`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologySpaces {
    pub cocycles: VectorSpaceBasis,
    pub coboundaries: VectorSpaceBasis,
    pub hl_dim: usize,
}

/// Number of free coefficients of `C^k_p(L, M)`.
pub fn cochain_space_dim(
    a: &SuperAlgebra,
    module: &Bimodule,
    degree: usize,
    parity: Parity,
) -> usize {
    CochainSpace::new(a, module, degree, parity).dim()
}

/// Per-basis-element action lookup: `hits[i][o]` lists the module basis
/// indices `b` (with coefficients) for which the action of `e_i` on `m_b`
/// has a nonzero component on `m_o`.
struct ActionIndex {
    hits: Vec<Vec<(usize, Rational)>>,
    out_dim: usize,
}

impl ActionIndex {
    fn left(a: &SuperAlgebra, module: &Bimodule) -> Self {
        let out_dim = module.dim();
        let mut hits = vec![Vec::new(); a.dim() * out_dim];
        for (&(i, b), value) in module.left_table() {
            for (o, c) in nonzero(value) {
                hits[i * out_dim + o].push((b, c.clone()));
            }
        }
        ActionIndex { hits, out_dim }
    }

    fn right(a: &SuperAlgebra, module: &Bimodule) -> Self {
        let out_dim = module.dim();
        let mut hits = vec![Vec::new(); a.dim() * out_dim];
        for (&(b, i), value) in module.right_table() {
            for (o, c) in nonzero(value) {
                hits[i * out_dim + o].push((b, c.clone()));
            }
        }
        ActionIndex { hits, out_dim }
    }

    fn at(&self, algebra_index: usize, output: usize) -> &[(usize, Rational)] {
        &self.hits[algebra_index * self.out_dim + output]
    }
}

/// Streams the rows of the matrix of `d^k : C^k_p → C^{k+1}_p` in
/// lexicographic row order. Each row is the linear functional
/// `f ↦ (df)(tuple)[output]` expressed in domain coordinates.
fn for_each_row<F: FnMut(SparseRow)>(
    a: &SuperAlgebra,
    module: &Bimodule,
    degree: usize,
    parity: Parity,
    domain: &CochainSpace,
    mut emit: F,
) {
    let k = degree;
    let dim = a.dim();
    let left = ActionIndex::left(a, module);
    let right = ActionIndex::right(a, module);
    let out_blocks = |tuple_parity_bit: usize| -> (usize, usize) {
        match Parity::from_bit(tuple_parity_bit + parity.bit()) {
            Parity::Even => (0, module.even_dim()),
            Parity::Odd => (module.even_dim(), module.odd_dim()),
        }
    };

    let mut tuple = vec![0usize; k + 1];
    let mut entries: Vec<(usize, Rational)> = Vec::new();
    let mut reduced = vec![0usize; k.max(1)];
    loop {
        let parities: Vec<usize> = tuple.iter().map(|&i| a.parity_of(i).bit()).collect();
        let mut suffix = vec![0usize; k + 2];
        for q in (0..=k).rev() {
            suffix[q] = suffix[q + 1] + parities[q];
        }
        let (out_start, out_len) = out_blocks(suffix[0]);
        for output in out_start..out_start + out_len {
            entries.clear();

            for (b, c) in left.at(tuple[0], output) {
                if let Some(col) = domain.position(&tuple[1..], *b) {
                    entries.push((col, c.clone()));
                }
            }

            for q in 1..=k {
                reduced.clear();
                reduced.extend_from_slice(&tuple[..q]);
                reduced.extend_from_slice(&tuple[q + 1..]);
                let exponent = (q + 1) + parities[q] * (parity.bit() + suffix[q + 1]);
                let negative = exponent % 2 == 1;
                for (b, c) in right.at(tuple[q], output) {
                    if let Some(col) = domain.position(&reduced, *b) {
                        let w = if negative { -c.clone() } else { c.clone() };
                        entries.push((col, w));
                    }
                }
            }

            for q in 1..=k {
                for p in 0..q {
                    let Some(prod) = a.product_basis(tuple[p], tuple[q]) else {
                        continue;
                    };
                    let between = suffix[p + 1] - suffix[q];
                    let exponent = (q + 2) + parities[q] * between;
                    let negative = exponent % 2 == 1;
                    reduced.clear();
                    reduced.extend_from_slice(&tuple[..q]);
                    reduced.extend_from_slice(&tuple[q + 1..]);
                    for (b, c) in nonzero(prod) {
                        reduced[p] = b;
                        if let Some(col) = domain.position(&reduced, output) {
                            let w = if negative { -c.clone() } else { c.clone() };
                            entries.push((col, w));
                        }
                    }
                }
            }

            entries.sort_by_key(|(col, _)| *col);
            let mut row: SparseRow = Vec::with_capacity(entries.len());
            for (col, value) in entries.drain(..) {
                match row.last_mut() {
                    Some((c, v)) if *c == col => *v += value,
                    _ => row.push((col, value)),
                }
            }
            row.retain(|(_, v)| !v.is_zero());
            emit(row);
        }
        if !advance(&mut tuple, dim) {
            break;
        }
    }
}

/// Dense matrix of `d^k : C^k_p → C^{k+1}_p`; its kernel is `ZL^k_p` and
/// the column space of the matrix one degree down is `BL^{k+1}_p`.
pub fn differential_matrix(
    a: &SuperAlgebra,
    module: &Bimodule,
    degree: usize,
    parity: Parity,
) -> Matrix {
    let domain = CochainSpace::new(a, module, degree, parity);
    let codomain_dim = cochain_space_dim(a, module, degree + 1, parity);
    let mut m = Matrix::zero(codomain_dim, domain.dim());
    let mut r = 0usize;
    for_each_row(a, module, degree, parity, &domain, |row| {
        for (c, v) in row {
            *m.at_mut(r, c) = v;
        }
        r += 1;
    });
    debug_assert_eq!(r, codomain_dim);
    m
}

/// Basis of `ZL^k_p(L, M)`, the kernel of the degree-`k` coboundary matrix.
pub fn cocycle_basis(
    a: &SuperAlgebra,
    module: &Bimodule,
    degree: usize,
    parity: Parity,
) -> VectorSpaceBasis {
    let domain = CochainSpace::new(a, module, degree, parity);
    let mut reducer = RowReducer::new(domain.dim());
    for_each_row(a, module, degree, parity, &domain, |row| {
        if !row.is_empty() {
            reducer.push_sparse(row);
        }
    });
    reducer.into_kernel_basis()
}

/// Basis of `BL^k_p(L, M)`, the image of the coboundary operator one degree
/// down, expressed in `C^k_p` coordinates. For `k = 1` this is the image of
/// `C⁰_p = M_p`.
pub fn coboundary_basis(
    a: &SuperAlgebra,
    module: &Bimodule,
    degree: usize,
    parity: Parity,
) -> VectorSpaceBasis {
    assert!(degree >= 1, "coboundaries need degree >= 1");
    let domain = CochainSpace::new(a, module, degree - 1, parity);
    let codomain_dim = cochain_space_dim(a, module, degree, parity);
    // Transpose the sparse rows of d^{k−1}: the columns are the images of
    // the domain basis cochains.
    let mut columns: Vec<SparseRow> = vec![Vec::new(); domain.dim()];
    let mut r = 0usize;
    for_each_row(a, module, degree - 1, parity, &domain, |row| {
        for (c, v) in row {
            columns[c].push((r, v));
        }
        r += 1;
    });
    let mut reducer = RowReducer::new(codomain_dim);
    for col in columns {
        if !col.is_empty() {
            reducer.push_sparse(col);
        }
    }
    reducer.into_row_space_basis()
}

/// Cocycles, coboundaries and cohomology of one degree and parity.
pub fn cohomology(
    a: &SuperAlgebra,
    module: &Bimodule,
    degree: usize,
    parity: Parity,
) -> CohomologySpaces {
    assert!(degree >= 1, "cohomology is computed in degree >= 1");
    let cocycles = cocycle_basis(a, module, degree, parity);
    let coboundaries = coboundary_basis(a, module, degree, parity);
    let hl_dim = cocycles.dim() - coboundaries.dim();
    CohomologySpaces {
        cocycles,
        coboundaries,
        hl_dim,
    }
}

/// Basis of the parity-`p` derivations: the kernel of the degree-1
/// coboundary matrix with adjoint coefficients, i.e. the maps `d` with
/// `d([x,y]) = (−1)^{|d||y|}[d(x), y] + [x, d(y)]`.
pub fn derivations(a: &SuperAlgebra, parity: Parity) -> VectorSpaceBasis {
    let adj = crate::bimodule::adjoint_module(a);
    cocycle_basis(a, &adj, 1, parity)
}

/// The inner derivation `y ↦ [y, x]` of a homogeneous element `x`, as a
/// degree-1 cochain with adjoint coefficients. It always lies in the span
/// of [`derivations`] of the parity of `x`.
pub fn inner_derivation(a: &SuperAlgebra, x: &[Rational]) -> Result<Cochain, AlgebraError> {
    if x.len() != a.dim() {
        return Err(AlgebraError::DimensionMismatch {
            expected: a.dim(),
            got: x.len(),
        });
    }
    let even_support = x[..a.even_dim()].iter().any(|c| !c.is_zero());
    let odd_support = x[a.even_dim()..].iter().any(|c| !c.is_zero());
    let parity = match (even_support, odd_support) {
        (true, true) => return Err(AlgebraError::NotHomogeneous),
        (false, true) => Parity::Odd,
        _ => Parity::Even,
    };
    let adj = crate::bimodule::adjoint_module(a);
    let mut c = Cochain::zero(a, &adj, 1, parity);
    for i in 0..a.dim() {
        let e = basis_vector(a.dim(), i);
        let value = a.product(&e, x)?;
        for (o, v) in nonzero(&value) {
            c.set(&[i], o, v.clone())?;
        }
    }
    Ok(c)
}

/// Consistency helper used by the tests: the assembled matrix applied to a
/// coefficient vector must equal the coefficient vector of the evaluated
/// differential.
pub fn matrix_agrees_with_differential(a: &SuperAlgebra, module: &Bimodule, f: &Cochain) -> bool {
    let domain = CochainSpace::new(a, module, f.degree(), f.parity());
    let codomain = CochainSpace::new(a, module, f.degree() + 1, f.parity());
    let m = differential_matrix(a, module, f.degree(), f.parity());
    let via_matrix = m
        .apply(&domain.coefficient_vector(f).expect("shape checked"))
        .expect("dimensions agree");
    let direct = codomain
        .coefficient_vector(&differential(a, module, f))
        .expect("shape checked");
    via_matrix == direct
}

fn basis_vector(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = crate::rational::rat(1);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::adjoint_module;
    use crate::catalog::{nf_algebra, nf_superalgebra};
    use crate::rational::rat;
    use crate::superalgebra::StructureTable;

    #[test]
    fn nf3_degree_two_matrix_has_rank_19() {
        let a = nf_algebra(3).unwrap();
        let adj = adjoint_module(&a);
        let m = differential_matrix(&a, &adj, 2, Parity::Even);
        assert_eq!((m.rows(), m.cols()), (81, 27));
        let (_, pivots) = m.rref();
        assert_eq!(pivots.len(), 19);
    }

    #[test]
    fn nf4_degree_one_matrix_has_rank_12() {
        let a = nf_algebra(4).unwrap();
        let adj = adjoint_module(&a);
        let m = differential_matrix(&a, &adj, 1, Parity::Even);
        assert_eq!(m.cols(), 16);
        assert_eq!(m.rank(), 12);
    }

    #[test]
    fn kernel_dimensions_of_small_catalog_algebras() {
        let a = nf_algebra(2).unwrap();
        let adj = adjoint_module(&a);
        assert_eq!(cocycle_basis(&a, &adj, 2, Parity::Even).dim(), 3);

        let a = nf_superalgebra(2, 2).unwrap();
        let adj = adjoint_module(&a);
        assert_eq!(cocycle_basis(&a, &adj, 2, Parity::Even).dim(), 7);
    }

    #[test]
    fn abelian_differential_matrix_is_zero() {
        let a = SuperAlgebra::new(3, 0, StructureTable::new()).unwrap();
        let adj = adjoint_module(&a);
        for degree in 1..=2 {
            let m = differential_matrix(&a, &adj, degree, Parity::Even);
            for r in 0..m.rows() {
                assert!(m.row(r).iter().all(Rational::is_zero));
            }
        }
    }

    #[test]
    fn nf_cohomology_dimension_triple() {
        for n in 2..=4usize {
            let a = nf_algebra(n).unwrap();
            let adj = adjoint_module(&a);
            let h = cohomology(&a, &adj, 2, Parity::Even);
            assert_eq!(h.cocycles.dim(), n * n - 1);
            assert_eq!(h.coboundaries.dim(), n * n - n);
            assert_eq!(h.hl_dim, n - 1);
        }
    }

    #[test]
    fn coboundaries_are_cocycles() {
        let a = nf_superalgebra(2, 3).unwrap();
        let adj = adjoint_module(&a);
        let h = cohomology(&a, &adj, 2, Parity::Even);
        for b in h.coboundaries.vectors() {
            assert!(h.cocycles.in_span(b).unwrap());
        }
    }

    #[test]
    fn derivation_dimensions_of_the_catalog() {
        for n in 2..=4usize {
            assert_eq!(derivations(&nf_algebra(n).unwrap(), Parity::Even).dim(), n);
            assert_eq!(derivations(&nf_algebra(n).unwrap(), Parity::Odd).dim(), 0);
            assert_eq!(
                derivations(&nf_superalgebra(n, n).unwrap(), Parity::Even).dim(),
                n
            );
            assert_eq!(
                derivations(&nf_superalgebra(n, n + 1).unwrap(), Parity::Even).dim(),
                n + 1
            );
            assert_eq!(
                derivations(&nf_superalgebra(n, n).unwrap(), Parity::Odd).dim(),
                n
            );
            assert_eq!(
                derivations(&nf_superalgebra(n, n + 1).unwrap(), Parity::Odd).dim(),
                n
            );
        }
    }

    #[test]
    fn explicit_even_derivations_lie_in_the_kernel() {
        // d(x_i) = i·a₁·x_i + Σ_{k≥2} a_k x_{i+k−1} spans the even
        // derivations of NF^n: check each parameter direction separately.
        let n = 5usize;
        let a = nf_algebra(n).unwrap();
        let adj = adjoint_module(&a);
        let space = CochainSpace::new(&a, &adj, 1, Parity::Even);
        let basis = derivations(&a, Parity::Even);
        assert_eq!(basis.dim(), n);
        for param in 1..=n {
            let mut d = Cochain::zero(&a, &adj, 1, Parity::Even);
            for i in 1..=n {
                if param == 1 {
                    d.set(&[i - 1], i - 1, rat(i as i64)).unwrap();
                } else {
                    let target = i + param - 1;
                    if target <= n {
                        d.set(&[i - 1], target - 1, rat(1)).unwrap();
                    }
                }
            }
            assert!(differential(&a, &adj, &d).is_zero(), "parameter {param}");
            let v = space.coefficient_vector(&d).unwrap();
            assert!(basis.in_span(&v).unwrap());
        }
    }

    #[test]
    fn inner_derivations_are_derivations() {
        let a = nf_algebra(3).unwrap();
        let adj = adjoint_module(&a);
        // R_{x1} is the shift x_i ↦ x_{i+1}.
        let x1 = basis_vector(3, 0);
        let r = inner_derivation(&a, &x1).unwrap();
        assert_eq!(r.value(&[0])[1], rat(1));
        assert_eq!(r.value(&[1])[2], rat(1));
        assert!(differential(&a, &adj, &r).is_zero());

        let zero = vec![Rational::zero(); 3];
        assert!(inner_derivation(&a, &zero).unwrap().is_zero());

        // Odd inner derivation of NF^{2,2} lies in the odd derivation span.
        let s = nf_superalgebra(2, 2).unwrap();
        let sadj = adjoint_module(&s);
        let y1 = basis_vector(4, 2);
        let r = inner_derivation(&s, &y1).unwrap();
        assert_eq!(r.parity(), Parity::Odd);
        // x1 ↦ [x1, y1] = ½ y2 and y_i ↦ [y_i, y1] = x_i.
        assert_eq!(r.value(&[0])[3], crate::rational::frac(1, 2));
        assert_eq!(r.value(&[2])[0], rat(1));
        assert_eq!(r.value(&[3])[1], rat(1));
        let space = CochainSpace::new(&s, &sadj, 1, Parity::Odd);
        let v = space.coefficient_vector(&r).unwrap();
        assert!(derivations(&s, Parity::Odd).in_span(&v).unwrap());

        // Mixed-parity vectors are rejected.
        let mixed = vec![rat(1), rat(0), rat(1), rat(0)];
        assert!(inner_derivation(&s, &mixed).is_err());
    }

    #[test]
    fn assembled_matrix_matches_direct_evaluation() {
        let a = nf_superalgebra(2, 2).unwrap();
        let adj = adjoint_module(&a);
        for (degree, parity) in [(1, Parity::Even), (1, Parity::Odd), (2, Parity::Even)] {
            let space = CochainSpace::new(&a, &adj, degree, parity);
            let mut v = vec![Rational::zero(); space.dim()];
            for (i, slot) in v.iter_mut().enumerate() {
                *slot = crate::rational::frac(i as i64 % 7 - 3, 1 + i as i64 % 3);
            }
            let f = space.cochain_from_vector(&v).unwrap();
            assert!(matrix_agrees_with_differential(&a, &adj, &f));
        }
    }

    #[test]
    fn degree_one_coboundaries_are_the_inner_derivations() {
        for a in [nf_algebra(4).unwrap(), nf_superalgebra(2, 3).unwrap()] {
            let adj = adjoint_module(&a);
            for parity in [Parity::Even, Parity::Odd] {
                let space = CochainSpace::new(&a, &adj, 1, parity);
                if space.dim() == 0 {
                    continue;
                }
                let block: Vec<usize> =
                    (0..a.dim()).filter(|&i| a.parity_of(i) == parity).collect();
                let spanned = crate::linalg::VectorSpaceBasis::from_vectors(
                    space.dim(),
                    block.iter().map(|&i| {
                        let x = basis_vector(a.dim(), i);
                        let r = inner_derivation(&a, &x).unwrap();
                        space.coefficient_vector(&r).unwrap()
                    }),
                )
                .unwrap();
                let bl = coboundary_basis(&a, &adj, 1, parity);
                assert_eq!(spanned, bl, "algebra ({}, {})", a.even_dim(), a.odd_dim());
            }
        }
    }

    #[test]
    fn dimensions_are_independent_of_basis_labelling() {
        // Relabelling basis elements within each parity block permutes the
        // cochain coefficient order; all dimensions must be unchanged.
        let perms3 = [[2usize, 0, 1], [1, 2, 0], [2, 1, 0]];
        for (which, perm) in perms3.iter().enumerate() {
            let a = nf_algebra(3).unwrap();
            let mut t = Matrix::zero(3, 3);
            for (i, &p) in perm.iter().enumerate() {
                *t.at_mut(p, i) = crate::rational::rat(1);
            }
            let relabelled = a.change_of_basis(&t).unwrap();
            let adj_a = adjoint_module(&a);
            let adj_b = adjoint_module(&relabelled);
            let ha = cohomology(&a, &adj_a, 2, Parity::Even);
            let hb = cohomology(&relabelled, &adj_b, 2, Parity::Even);
            assert_eq!(ha.cocycles.dim(), hb.cocycles.dim(), "perm {which}");
            assert_eq!(ha.coboundaries.dim(), hb.coboundaries.dim(), "perm {which}");
            assert_eq!(ha.hl_dim, hb.hl_dim, "perm {which}");
        }
        // A block-preserving permutation of NF^{2,2}: swap x1/x2 and y1/y2.
        let a = nf_superalgebra(2, 2).unwrap();
        let mut t = Matrix::zero(4, 4);
        for (i, p) in [1usize, 0, 3, 2].into_iter().enumerate() {
            *t.at_mut(p, i) = crate::rational::rat(1);
        }
        let relabelled = a.change_of_basis(&t).unwrap();
        let ha = cohomology(&a, &adjoint_module(&a), 2, Parity::Even);
        let hb = cohomology(&relabelled, &adjoint_module(&relabelled), 2, Parity::Even);
        assert_eq!(ha.hl_dim, hb.hl_dim);
        assert_eq!(ha.cocycles.dim(), hb.cocycles.dim());
    }

    #[test]
    fn rank_nullity_holds_in_degree_one() {
        let a = nf_superalgebra(3, 3).unwrap();
        let adj = adjoint_module(&a);
        for parity in [Parity::Even, Parity::Odd] {
            let m = differential_matrix(&a, &adj, 1, parity);
            let z = cocycle_basis(&a, &adj, 1, parity);
            assert_eq!(m.rank() + z.dim(), cochain_space_dim(&a, &adj, 1, parity));
        }
    }
}

//! The catalog of null-filiform algebras.
//!
//! Up to isomorphism there are exactly two null-filiform Leibniz
//! superalgebras in each dimension: the Leibniz algebra `NF^n` (trivial odd
//! part) and the pure superalgebra `NF^{n,m}` with `m = n` or `m = n + 1`.
//! Both are single-generated and of maximal nilindex.

use std::collections::BTreeMap;

use crate::error::AlgebraError;
use crate::rational::{frac, rat, Rational};
use crate::superalgebra::{StructureTable, SuperAlgebra};

/// The null-filiform Leibniz algebra `NF^n`:
/// `[x_i, x_1] = x_{i+1}` for `1 ≤ i ≤ n−1`.
pub fn nf_algebra(n: usize) -> Result<SuperAlgebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidConstruction(
            "nf requires n >= 1".into(),
        ));
    }
    let mut table = StructureTable::new();
    for i in 0..n.saturating_sub(1) {
        table.insert((i, 0), unit_vector(n, i + 1));
    }
    SuperAlgebra::new(n, 0, table)
}

/// The null-filiform Leibniz superalgebra `NF^{n,m}` with `m = n` or
/// `m = n + 1`:
///
/// ```text
/// [y_i, y_1] = x_i        1 ≤ i ≤ n
/// [x_i, y_1] = ½ y_{i+1}  1 ≤ i ≤ m−1
/// [y_j, x_1] = y_{j+1}    1 ≤ j ≤ m−1
/// [x_i, x_1] = x_{i+1}    1 ≤ i ≤ n−1
/// ```
pub fn nf_superalgebra(n: usize, m: usize) -> Result<SuperAlgebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidConstruction(
            "nf-super requires n >= 1".into(),
        ));
    }
    if m != n && m != n + 1 {
        return Err(AlgebraError::InvalidConstruction(format!(
            "nf-super requires m = n or m = n + 1, got n = {n}, m = {m}"
        )));
    }
    let dim = n + m;
    let x = |i: usize| i - 1; // x_i, 1-based
    let y = |j: usize| n + j - 1; // y_j, 1-based
    let mut table: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
    let mut set = |l: usize, r: usize, target: usize, coeff: Rational| {
        let mut v = vec![rat(0); dim];
        v[target] = coeff;
        table.insert((l, r), v);
    };
    for i in 1..=n {
        set(y(i), y(1), x(i), rat(1));
    }
    for i in 1..m.min(n + 1) {
        set(x(i), y(1), y(i + 1), frac(1, 2));
    }
    for j in 1..m {
        set(y(j), x(1), y(j + 1), rat(1));
    }
    for i in 1..n {
        set(x(i), x(1), x(i + 1), rat(1));
    }
    SuperAlgebra::new(n, m, table)
}

fn unit_vector(dim: usize, index: usize) -> Vec<Rational> {
    let mut v = vec![rat(0); dim];
    v[index] = rat(1);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::superalgebra::StructureTable;

    fn basis(dim: usize, i: usize) -> Vec<Rational> {
        unit_vector(dim, i)
    }

    #[test]
    fn nf_small_tables() {
        let a = nf_algebra(1).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.table().is_empty());

        let a = nf_algebra(3).unwrap();
        assert_eq!(a.table().len(), 2);
        // [x1, x1] = x2 and [x2, x1] = x3
        assert_eq!(a.product_basis(0, 0).unwrap()[1], rat(1));
        assert_eq!(a.product_basis(1, 0).unwrap()[2], rat(1));
        assert!(a.product_basis(2, 0).is_none());

        assert!(nf_algebra(0).is_err());
    }

    #[test]
    fn nf_product_is_bilinear() {
        let a = nf_algebra(3).unwrap();
        let x1 = basis(3, 0);
        let prod = a.product(&x1, &x1).unwrap();
        assert_eq!(prod, basis(3, 1));
        let zero = vec![rat(0); 3];
        assert_eq!(a.product(&zero, &x1).unwrap(), zero);
    }

    #[test]
    fn nf_super_products() {
        // NF^{2,2}: [y1, y1] = x1
        let a = nf_superalgebra(2, 2).unwrap();
        let y1 = basis(4, 2);
        assert_eq!(a.product(&y1, &y1).unwrap(), basis(4, 0));

        // NF^{2,3}: [x2, y1] = ½ y3 and [y2, x1] = y3
        let a = nf_superalgebra(2, 3).unwrap();
        assert_eq!(a.table().len(), 7);
        let half_y3 = a.product_basis(1, 2).unwrap();
        assert_eq!(half_y3[4], crate::rational::frac(1, 2));
        let y3 = a.product_basis(3, 0).unwrap();
        assert_eq!(y3[4], rat(1));

        // NF^{1,1}: single product [y1, y1] = x1
        let a = nf_superalgebra(1, 1).unwrap();
        assert_eq!(a.table().len(), 1);
        assert_eq!(a.product_basis(1, 1).unwrap()[0], rat(1));

        assert!(nf_superalgebra(3, 5).is_err());
        assert!(nf_superalgebra(3, 2).is_err());
    }

    #[test]
    fn catalog_satisfies_the_superidentity() {
        for n in 1..=6 {
            assert!(nf_algebra(n)
                .unwrap()
                .check_leibniz_superidentity()
                .is_empty());
        }
        for n in 1..=4 {
            for m in [n, n + 1] {
                let a = nf_superalgebra(n, m).unwrap();
                assert!(
                    a.check_leibniz_superidentity().is_empty(),
                    "NF^{{{n},{m}}} violates the identity"
                );
            }
        }
    }

    #[test]
    fn injected_product_breaks_the_identity() {
        // NF^3 with [x1, x3] = x1 added: the identity fails on (x1, x1, x3),
        // where [x1,[x1,x3]] = x2 while [[x1,x1],x3] − [[x1,x3],x1] = −x2.
        let base = nf_algebra(3).unwrap();
        let mut table: StructureTable = base.table().clone();
        table.insert((0, 2), basis(3, 0));
        let broken = SuperAlgebra::new(3, 0, table).unwrap();
        let violations = broken.check_leibniz_superidentity();
        assert!(!violations.is_empty());
        let v = violations
            .iter()
            .find(|v| v.triple == (0, 0, 2))
            .expect("(x1, x1, x3) must violate");
        assert_eq!(v.residual, vec![rat(0), rat(2), rat(0)]);
    }

    #[test]
    fn central_series_of_catalog() {
        let report = nf_algebra(4).unwrap().lower_central_series();
        assert_eq!(report.dims, vec![4, 3, 2, 1, 0]);
        assert_eq!(report.nilindex, Some(5));

        let report = nf_superalgebra(2, 3).unwrap().lower_central_series();
        assert_eq!(report.dims, vec![5, 4, 3, 2, 1, 0]);
        assert_eq!(report.nilindex, Some(6));

        let abelian = SuperAlgebra::new(3, 0, StructureTable::new()).unwrap();
        let report = abelian.lower_central_series();
        assert_eq!(report.dims, vec![3, 0]);
        assert_eq!(report.nilindex, Some(2));
    }

    #[test]
    fn null_filiform_detection() {
        for n in 1..=8 {
            assert!(nf_algebra(n).unwrap().is_null_filiform());
        }
        for n in 1..=8 {
            for m in [n, n + 1] {
                assert!(nf_superalgebra(n, m).unwrap().is_null_filiform());
            }
        }
        let abelian = SuperAlgebra::new(2, 0, StructureTable::new()).unwrap();
        assert!(!abelian.is_null_filiform());
    }

    #[test]
    fn single_generation_matches_null_filiformity_on_nilpotent_algebras() {
        let mut nilpotent: Vec<SuperAlgebra> = Vec::new();
        for n in 1..=5 {
            nilpotent.push(nf_algebra(n).unwrap());
        }
        for n in 1..=3 {
            for m in [n, n + 1] {
                nilpotent.push(nf_superalgebra(n, m).unwrap());
            }
        }
        nilpotent.push(SuperAlgebra::new(3, 0, StructureTable::new()).unwrap());
        let mut table = StructureTable::new();
        table.insert((0, 0), basis(4, 1));
        table.insert((2, 2), basis(4, 3));
        nilpotent.push(SuperAlgebra::new(4, 0, table).unwrap());
        for a in nilpotent {
            assert_eq!(
                a.minimal_generator_count().unwrap() == 1,
                a.is_null_filiform(),
                "algebra of dims ({}, {})",
                a.even_dim(),
                a.odd_dim()
            );
        }
    }

    #[test]
    fn only_the_first_basis_element_certifies_nf() {
        for n in 1..=6 {
            let a = nf_algebra(n).unwrap();
            let certs = a.generator_certificate().unwrap();
            assert_eq!(certs[0].1, rat(1), "x1 certificate at n = {n}");
            for (i, det) in &certs[1..] {
                assert_eq!(*det, rat(0), "x{} certificate at n = {n}", i + 1);
            }
        }
    }

    #[test]
    fn generator_counts() {
        assert_eq!(nf_algebra(5).unwrap().minimal_generator_count().unwrap(), 1);
        let abelian = SuperAlgebra::new(3, 0, StructureTable::new()).unwrap();
        assert_eq!(abelian.minimal_generator_count().unwrap(), 3);

        // NF^2 ⊕ NF^2: two generators.
        let mut table = StructureTable::new();
        table.insert((0, 0), basis(4, 1));
        table.insert((2, 2), basis(4, 3));
        let sum = SuperAlgebra::new(4, 0, table).unwrap();
        assert_eq!(sum.minimal_generator_count().unwrap(), 2);

        // Non-nilpotent input is rejected: [x1, x1] = x1.
        let mut table = StructureTable::new();
        table.insert((0, 0), basis(1, 0));
        let bad = SuperAlgebra::new(1, 0, table).unwrap();
        assert!(bad.minimal_generator_count().is_err());
    }

    #[test]
    fn generator_certificates() {
        let a = nf_algebra(3).unwrap();
        let certs = a.generator_certificate().unwrap();
        assert_eq!(certs[0], (0, rat(1)));
        assert_eq!(certs[1].1, rat(0));
        assert_eq!(certs[2].1, rat(0));
        assert!(nf_superalgebra(2, 2)
            .unwrap()
            .generator_certificate()
            .is_err());
    }

    #[test]
    fn grading_violations_are_rejected() {
        // [y1, y1] = y1 would be odd-valued on an even product.
        let mut table = StructureTable::new();
        table.insert((1, 1), basis(2, 1));
        assert!(matches!(
            SuperAlgebra::new(1, 1, table),
            Err(AlgebraError::GradingViolation { .. })
        ));
    }

    #[test]
    fn basis_names_round_trip() {
        let a = nf_superalgebra(2, 3).unwrap();
        for i in 0..a.dim() {
            let name = a.basis_name(i);
            assert_eq!(a.basis_index(&name), Some(i));
        }
        assert_eq!(a.basis_name(0), "x1");
        assert_eq!(a.basis_name(2), "y1");
        assert!(a.basis_index("x3").is_none());
        assert!(a.basis_index("z1").is_none());
        assert!(a.basis_index("y0").is_none());
    }
}

//! Independent oracle for the degree-2 coboundary operator on algebras with
//! trivial odd part: the six-term formula
//!
//!   d²φ(x, y, z) = [x, φ(y,z)] − [φ(x,y), z] + [φ(x,z), y]
//!                + φ(x, [y,z]) − φ([x,y], z) + φ([x,z], y)
//!
//! implemented from scratch here, term by term, and compared against the
//! general graded operator on random cochains.

use leibniz::bimodule::adjoint_module;
use leibniz::catalog::nf_algebra;
use leibniz::cochain::{differential, Cochain, CochainSpace};
use leibniz::deformations::{family, FamilyKind, FamilyParams};
use leibniz::rational::{frac, rat, Rational};
use leibniz::superalgebra::{Parity, SuperAlgebra};
use num_traits::Zero;

fn basis(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = rat(1);
    v
}

/// The six-term formula evaluated on one basis triple.
fn six_term(a: &SuperAlgebra, phi: &Cochain, x: usize, y: usize, z: usize) -> Vec<Rational> {
    let dim = a.dim();
    let e = |i: usize| basis(dim, i);
    let zero = vec![Rational::zero(); dim];
    let bracket = |u: &[Rational], v: &[Rational]| a.product(u, v).unwrap();
    let phi_of = |u: &[Rational], v: &[Rational]| phi.evaluate(&[u, v]).unwrap();

    let mut acc = zero.clone();
    let add = |acc: &mut Vec<Rational>, sign: i64, v: Vec<Rational>| {
        for (a, b) in acc.iter_mut().zip(v) {
            if sign > 0 {
                *a += b;
            } else {
                *a -= b;
            }
        }
    };
    add(&mut acc, 1, bracket(&e(x), &phi_of(&e(y), &e(z))));
    add(&mut acc, -1, bracket(&phi_of(&e(x), &e(y)), &e(z)));
    add(&mut acc, 1, bracket(&phi_of(&e(x), &e(z)), &e(y)));
    add(&mut acc, 1, phi_of(&e(x), &bracket(&e(y), &e(z))));
    add(&mut acc, -1, phi_of(&bracket(&e(x), &e(y)), &e(z)));
    add(&mut acc, 1, phi_of(&bracket(&e(x), &e(z)), &e(y)));
    acc
}

fn pseudo_random_cochain(a: &SuperAlgebra, salt: i64) -> Cochain {
    let adj = adjoint_module(a);
    let space = CochainSpace::new(a, &adj, 2, Parity::Even);
    let coeffs: Vec<Rational> = (0..space.dim() as i64)
        .map(|i| {
            let v = (i * 7 + salt * 13) % 11 - 5;
            let d = (i * 3 + salt) % 4 + 1;
            frac(v, d)
        })
        .collect();
    space.cochain_from_vector(&coeffs).unwrap()
}

#[test]
fn graded_operator_specialises_to_the_six_term_formula() {
    let mut algebras = Vec::new();
    for n in 2..=5 {
        algebras.push(nf_algebra(n).unwrap());
    }
    let fp = FamilyParams::new(FamilyKind::Mu, 4, vec![rat(1), frac(-2, 3), rat(0)]).unwrap();
    algebras.push(family(&fp, &rat(1)).unwrap());

    for (which, a) in algebras.iter().enumerate() {
        let adj = adjoint_module(a);
        for salt in 0..4 {
            let phi = pseudo_random_cochain(a, salt + which as i64);
            let d = differential(a, &adj, &phi);
            for x in 0..a.dim() {
                for y in 0..a.dim() {
                    for z in 0..a.dim() {
                        let expected = six_term(a, &phi, x, y, z);
                        assert_eq!(
                            d.value(&[x, y, z]),
                            expected.as_slice(),
                            "mismatch at algebra {which}, salt {salt}, triple ({x},{y},{z})"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn composed_operator_vanishes_on_pseudo_random_cochains() {
    for n in 2..=4 {
        let a = nf_algebra(n).unwrap();
        let adj = adjoint_module(&a);
        for salt in 0..6 {
            let phi = pseudo_random_cochain(&a, salt);
            assert!(differential(&a, &adj, &differential(&a, &adj, &phi)).is_zero());
        }
    }
}

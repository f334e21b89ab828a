//! Explicit bases of the even 2-cocycle and 2-coboundary spaces of the
//! null-filiform catalog, entered literally as coefficient tables.
//!
//! For each catalog algebra the functions below construct the named basis
//! cochains (`phi`, `psi`) of `ZL²₀` and the combinations (`xi`, `zeta`)
//! that span `BL²₀`, with adjoint coefficients. Indices are 1-based, as in
//! `x1..xn`, `y1..ym`. All constructors panic on out-of-range indices; the
//! test suites verify that every returned cochain really is a cocycle
//! (respectively a coboundary) of its algebra.
//!
//! Conventions used throughout (all unlisted values are zero):
//!
//! - `NF^n`: `phi_{j,k}(x_j, x_1) = x_k`; `psi_j` sends `(x_j, x_1) ↦ x_1`
//!   and `(x_i, x_{j+1}) ↦ −x_{i+1}`.
//! - `NF^{n,n}` and `NF^{n,n+1}`: the two-parameter families below.

use crate::bimodule::adjoint_module;
use crate::catalog::{nf_algebra, nf_superalgebra};
use crate::cochain::Cochain;
use crate::rational::{frac, rat, Rational};
use crate::superalgebra::Parity;

struct Builder {
    n: usize,
    cochain: Cochain,
}

impl Builder {
    fn nf(n: usize) -> Self {
        let a = nf_algebra(n).expect("n >= 1");
        let adj = adjoint_module(&a);
        Builder {
            n,
            cochain: Cochain::zero(&a, &adj, 2, Parity::Even),
        }
    }

    fn nf_super(n: usize, m: usize) -> Self {
        let a = nf_superalgebra(n, m).expect("valid (n, m)");
        let adj = adjoint_module(&a);
        Builder {
            n,
            cochain: Cochain::zero(&a, &adj, 2, Parity::Even),
        }
    }

    fn x(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        i - 1
    }

    fn y(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        self.n + i - 1
    }

    fn set(&mut self, left: usize, right: usize, target: usize, value: Rational) {
        self.cochain
            .set(&[left, right], target, value)
            .expect("catalog tables are parity-consistent");
    }

    fn build(self) -> Cochain {
        self.cochain
    }
}

// ----- NF^n -----

/// `phi_{j,k}` on `NF^n`: `(x_j, x_1) ↦ x_k`, for `1 ≤ j ≤ n`, `2 ≤ k ≤ n`.
pub fn nf_phi(n: usize, j: usize, k: usize) -> Cochain {
    assert!(
        (1..=n).contains(&j) && (2..=k.max(2)).contains(&k) && k <= n,
        "phi range"
    );
    let mut b = Builder::nf(n);
    let (xj, x1, xk) = (b.x(j), b.x(1), b.x(k));
    b.set(xj, x1, xk, rat(1));
    b.build()
}

/// `psi_j` on `NF^n`: `(x_j, x_1) ↦ x_1` and `(x_i, x_{j+1}) ↦ −x_{i+1}`
/// for `1 ≤ i ≤ n−1`; requires `1 ≤ j ≤ n−1`.
pub fn nf_psi(n: usize, j: usize) -> Cochain {
    assert!((1..n).contains(&j), "psi range");
    let mut b = Builder::nf(n);
    let (xj, x1) = (b.x(j), b.x(1));
    b.set(xj, x1, b.x(1), rat(1));
    for i in 1..n {
        b.set(b.x(i), b.x(j + 1), b.x(i + 1), rat(-1));
    }
    b.build()
}

/// Coboundary basis element `xi_{j,k}` of `NF^n`, `2 ≤ j ≤ n`, `1 ≤ k ≤ n`:
///
/// ```text
/// xi_{j,1} = psi_{j−1} − phi_{j,2}
/// xi_{j,k} = phi_{j−1,k}                  j ≤ k
/// xi_{j,k} = phi_{j−1,k} − phi_{j,k+1}    2 ≤ k < j
/// ```
pub fn nf_xi(n: usize, j: usize, k: usize) -> Cochain {
    assert!((2..=n).contains(&j) && (1..=n).contains(&k), "xi range");
    if k == 1 {
        &nf_psi(n, j - 1) - &nf_phi(n, j, 2)
    } else if j <= k {
        nf_phi(n, j - 1, k)
    } else {
        &nf_phi(n, j - 1, k) - &nf_phi(n, j, k + 1)
    }
}

// ----- NF^{n,n} -----

/// `phi_{j,k}` on `NF^{n,n}`, `1 ≤ j ≤ n`, `1 ≤ k ≤ n`.
pub fn nn_phi(n: usize, j: usize, k: usize) -> Cochain {
    assert!((1..=n).contains(&j) && (1..=n).contains(&k), "phi range");
    let mut b = Builder::nf_super(n, n);
    match (j, k) {
        (1, 1) => {
            b.set(b.y(1), b.y(1), b.x(1), rat(1));
            for i in 1..n {
                b.set(b.x(i), b.x(1), b.x(i + 1), rat(-1));
            }
            for i in 2..n {
                b.set(b.y(i), b.x(1), b.y(i + 1), rat(-1));
            }
        }
        (j, 1) => {
            b.set(b.y(j), b.y(1), b.x(1), rat(1));
            b.set(b.x(j - 1), b.x(1), b.x(1), rat(1));
            b.set(b.y(j), b.x(1), b.y(2), rat(1));
            for i in 1..n {
                b.set(b.x(i), b.x(j), b.x(i + 1), rat(-1));
                b.set(b.y(i), b.x(j), b.y(i + 1), rat(-1));
            }
        }
        (1, k) => {
            b.set(b.y(1), b.y(1), b.x(k), rat(1));
            if k < n {
                b.set(b.y(1), b.x(1), b.y(k + 1), rat(1));
            }
        }
        (j, k) => {
            b.set(b.y(j), b.y(1), b.x(k), rat(1));
            b.set(b.x(j - 1), b.x(1), b.x(k), rat(1));
            if k < n {
                b.set(b.y(j), b.x(1), b.y(k + 1), rat(1));
            }
        }
    }
    b.build()
}

/// `psi_{j,k}` on `NF^{n,n}`: `1 ≤ j ≤ n−1` when `k = 1`, else `1 ≤ j ≤ n`,
/// `2 ≤ k ≤ n`.
pub fn nn_psi(n: usize, j: usize, k: usize) -> Cochain {
    let mut b = Builder::nf_super(n, n);
    if k == 1 {
        assert!((1..n).contains(&j), "psi_{{j,1}} range");
        b.set(b.x(j), b.y(1), b.y(1), rat(1));
        b.set(b.x(j), b.x(1), b.x(1), rat(2));
        b.set(b.y(j), b.x(1), b.y(1), rat(2));
        for i in 1..n {
            b.set(b.x(i), b.x(j + 1), b.x(i + 1), rat(-2));
            b.set(b.y(i), b.x(j + 1), b.y(i + 1), rat(-2));
            b.set(b.x(i), b.y(j + 1), b.y(i + 1), rat(-1));
        }
        for i in 1..=n {
            b.set(b.y(i), b.y(j + 1), b.x(i), rat(-2));
        }
    } else {
        assert!((1..=n).contains(&j) && (2..=n).contains(&k), "psi range");
        b.set(b.x(j), b.y(1), b.y(k), rat(1));
        b.set(b.x(j), b.x(1), b.x(k), rat(2));
        b.set(b.y(j), b.x(1), b.y(k), rat(2));
    }
    b.build()
}

/// Coboundary basis element `xi_{j,k}` of `NF^{n,n}`:
/// `phi_{j,k}` for `j ≤ k ≤ n`, and `phi_{j,k} − ½ psi_{j,k+1}` for
/// `1 ≤ k ≤ j−1` (so `j ≥ 2`).
pub fn nn_xi(n: usize, j: usize, k: usize) -> Cochain {
    assert!((1..=n).contains(&j) && (1..=n).contains(&k), "xi range");
    if j <= k {
        nn_phi(n, j, k)
    } else {
        &nn_phi(n, j, k) - &nn_psi(n, j, k + 1).scale(&frac(1, 2))
    }
}

/// Coboundary basis element `zeta_{j,k}` of `NF^{n,n}`, `2 ≤ j ≤ n`:
/// `psi_{j−1,k}` for `j ≤ k ≤ n`, and `½ psi_{j−1,k} − phi_{j,k}` for
/// `1 ≤ k ≤ j−1`.
pub fn nn_zeta(n: usize, j: usize, k: usize) -> Cochain {
    assert!((2..=n).contains(&j) && (1..=n).contains(&k), "zeta range");
    if j <= k {
        nn_psi(n, j - 1, k)
    } else {
        &nn_psi(n, j - 1, k).scale(&frac(1, 2)) - &nn_phi(n, j, k)
    }
}

// ----- NF^{n,n+1} -----

/// `phi_{j,k}` on `NF^{n,n+1}`, `1 ≤ j ≤ n+1`, `1 ≤ k ≤ n`.
pub fn nn1_phi(n: usize, j: usize, k: usize) -> Cochain {
    assert!(
        (1..=n + 1).contains(&j) && (1..=n).contains(&k),
        "phi range"
    );
    let mut b = Builder::nf_super(n, n + 1);
    match (j, k) {
        (1, 1) => {
            b.set(b.y(1), b.y(1), b.x(1), rat(1));
            for i in 1..n {
                b.set(b.x(i), b.x(1), b.x(i + 1), rat(-1));
            }
            for i in 2..=n {
                b.set(b.y(i), b.x(1), b.y(i + 1), rat(-1));
            }
        }
        (j, 1) if j <= n => {
            b.set(b.y(j), b.y(1), b.x(1), rat(1));
            b.set(b.x(j - 1), b.x(1), b.x(1), rat(1));
            b.set(b.y(j), b.x(1), b.y(2), rat(1));
            for i in 1..n {
                b.set(b.x(i), b.x(j), b.x(i + 1), rat(-1));
            }
            for i in 1..=n {
                b.set(b.y(i), b.x(j), b.y(i + 1), rat(-1));
            }
        }
        (_, 1) => {
            // j = n + 1. The y_{n+1}-column signs come from the kernel
            // computation, which fixes them opposite to the x/y columns.
            b.set(b.y(n + 1), b.y(1), b.x(1), rat(1));
            b.set(b.x(n), b.y(1), b.y(1), frac(-1, 2));
            b.set(b.y(n), b.x(1), b.y(1), rat(-1));
            b.set(b.y(n + 1), b.x(1), b.y(2), rat(1));
            for i in 1..=n {
                b.set(b.x(i), b.y(n + 1), b.y(i + 1), frac(1, 2));
                b.set(b.y(i), b.y(n + 1), b.x(i), rat(1));
            }
        }
        (1, k) => {
            b.set(b.y(1), b.y(1), b.x(k), rat(1));
            b.set(b.y(1), b.x(1), b.y(k + 1), rat(1));
        }
        (j, k) => {
            b.set(b.y(j), b.y(1), b.x(k), rat(1));
            b.set(b.x(j - 1), b.x(1), b.x(k), rat(1));
            b.set(b.y(j), b.x(1), b.y(k + 1), rat(1));
        }
    }
    b.build()
}

/// `psi_{j,k}` on `NF^{n,n+1}`: `1 ≤ j ≤ n−1` when `k = 1`, else
/// `1 ≤ j ≤ n`, `2 ≤ k ≤ n+1`.
pub fn nn1_psi(n: usize, j: usize, k: usize) -> Cochain {
    let mut b = Builder::nf_super(n, n + 1);
    if k == 1 {
        assert!((1..n).contains(&j), "psi_{{j,1}} range");
        b.set(b.x(j), b.y(1), b.y(1), rat(1));
        b.set(b.x(j), b.x(1), b.x(1), rat(2));
        b.set(b.y(j), b.x(1), b.y(1), rat(2));
        for i in 1..n {
            b.set(b.x(i), b.x(j + 1), b.x(i + 1), rat(-2));
        }
        for i in 1..=n {
            b.set(b.y(i), b.x(j + 1), b.y(i + 1), rat(-2));
            b.set(b.x(i), b.y(j + 1), b.y(i + 1), rat(-1));
            b.set(b.y(i), b.y(j + 1), b.x(i), rat(-2));
        }
    } else if k <= n {
        assert!((1..=n).contains(&j), "psi range");
        b.set(b.x(j), b.y(1), b.y(k), rat(1));
        b.set(b.x(j), b.x(1), b.x(k), rat(2));
        b.set(b.y(j), b.x(1), b.y(k), rat(2));
    } else {
        assert!(k == n + 1 && (1..=n).contains(&j), "psi_{{j,n+1}} range");
        b.set(b.x(j), b.y(1), b.y(n + 1), rat(1));
        b.set(b.y(j), b.x(1), b.y(n + 1), rat(2));
    }
    b.build()
}

/// Coboundary basis element `xi_{j,k}` of `NF^{n,n+1}`:
/// `phi_{j,k}` for `j ≤ k ≤ n`, and `phi_{j,k} − ½ psi_{j,k+1}` for
/// `1 ≤ k ≤ j−1` (so `j ≥ 2`).
pub fn nn1_xi(n: usize, j: usize, k: usize) -> Cochain {
    assert!((1..=n).contains(&j) && (1..=n).contains(&k), "xi range");
    if j <= k {
        nn1_phi(n, j, k)
    } else {
        &nn1_phi(n, j, k) - &nn1_psi(n, j, k + 1).scale(&frac(1, 2))
    }
}

/// Coboundary basis element `zeta_{j,k}` of `NF^{n,n+1}`, `2 ≤ j ≤ n+1`:
///
/// ```text
/// zeta_{j,1}   = ½ psi_{j−1,1} − phi_{j,1}   2 ≤ j ≤ n
/// zeta_{n+1,1} = −phi_{n+1,1}
/// zeta_{j,k}   = psi_{j−1,k}                 j ≤ k ≤ n+1
/// zeta_{j,k}   = ½ psi_{j−1,k} − phi_{j,k}   2 ≤ k ≤ j−1
/// ```
pub fn nn1_zeta(n: usize, j: usize, k: usize) -> Cochain {
    assert!(
        (2..=n + 1).contains(&j) && (1..=n + 1).contains(&k),
        "zeta range"
    );
    if k == 1 {
        if j <= n {
            &nn1_psi(n, j - 1, 1).scale(&frac(1, 2)) - &nn1_phi(n, j, 1)
        } else {
            -&nn1_phi(n, n + 1, 1)
        }
    } else if j <= k {
        nn1_psi(n, j - 1, k)
    } else {
        &nn1_psi(n, j - 1, k).scale(&frac(1, 2)) - &nn1_phi(n, j, k)
    }
}

/// Every `(j, k)` index of the cocycle basis of `NF^n`, in a fixed order:
/// all `phi` indices first, then the `psi` indices paired with `k = 0`.
pub fn nf_cocycle_indices(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..=n {
        for k in 2..=n {
            out.push((j, k));
        }
    }
    for j in 1..n {
        out.push((j, 0));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::{differential, CochainSpace};
    use crate::cohomology::cohomology;
    use crate::superalgebra::Parity;

    #[test]
    fn nf_tables_are_cocycles_and_count_matches() {
        for n in 2..=4usize {
            let a = nf_algebra(n).unwrap();
            let adj = adjoint_module(&a);
            let space = CochainSpace::new(&a, &adj, 2, Parity::Even);
            let h = cohomology(&a, &adj, 2, Parity::Even);
            let mut count = 0;
            for j in 1..=n {
                for k in 2..=n {
                    let c = nf_phi(n, j, k);
                    assert!(differential(&a, &adj, &c).is_zero(), "phi_{{{j},{k}}}");
                    assert!(h
                        .cocycles
                        .in_span(&space.coefficient_vector(&c).unwrap())
                        .unwrap());
                    count += 1;
                }
            }
            for j in 1..n {
                let c = nf_psi(n, j);
                assert!(differential(&a, &adj, &c).is_zero(), "psi_{j}");
                count += 1;
            }
            assert_eq!(count, n * n - 1);
            assert_eq!(h.cocycles.dim(), count);
        }
    }

    #[test]
    fn nf_xi_tables_are_coboundaries() {
        for n in 2..=4usize {
            let a = nf_algebra(n).unwrap();
            let adj = adjoint_module(&a);
            let space = CochainSpace::new(&a, &adj, 2, Parity::Even);
            let h = cohomology(&a, &adj, 2, Parity::Even);
            let mut count = 0;
            for j in 2..=n {
                for k in 1..=n {
                    let c = nf_xi(n, j, k);
                    let v = space.coefficient_vector(&c).unwrap();
                    assert!(
                        h.coboundaries.in_span(&v).unwrap(),
                        "xi_{{{j},{k}}} must be a coboundary"
                    );
                    count += 1;
                }
            }
            assert_eq!(count, n * n - n);
            assert_eq!(h.coboundaries.dim(), count);
        }
    }

    #[test]
    fn nn_tables_are_cocycles_with_the_right_count() {
        for n in 2..=3usize {
            let a = nf_superalgebra(n, n).unwrap();
            let adj = adjoint_module(&a);
            let mut count = 0;
            for j in 1..=n {
                for k in 1..=n {
                    let c = nn_phi(n, j, k);
                    assert!(
                        differential(&a, &adj, &c).is_zero(),
                        "nn phi_{{{j},{k}}} at n = {n}"
                    );
                    count += 1;
                }
            }
            for j in 1..n {
                let c = nn_psi(n, j, 1);
                assert!(differential(&a, &adj, &c).is_zero(), "nn psi_{{{j},1}}");
                count += 1;
            }
            for j in 1..=n {
                for k in 2..=n {
                    let c = nn_psi(n, j, k);
                    assert!(
                        differential(&a, &adj, &c).is_zero(),
                        "nn psi_{{{j},{k}}} at n = {n}"
                    );
                    count += 1;
                }
            }
            assert_eq!(count, 2 * n * n - 1);
        }
    }

    #[test]
    fn nn1_tables_are_cocycles_with_the_right_count() {
        for n in 2..=3usize {
            let a = nf_superalgebra(n, n + 1).unwrap();
            let adj = adjoint_module(&a);
            let mut count = 0;
            for j in 1..=n + 1 {
                for k in 1..=n {
                    let c = nn1_phi(n, j, k);
                    assert!(
                        differential(&a, &adj, &c).is_zero(),
                        "nn1 phi_{{{j},{k}}} at n = {n}"
                    );
                    count += 1;
                }
            }
            for j in 1..n {
                let c = nn1_psi(n, j, 1);
                assert!(differential(&a, &adj, &c).is_zero(), "nn1 psi_{{{j},1}}");
                count += 1;
            }
            for j in 1..=n {
                for k in 2..=n + 1 {
                    let c = nn1_psi(n, j, k);
                    assert!(
                        differential(&a, &adj, &c).is_zero(),
                        "nn1 psi_{{{j},{k}}} at n = {n}"
                    );
                    count += 1;
                }
            }
            assert_eq!(count, 2 * n * n + 2 * n - 1);
        }
    }

    #[test]
    fn super_coboundary_tables_lie_in_the_image() {
        for n in 2..=3usize {
            let a = nf_superalgebra(n, n).unwrap();
            let adj = adjoint_module(&a);
            let space = CochainSpace::new(&a, &adj, 2, Parity::Even);
            let h = cohomology(&a, &adj, 2, Parity::Even);
            let mut count = 0;
            for j in 1..=n {
                for k in 1..=n {
                    if j <= k || j >= 2 {
                        let c = nn_xi(n, j, k);
                        let v = space.coefficient_vector(&c).unwrap();
                        assert!(h.coboundaries.in_span(&v).unwrap(), "nn xi_{{{j},{k}}}");
                        count += 1;
                    }
                }
            }
            for j in 2..=n {
                for k in 1..=n {
                    let c = nn_zeta(n, j, k);
                    let v = space.coefficient_vector(&c).unwrap();
                    assert!(h.coboundaries.in_span(&v).unwrap(), "nn zeta_{{{j},{k}}}");
                    count += 1;
                }
            }
            assert_eq!(count, 2 * n * n - n);
            assert_eq!(h.coboundaries.dim(), count);
        }
    }

    #[test]
    fn nn1_coboundary_tables_lie_in_the_image() {
        for n in 2..=3usize {
            let a = nf_superalgebra(n, n + 1).unwrap();
            let adj = adjoint_module(&a);
            let space = CochainSpace::new(&a, &adj, 2, Parity::Even);
            let h = cohomology(&a, &adj, 2, Parity::Even);
            let mut count = 0;
            for j in 1..=n {
                for k in 1..=n {
                    if j <= k || j >= 2 {
                        let c = nn1_xi(n, j, k);
                        let v = space.coefficient_vector(&c).unwrap();
                        assert!(h.coboundaries.in_span(&v).unwrap(), "nn1 xi_{{{j},{k}}}");
                        count += 1;
                    }
                }
            }
            for j in 2..=n + 1 {
                for k in 1..=n + 1 {
                    let valid = k == 1 || j <= k || (2..=j - 1).contains(&k);
                    if valid {
                        let c = nn1_zeta(n, j, k);
                        let v = space.coefficient_vector(&c).unwrap();
                        assert!(h.coboundaries.in_span(&v).unwrap(), "nn1 zeta_{{{j},{k}}}");
                        count += 1;
                    }
                }
            }
            assert_eq!(count, 2 * n * n + n);
            assert_eq!(h.coboundaries.dim(), count);
        }
    }

    #[test]
    fn phi_12_is_a_coboundary_of_nf3() {
        // xi_{2,2} = phi_{1,2}, so phi_{1,2} lies in the coboundary span.
        let n = 3;
        let a = nf_algebra(n).unwrap();
        let adj = adjoint_module(&a);
        let space = CochainSpace::new(&a, &adj, 2, Parity::Even);
        let h = cohomology(&a, &adj, 2, Parity::Even);
        let v = space.coefficient_vector(&nf_phi(n, 1, 2)).unwrap();
        assert!(h.coboundaries.in_span(&v).unwrap());
        // phi_{3,2} spans a nontrivial class instead.
        let v = space.coefficient_vector(&nf_phi(n, 3, 2)).unwrap();
        assert!(!h.coboundaries.in_span(&v).unwrap());
    }
}

//! Linear integrability: which infinitesimal deformations extend to a
//! genuine one-parameter family of Leibniz superalgebras. The check is the
//! quadratic condition
//!
//!   phi(x, phi(y,z)) − phi(phi(x,y), z) + (−1)^{|y||z|} phi(phi(x,z), y) = 0,
//!
//! and across the catalog it splits the named cocycles exactly along the
//! k = 1 / k >= 2 boundary.
//!
//! Run with: `cargo run --example integrability`

use leibniz::catalog::{nf_algebra, nf_superalgebra};
use leibniz::deformations::is_linearly_integrable;
use leibniz::rational::frac;
use leibniz::standard_cocycles::{nf_phi, nf_psi, nn1_phi, nn_psi};

fn main() {
    let n = 4usize;
    let a = nf_algebra(n).unwrap();

    // Any combination of the phi family integrates.
    let combo = &nf_phi(n, 4, 2).scale(&frac(2, 3)) + &nf_phi(n, 2, 3).scale(&frac(-5, 1));
    let (ok, _) = is_linearly_integrable(&a, &combo).unwrap();
    println!("NF^{n}: (2/3) phi_{{4,2}} - 5 phi_{{2,3}} integrable: {ok}");

    // No psi does: the first violation is reported with its triple.
    for j in 1..n {
        let (ok, violations) = is_linearly_integrable(&a, &nf_psi(n, j)).unwrap();
        let witness = violations
            .first()
            .map(|v| {
                format!(
                    "({}, {}, {})",
                    a.basis_name(v.triple.0),
                    a.basis_name(v.triple.1),
                    a.basis_name(v.triple.2)
                )
            })
            .unwrap_or_default();
        println!("NF^{n}: psi_{j} integrable: {ok}   first violated triple: {witness}");
    }

    // Super catalog: the k = 1 columns fail, everything else passes.
    let nn = nf_superalgebra(3, 3).unwrap();
    for k in 1..=3usize {
        let (ok, _) = is_linearly_integrable(&nn, &nn_psi(3, 2, k)).unwrap();
        println!("NF^(3,3): psi_{{2,{k}}} integrable: {ok}");
    }
    let nn1 = nf_superalgebra(3, 4).unwrap();
    for k in 1..=3usize {
        let (ok, _) = is_linearly_integrable(&nn1, &nn1_phi(3, 4, k)).unwrap();
        println!("NF^(3,4): phi_{{4,{k}}} integrable: {ok}");
    }
}

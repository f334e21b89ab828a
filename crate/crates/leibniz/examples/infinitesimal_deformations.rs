//! Infinitesimal deformations of NF^n: the named cocycle families phi and
//! psi span the degree-2 even cocycle space, the xi combinations span the
//! coboundaries, and the classes of phi_{n,2..n} represent the quotient.
//!
//! Run with: `cargo run --example infinitesimal_deformations`

use leibniz::bimodule::adjoint_module;
use leibniz::catalog::nf_algebra;
use leibniz::cochain::{differential, CochainSpace};
use leibniz::cohomology::cohomology;
use leibniz::deformations::cohomologous;
use leibniz::standard_cocycles::{nf_phi, nf_psi, nf_xi};
use leibniz::superalgebra::Parity;

fn main() {
    let n = 4usize;
    let a = nf_algebra(n).unwrap();
    let adj = adjoint_module(&a);
    let space = CochainSpace::new(&a, &adj, 2, Parity::Even);
    let h = cohomology(&a, &adj, 2, Parity::Even);

    println!(
        "NF^{n}: dim C2 = {}, dim ZL2 = {}, dim BL2 = {}, dim HL2 = {}",
        space.dim(),
        h.cocycles.dim(),
        h.coboundaries.dim(),
        h.hl_dim
    );

    println!("\nnamed cocycles (d phi = 0?):");
    for j in 1..=n {
        for k in 2..=n {
            let is_cocycle = differential(&a, &adj, &nf_phi(n, j, k)).is_zero();
            print!("  phi_{{{j},{k}}}: {is_cocycle}");
        }
        println!();
    }
    for j in 1..n {
        let is_cocycle = differential(&a, &adj, &nf_psi(n, j)).is_zero();
        println!("  psi_{j}: {is_cocycle}");
    }

    println!("\nnamed coboundaries (xi in BL2?):");
    for j in 2..=n {
        let mut line = String::new();
        for k in 1..=n {
            let v = space.coefficient_vector(&nf_xi(n, j, k)).unwrap();
            let inside = h.coboundaries.in_span(&v).unwrap();
            line.push_str(&format!("  xi_{{{j},{k}}}: {inside}"));
        }
        println!("{line}");
    }

    println!("\nquotient classes of the top-row cocycles:");
    for k in 2..=n {
        let v = space.coefficient_vector(&nf_phi(n, n, k)).unwrap();
        let trivial = h.coboundaries.in_span(&v).unwrap();
        println!("  class of phi_{{{n},{k}}} is trivial: {trivial}");
    }
    for k in 2..n {
        let distinct = !cohomologous(&a, &nf_phi(n, n, k), &nf_phi(n, n, k + 1)).unwrap();
        println!(
            "  phi_{{{n},{k}}} and phi_{{{n},{}}} represent distinct classes: {distinct}",
            k + 1
        );
    }
    // phi_{1,2} by contrast is a coboundary (it equals xi_{2,2}).
    let v = space.coefficient_vector(&nf_phi(n, 1, 2)).unwrap();
    println!(
        "  class of phi_{{1,2}} is trivial: {}",
        h.coboundaries.in_span(&v).unwrap()
    );
}

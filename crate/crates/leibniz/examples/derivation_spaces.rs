//! Derivation algebras of the catalog: kernel of the degree-1 coboundary
//! operator, split by parity. Even derivations of NF^n form an
//! n-parameter upper-triangular family; the super catalog has m even and
//! n odd parameters.
//!
//! Run with: `cargo run --example derivation_spaces`

use leibniz::bimodule::adjoint_module;
use leibniz::catalog::{nf_algebra, nf_superalgebra};
use leibniz::cochain::CochainSpace;
use leibniz::cohomology::{derivations, inner_derivation};
use leibniz::rational::rat;
use leibniz::superalgebra::Parity;
use num_traits::Zero;

fn main() {
    println!("derivation dimensions (even / odd):");
    for n in 2..=5usize {
        let nf = nf_algebra(n).unwrap();
        let nn = nf_superalgebra(n, n).unwrap();
        let nn1 = nf_superalgebra(n, n + 1).unwrap();
        println!(
            "  n = {n}:  NF^n {} / {}   NF^(n,n) {} / {}   NF^(n,n+1) {} / {}",
            derivations(&nf, Parity::Even).dim(),
            derivations(&nf, Parity::Odd).dim(),
            derivations(&nn, Parity::Even).dim(),
            derivations(&nn, Parity::Odd).dim(),
            derivations(&nn1, Parity::Even).dim(),
            derivations(&nn1, Parity::Odd).dim(),
        );
    }

    // One even derivation of NF^4, written as a matrix: column j holds the
    // image of x_{j+1}.
    let n = 4usize;
    let a = nf_algebra(n).unwrap();
    let adj = adjoint_module(&a);
    let space = CochainSpace::new(&a, &adj, 1, Parity::Even);
    let basis = derivations(&a, Parity::Even);
    println!("\na derivation of NF^4 (first kernel basis vector), as a matrix:");
    let d = space.cochain_from_vector(&basis.vectors()[0]).unwrap();
    for out in 0..n {
        let row: Vec<String> = (0..n)
            .map(|input| d.value(&[input])[out].to_string())
            .collect();
        println!("  [ {} ]", row.join("  "));
    }

    // Inner derivations are derivations: y -> [y, x] lies in the kernel.
    let s = nf_superalgebra(2, 2).unwrap();
    let sadj = adjoint_module(&s);
    let mut y1 = vec![rat(0); 4];
    y1[2] = rat(1);
    let r = inner_derivation(&s, &y1).unwrap();
    let odd_space = CochainSpace::new(&s, &sadj, 1, Parity::Odd);
    let v = odd_space.coefficient_vector(&r).unwrap();
    let inside = derivations(&s, Parity::Odd).in_span(&v).unwrap();
    println!("\nright multiplication by y1 on NF^(2,2):");
    for i in 0..s.dim() {
        let image = r.value(&[i]);
        if image.iter().any(|c| !c.is_zero()) {
            let terms: Vec<String> = image
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{} {}", c, s.basis_name(k)))
                .collect();
            println!("  {} -> {}", s.basis_name(i), terms.join(" + "));
        }
    }
    println!("lies in the odd derivation span: {inside}");
}

//! The degree-2 even cohomology dimensions of the three catalog series,
//! printed against their closed forms:
//!
//!   NF^n:        (n² − 1,       n² − n,    n − 1)
//!   NF^{n,n}:    (2n² − 1,      2n² − n,   n − 1)
//!   NF^{n,n+1}:  (2n² + 2n − 1, 2n² + n,   n − 1)
//!
//! Run with: `cargo run --release --example cohomology_tables`

use leibniz::bimodule::adjoint_module;
use leibniz::catalog::{nf_algebra, nf_superalgebra};
use leibniz::cohomology::cohomology;
use leibniz::superalgebra::Parity;

fn row(label: &str, computed: (usize, usize, usize), expected: (usize, usize, usize)) {
    let mark = if computed == expected {
        "ok"
    } else {
        "MISMATCH"
    };
    println!(
        "  {label:>10}  ZL = {:>3}  BL = {:>3}  HL = {:>2}   expected ({:>3}, {:>3}, {:>2})  {mark}",
        computed.0, computed.1, computed.2, expected.0, expected.1, expected.2
    );
}

fn main() {
    println!("Leibniz catalog NF^n:");
    for n in 2..=7usize {
        let a = nf_algebra(n).unwrap();
        let h = cohomology(&a, &adjoint_module(&a), 2, Parity::Even);
        row(
            &format!("n = {n}"),
            (h.cocycles.dim(), h.coboundaries.dim(), h.hl_dim),
            (n * n - 1, n * n - n, n - 1),
        );
    }

    println!("super catalog NF^{{n,n}}:");
    for n in 2..=5usize {
        let a = nf_superalgebra(n, n).unwrap();
        let h = cohomology(&a, &adjoint_module(&a), 2, Parity::Even);
        row(
            &format!("n = {n}"),
            (h.cocycles.dim(), h.coboundaries.dim(), h.hl_dim),
            (2 * n * n - 1, 2 * n * n - n, n - 1),
        );
    }

    println!("super catalog NF^{{n,n+1}}:");
    for n in 2..=5usize {
        let a = nf_superalgebra(n, n + 1).unwrap();
        let h = cohomology(&a, &adjoint_module(&a), 2, Parity::Even);
        row(
            &format!("n = {n}"),
            (h.cocycles.dim(), h.coboundaries.dim(), h.hl_dim),
            (2 * n * n + 2 * n - 1, 2 * n * n + n, n - 1),
        );
    }

    // Odd-parity degree-2 spaces exist as well for the super catalog.
    println!("odd-parity degree-2 spaces of NF^{{n,n}}:");
    for n in 2..=4usize {
        let a = nf_superalgebra(n, n).unwrap();
        let h = cohomology(&a, &adjoint_module(&a), 2, Parity::Odd);
        println!(
            "  n = {n}: ZL = {}, BL = {}, HL = {}",
            h.cocycles.dim(),
            h.coboundaries.dim(),
            h.hl_dim
        );
    }
}

//! Tour of the null-filiform catalog: construct the algebras, print their
//! multiplication tables, and verify the structural invariants that
//! characterise them (the graded Leibniz identity, the central series, and
//! single-generatedness).
//!
//! Run with: `cargo run --example catalog_tour`

use leibniz::catalog::{nf_algebra, nf_superalgebra};
use leibniz::superalgebra::SuperAlgebra;
use num_traits::Zero;

fn print_table(a: &SuperAlgebra) {
    for ((i, j), value) in a.table() {
        let terms: Vec<String> = value
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                if c.is_integer() && *c == leibniz::rational::rat(1) {
                    a.basis_name(k)
                } else {
                    format!("{} {}", c, a.basis_name(k))
                }
            })
            .collect();
        println!(
            "  [{}, {}] = {}",
            a.basis_name(*i),
            a.basis_name(*j),
            terms.join(" + ")
        );
    }
}

fn describe(label: &str, a: &SuperAlgebra) {
    println!(
        "{label} (even dim {}, odd dim {}):",
        a.even_dim(),
        a.odd_dim()
    );
    print_table(a);
    let identity_ok = a.check_leibniz_superidentity().is_empty();
    let series = a.lower_central_series();
    println!(
        "  Leibniz superidentity: {}",
        if identity_ok { "holds" } else { "FAILS" }
    );
    println!(
        "  central series dims: {:?}, nilindex: {:?}",
        series.dims, series.nilindex
    );
    println!(
        "  null-filiform: {}, generators needed: {}",
        a.is_null_filiform(),
        a.minimal_generator_count()
            .map(|g| g.to_string())
            .unwrap_or_else(|_| "n/a (not nilpotent)".into())
    );
    println!();
}

fn main() {
    describe("NF^4", &nf_algebra(4).unwrap());
    describe("NF^{2,2}", &nf_superalgebra(2, 2).unwrap());
    describe("NF^{2,3}", &nf_superalgebra(2, 3).unwrap());

    // The generator certificates of NF^n single out x1: its right powers
    // run through the whole basis.
    let a = nf_algebra(5).unwrap();
    println!("generator certificates of NF^5 (element, determinant):");
    for (i, det) in a.generator_certificate().unwrap() {
        println!("  {} -> {}", a.basis_name(i), det);
    }
}

//! Canonical form of single-generated Leibniz algebras: hide a mu member
//! behind a change of basis, then recover its tail parameters from the
//! right powers of a generator.
//!
//! Run with: `cargo run --example canonical_form`

use leibniz::deformations::{canonical_single_generated, family, FamilyKind, FamilyParams};
use leibniz::linalg::Matrix;
use leibniz::rational::rat;
use num_traits::Zero;

fn main() {
    // mu_1(0, 1, 0) on NF^4, shuffled by an invertible integer matrix.
    let fp = FamilyParams::new(FamilyKind::Mu, 4, vec![rat(0), rat(1), rat(0)]).unwrap();
    let hidden = family(&fp, &rat(1)).unwrap();
    let t = Matrix::from_rows(vec![
        vec![rat(1), rat(2), rat(0), rat(-1)],
        vec![rat(0), rat(1), rat(3), rat(0)],
        vec![rat(2), rat(0), rat(1), rat(1)],
        vec![rat(0), rat(0), rat(-2), rat(1)],
    ])
    .unwrap();
    let shuffled = hidden.change_of_basis(&t).unwrap();
    println!("shuffled table has {} products", shuffled.table().len());

    let form = canonical_single_generated(&shuffled).unwrap();
    let params: Vec<String> = form.params.iter().map(|c| c.to_string()).collect();
    let generator: Vec<String> = form
        .generator
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("{} {}", c, shuffled.basis_name(i)))
        .collect();
    println!("recovered parameters: ({})", params.join(", "));
    println!("generator: {}", generator.join(" + "));
    println!("normalized: {}", form.normalized);
    println!(
        "canonical table equals the hidden member: {}",
        form.algebra == hidden
    );

    // When the leading parameter needs an irrational root, the scaling is
    // refused and the raw parameters are reported.
    let fp = FamilyParams::new(FamilyKind::Mu, 4, vec![rat(4), rat(0), rat(0)]).unwrap();
    let form = canonical_single_generated(&family(&fp, &rat(1)).unwrap()).unwrap();
    println!(
        "\nmu_1(4, 0, 0): normalized = {}, note: {}",
        form.normalized,
        form.scale_note.unwrap_or_default()
    );

    // A rational root goes through: mu_1(8) on NF^2 rescales to mu_1(1).
    let fp = FamilyParams::new(FamilyKind::Mu, 2, vec![rat(8)]).unwrap();
    let form = canonical_single_generated(&family(&fp, &rat(1)).unwrap()).unwrap();
    println!(
        "mu_1(8): normalized = {}, parameters now ({})",
        form.normalized,
        form.params
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
}

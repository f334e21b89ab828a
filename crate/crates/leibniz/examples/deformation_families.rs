//! The three one-parameter deformation families of the catalog: mu (the
//! Leibniz case), nu (m = n) and eta (m = n + 1). Each member is built
//! twice — literally from its multiplication table and by deforming the
//! catalog base along the corresponding cocycle — and the two agree.
//!
//! Run with: `cargo run --example deformation_families`

use leibniz::catalog::{nf_algebra, nf_superalgebra};
use leibniz::deformations::{
    derivation_dim_of_family, family, family_direction, Deformation, FamilyKind, FamilyParams,
};
use leibniz::rational::{frac, rat};
use num_traits::Zero;

fn main() {
    // mu_1(1, 1/2) on NF^3: tail [x3, x1] = x2 + (1/2) x3.
    let fp = FamilyParams::new(FamilyKind::Mu, 3, vec![rat(1), frac(1, 2)]).unwrap();
    let member = family(&fp, &rat(1)).unwrap();
    println!("mu_1(1, 1/2):");
    for ((i, j), value) in member.table() {
        let terms: Vec<String> = value
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{} {}", c, member.basis_name(k)))
            .collect();
        println!(
            "  [{}, {}] = {}",
            member.basis_name(*i),
            member.basis_name(*j),
            terms.join(" + ")
        );
    }
    println!(
        "  satisfies the superidentity: {}",
        member.check_leibniz_superidentity().is_empty()
    );

    // The same member through the cocycle route.
    let direction = family_direction(&fp);
    let deformed = Deformation::new(nf_algebra(3).unwrap(), direction, rat(1))
        .unwrap()
        .deform();
    println!("  matches the cocycle deformation: {}", deformed == member);

    // Derivations drop from n to n − 1 on every nonzero member.
    println!("\nderivation dimensions along mu (base vs member):");
    for n in 2..=5usize {
        let base = nf_algebra(n).unwrap();
        let base_dim =
            leibniz::cohomology::derivations(&base, leibniz::superalgebra::Parity::Even).dim();
        let mut params = vec![rat(0); n - 1];
        params[n - 2] = rat(1);
        let fp = FamilyParams::new(FamilyKind::Mu, n, params).unwrap();
        println!(
            "  n = {n}: {} -> {}",
            base_dim,
            derivation_dim_of_family(&fp).unwrap()
        );
    }

    // The super families at n = 2.
    for (kind, base) in [
        (FamilyKind::Nu, nf_superalgebra(2, 2).unwrap()),
        (FamilyKind::Eta, nf_superalgebra(2, 3).unwrap()),
    ] {
        let fp = FamilyParams::new(kind, 2, vec![rat(1)]).unwrap();
        let member = family(&fp, &rat(1)).unwrap();
        let added = member.table().len() - base.table().len();
        println!(
            "\n{kind}_1(1): {} products ({} beyond the base), identity holds: {}",
            member.table().len(),
            added,
            member.check_leibniz_superidentity().is_empty()
        );
    }
}

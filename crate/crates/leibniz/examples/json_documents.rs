//! The JSON interchange format: algebra documents, optional module blocks,
//! and cochain files, as consumed and produced by the `leibniz` binary.
//!
//! Run with: `cargo run --example json_documents`

use leibniz::catalog::nf_superalgebra;
use leibniz::document::{AlgebraDocument, CochainDocument};
use leibniz::standard_cocycles::nn_psi;

fn main() {
    // Emit a catalog algebra as a document.
    let a = nf_superalgebra(2, 2).unwrap();
    let doc = AlgebraDocument::from_algebra(&a);
    let json = doc.to_json();
    println!("NF^(2,2) as a document:\n{json}\n");

    // Parse it back: the round trip is exact.
    let parsed = AlgebraDocument::from_json(&json).unwrap();
    assert_eq!(parsed.to_algebra().unwrap(), a);
    println!("round trip: exact");

    // A cochain file for the integrability check of the binary:
    //   leibniz verify --checks integrable:psi.json --input algebra.json
    let psi = nn_psi(2, 1, 2);
    let cochain_doc = CochainDocument::from_cochain(&a, &psi);
    println!(
        "\npsi_{{1,2}} as a cochain file:\n{}",
        cochain_doc.to_json()
    );

    // Documents with grading violations or malformed rationals are
    // rejected at parse time.
    let bad = r#"{"even_dim": 1, "odd_dim": 1,
        "table": [{"left": "y1", "right": "y1", "value": {"y1": "1"}}]}"#;
    let err = AlgebraDocument::from_json(bad)
        .unwrap()
        .to_algebra()
        .unwrap_err();
    println!("\ngrading-violating document: {err}");
}

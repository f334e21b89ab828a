//! JSON interchange documents for algebras, cochains and command results.
//!
//! The algebra format names basis elements `x1..xn` (even) and `y1..ym`
//! (odd); rationals are strings `"p"` or `"p/q"` with `q > 0`; omitted
//! products are zero. An optional `module` block supplies non-adjoint
//! coefficients with the same row shape. Cochain files reuse the table-row
//! shape under a `degree`/`parity` header.
//!
//! Parsing is strict: unknown basis names, malformed rationals, duplicate
//! rows and grading violations are all rejected, so a document that loads
//! is already a well-formed graded table.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bimodule::{ActionTable, Bimodule};
use crate::cochain::Cochain;
use crate::error::ParseError;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::superalgebra::{Parity, StructureTable, SuperAlgebra};

/// One product or action row: `value` maps basis names to rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductRow {
    pub left: String,
    pub right: String,
    pub value: BTreeMap<String, String>,
}

/// Optional coefficient module block of an [`AlgebraDocument`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleBlock {
    pub even_dim: usize,
    pub odd_dim: usize,
    #[serde(default)]
    pub left_action: Vec<ProductRow>,
    #[serde(default)]
    pub right_action: Vec<ProductRow>,
}

/// A structure-constant table in interchange form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub even_dim: usize,
    pub odd_dim: usize,
    #[serde(default)]
    pub table: Vec<ProductRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleBlock>,
}

/// A 2-cochain in interchange form: table rows under a degree/parity
/// header, with values over the algebra basis (adjoint coefficients).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainDocument {
    pub degree: usize,
    pub parity: String,
    pub even_dim: usize,
    pub odd_dim: usize,
    #[serde(default)]
    pub table: Vec<ProductRow>,
}

/// Machine-readable command output.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResultDocument {
    pub command: String,
    pub input_digest: String,
    pub status: String,
    pub payload: serde_json::Value,
}

/// `x1..xn` then `y1..ym` for the given dimensions.
fn name_of(even_dim: usize, index: usize) -> String {
    crate::superalgebra::basis_name(even_dim, index)
}

fn index_of(even_dim: usize, odd_dim: usize, name: &str) -> Result<usize, ParseError> {
    let err = || ParseError::BadBasisName(name.to_string());
    if name.len() < 2 {
        return Err(err());
    }
    let (prefix, rest) = name.split_at(1);
    if rest.starts_with('0') || rest.starts_with('+') {
        return Err(err());
    }
    let k: usize = rest.parse().map_err(|_| err())?;
    match prefix {
        "x" if (1..=even_dim).contains(&k) => Ok(k - 1),
        "y" if (1..=odd_dim).contains(&k) => Ok(even_dim + k - 1),
        _ => Err(err()),
    }
}

fn parse_value_map(
    even_dim: usize,
    odd_dim: usize,
    value: &BTreeMap<String, String>,
) -> Result<Vec<Rational>, ParseError> {
    let mut v = vec![Rational::from_integer(0.into()); even_dim + odd_dim];
    for (name, s) in value {
        let idx = index_of(even_dim, odd_dim, name)?;
        v[idx] = parse_rational(s)?;
    }
    Ok(v)
}

fn value_map(even_dim: usize, v: &[Rational]) -> BTreeMap<String, String> {
    use num_traits::Zero;
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (name_of(even_dim, i), format_rational(c)))
        .collect()
}

impl AlgebraDocument {
    pub fn from_algebra(a: &SuperAlgebra) -> Self {
        let table = a
            .table()
            .iter()
            .map(|(&(i, j), value)| ProductRow {
                left: name_of(a.even_dim(), i),
                right: name_of(a.even_dim(), j),
                value: value_map(a.even_dim(), value),
            })
            .collect();
        AlgebraDocument {
            even_dim: a.even_dim(),
            odd_dim: a.odd_dim(),
            table,
            module: None,
        }
    }

    pub fn to_algebra(&self) -> Result<SuperAlgebra, ParseError> {
        let mut table = StructureTable::new();
        for row in &self.table {
            let i = index_of(self.even_dim, self.odd_dim, &row.left)?;
            let j = index_of(self.even_dim, self.odd_dim, &row.right)?;
            if table
                .insert(
                    (i, j),
                    parse_value_map(self.even_dim, self.odd_dim, &row.value)?,
                )
                .is_some()
            {
                return Err(ParseError::Invalid(format!(
                    "duplicate table row for ({}, {})",
                    row.left, row.right
                )));
            }
        }
        Ok(SuperAlgebra::new(self.even_dim, self.odd_dim, table)?)
    }

    /// Builds the optional coefficient module, validated against `a`.
    pub fn to_bimodule(&self, a: &SuperAlgebra) -> Result<Option<Bimodule>, ParseError> {
        let Some(block) = &self.module else {
            return Ok(None);
        };
        let mut left = ActionTable::new();
        for row in &block.left_action {
            let i = index_of(a.even_dim(), a.odd_dim(), &row.left)?;
            let j = index_of(block.even_dim, block.odd_dim, &row.right)?;
            if left
                .insert(
                    (i, j),
                    parse_value_map(block.even_dim, block.odd_dim, &row.value)?,
                )
                .is_some()
            {
                return Err(ParseError::Invalid(format!(
                    "duplicate left action row for ({}, {})",
                    row.left, row.right
                )));
            }
        }
        let mut right = ActionTable::new();
        for row in &block.right_action {
            let j = index_of(block.even_dim, block.odd_dim, &row.left)?;
            let i = index_of(a.even_dim(), a.odd_dim(), &row.right)?;
            if right
                .insert(
                    (j, i),
                    parse_value_map(block.even_dim, block.odd_dim, &row.value)?,
                )
                .is_some()
            {
                return Err(ParseError::Invalid(format!(
                    "duplicate right action row for ({}, {})",
                    row.left, row.right
                )));
            }
        }
        Ok(Some(Bimodule::new(
            a,
            block.even_dim,
            block.odd_dim,
            left,
            right,
        )?))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialise")
    }

    pub fn from_json(s: &str) -> Result<Self, ParseError> {
        Ok(serde_json::from_str(s)?)
    }
}

impl CochainDocument {
    /// Interprets the document as an even or odd 2-cochain over `a` with
    /// adjoint coefficients.
    pub fn to_cochain(&self, a: &SuperAlgebra) -> Result<Cochain, ParseError> {
        if self.degree != 2 {
            return Err(ParseError::Invalid(format!(
                "only degree-2 cochain files are supported, got degree {}",
                self.degree
            )));
        }
        if self.even_dim != a.even_dim() || self.odd_dim != a.odd_dim() {
            return Err(ParseError::Invalid(
                "cochain dimensions do not match the algebra".into(),
            ));
        }
        let parity = match self.parity.as_str() {
            "even" => Parity::Even,
            "odd" => Parity::Odd,
            other => {
                return Err(ParseError::Invalid(format!(
                    "parity must be \"even\" or \"odd\", got {other:?}"
                )))
            }
        };
        let adj = crate::bimodule::adjoint_module(a);
        let mut c = Cochain::zero(a, &adj, 2, parity);
        for row in &self.table {
            let i = index_of(self.even_dim, self.odd_dim, &row.left)?;
            let j = index_of(self.even_dim, self.odd_dim, &row.right)?;
            let value = parse_value_map(self.even_dim, self.odd_dim, &row.value)?;
            for (o, coeff) in value.into_iter().enumerate() {
                use num_traits::Zero;
                if !coeff.is_zero() {
                    c.set(&[i, j], o, coeff)?;
                }
            }
        }
        Ok(c)
    }

    pub fn from_cochain(a: &SuperAlgebra, c: &Cochain) -> Self {
        use num_traits::Zero;
        let mut table = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let value = c.value(&[i, j]);
                if value.iter().any(|v| !v.is_zero()) {
                    table.push(ProductRow {
                        left: name_of(a.even_dim(), i),
                        right: name_of(a.even_dim(), j),
                        value: value_map(a.even_dim(), value),
                    });
                }
            }
        }
        CochainDocument {
            degree: c.degree(),
            parity: c.parity().to_string(),
            even_dim: a.even_dim(),
            odd_dim: a.odd_dim(),
            table,
        }
    }

    pub fn from_json(s: &str) -> Result<Self, ParseError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialise")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{nf_algebra, nf_superalgebra};
    use crate::standard_cocycles::nf_psi;

    #[test]
    fn catalog_documents_round_trip() {
        for a in [
            nf_algebra(1).unwrap(),
            nf_algebra(4).unwrap(),
            nf_superalgebra(2, 3).unwrap(),
            nf_superalgebra(3, 3).unwrap(),
        ] {
            let doc = AlgebraDocument::from_algebra(&a);
            let json = doc.to_json();
            let parsed = AlgebraDocument::from_json(&json).unwrap();
            assert_eq!(parsed, doc);
            assert_eq!(parsed.to_algebra().unwrap(), a);
        }
    }

    #[test]
    fn nf3_document_shape() {
        let doc = AlgebraDocument::from_algebra(&nf_algebra(3).unwrap());
        assert_eq!(doc.table.len(), 2);
        assert_eq!(doc.table[0].left, "x1");
        assert_eq!(doc.table[0].value.get("x2"), Some(&"1".to_string()));
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(AlgebraDocument::from_json("{").is_err());
        assert!(AlgebraDocument::from_json("{\"even_dim\": 1}").is_err());

        // Unknown basis name.
        let json = r#"{"even_dim": 2, "odd_dim": 0,
            "table": [{"left": "x3", "right": "x1", "value": {"x2": "1"}}]}"#;
        let doc = AlgebraDocument::from_json(json).unwrap();
        assert!(doc.to_algebra().is_err());

        // Malformed rational.
        let json = r#"{"even_dim": 2, "odd_dim": 0,
            "table": [{"left": "x1", "right": "x1", "value": {"x2": "1/0"}}]}"#;
        assert!(AlgebraDocument::from_json(json)
            .unwrap()
            .to_algebra()
            .is_err());

        // Duplicate rows.
        let json = r#"{"even_dim": 2, "odd_dim": 0, "table": [
            {"left": "x1", "right": "x1", "value": {"x2": "1"}},
            {"left": "x1", "right": "x1", "value": {"x2": "2"}}]}"#;
        assert!(AlgebraDocument::from_json(json)
            .unwrap()
            .to_algebra()
            .is_err());

        // Grading violation.
        let json = r#"{"even_dim": 1, "odd_dim": 1,
            "table": [{"left": "y1", "right": "y1", "value": {"y1": "1"}}]}"#;
        assert!(AlgebraDocument::from_json(json)
            .unwrap()
            .to_algebra()
            .is_err());
    }

    #[test]
    fn module_block_parses() {
        let json = r#"{
            "even_dim": 1, "odd_dim": 0,
            "table": [],
            "module": {
                "even_dim": 1, "odd_dim": 0,
                "left_action": [{"left": "x1", "right": "x1", "value": {"x1": "1/2"}}],
                "right_action": []
            }
        }"#;
        let doc = AlgebraDocument::from_json(json).unwrap();
        let a = doc.to_algebra().unwrap();
        let module = doc.to_bimodule(&a).unwrap().unwrap();
        assert_eq!(
            module.left_basis(0, 0).unwrap()[0],
            crate::rational::frac(1, 2)
        );
    }

    #[test]
    fn cochain_documents_round_trip() {
        let a = nf_algebra(3).unwrap();
        let c = nf_psi(3, 1);
        let doc = CochainDocument::from_cochain(&a, &c);
        let parsed = CochainDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(parsed.to_cochain(&a).unwrap(), c);
        // Wrong degree is rejected.
        let mut bad = doc.clone();
        bad.degree = 3;
        assert!(bad.to_cochain(&a).is_err());
    }
}

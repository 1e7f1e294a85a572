//! JSON export of a structure-constant table, with exact rationals carried
//! as `p/q` strings so the round trip is lossless.

use crate::catalog::FamilySpec;
use crate::linalg::SparseVec;
use crate::rational;
use crate::superalgebra::StructureTable;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExportParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExportBasisElem {
    pub label: String,
    pub parity: u8,
    /// Base coefficients of the weight; `null` on the Cartan part.
    pub weight: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExportConstant {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExportTable {
    pub family: String,
    pub params: ExportParams,
    pub dim: usize,
    pub basis: Vec<ExportBasisElem>,
    pub constants: Vec<ExportConstant>,
}

impl ExportTable {
    pub fn from_table(spec: &FamilySpec, table: &StructureTable) -> ExportTable {
        let params = match spec {
            FamilySpec::A { m, n } | FamilySpec::B { m, n } | FamilySpec::D { m, n } => {
                ExportParams {
                    m: Some(*m),
                    n: Some(*n),
                    a: None,
                }
            }
            FamilySpec::C { n } => ExportParams {
                m: None,
                n: Some(*n),
                a: None,
            },
            FamilySpec::D21a { a } => ExportParams {
                m: None,
                n: None,
                a: Some(rational::format(a)),
            },
            FamilySpec::F4 | FamilySpec::G3 => ExportParams {
                m: None,
                n: None,
                a: None,
            },
        };
        ExportTable {
            family: spec.family().name().to_string(),
            params,
            dim: table.dim,
            basis: (0..table.dim)
                .map(|k| ExportBasisElem {
                    label: table.labels[k].clone(),
                    parity: table.parities[k],
                    weight: table.weights[k].clone(),
                })
                .collect(),
            constants: table
                .constants()
                .into_iter()
                .map(|(i, j, k, c)| ExportConstant {
                    i,
                    j,
                    k,
                    c: rational::format(&c),
                })
                .collect(),
        }
    }

    /// Rebuilds a bracket table from the serialized constants, so the
    /// super-antisymmetry and Jacobi checks can rerun on reloaded data.
    pub fn to_structure_table(&self) -> Result<StructureTable> {
        if self.basis.len() != self.dim {
            return Err(Error::BadExport(format!(
                "basis length {} ≠ dim {}",
                self.basis.len(),
                self.dim
            )));
        }
        let mut brackets = vec![vec![Vec::new(); self.dim]; self.dim];
        for c in &self.constants {
            if c.i >= self.dim || c.j >= self.dim || c.k >= self.dim {
                return Err(Error::BadExport(format!(
                    "constant index ({},{},{}) out of range",
                    c.i, c.j, c.k
                )));
            }
            let value = rational::parse(&c.c)
                .ok_or_else(|| Error::BadExport(format!("bad rational {:?}", c.c)))?;
            brackets[c.i][c.j].push((c.k, value));
        }
        Ok(StructureTable {
            dim: self.dim,
            labels: self.basis.iter().map(|b| b.label.clone()).collect(),
            parities: self.basis.iter().map(|b| b.parity).collect(),
            weights: self.basis.iter().map(|b| b.weight.clone()).collect(),
            brackets: brackets
                .into_iter()
                .map(|row| row.into_iter().map(SparseVec::from_entries).collect())
                .collect(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<ExportTable> {
        serde_json::from_str(text).map_err(|e| Error::BadExport(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::rat;
    use crate::superalgebra;

    #[test]
    fn json_round_trip_preserves_everything_and_reverifies() {
        let spec = FamilySpec::D21a { a: rat(1, 3) };
        let sys = catalog::build(&spec).unwrap();
        let basis = superalgebra::generate(&sys).unwrap();
        let table = superalgebra::structure_constants(&sys, &basis).unwrap();
        let export = ExportTable::from_table(&spec, &table);
        assert_eq!(export.dim, sys.len() + sys.base_len());
        assert_eq!(export.params.a.as_deref(), Some("1/3"));

        let text = export.to_json();
        let reloaded = ExportTable::from_json(&text).unwrap();
        assert_eq!(reloaded, export);

        let rebuilt = reloaded.to_structure_table().unwrap();
        assert!(rebuilt.check_super_antisymmetry().is_empty());
        assert!(rebuilt.check_super_jacobi().is_empty());
        assert_eq!(rebuilt.constants(), table.constants());
    }

    #[test]
    fn cartan_weights_are_null_and_labels_are_stable() {
        let spec = FamilySpec::B { m: 1, n: 1 };
        let sys = catalog::build(&spec).unwrap();
        let basis = superalgebra::generate(&sys).unwrap();
        let table = superalgebra::structure_constants(&sys, &basis).unwrap();
        let export = ExportTable::from_table(&spec, &table);
        assert_eq!(export.basis[0].label, "h1");
        assert!(export.basis[0].weight.is_none());
        assert!(export.basis[2].label.starts_with("e("));
        assert!(export
            .basis
            .iter()
            .skip(sys.base_len())
            .all(|b| b.weight.is_some()));
    }

    #[test]
    fn malformed_exports_are_rejected() {
        assert!(ExportTable::from_json("{").is_err());
        let bad = ExportTable {
            family: "B".into(),
            params: ExportParams {
                m: Some(1),
                n: Some(1),
                a: None,
            },
            dim: 1,
            basis: vec![ExportBasisElem {
                label: "h1".into(),
                parity: 0,
                weight: None,
            }],
            constants: vec![ExportConstant {
                i: 0,
                j: 0,
                k: 5,
                c: "1".into(),
            }],
        };
        assert!(bad.to_structure_table().is_err());
        let bad_rat = ExportTable {
            constants: vec![ExportConstant {
                i: 0,
                j: 0,
                k: 0,
                c: "x/y".into(),
            }],
            ..bad
        };
        assert!(bad_rat.to_structure_table().is_err());
    }
}

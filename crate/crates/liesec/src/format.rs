//! The JSON algebra file format.
//!
//! An algebra file stores a structure-constant presentation exactly:
//! every scalar is a canonical string (never a JSON number), omitted
//! basis pairs mean a zero bracket, and [`save_string`] is deterministic,
//! so `load(save(L)) = L` and saved files round-trip byte-for-byte.
//! Loading is strict: non-canonical scalar spellings, duplicate bracket
//! records, and out-of-range indices are rejected rather than repaired.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Wire form of the scalar field: the string `"Q"` or an object `{"GF": p}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldRepr {
    Label(String),
    Gf {
        #[serde(rename = "GF")]
        gf: u64,
    },
}

impl From<FieldSpec> for FieldRepr {
    fn from(f: FieldSpec) -> FieldRepr {
        match f {
            FieldSpec::Rationals => FieldRepr::Label("Q".to_string()),
            FieldSpec::PrimeField(p) => FieldRepr::Gf { gf: p },
        }
    }
}

impl FieldRepr {
    fn to_spec(&self) -> Result<FieldSpec> {
        match self {
            FieldRepr::Label(s) if s == "Q" => Ok(FieldSpec::Rationals),
            FieldRepr::Label(s) => Err(Error::InvalidInput {
                detail: format!("unknown field label {s:?}; expected \"Q\" or {{\"GF\": p}}"),
            }),
            FieldRepr::Gf { gf } => Ok(FieldSpec::PrimeField(*gf)),
        }
    }
}

/// One nonzero bracket `[e_i, e_j]`, `i < j`, as a sparse coefficient map
/// from basis index to canonical scalar string.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

/// The on-disk schema for one Lie algebra.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldRepr,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketRecord>,
}

/// Converts an algebra to its file form. Zero coefficients and zero
/// brackets are omitted; records are emitted in (i, j) order, so the
/// output is canonical.
pub fn to_file(l: &LieAlgebra) -> AlgebraFile {
    let brackets = l
        .structure_constants()
        .iter()
        .map(|((i, j), v)| BracketRecord {
            i: *i,
            j: *j,
            coeffs: v
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.is_zero())
                .map(|(k, s)| (k, l.field.format_scalar(s)))
                .collect(),
        })
        .collect();
    AlgebraFile {
        field: FieldRepr::from(l.field),
        dim: l.dim,
        basis: l.basis_labels.clone(),
        brackets,
    }
}

/// Rebuilds the algebra from its file form, enforcing every schema
/// invariant. Jacobi is deliberately *not* checked here — validation is
/// a separate, reportable step.
pub fn from_file(f: &AlgebraFile) -> Result<LieAlgebra> {
    let field = f.field.to_spec()?;
    if f.basis.len() != f.dim {
        return Err(Error::InvalidInput {
            detail: format!("{} basis labels for dimension {}", f.basis.len(), f.dim),
        });
    }
    let mut sc: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
    for rec in &f.brackets {
        if rec.i >= rec.j || rec.j >= f.dim {
            return Err(Error::InvalidInput {
                detail: format!(
                    "bracket record ({}, {}) violates i < j < dim = {}",
                    rec.i, rec.j, f.dim
                ),
            });
        }
        let mut v = vec![field.zero(); f.dim];
        for (k, s) in &rec.coeffs {
            if *k >= f.dim {
                return Err(Error::InvalidInput {
                    detail: format!("coefficient index {k} out of range for dimension {}", f.dim),
                });
            }
            v[*k] = field.parse_scalar(s)?;
        }
        if sc.insert((rec.i, rec.j), v).is_some() {
            return Err(Error::InvalidInput {
                detail: format!("duplicate bracket record for ({}, {})", rec.i, rec.j),
            });
        }
    }
    LieAlgebra::new(field, f.dim, Some(f.basis.clone()), sc)
}

/// Serializes an algebra to its canonical JSON text (pretty-printed,
/// trailing newline). Deterministic: equal algebras give equal bytes.
pub fn save_string(l: &LieAlgebra) -> String {
    let mut s = serde_json::to_string_pretty(&to_file(l)).expect("schema always serializes");
    s.push('\n');
    s
}

/// Parses JSON text into an algebra, strictly.
pub fn load_str(text: &str) -> Result<LieAlgebra> {
    let f: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::InvalidInput {
        detail: format!("malformed algebra file: {e}"),
    })?;
    from_file(&f)
}

/// Hex SHA-256 of raw input bytes, for report provenance.
pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::corpus::{generate_corpus, CorpusSpec};

    const F2: FieldSpec = FieldSpec::PrimeField(2);
    const F3: FieldSpec = FieldSpec::PrimeField(3);

    /// Round-trips one algebra through text and asserts exact equality
    /// (provenance is not part of the schema, so it is aligned first).
    fn assert_round_trip(l: &LieAlgebra) {
        let text = save_string(l);
        let mut back = load_str(&text).unwrap();
        back.provenance = l.provenance.clone();
        assert_eq!(&back, l, "algebra round-trip failed:\n{text}");
        assert_eq!(save_string(&back), text, "byte round-trip failed");
    }

    #[test]
    fn every_catalog_entry_round_trips() {
        let cases = [
            (FieldSpec::Rationals, "abelian(3)"),
            (FieldSpec::Rationals, "r2"),
            (FieldSpec::Rationals, "heisenberg"),
            (FieldSpec::Rationals, "upper_triangular(3)"),
            (FieldSpec::Rationals, "sl2"),
            (FieldSpec::Rationals, "gejn(1)"),
            (FieldSpec::Rationals, "gejn(2)"),
            (FieldSpec::Rationals, "direct_sum(sl2,r2)"),
            (F2, "sl2"),
            (F2, "heisenberg"),
            (F3, "sl2"),
            (F3, "upper_triangular(2)"),
        ];
        for (field, name) in cases {
            assert_round_trip(&catalog(field, name).unwrap().algebra);
        }
    }

    #[test]
    fn corpus_algebras_round_trip() {
        for field in [F2, F3] {
            let corpus = generate_corpus(&CorpusSpec {
                field,
                ambient_matrix_size: 3,
                generator_count: 2,
                seed: 11,
                max_dim: 4,
                target_count: 8,
            })
            .unwrap();
            for l in &corpus.algebras {
                assert_round_trip(l);
            }
        }
    }

    #[test]
    fn rational_scalars_serialize_as_exact_strings() {
        // A bracket with coefficient 1/2 must appear as the string "1/2".
        let mut sc = BTreeMap::new();
        sc.insert(
            (0, 1),
            vec![
                FieldSpec::Rationals.parse_scalar("1/2").unwrap(),
                FieldSpec::Rationals.zero(),
            ],
        );
        let l = LieAlgebra::new(FieldSpec::Rationals, 2, None, sc).unwrap();
        let text = save_string(&l);
        assert!(text.contains("\"1/2\""), "{text}");
        assert!(!text.contains("0.5"));
        assert_round_trip(&l);
    }

    #[test]
    fn empty_bracket_list_loads_as_abelian() {
        let text = r#"{"field": {"GF": 2}, "dim": 3, "basis": ["e0", "e1", "e2"], "brackets": []}"#;
        let l = load_str(text).unwrap();
        assert!(l.is_abelian());
        assert_eq!(l.dim, 3);
    }

    #[test]
    fn strictness_rejects_malformed_files() {
        let with_brackets = |b: &str| {
            format!(r#"{{"field": "Q", "dim": 2, "basis": ["x", "y"], "brackets": [{b}]}}"#)
        };
        // Non-canonical scalar spellings.
        for bad in ["2/4", "1/-2", "1/1", "+1", "007", "-0", "0.5"] {
            let text = with_brackets(&format!(r#"{{"i": 0, "j": 1, "coeffs": {{"0": "{bad}"}}}}"#));
            assert!(load_str(&text).is_err(), "accepted scalar {bad:?}");
        }
        // Residue out of range.
        let gf = r#"{"field": {"GF": 3}, "dim": 2, "basis": ["x", "y"],
                     "brackets": [{"i": 0, "j": 1, "coeffs": {"0": "3"}}]}"#;
        assert!(load_str(gf).is_err());
        // Structural violations.
        for bad in [
            r#"{"i": 1, "j": 0, "coeffs": {}}"#,                         // i >= j
            r#"{"i": 0, "j": 2, "coeffs": {}}"#,                         // j out of range
            r#"{"i": 0, "j": 1, "coeffs": {"5": "1"}}"#,                 // index out of range
            r#"{"i": 0, "j": 1, "coeffs": {}}, {"i": 0, "j": 1, "coeffs": {}}"#, // duplicate
            r#"{"i": 0, "j": 1, "coeffs": {}, "extra": 1}"#,             // unknown field
        ] {
            assert!(load_str(&with_brackets(bad)).is_err(), "accepted {bad}");
        }
        // Non-prime modulus and unknown field label.
        assert!(load_str(r#"{"field": {"GF": 4}, "dim": 1, "basis": ["x"], "brackets": []}"#)
            .is_err());
        assert!(load_str(r#"{"field": "R", "dim": 1, "basis": ["x"], "brackets": []}"#).is_err());
        // Label count mismatch.
        assert!(load_str(r#"{"field": "Q", "dim": 2, "basis": ["x"], "brackets": []}"#).is_err());
    }

    #[test]
    fn digest_matches_the_known_sha256_test_vector() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}

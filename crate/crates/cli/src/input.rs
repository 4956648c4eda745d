use std::path::Path;

use equivar::fixtures;
use equivar::simplicial::{regularize, InvolutiveComplex, SimplicialComplex};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// Default bound on the number of simplices after face closure.
pub const DEFAULT_SIMPLEX_CAP: usize = 200_000;

/// On-disk description of a complex with an optional vertex involution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub vertices: usize,
    pub maximal_simplices: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<usize>>,
}

impl ComplexFile {
    pub fn from_involutive(ic: &InvolutiveComplex) -> Self {
        let k = ic.complex();
        ComplexFile {
            vertices: k.vertex_count(),
            maximal_simplices: k.maximal_simplices(),
            involution: (!ic.is_identity()).then(|| ic.involution().to_vec()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

pub struct Loaded {
    pub ic: InvolutiveComplex,
    pub digest: String,
    pub subdivisions: usize,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn simplex_cap() -> Result<usize, CliError> {
    match std::env::var("EQUIVAR_SIMPLEX_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::parse("input.bad_simplex_cap", format!("EQUIVAR_SIMPLEX_CAP={v:?} is not a count"))
        }),
        Err(_) => Ok(DEFAULT_SIMPLEX_CAP),
    }
}

pub fn parse_complex(text: &str, cap: usize) -> Result<InvolutiveComplex, CliError> {
    let file: ComplexFile = serde_json::from_str(text).map_err(|e| {
        CliError::parse(
            "input.parse_error",
            format!("line {}, column {}: {e}", e.line(), e.column()),
        )
    })?;
    let k = SimplicialComplex::from_maximal_capped(file.vertices, &file.maximal_simplices, cap)?;
    match file.involution {
        Some(g) => Ok(InvolutiveComplex::new(k, g)?),
        None => Ok(InvolutiveComplex::identity(k)),
    }
}

/// Loads a complex from a file or a named fixture, regularizing unless asked not to.
pub fn load(
    path: Option<&Path>,
    fixture: Option<&str>,
    no_subdivide: bool,
) -> Result<Loaded, CliError> {
    let cap = simplex_cap()?;
    let (ic, digest) = match (path, fixture) {
        (Some(path), _) => {
            let bytes = std::fs::read(path).map_err(|e| {
                CliError::parse("input.unreadable", format!("{}: {e}", path.display()))
            })?;
            let text = String::from_utf8(bytes.clone())
                .map_err(|_| CliError::parse("input.parse_error", "file is not UTF-8"))?;
            (parse_complex(&text, cap)?, sha256_hex(&bytes))
        }
        (None, Some(name)) => {
            let ic = fixtures::named(name).ok_or_else(|| {
                CliError::parse(
                    "input.unknown_fixture",
                    format!("unknown fixture {name:?}; known: {}", fixtures::NAMES.join(", ")),
                )
            })?;
            let digest = sha256_hex(ComplexFile::from_involutive(&ic).to_json().as_bytes());
            (ic, digest)
        }
        (None, None) => {
            return Err(CliError::parse("input.missing", "give a complex file or --fixture"))
        }
    };
    let (ic, subdivisions) = if no_subdivide { (ic, 0) } else { regularize(&ic) };
    if ic.complex().total_simplices() > cap {
        return Err(CliError::parse(
            "complex.simplex_cap_exceeded",
            format!(
                "{} simplices after subdivision exceed the cap of {cap}",
                ic.complex().total_simplices()
            ),
        ));
    }
    Ok(Loaded {
        ic,
        digest,
        subdivisions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_fixtures() {
        for name in fixtures::NAMES {
            let ic = fixtures::named(name).unwrap();
            let file = ComplexFile::from_involutive(&ic);
            let back = parse_complex(&file.to_json(), usize::MAX).unwrap();
            assert_eq!(back.complex().f_vector(), ic.complex().f_vector(), "{name}");
            assert_eq!(back.involution(), ic.involution(), "{name}");
        }
    }

    #[test]
    fn missing_involution_is_identity() {
        let ic = parse_complex(r#"{"vertices":3,"maximal_simplices":[[0,1,2]]}"#, 100).unwrap();
        assert!(ic.is_identity());
    }

    #[test]
    fn bad_permutations_and_syntax() {
        let e = parse_complex(
            r#"{"vertices":3,"maximal_simplices":[[0,1,2]],"involution":[1,2,0]}"#,
            100,
        )
        .unwrap_err();
        assert_eq!((e.code.as_str(), e.exit), ("complex.invalid_involution", 3));
        let e = parse_complex("{\"vertices\":3,\n\"maximal_simplex\":[]}", 100).unwrap_err();
        assert_eq!(e.code, "input.parse_error");
        assert!(e.message.contains("line 2"));
    }

    #[test]
    fn cap_guards_face_closure() {
        let big: Vec<usize> = (0..20).collect();
        let text = serde_json::json!({"vertices": 20, "maximal_simplices": [big]}).to_string();
        let e = parse_complex(&text, 1000).unwrap_err();
        assert_eq!(e.code, "complex.simplex_cap_exceeded");
    }
}

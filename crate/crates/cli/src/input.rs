//! TOML input documents.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use sha2::{Digest, Sha256};

/// Raw bytes of an input file together with their SHA-256 digest.
pub struct Loaded {
    pub text: String,
    pub digest: String,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn load(path: &Path) -> Result<Loaded, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let digest = digest(&bytes);
    let text = String::from_utf8(bytes).map_err(|_| format!("{} is not UTF-8", path.display()))?;
    Ok(Loaded { text, digest })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub polynomial: String,
    #[serde(default = "default_variables")]
    pub variables: Vec<String>,
}

fn default_variables() -> Vec<String> {
    ["x", "y", "z"].map(String::from).to_vec()
}

/// `boundary.k` is the row-major matrix of the boundary out of degree `k`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub ranks: Vec<usize>,
    #[serde(default)]
    pub boundary: BTreeMap<String, Vec<Vec<i64>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileFile {
    pub degree: u64,
    pub base_genus: u64,
    #[serde(default)]
    pub fibers: Vec<Vec<u64>>,
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, String> {
    toml::from_str(text).map_err(|e| e.message().to_string())
}

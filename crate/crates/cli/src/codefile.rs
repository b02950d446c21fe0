//! Versioned JSON interchange format for linear codes.
//!
//! Entries are the canonical base-p integer encodings from the field
//! layer, so files are bit-exact across machines and independent of any
//! in-memory representation. The field is named either by `q` or by the
//! pair `p`, `m`; an explicit `modulus` (coefficient list, constant term
//! first) pins the representation for extension fields.

use crate::error::CliError;
use hullkit::code::LinearCode;
use hullkit::gf::FieldSpec;
use hullkit::matfq::MatrixFq;
use serde::{Deserialize, Serialize};
use std::path::Path;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub format: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
    pub generator: Vec<Vec<u64>>,
}

/// Factors q as p^m with p prime; None when q is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = q;
    let mut f = 2u64;
    while f.checked_mul(f).is_some_and(|s| s <= q) {
        if q % f == 0 {
            p = f;
            break;
        }
        f += 1;
    }
    let mut m = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

impl CodeFile {
    pub fn from_code(code: &LinearCode, name: Option<String>) -> CodeFile {
        let f = code.field();
        let g = code.generator();
        let generator = (0..code.k())
            .map(|i| g.row(i).iter().map(|e| e.value()).collect())
            .collect();
        CodeFile {
            format: FORMAT_VERSION,
            name,
            q: Some(f.q()),
            p: (f.m() > 1).then_some(f.p()),
            m: (f.m() > 1).then_some(f.m()),
            modulus: f.modulus().map(|c| c.to_vec()),
            generator,
        }
    }

    pub fn read(path: &Path) -> Result<CodeFile, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
        let file: CodeFile = serde_json::from_str(&text)
            .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
        if file.format != FORMAT_VERSION {
            return Err(CliError::Malformed(format!(
                "unsupported format {} (expected {FORMAT_VERSION})",
                file.format
            )));
        }
        Ok(file)
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(self).expect("serializable");
        text.push('\n');
        std::fs::write(path, text)
            .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
        Ok(())
    }

    fn field(&self) -> Result<FieldSpec, CliError> {
        let (p, m) = match (self.q, self.p, self.m) {
            (Some(q), None, None) => prime_power(q)
                .ok_or_else(|| CliError::Malformed(format!("q = {q} is not a prime power")))?,
            (None, Some(p), Some(m)) => (p, m),
            (Some(q), Some(p), Some(m)) => {
                let derived = p.checked_pow(m);
                if derived != Some(q) {
                    return Err(CliError::Malformed(format!(
                        "q = {q} does not equal p^m = {p}^{m}"
                    )));
                }
                (p, m)
            }
            _ => {
                return Err(CliError::Malformed(
                    "specify the field as q or as the pair p, m".into(),
                ))
            }
        };
        Ok(FieldSpec::new(p, m, self.modulus.as_deref())?)
    }

    /// Validates the file and builds the code; the bool reports whether
    /// dependent generator rows were dropped.
    pub fn to_code(&self) -> Result<(LinearCode, bool), CliError> {
        let f = self.field()?;
        if self.generator.is_empty() {
            return Err(CliError::Malformed("generator has no rows".into()));
        }
        let width = self.generator[0].len();
        if self.generator.iter().any(|r| r.len() != width) {
            return Err(CliError::Malformed(
                "generator rows have unequal lengths".into(),
            ));
        }
        let g = MatrixFq::from_values(&f, &self.generator)?;
        Ok(LinearCode::from_generator(&g)?)
    }
}

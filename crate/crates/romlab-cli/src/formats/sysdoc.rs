//! JSON system documents bundling A, b, c, d, and the time domain.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use romlab_core::adversarial::GreenbaumPrescription;
use romlab_core::system::{Domain, LtiSystem};
use romlab_core::ComplexMatrix;

use crate::error::{CliError, CliResult};
use crate::formats::matrix_market;

/// A matrix in a document: inline entries or a Matrix Market file reference
/// (resolved relative to the document location).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixSpec {
    Inline(InlineMatrix),
    File(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InlineMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Row-major `[re, im]` pairs.
    pub entries: Vec<Complex64>,
}

impl MatrixSpec {
    pub fn inline(m: &ComplexMatrix) -> Self {
        MatrixSpec::Inline(InlineMatrix {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().to_vec(),
        })
    }

    pub fn resolve(&self, base_dir: &Path, field: &str) -> CliResult<ComplexMatrix> {
        match self {
            MatrixSpec::Inline(m) => {
                ComplexMatrix::new(m.rows, m.cols, m.entries.clone()).map_err(|e| {
                    CliError::Input(format!("field {field:?}: invalid inline matrix: {e}"))
                })
            }
            MatrixSpec::File(rel) => {
                let path = base_dir.join(rel);
                matrix_market::read_file(&path).map_err(|e| match e {
                    CliError::Input(msg) => CliError::Input(format!("field {field:?}: {msg}")),
                    other => other,
                })
            }
        }
    }
}

/// On-disk system description. `a` and `domain` are mandatory; vectors and
/// feedthrough are optional and demanded per command. `greenbaum` optionally
/// bundles a prescribed recurrence with the document (the greenbaum-demo
/// example ships one).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemDocument {
    pub a: MatrixSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<MatrixSpec>,
    pub domain: Domain,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<std::collections::BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub greenbaum: Option<GreenbaumPrescription>,
}

/// A document with its matrices loaded.
#[derive(Debug, Clone)]
pub struct ResolvedSystem {
    pub a: ComplexMatrix,
    pub b: Option<ComplexMatrix>,
    pub c: Option<ComplexMatrix>,
    pub d: Option<ComplexMatrix>,
    pub domain: Domain,
    pub greenbaum: Option<GreenbaumPrescription>,
}

impl SystemDocument {
    pub fn resolve(&self, base_dir: &Path) -> CliResult<ResolvedSystem> {
        let a = self.a.resolve(base_dir, "a")?;
        if !a.is_square() {
            return Err(CliError::Input(format!(
                "field \"a\": matrix must be square, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        let n = a.rows();
        let load_vec =
            |entry: &Option<MatrixSpec>, field: &str| -> CliResult<Option<ComplexMatrix>> {
                match entry {
                    None => Ok(None),
                    Some(s) => {
                        let m = s.resolve(base_dir, field)?;
                        let m = if m.cols() == 1 {
                            m
                        } else if m.rows() == 1 {
                            m.transpose()
                        } else {
                            return Err(CliError::Input(format!(
                                "field {field:?}: expected a vector, got {}x{}",
                                m.rows(),
                                m.cols()
                            )));
                        };
                        if m.rows() != n {
                            return Err(CliError::Input(format!(
                                "field {field:?}: length {} does not match order {n}",
                                m.rows()
                            )));
                        }
                        Ok(Some(m))
                    }
                }
            };
        let b = load_vec(&self.b, "b")?;
        let c = load_vec(&self.c, "c")?;
        let d = match &self.d {
            None => None,
            Some(s) => Some(s.resolve(base_dir, "d")?),
        };
        Ok(ResolvedSystem {
            a,
            b,
            c,
            d,
            domain: self.domain,
            greenbaum: self.greenbaum.clone(),
        })
    }
}

impl ResolvedSystem {
    pub fn b_vector(&self) -> CliResult<Vec<Complex64>> {
        self.b
            .as_ref()
            .map(|m| m.column(0))
            .ok_or_else(|| CliError::Input("system document has no \"b\" vector".into()))
    }

    pub fn c_vector(&self) -> CliResult<Vec<Complex64>> {
        self.c
            .as_ref()
            .map(|m| m.column(0))
            .ok_or_else(|| CliError::Input("system document has no \"c\" vector".into()))
    }

    /// Builds the LTI system, requiring `b`; a missing `c` defaults to `b`
    /// and a missing `d` to zero feedthrough.
    pub fn to_lti(&self) -> CliResult<LtiSystem> {
        let b = self.b_vector()?;
        let c = match &self.c {
            Some(m) => m.column(0),
            None => b.clone(),
        };
        let mut sys = LtiSystem::siso(self.a.clone(), &b, &c, self.domain)
            .map_err(|e| CliError::Input(format!("system document: {e}")))?;
        if let Some(d) = &self.d {
            if d.rows() != 1 || d.cols() != 1 {
                return Err(CliError::Input(format!(
                    "field \"d\": expected 1x1 feedthrough, got {}x{}",
                    d.rows(),
                    d.cols()
                )));
            }
            sys.d = d.clone();
        }
        Ok(sys)
    }
}

pub fn read_document(path: &Path) -> CliResult<(SystemDocument, ResolvedSystem)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("reading {}: {e}", path.display())))?;
    let doc: SystemDocument = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let resolved = doc.resolve(base)?;
    Ok((doc, resolved))
}

pub fn document_json(doc: &SystemDocument) -> String {
    serde_json::to_string_pretty(doc).expect("document serializes")
}

//! Matrix Market reader/writer for dense complex matrices.
//!
//! Writing uses the dense array format with the exact header
//! `%%MatrixMarket matrix array complex general` and 17-significant-digit
//! entries (column-major body, as the format requires). Reading accepts
//! array and coordinate formats with real, integer, or complex fields and
//! general symmetry.

use num_complex::Complex64;
use romlab_core::ComplexMatrix;

use crate::error::{CliError, CliResult};

pub const ARRAY_COMPLEX_HEADER: &str = "%%MatrixMarket matrix array complex general";

/// Serializes a dense complex matrix in array format.
pub fn write_string(m: &ComplexMatrix) -> String {
    let mut out = String::new();
    out.push_str(ARRAY_COMPLEX_HEADER);
    out.push('\n');
    out.push_str(&format!("{} {}\n", m.rows(), m.cols()));
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            let z = m[(i, j)];
            out.push_str(&format!("{:.16e} {:.16e}\n", z.re, z.im));
        }
    }
    out
}

fn parse_f64(tok: &str, line_no: usize) -> CliResult<f64> {
    tok.parse::<f64>()
        .map_err(|_| CliError::Input(format!("matrix market line {line_no}: bad number {tok:?}")))
}

/// Parses a Matrix Market document.
pub fn read_string(text: &str) -> CliResult<ComplexMatrix> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| CliError::Input("matrix market file is empty".into()))?;
    let header_lc = header.trim().to_lowercase();
    if !header_lc.starts_with("%%matrixmarket") {
        return Err(CliError::Input(
            "missing %%MatrixMarket header banner".into(),
        ));
    }
    let fields: Vec<&str> = header_lc.split_whitespace().collect();
    if fields.len() < 5 || fields[1] != "matrix" {
        return Err(CliError::Input(format!(
            "unsupported matrix market header: {header}"
        )));
    }
    let layout = fields[2];
    let field = fields[3];
    let symmetry = fields[4];
    if symmetry != "general" {
        return Err(CliError::Input(format!(
            "unsupported matrix market symmetry {symmetry:?} (only general)"
        )));
    }
    let value_len = match field {
        "complex" => 2,
        "real" | "integer" => 1,
        other => {
            return Err(CliError::Input(format!(
                "unsupported matrix market field {other:?}"
            )))
        }
    };

    // first non-comment line is the size line
    let mut size_line = None;
    for (no, line) in lines.by_ref() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('%') {
            continue;
        }
        size_line = Some((no, t.to_string()));
        break;
    }
    let (size_no, size_line) =
        size_line.ok_or_else(|| CliError::Input("matrix market file has no size line".into()))?;
    let dims: Vec<&str> = size_line.split_whitespace().collect();

    match layout {
        "array" => {
            if dims.len() != 2 {
                return Err(CliError::Input(format!(
                    "line {size_no}: array size line needs 2 integers"
                )));
            }
            let rows: usize = dims[0]
                .parse()
                .map_err(|_| CliError::Input(format!("line {size_no}: bad row count")))?;
            let cols: usize = dims[1]
                .parse()
                .map_err(|_| CliError::Input(format!("line {size_no}: bad column count")))?;
            let mut entries = Vec::with_capacity(rows * cols);
            for (no, line) in lines {
                let t = line.trim();
                if t.is_empty() || t.starts_with('%') {
                    continue;
                }
                let toks: Vec<&str> = t.split_whitespace().collect();
                if toks.len() != value_len {
                    return Err(CliError::Input(format!(
                        "line {no}: expected {value_len} values, got {}",
                        toks.len()
                    )));
                }
                let re = parse_f64(toks[0], no)?;
                let im = if value_len == 2 {
                    parse_f64(toks[1], no)?
                } else {
                    0.0
                };
                entries.push(Complex64::new(re, im));
            }
            if entries.len() != rows * cols {
                return Err(CliError::Input(format!(
                    "array body holds {} entries, expected {}",
                    entries.len(),
                    rows * cols
                )));
            }
            // array format stores column-major
            let mut m = ComplexMatrix::zeros(rows, cols);
            for j in 0..cols {
                for i in 0..rows {
                    m[(i, j)] = entries[j * rows + i];
                }
            }
            validate(m)
        }
        "coordinate" => {
            if dims.len() != 3 {
                return Err(CliError::Input(format!(
                    "line {size_no}: coordinate size line needs 3 integers"
                )));
            }
            let rows: usize = dims[0]
                .parse()
                .map_err(|_| CliError::Input(format!("line {size_no}: bad row count")))?;
            let cols: usize = dims[1]
                .parse()
                .map_err(|_| CliError::Input(format!("line {size_no}: bad column count")))?;
            let nnz: usize = dims[2]
                .parse()
                .map_err(|_| CliError::Input(format!("line {size_no}: bad entry count")))?;
            let mut m = ComplexMatrix::zeros(rows.max(1), cols.max(1));
            let mut seen = 0usize;
            for (no, line) in lines {
                let t = line.trim();
                if t.is_empty() || t.starts_with('%') {
                    continue;
                }
                let toks: Vec<&str> = t.split_whitespace().collect();
                if toks.len() != 2 + value_len {
                    return Err(CliError::Input(format!(
                        "line {no}: expected {} values, got {}",
                        2 + value_len,
                        toks.len()
                    )));
                }
                let i: usize = toks[0]
                    .parse()
                    .map_err(|_| CliError::Input(format!("line {no}: bad row index")))?;
                let j: usize = toks[1]
                    .parse()
                    .map_err(|_| CliError::Input(format!("line {no}: bad column index")))?;
                if i == 0 || j == 0 || i > rows || j > cols {
                    return Err(CliError::Input(format!(
                        "line {no}: index ({i},{j}) outside {rows}x{cols}"
                    )));
                }
                let re = parse_f64(toks[2], no)?;
                let im = if value_len == 2 {
                    parse_f64(toks[3], no)?
                } else {
                    0.0
                };
                m[(i - 1, j - 1)] = Complex64::new(re, im);
                seen += 1;
            }
            if seen != nnz {
                return Err(CliError::Input(format!(
                    "coordinate body holds {seen} entries, header said {nnz}"
                )));
            }
            validate(m)
        }
        other => Err(CliError::Input(format!(
            "unsupported matrix market layout {other:?}"
        ))),
    }
}

fn validate(m: ComplexMatrix) -> CliResult<ComplexMatrix> {
    if !m.all_finite() {
        return Err(CliError::Input("matrix contains non-finite entries".into()));
    }
    Ok(m)
}

pub fn read_file(path: &std::path::Path) -> CliResult<ComplexMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("reading {}: {e}", path.display())))?;
    read_string(&text).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

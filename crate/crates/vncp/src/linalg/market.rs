//! Matrix Market exchange format, coordinate real, general or symmetric.
//!
//! This is the only file format the artifact reads or writes for matrices.
//! Indices are 1-based on disk; symmetric storage is expanded to full CSR
//! on read.

use super::sparse::SparseMatrix;
use crate::{Result, VncpError};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

fn parse_err(line: usize, message: impl Into<String>) -> VncpError {
    VncpError::Parse {
        line,
        message: message.into(),
    }
}

/// Read a coordinate-format Matrix Market file into CSR.
pub fn read_matrix_market(path: impl AsRef<Path>) -> Result<SparseMatrix> {
    let file = std::fs::File::open(path.as_ref())?;
    read_from(BufReader::new(file))
}

pub(crate) fn read_from(reader: impl BufRead) -> Result<SparseMatrix> {
    let mut lines = reader.lines().enumerate();

    let (lineno, header) = match lines.next() {
        Some((i, l)) => (i + 1, l?),
        None => return Err(parse_err(1, "empty file")),
    };
    let tokens: Vec<String> = header.split_whitespace().map(str::to_lowercase).collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" {
        return Err(parse_err(lineno, "expected '%%MatrixMarket matrix coordinate real <symmetry>' header"));
    }
    if tokens[1] != "matrix" || tokens[2] != "coordinate" {
        return Err(parse_err(lineno, format!("unsupported object/format '{} {}'", tokens[1], tokens[2])));
    }
    if tokens[3] != "real" && tokens[3] != "integer" {
        return Err(parse_err(lineno, format!("unsupported field '{}'; only real matrices are handled", tokens[3])));
    }
    let symmetric = match tokens[4].as_str() {
        "general" => false,
        "symmetric" => true,
        other => return Err(parse_err(lineno, format!("unsupported symmetry '{other}'"))),
    };

    // size line, after comments
    let (mut lineno, mut size_line) = (0, String::new());
    for (i, l) in lines.by_ref() {
        let l = l?;
        if l.trim_start().starts_with('%') || l.trim().is_empty() {
            continue;
        }
        lineno = i + 1;
        size_line = l;
        break;
    }
    if size_line.is_empty() {
        return Err(parse_err(lineno.max(1), "missing size line"));
    }
    let dims: Vec<&str> = size_line.split_whitespace().collect();
    if dims.len() != 3 {
        return Err(parse_err(lineno, "size line must be 'rows cols nnz'"));
    }
    let rows: usize = dims[0]
        .parse()
        .map_err(|_| parse_err(lineno, "invalid row count"))?;
    let cols: usize = dims[1]
        .parse()
        .map_err(|_| parse_err(lineno, "invalid column count"))?;
    let nnz: usize = dims[2]
        .parse()
        .map_err(|_| parse_err(lineno, "invalid entry count"))?;
    if rows != cols {
        return Err(parse_err(lineno, format!("non-square shape {rows}x{cols}")));
    }
    if rows == 0 {
        return Err(parse_err(lineno, "dimension must be >= 1"));
    }

    let mut triplets = Vec::with_capacity(if symmetric { 2 * nnz } else { nnz });
    let mut seen = 0usize;
    for (i, l) in lines {
        let l = l?;
        let lineno = i + 1;
        let trimmed = l.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let parts: Vec<&str> = trimmed.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(parse_err(lineno, "entry must be 'row col value'"));
        }
        let r: usize = parts[0]
            .parse()
            .map_err(|_| parse_err(lineno, "invalid row index"))?;
        let c: usize = parts[1]
            .parse()
            .map_err(|_| parse_err(lineno, "invalid column index"))?;
        let v: f64 = parts[2]
            .parse()
            .map_err(|_| parse_err(lineno, "invalid real value"))?;
        if r == 0 || c == 0 || r > rows || c > cols {
            return Err(parse_err(lineno, format!("index ({r}, {c}) outside 1..={rows}")));
        }
        if !v.is_finite() {
            return Err(parse_err(lineno, "non-finite value"));
        }
        triplets.push((r - 1, c - 1, v));
        if symmetric && r != c {
            triplets.push((c - 1, r - 1, v));
        }
        seen += 1;
    }
    if seen != nnz {
        return Err(parse_err(
            lineno,
            format!("header declared {nnz} entries but file contains {seen}"),
        ));
    }
    SparseMatrix::from_triplets(rows, &triplets)
}

/// Write `m` in coordinate real general form. Values use the shortest
/// representation that round-trips exactly.
pub fn write_matrix_market(m: &SparseMatrix, path: impl AsRef<Path>) -> Result<()> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path.as_ref())?);
    writeln!(out, "%%MatrixMarket matrix coordinate real general")?;
    writeln!(out, "{} {} {}", m.n(), m.n(), m.nnz())?;
    for i in 0..m.n() {
        for (j, v) in m.row(i) {
            writeln!(out, "{} {} {}", i + 1, j + 1, fmt_f64(v))?;
        }
    }
    Ok(())
}

fn fmt_f64(v: f64) -> String {
    // keep a decimal point so the token reads as a real
    let s = format!("{v}");
    if s.contains('.') || s.contains('e') || s.contains("inf") || s.contains("NaN") {
        s
    } else {
        format!("{s}.0")
    }
}

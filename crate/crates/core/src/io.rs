//! Dense matrix files: Matrix Market, CSV and JSON.
//!
//! Every writer prints 17 significant digits (`{:.16e}`), which round-trips
//! any finite `f64` exactly. Matrix Market output uses the array format
//! (`%%MatrixMarket matrix array real general`, column-major values);
//! the reader also accepts `symmetric` / `skew-symmetric` arrays and
//! `coordinate` files.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::matcore::RealMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MatrixFormat {
    /// Matrix Market array format.
    Mm,
    Csv,
    Json,
}

impl MatrixFormat {
    pub fn extension(self) -> &'static str {
        match self {
            MatrixFormat::Mm => "mtx",
            MatrixFormat::Csv => "csv",
            MatrixFormat::Json => "json",
        }
    }

    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "mtx" | "mm" => Some(MatrixFormat::Mm),
            "csv" => Some(MatrixFormat::Csv),
            "json" => Some(MatrixFormat::Json),
            _ => None,
        }
    }
}

/// Decimal text with 17 significant digits.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_matrix<W: Write + ?Sized>(
    out: &mut W,
    m: &RealMatrix,
    format: MatrixFormat,
) -> Result<()> {
    write_matrix_with_comments(out, m, format, &[])
}

/// As [`write_matrix`]; `comments` become `%` lines in Matrix Market output and are dropped otherwise.
pub fn write_matrix_with_comments<W: Write + ?Sized>(
    out: &mut W,
    m: &RealMatrix,
    format: MatrixFormat,
    comments: &[String],
) -> Result<()> {
    match format {
        MatrixFormat::Mm => {
            writeln!(out, "%%MatrixMarket matrix array real general")?;
            for c in comments {
                writeln!(out, "% {c}")?;
            }
            writeln!(out, "{} {}", m.rows(), m.cols())?;
            for j in 0..m.cols() {
                for i in 0..m.rows() {
                    writeln!(out, "{}", format_f64(m[(i, j)]))?;
                }
            }
        }
        MatrixFormat::Csv => {
            for i in 0..m.rows() {
                let line: Vec<String> = m.row(i).iter().map(|&x| format_f64(x)).collect();
                writeln!(out, "{}", line.join(","))?;
            }
        }
        MatrixFormat::Json => writeln!(out, "{}", matrix_to_json(m))?,
    }
    Ok(())
}

/// Nested-array JSON text `[[…], …]` using 17-digit numbers.
pub fn matrix_to_json(m: &RealMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let vals: Vec<String> = m.row(i).iter().map(|&x| format_f64(x)).collect();
            format!("[{}]", vals.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

pub fn read_matrix(text: &str, format: MatrixFormat) -> Result<RealMatrix> {
    match format {
        MatrixFormat::Mm => read_matrix_market(text),
        MatrixFormat::Csv => read_csv(text),
        MatrixFormat::Json => read_json(text),
    }
}

/// Reads a matrix file, choosing the format from the extension (Matrix Market when unknown).
pub fn read_matrix_file(path: &Path) -> Result<RealMatrix> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let format = MatrixFormat::from_path(path).unwrap_or(MatrixFormat::Mm);
    read_matrix(&text, format).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn write_matrix_file(path: &Path, m: &RealMatrix, format: MatrixFormat) -> Result<()> {
    let mut buf = Vec::new();
    write_matrix(&mut buf, m, format)?;
    fs::write(path, buf).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn parse_num(tok: &str) -> Result<f64> {
    tok.trim()
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("bad number {tok:?}")))
}

fn parse_count(tok: Option<&str>, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::Parse(format!("missing {what}")))?
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad {what}")))
}

#[derive(PartialEq)]
enum Symmetry {
    General,
    Symmetric,
    Skew,
}

fn read_matrix_market(text: &str) -> Result<RealMatrix> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty Matrix Market file".into()))?;
    let tokens: Vec<String> = header
        .split_whitespace()
        .map(str::to_ascii_lowercase)
        .collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" || tokens[1] != "matrix" {
        return Err(Error::Parse(format!("bad Matrix Market header {header:?}")));
    }
    let coordinate = match tokens[2].as_str() {
        "array" => false,
        "coordinate" => true,
        other => return Err(Error::Parse(format!("unsupported layout {other:?}"))),
    };
    if !matches!(tokens[3].as_str(), "real" | "integer" | "double") {
        return Err(Error::Parse(format!("unsupported field {:?}", tokens[3])));
    }
    let symmetry = match tokens[4].as_str() {
        "general" => Symmetry::General,
        "symmetric" => Symmetry::Symmetric,
        "skew-symmetric" => Symmetry::Skew,
        other => return Err(Error::Parse(format!("unsupported symmetry {other:?}"))),
    };

    let mut body = lines
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('%'));
    let size_line = body
        .next()
        .ok_or_else(|| Error::Parse("missing size line".into()))?;
    let mut size = size_line.split_whitespace();
    let rows = parse_count(size.next(), "row count")?;
    let cols = parse_count(size.next(), "column count")?;
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidDimension(format!(
            "matrix shape {rows}x{cols} is empty"
        )));
    }
    if symmetry != Symmetry::General && rows != cols {
        return Err(Error::Parse(
            "symmetric storage needs a square matrix".into(),
        ));
    }
    let mut m = vec![0.0; rows * cols];

    if coordinate {
        let nnz = parse_count(size.next(), "entry count")?;
        let mut seen = 0;
        for line in body {
            let mut t = line.split_whitespace();
            let i = parse_count(t.next(), "row index")?;
            let j = parse_count(t.next(), "column index")?;
            let v = parse_num(
                t.next()
                    .ok_or_else(|| Error::Parse("missing value".into()))?,
            )?;
            if i == 0 || j == 0 || i > rows || j > cols {
                return Err(Error::Parse(format!("index ({i}, {j}) out of range")));
            }
            let (i, j) = (i - 1, j - 1);
            m[i * cols + j] = v;
            match symmetry {
                Symmetry::General => {}
                Symmetry::Symmetric => m[j * cols + i] = v,
                Symmetry::Skew => m[j * cols + i] = -v,
            }
            seen += 1;
        }
        if seen != nnz {
            return Err(Error::Parse(format!(
                "expected {nnz} entries, found {seen}"
            )));
        }
    } else {
        let values = body
            .flat_map(str::split_whitespace)
            .map(parse_num)
            .collect::<Result<Vec<f64>>>()?;
        let positions: Vec<(usize, usize)> = (0..cols)
            .flat_map(|j| (0..rows).map(move |i| (i, j)))
            .filter(|&(i, j)| match symmetry {
                Symmetry::General => true,
                Symmetry::Symmetric => i >= j,
                Symmetry::Skew => i > j,
            })
            .collect();
        if values.len() != positions.len() {
            return Err(Error::Parse(format!(
                "expected {} values, found {}",
                positions.len(),
                values.len()
            )));
        }
        for (&(i, j), &v) in positions.iter().zip(&values) {
            m[i * cols + j] = v;
            match symmetry {
                Symmetry::General => {}
                Symmetry::Symmetric => m[j * cols + i] = v,
                Symmetry::Skew => m[j * cols + i] = -v,
            }
        }
    }
    RealMatrix::from_row_major(rows, cols, m)
}

fn read_csv(text: &str) -> Result<RealMatrix> {
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.split(',').map(parse_num).collect::<Result<Vec<f64>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Err(Error::Parse("empty CSV".into()));
    }
    RealMatrix::from_rows(&rows)
}

fn read_json(text: &str) -> Result<RealMatrix> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
    let rows_value = match &value {
        serde_json::Value::Object(obj) => obj
            .get("matrix")
            .or_else(|| obj.get("data"))
            .ok_or_else(|| Error::Parse("JSON object without a \"matrix\" field".into()))?,
        other => other,
    };
    let rows: Vec<Vec<f64>> = serde_json::from_value(rows_value.clone()).map_err(|e| {
        Error::Parse(format!(
            "JSON matrix must be an array of number arrays: {e}"
        ))
    })?;
    if rows.is_empty() {
        return Err(Error::Parse("empty JSON matrix".into()));
    }
    RealMatrix::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{gaussian_matrix, RngStream};
    use proptest::prelude::*;

    #[test]
    fn matrix_market_layout_is_column_major() {
        let m = RealMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let mut buf = Vec::new();
        write_matrix(&mut buf, &m, MatrixFormat::Mm).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "%%MatrixMarket matrix array real general");
        assert_eq!(lines[1], "2 2");
        assert_eq!(lines[2], "1.0000000000000000e0");
        assert_eq!(lines[3], "3.0000000000000000e0");
    }

    #[test]
    fn reads_symmetric_storage() {
        let sym = "%%MatrixMarket matrix array real symmetric\n% c\n2 2\n1\n2\n3\n";
        assert_eq!(
            read_matrix(sym, MatrixFormat::Mm).unwrap().to_rows(),
            vec![vec![1.0, 2.0], vec![2.0, 3.0]]
        );
        let skew = "%%MatrixMarket matrix array real skew-symmetric\n3 3\n1\n2\n3\n";
        assert_eq!(
            read_matrix(skew, MatrixFormat::Mm).unwrap().to_rows(),
            vec![
                vec![0.0, -1.0, -2.0],
                vec![1.0, 0.0, -3.0],
                vec![2.0, 3.0, 0.0]
            ]
        );
        let coo = "%%MatrixMarket matrix coordinate real skew-symmetric\n2 2 1\n2 1 1.5\n";
        assert_eq!(
            read_matrix(coo, MatrixFormat::Mm).unwrap().to_rows(),
            vec![vec![0.0, -1.5], vec![1.5, 0.0]]
        );
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "",
            "%%MatrixMarket matrix array complex general\n1 1\n1 0\n",
            "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n",
            "%%MatrixMarket matrix array real general\n1 1\nx\n",
            "not a header\n",
        ] {
            assert!(read_matrix(bad, MatrixFormat::Mm).is_err(), "{bad:?}");
        }
        assert!(read_matrix("1,2\n3\n", MatrixFormat::Csv).is_err());
        assert!(read_matrix("{\"x\": 1}", MatrixFormat::Json).is_err());
        assert!(read_matrix("1,nan\n3,4\n", MatrixFormat::Csv).is_err());
    }

    #[test]
    fn json_object_form() {
        let m = read_matrix("{\"matrix\": [[1, 0], [0, -1]]}", MatrixFormat::Json).unwrap();
        assert_eq!(m, RealMatrix::from_diag(&[1.0, -1.0]));
    }

    fn any_matrix() -> impl Strategy<Value = RealMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(
                prop_oneof![
                    proptest::num::f64::NORMAL
                        | proptest::num::f64::SUBNORMAL
                        | proptest::num::f64::ZERO,
                    Just(-0.0),
                ],
                r * c,
            )
            .prop_map(move |d| RealMatrix::from_row_major(r, c, d).unwrap())
        })
    }

    proptest! {
        #[test]
        fn every_format_round_trips_bit_exactly(m in any_matrix()) {
            for format in [MatrixFormat::Mm, MatrixFormat::Csv, MatrixFormat::Json] {
                let mut buf = Vec::new();
                write_matrix(&mut buf, &m, format).unwrap();
                let back = read_matrix(std::str::from_utf8(&buf).unwrap(), format).unwrap();
                let same = m.as_slice().iter().zip(back.as_slice()).all(|(a, b)| a.to_bits() == b.to_bits());
                prop_assert!(same && back.shape() == m.shape(), "{:?}", format);
            }
        }
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let m = gaussian_matrix(3, &mut RngStream::new(1)).unwrap();
        for format in [MatrixFormat::Mm, MatrixFormat::Csv, MatrixFormat::Json] {
            let path = dir.path().join(format!("m.{}", format.extension()));
            write_matrix_file(&path, &m, format).unwrap();
            assert_eq!(read_matrix_file(&path).unwrap(), m);
        }
        assert!(matches!(
            read_matrix_file(&dir.path().join("missing.mtx")),
            Err(Error::Io(_))
        ));
    }
}

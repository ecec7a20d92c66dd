//! Plain-text matrix exchange format.
//!
//! ```text
//! # optional comments
//! p m rows cols
//! a11 a12 ...
//! ...
//! ```
//!
//! Over a prime field each entry is an integer (reduced mod p, so `-1` is
//! accepted). Over F_{p^m} with m > 1 an entry is its m coordinates in the
//! polynomial basis, lowest degree first, joined by commas: in F_4 the
//! generator x is written `0,1`.

use super::matrix::Matrix;
use super::scalar::FiniteField;
use crate::error::{Error, Result};

pub fn parse_matrix<F: FiniteField>(text: &str) -> Result<Matrix<F>> {
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let h: Vec<usize> =
        header.split_whitespace().map(|x| x.parse().map_err(|_| Error::Parse(format!("bad header field {x:?}")))).collect::<Result<_>>()?;
    let [p, m, rows, cols] = h[..] else {
        return Err(Error::Parse(format!("header must be `p m rows cols`, got {header:?}")));
    };
    if p as u32 != F::CHAR || m as u32 != F::DEGREE {
        return Err(Error::Parse(format!("matrix is over F_{{{p}^{m}}} but F_{{{}^{}}} was requested", F::CHAR, F::DEGREE)));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let line = lines.next().ok_or_else(|| Error::Parse(format!("missing row {}", r + 1)))?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != cols {
            return Err(Error::Parse(format!("row {} has {} entries, expected {cols}", r + 1, entries.len())));
        }
        for e in entries {
            data.push(parse_entry::<F>(e)?);
        }
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("trailing content {extra:?}")));
    }
    Ok(Matrix::from_vec(rows, cols, data))
}

fn parse_entry<F: FiniteField>(e: &str) -> Result<F> {
    if F::DEGREE == 1 {
        let n: i64 = e.parse().map_err(|_| Error::Parse(format!("bad entry {e:?}")))?;
        return Ok(F::from_i64(n));
    }
    let digits: Vec<u32> = e.split(',').map(|d| d.parse().map_err(|_| Error::Parse(format!("bad entry {e:?}")))).collect::<Result<_>>()?;
    F::from_digits(&digits).ok_or_else(|| Error::Parse(format!("entry {e:?} is not an element of the field")))
}

pub fn format_entry<F: FiniteField>(x: F) -> String {
    x.digits().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

pub fn format_matrix<F: FiniteField>(a: &Matrix<F>) -> String {
    let mut out = format!("{} {} {} {}\n", F::CHAR, F::DEGREE, a.rows(), a.cols());
    for i in 0..a.rows() {
        let row: Vec<String> = a.row(i).iter().map(|&x| format_entry(x)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

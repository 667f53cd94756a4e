//! Dense matrices of arbitrary-precision integers and their text format.
//!
//! The text format is a header line `rows cols` followed by `rows` lines of
//! whitespace-separated integers. Blank lines and lines starting with `#` are
//! ignored.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::MalformedMatrix(format!(
                "row {} has {} entries, expected {cols}",
                bad + 1,
                rows[bad].len()
            )));
        }
        let entries = rows.iter().flatten().cloned().map(Into::into).collect();
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntegerMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::MalformedMatrix(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(r, k) * rhs.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &IntegerMatrix) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::MalformedMatrix("dimension mismatch in subtraction".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn map<F: Fn(&BigInt) -> BigInt>(&self, f: F) -> Self {
        IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn abs(&self) -> Self {
        self.map(|x| x.abs())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

impl FromStr for IntegerMatrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::MalformedMatrix("missing `rows cols` header".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::MalformedMatrix(format!("bad header `{header}`: {e}")))?;
        let [rows, cols] = dims[..] else {
            return Err(Error::MalformedMatrix(format!(
                "header must be `rows cols`, got `{header}`"
            )));
        };

        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (line_no, line) = lines
                .next()
                .ok_or_else(|| Error::MalformedMatrix(format!("expected {rows} rows, found {r}")))?;
            let row: Vec<BigInt> = line
                .split_whitespace()
                .map(BigInt::from_str)
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::MalformedMatrix(format!("line {line_no}: {e}")))?;
            if row.len() != cols {
                return Err(Error::MalformedMatrix(format!(
                    "line {line_no}: expected {cols} entries, found {}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::MalformedMatrix(format!(
                "line {line_no}: trailing data after {rows} rows"
            )));
        }
        Ok(IntegerMatrix { rows, cols, entries })
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let text = "# G2\n3 3\n-1 0 1\n-1 -1 0\n\n1 1 1\n";
        let m: IntegerMatrix = text.parse().unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        assert_eq!(m.get(1, 1), &BigInt::from(-1));
        assert_eq!(m.to_string(), "3 3\n-1 0 1\n-1 -1 0\n1 1 1\n");
        assert_eq!(m.to_string().parse::<IntegerMatrix>().unwrap(), m);
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<IntegerMatrix>().is_err());
        assert!("2 2\n1 2\n".parse::<IntegerMatrix>().is_err());
        assert!("1 2\n1 2 3\n".parse::<IntegerMatrix>().is_err());
        assert!("1 1\nx\n".parse::<IntegerMatrix>().is_err());
        assert!("1 1\n1\n2\n".parse::<IntegerMatrix>().is_err());
    }

    #[test]
    fn zero_dimension_matrix() {
        let m: IntegerMatrix = "0 3\n".parse().unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 3));
    }

    #[test]
    fn product_and_transpose() {
        let h = IntegerMatrix::from_rows(&[vec![-1, 0, 1], vec![-1, -1, 0], vec![1, 1, 1]]).unwrap();
        let l = h.mul(&h.transpose()).unwrap();
        let expected = IntegerMatrix::from_rows(&[vec![2, 1, 0], vec![1, 2, -2], vec![0, -2, 3]]).unwrap();
        assert_eq!(l, expected);
        assert!(l.is_symmetric());
    }
}

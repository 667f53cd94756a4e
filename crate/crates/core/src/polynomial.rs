//! Exact polynomials over position variables `x[r,c]` and in one variable `x`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The variable `x[row,col]`. Indices point into a label universe: the vertices,
/// or for extended polynomials the vertices followed by the edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PositionVariable {
    pub row: usize,
    pub col: usize,
}

impl PositionVariable {
    pub fn new(row: usize, col: usize) -> Self {
        PositionVariable { row, col }
    }

    pub fn diagonal(v: usize) -> Self {
        PositionVariable { row: v, col: v }
    }

    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }

    pub fn label(&self, labels: &[String]) -> String {
        format!("x[{},{}]", labels[self.row], labels[self.col])
    }
}

/// A product of position variables, kept as sorted `(variable, exponent)` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(PositionVariable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn variable(v: PositionVariable) -> Self {
        Monomial {
            factors: vec![(v, 1)],
        }
    }

    /// `∏ x[rows[i], cols[i]]`.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        pairs
            .into_iter()
            .map(|(r, c)| PositionVariable::new(r, c))
            .collect()
    }

    pub fn factors(&self) -> &[(PositionVariable, u32)] {
        &self.factors
    }

    pub fn variables(&self) -> impl Iterator<Item = PositionVariable> + '_ {
        self.factors
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat_n(v, k as usize))
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|f| f.1).sum()
    }

    pub fn exponent(&self, v: PositionVariable) -> u32 {
        self.factors
            .binary_search_by_key(&v, |f| f.0)
            .map_or(0, |k| self.factors[k].1)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_diagonal(&self) -> bool {
        self.factors.iter().all(|f| f.0.is_diagonal())
    }

    /// Square-free with rows pairwise distinct and columns pairwise distinct.
    pub fn is_minor_shaped(&self) -> bool {
        self.factors.iter().all(|f| f.1 == 1)
            && self.factors.iter().map(|f| f.0.row).all_unique()
            && self.factors.iter().map(|f| f.0.col).all_unique()
    }

    pub fn map_variables(&self, f: impl Fn(PositionVariable) -> PositionVariable) -> Self {
        self.factors
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat_n(f(v), k as usize))
            .collect()
    }

    pub fn to_text(&self, labels: &[String]) -> String {
        self.factors
            .iter()
            .map(|&(v, k)| match k {
                1 => v.label(labels),
                _ => format!("{}^{k}", v.label(labels)),
            })
            .join("*")
    }
}

impl FromIterator<PositionVariable> for Monomial {
    fn from_iter<I: IntoIterator<Item = PositionVariable>>(iter: I) -> Self {
        let mut counts: BTreeMap<PositionVariable, u32> = BTreeMap::new();
        for v in iter {
            *counts.entry(v).or_default() += 1;
        }
        Monomial {
            factors: counts.into_iter().collect(),
        }
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        self.variables().chain(rhs.variables()).collect()
    }
}

/// Total degree first, then the sorted factor lists lexicographically.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MultivariatePolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c.into());
        p
    }

    pub fn variable(v: PositionVariable) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::variable(v), BigInt::one());
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in canonical order: total degree ascending, then lex.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        MultivariatePolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Part of the polynomial built from diagonal variables only.
    pub fn diagonal_part(&self) -> Self {
        self.filter(Monomial::is_diagonal)
    }

    pub fn map_variables(&self, f: impl Fn(PositionVariable) -> PositionVariable) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.map_variables(&f), c.clone());
        }
        out
    }

    /// Sets every diagonal variable to `x` and every off-diagonal one to zero.
    pub fn collapse_diagonal(&self) -> UnivariatePolynomial {
        let mut coeffs = Vec::new();
        for (m, c) in self.terms.iter().filter(|(m, _)| m.is_diagonal()) {
            let d = m.degree() as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigInt::zero());
            }
            coeffs[d] += c;
        }
        UnivariatePolynomial::new(coeffs)
    }

    /// One term per line, `coeff  x[r,c]*...`, constant last (printed as 0 when absent).
    pub fn to_text(&self, labels: &[String]) -> String {
        let mut out = String::new();
        for (m, c) in self.terms.iter().filter(|(m, _)| !m.is_one()) {
            out.push_str(&format!("{c}  {}\n", m.to_text(labels)));
        }
        out.push_str(&format!("{}\n", self.coefficient(&Monomial::one())));
        out
    }

    pub fn to_doc(&self, labels: &[String]) -> PolynomialDoc {
        PolynomialDoc {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermDoc {
                    coefficient: c.to_string(),
                    factors: m
                        .factors
                        .iter()
                        .map(|&(v, k)| FactorDoc {
                            row: labels[v.row].clone(),
                            col: labels[v.col].clone(),
                            exponent: k,
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    /// Inverse of [`Self::to_doc`].
    pub fn from_doc(doc: &PolynomialDoc, labels: &[String]) -> Result<Self> {
        let index = |l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::UnknownVertex(l.to_string()))
        };
        let mut out = Self::zero();
        for t in &doc.terms {
            let c: BigInt = t
                .coefficient
                .parse()
                .map_err(|_| Error::MalformedMatrix(format!("bad coefficient `{}`", t.coefficient)))?;
            let mut vars = Vec::new();
            for f in &t.factors {
                let v = PositionVariable::new(index(&f.row)?, index(&f.col)?);
                vars.extend(std::iter::repeat_n(v, f.exponent as usize));
            }
            out.add_term(vars.into_iter().collect(), c);
        }
        Ok(out)
    }
}

/// Structured mirror of the text format. Coefficients are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDoc {
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coefficient: String,
    pub factors: Vec<FactorDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub row: String,
    pub col: String,
    pub exponent: u32,
}

impl AddAssign<&MultivariatePolynomial> for MultivariatePolynomial {
    fn add_assign(&mut self, rhs: &MultivariatePolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;

    fn add(self, rhs: &MultivariatePolynomial) -> MultivariatePolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;

    fn neg(self) -> MultivariatePolynomial {
        MultivariatePolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;

    fn sub(self, rhs: &MultivariatePolynomial) -> MultivariatePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;

    fn mul(self, rhs: &MultivariatePolynomial) -> MultivariatePolynomial {
        let mut out = MultivariatePolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a * b, ca * cb);
            }
        }
        out
    }
}

/// Integer polynomial in one variable, coefficients stored lowest degree first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct UnivariatePolynomial {
    coeffs: Vec<BigInt>,
}

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        UnivariatePolynomial { coeffs }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UnivariatePolynomial { coeffs }
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn add(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePolynomial::new((0..n).map(|k| self.coefficient(k) + rhs.coefficient(k)).collect())
    }
}

impl Neg for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn neg(self) -> UnivariatePolynomial {
        UnivariatePolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn sub(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn mul(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UnivariatePolynomial::new(coeffs)
    }
}

/// Highest degree first, e.g. `x^4 - 10x^3 + 32x^2 - 32x`.
impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

//! Exact integer polynomial arithmetic: bivariate polynomials in the
//! monomial basis, univariate generating polynomials, the binomial-basis
//! form of the count polynomial, conversions to and from the Tutte
//! polynomial, and the generating-function identity check.

mod binomial;
mod convert;
mod series;

pub use binomial::{interpolate_binomial, interpolate_triangle, qpoly, qprime, BinomialForm};
pub use convert::{
    qprime_from_tutte, qprime_from_tutte_substitution, tutte_corank_nullity, tutte_from_qprime,
    tutte_from_qprime_substitution, RationalSubstitution,
};
pub use series::{series_identity_check, SeriesReport};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient with exact arithmetic.
pub(crate) fn big_binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// A bivariate polynomial in x and y with exact integer coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        BivarPoly::monomial(0, 0, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BivarPoly::monomial(0, 0, c.into())
    }

    pub fn monomial(i: u32, j: u32, c: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        let c = c.into();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BivarPoly { terms }
    }

    /// x + y - 1, the recurring divisor of the conversion formulas.
    pub fn xy_minus_one() -> Self {
        let mut p = BivarPoly::zero();
        p.add_term(1, 0, BigInt::one());
        p.add_term(0, 1, BigInt::one());
        p.add_term(0, 0, -BigInt::one());
        p
    }

    /// xy - x - y.
    pub fn hyperbola() -> Self {
        let mut p = BivarPoly::zero();
        p.add_term(1, 1, BigInt::one());
        p.add_term(1, 0, -BigInt::one());
        p.add_term(0, 1, -BigInt::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, BigInt)>) -> Self {
        let mut p = BivarPoly::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// The exact coefficient of x^i y^j, zero when absent.
    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BivarPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, i: u32, j: u32) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + i, b + j), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = BivarPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Swap the roles of x and y.
    pub fn swap_vars(&self) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// The part of total degree exactly d.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j == d)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    /// Leading term under graded lexicographic order (degree, then x).
    fn leading_term(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms
            .iter()
            .max_by_key(|(&(i, j), _)| (i + j, i))
            .map(|(&k, c)| (k, c))
    }

    /// Exact division by a monic-up-to-sign divisor; errors when any
    /// remainder would be left.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let ((di, dj), dc) = divisor
            .leading_term()
            .ok_or_else(|| Error::InexactDivision("division by zero polynomial".into()))?;
        if !dc.is_one() && !(-dc).is_one() {
            return Err(Error::Internal(
                "div_exact requires a unit leading coefficient".into(),
            ));
        }
        let mut rem = self.clone();
        let mut quot = BivarPoly::zero();
        while let Some(((ri, rj), rc)) = rem.leading_term() {
            if ri < di || rj < dj {
                return Err(Error::InexactDivision(format!(
                    "term x^{ri} y^{rj} is not divisible by the leading term x^{di} y^{dj}"
                )));
            }
            let qi = ri - di;
            let qj = rj - dj;
            let qc = if dc.is_one() { rc.clone() } else { -rc.clone() };
            quot.add_term(qi, qj, qc.clone());
            let step = divisor.mul(&BivarPoly::monomial(qi, qj, qc));
            rem = rem.sub(&step);
        }
        Ok(quot)
    }

    /// Exact division by x^i y^j.
    pub fn div_monomial(&self, i: u32, j: u32) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            if a < i || b < j {
                return Err(Error::InexactDivision(format!(
                    "term x^{a} y^{b} is not divisible by x^{i} y^{j}"
                )));
            }
            out.insert((a - i, b - j), c.clone());
        }
        Ok(BivarPoly { terms: out })
    }

    /// Terms sorted for printing: descending total degree, then descending
    /// x-degree.
    pub fn sorted_terms(&self) -> Vec<(u32, u32, BigInt)> {
        let mut v: Vec<(u32, u32, BigInt)> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| (i, j, c.clone()))
            .collect();
        v.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.0)));
        v
    }

    /// Human-readable form, e.g. `x^2 + 2xy + y^2 - x - y`.
    pub fn pretty(&self) -> String {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (i, j, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial_string(*i, *j);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&mono);
            }
        }
        out
    }

    /// JSON form: `{"vars":["x","y"],"terms":[{"i":..,"j":..,"c":..}]}`;
    /// coefficients that fit in 64 bits are numbers, larger ones strings.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(i, j, c)| {
                let c_json = match c.to_i64() {
                    Some(v) => serde_json::json!(v),
                    None => serde_json::json!(c.to_string()),
                };
                serde_json::json!({"i": i, "j": j, "c": c_json})
            })
            .collect();
        serde_json::json!({"vars": ["x", "y"], "terms": terms, "pretty": self.pretty()})
    }
}

fn monomial_string(i: u32, j: u32) -> String {
    let mut s = String::new();
    match i {
        0 => {}
        1 => s.push('x'),
        _ => s.push_str(&format!("x^{i}")),
    }
    match j {
        0 => {}
        1 => s.push('y'),
        _ => s.push_str(&format!("y^{j}")),
    }
    s
}

impl std::fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

/// A univariate polynomial with exact integer coefficients, dense storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn add_term(&mut self, exp: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= exp {
            self.coeffs.resize(exp + 1, BigInt::zero());
        }
        self.coeffs[exp] += c;
        self.normalize();
    }

    pub fn coefficient(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Print with the given variable name, descending powers.
    pub fn pretty(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (exp, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match exp {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{exp}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&mono);
            }
        }
        out
    }
}

//! Truncated bivariate power series over the integers and the
//! generating-function identity
//! `sum Q(t,u) v^t w^u = T((1-vw)/(1-v), (1-vw)/(1-w))
//!   / ((1-v)^(n-r) (1-w)^r (1-vw))`,
//! checked coefficientwise to a finite total order. The left side comes from
//! lattice-point counts, the right side from the corank-nullity Tutte
//! polynomial, so the two sides are computed through independent routes.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::core::Polymatroid;
use crate::error::Result;
use crate::lattice;
use crate::poly::{big_binomial, tutte_corank_nullity};

/// Power series in v and w truncated to total degree `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct TruncSeries {
    order: usize,
    // coef[i][j] for i + j <= order.
    coef: Vec<Vec<BigInt>>,
}

impl TruncSeries {
    fn zero(order: usize) -> Self {
        TruncSeries {
            order,
            coef: (0..=order)
                .map(|i| vec![BigInt::zero(); order - i + 1])
                .collect(),
        }
    }

    fn one(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coef[0][0] = BigInt::from(1);
        s
    }

    fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.coef[i][j]
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = TruncSeries::zero(self.order);
        for i1 in 0..=self.order {
            for j1 in 0..=(self.order - i1) {
                let a = &self.coef[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=(self.order - i1 - j1) {
                    for j2 in 0..=(self.order - i1 - j1 - i2) {
                        let b = &other.coef[i2][j2];
                        if !b.is_zero() {
                            out.coef[i1 + i2][j1 + j2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        for i in 0..=self.order {
            for j in 0..=(self.order - i) {
                self.coef[i][j] += c * &other.coef[i][j];
            }
        }
    }

    /// (1 - v)^(-m) when `on_v`, else (1 - w)^(-m).
    fn geometric_pow(order: usize, m: u64, on_v: bool) -> Self {
        let mut s = TruncSeries::zero(order);
        for k in 0..=order {
            let c = big_binomial(k as u64 + m - 1, m - 1);
            if on_v {
                s.coef[k][0] = c;
            } else {
                s.coef[0][k] = c;
            }
        }
        s
    }

    /// (1 - vw)^e for any integer e; negative exponents expand as the
    /// geometric series in vw.
    fn one_minus_vw_pow(order: usize, e: i64) -> Self {
        let mut s = TruncSeries::zero(order);
        for k in 0..=(order / 2) {
            let c = if e >= 0 {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                BigInt::from(sign) * big_binomial(e as u64, k as u64)
            } else {
                big_binomial(k as u64 + (-e) as u64 - 1, (-e) as u64 - 1)
            };
            s.coef[k][k] = c;
        }
        s
    }
}

/// Outcome of the generating-function comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    /// Total order the comparison ran to.
    pub order: usize,
    /// First coefficient where the two sides differ, as
    /// `(t, u, count side, closed form side)`.
    pub first_mismatch: Option<(usize, usize, String, String)>,
}

impl SeriesReport {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Expand both sides of the generating-function identity to total order
/// `order` and report the first mismatch, if any.
pub fn series_identity_check(m: &Polymatroid, order: usize) -> Result<SeriesReport> {
    assert!(order >= 1, "truncation order must be positive");
    let t_poly = tutte_corank_nullity(m)?;
    let n = m.n() as u64;
    let r = m.full_rank() as u64;

    // Right side: sum over Tutte terms b_kl of
    // (1-vw)^(k+l-1) (1-v)^-(k+n-r) (1-w)^-(l+r).
    let mut rhs = TruncSeries::zero(order);
    for (k, l, c) in t_poly.terms() {
        let vw = TruncSeries::one_minus_vw_pow(order, k as i64 + l as i64 - 1);
        let v_part = TruncSeries::geometric_pow(order, k as u64 + n - r, true);
        let w_part = TruncSeries::geometric_pow(order, l as u64 + r, false);
        let term = vw.mul(&v_part).mul(&w_part);
        rhs.add_scaled(&term, c);
    }

    // Left side: the raw counts.
    let triangle = lattice::count_triangle(m, order as i64)?;
    let mut lhs = TruncSeries::one(order);
    for (t, row) in triangle.iter().enumerate() {
        for (u, &q) in row.iter().enumerate() {
            lhs.coef[t][u] = BigInt::from(q);
        }
    }

    for t in 0..=order {
        for u in 0..=(order - t) {
            if lhs.get(t, u) != rhs.get(t, u) {
                return Ok(SeriesReport {
                    order,
                    first_mismatch: Some((
                        t,
                        u,
                        lhs.get(t, u).to_string(),
                        rhs.get(t, u).to_string(),
                    )),
                });
            }
        }
    }
    Ok(SeriesReport {
        order,
        first_mismatch: None,
    })
}

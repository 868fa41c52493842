//! The count polynomial in the binomial basis and its interpolation from
//! count grids by iterated forward differences.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::core::Polymatroid;
use crate::error::{Error, Result};
use crate::lattice;
use crate::poly::{big_binomial, BivarPoly};

/// The count polynomial written as `sum c_ij * binom(t,i) * binom(u,j)`.
/// The coefficients vanish for `i + j >= n`; that bound is enforced at
/// construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialForm {
    n: usize,
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl BinomialForm {
    fn new(n: usize, coeffs: BTreeMap<(u32, u32), BigInt>) -> Result<Self> {
        for (&(i, j), c) in &coeffs {
            if (i + j) as usize >= n && !c.is_zero() {
                return Err(Error::DegreeExceeded {
                    i: i as usize,
                    j: j as usize,
                    value: c.to_string(),
                });
            }
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(BinomialForm { n, coeffs })
    }

    /// Ground set size the degree bound refers to.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.coeffs.iter().map(|(&(i, j), c)| (i, j, c))
    }

    /// Evaluate the binomial-basis expression at integers (t, u).
    pub fn evaluate(&self, t: u64, u: u64) -> BigInt {
        self.coeffs
            .iter()
            .map(|(&(i, j), c)| c * big_binomial(t, i as u64) * big_binomial(u, j as u64))
            .sum()
    }

    /// Change of basis to the monomial polynomial
    /// `sum c_ij (x-1)^i (y-1)^j`.
    pub fn to_qprime(&self) -> BivarPoly {
        let max = self.n as u32;
        let xm1 = BivarPoly::from_terms([
            (1, 0, BigInt::from(1)),
            (0, 0, BigInt::from(-1)),
        ]);
        let ym1 = BivarPoly::from_terms([
            (0, 1, BigInt::from(1)),
            (0, 0, BigInt::from(-1)),
        ]);
        let xp: Vec<BivarPoly> = (0..=max).map(|e| xm1.pow(e)).collect();
        let yp: Vec<BivarPoly> = (0..=max).map(|e| ym1.pow(e)).collect();
        let mut out = BivarPoly::zero();
        for (&(i, j), c) in &self.coeffs {
            out = out.add(&xp[i as usize].mul(&yp[j as usize]).mul_scalar(c));
        }
        out
    }

    /// Terms sorted like the bivariate pretty-printer.
    pub fn sorted_coefficients(&self) -> Vec<(u32, u32, BigInt)> {
        let mut v: Vec<(u32, u32, BigInt)> = self
            .coeffs
            .iter()
            .map(|(&(i, j), c)| (i, j, c.clone()))
            .collect();
        v.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.0)));
        v
    }

    /// Human-readable form, e.g. `binom(t,2) + 2tu + binom(u,2) + 3t + 3u + 2`.
    pub fn pretty(&self) -> String {
        use num_traits::{One, Signed};
        let terms = self.sorted_coefficients();
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, j, c) in terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut mono = String::new();
            match i {
                0 => {}
                1 => mono.push('t'),
                _ => mono.push_str(&format!("binom(t,{i})")),
            }
            match j {
                0 => {}
                1 => mono.push('u'),
                _ => mono.push_str(&format!("binom(u,{j})")),
            }
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

/// Forward difference `c_ij = sum (-1)^(i-a+j-b) binom(i,a) binom(j,b) Q(a,b)`.
fn forward_difference(grid: &[Vec<u64>], i: usize, j: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for a in 0..=i {
        for b in 0..=j {
            let sign = if (i - a + j - b) % 2 == 0 { 1 } else { -1 };
            acc += BigInt::from(sign)
                * big_binomial(i as u64, a as u64)
                * big_binomial(j as u64, b as u64)
                * BigInt::from(grid[a][b]);
        }
    }
    acc
}

/// Interpolate the binomial form of a count grid for a ground set of size
/// `n`. The grid must be rectangular with at least n rows and columns; every
/// computable coefficient at `i + j >= n` must vanish.
pub fn interpolate_binomial(grid: &[Vec<u64>], n: usize) -> Result<BinomialForm> {
    let rows = grid.len();
    let cols = grid.first().map_or(0, Vec::len);
    if rows < n || cols < n {
        return Err(Error::GridTooSmall { rows, cols, need: n });
    }
    if grid.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidParams("grid is not rectangular".into()));
    }
    let mut coeffs = BTreeMap::new();
    for i in 0..rows {
        for j in 0..cols {
            let c = forward_difference(grid, i, j);
            if !c.is_zero() {
                coeffs.insert((i as u32, j as u32), c);
            }
        }
    }
    BinomialForm::new(n, coeffs)
}

/// Interpolate from a ragged triangle of counts (`row t` holds
/// `Q(t, 0..=order-t)`); only coefficients with `i + j <= order` are
/// observable, which is exactly what the degree bound needs when
/// `order >= n - 1`. When `order >= n` the boundary layer doubles as a
/// degree check.
pub fn interpolate_triangle(triangle: &[Vec<u64>], n: usize) -> Result<BinomialForm> {
    let order = triangle.len().saturating_sub(1);
    if order + 1 < n {
        return Err(Error::GridTooSmall {
            rows: order + 1,
            cols: order + 1,
            need: n,
        });
    }
    let mut coeffs = BTreeMap::new();
    for i in 0..=order {
        for j in 0..=(order - i) {
            let mut acc = BigInt::zero();
            for a in 0..=i {
                for b in 0..=j {
                    let sign = if (i - a + j - b) % 2 == 0 { 1 } else { -1 };
                    acc += BigInt::from(sign)
                        * big_binomial(i as u64, a as u64)
                        * big_binomial(j as u64, b as u64)
                        * BigInt::from(triangle[a][b]);
                }
            }
            if !acc.is_zero() {
                coeffs.insert((i as u32, j as u32), acc);
            }
        }
    }
    BinomialForm::new(n, coeffs)
}

/// The binomial form of the count polynomial of a polymatroid, computed
/// from the triangle of counts with `t + u < n` (plus a boundary layer used
/// as a degree check on small ground sets, where it is cheap).
pub fn qpoly(m: &Polymatroid) -> Result<BinomialForm> {
    let n = m.n();
    let order = if n <= 8 { n } else { n - 1 };
    let triangle = lattice::count_triangle(m, order as i64)?;
    interpolate_triangle(&triangle, n)
}

/// The transformed count polynomial Q'(M; x, y).
pub fn qprime(m: &Polymatroid) -> Result<BivarPoly> {
    Ok(qpoly(m)?.to_qprime())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ex_matroid() -> Polymatroid {
        Polymatroid::from_bases(&[vec![1, 0, 0], vec![0, 1, 0]]).unwrap()
    }

    fn ex_grid() -> Vec<Vec<u64>> {
        vec![vec![2, 5, 9], vec![5, 10, 16], vec![9, 16, 24]]
    }

    #[test]
    fn interpolation_of_running_example() {
        let form = interpolate_binomial(&ex_grid(), 3).unwrap();
        let expected = [
            ((2, 0), 1),
            ((1, 1), 2),
            ((0, 2), 1),
            ((1, 0), 3),
            ((0, 1), 3),
            ((0, 0), 2),
        ];
        for ((i, j), c) in expected {
            assert_eq!(form.coefficient(i, j), BigInt::from(c), "c_{i}{j}");
        }
        assert_eq!(form.sorted_coefficients().len(), 6);
        // Reconstruction reproduces every grid entry.
        for (t, row) in ex_grid().iter().enumerate() {
            for (u, &q) in row.iter().enumerate() {
                assert_eq!(form.evaluate(t as u64, u as u64), BigInt::from(q));
            }
        }
        assert_eq!(
            form.pretty(),
            "binom(t,2) + 2tu + binom(u,2) + 3t + 3u + 2"
        );
    }

    #[test]
    fn constant_and_linear_grids() {
        let ones = vec![vec![1u64; 3]; 3];
        let form = interpolate_binomial(&ones, 1).unwrap();
        assert_eq!(form.coefficient(0, 0), BigInt::from(1));
        assert_eq!(form.sorted_coefficients().len(), 1);

        let u12: Vec<Vec<u64>> = (0..3)
            .map(|t| (0..3).map(|u| (t + u + 2) as u64).collect())
            .collect();
        let form = interpolate_binomial(&u12, 2).unwrap();
        assert_eq!(form.coefficient(1, 0), BigInt::from(1));
        assert_eq!(form.coefficient(0, 1), BigInt::from(1));
        assert_eq!(form.coefficient(0, 0), BigInt::from(2));
    }

    #[test]
    fn degree_violations_are_rejected() {
        // A grid that no two-element polymatroid can produce: c_11 != 0.
        let bad = vec![vec![1u64, 2], vec![2, 4]];
        assert!(matches!(
            interpolate_binomial(&bad, 2),
            Err(Error::DegreeExceeded { .. })
        ));
        assert!(matches!(
            interpolate_binomial(&ex_grid(), 4),
            Err(Error::GridTooSmall { .. })
        ));
    }

    #[test]
    fn qprime_of_running_example() {
        let q = qprime(&ex_matroid()).unwrap();
        assert_eq!(q.pretty(), "x^2 + 2xy + y^2 - x - y");

        let u11 = Polymatroid::uniform(1, 1).unwrap();
        assert_eq!(qprime(&u11).unwrap().pretty(), "1");

        let u12 = Polymatroid::uniform(1, 2).unwrap();
        assert_eq!(qprime(&u12).unwrap().pretty(), "x + y");
    }

    #[test]
    fn qprime_of_doubled_example() {
        let doubled = ex_matroid().scale_rank(2).unwrap();
        let q = qprime(&doubled).unwrap();
        assert_eq!(q.pretty(), "x^2 + 2xy + y^2 - 1");
    }

    #[test]
    fn to_qprime_on_constant() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((0, 0), BigInt::from(1));
        let form = BinomialForm::new(1, coeffs).unwrap();
        assert_eq!(form.to_qprime(), BivarPoly::one());
    }

    #[test]
    fn triangle_interpolation_matches_rectangle() {
        let m = ex_matroid();
        let tri = crate::lattice::count_triangle(&m, 3).unwrap();
        let a = interpolate_triangle(&tri, 3).unwrap();
        let b = interpolate_binomial(&ex_grid(), 3).unwrap();
        for (i, j, c) in a.coefficients() {
            assert_eq!(b.coefficient(i, j), *c);
        }
        assert_eq!(
            a.sorted_coefficients().len(),
            b.sorted_coefficients().len()
        );
    }
}

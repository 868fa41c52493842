//! The corank-nullity Tutte polynomial and the exact conversions between
//! the Tutte polynomial and the transformed count polynomial Q'.
//!
//! Both conversions substitute rational functions into a polynomial and
//! clear denominators; on genuine matroid inputs every division is exact,
//! and a nonzero remainder is reported as an error rather than rounded away.

use num_bigint::BigInt;
use num_traits::One;

use crate::core::Polymatroid;
use crate::error::{Error, Result};
use crate::poly::BivarPoly;

/// The Tutte polynomial as the corank-nullity sum
/// `sum over subsets of (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))`.
/// Rejects non-matroids, for which the expression has negative exponents.
pub fn tutte_corank_nullity(m: &Polymatroid) -> Result<BivarPoly> {
    if !m.is_matroid() {
        return Err(Error::NotAMatroid);
    }
    let n = m.n();
    let r = m.full_rank();
    // Whitney rank tally: subsets grouped by (corank, nullity).
    let mut tally = vec![vec![0u64; n + 1]; n + 1];
    for s in m.ground().subsets() {
        let corank = (r - m.rank(s)) as usize;
        let nullity = (s.count_ones() as i64 - m.rank(s)) as usize;
        tally[corank][nullity] += 1;
    }
    let xm1 = BivarPoly::from_terms([(1, 0, BigInt::from(1)), (0, 0, BigInt::from(-1))]);
    let ym1 = BivarPoly::from_terms([(0, 1, BigInt::from(1)), (0, 0, BigInt::from(-1))]);
    let xp: Vec<BivarPoly> = (0..=n as u32).map(|e| xm1.pow(e)).collect();
    let yp: Vec<BivarPoly> = (0..=n as u32).map(|e| ym1.pow(e)).collect();
    let mut out = BivarPoly::zero();
    for (corank, row) in tally.iter().enumerate() {
        for (nullity, &count) in row.iter().enumerate() {
            if count > 0 {
                out = out.add(
                    &xp[corank]
                        .mul(&yp[nullity])
                        .mul_scalar(&BigInt::from(count)),
                );
            }
        }
    }
    Ok(out)
}

/// A substitution pipeline: replace x and y by rational functions and
/// multiply by a rational prefactor, then clear every denominator by exact
/// polynomial division. Denominators must be nonzero with a unit leading
/// coefficient; a division that leaves a remainder is an error, never a
/// rounding.
#[derive(Debug, Clone)]
pub struct RationalSubstitution {
    x_num: BivarPoly,
    x_den: BivarPoly,
    y_num: BivarPoly,
    y_den: BivarPoly,
    pre_num: BivarPoly,
    pre_den: BivarPoly,
}

impl RationalSubstitution {
    pub fn new(
        x_num: BivarPoly,
        x_den: BivarPoly,
        y_num: BivarPoly,
        y_den: BivarPoly,
        pre_num: BivarPoly,
        pre_den: BivarPoly,
    ) -> Result<Self> {
        if x_den.is_zero() || y_den.is_zero() || pre_den.is_zero() {
            return Err(Error::InvalidParams(
                "substitution denominators must be nonzero".into(),
            ));
        }
        Ok(RationalSubstitution {
            x_num,
            x_den,
            y_num,
            y_den,
            pre_num,
            pre_den,
        })
    }

    /// Compute `prefactor * f(x_num/x_den, y_num/y_den)` exactly.
    pub fn apply(&self, f: &BivarPoly) -> Result<BivarPoly> {
        if f.is_zero() {
            return Ok(BivarPoly::zero());
        }
        let dx = f.degree_x();
        let dy = f.degree_y();
        let xn: Vec<BivarPoly> = (0..=dx).map(|e| self.x_num.pow(e)).collect();
        let xd: Vec<BivarPoly> = (0..=dx).map(|e| self.x_den.pow(e)).collect();
        let yn: Vec<BivarPoly> = (0..=dy).map(|e| self.y_num.pow(e)).collect();
        let yd: Vec<BivarPoly> = (0..=dy).map(|e| self.y_den.pow(e)).collect();
        // Cleared numerator: x_den^dx y_den^dy f(x_num/x_den, y_num/y_den).
        let mut cleared = BivarPoly::zero();
        for (i, j, c) in f.terms() {
            let term = xn[i as usize]
                .mul(&xd[(dx - i) as usize])
                .mul(&yn[j as usize])
                .mul(&yd[(dy - j) as usize]);
            cleared = cleared.add(&term.mul_scalar(c));
        }
        let numerator = self.pre_num.mul(&cleared);
        let after_pre = numerator.div_exact(&self.pre_den)?;
        let after_x = after_pre.div_exact(&xd[dx as usize])?;
        after_x.div_exact(&yd[dy as usize])
    }
}

/// `(-v)^e` split into a numerator or denominator factor depending on the
/// exponent's sign; `v` is x when `on_x`, else y.
fn signed_power(e: i64, on_x: bool) -> (BivarPoly, bool) {
    let k = e.unsigned_abs() as u32;
    let sign = if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let p = if on_x {
        BivarPoly::monomial(k, 0, sign)
    } else {
        BivarPoly::monomial(0, k, sign)
    };
    (p, e >= 0)
}

/// The substitution of the Q'-to-Tutte direction for a matroid with `n`
/// elements and rank `r`:
/// `T(x,y) = -(xy-x-y)^(n-1) / ((-y)^(r-1) (-x)^(n-r-1)) * Q'(-x/d, -y/d)`
/// with `d = xy - x - y`; powers with negative exponents move to the other
/// side of the fraction.
pub fn tutte_from_qprime_substitution(n: usize, r: i64) -> Result<RationalSubstitution> {
    if n == 0 {
        return Err(Error::InvalidParams("ground set must be nonempty".into()));
    }
    let d = BivarPoly::hyperbola();
    let minus_x = BivarPoly::monomial(1, 0, BigInt::from(-1));
    let minus_y = BivarPoly::monomial(0, 1, BigInt::from(-1));
    let mut pre_num = d.pow(n as u32 - 1).neg();
    let mut pre_den = BivarPoly::one();
    for (e, on_x) in [(r - 1, false), (n as i64 - r - 1, true)] {
        let (p, denominator_side) = signed_power(e, on_x);
        if denominator_side {
            pre_den = pre_den.mul(&p);
        } else {
            pre_num = pre_num.mul(&p);
        }
    }
    RationalSubstitution::new(minus_x, d.clone(), minus_y, d, pre_num, pre_den)
}

/// Recover the Tutte polynomial from Q' of a matroid with `n` elements and
/// rank `r`. Any division that does not clear exactly signals that the
/// input is not the Q' of a matroid with these parameters.
pub fn tutte_from_qprime(n: usize, r: i64, q: &BivarPoly) -> Result<BivarPoly> {
    tutte_from_qprime_substitution(n, r)?.apply(q)
}

/// The substitution of the Tutte-to-Q' direction:
/// `Q'(x,y) = x^(n-r) y^r / (x+y-1) * T((x+y-1)/y, (x+y-1)/x)`.
pub fn qprime_from_tutte_substitution(n: usize, r: i64) -> Result<RationalSubstitution> {
    if n == 0 {
        return Err(Error::InvalidParams("ground set must be nonempty".into()));
    }
    if r < 0 || r > n as i64 {
        return Err(Error::InvalidParams(format!("rank {r} is outside 0..={n}")));
    }
    let s = BivarPoly::xy_minus_one();
    RationalSubstitution::new(
        s.clone(),
        BivarPoly::monomial(0, 1, BigInt::one()),
        s.clone(),
        BivarPoly::monomial(1, 0, BigInt::one()),
        BivarPoly::monomial((n as i64 - r) as u32, r as u32, BigInt::one()),
        s,
    )
}

/// Produce Q' from the Tutte polynomial of a matroid with `n` elements and
/// rank `r`.
pub fn qprime_from_tutte(n: usize, r: i64, t: &BivarPoly) -> Result<BivarPoly> {
    qprime_from_tutte_substitution(n, r)?.apply(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qprime;

    fn ex_matroid() -> Polymatroid {
        Polymatroid::from_bases(&[vec![1, 0, 0], vec![0, 1, 0]]).unwrap()
    }

    fn p(terms: &[(u32, u32, i64)]) -> BivarPoly {
        BivarPoly::from_terms(terms.iter().map(|&(i, j, c)| (i, j, BigInt::from(c))))
    }

    #[test]
    fn corank_nullity_examples() {
        assert_eq!(
            tutte_corank_nullity(&ex_matroid()).unwrap().pretty(),
            "xy + y^2"
        );
        assert_eq!(
            tutte_corank_nullity(&Polymatroid::uniform(1, 1).unwrap())
                .unwrap()
                .pretty(),
            "x"
        );
        assert_eq!(
            tutte_corank_nullity(&Polymatroid::uniform(1, 2).unwrap())
                .unwrap()
                .pretty(),
            "x + y"
        );
        assert!(matches!(
            tutte_corank_nullity(&ex_matroid().scale_rank(2).unwrap()),
            Err(Error::NotAMatroid)
        ));
    }

    #[test]
    fn tutte_from_qprime_examples() {
        let q = p(&[(2, 0, 1), (1, 1, 2), (0, 2, 1), (1, 0, -1), (0, 1, -1)]);
        assert_eq!(tutte_from_qprime(3, 1, &q).unwrap().pretty(), "xy + y^2");

        assert_eq!(
            tutte_from_qprime(1, 1, &BivarPoly::one()).unwrap().pretty(),
            "x"
        );

        // All-loops matroid: Q' = 1 at n = 1 rank 0 gives T = y.
        assert_eq!(
            tutte_from_qprime(1, 0, &BivarPoly::one()).unwrap().pretty(),
            "y"
        );
    }

    #[test]
    fn tutte_from_qprime_on_non_matroid_input() {
        // Q' of the doubled example polymatroid: the division happens to
        // clear, so the conversion returns a polynomial, but not a Tutte
        // polynomial of anything (it has a negative coefficient). The
        // formula's guarantees only apply to matroid inputs.
        let q = p(&[(2, 0, 1), (1, 1, 2), (0, 2, 1), (0, 0, -1)]);
        let t = tutte_from_qprime(3, 1, &q).unwrap();
        assert_eq!(t.pretty(), "-xy^2 + 2xy + 2y^2");
        assert!(t.terms().any(|(_, _, c)| c < &BigInt::from(0)));
    }

    #[test]
    fn tutte_from_qprime_inexact_division() {
        // x + y is Q' of U_{1,2}; claiming n = 3 makes the monomial
        // division fail.
        let q = p(&[(1, 0, 1), (0, 1, 1)]);
        assert!(matches!(
            tutte_from_qprime(3, 1, &q),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn qprime_from_tutte_examples() {
        let t = p(&[(1, 1, 1), (0, 2, 1)]);
        assert_eq!(
            qprime_from_tutte(3, 1, &t).unwrap().pretty(),
            "x^2 + 2xy + y^2 - x - y"
        );

        let t = p(&[(1, 0, 1), (0, 1, 1)]);
        assert_eq!(qprime_from_tutte(2, 1, &t).unwrap().pretty(), "x + y");

        let t = p(&[(1, 0, 1)]);
        assert_eq!(qprime_from_tutte(1, 1, &t).unwrap().pretty(), "1");
    }

    #[test]
    fn qprime_from_tutte_inexact_division() {
        // 1 + x is not the Tutte polynomial of any matroid on one element;
        // the (x+y-1) division leaves a remainder.
        let fake = p(&[(1, 0, 1), (0, 0, 1)]);
        assert!(matches!(
            qprime_from_tutte(1, 1, &fake),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn substitution_pipeline_basics() {
        // x <- x^2, y <- y/x, prefactor x: x * f(x^2, y/x) for f = xy + 1
        // gives x * (x^2 y / x + 1) = x^2 y + x.
        let sub = RationalSubstitution::new(
            p(&[(2, 0, 1)]),
            BivarPoly::one(),
            p(&[(0, 1, 1)]),
            p(&[(1, 0, 1)]),
            p(&[(1, 0, 1)]),
            BivarPoly::one(),
        )
        .unwrap();
        let f = p(&[(1, 1, 1), (0, 0, 1)]);
        assert_eq!(sub.apply(&f).unwrap(), p(&[(2, 1, 1), (1, 0, 1)]));

        // Without the prefactor, f = y leaves the denominator x standing.
        let bare = RationalSubstitution::new(
            p(&[(2, 0, 1)]),
            BivarPoly::one(),
            p(&[(0, 1, 1)]),
            p(&[(1, 0, 1)]),
            BivarPoly::one(),
            BivarPoly::one(),
        )
        .unwrap();
        assert!(matches!(
            bare.apply(&p(&[(0, 1, 1)])),
            Err(Error::InexactDivision(_))
        ));

        assert!(RationalSubstitution::new(
            BivarPoly::one(),
            BivarPoly::zero(),
            BivarPoly::one(),
            BivarPoly::one(),
            BivarPoly::one(),
            BivarPoly::one(),
        )
        .is_err());
    }

    #[test]
    fn round_trips_on_small_matroids() {
        for (m, label) in [
            (ex_matroid(), "example"),
            (Polymatroid::uniform(2, 4).unwrap(), "U24"),
            (Polymatroid::uniform(0, 2).unwrap(), "U02"),
            (Polymatroid::uniform(3, 3).unwrap(), "U33"),
            (
                Polymatroid::graphic(3, &[(1, 2), (2, 3), (1, 3)]).unwrap(),
                "triangle",
            ),
        ] {
            let n = m.n();
            let r = m.full_rank();
            let t = tutte_corank_nullity(&m).unwrap();
            let q = qprime(&m).unwrap();
            assert_eq!(
                tutte_from_qprime(n, r, &q).unwrap(),
                t,
                "lattice route disagrees for {label}"
            );
            assert_eq!(
                qprime_from_tutte(n, r, &t).unwrap(),
                q,
                "inverse route disagrees for {label}"
            );
        }
    }
}

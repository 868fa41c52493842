//! Integer bases of a polymatroid and lattice points of the Minkowski sum
//! `P(M) + u*simplex + t*(reflected simplex)`, with exact counts.
//!
//! The sum is counted through its inequality description: a point z lies in
//! it iff `sum(z) = r(E) + u - t` and `z(S) <= r(S) + u` for every proper
//! nonempty subset S. Shifting by `t` per coordinate turns this into the
//! integer base set of an auxiliary polymatroid, so one search kernel serves
//! both base enumeration and point counting. The kernel assigns coordinates
//! depth-first and prunes with the contracted rank table, which is the
//! tightest subset constraint applicable to the remaining coordinates.

use crate::core::{subset_elements, Polymatroid, Subset};
use crate::error::{Error, Result};

/// An integer base vector: nonnegative, full coordinate sum `r(E)`, and
/// `x(S) <= r(S)` for every subset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BaseVector(Vec<i64>);

impl BaseVector {
    pub fn new(m: &Polymatroid, coords: Vec<i64>) -> Result<Self> {
        if is_base(m, &coords) {
            Ok(BaseVector(coords))
        } else {
            Err(Error::NotABase(format!("{coords:?}")))
        }
    }

    pub(crate) fn from_raw(coords: Vec<i64>) -> Self {
        BaseVector(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    /// Coordinate sum over a subset mask.
    pub fn sum_over(&self, subset: Subset) -> i64 {
        subset_elements(subset).map(|e| self.0[e - 1]).sum()
    }
}

/// A lattice point of the Minkowski sum together with the scale parameters
/// that make it one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumPoint {
    coords: Vec<i64>,
    t: i64,
    u: i64,
}

impl SumPoint {
    pub fn new(m: &Polymatroid, t: i64, u: i64, coords: Vec<i64>) -> Result<Self> {
        if is_sum_point(m, t, u, &coords) {
            Ok(SumPoint { coords, t, u })
        } else {
            Err(Error::NotABase(format!(
                "{coords:?} is not in the sum at t = {t}, u = {u}"
            )))
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }
}

/// Membership in the Minkowski sum via the inequality description.
pub fn is_sum_point(m: &Polymatroid, t: i64, u: i64, z: &[i64]) -> bool {
    if z.len() != m.n() {
        return false;
    }
    let full = m.ground().full();
    if z.iter().sum::<i64>() != m.full_rank() + u - t {
        return false;
    }
    (1..full).all(|s| subset_elements(s).map(|e| z[e - 1]).sum::<i64>() <= m.rank(s) + u)
}

/// Membership in the base set: `is_sum_point` at t = u = 0.
pub fn is_base(m: &Polymatroid, x: &[i64]) -> bool {
    is_sum_point(m, 0, 0, x)
}

/// All integer bases, in descending lexicographic order.
pub fn enumerate_bases(m: &Polymatroid) -> Vec<BaseVector> {
    let table = m.rank_fn().table().to_vec();
    enumerate_table_bases(&table, m.n(), m.full_rank())
        .into_iter()
        .map(BaseVector::from_raw)
        .collect()
}

/// Exact number of lattice points of `P(M) + u*simplex + t*(reflected)`.
pub fn count_lattice_points(m: &Polymatroid, t: i64, u: i64) -> Result<u64> {
    assert!(t >= 0 && u >= 0, "scale parameters must be nonnegative");
    let (table, level) = minkowski_table(m, t, u);
    count_table_bases(&table, m.n(), level)
}

/// Lattice points of the sum as explicit vectors.
pub fn enumerate_sum_points(m: &Polymatroid, t: i64, u: i64) -> Vec<Vec<i64>> {
    let (table, level) = minkowski_table(m, t, u);
    enumerate_table_bases(&table, m.n(), level)
        .into_iter()
        .map(|y| y.into_iter().map(|v| v - t).collect())
        .collect()
}

/// The count matrix `[Q(t,u)]` for `0 <= t <= t_max`, `0 <= u <= u_max`,
/// rows indexed by t.
pub fn count_grid(m: &Polymatroid, t_max: i64, u_max: i64) -> Result<Vec<Vec<u64>>> {
    (0..=t_max)
        .map(|t| (0..=u_max).map(|u| count_lattice_points(m, t, u)).collect())
        .collect()
}

/// The ragged triangle of counts with `t + u <= order`; row t holds
/// `Q(t, 0..=order-t)`. This is the cheapest grid that pins down a
/// polynomial of total degree less than `order`.
pub fn count_triangle(m: &Polymatroid, order: i64) -> Result<Vec<Vec<u64>>> {
    (0..=order)
        .map(|t| {
            (0..=order - t)
                .map(|u| count_lattice_points(m, t, u))
                .collect()
        })
        .collect()
}

/// A witness that a point decomposes as base + increments - decrements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// The underlying base.
    pub base: BaseVector,
    /// Multiset of incremented coordinates (1-based), u in total.
    pub increments: Vec<usize>,
    /// Multiset of decremented coordinates (1-based), t in total.
    pub decrements: Vec<usize>,
}

/// Search for a witness `z = b + a - d` with `b` a base, `a` a sum of `u`
/// standard basis vectors and `d` a sum of `t` of them. Presence agrees
/// exactly with the inequality membership test; that equivalence is enforced
/// by tests rather than assumed here.
pub fn decompose_point(m: &Polymatroid, t: i64, u: i64, z: &[i64]) -> Option<Decomposition> {
    if z.len() != m.n() || z.iter().sum::<i64>() != m.full_rank() + u - t {
        return None;
    }
    debug_assert!(t >= 0 && u >= 0);
    for base in enumerate_bases(m) {
        let w: Vec<i64> = z.iter().zip(base.coords()).map(|(&a, &b)| a - b).collect();
        let pos: i64 = w.iter().filter(|&&c| c > 0).sum();
        let neg: i64 = -w.iter().filter(|&&c| c < 0).sum::<i64>();
        if pos > u {
            continue;
        }
        // pos - neg = u - t, so the two paddings below are equal and
        // nonnegative; padding the same coordinate in both multisets keeps
        // a - d unchanged.
        let pad = u - pos;
        debug_assert_eq!(pad, t - neg);
        let mut increments = Vec::new();
        let mut decrements = Vec::new();
        for (i, &c) in w.iter().enumerate() {
            for _ in 0..c.max(0) {
                increments.push(i + 1);
            }
            for _ in 0..(-c).max(0) {
                decrements.push(i + 1);
            }
        }
        for _ in 0..pad {
            increments.push(1);
            decrements.push(1);
        }
        increments.sort_unstable();
        decrements.sort_unstable();
        return Some(Decomposition {
            base,
            increments,
            decrements,
        });
    }
    None
}

/// Rank table of the auxiliary polymatroid whose integer bases are the
/// shifted sum points `z + t*ones`:
/// `g(S) = r(S) + u*[S nonempty] + t*(|S| - [S = E])`.
fn minkowski_table(m: &Polymatroid, t: i64, u: i64) -> (Vec<i64>, i64) {
    let full = m.ground().full();
    let table: Vec<i64> = m
        .ground()
        .subsets()
        .map(|s| {
            let mut g = m.rank(s) + t * s.count_ones() as i64;
            if s != 0 {
                g += u;
            }
            if s == full {
                g -= t;
            }
            g
        })
        .collect();
    let level = table[full as usize];
    (table, level)
}

/// Count the integer bases of the polymatroid given by `table` (length
/// `2^n`) at coordinate sum `level`.
pub(crate) fn count_table_bases(table: &[i64], n: usize, level: i64) -> Result<u64> {
    debug_assert_eq!(table.len(), 1 << n);
    let mut pool: Vec<Vec<i64>> = (0..n).map(|d| vec![0i64; 1 << (n - 1 - d)]).collect();
    count_rec(table, n, level, &mut pool)
}

fn count_rec(table: &[i64], m: usize, level: i64, pool: &mut [Vec<i64>]) -> Result<u64> {
    if m == 1 {
        return Ok(u64::from(level >= 0 && level <= table[1]));
    }
    let (lb, ub) = branch_bounds(table, m, level);
    let (child, rest) = pool.split_first_mut().expect("pool sized to depth");
    let mut total: u64 = 0;
    for v in lb..=ub {
        contract_lowest(table, m, v, child);
        let sub = count_rec(child, m - 1, level - v, rest)?;
        total = total.checked_add(sub).ok_or(Error::CountOverflow)?;
    }
    Ok(total)
}

fn enumerate_table_bases(table: &[i64], n: usize, level: i64) -> Vec<Vec<i64>> {
    let mut pool: Vec<Vec<i64>> = (0..n).map(|d| vec![0i64; 1 << (n - 1 - d)]).collect();
    let mut prefix = Vec::with_capacity(n);
    let mut out = Vec::new();
    enumerate_rec(table, n, level, &mut pool, &mut prefix, &mut out);
    out
}

fn enumerate_rec(
    table: &[i64],
    m: usize,
    level: i64,
    pool: &mut [Vec<i64>],
    prefix: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if m == 1 {
        if level >= 0 && level <= table[1] {
            prefix.push(level);
            out.push(prefix.clone());
            prefix.pop();
        }
        return;
    }
    let (lb, ub) = branch_bounds(table, m, level);
    let (child, rest) = pool.split_first_mut().expect("pool sized to depth");
    for v in (lb..=ub).rev() {
        contract_lowest(table, m, v, child);
        prefix.push(v);
        enumerate_rec(child, m - 1, level - v, rest, prefix, out);
        prefix.pop();
    }
}

/// Feasible values for the first remaining coordinate. Submodularity makes
/// every value in the range extendable, so no branch is wasted.
fn branch_bounds(table: &[i64], m: usize, level: i64) -> (i64, i64) {
    let full = (1usize << m) - 1;
    let rest = table[full - 1];
    let lb = (level - rest).max(0);
    let ub = table[1].min(level);
    (lb, ub)
}

/// Contract the polymatroid by `v` units on its first element:
/// `h'(T) = min(h(T), h(T + e) - v)` over the remaining elements.
fn contract_lowest(table: &[i64], m: usize, v: i64, out: &mut [i64]) {
    let half = 1usize << (m - 1);
    for tm in 0..half {
        out[tm] = table[2 * tm].min(table[2 * tm + 1] - v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::Polymatroid;

    fn ex_matroid() -> Polymatroid {
        Polymatroid::from_bases(&[vec![1, 0, 0], vec![0, 1, 0]]).unwrap()
    }

    /// Brute-force reference: scan the whole coordinate box and apply the
    /// inequality test directly. Independent of the search kernel.
    fn brute_force_points(m: &Polymatroid, t: i64, u: i64) -> Vec<Vec<i64>> {
        let n = m.n();
        let hi: Vec<i64> = (0..n)
            .map(|i| m.rank(1 << i) + u)
            .collect();
        let mut out = Vec::new();
        let mut z = vec![-t; n];
        loop {
            if is_sum_point(m, t, u, &z) {
                out.push(z.clone());
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                z[i] += 1;
                if z[i] <= hi[i] {
                    break;
                }
                z[i] = -t;
                i += 1;
            }
        }
    }

    #[test]
    fn enumerate_bases_examples() {
        let m = ex_matroid();
        let bases: Vec<Vec<i64>> = enumerate_bases(&m)
            .into_iter()
            .map(BaseVector::into_coords)
            .collect();
        assert_eq!(bases, vec![vec![1, 0, 0], vec![0, 1, 0]]);

        let u03 = Polymatroid::uniform(0, 3).unwrap();
        let bases: Vec<Vec<i64>> = enumerate_bases(&u03)
            .into_iter()
            .map(BaseVector::into_coords)
            .collect();
        assert_eq!(bases, vec![vec![0, 0, 0]]);

        // Doubled example matroid, brute-forced over the box [0,2]^3.
        let doubled = ex_matroid().scale_rank(2).unwrap();
        let mut expected = Vec::new();
        for a in 0..=2i64 {
            for b in 0..=2i64 {
                for c in 0..=2i64 {
                    if is_base(&doubled, &[a, b, c]) {
                        expected.push(vec![a, b, c]);
                    }
                }
            }
        }
        let mut got: Vec<Vec<i64>> = enumerate_bases(&doubled)
            .into_iter()
            .map(BaseVector::into_coords)
            .collect();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(expected.len(), 3);
    }

    #[test]
    fn count_examples() {
        let m = ex_matroid();
        assert_eq!(count_lattice_points(&m, 2, 1).unwrap(), 16);
        assert_eq!(count_lattice_points(&m, 0, 0).unwrap(), 2);
        assert_eq!(count_lattice_points(&m, 1, 1).unwrap(), 10);

        let u11 = Polymatroid::uniform(1, 1).unwrap();
        for (t, u) in [(0, 0), (3, 1), (5, 5), (0, 7)] {
            assert_eq!(count_lattice_points(&u11, t, u).unwrap(), 1);
        }

        let u12 = Polymatroid::uniform(1, 2).unwrap();
        for t in 0..4 {
            for u in 0..4 {
                let direct = brute_force_points(&u12, t, u).len() as u64;
                assert_eq!(direct, (t + u + 2) as u64);
                assert_eq!(count_lattice_points(&u12, t, u).unwrap(), direct);
            }
        }
    }

    #[test]
    fn counts_match_brute_force() {
        let candidates = [
            ex_matroid(),
            ex_matroid().scale_rank(2).unwrap(),
            Polymatroid::uniform(2, 4).unwrap(),
            Polymatroid::graphic(3, &[(1, 2), (2, 3), (1, 3), (1, 2)]).unwrap(),
        ];
        for m in &candidates {
            for t in 0..3 {
                for u in 0..3 {
                    let brute = brute_force_points(m, t, u);
                    assert_eq!(
                        count_lattice_points(m, t, u).unwrap(),
                        brute.len() as u64,
                        "count mismatch at t={t}, u={u}"
                    );
                    let mut enumerated = enumerate_sum_points(m, t, u);
                    enumerated.sort();
                    let mut brute = brute;
                    brute.sort();
                    assert_eq!(enumerated, brute);
                }
            }
        }
    }

    #[test]
    fn grid_examples() {
        let m = ex_matroid();
        assert_eq!(
            count_grid(&m, 2, 2).unwrap(),
            vec![vec![2, 5, 9], vec![5, 10, 16], vec![9, 16, 24]]
        );

        let u01 = Polymatroid::uniform(0, 1).unwrap();
        assert_eq!(count_grid(&u01, 1, 1).unwrap(), vec![vec![1, 1], vec![1, 1]]);

        let u12 = Polymatroid::uniform(1, 2).unwrap();
        assert_eq!(
            count_grid(&u12, 2, 2).unwrap(),
            vec![vec![2, 3, 4], vec![3, 4, 5], vec![4, 5, 6]]
        );
    }

    #[test]
    fn triangle_agrees_with_grid() {
        let m = ex_matroid();
        let tri = count_triangle(&m, 3).unwrap();
        for (t, row) in tri.iter().enumerate() {
            for (u, &q) in row.iter().enumerate() {
                assert_eq!(q, count_lattice_points(&m, t as i64, u as i64).unwrap());
            }
        }
        assert_eq!(tri[0].len(), 4);
        assert_eq!(tri[3].len(), 1);
    }

    #[test]
    fn base_count_equals_q00() {
        for m in [
            ex_matroid(),
            Polymatroid::uniform(2, 4).unwrap(),
            ex_matroid().scale_rank(3).unwrap(),
        ] {
            assert_eq!(
                enumerate_bases(&m).len() as u64,
                count_lattice_points(&m, 0, 0).unwrap()
            );
        }
    }

    #[test]
    fn decompose_examples() {
        let m = ex_matroid();

        let d = decompose_point(&m, 2, 1, &[1, 1, -2]).expect("decomposable");
        assert!(is_base(&m, d.base.coords()));
        assert_eq!(d.increments.len(), 1);
        assert_eq!(d.decrements.len(), 2);
        // Witness reconstructs the point.
        let mut rebuilt = d.base.coords().to_vec();
        for &i in &d.increments {
            rebuilt[i - 1] += 1;
        }
        for &i in &d.decrements {
            rebuilt[i - 1] -= 1;
        }
        assert_eq!(rebuilt, vec![1, 1, -2]);

        let d = decompose_point(&m, 0, 0, &[1, 0, 0]).expect("a base decomposes as itself");
        assert_eq!(d.base.coords(), &[1, 0, 0]);
        assert!(d.increments.is_empty());
        assert!(d.decrements.is_empty());

        assert!(decompose_point(&m, 2, 1, &[3, 0, -2]).is_none());
    }

    #[test]
    fn membership_equivalence_small() {
        let candidates = [ex_matroid(), ex_matroid().scale_rank(2).unwrap()];
        for m in &candidates {
            for t in 0..3 {
                for u in 0..3 {
                    let points = brute_force_points(m, t, u);
                    for z in &points {
                        assert!(decompose_point(m, t, u, z).is_some());
                    }
                    // A point just outside: bump one coordinate of each point.
                    for z in &points {
                        let mut w = z.clone();
                        w[0] += 1;
                        assert_eq!(
                            is_sum_point(m, t, u, &w),
                            decompose_point(m, t, u, &w).is_some()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_in_t_and_u() {
        let m = ex_matroid().scale_rank(2).unwrap();
        let grid = count_grid(&m, 3, 3).unwrap();
        for t in 0..3 {
            for u in 0..4 {
                assert!(grid[t + 1][u] >= grid[t][u]);
            }
        }
        for t in 0..4 {
            for u in 0..3 {
                assert!(grid[t][u + 1] >= grid[t][u]);
            }
        }
    }

    #[test]
    fn dual_swaps_t_and_u() {
        for m in [
            ex_matroid(),
            Polymatroid::uniform(2, 4).unwrap(),
            ex_matroid().scale_rank(2).unwrap(),
        ] {
            let s = m
                .ground()
                .elements()
                .map(|e| m.rank(1 << (e - 1)))
                .max()
                .unwrap();
            let dual = m.s_dual(s).unwrap();
            for t in 0..=3 {
                for u in 0..=3 {
                    assert_eq!(
                        count_lattice_points(&m, t, u).unwrap(),
                        count_lattice_points(&dual, u, t).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn sum_point_constructor_checks() {
        let m = ex_matroid();
        assert!(SumPoint::new(&m, 2, 1, vec![1, 1, -2]).is_ok());
        assert!(SumPoint::new(&m, 2, 1, vec![3, 0, -2]).is_err());
        assert!(BaseVector::new(&m, vec![1, 0, 0]).is_ok());
        assert!(BaseVector::new(&m, vec![0, 0, 1]).is_err());
    }
}

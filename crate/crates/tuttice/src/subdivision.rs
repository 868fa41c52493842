//! Top-degree cells of the mixed subdivision of the Minkowski sum, the
//! activity-based basis finder, the face poset with its Dawson-cube
//! decomposition, and the coefficient / coverage / sign checks.
//!
//! The subdivision's combinatorial skeleton does not depend on the scale
//! parameters, so it is reconstructed order-theoretically: a top-degree cell
//! pairs an ordered partition (X, Y) meeting in the order-minimal element
//! with the unique base at which every element of X is externally active and
//! every element of Y internally active. Lattice-point membership in a cell
//! is decided by the closed-form slack test coming from the decomposition
//! `z = base + increments - decrements`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::activity::{
    activity_record, dawson_partition, DawsonInterval, ElementOrder,
};
use crate::core::{subset_elements, subset_to_string, Polymatroid, Subset};
use crate::error::{Error, Result};
use crate::lattice::{enumerate_bases, enumerate_sum_points, BaseVector};
use crate::poly::{qprime, BivarPoly};

/// A pair of subsets covering the ground set and meeting in exactly one
/// element, the scaffold of a top-degree cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderedPartition {
    x: Subset,
    y: Subset,
}

impl OrderedPartition {
    pub fn new(m: &Polymatroid, x: Subset, y: Subset) -> Result<Self> {
        let full = m.ground().full();
        if x | y != full || (x & y).count_ones() != 1 {
            return Err(Error::InvalidParams(format!(
                "({}, {}) must cover the ground set and meet in one element",
                subset_to_string(x),
                subset_to_string(y)
            )));
        }
        Ok(OrderedPartition { x, y })
    }

    pub fn x(&self) -> Subset {
        self.x
    }

    pub fn y(&self) -> Subset {
        self.y
    }

    /// The single common element.
    pub fn meet(&self) -> usize {
        (self.x & self.y).trailing_zeros() as usize + 1
    }
}

/// All `2^(n-1)` partitions meeting in `meet`, in increasing X-mask order.
pub fn all_partitions(m: &Polymatroid, meet: usize) -> Vec<OrderedPartition> {
    let full = m.ground().full();
    let meet_bit = 1 << (meet - 1);
    let rest = full & !meet_bit;
    let mut out = Vec::new();
    // Iterate over subsets of the remaining elements as the X side.
    let mut sub = 0u32;
    loop {
        out.push(OrderedPartition {
            x: sub | meet_bit,
            y: (rest & !sub) | meet_bit,
        });
        if sub == rest {
            break;
        }
        sub = (sub.wrapping_sub(rest)) & rest;
    }
    out.sort_by_key(|p| p.x);
    out
}

/// A top-degree cell of the mixed subdivision: the face spanned by X on the
/// simplex side and Y on the reflected side, attached at one base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopDegreeFace {
    pub partition: OrderedPartition,
    pub base: BaseVector,
    /// Exponent pair (i, j) of the coefficient the cell counts toward:
    /// x pairs with the reflected side, so i = |Y| - 1 and j = |X| - 1.
    pub dims: (usize, usize),
}

/// Find the unique base at which no element of X is externally inactive and
/// no element of Y is internally inactive, under `order`. Existence and
/// uniqueness hold for every matroid; anything else is an error.
pub fn top_degree_basis(
    m: &Polymatroid,
    partition: &OrderedPartition,
    order: &ElementOrder,
) -> Result<BaseVector> {
    let records = base_activity_records(m, order)?;
    unique_base(&records, partition).cloned()
}

fn base_activity_records(
    m: &Polymatroid,
    order: &ElementOrder,
) -> Result<Vec<(BaseVector, Subset, Subset)>> {
    if order.min_element() > m.n() {
        return Err(Error::InvalidParams("order does not match the ground set".into()));
    }
    Ok(enumerate_bases(m)
        .into_iter()
        .map(|b| {
            let rec = activity_record(m, &b, order).expect("enumerated vector is a base");
            (b, rec.internal_active, rec.external_active)
        })
        .collect())
}

fn unique_base<'a>(
    records: &'a [(BaseVector, Subset, Subset)],
    partition: &OrderedPartition,
) -> Result<&'a BaseVector> {
    let mut found: Option<&BaseVector> = None;
    let mut count = 0usize;
    for (base, internal, external) in records {
        if partition.x & !external == 0 && partition.y & !internal == 0 {
            count += 1;
            found = Some(base);
        }
    }
    match (count, found) {
        (1, Some(b)) => Ok(b),
        _ => Err(Error::UniquenessViolation {
            found: count,
            partition: format!(
                "({}, {})",
                subset_to_string(partition.x),
                subset_to_string(partition.y)
            ),
        }),
    }
}

/// All top-degree cells under `order`; exactly `2^(n-1)` of them, one per
/// partition meeting in the order-minimal element.
pub fn top_degree_faces(m: &Polymatroid, order: &ElementOrder) -> Result<Vec<TopDegreeFace>> {
    let records = base_activity_records(m, order)?;
    let mut faces = Vec::new();
    for partition in all_partitions(m, order.min_element()) {
        let base = unique_base(&records, &partition)?.clone();
        let dims = (
            partition.y.count_ones() as usize - 1,
            partition.x.count_ones() as usize - 1,
        );
        faces.push(TopDegreeFace {
            partition,
            base,
            dims,
        });
    }
    Ok(faces)
}

/// One element of the face poset: a cell `X` on the simplex side, `Y` on the
/// reflected side (possibly not covering the ground set), the shared base,
/// and the cube it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetElement {
    pub x: Subset,
    pub y: Subset,
    /// Basis subset generating the cube.
    pub basis: Subset,
    /// Exponent pair the cell counts toward: (|Y| - 1, |X| - 1).
    pub dims: (usize, usize),
    pub cube: usize,
}

/// One cube of the decomposition: all poset elements whose X lies in a
/// Dawson interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cube {
    pub interval: DawsonInterval,
    pub dim: usize,
    /// Indices into the face list of the cube's vertices.
    pub vertices: Vec<usize>,
}

/// The poset of top-degree cells and their nonempty intersections, realized
/// as a disjoint union of cube face posets, one cube per Dawson interval.
#[derive(Debug, Clone)]
pub struct FacePoset {
    pub faces: Vec<TopDegreeFace>,
    pub cubes: Vec<Cube>,
    pub elements: Vec<PosetElement>,
}

impl FacePoset {
    /// Containment order: within a cube, a cell is below another when both
    /// of its spanning sets are contained in the other's.
    pub fn leq(&self, a: &PosetElement, b: &PosetElement) -> bool {
        a.cube == b.cube && a.x & !b.x == 0 && a.y & !b.y == 0
    }

    /// Number of elements with the given summand dimensions.
    pub fn count_with_dims(&self, i: usize, j: usize) -> u64 {
        self.elements
            .iter()
            .filter(|e| e.dims == (i, j))
            .count() as u64
    }
}

/// Build the face poset of a matroid: group the top-degree cells by the
/// Dawson interval containing X, check that each group shares its base and
/// fills the interval, and enumerate each cube's faces.
pub fn face_poset(m: &Polymatroid, order: &ElementOrder) -> Result<FacePoset> {
    if !m.is_matroid() {
        return Err(Error::NotAMatroid);
    }
    let faces = top_degree_faces(m, order)?;
    let intervals = dawson_partition(m, order)?;
    let full = m.ground().full();
    let meet_bit = 1u32 << (order.min_element() - 1);

    let mut cubes = Vec::new();
    let mut elements = Vec::new();
    for (cube_index, interval) in intervals.iter().enumerate() {
        let mut vertices = Vec::new();
        for (face_index, face) in faces.iter().enumerate() {
            if interval.contains(face.partition.x) {
                vertices.push(face_index);
                // The shared base of the cube is the interval's basis.
                let as_mask: Subset = face
                    .base
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .fold(0, |acc, (i, _)| acc | 1 << i);
                if as_mask != interval.basis || face.base.coords().iter().any(|&c| c > 1) {
                    return Err(Error::Internal(format!(
                        "face at X = {} has base {:?}, cube basis {}",
                        subset_to_string(face.partition.x),
                        face.base.coords(),
                        subset_to_string(interval.basis)
                    )));
                }
            }
        }
        let free: Vec<usize> =
            subset_elements(interval.upper & !interval.lower & !meet_bit).collect();
        let dim = free.len();
        if vertices.len() != 1 << dim {
            return Err(Error::Internal(format!(
                "interval [{}, {}] holds {} faces, expected {}",
                subset_to_string(interval.lower),
                subset_to_string(interval.upper),
                vertices.len(),
                1 << dim
            )));
        }
        // Each cube face assigns every free element to the X side, the Y
        // side, or neither (an intersection direction).
        let x_fixed = interval.lower | meet_bit;
        let y_fixed = (full & !interval.upper) | meet_bit;
        let mut assignment = vec![0u8; dim];
        loop {
            let mut x = x_fixed;
            let mut y = y_fixed;
            for (slot, &e) in assignment.iter().zip(free.iter()) {
                match slot {
                    0 => x |= 1 << (e - 1),
                    1 => y |= 1 << (e - 1),
                    _ => {}
                }
            }
            elements.push(PosetElement {
                x,
                y,
                basis: interval.basis,
                dims: (
                    y.count_ones() as usize - 1,
                    x.count_ones() as usize - 1,
                ),
                cube: cube_index,
            });
            // Advance the base-3 counter.
            let mut pos = 0;
            loop {
                if pos == dim {
                    break;
                }
                assignment[pos] += 1;
                if assignment[pos] < 3 {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
            if pos == dim {
                break;
            }
        }
        cubes.push(Cube {
            interval: interval.clone(),
            dim,
            vertices,
        });
    }
    Ok(FacePoset {
        faces,
        cubes,
        elements,
    })
}

/// One row of the coefficient comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientEntry {
    pub i: usize,
    pub j: usize,
    pub coefficient: BigInt,
    pub cell_count: u64,
    pub magnitude_ok: bool,
    pub sign_ok: bool,
}

/// Comparison of poset cell counts against the coefficients of Q'.
#[derive(Debug, Clone)]
pub struct CoefficientReport {
    pub entries: Vec<CoefficientEntry>,
    pub all_match: bool,
}

/// For every (i, j), compare the number of poset cells with summand
/// dimensions (i, j) against |[x^i y^j] Q'|, and the coefficient's sign
/// against the alternation pattern (-1)^((n-1)-(i+j)).
pub fn coefficient_check(m: &Polymatroid) -> Result<CoefficientReport> {
    let order = ElementOrder::natural(m.n());
    let poset = face_poset(m, &order)?;
    let q = qprime(m)?;
    let n = m.n();

    let mut entries = Vec::new();
    let mut all_match = true;
    for i in 0..n {
        for j in 0..n {
            let coefficient = q.coefficient(i as u32, j as u32);
            let cell_count = poset.count_with_dims(i, j);
            if coefficient.is_zero() && cell_count == 0 {
                continue;
            }
            let magnitude_ok = coefficient.abs() == BigInt::from(cell_count);
            let expected_negative = ((n - 1) - (i + j)) % 2 == 1;
            let sign_ok =
                coefficient.is_zero() || (coefficient.is_negative() == expected_negative);
            all_match &= magnitude_ok && sign_ok;
            entries.push(CoefficientEntry {
                i,
                j,
                coefficient,
                cell_count,
                magnitude_ok,
                sign_ok,
            });
        }
    }
    Ok(CoefficientReport { entries, all_match })
}

/// Slack-form membership of a lattice point in a top-degree cell: with
/// `w = z - base`, require `w >= 0` on `X - meet`, `w <= 0` on `Y - meet`,
/// `w = 0` off `X + Y`, nonnegative leftover simplex budgets
/// `u - sum(w on X - meet)` and `t + sum(w on Y - meet)`, and the meet
/// coordinate equal to their difference.
pub fn face_contains_point(
    face_x: Subset,
    face_y: Subset,
    base: &[i64],
    meet: usize,
    t: i64,
    u: i64,
    z: &[i64],
) -> bool {
    let meet_bit = 1u32 << (meet - 1);
    let mut x_load = 0i64;
    let mut y_load = 0i64;
    for (idx, (&zi, &bi)) in z.iter().zip(base.iter()).enumerate() {
        let bit = 1u32 << idx;
        let w = zi - bi;
        if bit == meet_bit {
            continue;
        }
        if face_x & bit != 0 {
            if w < 0 {
                return false;
            }
            x_load += w;
        } else if face_y & bit != 0 {
            if w > 0 {
                return false;
            }
            y_load += w;
        } else if w != 0 {
            return false;
        }
    }
    let u_slack = u - x_load;
    let t_slack = t + y_load;
    if u_slack < 0 || t_slack < 0 {
        return false;
    }
    z[meet - 1] - base[meet - 1] == u_slack - t_slack
}

/// Coverage report: which lattice points of the sum lie in no top-degree
/// cell.
#[derive(Debug, Clone)]
pub struct CoverageReport {
    pub t: i64,
    pub u: i64,
    pub total_points: usize,
    pub uncovered: Vec<Vec<i64>>,
}

impl CoverageReport {
    pub fn covered(&self) -> bool {
        self.uncovered.is_empty()
    }
}

/// Check that every lattice point of the sum lies in some top-degree cell.
/// Holds for matroids; the doubled-rank polymatroid is the canonical
/// counterexample.
pub fn coverage_check(m: &Polymatroid, t: i64, u: i64) -> Result<CoverageReport> {
    if t < 1 || u < 1 {
        return Err(Error::InvalidParams(
            "coverage needs positive scale parameters".into(),
        ));
    }
    let order = ElementOrder::natural(m.n());
    let meet = order.min_element();
    let faces = top_degree_faces(m, &order)?;
    let points = enumerate_sum_points(m, t, u);
    let total_points = points.len();
    let uncovered: Vec<Vec<i64>> = points
        .into_iter()
        .filter(|z| {
            !faces.iter().any(|f| {
                face_contains_point(f.partition.x, f.partition.y, f.base.coords(), meet, t, u, z)
            })
        })
        .collect();
    Ok(CoverageReport {
        t,
        u,
        total_points,
        uncovered,
    })
}

/// True when every nonzero coefficient of x^i y^j has sign
/// (-1)^((n-1)-(i+j)).
pub fn sign_alternation_check(q: &BivarPoly, n: usize) -> bool {
    q.terms().all(|(i, j, c)| {
        let expected_negative = (n - 1 - (i + j) as usize) % 2 == 1;
        c.is_negative() == expected_negative
    })
}

//! Transfer-based activities of integer bases, classic matroid activities,
//! the internal and external generating polynomials, the activity form of
//! the Tutte polynomial, and Dawson partitions.
//!
//! An element order is a first-class parameter everywhere: "smaller" always
//! means smaller under the supplied order, defaulting to the natural order.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::core::{subset_to_string, Polymatroid, Subset};
use crate::error::{Error, Result};
use crate::lattice::{enumerate_bases, is_base, BaseVector};
use crate::poly::{BivarPoly, UniPoly};

use num_bigint::BigInt;
use num_traits::One;

/// A total order on the ground set elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementOrder {
    // seq[k] is the element (1-based) at position k, smallest first.
    seq: Vec<usize>,
    // pos[e - 1] is the position of element e.
    pos: Vec<usize>,
}

impl ElementOrder {
    pub fn natural(n: usize) -> Self {
        Self::from_seq((1..=n).collect()).expect("identity is a permutation")
    }

    pub fn reversed(n: usize) -> Self {
        Self::from_seq((1..=n).rev().collect()).expect("reversal is a permutation")
    }

    /// Build from the element sequence listed smallest first.
    pub fn from_seq(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n];
        for (k, &e) in seq.iter().enumerate() {
            if e < 1 || e > n || pos[e - 1] != usize::MAX {
                return Err(Error::InvalidParams(format!(
                    "{seq:?} is not a permutation of 1..={n}"
                )));
            }
            pos[e - 1] = k;
        }
        Ok(ElementOrder { seq, pos })
    }

    pub fn shuffled(n: usize, rng: &mut impl Rng) -> Self {
        let mut seq: Vec<usize> = (1..=n).collect();
        seq.shuffle(rng);
        Self::from_seq(seq).expect("shuffle keeps a permutation")
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn position(&self, element: usize) -> usize {
        self.pos[element - 1]
    }

    pub fn is_smaller(&self, a: usize, b: usize) -> bool {
        self.position(a) < self.position(b)
    }

    /// The order-minimal element.
    pub fn min_element(&self) -> usize {
        self.seq[0]
    }

    /// Elements smaller than `e`, in order.
    pub fn smaller_than(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        self.seq[..self.position(e)].iter().copied()
    }

    /// Remap a subset mask to positions under this order, so that mask
    /// comparison realizes the lexicographic order on the power set.
    pub fn position_mask(&self, subset: Subset) -> Subset {
        crate::core::subset_elements(subset).fold(0, |m, e| m | 1 << self.position(e))
    }
}

/// Activities of one integer base under a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivityRecord {
    pub base: BaseVector,
    pub internal_active: Subset,
    pub external_active: Subset,
}

impl ActivityRecord {
    /// Number of internally inactive elements.
    pub fn internal_inactive(&self, n: usize) -> usize {
        n - self.internal_active.count_ones() as usize
    }

    /// Number of externally inactive elements.
    pub fn external_inactive(&self, n: usize) -> usize {
        n - self.external_active.count_ones() as usize
    }
}

/// Transfer possibility table: entry (u, v) (0-based) says whether moving
/// one unit from u to v lands on another base. A transfer from u to v is
/// possible iff x_u > 0 and no subset containing v but not u is tight.
pub(crate) fn transfer_table(m: &Polymatroid, x: &BaseVector) -> Vec<Vec<bool>> {
    let n = m.n();
    let full = m.ground().full();
    // slack[v][u] = min over subsets S with v in S, u not in S of r(S) - x(S).
    let mut sums = vec![0i64; (full + 1) as usize];
    for s in 1..=full {
        let low = s.trailing_zeros() as usize;
        sums[s as usize] = sums[(s & (s - 1)) as usize] + x.coords()[low];
    }
    let mut possible = vec![vec![false; n]; n];
    for u in 0..n {
        if x.coords()[u] == 0 {
            continue;
        }
        for (v, row_ok) in (0..n).map(|v| {
            if v == u {
                return (v, false);
            }
            let ok = (0..=full)
                .filter(|s| s >> v & 1 == 1 && s >> u & 1 == 0)
                .all(|s| m.rank(s) - sums[s as usize] >= 1);
            (v, ok)
        }) {
            possible[u][v] = row_ok;
        }
    }
    possible
}

/// All ordered pairs (u1, u2) such that moving one unit from u1 to u2 lands
/// on another base.
pub fn transfers(m: &Polymatroid, x: &BaseVector) -> Result<Vec<(usize, usize)>> {
    if !is_base(m, x.coords()) {
        return Err(Error::NotABase(format!("{:?}", x.coords())));
    }
    let table = transfer_table(m, x);
    let n = m.n();
    let mut out = Vec::new();
    for u1 in 1..=n {
        for u2 in 1..=n {
            if table[u1 - 1][u2 - 1] {
                out.push((u1, u2));
            }
        }
    }
    Ok(out)
}

/// Active sets of a base: u is internally active when no transfer moves a
/// unit from u to a smaller element, externally active when no transfer
/// moves a unit from a smaller element to u.
pub fn activity_record(
    m: &Polymatroid,
    x: &BaseVector,
    order: &ElementOrder,
) -> Result<ActivityRecord> {
    if !is_base(m, x.coords()) {
        return Err(Error::NotABase(format!("{:?}", x.coords())));
    }
    let table = transfer_table(m, x);
    let n = m.n();
    let mut internal = 0u32;
    let mut external = 0u32;
    for u in 1..=n {
        let int_active = order.smaller_than(u).all(|v| !table[u - 1][v - 1]);
        let ext_active = order.smaller_than(u).all(|v| !table[v - 1][u - 1]);
        if int_active {
            internal |= 1 << (u - 1);
        }
        if ext_active {
            external |= 1 << (u - 1);
        }
    }
    Ok(ActivityRecord {
        base: x.clone(),
        internal_active: internal,
        external_active: external,
    })
}

/// Generating polynomial of internally inactive counts over all bases.
/// Independent of the order; computed under the natural order.
pub fn internal_polynomial(m: &Polymatroid) -> UniPoly {
    internal_polynomial_with_order(m, &ElementOrder::natural(m.n()))
}

pub fn internal_polynomial_with_order(m: &Polymatroid, order: &ElementOrder) -> UniPoly {
    let n = m.n();
    let mut p = UniPoly::zero();
    for x in enumerate_bases(m) {
        let rec = activity_record(m, &x, order).expect("enumerated vector is a base");
        p.add_term(rec.internal_inactive(n), BigInt::one());
    }
    p
}

/// Generating polynomial of externally inactive counts over all bases.
pub fn external_polynomial(m: &Polymatroid) -> UniPoly {
    external_polynomial_with_order(m, &ElementOrder::natural(m.n()))
}

pub fn external_polynomial_with_order(m: &Polymatroid, order: &ElementOrder) -> UniPoly {
    let n = m.n();
    let mut p = UniPoly::zero();
    for x in enumerate_bases(m) {
        let rec = activity_record(m, &x, order).expect("enumerated vector is a base");
        p.add_term(rec.external_inactive(n), BigInt::one());
    }
    p
}

/// The specialization `xi^(n-1) Q'(1/xi, 1)` as a univariate polynomial;
/// the internal polynomial equals it.
pub fn internal_identity_rhs(q: &BivarPoly, n: usize) -> UniPoly {
    let mut p = UniPoly::zero();
    for (i, _, c) in q.terms() {
        p.add_term(n - 1 - i as usize, c.clone());
    }
    p
}

/// The specialization `eta^(n-1) Q'(1, 1/eta)`; the external polynomial
/// equals it.
pub fn external_identity_rhs(q: &BivarPoly, n: usize) -> UniPoly {
    let mut p = UniPoly::zero();
    for (_, j, c) in q.terms() {
        p.add_term(n - 1 - j as usize, c.clone());
    }
    p
}

/// True when the subset mask is a basis of the matroid.
pub fn is_basis(m: &Polymatroid, b: Subset) -> bool {
    m.is_matroid() && b.count_ones() as i64 == m.full_rank() && m.rank(b) == m.full_rank()
}

/// All basis subsets of a matroid, in mask order.
pub fn basis_subsets(m: &Polymatroid) -> Result<Vec<Subset>> {
    if !m.is_matroid() {
        return Err(Error::NotAMatroid);
    }
    Ok(m.ground().subsets().filter(|&b| is_basis(m, b)).collect())
}

/// The unique circuit inside `basis + e`, for `e` outside the basis:
/// those elements whose removal keeps the set spanning.
pub fn fundamental_circuit(m: &Polymatroid, basis: Subset, e: usize) -> Subset {
    let with_e = basis | 1 << (e - 1);
    let r = m.full_rank();
    crate::core::subset_elements(with_e)
        .filter(|&x| m.rank(with_e & !(1 << (x - 1))) == r)
        .fold(0, |acc, x| acc | 1 << (x - 1))
}

/// Classic matroid activities of a basis subset: e outside B is externally
/// active when it is the order-smallest element of its fundamental circuit;
/// e in B is internally active when it is the order-smallest element of its
/// fundamental cocircuit (computed as a circuit of the 1-dual).
pub fn classic_activities(
    m: &Polymatroid,
    basis: Subset,
    order: &ElementOrder,
) -> Result<(Subset, Subset)> {
    if !m.is_matroid() {
        return Err(Error::NotAMatroid);
    }
    let dual = m.s_dual(1)?;
    classic_activities_with_dual(m, &dual, basis, order)
}

fn classic_activities_with_dual(
    m: &Polymatroid,
    dual: &Polymatroid,
    basis: Subset,
    order: &ElementOrder,
) -> Result<(Subset, Subset)> {
    if !is_basis(m, basis) {
        return Err(Error::NotABasis(subset_to_string(basis)));
    }
    let full = m.ground().full();
    let co_basis = full & !basis;
    let mut internal = 0u32;
    let mut external = 0u32;
    for e in m.ground().elements() {
        let bit = 1 << (e - 1);
        if basis & bit != 0 {
            let cocircuit = fundamental_circuit(dual, co_basis, e);
            if smallest_element(cocircuit, order) == Some(e) {
                internal |= bit;
            }
        } else {
            let circuit = fundamental_circuit(m, basis, e);
            if smallest_element(circuit, order) == Some(e) {
                external |= bit;
            }
        }
    }
    Ok((internal, external))
}

fn smallest_element(subset: Subset, order: &ElementOrder) -> Option<usize> {
    crate::core::subset_elements(subset).min_by_key(|&e| order.position(e))
}

/// The Tutte polynomial as the activity generating function
/// `sum over bases of x^(internal activity) y^(external activity)`.
pub fn tutte_from_activities(m: &Polymatroid) -> Result<BivarPoly> {
    let order = ElementOrder::natural(m.n());
    let dual = m.s_dual(1).map_err(|_| Error::NotAMatroid)?;
    let mut t = BivarPoly::zero();
    for basis in basis_subsets(m)? {
        let (int, ext) = classic_activities_with_dual(m, &dual, basis, &order)?;
        t.add_term(int.count_ones(), ext.count_ones(), BigInt::one());
    }
    Ok(t)
}

/// One interval of a Dawson partition, generated by a matroid basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DawsonInterval {
    /// B minus its internally active elements.
    pub lower: Subset,
    /// B plus its externally active elements.
    pub upper: Subset,
    /// The generating basis.
    pub basis: Subset,
}

impl DawsonInterval {
    pub fn contains(&self, subset: Subset) -> bool {
        self.lower & !subset == 0 && subset & !self.upper == 0
    }
}

/// The Dawson partition of the power set into lex-ordered intervals
/// `[B - Int(B), B + Ext(B)]`, one per basis. The partition property and
/// the lex condition are verified before returning.
pub fn dawson_partition(m: &Polymatroid, order: &ElementOrder) -> Result<Vec<DawsonInterval>> {
    let dual = m.s_dual(1).map_err(|_| Error::NotAMatroid)?;
    let mut intervals = Vec::new();
    for basis in basis_subsets(m)? {
        let (int, ext) = classic_activities_with_dual(m, &dual, basis, order)?;
        intervals.push(DawsonInterval {
            lower: basis & !int,
            upper: basis | ext,
            basis,
        });
    }
    // Every subset must land in exactly one interval.
    for s in m.ground().subsets() {
        let hits = intervals.iter().filter(|iv| iv.contains(s)).count();
        if hits != 1 {
            return Err(Error::Internal(format!(
                "subset {} lies in {} intervals",
                subset_to_string(s),
                hits
            )));
        }
    }
    intervals.sort_by_key(|iv| order.position_mask(iv.lower));
    for pair in intervals.windows(2) {
        if order.position_mask(pair[0].upper) >= order.position_mask(pair[1].upper) {
            return Err(Error::Internal(
                "interval upper ends are not in lex order".into(),
            ));
        }
    }
    Ok(intervals)
}

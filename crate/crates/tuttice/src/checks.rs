//! Named verification checks behind a common trait, registered in a fixed
//! order and replayed against a polymatroid by `verify`. Each check carries
//! the identity it executes as a human-readable statement; a check either
//! passes, fails with a witness, or is skipped when the input is outside
//! its scope.

use std::cell::OnceCell;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::activity::{
    dawson_partition, external_identity_rhs, external_polynomial,
    external_polynomial_with_order, internal_identity_rhs, internal_polynomial,
    internal_polynomial_with_order, tutte_from_activities, ElementOrder,
};
use crate::core::{Polymatroid, RankFunction};
use crate::error::Result;
use crate::lattice::{count_lattice_points, enumerate_bases};
use crate::poly::{
    qpoly, qprime, qprime_from_tutte, series_identity_check, tutte_corank_nullity,
    tutte_from_qprime, BivarPoly,
};
use crate::subdivision::{
    coefficient_check, coverage_check, sign_alternation_check, top_degree_faces,
};

/// How much work `verify` does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

/// Tunables shared by all checks.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub level: Level,
    /// Truncation order of the generating-function comparison.
    pub series_order: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            level: Level::Quick,
            series_order: 6,
        }
    }
}

/// Lazily shared per-run artifacts, so several checks reuse one count.
pub struct CheckContext<'a> {
    pub m: &'a Polymatroid,
    pub cfg: &'a VerifyConfig,
    qprime: OnceCell<Result<BivarPoly>>,
    tutte: OnceCell<Result<BivarPoly>>,
}

impl<'a> CheckContext<'a> {
    fn new(m: &'a Polymatroid, cfg: &'a VerifyConfig) -> Self {
        CheckContext {
            m,
            cfg,
            qprime: OnceCell::new(),
            tutte: OnceCell::new(),
        }
    }

    pub fn qprime(&self) -> Result<BivarPoly> {
        self.qprime.get_or_init(|| qprime(self.m)).clone()
    }

    pub fn tutte(&self) -> Result<BivarPoly> {
        self.tutte
            .get_or_init(|| tutte_corank_nullity(self.m))
            .clone()
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub statement: &'static str,
    pub status: CheckStatus,
    /// Failure witness or skip reason.
    pub detail: Option<String>,
}

/// Report of a whole verification run.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub results: Vec<CheckResult>,
}

impl VerificationReport {
    /// Overall status: pass iff no executed check failed.
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != CheckStatus::Fail)
    }
}

/// A named, self-describing verification check.
pub trait Check {
    fn name(&self) -> &'static str;
    /// The identity the check executes, in mathematical notation.
    fn statement(&self) -> &'static str;
    /// Whether the check makes sense for this input; when false the check
    /// is reported as skipped with this reason.
    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str>;
    /// Full-level only checks are skipped at quick level.
    fn full_only(&self) -> bool {
        false
    }
    /// Ok(()) is a pass; Err carries the witness.
    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String>;
}

fn matroid_only(m: &Polymatroid) -> std::result::Result<(), &'static str> {
    if m.is_matroid() {
        Ok(())
    } else {
        Err("matroid-only identity")
    }
}

fn size_cap(m: &Polymatroid, cap: usize) -> std::result::Result<(), &'static str> {
    if m.n() <= cap {
        Ok(())
    } else {
        Err("ground set too large for this check")
    }
}

struct Axioms;

impl Check for Axioms {
    fn name(&self) -> &'static str {
        "axioms"
    }

    fn statement(&self) -> &'static str {
        "r(empty) = 0, r monotone, r submodular"
    }

    fn applies(&self, _m: &Polymatroid) -> std::result::Result<(), &'static str> {
        Ok(())
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        RankFunction::from_table(cx.m.n(), cx.m.rank_fn().table().to_vec())
            .map(|_| ())
            .map_err(|e| e.to_string())
    }
}

struct BaseCount;

impl Check for BaseCount {
    fn name(&self) -> &'static str {
        "base-count"
    }

    fn statement(&self) -> &'static str {
        "Q(0,0) = #bases"
    }

    fn applies(&self, _m: &Polymatroid) -> std::result::Result<(), &'static str> {
        Ok(())
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let count = count_lattice_points(cx.m, 0, 0).map_err(|e| e.to_string())?;
        let bases = enumerate_bases(cx.m).len() as u64;
        if count == bases {
            Ok(())
        } else {
            Err(format!("Q(0,0) = {count}, #bases = {bases}"))
        }
    }
}

struct DegreeBound;

impl Check for DegreeBound {
    fn name(&self) -> &'static str {
        "degree-bound"
    }

    fn statement(&self) -> &'static str {
        "binomial coefficients c_ij vanish for i + j >= n"
    }

    fn applies(&self, _m: &Polymatroid) -> std::result::Result<(), &'static str> {
        Ok(())
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        qpoly(cx.m).map(|_| ()).map_err(|e| e.to_string())
    }
}

struct InternalIdentity;

impl Check for InternalIdentity {
    fn name(&self) -> &'static str {
        "internal-activity-identity"
    }

    fn statement(&self) -> &'static str {
        "I(xi) = xi^(n-1) Q'(1/xi, 1)"
    }

    fn applies(&self, _m: &Polymatroid) -> std::result::Result<(), &'static str> {
        Ok(())
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let q = cx.qprime().map_err(|e| e.to_string())?;
        let lhs = internal_polynomial(cx.m);
        let rhs = internal_identity_rhs(&q, cx.m.n());
        if lhs == rhs {
            Ok(())
        } else {
            Err(format!(
                "I = {}, specialization = {}",
                lhs.pretty("xi"),
                rhs.pretty("xi")
            ))
        }
    }
}

struct ExternalIdentity;

impl Check for ExternalIdentity {
    fn name(&self) -> &'static str {
        "external-activity-identity"
    }

    fn statement(&self) -> &'static str {
        "X(eta) = eta^(n-1) Q'(1, 1/eta)"
    }

    fn applies(&self, _m: &Polymatroid) -> std::result::Result<(), &'static str> {
        Ok(())
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let q = cx.qprime().map_err(|e| e.to_string())?;
        let lhs = external_polynomial(cx.m);
        let rhs = external_identity_rhs(&q, cx.m.n());
        if lhs == rhs {
            Ok(())
        } else {
            Err(format!(
                "X = {}, specialization = {}",
                lhs.pretty("eta"),
                rhs.pretty("eta")
            ))
        }
    }
}

struct OrderIndependence;

impl Check for OrderIndependence {
    fn name(&self) -> &'static str {
        "activity-order-independence"
    }

    fn statement(&self) -> &'static str {
        "I and X are unchanged under element reorderings"
    }

    fn applies(&self, _m: &Polymatroid) -> std::result::Result<(), &'static str> {
        Ok(())
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let n = cx.m.n();
        let base_i = internal_polynomial(cx.m);
        let base_x = external_polynomial(cx.m);
        let mut rng = ChaCha8Rng::seed_from_u64(0xac71);
        let mut orders = vec![ElementOrder::reversed(n)];
        for _ in 0..3 {
            orders.push(ElementOrder::shuffled(n, &mut rng));
        }
        for order in orders {
            if internal_polynomial_with_order(cx.m, &order) != base_i
                || external_polynomial_with_order(cx.m, &order) != base_x
            {
                return Err(format!("order-dependent activity counts under {order:?}"));
            }
        }
        Ok(())
    }
}

struct CorankAgreement;

impl Check for CorankAgreement {
    fn name(&self) -> &'static str {
        "tutte-corank-agreement"
    }

    fn statement(&self) -> &'static str {
        "lattice-point Tutte = corank-nullity Tutte"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        matroid_only(m)
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let q = cx.qprime().map_err(|e| e.to_string())?;
        let via_counts =
            tutte_from_qprime(cx.m.n(), cx.m.full_rank(), &q).map_err(|e| e.to_string())?;
        let direct = cx.tutte().map_err(|e| e.to_string())?;
        if via_counts == direct {
            Ok(())
        } else {
            Err(format!("lattice route {via_counts}, corank-nullity {direct}"))
        }
    }
}

struct ActivityAgreement;

impl Check for ActivityAgreement {
    fn name(&self) -> &'static str {
        "tutte-activity-agreement"
    }

    fn statement(&self) -> &'static str {
        "activity Tutte = corank-nullity Tutte"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        matroid_only(m)
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let via_activities = tutte_from_activities(cx.m).map_err(|e| e.to_string())?;
        let direct = cx.tutte().map_err(|e| e.to_string())?;
        if via_activities == direct {
            Ok(())
        } else {
            Err(format!(
                "activity route {via_activities}, corank-nullity {direct}"
            ))
        }
    }
}

struct RoundTrip;

impl Check for RoundTrip {
    fn name(&self) -> &'static str {
        "tutte-roundtrip"
    }

    fn statement(&self) -> &'static str {
        "T -> Q' -> T and Q' -> T -> Q' are identities"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        matroid_only(m)
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let n = cx.m.n();
        let r = cx.m.full_rank();
        let t = cx.tutte().map_err(|e| e.to_string())?;
        let q = cx.qprime().map_err(|e| e.to_string())?;
        let q2 = qprime_from_tutte(n, r, &t).map_err(|e| e.to_string())?;
        if q2 != q {
            return Err(format!("T -> Q' gave {q2}, counted Q' is {q}"));
        }
        let t2 = tutte_from_qprime(n, r, &q2).map_err(|e| e.to_string())?;
        if t2 != t {
            return Err(format!("round trip gave {t2}, expected {t}"));
        }
        Ok(())
    }
}

struct SeriesIdentity;

impl Check for SeriesIdentity {
    fn name(&self) -> &'static str {
        "series-identity"
    }

    fn statement(&self) -> &'static str {
        "sum of Q(t,u) v^t w^u matches T((1-vw)/(1-v), (1-vw)/(1-w)) / ((1-v)^(n-r)(1-w)^r(1-vw))"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        matroid_only(m).and_then(|()| size_cap(m, 8))
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let report = series_identity_check(cx.m, cx.cfg.series_order).map_err(|e| e.to_string())?;
        match report.first_mismatch {
            None => Ok(()),
            Some((t, u, lhs, rhs)) => Err(format!(
                "coefficient of v^{t} w^{u}: counts say {lhs}, closed form says {rhs}"
            )),
        }
    }
}

struct SignAlternation;

impl Check for SignAlternation {
    fn name(&self) -> &'static str {
        "sign-alternation"
    }

    fn statement(&self) -> &'static str {
        "sign of [x^i y^j] Q' is (-1)^((n-1)-(i+j))"
    }

    fn applies(&self, _m: &Polymatroid) -> std::result::Result<(), &'static str> {
        Ok(())
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let q = cx.qprime().map_err(|e| e.to_string())?;
        if sign_alternation_check(&q, cx.m.n()) {
            Ok(())
        } else {
            Err(format!("signs of {q} do not alternate"))
        }
    }
}

struct TopDegreeShape;

impl Check for TopDegreeShape {
    fn name(&self) -> &'static str {
        "top-degree-shape"
    }

    fn statement(&self) -> &'static str {
        "the degree-(n-1) part of Q' is (x+y)^(n-1)"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        matroid_only(m)
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let q = cx.qprime().map_err(|e| e.to_string())?;
        let n = cx.m.n() as u32;
        let top = q.homogeneous_part(n - 1);
        let expected = BivarPoly::from_terms([
            (1u32, 0u32, BigInt::from(1)),
            (0, 1, BigInt::from(1)),
        ])
        .pow(n - 1);
        if top == expected {
            Ok(())
        } else {
            Err(format!("top part is {top}"))
        }
    }
}

struct TopDegreeCount;

impl Check for TopDegreeCount {
    fn name(&self) -> &'static str {
        "top-degree-count"
    }

    fn statement(&self) -> &'static str {
        "2^(n-1) top-degree cells, each with a unique activity-selected base"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        matroid_only(m)
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let faces =
            top_degree_faces(cx.m, &ElementOrder::natural(cx.m.n())).map_err(|e| e.to_string())?;
        let expected = 1usize << (cx.m.n() - 1);
        if faces.len() == expected {
            Ok(())
        } else {
            Err(format!("{} cells, expected {expected}", faces.len()))
        }
    }
}

struct CoefficientCounts;

impl Check for CoefficientCounts {
    fn name(&self) -> &'static str {
        "coefficient-counts"
    }

    fn statement(&self) -> &'static str {
        "#cells of dims (i,j) = |[x^i y^j] Q'| with alternating signs"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        matroid_only(m)
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let report = coefficient_check(cx.m).map_err(|e| e.to_string())?;
        if report.all_match {
            Ok(())
        } else {
            let bad: Vec<String> = report
                .entries
                .iter()
                .filter(|e| !(e.magnitude_ok && e.sign_ok))
                .map(|e| {
                    format!(
                        "(i={}, j={}): coefficient {}, {} cells",
                        e.i, e.j, e.coefficient, e.cell_count
                    )
                })
                .collect();
            Err(bad.join("; "))
        }
    }
}

struct DawsonPartitionValid;

impl Check for DawsonPartitionValid {
    fn name(&self) -> &'static str {
        "dawson-partition"
    }

    fn statement(&self) -> &'static str {
        "the intervals [B - Int(B), B + Ext(B)] partition the power set in lex order"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        matroid_only(m)
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        dawson_partition(cx.m, &ElementOrder::natural(cx.m.n()))
            .map(|_| ())
            .map_err(|e| e.to_string())
    }
}

struct DualitySwap;

impl Check for DualitySwap {
    fn name(&self) -> &'static str {
        "duality-swap"
    }

    fn statement(&self) -> &'static str {
        "Q'(dual; x, y) = Q'(M; y, x)"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        size_cap(m, 7)
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let s = cx
            .m
            .ground()
            .elements()
            .map(|e| cx.m.rank(1 << (e - 1)))
            .max()
            .unwrap();
        let dual = cx.m.s_dual(s).map_err(|e| e.to_string())?;
        let q_dual = qprime(&dual).map_err(|e| e.to_string())?;
        let q = cx.qprime().map_err(|e| e.to_string())?;
        if q_dual == q.swap_vars() {
            Ok(())
        } else {
            Err(format!("dual gives {q_dual}, swapped original is {}", q.swap_vars()))
        }
    }
}

struct DirectSum;

impl Check for DirectSum {
    fn name(&self) -> &'static str {
        "direct-sum"
    }

    fn statement(&self) -> &'static str {
        "Q'(M + U(1,2)) / (x+y-1) = Q'(M) Q'(U(1,2))"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        size_cap(m, 6)
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let partner = Polymatroid::uniform(1, 2).expect("valid uniform");
        let sum = cx.m.direct_sum(&partner).map_err(|e| e.to_string())?;
        let q_sum = qprime(&sum).map_err(|e| e.to_string())?;
        let q = cx.qprime().map_err(|e| e.to_string())?;
        let q_partner = qprime(&partner).map_err(|e| e.to_string())?;
        let lhs = q_sum
            .div_exact(&BivarPoly::xy_minus_one())
            .map_err(|e| e.to_string())?;
        let rhs = q.mul(&q_partner);
        if lhs == rhs {
            Ok(())
        } else {
            Err(format!("Q'(sum)/(x+y-1) = {lhs}, product = {rhs}"))
        }
    }
}

struct LoopColoop;

impl Check for LoopColoop {
    fn name(&self) -> &'static str {
        "loop-coloop"
    }

    fn statement(&self) -> &'static str {
        "adding a loop or coloop multiplies Q' by (x+y-1)"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        size_cap(m, 7)
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let q = cx.qprime().map_err(|e| e.to_string())?;
        let expected = q.mul(&BivarPoly::xy_minus_one());
        for (label, extension) in [
            ("loop", Polymatroid::uniform(0, 1).expect("valid")),
            ("coloop", Polymatroid::uniform(1, 1).expect("valid")),
        ] {
            let extended = cx.m.direct_sum(&extension).map_err(|e| e.to_string())?;
            let q_ext = qprime(&extended).map_err(|e| e.to_string())?;
            if q_ext != expected {
                return Err(format!(
                    "{label} extension gives {q_ext}, expected {expected}"
                ));
            }
        }
        Ok(())
    }
}

struct Relaxation;

impl Check for Relaxation {
    fn name(&self) -> &'static str {
        "relaxation"
    }

    fn statement(&self) -> &'static str {
        "Q'(M) = Q'(relaxed M) - x^(n-r-1) y^(r-1)"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        matroid_only(m)?;
        size_cap(m, 7)?;
        if m.circuit_hyperplanes().is_empty() {
            Err("no circuit-hyperplane to relax")
        } else {
            Ok(())
        }
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let c = cx.m.circuit_hyperplanes()[0];
        let relaxed = cx.m.relax_circuit_hyperplane(c).map_err(|e| e.to_string())?;
        let q_relaxed = qprime(&relaxed).map_err(|e| e.to_string())?;
        let q = cx.qprime().map_err(|e| e.to_string())?;
        let n = cx.m.n() as u32;
        let r = cx.m.full_rank() as u32;
        let monomial = BivarPoly::monomial(n - r - 1, r - 1, BigInt::from(1));
        let rhs = q_relaxed.sub(&monomial);
        if q == rhs {
            Ok(())
        } else {
            Err(format!("Q' = {q}, relaxed difference = {rhs}"))
        }
    }
}

struct BetaSymmetry;

impl Check for BetaSymmetry {
    fn name(&self) -> &'static str {
        "beta-symmetry"
    }

    fn statement(&self) -> &'static str {
        "[x^1 y^0] T = [x^0 y^1] T for connected matroids"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        matroid_only(m)?;
        if m.n() < 2 {
            // T = x or T = y on one element; the symmetry starts at n = 2.
            Err("needs at least two elements")
        } else if m.is_connected() {
            Ok(())
        } else {
            Err("matroid is disconnected")
        }
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        let t = cx.tutte().map_err(|e| e.to_string())?;
        let b10 = t.coefficient(1, 0);
        let b01 = t.coefficient(0, 1);
        if b10 == b01 {
            Ok(())
        } else {
            Err(format!("beta coefficients differ: {b10} vs {b01}"))
        }
    }
}

struct SharedBase;

impl Check for SharedBase {
    fn name(&self) -> &'static str {
        "shared-base"
    }

    fn statement(&self) -> &'static str {
        "cells sharing a lattice point share their base, as do all cells between them"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        size_cap(m, 5)
    }

    fn full_only(&self) -> bool {
        true
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        use crate::lattice::enumerate_sum_points;
        use crate::subdivision::face_contains_point;
        let order = ElementOrder::natural(cx.m.n());
        let faces = top_degree_faces(cx.m, &order).map_err(|e| e.to_string())?;
        let (t, u) = (1, 1);
        let points = enumerate_sum_points(cx.m, t, u);
        let meet = order.min_element();
        for a in 0..faces.len() {
            for b in (a + 1)..faces.len() {
                let fa = &faces[a];
                let fb = &faces[b];
                let touching = points.iter().any(|z| {
                    face_contains_point(
                        fa.partition.x(),
                        fa.partition.y(),
                        fa.base.coords(),
                        meet,
                        t,
                        u,
                        z,
                    ) && face_contains_point(
                        fb.partition.x(),
                        fb.partition.y(),
                        fb.base.coords(),
                        meet,
                        t,
                        u,
                        z,
                    )
                });
                if !touching {
                    continue;
                }
                if fa.base != fb.base {
                    return Err(format!(
                        "cells at X = {:?} and X = {:?} meet but carry different bases",
                        fa.partition.x(),
                        fb.partition.x()
                    ));
                }
                // Every partition agreeing with both on their common parts
                // carries the same base.
                for fc in &faces {
                    let agrees_x = fa.partition.x() & fb.partition.x() & !fc.partition.x() == 0;
                    let agrees_y = fa.partition.y() & fb.partition.y() & !fc.partition.y() == 0;
                    if agrees_x && agrees_y && fc.base != fa.base {
                        return Err(format!(
                            "interpolating cell at X = {:?} has a different base",
                            fc.partition.x()
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

struct Coverage;

impl Check for Coverage {
    fn name(&self) -> &'static str {
        "coverage"
    }

    fn statement(&self) -> &'static str {
        "every lattice point of the sum lies in a top-degree cell, (t,u) in {(1,1),(2,1)}"
    }

    fn applies(&self, m: &Polymatroid) -> std::result::Result<(), &'static str> {
        size_cap(m, 6)
    }

    fn full_only(&self) -> bool {
        true
    }

    fn run(&self, cx: &CheckContext) -> std::result::Result<(), String> {
        for (t, u) in [(1, 1), (2, 1)] {
            let report = coverage_check(cx.m, t, u).map_err(|e| e.to_string())?;
            if !report.covered() {
                return Err(format!(
                    "{} of {} points uncovered at (t,u) = ({t},{u}), e.g. {:?}",
                    report.uncovered.len(),
                    report.total_points,
                    report.uncovered[0]
                ));
            }
        }
        Ok(())
    }
}

/// Every registered check, in report order.
pub fn all_checks() -> Vec<Box<dyn Check>> {
    vec![
        Box::new(Axioms),
        Box::new(BaseCount),
        Box::new(DegreeBound),
        Box::new(InternalIdentity),
        Box::new(ExternalIdentity),
        Box::new(OrderIndependence),
        Box::new(CorankAgreement),
        Box::new(ActivityAgreement),
        Box::new(RoundTrip),
        Box::new(SeriesIdentity),
        Box::new(SignAlternation),
        Box::new(TopDegreeShape),
        Box::new(TopDegreeCount),
        Box::new(CoefficientCounts),
        Box::new(DawsonPartitionValid),
        Box::new(SharedBase),
        Box::new(BetaSymmetry),
        Box::new(DualitySwap),
        Box::new(DirectSum),
        Box::new(LoopColoop),
        Box::new(Relaxation),
        Box::new(Coverage),
    ]
}

/// Run every applicable check against one polymatroid.
pub fn verify(m: &Polymatroid, cfg: &VerifyConfig) -> VerificationReport {
    let cx = CheckContext::new(m, cfg);
    let mut results = Vec::new();
    for check in all_checks() {
        let status = if check.full_only() && cfg.level == Level::Quick {
            CheckResult {
                name: check.name(),
                statement: check.statement(),
                status: CheckStatus::Skipped,
                detail: Some("full level only".to_string()),
            }
        } else {
            match check.applies(m) {
                Err(reason) => CheckResult {
                    name: check.name(),
                    statement: check.statement(),
                    status: CheckStatus::Skipped,
                    detail: Some(reason.to_string()),
                },
                Ok(()) => match check.run(&cx) {
                    Ok(()) => CheckResult {
                        name: check.name(),
                        statement: check.statement(),
                        status: CheckStatus::Pass,
                        detail: None,
                    },
                    Err(witness) => CheckResult {
                        name: check.name(),
                        statement: check.statement(),
                        status: CheckStatus::Fail,
                        detail: Some(witness),
                    },
                },
            }
        };
        results.push(status);
    }
    VerificationReport { results }
}

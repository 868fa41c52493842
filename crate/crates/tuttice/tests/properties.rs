//! Property-based invariants over randomly generated polymatroids.
//!
//! The generator builds rank tables as randomized truncations of sums of
//! weighted coverage functions, which are always submodular; matroid cases
//! come from the seeded corpus sampler. Axiom validation itself is
//! property-tested with random tables that are rejected unless they satisfy
//! the axioms.

use proptest::prelude::*;

use num_bigint::BigInt;

use tuttice::activity::{
    external_polynomial_with_order, internal_polynomial_with_order, ElementOrder,
};
use tuttice::core::Polymatroid;
use tuttice::error::Error;
use tuttice::lattice::{
    count_grid, count_lattice_points, decompose_point, enumerate_bases, is_sum_point,
};
use tuttice::poly::interpolate_binomial;

/// Sum of `min(cap_k, weighted size)` pieces: submodular by construction,
/// giving a valid polymatroid for any parameter choice.
fn truncated_coverage(n: usize, pieces: &[(i64, Vec<i64>)]) -> Polymatroid {
    let table: Vec<i64> = (0u32..(1 << n))
        .map(|s| {
            pieces
                .iter()
                .map(|(cap, weights)| {
                    let load: i64 = (0..n)
                        .filter(|b| s >> b & 1 == 1)
                        .map(|b| weights[b])
                        .sum();
                    load.min(*cap)
                })
                .sum()
        })
        .collect();
    Polymatroid::from_table(n, table).expect("truncated coverage sums are polymatroids")
}

fn polymatroid_strategy(max_n: usize) -> impl Strategy<Value = Polymatroid> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(
            (0i64..=4, proptest::collection::vec(0i64..=2, n)),
            1..=3,
        )
        .prop_map(move |pieces| truncated_coverage(n, &pieces))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Constructor outputs always satisfy the axioms on re-check, and the
    /// axiom checker rejects perturbed tables that break them.
    #[test]
    fn axiom_validation_round_trip(m in polymatroid_strategy(4), bump in 1i64..=3) {
        let table = m.rank_fn().table().to_vec();
        prop_assert!(Polymatroid::from_table(m.n(), table.clone()).is_ok());

        // Raising the empty set's rank always violates P1.
        let mut bad = table.clone();
        bad[0] = bump;
        let p1_caught = matches!(
            Polymatroid::from_table(m.n(), bad),
            Err(Error::AxiomViolation { .. })
        );
        prop_assert!(p1_caught);

        // Raising the full set's rank beyond its largest lower neighbor by
        // more than the total weight breaks monotonicity elsewhere or
        // submodularity; a gross bump is always caught.
        if m.n() >= 2 {
            let mut bad = table.clone();
            let full = bad.len() - 1;
            bad[full] += 100;
            prop_assert!(Polymatroid::from_table(m.n(), bad).is_err());
        }
    }

    /// The base set reconstructs the rank table exactly.
    #[test]
    fn from_bases_round_trip(m in polymatroid_strategy(4)) {
        let bases: Vec<Vec<i64>> = enumerate_bases(&m)
            .into_iter()
            .map(|b| b.into_coords())
            .collect();
        let rebuilt = Polymatroid::from_bases(&bases).unwrap();
        prop_assert_eq!(rebuilt.rank_fn().table(), m.rank_fn().table());
    }

    /// Counts are nondecreasing in each scale parameter.
    #[test]
    fn counts_monotone(m in polymatroid_strategy(4)) {
        let grid = count_grid(&m, 3, 3).unwrap();
        for t in 0..3 {
            for u in 0..4 {
                prop_assert!(grid[t + 1][u] >= grid[t][u]);
            }
        }
        for t in 0..4 {
            for u in 0..3 {
                prop_assert!(grid[t][u + 1] >= grid[t][u]);
            }
        }
    }

    /// The inequality description of the Minkowski sum agrees pointwise
    /// with the decomposition witness over the whole coordinate box.
    #[test]
    fn membership_equivalence(m in polymatroid_strategy(4), t in 0i64..=3, u in 0i64..=3) {
        let n = m.n();
        let hi: Vec<i64> = (0..n).map(|i| m.rank(1 << i) + u).collect();
        let mut z = vec![-t; n];
        let mut members = 0u64;
        loop {
            let member = is_sum_point(&m, t, u, &z);
            let witness = decompose_point(&m, t, u, &z);
            prop_assert_eq!(member, witness.is_some(), "at {:?}", z);
            if member {
                members += 1;
            }
            let mut idx = 0;
            loop {
                if idx == n {
                    break;
                }
                z[idx] += 1;
                if z[idx] <= hi[idx] {
                    break;
                }
                z[idx] = -t;
                idx += 1;
            }
            if idx == n {
                break;
            }
        }
        // The box covers the sum, so the member count is the exact count.
        prop_assert_eq!(members, count_lattice_points(&m, t, u).unwrap());
    }

    /// Counts fit a polynomial of total degree below n: every computable
    /// binomial coefficient with i + j >= n vanishes.
    #[test]
    fn interpolation_degree_bound(m in polymatroid_strategy(4)) {
        let n = m.n();
        let grid = count_grid(&m, n as i64, n as i64).unwrap();
        let form = interpolate_binomial(&grid, n).unwrap();
        for (i, j, c) in form.coefficients() {
            prop_assert!(((i + j) as usize) < n, "c_{}{} = {} survives", i, j, c);
        }
        for (t, row) in grid.iter().enumerate() {
            for (u, &q) in row.iter().enumerate() {
                prop_assert_eq!(form.evaluate(t as u64, u as u64), BigInt::from(q));
            }
        }
    }

    /// Activity polynomials do not depend on the element order.
    #[test]
    fn activity_order_independence(m in polymatroid_strategy(4), seed in 0u64..1024) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let natural = ElementOrder::natural(m.n());
        let i0 = internal_polynomial_with_order(&m, &natural);
        let x0 = external_polynomial_with_order(&m, &natural);
        for _ in 0..3 {
            let order = ElementOrder::shuffled(m.n(), &mut rng);
            prop_assert_eq!(internal_polynomial_with_order(&m, &order), i0.clone());
            prop_assert_eq!(external_polynomial_with_order(&m, &order), x0.clone());
        }
    }

    /// The s-dual is an involution and swaps the count parameters.
    #[test]
    fn dual_involution_and_count_swap(m in polymatroid_strategy(4)) {
        let s = m
            .ground()
            .elements()
            .map(|e| m.rank(1 << (e - 1)))
            .max()
            .unwrap();
        let dual = m.s_dual(s).unwrap();
        let back = dual.s_dual(s).unwrap();
        prop_assert_eq!(back.rank_fn().table(), m.rank_fn().table());
        for t in 0..=2i64 {
            for u in 0..=2i64 {
                prop_assert_eq!(
                    count_lattice_points(&m, t, u).unwrap(),
                    count_lattice_points(&dual, u, t).unwrap()
                );
            }
        }
    }
}

/// Random tables that fail submodularity are rejected with a P3 witness.
#[test]
fn submodularity_filter_rejects_bad_tables() {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let mut rejected = 0;
    let mut accepted = 0;
    for _ in 0..400 {
        let n = rng.random_range(2..=4usize);
        let mut table = vec![0i64; 1 << n];
        for s in 1u32..(1 << n) {
            let lower = (0..n)
                .filter(|b| s >> b & 1 == 1)
                .map(|b| table[(s & !(1 << b)) as usize])
                .max()
                .unwrap();
            table[s as usize] = lower + rng.random_range(0..=1);
        }
        match Polymatroid::from_table(n, table) {
            Ok(_) => accepted += 1,
            Err(Error::AxiomViolation { .. }) => rejected += 1,
            Err(other) => panic!("unexpected error {other}"),
        }
    }
    // Monotone-by-construction tables either pass or fail on P3; both
    // outcomes must occur across 400 samples.
    assert!(accepted > 0, "sampler never produced a polymatroid");
    assert!(rejected > 0, "sampler never produced a P3 violation");
}

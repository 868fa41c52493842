//! The built-in test corpus: the running three-element example and its
//! doubled polymatroid, all small uniform matroids, the cycle matroids of
//! all connected simple graphs on up to five vertices (up to isomorphism),
//! and a deterministic stream of random matroid rank tables.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::core::Polymatroid;

/// The running example: ground set {1,2,3}, bases {1} and {2}, 3 a loop.
pub fn example_matroid() -> Polymatroid {
    Polymatroid::from_bases(&[vec![1, 0, 0], vec![0, 1, 0]]).expect("valid example")
}

/// The doubled-rank polymatroid of the running example, the canonical
/// counterexample to the coefficient interpretation.
pub fn example_doubled() -> Polymatroid {
    example_matroid().scale_rank(2).expect("valid scaling")
}

/// All uniform matroids with 1 <= n <= max_n, labelled.
pub fn uniform_family(max_n: usize) -> Vec<(String, Polymatroid)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for r in 0..=n {
            out.push((
                format!("U({r},{n})"),
                Polymatroid::uniform(r, n).expect("valid uniform parameters"),
            ));
        }
    }
    out
}

/// Connected simple graphs on 2..=max_vertices vertices, one per
/// isomorphism class, as (vertex count, edge list) pairs in a
/// deterministic order.
pub fn connected_graphs(max_vertices: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut out = Vec::new();
    for nv in 2..=max_vertices {
        let pairs: Vec<(usize, usize)> = (1..=nv)
            .flat_map(|a| ((a + 1)..=nv).map(move |b| (a, b)))
            .collect();
        let perms = permutations(nv);
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            if !mask_connected(nv, &pairs, mask) {
                continue;
            }
            let canon = (0..perms.len())
                .map(|p| remap_mask(&pairs, mask, &perms[p]))
                .min()
                .unwrap();
            if seen.insert(canon) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| canon >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                out.push((nv, edges));
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for v in 1..=n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

fn remap_mask(pairs: &[(usize, usize)], mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    for (i, &(a, b)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (ra, rb) = (perm[a - 1].min(perm[b - 1]), perm[a - 1].max(perm[b - 1]));
            let j = pairs.iter().position(|&e| e == (ra, rb)).unwrap();
            out |= 1 << j;
        }
    }
    out
}

fn mask_connected(nv: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let mut reach = 1u32;
    loop {
        let mut grown = reach;
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ba, bb) = (1 << (a - 1), 1 << (b - 1));
                if grown & ba != 0 || grown & bb != 0 {
                    grown |= ba | bb;
                }
            }
        }
        if grown == reach {
            break;
        }
        reach = grown;
    }
    reach == (1 << nv) - 1
}

/// Cycle matroids of the connected graph corpus, labelled.
pub fn graphic_family(max_vertices: usize) -> Vec<(String, Polymatroid)> {
    connected_graphs(max_vertices)
        .into_iter()
        .enumerate()
        .map(|(i, (nv, edges))| {
            let label = format!("graph#{i}(v{nv},e{})", edges.len());
            (label, Polymatroid::graphic(nv, &edges).expect("valid corpus graph"))
        })
        .collect()
}

/// Deterministic stream of random matroids: random monotone unit-increase
/// rank tables, filtered by the full axiom check.
pub fn random_matroids(count: usize, max_n: usize, seed: u64) -> Vec<Polymatroid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        if let Some(m) = random_table(&mut rng, max_n) {
            out.push(m);
        }
    }
    out
}

fn random_table(rng: &mut ChaCha8Rng, max_n: usize) -> Option<Polymatroid> {
    let n = rng.random_range(1..=max_n);
    let r_cap = rng.random_range(0..=n) as i64;
    let mut table = vec![0i64; 1 << n];
    for s in 1u32..(1 << n) {
        let mut lb = 0i64;
        let mut ub = i64::MAX;
        for b in 0..n {
            if s >> b & 1 == 1 {
                let sub = table[(s & !(1 << b)) as usize];
                lb = lb.max(sub);
                ub = ub.min(sub + 1);
            }
        }
        let ub = ub.min(r_cap);
        if lb > ub {
            return None;
        }
        // Bias toward the upper end; flat-rank tables are degenerate.
        table[s as usize] = if rng.random_bool(0.8) {
            ub
        } else {
            rng.random_range(lb..=ub)
        };
    }
    Polymatroid::from_table(n, table).ok().filter(Polymatroid::is_matroid)
}

/// The default verification corpus: uniform matroids with n <= 6, cycle
/// matroids of connected graphs on <= 5 vertices, and the running example.
pub fn default_matroid_corpus() -> Vec<(String, Polymatroid)> {
    let mut out = uniform_family(6);
    out.extend(graphic_family(5));
    out.push(("example".to_string(), example_matroid()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts_per_vertex_class() {
        // Known counts of connected simple graphs up to isomorphism.
        let graphs = connected_graphs(5);
        let count_for = |nv: usize| graphs.iter().filter(|(v, _)| *v == nv).count();
        assert_eq!(count_for(2), 1);
        assert_eq!(count_for(3), 2);
        assert_eq!(count_for(4), 6);
        assert_eq!(count_for(5), 21);
        assert_eq!(graphs.len(), 30);
    }

    #[test]
    fn corpus_members_are_valid() {
        for (label, m) in default_matroid_corpus() {
            assert!(m.is_matroid(), "{label} is not a matroid");
        }
    }

    #[test]
    fn random_matroids_are_deterministic_and_valid() {
        let a = random_matroids(25, 5, 42);
        let b = random_matroids(25, 5, 42);
        assert_eq!(a.len(), 25);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.rank_fn().table(), y.rank_fn().table());
        }
        for m in &a {
            assert!(m.is_matroid());
        }
    }
}

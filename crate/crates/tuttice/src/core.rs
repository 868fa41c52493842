//! Ground sets, rank functions, and polymatroid constructors and operations.
//!
//! Subsets of the ground set `{1, .., n}` are bitmasks: element `i` is bit
//! `i - 1`. Rank functions are dense tables of length `2^n`, which is why the
//! ground set size is capped.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use serde::Deserialize;

use crate::error::{Axiom, Error, Result};

/// Hard cap on the ground set size; every table has `2^n` entries.
pub const MAX_GROUND_SIZE: usize = 16;

/// Cap on individual rank values, so that every sum and scaled rank formed
/// anywhere downstream stays far inside 64 bits.
pub const MAX_RANK: i64 = 1 << 32;

/// A subset of the ground set as a bitmask.
pub type Subset = u32;

/// Render a subset as its sorted element list, `{}` for the empty set.
pub fn subset_to_string(mask: Subset) -> String {
    let elems: Vec<String> = subset_elements(mask).map(|e| e.to_string()).collect();
    format!("{{{}}}", elems.join(","))
}

/// Iterate the elements (1-based) of a subset mask in increasing order.
pub fn subset_elements(mask: Subset) -> impl Iterator<Item = usize> {
    (0..MAX_GROUND_SIZE).filter_map(move |b| (mask >> b & 1 == 1).then_some(b + 1))
}

/// Build a mask from 1-based elements.
pub fn subset_from_elements(elems: &[usize]) -> Subset {
    elems.iter().fold(0, |m, &e| m | 1 << (e - 1))
}

/// The ground set `{1, .., n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("ground set must be nonempty".into()));
        }
        if n > MAX_GROUND_SIZE {
            return Err(Error::SizeCapExceeded { n });
        }
        Ok(GroundSet { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Mask of the full ground set.
    pub fn full(&self) -> Subset {
        ((1u64 << self.n) - 1) as Subset
    }

    /// All `2^n` subset masks in increasing mask order.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        0..=self.full()
    }

    /// The elements as 1-based indices.
    pub fn elements(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }
}

/// A validated polymatroid rank function: normalized (P1), monotone (P2),
/// submodular (P3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankFunction {
    ground: GroundSet,
    table: Vec<i64>,
}

impl RankFunction {
    /// Validate a dense table of length `2^n` against P1-P3.
    pub fn from_table(n: usize, table: Vec<i64>) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        if table.len() != 1 << n {
            return Err(Error::InvalidParams(format!(
                "rank table has {} entries, expected {}",
                table.len(),
                1 << n
            )));
        }
        for (mask, &v) in table.iter().enumerate() {
            if v < 0 {
                return Err(Error::NegativeRank {
                    subset: subset_to_string(mask as Subset),
                    value: v,
                });
            }
            if v > MAX_RANK {
                return Err(Error::InvalidParams(format!(
                    "rank {v} of subset {} exceeds the cap of {MAX_RANK}",
                    subset_to_string(mask as Subset)
                )));
            }
        }
        let rf = RankFunction { ground, table };
        rf.check_axioms()?;
        Ok(rf)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.ground.len();
        let full = self.ground.full();
        if self.table[0] != 0 {
            return Err(Error::AxiomViolation {
                axiom: Axiom::P1,
                x: subset_to_string(0),
                y: subset_to_string(0),
            });
        }
        // Monotonicity along single-element steps implies P2 in full.
        for s in 0..=full {
            for b in 0..n {
                let e = 1 << b;
                if s & e == 0 && self.table[s as usize] > self.table[(s | e) as usize] {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::P2,
                        x: subset_to_string(s),
                        y: subset_to_string(s | e),
                    });
                }
            }
        }
        // Local submodularity r(S+e) + r(S+f) >= r(S+e+f) + r(S) implies P3.
        for s in 0..=full {
            for be in 0..n {
                let e = 1 << be;
                if s & e != 0 {
                    continue;
                }
                for bf in (be + 1)..n {
                    let f = 1 << bf;
                    if s & f != 0 {
                        continue;
                    }
                    let lhs = self.table[(s | e) as usize] + self.table[(s | f) as usize];
                    let rhs = self.table[(s | e | f) as usize] + self.table[s as usize];
                    if lhs < rhs {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::P3,
                            x: subset_to_string(s | e),
                            y: subset_to_string(s | f),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn rank(&self, subset: Subset) -> i64 {
        self.table[subset as usize]
    }

    pub fn table(&self) -> &[i64] {
        &self.table
    }
}

/// A polymatroid: a validated rank function plus a cached matroid flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polymatroid {
    rank: RankFunction,
    matroid: bool,
}

impl Polymatroid {
    fn from_rank(rank: RankFunction) -> Self {
        let matroid = detect_matroid(&rank);
        Polymatroid { rank, matroid }
    }

    /// Validate an explicit rank table.
    pub fn from_table(n: usize, table: Vec<i64>) -> Result<Self> {
        Ok(Self::from_rank(RankFunction::from_table(n, table)?))
    }

    /// Validate a rank table given as a subset -> rank map.
    pub fn from_map(n: usize, map: &BTreeMap<Subset, i64>) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let mut table = vec![0i64; 1 << n];
        for s in ground.subsets() {
            match map.get(&s) {
                Some(&v) => table[s as usize] = v,
                None => {
                    return Err(Error::InvalidParams(format!(
                        "rank table is missing subset {}",
                        subset_to_string(s)
                    )))
                }
            }
        }
        if map.len() != 1 << n {
            return Err(Error::InvalidParams(
                "rank table has entries outside the ground set".into(),
            ));
        }
        Self::from_table(n, table)
    }

    /// The uniform matroid U_{r,n}: rank of S is min(|S|, r).
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        if r > n {
            return Err(Error::InvalidParams(format!(
                "uniform matroid needs 0 <= r <= n, got r = {r}, n = {n}"
            )));
        }
        let table = ground
            .subsets()
            .map(|s| (s.count_ones() as i64).min(r as i64))
            .collect();
        Self::from_table(n, table)
    }

    /// The cycle matroid of a graph: ground set is the edge list (1-based),
    /// rank of an edge subset is `vertices - components(spanned subgraph)`.
    /// Loops and parallel edges are allowed. Isolated vertices do not affect
    /// the rank function, so only edge endpoints are tracked.
    pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::InvalidParams("graph needs at least one vertex".into()));
        }
        if edges.is_empty() {
            return Err(Error::InvalidParams("graph needs at least one edge".into()));
        }
        let ground = GroundSet::new(edges.len())?;
        for (index, &edge) in edges.iter().enumerate() {
            let (a, b) = edge;
            if a < 1 || a > vertices || b < 1 || b > vertices {
                return Err(Error::InvalidEdge {
                    index: index + 1,
                    edge,
                    vertices,
                });
            }
        }
        // Compact the touched vertices; at most 2 per edge.
        let mut touched: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        touched.sort_unstable();
        touched.dedup();
        let compact: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                (
                    touched.binary_search(&a).expect("endpoint seen"),
                    touched.binary_search(&b).expect("endpoint seen"),
                )
            })
            .collect();
        let k = touched.len();
        let table = ground
            .subsets()
            .map(|s| {
                let mut uf = UnionFind::new(k);
                for e in subset_elements(s) {
                    let (a, b) = compact[e - 1];
                    uf.union(a, b);
                }
                (k - uf.components()) as i64
            })
            .collect();
        Self::from_table(edges.len(), table)
    }

    /// Reconstruct a polymatroid from its base vectors. The rank envelope
    /// `r(S) = max_x x(S)` is built, validated, and then required to
    /// reproduce exactly the input set of bases.
    pub fn from_bases(vectors: &[Vec<i64>]) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return Err(Error::NotAPolymatroidBaseSet("empty base set".into()));
        };
        let n = first.len();
        if n == 0 || n > MAX_GROUND_SIZE {
            return Err(Error::NotAPolymatroidBaseSet(format!(
                "base vectors must have between 1 and {MAX_GROUND_SIZE} coordinates"
            )));
        }
        let total: i64 = first.iter().sum();
        for v in vectors {
            if v.len() != n {
                return Err(Error::NotAPolymatroidBaseSet(
                    "base vectors have differing lengths".into(),
                ));
            }
            if v.iter().any(|&c| c < 0) {
                return Err(Error::NotAPolymatroidBaseSet(format!(
                    "base vector {v:?} has a negative coordinate"
                )));
            }
            if v.iter().sum::<i64>() != total {
                return Err(Error::NotAPolymatroidBaseSet(
                    "base vectors have differing coordinate sums".into(),
                ));
            }
        }
        let ground = GroundSet::new(n)?;
        let table: Vec<i64> = ground
            .subsets()
            .map(|s| {
                vectors
                    .iter()
                    .map(|v| subset_elements(s).map(|e| v[e - 1]).sum::<i64>())
                    .max()
                    .unwrap()
            })
            .collect();
        let poly = Self::from_table(n, table)
            .map_err(|e| Error::NotAPolymatroidBaseSet(format!("rank envelope invalid: {e}")))?;
        let input: BTreeSet<Vec<i64>> = vectors.iter().cloned().collect();
        let enumerated: BTreeSet<Vec<i64>> = crate::lattice::enumerate_bases(&poly)
            .into_iter()
            .map(|b| b.into_coords())
            .collect();
        if input != enumerated {
            return Err(Error::NotAPolymatroidBaseSet(format!(
                "rank envelope admits {} bases but {} were given",
                enumerated.len(),
                input.len()
            )));
        }
        Ok(poly)
    }

    pub fn n(&self) -> usize {
        self.rank.ground().len()
    }

    pub fn ground(&self) -> GroundSet {
        self.rank.ground()
    }

    pub fn rank_fn(&self) -> &RankFunction {
        &self.rank
    }

    pub fn rank(&self, subset: Subset) -> i64 {
        self.rank.rank(subset)
    }

    /// Rank of the full ground set.
    pub fn full_rank(&self) -> i64 {
        self.rank.rank(self.ground().full())
    }

    /// True when every singleton has rank at most 1 and ranks rise by at
    /// most 1 per element.
    pub fn is_matroid(&self) -> bool {
        self.matroid
    }

    /// Direct sum: the second summand is relabelled to `n1+1 ..= n1+n2`.
    pub fn direct_sum(&self, other: &Polymatroid) -> Result<Polymatroid> {
        let n1 = self.n();
        let n2 = other.n();
        let n = n1 + n2;
        if n > MAX_GROUND_SIZE {
            return Err(Error::SizeCapExceeded { n });
        }
        let m1 = self.ground().full();
        let table = (0u32..1 << n)
            .map(|s| self.rank(s & m1) + other.rank(s >> n1))
            .collect();
        Polymatroid::from_table(n, table)
    }

    /// The s-dual `r*(S) = s|S| + r(E \ S) - r(E)`; the 1-dual of a matroid
    /// is the usual matroid dual.
    pub fn s_dual(&self, s: i64) -> Result<Polymatroid> {
        let required = self
            .ground()
            .elements()
            .map(|e| self.rank(subset_from_elements(&[e])))
            .max()
            .unwrap();
        if s < required {
            return Err(Error::STooSmall { s, required });
        }
        let full = self.ground().full();
        let re = self.full_rank();
        let table = self
            .ground()
            .subsets()
            .map(|sub| s * sub.count_ones() as i64 + self.rank(full & !sub) - re)
            .collect();
        Polymatroid::from_table(self.n(), table)
    }

    /// Multiply the whole rank table by `k >= 1`.
    pub fn scale_rank(&self, k: i64) -> Result<Polymatroid> {
        if k < 1 {
            return Err(Error::InvalidParams(format!(
                "scale factor must be at least 1, got {k}"
            )));
        }
        let table = self.rank.table().iter().map(|&v| k * v).collect();
        Polymatroid::from_table(self.n(), table)
    }

    /// True when `c` is both a circuit and a hyperplane:
    /// `r(C) = |C| - 1 = r(E) - 1`, every proper subset of C independent,
    /// and `C` closed.
    pub fn is_circuit_hyperplane(&self, c: Subset) -> bool {
        if !self.matroid || c == 0 || c > self.ground().full() {
            return false;
        }
        let rc = self.rank(c);
        if rc != c.count_ones() as i64 - 1 || rc != self.full_rank() - 1 {
            return false;
        }
        // Minimality: dropping any element must leave an independent set.
        if !subset_elements(c).all(|e| self.rank(c & !(1 << (e - 1))) == rc) {
            return false;
        }
        self.ground()
            .elements()
            .filter(|&e| c & (1 << (e - 1)) == 0)
            .all(|e| self.rank(c | 1 << (e - 1)) > rc)
    }

    /// All circuit-hyperplanes, in mask order.
    pub fn circuit_hyperplanes(&self) -> Vec<Subset> {
        self.ground()
            .subsets()
            .filter(|&c| self.is_circuit_hyperplane(c))
            .collect()
    }

    /// Relax a circuit-hyperplane: the set `c` becomes an extra basis; the
    /// rank table changes only at `c` itself.
    pub fn relax_circuit_hyperplane(&self, c: Subset) -> Result<Polymatroid> {
        if !self.matroid {
            return Err(Error::NotAMatroid);
        }
        if !self.is_circuit_hyperplane(c) {
            return Err(Error::NotACircuitHyperplane(subset_to_string(c)));
        }
        let mut table = self.rank.table().to_vec();
        table[c as usize] += 1;
        Polymatroid::from_table(self.n(), table)
    }

    /// A matroid is connected when no proper nonempty subset separates it.
    pub fn is_connected(&self) -> bool {
        let full = self.ground().full();
        if self.n() == 1 {
            return true;
        }
        !(1..full).any(|s| self.rank(s) + self.rank(full & !s) == self.full_rank())
    }
}

fn detect_matroid(rank: &RankFunction) -> bool {
    let ground = rank.ground();
    let n = ground.len();
    for e in 0..n {
        if rank.rank(1 << e) > 1 {
            return false;
        }
    }
    for s in ground.subsets() {
        for e in 0..n {
            let bit = 1 << e;
            if s & bit == 0 && rank.rank(s | bit) > rank.rank(s) + 1 {
                return false;
            }
        }
    }
    true
}

struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            components: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }

    fn components(&self) -> usize {
        self.components
    }
}

/// JSON description of a polymatroid, the input format of the CLI.
#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum PolymatroidInput {
    Table {
        n: usize,
        rank: BTreeMap<String, i64>,
    },
    Uniform {
        r: usize,
        n: usize,
    },
    Graph {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Bases {
        vectors: Vec<Vec<i64>>,
    },
}

impl PolymatroidInput {
    pub fn build(&self) -> Result<Polymatroid> {
        match self {
            PolymatroidInput::Table { n, rank } => {
                let mut map = BTreeMap::new();
                for (key, &value) in rank {
                    map.insert(parse_subset_key(key, *n)?, value);
                }
                if map.len() != rank.len() {
                    return Err(Error::InvalidParams("duplicate subset key".into()));
                }
                Polymatroid::from_map(*n, &map)
            }
            PolymatroidInput::Uniform { r, n } => Polymatroid::uniform(*r, *n),
            PolymatroidInput::Graph { vertices, edges } => Polymatroid::graphic(*vertices, edges),
            PolymatroidInput::Bases { vectors } => Polymatroid::from_bases(vectors),
        }
    }
}

/// Parse a subset key: `""` is the empty set; for `n <= 9` the key is the
/// concatenated digits of its elements; for larger ground sets the labels
/// are comma-separated.
pub fn parse_subset_key(key: &str, n: usize) -> Result<Subset> {
    if key.is_empty() {
        return Ok(0);
    }
    let labels: Vec<usize> = if key.contains(',') {
        key.split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParams(format!("bad subset key {key:?}")))
            })
            .collect::<Result<_>>()?
    } else if n <= 9 {
        key.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::InvalidParams(format!("bad subset key {key:?}")))
            })
            .collect::<Result<_>>()?
    } else {
        vec![key
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::InvalidParams(format!("bad subset key {key:?}")))?]
    };
    let mut mask = 0;
    for label in labels {
        if label < 1 || label > n {
            return Err(Error::InvalidParams(format!(
                "subset key {key:?} names element {label}, outside 1..={n}"
            )));
        }
        let bit = 1 << (label - 1);
        if mask & bit != 0 {
            return Err(Error::InvalidParams(format!(
                "subset key {key:?} repeats element {label}"
            )));
        }
        mask |= bit;
    }
    Ok(mask)
}

/// Parse a polymatroid description from JSON text.
pub fn parse_polymatroid(json: &str) -> Result<Polymatroid> {
    let input: PolymatroidInput = serde_json::from_str(json)
        .map_err(|e| Error::InvalidParams(format!("malformed input: {e}")))?;
    input.build()
}

//! Simple k-uniform hypergraphs: validation, file parsing, canonical
//! serialization, generators, degree sequences and connected components.
//!
//! Vertices are labeled `1..=n`. An edge is a set of exactly `k` distinct
//! vertices; the canonical form stores each edge with ascending members and
//! the edge list in lexicographic order, so serialized files are comparable
//! byte for byte.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Hard cap on the vertex count accepted by the parser and the generators.
/// Degree and component computations allocate O(n); unbounded headers would
/// let a tiny malicious file request enormous allocations.
pub const MAX_VERTICES: usize = 10_000_000;

/// Hard cap on the number of edges a generator will materialize.
pub const MAX_GENERATED_EDGES: usize = 1 << 22;

/// Validation and parse errors for [`Hypergraph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("malformed header {0:?}: expected three integers `n k m`")]
    MalformedHeader(String),
    #[error("vertex count n must be positive")]
    ZeroVertices,
    #[error("vertex count {0} exceeds the supported maximum {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("uniformity k must be at least 2, got {0}")]
    KTooSmall(usize),
    #[error("malformed edge line {0:?}: expected space-separated vertex labels")]
    MalformedEdgeLine(String),
    #[error("edge ({members}) has {found} members, expected {expected}")]
    WrongMemberCount {
        expected: usize,
        found: usize,
        members: String,
    },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {vertex} repeated within an edge")]
    DuplicateVertex { vertex: usize },
    #[error("duplicate edge ({0})")]
    DuplicateEdge(String),
    #[error("header declares {declared} edges but input contains {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
}

/// Errors from the hypergraph generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("need n >= k, got n = {n}, k = {k}")]
    NSmallerThanK { n: usize, k: usize },
    #[error("uniformity k must be at least 2, got {0}")]
    KTooSmall(usize),
    #[error("vertex count {0} exceeds the supported maximum {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("requested {m} edges but only {available} distinct edges exist")]
    TooManyEdges { m: usize, available: String },
    #[error("instance too large: {edges} edges exceeds the cap {MAX_GENERATED_EDGES}")]
    InstanceTooLarge { edges: usize },
    #[error("no connected hypergraph exists with n = {n}, k = {k}, m = {m}")]
    ConnectivityImpossible { n: usize, k: usize, m: usize },
    #[error("failed to sample a connected hypergraph in {attempts} attempts")]
    ConnectivityAttemptsExhausted { attempts: usize },
    #[error(transparent)]
    Invalid(#[from] HypergraphError),
}

fn members_string(edge: &[usize]) -> String {
    edge.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// A simple k-uniform hypergraph in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph from raw edges, canonicalizing member and edge
    /// order and rejecting anything that is not a simple k-uniform
    /// hypergraph on vertices `1..=n`.
    pub fn new(n: usize, k: usize, mut edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        if n == 0 {
            return Err(HypergraphError::ZeroVertices);
        }
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices(n));
        }
        if k < 2 {
            return Err(HypergraphError::KTooSmall(k));
        }
        for edge in &mut edges {
            edge.sort_unstable();
            if edge.len() != k {
                return Err(HypergraphError::WrongMemberCount {
                    expected: k,
                    found: edge.len(),
                    members: members_string(edge),
                });
            }
            for pair in edge.windows(2) {
                if pair[0] == pair[1] {
                    return Err(HypergraphError::DuplicateVertex { vertex: pair[0] });
                }
            }
            for &v in edge.iter() {
                if v == 0 || v > n {
                    return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
                }
            }
        }
        edges.sort_unstable();
        for pair in edges.windows(2) {
            if pair[0] == pair[1] {
                return Err(HypergraphError::DuplicateEdge(members_string(&pair[0])));
            }
        }
        Ok(Hypergraph { n, k, edges })
    }

    /// Parses the text file format; see [`fmt::Display`] for the canonical
    /// serialization. Member order within input edge lines is normalized,
    /// `#` comment lines and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, HypergraphError> {
        text.parse()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonically ordered edges, each with ascending members.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Per-vertex degrees in label order (index `v - 1` holds the degree of
    /// vertex `v`).
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n];
        for edge in &self.edges {
            for &v in edge {
                deg[v - 1] += 1;
            }
        }
        deg
    }

    /// Degrees sorted non-increasing plus the permutation back to labels.
    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees())
    }

    /// Connected components of the underlying vertex set; isolated vertices
    /// are singleton components.
    pub fn components(&self) -> ComponentPartition {
        let mut uf = UnionFind::new(self.n);
        for edge in &self.edges {
            for pair in edge.windows(2) {
                uf.union(pair[0] - 1, pair[1] - 1);
            }
        }
        let mut component_of = vec![0usize; self.n];
        let mut smallest = vec![usize::MAX; self.n];
        let mut count = 0;
        for (v, id) in component_of.iter_mut().enumerate() {
            let root = uf.find(v);
            if smallest[root] == usize::MAX {
                smallest[root] = v + 1;
                count += 1;
            }
            *id = smallest[root];
        }
        ComponentPartition {
            component_of,
            count,
        }
    }

    /// The complete k-uniform hypergraph on `n` vertices (all C(n, k) edges).
    pub fn complete(n: usize, k: usize) -> Result<Self, GenerateError> {
        validate_generator_dims(n, k)?;
        let total = binom_big(n, k);
        check_generated_size(&total)?;
        let mut edges = Vec::new();
        let mut combo: Vec<usize> = (1..=k).collect();
        loop {
            edges.push(combo.clone());
            // advance to the next k-combination of 1..=n in lex order
            let mut i = k;
            while i > 0 && combo[i - 1] == n - (k - i) {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            combo[i - 1] += 1;
            for j in i..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
        Ok(Hypergraph::new(n, k, edges)?)
    }

    /// A single edge {1, ..., k} on `n` vertices.
    pub fn single_edge(n: usize, k: usize) -> Result<Self, GenerateError> {
        validate_generator_dims(n, k)?;
        Ok(Hypergraph::new(n, k, vec![(1..=k).collect()])?)
    }

    /// `m` distinct edges sampled uniformly without replacement from all
    /// k-subsets, deterministic for a given seed.
    pub fn random_m(n: usize, k: usize, m: usize, seed: u64) -> Result<Self, GenerateError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_m_with_rng(n, k, m, &mut rng)
    }

    /// Like [`Hypergraph::random_m`] but resamples until the result is
    /// connected, giving up after 1000 attempts.
    pub fn random_connected(n: usize, k: usize, m: usize, seed: u64) -> Result<Self, GenerateError> {
        validate_generator_dims(n, k)?;
        // every edge joins at most k - 1 components, so m edges cannot
        // connect n vertices unless m (k - 1) >= n - 1
        if m.saturating_mul(k - 1) < n - 1 {
            return Err(GenerateError::ConnectivityImpossible { n, k, m });
        }
        const ATTEMPTS: usize = 1000;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..ATTEMPTS {
            let h = Self::random_m_with_rng(n, k, m, &mut rng)?;
            if h.components().count == 1 {
                return Ok(h);
            }
        }
        Err(GenerateError::ConnectivityAttemptsExhausted { attempts: ATTEMPTS })
    }

    fn random_m_with_rng(
        n: usize,
        k: usize,
        m: usize,
        rng: &mut ChaCha8Rng,
    ) -> Result<Self, GenerateError> {
        validate_generator_dims(n, k)?;
        let total = binom_big(n, k);
        if BigInt::from(m) > total {
            return Err(GenerateError::TooManyEdges {
                m,
                available: total.to_string(),
            });
        }
        if m > MAX_GENERATED_EDGES {
            return Err(GenerateError::InstanceTooLarge { edges: m });
        }
        const UNRANK_LIMIT: u64 = 1 << 20;
        let edges = match u64::try_from(&total) {
            Ok(total_u64) if total_u64 < UNRANK_LIMIT => {
                // small edge space: pick m distinct ranks, then unrank
                let ranks = sample_distinct(total_u64, m as u64, rng);
                ranks
                    .into_iter()
                    .map(|r| unrank_combination(n, k, r))
                    .collect()
            }
            _ => {
                // large edge space: rejection sampling with a seen-set
                let mut seen = HashSet::with_capacity(m);
                let mut edges = Vec::with_capacity(m);
                while edges.len() < m {
                    let edge = sample_k_subset(n, k, rng);
                    if seen.insert(edge.clone()) {
                        edges.push(edge);
                    }
                }
                edges
            }
        };
        Ok(Hypergraph::new(n, k, edges)?)
    }
}

impl FromStr for Hypergraph {
    type Err = HypergraphError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| HypergraphError::MalformedHeader(String::new()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(HypergraphError::MalformedHeader(header.to_string()));
        }
        let parse_field = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| HypergraphError::MalformedHeader(header.to_string()))
        };
        let n = parse_field(fields[0])?;
        let k = parse_field(fields[1])?;
        let m = parse_field(fields[2])?;
        if n == 0 {
            return Err(HypergraphError::ZeroVertices);
        }
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices(n));
        }
        if k < 2 {
            return Err(HypergraphError::KTooSmall(k));
        }
        let mut edges = Vec::new();
        for line in lines {
            let members = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| HypergraphError::MalformedEdgeLine(line.to_string()))
                })
                .collect::<Result<Vec<usize>, _>>()?;
            edges.push(members);
        }
        if edges.len() != m {
            return Err(HypergraphError::EdgeCountMismatch {
                declared: m,
                found: edges.len(),
            });
        }
        Hypergraph::new(n, k, edges)
    }
}

/// Canonical serialization: header `n k m`, then one edge per line with
/// ascending members, edges in lexicographic order, LF line endings.
impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.n, self.k, self.edges.len())?;
        for edge in &self.edges {
            writeln!(f, "{}", members_string(edge))?;
        }
        Ok(())
    }
}

/// Vertex degrees sorted non-increasing, with the permutation back to the
/// original labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<u64>,
    rank_of_vertex: Vec<usize>,
}

impl DegreeSequence {
    /// Sorts per-label degrees. Ties are broken by ascending vertex label, so
    /// the permutation is deterministic.
    pub fn from_degrees(by_vertex: Vec<u64>) -> Self {
        let n = by_vertex.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(by_vertex[v]), v));
        let mut degrees = Vec::with_capacity(n);
        let mut rank_of_vertex = vec![0usize; n];
        for (rank, &v) in order.iter().enumerate() {
            degrees.push(by_vertex[v]);
            rank_of_vertex[v] = rank;
        }
        DegreeSequence {
            degrees,
            rank_of_vertex,
        }
    }

    /// Degrees `d_1 >= d_2 >= ... >= d_n`.
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// `rank_of_vertex()[v - 1]` is the 0-based position of vertex `v` in
    /// [`DegreeSequence::degrees`].
    pub fn rank_of_vertex(&self) -> &[usize] {
        &self.rank_of_vertex
    }

    /// The t-th largest degree, 1-based (`d(1)` is the maximum degree).
    pub fn d(&self, t: usize) -> u64 {
        self.degrees[t - 1]
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// Partition of the vertex set into connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    component_of: Vec<usize>,
    count: usize,
}

impl ComponentPartition {
    /// `component_of()[v - 1]` is the component id of vertex `v`: the
    /// smallest vertex label in its component.
    pub fn component_of(&self) -> &[usize] {
        &self.component_of
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Vertex lists per component, ordered by component id; members ascend
    /// within each list.
    pub fn vertex_groups(&self) -> Vec<Vec<usize>> {
        let mut groups: Vec<Vec<usize>> = Vec::with_capacity(self.count);
        let mut index_of_id: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
        for (i, &id) in self.component_of.iter().enumerate() {
            let v = i + 1;
            let slot = *index_of_id.entry(id).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[slot].push(v);
        }
        // component ids are the smallest member, which is each group's first
        // vertex; ascending vertex order already yields ascending ids
        groups
    }
}

fn validate_generator_dims(n: usize, k: usize) -> Result<(), GenerateError> {
    if k < 2 {
        return Err(GenerateError::KTooSmall(k));
    }
    if n < k {
        return Err(GenerateError::NSmallerThanK { n, k });
    }
    if n > MAX_VERTICES {
        return Err(GenerateError::TooManyVertices(n));
    }
    Ok(())
}

fn check_generated_size(total: &BigInt) -> Result<(), GenerateError> {
    match usize::try_from(total) {
        Ok(edges) if edges <= MAX_GENERATED_EDGES => Ok(()),
        Ok(edges) => Err(GenerateError::InstanceTooLarge { edges }),
        Err(_) => Err(GenerateError::InstanceTooLarge {
            edges: usize::MAX,
        }),
    }
}

fn binom_big(n: usize, k: usize) -> BigInt {
    crate::exact::binom(n as i64, k as i64)
}

/// Binomial coefficient in u64, assuming the result fits (callers bound it).
fn binom_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// Floyd's algorithm: a uniform random m-subset of 0..upper, no rejection.
fn sample_distinct(upper: u64, m: u64, rng: &mut ChaCha8Rng) -> std::collections::BTreeSet<u64> {
    let mut chosen = std::collections::BTreeSet::new();
    for j in (upper - m)..upper {
        let t = rng.gen_range(0..=j);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    chosen
}

/// The rank-th k-combination of {1, ..., n} in lexicographic order.
fn unrank_combination(n: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut combo = Vec::with_capacity(k);
    let mut next = 1usize;
    let mut remaining = k;
    while remaining > 0 {
        // combinations beginning with `next` once it is chosen
        let with_next = binom_u64((n - next) as u64, (remaining - 1) as u64);
        if rank < with_next {
            combo.push(next);
            remaining -= 1;
        } else {
            rank -= with_next;
        }
        next += 1;
    }
    combo
}

/// A uniform k-subset of {1, ..., n} via Floyd's algorithm, ascending order.
fn sample_k_subset(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut chosen = std::collections::BTreeSet::new();
    for j in (n - k + 1)..=n {
        let t = rng.gen_range(1..=j as u64) as usize;
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    chosen.into_iter().collect()
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut x = x;
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let mut ra = self.find(a);
        let mut rb = self.find(b);
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

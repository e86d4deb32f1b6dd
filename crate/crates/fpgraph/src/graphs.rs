//! Prime graphs and common divisor graphs of integer sets.
//!
//! For a finite set `S` of positive integers, the prime graph `Δ(S)` has the
//! primes dividing elements of `S` as vertices, with `p — q` whenever `pq`
//! divides some element of `S`. The common divisor graph `Γ(S)` has the
//! elements of `S − {1}` as vertices, with `a — b` whenever `gcd(a, b) > 1`.
//! Both share their number of connected components.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest input accepted by [`prime_set`]. Everything in this problem
/// domain is desk-scale; bigger inputs are a sign of a bug upstream.
pub const FACTOR_LIMIT: u64 = 1_000_000;

const SIEVE_LIMIT: usize = 1_000_000;

fn sieve_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut composite = vec![false; SIEVE_LIMIT + 1];
        let mut primes = Vec::new();
        for n in 2..=SIEVE_LIMIT {
            if !composite[n] {
                primes.push(n as u64);
                let mut m = n * n;
                while m <= SIEVE_LIMIT {
                    composite[m] = true;
                    m += n;
                }
            }
        }
        primes
    })
}

/// Set of prime divisors of `n`.
///
/// Rejects `n = 0` and inputs beyond [`FACTOR_LIMIT`].
pub fn prime_set(n: u64) -> Result<BTreeSet<u64>> {
    if n == 0 {
        return Err(Error::InvalidParameter("prime_set(0) is undefined".into()));
    }
    if n > FACTOR_LIMIT {
        return Err(Error::ResourceCap {
            what: "prime_set input",
            value: n,
            cap: FACTOR_LIMIT,
        });
    }
    let mut rest = n;
    let mut out = BTreeSet::new();
    for &p in sieve_primes() {
        if p * p > rest {
            break;
        }
        if rest % p == 0 {
            out.insert(p);
            while rest % p == 0 {
                rest /= p;
            }
        }
    }
    if rest > 1 {
        out.insert(rest);
    }
    Ok(out)
}

/// π(S): primes dividing at least one element of `S`.
pub fn prime_set_of(values: &[u64]) -> Result<BTreeSet<u64>> {
    let mut out = BTreeSet::new();
    for &n in values {
        out.extend(prime_set(n)?);
    }
    Ok(out)
}

/// Undirected graph over integer labels (primes for Δ, dimensions for Γ).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledGraph {
    pub vertices: Vec<u64>,
    /// Unordered edges, stored with the smaller label first.
    pub edges: BTreeSet<(u64, u64)>,
}

impl LabeledGraph {
    pub fn new(vertices: impl IntoIterator<Item = u64>) -> Self {
        LabeledGraph {
            vertices: {
                let set: BTreeSet<u64> = vertices.into_iter().collect();
                set.into_iter().collect()
            },
            edges: BTreeSet::new(),
        }
    }

    /// Adds an undirected edge. Self-loops are ignored; endpoints must be
    /// vertices.
    pub fn add_edge(&mut self, a: u64, b: u64) {
        if a == b {
            return;
        }
        debug_assert!(self.vertices.contains(&a) && self.vertices.contains(&b));
        self.edges.insert((a.min(b), a.max(b)));
    }

    pub fn has_edge(&self, a: u64, b: u64) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// True if every edge of `self` is an edge of `other` (and likewise for
    /// vertices).
    pub fn is_subgraph_of(&self, other: &LabeledGraph) -> bool {
        self.vertices.iter().all(|v| other.vertices.contains(v))
            && self.edges.iter().all(|e| other.edges.contains(e))
    }

    /// GraphViz rendering with one node per integer label.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
        }
        out.push_str("}\n");
        out
    }
}

/// Prime graph Δ(S): vertices π(S); `p — q` iff `pq` divides some `a ∈ S`.
pub fn prime_graph(values: &[u64]) -> Result<LabeledGraph> {
    let mut factorizations = Vec::new();
    for &n in values {
        if n == 0 {
            return Err(Error::InvalidParameter("0 not allowed in Δ(S) input".into()));
        }
        factorizations.push(prime_set(n)?);
    }
    let vertices: BTreeSet<u64> = factorizations.iter().flatten().copied().collect();
    let mut g = LabeledGraph::new(vertices);
    for primes in &factorizations {
        let ps: Vec<u64> = primes.iter().copied().collect();
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                // p and q both divide the same element, hence pq divides it.
                g.add_edge(ps[i], ps[j]);
            }
        }
    }
    Ok(g)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Common divisor graph Γ(S): vertices S − {1}; `a — b` iff `gcd(a, b) > 1`.
pub fn divisor_graph(values: &[u64]) -> LabeledGraph {
    let verts: BTreeSet<u64> = values.iter().copied().filter(|&n| n > 1).collect();
    let vs: Vec<u64> = verts.iter().copied().collect();
    let mut g = LabeledGraph::new(verts);
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if gcd(vs[i], vs[j]) > 1 {
                g.add_edge(vs[i], vs[j]);
            }
        }
    }
    g
}

/// Connected-component decomposition with exact per-component diameters and
/// completeness flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    /// Partition of the vertex set; components sorted by smallest label.
    pub components: Vec<Vec<u64>>,
    /// Diameter of each component (0 for a singleton).
    pub diameters: Vec<u32>,
    /// Whether each component is a complete graph.
    pub complete: Vec<bool>,
}

impl ComponentReport {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Connected means at most one component; the empty graph counts as
    /// connected here.
    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }

    /// Largest component diameter, `None` for the empty graph.
    pub fn max_diameter(&self) -> Option<u32> {
        self.diameters.iter().copied().max()
    }

    pub fn all_complete(&self) -> bool {
        self.complete.iter().all(|&c| c)
    }
}

/// BFS component decomposition plus all-pairs distances per component.
pub fn analyze(g: &LabeledGraph) -> ComponentReport {
    let index: BTreeMap<u64, usize> = g
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let n = g.vertices.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &g.edges {
        let (ia, ib) = (index[&a], index[&b]);
        adj[ia].push(ib);
        adj[ib].push(ia);
    }

    let mut component_of = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut queue = VecDeque::from([start]);
        component_of[start] = id;
        let mut members = vec![start];
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if component_of[w] == usize::MAX {
                    component_of[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }

    let mut diameters = Vec::with_capacity(components.len());
    let mut complete = Vec::with_capacity(components.len());
    for members in &components {
        let mut diameter = 0u32;
        for &src in members {
            // BFS distances within the component.
            let mut dist: BTreeMap<usize, u32> = BTreeMap::new();
            dist.insert(src, 0);
            let mut queue = VecDeque::from([src]);
            while let Some(v) = queue.pop_front() {
                let dv = dist[&v];
                for &w in &adj[v] {
                    if !dist.contains_key(&w) {
                        dist.insert(w, dv + 1);
                        queue.push_back(w);
                    }
                }
            }
            diameter = diameter.max(dist.values().copied().max().unwrap_or(0));
        }
        diameters.push(diameter);
        let k = members.len();
        let edge_count = members
            .iter()
            .map(|&v| adj[v].len())
            .sum::<usize>()
            / 2;
        complete.push(edge_count == k * (k - 1) / 2);
    }

    ComponentReport {
        components: components
            .into_iter()
            .map(|m| m.into_iter().map(|i| g.vertices[i]).collect())
            .collect(),
        diameters,
        complete,
    }
}

/// Number of connected components of Δ(S) equals that of Γ(S); this holds
/// for every finite S and is re-checked here rather than assumed.
pub fn component_count_match(values: &[u64]) -> Result<bool> {
    let delta = analyze(&prime_graph(values)?);
    let gamma = analyze(&divisor_graph(values));
    Ok(delta.component_count() == gamma.component_count())
}

/// Combined graph + analysis record used by reports and the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub vertices: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
    pub components: Vec<Vec<u64>>,
    pub diameters: Vec<u32>,
    pub complete: Vec<bool>,
}

impl GraphReport {
    pub fn new(g: &LabeledGraph) -> Self {
        let a = analyze(g);
        GraphReport {
            vertices: g.vertices.clone(),
            edges: g.edges.iter().copied().collect(),
            components: a.components,
            diameters: a.diameters,
            complete: a.complete,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_set_basics() {
        assert!(prime_set(1).unwrap().is_empty());
        assert_eq!(
            prime_set(341).unwrap().into_iter().collect::<Vec<_>>(),
            vec![11, 31]
        );
        assert_eq!(prime_set_of(&[3, 4, 5]).unwrap().into_iter().collect::<Vec<_>>(), vec![2, 3, 5]);
        assert!(prime_set(0).is_err());
        assert!(prime_set(FACTOR_LIMIT + 1).is_err());
        // Factorizations near the cap still exact.
        assert_eq!(
            prime_set(999_983).unwrap().into_iter().collect::<Vec<_>>(),
            vec![999_983]
        );
    }

    #[test]
    fn prime_graph_a5_degrees() {
        // Nontrivial degrees of A5 are 3, 4, 5: three isolated vertices.
        let g = prime_graph(&[3, 3, 4, 5]).unwrap();
        assert_eq!(g.vertices, vec![2, 3, 5]);
        assert!(g.edges.is_empty());
        let report = analyze(&g);
        assert_eq!(report.component_count(), 3);
        assert_eq!(report.diameters, vec![0, 0, 0]);
        assert!(report.all_complete());
    }

    #[test]
    fn prime_graph_small_cases() {
        let g = prime_graph(&[2, 3]).unwrap();
        assert_eq!(g.vertices, vec![2, 3]);
        assert!(g.edges.is_empty());

        let g = prime_graph(&[6]).unwrap();
        assert_eq!(g.vertices, vec![2, 3]);
        assert!(g.has_edge(2, 3));
    }

    #[test]
    fn prime_graph_two_complete_components() {
        // Class sizes of the Frobenius group of order 3410 are 341 and 10.
        let g = prime_graph(&[1, 341, 10]).unwrap();
        let report = analyze(&g);
        assert_eq!(report.components, vec![vec![2, 5], vec![11, 31]]);
        assert_eq!(report.diameters, vec![1, 1]);
        assert!(report.all_complete());
    }

    #[test]
    fn divisor_graph_cases() {
        let g = divisor_graph(&[2, 3]);
        assert_eq!(analyze(&g).component_count(), 2);

        let g = divisor_graph(&[6, 10, 15]);
        assert_eq!(g.edges.len(), 3);
        let report = analyze(&g);
        assert_eq!(report.component_count(), 1);
        assert!(report.all_complete());

        let g = divisor_graph(&[3, 4, 5]);
        assert_eq!(analyze(&g).component_count(), 3);

        // 1 is excluded from the vertex set by construction.
        let g = divisor_graph(&[1, 4]);
        assert_eq!(g.vertices, vec![4]);
    }

    #[test]
    fn analyze_empty_graph() {
        let g = LabeledGraph::new([]);
        let report = analyze(&g);
        assert_eq!(report.component_count(), 0);
        assert!(report.is_connected());
        assert_eq!(report.max_diameter(), None);
    }

    #[test]
    fn analyze_path_diameter() {
        // 2 - 6 - 3 as labels joined through gcd: path of length 2.
        let g = divisor_graph(&[4, 6, 9]);
        let report = analyze(&g);
        assert_eq!(report.component_count(), 1);
        assert_eq!(report.diameters, vec![2]);
        assert_eq!(report.complete, vec![false]);
    }

    #[test]
    fn component_counts_agree() {
        for s in [
            vec![6, 10, 15],
            vec![3, 4, 5],
            vec![2, 3, 4, 9, 25, 35],
            vec![12, 18, 35, 49],
        ] {
            assert!(component_count_match(&s).unwrap());
        }
    }

    #[test]
    fn adding_one_changes_nothing() {
        let a = prime_graph(&[3, 4, 5]).unwrap();
        let b = prime_graph(&[1, 3, 3, 4, 5]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dot_output_shape() {
        let g = prime_graph(&[6]).unwrap();
        let dot = g.to_dot("delta");
        assert!(dot.starts_with("graph delta {"));
        assert!(dot.contains("\"2\" -- \"3\";"));
    }
}

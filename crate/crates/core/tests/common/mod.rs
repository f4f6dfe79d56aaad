//! Brute-force reference implementations over small labeled graphs.
#![allow(dead_code)]

use chargraph::graph::PrimeGraph;
use chargraph::numtheory::PrimeSet;

pub const SIX_PRIMES: [u128; 6] = [2, 3, 5, 7, 11, 13];

/// All 15 vertex pairs of a 6-vertex graph, in the order used to decode an edge mask.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// Graph on the first `labels.len()` primes whose edges are the set bits of `mask`.
pub fn decode(labels: &[u128], mask: u32) -> PrimeGraph {
    let edges = pairs(labels.len())
        .into_iter()
        .enumerate()
        .filter(|(bit, _)| mask >> bit & 1 == 1)
        .map(|(_, (i, j))| (labels[i], labels[j]));
    PrimeGraph::new(PrimeSet::new(labels.iter().copied()).unwrap(), edges).unwrap()
}

pub fn adjacency(g: &PrimeGraph) -> (Vec<u128>, Vec<Vec<bool>>) {
    let v = g.vertices().as_slice().to_vec();
    let adj = v
        .iter()
        .map(|&a| v.iter().map(|&b| a != b && g.has_edge(a, b)).collect())
        .collect();
    (v, adj)
}

/// Maximum clique by enumerating every subset; ties broken by the
/// lexicographically least sorted vertex list.
pub fn naive_max_clique(g: &PrimeGraph) -> Vec<u128> {
    let (v, adj) = adjacency(g);
    let n = v.len();
    let mut best: Vec<u128> = Vec::new();
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let is_clique = members
            .iter()
            .enumerate()
            .all(|(a, &i)| members[a + 1..].iter().all(|&j| adj[i][j]));
        if !is_clique {
            continue;
        }
        let labels: Vec<u128> = members.iter().map(|&i| v[i]).collect();
        if labels.len() > best.len() || (labels.len() == best.len() && labels < best) {
            best = labels;
        }
    }
    best
}

fn permutations(items: &[usize], out: &mut Vec<Vec<usize>>) {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    go(&mut items.to_vec(), &mut Vec::new(), out);
}

/// Length of the longest simple odd cycle, found by trying every vertex ordering
/// of every subset. 0 when the graph has no odd cycle.
pub fn naive_longest_odd_cycle(g: &PrimeGraph) -> usize {
    let (v, adj) = adjacency(g);
    let n = v.len();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let len = members.len();
        if len < 3 || len.is_multiple_of(2) || len <= best {
            continue;
        }
        let mut perms = Vec::new();
        permutations(&members[1..], &mut perms);
        let found = perms.iter().any(|p| {
            let mut seq = vec![members[0]];
            seq.extend_from_slice(p);
            (0..len).all(|i| adj[seq[i]][seq[(i + 1) % len]])
        });
        if found {
            best = len;
        }
    }
    best
}

/// Bipartite iff some assignment of two colors leaves no monochromatic edge.
pub fn naive_bipartite(g: &PrimeGraph) -> bool {
    let (v, adj) = adjacency(g);
    let n = v.len();
    (0u32..(1 << n))
        .any(|colors| (0..n).all(|i| (i + 1..n).all(|j| !adj[i][j] || (colors >> i & 1) != (colors >> j & 1))))
}

/// Complement computed directly from the adjacency matrix.
pub fn naive_complement(g: &PrimeGraph) -> PrimeGraph {
    let (v, adj) = adjacency(g);
    let mut edges = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if !adj[i][j] {
                edges.push((v[i], v[j]));
            }
        }
    }
    PrimeGraph::new(g.vertices().clone(), edges).unwrap()
}

/// n-exact straight from the definition.
pub fn naive_n_exact(g: &PrimeGraph, n: usize) -> bool {
    naive_max_clique(g).len() < n && naive_longest_odd_cycle(&naive_complement(g)) >= (2 * n - 5).max(3)
}

/// Prime divisors by trial division.
pub fn trial_prime_divisors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

//! Odd cycles: long-odd-cycle search and bipartiteness with certificates.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::numtheory::PrimeSet;

use super::{CycleWitness, PrimeGraph};

pub const ODD_CYCLE_CAP: usize = 25;

struct OddCycleSearch<'a> {
    masks: &'a [u64],
    min_len: usize,
    start: usize,
    path: Vec<usize>,
    visited: u64,
    allowed: u64,
}

impl OddCycleSearch<'_> {
    fn reachable_from(&self, v: usize) -> u64 {
        let open = self.allowed & !self.visited;
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.masks[u] & open & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen
    }

    fn dfs(&mut self, cur: usize) -> bool {
        let reach = self.reachable_from(cur);
        // path already holds cur, reach counts it too
        if self.path.len() - 1 + (reach.count_ones() as usize) < self.min_len {
            return false;
        }
        let mut nbrs = self.masks[cur] & self.allowed;
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if w == self.start {
                let len = self.path.len();
                if len >= self.min_len && len % 2 == 1 {
                    return true;
                }
                continue;
            }
            if self.visited & (1 << w) != 0 {
                continue;
            }
            self.visited |= 1 << w;
            self.path.push(w);
            if self.dfs(w) {
                return true;
            }
            self.path.pop();
            self.visited &= !(1 << w);
        }
        false
    }
}

/// A simple cycle of odd length at least `min_len`, if one exists.
///
/// Each cycle is found from its least vertex; starts and neighbours are tried
/// in ascending order and the first qualifying cycle is returned.
pub fn longest_odd_cycle_at_least(g: &PrimeGraph, min_len: usize) -> Result<Option<CycleWitness>> {
    if min_len < 3 || min_len.is_multiple_of(2) {
        return Err(Error::BadParameter(format!(
            "cycle length bound must be odd and at least 3, got {min_len}"
        )));
    }
    g.ensure_order_at_most("longest_odd_cycle_at_least", ODD_CYCLE_CAP)?;
    let n = g.order();
    if n < min_len || is_bipartite(g).is_bipartite() {
        return Ok(None);
    }
    let masks = g.masks();
    let all = (1u64 << n) - 1;
    for start in 0..n {
        let allowed = all & !((1u64 << start) - 1);
        let mut search = OddCycleSearch {
            masks: &masks,
            min_len,
            start,
            path: vec![start],
            visited: 1 << start,
            allowed,
        };
        if search.dfs(start) {
            let seq = search.path.iter().map(|&i| g.vertex(i)).collect();
            return Ok(Some(CycleWitness::from_sequence(seq)));
        }
    }
    Ok(None)
}

/// Two-colouring or an odd cycle proving none exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite { left: PrimeSet, right: PrimeSet },
    OddCycle(CycleWitness),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// Breadth-first 2-colouring, components taken in ascending order of their
/// least vertex; each component's least vertex goes to `left`.
pub fn is_bipartite(g: &PrimeGraph) -> Bipartiteness {
    let n = g.order();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].expect("queued vertices are coloured");
            for &w in g.adjacent_indices(u) {
                match colour[w] {
                    None => {
                        colour[w] = Some(!cu);
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => {
                        return Bipartiteness::OddCycle(odd_cycle_from_conflict(g, &parent, &depth, u, w));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let side = |want: bool| {
        PrimeSet::from_sorted_unchecked(
            (0..n)
                .filter(|&i| colour[i] == Some(want))
                .map(|i| g.vertex(i))
                .collect(),
        )
    };
    Bipartiteness::Bipartite {
        left: side(false),
        right: side(true),
    }
}

/// Tree paths from the two same-coloured endpoints meet at their lowest
/// common ancestor; together with the edge u–w they close an odd cycle.
fn odd_cycle_from_conflict(g: &PrimeGraph, parent: &[usize], depth: &[usize], u: usize, w: usize) -> CycleWitness {
    let (mut a, mut b) = (u, w);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_a.push(a);
        up_b.push(b);
    }
    up_b.pop();
    up_b.reverse();
    // u .. lca, then down to w
    let seq = up_a.into_iter().chain(up_b).map(|i| g.vertex(i)).collect();
    CycleWitness::from_sequence(seq)
}

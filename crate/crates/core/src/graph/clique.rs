//! Maximum clique by branch and bound with a greedy-colouring bound.

use crate::error::{Error, Result};
use crate::numtheory::PrimeSet;

use super::PrimeGraph;

pub const CLIQUE_CAP: usize = 64;

/// Outcome of a Kₙ-freeness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueCheck {
    Free,
    /// An n-clique found in the graph.
    Contains(PrimeSet),
}

impl CliqueCheck {
    pub fn is_free(&self) -> bool {
        matches!(self, CliqueCheck::Free)
    }
}

/// Partition `cand` into colour classes; returns vertices in non-decreasing
/// colour order alongside each vertex's colour number.
fn colour_order(masks: &[u64], cand: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colours = Vec::with_capacity(order.capacity());
    let mut uncoloured = cand;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut class = uncoloured;
        while class != 0 {
            let v = class.trailing_zeros() as usize;
            class &= !(1 << v);
            class &= !masks[v];
            uncoloured &= !(1 << v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

fn expand(masks: &[u64], mut cand: u64, size: usize, best: &mut usize) {
    let (order, colours) = colour_order(masks, cand);
    for idx in (0..order.len()).rev() {
        if size + colours[idx] <= *best {
            return;
        }
        let v = order[idx];
        let next = cand & masks[v];
        if next == 0 {
            *best = (*best).max(size + 1);
        } else {
            expand(masks, next, size + 1, best);
        }
        cand &= !(1 << v);
    }
}

fn clique_number_within(masks: &[u64], cand: u64) -> usize {
    let mut best = 0;
    if cand != 0 {
        expand(masks, cand, 0, &mut best);
    }
    best
}

/// A maximum clique; the lexicographically least one in ascending vertex order.
pub fn max_clique(g: &PrimeGraph) -> Result<PrimeSet> {
    g.ensure_order_at_most("max_clique", CLIQUE_CAP)?;
    let n = g.order();
    if n == 0 {
        return Ok(PrimeSet::empty());
    }
    let masks = g.masks();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let omega = clique_number_within(&masks, all);

    // Greedy in ascending order: keep v when it still extends to an omega-clique.
    let mut chosen = Vec::with_capacity(omega);
    let mut cand = all;
    for v in 0..n {
        if chosen.len() == omega {
            break;
        }
        if cand & (1 << v) == 0 {
            continue;
        }
        let above = if v == 63 { 0 } else { !((1u64 << (v + 1)) - 1) };
        let rest = cand & masks[v] & above;
        if 1 + clique_number_within(&masks, rest) >= omega - chosen.len() {
            chosen.push(g.vertex(v));
            cand = rest;
        }
    }
    debug_assert_eq!(chosen.len(), omega);
    Ok(PrimeSet::from_sorted_unchecked(chosen))
}

/// Kₙ-freeness with an n-clique witness when it fails.
pub fn is_kn_free(g: &PrimeGraph, n: usize) -> Result<CliqueCheck> {
    if n < 2 {
        return Err(Error::BadParameter(format!("K_n-freeness needs n >= 2, got {n}")));
    }
    let clique = max_clique(g)?;
    if clique.len() < n {
        Ok(CliqueCheck::Free)
    } else {
        Ok(CliqueCheck::Contains(PrimeSet::from_sorted_unchecked(
            clique.as_slice()[..n].to_vec(),
        )))
    }
}

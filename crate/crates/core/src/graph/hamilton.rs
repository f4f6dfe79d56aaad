use crate::error::Result;

use super::{CycleWitness, PrimeGraph};

pub const HAMILTON_CAP: usize = 20;

/// A Hamilton cycle, if the graph has one.
///
/// Subset dynamic programming over paths anchored at the least vertex:
/// `ends[mask]` holds the vertices at which a path covering exactly `mask`
/// can finish.
pub fn is_hamiltonian(g: &PrimeGraph) -> Result<Option<CycleWitness>> {
    g.ensure_order_at_most("is_hamiltonian", HAMILTON_CAP)?;
    let n = g.order();
    if n < 3 {
        return Ok(None);
    }
    let adj: Vec<u32> = g.masks().into_iter().map(|m| m as u32).collect();
    let full: u32 = (1 << n) - 1;
    let mut ends = vec![0u32; 1 << n];
    ends[1] = 1;
    for mask in (1..=full).filter(|m| m & 1 == 1) {
        let mut tails = ends[mask as usize];
        while tails != 0 {
            let v = tails.trailing_zeros() as usize;
            tails &= tails - 1;
            let mut step = adj[v] & !mask;
            while step != 0 {
                let w = step.trailing_zeros();
                step &= step - 1;
                ends[(mask | (1 << w)) as usize] |= 1 << w;
            }
        }
    }
    let closing = ends[full as usize] & adj[0];
    if closing == 0 {
        return Ok(None);
    }
    // walk back from the least admissible end, always to the least predecessor
    let mut seq = vec![g.vertex(0)];
    let mut cur = closing.trailing_zeros() as usize;
    let mut mask = full;
    while cur != 0 {
        seq.push(g.vertex(cur));
        let prev_mask = mask & !(1 << cur);
        let preds = ends[prev_mask as usize] & adj[cur];
        cur = preds.trailing_zeros() as usize;
        mask = prev_mask;
    }
    Ok(Some(CycleWitness::from_sequence(seq)))
}

use crate::error::Result;

use super::PrimeGraph;

pub const ISOMORPHISM_CAP: usize = 8;

fn degree_sequence(g: &PrimeGraph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.order()).map(|i| g.adjacent_indices(i).len()).collect();
    d.sort_unstable();
    d
}

fn extend(a: &[u64], b: &[u64], image: &mut Vec<usize>, used: u64) -> bool {
    let i = image.len();
    if i == a.len() {
        return true;
    }
    for j in 0..b.len() {
        if used & (1 << j) != 0 {
            continue;
        }
        let consistent = image
            .iter()
            .enumerate()
            .all(|(k, &jk)| (a[i] >> k & 1) == (b[j] >> jk & 1));
        if consistent {
            image.push(j);
            if extend(a, b, image, used | (1 << j)) {
                return true;
            }
            image.pop();
        }
    }
    false
}

/// Isomorphism test by search over vertex bijections, at most 8 vertices per side.
pub fn isomorphic_small(g1: &PrimeGraph, g2: &PrimeGraph) -> Result<bool> {
    g1.ensure_order_at_most("isomorphic_small", ISOMORPHISM_CAP)?;
    g2.ensure_order_at_most("isomorphic_small", ISOMORPHISM_CAP)?;
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() || degree_sequence(g1) != degree_sequence(g2) {
        return Ok(false);
    }
    Ok(extend(&g1.masks(), &g2.masks(), &mut Vec::with_capacity(g1.order()), 0))
}

//! Brute-force reference implementations.
//!
//! Nothing here calls the operator or traversal code of the other modules:
//! sets are raw `u32` masks, the covering of a graph is rebuilt from its edge
//! list, and reachability is a separate depth-first search. Size guards are
//! hard errors.

use crate::covering::Covering;
use crate::error::Error;
use crate::graph::Graph;
use crate::set::Subset;

/// Universe size limit for exhaustive subset enumeration.
pub const EXHAUSTIVE_LIMIT: usize = 20;

fn to_mask(set: &Subset) -> u32 {
    set.iter().fold(0, |acc, i| acc | 1 << i)
}

fn from_mask(n: usize, mask: u32) -> Subset {
    Subset::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1))
}

fn guard(n: usize) -> Result<(), Error> {
    if n > EXHAUSTIVE_LIMIT {
        Err(Error::TooLarge {
            what: "universe",
            limit: EXHAUSTIVE_LIMIT,
            found: n,
        })
    } else {
        Ok(())
    }
}

/// Every mask `x` over `n` elements with `⋃{b : b ∩ x ≠ ∅} = x`, ascending.
fn fixpoints(n: usize, blocks: &[u32]) -> Vec<u32> {
    (0u32..(1u32 << n))
        .filter(|&x| {
            let up = blocks.iter().filter(|&&b| b & x != 0).fold(0, |acc, &b| acc | b);
            up == x
        })
        .collect()
}

/// All outer definable sets of `c`, ordered by their characteristic mask.
pub fn outer_definable_exhaustive(c: &Covering) -> Result<Vec<Subset>, Error> {
    let n = c.universe().len();
    guard(n)?;
    let blocks: Vec<u32> = c.blocks().iter().map(to_mask).collect();
    Ok(fixpoints(n, &blocks).into_iter().map(|m| from_mask(n, m)).collect())
}

/// Connectedness by checking literally that no nonempty proper vertex set is
/// outer definable under the edge covering.
pub fn is_connected_exhaustive(g: &Graph) -> Result<bool, Error> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Inapplicable(format!("graph has {n} vertex; at least 2 are required")));
    }
    guard(n)?;
    let blocks: Vec<u32> = g.edges().iter().map(|&(u, v)| 1 << u | 1 << v).collect();
    let covered = blocks.iter().fold(0u32, |acc, b| acc | b);
    let all = (1u32 << n) - 1;
    if covered != all {
        return Err(Error::Inapplicable("graph has isolated vertices".into()));
    }
    Ok(fixpoints(n, &blocks) == [0, all])
}

/// Whether a `(u, v)`-path exists; `u = v` is joined by the empty path.
pub fn path_exists(g: &Graph, u: usize, v: usize) -> Result<bool, Error> {
    let n = g.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(Error::UnknownVertex(x));
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(x) = stack.pop() {
        if x == v {
            return Ok(true);
        }
        for &(a, b) in g.edges() {
            let next = if a == x {
                b
            } else if b == x {
                a
            } else {
                continue;
            };
            if !seen[next] {
                seen[next] = true;
                stack.push(next);
            }
        }
    }
    Ok(false)
}

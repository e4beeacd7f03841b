use super::structure::RelStructure;
use crate::error::{Error, Result};
use crate::partition::Partition;

pub const DEFAULT_MAX_CARRIER: usize = 12;
pub const DEFAULT_MAX_MAPS: usize = 1 << 20;

/// All self-maps preserving every relation, in lexicographic order of their tables.
pub fn relation_preserving_maps(
    s: &RelStructure,
    max_carrier: usize,
    max_maps: usize,
) -> Result<Vec<Vec<usize>>> {
    let n = s.len();
    if n > max_carrier {
        return Err(Error::SizeExceeded {
            what: "carrier size",
            actual: n,
            limit: max_carrier,
        });
    }
    // only relations that constrain anything, deduplicated
    let mut rels: Vec<&Partition> = s
        .relations()
        .iter()
        .filter(|p| !p.is_identity() && p.block_count() > 1)
        .collect();
    rels.sort();
    rels.dedup();
    // x must land in the same class as its class's least member
    let anchors: Vec<Vec<(&Partition, usize)>> = (0..n)
        .map(|x| {
            rels.iter()
                .filter(|p| p.label(x) < x)
                .map(|p| (*p, p.label(x)))
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut f = vec![0; n];
    let mut x = 0;
    let mut next = vec![0; n + 1];
    if n == 0 {
        out.push(Vec::new());
        return Ok(out);
    }
    loop {
        if next[x] == n {
            if x == 0 {
                break;
            }
            next[x] = 0;
            x -= 1;
            continue;
        }
        let y = next[x];
        next[x] += 1;
        if anchors[x].iter().all(|&(p, r)| p.same(y, f[r])) {
            f[x] = y;
            if x + 1 == n {
                if out.len() == max_maps {
                    return Err(Error::SizeExceeded {
                        what: "preserving map count",
                        actual: max_maps + 1,
                        limit: max_maps,
                    });
                }
                out.push(f.clone());
            } else {
                x += 1;
            }
        }
    }
    Ok(out)
}

use crate::order::FiniteUsl;

/// Cheap order invariants used to prune candidate images.
fn signature(l: &FiniteUsl, x: usize) -> (usize, usize, usize, usize) {
    let down = l.elements().filter(|&y| l.leq(y, x)).count();
    let up = l.elements().filter(|&y| l.leq(x, y)).count();
    let lower_covers = l
        .elements()
        .filter(|&y| y != x && l.leq(y, x))
        .filter(|&y| {
            !l.elements()
                .any(|z| z != x && z != y && l.leq(y, z) && l.leq(z, x))
        })
        .count();
    let upper_covers = l
        .elements()
        .filter(|&y| y != x && l.leq(x, y))
        .filter(|&y| {
            !l.elements()
                .any(|z| z != x && z != y && l.leq(x, z) && l.leq(z, y))
        })
        .count();
    (down, up, lower_covers, upper_covers)
}

/// Lexicographically least order isomorphism `a -> b`, if any.
///
/// Elements of `a` are assigned in index order, candidates tried ascending,
/// so the first complete assignment is the least one.
pub fn lattice_isomorphic(a: &FiniteUsl, b: &FiniteUsl) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let sa: Vec<_> = a.elements().map(|x| signature(a, x)).collect();
    let sb: Vec<_> = b.elements().map(|y| signature(b, y)).collect();
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort_unstable();
    kb.sort_unstable();
    if ka != kb {
        return None;
    }

    fn extend(
        x: usize,
        a: &FiniteUsl,
        b: &FiniteUsl,
        sa: &[(usize, usize, usize, usize)],
        sb: &[(usize, usize, usize, usize)],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        if x == a.len() {
            return true;
        }
        for y in b.elements() {
            if used[y] || sa[x] != sb[y] {
                continue;
            }
            let consistent =
                (0..x).all(|p| a.leq(p, x) == b.leq(map[p], y) && a.leq(x, p) == b.leq(y, map[p]));
            if !consistent {
                continue;
            }
            map.push(y);
            used[y] = true;
            if extend(x + 1, a, b, sa, sb, map, used) {
                return true;
            }
            map.pop();
            used[y] = false;
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(0, a, b, &sa, &sb, &mut map, &mut used).then_some(map)
}

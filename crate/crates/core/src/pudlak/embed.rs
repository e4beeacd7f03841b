use super::build::{RepSequence, RuleVariant};
use super::graph::ColoredGraph;
use crate::error::{Error, Result};
use crate::order::{galois_adjoint, DirectSystem, UslHom};

/// Same vertices and edges, each color `a` replaced by `φ(a)`.
pub fn recolor_embed(phi: &UslHom, g: &ColoredGraph) -> Result<ColoredGraph> {
    let source = phi.source();
    for e in g.edges() {
        if !source.contains(e.color) {
            return Err(Error::OutOfRange(format!("color {}", e.color)));
        }
        if phi.apply(e.color) == phi.target().unit() {
            return Err(Error::Recolor(e.color));
        }
    }
    Ok(g.with_colors(|c| phi.apply(c)))
}

/// Representations of the duals along a direct system, tied together by the
/// adjoints of its maps.
#[derive(Debug, Clone)]
pub struct DualSequence {
    /// `Θ(L_i*)`, seeded with the top of `L_i*`.
    pub levels: Vec<RepSequence>,
    /// `φ_i*: L_{i+1}* -> L_i*`.
    pub adjoints: Vec<UslHom>,
    /// `Θ(L_{i+1}*)` recolored into `L_i*`.
    pub recolored: Vec<ColoredGraph>,
    /// `shifts[i][j]`: least stage of level `i` with at least as many vertices
    /// as stage `j` of level `i + 1`, strictly above `shifts[i][j - 1]`.
    pub shifts: Vec<Vec<Option<usize>>>,
    /// `inclusion[i][j]`: the recolored stage `j` is literally a colored
    /// subgraph of stage `shifts[i][j]` of level `i`, vertex for vertex.
    pub inclusion: Vec<Vec<bool>>,
}

/// Minimal strictly increasing stage map with the size condition, `None`
/// once level `i` runs out of stages.
pub fn default_shift(lower: &[usize], upper: &[usize]) -> Vec<Option<usize>> {
    let mut out = Vec::with_capacity(upper.len());
    let mut next = 0;
    for &need in upper {
        let found = (next..lower.len()).find(|&s| lower[s] >= need);
        out.push(found);
        match found {
            Some(s) => next = s + 1,
            None => next = lower.len(),
        }
    }
    out
}

fn is_colored_subgraph(small: &ColoredGraph, big: &ColoredGraph) -> bool {
    if small.vertex_count() > big.vertex_count() {
        return false;
    }
    let have: std::collections::HashSet<(usize, usize, usize)> = big
        .edges()
        .iter()
        .map(|e| (e.u.min(e.v), e.u.max(e.v), e.color))
        .collect();
    small
        .edges()
        .iter()
        .all(|e| have.contains(&(e.u.min(e.v), e.u.max(e.v), e.color)))
}

pub fn build_dual_sequence(
    d: &DirectSystem,
    stages: usize,
    variant: RuleVariant,
    max_vertices: usize,
) -> Result<DualSequence> {
    let mut levels = Vec::with_capacity(d.len());
    for l in d.levels() {
        let dual = l.dual();
        let seed = dual.top();
        levels.push(RepSequence::build(
            dual,
            seed,
            variant,
            stages,
            max_vertices,
        )?);
    }
    let adjoints = d
        .homs()
        .iter()
        .map(galois_adjoint)
        .collect::<Result<Vec<_>>>()?;
    let mut recolored = Vec::with_capacity(adjoints.len());
    let mut shifts = Vec::with_capacity(adjoints.len());
    let mut inclusion = Vec::with_capacity(adjoints.len());
    for (i, adj) in adjoints.iter().enumerate() {
        let upper = &levels[i + 1];
        let g = recolor_embed(adj, upper.graph())?;
        let shift = default_shift(levels[i].vertex_counts(), upper.vertex_counts());
        let incl = shift
            .iter()
            .enumerate()
            .map(|(j, s)| s.is_some_and(|s| is_colored_subgraph(&g.prefix(j), &levels[i].stage(s))))
            .collect();
        recolored.push(g);
        shifts.push(shift);
        inclusion.push(incl);
    }
    Ok(DualSequence {
        levels,
        adjoints,
        recolored,
        shifts,
        inclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{make_standard, Family, HomKind};

    #[test]
    fn recolor_identity_and_chain_growth() {
        let c2 = make_standard(Family::Chain, 2).unwrap();
        let c3 = make_standard(Family::Chain, 3).unwrap();
        let g = crate::pudlak::pudlak_seed(&c2, 1).unwrap();
        assert_eq!(recolor_embed(&UslHom::identity(&c2), &g).unwrap(), g);
        let phi = UslHom::new(c2.clone(), c3.clone(), vec![0, 2], HomKind::BuslHom).unwrap();
        assert_eq!(recolor_embed(&phi, &g).unwrap().edges()[0].color, 2);
        let psi = UslHom::new(c3.clone(), c3.clone(), vec![0, 2, 2], HomKind::BuslHom).unwrap();
        let both = phi.then(&psi).unwrap();
        assert_eq!(
            recolor_embed(&both, &g).unwrap(),
            recolor_embed(&psi, &recolor_embed(&phi, &g).unwrap()).unwrap()
        );
    }

    #[test]
    fn recolor_rejects_zero_image() {
        let c2 = make_standard(Family::Chain, 2).unwrap();
        let c3 = make_standard(Family::Chain, 3).unwrap();
        let g = crate::pudlak::pudlak_seed(&c3, 1).unwrap();
        let phi = UslHom::new(c3, c2, vec![0, 0, 1], HomKind::UslHom).unwrap();
        assert_eq!(recolor_embed(&phi, &g), Err(Error::Recolor(1)));
    }

    #[test]
    fn constant_system_shares_sequence() {
        let b2 = make_standard(Family::Boolean, 2).unwrap();
        let d = DirectSystem::constant(&b2, 3);
        let s = build_dual_sequence(&d, 2, RuleVariant::B, 10_000).unwrap();
        assert_eq!(s.levels[0], s.levels[1]);
        assert_eq!(s.levels[1], s.levels[2]);
        assert_eq!(s.shifts[0], vec![Some(0), Some(1)]);
        assert!(s.inclusion.iter().flatten().all(|&b| b));
        assert_eq!(&s.recolored[0], s.levels[1].graph());
    }

    #[test]
    fn chain_into_square() {
        let c2 = make_standard(Family::Chain, 2).unwrap();
        let b2 = make_standard(Family::Boolean, 2).unwrap();
        let top = UslHom::new(c2.clone(), b2.clone(), vec![0, 3], HomKind::BuslHom).unwrap();
        let d = DirectSystem::new(vec![c2.clone(), b2.clone()], vec![top]).unwrap();
        let s = build_dual_sequence(&d, 3, RuleVariant::B, 10_000).unwrap();
        assert_eq!(s.adjoints[0].map(), &[0, 0, 0, 1]);
        assert!(s.recolored[0].edges().iter().all(|e| e.color == 0));
        assert_eq!(s.shifts[0], vec![Some(0), None, None]);
        assert!(s.inclusion[0][0]);

        // the atom embedding misses the bound, so its adjoint sends the atom
        // to the unit of the dual and the recoloring is refused
        let atom = UslHom::new(c2.clone(), b2.clone(), vec![0, 1], HomKind::UslHom).unwrap();
        let d = DirectSystem::new(vec![c2, b2], vec![atom]).unwrap();
        assert_eq!(
            build_dual_sequence(&d, 2, RuleVariant::B, 10_000).unwrap_err(),
            Error::Recolor(1)
        );
    }

    #[test]
    fn default_shift_minimal() {
        assert_eq!(
            default_shift(&[2, 5, 20], &[2, 5, 20]),
            vec![Some(0), Some(1), Some(2)]
        );
        assert_eq!(
            default_shift(&[2, 5, 20, 95], &[2, 11, 140]),
            vec![Some(0), Some(2), None]
        );
        assert_eq!(default_shift(&[2, 5], &[2, 11]), vec![Some(0), None]);
    }
}

use inseg_core::order::{
    galois_adjoint, make_standard, named, Family, FiniteLattice, HomKind, UslHom,
};
use inseg_core::partition::{all_partitions, Partition};
use proptest::prelude::*;

fn corpus() -> Vec<FiniteLattice> {
    let mut out: Vec<FiniteLattice> = (1..=4)
        .map(|n| make_standard(Family::Chain, n).unwrap())
        .collect();
    out.extend(["b2", "m3", "n5"].iter().map(|t| named(t).unwrap()));
    out
}

/// Every join- and unit-preserving map, by exhaustive search.
fn all_homs(s: &FiniteLattice, t: &FiniteLattice) -> Vec<UslHom> {
    let n = s.len();
    let total = t.len().pow(n as u32);
    (0..total)
        .filter_map(|mut code| {
            let mut map = vec![0; n];
            for slot in map.iter_mut() {
                *slot = code % t.len();
                code /= t.len();
            }
            UslHom::new(s.clone(), t.clone(), map, HomKind::UslHom).ok()
        })
        .collect()
}

#[test]
fn adjoint_laws_on_all_small_homs() {
    let lats = corpus();
    let mut checked = 0;
    for s in &lats {
        for t in &lats {
            if s.len() > 4 && t.len() > 4 {
                continue;
            }
            for phi in all_homs(s, t) {
                let adj = galois_adjoint(&phi).unwrap();
                for a in s.elements() {
                    for x in t.elements() {
                        assert_eq!(t.leq(phi.apply(a), x), s.leq(a, adj.apply(x)));
                    }
                }
                assert_eq!(galois_adjoint(&adj).unwrap().map(), phi.map());
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn adjoint_reverses_composition() {
    let c2 = make_standard(Family::Chain, 2).unwrap();
    let b2 = named("b2").unwrap();
    let m3 = named("m3").unwrap();
    for phi in all_homs(&c2, &b2) {
        for psi in all_homs(&b2, &m3) {
            let lhs = galois_adjoint(&phi.then(&psi).unwrap()).unwrap();
            let rhs = galois_adjoint(&psi)
                .unwrap()
                .then(&galois_adjoint(&phi).unwrap())
                .unwrap();
            assert_eq!(lhs.map(), rhs.map());
        }
    }
}

#[test]
fn dual_is_an_involution() {
    for l in corpus() {
        let d = l.dual();
        assert_eq!(d.unit(), l.top());
        assert_eq!(d.dual(), l);
        for a in l.elements() {
            for b in l.elements() {
                assert_eq!(d.join(a, b), l.meet(a, b));
            }
        }
    }
}

fn pairs(p: &Partition) -> Vec<(usize, usize)> {
    let n = p.len();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| p.same(x, y))
        .collect()
}

fn arb_partition(n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..n, n).prop_map(|raw| Partition::from_labels(&raw))
}

proptest! {
    #[test]
    fn partition_meet_is_intersection((a, b) in (1usize..9).prop_flat_map(|n| (arb_partition(n), arb_partition(n)))) {
        let m = a.meet(&b).unwrap();
        let want: Vec<(usize, usize)> = pairs(&a).into_iter().filter(|&(x, y)| b.same(x, y)).collect();
        prop_assert_eq!(pairs(&m), want);
    }

    #[test]
    fn partition_join_is_least_upper_bound((a, b) in (1usize..7).prop_flat_map(|n| (arb_partition(n), arb_partition(n)))) {
        let j = a.join(&b).unwrap();
        prop_assert!(a.refines(&j) && b.refines(&j));
        for c in all_partitions(a.len()) {
            if a.refines(&c) && b.refines(&c) {
                prop_assert!(j.refines(&c));
            }
        }
    }

    #[test]
    fn notation_round_trips(p in (1usize..10).prop_flat_map(arb_partition)) {
        prop_assert_eq!(Partition::parse(p.len(), &p.notation()).unwrap(), p);
    }
}

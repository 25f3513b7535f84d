use proptest::prelude::*;
use trisquare::graph::named;
use trisquare::polytope::{extreme_point, polygon_qr};
use trisquare::profile::{cycle_point, local_profile, triple_profile};
use trisquare::realize::{realize_graph, ComponentCache};
use trisquare::sample::sample_regular;
use trisquare::spectral::{densities_to_moments, spectral_moments};
use trisquare::verify::check_graphs;
use trisquare::{Graph, Location, QPoint, Rat};

fn random_graph(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sampled_graphs_satisfy_region_properties(r in 3usize..6, half in 5usize..20, seed in any::<u64>()) {
        let n = if r % 2 == 1 { 2 * half } else { half + r };
        let g = sample_regular(r, n, seed, 0).unwrap();
        let report = check_graphs(r, "sampled", [&g]).unwrap();
        prop_assert!(report.passed(), "{}", report.to_text());
        prop_assert!(polygon_qr(r).unwrap().contains(&cycle_point(&g).unwrap()).is_inside());
    }

    #[test]
    fn moments_follow_the_dictionary(r in 3usize..5, half in 5usize..12, seed in any::<u64>()) {
        let n = if r % 2 == 1 { 2 * half } else { half + r };
        let g = sample_regular(r, n, seed, 1).unwrap();
        let m = spectral_moments(&g, 4).unwrap();
        let p = cycle_point(&g).unwrap();
        prop_assert_eq!(densities_to_moments(r, &p.x, &p.y), (m.moments[3].clone(), m.moments[4].clone()));
    }

    #[test]
    fn triple_profile_complement_duality(n in 1usize..9, bits in proptest::collection::vec(any::<bool>(), 28)) {
        let g = random_graph(n, &bits);
        let a = triple_profile(&g);
        let b = triple_profile(&g.complement());
        prop_assert_eq!((a.n0, a.n1, a.n2, a.n3), (b.n3, b.n2, b.n1, b.n0));
        prop_assert!(a.identities_hold(n as u64));
    }

    #[test]
    fn graph_json_round_trip(n in 1usize..9, bits in proptest::collection::vec(any::<bool>(), 28)) {
        let g = random_graph(n, &bits);
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(Graph::parse(&json).unwrap(), g.clone());
        prop_assert_eq!(Graph::parse(&g.to_edge_list()).unwrap().edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn realized_points_recount(xn in 0i64..=6, yn in 0i64..=18) {
        let p = QPoint::new(Rat::new(xn, 6), Rat::new(yn, 12));
        let cache = ComponentCache::new();
        match polygon_qr(3).unwrap().contains(&p) {
            Location::Outside => prop_assert!(realize_graph(3, &p, 0, &cache).is_err()),
            _ => {
                let (_, g) = realize_graph(3, &p, 0, &cache).unwrap();
                prop_assert_eq!(cycle_point(&g).unwrap(), p);
                prop_assert_eq!(g.regular_degree(), Some(3));
            }
        }
    }
}

#[test]
fn per_vertex_points_of_named_graphs() {
    let k4 = local_profile(&named::complete(4), 0, true).unwrap();
    assert_eq!(k4.point(), QPoint::frac(1, 1, 3, 4));
    assert_eq!(k4.weighted_point(), k4.point());
    let petersen = local_profile(&named::petersen(), 3, true).unwrap();
    assert_eq!(petersen.point(), QPoint::origin());
    assert!(local_profile(&named::path(3), 0, true).is_err());
}

#[test]
fn extreme_points_are_corners_or_on_the_boundary() {
    for r in 3..=10 {
        let q = polygon_qr(r).unwrap();
        for l in 0..=r {
            let p = extreme_point(r, l).unwrap();
            assert_ne!(q.contains(&p), Location::Interior, "r={r} l={l}");
        }
    }
}

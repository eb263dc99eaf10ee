use proptest::prelude::*;
use rchi::chromatic::{chromatic_number, greedy_dsatur, independence_number, max_clique};
use rchi::{canonical_form, cartesian_product, decode_graph6, encode_graph6, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let m = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(20)) {
        let c = g.complement();
        let n = g.order();
        prop_assert_eq!(c.edge_count() + g.edge_count(), n * n.saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(80)) {
        let s = encode_graph6(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labelling(
        (g, perms) in arb_graph(12).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), proptest::collection::vec(arb_perm(n), 100))
        })
    ) {
        let form = canonical_form(&g);
        for p in &perms {
            prop_assert_eq!(&canonical_form(&g.permuted(p)), &form);
        }
    }

    #[test]
    fn product_order_and_regularity(g in arb_graph(6), h in arb_graph(6)) {
        let p = cartesian_product(&g, &h);
        prop_assert_eq!(p.order(), g.order() * h.order());
        prop_assert_eq!(p.edge_count(), g.edge_count() * h.order() + h.edge_count() * g.order());
        if let (Some(a), Some(b)) = (g.is_regular(), h.is_regular()) {
            if g.order() > 0 && h.order() > 0 {
                prop_assert_eq!(p.is_regular(), Some(a + b));
            }
        }
    }

    #[test]
    fn chromatic_sandwich(g in arb_graph(11)) {
        let res = chromatic_number(&g);
        prop_assert!(res.coloring.is_proper(&g));
        let omega = max_clique(&g).len();
        prop_assert!(omega <= res.chi);
        prop_assert!(res.chi <= greedy_dsatur(&g).k);
        if g.order() > 0 {
            prop_assert!(res.chi <= g.max_degree() + 1);
            prop_assert!(independence_number(&g) * res.chi >= g.order());
        }
    }
}

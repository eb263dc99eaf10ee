mod common;

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rchi::chromatic::{chromatic_number, has_chromatic_number, is_k_colorable, max_clique};
use rchi::enumerate::{count_regular, enumerate_regular};
use rchi::{canonical_form, is_isomorphic, Graph};

#[test]
fn regular_counts_match_labelled_enumeration() {
    for n in 1..=7 {
        for r in 0..n {
            if n * r % 2 == 1 {
                assert!(enumerate_regular(n, r).is_err());
                continue;
            }
            let got = enumerate_regular(n, r).unwrap();
            assert_eq!(got.len(), brute_regular_count(n, r), "n={n} r={r}");
            assert!(got.iter().all(|g| g.is_regular() == Some(r)));
        }
    }
}

#[test]
fn enumerated_graphs_are_pairwise_non_isomorphic() {
    for (n, r) in [(7, 2), (7, 4), (8, 3), (9, 4), (10, 3)] {
        let gs = enumerate_regular(n, r).unwrap();
        for i in 0..gs.len() {
            for j in i + 1..gs.len() {
                assert!(!is_isomorphic(&gs[i], &gs[j]), "n={n} r={r} ({i},{j})");
            }
        }
    }
}

#[test]
fn complement_duality_of_counts() {
    for n in 2..=11 {
        for r in 0..n {
            if n * r % 2 == 0 {
                assert_eq!(
                    count_regular(n, r).unwrap(),
                    count_regular(n, n - 1 - r).unwrap()
                );
            }
        }
    }
}

#[test]
fn canonical_forms_agree_with_brute_force_on_small_graphs() {
    // Equal brute-force forms iff equal library forms, over all graphs on 5 vertices.
    let perms = permutations(5);
    let mut pairs_seen = std::collections::HashMap::new();
    for mask in 0u64..1 << 10 {
        let g = graph_from_mask(5, mask);
        let brute = brute_canonical(&g, &perms);
        let ours = canonical_form(&g);
        let prev = pairs_seen.entry(brute).or_insert_with(|| ours.clone());
        assert_eq!(*prev, ours, "mask {mask:#x}");
    }
    // 34 graphs on 5 vertices up to isomorphism
    assert_eq!(pairs_seen.len(), 34);
    let distinct: std::collections::HashSet<_> = pairs_seen.values().collect();
    assert_eq!(distinct.len(), 34);
}

fn check_chi(g: &Graph) {
    let res = chromatic_number(g);
    assert_eq!(res.chi, brute_chi(g), "{g:?}");
    assert!(res.coloring.is_proper(g));
    assert_eq!(res.coloring.k, res.chi);
    assert!(has_chromatic_number(g, res.chi));
    assert!(!has_chromatic_number(g, res.chi + 1));
}

#[test]
fn chi_matches_brute_force_on_all_graphs_up_to_five_vertices() {
    for n in 1..=5 {
        for mask in 0u64..1 << (n * (n - 1) / 2) {
            check_chi(&graph_from_mask(n, mask));
        }
    }
}

#[test]
fn chi_matches_brute_force_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..300 {
        let n = rng.gen_range(6..=7);
        let m = n * (n - 1) / 2;
        let mask = rng.gen_range(0u64..1 << m);
        check_chi(&graph_from_mask(n, mask));
    }
}

#[test]
fn chi_matches_brute_force_on_regular_graphs() {
    for n in 1..=7 {
        for r in 0..n {
            if n * r % 2 == 0 {
                for g in enumerate_regular(n, r).unwrap() {
                    check_chi(&g);
                }
            }
        }
    }
}

#[test]
fn clique_and_colourability_match_brute_force() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        let m = n * (n - 1) / 2;
        let g = graph_from_mask(n, rng.gen_range(0u64..1 << m));
        let clique = max_clique(&g);
        assert!(g.is_clique(&clique));
        let brute_omega = (0u32..1 << n)
            .filter(|s| {
                let set: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
                g.is_clique(&set)
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap();
        assert_eq!(clique.len(), brute_omega);
        for k in 0..=n {
            assert_eq!(
                is_k_colorable(&g, k).is_some(),
                brute_colorable(&g, k),
                "k={k}"
            );
        }
    }
}

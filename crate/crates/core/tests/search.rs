use rchi::census::{census_load, census_store, Census};
use rchi::chromatic::{chromatic_number, has_chromatic_number};
use rchi::constructions::prism;
use rchi::search::{extremal_search, resolve_66, witness_structure, Budget};
use rchi::table::{verify_table, CellStatus, Minimality, TableOptions};
use rchi::{decode_graph6, is_isomorphic};

/// Re-checks a witness from its graph6 string alone.
fn reverify(g6: &str, r: usize, chi: usize) {
    let g = decode_graph6(g6).unwrap();
    assert_eq!(g.is_regular(), Some(r), "{g6}");
    assert_eq!(chromatic_number(&g).chi, chi, "{g6}");
}

#[test]
fn small_cells() {
    for (r, chi, n, count) in [
        (3, 3, 6, 1),
        (4, 4, 7, 1),
        (5, 4, 8, 3),
        (6, 5, 9, 2),
        (7, 6, 10, 1),
        (8, 6, 11, 3),
    ] {
        let cert = extremal_search(r, chi, n, Budget::default(), None).unwrap();
        assert_eq!(cert.minimal_order, Some(n), "({r},{chi})");
        assert_eq!(cert.witnesses.len(), count, "({r},{chi})");
        for w in &cert.witnesses {
            reverify(w, r, chi);
        }
        assert!(cert.exhausted.iter().all(|o| o.n * r % 2 == 0 && o.n <= n));
    }
}

#[test]
fn certificate_json_round_trip() {
    let cert = extremal_search(5, 4, 10, Budget::default(), None).unwrap();
    let text = serde_json::to_string(&cert).unwrap();
    for key in [
        "\"r\"",
        "\"chi\"",
        "\"minimal_order\"",
        "\"witnesses\"",
        "\"exhausted\"",
        "\"seconds\"",
    ] {
        assert!(text.contains(key), "{key}");
    }
    let back: rchi::search::SearchCertificate = serde_json::from_str(&text).unwrap();
    assert!(back.same_result(&cert));
}

#[test]
fn runs_are_deterministic() {
    let a = extremal_search(9, 6, 12, Budget::default(), None).unwrap();
    let b = extremal_search(9, 6, 12, Budget::default(), None).unwrap();
    assert!(a.same_result(&b));
    assert_eq!(a.witnesses.len(), 6);
}

#[test]
fn census_persists_between_runs() {
    let tmp = tempfile::tempdir().unwrap();
    let mut first = census_load(tmp.path()).unwrap();
    let a = extremal_search(7, 5, 10, Budget::default(), Some(&mut first)).unwrap();
    assert!(first.is_complete(10, 7));
    let mut second = census_load(tmp.path()).unwrap();
    assert!(second.is_complete(10, 7));
    assert_eq!(second.entry(10, 7).unwrap().count, 5);
    let b = extremal_search(7, 5, 10, Budget::default(), Some(&mut second)).unwrap();
    assert!(a.same_result(&b));
    let hist = &second.entry(10, 7).unwrap().chi_histogram;
    assert_eq!(hist.get(&5), Some(&3));
}

#[test]
fn in_memory_census_stores_to_disk() {
    let tmp = tempfile::tempdir().unwrap();
    let mut c = Census::in_memory();
    c.regular_graphs(9, 4).unwrap();
    census_store(&c, tmp.path()).unwrap();
    census_store(&c, tmp.path()).unwrap();
    let back = census_load(tmp.path()).unwrap();
    assert_eq!(back.entries().count(), 1);
    assert_eq!(back.entry(9, 4).unwrap().count, 16);
}

#[test]
fn six_six_is_eleven() {
    let cert = resolve_66().unwrap();
    assert_eq!(cert.minimal_order, Some(11));
    let orders: Vec<_> = cert.exhausted.iter().map(|o| (o.n, o.count)).collect();
    assert_eq!(orders, vec![(8, 1), (9, 4), (10, 21), (11, 266)]);
    assert_eq!(cert.witnesses.len(), 2);
    let mut omegas = Vec::new();
    for w in &cert.witnesses {
        reverify(w, 6, 6);
        let s = witness_structure(&decode_graph6(w).unwrap());
        assert_eq!(s.alpha, 2);
        omegas.push(s.omega);
    }
    omegas.sort();
    assert_eq!(omegas, vec![4, 5]);
    // the order-12 upper construction is not among them but is a (6|6)-graph
    assert!(has_chromatic_number(&prism(6).unwrap(), 6));
    let w = decode_graph6(&cert.witnesses[0]).unwrap();
    assert!(!is_isomorphic(&w, &prism(6).unwrap()));
}

#[test]
fn table_with_small_budget() {
    let opts = TableOptions {
        minimality: true,
        budget: Budget {
            max_order: 10,
            max_degree: 3,
        },
    };
    let rep = verify_table(opts, None).unwrap();
    assert_eq!((rep.verified, rep.failed, rep.open), (38, 0, 1));
    let cell = |r, chi| rep.cells.iter().find(|c| (c.r, c.chi) == (r, chi)).unwrap();
    assert!(matches!(
        cell(3, 3).minimality,
        Some(Minimality::Certified {
            witnesses: Some(1),
            ..
        })
    ));
    assert!(matches!(
        cell(9, 3).minimality,
        Some(Minimality::NotChecked { .. })
    ));
    assert!(matches!(
        cell(7, 2).minimality,
        Some(Minimality::LowerBound)
    ));
    assert_eq!(cell(6, 6).status, CellStatus::Open);
    let g = &cell(9, 3).graphs[0];
    assert_eq!((g.order, g.regularity, g.chi), (16, Some(9), 3));
}

//! Exhaustive search for the least order of an `(r|χ)`-graph.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{feasible, lower_bound};
use crate::census::Census;
use crate::chromatic::{has_chromatic_number, independence_number, max_clique};
use crate::constructions::prism;
use crate::enumerate::enumerate_regular;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::encode_graph6;

/// Which cells are small enough to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_order: usize,
    /// Bound on `min(r, n-1-r)`, the degree actually enumerated.
    pub max_degree: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_order: 14,
            max_degree: 4,
        }
    }
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_order: usize::MAX,
        max_degree: usize::MAX,
    };

    pub fn allows(&self, n: usize, r: usize) -> bool {
        n <= self.max_order && r < n && r.min(n - 1 - r) <= self.max_degree
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCount {
    pub n: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchCertificate {
    pub r: usize,
    pub chi: usize,
    /// The least order of an `(r|χ)`-graph, when found.
    pub minimal_order: Option<usize>,
    /// Without a witness: every order up to this one is ruled out.
    pub open_above: Option<usize>,
    /// graph6 strings of all witnesses at `minimal_order`, in canonical order.
    pub witnesses: Vec<String>,
    pub exhausted: Vec<OrderCount>,
    pub seconds: f64,
}

impl SearchCertificate {
    /// Equality ignoring wall time.
    pub fn same_result(&self, other: &SearchCertificate) -> bool {
        (self.r, self.chi, self.minimal_order, self.open_above)
            == (other.r, other.chi, other.minimal_order, other.open_above)
            && self.witnesses == other.witnesses
            && self.exhausted == other.exhausted
    }
}

/// Ascends from the lower bound through every order with `n·r` even up to
/// `max_order`, stopping at the first order that has a witness. Orders the
/// budget excludes end the search with an open result.
pub fn extremal_search(
    r: usize,
    chi: usize,
    max_order: usize,
    budget: Budget,
    mut census: Option<&mut Census>,
) -> Result<SearchCertificate> {
    if !feasible(r, chi) {
        return Err(Error::Infeasible { r, chi });
    }
    let lower = lower_bound(r, chi)?;
    if max_order < lower {
        return Err(Error::InvalidParameter(format!(
            "max order {max_order} is below the lower bound {lower}"
        )));
    }
    let start = Instant::now();
    let mut cert = SearchCertificate {
        r,
        chi,
        minimal_order: None,
        open_above: None,
        witnesses: Vec::new(),
        exhausted: Vec::new(),
        seconds: 0.0,
    };
    for n in lower..=max_order {
        if n * r % 2 == 1 {
            continue;
        }
        if !budget.allows(n, r) {
            cert.open_above = Some(n - 1);
            break;
        }
        let graphs = match census.as_deref_mut() {
            Some(c) => c.regular_graphs(n, r)?,
            None => enumerate_regular(n, r)?,
        };
        let witnesses: Vec<String> = graphs
            .par_iter()
            .filter(|g| has_chromatic_number(g, chi))
            .map(encode_graph6)
            .collect();
        cert.exhausted.push(OrderCount {
            n,
            count: graphs.len(),
        });
        if !witnesses.is_empty() {
            cert.minimal_order = Some(n);
            cert.witnesses = witnesses;
            break;
        }
    }
    if cert.minimal_order.is_none() && cert.open_above.is_none() {
        cert.open_above = Some(max_order);
    }
    cert.seconds = start.elapsed().as_secs_f64();
    Ok(cert)
}

/// Properties any `(k|k)`-graph on `2k-1` vertices must have, checked after
/// the fact on witnesses: clique number `k-1`, and the edges missing from
/// `G` outside a largest clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessStructure {
    pub order: usize,
    pub omega: usize,
    pub alpha: usize,
    /// Edges of the complement among the vertices outside a maximum clique.
    pub complement_edges_outside_clique: usize,
}

pub fn witness_structure(g: &Graph) -> WitnessStructure {
    let clique = max_clique(g);
    let rest: Vec<usize> = (0..g.order()).filter(|v| !clique.contains(v)).collect();
    WitnessStructure {
        order: g.order(),
        omega: clique.len(),
        alpha: independence_number(g),
        complement_edges_outside_clique: g.induced(&rest).complement().edge_count(),
    }
}

/// Settles `n(6|6)`, which lies in `{11, 12}`. Orders 8 to 11 are enumerated
/// through their complements; if order 11 has no witness, `K_6 □ K_2`
/// certifies 12.
pub fn resolve_66() -> Result<SearchCertificate> {
    let budget = Budget {
        max_order: 11,
        max_degree: 4,
    };
    let mut cert = extremal_search(6, 6, 11, budget, None)?;
    if cert.minimal_order.is_none() {
        let upper = prism(6)?;
        debug_assert!(has_chromatic_number(&upper, 6));
        cert.minimal_order = Some(12);
        cert.open_above = None;
        cert.witnesses = vec![encode_graph6(&upper)];
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::constructions::antihole;
    use crate::graph6::decode_graph6;

    fn search(r: usize, chi: usize, max: usize) -> SearchCertificate {
        extremal_search(r, chi, max, Budget::default(), None).unwrap()
    }

    #[test]
    fn antihole_seven_is_unique() {
        let c = search(4, 4, 10);
        assert_eq!(c.minimal_order, Some(7));
        assert_eq!(c.witnesses.len(), 1);
        let w = decode_graph6(&c.witnesses[0]).unwrap();
        assert!(is_isomorphic(&w, &antihole(7).unwrap()));
        assert_eq!(
            c.exhausted,
            vec![OrderCount { n: 6, count: 1 }, OrderCount { n: 7, count: 2 }]
        );
    }

    #[test]
    fn three_quintic_witnesses() {
        let c = search(5, 4, 8);
        assert_eq!(c.minimal_order, Some(8));
        assert_eq!(c.witnesses.len(), 3);
    }

    #[test]
    fn odd_degree_skips_odd_orders() {
        let c = search(5, 3, 12);
        assert_eq!(c.minimal_order, Some(10));
        assert_eq!(
            c.exhausted.iter().map(|o| o.n).collect::<Vec<_>>(),
            vec![8, 10]
        );
    }

    #[test]
    fn open_when_max_order_reached() {
        let c = search(5, 3, 9);
        assert_eq!(c.minimal_order, None);
        assert_eq!(c.open_above, Some(9));
        assert!(c.witnesses.is_empty());
    }

    #[test]
    fn open_when_budget_exceeded() {
        let tiny = Budget {
            max_order: 9,
            max_degree: 4,
        };
        let c = extremal_search(5, 3, 12, tiny, None).unwrap();
        assert_eq!(c.open_above, Some(9));
        assert_eq!(c.exhausted.len(), 1);
    }

    #[test]
    fn errors() {
        assert!(matches!(search_err(2, 4, 10), Error::Infeasible { .. }));
        assert!(matches!(search_err(4, 4, 5), Error::InvalidParameter(_)));
    }

    fn search_err(r: usize, chi: usize, max: usize) -> Error {
        extremal_search(r, chi, max, Budget::default(), None).unwrap_err()
    }

    #[test]
    fn deterministic() {
        let a = search(7, 5, 10);
        let b = search(7, 5, 10);
        assert!(a.same_result(&b));
        assert_eq!(a.witnesses.len(), 3);
    }

    #[test]
    fn census_backed_search_agrees() {
        let mut census = Census::in_memory();
        let a = extremal_search(6, 5, 9, Budget::default(), Some(&mut census)).unwrap();
        let b = search(6, 5, 9);
        assert!(a.same_result(&b));
        assert!(census.is_complete(8, 6) && census.is_complete(9, 6));
    }
}

//! Generation of all `r`-regular graphs on `n` vertices up to isomorphism.
//!
//! States are partial graphs of maximum degree `r`. A vertex of degree `r`
//! is full; the others may only gain edges to each other. Each step takes
//! the non-full vertex of largest degree (lowest label on ties) and joins it
//! to every admissible set of non-full, non-adjacent vertices that fills its
//! degree. The completions of a state depend only on its isomorphism class,
//! so states are stored by canonical form and each class is expanded once.
//! Children are pruned when the residual degrees cannot be realised (odd
//! sum, too few admissible partners, or the Erdős–Gallai condition fails).
//!
//! The expansion of a frontier runs in parallel on the ambient rayon pool;
//! results are merged by canonical form, so output order never depends on
//! scheduling.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Enumeration works on single-word adjacency rows.
pub const MAX_ORDER: usize = 64;

fn validate(n: usize, r: usize) -> Result<()> {
    if n == 0 || r >= n {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= r < n, got n={n}, r={r}"
        )));
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge {
            what: "regular graph enumeration",
            n,
            limit: MAX_ORDER,
        });
    }
    if n * r % 2 == 1 {
        return Err(Error::Parity { n, r });
    }
    Ok(())
}

/// One graph per isomorphism class, sorted by canonical form and given in
/// canonical labelling. Degrees above `(n-1)/2` are generated as complements.
pub fn enumerate_regular(n: usize, r: usize) -> Result<Vec<Graph>> {
    validate(n, r)?;
    let co = n - 1 - r;
    if r > co {
        let mut forms: Vec<CanonicalForm> = enumerate_direct(n, co)
            .into_par_iter()
            .map(|f| canonical_form(&f.to_graph().complement()))
            .collect();
        forms.sort_unstable();
        return Ok(forms.iter().map(CanonicalForm::to_graph).collect());
    }
    Ok(enumerate_direct(n, r)
        .iter()
        .map(CanonicalForm::to_graph)
        .collect())
}

pub fn count_regular(n: usize, r: usize) -> Result<usize> {
    validate(n, r)?;
    Ok(enumerate_direct(n, r.min(n - 1 - r)).len())
}

fn enumerate_direct(n: usize, r: usize) -> Vec<CanonicalForm> {
    let start = Graph::empty(n);
    if r == 0 {
        return vec![canonical_form(&start)];
    }
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut finished: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut kids: Vec<CanonicalForm> = frontier
            .par_iter()
            .flat_map_iter(|s| children(s, r))
            .collect();
        kids.par_sort_unstable();
        kids.dedup();
        let mut next = Vec::new();
        for k in kids {
            let g = k.to_graph();
            if g.min_degree() == r {
                finished.insert(k);
            } else if seen.insert(k) {
                next.push(g);
            }
        }
        frontier = next;
    }
    finished.into_iter().collect()
}

fn children(s: &Graph, r: usize) -> Vec<CanonicalForm> {
    let n = s.order();
    let deg = s.degrees();
    let Some(v) = (0..n)
        .filter(|&v| deg[v] < r)
        .max_by(|&x, &y| (deg[x], y).cmp(&(deg[y], x)))
    else {
        return Vec::new();
    };
    let need = r - deg[v];
    let cands: Vec<usize> = (0..n)
        .filter(|&u| u != v && deg[u] < r && !s.has_edge(u, v))
        .collect();
    if cands.len() < need {
        return Vec::new();
    }
    let base: Vec<u64> = (0..n).map(|u| s.row(u)[0]).collect();
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(need);
    for_each_combination(&cands, need, 0, &mut pick, &mut |chosen| {
        let mut rows = base.clone();
        for &u in chosen {
            rows[v] |= 1 << u;
            rows[u] |= 1 << v;
        }
        if realisable(&rows, r) {
            out.push(canonical_form(&Graph::from_rows(n, rows)));
        }
    });
    out
}

fn for_each_combination<F: FnMut(&[usize])>(
    items: &[usize],
    k: usize,
    from: usize,
    pick: &mut Vec<usize>,
    f: &mut F,
) {
    if pick.len() == k {
        f(pick);
        return;
    }
    let remaining = k - pick.len();
    for i in from..=items.len() - remaining {
        pick.push(items[i]);
        for_each_combination(items, k, i + 1, pick, f);
        pick.pop();
    }
}

/// Necessary conditions for the residual degrees to be completed among
/// the non-full vertices.
fn realisable(rows: &[u64], r: usize) -> bool {
    let n = rows.len();
    let residual: Vec<usize> = rows.iter().map(|w| r - w.count_ones() as usize).collect();
    let open: u64 = (0..n)
        .filter(|&u| residual[u] > 0)
        .fold(0, |m, u| m | 1 << u);
    let mut total = 0;
    for u in 0..n {
        if residual[u] == 0 {
            continue;
        }
        let partners = (open & !rows[u] & !(1 << u)).count_ones() as usize;
        if partners < residual[u] {
            return false;
        }
        total += residual[u];
    }
    if total % 2 == 1 {
        return false;
    }
    let mut seq: Vec<usize> = residual.into_iter().filter(|&d| d > 0).collect();
    seq.sort_unstable_by(|a, b| b.cmp(a));
    erdos_gallai(&seq)
}

/// Erdős–Gallai test for a non-increasing sequence with even sum.
pub(crate) fn erdos_gallai(seq: &[usize]) -> bool {
    let mut lhs = 0;
    for k in 1..=seq.len() {
        lhs += seq[k - 1];
        let rhs = k * (k - 1) + seq[k..].iter().map(|&d| d.min(k)).sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

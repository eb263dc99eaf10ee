//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's canonical labelling, enumeration or colouring code.

#![allow(dead_code)]

use std::collections::HashSet;

use rchi::Graph;

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Unordered pairs of `0..n` in a fixed order; bit `i` of an edge mask
/// refers to `pairs(n)[i]`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).unwrap()
}

/// Lexicographically least edge mask over all relabellings.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.order();
    let ps = pairs(n);
    let index = |u: usize, v: usize| {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        ps.iter().position(|&e| e == (u, v)).unwrap()
    };
    let table: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| if u == v { 0 } else { index(u, v) })
                .collect()
        })
        .collect();
    let edges = g.edges();
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |m, &(u, v)| m | 1 << table[p[u]][p[v]])
        })
        .min()
        .unwrap_or(0)
}

/// Number of isomorphism classes of `r`-regular graphs on `n <= 7` vertices,
/// by listing every labelled graph.
pub fn brute_regular_count(n: usize, r: usize) -> usize {
    let perms = permutations(n);
    let m = n * (n - 1) / 2;
    let mut classes = HashSet::new();
    for mask in 0u64..1 << m {
        if mask.count_ones() as usize * 2 != n * r {
            continue;
        }
        let g = graph_from_mask(n, mask);
        if g.is_regular() == Some(r) {
            classes.insert(brute_canonical(&g, &perms));
        }
    }
    classes.len()
}

/// Whether some assignment of `k` colours is proper, trying them all
/// (vertex 0 fixed to colour 0).
pub fn brute_colorable(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let edges = g.edges();
    let mut col = vec![0usize; n];
    let total = k.pow(n as u32 - 1);
    for code in 0..total {
        let mut c = code;
        for slot in col.iter_mut().skip(1) {
            *slot = c % k;
            c /= k;
        }
        if edges.iter().all(|&(u, v)| col[u] != col[v]) {
            return true;
        }
    }
    false
}

pub fn brute_chi(g: &Graph) -> usize {
    (0..=g.order()).find(|&k| brute_colorable(g, k)).unwrap()
}

/// Multisets of cycle lengths (parts >= 3, non-increasing) summing to `total`.
pub fn cycle_partitions(total: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (3..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total >= 3 {
        go(total, total, &mut Vec::new(), &mut out);
    }
    out
}

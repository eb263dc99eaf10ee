//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! A [`Graph`] stores one adjacency bit row per vertex. Rows are padded to a
//! whole number of 64-bit words so that set operations on neighbourhoods are
//! word-parallel. Values are immutable once built; use [`GraphBuilder`] to
//! assemble one edge at a time.

use std::fmt;

use crate::error::Error;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Iterator over the set bits of a word slice.
pub(crate) struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v);
            }
        }
        b.build()
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut b = GraphBuilder::new(n);
        for v in 0..n {
            b.add_edge(v, (v + 1) % n);
        }
        Ok(b.build())
    }

    /// Complete bipartite graph with parts `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        let mut b = GraphBuilder::new(p + q);
        for u in 0..p {
            for v in p..p + q {
                b.add_edge(u, v);
            }
        }
        b.build()
    }

    /// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
    pub fn petersen() -> Self {
        let mut b = GraphBuilder::new(10);
        for i in 0..5 {
            b.add_edge(i, (i + 1) % 5);
            b.add_edge(5 + i, 5 + (i + 2) % 5);
            b.add_edge(i, i + 5);
        }
        b.build()
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.try_add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub(crate) fn from_rows(n: usize, rows: Vec<u64>) -> Self {
        let words = words_for(n);
        debug_assert_eq!(rows.len(), n * words);
        Graph { n, words, rows }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Adjacency bit row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        Ones::new(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_profile(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// `Some(r)` when every vertex has degree `r`. The null graph counts as
    /// 0-regular.
    pub fn is_regular(&self) -> Option<usize> {
        let r = if self.n == 0 { 0 } else { self.degree(0) };
        (1..self.n).all(|v| self.degree(v) == r).then_some(r)
    }

    pub fn complement(&self) -> Graph {
        let mut out = Graph::empty(self.n);
        for v in 0..self.n {
            for w in 0..self.words {
                out.rows[v * self.words + w] = !self.rows[v * self.words + w];
            }
            out.clear_bit(v, v);
            out.mask_tail(v);
        }
        out
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut b = GraphBuilder::new(self.n);
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v]);
        }
        b.build()
    }

    /// Subgraph induced by `keep`, relabelled in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j);
                }
            }
        }
        b.build()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Whether `set` is a clique.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            u < self.n
                && set[i + 1..]
                    .iter()
                    .all(|&v| v < self.n && u != v && self.has_edge(u, v))
        })
    }

    /// Whether `set` is an independent set.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            u < self.n
                && set[i + 1..]
                    .iter()
                    .all(|&v| v < self.n && u != v && !self.has_edge(u, v))
        })
    }

    fn clear_bit(&mut self, v: usize, u: usize) {
        self.rows[v * self.words + u / 64] &= !(1u64 << (u % 64));
    }

    fn mask_tail(&mut self, v: usize) {
        let rem = self.n % 64;
        if rem != 0 {
            let last = v * self.words + self.words - 1;
            self.rows[last] &= (1u64 << rem) - 1;
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Mutable accumulator for a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    g: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { g: Graph::empty(n) }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder { g: g.clone() }
    }

    pub fn order(&self) -> usize {
        self.g.n
    }

    /// Panics on loops or out-of-range endpoints; use [`try_add_edge`](Self::try_add_edge)
    /// for untrusted input.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        let n = self.g.n;
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                n,
            });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let w = self.g.words;
        self.g.rows[u * w + v / 64] |= 1 << (v % 64);
        self.g.rows[v * w + u / 64] |= 1 << (u % 64);
        Ok(())
    }

    /// Removes `{u, v}`; returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let present = self.g.has_edge(u, v);
        self.g.clear_bit(u, v);
        self.g.clear_bit(v, u);
        present
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.g.has_edge(u, v)
    }

    pub fn build(self) -> Graph {
        self.g
    }
}

/// Block-diagonal union; the i-th input occupies the next `order()` labels.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph, Error> {
    if gs.is_empty() {
        return Err(Error::EmptyUnion);
    }
    let n = gs.iter().map(Graph::order).sum();
    let mut b = GraphBuilder::new(n);
    let mut offset = 0;
    for g in gs {
        for (u, v) in g.edges() {
            b.add_edge(offset + u, offset + v);
        }
        offset += g.order();
    }
    Ok(b.build())
}

/// Cartesian product `g □ h`. The pair `(u, u')` gets label `u * h.order() + u'`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    let mut b = GraphBuilder::new(g.order() * m);
    for u in 0..g.order() {
        for (x, y) in h.edges() {
            b.add_edge(u * m + x, u * m + y);
        }
    }
    for (u, v) in g.edges() {
        for x in 0..m {
            b.add_edge(u * m + x, v * m + x);
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_triangle_is_edgeless() {
        let g = Graph::complete(3).complement();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn complement_is_involution_on_k5() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.complement().complement(), k5);
    }

    #[test]
    fn complement_handles_word_boundaries() {
        for n in [63, 64, 65, 128, 130] {
            let g = Graph::empty(n).complement();
            assert_eq!(g.is_regular(), Some(n - 1));
            assert_eq!(g.complement(), Graph::empty(n));
        }
    }

    #[test]
    fn union_of_two_pentagons() {
        let c5 = Graph::cycle(5).unwrap();
        let g = disjoint_union(&[c5.clone(), c5]).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.is_regular(), Some(2));
        assert!(!g.is_connected());
        assert!(!g.has_edge(4, 5));
    }

    #[test]
    fn union_of_single_k1() {
        let g = disjoint_union(&[Graph::empty(1)]).unwrap();
        assert_eq!(g, Graph::empty(1));
    }

    #[test]
    fn union_of_nothing_fails() {
        assert!(matches!(disjoint_union(&[]), Err(Error::EmptyUnion)));
    }

    #[test]
    fn union_3_4_5_is_2_regular_on_12() {
        let parts: Vec<_> = [3, 4, 5]
            .iter()
            .map(|&m| Graph::cycle(m).unwrap())
            .collect();
        let g = disjoint_union(&parts).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.is_regular(), Some(2));
    }

    #[test]
    fn product_with_k1_is_identity() {
        let p = Graph::petersen();
        assert_eq!(cartesian_product(&p, &Graph::empty(1)), p);
        assert_eq!(cartesian_product(&Graph::empty(1), &p), p);
    }

    #[test]
    fn k5_box_k2() {
        let g = cartesian_product(&Graph::complete(5), &Graph::complete(2));
        assert_eq!(g.order(), 10);
        assert_eq!(g.is_regular(), Some(5));
    }

    #[test]
    fn regularity_queries() {
        assert_eq!(Graph::cycle(9).unwrap().is_regular(), Some(2));
        assert_eq!(Graph::empty(1).is_regular(), Some(0));
        assert_eq!(Graph::complete_bipartite(1, 3).is_regular(), None);
        assert_eq!(
            Graph::complete_bipartite(1, 3).degree_profile(),
            vec![3, 1, 1, 1]
        );
    }

    #[test]
    fn builder_rejects_bad_edges() {
        let mut b = GraphBuilder::new(3);
        assert!(matches!(b.try_add_edge(1, 1), Err(Error::SelfLoop(1))));
        assert!(b.try_add_edge(0, 3).is_err());
    }

    #[test]
    fn petersen_shape() {
        let p = Graph::petersen();
        assert_eq!(p.is_regular(), Some(3));
        assert_eq!(p.edge_count(), 15);
    }
}

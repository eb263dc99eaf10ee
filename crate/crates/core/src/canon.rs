//! Canonical labelling by individualisation and refinement.
//!
//! The search tree follows the usual scheme: refine the ordered partition to
//! an equitable one, individualise each vertex of the first non-singleton
//! cell, recurse. Every leaf is a discrete partition, i.e. a labelling, and
//! the canonical form is the least relabelled adjacency matrix over all
//! leaves. Automorphisms discovered as equal leaves prune the tree twice
//! over: children in the same orbit of the prefix stabiliser are skipped, and
//! a leaf equivalent to the first or best leaf abandons the whole subtree up
//! to the node where the two paths diverge.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex-transitivity testing refuses graphs larger than this by default.
pub const DEFAULT_TRANSITIVITY_LIMIT: usize = 16;

/// Labelling-invariant key: equal exactly for isomorphic (colour-preserving,
/// when coloured) graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    colors: Vec<u32>,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// The graph in canonical labelling.
    pub fn to_graph(&self) -> Graph {
        Graph::from_rows(self.n, self.rows.clone())
    }
}

#[derive(Clone, Debug)]
pub struct Canonical {
    pub form: CanonicalForm,
    /// `labeling[i]` is the input vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    /// Automorphisms found during the search (as vertex maps).
    pub generators: Vec<Vec<usize>>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonize(g, None).form
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_profile() == h.degree_profile()
        && canonical_form(g) == canonical_form(h)
}

/// Canonical labelling of `g`, optionally respecting a vertex colouring.
pub fn canonize(g: &Graph, colors: Option<&[u32]>) -> Canonical {
    let n = g.order();
    let colors: Vec<u32> = match colors {
        Some(c) => {
            assert_eq!(c.len(), n, "colour vector length mismatch");
            c.to_vec()
        }
        None => vec![0; n],
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in order {
        match cells.last_mut() {
            Some(cell) if colors[cell[0]] == colors[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }

    let mut s = Searcher {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut path = Vec::new();
    s.visit(cells, &mut path);
    let best = s.best.expect("search tree has at least one leaf");
    let sorted_colors = best.lab.iter().map(|&v| colors[v]).collect();
    Canonical {
        form: CanonicalForm {
            n,
            colors: sorted_colors,
            rows: best.cert,
        },
        labeling: best.lab,
        generators: s.generators,
    }
}

struct Leaf {
    path: Vec<usize>,
    lab: Vec<usize>,
    cert: Vec<u64>,
}

struct Searcher<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

impl Searcher<'_> {
    /// Returns `Some(level)` when an automorphism shows that every node
    /// deeper than `level` on the current path is already accounted for.
    fn visit(&mut self, mut cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let lab: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            return self.leaf(lab, path);
        };

        let depth = path.len();
        let cell = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        let mut orbits: Option<(usize, Vec<usize>)> = None;
        for &v in &cell {
            if !explored.is_empty() {
                let stale = orbits
                    .as_ref()
                    .is_none_or(|(seen, _)| *seen != self.generators.len());
                if stale {
                    orbits = Some((self.generators.len(), self.stabiliser_orbits(path)));
                }
                let parent = &mut orbits.as_mut().expect("computed above").1;
                let root = find(parent, v);
                if explored.iter().any(|&e| find(parent, e) == root) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);

            path.push(v);
            let jump = self.visit(child, path);
            path.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, lab: Vec<usize>, path: &[usize]) -> Option<usize> {
        let cert = certificate(self.g, &lab);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                path: path.to_vec(),
                lab,
                cert,
            };
            self.best = Some(Leaf {
                path: leaf.path.clone(),
                lab: leaf.lab.clone(),
                cert: leaf.cert.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let gen = automorphism(&first.lab, &lab);
            let level = common_prefix(&first.path, path);
            self.generators.push(gen);
            return Some(level);
        }
        let best = self.best.as_ref().expect("set with first");
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf {
                    path: path.to_vec(),
                    lab,
                    cert,
                });
                None
            }
            std::cmp::Ordering::Equal => {
                let gen = automorphism(&best.lab, &lab);
                let level = common_prefix(&best.path, path);
                self.generators.push(gen);
                Some(level)
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    /// Union-find forest of the orbits of the group generated by the known
    /// automorphisms that fix `path` pointwise.
    fn stabiliser_orbits(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        for gen in &self.generators {
            if path.iter().all(|&p| gen[p] == p) {
                for (v, &w) in gen.iter().enumerate() {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        parent
    }
}

/// The map sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gen = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gen[a] = b;
    }
    gen
}

fn certificate(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = g.order();
    let words = g.words();
    let mut inv = vec![0; n];
    for (i, &v) in lab.iter().enumerate() {
        inv[v] = i;
    }
    let mut out = vec![0u64; n * words];
    for (i, &v) in lab.iter().enumerate() {
        for u in g.neighbors(v) {
            let j = inv[u];
            out[i * words + j / 64] |= 1 << (j % 64);
        }
    }
    out
}

/// Refines an ordered partition until it is equitable. Cells split by the
/// number of neighbours in a splitter cell, smaller counts first.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let words = g.words();
    let mut mask = vec![0u64; words];
    let mut keyed: Vec<(u32, usize)> = Vec::new();
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            mask.fill(0);
            for &v in &cells[si] {
                mask[v / 64] |= 1 << (v % 64);
            }
            let mut ci = 0;
            while ci < cells.len() {
                if cells[ci].len() == 1 {
                    ci += 1;
                    continue;
                }
                keyed.clear();
                keyed.extend(cells[ci].iter().map(|&v| {
                    let c: u32 = g
                        .row(v)
                        .iter()
                        .zip(&mask)
                        .map(|(a, b)| (a & b).count_ones())
                        .sum();
                    (c, v)
                }));
                if keyed.iter().all(|&(c, _)| c == keyed[0].0) {
                    ci += 1;
                    continue;
                }
                keyed.sort_by_key(|&(c, _)| c);
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for &(c, v) in &keyed {
                    if last != Some(c) {
                        parts.push(Vec::new());
                        last = Some(c);
                    }
                    parts.last_mut().expect("pushed").push(v);
                }
                let added = parts.len();
                cells.splice(ci..=ci, parts);
                ci += added;
                changed = true;
            }
            si += 1;
        }
        if !changed {
            break;
        }
    }
}

/// Whether the automorphism group of `g` acts transitively on its vertices.
pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    is_vertex_transitive_with_limit(g, DEFAULT_TRANSITIVITY_LIMIT)
}

pub fn is_vertex_transitive_with_limit(g: &Graph, limit: usize) -> Result<bool> {
    let n = g.order();
    if n > limit {
        return Err(Error::TooLarge {
            what: "vertex-transitivity testing",
            n,
            limit,
        });
    }
    if n <= 1 {
        return Ok(true);
    }
    if g.is_regular().is_none() {
        return Ok(false);
    }
    // some automorphism maps 0 to v iff (g, 0 marked) and (g, v marked) are isomorphic
    let marked = |v: usize| {
        let mut colors = vec![0u32; n];
        colors[v] = 1;
        canonize(g, Some(&colors)).form
    };
    let base = marked(0);
    let mut reached = vec![false; n];
    reached[0] = true;
    let known = canonize(g, None).generators;
    for v in 1..n {
        if reached[v] {
            continue;
        }
        if marked(v) != base {
            return Ok(false);
        }
        reached[v] = true;
        // close `reached` under the known automorphisms
        let mut changed = true;
        while changed {
            changed = false;
            for gen in &known {
                for u in 0..n {
                    if reached[u] && !reached[gen[u]] {
                        reached[gen[u]] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    Ok(true)
}

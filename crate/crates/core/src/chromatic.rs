//! Exact chromatic, clique and independence numbers with certificates.
//!
//! The chromatic number is found by descending `k`-colourability probes
//! starting from a DSATUR colouring. Each probe is a complete DSATUR-ordered
//! backtracking search in which a maximum clique is pre-coloured with
//! distinct colours and a new colour is only ever opened as the next unused
//! one.

use serde::Serialize;

use crate::constructions::CycleUnionSpec;
use crate::graph::{Graph, Ones};

/// A proper colouring using exactly the colours `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    /// Renumbers colours by first appearance so that `0..k` are all used.
    fn normalised(raw: &[usize]) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors: Vec<usize> = raw
            .iter()
            .map(|&c| {
                let next = map.len();
                *map.entry(c).or_insert(next)
            })
            .collect();
        Coloring {
            k: map.len(),
            colors,
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order()
            && self.colors.iter().all(|&c| c < self.k)
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// Colour classes, each an independent set.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// DSATUR: repeatedly colour the vertex with the most distinct neighbour
/// colours (ties: higher degree, then lower index) with its least free colour.
pub fn greedy_dsatur(g: &Graph) -> Coloring {
    let n = g.order();
    let words = n.div_ceil(64).max(1);
    let mut color = vec![usize::MAX; n];
    let mut seen = vec![0u64; n * words];
    let mut sat = vec![0usize; n];
    let degree = g.degrees();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by(|&x, &y| (sat[x], degree[x], y).cmp(&(sat[y], degree[y], x)))
            .expect("an uncoloured vertex remains");
        let row = &seen[v * words..(v + 1) * words];
        let c = (0..)
            .find(|&c| row[c / 64] >> (c % 64) & 1 == 0)
            .expect("free colour");
        color[v] = c;
        for u in g.neighbors(v) {
            let w = &mut seen[u * words + c / 64];
            if *w >> (c % 64) & 1 == 0 {
                *w |= 1 << (c % 64);
                sat[u] += 1;
            }
        }
    }
    Coloring::normalised(&color)
}

/// A maximum clique, by branch and bound with a greedy colouring bound.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let words = n.div_ceil(64).max(1);
    let mut all = vec![0u64; words];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand_clique(g, &mut current, all, &mut best);
    best.sort_unstable();
    best
}

fn expand_clique(g: &Graph, current: &mut Vec<usize>, mut cand: Vec<u64>, best: &mut Vec<usize>) {
    let (order, bound) = colour_sort(g, &cand);
    for i in (0..order.len()).rev() {
        if current.len() + bound[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.push(v);
        let next: Vec<u64> = cand.iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
        if next.iter().all(|&w| w == 0) {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand_clique(g, current, next, best);
        }
        current.pop();
        cand[v / 64] &= !(1 << (v % 64));
    }
}

/// Greedy sequential colouring of the candidate set; returns the vertices
/// in colour order and, for each, the number of colours used so far.
fn colour_sort(g: &Graph, cand: &[u64]) -> (Vec<usize>, Vec<usize>) {
    let mut uncoloured = cand.to_vec();
    let mut order = Vec::new();
    let mut bound = Vec::new();
    let mut colour = 0;
    while uncoloured.iter().any(|&w| w != 0) {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = Ones::new(&q).next() {
            q[v / 64] &= !(1 << (v % 64));
            for (qw, rw) in q.iter_mut().zip(g.row(v)) {
                *qw &= !rw;
            }
            uncoloured[v / 64] &= !(1 << (v % 64));
            order.push(v);
            bound.push(colour);
        }
    }
    (order, bound)
}

pub fn max_independent_set(g: &Graph) -> Vec<usize> {
    max_clique(&g.complement())
}

/// `α(g)`, as the clique number of the complement.
pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).len()
}

/// A proper colouring with at most `k` colours, if one exists.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let clique = max_clique(g);
    colorable_with_clique(g, k, &clique)
}

struct ColourSearch<'a> {
    g: &'a Graph,
    k: usize,
    degree: Vec<usize>,
    color: Vec<usize>,
    // counts[v * k + c]: neighbours of v currently coloured c
    counts: Vec<u32>,
    sat: Vec<usize>,
}

impl ColourSearch<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        let k = self.k;
        for u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * k + c];
            if *slot == 0 {
                self.sat[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = usize::MAX;
        let k = self.k;
        for u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn solve(&mut self, used: usize) -> bool {
        let n = self.g.order();
        let mut pick: Option<usize> = None;
        for v in 0..n {
            if self.color[v] != usize::MAX {
                continue;
            }
            pick = match pick {
                Some(p) if (self.sat[p], self.degree[p]) >= (self.sat[v], self.degree[v]) => {
                    Some(p)
                }
                _ => Some(v),
            };
        }
        let Some(v) = pick else {
            return true;
        };
        if self.sat[v] >= self.k {
            return false;
        }
        for c in 0..self.k.min(used + 1) {
            if self.counts[v * self.k + c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.solve(used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

fn colorable_with_clique(g: &Graph, k: usize, clique: &[usize]) -> Option<Coloring> {
    let n = g.order();
    if n == 0 {
        return Some(Coloring {
            colors: Vec::new(),
            k: 0,
        });
    }
    if clique.len() > k {
        return None;
    }
    let mut s = ColourSearch {
        g,
        k,
        degree: g.degrees(),
        color: vec![usize::MAX; n],
        counts: vec![0; n * k],
        sat: vec![0; n],
    };
    for (i, &v) in clique.iter().enumerate() {
        s.assign(v, i);
    }
    s.solve(clique.len())
        .then(|| Coloring::normalised(&s.color))
}

/// Why `χ` cannot be smaller than reported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBoundWitness {
    /// A clique with `χ` vertices.
    Clique(Vec<usize>),
    /// Exhaustive search found no proper colouring with `k = χ - 1` colours.
    Refutation { k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub chi: usize,
    pub coloring: Coloring,
    pub lower: LowerBoundWitness,
}

pub fn chromatic_number(g: &Graph) -> ChromaticResult {
    let clique = max_clique(g);
    chromatic_with_clique(g, clique)
}

fn chromatic_with_clique(g: &Graph, clique: Vec<usize>) -> ChromaticResult {
    let omega = clique.len();
    let mut best = greedy_dsatur(g);
    while best.k > omega {
        match colorable_with_clique(g, best.k - 1, &clique) {
            Some(c) => best = c,
            None => {
                return ChromaticResult {
                    chi: best.k,
                    lower: LowerBoundWitness::Refutation { k: best.k - 1 },
                    coloring: best,
                }
            }
        }
    }
    ChromaticResult {
        chi: best.k,
        coloring: best,
        lower: LowerBoundWitness::Clique(clique),
    }
}

/// Whether `χ(g) == chi`: reject on a too-large clique first, then probe
/// `chi` and `chi - 1` colours.
pub fn has_chromatic_number(g: &Graph, chi: usize) -> bool {
    let clique = max_clique(g);
    if clique.len() > chi {
        return false;
    }
    if colorable_with_clique(g, chi, &clique).is_none() {
        return false;
    }
    chi == 0 || colorable_with_clique(g, chi - 1, &clique).is_none()
}

/// Closed-form `χ` of the complement of a union of cycles: a triangle
/// contributes 1 and a cycle of length `m >= 4` contributes `⌈m/2⌉`.
pub fn predicted_chi_cycle_union(spec: &CycleUnionSpec) -> usize {
    spec.lengths()
        .iter()
        .map(|&m| if m == 3 { 1 } else { m.div_ceil(2) })
        .sum()
}

/// `⌈(ω + 1 + Δ) / 2⌉`
pub fn reed_value(g: &Graph) -> usize {
    (max_clique(g).len() + 1 + g.max_degree()).div_ceil(2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub order: usize,
    pub regularity: Option<usize>,
    pub chi: usize,
    pub coloring: Vec<usize>,
    pub omega: usize,
    pub clique: Vec<usize>,
    pub alpha: usize,
    pub independent_set: Vec<usize>,
    pub delta_max: usize,
    pub reed_value: usize,
}

pub fn invariants(g: &Graph) -> InvariantReport {
    let clique = max_clique(g);
    let independent_set = max_independent_set(g);
    let omega = clique.len();
    let delta_max = g.max_degree();
    let chi = chromatic_with_clique(g, clique.clone());
    InvariantReport {
        order: g.order(),
        regularity: g.is_regular(),
        chi: chi.chi,
        coloring: chi.coloring.colors,
        omega,
        clique,
        alpha: independent_set.len(),
        independent_set,
        delta_max,
        reed_value: (omega + 1 + delta_max).div_ceil(2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{antihole, cycle_union_complement, turan};

    #[test]
    fn dsatur_on_simple_graphs() {
        assert_eq!(greedy_dsatur(&Graph::complete(7)).k, 7);
        assert_eq!(greedy_dsatur(&Graph::cycle(5).unwrap()).k, 3);
        let c = greedy_dsatur(&turan(8, 4).unwrap());
        assert_eq!(c.k, 4);
        assert!(c.is_proper(&turan(8, 4).unwrap()));
    }

    #[test]
    fn dsatur_is_deterministic() {
        let g = Graph::petersen();
        assert_eq!(greedy_dsatur(&g), greedy_dsatur(&g));
    }

    #[test]
    fn cliques() {
        assert_eq!(max_clique(&Graph::complete(6)).len(), 6);
        let c7c = antihole(7).unwrap();
        let q = max_clique(&c7c);
        assert_eq!(q.len(), 3);
        assert!(c7c.is_clique(&q));
        assert_eq!(max_clique(&Graph::empty(0)), Vec::<usize>::new());
        assert_eq!(max_clique(&Graph::empty(4)).len(), 1);
    }

    #[test]
    fn colourability_probes() {
        let c7c = antihole(7).unwrap();
        assert!(is_k_colorable(&c7c, 3).is_none());
        let c = is_k_colorable(&c7c, 4).unwrap();
        assert!(c.is_proper(&c7c) && c.k <= 4);
        let e5 = Graph::empty(5);
        assert_eq!(is_k_colorable(&e5, 1).unwrap().k, 1);
        assert!(is_k_colorable(&e5, 0).is_none());
        assert!(is_k_colorable(&Graph::empty(0), 0).is_some());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&Graph::complete(5)).chi, 5);
        let g = cycle_union_complement(&CycleUnionSpec::new(vec![5, 5]).unwrap()).unwrap();
        let res = chromatic_number(&g);
        assert_eq!(res.chi, 6);
        assert!(res.coloring.is_proper(&g));
        let p = chromatic_number(&Graph::petersen());
        assert_eq!(p.chi, 3);
        assert_eq!(p.lower, LowerBoundWitness::Refutation { k: 2 });
    }

    #[test]
    fn independence() {
        assert_eq!(independence_number(&Graph::cycle(7).unwrap()), 3);
        assert_eq!(independence_number(&Graph::complete(6)), 1);
        assert_eq!(independence_number(&turan(10, 5).unwrap()), 2);
    }

    #[test]
    fn cycle_union_formula() {
        let p = |v: Vec<usize>| predicted_chi_cycle_union(&CycleUnionSpec::new(v).unwrap());
        assert_eq!(p(vec![5, 5]), 6);
        assert_eq!(p(vec![3]), 1);
        assert_eq!(p(vec![3, 4, 5]), 6);
    }

    #[test]
    fn reed() {
        assert_eq!(reed_value(&Graph::complete(5)), 5);
        assert_eq!(reed_value(&Graph::petersen()), 3);
        assert_eq!(reed_value(&antihole(7).unwrap()), 4);
    }

    #[test]
    fn has_chromatic_number_filter() {
        let c7c = antihole(7).unwrap();
        assert!(has_chromatic_number(&c7c, 4));
        assert!(!has_chromatic_number(&c7c, 3));
        assert!(!has_chromatic_number(&c7c, 5));
        assert!(!has_chromatic_number(&Graph::complete(4), 3));
    }

    #[test]
    fn invariant_report_certificates() {
        let g = Graph::petersen();
        let rep = invariants(&g);
        assert_eq!(
            (rep.chi, rep.omega, rep.alpha, rep.delta_max, rep.reed_value),
            (3, 2, 4, 3, 3)
        );
        assert!(g.is_clique(&rep.clique));
        assert!(g.is_independent(&rep.independent_set));
        assert!(Coloring {
            colors: rep.coloring.clone(),
            k: rep.chi
        }
        .is_proper(&g));
    }
}

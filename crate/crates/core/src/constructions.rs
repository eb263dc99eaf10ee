//! Named families of regular graphs with known chromatic number.
//!
//! Every constructor documents its vertex labelling. Whenever a family adds or
//! removes a matching between two vertex classes, the j-th vertex of one
//! class is paired with the j-th vertex of the other.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::chromatic::predicted_chi_cycle_union;
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, disjoint_union, Graph, GraphBuilder};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// Part layout of the Turán graph `T(n, k)`: `b = n mod k` parts of size
/// `a + 1` followed by `k - b` parts of size `a`, where `a = n div k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TuranSpec {
    pub n: usize,
    pub k: usize,
}

impl TuranSpec {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(invalid(format!(
                "Turán graph needs 1 <= k <= n, got n={n}, k={k}"
            )));
        }
        Ok(TuranSpec { n, k })
    }

    pub fn a(&self) -> usize {
        self.n / self.k
    }

    pub fn b(&self) -> usize {
        self.n % self.k
    }

    pub fn parts(&self) -> Vec<Range<usize>> {
        let (a, b) = (self.a(), self.b());
        let mut start = 0;
        (0..self.k)
            .map(|i| {
                let len = if i < b { a + 1 } else { a };
                let r = start..start + len;
                start += len;
                r
            })
            .collect()
    }

    /// Exact size: `(n² - Σ|V_i|²) / 2`.
    pub fn edge_count(&self) -> usize {
        let squares: usize = self.parts().iter().map(|p| p.len() * p.len()).sum();
        (self.n * self.n - squares) / 2
    }

    /// The closed form `⌊(k-1)n² / 2k⌋`. It equals [`edge_count`](Self::edge_count)
    /// for `k <= 7` and can exceed it by the rounding of `b(k-b)/2k` beyond that.
    pub fn size_formula(&self) -> usize {
        (self.k - 1) * self.n * self.n / (2 * self.k)
    }
}

fn complete_multipartite(n: usize, parts: &[Range<usize>]) -> GraphBuilder {
    let mut part_of = vec![0; n];
    for (i, p) in parts.iter().enumerate() {
        for v in p.clone() {
            part_of[v] = i;
        }
    }
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                b.add_edge(u, v);
            }
        }
    }
    b
}

/// Complete `k`-partite graph on `n` vertices with parts as equal as
/// possible, larger parts first and contiguous.
pub fn turan(n: usize, k: usize) -> Result<Graph> {
    let spec = TuranSpec::new(n, k)?;
    Ok(complete_multipartite(n, &spec.parts()).build())
}

/// Complement of the cycle `0 - 1 - ... - (n-1) - 0`.
pub fn antihole(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(invalid(format!("antihole needs n >= 4, got {n}")));
    }
    Ok(Graph::cycle(n)?.complement())
}

/// Multiset of cycle lengths, each at least 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleUnionSpec {
    lengths: Vec<usize>,
}

impl CycleUnionSpec {
    pub fn new(lengths: Vec<usize>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(invalid("cycle union needs at least one cycle"));
        }
        if let Some(&m) = lengths.iter().find(|&&m| m < 3) {
            return Err(invalid(format!("cycle length {m} is below 3")));
        }
        Ok(CycleUnionSpec { lengths })
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn order(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// Number of cycles of length `m`.
    pub fn multiplicity(&self, m: usize) -> usize {
        self.lengths.iter().filter(|&&x| x == m).count()
    }
}

impl fmt::Display for CycleUnionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lengths.iter().map(|m| format!("C{m}")).collect();
        write!(f, "({})^c", parts.join("+"))
    }
}

/// Complement of the disjoint union of the cycles in `spec`, laid out in
/// the order given.
pub fn cycle_union_complement(spec: &CycleUnionSpec) -> Result<Graph> {
    let cycles = spec
        .lengths
        .iter()
        .map(|&m| Graph::cycle(m))
        .collect::<Result<Vec<_>>>()?;
    Ok(disjoint_union(&cycles)?.complement())
}

/// Two copies of `T(n, χ)` (labels `0..n` and `n..2n`) joined by a matching
/// between their deficient vertices: `v` is matched with `n + v` for every
/// `v` in the `b` larger parts.
pub fn doubled_turan(n: usize, chi: usize) -> Result<Graph> {
    let spec = TuranSpec::new(n, chi)?;
    let b = spec.b();
    if b == 0 {
        return Err(invalid(format!(
            "doubled Turán graph needs chi not dividing n (n={n}, chi={chi})"
        )));
    }
    let single = turan(n, chi)?;
    let mut g = GraphBuilder::new(2 * n);
    for (u, v) in single.edges() {
        g.add_edge(u, v);
        g.add_edge(n + u, n + v);
    }
    for v in 0..b * (spec.a() + 1) {
        g.add_edge(v, n + v);
    }
    Ok(g.build())
}

/// Turán graph `T(aχ + b, χ)` with a set of matchings removed so that every
/// vertex loses exactly one edge to the small parts.
///
/// Labelling: the `χ - b` parts of size `a` come first, then the `b` parts of
/// size `a + 1`. When `χ - b` is even, the matching between small parts
/// `2i` and `2i + 1` is removed. When `χ - b` is odd (so `a` is even), small
/// parts `3, 4`, `5, 6`, ... are paired the same way, and the first three
/// small parts lose a "rotated" matching: the first half of part `i` against
/// the second half of part `i + 1 (mod 3)`.
pub fn t_star(n: usize, chi: usize) -> Result<Graph> {
    if chi < 3 {
        return Err(invalid(format!("T* needs chi >= 3, got {chi}")));
    }
    if chi > n {
        return Err(invalid(format!("T* needs chi <= n, got n={n}, chi={chi}")));
    }
    let (a, b) = (n / chi, n % chi);
    if a < 2 {
        return Err(invalid(format!(
            "T* needs parts of size >= 2 (n={n}, chi={chi})"
        )));
    }
    let small = chi - b;
    if small % 2 == 1 && (small < 3 || a % 2 == 1) {
        return Err(invalid(format!(
            "T* needs chi - b even, or chi - b >= 3 odd with a even (a={a}, b={b}, chi={chi})"
        )));
    }
    let mut parts = Vec::with_capacity(chi);
    let mut start = 0;
    for i in 0..chi {
        let len = if i < small { a } else { a + 1 };
        parts.push(start..start + len);
        start += len;
    }
    let mut g = complete_multipartite(n, &parts);
    let first_pair = if small.is_multiple_of(2) { 0 } else { 3 };
    for i in (first_pair..small).step_by(2) {
        for j in 0..a {
            g.remove_edge(parts[i].start + j, parts[i + 1].start + j);
        }
    }
    if small % 2 == 1 {
        let half = a / 2;
        for i in 0..3 {
            let next = (i + 1) % 3;
            for j in 0..half {
                g.remove_edge(parts[i].start + j, parts[next].start + half + j);
            }
        }
    }
    Ok(g.build())
}

/// `T(at, t)` with `u_i = i` and `v_i = a + i` (`i < c`) in the first two
/// parts: the edges `u_i v_j` with `i != j` are deleted and both `u` and `v`
/// are completed to cliques.
pub fn g_act(a: usize, c: usize, t: usize) -> Result<Graph> {
    if t < 2 || a < 2 || c == 0 || c >= a {
        return Err(invalid(format!(
            "G(a,c,t) needs t >= 2, a >= 2, 1 <= c < a; got a={a}, c={c}, t={t}"
        )));
    }
    let mut g = GraphBuilder::from_graph(&turan(a * t, t)?);
    for i in 0..c {
        for j in 0..c {
            if i != j {
                g.remove_edge(i, a + j);
                if i < j {
                    g.add_edge(i, j);
                    g.add_edge(a + i, a + j);
                }
            }
        }
    }
    Ok(g.build())
}

/// Edges removed from `T(16, 3)`, with `w_i`, `u_i`, `v_i` 1-based.
const T_DOUBLE_STAR_REMOVED: [(char, usize, char, usize); 13] = [
    ('w', 1, 'v', 1),
    ('v', 1, 'u', 1),
    ('u', 1, 'w', 4),
    ('w', 2, 'v', 2),
    ('v', 2, 'u', 2),
    ('u', 2, 'w', 5),
    ('w', 3, 'v', 3),
    ('v', 3, 'u', 3),
    ('u', 3, 'w', 6),
    ('u', 4, 'v', 4),
    ('v', 4, 'u', 5),
    ('u', 5, 'v', 5),
    ('v', 5, 'u', 4),
];

/// The 9-regular 3-chromatic graph on 16 vertices: `T(16, 3)` with parts
/// `W = 0..6`, `U = 6..11`, `V = 11..16` minus a fixed list of 13 edges.
pub fn t_double_star_16_3() -> Graph {
    let label = |class: char, i: usize| match class {
        'w' => i - 1,
        'u' => 5 + i,
        'v' => 10 + i,
        _ => unreachable!("unknown vertex class"),
    };
    let mut g = GraphBuilder::from_graph(&turan(16, 3).expect("valid Turán parameters"));
    for (c1, i, c2, j) in T_DOUBLE_STAR_REMOVED {
        let removed = g.remove_edge(label(c1, i), label(c2, j));
        debug_assert!(removed, "{c1}{i}{c2}{j} is an edge of T(16,3)");
    }
    g.build()
}

/// Writes `r = a(χ-1) + b` with `0 <= b < χ - 1`, so `a >= 1` whenever
/// `χ <= r + 1`.
pub fn decompose(r: usize, chi: usize) -> Result<(usize, usize)> {
    if chi < 2 || chi > r + 1 {
        return Err(Error::Infeasible { r, chi });
    }
    let b = r % (chi - 1);
    Ok(((r - b) / (chi - 1), b))
}

/// `T(aχ, χ) □ K_{b+1}` where `r = a(χ-1) + b`.
pub fn theorem1_graph(r: usize, chi: usize) -> Result<Graph> {
    let (a, b) = decompose(r, chi)?;
    Ok(cartesian_product(
        &turan(a * chi, chi)?,
        &Graph::complete(b + 1),
    ))
}

/// `K_k □ K_2`.
pub fn prism(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(invalid(format!("prism K_k x K_2 needs k >= 2, got {k}")));
    }
    Ok(cartesian_product(&Graph::complete(k), &Graph::complete(2)))
}

/// A named family instance with its claimed parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Turan { n: usize, k: usize },
    Antihole { n: usize },
    CycleUnionComplement(CycleUnionSpec),
    DoubledTuran { n: usize, chi: usize },
    TStar { n: usize, chi: usize },
    GAct { a: usize, c: usize, t: usize },
    TDoubleStar,
    Theorem1 { r: usize, chi: usize },
    Prism { k: usize },
}

/// Order, regularity and chromatic number a family instance is built to have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub order: usize,
    pub regularity: Option<usize>,
    pub chi: usize,
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Turan { n, k } => turan(*n, *k),
            Family::Antihole { n } => antihole(*n),
            Family::CycleUnionComplement(spec) => cycle_union_complement(spec),
            Family::DoubledTuran { n, chi } => doubled_turan(*n, *chi),
            Family::TStar { n, chi } => t_star(*n, *chi),
            Family::GAct { a, c, t } => g_act(*a, *c, *t),
            Family::TDoubleStar => Ok(t_double_star_16_3()),
            Family::Theorem1 { r, chi } => theorem1_graph(*r, *chi),
            Family::Prism { k } => prism(*k),
        }
    }

    pub fn claim(&self) -> Claim {
        match self {
            Family::Turan { n, k } => Claim {
                order: *n,
                regularity: (n % k == 0).then(|| n - n / k),
                chi: *k,
            },
            Family::Antihole { n } => Claim {
                order: *n,
                regularity: Some(n - 3),
                chi: n.div_ceil(2),
            },
            Family::CycleUnionComplement(spec) => Claim {
                order: spec.order(),
                regularity: Some(spec.order() - 3),
                chi: predicted_chi_cycle_union(spec),
            },
            Family::DoubledTuran { n, chi } => Claim {
                order: 2 * n,
                regularity: Some((n / chi) * (chi - 1) + n % chi),
                chi: *chi,
            },
            Family::TStar { n, chi } => Claim {
                order: *n,
                regularity: Some((n / chi) * (chi - 1) + n % chi - 1),
                chi: *chi,
            },
            Family::GAct { a, c, t } => Claim {
                order: a * t,
                regularity: Some(a * (t - 1)),
                chi: t + c - 1,
            },
            Family::TDoubleStar => Claim {
                order: 16,
                regularity: Some(9),
                chi: 3,
            },
            Family::Theorem1 { r, chi } => {
                let (a, b) = decompose(*r, *chi).unwrap_or((0, 0));
                Claim {
                    order: a * chi * (b + 1),
                    regularity: Some(*r),
                    chi: *chi,
                }
            }
            Family::Prism { k } => Claim {
                order: 2 * k,
                regularity: Some(*k),
                chi: *k,
            },
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Turan { n, k } => write!(f, "T({n},{k})"),
            Family::Antihole { n } => write!(f, "C{n}^c"),
            Family::CycleUnionComplement(spec) => write!(f, "{spec}"),
            Family::DoubledTuran { n, chi } => write!(f, "G({n},{chi})"),
            Family::TStar { n, chi } => write!(f, "T*({n},{chi})"),
            Family::GAct { a, c, t } => write!(f, "G({a},{c},{t})"),
            Family::TDoubleStar => write!(f, "T**(16,3)"),
            Family::Theorem1 { r, chi } => match decompose(*r, *chi) {
                Ok((a, b)) => write!(f, "T({},{chi})xK{}", a * chi, b + 1),
                Err(_) => write!(f, "T(?,{chi})xK?"),
            },
            Family::Prism { k } => write!(f, "K{k}xK2"),
        }
    }
}

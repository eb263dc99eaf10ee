//! Cayley graphs over direct products of cyclic groups.

use std::collections::BTreeSet;

use crate::canon::is_isomorphic;
use crate::constructions::turan;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Isomorphism checks in [`verify_lemma1`] refuse orders above this.
pub const DEFAULT_ISOMORPHISM_LIMIT: usize = 20;

/// `Z_{m1} × ... × Z_{mk}`. Elements are tuples; vertex labels follow
/// lexicographic tuple order (last coordinate fastest).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    moduli: Vec<usize>,
}

impl GroupSpec {
    pub fn new(moduli: Vec<usize>) -> Result<Self> {
        if moduli.is_empty() || moduli.contains(&0) {
            return Err(Error::InvalidParameter(format!(
                "group moduli must be a non-empty list of positive integers, got {moduli:?}"
            )));
        }
        Ok(GroupSpec { moduli })
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().product()
    }

    pub fn index(&self, x: &[usize]) -> usize {
        x.iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&xi, &m)| acc * m + xi)
    }

    pub fn element(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.moduli.len()];
        for (slot, &m) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = idx % m;
            idx /= m;
        }
        out
    }

    pub fn add(&self, x: &[usize], y: &[usize]) -> Vec<usize> {
        x.iter()
            .zip(y)
            .zip(&self.moduli)
            .map(|((a, b), m)| (a + b) % m)
            .collect()
    }

    pub fn neg(&self, x: &[usize]) -> Vec<usize> {
        x.iter()
            .zip(&self.moduli)
            .map(|(a, m)| (m - a) % m)
            .collect()
    }

    pub fn is_identity(&self, x: &[usize]) -> bool {
        x.iter().all(|&a| a == 0)
    }
}

/// An inversion-closed, identity-free subset of a [`GroupSpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    elements: Vec<Vec<usize>>,
}

impl ConnectionSet {
    /// Validates membership, `1 ∉ X` and `X = X⁻¹`. Components are taken
    /// as given; they must already lie in `0..m`.
    pub fn new(group: &GroupSpec, elements: Vec<Vec<usize>>) -> Result<Self> {
        let set: BTreeSet<Vec<usize>> = elements.into_iter().collect();
        for x in &set {
            if x.len() != group.moduli.len() || x.iter().zip(&group.moduli).any(|(a, m)| a >= m) {
                return Err(Error::ConnectionSet(format!(
                    "{x:?} is not an element of Z{:?}",
                    group.moduli
                )));
            }
            if group.is_identity(x) {
                return Err(Error::ConnectionSet("contains the identity".into()));
            }
            if !set.contains(&group.neg(x)) {
                return Err(Error::ConnectionSet(format!(
                    "not closed under inversion: {x:?} present, {:?} missing",
                    group.neg(x)
                )));
            }
        }
        Ok(ConnectionSet {
            elements: set.into_iter().collect(),
        })
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether the set generates the whole group.
    pub fn generates(&self, group: &GroupSpec) -> bool {
        cayley_graph(group, self).is_connected()
    }
}

/// `Cay(Γ, X)`: `g ~ h` iff `h = g + x` for some `x ∈ X`.
pub fn cayley_graph(group: &GroupSpec, x: &ConnectionSet) -> Graph {
    let n = group.order();
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        let g = group.element(i);
        for s in &x.elements {
            let j = group.index(&group.add(&g, s));
            if i < j {
                b.add_edge(i, j);
            }
        }
    }
    b.build()
}

/// `{(i, j) : 0 <= i < a, 0 < j < k}` in `Z_a × Z_k`.
pub fn lemma1_connection_set(a: usize, k: usize) -> Result<(GroupSpec, ConnectionSet)> {
    if a < 1 || k < 2 {
        return Err(Error::InvalidParameter(format!(
            "need a >= 1 and k >= 2, got a={a}, k={k}"
        )));
    }
    let group = GroupSpec::new(vec![a, k])?;
    let elements = (0..a)
        .flat_map(|i| (1..k).map(move |j| vec![i, j]))
        .collect();
    let x = ConnectionSet::new(&group, elements)?;
    Ok((group, x))
}

/// Whether `Cay(Z_a × Z_k, X)` is isomorphic to `T(ak, k)`.
pub fn verify_lemma1(a: usize, k: usize) -> Result<bool> {
    verify_lemma1_with_limit(a, k, DEFAULT_ISOMORPHISM_LIMIT)
}

pub fn verify_lemma1_with_limit(a: usize, k: usize, limit: usize) -> Result<bool> {
    if a * k > limit {
        return Err(Error::TooLarge {
            what: "isomorphism verification",
            n: a * k,
            limit,
        });
    }
    let (group, x) = lemma1_connection_set(a, k)?;
    Ok(is_isomorphic(&cayley_graph(&group, &x), &turan(a * k, k)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_vertex_transitive;

    #[test]
    fn z5_cycle() {
        let g = GroupSpec::new(vec![5]).unwrap();
        let x = ConnectionSet::new(&g, vec![vec![1], vec![4]]).unwrap();
        assert_eq!(cayley_graph(&g, &x), Graph::cycle(5).unwrap());
    }

    #[test]
    fn identity_rejected() {
        let g = GroupSpec::new(vec![4]).unwrap();
        assert!(ConnectionSet::new(&g, vec![vec![0]]).is_err());
    }

    #[test]
    fn inversion_closure_required() {
        let g = GroupSpec::new(vec![5]).unwrap();
        assert!(ConnectionSet::new(&g, vec![vec![1]]).is_err());
        assert!(ConnectionSet::new(&g, vec![vec![7], vec![3]]).is_err());
        // 2 is an involution in Z_4
        assert!(ConnectionSet::new(&GroupSpec::new(vec![4]).unwrap(), vec![vec![2]]).is_ok());
    }

    #[test]
    fn tuple_indexing_round_trips() {
        let g = GroupSpec::new(vec![2, 3, 4]).unwrap();
        for i in 0..g.order() {
            assert_eq!(g.index(&g.element(i)), i);
        }
        assert_eq!(g.element(5), vec![0, 1, 1]);
    }

    #[test]
    fn connection_set_sizes() {
        let (_, x) = lemma1_connection_set(2, 3).unwrap();
        assert_eq!(x.len(), 4);
        let (g, x) = lemma1_connection_set(1, 2).unwrap();
        assert_eq!(x.elements(), &[vec![0, 1]]);
        assert_eq!(cayley_graph(&g, &x), Graph::complete(2));
        let (_, x) = lemma1_connection_set(3, 4).unwrap();
        assert_eq!(x.len(), 9);
        assert!(lemma1_connection_set(2, 1).is_err());
    }

    #[test]
    fn cayley_turan_instances() {
        assert!(verify_lemma1(2, 3).unwrap());
        assert!(verify_lemma1(1, 5).unwrap());
        assert!(verify_lemma1(4, 4).unwrap());
        assert!(verify_lemma1(3, 7).is_err());
    }

    #[test]
    fn generation() {
        let g = GroupSpec::new(vec![6]).unwrap();
        let x = ConnectionSet::new(&g, vec![vec![2], vec![4]]).unwrap();
        assert!(!x.generates(&g));
        let x = ConnectionSet::new(&g, vec![vec![1], vec![5]]).unwrap();
        assert!(x.generates(&g));
    }

    #[test]
    fn cayley_graphs_are_transitive() {
        let g = GroupSpec::new(vec![2, 6]).unwrap();
        let x =
            ConnectionSet::new(&g, vec![vec![1, 0], vec![0, 1], vec![0, 5], vec![1, 3]]).unwrap();
        let cay = cayley_graph(&g, &x);
        assert_eq!(cay.is_regular(), Some(4));
        assert!(is_vertex_transitive(&cay).unwrap());
    }
}

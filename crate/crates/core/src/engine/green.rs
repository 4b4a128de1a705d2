//! Green's relations, idempotents, units and the inverse-monoid tests on an
//! [`EnumeratedMonoid`]. Everything here works from the Cayley tables, so it
//! applies equally to concrete and to presented monoids.

use std::collections::BTreeSet;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use rand::{Rng, SeedableRng};

use super::monoid::EnumeratedMonoid;

/// R- and L-class labels for every element.
#[derive(Debug, Clone)]
pub struct Green {
    r: Vec<usize>,
    l: Vec<usize>,
}

/// Strongly connected component id per vertex of a Cayley graph.
fn scc_labels(m: &EnumeratedMonoid, edge: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut g = DiGraph::<(), ()>::with_capacity(m.len(), m.len() * m.num_generators());
    let nodes: Vec<_> = (0..m.len()).map(|_| g.add_node(())).collect();
    for i in 0..m.len() {
        for k in 0..m.num_generators() {
            g.add_edge(nodes[i], nodes[edge(i, k)], ());
        }
    }
    let mut label = vec![0; m.len()];
    for (c, comp) in tarjan_scc(&g).into_iter().enumerate() {
        for v in comp {
            label[v.index()] = c;
        }
    }
    label
}

impl Green {
    /// `a R b` iff each is reachable from the other in the right Cayley graph;
    /// dually for `L` with the left graph.
    pub fn new(m: &EnumeratedMonoid) -> Self {
        Self {
            r: scc_labels(m, |i, g| m.right(i, g)),
            l: scc_labels(m, |i, g| m.left(i, g)),
        }
    }

    pub fn r_related(&self, a: usize, b: usize) -> bool {
        self.r[a] == self.r[b]
    }

    pub fn l_related(&self, a: usize, b: usize) -> bool {
        self.l[a] == self.l[b]
    }

    pub fn h_related(&self, a: usize, b: usize) -> bool {
        self.r_related(a, b) && self.l_related(a, b)
    }

    pub fn r_class(&self, a: usize) -> Vec<usize> {
        (0..self.r.len())
            .filter(|&b| self.r_related(a, b))
            .collect()
    }

    pub fn l_class(&self, a: usize) -> Vec<usize> {
        (0..self.l.len())
            .filter(|&b| self.l_related(a, b))
            .collect()
    }

    pub fn h_class(&self, a: usize) -> Vec<usize> {
        (0..self.r.len())
            .filter(|&b| self.h_related(a, b))
            .collect()
    }
}

pub fn is_idempotent(m: &EnumeratedMonoid, e: usize) -> bool {
    m.product(e, e) == e
}

/// All `e` with `e · e = e`, in index order.
pub fn idempotents(m: &EnumeratedMonoid) -> Vec<usize> {
    (0..m.len()).filter(|&e| is_idempotent(m, e)).collect()
}

/// The group of units: the H-class of the identity.
pub fn units(m: &EnumeratedMonoid) -> Vec<usize> {
    Green::new(m).h_class(0)
}

pub fn green_h_class(m: &EnumeratedMonoid, a: usize) -> Vec<usize> {
    Green::new(m).h_class(a)
}

/// `a` is completely regular iff its H-class contains an idempotent (and is then a group).
pub fn is_completely_regular(m: &EnumeratedMonoid, a: usize) -> bool {
    green_h_class(m, a).into_iter().any(|e| is_idempotent(m, e))
}

/// The identity of the group H-class of a completely regular `a`, and the
/// inverse of `a` in that group.
pub fn group_identity_and_inverse(m: &EnumeratedMonoid, a: usize) -> Option<(usize, usize)> {
    let h = green_h_class(m, a);
    let e = *h.iter().find(|&&e| is_idempotent(m, e))?;
    let inv = *h
        .iter()
        .find(|&&b| m.product(a, b) == e && m.product(b, a) == e)?;
    Some((e, inv))
}

/// In a finite monoid, `a` is regular iff its R-class holds an idempotent.
pub fn is_regular_monoid(m: &EnumeratedMonoid) -> bool {
    let green = Green::new(m);
    let mut has_idem = vec![false; m.len()];
    for e in idempotents(m) {
        has_idem[green.r[e]] = true;
    }
    (0..m.len()).all(|a| has_idem[green.r[a]])
}

pub fn idempotents_commute(m: &EnumeratedMonoid) -> bool {
    let e = idempotents(m);
    e.iter().enumerate().all(|(i, &a)| {
        e[i + 1..]
            .iter()
            .all(|&b| m.product(a, b) == m.product(b, a))
    })
}

/// Regular with commuting idempotents.
pub fn is_inverse_monoid(m: &EnumeratedMonoid) -> bool {
    is_regular_monoid(m) && idempotents_commute(m)
}

/// Every `b` with `a b a = a` and `b a b = b`, by exhaustive search.
pub fn inverses_of(m: &EnumeratedMonoid, a: usize) -> Vec<usize> {
    (0..m.len())
        .filter(|&b| {
            let ab = m.product(a, b);
            m.product(ab, a) == a && m.product(m.product(b, a), b) == b
        })
        .collect()
}

/// Draws `pairs` random `(a, b)`; returns a pair with `a b a = a`, `b a b = b`
/// but `b` different from `inverse(a)`, if any. `inverse` is supplied by the caller.
pub fn sampled_inverse_violation(
    m: &EnumeratedMonoid,
    inverse: impl Fn(usize) -> usize,
    pairs: usize,
    seed: u64,
) -> Option<(usize, usize)> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    (0..pairs).find_map(|_| {
        let a = rng.gen_range(0..m.len());
        // every other draw targets the claimed inverse so both branches are exercised
        let b = if rng.gen_bool(0.5) {
            inverse(a)
        } else {
            rng.gen_range(0..m.len())
        };
        let ab = m.product(a, b);
        let is_inv = m.product(ab, a) == a && m.product(m.product(b, a), b) == b;
        (is_inv != (b == inverse(a))).then_some((a, b))
    })
}

/// `{a · b : a ∈ left, b ∈ right}`.
pub fn set_product(m: &EnumeratedMonoid, left: &[usize], right: &[usize]) -> BTreeSet<usize> {
    left.iter()
        .flat_map(|&a| right.iter().map(move |&b| m.product(a, b)))
        .collect()
}

/// `E(M) · G(M)`.
pub fn factorizable_part(m: &EnumeratedMonoid) -> BTreeSet<usize> {
    set_product(m, &idempotents(m), &units(m))
}

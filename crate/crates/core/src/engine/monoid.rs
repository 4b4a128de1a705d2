use std::collections::HashMap;

use crate::blockbij::BlockBijection;
use crate::error::{Error, Result};
use crate::words::{letter_image, Letter, Word};

pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// A finite monoid with indexed elements, shortlex-least representative
/// words, and right/left Cayley tables over its generators.
///
/// Element 0 is the identity. Elements are either concrete block bijections
/// (from [`froidure_pin`]) or abstract congruence classes (from Todd–Coxeter).
#[derive(Debug, Clone)]
pub struct EnumeratedMonoid {
    letters: Vec<Letter>,
    elements: Option<Vec<BlockBijection>>,
    index: HashMap<BlockBijection, usize>,
    words: Vec<Vec<usize>>,
    right: Vec<usize>,
    left: Vec<usize>,
}

impl EnumeratedMonoid {
    /// Builds an abstract monoid from a complete right Cayley table (row-major,
    /// `classes × letters`) whose class 0 is the identity.
    pub(crate) fn from_right_table(letters: Vec<Letter>, table: &[usize]) -> Self {
        let k = letters.len();
        let classes = table.len().checked_div(k).unwrap_or(1);
        // breadth-first relabelling gives shortlex-least words
        let mut order = vec![usize::MAX; classes];
        let mut queue = vec![0];
        let mut words = vec![Vec::new()];
        order[0] = 0;
        let mut head = 0;
        while head < queue.len() {
            let c = queue[head];
            for g in 0..k {
                let d = table[c * k + g];
                if order[d] == usize::MAX {
                    order[d] = queue.len();
                    queue.push(d);
                    let mut w = words[head].clone();
                    w.push(g);
                    words.push(w);
                }
            }
            head += 1;
        }
        let size = queue.len();
        let mut right = vec![0; size * k];
        for (new, &old) in queue.iter().enumerate() {
            for g in 0..k {
                right[new * k + g] = order[table[old * k + g]];
            }
        }
        let mut m = Self {
            letters,
            elements: None,
            index: HashMap::new(),
            words,
            right,
            left: Vec::new(),
        };
        m.left = m.compute_left_by_tracing();
        m
    }

    fn compute_left_by_tracing(&self) -> Vec<usize> {
        let k = self.letters.len();
        let mut left = vec![0; self.len() * k];
        for i in 0..self.len() {
            for g in 0..k {
                let start = self.right[g];
                left[i * k + g] = self.trace(start, &self.words[i]);
            }
        }
        left
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn num_generators(&self) -> usize {
        self.letters.len()
    }

    pub fn is_concrete(&self) -> bool {
        self.elements.is_some()
    }

    /// Concrete elements, if this monoid was enumerated from block bijections.
    pub fn elements(&self) -> Option<&[BlockBijection]> {
        self.elements.as_deref()
    }

    pub fn element(&self, i: usize) -> Option<&BlockBijection> {
        self.elements.as_ref().map(|e| &e[i])
    }

    pub fn index_of(&self, a: &BlockBijection) -> Option<usize> {
        self.index.get(a).copied()
    }

    /// Representative word as generator indices.
    pub fn word_indices(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn rep_word(&self, i: usize) -> Word {
        Word(self.words[i].iter().map(|&g| self.letters[g]).collect())
    }

    /// `element_i · generator_g`.
    pub fn right(&self, i: usize, g: usize) -> usize {
        self.right[i * self.letters.len() + g]
    }

    /// `generator_g · element_i`.
    pub fn left(&self, i: usize, g: usize) -> usize {
        self.left[i * self.letters.len() + g]
    }

    /// Follows a word of generator indices through the right Cayley table.
    pub fn trace(&self, start: usize, word: &[usize]) -> usize {
        let k = self.letters.len();
        word.iter().fold(start, |c, &g| self.right[c * k + g])
    }

    /// Product of two elements, read off the right Cayley table.
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.trace(a, &self.words[b])
    }

    /// Element represented by a word over this monoid's letters.
    pub fn evaluate(&self, w: &Word) -> Option<usize> {
        let idx: Option<Vec<usize>> = w
            .letters()
            .iter()
            .map(|l| self.letters.iter().position(|m| m == l))
            .collect();
        Some(self.trace(0, &idx?))
    }
}

/// Breadth-first closure of `gens` under right multiplication, processing
/// generators in the order given so that representative words are shortlex-least.
pub fn froidure_pin(
    gens: &[BlockBijection],
    letters: &[Letter],
    cap: usize,
) -> Result<EnumeratedMonoid> {
    assert_eq!(gens.len(), letters.len(), "one letter per generator");
    let n = match gens.first() {
        Some(g) => g.degree(),
        None => 0,
    };
    if let Some(g) = gens.iter().find(|g| g.degree() != n) {
        return Err(Error::SizeMismatch {
            left: n,
            right: g.degree(),
        });
    }
    let k = gens.len();
    let identity = BlockBijection::identity(n);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0)]);
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut right = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        for (g, gen) in gens.iter().enumerate() {
            let prod = elements[head].compose(gen)?;
            let id = match index.get(&prod) {
                Some(&id) => id,
                None => {
                    let id = elements.len();
                    if id >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    let mut w = words[head].clone();
                    w.push(g);
                    words.push(w);
                    index.insert(prod.clone(), id);
                    elements.push(prod);
                    id
                }
            };
            right.push(id);
        }
        head += 1;
    }
    let mut left = vec![0; elements.len() * k];
    for (i, a) in elements.iter().enumerate() {
        for (g, gen) in gens.iter().enumerate() {
            left[i * k + g] = index[&gen.compose(a)?];
        }
    }
    Ok(EnumeratedMonoid {
        letters: letters.to_vec(),
        elements: Some(elements),
        index,
        words,
        right,
        left,
    })
}

/// Letters generating the whole monoid at degree `n`: `x, s_1, ..., s_{n-1}`
/// for `n >= 3`; `t, s_1` at `n = 2` (where `x` does not exist and the monoid
/// is factorizable); none at `n <= 1`.
pub fn phi_letters(n: usize) -> Vec<Letter> {
    match n {
        0 | 1 => Vec::new(),
        2 => vec![Letter::T, Letter::S(1)],
        _ => std::iter::once(Letter::X)
            .chain((1..n).map(Letter::S))
            .collect(),
    }
}

/// Letters `t, s_1, ..., s_{n-1}` generating the uniform block bijections.
pub fn factorizable_letters(n: usize) -> Vec<Letter> {
    match n {
        0 | 1 => Vec::new(),
        _ => std::iter::once(Letter::T)
            .chain((1..n).map(Letter::S))
            .collect(),
    }
}

/// Froidure–Pin over the images of `letters` at degree `n`.
pub fn enumerate_letters(n: usize, letters: &[Letter], cap: usize) -> Result<EnumeratedMonoid> {
    let gens = letters
        .iter()
        .map(|&l| letter_image(l, n))
        .collect::<Result<Vec<_>>>()?;
    if gens.is_empty() {
        // the trivial monoid of degree n
        let identity = BlockBijection::identity(n);
        return Ok(EnumeratedMonoid {
            letters: Vec::new(),
            elements: Some(vec![identity.clone()]),
            index: HashMap::from([(identity, 0)]),
            words: vec![Vec::new()],
            right: Vec::new(),
            left: Vec::new(),
        });
    }
    froidure_pin(&gens, letters, cap)
}

/// The whole dual symmetric inverse monoid of degree `n`.
pub fn enumerate_instar(n: usize) -> Result<EnumeratedMonoid> {
    enumerate_letters(n, &phi_letters(n), DEFAULT_ELEMENT_CAP)
}

/// Counts block bijections of degree `n` by filtering all partitions of `2n`
/// points; shares no code with composition or enumeration.
pub fn cardinality_oracle(n: usize) -> u64 {
    crate::partitions::enumerate_partitions(2 * n)
        .filter(|p| {
            let k = p.num_blocks();
            let mut seen = vec![0u8; k];
            for (pt, &l) in p.labels().iter().enumerate() {
                seen[l] |= if pt < n { 1 } else { 2 };
            }
            seen.iter().all(|&s| s == 3)
        })
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::phi_eval;

    #[test]
    fn symmetric_group_and_small_cases() {
        let s3 = enumerate_letters(3, &[Letter::S(1), Letter::S(2)], 100).unwrap();
        assert_eq!(s3.len(), 6);
        let m3 = enumerate_instar(3).unwrap();
        assert_eq!(m3.len(), 25);
        assert_eq!(enumerate_instar(1).unwrap().len(), 1);
        assert_eq!(enumerate_instar(2).unwrap().len(), 3);
    }

    #[test]
    fn oracle_small_values() {
        assert_eq!(cardinality_oracle(0), 1);
        assert_eq!(cardinality_oracle(1), 1);
        assert_eq!(cardinality_oracle(2), 3);
        assert_eq!(cardinality_oracle(3), 25);
        assert_eq!(cardinality_oracle(4), 339);
    }

    #[test]
    fn cap_is_an_error() {
        assert_eq!(
            enumerate_letters(4, &phi_letters(4), 100).unwrap_err(),
            Error::CapExceeded { cap: 100 }
        );
    }

    #[test]
    fn monoid_invariants() {
        let m = enumerate_instar(4).unwrap();
        assert_eq!(m.element(0), Some(&BlockBijection::identity(4)));
        assert!(m.rep_word(0).is_empty());
        let mut seen = std::collections::HashSet::new();
        for i in 0..m.len() {
            let w = m.rep_word(i);
            assert!(seen.insert(w.clone()));
            assert_eq!(&phi_eval(&w, 4).unwrap(), m.element(i).unwrap());
            assert_eq!(m.evaluate(&w), Some(i));
            for g in 0..m.num_generators() {
                assert!(m.right(i, g) < m.len());
                assert!(m.left(i, g) < m.len());
            }
        }
        // representative words are in shortlex order of discovery
        for i in 1..m.len() {
            assert_eq!(
                m.rep_word(i - 1).shortlex_cmp(&m.rep_word(i)),
                std::cmp::Ordering::Less
            );
        }
    }

    #[test]
    fn product_matches_composition() {
        let m = enumerate_instar(3).unwrap();
        let els = m.elements().unwrap();
        for a in 0..m.len() {
            for b in 0..m.len() {
                let c = els[a].compose(&els[b]).unwrap();
                assert_eq!(m.product(a, b), m.index_of(&c).unwrap());
            }
        }
    }

    #[test]
    fn abstract_copy_matches_concrete() {
        let m = enumerate_instar(3).unwrap();
        let k = m.num_generators();
        let table: Vec<usize> = (0..m.len())
            .flat_map(|i| (0..k).map(move |g| (i, g)))
            .map(|(i, g)| m.right(i, g))
            .collect();
        let a = EnumeratedMonoid::from_right_table(m.letters().to_vec(), &table);
        assert_eq!(a.len(), m.len());
        for i in 0..a.len() {
            assert_eq!(a.rep_word(i), m.rep_word(i));
            for g in 0..k {
                assert_eq!(a.left(i, g), m.left(i, g));
                assert_eq!(a.right(i, g), m.right(i, g));
            }
        }
    }
}

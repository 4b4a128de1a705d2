//! Set partitions (equivalence relations) on `0..size`.
//!
//! A [`Partition`] is stored as its restricted growth string: `labels[p]` is
//! the index of the block containing `p`, with blocks numbered in order of
//! their least element. That string is the canonical form, so derived
//! equality and hashing are structural.
//!
//! The text form is 1-based: blocks separated by `|`, elements by `,`,
//! e.g. `1,2|3`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::union_find::UnionFind;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    /// Builds a partition of `0..size` from arbitrary-order blocks.
    pub fn new<B: AsRef<[usize]>>(size: usize, blocks: &[B]) -> Result<Self> {
        let mut labels = vec![usize::MAX; size];
        for (b, block) in blocks.iter().enumerate() {
            for &p in block.as_ref() {
                if p >= size {
                    return Err(Error::OutOfRange { point: p, size });
                }
                if labels[p] != usize::MAX {
                    return Err(Error::OverlapOrGap { size });
                }
                labels[p] = b;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::OverlapOrGap { size });
        }
        Ok(Self::from_labels(&labels))
    }

    /// Canonicalizes any block labelling: points sharing a label share a block.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut remap = std::collections::HashMap::new();
        let labels = labels
            .iter()
            .map(|&l| {
                let next = remap.len();
                *remap.entry(l).or_insert(next)
            })
            .collect();
        Self { labels }
    }

    /// Wraps a labelling that is already a restricted growth string.
    pub(crate) fn from_rgs(labels: Vec<usize>) -> Self {
        debug_assert!(is_rgs(&labels));
        Self { labels }
    }

    /// Every point in its own block.
    pub fn discrete(size: usize) -> Self {
        Self {
            labels: (0..size).collect(),
        }
    }

    /// All points in one block.
    pub fn full(size: usize) -> Self {
        Self {
            labels: vec![0; size],
        }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    /// Canonical block labels (restricted growth string).
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_of(&self, point: usize) -> usize {
        self.labels[point]
    }

    /// Blocks ordered by least element, each ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (p, &l) in self.labels.iter().enumerate() {
            blocks[l].push(p);
        }
        blocks
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    /// Smallest equivalence containing both `self` and `other`.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let mut uf = UnionFind::new(self.size());
        for part in [self, other] {
            let mut first = vec![usize::MAX; part.num_blocks()];
            for (p, &l) in part.labels.iter().enumerate() {
                if first[l] == usize::MAX {
                    first[l] = p;
                } else {
                    uf.union(first[l], p);
                }
            }
        }
        Ok(Self::from_labels(&uf.roots()))
    }

    /// True if every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.size() == other.size()
            && self
                .blocks()
                .iter()
                .all(|b| b.iter().all(|&p| other.labels[p] == other.labels[b[0]]))
    }
}

fn is_rgs(labels: &[usize]) -> bool {
    let mut next = 0;
    for &l in labels {
        if l > next {
            return false;
        }
        if l == next {
            next += 1;
        }
    }
    true
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        for (i, block) in blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, p) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// Parses a comma-separated list of 1-based labels; empty input gives an empty list.
pub(crate) fn parse_label_list(s: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| match tok.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(Error::Parse(format!("bad vertex label `{tok}`"))),
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    /// The size is the number of listed points, which must be exactly `1..=size`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Ok(Partition::discrete(0));
        }
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let block = parse_label_list(part)?;
            if block.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            blocks.push(block.into_iter().map(|v| v - 1).collect::<Vec<_>>());
        }
        let size = blocks.iter().map(Vec::len).sum();
        Partition::new(size, &blocks)
    }
}

/// Every partition of `0..size`, in lexicographic order of restricted growth strings.
pub fn enumerate_partitions(size: usize) -> Partitions {
    Partitions {
        current: Some(vec![0; size]),
    }
}

pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.take()?;
        let mut next = out.clone();
        // prefix_max[i] = max(next[0..i])
        let mut prefix_max = vec![0; next.len()];
        for i in 1..next.len() {
            prefix_max[i] = prefix_max[i - 1].max(next[i - 1]);
        }
        if let Some(i) = (1..next.len()).rev().find(|&i| next[i] <= prefix_max[i]) {
            next[i] += 1;
            for v in &mut next[i + 1..] {
                *v = 0;
            }
            self.current = Some(next);
        }
        Some(Partition::from_rgs(out))
    }
}

/// Bell numbers by the Bell triangle; independent of [`enumerate_partitions`].
pub fn bell(size: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..size {
        let mut next = vec![*row.last().unwrap()];
        for &v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn make_partition_examples() {
        let a = Partition::new(3, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(a.to_string(), "1,2|3");
        let b = Partition::new(3, &[vec![2], vec![1, 0]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            Partition::new(3, &[vec![0, 1], vec![1, 2]]),
            Err(Error::OverlapOrGap { size: 3 })
        );
        assert_eq!(
            Partition::new(3, &[vec![0, 1]]),
            Err(Error::OverlapOrGap { size: 3 })
        );
        assert_eq!(
            Partition::new(2, &[vec![0, 5]]),
            Err(Error::OutOfRange { point: 5, size: 2 })
        );
    }

    #[test]
    fn join_examples() {
        assert_eq!(p("1,2|3").join(&p("1|2,3")).unwrap(), p("1,2,3"));
        assert_eq!(
            p("1,2|3").join(&Partition::discrete(3)).unwrap(),
            p("1,2|3")
        );
        assert_eq!(p("1,2|3|4").join(&p("1|2|3,4")).unwrap(), p("1,2|3,4"));
        assert_eq!(
            p("1|2").join(&p("1|2|3")),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(0).count(), 1);
        assert_eq!(enumerate_partitions(1).count(), 1);
        assert_eq!(enumerate_partitions(3).count(), 5);
        assert_eq!(enumerate_partitions(4).count(), 15);
        for size in 0..=8 {
            assert_eq!(enumerate_partitions(size).count() as u64, bell(size));
        }
    }

    #[test]
    fn enumeration_is_distinct_and_canonical() {
        let all: Vec<_> = enumerate_partitions(5).collect();
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        for q in &all {
            assert_eq!(Partition::from_labels(q.labels()), *q);
        }
        let first: Vec<_> = enumerate_partitions(3).map(|q| q.to_string()).collect();
        assert_eq!(first, ["1,2,3", "1,2|3", "1,3|2", "1|2,3", "1|2|3"]);
    }

    #[test]
    fn bell_values() {
        assert_eq!(
            (0..8).map(bell).collect::<Vec<_>>(),
            [1, 1, 2, 5, 15, 52, 203, 877]
        );
    }

    #[test]
    fn text_round_trip() {
        for q in enumerate_partitions(5) {
            assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
        }
        assert_eq!(p(" 3 | 2, 1 ").to_string(), "1,2|3");
        assert!("1,3".parse::<Partition>().is_err());
        assert!("1,,2".parse::<Partition>().is_err());
        assert!("0,1".parse::<Partition>().is_err());
    }

    #[test]
    fn refinement() {
        assert!(p("1|2|3").refines(&p("1,2|3")));
        assert!(!p("1,3|2").refines(&p("1,2|3")));
    }
}

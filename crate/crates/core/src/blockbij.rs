//! Block bijections: the elements of the dual symmetric inverse monoid.
//!
//! A block bijection of degree `n` is a partition of `2n` points in which
//! every block contains at least one top and one bottom vertex. Top vertex
//! `i` (1-based) is point `i - 1`; bottom vertex `i'` is point `n + i - 1`.
//!
//! Products stack the left factor above the right one and take connected
//! components, so words are evaluated left to right.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::partitions::{parse_label_list, Partition};
use crate::union_find::UnionFind;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockBijection {
    n: usize,
    diagram: Partition,
}

/// One block split by row, 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl BlockBijection {
    /// Builds a block bijection from `(top labels, bottom labels)` pairs, 1-based.
    pub fn from_blocks<I, T, B>(n: usize, blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (T, B)>,
        T: AsRef<[usize]>,
        B: AsRef<[usize]>,
    {
        let mut points = Vec::new();
        for (top, bottom) in blocks {
            let mut block = Vec::new();
            for &v in top.as_ref() {
                block.push(vertex_point(n, v, 0)?);
            }
            for &v in bottom.as_ref() {
                block.push(vertex_point(n, v, n)?);
            }
            points.push(block);
        }
        Self::from_diagram(n, Partition::new(2 * n, &points)?)
    }

    /// Validates that every block of `diagram` meets both rows.
    pub fn from_diagram(n: usize, diagram: Partition) -> Result<Self> {
        if diagram.size() != 2 * n {
            return Err(Error::SizeMismatch {
                left: 2 * n,
                right: diagram.size(),
            });
        }
        let k = diagram.num_blocks();
        let (mut top, mut bottom) = (vec![false; k], vec![false; k]);
        for p in 0..n {
            top[diagram.block_of(p)] = true;
            bottom[diagram.block_of(n + p)] = true;
        }
        if let Some(b) = (0..k).find(|&b| !(top[b] && bottom[b])) {
            let bb = Self { n, diagram };
            let block = bb.block_list().swap_remove(b);
            return Err(Error::NotBiequivalence {
                block: format_block(&block),
            });
        }
        Ok(Self { n, diagram })
    }

    /// Restricts a canonical 2n-point labelling that is known to be a biequivalence.
    fn from_labels_unchecked(n: usize, labels: &[usize]) -> Self {
        Self {
            n,
            diagram: Partition::from_labels(labels),
        }
    }

    pub fn identity(n: usize) -> Self {
        let labels: Vec<usize> = (0..n).chain(0..n).collect();
        Self::from_labels_unchecked(n, &labels)
    }

    /// The unit sending top `i` to bottom `perm[i - 1]` (both 1-based).
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        Self::from_blocks(n, (1..=n).map(|i| (vec![i], vec![perm[i - 1]])))
    }

    /// The idempotent whose domain and range are `p`, blocks matched identically.
    pub fn idempotent(p: &Partition) -> Self {
        let labels: Vec<usize> = p.labels().iter().chain(p.labels()).copied().collect();
        Self::from_labels_unchecked(p.size(), &labels)
    }

    /// Image of the letter `x`: blocks `{1,2;3'}`, `{3;1',2'}`, `{i;i'}` for `i >= 4`.
    pub fn gen_x(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::DegreeTooSmall { degree: n, min: 3 });
        }
        let mut blocks = vec![(vec![1, 2], vec![3]), (vec![3], vec![1, 2])];
        blocks.extend((4..=n).map(|i| (vec![i], vec![i])));
        Self::from_blocks(n, blocks)
    }

    /// Image of the letter `s_i`: the transposition of `i` and `i + 1`.
    pub fn gen_s(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: 1,
                hi: n.saturating_sub(1),
            });
        }
        let perm: Vec<usize> = (1..=n)
            .map(|j| match j {
                _ if j == i => i + 1,
                _ if j == i + 1 => i,
                _ => j,
            })
            .collect();
        Self::from_permutation(&perm)
    }

    /// The idempotent with domain and range `(1,2|3|...|n)`.
    pub fn epsilon(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegreeTooSmall { degree: n, min: 2 });
        }
        let mut blocks = vec![vec![0, 1]];
        blocks.extend((2..n).map(|p| vec![p]));
        Ok(Self::idempotent(&Partition::new(n, &blocks)?))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn diagram(&self) -> &Partition {
        &self.diagram
    }

    /// Blocks in canonical order, split into 1-based top and bottom labels.
    pub fn block_list(&self) -> Vec<Block> {
        self.diagram
            .blocks()
            .into_iter()
            .map(|b| {
                let (top, bottom): (Vec<usize>, Vec<usize>) =
                    b.into_iter().partition(|&p| p < self.n);
                Block {
                    top: top.into_iter().map(|p| p + 1).collect(),
                    bottom: bottom.into_iter().map(|p| p - self.n + 1).collect(),
                }
            })
            .collect()
    }

    /// Stacks `self` above `other` and keeps the outer rows.
    pub fn compose(&self, other: &BlockBijection) -> Result<BlockBijection> {
        let n = self.n;
        if other.n != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: other.n,
            });
        }
        // points 0..n: top of self, n..2n: shared middle row, 2n..3n: bottom of other
        let mut uf = UnionFind::new(3 * n);
        for (part, offset) in [(&self.diagram, 0), (&other.diagram, n)] {
            let mut first = vec![usize::MAX; part.num_blocks()];
            for (p, &l) in part.labels().iter().enumerate() {
                if first[l] == usize::MAX {
                    first[l] = p + offset;
                } else {
                    uf.union(first[l], p + offset);
                }
            }
        }
        let labels: Vec<usize> = (0..n).chain(2 * n..3 * n).map(|p| uf.find(p)).collect();
        Ok(Self::from_labels_unchecked(n, &labels))
    }

    /// Folds [`compose`](Self::compose) over `factors`, starting from the identity.
    pub fn product<'a, I>(n: usize, factors: I) -> Result<BlockBijection>
    where
        I: IntoIterator<Item = &'a BlockBijection>,
    {
        factors
            .into_iter()
            .try_fold(Self::identity(n), |acc, f| acc.compose(f))
    }

    /// Reflects the diagram, swapping top and bottom rows.
    pub fn inverse(&self) -> BlockBijection {
        let n = self.n;
        let labels = self.diagram.labels();
        let flipped: Vec<usize> = labels[n..].iter().chain(&labels[..n]).copied().collect();
        Self::from_labels_unchecked(n, &flipped)
    }

    pub fn domain(&self) -> Partition {
        Partition::from_labels(&self.diagram.labels()[..self.n])
    }

    pub fn range(&self) -> Partition {
        Partition::from_labels(&self.diagram.labels()[self.n..])
    }

    /// Every block has equally many top and bottom points.
    pub fn is_uniform(&self) -> bool {
        self.row_counts().iter().all(|(t, b)| t == b)
    }

    /// Every block is a single top point joined to a single bottom point.
    pub fn is_unit(&self) -> bool {
        self.row_counts().iter().all(|&c| c == (1, 1))
    }

    /// Each block has the same top and bottom label sets.
    pub fn is_idempotent(&self) -> bool {
        let labels = self.diagram.labels();
        labels[..self.n] == labels[self.n..]
    }

    fn row_counts(&self) -> Vec<(usize, usize)> {
        let mut counts = vec![(0, 0); self.diagram.num_blocks()];
        for (p, &l) in self.diagram.labels().iter().enumerate() {
            if p < self.n {
                counts[l].0 += 1;
            } else {
                counts[l].1 += 1;
            }
        }
        counts
    }

    /// `g⁻¹ · self · g` for a unit `g`.
    pub fn conjugate(&self, g: &BlockBijection) -> Result<BlockBijection> {
        if !g.is_unit() {
            return Err(Error::NotAUnit);
        }
        g.inverse().compose(self)?.compose(g)
    }

    /// Whether `epsilon · self · epsilon == self`.
    pub fn in_local_submonoid(&self) -> bool {
        let labels = self.diagram.labels();
        self.n >= 2 && labels[0] == labels[1] && labels[self.n] == labels[self.n + 1]
    }

    /// Collapses `1 ≡ 2` and `1' ≡ 2'`, giving a block bijection of degree `n - 1`.
    pub fn upsilon(&self) -> Result<BlockBijection> {
        if !self.in_local_submonoid() {
            return Err(Error::NotInLocalSubmonoid);
        }
        let n = self.n;
        let labels = self.diagram.labels();
        let shrunk: Vec<usize> = (1..n).chain(n + 1..2 * n).map(|p| labels[p]).collect();
        Ok(Self::from_labels_unchecked(n - 1, &shrunk))
    }

    /// Parses the 1-based literal grammar, e.g. `1,2;3|3;1,2`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Self::from_blocks(n, Vec::<(Vec<usize>, Vec<usize>)>::new());
        }
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let (top, bottom) = part
                .split_once(';')
                .ok_or_else(|| Error::Parse(format!("block `{part}` has no `;`")))?;
            if bottom.contains(';') {
                return Err(Error::Parse(format!("block `{part}` has several `;`")));
            }
            blocks.push((parse_label_list(top)?, parse_label_list(bottom)?));
        }
        Self::from_blocks(n, blocks)
    }

    /// Two rows of vertices; the number under each vertex is its block.
    pub fn render_ascii(&self) -> String {
        let n = self.n;
        let labels = self.diagram.labels();
        let width = (n + 1)
            .to_string()
            .len()
            .max(labels.len().to_string().len())
            + 2;
        let mut out = String::new();
        let mut row = |name: &str, cells: &mut dyn Iterator<Item = String>| {
            let _ = write!(out, "{name:<7}");
            for c in cells {
                let _ = write!(out, "{c:>width$}");
            }
            out.push('\n');
        };
        row("top", &mut (1..=n).map(|i| i.to_string()));
        row(
            "block",
            &mut labels[..n].iter().map(|l| (l + 1).to_string()),
        );
        row(
            "block",
            &mut labels[n..].iter().map(|l| (l + 1).to_string()),
        );
        row("bottom", &mut (1..=n).map(|i| format!("{i}'")));
        out
    }

    /// Graphviz source: one node per vertex, each block drawn as a path.
    pub fn render_dot(&self) -> String {
        let n = self.n;
        let mut out = String::from("graph block_bijection {\n  node [shape=circle];\n");
        let name = |p: usize| {
            if p < n {
                format!("t{}", p + 1)
            } else {
                format!("b{}", p - n + 1)
            }
        };
        out.push_str("  { rank=same;");
        for i in 1..=n {
            let _ = write!(out, " t{i} [label=\"{i}\"];");
        }
        out.push_str(" }\n  { rank=same;");
        for i in 1..=n {
            let _ = write!(out, " b{i} [label=\"{i}'\"];");
        }
        out.push_str(" }\n");
        for i in 1..n {
            let _ = writeln!(out, "  t{i} -- t{} [style=invis];", i + 1);
            let _ = writeln!(out, "  b{i} -- b{} [style=invis];", i + 1);
        }
        for block in self.diagram.blocks() {
            for pair in block.windows(2) {
                let _ = writeln!(out, "  {} -- {};", name(pair[0]), name(pair[1]));
            }
        }
        out.push_str("}\n");
        out
    }
}

fn vertex_point(n: usize, label: usize, offset: usize) -> Result<usize> {
    if label == 0 || label > n {
        return Err(Error::OutOfRange {
            point: label,
            size: n,
        });
    }
    Ok(offset + label - 1)
}

fn join_labels(labels: &[usize]) -> String {
    labels
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn format_block(block: &Block) -> String {
    format!("{};{}", join_labels(&block.top), join_labels(&block.bottom))
}

impl fmt::Display for BlockBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.block_list().iter().map(format_block).collect();
        f.write_str(&blocks.join("|"))
    }
}

impl fmt::Debug for BlockBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BlockBijection({self})")
    }
}

//! Partitions, Ferrers diagrams and skew diagrams.
//!
//! Cells are 1-indexed `(row, column)` pairs. Missing trailing parts read as
//! zero everywhere.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Drops zero parts; the remaining parts must still be weakly decreasing.
    pub fn from_lengths(lengths: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(lengths.into_iter().filter(|&l| l > 0).collect())
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (1-indexed); zero past the height.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn width(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.width();
        Partition((1..=width).map(|k| self.0.iter().take_while(|&&p| p >= k).count()).collect())
    }

    /// `mu` is contained in `self`: `mu_i <= self_i` for every `i`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.height() <= self.height() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Sum of the first `k` parts.
    pub fn partial_sum(&self, k: usize) -> usize {
        self.0.iter().take(k).sum()
    }

    /// Rows whose last cell is a corner (1-indexed).
    pub fn corner_rows(&self) -> Vec<usize> {
        (1..=self.height()).filter(|&i| self.part(i) > self.part(i + 1)).collect()
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                go(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, by size.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of).collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewDiagram {
    outer: Partition,
    inner: Partition,
}

impl SkewDiagram {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { inner: inner.0, outer: outer.0 });
        }
        Ok(SkewDiagram { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.outer.height()).flat_map(move |i| (self.inner.part(i) + 1..=self.outer.part(i)).map(move |j| (i, j)))
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn conjugate(&self) -> SkewDiagram {
        SkewDiagram { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// At most one cell in every column.
    pub fn is_horizontal_strip(&self) -> bool {
        // column j holds two skew cells iff rows i and i+1 both reach it,
        // i.e. inner_i < outer_{i+1}
        (1..self.outer.height()).all(|i| self.outer.part(i + 1) <= self.inner.part(i))
    }

    /// At most one cell in every row.
    pub fn is_vertical_strip(&self) -> bool {
        (1..=self.outer.height()).all(|i| self.outer.part(i) - self.inner.part(i) <= 1)
    }
}

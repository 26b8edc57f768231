//! Super semistandard Young tableaux and words over a signed alphabet.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::alphabet::{same_alphabet, AlphabetRef, Letter, SignedAlphabet};
use crate::error::{Condition, Error, Result};
use crate::shape::{Partition, SkewDiagram};

/// A finite word over a signed alphabet.
#[derive(Clone)]
pub struct Word {
    alphabet: AlphabetRef,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: AlphabetRef, letters: Vec<Letter>) -> Result<Self> {
        for &x in &letters {
            alphabet.check(x)?;
        }
        Ok(Word { alphabet, letters })
    }

    pub fn empty(alphabet: AlphabetRef) -> Self {
        Word { alphabet, letters: Vec::new() }
    }

    /// Comma-separated symbols, e.g. `"3,2,2,1"`.
    pub fn parse(alphabet: AlphabetRef, text: &str) -> Result<Self> {
        let letters = alphabet.parse_letters(text)?;
        Ok(Word { alphabet, letters })
    }

    pub(crate) fn from_parts(alphabet: AlphabetRef, letters: Vec<Letter>) -> Self {
        Word { alphabet, letters }
    }

    pub fn alphabet(&self) -> &AlphabetRef {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if !same_alphabet(&self.alphabet, &other.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { alphabet: self.alphabet.clone(), letters })
    }

    /// Multiset of letters, sorted.
    pub fn content(&self) -> Vec<Letter> {
        let mut c = self.letters.clone();
        c.sort_unstable();
        c
    }

    pub fn symbols(&self) -> Vec<&str> {
        self.letters.iter().map(|&x| self.alphabet.symbol(x)).collect()
    }

    /// Comma-separated form accepted by [`Word::parse`].
    pub fn to_csv(&self) -> String {
        self.symbols().join(",")
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && same_alphabet(&self.alphabet, &other.alphabet)
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.symbols().join(" "))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols().join(" "))
    }
}

/// Checks both super semistandard conditions on rows that start at column
/// `offsets[i] + 1`. Returns the first offending cell in row-major order.
pub(crate) fn check_conditions(alphabet: &SignedAlphabet, offsets: &[usize], rows: &[Vec<Letter>]) -> Result<()> {
    for (i, row) in rows.iter().enumerate() {
        let start = offsets.get(i).copied().unwrap_or(0);
        for (k, &x) in row.iter().enumerate() {
            alphabet.check(x)?;
            let col = start + k + 1;
            if k > 0 {
                let left = row[k - 1];
                if left > x || (left == x && alphabet.is_odd(x)) {
                    return Err(Error::Violation { row: i + 1, col, condition: Condition::Row });
                }
            }
            if i > 0 {
                let above_start = offsets.get(i - 1).copied().unwrap_or(0);
                let above_row = &rows[i - 1];
                if col > above_start && col <= above_start + above_row.len() {
                    let up = above_row[col - above_start - 1];
                    if up > x || (up == x && alphabet.is_even(x)) {
                        return Err(Error::Violation { row: i + 1, col, condition: Condition::Column });
                    }
                }
            }
        }
    }
    Ok(())
}

/// A super semistandard Young tableau of straight shape.
#[derive(Clone)]
pub struct Tableau {
    alphabet: AlphabetRef,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn empty(alphabet: AlphabetRef) -> Self {
        Tableau { alphabet, rows: Vec::new() }
    }

    /// Validates rows given top to bottom.
    pub fn from_rows(alphabet: AlphabetRef, rows: Vec<Vec<Letter>>) -> Result<Self> {
        if let Some(i) = rows.iter().position(|r| r.is_empty()) {
            if rows[i..].iter().any(|r| !r.is_empty()) {
                return Err(Error::RowLengths { row: i + 1 });
            }
        }
        let rows: Vec<Vec<Letter>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        if let Some(w) = rows.windows(2).position(|w| w[0].len() < w[1].len()) {
            return Err(Error::RowLengths { row: w + 2 });
        }
        check_conditions(&alphabet, &[], &rows)?;
        Ok(Tableau { alphabet, rows })
    }

    /// Validates rows of symbols.
    pub fn parse<S: AsRef<str>>(alphabet: AlphabetRef, rows: &[Vec<S>]) -> Result<Self> {
        let rows = rows.iter().map(|r| alphabet.resolve(r)).collect::<Result<Vec<_>>>()?;
        Tableau::from_rows(alphabet, rows)
    }

    pub(crate) fn from_rows_unchecked(alphabet: AlphabetRef, rows: Vec<Vec<Letter>>) -> Self {
        debug_assert!(check_conditions(&alphabet, &[], &rows).is_ok());
        Tableau { alphabet, rows }
    }

    pub fn alphabet(&self) -> &AlphabetRef {
        &self.alphabet
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<Letter>> {
        &mut self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Letter>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("tableau rows form a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry at 1-indexed `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Option<Letter> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// Length of column `col` (1-indexed).
    pub fn column_len(&self, col: usize) -> usize {
        self.rows.iter().take_while(|r| r.len() >= col).count()
    }

    pub fn column(&self, col: usize) -> Vec<Letter> {
        self.rows.iter().take_while(|r| r.len() >= col).map(|r| r[col - 1]).collect()
    }

    /// Sorted multiset of entries.
    pub fn content(&self) -> Vec<Letter> {
        let mut c: Vec<Letter> = self.rows.iter().flatten().copied().collect();
        c.sort_unstable();
        c
    }

    /// Reading word: rows concatenated from the bottom row upward.
    pub fn word(&self) -> Word {
        let letters = self.rows.iter().rev().flatten().copied().collect();
        Word::from_parts(self.alphabet.clone(), letters)
    }

    /// The transposed tableau over the conjugate alphabet.
    pub fn transpose(&self) -> Tableau {
        let conj = self.alphabet.conjugate().into_ref();
        self.transpose_onto(conj)
    }

    /// Transpose using a caller-provided conjugate alphabet.
    pub(crate) fn transpose_onto(&self, conjugate: AlphabetRef) -> Tableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (1..=width).map(|j| self.column(j)).collect();
        Tableau { alphabet: conjugate, rows }
    }

    /// Splits off the entries among the `threshold` smallest letters of the
    /// alphabet. They occupy a straight subshape `mu`; the rest fill the skew
    /// shape `lambda / mu`.
    pub fn split_by_threshold(&self, threshold: usize) -> Result<(Tableau, SkewTableau)> {
        let cut = Letter::new(threshold);
        let mut low = Vec::new();
        let mut high = Vec::new();
        for row in &self.rows {
            let k = row.iter().take_while(|&&x| x < cut).count();
            if row[k..].iter().any(|&x| x < cut) {
                return Err(Error::NotStraightSplit);
            }
            low.push(row[..k].to_vec());
            high.push(row[k..].to_vec());
        }
        let inner = Partition::from_lengths(low.iter().map(Vec::len)).map_err(|_| Error::NotStraightSplit)?;
        let low: Vec<Vec<Letter>> = low.into_iter().filter(|r| !r.is_empty()).collect();
        let t0 = Tableau::from_rows(self.alphabet.clone(), low)?;
        let t1 = SkewTableau::new(self.alphabet.clone(), self.shape(), inner, high)?;
        Ok((t0, t1))
    }

    pub fn to_symbols(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(|&x| self.alphabet.symbol(x).to_string()).collect()).collect()
    }

    /// Matrix layout: one line per row, cells separated by a space and padded
    /// to the widest symbol.
    pub fn render(&self) -> String {
        render_rows(&self.alphabet, &[], &self.rows)
    }
}

fn render_rows(alphabet: &SignedAlphabet, offsets: &[usize], rows: &[Vec<Letter>]) -> String {
    let width = rows.iter().flatten().map(|&x| alphabet.symbol(x).chars().count()).max().unwrap_or(1);
    let mut lines = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let mut cells: Vec<String> = vec![" ".repeat(width); offsets.get(i).copied().unwrap_or(0)];
        cells.extend(row.iter().map(|&x| format!("{:<width$}", alphabet.symbol(x))));
        lines.push(cells.join(" ").trim_end().to_string());
    }
    lines.join("\n")
}

impl PartialEq for Tableau {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && same_alphabet(&self.alphabet, &other.alphabet)
    }
}

impl Eq for Tableau {}

impl Hash for Tableau {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| self.alphabet.symbol(x)).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "Tableau[{}]", rows.join(" / "))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A tableau of skew shape `outer / inner`. Row `i` holds the entries of
/// columns `inner_i + 1 ..= outer_i`.
#[derive(Clone)]
pub struct SkewTableau {
    alphabet: AlphabetRef,
    shape: SkewDiagram,
    rows: Vec<Vec<Letter>>,
}

impl SkewTableau {
    pub fn new(alphabet: AlphabetRef, outer: Partition, inner: Partition, rows: Vec<Vec<Letter>>) -> Result<Self> {
        let shape = SkewDiagram::new(outer, inner)?;
        let expected: Vec<usize> =
            (1..=shape.outer().height()).map(|i| shape.outer().part(i) - shape.inner().part(i)).collect();
        let mut rows = rows;
        rows.resize(expected.len(), Vec::new());
        let actual: Vec<usize> = rows.iter().map(Vec::len).collect();
        if actual != expected {
            return Err(Error::ShapeMismatch { declared: expected, actual });
        }
        check_conditions(&alphabet, shape.inner().parts(), &rows)?;
        Ok(SkewTableau { alphabet, shape, rows })
    }

    pub fn alphabet(&self) -> &AlphabetRef {
        &self.alphabet
    }

    pub fn shape(&self) -> &SkewDiagram {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<Letter> {
        let start = self.shape.inner().part(row);
        if col <= start {
            return None;
        }
        self.rows.get(row.checked_sub(1)?)?.get(col - start - 1).copied()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn render(&self) -> String {
        render_rows(&self.alphabet, self.shape.inner().parts(), &self.rows)
    }
}

impl PartialEq for SkewTableau {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.rows == other.rows && same_alphabet(&self.alphabet, &other.alphabet)
    }
}

impl Eq for SkewTableau {}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewTableau({} / {})\n{}", self.shape.outer(), self.shape.inner(), self.render())
    }
}

/// All tableaux of shape `shape` over `alphabet`, each once, in the
/// lexicographic order of their row-major fillings.
pub fn enumerate_tableaux(shape: &Partition, alphabet: &AlphabetRef) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_filling(shape, alphabet, |rows| out.push(Tableau { alphabet: alphabet.clone(), rows: rows.to_vec() }));
    out
}

/// All tableaux with at most `max_cells` cells, by shape size.
pub fn enumerate_tableaux_up_to(max_cells: usize, alphabet: &AlphabetRef) -> Vec<Tableau> {
    Partition::all_up_to(max_cells).iter().flat_map(|shape| enumerate_tableaux(shape, alphabet)).collect()
}

/// Row-major backtracking fill; every cell is constrained only by its left
/// and upper neighbours.
pub(crate) fn for_each_filling(shape: &Partition, alphabet: &SignedAlphabet, mut visit: impl FnMut(&[Vec<Letter>])) {
    let cells: Vec<(usize, usize)> = shape.cells().map(|(i, j)| (i - 1, j - 1)).collect();
    let mut rows: Vec<Vec<Letter>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
    if alphabet.is_empty() && !cells.is_empty() {
        return;
    }

    fn go(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<Letter>>,
        alphabet: &SignedAlphabet,
        visit: &mut dyn FnMut(&[Vec<Letter>]),
    ) {
        let Some(&(i, j)) = cells.get(k) else {
            visit(rows);
            return;
        };
        for x in alphabet.letters() {
            if j > 0 {
                let left = rows[i][j - 1];
                if left > x || (left == x && alphabet.is_odd(x)) {
                    continue;
                }
            }
            if i > 0 {
                let up = rows[i - 1][j];
                if up > x {
                    // larger letters may still fit
                    continue;
                }
                if up == x && alphabet.is_even(x) {
                    continue;
                }
            }
            rows[i].push(x);
            go(k + 1, cells, rows, alphabet, visit);
            rows[i].pop();
        }
    }

    go(0, &cells, &mut rows, alphabet, &mut visit);
}

/// Number of standard tableaux of shape `shape`: injective row- and
/// column-strict fillings by `1..=n`. Counted by placing `n, n-1, ..., 1`
/// into removable corners, memoised on the remaining subshape.
pub fn enumerate_standard(shape: &Partition) -> u64 {
    fn count(parts: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, u64>) -> u64 {
        if parts.iter().all(|&p| p == 0) {
            return 1;
        }
        if let Some(&c) = memo.get(parts.as_slice()) {
            return c;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let below = parts.get(i + 1).copied().unwrap_or(0);
            if parts[i] > below {
                parts[i] -= 1;
                total += count(parts, memo);
                parts[i] += 1;
            }
        }
        memo.insert(parts.clone(), total);
        total
    }
    count(&mut shape.parts().to_vec(), &mut HashMap::new())
}

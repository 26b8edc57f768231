//! Signed Schensted bumping: row and column insertion, their inverses, and
//! the word-to-tableau map.
//!
//! Insertion rules, for the letter `x` currently being placed:
//!
//! | procedure | `x` even | `x` odd |
//! |-----------|----------|---------|
//! | row insertion, scan a row | leftmost entry `> x` | leftmost entry `>= x` |
//! | column insertion, scan a column | topmost entry `>= x` | topmost entry `> x` |
//! | row deletion, scan a row | rightmost entry `< x` | rightmost entry `<= x` |
//! | column deletion, scan a column | bottommost entry `<= x` | bottommost entry `< x` |
//!
//! All functions are pure: the input tableau is cloned, never mutated.

use crate::alphabet::{same_alphabet, Letter, SignedAlphabet};
use crate::error::{Error, Result};
use crate::shape::{Partition, SkewDiagram};
use crate::tableau::{Tableau, Word};

/// Result of `T <- x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowInsertion {
    pub tableau: Tableau,
    /// Row of the new box (1-indexed).
    pub row: usize,
    /// Column of the new box (1-indexed).
    pub col: usize,
    /// Bumping sequence `x_1 = x, x_2, ..., x_row`: the letter placed in each
    /// visited row.
    pub bumped: Vec<Letter>,
}

/// Result of `x -> T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnInsertion {
    pub tableau: Tableau,
    /// Column of the new box (1-indexed).
    pub col: usize,
    /// Row of the new box (1-indexed).
    pub row: usize,
    /// Letter placed in each visited column.
    pub bumped: Vec<Letter>,
}

/// In-place row insertion. Returns the 1-indexed new box.
pub(crate) fn row_insert_rows(
    rows: &mut Vec<Vec<Letter>>,
    alphabet: &SignedAlphabet,
    x: Letter,
    mut trace: Option<&mut Vec<Letter>>,
) -> (usize, usize) {
    let mut x = x;
    let mut i = 0;
    loop {
        if let Some(t) = trace.as_deref_mut() {
            t.push(x);
        }
        if i == rows.len() {
            rows.push(vec![x]);
            return (i + 1, 1);
        }
        let row = &mut rows[i];
        let pos = if alphabet.is_even(x) { row.partition_point(|&y| y <= x) } else { row.partition_point(|&y| y < x) };
        if pos == row.len() {
            row.push(x);
            return (i + 1, row.len());
        }
        std::mem::swap(&mut row[pos], &mut x);
        i += 1;
    }
}

/// In-place column insertion. Returns the 1-indexed new box.
pub(crate) fn col_insert_rows(
    rows: &mut Vec<Vec<Letter>>,
    alphabet: &SignedAlphabet,
    x: Letter,
    mut trace: Option<&mut Vec<Letter>>,
) -> (usize, usize) {
    let mut x = x;
    let mut j = 0;
    loop {
        if let Some(t) = trace.as_deref_mut() {
            t.push(x);
        }
        let height = rows.iter().take_while(|r| r.len() > j).count();
        let even = alphabet.is_even(x);
        let hit = (0..height).find(|&i| {
            let y = rows[i][j];
            if even {
                y >= x
            } else {
                y > x
            }
        });
        match hit {
            Some(i) => {
                std::mem::swap(&mut rows[i][j], &mut x);
                j += 1;
            }
            None => {
                if height == rows.len() {
                    debug_assert_eq!(j, 0);
                    rows.push(vec![x]);
                } else {
                    debug_assert_eq!(rows[height].len(), j);
                    rows[height].push(x);
                }
                return (height + 1, j + 1);
            }
        }
    }
}

/// `T <- x`.
pub fn row_insert(t: &Tableau, x: Letter) -> Result<RowInsertion> {
    t.alphabet().check(x)?;
    let mut tableau = t.clone();
    let mut bumped = Vec::new();
    let alphabet = t.alphabet().clone();
    let (row, col) = row_insert_rows(tableau.rows_mut(), &alphabet, x, Some(&mut bumped));
    Ok(RowInsertion { tableau, row, col, bumped })
}

/// `x -> T`.
pub fn col_insert(x: Letter, t: &Tableau) -> Result<ColumnInsertion> {
    t.alphabet().check(x)?;
    let mut tableau = t.clone();
    let mut bumped = Vec::new();
    let alphabet = t.alphabet().clone();
    let (row, col) = col_insert_rows(tableau.rows_mut(), &alphabet, x, Some(&mut bumped));
    Ok(ColumnInsertion { tableau, col, row, bumped })
}

pub(crate) fn row_delete_rows(rows: &mut Vec<Vec<Letter>>, alphabet: &SignedAlphabet, row: usize) -> Result<Letter> {
    if row == 0 || row > rows.len() {
        return Err(Error::NoSuchRow(row));
    }
    let len = rows[row - 1].len();
    if rows.get(row).map_or(0, Vec::len) >= len {
        return Err(Error::RowNotCorner(row));
    }
    let mut x = rows[row - 1].pop().expect("row is non-empty");
    if rows[row - 1].is_empty() {
        rows.pop();
    }
    for h in (0..row - 1).rev() {
        let r = &mut rows[h];
        let below = if alphabet.is_even(x) { r.partition_point(|&y| y < x) } else { r.partition_point(|&y| y <= x) };
        if below == 0 {
            // unreachable for a corner of a valid tableau
            break;
        }
        std::mem::swap(&mut r[below - 1], &mut x);
    }
    Ok(x)
}

pub(crate) fn col_delete_rows(rows: &mut Vec<Vec<Letter>>, alphabet: &SignedAlphabet, col: usize) -> Result<Letter> {
    let height = |rows: &Vec<Vec<Letter>>, j: usize| rows.iter().take_while(|r| r.len() >= j).count();
    let len = if col == 0 { 0 } else { height(rows, col) };
    if len == 0 {
        return Err(Error::NoSuchColumn(col));
    }
    if height(rows, col + 1) >= len {
        return Err(Error::ColumnNotCorner(col));
    }
    let mut x = rows[len - 1].pop().expect("column is non-empty");
    if rows[len - 1].is_empty() {
        rows.pop();
    }
    for h in (0..col - 1).rev() {
        let column_len = height(rows, h + 1);
        let even = alphabet.is_even(x);
        let hit = (0..column_len).rev().find(|&i| {
            let y = rows[i][h];
            if even {
                y <= x
            } else {
                y < x
            }
        });
        let Some(i) = hit else { break };
        std::mem::swap(&mut rows[i][h], &mut x);
    }
    Ok(x)
}

/// `i <- T`: reverse row bumping from the corner ending row `row`.
pub fn row_delete(t: &Tableau, row: usize) -> Result<(Tableau, Letter)> {
    let mut tableau = t.clone();
    let alphabet = t.alphabet().clone();
    let x = row_delete_rows(tableau.rows_mut(), &alphabet, row)?;
    Ok((tableau, x))
}

/// `T -> j`: reverse column bumping from the corner ending column `col`.
pub fn col_delete(t: &Tableau, col: usize) -> Result<(Tableau, Letter)> {
    let mut tableau = t.clone();
    let alphabet = t.alphabet().clone();
    let x = col_delete_rows(tableau.rows_mut(), &alphabet, col)?;
    Ok((tableau, x))
}

/// `T(w)`: row-insert the letters of `w` one by one into the empty tableau.
pub fn tableau_of_word(w: &Word) -> Tableau {
    let alphabet = w.alphabet().clone();
    let mut rows = Vec::new();
    for &x in w.letters() {
        row_insert_rows(&mut rows, &alphabet, x, None);
    }
    Tableau::from_rows_unchecked(alphabet, rows)
}

/// `[T <- w]`.
pub fn row_insert_word(t: &Tableau, w: &Word) -> Result<Tableau> {
    if !same_alphabet(t.alphabet(), w.alphabet()) {
        return Err(Error::AlphabetMismatch);
    }
    let mut out = t.clone();
    let alphabet = t.alphabet().clone();
    for &x in w.letters() {
        row_insert_rows(out.rows_mut(), &alphabet, x, None);
    }
    Ok(out)
}

/// Inverts `[T <- w]` for a row word `w` whose boxes fill the horizontal
/// strip `shape(u) / inner`: deletes the strip cells from right to left and
/// returns `(T, w)`.
pub fn factor_by_row(u: &Tableau, inner: &Partition) -> Result<(Tableau, Word)> {
    let strip = SkewDiagram::new(u.shape(), inner.clone())?;
    if !strip.is_horizontal_strip() {
        return Err(Error::Hypothesis("skew shape is not a horizontal strip"));
    }
    let mut cells: Vec<(usize, usize)> = strip.cells().collect();
    cells.sort_by_key(|&(_, j)| std::cmp::Reverse(j));
    let mut rows = u.rows().to_vec();
    let alphabet = u.alphabet().clone();
    let mut letters = Vec::with_capacity(cells.len());
    for (i, _) in cells {
        letters.push(row_delete_rows(&mut rows, &alphabet, i)?);
    }
    letters.reverse();
    Ok((Tableau::from_rows_unchecked(alphabet.clone(), rows), Word::new(alphabet, letters)?))
}

//! The plactic group ring at desk scale: integer formal sums of tableaux and
//! the super Pieri rule.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::{same_alphabet, AlphabetRef, Letter};
use crate::bumping::tableau_of_word;
use crate::error::{Error, Result};
use crate::shape::{Partition, SkewDiagram};
use crate::tableau::{enumerate_tableaux, Tableau};

/// An element of the plactic group ring: tableaux with non-zero integer
/// coefficients, keyed by their row-major filling.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalSum {
    alphabet: AlphabetRef,
    terms: BTreeMap<Vec<Vec<Letter>>, i64>,
}

impl FormalSum {
    pub fn zero(alphabet: AlphabetRef) -> Self {
        FormalSum { alphabet, terms: BTreeMap::new() }
    }

    /// The empty tableau with coefficient one.
    pub fn unit(alphabet: AlphabetRef) -> Self {
        let mut s = Self::zero(alphabet.clone());
        s.add_term(&Tableau::empty(alphabet), 1).expect("same alphabet");
        s
    }

    pub fn from_tableaux<'a>(alphabet: AlphabetRef, tableaux: impl IntoIterator<Item = &'a Tableau>) -> Result<Self> {
        let mut s = Self::zero(alphabet);
        for t in tableaux {
            s.add_term(t, 1)?;
        }
        Ok(s)
    }

    pub fn alphabet(&self) -> &AlphabetRef {
        &self.alphabet
    }

    pub fn add_term(&mut self, t: &Tableau, coefficient: i64) -> Result<()> {
        if !same_alphabet(&self.alphabet, t.alphabet()) {
            return Err(Error::AlphabetMismatch);
        }
        self.add_rows(t.rows().to_vec(), coefficient);
        Ok(())
    }

    fn add_rows(&mut self, rows: Vec<Vec<Letter>>, coefficient: i64) {
        let c = self.terms.entry(rows).or_insert(0);
        *c += coefficient;
        if *c == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn coefficient(&self, t: &Tableau) -> i64 {
        self.terms.get(t.rows()).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Tableau, i64)> + '_ {
        self.terms.iter().map(|(rows, &c)| (Tableau::from_rows_unchecked(self.alphabet.clone(), rows.clone()), c))
    }

    pub fn sub(&self, other: &FormalSum) -> Result<FormalSum> {
        if !same_alphabet(&self.alphabet, &other.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        let mut out = self.clone();
        for (rows, &c) in &other.terms {
            out.add_rows(rows.clone(), -c);
        }
        Ok(out)
    }

    pub fn add(&self, other: &FormalSum) -> Result<FormalSum> {
        if !same_alphabet(&self.alphabet, &other.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        let mut out = self.clone();
        for (rows, &c) in &other.terms {
            out.add_rows(rows.clone(), c);
        }
        Ok(out)
    }
}

impl fmt::Debug for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_map();
        for (t, c) in self.terms() {
            list.entry(&t, &c);
        }
        list.finish()
    }
}

/// Product of two tableaux in the plactic monoid: `T(w(T) w(T'))`.
pub fn tableau_product(left: &Tableau, right: &Tableau) -> Result<Tableau> {
    Ok(tableau_of_word(&left.word().concat(&right.word())?))
}

/// Sum of all tableaux of shape `shape` over `alphabet`.
pub fn s_lambda(shape: &Partition, alphabet: &AlphabetRef) -> FormalSum {
    FormalSum::from_tableaux(alphabet.clone(), &enumerate_tableaux(shape, alphabet)).expect("same alphabet")
}

/// Sum of all row words of length `p`, as one-row tableaux.
pub fn s_row(p: usize, alphabet: &AlphabetRef) -> FormalSum {
    let shape = if p == 0 { Partition::empty() } else { Partition::new(vec![p]).expect("single row") };
    s_lambda(&shape, alphabet)
}

/// Sum of all column words of length `p`, as one-column tableaux.
pub fn s_col(p: usize, alphabet: &AlphabetRef) -> FormalSum {
    let shape = Partition::new(vec![1; p]).expect("single column");
    s_lambda(&shape, alphabet)
}

/// Bilinear extension of [`tableau_product`].
pub fn ring_product(f: &FormalSum, g: &FormalSum) -> Result<FormalSum> {
    if !same_alphabet(&f.alphabet, &g.alphabet) {
        return Err(Error::AlphabetMismatch);
    }
    let mut out = FormalSum::zero(f.alphabet.clone());
    for (left, c) in f.terms() {
        for (right, d) in g.terms() {
            out.add_rows(tableau_product(&left, &right)?.into_rows(), c * d);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PieriMode {
    /// Multiply by all row words; sum over horizontal strips.
    Row,
    /// Multiply by all column words; sum over vertical strips.
    Column,
}

/// Largest `|lambda| + p` accepted by [`pieri_check`].
pub const PIERI_MAX_CELLS: usize = 9;
/// Largest alphabet accepted by [`pieri_check`].
pub const PIERI_MAX_LETTERS: usize = 6;

/// Per-shape comparison of the two sides of the Pieri identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieriShapeLine {
    pub shape: Partition,
    /// Whether `shape / lambda` is a strip of the required kind.
    pub strip: bool,
    /// Sum of product coefficients on tableaux of this shape.
    pub product: i64,
    /// Sum of coefficients of `S_mu` on the right-hand side.
    pub expected: i64,
    /// Tableaux of this shape whose two coefficients differ.
    pub mismatched: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieriReport {
    pub mode: PieriMode,
    pub lambda: Partition,
    pub p: usize,
    pub holds: bool,
    pub product_terms: usize,
    pub expected_terms: usize,
    pub shapes: Vec<PieriShapeLine>,
}

/// Compares `S_lambda * S_(p)` (row mode) or `S_lambda * S_(1^p)` (column
/// mode) with the sum of `S_mu` over all `mu` obtained from `lambda` by adding
/// a horizontal (resp. vertical) strip of `p` boxes.
pub fn pieri_check(lambda: &Partition, p: usize, alphabet: &AlphabetRef, mode: PieriMode) -> Result<PieriReport> {
    let cells = lambda.size() + p;
    if cells > PIERI_MAX_CELLS {
        return Err(Error::BoundExceeded { what: "Pieri size", size: cells, bound: PIERI_MAX_CELLS });
    }
    if alphabet.len() > PIERI_MAX_LETTERS {
        return Err(Error::BoundExceeded { what: "Pieri alphabet", size: alphabet.len(), bound: PIERI_MAX_LETTERS });
    }
    let (left, right) = rayon::join(
        || {
            let factor = match mode {
                PieriMode::Row => s_row(p, alphabet),
                PieriMode::Column => s_col(p, alphabet),
            };
            ring_product(&s_lambda(lambda, alphabet), &factor)
        },
        || -> Result<FormalSum> {
            let mut sum = FormalSum::zero(alphabet.clone());
            for mu in Partition::all_of(cells) {
                if is_strip(&mu, lambda, mode) {
                    sum = sum.add(&s_lambda(&mu, alphabet))?;
                }
            }
            Ok(sum)
        },
    );
    let (product, expected) = (left?, right?);

    let mut by_shape: BTreeMap<Vec<usize>, PieriShapeLine> = BTreeMap::new();
    fn line<'m>(
        by_shape: &'m mut BTreeMap<Vec<usize>, PieriShapeLine>,
        rows: &[Vec<Letter>],
        lambda: &Partition,
        mode: PieriMode,
    ) -> &'m mut PieriShapeLine {
        let shape = Partition::from_lengths(rows.iter().map(Vec::len)).expect("tableau shape");
        by_shape.entry(shape.parts().to_vec()).or_insert_with(|| PieriShapeLine {
            strip: is_strip(&shape, lambda, mode),
            shape,
            product: 0,
            expected: 0,
            mismatched: 0,
        })
    }
    for (rows, &c) in &product.terms {
        let l = line(&mut by_shape, rows, lambda, mode);
        l.product += c;
        if expected.terms.get(rows) != Some(&c) {
            l.mismatched += 1;
        }
    }
    for (rows, &c) in &expected.terms {
        let l = line(&mut by_shape, rows, lambda, mode);
        l.expected += c;
        if !product.terms.contains_key(rows) {
            l.mismatched += 1;
        }
    }
    // reverse lexicographic, largest first row first
    let shapes: Vec<PieriShapeLine> = by_shape.into_values().rev().collect();
    Ok(PieriReport {
        mode,
        lambda: lambda.clone(),
        p,
        holds: product == expected,
        product_terms: product.len(),
        expected_terms: expected.len(),
        shapes,
    })
}

fn is_strip(mu: &Partition, lambda: &Partition, mode: PieriMode) -> bool {
    SkewDiagram::new(mu.clone(), lambda.clone()).is_ok_and(|s| match mode {
        PieriMode::Row => s.is_horizontal_strip(),
        PieriMode::Column => s.is_vertical_strip(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::SignedAlphabet;
    use crate::bumping::{factor_by_row, row_insert_word};
    use crate::plactic::{is_row_word, knuth_neighbors};
    use crate::tableau::enumerate_tableaux_up_to;

    fn alpha(bits: &[u8]) -> AlphabetRef {
        SignedAlphabet::numbered(bits).into_ref()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn generators() {
        let a = alpha(&[0, 1, 1]);
        assert_eq!(s_lambda(&p(&[1]), &a).len(), 3);
        let even = alpha(&[0, 0]);
        assert_eq!(s_lambda(&p(&[2]), &even).len(), 3);
        assert_eq!(s_lambda(&p(&[1, 1]), &even).len(), 1);
        assert_eq!(s_row(1, &a).len(), 3);
        // row words of length 2 over 1 even < 2 odd: 11, 12
        assert_eq!(s_row(2, &alpha(&[0, 1])).len(), 2);
    }

    #[test]
    fn column_sum_is_transposed_row_sum() {
        for bits in [[0u8, 1, 0], [1, 1, 0]] {
            let a = alpha(&bits);
            let conj = a.conjugate().into_ref();
            for len in 1..=3 {
                let cols: Vec<Vec<Vec<Letter>>> = s_col(len, &a).terms().map(|(t, _)| t.into_rows()).collect();
                let mut rows: Vec<Vec<Vec<Letter>>> =
                    s_row(len, &conj).terms().map(|(t, _)| t.transpose().into_rows()).collect();
                rows.sort();
                assert_eq!(cols, rows);
            }
        }
    }

    #[test]
    fn unit_and_associativity() {
        let a = alpha(&[0, 1, 0]);
        let f = s_lambda(&p(&[2, 1]), &a);
        assert_eq!(ring_product(&f, &FormalSum::unit(a.clone())).unwrap(), f);
        assert_eq!(ring_product(&FormalSum::unit(a.clone()), &f).unwrap(), f);

        let small = enumerate_tableaux_up_to(2, &a);
        for x in small.iter().step_by(3) {
            for y in small.iter().step_by(2) {
                for z in small.iter().step_by(4) {
                    let xy_z = tableau_product(&tableau_product(x, y).unwrap(), z).unwrap();
                    let x_yz = tableau_product(x, &tableau_product(y, z).unwrap()).unwrap();
                    assert_eq!(xy_z, x_yz);
                }
            }
        }
        let other = alpha(&[0]);
        assert!(ring_product(&f, &FormalSum::unit(other)).is_err());
    }

    #[test]
    fn singleton_product_is_word_concatenation() {
        let a = alpha(&[1, 0, 1]);
        let ts = enumerate_tableaux_up_to(2, &a);
        for x in &ts {
            for y in &ts {
                let prod = ring_product(
                    &FormalSum::from_tableaux(a.clone(), [x]).unwrap(),
                    &FormalSum::from_tableaux(a.clone(), [y]).unwrap(),
                )
                .unwrap();
                let expected = tableau_of_word(&x.word().concat(&y.word()).unwrap());
                assert_eq!(prod.coefficient(&expected), 1);
                assert_eq!(prod.len(), 1);
            }
        }
    }

    #[test]
    fn product_ignores_choice_of_representative() {
        let a = alpha(&[0, 1, 1]);
        for x in enumerate_tableaux_up_to(3, &a) {
            for y in enumerate_tableaux_up_to(1, &a) {
                let base = tableau_product(&x, &y).unwrap();
                for w in knuth_neighbors(&x.word()) {
                    let moved = tableau_of_word(&w.concat(&y.word()).unwrap());
                    assert_eq!(moved, base);
                }
            }
        }
    }

    #[test]
    fn pieri_small_cases() {
        let a = alpha(&[0, 1, 0]);
        let r = pieri_check(&Partition::empty(), 2, &a, PieriMode::Row).unwrap();
        assert!(r.holds, "{r:?}");
        let r = pieri_check(&p(&[2, 1]), 2, &a, PieriMode::Row).unwrap();
        assert!(r.holds, "{r:?}");
        assert!(r.shapes.iter().all(|l| l.strip && l.mismatched == 0));
        let r = pieri_check(&p(&[1, 1]), 2, &a, PieriMode::Column).unwrap();
        assert!(r.holds, "{r:?}");
        assert!(pieri_check(&p(&[5, 4]), 1, &a, PieriMode::Row).is_err());
    }

    #[test]
    fn row_factorization_is_unique() {
        let a = alpha(&[1, 0, 1]);
        for lambda in Partition::all_up_to(2) {
            for len in 1..=2 {
                let mut seen: BTreeMap<Vec<Vec<Letter>>, usize> = BTreeMap::new();
                for t in enumerate_tableaux(&lambda, &a) {
                    for (row, _) in s_row(len, &a).terms() {
                        let u = row_insert_word(&t, &row.word()).unwrap();
                        *seen.entry(u.rows().to_vec()).or_insert(0) += 1;
                        let (t2, w2) = factor_by_row(&u, &lambda).unwrap();
                        assert!(is_row_word(&w2));
                        assert_eq!((t2, w2), (t.clone(), row.word()));
                    }
                }
                assert!(seen.values().all(|&c| c == 1));
            }
        }
    }
}

//! The super plactic monoid: signed Knuth relations, plactic classes,
//! normal forms and Greene invariants.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::alphabet::{same_alphabet, Letter, Parity, SignedAlphabet};
use crate::bumping::tableau_of_word;
use crate::error::{Error, Result};
use crate::tableau::Word;

/// Environment variable overriding [`PlacticLimits::max_states`].
pub const MAX_STATES_ENV: &str = "SUPERPLACTIC_MAX_STATES";

/// Size caps for the exponential searches in this module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlacticLimits {
    /// Longest word accepted by [`plactic_class`].
    pub max_word_len: usize,
    /// Largest class [`plactic_class`] will materialise.
    pub max_states: usize,
}

impl Default for PlacticLimits {
    fn default() -> Self {
        PlacticLimits { max_word_len: 9, max_states: 1_000_000 }
    }
}

impl PlacticLimits {
    /// Defaults, with `max_states` taken from `SUPERPLACTIC_MAX_STATES` when set.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(n) = std::env::var(MAX_STATES_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            limits.max_states = n;
        }
        limits
    }
}

/// Z2-degree `|w| = |x_1| + ... + |x_n|`.
pub fn z2_degree(w: &Word) -> Parity {
    w.letters().iter().fold(Parity::Even, |acc, &x| acc + w.alphabet().parity(x))
}

fn row_step(alphabet: &SignedAlphabet, prev: Letter, next: Letter) -> bool {
    prev < next || (prev == next && alphabet.is_even(prev))
}

fn column_step(alphabet: &SignedAlphabet, prev: Letter, next: Letter) -> bool {
    next < prev || (prev == next && alphabet.is_odd(prev))
}

/// Weakly increasing, repeats only at even letters.
pub fn is_row_word(w: &Word) -> bool {
    w.letters().windows(2).all(|p| row_step(w.alphabet(), p[0], p[1]))
}

/// Reading word of a single column: weakly decreasing, repeats only at odd
/// letters.
pub fn is_column_word(w: &Word) -> bool {
    w.letters().windows(2).all(|p| column_step(w.alphabet(), p[0], p[1]))
}

/// Side conditions of (K1) for `x <= y <= z`: `x = y` only if `y` even,
/// `y = z` only if `y` odd.
fn k1_admissible(a: &SignedAlphabet, x: Letter, y: Letter, z: Letter) -> bool {
    x <= y && y <= z && (x != y || a.is_even(y)) && (y != z || a.is_odd(y))
}

/// Side conditions of (K2): `x = y` only if `y` odd, `y = z` only if `y` even.
fn k2_admissible(a: &SignedAlphabet, x: Letter, y: Letter, z: Letter) -> bool {
    x <= y && y <= z && (x != y || a.is_odd(y)) && (y != z || a.is_even(y))
}

/// Applies one relation at the triple starting at `i`, returning the rewritten
/// triple when some relation matches.
fn moves_at(a: &SignedAlphabet, t: [Letter; 3]) -> impl Iterator<Item = [Letter; 3]> {
    let [p, q, r] = t;
    let mut out = Vec::with_capacity(2);
    // (K1) xzy <-> zxy: swap the first two letters
    if k1_admissible(a, p, r, q) || k1_admissible(a, q, r, p) {
        out.push([q, p, r]);
    }
    // (K2) yxz <-> yzx: swap the last two letters
    if k2_admissible(a, q, p, r) || k2_admissible(a, r, p, q) {
        out.push([p, r, q]);
    }
    out.into_iter()
}

/// Every word one (K1) or (K2) step away from `w`, in either direction.
/// Sorted and deduplicated.
pub fn knuth_neighbors(w: &Word) -> Vec<Word> {
    let a = w.alphabet();
    let letters = w.letters();
    let mut out: Vec<Vec<Letter>> = Vec::new();
    for i in 0..letters.len().saturating_sub(2) {
        for m in moves_at(a, [letters[i], letters[i + 1], letters[i + 2]]) {
            let mut v = letters.to_vec();
            v[i..i + 3].copy_from_slice(&m);
            if v != letters {
                out.push(v);
            }
        }
    }
    out.sort();
    out.dedup();
    out.into_iter().map(|v| Word::from_parts(a.clone(), v)).collect()
}

/// Closure of `{w}` under Knuth moves, sorted.
pub fn plactic_class(w: &Word, limits: &PlacticLimits) -> Result<Vec<Word>> {
    if w.len() > limits.max_word_len {
        return Err(Error::BoundExceeded { what: "word", size: w.len(), bound: limits.max_word_len });
    }
    let a = w.alphabet().clone();
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    let mut frontier = VecDeque::new();
    seen.insert(w.letters().to_vec());
    frontier.push_back(w.clone());
    while let Some(u) = frontier.pop_front() {
        for v in knuth_neighbors(&u) {
            if seen.insert(v.letters().to_vec()) {
                if seen.len() > limits.max_states {
                    return Err(Error::BoundExceeded {
                        what: "plactic class",
                        size: seen.len(),
                        bound: limits.max_states,
                    });
                }
                frontier.push_back(v);
            }
        }
    }
    let mut members: Vec<Vec<Letter>> = seen.into_iter().collect();
    members.sort();
    Ok(members.into_iter().map(|v| Word::from_parts(a.clone(), v)).collect())
}

/// `w ~ w'`: both words insert to the same tableau.
pub fn equivalent(w: &Word, other: &Word) -> Result<bool> {
    if !same_alphabet(w.alphabet(), other.alphabet()) {
        return Err(Error::AlphabetMismatch);
    }
    Ok(w.len() == other.len() && tableau_of_word(w) == tableau_of_word(other))
}

/// Canonical representative `w(T(w))` of the class of `w`.
pub fn normal_form(w: &Word) -> Word {
    tableau_of_word(w).word()
}

/// A plactic class named by any representative together with its canonical
/// reading word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacticClass {
    pub representative: Word,
    pub canonical: Word,
}

impl PlacticClass {
    pub fn of(w: &Word) -> Self {
        PlacticClass { representative: w.clone(), canonical: normal_form(w) }
    }

    pub fn contains(&self, w: &Word) -> bool {
        same_alphabet(w.alphabet(), self.canonical.alphabet()) && normal_form(w) == self.canonical
    }
}

/// Which kind of subword the Greene invariant counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GreeneMode {
    Row,
    Column,
}

/// Default length cap for the brute-force Greene search.
pub fn default_greene_bound(k: usize) -> usize {
    if k <= 3 {
        10
    } else {
        8
    }
}

/// Largest total length of `k` pairwise disjoint row subwords of `w`.
pub fn greene_row(w: &Word, k: usize) -> Result<usize> {
    greene_bounded(w, k, GreeneMode::Row, default_greene_bound(k))
}

/// Largest total length of `k` pairwise disjoint column subwords of `w`.
pub fn greene_col(w: &Word, k: usize) -> Result<usize> {
    greene_bounded(w, k, GreeneMode::Column, default_greene_bound(k))
}

pub fn greene_bounded(w: &Word, k: usize, mode: GreeneMode, max_len: usize) -> Result<usize> {
    if w.len() > max_len {
        return Err(Error::BoundExceeded { what: "word", size: w.len(), bound: max_len });
    }
    Ok(greene_search(w, k, mode))
}

/// Exhaustive search over families of `k` disjoint subwords.
///
/// The word is scanned left to right; each letter is either skipped or
/// appended to one of the `k` subwords under construction. Whether a subword
/// can take a letter depends only on its last letter, so families are
/// identified by the multiset of last letters and each such state is
/// explored once.
pub fn greene_search(w: &Word, k: usize, mode: GreeneMode) -> usize {
    if k == 0 || w.is_empty() {
        return 0;
    }
    let k = k.min(w.len());
    let a = w.alphabet();
    let step = match mode {
        GreeneMode::Row => row_step,
        GreeneMode::Column => column_step,
    };
    // slot value 0 = subword still empty, otherwise letter index + 1
    let mut memo: HashMap<(usize, Vec<u32>), usize> = HashMap::new();

    fn go(
        pos: usize,
        lasts: &mut Vec<u32>,
        letters: &[Letter],
        a: &SignedAlphabet,
        step: fn(&SignedAlphabet, Letter, Letter) -> bool,
        memo: &mut HashMap<(usize, Vec<u32>), usize>,
    ) -> usize {
        if pos == letters.len() {
            return 0;
        }
        if let Some(&v) = memo.get(&(pos, lasts.clone())) {
            return v;
        }
        let x = letters[pos];
        let mut best = go(pos + 1, lasts, letters, a, step, memo);
        let mut tried: Vec<u32> = Vec::new();
        for slot in 0..lasts.len() {
            let last = lasts[slot];
            if tried.contains(&last) {
                continue;
            }
            tried.push(last);
            if last != 0 && !step(a, Letter::new(last as usize - 1), x) {
                continue;
            }
            let saved = lasts.clone();
            lasts[slot] = x.index() as u32 + 1;
            lasts.sort_unstable();
            best = best.max(1 + go(pos + 1, lasts, letters, a, step, memo));
            *lasts = saved;
        }
        memo.insert((pos, lasts.clone()), best);
        best
    }

    go(0, &mut vec![0; k], w.letters(), a, step, &mut memo)
}

/// `lambda_1 + ... + lambda_k` (row mode) or the same for the conjugate
/// shape (column mode), with `lambda` the shape of `T(w)`.
pub fn greene_via_shape(w: &Word, k: usize, mode: GreeneMode) -> usize {
    let shape = tableau_of_word(w).shape();
    match mode {
        GreeneMode::Row => shape.partial_sum(k),
        GreeneMode::Column => shape.conjugate().partial_sum(k),
    }
}

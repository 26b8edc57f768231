//! JSON interchange forms for alphabets, tableaux and two-rowed arrays.
//!
//! Letters travel as their symbols; an embedded alphabet is optional so that
//! files can share one alphabet passed separately.

use serde::{Deserialize, Serialize};

use crate::alphabet::{AlphabetRef, SignedAlphabet};
use crate::error::{Error, Result};
use crate::rsk::TwoRowedArray;
use crate::shape::Partition;
use crate::tableau::Tableau;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphabetJson {
    pub letters: Vec<String>,
    pub parity: Vec<i64>,
}

impl AlphabetJson {
    pub fn to_alphabet(&self) -> Result<SignedAlphabet> {
        SignedAlphabet::new(self.letters.iter().cloned(), &self.parity)
    }
}

impl From<&SignedAlphabet> for AlphabetJson {
    fn from(a: &SignedAlphabet) -> Self {
        AlphabetJson {
            letters: a.symbols().to_vec(),
            parity: a.parities().iter().map(|p| i64::from(p.bit())).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: Partition,
    pub rows: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<AlphabetJson>,
}

impl TableauJson {
    pub fn new(t: &Tableau, embed_alphabet: bool) -> Self {
        TableauJson {
            shape: t.shape(),
            rows: t.to_symbols(),
            alphabet: embed_alphabet.then(|| AlphabetJson::from(t.alphabet().as_ref())),
        }
    }

    /// The embedded alphabet, if any.
    pub fn alphabet(&self) -> Result<Option<AlphabetRef>> {
        self.alphabet.as_ref().map(|a| a.to_alphabet().map(SignedAlphabet::into_ref)).transpose()
    }

    pub fn to_tableau(&self, alphabet: &AlphabetRef) -> Result<Tableau> {
        let t = Tableau::parse(alphabet.clone(), &self.rows)?;
        if t.shape() != self.shape {
            return Err(Error::ShapeMismatch { declared: self.shape.clone().into(), actual: t.shape().into() });
        }
        Ok(t)
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.rows.iter().flatten().map(String::as_str)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrayJson {
    pub top: Vec<String>,
    pub bottom: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top_alphabet: Option<AlphabetJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom_alphabet: Option<AlphabetJson>,
}

impl ArrayJson {
    pub fn new(s: &TwoRowedArray, embed_alphabets: bool) -> Self {
        let own = |s: Vec<&str>| s.into_iter().map(str::to_owned).collect();
        ArrayJson {
            top: own(s.top_row()),
            bottom: own(s.bottom_row()),
            top_alphabet: embed_alphabets.then(|| AlphabetJson::from(s.top_alphabet().as_ref())),
            bottom_alphabet: embed_alphabets.then(|| AlphabetJson::from(s.bottom_alphabet().as_ref())),
        }
    }

    pub fn alphabets(&self) -> Result<(Option<AlphabetRef>, Option<AlphabetRef>)> {
        let load =
            |a: &Option<AlphabetJson>| a.as_ref().map(|a| a.to_alphabet().map(SignedAlphabet::into_ref)).transpose();
        Ok((load(&self.top_alphabet)?, load(&self.bottom_alphabet)?))
    }

    pub fn to_array(&self, top: &AlphabetRef, bottom: &AlphabetRef) -> Result<TwoRowedArray> {
        TwoRowedArray::parse(top.clone(), bottom.clone(), &self.top, &self.bottom)
    }
}

/// An all-even alphabet on the distinct symbols given, ordered numerically
/// when every symbol is an integer and lexicographically otherwise.
pub fn infer_alphabet<'a>(symbols: impl IntoIterator<Item = &'a str>) -> SignedAlphabet {
    let mut letters: Vec<&str> = symbols.into_iter().collect();
    let numeric = letters.iter().all(|s| s.parse::<i64>().is_ok());
    if numeric {
        letters.sort_by_key(|s| s.parse::<i64>().expect("checked above"));
    } else {
        letters.sort_unstable();
    }
    letters.dedup();
    let parity = vec![0; letters.len()];
    SignedAlphabet::new(letters, &parity).expect("distinct symbols")
}

/// Parses a JSON document, reporting failures as [`Error::Parse`].
pub fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

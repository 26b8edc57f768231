//! Super semistandard Young tableaux over signed alphabets, signed Schensted
//! bumping, the super plactic monoid and the super RSK correspondence.

pub mod alphabet;
pub mod bumping;
pub mod error;
pub mod io;
pub mod plactic;
pub mod ring;
pub mod rsk;
pub mod shape;
pub mod tableau;

pub use alphabet::{AlphabetRef, Letter, Parity, SignedAlphabet};
pub use bumping::{col_delete, col_insert, row_delete, row_insert, row_insert_word, tableau_of_word};
pub use error::{Error, Result};
pub use ring::{pieri_check, ring_product, FormalSum, PieriMode, PieriReport};
pub use shape::{Partition, SkewDiagram};
pub use tableau::{enumerate_standard, enumerate_tableaux, SkewTableau, Tableau, Word};

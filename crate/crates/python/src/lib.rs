//! Python bindings: alphabets, tableaux, signed bumping, plactic classes,
//! Greene invariants, super RSK and the Pieri check.
//!
//! Words and array rows cross the boundary as lists of letter symbols.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use superplactic::io::{AlphabetJson, ArrayJson, TableauJson};
use superplactic::plactic::{self, GreeneMode, PlacticLimits};
use superplactic::rsk::{self as super_rsk, TwoRowedArray};
use superplactic::{AlphabetRef, Partition, PieriMode, SignedAlphabet, Tableau, Word};

create_exception!(pysuperplactic, SuperplacticError, PyValueError, "Domain error raised by the library.");

fn err(e: superplactic::Error) -> PyErr {
    SuperplacticError::new_err(format!("{}: {e}", e.name()))
}

/// A totally ordered alphabet whose letters carry a parity (0 even, 1 odd).
#[pyclass(name = "Alphabet", module = "pysuperplactic", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyAlphabet {
    inner: AlphabetRef,
}

#[pymethods]
impl PyAlphabet {
    #[new]
    fn new(letters: Vec<String>, parity: Vec<i64>) -> PyResult<Self> {
        let inner = SignedAlphabet::new(letters, &parity).map_err(err)?.into_ref();
        Ok(PyAlphabet { inner })
    }

    /// Letters `"1"` .. `"n"` with the given parities.
    #[staticmethod]
    fn numbered(parity: Vec<u8>) -> PyResult<Self> {
        if let Some(&bad) = parity.iter().find(|&&b| b > 1) {
            return Err(err(superplactic::Error::InvalidParity(bad.into())));
        }
        Ok(PyAlphabet { inner: SignedAlphabet::numbered(&parity).into_ref() })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let j: AlphabetJson = superplactic::io::from_json(text).map_err(err)?;
        Ok(PyAlphabet { inner: j.to_alphabet().map_err(err)?.into_ref() })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&AlphabetJson::from(self.inner.as_ref())).expect("alphabet serialises")
    }

    #[getter]
    fn letters(&self) -> Vec<String> {
        self.inner.symbols().to_vec()
    }

    #[getter]
    fn parity(&self) -> Vec<u8> {
        self.inner.parities().iter().map(|p| p.bit()).collect()
    }

    fn conjugate(&self) -> Self {
        PyAlphabet { inner: self.inner.conjugate().into_ref() }
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Alphabet({:?}, {:?})", self.letters(), self.parity())
    }
}

impl PyAlphabet {
    fn word(&self, symbols: &[String]) -> PyResult<Word> {
        let letters = self.inner.resolve(symbols).map_err(err)?;
        Word::new(self.inner.clone(), letters).map_err(err)
    }
}

fn symbols(w: &Word) -> Vec<String> {
    w.symbols().into_iter().map(str::to_owned).collect()
}

/// A super semistandard Young tableau, validated on construction.
#[pyclass(name = "Tableau", module = "pysuperplactic", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyTableau {
    inner: Tableau,
}

#[pymethods]
impl PyTableau {
    #[new]
    fn new(alphabet: &PyAlphabet, rows: Vec<Vec<String>>) -> PyResult<Self> {
        Ok(PyTableau { inner: Tableau::parse(alphabet.inner.clone(), &rows).map_err(err)? })
    }

    /// Parses `{"shape": [...], "rows": [[...]], "alphabet"?: {...}}`.
    #[staticmethod]
    #[pyo3(signature = (text, alphabet = None))]
    fn from_json(text: &str, alphabet: Option<&PyAlphabet>) -> PyResult<Self> {
        let j: TableauJson = superplactic::io::from_json(text).map_err(err)?;
        let a = match alphabet {
            Some(a) => a.inner.clone(),
            None => {
                j.alphabet().map_err(err)?.ok_or_else(|| SuperplacticError::new_err("no alphabet given or embedded"))?
            }
        };
        Ok(PyTableau { inner: j.to_tableau(&a).map_err(err)? })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&TableauJson::new(&self.inner, true)).expect("tableau serialises")
    }

    #[getter]
    fn alphabet(&self) -> PyAlphabet {
        PyAlphabet { inner: self.inner.alphabet().clone() }
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<String>> {
        self.inner.to_symbols()
    }

    #[getter]
    fn shape(&self) -> Vec<usize> {
        self.inner.shape().into()
    }

    /// Reading word, bottom row first.
    fn word(&self) -> Vec<String> {
        symbols(&self.inner.word())
    }

    fn render(&self) -> String {
        self.inner.render()
    }

    /// Transpose over the conjugate alphabet.
    fn transpose(&self) -> Self {
        PyTableau { inner: self.inner.transpose() }
    }

    /// `T <- x`; returns the new tableau and the (row, col) of the new box.
    fn row_insert(&self, x: &str) -> PyResult<(Self, usize, usize)> {
        let x = self.inner.alphabet().letter(x).map_err(err)?;
        let r = superplactic::row_insert(&self.inner, x).map_err(err)?;
        Ok((PyTableau { inner: r.tableau }, r.row, r.col))
    }

    /// `x -> T`; returns the new tableau and the (row, col) of the new box.
    fn col_insert(&self, x: &str) -> PyResult<(Self, usize, usize)> {
        let x = self.inner.alphabet().letter(x).map_err(err)?;
        let c = superplactic::col_insert(x, &self.inner).map_err(err)?;
        Ok((PyTableau { inner: c.tableau }, c.row, c.col))
    }

    fn row_delete(&self, row: usize) -> PyResult<(Self, String)> {
        let (t, x) = superplactic::row_delete(&self.inner, row).map_err(err)?;
        let symbol = self.inner.alphabet().symbol(x).to_owned();
        Ok((PyTableau { inner: t }, symbol))
    }

    fn col_delete(&self, col: usize) -> PyResult<(Self, String)> {
        let (t, x) = superplactic::col_delete(&self.inner, col).map_err(err)?;
        let symbol = self.inner.alphabet().symbol(x).to_owned();
        Ok((PyTableau { inner: t }, symbol))
    }

    fn __len__(&self) -> usize {
        self.inner.size()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Tableau({:?})", self.rows())
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }
}

#[pyfunction]
fn tableau_of_word(alphabet: &PyAlphabet, word: Vec<String>) -> PyResult<PyTableau> {
    Ok(PyTableau { inner: superplactic::tableau_of_word(&alphabet.word(&word)?) })
}

#[pyfunction]
fn normal_form(alphabet: &PyAlphabet, word: Vec<String>) -> PyResult<Vec<String>> {
    Ok(symbols(&plactic::normal_form(&alphabet.word(&word)?)))
}

/// Every word Knuth-equivalent to `word`, sorted.
#[pyfunction]
fn plactic_class(alphabet: &PyAlphabet, word: Vec<String>) -> PyResult<Vec<Vec<String>>> {
    let class = plactic::plactic_class(&alphabet.word(&word)?, &PlacticLimits::from_env()).map_err(err)?;
    Ok(class.iter().map(symbols).collect())
}

#[pyfunction]
fn equivalent(alphabet: &PyAlphabet, left: Vec<String>, right: Vec<String>) -> PyResult<bool> {
    plactic::equivalent(&alphabet.word(&left)?, &alphabet.word(&right)?).map_err(err)
}

/// Greene invariant by exhaustive search (`mode` "row" or "col") or read off
/// the insertion shape (`mode` "shape-row" / "shape-col").
#[pyfunction]
#[pyo3(signature = (alphabet, word, k, mode = "row"))]
fn greene(alphabet: &PyAlphabet, word: Vec<String>, k: usize, mode: &str) -> PyResult<usize> {
    let w = alphabet.word(&word)?;
    match mode {
        "row" => plactic::greene_row(&w, k).map_err(err),
        "col" => plactic::greene_col(&w, k).map_err(err),
        "shape-row" => Ok(plactic::greene_via_shape(&w, k, GreeneMode::Row)),
        "shape-col" => Ok(plactic::greene_via_shape(&w, k, GreeneMode::Column)),
        other => Err(PyValueError::new_err(format!("unknown mode `{other}`"))),
    }
}

fn array(top: &PyAlphabet, bottom: &PyAlphabet, top_row: &[String], bottom_row: &[String]) -> PyResult<TwoRowedArray> {
    TwoRowedArray::parse(top.inner.clone(), bottom.inner.clone(), top_row, bottom_row).map_err(err)
}

/// Super RSK of the array with the given rows; returns `(T, U)`.
#[pyfunction]
fn rsk(
    top: &PyAlphabet,
    bottom: &PyAlphabet,
    top_row: Vec<String>,
    bottom_row: Vec<String>,
) -> PyResult<(PyTableau, PyTableau)> {
    let (t, u) = super_rsk::rsk_forward(&array(top, bottom, &top_row, &bottom_row)?);
    Ok((PyTableau { inner: t }, PyTableau { inner: u }))
}

/// Inverse super RSK; returns the two rows of the array.
#[pyfunction]
fn rsk_inverse(t: &PyTableau, u: &PyTableau) -> PyResult<(Vec<String>, Vec<String>)> {
    let s = super_rsk::rsk_inverse(&t.inner, &u.inner).map_err(err)?;
    let j = ArrayJson::new(&s, false);
    Ok((j.top, j.bottom))
}

#[pyfunction]
fn has_symmetry(
    top: &PyAlphabet,
    bottom: &PyAlphabet,
    top_row: Vec<String>,
    bottom_row: Vec<String>,
) -> PyResult<bool> {
    Ok(super_rsk::has_symmetry(&array(top, bottom, &top_row, &bottom_row)?))
}

/// Number of standard Young tableaux of the given shape.
#[pyfunction]
fn enumerate_standard(shape: Vec<usize>) -> PyResult<u64> {
    Ok(superplactic::enumerate_standard(&Partition::new(shape).map_err(err)?))
}

/// All tableaux of the given shape over `alphabet`.
#[pyfunction]
fn enumerate_tableaux(shape: Vec<usize>, alphabet: &PyAlphabet) -> PyResult<Vec<PyTableau>> {
    let shape = Partition::new(shape).map_err(err)?;
    Ok(superplactic::enumerate_tableaux(&shape, &alphabet.inner).into_iter().map(|inner| PyTableau { inner }).collect())
}

/// Runs the Pieri comparison; returns the verdict and the JSON report.
#[pyfunction]
#[pyo3(signature = (shape, p, alphabet, mode = "row"))]
fn pieri_check(shape: Vec<usize>, p: usize, alphabet: &PyAlphabet, mode: &str) -> PyResult<(bool, String)> {
    let mode = match mode {
        "row" => PieriMode::Row,
        "col" => PieriMode::Column,
        other => return Err(PyValueError::new_err(format!("unknown mode `{other}`"))),
    };
    let shape = Partition::new(shape).map_err(err)?;
    let report = superplactic::pieri_check(&shape, p, &alphabet.inner, mode).map_err(err)?;
    Ok((report.holds, serde_json::to_string(&report).expect("report serialises")))
}

#[pymodule]
fn pysuperplactic(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SuperplacticError", m.py().get_type::<SuperplacticError>())?;
    m.add_class::<PyAlphabet>()?;
    m.add_class::<PyTableau>()?;
    m.add_function(wrap_pyfunction!(tableau_of_word, m)?)?;
    m.add_function(wrap_pyfunction!(normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(plactic_class, m)?)?;
    m.add_function(wrap_pyfunction!(equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(greene, m)?)?;
    m.add_function(wrap_pyfunction!(rsk, m)?)?;
    m.add_function(wrap_pyfunction!(rsk_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(has_symmetry, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_standard, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(pieri_check, m)?)?;
    Ok(())
}

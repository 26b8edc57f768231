use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use superplactic::io::{from_json, infer_alphabet, AlphabetJson, ArrayJson, TableauJson};
use superplactic::plactic::{
    greene_col, greene_row, greene_via_shape, normal_form, plactic_class, GreeneMode, PlacticLimits,
};
use superplactic::rsk::{
    array_involution, has_symmetry, rsk_forward, rsk_inverse, susy_hypothesis, symmetry_probe, TwoRowedArray,
};
use superplactic::{
    col_delete, col_insert, pieri_check, row_delete, row_insert, tableau_of_word, AlphabetRef, Partition, PieriMode,
    Tableau, Word,
};

use crate::{ArrayAlphabets, Cli, Command, GreeneArg, Mode};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] superplactic::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.name(),
            CliError::Io { .. } => "IoError",
            CliError::Usage(_) => "UsageError",
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// `-` reads standard input.
fn read(path: &Path) -> Result<String> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

fn load_alphabet(path: &Path) -> Result<AlphabetRef> {
    let a: AlphabetJson = from_json(&read(path)?)?;
    Ok(a.to_alphabet()?.into_ref())
}

fn load_optional(path: Option<&PathBuf>) -> Result<Option<AlphabetRef>> {
    path.map(|p| load_alphabet(p)).transpose()
}

fn symbols(csv: &str) -> impl Iterator<Item = &str> {
    csv.split(',').map(str::trim).filter(|s| !s.is_empty())
}

/// Explicit flag, then the alphabet embedded in the input, then an all-even
/// alphabet on the symbols that occur.
fn choose<'a>(
    flag: Option<AlphabetRef>,
    embedded: Option<AlphabetRef>,
    seen: impl IntoIterator<Item = &'a str>,
) -> AlphabetRef {
    flag.or(embedded).unwrap_or_else(|| infer_alphabet(seen).into_ref())
}

struct Loaded<T> {
    json: T,
    embedded: Option<AlphabetRef>,
}

fn load_tableau_json(path: &Path) -> Result<Loaded<TableauJson>> {
    let json: TableauJson = from_json(&read(path)?)?;
    let embedded = json.alphabet()?;
    Ok(Loaded { json, embedded })
}

fn load_tableau(path: &Path, flag: Option<AlphabetRef>) -> Result<Tableau> {
    let t = load_tableau_json(path)?;
    let a = choose(flag, t.embedded, t.json.symbols());
    Ok(t.json.to_tableau(&a)?)
}

fn load_array(path: &Path, global: &Option<AlphabetRef>, flags: &ArrayAlphabets) -> Result<TwoRowedArray> {
    let json: ArrayJson = from_json(&read(path)?)?;
    let (top_emb, bottom_emb) = json.alphabets()?;
    let top =
        choose(load_optional(flags.top.as_ref())?.or(global.clone()), top_emb, json.top.iter().map(String::as_str));
    let bottom = choose(
        load_optional(flags.bottom.as_ref())?.or(global.clone()),
        bottom_emb,
        json.bottom.iter().map(String::as_str),
    );
    Ok(json.to_array(&top, &bottom)?)
}

fn word(text: &str, flag: &Option<AlphabetRef>) -> Result<Word> {
    let a = choose(flag.clone(), None, symbols(text));
    Ok(Word::parse(a, text)?)
}

fn tableau_json(t: &Tableau) -> Value {
    serde_json::to_value(TableauJson::new(t, true)).expect("tableau serialises")
}

fn word_json(w: &Word) -> Value {
    json!(w.symbols())
}

fn line(s: impl AsRef<str>) -> String {
    let mut s = s.as_ref().to_owned();
    s.push('\n');
    s
}

/// Either text or a single JSON document, newline-terminated.
fn emit(as_json: bool, text: String, value: impl FnOnce() -> Value) -> String {
    if as_json {
        line(value().to_string())
    } else {
        text
    }
}

pub fn run(cli: &Cli) -> Result<String> {
    let flag = load_optional(cli.alphabet.as_ref())?;
    let js = cli.json;
    match &cli.command {
        Command::Insert { mode, tableau, letters } => {
            let (mut t, alpha) = match tableau {
                Some(path) => {
                    let loaded = load_tableau_json(path)?;
                    let seen: Vec<&str> = loaded.json.symbols().chain(symbols(letters)).collect();
                    let a = choose(flag, loaded.embedded, seen);
                    (loaded.json.to_tableau(&a)?, a)
                }
                None => {
                    let a = choose(flag, None, symbols(letters));
                    (Tableau::empty(a.clone()), a)
                }
            };
            let mut trace = Vec::new();
            let mut text = String::new();
            for x in alpha.parse_letters(letters)? {
                let (next, row, col, bumped) = match mode {
                    Mode::Row => {
                        let r = row_insert(&t, x)?;
                        (r.tableau, r.row, r.col, r.bumped)
                    }
                    Mode::Col => {
                        let c = col_insert(x, &t)?;
                        (c.tableau, c.row, c.col, c.bumped)
                    }
                };
                let bumped: Vec<&str> = bumped.iter().map(|&b| alpha.symbol(b)).collect();
                text.push_str(&line(format!("{} -> ({row},{col}) via {}", alpha.symbol(x), bumped.join(" "))));
                trace.push(json!({ "letter": alpha.symbol(x), "row": row, "col": col, "bumped": bumped }));
                t = next;
            }
            text.push_str(&line(t.render()));
            Ok(emit(js, text, || json!({ "tableau": tableau_json(&t), "trace": trace })))
        }
        Command::Delete { mode, tableau, index } => {
            let t = load_tableau(tableau, flag)?;
            let (u, x) = match mode {
                Mode::Row => row_delete(&t, *index)?,
                Mode::Col => col_delete(&t, *index)?,
            };
            let letter = t.alphabet().symbol(x).to_owned();
            let text = line(format!("letter: {letter}")) + &line(u.render());
            Ok(emit(js, text, || json!({ "tableau": tableau_json(&u), "letter": letter })))
        }
        Command::TableauOfWord { word: w } => {
            let t = tableau_of_word(&word(w, &flag)?);
            Ok(emit(js, line(t.render()), || tableau_json(&t)))
        }
        Command::WordOfTableau { tableau } => {
            let w = load_tableau(tableau, flag)?.word();
            Ok(emit(js, line(w.to_csv()), || json!({ "word": word_json(&w) })))
        }
        Command::NormalForm { word: w } => {
            let nf = normal_form(&word(w, &flag)?);
            Ok(emit(js, line(nf.to_csv()), || json!({ "word": word_json(&nf) })))
        }
        Command::Class { word: w, limit } => {
            let members = plactic_class(&word(w, &flag)?, &PlacticLimits::from_env())?;
            let shown = &members[..members.len().min(*limit)];
            let mut text = line(format!("size: {}", members.len()));
            for m in shown {
                text.push_str(&line(m.to_csv()));
            }
            if shown.len() < members.len() {
                text.push_str(&line(format!("... {} more", members.len() - shown.len())));
            }
            Ok(emit(js, text, || {
                json!({
                    "size": members.len(),
                    "members": shown.iter().map(word_json).collect::<Vec<_>>(),
                    "truncated": shown.len() < members.len(),
                })
            }))
        }
        Command::Greene { word: w, k, mode } => {
            let w = word(w, &flag)?;
            match mode {
                GreeneArg::Row | GreeneArg::Col => {
                    let (name, value) = match mode {
                        GreeneArg::Row => ("row", greene_row(&w, *k)?),
                        _ => ("col", greene_col(&w, *k)?),
                    };
                    Ok(emit(js, line(value.to_string()), || json!({ "k": k, "mode": name, "value": value })))
                }
                GreeneArg::Shape => {
                    let row = greene_via_shape(&w, *k, GreeneMode::Row);
                    let col = greene_via_shape(&w, *k, GreeneMode::Column);
                    let text = line(format!("row: {row}")) + &line(format!("col: {col}"));
                    Ok(emit(js, text, || json!({ "k": k, "mode": "shape", "row": row, "col": col })))
                }
            }
        }
        Command::Rsk { array, alphabets } => {
            let s = load_array(array, &flag, alphabets)?;
            let (t, u) = rsk_forward(&s);
            Ok(emit(js, pair_text(&t, &u), || json!({ "t": tableau_json(&t), "u": tableau_json(&u) })))
        }
        Command::RskInverse { t, u, alphabets } => {
            let t = load_tableau(t, load_optional(alphabets.top.as_ref())?.or(flag.clone()))?;
            let u = load_tableau(u, load_optional(alphabets.bottom.as_ref())?.or(flag))?;
            let s = rsk_inverse(&t, &u)?;
            Ok(emit(js, line(s.to_string()), || array_json(&s)))
        }
        Command::Symmetry { array, alphabets } => {
            let s = load_array(array, &flag, alphabets)?;
            let (t, u) = rsk_forward(&s);
            let symmetric = has_symmetry(&s);
            let hypothesis = susy_hypothesis(&s).err().map(|e| e.to_string());
            let mut text = line(format!("symmetric: {}", if symmetric { "yes" } else { "no" }));
            text.push_str(&line(format!("hypothesis: {}", hypothesis.as_deref().unwrap_or("satisfied"))));
            text.push_str(&pair_text(&t, &u));
            Ok(emit(js, text, || {
                json!({
                    "symmetric": symmetric,
                    "hypothesis": hypothesis.is_none(),
                    "hypothesis_failure": hypothesis,
                    "t": tableau_json(&t),
                    "u": tableau_json(&u),
                    "swapped": array_json(&array_involution(&s)),
                })
            }))
        }
        Command::Probe { top, bottom, max_cols, out } => {
            let report = symmetry_probe(&load_alphabet(top)?, &load_alphabet(bottom)?, *max_cols)?;
            let lines = report.to_json_lines();
            if let Some(path) = out {
                fs::write(path, &lines).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            }
            if js {
                return Ok(lines);
            }
            let mut text = line(format!("arrays: {} (max_cols {})", report.arrays, report.max_cols));
            for c in &report.cells {
                text.push_str(&line(format!(
                    "hypothesis={:<5} symmetric={:<5} count={}",
                    c.hypothesis, c.symmetric, c.count
                )));
            }
            Ok(text)
        }
        Command::Pieri { shape, p, mode } => {
            let Some(alpha) = flag else {
                return Err(CliError::Usage("pieri requires --alphabet".into()));
            };
            let parts = shape
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|e| superplactic::Error::Parse(format!("shape part `{s}`: {e}"))))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            let lambda = Partition::new(parts)?;
            let mode = match mode {
                Mode::Row => PieriMode::Row,
                Mode::Col => PieriMode::Column,
            };
            let report = pieri_check(&lambda, *p, &alpha, mode)?;
            let mut text = line(format!("verdict: {}", if report.holds { "holds" } else { "fails" }));
            for l in &report.shapes {
                text.push_str(&line(format!(
                    "{} strip={} product={} expected={} mismatched={}",
                    l.shape, l.strip, l.product, l.expected, l.mismatched
                )));
            }
            Ok(emit(js, text, || serde_json::to_value(&report).expect("report serialises")))
        }
        Command::Validate { tableau, array, word: w, alphabets } => {
            if let Some(path) = tableau {
                let t = load_tableau(path, flag)?;
                let shape = t.shape();
                let text = line(format!("valid tableau of shape {shape}"));
                Ok(emit(js, text, || json!({ "valid": true, "kind": "tableau", "shape": shape })))
            } else if let Some(path) = array {
                let s = load_array(path, &flag, alphabets)?;
                let text = line(format!("valid array with {} columns", s.len()));
                Ok(emit(js, text, || json!({ "valid": true, "kind": "array", "columns": s.len() })))
            } else {
                let w = word(w.as_deref().unwrap_or_default(), &flag)?;
                let text = line(format!("valid word of length {}", w.len()));
                Ok(emit(js, text, || json!({ "valid": true, "kind": "word", "length": w.len() })))
            }
        }
    }
}

fn pair_text(t: &Tableau, u: &Tableau) -> String {
    format!("T:\n{}\nU:\n{}\n", t.render(), u.render())
}

fn array_json(s: &TwoRowedArray) -> Value {
    serde_json::to_value(ArrayJson::new(s, true)).expect("array serialises")
}

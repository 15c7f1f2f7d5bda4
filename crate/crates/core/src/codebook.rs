//! Codebooks: finite sets of equal-length words over one alphabet, and their
//! text, FASTA and CSV representations.
//!
//! The native text format is
//!
//! ```text
//! # n=4 M=3 alphabet=DNA
//! AACC
//! AGGT
//! CCTT
//! ```
//!
//! Ring words are written as whitespace-separated canonical elements, e.g.
//! `1+u 0 3u`. Additional `#` lines are treated as comments.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::dna::{DnaString, Nucleotide};
use crate::ring::RingElement;
use crate::{Error, Result};

/// Symbol alphabet of a codebook. Words are stored as symbol indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Alphabet {
    /// `A, C, G, T` as `0..4`.
    Dna,
    /// `0, 1`.
    Binary,
    /// The 16 elements of `Z4 + uZ4`, index `4a + b`.
    RingR,
    /// `Z5` as `0..5`.
    Quinary,
}

impl Alphabet {
    pub fn tag(self) -> &'static str {
        match self {
            Alphabet::Dna => "DNA",
            Alphabet::Binary => "binary",
            Alphabet::RingR => "ringR",
            Alphabet::Quinary => "quinary",
        }
    }

    /// Number of symbols.
    pub fn size(self) -> u8 {
        match self {
            Alphabet::Dna => 4,
            Alphabet::Binary => 2,
            Alphabet::RingR => 16,
            Alphabet::Quinary => 5,
        }
    }

    /// Bits needed to store one symbol.
    pub fn bits(self) -> u32 {
        match self {
            Alphabet::Binary => 1,
            Alphabet::Dna => 2,
            Alphabet::Quinary => 3,
            Alphabet::RingR => 4,
        }
    }

    pub fn format_word(self, word: &[u8]) -> String {
        match self {
            Alphabet::Dna => word.iter().map(|&v| Nucleotide::from_index(v).to_char()).collect(),
            Alphabet::Binary | Alphabet::Quinary => word.iter().map(|&v| char::from(b'0' + v)).collect(),
            Alphabet::RingR => word
                .iter()
                .map(|&v| RingElement::from_index(v).to_string())
                .collect::<Vec<_>>()
                .join(" "),
        }
    }

    pub fn parse_word(self, s: &str) -> Result<Vec<u8>> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Empty);
        }
        match self {
            Alphabet::Dna => Ok(s.parse::<DnaString>()?.indices()),
            Alphabet::Binary | Alphabet::Quinary => s
                .chars()
                .enumerate()
                .map(|(i, c)| match c.to_digit(10) {
                    Some(d) if d < self.size() as u32 => Ok(d as u8),
                    _ => Err(Error::InvalidSymbol {
                        symbol: c,
                        position: i + 1,
                        expected: if self == Alphabet::Binary { "0 or 1" } else { "a digit 0-4" },
                    }),
                })
                .collect(),
            Alphabet::RingR => s
                .split_whitespace()
                .map(|t| t.parse::<RingElement>().map(RingElement::index))
                .collect(),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dna" => Ok(Alphabet::Dna),
            "binary" => Ok(Alphabet::Binary),
            "ringr" | "ring-r" | "ring" => Ok(Alphabet::RingR),
            "quinary" => Ok(Alphabet::Quinary),
            _ => Err(Error::InvalidArgument(format!("unknown alphabet {s:?}"))),
        }
    }
}

/// Serialization formats understood by [`Codebook::write_to`] and [`Codebook::read_from`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Codebook,
    Fasta,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "codebook" | "txt" => Ok(Format::Codebook),
            "fasta" | "fa" => Ok(Format::Fasta),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::InvalidArgument(format!("unknown format {s:?}"))),
        }
    }
}

/// A non-empty set of distinct words of common length `n ≥ 1`, kept in
/// lexicographic order of symbol indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codebook {
    alphabet: Alphabet,
    n: usize,
    words: Vec<Vec<u8>>,
}

impl Codebook {
    /// Validates and sorts `words`. Duplicates are an error.
    pub fn new(alphabet: Alphabet, mut words: Vec<Vec<u8>>) -> Result<Self> {
        let n = words.first().map(Vec::len).ok_or(Error::Empty)?;
        if n == 0 {
            return Err(Error::Empty);
        }
        for w in &words {
            if w.len() != n {
                return Err(Error::LengthMismatch { left: n, right: w.len() });
            }
            if let Some(pos) = w.iter().position(|&v| v >= alphabet.size()) {
                return Err(Error::InvalidSymbol {
                    symbol: char::from_digit(w[pos] as u32 % 36, 36).unwrap_or('?'),
                    position: pos + 1,
                    expected: "a symbol of the declared alphabet",
                });
            }
        }
        words.sort_unstable();
        if let Some(pair) = words.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::InvalidArgument(format!(
                "duplicate word {}",
                alphabet.format_word(&pair[0])
            )));
        }
        Ok(Codebook { alphabet, n, words })
    }

    /// Like [`Codebook::new`] but silently drops duplicates.
    pub fn from_words_dedup(alphabet: Alphabet, mut words: Vec<Vec<u8>>) -> Result<Self> {
        words.sort_unstable();
        words.dedup();
        Codebook::new(alphabet, words)
    }

    pub fn from_dna(words: &[DnaString]) -> Result<Self> {
        Codebook::new(Alphabet::Dna, words.iter().map(DnaString::indices).collect())
    }

    /// Parses DNA words such as `["AACC", "CCTT"]`.
    pub fn from_dna_strs(words: &[&str]) -> Result<Self> {
        let parsed = words.iter().map(|w| w.parse()).collect::<Result<Vec<DnaString>>>()?;
        Codebook::from_dna(&parsed)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Word length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of words `M`.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }

    pub fn word_string(&self, i: usize) -> String {
        self.alphabet.format_word(&self.words[i])
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        self.index_of(word).is_some()
    }

    pub fn index_of(&self, word: &[u8]) -> Option<usize> {
        self.words.binary_search_by(|w| w.as_slice().cmp(word)).ok()
    }

    pub fn require_alphabet(&self, expected: Alphabet) -> Result<()> {
        if self.alphabet == expected {
            Ok(())
        } else {
            Err(Error::WrongAlphabet {
                expected: expected.tag().to_string(),
                found: self.alphabet.tag().to_string(),
            })
        }
    }

    /// The words as DNA strings; fails for other alphabets.
    pub fn dna_words(&self) -> Result<Vec<DnaString>> {
        self.require_alphabet(Alphabet::Dna)?;
        self.words.iter().map(|w| DnaString::from_indices(w)).collect()
    }

    pub fn header(&self) -> String {
        format!("# n={} M={} alphabet={}", self.n, self.len(), self.alphabet)
    }

    /// Native text format.
    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        self.write_to(&mut out, Format::Codebook).expect("writing to a Vec cannot fail");
        String::from_utf8(out).expect("codebook text is ASCII")
    }

    /// Writes the codebook in `format`.
    pub fn write_to<W: Write>(&self, w: &mut W, format: Format) -> Result<()> {
        match format {
            Format::Codebook => {
                writeln!(w, "{}", self.header())?;
                for word in &self.words {
                    writeln!(w, "{}", self.alphabet.format_word(word))?;
                }
            }
            Format::Fasta => {
                for (i, word) in self.words.iter().enumerate() {
                    writeln!(w, ">word_{}", i + 1)?;
                    writeln!(w, "{}", self.alphabet.format_word(word))?;
                }
            }
            Format::Csv => {
                let mut out = csv::Writer::from_writer(w);
                let csv_err = |e: csv::Error| Error::Io(e.to_string());
                out.write_record(["index", "word", "gc_weight"]).map_err(csv_err)?;
                for (i, word) in self.words.iter().enumerate() {
                    let gc = match self.alphabet {
                        Alphabet::Dna => word.iter().filter(|&&v| v == 1 || v == 2).count().to_string(),
                        _ => String::new(),
                    };
                    out.write_record([(i + 1).to_string(), self.alphabet.format_word(word), gc])
                        .map_err(csv_err)?;
                }
                out.flush()?;
            }
        }
        Ok(())
    }

    /// Parses the native text format. The alphabet comes from the header or,
    /// failing that, from `alphabet_hint`; declared `n` and `M` are checked.
    pub fn parse_text(text: &str, alphabet_hint: Option<Alphabet>) -> Result<Self> {
        let mut alphabet = None;
        let mut declared_n = None;
        let mut declared_m = None;
        let mut words = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse { line: lineno + 1, message };
            if let Some(rest) = line.strip_prefix('#') {
                for token in rest.split_whitespace() {
                    let Some((key, value)) = token.split_once('=') else { continue };
                    match key {
                        "n" => declared_n = Some(value.parse::<usize>().map_err(|e| parse_err(e.to_string()))?),
                        "M" => declared_m = Some(value.parse::<usize>().map_err(|e| parse_err(e.to_string()))?),
                        "alphabet" => alphabet = Some(value.parse::<Alphabet>().map_err(|e| parse_err(e.to_string()))?),
                        _ => {}
                    }
                }
                continue;
            }
            let alpha = alphabet
                .or(alphabet_hint)
                .ok_or_else(|| parse_err("word before any alphabet declaration".into()))?;
            words.push(alpha.parse_word(line).map_err(|e| parse_err(e.to_string()))?);
        }
        let alpha = alphabet.or(alphabet_hint).ok_or(Error::Parse {
            line: 0,
            message: "missing alphabet declaration".into(),
        })?;
        let code = Codebook::new(alpha, words)?;
        if let Some(n) = declared_n.filter(|&n| n != code.n()) {
            return Err(Error::Parse { line: 0, message: format!("header declares n={n}, words have length {}", code.n()) });
        }
        if let Some(m) = declared_m.filter(|&m| m != code.len()) {
            return Err(Error::Parse { line: 0, message: format!("header declares M={m}, found {} words", code.len()) });
        }
        Ok(code)
    }

    /// Reads any supported format. FASTA and CSV carry no alphabet, so
    /// `alphabet` is required for them.
    pub fn read_from(text: &str, format: Format, alphabet: Option<Alphabet>) -> Result<Self> {
        let need = || {
            alphabet.ok_or_else(|| Error::InvalidArgument("an alphabet is required for FASTA and CSV input".into()))
        };
        match format {
            Format::Codebook => Codebook::parse_text(text, alphabet),
            Format::Fasta => {
                let alpha = need()?;
                let mut words = Vec::new();
                let mut current: Option<String> = None;
                for (lineno, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.starts_with('>') {
                        if let Some(seq) = current.take() {
                            words.push(alpha.parse_word(&seq)?);
                        }
                        current = Some(String::new());
                    } else if !line.is_empty() {
                        let seq = current.as_mut().ok_or(Error::Parse {
                            line: lineno + 1,
                            message: "sequence data before the first record header".into(),
                        })?;
                        if !seq.is_empty() && alpha == Alphabet::RingR {
                            seq.push(' ');
                        }
                        seq.push_str(line);
                    }
                }
                if let Some(seq) = current {
                    words.push(alpha.parse_word(&seq)?);
                }
                Codebook::new(alpha, words)
            }
            Format::Csv => {
                let alpha = need()?;
                let mut reader = csv::Reader::from_reader(text.as_bytes());
                let headers = reader.headers().map_err(|e| Error::Parse { line: 1, message: e.to_string() })?;
                let col = headers
                    .iter()
                    .position(|h| h == "word")
                    .ok_or(Error::Parse { line: 1, message: "missing `word` column".into() })?;
                let mut words = Vec::new();
                for (i, record) in reader.records().enumerate() {
                    let record = record.map_err(|e| Error::Parse { line: i + 2, message: e.to_string() })?;
                    let field = record
                        .get(col)
                        .ok_or(Error::Parse { line: i + 2, message: "missing word field".into() })?;
                    words.push(alpha.parse_word(field)?);
                }
                Codebook::new(alpha, words)
            }
        }
    }
}

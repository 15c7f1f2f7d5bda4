//! The ℓ-order non-homopolymer map ψ and its distance.
//!
//! Given two DNA blocks `x`, `y` of length ℓ such that `x, y, x^c, y^c` are
//! distinct, ψ encodes a binary word bit by bit as a walk through these four
//! blocks: the first bit picks `x` or `x^c`, and each later bit picks the next
//! block from the current one. Consecutive blocks always alternate between
//! `{x, x^c}` and `{y, y^c}`. The Hamming distance between two encoded words
//! equals the non-homopolymer distance [`d_nho`] of the binary words.

use std::path::Path;

use crate::binary::BinaryString;
use crate::codebook::{Alphabet, Codebook};
use crate::dna::{self, DnaString};
use crate::{Error, Result};

/// One of the four blocks `x, x^c, y, y^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    X,
    Xc,
    Y,
    Yc,
}

/// Next block after `block` when the input bit is `bit`.
///
/// | bit | x   | x^c | y   | y^c |
/// |-----|-----|-----|-----|-----|
/// | 0   | y   | y^c | x^c | x   |
/// | 1   | y^c | y   | x   | x^c |
pub fn psi_step(bit: u8, block: Block) -> Block {
    use Block::*;
    match (bit, block) {
        (0, X) => Y,
        (0, Xc) => Yc,
        (0, Y) => Xc,
        (0, Yc) => X,
        (_, X) => Yc,
        (_, Xc) => Y,
        (_, Y) => X,
        (_, Yc) => Xc,
    }
}

/// A pair of blocks `(x, y)` of common length ℓ with `x, y, x^c, y^c` distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPair {
    x: DnaString,
    y: DnaString,
}

impl BlockPair {
    pub fn new(x: DnaString, y: DnaString) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
        }
        let set = [x.clone(), x.complement(), y.clone(), y.complement()];
        for i in 0..4 {
            for j in i + 1..4 {
                if set[i] == set[j] {
                    return Err(Error::InvalidArgument(format!(
                        "blocks x={x}, y={y} do not give four distinct strings x, x^c, y, y^c"
                    )));
                }
            }
        }
        Ok(BlockPair { x, y })
    }

    /// Parses both blocks from text.
    pub fn parse(x: &str, y: &str) -> Result<Self> {
        BlockPair::new(x.parse()?, y.parse()?)
    }

    pub fn x(&self) -> &DnaString {
        &self.x
    }

    pub fn y(&self) -> &DnaString {
        &self.y
    }

    /// Block length ℓ.
    pub fn l(&self) -> usize {
        self.x.len()
    }

    pub fn block(&self, b: Block) -> DnaString {
        match b {
            Block::X => self.x.clone(),
            Block::Xc => self.x.complement(),
            Block::Y => self.y.clone(),
            Block::Yc => self.y.complement(),
        }
    }

    /// Which of the four blocks `s` is.
    pub fn classify(&self, s: &DnaString) -> Result<Block> {
        [Block::X, Block::Xc, Block::Y, Block::Yc]
            .into_iter()
            .find(|&b| &self.block(b) == s)
            .ok_or_else(|| Error::InvalidArgument(format!("{s} is not one of x, x^c, y, y^c")))
    }
}

/// [`psi_step`] on concrete strings.
pub fn psi_step_dna(bit: u8, block: &DnaString, pair: &BlockPair) -> Result<DnaString> {
    Ok(pair.block(psi_step(bit, pair.classify(block)?)))
}

/// Block sequence of ψ(a).
pub fn psi_blocks(bits: &[u8]) -> Vec<Block> {
    let mut out = Vec::with_capacity(bits.len());
    let mut current = if bits.first() == Some(&0) { Block::X } else { Block::Xc };
    for (i, &bit) in bits.iter().enumerate() {
        if i > 0 {
            current = psi_step(bit, current);
        }
        out.push(current);
    }
    out
}

/// ψ(a) as symbol indices.
pub fn psi_encode_bits(bits: &[u8], pair: &BlockPair) -> Vec<u8> {
    let blocks = [Block::X, Block::Xc, Block::Y, Block::Yc].map(|b| pair.block(b).indices());
    psi_blocks(bits)
        .into_iter()
        .flat_map(|b| blocks[b as usize].clone())
        .collect()
}

/// ψ(a): `u_1 = x` or `x^c` for `a_1 = 0` or 1, then `u_i = ψ(a_i, u_(i−1))`.
pub fn psi_encode(a: &BinaryString, pair: &BlockPair) -> DnaString {
    DnaString::from_indices(&psi_encode_bits(a.bits(), pair)).expect("valid indices")
}

/// Positions where `a` and `b` differ (1-based), padded with `n + 1` when
/// their number is odd.
pub fn extended_support(a: &[u8], b: &[u8]) -> Result<Vec<usize>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    let mut t: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).map(|i| i + 1).collect();
    if t.len() % 2 == 1 {
        t.push(a.len() + 1);
    }
    Ok(t)
}

/// Non-homopolymer distance `ℓ · Σ_j (t_(2j) − t_(2j−1))` over the extended
/// support `t_1 < t_2 < …` of `a` and `b`. Works over any alphabet.
pub fn d_nho(a: &[u8], b: &[u8], l: usize) -> Result<usize> {
    let t = extended_support(a, b)?;
    Ok(l * t.chunks(2).map(|p| p[1] - p[0]).sum::<usize>())
}

/// GC-weight of every ψ-encoded word of length `n` blocks. The weight does not
/// depend on the word, since complementing a block preserves its GC-weight.
pub fn gc_weight_predict(pair: &BlockPair, n: usize) -> usize {
    let (wx, wy) = (pair.x().gc_weight(), pair.y().gc_weight());
    if n.is_multiple_of(2) {
        (n / 2) * (wx + wy)
    } else {
        wx + ((n - 1) / 2) * (wx + wy)
    }
}

/// Whether `H(x^rc, y) = H(x^r, y) = ℓ`; encoded codes of even length then
/// satisfy the reverse and reverse-complement constraints.
pub fn block_pair_rrc_admissible(pair: &BlockPair) -> bool {
    let l = pair.l();
    let h = |a: &DnaString| crate::hamming(a.bases(), pair.y().bases()).unwrap_or(0);
    h(&pair.x().reverse_complement()) == l && h(&pair.x().reverse()) == l
}

/// Whether `xy`, `xy^c`, `yx` and `yx^c` are tandem-free with repeat-length ℓ;
/// every encoded word is then tandem-free as well.
pub fn block_pair_tandem_admissible(pair: &BlockPair) -> bool {
    let (x, y) = (pair.x(), pair.y());
    let l = pair.l();
    [x.concat(y), x.concat(&y.complement()), y.concat(x), y.concat(&x.complement())]
        .iter()
        .all(|s| dna::is_tandem_free(s, l))
}

/// The 16 codewords of the [7, 4, 3] Hamming code used for the listed
/// construction.
const HAMMING_7_4: [&str; 16] = [
    "0000000", "1110000", "1001100", "0111100", "0101010", "1011010", "1100110", "0010110", "1101001",
    "0011001", "0100101", "1010101", "1000011", "0110011", "0001111", "1111111",
];

/// Generator polynomial `x^11 + x^9 + x^7 + x^6 + x^5 + x + 1` of the binary
/// Golay code.
const GOLAY_POLY: u32 = 0b1010_1110_0011;

fn golay_23_12() -> Vec<Vec<u8>> {
    (0u32..4096)
        .map(|msg| {
            let shifted = msg << 11;
            let mut rem = shifted;
            for bit in (11..23).rev() {
                if rem >> bit & 1 == 1 {
                    rem ^= GOLAY_POLY << (bit - 11);
                }
            }
            let word = shifted | rem;
            (0..23).rev().map(|b| (word >> b & 1) as u8).collect()
        })
        .collect()
}

/// Built-in binary codes: `repetition4`, `hamming_7_4`, `golay_23_12`.
pub fn builtin_binary_code(name: &str) -> Result<Codebook> {
    let words: Vec<Vec<u8>> = match name {
        "repetition4" => vec![vec![0; 4], vec![1; 4]],
        "hamming_7_4" => HAMMING_7_4.iter().map(|s| s.bytes().map(|b| b - b'0').collect()).collect(),
        "golay_23_12" => golay_23_12(),
        _ => return Err(Error::InvalidArgument(format!("unknown built-in code {name:?}"))),
    };
    Codebook::new(Alphabet::Binary, words)
}

/// Names accepted by [`builtin_binary_code`].
pub const BUILTIN_CODES: [&str; 3] = ["repetition4", "hamming_7_4", "golay_23_12"];

/// Reads a binary codebook file.
pub fn load_binary_code(path: impl AsRef<Path>) -> Result<Codebook> {
    let text = std::fs::read_to_string(path)?;
    let code = Codebook::parse_text(&text, Some(Alphabet::Binary))?;
    code.require_alphabet(Alphabet::Binary)?;
    Ok(code)
}

/// `{ψ(a) : a ∈ c}`.
pub fn build_dna_code(c: &Codebook, pair: &BlockPair) -> Result<Codebook> {
    c.require_alphabet(Alphabet::Binary)?;
    Codebook::new(Alphabet::Dna, c.words().iter().map(|w| psi_encode_bits(w, pair)).collect())
}

/// Minimum [`d_nho`] over distinct pairs of a binary code.
pub fn min_d_nho(c: &Codebook, l: usize) -> Result<usize> {
    c.require_alphabet(Alphabet::Binary)?;
    if c.len() < 2 {
        return Err(Error::InvalidArgument("minimum distance needs at least two words".into()));
    }
    let w = c.words();
    let mut best = usize::MAX;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            best = best.min(d_nho(&w[i], &w[j], l)?);
        }
    }
    Ok(best)
}

/// Minimum [`d_nho`] of a linear binary code, from the single-word profiles
/// `d_nho(0, a)` of its nonzero codewords. The distance depends only on the
/// positions where two words differ, so this equals the pairwise minimum.
pub fn min_d_nho_linear(c: &Codebook, l: usize) -> Result<usize> {
    c.require_alphabet(Alphabet::Binary)?;
    if !is_linear_binary(c) {
        return Err(Error::InvalidArgument("code is not closed under addition".into()));
    }
    let zero = vec![0u8; c.n()];
    let mut best: Option<usize> = None;
    for w in c.words().iter().filter(|w| w.contains(&1)) {
        let d = d_nho(&zero, w, l)?;
        best = Some(best.map_or(d, |b| b.min(d)));
    }
    best.ok_or_else(|| Error::InvalidArgument("code has no nonzero word".into()))
}

/// Whether a binary code contains zero and is closed under XOR.
pub fn is_linear_binary(c: &Codebook) -> bool {
    if c.alphabet() != Alphabet::Binary || c.n() > 64 {
        return false;
    }
    let pack = |w: &[u8]| w.iter().fold(0u64, |acc, &b| acc << 1 | b as u64);
    let mut packed: Vec<u64> = c.words().iter().map(|w| pack(w)).collect();
    packed.sort_unstable();
    if packed.binary_search(&0).is_err() {
        return false;
    }
    packed
        .iter()
        .all(|&a| packed.iter().all(|&b| packed.binary_search(&(a ^ b)).is_ok()))
}

/// Measured properties of an encoded code, as reported by the constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub rrc_admissible: bool,
    pub tandem_admissible: bool,
    pub predicted_gc: usize,
}

/// Admissibility of `pair` for codes of length `n` blocks.
pub fn admissibility(pair: &BlockPair, n: usize) -> AdmissibilityReport {
    AdmissibilityReport {
        rrc_admissible: block_pair_rrc_admissible(pair),
        tandem_admissible: block_pair_tandem_admissible(pair),
        predicted_gc: gc_weight_predict(pair, n),
    }
}

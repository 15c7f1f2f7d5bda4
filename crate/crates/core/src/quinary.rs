//! DNA codes from linear codes over `Z5`.
//!
//! Each symbol of `Z5` maps to one of the dinucleotides
//! `0 → CC, 1 → CA, 2 → AC, 3 → AA, 4 → TC`. Strings built from these blocks
//! contain no G and never contain `TT`, which rules out stems of length three
//! or more in their secondary structures. The family `G_k` gives codes of
//! length `2^(2k−1)`, size `5^k` and minimum distance `3·4^(k−2)`.

use std::collections::BTreeSet;

use crate::codebook::{Alphabet, Codebook};
use crate::dna::{DnaString, Nucleotide};
use crate::verify::{self, DnaOp};
use crate::{Error, Result};

const PHI5: [[Nucleotide; 2]; 5] = {
    use Nucleotide::*;
    [[C, C], [C, A], [A, C], [A, A], [T, C]]
};

/// The dinucleotide assigned to `x ∈ Z5`. Panics if `x > 4`.
pub fn phi5(x: u8) -> DnaString {
    DnaString::new(PHI5[x as usize].to_vec()).expect("non-empty")
}

/// The `Z5` symbol of a dinucleotide from `{CC, CA, AC, AA, TC}`.
pub fn phi5_inverse(d: &DnaString) -> Result<u8> {
    PHI5.iter()
        .position(|p| p.as_slice() == d.bases())
        .map(|i| i as u8)
        .ok_or_else(|| Error::InvalidArgument(format!("{d} is not one of CC, CA, AC, AA, TC")))
}

/// Blockwise image of a word over `Z5`.
pub fn phi5_word(word: &[u8]) -> Vec<u8> {
    word.iter()
        .flat_map(|&x| PHI5[x as usize].iter().map(|b| b.index()))
        .collect()
}

/// A generator matrix over `Z5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuinaryGeneratorMatrix {
    rows: Vec<Vec<u8>>,
}

impl QuinaryGeneratorMatrix {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let n = rows.first().map(Vec::len).ok_or(Error::Empty)?;
        if n == 0 {
            return Err(Error::Empty);
        }
        for row in &rows {
            if row.len() != n {
                return Err(Error::LengthMismatch { left: n, right: row.len() });
            }
            if row.iter().any(|&x| x > 4) {
                return Err(Error::InvalidArgument("entries must lie in 0..=4".into()));
            }
        }
        Ok(QuinaryGeneratorMatrix { rows })
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }
}

/// `G_2 = ((1 1 1 1), (1 2 3 4))`; `G_k` puts the row `(1…1 2…2 3…3 4…4)`
/// above four side-by-side copies of `G_(k−1)`.
pub fn g_k(k: usize) -> Result<QuinaryGeneratorMatrix> {
    if !(2..=5).contains(&k) {
        return Err(Error::InvalidArgument(format!("k must be in 2..=5, got {k}")));
    }
    let mut rows = vec![vec![1, 1, 1, 1], vec![1, 2, 3, 4]];
    for _ in 3..=k {
        let width = rows[0].len();
        let mut next = vec![(1..=4u8).flat_map(|v| std::iter::repeat_n(v, width)).collect::<Vec<u8>>()];
        next.extend(rows.iter().map(|r| r.repeat(4)));
        rows = next;
    }
    QuinaryGeneratorMatrix::new(rows)
}

/// All linear combinations of the rows, deduplicated, as a quinary codebook.
pub fn span5(g: &QuinaryGeneratorMatrix) -> Result<Codebook> {
    if g.k() > 6 {
        return Err(Error::TooLarge(format!("{} rows; at most 6 can be enumerated", g.k())));
    }
    let total = 5usize.pow(g.k() as u32);
    let words: Vec<Vec<u8>> = (0..total)
        .map(|mut idx| {
            let mut word = vec![0u8; g.n()];
            for row in g.rows() {
                let a = (idx % 5) as u8;
                idx /= 5;
                for (w, &x) in word.iter_mut().zip(row) {
                    *w = (*w + a * x) % 5;
                }
            }
            word
        })
        .collect();
    Codebook::from_words_dedup(Alphabet::Quinary, words)
}

/// DNA image of a quinary codebook.
pub fn phi5_image(c: &Codebook) -> Result<Codebook> {
    c.require_alphabet(Alphabet::Quinary)?;
    Codebook::new(Alphabet::Dna, c.words().iter().map(|w| phi5_word(w)).collect())
}

/// The DNA code `φ(span(G_k))` with parameters `(2^(2k−1), 5^k, 3·4^(k−2))`.
pub fn quinary_dna_code(k: usize) -> Result<Codebook> {
    phi5_image(&span5(&g_k(k)?)?)
}

/// Minimum of `H(x, y^rc)` over all ordered pairs of codewords, `x = y`
/// included.
pub fn min_rc_distance(c: &Codebook) -> Result<usize> {
    let found = verify::min_op_distance(c, DnaOp::ReverseComplement, false)?;
    Ok(found.expect("a non-empty codebook has at least one pair").distance)
}

/// The set of length-3 windows that can occur in concatenations of the five
/// dinucleotide blocks.
pub fn triple_window_set() -> BTreeSet<String> {
    [
        "AAA", "AAC", "ACA", "CAA", "CCA", "CAC", "ACC", "CCC", "TCA", "TCC", "TCT", "ATC", "CTC", "AAT", "ACT",
        "CAT", "CCT",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_table() {
        assert_eq!(phi5(0).to_string(), "CC");
        assert_eq!(phi5(4).to_string(), "TC");
        assert_eq!(phi5_inverse(&"AA".parse().unwrap()).unwrap(), 3);
        assert!(phi5_inverse(&"GG".parse().unwrap()).is_err());
        for x in 0..5 {
            assert_eq!(phi5_inverse(&phi5(x)).unwrap(), x);
        }
    }

    #[test]
    fn generator_family() {
        assert_eq!(g_k(2).unwrap().rows(), &[vec![1, 1, 1, 1], vec![1, 2, 3, 4]]);
        let g3 = g_k(3).unwrap();
        assert_eq!((g3.k(), g3.n()), (3, 16));
        assert_eq!(g3.rows()[0], [1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4]);
        let g4 = g_k(4).unwrap();
        assert_eq!((g4.k(), g4.n()), (4, 64));
        assert!(g_k(1).is_err());
        assert!(g_k(6).is_err());
    }

    #[test]
    fn spans() {
        let c = span5(&g_k(2).unwrap()).unwrap();
        assert_eq!((c.len(), c.n()), (25, 4));
        assert_eq!(verify::min_hamming_distance(&c).unwrap(), 3);
        assert!(c.contains(&[0, 0, 0, 0]));
        let c3 = span5(&g_k(3).unwrap()).unwrap();
        assert_eq!(c3.len(), 125);
        assert_eq!(verify::min_hamming_distance(&c3).unwrap(), 12);
    }

    #[test]
    fn dna_codes() {
        let c = quinary_dna_code(2).unwrap();
        assert_eq!((c.n(), c.len()), (8, 25));
        assert_eq!(verify::min_hamming_distance(&c).unwrap(), 3);
        assert!(min_rc_distance(&c).unwrap() >= 2);
        assert_eq!(quinary_dna_code(4).unwrap().len(), 625);
        let palindrome = Codebook::from_dna_strs(&["AT"]).unwrap();
        assert_eq!(min_rc_distance(&palindrome).unwrap(), 0);
    }
}

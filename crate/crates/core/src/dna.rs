//! DNA string algebra.
//!
//! Positions in documentation and error messages are 1-based.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// One of the four DNA bases. The discriminant is the symbol index used by
/// codebooks (`A = 0, C = 1, G = 2, T = 3`), so that the Watson-Crick
/// complement is `3 - index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Nucleotide {
    A = 0,
    C = 1,
    G = 2,
    T = 3,
}

impl Nucleotide {
    pub const ALL: [Nucleotide; 4] = [Nucleotide::A, Nucleotide::C, Nucleotide::G, Nucleotide::T];

    /// Nucleotide with the given symbol index. Panics if `index > 3`.
    pub fn from_index(index: u8) -> Nucleotide {
        Nucleotide::ALL[index as usize]
    }

    pub fn index(self) -> u8 {
        self as u8
    }

    /// Watson-Crick complement.
    pub fn complement(self) -> Nucleotide {
        Nucleotide::from_index(3 - self.index())
    }

    pub fn is_gc(self) -> bool {
        matches!(self, Nucleotide::C | Nucleotide::G)
    }

    pub fn to_char(self) -> char {
        b"ACGT"[self as usize] as char
    }

    pub fn from_char(c: char) -> Option<Nucleotide> {
        match c {
            'A' => Some(Nucleotide::A),
            'C' => Some(Nucleotide::C),
            'G' => Some(Nucleotide::G),
            'T' => Some(Nucleotide::T),
            _ => None,
        }
    }
}

/// Interaction energy between two bases: −5 for G·C, −4 for A·T, −1 for the
/// G·T wobble pair and 0 otherwise.
pub fn interaction_energy(b1: Nucleotide, b2: Nucleotide) -> i32 {
    use Nucleotide::*;
    match (b1, b2) {
        (G, C) | (C, G) => -5,
        (A, T) | (T, A) => -4,
        (G, T) | (T, G) => -1,
        _ => 0,
    }
}

/// Whether `b` may stand opposite `a` in a secondary structure, i.e. the pair
/// has nonzero interaction energy. The relation is symmetric but not a
/// function: G pairs with C and T, T pairs with A and G.
pub fn pairs_with(a: Nucleotide, b: Nucleotide) -> bool {
    interaction_energy(a, b) != 0
}

/// A non-empty string over `{A, C, G, T}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DnaString(Vec<Nucleotide>);

impl DnaString {
    pub fn new(bases: Vec<Nucleotide>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::Empty);
        }
        Ok(DnaString(bases))
    }

    /// Builds a string from symbol indices in `0..4`.
    pub fn from_indices(indices: &[u8]) -> Result<Self> {
        let bases = indices
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                if v < 4 {
                    Ok(Nucleotide::from_index(v))
                } else {
                    Err(Error::InvalidSymbol {
                        symbol: char::from_digit(v as u32 % 36, 36).unwrap_or('?'),
                        position: i + 1,
                        expected: "a symbol index below 4",
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        DnaString::new(bases)
    }

    pub fn bases(&self) -> &[Nucleotide] {
        &self.0
    }

    pub fn indices(&self) -> Vec<u8> {
        self.0.iter().map(|b| b.index()).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reverse(&self) -> DnaString {
        DnaString(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> DnaString {
        DnaString(self.0.iter().map(|b| b.complement()).collect())
    }

    pub fn reverse_complement(&self) -> DnaString {
        DnaString(self.0.iter().rev().map(|b| b.complement()).collect())
    }

    /// Number of C and G bases.
    pub fn gc_weight(&self) -> usize {
        self.0.iter().filter(|b| b.is_gc()).count()
    }

    /// Concatenation `self other`.
    pub fn concat(&self, other: &DnaString) -> DnaString {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        DnaString(v)
    }

    /// Substring of `len` bases starting at 0-based offset `start`.
    pub fn window(&self, start: usize, len: usize) -> &[Nucleotide] {
        &self.0[start..start + len]
    }
}

impl FromStr for DnaString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bases = s
            .chars()
            .enumerate()
            .map(|(i, c)| {
                Nucleotide::from_char(c).ok_or(Error::InvalidSymbol {
                    symbol: c,
                    position: i + 1,
                    expected: "one of A, C, G, T",
                })
            })
            .collect::<Result<Vec<_>>>()?;
        DnaString::new(bases)
    }
}

impl fmt::Display for DnaString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|b| b.to_char()).collect();
        f.write_str(&s)
    }
}

/// Melting temperature in °C from the length and GC count of a string.
///
/// Without salt: `64.9 + 41 (w - 16.4) / n`. With a sodium concentration `s`
/// in mol/L: `100.5 + 41 (w - 36.4) / n + 16.6 log10(s)`.
pub fn melting_temperature_from_counts(n: usize, gc: f64, salt_molarity: Option<f64>) -> Result<f64> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let n = n as f64;
    match salt_molarity {
        None => Ok(64.9 + 41.0 * (gc - 16.4) / n),
        Some(s) if s > 0.0 && s.is_finite() => Ok(100.5 + 41.0 * (gc - 36.4) / n + 16.6 * s.log10()),
        Some(s) => Err(Error::InvalidArgument(format!(
            "salt molarity must be positive, got {s}"
        ))),
    }
}

/// Melting temperature of `x` in °C; see [`melting_temperature_from_counts`].
pub fn melting_temperature(x: &DnaString, salt_molarity: Option<f64>) -> Result<f64> {
    melting_temperature_from_counts(x.len(), x.gc_weight() as f64, salt_molarity)
}

/// Correlation vector `x∘y`.
///
/// Bit `i` (1-based, `i = 1..=n` with `n = |x|`) is set when the suffix of
/// `x` starting at position `i` agrees with `y` on their overlap, i.e. with the
/// prefix of `y` of length `min(|y|, n - i + 1)`.
pub fn correlation(x: &DnaString, y: &DnaString) -> Vec<u8> {
    let (xs, ys) = (x.bases(), y.bases());
    (0..xs.len())
        .map(|i| {
            let overlap = ys.len().min(xs.len() - i);
            u8::from(xs[i..i + overlap] == ys[..overlap])
        })
        .collect()
}

/// True when `x∘x = (1, 0, …, 0)`: no proper suffix of `x` is a prefix of it.
pub fn is_self_uncorrelated(x: &DnaString) -> bool {
    correlation(x, x).iter().skip(1).all(|&b| b == 0)
}

/// True when both `x∘y` and `y∘x` are all-zero.
pub fn are_mutually_uncorrelated(x: &DnaString, y: &DnaString) -> bool {
    correlation(x, y).iter().all(|&b| b == 0) && correlation(y, x).iter().all(|&b| b == 0)
}

/// True when no two adjacent equal substrings of length `m ≤ l` occur.
/// Repeat-length 1 is homopolymer freedom.
pub fn is_tandem_free(x: &DnaString, l: usize) -> bool {
    let b = x.bases();
    let n = b.len();
    (1..=l).all(|m| {
        2 * m > n || (0..=n - 2 * m).all(|i| b[i..i + m] != b[i + m..i + 2 * m])
    })
}

/// True when some run of `t` identical bases occurs.
pub fn has_homopolymer_run(x: &DnaString, t: usize) -> bool {
    if t <= 1 {
        return true;
    }
    let mut run = 1;
    for w in x.bases().windows(2) {
        if w[0] == w[1] {
            run += 1;
            if run >= t {
                return true;
            }
        } else {
            run = 1;
        }
    }
    false
}

/// Whether `b` is a secondary complement of `a`: position by position, the
/// two bases have nonzero interaction energy.
pub fn is_secondary_complement_pair(a: &DnaString, b: &DnaString) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(secondary_complement_slices(a.bases(), b.bases()))
}

fn secondary_complement_slices(a: &[Nucleotide], b: &[Nucleotide]) -> bool {
    a.iter().zip(b).all(|(&p, &q)| pairs_with(p, q))
}

fn reverse_secondary_complement_slices(a: &[Nucleotide], b: &[Nucleotide]) -> bool {
    a.iter().zip(b.iter().rev()).all(|(&p, &q)| pairs_with(p, q))
}

/// Locates a pair of windows of length `l` that could form a stem: windows at
/// 0-based offsets `i < j` with `j - i > l` where the second window is a
/// secondary complement or a reverse secondary complement of the first.
pub fn find_secondary_stem(x: &DnaString, l: usize) -> Option<(usize, usize)> {
    let b = x.bases();
    let n = b.len();
    if l == 0 || n < l {
        return None;
    }
    for i in 0..=n - l {
        let w1 = &b[i..i + l];
        for j in (i + l + 1)..=(n - l) {
            let w2 = &b[j..j + l];
            if secondary_complement_slices(w1, w2) || reverse_secondary_complement_slices(w1, w2) {
                return Some((i, j));
            }
        }
    }
    None
}

/// True when `x` contains no pair of windows that could form a stem of length
/// `l`; see [`find_secondary_stem`].
pub fn is_l_free_secondary(x: &DnaString, l: usize) -> bool {
    find_secondary_stem(x, l).is_none()
}

/// Minimum free energy `E(1, n)` of the Nussinov-Jacobson recursion under the
/// [`interaction_energy`] table. A base never pairs with itself or with an
/// immediate neighbour.
pub fn min_free_energy(x: &DnaString) -> i32 {
    let b = x.bases();
    let n = b.len();
    if n < 3 {
        return 0;
    }
    // e[i][j] for i <= j, zero on the diagonal and the first off-diagonal.
    let mut e = vec![vec![0i32; n]; n];
    for span in 2..n {
        for i in 0..n - span {
            let j = i + span;
            let mut best = e[i + 1][j - 1] + interaction_energy(b[i], b[j]);
            for k in i + 1..=j {
                best = best.min(e[i][k - 1] + e[k][j]);
            }
            e[i][j] = best;
        }
    }
    e[0][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> DnaString {
        s.parse().unwrap()
    }

    #[test]
    fn string_operations() {
        let x = d("AAGCCAAATC");
        assert_eq!(x.reverse(), d("CTAAACCGAA"));
        assert_eq!(x.complement(), d("TTCGGTTTAG"));
        assert_eq!(x.reverse_complement(), d("GATTTGGCTT"));
        assert_eq!(x.gc_weight(), 4);
        assert_eq!(d("A").reverse(), d("A"));
        assert_eq!(d("ACGT").complement(), d("TGCA"));
        assert_eq!(d("AT").reverse_complement(), d("AT"));
        assert_eq!(d("AACC").reverse_complement(), d("GGTT"));
        assert_eq!(d("AAAA").gc_weight(), 0);
        assert_eq!(d("GCGC").gc_weight(), 4);
    }

    #[test]
    fn parsing_rejects_lowercase_and_empty() {
        assert!(matches!(
            "ACgT".parse::<DnaString>(),
            Err(Error::InvalidSymbol { symbol: 'g', position: 3, .. })
        ));
        assert_eq!("".parse::<DnaString>(), Err(Error::Empty));
    }

    #[test]
    fn melting_temperatures() {
        let close = |a: f64, b: f64| (a - b).abs() < 1e-9;
        assert!(close(melting_temperature_from_counts(20, 10.0, None).unwrap(), 51.78));
        assert!(close(melting_temperature_from_counts(41, 16.0, None).unwrap(), 64.5));
        assert!(close(melting_temperature_from_counts(20, 10.0, Some(1.0)).unwrap(), 46.38));
        assert!(melting_temperature_from_counts(20, 10.0, Some(0.0)).is_err());
        assert!(melting_temperature_from_counts(20, 10.0, Some(-1.0)).is_err());
    }

    #[test]
    fn hamming_examples() {
        let h = |a: &str, b: &str| crate::hamming(d(a).bases(), d(b).bases()).unwrap();
        assert_eq!(h("AACC", "CCTT"), 4);
        assert_eq!(h("CCTT", "AGGT"), 3);
        assert_eq!(h("GATTACA", "GATTACA"), 0);
        assert!(crate::hamming(d("AC").bases(), d("ACG").bases()).is_err());
    }

    #[test]
    fn correlation_examples() {
        assert_eq!(correlation(&d("ACCATG"), &d("CATG")), vec![0, 0, 1, 0, 0, 0]);
        assert_eq!(correlation(&d("ACAGT"), &d("ACAGT")), vec![1, 0, 0, 0, 0]);
        assert_eq!(correlation(&d("AAA"), &d("AAA")), vec![1, 1, 1]);
        assert!(is_self_uncorrelated(&d("ACAGT")));
        assert!(!is_self_uncorrelated(&d("AAA")));
        assert!(is_self_uncorrelated(&d("A")));
        assert!(are_mutually_uncorrelated(&d("ACAGT"), &d("AGCATT")));
        assert!(!are_mutually_uncorrelated(&d("ACCATG"), &d("CATG")));
        assert!(!are_mutually_uncorrelated(&d("GATC"), &d("GATC")));
    }

    #[test]
    fn tandem_and_homopolymer() {
        assert!(is_tandem_free(&d("TATCTATCAGAT"), 3));
        assert!(!is_tandem_free(&d("TATCTATCAGAT"), 4));
        assert!(!is_tandem_free(&d("AAT"), 1));
        assert!(has_homopolymer_run(&d("AAAT"), 3));
        assert!(!has_homopolymer_run(&d("ACAC"), 2));
        assert!(!has_homopolymer_run(&d("TATCTATCAGAT"), 2));
    }

    #[test]
    fn secondary_relations() {
        assert!(is_secondary_complement_pair(&d("ATGAA"), &d("TACTT")).unwrap());
        assert!(is_secondary_complement_pair(&d("ATGAA"), &d("TGTTT")).unwrap());
        assert!(!is_secondary_complement_pair(&d("AA"), &d("AA")).unwrap());
        assert!(is_secondary_complement_pair(&d("AA"), &d("AAA")).is_err());
        assert!(is_l_free_secondary(&d("ACACACACACAC"), 3));
        assert!(!is_l_free_secondary(&d("AAAAATTTTT"), 3));
        assert!(is_l_free_secondary(&d("AC"), 3));
    }

    #[test]
    fn energies() {
        use Nucleotide::*;
        assert_eq!(interaction_energy(G, C), -5);
        assert_eq!(interaction_energy(T, A), -4);
        assert_eq!(interaction_energy(A, A), 0);
        assert_eq!(min_free_energy(&d("AAAA")), 0);
        assert_eq!(min_free_energy(&d("ACGT")), -4);
        assert_eq!(min_free_energy(&d("GC")), 0);
        // Two nested G·C pairs enclosing a two-base loop.
        assert_eq!(min_free_energy(&d("GGAACC")), -10);
    }
}

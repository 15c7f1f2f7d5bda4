//! The Gau map from `R = Z4 + uZ4` to dinucleotides, the Gau distance, and
//! Reed-Muller type codes `R(r, m, z)` over `R`.
//!
//! The map is a bijection under which the Gau distance on `R^n` equals the
//! Hamming distance of the DNA images, so a code over `R` with minimum Gau
//! distance `d` becomes a DNA code of twice the length with minimum Hamming
//! distance `d`. It also turns ring operations into string operations:
//! `φ(3x) = φ(x)^r`, `φ(x + 2 + 2u) = φ(x)^c`.

use crate::codebook::{Alphabet, Codebook};
use crate::dna::{DnaString, Nucleotide};
use crate::ring::{span, IdealClass, RingElement, RingGeneratorMatrix, RingVector, MAX_SPAN_SIZE};
use crate::verify;
use crate::{Error, Result};

/// Image of each element, indexed by `4a + b`.
const GAU_TABLE: [&str; 16] = [
    "AA", "TG", "CC", "GT", // 0, u, 2u, 3u
    "AG", "TA", "CT", "GC", // 1, 1+u, 1+2u, 1+3u
    "GG", "CA", "TT", "AC", // 2, 2+u, 2+2u, 2+3u
    "GA", "CG", "TC", "AT", // 3, 3+u, 3+2u, 3+3u
];

/// The distance matrix: row `i` is selected by the second base and column `j`
/// by the first base, both in the order A, G, C, T. Entries are `(a, b)`.
const GAU_MATRIX: [[(u8, u8); 4]; 4] = [
    [(0, 0), (3, 0), (2, 1), (1, 1)],
    [(1, 0), (2, 0), (3, 1), (0, 1)],
    [(2, 3), (1, 3), (0, 2), (3, 2)],
    [(3, 3), (0, 3), (1, 2), (2, 2)],
];

fn table_bases(x: RingElement) -> [Nucleotide; 2] {
    let s = GAU_TABLE[x.index() as usize].as_bytes();
    let base = |c: u8| Nucleotide::from_char(c as char).expect("table holds DNA letters");
    [base(s[0]), base(s[1])]
}

/// `φ(x)`, a dinucleotide.
pub fn gau_map(x: RingElement) -> DnaString {
    DnaString::new(table_bases(x).to_vec()).expect("non-empty")
}

/// Preimage of a dinucleotide.
pub fn gau_unmap(first: Nucleotide, second: Nucleotide) -> RingElement {
    let idx = GAU_TABLE
        .iter()
        .position(|s| {
            let b = s.as_bytes();
            b[0] as char == first.to_char() && b[1] as char == second.to_char()
        })
        .expect("the table covers all 16 dinucleotides");
    RingElement::from_index(idx as u8)
}

/// Blockwise image `φ(x_1) φ(x_2) … φ(x_n)`.
pub fn gau_map_vector(x: &RingVector) -> DnaString {
    let bases = x.elements().iter().flat_map(|&e| table_bases(e)).collect();
    DnaString::new(bases).expect("non-empty vector")
}

/// Inverse of [`gau_map_vector`]; the input length must be even.
pub fn gau_inverse(d: &DnaString) -> Result<RingVector> {
    if !d.len().is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "Gau preimage needs an even length, got {}",
            d.len()
        )));
    }
    Ok(RingVector(
        d.bases().chunks(2).map(|p| gau_unmap(p[0], p[1])).collect(),
    ))
}

/// Position `(i, j)` of `x` in the distance matrix.
fn matrix_position(x: RingElement) -> (u8, u8) {
    for (i, row) in GAU_MATRIX.iter().enumerate() {
        for (j, &(a, b)) in row.iter().enumerate() {
            if RingElement::new(a, b) == x {
                return (i as u8, j as u8);
            }
        }
    }
    unreachable!("every element appears in the matrix")
}

/// `min{1, i + 3i' mod 4} + min{1, j + 3j' mod 4}` where `(i, j)` and
/// `(i', j')` are the matrix positions of `x` and `y`.
pub fn gau_distance(x: RingElement, y: RingElement) -> usize {
    let ((i, j), (i2, j2)) = (matrix_position(x), matrix_position(y));
    let part = |p: u8, q: u8| ((p + 3 * q) % 4).min(1) as usize;
    part(i, i2) + part(j, j2)
}

/// Componentwise sum of [`gau_distance`].
pub fn gau_distance_vector(x: &RingVector, y: &RingVector) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    Ok(x.elements().iter().zip(y.elements()).map(|(&a, &b)| gau_distance(a, b)).sum())
}

/// DNA image of a ring codebook.
pub fn gau_image(c: &Codebook) -> Result<Codebook> {
    c.require_alphabet(Alphabet::RingR)?;
    let words = c
        .words()
        .iter()
        .map(|w| gau_map_vector(&RingVector::from_indices(w)).indices())
        .collect();
    Codebook::new(Alphabet::Dna, words)
}

/// Minimum Gau distance of a ring codebook, measured as the minimum Hamming
/// distance of its DNA image.
pub fn min_gau_distance(c: &Codebook) -> Result<usize> {
    verify::min_hamming_distance(&gau_image(c)?)
}

/// Parameters `(r, m, z)` of the Reed-Muller type code `R(r, m, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RmSpec {
    pub r: usize,
    pub m: usize,
    pub z: RingElement,
}

/// Largest `m` accepted by the Reed-Muller constructions.
pub const RM_MAX_M: usize = 5;

impl RmSpec {
    pub fn new(r: usize, m: usize, z: RingElement) -> Result<Self> {
        if r > m || m > RM_MAX_M {
            return Err(Error::InvalidArgument(format!(
                "need 0 <= r <= m <= {RM_MAX_M}, got r={r}, m={m}"
            )));
        }
        if z.is_zero() {
            return Err(Error::InvalidArgument("z must be nonzero".into()));
        }
        Ok(RmSpec { r, m, z })
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn rm_rows(r: usize, m: usize, z: RingElement) -> Vec<Vec<RingElement>> {
    let len = 1usize << m;
    if r == 0 {
        return vec![vec![RingElement::ONE; len]];
    }
    if r == m {
        let mut rows = rm_rows(m - 1, m, z);
        let mut last = vec![RingElement::ZERO; len];
        last[len - 1] = z;
        rows.push(last);
        return rows;
    }
    let half = len / 2;
    let mut rows: Vec<Vec<RingElement>> = rm_rows(r, m - 1, z)
        .into_iter()
        .map(|row| row.iter().chain(row.iter()).copied().collect())
        .collect();
    rows.extend(rm_rows(r - 1, m - 1, z).into_iter().map(|row| {
        std::iter::repeat_n(RingElement::ZERO, half).chain(row).collect()
    }));
    rows
}

/// Generator matrix of `R(r, m, z)`, built by the recursion
/// `G(r, m) = [[G(r, m−1), G(r, m−1)], [0, G(r−1, m−1)]]` with
/// `G(0, m)` the all-ones row and `G(m, m) = [G(m−1, m); (0 … 0 z)]`.
pub fn rm_generator(spec: RmSpec) -> RingGeneratorMatrix {
    let rows = rm_rows(spec.r, spec.m, spec.z).into_iter().map(RingVector).collect();
    RingGeneratorMatrix::new(rows).expect("recursion yields equal non-empty rows")
}

/// `(n, M, d)` of a Reed-Muller type code. `M = 2^log2_size`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RmParameters {
    pub n: usize,
    pub log2_size: usize,
    pub min_distance: usize,
}

impl RmParameters {
    pub fn size(&self) -> u128 {
        1u128 << self.log2_size
    }
}

/// Number of rows of the generator matrix that carry `z`.
pub fn rm_z_rows(spec: RmSpec) -> usize {
    if spec.r == 0 {
        0
    } else {
        (0..spec.r).map(|i| binomial(spec.m - 1, i)).sum()
    }
}

/// The closed-form parameters: `n = 2^m`; `log2 M = 4k − c·t`, where `k` is
/// the number of rows, `t` the number of z-rows and `c` is 3, 2, 1 or 0 for
/// `z` in `⟨2u⟩`, `⟨2⟩`, `⟨u⟩` or the units; and the stated minimum Gau
/// distance `2^(m−r+1)` for `z ∈ {2, 2u, 2+2u}`, `2^(m−r)` otherwise.
///
/// The size formula agrees with enumeration. The distance formula does not
/// always: see [`rm_measured_parameters`] for the enumerated value.
pub fn rm_parameters(spec: RmSpec) -> RmParameters {
    let k: usize = (0..=spec.r).map(|i| binomial(spec.m, i)).sum();
    let t = rm_z_rows(spec);
    let class = spec.z.ideal_class().expect("z is nonzero");
    let c = match class {
        IdealClass::TwoU => 3,
        IdealClass::Two => 2,
        IdealClass::U => 1,
        IdealClass::Unit => 0,
    };
    let exp = spec.m - spec.r + usize::from(matches!(class, IdealClass::TwoU | IdealClass::Two));
    RmParameters {
        n: 1 << spec.m,
        log2_size: 4 * k - c * t,
        min_distance: 1 << exp,
    }
}

/// `R(r, m, z)` as a ring codebook.
pub fn rm_code(spec: RmSpec) -> Result<Codebook> {
    let params = rm_parameters(spec);
    if params.size() > MAX_SPAN_SIZE as u128 {
        return Err(Error::TooLarge(format!(
            "R({}, {}, {}) has 2^{} words (limit {MAX_SPAN_SIZE})",
            spec.r, spec.m, spec.z, params.log2_size
        )));
    }
    span(&rm_generator(spec))
}

/// The DNA code `φ(R(r, m, z))` of length `2^(m+1)`.
pub fn rm_dna_code(spec: RmSpec) -> Result<Codebook> {
    gau_image(&rm_code(spec)?)
}

/// Parameters measured by enumerating the code: exact size and minimum Gau
/// distance.
pub fn rm_measured_parameters(spec: RmSpec) -> Result<RmParameters> {
    let dna = rm_dna_code(spec)?;
    let size = dna.len();
    Ok(RmParameters {
        n: 1 << spec.m,
        log2_size: size.trailing_zeros() as usize,
        min_distance: verify::min_hamming_distance(&dna)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> RingElement {
        s.parse().unwrap()
    }

    #[test]
    fn table_entries() {
        assert_eq!(gau_map(e("0")).to_string(), "AA");
        assert_eq!(gau_map(e("u")).to_string(), "TG");
        assert_eq!(gau_map(e("3+2u")).to_string(), "TC");
    }

    #[test]
    fn bijection() {
        let mut images: Vec<String> = RingElement::all().map(|x| gau_map(x).to_string()).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 16);
    }

    #[test]
    fn vectors() {
        let v: RingVector = "3u 2+3u 2u".parse().unwrap();
        assert_eq!(gau_map_vector(&v).to_string(), "GTACCC");
        let back = gau_inverse(&"CCGAGA".parse().unwrap()).unwrap();
        assert_eq!(back.to_string(), "2u 3 3");
        let w: RingVector = "1 1 2u".parse().unwrap();
        assert_eq!(gau_inverse(&gau_map_vector(&w)).unwrap(), w);
        assert!(gau_inverse(&"ACG".parse().unwrap()).is_err());
    }

    #[test]
    fn distances() {
        assert_eq!(gau_distance(e("3"), e("1+3u")), 1);
        assert_eq!(gau_distance(e("3"), e("1+2u")), 2);
        assert_eq!(gau_distance(e("2+u"), e("2+u")), 0);
        assert_eq!(gau_distance(e("0"), e("1")), 1);
        let zero: RingVector = "0 0".parse().unwrap();
        let ones: RingVector = "1 1".parse().unwrap();
        assert_eq!(gau_distance_vector(&zero, &ones).unwrap(), 2);
        assert!(gau_distance_vector(&zero, &"1".parse().unwrap()).is_err());
    }

    #[test]
    fn rm_generators() {
        let rows = |r, m, z: &str| -> Vec<String> {
            rm_generator(RmSpec::new(r, m, e(z)).unwrap())
                .rows()
                .iter()
                .map(|v| v.to_string())
                .collect()
        };
        assert_eq!(rows(0, 2, "u"), ["1 1 1 1"]);
        assert_eq!(rows(1, 2, "u"), ["1 1 1 1", "0 u 0 u", "0 0 1 1"]);
        assert_eq!(rows(2, 2, "3"), ["1 1 1 1", "0 3 0 3", "0 0 1 1", "0 0 0 3"]);
        for m in 0..=RM_MAX_M {
            for r in 0..=m {
                let spec = RmSpec::new(r, m, e("2u")).unwrap();
                let g = rm_generator(spec);
                let k: usize = (0..=r).map(|i| binomial(m, i)).sum();
                assert_eq!((g.k(), g.n()), (k, 1 << m));
                let z_rows = g.rows().iter().filter(|row| row.elements().contains(&e("2u"))).count();
                assert_eq!(z_rows, rm_z_rows(spec));
            }
        }
        assert!(RmSpec::new(3, 2, e("1")).is_err());
        assert!(RmSpec::new(1, 2, e("0")).is_err());
        assert!(RmSpec::new(1, 6, e("1")).is_err());
    }

    #[test]
    fn rm_formulas() {
        let p = |r, m, z: &str| rm_parameters(RmSpec::new(r, m, e(z)).unwrap());
        assert_eq!(p(1, 2, "1"), RmParameters { n: 4, log2_size: 12, min_distance: 2 });
        assert_eq!(p(1, 2, "2u"), RmParameters { n: 4, log2_size: 9, min_distance: 4 });
        assert_eq!(p(0, 3, "1"), RmParameters { n: 8, log2_size: 4, min_distance: 8 });
    }

    #[test]
    fn rm_enumeration() {
        let measured = |r, m, z: &str| rm_measured_parameters(RmSpec::new(r, m, e(z)).unwrap()).unwrap();
        assert_eq!(measured(1, 2, "1"), RmParameters { n: 4, log2_size: 12, min_distance: 2 });
        // The word (0 0 1 1) has Gau weight 2, below the closed-form value 4.
        assert_eq!(measured(1, 2, "2u"), RmParameters { n: 4, log2_size: 9, min_distance: 2 });
        assert_eq!(measured(0, 3, "2"), RmParameters { n: 8, log2_size: 4, min_distance: 8 });
        let code = rm_dna_code(RmSpec::new(0, 1, e("1")).unwrap()).unwrap();
        assert_eq!((code.n(), code.len()), (4, 16));
        assert_eq!(verify::min_hamming_distance(&code).unwrap(), 2);
    }
}

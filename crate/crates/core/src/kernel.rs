//! Distance kernels shared by the verifiers.
//!
//! Words are packed into bit planes so that a Hamming distance is a handful of
//! XOR/OR/popcount operations. Large codes over short words are searched by
//! enumerating Hamming balls around each word instead of scanning all pairs.

use std::collections::HashMap;

use rayon::prelude::*;

/// Codes with more words than this are candidates for the ball search.
const PAIRWISE_LIMIT: usize = 4096;

/// Words packed into `planes` bit planes of `stride` 64-bit limbs each.
pub(crate) struct Packed {
    planes: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Packed {
    pub(crate) fn new(words: &[Vec<u8>], bits: u32) -> Packed {
        let n = words.first().map_or(0, Vec::len);
        let planes = bits as usize;
        let stride = n.div_ceil(64).max(1);
        let per_word = planes * stride;
        let mut data = vec![0u64; words.len() * per_word];
        for (w, word) in words.iter().enumerate() {
            let base = w * per_word;
            for (pos, &sym) in word.iter().enumerate() {
                for p in 0..planes {
                    if (sym >> p) & 1 == 1 {
                        data[base + p * stride + pos / 64] |= 1u64 << (pos % 64);
                    }
                }
            }
        }
        Packed { planes, stride, data }
    }

    fn word(&self, i: usize) -> &[u64] {
        let per_word = self.planes * self.stride;
        &self.data[i * per_word..(i + 1) * per_word]
    }

    /// Hamming distance between word `i` of `self` and word `j` of `other`.
    pub(crate) fn distance(&self, i: usize, other: &Packed, j: usize) -> usize {
        let (a, b) = (self.word(i), other.word(j));
        let mut total = 0;
        for limb in 0..self.stride {
            let mut diff = 0u64;
            for p in 0..self.planes {
                let k = p * self.stride + limb;
                diff |= a[k] ^ b[k];
            }
            total += diff.count_ones() as usize;
        }
        total
    }
}

/// Which ordered pairs `(i, j)` a search ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Pairs {
    /// `i < j`; used when the measured quantity is symmetric.
    Unordered,
    /// All `(i, j)` including `i = j`.
    Ordered,
}

/// The minimising pair of a search. Ties are broken by preferring `i = j`,
/// then the smallest `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct PairMin {
    pub distance: usize,
    pub i: usize,
    pub j: usize,
}

impl PairMin {
    fn key(&self) -> (usize, bool, usize, usize) {
        (self.distance, self.i != self.j, self.i, self.j)
    }

    fn better(a: Option<PairMin>, b: Option<PairMin>) -> Option<PairMin> {
        match (a, b) {
            (Some(x), Some(y)) => Some(if y.key() < x.key() { y } else { x }),
            (x, None) => x,
            (None, y) => y,
        }
    }
}

/// Minimum of `H(image[i], words[j])` over the selected pairs. When
/// `skip_equal` is set, pairs with `image[i] == words[j]` are ignored.
///
/// `words` must be sorted and distinct; `image[i]` is some transform of
/// `words[i]` with the same length.
pub(crate) fn pair_min(
    words: &[Vec<u8>],
    image: &[Vec<u8>],
    bits: u32,
    alphabet_size: u8,
    pairs: Pairs,
    skip_equal: bool,
) -> Option<PairMin> {
    let m = words.len();
    if m == 0 {
        return None;
    }
    let n = words[0].len();
    if m > PAIRWISE_LIMIT && n * bits as usize <= 64 {
        if let Some(found) = ball_search(words, image, bits, alphabet_size, pairs, skip_equal) {
            return found;
        }
    }
    pairwise(words, image, bits, pairs, skip_equal)
}

fn pairwise(words: &[Vec<u8>], image: &[Vec<u8>], bits: u32, pairs: Pairs, skip_equal: bool) -> Option<PairMin> {
    let packed_words = Packed::new(words, bits);
    let packed_image = Packed::new(image, bits);
    (0..words.len())
        .into_par_iter()
        .map(|i| {
            let start = if pairs == Pairs::Unordered { i + 1 } else { 0 };
            let mut best: Option<PairMin> = None;
            for j in start..words.len() {
                let d = packed_image.distance(i, &packed_words, j);
                if d == 0 && skip_equal {
                    continue;
                }
                best = PairMin::better(best, Some(PairMin { distance: d, i, j }));
            }
            best
        })
        .reduce(|| None, PairMin::better)
}

fn key_of(word: &[u8], bits: u32) -> u64 {
    word.iter().enumerate().fold(0u64, |k, (p, &s)| k | (s as u64) << (bits as usize * p))
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Grows the search radius until some pair is found. Returns `None` (outer)
/// when a radius would cost more than a full pairwise scan.
fn ball_search(
    words: &[Vec<u8>],
    image: &[Vec<u8>],
    bits: u32,
    q: u8,
    pairs: Pairs,
    skip_equal: bool,
) -> Option<Option<PairMin>> {
    let m = words.len();
    let n = words[0].len();
    let index: HashMap<u64, usize> = words.iter().enumerate().map(|(i, w)| (key_of(w, bits), i)).collect();
    let pairwise_cost = (m as f64) * (m as f64) / 2.0;
    for r in 0..=n {
        let cost = m as f64 * binomial(n, r) * ((q - 1) as f64).powi(r as i32);
        if cost > pairwise_cost {
            return None;
        }
        if r == 0 && skip_equal {
            continue;
        }
        let found = (0..m)
            .into_par_iter()
            .map(|i| {
                let mut best: Option<PairMin> = None;
                let mut probe = image[i].clone();
                visit_sphere(&mut probe, 0, r, q, &mut |v| {
                    if let Some(&j) = index.get(&key_of(v, bits)) {
                        let (a, b) = match pairs {
                            Pairs::Ordered => (i, j),
                            Pairs::Unordered if i == j => return,
                            Pairs::Unordered => (i.min(j), i.max(j)),
                        };
                        best = PairMin::better(best, Some(PairMin { distance: r, i: a, j: b }));
                    }
                });
                best
            })
            .reduce(|| None, PairMin::better);
        if found.is_some() {
            return Some(found);
        }
    }
    Some(None)
}

/// Calls `f` on every vector at Hamming distance exactly `r` from `v`,
/// changing only positions at or after `from`. `v` is restored afterwards.
fn visit_sphere(v: &mut Vec<u8>, from: usize, r: usize, q: u8, f: &mut impl FnMut(&[u8])) {
    if r == 0 {
        f(v);
        return;
    }
    let n = v.len();
    for p in from..n {
        if n - p < r {
            break;
        }
        let original = v[p];
        for s in 0..q {
            if s != original {
                v[p] = s;
                visit_sphere(v, p + 1, r - 1, q, f);
            }
        }
        v[p] = original;
    }
}

/// Calls `f` with the index (base `q`, first symbol most significant) of every
/// vector within distance `r` of `word`.
pub(crate) fn visit_ball_indices(word: &[u8], r: usize, q: u8, f: &mut impl FnMut(usize)) {
    let n = word.len();
    let mut weights = vec![1usize; n];
    for p in (0..n.saturating_sub(1)).rev() {
        weights[p] = weights[p + 1] * q as usize;
    }
    let base: usize = word.iter().zip(&weights).map(|(&s, &w)| s as usize * w).sum();
    fn rec(word: &[u8], weights: &[usize], from: usize, r: usize, q: u8, idx: usize, f: &mut impl FnMut(usize)) {
        f(idx);
        if r == 0 {
            return;
        }
        for p in from..word.len() {
            let w = weights[p];
            let orig = word[p] as usize;
            for s in 0..q as usize {
                if s != orig {
                    rec(word, weights, p + 1, r - 1, q, idx - orig * w + s * w, f);
                }
            }
        }
    }
    rec(word, &weights, 0, r, q, base, f);
}

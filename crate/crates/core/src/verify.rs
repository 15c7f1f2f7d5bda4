//! Minimum distances, constraint verification, closure tests and two small
//! search oracles (greedy lexicodes and exact maximum code sizes).

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::codebook::{Alphabet, Codebook};
use crate::dna::{self, DnaString};
use crate::kernel::{self, Pairs};
use crate::{Error, Result};

/// A string transformation used by the reverse-type constraints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DnaOp {
    Reverse,
    Complement,
    ReverseComplement,
}

impl DnaOp {
    /// Applies the operation to a word of DNA symbol indices.
    pub fn apply(self, word: &[u8]) -> Vec<u8> {
        match self {
            DnaOp::Reverse => word.iter().rev().copied().collect(),
            DnaOp::Complement => word.iter().map(|&v| 3 - v).collect(),
            DnaOp::ReverseComplement => word.iter().rev().map(|&v| 3 - v).collect(),
        }
    }

    fn image(self, c: &Codebook) -> Vec<Vec<u8>> {
        c.words().iter().map(|w| self.apply(w)).collect()
    }
}

impl FromStr for DnaOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reverse" | "r" => Ok(DnaOp::Reverse),
            "complement" | "c" => Ok(DnaOp::Complement),
            "reverse_complement" | "reverse-complement" | "rc" => Ok(DnaOp::ReverseComplement),
            _ => Err(Error::InvalidArgument(format!("unknown operation {s:?}"))),
        }
    }
}

/// A pair of codewords (by index) and the distance between them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistancePair {
    pub distance: usize,
    pub i: usize,
    pub j: usize,
}

impl From<kernel::PairMin> for DistancePair {
    fn from(p: kernel::PairMin) -> Self {
        DistancePair { distance: p.distance, i: p.i, j: p.j }
    }
}

/// Minimum Hamming distance over distinct pairs, with the lexicographically
/// first pair attaining it.
pub fn min_hamming_pair(c: &Codebook) -> Result<DistancePair> {
    if c.len() < 2 {
        return Err(Error::InvalidArgument("minimum distance needs at least two words".into()));
    }
    let words = c.words();
    let found = kernel::pair_min(words, words, c.alphabet().bits(), c.alphabet().size(), Pairs::Unordered, false);
    Ok(found.expect("at least one pair exists").into())
}

/// Minimum Hamming distance over distinct pairs. Requires `M ≥ 2`.
pub fn min_hamming_distance(c: &Codebook) -> Result<usize> {
    min_hamming_pair(c).map(|p| p.distance)
}

/// Minimum of `H(op(x), y)` over all ordered pairs of codewords, self-pairs
/// included. With `guarded`, pairs where `op(x) = y` are skipped, as the
/// reverse and reverse-complement constraints require. Returns `None` when
/// every pair is skipped.
///
/// Among minimising pairs the reported one has `x = y` if possible and is
/// otherwise the lexicographically smallest.
pub fn min_op_distance(c: &Codebook, op: DnaOp, guarded: bool) -> Result<Option<DistancePair>> {
    c.require_alphabet(Alphabet::Dna)?;
    let image = op.image(c);
    Ok(kernel::pair_min(c.words(), &image, 2, 4, Pairs::Ordered, guarded).map(Into::into))
}

/// Whether `op(x)` is a codeword for every codeword `x`.
pub fn closure_under(c: &Codebook, op: DnaOp) -> Result<bool> {
    c.require_alphabet(Alphabet::Dna)?;
    Ok(c.words().par_iter().all(|w| c.contains(&op.apply(w))))
}

/// One checkable constraint with its parameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Constraint {
    /// `H(x, y) ≥ d` for distinct codewords.
    Hamming { d: usize },
    /// `H(x^r, y) ≥ d` for all codewords with `x^r ≠ y`.
    Reverse { d: usize },
    /// `H(x^rc, y) ≥ d` for all codewords with `x^rc ≠ y`.
    ReverseComplement { d: usize },
    /// Every codeword has GC-weight `w`.
    FixedGc { w: usize },
    /// All codewords share one GC-weight equal to `⌊n/2⌋` or `⌈n/2⌉`.
    GcContent,
    /// Every codeword is tandem-free with repeat-length `l`.
    TandemFree { l: usize },
    /// No codeword contains a run of `t` identical bases.
    HomopolymerFree { t: usize },
    /// Every codeword is free of secondary-structure stems of length `l`.
    LFreeSecondary { l: usize },
    /// Every codeword is self-uncorrelated and distinct codewords are mutually uncorrelated.
    MutuallyUncorrelated,
    /// Minimum free energies of all codewords lie within `delta` of each other.
    Thermodynamic { delta: f64 },
}

impl Constraint {
    pub fn name(&self) -> &'static str {
        match self {
            Constraint::Hamming { .. } => "hamming",
            Constraint::Reverse { .. } => "reverse",
            Constraint::ReverseComplement { .. } => "reverse_complement",
            Constraint::FixedGc { .. } => "fixed_gc",
            Constraint::GcContent => "gc_content",
            Constraint::TandemFree { .. } => "tandem_free",
            Constraint::HomopolymerFree { .. } => "homopolymer_free",
            Constraint::LFreeSecondary { .. } => "l_free_secondary",
            Constraint::MutuallyUncorrelated => "mutually_uncorrelated",
            Constraint::Thermodynamic { .. } => "thermodynamic",
        }
    }

    pub fn params(&self) -> Value {
        match *self {
            Constraint::Hamming { d } | Constraint::Reverse { d } | Constraint::ReverseComplement { d } => json!({ "d": d }),
            Constraint::FixedGc { w } => json!({ "w": w }),
            Constraint::TandemFree { l } | Constraint::LFreeSecondary { l } => json!({ "l": l }),
            Constraint::HomopolymerFree { t } => json!({ "t": t }),
            Constraint::Thermodynamic { delta } => json!({ "delta": delta }),
            Constraint::GcContent | Constraint::MutuallyUncorrelated => json!({}),
        }
    }

    fn dna_only(&self) -> bool {
        !matches!(self, Constraint::Hamming { .. })
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Constraint::Hamming { d } => write!(f, "hamming:{d}"),
            Constraint::Reverse { d } => write!(f, "rev:{d}"),
            Constraint::ReverseComplement { d } => write!(f, "rc:{d}"),
            Constraint::FixedGc { w } => write!(f, "fixedgc:{w}"),
            Constraint::GcContent => write!(f, "gc"),
            Constraint::TandemFree { l } => write!(f, "tandem:{l}"),
            Constraint::HomopolymerFree { t } => write!(f, "homo:{t}"),
            Constraint::LFreeSecondary { l } => write!(f, "sec:{l}"),
            Constraint::MutuallyUncorrelated => write!(f, "mu"),
            Constraint::Thermodynamic { delta } => write!(f, "thermo:{delta}"),
        }
    }
}

impl FromStr for Constraint {
    type Err = Error;

    /// Parses one `kind[:param]` token, e.g. `rc:3`, `gc`, `thermo:0.5`.
    fn from_str(token: &str) -> Result<Self> {
        let token = token.trim();
        let (kind, param) = match token.split_once(':') {
            Some((k, p)) => (k, Some(p)),
            None => (token, None),
        };
        let bad = |msg: &str| Error::InvalidArgument(format!("constraint {token:?}: {msg}"));
        let int = || -> Result<usize> {
            param
                .ok_or_else(|| bad("missing parameter"))?
                .parse::<usize>()
                .map_err(|_| bad("parameter must be a non-negative integer"))
        };
        let positive = || -> Result<usize> {
            let v = int()?;
            if v == 0 {
                Err(bad("parameter must be positive"))
            } else {
                Ok(v)
            }
        };
        let none = |c: Constraint| -> Result<Constraint> {
            match param {
                None => Ok(c),
                Some(_) => Err(bad("takes no parameter")),
            }
        };
        match kind {
            "hamming" | "ham" => Ok(Constraint::Hamming { d: int()? }),
            "rev" | "reverse" => Ok(Constraint::Reverse { d: int()? }),
            "rc" | "reverse_complement" => Ok(Constraint::ReverseComplement { d: int()? }),
            "fixedgc" | "fixed_gc" => Ok(Constraint::FixedGc { w: int()? }),
            "gc" | "gc_content" => none(Constraint::GcContent),
            "tandem" | "tandem_free" => Ok(Constraint::TandemFree { l: positive()? }),
            "homo" | "homopolymer_free" => Ok(Constraint::HomopolymerFree { t: positive()? }),
            "sec" | "l_free_secondary" => Ok(Constraint::LFreeSecondary { l: positive()? }),
            "mu" | "mutually_uncorrelated" => none(Constraint::MutuallyUncorrelated),
            "thermo" | "thermodynamic" => {
                let delta = param
                    .ok_or_else(|| bad("missing parameter"))?
                    .parse::<f64>()
                    .map_err(|_| bad("parameter must be a number"))?;
                if !(delta >= 0.0 && delta.is_finite()) {
                    return Err(bad("tolerance must be non-negative"));
                }
                Ok(Constraint::Thermodynamic { delta })
            }
            _ => Err(bad("unknown constraint kind")),
        }
    }
}

/// Parses a comma-separated constraint list such as `hamming:3,rc:3,gc`.
pub fn parse_constraints(list: &str) -> Result<Vec<Constraint>> {
    list.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}

/// Evidence for a failed constraint.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    /// The offending word or ordered pair of words.
    pub words: Vec<String>,
    /// The offending measured value (distance, weight, energy gap), when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<i64>,
    pub detail: String,
}

/// Distances measured on a codebook, reported alongside every check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ComputedDistances {
    /// Minimum Hamming distance, when `M ≥ 2`.
    pub min_hamming: Option<usize>,
    /// Minimum `H(x^r, y)` over pairs with `x^r ≠ y` (DNA only).
    pub min_reverse: Option<usize>,
    /// Minimum `H(x^rc, y)` over pairs with `x^rc ≠ y` (DNA only).
    pub min_reverse_complement: Option<usize>,
}

impl ComputedDistances {
    pub fn measure(c: &Codebook) -> Result<Self> {
        let min_hamming = if c.len() >= 2 { Some(min_hamming_distance(c)?) } else { None };
        let (min_reverse, min_reverse_complement) = if c.alphabet() == Alphabet::Dna {
            (
                min_op_distance(c, DnaOp::Reverse, true)?.map(|p| p.distance),
                min_op_distance(c, DnaOp::ReverseComplement, true)?.map(|p| p.distance),
            )
        } else {
            (None, None)
        };
        Ok(ComputedDistances { min_hamming, min_reverse, min_reverse_complement })
    }
}

/// Outcome of checking one constraint. A failed check always has a witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub constraint: String,
    pub params: Value,
    pub pass: bool,
    pub witness: Option<Witness>,
    pub computed: ComputedDistances,
}

/// Checks a single constraint.
pub fn check_constraint(c: &Codebook, spec: Constraint) -> Result<VerificationReport> {
    let computed = ComputedDistances::measure(c)?;
    check_with(c, spec, &computed)
}

/// Checks several constraints, measuring the codebook's distances once.
pub fn verify(c: &Codebook, specs: &[Constraint]) -> Result<Vec<VerificationReport>> {
    for spec in specs {
        if spec.dna_only() {
            c.require_alphabet(Alphabet::Dna)?;
        }
    }
    let computed = ComputedDistances::measure(c)?;
    specs.iter().map(|&s| check_with(c, s, &computed)).collect()
}

fn check_with(c: &Codebook, spec: Constraint, computed: &ComputedDistances) -> Result<VerificationReport> {
    if spec.dna_only() {
        c.require_alphabet(Alphabet::Dna)?;
    }
    let witness = match spec {
        Constraint::Hamming { d } => hamming_witness(c, d)?,
        Constraint::Reverse { d } => op_witness(c, DnaOp::Reverse, d)?,
        Constraint::ReverseComplement { d } => op_witness(c, DnaOp::ReverseComplement, d)?,
        Constraint::FixedGc { w } => {
            let words = c.dna_words()?;
            words.iter().find(|x| x.gc_weight() != w).map(|x| Witness {
                words: vec![x.to_string()],
                value: Some(x.gc_weight() as i64),
                detail: format!("GC-weight {} differs from {w}", x.gc_weight()),
            })
        }
        Constraint::GcContent => gc_content_witness(&c.dna_words()?, c.n()),
        Constraint::TandemFree { l } => word_witness(c, |x| !dna::is_tandem_free(x, l), "contains a tandem repeat")?,
        Constraint::HomopolymerFree { t } => {
            word_witness(c, |x| dna::has_homopolymer_run(x, t), "contains a homopolymer run")?
        }
        Constraint::LFreeSecondary { l } => {
            let words = c.dna_words()?;
            words.iter().find_map(|x| {
                dna::find_secondary_stem(x, l).map(|(i, j)| Witness {
                    words: vec![x.to_string()],
                    value: None,
                    detail: format!("windows at positions {} and {} can pair", i + 1, j + 1),
                })
            })
        }
        Constraint::MutuallyUncorrelated => correlation_witness(&c.dna_words()?),
        Constraint::Thermodynamic { delta } => thermo_witness(&c.dna_words()?, delta),
    };
    Ok(VerificationReport {
        constraint: spec.name().to_string(),
        params: spec.params(),
        pass: witness.is_none(),
        witness,
        computed: computed.clone(),
    })
}

fn hamming_witness(c: &Codebook, d: usize) -> Result<Option<Witness>> {
    if c.len() < 2 {
        return Ok(None);
    }
    let p = min_hamming_pair(c)?;
    Ok((p.distance < d).then(|| Witness {
        words: vec![c.word_string(p.i), c.word_string(p.j)],
        value: Some(p.distance as i64),
        detail: format!("H(x, y) = {} < {d}", p.distance),
    }))
}

fn op_witness(c: &Codebook, op: DnaOp, d: usize) -> Result<Option<Witness>> {
    let label = match op {
        DnaOp::Reverse => "x^r",
        DnaOp::Complement => "x^c",
        DnaOp::ReverseComplement => "x^rc",
    };
    Ok(min_op_distance(c, op, true)?.filter(|p| p.distance < d).map(|p| Witness {
        words: vec![c.word_string(p.i), c.word_string(p.j)],
        value: Some(p.distance as i64),
        detail: format!("H({label}, y) = {} < {d}", p.distance),
    }))
}

fn gc_content_witness(words: &[DnaString], n: usize) -> Option<Witness> {
    let first = words[0].gc_weight();
    if first != n / 2 && first != n.div_ceil(2) {
        return Some(Witness {
            words: vec![words[0].to_string()],
            value: Some(first as i64),
            detail: format!("GC-weight {first} is not ⌊n/2⌋ or ⌈n/2⌉ for n = {n}"),
        });
    }
    words.iter().find(|x| x.gc_weight() != first).map(|x| Witness {
        words: vec![words[0].to_string(), x.to_string()],
        value: Some(x.gc_weight() as i64),
        detail: format!("GC-weights {first} and {} differ", x.gc_weight()),
    })
}

fn word_witness(c: &Codebook, bad: impl Fn(&DnaString) -> bool, detail: &str) -> Result<Option<Witness>> {
    Ok(c.dna_words()?.iter().find(|x| bad(x)).map(|x| Witness {
        words: vec![x.to_string()],
        value: None,
        detail: detail.to_string(),
    }))
}

fn correlation_witness(words: &[DnaString]) -> Option<Witness> {
    if let Some(x) = words.iter().find(|x| !dna::is_self_uncorrelated(x)) {
        return Some(Witness {
            words: vec![x.to_string()],
            value: None,
            detail: format!("x∘x = {:?} is not (1, 0, …, 0)", dna::correlation(x, x)),
        });
    }
    for (i, x) in words.iter().enumerate() {
        for (j, y) in words.iter().enumerate() {
            if i != j {
                let corr = dna::correlation(x, y);
                if corr.contains(&1) {
                    return Some(Witness {
                        words: vec![x.to_string(), y.to_string()],
                        value: None,
                        detail: format!("x∘y = {corr:?} is not zero"),
                    });
                }
            }
        }
    }
    None
}

fn thermo_witness(words: &[DnaString], delta: f64) -> Option<Witness> {
    let energies: Vec<i32> = words.par_iter().map(dna::min_free_energy).collect();
    let (lo, hi) = energies.iter().enumerate().fold((0, 0), |(lo, hi), (i, &e)| {
        (if e < energies[lo] { i } else { lo }, if e > energies[hi] { i } else { hi })
    });
    let gap = energies[hi] - energies[lo];
    (gap as f64 > delta).then(|| Witness {
        words: vec![words[lo].to_string(), words[hi].to_string()],
        value: Some(gap as i64),
        detail: format!(
            "free energies {} and {} differ by {gap} > {delta}",
            energies[lo], energies[hi]
        ),
    })
}

fn check_search_args(n: usize, d: usize, q: u8, max_n: usize) -> Result<()> {
    if q != 2 && q != 4 {
        return Err(Error::InvalidArgument(format!("alphabet size must be 2 or 4, got {q}")));
    }
    if n == 0 || n > max_n {
        return Err(Error::InvalidArgument(format!("length {n} outside 1..={max_n}")));
    }
    if d == 0 || d > n {
        return Err(Error::InvalidArgument(format!("distance {d} outside 1..={n}")));
    }
    Ok(())
}

fn decode(index: usize, n: usize, q: u8) -> Vec<u8> {
    let q = q as usize;
    let mut w = vec![0u8; n];
    let mut x = index;
    for p in (0..n).rev() {
        w[p] = (x % q) as u8;
        x /= q;
    }
    w
}

/// Runs the lexicographic greedy search, calling `accept` with each chosen
/// word index (base `q`, first symbol most significant).
fn lexicode_indices(n: usize, d: usize, q: u8, mut accept: impl FnMut(usize)) -> Result<()> {
    let max_n = if q == 2 { 20 } else { 12 };
    check_search_args(n, d, q, max_n)?;
    let total = (q as usize).pow(n as u32);
    let mut covered = vec![0u64; total.div_ceil(64)];
    for idx in 0..total {
        if covered[idx / 64] >> (idx % 64) & 1 == 1 {
            continue;
        }
        accept(idx);
        let word = decode(idx, n, q);
        kernel::visit_ball_indices(&word, d - 1, q, &mut |j| covered[j / 64] |= 1 << (j % 64));
    }
    Ok(())
}

/// Greedy lexicode: scan all words of length `n` over `{0, …, q−1}` in
/// lexicographic order and keep each word at distance `≥ d` from all kept
/// words. DNA symbols are used for `q = 4`, bits for `q = 2`.
pub fn greedy_lexicode(n: usize, d: usize, q: u8) -> Result<Codebook> {
    let mut words = Vec::new();
    lexicode_indices(n, d, q, |idx| words.push(decode(idx, n, q)))?;
    let alphabet = if q == 2 { Alphabet::Binary } else { Alphabet::Dna };
    Codebook::new(alphabet, words)
}

/// Size of [`greedy_lexicode`] without materialising the words.
pub fn greedy_lexicode_size(n: usize, d: usize, q: u8) -> Result<usize> {
    let mut count = 0;
    lexicode_indices(n, d, q, |_| count += 1)?;
    Ok(count)
}

/// Exact maximum size of a code of length `n ≤ 3` and minimum distance `d`
/// over an alphabet of size `q ∈ {2, 4}`, found as a maximum clique in the
/// graph joining words at distance `≥ d`.
pub fn max_code_size_exact(n: usize, d: usize, q: u8) -> Result<usize> {
    check_search_args(n, d, q, 3)?;
    let total = (q as usize).pow(n as u32);
    let words: Vec<Vec<u8>> = (0..total).map(|i| decode(i, n, q)).collect();
    let adj: Vec<u64> = (0..total)
        .map(|i| {
            (0..total)
                .filter(|&j| j != i && crate::hamming(&words[i], &words[j]).unwrap_or(0) >= d)
                .fold(0u64, |m, j| m | 1 << j)
        })
        .collect();
    let all = if total == 64 { u64::MAX } else { (1u64 << total) - 1 };
    let mut best = 0;
    max_clique(&adj, all, 0, &mut best);
    Ok(best)
}

/// Branch and bound with a greedy colouring bound.
fn max_clique(adj: &[u64], candidates: u64, size: usize, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    // Colour the candidates greedily; `order` lists vertices by colour class.
    let mut order = Vec::with_capacity(candidates.count_ones() as usize);
    let mut uncoloured = candidates;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut available = uncoloured;
        while available != 0 {
            let v = available.trailing_zeros() as usize;
            available &= !(1u64 << v) & !adj[v];
            uncoloured &= !(1u64 << v);
            order.push((v, colour));
        }
    }
    let mut remaining = candidates;
    for &(v, c) in order.iter().rev() {
        if size + c <= *best {
            return;
        }
        max_clique(adj, remaining & adj[v], size + 1, best);
        remaining &= !(1u64 << v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(words: &[&str]) -> Codebook {
        Codebook::from_dna_strs(words).unwrap()
    }

    #[test]
    fn minimum_distances() {
        assert_eq!(min_hamming_distance(&code(&["AACC", "CCTT", "AGGT"])).unwrap(), 3);
        assert_eq!(min_hamming_distance(&code(&["AA", "TT"])).unwrap(), 2);
        let bin = Codebook::new(Alphabet::Binary, vec![vec![0, 0, 0, 0], vec![0, 0, 1, 1], vec![1, 1, 1, 1]]).unwrap();
        assert_eq!(min_hamming_distance(&bin).unwrap(), 2);
        assert!(min_hamming_distance(&code(&["ACGT"])).is_err());
    }

    #[test]
    fn constraint_examples() {
        let c = code(&["AACC", "CCTT", "AGGT"]);
        let check = |s: &str| check_constraint(&c, s.parse().unwrap()).unwrap();
        assert!(check("rev:2").pass);
        assert!(check("rc:2").pass);
        assert!(check("fixedgc:2").pass);
        assert!(check("hamming:3").pass);
        assert!(!check("hamming:4").pass);
        let fail = check("rev:3");
        assert!(!fail.pass);
        let w = fail.witness.unwrap();
        assert_eq!(w.words, ["AGGT", "AGGT"]);
        assert_eq!(w.value, Some(2));
        assert_eq!(fail.computed.min_hamming, Some(3));
        assert_eq!(fail.computed.min_reverse, Some(2));
        let mu = code(&["ACAGT", "AGCAT", "ACGCG"]);
        assert!(check_constraint(&mu, Constraint::MutuallyUncorrelated).unwrap().pass);
    }

    #[test]
    fn word_level_constraints() {
        let c = code(&["ACGT", "AACT"]);
        assert!(!check_constraint(&c, "tandem:1".parse().unwrap()).unwrap().pass);
        assert!(!check_constraint(&c, "homo:2".parse().unwrap()).unwrap().pass);
        assert!(check_constraint(&c, "homo:3".parse().unwrap()).unwrap().pass);
        assert!(!check_constraint(&c, "gc".parse().unwrap()).unwrap().pass);
        let g = code(&["ACGT", "GGAA"]);
        assert!(check_constraint(&g, Constraint::GcContent).unwrap().pass);
        let e = code(&["ACGT", "CCCC"]);
        let t = check_constraint(&e, "thermo:0".parse().unwrap()).unwrap();
        assert!(!t.pass);
        assert_eq!(t.witness.unwrap().value, Some(4));
        assert!(check_constraint(&e, "thermo:4".parse().unwrap()).unwrap().pass);
    }

    #[test]
    fn constraint_parsing() {
        let list = parse_constraints("hamming:3,rc:3,gc,tandem:2,sec:3,thermo:0").unwrap();
        assert_eq!(list.len(), 6);
        assert_eq!(list[2], Constraint::GcContent);
        assert!("gc:2".parse::<Constraint>().is_err());
        assert!("rc".parse::<Constraint>().is_err());
        assert!("tandem:0".parse::<Constraint>().is_err());
        assert!("bogus:1".parse::<Constraint>().is_err());
        for c in &list {
            assert_eq!(&c.to_string().parse::<Constraint>().unwrap(), c);
        }
    }

    #[test]
    fn dna_constraints_need_dna() {
        let bin = Codebook::new(Alphabet::Binary, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(matches!(
            check_constraint(&bin, Constraint::Reverse { d: 1 }),
            Err(Error::WrongAlphabet { .. })
        ));
        assert!(check_constraint(&bin, Constraint::Hamming { d: 2 }).unwrap().pass);
    }

    #[test]
    fn closure() {
        assert!(!closure_under(&code(&["AA"]), DnaOp::Complement).unwrap());
        assert!(closure_under(&code(&["AA", "TT"]), DnaOp::Complement).unwrap());
        assert!(closure_under(&code(&["AC", "CA"]), DnaOp::Reverse).unwrap());
    }

    #[test]
    fn search_oracles() {
        assert_eq!(greedy_lexicode_size(1, 1, 4).unwrap(), 4);
        assert_eq!(greedy_lexicode_size(4, 4, 4).unwrap(), 4);
        let c = greedy_lexicode(2, 2, 2).unwrap();
        assert_eq!(c.to_text(), "# n=2 M=2 alphabet=binary\n00\n11\n");
        assert_eq!(max_code_size_exact(2, 2, 4).unwrap(), 4);
        assert_eq!(max_code_size_exact(3, 3, 4).unwrap(), 4);
        assert_eq!(max_code_size_exact(1, 1, 2).unwrap(), 2);
        assert_eq!(max_code_size_exact(3, 2, 4).unwrap(), 16);
        assert_eq!(max_code_size_exact(3, 1, 4).unwrap(), 64);
        assert_eq!(max_code_size_exact(3, 2, 2).unwrap(), 4);
        assert!(max_code_size_exact(4, 2, 4).is_err());
        assert!(greedy_lexicode(13, 2, 4).is_err());
    }
}

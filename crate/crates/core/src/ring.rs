//! Arithmetic in the chain ring `R = Z4 + uZ4` with `u² = 2 + 2u`, vectors
//! and generator matrices over it.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::codebook::{Alphabet, Codebook};
use crate::{Error, Result};

/// Largest span the enumerator will materialise.
pub const MAX_SPAN_SIZE: u64 = 1 << 24;

/// The element `a + b·u` of `R`, with `a, b ∈ Z4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RingElement {
    a: u8,
    b: u8,
}

/// Position of a nonzero element in the ideal chain
/// `R ⊃ ⟨u⟩ ⊃ ⟨2⟩ ⊃ ⟨2u⟩ ⊃ 0`: the smallest ideal containing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdealClass {
    /// `2u`.
    TwoU,
    /// `2` and `2 + 2u`.
    Two,
    /// `u`, `2 + u`, `3u`, `2 + 3u`.
    U,
    /// The eight units (odd `a`).
    Unit,
}

impl RingElement {
    pub const ZERO: RingElement = RingElement { a: 0, b: 0 };
    pub const ONE: RingElement = RingElement { a: 1, b: 0 };
    pub const U: RingElement = RingElement { a: 0, b: 1 };

    /// `a + b·u`, reducing both coefficients mod 4.
    pub const fn new(a: u8, b: u8) -> RingElement {
        RingElement { a: a % 4, b: b % 4 }
    }

    /// All 16 elements in canonical order (index `4a + b`).
    pub fn all() -> impl Iterator<Item = RingElement> {
        (0..16u8).map(RingElement::from_index)
    }

    /// Canonical index `4a + b`.
    pub fn index(self) -> u8 {
        4 * self.a + self.b
    }

    /// Inverse of [`RingElement::index`]. Panics if `index >= 16`.
    pub fn from_index(index: u8) -> RingElement {
        assert!(index < 16, "ring element index out of range: {index}");
        RingElement { a: index / 4, b: index % 4 }
    }

    pub fn a(self) -> u8 {
        self.a
    }

    pub fn b(self) -> u8 {
        self.b
    }

    pub fn is_zero(self) -> bool {
        self == RingElement::ZERO
    }

    pub fn is_unit(self) -> bool {
        self.a % 2 == 1
    }

    /// Ideal class of a nonzero element; `None` for zero.
    pub fn ideal_class(self) -> Option<IdealClass> {
        match (self.a, self.b) {
            (0, 0) => None,
            (0, 2) => Some(IdealClass::TwoU),
            (a, b) if a % 2 == 0 && b % 2 == 0 => Some(IdealClass::Two),
            (a, _) if a % 2 == 0 => Some(IdealClass::U),
            _ => Some(IdealClass::Unit),
        }
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, o: RingElement) -> RingElement {
        RingElement::new(self.a + o.a, self.b + o.b)
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement::new(4 - self.a, 4 - self.b)
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, o: RingElement) -> RingElement {
        self + (-o)
    }
}

impl Mul for RingElement {
    type Output = RingElement;
    /// `(a + bu)(c + du) = (ac + 2bd) + (ad + bc + 2bd)u`.
    fn mul(self, o: RingElement) -> RingElement {
        let (a, b, c, d) = (self.a as u32, self.b as u32, o.a as u32, o.b as u32);
        let bd2 = 2 * b * d;
        RingElement::new(((a * c + bd2) % 4) as u8, ((a * d + b * c + bd2) % 4) as u8)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let upart = match self.b {
            0 => String::new(),
            1 => "u".to_string(),
            b => format!("{b}u"),
        };
        match (self.a, self.b) {
            (0, 0) => f.write_str("0"),
            (a, 0) => write!(f, "{a}"),
            (0, _) => f.write_str(&upart),
            (a, _) => write!(f, "{a}+{upart}"),
        }
    }
}

impl FromStr for RingElement {
    type Err = Error;

    /// Accepts exactly the canonical spellings produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        RingElement::all()
            .find(|e| e.to_string() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("not a canonical ring element: {s:?}")))
    }
}

/// A vector over `R`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingVector(pub Vec<RingElement>);

impl RingVector {
    pub fn zero(n: usize) -> RingVector {
        RingVector(vec![RingElement::ZERO; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[RingElement] {
        &self.0
    }

    /// Componentwise sum; panics on length mismatch.
    pub fn add(&self, other: &RingVector) -> RingVector {
        assert_eq!(self.len(), other.len(), "ring vector length mismatch");
        RingVector(self.0.iter().zip(&other.0).map(|(&x, &y)| x + y).collect())
    }

    pub fn scale(&self, c: RingElement) -> RingVector {
        RingVector(self.0.iter().map(|&x| c * x).collect())
    }

    /// `(x_n, …, x_1)`.
    pub fn reverse(&self) -> RingVector {
        RingVector(self.0.iter().rev().copied().collect())
    }

    pub fn indices(&self) -> Vec<u8> {
        self.0.iter().map(|e| e.index()).collect()
    }

    pub fn from_indices(indices: &[u8]) -> RingVector {
        RingVector(indices.iter().map(|&i| RingElement::from_index(i)).collect())
    }
}

impl fmt::Display for RingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for RingVector {
    type Err = Error;

    /// Whitespace-separated canonical elements, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let elems = inner
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<RingElement>>>()?;
        if elems.is_empty() {
            return Err(Error::Empty);
        }
        Ok(RingVector(elems))
    }
}

/// A `k × n` generator matrix over `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingGeneratorMatrix {
    rows: Vec<RingVector>,
}

impl RingGeneratorMatrix {
    pub fn new(rows: Vec<RingVector>) -> Result<Self> {
        let n = rows.first().map(RingVector::len).ok_or(Error::Empty)?;
        if n == 0 {
            return Err(Error::Empty);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                left: n,
                right: bad.len(),
            });
        }
        Ok(RingGeneratorMatrix { rows })
    }

    /// Parses rows separated by `;` or newlines, e.g. `"1 1 1; 0 u u"`.
    pub fn parse(s: &str) -> Result<Self> {
        let rows = s
            .split([';', '\n'])
            .filter(|r| !r.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<RingVector>>>()?;
        RingGeneratorMatrix::new(rows)
    }

    pub fn rows(&self) -> &[RingVector] {
        &self.rows
    }

    /// Number of rows `k`.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Row length `n`.
    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    /// Distinct multiples `a·g` of row `g` over all `a ∈ R`.
    fn row_orbit(row: &RingVector) -> Vec<Vec<u8>> {
        let mut seen: Vec<Vec<u8>> = RingElement::all().map(|a| row.scale(a).indices()).collect();
        seen.sort();
        seen.dedup();
        seen
    }

    /// Upper bound on the span size: the product of the row orbit sizes.
    pub fn span_size_bound(&self) -> u128 {
        self.rows
            .iter()
            .map(|r| Self::row_orbit(r).len() as u128)
            .fold(1u128, |acc, s| acc.saturating_mul(s))
    }
}

/// All `R`-linear combinations of the rows of `g`, as a ring codebook in
/// canonical order.
///
/// The span is built one row at a time as a sumset, so the work is bounded by
/// the product of the row orbit sizes rather than by `16^k`. Spans whose bound
/// exceeds [`MAX_SPAN_SIZE`] are rejected.
pub fn span(g: &RingGeneratorMatrix) -> Result<Codebook> {
    let bound = g.span_size_bound();
    if bound > MAX_SPAN_SIZE as u128 {
        return Err(Error::TooLarge(format!(
            "span may contain up to {bound} vectors (limit {MAX_SPAN_SIZE})"
        )));
    }
    let n = g.n();
    let mut current: Vec<Vec<u8>> = vec![vec![0; n]];
    for row in g.rows() {
        let orbit = RingGeneratorMatrix::row_orbit(row);
        let mut seen: HashSet<Vec<u8>> = HashSet::with_capacity(current.len() * orbit.len());
        let mut next = Vec::with_capacity(current.len() * orbit.len());
        for s in &current {
            for o in &orbit {
                let v: Vec<u8> = s
                    .iter()
                    .zip(o)
                    .map(|(&x, &y)| (RingElement::from_index(x) + RingElement::from_index(y)).index())
                    .collect();
                if seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        current = next;
    }
    Codebook::new(Alphabet::RingR, current)
}

/// Block sizes `{k0, k1, k2, k3}` of a generator matrix in standard form; the
/// span then has `16^k0 · 8^k1 · 4^k2 · 2^k3` elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MatrixType {
    pub k0: usize,
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
}

impl MatrixType {
    /// `log2` of the span size.
    pub fn log2_size(&self) -> usize {
        4 * self.k0 + 3 * self.k1 + 2 * self.k2 + self.k3
    }

    /// Span size, or `None` if it does not fit in a `u128`.
    pub fn size(&self) -> Option<u128> {
        1u128.checked_shl(self.log2_size() as u32)
    }
}

/// Recognises a matrix already in block-triangular standard form: leading
/// blocks `I`, `uI`, `2I`, `2uI` in that order, each followed by entries from
/// the ideal generated by its pivot. No row reduction is attempted.
pub fn type_of_standard_form(g: &RingGeneratorMatrix) -> Result<MatrixType> {
    let pivots = [
        RingElement::ONE,
        RingElement::U,
        RingElement::new(2, 0),
        RingElement::new(0, 2),
    ];
    // Membership in ⟨1⟩, ⟨u⟩, ⟨2⟩, ⟨2u⟩.
    let in_ideal = |class: usize, e: RingElement| match class {
        0 => true,
        1 => e.a().is_multiple_of(2),
        2 => e.a().is_multiple_of(2) && e.b().is_multiple_of(2),
        _ => e.a() == 0 && e.b().is_multiple_of(2),
    };
    let shape = |msg: String| Error::UnsupportedShape(msg);
    let mut counts = [0usize; 4];
    let mut last_class = 0usize;
    for (t, row) in g.rows().iter().enumerate() {
        let el = row.elements();
        if t >= el.len() {
            return Err(shape(format!("row {} has no pivot column", t + 1)));
        }
        if el[..t].iter().any(|e| !e.is_zero()) {
            return Err(shape(format!("row {} is nonzero left of column {}", t + 1, t + 1)));
        }
        let class = pivots
            .iter()
            .position(|&p| p == el[t])
            .ok_or_else(|| shape(format!("row {} pivot {} is not 1, u, 2 or 2u", t + 1, el[t])))?;
        if class < last_class {
            return Err(shape(format!("row {} breaks the block order", t + 1)));
        }
        last_class = class;
        counts[class] += 1;
        for (col, &e) in el.iter().enumerate().skip(t + 1) {
            if !in_ideal(class, e) {
                return Err(shape(format!(
                    "entry {e} in row {}, column {} lies outside the ideal of its pivot",
                    t + 1,
                    col + 1
                )));
            }
        }
    }
    // Identity blocks: a pivot column is zero in the earlier rows of its block.
    let rows = g.rows();
    let class_of = |t: usize| pivots.iter().position(|&p| p == rows[t].elements()[t]);
    for t in 0..rows.len() {
        for s in 0..t {
            if class_of(s) == class_of(t) && !rows[s].elements()[t].is_zero() {
                return Err(shape(format!(
                    "pivot column {} is not cleared in row {}",
                    t + 1,
                    s + 1
                )));
            }
        }
    }
    Ok(MatrixType {
        k0: counts[0],
        k1: counts[1],
        k2: counts[2],
        k3: counts[3],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> RingElement {
        s.parse().unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(e("3u") + e("2"), e("2+3u"));
        assert_eq!(e("2+2u") + e("2+2u"), e("0"));
        assert_eq!(e("1+u") + e("3+3u"), e("0"));
    }

    #[test]
    fn multiplication() {
        assert_eq!(e("u") * e("u"), e("2+2u"));
        assert_eq!(e("3u") * e("2u"), e("0"));
        assert_eq!(e("3") * e("3"), e("1"));
    }

    #[test]
    fn ring_axioms_exhaustive() {
        for x in RingElement::all() {
            assert_eq!(x + (-x), RingElement::ZERO);
            assert_eq!(x * RingElement::ONE, x);
            for y in RingElement::all() {
                assert_eq!(x * y, y * x);
                for z in RingElement::all() {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn units_and_zero_divisors() {
        let units: Vec<String> = RingElement::all().filter(|x| x.is_unit()).map(|x| x.to_string()).collect();
        assert_eq!(units, ["1", "1+u", "1+2u", "1+3u", "3", "3+u", "3+2u", "3+3u"]);
        for x in RingElement::all() {
            let invertible = RingElement::all().any(|y| x * y == RingElement::ONE);
            assert_eq!(invertible, x.is_unit());
        }
    }

    #[test]
    fn canonical_text_round_trip() {
        for x in RingElement::all() {
            assert_eq!(x.to_string().parse::<RingElement>().unwrap(), x);
        }
        assert!("1u".parse::<RingElement>().is_err());
        assert!("u+1".parse::<RingElement>().is_err());
        assert!("4".parse::<RingElement>().is_err());
    }

    #[test]
    fn ideal_classes() {
        use IdealClass::*;
        let class = |s: &str| e(s).ideal_class();
        assert_eq!(class("0"), None);
        assert_eq!(class("2u"), Some(TwoU));
        assert_eq!(class("2"), Some(Two));
        assert_eq!(class("2+2u"), Some(Two));
        for s in ["u", "2+u", "3u", "2+3u"] {
            assert_eq!(class(s), Some(U));
        }
        assert_eq!(class("3+2u"), Some(Unit));
    }

    #[test]
    fn span_sizes_of_small_examples() {
        let g = RingGeneratorMatrix::parse("1 0 3").unwrap();
        assert_eq!(span(&g).unwrap().len(), 16);
        let g = RingGeneratorMatrix::parse("u u u").unwrap();
        assert_eq!(span(&g).unwrap().len(), 8);
        let g = RingGeneratorMatrix::parse("1 1 1 1 1; 0 u u u u; 0 0 2 2 2; 0 0 0 2u 2u").unwrap();
        assert_eq!(span(&g).unwrap().len(), 1024);
    }

    #[test]
    fn standard_form_types() {
        let t = |s: &str| type_of_standard_form(&RingGeneratorMatrix::parse(s).unwrap());
        let four = t("1 1 1 1 1; 0 u u u u; 0 0 2 2 2; 0 0 0 2u 2u").unwrap();
        assert_eq!(four, MatrixType { k0: 1, k1: 1, k2: 1, k3: 1 });
        assert_eq!(four.size(), Some(1024));
        assert_eq!(t("1 0 3").unwrap(), MatrixType { k0: 1, k1: 0, k2: 0, k3: 0 });
        assert_eq!(t("u u u").unwrap(), MatrixType { k0: 0, k1: 1, k2: 0, k3: 0 });
        assert!(matches!(t("3 1 1"), Err(Error::UnsupportedShape(_))));
        assert!(matches!(t("u 1 1"), Err(Error::UnsupportedShape(_))));
        assert!(matches!(t("1 0 0; 0 1 0; 0 0 0"), Err(Error::UnsupportedShape(_))));
        assert!(matches!(t("2 1"), Err(Error::UnsupportedShape(_))));
    }

    #[test]
    fn span_guard() {
        let g = RingGeneratorMatrix::parse("1 0 0 0 0 0 0; 0 1 0 0 0 0 0; 0 0 1 0 0 0 0; 0 0 0 1 0 0 0; 0 0 0 0 1 0 0; 0 0 0 0 0 1 0; 0 0 0 0 0 0 1").unwrap();
        assert!(matches!(span(&g), Err(Error::TooLarge(_))));
    }
}

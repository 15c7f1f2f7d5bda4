//! Bounds on the maximum size of DNA codes.
//!
//! Notation: `A_4(n, d)` is the largest DNA code of length `n` and minimum
//! distance `d`; superscripts `r`, `rc`, `GC` and `Homo` add the reverse,
//! reverse-complement, fixed GC-weight `w` and homopolymer-free constraints.
//! `A_2` and `A_3` are the binary and ternary analogues.
//!
//! Every bound is evaluated as an exact rational and rounded once at the end:
//! upper bounds down, lower bounds up.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{Error, Result};

/// Whether a bound limits code sizes from above or from below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Upper,
    Lower,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
        })
    }
}

/// Value of one bound. When `applicable` is false no value is reported and
/// `reason` says which side condition failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundResult {
    pub name: String,
    pub direction: Direction,
    pub exact: Option<BigRational>,
    /// `⌊exact⌋` for upper bounds, `⌈exact⌉` for lower bounds.
    pub integer_bound: Option<BigInt>,
    pub applicable: bool,
    pub reason: Option<String>,
}

impl BoundResult {
    fn value(name: &str, direction: Direction, exact: BigRational) -> Self {
        let integer_bound = match direction {
            Direction::Upper => exact.floor().to_integer(),
            Direction::Lower => exact.ceil().to_integer(),
        };
        BoundResult {
            name: name.to_string(),
            direction,
            exact: Some(exact),
            integer_bound: Some(integer_bound),
            applicable: true,
            reason: None,
        }
    }

    fn not_applicable(name: &str, direction: Direction, reason: String) -> Self {
        BoundResult {
            name: name.to_string(),
            direction,
            exact: None,
            integer_bound: None,
            applicable: false,
            reason: Some(reason),
        }
    }

    /// The exact value as `p/q`.
    pub fn exact_string(&self) -> Option<String> {
        self.exact.as_ref().map(|r| format!("{}/{}", r.numer(), r.denom()))
    }

    /// The integer bound as a `u64`, when it fits.
    pub fn bound_u64(&self) -> Option<u64> {
        self.integer_bound.as_ref().and_then(ToPrimitive::to_u64)
    }

    /// `{name, direction, exact, bound, applicable}` plus `reason` when not applicable.
    pub fn to_json(&self) -> Value {
        let bound = match &self.integer_bound {
            None => Value::Null,
            Some(b) => b.to_i64().map_or_else(|| Value::String(b.to_string()), Value::from),
        };
        let mut v = json!({
            "name": self.name,
            "direction": self.direction,
            "exact": self.exact_string(),
            "bound": bound,
            "applicable": self.applicable,
        });
        if let Some(reason) = &self.reason {
            v["reason"] = Value::String(reason.clone());
        }
        v
    }
}

fn binom(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn pow(base: u32, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn check_nd(n: usize, d: usize) -> Result<()> {
    if n == 0 || d == 0 || d > n {
        return Err(Error::InvalidArgument(format!("need 1 <= d <= n, got n={n}, d={d}")));
    }
    Ok(())
}

fn check_ndw(n: usize, d: usize, w: usize) -> Result<()> {
    check_nd(n, d)?;
    if w > n {
        return Err(Error::InvalidArgument(format!("need 0 <= w <= n, got n={n}, w={w}")));
    }
    Ok(())
}

/// Size of a Hamming ball of radius `r` in `{A,C,G,T}^n`.
fn ball_volume(n: usize, r: usize) -> BigUint {
    (0..=r.min(n)).map(|i| binom(n, i) * pow(3, i)).sum()
}

/// `A_4(n, d) ≤ 4^n / Σ_{i ≤ ⌊(d−1)/2⌋} C(n, i) 3^i`.
pub fn sphere_packing(n: usize, d: usize) -> Result<BoundResult> {
    check_nd(n, d)?;
    Ok(BoundResult::value("sphere_packing", Direction::Upper, ratio(pow(4, n), ball_volume(n, (d - 1) / 2))))
}

/// `A_4(n, d) ≥ 4^n / Σ_{i ≤ d−1} C(n, i) 3^i`.
pub fn gilbert_varshamov(n: usize, d: usize) -> Result<BoundResult> {
    check_nd(n, d)?;
    Ok(BoundResult::value("gilbert_varshamov", Direction::Lower, ratio(pow(4, n), ball_volume(n, d - 1))))
}

/// `A_4(n, d) ≤ 4^(n−d+1)`.
pub fn singleton(n: usize, d: usize) -> Result<BoundResult> {
    check_nd(n, d)?;
    Ok(BoundResult::value("singleton", Direction::Upper, ratio(pow(4, n - d + 1), BigUint::one())))
}

/// `A_4(n, d) ≤ 4d / (4d − 3n)` when `4d > 3n`.
pub fn plotkin(n: usize, d: usize) -> Result<BoundResult> {
    check_nd(n, d)?;
    if 4 * d <= 3 * n {
        return Ok(BoundResult::not_applicable(
            "plotkin",
            Direction::Upper,
            format!("requires 4d > 3n, got 4d={} and 3n={}", 4 * d, 3 * n),
        ));
    }
    Ok(BoundResult::value(
        "plotkin",
        Direction::Upper,
        ratio(BigUint::from(4 * d), BigUint::from(4 * d - 3 * n)),
    ))
}

/// `A_4^GC(n, d, w) ≤ 2nd / (2nd − (n² + 2nw − 2w²))` when `2nd > n² + 2nw − 2w²`.
pub fn gc_plotkin(n: usize, d: usize, w: usize) -> Result<BoundResult> {
    check_ndw(n, d, w)?;
    let lhs = 2 * n * d;
    let rhs = n * n + 2 * n * w - 2 * w * w;
    if lhs <= rhs {
        return Ok(BoundResult::not_applicable(
            "gc_plotkin",
            Direction::Upper,
            format!("requires 2nd > n^2 + 2nw - 2w^2, got {lhs} <= {rhs}"),
        ));
    }
    Ok(BoundResult::value(
        "gc_plotkin",
        Direction::Upper,
        ratio(BigUint::from(lhs), BigUint::from(lhs - rhs)),
    ))
}

/// `Σ_{r<d} Σ_{i ≤ min(⌊r/2⌋, w, n−w)} C(w,i) C(n−w,i) C(n−2i, r−2i) 4^i`,
/// the size of a radius-`(d−1)` ball inside the GC-weight-`w` shell.
pub fn gc_ball_volume(n: usize, d: usize, w: usize) -> BigUint {
    let mut total = BigUint::zero();
    for r in 0..d {
        for i in 0..=(r / 2).min(w).min(n - w) {
            if r - 2 * i > n - 2 * i {
                continue;
            }
            total += binom(w, i) * binom(n - w, i) * binom(n - 2 * i, r - 2 * i) * pow(4, i);
        }
    }
    total
}

/// `A_4^GC(n, d, w) ≥ C(n, w) 2^n / gc_ball_volume(n, d, w)`.
pub fn gc_gilbert(n: usize, d: usize, w: usize) -> Result<BoundResult> {
    check_ndw(n, d, w)?;
    Ok(BoundResult::value(
        "gc_gilbert",
        Direction::Lower,
        ratio(binom(n, w) * pow(2, n), gc_ball_volume(n, d, w)),
    ))
}

/// Largest `n` for which [`v_count`] enumerates.
pub const V_COUNT_MAX_N: usize = 8;

/// Number of DNA strings `x` of length `n` with `H(x, x^rc) = r` and GC-weight `w`.
pub fn v_count(n: usize, r: usize, w: usize) -> Result<u64> {
    Ok(v_table(n)?.get(&(r, w)).copied().unwrap_or(0))
}

/// Counts for every `(r, w)` at once.
pub fn v_table(n: usize) -> Result<BTreeMap<(usize, usize), u64>> {
    if n == 0 || n > V_COUNT_MAX_N {
        return Err(Error::TooLarge(format!("n must be in 1..={V_COUNT_MAX_N}, got {n}")));
    }
    let mut table = BTreeMap::new();
    let mut x = vec![0u8; n];
    for idx in 0..(1usize << (2 * n)) {
        for (p, s) in x.iter_mut().enumerate() {
            *s = (idx >> (2 * p) & 3) as u8;
        }
        let r = (0..n).filter(|&p| x[p] != 3 - x[n - 1 - p]).count();
        let w = x.iter().filter(|&&s| s == 1 || s == 2).count();
        *table.entry((r, w)).or_insert(0) += 1;
    }
    Ok(table)
}

/// `A_4^{rc,GC}(n, d, w) ≥ Σ_{r ≥ d} V(n, r, w) / (2 · gc_ball_volume(n, d, w))`.
pub fn gc_rc_gilbert(n: usize, d: usize, w: usize) -> Result<BoundResult> {
    check_ndw(n, d, w)?;
    let table = v_table(n)?;
    let numerator: u64 = (d..=n).map(|r| table.get(&(r, w)).copied().unwrap_or(0)).sum();
    Ok(BoundResult::value(
        "gc_rc_gilbert",
        Direction::Lower,
        ratio(BigUint::from(numerator), BigUint::from(2u32) * gc_ball_volume(n, d, w)),
    ))
}

/// `B(n, w)` with `v = min(w, n − w) ≥ 1`:
/// `Σ_{j<v} 2^(2v+1−2j) C(v−1, j) C(n−v, v−j) + Σ_{j<v−1} 2^(2v−1−2j) C(v−1, j) C(n−v−1, v−j−2)`,
/// the number of homopolymer-free DNA strings of length `n` and GC-weight `w`.
pub fn b_count(n: usize, w: usize) -> Result<BigUint> {
    if w > n {
        return Err(Error::InvalidArgument(format!("need w <= n, got n={n}, w={w}")));
    }
    let v = w.min(n - w);
    if v == 0 {
        return Err(Error::InvalidArgument(format!("need 1 <= w <= n-1, got n={n}, w={w}")));
    }
    let first: BigUint = (0..v)
        .map(|j| pow(2, 2 * v + 1 - 2 * j) * binom(v - 1, j) * binom(n - v, v - j))
        .sum();
    let second: BigUint = (0..v.saturating_sub(1))
        .map(|j| pow(2, 2 * v - 1 - 2 * j) * binom(v - 1, j) * binom(n - v - 1, v - j - 2))
        .sum();
    Ok(first + second)
}

/// `A_4^{GC,Homo}(n, d, w) ≥ B(n, w) / gc_ball_volume(n, d, w)`.
pub fn homopolymer_gc_gilbert(n: usize, d: usize, w: usize) -> Result<BoundResult> {
    const NAME: &str = "homopolymer_gc_gilbert";
    check_ndw(n, d, w)?;
    if w == 0 || w == n {
        return Ok(BoundResult::not_applicable(
            NAME,
            Direction::Lower,
            format!("requires 1 <= w <= n-1, got w={w}"),
        ));
    }
    Ok(BoundResult::value(NAME, Direction::Lower, ratio(b_count(n, w)?, gc_ball_volume(n, d, w))))
}

/// Which recursion of the Johnson-type bound to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JohnsonVariant {
    /// `A_4^GC(n, d, w) ≤ ⌊(2n / w) A_4^GC(n−1, d, w−1)⌋`.
    WMinus1,
    /// `A_4^GC(n, d, w) ≤ ⌊(2n / (n−w)) A_4^GC(n−1, d, w)⌋`.
    W,
}

impl FromStr for JohnsonVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "w-1" | "w_minus_1" => Ok(JohnsonVariant::WMinus1),
            "w" => Ok(JohnsonVariant::W),
            _ => Err(Error::InvalidArgument(format!("unknown Johnson variant {s:?} (use w-1 or w)"))),
        }
    }
}

/// One step of the Johnson-type bound from a caller-supplied bound `a_prev`
/// on the length-`(n−1)` instance.
pub fn johnson_gc_step(n: usize, d: usize, w: usize, a_prev: u64, variant: JohnsonVariant) -> Result<BoundResult> {
    check_ndw(n, d, w)?;
    let den = match variant {
        JohnsonVariant::WMinus1 => w,
        JohnsonVariant::W => n - w,
    };
    if den == 0 {
        return Err(Error::InvalidArgument(format!(
            "variant {variant:?} is undefined for w={w}, n={n}"
        )));
    }
    Ok(BoundResult::value(
        "johnson_gc",
        Direction::Upper,
        ratio(BigUint::from(2 * n as u64) * BigUint::from(a_prev), BigUint::from(den)),
    ))
}

/// Evaluates a closed-form bound by name. `w` is required by the GC bounds.
pub fn evaluate(name: &str, n: usize, d: usize, w: Option<usize>) -> Result<BoundResult> {
    let need_w = || w.ok_or_else(|| Error::InvalidArgument(format!("bound {name} needs w")));
    match name {
        "sphere_packing" => sphere_packing(n, d),
        "gilbert_varshamov" => gilbert_varshamov(n, d),
        "singleton" => singleton(n, d),
        "plotkin" => plotkin(n, d),
        "gc_plotkin" => gc_plotkin(n, d, need_w()?),
        "gc_gilbert" => gc_gilbert(n, d, need_w()?),
        "gc_rc_gilbert" => gc_rc_gilbert(n, d, need_w()?),
        "homopolymer_gc_gilbert" => homopolymer_gc_gilbert(n, d, need_w()?),
        _ => Err(Error::InvalidArgument(format!("unknown bound {name:?}"))),
    }
}

/// Names accepted by [`evaluate`].
pub const BOUND_NAMES: [&str; 8] = [
    "sphere_packing",
    "gilbert_varshamov",
    "singleton",
    "plotkin",
    "gc_plotkin",
    "gc_gilbert",
    "gc_rc_gilbert",
    "homopolymer_gc_gilbert",
];

/// A relation between maximum code sizes, checked on supplied numbers.
pub struct Relation {
    pub name: &'static str,
    /// Input keys, in the order the predicate reads them.
    pub keys: &'static [&'static str],
    /// `Some(true)` for relations stated for even `n` only, `Some(false)` for odd.
    pub parity: Option<bool>,
    pub statement: &'static str,
    check: fn(&[i128]) -> bool,
}

/// All relations understood by [`relation_check`].
pub const RELATIONS: &[Relation] = &[
    Relation { name: "monotone_length_distance", keys: &["a4", "a4_n1_d1"], parity: None,
        statement: "A4(n,d) >= A4(n+1,d+1)", check: |v| v[0] >= v[1] },
    Relation { name: "monotone_length", keys: &["a4", "a4_n1"], parity: None,
        statement: "A4(n,d) >= A4(n+1,d)/4", check: |v| 4 * v[0] >= v[1] },
    Relation { name: "rc_equals_r_even", keys: &["a4_rc", "a4_r"], parity: Some(true),
        statement: "A4rc(n,d) = A4r(n,d), n even", check: |v| v[0] == v[1] },
    Relation { name: "rc_sandwich_odd", keys: &["a4_r_d_plus1", "a4_rc", "a4_r_d_minus1"], parity: Some(false),
        statement: "A4r(n,d+1) <= A4rc(n,d) <= A4r(n,d-1), n odd", check: |v| v[0] <= v[1] && v[1] <= v[2] },
    Relation { name: "rc_halving_odd", keys: &["a4_rc", "a4_r"], parity: Some(false),
        statement: "A4rc(n,d) <= A4r(n,d)/2, n odd", check: |v| 2 * v[0] <= v[1] },
    Relation { name: "halving", keys: &["a4_r", "a4"], parity: None,
        statement: "A4r(n,d) <= A4(n,d)/2", check: |v| 2 * v[0] <= v[1] },
    Relation { name: "cai", keys: &["a4_r_2n_2d", "a4"], parity: None,
        statement: "A4r(2n,2d) >= floor(A4(n,d)/2)", check: |v| v[0] >= Integer::div_floor(&v[1], &2) },
    Relation { name: "product", keys: &["a4_r", "a2_r", "a2"], parity: None,
        statement: "A4r(n,d) >= A2r(n,d) * A2(n,d)", check: |v| v[0] >= v[1] * v[2] },
    Relation { name: "r_monotone_distance", keys: &["a4_r", "a4_r_d_minus1"], parity: None,
        statement: "A4r(n,d) <= A4r(n,d-1)", check: |v| v[0] <= v[1] },
    Relation { name: "r_monotone_length_odd", keys: &["a4_r", "a4_r_n_minus1"], parity: Some(false),
        statement: "A4r(n,d)/4 <= A4r(n-1,d) <= A4r(n,d), n odd", check: |v| v[0] <= 4 * v[1] && v[1] <= v[0] },
    Relation { name: "rc_gc_halving_odd", keys: &["a4_rc_gc", "a4_r_gc"], parity: Some(false),
        statement: "A4rcGC(n,d,w) <= A4rGC(n,d,w)/2, n odd", check: |v| 2 * v[0] <= v[1] },
    Relation { name: "rc_gc_product", keys: &["a4_rc_gc", "a2_r_w", "a2"], parity: None,
        statement: "A4rcGC(n,d,w) >= A2r(n,d,w) * A2(n,d)", check: |v| v[0] >= v[1] * v[2] },
    Relation { name: "rc_gc_monotone_distance", keys: &["a4_rc_gc", "a4_rc_gc_d_minus1"], parity: None,
        statement: "A4rcGC(n,d,w) <= A4rcGC(n,d-1,w)", check: |v| v[0] <= v[1] },
    Relation { name: "rc_gc_monotone_length", keys: &["a4_rc_gc", "a4_rc_gc_n_plus1"], parity: None,
        statement: "A4rcGC(n,d,w) <= A4rcGC(n+1,d,w)", check: |v| v[0] <= v[1] },
    Relation { name: "gc_symmetry", keys: &["a4_gc", "a4_gc_complement_w"], parity: None,
        statement: "A4GC(n,d,w) = A4GC(n,d,n-w)", check: |v| v[0] == v[1] },
    Relation { name: "gc_zero_weight", keys: &["a4_gc_w0", "a2"], parity: None,
        statement: "A4GC(n,d,0) = A2(n,d)", check: |v| v[0] == v[1] },
    Relation { name: "rc_gc_equals_r_gc_even", keys: &["a4_rc_gc", "a4_r_gc"], parity: Some(true),
        statement: "A4rcGC(n,d,w) = A4rGC(n,d,w), n even", check: |v| v[0] == v[1] },
    Relation { name: "rc_gc_sandwich_odd", keys: &["a4_r_gc_d_plus1", "a4_rc_gc", "a4_r_gc_d_minus1"], parity: Some(false),
        statement: "A4rGC(n,d+1,w) <= A4rcGC(n,d,w) <= A4rGC(n,d-1,w), n odd", check: |v| v[0] <= v[1] && v[1] <= v[2] },
    Relation { name: "gc_product_binary", keys: &["a4_gc", "a2_w", "a2"], parity: None,
        statement: "A4GC(n,d,w) >= A2(n,d,w) * A2(n,d)", check: |v| v[0] >= v[1] * v[2] },
    Relation { name: "r_gc_product_binary_r", keys: &["a4_r_gc", "a2_r_w", "a2"], parity: None,
        statement: "A4rGC(n,d,w) >= A2r(n,d,w) * A2(n,d)", check: |v| v[0] >= v[1] * v[2] },
    Relation { name: "r_gc_product_binary_r2", keys: &["a4_r_gc", "a2_w", "a2_r"], parity: None,
        statement: "A4rGC(n,d,w) >= A2(n,d,w) * A2r(n,d)", check: |v| v[0] >= v[1] * v[2] },
    Relation { name: "gc_product_ternary", keys: &["a4_gc", "a3_w", "a2_n_minus_w"], parity: None,
        statement: "A4GC(n,d,w) >= A3(n,d,w) * A2(n-w,d)", check: |v| v[0] >= v[1] * v[2] },
    Relation { name: "r_gc_product_ternary_r", keys: &["a4_r_gc", "a3_r_w", "a2_n_minus_w"], parity: None,
        statement: "A4rGC(n,d,w) >= A3r(n,d,w) * A2(n-w,d)", check: |v| v[0] >= v[1] * v[2] },
    Relation { name: "r_gc_product_ternary_r2", keys: &["a4_r_gc", "a3_w", "a2_r_n_minus_w"], parity: None,
        statement: "A4rGC(n,d,w) >= A3(n,d,w) * A2r(n-w,d)", check: |v| v[0] >= v[1] * v[2] },
];

/// Checks the named relation on supplied quantities. An optional `n` input is
/// checked against the relation's parity condition.
pub fn relation_check(name: &str, inputs: &BTreeMap<String, i128>) -> Result<bool> {
    let rel = RELATIONS
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown relation {name:?}")))?;
    if let (Some(even), Some(&n)) = (rel.parity, inputs.get("n")) {
        if (n % 2 == 0) != even {
            return Err(Error::InvalidArgument(format!(
                "relation {name} holds only for {} n, got n={n}",
                if even { "even" } else { "odd" }
            )));
        }
    }
    let values = rel
        .keys
        .iter()
        .map(|k| {
            inputs
                .get(*k)
                .copied()
                .ok_or_else(|| Error::InvalidArgument(format!("relation {name} needs input {k}")))
        })
        .collect::<Result<Vec<i128>>>()?;
    Ok((rel.check)(&values))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(r: &BoundResult) -> String {
        r.exact_string().unwrap()
    }

    fn int(r: &BoundResult) -> u64 {
        r.bound_u64().unwrap()
    }

    #[test]
    fn sphere_packing_values() {
        let b = sphere_packing(4, 3).unwrap();
        assert_eq!((exact(&b).as_str(), int(&b)), ("256/13", 19));
        assert_eq!(int(&sphere_packing(5, 1).unwrap()), 1024);
        let b = sphere_packing(3, 3).unwrap();
        assert_eq!((exact(&b).as_str(), int(&b)), ("32/5", 6));
    }

    #[test]
    fn gilbert_varshamov_values() {
        let b = gilbert_varshamov(4, 3).unwrap();
        assert_eq!((exact(&b).as_str(), int(&b)), ("256/67", 4));
        assert_eq!(int(&gilbert_varshamov(6, 1).unwrap()), 4096);
        assert_eq!(int(&gilbert_varshamov(2, 2).unwrap()), 3);
    }

    #[test]
    fn singleton_and_plotkin() {
        assert_eq!(int(&singleton(4, 3).unwrap()), 16);
        assert_eq!(int(&singleton(3, 1).unwrap()), 64);
        assert_eq!(int(&singleton(4, 4).unwrap()), 4);
        assert_eq!(int(&plotkin(4, 4).unwrap()), 4);
        assert!(!plotkin(4, 3).unwrap().applicable);
        assert_eq!(int(&plotkin(5, 4).unwrap()), 16);
        assert!(sphere_packing(3, 4).is_err());
        assert!(singleton(0, 0).is_err());
    }

    #[test]
    fn gc_bounds() {
        assert_eq!(int(&gc_plotkin(4, 4, 2).unwrap()), 4);
        assert_eq!(int(&gc_plotkin(4, 3, 0).unwrap()), 3);
        assert!(!gc_plotkin(4, 2, 2).unwrap().applicable);
        assert_eq!(int(&gc_gilbert(2, 1, 1).unwrap()), 8);
        assert_eq!(int(&gc_gilbert(5, 1, 2).unwrap()), 10 * 32);
        let b = gc_gilbert(3, 2, 1).unwrap();
        assert_eq!((exact(&b).as_str(), int(&b)), ("6/1", 6));
    }

    #[test]
    fn v_counts() {
        assert_eq!(v_count(1, 0, 0).unwrap(), 0);
        assert_eq!(v_count(2, 0, 0).unwrap(), 2);
        // CC, GG (r = 2), CG, GC (r = 0): only the first two have r = 2.
        assert_eq!(v_count(2, 2, 2).unwrap(), 2);
        assert_eq!(v_count(2, 0, 2).unwrap(), 2);
        assert!(v_count(9, 0, 0).is_err());
    }

    #[test]
    fn gc_rc_gilbert_values() {
        // w = 0 strings of length 2 over {A, T}: AA, TT have r = 2; AT, TA have r = 0.
        let b = gc_rc_gilbert(2, 1, 0).unwrap();
        assert_eq!(exact(&b), "1/1");
        for n in 1..=4 {
            for w in 0..=n {
                let b = gc_rc_gilbert(n, 1, w).unwrap();
                let num: u64 = (1..=n).map(|r| v_count(n, r, w).unwrap()).sum();
                assert_eq!(b.exact.unwrap(), BigRational::new(BigInt::from(num), BigInt::from(2)));
            }
        }
    }

    #[test]
    fn homopolymer_counts() {
        assert_eq!(b_count(2, 1).unwrap(), BigUint::from(8u32));
        assert!(b_count(3, 0).is_err());
        assert!(!homopolymer_gc_gilbert(3, 1, 0).unwrap().applicable);
        let b = homopolymer_gc_gilbert(6, 1, 3).unwrap();
        assert_eq!(b.integer_bound.unwrap(), BigInt::from(b_count(6, 3).unwrap()));
    }

    #[test]
    fn johnson_steps() {
        let step = |n, w, a, v| int(&johnson_gc_step(n, 1, w, a, v).unwrap());
        assert_eq!(step(4, 2, 10, JohnsonVariant::WMinus1), 40);
        assert_eq!(step(4, 2, 10, JohnsonVariant::W), 40);
        assert_eq!(step(3, 1, 7, JohnsonVariant::WMinus1), 42);
        assert!(johnson_gc_step(4, 1, 0, 1, JohnsonVariant::WMinus1).is_err());
        assert!(johnson_gc_step(4, 1, 4, 1, JohnsonVariant::W).is_err());
    }

    #[test]
    fn relations() {
        let map = |pairs: &[(&str, i128)]| pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect::<BTreeMap<_, _>>();
        assert!(relation_check("halving", &map(&[("a4_r", 8), ("a4", 16)])).unwrap());
        assert!(relation_check("rc_gc_product", &map(&[("a4_rc_gc", 12), ("a2_r_w", 3), ("a2", 4)])).unwrap());
        assert!(!relation_check("gc_symmetry", &map(&[("a4_gc", 10), ("a4_gc_complement_w", 9)])).unwrap());
        assert!(relation_check("cai", &map(&[("a4_r_2n_2d", 3), ("a4", 7)])).unwrap());
        assert!(relation_check("halving", &map(&[("a4_r", 8)])).is_err());
        assert!(relation_check("rc_equals_r_even", &map(&[("a4_rc", 1), ("a4_r", 1), ("n", 3)])).is_err());
        assert!(relation_check("nonsense", &map(&[])).is_err());
        let mut names: Vec<&str> = RELATIONS.iter().map(|r| r.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), RELATIONS.len());
    }

    #[test]
    fn json_shape() {
        let v = singleton(4, 3).unwrap().to_json();
        assert_eq!(v["bound"], 16);
        assert_eq!(v["exact"], "16/1");
        assert_eq!(v["direction"], "upper");
        assert_eq!(v["applicable"], true);
        let v = plotkin(4, 3).unwrap().to_json();
        assert_eq!(v["applicable"], false);
        assert!(v["bound"].is_null());
    }
}

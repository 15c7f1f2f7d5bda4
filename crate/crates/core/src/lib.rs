//! Construction, verification and bounds for DNA codes.
//!
//! The crate covers three algebraic encoders that turn classical codes into
//! DNA codes with controlled Hamming distance:
//!
//! * the Gau map from the chain ring `Z4 + uZ4` (with `u^2 = 2 + 2u`) into
//!   dinucleotides, including Reed-Muller type codes over that ring ([`gau`], [`ring`]);
//! * a map from `Z5` into the five dinucleotides `{CC, CA, AC, AA, TC}` that
//!   yields codes free of long secondary-structure stems ([`quinary`]);
//! * the ℓ-order non-homopolymer map ψ from binary codes ([`nho`]).
//!
//! [`verify`] checks the usual DNA-code constraints (Hamming, reverse,
//! reverse-complement, GC content, tandem repeats, secondary structure,
//! correlation, free energy) and [`bounds`] evaluates the standard upper and
//! lower bounds on code sizes in exact rational arithmetic.

pub mod binary;
pub mod bounds;
pub mod codebook;
pub mod dna;
mod error;
pub mod gau;
mod kernel;
pub mod nho;
pub mod quinary;
pub mod ring;
pub mod verify;

pub use binary::BinaryString;
pub use codebook::{Alphabet, Codebook, Format};
pub use dna::{DnaString, Nucleotide};
pub use error::{Error, Result};
pub use ring::{RingElement, RingVector};

/// Hamming distance between two equal-length symbol sequences.
pub fn hamming<T: PartialEq>(x: &[T], y: &[T]) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter().zip(y).filter(|(a, b)| a != b).count())
}

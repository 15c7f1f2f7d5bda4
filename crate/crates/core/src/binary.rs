//! Strings over `{0, 1}`.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A non-empty string over `{0, 1}`, stored one bit per byte.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryString(Vec<u8>);

impl BinaryString {
    /// Builds a binary string from bits, rejecting values other than 0 and 1.
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(pos) = bits.iter().position(|&b| b > 1) {
            return Err(Error::InvalidSymbol {
                symbol: char::from_digit(bits[pos] as u32 % 36, 36).unwrap_or('?'),
                position: pos + 1,
                expected: "0 or 1",
            });
        }
        Ok(BinaryString(bits))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.0
    }
}

impl FromStr for BinaryString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidSymbol {
                    symbol: c,
                    position: i + 1,
                    expected: "0 or 1",
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        BinaryString::new(bits)
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let b: BinaryString = "01101".parse().unwrap();
        assert_eq!(b.bits(), &[0, 1, 1, 0, 1]);
        assert_eq!(b.to_string(), "01101");
        assert_eq!(b.weight(), 3);
    }

    #[test]
    fn rejects_other_symbols() {
        assert!(matches!(
            "0120".parse::<BinaryString>(),
            Err(Error::InvalidSymbol { position: 3, .. })
        ));
        assert_eq!("".parse::<BinaryString>(), Err(Error::Empty));
    }
}

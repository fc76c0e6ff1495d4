//! Face-count vectors.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FVectorError {
    #[error("entry {index}: face counts must be non-negative integers")]
    NegativeEntry { index: usize },
    #[error("entry {index}: {text:?} is not an integer")]
    BadEntry { index: usize, text: String },
}

/// The sequence `(f_0, ..., f_n)` of face counts per dimension. The empty
/// vector is the f-vector of the empty complex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<BigInt>,
}

impl FVector {
    /// Accepts any non-negative integer sequence; inputs that come from no
    /// actual complex are deliberately allowed so the inequality checks can
    /// be used as a realizability diagnostic.
    pub fn new(counts: Vec<BigInt>) -> Result<Self, FVectorError> {
        if let Some(index) = counts.iter().position(|c| c.is_negative()) {
            return Err(FVectorError::NegativeEntry { index });
        }
        Ok(Self { counts })
    }

    pub fn from_u64s(counts: &[u64]) -> Self {
        Self { counts: counts.iter().map(|&c| BigInt::from(c)).collect() }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `f_i`, or zero beyond the stored length.
    pub fn get(&self, i: usize) -> BigInt {
        self.counts.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(BigInt::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for FVector {
    type Err = FVectorError;

    /// Parses a comma-separated list such as `"3,3,1"`; the empty string is
    /// the empty f-vector.
    fn from_str(s: &str) -> Result<Self, FVectorError> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Self::empty());
        }
        let mut counts = Vec::new();
        for (index, part) in trimmed.split(',').enumerate() {
            let text = part.trim();
            let value: BigInt = text
                .parse()
                .map_err(|_| FVectorError::BadEntry { index, text: text.to_string() })?;
            counts.push(value);
        }
        Self::new(counts)
    }
}

//! Ordinals below ω^ω in Cantor normal form.
//!
//! An ordinal `ω^d·n_d + … + ω^0·n_0` is stored as its dense coefficient
//! vector, least significant power first, with trailing (high) zeros trimmed.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Zero,
    Successor,
    Limit,
}

/// Which canonical fundamental sequence to use at limits.
///
/// `Standard` sends `β + ω^(k+1)` to `β + ω^k·i`; `Shifted` sends it to
/// `β + ω^k·(i+1)`. Every consumer of fundamental sequences in this crate
/// takes the convention from here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    #[default]
    Standard,
    Shifted,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    // coeffs[k] is the coefficient of ω^k
    coeffs: Vec<u64>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { coeffs: Vec::new() }
    }

    pub fn finite(n: u64) -> Self {
        Self::from_coeffs(vec![n])
    }

    /// `ω^k`
    pub fn omega_pow(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Ordinal { coeffs }
    }

    /// Builds from coefficients indexed by power (`coeffs[k]` multiplies `ω^k`).
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ordinal { coeffs }
    }

    /// Builds from coefficients written most significant first, `(n_d, …, n_0)`.
    pub fn from_cnf(most_significant_first: &[u64]) -> Self {
        Self::from_coeffs(most_significant_first.iter().rev().copied().collect())
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Exponent of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest `d` with `self < ω^(d+1)`.
    pub fn min_dimension(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_finite(&self) -> Option<u64> {
        match self.coeffs.len() {
            0 => Some(0),
            1 => Some(self.coeffs[0]),
            _ => None,
        }
    }

    pub fn kind(&self) -> Kind {
        if self.is_zero() {
            Kind::Zero
        } else if self.coeff(0) > 0 {
            Kind::Successor
        } else {
            Kind::Limit
        }
    }

    /// `self + 1`
    pub fn succ(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        coeffs[0] += 1;
        Ordinal { coeffs }
    }

    /// The predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<Self> {
        if self.kind() != Kind::Successor {
            return None;
        }
        let mut coeffs = self.coeffs.clone();
        coeffs[0] -= 1;
        Some(Self::from_coeffs(coeffs))
    }

    /// Index of the least nonzero coefficient.
    pub fn least_power(&self) -> Option<usize> {
        self.coeffs.iter().position(|&n| n > 0)
    }

    /// `α[i]` under the standard convention.
    pub fn fund_seq(&self, i: u64) -> Result<Self> {
        self.fund_seq_with(Convention::Standard, i)
    }

    pub fn fund_seq_with(&self, conv: Convention, i: u64) -> Result<Self> {
        if self.kind() != Kind::Limit {
            return Err(Error::NotALimit(self.to_string()));
        }
        let j = self.least_power().expect("limit ordinals are nonzero");
        let mut coeffs = self.coeffs.clone();
        coeffs[j] -= 1;
        coeffs[j - 1] = match conv {
            Convention::Standard => i,
            Convention::Shifted => i + 1,
        };
        Ok(Self::from_coeffs(coeffs))
    }

    /// `2·(n_d + … + n_0) + d + 1`.
    pub fn h(&self, d: usize) -> Result<u64> {
        if self.coeffs.len() > d + 1 {
            return Err(Error::DimensionTooSmall { ordinal: self.to_string(), d });
        }
        Ok(2 * self.coeffs.iter().sum::<u64>() + d as u64 + 1)
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &n) in self.coeffs.iter().enumerate().rev() {
            if n == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{n}")?,
                _ => {
                    f.write_str("w")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                    if n > 1 {
                        write!(f, "*{n}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ordinal({self})")
    }
}

fn parse_num<T: FromStr>(s: &str, whole: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad number {s:?} in ordinal {whole:?}")))
}

/// Grammar: terms `w^k*n`, `w^k`, `w*n`, `w`, `n` joined by `+` with strictly
/// descending exponents. Whitespace is ignored.
impl FromStr for Ordinal {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty ordinal".into()));
        }
        let mut coeffs: Vec<u64> = Vec::new();
        let mut last_power: Option<usize> = None;
        for term in s.split('+') {
            let (power, n) = if let Some(rest) = term.strip_prefix('w') {
                let (pow_part, mult) = match rest.split_once('*') {
                    Some((p, m)) => (p, parse_num::<u64>(m, input)?),
                    None => (rest, 1),
                };
                let power = match pow_part.strip_prefix('^') {
                    Some(p) => parse_num::<usize>(p, input)?,
                    None if pow_part.is_empty() => 1,
                    None => return Err(Error::Parse(format!("bad term {term:?} in {input:?}"))),
                };
                (power, mult)
            } else {
                (0, parse_num::<u64>(term, input)?)
            };
            if last_power.is_some_and(|p| power >= p) {
                return Err(Error::Parse(format!(
                    "exponents must strictly descend in {input:?}"
                )));
            }
            last_power = Some(power);
            if coeffs.len() <= power {
                coeffs.resize(power + 1, 0);
            }
            coeffs[power] = n;
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

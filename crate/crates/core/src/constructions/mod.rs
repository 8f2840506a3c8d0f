//! Bad sequences of monomial ideals: the builders and the verifiers that
//! certify them.
//!
//! A sequence `I_0, …, I_R` is *bad* when no `I_i ⊇ I_j` with `i < j`. A bad
//! sequence with `deg(I_i) ≤ l + f(i)` witnesses `R < M_d^f(l)`.

mod identity;
mod tracks;
mod verify;

pub use identity::{seq_maclagan, seq_maclagan_certified, seq_maclagan_prefix, MaclaganBuilder};
pub use tracks::{
    exp_entry, seq_exp, seq_polypower, seq_rootlog, seq_track_power, seq_track_product, PolyPower,
    MAX_MATERIALIZED,
};
pub use verify::{
    verify_all, verify_bad, verify_degrees, verify_length, Badness, Check, DegreeCheck, DegreeMode,
    VerdictKind, VerdictRecord,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hierarchy::{CappedNat, ParamFn};
use crate::ideals::MonomialIdeal;
use crate::ordinals::{Convention, Ordinal};

/// Where a sequence came from and what it claims.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Meta {
    pub construction: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Ordinal>,
    /// The sequence should have more than `target` entries.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<CappedNat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<ConventionName>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionName {
    Standard,
    Shifted,
}

impl From<Convention> for ConventionName {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Standard => ConventionName::Standard,
            Convention::Shifted => ConventionName::Shifted,
        }
    }
}

impl From<ConventionName> for Convention {
    fn from(c: ConventionName) -> Self {
        match c {
            ConventionName::Standard => Convention::Standard,
            ConventionName::Shifted => Convention::Shifted,
        }
    }
}

/// A nonempty sequence of ideals in `K[X_d, …, X_0, Y]` together with the
/// degree budget `l + f(i)` it is meant to respect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSequence")]
pub struct IdealSequence {
    pub d: usize,
    pub l: u64,
    pub param: ParamFn,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
    pub ideals: Vec<MonomialIdeal>,
}

#[derive(Deserialize)]
struct RawSequence {
    d: usize,
    l: u64,
    param: ParamFn,
    #[serde(default)]
    meta: Option<Meta>,
    ideals: Vec<Vec<Vec<u32>>>,
}

impl TryFrom<RawSequence> for IdealSequence {
    type Error = Error;

    fn try_from(raw: RawSequence) -> Result<Self> {
        let nvars = raw.d + 2;
        let ideals = raw
            .ideals
            .into_iter()
            .map(|g| MonomialIdeal::from_json_gens(nvars, g))
            .collect::<Result<_>>()?;
        let mut s = IdealSequence::new(raw.d, raw.l, raw.param, ideals)?;
        s.meta = raw.meta;
        Ok(s)
    }
}

impl IdealSequence {
    pub fn new(d: usize, l: u64, param: ParamFn, ideals: Vec<MonomialIdeal>) -> Result<Self> {
        if ideals.is_empty() {
            return Err(Error::Parse("an ideal sequence needs at least one ideal".into()));
        }
        if let Some(bad) = ideals.iter().find(|i| i.nvars() != d + 2) {
            return Err(Error::LengthMismatch(d + 2, bad.nvars()));
        }
        Ok(IdealSequence { d, l, param, meta: None, ideals })
    }

    pub fn with_meta(mut self, meta: Meta) -> Self {
        self.meta = Some(meta);
        self
    }

    pub fn nvars(&self) -> usize {
        self.d + 2
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn max_degree(&self) -> u64 {
        self.ideals.iter().map(MonomialIdeal::degree).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("sequences always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Index of `X_k` in the exponent vector of a ring with `X_d, …, X_0, Y`.
pub(crate) fn x_var(d: usize, k: usize) -> usize {
    d - k
}

pub(crate) fn y_var(d: usize) -> usize {
    d + 1
}

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::IdealSequence;
use crate::error::{Error, Result};
use crate::hierarchy::CappedNat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Badness {
    Ok,
    /// Least pair `i < j` (lexicographically) with `I_i ⊇ I_j`.
    Violation(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeCheck {
    Ok,
    Violation(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMode {
    /// `deg(I_i) ≤ l + h_α + i`, with `α` taken from the metadata.
    PlusH,
    /// `deg(I_i) ≤ l + f(i)` for the sequence's own parameter.
    Param,
}

/// Checks that no ideal contains a later one.
pub fn verify_bad(s: &IdealSequence) -> Badness {
    let ideals = &s.ideals;
    let first = (0..ideals.len()).into_par_iter().find_map_first(|i| {
        (i + 1..ideals.len())
            .find(|&j| ideals[i].contains_unchecked(&ideals[j]))
            .map(|j| (i, j))
    });
    match first {
        Some((i, j)) => Badness::Violation(i, j),
        None => Badness::Ok,
    }
}

pub fn verify_degrees(s: &IdealSequence, mode: DegreeMode) -> Result<DegreeCheck> {
    let offset = match mode {
        DegreeMode::PlusH => {
            let alpha = s
                .meta
                .as_ref()
                .and_then(|m| m.alpha.as_ref())
                .ok_or(Error::MissingMeta("alpha"))?;
            s.l + alpha.h(s.d)?
        }
        DegreeMode::Param => s.l,
    };
    let bound = |i: usize| -> u64 {
        let i = i as u64;
        let extra = match mode {
            DegreeMode::PlusH => i,
            DegreeMode::Param => s.param.eval(i),
        };
        offset.saturating_add(extra)
    };
    Ok(s
        .ideals
        .iter()
        .enumerate()
        .find(|(i, ideal)| ideal.degree() > bound(*i))
        .map_or(DegreeCheck::Ok, |(i, _)| DegreeCheck::Violation(i)))
}

/// True when the sequence has more than `target` entries.
pub fn verify_length(s: &IdealSequence, target: &CappedNat) -> Result<bool> {
    let t = target.value().ok_or(Error::TargetOverflow)?;
    Ok(num_bigint::BigUint::from(s.len()) > *t)
}

/// Machine-readable outcome: `{"verdict": "ok"}` or
/// `{"verdict": "violation", "witness": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub verdict: VerdictKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u64>>,
    /// Which check failed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<Check>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Bad,
    Degrees,
    Length,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictKind {
    Ok,
    Violation,
}

impl VerdictRecord {
    pub fn ok() -> Self {
        VerdictRecord { verdict: VerdictKind::Ok, witness: None, check: None }
    }

    pub fn violation(witness: Vec<u64>) -> Self {
        VerdictRecord { verdict: VerdictKind::Violation, witness: Some(witness), check: None }
    }

    pub fn is_ok(&self) -> bool {
        self.verdict == VerdictKind::Ok
    }
}

/// Badness, then degrees, then (when a target is given) length; the record
/// describes the first failing check.
pub fn verify_all(
    s: &IdealSequence,
    mode: DegreeMode,
    target: Option<&CappedNat>,
) -> Result<VerdictRecord> {
    if let Badness::Violation(i, j) = verify_bad(s) {
        return Ok(VerdictRecord { check: Some(Check::Bad), ..Badness::Violation(i, j).into() });
    }
    if let DegreeCheck::Violation(i) = verify_degrees(s, mode)? {
        return Ok(VerdictRecord { check: Some(Check::Degrees), ..DegreeCheck::Violation(i).into() });
    }
    if let Some(t) = target {
        if !verify_length(s, t)? {
            let mut r = VerdictRecord::violation(vec![s.len() as u64]);
            r.check = Some(Check::Length);
            return Ok(r);
        }
    }
    Ok(VerdictRecord::ok())
}

impl From<Badness> for VerdictRecord {
    fn from(b: Badness) -> Self {
        match b {
            Badness::Ok => Self::ok(),
            Badness::Violation(i, j) => Self::violation(vec![i as u64, j as u64]),
        }
    }
}

impl From<DegreeCheck> for VerdictRecord {
    fn from(c: DegreeCheck) -> Self {
        match c {
            DegreeCheck::Ok => Self::ok(),
            DegreeCheck::Violation(i) => Self::violation(vec![i as u64]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{seq_exp, seq_maclagan, Meta};
    use crate::hierarchy::ParamFn;
    use crate::ideals::MonomialIdeal;
    use crate::ordinals::Ordinal;
    use num_bigint::BigUint;

    fn seq(list: &[&[&[u32]]]) -> IdealSequence {
        let ideals = list.iter().map(|g| MonomialIdeal::from_exps(2, g).unwrap()).collect();
        IdealSequence::new(0, 0, ParamFn::Id, ideals).unwrap()
    }

    #[test]
    fn badness_examples() {
        let base = seq_maclagan(&Ordinal::zero(), 1, 0, &BigUint::from(100u32)).unwrap();
        assert_eq!(verify_bad(&base), Badness::Ok);
        assert_eq!(verify_bad(&seq(&[&[&[1, 0]], &[&[1, 0]]])), Badness::Violation(0, 1));
        assert_eq!(verify_bad(&seq(&[&[&[0, 1]], &[&[0, 2]]])), Badness::Violation(0, 1));
    }

    #[test]
    fn least_pair_is_reported() {
        // I_1 ⊇ I_3 and I_0 ⊇ I_2 -> (0, 2) comes first
        let s = seq(&[&[&[0, 1]], &[&[1, 0]], &[&[0, 3]], &[&[2, 0]]]);
        assert_eq!(verify_bad(&s), Badness::Violation(0, 2));
    }

    #[test]
    fn degree_examples() {
        let base = seq_maclagan(&Ordinal::zero(), 1, 0, &BigUint::from(100u32)).unwrap();
        assert_eq!(verify_degrees(&base, DegreeMode::PlusH).unwrap(), DegreeCheck::Ok);

        let mut e = seq_exp(2).unwrap();
        e.l = 6;
        assert_eq!(verify_degrees(&e, DegreeMode::Param).unwrap(), DegreeCheck::Ok);

        // l = 1, h_0 = 1: position 2 allows degree 4
        let mut s = seq(&[&[&[1, 0]], &[&[0, 2]], &[&[0, 5]]]);
        s.l = 1;
        s.meta = Some(Meta { alpha: Some(Ordinal::zero()), ..Meta::default() });
        assert_eq!(verify_degrees(&s, DegreeMode::PlusH).unwrap(), DegreeCheck::Violation(2));
        s.meta = None;
        assert_eq!(verify_degrees(&s, DegreeMode::PlusH), Err(Error::MissingMeta("alpha")));
    }

    #[test]
    fn length_examples() {
        let base = seq_maclagan(&Ordinal::zero(), 1, 0, &BigUint::from(100u32)).unwrap();
        assert!(verify_length(&base, &CappedNat::Value(BigUint::from(2u32))).unwrap());
        assert!(verify_length(&seq_exp(3).unwrap(), &CappedNat::Value(BigUint::from(8u32))).unwrap());
        assert!(!verify_length(&base, &CappedNat::Value(BigUint::from(4u32))).unwrap());
        assert_eq!(
            verify_length(&base, &CappedNat::Overflow(BigUint::from(5u32))),
            Err(Error::TargetOverflow)
        );
    }

    #[test]
    fn combined_verdicts() {
        let base = seq_maclagan(&Ordinal::zero(), 1, 0, &BigUint::from(100u32)).unwrap();
        let two = CappedNat::Value(BigUint::from(2u32));
        let four = CappedNat::Value(BigUint::from(4u32));
        assert!(verify_all(&base, DegreeMode::PlusH, Some(&two)).unwrap().is_ok());
        assert_eq!(
            serde_json::to_string(&verify_all(&base, DegreeMode::PlusH, Some(&four)).unwrap())
                .unwrap(),
            r#"{"verdict":"violation","witness":[4],"check":"length"}"#
        );
        let s = seq(&[&[&[0, 1]], &[&[0, 2]]]);
        assert_eq!(
            verify_all(&s, DegreeMode::Param, None).unwrap().check,
            Some(Check::Bad)
        );
        let mut s = seq(&[&[&[0, 3]], &[&[0, 2]]]);
        s.param = ParamFn::Const(0);
        s.l = 2;
        assert_eq!(
            verify_all(&s, DegreeMode::Param, None).unwrap(),
            VerdictRecord { check: Some(Check::Degrees), ..VerdictRecord::violation(vec![0]) }
        );
    }

    #[test]
    fn verdict_json() {
        assert_eq!(serde_json::to_string(&VerdictRecord::ok()).unwrap(), r#"{"verdict":"ok"}"#);
        assert_eq!(
            serde_json::to_string(&VerdictRecord::from(Badness::Violation(0, 1))).unwrap(),
            r#"{"verdict":"violation","witness":[0,1]}"#
        );
    }
}

//! The fast-growing hierarchy below ω^ω, parameter functions, and the
//! counting upper bounds.
//!
//! Values of `F_α` leave any storable range almost immediately, so every
//! evaluation carries a cap and gives up (returning [`CappedNat::Overflow`])
//! the moment an intermediate value would exceed it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ordinals::{Convention, Kind, Ordinal};

/// A natural number known exactly up to a cap, or only known to exceed it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CappedNat {
    Value(BigUint),
    /// The true value exceeds the recorded cap.
    Overflow(BigUint),
}

impl CappedNat {
    pub fn capped(v: BigUint, cap: &BigUint) -> Self {
        if &v <= cap {
            CappedNat::Value(v)
        } else {
            CappedNat::Overflow(cap.clone())
        }
    }

    pub fn value(&self) -> Option<&BigUint> {
        match self {
            CappedNat::Value(v) => Some(v),
            CappedNat::Overflow(_) => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.value().and_then(|v| v.to_u64())
    }

    pub fn is_overflow(&self) -> bool {
        matches!(self, CappedNat::Overflow(_))
    }

    pub fn add(&self, other: &CappedNat, cap: &BigUint) -> CappedNat {
        match (self, other) {
            (CappedNat::Value(a), CappedNat::Value(b)) => Self::capped(a + b, cap),
            _ => CappedNat::Overflow(cap.clone()),
        }
    }

    pub fn mul(&self, other: &CappedNat, cap: &BigUint) -> CappedNat {
        match (self, other) {
            (CappedNat::Value(a), CappedNat::Value(b)) => Self::capped(a * b, cap),
            _ => CappedNat::Overflow(cap.clone()),
        }
    }
}

impl fmt::Display for CappedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CappedNat::Value(v) => write!(f, "{v}"),
            CappedNat::Overflow(cap) => write!(f, "overflow(>{cap})"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum CappedRepr {
    Value(String),
    Overflow(String),
}

impl Serialize for CappedNat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CappedNat::Value(v) => CappedRepr::Value(v.to_string()),
            CappedNat::Overflow(c) => CappedRepr::Overflow(c.to_string()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CappedNat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parse = |s: String| s.parse::<BigUint>().map_err(serde::de::Error::custom);
        Ok(match CappedRepr::deserialize(d)? {
            CappedRepr::Value(v) => CappedNat::Value(parse(v)?),
            CappedRepr::Overflow(c) => CappedNat::Overflow(parse(c)?),
        })
    }
}

/// `2^e` if it is at most `cap`.
fn pow2_capped(e: &BigUint, cap: &BigUint) -> Option<BigUint> {
    // 2^e > cap as soon as e >= bits(cap)
    if e >= &BigUint::from(cap.bits()) {
        return None;
    }
    let e = e.to_u64()?;
    let v = BigUint::one() << e;
    (&v <= cap).then_some(v)
}

struct Evaluator<'a> {
    cap: &'a BigUint,
    conv: Convention,
}

impl Evaluator<'_> {
    fn within(&self, v: BigUint) -> Option<BigUint> {
        (&v <= self.cap).then_some(v)
    }

    fn eval(&self, alpha: &Ordinal, x: &BigUint) -> Option<BigUint> {
        match alpha.as_finite() {
            Some(0) => return self.within(x + 1u32),
            Some(1) => return self.within(x << 1usize),
            Some(2) => {
                if x.is_zero() {
                    return Some(BigUint::zero());
                }
                let p = pow2_capped(x, self.cap)?;
                return self.within(x * p);
            }
            _ => {}
        }
        match alpha.kind() {
            Kind::Zero => unreachable!("handled above"),
            Kind::Successor => {
                let pred = alpha.pred().expect("successor");
                self.iterate(&pred, x, x.clone())
            }
            Kind::Limit => {
                // F_λ(x) >= F_2(x) > cap once x no longer fits a machine word
                let i = x.to_u64()?;
                let below = alpha
                    .fund_seq_with(self.conv, i)
                    .expect("limit has fundamental sequence");
                self.eval(&below, x)
            }
        }
    }

    fn iterate(&self, alpha: &Ordinal, times: &BigUint, start: BigUint) -> Option<BigUint> {
        let mut v = start;
        let mut done = BigUint::zero();
        while &done < times {
            v = self.eval(alpha, &v)?;
            done += 1u32;
        }
        Some(v)
    }
}

/// `F_α(i)` under the standard fundamental sequences.
pub fn fgh(alpha: &Ordinal, i: u64, cap: &BigUint) -> CappedNat {
    fgh_with(Convention::Standard, alpha, i, cap)
}

pub fn fgh_with(conv: Convention, alpha: &Ordinal, i: u64, cap: &BigUint) -> CappedNat {
    fgh_iter_with(conv, alpha, 1, i, cap)
}

/// `F_α^times(i)`.
pub fn fgh_iter(alpha: &Ordinal, times: u64, i: u64, cap: &BigUint) -> CappedNat {
    fgh_iter_with(Convention::Standard, alpha, times, i, cap)
}

pub fn fgh_iter_with(
    conv: Convention,
    alpha: &Ordinal,
    times: u64,
    i: u64,
    cap: &BigUint,
) -> CappedNat {
    let ev = Evaluator { cap, conv };
    let start = BigUint::from(i);
    if &start > cap {
        return CappedNat::Overflow(cap.clone());
    }
    match ev.iterate(alpha, &BigUint::from(times), start) {
        Some(v) => CappedNat::Value(v),
        None => CappedNat::Overflow(cap.clone()),
    }
}

/// `max({j : F_α(j) ≤ i} ∪ {0})`.
pub fn fgh_inverse(alpha: &Ordinal, i: u64) -> u64 {
    fgh_inverse_with(Convention::Standard, alpha, i)
}

pub fn fgh_inverse_with(conv: Convention, alpha: &Ordinal, i: u64) -> u64 {
    let at_most_i = |j: u64| {
        let cap = BigUint::from(i.max(j));
        match fgh_with(conv, alpha, j, &cap) {
            CappedNat::Value(v) => v <= BigUint::from(i),
            CappedNat::Overflow(_) => false,
        }
    };
    // F_α(0) <= 1 < 2 = F_α(1) and F_α is strictly increasing from 1 on,
    // so the predicate holds on an initial segment (possibly starting at 1).
    if !at_most_i(1) {
        return 0;
    }
    let mut lo = 1u64;
    let mut hi = 2u64;
    while at_most_i(hi) {
        lo = hi;
        hi = hi.saturating_mul(2);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if at_most_i(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// A nondecreasing parameter function bounding degree growth.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ParamFn {
    Const(u64),
    Id,
    Log,
    LogLog,
    /// c-th root of log, `c ≥ 1`.
    RootLog(u32),
    /// `⌊i / c⌋`, `c ≥ 1`.
    DivBy(u64),
    /// `F_α^{-1}(i)`-th root of log; see [`root_log_fgh`].
    RootLogFgh(Ordinal),
}

fn ilog2_or_zero(i: u64) -> u64 {
    if i == 0 {
        0
    } else {
        u64::from(i.ilog2())
    }
}

/// `max({j : 2^(j^c) ≤ i} ∪ {0})`.
fn root_log(c: u64, i: u64) -> u64 {
    if i == 0 {
        return 0;
    }
    let log = ilog2_or_zero(i);
    let mut j = 0u64;
    loop {
        let next = j + 1;
        let fits = u32::try_from(c)
            .ok()
            .and_then(|c| next.checked_pow(c))
            .is_some_and(|p| p <= log);
        if !fits {
            return j;
        }
        j = next;
    }
}

/// `√[k]{log i}` with `k = F_α^{-1}(i)`, read as plain `log` when `k = 0`.
///
/// This pointwise formula drops whenever `k` increments, so it is not
/// nondecreasing; [`ParamFn::RootLogFgh`] evaluates its running maximum.
pub fn root_log_fgh_pointwise(alpha: &Ordinal, i: u64) -> u64 {
    match fgh_inverse(alpha, i) {
        0 => ilog2_or_zero(i),
        k => root_log(k, i),
    }
}

/// Least nondecreasing majorant of [`root_log_fgh_pointwise`]:
/// `max { root_log_fgh_pointwise(α, i') : i' ≤ i }`.
pub fn root_log_fgh(alpha: &Ordinal, i: u64) -> u64 {
    let k = fgh_inverse(alpha, i);
    let mut best = root_log_fgh_pointwise(alpha, i);
    // the pointwise formula is nondecreasing on each stretch where k is
    // constant, so only the right ends of earlier stretches can matter;
    // from stretch 64 on those ends give at most 1, which i ≥ 2 already has
    for prev in 0..k.min(64) {
        let end = fgh(alpha, prev + 1, &BigUint::from(i.max(prev + 1)))
            .to_u64()
            .expect("F_α(prev+1) ≤ i since prev < k")
            - 1;
        best = best.max(root_log_fgh_pointwise(alpha, end));
    }
    best
}

impl ParamFn {
    pub fn eval(&self, i: u64) -> u64 {
        match *self {
            ParamFn::Const(c) => c,
            ParamFn::Id => i,
            ParamFn::Log => ilog2_or_zero(i),
            ParamFn::LogLog => {
                if i < 2 {
                    0
                } else {
                    ilog2_or_zero(ilog2_or_zero(i))
                }
            }
            ParamFn::RootLog(c) => root_log(u64::from(c), i),
            ParamFn::DivBy(c) => i / c,
            ParamFn::RootLogFgh(ref alpha) => root_log_fgh(alpha, i),
        }
    }

    /// The function this one inverts, when it is defined by inversion.
    pub fn inverted(&self) -> Option<Box<dyn Fn(u64) -> u128>> {
        fn pow2(e: u64) -> u128 {
            if e >= 128 {
                u128::MAX
            } else {
                1u128 << e
            }
        }
        match *self {
            ParamFn::Log => Some(Box::new(pow2)),
            ParamFn::LogLog => Some(Box::new(|j| pow2(pow2(j).min(128) as u64))),
            ParamFn::RootLog(c) => Some(Box::new(move |j: u64| {
                pow2(j.checked_pow(c).unwrap_or(u64::MAX))
            })),
            ParamFn::DivBy(c) => Some(Box::new(move |j: u64| u128::from(j) * u128::from(c))),
            _ => None,
        }
    }

    fn validate(self) -> Result<Self> {
        match self {
            ParamFn::RootLog(0) | ParamFn::DivBy(0) => Err(Error::Parse(
                "rootlog and div need a constant of at least 1".into(),
            )),
            f => Ok(f),
        }
    }
}

pub fn param_eval(f: &ParamFn, i: u64) -> u64 {
    f.eval(i)
}

const MAX_SCAN: u64 = 1 << 40;

/// `max({j : g(j) ≤ i} ∪ {0})` by an upward scan. `g` must be nondecreasing
/// and unbounded; saturate to `u128::MAX` on overflow.
pub fn inverse_eval(g: impl Fn(u64) -> u128, i: u64) -> Result<u64> {
    let i = u128::from(i);
    let mut best = 0u64;
    let mut prev = 0u128;
    for j in 0..MAX_SCAN {
        let v = g(j);
        if v < prev {
            return Err(Error::NotMonotone(j));
        }
        if v > i {
            return Ok(best);
        }
        prev = v;
        best = j;
    }
    Err(Error::ScanExhausted(MAX_SCAN))
}

/// [`inverse_eval`] over a tabulated function `g(j) = table[j]`.
pub fn inverse_eval_table(table: &[u128], i: u64) -> Result<u64> {
    let n = table.len() as u64;
    let j = inverse_eval(|j| table.get(j as usize).copied().unwrap_or(u128::MAX), i)?;
    if j + 1 == n && table[j as usize] <= u128::from(i) {
        return Err(Error::ScanExhausted(n));
    }
    Ok(j)
}

/// `2^((l+c+1)^(d+2)) + 1`, the pigeonhole bound on bad sequences of
/// ideals with degrees at most `l + c`.
pub fn bound_pigeonhole(d: u64, l: u64, c: u64, cap: &BigUint) -> CappedNat {
    let exp = num_traits::pow(BigUint::from(l + c + 1), (d + 2) as usize);
    match pow2_capped(&exp, cap) {
        Some(p) => CappedNat::capped(p + 1u32, cap),
        None => CappedNat::Overflow(cap.clone()),
    }
}

/// `2^(B(l)^(d+2))`, the bound for parameter `√[B^{-1}(i)]{log i}`.
pub fn bound_slow(
    d: u64,
    l: u64,
    b: impl Fn(u64) -> BigUint,
    cap: &BigUint,
) -> Result<CappedNat> {
    let bl = b(l);
    if bl <= BigUint::one() << (l + 2) {
        return Err(Error::PreconditionB);
    }
    // B(l)^(d+2) has at least (bits-1)(d+2)+1 bits; anything past 64 bits
    // already puts 2^exp beyond every representable cap
    if (bl.bits() - 1) * (d + 2) + 1 > 64 {
        return Ok(CappedNat::Overflow(cap.clone()));
    }
    let exp = num_traits::pow(bl, (d + 2) as usize);
    Ok(match pow2_capped(&exp, cap) {
        Some(p) => CappedNat::Value(p),
        None => CappedNat::Overflow(cap.clone()),
    })
}

impl fmt::Display for ParamFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamFn::Const(c) => write!(f, "const:{c}"),
            ParamFn::Id => f.write_str("id"),
            ParamFn::Log => f.write_str("log"),
            ParamFn::LogLog => f.write_str("loglog"),
            ParamFn::RootLog(c) => write!(f, "rootlog:{c}"),
            ParamFn::DivBy(c) => write!(f, "div:{c}"),
            ParamFn::RootLogFgh(a) => write!(f, "rootlog-fgh:{a}"),
        }
    }
}

impl FromStr for ParamFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let num = |a: Option<&str>| -> Result<u64> {
            a.ok_or_else(|| Error::Parse(format!("{name} needs an argument")))?
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad constant in {s:?}")))
        };
        let f = match name {
            "const" => ParamFn::Const(num(arg)?),
            "id" => ParamFn::Id,
            "log" => ParamFn::Log,
            "loglog" => ParamFn::LogLog,
            "rootlog" => ParamFn::RootLog(
                u32::try_from(num(arg)?).map_err(|_| Error::Parse(format!("{s:?}")))?,
            ),
            "div" => ParamFn::DivBy(num(arg)?),
            "rootlog-fgh" => ParamFn::RootLogFgh(
                arg.ok_or_else(|| Error::Parse("rootlog-fgh needs an ordinal".into()))?
                    .parse()?,
            ),
            _ => return Err(Error::Parse(format!("unknown parameter function {s:?}"))),
        };
        if arg.is_some() && matches!(f, ParamFn::Id | ParamFn::Log | ParamFn::LogLog) {
            return Err(Error::Parse(format!("{name} takes no argument")));
        }
        f.validate()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum ParamRepr {
    Const { c: u64 },
    Id,
    Log,
    Loglog,
    Rootlog { c: u32 },
    Div { c: u64 },
    RootlogFgh { alpha: Ordinal },
}

impl Serialize for ParamFn {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.clone() {
            ParamFn::Const(c) => ParamRepr::Const { c },
            ParamFn::Id => ParamRepr::Id,
            ParamFn::Log => ParamRepr::Log,
            ParamFn::LogLog => ParamRepr::Loglog,
            ParamFn::RootLog(c) => ParamRepr::Rootlog { c },
            ParamFn::DivBy(c) => ParamRepr::Div { c },
            ParamFn::RootLogFgh(alpha) => ParamRepr::RootlogFgh { alpha },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParamFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Either {
            Text(String),
            Repr(ParamRepr),
        }
        let repr = match Either::deserialize(d)? {
            Either::Text(t) => return t.parse().map_err(serde::de::Error::custom),
            Either::Repr(r) => r,
        };
        let f = match repr {
            ParamRepr::Const { c } => ParamFn::Const(c),
            ParamRepr::Id => ParamFn::Id,
            ParamRepr::Log => ParamFn::Log,
            ParamRepr::Loglog => ParamFn::LogLog,
            ParamRepr::Rootlog { c } => ParamFn::RootLog(c),
            ParamRepr::Div { c } => ParamFn::DivBy(c),
            ParamRepr::RootlogFgh { alpha } => ParamFn::RootLogFgh(alpha),
        };
        f.validate().map_err(serde::de::Error::custom)
    }
}

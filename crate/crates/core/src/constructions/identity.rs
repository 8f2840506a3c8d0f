//! Bad sequences `Seq(α, l)` for the identity parameter.
//!
//! Each ordinal `α = ω^d·n_d + … + n_0` owns the monomials whose `X_k`
//! exponents are at most `2·n_k + 1`. The sequence for `α` opens with a
//! block of generators one step above that box and then descends into
//! sequences for smaller ordinals, so no later ideal can fall inside an
//! earlier one.

use num_bigint::BigUint;

use super::{x_var, y_var, ConventionName, IdealSequence, Meta};
use crate::error::{Error, Result};
use crate::hierarchy::{fgh_iter_with, fgh_with, CappedNat, ParamFn};
use crate::ideals::{Monomial, MonomialIdeal};
use crate::ordinals::{Convention, Kind, Ordinal};

/// Builds `Seq(α, l)` over `K[X_d, …, X_0, Y]`; every fast-growing value the
/// recursion needs must stay within `cap`.
#[derive(Debug, Clone)]
pub struct MaclaganBuilder {
    d: usize,
    cap: BigUint,
    convention: Convention,
}

fn exp32(v: u64) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::CapExceeded(format!("exponent {v} does not fit in 32 bits")))
}

impl MaclaganBuilder {
    pub fn new(d: usize, cap: BigUint) -> Self {
        MaclaganBuilder { d, cap, convention: Convention::Standard }
    }

    pub fn convention(mut self, convention: Convention) -> Self {
        self.convention = convention;
        self
    }

    fn nvars(&self) -> usize {
        self.d + 2
    }

    fn check_dim(&self, alpha: &Ordinal) -> Result<()> {
        if alpha.coeffs().len() > self.d + 1 {
            return Err(Error::DimensionTooSmall { ordinal: alpha.to_string(), d: self.d });
        }
        Ok(())
    }

    fn exact(&self, v: CappedNat, what: impl FnOnce() -> String) -> Result<u64> {
        v.to_u64()
            .ok_or_else(|| Error::CapExceeded(format!("{} exceeds {}", what(), self.cap)))
    }

    fn iterate(&self, alpha: &Ordinal, times: u64, l: u64) -> Result<u64> {
        let v = fgh_iter_with(self.convention, alpha, times, l, &self.cap);
        self.exact(v, || format!("F_{alpha}^{times}({l})"))
    }

    /// `min(F_α^times(l), limit)`; an overflow only means "more than needed".
    fn iterate_at_most(&self, alpha: &Ordinal, times: u64, l: u64, limit: u64) -> u64 {
        fgh_iter_with(self.convention, alpha, times, l, &self.cap)
            .to_u64()
            .map_or(limit, |v| v.min(limit))
    }

    /// `F_α(l)`, the number of ideals the sequence must exceed.
    pub fn target(&self, alpha: &Ordinal, l: u64) -> Result<u64> {
        self.exact(fgh_with(self.convention, alpha, l, &self.cap), || {
            format!("F_{alpha}({l})")
        })
    }

    /// Number of ideals in the complete `Seq(α, l)`.
    pub fn full_len(&self, alpha: &Ordinal, l: u64) -> Result<u64> {
        self.check_dim(alpha)?;
        let too_big = || Error::CapExceeded(format!("length of Seq({alpha}, {l})"));
        match alpha.kind() {
            Kind::Zero => Ok(l + 3),
            Kind::Successor => {
                let pred = alpha.pred().expect("successor");
                let mut total = 1u64;
                for t in 0..=l + 1 {
                    total = total.checked_add(self.iterate(&pred, t, l)?).ok_or_else(too_big)?;
                }
                Ok(total)
            }
            Kind::Limit => {
                let below = alpha.fund_seq_with(self.convention, l)?;
                let tail = self.target(&below, l)?;
                (3 * l + 2).checked_add(tail).ok_or_else(too_big)
            }
        }
    }

    /// `X_d^(2n_d+1) ⋯ X_(from)^(2n_from+1)`, the part of the box of `α`
    /// above position `from - 1`.
    fn box_top(&self, alpha: &Ordinal, from: usize) -> Result<Vec<u32>> {
        let mut exps = vec![0u32; self.nvars()];
        for k in from..=self.d {
            exps[x_var(self.d, k)] = exp32(2 * alpha.coeff(k) + 1)?;
        }
        Ok(exps)
    }

    fn single(&self, exps: Vec<u32>) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars(), [Monomial::new(exps)]).expect("widths agree")
    }

    /// Appends the first `count` entries of `Seq(α, l)` to `out`.
    fn build(&self, alpha: &Ordinal, l: u64, count: u64, out: &mut Vec<MonomialIdeal>) -> Result<()> {
        let d = self.d;
        let y = y_var(d);
        let stop = out.len() as u64 + count;
        let full = |out: &Vec<MonomialIdeal>| out.len() as u64 >= stop;
        match alpha.kind() {
            Kind::Zero => {
                let mut x0 = vec![0; self.nvars()];
                x0[x_var(d, 0)] = 1;
                if !full(out) {
                    out.push(self.single(x0));
                }
                for i in 0..=l + 1 {
                    if full(out) {
                        break;
                    }
                    let mut e = vec![0; self.nvars()];
                    e[y] = exp32(l + 1 - i)?;
                    out.push(self.single(e));
                }
            }
            Kind::Successor => {
                let pred = alpha.pred().expect("successor");
                let top = self.box_top(&pred, 1)?;
                let x0 = x_var(d, 0);
                let n0 = pred.coeff(0);
                for i in 0..=l {
                    if full(out) {
                        return Ok(());
                    }
                    let mut e = top.clone();
                    e[x0] = exp32(2 * n0 + 3)?;
                    e[y] = exp32(l - i)?;
                    out.push(self.single(e));
                }
                let lift = Monomial::power(self.nvars(), y, exp32(l + 1)?);
                for j in 0..=l {
                    if full(out) {
                        return Ok(());
                    }
                    // block j replays Seq(pred, F^j(l)) from index 1 up to F^(j+1)(l)
                    let inner_l = self.iterate(&pred, j, l)?;
                    let remaining = stop - out.len() as u64;
                    let take = self.iterate_at_most(&pred, j + 1, l, remaining);
                    let mut sep = top.clone();
                    sep[x0] = exp32(2 * n0 + 2)?;
                    sep[y] = exp32(l - j)?;
                    let sep = Monomial::new(sep);
                    let mut inner = Vec::with_capacity(take as usize + 1);
                    self.build(&pred, inner_l, take + 1, &mut inner)?;
                    for b in inner.into_iter().skip(1) {
                        let scaled = b.scaled(&lift)?;
                        let gens = scaled.gens().iter().cloned().chain([sep.clone()]);
                        out.push(MonomialIdeal::new(self.nvars(), gens)?);
                    }
                }
            }
            Kind::Limit => {
                let j = alpha.least_power().expect("nonzero");
                let nj = alpha.coeff(j) - 1;
                let top = self.box_top(alpha, j + 1)?;
                let xj = x_var(d, j);
                for i in 0..=l {
                    if full(out) {
                        return Ok(());
                    }
                    let mut e = top.clone();
                    e[xj] = exp32(2 * nj + 3)?;
                    e[y] = exp32(l - i)?;
                    out.push(self.single(e));
                }
                for i in 0..=2 * l {
                    if full(out) {
                        return Ok(());
                    }
                    let mut e = top.clone();
                    e[xj] = exp32(2 * nj + 2)?;
                    e[y] = exp32(2 * l - i)?;
                    out.push(self.single(e));
                }
                if !full(out) {
                    let below = alpha.fund_seq_with(self.convention, l)?;
                    let remaining = stop - out.len() as u64;
                    let mut inner = Vec::with_capacity(remaining as usize + 1);
                    self.build(&below, l, remaining + 1, &mut inner)?;
                    out.extend(inner.into_iter().skip(1));
                }
            }
        }
        Ok(())
    }

    fn finish(&self, alpha: &Ordinal, l: u64, ideals: Vec<MonomialIdeal>) -> Result<IdealSequence> {
        let target = fgh_with(self.convention, alpha, l, &self.cap);
        let seq = IdealSequence::new(self.d, l, ParamFn::Id, ideals)?;
        Ok(seq.with_meta(Meta {
            construction: "maclagan".into(),
            alpha: Some(alpha.clone()),
            target: Some(target),
            convention: Some(ConventionName::from(self.convention)),
        }))
    }

    /// The complete `Seq(α, l)`.
    pub fn full(&self, alpha: &Ordinal, l: u64) -> Result<IdealSequence> {
        let len = self.full_len(alpha, l)?;
        if BigUint::from(len) > self.cap {
            return Err(Error::CapExceeded(format!("Seq({alpha}, {l}) has {len} entries")));
        }
        self.prefix(alpha, l, len)
    }

    /// The first `len` entries of `Seq(α, l)`.
    pub fn prefix(&self, alpha: &Ordinal, l: u64, len: u64) -> Result<IdealSequence> {
        self.check_dim(alpha)?;
        if len == 0 {
            return Err(Error::Parse("prefix length must be positive".into()));
        }
        let mut ideals = Vec::with_capacity(len as usize);
        self.build(alpha, l, len, &mut ideals)?;
        if (ideals.len() as u64) < len {
            return Err(Error::Parse(format!(
                "Seq({alpha}, {l}) has only {} entries",
                ideals.len()
            )));
        }
        self.finish(alpha, l, ideals)
    }

    /// The entries `0..=F_α(l)`: the shortest prefix that is still long
    /// enough to witness `F_α(l) < M`.
    pub fn certified(&self, alpha: &Ordinal, l: u64) -> Result<IdealSequence> {
        let target = self.target(alpha, l)?;
        self.prefix(alpha, l, target + 1)
    }
}

/// The complete `Seq(α, l)` under the standard fundamental sequences.
pub fn seq_maclagan(alpha: &Ordinal, l: u64, d: usize, cap: &BigUint) -> Result<IdealSequence> {
    MaclaganBuilder::new(d, cap.clone()).full(alpha, l)
}

pub fn seq_maclagan_prefix(
    alpha: &Ordinal,
    l: u64,
    d: usize,
    len: u64,
    cap: &BigUint,
) -> Result<IdealSequence> {
    MaclaganBuilder::new(d, cap.clone()).prefix(alpha, l, len)
}

pub fn seq_maclagan_certified(
    alpha: &Ordinal,
    l: u64,
    d: usize,
    cap: &BigUint,
) -> Result<IdealSequence> {
    MaclaganBuilder::new(d, cap.clone()).certified(alpha, l)
}

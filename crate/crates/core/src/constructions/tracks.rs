//! Bad sequences for slowly growing parameters: the doubling family over
//! `(X_0, Y)`, track products, iterated powers, and the root-log sequence
//! that splices them onto an identity sequence.
//!
//! Track products tag each factor with its own monomial in two fresh
//! variables (`X_{d+2}^(c-t)·X_{d+1}^t` for track `t`); generators on
//! different tracks never divide each other, so badness is inherited from
//! the first factor in which two index tuples differ.

use num_bigint::BigUint;

use super::{IdealSequence, MaclaganBuilder, Meta};
use crate::error::{Error, Result};
use crate::hierarchy::{CappedNat, ParamFn};
use crate::ideals::{Monomial, MonomialIdeal};
use crate::ordinals::Ordinal;

/// Upper limit on the number of ideals a builder will materialize.
pub const MAX_MATERIALIZED: u64 = 1 << 22;

fn check_budget(len: u128, what: &str) -> Result<u64> {
    if len > u128::from(MAX_MATERIALIZED) {
        Err(Error::BudgetExceeded(format!("{what} would have {len} ideals")))
    } else {
        Ok(len as u64)
    }
}

/// Entry `i` of the doubling sequence for `j` (ring `K[X_0, Y]`).
pub fn exp_entry(j: u32, i: u64) -> MonomialIdeal {
    if j == 0 {
        return match i {
            0 => MonomialIdeal::from_exps(2, &[&[0, 2]]),
            1 => MonomialIdeal::from_exps(2, &[&[0, 1]]),
            _ => panic!("doubling sequence for 0 has two entries"),
        }
        .expect("two variables");
    }
    let half = 1u64 << (j - 1);
    let (y, inner) = if i <= half { (1, i) } else { (0, i - half - 1) };
    let lifted = exp_entry(j - 1, inner)
        .scaled(&Monomial::new(vec![0, 2]))
        .expect("two variables");
    let sep = Monomial::new(vec![j, y]);
    MonomialIdeal::new(2, lifted.gens().iter().cloned().chain([sep])).expect("two variables")
}

/// The doubling family: `2^j + 1` ideals in `K[X_0, Y]` of degree at most
/// `2j + 2`.
pub fn seq_exp(j: u32) -> Result<IdealSequence> {
    let len = check_budget((1u128 << j.min(127)) + 1, "seq_exp")?;
    let ideals = (0..len).map(|i| exp_entry(j, i)).collect();
    let seq = IdealSequence::new(0, 2 * u64::from(j) + 2, ParamFn::Const(0), ideals)?;
    Ok(seq.with_meta(Meta {
        construction: "exp".into(),
        target: Some(CappedNat::Value(BigUint::from(1u32) << j)),
        ..Meta::default()
    }))
}

fn tag(nvars: usize, outer: u32, inner: u32) -> Monomial {
    let mut e = vec![0; nvars];
    e[0] = outer;
    e[1] = inner;
    Monomial::new(e)
}

fn lift(ideal: &MonomialIdeal, t: &Monomial) -> Vec<Monomial> {
    let nvars = t.nvars();
    ideal
        .embed(nvars, 2)
        .gens()
        .iter()
        .map(|g| g.mul(t).expect("same width"))
        .collect()
}

fn param_bound(s: &IdealSequence) -> Option<u64> {
    match s.param {
        ParamFn::Const(c) => Some(s.l + c),
        _ => None,
    }
}

/// Entry `(q, r)` is `X_{d+2}·a_q ∪ X_{d+1}·b_r`, enumerated with `r`
/// varying fastest.
pub fn seq_track_product(a: &IdealSequence, b: &IdealSequence) -> Result<IdealSequence> {
    if a.d != b.d {
        return Err(Error::DimensionMismatch(a.d, b.d));
    }
    let len = check_budget(a.len() as u128 * b.len() as u128, "track product")?;
    let nvars = a.nvars() + 2;
    let (ta, tb) = (tag(nvars, 1, 0), tag(nvars, 0, 1));
    let ideals: Vec<MonomialIdeal> = (0..len as usize)
        .map(|i| {
            let (q, r) = (i / b.len(), i % b.len());
            let gens = lift(&a.ideals[q], &ta).into_iter().chain(lift(&b.ideals[r], &tb));
            MonomialIdeal::new(nvars, gens)
        })
        .collect::<Result<_>>()?;
    let seq = IdealSequence::new(a.d + 2, 0, ParamFn::Const(0), ideals)?;
    let l = match (param_bound(a), param_bound(b)) {
        (Some(x), Some(y)) => x.max(y) + 1,
        _ => seq.max_degree(),
    };
    Ok(IdealSequence { l, ..seq }.with_meta(Meta {
        construction: "track-product".into(),
        target: Some(CappedNat::Value(BigUint::from(len - 1))),
        ..Meta::default()
    }))
}

/// Index tuple of entry `i` in a `factors`-fold power of a sequence with
/// `base` entries, most significant factor first. `base == u128::MAX`
/// stands for "larger than any index".
fn digits(mut i: u128, base: u128, factors: u32) -> Vec<u128> {
    let mut out = vec![0; factors as usize];
    for slot in out.iter_mut().rev() {
        *slot = i % base;
        i /= base;
    }
    out
}

fn power_entry(
    base: impl Fn(u64) -> MonomialIdeal,
    base_len: u128,
    base_nvars: usize,
    factors: u32,
    i: u64,
) -> MonomialIdeal {
    let nvars = base_nvars + 2;
    let c = factors - 1;
    let gens = digits(u128::from(i), base_len, factors)
        .into_iter()
        .enumerate()
        .flat_map(|(t, k)| {
            let t = t as u32;
            lift(&base(k as u64), &tag(nvars, c - t, t))
        });
    MonomialIdeal::new(nvars, gens).expect("same width")
}

/// The `factors`-fold track power of `a`: entries are indexed by tuples
/// `(i_0, …, i_c)` in lexicographic order, track `t` carrying
/// `X_{d+2}^(c-t)·X_{d+1}^t·a_{i_t}`.
pub fn seq_track_power(a: &IdealSequence, factors: u32) -> Result<IdealSequence> {
    if factors == 0 {
        return Err(Error::Parse("a track power needs at least one factor".into()));
    }
    let len = (a.len() as u128)
        .checked_pow(factors)
        .map_or(Err(Error::BudgetExceeded("track power".into())), |n| {
            check_budget(n, "track power")
        })?;
    let ideals = (0..len)
        .map(|i| power_entry(|k| a.ideals[k as usize].clone(), a.len() as u128, a.nvars(), factors, i))
        .collect();
    let seq = IdealSequence::new(a.d + 2, 0, ParamFn::Const(0), ideals)?;
    let l = match param_bound(a) {
        Some(x) => x + u64::from(factors) - 1,
        None => seq.max_degree(),
    };
    Ok(IdealSequence { l, ..seq }.with_meta(Meta {
        construction: "track-power".into(),
        target: Some(CappedNat::Value(BigUint::from(len - 1))),
        ..Meta::default()
    }))
}

/// The iterated track power: level 0 is the doubling family for `j`, and
/// each of the `c` further levels takes the `j`-fold track power of the
/// previous one. Entries are computed on demand, so only the prefix that
/// is asked for is ever built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyPower {
    pub c: u32,
    pub j: u32,
}

impl PolyPower {
    pub fn new(c: u32, j: u32) -> Self {
        PolyPower { c, j }
    }

    /// Factors per level; a single factor when `j ≤ 1`.
    fn factors(&self) -> u32 {
        self.j.max(1)
    }

    /// Dimension `d = 2c` (so `2c + 2` variables).
    pub fn d(&self) -> usize {
        2 * self.c as usize
    }

    /// Number of entries, saturating at `u128::MAX`.
    pub fn len(&self) -> u128 {
        self.level_len(self.c)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn level_len(&self, level: u32) -> u128 {
        let mut n = if self.j >= 127 { u128::MAX } else { (1u128 << self.j) + 1 };
        for _ in 0..level {
            n = n.checked_pow(self.factors()).unwrap_or(u128::MAX);
        }
        n
    }

    /// Degree bound `2^(c+1)·(j+1)`.
    pub fn degree_bound(&self) -> u64 {
        (1u64 << (self.c + 1)) * (u64::from(self.j) + 1)
    }

    pub fn entry(&self, i: u64) -> MonomialIdeal {
        self.level_entry(self.c, i)
    }

    fn level_entry(&self, level: u32, i: u64) -> MonomialIdeal {
        if level == 0 {
            return exp_entry(self.j, i);
        }
        power_entry(
            |k| self.level_entry(level - 1, k),
            self.level_len(level - 1),
            2 * level as usize,
            self.factors(),
            i,
        )
    }
}

/// Materializes the iterated track power with `c` levels over the doubling
/// family for `j`: at least `2^(j^(c+1))` ideals in dimension `2c`.
pub fn seq_polypower(c: u32, j: u32) -> Result<IdealSequence> {
    let p = PolyPower::new(c, j);
    let len = check_budget(p.len(), "seq_polypower")?;
    let ideals = (0..len).map(|i| p.entry(i)).collect();
    let seq = IdealSequence::new(p.d(), p.degree_bound(), ParamFn::Const(0), ideals)?;
    let exponent = u64::from(j).pow(c + 1);
    let cap = BigUint::from(MAX_MATERIALIZED);
    let target = match u32::try_from(exponent) {
        Ok(e) if e < 64 => CappedNat::capped(BigUint::from(1u64 << e), &cap),
        _ => CappedNat::Overflow(cap),
    };
    Ok(seq.with_meta(Meta {
        construction: "polypower".into(),
        target: Some(target),
        ..Meta::default()
    }))
}

/// `2^(k^c)`, saturating.
fn pow2_pow(k: u64, c: u32) -> u64 {
    match k.checked_pow(c) {
        Some(e) if e < 64 => 1 << e,
        _ => u64::MAX,
    }
}

/// First `prefix_len` entries of the root-log sequence in dimension
/// `d + 2c + 3`.
///
/// Variable layout, left to right: one separator variable `X_{d+2c+3}`,
/// then `2c + 2` variables for the iterated track powers, then the
/// `d + 2` variables `X_d, …, X_0, Y` of the identity sequence. Entries
/// `0..=2^((c+1)^2)` are descending pure powers of the separator; entry
/// `i` beyond that, with `k = √[c]{log i}`, joins `a_k` and entry
/// `i - 2^(k^c)` of the `c`-level track power over the doubling family for
/// `k + 1`. The identity sequence `a` is `Seq(ω^d, l_a)` with
/// `l_a = max(2, k_max + 1)`.
pub fn seq_rootlog(c: u32, d: usize, prefix_len: u64) -> Result<IdealSequence> {
    if c == 0 {
        return Err(Error::Parse("seq_rootlog needs c ≥ 1".into()));
    }
    if prefix_len == 0 {
        return Err(Error::Parse("prefix length must be positive".into()));
    }
    check_budget(u128::from(prefix_len), "seq_rootlog prefix")?;
    let sq = (c + 1) * (c + 1);
    if sq >= 64 {
        return Err(Error::BudgetExceeded(format!("2^{sq} separator entries")));
    }
    let sep_count = 1u64 << sq;
    let f = ParamFn::RootLog(c);
    let nvars = d + 2 * c as usize + 5;
    let b_offset = 1;
    let a_offset = 2 * c as usize + 3;

    let k_max = f.eval(prefix_len - 1);
    let alpha = Ordinal::omega_pow(d);
    let l_a = 2.max(k_max + 1);
    let a = MaclaganBuilder::new(d, BigUint::from(MAX_MATERIALIZED))
        .prefix(&alpha, l_a, k_max + 1)?;

    let mut ideals = Vec::with_capacity(prefix_len as usize);
    for i in 0..prefix_len {
        let ideal = if i <= sep_count {
            let e = u32::try_from(sep_count - i + 1).expect("sq < 64 keeps this small");
            MonomialIdeal::new(nvars, [Monomial::power(nvars, 0, e)])?
        } else {
            let k = f.eval(i);
            let offset = i - pow2_pow(k, c);
            let block = PolyPower::new(c, u32::try_from(k + 1).expect("k ≤ 64"));
            debug_assert!(u128::from(offset) < block.len());
            let b = block.entry(offset).embed(nvars, b_offset);
            let a = a.ideals[k as usize].embed(nvars, a_offset);
            a.sum(&b)?
        };
        ideals.push(ideal);
    }
    // l from the theorem: 2^((c+4)^2) + 1
    let l = match 1u64.checked_shl((c + 4) * (c + 4)) {
        Some(p) if (c + 4) * (c + 4) < 64 => p + 1,
        _ => u64::MAX,
    };
    let seq = IdealSequence::new(nvars - 2, l, f, ideals)?;
    Ok(seq.with_meta(Meta {
        construction: "rootlog".into(),
        alpha: Some(alpha),
        ..Meta::default()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{verify_bad, verify_degrees, Badness, DegreeCheck, DegreeMode};

    fn ideals(nvars: usize, list: &[&[&[u32]]]) -> Vec<MonomialIdeal> {
        list.iter().map(|g| MonomialIdeal::from_exps(nvars, g).unwrap()).collect()
    }

    #[test]
    fn doubling_base_and_first_step() {
        assert_eq!(seq_exp(0).unwrap().ideals, ideals(2, &[&[&[0, 2]], &[&[0, 1]]]));
        assert_eq!(
            seq_exp(1).unwrap().ideals,
            ideals(2, &[&[&[1, 1], &[0, 4]], &[&[1, 1], &[0, 3]], &[&[1, 0], &[0, 4]]])
        );
    }

    #[test]
    fn doubling_family_is_bad_with_bounded_degree() {
        for j in 0..=8 {
            let s = seq_exp(j).unwrap();
            assert_eq!(s.len() as u64, (1 << j) + 1);
            assert!(s.max_degree() <= 2 * u64::from(j) + 2);
            assert_eq!(verify_bad(&s), Badness::Ok, "j = {j}");
        }
    }

    #[test]
    fn track_product_of_two_doubling_bases() {
        let a = seq_exp(0).unwrap();
        let p = seq_track_product(&a, &a).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.d, 2);
        // (X_2, X_1, X_0, Y)
        assert_eq!(p.ideals[0], MonomialIdeal::from_exps(4, &[&[1, 0, 0, 2], &[0, 1, 0, 2]]).unwrap());
        assert_eq!(p.ideals[3], MonomialIdeal::from_exps(4, &[&[1, 0, 0, 1], &[0, 1, 0, 1]]).unwrap());
        assert_eq!(verify_bad(&p), Badness::Ok);
        assert_eq!(p.max_degree(), a.max_degree() + 1);
    }

    #[test]
    fn track_product_rejects_mixed_dimensions() {
        let a = seq_exp(1).unwrap();
        let b = seq_track_product(&a, &a).unwrap();
        assert_eq!(seq_track_product(&a, &b), Err(Error::DimensionMismatch(0, 2)));
    }

    #[test]
    fn two_fold_power_is_the_square_track_product() {
        let a = seq_exp(2).unwrap();
        let prod = seq_track_product(&a, &a).unwrap();
        let pow = seq_track_power(&a, 2).unwrap();
        assert_eq!(prod.ideals, pow.ideals);
    }

    #[test]
    fn track_powers_stay_bad() {
        let a = seq_exp(1).unwrap();
        for factors in 1..=4 {
            let p = seq_track_power(&a, factors).unwrap();
            assert_eq!(p.len(), 3usize.pow(factors));
            assert_eq!(verify_bad(&p), Badness::Ok);
            assert!(p.max_degree() < a.max_degree() + u64::from(factors));
        }
    }

    #[test]
    fn polypower_small_cases() {
        assert_eq!(seq_polypower(0, 3).unwrap().ideals, seq_exp(3).unwrap().ideals);
        let p = seq_polypower(1, 1).unwrap();
        assert!(p.len() >= 2);
        assert_eq!(verify_bad(&p), Badness::Ok);
        let p = seq_polypower(1, 2).unwrap();
        assert!(p.len() >= 16);
        assert!(p.max_degree() <= 12);
        assert_eq!(verify_bad(&p), Badness::Ok);
        let p = seq_polypower(2, 2).unwrap();
        assert!(p.len() >= 1 << 8);
        assert_eq!(p.d, 4);
        assert!(p.max_degree() <= PolyPower::new(2, 2).degree_bound());
        assert_eq!(verify_bad(&p), Badness::Ok);
    }

    #[test]
    fn lazy_polypower_matches_materialized() {
        let lazy = PolyPower::new(1, 3);
        let full = seq_polypower(1, 3).unwrap();
        assert_eq!(full.len() as u128, lazy.len());
        for (i, ideal) in full.ideals.iter().enumerate() {
            assert_eq!(&lazy.entry(i as u64), ideal);
        }
    }

    #[test]
    fn polypower_budget() {
        assert!(matches!(seq_polypower(3, 5), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn rootlog_separator_block() {
        let s = seq_rootlog(1, 0, 17).unwrap();
        let nvars = s.nvars();
        assert_eq!(nvars, 7);
        assert_eq!(s.ideals[0], MonomialIdeal::new(nvars, [Monomial::power(nvars, 0, 17)]).unwrap());
        assert_eq!(s.ideals[16], MonomialIdeal::new(nvars, [Monomial::power(nvars, 0, 1)]).unwrap());
        assert_eq!(verify_bad(&s), Badness::Ok);
    }

    #[test]
    fn rootlog_prefixes_are_bad() {
        for (c, d, n) in [(1, 0, 300), (1, 1, 200), (2, 0, 600)] {
            let s = seq_rootlog(c, d, n).unwrap();
            assert_eq!(s.len() as u64, n);
            assert_eq!(verify_bad(&s), Badness::Ok, "c={c} d={d}");
            assert_eq!(verify_degrees(&s, DegreeMode::Param).unwrap(), DegreeCheck::Ok);
        }
    }
}

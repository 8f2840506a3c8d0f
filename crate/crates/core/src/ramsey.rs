//! Colorings of pairs and the adjacent-Ramsey side of bad sequences.
//!
//! A bad sequence `I_0, …, I_R` colors each pair `i < j` with the exponent
//! vector of the first generator of `I_j` outside `I_i`. A triple `a < b < c`
//! with `C(a,b) ≤ C(b,c)` would put `I_b`'s witness inside `I_c`'s ideal
//! structure in a way badness forbids, so reductions of bad sequences have
//! no monotone adjacent triple.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::IdealSequence;
use crate::error::{Error, Result};

/// A coloring `C(x, y) ∈ ℕ^r` of the pairs `lo ≤ x < y ≤ hi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawColoring", into = "RawColoring")]
pub struct Coloring {
    lo: u64,
    hi: u64,
    r: usize,
    // pair (x, y) lives at slot (b(b-1)/2 + a) * r with a = x-lo, b = y-lo
    table: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    lo: u64,
    hi: u64,
    r: usize,
    entries: Vec<(u64, u64, Vec<u32>)>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        if raw.lo > raw.hi {
            return Err(Error::Parse(format!("empty domain {}..{}", raw.lo, raw.hi)));
        }
        let mut c = Coloring::new(raw.lo, raw.hi, raw.r);
        let mut seen = vec![false; c.pairs()];
        for (x, y, v) in raw.entries {
            c.set(x, y, &v)?;
            seen[c.slot(x, y)] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            let (x, y) = c.pair_at(missing);
            return Err(Error::Parse(format!("no color for pair ({x}, {y})")));
        }
        Ok(c)
    }
}

impl From<Coloring> for RawColoring {
    fn from(c: Coloring) -> Self {
        let entries = c.iter().map(|(x, y, v)| (x, y, v.to_vec())).collect();
        RawColoring { lo: c.lo, hi: c.hi, r: c.r, entries }
    }
}

impl Coloring {
    /// The all-zero coloring of `{lo..hi}`.
    pub fn new(lo: u64, hi: u64, r: usize) -> Self {
        assert!(lo <= hi, "empty domain");
        let n = hi - lo + 1;
        let pairs = (n * (n - 1) / 2) as usize;
        Coloring { lo, hi, r, table: vec![0; pairs * r] }
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn pairs(&self) -> usize {
        let n = self.hi - self.lo + 1;
        (n * (n - 1) / 2) as usize
    }

    fn in_domain(&self, x: u64, y: u64) -> bool {
        self.lo <= x && x < y && y <= self.hi
    }

    fn slot(&self, x: u64, y: u64) -> usize {
        let (a, b) = (x - self.lo, y - self.lo);
        (b * (b - 1) / 2 + a) as usize
    }

    fn pair_at(&self, slot: usize) -> (u64, u64) {
        let mut b = 1u64;
        while (b * (b + 1) / 2) as usize <= slot {
            b += 1;
        }
        let a = slot as u64 - b * (b - 1) / 2;
        (a + self.lo, b + self.lo)
    }

    pub fn get(&self, x: u64, y: u64) -> Option<&[u32]> {
        if !self.in_domain(x, y) {
            return None;
        }
        let s = self.slot(x, y) * self.r;
        Some(&self.table[s..s + self.r])
    }

    pub fn set(&mut self, x: u64, y: u64, v: &[u32]) -> Result<()> {
        if !self.in_domain(x, y) {
            return Err(Error::OutOfDomain(x, y, y));
        }
        if v.len() != self.r {
            return Err(Error::LengthMismatch(self.r, v.len()));
        }
        let s = self.slot(x, y) * self.r;
        self.table[s..s + self.r].copy_from_slice(v);
        Ok(())
    }

    /// All pairs ordered by `(y, x)`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64, &[u32])> + '_ {
        (self.lo + 1..=self.hi)
            .flat_map(move |y| (self.lo..y).map(move |x| (x, y)))
            .map(move |(x, y)| (x, y, self.get(x, y).unwrap()))
    }

    /// The same colors on the domain moved up by `offset`.
    pub fn shifted(&self, offset: u64) -> Coloring {
        Coloring { lo: self.lo + offset, hi: self.hi + offset, table: self.table.clone(), ..*self }
    }

    /// First pair (in `(y, x)` order) with a coordinate above `max{x, y}`.
    pub fn unbounded_pair(&self) -> Option<(u64, u64)> {
        self.iter()
            .find(|(_, y, v)| v.iter().any(|&c| u64::from(c) > *y))
            .map(|(x, y, _)| (x, y))
    }

    pub fn is_bounded(&self) -> bool {
        self.unbounded_pair().is_none()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("colorings always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn leq(u: &[u32], v: &[u32]) -> bool {
    u.iter().zip(v).all(|(a, b)| a <= b)
}

/// Colors pair `i < j` by the first generator of `I_j` (in stored order)
/// that lies outside `I_i`.
pub fn reduce_to_coloring(s: &IdealSequence) -> Result<Coloring> {
    let n = s.len() as u64;
    let r = s.nvars();
    let ideals = &s.ideals;
    let rows: Vec<std::result::Result<Vec<u32>, usize>> = (1..ideals.len())
        .into_par_iter()
        .map(|j| {
            let mut row = Vec::with_capacity(j * r);
            for i in 0..j {
                match ideals[j].gens().iter().find(|g| !ideals[i].member_unchecked(g)) {
                    Some(g) => row.extend_from_slice(g.exps()),
                    None => return Err(i),
                }
            }
            Ok(row)
        })
        .collect();
    let worst = rows
        .iter()
        .enumerate()
        .filter_map(|(k, row)| row.as_ref().err().map(|&i| (i, k + 1)))
        .min();
    if let Some((i, j)) = worst {
        return Err(Error::NotBad(i, j));
    }
    let mut table = Vec::with_capacity((n * n.saturating_sub(1) / 2) as usize * r);
    for row in rows {
        table.extend(row.expect("errors handled above"));
    }
    Ok(Coloring { lo: 0, hi: n - 1, r, table })
}

/// The lexicographically least `a < b < c` with `C(a,b) ≤ C(b,c)`.
pub fn find_adjacent_monotone(c: &Coloring) -> Option<(u64, u64, u64)> {
    // for each middle point b, the least c answering each distinct C(a, b)
    let answers: Vec<HashMap<&[u32], Option<u64>>> = (c.lo..=c.hi)
        .into_par_iter()
        .map(|b| {
            let mut memo: HashMap<&[u32], Option<u64>> = HashMap::new();
            for a in c.lo..b {
                let u = c.get(a, b).unwrap();
                memo.entry(u).or_insert_with(|| {
                    (b + 1..=c.hi).find(|&z| leq(u, c.get(b, z).unwrap()))
                });
            }
            memo
        })
        .collect();
    (c.lo..=c.hi).into_par_iter().find_map_first(|a| {
        (a + 1..=c.hi).find_map(|b| {
            let u = c.get(a, b).unwrap();
            answers[(b - c.lo) as usize][u].map(|z| (a, b, z))
        })
    })
}

/// `0` when `C(x,y) ≤ C(y,z)`, otherwise the 1-based index of the first
/// coordinate where `C(x,y)` is larger.
pub fn triple_coloring(c: &Coloring, x: u64, y: u64, z: u64) -> Result<u64> {
    let (Some(u), Some(v)) = (c.get(x, y), c.get(y, z)) else {
        return Err(Error::OutOfDomain(x, y, z));
    };
    Ok(u.iter().zip(v).position(|(a, b)| a > b).map_or(0, |k| k as u64 + 1))
}

/// Outcome of [`adjacent_ramsey_number`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyNumber {
    /// Least `R` such that every bounded coloring of `{l..R}` has a
    /// monotone adjacent triple.
    pub value: Option<u64>,
    /// The least counterexample for every `R` that fails, in increasing `R`.
    pub witnesses: Vec<Coloring>,
}

/// Limits on the exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RamseyBudget {
    /// Largest allowed product over pairs of `(max{x,y}+1)^r`.
    pub max_colorings: u128,
    pub max_seconds: Option<u64>,
}

impl Default for RamseyBudget {
    fn default() -> Self {
        RamseyBudget { max_colorings: 1 << 40, max_seconds: None }
    }
}

fn colorings_count(l: u64, hi: u64, r: usize) -> u128 {
    let mut total: u128 = 1;
    for y in l + 1..=hi {
        let per = u128::from(y + 1).saturating_pow(r as u32);
        for _ in l..y {
            total = total.saturating_mul(per);
        }
    }
    total
}

struct Dfs<'a> {
    c: Coloring,
    pairs: Vec<(u64, u64)>,
    started: Instant,
    budget: &'a RamseyBudget,
}

impl Dfs<'_> {
    /// Fills pairs from `k` on without creating a monotone triple.
    fn extend(&mut self, k: usize) -> Result<bool> {
        if k == self.pairs.len() {
            return Ok(true);
        }
        if let Some(secs) = self.budget.max_seconds {
            if self.started.elapsed().as_secs() >= secs {
                return Err(Error::BudgetExceeded(format!("ran out of {secs} s")));
            }
        }
        let (x, y) = self.pairs[k];
        let r = self.c.r;
        let mut v = vec![0u32; r];
        loop {
            self.c.set(x, y, &v)?;
            let creates_triple =
                (self.c.lo..x).any(|a| leq(self.c.get(a, x).unwrap(), &v));
            if !creates_triple && self.extend(k + 1)? {
                return Ok(true);
            }
            // next vector in {0..y}^r, last coordinate fastest
            let Some(pos) = (0..r).rev().find(|&p| u64::from(v[p]) < y) else {
                return Ok(false);
            };
            v[pos] += 1;
            v[pos + 1..].iter_mut().for_each(|e| *e = 0);
        }
    }
}

/// Least `R ≤ r_max` such that every coloring of `{l..R}` into `ℕ^r` with
/// `max C(x,y) ≤ max{x,y}` has `x₁ < x₂ < x₃` with `C(x₁,x₂) ≤ C(x₂,x₃)`.
pub fn adjacent_ramsey_number(
    l: u64,
    r: usize,
    r_max: u64,
    budget: &RamseyBudget,
) -> Result<RamseyNumber> {
    let started = Instant::now();
    let mut witnesses = Vec::new();
    for hi in l..=r_max {
        let count = colorings_count(l, hi, r);
        if count > budget.max_colorings {
            return Err(Error::BudgetExceeded(format!(
                "{count} colorings of {{{l}..{hi}}} exceed {}",
                budget.max_colorings
            )));
        }
        let c = Coloring::new(l, hi, r);
        let pairs: Vec<(u64, u64)> = c.iter().map(|(x, y, _)| (x, y)).collect();
        let mut dfs = Dfs { c, pairs, started, budget };
        if dfs.extend(0)? {
            witnesses.push(dfs.c);
        } else {
            return Ok(RamseyNumber { value: Some(hi), witnesses });
        }
    }
    Ok(RamseyNumber { value: None, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{seq_maclagan, verify_bad, Badness};
    use crate::hierarchy::ParamFn;
    use crate::ideals::MonomialIdeal;
    use crate::ordinals::Ordinal;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn coloring(lo: u64, hi: u64, r: usize, entries: &[(u64, u64, &[u32])]) -> Coloring {
        let mut c = Coloring::new(lo, hi, r);
        for (x, y, v) in entries {
            c.set(*x, *y, v).unwrap();
        }
        c
    }

    fn seq(list: &[&[&[u32]]]) -> IdealSequence {
        let ideals = list.iter().map(|g| MonomialIdeal::from_exps(2, g).unwrap()).collect();
        IdealSequence::new(0, 0, ParamFn::Id, ideals).unwrap()
    }

    /// Every triple, in lexicographic order.
    fn brute_monotone(c: &Coloring) -> Option<(u64, u64, u64)> {
        for a in c.lo()..=c.hi() {
            for b in a + 1..=c.hi() {
                for z in b + 1..=c.hi() {
                    if triple_coloring(c, a, b, z).unwrap() == 0 {
                        return Some((a, b, z));
                    }
                }
            }
        }
        None
    }

    #[test]
    fn reduce_examples() {
        let c = reduce_to_coloring(&seq(&[&[&[1, 0]], &[&[0, 1]]])).unwrap();
        assert_eq!(c.get(0, 1), Some(&[0, 1][..]));

        let base = seq_maclagan(&Ordinal::zero(), 1, 0, &BigUint::from(100u32)).unwrap();
        let c = reduce_to_coloring(&base).unwrap();
        assert_eq!(find_adjacent_monotone(&c), None);

        assert_eq!(reduce_to_coloring(&seq(&[&[&[0, 1]], &[&[0, 2]]])), Err(Error::NotBad(0, 1)));
    }

    #[test]
    fn reduce_reports_least_pair() {
        let s = seq(&[&[&[0, 1]], &[&[1, 0]], &[&[0, 3]], &[&[2, 0]]]);
        assert_eq!(reduce_to_coloring(&s), Err(Error::NotBad(0, 2)));
    }

    #[test]
    fn monotone_examples() {
        let constant = coloring(0, 2, 1, &[(0, 1, &[0]), (0, 2, &[0]), (1, 2, &[0])]);
        assert_eq!(find_adjacent_monotone(&constant), Some((0, 1, 2)));
        for v in 0..3 {
            let c = coloring(0, 2, 1, &[(0, 1, &[1]), (0, 2, &[v]), (1, 2, &[0])]);
            assert_eq!(find_adjacent_monotone(&c), None);
        }
    }

    #[test]
    fn triple_examples() {
        let c = |u: &[u32], v: &[u32]| coloring(0, 2, 2, &[(0, 1, u), (1, 2, v)]);
        assert_eq!(triple_coloring(&c(&[1, 1], &[2, 1]), 0, 1, 2), Ok(0));
        assert_eq!(triple_coloring(&c(&[0, 3], &[5, 2]), 0, 1, 2), Ok(2));
        assert_eq!(triple_coloring(&c(&[4, 0], &[3, 9]), 0, 1, 2), Ok(1));
        assert_eq!(triple_coloring(&c(&[0, 0], &[0, 0]), 0, 2, 3), Err(Error::OutOfDomain(0, 2, 3)));
        assert_eq!(triple_coloring(&c(&[0, 0], &[0, 0]), 1, 0, 2), Err(Error::OutOfDomain(1, 0, 2)));
    }

    #[test]
    fn ramsey_examples() {
        let budget = RamseyBudget::default();
        let got = adjacent_ramsey_number(0, 1, 5, &budget).unwrap();
        assert_eq!(got.value, Some(3));
        let w2 = coloring(0, 2, 1, &[(0, 1, &[1]), (0, 2, &[0]), (1, 2, &[0])]);
        assert_eq!(got.witnesses.last(), Some(&w2));

        let none = adjacent_ramsey_number(0, 1, 2, &budget).unwrap();
        assert_eq!(none.value, None);
        assert_eq!(none.witnesses.last(), Some(&w2));

        assert_eq!(adjacent_ramsey_number(0, 0, 2, &budget).unwrap().value, Some(2));
    }

    #[test]
    fn ramsey_witnesses_are_counterexamples() {
        let got = adjacent_ramsey_number(1, 1, 6, &RamseyBudget::default()).unwrap();
        assert!(got.value.is_some());
        for w in &got.witnesses {
            assert!(w.is_bounded());
            assert_eq!(brute_monotone(w), None);
        }
    }

    #[test]
    fn ramsey_budget() {
        let tiny = RamseyBudget { max_colorings: 10, max_seconds: None };
        assert!(matches!(adjacent_ramsey_number(0, 2, 5, &tiny), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn coloring_json() {
        let c = coloring(1, 3, 1, &[(1, 2, &[2]), (1, 3, &[0]), (2, 3, &[1])]);
        let json = c.to_json();
        assert_eq!(
            json,
            r#"{"lo":1,"hi":3,"r":1,"entries":[[1,2,[2]],[1,3,[0]],[2,3,[1]]]}"#
        );
        assert_eq!(Coloring::from_json(&json).unwrap(), c);
        assert!(Coloring::from_json(r#"{"lo":0,"hi":2,"r":1,"entries":[[0,1,[0]]]}"#).is_err());
        assert!(Coloring::from_json(r#"{"lo":0,"hi":1,"r":1,"entries":[[1,0,[0]]]}"#).is_err());
    }

    #[test]
    fn boundedness_after_shift() {
        let base = seq_maclagan(&Ordinal::finite(1), 1, 0, &BigUint::from(100u32)).unwrap();
        let c = reduce_to_coloring(&base).unwrap();
        // deg(Seq(1,1)_j) ≤ l + h + j with h = 3 here
        assert!(c.shifted(base.l + 3).is_bounded());
    }

    proptest! {
        #[test]
        fn memoized_search_matches_brute_force(
            n in 1u64..8,
            r in 0usize..3,
            seed in proptest::collection::vec(0u32..4, 0..100),
        ) {
            let mut c = Coloring::new(0, n, r);
            let mut k = 0;
            let pairs: Vec<_> = c.iter().map(|(x, y, _)| (x, y)).collect();
            for (x, y) in pairs {
                let v: Vec<u32> = (0..r).map(|_| { k += 1; seed.get(k).copied().unwrap_or(0) }).collect();
                c.set(x, y, &v).unwrap();
            }
            prop_assert_eq!(find_adjacent_monotone(&c), brute_monotone(&c));
        }

        #[test]
        fn triple_zero_iff_leq(u in proptest::collection::vec(0u32..5, 3), v in proptest::collection::vec(0u32..5, 3)) {
            let c = coloring(0, 2, 3, &[(0, 1, &u), (1, 2, &v)]);
            prop_assert_eq!(triple_coloring(&c, 0, 1, 2).unwrap() == 0, leq(&u, &v));
        }

        #[test]
        fn monotone_reduction_means_not_bad(
            gens in proptest::collection::vec(proptest::collection::vec(0u32..3, 2), 1..12),
            split in proptest::collection::vec(1usize..3, 6),
        ) {
            let mut ideals = Vec::new();
            let mut it = gens.into_iter();
            for k in split {
                let chunk: Vec<_> = it.by_ref().take(k).map(crate::ideals::Monomial::new).collect();
                if chunk.is_empty() { break; }
                ideals.push(MonomialIdeal::new(2, chunk).unwrap());
            }
            let s = IdealSequence::new(0, 0, ParamFn::Id, ideals).unwrap();
            match reduce_to_coloring(&s) {
                Ok(c) => {
                    prop_assert_eq!(verify_bad(&s), Badness::Ok);
                    prop_assert_eq!(find_adjacent_monotone(&c), None);
                }
                Err(Error::NotBad(i, j)) => prop_assert_eq!(verify_bad(&s), Badness::Violation(i, j)),
                Err(e) => prop_assert!(false, "unexpected {e}"),
            }
        }
    }
}

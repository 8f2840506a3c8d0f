//! Monomials and monomial ideals in `K[X_d, …, X_0, Y]`.
//!
//! Only exponent vectors matter: a monomial lies in `⟨G⟩` exactly when some
//! generator divides it, so containment of monomial ideals is a question
//! about the coordinatewise order on `ℕ^(d+2)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector `(i_d, …, i_0, j)`; the last coordinate is the `Y` exponent.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The monomial `var^e` among `nvars` variables (`var` indexes the vector).
    pub fn power(nvars: usize, var: usize, e: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[var] = e;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        check_len(self.nvars(), other.nvars())?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_len(self.nvars(), other.nvars())?;
        Ok(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        })
    }

    /// Places this monomial's exponents at `offset` inside a vector of
    /// `nvars` zeros.
    pub fn embed(&self, nvars: usize, offset: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[offset..offset + self.exps.len()].copy_from_slice(&self.exps);
        Monomial { exps }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

fn check_len(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::LengthMismatch(a, b))
    }
}

pub fn divides(m: &Monomial, m2: &Monomial) -> Result<bool> {
    m.divides(m2)
}

/// A monomial ideal stored by its minimal generators in lexicographic order.
///
/// The empty generator set is the zero ideal; `{1}` is the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MonomialIdeal {
    #[serde(skip)]
    nvars: usize,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g:?}")?;
        }
        f.write_str(">")
    }
}

/// Drops every generator divisible by another one.
pub fn minimalize(
    nvars: usize,
    gens: impl IntoIterator<Item = Monomial>,
) -> Result<MonomialIdeal> {
    let mut all: Vec<Monomial> = gens.into_iter().collect();
    for g in &all {
        check_len(nvars, g.nvars())?;
    }
    // a divisor never has larger degree, so scanning by degree sees divisors first
    all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for g in all {
        if !kept.iter().any(|h| h.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    Ok(MonomialIdeal { nvars, gens: kept })
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(nvars, gens)
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    /// Ideal generated by the given exponent vectors.
    pub fn from_exps(nvars: usize, gens: &[&[u32]]) -> Result<Self> {
        minimalize(nvars, gens.iter().map(|e| Monomial::new(e.to_vec())))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].degree() == 0
    }

    pub fn member(&self, m: &Monomial) -> Result<bool> {
        check_len(self.nvars, m.nvars())?;
        Ok(self.member_unchecked(m))
    }

    pub(crate) fn member_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        check_len(self.nvars, other.nvars)?;
        Ok(self.contains_unchecked(other))
    }

    pub(crate) fn contains_unchecked(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.member_unchecked(g))
    }

    /// Degree of the ideal: the largest degree among its minimal generators.
    pub fn degree(&self) -> u64 {
        degree_set(&self.gens)
    }

    /// Multiplies every generator by `m`.
    pub fn scaled(&self, m: &Monomial) -> Result<Self> {
        check_len(self.nvars, m.nvars())?;
        // multiplying by a monomial preserves the antichain and the order
        let gens = self.gens.iter().map(|g| g.mul(m)).collect::<Result<_>>()?;
        Ok(MonomialIdeal { nvars: self.nvars, gens })
    }

    /// The sum of two ideals.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        check_len(self.nvars, other.nvars)?;
        minimalize(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    /// Re-homes every generator into a larger ring at `offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: self.gens.iter().map(|g| g.embed(nvars, offset)).collect(),
        }
    }

    pub fn from_json_gens(nvars: usize, gens: Vec<Vec<u32>>) -> Result<Self> {
        minimalize(nvars, gens.into_iter().map(Monomial::new))
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    /// The variable count is taken from the first generator; an empty array
    /// yields a zero ideal with unknown width that callers must re-home.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let gens: Vec<Vec<u32>> = Vec::deserialize(d)?;
        let nvars = gens.first().map_or(0, Vec::len);
        MonomialIdeal::from_json_gens(nvars, gens).map_err(serde::de::Error::custom)
    }
}

pub fn member(ideal: &MonomialIdeal, m: &Monomial) -> Result<bool> {
    ideal.member(m)
}

pub fn contains(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<bool> {
    i.contains(j)
}

pub fn degree_monomial(m: &Monomial) -> u64 {
    m.degree()
}

/// Largest degree in the set, 0 for the empty set.
pub fn degree_set(gens: &[Monomial]) -> u64 {
    gens.iter().map(Monomial::degree).max().unwrap_or(0)
}

/// The least `deg(G)` over generating sets `G` of the ideal.
///
/// Every monomial generating set contains the minimal generators, so the
/// minimum is attained there.
pub fn degree_ideal(ideal: &MonomialIdeal) -> u64 {
    ideal.degree()
}

/// All exponent vectors with `nvars` coordinates and total degree at most
/// `max_degree`, in lexicographic order.
pub fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: usize, budget: u32, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::new(prefix.clone()));
            return;
        }
        for e in 0..=budget {
            prefix.push(e);
            rec(prefix, left - 1, budget - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(nvars), nvars, max_degree, &mut out);
    out
}

//! Exhaustive search for the longest bad sequence with `deg(I_i) ≤ l + f(i)`.
//!
//! Only feasible for tiny universes, which is the point: the numbers found
//! here are exact and ground the lower-bound certificates built elsewhere.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::constructions::{IdealSequence, Meta};
use crate::error::{Error, Result};
use crate::hierarchy::ParamFn;
use crate::ideals::{monomials_up_to, Monomial, MonomialIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_universe: usize,
    pub max_seconds: Option<u64>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 50_000_000, max_universe: 20_000, max_seconds: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub include_zero: bool,
    /// Cut branches that cannot beat the best sequence so far.
    pub prune: bool,
    /// Start only from ideals that are least under permuting `X_d, …, X_0`.
    pub symmetry: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { include_zero: true, prune: true, symmetry: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    /// The maximal length, present only when the search ran to completion.
    pub value: Option<u64>,
    pub exhausted: bool,
    /// A longest bad sequence found.
    pub witness: IdealSequence,
}

impl SearchResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("results always serialize")
    }
}

fn ideal_degree_then_gens(a: &MonomialIdeal, b: &MonomialIdeal) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.gens().cmp(b.gens()))
}

/// Every monomial ideal in `d + 2` variables whose minimal generators have
/// degree at most `deg_bound`, ordered by degree and then by generators.
///
/// Ideals of degree at most `D` form a prefix of the list for any larger bound.
pub fn enumerate_universe(
    d: usize,
    deg_bound: u32,
    include_zero: bool,
    max_universe: usize,
) -> Result<Vec<MonomialIdeal>> {
    let nvars = d + 2;
    let monos = monomials_up_to(nvars, deg_bound);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    antichains(&monos, 0, &mut chosen, &mut |set| {
        if set.is_empty() && !include_zero {
            return Ok(());
        }
        if out.len() >= max_universe {
            return Err(Error::BudgetExceeded(format!(
                "more than {max_universe} ideals of degree at most {deg_bound}"
            )));
        }
        let gens = set.iter().map(|&k| monos[k].clone());
        out.push(MonomialIdeal::new(nvars, gens)?);
        Ok(())
    })?;
    out.sort_by(ideal_degree_then_gens);
    Ok(out)
}

fn antichains(
    monos: &[Monomial],
    from: usize,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    emit(chosen)?;
    for k in from..monos.len() {
        let m = &monos[k];
        let comparable = chosen.iter().any(|&c| {
            monos[c].divides(m).unwrap_or(false) || m.divides(&monos[c]).unwrap_or(false)
        });
        if !comparable {
            chosen.push(k);
            antichains(monos, k + 1, chosen, emit)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// Least image of `ideal` under permutations of the `X` variables.
fn canonical(ideal: &MonomialIdeal) -> MonomialIdeal {
    let nvars = ideal.nvars();
    let xs = nvars - 1;
    let mut perm: Vec<usize> = (0..xs).collect();
    let mut best = ideal.clone();
    // Heap's algorithm over the X coordinates; Y stays last
    let mut c = vec![0usize; xs];
    let mut k = 0;
    while k < xs {
        if c[k] < k {
            if k % 2 == 0 {
                perm.swap(0, k);
            } else {
                perm.swap(c[k], k);
            }
            let image = MonomialIdeal::new(
                nvars,
                ideal.gens().iter().map(|g| {
                    let e = g.exps();
                    let mut v: Vec<u32> = perm.iter().map(|&p| e[p]).collect();
                    v.push(e[xs]);
                    Monomial::new(v)
                }),
            )
            .expect("permutation keeps the length");
            if image.gens() < best.gens() {
                best = image;
            }
            c[k] += 1;
            k = 0;
        } else {
            c[k] = 0;
            k += 1;
        }
    }
    best
}

struct Universe {
    d: usize,
    include_zero: bool,
    max_universe: usize,
    bound: u32,
    ideals: Vec<MonomialIdeal>,
    // contains[a][b]: ideal a contains ideal b
    contains: Vec<Vec<bool>>,
    // prefix length for each degree bound up to `bound`
    prefix: Vec<usize>,
}

impl Universe {
    fn new(d: usize, include_zero: bool, max_universe: usize) -> Self {
        Universe {
            d,
            include_zero,
            max_universe,
            bound: 0,
            ideals: Vec::new(),
            contains: Vec::new(),
            prefix: Vec::new(),
        }
    }

    /// Number of ideals of degree at most `deg`, growing the universe if needed.
    fn size_at(&mut self, deg: u64) -> Result<usize> {
        let deg = u32::try_from(deg)
            .map_err(|_| Error::BudgetExceeded(format!("degree bound {deg}")))?;
        if self.prefix.is_empty() || deg > self.bound {
            self.grow(deg)?;
        }
        Ok(self.prefix[deg as usize])
    }

    fn grow(&mut self, deg: u32) -> Result<()> {
        let ideals = enumerate_universe(self.d, deg, self.include_zero, self.max_universe)?;
        let n = ideals.len();
        self.contains = ideals
            .iter()
            .map(|a| ideals.iter().map(|b| a.contains(b).unwrap_or(false)).collect())
            .collect();
        self.prefix = (0..=deg)
            .map(|b| ideals.partition_point(|i| i.degree() <= u64::from(b)))
            .collect();
        debug_assert_eq!(self.prefix[deg as usize], n);
        self.ideals = ideals;
        self.bound = deg;
        Ok(())
    }
}

struct Dfs<'a> {
    universe: Universe,
    l: u64,
    f: &'a ParamFn,
    options: &'a SearchOptions,
    budget: &'a SearchBudget,
    started: Instant,
    nodes: u64,
    stopped: bool,
    blocked: Vec<u32>,
    path: Vec<usize>,
    best: Vec<usize>,
    const_size: Option<usize>,
}

impl Dfs<'_> {
    fn out_of_budget(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return true;
        }
        if let Some(secs) = self.budget.max_seconds {
            if self.nodes.is_multiple_of(4096) && self.started.elapsed().as_secs() >= secs {
                return true;
            }
        }
        false
    }

    fn visit(&mut self) -> Result<()> {
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        if self.out_of_budget() {
            self.stopped = true;
            return Ok(());
        }
        let pos = self.path.len() as u64;
        let deg = self.l.saturating_add(self.f.eval(pos));
        let size = match self.universe.size_at(deg) {
            Ok(n) => n,
            Err(Error::BudgetExceeded(_)) if !self.path.is_empty() => {
                self.stopped = true;
                return Ok(());
            }
            Err(e) => return Err(e),
        };
        if self.blocked.len() < size {
            self.grow_blocked();
        }
        if self.options.prune {
            if let Some(n) = self.const_size {
                let open = (0..n).filter(|&k| self.blocked[k] == 0).count();
                if self.path.len() + open <= self.best.len() {
                    return Ok(());
                }
            }
        }
        for k in 0..size {
            if self.blocked[k] != 0 {
                continue;
            }
            if self.path.is_empty() && self.options.symmetry {
                let ideal = &self.universe.ideals[k];
                if canonical(ideal) != *ideal {
                    continue;
                }
            }
            self.push(k);
            self.visit()?;
            self.pop(k);
            if self.stopped {
                return Ok(());
            }
        }
        Ok(())
    }

    fn grow_blocked(&mut self) {
        let n = self.universe.ideals.len();
        let old = self.blocked.len();
        self.blocked.resize(n, 0);
        for &p in &self.path {
            for k in old..n {
                if self.universe.contains[p][k] {
                    self.blocked[k] += 1;
                }
            }
        }
    }

    fn push(&mut self, k: usize) {
        let row = &self.universe.contains[k];
        for (b, &c) in self.blocked.iter_mut().zip(row) {
            *b += u32::from(c);
        }
        self.path.push(k);
    }

    fn pop(&mut self, k: usize) {
        let row = &self.universe.contains[k];
        for (b, &c) in self.blocked.iter_mut().zip(row) {
            *b -= u32::from(c);
        }
        self.path.pop();
    }
}

/// The maximal number of ideals in a bad sequence with `deg(I_i) ≤ l + f(i)`
/// over `K[X_d, …, X_0, Y]`.
///
/// Running out of nodes, time or universe space mid-search is not an error:
/// the result then carries the best sequence seen and `exhausted = false`.
pub fn max_bad_length(
    d: usize,
    l: u64,
    f: &ParamFn,
    options: &SearchOptions,
    budget: &SearchBudget,
) -> Result<SearchResult> {
    let mut universe = Universe::new(d, options.include_zero, budget.max_universe);
    let const_size = match f {
        ParamFn::Const(c) => Some(universe.size_at(l.saturating_add(*c))?),
        _ => None,
    };
    let mut dfs = Dfs {
        universe,
        l,
        f,
        options,
        budget,
        started: Instant::now(),
        nodes: 0,
        stopped: false,
        blocked: Vec::new(),
        path: Vec::new(),
        best: Vec::new(),
        const_size,
    };
    dfs.visit()?;
    let ideals: Vec<MonomialIdeal> =
        dfs.best.iter().map(|&k| dfs.universe.ideals[k].clone()).collect();
    let witness = IdealSequence::new(d, l, f.clone(), ideals)?.with_meta(Meta {
        construction: "search".into(),
        ..Meta::default()
    });
    let exhausted = !dfs.stopped;
    Ok(SearchResult { value: exhausted.then_some(witness.len() as u64), exhausted, witness })
}

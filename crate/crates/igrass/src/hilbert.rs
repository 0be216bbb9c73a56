//! Dimensions of graded components of `R(n, m, Q)` by counting standard
//! monomials with a weight-constrained dynamic program.
//!
//! A standard monomial is a multichain in the componentwise order on index
//! pairs; the count of multichains of a prescribed `Z^2`-degree, times a
//! knapsack count over the free variables, is the dimension of the graded
//! piece. A positivity certificate `λ` (a linear functional with
//! `λ·w >= 1` on every generator weight) bounds every computation.
//!
//! An independent dense oracle straightens every monomial of the degree and
//! row-reduces the results over the integers.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::classify::{anticanonical, build, TypedVariety};
use crate::error::{Error, Result};
use crate::grading::{is_homogeneous, is_pointed, GradingData, Weight};
use crate::plucker::{is_standard, straighten, Monomial, PairIndex};

/// Default cap on `λ·target` for the dense oracle; override through
/// [`graded_dim_oracle_with_bound`] (the CLI reads `GRASS_ORACLE_BOUND`).
pub const DEFAULT_ORACLE_BOUND: i64 = 8;

/// The pair variables of one grading, ordered lexicographically and tagged
/// with their weights; carrier of the componentwise order.
#[derive(Clone, Debug)]
pub struct ColumnPoset {
    pairs: Vec<PairIndex>,
    weights: Vec<Weight>,
}

impl ColumnPoset {
    pub fn new(g: &GradingData) -> Self {
        let pairs: Vec<PairIndex> = g.pairs().collect();
        let weights = pairs.iter().map(|&p| g.weight(p)).collect();
        Self { pairs, weights }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, idx: usize) -> PairIndex {
        self.pairs[idx]
    }

    pub fn weight(&self, idx: usize) -> Weight {
        self.weights[idx]
    }
}

/// Finds a primitive-ish integer functional `λ` with `λ·w >= 1` for every
/// generator weight, scanning by sup-norm; exists for pointed gradings.
pub fn positivity_certificate(g: &GradingData) -> Result<Weight> {
    if !is_pointed(g) {
        return Err(Error::NoCertificate);
    }
    let ws = g.all_weights();
    let bound = 2 * ws
        .iter()
        .map(|w| w.x.abs().max(w.y.abs()))
        .max()
        .unwrap_or(1)
        + 2;
    for sup in 1..=bound {
        for x in -sup..=sup {
            for y in -sup..=sup {
                if x.abs().max(y.abs()) != sup {
                    continue;
                }
                let lam = Weight::new(x, y);
                if ws.iter().all(|w| lam.dot(*w) >= 1) {
                    return Ok(lam);
                }
            }
        }
    }
    Err(Error::NoCertificate)
}

/// Number of multichains `c_1 ⪯ ... ⪯ c_s` in the poset with total weight
/// `target`; the length is implicitly bounded by `λ·target`.
pub fn chain_count(poset: &ColumnPoset, target: Weight, lambda: Weight) -> BigUint {
    let mut memo: HashMap<(usize, Weight), BigUint> = HashMap::new();
    chains_from(poset, poset.len(), target, lambda, &mut memo)
}

/// Multichains with every element `⪰ poset[lower]`; `lower == poset.len()`
/// means unconstrained. Recursion splits off the minimum element.
fn chains_from(
    poset: &ColumnPoset,
    lower: usize,
    target: Weight,
    lambda: Weight,
    memo: &mut HashMap<(usize, Weight), BigUint>,
) -> BigUint {
    if let Some(v) = memo.get(&(lower, target)) {
        return v.clone();
    }
    let mut total = if target.is_zero() {
        BigUint::from(1u32)
    } else {
        BigUint::zero()
    };
    for c in 0..poset.len() {
        if lower < poset.len() && !poset.pair(lower).leq(&poset.pair(c)) {
            continue;
        }
        let rest = target - poset.weight(c);
        if lambda.dot(rest) < 0 {
            continue;
        }
        total += chains_from(poset, c, rest, lambda, memo);
    }
    memo.insert((lower, target), total.clone());
    total
}

/// Number of exponent vectors `(e_1..e_m)` with `Σ e_l w_l = target`.
pub fn free_count(s_weights: &[Weight], target: Weight, lambda: Weight) -> BigUint {
    let mut memo: HashMap<(usize, Weight), BigUint> = HashMap::new();
    fn rec(
        s_weights: &[Weight],
        l: usize,
        target: Weight,
        lambda: Weight,
        memo: &mut HashMap<(usize, Weight), BigUint>,
    ) -> BigUint {
        if l == s_weights.len() {
            return if target.is_zero() {
                BigUint::from(1u32)
            } else {
                BigUint::zero()
            };
        }
        if let Some(v) = memo.get(&(l, target)) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        let mut rest = target;
        loop {
            if lambda.dot(rest) < 0 {
                break;
            }
            total += rec(s_weights, l + 1, rest, lambda, memo);
            rest = rest - s_weights[l];
        }
        memo.insert((l, target), total.clone());
        total
    }
    rec(s_weights, 0, target, lambda, &mut memo)
}

/// Dimension of the graded piece `R(n, m, Q)_target`: standard-monomial
/// chains convolved with the free-variable knapsack.
pub fn graded_dim(g: &GradingData, target: Weight) -> Result<BigUint> {
    if !is_homogeneous(g) {
        return Err(Error::Precondition(
            "graded dimensions need a homogeneous grading".into(),
        ));
    }
    let lambda = positivity_certificate(g)?;
    if lambda.dot(target) < 0 {
        return Ok(BigUint::zero());
    }
    let poset = ColumnPoset::new(g);
    let mut chain_memo: HashMap<(usize, Weight), BigUint> = HashMap::new();
    let mut free_memo: HashMap<(usize, Weight), BigUint> = HashMap::new();
    fn rec(
        g: &GradingData,
        poset: &ColumnPoset,
        l: usize,
        target: Weight,
        lambda: Weight,
        chain_memo: &mut HashMap<(usize, Weight), BigUint>,
        free_memo: &mut HashMap<(usize, Weight), BigUint>,
    ) -> BigUint {
        if l == g.s_weights().len() {
            return chains_from(poset, poset.len(), target, lambda, chain_memo);
        }
        if let Some(v) = free_memo.get(&(l, target)) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        let mut rest = target;
        loop {
            if lambda.dot(rest) < 0 {
                break;
            }
            total += rec(g, poset, l + 1, rest, lambda, chain_memo, free_memo);
            rest = rest - g.s_weights()[l];
        }
        free_memo.insert((l, target), total.clone());
        total
    }
    Ok(rec(
        g,
        &poset,
        0,
        target,
        lambda,
        &mut chain_memo,
        &mut free_memo,
    ))
}

/// Rank of a sparse integer matrix by incremental fraction-free reduction;
/// rows are column-indexed coefficient maps.
fn sparse_rank(rows: Vec<BTreeMap<usize, BigInt>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigInt>> = BTreeMap::new();
    for mut row in rows {
        loop {
            row.retain(|_, v| !v.is_zero());
            let Some((&col, _)) = row.iter().next() else {
                break;
            };
            let Some(pivot_row) = pivots.get(&col) else {
                let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
                if g.abs() > BigInt::from(1) {
                    for v in row.values_mut() {
                        *v /= &g;
                    }
                }
                pivots.insert(col, row);
                break;
            };
            // row <- row * pivot_coeff - pivot_row * row_coeff
            let a = pivot_row[&col].clone();
            let b = row[&col].clone();
            let mut reduced: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (c, v) in &row {
                reduced.insert(*c, v * &a);
            }
            for (c, v) in pivot_row {
                let entry = reduced.entry(*c).or_insert_with(BigInt::zero);
                *entry -= v * &b;
            }
            row = reduced;
        }
    }
    pivots.len()
}

struct MonomialScan<'a> {
    g: &'a GradingData,
    pairs: Vec<PairIndex>,
    lambda: Weight,
    t_exp: BTreeMap<PairIndex, u32>,
    s_exp: Vec<u32>,
    out: Vec<Monomial>,
}

impl MonomialScan<'_> {
    fn run(&mut self, col: usize, rest: Weight) {
        if self.lambda.dot(rest) < 0 {
            return;
        }
        if col == self.pairs.len() + self.s_exp.len() {
            if rest.is_zero() {
                self.out
                    .push(Monomial::from_parts(self.t_exp.clone(), self.s_exp.clone()));
            }
            return;
        }
        let w = if col < self.pairs.len() {
            self.g.weight(self.pairs[col])
        } else {
            self.g.s_weights()[col - self.pairs.len()]
        };
        let mut e = 0u32;
        let mut r = rest;
        loop {
            if col < self.pairs.len() {
                if e > 0 {
                    self.t_exp.insert(self.pairs[col], e);
                }
            } else {
                self.s_exp[col - self.pairs.len()] = e;
            }
            self.run(col + 1, r);
            if self.lambda.dot(r) < self.lambda.dot(w) {
                break;
            }
            e += 1;
            r = r - w;
        }
        if col < self.pairs.len() {
            self.t_exp.remove(&self.pairs[col]);
        } else {
            self.s_exp[col - self.pairs.len()] = 0;
        }
    }
}

fn enumerate_monomials(g: &GradingData, target: Weight, lambda: Weight) -> Vec<Monomial> {
    let mut scan = MonomialScan {
        g,
        pairs: g.pairs().collect(),
        lambda,
        t_exp: BTreeMap::new(),
        s_exp: vec![0u32; g.m() as usize],
        out: Vec::new(),
    };
    scan.run(0, target);
    scan.out
}

/// Dense verification path: enumerate every monomial of the degree,
/// straighten each one, and count the rank of the straightened images over
/// the integers. Exponential; guarded by `λ·target <= bound`.
pub fn graded_dim_oracle_with_bound(
    g: &GradingData,
    target: Weight,
    bound: i64,
) -> Result<BigUint> {
    if !is_homogeneous(g) {
        return Err(Error::Precondition(
            "the oracle needs a homogeneous grading".into(),
        ));
    }
    let lambda = positivity_certificate(g)?;
    let level = lambda.dot(target);
    if level < 0 {
        return Ok(BigUint::zero());
    }
    if level > bound {
        return Err(Error::OracleTooLarge {
            needed: level,
            bound,
        });
    }
    let monomials = enumerate_monomials(g, target, lambda);
    let mut basis_index: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut images = Vec::with_capacity(monomials.len());
    for mono in &monomials {
        let image = straighten(mono);
        for (sm, _) in image.iter() {
            debug_assert!(is_standard(sm));
            let next = basis_index.len();
            basis_index.entry(sm.clone()).or_insert(next);
        }
        images.push(image);
    }
    let rows: Vec<BTreeMap<usize, BigInt>> = images
        .iter()
        .map(|image| {
            image
                .iter()
                .map(|(sm, c)| (basis_index[sm], c.clone()))
                .collect()
        })
        .collect();
    Ok(BigUint::from(sparse_rank(rows)))
}

/// [`graded_dim_oracle_with_bound`] with the default budget.
pub fn graded_dim_oracle(g: &GradingData, target: Weight) -> Result<BigUint> {
    graded_dim_oracle_with_bound(g, target, DEFAULT_ORACLE_BOUND)
}

/// The first plurigenus `h^0(-K_X)` of a classified variety.
pub fn h0_anticanonical(v: &TypedVariety) -> Result<BigUint> {
    let (g, _) = build(v)?;
    let target = anticanonical(&g)?;
    graded_dim(&g, target)
}

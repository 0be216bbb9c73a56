//! The Plücker ideal `I_{2,n}` and the straightening law.
//!
//! Generators are the three-term quadrics
//! `g_I = T_ab*T_cd - T_ac*T_bd + T_ad*T_bc` for every four-element index set
//! `I = {a < b < c < d}`. A monomial in the `T_ij` is *standard* when its
//! index pairs are pairwise comparable in the componentwise order; standard
//! monomials form a vector-space basis of the quotient ring, and
//! [`straighten`] rewrites an arbitrary monomial into that basis.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A Plücker variable index `(i, j)` with `1 <= i < j <= n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PairIndex {
    i: u32,
    j: u32,
}

impl PairIndex {
    pub fn new(i: u32, j: u32) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::InvalidParameter(format!(
                "pair index must satisfy 1 <= i < j, got ({i}, {j})"
            )));
        }
        Ok(Self { i, j })
    }

    /// Like [`PairIndex::new`] but sorts the two entries first.
    pub fn sorted(a: u32, b: u32) -> Result<Self> {
        if a < b {
            Self::new(a, b)
        } else {
            Self::new(b, a)
        }
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn contains(&self, k: u32) -> bool {
        self.i == k || self.j == k
    }

    /// Componentwise partial order: `(i,j) <= (i',j')` iff `i <= i'` and `j <= j'`.
    pub fn leq(&self, other: &Self) -> bool {
        self.i <= other.i && self.j <= other.j
    }

    pub fn comparable(&self, other: &Self) -> bool {
        self.leq(other) || other.leq(self)
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.i, self.j)
    }
}

/// All strictly increasing quadruples `a < b < c < d` in `[1, n]`,
/// lexicographically ordered.
pub fn quadruples(n: u32) -> Result<Vec<[u32; 4]>> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "quadruples need n >= 4, got {n}"
        )));
    }
    Ok(quadruples_iter(n).collect())
}

/// Lazy version of [`quadruples`]; yields nothing for `n < 4`.
pub fn quadruples_iter(n: u32) -> impl Iterator<Item = [u32; 4]> {
    (1..=n)
        .tuple_combinations()
        .map(|(a, b, c, d)| [a, b, c, d])
}

/// One generator `g_I` of the Plücker ideal, kept as its three signed terms
/// in the fixed `(+, -, +)` pattern.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PluckerRelation {
    quad: [u32; 4],
    terms: [(i8, PairIndex, PairIndex); 3],
}

impl PluckerRelation {
    pub fn quad(&self) -> [u32; 4] {
        self.quad
    }

    /// The three terms `(sign, first pair, second pair)`, signs `+1, -1, +1`.
    pub fn terms(&self) -> &[(i8, PairIndex, PairIndex); 3] {
        &self.terms
    }
}

impl fmt::Display for PluckerRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.quad;
        write!(f, "g({a},{b},{c},{d}) =")?;
        for (idx, (sign, p, q)) in self.terms.iter().enumerate() {
            let op = match (idx, sign) {
                (0, 1) => " ",
                (_, 1) => " + ",
                _ => " - ",
            };
            write!(f, "{op}{p}{q}")?;
        }
        Ok(())
    }
}

/// The relation `g_I = T_ab*T_cd - T_ac*T_bd + T_ad*T_bc` on a sorted quadruple.
pub fn relation(quad: [u32; 4]) -> Result<PluckerRelation> {
    let [a, b, c, d] = quad;
    if a == 0 || !(a < b && b < c && c < d) {
        return Err(Error::InvalidParameter(format!(
            "relation indices must be strictly increasing and positive, got ({a},{b},{c},{d})"
        )));
    }
    let p = |x, y| PairIndex::new(x, y).expect("sorted by construction");
    Ok(PluckerRelation {
        quad,
        terms: [
            (1, p(a, b), p(c, d)),
            (-1, p(a, c), p(b, d)),
            (1, p(a, d), p(b, c)),
        ],
    })
}

/// All relations of `I_{2,n}`, lexicographically by quadruple.
pub fn relations(n: u32) -> Result<Vec<PluckerRelation>> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "relations need n >= 4, got {n}"
        )));
    }
    Ok(relations_iter(n).collect())
}

/// Lazy iterator over the relations of `I_{2,n}`.
pub fn relations_iter(n: u32) -> impl Iterator<Item = PluckerRelation> {
    quadruples_iter(n).map(|q| relation(q).expect("quadruple is sorted"))
}

/// A monomial of `K[T_ij, S_l]`: finitely supported exponents on the pair
/// variables plus a dense exponent vector on the free variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    t_exponents: BTreeMap<PairIndex, u32>,
    s_exponents: Vec<u32>,
}

impl Monomial {
    /// The constant monomial with `m` free variables.
    pub fn one(m: usize) -> Self {
        Self {
            t_exponents: BTreeMap::new(),
            s_exponents: vec![0; m],
        }
    }

    /// Product of the given pairs, each with multiplicity one per occurrence.
    pub fn from_pairs<I: IntoIterator<Item = PairIndex>>(pairs: I) -> Self {
        let mut t_exponents = BTreeMap::new();
        for p in pairs {
            *t_exponents.entry(p).or_insert(0) += 1;
        }
        Self {
            t_exponents,
            s_exponents: Vec::new(),
        }
    }

    pub fn from_parts(t_exponents: BTreeMap<PairIndex, u32>, s_exponents: Vec<u32>) -> Self {
        let t_exponents = t_exponents.into_iter().filter(|&(_, e)| e > 0).collect();
        Self {
            t_exponents,
            s_exponents,
        }
    }

    pub fn t_exponents(&self) -> &BTreeMap<PairIndex, u32> {
        &self.t_exponents
    }

    pub fn s_exponents(&self) -> &[u32] {
        &self.s_exponents
    }

    pub fn mul_pair(&self, p: PairIndex) -> Self {
        let mut out = self.clone();
        *out.t_exponents.entry(p).or_insert(0) += 1;
        out
    }

    /// Removes one factor `T_p`; `None` if `p` does not divide the monomial.
    pub fn div_pair(&self, p: PairIndex) -> Option<Self> {
        let mut out = self.clone();
        match out.t_exponents.get_mut(&p) {
            Some(e) if *e > 1 => *e -= 1,
            Some(_) => {
                out.t_exponents.remove(&p);
            }
            None => return None,
        }
        Some(out)
    }

    pub fn total_t_degree(&self) -> u32 {
        self.t_exponents.values().sum()
    }

    /// Pair factors in sorted order, with multiplicity.
    pub fn pair_factors(&self) -> impl Iterator<Item = PairIndex> + '_ {
        self.t_exponents
            .iter()
            .flat_map(|(&p, &e)| std::iter::repeat_n(p, e as usize))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t_exponents.is_empty() && self.s_exponents.iter().all(|&e| e == 0) {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, &e) in &self.t_exponents {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{p}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        for (l, &e) in self.s_exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "S({})", l + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Standardness test: the pair multiset must be totally ordered under the
/// componentwise order. Sorted lexicographically this is exactly "second
/// coordinates weakly increase"; free variables never obstruct.
pub fn is_standard(mono: &Monomial) -> bool {
    let mut last_j = 0;
    for p in mono.t_exponents.keys() {
        if p.j < last_j {
            return false;
        }
        last_j = p.j;
    }
    true
}

/// A formal integer combination of monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Combination {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Combination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(mono: Monomial) -> Self {
        let mut c = Self::default();
        c.add_scaled(mono, BigInt::from(1));
        c
    }

    pub fn add_scaled(&mut self, mono: Monomial, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &Combination) {
        for (m, c) in &other.terms {
            self.add_scaled(m.clone(), c.clone());
        }
    }

    pub fn scale(&mut self, factor: &BigInt) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v *= factor;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx == 0 {
                if c == &BigInt::from(1) {
                    write!(f, "{m}")?;
                } else if c == &BigInt::from(-1) {
                    write!(f, "-{m}")?;
                } else {
                    write!(f, "{c}*{m}")?;
                }
            } else if c.sign() == num_bigint::Sign::Minus {
                let a = -c;
                if a == BigInt::from(1) {
                    write!(f, " - {m}")?;
                } else {
                    write!(f, " - {a}*{m}")?;
                }
            } else if c == &BigInt::from(1) {
                write!(f, " + {m}")?;
            } else {
                write!(f, " + {c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Finds the lexicographically largest violating pair of pairs `(p, q)`,
/// returned with `p.i < q.i` (so `p.j > q.j`).
fn find_violation(mono: &Monomial) -> Option<(PairIndex, PairIndex)> {
    let pairs: Vec<PairIndex> = mono.t_exponents.keys().copied().collect();
    let mut best: Option<(PairIndex, PairIndex)> = None;
    for a in 0..pairs.len() {
        for b in (a + 1)..pairs.len() {
            let (p, q) = (pairs[a], pairs[b]);
            if !p.comparable(&q) {
                // sorted order gives p.i <= q.i; incomparable forces p.i < q.i
                let cand = (p, q);
                if best.is_none_or(|cur| cand > cur) {
                    best = Some(cand);
                }
            }
        }
    }
    best
}

/// Hodge straightening: rewrites `mono` modulo `I_{2,n}` as an integer
/// combination of standard monomials. Identity on standard monomials.
///
/// Each step replaces the crossing product `T_ad*T_bc` (for the violation's
/// sorted quadruple `a < b < c < d`) by `T_ac*T_bd - T_ab*T_cd`, which is
/// strictly smaller in the induced order on pair multisets, so the rewrite
/// terminates.
pub fn straighten(mono: &Monomial) -> Combination {
    let mut pending: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    pending.insert(mono.clone(), BigInt::from(1));
    let mut done = Combination::zero();

    while let Some((m, coeff)) = pending.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        match find_violation(&m) {
            None => done.add_scaled(m, coeff),
            Some((p, q)) => {
                // p = (a, d), q = (b, c) with a < b < c < d
                let (a, d) = (p.i(), p.j());
                let (b, c) = (q.i(), q.j());
                debug_assert!(a < b && b < c && c < d);
                let rest = m
                    .div_pair(p)
                    .and_then(|r| r.div_pair(q))
                    .expect("violating pairs divide the monomial");
                let ac_bd = rest
                    .mul_pair(PairIndex::new(a, c).unwrap())
                    .mul_pair(PairIndex::new(b, d).unwrap());
                let ab_cd = rest
                    .mul_pair(PairIndex::new(a, b).unwrap())
                    .mul_pair(PairIndex::new(c, d).unwrap());
                for (mm, cc) in [(ac_bd, coeff.clone()), (ab_cd, -coeff)] {
                    let entry = pending.entry(mm).or_insert_with(BigInt::zero);
                    *entry += cc;
                }
                pending.retain(|_, v| !v.is_zero());
            }
        }
    }
    done
}

/// Applies [`straighten`] to every term of a combination.
pub fn straighten_combination(comb: &Combination) -> Combination {
    let mut out = Combination::zero();
    for (m, c) in comb.iter() {
        let mut s = straighten(m);
        s.scale(c);
        out.add(&s);
    }
    out
}

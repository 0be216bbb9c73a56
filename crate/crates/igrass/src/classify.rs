//! The six-type classification of smooth intrinsic Grassmannians of type
//! (2,n) with Picard number two: constructors for each type, the
//! anticanonical class, Fano criteria (closed-form and cone-membership),
//! enumeration and counting of the smooth Fano full members, and
//! recognition of arbitrary valid gradings up to index permutation and
//! unimodular basis change.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::faces::{self, TauSplit};
use crate::grading::{
    is_almost_free, is_homogeneous, is_pointed, moving_cone, Cone2, ConePosition, GenId,
    GradingData, Weight,
};
use crate::plucker::PairIndex;

/// Fano position of the anticanonical class relative to the semiample cone.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FanoStatus {
    Fano,
    TrulyAlmostFano,
    Neither,
}

impl fmt::Display for FanoStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanoStatus::Fano => write!(f, "fano"),
            FanoStatus::TrulyAlmostFano => write!(f, "truly_almost"),
            FanoStatus::Neither => write!(f, "neither"),
        }
    }
}

/// Tagged parameter record for one of the six classified types.
///
/// `Type1.alpha` is the sequence `α_k..α_n` (always nonempty);
/// `Type5.alpha` is `α_4..α_n`; `beta` vectors have length `m`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum TypedVariety {
    Type1 {
        n: u32,
        m: u32,
        k: u32,
        a: i64,
        alpha: Vec<i64>,
        beta: Vec<i64>,
    },
    Type2 {
        n: u32,
        m: u32,
        a: i64,
        alpha: i64,
        beta: Vec<i64>,
    },
    Type3 {
        n: u32,
        m: u32,
        k: u32,
    },
    Type4 {
        n: u32,
        m: u32,
    },
    Type5 {
        n: u32,
        m: u32,
        b1: i64,
        b2: i64,
        alpha: Vec<i64>,
    },
    Type6 {
        n: u32,
        m: u32,
        beta: Vec<i64>,
    },
}

fn sorted_nonneg(xs: &[i64]) -> bool {
    xs.windows(2).all(|w| w[0] <= w[1]) && xs.first().is_none_or(|&x| x >= 0)
}

impl TypedVariety {
    /// A full (m = 0) Type 1 datum in the normalization `α_k = 0`,
    /// `a = α_n`; `alpha` is `α_k..α_n`.
    pub fn full(n: u32, k: u32, alpha: Vec<i64>) -> Result<TypedVariety> {
        let a = *alpha.last().ok_or_else(|| {
            Error::Constraint("full datum needs a nonempty alpha sequence".into())
        })?;
        let v = TypedVariety::Type1 {
            n,
            m: 0,
            k,
            a,
            alpha,
            beta: Vec::new(),
        };
        v.validate()?;
        Ok(v)
    }

    pub fn type_tag(&self) -> u8 {
        match self {
            TypedVariety::Type1 { .. } => 1,
            TypedVariety::Type2 { .. } => 2,
            TypedVariety::Type3 { .. } => 3,
            TypedVariety::Type4 { .. } => 4,
            TypedVariety::Type5 { .. } => 5,
            TypedVariety::Type6 { .. } => 6,
        }
    }

    pub fn n(&self) -> u32 {
        match *self {
            TypedVariety::Type1 { n, .. }
            | TypedVariety::Type2 { n, .. }
            | TypedVariety::Type3 { n, .. }
            | TypedVariety::Type4 { n, .. }
            | TypedVariety::Type5 { n, .. }
            | TypedVariety::Type6 { n, .. } => n,
        }
    }

    pub fn m(&self) -> u32 {
        match *self {
            TypedVariety::Type1 { m, .. }
            | TypedVariety::Type2 { m, .. }
            | TypedVariety::Type3 { m, .. }
            | TypedVariety::Type4 { m, .. }
            | TypedVariety::Type5 { m, .. }
            | TypedVariety::Type6 { m, .. } => m,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Constraint(msg));
        if self.n() < 4 {
            return fail(format!("n must be at least 4, got {}", self.n()));
        }
        match self {
            TypedVariety::Type1 {
                n,
                m,
                k,
                a,
                alpha,
                beta,
            } => {
                if !(4 <= *k && *k <= *n) {
                    return fail(format!("type 1 needs 4 <= k <= n, got k = {k}, n = {n}"));
                }
                if alpha.len() != (*n - *k + 1) as usize {
                    return fail(format!(
                        "type 1 alpha must list α_k..α_n ({} values), got {}",
                        n - k + 1,
                        alpha.len()
                    ));
                }
                if beta.len() != *m as usize {
                    return fail(format!("beta must have m = {m} entries, got {}", beta.len()));
                }
                if *a < 0 {
                    return fail(format!("type 1 needs a >= 0, got {a}"));
                }
                if !sorted_nonneg(alpha) || alpha.iter().any(|&x| x > *a) {
                    return fail(format!(
                        "type 1 needs 0 <= α_k <= ... <= α_n <= a = {a}, got {alpha:?}"
                    ));
                }
                if !sorted_nonneg(beta) || beta.iter().any(|&x| x > *a) {
                    return fail(format!(
                        "type 1 needs 0 <= β_1 <= ... <= β_m <= a = {a}, got {beta:?}"
                    ));
                }
                let lo = alpha.iter().chain(beta.iter()).min().copied().unwrap();
                let hi = alpha.iter().chain(beta.iter()).max().copied().unwrap();
                if lo != 0 || hi != *a {
                    return fail(format!(
                        "type 1 needs the weights (0,1) and (a,1) = ({a},1) to occur; \
                         α/β values range over [{lo}, {hi}]"
                    ));
                }
            }
            TypedVariety::Type2 { m, a, alpha, beta, .. } => {
                if *a < 0 || *alpha < 0 || *alpha > *a {
                    return fail(format!("type 2 needs 0 <= α <= a, got α = {alpha}, a = {a}"));
                }
                if beta.len() != *m as usize {
                    return fail(format!("beta must have m = {m} entries, got {}", beta.len()));
                }
                if !sorted_nonneg(beta) || beta.iter().any(|&x| x > *a) {
                    return fail(format!(
                        "type 2 needs 0 <= β_1 <= ... <= β_m <= a = {a}, got {beta:?}"
                    ));
                }
                let lo = beta.iter().copied().chain([*alpha]).min().unwrap();
                let hi = beta.iter().copied().chain([*alpha]).max().unwrap();
                if lo != 0 || hi != *a {
                    return fail(format!(
                        "type 2 needs the weights (0,1) and (a,1) = ({a},1) to occur; \
                         α/β values range over [{lo}, {hi}]"
                    ));
                }
            }
            TypedVariety::Type3 { n, k, .. } => {
                if !(4 <= *k && *k < *n) {
                    return fail(format!("type 3 needs 4 <= k < n, got k = {k}, n = {n}"));
                }
            }
            TypedVariety::Type4 { m, .. } => {
                if *m < 1 {
                    return fail(format!("type 4 needs m >= 1, got {m}"));
                }
            }
            TypedVariety::Type5 {
                n,
                m,
                b1,
                b2,
                alpha,
            } => {
                if *m < 2 {
                    return fail(format!("type 5 needs m >= 2, got {m}"));
                }
                if alpha.len() != (*n - 3) as usize {
                    return fail(format!(
                        "type 5 alpha must list α_4..α_n ({} values), got {}",
                        n - 3,
                        alpha.len()
                    ));
                }
                if !(0 <= *b2 && *b2 <= *b1) {
                    return fail(format!(
                        "type 5 needs 0 = b3 <= b2 <= b1, got b2 = {b2}, b1 = {b1}"
                    ));
                }
                if !sorted_nonneg(alpha) || alpha.first().is_some_and(|&a4| a4 < *b1) {
                    return fail(format!(
                        "type 5 needs b1 <= α_4 <= ... <= α_n, got b1 = {b1}, {alpha:?}"
                    ));
                }
                // every derived x_ij must be nonnegative
                let g = build_type5_weights(*n, *b1, *b2, alpha);
                if let Some(w) = g.iter().find(|w| w.x < 0) {
                    return fail(format!("type 5 derived weight {w} has negative x"));
                }
            }
            TypedVariety::Type6 { m, beta, .. } => {
                if *m < 2 {
                    return fail(format!("type 6 needs m >= 2, got {m}"));
                }
                if beta.len() != *m as usize {
                    return fail(format!("beta must have m = {m} entries, got {}", beta.len()));
                }
                if !sorted_nonneg(beta) || beta.first() != Some(&0) {
                    return fail(format!(
                        "type 6 needs 0 = β_1 <= ... <= β_m, got {beta:?}"
                    ));
                }
            }
        }
        Ok(())
    }

    /// The two primitive extremal rays of the type's semiample cone.
    pub fn semiample_rays(&self) -> (Weight, Weight) {
        match self {
            TypedVariety::Type1 { a, .. } | TypedVariety::Type2 { a, .. } => {
                (Weight::new(1, 0), Weight::new(*a, 1))
            }
            TypedVariety::Type3 { .. } | TypedVariety::Type4 { .. } => {
                (Weight::new(2, 1), Weight::new(1, 1))
            }
            TypedVariety::Type5 { n, b1, b2, alpha, .. } => {
                let max_x = build_type5_weights(*n, *b1, *b2, alpha)
                    .iter()
                    .map(|w| w.x)
                    .max()
                    .expect("nonempty");
                (Weight::new(1, 0), Weight::new(max_x, 1))
            }
            TypedVariety::Type6 { beta, .. } => {
                (Weight::new(1, 0), Weight::new(*beta.last().expect("m >= 2"), 1))
            }
        }
    }

    /// The closed-form anticanonical class of the type.
    pub fn anticanonical_closed_form(&self) -> Weight {
        let n = self.n() as i64;
        let m = self.m() as i64;
        match self {
            TypedVariety::Type1 { k, alpha, beta, .. } => {
                let k = *k as i64;
                let sa: i64 = alpha.iter().sum();
                let sb: i64 = beta.iter().sum();
                Weight::new(2 * sa + sb + 2 * k - n - 2, 2 * (n - k + 1) + m)
            }
            TypedVariety::Type2 { alpha, beta, .. } => {
                let sb: i64 = beta.iter().sum();
                Weight::new(sb + (n - 2) * alpha + 2, n + m - 2)
            }
            TypedVariety::Type3 { k, .. } => Weight::new(2 * (*k as i64 - 1) + m, n),
            TypedVariety::Type4 { .. } => Weight::new(4 + m, n),
            TypedVariety::Type5 { b1, b2, alpha, .. } => {
                let sa: i64 = alpha.iter().sum();
                Weight::new(2 * sa - (n - 4) * (b1 + b2) + m, n)
            }
            TypedVariety::Type6 { beta, .. } => {
                let sb: i64 = beta.iter().sum();
                Weight::new(n + sb, m)
            }
        }
    }
}

fn params_json(v: &TypedVariety) -> serde_json::Value {
    use serde_json::json;
    match v {
        TypedVariety::Type1 { k, a, alpha, beta, .. } => {
            json!({"k": k, "a": a, "alpha": alpha, "beta": beta})
        }
        TypedVariety::Type2 { a, alpha, beta, .. } => {
            json!({"a": a, "alpha": alpha, "beta": beta})
        }
        TypedVariety::Type3 { k, .. } => json!({"k": k}),
        TypedVariety::Type4 { .. } => json!({}),
        TypedVariety::Type5 { b1, b2, alpha, .. } => {
            json!({"b": [b1, b2], "alpha": alpha})
        }
        TypedVariety::Type6 { beta, .. } => json!({"beta": beta}),
    }
}

#[derive(Serialize, Deserialize)]
struct VarietyRaw {
    #[serde(rename = "type")]
    tag: u8,
    n: u32,
    m: u32,
    params: serde_json::Value,
}

impl Serialize for TypedVariety {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VarietyRaw {
            tag: self.type_tag(),
            n: self.n(),
            m: self.m(),
            params: params_json(self),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TypedVariety {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = VarietyRaw::deserialize(d)?;
        let p = raw.params;
        let get_vec = |key: &str| -> std::result::Result<Vec<i64>, D::Error> {
            serde_json::from_value(p.get(key).cloned().unwrap_or(serde_json::json!([])))
                .map_err(D::Error::custom)
        };
        let get_int = |key: &str| -> std::result::Result<i64, D::Error> {
            p.get(key)
                .and_then(|v| v.as_i64())
                .ok_or_else(|| D::Error::custom(format!("params.{key} missing")))
        };
        let v = match raw.tag {
            1 => TypedVariety::Type1 {
                n: raw.n,
                m: raw.m,
                k: get_int("k")? as u32,
                a: get_int("a")?,
                alpha: get_vec("alpha")?,
                beta: get_vec("beta")?,
            },
            2 => TypedVariety::Type2 {
                n: raw.n,
                m: raw.m,
                a: get_int("a")?,
                alpha: get_int("alpha")?,
                beta: get_vec("beta")?,
            },
            3 => TypedVariety::Type3 {
                n: raw.n,
                m: raw.m,
                k: get_int("k")? as u32,
            },
            4 => TypedVariety::Type4 { n: raw.n, m: raw.m },
            5 => {
                let b = get_vec("b")?;
                if b.len() != 2 {
                    return Err(D::Error::custom("params.b must be [b1, b2]"));
                }
                TypedVariety::Type5 {
                    n: raw.n,
                    m: raw.m,
                    b1: b[0],
                    b2: b[1],
                    alpha: get_vec("alpha")?,
                }
            }
            6 => TypedVariety::Type6 {
                n: raw.n,
                m: raw.m,
                beta: get_vec("beta")?,
            },
            t => return Err(D::Error::custom(format!("unknown type tag {t}"))),
        };
        v.validate().map_err(D::Error::custom)?;
        Ok(v)
    }
}

fn type5_x(i: u32, j: u32, b: &[i64; 3], alpha: &[i64]) -> i64 {
    let al = |idx: u32| alpha[(idx - 4) as usize];
    match (i <= 3, j <= 3) {
        (true, true) => {
            // x_12 = b3, x_13 = b2, x_23 = b1
            match (i, j) {
                (1, 2) => b[2],
                (1, 3) => b[1],
                (2, 3) => b[0],
                _ => unreachable!(),
            }
        }
        (true, false) => al(j) - b[(i - 1) as usize],
        (false, false) => al(i) + al(j) - b[0] - b[1],
        (false, true) => unreachable!("i < j"),
    }
}

fn build_type5_weights(n: u32, b1: i64, b2: i64, alpha: &[i64]) -> Vec<Weight> {
    let b = [b1, b2, 0];
    let mut ws = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            ws.push(Weight::new(type5_x(i, j, &b, alpha), 1));
        }
    }
    ws
}

/// Builds the exact weight matrix of the classified type, in lexicographic
/// column order, together with the canonical ample class (the sum of the
/// two extremal rays of the type's semiample cone).
pub fn build(v: &TypedVariety) -> Result<(GradingData, Weight)> {
    v.validate()?;
    let n = v.n();
    let m = v.m();
    let mut t_weights = Vec::with_capacity((n as usize) * (n as usize - 1) / 2);
    let mut s_weights = Vec::with_capacity(m as usize);
    match v {
        TypedVariety::Type1 { k, alpha, beta, .. } => {
            let al = |j: u32| alpha[(j - k) as usize];
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let w = if j < *k {
                        Weight::new(1, 0)
                    } else if i < *k {
                        Weight::new(al(j), 1)
                    } else {
                        Weight::new(al(i) + al(j) - 1, 2)
                    };
                    t_weights.push(w);
                }
            }
            s_weights.extend(beta.iter().map(|&b| Weight::new(b, 1)));
        }
        TypedVariety::Type2 { alpha, beta, .. } => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let w = if j < n {
                        Weight::new(*alpha, 1)
                    } else {
                        Weight::new(1, 0)
                    };
                    t_weights.push(w);
                }
            }
            s_weights.extend(beta.iter().map(|&b| Weight::new(b, 1)));
        }
        TypedVariety::Type3 { k, .. } => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let w = if j < *k {
                        Weight::new(2, 1)
                    } else if i >= *k {
                        Weight::new(0, 1)
                    } else {
                        Weight::new(1, 1)
                    };
                    t_weights.push(w);
                }
            }
            s_weights.extend(std::iter::repeat_n(Weight::new(1, 0), m as usize));
        }
        TypedVariety::Type4 { .. } => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let w = if (i, j) == (1, 2) {
                        Weight::new(2, 1)
                    } else if i <= 2 {
                        Weight::new(1, 1)
                    } else {
                        Weight::new(0, 1)
                    };
                    t_weights.push(w);
                }
            }
            s_weights.extend(std::iter::repeat_n(Weight::new(1, 0), m as usize));
        }
        TypedVariety::Type5 { b1, b2, alpha, .. } => {
            t_weights = build_type5_weights(n, *b1, *b2, alpha);
            s_weights.extend(std::iter::repeat_n(Weight::new(1, 0), m as usize));
        }
        TypedVariety::Type6 { beta, .. } => {
            t_weights
                .extend(std::iter::repeat_n(Weight::new(1, 0), (n as usize) * (n as usize - 1) / 2));
            s_weights.extend(beta.iter().map(|&b| Weight::new(b, 1)));
        }
    }
    let g = GradingData::new(n, t_weights, s_weights)?;
    let (r1, r2) = v.semiample_rays();
    Ok((g, r1 + r2))
}

/// `-K_X = (2/(n-1)) * Σ w_ij + Σ w_l`, exact; fails when the pair-weight
/// sum is not divisible by `n - 1`.
pub fn anticanonical(g: &GradingData) -> Result<Weight> {
    let n = g.n() as i64;
    let mut sum = Weight::ZERO;
    for &w in g.t_weights() {
        sum = sum + w;
    }
    let doubled = sum * 2;
    if doubled.x.rem_euclid(n - 1) != 0 || doubled.y.rem_euclid(n - 1) != 0 {
        return Err(Error::NonIntegralClass(doubled.x, doubled.y, n - 1));
    }
    let mut k = Weight::new(doubled.x / (n - 1), doubled.y / (n - 1));
    for &w in g.s_weights() {
        k = k + w;
    }
    Ok(k)
}

/// Fano status from the per-type closed-form inequality, in exact doubled
/// integer arithmetic.
pub fn fano_status_by_criterion(v: &TypedVariety) -> Result<FanoStatus> {
    v.validate()?;
    let n = v.n() as i64;
    let m = v.m() as i64;
    let cmp = |lhs: i64, rhs: i64| {
        if lhs < rhs {
            FanoStatus::Fano
        } else if lhs == rhs {
            FanoStatus::TrulyAlmostFano
        } else {
            FanoStatus::Neither
        }
    };
    // band(x, lo, hi): Fano on lo < x < hi, almost on either equality
    let band = |x: i64, lo: i64, hi: i64| {
        if lo < x && x < hi {
            FanoStatus::Fano
        } else if x == lo || x == hi {
            FanoStatus::TrulyAlmostFano
        } else {
            FanoStatus::Neither
        }
    };
    Ok(match v {
        TypedVariety::Type1 { k, a, alpha, beta, .. } => {
            let k = *k as i64;
            let sa: i64 = alpha.iter().sum();
            let sb: i64 = beta.iter().sum();
            // (2(n-k+1)+m)a  vs  2Σα + Σβ + 2k - n - 2
            cmp(a * (2 * (n - k + 1) + m), 2 * sa + sb + 2 * k - n - 2)
        }
        TypedVariety::Type2 { a, alpha, beta, .. } => {
            let sb: i64 = beta.iter().sum();
            cmp(a * (n + m - 2), sb + (n - 2) * alpha + 2)
        }
        TypedVariety::Type3 { k, .. } => band(2 * (*k as i64 - 1) + m, n, 2 * n),
        TypedVariety::Type4 { .. } => band(4 + m, n, 2 * n),
        TypedVariety::Type5 { b1, b2, alpha, .. } => {
            let sa: i64 = alpha.iter().sum();
            let max_x = build_type5_weights(v.n(), *b1, *b2, alpha)
                .iter()
                .map(|w| w.x)
                .max()
                .expect("nonempty");
            cmp(n * max_x, 2 * sa - (n - 4) * (b1 + b2) + m)
        }
        TypedVariety::Type6 { beta, .. } => {
            let sb: i64 = beta.iter().sum();
            cmp(m * beta.last().expect("m >= 2"), n + sb)
        }
    })
}

/// Fano status from the position of the anticanonical class relative to the
/// semiample cone; requires a `Smooth` instance.
pub fn fano_status_by_cone(g: &GradingData, u: Weight) -> Result<FanoStatus> {
    let verdict = faces::verify_smooth(g, u);
    if !verdict.is_smooth() {
        return Err(Error::Precondition(format!(
            "fano_status_by_cone requires a smooth instance, got: {verdict}"
        )));
    }
    let mk = anticanonical(g)?;
    let samp = faces::semiample_cone(g, u)?;
    Ok(match samp.position(mk) {
        ConePosition::Interior => FanoStatus::Fano,
        ConePosition::Boundary => FanoStatus::TrulyAlmostFano,
        ConePosition::Outside => FanoStatus::Neither,
    })
}

fn weakly_increasing(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>, len: usize, lo: i64, hi: i64) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            rec(out, cur, len, v, hi);
            cur.pop();
        }
    }
    if hi < lo && len > 0 {
        return out;
    }
    rec(&mut out, &mut cur, len, lo, hi);
    out
}

fn enumerate_full_with(n: u32, keep: impl Fn(i64, i64) -> bool) -> Result<Vec<TypedVariety>> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "enumeration needs n >= 4, got {n}"
        )));
    }
    let n_i = n as i64;
    let mut out = Vec::new();
    for k in (4..=n).rev() {
        let k_i = k as i64;
        let len = (n - k) as usize;
        let bound = k_i - n_i / 2 - 2;
        if len > 0 && bound < 0 {
            continue;
        }
        for seq in weakly_increasing(len, 0, bound.max(0)) {
            let alpha_n = seq.last().copied().unwrap_or(0);
            let mid: i64 = if seq.is_empty() {
                0
            } else {
                seq[..seq.len() - 1].iter().sum()
            };
            // doubled Fano margin: 2Σ_{k+1..n-1} α_i - n + 2k - 2 - 2(n-k)α_n
            let margin = 2 * mid - n_i + 2 * k_i - 2 - 2 * (n_i - k_i) * alpha_n;
            if keep(margin, alpha_n) {
                let mut alpha = vec![0];
                alpha.extend(seq);
                out.push(TypedVariety::full(n, k, alpha)?);
            }
        }
    }
    Ok(out)
}

/// All smooth Fano full intrinsic Grassmannians of type (2,n): the Type 1,
/// m = 0 data with `α_k = 0` satisfying the strict Fano inequality; sorted
/// by k descending, then alpha lexicographically.
pub fn enumerate_smooth_fano_full(n: u32) -> Result<Vec<TypedVariety>> {
    enumerate_full_with(n, |margin, _| margin > 0)
}

/// The truly almost Fano full members (equality in the criterion).
pub fn enumerate_truly_almost_fano_full(n: u32) -> Result<Vec<TypedVariety>> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "enumeration needs n >= 4, got {n}"
        )));
    }
    let n_i = n as i64;
    let mut out = Vec::new();
    for k in (4..=n).rev() {
        let k_i = k as i64;
        let len = (n - k) as usize;
        // equality forces 2α_n <= 2k - n - 2
        let bound = (2 * k_i - n_i - 2).div_euclid(2);
        if len > 0 && bound < 0 {
            continue;
        }
        for seq in weakly_increasing(len, 0, bound.max(0)) {
            let alpha_n = seq.last().copied().unwrap_or(0);
            let mid: i64 = if seq.is_empty() {
                0
            } else {
                seq[..seq.len() - 1].iter().sum()
            };
            if 2 * mid - n_i + 2 * k_i - 2 == 2 * (n_i - k_i) * alpha_n {
                let mut alpha = vec![0];
                alpha.extend(seq);
                out.push(TypedVariety::full(n, k, alpha)?);
            }
        }
    }
    Ok(out)
}

/// All smooth full members with `α_n` bounded by `max_alpha` (the family is
/// infinite without a cap).
pub fn enumerate_smooth_full_bounded(n: u32, max_alpha: i64) -> Result<Vec<TypedVariety>> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "enumeration needs n >= 4, got {n}"
        )));
    }
    if max_alpha < 0 {
        return Err(Error::InvalidParameter(
            "the alpha cap must be nonnegative".into(),
        ));
    }
    let mut out = Vec::new();
    for k in (4..=n).rev() {
        for seq in weakly_increasing((n - k) as usize, 0, max_alpha) {
            let mut alpha = vec![0];
            alpha.extend(seq);
            out.push(TypedVariety::full(n, k, alpha)?);
        }
    }
    Ok(out)
}

/// The number of weakly increasing integer sequences
/// `0 <= a_1 <= ... <= a_y <= z` with sum `x`; by convention 1 when
/// `y <= 0` and `x = 0`, and 0 when `y <= 0` and `x != 0`.
pub fn a_count(x: i64, y: i64, z: i64) -> BigUint {
    if y <= 0 {
        return if x == 0 {
            BigUint::from(1u32)
        } else {
            BigUint::zero()
        };
    }
    if x < 0 || z < 0 {
        return BigUint::zero();
    }
    // count as partitions of x into at most y parts, each at most z
    fn rec(
        memo: &mut HashMap<(i64, i64, i64), BigUint>,
        rem: i64,
        len: i64,
        cap: i64,
    ) -> BigUint {
        if rem == 0 {
            return BigUint::from(1u32);
        }
        if len == 0 || cap == 0 {
            return BigUint::zero();
        }
        if let Some(v) = memo.get(&(rem, len, cap)) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for v in 0..=cap.min(rem) {
            total += rec(memo, rem - v, len - 1, v);
        }
        memo.insert((rem, len, cap), total.clone());
        total
    }
    rec(&mut HashMap::new(), x, y, z)
}

/// Evaluates the closed triple-sum formula for the number of pairwise
/// non-isomorphic smooth Fano full intrinsic Grassmannians of type (2,n).
pub fn count_fano_formula(n: u32) -> Result<BigUint> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "counting needs n >= 4, got {n}"
        )));
    }
    let n_i = n as i64;
    let half = n_i / 2;
    let mut total = BigUint::zero();
    for i in (half + 2)..=n_i {
        for j in 0..=(i - half - 2) {
            for k in 0..=(i - half - 2 - j) {
                total += a_count(j * (n_i - i - 1) - k, n_i - i - 1, j);
            }
        }
    }
    Ok(total)
}

/// Independent brute-force count over the Fano inequality.
pub fn count_fano_oracle(n: u32) -> Result<BigUint> {
    Ok(BigUint::from(enumerate_smooth_fano_full(n)?.len()))
}

/// Multiset of generator degrees, the isomorphism-invariant degree profile.
pub type GeneratorDegreeProfile = BTreeMap<Weight, usize>;

pub fn degree_profile(g: &GradingData) -> GeneratorDegreeProfile {
    let mut prof = BTreeMap::new();
    for (_, w) in g.generators() {
        *prof.entry(w).or_insert(0) += 1;
    }
    prof
}

/// Distinct profiles certify non-isomorphy (the converse fails).
pub fn profiles_distinct(p1: &GeneratorDegreeProfile, p2: &GeneratorDegreeProfile) -> bool {
    p1 != p2
}

/// Relabels indices by `sigma` (so `sigma[i-1]` is the new label of `i`):
/// the new weight of the pair `(i, j)` is the old weight of
/// `(sigma^{-1}(i), sigma^{-1}(j))`.
pub fn permute(g: &GradingData, sigma: &[u32]) -> Result<GradingData> {
    let n = g.n();
    if sigma.len() != n as usize {
        return Err(Error::InvalidParameter(format!(
            "permutation must have length n = {n}, got {}",
            sigma.len()
        )));
    }
    let mut seen = vec![false; n as usize];
    for &s in sigma {
        if s == 0 || s > n || seen[(s - 1) as usize] {
            return Err(Error::InvalidParameter(format!(
                "not a permutation of 1..={n}: {sigma:?}"
            )));
        }
        seen[(s - 1) as usize] = true;
    }
    let mut t_weights = vec![Weight::ZERO; g.t_weights().len()];
    for p in g.pairs() {
        let q = PairIndex::sorted(sigma[(p.i() - 1) as usize], sigma[(p.j() - 1) as usize])?;
        t_weights[crate::grading::lex_position(q, n)?] = g.weight(p);
    }
    GradingData::new(n, t_weights, g.s_weights().to_vec())
}

/// A determinant-±1 change of coordinates on `Cl(X) = Z^2`, acting on
/// weights as a row matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BasisChange {
    pub rows: [[i64; 2]; 2],
}

impl BasisChange {
    pub fn identity() -> Self {
        Self {
            rows: [[1, 0], [0, 1]],
        }
    }

    pub fn apply(&self, w: Weight) -> Weight {
        Weight::new(
            self.rows[0][0] * w.x + self.rows[0][1] * w.y,
            self.rows[1][0] * w.x + self.rows[1][1] * w.y,
        )
    }

    pub fn det(&self) -> i64 {
        self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]
    }

    /// `self` after `other`: `(self*other)(w) = self(other(w))`.
    pub fn compose(&self, other: &BasisChange) -> BasisChange {
        let a = self.rows;
        let b = other.rows;
        BasisChange {
            rows: [
                [
                    a[0][0] * b[0][0] + a[0][1] * b[1][0],
                    a[0][0] * b[0][1] + a[0][1] * b[1][1],
                ],
                [
                    a[1][0] * b[0][0] + a[1][1] * b[1][0],
                    a[1][0] * b[0][1] + a[1][1] * b[1][1],
                ],
            ],
        }
    }

    /// Inverse of the column matrix `[a b]`; defined when `det = ±1`.
    fn from_basis(a: Weight, b: Weight) -> Option<BasisChange> {
        let d = a.det(b);
        if d.abs() != 1 {
            return None;
        }
        Some(BasisChange {
            rows: [[d * b.y, -d * b.x], [-d * a.y, d * a.x]],
        })
    }

    /// The shear `(x, y) -> (x + t*y, y)`.
    fn shear(t: i64) -> BasisChange {
        BasisChange {
            rows: [[1, t], [0, 1]],
        }
    }
}

/// Applies a basis change to every weight of the grading.
pub fn transform(g: &GradingData, bc: &BasisChange) -> GradingData {
    GradingData::new(
        g.n(),
        g.t_weights().iter().map(|&w| bc.apply(w)).collect(),
        g.s_weights().iter().map(|&w| bc.apply(w)).collect(),
    )
    .expect("same shape")
}

/// A successful recognition: the classified datum together with the
/// witnessing coordinate change and index relabeling, and every type that
/// matched (boundary parameter values can match more than one type).
#[derive(Clone, Debug)]
pub struct Recognition {
    pub variety: TypedVariety,
    pub basis_change: BasisChange,
    pub permutation: Vec<u32>,
    pub all_matches: Vec<TypedVariety>,
}

/// `w~_k = w_kj + w_ik - w_ij` for any two other indices; well defined for
/// homogeneous gradings, and `w_ij = (w~_i + w~_j)/2`.
fn vtilde(g: &GradingData, k: u32) -> Weight {
    let n = g.n();
    let mut others = (1..=n).filter(|&x| x != k);
    let i = others.next().expect("n >= 4");
    let j = others.next().expect("n >= 4");
    g.weight(PairIndex::sorted(k, j).expect("distinct"))
        + g.weight(PairIndex::sorted(i, k).expect("distinct"))
        - g.weight(PairIndex::sorted(i, j).expect("distinct"))
}

struct MatchAttempt {
    variety: TypedVariety,
    /// extra shear applied after the chamber normalization
    shear: i64,
    permutation: Vec<u32>,
}

/// Builds the permutation sending `groups[g][..]` (old labels) to
/// consecutive new labels `1, 2, ...` group by group.
fn perm_from_groups(n: u32, groups: &[&[u32]]) -> Vec<u32> {
    let mut sigma = vec![0u32; n as usize];
    let mut next = 1u32;
    for grp in groups {
        for &old in *grp {
            sigma[(old - 1) as usize] = next;
            next += 1;
        }
    }
    sigma
}

type SideWeights = Vec<(GenId, Weight)>;

fn split_sides(g: &GradingData, plus: &[GenId], minus: &[GenId]) -> (SideWeights, SideWeights) {
    let pw = plus.iter().map(|&id| (id, g.gen_weight(id))).collect();
    let mw = minus.iter().map(|&id| (id, g.gen_weight(id))).collect();
    (pw, mw)
}

fn try_type1(g: &GradingData, plus: &[GenId], minus: &[GenId]) -> Option<MatchAttempt> {
    let (n, m) = (g.n(), g.m());
    let (pw, mw) = split_sides(g, plus, minus);
    if !pw
        .iter()
        .all(|(id, w)| matches!(id, GenId::T(_)) && *w == Weight::new(1, 0))
    {
        return None;
    }
    for (id, w) in &mw {
        let ok = match id {
            GenId::T(_) => w.y == 1 || w.y == 2,
            GenId::S(_) => w.y == 1,
        };
        if !ok {
            return None;
        }
    }
    let min_x1 = mw.iter().filter(|(_, w)| w.y == 1).map(|(_, w)| w.x).min()?;
    let t = -min_x1;
    let mut lows = Vec::new();
    let mut highs = Vec::new();
    for idx in 1..=n {
        let v = vtilde(g, idx);
        let v = Weight::new(v.x + t * v.y, v.y);
        if v == Weight::new(1, 0) {
            lows.push(idx);
        } else if v.y == 2 && v.x >= -1 && (v.x + 1) % 2 == 0 {
            highs.push(((v.x + 1) / 2, idx));
        } else {
            return None;
        }
    }
    if lows.len() < 3 || highs.is_empty() {
        return None;
    }
    highs.sort();
    let k = lows.len() as u32 + 1;
    let alpha: Vec<i64> = highs.iter().map(|&(a, _)| a).collect();
    let mut beta: Vec<i64> = g.s_weights().iter().map(|w| w.x + t * w.y).collect();
    beta.sort();
    let a = alpha
        .iter()
        .chain(beta.iter())
        .max()
        .copied()
        .expect("alpha nonempty");
    let high_ids: Vec<u32> = highs.iter().map(|&(_, i)| i).collect();
    let sigma = perm_from_groups(n, &[&lows[..], &high_ids[..]]);
    let variety = TypedVariety::Type1 {
        n,
        m,
        k,
        a,
        alpha,
        beta,
    };
    Some(MatchAttempt {
        variety,
        shear: t,
        permutation: sigma,
    })
}

fn try_type2(g: &GradingData, plus: &[GenId], minus: &[GenId]) -> Option<MatchAttempt> {
    let (n, m) = (g.n(), g.m());
    let (pw, mw) = split_sides(g, plus, minus);
    if pw.len() != (n - 1) as usize {
        return None;
    }
    let mut plus_pairs = Vec::new();
    for (id, w) in &pw {
        match id {
            GenId::T(p) if *w == Weight::new(1, 0) => plus_pairs.push(*p),
            _ => return None,
        }
    }
    if !mw.iter().all(|(_, w)| w.y == 1) {
        return None;
    }
    // the n-1 plus pairs must share a common index
    let common: Vec<u32> = [plus_pairs[0].i(), plus_pairs[0].j()]
        .into_iter()
        .filter(|&c| plus_pairs.iter().all(|p| p.contains(c)))
        .collect();
    let &[i0] = common.as_slice() else { return None };
    let t = -mw.iter().map(|(_, w)| w.x).min()?;
    let mut alpha = None;
    for (id, w) in &mw {
        if let GenId::T(_) = id {
            let x = w.x + t;
            if *alpha.get_or_insert(x) != x {
                return None;
            }
        }
    }
    let alpha = alpha?;
    let mut beta: Vec<i64> = g.s_weights().iter().map(|w| w.x + t * w.y).collect();
    beta.sort();
    let a = beta.iter().copied().chain([alpha]).max().unwrap();
    let rest: Vec<u32> = (1..=n).filter(|&x| x != i0).collect();
    let sigma = perm_from_groups(n, &[&rest[..], &[i0][..]]);
    Some(MatchAttempt {
        variety: TypedVariety::Type2 {
            n,
            m,
            a,
            alpha,
            beta,
        },
        shear: t,
        permutation: sigma,
    })
}

fn try_type3or4(g: &GradingData, plus: &[GenId], minus: &[GenId]) -> Option<MatchAttempt> {
    let (n, m) = (g.n(), g.m());
    let all_w = |ids: &[GenId]| -> Option<()> {
        for &id in ids.iter().chain(minus) {
            let w = g.gen_weight(id);
            let ok = match id {
                GenId::S(_) => w == Weight::new(1, 0),
                GenId::T(_) => {
                    w == Weight::new(2, 1) || w == Weight::new(1, 1) || w == Weight::new(0, 1)
                }
            };
            if !ok {
                return None;
            }
        }
        Some(())
    };
    all_w(plus)?;
    let mut lows = Vec::new();
    let mut highs = Vec::new();
    for idx in 1..=n {
        match vtilde(g, idx) {
            w if w == Weight::new(2, 1) => lows.push(idx),
            w if w == Weight::new(0, 1) => highs.push(idx),
            _ => return None,
        }
    }
    let variety = if lows.len() >= 3 && highs.len() >= 2 {
        TypedVariety::Type3 {
            n,
            m,
            k: lows.len() as u32 + 1,
        }
    } else if lows.len() == 2 && m >= 1 {
        TypedVariety::Type4 { n, m }
    } else {
        return None;
    };
    let sigma = perm_from_groups(n, &[&lows[..], &highs[..]]);
    Some(MatchAttempt {
        variety,
        shear: 0,
        permutation: sigma,
    })
}

fn try_type5(g: &GradingData, plus: &[GenId], minus: &[GenId]) -> Option<MatchAttempt> {
    let (n, m) = (g.n(), g.m());
    if m < 2 || plus.len() != m as usize {
        return None;
    }
    if !plus
        .iter()
        .all(|&id| matches!(id, GenId::S(_)) && g.gen_weight(id) == Weight::new(1, 0))
    {
        return None;
    }
    if !minus
        .iter()
        .all(|&id| matches!(id, GenId::T(_)) && g.gen_weight(id).y == 1)
    {
        return None;
    }
    let t = -g.t_weights().iter().map(|w| w.x).min()?;
    let mut order: Vec<(i64, u32)> = (1..=n)
        .map(|idx| {
            let v = vtilde(g, idx);
            (v.x + t * v.y, idx)
        })
        .collect();
    order.sort();
    let labels: Vec<u32> = order.iter().map(|&(_, i)| i).collect();
    let sigma = perm_from_groups(n, &[&labels[..]]);
    // read parameters off the relabeled, sheared matrix
    let x = |a: u32, b: u32| -> i64 {
        let p = PairIndex::sorted(labels[(a - 1) as usize], labels[(b - 1) as usize]).unwrap();
        g.weight(p).x + t
    };
    if x(1, 2) != 0 {
        return None;
    }
    let (b2, b1) = (x(1, 3), x(2, 3));
    let alpha: Vec<i64> = (4..=n).map(|j| x(3, j)).collect();
    Some(MatchAttempt {
        variety: TypedVariety::Type5 {
            n,
            m,
            b1,
            b2,
            alpha,
        },
        shear: t,
        permutation: sigma,
    })
}

fn try_type6(g: &GradingData, plus: &[GenId], minus: &[GenId]) -> Option<MatchAttempt> {
    let (n, m) = (g.n(), g.m());
    if m < 2 || minus.len() != m as usize {
        return None;
    }
    if !plus
        .iter()
        .all(|&id| matches!(id, GenId::T(_)) && g.gen_weight(id) == Weight::new(1, 0))
    {
        return None;
    }
    if !minus
        .iter()
        .all(|&id| matches!(id, GenId::S(_)) && g.gen_weight(id).y == 1)
    {
        return None;
    }
    let t = -g.s_weights().iter().map(|w| w.x).min()?;
    let mut beta: Vec<i64> = g.s_weights().iter().map(|w| w.x + t).collect();
    beta.sort();
    Some(MatchAttempt {
        variety: TypedVariety::Type6 { n, m, beta },
        shear: t,
        permutation: (1..=n).collect(),
    })
}

/// Checks one candidate attempt exactly: the permuted, sheared input must
/// equal the built matrix (with free weights compared as sorted lists) and
/// the transformed ample class must be interior to the built chamber.
/// On success returns the shear composed into a basis change.
fn confirm(g0: &GradingData, u0: Weight, attempt: &MatchAttempt) -> Option<BasisChange> {
    attempt.variety.validate().ok()?;
    let bc = BasisChange::shear(attempt.shear);
    let gt = transform(g0, &bc);
    let gp = permute(&gt, &attempt.permutation).ok()?;
    let (gb, _) = build(&attempt.variety).ok()?;
    if gp.t_weights() != gb.t_weights() {
        return None;
    }
    let mut s_in: Vec<Weight> = gp.s_weights().to_vec();
    s_in.sort();
    if s_in != gb.s_weights() {
        return None;
    }
    let (r1, r2) = attempt.variety.semiample_rays();
    if !Cone2::Salient(r1.primitive(), r2.primitive()).contains_interior(bc.apply(u0)) {
        return None;
    }
    Some(bc)
}

/// Matches a valid homogeneous grading against the six classified types, up
/// to index permutation and determinant-±1 basis change. Types are tried in
/// order 1..6, each in both chamber-ray orientations; the first hit is
/// returned, with every matching type recorded.
pub fn recognize(g: &GradingData, u: Weight) -> Option<Recognition> {
    if !is_homogeneous(g) || !is_pointed(g) || !is_almost_free(g) {
        return None;
    }
    let mov = moving_cone(g).ok()?;
    if !mov.is_full_dimensional() || !mov.contains_interior(u) {
        return None;
    }
    let split: TauSplit = faces::tau_split(g, u).ok()?;
    let Cone2::Salient(rp, rm) = split.chamber.clone() else {
        return None;
    };

    let mut primary: Option<(TypedVariety, BasisChange, Vec<u32>)> = None;
    let mut all: Vec<TypedVariety> = Vec::new();
    for tag in 1..=6u8 {
        for flip in [false, true] {
            let (a, b) = if flip { (rm, rp) } else { (rp, rm) };
            let Some(m0) = BasisChange::from_basis(a, b) else {
                continue;
            };
            // types 3 and 4 live in the frame with chamber cone((2,1),(1,1))
            let base = if tag == 3 || tag == 4 {
                BasisChange {
                    rows: [[2, 1], [1, 1]],
                }
                .compose(&m0)
            } else {
                m0
            };
            let gt = transform(g, &base);
            let (plus, minus) = if flip {
                (split.minus.clone(), split.plus.clone())
            } else {
                (split.plus.clone(), split.minus.clone())
            };
            let attempt = match tag {
                1 => try_type1(&gt, &plus, &minus),
                2 => try_type2(&gt, &plus, &minus),
                3 => try_type3or4(&gt, &plus, &minus).filter(|m| m.variety.type_tag() == 3),
                4 => try_type3or4(&gt, &plus, &minus).filter(|m| m.variety.type_tag() == 4),
                5 => try_type5(&gt, &plus, &minus),
                6 => try_type6(&gt, &plus, &minus),
                _ => unreachable!(),
            };
            if let Some(at) = attempt {
                if let Some(shear_bc) = confirm(&gt, base.apply(u), &at) {
                    let full_bc = shear_bc.compose(&base);
                    if !all.contains(&at.variety) {
                        all.push(at.variety.clone());
                    }
                    if primary.is_none() {
                        primary = Some((at.variety, full_bc, at.permutation));
                    }
                }
            }
        }
    }
    primary.map(|(variety, basis_change, permutation)| Recognition {
        variety,
        basis_change,
        permutation,
        all_matches: all,
    })
}

/// Deletes one Grassmannian index from a full (m = 0) grading, relabeling
/// the survivors onto `1..n-1`.
///
/// The index `n` is dropped when at least two weights remain on each side
/// of the chamber among the untouched columns; otherwise the first index
/// (searched downward) with that property is moved into last position
/// first, mirroring the permutation step of the deletion lemma.
pub fn restrict_last_index(g: &GradingData, u: Weight) -> Result<GradingData> {
    let n = g.n();
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "restriction needs n >= 5, got {n}"
        )));
    }
    if g.m() != 0 {
        return Err(Error::InvalidParameter(
            "restriction is defined for full (m = 0) gradings".into(),
        ));
    }
    let split = faces::tau_split(g, u)?;
    let side_pairs = |side: &[GenId], l: u32| -> usize {
        side.iter()
            .filter(|id| matches!(id, GenId::T(p) if !p.contains(l)))
            .count()
    };
    let choice = std::iter::once(n)
        .chain((1..n).rev())
        .find(|&l| side_pairs(&split.plus, l) >= 2 && side_pairs(&split.minus, l) >= 2);
    let Some(l) = choice else {
        return Err(Error::NeedsPermutation(
            "no index leaves two weights on each side of the chamber".into(),
        ));
    };
    let relabel: Vec<u32> = (1..=n).filter(|&x| x != l).collect();
    let mut t_weights = Vec::with_capacity(((n - 1) as usize) * ((n - 2) as usize) / 2);
    for i in 1..n {
        for j in (i + 1)..n {
            let p = PairIndex::sorted(relabel[(i - 1) as usize], relabel[(j - 1) as usize])?;
            t_weights.push(g.weight(p));
        }
    }
    GradingData::new(n - 1, t_weights, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faces::verify_smooth;

    fn w(x: i64, y: i64) -> Weight {
        Weight::new(x, y)
    }

    fn row(n: u32, k: u32, alpha: &[i64]) -> TypedVariety {
        TypedVariety::full(n, k, alpha.to_vec()).unwrap()
    }

    #[test]
    fn build_row1() {
        let (g, u) = build(&row(5, 5, &[0])).unwrap();
        let xs: Vec<i64> = g.t_weights().iter().map(|w| w.x).collect();
        let ys: Vec<i64> = g.t_weights().iter().map(|w| w.y).collect();
        assert_eq!(xs, vec![1, 1, 1, 0, 1, 1, 0, 1, 0, 0]);
        assert_eq!(ys, vec![0, 0, 0, 1, 0, 0, 1, 0, 1, 1]);
        assert_eq!(u, w(1, 1));
    }

    #[test]
    fn build_row2() {
        let (g, _) = build(&row(5, 4, &[0, 0])).unwrap();
        let xs: Vec<i64> = g.t_weights().iter().map(|w| w.x).collect();
        let ys: Vec<i64> = g.t_weights().iter().map(|w| w.y).collect();
        assert_eq!(xs, vec![1, 1, 0, 0, 1, 0, 0, 0, 0, -1]);
        assert_eq!(ys, vec![0, 0, 1, 1, 0, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn build_type6() {
        let (g, u) = build(&TypedVariety::Type6 {
            n: 4,
            m: 2,
            beta: vec![0, 1],
        })
        .unwrap();
        assert!(g.t_weights().iter().all(|&x| x == w(1, 0)));
        assert_eq!(g.s_weights(), &[w(0, 1), w(1, 1)]);
        assert_eq!(u, w(2, 1));
    }

    #[test]
    fn anticanonical_values() {
        let (g, _) = build(&row(5, 5, &[0])).unwrap();
        assert_eq!(anticanonical(&g).unwrap(), w(3, 2));
        let (g, _) = build(&row(7, 5, &[0, 0, 0])).unwrap();
        assert_eq!(anticanonical(&g).unwrap(), w(1, 6));
        let constant = GradingData::new(5, vec![w(1, 0); 10], vec![]).unwrap();
        assert_eq!(anticanonical(&constant).unwrap(), w(5, 0));
    }

    #[test]
    fn anticanonical_closed_forms_match() {
        for v in [
            row(5, 5, &[0]),
            row(8, 7, &[0, 1]),
            TypedVariety::Type2 {
                n: 6,
                m: 1,
                a: 0,
                alpha: 0,
                beta: vec![0],
            },
            TypedVariety::Type3 { n: 6, m: 2, k: 4 },
            TypedVariety::Type4 { n: 5, m: 2 },
            TypedVariety::Type5 {
                n: 5,
                m: 2,
                b1: 1,
                b2: 0,
                alpha: vec![1, 2],
            },
            TypedVariety::Type6 {
                n: 4,
                m: 3,
                beta: vec![0, 1, 3],
            },
        ] {
            let (g, _) = build(&v).unwrap();
            assert_eq!(
                anticanonical(&g).unwrap(),
                v.anticanonical_closed_form(),
                "closed form mismatch for {v:?}"
            );
        }
    }

    #[test]
    fn criterion_examples() {
        assert_eq!(
            fano_status_by_criterion(&row(5, 5, &[0])).unwrap(),
            FanoStatus::Fano
        );
        assert_eq!(
            fano_status_by_criterion(&row(6, 5, &[0, 1])).unwrap(),
            FanoStatus::TrulyAlmostFano
        );
        assert_eq!(
            fano_status_by_criterion(&row(5, 4, &[0, 1])).unwrap(),
            FanoStatus::Neither
        );
    }

    #[test]
    fn cone_status_examples() {
        let (g, u) = build(&row(5, 5, &[0])).unwrap();
        assert_eq!(fano_status_by_cone(&g, u).unwrap(), FanoStatus::Fano);

        let (g, u) = build(&row(6, 5, &[0, 1])).unwrap();
        assert_eq!(
            fano_status_by_cone(&g, u).unwrap(),
            FanoStatus::TrulyAlmostFano
        );

        let v = TypedVariety::Type6 {
            n: 4,
            m: 2,
            beta: vec![0, 0],
        };
        let (g, u) = build(&v).unwrap();
        assert_eq!(anticanonical(&g).unwrap(), w(4, 2));
        assert_eq!(fano_status_by_cone(&g, u).unwrap(), FanoStatus::Fano);
        assert_eq!(fano_status_by_criterion(&v).unwrap(), FanoStatus::Fano);
    }

    #[test]
    fn enumeration_small() {
        let vs = enumerate_smooth_fano_full(5).unwrap();
        assert_eq!(vs, vec![row(5, 5, &[0]), row(5, 4, &[0, 0])]);

        let vs = enumerate_smooth_fano_full(7).unwrap();
        assert_eq!(
            vs,
            vec![
                row(7, 7, &[0]),
                row(7, 6, &[0, 0]),
                row(7, 6, &[0, 1]),
                row(7, 5, &[0, 0, 0]),
            ]
        );

        let vs = enumerate_smooth_fano_full(4).unwrap();
        assert_eq!(vs, vec![row(4, 4, &[0])]);
    }

    #[test]
    fn a_count_examples() {
        assert_eq!(a_count(0, 0, 0), BigUint::from(1u32));
        assert_eq!(a_count(2, 2, 2), BigUint::from(2u32));
        assert_eq!(a_count(3, 2, 2), BigUint::from(1u32));
        assert_eq!(a_count(-1, -1, 0), BigUint::zero());
        assert_eq!(a_count(0, -1, 5), BigUint::from(1u32));
    }

    #[test]
    fn counting_matches() {
        let expected: [u32; 5] = [1, 2, 2, 4, 4];
        for (n, e) in (4..=8).zip(expected) {
            assert_eq!(count_fano_formula(n).unwrap(), BigUint::from(e));
            assert_eq!(count_fano_oracle(n).unwrap(), BigUint::from(e));
        }
        for n in 9..=14 {
            assert_eq!(
                count_fano_formula(n).unwrap(),
                count_fano_oracle(n).unwrap(),
                "formula/oracle disagree at n = {n}"
            );
        }
    }

    #[test]
    fn recognize_row1() {
        let (g, u) = build(&row(5, 5, &[0])).unwrap();
        let rec = recognize(&g, u).unwrap();
        assert_eq!(rec.variety, row(5, 5, &[0]));
    }

    #[test]
    fn recognize_after_permutation_and_basis_change() {
        let (g, u) = build(&row(5, 4, &[0, 0])).unwrap();
        // swap indices 4 and 5, then apply (x, y) -> (x + y, y)
        let gp = permute(&g, &[1, 2, 3, 5, 4]).unwrap();
        let bc = BasisChange {
            rows: [[1, 1], [0, 1]],
        };
        let gt = transform(&gp, &bc);
        let ut = bc.apply(u);
        let rec = recognize(&gt, ut).unwrap();
        assert_eq!(rec.variety, row(5, 4, &[0, 0]));
    }

    #[test]
    fn recognize_rejects_non_smooth() {
        let doubled = GradingData::new(
            4,
            vec![w(1, 0), w(1, 0), w(0, 2), w(1, 0), w(0, 2), w(0, 2)],
            vec![],
        )
        .unwrap();
        assert!(recognize(&doubled, w(1, 1)).is_none());
    }

    #[test]
    fn recognize_records_overlaps() {
        // the flag variety matches Type 1 (k = n) and mirrored Type 2
        let (g, u) = build(&row(4, 4, &[0])).unwrap();
        let rec = recognize(&g, u).unwrap();
        assert_eq!(rec.variety, row(4, 4, &[0]));
        assert!(rec.all_matches.len() >= 2);
        assert!(rec
            .all_matches
            .iter()
            .any(|v| v.type_tag() == 2));
    }

    #[test]
    fn smooth_for_all_six_types() {
        for v in [
            row(6, 5, &[0, 2]),
            TypedVariety::Type2 {
                n: 5,
                m: 2,
                a: 2,
                alpha: 1,
                beta: vec![0, 2],
            },
            TypedVariety::Type3 { n: 6, m: 0, k: 5 },
            TypedVariety::Type4 { n: 4, m: 1 },
            TypedVariety::Type5 {
                n: 5,
                m: 2,
                b1: 1,
                b2: 1,
                alpha: vec![1, 2],
            },
            TypedVariety::Type6 {
                n: 5,
                m: 3,
                beta: vec![0, 0, 2],
            },
        ] {
            let (g, u) = build(&v).unwrap();
            let verdict = verify_smooth(&g, u);
            assert!(verdict.is_smooth(), "{v:?} gave {verdict}");
        }
    }

    #[test]
    fn degree_profiles() {
        let (g1, _) = build(&row(5, 5, &[0])).unwrap();
        let (g2, _) = build(&row(5, 4, &[0, 0])).unwrap();
        let p1 = degree_profile(&g1);
        assert_eq!(p1.get(&w(1, 0)), Some(&6));
        assert_eq!(p1.get(&w(0, 1)), Some(&4));
        assert!(profiles_distinct(&p1, &degree_profile(&g2)));
        assert!(!profiles_distinct(&p1, &degree_profile(&g1)));
    }

    #[test]
    fn restriction_examples() {
        let (g6, u6) = build(&row(6, 6, &[0])).unwrap();
        let (g5, _) = build(&row(5, 5, &[0])).unwrap();
        assert_eq!(restrict_last_index(&g6, u6).unwrap(), g5);

        let (g6b, u6b) = build(&row(6, 5, &[0, 0])).unwrap();
        assert_eq!(restrict_last_index(&g6b, u6b).unwrap(), g5);

        let (g5a, u5a) = build(&row(5, 5, &[0])).unwrap();
        let flag = build(&row(4, 4, &[0])).unwrap().0;
        assert_eq!(restrict_last_index(&g5a, u5a).unwrap(), flag);

        let (g4, u4) = build(&row(4, 4, &[0])).unwrap();
        assert!(restrict_last_index(&g4, u4).is_err());
    }

    #[test]
    fn variety_json_round_trip() {
        for v in [
            row(5, 4, &[0, 0]),
            TypedVariety::Type5 {
                n: 5,
                m: 2,
                b1: 1,
                b2: 0,
                alpha: vec![1, 1],
            },
            TypedVariety::Type4 { n: 4, m: 2 },
        ] {
            let text = serde_json::to_string(&v).unwrap();
            let back: TypedVariety = serde_json::from_str(&text).unwrap();
            assert_eq!(v, back);
        }
    }
}

//! `Z^2`-gradings of the Plücker quotient ring, their validity predicates,
//! and exact rational cone arithmetic in the plane.
//!
//! The grading of `R(n, m) = K[T_ij, S_l]/I_{2,n}` is stored as the matrix
//! `Q = [w_12, w_13, ..., w_(n-1)n, w_1, ..., w_m]` of lexicographically
//! ordered generator degrees. A usable grading must leave the relations
//! homogeneous, be pointed and almost free, and have a full-dimensional
//! moving cone; each condition has its own predicate here.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plucker::{quadruples_iter, Monomial, PairIndex};

/// A divisor class in `Cl(X) = Z^2`; also used for generator degrees.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct Weight {
    pub x: i64,
    pub y: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { x: 0, y: 0 };

    pub fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// `det(self, other) = x*y' - y*x'`; positive iff `other` is
    /// counterclockwise of `self` within a half turn.
    pub fn det(&self, other: Weight) -> i64 {
        self.x * other.y - self.y * other.x
    }

    pub fn dot(&self, other: Weight) -> i64 {
        self.x * other.x + self.y * other.y
    }

    /// Divides by the gcd of the coordinates; zero stays zero.
    pub fn primitive(&self) -> Weight {
        if self.is_zero() {
            return *self;
        }
        let g = self.x.abs().gcd(&self.y.abs());
        Weight::new(self.x / g, self.y / g)
    }

    fn same_ray(&self, other: Weight) -> bool {
        !self.is_zero() && !other.is_zero() && self.det(other) == 0 && self.dot(other) > 0
    }
}

impl From<(i64, i64)> for Weight {
    fn from((x, y): (i64, i64)) -> Self {
        Weight::new(x, y)
    }
}

impl From<Weight> for (i64, i64) {
    fn from(w: Weight) -> Self {
        (w.x, w.y)
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.x - o.x, self.y - o.y)
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.x, -self.y)
    }
}

impl std::ops::Mul<i64> for Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        Weight::new(self.x * k, self.y * k)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Where a point sits relative to a cone (interior means relative interior).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConePosition {
    Outside,
    Boundary,
    Interior,
}

/// A rational polyhedral cone in the plane, canonically normalized:
/// stored rays are primitive, and a salient cone keeps its rays in
/// counterclockwise order (`det(r1, r2) > 0`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Cone2 {
    Zero,
    Ray(Weight),
    /// Two-dimensional with angle `< pi`, rays counterclockwise ordered.
    Salient(Weight, Weight),
    /// A full line through the origin; the stored direction has `x > 0`,
    /// or `x == 0` and `y > 0`.
    Line(Weight),
    /// `{w : det(d, w) >= 0}`, the closed half-plane left of direction `d`.
    HalfPlane(Weight),
    Full,
}

impl Cone2 {
    /// Convex hull of the rays through the given vectors.
    pub fn hull(weights: &[Weight]) -> Cone2 {
        let mut dirs: Vec<Weight> = weights
            .iter()
            .filter(|w| !w.is_zero())
            .map(Weight::primitive)
            .collect();
        dirs.sort();
        dirs.dedup();
        if dirs.is_empty() {
            return Cone2::Zero;
        }
        if dirs.len() == 1 {
            return Cone2::Ray(dirs[0]);
        }
        if dirs.iter().all(|d| d.det(dirs[0]) == 0) {
            return Cone2::Line(canonical_line(dirs[0]));
        }
        let cw = dirs
            .iter()
            .find(|d| dirs.iter().all(|v| d.det(*v) >= 0))
            .copied();
        let ccw = dirs
            .iter()
            .find(|e| dirs.iter().all(|v| v.det(**e) >= 0))
            .copied();
        match (cw, ccw) {
            (Some(d), Some(e)) => {
                let s = d.det(e);
                if s > 0 {
                    Cone2::Salient(d, e)
                } else {
                    // span is exactly a half turn with something strictly inside
                    Cone2::HalfPlane(d)
                }
            }
            _ => Cone2::Full,
        }
    }

    pub fn position(&self, w: Weight) -> ConePosition {
        match self {
            Cone2::Zero => {
                if w.is_zero() {
                    ConePosition::Interior
                } else {
                    ConePosition::Outside
                }
            }
            Cone2::Ray(r) => {
                if w.is_zero() {
                    ConePosition::Boundary
                } else if r.same_ray(w) {
                    ConePosition::Interior
                } else {
                    ConePosition::Outside
                }
            }
            Cone2::Salient(a, b) => {
                if w.is_zero() {
                    return ConePosition::Boundary;
                }
                let da = a.det(w);
                let db = b.det(w);
                if da > 0 && db < 0 {
                    ConePosition::Interior
                } else if (da == 0 && a.dot(w) > 0) || (db == 0 && b.dot(w) > 0) {
                    ConePosition::Boundary
                } else {
                    ConePosition::Outside
                }
            }
            Cone2::Line(l) => {
                if l.det(w) == 0 {
                    ConePosition::Interior
                } else {
                    ConePosition::Outside
                }
            }
            Cone2::HalfPlane(d) => {
                let s = d.det(w);
                if s > 0 {
                    ConePosition::Interior
                } else if s == 0 {
                    ConePosition::Boundary
                } else {
                    ConePosition::Outside
                }
            }
            Cone2::Full => ConePosition::Interior,
        }
    }

    pub fn contains(&self, w: Weight) -> bool {
        self.position(w) != ConePosition::Outside
    }

    pub fn contains_interior(&self, w: Weight) -> bool {
        self.position(w) == ConePosition::Interior
    }

    pub fn is_full_dimensional(&self) -> bool {
        matches!(self, Cone2::Salient(..) | Cone2::HalfPlane(_) | Cone2::Full)
    }

    /// Extremal boundary directions, where the kind has finitely many.
    fn boundary_dirs(&self) -> Vec<Weight> {
        match self {
            Cone2::Zero | Cone2::Full => Vec::new(),
            Cone2::Ray(r) => vec![*r],
            Cone2::Salient(a, b) => vec![*a, *b],
            Cone2::Line(l) => vec![*l, -*l],
            Cone2::HalfPlane(d) => vec![*d, -*d],
        }
    }

    /// The primitive extremal rays, for salient kinds.
    pub fn rays(&self) -> Vec<Weight> {
        match self {
            Cone2::Ray(r) => vec![*r],
            Cone2::Salient(a, b) => vec![*a, *b],
            _ => Vec::new(),
        }
    }

    pub fn intersect(&self, other: &Cone2) -> Cone2 {
        use Cone2::*;
        match (self, other) {
            (Full, c) | (c, Full) => c.clone(),
            (Zero, _) | (_, Zero) => Zero,
            (HalfPlane(d1), HalfPlane(d2)) if d1 == d2 => HalfPlane(*d1),
            (Line(a), Line(b)) => {
                if a == b {
                    Line(*a)
                } else {
                    Zero
                }
            }
            (Ray(r), c) | (c, Ray(r)) => {
                if c.contains(*r) {
                    Ray(*r)
                } else {
                    Zero
                }
            }
            (a, b) => {
                let mut survivors: Vec<Weight> = Vec::new();
                survivors.extend(a.boundary_dirs().into_iter().filter(|v| b.contains(*v)));
                survivors.extend(b.boundary_dirs().into_iter().filter(|v| a.contains(*v)));
                Cone2::hull(&survivors)
            }
        }
    }
}

fn canonical_line(dir: Weight) -> Weight {
    let d = dir.primitive();
    if d.x > 0 || (d.x == 0 && d.y > 0) {
        d
    } else {
        -d
    }
}

impl fmt::Display for Cone2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cone2::Zero => write!(f, "zero"),
            Cone2::Ray(r) => write!(f, "ray({r})"),
            Cone2::Salient(a, b) => write!(f, "cone({a},{b})"),
            Cone2::Line(l) => write!(f, "line({l})"),
            Cone2::HalfPlane(d) => write!(f, "halfplane({d})"),
            Cone2::Full => write!(f, "full"),
        }
    }
}

/// One generator of the Cox ring: a Plücker variable or a free variable
/// (1-based label).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenId {
    T(PairIndex),
    S(u32),
}

impl fmt::Display for GenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenId::T(p) => write!(f, "{p}"),
            GenId::S(l) => write!(f, "S({l})"),
        }
    }
}

/// 0-based position of a pair in the lexicographic column order
/// `12, 13, ..., 1n, 23, ..., (n-1)n`.
pub fn lex_position(pair: PairIndex, n: u32) -> Result<usize> {
    let (i, j) = (pair.i() as usize, pair.j() as usize);
    let n = n as usize;
    if j > n {
        return Err(Error::InvalidParameter(format!(
            "pair {pair} out of range for n = {n}"
        )));
    }
    Ok((i - 1) * n - i * (i - 1) / 2 + (j - i - 1))
}

/// Inverse of [`lex_position`].
pub fn pair_at(pos: usize, n: u32) -> Result<PairIndex> {
    let mut rest = pos;
    for i in 1..n {
        let row = (n - i) as usize;
        if rest < row {
            return PairIndex::new(i, i + 1 + rest as u32);
        }
        rest -= row;
    }
    Err(Error::InvalidParameter(format!(
        "column {pos} out of range for n = {n}"
    )))
}

fn binom2(n: u32) -> usize {
    (n as usize) * (n as usize - 1) / 2
}

/// The full grading datum: `n`, `m` and the weight of every generator, in
/// lexicographic column order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradingData {
    n: u32,
    t_weights: Vec<Weight>,
    s_weights: Vec<Weight>,
}

#[derive(Serialize, Deserialize)]
struct GradingDataRaw {
    n: u32,
    m: u32,
    t_weights: Vec<Weight>,
    s_weights: Vec<Weight>,
}

impl Serialize for GradingData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GradingDataRaw {
            n: self.n,
            m: self.m(),
            t_weights: self.t_weights.clone(),
            s_weights: self.s_weights.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradingData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GradingDataRaw::deserialize(d)?;
        if raw.s_weights.len() != raw.m as usize {
            return Err(serde::de::Error::custom(format!(
                "s_weights has {} entries but m = {}",
                raw.s_weights.len(),
                raw.m
            )));
        }
        GradingData::new(raw.n, raw.t_weights, raw.s_weights).map_err(serde::de::Error::custom)
    }
}

impl GradingData {
    pub fn new(n: u32, t_weights: Vec<Weight>, s_weights: Vec<Weight>) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidParameter(format!(
                "gradings need n >= 4, got {n}"
            )));
        }
        if t_weights.len() != binom2(n) {
            return Err(Error::InvalidParameter(format!(
                "expected {} pair weights for n = {n}, got {}",
                binom2(n),
                t_weights.len()
            )));
        }
        Ok(Self {
            n,
            t_weights,
            s_weights,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.s_weights.len() as u32
    }

    pub fn weight(&self, pair: PairIndex) -> Weight {
        self.t_weights[lex_position(pair, self.n).expect("pair in range")]
    }

    /// Weight of the free variable `S_l`, 1-based.
    pub fn s_weight(&self, l: u32) -> Weight {
        self.s_weights[(l - 1) as usize]
    }

    pub fn gen_weight(&self, id: GenId) -> Weight {
        match id {
            GenId::T(p) => self.weight(p),
            GenId::S(l) => self.s_weight(l),
        }
    }

    pub fn t_weights(&self) -> &[Weight] {
        &self.t_weights
    }

    pub fn s_weights(&self) -> &[Weight] {
        &self.s_weights
    }

    pub fn pairs(&self) -> impl Iterator<Item = PairIndex> + '_ {
        let n = self.n;
        (0..binom2(n)).map(move |pos| pair_at(pos, n).expect("position in range"))
    }

    /// All generators with their weights, in column order.
    pub fn generators(&self) -> impl Iterator<Item = (GenId, Weight)> + '_ {
        let ts = self.pairs().map(GenId::T);
        let ss = (1..=self.m()).map(GenId::S);
        ts.chain(ss).map(move |id| (id, self.gen_weight(id)))
    }

    pub fn all_weights(&self) -> Vec<Weight> {
        self.t_weights
            .iter()
            .chain(self.s_weights.iter())
            .copied()
            .collect()
    }

    /// The `Z^2`-degree of a monomial under this grading.
    pub fn monomial_weight(&self, mono: &Monomial) -> Weight {
        let mut w = Weight::ZERO;
        for (p, &e) in mono.t_exponents() {
            w = w + self.weight(*p) * (e as i64);
        }
        for (l, &e) in mono.s_exponents().iter().enumerate() {
            w = w + self.s_weights[l] * (e as i64);
        }
        w
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("grading serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// True iff every relation `g_I` is homogeneous:
/// `w_ab + w_cd = w_ac + w_bd = w_ad + w_bc` for all quadruples.
pub fn is_homogeneous(g: &GradingData) -> bool {
    let w = |i, j| g.weight(PairIndex::new(i, j).expect("sorted"));
    quadruples_iter(g.n()).all(|[a, b, c, d]| {
        let s = w(a, b) + w(c, d);
        s == w(a, c) + w(b, d) && s == w(a, d) + w(b, c)
    })
}

/// True iff no generator has weight zero and the effective cone contains no
/// line (equivalently `R_0 = K`).
pub fn is_pointed(g: &GradingData) -> bool {
    let ws = g.all_weights();
    if ws.iter().any(Weight::is_zero) {
        return false;
    }
    matches!(Cone2::hull(&ws), Cone2::Ray(_) | Cone2::Salient(..))
}

/// True iff after deleting any single column the remaining weights still
/// generate `Z^2` as a group; tested via the gcd of all 2x2 minors.
pub fn is_almost_free(g: &GradingData) -> bool {
    let ws = g.all_weights();
    let k = ws.len();
    if k < 3 {
        return false;
    }
    (0..k).all(|drop| {
        let mut gcd: i64 = 0;
        for a in 0..k {
            if a == drop {
                continue;
            }
            for b in (a + 1)..k {
                if b == drop {
                    continue;
                }
                gcd = gcd.gcd(&ws[a].det(ws[b]).abs());
                if gcd == 1 {
                    return true;
                }
            }
        }
        false
    })
}

/// `Eff(X)`: the cone spanned by all generator weights. Requires a pointed
/// grading.
pub fn effective_cone(g: &GradingData) -> Result<Cone2> {
    if !is_pointed(g) {
        return Err(Error::NotPointed);
    }
    Ok(Cone2::hull(&g.all_weights()))
}

/// `Mov(X)`: the intersection over all orthant facets (drop one column) of
/// the cones spanned by the remaining weights.
pub fn moving_cone(g: &GradingData) -> Result<Cone2> {
    if !is_pointed(g) {
        return Err(Error::NotPointed);
    }
    let ws = g.all_weights();
    let mut mov = Cone2::Full;
    for drop in 0..ws.len() {
        let rest: Vec<Weight> = ws
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != drop)
            .map(|(_, w)| *w)
            .collect();
        mov = mov.intersect(&Cone2::hull(&rest));
    }
    Ok(mov)
}

/// `dim(X) = 2(n-2) + m - 2 + 1 = 2n + m - 5` for a type-(2,n) quotient with
/// `Cl(X) = Z^2`.
pub fn dim_x(n: u32, m: u32) -> i64 {
    debug_assert!(n >= 4);
    2 * n as i64 + m as i64 - 5
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{build, TypedVariety};

    pub(crate) fn w(x: i64, y: i64) -> Weight {
        Weight::new(x, y)
    }

    fn pr(i: u32, j: u32) -> PairIndex {
        PairIndex::new(i, j).unwrap()
    }

    fn row1() -> GradingData {
        build(&TypedVariety::full(5, 5, vec![0]).unwrap()).unwrap().0
    }

    fn row2() -> GradingData {
        build(&TypedVariety::full(5, 4, vec![0, 0]).unwrap()).unwrap().0
    }

    #[test]
    fn lex_positions() {
        assert_eq!(lex_position(pr(1, 2), 5).unwrap(), 0);
        assert_eq!(lex_position(pr(2, 3), 5).unwrap(), 4);
        assert_eq!(lex_position(pr(4, 5), 5).unwrap(), 9);
        assert!(lex_position(pr(4, 6), 5).is_err());
        for pos in 0..10 {
            assert_eq!(lex_position(pair_at(pos, 5).unwrap(), 5).unwrap(), pos);
        }
    }

    #[test]
    fn homogeneity() {
        assert!(is_homogeneous(&row1()));

        let mut t = row1().t_weights().to_vec();
        t[0] = w(2, 0); // breaks w_12 + w_34 = w_13 + w_24
        let broken = GradingData::new(5, t, vec![]).unwrap();
        assert!(!is_homogeneous(&broken));

        let constant = GradingData::new(5, vec![w(1, 0); 10], vec![]).unwrap();
        assert!(is_homogeneous(&constant));
    }

    #[test]
    fn pointedness() {
        assert!(is_pointed(&row1()));
        let line = GradingData::new(5, vec![w(1, 0); 10], vec![w(-1, 0)]).unwrap();
        assert!(!is_pointed(&line));
        let zero = GradingData::new(5, vec![w(1, 0); 10], vec![w(0, 0)]).unwrap();
        assert!(!is_pointed(&zero));
    }

    #[test]
    fn almost_freeness() {
        assert!(is_almost_free(&row1()));

        let doubled = GradingData::new(
            4,
            vec![w(1, 0), w(1, 0), w(0, 2), w(1, 0), w(0, 2), w(0, 2)],
            vec![],
        )
        .unwrap();
        assert!(is_homogeneous(&doubled));
        assert!(!is_almost_free(&doubled));

        let rank1 = GradingData::new(5, vec![w(1, 0); 10], vec![]).unwrap();
        assert!(!is_almost_free(&rank1));
    }

    #[test]
    fn effective_cones() {
        assert_eq!(
            effective_cone(&row1()).unwrap(),
            Cone2::Salient(w(1, 0), w(0, 1))
        );
        assert_eq!(
            effective_cone(&row2()).unwrap(),
            Cone2::Salient(w(1, 0), w(-1, 2))
        );
        let single = GradingData::new(5, vec![w(1, 0); 10], vec![]).unwrap();
        assert_eq!(effective_cone(&single).unwrap(), Cone2::Ray(w(1, 0)));
    }

    #[test]
    fn moving_cones() {
        assert_eq!(
            moving_cone(&row1()).unwrap(),
            Cone2::Salient(w(1, 0), w(0, 1))
        );

        // Type 3 with n=5, k=4, m=1: dropping the unique S column truncates
        // the right edge to (2,1); dropping the unique T_45 column truncates
        // the left edge to (1,1).
        let t3 = build(&TypedVariety::Type3 { n: 5, m: 1, k: 4 }).unwrap().0;
        assert_eq!(moving_cone(&t3).unwrap(), Cone2::Salient(w(2, 1), w(1, 1)));

        let single = GradingData::new(5, vec![w(1, 0); 10], vec![]).unwrap();
        assert_eq!(moving_cone(&single).unwrap(), Cone2::Ray(w(1, 0)));
    }

    #[test]
    fn dimension_formula() {
        assert_eq!(dim_x(5, 0), 5);
        assert_eq!(dim_x(8, 0), 11);
        assert_eq!(dim_x(4, 3), 6);
    }

    #[test]
    fn moving_inside_effective() {
        for g in [row1(), row2()] {
            let eff = effective_cone(&g).unwrap();
            let mov = moving_cone(&g).unwrap();
            for r in mov.rays() {
                assert!(eff.contains(r));
            }
        }
    }

    #[test]
    fn pair_sums_depend_on_quadruple_only() {
        // For homogeneous gradings w_ij + w_kl is constant over the three
        // matchings of any four distinct indices.
        for g in [row1(), row2()] {
            for [a, b, c, d] in quadruples_iter(g.n()) {
                let s1 = g.weight(pr(a, b)) + g.weight(pr(c, d));
                let s2 = g.weight(pr(a, c)) + g.weight(pr(b, d));
                let s3 = g.weight(pr(a, d)) + g.weight(pr(b, c));
                assert_eq!(s1, s2);
                assert_eq!(s1, s3);
            }
        }
    }

    #[test]
    fn cone_hull_kinds() {
        assert_eq!(Cone2::hull(&[]), Cone2::Zero);
        assert_eq!(Cone2::hull(&[w(2, 0)]), Cone2::Ray(w(1, 0)));
        assert_eq!(Cone2::hull(&[w(1, 0), w(3, 0)]), Cone2::Ray(w(1, 0)));
        assert_eq!(Cone2::hull(&[w(1, 0), w(-2, 0)]), Cone2::Line(w(1, 0)));
        assert_eq!(
            Cone2::hull(&[w(1, 0), w(0, 1), w(1, 1)]),
            Cone2::Salient(w(1, 0), w(0, 1))
        );
        assert_eq!(
            Cone2::hull(&[w(1, 0), w(-1, 0), w(0, 1)]),
            Cone2::HalfPlane(w(1, 0))
        );
        assert_eq!(
            Cone2::hull(&[w(1, 0), w(-1, 1), w(-1, -1)]),
            Cone2::Full
        );
    }

    #[test]
    fn cone_intersections() {
        let quadrant = Cone2::Salient(w(1, 0), w(0, 1));
        let upper = Cone2::HalfPlane(w(1, 0));
        assert_eq!(quadrant.intersect(&upper), quadrant);
        assert_eq!(
            upper.intersect(&Cone2::HalfPlane(w(0, 1))),
            Cone2::Salient(w(0, 1), w(-1, 0))
        );
        assert_eq!(
            upper.intersect(&Cone2::HalfPlane(w(-1, 0))),
            Cone2::Line(w(1, 0))
        );
        assert_eq!(
            quadrant.intersect(&Cone2::Salient(w(1, 1), w(-1, 1))),
            Cone2::Salient(w(1, 1), w(0, 1))
        );
        assert_eq!(
            quadrant.intersect(&Cone2::Salient(w(0, 1), w(-1, 0))),
            Cone2::Ray(w(0, 1))
        );
        assert_eq!(
            quadrant.intersect(&Cone2::Salient(w(-2, 1), w(-1, 0))),
            Cone2::Zero
        );
        assert_eq!(quadrant.intersect(&Cone2::Line(w(1, 1))), Cone2::Ray(w(1, 1)));
        assert_eq!(quadrant.intersect(&Cone2::Full), quadrant);
        assert_eq!(quadrant.intersect(&Cone2::Zero), Cone2::Zero);
    }

    #[test]
    fn cone_positions() {
        let c = Cone2::Salient(w(1, 0), w(1, 1));
        assert_eq!(c.position(w(5, 2)), ConePosition::Interior);
        assert_eq!(c.position(w(3, 0)), ConePosition::Boundary);
        assert_eq!(c.position(w(2, 2)), ConePosition::Boundary);
        assert_eq!(c.position(w(0, 0)), ConePosition::Boundary);
        assert_eq!(c.position(w(1, 2)), ConePosition::Outside);
        assert_eq!(c.position(w(-1, 0)), ConePosition::Outside);
    }

    #[test]
    fn grading_json_round_trip() {
        let g = row2();
        let text = g.to_json();
        let back = GradingData::from_json(&text).unwrap();
        assert_eq!(g, back);
        assert!(GradingData::from_json("{\"n\":4,\"m\":1,\"t_weights\":[],\"s_weights\":[]}").is_err());
    }
}

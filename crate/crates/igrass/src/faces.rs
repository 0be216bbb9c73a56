//! Orthant faces cut down to the total coordinate space: X̄-faces, the
//! τ⁺/τ⁻ split of the effective cone around the ample chamber, semiample
//! and Picard computations, the smoothness verdict, and base-point-free
//! saturation.
//!
//! In Picard number two every minimal relevant face is two-dimensional, so
//! all positivity data is read off from pairs of generators whose weights
//! flank the chamber: a pair of `T` generators is an X̄-face exactly when
//! its four indices contain a repetition (no `g_I` term hits it), and mixed
//! or free pairs always are.

use std::collections::BTreeSet;
use std::fmt;

use crate::classify;
use crate::error::{Error, Result};
use crate::grading::{
    is_almost_free, is_homogeneous, is_pointed, moving_cone, Cone2, GenId,
    GradingData, Weight,
};
use crate::plucker::PairIndex;

/// A face of the positive orthant, named by the coordinate rays it spans.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Face {
    t_members: Vec<PairIndex>,
    s_members: Vec<u32>,
}

impl Face {
    pub fn new(mut t_members: Vec<PairIndex>, mut s_members: Vec<u32>) -> Self {
        t_members.sort();
        t_members.dedup();
        s_members.sort();
        s_members.dedup();
        Self {
            t_members,
            s_members,
        }
    }

    pub fn from_gens(gens: &[GenId]) -> Self {
        let mut t = Vec::new();
        let mut s = Vec::new();
        for g in gens {
            match g {
                GenId::T(p) => t.push(*p),
                GenId::S(l) => s.push(*l),
            }
        }
        Self::new(t, s)
    }

    pub fn t_members(&self) -> &[PairIndex] {
        &self.t_members
    }

    pub fn s_members(&self) -> &[u32] {
        &self.s_members
    }

    pub fn dim(&self) -> usize {
        self.t_members.len() + self.s_members.len()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for p in &self.t_members {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        for l in &self.s_members {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "S({l})")?;
        }
        write!(f, "}}")
    }
}

/// All X̄-faces of dimension one and two: every singleton, every free or
/// mixed pair, and exactly the `T`-pairs whose four indices collapse to
/// three.
pub fn two_dim_x_faces(n: u32, m: u32) -> Vec<Face> {
    let pairs: Vec<PairIndex> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| PairIndex::new(i, j).expect("sorted")))
        .collect();
    let mut faces = Vec::new();
    for &p in &pairs {
        faces.push(Face::new(vec![p], vec![]));
    }
    for l in 1..=m {
        faces.push(Face::new(vec![], vec![l]));
    }
    for a in 0..pairs.len() {
        for b in (a + 1)..pairs.len() {
            if pair_face_is_x_face(pairs[a], pairs[b]) {
                faces.push(Face::new(vec![pairs[a], pairs[b]], vec![]));
            }
        }
    }
    for l in 1..=m {
        for &p in &pairs {
            faces.push(Face::new(vec![p], vec![l]));
        }
    }
    for l1 in 1..=m {
        for l2 in (l1 + 1)..=m {
            faces.push(Face::new(vec![], vec![l1, l2]));
        }
    }
    faces
}

/// `γ_{p,q}` is an X̄-face iff `|{i1, j1, i2, j2}| = 3`.
pub fn pair_face_is_x_face(p: PairIndex, q: PairIndex) -> bool {
    let set: BTreeSet<u32> = [p.i(), p.j(), q.i(), q.j()].into_iter().collect();
    set.len() == 3
}

/// The τ-decomposition of the weights around the ample chamber of `u`.
#[derive(Clone, Debug)]
pub struct TauSplit {
    pub plus: Vec<GenId>,
    pub minus: Vec<GenId>,
    /// The ample chamber: the inclusion-minimal cone bounded by weight rays
    /// that contains `u` in its interior.
    pub chamber: Cone2,
}

impl TauSplit {
    pub fn is_plus(&self, id: GenId) -> bool {
        self.plus.binary_search(&id).is_ok()
    }
}

/// Splits the generators by the side of the chamber their weight falls on.
/// Fails when `u` lies on a weight ray or outside the effective cone.
pub fn tau_split(g: &GradingData, u: Weight) -> Result<TauSplit> {
    if u.is_zero() {
        return Err(Error::ChamberDegenerate("ample class is zero".into()));
    }
    let mut plus: Vec<GenId> = Vec::new();
    let mut minus: Vec<GenId> = Vec::new();
    for (id, w) in g.generators() {
        let d = w.det(u);
        if d > 0 {
            plus.push(id);
        } else if d < 0 {
            minus.push(id);
        } else {
            return Err(Error::ChamberDegenerate(format!(
                "ample class {u} lies on the ray of the weight of {id}"
            )));
        }
    }
    if plus.is_empty() || minus.is_empty() {
        return Err(Error::ChamberDegenerate(format!(
            "ample class {u} is not in the interior of the effective cone"
        )));
    }
    // chamber = nearest weight rays on each side of u
    let mut r_plus = g.gen_weight(plus[0]);
    for &id in &plus[1..] {
        let w = g.gen_weight(id);
        if r_plus.det(w) > 0 {
            r_plus = w;
        }
    }
    let mut r_minus = g.gen_weight(minus[0]);
    for &id in &minus[1..] {
        let w = g.gen_weight(id);
        if w.det(r_minus) > 0 {
            r_minus = w;
        }
    }
    let chamber = Cone2::Salient(r_plus.primitive(), r_minus.primitive());
    // on degenerate weight configurations (non-salient effective cone) the
    // nearest-ray folds are meaningless; reject instead of guessing
    if !chamber.contains_interior(u) {
        return Err(Error::ChamberDegenerate(format!(
            "no weight-ray chamber contains {u} in its interior"
        )));
    }
    plus.sort();
    minus.sort();
    Ok(TauSplit {
        plus,
        minus,
        chamber,
    })
}

/// The relevant two-dimensional X̄-faces: pairs of generators whose weights
/// flank the chamber, returned as `(plus generator, minus generator)` in
/// deterministic order.
pub fn relevant_two_faces(_g: &GradingData, split: &TauSplit) -> Vec<(GenId, GenId)> {
    let mut out = Vec::new();
    for &p in &split.plus {
        for &q in &split.minus {
            let ok = match (p, q) {
                (GenId::T(a), GenId::T(b)) => pair_face_is_x_face(a, b),
                _ => true,
            };
            if ok {
                out.push((p, q));
            }
        }
    }
    out
}

fn validate_for_faces(g: &GradingData) -> Result<()> {
    if !is_homogeneous(g) {
        return Err(Error::Precondition(
            "grading does not leave the relations homogeneous".into(),
        ));
    }
    if !is_pointed(g) {
        return Err(Error::NotPointed);
    }
    Ok(())
}

/// Checks the hypotheses under which every minimal relevant face is
/// two-dimensional: the free weights lie on one side of the chamber, and
/// every disjoint cross pair of `T` generators is bridged by a relevant
/// two-dimensional X̄-face through one of its connecting coordinate pairs.
fn minimal_faces_are_two_dim(_g: &GradingData, split: &TauSplit) -> Result<()> {
    let s_plus = split.plus.iter().any(|id| matches!(id, GenId::S(_)));
    let s_minus = split.minus.iter().any(|id| matches!(id, GenId::S(_)));
    if s_plus && s_minus {
        return Err(Error::UnknownStructure(
            "free weights lie on both sides of the ample chamber".into(),
        ));
    }
    for &p in &split.plus {
        let GenId::T(a) = p else { continue };
        for &q in &split.minus {
            let GenId::T(b) = q else { continue };
            let idx: BTreeSet<u32> = [a.i(), a.j(), b.i(), b.j()].into_iter().collect();
            if idx.len() < 4 {
                continue;
            }
            // connecting pairs (i1i2, j1j2) and (i1j2, i2j1)
            let alts = [
                (
                    PairIndex::sorted(a.i(), b.i())?,
                    PairIndex::sorted(a.j(), b.j())?,
                ),
                (
                    PairIndex::sorted(a.i(), b.j())?,
                    PairIndex::sorted(b.i(), a.j())?,
                ),
            ];
            let bridged = alts.iter().any(|&(c1, c2)| {
                [c1, c2].iter().all(|&c| {
                    // whichever side w_c lies on, it forms a relevant
                    // two-dimensional X̄-face with the opposite-side pair
                    let partner = if split.is_plus(GenId::T(c)) { b } else { a };
                    pair_face_is_x_face(c, partner)
                })
            });
            if !bridged {
                return Err(Error::UnknownStructure(format!(
                    "cross pair ({a}, {b}) admits no bridging two-dimensional face"
                )));
            }
        }
    }
    Ok(())
}

/// `SAmple(X)`: the intersection of `cone(w, w')` over all relevant
/// two-dimensional X̄-faces.
pub fn semiample_cone(g: &GradingData, u: Weight) -> Result<Cone2> {
    validate_for_faces(g)?;
    let split = tau_split(g, u)?;
    minimal_faces_are_two_dim(g, &split)?;
    let mut samp = Cone2::Full;
    for (p, q) in relevant_two_faces(g, &split) {
        samp = samp.intersect(&Cone2::hull(&[g.gen_weight(p), g.gen_weight(q)]));
    }
    debug_assert!(samp.contains_interior(u));
    Ok(samp)
}

/// True iff every relevant two-dimensional face maps onto a `Z`-basis of
/// `Z^2`; then `Pic(X) = Cl(X) = Z^2`.
pub fn picard_subgroup_is_full(g: &GradingData, u: Weight) -> Result<bool> {
    validate_for_faces(g)?;
    let split = tau_split(g, u)?;
    minimal_faces_are_two_dim(g, &split)?;
    Ok(relevant_two_faces(g, &split)
        .into_iter()
        .all(|(p, q)| g.gen_weight(p).det(g.gen_weight(q)).abs() == 1))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SmoothnessStatus {
    Smooth,
    NotSmooth,
    Unknown,
}

/// What failed, for a `NotSmooth` verdict: either a named validity
/// predicate or a concrete singular face.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    Predicate(&'static str),
    Face(Face),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Predicate(p) => write!(f, "predicate {p}"),
            Witness::Face(face) => write!(f, "face {face}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmoothnessVerdict {
    pub status: SmoothnessStatus,
    pub witness: Option<Witness>,
}

impl SmoothnessVerdict {
    fn smooth() -> Self {
        Self {
            status: SmoothnessStatus::Smooth,
            witness: None,
        }
    }

    fn not_smooth(witness: Witness) -> Self {
        Self {
            status: SmoothnessStatus::NotSmooth,
            witness: Some(witness),
        }
    }

    fn unknown() -> Self {
        Self {
            status: SmoothnessStatus::Unknown,
            witness: None,
        }
    }

    pub fn is_smooth(&self) -> bool {
        self.status == SmoothnessStatus::Smooth
    }
}

impl fmt::Display for SmoothnessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.status, &self.witness) {
            (SmoothnessStatus::Smooth, _) => write!(f, "smooth"),
            (SmoothnessStatus::NotSmooth, Some(w)) => write!(f, "not smooth ({w})"),
            (SmoothnessStatus::NotSmooth, None) => write!(f, "not smooth"),
            (SmoothnessStatus::Unknown, _) => write!(f, "unknown"),
        }
    }
}

/// Decides smoothness of the pair `(g, u)`.
///
/// Necessary conditions are checked one by one, each failure producing a
/// witness: a valid grading, a two-dimensional chamber with `u` interior to
/// the moving cone, free weights on one side, and unimodular relevant
/// two-dimensional faces. Sufficiency is then delegated to recognition
/// against the classified types; a grading passing every necessary check
/// that matches no type is reported `Unknown`.
pub fn verify_smooth(g: &GradingData, u: Weight) -> SmoothnessVerdict {
    if !is_homogeneous(g) {
        return SmoothnessVerdict::not_smooth(Witness::Predicate("homogeneous"));
    }
    if !is_pointed(g) {
        return SmoothnessVerdict::not_smooth(Witness::Predicate("pointed"));
    }
    let mov = moving_cone(g).expect("pointed grading");
    if !mov.is_full_dimensional() {
        return SmoothnessVerdict::not_smooth(Witness::Predicate("moving-cone-full-dimensional"));
    }
    let split = match tau_split(g, u) {
        Ok(s) => s,
        Err(_) => return SmoothnessVerdict::not_smooth(Witness::Predicate("ample-chamber")),
    };
    if !mov.contains_interior(u) {
        return SmoothnessVerdict::not_smooth(Witness::Predicate("ample-class-in-moving-cone"));
    }
    let s_plus: Vec<u32> = split
        .plus
        .iter()
        .filter_map(|id| match id {
            GenId::S(l) => Some(*l),
            _ => None,
        })
        .collect();
    let s_minus: Vec<u32> = split
        .minus
        .iter()
        .filter_map(|id| match id {
            GenId::S(l) => Some(*l),
            _ => None,
        })
        .collect();
    if let (Some(&l1), Some(&l2)) = (s_plus.first(), s_minus.first()) {
        return SmoothnessVerdict::not_smooth(Witness::Face(Face::new(vec![], vec![l1, l2])));
    }
    for (p, q) in relevant_two_faces(g, &split) {
        if g.gen_weight(p).det(g.gen_weight(q)).abs() != 1 {
            return SmoothnessVerdict::not_smooth(Witness::Face(Face::from_gens(&[p, q])));
        }
    }
    if !is_almost_free(g) {
        return SmoothnessVerdict::not_smooth(Witness::Predicate("almost-free"));
    }
    match classify::recognize(g, u) {
        Some(_) => SmoothnessVerdict::smooth(),
        None => SmoothnessVerdict::unknown(),
    }
}

/// True iff the base-point-free monoid is saturated, i.e. every minimal
/// relevant face maps onto a `Z`-basis; requires a `Smooth` instance.
pub fn bpf_saturated(g: &GradingData, u: Weight) -> Result<bool> {
    let verdict = verify_smooth(g, u);
    if !verdict.is_smooth() {
        return Err(Error::Precondition(format!(
            "bpf saturation is only defined for smooth instances, got: {verdict}"
        )));
    }
    picard_subgroup_is_full(g, u)
}

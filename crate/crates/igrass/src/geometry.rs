//! Elementary contractions and the structural geometry of the classified
//! varieties: fiber-type/divisorial/small trichotomy from the cone nest,
//! split-bundle data over the τ-split, per-type fibration and contraction
//! descriptions, and the base-point-free reduction of Fujita freeness.

use std::fmt;

use serde::Serialize;

use crate::classify::{build, TypedVariety};
use crate::error::{Error, Result};
use crate::faces::{self, bpf_saturated};
use crate::grading::{dim_x, effective_cone, moving_cone, ConePosition, GradingData, Weight};

/// Position of a semiample boundary class in the cone nest.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContractionKind {
    FiberType,
    Divisorial,
    Small,
}

impl fmt::Display for ContractionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContractionKind::FiberType => write!(f, "fiber type"),
            ContractionKind::Divisorial => write!(f, "divisorial"),
            ContractionKind::Small => write!(f, "small"),
        }
    }
}

/// Classifies the elementary contraction of a semiample boundary class:
/// fiber type on the effective boundary, divisorial on the moving boundary,
/// small otherwise. Ample classes contract nothing.
pub fn contraction_kind(g: &GradingData, u: Weight, cls: Weight) -> Result<ContractionKind> {
    if cls.is_zero() {
        return Err(Error::InvalidParameter("zero class".into()));
    }
    let samp = faces::semiample_cone(g, u)?;
    match samp.position(cls) {
        ConePosition::Outside => {
            return Err(Error::Precondition(format!(
                "class {cls} lies outside the semiample cone {samp}"
            )))
        }
        ConePosition::Interior => return Err(Error::NoContraction),
        ConePosition::Boundary => {}
    }
    if effective_cone(g)?.position(cls) == ConePosition::Boundary {
        Ok(ContractionKind::FiberType)
    } else if moving_cone(g)?.position(cls) == ConePosition::Boundary {
        Ok(ContractionKind::Divisorial)
    } else {
        Ok(ContractionKind::Small)
    }
}

/// Split-bundle data over the τ-split: `s` fiber coordinates of weight
/// `(1,0)`, `t_1` twists on `(a_i, 1)`-weights, `t_2` on `(a_i, 2)`-weights.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BundleData {
    pub s: usize,
    pub t1: usize,
    pub t2: usize,
    pub twists: Vec<i64>,
}

/// Reads the split-bundle data off a normalized grading; applicable when
/// every τ⁺ weight equals `(1,0)` and every τ⁻ weight has second
/// coordinate 1 or 2 (types 1, 2, 5 and 6).
pub fn bundle_data(g: &GradingData, u: Weight) -> Result<BundleData> {
    let split = faces::tau_split(g, u)?;
    for &id in &split.plus {
        if g.gen_weight(id) != Weight::new(1, 0) {
            return Err(Error::NotApplicable(format!(
                "τ⁺ weight of {id} is {}, not (1,0)",
                g.gen_weight(id)
            )));
        }
    }
    let mut ones = Vec::new();
    let mut twos = Vec::new();
    for &id in &split.minus {
        let w = g.gen_weight(id);
        match w.y {
            1 => ones.push(w.x),
            2 => twos.push(w.x),
            _ => {
                return Err(Error::NotApplicable(format!(
                    "τ⁻ weight {w} of {id} is not of the form (*,1) or (*,2)"
                )))
            }
        }
    }
    ones.sort();
    twos.sort();
    let (t1, t2) = (ones.len(), twos.len());
    let mut twists = ones;
    twists.extend(twos);
    Ok(BundleData {
        s: split.plus.len(),
        t1,
        t2,
        twists,
    })
}

/// Symbolic target spaces of the §-level geometry statements.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpaceDescriptor {
    Projective { dim: i64 },
    /// `Gr(2,k)` in its Plücker embedding `P^{C(k,2)-1}`.
    Grassmannian { k: u32 },
    /// The weighted projective space `P(1^ones, 2^twos)`.
    WeightedProjective { ones: usize, twos: usize },
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceDescriptor::Projective { dim } => write!(f, "P^{dim}"),
            SpaceDescriptor::Grassmannian { k } => {
                write!(f, "Gr(2,{k}) in P^{}", (k * (k - 1)) / 2 - 1)
            }
            SpaceDescriptor::WeightedProjective { ones, twos } => {
                write!(f, "P(1^{ones},2^{twos})")
            }
        }
    }
}

/// Centers of the divisorial contractions of Types 3 and 4.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CenterDescriptor {
    /// `V(I_{2,k-1}, T_ij; j >= k) ≅ Gr(2,k-1)` inside `P^{C(n,2)-1}`.
    SubGrassmannian { k: u32, n: u32 },
    /// The point `V(T_ij; j >= 3)` inside `P^{C(n,2)-1}`.
    Point { n: u32 },
    /// `V(T_13 T_24 - T_14 T_23, S_1, ..., S_m)` inside `P^{3+m}`.
    QuadricSurface { m: u32 },
}

impl fmt::Display for CenterDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CenterDescriptor::SubGrassmannian { k, n } => write!(
                f,
                "V(I_(2,{}), T_ij for j >= {k}) = Gr(2,{}) in P^{}",
                k - 1,
                k - 1,
                (n * (n - 1)) / 2 - 1
            ),
            CenterDescriptor::Point { n } => {
                write!(f, "the point V(T_ij for j >= 3) in P^{}", (n * (n - 1)) / 2 - 1)
            }
            CenterDescriptor::QuadricSurface { m } => {
                write!(f, "V(T_13*T_24 - T_14*T_23, S_1..S_{m}) in P^{}", 3 + m)
            }
        }
    }
}

/// One structural statement about the variety.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VarietyStructure {
    /// Locally trivial fibration with fibers of the stated dimension inside
    /// a weighted projective space (Type 1).
    WeightedFibration {
        base: SpaceDescriptor,
        fiber_dim: i64,
        fiber_ambient: SpaceDescriptor,
    },
    /// Locally trivial fibration with the stated fiber (Types 2 and 5).
    Fibration {
        base: SpaceDescriptor,
        fiber: SpaceDescriptor,
    },
    /// Projectivized split vector bundle `P(⊕ O(twist))` (Type 6).
    SplitBundle {
        base: SpaceDescriptor,
        twists: Vec<i64>,
    },
    /// Birational divisorial contraction with the stated center
    /// (Types 3 and 4 with m = 1).
    DivisorialContraction { center: CenterDescriptor },
    /// Blow-up description (Type 4 with n = 4).
    Blowup {
        ambient: SpaceDescriptor,
        center: CenterDescriptor,
    },
}

impl fmt::Display for VarietyStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyStructure::WeightedFibration {
                base,
                fiber_dim,
                fiber_ambient,
            } => write!(
                f,
                "fibration over {base} with fibers of dimension {fiber_dim} in {fiber_ambient}"
            ),
            VarietyStructure::Fibration { base, fiber } => {
                write!(f, "fibration over {base} with fibers {fiber}")
            }
            VarietyStructure::SplitBundle { base, twists } => {
                let ts: Vec<String> = twists.iter().map(|t| format!("O({t})")).collect();
                write!(f, "P({}) over {base}", ts.join(" + "))
            }
            VarietyStructure::DivisorialContraction { center } => {
                write!(f, "divisorial contraction with center {center}")
            }
            VarietyStructure::Blowup { ambient, center } => {
                write!(f, "blow-up of {ambient} centered at {center}")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ContractionRecord {
    pub class: Weight,
    pub kind: ContractionKind,
}

/// The full geometry report of a classified variety.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GeometryReport {
    pub dim_x: i64,
    pub contractions: Vec<ContractionRecord>,
    pub structures: Vec<VarietyStructure>,
    pub bundle: Option<BundleData>,
    pub fujita: bool,
}

fn binom2(n: u32) -> usize {
    (n as usize) * (n as usize - 1) / 2
}

/// Assembles the geometry report: dimension, the contraction kind of each
/// semiample boundary ray, the per-type structure statements, bundle data
/// where applicable, and the Fujita/base-point-free flag.
pub fn geometry_report(v: &TypedVariety) -> Result<GeometryReport> {
    v.validate()?;
    let (g, u) = build(v)?;
    let (n, m) = (v.n(), v.m());
    let (r1, r2) = v.semiample_rays();
    let mut contractions = Vec::new();
    for ray in [r1.primitive(), r2.primitive()] {
        match contraction_kind(&g, u, ray) {
            Ok(kind) => contractions.push(ContractionRecord { class: ray, kind }),
            Err(Error::NoContraction) => {}
            Err(e) => return Err(e),
        }
    }
    let bundle = match bundle_data(&g, u) {
        Ok(b) => Some(b),
        Err(Error::NotApplicable(_)) => None,
        Err(e) => return Err(e),
    };
    let mut structures = Vec::new();
    match v {
        TypedVariety::Type1 { k, .. } => {
            let (k_i, n_i) = (*k as i64, n as i64);
            structures.push(VarietyStructure::WeightedFibration {
                base: SpaceDescriptor::Grassmannian { k: k - 1 },
                fiber_dim: 2 * (n_i - k_i) + 3,
                fiber_ambient: SpaceDescriptor::WeightedProjective {
                    ones: ((k - 1) * (n - k + 1) + m) as usize,
                    twos: binom2(n - k + 1),
                },
            });
        }
        TypedVariety::Type2 { .. } => {
            structures.push(VarietyStructure::Fibration {
                base: SpaceDescriptor::Projective {
                    dim: n as i64 - 2,
                },
                fiber: SpaceDescriptor::Projective {
                    dim: n as i64 + m as i64 - 3,
                },
            });
        }
        TypedVariety::Type3 { k, .. } => {
            if m == 1 {
                structures.push(VarietyStructure::DivisorialContraction {
                    center: CenterDescriptor::SubGrassmannian { k: *k, n },
                });
            }
        }
        TypedVariety::Type4 { .. } => {
            if m == 1 {
                structures.push(VarietyStructure::DivisorialContraction {
                    center: CenterDescriptor::Point { n },
                });
            }
            if n == 4 {
                structures.push(VarietyStructure::Blowup {
                    ambient: SpaceDescriptor::Projective { dim: 3 + m as i64 },
                    center: CenterDescriptor::QuadricSurface { m },
                });
            }
        }
        TypedVariety::Type5 { .. } => {
            structures.push(VarietyStructure::Fibration {
                base: SpaceDescriptor::Projective { dim: m as i64 - 1 },
                fiber: SpaceDescriptor::Grassmannian { k: n },
            });
        }
        TypedVariety::Type6 { beta, .. } => {
            structures.push(VarietyStructure::SplitBundle {
                base: SpaceDescriptor::Grassmannian { k: n },
                twists: beta.clone(),
            });
        }
    }
    Ok(GeometryReport {
        dim_x: dim_x(n, m),
        contractions,
        structures,
        bundle,
        fujita: fujita_statement(v)?,
    })
}

/// Fujita freeness reduces to saturation of the base-point-free monoid;
/// true for every classified instance.
pub fn fujita_statement(v: &TypedVariety) -> Result<bool> {
    let (g, u) = build(v)?;
    bpf_saturated(&g, u)
}

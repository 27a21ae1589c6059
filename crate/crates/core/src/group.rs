//! The three groups: coordinates and composition laws, Haar and modular
//! densities, the exponential-chart density `m(X)`, dual orbits,
//! coadjoint actions, invariant orbit measures and the disintegration
//! densities, and discretizations of the Plancherel parameter.

use crate::matfun::{sinch, ConeLabel, Mat2};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("group tags do not match: {0:?} vs {1:?}")]
    TagMismatch(GroupTag, GroupTag),
    #[error("dilation parameter must be positive, got {0}")]
    InvalidDilation(f64),
    #[error("point is on the light cone; the invariant measure is singular there")]
    LightlikePoint,
    #[error("orbit parameter must be nonzero")]
    ZeroOrbitParameter,
    #[error("Plancherel mass of the selected set is not both positive and finite: {0}")]
    BadSigmaMass(f64),
    #[error("cone label {0} does not carry a square-integrable representation")]
    NotAnOpenCone(ConeLabel),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupTag {
    Poincare,
    AffinePoincare,
    WeylHeisenberg,
}

impl std::fmt::Display for GroupTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GroupTag::Poincare => "poincare",
            GroupTag::AffinePoincare => "affine-poincare",
            GroupTag::WeylHeisenberg => "weyl-heisenberg",
        };
        f.write_str(s)
    }
}

/// Tagged coordinates of a group element.
///
/// Poincaré elements are `(x, Λ_θ)` acting on the plane by
/// `k ↦ Λ_θ k + x`-duality; affine elements add a dilation `a > 0`;
/// Weyl–Heisenberg elements are `(θ, ξ, η)` with central coordinate `θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GroupElement {
    Poincare { x0: f64, x1: f64, theta: f64 },
    AffinePoincare { x0: f64, x1: f64, theta: f64, a: f64 },
    WeylHeisenberg { theta: f64, xi: f64, eta: f64 },
}

impl GroupElement {
    pub fn tag(&self) -> GroupTag {
        match self {
            GroupElement::Poincare { .. } => GroupTag::Poincare,
            GroupElement::AffinePoincare { .. } => GroupTag::AffinePoincare,
            GroupElement::WeylHeisenberg { .. } => GroupTag::WeylHeisenberg,
        }
    }

    pub fn identity(tag: GroupTag) -> GroupElement {
        match tag {
            GroupTag::Poincare => GroupElement::Poincare {
                x0: 0.0,
                x1: 0.0,
                theta: 0.0,
            },
            GroupTag::AffinePoincare => GroupElement::AffinePoincare {
                x0: 0.0,
                x1: 0.0,
                theta: 0.0,
                a: 1.0,
            },
            GroupTag::WeylHeisenberg => GroupElement::WeylHeisenberg {
                theta: 0.0,
                xi: 0.0,
                eta: 0.0,
            },
        }
    }

    /// Group law. Semidirect products compose as
    /// `(x₁, h₁)(x₂, h₂) = (x₁ + h₁x₂, h₁h₂)`; the Weyl–Heisenberg central
    /// coordinate picks up the symplectic area `(η₁ξ₂ − ξ₁η₂)/2`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        match (self, other) {
            (
                GroupElement::Poincare { x0, x1, theta },
                GroupElement::Poincare {
                    x0: y0,
                    x1: y1,
                    theta: phi,
                },
            ) => {
                let h = Mat2::boost(*theta);
                let hy = h.apply([*y0, *y1]);
                Ok(GroupElement::Poincare {
                    x0: x0 + hy[0],
                    x1: x1 + hy[1],
                    theta: theta + phi,
                })
            }
            (
                GroupElement::AffinePoincare { x0, x1, theta, a },
                GroupElement::AffinePoincare {
                    x0: y0,
                    x1: y1,
                    theta: phi,
                    a: b,
                },
            ) => {
                let h = Mat2::boost(*theta).scale(*a);
                let hy = h.apply([*y0, *y1]);
                Ok(GroupElement::AffinePoincare {
                    x0: x0 + hy[0],
                    x1: x1 + hy[1],
                    theta: theta + phi,
                    a: a * b,
                })
            }
            (
                GroupElement::WeylHeisenberg { theta, xi, eta },
                GroupElement::WeylHeisenberg {
                    theta: phi,
                    xi: xi2,
                    eta: eta2,
                },
            ) => Ok(GroupElement::WeylHeisenberg {
                theta: theta + phi + 0.5 * (eta * xi2 - xi * eta2),
                xi: xi + xi2,
                eta: eta + eta2,
            }),
            _ => Err(GroupError::TagMismatch(self.tag(), other.tag())),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        match self {
            GroupElement::Poincare { x0, x1, theta } => {
                let hinv = Mat2::boost(-theta);
                let y = hinv.apply([*x0, *x1]);
                GroupElement::Poincare {
                    x0: -y[0],
                    x1: -y[1],
                    theta: -theta,
                }
            }
            GroupElement::AffinePoincare { x0, x1, theta, a } => {
                let hinv = Mat2::boost(-theta).scale(1.0 / a);
                let y = hinv.apply([*x0, *x1]);
                GroupElement::AffinePoincare {
                    x0: -y[0],
                    x1: -y[1],
                    theta: -theta,
                    a: 1.0 / a,
                }
            }
            GroupElement::WeylHeisenberg { theta, xi, eta } => GroupElement::WeylHeisenberg {
                theta: -theta,
                xi: -xi,
                eta: -eta,
            },
        }
    }
}

/// Left-Haar density in the element's own coordinates: `dx dθ` for
/// Poincaré, `a⁻³ dx da dθ` for the affine group, `dθ dξ dη` for
/// Weyl–Heisenberg.
pub fn haar_weight(g: &GroupElement) -> f64 {
    match g {
        GroupElement::Poincare { .. } => 1.0,
        GroupElement::AffinePoincare { a, .. } => 1.0 / (a * a * a),
        GroupElement::WeylHeisenberg { .. } => 1.0,
    }
}

/// Modular function `Δ_G`, with the convention `dμ_G = Δ_G dμ_r`.
/// The two unimodular groups give 1; the affine group gives `a⁻²`.
pub fn modular_function(g: &GroupElement) -> f64 {
    match g {
        GroupElement::AffinePoincare { a, .. } => 1.0 / (a * a),
        _ => 1.0,
    }
}

/// Density `m(X)` transferring left Haar measure to the Lie algebra
/// through the exponential chart, `dμ_G(e^X) = m(X) dX`.
///
/// Poincaré depends only on the boost coordinate: `sinch²(θ/2)`. The
/// affine density is evaluated in the factored form
/// `e^{−λ} sinch((λ+θ)/2) sinch((λ−θ)/2)`, which fills the removable
/// singularities of the raw quotient `2(cosh λ − cosh θ)/(e^λ(λ² − θ²))`.
pub fn lie_density(tag: GroupTag, lambda: f64, theta: f64) -> f64 {
    match tag {
        GroupTag::Poincare => {
            let s = sinch(0.5 * theta);
            s * s
        }
        GroupTag::AffinePoincare => {
            (-lambda).exp() * sinch(0.5 * (lambda + theta)) * sinch(0.5 * (lambda - theta))
        }
        GroupTag::WeylHeisenberg => 1.0,
    }
}

/// Point of the dual of the Lie algebra, tagged by group.
///
/// Poincaré points pair `γ` with the boost generator and `k` with the
/// translations; affine points carry `γ = (γ₁, γ₂)` paired with
/// (dilation, boost); Weyl–Heisenberg points have central component `γ₀`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoadjointPoint {
    Poincare {
        k0: f64,
        k1: f64,
        gamma: f64,
    },
    Affine {
        k0: f64,
        k1: f64,
        gamma1: f64,
        gamma2: f64,
    },
    WeylHeisenberg {
        gamma0: f64,
        gamma1: f64,
        gamma2: f64,
    },
}

impl CoadjointPoint {
    pub fn tag(&self) -> GroupTag {
        match self {
            CoadjointPoint::Poincare { .. } => GroupTag::Poincare,
            CoadjointPoint::Affine { .. } => GroupTag::AffinePoincare,
            CoadjointPoint::WeylHeisenberg { .. } => GroupTag::WeylHeisenberg,
        }
    }
}

/// Coadjoint action of `g` on a dual point, in the chart of the point.
///
/// * Poincaré: `k′ = h⁻¹k`, `γ′ = γ − xᵀσ₁k′`.
/// * Affine: `k′ = a⁻¹h⁻¹k`, `γ′ = γ + X_q(x₀,x₁)k′`.
/// * Weyl–Heisenberg: `γ₀′ = γ₀`, `γ₁′ = γ₁ − ξγ₀`, `γ₂′ = γ₂ − ηγ₀`.
///
/// The forward cone and the orbit invariants (`k₀²−k₁²` for Poincaré, the
/// cone label for affine, `γ₀` for Weyl–Heisenberg) are preserved.
pub fn coadjoint_apply(
    g: &GroupElement,
    p: &CoadjointPoint,
) -> Result<CoadjointPoint, GroupError> {
    match (g, p) {
        (
            GroupElement::Poincare { x0, x1, theta },
            CoadjointPoint::Poincare { k0, k1, gamma },
        ) => {
            let kp = Mat2::boost(-theta).apply([*k0, *k1]);
            // xᵀσ₁k′ = x₀k₁′ + x₁k₀′
            let shift = x0 * kp[1] + x1 * kp[0];
            Ok(CoadjointPoint::Poincare {
                k0: kp[0],
                k1: kp[1],
                gamma: gamma - shift,
            })
        }
        (
            GroupElement::AffinePoincare { x0, x1, theta, a },
            CoadjointPoint::Affine {
                k0,
                k1,
                gamma1,
                gamma2,
            },
        ) => {
            let kp = Mat2::boost(-theta).scale(1.0 / a).apply([*k0, *k1]);
            let shift = Mat2::x_q(*x0, *x1).apply(kp);
            Ok(CoadjointPoint::Affine {
                k0: kp[0],
                k1: kp[1],
                gamma1: gamma1 + shift[0],
                gamma2: gamma2 + shift[1],
            })
        }
        (
            GroupElement::WeylHeisenberg { xi, eta, .. },
            CoadjointPoint::WeylHeisenberg {
                gamma0,
                gamma1,
                gamma2,
            },
        ) => Ok(CoadjointPoint::WeylHeisenberg {
            gamma0: *gamma0,
            gamma1: gamma1 - xi * gamma0,
            gamma2: gamma2 - eta * gamma0,
        }),
        _ => Err(GroupError::TagMismatch(g.tag(), p.tag())),
    }
}

/// Which of the two dual-orbit base points a Poincaré orbit hangs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoincareFamily {
    /// Base point `(1, 0)`: timelike orbits (the mass hyperbolas).
    TimeAxis,
    /// Base point `(0, 1)`: spacelike orbits.
    SpaceAxis,
}

impl PoincareFamily {
    pub fn base_point(&self) -> [f64; 2] {
        match self {
            PoincareFamily::TimeAxis => [1.0, 0.0],
            PoincareFamily::SpaceAxis => [0.0, 1.0],
        }
    }
}

/// Label of an orbit contributing to the Plancherel decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrbitLabel {
    Poincare { family: PoincareFamily, y: f64 },
    AffineCone(ConeLabel),
    WeylHeisenberg { lambda: f64 },
}

impl OrbitLabel {
    pub fn poincare_mass(y: f64) -> Result<OrbitLabel, GroupError> {
        if y == 0.0 || !y.is_finite() {
            return Err(GroupError::ZeroOrbitParameter);
        }
        Ok(OrbitLabel::Poincare {
            family: PoincareFamily::TimeAxis,
            y,
        })
    }

    pub fn affine_cone(cone: ConeLabel) -> Result<OrbitLabel, GroupError> {
        if !cone.is_open_cone() {
            return Err(GroupError::NotAnOpenCone(cone));
        }
        Ok(OrbitLabel::AffineCone(cone))
    }

    pub fn weyl_heisenberg(lambda: f64) -> Result<OrbitLabel, GroupError> {
        if lambda == 0.0 || !lambda.is_finite() {
            return Err(GroupError::ZeroOrbitParameter);
        }
        Ok(OrbitLabel::WeylHeisenberg { lambda })
    }
}

/// Point `y Λ_θ v` of the Poincaré dual orbit labelled `(v, y)`.
pub fn dual_orbit_point(label: &OrbitLabel, theta: f64) -> Result<[f64; 2], GroupError> {
    match label {
        OrbitLabel::Poincare { family, y } => {
            Ok(Mat2::boost(theta).scale(*y).apply(family.base_point()))
        }
        _ => Err(GroupError::TagMismatch(
            GroupTag::Poincare,
            GroupTag::Poincare,
        )),
    }
}

/// Invariant mass `√(k₀² − k₁²)` of a forward-cone point.
pub fn invariant_mass(k0: f64, k1: f64) -> f64 {
    (k0 * k0 - k1 * k1).sqrt()
}

/// Orbit rapidity of a forward-cone point: `atanh(k₁/k₀)`, the boost
/// carrying `(y, 0)` to `(k₀, k₁)`.
pub fn rapidity_of(k0: f64, k1: f64) -> f64 {
    (k1 / k0).atanh()
}

/// Plancherel density in the label's coordinates: `|y|` for Poincaré
/// masses, the counting measure (weight 1) on affine cones, `|λ|` for
/// Weyl–Heisenberg.
pub fn plancherel_weight(label: &OrbitLabel) -> f64 {
    match label {
        OrbitLabel::Poincare { y, .. } => y.abs(),
        OrbitLabel::AffineCone(_) => 1.0,
        OrbitLabel::WeylHeisenberg { lambda } => lambda.abs(),
    }
}

/// Coadjoint-invariant measure density at `p`, in the chart carried by
/// the point: `1/k₀` for Poincaré (chart `(k₁, γ)`), `1/(k₀²−k₁²)` for
/// affine (chart `(k₀, k₁, γ₁, γ₂)`), 1 for Weyl–Heisenberg.
pub fn orbit_measure_weight(p: &CoadjointPoint) -> Result<f64, GroupError> {
    match p {
        CoadjointPoint::Poincare { k0, .. } => Ok(1.0 / k0),
        CoadjointPoint::Affine { k0, k1, .. } => {
            let q = k0 * k0 - k1 * k1;
            if q == 0.0 {
                Err(GroupError::LightlikePoint)
            } else {
                Ok(1.0 / q)
            }
        }
        CoadjointPoint::WeylHeisenberg { .. } => Ok(1.0),
    }
}

/// Disintegration density `σ_λ` at `p`: Lebesgue measure on the dual of
/// the Lie algebra factors as `σ_λ dκ(λ) dΩ_λ`.
pub fn sigma_density(p: &CoadjointPoint) -> Result<f64, GroupError> {
    match p {
        CoadjointPoint::Poincare { .. } => Ok(1.0),
        CoadjointPoint::Affine { k0, k1, .. } => {
            let q = k0 * k0 - k1 * k1;
            if q == 0.0 {
                Err(GroupError::LightlikePoint)
            } else {
                Ok(q)
            }
        }
        CoadjointPoint::WeylHeisenberg { .. } => Ok(1.0),
    }
}

/// Density of the orbit-space measure `dκ` in the label coordinate:
/// `y dy` for Poincaré masses, an atom for affine cones, `dγ₀` for
/// Weyl–Heisenberg.
pub fn kappa_density(label: &OrbitLabel) -> f64 {
    match label {
        OrbitLabel::Poincare { y, .. } => y.abs(),
        OrbitLabel::AffineCone(_) => 1.0,
        OrbitLabel::WeylHeisenberg { .. } => 1.0,
    }
}

/// Selection of a subset of the unitary dual, prior to discretization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SigmaSpec {
    /// Forward-family mass interval `[y_min, y_max]` sampled at `count`
    /// nodes. `y_max = ∞` is accepted here and rejected by the
    /// admissibility check.
    PoincareMasses { y_min: f64, y_max: f64, count: usize },
    /// A single affine cone (an atom of counting measure).
    AffineCone(ConeLabel),
    /// A single Weyl–Heisenberg orbit, treated as an atom of counting
    /// measure weighted by the Plancherel density `|λ|`.
    WeylHeisenbergAtom { lambda: f64 },
    /// Weyl–Heisenberg orbit interval `[λ_min, λ_max]`, `0 ∉ [λ_min, λ_max]`.
    WeylHeisenbergInterval { l_min: f64, l_max: f64, count: usize },
}

impl SigmaSpec {
    pub fn tag(&self) -> GroupTag {
        match self {
            SigmaSpec::PoincareMasses { .. } => GroupTag::Poincare,
            SigmaSpec::AffineCone(_) => GroupTag::AffinePoincare,
            SigmaSpec::WeylHeisenbergAtom { .. } | SigmaSpec::WeylHeisenbergInterval { .. } => {
                GroupTag::WeylHeisenberg
            }
        }
    }
}

/// Discretized Plancherel parameter: orbit labels with quadrature weights
/// for the Plancherel measure.
#[derive(Debug, Clone)]
pub struct SigmaDiscretization {
    pub labels: Vec<OrbitLabel>,
    pub weights: Vec<f64>,
}

impl SigmaDiscretization {
    /// Discretize a Σ selection. Interval specs get trapezoidal nodes with
    /// the Plancherel density folded into the weights; atoms keep their
    /// counting weight.
    pub fn build(spec: &SigmaSpec) -> Result<SigmaDiscretization, GroupError> {
        match spec {
            SigmaSpec::PoincareMasses { y_min, y_max, count } => {
                if !(y_min.is_finite() && y_max.is_finite()) || *y_min <= 0.0 || y_max <= y_min {
                    return Err(GroupError::BadSigmaMass(f64::INFINITY));
                }
                let grid = crate::grid::Grid1D::uniform(*y_min, *y_max, *count)
                    .map_err(|_| GroupError::BadSigmaMass(0.0))?;
                let labels = grid
                    .points()
                    .iter()
                    .map(|&y| OrbitLabel::poincare_mass(y))
                    .collect::<Result<Vec<_>, _>>()?;
                let weights = labels
                    .iter()
                    .zip(grid.weights())
                    .map(|(l, w)| plancherel_weight(l) * w)
                    .collect();
                Ok(SigmaDiscretization { labels, weights })
            }
            SigmaSpec::AffineCone(cone) => {
                let label = OrbitLabel::affine_cone(*cone)?;
                Ok(SigmaDiscretization {
                    labels: vec![label],
                    weights: vec![1.0],
                })
            }
            SigmaSpec::WeylHeisenbergAtom { lambda } => {
                let label = OrbitLabel::weyl_heisenberg(*lambda)?;
                let w = plancherel_weight(&label);
                Ok(SigmaDiscretization {
                    labels: vec![label],
                    weights: vec![w],
                })
            }
            SigmaSpec::WeylHeisenbergInterval { l_min, l_max, count } => {
                if !(l_min.is_finite() && l_max.is_finite())
                    || l_max <= l_min
                    || (*l_min <= 0.0 && *l_max >= 0.0)
                {
                    return Err(GroupError::ZeroOrbitParameter);
                }
                let grid = crate::grid::Grid1D::uniform(*l_min, *l_max, *count)
                    .map_err(|_| GroupError::ZeroOrbitParameter)?;
                let labels = grid
                    .points()
                    .iter()
                    .map(|&l| OrbitLabel::weyl_heisenberg(l))
                    .collect::<Result<Vec<_>, _>>()?;
                let weights = labels
                    .iter()
                    .zip(grid.weights())
                    .map(|(l, w)| plancherel_weight(l) * w)
                    .collect();
                Ok(SigmaDiscretization { labels, weights })
            }
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Total Plancherel mass of the discretized set.
    pub fn total_mass(&self) -> f64 {
        crate::grid::pairwise_sum_real(0, self.weights.len(), &|i| self.weights[i])
    }
}

//! The right quaternionic vector space `ℍ^{n,1}` with its signature-(n,1)
//! Hermitian form, point classification, and the hyperbolic distance.
//!
//! Coordinates are taken in an orthogonal basis where the form is
//! `⟨v,w⟩ = Σᵢ₌₁ⁿ conj(vᵢ) wᵢ − conj(v_{n+1}) w_{n+1}`. Scalars act on the
//! right, `(vλ)ᵢ = vᵢ λ`, and the form is conjugate-linear in its first slot:
//! `⟨vλ, wμ⟩ = conj(λ) ⟨v,w⟩ μ`.
//!
//! Projective points are classed by the sign of `⟨v,v⟩`: negative points form
//! hyperbolic space, isotropic points its ideal boundary, and positive points
//! correspond to totally geodesic quaternionic hyperplanes via polarity.

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::quaternion::Quaternion;
use crate::tol::{checked_acosh, Tolerances, DEFAULT_EPS_ISOTROPY, DEFAULT_EPS_RANK};
use serde::{Deserialize, Serialize};

/// Sign class of a vector or projective point under the Hermitian form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Isotropic,
    Positive,
}

impl Sign {
    pub fn name(&self) -> &'static str {
        match self {
            Sign::Negative => "negative",
            Sign::Isotropic => "isotropic",
            Sign::Positive => "positive",
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Homogeneous coordinates of a point: a vector in `ℍ^{n,1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(pub Vec<Quaternion>);

impl HVector {
    pub fn new(coords: Vec<Quaternion>) -> Self {
        Self(coords)
    }

    /// Convenience constructor from `[w,x,y,z]` quadruples.
    pub fn from_arrays(coords: &[[f64; 4]]) -> Self {
        Self(coords.iter().map(|a| Quaternion::from(*a)).collect())
    }

    /// Real coordinates, one quaternion per real entry.
    pub fn from_reals(coords: &[f64]) -> Self {
        Self(coords.iter().map(|r| Quaternion::real(*r)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Quaternion] {
        &self.0
    }

    /// Right scalar action `v ↦ vλ`.
    pub fn scaled(&self, lambda: Quaternion) -> HVector {
        Self(self.0.iter().map(|c| *c * lambda).collect())
    }

    pub fn add(&self, other: &HVector) -> HVector {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a + *b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &HVector) -> HVector {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a - *b)
                .collect(),
        )
    }

    /// Euclidean norm of the coordinates (no form involved).
    pub fn coord_norm(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Rescaled to unit Euclidean coordinate norm.
    pub fn coord_normalized(&self) -> HVector {
        let n = self.coord_norm();
        Self(self.0.iter().map(|c| c.scale(1.0 / n)).collect())
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.coord_norm() <= tol
    }

    /// Whether `other` is a right multiple of `self` (same projective point).
    pub fn proportional_to(&self, other: &HVector, tol: f64) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let a = self.coord_normalized();
        let b = other.coord_normalized();
        // fit the scalar on the largest coordinate, then test the residual
        let k = (0..a.dim())
            .max_by(|&p, &q| {
                a.0[p]
                    .norm()
                    .partial_cmp(&a.0[q].norm())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap();
        if a.0[k].norm() <= tol {
            return b.coord_norm() <= tol;
        }
        let lambda = a.0[k].inverse() * b.0[k];
        b.sub(&a.scaled(lambda)).coord_norm() <= tol
    }
}

/// A projective point together with its sign class and a chosen lift.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProjectivePoint {
    rep: HVector,
    sign: Sign,
}

impl ProjectivePoint {
    pub fn rep(&self) -> &HVector {
        &self.rep
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// The same point with its lift rescaled by a nonzero quaternion.
    pub fn rescaled(&self, lambda: Quaternion) -> ProjectivePoint {
        ProjectivePoint {
            rep: self.rep.scaled(lambda),
            sign: self.sign,
        }
    }
}

/// `ℍ^{n,1}`: dimension data plus the form, with `J = diag(1,…,1,−1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HermitianSpace {
    n: usize,
}

impl HermitianSpace {
    /// Quaternionic projective dimension `n ≥ 1`; vectors have `n+1` coordinates.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "projective dimension must be at least 1");
        Self { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of homogeneous coordinates, `n + 1`.
    pub fn dim(&self) -> usize {
        self.n + 1
    }

    /// The form matrix `J = diag(1,…,1,−1)`.
    pub fn form_matrix(&self) -> QMatrix {
        let mut j = QMatrix::identity(self.dim());
        j[(self.n, self.n)] = -Quaternion::ONE;
        j
    }

    fn check_dim(&self, v: &HVector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.dim(),
            });
        }
        Ok(())
    }

    /// The Hermitian product `⟨v,w⟩ = Σᵢ conj(vᵢ)wᵢ − conj(v_{n+1})w_{n+1}`.
    pub fn herm(&self, v: &HVector, w: &HVector) -> Result<Quaternion> {
        self.check_dim(v)?;
        self.check_dim(w)?;
        Ok(self.herm_unchecked(v, w))
    }

    pub(crate) fn herm_unchecked(&self, v: &HVector, w: &HVector) -> Quaternion {
        let mut acc = Quaternion::ZERO;
        for i in 0..self.n {
            acc += v.0[i].conj() * w.0[i];
        }
        acc - v.0[self.n].conj() * w.0[self.n]
    }

    /// `⟨v,v⟩` as a real number (its imaginary part vanishes identically).
    pub fn herm_self(&self, v: &HVector) -> Result<f64> {
        self.check_dim(v)?;
        Ok(self.herm_self_unchecked(v))
    }

    pub(crate) fn herm_self_unchecked(&self, v: &HVector) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.n {
            acc += v.0[i].norm_sqr();
        }
        acc - v.0[self.n].norm_sqr()
    }

    /// Sign classification of a nonzero vector, with isotropy threshold `eps`
    /// applied to the scale-invariant ratio `⟨v,v⟩ / ‖v‖²`.
    pub fn classify(&self, v: &HVector, eps: f64) -> Result<Sign> {
        self.check_dim(v)?;
        let n2 = v.coord_norm();
        if n2 == 0.0 {
            return Err(Error::ZeroVector);
        }
        let q = self.herm_self_unchecked(v) / (n2 * n2);
        Ok(if q.abs() <= eps {
            Sign::Isotropic
        } else if q < 0.0 {
            Sign::Negative
        } else {
            Sign::Positive
        })
    }

    /// Wraps a lift into a classified projective point (default isotropy eps).
    pub fn point(&self, rep: HVector) -> Result<ProjectivePoint> {
        self.point_with_eps(rep, DEFAULT_EPS_ISOTROPY)
    }

    pub fn point_with_eps(&self, rep: HVector, eps: f64) -> Result<ProjectivePoint> {
        let sign = self.classify(&rep, eps)?;
        Ok(ProjectivePoint { rep, sign })
    }

    /// Hyperbolic distance `cosh⁻¹( |⟨v,w⟩| [⟨v,v⟩⟨w,w⟩]^{-1/2} )` between two
    /// negative points; independent of the chosen lifts.
    pub fn bergman_distance(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<f64> {
        for pt in [p, q] {
            if pt.sign() != Sign::Negative {
                return Err(Error::WrongSign {
                    expected: "negative",
                    got: pt.sign().name(),
                });
            }
        }
        let vv = self.herm_self(p.rep())?;
        let ww = self.herm_self(q.rep())?;
        let vw = self.herm(p.rep(), q.rep())?;
        checked_acosh(vw.norm() / (vv * ww).sqrt())
    }

    /// Orthogonal projection of `v` onto the right span of `basis` with
    /// respect to the form. Requires the basis Gram matrix to be invertible.
    pub fn project_onto_span(&self, v: &HVector, basis: &[HVector]) -> Result<HVector> {
        self.check_dim(v)?;
        for b in basis {
            self.check_dim(b)?;
        }
        let k = basis.len();
        let gram = QMatrix::from_fn(k, k, |i, j| self.herm_unchecked(&basis[i], &basis[j]));
        let rhs: Vec<Quaternion> = basis
            .iter()
            .map(|b| self.herm_unchecked(b, v))
            .collect();
        let coeff = gram.solve(&rhs)?;
        let mut w = HVector(vec![Quaternion::ZERO; self.dim()]);
        for (b, c) in basis.iter().zip(&coeff) {
            w = w.add(&b.scaled(*c));
        }
        Ok(w)
    }

    /// Whether the Gram matrix of the vectors is nondegenerate: its smallest
    /// singular value exceeds `eps` times its largest.
    pub fn regular(&self, vectors: &[HVector], eps: f64) -> bool {
        if vectors.is_empty() {
            return true;
        }
        if vectors.iter().any(|v| v.dim() != self.dim()) {
            return false;
        }
        let m = vectors.len();
        let gram = QMatrix::from_fn(m, m, |i, j| self.herm_unchecked(&vectors[i], &vectors[j]));
        let (max, min) = gram.singular_extremes();
        max > 0.0 && min > eps * max
    }

    /// A basis of the orthogonal complement of `span(vectors)` found by
    /// projecting the standard basis away from the span and keeping vectors
    /// with well-conditioned pivots.
    pub fn orthogonal_complement_basis(&self, vectors: &[HVector]) -> Result<Vec<HVector>> {
        let target = self.dim() - vectors.len();
        let mut found: Vec<HVector> = Vec::new();
        for k in 0..self.dim() {
            if found.len() == target {
                break;
            }
            let mut e = HVector(vec![Quaternion::ZERO; self.dim()]);
            e.0[k] = Quaternion::ONE;
            let mut c = e.sub(&self.project_onto_span(&e, vectors)?);
            // orthogonalize against the complement vectors found so far
            if !found.is_empty() {
                c = c.sub(&self.project_onto_span(&c, &found)?);
            }
            let scale = c.coord_norm();
            if scale <= 1e-8 {
                continue;
            }
            let q = self.herm_self_unchecked(&c) / (scale * scale);
            if q.abs() <= 1e-10 {
                continue; // nearly null pivot, unusable for a regular basis
            }
            found.push(c.scaled(Quaternion::real(1.0 / scale)));
        }
        if found.len() != target {
            return Err(Error::DegenerateSpan);
        }
        Ok(found)
    }

    /// Distance from a negative point to the totally geodesic submanifold cut
    /// out by the regular span of `basis`, via the form-orthogonal projection.
    pub fn distance_to_span(&self, p: &ProjectivePoint, basis: &[HVector]) -> Result<f64> {
        let proj = self.project_onto_span(p.rep(), basis)?;
        let foot = self.point_with_eps(proj, DEFAULT_EPS_ISOTROPY)?;
        if foot.sign() != Sign::Negative {
            return Err(Error::WrongSign {
                expected: "negative",
                got: foot.sign().name(),
            });
        }
        self.bergman_distance(p, &foot)
    }

    /// Rank of the coordinate matrix of the lifts (dimension of their span).
    pub fn span_rank(&self, vectors: &[HVector], eps: f64) -> usize {
        let cols: Vec<Vec<Quaternion>> = vectors.iter().map(|v| v.0.clone()).collect();
        match QMatrix::from_columns(&cols) {
            Ok(m) => m.rank(eps),
            Err(_) => 0,
        }
    }
}

/// Convenience: default tolerances bundled with a space.
pub fn default_tolerances() -> Tolerances {
    Tolerances::default()
}

/// Default rank cutoff re-exported for callers of [`HermitianSpace::regular`].
pub const REGULARITY_EPS: f64 = DEFAULT_EPS_RANK;

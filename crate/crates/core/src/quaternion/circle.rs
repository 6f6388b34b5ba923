use super::{geodesic_distance, norm4, UnitQuaternion, UNIT_TOL};
use crate::error::{GeometryError, Result};

/// A great circle of S³, `t ↦ a cos t + b sin t` with `a ⟂ b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreatCircle {
    a: UnitQuaternion,
    b: UnitQuaternion,
}

/// How two great circles meet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CircleIntersection {
    Disjoint,
    /// The circles share exactly this antipodal pair.
    Antipodal(UnitQuaternion),
    Identical,
}

impl GreatCircle {
    /// Requires `⟨a, b⟩ = 0` to within 1e-12.
    pub fn new(a: UnitQuaternion, b: UnitQuaternion) -> Result<Self> {
        let ip = a.dot(&b);
        if ip.abs() > UNIT_TOL {
            return Err(GeometryError::NotOrthogonal(ip));
        }
        // Drop the residual component so the basis is orthonormal to rounding.
        let b = orthogonalize(b, a).ok_or(GeometryError::NotOrthogonal(ip))?;
        Ok(Self { a, b })
    }

    /// The great circle through two distinct, non-antipodal points.
    pub fn through(p: UnitQuaternion, q: UnitQuaternion) -> Result<Self> {
        let b = orthogonalize(q, p).ok_or_else(|| {
            GeometryError::InvalidArgument("points are equal or antipodal".into())
        })?;
        Ok(Self { a: p, b })
    }

    pub fn a(&self) -> UnitQuaternion {
        self.a
    }

    pub fn b(&self) -> UnitQuaternion {
        self.b
    }

    pub fn point_at(&self, t: f64) -> UnitQuaternion {
        let (s, c) = t.sin_cos();
        let (a, b) = (self.a.to_array(), self.b.to_array());
        UnitQuaternion::normalized([
            a[0] * c + b[0] * s,
            a[1] * c + b[1] * s,
            a[2] * c + b[2] * s,
            a[3] * c + b[3] * s,
        ])
    }

    /// `n` points at evenly spaced parameters in `[0, 2π)`.
    pub fn sample(&self, n: usize) -> Vec<UnitQuaternion> {
        (0..n)
            .map(|k| self.point_at(std::f64::consts::TAU * k as f64 / n as f64))
            .collect()
    }

    /// Closest point of the circle to `p`, or `None` when `p` is orthogonal
    /// to the whole plane.
    pub fn closest_point(&self, p: UnitQuaternion) -> Option<UnitQuaternion> {
        let (ca, cb) = (p.dot(&self.a), p.dot(&self.b));
        if ca.hypot(cb) < 1e-15 {
            return None;
        }
        Some(self.point_at(cb.atan2(ca)))
    }

    /// Round distance from `p` to the nearest point of the circle.
    pub fn distance_to(&self, p: UnitQuaternion) -> f64 {
        match self.closest_point(p) {
            Some(c) => geodesic_distance(p, c),
            None => std::f64::consts::FRAC_PI_2,
        }
    }

    pub fn contains(&self, p: UnitQuaternion, tol: f64) -> bool {
        self.distance_to(p) <= tol
    }

    /// True when the two circles are the same point set.
    pub fn same_as(&self, other: &Self, tol: f64) -> bool {
        self.contains(other.a, tol) && self.contains(other.b, tol)
    }

    /// Largest |inner product| between the basis vectors of the two planes;
    /// zero exactly when the planes are orthogonal complements.
    pub fn orthogonality_defect(&self, other: &Self) -> f64 {
        [
            self.a.dot(&other.a),
            self.a.dot(&other.b),
            self.b.dot(&other.a),
            self.b.dot(&other.b),
        ]
        .into_iter()
        .map(f64::abs)
        .fold(0.0, f64::max)
    }

    /// Intersection of the two circles as subsets of S³.
    ///
    /// Two 2-planes of R⁴ meet in 0, a line, or coincide; `tol` bounds the
    /// out-of-plane residuals treated as zero.
    pub fn intersection(&self, other: &Self, tol: f64) -> CircleIntersection {
        let ea = self.residual(other.a);
        let eb = self.residual(other.b);
        let (na, nb) = (norm4(ea), norm4(eb));
        if na <= tol && nb <= tol {
            return CircleIntersection::Identical;
        }
        // λ ea + μ eb = 0 has a nontrivial solution iff ea ∥ eb
        let gram = dot4(ea, ea) * dot4(eb, eb) - dot4(ea, eb).powi(2);
        let area = gram.max(0.0).sqrt();
        if area > tol * na.max(nb) {
            return CircleIntersection::Disjoint;
        }
        let (lambda, mu) = if na >= nb {
            (-dot4(ea, eb) / (na * na), 1.0)
        } else {
            (1.0, -dot4(ea, eb) / (nb * nb))
        };
        let (a, b) = (other.a.to_array(), other.b.to_array());
        let v = [
            lambda * a[0] + mu * b[0],
            lambda * a[1] + mu * b[1],
            lambda * a[2] + mu * b[2],
            lambda * a[3] + mu * b[3],
        ];
        CircleIntersection::Antipodal(UnitQuaternion::normalized(v))
    }

    fn residual(&self, p: UnitQuaternion) -> [f64; 4] {
        let (ca, cb) = (p.dot(&self.a), p.dot(&self.b));
        let (p, a, b) = (p.to_array(), self.a.to_array(), self.b.to_array());
        [
            p[0] - ca * a[0] - cb * b[0],
            p[1] - ca * a[1] - cb * b[1],
            p[2] - ca * a[2] - cb * b[2],
            p[3] - ca * a[3] - cb * b[3],
        ]
    }

    /// The image circle under `x ↦ l · x · r⁻¹`.
    pub fn map(&self, l: UnitQuaternion, r: UnitQuaternion) -> Self {
        let ri = r.inverse();
        let a = l * self.a * ri;
        let b = l * self.b * ri;
        let b = orthogonalize(b, a).expect("isometries preserve orthogonality");
        Self { a, b }
    }
}

fn dot4(a: [f64; 4], b: [f64; 4]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

/// Component of `v` orthogonal to `a`, normalized.
fn orthogonalize(v: UnitQuaternion, a: UnitQuaternion) -> Option<UnitQuaternion> {
    let ip = v.dot(&a);
    let (v, a) = (v.to_array(), a.to_array());
    let r = [
        v[0] - ip * a[0],
        v[1] - ip * a[1],
        v[2] - ip * a[2],
        v[3] - ip * a[3],
    ];
    (norm4(r) > 1e-9).then(|| UnitQuaternion::normalized(r))
}

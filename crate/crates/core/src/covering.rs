//! The projective covering group of E(2): the universal cover of the
//! oscillator group, `H(2) ⋊ ℝ_φ`, in the global parametrisation `(s, a, φ)`.
//!
//! The product law is the source of truth:
//!
//! `(s, a, φ)(s', a', φ') = (s + s' + ½ a × R_φ a', a + R_φ a', φ + φ')`
//!
//! with `a × b = a_x b_y − a_y b_x`. The angle is never reduced; reduction
//! mod 2π happens only when projecting to E(2).

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Rotation of a plane vector by `phi`.
pub fn rotate(phi: f64, a: [f64; 2]) -> [f64; 2] {
    let (s, c) = phi.sin_cos();
    [c * a[0] - s * a[1], s * a[0] + c * a[1]]
}

/// `a × b = a_x b_y − a_y b_x`.
pub fn cross(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Reduces an angle into `[0, 2π)`.
pub fn reduce_angle(theta: f64) -> f64 {
    let r = theta - TAU * (theta / TAU).floor();
    if r >= TAU || r < 0.0 {
        0.0
    } else {
        r
    }
}

/// Distance between two angles on the circle.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    let d = reduce_angle(a - b);
    d.min(TAU - d)
}

/// Element of the covering group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscElement {
    pub s: f64,
    pub a: [f64; 2],
    pub phi: f64,
}

impl OscElement {
    pub const IDENTITY: OscElement = OscElement { s: 0.0, a: [0.0, 0.0], phi: 0.0 };

    pub fn new(s: f64, a: [f64; 2], phi: f64) -> Self {
        OscElement { s, a, phi }
    }

    /// Central element `(s, 0, 0)`.
    pub fn central(s: f64) -> Self {
        Self::new(s, [0.0, 0.0], 0.0)
    }

    pub fn translation(a: [f64; 2]) -> Self {
        Self::new(0.0, a, 0.0)
    }

    pub fn rotation(phi: f64) -> Self {
        Self::new(0.0, [0.0, 0.0], phi)
    }

    pub fn is_heisenberg(&self) -> bool {
        self.phi == 0.0
    }

    /// Componentwise max-distance, with no angle reduction.
    pub fn distance(&self, other: &OscElement) -> f64 {
        [self.s - other.s, self.a[0] - other.a[0], self.a[1] - other.a[1], self.phi - other.phi]
            .iter()
            .fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    /// Unique factorisation `g = h·r` with `h ∈ H(2)` and `r ∈ ℝ_φ`.
    pub fn factor(&self) -> (OscElement, OscElement) {
        (Self::new(self.s, self.a, 0.0), Self::rotation(self.phi))
    }
}

pub fn osc_mul(g: &OscElement, h: &OscElement) -> OscElement {
    let ra = rotate(g.phi, h.a);
    OscElement {
        s: g.s + h.s + 0.5 * cross(g.a, ra),
        a: [g.a[0] + ra[0], g.a[1] + ra[1]],
        phi: g.phi + h.phi,
    }
}

/// `(s, a, φ)⁻¹ = (−s, −R_{−φ} a, −φ)`.
pub fn osc_inv(g: &OscElement) -> OscElement {
    let b = rotate(-g.phi, g.a);
    OscElement { s: -g.s, a: [-b[0], -b[1]], phi: -g.phi }
}

/// `g h g⁻¹` for `h` in the Heisenberg subgroup; the result stays there.
pub fn conjugate_heisenberg(g: &OscElement, h: &OscElement) -> Result<OscElement> {
    if !h.is_heisenberg() {
        return Err(Error::NotInSubgroup(format!("φ = {} ≠ 0, element is not in H(2)", h.phi)));
    }
    Ok(osc_mul(&osc_mul(g, h), &osc_inv(g)))
}

/// Element `(a, R_θ)` of E(2), θ ∈ [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct E2Element {
    pub a: [f64; 2],
    pub theta: f64,
}

impl E2Element {
    pub fn new(a: [f64; 2], theta: f64) -> Self {
        E2Element { a, theta: reduce_angle(theta) }
    }

    pub fn mul(&self, other: &E2Element) -> E2Element {
        let ra = rotate(self.theta, other.a);
        E2Element::new([self.a[0] + ra[0], self.a[1] + ra[1]], self.theta + other.theta)
    }

    /// Max of translation error and circular angle error.
    pub fn distance(&self, other: &E2Element) -> f64 {
        (self.a[0] - other.a[0])
            .abs()
            .max((self.a[1] - other.a[1]).abs())
            .max(angle_distance(self.theta, other.theta))
    }
}

/// Canonical projection `p(s, a, φ) = (a, R_φ)`.
pub fn project(g: &OscElement) -> E2Element {
    E2Element::new(g.a, g.phi)
}

/// Group element along the coordinate line of basis vector `idx` in the
/// order `(J, P1, P2, E)`.
fn coordinate_curve(idx: usize, t: f64) -> OscElement {
    match idx {
        0 => OscElement::rotation(t),
        1 => OscElement::translation([t, 0.0]),
        2 => OscElement::translation([0.0, t]),
        _ => OscElement::central(t),
    }
}

fn coordinates(g: &OscElement) -> [f64; 4] {
    [g.phi, g.a[0], g.a[1], g.s]
}

/// Structure constants `c[i][j][k]` of the group's Lie algebra on the basis
/// `(J, P1, P2, E)`, by central differences of conjugation at the identity.
pub fn numerical_structure_constants(step: f64) -> [[[f64; 4]; 4]; 4] {
    let conj = |g: &OscElement, h: &OscElement| osc_mul(&osc_mul(g, h), &osc_inv(g));
    let adjoint = |g: &OscElement, j: usize| -> [f64; 4] {
        let plus = coordinates(&conj(g, &coordinate_curve(j, step)));
        let minus = coordinates(&conj(g, &coordinate_curve(j, -step)));
        std::array::from_fn(|k| (plus[k] - minus[k]) / (2.0 * step))
    };
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let plus = adjoint(&coordinate_curve(i, step), j);
            let minus = adjoint(&coordinate_curve(i, -step), j);
            std::array::from_fn(|k| (plus[k] - minus[k]) / (2.0 * step))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn identity_is_two_sided() {
        let g = OscElement::new(1.5, [0.3, -2.0], 7.0);
        assert_eq!(osc_mul(&g, &OscElement::IDENTITY), g);
        assert_eq!(osc_mul(&OscElement::IDENTITY, &g), g);
    }

    #[test]
    fn translations_pick_up_half_cross_product() {
        let g = osc_mul(&OscElement::translation([1.0, 0.0]), &OscElement::translation([0.0, 1.0]));
        assert_eq!(g, OscElement::new(0.5, [1.0, 1.0], 0.0));
    }

    #[test]
    fn inverses() {
        assert_eq!(osc_inv(&OscElement::IDENTITY).distance(&OscElement::IDENTITY), 0.0);
        let g = OscElement::new(0.7, [1.0, -3.0], 2.2);
        assert!(osc_mul(&g, &osc_inv(&g)).distance(&OscElement::IDENTITY) < 1e-12);
        assert!(osc_mul(&osc_inv(&g), &g).distance(&OscElement::IDENTITY) < 1e-12);
        assert_eq!(osc_inv(&OscElement::rotation(1.3)), OscElement::new(-0.0, [-0.0, -0.0], -1.3));
    }

    #[test]
    fn projection_examples() {
        let e = project(&OscElement::new(5.0, [1.0, 2.0], TAU));
        assert_eq!(e.a, [1.0, 2.0]);
        assert_eq!(e.theta, 0.0);
        for s in [-3.0, 0.0, 11.5] {
            assert_eq!(project(&OscElement::central(s)), E2Element::new([0.0, 0.0], 0.0));
        }
    }

    #[test]
    fn kernel_is_two_pi_k_not_pi_k() {
        let id = E2Element::new([0.0, 0.0], 0.0);
        for k in -4..=4 {
            let g = OscElement::new(2.0, [0.0, 0.0], TAU * k as f64);
            assert!(project(&g).distance(&id) < 1e-12);
        }
        let half = project(&OscElement::new(0.0, [0.0, 0.0], PI));
        assert!(half.distance(&id) > 3.0);
    }

    #[test]
    fn angle_reduction_edges() {
        assert_eq!(reduce_angle(TAU), 0.0);
        assert_eq!(reduce_angle(-TAU), 0.0);
        assert!((reduce_angle(-0.5) - (TAU - 0.5)).abs() < 1e-15);
        assert!(reduce_angle(-1e-300) < TAU);
        assert!(angle_distance(0.0, TAU - 1e-13) < 1e-12);
    }

    #[test]
    fn heisenberg_conjugation() {
        let g = OscElement::rotation(FRAC_PI_2);
        let h = OscElement::translation([1.0, 0.0]);
        let c = conjugate_heisenberg(&g, &h).unwrap();
        assert_eq!(c.phi, 0.0);
        assert!(c.distance(&OscElement::translation([0.0, 1.0])) < 1e-15);

        // φ = 0: translation conjugation only shifts the central part
        let g = OscElement::new(0.3, [1.0, 2.0], 0.0);
        let h = OscElement::new(1.0, [-1.0, 0.5], 0.0);
        let c = conjugate_heisenberg(&g, &h).unwrap();
        assert_eq!(c.phi, 0.0);
        assert!((c.a[0] - h.a[0]).abs() < 1e-15 && (c.a[1] - h.a[1]).abs() < 1e-15);
        assert!((c.s - (h.s + cross(g.a, h.a))).abs() < 1e-14);

        assert!(matches!(conjugate_heisenberg(&g, &OscElement::rotation(0.1)), Err(Error::NotInSubgroup(_))));
    }

    #[test]
    fn numerical_brackets_match_oscillator_algebra() {
        let c = numerical_structure_constants(1e-4);
        // [J,P1] = P2, [J,P2] = −P1, [P1,P2] = E
        assert!((c[0][1][2] - 1.0).abs() < 1e-6);
        assert!((c[0][2][1] + 1.0).abs() < 1e-6);
        assert!((c[1][2][3] - 1.0).abs() < 1e-6);
        assert!(c[3].iter().flatten().all(|x| x.abs() < 1e-6));
    }

    #[test]
    fn factorisation_reproduces_element() {
        let g = OscElement::new(-1.0, [2.0, 0.5], 4.0);
        let (h, r) = g.factor();
        assert!(h.is_heisenberg());
        assert_eq!(osc_mul(&h, &r), g);
    }
}

//! Lorentzian metrics and orthonormal tetrads on the built-in charts.
//!
//! Two charts are supported: global inertial coordinates `(t, x, y, z)` on
//! Minkowski space and Kruskal coordinates `(U, V, θ, φ)` on the maximally
//! extended Schwarzschild solution. Geometric units (G = c = 1) are used
//! throughout and the signature is `(+, −, −, −)`.
//!
//! Covectors are always stored in tetrad components, so `p²` never needs the
//! chart metric.

use nalgebra::{Matrix4, Vector4};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Minkowski metric `η = diag(1, −1, −1, −1)` in frame components.
pub fn minkowski_eta() -> Matrix4<f64> {
    Matrix4::from_diagonal(&Vector4::new(1.0, -1.0, -1.0, -1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MetricSpec {
    Minkowski,
    SchwarzschildKruskal { mass: f64 },
}

impl MetricSpec {
    pub fn schwarzschild(mass: f64) -> Result<Self> {
        let spec = MetricSpec::SchwarzschildKruskal { mass };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            MetricSpec::Minkowski => Ok(()),
            MetricSpec::SchwarzschildKruskal { mass } => {
                if mass.is_finite() && mass > 0.0 {
                    Ok(())
                } else {
                    Err(Error::BadParams(format!("mass parameter must be positive, got {mass}")))
                }
            }
        }
    }

    /// Checks the chart invariants of `x` for this metric.
    pub fn check_point(&self, x: &ChartPoint) -> Result<()> {
        self.validate()?;
        if x.0.iter().any(|c| !c.is_finite()) {
            return Err(Error::ChartDomain("non-finite coordinate".into()));
        }
        match self {
            MetricSpec::Minkowski => Ok(()),
            MetricSpec::SchwarzschildKruskal { .. } => {
                let [u, v, theta, _] = x.0;
                if !(u * v < 1.0) {
                    return Err(Error::ChartDomain(format!("U·V = {} must be < 1", u * v)));
                }
                if !(theta > 0.0 && theta < std::f64::consts::PI) {
                    return Err(Error::ChartDomain(format!("θ = {theta} must lie in (0, π)")));
                }
                Ok(())
            }
        }
    }
}

/// Chart coordinates: `(t, x, y, z)` for Minkowski, `(U, V, θ, φ)` for Kruskal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChartPoint(pub [f64; 4]);

/// Covector components `p_I` in the dual tetrad basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TetradCovector(pub [f64; 4]);

impl TetradCovector {
    pub fn new(p0: f64, p1: f64, p2: f64, p3: f64) -> Self {
        TetradCovector([p0, p1, p2, p3])
    }

    pub fn as_vector(&self) -> Vector4<f64> {
        Vector4::from(self.0)
    }

    pub fn from_vector(v: &Vector4<f64>) -> Self {
        TetradCovector([v[0], v[1], v[2], v[3]])
    }

    /// Euclidean norm squared of the components, used as the scale for
    /// tolerance decisions.
    pub fn euclidean_norm_squared(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum()
    }
}

/// Columns are the frame vectors `e_I` expressed in chart coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TetradFrame(pub Matrix4<f64>);

impl TetradFrame {
    /// `max |eᵀ g e − η|` at the point the frame was built for.
    pub fn congruence_residual(&self, metric: &Matrix4<f64>) -> f64 {
        let e = &self.0;
        (e.transpose() * metric * e - minkowski_eta()).amax()
    }

    /// The dual coframe: row `I` holds the components of the one-form `e^I`.
    pub fn coframe(&self) -> Matrix4<f64> {
        self.0
            .try_inverse()
            .expect("tetrad frames are invertible on the admissible chart domain")
    }
}

/// A point of spacetime together with the metric it lives on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpacetimePoint {
    pub metric: MetricSpec,
    pub coords: ChartPoint,
}

impl SpacetimePoint {
    pub fn new(metric: MetricSpec, coords: [f64; 4]) -> Result<Self> {
        let coords = ChartPoint(coords);
        metric.check_point(&coords)?;
        Ok(SpacetimePoint { metric, coords })
    }

    pub fn tetrad(&self) -> Result<TetradFrame> {
        tetrad_at(&self.metric, &self.coords)
    }
}

/// A point of the cotangent bundle: a spacetime point and a covector in
/// tetrad components. These are the objects of the Wigner groupoid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CotangentPoint {
    pub base: SpacetimePoint,
    pub p: TetradCovector,
}

impl CotangentPoint {
    pub fn new(base: SpacetimePoint, p: TetradCovector) -> Self {
        CotangentPoint { base, p }
    }
}

/// Metric components `g_{μν}(x)` in chart coordinates.
pub fn metric_at(spec: &MetricSpec, x: &ChartPoint) -> Result<Matrix4<f64>> {
    spec.check_point(x)?;
    match *spec {
        MetricSpec::Minkowski => Ok(minkowski_eta()),
        MetricSpec::SchwarzschildKruskal { mass } => {
            let [u, v, theta, _] = x.0;
            let r = kruskal_radius(mass, u, v)?;
            let g_uv = -32.0 * mass.powi(3) / r * (-r / (2.0 * mass)).exp();
            let sin = theta.sin();
            let mut g = Matrix4::zeros();
            g[(0, 1)] = g_uv;
            g[(1, 0)] = g_uv;
            g[(2, 2)] = -r * r;
            g[(3, 3)] = -r * r * sin * sin;
            Ok(g)
        }
    }
}

/// Defining function of the Kruskal radius in the scaled variable
/// `ξ = r / 2M`: `(1 − ξ)·e^ξ − UV`.
fn kruskal_defect(xi: f64, uv: f64) -> f64 {
    (1.0 - xi) * xi.exp() - uv
}

/// Relative residual of the implicit equation `UV = (1 − r/2M)e^{r/2M}`.
pub fn kruskal_residual(mass: f64, u: f64, v: f64, r: f64) -> f64 {
    let uv = u * v;
    kruskal_defect(r / (2.0 * mass), uv).abs() / uv.abs().max(1.0)
}

/// Areal radius `r(U, V)` in the Kruskal chart.
///
/// The defining function `(1 − ξ)e^ξ − UV` is strictly decreasing for
/// `ξ > 0`, so a safeguarded Newton iteration on a growing bracket always
/// converges on the admissible domain `UV < 1`.
pub fn kruskal_radius(mass: f64, u: f64, v: f64) -> Result<f64> {
    if !(mass.is_finite() && mass > 0.0) {
        return Err(Error::BadParams(format!("mass parameter must be positive, got {mass}")));
    }
    let uv = u * v;
    if !(uv < 1.0) {
        return Err(Error::ChartDomain(format!("U·V = {uv} must be < 1")));
    }
    if uv == 0.0 {
        return Ok(2.0 * mass);
    }

    // f(lo) > 0 > f(hi)
    let mut lo = 0.0_f64;
    let mut hi = 1.0_f64;
    while kruskal_defect(hi, uv) > 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > 1e4 {
            return Err(Error::Convergence(format!("no bracket found for U·V = {uv}")));
        }
    }

    let mut xi = if uv > 0.0 {
        (2.0 * (1.0 - uv)).sqrt().clamp(lo, hi)
    } else {
        0.5 * (lo + hi)
    };
    let tol = 1e-15 * uv.abs().max(1.0);
    for _ in 0..200 {
        let f = kruskal_defect(xi, uv);
        if f.abs() <= tol {
            return Ok(2.0 * mass * xi);
        }
        if f > 0.0 {
            lo = xi;
        } else {
            hi = xi;
        }
        let df = -xi * xi.exp();
        let newton = xi - f / df;
        xi = if df != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if hi - lo <= 4.0 * f64::EPSILON * hi {
            return Ok(2.0 * mass * xi);
        }
    }
    Err(Error::Convergence(format!("Newton iteration stalled for U·V = {uv}")))
}

/// Orthonormal tetrad at `x`.
///
/// For Kruskal charts `e_0 ∝ ∂_V − ∂_U` is the future-pointing timelike leg
/// and `e_1 ∝ ∂_V + ∂_U` the radial one; `e_2 = (1/r)∂_θ`,
/// `e_3 = (1/(r sin θ))∂_φ`.
pub fn tetrad_at(spec: &MetricSpec, x: &ChartPoint) -> Result<TetradFrame> {
    spec.check_point(x)?;
    match *spec {
        MetricSpec::Minkowski => Ok(TetradFrame(Matrix4::identity())),
        MetricSpec::SchwarzschildKruskal { mass } => {
            let [u, v, theta, _] = x.0;
            let r = kruskal_radius(mass, u, v)?;
            let a = (r / (32.0 * mass.powi(3))).sqrt() * (r / (4.0 * mass)).exp()
                / std::f64::consts::SQRT_2;
            let mut e = Matrix4::zeros();
            e[(0, 0)] = -a;
            e[(1, 0)] = a;
            e[(0, 1)] = a;
            e[(1, 1)] = a;
            e[(2, 2)] = 1.0 / r;
            e[(3, 3)] = 1.0 / (r * theta.sin());
            Ok(TetradFrame(e))
        }
    }
}

/// Gram–Schmidt on the coordinate frame, timelike vector first, for a metric
/// of signature `(1, 3)` whose first coordinate vector is timelike.
pub fn gram_schmidt_tetrad(metric: &Matrix4<f64>) -> Result<TetradFrame> {
    let eta = minkowski_eta();
    let dot = |a: &Vector4<f64>, b: &Vector4<f64>| (a.transpose() * metric * b)[0];
    let mut frame = Matrix4::zeros();
    for i in 0..4 {
        let mut v = Vector4::zeros();
        v[i] = 1.0;
        for j in 0..i {
            let ej: Vector4<f64> = frame.column(j).into();
            v -= ej * (dot(&v, &ej) * eta[(j, j)]);
        }
        let n = dot(&v, &v);
        if n * eta[(i, i)] <= 0.0 {
            return Err(Error::ChartDomain(format!(
                "coordinate vector {i} has the wrong causal character for Gram–Schmidt"
            )));
        }
        frame.set_column(i, &(v / n.abs().sqrt()));
    }
    Ok(TetradFrame(frame))
}

/// `p² = η⁻¹(p, p) = p₀² − p₁² − p₂² − p₃²` in tetrad components.
pub fn p_squared(p: &TetradCovector) -> f64 {
    let [p0, p1, p2, p3] = p.0;
    p0 * p0 - p1 * p1 - p2 * p2 - p3 * p3
}

/// Chart components `p_μ = p_I e^I_μ` of a tetrad covector.
pub fn covector_to_chart(frame: &TetradFrame, p: &TetradCovector) -> Vector4<f64> {
    frame.coframe().transpose() * p.as_vector()
}

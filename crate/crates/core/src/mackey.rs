//! Mackey-machine bookkeeping: orbits of ℝ_φ on the unitary dual of H(2),
//! their stabilizers, the resulting representation labels of the covering
//! group, and the particle table joining them with the Wigner-groupoid orbits.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::covering::rotate;
use crate::groupoid::{classify_orbit, isotropy_type, IsotropyGroup, OrbitClass, EPS_ORBIT};
use crate::spacetime::{p_squared, CotangentPoint, MetricSpec};
use crate::{Error, Result};

/// A spin `s ∈ ½ℕ₀`, stored as `2s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spin(u32);

impl Spin {
    pub fn from_twice(twice: u32) -> Self {
        Spin(twice)
    }

    pub fn from_f64(s: f64) -> Result<Self> {
        let twice = 2.0 * s;
        if !(s >= 0.0) || twice.fract() != 0.0 || twice > u32::MAX as f64 {
            return Err(Error::BadParams(format!("spin {s} is not a non-negative half-integer")));
        }
        Ok(Spin(twice as u32))
    }

    pub fn twice(&self) -> u32 {
        self.0
    }

    pub fn value(&self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn multiplicity(&self) -> usize {
        self.0 as usize + 1
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for Spin {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Spin {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_spin(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses `"1"`, `"3/2"` or `"0.5"`.
pub fn parse_spin(s: &str) -> Result<Spin> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: u32 = num.trim().parse().map_err(|_| Error::Parse(format!("bad spin `{s}`")))?;
        return match den.trim() {
            "2" => Ok(Spin(num)),
            "1" => Ok(Spin(2 * num)),
            _ => Err(Error::BadParams(format!("spin {s} is not a half-integer"))),
        };
    }
    let v: f64 = s.parse().map_err(|_| Error::Parse(format!("bad spin `{s}`")))?;
    Spin::from_f64(v)
}

/// Points of the unitary dual of H(2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DualPointH2 {
    /// One-dimensional character `χ_p(s, a) = e^{i p·a}` (central character 0).
    Character { p: [f64; 2] },
    /// Stone–von Neumann representation with central character `μ ≠ 0`.
    StoneVonNeumann { mu: f64 },
}

impl DualPointH2 {
    pub fn stone_von_neumann(mu: f64) -> Result<Self> {
        if mu == 0.0 || !mu.is_finite() {
            return Err(Error::BadParams("Stone–von Neumann points need μ ≠ 0".into()));
        }
        Ok(DualPointH2::StoneVonNeumann { mu })
    }
}

/// Stabilizer of a dual point inside ℝ_φ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stabilizer {
    FullLine,
    TwoPiZ,
}

/// ℝ_φ-orbits in the dual of H(2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DualOrbit {
    Origin,
    Circle { rho: f64 },
    FixedMagnetic { mu: f64 },
}

impl DualOrbit {
    pub fn stabilizer(&self) -> Stabilizer {
        match self {
            DualOrbit::Circle { .. } => Stabilizer::TwoPiZ,
            DualOrbit::Origin | DualOrbit::FixedMagnetic { .. } => Stabilizer::FullLine,
        }
    }
}

/// `φ·χ_p = χ_{R_φ p}`.
pub fn rotate_character(phi: f64, p: [f64; 2]) -> [f64; 2] {
    rotate(phi, p)
}

pub fn dual_orbit(pt: &DualPointH2) -> DualOrbit {
    match *pt {
        DualPointH2::Character { p } => {
            let rho = p[0].hypot(p[1]);
            if rho == 0.0 {
                DualOrbit::Origin
            } else {
                DualOrbit::Circle { rho }
            }
        }
        DualPointH2::StoneVonNeumann { mu } => DualOrbit::FixedMagnetic { mu },
    }
}

/// Representation labels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "label", rename_all = "snake_case")]
pub enum RepLabel {
    Massive { m: f64, s: Spin },
    MasslessHelicity { lambda: i64 },
    /// `phi0` is the stabilizer character parameter, stored in `[0, 1)`.
    ContinuousSpin { rho: f64, phi0: f64 },
    /// `[P1, P2] = iμ`, `σ(J) = n + ½ + c0`.
    Magnetic { mu: f64, c0: f64 },
    Vacuum,
    Tachyonic { m: f64 },
}

impl RepLabel {
    /// `n`-th eigenvalue of the rotation generator in a magnetic representation.
    pub fn magnetic_j_eigenvalue(&self, n: u32) -> Option<f64> {
        match self {
            RepLabel::Magnetic { c0, .. } => Some(n as f64 + 0.5 + c0),
            _ => None,
        }
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Massive { m, s } => write!(f, "Massive(m={m}, s={s})"),
            RepLabel::MasslessHelicity { lambda } => write!(f, "Helicity({lambda})"),
            RepLabel::ContinuousSpin { rho, phi0 } => write!(f, "ContinuousSpin(rho={rho}, phi0={phi0})"),
            RepLabel::Magnetic { mu, c0 } => write!(f, "Magnetic(mu={mu}, c0={c0})"),
            RepLabel::Vacuum => f.write_str("Vacuum"),
            RepLabel::Tachyonic { m } => write!(f, "Tachyonic(m={m})"),
        }
    }
}

fn mod_one(x: f64) -> f64 {
    let r = x - x.floor();
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// Irreducible projective representations of E(2) from an orbit and the
/// character parameter of its stabilizer: the helicity λ on the origin, the
/// stabilizer character ϕ₀ on circles, the shift c₀ on magnetic points.
pub fn classify_e2bar(orbit: &DualOrbit, character_param: f64) -> Result<RepLabel> {
    if !character_param.is_finite() {
        return Err(Error::BadParams("character parameter must be finite".into()));
    }
    match *orbit {
        DualOrbit::Origin => {
            if character_param.fract() != 0.0 {
                return Err(Error::NonIntegralHelicity(character_param));
            }
            Ok(RepLabel::MasslessHelicity { lambda: character_param as i64 })
        }
        DualOrbit::Circle { rho } => {
            if !(rho > 0.0) {
                return Err(Error::BadParams(format!("circle radius must be positive, got {rho}")));
            }
            Ok(RepLabel::ContinuousSpin { rho, phi0: mod_one(character_param) })
        }
        DualOrbit::FixedMagnetic { mu } => {
            if mu == 0.0 {
                return Err(Error::BadParams("magnetic orbits need μ ≠ 0".into()));
            }
            Ok(RepLabel::Magnetic { mu, c0: character_param })
        }
    }
}

/// Massless labels in the standard group approach: unitary representations
/// of the double cover of E(2). Central characters are absent there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "label", rename_all = "snake_case")]
pub enum GroupMasslessLabel {
    /// Helicity `twice_lambda / 2`.
    Helicity { twice_lambda: i64 },
    ContinuousSpin { rho: f64, phi0: f64 },
}

pub fn classify_double_cover_e2(orbit: &DualOrbit, character_param: f64) -> Result<GroupMasslessLabel> {
    match *orbit {
        DualOrbit::Origin => {
            let twice = 2.0 * character_param;
            if twice.fract() != 0.0 {
                return Err(Error::BadParams(format!("helicity {character_param} is not a half-integer")));
            }
            Ok(GroupMasslessLabel::Helicity { twice_lambda: twice as i64 })
        }
        DualOrbit::Circle { rho } => Ok(GroupMasslessLabel::ContinuousSpin { rho, phi0: mod_one(character_param) }),
        DualOrbit::FixedMagnetic { .. } => Err(Error::BadParams(
            "unitary representations of the double cover have vanishing central character".into(),
        )),
    }
}

/// Little groups of the Poincaré-group orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LittleGroup {
    SU2,
    DoubleCoverE2,
    SO12like,
    SL2C,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum PoincareOrbit {
    MassShell { m: f64, future: bool },
    LightCone { future: bool },
    Spacelike,
    Origin,
}

impl PoincareOrbit {
    pub fn little_group(&self) -> LittleGroup {
        match self {
            PoincareOrbit::MassShell { .. } => LittleGroup::SU2,
            PoincareOrbit::LightCone { .. } => LittleGroup::DoubleCoverE2,
            PoincareOrbit::Spacelike => LittleGroup::SO12like,
            PoincareOrbit::Origin => LittleGroup::SL2C,
        }
    }
}

/// Orbit of the double cover of the Poincaré group on momentum space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoincareOrbitLabel {
    pub orbit: PoincareOrbit,
    pub little_group: LittleGroup,
}

pub fn classify_poincare(p: [f64; 4]) -> PoincareOrbitLabel {
    let eta = [1.0, -1.0, -1.0, -1.0];
    let minkowski: f64 = p.iter().zip(eta).map(|(x, s)| s * x * x).sum();
    let euclid: f64 = p.iter().map(|x| x * x).sum();
    let orbit = if euclid == 0.0 {
        PoincareOrbit::Origin
    } else if minkowski.abs() <= EPS_ORBIT * euclid {
        PoincareOrbit::LightCone { future: p[0] > 0.0 }
    } else if minkowski > 0.0 {
        PoincareOrbit::MassShell { m: minkowski.sqrt(), future: p[0] > 0.0 }
    } else {
        PoincareOrbit::Spacelike
    };
    PoincareOrbitLabel { orbit, little_group: orbit.little_group() }
}

/// Which classification a sector belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Shared,
    GroupOnly,
    GroupoidOnly,
    Unsupported,
}

/// Representation parameters fed to every row of the particle table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepParams {
    /// Spins offered to massive rows.
    pub spins: Vec<Spin>,
    /// Dual points of H(2) with their stabilizer character parameter,
    /// offered to massless rows.
    pub massless: Vec<(DualPointH2, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelEntry {
    pub label: RepLabel,
    pub provenance: Provenance,
}

/// A parameter that the groupoid classification refuses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RejectedEntry {
    pub dual_point: DualPointH2,
    pub character_param: f64,
    pub code: String,
    pub message: String,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParticleRow {
    pub orbit: OrbitClass,
    pub p_squared: f64,
    pub isotropy: IsotropyGroup,
    pub labels: Vec<LabelEntry>,
    pub rejected: Vec<RejectedEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParticleTable {
    pub rows: Vec<ParticleRow>,
}

fn massless_entries(params: &RepParams) -> Result<(Vec<LabelEntry>, Vec<RejectedEntry>)> {
    let mut labels = Vec::new();
    let mut rejected = Vec::new();
    for &(pt, param) in &params.massless {
        let orbit = dual_orbit(&pt);
        match classify_e2bar(&orbit, param) {
            Ok(label) => {
                let provenance = match label {
                    RepLabel::Magnetic { .. } => Provenance::GroupoidOnly,
                    _ => Provenance::Shared,
                };
                labels.push(LabelEntry { label, provenance });
            }
            Err(e @ Error::NonIntegralHelicity(_)) => rejected.push(RejectedEntry {
                dual_point: pt,
                character_param: param,
                code: e.code().to_string(),
                message: e.to_string(),
                provenance: Provenance::GroupOnly,
            }),
            Err(e) => return Err(e),
        }
    }
    Ok((labels, rejected))
}

/// Joins orbit → isotropy → representation labels for every sample.
///
/// The rows depend only on the tetrad covectors; the chart point and metric
/// are validated but do not enter the classification.
pub fn particle_table(spec: &MetricSpec, samples: &[CotangentPoint], params: &RepParams) -> Result<ParticleTable> {
    spec.validate()?;
    let rows = samples
        .iter()
        .map(|xi| {
            if xi.base.metric != *spec {
                return Err(Error::MetricMismatch);
            }
            spec.check_point(&xi.base.coords)?;
            let orbit = classify_orbit(&xi.p);
            let isotropy = isotropy_type(&orbit);
            let (labels, rejected) = match orbit {
                OrbitClass::MassivePlus { m } | OrbitClass::MassiveMinus { m } => (
                    params
                        .spins
                        .iter()
                        .map(|&s| LabelEntry { label: RepLabel::Massive { m, s }, provenance: Provenance::Shared })
                        .collect(),
                    Vec::new(),
                ),
                OrbitClass::MasslessPlus | OrbitClass::MasslessMinus => massless_entries(params)?,
                OrbitClass::Zero => (vec![LabelEntry { label: RepLabel::Vacuum, provenance: Provenance::Shared }], Vec::new()),
                OrbitClass::Tachyonic { m } => (
                    vec![LabelEntry { label: RepLabel::Tachyonic { m }, provenance: Provenance::Unsupported }],
                    Vec::new(),
                ),
            };
            Ok(ParticleRow { orbit, p_squared: p_squared(&xi.p), isotropy, labels, rejected })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ParticleTable { rows })
}

impl ParticleTable {
    /// Aligned plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut lines = vec![["orbit".to_string(), "p^2".into(), "isotropy".into(), "representations".into(), "provenance".into()]];
        for row in &self.rows {
            let mut reps: Vec<String> = row.labels.iter().map(|l| l.label.to_string()).collect();
            reps.extend(row.rejected.iter().map(|r| format!("rejected(lambda={}: {})", r.character_param, r.code)));
            let mut prov: Vec<&str> = row.labels.iter().map(|l| provenance_str(l.provenance)).collect();
            prov.extend(row.rejected.iter().map(|r| provenance_str(r.provenance)));
            prov.dedup();
            lines.push([row.orbit.to_string(), format!("{}", row.p_squared), row.isotropy.to_string(), reps.join(", "), prov.join(",")]);
        }
        render_columns(&lines)
    }
}

fn provenance_str(p: Provenance) -> &'static str {
    match p {
        Provenance::Shared => "shared",
        Provenance::GroupOnly => "group-only",
        Provenance::GroupoidOnly => "groupoid-only",
        Provenance::Unsupported => "unsupported",
    }
}

fn render_columns<const N: usize>(lines: &[[String; N]]) -> String {
    let widths: Vec<usize> = (0..N).map(|c| lines.iter().map(|l| l[c].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for l in lines {
        let cells: Vec<String> = l.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// One row of the group-vs-groupoid comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub sector: String,
    pub parameters: String,
    pub group: Option<String>,
    pub groupoid: Option<String>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
}

/// Runs both classifications on a fixed set of sample parameters and
/// records which side admits each one.
pub fn compare_with_group_classification() -> ComparisonReport {
    let mut rows = Vec::new();
    for twice in [1, 2] {
        let s = Spin::from_twice(twice);
        let label = RepLabel::Massive { m: 1.0, s };
        rows.push(ComparisonRow {
            sector: "massive".into(),
            parameters: format!("m=1, s={s}"),
            group: Some(label.to_string()),
            groupoid: Some(label.to_string()),
            provenance: Provenance::Shared,
        });
    }
    let massless: [(&str, DualPointH2, f64, String); 8] = [
        ("massless helicity", DualPointH2::Character { p: [0.0, 0.0] }, 0.0, "lambda=0".into()),
        ("massless helicity", DualPointH2::Character { p: [0.0, 0.0] }, 1.0, "lambda=1".into()),
        ("massless helicity", DualPointH2::Character { p: [0.0, 0.0] }, 0.5, "lambda=1/2".into()),
        ("massless helicity", DualPointH2::Character { p: [0.0, 0.0] }, -1.5, "lambda=-3/2".into()),
        ("continuous spin", DualPointH2::Character { p: [1.0, 0.0] }, 0.0, "rho=1, phi0=0".into()),
        ("continuous spin", DualPointH2::Character { p: [0.0, 2.0] }, 0.3, "rho=2, phi0=0.3".into()),
        ("magnetic", DualPointH2::StoneVonNeumann { mu: 1.0 }, 0.0, "mu=1, c0=0".into()),
        ("magnetic", DualPointH2::StoneVonNeumann { mu: -2.0 }, 0.25, "mu=-2, c0=0.25".into()),
    ];
    for (sector, pt, param, parameters) in massless {
        let orbit = dual_orbit(&pt);
        let group = classify_double_cover_e2(&orbit, param).ok().map(|l| match l {
            GroupMasslessLabel::Helicity { twice_lambda } if twice_lambda % 2 == 0 => format!("Helicity({})", twice_lambda / 2),
            GroupMasslessLabel::Helicity { twice_lambda } => format!("Helicity({twice_lambda}/2)"),
            GroupMasslessLabel::ContinuousSpin { rho, phi0 } => format!("ContinuousSpin(rho={rho}, phi0={phi0})"),
        });
        let groupoid = classify_e2bar(&orbit, param).ok().map(|l| l.to_string());
        let provenance = match (&group, &groupoid) {
            (Some(_), Some(_)) => Provenance::Shared,
            (Some(_), None) => Provenance::GroupOnly,
            (None, Some(_)) => Provenance::GroupoidOnly,
            (None, None) => Provenance::Unsupported,
        };
        rows.push(ComparisonRow { sector: sector.into(), parameters, group, groupoid, provenance });
    }
    ComparisonReport { rows }
}

impl ComparisonReport {
    pub fn to_text(&self) -> String {
        let mut lines = vec![["sector".to_string(), "parameters".into(), "group".into(), "groupoid".into(), "provenance".into()]];
        for r in &self.rows {
            lines.push([
                r.sector.clone(),
                r.parameters.clone(),
                r.group.clone().unwrap_or_else(|| "-".into()),
                r.groupoid.clone().unwrap_or_else(|| "-".into()),
                provenance_str(r.provenance).into(),
            ]);
        }
        render_columns(&lines)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spacetime::{SpacetimePoint, TetradCovector};
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn character_rotation() {
        assert_eq!(rotate_character(0.0, [1.0, 2.0]), [1.0, 2.0]);
        let q = rotate_character(FRAC_PI_2, [1.0, 0.0]);
        assert!(q[0].abs() < 1e-16 && (q[1] - 1.0).abs() < 1e-16);
    }

    #[test]
    fn dual_orbits_and_stabilizers() {
        let o = dual_orbit(&DualPointH2::Character { p: [0.0, 0.0] });
        assert_eq!(o, DualOrbit::Origin);
        assert_eq!(o.stabilizer(), Stabilizer::FullLine);
        let o = dual_orbit(&DualPointH2::Character { p: [3.0, 4.0] });
        assert_eq!(o, DualOrbit::Circle { rho: 5.0 });
        assert_eq!(o.stabilizer(), Stabilizer::TwoPiZ);
        let o = dual_orbit(&DualPointH2::stone_von_neumann(-2.0).unwrap());
        assert_eq!(o, DualOrbit::FixedMagnetic { mu: -2.0 });
        assert_eq!(o.stabilizer(), Stabilizer::FullLine);
        assert!(DualPointH2::stone_von_neumann(0.0).is_err());
    }

    #[test]
    fn e2bar_labels() {
        assert_eq!(classify_e2bar(&DualOrbit::Origin, 2.0).unwrap(), RepLabel::MasslessHelicity { lambda: 2 });
        assert_eq!(classify_e2bar(&DualOrbit::Origin, 0.5), Err(Error::NonIntegralHelicity(0.5)));
        let m = classify_e2bar(&DualOrbit::FixedMagnetic { mu: 1.0 }, 0.0).unwrap();
        assert_eq!(m, RepLabel::Magnetic { mu: 1.0, c0: 0.0 });
        assert_eq!(m.magnetic_j_eigenvalue(0), Some(0.5));
        assert_eq!(m.magnetic_j_eigenvalue(3), Some(3.5));
        let c = classify_e2bar(&DualOrbit::Circle { rho: 2.0 }, 1.3).unwrap();
        match c {
            RepLabel::ContinuousSpin { rho, phi0 } => {
                assert_eq!(rho, 2.0);
                assert!((phi0 - 0.3).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
        let c = classify_e2bar(&DualOrbit::Circle { rho: 1.0 }, -0.25).unwrap();
        assert_eq!(c, RepLabel::ContinuousSpin { rho: 1.0, phi0: 0.75 });
    }

    #[test]
    fn poincare_orbits() {
        let l = classify_poincare([2.0, 0.0, 0.0, 0.0]);
        assert_eq!(l.orbit, PoincareOrbit::MassShell { m: 2.0, future: true });
        assert_eq!(l.little_group, LittleGroup::SU2);
        let l = classify_poincare([3.0, 0.0, 0.0, 3.0]);
        assert_eq!(l.orbit, PoincareOrbit::LightCone { future: true });
        assert_eq!(l.little_group, LittleGroup::DoubleCoverE2);
        assert_eq!(classify_poincare([0.0, 1.0, 0.0, 0.0]).orbit, PoincareOrbit::Spacelike);
        assert_eq!(classify_poincare([0.0; 4]).little_group, LittleGroup::SL2C);
    }

    #[test]
    fn spins() {
        assert_eq!(parse_spin("3/2").unwrap(), Spin::from_twice(3));
        assert_eq!(parse_spin("0.5").unwrap(), Spin::from_twice(1));
        assert_eq!(parse_spin("2").unwrap(), Spin::from_twice(4));
        assert!(parse_spin("1/3").is_err());
        assert!(parse_spin("-1").is_err());
        assert!(Spin::from_f64(0.25).is_err());
        assert_eq!(Spin::from_twice(3).to_string(), "3/2");
        assert_eq!(serde_json::to_string(&Spin::from_twice(1)).unwrap(), r#""1/2""#);
    }

    fn params() -> RepParams {
        RepParams {
            spins: vec![Spin::from_twice(0), Spin::from_twice(1), Spin::from_twice(2)],
            massless: vec![
                (DualPointH2::Character { p: [0.0, 0.0] }, 1.0),
                (DualPointH2::Character { p: [0.0, 0.0] }, 0.5),
                (DualPointH2::Character { p: [1.0, 0.0] }, 0.3),
                (DualPointH2::StoneVonNeumann { mu: 1.0 }, 0.0),
            ],
        }
    }

    #[test]
    fn particle_table_rows() {
        let spec = MetricSpec::Minkowski;
        let x = SpacetimePoint::new(spec, [0.0; 4]).unwrap();
        let samples = [
            CotangentPoint::new(x, TetradCovector::new(2.0, 0.0, 0.0, 0.0)),
            CotangentPoint::new(x, TetradCovector::new(1.0, 1.0, 0.0, 0.0)),
        ];
        let t = particle_table(&spec, &samples, &params()).unwrap();
        assert_eq!(t.rows[0].labels[2].label, RepLabel::Massive { m: 2.0, s: Spin::from_twice(2) });
        assert_eq!(t.rows[0].isotropy, IsotropyGroup::SO3);
        let massless = &t.rows[1];
        assert_eq!(massless.isotropy, IsotropyGroup::E2);
        assert_eq!(massless.labels.len(), 3);
        assert_eq!(massless.labels[2].label, RepLabel::Magnetic { mu: 1.0, c0: 0.0 });
        assert_eq!(massless.labels[2].provenance, Provenance::GroupoidOnly);
        assert_eq!(massless.rejected.len(), 1);
        assert_eq!(massless.rejected[0].code, "non_integral_helicity");
        assert!(t.to_text().contains("Magnetic(mu=1, c0=0)"));
    }

    #[test]
    fn particle_table_is_metric_independent() {
        let p = TetradCovector::new(3.0, 0.0, 1.0, 0.0);
        let mink = MetricSpec::Minkowski;
        let kr = MetricSpec::schwarzschild(1.0).unwrap();
        let a = particle_table(&mink, &[CotangentPoint::new(SpacetimePoint::new(mink, [1.0, 2.0, 3.0, 4.0]).unwrap(), p)], &params()).unwrap();
        let b = particle_table(&kr, &[CotangentPoint::new(SpacetimePoint::new(kr, [0.3, -0.2, 1.0, 0.0]).unwrap(), p)], &params()).unwrap();
        assert_eq!(a, b);
        let wrong = CotangentPoint::new(SpacetimePoint::new(mink, [0.0; 4]).unwrap(), p);
        assert_eq!(particle_table(&kr, &[wrong], &params()), Err(Error::MetricMismatch));
    }

    #[test]
    fn comparison_report() {
        let r = compare_with_group_classification();
        let find = |p: &str| r.rows.iter().find(|row| row.parameters == p).unwrap();
        assert_eq!(find("m=1, s=1/2").provenance, Provenance::Shared);
        assert_eq!(find("m=1, s=1/2").group, find("m=1, s=1/2").groupoid);
        assert_eq!(find("lambda=1/2").provenance, Provenance::GroupOnly);
        assert_eq!(find("lambda=1/2").group.as_deref(), Some("Helicity(1/2)"));
        assert_eq!(find("lambda=1").provenance, Provenance::Shared);
        assert_eq!(find("mu=1, c0=0").provenance, Provenance::GroupoidOnly);
        assert_eq!(find("rho=2, phi0=0.3").provenance, Provenance::Shared);
        assert!(r.to_text().contains("groupoid-only"));
    }
}

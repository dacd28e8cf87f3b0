//! The witness suite behind the `verify` command.

use std::f64::consts::TAU;
use std::str::FromStr;

use nalgebra::DVector;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{
    build_svn, c, find_equivalence, groupoid_equivalence, induce_groupoid_rep, induce_with_section, is_irreducible,
    is_irreducible_group, max_abs, restrict_rep, unitarity_defect, CMat, CircleRep, GroupRep, SpinRep, C64,
};
use crate::covering::{osc_mul, rotate, OscElement};
use crate::groupoid::{FiniteGroup, GaugeGroupoid};
use crate::mackey::Spin;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub status: CheckStatus,
    pub residual: f64,
    pub tolerance: f64,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        let status = if residual <= tolerance { CheckStatus::Pass } else { CheckStatus::Fail };
        CheckReport { check: check.into(), status, residual, tolerance }
    }

    fn flag(check: impl Into<String>, ok: bool) -> Self {
        Self::new(check, if ok { 0.0 } else { 1.0 }, 0.0)
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// Re-evaluates the status against another tolerance.
    pub fn with_tolerance(self, tolerance: f64) -> Self {
        Self::new(self.check, self.residual, tolerance)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Svn,
    Circle,
    Spin,
    Induction,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "svn" => Ok(Suite::Svn),
            "circle" => Ok(Suite::Circle),
            "spin" => Ok(Suite::Spin),
            "induction" => Ok(Suite::Induction),
            other => Err(Error::Parse(format!("unknown suite `{other}` (all, svn, circle, spin, induction)"))),
        }
    }
}

/// Parameters swept by the suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub mus: Vec<f64>,
    pub trunc: usize,
    pub grid: usize,
    pub rhos: Vec<f64>,
    pub phi0s: Vec<f64>,
    pub spins: Vec<Spin>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            mus: vec![1.0, -3.0, 0.5],
            trunc: 32,
            grid: 12,
            rhos: vec![1.0, 5.0],
            phi0s: vec![0.0, 0.3],
            spins: (0..4).map(Spin::from_twice).collect(),
        }
    }
}

pub fn run_suite<R: Rng>(suite: Suite, config: &SuiteConfig, rng: &mut R) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    if matches!(suite, Suite::All | Suite::Svn) {
        out.extend(svn_checks(config)?);
    }
    if matches!(suite, Suite::All | Suite::Circle) {
        out.extend(circle_checks(config, rng)?);
    }
    if matches!(suite, Suite::All | Suite::Spin) {
        out.extend(spin_checks(config));
    }
    if matches!(suite, Suite::All | Suite::Induction) {
        out.extend(induction_checks(rng)?);
    }
    Ok(out)
}

fn svn_checks(config: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let n = config.trunc;
    let mut out = Vec::new();
    for &mu in &config.mus {
        let s = build_svn(mu, n)?;
        let mut defect = s.commutator() - CMat::identity(n, n) * c(0.0, mu);
        let corner = defect[(n - 1, n - 1)];
        defect[(n - 1, n - 1)] = c(0.0, 0.0);
        out.push(CheckReport::new(format!("svn.commutator_off_corner[mu={mu}]"), max_abs(&defect), 1e-12));
        out.push(CheckReport::new(format!("svn.commutator_corner[mu={mu}]"), (corner - c(0.0, -mu * n as f64)).norm(), 1e-10));
        let mut expected: Vec<f64> = (0..n - 1).map(|k| k as f64 + 0.5).collect();
        expected.push((n as f64 - 1.0) / 2.0);
        expected.sort_by(|a, b| a.total_cmp(b));
        let spectrum = s.j_eigenvalues().iter().zip(&expected).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        out.push(CheckReport::new(format!("svn.j_spectrum[mu={mu}]"), spectrum, 1e-9));
    }
    Ok(out)
}

fn random_plane_vector<R: Rng>(rng: &mut R) -> [f64; 2] {
    [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)]
}

fn circle_checks<R: Rng>(config: &SuiteConfig, rng: &mut R) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for &rho in &config.rhos {
        for &phi0 in &config.phi0s {
            let rep = CircleRep::new(config.grid, rho, phi0)?;
            let tag = format!("rho={rho},phi0={phi0}");
            let m = rep.m as i64;
            let avec: Vec<[f64; 2]> = (0..100).map(|_| random_plane_vector(rng)).collect();

            let unit = (0..m)
                .map(|j| unitarity_defect(&rep.rotation(j)))
                .chain(avec.iter().map(|&a| unitarity_defect(&rep.translation(a))))
                .fold(0.0, f64::max);
            out.push(CheckReport::new(format!("circle.unitarity[{tag}]"), unit, 1e-13));

            let mut cov = 0.0_f64;
            for j in 0..m {
                let r = rep.rotation(j);
                for &a in &avec {
                    let lhs = &r * rep.translation(a) * r.adjoint();
                    cov = cov.max(max_abs(&(lhs - rep.translation(rotate(rep.grid_angle(j), a)))));
                }
            }
            out.push(CheckReport::new(format!("circle.covariance[{tag}]"), cov, 1e-13));

            let ph = phi0 * TAU;
            let stab = max_abs(&(rep.rotation(m) - CMat::identity(rep.m, rep.m) * c(ph.cos(), ph.sin())));
            out.push(CheckReport::new(format!("circle.stabilizer_character[{tag}]"), stab, 0.0));

            let mut proj = 0.0_f64;
            for _ in 0..50 {
                let g = OscElement::new(rng.gen_range(-2.0..2.0), random_plane_vector(rng), rep.grid_angle(rng.gen_range(-24..24)));
                let h = OscElement::new(rng.gen_range(-2.0..2.0), random_plane_vector(rng), rep.grid_angle(rng.gen_range(-24..24)));
                let lhs = rep.element(&g)? * rep.element(&h)?;
                proj = proj.max(max_abs(&(lhs - rep.element(&osc_mul(&g, &h))?)));
            }
            out.push(CheckReport::new(format!("circle.product_law[{tag}]"), proj, 1e-12));
        }
    }
    Ok(out)
}

fn spin_checks(config: &SuiteConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for &s in &config.spins {
        let rep = SpinRep::new(s);
        let twice = s.twice();
        let d = rep.dim();
        out.push(CheckReport::new(format!("spin.commutation[s={s}]"), rep.commutation_defect(), 1e-12));
        out.push(CheckReport::new(format!("spin.casimir[s={s}]"), rep.casimir_defect(), 1e-12));
        let sign = if twice % 2 == 0 { 1.0 } else { -1.0 };
        let axis = [0.0, 0.6, 0.8];
        let turn = max_abs(&(rep.rotation(axis, TAU) - CMat::identity(d, d) * c(sign, 0.0)));
        out.push(CheckReport::new(format!("spin.full_turn[s={s}]"), turn, 1e-10));
        let u = rep.rotation(axis, 0.9);
        let su = unitarity_defect(&u).max((u.determinant() - c(1.0, 0.0)).norm());
        out.push(CheckReport::new(format!("spin.special_unitary[s={s}]"), su, 1e-10));
    }
    out
}

/// Unitary factor of the QR decomposition of a random matrix.
fn random_unitary<R: Rng>(d: usize, rng: &mut R) -> CMat {
    let m = CMat::from_fn(d, d, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    m.qr().q()
}

fn random_vector<R: Rng>(d: usize, rng: &mut R) -> DVector<C64> {
    DVector::from_fn(d, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

fn named_reps() -> Result<Vec<(String, GroupRep)>> {
    let s3 = FiniteGroup::symmetric(3);
    let mut reps = Vec::new();
    for k in 0..3 {
        reps.push((format!("Z/3.chi{k}"), GroupRep::cyclic_character(3, k)?));
    }
    reps.push(("S3.trivial".into(), GroupRep::trivial(s3.clone())));
    reps.push(("S3.sign".into(), GroupRep::sign(s3.clone())?));
    reps.push(("S3.standard".into(), GroupRep::standard(s3.clone())?));
    reps.push(("S3.regular".into(), GroupRep::regular(s3.clone())));
    reps.push(("S3.trivial+sign".into(), GroupRep::trivial(s3.clone()).direct_sum(&GroupRep::sign(s3)?)?));
    reps.push(("Z/3.chi1+chi2".into(), GroupRep::cyclic_character(3, 1)?.direct_sum(&GroupRep::cyclic_character(3, 2)?)?));
    Ok(reps)
}

fn induction_checks<R: Rng>(rng: &mut R) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for (name, t) in named_reps()? {
        let g = GaugeGroupoid::new(3, t.group().clone())?;
        let ind = induce_groupoid_rep(&g, &t)?;
        let d = t.dim();
        out.push(CheckReport::new(format!("induction.functoriality[{name}]"), ind.functoriality_defect(), 1e-13));
        let back = restrict_rep(&ind, 0)?;
        let round = t.matrices().iter().zip(back.matrices()).map(|(a, b)| max_abs(&(a - b))).fold(0.0, f64::max);
        out.push(CheckReport::new(format!("induction.restrict_induce[{name}]"), round, 0.0));
        out.push(CheckReport::flag(
            format!("induction.other_base_point[{name}]"),
            find_equivalence(&t, &restrict_rep(&ind, 2)?).is_some(),
        ));

        let us: Vec<CMat> = (0..3).map(|_| random_unitary(d, rng)).collect();
        let twisted = ind.gauge_transform(&us)?;
        let reinduced = induce_groupoid_rep(&g, &restrict_rep(&twisted, 1)?)?;
        out.push(CheckReport::flag(format!("induction.induce_restrict[{name}]"), groupoid_equivalence(&twisted, &reinduced).is_some()));

        let section: Vec<usize> = (0..3).map(|_| rng.gen_range(0..t.group().order())).collect();
        let other = induce_with_section(&g, &t, &section)?;
        out.push(CheckReport::flag(format!("induction.section_independence[{name}]"), groupoid_equivalence(&ind, &other).is_some()));

        let pairs: Vec<_> = (0..5).map(|_| (random_vector(d, rng), random_vector(d, rng))).collect();
        out.push(CheckReport::new(format!("induction.transition_probability[{name}]"), twisted.transition_defect(&pairs), 1e-12));

        let group_irr = is_irreducible_group(&t)?;
        let ind_irr = is_irreducible(&twisted)?;
        out.push(CheckReport::flag(format!("induction.irreducibility_agrees[{name}]"), group_irr.irreducible == ind_irr.irreducible));
        let chi = super::character_commutant_dim(&t);
        out.push(CheckReport::new(format!("induction.commutant_vs_characters[{name}]"), (chi - ind_irr.commutant_dim as f64).abs(), 1e-9));
        if let Some(w) = &ind_irr.witness {
            let proper = w.rank > 0 && w.rank < d;
            out.push(CheckReport::new(format!("induction.witness_invariance[{name}]"), if proper { w.residual } else { f64::INFINITY }, 1e-10));
        }
    }
    Ok(out)
}

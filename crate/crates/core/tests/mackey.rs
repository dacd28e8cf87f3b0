use std::f64::consts::TAU;

use proptest::prelude::*;
use wigneroid::mackey::{
    classify_double_cover_e2, classify_e2bar, classify_poincare, compare_with_group_classification, dual_orbit,
    parse_spin, rotate_character, DualOrbit, DualPointH2, GroupMasslessLabel, LittleGroup, PoincareOrbit, Provenance,
    RepLabel, Spin, Stabilizer,
};
use wigneroid::Error;

proptest! {
    #[test]
    fn dual_orbit_is_rotation_invariant(p0 in -10.0..10.0f64, p1 in -10.0..10.0f64, phi in -20.0..20.0f64) {
        let before = dual_orbit(&DualPointH2::Character { p: [p0, p1] });
        let after = dual_orbit(&DualPointH2::Character { p: rotate_character(phi, [p0, p1]) });
        match (before, after) {
            (DualOrbit::Circle { rho: a }, DualOrbit::Circle { rho: b }) => prop_assert!((a - b).abs() <= 1e-12 * a.max(1.0)),
            (a, b) => prop_assert_eq!(a, b),
        }
    }

    #[test]
    fn magnetic_points_are_fixed(mu in prop_oneof![-10.0..-0.01f64, 0.01..10.0f64]) {
        let orbit = dual_orbit(&DualPointH2::stone_von_neumann(mu).unwrap());
        prop_assert_eq!(orbit, DualOrbit::FixedMagnetic { mu });
        prop_assert_eq!(orbit.stabilizer(), Stabilizer::FullLine);
    }

    #[test]
    fn circle_parameter_is_taken_mod_one(rho in 0.1..10.0f64, phi0 in 0.0..1.0f64, k in -5i32..5) {
        let a = classify_e2bar(&DualOrbit::Circle { rho }, phi0).unwrap();
        let b = classify_e2bar(&DualOrbit::Circle { rho }, phi0 + k as f64).unwrap();
        match (a, b) {
            (RepLabel::ContinuousSpin { phi0: x, .. }, RepLabel::ContinuousSpin { phi0: y, .. }) => {
                prop_assert!((0.0..1.0).contains(&y));
                prop_assert!((x - y).abs() < 1e-12 || (1.0 - (x - y).abs()) < 1e-12);
            }
            other => prop_assert!(false, "{other:?}"),
        }
    }

    #[test]
    fn magnetic_spectrum_is_shifted_by_c0(mu in 0.1..5.0f64, c0 in -3.0..3.0f64, n in 0u32..50) {
        let label = classify_e2bar(&DualOrbit::FixedMagnetic { mu }, c0).unwrap();
        prop_assert_eq!(label.magnetic_j_eigenvalue(n), Some(n as f64 + 0.5 + c0));
    }
}

#[test]
fn stabilizers() {
    assert_eq!(DualOrbit::Origin.stabilizer(), Stabilizer::FullLine);
    assert_eq!(DualOrbit::Circle { rho: 2.0 }.stabilizer(), Stabilizer::TwoPiZ);
    let p = [1.5, -0.5];
    let back = rotate_character(TAU, p);
    assert!((back[0] - p[0]).abs() < 1e-14 && (back[1] - p[1]).abs() < 1e-14);
    assert!(DualPointH2::stone_von_neumann(0.0).is_err());
}

#[test]
fn helicity_must_be_integral_in_the_groupoid_classification() {
    assert_eq!(classify_e2bar(&DualOrbit::Origin, -2.0).unwrap(), RepLabel::MasslessHelicity { lambda: -2 });
    let err = classify_e2bar(&DualOrbit::Origin, 0.5).unwrap_err();
    assert!(matches!(err, Error::NonIntegralHelicity(x) if x == 0.5));
    assert_eq!(err.code(), "non_integral_helicity");
    assert_eq!(
        classify_double_cover_e2(&DualOrbit::Origin, 0.5).unwrap(),
        GroupMasslessLabel::Helicity { twice_lambda: 1 }
    );
    assert!(classify_double_cover_e2(&DualOrbit::FixedMagnetic { mu: 1.0 }, 0.0).is_err());
}

#[test]
fn poincare_little_groups() {
    assert_eq!(classify_poincare([2.0, 0.0, 0.0, 0.0]).little_group, LittleGroup::SU2);
    assert_eq!(classify_poincare([1.0, 0.0, 1.0, 0.0]).little_group, LittleGroup::DoubleCoverE2);
    assert_eq!(classify_poincare([0.0, 1.0, 0.0, 0.0]).orbit, PoincareOrbit::Spacelike);
    assert_eq!(classify_poincare([0.0; 4]).little_group, LittleGroup::SL2C);
}

#[test]
fn spin_parsing_and_display() {
    assert_eq!(parse_spin("3/2").unwrap(), Spin::from_twice(3));
    assert_eq!(parse_spin("0.5").unwrap(), Spin::from_twice(1));
    assert_eq!(parse_spin("2").unwrap().multiplicity(), 5);
    assert!(parse_spin("1/3").is_err());
    assert!(parse_spin("-1").is_err());
    assert_eq!(Spin::from_twice(3).to_string(), "3/2");
    let json = serde_json::to_string(&Spin::from_twice(1)).unwrap();
    assert_eq!(serde_json::from_str::<Spin>(&json).unwrap(), Spin::from_twice(1));
}

#[test]
fn comparison_marks_the_magnetic_sector_as_new() {
    let report = compare_with_group_classification();
    let magnetic: Vec<_> = report.rows.iter().filter(|r| r.sector == "magnetic").collect();
    assert!(!magnetic.is_empty());
    assert!(magnetic.iter().all(|r| r.group.is_none() && r.groupoid.is_some() && r.provenance == Provenance::GroupoidOnly));
    assert!(report
        .rows
        .iter()
        .any(|r| r.provenance == Provenance::GroupOnly && r.groupoid.is_none() && r.group.is_some()));
    assert!(report.rows.iter().any(|r| r.provenance == Provenance::Shared));
}

//! End-to-end checks across modules through the public API.

use mrbound::numerov::{auto_config, solve_eigenvalue};
use mrbound::units::{au_to_ev, ev_to_au, molecule_params};
use mrbound::wavefunction::r_space_norm;
use mrbound::{
    approximation_error_report, default_grid, energy_level, energy_scale_ev,
    enumerate_bound_states, hulthen_energy, normalization_closed_form, normalization_quadrature,
    radial_wavefunction, solve_coefficients, table_energy_ev, Case, CentrifugalMode, Error,
    MoleculeRegistry, PotentialParams, QuantumState, UnitSystem,
};

fn case1() -> mrbound::ApproxScheme {
    solve_coefficients(Case::Case1, 1.0).unwrap()
}

#[test]
fn spectrum_wavefunction_and_numerov_agree_on_one_level() {
    let p = PotentialParams::atomic(80.0, 0.75, 40.0).unwrap();
    let s = case1();
    let st: QuantumState = "4d".parse().unwrap();
    let sol = energy_level(&p, st, &s).unwrap();

    let num = solve_eigenvalue(
        &p,
        st,
        &auto_config(&p, st, sol.energy, CentrifugalMode::Approximated(s)),
    )
    .unwrap();
    assert!((num.energy - sol.energy).abs() < 1e-10);
    assert_eq!(num.nodes, st.n);

    let f =
        radial_wavefunction(&p, st, &s, &default_grid(p.range, sol.epsilon_prime, 2000)).unwrap();
    assert_eq!(f.node_count(), st.n as usize);
    assert_eq!(f.epsilon_prime, sol.epsilon_prime);
    assert!((r_space_norm(&f, 60.0 * p.range).unwrap() - 1.0).abs() < 1e-9);

    let a = normalization_closed_form(&p, st, &s).unwrap();
    let b = normalization_quadrature(&p, st, &s).unwrap();
    assert!((a / b - 1.0).abs() < 1e-9);
    assert!((f.norm_constant / a - 1.0).abs() < 1e-9);
}

#[test]
fn enumeration_is_complete_and_ordered() {
    let p = PotentialParams::atomic(80.0, 0.75, 40.0).unwrap();
    let s = case1();
    let levels = enumerate_bound_states(&p, &s, 4);
    assert!(levels.windows(2).all(|w| w[0].1.energy <= w[1].1.energy));
    for l in 0..=4 {
        let count = levels.iter().filter(|(st, _)| st.l == l).count() as u32;
        // the next radial excitation is unbound
        assert!(energy_level(&p, QuantumState::new(count, l), &s).is_err());
        assert!(levels
            .iter()
            .any(|(st, _)| *st == QuantumState::new(count - 1, l)));
    }
}

#[test]
fn unbound_levels_report_their_critical_coupling() {
    let p = PotentialParams::atomic(2.0, 0.75, 1.0).unwrap();
    match energy_level(&p, "3d".parse().unwrap(), &case1()) {
        Err(Error::Unbound {
            critical_coupling, ..
        }) => assert!(critical_coupling > 2.0),
        other => panic!("{other:?}"),
    }
}

#[test]
fn molecule_units_route_through_the_same_spectrum() {
    let reg = MoleculeRegistry::builtin();
    let u = UnitSystem::default();
    let s = case1();
    let hcl = reg.get("hcl").unwrap();
    let st: QuantumState = "3p".parse().unwrap();
    let b = 40.0;
    let p = molecule_params(hcl, 2.0 * b, 0.75, b, &u).unwrap();
    let e = energy_level(&p, st, &s).unwrap().energy;
    assert!((table_energy_ev(hcl, st, 0.75, 1.0 / b, &s, &u).unwrap() + e).abs() < 1e-12 * e.abs());

    // eV energy = reduced energy × (ħ²/2μb²)
    let atomic = PotentialParams::atomic(2.0 * b, 0.75, b).unwrap();
    let reduced = energy_level(&atomic, st, &s).unwrap().energy / atomic.energy_unit();
    let scale = energy_scale_ev(hcl, b, &u).unwrap();
    assert!((reduced * scale / e - 1.0).abs() < 1e-12);

    // Hulthén column equals the general formula at α = 0 and 1
    for alpha in [0.0, 1.0] {
        let p = molecule_params(hcl, 2.0 * b, alpha, b, &u).unwrap();
        let h = hulthen_energy(&p, st, &s).unwrap();
        let g = energy_level(&p, st, &s).unwrap().energy;
        assert!((h - g).abs() <= 1e-14 * h.abs());
    }

    let x = -0.1205297;
    assert!((ev_to_au(au_to_ev(x)) / x - 1.0).abs() < 1e-15);
}

#[test]
fn approximation_is_exact_at_the_matching_radius() {
    let b = 40.0;
    for case in [Case::Case1, Case::Case2, Case::Case3] {
        let s = solve_coefficients(case, 1.0).unwrap();
        let r0 = s.matching_radius(b);
        let rows = approximation_error_report(&s, b, 1, &[0.5 * r0, r0, 2.0 * r0]).unwrap();
        assert!(rows[1].rel_err < 1e-12, "{case}: {:?}", rows[1]);
        assert!(rows[0].rel_err > rows[1].rel_err && rows[2].rel_err > rows[1].rel_err);
    }
}

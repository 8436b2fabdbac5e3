use std::f64::consts::PI;

use kgsim_core::circuit::{max_abs_diff, Gate};
use kgsim_core::kg::{
    Component, EvolutionParams, KgSystem, MomentumConvention, PotentialProfile, Splitting,
    UnitSystem,
};
use kgsim_core::{
    inverse_qft_circuit, qft_circuit, synthesize_diagonal, Circuit, DiagonalSpec, StateVector,
};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use proptest::prelude::*;

fn angle() -> impl Strategy<Value = f64> {
    -2.0 * PI..2.0 * PI
}

fn gate(n: usize) -> BoxedStrategy<Gate> {
    let dim = 1usize << n;
    let single = prop_oneof![
        (0..n).prop_map(|target| Gate::Hadamard { target }),
        (0..n, angle()).prop_map(|(target, angle)| Gate::Phase { target, angle }),
        prop::collection::vec(angle(), dim).prop_map(Gate::SiteDiagonalPhase),
        angle().prop_map(Gate::GlobalPhase),
        (
            prop::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n),
            angle()
        )
            .prop_map(|(qubits, angle)| Gate::MultiControlledPhase { qubits, angle }),
    ];
    if n < 2 {
        return single.boxed();
    }
    let pair = (0..n, 1..n).prop_map(move |(a, d)| (a, (a + d) % n));
    let two = prop_oneof![
        (pair.clone(), angle()).prop_map(|((control, target), angle)| Gate::ControlledPhase {
            control,
            target,
            angle
        }),
        pair.prop_map(|(a, b)| Gate::Swap { a, b }),
    ];
    prop_oneof![5 => single, 2 => two].boxed()
}

fn circuit(max_qubits: usize, max_gates: usize) -> impl Strategy<Value = Circuit> {
    (1..=max_qubits).prop_flat_map(move |n| {
        prop::collection::vec(gate(n), 0..max_gates).prop_map(move |gates| {
            let mut c = Circuit::new(n, "random");
            for g in gates {
                c.push(g).unwrap();
            }
            c
        })
    })
}

fn state(n: usize) -> impl Strategy<Value = StateVector> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1 << n)
        .prop_filter("non-zero", |v| {
            v.iter().any(|(r, i)| r.abs() + i.abs() > 1e-3)
        })
        .prop_map(|v| {
            StateVector::normalized(v.into_iter().map(|(r, i)| Complex64::new(r, i)).collect())
                .unwrap()
        })
}

fn raw(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1 << n)
        .prop_map(|v| v.into_iter().map(|(r, i)| Complex64::new(r, i)).collect())
}

/// Applies the circuit's gates to an arbitrary (unnormalized) vector by
/// going through its dense matrix.
fn apply_dense(c: &Circuit, v: &[Complex64]) -> Vec<Complex64> {
    let m = c.dense_matrix().unwrap();
    (m * DVector::from_column_slice(v))
        .iter()
        .copied()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_preserved(c in circuit(6, 300), seed in 0usize..64) {
        let mut s = StateVector::basis_state(c.num_qubits(), seed % (1 << c.num_qubits())).unwrap();
        s.apply_circuit(&c).unwrap();
        prop_assert!((s.norm() - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn dense_matrix_agrees_with_application(
        (c, s) in circuit(6, 40).prop_flat_map(|c| { let n = c.num_qubits(); (Just(c), state(n)) })
    ) {
        let mut applied = s.clone();
        applied.apply_circuit(&c).unwrap();
        let via_matrix = apply_dense(&c, s.amplitudes());
        for (a, b) in applied.amplitudes().iter().zip(&via_matrix) {
            prop_assert!((a - b).norm() <= 1e-12);
        }
    }

    #[test]
    fn application_is_linear(
        (c, u, v) in circuit(4, 40).prop_flat_map(|c| { let n = c.num_qubits(); (Just(c), raw(n), raw(n)) }),
        alpha in (-2.0f64..2.0, -2.0f64..2.0),
        beta in (-2.0f64..2.0, -2.0f64..2.0),
    ) {
        let (alpha, beta) = (Complex64::new(alpha.0, alpha.1), Complex64::new(beta.0, beta.1));
        let mix: Vec<Complex64> = u.iter().zip(&v).map(|(a, b)| alpha * a + beta * b).collect();
        // gates act on the raw buffer through the normalization-free dense path
        let lhs = apply_dense(&c, &mix);
        let (cu, cv) = (apply_dense(&c, &u), apply_dense(&c, &v));
        for i in 0..lhs.len() {
            prop_assert!((lhs[i] - (alpha * cu[i] + beta * cv[i])).norm() <= 1e-12);
        }
    }

    #[test]
    fn gate_times_inverse_is_identity(g in gate(4)) {
        let n = 4;
        let mut c = Circuit::new(n, "g");
        c.push(g.clone()).unwrap();
        c.push(g.inverse()).unwrap();
        let m = c.dense_matrix().unwrap();
        let dim = 1 << n;
        prop_assert!(max_abs_diff(&m, &DMatrix::identity(dim, dim)) <= 1e-12);
    }

    #[test]
    fn synthesized_diagonal_is_exact(
        phases in (1usize..=4).prop_flat_map(|n| prop::collection::vec(-20.0f64..20.0, 1 << n))
    ) {
        let n = phases.len().trailing_zeros() as usize;
        let spec = DiagonalSpec::new(n, phases.clone()).unwrap();
        let m = synthesize_diagonal(&spec).unwrap().dense_matrix().unwrap();
        let want = DMatrix::from_diagonal(&DVector::from_iterator(
            phases.len(),
            phases.iter().map(|p| Complex64::cis(*p)),
        ));
        prop_assert!(max_abs_diff(&m, &want) <= 1e-12);
    }

    #[test]
    fn qft_round_trip_on_random_states(s in (1usize..=6).prop_flat_map(state)) {
        let n = s.num_qubits();
        let mut out = s.clone();
        out.apply_circuit(&qft_circuit(n).unwrap()).unwrap();
        out.apply_circuit(&inverse_qft_circuit(n).unwrap()).unwrap();
        prop_assert!(out.distance(&s) <= 1e-12);
    }

    #[test]
    fn evolve_conserves_probability(
        t in -10.0f64..10.0,
        r in 1usize..12,
        v in prop::collection::vec(-15.0f64..15.0, 4),
        start in 0usize..4,
        strang in any::<bool>(),
        anti in any::<bool>(),
    ) {
        let system = KgSystem::new(2, UnitSystem::default(), PotentialProfile::explicit(v),
            MomentumConvention::Paper, 2).unwrap();
        let splitting = if strang { Splitting::Strang } else { Splitting::PaperOrder };
        let component = if anti { Component::AntiParticle } else { Component::Particle };
        let psi = StateVector::basis_state(2, start).unwrap();
        let out = system.evolve(&psi, component, &EvolutionParams::new(t, r, splitting)).unwrap();
        prop_assert!((out.site_probabilities().iter().sum::<f64>() - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn constant_potential_leaves_probabilities_unchanged(
        t in -10.0f64..10.0,
        r in 1usize..12,
        offset in -20.0f64..20.0,
    ) {
        let base = KgSystem::new(2, UnitSystem::default(),
            PotentialProfile::single_barrier(2, 1, 11.0).unwrap(), MomentumConvention::Paper, 2).unwrap();
        let shifted = base.with_potential(base.potential.shifted(offset)).unwrap();
        let psi = StateVector::basis_state(2, 0).unwrap();
        let params = EvolutionParams::new(t, r, Splitting::PaperOrder);
        let a = base.evolve(&psi, Component::Particle, &params).unwrap().site_probabilities();
        let b = shifted.evolve(&psi, Component::Particle, &params).unwrap().site_probabilities();
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
    }

    #[test]
    fn momentum_eigenstates_are_stationary(
        n in 1usize..=4,
        k in 0usize..16,
        t in -5.0f64..5.0,
        r in 1usize..10,
        level in -5.0f64..5.0,
        standard in any::<bool>(),
    ) {
        let k = k % (1 << n);
        let convention = if standard { MomentumConvention::StandardFft } else { MomentumConvention::Paper };
        let system = KgSystem::new(n, UnitSystem::default(), PotentialProfile::constant(n, level),
            convention, 2).unwrap();
        // F†|k⟩
        let mut psi = StateVector::basis_state(n, k).unwrap();
        psi.apply_circuit(&inverse_qft_circuit(n).unwrap()).unwrap();
        let p0 = psi.site_probabilities();
        let out = system.evolve(&psi, Component::Particle, &EvolutionParams::new(t, r, Splitting::Strang)).unwrap();
        for (a, b) in p0.iter().zip(out.site_probabilities()) {
            prop_assert!((a - b).abs() <= 1e-10);
        }
    }

    #[test]
    fn particle_and_antiparticle_are_conjugate_without_potential(
        t in -5.0f64..5.0,
        r in 1usize..10,
        amps in prop::collection::vec(-1.0f64..1.0, 8),
        three_qubits in any::<bool>(),
    ) {
        // n = 2 with the default table, n = 3 with the symmetric FFT ordering
        let (n, convention) = if three_qubits { (3, MomentumConvention::StandardFft) } else { (2, MomentumConvention::Paper) };
        let units = UnitSystem { include_rest_energy: false, ..UnitSystem::default() };
        let system = KgSystem::new(n, units, PotentialProfile::constant(n, 0.0), convention, 2).unwrap();
        let real: Vec<Complex64> = amps[..1 << n].iter().map(|&a| Complex64::new(a, 0.0)).collect();
        prop_assume!(real.iter().any(|a| a.norm() > 1e-3));
        let psi = StateVector::normalized(real).unwrap();
        let params = EvolutionParams::new(t, r, Splitting::PaperOrder);
        let a = system.evolve(&psi, Component::Particle, &params).unwrap();
        let b = system.evolve(&psi, Component::AntiParticle, &params).unwrap();
        for (x, y) in a.amplitudes().iter().zip(b.amplitudes()) {
            prop_assert!((x.conj() - y).norm() <= 1e-12);
        }
    }

    #[test]
    fn single_step_error_is_second_order(
        dt in 1e-3f64..2e-2,
        v in prop::collection::vec(-12.0f64..12.0, 4),
        start in 0usize..4,
        kapp in 1u8..=2,
        anti in any::<bool>(),
    ) {
        let component = if anti { Component::AntiParticle } else { Component::Particle };
        let units = UnitSystem::default();
        let system = KgSystem::new(2, units, PotentialProfile::explicit(v.clone()),
            MomentumConvention::Paper, kapp).unwrap();
        let psi = StateVector::basis_state(2, start).unwrap();
        let trotter = system.evolve(&psi, component, &EvolutionParams::new(dt, 1, Splitting::PaperOrder)).unwrap();
        let exact = system.component_oracle(component).unwrap().evolve(&psi, dt).unwrap();
        let shift = units.potential_shift(component);
        let a = v.iter().map(|x| (x + shift).abs()).fold(0.0, f64::max);
        let b = f64::from(kapp) * system.table.kinetic_diagonal.iter().fold(0.0, |m: f64, k| m.max(k.abs()));
        prop_assert!(trotter.distance(&exact) <= a * b * dt * dt + 1e-12);
    }
}

use std::f64::consts::PI;

use filament_core::diffalg::evaluate;
use filament_core::random::{self, PolyShape};
use filament_core::spectral::PeriodicGrid;
use filament_core::{DiffPoly, Error};

const CASES: u64 = 200;

#[test]
fn ring_axioms() {
    let shape = PolyShape::default().with_g(0.2);
    let mut rng = random::rng(11);
    for _ in 0..CASES {
        let p = random::poly(&mut rng, &shape);
        let q = random::poly(&mut rng, &shape);
        let r = random::poly(&mut rng, &shape);
        assert_eq!(&p + &q, &q + &p);
        assert_eq!(&p * &q, &q * &p);
        assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        assert_eq!(&p + &DiffPoly::zero(), p);
        assert_eq!(&p * &DiffPoly::one(), p);
        assert!((&p - &p).is_zero());
    }
}

#[test]
fn leibniz_rule() {
    let shape = PolyShape::default().with_g(0.2);
    let mut rng = random::rng(12);
    for _ in 0..CASES {
        let p = random::poly(&mut rng, &shape);
        let q = random::poly(&mut rng, &shape);
        let lhs = (&p * &q).total_derivative();
        let rhs = p.total_derivative() * &q + &p * q.total_derivative();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn euler_annihilates_total_derivatives() {
    let shape = PolyShape::default().with_g(0.2);
    let mut rng = random::rng(13);
    for _ in 0..CASES {
        let p = random::poly(&mut rng, &shape);
        assert!(p.total_derivative().euler_derivative().is_zero(), "{p}");
    }
}

#[test]
fn antiderivative_inverts_total_derivative() {
    let shape = PolyShape::default().with_g(0.2);
    let mut rng = random::rng(14);
    for _ in 0..CASES {
        let p = random::poly_without_constant(&mut rng, &shape);
        assert_eq!(p.total_derivative().antiderivative().unwrap(), p);
    }
}

#[test]
fn exactness_agrees_with_antiderivative() {
    let shape = PolyShape::default();
    let mut rng = random::rng(15);
    for i in 0..CASES {
        let p = match i % 3 {
            0 => random::exact(&mut rng, &shape),
            1 => random::non_exact(&mut rng, &shape),
            _ => random::exact(&mut rng, &shape) + random::non_exact(&mut rng, &shape),
        };
        let result = p.antiderivative();
        assert_eq!(p.is_exact(), result.is_ok(), "{p}");
        match result {
            Ok(q) => assert_eq!(q.total_derivative(), p),
            Err(Error::NotExact { witness, .. }) => assert!(!witness.is_zero()),
            Err(other) => panic!("unexpected error {other}"),
        }
    }
}

/// Smooth periodic test signal with a few low modes.
fn smooth_samples(n: usize, length: f64, seed: u64) -> Vec<f64> {
    use rand::Rng;
    let mut rng = random::rng(seed);
    let modes: Vec<(f64, f64, f64)> = (1..=4)
        .map(|m| {
            (
                m as f64,
                rng.gen_range(-1.0..1.0),
                rng.gen_range(0.0..2.0 * PI),
            )
        })
        .collect();
    (0..n)
        .map(|j| {
            let s = j as f64 * length / n as f64;
            0.3 + modes
                .iter()
                .map(|(m, a, ph)| a * (2.0 * PI * m * s / length + ph).cos())
                .sum::<f64>()
        })
        .collect()
}

#[test]
fn spectral_evaluation_commutes_with_total_derivative() {
    let shape = PolyShape::small();
    let mut rng = random::rng(16);
    let n = 256;
    let length = 2.0 * PI;
    let grid = PeriodicGrid::new(n, length).unwrap();
    let h = length / n as f64;
    for case in 0..40 {
        let p = random::poly(&mut rng, &shape);
        let k = smooth_samples(n, length, 100 + case);
        let values = evaluate(&p, &k, h, 0.0).unwrap();
        let direct = evaluate(&p.total_derivative(), &k, h, 0.0).unwrap();
        let spectral = grid.derivative(&values, 1);
        let scale = 1.0 + values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for (a, b) in direct.iter().zip(&spectral) {
            assert!((a - b).abs() <= 1e-8 * scale, "{p}: {a} vs {b}");
        }
    }
}

#[test]
fn spectral_evaluation_of_square() {
    let n = 128;
    let length = 1.0;
    let h = length / n as f64;
    let k: Vec<f64> = (0..n).map(|j| (2.0 * PI * j as f64 * h).sin()).collect();
    let got = evaluate(&DiffPoly::k().pow(2), &k, h, 0.0).unwrap();
    for (g, x) in got.iter().zip(&k) {
        assert!((g - x * x).abs() <= 1e-10);
    }
}

#[test]
fn euler_derivative_matches_discrete_variation() {
    // L = 1/2 k'^2 - 1/8 k^4 has δL/δk = -k'' - 1/2 k^3. Perturb the
    // discretized action along a bump and compare with ∫ δL/δk · bump.
    let lagrangian = DiffPoly::ratio(1, 2) * DiffPoly::kd(1).pow(2)
        - DiffPoly::ratio(1, 8) * DiffPoly::k().pow(4);
    let euler = lagrangian.euler_derivative();
    assert_eq!(
        euler,
        -DiffPoly::kd(2) - DiffPoly::ratio(1, 2) * DiffPoly::k().pow(3)
    );
    let n = 128;
    let length = 2.0 * PI;
    let grid = PeriodicGrid::new(n, length).unwrap();
    let h = grid.spacing();
    let action = |k: &[f64]| grid.integrate(&evaluate(&lagrangian, k, h, 0.0).unwrap());
    for seed in 0..5 {
        let k = smooth_samples(n, length, 200 + seed);
        let bump = smooth_samples(n, length, 300 + seed);
        let eps = 1e-5;
        let plus: Vec<f64> = k.iter().zip(&bump).map(|(a, b)| a + eps * b).collect();
        let minus: Vec<f64> = k.iter().zip(&bump).map(|(a, b)| a - eps * b).collect();
        let fd = (action(&plus) - action(&minus)) / (2.0 * eps);
        let e = evaluate(&euler, &k, h, 0.0).unwrap();
        let pairing: Vec<f64> = e.iter().zip(&bump).map(|(a, b)| a * b).collect();
        let exact = grid.integrate(&pairing);
        assert!(
            (fd - exact).abs() <= 1e-6 * (1.0 + exact.abs()),
            "{fd} vs {exact}"
        );
    }
}

#[test]
fn evaluate_rejects_degenerate_grids() {
    assert!(matches!(
        evaluate(&DiffPoly::k(), &[1.0, 2.0, 3.0], 0.1, 0.0),
        Err(Error::DegenerateGrid(_))
    ));
    assert!(matches!(
        evaluate(&DiffPoly::k(), &[1.0; 8], 0.0, 0.0),
        Err(Error::DegenerateGrid(_))
    ));
}

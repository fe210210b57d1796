use filament_core::derivations::{commutator, functional_equal};
use filament_core::hamiltonian::{
    apply_d, check_bihamiltonian, mkdv, mkdv_hierarchy, pi1, poisson_pi1, recursion, CovectorField,
    HamiltonianPair,
};
use filament_core::random::{self, PolyShape};
use filament_core::{Characteristic, DiffPoly, Functional};

#[test]
fn hierarchy_flows_commute() {
    let h = mkdv_hierarchy(3).unwrap();
    for i in 0..h.len() {
        for j in 0..h.len() {
            assert!(commutator(&h[i], &h[j]).is_zero(), "[a{i}, a{j}] != 0");
        }
    }
}

#[test]
fn recursion_is_d_after_antiderivative() {
    let shape = PolyShape::small();
    let mut rng = random::rng(41);
    let mut checked = 0;
    while checked < 50 {
        let a = random::exact(&mut rng, &shape);
        let Ok(lhs) = recursion(&Characteristic::new(a.clone())) else {
            continue;
        };
        let Ok(rhs) = apply_d(&a.antiderivative().unwrap()) else {
            continue;
        };
        assert_eq!(lhs.poly(), &rhs);
        checked += 1;
    }
}

#[test]
fn operator_d_is_skew_adjoint() {
    let shape = PolyShape::small();
    let mut rng = random::rng(42);
    for _ in 0..50 {
        let a = random::variational(&mut rng, &shape);
        let b = random::variational(&mut rng, &shape);
        let da = apply_d(&a).unwrap();
        let db = apply_d(&b).unwrap();
        let lhs = Functional::new(&a * &db);
        let rhs = Functional::new(-(da * &b));
        assert!(functional_equal(&lhs, &rhs), "{a} / {b}");
    }
}

#[test]
fn recursion_is_hereditary_on_hierarchy() {
    let r = |c: &Characteristic| recursion(c).unwrap();
    let h = mkdv_hierarchy(1).unwrap();
    let pairs = [
        (Characteristic::new(DiffPoly::kd(1)), mkdv()),
        (h[0].clone(), h[1].clone()),
    ];
    for (xi, eta) in pairs {
        let rxi = r(&xi);
        let reta = r(&eta);
        let lhs = commutator(&rxi, &reta).into_poly()
            - r(&commutator(&rxi, &eta)).into_poly()
            - r(&commutator(&xi, &reta)).into_poly()
            + r(&r(&commutator(&xi, &eta))).into_poly();
        assert!(lhs.is_zero());
    }
}

#[test]
fn poisson_bracket_is_antisymmetric() {
    let shape = PolyShape::small();
    let mut rng = random::rng(43);
    for _ in 0..50 {
        let f = Functional::new(random::poly(&mut rng, &shape));
        let g = Functional::new(random::poly(&mut rng, &shape));
        let fg = poisson_pi1(&f, &g).unwrap();
        let gf = poisson_pi1(&g, &f).unwrap();
        let neg = Functional::new(-gf.representative().clone());
        assert!(functional_equal(&fg, &neg));
    }
}

#[test]
fn poisson_bracket_matches_pairing_with_pi1() {
    // {F, G} = ∫ (δG) · 𝒟(δF) up to the sign convention of the bracket.
    let shape = PolyShape::small();
    let mut rng = random::rng(44);
    for _ in 0..30 {
        let f = Functional::new(random::poly(&mut rng, &shape));
        let g = Functional::new(random::poly(&mut rng, &shape));
        let flow = pi1(&CovectorField::differential(&f)).unwrap();
        let pairing = CovectorField::differential(&g).pairing(&flow);
        let bracket = poisson_pi1(&f, &g).unwrap();
        let neg = Functional::new(-pairing.representative().clone());
        assert!(functional_equal(&bracket, &neg));
    }
}

#[test]
fn involution_and_sign_report() {
    let pair = HamiltonianPair::default();
    let bracket = poisson_pi1(&pair.h0, &pair.h1).unwrap();
    assert!(bracket.is_zero());
    assert!(bracket
        .representative()
        .without_constant()
        .euler_derivative()
        .is_zero());
    let report = check_bihamiltonian();
    assert_eq!(report.c1, mkdv());
    assert_eq!(report.sigma, Some(-1));
}

#[test]
fn second_flow_matches_seventh_order_mkdv() {
    // u_t = u7 + 14u²u5 + 84u u1 u4 + 140u u2 u3 + 126u1²u3 + 182u1 u2²
    //     + 70u⁴u3 + 560u³u1 u2 + 420u²u1³ + 140u⁶u1, rescaled by k = 2u.
    let u = |m: usize| DiffPoly::kd(m) * DiffPoly::ratio(1, 2);
    let q = |n: i64| DiffPoly::int(n);
    let rhs = u(7)
        + q(14) * u(0).pow(2) * u(5)
        + q(84) * u(0) * u(1) * u(4)
        + q(140) * u(0) * u(2) * u(3)
        + q(126) * u(1).pow(2) * u(3)
        + q(182) * u(1) * u(2).pow(2)
        + q(70) * u(0).pow(4) * u(3)
        + q(560) * u(0).pow(3) * u(1) * u(2)
        + q(420) * u(0).pow(2) * u(1).pow(3)
        + q(140) * u(0).pow(6) * u(1);
    let h = mkdv_hierarchy(2).unwrap();
    assert_eq!(h[2].poly(), &(rhs * DiffPoly::int(2)));
}

use filament_core::curvegeom::{
    apply_field, bracket, bracket_arc, covariant_d, hamiltonian_field, lift, phi_hom, phi_of, rbar,
    rho_of, v_of_k,
};
use filament_core::derivations::commutator;
use filament_core::diffalg::rat;
use filament_core::hamiltonian::recursion;
use filament_core::random::{self, PolyShape};
use filament_core::{ArcPreservingField, DiffPoly, VariationField};

fn shape() -> PolyShape {
    PolyShape::small().with_g(0.3)
}

fn cyclic_sum(a: &VariationField, b: &VariationField, c: &VariationField) -> VariationField {
    let ab = bracket(a, &bracket(b, c));
    let bc = bracket(b, &bracket(c, a));
    let ca = bracket(c, &bracket(a, b));
    &(&ab + &bc) + &ca
}

#[test]
fn bracket_is_antisymmetric_and_bilinear() {
    let mut rng = random::rng(51);
    for _ in 0..50 {
        let u = random::field(&mut rng, &shape());
        let v = random::field(&mut rng, &shape());
        let w = random::field(&mut rng, &shape());
        assert_eq!(bracket(&u, &v), -&bracket(&v, &u));
        let c = rat(-3, 7);
        assert_eq!(bracket(&(&u + &w), &v), &bracket(&u, &v) + &bracket(&w, &v));
        assert_eq!(bracket(&u.scale(&c), &v), bracket(&u, &v).scale(&c));
    }
}

#[test]
fn jacobi_general_fields() {
    let mut rng = random::rng(52);
    for _ in 0..50 {
        let a = random::field(&mut rng, &shape());
        let b = random::field(&mut rng, &shape());
        let c = random::field(&mut rng, &shape());
        assert!(cyclic_sum(&a, &b, &c).is_zero());
    }
}

#[test]
fn jacobi_arc_preserving_fields() {
    let mut rng = random::rng(53);
    for _ in 0..50 {
        let a = random::arc_field(&mut rng, &shape());
        let b = random::arc_field(&mut rng, &shape());
        let c = random::arc_field(&mut rng, &shape());
        assert!(cyclic_sum(a.field(), b.field(), c.field()).is_zero());
    }
}

#[test]
fn arc_preserving_fields_are_closed_under_bracket() {
    let mut rng = random::rng(54);
    for _ in 0..50 {
        let v = random::arc_field(&mut rng, &shape());
        let w = random::arc_field(&mut rng, &shape());
        assert!(rho_of(v.field()).is_zero());
        let b = bracket(v.field(), w.field());
        assert!(rho_of(&b).is_zero(), "{v} / {w}");
        assert!(ArcPreservingField::from_field(b).is_some());
    }
}

#[test]
fn rho_of_bracket_is_bracket_of_rho() {
    let mut rng = random::rng(55);
    for _ in 0..50 {
        let v = random::field(&mut rng, &shape());
        let w = random::field(&mut rng, &shape());
        let lhs = rho_of(&bracket(&v, &w));
        let rhs = apply_field(&v, &rho_of(&w)) - apply_field(&w, &rho_of(&v));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn phi_of_bracket() {
    let mut rng = random::rng(56);
    for _ in 0..50 {
        let v = random::field(&mut rng, &shape());
        let w = random::field(&mut rng, &shape());
        let lhs = phi_of(&bracket(&v, &w));
        let rhs = apply_field(&v, &phi_of(&w))
            - apply_field(&w, &phi_of(&v))
            - DiffPoly::big_g() * (v.g() * w.f() - w.g() * v.f());
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn bracket_acts_as_commutator_of_fields() {
    let mut rng = random::rng(57);
    for _ in 0..50 {
        let v = random::field(&mut rng, &shape());
        let w = random::field(&mut rng, &shape());
        let p = random::poly(&mut rng, &shape());
        let lhs = apply_field(&bracket(&v, &w), &p);
        let rhs = apply_field(&v, &apply_field(&w, &p)) - apply_field(&w, &apply_field(&v, &p));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn phi_is_a_lie_algebra_homomorphism() {
    let mut rng = random::rng(58);
    for _ in 0..50 {
        let v = random::arc_field(&mut rng, &shape());
        let w = random::arc_field(&mut rng, &shape());
        let lhs = phi_hom(&bracket_arc(&v, &w));
        let rhs = commutator(&phi_hom(&v), &phi_hom(&w));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn velocity_of_curvature_for_lifted_fields() {
    let mut rng = random::rng(59);
    let k = DiffPoly::k;
    for _ in 0..50 {
        let v = random::arc_field(&mut rng, &shape());
        let g = v.g();
        let expected = g.total_derivative_n(2)
            + DiffPoly::kd(1) * (k() * g).antiderivative().unwrap()
            + (k().pow(2) + DiffPoly::big_g()) * g;
        assert_eq!(v_of_k(v.field()), expected);
        assert_eq!(lift(g).unwrap(), v);
    }
}

#[test]
fn covariant_derivative_is_metric() {
    let mut rng = random::rng(60);
    for _ in 0..50 {
        let v = random::field(&mut rng, &shape());
        let x = random::field(&mut rng, &shape());
        let y = random::field(&mut rng, &shape());
        let lhs = apply_field(&v, &x.inner(&y));
        let rhs = covariant_d(&v, &x).inner(&y) + x.inner(&covariant_d(&v, &y));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn phi_is_injective_on_plane_fields() {
    let flat = PolyShape::small();
    let mut rng = random::rng(61);
    for _ in 0..50 {
        let v = random::arc_field(&mut rng, &flat);
        if v.is_zero() {
            continue;
        }
        assert!(!phi_hom(&v).is_zero(), "{v}");
    }
}

#[test]
fn rbar_realizes_recursion_under_phi() {
    let flat = PolyShape::small();
    let mut rng = random::rng(62);
    let mut checked = 0;
    while checked < 30 {
        let v = random::arc_field(&mut rng, &flat);
        let Ok(rv) = rbar(&v) else { continue };
        let Ok(ra) = recursion(&phi_hom(&v)) else {
            continue;
        };
        assert_eq!(phi_hom(&rv), ra);
        checked += 1;
    }
}

#[test]
fn hamiltonian_fields_have_expected_velocity() {
    // X_L = π̄(dL) has Φ(X_L) = ∂_{𝒟 δL/δk} once G is set to zero.
    let flat = PolyShape::small();
    let mut rng = random::rng(63);
    for _ in 0..30 {
        let l = random::poly(&mut rng, &flat);
        let Ok(x) = hamiltonian_field(&l) else {
            continue;
        };
        let e = l.euler_derivative();
        let d = filament_core::hamiltonian::apply_d(&e).unwrap();
        assert_eq!(phi_hom(&x).at_flat().into_poly(), d);
    }
}

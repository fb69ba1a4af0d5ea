use binconic::binquad::BinaryQuadraticForm;
use binconic::gf2n::{ArtinSchreierSolver, FieldElement};
use binconic::pencil::{self, AlphaBetaPencil};
use binconic::pg2;
use binconic::FieldSpec;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gf(n: u32) -> FieldSpec {
    FieldSpec::with_degree(n).unwrap()
}

/// `D(w)` by repeated multiplication, independent of `square`/`trace`.
fn trace_by_powers(w: FieldElement) -> FieldElement {
    let n = w.field().degree();
    (0..n).fold(w.field().zero(), |acc, i| acc + w.pow(1u64 << i))
}

#[test]
fn frobenius_and_trace_additive_exhaustive_small() {
    for n in 1..=7 {
        let f = gf(n);
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!((a + b).square(), a.square() + b.square());
                assert_eq!((a + b).trace(), a.trace() + b.trace());
            }
        }
    }
}

#[test]
fn trace_matches_power_sum() {
    for n in 1..=10 {
        let f = gf(n);
        for w in f.elements() {
            let t = w.trace();
            assert!(t.bits() <= 1);
            assert_eq!(t, trace_by_powers(w));
            assert_eq!(w.square().trace(), t);
        }
    }
}

#[test]
fn inverse_exhaustive() {
    for n in 1..=8 {
        let f = gf(n);
        for a in f.nonzero_elements() {
            assert!((a * a.inv().unwrap()).is_one(), "n = {n}, a = {a}");
        }
    }
}

#[test]
fn artin_schreier_against_brute_force() {
    for n in 1..=8 {
        let f = gf(n);
        let solver = ArtinSchreierSolver::new(f);
        for c in f.elements() {
            let brute = f.elements().find(|&t| t.square() + t == c);
            let solved = solver.solve(&c);
            assert_eq!(brute.is_some(), solved.is_some(), "n = {n}, c = {c}");
            assert_eq!(solved.is_some(), c.trace().is_zero());
        }
    }
}

fn field_and_elements(
    max_n: u32,
    k: usize,
) -> impl Strategy<Value = (FieldSpec, Vec<FieldElement>)> {
    (1..=max_n).prop_flat_map(move |n| {
        let f = gf(n);
        proptest::collection::vec(0..f.order(), k)
            .prop_map(move |bits| (f, bits.into_iter().map(|b| f.element(b).unwrap()).collect()))
    })
}

proptest! {
    #[test]
    fn field_axioms((_f, v) in field_and_elements(24, 3)) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert!((a + a).is_zero());
    }

    #[test]
    fn sqrt_inverts_square((_f, v) in field_and_elements(24, 1)) {
        let a = v[0];
        prop_assert_eq!(a.square().sqrt(), a);
        prop_assert_eq!(a.sqrt().square(), a);
    }

    #[test]
    fn inverse_and_division((_f, v) in field_and_elements(24, 2)) {
        let (a, b) = (v[0], v[1]);
        if !a.is_zero() {
            prop_assert!((a * a.inv().unwrap()).is_one());
            prop_assert_eq!(b.checked_div(&a).unwrap() * a, b);
        }
    }

    #[test]
    fn trace_linear_large_fields((_f, v) in field_and_elements(24, 2)) {
        let (a, b) = (v[0], v[1]);
        prop_assert_eq!((a + b).trace(), a.trace() + b.trace());
        prop_assert_eq!((a + b).square(), a.square() + b.square());
    }

    #[test]
    fn artin_schreier_roots_verify((_f, v) in field_and_elements(24, 1)) {
        let c = v[0];
        match c.solve_artin_schreier() {
            Some(t) => {
                prop_assert!(c.trace().is_zero());
                prop_assert_eq!(t.square() + t, c);
                let t1 = t + c.field().one();
                prop_assert_eq!(t1.square() + t1, c);
            }
            None => prop_assert!(c.trace().is_one()),
        }
    }

    #[test]
    fn factor_witness_expands((_f, v) in field_and_elements(24, 1)) {
        let theta = v[0];
        prop_assume!(!theta.is_zero());
        let form = BinaryQuadraticForm::new(theta).unwrap();
        match form.factor() {
            Some(p) => {
                prop_assert!(!form.is_irreducible());
                prop_assert_eq!(p.a + p.b, theta);
                prop_assert!((p.a * p.b).is_one());
                prop_assert!(p.a.bits() < p.b.bits());
            }
            None => prop_assert!(form.is_irreducible()),
        }
    }
}

#[test]
fn random_pairs_mid_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in 9..=16 {
        let f = gf(n);
        for _ in 0..20_000 {
            let a = f.element(rng.random_range(0..f.order())).unwrap();
            let b = f.element(rng.random_range(0..f.order())).unwrap();
            assert_eq!((a + b).square(), a.square() + b.square());
            assert_eq!((a + b).trace(), a.trace() + b.trace());
        }
    }
}

#[test]
fn trace_zero_count() {
    for n in 1..=12 {
        let f = gf(n);
        let zeros = f.elements().filter(|w| w.trace().is_zero()).count();
        assert_eq!(zeros, 1 << (n - 1), "n = {n}");
    }
}

#[test]
fn criterion_and_oracle_count() {
    for n in 1..=8 {
        let f = gf(n);
        let mut irreducible = 0;
        for theta in f.nonzero_elements() {
            let form = BinaryQuadraticForm::new(theta).unwrap();
            assert_eq!(form.is_irreducible(), form.brute_force_factor().is_none());
            irreducible += form.is_irreducible() as u32;
        }
        assert_eq!(irreducible, 1 << (n - 1));
    }
}

/// Trace-level outcomes depend on the field, not on the chosen modulus.
#[test]
fn verdicts_independent_of_modulus() {
    let pairs = [(3, 0xb, 0xd), (4, 0x13, 0x19), (5, 0x25, 0x3b)];
    for (n, m1, m2) in pairs {
        let f1 = FieldSpec::new(n, Some(m1)).unwrap();
        let f2 = FieldSpec::new(n, Some(m2)).unwrap();
        let count = |f: &FieldSpec| {
            let irreducible = f
                .nonzero_elements()
                .filter(|&t| BinaryQuadraticForm::new(t).unwrap().is_irreducible())
                .count();
            let pairs = pencil::admissible_pairs(f);
            let real = pairs
                .iter()
                .filter(|&&(a, b)| {
                    let p = AlphaBetaPencil::new(a, b).unwrap();
                    pg2::classify(&p.c3()).kind() == pg2::VerdictKind::RealLinePair
                })
                .count();
            (irreducible, pairs.len(), real)
        };
        assert_eq!(count(&f1), count(&f2), "n = {n}");
    }
}

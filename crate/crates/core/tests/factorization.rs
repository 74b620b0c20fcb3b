use std::cmp::Ordering;

use proptest::prelude::*;

use constacyclic::gf::{Field, FieldRef};
use constacyclic::poly::{
    binomial_irreducible, egcd, factor_binomial, factor_binomial_seeded, Poly,
};

fn fields() -> Vec<FieldRef> {
    vec![
        Field::new(3, 1, None).unwrap(),
        Field::new(5, 1, None).unwrap(),
        Field::new(7, 1, None).unwrap(),
        Field::new(3, 2, None).unwrap(),
    ]
}

/// Irreducibility by trial division with every monic polynomial of degree at
/// most half, independent of the factoring code.
fn irreducible_by_search(f: &Poly) -> bool {
    let field = f.field();
    let d = f.degree().unwrap();
    let q = field.order();
    for k in 1..=d / 2 {
        for v in 0..q.pow(k as u32) {
            let mut coeffs: Vec<_> = (0..k)
                .map(|i| field.element(v / q.pow(i as u32) % q).unwrap())
                .collect();
            coeffs.push(field.one());
            if Poly::new(field, coeffs).divides(f).unwrap() {
                return false;
            }
        }
    }
    true
}

#[test]
fn binomial_factorizations_exhaustive() {
    for field in fields() {
        for n in (1..=10).filter(|n| *n as u64 % field.p() != 0) {
            for alpha0 in field.units() {
                let fact = factor_binomial(&field, n, alpha0).unwrap();
                let binomial = Poly::binomial(&field, n, alpha0);
                assert_eq!(fact.product(), binomial, "{field:?} n={n}");
                assert_eq!(fact.degrees().iter().sum::<usize>(), n);
                for w in fact.factors().windows(2) {
                    assert_eq!(w[0].canonical_cmp(&w[1]), Ordering::Less);
                }
                for g in fact.factors() {
                    assert!(g.is_monic());
                    if field.order().pow(g.degree().unwrap() as u32 / 2) <= 10_000 {
                        assert!(irreducible_by_search(g), "{g} over {field:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn factor_order_does_not_depend_on_the_seed() {
    for field in fields() {
        for n in [4, 8, 10].into_iter().filter(|n| *n as u64 % field.p() != 0) {
            for alpha0 in field.units().take(4) {
                let a = factor_binomial_seeded(&field, n, alpha0, 1).unwrap();
                let b = factor_binomial_seeded(&field, n, alpha0, 0xdead_beef).unwrap();
                assert_eq!(a.factors(), b.factors());
            }
        }
    }
}

#[test]
fn criterion_matches_factor_count() {
    for field in fields() {
        for n in (2..=12).filter(|n| *n as u64 % field.p() != 0) {
            for alpha0 in field.units() {
                if field.mult_order(alpha0).unwrap() == 1 {
                    assert!(binomial_irreducible(&field, n, alpha0).is_err());
                    continue;
                }
                let r = factor_binomial(&field, n, alpha0).unwrap().len();
                assert_eq!(binomial_irreducible(&field, n, alpha0).unwrap(), r == 1, "{field:?} n={n}");
            }
        }
    }
}

#[test]
fn reciprocals_of_binomial_factors() {
    // reciprocals of the factors of x^n - a are the factors of x^n - 1/a
    for field in fields() {
        for n in (1..=10).filter(|n| *n as u64 % field.p() != 0) {
            for alpha0 in field.units() {
                let fact = factor_binomial(&field, n, alpha0).unwrap();
                let inv = factor_binomial(&field, n, field.inv(alpha0).unwrap()).unwrap();
                let mut recips: Vec<Poly> = fact.factors().iter().map(|g| g.reciprocal_monic().unwrap()).collect();
                recips.sort_by(Poly::canonical_cmp);
                assert_eq!(recips, inv.factors());
                for g in fact.factors() {
                    assert_eq!(&g.reciprocal_monic().unwrap().reciprocal_monic().unwrap(), g);
                }
            }
        }
    }
}

fn arb_poly(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..9, 0..max_len)
}

proptest! {
    #[test]
    fn bezout(a in arb_poly(9), b in arb_poly(9)) {
        let field = Field::new(3, 2, None).unwrap();
        let f = Poly::from_ints(&field, &a).unwrap();
        let g = Poly::from_ints(&field, &b).unwrap();
        prop_assume!(!(f.is_zero() && g.is_zero()));
        let (d, s, t) = egcd(&f, &g).unwrap();
        prop_assert!(d.is_monic());
        prop_assert_eq!(&(&s * &f) + &(&t * &g), d.clone());
        prop_assert!(d.divides(&f).unwrap() && d.divides(&g).unwrap());
    }

    #[test]
    fn text_and_json_round_trip(a in arb_poly(12)) {
        let field = Field::new(3, 2, None).unwrap();
        let f = Poly::from_ints(&field, &a).unwrap();
        prop_assert_eq!(Poly::parse(&field, &f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(Poly::from_json(&f.to_json()).unwrap(), f);
    }
}

use hopfwind::exact::{kernel, rref, solve, specialize, CycloScalar, ExactError, Matrix, Poly, RatFunc, Scalar};
use proptest::prelude::*;

fn q() -> Scalar {
    Scalar::q()
}

#[test]
fn specialize_q_squared() {
    let f = RatFunc::q().pow(2);
    assert_eq!(specialize(&f, 3).unwrap(), CycloScalar::zeta_pow(3, 2));
}

#[test]
fn specialize_inverse_matches_ext_gcd_oracle() {
    // oracle: (z-1)^{-1} in Q(z3) is (-z-2)/3 since (z-1)(-z-2) = -z^2-z+2 = 3
    let f = RatFunc::q().sub(&RatFunc::one()).inv();
    let got = specialize(&f, 3).unwrap();
    let oracle = CycloScalar::new(Poly::from_ints(&[-2, -1]), 3);
    let third = CycloScalar::constant(hopfwind::Rational::new(1.into(), 3.into()), 3);
    assert_eq!(got, oracle.mul(&third));
}

#[test]
fn specialize_third_cyclotomic_vanishes() {
    let f = RatFunc::new(Poly::from_ints(&[-1, 0, 0, 1]), Poly::from_ints(&[-1, 1]));
    let (quo, rem) = Poly::from_ints(&[-1, 0, 0, 1]).div_rem(&Poly::from_ints(&[-1, 1]));
    assert!(rem.is_zero());
    assert_eq!(quo, Poly::from_ints(&[1, 1, 1]));
    assert!(specialize(&f, 3).unwrap().is_zero());
}

#[test]
fn specialize_rejects_vanishing_denominator() {
    let f = RatFunc::new(Poly::one(), Poly::from_ints(&[1, 1, 1]));
    assert_eq!(specialize(&f, 3), Err(ExactError::DenominatorVanishes));
    assert_eq!(specialize(&f, 4), Err(ExactError::InvalidLevel(4)));
}

#[test]
fn rref_trivial_cases() {
    let id = Matrix::identity(4);
    let r = rref(&id);
    assert_eq!(r.matrix, id);
    assert_eq!(r.rank, 4);
    let z = Matrix::zeros(3, 5);
    let r = rref(&z);
    assert_eq!(r.matrix, z);
    assert_eq!(r.rank, 0);
}

#[test]
fn rank_one_over_qq() {
    let m = Matrix::from_rows(vec![vec![Scalar::one(), q()], vec![q(), q() * q()]]);
    // determinant oracle: q^2 - q*q = 0
    assert!((m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)).is_zero());
    assert_eq!(m.rank(), 1);
}

#[test]
fn kernel_examples() {
    assert!(kernel(&Matrix::identity(3)).is_empty());
    assert_eq!(kernel(&Matrix::zeros(3, 3)).len(), 3);
    let m = Matrix::from_rows(vec![vec![Scalar::one(), q()]]);
    let k = kernel(&m);
    assert_eq!(k, vec![vec![-q(), Scalar::one()]]);
    assert!(m.mul_vec(&k[0]).iter().all(Scalar::is_zero));
}

#[test]
fn solve_examples() {
    let b = vec![Scalar::int(3), Scalar::frac(1, 2)];
    assert_eq!(solve(&Matrix::identity(2), &b), Some(b.clone()));
    let m = Matrix::from_rows(vec![vec![Scalar::one()], vec![Scalar::one()]]);
    assert_eq!(solve(&m, &[Scalar::int(1), Scalar::int(2)]), None);
    let m = Matrix::from_rows(vec![vec![q()]]);
    let x = solve(&m, &[q() * q()]).unwrap();
    assert_eq!(x, vec![q()]);
    assert_eq!(m.mul_vec(&x), vec![q() * q()]);
}

fn small_rat() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Scalar::frac(n, d))
}

fn small_func() -> impl Strategy<Value = Scalar> {
    (prop::collection::vec(-3i64..=3, 1..4), prop::collection::vec(-2i64..=2, 0..3), -2i64..=2).prop_map(|(n, d, k)| {
        let num = Scalar::from(Poly::from_ints(&n));
        let mut dc = d.clone();
        dc.push(1);
        let den = Scalar::from(Poly::from_ints(&dc));
        num / den * Scalar::q_pow(k)
    })
}

fn small_cyclo() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(-3i64..=3, 1..6).prop_map(|c| Scalar::from_cyclo(CycloScalar::new(Poly::from_ints(&c), 5)))
}

fn any_scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![small_rat(), small_func()]
}

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![3 => (-2i64..=2).prop_map(Scalar::int), 1 => Just(Scalar::q())], r * c)
            .prop_map(move |v| Matrix::from_fn(r, c, |i, j| v[i * c + j].clone()))
    })
}

proptest! {
    #[test]
    fn field_axioms_qq(a in any_scalar(), b in any_scalar(), c in any_scalar()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * a.inv()).is_one());
        }
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn field_axioms_cyclo(a in small_cyclo(), b in small_cyclo(), c in small_cyclo()) {
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        if !a.is_zero() {
            prop_assert!((&a * a.inv()).is_one());
        }
    }

    #[test]
    fn display_parse_round_trip(a in any_scalar()) {
        let s = a.to_string();
        prop_assert_eq!(Scalar::parse(&s, hopfwind::FieldTag::RatFunc).unwrap(), a);
    }

    #[test]
    fn rref_idempotent(m in small_matrix()) {
        let r = m.rref().matrix;
        prop_assert_eq!(r.rref().matrix, r);
    }

    #[test]
    fn rank_nullity(m in small_matrix()) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn specialize_is_multiplicative(a in small_func(), b in small_func()) {
        let (Scalar::Func(f), Scalar::Func(g)) = (&a, &b) else { return Ok(()); };
        if let (Ok(sf), Ok(sg)) = (specialize(f, 5), specialize(g, 5)) {
            let fg = f.mul(g);
            prop_assert_eq!(specialize(&fg, 5).unwrap(), sf.mul(&sg));
        }
    }
}

use hopfwind::descent::*;
use hopfwind::exact::{FieldTag, Rational};
use hopfwind::hopf::builders::{enveloping, group_algebra, laurent, quantum_sl, quantum_sl_chain, structure_from_brackets};
use hopfwind::hopf::{Character, HopfPresentation, PolycyclicGroup};
use hopfwind::rewrite::{parse_poly, NCPoly};
use hopfwind::Scalar;
use proptest::prelude::*;

fn sl(n: usize) -> HopfPresentation {
    quantum_sl(n, &Scalar::q(), 6).unwrap()
}

fn gen(h: &HopfPresentation, s: &str) -> NCPoly {
    h.gen(s)
}

/// π₀(X_ii) = q^{2(n+1-2i)} and 0 off the diagonal, 1-based i.
fn pi0_oracle(n: usize, q: &Scalar) -> Vec<Scalar> {
    let mut v = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            v.push(if i == j { q.pow(2 * (n as i64 + 1 - 2 * i as i64)) } else { Scalar::zero() });
        }
    }
    v
}

/// ν(X_ij) = q^{2(n+1-i-j)} X_ij.
fn nu_oracle(n: usize) -> Vec<Scalar> {
    (1..=n).flat_map(|i| (1..=n).map(move |j| Scalar::q_pow(2 * (n as i64 + 1 - i as i64 - j as i64)))).collect()
}

#[test]
fn sl2_descent() {
    let h = sl(2);
    let (pi, trace) = descend(&h, &quantum_sl_chain(2)).unwrap();
    assert_eq!(pi.values, pi0_oracle(2, &Scalar::q()));
    assert_eq!(pi.values, vec![Scalar::q_pow(2), Scalar::zero(), Scalar::zero(), Scalar::q_pow(-2)]);
    assert_eq!(trace.base, BaseCase::Laurent);
    assert_eq!(trace.surviving, vec![0, 3]);
    assert_eq!(trace.steps.len(), 2);
    // X12·X11 = q⁻¹X11·X12 and X22·X12 = q⁻¹X12·X22
    assert_eq!(trace.steps[0].tau[0], Scalar::q_pow(-1));
    assert_eq!(trace.steps[0].tau[3], Scalar::q());
    assert!(trace.steps.iter().all(|s| s.certificate >= 1));
}

#[test]
fn sl2_chain_order_does_not_matter() {
    let h = sl(2);
    let forward = descend(&h, &[gen(&h, "X12"), gen(&h, "X21")]).unwrap().0;
    let backward = descend(&h, &[gen(&h, "X21"), gen(&h, "X12")]).unwrap().0;
    assert_eq!(forward, backward);
}

#[test]
fn sl3_descent() {
    let h = sl(3);
    let (pi, trace) = descend(&h, &quantum_sl_chain(3)).unwrap();
    assert_eq!(pi.values, pi0_oracle(3, &Scalar::q()));
    assert_eq!([&pi.values[0], &pi.values[4], &pi.values[8]], [&Scalar::q_pow(4), &Scalar::one(), &Scalar::q_pow(-4)]);
    assert_eq!(trace.steps.len(), 6);
    for r in h.algebra.relations() {
        assert!(pi.eval(&r).is_zero(), "{}", h.fmt(&r));
    }
}

#[test]
fn commutative_sl2_gives_counit() {
    let h = quantum_sl(2, &Scalar::one(), 6).unwrap();
    let (pi, trace) = descend(&h, &quantum_sl_chain(2)).unwrap();
    assert!(pi.is_counit(&h));
    assert!(trace.steps.iter().all(|s| s.tau.iter().all(Scalar::is_one)));
}

#[test]
fn nakayama_of_quantum_sl() {
    for n in [2, 3] {
        let h = sl(n);
        let (pi, _) = descend(&h, &quantum_sl_chain(n)).unwrap();
        let nu = nakayama_presented(&h, &pi).unwrap();
        assert!(is_diagonal(&nu));
        assert_eq!(nu.diagonal_scalars().unwrap(), nu_oracle(n));
        // ξ(X_ij) = q^{2(n+1-2i)} X_ij: constant along rows
        let xi = xi_of(&h, &pi).unwrap().diagonal_scalars().unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(xi[i * n + j], Scalar::q_pow(2 * (n as i64 + 1 - 2 * (i as i64 + 1))));
            }
        }
    }
}

#[test]
fn enveloping_nakayama_from_trace() {
    // [x, y] = x: ad x has trace 0, ad y has trace -1
    let c = structure_from_brackets(2, &[(0, 1, vec![(0, Scalar::one())])]);
    let trace: Vec<Scalar> = (0..2).map(|k| (0..2).fold(Scalar::zero(), |acc, j| acc + &c[k][j][j])).collect();
    assert_eq!(trace, vec![Scalar::zero(), Scalar::int(-1)]);
    let h = enveloping("U(b)", vec!["x".into(), "y".into()], c, 6).unwrap();
    let pi = Character::new(&h, trace).unwrap();
    let nu = nakayama_presented(&h, &pi).unwrap();
    let p = |s: &str| parse_poly(s, h.names(), FieldTag::Rational).unwrap();
    assert_eq!(nu.images, vec![p("x"), p("y - 1")]);
}

#[test]
fn free_abelian_group_nakayama_is_identity() {
    for d in 1..=3 {
        let h = laurent(d);
        let t = adjoint_trace(&h).unwrap();
        assert!(t.is_counit(&h));
        assert!(nakayama_presented(&h, &t).unwrap().is_identity());
    }
}

#[test]
fn klein_bottle_adjoint_trace() {
    let h = group_algebra(PolycyclicGroup::klein_bottle());
    let t = adjoint_trace(&h).unwrap();
    // letters x, t, x_inv, t_inv
    assert_eq!(t.values, vec![Scalar::one(), Scalar::int(-1), Scalar::one(), Scalar::int(-1)]);
    let nu = nakayama_presented(&h, &Character::new(&h, t.values.clone()).unwrap()).unwrap();
    for (g, v) in t.values.iter().enumerate() {
        assert_eq!(nu.images[g], NCPoly::gen(g).scale(v));
    }
}

#[test]
fn heisenberg_adjoint_trace_is_trivial() {
    let h = group_algebra(PolycyclicGroup::heisenberg());
    assert!(adjoint_trace(&h).unwrap().is_counit(&h));
    assert!(adjoint_trace(&sl(2)).is_none());
}

#[test]
fn descent_errors() {
    let h = sl(2);
    assert!(matches!(descend(&h, &[gen(&h, "X11")]), Err(DescentError::NotAugmented { step: 0, .. })));
    let x11m1 = gen(&h, "X11").sub(&NCPoly::one());
    assert!(matches!(descend(&h, &[x11m1]), Err(DescentError::NotNormal { step: 0, .. })));
    assert!(matches!(descend(&h, &[gen(&h, "X12")]), Err(DescentError::BaseCaseUnrecognized(_))));
    assert!(matches!(descend(&h, &[gen(&h, "X12"), gen(&h, "X12")]), Err(DescentError::ZeroDivisor { step: 1, .. })));
    let weak = quantum_sl(2, &Scalar::q(), 1).unwrap();
    assert!(matches!(descend(&weak, &quantum_sl_chain(2)), Err(DescentError::CertificateTooWeak { step: 0, .. })));
    assert!(matches!(descend(&laurent(1), &[]), Err(DescentError::NotPresented)));
}

#[test]
fn candidates_in_sl3() {
    let h = sl(3);
    let sys = h.algebra.as_rules().unwrap();
    let names: Vec<&str> = normal_candidates(&h, sys).iter().map(|&g| h.names()[g].as_str()).collect();
    assert_eq!(names, ["X13", "X31"]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn sl2_descent_at_rational_q(a in 2i64..6, b in 1i64..6, neg in any::<bool>()) {
        let q = Scalar::Rat(Rational::new((if neg { -a } else { a }).into(), b.into()));
        let h = quantum_sl(2, &q, 6).unwrap();
        let (pi, _) = descend(&h, &quantum_sl_chain(2)).unwrap();
        prop_assert_eq!(pi.values, pi0_oracle(2, &q));
    }
}

use hopfwind::exact::FieldTag;
use hopfwind::hopf::builders::{quantum_matrices, quantum_matrix_rules, quantum_sl};
use hopfwind::rewrite::{parse_poly, NCPoly, RewriteError, RewriteRule, RewriteSystem, Word};
use hopfwind::Scalar;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn w(v: &[u16]) -> Word {
    Word(v.to_vec())
}

fn quantum_plane() -> RewriteSystem {
    // x ≺ y, y·x → q·x·y
    let rule = RewriteRule::new(w(&[1, 0]), NCPoly::term(w(&[0, 1]), Scalar::q()));
    RewriteSystem::new(names(&["x", "y"]), vec![rule]).unwrap().complete(6).unwrap()
}

fn commutative(n: usize) -> RewriteSystem {
    let mut rules = Vec::new();
    for i in 0..n as u16 {
        for j in i + 1..n as u16 {
            rules.push(RewriteRule::new(w(&[j, i]), NCPoly::word(w(&[i, j]))));
        }
    }
    let ns: Vec<String> = (0..n).map(|i| format!("y{i}")).collect();
    RewriteSystem::new(ns, rules).unwrap()
}

fn p(sys: &RewriteSystem, s: &str) -> NCPoly {
    parse_poly(s, sys.names(), FieldTag::RatFunc).unwrap()
}

#[test]
fn quantum_plane_normal_forms() {
    let s = quantum_plane();
    assert_eq!(s.normal_form(&p(&s, "x")), p(&s, "x"));
    assert_eq!(s.normal_form(&p(&s, "y*x")), p(&s, "q*x*y"));
    // y·y·x → y·(q x y) → q·(q x y)·y
    assert_eq!(s.normal_form(&p(&s, "y*y*x")), p(&s, "q^2*x*y*y"));
    assert_eq!(s.rules().len(), 1);
}

#[test]
fn misoriented_rule_is_rejected() {
    let bad = RewriteRule::new(w(&[0, 1]), NCPoly::word(w(&[1, 0])));
    assert!(matches!(RewriteSystem::new(names(&["x", "y"]), vec![bad]), Err(RewriteError::OrderViolation(_))));
}

#[test]
fn step_budget_is_enforced() {
    let s = commutative(3).with_step_budget(2);
    let r = s.try_normal_form(&NCPoly::word(w(&[2, 1, 0, 2, 1, 0])));
    assert!(matches!(r, Err(RewriteError::StepBudgetExceeded(2))));
}

#[test]
fn commutative_system_already_confluent() {
    let s = commutative(3);
    let c = s.complete(6).unwrap();
    assert_eq!(c.rules(), s.rules());
    assert_eq!(c.certificate(), 6);
}

#[test]
fn quantum_2x2_matrices_need_no_new_rules() {
    let base = RewriteSystem::new(names(&["X11", "X12", "X21", "X22"]), quantum_matrix_rules(2, &Scalar::q())).unwrap();
    let c = base.complete(6).unwrap();
    assert_eq!(c.rules().len(), 6);
    let mut a: Vec<_> = base.rules().to_vec();
    a.sort_by(|x, y| x.lhs.cmp(&y.lhs));
    assert_eq!(c.rules(), &a[..]);
}

#[test]
fn central_element_has_trivial_tau() {
    let s = commutative(3).complete(6).unwrap();
    let tau = s.is_tau_normal(&p(&s, "y0*y1 + 3")).unwrap().unwrap();
    assert!(tau.iter().all(Scalar::is_one));
}

#[test]
fn quantum_plane_tau() {
    // x·y = q⁻¹·y·x, so τ(y) = q⁻¹·y and τ(x) = x
    let s = quantum_plane();
    let tau = s.is_tau_normal(&p(&s, "x")).unwrap().unwrap();
    assert_eq!(tau, vec![Scalar::one(), Scalar::q_pow(-1)]);
    let y = p(&s, "y");
    let lhs = s.normal_form(&p(&s, "x").mul(&y));
    let rhs = s.normal_form(&y.scale(&tau[1]).mul(&p(&s, "x")));
    assert_eq!(lhs, rhs);
}

#[test]
fn x12_in_quantum_matrices_is_normal() {
    let h = quantum_matrices(2, &Scalar::q(), 6).unwrap();
    let s = h.algebra.as_rules().unwrap();
    let tau = s.is_tau_normal(&p(s, "X12")).unwrap().unwrap();
    // X12·X11 = q⁻¹X11·X12 and X22·X12 = q⁻¹X12·X22
    assert_eq!(tau, vec![Scalar::q_pow(-1), Scalar::one(), Scalar::one(), Scalar::q()]);
}

#[test]
fn non_normal_element_gives_none() {
    let h = quantum_matrices(2, &Scalar::q(), 6).unwrap();
    let s = h.algebra.as_rules().unwrap();
    assert_eq!(s.is_tau_normal(&p(s, "X11")).unwrap(), None);
}

#[test]
fn tau_needs_confluence() {
    let s = RewriteSystem::new(names(&["x", "y"]), vec![]).unwrap();
    assert!(matches!(s.is_tau_normal(&p(&s, "x")), Err(RewriteError::InsufficientConfluence { .. })));
}

#[test]
fn quotient_kills_a_generator() {
    let h = quantum_matrices(2, &Scalar::q(), 6).unwrap();
    let s = h.algebra.as_rules().unwrap();
    let qt = s.quotient(&p(s, "X12"), 6).unwrap();
    assert_eq!(qt.normal_form(&p(&qt, "X12")), NCPoly::zero());
    assert_eq!(qt.killed_generators(), vec![1]);
    // the surviving relations: X21 X11 → q⁻¹X11 X21, X22 X21 → q⁻¹X21 X22, X22 X11 → X11 X22
    assert_eq!(qt.normal_form(&p(&qt, "X22*X11")), p(&qt, "X11*X22"));
    assert_eq!(qt.normal_form(&p(&qt, "X21*X11")), p(&qt, "1/q*X11*X21"));
    assert_eq!(qt.normal_form(&p(&qt, "X22*X21")), p(&qt, "1/q*X21*X22"));
}

#[test]
fn quotient_of_polynomial_ring_by_x_minus_one() {
    let s = commutative(2).complete(6).unwrap();
    let qt = s.quotient(&p(&s, "y0 - 1"), 6).unwrap();
    assert_eq!(qt.normal_form(&p(&qt, "y0*y1*y0")), p(&qt, "y1"));
}

#[test]
fn iterated_quotient_of_sl2() {
    let h = quantum_sl(2, &Scalar::q(), 6).unwrap();
    let s = h.algebra.as_rules().unwrap();
    let a = s.quotient(&p(s, "X12"), 6).unwrap();
    let b = a.quotient(&p(&a, "X21"), 6).unwrap();
    assert!(b.is_commutative());
    assert_eq!(b.normal_form(&p(&b, "X11*X22")), NCPoly::one());
    assert_eq!(b.normal_form(&p(&b, "X22*X11")), NCPoly::one());
    assert_eq!(b.killed_generators(), vec![1, 2]);
}

#[test]
fn nonzerodivisor_certificate() {
    let h = quantum_matrices(2, &Scalar::q(), 6).unwrap();
    let s = h.algebra.as_rules().unwrap();
    assert_eq!(s.certify_nonzerodivisor(&p(s, "X12"), 6).unwrap(), Some(5));
    let z = commutative(2).complete(4).unwrap();
    assert_eq!(z.certify_nonzerodivisor(&NCPoly::zero(), 4).unwrap(), None);
}

fn small_poly(ngens: u16, max_len: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((prop::collection::vec(0..ngens, 0..=max_len), -3i64..=3), 0..4)
        .prop_map(|ts| NCPoly::from_terms(ts.into_iter().map(|(v, c)| (Word(v), Scalar::int(c)))))
}

fn sl2() -> RewriteSystem {
    quantum_sl(2, &Scalar::q(), 6).unwrap().algebra.as_rules().unwrap().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_idempotent_and_linear(a in small_poly(4, 4), b in small_poly(4, 4), c in -3i64..=3) {
        let s = sl2();
        let na = s.normal_form(&a);
        prop_assert_eq!(s.normal_form(&na), na.clone());
        let lin = s.normal_form(&a.add(&b.scale(&Scalar::int(c))));
        prop_assert_eq!(lin, na.add(&s.normal_form(&b).scale(&Scalar::int(c))));
        for (w, _) in s.normal_form(&a).terms() {
            prop_assert!(s.is_normal_word(w));
        }
    }

    #[test]
    fn normal_form_multiplicative(a in small_poly(4, 3), b in small_poly(4, 3)) {
        let s = sl2();
        let direct = s.normal_form(&a.mul(&b));
        let via = s.normal_form(&s.normal_form(&a).mul(&s.normal_form(&b)));
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn reduction_order_does_not_matter(v in prop::collection::vec(0u16..4, 0..=6), seed in any::<u64>()) {
        let s = sl2();
        let x = NCPoly::word(Word(v));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shuffled = s.normal_form_with(&x, &mut |n| rng.gen_range(0..n));
        prop_assert_eq!(shuffled, s.normal_form(&x));
    }

    #[test]
    fn reduction_order_does_not_matter_in_oq_m3(v in prop::collection::vec(0u16..9, 0..=5), seed in any::<u64>()) {
        let s = RewriteSystem::new((1..=3).flat_map(|i| (1..=3).map(move |j| format!("X{i}{j}"))).collect(), quantum_matrix_rules(3, &Scalar::q()))
            .unwrap()
            .complete(5)
            .unwrap();
        let x = NCPoly::word(Word(v));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert_eq!(s.normal_form_with(&x, &mut |n| rng.gen_range(0..n)), s.normal_form(&x));
    }

    #[test]
    fn tau_normal_law(g in 0usize..4) {
        let h = quantum_matrices(2, &Scalar::q(), 6).unwrap();
        let s = h.algebra.as_rules().unwrap();
        for x in ["X12", "X21"] {
            let xp = parse_poly(x, s.names(), FieldTag::RatFunc).unwrap();
            let tau = s.is_tau_normal(&xp).unwrap().unwrap();
            let gp = NCPoly::gen(g);
            let d = xp.mul(&gp).sub(&gp.scale(&tau[g]).mul(&xp));
            prop_assert!(s.normal_form(&d).is_zero());
        }
    }
}

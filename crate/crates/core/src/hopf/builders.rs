//! Presentations of the standard example families.

use super::algebra::{Algebra, GroupAlgebra};
use super::group::PolycyclicGroup;
use super::presentation::{Family, HopfPresentation};
use super::HopfError;
use crate::exact::{FieldTag, Scalar};
use crate::rewrite::{NCPoly, RewriteRule, RewriteSystem, Word};

/// Default completion degree.
pub const DEFAULT_DEGREE: usize = 6;

fn qx(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

fn word2(a: usize, b: usize) -> Word {
    Word(vec![a as u16, b as u16])
}

fn matrix_names(n: usize) -> Vec<String> {
    (0..n).flat_map(|i| (0..n).map(move |j| format!("X{}{}", i + 1, j + 1))).collect()
}

fn field_of(q: &Scalar) -> FieldTag {
    match q.field() {
        FieldTag::Rational => FieldTag::Rational,
        f => f,
    }
}

/// The quantum matrix relations as oriented rules, generators X_ij in row-major order.
pub fn quantum_matrix_rules(n: usize, q: &Scalar) -> Vec<RewriteRule> {
    let qi = q.inv();
    let mut rules = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let (a, b) = (qx(n, i, j), qx(n, k, l));
                    if a >= b {
                        continue;
                    }
                    // b = X_kl is the later generator; lhs is X_kl X_ij
                    let lhs = word2(b, a);
                    let rhs = if i == k {
                        NCPoly::term(word2(a, b), qi.clone())
                    } else if j == l {
                        NCPoly::term(word2(a, b), qi.clone())
                    } else if j < l {
                        let mut p = NCPoly::word(word2(a, b));
                        p.add_term(word2(qx(n, i, l), qx(n, k, j)), &-(q - &qi));
                        p
                    } else {
                        NCPoly::word(word2(a, b))
                    };
                    rules.push(RewriteRule::new(lhs, rhs));
                }
            }
        }
    }
    rules
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, m - 1);
            out.push(v);
        }
    }
    out.sort();
    out
}

fn inversions(p: &[usize]) -> i64 {
    let mut c = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                c += 1;
            }
        }
    }
    c
}

/// Quantum minor on rows I and columns J: Σ_σ (−q)^{ℓ(σ)} X_{I_1 J_σ1} ⋯ X_{I_m J_σm}.
pub fn quantum_minor(n: usize, q: &Scalar, rows: &[usize], cols: &[usize]) -> NCPoly {
    let mq = -q;
    let mut p = NCPoly::zero();
    for s in permutations(rows.len()) {
        let w = Word(rows.iter().zip(&s).map(|(&r, &c)| qx(n, r, cols[c]) as u16).collect());
        p.add_term(w, &mq.pow(inversions(&s)));
    }
    p
}

fn matrix_coalgebra(n: usize) -> (Vec<Vec<(NCPoly, NCPoly)>>, Vec<Scalar>) {
    let mut cop = Vec::new();
    let mut eps = Vec::new();
    for i in 0..n {
        for j in 0..n {
            cop.push((0..n).map(|t| (NCPoly::gen(qx(n, i, t)), NCPoly::gen(qx(n, t, j)))).collect());
            eps.push(if i == j { Scalar::one() } else { Scalar::zero() });
        }
    }
    (cop, eps)
}

/// O_q(M_n): a bialgebra (no antipode).
pub fn quantum_matrices(n: usize, q: &Scalar, degree_bound: usize) -> Result<HopfPresentation, HopfError> {
    let sys = RewriteSystem::new(matrix_names(n), quantum_matrix_rules(n, q))?.complete(degree_bound)?;
    let (coproduct, counit) = matrix_coalgebra(n);
    Ok(HopfPresentation {
        name: format!("O_q(M_{n})"),
        field: field_of(q),
        algebra: Algebra::Rules(sys),
        coproduct,
        counit,
        antipode: None,
        antipode_inv: None,
        family: Family::QuantumMatrices { n },
    })
}

/// O_q(SL_n) with the quantum determinant set to 1 and the quantum cofactor antipode.
pub fn quantum_sl(n: usize, q: &Scalar, degree_bound: usize) -> Result<HopfPresentation, HopfError> {
    assert!(n >= 2, "O_q(SL_n) needs n ≥ 2");
    let base = RewriteSystem::new(matrix_names(n), quantum_matrix_rules(n, q))?;
    let all: Vec<usize> = (0..n).collect();
    let det = quantum_minor(n, q, &all, &all).sub(&NCPoly::one());
    let sys = base.with_relations(&[det], degree_bound)?;
    let (coproduct, counit) = matrix_coalgebra(n);
    let mq = -q;
    let mut s = Vec::new();
    let mut sinv = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let img = quantum_minor(n, q, &rows, &cols).scale(&mq.pow(i as i64 - j as i64));
            let img = sys.normal_form(&img);
            sinv.push(img.scale(&q.pow(2 * (j as i64 - i as i64))));
            s.push(img);
        }
    }
    Ok(HopfPresentation {
        name: format!("O_q(SL_{n})"),
        field: field_of(q),
        algebra: Algebra::Rules(sys),
        coproduct,
        counit,
        antipode: Some(s),
        antipode_inv: Some(sinv),
        family: Family::QuantumSl { n },
    })
}

/// The descent chain used for O_q(SL_n): off-diagonal pairs by decreasing j − i,
/// and within one anti-diagonal by decreasing i.
pub fn quantum_sl_chain(n: usize) -> Vec<NCPoly> {
    let mut out = Vec::new();
    for d in (1..n).rev() {
        for i in (0..n - d).rev() {
            out.push(NCPoly::gen(qx(n, i, i + d)));
            out.push(NCPoly::gen(qx(n, i + d, i)));
        }
    }
    out
}

/// Checks the Jacobi identity for c[i][j][k], [x_i, x_j] = Σ c[i][j][k] x_k.
pub fn check_jacobi(c: &[Vec<Vec<Scalar>>]) -> Result<(), HopfError> {
    let d = c.len();
    for i in 0..d {
        for j in 0..d {
            if (0..d).any(|k| c[i][j][k] != -&c[j][i][k]) {
                return Err(HopfError::JacobiViolation(format!("bracket not antisymmetric at ({i},{j})")));
            }
        }
    }
    // [[x_i,x_j],x_k] + cyclic = 0
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for m in 0..d {
                    let mut s = Scalar::zero();
                    for t in 0..d {
                        s += &(&c[i][j][t] * &c[t][k][m]);
                        s += &(&c[j][k][t] * &c[t][i][m]);
                        s += &(&c[k][i][t] * &c[t][j][m]);
                    }
                    if !s.is_zero() {
                        return Err(HopfError::JacobiViolation(format!("Jacobi fails on ({i},{j},{k})")));
                    }
                }
            }
        }
    }
    Ok(())
}

/// U(g) with primitive generators.
pub fn enveloping(name: &str, names: Vec<String>, c: Vec<Vec<Vec<Scalar>>>, degree_bound: usize) -> Result<HopfPresentation, HopfError> {
    check_jacobi(&c)?;
    let d = names.len();
    let mut rules = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let mut rhs = NCPoly::word(word2(i, j));
            for (k, ck) in c[i][j].iter().enumerate() {
                rhs.add_term(Word::gen(k), &-ck);
            }
            rules.push(RewriteRule::new(word2(j, i), rhs));
        }
    }
    let field = c.iter().flatten().flatten().map(Scalar::field).max().unwrap_or(FieldTag::Rational);
    let sys = RewriteSystem::new(names, rules)?.complete(degree_bound)?;
    let prim: Vec<Vec<(NCPoly, NCPoly)>> = (0..d).map(|g| vec![(NCPoly::gen(g), NCPoly::one()), (NCPoly::one(), NCPoly::gen(g))]).collect();
    let s: Vec<NCPoly> = (0..d).map(|g| NCPoly::gen(g).neg()).collect();
    Ok(HopfPresentation {
        name: name.into(),
        field,
        algebra: Algebra::Rules(sys),
        coproduct: prim,
        counit: vec![Scalar::zero(); d],
        antipode: Some(s.clone()),
        antipode_inv: Some(s),
        family: Family::Enveloping { structure: c },
    })
}

/// Structure constants from a list of brackets [x_i, x_j] = Σ coeff·x_k (i < j).
pub fn structure_from_brackets(d: usize, brackets: &[(usize, usize, Vec<(usize, Scalar)>)]) -> Vec<Vec<Vec<Scalar>>> {
    let mut c = vec![vec![vec![Scalar::zero(); d]; d]; d];
    for (i, j, terms) in brackets {
        for (k, v) in terms {
            c[*i][*j][*k] = v.clone();
            c[*j][*i][*k] = -v;
        }
    }
    c
}

/// The group algebra of a polycyclic group, with S(x) = x⁻¹.
pub fn group_algebra(group: PolycyclicGroup) -> HopfPresentation {
    let n = group.rank();
    let name = format!("k[{}]", group.name);
    let ga = GroupAlgebra::new(group);
    let m = 2 * n;
    let coproduct = (0..m).map(|g| vec![(NCPoly::gen(g), NCPoly::gen(g))]).collect();
    let s: Vec<NCPoly> = (0..m).map(|g| NCPoly::gen(if g < n { g + n } else { g - n })).collect();
    HopfPresentation {
        name,
        field: FieldTag::Rational,
        algebra: Algebra::Group(ga),
        coproduct,
        counit: vec![Scalar::one(); m],
        antipode: Some(s.clone()),
        antipode_inv: Some(s),
        family: Family::Group,
    }
}

/// k[x_1^{±1}, …, x_n^{±1}] = kZ^n.
pub fn laurent(n: usize) -> HopfPresentation {
    let mut h = group_algebra(PolycyclicGroup::free_abelian(n));
    h.name = format!("k[Z^{n}]");
    h
}

/// U_q(sl_2) on E, F, K, K⁻¹ with KE = q²EK and Δ(E) = E⊗1 + K⊗E.
pub fn uq_sl2(q: &Scalar, degree_bound: usize) -> Result<HopfPresentation, HopfError> {
    let names: Vec<String> = ["E", "F", "K", "Kinv"].iter().map(|s| s.to_string()).collect();
    let (e, f, k, ki) = (0, 1, 2, 3);
    let q2 = q.pow(2);
    let qm2 = q.pow(-2);
    let g = NCPoly::gen;
    let rules = vec![
        RewriteRule::new(word2(k, ki), NCPoly::one()),
        RewriteRule::new(word2(ki, k), NCPoly::one()),
        RewriteRule::new(word2(k, e), NCPoly::term(word2(e, k), q2.clone())),
        RewriteRule::new(word2(k, f), NCPoly::term(word2(f, k), qm2.clone())),
        RewriteRule::new(word2(ki, e), NCPoly::term(word2(e, ki), qm2)),
        RewriteRule::new(word2(ki, f), NCPoly::term(word2(f, ki), q2)),
        RewriteRule::new(word2(f, e), NCPoly::word(word2(e, f)).sub(&g(k).sub(&g(ki)).scale(&(q - &q.inv()).inv()))),
    ];
    let sys = RewriteSystem::new(names, rules)?.complete(degree_bound)?;
    let coproduct = vec![
        vec![(g(e), NCPoly::one()), (g(k), g(e))],
        vec![(g(f), g(ki)), (NCPoly::one(), g(f))],
        vec![(g(k), g(k))],
        vec![(g(ki), g(ki))],
    ];
    let s = vec![g(ki).mul(&g(e)).neg(), g(f).mul(&g(k)).neg(), g(ki), g(k)];
    let sinv = vec![g(e).mul(&g(ki)).neg(), g(k).mul(&g(f)).neg(), g(ki), g(k)];
    let s = s.iter().map(|p| sys.normal_form(p)).collect();
    let sinv = sinv.iter().map(|p| sys.normal_form(p)).collect();
    Ok(HopfPresentation {
        name: "U_q(sl_2)".into(),
        field: field_of(q),
        algebra: Algebra::Rules(sys),
        coproduct,
        counit: vec![Scalar::zero(), Scalar::zero(), Scalar::one(), Scalar::one()],
        antipode: Some(s),
        antipode_inv: Some(sinv),
        family: Family::UqSl2,
    })
}

//! Free resolutions of the trivial left module: Chevalley–Eilenberg for U(g)
//! and iterated mapping cones for polycyclic group algebras.

use std::fmt::Write as _;

use serde::Serialize;

use super::coeff::CoefficientModule;
use super::engine::{Direction, Engine, Layers};
use super::HomologyError;
use crate::exact::{FieldTag, Matrix, Scalar, SparseVec};
use crate::hopf::builders::check_jacobi;
use crate::hopf::{Algebra, Family, HopfPresentation};
use crate::rewrite::{parse_poly, NCPoly, Word};

/// Rows are basis elements of the source, columns of the target.
pub type PolyMatrix = Vec<Vec<NCPoly>>;

/// Which side a module or complex lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ResolutionKind {
    ChevalleyEilenberg,
    Tower,
    Bar,
}

impl ResolutionKind {
    pub fn name(&self) -> &'static str {
        match self {
            ResolutionKind::ChevalleyEilenberg => "ce",
            ResolutionKind::Tower => "tower",
            ResolutionKind::Bar => "bar",
        }
    }
}

/// A k-linear map stored by the images of source basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub rows: Vec<SparseVec>,
}

impl LinearMap {
    pub fn rank(&self) -> usize {
        crate::exact::sparse_rank(self.rows.iter().cloned())
    }

    /// self followed by `next`.
    pub fn then(&self, next: &LinearMap) -> LinearMap {
        let rows = self
            .rows
            .iter()
            .map(|r| r.entries().iter().fold(SparseVec::new(), |acc, (i, c)| acc.axpy(c, &next.rows[*i])))
            .collect();
        LinearMap { source_dim: self.source_dim, target_dim: next.target_dim, rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Differentials {
    /// Over a presented algebra: e_J ↦ Σ_K D[J][K] e_K.
    Poly(Vec<PolyMatrix>),
    /// Over k, for the bar complex of a finite-dimensional algebra.
    Linear(Vec<LinearMap>),
}

/// A complex of free modules P_0 ← P_1 ← … ← P_d. For `Side::Left` the
/// modules are left modules and each differential is right multiplication by
/// its matrix: a·e_J ↦ Σ_K a·D[J][K]·e_K. `diffs[i − 1]` is d_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    pub kind: ResolutionKind,
    pub side: Side,
    /// Free ranks over A (presented) or over A^e (bar).
    pub ranks: Vec<usize>,
    pub diffs: Differentials,
    /// Basis labels per degree, e.g. "x^y" for the wedge x∧y.
    pub labels: Vec<Vec<String>>,
    /// Filtration degree up to which exactness was checked.
    pub exactness_certificate: usize,
}

/// Degree to which resolutions are checked for exactness at construction.
const EXACTNESS_DEGREE: usize = 3;

impl FreeComplex {
    pub fn length(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn poly_diffs(&self) -> Option<&[PolyMatrix]> {
        match &self.diffs {
            Differentials::Poly(d) => Some(d),
            Differentials::Linear(_) => None,
        }
    }

    /// d_{i}∘d_{i+1} = 0 after normal form, and ε kills the image of d_1.
    pub fn check_squares(&self, h: &HopfPresentation) -> Result<(), HomologyError> {
        let d = self.poly_diffs().ok_or_else(|| HomologyError::Complex("not a presented complex".into()))?;
        for (i, pair) in d.windows(2).enumerate() {
            let prod = poly_matmul(&h.algebra, &pair[1], &pair[0]);
            if let Some((r, c)) = first_nonzero(&prod) {
                return Err(HomologyError::Complex(format!("d{}∘d{} ≠ 0 at ({r},{c}): {}", i + 1, i + 2, h.fmt(&prod[r][c]))));
            }
        }
        if let Some(d1) = d.first() {
            for (j, row) in d1.iter().enumerate() {
                if !h.counit_of(&row[0]).is_zero() {
                    return Err(HomologyError::Complex(format!("ε∘d1 ≠ 0 on generator {j}")));
                }
            }
        }
        Ok(())
    }

    /// H_•(P) in filtration degree ≤ n: must be k in degree 0 and 0 above.
    pub fn exactness(&self, h: &HopfPresentation, n: usize, w: usize) -> Result<super::TruncatedDims, HomologyError> {
        let d = self.poly_diffs().ok_or_else(|| HomologyError::Complex("not a presented complex".into()))?;
        let module = CoefficientModule::right_regular(h);
        let t = Engine::new(&h.algebra, &self.ranks, d, &module, Direction::Chains).truncated(n, w);
        for i in 0..t.degrees() {
            let want = usize::from(i == 0);
            if !t.certified[i] {
                return Err(HomologyError::TruncationInconclusive { degree: i, truncation: n, window: w });
            }
            if t.dims[i].iter().any(|&x| x != want) {
                return Err(HomologyError::Complex(format!("H_{i} of the resolution is {:?}", t.dims[i])));
            }
        }
        Ok(t)
    }

    fn certify(mut self, h: &HopfPresentation) -> Result<Self, HomologyError> {
        self.check_squares(h)?;
        self.exactness(h, EXACTNESS_DEGREE, 2)?;
        self.exactness_certificate = EXACTNESS_DEGREE;
        Ok(self)
    }
}

pub(crate) fn poly_matmul(alg: &Algebra, a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| {
                    let mut s = NCPoly::zero();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() && !b[k][c].is_zero() {
                            s = s.add(&x.mul(&b[k][c]));
                        }
                    }
                    alg.nf(&s)
                })
                .collect()
        })
        .collect()
}

fn first_nonzero(m: &PolyMatrix) -> Option<(usize, usize)> {
    m.iter().enumerate().find_map(|(r, row)| row.iter().position(|p| !p.is_zero()).map(|c| (r, c)))
}

/// Subsets of {0..d} of size i in lexicographic order.
fn subsets(d: usize, i: usize) -> Vec<Vec<usize>> {
    if i == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for s in subsets(d, i - 1) {
        let start = s.last().map_or(0, |&l| l + 1);
        for k in start..d {
            let mut t = s.clone();
            t.push(k);
            out.push(t);
        }
    }
    out.sort();
    out
}

fn wedge_label(names: &[String], s: &[usize]) -> String {
    if s.is_empty() {
        "1".into()
    } else {
        s.iter().map(|&k| names[k].as_str()).collect::<Vec<_>>().join("^")
    }
}

/// CE differentials for structure constants c[i][j][k]:
/// d(x_{j1}∧…∧x_{ji}) = Σ_p (−1)^p x_{jp} ⊗ (…x̂_{jp}…) + Σ_{p<q} (−1)^{p+q} [x_{jp}, x_{jq}] ∧ (…x̂_{jp}…x̂_{jq}…).
pub fn ce_differentials(c: &[Vec<Vec<Scalar>>]) -> Result<Vec<PolyMatrix>, HomologyError> {
    check_jacobi(c).map_err(|e| HomologyError::JacobiViolation(e.to_string()))?;
    let d = c.len();
    let mut diffs = Vec::new();
    for i in 1..=d {
        let src = subsets(d, i);
        let tgt = subsets(d, i - 1);
        let pos = |s: &[usize]| tgt.binary_search_by(|t| t.as_slice().cmp(s)).unwrap();
        let mut m = vec![vec![NCPoly::zero(); tgt.len()]; src.len()];
        for (r, s) in src.iter().enumerate() {
            for p in 0..i {
                let rest: Vec<usize> = s.iter().enumerate().filter(|&(k, _)| k != p).map(|(_, &v)| v).collect();
                let sign = if p % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
                let col = pos(&rest);
                m[r][col] = m[r][col].add(&NCPoly::gen(s[p]).scale(&sign));
            }
            for p in 0..i {
                for q in p + 1..i {
                    let rest: Vec<usize> = s.iter().enumerate().filter(|&(k, _)| k != p && k != q).map(|(_, &v)| v).collect();
                    let sign = if (p + q) % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
                    for (k, ck) in c[s[p]][s[q]].iter().enumerate() {
                        if ck.is_zero() || rest.contains(&k) {
                            continue;
                        }
                        // x_k ∧ rest, sorted
                        let below = rest.iter().filter(|&&v| v < k).count();
                        let mut t = rest.clone();
                        t.insert(below, k);
                        let sgn = if below % 2 == 0 { sign.clone() } else { -&sign };
                        let col = pos(&t);
                        m[r][col] = m[r][col].add(&NCPoly::constant(&sgn * ck));
                    }
                }
            }
        }
        diffs.push(m);
    }
    Ok(diffs)
}

/// U(g) ⊗ Λ^•g → k.
pub fn ce_resolution(h: &HopfPresentation) -> Result<FreeComplex, HomologyError> {
    let Family::Enveloping { structure } = &h.family else {
        return Err(HomologyError::NoResolution(format!("{} is not an enveloping algebra", h.name)));
    };
    let d = structure.len();
    let diffs = ce_differentials(structure)?;
    let complex = FreeComplex {
        kind: ResolutionKind::ChevalleyEilenberg,
        side: Side::Left,
        ranks: (0..=d).map(|i| subsets(d, i).len()).collect(),
        diffs: Differentials::Poly(diffs),
        labels: (0..=d).map(|i| subsets(d, i).iter().map(|s| wedge_label(h.names(), s)).collect()).collect(),
        exactness_certificate: 0,
    };
    complex.certify(h)
}

/// Iterated mapping cones along G_0 ⊂ G_1 ⊂ … ⊂ G_n. At stage j the
/// resolution Q of k over kG_{j−1}, induced to kG, resolves k[⟨x⟩]; right
/// multiplication by x lifts to θ = x·Ψ with φ(D)Ψ = ΨD, φ(h) = x⁻¹hx, and
/// the cone of θ − 1 resolves k over kG_j.
pub fn tower_resolution(h: &HopfPresentation) -> Result<FreeComplex, HomologyError> {
    let Algebra::Group(ga) = &h.algebra else {
        return Err(HomologyError::NoResolution(format!("{} is not a group algebra", h.name)));
    };
    let g = ga.group();
    let n = g.rank();
    let alg = &h.algebra;
    let mut ranks = vec![1usize];
    let mut diffs: Vec<PolyMatrix> = Vec::new();
    let mut labels: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]];
    for j in 0..n {
        let x = NCPoly::gen(j);
        let phi = |p: &NCPoly| -> NCPoly {
            NCPoly::from_terms(p.terms().map(|(w, c)| {
                let e = ga.elem_of_word(w);
                let conj = g.mul(&g.mul(&g.gen_inv_elem(j), &e), &g.gen_elem(j));
                (ga.word_of_elem(&conj), c.clone())
            }))
        };
        let len = ranks.len() - 1;
        // Ψ_i: ranks[i] × ranks[i]
        let mut psi: Vec<PolyMatrix> = vec![vec![vec![NCPoly::one()]]];
        for i in 1..=len {
            let d = &diffs[i - 1];
            let mut rows = Vec::with_capacity(ranks[i]);
            for jj in 0..ranks[i] {
                let y: Vec<NCPoly> = (0..ranks[i - 1])
                    .map(|l| {
                        let mut s = NCPoly::zero();
                        for k in 0..ranks[i - 1] {
                            if !d[jj][k].is_zero() && !psi[i - 1][k][l].is_zero() {
                                s = s.add(&phi(&d[jj][k]).mul(&psi[i - 1][k][l]));
                            }
                        }
                        alg.nf(&s)
                    })
                    .collect();
                let v = lift(h, j, d, ranks[i], &y).ok_or_else(|| {
                    HomologyError::NonInvertibleAction(format!("cannot lift the action of {} in degree {i}", g.gen_names[j]))
                })?;
                rows.push(v);
            }
            psi.push(rows);
        }
        let theta: Vec<PolyMatrix> =
            psi.iter().map(|m| m.iter().map(|row| row.iter().map(|p| alg.nf(&x.mul(p))).collect()).collect()).collect();
        let r = |i: isize| if i < 0 || i as usize > len { 0 } else { ranks[i as usize] };
        let new_ranks: Vec<usize> = (0..=len + 1).map(|i| r(i as isize) + r(i as isize - 1)).collect();
        let mut new_diffs = Vec::new();
        for i in 1..=len + 1 {
            let (ri, rim1, rim2) = (r(i as isize), r(i as isize - 1), r(i as isize - 2));
            let mut m = vec![vec![NCPoly::zero(); rim1 + rim2]; ri + rim1];
            for a in 0..ri {
                for b in 0..rim1 {
                    m[a][b] = diffs[i - 1][a][b].clone();
                }
            }
            for a in 0..rim1 {
                for b in 0..rim1 {
                    let mut e = theta[i - 1][a][b].clone();
                    if a == b {
                        e = e.sub(&NCPoly::one());
                    }
                    m[ri + a][b] = e;
                }
                for b in 0..rim2 {
                    m[ri + a][rim1 + b] = diffs[i - 2][a][b].neg();
                }
            }
            new_diffs.push(m);
        }
        let new_labels: Vec<Vec<Vec<usize>>> = (0..=len + 1)
            .map(|i| {
                let mut l: Vec<Vec<usize>> = if i <= len { labels[i].clone() } else { Vec::new() };
                if i >= 1 {
                    l.extend(labels[i - 1].iter().map(|s| {
                        let mut t = s.clone();
                        t.push(j);
                        t
                    }));
                }
                l
            })
            .collect();
        ranks = new_ranks;
        diffs = new_diffs;
        labels = new_labels;
    }
    let complex = FreeComplex {
        kind: ResolutionKind::Tower,
        side: Side::Left,
        ranks,
        diffs: Differentials::Poly(diffs),
        labels: labels.iter().map(|l| l.iter().map(|s| wedge_label(h.names(), s)).collect()).collect(),
        exactness_certificate: 0,
    };
    complex.certify(h)
}

/// A row v with v·D = y, supported on elements of G_j = ⟨x_1, …, x_j⟩ in a
/// growing word ball.
fn lift(h: &HopfPresentation, j: usize, d: &PolyMatrix, rows: usize, y: &[NCPoly]) -> Option<Vec<NCPoly>> {
    let Algebra::Group(ga) = &h.algebra else { return None };
    let mut layers = Layers::new(&h.algebra);
    let cols = y.len();
    for radius in 1..=8 {
        let mut support: Vec<Word> = Vec::new();
        for r in 0..=radius {
            support.extend(layers.layer(r).iter().filter(|w| ga.elem_of_word(w)[j..].iter().all(|&e| e == 0)).cloned());
        }
        let unknowns: Vec<(usize, Word)> = (0..rows).flat_map(|m| support.iter().map(move |w| (m, w.clone()))).collect();
        let mut coords: Vec<(usize, Word)> = Vec::new();
        let mut index = std::collections::HashMap::new();
        let mut at = |key: (usize, Word), coords: &mut Vec<(usize, Word)>| -> usize {
            *index.entry(key.clone()).or_insert_with(|| {
                coords.push(key);
                coords.len() - 1
            })
        };
        let mut columns: Vec<Vec<(usize, Scalar)>> = Vec::new();
        for (m, w) in &unknowns {
            let mut col = Vec::new();
            for l in 0..cols {
                if d[*m][l].is_zero() {
                    continue;
                }
                let p = h.nf(&NCPoly::word(w.clone()).mul(&d[*m][l]));
                for (w2, c) in p.terms() {
                    col.push((at((l, w2.clone()), &mut coords), c.clone()));
                }
            }
            columns.push(col);
        }
        let mut rhs = Vec::new();
        for (l, p) in y.iter().enumerate() {
            for (w, c) in p.terms() {
                rhs.push((at((l, w.clone()), &mut coords), c.clone()));
            }
        }
        let mut a = Matrix::zeros(coords.len(), unknowns.len());
        for (k, col) in columns.iter().enumerate() {
            for (r, c) in col {
                a.add_to(*r, k, c);
            }
        }
        let mut b = vec![Scalar::zero(); coords.len()];
        for (r, c) in rhs {
            b[r] += &c;
        }
        if let Some(sol) = a.solve(&b) {
            let mut v = vec![NCPoly::zero(); rows];
            for ((m, w), c) in unknowns.iter().zip(sol) {
                if !c.is_zero() {
                    v[*m].add_term(w.clone(), &c);
                }
            }
            return Some(v);
        }
    }
    None
}

/// CE for enveloping algebras, the tower for group algebras.
pub fn resolution_for(h: &HopfPresentation) -> Result<FreeComplex, HomologyError> {
    match (&h.family, &h.algebra) {
        (Family::Enveloping { .. }, _) => ce_resolution(h),
        (_, Algebra::Group(_)) => tower_resolution(h),
        _ => Err(HomologyError::NoResolution(format!("{} has no CE, tower or bar resolution", h.name))),
    }
}

/// Text export: `kind`, `side`, `ranks`, then `entry i row col value` lines
/// for d_i, with polynomials in generator names or scalars over k.
pub fn write_complex(c: &FreeComplex, names: &[String]) -> String {
    let mut s = String::new();
    let side = match c.side {
        Side::Left => "left",
        Side::Right => "right",
    };
    let _ = writeln!(s, "kind {}", c.kind.name());
    let _ = writeln!(s, "side {side}");
    let _ = writeln!(s, "ranks {}", c.ranks.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" "));
    match &c.diffs {
        Differentials::Poly(ds) => {
            for (i, d) in ds.iter().enumerate() {
                for (r, row) in d.iter().enumerate() {
                    for (col, p) in row.iter().enumerate() {
                        if !p.is_zero() {
                            let _ = writeln!(s, "entry {} {r} {col} {}", i + 1, p.fmt_with(names));
                        }
                    }
                }
            }
        }
        Differentials::Linear(ds) => {
            for (i, d) in ds.iter().enumerate() {
                let _ = writeln!(s, "map {} {} {}", i + 1, d.source_dim, d.target_dim);
                for (r, row) in d.rows.iter().enumerate() {
                    for (col, v) in row.entries() {
                        let _ = writeln!(s, "entry {} {r} {col} {v}", i + 1);
                    }
                }
            }
        }
    }
    s
}

/// Inverse of [`write_complex`]. Labels and the exactness certificate are not stored.
pub fn parse_complex(text: &str, names: &[String], field: FieldTag) -> Result<FreeComplex, HomologyError> {
    let err = |n: usize, m: &str| HomologyError::Complex(format!("line {}: {m}", n + 1));
    let mut kind = None;
    let mut side = Side::Left;
    let mut ranks: Vec<usize> = Vec::new();
    let mut poly: Vec<PolyMatrix> = Vec::new();
    let mut linear: Vec<LinearMap> = Vec::new();
    let mut lin_entries: Vec<Vec<(usize, usize, Scalar)>> = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.splitn(2, ' ');
        let head = parts.next().unwrap();
        let rest = parts.next().unwrap_or("").trim();
        match head {
            "kind" => {
                kind = Some(match rest {
                    "ce" => ResolutionKind::ChevalleyEilenberg,
                    "tower" => ResolutionKind::Tower,
                    "bar" => ResolutionKind::Bar,
                    _ => return Err(err(n, "unknown kind")),
                })
            }
            "side" => {
                side = match rest {
                    "left" => Side::Left,
                    "right" => Side::Right,
                    _ => return Err(err(n, "unknown side")),
                }
            }
            "ranks" => {
                ranks = rest.split_whitespace().map(|t| t.parse().map_err(|_| err(n, "bad rank"))).collect::<Result<_, _>>()?;
                poly = (1..ranks.len()).map(|i| vec![vec![NCPoly::zero(); ranks[i - 1]]; ranks[i]]).collect();
            }
            "map" => {
                let v: Vec<usize> = rest.split_whitespace().map(|t| t.parse().map_err(|_| err(n, "bad map header"))).collect::<Result<_, _>>()?;
                if v.len() != 3 || v[0] != linear.len() + 1 {
                    return Err(err(n, "maps must be numbered 1, 2, …"));
                }
                linear.push(LinearMap { source_dim: v[1], target_dim: v[2], rows: vec![SparseVec::new(); v[1]] });
                lin_entries.push(Vec::new());
            }
            "entry" => {
                let mut f = rest.splitn(4, ' ');
                let mut num = || -> Result<usize, HomologyError> { f.next().and_then(|t| t.parse().ok()).ok_or_else(|| err(n, "bad index")) };
                let (i, r, c) = (num()?, num()?, num()?);
                let value = f.next().ok_or_else(|| err(n, "missing value"))?.trim();
                if !linear.is_empty() {
                    let s = Scalar::parse(value, field).map_err(|e| err(n, &e.to_string()))?;
                    let l = linear.get(i.wrapping_sub(1)).ok_or_else(|| err(n, "entry before its map"))?;
                    if r >= l.source_dim || c >= l.target_dim {
                        return Err(err(n, "index out of range"));
                    }
                    lin_entries[i - 1].push((r, c, s));
                } else {
                    let p = parse_poly(value, names, field).map_err(|e| err(n, &e.to_string()))?;
                    let m = poly.get_mut(i.wrapping_sub(1)).ok_or_else(|| err(n, "differential index out of range"))?;
                    let cell = m.get_mut(r).and_then(|row| row.get_mut(c)).ok_or_else(|| err(n, "index out of range"))?;
                    *cell = p;
                }
            }
            _ => return Err(err(n, &format!("unknown directive `{head}`"))),
        }
    }
    let kind = kind.ok_or_else(|| HomologyError::Complex("missing kind".into()))?;
    let diffs = if linear.is_empty() {
        Differentials::Poly(poly)
    } else {
        for (l, es) in linear.iter_mut().zip(lin_entries) {
            let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); l.source_dim];
            for (r, c, s) in es {
                rows[r].push((c, s));
            }
            l.rows = rows.into_iter().map(SparseVec::from_entries).collect();
        }
        Differentials::Linear(linear)
    };
    Ok(FreeComplex { kind, side, ranks, diffs, labels: Vec::new(), exactness_certificate: 0 })
}

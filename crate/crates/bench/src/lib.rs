//! Deterministic inputs for the `kernels` benchmarks.

use hopfwind::exact::Matrix;
use hopfwind::hopf::builders::quantum_sl;
use hopfwind::hopf::HopfPresentation;
use hopfwind::rewrite::{NCPoly, Word};
use hopfwind::Scalar;

/// An n×n rational matrix of rank about n/2 from a linear congruential sequence.
pub fn lcg_matrix(n: usize, seed: u64) -> Matrix {
    let mut s = seed;
    let mut next = move || {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((s >> 33) % 19) as i64 - 9
    };
    let half: Vec<Vec<Scalar>> = (0..n.div_ceil(2)).map(|_| (0..n).map(|_| Scalar::frac(next(), 1 + next().unsigned_abs() as i64)).collect()).collect();
    let rows = (0..n)
        .map(|i| {
            let a = &half[i % half.len()];
            let b = &half[(i * 7 + 3) % half.len()];
            a.iter().zip(b).map(|(x, y)| x + &(y * Scalar::int(i as i64 % 3))).collect()
        })
        .collect();
    Matrix::from_rows(rows)
}

pub fn oq_sl(n: usize) -> HopfPresentation {
    quantum_sl(n, &Scalar::q(), 6).expect("O_q(SL_n) builds")
}

/// The word g_{k-1} ⋯ g_1 g_0 over the generators, cycled: reversed order
/// forces the most rewriting.
pub fn reversed_word(h: &HopfPresentation, len: usize) -> NCPoly {
    let k = h.ngens() as u16;
    NCPoly::word(Word((0..len as u16).map(|i| k - 1 - i % k).collect()))
}

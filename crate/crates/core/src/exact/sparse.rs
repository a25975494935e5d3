//! Sparse vectors and an incremental semi-echelon basis.
//!
//! Each stored row is normalized so that its highest nonzero coordinate (the
//! pivot) has coefficient 1. Callers that want a particular pivot preference
//! order their coordinates so that preferred coordinates get larger indices.

use std::collections::HashMap;

use super::Scalar;

/// Nonzero entries sorted by index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Builds from unsorted entries, summing duplicates and dropping zeros.
    pub fn from_entries(mut entries: Vec<(usize, Scalar)>) -> Self {
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match out.last_mut() {
                Some((j, d)) if *j == i => *d += &c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|e| !e.1.is_zero());
        SparseVec { entries: out }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec { entries: v.iter().enumerate().filter(|e| !e.1.is_zero()).map(|(i, c)| (i, c.clone())).collect() }
    }

    pub fn to_dense(&self, n: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lead(&self) -> Option<(usize, &Scalar)> {
        self.entries.last().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, a)| (*i, a * c)).collect() }
    }

    /// self + c·o
    pub fn axpy(&self, c: &Scalar, o: &SparseVec) -> SparseVec {
        let mut out = Vec::with_capacity(self.entries.len() + o.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), o.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let v = x + &(c * y);
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }
}

/// Incremental basis of a subspace with pivots at the largest coordinate.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: HashMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Remainder of `v` after eliminating every stored pivot it reaches.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut done = SparseVec::new();
        while let Some((p, c)) = v.lead() {
            match self.rows.get(&p) {
                Some(row) => {
                    let c = -c;
                    v = v.axpy(&c, row);
                }
                None => {
                    let (i, c) = v.entries.pop().unwrap();
                    done.entries.push((i, c));
                }
            }
        }
        done.entries.reverse();
        done
    }

    /// Remainder with only the leading coordinates eliminated; stops at the
    /// first coordinate that is not a pivot.
    pub fn reduce_lead(&self, mut v: SparseVec) -> SparseVec {
        while let Some((p, c)) = v.lead() {
            match self.rows.get(&p) {
                Some(row) => {
                    let c = -c;
                    v = v.axpy(&c, row);
                }
                None => break,
            }
        }
        v
    }

    /// Adds `v` to the span; returns the new pivot when `v` was independent.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let r = self.reduce_lead(v);
        let (p, c) = r.lead()?;
        let r = r.scale(&c.inv());
        self.rows.insert(p, r);
        Some(p)
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce_lead(v).is_zero()
    }
}

/// Rank of the matrix whose rows are given sparsely.
pub fn sparse_rank(rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(v: &[i64]) -> SparseVec {
        SparseVec::from_dense(&v.iter().map(|&x| Scalar::int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_matches_dense() {
        let rows = vec![sv(&[1, 2, 3]), sv(&[2, 4, 6]), sv(&[0, 1, 1]), sv(&[1, 3, 4])];
        assert_eq!(sparse_rank(rows), 2);
    }

    #[test]
    fn reduce_leaves_non_pivot_part() {
        let mut e = Echelon::new();
        e.insert(sv(&[0, 1, 1]));
        let r = e.reduce(sv(&[1, 0, 2]));
        assert_eq!(r, sv(&[1, -2, 0]));
        assert!(e.contains(sv(&[0, 3, 3])));
    }
}

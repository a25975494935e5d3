//! Truncated homology of A^r-valued complexes filtered by degree in A.
//!
//! Coordinates are ordered by filtration degree, so in the semi-echelon basis
//! of the boundaries (pivot = largest coordinate) the rows with pivot below
//! dim F_n span exactly B ∩ F_n.

use std::collections::HashMap;

use super::coeff::CoefficientModule;
use super::complex::{PolyMatrix, Side};
use super::TruncatedDims;
use crate::exact::{Echelon, SparseVec};
use crate::hopf::group::Elem;
use crate::hopf::Algebra;
use crate::rewrite::{NCPoly, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Direction {
    Chains,
    Cochains,
}

/// Basis of A by filtration degree: normal words by length, or group
/// elements by word distance.
pub(crate) struct Layers<'a> {
    alg: &'a Algebra,
    layers: Vec<Vec<Word>>,
    dist: HashMap<Elem, usize>,
}

impl<'a> Layers<'a> {
    pub fn new(alg: &'a Algebra) -> Self {
        Layers { alg, layers: Vec::new(), dist: HashMap::new() }
    }

    pub fn layer(&mut self, d: usize) -> &[Word] {
        while self.layers.len() <= d {
            self.grow();
        }
        &self.layers[d]
    }

    fn grow(&mut self) {
        let d = self.layers.len();
        let layer = match self.alg {
            Algebra::Rules(s) => s.normal_words(d),
            Algebra::Group(ga) => {
                let g = ga.group();
                if d == 0 {
                    self.dist.insert(g.identity(), 0);
                    vec![Word::empty()]
                } else {
                    let mut next = Vec::new();
                    for w in &self.layers[d - 1] {
                        let e = ga.elem_of_word(w);
                        for i in 0..g.rank() {
                            for s in [g.gen_elem(i), g.gen_inv_elem(i)] {
                                let h = g.mul(&e, &s);
                                if !self.dist.contains_key(&h) {
                                    self.dist.insert(h.clone(), d);
                                    next.push(ga.word_of_elem(&h));
                                }
                            }
                        }
                    }
                    next.sort();
                    next
                }
            }
        };
        self.layers.push(layer);
    }

    /// Filtration degree of a normal word.
    pub fn degree(&mut self, w: &Word) -> usize {
        match self.alg {
            Algebra::Rules(_) => w.len(),
            Algebra::Group(ga) => {
                let e = ga.elem_of_word(w);
                loop {
                    if let Some(&d) = self.dist.get(&e) {
                        return d;
                    }
                    self.grow();
                }
            }
        }
    }

    pub fn poly_degree(&mut self, p: &NCPoly) -> usize {
        p.terms().map(|(w, _)| self.degree(w)).max().unwrap_or(0)
    }
}

/// Coordinates of A^slots, degree-major.
struct Space {
    slots: usize,
    keys: Vec<(usize, Word)>,
    index: HashMap<(usize, Word), usize>,
    ends: Vec<usize>,
}

impl Space {
    fn new(slots: usize) -> Self {
        Space { slots, keys: Vec::new(), index: HashMap::new(), ends: Vec::new() }
    }

    fn ensure(&mut self, d: usize, layers: &mut Layers) {
        while self.ends.len() <= d {
            let layer = layers.layer(self.ends.len()).to_vec();
            for s in 0..self.slots {
                for w in &layer {
                    self.index.insert((s, w.clone()), self.keys.len());
                    self.keys.push((s, w.clone()));
                }
            }
            self.ends.push(self.keys.len());
        }
    }

    fn end(&mut self, d: usize, layers: &mut Layers) -> usize {
        self.ensure(d, layers);
        self.ends[d]
    }

    fn idx(&mut self, slot: usize, w: &Word, layers: &mut Layers) -> usize {
        let key = (slot, w.clone());
        if let Some(&i) = self.index.get(&key) {
            return i;
        }
        let d = layers.degree(w);
        self.ensure(d, layers);
        self.index[&key]
    }
}

/// Per-position data of one truncated computation.
pub(crate) struct Position {
    pub chain_dims: Vec<usize>,
    pub cycles: Vec<usize>,
    pub boundaries: Vec<Vec<usize>>,
    pub boundaries_below: Vec<usize>,
    pub echelon: Echelon,
}

/// The complex M^{r_•} obtained by applying a coefficient module to a free
/// complex: chains m·D (right module), or cochains D·m (left module).
pub(crate) struct Engine<'a> {
    diffs: &'a [PolyMatrix],
    ranks: &'a [usize],
    module: &'a CoefficientModule,
    alg: &'a Algebra,
    dir: Direction,
    layers: Layers<'a>,
    spaces: Vec<Space>,
    actions: HashMap<(usize, Word), NCPoly>,
    images: HashMap<(usize, usize), SparseVec>,
}

impl<'a> Engine<'a> {
    pub fn new(alg: &'a Algebra, ranks: &'a [usize], diffs: &'a [PolyMatrix], module: &'a CoefficientModule, dir: Direction) -> Self {
        debug_assert_eq!(module.side == Side::Right, dir == Direction::Chains);
        Engine {
            diffs,
            ranks,
            module,
            alg,
            dir,
            layers: Layers::new(alg),
            spaces: ranks.iter().map(|&r| Space::new(r)).collect(),
            actions: HashMap::new(),
            images: HashMap::new(),
        }
    }

    fn act_gen(&mut self, g: usize, w: &Word) -> NCPoly {
        if let Some(p) = self.actions.get(&(g, w.clone())) {
            return p.clone();
        }
        let p = self.module.act_gen(self.alg, g, &NCPoly::word(w.clone()));
        self.actions.insert((g, w.clone()), p.clone());
        p
    }

    /// m·a for a right module, a·m for a left one.
    fn act(&mut self, a: &NCPoly, m: &Word) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, c) in a.terms() {
            let letters: Vec<usize> = match self.module.side {
                Side::Right => u.0.iter().map(|&l| l as usize).collect(),
                Side::Left => u.0.iter().rev().map(|&l| l as usize).collect(),
            };
            let mut cur = NCPoly::word(m.clone());
            for g in letters {
                let mut next = NCPoly::zero();
                for (w, cw) in cur.terms() {
                    next.add_scaled(&self.act_gen(g, w), cw);
                }
                cur = next;
            }
            out.add_scaled(&cur, c);
        }
        out
    }

    fn target(&self, pos: usize) -> Option<usize> {
        match self.dir {
            Direction::Chains => pos.checked_sub(1),
            Direction::Cochains => (pos + 1 < self.ranks.len()).then_some(pos + 1),
        }
    }

    fn source(&self, pos: usize) -> Option<usize> {
        match self.dir {
            Direction::Chains => (pos + 1 < self.ranks.len()).then_some(pos + 1),
            Direction::Cochains => pos.checked_sub(1),
        }
    }

    fn image(&mut self, pos: usize, k: usize) -> SparseVec {
        if let Some(v) = self.images.get(&(pos, k)) {
            return v.clone();
        }
        let t = self.target(pos).expect("no outgoing map");
        let (slot, w) = self.spaces[pos].keys[k].clone();
        let diffs = self.diffs;
        let mut entries = Vec::new();
        for kk in 0..self.ranks[t] {
            let e = match self.dir {
                Direction::Chains => &diffs[pos - 1][slot][kk],
                Direction::Cochains => &diffs[pos][kk][slot],
            };
            if e.is_zero() {
                continue;
            }
            let p = self.act(e, &w);
            for (w2, c) in p.terms() {
                entries.push((self.spaces[t].idx(kk, w2, &mut self.layers), c.clone()));
            }
        }
        let v = SparseVec::from_entries(entries);
        self.images.insert((pos, k), v.clone());
        v
    }

    pub fn position(&mut self, pos: usize, n: usize, w: usize) -> Position {
        let mut chain_dims = Vec::with_capacity(n + 1);
        let mut cycles = Vec::with_capacity(n + 1);
        let has_out = self.target(pos).is_some();
        let mut ker = 0;
        let mut out = Echelon::new();
        let mut start = 0;
        for d in 0..=n {
            let end = self.spaces[pos].end(d, &mut self.layers);
            for k in start..end {
                if !has_out || out.insert(self.image(pos, k)).is_none() {
                    ker += 1;
                }
            }
            start = end;
            chain_dims.push(end);
            cycles.push(ker);
        }
        let mut boundaries = vec![Vec::with_capacity(w + 1); n + 1];
        let mut below = vec![0; n + 1];
        let mut echelon = Echelon::new();
        match self.source(pos) {
            Some(s) => {
                let mut start = 0;
                for m in 0..=n + w {
                    let end = self.spaces[s].end(m, &mut self.layers);
                    for k in start..end {
                        let v = self.image(s, k);
                        echelon.insert(v);
                    }
                    start = end;
                    let pivots: Vec<usize> = echelon.pivots().collect();
                    for d in m.saturating_sub(w)..=m.min(n) {
                        let e = chain_dims[d];
                        boundaries[d].push(pivots.iter().filter(|&&p| p < e).count());
                    }
                    if m < n {
                        let e = chain_dims[m + 1];
                        below[m + 1] = pivots.iter().filter(|&&p| p < e).count();
                    }
                }
            }
            None => boundaries.iter_mut().for_each(|b| *b = vec![0; w + 1]),
        }
        Position { chain_dims, cycles, boundaries, boundaries_below: below, echelon }
    }

    /// Coordinates of `p` placed in `slot` of position `pos`.
    pub fn vector(&mut self, pos: usize, slot: usize, p: &NCPoly) -> SparseVec {
        let entries = p.terms().map(|(w, c)| (self.spaces[pos].idx(slot, w, &mut self.layers), c.clone())).collect();
        SparseVec::from_entries(entries)
    }

    pub fn truncated(&mut self, n: usize, w: usize) -> TruncatedDims {
        self.truncated_keep(n, w).0
    }

    /// Also returns the boundary echelon of every position.
    pub fn truncated_keep(&mut self, n: usize, w: usize) -> (TruncatedDims, Vec<Echelon>) {
        let mut t = TruncatedDims {
            dims: Vec::new(),
            certified: Vec::new(),
            truncation: n,
            window: w,
            exact: false,
            chain_dims: Vec::new(),
            cycles: Vec::new(),
            boundaries: Vec::new(),
            boundaries_below: Vec::new(),
        };
        let mut echelons = Vec::new();
        for pos in 0..self.ranks.len() {
            let p = self.position(pos, n, w);
            t.dims.push((0..=n).map(|d| p.cycles[d] - p.boundaries[d][w]).collect());
            t.certified.push(certify(&p.boundaries, w));
            t.chain_dims.push(p.chain_dims);
            t.cycles.push(p.cycles);
            t.boundaries.push(p.boundaries);
            t.boundaries_below.push(p.boundaries_below);
            echelons.push(p.echelon);
        }
        (t, echelons)
    }
}

/// Boundaries in every F_n agree for lookahead 1 through w.
fn certify(boundaries: &[Vec<usize>], w: usize) -> bool {
    w >= 1 && boundaries.iter().all(|b| b[1..=w].iter().all(|&x| x == b[w]))
}

//! Exact sparse linear algebra over the rationals.
//!
//! Elimination always pivots on the leftmost available index, so identical
//! inputs give identical bases.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::tensor::{Lin, Q};

/// Sparse vector indexed by coordinate.
pub type SVec = Lin<usize>;

/// Sparse matrix; no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Q>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn from_columns(rows: usize, columns: &[SVec]) -> Self {
        let mut m = SparseMatrix::new(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for (&i, v) in c.iter() {
                m.add(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[SVec]) -> Self {
        let mut m = SparseMatrix::new(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (&j, v) in r.iter() {
                m.add(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Q)> {
        self.entries.iter()
    }

    /// Add `v` to entry `(i, j)`.
    pub fn add(&mut self, i: usize, j: usize, v: Q) {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        if v.is_zero() {
            return;
        }
        let e = self.entries.entry((i, j)).or_insert_with(Q::zero);
        *e += v;
        if e.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn row_vectors(&self) -> Vec<SVec> {
        let mut out = alloc::vec![SVec::zero(); self.rows];
        for (&(i, j), v) in &self.entries {
            out[i].add_term(j, v.clone());
        }
        out
    }

    pub fn column_vectors(&self) -> Vec<SVec> {
        let mut out = alloc::vec![SVec::zero(); self.cols];
        for (&(i, j), v) in &self.entries {
            out[j].add_term(i, v.clone());
        }
        out
    }

    pub fn mul_vec(&self, x: &SVec) -> SVec {
        let mut out = SVec::zero();
        for (&(i, j), v) in &self.entries {
            let c = x.coeff(&j);
            if !c.is_zero() {
                out.add_term(i, v * c);
            }
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::new(self.cols, self.rows);
        for (&(i, j), v) in &self.entries {
            t.entries.insert((j, i), v.clone());
        }
        t
    }
}

/// A list of linearly independent nonzero vectors in a fixed ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub ambient_dim: usize,
    pub vectors: Vec<SVec>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis { ambient_dim, vectors: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        SubspaceBasis { ambient_dim, vectors: (0..ambient_dim).map(SVec::basis).collect() }
    }

    /// Keep the vectors that are independent of the earlier ones.
    pub fn span_of(ambient_dim: usize, vectors: &[SVec]) -> Self {
        let mut ech = Echelon::new();
        let mut kept = Vec::new();
        for v in vectors {
            if ech.insert(v) {
                kept.push(v.clone());
            }
        }
        SubspaceBasis { ambient_dim, vectors: kept }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new();
        for v in &self.vectors {
            e.insert(v);
        }
        e
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.echelon().reduce(v).is_zero()
    }
}

/// Row echelon form built incrementally. Each stored row has its smallest
/// index as pivot with coefficient 1, and remembers which inserted vectors it
/// combines.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, (SVec, SVec)>,
    inserted: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &usize> {
        self.rows.keys()
    }

    fn reduce_tracked(&self, v: &SVec, combo: &mut SVec) -> SVec {
        let mut v = v.clone();
        loop {
            let next = v.keys().find(|k| self.rows.contains_key(k)).copied();
            let Some(p) = next else { break };
            let c = v.coeff(&p);
            let (row, rc) = &self.rows[&p];
            v.add_scaled(row, &-c.clone());
            combo.add_scaled(rc, &-c);
        }
        v
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut scratch = SVec::zero();
        self.reduce_tracked(v, &mut scratch)
    }

    /// Insert a vector; returns whether it was independent. Every call counts
    /// as one inserted vector for the purpose of `express`.
    pub fn insert(&mut self, v: &SVec) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let mut combo = SVec::basis(idx);
        let r = self.reduce_tracked(v, &mut combo);
        let Some(&p) = r.keys().next() else {
            return false;
        };
        let inv = Q::one() / r.coeff(&p);
        self.rows.insert(p, (r.scaled(&inv), combo.scaled(&inv)));
        true
    }

    /// Coefficients expressing `v` through the inserted vectors, if it lies in
    /// their span.
    pub fn express(&self, v: &SVec) -> Option<SVec> {
        let mut combo = SVec::zero();
        let r = self.reduce_tracked(v, &mut combo);
        if r.is_zero() {
            Some(combo.neg())
        } else {
            None
        }
    }
}

/// Fully reduced row echelon form of `m`: returns pivot columns and the
/// reduced rows, one per pivot.
fn rref(m: &SparseMatrix) -> Vec<(usize, SVec)> {
    let mut ech = Echelon::new();
    for r in m.row_vectors() {
        ech.insert(&r);
    }
    let mut rows: Vec<(usize, SVec)> = ech.rows.into_iter().map(|(p, (r, _))| (p, r)).collect();
    // back substitution, last pivot first
    for i in (0..rows.len()).rev() {
        let (p, ref pr) = rows[i];
        let pr = pr.clone();
        for row in rows.iter_mut().take(i) {
            let c = row.1.coeff(&p);
            if !c.is_zero() {
                row.1.add_scaled(&pr, &-c);
            }
        }
    }
    rows
}

/// Rank, kernel and image of a matrix.
pub fn rank_kernel_image(m: &SparseMatrix) -> (usize, SubspaceBasis, SubspaceBasis) {
    let rows = rref(m);
    let pivots: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(i, (p, _))| (*p, i)).collect();
    let mut kernel = Vec::new();
    for f in 0..m.cols() {
        if pivots.contains_key(&f) {
            continue;
        }
        let mut v = SVec::basis(f);
        for (p, r) in &rows {
            let c = r.coeff(&f);
            if !c.is_zero() {
                v.add_term(*p, -c);
            }
        }
        kernel.push(v);
    }
    let cols = m.column_vectors();
    let image = pivots.keys().map(|&p| cols[p].clone()).collect();
    (
        rows.len(),
        SubspaceBasis { ambient_dim: m.cols(), vectors: kernel },
        SubspaceBasis { ambient_dim: m.rows(), vectors: image },
    )
}

pub fn rank(m: &SparseMatrix) -> usize {
    let mut ech = Echelon::new();
    // eliminate along the shorter side
    if m.rows() <= m.cols() {
        for r in m.row_vectors() {
            ech.insert(&r);
        }
    } else {
        for c in m.column_vectors() {
            ech.insert(&c);
        }
    }
    ech.rank()
}

/// Result of `quotient_dim`: the dimension and lifts of a complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub dim: usize,
    pub complement: Vec<SVec>,
}

/// Dimension of `span(ambient) / span(sub)` together with a complement.
pub fn quotient_dim(ambient: &SubspaceBasis, sub: &SubspaceBasis) -> Result<Quotient> {
    let amb = ambient.echelon();
    for (i, v) in sub.vectors.iter().enumerate() {
        if !amb.reduce(v).is_zero() {
            return Err(Error::SubspaceNotContained { index: i });
        }
    }
    let mut ech = sub.echelon();
    let base = ech.rank();
    let mut complement = Vec::new();
    for v in &ambient.vectors {
        if ech.insert(v) {
            complement.push(v.clone());
        }
    }
    Ok(Quotient { dim: ech.rank() - base, complement })
}

/// Some `x` with `m x = b`, if one exists.
pub fn solve(m: &SparseMatrix, b: &SVec) -> Option<SVec> {
    let mut ech = Echelon::new();
    for c in m.column_vectors() {
        ech.insert(&c);
    }
    ech.express(b)
}

/// Vectors `x` with `<r, x> = 0` for every `r` in `sub`.
pub fn annihilator(sub: &SubspaceBasis) -> SubspaceBasis {
    let m = SparseMatrix::from_rows(sub.ambient_dim, &sub.vectors);
    rank_kernel_image(&m).1
}

pub fn intersection(a: &SubspaceBasis, b: &SubspaceBasis) -> SubspaceBasis {
    let mut rows = annihilator(a).vectors;
    rows.extend(annihilator(b).vectors);
    let m = SparseMatrix::from_rows(a.ambient_dim, &rows);
    rank_kernel_image(&m).1
}

//! Bidegree blocks of the cobar-side complexes and their homology.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{b_op, beta, hochschild_d, j_inverse, oneform_class_d, t_op, Cobar, MarkedWord, OneFormClass};
use crate::error::{Error, Result};
use crate::linalg::{rank, rank_kernel_image, Echelon, SVec, SparseMatrix};
use crate::tensor::{Lin, Poly, Word};

/// Truncation of a computation in degree and weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cutoffs {
    pub max_degree: i64,
    pub max_weight: u32,
}

impl Cutoffs {
    pub const fn new(max_degree: i64, max_weight: u32) -> Self {
        Cutoffs { max_degree, max_weight }
    }

    fn check(&self, degree: i64, weight: u32) -> Result<()> {
        if weight > self.max_weight || degree > self.max_degree {
            Err(Error::CutoffExceeded { degree, weight })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Complex {
    /// `R̄_♮` with the cobar differential.
    CobarNatural,
    /// `Ω¹_{R,♮}` with the induced differential.
    OneformNatural,
    /// Normalized Hochschild chains.
    Hochschild,
    /// `Ker(1 - T)` on words over `s^-1 C̄` with `b`.
    Cyclic,
}

impl Complex {
    pub const ALL: [Complex; 4] =
        [Complex::CobarNatural, Complex::OneformNatural, Complex::Hochschild, Complex::Cyclic];

    pub fn name(&self) -> &'static str {
        match self {
            Complex::CobarNatural => "cobar_natural",
            Complex::OneformNatural => "oneform_natural",
            Complex::Hochschild => "hochschild",
            Complex::Cyclic => "cyclic",
        }
    }

    pub fn from_name(s: &str) -> Option<Complex> {
        Complex::ALL.into_iter().find(|c| c.name() == s)
    }
}

/// Nonempty words over `s^-1 C̄` of the given weight, grouped by degree.
fn words_of_weight(cb: &Cobar, weight: u32) -> BTreeMap<i64, Vec<Word>> {
    let letters: Vec<usize> = cb.reduced_letters().into_iter().filter(|&l| cb.word_weight(&[l]) > 0).collect();
    let mut out: BTreeMap<i64, Vec<Word>> = BTreeMap::new();
    let mut stack = Vec::new();
    fn rec(cb: &Cobar, letters: &[usize], left: u32, stack: &mut Vec<usize>, out: &mut BTreeMap<i64, Vec<Word>>) {
        if left == 0 {
            if !stack.is_empty() {
                out.entry(cb.word_deg(stack)).or_default().push(Word(stack.clone()));
            }
            return;
        }
        for &l in letters {
            let w = cb.word_weight(&[l]);
            if w <= left {
                stack.push(l);
                rec(cb, letters, left - w, stack, out);
                stack.pop();
            }
        }
    }
    rec(cb, &letters, weight, &mut stack, &mut out);
    out
}

fn words_block(cb: &Cobar, degree: i64, weight: u32) -> Vec<Word> {
    words_of_weight(cb, weight).remove(&degree).unwrap_or_default()
}

fn classes_block(cb: &Cobar, degree: i64, weight: u32) -> Vec<(Word, usize)> {
    let mut out = Vec::new();
    for v in cb.reduced_letters() {
        let (vd, vw) = (cb.deg(v), cb.word_weight(&[v]));
        if vw > weight || vw == 0 {
            continue;
        }
        if vw == weight {
            if vd == degree {
                out.push((Word::unit(), v));
            }
            continue;
        }
        for w in words_block(cb, degree - vd, weight - vw) {
            out.push((w, v));
        }
    }
    out.sort();
    out
}

fn chains_block(cb: &Cobar, degree: i64, weight: u32) -> Vec<MarkedWord> {
    let c = &cb.coalgebra;
    let mut out = Vec::new();
    for m in 0..c.dim() {
        let (md, mw) = (c.deg(m), c.weight(m));
        if mw > weight {
            continue;
        }
        if mw == weight {
            if md == degree {
                out.push(MarkedWord::new(m, Word::unit()));
            }
            continue;
        }
        for w in words_block(cb, degree - md, weight - mw) {
            out.push(MarkedWord::new(m, w));
        }
    }
    out.sort();
    out
}

/// A block presented as a subquotient of a span of monomials: coordinates
/// are read off the inserted vectors listed in `coord`.
struct Block<K: Ord + Clone> {
    index: BTreeMap<K, usize>,
    ech: Echelon,
    coord: BTreeMap<usize, usize>,
    lifts: Vec<Lin<K>>,
}

impl<K: Ord + Clone> Block<K> {
    fn to_svec(&self, v: &Lin<K>) -> SVec {
        v.map_keys(|k| Some((*self.index.get(k).expect("term outside block"), false)))
    }

    fn dim(&self) -> usize {
        self.lifts.len()
    }

    fn coords(&self, v: &Lin<K>) -> SVec {
        let combo = self.ech.express(&self.to_svec(v)).expect("image outside block");
        combo.map_keys(|i| self.coord.get(i).map(|&c| (c, false)))
    }

    /// Monomials modulo `relations`.
    fn quotient(monomials: Vec<K>, relations: &[Lin<K>]) -> Self {
        let index: BTreeMap<K, usize> = monomials.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let mut b = Block { index, ech: Echelon::new(), coord: BTreeMap::new(), lifts: Vec::new() };
        let mut count = 0;
        for r in relations {
            let v = b.to_svec(r);
            b.ech.insert(&v);
            count += 1;
        }
        for m in monomials {
            let v = Lin::basis(m);
            if b.ech.insert(&b.to_svec(&v)) {
                b.coord.insert(count, b.lifts.len());
                b.lifts.push(v);
            }
            count += 1;
        }
        b
    }

    /// The span of `vectors` (assumed independent) inside the monomials.
    fn sub(monomials: Vec<K>, vectors: Vec<Lin<K>>) -> Self {
        let index: BTreeMap<K, usize> = monomials.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let mut b = Block { index, ech: Echelon::new(), coord: BTreeMap::new(), lifts: Vec::new() };
        for (i, v) in vectors.into_iter().enumerate() {
            let inserted = b.ech.insert(&b.to_svec(&v));
            debug_assert!(inserted);
            b.coord.insert(i, i);
            b.lifts.push(v);
        }
        b
    }
}

fn natural_block(cb: &Cobar, degree: i64, weight: u32) -> Block<Word> {
    let words = words_block(cb, degree, weight);
    let rels: Vec<Poly> =
        words.iter().map(|w| Poly::basis(w.clone()).sub(&t_op(cb, &Poly::basis(w.clone())))).collect();
    Block::quotient(words, &rels)
}

fn cyclic_vectors(cb: &Cobar, words: &[Word]) -> Vec<Poly> {
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let cols: Vec<SVec> = words
        .iter()
        .map(|w| {
            let p = Poly::basis(w.clone()).sub(&t_op(cb, &Poly::basis(w.clone())));
            p.map_keys(|k| Some((index[k], false)))
        })
        .collect();
    let m = SparseMatrix::from_columns(words.len(), &cols);
    let (_, ker, _) = rank_kernel_image(&m);
    ker.vectors.iter().map(|v| v.map_keys(|&i| Some((words[i].clone(), false)))).collect()
}

fn cyclic_block(cb: &Cobar, degree: i64, weight: u32) -> Block<Word> {
    let words = words_block(cb, degree, weight);
    let vecs = cyclic_vectors(cb, &words);
    Block::sub(words, vecs)
}

/// A complementary monomial basis of the `(degree, weight)` block of `R̄_♮`.
/// Homology is always computed on the normalized cobar algebra.
pub fn natural_quotient_basis(cb: &Cobar, degree: i64, weight: u32, cut: Cutoffs) -> Result<Vec<Word>> {
    let normalized;
    let cb = if cb.with_unit {
        normalized = Cobar::new(&cb.coalgebra);
        &normalized
    } else {
        cb
    };
    cut.check(degree, weight)?;
    if weight == 0 {
        return Ok(Vec::new());
    }
    let b = natural_block(cb, degree, weight);
    Ok(b.lifts.into_iter().map(|l| l.keys().next().cloned().expect("monomial lift")).collect())
}

fn diff_rank<K: Ord + Clone, F: Fn(&Lin<K>) -> Lin<K>>(src: &Block<K>, dst: &Block<K>, d: F) -> usize {
    if src.dim() == 0 || dst.dim() == 0 {
        return 0;
    }
    let cols: Vec<SVec> = src.lifts.iter().map(|l| dst.coords(&d(l))).collect();
    rank(&SparseMatrix::from_columns(dst.dim(), &cols))
}

fn homology_of<K: Ord + Clone, B: Fn(i64) -> Block<K>, F: Fn(&Lin<K>) -> Lin<K>>(degree: i64, block: B, d: F) -> usize {
    let mid = block(degree);
    if mid.dim() == 0 {
        return 0;
    }
    let lo = block(degree - 1);
    let hi = block(degree + 1);
    mid.dim() - diff_rank(&mid, &lo, &d) - diff_rank(&hi, &mid, &d)
}

/// Dimension of the homology of `complex` in the given bidegree. Cyclic
/// degrees are reported as cobar word degrees; weight 0 is the unit.
pub fn homology_dim(cb: &Cobar, complex: Complex, degree: i64, weight: u32, cut: Cutoffs) -> Result<usize> {
    let normalized;
    let cb = if cb.with_unit {
        normalized = Cobar::new(&cb.coalgebra);
        &normalized
    } else {
        cb
    };
    cut.check(degree + 1, weight)?;
    if weight == 0 {
        return Ok(usize::from(degree == 0));
    }
    Ok(match complex {
        Complex::CobarNatural => {
            homology_of(degree, |k| natural_block(cb, k, weight), |p| p.map_linear(|w| cb.d_reduced_word(w)))
        }
        Complex::Cyclic => homology_of(degree, |k| cyclic_block(cb, k, weight), |p| b_op(cb, p, true)),
        Complex::OneformNatural => homology_of(
            degree,
            |k| {
                let basis = classes_block(cb, k, weight);
                let vecs = basis.iter().cloned().map(Lin::basis).collect();
                Block::sub(basis, vecs)
            },
            |p: &OneFormClass| oneform_class_d(cb, p),
        ),
        Complex::Hochschild => homology_of(
            degree,
            |k| {
                let basis = chains_block(cb, k, weight);
                let vecs = basis.iter().cloned().map(Lin::basis).collect();
                Block::sub(basis, vecs)
            },
            |p| hochschild_d(cb, p),
        ),
    })
}

/// Blockwise exactness of `0 → Ker(1-T) → Ω¹_{R,♮} → R̄ → R̄_♮ → 0` with maps
/// `J⁻¹`, `-β` and the projection.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExactnessReport {
    /// `(degree, weight)` of each checked block.
    pub blocks: Vec<(i64, u32)>,
    /// Blocks where exactness fails, with the failing position
    /// (0: injectivity, 1: middle at Ω, 2: middle at R̄, 3: surjectivity).
    pub failures: Vec<(i64, u32, u8)>,
}

impl ExactnessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_block(cb: &Cobar, degree: i64, weight: u32, report: &mut ExactnessReport) {
    report.blocks.push((degree, weight));
    let words = words_block(cb, degree, weight);
    let windex: BTreeMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let kvecs = cyclic_vectors(cb, &words);
    let classes = classes_block(cb, degree, weight);
    let cindex: BTreeMap<(Word, usize), usize> = classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let quot = natural_block(cb, degree, weight);

    let i_cols: Vec<SVec> = kvecs.iter().map(|v| j_inverse(cb, v).map_keys(|k| Some((cindex[k], false)))).collect();
    let beta_cols: Vec<SVec> =
        classes.iter().map(|c| beta(cb, &Lin::basis(c.clone())).neg().map_keys(|k| Some((windex[k], false)))).collect();
    let pi_cols: Vec<SVec> = words.iter().map(|w| quot.coords(&Poly::basis(w.clone()))).collect();
    let mi = SparseMatrix::from_columns(classes.len(), &i_cols);
    let mb = SparseMatrix::from_columns(words.len(), &beta_cols);
    let mp = SparseMatrix::from_columns(quot.dim(), &pi_cols);
    let (ri, rb, rp) = (rank(&mi), rank(&mb), rank(&mp));
    let compose_zero =
        |outer: &SparseMatrix, inner: &SparseMatrix| inner.column_vectors().iter().all(|c| outer.mul_vec(c).is_zero());
    if ri != kvecs.len() {
        report.failures.push((degree, weight, 0));
    }
    if !compose_zero(&mb, &mi) || rb + ri != classes.len() {
        report.failures.push((degree, weight, 1));
    }
    if !compose_zero(&mp, &mb) || rp + rb != words.len() {
        report.failures.push((degree, weight, 2));
    }
    if rp != quot.dim() {
        report.failures.push((degree, weight, 3));
    }
}

/// Checks every block with weight `1..=max_weight` and degree up to
/// `max_degree`; the weight-0 blocks vanish.
pub fn check_periodic_exactness(cb: &Cobar, cut: Cutoffs) -> ExactnessReport {
    let normalized;
    let cb = if cb.with_unit {
        normalized = Cobar::new(&cb.coalgebra);
        &normalized
    } else {
        cb
    };
    let mut report = ExactnessReport::default();
    for weight in 1..=cut.max_weight {
        let degrees: Vec<i64> = words_of_weight(cb, weight).into_keys().filter(|&d| d <= cut.max_degree).collect();
        for degree in degrees {
            check_block(cb, degree, weight, &mut report);
        }
    }
    report
}

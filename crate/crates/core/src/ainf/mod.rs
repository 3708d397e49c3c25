//! Finite-dimensional A-infinity coalgebras with cyclic pairings, their
//! structural checks, and dualization to cyclic A-infinity algebras.
//!
//! A coalgebra element has an internal homological degree and a weight. The
//! coproduct `Δ_n` has degree `n - 2`. Stasheff relations are checked in the
//! form `Σ (-1)^{r+st} (id^r ⊗ Δ_s ⊗ id^t) Δ_{r+1+t} = 0`, where applying
//! `Δ_s` past the first `r` factors costs the Koszul sign
//! `(-1)^{s (|c_1| + ... + |c_r|)}`.

mod builders;

pub use builders::{
    builtin_coalgebra, exterior_coalgebra, quadratic_koszul_dual, sklyanin3, sklyanin4, tensor_subcoalgebra,
    yang_mills, Component,
};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rank, SparseMatrix};
use crate::tensor::{odd, Alphabet, Generator, Lin, Q};

/// Linear combination of basis tuples.
pub type TensorVec = Lin<Vec<usize>>;

/// `(r, s, t)`: one Stasheff summand, with `s` the inner arity between `r` and `t` outer slots.
pub type Slot = (usize, usize, usize);

/// Nondegenerate graded-symmetric pairing of degree `degree = -d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicPairing {
    pub degree: i64,
    pub entries: BTreeMap<(usize, usize), Q>,
}

impl CyclicPairing {
    pub fn get(&self, i: usize, j: usize) -> Q {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Q::zero)
    }
}

/// A finite-dimensional coaugmented A-infinity coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfCoalgebra {
    pub name: String,
    pub basis: Vec<Generator>,
    /// `coproducts[n][i] = Δ_n(c_i)`.
    pub coproducts: BTreeMap<usize, Vec<TensorVec>>,
    pub counit: Lin<usize>,
    pub coaugmentation: usize,
    pub pairing: Option<CyclicPairing>,
}

impl AInfCoalgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    #[inline]
    pub fn deg(&self, i: usize) -> i64 {
        self.basis[i].degree
    }

    #[inline]
    pub fn weight(&self, i: usize) -> u32 {
        self.basis[i].weight
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.basis.iter().position(|g| g.id == id).ok_or_else(|| Error::UnknownGenerator(id.into()))
    }

    pub fn arities(&self) -> impl Iterator<Item = usize> + '_ {
        self.coproducts.iter().filter(|(_, v)| v.iter().any(|x| !x.is_zero())).map(|(n, _)| *n)
    }

    pub fn delta(&self, n: usize, i: usize) -> Option<&TensorVec> {
        self.coproducts.get(&n).map(|v| &v[i])
    }

    pub fn pairing(&self) -> Result<&CyclicPairing> {
        self.pairing.as_ref().ok_or(Error::NoPairing)
    }

    /// `d` such that the pairing has degree `-d`.
    pub fn cy_dimension(&self) -> Result<i64> {
        Ok(-self.pairing()?.degree)
    }

    pub fn pair(&self, i: usize, j: usize) -> Result<Q> {
        Ok(self.pairing()?.get(i, j))
    }

    /// Bilinear evaluation of the pairing on linear combinations.
    pub fn pairing_eval(&self, x: &Lin<usize>, y: &Lin<usize>) -> Result<Q> {
        let p = self.pairing()?;
        let mut s = Q::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let v = p.get(*i, *j);
                if !v.is_zero() {
                    s += a * b * v;
                }
            }
        }
        Ok(s)
    }

    /// Alphabet of cobar letters `s^-1 c`, one per basis element in basis
    /// order (the coaugmentation included, for bar-type words).
    pub fn letter_alphabet(&self) -> Arc<Alphabet> {
        let letters = self.basis.iter().map(|g| Generator::new(g.id.clone(), g.degree - 1, g.weight)).collect();
        Arc::new(Alphabet::new(letters).expect("basis ids are unique"))
    }

    pub fn max_weight(&self) -> u32 {
        self.basis.iter().map(|g| g.weight).max().unwrap_or(0)
    }

    /// Apply `id^r ⊗ Δ_s ⊗ id^t` to a tensor, with the Koszul sign.
    fn apply_inner(&self, s: usize, r: usize, t: &[usize]) -> TensorVec {
        let mut out = TensorVec::zero();
        let Some(ds) = self.coproducts.get(&s) else {
            return out;
        };
        let pre: i64 = t[..r].iter().map(|&i| self.deg(i)).sum();
        let neg = odd(s as i64 * pre);
        for (pieces, c) in ds[t[r]].iter() {
            let mut v = t[..r].to_vec();
            v.extend_from_slice(pieces);
            v.extend_from_slice(&t[r + 1..]);
            out.add_signed(v, c, neg);
        }
        out
    }

    /// Evaluate every Stasheff relation on every basis element.
    pub fn check_ainf(&self) -> Vec<StasheffViolation> {
        let ar: Vec<usize> = self.arities().collect();
        let mut out = Vec::new();
        for c in 0..self.dim() {
            let mut by_n: BTreeMap<usize, (TensorVec, Vec<Slot>)> = BTreeMap::new();
            for &k in &ar {
                let dk = &self.coproducts[&k][c];
                if dk.is_zero() {
                    continue;
                }
                for &s in &ar {
                    for r in 0..k {
                        let t = k - 1 - r;
                        let n = r + s + t;
                        let mut term = TensorVec::zero();
                        for (tup, coef) in dk.iter() {
                            term.add_scaled(&self.apply_inner(s, r, tup), coef);
                        }
                        if term.is_zero() {
                            continue;
                        }
                        let neg = odd((r + s * t) as i64);
                        let entry = by_n.entry(n).or_default();
                        entry.0.add_scaled(&term, &if neg { -Q::one() } else { Q::one() });
                        entry.1.push((r, s, t));
                    }
                }
            }
            for (n, (total, triples)) in by_n {
                if !total.is_zero() {
                    out.push(StasheffViolation { element: c, arity: n, triples, residual: total });
                }
            }
        }
        out
    }

    /// Counit and coaugmentation axioms.
    pub fn check_counit(&self) -> Vec<String> {
        let mut fails = Vec::new();
        let e = self.coaugmentation;
        if self.counit != Lin::basis(e) {
            fails.push(String::from("counit is not dual to the coaugmentation"));
        }
        for (&n, ds) in &self.coproducts {
            for (i, d) in ds.iter().enumerate() {
                if n == 2 {
                    let mut left = Lin::<usize>::zero();
                    let mut right = Lin::<usize>::zero();
                    for (tup, c) in d.iter() {
                        left.add_scaled(&Lin::basis(tup[1]), &(c * self.counit.coeff(&tup[0])));
                        right.add_scaled(&Lin::basis(tup[0]), &(c * self.counit.coeff(&tup[1])));
                    }
                    if left != Lin::basis(i) || right != Lin::basis(i) {
                        fails.push(alloc::format!("counit fails on {}", self.basis[i].id));
                    }
                } else {
                    if i == e && !d.is_zero() {
                        fails.push(alloc::format!("Δ_{n}(e) is nonzero"));
                    }
                    if d.keys().any(|t| t.contains(&e)) {
                        fails.push(alloc::format!("Δ_{n}({}) is not reduced", self.basis[i].id));
                    }
                }
            }
        }
        fails
    }

    pub fn check_ainf_coalgebra(&self) -> AinfReport {
        AinfReport { stasheff: self.check_ainf(), counit: self.check_counit() }
    }

    /// Symmetry, nondegeneracy and cyclicity of the attached pairing.
    pub fn check_cyclic_pairing(&self) -> Result<PairingReport> {
        let p = self.pairing()?;
        let d = -p.degree;
        let mut rep = PairingReport::default();
        for (&(i, j), v) in &p.entries {
            if self.deg(i) + self.deg(j) != d {
                rep.degree_failures.push((i, j));
            }
            let w = p.get(j, i);
            let expect = if odd(self.deg(i) * self.deg(j)) { -v.clone() } else { v.clone() };
            if w != expect {
                rep.symmetry_failures.push((i, j));
            }
        }
        let degs: BTreeSet<i64> = self.basis.iter().map(|g| g.degree).collect();
        for &k in &degs {
            let rows: Vec<usize> = (0..self.dim()).filter(|&i| self.deg(i) == k).collect();
            let cols: Vec<usize> = (0..self.dim()).filter(|&i| self.deg(i) == d - k).collect();
            let mut m = SparseMatrix::new(rows.len(), cols.len());
            for (a, &i) in rows.iter().enumerate() {
                for (b, &j) in cols.iter().enumerate() {
                    m.set(a, b, p.get(i, j));
                }
            }
            if rows.len() != cols.len() || rank(&m) != rows.len() {
                rep.degenerate_blocks.push(k);
            }
        }
        let ar: Vec<usize> = self.arities().collect();
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                for &r in &ar {
                    if !self.cyclic_identity_holds(p, d, a, b, r) {
                        rep.cyclic_failures.push((a, b, r));
                    }
                }
            }
        }
        Ok(rep)
    }

    /// `<a, b^1> b^2...b^r = (-1)^{r + |b^1|(|a| + r)} <b, a^r> a^1...a^{r-1}`
    /// with `|b^1| = d - |a|`.
    fn cyclic_identity_holds(&self, p: &CyclicPairing, d: i64, a: usize, b: usize, r: usize) -> bool {
        let mut lhs = TensorVec::zero();
        for (tup, c) in self.coproducts[&r][b].iter() {
            let v = p.get(a, tup[0]);
            if !v.is_zero() {
                lhs.add_term(tup[1..].to_vec(), c * v);
            }
        }
        let mut rhs = TensorVec::zero();
        for (tup, c) in self.coproducts[&r][a].iter() {
            let v = p.get(b, tup[r - 1]);
            if !v.is_zero() {
                rhs.add_term(tup[..r - 1].to_vec(), c * v);
            }
        }
        let b1 = d - self.deg(a);
        let neg = odd(r as i64 + b1 * (self.deg(a) + r as i64));
        if neg {
            rhs = rhs.neg();
        }
        lhs == rhs
    }

    /// The dual A-infinity algebra: `A_i` is dual to `c_i`, `μ_n` is the
    /// transpose of `Δ_n`, the pairing is transported as `(G^{-1})^T`.
    pub fn dualize(&self) -> AInfAlgebra {
        let mut products: BTreeMap<usize, BTreeMap<Vec<usize>, Lin<usize>>> = BTreeMap::new();
        for (&n, ds) in &self.coproducts {
            let table = products.entry(n).or_default();
            for (l, d) in ds.iter().enumerate() {
                for (tup, c) in d.iter() {
                    table.entry(tup.clone()).or_default().add_term(l, c.clone());
                }
            }
            table.retain(|_, v| !v.is_zero());
        }
        let pairing = self.pairing.as_ref().map(|p| CyclicPairing {
            degree: p.degree,
            entries: transpose_inverse(self.dim(), &p.entries).unwrap_or_default(),
        });
        AInfAlgebra {
            name: self.name.clone(),
            basis: self.basis.clone(),
            products,
            unit: self.coaugmentation,
            augmentation: self.counit.clone(),
            pairing,
        }
    }
}

/// `(M^{-1})^T` for a square sparse matrix, if invertible.
pub(crate) fn transpose_inverse(n: usize, m: &BTreeMap<(usize, usize), Q>) -> Option<BTreeMap<(usize, usize), Q>> {
    let mut mat = SparseMatrix::new(n, n);
    for (&(i, j), v) in m {
        mat.set(i, j, v.clone());
    }
    // solve M X = I column by column; (M^{-1})^T_{ij} = X_{ji}
    let mut ech = crate::linalg::Echelon::new();
    for c in mat.column_vectors() {
        ech.insert(&c);
    }
    if ech.rank() != n {
        return None;
    }
    let mut out = BTreeMap::new();
    for j in 0..n {
        let x = ech.express(&Lin::basis(j))?;
        for (&i, v) in x.iter() {
            out.insert((j, i), v.clone());
        }
    }
    Some(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StasheffViolation {
    pub element: usize,
    pub arity: usize,
    /// The `(r, s, t)` triples contributing to the nonzero relation.
    pub triples: Vec<Slot>,
    pub residual: TensorVec,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AinfReport {
    pub stasheff: Vec<StasheffViolation>,
    pub counit: Vec<String>,
}

impl AinfReport {
    pub fn passed(&self) -> bool {
        self.stasheff.is_empty() && self.counit.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairingReport {
    pub degree_failures: Vec<(usize, usize)>,
    pub symmetry_failures: Vec<(usize, usize)>,
    /// Degrees whose pairing block is not square of full rank.
    pub degenerate_blocks: Vec<i64>,
    /// `(a, b, r)` for which the cyclic identity fails.
    pub cyclic_failures: Vec<(usize, usize, usize)>,
}

impl PairingReport {
    pub fn passed(&self) -> bool {
        self.degree_failures.is_empty()
            && self.symmetry_failures.is_empty()
            && self.degenerate_blocks.is_empty()
            && self.cyclic_failures.is_empty()
    }
}

/// A finite-dimensional A-infinity algebra given by structure constants on
/// basis tuples. Basis element `i` is dual to coalgebra element `i` and keeps
/// its degree label; only parities enter the sign rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfAlgebra {
    pub name: String,
    pub basis: Vec<Generator>,
    /// `products[n][(i_1..i_n)] = μ_n(a_{i_1}, ..., a_{i_n})`.
    pub products: BTreeMap<usize, BTreeMap<Vec<usize>, Lin<usize>>>,
    pub unit: usize,
    pub augmentation: Lin<usize>,
    pub pairing: Option<CyclicPairing>,
}

impl AInfAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn deg(&self, i: usize) -> i64 {
        self.basis[i].degree
    }

    pub fn mu(&self, args: &[usize]) -> Lin<usize> {
        self.products.get(&args.len()).and_then(|t| t.get(args)).cloned().unwrap_or_default()
    }

    /// Multilinear extension of `μ_n` to linear combinations.
    pub fn mu_lin(&self, args: &[Lin<usize>]) -> Lin<usize> {
        let mut out = Lin::zero();
        let mut idx = alloc::vec![0usize; args.len()];
        let lists: Vec<Vec<(usize, Q)>> =
            args.iter().map(|a| a.iter().map(|(k, c)| (*k, c.clone())).collect()).collect();
        if lists.iter().any(|l| l.is_empty()) {
            return out;
        }
        loop {
            let tup: Vec<usize> = idx.iter().enumerate().map(|(p, &i)| lists[p][i].0).collect();
            let mut c = Q::one();
            for (p, &i) in idx.iter().enumerate() {
                c *= &lists[p][i].1;
            }
            out.add_scaled(&self.mu(&tup), &c);
            let mut p = args.len();
            loop {
                if p == 0 {
                    return out;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < lists[p].len() {
                    break;
                }
                idx[p] = 0;
            }
        }
    }

    /// `<μ_n(a_1..a_n), a_{n+1}> = (-1)^{n + |a_{n+1}|(|a_1|+..+|a_n|)} <μ_n(a_{n+1}, a_1..a_{n-1}), a_n>`
    /// on all basis tuples. Returns the failing tuples.
    pub fn check_cyclic(&self) -> Result<Vec<Vec<usize>>> {
        let p = self.pairing.as_ref().ok_or(Error::NoPairing)?;
        let pair = |x: &Lin<usize>, j: usize| -> Q {
            let mut s = Q::zero();
            for (i, c) in x.iter() {
                s += c * p.get(*i, j);
            }
            s
        };
        let mut fails = Vec::new();
        for &n in self.products.keys() {
            let total = n + 1;
            let mut idx = alloc::vec![0usize; total];
            'outer: loop {
                let args = &idx[..n];
                let last = idx[n];
                let lhs = pair(&self.mu(args), last);
                let mut rot = alloc::vec![last];
                rot.extend_from_slice(&idx[..n - 1]);
                let rhs = pair(&self.mu(&rot), idx[n - 1]);
                let sdeg: i64 = args.iter().map(|&i| self.deg(i)).sum();
                let rhs = if odd(n as i64 + self.deg(last) * sdeg) { -rhs } else { rhs };
                if lhs != rhs {
                    fails.push(idx.clone());
                }
                let mut k = total;
                loop {
                    if k == 0 {
                        break 'outer;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < self.dim() {
                        break;
                    }
                    idx[k] = 0;
                }
            }
        }
        Ok(fails)
    }

    /// Inverse of `AInfCoalgebra::dualize`.
    pub fn dualize(&self) -> AInfCoalgebra {
        let mut coproducts: BTreeMap<usize, Vec<TensorVec>> = BTreeMap::new();
        for (&n, table) in &self.products {
            let ds = coproducts.entry(n).or_insert_with(|| alloc::vec![TensorVec::zero(); self.dim()]);
            for (tup, out) in table {
                for (l, c) in out.iter() {
                    ds[*l].add_term(tup.clone(), c.clone());
                }
            }
        }
        let pairing = self.pairing.as_ref().map(|p| CyclicPairing {
            degree: p.degree,
            entries: transpose_inverse(self.dim(), &p.entries).unwrap_or_default(),
        });
        AInfCoalgebra {
            name: self.name.clone(),
            basis: self.basis.clone(),
            coproducts,
            counit: self.augmentation.clone(),
            coaugmentation: self.unit,
            pairing,
        }
    }
}

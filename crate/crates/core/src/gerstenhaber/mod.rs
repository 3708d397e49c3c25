//! Hochschild cochains of the dual A-infinity algebra, the Gerstenhaber
//! operations, the cap product, and the duality map from coalgebra chains.
//!
//! A cochain is stored as a multilinear map on the suspension `sA`: the key
//! `(x_1 .. x_n; a)` with coefficient `c` means `f(sa_{x_1}, .., sa_{x_n}) = c sa`.
//! Here `A_i` is dual to `c_i`, so the key is also the decomposable
//! `(c_{x_1}, .., c_{x_n}) ⊗ a` of `C^{⊗n} ⊗ A`. The parity of `sa_i` is the
//! letter degree `|c_i| - 1`, and a key has degree `|sa| - Σ |sa_{x_k}|`.
//!
//! The structure map `m` collects all products: `m(sa_{y_1}, .., sa_{y_k})` is
//! read off the unreduced cobar differential of each letter. Composition
//! inserts with the Koszul sign of the inserted map passing the earlier
//! inputs, `δ = [m, -]`, and `δ² = 0` is `d² = 0` in the cobar algebra.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::ainf::AInfCoalgebra;
use crate::cobar::{connes_b, Chain, Cobar, MarkedWord};
use crate::error::Result;
use crate::poisson::DoublePoisson;
use crate::tensor::{odd, Lin, Poly, Word, Q};

/// `C^{⊗n} ⊗ A`, keyed by `(inputs, output)`.
pub type Cochain = Lin<(Vec<usize>, usize)>;

/// Hochschild chains of `A`: `(a_0, a_1, .., a_m)`.
pub type AlgebraChain = Lin<Vec<usize>>;

/// The Hochschild cochain complex of the dual of a coalgebra.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub coalgebra: Arc<AInfCoalgebra>,
    cobar: Cobar,
    structure: Cochain,
    mu2: BTreeMap<(usize, usize), Lin<usize>>,
}

impl CochainComplex {
    pub fn new(c: &AInfCoalgebra) -> Self {
        let cobar = Cobar::with_counit(c);
        let mut structure = Cochain::zero();
        let mut mu2: BTreeMap<(usize, usize), Lin<usize>> = BTreeMap::new();
        for l in 0..c.dim() {
            for (w, coef) in cobar.d_full_word(&Word::letter(l)).iter() {
                structure.add_term((w.0.clone(), l), coef.clone());
                if w.len() == 2 {
                    mu2.entry((w.0[0], w.0[1])).or_default().add_term(l, coef.clone());
                }
            }
        }
        CochainComplex { coalgebra: cobar.coalgebra.clone(), cobar, structure, mu2 }
    }

    /// Parity representative of `sa_i`.
    pub fn sdeg(&self, i: usize) -> i64 {
        self.cobar.deg(i)
    }

    fn sdeg_sum(&self, xs: &[usize]) -> i64 {
        self.cobar.word_deg(xs)
    }

    /// Degree of a key as a map on `sA`.
    pub fn key_deg(&self, key: &(Vec<usize>, usize)) -> i64 {
        self.sdeg(key.1) - self.sdeg_sum(&key.0)
    }

    /// The structure cochain `m = Σ m_k`.
    pub fn structure(&self) -> &Cochain {
        &self.structure
    }

    /// The unit 0-cochain `() ↦ 1`.
    pub fn unit(&self) -> Cochain {
        Cochain::basis((Vec::new(), self.coalgebra.coaugmentation))
    }

    /// The identity 1-cochain.
    pub fn identity(&self) -> Cochain {
        (0..self.coalgebra.dim()).map(|i| ((alloc::vec![i], i), Q::one())).collect()
    }

    /// `μ_2` on `A`, `μ_2(a, b) = (-1)^{|a|} s^-1 m(sa, sb)`.
    pub fn mu2(&self, a: usize, b: usize) -> Lin<usize> {
        match self.mu2.get(&(a, b)) {
            Some(v) if odd(self.coalgebra.deg(a)) => v.neg(),
            Some(v) => v.clone(),
            None => Lin::zero(),
        }
    }

    /// `f ∘ g`: `g` inserted into each input slot of `f`, on decomposables.
    pub fn compose(&self, f: &Cochain, g: &Cochain) -> Cochain {
        let mut out = Cochain::zero();
        for ((ys, b), cg) in g.iter() {
            let gdeg = self.key_deg(&(ys.clone(), *b));
            for ((xs, a), cf) in f.iter() {
                let mut pre = 0;
                for k in 0..xs.len() {
                    if xs[k] == *b {
                        let mut v = xs[..k].to_vec();
                        v.extend_from_slice(ys);
                        v.extend_from_slice(&xs[k + 1..]);
                        out.add_signed((v, *a), &(cf * cg), odd(gdeg * pre));
                    }
                    pre += self.sdeg(xs[k]);
                }
            }
        }
        out
    }

    /// `{f, g} = f ∘ g - (-1)^{|f||g|} g ∘ f`, summed over homogeneous parts.
    pub fn bracket(&self, f: &Cochain, g: &Cochain) -> Cochain {
        let mut out = Cochain::zero();
        for (kf, cf) in f.iter() {
            let fi = Cochain::single(kf.clone(), cf.clone());
            for (kg, cg) in g.iter() {
                let gi = Cochain::single(kg.clone(), cg.clone());
                out.add_assign(&self.compose(&fi, &gi));
                let s = self.key_deg(kf) * self.key_deg(kg);
                out.add_scaled(&self.compose(&gi, &fi), &sign_of(!odd(s)));
            }
        }
        out
    }

    /// The Hochschild differential `δ f = {m, f}`.
    pub fn delta(&self, f: &Cochain) -> Cochain {
        self.bracket(&self.structure, f)
    }

    /// Cup product `f ∪ g = (-1)^{|f| + 1} m_2(f ⊗ g)`, `|f|` the degree on `sA`.
    pub fn cup(&self, f: &Cochain, g: &Cochain) -> Cochain {
        let mut out = Cochain::zero();
        for ((xs, a), cf) in f.iter() {
            let fdeg = self.key_deg(&(xs.clone(), *a));
            let xdeg = self.sdeg_sum(xs);
            for ((ys, b), cg) in g.iter() {
                let Some(prod) = self.mu2.get(&(*a, *b)) else {
                    continue;
                };
                let gdeg = self.key_deg(&(ys.clone(), *b));
                let neg = odd(fdeg + 1 + gdeg * xdeg);
                let mut v = xs.clone();
                v.extend_from_slice(ys);
                for (&c, cp) in prod.iter() {
                    out.add_signed((v.clone(), c), &(cf * cg * cp), neg);
                }
            }
        }
        out
    }

    /// Value of a cochain on a tuple of basis vectors of `sA`.
    pub fn evaluate(&self, f: &Cochain, args: &[usize]) -> Lin<usize> {
        let mut out = Lin::zero();
        for ((xs, a), c) in f.iter() {
            if xs.as_slice() == args {
                out.add_term(*a, c.clone());
            }
        }
        out
    }

    /// `f ∘ g` by evaluating both maps on every basis tuple of the right
    /// length, the pointwise reading of the insertion formula.
    pub fn compose_pointwise(&self, f: &Cochain, g: &Cochain) -> Cochain {
        let dim = self.coalgebra.dim();
        let mut out = Cochain::zero();
        let mut arities: Vec<(usize, usize)> = Vec::new();
        for (xs, _) in f.keys() {
            for (ys, _) in g.keys() {
                if !xs.is_empty() && !arities.contains(&(xs.len(), ys.len())) {
                    arities.push((xs.len(), ys.len()));
                }
            }
        }
        for (n, m) in arities {
            let len = n + m - 1;
            let mut fa = f.clone();
            fa.retain(|(xs, _)| xs.len() == n);
            let mut ga = g.clone();
            ga.retain(|(ys, _)| ys.len() == m);
            for tuple in tuples(dim, len) {
                for k in 0..n {
                    let inner = self.evaluate(&ga, &tuple[k..k + m]);
                    if inner.is_zero() {
                        continue;
                    }
                    let pre = self.sdeg_sum(&tuple[..k]);
                    let mut args = tuple[..k].to_vec();
                    args.push(0);
                    args.extend_from_slice(&tuple[k + m..]);
                    for (&b, cb) in inner.iter() {
                        args[k] = b;
                        let gdeg = self.sdeg(b) - self.sdeg_sum(&tuple[k..k + m]);
                        for (&a, c) in self.evaluate(&fa, &args).iter() {
                            out.add_signed((tuple.clone(), a), &(c * cb), odd(gdeg * pre));
                        }
                    }
                }
            }
        }
        out
    }

    /// The bracket through [`CochainComplex::compose_pointwise`].
    pub fn bracket_pointwise(&self, f: &Cochain, g: &Cochain) -> Cochain {
        let mut out = Cochain::zero();
        for (kf, cf) in f.iter() {
            let fi = Cochain::single(kf.clone(), cf.clone());
            for (kg, cg) in g.iter() {
                let gi = Cochain::single(kg.clone(), cg.clone());
                out.add_assign(&self.compose_pointwise(&fi, &gi));
                let s = self.key_deg(kf) * self.key_deg(kg);
                out.add_scaled(&self.compose_pointwise(&gi, &fi), &sign_of(!odd(s)));
            }
        }
        out
    }

    /// `α ∩ f = (a_0 f(a_1..a_n), a_{n+1}, .., a_m)`, zero when `m < n`.
    /// The cochain passes `a_{n+1} .. a_m`, with degrees taken on `A`.
    pub fn cap(&self, alpha: &AlgebraChain, f: &Cochain) -> AlgebraChain {
        let mut out = AlgebraChain::zero();
        for (ch, ca) in alpha.iter() {
            let Some((&a0, rest)) = ch.split_first() else {
                continue;
            };
            for ((xs, b), cf) in f.iter() {
                let n = xs.len();
                if rest.len() < n || rest[..n] != xs[..] {
                    continue;
                }
                let fdeg = self.key_deg(&(xs.clone(), *b)) - 1;
                let tail: i64 = rest[n..].iter().map(|&i| self.coalgebra.deg(i)).sum();
                let neg = odd(fdeg * tail);
                for (&c, cp) in self.mu2(a0, *b).iter() {
                    let mut v = alloc::vec![c];
                    v.extend_from_slice(&rest[n..]);
                    out.add_signed(v, &(ca * cf * cp), neg);
                }
            }
        }
        out
    }

    /// The duality map on coalgebra Hochschild chains. A chain `(c_0; w)`
    /// is read as `(w, c_0)`, so that `Φ(c_0; w) = w ⊗ φ(c_0)` with
    /// `φ(c) = (-1)^{d|c|} <c, ->`, the pairing twisted as in the double
    /// bracket, and the overall sign `(-1)^{|c_0||w| + |Φ(c_0; w)|}` in letter
    /// degrees. With these signs `Φ b = (-1)^{|Φ|} δ Φ`.
    pub fn tradler_phi(&self, x: &Chain) -> Result<Cochain> {
        let pairing = self.coalgebra.pairing()?;
        let d = self.coalgebra.cy_dimension()?;
        let mut out = Cochain::zero();
        for (m, c) in x.iter() {
            let c0 = m.marked;
            let w = &m.word.0;
            let wdeg = self.sdeg_sum(w);
            for b in 0..self.coalgebra.dim() {
                let pv = pairing.get(c0, b);
                if pv.is_zero() {
                    continue;
                }
                let key = (w.clone(), b);
                let e = self.sdeg(c0) * wdeg + self.key_deg(&key) + d * self.coalgebra.deg(c0);
                out.add_signed(key, &(c * pv), odd(e));
            }
        }
        Ok(out)
    }

    /// [`CochainComplex::tradler_phi`] on words, the first letter marked.
    pub fn tradler_phi_words(&self, p: &Poly) -> Result<Cochain> {
        let chain: Chain = p.map_keys(|w| {
            let (&first, rest) = w.0.split_first()?;
            Some((MarkedWord::new(first, Word(rest.to_vec())), false))
        });
        self.tradler_phi(&chain)
    }
}

/// Both sides of the duality between the Loday bracket and the Gerstenhaber
/// bracket, evaluated on two cobar words.
#[derive(Clone, Debug, PartialEq)]
pub struct DualityReport {
    pub lhs: Cochain,
    pub rhs: Cochain,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `Φ B {u, v}` against `{Φ B v, Φ B u}` for the Loday bracket of `dp`.
/// With cochains read as maps on `sA` the composition order is opposite to
/// the one on `Hom(A^{⊗n}, A)`, which swaps the arguments.
pub fn verify_duality(dp: &DoublePoisson, u: &Poly, v: &Poly) -> Result<DualityReport> {
    let cx = CochainComplex::new(&dp.cobar.coalgebra);
    let cb = &dp.cobar;
    let lhs = cx.tradler_phi(&connes_b(cb, &dp.loday_bracket(u, v)))?;
    let fu = cx.tradler_phi(&connes_b(cb, u))?;
    let fv = cx.tradler_phi(&connes_b(cb, v))?;
    let rhs = cx.bracket(&fv, &fu);
    Ok(DualityReport { lhs, rhs })
}

/// A letter of `u` (tag 0) or `v` (tag 1).
type Tagged = (u8, usize);

/// Number of summands on each side of the duality for words of lengths
/// `n` and `m` in formal letters where every `u_i` pairs with every `v_j`.
/// The left side counts letter pairs of the bracket times rotations of each
/// result; the right side counts slots of one rotation cochain that accept
/// the output of another.
pub fn duality_summand_counts(n: usize, m: usize) -> (usize, usize) {
    // formal letters: u_i is (0, i), v_j is (1, j); outputs are duals
    let u: Vec<(u8, usize)> = (0..n).map(|i| (0, i)).collect();
    let v: Vec<(u8, usize)> = (0..m).map(|j| (1, j)).collect();
    let pairs = |a: &(u8, usize), b: &(u8, usize)| a.0 != b.0;
    let mut left = 0;
    for x in &u {
        for y in &v {
            if pairs(x, y) {
                left += n + m - 2;
            }
        }
    }
    let rotations = |w: &[(u8, usize)]| -> Vec<(Vec<Tagged>, Tagged)> {
        (0..w.len())
            .map(|i| {
                let mut ins = w[i + 1..].to_vec();
                ins.extend_from_slice(&w[..i]);
                (ins, w[i])
            })
            .collect()
    };
    let mut right = 0;
    for (fi, fo) in rotations(&u) {
        for (gi, go) in rotations(&v) {
            right += fi.iter().filter(|x| pairs(x, &go)).count();
            right += gi.iter().filter(|y| pairs(y, &fo)).count();
        }
    }
    (left, right)
}

fn sign_of(neg: bool) -> Q {
    if neg {
        -Q::one()
    } else {
        Q::one()
    }
}

fn tuples(dim: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * dim);
        for t in &out {
            for i in 0..dim {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

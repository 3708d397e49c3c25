//! Graded generators, tensor words, rational linear combinations and the
//! Koszul sign rule.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parity helper: true when `(-1)^e = -1`.
#[inline]
pub fn odd(e: i64) -> bool {
    e.rem_euclid(2) == 1
}

/// Render a rational as `p/q` (or `p` when integral).
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        alloc::format!("{}", x.numer())
    } else {
        alloc::format!("{}/{}", x.numer(), x.denom())
    }
}

/// Finite formal linear combination with rational coefficients and no stored
/// zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lin<K: Ord>(BTreeMap<K, Q>);

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Lin(BTreeMap::new())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Lin<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.0 {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{:?}", fmt_q(c), k)?;
        }
        Ok(())
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: Q) -> Self {
        let mut l = Self::zero();
        l.add_term(k, c);
        l
    }

    pub fn basis(k: K) -> Self {
        Self::single(k, Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Q)> {
        self.0.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.0.keys()
    }

    pub fn coeff(&self, k: &K) -> Q {
        self.0.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, k: K, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(k) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Add `(-1)^neg * c * k`.
    pub fn add_signed(&mut self, k: K, c: &Q, neg: bool) {
        if neg {
            self.add_term(k, -c.clone());
        } else {
            self.add_term(k, c.clone());
        }
    }

    pub fn add_assign(&mut self, other: &Lin<K>) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Lin<K>, s: &Q) {
        if s.is_zero() {
            return;
        }
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c * s);
        }
    }

    pub fn scaled(&self, s: &Q) -> Lin<K> {
        let mut out = Lin::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn neg(&self) -> Lin<K> {
        self.scaled(&-Q::one())
    }

    pub fn sub(&self, other: &Lin<K>) -> Lin<K> {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one());
        out
    }

    pub fn plus(&self, other: &Lin<K>) -> Lin<K> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// Apply a linear map given on basis keys.
    pub fn map_linear<K2: Ord + Clone, F: FnMut(&K) -> Lin<K2>>(&self, mut f: F) -> Lin<K2> {
        let mut out = Lin::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Relabel keys with a sign: `f` returns the new key and whether to negate.
    pub fn map_keys<K2: Ord + Clone, F: FnMut(&K) -> Option<(K2, bool)>>(&self, mut f: F) -> Lin<K2> {
        let mut out = Lin::zero();
        for (k, c) in self.iter() {
            if let Some((k2, neg)) = f(k) {
                out.add_signed(k2, c, neg);
            }
        }
        out
    }

    pub fn retain<F: FnMut(&K) -> bool>(&mut self, mut f: F) {
        self.0.retain(|k, _| f(k));
    }

    pub fn into_inner(self) -> BTreeMap<K, Q> {
        self.0
    }

    pub fn max_abs_numer_bits(&self) -> u64 {
        self.0.values().map(|c| c.numer().abs().bits()).max().unwrap_or(0)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for Lin<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        let mut l = Lin::zero();
        for (k, c) in iter {
            l.add_term(k, c);
        }
        l
    }
}

/// A graded generator: symbol, homological degree and internal weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub id: String,
    pub degree: i64,
    pub weight: u32,
}

impl Generator {
    pub fn new(id: impl Into<String>, degree: i64, weight: u32) -> Self {
        Generator { id: id.into(), degree, weight }
    }
}

/// An ordered set of generators; letter indices follow declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<Generator>,
    index: BTreeMap<String, usize>,
}

impl Alphabet {
    pub fn new(letters: Vec<Generator>) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, g) in letters.iter().enumerate() {
            if index.insert(g.id.clone(), i).is_some() {
                return Err(Error::BadParameters(alloc::format!("duplicate generator id `{}`", g.id)));
            }
        }
        Ok(Alphabet { letters, index })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn get(&self, i: usize) -> &Generator {
        &self.letters[i]
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn lookup(&self, id: &str) -> Result<usize> {
        self.index.get(id).copied().ok_or_else(|| Error::UnknownGenerator(id.into()))
    }

    #[inline]
    pub fn deg(&self, i: usize) -> i64 {
        self.letters[i].degree
    }

    pub fn word_degree(&self, w: &[usize]) -> i64 {
        w.iter().map(|&i| self.letters[i].degree).sum()
    }

    pub fn word_weight(&self, w: &[usize]) -> u32 {
        w.iter().map(|&i| self.letters[i].weight).sum()
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return String::from("1");
        }
        let parts: Vec<&str> = w.0.iter().map(|&i| self.letters[i].id.as_str()).collect();
        alloc::format!("[{}]", parts.join("|"))
    }
}

/// A tensor word; the empty word is the unit. Ordered by length, then
/// lexicographically by letter index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(alloc::vec![i])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// Linear combination of words.
pub type Poly = Lin<Word>;

/// Concatenation product of two linear combinations of words.
pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            out.add_term(u.concat(v), cu * cv);
        }
    }
    out
}

/// An element of the free graded algebra on an alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeElement {
    pub alphabet: Arc<Alphabet>,
    pub terms: Poly,
}

impl FreeElement {
    pub fn new(alphabet: Arc<Alphabet>, terms: Poly) -> Self {
        FreeElement { alphabet, terms }
    }

    pub fn one(alphabet: Arc<Alphabet>) -> Self {
        FreeElement { alphabet, terms: Poly::basis(Word::unit()) }
    }

    pub fn word(alphabet: Arc<Alphabet>, letters: Vec<usize>) -> Self {
        FreeElement { alphabet, terms: Poly::basis(Word(letters)) }
    }

    fn same_set(&self, other: &FreeElement) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::GeneratorSetMismatch)
        }
    }

    pub fn multiply(&self, other: &FreeElement) -> Result<FreeElement> {
        self.same_set(other)?;
        Ok(FreeElement { alphabet: self.alphabet.clone(), terms: mul(&self.terms, &other.terms) })
    }

    pub fn add(&self, other: &FreeElement) -> Result<FreeElement> {
        self.same_set(other)?;
        Ok(FreeElement { alphabet: self.alphabet.clone(), terms: self.terms.plus(&other.terms) })
    }

    /// Re-insert every term; a no-op on well-formed values.
    pub fn canonicalize(&self) -> FreeElement {
        FreeElement {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    pub fn render(&self) -> String {
        render_poly(&self.alphabet, &self.terms)
    }
}

/// Text form `c1*[a|b] + c2*[c] - 1`, with unit coefficients omitted.
pub fn render_poly(alpha: &Alphabet, p: &Poly) -> String {
    render_lin(p, |w| alpha.render_word(w))
}

pub fn render_lin<K: Ord + Clone, F: Fn(&K) -> String>(p: &Lin<K>, f: F) -> String {
    if p.is_zero() {
        return String::from("0");
    }
    let mut s = String::new();
    for (i, (k, c)) in p.iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !a.is_one() {
            s.push_str(&fmt_q(&a));
            s.push('*');
        }
        s.push_str(&f(k));
    }
    s
}

/// Koszul sign of a permutation of graded objects.
///
/// Position `i` of the output holds input object `perm[i]`. The sign is the
/// product over adjacent transpositions of `(-1)^{|a||b|}`, which reduces to
/// the inversions of `perm` weighted by degree products. Returns `true` for -1.
pub fn koszul_sign(perm: &[usize], degrees: &[i64]) -> Result<bool> {
    if perm.len() != degrees.len() {
        return Err(Error::LengthMismatch { expected: degrees.len(), found: perm.len() });
    }
    let n = perm.len();
    let mut seen = alloc::vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::BadParameters(String::from("not a permutation")));
        }
        seen[p] = true;
    }
    let mut e = 0i64;
    for i in 0..n {
        for j in i + 1..n {
            if perm[i] > perm[j] {
                e += degrees[perm[i]] * degrees[perm[j]];
            }
        }
    }
    Ok(odd(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> Arc<Alphabet> {
        Arc::new(
            Alphabet::new(alloc::vec![
                Generator::new("v1", 0, 1),
                Generator::new("v2", 1, 1),
                Generator::new("v3", 1, 2)
            ])
            .unwrap(),
        )
    }

    #[test]
    fn koszul_identity_and_swap() {
        assert_eq!(koszul_sign(&[0, 1, 2], &[1, 3, 5]), Ok(false));
        assert_eq!(koszul_sign(&[1, 0], &[1, 1]), Ok(true));
        assert_eq!(koszul_sign(&[1, 0], &[1, 2]), Ok(false));
        assert!(matches!(koszul_sign(&[0], &[1, 1]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn koszul_three_cycle_by_two_swaps() {
        // (a,b,c) -> (c,a,b): swap b,c then a,c.
        let degs = [1, 1, 2];
        let s1 = odd(degs[1] * degs[2]);
        let s2 = odd(degs[0] * degs[2]);
        assert_eq!(koszul_sign(&[2, 0, 1], &degs), Ok(s1 ^ s2));
        let degs = [1, 1, 1];
        assert_eq!(koszul_sign(&[2, 0, 1], &degs), Ok(false));
    }

    #[test]
    fn multiply_examples() {
        let a = alpha();
        let one = FreeElement::one(a.clone());
        let w = FreeElement::word(a.clone(), alloc::vec![0, 1]);
        assert_eq!(one.multiply(&w).unwrap(), w);
        assert_eq!(w.multiply(&one).unwrap(), w);
        let mut t = Poly::zero();
        t.add_term(Word(alloc::vec![0]), q(2));
        t.add_term(Word(alloc::vec![1]), q(1));
        let lhs = FreeElement::new(a.clone(), t).multiply(&FreeElement::word(a.clone(), alloc::vec![0])).unwrap();
        let mut expect = Poly::zero();
        expect.add_term(Word(alloc::vec![0, 0]), q(2));
        expect.add_term(Word(alloc::vec![1, 0]), q(1));
        assert_eq!(lhs.terms, expect);
    }

    #[test]
    fn mismatched_sets() {
        let a = alpha();
        let b = Arc::new(Alphabet::new(alloc::vec![Generator::new("w", 0, 1)]).unwrap());
        let x = FreeElement::one(a);
        let y = FreeElement::one(b);
        assert_eq!(x.multiply(&y), Err(Error::GeneratorSetMismatch));
    }

    #[test]
    fn graded_lex_order() {
        let mut v =
            alloc::vec![Word(alloc::vec![1]), Word(alloc::vec![0, 0]), Word(alloc::vec![]), Word(alloc::vec![0])];
        v.sort();
        assert_eq!(
            v,
            alloc::vec![Word(alloc::vec![]), Word(alloc::vec![0]), Word(alloc::vec![1]), Word(alloc::vec![0, 0])]
        );
    }

    #[test]
    fn render() {
        let a = alpha();
        let mut t = Poly::zero();
        t.add_term(Word(alloc::vec![0, 1]), qr(-1, 2));
        t.add_term(Word(alloc::vec![]), q(1));
        assert_eq!(render_poly(&a, &t), "1 - 1/2*[v1|v2]");
    }
}

//! Differential forms and polyvector fields with polynomial coefficients on
//! an `m`-dimensional space, the volume-form duality and the bracket it
//! induces on forms.
//!
//! A term is a monomial `x^a` together with a strictly increasing index set.
//! Contraction follows `ι_{ξ∧η} = ι_ξ ∘ ι_η`, and `ι_{∂_j}` removes `dx_j`
//! from its slot `p` (counted from 0) with the sign `(-1)^p`. So
//! `ι_{∂x∧∂y}(dx∧dy∧dz) = -dz`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{solve, SVec, SparseMatrix};
use crate::tensor::{fmt_q, odd, Lin, Q};

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// `(monomial, increasing index set)`.
pub type Key = (Monomial, Vec<usize>);

/// A differential form `Σ c x^a dx_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyForm {
    pub var_count: usize,
    pub terms: Lin<Key>,
}

/// A polyvector field `Σ c x^a ∂_J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVector {
    pub var_count: usize,
    pub terms: Lin<Key>,
}

macro_rules! graded_common {
    ($t:ident) => {
        impl $t {
            pub fn zero(var_count: usize) -> Self {
                $t { var_count, terms: Lin::zero() }
            }

            /// `c x^a` times the basis element on `idx`, which is sorted with
            /// its Koszul sign; repeated indices give zero.
            pub fn term(var_count: usize, c: Q, exps: &[u32], idx: &[usize]) -> Self {
                let mut out = Self::zero(var_count);
                if let Some((sorted, neg)) = sort_indices(idx) {
                    let mut m = exps.to_vec();
                    m.resize(var_count, 0);
                    out.terms.add_signed((m, sorted), &c, neg);
                }
                out
            }

            /// A function, the degree 0 part.
            pub fn function(var_count: usize, c: Q, exps: &[u32]) -> Self {
                Self::term(var_count, c, exps, &[])
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_zero()
            }

            pub fn plus(&self, o: &Self) -> Self {
                $t { var_count: self.var_count, terms: self.terms.plus(&o.terms) }
            }

            pub fn sub(&self, o: &Self) -> Self {
                $t { var_count: self.var_count, terms: self.terms.sub(&o.terms) }
            }

            pub fn scaled(&self, c: &Q) -> Self {
                $t { var_count: self.var_count, terms: self.terms.scaled(c) }
            }

            pub fn neg(&self) -> Self {
                self.scaled(&-Q::one())
            }

            /// Degrees present among the terms.
            pub fn degrees(&self) -> Vec<usize> {
                let mut ds: Vec<usize> = self.terms.keys().map(|(_, i)| i.len()).collect();
                ds.sort_unstable();
                ds.dedup();
                ds
            }

            /// The part of degree `k`.
            pub fn part(&self, k: usize) -> Self {
                let mut terms = self.terms.clone();
                terms.retain(|(_, i)| i.len() == k);
                $t { var_count: self.var_count, terms }
            }

            /// Exterior product, with the Koszul sign of sorting the indices.
            pub fn wedge(&self, o: &Self) -> Result<Self> {
                check(self.var_count, o.var_count)?;
                let mut out = Self::zero(self.var_count);
                for ((ma, ia), ca) in self.terms.iter() {
                    for ((mb, ib), cb) in o.terms.iter() {
                        if let Some((idx, neg)) = merge(ia, ib) {
                            out.terms.add_signed((mono_mul(ma, mb), idx), &(ca * cb), neg);
                        }
                    }
                }
                Ok(out)
            }
        }
    };
}

graded_common!(PolyForm);
graded_common!(PolyVector);

fn check(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a, right: b })
    }
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Sorts an index list; `None` on repeats, else the sign of the sort.
fn sort_indices(idx: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = idx.to_vec();
    let mut neg = false;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                neg = !neg;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, neg))
}

fn merge(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    sort_indices(&v)
}

/// `ι_{∂_j}` on a basis form.
fn contract_one(j: usize, idx: &[usize]) -> Option<(Vec<usize>, bool)> {
    let p = idx.iter().position(|&i| i == j)?;
    let mut v = idx.to_vec();
    v.remove(p);
    Some((v, p % 2 == 1))
}

/// `ι_{∂_J}` on a basis form, innermost factor last.
fn contract_basis(jdx: &[usize], idx: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut cur = idx.to_vec();
    let mut neg = false;
    for &j in jdx.iter().rev() {
        let (next, s) = contract_one(j, &cur)?;
        cur = next;
        neg ^= s;
    }
    Some((cur, neg))
}

/// The de Rham differential.
pub fn de_rham_d(a: &PolyForm) -> PolyForm {
    let mut out = PolyForm::zero(a.var_count);
    for ((m, idx), c) in a.terms.iter() {
        for j in 0..a.var_count {
            if m[j] == 0 {
                continue;
            }
            let Some((sorted, neg)) = merge(&[j], idx) else {
                continue;
            };
            let mut mm = m.clone();
            mm[j] -= 1;
            out.terms.add_signed((mm, sorted), &(c * Q::from_integer(m[j].into())), neg);
        }
    }
    out
}

/// `ι_ξ α`.
pub fn contract(xi: &PolyVector, a: &PolyForm) -> Result<PolyForm> {
    check(xi.var_count, a.var_count)?;
    let mut out = PolyForm::zero(a.var_count);
    for ((mx, jdx), cx) in xi.terms.iter() {
        for ((ma, idx), ca) in a.terms.iter() {
            if let Some((rest, neg)) = contract_basis(jdx, idx) {
                out.terms.add_signed((mono_mul(mx, ma), rest), &(cx * ca), neg);
            }
        }
    }
    Ok(out)
}

/// `ω = dx_1 ∧ .. ∧ dx_m`.
pub fn volume_form(m: usize) -> PolyForm {
    PolyForm::term(m, Q::one(), &[], &(0..m).collect::<Vec<_>>())
}

/// `Ψ(ξ) = ι_ξ ω`.
pub fn psi(xi: &PolyVector) -> PolyForm {
    contract(xi, &volume_form(xi.var_count)).expect("same dimension")
}

/// The inverse of [`psi`], termwise: `dx_I` comes from `±∂_J` with `J` the
/// complement of `I`.
pub fn psi_inverse(a: &PolyForm) -> PolyVector {
    let m = a.var_count;
    let all: Vec<usize> = (0..m).collect();
    let mut out = PolyVector::zero(m);
    for ((mono, idx), c) in a.terms.iter() {
        let jdx: Vec<usize> = all.iter().copied().filter(|i| !idx.contains(i)).collect();
        let (rest, neg) = contract_basis(&jdx, &all).expect("complement contracts");
        debug_assert_eq!(&rest, idx);
        out.terms.add_signed((mono.clone(), jdx), c, neg);
    }
    out
}

/// The BV operator `Δ = Ψ^{-1} d Ψ`.
pub fn bv_delta(xi: &PolyVector) -> PolyVector {
    psi_inverse(&de_rham_d(&psi(xi)))
}

/// The bracket measuring how far `Δ` is from a derivation of `∧`:
/// `{a, b} = (-1)^{|a|} (Δ(a∧b) - Δa∧b - (-1)^{|a|} a∧Δb)`, on homogeneous parts.
pub fn schouten_bracket(a: &PolyVector, b: &PolyVector) -> Result<PolyVector> {
    check(a.var_count, b.var_count)?;
    let mut out = PolyVector::zero(a.var_count);
    for k in a.degrees() {
        let ak = a.part(k);
        let mut t = bv_delta(&ak.wedge(b)?).sub(&bv_delta(&ak).wedge(b)?);
        let last = ak.wedge(&bv_delta(b))?;
        t = if odd(k as i64) { t.plus(&last) } else { t.sub(&last) };
        out = if odd(k as i64) { out.sub(&t) } else { out.plus(&t) };
    }
    Ok(out)
}

fn sign(e: i64) -> Q {
    if odd(e) {
        -Q::one()
    } else {
        Q::one()
    }
}

/// `{α, β} = (-1)^{(m-|α|-1)(m-|β|)} ι_η dα` with `η = Ψ^{-1}(dβ)`, extended
/// bilinearly over form degrees.
pub fn hkr_bracket(a: &PolyForm, b: &PolyForm) -> Result<PolyForm> {
    check(a.var_count, b.var_count)?;
    let m = a.var_count as i64;
    let mut out = PolyForm::zero(a.var_count);
    for ka in a.degrees() {
        let da = de_rham_d(&a.part(ka));
        for kb in b.degrees() {
            let eta = psi_inverse(&de_rham_d(&b.part(kb)));
            let t = contract(&eta, &da)?;
            out = out.plus(&t.scaled(&sign((m - ka as i64 - 1) * (m - kb as i64))));
        }
    }
    Ok(out)
}

/// `{{a, b}, c} - {a, {b, c}} + (-1)^{|a|'|b|'} {b, {a, c}}` with the shifted
/// degree `|a|' = k + 2 - m` of a `k`-form, summed over the homogeneous parts
/// of `a` and `b`.
pub fn jacobiator(a: &PolyForm, b: &PolyForm, c: &PolyForm) -> Result<PolyForm> {
    check(a.var_count, b.var_count)?;
    check(a.var_count, c.var_count)?;
    let m = a.var_count as i64;
    let mut out = PolyForm::zero(a.var_count);
    for ka in a.degrees() {
        let a = a.part(ka);
        for kb in b.degrees() {
            let b = b.part(kb);
            let t1 = hkr_bracket(&hkr_bracket(&a, &b)?, c)?;
            let t2 = hkr_bracket(&a, &hkr_bracket(&b, c)?)?;
            let t3 = hkr_bracket(&b, &hkr_bracket(&a, c)?)?;
            let s = sign((ka as i64 + 2 - m) * (kb as i64 + 2 - m));
            out = out.plus(&t1.sub(&t2).plus(&t3.scaled(&s)));
        }
    }
    Ok(out)
}

/// The contraction formula `{α, β} = (-1)^{d-|α|-1} ι_{Ψ^{-1}(dα)} dβ` with `Ψ`
/// taken against a supplied volume class `omega`, a nonzero constant multiple
/// of `dx_1 ∧ .. ∧ dx_m`.
pub fn contraction_bracket(a: &PolyForm, b: &PolyForm, omega: Option<&PolyForm>) -> Result<PolyForm> {
    let omega = omega.ok_or(Error::FundamentalClassMissing)?;
    check(a.var_count, b.var_count)?;
    check(a.var_count, omega.var_count)?;
    let m = a.var_count;
    let vol_key: Key = (alloc::vec![0; m], (0..m).collect());
    let scale = omega.terms.coeff(&vol_key);
    if omega.terms.len() != 1 || scale.is_zero() {
        return Err(Error::BadParameters(String::from("the volume class must be a constant multiple of dx_1..dx_m")));
    }
    let mut out = PolyForm::zero(m);
    for ka in a.degrees() {
        let xi = psi_inverse(&de_rham_d(&a.part(ka))).scaled(&(Q::one() / &scale));
        let t = contract(&xi, &de_rham_d(b))?;
        out = out.plus(&t.scaled(&sign(m as i64 - ka as i64 - 1)));
    }
    Ok(out)
}

fn monomials(vars: usize, total: u32) -> Vec<Monomial> {
    if vars == 0 {
        return if total == 0 { alloc::vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in monomials(vars - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return alloc::vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// A form `x` with `dx = a`, found blockwise on homogeneous components
/// (polynomial degree, form degree), or `None` when `a` is not exact.
pub fn exact_primitive(a: &PolyForm) -> Option<PolyForm> {
    let m = a.var_count;
    let mut blocks: BTreeMap<(u32, usize), Lin<Key>> = BTreeMap::new();
    for ((mono, idx), c) in a.terms.iter() {
        let deg: u32 = mono.iter().sum();
        blocks.entry((deg, idx.len())).or_default().add_term((mono.clone(), idx.clone()), c.clone());
    }
    let mut out = PolyForm::zero(m);
    for ((deg, k), target) in blocks {
        if k == 0 {
            return None;
        }
        let rows: Vec<Key> = monomials(m, deg)
            .into_iter()
            .flat_map(|mo| subsets(m, k).into_iter().map(move |s| (mo.clone(), s)))
            .collect();
        let row_of: BTreeMap<&Key, usize> = rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let cols: Vec<Key> = monomials(m, deg + 1)
            .into_iter()
            .flat_map(|mo| subsets(m, k - 1).into_iter().map(move |s| (mo.clone(), s)))
            .collect();
        let columns: Vec<SVec> = cols
            .iter()
            .map(|key| {
                let f = PolyForm { var_count: m, terms: Lin::basis(key.clone()) };
                de_rham_d(&f).terms.iter().map(|(kk, c)| (row_of[kk], c.clone())).collect()
            })
            .collect();
        let mat = SparseMatrix::from_columns(rows.len(), &columns);
        let b: SVec = target.iter().map(|(kk, c)| (row_of[kk], c.clone())).collect();
        let x = solve(&mat, &b)?;
        for (&j, c) in x.iter() {
            out.terms.add_term(cols[j].clone(), c.clone());
        }
    }
    Some(out)
}

/// Whether two forms agree modulo exact forms.
pub fn same_class(a: &PolyForm, b: &PolyForm) -> bool {
    exact_primitive(&a.sub(b)).is_some()
}

/// Variable names: `x, y, z` up to three variables, else `x1 .. xm`.
pub fn var_names(m: usize) -> Vec<String> {
    if m <= 3 {
        ["x", "y", "z"][..m].iter().map(|s| String::from(*s)).collect()
    } else {
        (1..=m).map(|i| format!("x{i}")).collect()
    }
}

fn render_terms(m: usize, terms: &Lin<Key>, basis: &dyn Fn(&str) -> String, join: &str) -> String {
    if terms.is_zero() {
        return String::from("0");
    }
    let names = var_names(m);
    let mut s = String::new();
    for (i, ((mono, idx), c)) in terms.iter().enumerate() {
        let neg = *c < Q::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() {
            factors.push(fmt_q(&abs));
        }
        for (v, &e) in mono.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(names[v].clone()),
                _ => factors.push(format!("{}^{}", names[v], e)),
            }
        }
        let coef = factors.join("*");
        let basis_part: Vec<String> = idx.iter().map(|&j| basis(&names[j])).collect();
        let basis_part = basis_part.join(join);
        match (coef.is_empty(), basis_part.is_empty()) {
            (true, true) => s.push('1'),
            (true, false) => s.push_str(&basis_part),
            (false, true) => s.push_str(&coef),
            (false, false) => {
                s.push_str(&coef);
                s.push(' ');
                s.push_str(&basis_part);
            }
        }
    }
    s
}

impl PolyForm {
    /// Text form such as `x^2*y*z dx - x dy^dz`.
    pub fn render(&self) -> String {
        render_terms(self.var_count, &self.terms, &|v| format!("d{v}"), "^")
    }
}

impl PolyVector {
    /// Text form such as `x d/dx ^ d/dy`.
    pub fn render(&self) -> String {
        render_terms(self.var_count, &self.terms, &|v| format!("d/d{v}"), " ^ ")
    }
}

#[cfg(test)]
mod tests;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{transpose_inverse, AInfCoalgebra, CyclicPairing, TensorVec};
use crate::error::{Error, Result};
use crate::linalg::{annihilator, Echelon, SVec, SparseMatrix, SubspaceBasis};
use crate::tensor::{q, Generator, Lin, Q};

/// All `k`-subsets of `0..m` in lexicographic order.
fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Parity of the number of inversions.
fn perm_odd(seq: &[usize]) -> bool {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

fn exterior_id(s: &[usize]) -> String {
    if s.is_empty() {
        return String::from("e");
    }
    let parts: Vec<String> = s.iter().map(|i| alloc::format!("v{}", i + 1)).collect();
    alloc::format!("m({})", parts.join(","))
}

/// Exterior coalgebra on `m` generators with the shuffle coproduct and the
/// pairing of degree `-m` normalized by `<e, μ(v_1..v_m)> = 1`.
pub fn exterior_coalgebra(m: usize) -> Result<AInfCoalgebra> {
    if m == 0 {
        return Err(Error::BadParameters(String::from("exterior coalgebra needs m >= 1")));
    }
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for k in 0..=m {
        sets.extend(subsets(m, k));
    }
    let index: BTreeMap<Vec<usize>, usize> = sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let basis = sets.iter().map(|s| Generator::new(exterior_id(s), s.len() as i64, s.len() as u32)).collect();
    let mut delta = Vec::new();
    for s in &sets {
        let mut d = TensorVec::zero();
        for p in 0..=s.len() {
            for pos in subsets(s.len(), p) {
                let left: Vec<usize> = pos.iter().map(|&i| s[i]).collect();
                let right: Vec<usize> = (0..s.len()).filter(|i| !pos.contains(i)).map(|i| s[i]).collect();
                let mut seq = left.clone();
                seq.extend_from_slice(&right);
                let c = if perm_odd(&seq) { -Q::one() } else { Q::one() };
                d.add_term(alloc::vec![index[&left], index[&right]], c);
            }
        }
        delta.push(d);
    }
    let mut entries = BTreeMap::new();
    for (i, s) in sets.iter().enumerate() {
        for (j, t) in sets.iter().enumerate() {
            if s.len() + t.len() != m || s.iter().any(|x| t.contains(x)) {
                continue;
            }
            let mut seq = s.clone();
            seq.extend_from_slice(t);
            entries.insert((i, j), if perm_odd(&seq) { -Q::one() } else { Q::one() });
        }
    }
    let mut coproducts = BTreeMap::new();
    coproducts.insert(2, delta);
    Ok(AInfCoalgebra {
        name: alloc::format!("exterior:{m}"),
        basis,
        coproducts,
        counit: Lin::basis(0),
        coaugmentation: 0,
        pairing: Some(CyclicPairing { degree: -(m as i64), entries }),
    })
}

/// One weight component of a subcoalgebra of the tensor coalgebra `T^c(V)`.
#[derive(Clone, Debug)]
pub struct Component {
    pub weight: u32,
    pub degree: i64,
    /// Basis elements as vectors in `V^{⊗weight}` (base-`dim V` digits, first
    /// letter most significant).
    pub elements: Vec<(String, SVec)>,
}

struct Splitter<'a> {
    vdim: usize,
    by_weight: BTreeMap<u32, (usize, usize, Echelon)>,
    _p: core::marker::PhantomData<&'a ()>,
}

impl<'a> Splitter<'a> {
    fn new(vdim: usize, comps: &'a [Component]) -> Self {
        let mut by_weight = BTreeMap::new();
        let mut offset = 0;
        for (ci, c) in comps.iter().enumerate() {
            let mut ech = Echelon::new();
            for (_, v) in &c.elements {
                ech.insert(v);
            }
            by_weight.insert(c.weight, (ci, offset, ech));
            offset += c.elements.len();
        }
        Splitter { vdim, by_weight, _p: core::marker::PhantomData }
    }

    fn pow(&self, k: u32) -> usize {
        self.vdim.pow(k)
    }

    /// Write `t ∈ V^{⊗(w_1+..+w_r)}` in `W_{w_1} ⊗ .. ⊗ W_{w_r}`.
    fn split(&self, t: &SVec, ws: &[u32]) -> Result<TensorVec> {
        let (_, off, ech) = &self.by_weight[&ws[0]];
        if ws.len() == 1 {
            let x = ech
                .express(t)
                .ok_or_else(|| Error::BadParameters(String::from("deconcatenation leaves the subcoalgebra")))?;
            return Ok(x.iter().map(|(i, c)| (alloc::vec![off + i], c.clone())).collect());
        }
        let rest_w: u32 = ws[1..].iter().sum();
        let block = self.pow(rest_w);
        let mut groups: BTreeMap<usize, SVec> = BTreeMap::new();
        for (&idx, c) in t.iter() {
            groups.entry(idx / block).or_default().add_term(idx % block, c.clone());
        }
        let mut by_tail: BTreeMap<Vec<usize>, SVec> = BTreeMap::new();
        for (u, tu) in &groups {
            for (tail, c) in self.split(tu, &ws[1..])?.iter() {
                by_tail.entry(tail.clone()).or_default().add_term(*u, c.clone());
            }
        }
        let mut out = TensorVec::zero();
        for (tail, head) in by_tail {
            if head.is_zero() {
                continue;
            }
            for (h, c) in self.split(&head, &ws[..1])?.iter() {
                let mut tup = h.clone();
                tup.extend_from_slice(&tail);
                out.add_term(tup, c.clone());
            }
        }
        Ok(out)
    }
}

/// Subcoalgebra of the tensor coalgebra spanned by the given components.
///
/// `Δ_2` is deconcatenation, keeping the splittings whose two weights both
/// occur among the components. When `ternary` is set, every weight-3 element
/// also gets `Δ_3` equal to its full splitting into three weight-1 letters.
pub fn tensor_subcoalgebra(name: &str, vdim: usize, comps: &[Component], ternary: bool) -> Result<AInfCoalgebra> {
    if comps.first().map(|c| c.weight) != Some(0) || comps[0].elements.len() != 1 {
        return Err(Error::BadParameters(String::from("first component must be the weight-0 unit")));
    }
    let sp = Splitter::new(vdim, comps);
    let mut basis = Vec::new();
    for c in comps {
        for (id, _) in &c.elements {
            basis.push(Generator::new(id.clone(), c.degree, c.weight));
        }
    }
    let weights: Vec<u32> = comps.iter().map(|c| c.weight).collect();
    let mut d2 = Vec::new();
    let mut d3 = Vec::new();
    for c in comps {
        for (_, v) in &c.elements {
            let mut d = TensorVec::zero();
            for &p in &weights {
                if p > c.weight || !weights.contains(&(c.weight - p)) {
                    continue;
                }
                d.add_assign(&sp.split(v, &[p, c.weight - p])?);
            }
            d2.push(d);
            let mut t = TensorVec::zero();
            if ternary && c.weight == 3 && weights.contains(&1) {
                t = sp.split(v, &[1, 1, 1])?;
            }
            d3.push(t);
        }
    }
    let mut coproducts = BTreeMap::new();
    coproducts.insert(2, d2);
    if ternary {
        coproducts.insert(3, d3);
    }
    Ok(AInfCoalgebra {
        name: name.to_string(),
        basis,
        coproducts,
        counit: Lin::basis(0),
        coaugmentation: 0,
        pairing: None,
    })
}

/// Index of a word of letters in `V^{⊗k}`.
fn mono(vdim: usize, letters: &[usize]) -> usize {
    letters.iter().fold(0, |acc, &l| acc * vdim + l)
}

fn digits(vdim: usize, k: u32, mut idx: usize) -> Vec<usize> {
    let mut out = alloc::vec![0; k as usize];
    for p in (0..k as usize).rev() {
        out[p] = idx % vdim;
        idx /= vdim;
    }
    out
}

/// `⋂_{i+2+j=k} V^i ⊗ S ⊗ V^j` inside `V^{⊗k}`, via the annihilator of `S`.
fn quadratic_component(vdim: usize, ann: &[SVec], k: u32) -> SubspaceBasis {
    let total = vdim.pow(k);
    if k < 2 {
        return SubspaceBasis::full(total);
    }
    let mut rows = Vec::new();
    for i in 0..=(k - 2) {
        let left = vdim.pow(i);
        let right = vdim.pow(k - 2 - i);
        for r in ann {
            for l in 0..left {
                for rr in 0..right {
                    let mut v = SVec::zero();
                    for (&pq, c) in r.iter() {
                        v.add_term((l * vdim * vdim + pq) * right + rr, c.clone());
                    }
                    rows.push(v);
                }
            }
        }
    }
    let m = SparseMatrix::from_rows(total, &rows);
    crate::linalg::rank_kernel_image(&m).1
}

/// Koszul dual coalgebra of the quadratic algebra `T(V)/(S)`, through weight
/// `cutoff`. Degree equals weight; `Δ_2` is deconcatenation.
pub fn quadratic_koszul_dual(vdim: usize, relations: &SubspaceBasis, cutoff: Option<u32>) -> Result<AInfCoalgebra> {
    let cutoff = cutoff.ok_or(Error::CutoffRequired)?;
    if relations.ambient_dim != vdim * vdim {
        return Err(Error::DimensionMismatch { left: relations.ambient_dim, right: vdim * vdim });
    }
    let ann = annihilator(relations).vectors;
    let mut comps = Vec::new();
    for k in 0..=cutoff {
        let w = quadratic_component(vdim, &ann, k);
        if w.dim() == 0 {
            break;
        }
        let elements = w
            .vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let id = match k {
                    0 => String::from("e"),
                    1 => alloc::format!("v{}", i + 1),
                    _ => alloc::format!("q{k}_{}", i + 1),
                };
                let v = if k == 1 { SVec::basis(i) } else { v.clone() };
                (id, v)
            })
            .collect();
        comps.push(Component { weight: k, degree: k as i64, elements });
    }
    tensor_subcoalgebra("quadratic_dual", vdim, &comps, false)
}

/// Basis of `space` dual to the listed functionals, or, if they are not a
/// basis of the dual, to greedily chosen monomial functionals.
fn dual_basis(
    vdim: usize,
    k: u32,
    space: &SubspaceBasis,
    listed: &[(String, SVec)],
    prefix: &str,
    label_offset: usize,
) -> Vec<(String, SVec)> {
    let dim = space.dim();
    let eval = |f: &SVec, v: &SVec| -> Q {
        let mut s = Q::zero();
        for (i, c) in f.iter() {
            s += c * v.coeff(i);
        }
        s
    };
    let row = |f: &SVec| -> SVec { space.vectors.iter().enumerate().map(|(j, b)| (j, eval(f, b))).collect() };
    let mut chosen: Vec<(String, SVec)> = Vec::new();
    let mut ech = Echelon::new();
    if listed.len() == dim {
        for (name, f) in listed {
            if ech.insert(&row(f)) {
                chosen.push((name.clone(), f.clone()));
            }
        }
    }
    if chosen.len() != dim {
        chosen.clear();
        ech = Echelon::new();
        for idx in 0..vdim.pow(k) {
            if chosen.len() == dim {
                break;
            }
            let f = SVec::basis(idx);
            if ech.insert(&row(&f)) {
                let name: String =
                    digits(vdim, k, idx).iter().map(|d| alloc::format!("{}", d + label_offset)).collect();
                chosen.push((alloc::format!("{prefix}{name}"), f));
            }
        }
    }
    // F_{ij} = f_i(b_j); the dual basis is b X with F X = I.
    let mut cols = Echelon::new();
    let fm: Vec<SVec> = chosen.iter().map(|(_, f)| row(f)).collect();
    for j in 0..dim {
        let col: SVec = (0..dim).map(|i| (i, fm[i].coeff(&j))).collect();
        cols.insert(&col);
    }
    chosen
        .iter()
        .enumerate()
        .map(|(i, (name, _))| {
            let x = cols.express(&SVec::basis(i)).expect("functionals are independent");
            let mut v = SVec::zero();
            for (l, c) in x.iter() {
                v.add_scaled(&space.vectors[*l], c);
            }
            (name.clone(), v)
        })
        .collect()
}

/// Attach the pairing `<u, v> =` coefficient of `uv` on the top class `ν`,
/// transported to the coalgebra.
fn attach_frobenius_pairing(c: &mut AInfCoalgebra, top: usize, nu: &SVec, top_vec: &SVec, d: i64) -> Result<()> {
    let mut scale = Q::zero();
    for (i, v) in nu.iter() {
        scale += v * top_vec.coeff(i);
    }
    if scale.is_zero() {
        return Err(Error::BadParameters(String::from("normalizing monomial vanishes in top degree")));
    }
    let mut h = BTreeMap::new();
    for (tup, v) in c.coproducts[&2][top].iter() {
        h.insert((tup[0], tup[1]), v / &scale);
    }
    let g = transpose_inverse(c.dim(), &h)
        .ok_or_else(|| Error::BadParameters(String::from("Frobenius pairing is degenerate")))?;
    c.pairing = Some(CyclicPairing { degree: -d, entries: g });
    Ok(())
}

fn lin_word(vdim: usize, terms: &[(i64, &[usize])]) -> SVec {
    terms.iter().map(|(c, w)| (mono(vdim, w), q(*c))).collect()
}

fn qlin_word(vdim: usize, terms: &[(Q, &[usize])]) -> SVec {
    terms.iter().map(|(c, w)| (mono(vdim, w), c.clone())).collect()
}

/// Build a quadratic Frobenius dual from the printed relations of `A^!`
/// and the printed monomial basis (`listed[k]`, letters 0-based).
fn frobenius_quadratic(
    name: &str,
    vdim: usize,
    dual_relations: Vec<SVec>,
    listed: &[Vec<Vec<usize>>],
    prefix: &str,
    label_offset: usize,
) -> Result<AInfCoalgebra> {
    let top = listed.len() - 1;
    let ann = SubspaceBasis::span_of(vdim * vdim, &dual_relations).vectors;
    let mut comps = Vec::new();
    for k in 0..=top as u32 + 1 {
        let w = quadratic_component(vdim, &ann, k);
        let expect = listed.get(k as usize).map(|l| l.len()).unwrap_or(0);
        if w.dim() != expect {
            return Err(Error::BadParameters(alloc::format!(
                "degenerate parameters: component of weight {k} has dimension {}, expected {expect}",
                w.dim()
            )));
        }
        if expect == 0 {
            break;
        }
        let fs: Vec<(String, SVec)> = listed[k as usize]
            .iter()
            .map(|word| {
                let label: String = word.iter().map(|l| alloc::format!("{}", l + label_offset)).collect();
                let id = if word.is_empty() { String::from("e") } else { alloc::format!("{prefix}{label}") };
                (id, SVec::basis(mono(vdim, word)))
            })
            .collect();
        let mut elements = dual_basis(vdim, k, &w, &fs, prefix, label_offset);
        if k == 0 {
            elements[0].0 = String::from("e");
        }
        comps.push(Component { weight: k, degree: k as i64, elements });
    }
    let mut c = tensor_subcoalgebra(name, vdim, &comps, false)?;
    let top_idx = c.dim() - 1;
    let nu = SVec::basis(mono(vdim, &listed[top][0]));
    let top_vec = comps[top].elements[0].1.clone();
    attach_frobenius_pairing(&mut c, top_idx, &nu, &top_vec, top as i64)?;
    Ok(c)
}

/// Dual of the 3-dimensional Sklyanin algebra `A(a, b, c)`: the linear dual
/// of `A^!` with its printed basis `1; ξ_i; ξ_i^2; ξ_1ξ_2ξ_3`.
///
/// When the printed degree-2 monomials are dependent in `A^!` (for example
/// at `(0, 1, 1)`), the first independent monomials in lexicographic order
/// are used instead.
pub fn sklyanin3(a: &Q, b: &Q, c: &Q) -> Result<AInfCoalgebra> {
    let v = 3;
    let w = |co: &Q, x: usize, y: usize| (co.clone(), alloc::vec![x, y]);
    let rel = |t: [(Q, Vec<usize>); 2]| -> SVec {
        let r: Vec<(Q, &[usize])> = t.iter().map(|(c, w)| (c.clone(), w.as_slice())).collect();
        qlin_word(v, &r)
    };
    let (na, nb) = (-a.clone(), -b.clone());
    let relations = alloc::vec![
        rel([w(c, 1, 2), w(&nb, 2, 1)]),
        rel([w(b, 0, 0), w(&na, 1, 2)]),
        rel([w(c, 2, 0), w(&nb, 0, 2)]),
        rel([w(b, 1, 1), w(&na, 2, 0)]),
        rel([w(c, 0, 1), w(&nb, 1, 0)]),
        rel([w(b, 2, 2), w(&na, 0, 1)]),
    ];
    let listed = alloc::vec![
        alloc::vec![alloc::vec![]],
        alloc::vec![alloc::vec![0], alloc::vec![1], alloc::vec![2]],
        alloc::vec![alloc::vec![0, 0], alloc::vec![1, 1], alloc::vec![2, 2]],
        alloc::vec![alloc::vec![0, 1, 2]],
    ];
    let name =
        alloc::format!("sklyanin3:{},{},{}", crate::tensor::fmt_q(a), crate::tensor::fmt_q(b), crate::tensor::fmt_q(c));
    frobenius_quadratic(&name, v, relations, &listed, "u", 1)
}

/// Dual of the 4-dimensional Sklyanin algebra; requires
/// `α + β + γ + αβγ = 0` and no parameter in `{0, 1, -1}`.
pub fn sklyanin4(al: &Q, be: &Q, ga: &Q) -> Result<AInfCoalgebra> {
    let one = Q::one();
    if !(al + be + ga + al * be * ga).is_zero() {
        return Err(Error::BadParameters(String::from("need α + β + γ + αβγ = 0")));
    }
    for p in [al, be, ga] {
        if p.is_zero() || *p == one || *p == -one.clone() {
            return Err(Error::BadParameters(String::from("parameters must avoid 0, 1, -1")));
        }
    }
    let v = 4;
    let mut relations: Vec<SVec> = (0..4).map(|i| lin_word(v, &[(1, &[i, i])])).collect();
    // 2 ξ_j ξ_k + (p + 1) ξ_0 ξ_i - (p - 1) ξ_i ξ_0, and the companion with p ± 1 swapped
    let pairs: [(usize, usize, usize, &Q); 3] = [(1, 2, 3, al), (2, 3, 1, be), (3, 1, 2, ga)];
    for &(i, j, k, p) in &pairs {
        let (pp, pm) = (p + &one, p - &one);
        relations.push(qlin_word(v, &[(q(2), &[j, k]), (pp.clone(), &[0, i]), (-pm.clone(), &[i, 0])]));
        relations.push(qlin_word(v, &[(q(2), &[k, j]), (pm, &[0, i]), (-pp, &[i, 0])]));
    }
    let listed = alloc::vec![
        alloc::vec![alloc::vec![]],
        alloc::vec![alloc::vec![0], alloc::vec![1], alloc::vec![2], alloc::vec![3]],
        alloc::vec![
            alloc::vec![0, 1],
            alloc::vec![0, 2],
            alloc::vec![0, 3],
            alloc::vec![1, 0],
            alloc::vec![2, 0],
            alloc::vec![3, 0]
        ],
        alloc::vec![alloc::vec![0, 1, 0], alloc::vec![0, 2, 0], alloc::vec![0, 3, 0], alloc::vec![1, 0, 1]],
        alloc::vec![alloc::vec![0, 1, 0, 1]],
    ];
    let name = alloc::format!(
        "sklyanin4:{},{},{}",
        crate::tensor::fmt_q(al),
        crate::tensor::fmt_q(be),
        crate::tensor::fmt_q(ga)
    );
    frobenius_quadratic(&name, v, relations, &listed, "u", 0)
}

/// Dual of the Yang-Mills algebra on `n` generators with identity metric:
/// weights `0, 1, 3, 4` in degrees `0, 1, 2, 3`, `Δ_2` by deconcatenation
/// and `Δ_3` the splitting of weight-3 elements into letters.
pub fn yang_mills(n: usize) -> Result<AInfCoalgebra> {
    if n < 2 {
        return Err(Error::BadParameters(String::from("yang_mills needs n >= 2")));
    }
    let v = n;
    // r_j = Σ_i x_i x_i x_j - 2 x_i x_j x_i + x_j x_i x_i
    let rels: Vec<SVec> = (0..n)
        .map(|j| {
            let mut r = SVec::zero();
            for i in 0..n {
                r.add_term(mono(v, &[i, i, j]), q(1));
                r.add_term(mono(v, &[i, j, i]), q(-2));
                r.add_term(mono(v, &[j, i, i]), q(1));
            }
            r
        })
        .collect();
    let w3 = SubspaceBasis::span_of(v.pow(3), &rels);
    let lift = |s: &SubspaceBasis, left: bool| -> SubspaceBasis {
        let mut vecs = Vec::new();
        for r in &s.vectors {
            for l in 0..v {
                let mut x = SVec::zero();
                for (&idx, c) in r.iter() {
                    let pos = if left { l * v.pow(3) + idx } else { idx * v + l };
                    x.add_term(pos, c.clone());
                }
                vecs.push(x);
            }
        }
        SubspaceBasis::span_of(v.pow(4), &vecs)
    };
    let w4 = crate::linalg::intersection(&lift(&w3, false), &lift(&w3, true));
    if w3.dim() != n || w4.dim() != 1 {
        return Err(Error::BadParameters(String::from("unexpected Yang-Mills component dimensions")));
    }
    // printed A^! functionals: x_i^* z = Σ_k (x_i x_k x_k)^*, z^2 = Σ_{k,l} (x_k x_k x_l x_l)^*
    let f3: Vec<(String, SVec)> =
        (0..n).map(|i| (alloc::format!("r{}", i + 1), (0..n).map(|k| (mono(v, &[i, k, k]), q(1))).collect())).collect();
    let z2: SVec = (0..n).flat_map(|k| (0..n).map(move |l| (mono(v, &[k, k, l, l]), q(1)))).collect();
    let e3 = dual_basis(v, 3, &w3, &f3, "r", 1);
    let e4 = dual_basis(v, 4, &w4, &[(String::from("w"), z2.clone())], "w", 1);
    let comps = alloc::vec![
        Component { weight: 0, degree: 0, elements: alloc::vec![(String::from("e"), SVec::basis(0))] },
        Component {
            weight: 1,
            degree: 1,
            elements: (0..n).map(|i| (alloc::format!("x{}", i + 1), SVec::basis(i))).collect(),
        },
        Component { weight: 3, degree: 2, elements: e3 },
        Component { weight: 4, degree: 3, elements: e4.clone() },
    ];
    let mut c = tensor_subcoalgebra(&alloc::format!("yang_mills:{n}"), v, &comps, true)?;
    let top = c.dim() - 1;
    attach_frobenius_pairing(&mut c, top, &z2, &e4[0].1, 3)?;
    Ok(c)
}

/// Builder registry by name: `exterior`, `sklyanin3`, `sklyanin4`,
/// `yang_mills`.
pub fn builtin_coalgebra(name: &str, params: &[Q]) -> Result<AInfCoalgebra> {
    let need = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: k, found: params.len() })
        }
    };
    let as_usize = |x: &Q| -> Result<usize> {
        if !x.is_integer() || x < &Q::zero() {
            return Err(Error::BadParameters(String::from("expected a non-negative integer")));
        }
        x.to_integer().to_string().parse::<usize>().map_err(|_| Error::BadParameters(String::from("integer too large")))
    };
    match name {
        "exterior" => {
            need(1)?;
            exterior_coalgebra(as_usize(&params[0])?)
        }
        "sklyanin3" => {
            need(3)?;
            sklyanin3(&params[0], &params[1], &params[2])
        }
        "sklyanin4" => {
            need(3)?;
            sklyanin4(&params[0], &params[1], &params[2])
        }
        "yang_mills" => {
            need(1)?;
            yang_mills(as_usize(&params[0])?)
        }
        other => Err(Error::UnknownGenerator(other.to_string())),
    }
}

//! JSON form of coalgebras. Coefficients are strings `p` or `p/q`.

use std::collections::BTreeMap;

use ncpoisson::ainf::{AInfCoalgebra, CyclicPairing, TensorVec};
use ncpoisson::tensor::{fmt_q, Generator, Lin};
use ncpoisson::Q;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoalgebraJson {
    pub name: String,
    pub basis: Vec<BasisJson>,
    /// Arity (as a decimal string) to its nonzero structure constants.
    pub coproducts: BTreeMap<String, Vec<CoproductTerm>>,
    pub counit: Vec<CounitTerm>,
    pub coaugmentation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<PairingJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisJson {
    pub id: String,
    pub degree: i64,
    pub weight: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoproductTerm {
    pub src: String,
    pub dst: Vec<String>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CounitTerm {
    pub id: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairingJson {
    pub degree: i64,
    pub entries: Vec<PairingEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairingEntry {
    pub left: String,
    pub right: String,
    pub coeff: String,
}

pub fn coalgebra_to_json(c: &AInfCoalgebra) -> CoalgebraJson {
    let id = |i: usize| c.basis[i].id.clone();
    let basis = c.basis.iter().map(|g| BasisJson { id: g.id.clone(), degree: g.degree, weight: g.weight }).collect();
    let mut coproducts = BTreeMap::new();
    for (n, maps) in &c.coproducts {
        let mut terms = Vec::new();
        for (src, delta) in maps.iter().enumerate() {
            for (tup, coef) in delta.iter() {
                terms.push(CoproductTerm {
                    src: id(src),
                    dst: tup.iter().map(|&j| id(j)).collect(),
                    coeff: fmt_q(coef),
                });
            }
        }
        if !terms.is_empty() {
            coproducts.insert(n.to_string(), terms);
        }
    }
    let counit = c.counit.iter().map(|(&i, coef)| CounitTerm { id: id(i), coeff: fmt_q(coef) }).collect();
    let pairing = c.pairing.as_ref().map(|p| PairingJson {
        degree: p.degree,
        entries: p
            .entries
            .iter()
            .map(|(&(i, j), coef)| PairingEntry { left: id(i), right: id(j), coeff: fmt_q(coef) })
            .collect(),
    });
    CoalgebraJson { name: c.name.clone(), basis, coproducts, counit, coaugmentation: id(c.coaugmentation), pairing }
}

fn rational(s: &str) -> Result<Q> {
    s.trim().parse::<Q>().map_err(|_| CliError::Usage(format!("malformed coefficient `{s}`")))
}

pub fn coalgebra_from_json(j: &CoalgebraJson) -> Result<AInfCoalgebra> {
    let mut index = BTreeMap::new();
    for (i, b) in j.basis.iter().enumerate() {
        if index.insert(b.id.clone(), i).is_some() {
            return Err(CliError::Usage(format!("duplicate basis id `{}`", b.id)));
        }
    }
    let look = |id: &str| index.get(id).copied().ok_or_else(|| CliError::UnknownGenerator(id.to_string()));
    let dim = j.basis.len();
    let mut coproducts = BTreeMap::new();
    for (n, terms) in &j.coproducts {
        let n: usize = n.parse().map_err(|_| CliError::Usage(format!("malformed arity `{n}`")))?;
        let mut maps = vec![TensorVec::zero(); dim];
        for t in terms {
            if t.dst.len() != n {
                return Err(CliError::Usage(format!(
                    "coproduct term of `{}` has {} factors, not {n}",
                    t.src,
                    t.dst.len()
                )));
            }
            let dst = t.dst.iter().map(|d| look(d)).collect::<Result<Vec<_>>>()?;
            maps[look(&t.src)?].add_term(dst, rational(&t.coeff)?);
        }
        coproducts.insert(n, maps);
    }
    let mut counit = Lin::zero();
    for t in &j.counit {
        counit.add_term(look(&t.id)?, rational(&t.coeff)?);
    }
    let pairing = match &j.pairing {
        None => None,
        Some(p) => {
            let mut entries = BTreeMap::new();
            for e in &p.entries {
                let v = rational(&e.coeff)?;
                if v != ncpoisson::q(0) {
                    entries.insert((look(&e.left)?, look(&e.right)?), v);
                }
            }
            Some(CyclicPairing { degree: p.degree, entries })
        }
    };
    Ok(AInfCoalgebra {
        name: j.name.clone(),
        basis: j.basis.iter().map(|b| Generator::new(b.id.clone(), b.degree, b.weight)).collect(),
        coproducts,
        counit,
        coaugmentation: look(&j.coaugmentation)?,
        pairing,
    })
}

pub fn parse_coalgebra_json(text: &str) -> Result<AInfCoalgebra> {
    let j: CoalgebraJson =
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid coalgebra JSON: {e}")))?;
    coalgebra_from_json(&j)
}

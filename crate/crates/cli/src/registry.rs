//! Coalgebras by name: `exterior:2`, `sklyanin3:1,2,3`, `yang_mills:2`, or
//! `json:PATH` for a file in the JSON schema.

use ncpoisson::ainf::{builtin_coalgebra, AInfCoalgebra};
use ncpoisson::Q;

use crate::error::{CliError, Result};
use crate::json::parse_coalgebra_json;

pub const BUILTINS: [(&str, &str); 4] = [
    ("exterior", "exterior:m, the exterior coalgebra on m generators (dual of k[x_1..x_m])"),
    ("sklyanin3", "sklyanin3:a,b,c, dual of the 3-dimensional Sklyanin algebra"),
    ("sklyanin4", "sklyanin4:alpha,beta,gamma, dual of the 4-dimensional Sklyanin algebra"),
    ("yang_mills", "yang_mills:n, A-infinity dual of the Yang-Mills algebra on n generators"),
];

pub fn parse_params(text: &str) -> Result<Vec<Q>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| p.trim().parse::<Q>().map_err(|_| CliError::Usage(format!("malformed parameter `{p}`"))))
        .collect()
}

pub fn build_coalgebra(spec: &str) -> Result<AInfCoalgebra> {
    if let Some(path) = spec.strip_prefix("json:") {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
        return parse_coalgebra_json(&text);
    }
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    if !BUILTINS.iter().any(|(n, _)| *n == name) {
        return Err(CliError::Usage(format!("unknown coalgebra `{name}`")));
    }
    builtin_coalgebra(name, &parse_params(params)?).map_err(|e| CliError::engine(format!("building {spec}"), e))
}

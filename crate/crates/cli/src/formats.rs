//! JSON file and report formats. Rationals travel as strings (`"7/4"`) so
//! values survive the round trip exactly.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use linf_snake::hunt::{SearchReport, SuiteReport};
use linf_snake::{Integer, PolytopeNorm, RVector, Rational, SnakeDecomposition, SnakeParams};

use crate::Error;

/// `{"n": 2, "a": ["35", "42"], "b": ["20", "4"]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsFile {
    pub n: usize,
    pub a: Vec<String>,
    pub b: Vec<String>,
}

impl ParamsFile {
    pub fn from_params(p: &SnakeParams) -> Self {
        ParamsFile { n: p.n(), a: strings(p.a()), b: strings(p.b()) }
    }

    pub fn to_params(&self) -> Result<SnakeParams, Error> {
        if self.a.len() != self.n || self.b.len() != self.n {
            return Err(Error::Format(format!("params file declares n = {} but lists {} a and {} b values", self.n, self.a.len(), self.b.len())));
        }
        Ok(SnakeParams::new(parse_all(&self.a)?, parse_all(&self.b)?)?)
    }
}

/// `{"n": 2, "facets": [["1", "1"], ["1", "-1"]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacetFile {
    pub n: usize,
    pub facets: Vec<Vec<String>>,
}

impl FacetFile {
    pub fn from_norm(norm: &PolytopeNorm) -> Self {
        FacetFile { n: norm.dim(), facets: norm.facets().iter().map(|c| strings(c.coords())).collect() }
    }

    pub fn to_norm(&self) -> Result<PolytopeNorm, Error> {
        let facets = self
            .facets
            .iter()
            .map(|row| {
                if row.len() != self.n {
                    return Err(Error::Format(format!("facet {row:?} does not have {} coordinates", self.n)));
                }
                Ok(RVector::new(parse_all(row)?)?)
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(PolytopeNorm::new(facets)?)
    }
}

pub fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(Rational::to_string).collect()
}

fn parse_all(values: &[String]) -> Result<Vec<Rational>, Error> {
    values.iter().map(|s| Ok(s.parse::<Rational>()?)).collect()
}

/// A JSON number when the integer fits in `i64`, a string otherwise.
pub fn integer_value(z: &Integer) -> Value {
    i64::try_from(z).map_or_else(|_| Value::String(z.to_string()), Value::from)
}

/// `{"color": "blue", "layer": -1, "shift": "-1/2"}`
pub fn color_json(dec: &SnakeDecomposition) -> Value {
    let layer = dec.layer();
    serde_json::json!({
        "color": linf_snake::Color::from_layer(&layer).name(),
        "layer": integer_value(&layer),
        "shift": dec.shift.to_string(),
    })
}

pub fn report_json(report: &SearchReport) -> Value {
    let witness = report.witness.as_ref().map(|w| {
        serde_json::json!({
            "points": w.points.iter().map(|p| strings(p.coords())).collect::<Vec<_>>(),
            "direction": w.direction,
            "reflected": w.reflected,
            "color": w.color.name(),
        })
    });
    serde_json::json!({
        "found": report.found,
        "witness": witness,
        "tried": report.tried,
        "seed": report.seed,
        "strategy": report.strategy.name(),
        "budget": report.budget,
        "workers": report.workers,
        "elapsed_ms": report.elapsed_ms,
    })
}

pub fn suite_json(report: &SuiteReport) -> Value {
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| serde_json::json!({"index": f.index, "sample_seed": f.sample_seed, "detail": f.detail}))
        .collect();
    serde_json::json!({
        "suite": report.suite,
        "samples": report.samples,
        "seed": report.seed,
        "passed": report.passed(),
        "failures": failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use linf_snake::theorem_params;

    #[test]
    fn params_round_trip() {
        let file = ParamsFile::from_params(&theorem_params(2));
        let text = serde_json::to_string(&file).unwrap();
        assert_eq!(text, r#"{"n":2,"a":["35","42"],"b":["20","4"]}"#);
        let back: ParamsFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_params().unwrap().a(), theorem_params(2).a());
    }

    #[test]
    fn params_file_checks_lengths() {
        let file: ParamsFile = serde_json::from_str(r#"{"n":2,"a":["1"],"b":["1"]}"#).unwrap();
        assert!(file.to_params().is_err());
        let bad: ParamsFile = serde_json::from_str(r#"{"n":1,"a":["x"],"b":["1"]}"#).unwrap();
        assert!(bad.to_params().is_err());
    }

    #[test]
    fn facets_round_trip() {
        let file: FacetFile = serde_json::from_str(r#"{"n": 2, "facets": [["1","1"],["1","-1"]]}"#).unwrap();
        let norm = file.to_norm().unwrap();
        assert_eq!(norm, PolytopeNorm::l1(2).unwrap());
        assert_eq!(FacetFile::from_norm(&norm), file);
    }

    #[test]
    fn degenerate_facets_are_rejected() {
        let file: FacetFile = serde_json::from_str(r#"{"n": 2, "facets": [["1","1"],["2","2"]]}"#).unwrap();
        assert!(file.to_norm().is_err());
        let short: FacetFile = serde_json::from_str(r#"{"n": 2, "facets": [["1"]]}"#).unwrap();
        assert!(short.to_norm().is_err());
    }

    #[test]
    fn huge_layers_become_strings() {
        let big: Integer = Integer::from(i64::MAX) * 4;
        assert!(integer_value(&big).is_string());
        assert_eq!(integer_value(&Integer::from(-3)), Value::from(-3));
    }
}

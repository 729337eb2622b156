//! JSON description of a Hom-Lie algebra.
//!
//! ```json
//! {
//!   "dimension": 3,
//!   "basis_names": ["f", "h", "e"],
//!   "bracket": [{"i": 2, "j": 0, "k": 1, "coeff": "1"}],
//!   "beta": [["0", "0", "1"], ["0", "-1", "0"], ["1", "0", "0"]],
//!   "twist": {"from_classical": true}
//! }
//! ```
//!
//! Bracket entries read `[x_i, x_j] = ... + coeff * x_k`; an entry whose mirror `(j, i, k)` is
//! absent also sets that mirror to `-coeff`. `beta` lists matrix rows, so column `c` is the
//! image of `x_c`. With `from_classical` the bracket is a Lie bracket and the algebra is its
//! twist by `beta`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hom_lie::{yau_twist, HomLieAlgebra};
use crate::linalg::{RatMatrix, StructureConstants};
use crate::scalar::{parse_scalar, Scalar};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: Value,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Twist {
    #[serde(default)]
    pub from_classical: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dimension: usize,
    pub basis_names: Vec<String>,
    #[serde(default)]
    pub bracket: Vec<BracketEntry>,
    pub beta: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<Twist>,
}

/// Rational literals may be JSON strings or JSON integers; floats are refused.
fn literal(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_scalar(s),
        Value::Number(n) if n.is_i64() => Ok(crate::scalar::int(n.as_i64().expect("checked"))),
        other => Err(Error::Parse(format!("expected a rational literal, found {other}"))),
    }
}

fn valid_name(n: &str) -> bool {
    !n.is_empty()
        && !n.starts_with(|c: char| c.is_ascii_digit())
        && !n.chars().any(|c| c.is_whitespace() || matches!(c, '*' | '⊗' | '+' | '-' | '−' | '/'))
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: Self = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.validate()?;
        Ok(file)
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dimension;
        if d == 0 {
            return Err(Error::Parse("dimension must be positive".into()));
        }
        if self.basis_names.len() != d {
            return Err(Error::Parse(format!("{} basis names for dimension {d}", self.basis_names.len())));
        }
        let mut seen = HashSet::new();
        for n in &self.basis_names {
            if !valid_name(n) {
                return Err(Error::Parse(format!("invalid basis name `{n}`")));
            }
            if !seen.insert(n) {
                return Err(Error::Parse(format!("duplicate basis name `{n}`")));
            }
        }
        if self.beta.len() != d || self.beta.iter().any(|r| r.len() != d) {
            return Err(Error::Parse(format!("beta must be a {d}x{d} matrix")));
        }
        for e in &self.bracket {
            if e.i >= d || e.j >= d || e.k >= d {
                return Err(Error::Parse(format!("bracket index out of range in ({}, {}, {})", e.i, e.j, e.k)));
            }
        }
        Ok(())
    }

    pub fn from_classical(&self) -> bool {
        self.twist.as_ref().is_some_and(|t| t.from_classical)
    }

    pub fn beta_matrix(&self) -> Result<RatMatrix> {
        let rows = self.beta.iter().map(|r| r.iter().map(literal).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        RatMatrix::from_rows(rows)
    }

    /// The bracket exactly as written, after filling in missing mirrored entries.
    pub fn bracket_as_written(&self) -> Result<StructureConstants> {
        let d = self.dimension;
        let mut c = StructureConstants::zeros(d);
        let given: HashSet<(usize, usize, usize)> = self.bracket.iter().map(|e| (e.i, e.j, e.k)).collect();
        for e in &self.bracket {
            let v = literal(&e.coeff)?;
            c.set(e.i, e.j, e.k, c.get(e.i, e.j, e.k) + &v);
            if !given.contains(&(e.j, e.i, e.k)) {
                c.set(e.j, e.i, e.k, c.get(e.j, e.i, e.k) - &v);
            }
        }
        Ok(c)
    }

    /// Bracket and twisting map without any axiom checks; a classical bracket is composed
    /// with `beta` first.
    pub fn raw(&self) -> Result<(StructureConstants, RatMatrix)> {
        let beta = self.beta_matrix()?;
        let bracket = self.bracket_as_written()?;
        let bracket = if self.from_classical() { bracket.post_compose(&beta) } else { bracket };
        Ok((bracket, beta))
    }

    /// The algebra, rejected unless every axiom holds.
    pub fn build(&self) -> Result<HomLieAlgebra> {
        if self.from_classical() {
            return yau_twist(&self.bracket_as_written()?, &self.beta_matrix()?);
        }
        let (bracket, beta) = self.raw()?;
        HomLieAlgebra::new(bracket, beta)
    }

    /// The algebra without the axiom gate, for negative controls.
    pub fn build_unchecked(&self) -> Result<HomLieAlgebra> {
        let (bracket, beta) = self.raw()?;
        HomLieAlgebra::new_unchecked(bracket, beta)
    }

    /// Writes `g` back out with nonzero entries `i < j` only.
    pub fn from_algebra(g: &HomLieAlgebra, names: &[&str]) -> Self {
        let d = g.dim();
        let mut bracket = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for (k, v) in g.bracket().product_of_basis(i, j).iter().enumerate() {
                    if !num_traits::Zero::is_zero(v) {
                        bracket.push(BracketEntry { i, j, k, coeff: Value::String(v.to_string()) });
                    }
                }
            }
        }
        let beta = (0..d).map(|r| g.beta().row(r).iter().map(|v| Value::String(v.to_string())).collect()).collect();
        Self { dimension: d, basis_names: names.iter().map(|s| s.to_string()).collect(), bracket, beta, twist: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const SL2: &str = r#"{
        "dimension": 3,
        "basis_names": ["f", "h", "e"],
        "bracket": [
            {"i": 2, "j": 0, "k": 1, "coeff": "1"},
            {"i": 1, "j": 2, "k": 2, "coeff": "2"},
            {"i": 1, "j": 0, "k": 0, "coeff": -2}
        ],
        "beta": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    }"#;

    #[test]
    fn reads_sl2_with_mirrors() {
        let file = AlgebraFile::from_json(SL2).unwrap();
        assert_eq!(file.build().unwrap(), fixtures::sl2());
    }

    #[test]
    fn twist_from_classical() {
        let text = SL2.replace(r#"[["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]"#, r#"[["0", "0", "1"], ["0", "-1", "0"], ["1", "0", "0"]]"#);
        let twisted = text.replace(r#""beta""#, r#""twist": {"from_classical": true}, "beta""#);
        assert_eq!(AlgebraFile::from_json(&twisted).unwrap().build().unwrap(), fixtures::twisted_sl2());
        // without the twist flag the same data is the untwisted pair
        let (b, beta) = AlgebraFile::from_json(&text).unwrap().raw().unwrap();
        assert_eq!((b, beta), fixtures::untwisted_sl2_with_involution());
    }

    #[test]
    fn round_trip_through_json() {
        let g = fixtures::twisted_sl2();
        let file = AlgebraFile::from_algebra(&g, &fixtures::SL2_NAMES);
        let text = serde_json::to_string(&file).unwrap();
        assert_eq!(AlgebraFile::from_json(&text).unwrap().build().unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "{",
            r#"{"dimension": 2, "basis_names": ["a"], "beta": [["1","0"],["0","1"]]}"#,
            r#"{"dimension": 1, "basis_names": ["a"], "beta": [[1.5]]}"#,
            r#"{"dimension": 1, "basis_names": ["a"], "beta": [["1"]], "bracket": [{"i":0,"j":0,"k":3,"coeff":"1"}]}"#,
            r#"{"dimension": 2, "basis_names": ["a", "a"], "beta": [["1","0"],["0","1"]]}"#,
            r#"{"dimension": 1, "basis_names": ["2a"], "beta": [["1"]]}"#,
            r#"{"dimension": 1, "basis_names": ["a"], "beta": [["1"]], "extra": 1}"#,
        ] {
            let r = AlgebraFile::from_json(bad).and_then(|f| f.build());
            assert!(matches!(r, Err(Error::Parse(_))), "{bad}");
        }
    }
}

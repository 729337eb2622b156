//! Text syntax for tensor elements: `2*h*f*e - 1/2*e⊗f + h`.
//!
//! Factors are joined by `*` or `⊗`. A leading rational literal followed by `*` is a
//! coefficient. The single term `0` denotes the zero element. This is the same syntax that
//! [`TensorElement::render`] produces, so printed elements parse back unchanged.

use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Scalar};
use crate::tensor::{TensorElement, Word};

fn is_literal(tok: &str) -> bool {
    tok.chars().next().is_some_and(|c| c.is_ascii_digit())
}

/// Splits on `+` and `-` (also the Unicode minus sign), keeping the signs.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut negative = false;
    let mut signed = false;
    let mut current = String::new();
    for ch in s.chars() {
        if matches!(ch, '+' | '-' | '−') {
            if !current.trim().is_empty() {
                out.push((negative, std::mem::take(&mut current)));
            } else if signed || !out.is_empty() {
                return Err(Error::Parse(format!("unexpected `{ch}`")));
            }
            negative = ch != '+';
            signed = true;
        } else {
            current.push(ch);
            if !ch.is_whitespace() {
                signed = false;
            }
        }
    }
    if current.trim().is_empty() {
        return Err(Error::Parse("expression ends without a term".into()));
    }
    out.push((negative, current));
    Ok(out)
}

fn parse_term(term: &str, names: &[String]) -> Result<Option<(Word, Scalar)>> {
    let factors: Vec<&str> = term.split(['*', '⊗']).map(str::trim).collect();
    if factors.iter().any(|f| f.is_empty()) {
        return Err(Error::Parse(format!("empty factor in `{}`", term.trim())));
    }
    let (coeff, rest) = if is_literal(factors[0]) {
        (parse_scalar(factors[0])?, &factors[1..])
    } else {
        (crate::scalar::one(), &factors[..])
    };
    if rest.is_empty() {
        if num_traits::Zero::is_zero(&coeff) {
            return Ok(None);
        }
        return Err(Error::Parse(format!("term `{}` has no basis factor", term.trim())));
    }
    let mut letters = Vec::with_capacity(rest.len());
    for f in rest {
        if is_literal(f) {
            return Err(Error::Parse(format!("coefficient `{f}` must come first")));
        }
        let l = names.iter().position(|n| n == f).ok_or_else(|| Error::UnknownName(f.to_string()))?;
        letters.push(l);
    }
    Ok(Some((Word::new(letters)?, coeff)))
}

/// Parses an element over the basis `names`.
pub fn parse_element(s: &str, names: &[String]) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for (negative, term) in split_terms(s)? {
        if let Some((w, c)) = parse_term(&term, names)? {
            out.add_term(w, if negative { -c } else { c });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use proptest::prelude::*;

    fn names() -> Vec<String> {
        ["f", "h", "e"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_products_and_coefficients() {
        let t = parse_element("h*f*e", &names()).unwrap();
        assert_eq!(t, TensorElement::word(&[1, 0, 2]));
        let t = parse_element("e⊗f - h + 1/2*e*e", &names()).unwrap();
        let mut want = TensorElement::word(&[2, 0]);
        want.add_term(Word::letter(1), int(-1));
        want.add_term(Word::new(vec![2, 2]).unwrap(), ratio(1, 2));
        assert_eq!(t, want);
        assert_eq!(parse_element("-2*f", &names()).unwrap(), TensorElement::word(&[0]).scale(&int(-2)));
        assert_eq!(parse_element("f*e − e*f", &names()).unwrap(), &TensorElement::word(&[0, 2]) - &TensorElement::word(&[2, 0]));
        assert!(parse_element("0", &names()).unwrap().is_zero());
        assert!(parse_element("e*f - e*f", &names()).unwrap().is_zero());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_element("g*e", &names()), Err(Error::UnknownName(_))));
        for bad in ["", "e*", "e +", "0.5*e", "3", "e*2", "e**f", "1/0*e"] {
            assert!(parse_element(bad, &names()).is_err(), "{bad}");
        }
    }

    proptest! {
        #[test]
        fn render_round_trips(terms in proptest::collection::vec(
            (proptest::collection::vec(0usize..3, 1..5), -20i64..20, 1i64..6), 0..6)) {
            let t = TensorElement::from_terms(
                terms.into_iter().map(|(l, n, d)| (Word::new(l).unwrap(), ratio(n, d))));
            let s = t.render(&names());
            prop_assert_eq!(parse_element(&s, &names()).unwrap(), t);
        }
    }
}

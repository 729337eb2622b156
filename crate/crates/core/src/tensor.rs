//! Words and finite linear combinations in the non-unital tensor algebra over a finite basis,
//! together with the factorwise twisting map and the odd-factor twist.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::scalar::Scalar;

/// A pure tensor `x_{i1} ⊗ ... ⊗ x_{in}` of basis letters, `n >= 1`.
///
/// Words order by length first and then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word(letters))
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<usize>) -> Self {
        debug_assert!(!letters.is_empty());
        Word(letters)
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

/// Finite rational linear combination of words. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorElement {
    terms: BTreeMap<Word, Scalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: Word) -> Self {
        let mut t = Self::zero();
        t.add_term(w, Scalar::one());
        t
    }

    /// Convenience constructor from raw letters; panics on an empty slice.
    pub fn word(letters: &[usize]) -> Self {
        Self::from_word(Word::new(letters.to_vec()).expect("nonempty word"))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut t = Self::zero();
        for (w, c) in terms {
            t.add_term(w, c);
        }
        t
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().next_back().map_or(0, Word::len)
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        let mut out = Self::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.terms.keys().flat_map(|w| w.letters().iter().copied()).max()
    }

    pub(crate) fn check_letters(&self, dim: usize) -> Result<()> {
        match self.max_letter() {
            Some(l) if l >= dim => Err(Error::LetterOutOfRange { letter: l, dim }),
            _ => Ok(()),
        }
    }

    pub(crate) fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    /// Renders with the given basis names, highest words first: `e⊗h⊗f + 2*e⊗f - h⊗h`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (w, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Scalar::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (n, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            let letters: Vec<String> = w
                .letters()
                .iter()
                .map(|&l| names.get(l).cloned().unwrap_or_else(|| format!("x{l}")))
                .collect();
            out.push_str(&letters.join("⊗"));
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

impl std::ops::Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl std::ops::Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl std::ops::Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&-Scalar::one())
    }
}

/// Bilinear concatenation `a ⊗ b`.
pub fn tensor_concat(a: &TensorElement, b: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            out.add_term(wa.concat(wb), ca * cb);
        }
    }
    out
}

/// Applies an arbitrary square matrix to every tensor factor.
pub fn apply_factorwise(m: &RatMatrix, t: &TensorElement) -> Result<TensorElement> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
    }
    t.check_letters(m.cols())?;
    let mut out = TensorElement::zero();
    for (w, c) in t.iter() {
        let mut partial = vec![(Vec::with_capacity(w.len()), c.clone())];
        for &l in w.letters() {
            let mut next = Vec::new();
            for (prefix, coeff) in &partial {
                for r in 0..m.rows() {
                    let e = m.get(r, l);
                    if !e.is_zero() {
                        let mut p = prefix.clone();
                        p.push(r);
                        next.push((p, coeff * e));
                    }
                }
            }
            partial = next;
        }
        for (letters, coeff) in partial {
            out.add_term(Word::from_vec_unchecked(letters), coeff);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Unit {
    One,
    MinusOne,
    Other,
}

/// A finite-dimensional module with an involutive linear map `alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutiveHomModule {
    alpha: RatMatrix,
    // images[i] = nonzero coordinates of alpha(x_i)
    images: Vec<Vec<(usize, Scalar, Unit)>>,
}

impl InvolutiveHomModule {
    pub fn new(alpha: RatMatrix) -> Result<Self> {
        if !alpha.is_square() {
            return Err(Error::DimensionMismatch { expected: alpha.rows(), found: alpha.cols() });
        }
        if !alpha.is_involution() {
            return Err(Error::NotInvolution);
        }
        let images = (0..alpha.cols())
            .map(|c| {
                (0..alpha.rows())
                    .filter(|&r| !alpha.get(r, c).is_zero())
                    .map(|r| {
                        let v = alpha.get(r, c).clone();
                        let unit = if v.is_one() {
                            Unit::One
                        } else if (-&v).is_one() {
                            Unit::MinusOne
                        } else {
                            Unit::Other
                        };
                        (r, v, unit)
                    })
                    .collect()
            })
            .collect();
        Ok(Self { alpha, images })
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(RatMatrix::identity(dim)).expect("identity is involutive")
    }

    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn alpha(&self) -> &RatMatrix {
        &self.alpha
    }

    /// Adds to `out` the image of `scale * word` with `alpha` applied to exactly those factors
    /// whose position satisfies `twist`.
    pub(crate) fn map_factors_into(&self, word: &[usize], twist: &dyn Fn(usize) -> bool, scale: &Scalar, out: &mut TensorElement) {
        let mut buf = Vec::with_capacity(word.len());
        self.expand(word, twist, &mut buf, scale.clone(), out);
    }

    fn expand(&self, word: &[usize], twist: &dyn Fn(usize) -> bool, buf: &mut Vec<usize>, coeff: Scalar, out: &mut TensorElement) {
        let pos = buf.len();
        if pos == word.len() {
            out.add_term(Word::from_vec_unchecked(buf.clone()), coeff);
            return;
        }
        let letter = word[pos];
        if !twist(pos) {
            buf.push(letter);
            self.expand(word, twist, buf, coeff, out);
            buf.pop();
            return;
        }
        let image = &self.images[letter];
        for (l, c, unit) in image {
            let next = match unit {
                Unit::One => coeff.clone(),
                Unit::MinusOne => -coeff.clone(),
                Unit::Other => &coeff * c,
            };
            buf.push(*l);
            self.expand(word, twist, buf, next, out);
            buf.pop();
        }
    }

    fn map_element(&self, t: &TensorElement, twist: impl Fn(usize, usize) -> bool) -> Result<TensorElement> {
        t.check_letters(self.dim())?;
        let mut out = TensorElement::zero();
        for (w, c) in t.iter() {
            let len = w.len();
            self.map_factors_into(w.letters(), &|p| twist(p, len), c, &mut out);
        }
        Ok(out)
    }

    /// The factorwise extension `alpha(a1) ⊗ ... ⊗ alpha(an)`.
    pub fn alpha0_apply(&self, t: &TensorElement) -> Result<TensorElement> {
        self.map_element(t, |_, _| true)
    }

    /// `alpha0` applied `k` times; only the parity of `k` matters.
    pub fn alpha0_pow(&self, t: &TensorElement, k: usize) -> Result<TensorElement> {
        if k.is_multiple_of(2) {
            t.check_letters(self.dim())?;
            Ok(t.clone())
        } else {
            self.alpha0_apply(t)
        }
    }

    /// Twists the 3rd, 5th, 7th, ... factors of every word.
    pub fn phi_apply(&self, t: &TensorElement) -> Result<TensorElement> {
        self.map_element(t, |p, _| p >= 2 && p % 2 == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use proptest::prelude::*;

    fn swap() -> InvolutiveHomModule {
        InvolutiveHomModule::new(RatMatrix::from_i64(2, 2, &[0, 1, 1, 0])).unwrap()
    }

    // a dense involution on a 3-dim space: P diag(1,-1,1) P^-1
    fn dense3() -> InvolutiveHomModule {
        let p = RatMatrix::from_i64(3, 3, &[1, 1, 0, 0, 1, 1, 1, 0, 1]);
        let d = RatMatrix::from_i64(3, 3, &[1, 0, 0, 0, -1, 0, 0, 0, 1]);
        InvolutiveHomModule::new(p.mul(&d).mul(&p.inverse().unwrap())).unwrap()
    }

    #[test]
    fn word_order_is_shortlex() {
        let a = Word::new(vec![5]).unwrap();
        let b = Word::new(vec![0, 0]).unwrap();
        let c = Word::new(vec![0, 1]).unwrap();
        assert!(a < b && b < c);
        assert!(Word::new(vec![]).is_err());
    }

    #[test]
    fn alpha0_examples() {
        let t = TensorElement::word(&[0, 1]);
        assert_eq!(InvolutiveHomModule::identity(2).alpha0_apply(&t).unwrap(), t);
        assert_eq!(swap().alpha0_apply(&t).unwrap(), TensorElement::word(&[1, 0]));
        assert!(matches!(
            swap().alpha0_apply(&TensorElement::word(&[2])),
            Err(Error::LetterOutOfRange { letter: 2, dim: 2 })
        ));
    }

    #[test]
    fn phi_examples() {
        let v = swap();
        for w in [&[0][..], &[1, 0], &[1, 1]] {
            let t = TensorElement::word(w);
            assert_eq!(v.phi_apply(&t).unwrap(), t);
        }
        // y1⊗y1⊗y1⊗y1 -> y1⊗y1⊗y2⊗y1
        assert_eq!(v.phi_apply(&TensorElement::word(&[0, 0, 0, 0])).unwrap(), TensorElement::word(&[0, 0, 1, 0]));
    }

    #[test]
    fn concat_examples() {
        let y1 = TensorElement::word(&[0]);
        let y2 = TensorElement::word(&[1]);
        assert_eq!(tensor_concat(&y1, &y2), TensorElement::word(&[0, 1]));
        let sum = &y1 + &y2;
        assert_eq!(tensor_concat(&sum, &y1), &TensorElement::word(&[0, 0]) + &TensorElement::word(&[1, 0]));
        assert!(tensor_concat(&TensorElement::zero(), &y1).is_zero());
    }

    #[test]
    fn render_orders_highest_first() {
        let names: Vec<String> = ["f", "h", "e"].iter().map(|s| s.to_string()).collect();
        let t = TensorElement::from_terms([
            (Word::new(vec![1, 1]).unwrap(), int(-1)),
            (Word::new(vec![2, 0]).unwrap(), int(2)),
            (Word::new(vec![2, 1, 0]).unwrap(), int(1)),
        ]);
        assert_eq!(t.render(&names), "e⊗h⊗f + 2*e⊗f - h⊗h");
        assert_eq!(TensorElement::zero().render(&names), "0");
    }

    fn element(dim: usize) -> impl Strategy<Value = TensorElement> {
        prop::collection::vec((prop::collection::vec(0..dim, 1..6), -3i64..=3), 0..5).prop_map(|terms| {
            TensorElement::from_terms(terms.into_iter().map(|(w, c)| (Word::new(w).unwrap(), int(c))))
        })
    }

    proptest! {
        #[test]
        fn alpha0_and_phi_are_involutions(t in element(3)) {
            let v = dense3();
            prop_assert_eq!(v.alpha0_apply(&v.alpha0_apply(&t).unwrap()).unwrap(), t.clone());
            prop_assert_eq!(v.phi_apply(&v.phi_apply(&t).unwrap()).unwrap(), t);
        }

        #[test]
        fn alpha0_is_tensor_multiplicative(a in element(3), b in element(3)) {
            let v = dense3();
            prop_assert_eq!(
                v.alpha0_apply(&tensor_concat(&a, &b)).unwrap(),
                tensor_concat(&v.alpha0_apply(&a).unwrap(), &v.alpha0_apply(&b).unwrap())
            );
        }

        #[test]
        fn phi_commutes_with_alpha0(t in element(3)) {
            let v = dense3();
            prop_assert_eq!(
                v.phi_apply(&v.alpha0_apply(&t).unwrap()).unwrap(),
                v.alpha0_apply(&v.phi_apply(&t).unwrap()).unwrap()
            );
        }

        #[test]
        fn phi_of_concatenation(u in prop::collection::vec(0usize..3, 1..5), w in prop::collection::vec(0usize..3, 1..5)) {
            // phi(u⊗w) = phi(u) ⊗ alpha^{m-1}(w1) ⊗ ... ⊗ alpha^{m+n-2}(wn)
            let v = dense3();
            let m = u.len();
            let lhs = v.phi_apply(&TensorElement::word(&[u.clone(), w.clone()].concat())).unwrap();
            let mut tail = TensorElement::zero();
            v.map_factors_into(&w, &|p| (m - 1 + p) % 2 == 1, &Scalar::one(), &mut tail);
            let rhs = tensor_concat(&v.phi_apply(&TensorElement::word(&u)).unwrap(), &tail);
            prop_assert_eq!(lhs, rhs);
        }
    }
}

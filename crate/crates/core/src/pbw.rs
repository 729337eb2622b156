//! Normal forms in the enveloping algebra of an involutive Hom-Lie algebra.
//!
//! All computations run in the coordinates of an adapted basis `X`, on which the engine map
//! `mu * beta` acts as the permutation `sigma`. The rewriting operator `L` sorts letters into
//! weakly decreasing order: an adjacent inversion `x_s < x_{s+1}` in a word of degree `p` becomes
//!
//! ```text
//! (swapped word) + mu^{p-2} * sigma(prefix) ⊗ [x_s, x_{s+1}] ⊗ sigma(suffix)
//! ```
//!
//! which is the projection onto decreasing words along the relation space `J`. Normal forms
//! modulo the Hom-ideal `I` are `phi ∘ L ∘ phi`, with `phi` twisting the odd factors from the
//! third on by `beta`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::adapt::{adapt_basis, rebase, AdaptedBasis};
use crate::error::{Error, Result};
use crate::free_assoc::{hom_product_explicit, hom_product_optional};
use crate::hom_lie::HomLieAlgebra;
use crate::scalar::{Scalar, Sign};
use crate::tensor::{apply_factorwise, tensor_concat, InvolutiveHomModule, TensorElement, Word};

/// Which inversion `L` rewrites first inside a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Number of pairs `r < s` with `i_r < i_s`; zero exactly on decreasing words.
pub fn index_of(letters: &[usize]) -> usize {
    let mut count = 0;
    for (r, a) in letters.iter().enumerate() {
        count += letters[r + 1..].iter().filter(|b| a < *b).count();
    }
    count
}

pub fn is_pbw_word(letters: &[usize]) -> bool {
    letters.windows(2).all(|w| w[0] >= w[1])
}

/// An adapted Hom-Lie algebra packaged for rewriting and quotient arithmetic.
#[derive(Clone, Debug)]
pub struct PbwContext {
    algebra: HomLieAlgebra,
    adapted: AdaptedBasis,
    module: InvolutiveHomModule,
    brackets: Vec<Vec<(usize, Scalar)>>,
}

impl PbwContext {
    /// Adapts `g` and expresses it in the adapted basis.
    pub fn new(g: &HomLieAlgebra) -> Result<Self> {
        let ab = adapt_basis(g)?;
        let algebra = rebase(g, &ab)?;
        Self::from_rebased(algebra, ab)
    }

    /// `algebra` must already be written in the coordinates of `adapted`.
    pub fn from_rebased(algebra: HomLieAlgebra, adapted: AdaptedBasis) -> Result<Self> {
        let d = algebra.dim();
        if adapted.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: adapted.dim() });
        }
        let expected = crate::linalg::RatMatrix::signed_permutation(adapted.sigma(), adapted.mu());
        if algebra.beta() != &expected {
            return Err(Error::BasisMismatch);
        }
        let module = InvolutiveHomModule::new(algebra.beta().clone())?;
        let brackets = (0..d * d)
            .map(|n| {
                algebra
                    .bracket()
                    .product_of_basis(n / d, n % d)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect()
            })
            .collect();
        Ok(Self { algebra, adapted, module, brackets })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mu(&self) -> Sign {
        self.adapted.mu()
    }

    pub fn sigma(&self) -> &[usize] {
        self.adapted.sigma()
    }

    /// The algebra in X coordinates, with its original twisting map.
    pub fn algebra(&self) -> &HomLieAlgebra {
        &self.algebra
    }

    pub fn adapted(&self) -> &AdaptedBasis {
        &self.adapted
    }

    /// The Hom-module `(g, beta)` in X coordinates.
    pub fn module(&self) -> &InvolutiveHomModule {
        &self.module
    }

    /// Rewrites an element given in original coordinates into X coordinates.
    pub fn to_x(&self, t: &TensorElement) -> Result<TensorElement> {
        apply_factorwise(self.adapted.to_x(), t)
    }

    /// Rewrites an element given in X coordinates into original coordinates.
    pub fn from_x(&self, t: &TensorElement) -> Result<TensorElement> {
        apply_factorwise(self.adapted.from_x(), t)
    }

    fn check_letter(&self, l: usize) -> Result<()> {
        if l >= self.dim() {
            return Err(Error::LetterOutOfRange { letter: l, dim: self.dim() });
        }
        Ok(())
    }

    fn check_word(&self, w: &[usize]) -> Result<()> {
        w.iter().try_for_each(|&l| self.check_letter(l))
    }

    fn bracket_terms(&self, x: usize, y: usize) -> &[(usize, Scalar)] {
        &self.brackets[x * self.dim() + y]
    }

    fn bracket_element(&self, x: usize, y: usize) -> TensorElement {
        TensorElement::from_terms(self.bracket_terms(x, y).iter().map(|(k, c)| (Word::letter(*k), c.clone())))
    }

    fn commutator_relation(&self, x: usize, y: usize) -> TensorElement {
        let mut r = &TensorElement::word(&[x, y]) - &TensorElement::word(&[y, x]);
        r.add_scaled(&self.bracket_element(x, y), &-crate::scalar::one());
        r
    }

    /// `(a ⊙ (x⊗y - y⊗x - [x,y])) ⊙ b`, a spanning element of the Hom-ideal `I`;
    /// `a` and `b` may be empty.
    pub fn ideal_generator(&self, a: &[usize], x: usize, y: usize, b: &[usize]) -> Result<TensorElement> {
        self.check_word(a)?;
        self.check_word(b)?;
        self.check_letter(x)?;
        self.check_letter(y)?;
        let a = (!a.is_empty()).then(|| TensorElement::word(a));
        let b = (!b.is_empty()).then(|| TensorElement::word(b));
        let r = self.commutator_relation(x, y);
        let left = hom_product_optional(&self.module, a.as_ref(), Some(&r))?.expect("relation present");
        Ok(hom_product_optional(&self.module, Some(&left), b.as_ref())?.expect("left present"))
    }

    /// `a⊗(x⊗y - y⊗x)⊗b - mu^{|a|+|b|} sigma(a)⊗[x,y]⊗sigma(b)`, a spanning element of `J`.
    pub fn j_generator(&self, a: &[usize], x: usize, y: usize, b: &[usize]) -> Result<TensorElement> {
        self.check_word(a)?;
        self.check_word(b)?;
        self.check_letter(x)?;
        self.check_letter(y)?;
        let mut out = TensorElement::zero();
        let concat = |mid: &[usize]| Word::from_vec_unchecked([a, mid, b].concat());
        out.add_term(concat(&[x, y]), crate::scalar::one());
        out.add_term(concat(&[y, x]), -crate::scalar::one());
        let sign = self.mu().pow(a.len() + b.len()).to_scalar();
        let sa: Vec<usize> = a.iter().map(|&l| self.sigma()[l]).collect();
        let sb: Vec<usize> = b.iter().map(|&l| self.sigma()[l]).collect();
        for (k, c) in self.bracket_terms(x, y) {
            out.add_term(Word::from_vec_unchecked([&sa[..], &[*k], &sb[..]].concat()), -(c * &sign));
        }
        Ok(out)
    }

    /// The parameter-free relation `a⊗(x⊗y - y⊗x)⊗b - alpha0(a)⊗[x,y]⊗alpha0(b)` built with `beta`
    /// itself rather than with the engine map.
    pub fn hom_j_generator(&self, a: &[usize], x: usize, y: usize, b: &[usize]) -> Result<TensorElement> {
        self.check_word(a)?;
        self.check_word(b)?;
        self.check_letter(x)?;
        self.check_letter(y)?;
        let wrap = |w: &[usize]| (!w.is_empty()).then(|| TensorElement::word(w));
        let (ea, eb) = (wrap(a), wrap(b));
        let swap = &TensorElement::word(&[x, y]) - &TensorElement::word(&[y, x]);
        let bracket = self.bracket_element(x, y);
        let join = |l: Option<&TensorElement>, m: &TensorElement, r: Option<&TensorElement>| {
            let lm = l.map_or_else(|| m.clone(), |l| tensor_concat(l, m));
            r.map_or(lm.clone(), |r| tensor_concat(&lm, r))
        };
        let aa = ea.as_ref().map(|t| self.module.alpha0_apply(t)).transpose()?;
        let ab = eb.as_ref().map(|t| self.module.alpha0_apply(t)).transpose()?;
        Ok(&join(ea.as_ref(), &swap, eb.as_ref()) - &join(aa.as_ref(), &bracket, ab.as_ref()))
    }

    /// One rewriting step at the inversion in positions `s, s+1` (0-based).
    pub fn reduce_step(&self, w: &Word, s: usize) -> Result<TensorElement> {
        self.check_word(w.letters())?;
        let l = w.letters();
        if s + 1 >= l.len() || l[s] >= l[s + 1] {
            return Err(Error::NotAnInversion { position: s });
        }
        let mut out = BTreeMap::new();
        self.rewrite_into(l, s, &crate::scalar::one(), &mut out);
        Ok(TensorElement::from_terms(out))
    }

    fn rewrite_into(&self, l: &[usize], s: usize, coeff: &Scalar, out: &mut BTreeMap<Word, Scalar>) {
        let mut swapped = l.to_vec();
        swapped.swap(s, s + 1);
        accumulate(out, Word::from_vec_unchecked(swapped), coeff.clone());

        let terms = self.bracket_terms(l[s], l[s + 1]);
        if terms.is_empty() {
            return;
        }
        let sign = self.mu().pow(l.len() - 2);
        let sigma = self.sigma();
        let mut word: Vec<usize> = Vec::with_capacity(l.len() - 1);
        word.extend(l[..s].iter().map(|&i| sigma[i]));
        word.push(0);
        word.extend(l[s + 2..].iter().map(|&i| sigma[i]));
        for (k, c) in terms {
            word[s] = *k;
            let v = match sign {
                Sign::Plus => coeff * c,
                Sign::Minus => -(coeff * c),
            };
            accumulate(out, Word::from_vec_unchecked(word.clone()), v);
        }
    }

    /// The operator `L`: projection onto decreasing words along `J`.
    pub fn normal_form_l(&self, t: &TensorElement) -> Result<TensorElement> {
        self.normal_form_with(t, Strategy::Leftmost)
    }

    /// Exhaustive rewriting of every remaining word at the inversion picked by `strategy`.
    pub fn normal_form_with(&self, t: &TensorElement, strategy: Strategy) -> Result<TensorElement> {
        t.check_letters(self.dim())?;
        let mut pending = t.clone().into_terms();
        let mut done = BTreeMap::new();
        while let Some((w, c)) = pending.pop_last() {
            let l = w.letters();
            let inversion = match strategy {
                Strategy::Leftmost => l.windows(2).position(|p| p[0] < p[1]),
                Strategy::Rightmost => l.windows(2).rposition(|p| p[0] < p[1]),
            };
            match inversion {
                None => accumulate(&mut done, w, c),
                Some(s) => self.rewrite_into(l, s, &c, &mut pending),
            }
        }
        Ok(TensorElement::from_terms(done))
    }

    /// Odd-factor twist by `beta` in X coordinates.
    pub fn phi(&self, t: &TensorElement) -> Result<TensorElement> {
        self.module.phi_apply(t)
    }

    /// Representative of `t + I` in the span of `phi(W)`.
    pub fn normal_form_u(&self, t: &TensorElement) -> Result<TensorElement> {
        let twisted = self.phi(t)?;
        self.phi(&self.normal_form_l(&twisted)?)
    }

    /// Product in the enveloping algebra: the normal form of `u ⊙ v`.
    pub fn u_multiply(&self, u: &TensorElement, v: &TensorElement) -> Result<TensorElement> {
        self.normal_form_u(&hom_product_explicit(&self.module, u, v)?)
    }

    /// The twisting map induced on the enveloping algebra.
    pub fn u_alpha(&self, u: &TensorElement) -> Result<TensorElement> {
        self.normal_form_u(&self.module.alpha0_apply(u)?)
    }
}

fn accumulate(map: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
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

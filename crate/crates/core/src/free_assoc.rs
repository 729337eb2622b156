//! The free involutive Hom-associative algebra on an involutive Hom-module: the twisted
//! product on tensors and the extension of module morphisms to algebra morphisms.

use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, StructureConstants};
use crate::scalar::Scalar;
use crate::tensor::{tensor_concat, InvolutiveHomModule, TensorElement, Word};

/// Twisted product by recursion on the degree of the right factor:
/// `a ⊙ b = a ⊗ b` for `deg b = 1`, else `a ⊙ (b' ⊗ b_n) = (alpha0(a) ⊙ b') ⊗ alpha(b_n)`.
pub fn hom_product_rec(v: &InvolutiveHomModule, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
    a.check_letters(v.dim())?;
    b.check_letters(v.dim())?;
    let mut out = TensorElement::zero();
    for (wb, cb) in b.iter() {
        out.add_scaled(&rec_word(v, a, wb.letters())?, cb);
    }
    Ok(out)
}

fn rec_word(v: &InvolutiveHomModule, a: &TensorElement, b: &[usize]) -> Result<TensorElement> {
    let (&last, init) = b.split_last().expect("nonempty word");
    if init.is_empty() {
        return Ok(tensor_concat(a, &TensorElement::word(&[last])));
    }
    let head = rec_word(v, &v.alpha0_apply(a)?, init)?;
    Ok(tensor_concat(&head, &v.alpha0_apply(&TensorElement::word(&[last]))?))
}

/// Twisted product by the closed form `a ⊙ b = alpha0^{n-1}(a) ⊗ b1 ⊗ alpha0(b2 ⊗ ... ⊗ bn)`.
pub fn hom_product_explicit(v: &InvolutiveHomModule, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
    a.check_letters(v.dim())?;
    b.check_letters(v.dim())?;
    let mut out = TensorElement::zero();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            let m = wa.len();
            let twist_left = wb.len() % 2 == 0;
            let word = wa.concat(wb);
            v.map_factors_into(word.letters(), &|p| if p < m { twist_left } else { p > m }, &(ca * cb), &mut out);
        }
    }
    Ok(out)
}

/// Twisted product of words, where either side may be empty (an empty side acts as a unit).
pub(crate) fn hom_product_optional(
    v: &InvolutiveHomModule,
    a: Option<&TensorElement>,
    b: Option<&TensorElement>,
) -> Result<Option<TensorElement>> {
    Ok(match (a, b) {
        (None, None) => None,
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (Some(x), Some(y)) => Some(hom_product_explicit(v, x, y)?),
    })
}

/// A finite-dimensional involutive Hom-associative algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAssocAlgebra {
    mult: StructureConstants,
    alpha: RatMatrix,
}

impl HomAssocAlgebra {
    /// Validates involutivity, multiplicativity and Hom-associativity on all basis tuples.
    pub fn new(mult: StructureConstants, alpha: RatMatrix) -> Result<Self> {
        let d = mult.dim();
        if alpha.rows() != d || alpha.cols() != d {
            return Err(Error::DimensionMismatch { expected: d, found: alpha.rows() });
        }
        if !alpha.is_involution() {
            return Err(Error::NotInvolution);
        }
        let alg = Self { mult, alpha };
        let basis = |i: usize| unit(d, i);
        for i in 0..d {
            for j in 0..d {
                let lhs = alg.alpha.apply(&alg.mul(&basis(i), &basis(j))?);
                let rhs = alg.mul(&alg.alpha.column(i), &alg.alpha.column(j))?;
                if lhs != rhs {
                    return Err(Error::HomAssocAxiom { axiom: "multiplicativity", witness: vec![i, j] });
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = alg.mul(&basis(i), &basis(j))?;
                for k in 0..d {
                    let lhs = alg.mul(&alg.alpha.column(i), &alg.mul(&basis(j), &basis(k))?)?;
                    let rhs = alg.mul(&ij, &alg.alpha.column(k))?;
                    if lhs != rhs {
                        return Err(Error::HomAssocAxiom { axiom: "Hom-associativity", witness: vec![i, j, k] });
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.mult.dim()
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.mult
    }

    pub fn alpha(&self) -> &RatMatrix {
        &self.alpha
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.mult.eval(x, y)
    }

    pub fn apply_alpha(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.alpha.apply(x)
    }
}

pub(crate) fn unit(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![crate::scalar::zero(); dim];
    v[i] = crate::scalar::one();
    v
}

/// The algebra morphism from the free algebra induced by a Hom-module morphism `f`.
#[derive(Clone, Debug)]
pub struct MorphismExtension {
    target: HomAssocAlgebra,
    f: RatMatrix,
}

/// Extends `f: V -> A` (which must satisfy `f ∘ alpha_V = alpha_A ∘ f`) to the free algebra.
pub fn extend_morphism(v: &InvolutiveHomModule, target: &HomAssocAlgebra, f: &RatMatrix) -> Result<MorphismExtension> {
    if f.rows() != target.dim() || f.cols() != v.dim() {
        return Err(Error::DimensionMismatch { expected: target.dim(), found: f.rows() });
    }
    if f.mul(v.alpha()) != target.alpha().mul(f) {
        return Err(Error::NotIntertwining);
    }
    Ok(MorphismExtension { target: target.clone(), f: f.clone() })
}

impl MorphismExtension {
    pub fn target(&self) -> &HomAssocAlgebra {
        &self.target
    }

    /// Evaluates the extension: a word maps to the left-nested product of its letter images.
    pub fn eval(&self, t: &TensorElement) -> Result<Vec<Scalar>> {
        t.check_letters(self.f.cols())?;
        let mut out = vec![crate::scalar::zero(); self.target.dim()];
        for (w, c) in t.iter() {
            let value = self.eval_word(w)?;
            for (o, x) in out.iter_mut().zip(value) {
                *o += c * x;
            }
        }
        Ok(out)
    }

    fn eval_word(&self, w: &Word) -> Result<Vec<Scalar>> {
        let mut letters = w.letters().iter();
        let first = *letters.next().expect("nonempty word");
        let mut acc = self.f.column(first);
        for &l in letters {
            acc = self.target.mul(&acc, &self.f.column(l))?;
        }
        Ok(acc)
    }
}

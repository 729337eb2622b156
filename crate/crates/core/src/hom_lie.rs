//! Involutive Hom-Lie algebras given by structure constants.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::free_assoc::{unit, HomAssocAlgebra};
use crate::linalg::{RatMatrix, StructureConstants};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Involutive,
    SkewSymmetry,
    HomJacobi,
    Multiplicativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Involutive => "involutive",
            Axiom::SkewSymmetry => "skew-symmetry",
            Axiom::HomJacobi => "hom-jacobi",
            Axiom::Multiplicativity => "multiplicativity",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub pass: bool,
    /// First failing basis tuple, if any.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .checks
            .iter()
            .map(|c| match (&c.witness, c.pass) {
                (_, true) => format!("{}: pass", c.axiom),
                (Some(w), false) => format!("{}: FAIL at {:?}", c.axiom, w),
                (None, false) => format!("{}: FAIL", c.axiom),
            })
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// Checks the involutive Hom-Lie axioms on basis tuples (enough by multilinearity).
pub fn check_axioms(bracket: &StructureConstants, beta: &RatMatrix) -> Result<AxiomReport> {
    let d = bracket.dim();
    if beta.rows() != d || beta.cols() != d {
        return Err(Error::DimensionMismatch { expected: d, found: beta.rows() });
    }
    let e = |i| unit(d, i);
    let br = |x: &[Scalar], y: &[Scalar]| bracket.eval(x, y).expect("dimensions checked");

    let beta_sq = beta.mul(beta);
    let involutive = (0..d).find(|&i| beta_sq.column(i) != e(i)).map(|i| vec![i]);

    let mut skew = None;
    'skew: for i in 0..d {
        for j in i..d {
            let ij = bracket.product_of_basis(i, j);
            let ji = bracket.product_of_basis(j, i);
            if ij.iter().zip(ji).any(|(a, b)| !(a + b).is_zero()) {
                skew = Some(vec![i, j]);
                break 'skew;
            }
        }
    }

    let mut mult = None;
    'mult: for i in 0..d {
        for j in 0..d {
            let lhs = beta.apply(bracket.product_of_basis(i, j));
            let rhs = br(&beta.column(i), &beta.column(j));
            if lhs != rhs {
                mult = Some(vec![i, j]);
                break 'mult;
            }
        }
    }

    let mut jacobi = None;
    'jac: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let t1 = br(&beta.column(i), bracket.product_of_basis(j, k));
                let t2 = br(&beta.column(j), bracket.product_of_basis(k, i));
                let t3 = br(&beta.column(k), bracket.product_of_basis(i, j));
                if t1.iter().zip(&t2).zip(&t3).any(|((a, b), c)| !(a + b + c).is_zero()) {
                    jacobi = Some(vec![i, j, k]);
                    break 'jac;
                }
            }
        }
    }

    let check = |axiom, witness: Option<Vec<usize>>| AxiomCheck { axiom, pass: witness.is_none(), witness };
    Ok(AxiomReport {
        checks: vec![
            check(Axiom::Involutive, involutive),
            check(Axiom::SkewSymmetry, skew),
            check(Axiom::HomJacobi, jacobi),
            check(Axiom::Multiplicativity, mult),
        ],
    })
}

/// An involutive Hom-Lie algebra `(g, [,], beta)`.
///
/// Values built through [`HomLieAlgebra::new`] always satisfy every axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieAlgebra {
    bracket: StructureConstants,
    beta: RatMatrix,
}

impl HomLieAlgebra {
    pub fn new(bracket: StructureConstants, beta: RatMatrix) -> Result<Self> {
        let report = check_axioms(&bracket, &beta)?;
        if !report.all_pass() {
            return Err(Error::Axioms(report));
        }
        Ok(Self { bracket, beta })
    }

    /// Skips the axiom gate. Only meant for negative controls that feed invalid data
    /// through the rewriting engine on purpose; nothing downstream holds for such values.
    pub fn new_unchecked(bracket: StructureConstants, beta: RatMatrix) -> Result<Self> {
        let d = bracket.dim();
        if beta.rows() != d || beta.cols() != d {
            return Err(Error::DimensionMismatch { expected: d, found: beta.rows() });
        }
        Ok(Self { bracket, beta })
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self) -> &StructureConstants {
        &self.bracket
    }

    pub fn beta(&self) -> &RatMatrix {
        &self.beta
    }

    pub fn bracket_eval(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.bracket.eval(x, y)
    }

    pub fn check_axioms(&self) -> AxiomReport {
        check_axioms(&self.bracket, &self.beta).expect("dimensions agree by construction")
    }
}

fn is_lie_algebra(c: &StructureConstants) -> bool {
    check_axioms(c, &RatMatrix::identity(c.dim())).map(|r| r.all_pass()).unwrap_or(false)
}

/// Twists a classical Lie bracket by an involutive automorphism: `[x, y]' = beta([x, y])`.
pub fn yau_twist(classical: &StructureConstants, beta: &RatMatrix) -> Result<HomLieAlgebra> {
    let d = classical.dim();
    if beta.rows() != d || beta.cols() != d {
        return Err(Error::DimensionMismatch { expected: d, found: beta.rows() });
    }
    if !beta.is_involution() {
        return Err(Error::NotInvolution);
    }
    if !is_lie_algebra(classical) {
        return Err(Error::Axioms(check_axioms(classical, &RatMatrix::identity(d))?));
    }
    for i in 0..d {
        for j in 0..d {
            let lhs = beta.apply(classical.product_of_basis(i, j));
            if lhs != classical.eval(&beta.column(i), &beta.column(j))? {
                return Err(Error::NotAutomorphism);
            }
        }
    }
    HomLieAlgebra::new(classical.post_compose(beta), beta.clone())
}

/// Antisymmetrisation `[x, y] = xy - yx` of a Hom-associative algebra, with `beta = alpha`.
pub fn commutator_homlie(a: &HomAssocAlgebra) -> HomLieAlgebra {
    let d = a.dim();
    let m = a.structure();
    let mut c = StructureConstants::zeros(d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                c.set(i, j, k, m.get(i, j, k) - m.get(j, i, k));
            }
        }
    }
    HomLieAlgebra::new(c, a.alpha().clone()).expect("commutator of a Hom-associative algebra is Hom-Lie")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::int;

    fn v(x: &[i64]) -> Vec<Scalar> {
        x.iter().map(|&a| int(a)).collect()
    }

    #[test]
    fn abelian_any_involution_passes() {
        let beta = RatMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert!(check_axioms(&StructureConstants::zeros(2), &beta).unwrap().all_pass());
        let g = HomLieAlgebra::new(StructureConstants::zeros(2), beta).unwrap();
        assert_eq!(g.bracket_eval(&v(&[1, 2]), &v(&[3, -1])).unwrap(), v(&[0, 0]));
    }

    #[test]
    fn sl2_bracket() {
        let g = fixtures::sl2();
        let (f, h, e) = (v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]));
        assert_eq!(g.bracket_eval(&e, &f).unwrap(), h);
        assert_eq!(g.bracket_eval(&h, &e).unwrap(), v(&[0, 0, 2]));
        assert_eq!(g.bracket_eval(&h, &f).unwrap(), v(&[-2, 0, 0]));
        let x = v(&[2, -1, 3]);
        assert_eq!(g.bracket_eval(&x, &x).unwrap(), v(&[0, 0, 0]));
        assert!(g.check_axioms().all_pass());
    }

    #[test]
    fn untwisted_sl2_with_chevalley_involution_still_satisfies_hom_jacobi() {
        // beta: e<->f, h->-h is an involutive automorphism that is symmetric for the Killing
        // form, so every cyclic sum [beta x, [y, z]] + ... vanishes on sl2.
        let (bracket, beta) = fixtures::untwisted_sl2_with_involution();
        let report = check_axioms(&bracket, &beta).unwrap();
        assert!(report.check(Axiom::HomJacobi).unwrap().pass);
        assert!(report.all_pass());
    }

    #[test]
    fn corrupted_bracket_fails_hom_jacobi() {
        let (bracket, beta) = fixtures::corrupted_sl2();
        let report = check_axioms(&bracket, &beta).unwrap();
        let jac = report.check(Axiom::HomJacobi).unwrap();
        assert!(!jac.pass);
        assert!(jac.witness.is_some());
        assert!(matches!(HomLieAlgebra::new(bracket, beta), Err(Error::Axioms(_))));
    }

    #[test]
    fn yau_twist_examples() {
        let g = fixtures::sl2();
        assert_eq!(yau_twist(g.bracket(), &RatMatrix::identity(3)).unwrap(), g);

        let t = fixtures::twisted_sl2();
        let (f, h, e) = (v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]));
        assert_eq!(t.bracket_eval(&e, &f).unwrap(), v(&[0, -1, 0]));
        assert_eq!(t.bracket_eval(&h, &e).unwrap(), v(&[2, 0, 0]));
        assert_eq!(t.bracket_eval(&h, &f).unwrap(), v(&[0, 0, -2]));
        assert!(t.check_axioms().all_pass());

        let swap = RatMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert!(yau_twist(&StructureConstants::zeros(2), &swap).unwrap().bracket().is_zero());
    }

    #[test]
    fn yau_twist_rejects_bad_maps() {
        let g = fixtures::sl2();
        // h <-> e swap is involutive but not an automorphism
        let p = RatMatrix::signed_permutation(&[0, 2, 1], crate::scalar::Sign::Plus);
        assert!(matches!(yau_twist(g.bracket(), &p), Err(Error::NotAutomorphism)));
        let not_inv = RatMatrix::from_i64(3, 3, &[2, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert!(matches!(yau_twist(g.bracket(), &not_inv), Err(Error::NotInvolution)));
    }

    #[test]
    fn gl2_from_matrix_algebra() {
        // basis E11, E12, E21, E22 of 2x2 matrices
        let mut m = StructureConstants::zeros(4);
        let idx = |r: usize, c: usize| 2 * r + c;
        for (a, b, c) in itertools_product() {
            // E_ab E_bc = E_ac
            m.set(idx(a, b), idx(b, c), idx(a, c), int(1));
        }
        let alg = HomAssocAlgebra::new(m, RatMatrix::identity(4)).unwrap();
        let g = commutator_homlie(&alg);
        assert_eq!(g.beta(), alg.alpha());
        // [E12, E21] = E11 - E22, [E11, E12] = E12
        assert_eq!(g.bracket().product_of_basis(1, 2), v(&[1, 0, 0, -1]).as_slice());
        assert_eq!(g.bracket().product_of_basis(0, 1), v(&[0, 1, 0, 0]).as_slice());
        assert_eq!(g.bracket().product_of_basis(0, 3), v(&[0, 0, 0, 0]).as_slice());
    }

    fn itertools_product() -> impl Iterator<Item = (usize, usize, usize)> {
        (0..2).flat_map(|a| (0..2).flat_map(move |b| (0..2).map(move |c| (a, b, c))))
    }

    #[test]
    fn commutative_algebra_gives_abelian() {
        let mut m = StructureConstants::zeros(2);
        m.set(0, 0, 0, int(1));
        m.set(1, 1, 1, int(1));
        let swap = RatMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        let alg = HomAssocAlgebra::new(m.post_compose(&swap), swap).unwrap();
        assert!(commutator_homlie(&alg).bracket().is_zero());
    }
}

//! Small named algebras used by tests, the oracle and the command line.
//!
//! sl2 uses the basis order `f, h, e` (indices 0, 1, 2) so that decreasing words start with `e`.

use crate::hom_lie::{yau_twist, HomLieAlgebra};
use crate::linalg::{RatMatrix, StructureConstants};
use crate::scalar::int;

pub const SL2_NAMES: [&str; 3] = ["f", "h", "e"];

/// Classical sl2 brackets: `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2_bracket() -> StructureConstants {
    let (f, h, e) = (0, 1, 2);
    let mut c = StructureConstants::zeros(3);
    let mut put = |i: usize, j: usize, k: usize, v: i64| {
        c.set(i, j, k, int(v));
        c.set(j, i, k, int(-v));
    };
    put(e, f, h, 1);
    put(h, e, e, 2);
    put(h, f, f, -2);
    c
}

/// The Chevalley involution `e <-> f, h -> -h` (columns are images).
pub fn chevalley_involution() -> RatMatrix {
    RatMatrix::from_i64(3, 3, &[0, 0, 1, 0, -1, 0, 1, 0, 0])
}

pub fn sl2() -> HomLieAlgebra {
    HomLieAlgebra::new(sl2_bracket(), RatMatrix::identity(3)).expect("sl2 is a Lie algebra")
}

/// sl2 twisted by the Chevalley involution.
pub fn twisted_sl2() -> HomLieAlgebra {
    yau_twist(&sl2_bracket(), &chevalley_involution()).expect("Chevalley involution is an automorphism")
}

/// gl2 as sl2 plus a central `z` (basis `f, h, e, z`), twisted by the Chevalley involution
/// extended by `z -> z`. Both eigenspaces have dimension 2.
pub fn twisted_gl2() -> HomLieAlgebra {
    let sl = sl2_bracket();
    let mut c = StructureConstants::zeros(4);
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                c.set(i, j, k, sl.get(i, j, k).clone());
            }
        }
    }
    let beta = RatMatrix::from_i64(4, 4, &[0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1]);
    yau_twist(&c, &beta).expect("Chevalley involution extends to gl2")
}

/// Abelian algebra of dimension `n` with identity twist.
pub fn abelian(n: usize) -> HomLieAlgebra {
    HomLieAlgebra::new(StructureConstants::zeros(n), RatMatrix::identity(n)).expect("abelian")
}

/// Two-dimensional abelian algebra with the swap involution.
pub fn abelian_swap() -> HomLieAlgebra {
    HomLieAlgebra::new(StructureConstants::zeros(2), RatMatrix::from_i64(2, 2, &[0, 1, 1, 0])).expect("abelian")
}

/// The classical sl2 bracket paired with the Chevalley involution, without twisting.
pub fn untwisted_sl2_with_involution() -> (StructureConstants, RatMatrix) {
    (sl2_bracket(), chevalley_involution())
}

/// sl2 with `[h,e] = 3e` and identity twist; the Jacobi identity fails on `(f, h, e)`.
pub fn corrupted_sl2() -> (StructureConstants, RatMatrix) {
    let mut c = sl2_bracket();
    c.set(1, 2, 2, int(3));
    c.set(2, 1, 2, int(-3));
    (c, RatMatrix::identity(3))
}

/// Named algebras that pass the axiom gate, for looping over in checks.
pub fn valid_fixtures() -> Vec<(&'static str, HomLieAlgebra)> {
    vec![
        ("sl2", sl2()),
        ("twisted-sl2", twisted_sl2()),
        ("abelian-swap", abelian_swap()),
        ("twisted-gl2", twisted_gl2()),
    ]
}

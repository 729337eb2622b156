//! Seeded generators for test data. Every generator takes an explicit RNG so runs are
//! reproducible from a single `u64` seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::free_assoc::HomAssocAlgebra;
use crate::linalg::{change_of_basis_structure, kernel_basis, RatMatrix, StructureConstants};
use crate::scalar::{int, Scalar};
use crate::tensor::{InvolutiveHomModule, TensorElement, Word};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random invertible integer matrix with determinant ±1, built from shears and a permutation.
pub fn random_unimodular(rng: &mut TestRng, n: usize) -> RatMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut m = RatMatrix::signed_permutation(&perm, crate::scalar::Sign::Plus);
    if n < 2 {
        return m;
    }
    for _ in 0..n + 1 {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let mut shear = RatMatrix::identity(n);
        shear.set(i, j, int(rng.random_range(-2..=2)));
        m = m.mul(&shear);
    }
    m
}

/// A random involution: a signed involutive permutation conjugated by one random shear.
pub fn random_involution(rng: &mut TestRng, n: usize) -> RatMatrix {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    let mut p = RatMatrix::zeros(n, n);
    let mut rest = &idx[..];
    while let Some((&i, tail)) = rest.split_first() {
        let sign = int(if rng.random_bool(0.5) { 1 } else { -1 });
        match tail.split_first() {
            Some((&j, tail2)) if rng.random_bool(0.5) => {
                p.set(j, i, sign.clone());
                p.set(i, j, sign);
                rest = tail2;
            }
            _ => {
                p.set(i, i, sign);
                rest = tail;
            }
        }
    }
    if n < 2 {
        return p;
    }
    let i = rng.random_range(0..n);
    let j = (i + rng.random_range(1..n)) % n;
    let c = int(if rng.random_bool(0.5) { 1 } else { -1 } * rng.random_range(1..=2));
    let mut s = RatMatrix::identity(n);
    s.set(i, j, c.clone());
    let mut s_inv = RatMatrix::identity(n);
    s_inv.set(i, j, -c);
    s.mul(&p).mul(&s_inv)
}

pub fn random_word(rng: &mut TestRng, dim: usize, min_degree: usize, max_degree: usize) -> Word {
    let n = rng.random_range(min_degree..=max_degree);
    Word::new((0..n).map(|_| rng.random_range(0..dim)).collect()).expect("positive degree")
}

/// A random small-integer combination of up to `terms` words of degree at most `max_degree`.
pub fn random_element(rng: &mut TestRng, dim: usize, max_degree: usize, terms: usize) -> TensorElement {
    let mut t = TensorElement::zero();
    for _ in 0..terms {
        let w = random_word(rng, dim, 1, max_degree);
        let mut c = rng.random_range(-3..=3);
        if c == 0 {
            c = 1;
        }
        t.add_term(w, int(c));
    }
    t
}

fn unit_product(d: usize, entries: &[(usize, usize, usize, i64)]) -> StructureConstants {
    let mut c = StructureConstants::zeros(d);
    for &(i, j, k, v) in entries {
        c.set(i, j, k, int(v));
    }
    c
}

/// A random involutive Hom-associative algebra of dimension 2 or 3, obtained by twisting an
/// associative algebra with an involutive automorphism and then changing basis at random.
pub fn random_hom_assoc_algebra(rng: &mut TestRng) -> HomAssocAlgebra {
    let (mult, alpha) = match rng.random_range(0..4) {
        // k x k with the coordinate swap
        0 => (unit_product(2, &[(0, 0, 0, 1), (1, 1, 1, 1)]), RatMatrix::from_i64(2, 2, &[0, 1, 1, 0])),
        // k x k x k with a transposition of two factors
        1 => {
            let mult = unit_product(3, &[(0, 0, 0, 1), (1, 1, 1, 1), (2, 2, 2, 1)]);
            let mut perm = vec![0, 1, 2];
            let i = rng.random_range(0..3);
            perm.swap(i, (i + 1) % 3);
            (mult, RatMatrix::signed_permutation(&perm, crate::scalar::Sign::Plus))
        }
        // k[x]/(x^3) on 1, x, x^2 with x -> -x + c x^2
        2 => {
            let mult = unit_product(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1), (1, 1, 2, 1)]);
            let c = rng.random_range(-3..=3);
            (mult, RatMatrix::from_i64(3, 3, &[1, 0, 0, 0, -1, 0, 0, c, 1]))
        }
        // upper triangular 2x2 matrices on E11, E12, E22, conjugated by [[1, b], [0, -1]]
        _ => {
            let mult = unit_product(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)]);
            let b = rng.random_range(-3..=3);
            // E11 -> E11 + b E12, E12 -> -E12, E22 -> E22 - b E12
            (mult, RatMatrix::from_i64(3, 3, &[1, 0, 0, b, -1, -b, 0, 0, 1]))
        }
    };
    let twisted = mult.post_compose(&alpha);
    let d = twisted.dim();
    let p = random_unimodular(rng, d);
    let p_inv = p.inverse().expect("unimodular");
    let mult_p = change_of_basis_structure(&twisted, &p).expect("invertible");
    let alpha_p = p_inv.mul(&alpha).mul(&p);
    HomAssocAlgebra::new(mult_p, alpha_p).expect("Yau twist of an associative algebra")
}

/// A random matrix `f` with `f ∘ alpha_V = alpha_A ∘ f`, as an integer combination of a
/// kernel basis of that linear condition.
pub fn random_intertwiner(rng: &mut TestRng, v: &InvolutiveHomModule, target: &HomAssocAlgebra) -> RatMatrix {
    let (m, n) = (target.dim(), v.dim());
    // unknown f[r][c] sits at index r * n + c; one equation per entry of f alpha_V - alpha_A f
    let mut system = RatMatrix::zeros(m * n, m * n);
    for r in 0..m {
        for c in 0..n {
            let eq = r * n + c;
            for k in 0..n {
                let v_kc = v.alpha().get(k, c).clone();
                let cur = system.get(eq, r * n + k).clone();
                system.set(eq, r * n + k, cur + v_kc);
            }
            for k in 0..m {
                let a_rk = target.alpha().get(r, k).clone();
                let cur = system.get(eq, k * n + c).clone();
                system.set(eq, k * n + c, cur - a_rk);
            }
        }
    }
    let basis = kernel_basis(&system);
    let mut entries: Vec<Scalar> = vec![crate::scalar::zero(); m * n];
    for b in &basis {
        let coeff = int(rng.random_range(-2..=2));
        for (e, x) in entries.iter_mut().zip(b) {
            *e += &coeff * x;
        }
    }
    RatMatrix::new(m, n, entries).expect("sized")
}

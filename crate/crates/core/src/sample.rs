//! Seeded random generation of field elements, matrices, codes, and
//! monomial transforms. Intended for property tests and experiments;
//! everything is deterministic given the caller's RNG.

use rand::Rng;

use crate::code::{LinearCode, MonomialTransform};
use crate::gf::{FieldElement, FieldSpec};
use crate::matfq::MatrixFq;

pub fn random_element<R: Rng>(f: &FieldSpec, rng: &mut R) -> FieldElement {
    f.element(rng.random_range(0..f.q())).expect("in range")
}

pub fn random_nonzero_element<R: Rng>(f: &FieldSpec, rng: &mut R) -> FieldElement {
    f.element(rng.random_range(1..f.q())).expect("in range")
}

pub fn random_nonzero_vec<R: Rng>(f: &FieldSpec, n: usize, rng: &mut R) -> Vec<FieldElement> {
    (0..n).map(|_| random_nonzero_element(f, rng)).collect()
}

pub fn random_matrix<R: Rng>(
    f: &FieldSpec,
    rows: usize,
    cols: usize,
    rng: &mut R,
) -> MatrixFq {
    let data = (0..rows * cols).map(|_| random_element(f, rng)).collect();
    MatrixFq::new(f.clone(), rows, cols, data)
}

/// A uniformly-sampled invertible n x n matrix, by rejection.
pub fn random_invertible<R: Rng>(f: &FieldSpec, n: usize, rng: &mut R) -> MatrixFq {
    loop {
        let m = random_matrix(f, n, n, rng);
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

/// A random code of length n and dimension at most k_max (at least 1).
/// The dimension is the rank of a random k_max x n matrix, so it is
/// usually k_max itself.
pub fn random_code<R: Rng>(f: &FieldSpec, n: usize, k_max: usize, rng: &mut R) -> LinearCode {
    assert!(k_max >= 1 && k_max <= n);
    loop {
        let g = random_matrix(f, k_max, n, rng);
        if let Ok(c) = LinearCode::new(&g) {
            return c;
        }
    }
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    // Fisher-Yates
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

pub fn random_monomial<R: Rng>(f: &FieldSpec, n: usize, rng: &mut R) -> MonomialTransform {
    let perm = random_permutation(n, rng);
    let diag = random_nonzero_vec(f, n, rng);
    MonomialTransform::new(f, perm, diag).expect("perm and diag are valid by construction")
}

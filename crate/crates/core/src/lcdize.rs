//! Constructive monomial equivalence to LCD codes.
//!
//! For q >= 4, scaling the information positions of a systematic
//! generator (I | B) by nonzero x_1..x_k gives a code whose Gram
//! determinant is f(x) = det(D(x_1^2,..,x_k^2) + B B^T), a polynomial of
//! degree 2 in each variable with leading term x_1^2..x_k^2. It cannot
//! vanish on a grid S^k with |S| = 3, so a short search always produces
//! an LCD code equivalent to the input. The Hermitian variant uses
//! g(x) = det(D(x^(sqrt(q)+1)) + B conj(B)^T) and |S| = sqrt(q)+2, which
//! fits inside the q-1 nonzero elements exactly when q > 4.

use crate::code::{CodeError, HullFlavor, LinearCode, MonomialTransform};
use crate::gf::{FieldElement, FieldError};
use crate::matfq::MatrixFq;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Random-strategy attempts before falling back to the grid.
pub const RANDOM_TRY_CAP: u64 = 4096;
/// Seed used when a caller wants the default random strategy.
pub const DEFAULT_SEED: u64 = 0x1cd5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Lexicographic scan of S^k for the smallest-encoding grid S;
    /// deterministic and theorem-backed.
    Grid,
    /// Seeded uniform sampling from all nonzero tuples, capped at
    /// [`RANDOM_TRY_CAP`] tries, then grid fallback.
    Random { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LcdizeError {
    #[error("LCD-ization requires q >= 4, field has q = {q}")]
    FieldTooSmall { q: u64 },
    #[error("no witness exists: all {tried} candidate tuples evaluated to zero")]
    NoWitnessFound { tried: u64 },
    #[error(
        "grid search exhausted {tried} candidates without a witness; \
         this contradicts the degree bound and indicates a bug"
    )]
    GridExhausted { tried: u64 },
    #[error("witness entry {index} is zero")]
    ZeroEntry { index: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(CodeError),
}

impl From<CodeError> for LcdizeError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::Field(fe) => LcdizeError::Field(fe),
            other => LcdizeError::Code(other),
        }
    }
}

/// A successful LCD-ization: the witness scalars, the monomial transform
/// expressed on the original coordinates, and the transformed code.
#[derive(Debug, Clone)]
pub struct LcdizeResult {
    /// Nonzero scalars applied to the k information positions.
    pub witness_x: Vec<FieldElement>,
    /// Full-length transform: perm is the systematic-form column order,
    /// diag carries the witness on the first k new positions and 1
    /// elsewhere, so `c.apply_monomial(&transform)` equals `result`.
    pub transform: MonomialTransform,
    pub result: LinearCode,
    pub strategy: Strategy,
    /// Determinant evaluations performed by the search.
    pub evaluations: u64,
}

fn check_nonzero(x: &[FieldElement]) -> Result<(), LcdizeError> {
    match x.iter().position(|e| e.is_zero()) {
        Some(index) => Err(LcdizeError::ZeroEntry { index }),
        None => Ok(()),
    }
}

fn det_plus_diag(gram: &MatrixFq, x: &[FieldElement], exp: u64) -> FieldElement {
    let f = gram.field();
    let k = gram.rows();
    let mut data = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            let mut e = gram.at(i, j);
            if i == j {
                e = f.add(e, f.pow(x[i], exp));
            }
            data.push(e);
        }
    }
    MatrixFq::new(f.clone(), k, k, data)
        .det()
        .expect("matrix is square")
}

/// Evaluates f(x) = det(D(x_1^2,..,x_k^2) + B B^T), the Gram determinant
/// of (D(x) | B).
pub fn gram_det_poly_eval(b: &MatrixFq, x: &[FieldElement]) -> Result<FieldElement, LcdizeError> {
    check_nonzero(x)?;
    assert_eq!(x.len(), b.rows(), "one scalar per information position");
    let gram = b.mul(&b.transpose()).expect("B B^T dimensions agree");
    Ok(det_plus_diag(&gram, x, 2))
}

/// Evaluates g(x) = det(D(x_1^(s+1),..,x_k^(s+1)) + B conj(B)^T) where
/// s = sqrt(q), the Hermitian Gram determinant of (D(x) | B).
pub fn hermitian_gram_det_poly_eval(
    b: &MatrixFq,
    x: &[FieldElement],
) -> Result<FieldElement, LcdizeError> {
    let f = b.field();
    let s = f.sqrt_q().ok_or(FieldError::NotSquareField { q: f.q() })?;
    check_nonzero(x)?;
    assert_eq!(x.len(), b.rows(), "one scalar per information position");
    let gram = b
        .mul(&b.conjugated().map_err(CodeError::from)?.transpose())
        .expect("B conj(B)^T dimensions agree");
    Ok(det_plus_diag(&gram, x, s + 1))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum GramFlavor {
    Euclidean,
    Hermitian,
}

fn identity_result(c: &LinearCode, strategy: Strategy) -> LcdizeResult {
    let f = c.field();
    LcdizeResult {
        witness_x: vec![FieldElement::ONE; c.k()],
        transform: MonomialTransform::identity(f, c.n()),
        result: c.clone(),
        strategy,
        evaluations: 0,
    }
}

/// Scales the information positions by the witness and re-checks the
/// outcome through two independent paths: the Gram determinant of the
/// result's canonical generator and a hull (nullspace) computation.
fn assemble(
    c: &LinearCode,
    perm: Vec<usize>,
    x: Vec<FieldElement>,
    flavor: GramFlavor,
    strategy: Strategy,
    evaluations: u64,
) -> Result<LcdizeResult, LcdizeError> {
    let f = c.field();
    let mut diag = vec![FieldElement::ONE; c.n()];
    diag[..c.k()].copy_from_slice(&x);
    let transform = MonomialTransform::new(f, perm, diag)?;
    let result = c.apply_monomial(&transform)?;
    let hull_flavor = match flavor {
        GramFlavor::Euclidean => HullFlavor::Euclidean,
        GramFlavor::Hermitian => HullFlavor::Hermitian,
    };
    let lcd_now = match flavor {
        GramFlavor::Euclidean => result.is_lcd(),
        GramFlavor::Hermitian => result.is_hermitian_lcd()?,
    };
    let hull = result.hull(hull_flavor)?;
    if !lcd_now || hull.h != 0 {
        return Err(LcdizeError::Code(CodeError::InternalInconsistency(
            "witness passed the determinant test but the result is not LCD".into(),
        )));
    }
    Ok(LcdizeResult {
        witness_x: x,
        transform,
        result,
        strategy,
        evaluations,
    })
}

fn search(
    c: &LinearCode,
    strategy: Strategy,
    flavor: GramFlavor,
    grid_size: usize,
) -> Result<LcdizeResult, LcdizeError> {
    let f = c.field().clone();
    let (b, perm) = c.systematic_form();
    let k = c.k();
    let (gram, exp) = match flavor {
        GramFlavor::Euclidean => (b.mul(&b.transpose()).expect("Gram dimensions"), 2),
        GramFlavor::Hermitian => {
            let s = f.sqrt_q().expect("caller checked squareness");
            (
                b.mul(&b.conjugated().map_err(CodeError::from)?.transpose())
                    .expect("Gram dimensions"),
                s + 1,
            )
        }
    };
    let s: Vec<FieldElement> = f.nonzero_elements().take(grid_size).collect();
    let mut evaluations = 0u64;

    if let Strategy::Random { seed } = strategy {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_TRY_CAP {
            let x: Vec<FieldElement> = (0..k)
                .map(|_| crate::sample::random_nonzero_element(&f, &mut rng))
                .collect();
            evaluations += 1;
            if !det_plus_diag(&gram, &x, exp).is_zero() {
                return assemble(c, perm, x, flavor, strategy, evaluations);
            }
        }
    }

    // lexicographic grid scan; the last position moves fastest, so the
    // first hit is the lexicographically smallest witness in S^k
    let mut idx = vec![0usize; k];
    loop {
        let x: Vec<FieldElement> = idx.iter().map(|&i| s[i]).collect();
        evaluations += 1;
        if !det_plus_diag(&gram, &x, exp).is_zero() {
            return assemble(c, perm, x, flavor, strategy, evaluations);
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                let tried = (s.len() as u64).pow(k as u32);
                return Err(if flavor == GramFlavor::Hermitian && f.q() == 4 {
                    LcdizeError::NoWitnessFound { tried }
                } else {
                    LcdizeError::GridExhausted { tried }
                });
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < s.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Finds a monomial transform making `c` LCD. Requires q >= 4; a code
/// that is already LCD gets the identity transform with no search.
pub fn lcdize(c: &LinearCode, strategy: Strategy) -> Result<LcdizeResult, LcdizeError> {
    let q = c.field().q();
    if q < 4 {
        return Err(LcdizeError::FieldTooSmall { q });
    }
    if c.is_lcd() {
        return Ok(identity_result(c, strategy));
    }
    search(c, strategy, GramFlavor::Euclidean, 3)
}

/// Finds a monomial transform making `c` Hermitian LCD over a field of
/// square order. Guaranteed for q > 4; for q = 4 the (F_4*)^k space is
/// searched exhaustively and a miss is reported as [`LcdizeError::NoWitnessFound`].
pub fn hlcdize(c: &LinearCode, strategy: Strategy) -> Result<LcdizeResult, LcdizeError> {
    let f = c.field();
    let sq = f
        .sqrt_q()
        .ok_or(FieldError::NotSquareField { q: f.q() })?;
    if c.is_hermitian_lcd()? {
        return Ok(identity_result(c, strategy));
    }
    // degree of g per variable is sqrt(q)+1, so a grid of sqrt(q)+2
    // values suffices; at q = 4 that exceeds the 3 nonzero elements and
    // the scan degenerates to an exhaustive search
    let grid_size = (sq + 2).min(f.q() - 1) as usize;
    search(c, strategy, GramFlavor::Hermitian, grid_size)
}

//! Exact polynomial invariants of linear codes: weight enumerators, the
//! Tutte polynomial of the column matroid, the extended weight enumerator
//! through Greene's identity with an independent extension-field oracle,
//! and the binary/ternary hull-dimension evaluations.
//!
//! All arithmetic is exact: big integers for counts and coefficients,
//! big rationals inside the oracle's interpolation (with an integrality
//! check), and Eisenstein integers for the ternary root-of-unity values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::code::{CodeError, LinearCode};
use crate::eisenstein::EisensteinInt;
use crate::gf::{FieldElement, FieldError, FieldSpec, SubfieldEmbedding};
use crate::poly::{MultiPoly, Var};

use thiserror::Error;

/// Default cap on q^k for codeword enumeration.
pub const DEFAULT_CODEWORD_BUDGET: u64 = 1 << 26;
/// Default cap on 2^n for column-subset enumeration.
pub const DEFAULT_SUBSET_BUDGET: u64 = 1 << 22;

/// Enumerations at least this large shard across threads.
const PARALLEL_THRESHOLD: u128 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("enumeration needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("code is over GF({q}), not GF(2)")]
    NotBinary { q: u64 },
    #[error("code is over GF({q}), not GF(3)")]
    NotTernary { q: u64 },
    #[error("W(1,-1,4) = {value} is not (plus or minus) a power of two at least 2^k")]
    NotPowerOfTwo { value: BigInt },
    #[error("N(W(1,j)) = {norm} is not a power of three at least 3^k")]
    NotPowerOfThree { norm: BigInt },
    #[error("polynomial is not divisible by T - 1")]
    NotDivisible,
    #[error("substitution did not produce a polynomial")]
    NonPolynomialResult,
    #[error("interpolated coefficient of A_{weight} is not an integer")]
    NonIntegralInterpolation { weight: usize },
    #[error(transparent)]
    Code(CodeError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl From<CodeError> for EnumError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::BudgetExceeded { needed, budget } => {
                EnumError::BudgetExceeded { needed, budget }
            }
            CodeError::Field(fe) => EnumError::Field(fe),
            other => EnumError::Code(other),
        }
    }
}

/// Codeword counts by Hamming weight: `counts[w]` is A_w for w = 0..=n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpectrum {
    counts: Vec<BigInt>,
}

impl WeightSpectrum {
    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn a(&self, w: usize) -> &BigInt {
        &self.counts[w]
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    /// Smallest nonzero weight with a positive count, if any.
    pub fn min_positive_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| !self.counts[w].is_zero())
    }
}

// ---- codeword enumeration kernel ----

fn scaled_rows(c: &LinearCode) -> Vec<Vec<Vec<FieldElement>>> {
    let f = c.field();
    (0..c.k())
        .map(|i| {
            f.elements()
                .map(|s| c.generator().row(i).iter().map(|&e| f.mul(s, e)).collect())
                .collect()
        })
        .collect()
}

fn weight(v: &[FieldElement]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

/// Counts weights over all messages with rows `row..k`, every coefficient.
fn count_all_rec(
    f: &FieldSpec,
    scaled: &[Vec<Vec<FieldElement>>],
    row: usize,
    partial: &mut [FieldElement],
    counts: &mut [u64],
) {
    if row == scaled.len() {
        counts[weight(partial)] += 1;
        return;
    }
    count_all_rec(f, scaled, row + 1, partial, counts);
    for c in 1..f.q() {
        let srow = &scaled[row][c as usize];
        for (p, s) in partial.iter_mut().zip(srow) {
            *p = f.add(*p, *s);
        }
        count_all_rec(f, scaled, row + 1, partial, counts);
        for (p, s) in partial.iter_mut().zip(srow) {
            *p = f.sub(*p, *s);
        }
    }
}

/// Counts weights over projective representatives (first nonzero message
/// coefficient fixed to 1); scalar multiples share a weight, so the full
/// spectrum is q-1 times these counts for every positive weight.
fn count_projective_rec(
    f: &FieldSpec,
    scaled: &[Vec<Vec<FieldElement>>],
    row: usize,
    leading: bool,
    partial: &mut [FieldElement],
    counts: &mut [u64],
) {
    if row == scaled.len() {
        if !leading {
            counts[weight(partial)] += 1;
        }
        return;
    }
    count_projective_rec(f, scaled, row + 1, leading, partial, counts);
    let upper = if leading { 2 } else { f.q() };
    for c in 1..upper {
        let srow = &scaled[row][c as usize];
        for (p, s) in partial.iter_mut().zip(srow) {
            *p = f.add(*p, *s);
        }
        count_projective_rec(f, scaled, row + 1, false, partial, counts);
        for (p, s) in partial.iter_mut().zip(srow) {
            *p = f.sub(*p, *s);
        }
    }
}

fn spectrum_counts_seq(c: &LinearCode) -> Vec<u64> {
    let f = c.field();
    let mut counts = vec![0u64; c.n() + 1];
    if c.k() == 0 {
        counts[0] = 1;
        return counts;
    }
    let scaled = scaled_rows(c);
    let mut partial = vec![FieldElement::ZERO; c.n()];
    count_projective_rec(f, &scaled, 0, true, &mut partial, &mut counts);
    for w in counts.iter_mut() {
        *w *= f.q() - 1;
    }
    counts[0] = 1;
    counts
}

fn spectrum_counts_par(c: &LinearCode) -> Vec<u64> {
    let f = c.field();
    let scaled = scaled_rows(c);
    (0..f.q())
        .into_par_iter()
        .map(|c0| {
            let mut local = vec![0u64; c.n() + 1];
            let mut partial = scaled[0][c0 as usize].clone();
            count_all_rec(f, &scaled, 1, &mut partial, &mut local);
            local
        })
        .reduce(
            || vec![0u64; c.n() + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

fn spectrum_counts(c: &LinearCode, budget: u64) -> Result<Vec<u64>, EnumError> {
    let total = (c.field().q() as u128)
        .checked_pow(c.k() as u32)
        .ok_or(EnumError::BudgetExceeded {
            needed: u128::MAX,
            budget,
        })?;
    if total > budget as u128 {
        return Err(EnumError::BudgetExceeded {
            needed: total,
            budget,
        });
    }
    if c.k() >= 2 && total >= PARALLEL_THRESHOLD {
        Ok(spectrum_counts_par(c))
    } else {
        Ok(spectrum_counts_seq(c))
    }
}

/// The weight spectrum A_0..A_n by exhaustive codeword enumeration.
pub fn weight_spectrum(c: &LinearCode, budget: u64) -> Result<WeightSpectrum, EnumError> {
    let raw = spectrum_counts(c, budget)?;
    let counts: Vec<BigInt> = raw.into_iter().map(BigInt::from).collect();
    debug_assert!(counts[0].is_one());
    debug_assert_eq!(
        counts.iter().sum::<BigInt>(),
        BigInt::from(c.field().q()).pow(c.k() as u32)
    );
    Ok(WeightSpectrum { counts })
}

/// The weight enumerator `W_C(X,Y) = sum A_w X^(n-w) Y^w`.
pub fn weight_enumerator(c: &LinearCode, budget: u64) -> Result<MultiPoly, EnumError> {
    let spec = weight_spectrum(c, budget)?;
    let n = c.n() as u32;
    let mut w = MultiPoly::zero();
    for (wt, a) in spec.counts().iter().enumerate() {
        w = &w + &MultiPoly::monomial(n - wt as u32, wt as u32, 0, a.clone());
    }
    Ok(w)
}

// ---- column-subset enumeration kernel ----

/// Reduces `v` against an echelonized basis (each entry `(pivot, vec)`
/// with vec[pivot] = 1); returns the reduced vector and its pivot when it
/// is independent.
fn reduce_against(
    f: &FieldSpec,
    basis: &[(usize, Vec<FieldElement>)],
    v: &[FieldElement],
) -> Option<(usize, Vec<FieldElement>)> {
    let mut v = v.to_vec();
    for (p, b) in basis {
        let c = v[*p];
        if !c.is_zero() {
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi = f.sub(*vi, f.mul(c, *bi));
            }
        }
    }
    let pivot = v.iter().position(|e| !e.is_zero())?;
    let inv = f.inv(v[pivot]).expect("pivot entry is nonzero");
    for vi in v.iter_mut() {
        *vi = f.mul(*vi, inv);
    }
    Some((pivot, v))
}

fn subset_rank_rec(
    f: &FieldSpec,
    cols: &[Vec<FieldElement>],
    idx: usize,
    basis: &mut Vec<(usize, Vec<FieldElement>)>,
    size: usize,
    counts: &mut [Vec<u64>],
) {
    if idx == cols.len() {
        counts[basis.len()][size] += 1;
        return;
    }
    subset_rank_rec(f, cols, idx + 1, basis, size, counts);
    match reduce_against(f, basis, &cols[idx]) {
        Some(entry) => {
            basis.push(entry);
            subset_rank_rec(f, cols, idx + 1, basis, size + 1, counts);
            basis.pop();
        }
        None => subset_rank_rec(f, cols, idx + 1, basis, size + 1, counts),
    }
}

/// `counts[r][s]` = number of column subsets of size s and rank r,
/// enumerated by depth-first search with an incremental echelon basis.
fn rank_size_counts(c: &LinearCode, budget: u64) -> Result<Vec<Vec<u64>>, EnumError> {
    let n = c.n();
    let subsets = (1u128)
        .checked_shl(n as u32)
        .ok_or(EnumError::BudgetExceeded {
            needed: u128::MAX,
            budget,
        })?;
    if subsets > budget as u128 {
        return Err(EnumError::BudgetExceeded {
            needed: subsets,
            budget,
        });
    }
    let f = c.field();
    let g = c.generator();
    let cols: Vec<Vec<FieldElement>> = (0..n)
        .map(|j| (0..c.k()).map(|i| g.at(i, j)).collect())
        .collect();
    let mut counts = vec![vec![0u64; n + 1]; c.k() + 1];
    let mut basis = Vec::new();
    subset_rank_rec(f, &cols, 0, &mut basis, 0, &mut counts);
    Ok(counts)
}

/// The Tutte polynomial of the column matroid, by the Whitney rank sum
/// `t(X,Y) = sum over subsets (X-1)^(k-r) (Y-1)^(s-r)`.
pub fn tutte(c: &LinearCode, budget: u64) -> Result<MultiPoly, EnumError> {
    let counts = rank_size_counts(c, budget)?;
    let k = c.k();
    let n = c.n();
    let xm1 = &MultiPoly::x() - &MultiPoly::one();
    let ym1 = &MultiPoly::y() - &MultiPoly::one();
    let xm1_pow: Vec<MultiPoly> = (0..=k as u32).map(|e| xm1.pow(e)).collect();
    let ym1_pow: Vec<MultiPoly> = (0..=n as u32).map(|e| ym1.pow(e)).collect();
    let mut t = MultiPoly::zero();
    for (r, row) in counts.iter().enumerate() {
        for (s, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let term = &xm1_pow[k - r] * &ym1_pow[s - r];
            t = &t + &term.scale(&BigInt::from(count));
        }
    }
    Ok(t)
}

/// The extended weight enumerator `W_C(X,Y,T)` via Greene's identity.
///
/// Substituting into the Whitney rank sum and clearing `(X-Y)^k Y^(n-k)`
/// collapses each subset's contribution to `T^(k-r) (X-Y)^s Y^(n-s)`, so
/// the whole computation stays inside Z[X,Y,T]. Specializing T = q^m
/// yields the weight enumerator of the code lifted to GF(q^m); T = 1
/// yields X^n.
pub fn ext_weight_enumerator(c: &LinearCode, budget: u64) -> Result<MultiPoly, EnumError> {
    let counts = rank_size_counts(c, budget)?;
    let k = c.k();
    let n = c.n();
    let xmy = &MultiPoly::x() - &MultiPoly::y();
    let xmy_pow: Vec<MultiPoly> = (0..=n as u32).map(|e| xmy.pow(e)).collect();
    let mut w = MultiPoly::zero();
    for (r, row) in counts.iter().enumerate() {
        for (s, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let tail =
                MultiPoly::monomial(0, (n - s) as u32, (k - r) as u32, BigInt::from(count));
            w = &w + &(&xmy_pow[s] * &tail);
        }
    }
    Ok(w)
}

/// The same code lifted to the degree-m extension field, entries mapped
/// through the canonical subfield embedding.
pub fn lift_code(c: &LinearCode, m: u32) -> Result<LinearCode, EnumError> {
    let base = c.field();
    let ext = FieldSpec::new(base.p(), base.m() * m, None)?;
    if c.is_zero_code() {
        return Ok(LinearCode::zero(&ext, c.n()));
    }
    let emb = SubfieldEmbedding::new(base, &ext)?;
    let g = c.generator();
    let data: Vec<FieldElement> = (0..c.k())
        .flat_map(|i| g.row(i).iter().map(|&e| emb.map(e)))
        .collect();
    let lifted = crate::matfq::MatrixFq::new(ext, c.k(), c.n(), data);
    Ok(LinearCode::new(&lifted)?)
}

/// Lagrange interpolation through the given points, demanding integer
/// coefficients; returns them low-degree-first.
fn interpolate_integer(points: &[(BigInt, BigInt)]) -> Option<Vec<BigInt>> {
    let n = points.len();
    let mut acc = vec![BigRational::zero(); n];
    for m in 0..n {
        let mut num = vec![BigRational::one()];
        let mut den = BigRational::one();
        for (j, (tj, _)) in points.iter().enumerate() {
            if j == m {
                continue;
            }
            let tj = BigRational::from(tj.clone());
            let mut next = vec![BigRational::zero(); num.len() + 1];
            for (i, coeff) in num.iter().enumerate() {
                next[i + 1] += coeff;
                next[i] -= coeff * &tj;
            }
            num = next;
            den *= BigRational::from(points[m].0.clone()) - tj;
        }
        let scale = BigRational::from(points[m].1.clone()) / den;
        for (i, coeff) in num.iter().enumerate() {
            acc[i] += coeff * &scale;
        }
    }
    let mut out = Vec::with_capacity(n);
    for c in acc {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    Some(out)
}

/// Brute-force extended weight enumerator: enumerate the code over
/// GF(q^m) for m = 1..k+1 and interpolate each A_w as a polynomial in T
/// of degree at most k. Serves as an independent oracle for
/// [`ext_weight_enumerator`]; the two must agree exactly.
pub fn ext_weight_enumerator_oracle(
    c: &LinearCode,
    budget: u64,
) -> Result<MultiPoly, EnumError> {
    let k = c.k();
    let n = c.n() as u32;
    let q = c.field().q();
    // the largest enumeration is over GF(q^(k+1))
    let worst = (q as u128).checked_pow(((k + 1) * k.max(1)) as u32);
    match worst {
        Some(w) if w <= budget as u128 => {}
        _ => {
            return Err(EnumError::BudgetExceeded {
                needed: worst.unwrap_or(u128::MAX),
                budget,
            })
        }
    }
    let mut per_weight: Vec<Vec<(BigInt, BigInt)>> = vec![Vec::new(); c.n() + 1];
    for m in 1..=(k as u32 + 1) {
        let lifted = lift_code(c, m)?;
        let counts = spectrum_counts(&lifted, budget)?;
        let t = BigInt::from(q).pow(m);
        for (w, &a) in counts.iter().enumerate() {
            per_weight[w].push((t.clone(), BigInt::from(a)));
        }
    }
    let mut out = MultiPoly::zero();
    for (w, points) in per_weight.iter().enumerate() {
        let coeffs = interpolate_integer(points)
            .ok_or(EnumError::NonIntegralInterpolation { weight: w })?;
        for (d, coeff) in coeffs.into_iter().enumerate() {
            out = &out + &MultiPoly::monomial(n - w as u32, w as u32, d as u32, coeff);
        }
    }
    Ok(out)
}

/// `(W - X^n) / (T - 1)`, the reduced extended enumerator. The numerator
/// is divisible because W specializes to X^n at T = 1.
pub fn reduced_ext_enumerator(w: &MultiPoly) -> Result<MultiPoly, EnumError> {
    let n = w.homogeneous_xy_degree().ok_or(EnumError::NotDivisible)?;
    let p = w - &MultiPoly::monomial(n, 0, 0, BigInt::one());
    p.div_by_var_minus_one(Var::T)
        .ok_or(EnumError::NotDivisible)
}

/// Inverts Greene's identity: recovers the Tutte polynomial from the
/// extended weight enumerator via
/// `t(X,Y) = Y^n (Y-1)^(-k) W(1, 1/Y, (X-1)(Y-1))`.
pub fn tutte_from_ext(w: &MultiPoly, n: usize, k: usize) -> Result<MultiPoly, EnumError> {
    let sub = &(&MultiPoly::x() - &MultiPoly::one()) * &(&MultiPoly::y() - &MultiPoly::one());
    let mut acc = MultiPoly::zero();
    for (e, c) in w.terms() {
        let (ey, et) = (e.0[1], e.0[2]);
        if ey as usize > n {
            return Err(EnumError::NonPolynomialResult);
        }
        // X^a -> 1, Y^b -> Y^(n-b) after clearing Y^n, T^c -> ((X-1)(Y-1))^c
        let term = &sub.pow(et) * &MultiPoly::monomial(0, n as u32 - ey, 0, c.clone());
        acc = &acc + &term;
    }
    for _ in 0..k {
        acc = acc
            .div_by_var_minus_one(Var::Y)
            .ok_or(EnumError::NonPolynomialResult)?;
    }
    Ok(acc)
}

/// The signed value W_C(1,-1,4) and the hull dimension it encodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryInvariant {
    pub h: usize,
    /// Signed evaluation; its absolute value is 2^(k+h). The sign is
    /// reported, not asserted.
    pub value: BigInt,
}

/// Evaluates `|W_C(1,-1,4)| = 2^(k+h)` for a binary code and returns h.
pub fn binary_hull_invariant(
    c: &LinearCode,
    budget: u64,
) -> Result<BinaryInvariant, EnumError> {
    let q = c.field().q();
    if q != 2 {
        return Err(EnumError::NotBinary { q });
    }
    let w = ext_weight_enumerator(c, budget)?;
    let value = w.eval_int(&BigInt::from(1), &BigInt::from(-1), &BigInt::from(4));
    let mag = value.magnitude();
    let err = EnumError::NotPowerOfTwo {
        value: value.clone(),
    };
    if mag.is_zero() || mag.count_ones() != 1 {
        return Err(err);
    }
    let e = mag.trailing_zeros().expect("nonzero") as usize;
    if e < c.k() {
        return Err(err);
    }
    Ok(BinaryInvariant {
        h: e - c.k(),
        value,
    })
}

/// The exact value W_C(1,j) in Z[j] and the hull dimension it encodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryInvariant {
    pub h: usize,
    pub value: EisensteinInt,
    /// N(value) = 3^(k+h).
    pub norm: BigInt,
}

/// Evaluates `N(W_C(1,j)) = 3^(k+h)` for a ternary code and returns h.
/// The value is assembled from the weight spectrum grouped by weight
/// residue mod 3: W(1,j) = (a0 - a2) + (a1 - a2) j.
pub fn ternary_hull_invariant(
    c: &LinearCode,
    budget: u64,
) -> Result<TernaryInvariant, EnumError> {
    let q = c.field().q();
    if q != 3 {
        return Err(EnumError::NotTernary { q });
    }
    let spec = weight_spectrum(c, budget)?;
    let mut a = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
    for (w, count) in spec.counts().iter().enumerate() {
        a[w % 3] += count;
    }
    let value = EisensteinInt::new(&a[0] - &a[2], &a[1] - &a[2]);
    let norm = value.norm();
    // norm must be exactly 3^(k+h) for some h >= 0
    let mut e = 0usize;
    let mut rest = norm.clone();
    let three = BigInt::from(3);
    while (&rest % &three).is_zero() && !rest.is_zero() {
        rest /= &three;
        e += 1;
    }
    if !rest.is_one() || e < c.k() {
        return Err(EnumError::NotPowerOfThree { norm });
    }
    Ok(TernaryInvariant {
        h: e - c.k(),
        value,
        norm,
    })
}

/// Splits a weight enumerator's spectrum into partial sums by weight
/// residue mod 3: returns (a0, a1, a2).
pub fn spectrum_mod3(w: &MultiPoly) -> (BigInt, BigInt, BigInt) {
    let mut a = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
    for (e, c) in w.terms() {
        a[(e.0[1] as usize) % 3] += c;
    }
    let [a0, a1, a2] = a;
    (a0, a1, a2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::HullFlavor;
    use crate::matfq::MatrixFq;
    use crate::sample;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64, m: u32) -> FieldSpec {
        FieldSpec::new(p, m, None).unwrap()
    }

    fn code(f: &FieldSpec, rows: &[&[u64]]) -> LinearCode {
        let rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
        LinearCode::new(&MatrixFq::from_values(f, &rows).unwrap()).unwrap()
    }

    fn c1_gf2() -> LinearCode {
        code(&gf(2, 1), &[
            &[1, 0, 0, 1, 0, 0],
            &[0, 1, 0, 0, 1, 0],
            &[0, 0, 1, 0, 0, 1],
        ])
    }

    fn c2_gf2() -> LinearCode {
        code(&gf(2, 1), &[
            &[1, 0, 0, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1],
            &[0, 0, 1, 1, 1, 1],
        ])
    }

    const BUDGET: u64 = 1 << 26;

    #[test]
    fn weight_enumerator_examples() {
        let w1 = weight_enumerator(&c1_gf2(), BUDGET).unwrap();
        assert_eq!(w1.to_string(), "X^6 + 3*X^4*Y^2 + 3*X^2*Y^4 + Y^6");
        let w2 = weight_enumerator(&c2_gf2(), BUDGET).unwrap();
        assert_eq!(w1, w2, "C1 and C2 share a weight enumerator");

        let rep = code(&gf(2, 1), &[&[1, 1, 1]]);
        assert_eq!(
            weight_enumerator(&rep, BUDGET).unwrap().to_string(),
            "X^3 + Y^3"
        );
    }

    #[test]
    fn weight_spectrum_counts_all_codewords() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for f in [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1)] {
            for _ in 0..25 {
                let c = sample::random_code(&f, 7, 3, &mut rng);
                let spec = weight_spectrum(&c, BUDGET).unwrap();
                assert_eq!(spec.a(0), &BigInt::one());
                let total: BigInt = spec.counts().iter().sum();
                assert_eq!(total, BigInt::from(f.q()).pow(c.k() as u32));
                // W(1,1) = q^k through the polynomial too
                let w = weight_enumerator(&c, BUDGET).unwrap();
                let one = BigInt::one();
                assert_eq!(w.eval_int(&one, &one, &one), total);
                // lowest positive weight equals the minimum distance
                assert_eq!(
                    spec.min_positive_weight().unwrap(),
                    c.min_distance(BUDGET).unwrap()
                );
            }
        }
    }

    #[test]
    fn parallel_and_sequential_kernels_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        // large enough that the dispatcher would pick the parallel path
        let c = sample::random_code(&gf(2, 1), 20, 17, &mut rng);
        assert!(2u128.pow(c.k() as u32) >= PARALLEL_THRESHOLD);
        assert_eq!(spectrum_counts_par(&c), spectrum_counts_seq(&c));
        let c = sample::random_code(&gf(3, 1), 12, 10, &mut rng);
        assert_eq!(spectrum_counts_par(&c), spectrum_counts_seq(&c));
    }

    #[test]
    fn budget_is_enforced() {
        // (I_10 | 1 1) over GF(2): exactly k = 10
        let f = gf(2, 1);
        let mut rows = Vec::new();
        for i in 0..10 {
            let mut r = vec![0u64; 12];
            r[i] = 1;
            r[10] = 1;
            r[11] = 1;
            rows.push(r);
        }
        let c = LinearCode::new(&MatrixFq::from_values(&f, &rows).unwrap()).unwrap();
        assert_eq!(c.k(), 10);
        assert_eq!(
            weight_spectrum(&c, 512).unwrap_err(),
            EnumError::BudgetExceeded { needed: 1024, budget: 512 }
        );
        assert_eq!(
            tutte(&c, 1 << 10).unwrap_err(),
            EnumError::BudgetExceeded { needed: 1 << 12, budget: 1 << 10 }
        );
    }

    #[test]
    fn tutte_examples() {
        // three disjoint parallel pairs: t = (X+Y)^3
        let t1 = tutte(&c1_gf2(), BUDGET).unwrap();
        let expect = (&(&MultiPoly::x() + &MultiPoly::y())).pow(3);
        assert_eq!(t1, expect);
        assert_eq!(t1.to_string(), "X^3 + 3*X^2*Y + 3*X*Y^2 + Y^3");

        // full space: all coloops
        let f = gf(3, 1);
        let full = LinearCode::new(&MatrixFq::identity(&f, 4)).unwrap();
        assert_eq!(tutte(&full, BUDGET).unwrap(), MultiPoly::x().pow(4));

        // |t(-1,-1)| = 2^h
        let v = t1.eval_int(&BigInt::from(-1), &BigInt::from(-1), &BigInt::one());
        assert_eq!(v, BigInt::from(-8));
    }

    #[test]
    fn tutte_counts_bases_and_subsets() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for f in [gf(2, 1), gf(3, 1), gf(2, 2)] {
            for _ in 0..25 {
                let c = sample::random_code(&f, 8, 4, &mut rng);
                let t = tutte(&c, BUDGET).unwrap();
                let one = BigInt::one();
                let two = BigInt::from(2);
                // t(1,1) = number of bases, positive
                assert!(t.eval_int(&one, &one, &one) > BigInt::zero());
                // t(2,2) = 2^n
                assert_eq!(
                    t.eval_int(&two, &two, &one),
                    BigInt::from(2).pow(c.n() as u32)
                );
            }
        }
    }

    /// Deletion-contraction Tutte oracle over an explicit column list.
    /// Exponential and allocation-heavy; for cross-checking only.
    fn tutte_dc(f: &FieldSpec, cols: &[Vec<FieldElement>]) -> MultiPoly {
        fn rank_of(f: &FieldSpec, cols: &[Vec<FieldElement>]) -> usize {
            if cols.is_empty() {
                return 0;
            }
            let k = cols[0].len();
            let data: Vec<FieldElement> =
                (0..k).flat_map(|i| cols.iter().map(move |c| c[i])).collect();
            MatrixFq::new(f.clone(), k, cols.len(), data).rank()
        }
        let Some((e, rest)) = cols.split_first() else {
            return MultiPoly::one();
        };
        let rest: Vec<Vec<FieldElement>> = rest.to_vec();
        if e.iter().all(|x| x.is_zero()) {
            // loop
            return &MultiPoly::y() * &tutte_dc(f, &rest);
        }
        if rank_of(f, &rest) < rank_of(f, cols) {
            // coloop: contract by zeroing its pivot coordinate everywhere
            let pivot = e.iter().position(|x| !x.is_zero()).unwrap();
            let contracted: Vec<Vec<FieldElement>> = rest
                .iter()
                .map(|c| {
                    let scale = f.div(c[pivot], e[pivot]).unwrap();
                    c.iter()
                        .zip(e)
                        .enumerate()
                        .filter(|&(i, _)| i != pivot)
                        .map(|(_, (&ci, &ei))| f.sub(ci, f.mul(scale, ei)))
                        .collect()
                })
                .collect();
            return &MultiPoly::x() * &tutte_dc(f, &contracted);
        }
        // ordinary element: delete + contract
        let deleted = tutte_dc(f, &rest);
        let pivot = e.iter().position(|x| !x.is_zero()).unwrap();
        let contracted: Vec<Vec<FieldElement>> = rest
            .iter()
            .map(|c| {
                let scale = f.div(c[pivot], e[pivot]).unwrap();
                c.iter()
                    .zip(e)
                    .enumerate()
                    .filter(|&(i, _)| i != pivot)
                    .map(|(_, (&ci, &ei))| f.sub(ci, f.mul(scale, ei)))
                    .collect()
            })
            .collect();
        &deleted + &tutte_dc(f, &contracted)
    }

    #[test]
    fn tutte_matches_deletion_contraction_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(45);
        for f in [gf(2, 1), gf(3, 1), gf(2, 2)] {
            for _ in 0..20 {
                let n = rng.random_range(2..=7);
                let c = sample::random_code(&f, n, n.min(4), &mut rng);
                let g = c.generator();
                let cols: Vec<Vec<FieldElement>> = (0..c.n())
                    .map(|j| (0..c.k()).map(|i| g.at(i, j)).collect())
                    .collect();
                assert_eq!(tutte(&c, BUDGET).unwrap(), tutte_dc(&f, &cols));
            }
        }
    }

    #[test]
    fn tutte_duality() {
        let mut rng = ChaCha8Rng::seed_from_u64(46);
        for f in [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1)] {
            for _ in 0..25 {
                let c = sample::random_code(&f, 7, 3, &mut rng);
                if c.k() == c.n() {
                    continue;
                }
                let t = tutte(&c, BUDGET).unwrap();
                let td = tutte(&c.dual(), BUDGET).unwrap();
                assert_eq!(t, td.swap_xy());
            }
        }
    }

    fn paper_reduced_c1() -> MultiPoly {
        // 3X^4Y^2 + 3(T-1)X^2Y^4 + (T-1)^2 Y^6
        let tm1 = &MultiPoly::t() - &MultiPoly::one();
        let a = MultiPoly::monomial(4, 2, 0, BigInt::from(3));
        let b = &MultiPoly::monomial(2, 4, 0, BigInt::from(3)) * &tm1;
        let c = &MultiPoly::monomial(0, 6, 0, BigInt::one()) * &tm1.pow(2);
        &(&a + &b) + &c
    }

    fn paper_reduced_c2() -> MultiPoly {
        // 3X^4Y^2 + (T-2)X^3Y^3 + 3X^2Y^4 + 3(T-2)XY^5 + (T^2-3T+3)Y^6
        let tm2 = &MultiPoly::t() - &MultiPoly::constant_i64(2);
        let quad = &(&MultiPoly::t().pow(2) - &(&MultiPoly::t() * &MultiPoly::constant_i64(3)))
            + &MultiPoly::constant_i64(3);
        let mut acc = MultiPoly::monomial(4, 2, 0, BigInt::from(3));
        acc = &acc + &(&MultiPoly::monomial(3, 3, 0, BigInt::one()) * &tm2);
        acc = &acc + &MultiPoly::monomial(2, 4, 0, BigInt::from(3));
        acc = &acc + &(&MultiPoly::monomial(1, 5, 0, BigInt::from(3)) * &tm2);
        acc = &acc + &(&MultiPoly::monomial(0, 6, 0, BigInt::one()) * &quad);
        acc
    }

    #[test]
    fn extended_enumerator_matches_paper_examples() {
        let tm1 = &MultiPoly::t() - &MultiPoly::one();
        let x6 = MultiPoly::monomial(6, 0, 0, BigInt::one());

        let w1 = ext_weight_enumerator(&c1_gf2(), BUDGET).unwrap();
        assert_eq!(w1, &x6 + &(&tm1 * &paper_reduced_c1()));

        let w2 = ext_weight_enumerator(&c2_gf2(), BUDGET).unwrap();
        assert_eq!(w2, &x6 + &(&tm1 * &paper_reduced_c2()));
    }

    #[test]
    fn reduced_enumerator_matches_paper_examples() {
        let w1 = ext_weight_enumerator(&c1_gf2(), BUDGET).unwrap();
        assert_eq!(reduced_ext_enumerator(&w1).unwrap(), paper_reduced_c1());
        let w2 = ext_weight_enumerator(&c2_gf2(), BUDGET).unwrap();
        assert_eq!(reduced_ext_enumerator(&w2).unwrap(), paper_reduced_c2());

        // X^n alone reduces to zero
        let xn = MultiPoly::monomial(5, 0, 0, BigInt::one());
        assert!(reduced_ext_enumerator(&xn).unwrap().is_zero());

        // something that is not an extended enumerator fails the division
        let bad = &MultiPoly::monomial(1, 0, 0, BigInt::one())
            + &MultiPoly::monomial(0, 1, 1, BigInt::one());
        assert_eq!(
            reduced_ext_enumerator(&bad).unwrap_err(),
            EnumError::NotDivisible
        );
    }

    #[test]
    fn extended_enumerator_specializations() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for f in [gf(2, 1), gf(3, 1), gf(2, 2)] {
            for _ in 0..20 {
                let c = sample::random_code(&f, 8, 3, &mut rng);
                let w = ext_weight_enumerator(&c, BUDGET).unwrap();
                // T = 1 collapses to X^n
                assert_eq!(
                    w.eval_var(Var::T, &BigInt::one()),
                    MultiPoly::monomial(c.n() as u32, 0, 0, BigInt::one())
                );
                // T = q is the plain weight enumerator
                assert_eq!(
                    w.eval_var(Var::T, &BigInt::from(f.q())),
                    weight_enumerator(&c, BUDGET).unwrap()
                );
                // T = q^2 is the weight enumerator of the lifted code
                let lifted = lift_code(&c, 2).unwrap();
                assert_eq!(
                    w.eval_var(Var::T, &BigInt::from(f.q() * f.q())),
                    weight_enumerator(&lifted, BUDGET).unwrap()
                );
            }
        }
    }

    #[test]
    fn oracle_matches_greene_path() {
        let single = code(&gf(2, 1), &[&[1]]);
        let w = ext_weight_enumerator_oracle(&single, BUDGET).unwrap();
        assert_eq!(w.to_string(), "Y*T + X - Y");
        assert_eq!(w, ext_weight_enumerator(&single, BUDGET).unwrap());

        for c in [c1_gf2(), c2_gf2()] {
            assert_eq!(
                ext_weight_enumerator_oracle(&c, BUDGET).unwrap(),
                ext_weight_enumerator(&c, BUDGET).unwrap()
            );
        }

        let mut rng = ChaCha8Rng::seed_from_u64(48);
        let cases = [(gf(2, 1), 3), (gf(3, 1), 2), (gf(2, 2), 2)];
        for (f, kmax) in cases {
            for _ in 0..10 {
                let n = rng.random_range(2..=6);
                let c = sample::random_code(&f, n, kmax.min(n), &mut rng);
                assert_eq!(
                    ext_weight_enumerator_oracle(&c, BUDGET).unwrap(),
                    ext_weight_enumerator(&c, BUDGET).unwrap()
                );
            }
        }
    }

    #[test]
    fn tutte_round_trips_through_greene() {
        let single = code(&gf(2, 1), &[&[1]]);
        let w = ext_weight_enumerator(&single, BUDGET).unwrap();
        assert_eq!(tutte_from_ext(&w, 1, 1).unwrap(), MultiPoly::x());

        for c in [c1_gf2(), c2_gf2()] {
            let w = ext_weight_enumerator(&c, BUDGET).unwrap();
            assert_eq!(
                tutte_from_ext(&w, c.n(), c.k()).unwrap(),
                tutte(&c, BUDGET).unwrap()
            );
        }

        let mut rng = ChaCha8Rng::seed_from_u64(49);
        for f in [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1)] {
            for _ in 0..15 {
                let c = sample::random_code(&f, 7, 4, &mut rng);
                let w = ext_weight_enumerator(&c, BUDGET).unwrap();
                assert_eq!(
                    tutte_from_ext(&w, c.n(), c.k()).unwrap(),
                    tutte(&c, BUDGET).unwrap()
                );
            }
        }
    }

    #[test]
    fn binary_invariant_examples() {
        let inv = binary_hull_invariant(&c1_gf2(), BUDGET).unwrap();
        assert_eq!(inv.h, 3);
        assert_eq!(inv.value, BigInt::from(64));

        let inv = binary_hull_invariant(&c2_gf2(), BUDGET).unwrap();
        assert_eq!(inv.h, 1);
        assert_eq!(inv.value, BigInt::from(16));

        // full space: W(1,-1,4) = (1 + 3*(-1))^n = (-2)^n
        let f = gf(2, 1);
        let full = LinearCode::new(&MatrixFq::identity(&f, 5)).unwrap();
        let inv = binary_hull_invariant(&full, BUDGET).unwrap();
        assert_eq!(inv.h, 0);
        assert_eq!(inv.value, BigInt::from(-32));

        let t = code(&gf(3, 1), &[&[1, 1]]);
        assert_eq!(
            binary_hull_invariant(&t, BUDGET).unwrap_err(),
            EnumError::NotBinary { q: 3 }
        );
    }

    #[test]
    fn binary_invariant_matches_hull_dimension() {
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        let f = gf(2, 1);
        for _ in 0..60 {
            let n = rng.random_range(2..=10);
            let c = sample::random_code(&f, n, n.min(5), &mut rng);
            let inv = binary_hull_invariant(&c, BUDGET).unwrap();
            assert_eq!(inv.h, c.hull(HullFlavor::Euclidean).unwrap().h);
        }
    }

    #[test]
    fn ternary_invariant_examples() {
        let f = gf(3, 1);
        let rep = code(&f, &[&[1, 1, 1]]);
        let inv = ternary_hull_invariant(&rep, BUDGET).unwrap();
        assert_eq!(inv.h, 1);
        assert_eq!(inv.value, EisensteinInt::from_i64(3, 0));
        assert_eq!(inv.norm, BigInt::from(9));

        let single = code(&f, &[&[1]]);
        let inv = ternary_hull_invariant(&single, BUDGET).unwrap();
        assert_eq!(inv.h, 0);
        assert_eq!(inv.value, EisensteinInt::from_i64(1, 2));
        assert_eq!(inv.norm, BigInt::from(3));

        let pair = code(&f, &[&[1, 1]]);
        let inv = ternary_hull_invariant(&pair, BUDGET).unwrap();
        assert_eq!(inv.h, 0);
        // spectrum (1,0,2): value = 1 + 2j^2 = -1 - 2j
        assert_eq!(inv.value, EisensteinInt::from_i64(-1, -2));
        assert_eq!(inv.norm, BigInt::from(3));

        assert_eq!(
            ternary_hull_invariant(&c1_gf2(), BUDGET).unwrap_err(),
            EnumError::NotTernary { q: 2 }
        );
    }

    #[test]
    fn ternary_invariant_matches_hull_dimension() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let f = gf(3, 1);
        let j = EisensteinInt::j();
        let one = EisensteinInt::one();
        for _ in 0..60 {
            let n = rng.random_range(2..=8);
            let c = sample::random_code(&f, n, n.min(4), &mut rng);
            let h = c.hull(HullFlavor::Euclidean).unwrap().h;
            let inv = ternary_hull_invariant(&c, BUDGET).unwrap();
            assert_eq!(inv.h, h);
            // cross-check the spectrum path against direct polynomial
            // evaluation of W at (1, j)
            let w = weight_enumerator(&c, BUDGET).unwrap();
            assert_eq!(w.eval_eisenstein(&one, &j, &one), inv.value);
            // and the paper's Tutte form: N(t(j, j^2)) = 3^h
            let t = tutte(&c, BUDGET).unwrap();
            let tv = t.eval_eisenstein(&j, &EisensteinInt::j_squared(), &one);
            assert_eq!(tv.norm(), BigInt::from(3).pow(h as u32));
        }
    }

    #[test]
    fn spectrum_mod3_examples() {
        let f3 = gf(3, 1);
        let rep = code(&f3, &[&[1, 1, 1]]);
        let w = weight_enumerator(&rep, BUDGET).unwrap();
        let (a0, a1, a2) = spectrum_mod3(&w);
        assert_eq!((a0, a1, a2), (BigInt::from(3), BigInt::zero(), BigInt::zero()));

        let w = weight_enumerator(&c1_gf2(), BUDGET).unwrap();
        let (a0, a1, a2) = spectrum_mod3(&w);
        assert_eq!((a0, a1, a2), (BigInt::from(2), BigInt::from(3), BigInt::from(3)));

        let single = code(&f3, &[&[1]]);
        let w = weight_enumerator(&single, BUDGET).unwrap();
        let (a0, a1, a2) = spectrum_mod3(&w);
        assert_eq!((a0, a1, a2), (BigInt::one(), BigInt::from(2), BigInt::zero()));
    }

    #[test]
    fn extended_enumerator_equivalence_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        // permutations preserve it over any field
        for f in [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1)] {
            for _ in 0..15 {
                let c = sample::random_code(&f, 7, 3, &mut rng);
                let w = ext_weight_enumerator(&c, BUDGET).unwrap();
                let perm = sample::random_permutation(c.n(), &mut rng);
                let t = crate::code::MonomialTransform::new(
                    &f,
                    perm,
                    vec![FieldElement::ONE; c.n()],
                )
                .unwrap();
                let moved = c.apply_monomial(&t).unwrap();
                assert_eq!(ext_weight_enumerator(&moved, BUDGET).unwrap(), w);
            }
        }
        // monomial transforms preserve it over GF(2) and GF(3)
        for f in [gf(2, 1), gf(3, 1)] {
            for _ in 0..25 {
                let c = sample::random_code(&f, 7, 3, &mut rng);
                let w = ext_weight_enumerator(&c, BUDGET).unwrap();
                let t = sample::random_monomial(&f, c.n(), &mut rng);
                let moved = c.apply_monomial(&t).unwrap();
                assert_eq!(ext_weight_enumerator(&moved, BUDGET).unwrap(), w);
            }
        }
    }
}

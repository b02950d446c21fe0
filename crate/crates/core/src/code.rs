//! Linear codes over finite fields: duals, hulls, LCD predicates,
//! structured generators, minimum distance, and monomial equivalence.
//!
//! A code is stored by the reduced row echelon form of its generator, so
//! two values compare equal exactly when they are the same subspace. The
//! hull is computed twice on independent paths (kernel intersection and
//! Gram rank) and the two results are cross-checked on every call.

use std::fmt;

use thiserror::Error;

use crate::gf::{FieldElement, FieldError, FieldSpec};
use crate::matfq::{MatError, MatrixFq};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("generator has rank zero; the zero code cannot be built from a generator")]
    ZeroCode,
    #[error("enumeration needs {needed} codewords, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("scaling vector has a zero entry at index {index}")]
    ZeroEntry { index: usize },
    #[error("operand sizes do not match the code length")]
    DimensionMismatch,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("invalid parameters: {0}")]
    InvalidParameters(&'static str),
    #[error("internal consistency check failed: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Mat(MatError),
}

impl From<MatError> for CodeError {
    fn from(e: MatError) -> Self {
        // surface field-level failures under their own name
        match e {
            MatError::Field(fe) => CodeError::Field(fe),
            other => CodeError::Mat(other),
        }
    }
}

/// Which inner product the hull is taken against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullFlavor {
    Euclidean,
    Hermitian,
}

/// Hull analysis of a code: dimension, canonical basis, and the rank of
/// the Gram matrix. `h + gram_rank = k` always holds; the constructor
/// fails loudly rather than return a report violating it.
#[derive(Debug, Clone)]
pub struct HullReport {
    pub h: usize,
    pub hull_basis: MatrixFq,
    pub gram_rank: usize,
    pub is_lcd: bool,
}

/// An [n,k] linear code, kept in canonical form: the generator is the
/// RREF basis of the row space. `k = 0` is allowed only as the
/// distinguished zero code (the dual of the full space).
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    k: usize,
    gen: MatrixFq,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{},{}] code over {}", self.n, self.k, self.field)?;
        write!(f, "{:?}", self.gen)
    }
}

impl LinearCode {
    /// Builds a code from any spanning set of rows. Dependent and zero
    /// rows are dropped; the returned flag reports whether any were.
    pub fn from_generator(g: &MatrixFq) -> Result<(LinearCode, bool), CodeError> {
        if g.cols() == 0 {
            return Err(CodeError::InvalidParameters("code length must be positive"));
        }
        let res = g.rref();
        if res.rank == 0 {
            return Err(CodeError::ZeroCode);
        }
        let rows: Vec<usize> = (0..res.rank).collect();
        let gen = res.r.select_rows(&rows);
        let dropped = res.rank < g.rows();
        Ok((
            LinearCode {
                field: g.field().clone(),
                n: g.cols(),
                k: res.rank,
                gen,
            },
            dropped,
        ))
    }

    /// [`from_generator`](Self::from_generator) without the dropped-rows flag.
    pub fn new(g: &MatrixFq) -> Result<LinearCode, CodeError> {
        Ok(Self::from_generator(g)?.0)
    }

    /// The zero code of length n, the dual of the full space.
    pub fn zero(field: &FieldSpec, n: usize) -> LinearCode {
        LinearCode {
            field: field.clone(),
            n,
            k: 0,
            gen: MatrixFq::zeros(field, 0, n),
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero_code(&self) -> bool {
        self.k == 0
    }

    /// The canonical (RREF) generator matrix, k rows by n columns.
    pub fn generator(&self) -> &MatrixFq {
        &self.gen
    }

    /// A parity-check matrix: the canonical generator of the dual, with
    /// zero rows when the code is the full space.
    pub fn parity_check(&self) -> MatrixFq {
        self.gen.nullspace()
    }

    /// The Euclidean dual. Full space and zero code swap roles.
    pub fn dual(&self) -> LinearCode {
        if self.k == self.n {
            return LinearCode::zero(&self.field, self.n);
        }
        let ker = self.gen.nullspace();
        LinearCode::new(&ker).expect("kernel of a k<n generator is nonzero")
    }

    /// The Hermitian dual, the kernel of the conjugated generator.
    /// Requires square field order.
    pub fn hermitian_dual(&self) -> Result<LinearCode, CodeError> {
        let conj = self.gen.conjugated()?;
        if self.k == self.n {
            return Ok(LinearCode::zero(&self.field, self.n));
        }
        Ok(LinearCode::new(&conj.nullspace())
            .expect("kernel of a k<n generator is nonzero"))
    }

    /// The Gram matrix `G G^T` (Euclidean) or `G conj(G)^T` (Hermitian).
    fn gram(&self, flavor: HullFlavor) -> Result<MatrixFq, CodeError> {
        let rhs = match flavor {
            HullFlavor::Euclidean => self.gen.transpose(),
            HullFlavor::Hermitian => self.gen.conjugated()?.transpose(),
        };
        Ok(self.gen.mul(&rhs)?)
    }

    /// Computes the hull (intersection of the code with its dual of the
    /// requested flavor) and cross-checks its dimension against the
    /// rank of the Gram matrix: the two must satisfy h + rank = k.
    pub fn hull(&self, flavor: HullFlavor) -> Result<HullReport, CodeError> {
        // members of the hull satisfy both the parity check (lie in C)
        // and orthogonality against every generator row (lie in the dual)
        let h_mat = self.parity_check();
        let ortho = match flavor {
            HullFlavor::Euclidean => self.gen.clone(),
            HullFlavor::Hermitian => self.gen.conjugated()?,
        };
        let stacked = h_mat.stack(&ortho)?;
        let hull_basis = stacked.nullspace();
        let h = hull_basis.rows();
        let gram_rank = self.gram(flavor)?.rank();
        if h + gram_rank != self.k {
            return Err(CodeError::InternalInconsistency(format!(
                "hull dimension {h} plus Gram rank {gram_rank} must equal k = {}",
                self.k
            )));
        }
        Ok(HullReport {
            h,
            hull_basis,
            gram_rank,
            is_lcd: h == 0,
        })
    }

    /// Whether the code is linear complementary dual: `det(G G^T) != 0`.
    pub fn is_lcd(&self) -> bool {
        let gram = self.gram(HullFlavor::Euclidean).expect("euclidean gram");
        !gram.det().expect("gram is square").is_zero()
    }

    /// Whether the code is Hermitian LCD: `det(G conj(G)^T) != 0`.
    pub fn is_hermitian_lcd(&self) -> Result<bool, CodeError> {
        let gram = self.gram(HullFlavor::Hermitian)?;
        Ok(!gram.det().expect("gram is square").is_zero())
    }

    /// A generator whose first h rows are a hull basis and whose Gram
    /// matrix has the block shape `[[0,0],[0,P]]` with P invertible of
    /// size (k-h). The shape is a theorem, so it is asserted, not returned
    /// as an error.
    pub fn structured_generator(&self) -> Result<(MatrixFq, usize), CodeError> {
        let report = self.hull(HullFlavor::Euclidean)?;
        let h = report.h;
        let mut basis = report.hull_basis;
        let mut rank = h;
        for i in 0..self.k {
            if rank == self.k {
                break;
            }
            let candidate = basis.stack(&self.gen.select_rows(&[i]))?;
            if candidate.rank() > rank {
                basis = candidate;
                rank += 1;
            }
        }
        assert_eq!(rank, self.k, "generator rows must complete any hull basis");
        let gram = basis.mul(&basis.transpose())?;
        for i in 0..self.k {
            for j in 0..self.k {
                if i < h || j < h {
                    assert!(
                        gram.at(i, j).is_zero(),
                        "hull rows must be orthogonal to the whole code"
                    );
                }
            }
        }
        let tail: Vec<usize> = (h..self.k).collect();
        let p = gram.select_rows(&tail).select_columns(&tail);
        assert!(
            !p.det().expect("P is square").is_zero(),
            "trailing block of the structured Gram matrix must be invertible"
        );
        Ok((basis, h))
    }

    /// Minimum Hamming weight over the nonzero codewords, by enumerating
    /// one representative per projective message class (scaling a message
    /// scales the codeword and keeps its weight). The budget is compared
    /// against the full count q^k of codewords.
    pub fn min_distance(&self, budget: u64) -> Result<usize, CodeError> {
        if self.k == 0 {
            return Err(CodeError::ZeroCode);
        }
        let q = self.field.q() as u128;
        let total = q
            .checked_pow(self.k as u32)
            .ok_or(CodeError::BudgetExceeded {
                needed: u128::MAX,
                budget,
            })?;
        if total > budget as u128 {
            return Err(CodeError::BudgetExceeded {
                needed: total,
                budget,
            });
        }
        // scaled[i][c] = c * row_i, indexed by the encoding of c
        let f = &self.field;
        let scaled: Vec<Vec<Vec<FieldElement>>> = (0..self.k)
            .map(|i| {
                f.elements()
                    .map(|c| self.gen.row(i).iter().map(|&e| f.mul(c, e)).collect())
                    .collect()
            })
            .collect();
        let mut best = self.n + 1;
        let mut partial = vec![FieldElement::ZERO; self.n];
        self.min_distance_rec(&scaled, 0, true, &mut partial, &mut best);
        debug_assert!(best <= self.n);
        Ok(best)
    }

    fn min_distance_rec(
        &self,
        scaled: &[Vec<Vec<FieldElement>>],
        row: usize,
        leading: bool,
        partial: &mut Vec<FieldElement>,
        best: &mut usize,
    ) {
        if row == self.k {
            if !leading {
                let w = partial.iter().filter(|e| !e.is_zero()).count();
                if w < *best {
                    *best = w;
                }
            }
            return;
        }
        // coefficient zero keeps the partial sum untouched
        self.min_distance_rec(scaled, row + 1, leading, partial, best);
        // the first nonzero coefficient can be fixed to 1: other choices
        // give scalar multiples of an already-visited codeword
        let coeffs: &[u64] = if leading { &[1] } else { &[] };
        let f = &self.field;
        let iter: Box<dyn Iterator<Item = u64>> = if leading {
            Box::new(coeffs.iter().copied())
        } else {
            Box::new(1..f.q())
        };
        for c in iter {
            let srow = &scaled[row][c as usize];
            for (p, s) in partial.iter_mut().zip(srow) {
                *p = f.add(*p, *s);
            }
            self.min_distance_rec(scaled, row + 1, false, partial, best);
            for (p, s) in partial.iter_mut().zip(srow) {
                *p = f.sub(*p, *s);
            }
        }
    }

    /// The code `x * C` scaled coordinatewise by a vector of nonzero
    /// entries.
    pub fn star_scale(&self, x: &[FieldElement]) -> Result<LinearCode, CodeError> {
        if x.len() != self.n {
            return Err(CodeError::DimensionMismatch);
        }
        for (i, &e) in x.iter().enumerate() {
            self.field.element(e.value())?;
            if e.is_zero() {
                return Err(CodeError::ZeroEntry { index: i });
            }
        }
        if self.k == 0 {
            return Ok(self.clone());
        }
        let mut rows = Vec::with_capacity(self.k);
        for i in 0..self.k {
            let row: Vec<FieldElement> = self
                .gen
                .row(i)
                .iter()
                .zip(x)
                .map(|(&g, &xi)| self.field.mul(g, xi))
                .collect();
            rows.push(row);
        }
        let data: Vec<FieldElement> = rows.into_iter().flatten().collect();
        let g = MatrixFq::new(self.field.clone(), self.k, self.n, data);
        LinearCode::new(&g)
    }

    /// The monomially transformed code T(C).
    pub fn apply_monomial(&self, t: &MonomialTransform) -> Result<LinearCode, CodeError> {
        if t.field != self.field {
            return Err(CodeError::FieldMismatch);
        }
        if t.len() != self.n {
            return Err(CodeError::DimensionMismatch);
        }
        if self.k == 0 {
            return Ok(self.clone());
        }
        let mut data = Vec::with_capacity(self.k * self.n);
        for i in 0..self.k {
            data.extend(t.apply(self.gen.row(i)));
        }
        let g = MatrixFq::new(self.field.clone(), self.k, self.n, data);
        LinearCode::new(&g)
    }

    /// Column order putting the code in systematic form: returns `(B, perm)`
    /// where `perm` lists pivot columns first (in order) then the free
    /// columns, and the code with columns so arranged has generator
    /// `(I_k | B)`.
    pub fn systematic_form(&self) -> (MatrixFq, Vec<usize>) {
        let res = self.gen.rref();
        debug_assert_eq!(res.rank, self.k, "stored generator is full rank");
        let free: Vec<usize> = (0..self.n).filter(|c| !res.pivots.contains(c)).collect();
        let b = self.gen.select_columns(&free);
        let mut perm = res.pivots.clone();
        perm.extend_from_slice(&free);
        (b, perm)
    }
}

/// A monomial transform: permute coordinates, then scale each by a
/// nonzero constant. Acts on vectors by `(T v)_i = diag_i * v_perm[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialTransform {
    field: FieldSpec,
    perm: Vec<usize>,
    diag: Vec<FieldElement>,
}

impl MonomialTransform {
    pub fn new(
        field: &FieldSpec,
        perm: Vec<usize>,
        diag: Vec<FieldElement>,
    ) -> Result<MonomialTransform, CodeError> {
        if perm.len() != diag.len() {
            return Err(CodeError::DimensionMismatch);
        }
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(CodeError::InvalidParameters(
                    "perm must be a permutation of 0..n",
                ));
            }
            seen[p] = true;
        }
        for (i, &d) in diag.iter().enumerate() {
            field.element(d.value())?;
            if d.is_zero() {
                return Err(CodeError::ZeroEntry { index: i });
            }
        }
        Ok(MonomialTransform {
            field: field.clone(),
            perm,
            diag,
        })
    }

    pub fn identity(field: &FieldSpec, n: usize) -> MonomialTransform {
        MonomialTransform {
            field: field.clone(),
            perm: (0..n).collect(),
            diag: vec![FieldElement::ONE; n],
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn diag(&self) -> &[FieldElement] {
        &self.diag
    }

    /// Whether the transform only permutes (all scale factors are one).
    pub fn is_permutation(&self) -> bool {
        self.diag.iter().all(|&d| d == FieldElement::ONE)
    }

    pub fn apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.len());
        self.perm
            .iter()
            .zip(&self.diag)
            .map(|(&p, &d)| self.field.mul(d, v[p]))
            .collect()
    }

    /// The composite transform acting as `self` after `other`:
    /// `compose(self, other).apply(v) = self.apply(other.apply(v))`.
    pub fn compose(&self, other: &MonomialTransform) -> Result<MonomialTransform, CodeError> {
        if self.field != other.field {
            return Err(CodeError::FieldMismatch);
        }
        if self.len() != other.len() {
            return Err(CodeError::DimensionMismatch);
        }
        let f = &self.field;
        let n = self.len();
        let mut perm = vec![0usize; n];
        let mut diag = vec![FieldElement::ONE; n];
        for i in 0..n {
            perm[i] = other.perm[self.perm[i]];
            diag[i] = f.mul(self.diag[i], other.diag[self.perm[i]]);
        }
        Ok(MonomialTransform {
            field: f.clone(),
            perm,
            diag,
        })
    }

    pub fn inverse(&self) -> MonomialTransform {
        let f = &self.field;
        let n = self.len();
        let mut perm = vec![0usize; n];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        let diag: Vec<FieldElement> = (0..n)
            .map(|i| {
                f.inv(self.diag[perm[i]])
                    .expect("diag entries are nonzero")
            })
            .collect();
        MonomialTransform {
            field: f.clone(),
            perm,
            diag,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
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
        // (I3 | I3)
        code(&gf(2, 1), &[
            &[1, 0, 0, 1, 0, 0],
            &[0, 1, 0, 0, 1, 0],
            &[0, 0, 1, 0, 0, 1],
        ])
    }

    fn c2_gf2() -> LinearCode {
        // (I3 | J3)
        code(&gf(2, 1), &[
            &[1, 0, 0, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1],
            &[0, 0, 1, 1, 1, 1],
        ])
    }

    #[test]
    fn build_from_generator() {
        let c = c1_gf2();
        assert_eq!((c.n(), c.k()), (6, 3));

        let f = gf(2, 1);
        let (c, dropped) = LinearCode::from_generator(
            &MatrixFq::from_values(&f, &[vec![1, 1], vec![1, 1]]).unwrap(),
        )
        .unwrap();
        assert_eq!((c.n(), c.k()), (2, 1));
        assert!(dropped);

        let f4 = gf(2, 2);
        let c = code(&f4, &[&[1, 2]]);
        assert_eq!((c.n(), c.k()), (2, 1));

        let zero = MatrixFq::zeros(&f, 2, 3);
        assert_eq!(
            LinearCode::from_generator(&zero).unwrap_err(),
            CodeError::ZeroCode
        );
    }

    #[test]
    fn dual_examples() {
        let f = gf(2, 1);
        let full = LinearCode::new(&MatrixFq::identity(&f, 4)).unwrap();
        let z = full.dual();
        assert!(z.is_zero_code());
        assert_eq!(z.dual(), full);

        let c1 = c1_gf2();
        assert_eq!(c1.dual(), c1, "(I3|I3) is self dual");

        let rep = code(&f, &[&[1, 1, 1]]);
        let even = rep.dual();
        assert_eq!((even.n(), even.k()), (3, 2));
        assert_eq!(even, code(&f, &[&[1, 0, 1], &[0, 1, 1]]));
    }

    #[test]
    fn hermitian_dual_examples() {
        let f4 = gf(2, 2);
        let full = LinearCode::new(&MatrixFq::identity(&f4, 3)).unwrap();
        assert!(full.hermitian_dual().unwrap().is_zero_code());

        let c = code(&f4, &[&[1, 1]]);
        assert_eq!(c.hermitian_dual().unwrap(), c);

        // <(1,alpha)> is Hermitian self dual: (1,a) ._H (1,a) = 1 + a^3 = 0
        let c = code(&f4, &[&[1, 2]]);
        assert_eq!(c.hermitian_dual().unwrap(), c);

        let f2 = gf(2, 1);
        let c = code(&f2, &[&[1, 1]]);
        assert!(matches!(
            c.hermitian_dual().unwrap_err(),
            CodeError::Field(FieldError::NotSquareField { q: 2 })
        ));
    }

    #[test]
    fn dual_involution_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for f in [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1)] {
            for _ in 0..40 {
                let c = sample::random_code(&f, 7, 4, &mut rng);
                assert_eq!(c.dual().dual(), c);
            }
        }
        for f in [gf(2, 2), gf(3, 2)] {
            for _ in 0..40 {
                let c = sample::random_code(&f, 6, 3, &mut rng);
                assert_eq!(
                    c.hermitian_dual().unwrap().hermitian_dual().unwrap(),
                    c
                );
            }
        }
    }

    #[test]
    fn hull_examples() {
        let c1 = c1_gf2();
        let rep = c1.hull(HullFlavor::Euclidean).unwrap();
        assert_eq!(rep.h, 3);
        assert_eq!(rep.gram_rank, 0);
        assert!(!rep.is_lcd);

        let c2 = c2_gf2();
        let rep = c2.hull(HullFlavor::Euclidean).unwrap();
        assert_eq!(rep.h, 1);
        assert_eq!(rep.gram_rank, 2);
        let ones = MatrixFq::from_values(&gf(2, 1), &[vec![1; 6]]).unwrap();
        assert_eq!(rep.hull_basis, ones);

        let f5 = gf(5, 1);
        let full = LinearCode::new(&MatrixFq::identity(&f5, 4)).unwrap();
        let rep = full.hull(HullFlavor::Euclidean).unwrap();
        assert_eq!(rep.h, 0);
        assert!(rep.is_lcd);
    }

    #[test]
    fn hermitian_hull_examples() {
        let f4 = gf(2, 2);
        // Hermitian self dual, so the hull is everything
        let c = code(&f4, &[&[1, 2]]);
        let rep = c.hull(HullFlavor::Hermitian).unwrap();
        assert_eq!(rep.h, 1);
        assert_eq!(rep.gram_rank, 0);

        // e1 pairs with itself to 1, so the Hermitian hull is trivial
        let c = code(&f4, &[&[1, 0]]);
        let rep = c.hull(HullFlavor::Hermitian).unwrap();
        assert_eq!(rep.h, 0);
        assert!(rep.is_lcd);

        let f2 = gf(2, 1);
        let c = code(&f2, &[&[1, 1]]);
        assert!(c.hull(HullFlavor::Hermitian).is_err());
    }

    #[test]
    fn lcd_predicates() {
        assert!(!c2_gf2().is_lcd());
        assert!(!c1_gf2().is_lcd());

        let f4 = gf(2, 2);
        let c = code(&f4, &[&[1, 2]]);
        assert!(c.is_lcd(), "GG^T = 1 + alpha^2 = alpha is nonzero");
        assert!(!c.is_hermitian_lcd().unwrap());

        let f2 = gf(2, 1);
        assert!(!code(&f2, &[&[1, 1]]).is_lcd());

        // predicate agrees with the hull report on both flavors
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for f in [gf(2, 1), gf(3, 1), gf(2, 2)] {
            for _ in 0..60 {
                let c = sample::random_code(&f, 8, 4, &mut rng);
                let rep = c.hull(HullFlavor::Euclidean).unwrap();
                assert_eq!(c.is_lcd(), rep.h == 0);
                assert_eq!(rep.is_lcd, rep.h == 0);
                // complement criterion: dim(C + Cperp) = n iff h = 0
                let sum_rank = c.generator().stack(c.dual().generator()).unwrap().rank();
                assert_eq!(sum_rank == c.n(), rep.h == 0);
                if f.has_square_order() {
                    let hrep = c.hull(HullFlavor::Hermitian).unwrap();
                    assert_eq!(c.is_hermitian_lcd().unwrap(), hrep.h == 0);
                }
            }
        }
    }

    #[test]
    fn gram_rank_matches_hull_dimension() {
        // the identity k - rank(G G^T) = dim hull holds for every
        // generator of the code, not only the canonical one
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let fields = [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1), gf(2, 3), gf(3, 2)];
        let mut cases = 0;
        for f in &fields {
            for _ in 0..90 {
                let n = rng.random_range(2..=12);
                let kmax = n.min(5);
                let c = sample::random_code(f, n, kmax, &mut rng);
                let rep = c.hull(HullFlavor::Euclidean).unwrap();
                assert_eq!(rep.h + rep.gram_rank, c.k());
                for _ in 0..3 {
                    let u = sample::random_invertible(f, c.k(), &mut rng);
                    let g2 = u.mul(c.generator()).unwrap();
                    let gram = g2.mul(&g2.transpose()).unwrap();
                    assert_eq!(c.k() - gram.rank(), rep.h);
                }
                cases += 1;
            }
        }
        assert!(cases >= 500);
    }

    #[test]
    fn structured_generator_examples() {
        let c2 = c2_gf2();
        let (g0, h) = c2.structured_generator().unwrap();
        assert_eq!(h, 1);
        // first row spans the hull: the all-ones vector
        assert_eq!(g0.row(0), &[FieldElement::ONE; 6]);
        // trailing block is the invertible P = [[0,1],[1,0]]
        let gram = g0.mul(&g0.transpose()).unwrap();
        let p = gram.select_rows(&[1, 2]).select_columns(&[1, 2]);
        assert_eq!(p, MatrixFq::from_values(&gf(2, 1), &[vec![0, 1], vec![1, 0]]).unwrap());

        // self dual: G0 G0^T is entirely zero, P is empty
        let c1 = c1_gf2();
        let (g0, h) = c1.structured_generator().unwrap();
        assert_eq!(h, 3);
        assert!(g0.mul(&g0.transpose()).unwrap().is_zero());

        // LCD code: hull is empty, G0 is just a generator
        let f5 = gf(5, 1);
        let c = LinearCode::new(&MatrixFq::identity(&f5, 3)).unwrap();
        let (g0, h) = c.structured_generator().unwrap();
        assert_eq!(h, 0);
        assert_eq!(g0.rows(), 3);
    }

    #[test]
    fn structured_generator_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        for f in [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1)] {
            for _ in 0..50 {
                let c = sample::random_code(&f, 9, 5, &mut rng);
                // block-form assertions run inside
                let (g0, h) = c.structured_generator().unwrap();
                assert_eq!(g0.rows(), c.k());
                assert_eq!(h, c.hull(HullFlavor::Euclidean).unwrap().h);
                // G0 generates the same code
                assert_eq!(LinearCode::new(&g0).unwrap(), c);
            }
        }
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(c1_gf2().min_distance(1 << 26).unwrap(), 2);
        assert_eq!(c2_gf2().min_distance(1 << 26).unwrap(), 2);
        let rep = code(&gf(2, 1), &[&[1, 1, 1]]);
        assert_eq!(rep.min_distance(1 << 26).unwrap(), 3);
        assert_eq!(
            c1_gf2().min_distance(4).unwrap_err(),
            CodeError::BudgetExceeded { needed: 8, budget: 4 }
        );
    }

    #[test]
    fn min_distance_brute_force_cross_check() {
        // oracle: direct enumeration of all q^k messages, no projective trick
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        for f in [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1)] {
            for _ in 0..30 {
                let c = sample::random_code(&f, 7, 3, &mut rng);
                let q = f.q();
                let mut best = c.n();
                let total = q.pow(c.k() as u32);
                for msg_id in 1..total {
                    let mut msg = Vec::with_capacity(c.k());
                    let mut v = msg_id;
                    for _ in 0..c.k() {
                        msg.push(f.element(v % q).unwrap());
                        v /= q;
                    }
                    let mut word = vec![FieldElement::ZERO; c.n()];
                    for (i, &m) in msg.iter().enumerate() {
                        for (w, &g) in word.iter_mut().zip(c.generator().row(i)) {
                            *w = f.add(*w, f.mul(m, g));
                        }
                    }
                    let wt = word.iter().filter(|e| !e.is_zero()).count();
                    best = best.min(wt);
                }
                assert_eq!(c.min_distance(1 << 26).unwrap(), best);
            }
        }
    }

    #[test]
    fn star_scale_examples() {
        let f4 = gf(2, 2);
        let c = code(&f4, &[&[1, 1]]);
        let ones = vec![FieldElement::ONE; 2];
        assert_eq!(c.star_scale(&ones).unwrap(), c);

        let alpha = f4.element(2).unwrap();
        let x = vec![alpha, FieldElement::ONE];
        let scaled = c.star_scale(&x).unwrap();
        // <(a,1)> normalizes to <(1, a^-1)> = <(1, a^2)>
        assert_eq!(scaled, code(&f4, &[&[1, 3]]));

        let xinv: Vec<FieldElement> = x.iter().map(|&e| f4.inv(e).unwrap()).collect();
        assert_eq!(scaled.star_scale(&xinv).unwrap(), c);

        let bad = vec![FieldElement::ONE, FieldElement::ZERO];
        assert_eq!(
            c.star_scale(&bad).unwrap_err(),
            CodeError::ZeroEntry { index: 1 }
        );
    }

    #[test]
    fn star_scale_dual_identity() {
        // parity check of x*C is x^{-1}*H, i.e. dual(x*C) = x^{-1}*dual(C)
        let mut rng = ChaCha8Rng::seed_from_u64(26);
        for f in [gf(3, 1), gf(2, 2), gf(5, 1), gf(3, 2)] {
            for _ in 0..40 {
                let c = sample::random_code(&f, 6, 3, &mut rng);
                if c.k() == c.n() {
                    continue;
                }
                let x = sample::random_nonzero_vec(&f, c.n(), &mut rng);
                let xinv: Vec<FieldElement> =
                    x.iter().map(|&e| f.inv(e).unwrap()).collect();
                assert_eq!(
                    c.star_scale(&x).unwrap().dual(),
                    c.dual().star_scale(&xinv).unwrap()
                );
            }
        }
    }

    #[test]
    fn monomial_transform_algebra() {
        let f = gf(2, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(27);
        for _ in 0..50 {
            let n = rng.random_range(1..=8);
            let s = sample::random_monomial(&f, n, &mut rng);
            let t = sample::random_monomial(&f, n, &mut rng);
            let v = sample::random_nonzero_vec(&f, n, &mut rng);
            let st = s.compose(&t).unwrap();
            assert_eq!(st.apply(&v), s.apply(&t.apply(&v)));
            let id = MonomialTransform::identity(&f, n);
            assert_eq!(s.compose(&s.inverse()).unwrap(), id);
            assert_eq!(s.inverse().compose(&s).unwrap(), id);
        }
    }

    #[test]
    fn monomial_transform_validation() {
        let f = gf(3, 1);
        let two = f.element(2).unwrap();
        assert!(MonomialTransform::new(&f, vec![0, 1], vec![two, two]).is_ok());
        assert!(matches!(
            MonomialTransform::new(&f, vec![0, 0], vec![two, two]).unwrap_err(),
            CodeError::InvalidParameters(_)
        ));
        assert_eq!(
            MonomialTransform::new(&f, vec![0, 1], vec![two, FieldElement::ZERO])
                .unwrap_err(),
            CodeError::ZeroEntry { index: 1 }
        );
        assert_eq!(
            MonomialTransform::new(&f, vec![0], vec![two, two]).unwrap_err(),
            CodeError::DimensionMismatch
        );
    }

    #[test]
    fn apply_monomial_examples() {
        let c2 = c2_gf2();
        let f = gf(2, 1);
        let id = MonomialTransform::identity(&f, 6);
        assert_eq!(c2.apply_monomial(&id).unwrap(), c2);

        // pure permutations preserve the hull dimension
        let perm = MonomialTransform::new(
            &f,
            vec![3, 0, 5, 1, 4, 2],
            vec![FieldElement::ONE; 6],
        )
        .unwrap();
        let moved = c2.apply_monomial(&perm).unwrap();
        assert_eq!(moved.hull(HullFlavor::Euclidean).unwrap().h, 1);

        let small = MonomialTransform::identity(&f, 3);
        assert_eq!(
            c2.apply_monomial(&small).unwrap_err(),
            CodeError::DimensionMismatch
        );
        let f3 = gf(3, 1);
        let other = MonomialTransform::identity(&f3, 6);
        assert_eq!(
            c2.apply_monomial(&other).unwrap_err(),
            CodeError::FieldMismatch
        );
    }

    #[test]
    fn hull_dimension_invariances() {
        let mut rng = ChaCha8Rng::seed_from_u64(28);
        // permutations: every field
        for f in [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1), gf(3, 2)] {
            for _ in 0..30 {
                let c = sample::random_code(&f, 8, 4, &mut rng);
                let h = c.hull(HullFlavor::Euclidean).unwrap().h;
                let perm = sample::random_permutation(c.n(), &mut rng);
                let t =
                    MonomialTransform::new(&f, perm, vec![FieldElement::ONE; c.n()]).unwrap();
                let moved = c.apply_monomial(&t).unwrap();
                assert_eq!(moved.hull(HullFlavor::Euclidean).unwrap().h, h);
            }
        }
        // full monomial transforms: binary and ternary only
        for f in [gf(2, 1), gf(3, 1)] {
            for _ in 0..60 {
                let c = sample::random_code(&f, 9, 4, &mut rng);
                let h = c.hull(HullFlavor::Euclidean).unwrap().h;
                let t = sample::random_monomial(&f, c.n(), &mut rng);
                let moved = c.apply_monomial(&t).unwrap();
                assert_eq!(moved.hull(HullFlavor::Euclidean).unwrap().h, h);
            }
        }
    }

    #[test]
    fn systematic_form_examples() {
        let c2 = c2_gf2();
        let (b, perm) = c2.systematic_form();
        assert_eq!(perm, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(b, MatrixFq::from_values(&gf(2, 1), &vec![vec![1; 3]; 3]).unwrap());

        let f = gf(2, 1);
        let c = code(&f, &[&[0, 1, 1], &[0, 0, 1]]);
        let (_, perm) = c.systematic_form();
        assert_eq!(perm, vec![1, 2, 0]);

        // permuted generator really is (I_k | B)
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for f in [gf(2, 1), gf(3, 1), gf(2, 2)] {
            for _ in 0..40 {
                let c = sample::random_code(&f, 7, 4, &mut rng);
                let (b, perm) = c.systematic_form();
                let arranged = c.generator().select_columns(&perm);
                let left: Vec<usize> = (0..c.k()).collect();
                let right: Vec<usize> = (c.k()..c.n()).collect();
                assert_eq!(
                    arranged.select_columns(&left),
                    MatrixFq::identity(&f, c.k())
                );
                assert_eq!(arranged.select_columns(&right), b);
            }
        }
    }
}

//! Exact arithmetic in finite fields GF(p^m).
//!
//! A [`FieldSpec`] fixes the characteristic `p`, the extension degree `m`
//! and (for `m >= 2`) a monic irreducible modulus over GF(p). Elements are
//! carried as their canonical integer encoding: the element
//! `sum c_i * alpha^i` (with `alpha` a root of the modulus and digits
//! `c_i` in `[0, p)`) is encoded as the integer `sum c_i * p^i`. The
//! encoding is a bijection onto `[0, q)`; `0` and `1` encode the additive
//! and multiplicative identities.
//!
//! For square `q` the field carries the conjugation `x -> x^sqrt(q)`,
//! which is an involutive automorphism fixing exactly GF(sqrt(q)).

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest field order for which log/antilog multiplication tables are
/// precomputed. Larger fields fall back to direct polynomial reduction;
/// the two paths are value-identical.
const TABLE_LIMIT: u64 = 1024;

/// Built-in moduli: the lexicographically smallest (by canonical integer
/// encoding of the non-leading coefficients) monic irreducible polynomial
/// of degree m over GF(p), for every prime power p^m <= 1024 with m >= 2.
/// Coefficient lists are low-degree-first and include the leading 1.
/// Every entry is re-validated by `is_irreducible` when first used.
const MODULUS_TABLE: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 1, 0, 0, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 1, 0, 0, 0, 0, 1]),
    (5, 2, &[2, 0, 1]),
    (5, 3, &[1, 1, 0, 1]),
    (5, 4, &[2, 0, 0, 0, 1]),
    (7, 2, &[1, 0, 1]),
    (7, 3, &[2, 0, 0, 1]),
    (11, 2, &[1, 0, 1]),
    (13, 2, &[2, 0, 1]),
    (17, 2, &[3, 0, 1]),
    (19, 2, &[1, 0, 1]),
    (23, 2, &[1, 0, 1]),
    (29, 2, &[2, 0, 1]),
    (31, 2, &[1, 0, 1]),
];

/// Errors raised by field construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("modulus degree {got} does not match extension degree {expected}")]
    DegreeMismatch { expected: u32, got: u32 },
    #[error("no built-in modulus for GF({p}^{m}); supply one explicitly")]
    NoTableEntry { p: u64, m: u32 },
    #[error("field order p^m does not fit the supported range")]
    OrderOverflow,
    #[error("value {value} is not an element encoding of a field of order {q}")]
    NotAnElement { value: u64, q: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("GF({q}) has no conjugation: the order is not a square")]
    NotSquareField { q: u64 },
    #[error("GF({to}) does not contain GF({from}) as a subfield")]
    NoEmbedding { from: u64, to: u64 },
}

/// A field element, stored as its canonical integer encoding in `[0, q)`.
///
/// Elements do not carry their field; arithmetic goes through the owning
/// [`FieldSpec`]. Use [`FieldSpec::element`] to construct a validated
/// element from an encoding.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// The canonical integer encoding.
    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct FieldInner {
    p: u64,
    m: u32,
    q: u64,
    /// Low-degree-first coefficients of the monic modulus; `None` iff `m == 1`.
    modulus: Option<Vec<u64>>,
    /// Discrete logs base the smallest generator; `log[a]` defined for `a >= 1`.
    /// Present only when `q <= TABLE_LIMIT`.
    log: Option<Vec<u32>>,
    /// `exp[i] = g^i` for `i` in `[0, 2(q-1))`, doubled so a single add of
    /// two logs never needs reduction.
    exp: Option<Vec<u64>>,
}

/// A finite field GF(p^m). Cheap to clone and freely shareable across
/// threads; all arithmetic is pure.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<FieldInner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p
            && self.inner.m == other.inner.m
            && self.inner.modulus == other.inner.modulus
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.q)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.q)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

// ---- dense polynomial arithmetic over the prime field GF(p) ----
// Coefficient vectors are low-degree-first with no trailing zeros.

fn ptrim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn pinv_mod(a: u64, p: u64) -> u64 {
    // p prime, a != 0: Fermat.
    mod_pow(a, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn prem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    ptrim(&mut a);
    let binv = pinv_mod(*b.last().unwrap(), p);
    while a.len() >= b.len() {
        let c = *a.last().unwrap() * binv % p;
        let s = a.len() - b.len();
        for (i, &bi) in b.iter().enumerate() {
            a[i + s] = (a[i + s] + p - c * bi % p) % p;
        }
        ptrim(&mut a);
        if a.is_empty() {
            break;
        }
    }
    a
}

fn pmulrem(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + ai * bj) % p;
        }
    }
    prem(&r, f, p)
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    ptrim(&mut a);
    ptrim(&mut b);
    while !b.is_empty() {
        let r = prem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Tests whether a monic polynomial over GF(p) is irreducible.
///
/// Uses the distinct-degree criterion: a monic polynomial of degree `m`
/// is reducible exactly when it shares a factor with `x^(p^i) - x` for
/// some `i <= m/2`, since that product collects every irreducible
/// polynomial of degree dividing `i`. The power `x^(p^i)` is computed by
/// repeated squaring modulo the candidate.
pub fn is_irreducible(poly: &[u64], p: u64) -> Result<bool, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    let mut f = poly.to_vec();
    ptrim(&mut f);
    if f.len() < 2 {
        return Err(FieldError::DegreeMismatch { expected: 1, got: 0 });
    }
    if *f.last().unwrap() != 1 {
        return Err(FieldError::NotMonic);
    }
    if f.iter().any(|&c| c >= p) {
        return Err(FieldError::NotAnElement {
            value: *f.iter().find(|&&c| c >= p).unwrap(),
            q: p,
        });
    }
    let m = f.len() - 1;
    for i in 1..=m / 2 {
        // x^(p^i) mod f by square-and-multiply on the exponent p^i
        let mut e: u128 = 1;
        for _ in 0..i {
            e *= p as u128;
        }
        let mut result = vec![1u64];
        let mut base = prem(&[0, 1], &f, p);
        while e > 0 {
            if e & 1 == 1 {
                result = pmulrem(&result, &base, &f, p);
            }
            base = pmulrem(&base, &base, &f, p);
            e >>= 1;
        }
        // g = x^(p^i) - x mod f
        let mut g = result;
        while g.len() < 2 {
            g.push(0);
        }
        g[1] = (g[1] + p - 1) % p;
        ptrim(&mut g);
        if g.is_empty() {
            return Ok(false);
        }
        if pgcd(&f, &g, p).len() > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Looks up the built-in modulus for GF(p^m), if the table covers it.
pub fn modulus_table_entry(p: u64, m: u32) -> Option<&'static [u64]> {
    MODULUS_TABLE
        .iter()
        .find(|&&(tp, tm, _)| tp == p && tm == m)
        .map(|&(_, _, coeffs)| coeffs)
}

impl FieldSpec {
    /// Constructs GF(p^m).
    ///
    /// For `m == 1` no modulus is accepted. For `m >= 2` a monic
    /// irreducible modulus of degree `m` (low-degree-first coefficients)
    /// may be supplied; when omitted, the built-in table provides one for
    /// every prime power up to 1024. Supplied and table moduli are both
    /// checked irreducible.
    pub fn new(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<FieldSpec, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::DegreeMismatch { expected: 1, got: 0 });
        }
        let mut q: u64 = 1;
        for _ in 0..m {
            q = q.checked_mul(p).ok_or(FieldError::OrderOverflow)?;
        }
        if q > (1 << 32) {
            return Err(FieldError::OrderOverflow);
        }
        let modulus = match (m, modulus) {
            (1, None) => None,
            (1, Some(coeffs)) => {
                return Err(FieldError::DegreeMismatch {
                    expected: 0,
                    got: coeffs.len().saturating_sub(1) as u32,
                })
            }
            (_, Some(coeffs)) => {
                let mut v = coeffs.to_vec();
                ptrim(&mut v);
                if v.len() as u32 != m + 1 {
                    return Err(FieldError::DegreeMismatch {
                        expected: m,
                        got: (v.len() as u32).saturating_sub(1),
                    });
                }
                if v.iter().any(|&c| c >= p) {
                    return Err(FieldError::NotAnElement {
                        value: *v.iter().find(|&&c| c >= p).unwrap(),
                        q: p,
                    });
                }
                if !is_irreducible(&v, p)? {
                    return Err(FieldError::ReducibleModulus { p });
                }
                Some(v)
            }
            (_, None) => {
                let coeffs =
                    modulus_table_entry(p, m).ok_or(FieldError::NoTableEntry { p, m })?;
                if !is_irreducible(coeffs, p)? {
                    // table corruption, not reachable with the shipped table
                    return Err(FieldError::ReducibleModulus { p });
                }
                Some(coeffs.to_vec())
            }
        };
        let mut inner = FieldInner {
            p,
            m,
            q,
            modulus,
            log: None,
            exp: None,
        };
        if q <= TABLE_LIMIT {
            let (log, exp) = build_log_tables(&inner);
            inner.log = Some(log);
            inner.exp = Some(exp);
        }
        Ok(FieldSpec {
            inner: Arc::new(inner),
        })
    }

    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<FieldSpec, FieldError> {
        FieldSpec::new(p, 1, None)
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn m(&self) -> u32 {
        self.inner.m
    }

    /// The field order q = p^m.
    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// Low-degree-first modulus coefficients; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u64]> {
        self.inner.modulus.as_deref()
    }

    /// `sqrt(q)` when the order is a square, i.e. the extension degree is even.
    pub fn sqrt_q(&self) -> Option<u64> {
        if self.inner.m % 2 == 0 {
            let mut r: u64 = 1;
            for _ in 0..self.inner.m / 2 {
                r *= self.inner.p;
            }
            Some(r)
        } else {
            None
        }
    }

    pub fn has_square_order(&self) -> bool {
        self.inner.m % 2 == 0
    }

    /// Validates an encoding and wraps it as an element.
    pub fn element(&self, value: u64) -> Result<FieldElement, FieldError> {
        if value < self.inner.q {
            Ok(FieldElement(value))
        } else {
            Err(FieldError::NotAnElement {
                value,
                q: self.inner.q,
            })
        }
    }

    /// All q elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.q).map(FieldElement)
    }

    /// All q-1 nonzero elements in encoding order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.inner.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let inner = &*self.inner;
        debug_assert!(a.0 < inner.q && b.0 < inner.q);
        if inner.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if inner.m == 1 {
            return FieldElement((a.0 + b.0) % inner.p);
        }
        let (p, mut av, mut bv, mut out, mut scale) = (inner.p, a.0, b.0, 0u64, 1u64);
        for _ in 0..inner.m {
            out += (av % p + bv % p) % p * scale;
            av /= p;
            bv /= p;
            scale *= p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let inner = &*self.inner;
        if inner.p == 2 {
            return a;
        }
        if inner.m == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { inner.p - a.0 });
        }
        let (p, mut av, mut out, mut scale) = (inner.p, a.0, 0u64, 1u64);
        for _ in 0..inner.m {
            let d = av % p;
            out += if d == 0 { 0 } else { p - d } * scale;
            av /= p;
            scale *= p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.inner;
        if let (Some(log), Some(exp)) = (&inner.log, &inner.exp) {
            return FieldElement(exp[(log[a.0 as usize] + log[b.0 as usize]) as usize]);
        }
        self.mul_direct(a, b)
    }

    /// Multiplication by polynomial product and reduction, bypassing the
    /// log tables. Value-identical to `mul`.
    fn mul_direct(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let inner = &*self.inner;
        let p = inner.p;
        if inner.m == 1 {
            return FieldElement(a.0 * b.0 % p);
        }
        let m = inner.m as usize;
        let modulus = inner.modulus.as_ref().unwrap();
        let mut av = vec![0u64; m];
        let mut bv = vec![0u64; m];
        let (mut x, mut y) = (a.0, b.0);
        for i in 0..m {
            av[i] = x % p;
            bv[i] = y % p;
            x /= p;
            y /= p;
        }
        let mut prod = vec![0u64; 2 * m - 1];
        for i in 0..m {
            if av[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + av[i] * bv[j]) % p;
            }
        }
        // reduce modulo the monic modulus, top coefficient down
        for i in (m..2 * m - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &fj) in modulus.iter().enumerate().take(m) {
                prod[i - m + j] = (prod[i - m + j] + p - c * fj % p) % p;
            }
        }
        let mut out = 0u64;
        for i in (0..m).rev() {
            out = out * p + prod[i];
        }
        FieldElement(out)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let inner = &*self.inner;
        if let (Some(log), Some(exp)) = (&inner.log, &inner.exp) {
            let ord = inner.q - 1;
            let l = log[a.0 as usize] as u64;
            return Ok(FieldElement(exp[((ord - l) % ord) as usize]));
        }
        Ok(self.pow(a, inner.q - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The conjugate `a^sqrt(q)` on fields of square order.
    ///
    /// Applying it twice is the identity, and the fixed elements are
    /// exactly the subfield GF(sqrt(q)).
    pub fn conjugate(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        let s = self
            .sqrt_q()
            .ok_or(FieldError::NotSquareField { q: self.inner.q })?;
        Ok(self.pow(a, s))
    }
}

/// The canonical embedding of GF(q) into GF(q^t).
///
/// Exists whenever both fields share the characteristic and the base
/// degree divides the extension degree. The base generator `alpha` maps
/// to the smallest (by encoding) root of the base modulus inside the
/// extension, which pins the embedding down deterministically; prime
/// bases embed as the constants `0..p`.
#[derive(Debug, Clone)]
pub struct SubfieldEmbedding {
    base: FieldSpec,
    ext: FieldSpec,
    /// image of the base generator; unused (ONE) for prime bases
    beta: FieldElement,
}

impl SubfieldEmbedding {
    pub fn new(base: &FieldSpec, ext: &FieldSpec) -> Result<SubfieldEmbedding, FieldError> {
        let incompatible = FieldError::NoEmbedding {
            from: base.q(),
            to: ext.q(),
        };
        if base.p() != ext.p() || ext.m() % base.m() != 0 {
            return Err(incompatible);
        }
        let beta = if base.m() == 1 {
            FieldElement::ONE
        } else {
            let modulus = base.modulus().unwrap();
            ext.elements()
                .find(|&cand| {
                    // evaluate the base modulus at cand inside the extension
                    let mut acc = FieldElement::ZERO;
                    for &c in modulus.iter().rev() {
                        acc = ext.add(ext.mul(acc, cand), FieldElement(c));
                    }
                    acc.is_zero()
                })
                .ok_or(incompatible)?
        };
        Ok(SubfieldEmbedding {
            base: base.clone(),
            ext: ext.clone(),
            beta,
        })
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn ext(&self) -> &FieldSpec {
        &self.ext
    }

    /// Image of a base element in the extension.
    pub fn map(&self, a: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.base.q());
        if self.base.m() == 1 {
            // prime-field constants keep their encoding
            return a;
        }
        let p = self.base.p();
        let mut digits = Vec::with_capacity(self.base.m() as usize);
        let mut v = a.0;
        for _ in 0..self.base.m() {
            digits.push(v % p);
            v /= p;
        }
        let mut acc = FieldElement::ZERO;
        for &c in digits.iter().rev() {
            acc = self.ext.add(self.ext.mul(acc, self.beta), FieldElement(c));
        }
        acc
    }
}

fn build_log_tables(inner: &FieldInner) -> (Vec<u32>, Vec<u64>) {
    let q = inner.q;
    let ord = q - 1;
    // distinct prime factors of q-1
    let mut factors = Vec::new();
    let mut n = ord;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    let field = FieldSpec {
        inner: Arc::new(FieldInner {
            p: inner.p,
            m: inner.m,
            q: inner.q,
            modulus: inner.modulus.clone(),
            log: None,
            exp: None,
        }),
    };
    // smallest generator by encoding
    let mut gen = FieldElement(1);
    'search: for v in 1..q {
        let g = FieldElement(v);
        for &f in &factors {
            if field.pow(g, ord / f) == FieldElement::ONE {
                continue 'search;
            }
        }
        gen = g;
        break;
    }
    let mut log = vec![0u32; q as usize];
    let mut exp = vec![0u64; (2 * ord.max(1)) as usize];
    let mut cur = FieldElement::ONE;
    for i in 0..ord {
        exp[i as usize] = cur.0;
        exp[(i + ord) as usize] = cur.0;
        log[cur.0 as usize] = i as u32;
        cur = field.mul_direct(cur, gen);
    }
    (log, exp)
}

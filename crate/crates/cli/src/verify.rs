//! Golden verification suite over the two built-in reference codes:
//! C1 = (I | I) pairs three coordinates with their repeats, C2 = (I | J)
//! appends the all-ones tail. They share a weight enumerator but have
//! hull dimensions 3 and 1, so they exercise every identity the tool
//! rests on.

use crate::error::CliError;
use hullkit::code::{HullFlavor, LinearCode};
use hullkit::enumerate::{
    binary_hull_invariant, ext_weight_enumerator, reduced_ext_enumerator, weight_enumerator,
};
use hullkit::gf::FieldSpec;
use hullkit::matfq::MatrixFq;
use hullkit::poly::MultiPoly;
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

#[derive(Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyOut {
    pub checks: Vec<Check>,
    pub passed: usize,
    pub total: usize,
}

fn reference_pair() -> (LinearCode, LinearCode) {
    let f = FieldSpec::new(2, 1, None).expect("GF(2)");
    let c1 = MatrixFq::from_values(
        &f,
        &[
            vec![1, 0, 0, 1, 0, 0],
            vec![0, 1, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0, 1],
        ],
    )
    .expect("C1 generator");
    let c2 = MatrixFq::from_values(
        &f,
        &[
            vec![1, 0, 0, 1, 1, 1],
            vec![0, 1, 0, 1, 1, 1],
            vec![0, 0, 1, 1, 1, 1],
        ],
    )
    .expect("C2 generator");
    (
        LinearCode::new(&c1).expect("C1"),
        LinearCode::new(&c2).expect("C2"),
    )
}

fn golden_reduced_c1() -> MultiPoly {
    // 3X^4Y^2 + 3(T-1)X^2Y^4 + (T-1)^2 Y^6
    let tm1 = &MultiPoly::t() - &MultiPoly::one();
    let a = MultiPoly::monomial(4, 2, 0, BigInt::from(3));
    let b = &MultiPoly::monomial(2, 4, 0, BigInt::from(3)) * &tm1;
    let c = &MultiPoly::monomial(0, 6, 0, BigInt::one()) * &tm1.pow(2);
    &(&a + &b) + &c
}

fn golden_reduced_c2() -> MultiPoly {
    // 3X^4Y^2 + (T-2)X^3Y^3 + 3X^2Y^4 + 3(T-2)XY^5 + (T^2-3T+3)Y^6
    let tm2 = &MultiPoly::t() - &MultiPoly::constant_i64(2);
    let quad = &(&MultiPoly::t().pow(2)
        - &(&MultiPoly::t() * &MultiPoly::constant_i64(3)))
        + &MultiPoly::constant_i64(3);
    let mut acc = MultiPoly::monomial(4, 2, 0, BigInt::from(3));
    acc = &acc + &(&MultiPoly::monomial(3, 3, 0, BigInt::one()) * &tm2);
    acc = &acc + &MultiPoly::monomial(2, 4, 0, BigInt::from(3));
    acc = &acc + &(&MultiPoly::monomial(1, 5, 0, BigInt::from(3)) * &tm2);
    acc = &acc + &(&MultiPoly::monomial(0, 6, 0, BigInt::one()) * &quad);
    acc
}

pub fn run_checks(budget_codewords: u64, budget_subsets: u64) -> Result<VerifyOut, CliError> {
    let (c1, c2) = reference_pair();
    let mut checks = Vec::new();

    let h1 = c1.hull(HullFlavor::Euclidean)?;
    checks.push(Check {
        name: "hull dimension of C1 is 3",
        pass: h1.h == 3,
        detail: format!("h = {}", h1.h),
    });

    let h2 = c2.hull(HullFlavor::Euclidean)?;
    let basis_ok = h2.h == 1
        && h2.hull_basis.rows() == 1
        && h2.hull_basis.row(0).iter().all(|e| e.value() == 1);
    checks.push(Check {
        name: "hull dimension of C2 is 1 with all-ones basis",
        pass: basis_ok,
        detail: format!(
            "h = {}, basis rows = {}",
            h2.h,
            h2.hull_basis.rows()
        ),
    });

    let golden_w = "X^6 + 3*X^4*Y^2 + 3*X^2*Y^4 + Y^6";
    let w1 = weight_enumerator(&c1, budget_codewords)?;
    let w2 = weight_enumerator(&c2, budget_codewords)?;
    checks.push(Check {
        name: "C1 and C2 share the weight enumerator",
        pass: w1.to_string() == golden_w && w2 == w1,
        detail: w1.to_string(),
    });

    let e1 = ext_weight_enumerator(&c1, budget_subsets)?;
    let r1 = reduced_ext_enumerator(&e1)?;
    checks.push(Check {
        name: "reduced extended enumerator of C1",
        pass: r1 == golden_reduced_c1(),
        detail: r1.to_string(),
    });

    let e2 = ext_weight_enumerator(&c2, budget_subsets)?;
    let r2 = reduced_ext_enumerator(&e2)?;
    checks.push(Check {
        name: "reduced extended enumerator of C2",
        pass: r2 == golden_reduced_c2(),
        detail: r2.to_string(),
    });

    let i1 = binary_hull_invariant(&c1, budget_subsets)?;
    let i2 = binary_hull_invariant(&c2, budget_subsets)?;
    let inv_ok = i1.value.magnitude() == BigInt::from(64).magnitude()
        && i1.h == 3
        && i2.value.magnitude() == BigInt::from(16).magnitude()
        && i2.h == 1;
    checks.push(Check {
        name: "signed evaluations W(1,-1,4) encode h = 3 and h = 1",
        pass: inv_ok,
        detail: format!("C1: {}, C2: {}", i1.value, i2.value),
    });

    let passed = checks.iter().filter(|c| c.pass).count();
    let total = checks.len();
    Ok(VerifyOut {
        checks,
        passed,
        total,
    })
}

pub fn verify_cmd(json: bool, budget_codewords: u64, budget_subsets: u64) -> Result<(), CliError> {
    let out = run_checks(budget_codewords, budget_subsets)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("report serializes")
        );
    } else {
        for c in &out.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            println!("[{tag}] {} ({})", c.name, c.detail);
        }
        println!("{}/{} checks passed", out.passed, out.total);
    }
    if out.passed != out.total {
        return Err(CliError::Internal(format!(
            "verification failed: {}/{} checks passed",
            out.passed, out.total
        )));
    }
    Ok(())
}

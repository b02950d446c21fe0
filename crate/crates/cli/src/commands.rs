//! Subcommand bodies: each builds a serializable report and prints it as
//! text or JSON.

use crate::codefile::CodeFile;
use crate::error::CliError;
use crate::gv;
use hullkit::code::{HullFlavor, LinearCode};
use hullkit::enumerate::{
    binary_hull_invariant, ext_weight_enumerator, ext_weight_enumerator_oracle,
    ternary_hull_invariant, tutte, weight_enumerator,
};
use hullkit::gf::{FieldElement, FieldSpec};
use hullkit::lcdize::{hlcdize, lcdize, LcdizeResult, Strategy};
use serde::Serialize;
use std::path::Path;

pub struct Ctx {
    pub json: bool,
    pub budget_codewords: u64,
    pub budget_subsets: u64,
}

impl Ctx {
    fn emit<T: Serialize>(&self, report: &T, text: String) {
        if self.json {
            println!(
                "{}",
                serde_json::to_string_pretty(report).expect("report serializes")
            );
        } else {
            println!("{text}");
        }
    }
}

fn row_text(f: &FieldSpec, row: &[FieldElement]) -> String {
    if f.q() <= 10 {
        row.iter().map(|e| e.value().to_string()).collect()
    } else {
        row.iter()
            .map(|e| e.value().to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn row_values(row: &[FieldElement]) -> Vec<u64> {
    row.iter().map(|e| e.value()).collect()
}

fn load(file: &Path) -> Result<(LinearCode, Option<String>, bool), CliError> {
    let cf = CodeFile::read(file)?;
    let name = cf.name.clone();
    let (code, dropped) = cf.to_code()?;
    Ok((code, name, dropped))
}

fn summary(code: &LinearCode, name: &Option<String>, dropped: bool) -> String {
    let label = name
        .as_ref()
        .map(|n| format!(" \"{n}\""))
        .unwrap_or_default();
    let mut s = format!(
        "code{label}: [{},{}] over GF({})",
        code.n(),
        code.k(),
        code.field().q()
    );
    if dropped {
        s.push_str("\nnote: dependent generator rows dropped");
    }
    s
}

#[derive(Serialize)]
struct HullOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    q: u64,
    n: usize,
    k: usize,
    flavor: &'static str,
    h: usize,
    gram_rank: usize,
    lcd: bool,
    hull_basis: Vec<Vec<u64>>,
}

pub fn hull(ctx: &Ctx, file: &Path, hermitian: bool) -> Result<(), CliError> {
    let (code, name, dropped) = load(file)?;
    let flavor = if hermitian {
        HullFlavor::Hermitian
    } else {
        HullFlavor::Euclidean
    };
    let report = code.hull(flavor)?;
    let f = code.field();
    let basis: Vec<&[FieldElement]> = (0..report.h).map(|i| report.hull_basis.row(i)).collect();
    let mut text = summary(&code, &name, dropped);
    text.push_str(&format!("\nh = {}", report.h));
    text.push_str(&format!("\ngram rank = {}", report.gram_rank));
    if report.h == 0 {
        text.push_str("\nhull basis: (trivial)");
    } else {
        let rows: Vec<String> = basis.iter().map(|r| row_text(f, r)).collect();
        text.push_str(&format!("\nhull basis: {}", rows.join(", ")));
    }
    let verdict = match (hermitian, report.is_lcd) {
        (false, true) => "LCD",
        (false, false) => "not LCD",
        (true, true) => "Hermitian LCD",
        (true, false) => "not Hermitian LCD",
    };
    text.push('\n');
    text.push_str(verdict);
    let out = HullOut {
        name,
        q: f.q(),
        n: code.n(),
        k: code.k(),
        flavor: if hermitian { "hermitian" } else { "euclidean" },
        h: report.h,
        gram_rank: report.gram_rank,
        lcd: report.is_lcd,
        hull_basis: basis.iter().map(|r| row_values(r)).collect(),
    };
    ctx.emit(&out, text);
    Ok(())
}

#[derive(Serialize)]
struct PolyOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    q: u64,
    n: usize,
    k: usize,
    polynomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<&'static str>,
}

pub fn wenum(ctx: &Ctx, file: &Path) -> Result<(), CliError> {
    let (code, name, dropped) = load(file)?;
    let w = weight_enumerator(&code, ctx.budget_codewords)?;
    let text = format!(
        "{}\nW(X,Y) = {w}",
        summary(&code, &name, dropped)
    );
    let out = PolyOut {
        name,
        q: code.field().q(),
        n: code.n(),
        k: code.k(),
        polynomial: w.to_string(),
        oracle: None,
    };
    ctx.emit(&out, text);
    Ok(())
}

pub fn extwenum(ctx: &Ctx, file: &Path, oracle: bool) -> Result<(), CliError> {
    let (code, name, dropped) = load(file)?;
    let w = ext_weight_enumerator(&code, ctx.budget_subsets)?;
    let mut oracle_note = None;
    if oracle {
        let check = ext_weight_enumerator_oracle(&code, ctx.budget_codewords)?;
        if check != w {
            return Err(CliError::Internal(
                "subset-rank path and extension-field oracle disagree".into(),
            ));
        }
        oracle_note = Some("agree");
    }
    let mut text = format!("{}\nW(X,Y,T) = {w}", summary(&code, &name, dropped));
    if oracle_note.is_some() {
        text.push_str("\noracle: agree (extension-field interpolation)");
    }
    let out = PolyOut {
        name,
        q: code.field().q(),
        n: code.n(),
        k: code.k(),
        polynomial: w.to_string(),
        oracle: oracle_note,
    };
    ctx.emit(&out, text);
    Ok(())
}

pub fn tutte_cmd(ctx: &Ctx, file: &Path) -> Result<(), CliError> {
    let (code, name, dropped) = load(file)?;
    let t = tutte(&code, ctx.budget_subsets)?;
    let text = format!("{}\nt(X,Y) = {t}", summary(&code, &name, dropped));
    let out = PolyOut {
        name,
        q: code.field().q(),
        n: code.n(),
        k: code.k(),
        polynomial: t.to_string(),
        oracle: None,
    };
    ctx.emit(&out, text);
    Ok(())
}

#[derive(Serialize)]
struct InvariantOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    q: u64,
    n: usize,
    k: usize,
    kind: &'static str,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    norm: Option<String>,
    h: usize,
    hull_agrees: bool,
}

pub fn invariant(ctx: &Ctx, file: &Path) -> Result<(), CliError> {
    let (code, name, dropped) = load(file)?;
    let q = code.field().q();
    let direct_h = code.hull(HullFlavor::Euclidean)?.h;
    let (out, mut text) = match q {
        2 => {
            let inv = binary_hull_invariant(&code, ctx.budget_subsets)?;
            let text = format!(
                "{}\nW(1,-1,4) = {}\n|W(1,-1,4)| = 2^{}\nh = {}",
                summary(&code, &name, dropped),
                inv.value,
                code.k() + inv.h,
                inv.h
            );
            (
                InvariantOut {
                    name,
                    q,
                    n: code.n(),
                    k: code.k(),
                    kind: "binary",
                    value: inv.value.to_string(),
                    norm: None,
                    h: inv.h,
                    hull_agrees: inv.h == direct_h,
                },
                text,
            )
        }
        3 => {
            let inv = ternary_hull_invariant(&code, ctx.budget_codewords)?;
            let text = format!(
                "{}\nW(1,j) = {}\nN(W(1,j)) = {} = 3^{}\nh = {}",
                summary(&code, &name, dropped),
                inv.value,
                inv.norm,
                code.k() + inv.h,
                inv.h
            );
            (
                InvariantOut {
                    name,
                    q,
                    n: code.n(),
                    k: code.k(),
                    kind: "ternary",
                    value: inv.value.to_string(),
                    norm: Some(inv.norm.to_string()),
                    h: inv.h,
                    hull_agrees: inv.h == direct_h,
                },
                text,
            )
        }
        other => {
            return Err(CliError::Malformed(format!(
                "invariant requires GF(2) or GF(3), code is over GF({other})"
            )))
        }
    };
    if !out.hull_agrees {
        return Err(CliError::Internal(format!(
            "invariant h = {} disagrees with direct hull dimension {direct_h}",
            out.h
        )));
    }
    text.push_str("\nhull check: agree");
    ctx.emit(&out, text);
    Ok(())
}

#[derive(Serialize)]
struct MindistOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    q: u64,
    n: usize,
    k: usize,
    d: usize,
}

pub fn mindist(ctx: &Ctx, file: &Path) -> Result<(), CliError> {
    let (code, name, dropped) = load(file)?;
    let d = code.min_distance(ctx.budget_codewords)?;
    let text = format!("{}\nd = {d}", summary(&code, &name, dropped));
    let out = MindistOut {
        name,
        q: code.field().q(),
        n: code.n(),
        k: code.k(),
        d,
    };
    ctx.emit(&out, text);
    Ok(())
}

#[derive(Serialize)]
struct LcdizeOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    q: u64,
    n: usize,
    k: usize,
    hermitian: bool,
    already_lcd: bool,
    witness_x: Vec<u64>,
    perm: Vec<usize>,
    diag: Vec<u64>,
    result_generator: Vec<Vec<u64>>,
    evaluations: u64,
    strategy: String,
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    out: Option<String>,
}

pub fn lcdize_cmd(
    ctx: &Ctx,
    file: &Path,
    hermitian: bool,
    strategy: Strategy,
    out_path: Option<&Path>,
) -> Result<(), CliError> {
    let (code, name, dropped) = load(file)?;
    let r: LcdizeResult = if hermitian {
        hlcdize(&code, strategy)?
    } else {
        lcdize(&code, strategy)?
    };
    let f = code.field();
    let already = r.evaluations == 0;
    let strategy_text = match r.strategy {
        Strategy::Grid => "grid".to_string(),
        Strategy::Random { seed } => format!("random (seed = {seed}, grid fallback)"),
    };
    let mut text = summary(&code, &name, dropped);
    if already {
        text.push_str("\nalready LCD; identity transform returned");
    }
    text.push_str(&format!(
        "\nwitness x = [{}]",
        r.witness_x
            .iter()
            .map(|e| e.value().to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    text.push_str(&format!("\nperm = {:?}", r.transform.perm()));
    text.push_str(&format!(
        "\ndiag = [{}]",
        r.transform
            .diag()
            .iter()
            .map(|e| e.value().to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    text.push_str("\nresult generator:");
    let gen = r.result.generator();
    for i in 0..r.result.k() {
        text.push_str(&format!("\n  {}", row_text(f, gen.row(i))));
    }
    let verdict = if hermitian {
        "result is Hermitian LCD (verified)"
    } else {
        "result is LCD (verified)"
    };
    text.push('\n');
    text.push_str(verdict);
    text.push_str(&format!("\nevaluations = {}", r.evaluations));
    text.push_str(&format!("\nstrategy = {strategy_text}"));

    let mut written = None;
    if let Some(path) = out_path {
        let out_name = name.as_ref().map(|n| format!("{n} (LCD-ized)"));
        CodeFile::from_code(&r.result, out_name).write(path)?;
        text.push_str(&format!("\nwrote result to {}", path.display()));
        written = Some(path.display().to_string());
    }

    let out = LcdizeOut {
        name,
        q: f.q(),
        n: code.n(),
        k: code.k(),
        hermitian,
        already_lcd: already,
        witness_x: row_values(&r.witness_x),
        perm: r.transform.perm().to_vec(),
        diag: row_values(r.transform.diag()),
        result_generator: (0..r.result.k())
            .map(|i| row_values(r.result.generator().row(i)))
            .collect(),
        evaluations: r.evaluations,
        strategy: strategy_text,
        verified: true,
        out: written,
    };
    ctx.emit(&out, text);
    Ok(())
}

pub fn gv_cmd(ctx: &Ctx, n: u64, k: u64, d: u64, q: u64) -> Result<(), CliError> {
    let r = gv::gv_check(n, k, d, q)?;
    let text = if r.satisfied {
        format!("GV condition satisfied: {} < {}", r.lhs, r.rhs)
    } else {
        format!("GV condition not satisfied: {} >= {}", r.lhs, r.rhs)
    };
    ctx.emit(&r, text);
    Ok(())
}

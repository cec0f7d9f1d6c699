//! Command-line front end: classify character quadruples, replay the family
//! generator, and run the finite-model and differential-operator
//! verification harnesses.
//!
//! Exit codes: 0 success, 1 check failure, 2 parse error, 3 semantic error.
//! All randomness is seeded (`--seed`, ChaCha8); output is deterministic for
//! fixed inputs and seed. Nothing is written outside `--out`.

use clap::{Args, Parser, Subcommand};
use grasshom::chars::{parse_char, render_glchar, FieldSpec, Rat};
use grasshom::finite::{
    check_equivariance, compose_and_test_nonzero, enumerate_subspaces, gaussian_binomial,
    generator_names, incidence_matrix, radon_matrix, rank_exact, render_matrix, ExactMatrix,
};
use grasshom::homspace::{
    classification_json, classify, enumerate_family, for_each_grid_quadruple, human_line,
    inductive_classify, match_exceptional, sample_quadruples, FamilyKind, Quadruple,
};
use grasshom::weyl::{verify_adjoint_covariance, verify_exceptional, ArchField, Perturbation};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

const DEFAULT_SEED: u64 = 1729;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_PARSE_ERROR: u8 = 2;
const EXIT_SEMANTIC_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "grasshom",
    version,
    about = "Classify intertwining operators between line bundles on Grassmannians and verify the constructions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct FieldArgs {
    /// Base field: R, C, or NA (non-archimedean).
    #[arg(long)]
    field: String,
    /// Residue parameter for NA (prime or 4).
    #[arg(long)]
    q: Option<u32>,
    /// Unit tag group orders for NA, comma-separated (e.g. 2,4).
    #[arg(long, value_delimiter = ',')]
    tag_orders: Vec<u32>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify Hom(χ1×χ2, χ3×χ4) for four characters.
    Classify {
        #[command(flatten)]
        field: FieldArgs,
        /// Output mode: json or human.
        #[arg(long, default_value = "json")]
        output: String,
        /// The four characters, in the grammar (e.g. "[0,3)" or "2: nu^{1/2}*sgn").
        chars: Vec<String>,
    },
    /// Emit every family member at level n as JSON lines.
    Enumerate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: u32,
        /// Half-integer exponent grid bound (rational, e.g. 2 or 5/2).
        #[arg(long, default_value = "2")]
        exp_bound: String,
        #[arg(long, default_value_t = 2)]
        param_bound: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Stop after this many lines.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Check equivariance/rank of finite Grassmannian kernels over F_q.
    VerifyFinite {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
        /// Radon kernel Gr(a) -> Gr(b): two integers a b.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        radon: Option<Vec<u32>>,
        /// Incidence kernel with intersection dimension r: a b r.
        #[arg(long, num_args = 3, value_names = ["A", "B", "R"])]
        incidence: Option<Vec<u32>>,
        /// Sweep every admissible kernel for this (n, q).
        #[arg(long)]
        all: bool,
        /// Directory for matrix fixture files (text format).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify that det(∂)^i intertwines the big-cell actions.
    VerifyDiffop {
        /// R or C.
        #[arg(long)]
        field: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        i: u32,
        /// Antiholomorphic power (C only).
        #[arg(long, allow_negative_numbers = true)]
        j: Option<i64>,
        /// Negative control: bump one exponent (s1|s2|chi-s1|chi-s2|eta-s1|eta-s2|chi-t1|...).
        #[arg(long)]
        perturb: Option<String>,
    },
    /// Compare the direct and inductive classifiers on a grid and samples.
    CrossCheck {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, default_value = "2")]
        exp_bound: String,
        #[arg(long, default_value_t = 2)]
        param_bound: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Additional seeded random quadruples to check.
        #[arg(long, default_value_t = 0)]
        random_count: usize,
        /// Replay the family generator instead of the exhaustive grid.
        #[arg(long)]
        only_families: bool,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

fn parse_failure(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_PARSE_ERROR,
        msg: msg.into(),
    }
}

fn semantic_failure(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_SEMANTIC_ERROR,
        msg: msg.into(),
    }
}

fn check_failure(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_CHECK_FAILED,
        msg: msg.into(),
    }
}

fn resolve_field(args: &FieldArgs) -> Result<FieldSpec, Failure> {
    match args.field.to_ascii_uppercase().as_str() {
        "R" | "REAL" => Ok(FieldSpec::real()),
        "C" | "COMPLEX" => Ok(FieldSpec::complex()),
        "NA" | "NONARCH" | "QP" => {
            let q = args
                .q
                .ok_or_else(|| semantic_failure("--q is required for non-archimedean fields"))?;
            FieldSpec::non_arch(q, args.tag_orders.clone())
                .map_err(|e| semantic_failure(e.to_string()))
        }
        other => Err(parse_failure(format!(
            "unknown field `{other}` (expected R, C, or NA)"
        ))),
    }
}

fn parse_rat_arg(text: &str, what: &str) -> Result<Rat, Failure> {
    let mut parts = text.splitn(2, '/');
    let numer: i64 = parts
        .next()
        .unwrap()
        .trim()
        .parse()
        .map_err(|_| parse_failure(format!("bad {what}: `{text}`")))?;
    let denom: i64 = match parts.next() {
        Some(d) => d
            .trim()
            .parse()
            .map_err(|_| parse_failure(format!("bad {what}: `{text}`")))?,
        None => 1,
    };
    if denom == 0 {
        return Err(parse_failure(format!("bad {what}: zero denominator")));
    }
    Ok(Rat::new(numer, denom))
}

fn run_classify(field: &FieldArgs, output: &str, chars: &[String]) -> Result<Value, Failure> {
    let field = resolve_field(field)?;
    if chars.len() != 4 {
        return Err(semantic_failure(format!(
            "classify needs exactly 4 characters, got {}",
            chars.len()
        )));
    }
    let mut parsed = Vec::with_capacity(4);
    for text in chars {
        parsed
            .push(parse_char(text, &field).map_err(|e| parse_failure(format!("`{text}`: {e}")))?);
    }
    let [c1, c2, c3, c4]: [grasshom::chars::GLChar; 4] = parsed.try_into().unwrap();
    let x = Quadruple::new(field, c1, c2, c3, c4).map_err(|e| semantic_failure(e.to_string()))?;
    let result = classify(&x);
    match output {
        "human" => {
            println!("{}", human_line(&result));
            Ok(Value::Null)
        }
        "json" => Ok(classification_json(&result)),
        other => Err(parse_failure(format!(
            "unknown output mode `{other}` (expected json or human)"
        ))),
    }
}

fn run_enumerate(
    field: &FieldArgs,
    n: u32,
    exp_bound: &str,
    param_bound: u32,
    seed: u64,
    limit: Option<u64>,
) -> Result<(), Failure> {
    let field = resolve_field(field)?;
    if n == 0 {
        return Err(semantic_failure("--n must be at least 1"));
    }
    let bound = parse_rat_arg(exp_bound, "exponent bound")?;
    let mut emitted = 0u64;
    enumerate_family(&field, n, bound, param_bound, seed, |x, c| {
        if limit.is_some_and(|l| emitted >= l) {
            return;
        }
        emitted += 1;
        let line = json!({
            "classification": classification_json(c),
            "quadruple": x.c.iter().map(render_glchar).collect::<Vec<_>>(),
        });
        println!("{line}");
    });
    Ok(())
}

struct KernelReport {
    label: String,
    matrix: ExactMatrix,
    value: Value,
    equivariant: bool,
}

fn kernel_report(
    kind: &str,
    a: u32,
    b: u32,
    n: u32,
    q: u32,
    r: Option<u32>,
) -> Result<KernelReport, Failure> {
    let matrix = match r {
        None => radon_matrix(a, b, n, q),
        Some(r) => incidence_matrix(a, b, n, q, r),
    }
    .map_err(|e| semantic_failure(e.to_string()))?;
    let equivariant =
        check_equivariance(&matrix, a, b, n, q).map_err(|e| semantic_failure(e.to_string()))?;
    let rank = rank_exact(&matrix);
    let sums = matrix.row_sums();
    let constant_rowsum = sums.windows(2).all(|w| w[0] == w[1]);
    let mut obj = json!({
        "a": a,
        "b": b,
        "equivariant": equivariant,
        "kind": kind,
        "rank": rank,
        "rowsum": sums.first().map(|s| s.to_string()).unwrap_or_default(),
        "rowsum_constant": constant_rowsum,
    });
    if let Some(r) = r {
        obj["r"] = json!(r);
    }
    let label = match r {
        None => format!("{kind}_{a}_{b}_{n}_{q}"),
        Some(r) => format!("{kind}_{a}_{b}_{n}_{q}_r{r}"),
    };
    Ok(KernelReport {
        label,
        matrix,
        value: obj,
        equivariant,
    })
}

fn run_verify_finite(
    n: u32,
    q: u32,
    radon: Option<&[u32]>,
    incidence: Option<&[u32]>,
    all: bool,
    out: Option<&PathBuf>,
) -> Result<Value, Failure> {
    let mut kernels: Vec<KernelReport> = Vec::new();
    if let Some(ab) = radon {
        kernels.push(kernel_report("radon", ab[0], ab[1], n, q, None)?);
    }
    if let Some(abr) = incidence {
        kernels.push(kernel_report(
            "incidence",
            abr[0],
            abr[1],
            n,
            q,
            Some(abr[2]),
        )?);
    }
    if kernels.is_empty() && !all {
        return Err(semantic_failure(
            "nothing to verify: pass --radon, --incidence, or --all",
        ));
    }
    let mut counts = Vec::new();
    if all {
        for d in 0..=n {
            let subs =
                enumerate_subspaces(d, n, q).map_err(|e| semantic_failure(e.to_string()))?;
            let expected = gaussian_binomial(n, d, q);
            counts.push(json!({
                "count": subs.len(),
                "d": d,
                "expected": expected.to_string(),
                "ok": subs.len() as u128 == expected,
            }));
            for b in 0..=n {
                if d < b {
                    kernels.push(kernel_report("radon", d, b, n, q, None)?);
                }
                for r in 0..=d.min(b) {
                    kernels.push(kernel_report("incidence", d, b, n, q, Some(r))?);
                }
            }
        }
    }
    // The composed Radon chain on constants, when Gr(1) and Gr(2) exist.
    let chain_value = if n >= 2 {
        let rad = radon_matrix(1, 2, n, q).map_err(|e| semantic_failure(e.to_string()))?;
        let (product, nonzero) = compose_and_test_nonzero(&[rad.clone(), rad.transpose()])
            .map_err(|e| semantic_failure(e.to_string()))?;
        Some(json!({
            "chain": "radon(1,2) . radon(1,2)^T on constants",
            "nonzero": nonzero,
            "value": product.apply_to_ones().first().map(|v| v.to_string()),
        }))
    } else {
        None
    };
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)
            .map_err(|e| semantic_failure(format!("cannot create {}: {e}", dir.display())))?;
        for k in &kernels {
            let path = dir.join(format!("{}.txt", k.label));
            std::fs::write(&path, render_matrix(&k.matrix))
                .map_err(|e| semantic_failure(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    let ok = kernels.iter().all(|k| k.equivariant)
        && counts.iter().all(|c| c["ok"] == json!(true));
    let mut report = json!({
        "generators": generator_names(n),
        "kernels": kernels.iter().map(|k| k.value.clone()).collect::<Vec<_>>(),
        "n": n,
        "ok": ok,
        "q": q,
    });
    if !counts.is_empty() {
        report["counts"] = json!(counts);
    }
    if let Some(cv) = chain_value {
        report["constants_chain"] = cv;
    }
    if !ok {
        println!("{report}");
        return Err(check_failure("equivariance or count check failed"));
    }
    Ok(report)
}

fn run_verify_diffop(
    field: &str,
    k: u32,
    i: u32,
    j: Option<i64>,
    perturb: Option<&str>,
) -> Result<Value, Failure> {
    let arch = match field.to_ascii_uppercase().as_str() {
        "R" | "REAL" => ArchField::Real,
        "C" | "COMPLEX" => ArchField::Complex,
        other => {
            return Err(parse_failure(format!(
                "unknown field `{other}` for verify-diffop (expected R or C)"
            )))
        }
    };
    if k == 0 || i == 0 {
        return Err(semantic_failure("--k and --i must be at least 1"));
    }
    let perturbation = match perturb {
        None => None,
        Some(tok) => Some(
            Perturbation::parse(tok)
                .ok_or_else(|| parse_failure(format!("unknown perturbation `{tok}`")))?,
        ),
    };
    let report = verify_exceptional(arch, k, i, j, perturbation);
    let adjoint = verify_adjoint_covariance(k, i, 3, DEFAULT_SEED);
    let mut obj = json!({ "adjoint_covariant": adjoint, "i": i, "k": k, "ok": report.ok });
    if let Some(j) = j {
        obj["j"] = json!(j);
    }
    if let Some(w) = &report.witness {
        obj["witness"] = json!(w);
    }
    if let Some(r) = &report.residue {
        obj["residue"] = json!(r);
    }
    if !report.ok {
        println!("{obj}");
        return Err(check_failure("intertwining check failed"));
    }
    Ok(obj)
}

fn run_cross_check(
    field: &FieldArgs,
    max_n: u32,
    exp_bound: &str,
    param_bound: u32,
    seed: u64,
    random_count: usize,
    only_families: bool,
) -> Result<Value, Failure> {
    let field = resolve_field(field)?;
    let bound = parse_rat_arg(exp_bound, "exponent bound")?;
    let mut checked = 0u64;
    let mut disagreements: Vec<Value> = Vec::new();
    fn note(list: &mut Vec<Value>, x: &Quadruple, what: &str) {
        if list.len() < 20 {
            list.push(json!({
                "quadruple": x.c.iter().map(render_glchar).collect::<Vec<_>>(),
                "what": what,
            }));
        }
    }
    if only_families {
        for n in 1..=max_n {
            enumerate_family(&field, n, bound, param_bound, seed, |x, truth| {
                checked += 1;
                let got = classify(x);
                let kind_ok = got.kind() == truth.kind()
                    || (truth.kind() == Some(FamilyKind::Exceptional)
                        && got.kind() == Some(FamilyKind::Standard)
                        && match_exceptional(x).is_some());
                if got.dim() != 1 || !kind_ok {
                    note(
                        &mut disagreements,
                        x,
                        "generator output did not classify to its family",
                    );
                }
                if inductive_classify(x).dim() != 1 {
                    note(
                        &mut disagreements,
                        x,
                        "inductive classifier lost a family member",
                    );
                }
            });
        }
    } else {
        for_each_grid_quadruple(&field, max_n, bound, |x| {
            checked += 1;
            let direct = classify(x);
            let inductive = inductive_classify(x);
            if direct.dim() != inductive.dim() || direct.kind() != inductive.kind() {
                note(
                    &mut disagreements,
                    x,
                    "direct and inductive classifiers disagree",
                );
            }
        });
        sample_quadruples(&field, max_n, bound, param_bound, random_count, seed, |x| {
            checked += 1;
            let direct = classify(x);
            let inductive = inductive_classify(x);
            if direct.dim() != inductive.dim() || direct.kind() != inductive.kind() {
                note(
                    &mut disagreements,
                    x,
                    "direct and inductive classifiers disagree",
                );
            }
        });
    }
    let ok = disagreements.is_empty();
    let report = json!({
        "checked": checked,
        "disagreements": disagreements,
        "mode": if only_families { "families" } else { "grid" },
        "ok": ok,
        "seed": seed,
    });
    if !ok {
        println!("{report}");
        return Err(check_failure("cross-check found disagreements"));
    }
    Ok(report)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.cmd {
        Cmd::Classify {
            field,
            output,
            chars,
        } => {
            let v = run_classify(field, output, chars)?;
            if !v.is_null() {
                println!("{v}");
            }
        }
        Cmd::Enumerate {
            field,
            n,
            exp_bound,
            param_bound,
            seed,
            limit,
        } => run_enumerate(field, *n, exp_bound, *param_bound, *seed, *limit)?,
        Cmd::VerifyFinite {
            n,
            q,
            radon,
            incidence,
            all,
            out,
        } => {
            let v = run_verify_finite(
                *n,
                *q,
                radon.as_deref(),
                incidence.as_deref(),
                *all,
                out.as_ref(),
            )?;
            println!("{v}");
        }
        Cmd::VerifyDiffop {
            field,
            k,
            i,
            j,
            perturb,
        } => {
            let v = run_verify_diffop(field, *k, *i, *j, perturb.as_deref())?;
            println!("{v}");
        }
        Cmd::CrossCheck {
            field,
            max_n,
            exp_bound,
            param_bound,
            seed,
            random_count,
            only_families,
        } => {
            let v = run_cross_check(
                field,
                *max_n,
                exp_bound,
                *param_bound,
                *seed,
                *random_count,
                *only_families,
            )?;
            println!("{v}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

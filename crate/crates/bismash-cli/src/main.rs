//! Command-line driver for the bismash library: build the built-in algebras
//! and pairs, run check suites on JSON files, construct bismash products,
//! and compare fingerprints.
//!
//! Exit codes: 0 = all requested checks passed, 1 = a mathematical check
//! failed, 2 = input or usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bismash::bismash::{bismash_mirrored, check_theta, BismashProduct};
use bismash::matchedpair::PartialMatchedPair;
use bismash::partial::{check_partial_action, check_partial_coaction};
use bismash::report::Report;
use bismash::scalar::{ExtElem, ExtField, Gf, GfField, QField, Rat, Scalar};
use bismash::schema::{self, ScalarCodec};
use bismash::structure;
use bismash::verify::{verify_all, DEFAULT_SEED};
use bismash::zoo::{self, groups, NegativeMode};
use bismash::{HopfData, MathError};

#[derive(Parser)]
#[command(name = "bismash", version, about = "Exact Hopf-algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the built-in algebras and matched pairs.
    ZooList,
    /// Build a named algebra or pair and write it as JSON.
    Build {
        /// Algebra name (kC4, kS3*, h4, ...), pair name (4-2-c4, a22, ...),
        /// or a parametric builder (pair_4_2, pair_h4_negative).
        name: String,
        /// Base field: Q, GF(p), or Q(i).
        #[arg(long, default_value = "Q")]
        field: String,
        /// Deformation parameter for pair_h4_negative (integer or n/d).
        #[arg(long)]
        beta: Option<String>,
        /// Which side pair_h4_negative deforms: lambda or z.
        #[arg(long)]
        mode: Option<String>,
        /// Group name for pair_4_2 (C4, S3, ...).
        #[arg(long)]
        group: Option<String>,
        /// Comma-separated element labels of the normal subgroup for pair_4_2.
        #[arg(long)]
        normal: Option<String>,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run a check suite on an algebra or pair file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Construct the bismash product of a pair file after verifying it.
    Bismash {
        pairfile: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print the structural fingerprint of an algebra file.
    Fingerprint { file: PathBuf },
    /// Compare the fingerprints of two algebra files.
    Compare { a: PathBuf, b: PathBuf },
    /// Print integral-space dimensions and semisimplicity of an algebra file.
    Integrals { file: PathBuf },
    /// Dualize: write the dual of an algebra file, or verify the mirrored
    /// laws of a pair file.
    Dualize {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Verify that the comparison map between the two product orientations
    /// of a pair file is a Hopf isomorphism.
    Theta { pairfile: PathBuf },
    /// Run every verification suite.
    VerifyAll {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Emit the full report list as JSON instead of one line per suite.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Hopf,
    Action,
    Coaction,
    Pmp,
    All,
}

struct Fail {
    code: u8,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Fail {
    Fail { code: 2, msg: msg.into() }
}

fn mathfail(msg: impl Into<String>) -> Fail {
    Fail { code: 1, msg: msg.into() }
}

impl From<schema::SchemaError> for Fail {
    fn from(e: schema::SchemaError) -> Fail {
        usage(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Fail> {
    match cli.cmd {
        Cmd::ZooList => {
            println!("algebras:");
            for (name, desc) in zoo::hopf_names() {
                println!("  {name:<12} {desc}");
            }
            println!("pairs:");
            for (name, desc) in zoo::pair_names() {
                println!("  {name:<12} {desc}");
            }
            println!("parametric builders:");
            println!("  pair_4_2     --group G --normal \"e,...\"");
            println!("  pair_h4_negative --beta B --mode lambda|z");
            Ok(0)
        }
        Cmd::Build { name, field, beta, mode, group, normal, out } => {
            let spec = parse_field(&field)?;
            let req = BuildRequest { name, beta, mode, group, normal, out };
            match spec {
                FieldSpec::Q => cmd_build::<Rat>(&QField, &req),
                FieldSpec::Gf(p) => cmd_build::<Gf>(&GfField::new(p), &req),
                FieldSpec::Gaussian => cmd_build::<ExtElem>(&ExtField::gaussian(), &req),
            }
        }
        Cmd::Check { file, suite } => {
            let v = read_json(&file)?;
            dispatch!(kind_of(&v)?, K, cmd_check::<K>(&file, &v, suite))
        }
        Cmd::Bismash { pairfile, out } => {
            let v = read_json(&pairfile)?;
            dispatch!(kind_of(&v)?, K, cmd_bismash::<K>(&v, out.as_deref()))
        }
        Cmd::Fingerprint { file } => {
            let v = read_json(&file)?;
            dispatch!(kind_of(&v)?, K, cmd_fingerprint::<K>(&v))
        }
        Cmd::Compare { a, b } => {
            let va = read_json(&a)?;
            let vb = read_json(&b)?;
            let ka = kind_of(&va)?;
            if ka != kind_of(&vb)? {
                println!("fingerprints differ: the files use different base field kinds");
                return Ok(1);
            }
            dispatch!(ka, K, cmd_compare::<K>(&va, &vb))
        }
        Cmd::Integrals { file } => {
            let v = read_json(&file)?;
            dispatch!(kind_of(&v)?, K, cmd_integrals::<K>(&v))
        }
        Cmd::Dualize { file, out } => {
            let v = read_json(&file)?;
            dispatch!(kind_of(&v)?, K, cmd_dualize::<K>(&v, out.as_deref()))
        }
        Cmd::Theta { pairfile } => {
            let v = read_json(&pairfile)?;
            dispatch!(kind_of(&v)?, K, cmd_theta::<K>(&v))
        }
        Cmd::VerifyAll { seed, json } => cmd_verify_all(seed, json),
    }
}

// ---------------------------------------------------------------------------
// Field handling

enum FieldSpec {
    Q,
    Gf(u64),
    Gaussian,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ScalarKind {
    Q,
    Gf,
    Ext,
}

fn parse_field(s: &str) -> Result<FieldSpec, Fail> {
    let t = s.trim();
    if t == "Q" {
        return Ok(FieldSpec::Q);
    }
    if t == "Q(i)" || t == "Q(I)" {
        return Ok(FieldSpec::Gaussian);
    }
    let upper = t.to_ascii_uppercase();
    if let Some(inner) = upper.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
        let p: u64 = inner
            .parse()
            .map_err(|_| usage(format!("bad prime in field {t:?}")))?;
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(usage(format!("{p} is not prime")));
        }
        return Ok(FieldSpec::Gf(p));
    }
    Err(usage(format!("unknown field {t:?}; use Q, GF(p), or Q(i)")))
}

/// Which scalar codec a JSON envelope was written with.
fn kind_of(v: &Value) -> Result<ScalarKind, Fail> {
    match v.get("field") {
        Some(Value::String(s)) if s == "Q" => Ok(ScalarKind::Q),
        Some(o) if o.get("gf").is_some() => Ok(ScalarKind::Gf),
        Some(o) if o.get("ext").is_some() => Ok(ScalarKind::Ext),
        other => Err(usage(format!("unrecognized field entry {other:?}"))),
    }
}

macro_rules! dispatch {
    ($kind:expr, $K:ident, $call:expr) => {{
        match $kind {
            ScalarKind::Q => {
                type $K = Rat;
                $call
            }
            ScalarKind::Gf => {
                type $K = Gf;
                $call
            }
            ScalarKind::Ext => {
                type $K = ExtElem;
                $call
            }
        }
    }};
}
use dispatch;

// ---------------------------------------------------------------------------
// Shared helpers

fn read_json(path: &Path) -> Result<Value, Fail> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_out(text: &str, out: Option<&Path>) -> Result<(), Fail> {
    match out {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

/// Math-level errors from the library (bad preconditions on otherwise
/// well-formed input) are check failures, not usage errors.
fn math(e: MathError) -> Fail {
    mathfail(e.to_string())
}

fn load_hopf<K: ScalarCodec>(v: &Value) -> Result<(HopfData<K>, K::Field), Fail> {
    Ok(schema::hopf_from_json::<K>(v)?)
}

fn load_pair<K: ScalarCodec>(v: &Value) -> Result<(PartialMatchedPair<K>, K::Field), Fail> {
    Ok(schema::pair_from_json::<K>(v)?)
}

fn print_document(input: &str, reports: &[Report]) -> u8 {
    let passed = reports.iter().all(Report::passed);
    let doc = json!({
        "tool_version": env!("CARGO_PKG_VERSION"),
        "input": input,
        "reports": reports,
        "passed": passed,
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
    if passed {
        0
    } else {
        1
    }
}

// ---------------------------------------------------------------------------
// build

struct BuildRequest {
    name: String,
    beta: Option<String>,
    mode: Option<String>,
    group: Option<String>,
    normal: Option<String>,
    out: Option<PathBuf>,
}

fn parse_scalar<K: Scalar>(s: &str, field: &K::Field) -> Result<K, Fail> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: i64 = n.parse().map_err(|_| usage(format!("bad scalar {s:?}")))?;
    let d: i64 = d.parse().map_err(|_| usage(format!("bad scalar {s:?}")))?;
    K::from_ratio(n, d, field).ok_or_else(|| usage(format!("{s:?} is not invertible here")))
}

fn subgroup_indices(g: &groups::GroupPresentation, csv: &str) -> Result<Vec<usize>, Fail> {
    let mut set = Vec::new();
    for label in csv.split(',') {
        let label = label.trim();
        let i = g
            .index_of_label(label)
            .ok_or_else(|| usage(format!("{label:?} is not an element of {}", g.name)))?;
        if !set.contains(&i) {
            set.push(i);
        }
    }
    set.sort_unstable();
    if !g.is_subgroup(&set) {
        return Err(usage(format!("{csv:?} is not a subgroup of {}", g.name)));
    }
    Ok(set)
}

fn cmd_build<K: ScalarCodec>(field: &K::Field, req: &BuildRequest) -> Result<u8, Fail> {
    let name = req.name.as_str();
    let pair: Option<PartialMatchedPair<K>> = match name {
        "pair_4_2" => {
            let gname = req.group.as_deref().ok_or_else(|| usage("pair_4_2 needs --group"))?;
            let g = groups::by_name(gname)
                .ok_or_else(|| usage(format!("unknown group {gname:?}")))?;
            let n = subgroup_indices(&g, req.normal.as_deref().unwrap_or("e"))?;
            Some(zoo::pair_4_2::<K>(&g, &n, field).map_err(|e| usage(e.to_string()))?)
        }
        "pair_h4_negative" => {
            let beta = parse_scalar::<K>(req.beta.as_deref().unwrap_or("1"), field)?;
            let mode = match req.mode.as_deref().unwrap_or("lambda") {
                "lambda" => NegativeMode::Lambda,
                "z" => NegativeMode::Z,
                m => return Err(usage(format!("unknown mode {m:?}; use lambda or z"))),
            };
            Some(
                zoo::pair_h4_negative::<K>(field, &beta, mode)
                    .map_err(|e| usage(e.to_string()))?,
            )
        }
        _ if zoo::pair_names().iter().any(|(n, _)| *n == name) => {
            Some(zoo::pair_by_name::<K>(name, field).map_err(|e| usage(e.to_string()))?)
        }
        _ => None,
    };
    let text = match pair {
        Some(p) => schema::pair_to_string(&p, field),
        None => {
            let h = zoo::hopf_by_name::<K>(name, field).map_err(|e| usage(e.to_string()))?;
            schema::hopf_to_string(&h, field)
        }
    };
    write_out(&text, req.out.as_deref())?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// check

fn cmd_check<K: ScalarCodec>(path: &Path, v: &Value, suite: Suite) -> Result<u8, Fail> {
    let input = path.display().to_string();
    if v.get("hopf").is_some() {
        if suite != Suite::Hopf && suite != Suite::All {
            return Err(usage("action/coaction/pmp suites need a pair file"));
        }
        let (h, _) = load_hopf::<K>(v)?;
        return Ok(print_document(&input, &[h.check_hopf()]));
    }
    if v.get("pair").is_none() {
        return Err(usage("file contains neither a hopf nor a pair object"));
    }
    let (pair, _) = load_pair::<K>(v)?;
    let mut reports = Vec::new();
    if suite == Suite::Hopf || suite == Suite::All {
        let mut rep = Report::new("components");
        rep.absorb("H", &pair.h.check_hopf());
        rep.absorb("L", &pair.l.check_hopf());
        reports.push(rep);
    }
    if suite == Suite::Action || suite == Suite::All {
        reports.push(check_partial_action(&pair.h, &pair.l, &pair.action).map_err(math)?);
    }
    if suite == Suite::Coaction || suite == Suite::All {
        reports.push(check_partial_coaction(&pair.h, &pair.l, &pair.coaction).map_err(math)?);
    }
    if suite == Suite::Pmp || suite == Suite::All {
        reports.push(pair.check_pmp().map_err(math)?);
    }
    if suite == Suite::All {
        reports.push(pair.check_quasi_abelian().map_err(math)?);
        if pair.lambda.is_some() && pair.z.is_some() {
            reports.push(pair.check_lambda_z().map_err(math)?);
        }
    }
    Ok(print_document(&input, &reports))
}

// ---------------------------------------------------------------------------
// bismash / theta / dualize

fn checked_product<K: ScalarCodec>(
    pair: &PartialMatchedPair<K>,
) -> Result<BismashProduct<K>, Fail> {
    let pmp = pair.check_pmp().map_err(math)?;
    let qa = pair.check_quasi_abelian().map_err(math)?;
    if !pmp.passed() || !qa.passed() {
        print_document("prerequisites", &[pmp, qa]);
        return Err(mathfail("the pair fails its prerequisite checks"));
    }
    bismash::bismash::bismash_unchecked(pair).map_err(math)
}

fn cmd_bismash<K: ScalarCodec>(v: &Value, out: Option<&Path>) -> Result<u8, Fail> {
    let (pair, field) = load_pair::<K>(v)?;
    let bp = checked_product(&pair)?;
    let rep = bp.check_construction();
    if !rep.passed() {
        print_document("construction", &[rep]);
        return Ok(1);
    }
    write_out(&schema::hopf_to_string(&bp.hopf, &field), out)?;
    Ok(0)
}

fn cmd_theta<K: ScalarCodec>(v: &Value) -> Result<u8, Fail> {
    let (pair, _) = load_pair::<K>(v)?;
    let bp = checked_product(&pair)?;
    let mirrored = bismash_mirrored(&pair.dual_pair()).map_err(math)?;
    let rep = check_theta(&bp, &mirrored).map_err(math)?;
    Ok(print_document(&pair.name, &[rep]))
}

fn cmd_dualize<K: ScalarCodec>(v: &Value, out: Option<&Path>) -> Result<u8, Fail> {
    if v.get("hopf").is_some() {
        let (h, field) = load_hopf::<K>(v)?;
        write_out(&schema::hopf_to_string(&h.dual(), &field), out)?;
        return Ok(0);
    }
    let (pair, _) = load_pair::<K>(v)?;
    let mirrored = pair.dual_pair();
    let mut reports = vec![mirrored.check_pmp().map_err(math)?];
    reports.push(mirrored.check_quasi_abelian().map_err(math)?);
    Ok(print_document(&pair.name, &reports))
}

// ---------------------------------------------------------------------------
// fingerprint / compare / integrals

fn cmd_fingerprint<K: ScalarCodec>(v: &Value) -> Result<u8, Fail> {
    let (h, _) = load_hopf::<K>(v)?;
    for line in h.fingerprint().map_err(math)?.lines() {
        println!("{line}");
    }
    Ok(0)
}

fn cmd_compare<K: ScalarCodec>(va: &Value, vb: &Value) -> Result<u8, Fail> {
    let (a, _) = load_hopf::<K>(va)?;
    let (b, _) = load_hopf::<K>(vb)?;
    let fa = a.fingerprint().map_err(math)?;
    let fb = b.fingerprint().map_err(math)?;
    let rep = bismash::hopf::fingerprint_compare(&fa, &fb);
    if rep.passed() {
        println!("fingerprints equal");
        Ok(0)
    } else {
        println!("fingerprints differ");
        println!("{}", rep.summary());
        Ok(1)
    }
}

fn cmd_integrals<K: ScalarCodec>(v: &Value) -> Result<u8, Fail> {
    let (h, _) = load_hopf::<K>(v)?;
    let left = structure::left_integrals(&h);
    let right = structure::right_integrals(&h);
    let semisimple = structure::is_semisimple(&h).ok();
    let doc = json!({
        "left_integral_dim": left.cols,
        "right_integral_dim": right.cols,
        "semisimple": semisimple,
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify-all

fn cmd_verify_all(seed: u64, as_json: bool) -> Result<u8, Fail> {
    let reports = verify_all(seed).map_err(math)?;
    if as_json {
        return Ok(print_document("verify-all", &reports));
    }
    let mut all = true;
    for (i, rep) in reports.iter().enumerate() {
        let status = if rep.passed() { "pass" } else { "FAIL" };
        println!("criterion {:>2} ({}): {}", i + 1, rep.name, status);
        if !rep.passed() {
            all = false;
            if let Some(item) = rep.first_failure() {
                println!("    {}", item.law);
            }
        }
    }
    Ok(if all { 0 } else { 1 })
}

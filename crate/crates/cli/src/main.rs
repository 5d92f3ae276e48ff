//! `verlab`: command-line access to verlab-core. JSON on stdout by default.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use verlab_core::charlab::{decompose, mul_chars, simple_char, weyl_char, Basis, Character};
use verlab_core::fusion::{
    dim_fp, fpdim, fuse, gd_estimate, oracle_mismatches, truncated_clebsch_gordan, verlinde_oracle,
    FusionElement,
};
use verlab_core::growth::{mn_diagnostic, sgd_estimate, LengthProvider};
use verlab_core::padix::{
    digits_needed, dimplus_from_series, dimplus_of_finite_sym, extension_transform,
    extension_transform_via_series, finite_sym, frobenius_palindromy_check, one_minus_t_pow,
    padic_of_int, FpSeries, PadicDigits, DEFAULT_TRUNCATION,
};
use verlab_core::tiltring::{tensor_decompose_tilt, tilting_char};
use verlab_core::verpn::{embed, odd_line, steinberg_digits, steinberg_product, sym_power_status};
use verlab_core::{Error, Exec, Prime, Result};

#[derive(Parser)]
#[command(name = "verlab", version, about = "Characters, fusion rings, p-adic dimensions and growth for SL2 tilting modules")]
struct Cli {
    /// Emit JSON (default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit human-readable tables.
    #[arg(long, global = true)]
    text: bool,
    /// Series truncation N.
    #[arg(long, global = true, env = "VERLAB_PREC", default_value_t = DEFAULT_TRUNCATION)]
    prec: usize,
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand)]
enum Group {
    /// Characters of SL2 modules.
    #[command(subcommand)]
    Char(CharCmd),
    /// Tilting modules.
    #[command(subcommand)]
    Tilt(TiltCmd),
    /// The fusion ring of Ver_p.
    #[command(subcommand)]
    Verp(VerpCmd),
    /// Simple objects and symmetric powers in Ver_{p^n}.
    #[command(subcommand)]
    Verpn(VerpnCmd),
    /// p-adic dimensions and Hilbert series.
    #[command(subcommand)]
    Padic(PadicCmd),
    /// Symmetric growth dimension.
    #[command(subcommand)]
    Sgd(SgdCmd),
}

#[derive(Subcommand)]
enum CharCmd {
    /// Weyl character chi_m.
    Weyl(WeightArgs),
    /// Simple character L(m).
    Simple(PrimeWeightArgs),
    /// Tilting character T(m).
    Tilt(PrimeWeightArgs),
    /// Decompose a character into a basis.
    Decompose(DecomposeArgs),
    /// Product of two characters.
    Mul(MulArgs),
}

#[derive(Subcommand)]
enum TiltCmd {
    /// T_a (x) T_b as a sum of indecomposable tiltings.
    FuseDecompose(PairArgs),
}

#[derive(Subcommand)]
enum VerpCmd {
    /// L_a (x) L_b.
    Fuse(PairArgs),
    /// Compare fusion coefficients with the Verlinde formula and the closed form.
    Oracle(OracleArgs),
    /// Frobenius-Perron dimension and F_p dimension of L_a.
    Fpdim(SimpleArgs),
    /// Growth dimension of L_a from tensor power lengths.
    Gd(GdArgs),
}

#[derive(Subcommand)]
enum VerpnCmd {
    /// Steinberg digits of L_i, most significant first.
    Digits(VerpnIndexArgs),
    /// Simple object with the given Steinberg digits.
    Product(ProductArgs),
    /// Index of L_i of Ver_{p^n} in Ver_{p^{n+1}}.
    Embed(VerpnIndexArgs),
    /// Index of the odd line.
    Oddline(LevelArgs),
    /// Status of Sym^k L_i.
    Sympower(SympowerArgs),
}

#[derive(Subcommand)]
enum PadicCmd {
    /// (1 - t)^d truncated at t^N.
    Pow(PowArgs),
    /// Recover d from a series (1 - t)^d.
    Recover(RecoverArgs),
    /// Dim_+ of an object whose top nonzero symmetric power is --top.
    Finite(FiniteArgs),
    /// Dim_+ of an extension of V by 1.
    Extend(ExtendArgs),
    /// Palindromy check for the dimensions of a finite symmetric algebra.
    Palindrome(PalindromeArgs),
}

#[derive(Subcommand)]
enum SgdCmd {
    /// Estimate sgd from cumulative lengths at powers of two.
    Estimate(ProviderArgs),
    /// Compare the estimate with dim Hom(X, 1).
    Diagnose(ProviderArgs),
}

#[derive(Args, Serialize)]
struct WeightArgs {
    #[arg(short)]
    m: u64,
}

#[derive(Args, Serialize)]
struct PrimeWeightArgs {
    #[arg(short)]
    p: u64,
    #[arg(short)]
    m: u64,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum BasisArg {
    Weyl,
    Simple,
    Tilt,
}

#[derive(Args, Serialize)]
struct DecomposeArgs {
    /// Prime, required for the simple and tilting bases.
    #[arg(short)]
    p: Option<u64>,
    #[arg(long, value_enum, default_value = "simple")]
    basis: BasisArg,
    /// Folded coefficients as `weight:coeff,...`.
    #[arg(long, value_parser = parse_terms)]
    terms: Terms,
}

#[derive(Args, Serialize)]
struct MulArgs {
    #[arg(long, value_parser = parse_terms)]
    lhs: Terms,
    #[arg(long, value_parser = parse_terms)]
    rhs: Terms,
}

#[derive(Args, Serialize)]
struct PairArgs {
    #[arg(short)]
    p: u64,
    #[arg(short)]
    a: u64,
    #[arg(short)]
    b: u64,
}

#[derive(Args, Serialize)]
struct OracleArgs {
    #[arg(short)]
    p: u64,
    /// With -a, -b and -c compares one coefficient; otherwise sweeps all.
    #[arg(short, requires_all = ["b", "c"])]
    a: Option<u64>,
    #[arg(short, requires_all = ["a", "c"])]
    b: Option<u64>,
    #[arg(short, requires_all = ["a", "b"])]
    c: Option<u64>,
}

#[derive(Args, Serialize)]
struct SimpleArgs {
    #[arg(short)]
    p: u64,
    #[arg(short)]
    a: u64,
}

#[derive(Args, Serialize)]
struct GdArgs {
    #[arg(short)]
    p: u64,
    #[arg(short)]
    a: u64,
    #[arg(long, default_value_t = 64)]
    n_max: usize,
}

#[derive(Args, Serialize)]
struct LevelArgs {
    #[arg(short)]
    p: u64,
    #[arg(short)]
    n: u32,
}

#[derive(Args, Serialize)]
struct VerpnIndexArgs {
    #[arg(short)]
    p: u64,
    #[arg(short)]
    n: u32,
    #[arg(short)]
    i: u64,
}

#[derive(Args, Serialize)]
struct ProductArgs {
    #[arg(short)]
    p: u64,
    #[arg(short)]
    n: u32,
    /// Digits, most significant first.
    #[arg(long, value_delimiter = ',', required = true)]
    digits: Vec<u64>,
}

#[derive(Args, Serialize)]
struct SympowerArgs {
    #[arg(short)]
    p: u64,
    #[arg(short)]
    n: u32,
    #[arg(short)]
    i: u64,
    #[arg(short)]
    k: u64,
}

#[derive(Args, Serialize)]
struct PowArgs {
    #[arg(short)]
    p: u64,
    /// Integer exponent.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "digits", required_unless_present = "digits")]
    exp: Option<i64>,
    /// Exponent as p-adic digits, least significant first.
    #[arg(long, value_delimiter = ',')]
    digits: Option<Vec<u64>>,
}

#[derive(Args, Serialize)]
struct RecoverArgs {
    #[arg(short)]
    p: u64,
    /// Coefficients of the series from t^0; missing terms up to t^N are 0.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    coeffs: Vec<i64>,
}

#[derive(Args, Serialize)]
struct FiniteArgs {
    /// Largest i with Sym^i X nonzero.
    #[arg(long)]
    top: u64,
    /// Prime for the Hilbert series and the dim Sym(X) = 0 check.
    #[arg(short)]
    p: Option<u64>,
}

#[derive(Args, Serialize)]
struct ExtendArgs {
    #[arg(short)]
    p: u64,
    /// Length of the image of Sym 1 in Sym E; a power of p.
    #[arg(long)]
    nlen: u64,
    #[arg(long, allow_hyphen_values = true)]
    v: i64,
    #[arg(long, allow_hyphen_values = true)]
    vdual: i64,
}

#[derive(Args, Serialize)]
struct PalindromeArgs {
    #[arg(short)]
    p: u64,
    /// dim Sym^i X for i = 0..=d.
    #[arg(long, value_delimiter = ',', required = true)]
    hs: Vec<u64>,
}

#[derive(Args, Serialize)]
struct ProviderArgs {
    /// binomial, partitions, sl2_sym, constant or csv.
    #[arg(long)]
    provider: String,
    #[arg(short)]
    p: Option<u64>,
    /// Dimension for the binomial provider.
    #[arg(short)]
    m: Option<u32>,
    /// Rows `n,length` for the csv provider.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, default_value_t = 1 << 14)]
    n_max: u64,
    /// Overrides the provider's dim Hom(X, 1).
    #[arg(long)]
    hom_dim: Option<u64>,
}

type Terms = Vec<(usize, i64)>;

fn parse_terms(s: &str) -> std::result::Result<Terms, String> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (w, c) = t.split_once(':').ok_or_else(|| format!("expected weight:coeff, got {t:?}"))?;
            let w = w.trim().parse().map_err(|e| format!("weight {w:?}: {e}"))?;
            let c = c.trim().parse().map_err(|e| format!("coefficient {c:?}: {e}"))?;
            Ok((w, c))
        })
        .collect()
}

struct Output {
    result: Value,
    provenance: Value,
}

fn out(result: Value, provenance: impl Into<Value>) -> Result<Output> {
    Ok(Output { result, provenance: provenance.into() })
}

fn prime(p: u64) -> Result<Prime> {
    Prime::new(p)
}

fn required_prime(p: Option<u64>, what: &str) -> Result<Prime> {
    prime(p.ok_or_else(|| Error::InvalidInput(format!("{what} needs -p")))?)
}

fn fusion_element(x: &FusionElement) -> Value {
    x.terms().map(|(a, k)| json!({"L": a, "mult": render::big(k)})).collect()
}

fn run_char(cmd: &CharCmd) -> Result<Output> {
    match cmd {
        CharCmd::Weyl(a) => out(render::character(&weyl_char(a.m)), "quantum integer [m+1]_q"),
        CharCmd::Simple(a) => out(
            render::character(&simple_char(prime(a.p)?, a.m)),
            "Steinberg tensor product of Frobenius-twisted digit characters",
        ),
        CharCmd::Tilt(a) => out(
            render::character(&tilting_char(prime(a.p)?, a.m)),
            "Donkin recursion",
        ),
        CharCmd::Decompose(a) => {
            let basis = match a.basis {
                BasisArg::Weyl => Basis::Weyl,
                BasisArg::Simple => Basis::simple(required_prime(a.p, "simple basis")?),
                BasisArg::Tilt => Basis::tilting(required_prime(a.p, "tilting basis")?),
            };
            let c = Character::from_pairs(a.terms.iter().copied());
            out(render::decomposition(&decompose(&c, basis)?), "top-weight peeling")
        }
        CharCmd::Mul(a) => {
            let lhs = Character::from_pairs(a.lhs.iter().copied());
            let rhs = Character::from_pairs(a.rhs.iter().copied());
            out(render::character(&mul_chars(&lhs, &rhs)), "Laurent convolution")
        }
    }
}

fn run_verp(cmd: &VerpCmd) -> Result<Output> {
    match cmd {
        VerpCmd::Fuse(a) => out(
            fusion_element(&fuse(prime(a.p)?, a.a, a.b)?),
            "tilting decomposition with negligible summands removed",
        ),
        VerpCmd::Oracle(a) => {
            let p = prime(a.p)?;
            match (a.a, a.b, a.c) {
                (Some(x), Some(y), Some(z)) => {
                    let structural = fuse(p, x, y)?.multiplicity(z);
                    let verlinde = verlinde_oracle(p, x, y, z)?;
                    let closed_form = truncated_clebsch_gordan(p, x, y, z)?;
                    let agree = structural == BigUint::from(verlinde) && verlinde == closed_form;
                    out(
                        json!({
                            "structural": render::big(&structural),
                            "verlinde": verlinde,
                            "closed_form": closed_form,
                            "agree": agree,
                        }),
                        "Verlinde formula and truncated Clebsch-Gordan rule",
                    )
                }
                _ => {
                    let bad = oracle_mismatches(p, Exec::Parallel)?;
                    let rows: Vec<Value> = bad
                        .iter()
                        .map(|m| {
                            json!({
                                "a": m.abc.0, "b": m.abc.1, "c": m.abc.2,
                                "structural": m.structural,
                                "verlinde": m.verlinde,
                                "closed_form": m.closed_form,
                            })
                        })
                        .collect();
                    let r = p.get() - 1;
                    out(
                        json!({"checked": r * r * r, "mismatches": rows}),
                        "Verlinde formula and truncated Clebsch-Gordan rule",
                    )
                }
            }
        }
        VerpCmd::Fpdim(a) => {
            let p = prime(a.p)?;
            out(
                json!({"fpdim": fpdim(p, a.a)?, "dim_fp": dim_fp(p, a.a)?}),
                "power iteration on the fusion matrix",
            )
        }
        VerpCmd::Gd(a) => {
            let p = prime(a.p)?;
            let x = FusionElement::simple(p, a.a)?;
            let est = gd_estimate(&x, a.n_max)?;
            let fpdim = fpdim(p, a.a)?;
            out(
                json!({
                    "lengths": est.lengths.iter().map(render::big).collect::<Vec<_>>(),
                    "roots": est.roots,
                    "final": est.final_value,
                    "fpdim": fpdim,
                }),
                "exact tensor power lengths",
            )
        }
    }
}

fn run_verpn(cmd: &VerpnCmd) -> Result<Output> {
    match cmd {
        VerpnCmd::Digits(a) => out(
            json!({"digits": steinberg_digits(prime(a.p)?, a.n, a.i)?}),
            "base-p digits, most significant first",
        ),
        VerpnCmd::Product(a) => {
            let s = steinberg_product(prime(a.p)?, a.n, &a.digits)?;
            out(json!({"index": s.index}), "Steinberg tensor product")
        }
        VerpnCmd::Embed(a) => out(json!({"index": embed(prime(a.p)?, a.n, a.i)?}), "L_i maps to L_{pi}"),
        VerpnCmd::Oddline(a) => out(json!({"index": odd_line(prime(a.p)?, a.n)?}), "L_{p^{n-1}(p-2)}"),
        VerpnCmd::Sympower(a) => {
            let v = sym_power_status(prime(a.p)?, a.n, a.i, a.k)?;
            let provenance = json!({
                "decided_by": v.provenance,
                "corroborating": v.corroborating,
            });
            let mut result = json!({"object": v.object, "power": v.power});
            if let Value::Object(status) = json!(v.status) {
                result.as_object_mut().expect("object").extend(status);
            }
            out(result, provenance)
        }
    }
}

fn run_padic(cmd: &PadicCmd, prec: usize) -> Result<Output> {
    match cmd {
        PadicCmd::Pow(a) => {
            let p = prime(a.p)?;
            let d = match (&a.exp, &a.digits) {
                (Some(e), _) => padic_of_int(*e, p, digits_needed(p, prec)),
                (None, Some(ds)) => PadicDigits::from_digits(p, ds.clone())?,
                (None, None) => return Err(Error::InvalidInput("pow needs --exp or --digits".into())),
            };
            let s = one_minus_t_pow(&d, prec)?;
            out(
                json!({"exponent": render::padic(&d), "truncation": prec, "coeffs": s.coeffs()}),
                "product over digits of (1 - t^{p^j})^{d_j}",
            )
        }
        PadicCmd::Recover(a) => {
            let p = prime(a.p)?;
            let mut coeffs = a.coeffs.clone();
            coeffs.resize(prec.max(coeffs.len().saturating_sub(1)) + 1, 0);
            let s = FpSeries::from_signed(p, &coeffs)?;
            let d = dimplus_from_series(&s)?;
            out(
                json!({"exponent": render::padic(&d), "dimplus": render::padic(&d.neg())}),
                "digit-by-digit division by (1 - t)^{d_j}",
            )
        }
        PadicCmd::Finite(a) => {
            let mut result = json!({"dimplus": dimplus_of_finite_sym(a.top)});
            if let Some(p) = a.p {
                let f = finite_sym(a.top, prime(p)?)?;
                result["series"] = json!(f.series.coeffs());
                result["dim_sym"] = json!(f.total_dim);
            }
            out(result, "Dim_+ X = -max{i : Sym^i X != 0}")
        }
        PadicCmd::Extend(a) => {
            let p = prime(a.p)?;
            let m = digits_needed(p, prec);
            let (v, vd) = (padic_of_int(a.v, p, m), padic_of_int(a.vdual, p, m));
            let (e, ed) = extension_transform(a.nlen, &v, &vd)?;
            let (se, sed) = extension_transform_via_series(a.nlen, &v, &vd, prec)?;
            out(
                json!({
                    "dimplus_e": render::padic(&e),
                    "dimplus_e_dual": render::padic(&ed),
                    "series_route_agrees": se == e && sed == ed,
                }),
                "Dim_+ E = Dim_+ V + 1 - nlen, Dim_+ E* = Dim_+ V* + 1",
            )
        }
        PadicCmd::Palindrome(a) => out(
            json!({"palindromic": frobenius_palindromy_check(&a.hs, prime(a.p)?)?}),
            "hs[i] = hs[d-i] hs[d] mod p",
        ),
    }
}

#[derive(Deserialize)]
struct CsvRow {
    n: u64,
    length: String,
}

fn csv_provider(path: &PathBuf) -> Result<LengthProvider> {
    let io = |e: csv::Error| Error::InvalidInput(format!("{}: {e}", path.display()));
    let mut reader = csv::Reader::from_path(path).map_err(io)?;
    let headers = reader.headers().map_err(io)?;
    if headers.iter().map(str::trim).ne(["n", "length"]) {
        return Err(Error::InvalidInput(format!("{}: header must be n,length", path.display())));
    }
    let mut rows = Vec::new();
    for row in reader.deserialize::<CsvRow>() {
        let row = row.map_err(io)?;
        let len: BigUint = row
            .length
            .trim()
            .parse()
            .map_err(|e| Error::InvalidInput(format!("length at n = {}: {e}", row.n)))?;
        rows.push((row.n, len));
    }
    LengthProvider::from_rows(path.display().to_string(), rows)
}

fn provider(a: &ProviderArgs) -> Result<LengthProvider> {
    let prov = match a.provider.as_str() {
        "csv" => csv_provider(
            a.csv.as_ref().ok_or_else(|| Error::InvalidInput("csv provider needs --csv".into()))?,
        )?,
        name => LengthProvider::by_name(name, a.p.map(prime).transpose()?, a.m)?,
    };
    Ok(match a.hom_dim {
        Some(h) => prov.with_hom_dim(Some(h)),
        None => prov,
    })
}

fn run_sgd(cmd: &SgdCmd) -> Result<Output> {
    let note = "tail fit of log s_n / log n at n = 2^k; limsup approximated, convergence not assumed";
    match cmd {
        SgdCmd::Estimate(a) => {
            let est = sgd_estimate(&provider(a)?, a.n_max)?;
            out(serde_json::to_value(&est).expect("serializable"), note)
        }
        SgdCmd::Diagnose(a) => {
            let report = mn_diagnostic(&provider(a)?, a.n_max)?;
            let mut v = serde_json::to_value(&report).expect("serializable");
            if report.sgd.is_infinite() {
                v["sgd"] = json!("inf");
            }
            out(v, note)
        }
    }
}

fn dispatch(group: &Group, prec: usize) -> (String, Value, Result<Output>) {
    fn inputs<T: Serialize>(x: &T) -> Value {
        serde_json::to_value(x).expect("arguments serialize")
    }
    let (name, inputs, outcome) = match group {
        Group::Char(c) => {
            let (leaf, i) = match c {
                CharCmd::Weyl(a) => ("weyl", inputs(a)),
                CharCmd::Simple(a) => ("simple", inputs(a)),
                CharCmd::Tilt(a) => ("tilt", inputs(a)),
                CharCmd::Decompose(a) => ("decompose", inputs(a)),
                CharCmd::Mul(a) => ("mul", inputs(a)),
            };
            (format!("char {leaf}"), i, run_char(c))
        }
        Group::Tilt(TiltCmd::FuseDecompose(a)) => {
            let result = prime(a.p).and_then(|p| tensor_decompose_tilt(p, a.a, a.b)).map(|d| Output {
                result: render::decomposition(&d),
                provenance: json!("character product decomposed by top-weight peeling"),
            });
            ("tilt fuse-decompose".to_string(), inputs(a), result)
        }
        Group::Verp(c) => {
            let (leaf, i) = match c {
                VerpCmd::Fuse(a) => ("fuse", inputs(a)),
                VerpCmd::Oracle(a) => ("oracle", inputs(a)),
                VerpCmd::Fpdim(a) => ("fpdim", inputs(a)),
                VerpCmd::Gd(a) => ("gd", inputs(a)),
            };
            (format!("verp {leaf}"), i, run_verp(c))
        }
        Group::Verpn(c) => {
            let (leaf, i) = match c {
                VerpnCmd::Digits(a) => ("digits", inputs(a)),
                VerpnCmd::Product(a) => ("product", inputs(a)),
                VerpnCmd::Embed(a) => ("embed", inputs(a)),
                VerpnCmd::Oddline(a) => ("oddline", inputs(a)),
                VerpnCmd::Sympower(a) => ("sympower", inputs(a)),
            };
            (format!("verpn {leaf}"), i, run_verpn(c))
        }
        Group::Padic(c) => {
            let (leaf, mut i) = match c {
                PadicCmd::Pow(a) => ("pow", inputs(a)),
                PadicCmd::Recover(a) => ("recover", inputs(a)),
                PadicCmd::Finite(a) => ("finite", inputs(a)),
                PadicCmd::Extend(a) => ("extend", inputs(a)),
                PadicCmd::Palindrome(a) => ("palindrome", inputs(a)),
            };
            i["prec"] = json!(prec);
            (format!("padic {leaf}"), i, run_padic(c, prec))
        }
        Group::Sgd(c) => {
            let (leaf, i) = match c {
                SgdCmd::Estimate(a) => ("estimate", inputs(a)),
                SgdCmd::Diagnose(a) => ("diagnose", inputs(a)),
            };
            (format!("sgd {leaf}"), i, run_sgd(c))
        }
    };
    (name, inputs, outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, inputs, outcome) = dispatch(&cli.group, cli.prec);
    match outcome {
        Ok(o) => {
            if cli.text {
                println!("{command}");
                println!("{}", render::text(&o.result, 2));
                println!("provenance:\n{}", render::text(&o.provenance, 2));
            } else {
                let payload = json!({
                    "command": command,
                    "inputs": inputs,
                    "result": o.result,
                    "provenance": o.provenance,
                });
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.text {
                eprintln!("{command}: error[{}]: {e}", e.kind());
            } else {
                let payload = json!({
                    "command": command,
                    "inputs": inputs,
                    "error": {"kind": e.kind(), "message": e.to_string()},
                });
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            }
            ExitCode::from(1)
        }
    }
}

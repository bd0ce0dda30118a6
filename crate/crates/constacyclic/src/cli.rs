//! Command-line front end: factor / code / pir subcommands with
//! deterministic text and JSON output.
//!
//! Exit codes: 0 success, 2 argument or input parse error, 3 precondition
//! violation, 4 enumeration budget exceeded.

use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::code::{
    enumerate_codes, ConstacyclicCode, Membership, WeightStrategy, DEFAULT_BUDGET,
};
use crate::error::Error;
use crate::factor::Factorization;
use crate::pir::{
    brute_ideal_lattice, is_principal_quotient, verify_chain_quotient, Isometry, PirSpec,
    Principality, SmallRingTable,
};
use crate::poly::QuotientElement;
use crate::ring::{ChainRingSpec, RingElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "constacyclic", version, about = "Constacyclic codes over finite chain rings", disable_help_subcommand = true)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    output: OutputFormat,
}

#[derive(Debug, Args)]
struct Instance {
    /// Chain ring spec, e.g. GR(25,1) or FPS(4,2)
    #[arg(long)]
    ring: String,
    /// Code length
    #[arg(long)]
    n: u64,
    /// Constant lambda, as an integer
    #[arg(long)]
    lambda: i64,
}

impl Instance {
    fn factorization(&self) -> crate::Result<Arc<Factorization>> {
        let spec = ChainRingSpec::parse(&self.ring)?;
        let lambda = RingElement::from_int(&spec, self.lambda);
        Ok(Arc::new(Factorization::compute(&spec, &lambda, self.n)?))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Factor X^n - lambda into basic irreducible polynomials
    Factor(Instance),
    /// Code-level operations
    #[command(subcommand)]
    Code(CodeCommand),
    /// Principal ideal ring operations
    #[command(subcommand)]
    Pir(PirCommand),
}

#[derive(Debug, Subcommand)]
enum CodeCommand {
    /// Build a code from its exponent vector
    Build {
        #[command(flatten)]
        instance: Instance,
        /// Comma-separated exponents e_1,...,e_m
        #[arg(long)]
        exponents: String,
        /// Forbid BCH runs from wrapping modulo tn
        #[arg(long)]
        no_wrap: bool,
    },
    /// Exact minimum Hamming weight
    Minweight {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        exponents: String,
        #[arg(long, value_enum, default_value = "residue")]
        strategy: StrategyArg,
        /// Cap on enumerated codewords
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Enumerate all (l+1)^m ideals
    Ideals {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Test membership of a word
    Member {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        exponents: String,
        /// Comma-separated word a_0,...,a_{n-1}
        #[arg(long)]
        word: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Residue,
    Direct,
}

#[derive(Debug, Subcommand)]
enum PirCommand {
    /// Principality of R[X]/<X^n - lambda> for a product ring
    Check {
        /// Sum of chain ring specs, e.g. "GR(25,1)+FPS(4,1)"
        #[arg(long)]
        ring: String,
        #[arg(long)]
        n: u64,
        /// One integer per component, comma-separated
        #[arg(long)]
        lambda: String,
    },
    /// The isometry onto the cyclic quotient, f(X) -> f(lambda^alpha X)
    Isometry {
        #[command(flatten)]
        instance: Instance,
        /// Optional word to map, comma-separated
        #[arg(long)]
        word: Option<String>,
    },
    /// Chain-ring certificate for GR(p^s,r)[X]/<X^n - lambda>
    VerifyChain {
        #[command(flatten)]
        instance: Instance,
    },
    /// Brute-force ideal lattice of a small quotient ring
    Lattice {
        /// Quotient like "Z4[X]/(X^2-1)"
        #[arg(long)]
        quotient: String,
    },
}

fn parse_u32_list(text: &str) -> crate::Result<Vec<u32>> {
    text.split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad exponent {s:?}"))))
        .collect()
}

fn parse_i64_list(text: &str) -> crate::Result<Vec<i64>> {
    text.split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))))
        .collect()
}

fn poly_strings<T: std::fmt::Display>(polys: &[T]) -> Value {
    Value::Array(polys.iter().map(|p| Value::String(p.to_string())).collect())
}

fn factor_report(fact: &Factorization) -> Value {
    let part = fact.partition();
    json!({
        "ring": fact.spec().to_string(),
        "n": fact.n(),
        "lambda": fact.lambda().to_string(),
        "t": part.t(),
        "tn": part.tn(),
        "cosets": part.cosets(),
        "extension_order": fact.root().extension.order().to_string(),
        "xi": fact.root().xi.to_string(),
        "residue_factors": poly_strings(fact.residue_factors()),
        "factors": poly_strings(fact.factors()),
    })
}

fn code_report(code: &ConstacyclicCode, wrap: bool) -> Value {
    let tower = code.generator_tower();
    let bch = match code.bch_bound(wrap) {
        Ok(b) => json!(b),
        Err(_) => Value::Null,
    };
    json!({
        "ring": code.factorization().spec().to_string(),
        "n": code.factorization().n(),
        "lambda": code.factorization().lambda().to_string(),
        "exponents": code.exponents(),
        "index_sets": tower.index_sets,
        "generator_tower": poly_strings(&tower.polys),
        "canonical_generator": code.canonical_generator().to_string(),
        "canonical_generator_word": code
            .canonical_generator()
            .word()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>(),
        "check_tower": poly_strings(&code.check_tower()),
        "check_poly": code.check_poly().to_string(),
        "cardinality": code.cardinality().to_string(),
        "residue_zero_set": code.residue_zero_set(),
        "bch_bound": bch,
    })
}

fn execute(cli: &Cli) -> crate::Result<Value> {
    match &cli.command {
        Command::Factor(instance) => Ok(factor_report(instance.factorization()?.as_ref())),
        Command::Code(cmd) => execute_code(cmd),
        Command::Pir(cmd) => execute_pir(cmd),
    }
}

fn execute_code(cmd: &CodeCommand) -> crate::Result<Value> {
    match cmd {
        CodeCommand::Build { instance, exponents, no_wrap } => {
            let fact = instance.factorization()?;
            let code = ConstacyclicCode::from_exponents(&fact, &parse_u32_list(exponents)?)?;
            Ok(code_report(&code, !no_wrap))
        }
        CodeCommand::Minweight { instance, exponents, strategy, budget } => {
            let fact = instance.factorization()?;
            let code = ConstacyclicCode::from_exponents(&fact, &parse_u32_list(exponents)?)?;
            let strat = match strategy {
                StrategyArg::Residue => WeightStrategy::Residue,
                StrategyArg::Direct => WeightStrategy::Direct,
            };
            let w = code.min_weight_exact(strat, *budget)?;
            Ok(json!({
                "ring": instance.ring,
                "n": instance.n,
                "lambda": instance.lambda,
                "exponents": code.exponents(),
                "strategy": match strat {
                    WeightStrategy::Residue => "residue",
                    WeightStrategy::Direct => "direct",
                },
                "min_weight": w,
            }))
        }
        CodeCommand::Ideals { instance, budget } => {
            let fact = instance.factorization()?;
            let codes = enumerate_codes(&fact, *budget)?;
            let ideals: Vec<Value> = codes
                .iter()
                .map(|c| {
                    json!({
                        "exponents": c.exponents(),
                        "cardinality": c.cardinality().to_string(),
                        "generator": c.canonical_generator().to_string(),
                    })
                })
                .collect();
            Ok(json!({
                "ring": instance.ring,
                "n": instance.n,
                "lambda": instance.lambda,
                "count": codes.len(),
                "ideals": ideals,
            }))
        }
        CodeCommand::Member { instance, exponents, word } => {
            let fact = instance.factorization()?;
            let code = ConstacyclicCode::from_exponents(&fact, &parse_u32_list(exponents)?)?;
            let ints = parse_i64_list(word)?;
            let spec = fact.spec();
            let elems: Vec<RingElement> =
                ints.iter().map(|&k| RingElement::from_int(spec, k)).collect();
            let f = QuotientElement::from_word(fact.quotient_ctx(), elems)?;
            let crt = code.contains(&f, Membership::Crt);
            let check = code.contains(&f, Membership::Check);
            Ok(json!({
                "word": ints,
                "weight": f.hamming_weight(),
                "member_crt": crt,
                "member_check": check,
                "agree": crt == check,
            }))
        }
    }
}

fn execute_pir(cmd: &PirCommand) -> crate::Result<Value> {
    match cmd {
        PirCommand::Check { ring, n, lambda } => {
            let pir = PirSpec::parse(ring)?;
            let ints = parse_i64_list(lambda)?;
            if ints.len() != pir.components().len() {
                return Err(Error::Parse(format!(
                    "expected {} lambda components, got {}",
                    pir.components().len(),
                    ints.len()
                )));
            }
            let lambdas: Vec<RingElement> = pir
                .components()
                .iter()
                .zip(&ints)
                .map(|(spec, &k)| RingElement::from_int(spec, k))
                .collect();
            let report = is_principal_quotient(&pir, *n, &lambdas)?;
            let components: Vec<Value> = report
                .components
                .iter()
                .map(|c| {
                    json!({
                        "ring": c.ring,
                        "ell": c.ell,
                        "gcd_n_char": c.gcd_n_char,
                        "satisfied": c.satisfied,
                    })
                })
                .collect();
            Ok(json!({
                "ring": pir.to_string(),
                "n": n,
                "lambda": ints,
                "verdict": match report.verdict {
                    Principality::Principal => "principal",
                    Principality::NotPrincipal => "not_principal",
                    Principality::Unknown => "unknown",
                },
                "criterion_exact": report.criterion_exact,
                "components": components,
            }))
        }
        PirCommand::Isometry { instance, word } => {
            let spec = ChainRingSpec::parse(&instance.ring)?;
            let lambda = RingElement::from_int(&spec, instance.lambda);
            let iso = Isometry::new(&spec, instance.n, &lambda)?;
            let mut out = json!({
                "ring": spec.to_string(),
                "n": instance.n,
                "lambda": lambda.to_string(),
                "alpha": iso.alpha(),
                "scale": iso.scale().to_string(),
            });
            if let Some(text) = word {
                let ints = parse_i64_list(text)?;
                let elems: Vec<RingElement> =
                    ints.iter().map(|&k| RingElement::from_int(&spec, k)).collect();
                let f = QuotientElement::from_word(iso.src_ctx().clone(), elems)?;
                let g = iso.apply(&f)?;
                let map = out.as_object_mut().unwrap();
                map.insert("word".into(), json!(ints));
                map.insert(
                    "image".into(),
                    json!(g.word().iter().map(|c| c.to_string()).collect::<Vec<_>>()),
                );
                map.insert("weight".into(), json!(f.hamming_weight()));
                map.insert("image_weight".into(), json!(g.hamming_weight()));
            }
            Ok(out)
        }
        PirCommand::VerifyChain { instance } => {
            let spec = ChainRingSpec::parse(&instance.ring)?;
            let lambda = RingElement::from_int(&spec, instance.lambda);
            let report = verify_chain_quotient(&spec, instance.n, &lambda)?;
            Ok(json!({
                "ring": spec.to_string(),
                "n": instance.n,
                "lambda": lambda.to_string(),
                "is_chain": report.is_chain,
                "nilpotency": report.nilpotency,
                "eisenstein_unit": report.eisenstein_unit.map(|u| u.to_string()),
                "failure": report.failure,
            }))
        }
        PirCommand::Lattice { quotient } => {
            let table = SmallRingTable::parse_quotient(quotient)?;
            let report = brute_ideal_lattice(&table);
            let ideals: Vec<Value> = report
                .ideals
                .iter()
                .map(|i| {
                    json!({
                        "size": i.len(),
                        "elements": i.iter().map(|&e| table.label(e)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(json!({
                "quotient": table.name(),
                "ring_size": table.size(),
                "ideal_count": report.ideals.len(),
                "ideals": ideals,
                "principal": report.principal,
                "chain": report.chain,
                "local": report.local,
                "non_principal_witness": report
                    .non_principal_witness
                    .map(|i| i.iter().map(|&e| table.label(e).to_string()).collect::<Vec<_>>()),
            }))
        }
    }
}

fn render_text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(v, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(v, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar_text(v))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar_text(item))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar_text(value))),
    }
}

fn scalar_text(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "none".to_string(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) => 2,
        Error::BudgetExceeded { .. } => 4,
        _ => 3,
    }
}

/// Parses and runs; returns (exit code, stdout, stderr). JSON output has
/// sorted keys and repeated invocations are byte-identical.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // clap prints help/version on stdout with status 0
            if err.exit_code() == 0 {
                return (0, err.to_string(), String::new());
            }
            return (2, String::new(), err.to_string());
        }
    };
    match execute(&cli) {
        Ok(value) => {
            let text = match cli.output {
                OutputFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&value).expect("serializable report");
                    s.push('\n');
                    s
                }
                OutputFormat::Text => {
                    let mut s = String::new();
                    render_text(&value, 0, &mut s);
                    s
                }
            };
            (0, text, String::new())
        }
        Err(err) => (exit_code(&err), String::new(), format!("error: {err}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(args: &[&str]) -> String {
        let (code, out, err) = run(args.iter().copied());
        assert_eq!(code, 0, "stderr: {err}");
        out
    }

    #[test]
    fn factor_gr25_n6_example() {
        let out = ok(&["constacyclic", "factor", "--ring", "GR(25,1)", "--n", "6", "--lambda", "4"]);
        assert!(out.contains("t: 2"));
        assert!(out.contains("9 + 3*X + X^2"));
    }

    #[test]
    fn json_is_sorted_and_deterministic() {
        let args = ["constacyclic", "--output", "json", "factor", "--ring", "GR(25,1)", "--n", "6", "--lambda", "4"];
        let a = ok(&args);
        let b = ok(&args);
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn build_reports_gr25_n6_values() {
        let out = ok(&[
            "constacyclic", "--output", "json", "code", "build", "--ring", "GR(25,1)", "--n", "6",
            "--lambda", "4", "--exponents", "2,2,1,0",
        ]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["cardinality"], "625");
        assert_eq!(v["bch_bound"], 4);
        assert_eq!(v["residue_zero_set"], json!([1, 3, 5]));
    }

    #[test]
    fn minweight_and_member() {
        let out = ok(&[
            "constacyclic", "--output", "json", "code", "minweight", "--ring", "GR(25,1)", "--n",
            "6", "--lambda", "4", "--exponents", "2,2,1,0",
        ]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["min_weight"], 4);
        let out = ok(&[
            "constacyclic", "--output", "json", "code", "member", "--ring", "GR(25,1)", "--n", "6",
            "--lambda", "4", "--exponents", "2,2,1,0", "--word", "10,15,5,5,0,0",
        ]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["member_crt"], true);
        assert_eq!(v["member_check"], true);
    }

    #[test]
    fn exit_codes() {
        let (code, _, _) = run(["constacyclic", "nonsense"]);
        assert_eq!(code, 2);
        let (code, _, _) =
            run(["constacyclic", "factor", "--ring", "GR(25,1)", "--n", "6", "--lambda", "5"]);
        assert_eq!(code, 3);
        let (code, _, _) = run([
            "constacyclic", "code", "minweight", "--ring", "GR(25,1)", "--n", "6", "--lambda",
            "4", "--exponents", "0,0,0,0", "--strategy", "direct", "--budget", "10",
        ]);
        assert_eq!(code, 4);
        let (code, _, _) = run(["constacyclic", "pir", "lattice", "--quotient", "garbage"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn pir_subcommands() {
        let out = ok(&[
            "constacyclic", "--output", "json", "pir", "check", "--ring", "GR(25,1)+FPS(4,1)",
            "--n", "6", "--lambda", "4,1",
        ]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], "principal");

        let out = ok(&[
            "constacyclic", "--output", "json", "pir", "isometry", "--ring", "GR(25,1)", "--n",
            "3", "--lambda", "24", "--word", "1,1,0",
        ]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["alpha"], 1);
        assert_eq!(v["image_weight"], 2);

        let out = ok(&[
            "constacyclic", "--output", "json", "pir", "verify-chain", "--ring", "GR(9,1)",
            "--n", "3", "--lambda", "4",
        ]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["is_chain"], true);
        assert_eq!(v["nilpotency"], 6);

        let out = ok(&[
            "constacyclic", "--output", "json", "pir", "lattice", "--quotient", "Z4[X]/(X^2-1)",
        ]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["principal"], false);
        assert_eq!(v["local"], true);
        assert_eq!(v["chain"], false);
    }
}

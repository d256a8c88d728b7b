use std::collections::HashMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kerov_core::charoracle::MurnaghanNakayama;
use kerov_core::functionals::{
    free_cumulant_from_s, free_cumulant_multirect, r_in_terms_of_s, s_functional_boxes, s_functional_frobenius,
    s_functional_multirect, ShapeVector,
};
use kerov_core::kerov::{kerov_polynomial_by_conversion, kerov_polynomial_by_counting, kerov_polynomial_by_stanley};
use kerov_core::rational::format;
use kerov_core::stanley::{j_polynomial_by_counting, j_polynomial_by_stanley};
use kerov_core::verify::{run_verification, Bounds};
use kerov_core::{normalized_character, Execution, MultiRect, Partition, RatPoly, Rational, Variable};

const MAX_POLY_K: usize = 8;
const MAX_CUMULANT_K: usize = 9;

#[derive(Parser)]
#[command(
    name = "kerov",
    version,
    about = "Normalized characters, Kerov polynomials and free cumulants"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character polynomial of the k-cycle.
    Poly {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "R")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "count")]
        route: Route,
    },
    /// Evaluate the normalized character on the k-cycle.
    Character {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        k: usize,
    },
    /// Tabulate S_k and R_k for a partition or a multirectangular diagram.
    Cumulants {
        #[arg(long, conflicts_with_all = ["p", "q"])]
        lambda: Option<String>,
        #[arg(long, requires = "q")]
        p: Option<String>,
        #[arg(long, requires = "p")]
        q: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
    /// Run the cross-route verification suite.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        max_k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    #[value(name = "R")]
    R,
    #[value(name = "S")]
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Count,
    Convert,
    Stanley,
}

enum Failure {
    Usage(String),
    Verification(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(out)) => {
            println!("{out}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Poly { k, basis, route } => poly(*k, *basis, *route, cli.json),
        Command::Character { lambda, k } => character(lambda, *k, cli.json),
        Command::Cumulants { lambda, p, q, max_k } => {
            cumulants(lambda.as_deref(), p.as_deref(), q.as_deref(), *max_k, cli.json)
        }
        Command::Verify { max_n, max_k } => verify(*max_n, *max_k, cli.json),
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn poly(k: usize, basis: Basis, route: Route, json: bool) -> Result<String, Failure> {
    if !(1..=MAX_POLY_K).contains(&k) {
        return Err(Failure::Usage(format!(
            "--k must be between 1 and {MAX_POLY_K}, got {k}"
        )));
    }
    let exec = Execution::default();
    let p = match (basis, route) {
        (Basis::R, Route::Count) => kerov_polynomial_by_counting(k),
        (Basis::R, Route::Convert) => kerov_polynomial_by_conversion(k),
        (Basis::R, Route::Stanley) => kerov_polynomial_by_stanley(k, exec),
        (Basis::S, Route::Count) => j_polynomial_by_counting(k),
        (Basis::S, Route::Convert) => {
            let subs: HashMap<Variable, RatPoly> = (2..=k + 1).map(|j| (Variable::r(j), r_in_terms_of_s(j))).collect();
            kerov_polynomial_by_counting(k).substitute(&subs)
        }
        (Basis::S, Route::Stanley) => j_polynomial_by_stanley(k, exec),
    };
    if json {
        let mut doc = p.to_json();
        let obj = doc.as_object_mut().expect("polynomial JSON is an object");
        obj.insert("k".into(), json!(k));
        obj.insert(
            "basis".into(),
            json!(match basis {
                Basis::R => "R",
                Basis::S => "S",
            }),
        );
        obj.insert(
            "route".into(),
            json!(match route {
                Route::Count => "count",
                Route::Convert => "convert",
                Route::Stanley => "stanley",
            }),
        );
        Ok(doc.to_string())
    } else {
        Ok(p.to_string())
    }
}

fn character(lambda: &str, k: usize, json: bool) -> Result<String, Failure> {
    let lambda: Partition = lambda.parse().map_err(usage)?;
    if k == 0 {
        return Err(Failure::Usage("--k must be at least 1".into()));
    }
    let v = format(&normalized_character(&lambda, k));
    Ok(if json {
        json!({"lambda": lambda.to_string(), "k": k, "value": v}).to_string()
    } else {
        v
    })
}

struct Row {
    k: usize,
    s: Rational,
    r: Rational,
    agree: bool,
}

fn cumulants(
    lambda: Option<&str>,
    p: Option<&str>,
    q: Option<&str>,
    max_k: usize,
    json: bool,
) -> Result<String, Failure> {
    if max_k > MAX_CUMULANT_K {
        return Err(Failure::Usage(format!(
            "--max-k must be at most {MAX_CUMULANT_K}, got {max_k}"
        )));
    }
    let rows: Vec<Row> = match (lambda, p, q) {
        (Some(l), _, _) => {
            let lambda: Partition = l.parse().map_err(usage)?;
            let fc = lambda.frobenius();
            let s = ShapeVector::s_of(&lambda, max_k);
            let rect = MultiRect::from(&lambda);
            (2..=max_k)
                .map(|k| {
                    let sk = s.get(k).cloned().expect("computed");
                    let rk = free_cumulant_from_s(&s, k).expect("all S present");
                    let agree = sk == s_functional_frobenius(&fc, k) && rk == free_cumulant_multirect(&rect, k);
                    Row { k, s: sk, r: rk, agree }
                })
                .collect()
        }
        (None, Some(p), Some(q)) => {
            let m = MultiRect::parse(p, q).map_err(usage)?;
            let mut s = ShapeVector::default();
            for k in 2..=max_k {
                s.insert(k, s_functional_multirect(&m, k));
            }
            let concrete = m.to_partition().ok();
            (2..=max_k)
                .map(|k| {
                    let sk = s.get(k).cloned().expect("computed");
                    let rk = free_cumulant_from_s(&s, k).expect("all S present");
                    let boxes_ok = concrete.as_ref().is_none_or(|l| s_functional_boxes(l, k) == sk);
                    let agree = boxes_ok && rk == free_cumulant_multirect(&m, k);
                    Row { k, s: sk, r: rk, agree }
                })
                .collect()
        }
        _ => return Err(Failure::Usage("give either --lambda or both --p and --q".into())),
    };
    let all_agree = rows.iter().all(|r| r.agree);
    let out = if json {
        json!({
            "rows": rows.iter().map(|r| json!({
                "k": r.k,
                "S": format(&r.s),
                "R": format(&r.r),
                "routes_agree": r.agree,
            })).collect::<Vec<Value>>()
        })
        .to_string()
    } else {
        let mut lines = vec!["k\tS_k\tR_k".to_string()];
        for r in &rows {
            let flag = if r.agree { "" } else { "\troutes disagree" };
            lines.push(format!("{}\t{}\t{}{flag}", r.k, format(&r.s), format(&r.r)));
        }
        lines.join("\n")
    };
    if all_agree {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn verify(max_n: usize, max_k: usize, json: bool) -> Result<String, Failure> {
    let report = run_verification(Bounds { max_n, max_k }, &MurnaghanNakayama::new());
    let out = if json {
        report.to_json().to_string()
    } else {
        report
            .checks
            .iter()
            .map(|c| format!("{}\t{}\t{}", if c.passed { "pass" } else { "fail" }, c.check, c.detail))
            .collect::<Vec<_>>()
            .join("\n")
    };
    if report.all_passed() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

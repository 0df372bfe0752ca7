//! Command-line front end: compute and emit formulas, run verification
//! suites, serialize results. All configuration is by flags; identical
//! invocations produce byte-identical output.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dihedral::dunkl::GroupParam;
use dihedral::harmonic::{f_coeff_form, Variant};
use dihedral::intertwine::intertwine_mono;
use dihedral::json::{poly_to_dto, PolyTermDto};
use dihedral::kernels::{kernel_k, poisson_p};
use dihedral::multipoly::MultiPoly;
use dihedral::render;
use dihedral::report::summarize;
use dihedral::verify;

#[derive(Parser)]
#[command(
    name = "dihedral",
    version,
    about = "Exact Dunkl-operator computations for the even dihedral groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Emit V(z^a zbar^b) for the group I2(2s).
    Intertwine {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit the degree-n harmonic family member f, f0 or f1 (the building
    /// blocks; bases for I2(2s) use them through z -> z^s).
    Harmonic {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "f")]
        variant: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit the Poisson kernel component P_N(z, w).
    Poisson {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long = "N")]
        big_n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit the kernel K_n(z, w).
    Kernel {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite; exit code 0 iff every check passes.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Restrict the singular suite to one value of m.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Serialize)]
struct OutputDocument {
    command: String,
    s: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    big_n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    variant: Option<String>,
    result: Vec<PolyTermDto>,
    text: String,
    latex: String,
}

fn emit(doc: &OutputDocument, format: Format) {
    match format {
        Format::Text => println!("{}", doc.text),
        Format::Latex => println!("{}", doc.latex),
        Format::Json => println!("{}", serde_json::to_string_pretty(doc).unwrap()),
    }
}

type Indices = (Option<u32>, Option<u32>, Option<u32>, Option<u32>);

fn document(
    command: &str,
    s: u32,
    indices: Indices,
    variant: Option<String>,
    poly: &MultiPoly,
) -> OutputDocument {
    OutputDocument {
        command: command.to_string(),
        s,
        a: indices.0,
        b: indices.1,
        n: indices.2,
        big_n: indices.3,
        variant,
        result: poly_to_dto(poly),
        text: render::text_poly(poly),
        latex: render::latex_poly(poly),
    }
}

fn main() {
    let cli = Cli::parse();
    match cli.command {
        Command::Intertwine { s, a, b, format } => {
            let g = GroupParam::new(s);
            let v = intertwine_mono(&g, a, b);
            emit(
                &document("intertwine", s, (Some(a), Some(b), None, None), None, &v),
                format,
            );
        }
        Command::Harmonic {
            s,
            n,
            variant,
            format,
        } => {
            let Some(var) = Variant::parse(&variant) else {
                eprintln!("unknown variant {variant:?}; use f, f0 or f1");
                std::process::exit(2);
            };
            let f = f_coeff_form(n, var);
            emit(
                &document(
                    "harmonic",
                    s,
                    (None, None, Some(n), None),
                    Some(var.label().to_string()),
                    &f,
                ),
                format,
            );
        }
        Command::Poisson { s, big_n, format } => {
            let g = GroupParam::new(s);
            let p = poisson_p(&g, big_n);
            emit(
                &document("poisson", s, (None, None, None, Some(big_n)), None, &p),
                format,
            );
        }
        Command::Kernel { s, n, format } => {
            let g = GroupParam::new(s);
            let k = kernel_k(&g, n);
            emit(
                &document("kernel", s, (None, None, Some(n), None), None, &k),
                format,
            );
        }
        Command::Verify {
            suite,
            max_degree,
            seed,
            m,
            format,
        } => {
            let reports = match verify::run_suite(&suite, max_degree, seed, m) {
                Some(r) => r,
                None => {
                    eprintln!(
                        "unknown suite {suite:?}; use defining, oracle, identities, singular or all"
                    );
                    std::process::exit(2);
                }
            };
            for r in &reports {
                match format {
                    Format::Json => println!("{}", serde_json::to_string(r).unwrap()),
                    _ => {
                        let status = if r.passed() { "PASS" } else { "FAIL" };
                        match &r.witness {
                            Some(w) => println!("{status} {} [{}]: {w}", r.identity, r.params),
                            None => println!("{status} {} [{}]", r.identity, r.params),
                        }
                    }
                }
            }
            let (total, failures) = summarize(&reports);
            if failures > 0 {
                let first = reports.iter().find(|r| !r.passed()).unwrap();
                eprintln!(
                    "{failures}/{total} checks failed; first failure: {} [{}] {}",
                    first.identity,
                    first.params,
                    first.witness.clone().unwrap_or_default()
                );
                std::process::exit(1);
            }
            println!("all {total} checks passed");
        }
    }
}

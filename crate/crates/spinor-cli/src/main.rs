//! Command-line surface for the semi-spinor classification toolkit.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use spinor_core::comb::{
    check_identities, enumerate_types, feasible_k_bounds, is_irreducible, spinor_of,
    EnumerateError, DEFAULT_NODE_BUDGET,
};
use spinor_core::geomap::{configuration_form, geometric_map, words_to_constituents};
use spinor_core::lie::stabilizer_algebra;
use spinor_core::nullspace::{annihilator, is_pure, nullity};
use spinor_core::spinor::Spinor;

use spinor_cli::{dot, json, report};

#[derive(Parser)]
#[command(
    name = "spinor",
    about = "Classify Spin(2d) semi-spinor orbits through their pure constituents",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate combinatorial types of impure spinors
    Enumerate {
        /// Half dimension d (the group is Spin(2d))
        #[arg(long = "half-dim")]
        half_dim: usize,
        /// Impurity k (number of pure constituents)
        #[arg(long, conflicts_with = "all_k")]
        k: Option<usize>,
        /// Run every impurity from 2 up to the feasibility bound
        #[arg(long = "all-k")]
        all_k: bool,
        /// Drop the tetrahedral filter t <= d-7
        #[arg(long = "allow-reducible")]
        allow_reducible: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Re-run the classification for one dimension against the bundled expectations
    Verify {
        /// Total dimension 2d: one of 8, 10, 12, 14
        #[arg(long)]
        dim: usize,
        /// Recompute the pipeline-derived expectation values and write them out
        #[arg(long = "regen-fixtures")]
        regen_fixtures: bool,
        /// Output path for --regen-fixtures
        #[arg(long, default_value = "expectations.json")]
        out: PathBuf,
    },
    /// Print the bilinear form B_k of a spinor or configuration
    Bilinear {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Print the stabilizer subalgebra dimension (and optionally a basis)
    Stabilizer {
        #[arg(long)]
        input: PathBuf,
        /// Also print the basis in (A, beta, B) coordinates as JSON
        #[arg(long)]
        basis: bool,
    },
    /// Report purity and nullity of a spinor
    Purity {
        #[arg(long)]
        input: PathBuf,
    },
    /// Print the feasible impurity bounds over a range of half-dimensions
    Bounds {
        #[arg(long = "min-d", default_value = "2")]
        min_d: usize,
        #[arg(long = "max-d", default_value = "8")]
        max_d: usize,
    },
}

fn node_budget() -> u64 {
    std::env::var("SPINOR_NODE_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_NODE_BUDGET)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Enumerate {
            half_dim,
            k,
            all_k,
            allow_reducible,
            format,
        } => cmd_enumerate(half_dim, k, all_k, allow_reducible, format),
        Command::Verify {
            dim,
            regen_fixtures,
            out,
        } => cmd_verify(dim, regen_fixtures, out),
        Command::Bilinear { input, k } => cmd_bilinear(&input, k),
        Command::Stabilizer { input, basis } => cmd_stabilizer(&input, basis),
        Command::Purity { input } => cmd_purity(&input),
        Command::Bounds { min_d, max_d } => cmd_bounds(min_d, max_d),
    }
}

fn cmd_enumerate(
    d: usize,
    k: Option<usize>,
    all_k: bool,
    allow_reducible: bool,
    format: Format,
) -> Result<ExitCode> {
    if d < 2 {
        bail!("half dimension must be at least 2");
    }
    let ks: Vec<usize> = if all_k {
        let b = feasible_k_bounds(d);
        let hi = match (b.max_odd, b.max_even) {
            (Some(o), Some(e)) => o.max(e),
            (Some(o), None) => o.max(2 * d),
            (None, Some(e)) => e.max(2 * d),
            (None, None) => 2 * d,
        };
        (2..=hi).collect()
    } else {
        vec![k.ok_or_else(|| anyhow!("pass --k <K> or --all-k"))?]
    };
    let budget = node_budget();
    let mut total = 0usize;
    let mut all_types = Vec::new();
    for k in ks {
        match enumerate_types(d, k, !allow_reducible, budget) {
            Ok(types) => {
                total += types.len();
                all_types.extend(types);
            }
            Err(EnumerateError::BudgetExceeded { budget }) => {
                eprintln!(
                    "aborted: node budget {} exceeded (set SPINOR_NODE_BUDGET)",
                    budget
                );
                return Ok(ExitCode::from(2));
            }
            Err(e) => bail!("{}", e),
        }
    }
    match format {
        Format::Table => {
            println!(
                "{} combinatorial type(s) at 2d = {}{}",
                total,
                2 * d,
                if allow_reducible {
                    " (reducible allowed)"
                } else {
                    ""
                }
            );
            for ty in &all_types {
                println!(
                    "k={}  edges {:?}  words {:?}  code {}",
                    ty.k,
                    ty.edge_multiset(),
                    ty.canonical_words,
                    hex(&ty.canonical_code())
                );
            }
        }
        Format::Json => {
            let objs: Vec<serde_json::Value> = all_types
                .iter()
                .map(|ty| {
                    serde_json::json!({
                        "k": ty.k,
                        "canonical_words": ty.canonical_words,
                        "canonical_code": hex(&ty.canonical_code()),
                        "edge_labels": ty.edge_labels.iter()
                            .map(|(&(a, b), &e)| (format!("{}-{}", a, b), e))
                            .collect::<std::collections::BTreeMap<_, _>>(),
                        "tetra_labels": ty.tetra_labels.iter()
                            .map(|(q, &t)| (format!("{}-{}-{}-{}", q[0], q[1], q[2], q[3]), t))
                            .collect::<std::collections::BTreeMap<_, _>>(),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&objs)?);
        }
        Format::Dot => {
            for (n, ty) in all_types.iter().enumerate() {
                print!("{}", dot::type_to_dot(ty, &format!("type_{}_k{}", n, ty.k)));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{:02x}", b)).collect()
}

fn cmd_verify(dim: usize, regen: bool, out: PathBuf) -> Result<ExitCode> {
    if ![8usize, 10, 12, 14].contains(&dim) {
        bail!("supported dimensions: 8, 10, 12, 14");
    }
    let budget = node_budget();
    if regen {
        let exp = report::regenerate(budget)?;
        let text = serde_json::to_string_pretty(&exp)?;
        fs::write(&out, &text).with_context(|| format!("writing {}", out.display()))?;
        println!("wrote regenerated expectations to {}", out.display());
        return Ok(ExitCode::SUCCESS);
    }
    let expectations = report::load_embedded()?;
    let outcome = report::verify(dim, &expectations, budget)?;
    for line in &outcome.lines {
        println!("{}", line);
    }
    Ok(if outcome.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn read_input(path: &PathBuf) -> Result<json::SpinorInput> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    json::parse_spinor_input(&text)
}

fn cmd_bilinear(input: &PathBuf, k: usize) -> Result<ExitCode> {
    let form = match read_input(input)? {
        json::SpinorInput::Spinor(psi) => {
            geometric_map(&psi, &psi, k).map_err(|e| anyhow!("{}", e))?
        }
        json::SpinorInput::Configuration(cfg) => {
            let words: Vec<_> = cfg.words.iter().map(|w| w.as_index_set()).collect();
            let cons = match &cfg.coeffs {
                Some(cs) => words_to_constituents(cfg.half_dim, &words, Some(cs)),
                None => words_to_constituents(cfg.half_dim, &words, None),
            }
            .map_err(|e| anyhow!("{}", e))?;
            configuration_form(&cons, k).map_err(|e| anyhow!("{}", e))?
        }
    };
    println!("{}", form.display());
    println!(
        "{}",
        serde_json::to_string_pretty(&json::extform_to_json(&form))?
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_stabilizer(input: &PathBuf, with_basis: bool) -> Result<ExitCode> {
    let psi = match read_input(input)? {
        json::SpinorInput::Spinor(psi) => psi,
        json::SpinorInput::Configuration(cfg) => spinor_of(&cfg).map_err(|e| anyhow!("{}", e))?,
    };
    let (dim, basis) = stabilizer_algebra(&psi).map_err(|e| anyhow!("{}", e))?;
    println!("stabilizer dimension: {}", dim);
    if with_basis {
        let objs: Vec<json::LieElementJson> = basis.iter().map(json::lie_element_to_json).collect();
        println!("{}", serde_json::to_string_pretty(&objs)?);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_purity(input: &PathBuf) -> Result<ExitCode> {
    let input = read_input(input)?;
    let psi: Spinor = match &input {
        json::SpinorInput::Spinor(psi) => psi.clone(),
        json::SpinorInput::Configuration(cfg) => spinor_of(cfg).map_err(|e| anyhow!("{}", e))?,
    };
    let n = nullity(&psi).map_err(|e| anyhow!("{}", e))?;
    let pure = is_pure(&psi).map_err(|e| anyhow!("{}", e))?;
    println!("nullity: {}", n);
    println!("pure: {}", pure);
    let m = annihilator(&psi).map_err(|e| anyhow!("{}", e))?;
    println!(
        "annihilator dimension: {} (totally null: {})",
        m.dim(),
        m.is_totally_null()
    );
    if let json::SpinorInput::Configuration(cfg) = &input {
        let rep = check_identities(cfg);
        println!(
            "identities: edges {} = {}, tetrahedra {} = {} ({})",
            rep.edge_lhs,
            rep.edge_rhs,
            rep.tetra_lhs,
            rep.tetra_rhs,
            if rep.holds() { "hold" } else { "violated" }
        );
        println!("irreducible: {}", is_irreducible(cfg));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(min_d: usize, max_d: usize) -> Result<ExitCode> {
    if min_d < 2 || max_d < min_d {
        bail!("need 2 <= min-d <= max-d");
    }
    println!(
        "{:>4} {:>4} | {:>9} {:>9} {:>10} {:>10} | {:>8} {:>8}",
        "d", "2d", "odd-edge", "even-edge", "odd-tetra", "even-tetra", "max-odd", "max-even"
    );
    for d in min_d..=max_d {
        let b = feasible_k_bounds(d);
        let s = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
        println!(
            "{:>4} {:>4} | {:>9} {:>9} {:>10} {:>10} | {:>8} {:>8}",
            d,
            2 * d,
            s(b.odd_edge),
            s(b.even_edge),
            s(b.odd_tetra),
            s(b.even_tetra),
            s(b.max_odd),
            s(b.max_even)
        );
    }
    Ok(ExitCode::SUCCESS)
}

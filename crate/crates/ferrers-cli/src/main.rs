//! Command-line front end: decide tables, realize witnesses, compute
//! Hilbert tables of monomial ideals, and run the brute-force oracle.
//!
//! Exit codes are the machine contract: 0 = yes/pass, 1 = no/fail,
//! 2 = input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ferrers::engine::{
    admissible_to_witness, diagonal_osequence_ok, growth_bound_ok, is_admissible, is_ferrers,
    quick_filters, realize_ideal, FailureCertificate, FerrersDecision, FerrersWitness,
};
use ferrers::monomial::BiDegree;
use ferrers::oracle::{self, OracleLimits};
use ferrers::partition;
use ferrers::table::HilbertTable;
use ferrers::MonomialBiIdeal;

#[derive(Parser)]
#[command(
    name = "ferrers",
    about = "Hilbert functions of bigraded quotients of k[x1,x2,y1,y2]",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the filters and the witness search on a table file.
    Check {
        table: PathBuf,
        /// Emit a single JSON object (witness or certificate included).
        #[arg(long)]
        json: bool,
    },
    /// Find (or take) a witness and print the realized ideal's minimal
    /// generators.
    Realize {
        table: PathBuf,
        /// Reuse a witness JSON file instead of searching.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Hilbert table of a monomial ideal file over a rectangle.
    Hilbert {
        ideal: PathBuf,
        /// Rectangle bounds: A B.
        #[arg(long, num_args = 2, required = true, value_names = ["A", "B"])]
        bounds: Vec<usize>,
    },
    /// Slice partition of a monomial ideal at one bidegree.
    Alpha {
        ideal: PathBuf,
        /// Bidegree: a b.
        #[arg(long, num_args = 2, required = true, value_names = ["A", "B"])]
        at: Vec<usize>,
    },
    /// Admissibility verdict; on pass, the constructive witness.
    Admissible {
        table: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate partitions of h inside a box, or their sizes.
    Partitions {
        h: usize,
        /// Box sides: L1 L2.
        #[arg(long, num_args = 2, required = true, value_names = ["L1", "L2"])]
        sides: Vec<usize>,
        /// Print the set of sizes instead of the partitions.
        #[arg(long)]
        sizes: bool,
        /// Keep only the maximal sizes.
        #[arg(long, requires = "sizes")]
        maximal: bool,
    },
    /// Count (and optionally print) every realizable table on a rectangle.
    Census {
        /// Rectangle bounds: A B.
        #[arg(long, num_args = 2, required = true, value_names = ["A", "B"])]
        bounds: Vec<usize>,
        #[arg(long)]
        print_tables: bool,
    },
    /// Brute-force realizability of a table file, bypassing the witness
    /// search entirely.
    OracleCheck { table: PathBuf },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_table(path: &PathBuf) -> Result<HilbertTable, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    text.parse().map_err(|e| format!("{}: {e}", path.display()))
}

fn read_ideal(path: &PathBuf) -> Result<MonomialBiIdeal, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    MonomialBiIdeal::parse_text(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn pair(values: &[usize]) -> (usize, usize) {
    (values[0], values[1])
}

fn print_witness_grid(witness: &FerrersWitness) {
    let b = witness.bounds();
    for i in 0..=b.x {
        let row: Vec<String> = (0..=b.y)
            .map(|j| {
                let alpha = witness.alpha(i, j);
                let entries: Vec<String> = alpha.entries().iter().map(|p| p.to_string()).collect();
                format!("({})", entries.join(","))
            })
            .collect();
        println!("{}", row.join("  "));
    }
}

/// Witness JSON with the verdict folded in; `realize --witness` accepts
/// this output unchanged.
fn check_json(table: &HilbertTable, decision: &FerrersDecision) -> String {
    let filters = serde_json::json!({
        "quick": quick_filters(table).err().map(|v| v.to_string()),
        "growth_bound": growth_bound_ok(table).err().map(|v| v.to_string()),
        "osequence": diagonal_osequence_ok(table).err().map(|v| v.to_string()),
    });
    match decision {
        FerrersDecision::Yes(w) => {
            let mut obj: serde_json::Value = serde_json::from_str(&w.to_json()).unwrap();
            obj["verdict"] = "yes".into();
            obj["filters"] = filters;
            serde_json::to_string_pretty(&obj).unwrap()
        }
        FerrersDecision::No(cert) => {
            let cert_json: serde_json::Value = serde_json::from_str(&cert.to_json()).unwrap();
            let obj = serde_json::json!({
                "verdict": "no",
                "filters": filters,
                "certificate": cert_json,
            });
            serde_json::to_string_pretty(&obj).unwrap()
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Check { table, json } => {
            let t = read_table(&table)?;
            let decision = is_ferrers(&t);
            if json {
                println!("{}", check_json(&t, &decision));
            } else {
                report_filter("quick filters", quick_filters(&t).err());
                report_filter("growth bound", growth_bound_ok(&t).err());
                report_filter("diagonal O-sequence", diagonal_osequence_ok(&t).err());
                match &decision {
                    FerrersDecision::Yes(w) => {
                        println!("verdict: yes");
                        print_witness_grid(w);
                    }
                    FerrersDecision::No(cert) => {
                        println!("verdict: no");
                        println!("certificate: {}", cert.reason());
                        if let FailureCertificate::Exhausted { dead_ends, .. } = cert {
                            if let Some(d) = dead_ends.first() {
                                if let Some(cap) = &d.cap {
                                    println!(
                                        "cap at the frontier: {cap} (weight {}), required {}",
                                        cap.weight(),
                                        d.required
                                    );
                                }
                            }
                        }
                    }
                }
            }
            Ok(decision.is_yes())
        }
        Command::Realize {
            table,
            witness,
            json,
        } => {
            let t = read_table(&table)?;
            let w = match witness {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    let w = FerrersWitness::from_json(&text)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    w.validate_for(&t).map_err(|e| e.to_string())?;
                    w
                }
                None => match is_ferrers(&t) {
                    FerrersDecision::Yes(w) => w,
                    FerrersDecision::No(cert) => {
                        if json {
                            println!("{}", check_json(&t, &FerrersDecision::No(cert)));
                        } else {
                            println!("verdict: no");
                            println!("certificate: {}", cert.reason());
                        }
                        return Ok(false);
                    }
                },
            };
            let ideal = realize_ideal(&t, &w).map_err(|e| e.to_string())?;
            if json {
                let mut obj: serde_json::Value = serde_json::from_str(&w.to_json()).unwrap();
                obj["generators"] = ideal
                    .generators()
                    .iter()
                    .map(|g| serde_json::Value::String(g.to_string()))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&obj).unwrap());
            } else {
                print_witness_grid(&w);
                println!("minimal generators:");
                for g in ideal.generators() {
                    println!("  {g}");
                }
            }
            Ok(true)
        }
        Command::Hilbert { ideal, bounds } => {
            let i = read_ideal(&ideal)?;
            let (a, b) = pair(&bounds);
            print!("{}", i.hilbert_table(BiDegree::new(a, b)));
            Ok(true)
        }
        Command::Alpha { ideal, at } => {
            let i = read_ideal(&ideal)?;
            let (a, b) = pair(&at);
            match i.alpha_at(BiDegree::new(a, b)) {
                Ok(alpha) => {
                    println!("{alpha}");
                    Ok(true)
                }
                Err(e) => {
                    println!("no slice partition: {e}");
                    Ok(false)
                }
            }
        }
        Command::Admissible { table, json } => {
            let t = read_table(&table)?;
            match is_admissible(&t) {
                Ok(()) => {
                    let w = admissible_to_witness(&t).expect("admissible tables construct");
                    if json {
                        let mut obj: serde_json::Value =
                            serde_json::from_str(&w.to_json()).unwrap();
                        obj["verdict"] = "admissible".into();
                        println!("{}", serde_json::to_string_pretty(&obj).unwrap());
                    } else {
                        println!("admissible");
                        print_witness_grid(&w);
                    }
                    Ok(true)
                }
                Err(v) => {
                    if json {
                        let obj = serde_json::json!({
                            "verdict": "not admissible",
                            "violation": v.to_string(),
                        });
                        println!("{}", serde_json::to_string_pretty(&obj).unwrap());
                    } else {
                        println!("not admissible: {v}");
                    }
                    Ok(false)
                }
            }
        }
        Command::Partitions {
            h,
            sides,
            sizes,
            maximal,
        } => {
            let s = pair(&sides);
            if maximal {
                for (l1, l2) in partition::maximal_sizes(h, s) {
                    println!("({l1},{l2})");
                }
            } else if sizes {
                for (l1, l2) in partition::enumerate_sizes(h, s) {
                    println!("({l1},{l2})");
                }
            } else {
                for alpha in partition::enumerate_partitions(h, s) {
                    println!("{alpha}");
                }
            }
            Ok(true)
        }
        Command::Census {
            bounds,
            print_tables,
        } => {
            let (a, b) = pair(&bounds);
            let tables =
                oracle::enumerate_realizable_tables(BiDegree::new(a, b), &OracleLimits::default())
                    .map_err(|e| e.to_string())?;
            println!("census: {} distinct tables on ({a},{b})", tables.len());
            if print_tables {
                for t in &tables {
                    println!();
                    print!("{t}");
                }
            }
            Ok(true)
        }
        Command::OracleCheck { table } => {
            let t = read_table(&table)?;
            let realizable = oracle::brute_force_realizable(&t, &OracleLimits::default())
                .map_err(|e| e.to_string())?;
            if realizable {
                println!("realizable (brute force)");
            } else {
                println!("not realizable (brute force)");
            }
            Ok(realizable)
        }
    }
}

fn report_filter(name: &str, violation: Option<impl std::fmt::Display>) {
    match violation {
        None => println!("{name}: pass"),
        Some(v) => println!("{name}: violation: {v}"),
    }
}

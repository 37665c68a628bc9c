use clap::{Parser, Subcommand};
use families_verify::DEFAULT_SEED;
use group_core::{is_mp, is_weak_mp_linear, FiniteGroup, MpReport};
use magnus_cli::{build_builtin, builtin_patterns, parse_presentation, realize, Realized};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "magnus", version, about = "Exact group-theory toolkit: Magnus-property deciders and certificate verifications")]
struct Cli {
    /// List the builtin group names and exit.
    #[arg(long)]
    list: bool,
    /// Worker threads for the data-parallel scans (0 = library default).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Seed for the randomized components.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Magnus-property checks on finite groups.
    Mp {
        #[command(subcommand)]
        cmd: MpCmd,
    },
    /// Witness-pair certificates in the wreath product.
    Witness {
        #[command(subcommand)]
        cmd: WitnessCmd,
    },
    /// Certificate-producing verifications.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
    /// Print a Hall basis with its per-weight Witt counts.
    Hall {
        #[arg(short = 'r', long)]
        rank: usize,
        #[arg(short = 'c', long)]
        class: usize,
    },
    /// Describe a group and optionally export its multiplication table.
    Group {
        target: String,
        /// Write the multiplication-table JSON document here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MpCmd {
    /// Decide the Magnus property for a builtin name or presentation file.
    Check {
        target: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Decide the bounded variant with the identity bound.
    Weak {
        target: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum WitnessCmd {
    /// Build and verify the wreath-product witness certificate for a prime.
    Wreath {
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Re-check a serialized witness certificate without regenerating it.
    Check { file: PathBuf },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// The Hirsch-length-9 torsion-free class-3 construction.
    G9 {
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// The interpolation certificate in the free class-3 rank-2 group.
    #[command(name = "prop3.6")]
    Prop36 {
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Theta-image separation in the free abelian-by-(class-c) group.
    #[command(name = "prop4.3")]
    Prop43 {
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(short = 'c', long)]
        c: usize,
        #[arg(long, default_value_t = 3)]
        samples: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// The exterior-square separation for (class-2)-by-(class-c).
    #[command(name = "prop4.5")]
    Prop45 {
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(short = 'c', long)]
        c: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Bounded commutator-set verification in C_inf x| C_{3^c}.
    #[command(name = "example3.8")]
    Example38 {
        #[arg(short = 'c', long)]
        c: u32,
        #[arg(long)]
        l_bound: Option<i64>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// The metacyclic family sweep.
    Family {
        #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
        primes: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        classes: Vec<u32>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run every verification and write the certificate bundle.
    Suite {
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Re-check a serialized suite bundle without regenerating it.
    Bundle { file: PathBuf },
}

fn load_group(target: &str) -> Result<(FiniteGroup, String), String> {
    if let Some(result) = build_builtin(target) {
        return result
            .map(|g| (g, format!("builtin {target}")))
            .map_err(|e| e.to_string());
    }
    let text = std::fs::read_to_string(target)
        .map_err(|e| format!("{target}: not a builtin name and unreadable as a file: {e}"))?;
    // Multiplication-table documents are accepted alongside presentations.
    if target.ends_with(".json") {
        let g = group_core::json::from_json_str(&text).map_err(|e| format!("{target}: {e}"))?;
        return Ok((g, format!("table from {target}")));
    }
    let ast = parse_presentation(&text).map_err(|e| format!("{target}:{e}"))?;
    match realize(&ast).map_err(|e| format!("{target}: {e}"))? {
        Realized::Finite { group, route } => Ok((group, route)),
        Realized::Pcp { group, route } => Err(format!(
            "{target}: realizes to an infinite polycyclic group ({route}, Hirsch length {}); \
             the Magnus deciders need a finite group",
            group.hirsch_length
        )),
    }
}

fn write_json(path: &Option<PathBuf>, value: &serde_json::Value) -> Result<(), String> {
    if let Some(path) = path {
        std::fs::write(path, serde_json::to_string_pretty(value).unwrap())
            .map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn mp_json(group_desc: &str, report: &MpReport, g: &FiniteGroup) -> serde_json::Value {
    serde_json::json!({
        "group": group_desc,
        "order": g.order(),
        "verdict": report.verdict,
        "counterexample": report.counterexample.map(|(x, y)| {
            serde_json::json!({"g": g.label(x), "h": g.label(y), "indices": [x, y]})
        }),
        "bound_violation": report.bound_violation.map(|(x, y)| {
            serde_json::json!({"g": g.label(x), "h": g.label(y), "indices": [x, y]})
        }),
        "pairs_recorded": report.pair_data.len(),
    })
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    if cli.list {
        println!("builtin groups:");
        for (pattern, desc) in builtin_patterns() {
            println!("  {pattern:<20} {desc}");
        }
        return Ok(true);
    }
    let Some(command) = cli.command else {
        return Err("no subcommand given; try --help or --list".to_string());
    };
    match command {
        Command::Mp { cmd } => match cmd {
            MpCmd::Check { target, json } => {
                let (g, desc) = load_group(&target)?;
                let report = is_mp(&g);
                if report.verdict {
                    println!("MP ({desc}, order {})", g.order());
                } else {
                    let (x, y) = report.counterexample.expect("failing pair");
                    println!(
                        "NOT MP; witness g={} h={} ({desc}, order {})",
                        g.label(x),
                        g.label(y),
                        g.order()
                    );
                }
                write_json(&json, &mp_json(&desc, &report, &g))?;
                Ok(report.verdict)
            }
            MpCmd::Weak { target, json } => {
                let (g, desc) = load_group(&target)?;
                let report = is_weak_mp_linear(&g);
                if report.verdict {
                    println!(
                        "WEAK MP with the identity bound ({desc}, order {}, {} pairs)",
                        g.order(),
                        report.pair_data.len()
                    );
                } else if let Some((x, y)) = report.counterexample {
                    println!(
                        "NOT WEAK MP; no cross power-conjugacy for g={} h={}",
                        g.label(x),
                        g.label(y)
                    );
                } else if let Some((x, y)) = report.bound_violation {
                    println!(
                        "NOT WEAK MP; bound violated at g={} h={}",
                        g.label(x),
                        g.label(y)
                    );
                }
                write_json(&json, &mp_json(&desc, &report, &g))?;
                Ok(report.verdict)
            }
        },
        Command::Witness { cmd } => match cmd {
            WitnessCmd::Wreath { p, json } => {
                let cert = laurent_cyclotomic::verify_wreath_witness(p)
                    .map_err(|e| format!("p = {p}: {e}"))?;
                cert.verify().map_err(|e| e.to_string())?;
                println!("wreath witness certificate for p = {p}: VALID");
                write_json(&json, &serde_json::to_value(&cert).unwrap())?;
                Ok(true)
            }
            WitnessCmd::Check { file } => {
                let text = std::fs::read_to_string(&file)
                    .map_err(|e| format!("{}: {e}", file.display()))?;
                let cert: laurent_cyclotomic::WreathWitnessCertificate =
                    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", file.display()))?;
                match cert.verify() {
                    Ok(()) => {
                        println!("certificate for p = {}: VALID", cert.p);
                        Ok(true)
                    }
                    Err(e) => {
                        println!("certificate for p = {}: INVALID ({e})", cert.p);
                        Ok(false)
                    }
                }
            }
        },
        Command::Verify { cmd } => run_verify(cmd, cli.seed),
        Command::Group { target, json } => {
            let (g, desc) = load_group(&target)?;
            let class = group_core::nilpotency_class(&g)
                .map(|c| c.to_string())
                .unwrap_or_else(|_| "not nilpotent".to_string());
            println!(
                "{desc}: order {}, center order {}, nilpotency class {class}",
                g.order(),
                group_core::center(&g).order()
            );
            if let Some(path) = &json {
                std::fs::write(path, group_core::json::to_json_string(&g))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                println!("table written to {}", path.display());
            }
            Ok(true)
        }
        Command::Hall { rank, class } => {
            let basis = free_nilpotent::HallBasis::new(rank, class);
            let counts = basis.counts_by_weight();
            println!(
                "Hall basis for rank {rank}, class {class}: {} basic commutators {:?}",
                basis.len(),
                counts
            );
            for w in 1..=class {
                let range = basis.positions_of_weight(w);
                let names: Vec<String> =
                    range.clone().map(|i| basis.bracket_string(i)).collect();
                println!(
                    "  weight {w} (count {}, Witt {}): {}",
                    range.len(),
                    free_nilpotent::witt_number(rank as u64, w as u64),
                    names.join(" ")
                );
            }
            Ok(true)
        }
    }
}

fn run_verify(cmd: VerifyCmd, seed: u64) -> Result<bool, String> {
    match cmd {
        VerifyCmd::G9 { json } => {
            let (_, cert) = free_nilpotent::build_g9().map_err(|e| e.to_string())?;
            println!(
                "G9: Hirsch length {}, torsion-free: {}, pairing det {}, sections {:?}",
                cert.hirsch_length, cert.torsion_free, cert.pairing_det, cert.section_ranks
            );
            write_json(&json, &serde_json::to_value(&cert).unwrap())?;
            Ok(true)
        }
        VerifyCmd::Prop36 { json } => {
            let cert = free_nilpotent::verify_prop_3_6(seed).map_err(|e| e.to_string())?;
            println!(
                "prop3.6: coordinate polynomial zero on {} + {} + {} points; witness pair stands",
                cert.slice_points, cert.tensor_grid_points, cert.random_points
            );
            write_json(&json, &serde_json::to_value(&cert).unwrap())?;
            Ok(cert.holds())
        }
        VerifyCmd::Prop43 { p, c, samples, json } => {
            let cert = magnus_embedding::verify_prop_4_3(p, c, samples, seed)
                .map_err(|e| e.to_string())?;
            println!(
                "prop4.3 (p={p}, c={c}): theta formulas match, {} conjugators over {} residues, separation holds",
                cert.conjugators_checked,
                cert.residue_values.len()
            );
            write_json(&json, &serde_json::to_value(&cert).unwrap())?;
            Ok(cert.holds())
        }
        VerifyCmd::Prop45 { p, c, json } => {
            let cert =
                magnus_embedding::verify_prop_4_5(p, c, seed).map_err(|e| e.to_string())?;
            println!(
                "prop4.5 (p={p}, c={c}): wedge coefficient verified; {}",
                cert.sign_report
            );
            write_json(&json, &serde_json::to_value(&cert).unwrap())?;
            Ok(cert.holds())
        }
        VerifyCmd::Example38 { c, l_bound, json } => {
            let bound = l_bound.unwrap_or_else(|| 3i64.pow(c));
            let cert =
                families_verify::verify_example_3_8(c, bound).map_err(|e| e.to_string())?;
            println!(
                "example3.8 (c={c}, l_bound={bound}): {} box elements, {} closure-equal pairs, conclusion holds: {}",
                cert.box_elements, cert.closure_equal_pairs, cert.mp_conclusion_ok
            );
            write_json(&json, &serde_json::to_value(&cert).unwrap())?;
            Ok(cert.holds())
        }
        VerifyCmd::Family { primes, classes, json } => {
            let report = families_verify::verify_gp_family(&primes, &classes);
            for r in &report.records {
                if r.skipped {
                    println!(
                        "  p={} c={}: skipped ({})",
                        r.p,
                        r.c,
                        r.skip_reason.as_deref().unwrap_or("cap")
                    );
                } else {
                    println!(
                        "  p={} c={}: order {}, class ok: {}, gamma ok: {}, cc closed: {}, weak MP: {}, MP: {:?}",
                        r.p, r.c, r.order, r.class_ok, r.gamma_terms_ok,
                        r.cocentraliser_closed, r.weak_mp, r.plain_mp
                    );
                }
            }
            write_json(&json, &serde_json::to_value(&report).unwrap())?;
            Ok(report.all_passed())
        }
        VerifyCmd::Suite { json } => {
            let bundle = families_verify::run_full_suite(seed);
            for e in &bundle.entries {
                println!(
                    "  {:<28} {:<16} ({} ms)",
                    e.name,
                    if e.verdict == e.expected {
                        format!("{} (as expected)", e.verdict)
                    } else {
                        format!("{} [wanted {}]", e.verdict, e.expected)
                    },
                    e.runtime_ms
                );
            }
            let pass = bundle.passes();
            println!("suite: {}", if pass { "ALL PASS" } else { "FAILURES" });
            if let Some(path) = &json {
                std::fs::write(path, bundle.to_json())
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                println!("bundle written to {}", path.display());
            }
            Ok(pass)
        }
        VerifyCmd::Bundle { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| format!("{}: {e}", file.display()))?;
            let bundle = families_verify::SuiteBundle::from_json(&text)
                .map_err(|e| format!("{}: {e}", file.display()))?;
            match bundle.check_manifest() {
                Ok(()) => {
                    println!(
                        "bundle: {} entries, manifest complete, all verdicts as expected",
                        bundle.entries.len()
                    );
                    Ok(true)
                }
                Err(e) => {
                    println!("bundle INVALID: {e}");
                    Ok(false)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

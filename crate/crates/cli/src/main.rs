//! Command-line front end: group file I/O, covering verification, example
//! building, structural analysis, and deterministic report tables.
//!
//! Exit codes: 0 = computation finished (either verdict), 2 = input or
//! validation error, 3 = a configured cap or budget was exhausted.
//! Deterministic payloads go to stdout; timings go to stderr.

mod builtins;

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use ppcover_core::classes::{a_classes, m_invariant_from_table};
use ppcover_core::constructions::{
    affine_example, extraspecial_example, extraspecial_u_choices, wreath_example, AffineHChoice,
    FamilySpec,
};
use ppcover_core::covering::{
    guralnick_saxl_scan, prime_power_derangement, subgroup_lattice, verify_covering,
    verify_covering_non_normal, verify_covering_wreath, GroupTriple,
};
use ppcover_core::io::{group_from_json, group_to_json};
use ppcover_core::structure::{analyze, class_graph, GroupSummary};
use ppcover_core::{Config, Error as CoreError, PermGroup};

#[derive(Parser)]
#[command(
    name = "ppcover",
    version,
    about = "Exact permutation-group computations for prime-power covering subgroups"
)]
struct Cli {
    /// Maximum group order for full element enumeration.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    enum_cap: u64,
    /// Maximum permutation degree, including induced coset actions.
    #[arg(long, global = true, default_value_t = 10_000)]
    degree_cap: usize,
    /// Maximum group order for subgroup lattice enumeration.
    #[arg(long, global = true, default_value_t = 1_000)]
    lattice_cap: u128,
    /// Worker count (modules currently run sequentially regardless).
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Seed reserved for randomized fallbacks; no default path uses it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format for tabular commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the payload to a file (or directory, for build-example)
    /// instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the covering property for a triple of group files (A, G, U).
    /// Falls back to the class-set comparison inside A's own class table
    /// when G is not normal in A.
    VerifyCover {
        a: String,
        g: String,
        u: String,
        /// Force the non-normal comparison mode even when G is normal.
        #[arg(long)]
        non_normal: bool,
    },
    /// Structural covering check for (T wr H, T^k, diagonal U).
    VerifyCoverWreath {
        #[arg(long = "t")]
        t: String,
        #[arg(long = "h")]
        h: String,
        #[arg(long = "k")]
        k: usize,
    },
    /// Build one of the example families and write its group files plus a
    /// manifest into the --out directory.
    BuildExample {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Structural analysis of a transitive group.
    Analyze {
        g: String,
        /// Ambient overgroup acting on the same points; adds the orbit
        /// decomposition of G under it.
        #[arg(long)]
        ambient: Option<String>,
    },
    /// Find a prime-power derangement in a transitive group.
    Derangement { g: String },
    /// Class-count invariant of G, fused by an optional ambient overgroup
    /// (defaults to G itself).
    MInvariant {
        g: String,
        #[arg(long)]
        ambient: Option<String>,
        /// Print the class table as TSV instead of the summary.
        #[arg(long)]
        class_table: bool,
    },
    /// Enumerate the full subgroup lattice of a small group.
    Subgroups { g: String },
    /// Scan every proper subgroup of a nonabelian simple normal subgroup T
    /// of A for the covering property.
    GsScan { a: String, t: String },
    /// Class graph on the minimal normal subgroups of G under A.
    ClassGraph {
        a: String,
        g: String,
        /// Emit DOT text instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Tabulate verification results over a directory of built examples.
    Report { dir: PathBuf },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Affine family: translations of F_p^d extended by a linear group
    /// transitive on nonzero vectors.
    Affine {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u64,
        #[arg(long = "h-choice", value_enum, default_value_t = HChoice::Full)]
        h_choice: HChoice,
    },
    /// Extraspecial family (m = 1): Heisenberg group of order r^3 with its
    /// SL(2, r) overgroup.
    Extraspecial {
        #[arg(long)]
        r: u64,
        #[arg(long, default_value_t = 0)]
        u_index: usize,
    },
    /// Wreath family: T wr H with the diagonal subgroup in the last two
    /// coordinates.
    Wreath {
        #[arg(long = "t")]
        t: String,
        #[arg(long = "h")]
        h: String,
        #[arg(long = "k")]
        k: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HChoice {
    Full,
    Singer,
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(()) => {
            eprintln!("# elapsed_ms={}", started.elapsed().as_millis());
        }
        Err(err) => {
            eprintln!("error: {:#}", err);
            let code = match err.downcast_ref::<CoreError>() {
                Some(e) if e.is_cap_exhaustion() => 3,
                _ => 2,
            };
            std::process::exit(code);
        }
    }
}

fn config_of(cli: &Cli) -> Config {
    Config {
        enumeration_cap: cli.enum_cap,
        degree_cap: cli.degree_cap,
        lattice_order_cap: cli.lattice_cap,
        workers: cli.workers,
        seed: cli.seed,
        ..Config::default()
    }
}

fn resolve_group(arg: &str) -> anyhow::Result<PermGroup> {
    let path = Path::new(arg);
    let text = if path.exists() {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", arg))?
    } else if let Some(embedded) = builtins::lookup(arg) {
        embedded.to_string()
    } else {
        return Err(anyhow!(
            "{} is neither a file nor a built-in group (built-ins: {})",
            arg,
            builtins::NAMES.join(", ")
        ));
    };
    Ok(group_from_json(&text)?)
}

fn emit(cli: &Cli, payload: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) if !matches!(cli.command, Command::BuildExample { .. }) => {
            std::fs::write(path, payload).with_context(|| format!("writing {:?}", path))?;
        }
        _ => print!("{}", payload),
    }
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    let config = config_of(cli);
    match &cli.command {
        Command::VerifyCover { a, g, u, non_normal } => {
            let a = resolve_group(a)?;
            let g = resolve_group(g)?;
            let u = resolve_group(u)?;
            let report = if *non_normal {
                verify_covering_non_normal(&a, &g, &u, &config)?
            } else {
                match GroupTriple::new(a.clone(), g.clone(), u.clone()) {
                    Ok(triple) => verify_covering(&triple, &config)?,
                    Err(CoreError::NotNormal) => {
                        verify_covering_non_normal(&a, &g, &u, &config)?
                    }
                    Err(other) => return Err(other.into()),
                }
            };
            eprintln!("# covering_timing_ms={}", report.timing_ms);
            emit(cli, &(report.to_json() + "\n"))
        }
        Command::VerifyCoverWreath { t, h, k } => {
            let t = resolve_group(t)?;
            let h = resolve_group(h)?;
            let report = verify_covering_wreath(&t, &h, *k, &config)?;
            eprintln!("# covering_timing_ms={}", report.timing_ms);
            emit(cli, &(report.to_json() + "\n"))
        }
        Command::BuildExample { family } => {
            let outdir = cli
                .out
                .clone()
                .ok_or_else(|| anyhow!("build-example requires --out DIR"))?;
            build_example(family, &outdir, &config)
        }
        Command::Analyze { g, ambient } => {
            let g = resolve_group(g)?;
            let analysis = analyze(&g, &config)?;
            let mut value = serde_json::to_value(analysis.report())?;
            if let Some(ambient) = ambient {
                let a = resolve_group(ambient)?;
                let orbits = ppcover_core::structure::g_orbit_decomposition(&a, &g)?;
                value["ambient_orbits"] = serde_json::json!({
                    "count": orbits.len(),
                    "sizes": orbits.iter().map(|o| o.len()).collect::<Vec<_>>(),
                });
            }
            emit(cli, &(serde_json::to_string_pretty(&value)? + "\n"))
        }
        Command::Derangement { g } => {
            let g = resolve_group(g)?;
            let d = prime_power_derangement(&g, &config)?;
            let payload = serde_json::json!({
                "cycles": d.cycle_string(),
                "order": d.order() as u64,
                "prime": d.prime_power_order().prime(),
            });
            emit(cli, &(serde_json::to_string_pretty(&payload)? + "\n"))
        }
        Command::MInvariant { g, ambient, class_table } => {
            let g = resolve_group(g)?;
            let a = match ambient {
                Some(name) => resolve_group(name)?,
                None => g.clone(),
            };
            let table = a_classes(&a, &g, &config)?;
            if *class_table {
                return emit(cli, &table.to_tsv());
            }
            let report = m_invariant_from_table(&table);
            let payload = serde_json::json!({
                "per_prime": report.per_prime,
                "per_prime_excluding_identity": report.per_prime_excluding_identity(),
                "m": report.m,
                "achieving_primes": report.achieving_primes,
                "class_count": table.len(),
            });
            emit(cli, &(serde_json::to_string_pretty(&payload)? + "\n"))
        }
        Command::Subgroups { g } => {
            let g = resolve_group(g)?;
            let lattice = subgroup_lattice(&g, &config)?;
            let mut by_order: std::collections::BTreeMap<u64, usize> = Default::default();
            for h in &lattice {
                *by_order.entry(h.order() as u64).or_default() += 1;
            }
            let payload = serde_json::json!({
                "count": lattice.len(),
                "by_order": by_order,
                "subgroups": lattice.iter().map(GroupSummary::of).collect::<Vec<_>>(),
            });
            emit(cli, &(serde_json::to_string_pretty(&payload)? + "\n"))
        }
        Command::GsScan { a, t } => {
            let a = resolve_group(a)?;
            let t = resolve_group(t)?;
            let report = guralnick_saxl_scan(&a, &t, &config)?;
            emit(cli, &(serde_json::to_string_pretty(&report)? + "\n"))
        }
        Command::ClassGraph { a, g, dot } => {
            let a = resolve_group(a)?;
            let g = resolve_group(g)?;
            let graph = class_graph(&a, &g, &config)?;
            if *dot {
                emit(cli, &graph.to_dot())
            } else {
                emit(cli, &(serde_json::to_string_pretty(&graph)? + "\n"))
            }
        }
        Command::Report { dir } => {
            let table = report_table(dir, &config)?;
            emit(cli, &table)
        }
    }
}

fn build_example(
    family: &FamilyCommand,
    outdir: &Path,
    config: &Config,
) -> anyhow::Result<()> {
    std::fs::create_dir_all(outdir)?;
    let (spec, extra_files, extra_manifest) = match family {
        FamilyCommand::Affine { d, p, h_choice } => {
            let choice = match h_choice {
                HChoice::Full => AffineHChoice::Full,
                HChoice::Singer => AffineHChoice::Singer,
            };
            (affine_example(*d, *p, choice, None, config)?, vec![], serde_json::json!({}))
        }
        FamilyCommand::Extraspecial { r, u_index } => {
            let spec = extraspecial_example(*r, *u_index, config)?;
            let choices = extraspecial_u_choices(&spec.g, config)?;
            let listing: Vec<serde_json::Value> = choices
                .iter()
                .enumerate()
                .map(|(i, u)| {
                    serde_json::json!({
                        "index": i,
                        "order": u.order() as u64,
                        "generators": u
                            .generators()
                            .iter()
                            .map(|p| p.cycle_string())
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            (spec, vec![], serde_json::json!({ "u_choices": listing }))
        }
        FamilyCommand::Wreath { t, h, k } => {
            let t_group = resolve_group(t)?;
            let h_group = resolve_group(h)?;
            let spec = wreath_example(&t_group, &h_group, *k, config)?;
            let files = vec![
                ("T.json".to_string(), group_to_json(&t_group)),
                ("H.json".to_string(), group_to_json(&h_group)),
            ];
            (spec, files, serde_json::json!({ "k": k }))
        }
    };
    write_family(outdir, &spec, extra_files, extra_manifest)
}

fn write_family(
    outdir: &Path,
    spec: &FamilySpec,
    extra_files: Vec<(String, String)>,
    extra_manifest: serde_json::Value,
) -> anyhow::Result<()> {
    std::fs::write(outdir.join("A.json"), group_to_json(&spec.a) + "\n")?;
    std::fs::write(outdir.join("G.json"), group_to_json(&spec.g) + "\n")?;
    std::fs::write(outdir.join("U.json"), group_to_json(&spec.u) + "\n")?;
    for (name, contents) in extra_files {
        std::fs::write(outdir.join(name), contents + "\n")?;
    }
    let mut manifest = serde_json::json!({
        "family": serde_json::to_value(&spec.tag)?,
        "degree": spec.a.degree(),
        "order_a": spec.a.order() as u64,
        "order_g": spec.g.order() as u64,
        "order_u": spec.u.order() as u64,
        "n": (spec.a.order() / spec.g.order()) as u64,
        "index_G_U": (spec.g.order() / spec.u.order()) as u64,
        "files": { "a": "A.json", "g": "G.json", "u": "U.json" },
    });
    if let serde_json::Value::Object(extra) = extra_manifest {
        let obj = manifest.as_object_mut().unwrap();
        for (k, v) in extra {
            obj.insert(k, v);
        }
    }
    std::fs::write(
        outdir.join("manifest.json"),
        serde_json::to_string_pretty(&manifest)? + "\n",
    )?;
    println!("{}", serde_json::to_string_pretty(&manifest)?);
    Ok(())
}

fn report_table(dir: &Path, config: &Config) -> anyhow::Result<String> {
    let mut rows = String::from(
        "name\tfamily\tn\tindex_G_U\tverdict\tm\tm0\tindex_lt_n\n",
    );
    if !dir.exists() {
        return Err(anyhow!("corpus directory {:?} does not exist", dir));
    }
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.join("manifest.json").exists())
        .collect();
    entries.sort();
    for entry in entries {
        let name = entry
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        match report_row(&entry, config) {
            Ok((family, n, index, verdict, m, m0)) => {
                let ratio = if index < n { "yes" } else { "no" };
                rows.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    name, family, n, index, verdict, m, m0, ratio
                ));
            }
            Err(err) => {
                rows.push_str(&format!(
                    "{}\tERROR\t-\t-\tERROR: {:#}\t-\t-\t-\n",
                    name, err
                ));
            }
        }
    }
    Ok(rows)
}

fn report_row(
    dir: &Path,
    config: &Config,
) -> anyhow::Result<(String, u64, u64, String, String, String)> {
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("manifest.json"))?)?;
    let family = manifest["family"]["family"]
        .as_str()
        .unwrap_or("unknown")
        .to_string();
    let a = group_from_json(&std::fs::read_to_string(dir.join("A.json"))?)?;
    let g = group_from_json(&std::fs::read_to_string(dir.join("G.json"))?)?;
    let u = group_from_json(&std::fs::read_to_string(dir.join("U.json"))?)?;

    let (report, m, m0) = if family == "wreath" {
        let t = group_from_json(&std::fs::read_to_string(dir.join("T.json"))?)?;
        let h = group_from_json(&std::fs::read_to_string(dir.join("H.json"))?)?;
        let k = manifest["k"].as_u64().unwrap_or(0) as usize;
        let report = verify_covering_wreath(&t, &h, k, config)?;
        let m0 = ppcover_core::classes::m_invariant(&t, &t, config)?.m;
        (report, "-".to_string(), m0.to_string())
    } else {
        let triple = GroupTriple::new(a.clone(), g.clone(), u)?;
        let report = verify_covering(&triple, config)?;
        let m = ppcover_core::classes::m_invariant(&a, &g, config)?.m;
        let m0 = ppcover_core::classes::m_invariant(&g, &g, config)?.m;
        (report, m.to_string(), m0.to_string())
    };
    let verdict = if report.covered() { "covered" } else { "witness" };
    Ok((family, report.n, report.index_g_u, verdict.to_string(), m, m0))
}

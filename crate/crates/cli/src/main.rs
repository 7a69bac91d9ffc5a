//! `mwb`: batch front end over the matroid workbench crates.

mod load;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use families::{contract_coloops, incidence_spec, random_family, spectrum_scan, ScanEntry, ScanTarget};
use infinite_cycles::{mk_spectrum, nearly_finitary_verdict, spectrum_search, verify_i3_violation, SearchBounds};
use linear_matroids::{nearly_thin_count, FieldTag};
use matroid_core::{bases, check_axioms, circuits, AxiomSystem, IndependenceOracle, Limits, MatroidError, SystemDoc};
use matroid_ops::{
    blocks, check_unionable, difference, dual_system, smin_enumerate, spectrum, truncate_top_explicit, union,
    verify_difference_duality,
};
use periodic_graphs::{domination_witness, ray_count, Gluing, Vertex};

const SCHEMA: &str = "mwb-report/1";
const WORKERS_VAR: &str = "MWB_WORKERS";

#[derive(Parser, Serialize)]
#[command(name = "mwb", version, about = "Finite matroids, nested pairs and periodic graph cycle systems")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest ground set swept exhaustively.
    #[arg(long, global = true, default_value_t = 16)]
    cap: usize,
    /// Largest number of free edge choices in a periodic base search.
    #[arg(long, global = true, default_value_t = 20)]
    max_bits: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(clap::Args, Serialize)]
struct Profile {
    /// Gluing: `all`, `none`, inline JSON or a file.
    #[arg(long, default_value = "all")]
    glue: String,
    #[arg(long, default_value_t = 2)]
    prefix: usize,
    #[arg(long, default_value_t = 1)]
    period: usize,
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Check an axiom list (I, B or F) exhaustively.
    Axioms {
        #[arg(long)]
        system: String,
        #[arg(long, default_value = "I")]
        axioms: String,
    },
    Bases {
        #[arg(long)]
        system: String,
    },
    Circuits {
        #[arg(long)]
        system: String,
    },
    Dual {
        #[arg(long)]
        system: String,
    },
    /// Delete and contract element labels.
    Minor {
        #[arg(long)]
        system: String,
        #[arg(long, value_delimiter = ',')]
        delete: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        contract: Vec<String>,
    },
    Union {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Top truncation of a finite system, or the spectrum of a truncated family.
    Mk {
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        system: Option<String>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        profile: Profile,
    },
    /// Difference system of a nested pair.
    Diff {
        #[arg(long, requires = "inner", conflicts_with = "pair")]
        outer: Option<String>,
        #[arg(long, requires = "outer")]
        inner: Option<String>,
        #[arg(long, required_unless_present = "outer")]
        pair: Option<String>,
        #[arg(long)]
        verify_duality: bool,
    },
    /// Spectrum of a family within profile bounds, or of a finite pair.
    Spectrum {
        #[arg(long, conflicts_with = "pair", required_unless_present = "pair")]
        family: Option<String>,
        #[arg(long)]
        pair: Option<String>,
        #[command(flatten)]
        profile: Profile,
    },
    Smin {
        #[arg(long)]
        pair: String,
    },
    /// The block counterexample pair.
    Ch4 {
        #[arg(long)]
        r: usize,
    },
    Rays {
        #[arg(long)]
        family: String,
    },
    Dominate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        k: usize,
    },
    /// Augmentation failure witness for an apex over a ray.
    Bean {
        #[arg(long, default_value = "bean")]
        family: String,
        #[arg(long, default_value = "all")]
        glue: String,
    },
    /// Spectrum and nearly-finitary verdict under a partial gluing.
    PsiSpectrum {
        #[arg(long)]
        family: String,
        #[command(flatten)]
        profile: Profile,
    },
    /// Rows receiving infinitely many entries in a periodic matrix.
    Thin {
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        matrix: Option<String>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value = "gf2")]
        field: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Batch spectra, flagging value sets with holes.
    Scan {
        #[arg(long)]
        family: Vec<String>,
        #[arg(long)]
        pair: Vec<String>,
        /// Random small families to add, drawn from the seed.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[command(flatten)]
        profile: Profile,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Axioms { .. } => "axioms",
            Command::Bases { .. } => "bases",
            Command::Circuits { .. } => "circuits",
            Command::Dual { .. } => "dual",
            Command::Minor { .. } => "minor",
            Command::Union { .. } => "union",
            Command::Mk { .. } => "mk",
            Command::Diff { .. } => "diff",
            Command::Spectrum { .. } => "spectrum",
            Command::Smin { .. } => "smin",
            Command::Ch4 { .. } => "ch4",
            Command::Rays { .. } => "rays",
            Command::Dominate { .. } => "dominate",
            Command::Bean { .. } => "bean",
            Command::PsiSpectrum { .. } => "psi-spectrum",
            Command::Thin { .. } => "thin",
            Command::Scan { .. } => "scan",
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

fn explicit(sys: &dyn IndependenceOracle, limits: Limits) -> Result<Value, MatroidError> {
    Ok(to_value(&SystemDoc::explicit_from(sys, limits)?))
}

fn bounds_of(cli: &Cli, p: &Profile) -> SearchBounds {
    SearchBounds {
        prefix: p.prefix,
        period: p.period,
        max_bits: cli.max_bits,
    }
}

fn field(name: &str) -> Result<FieldTag, MatroidError> {
    FieldTag::parse(name).ok_or_else(|| MatroidError::Parse(format!("unknown field `{name}`")))
}

fn family_spectrum(cli: &Cli, family: &str, p: &Profile) -> Result<Value, MatroidError> {
    let (g, contract) = load::family(family)?;
    let gl = load::gluing(&g, &p.glue)?;
    let b = bounds_of(cli, p);
    if contract.is_empty() {
        Ok(render::graph_spectrum(&spectrum_search(&g, &gl, b)?))
    } else {
        let c = contract_coloops(&g, &gl, &contract, b)?;
        let mut v = render::graph_spectrum(&c.spectrum);
        v["contracted"] = json!(c.contracted);
        Ok(v)
    }
}

fn run(cli: &Cli) -> Result<Value, MatroidError> {
    let limits = Limits::with_sweep_cap(cli.cap);
    match &cli.command {
        Command::Axioms { system, axioms } => {
            let sys = load::system(system)?;
            let which = AxiomSystem::parse(axioms)
                .ok_or_else(|| MatroidError::Parse(format!("axiom list must be I, B or F, not `{axioms}`")))?;
            Ok(render::axioms(sys.ground(), &check_axioms(&sys, which, limits)?))
        }
        Command::Bases { system } => {
            let sys = load::system(system)?;
            Ok(json!({"bases": render::sets(sys.ground(), &bases(&sys, limits)?)}))
        }
        Command::Circuits { system } => {
            let sys = load::system(system)?;
            Ok(json!({"circuits": render::sets(sys.ground(), &circuits(&sys, limits)?)}))
        }
        Command::Dual { system } => {
            let sys = load::system(system)?;
            Ok(json!({"dual": explicit(&dual_system(&sys, limits)?, limits)?}))
        }
        Command::Minor { system, delete, contract } => {
            let m = load::system(system)?.to_oracle();
            let d = m.ground().subset_by_labels(delete)?;
            let after = m.delete(d)?;
            let c = after.ground().subset_by_labels(contract)?;
            Ok(json!({"minor": explicit(&after.contract(c)?, limits)?}))
        }
        Command::Union { left, right } => {
            let (a, b) = (load::system(left)?, load::system(right)?);
            let u = union(&a, &b, limits)?;
            let report = check_unionable(&a, &b, limits)?;
            Ok(json!({"union": explicit(&u, limits)?, "axioms": render::axioms(u.ground(), &report)}))
        }
        Command::Mk { system: Some(system), k, .. } => {
            let sys = load::system(system)?;
            Ok(json!({"truncation": explicit(&truncate_top_explicit(&sys, *k, limits)?, limits)?}))
        }
        Command::Mk { family, k, profile, .. } => {
            let (g, _) = load::family(family.as_deref().expect("clap requires a family"))?;
            let gl = load::gluing(&g, &profile.glue)?;
            Ok(render::graph_spectrum(&mk_spectrum(&g, &gl, *k, bounds_of(cli, profile))?))
        }
        Command::Diff { outer, inner, pair, verify_duality: check } => {
            let p = match (outer, inner, pair) {
                (Some(o), Some(i), _) => load::pair_of(i, o, limits)?,
                (_, _, Some(p)) => load::pair(p, limits)?,
                _ => return Err(MatroidError::Parse("give --outer and --inner, or --pair".into())),
            };
            let mut v = json!({"difference": explicit(&difference(&p, limits)?, limits)?});
            if *check {
                let d = verify_difference_duality(&p, limits)?;
                v["duality"] = json!({
                    "holds": d.holds,
                    "discrepancy": d.discrepancy.map(|s| p.ground().label_list(s)),
                });
            }
            Ok(v)
        }
        Command::Spectrum { family: Some(family), profile, .. } => family_spectrum(cli, family, profile),
        Command::Spectrum { pair, .. } => {
            let p = load::pair(pair.as_deref().expect("clap requires a pair"), limits)?;
            Ok(render::finite_spectrum(p.ground(), &spectrum(&p, limits)?))
        }
        Command::Smin { pair } => {
            let p = load::pair(pair, limits)?;
            Ok(json!({"minimal": render::sets(p.ground(), &smin_enumerate(&p, limits)?)}))
        }
        Command::Ch4 { r } => {
            let p = load::pair(&format!("ch4:{r}"), limits)?;
            let cap = Limits::with_sweep_cap(p.ground().len().max(cli.cap));
            Ok(json!({
                "blocks": render::sets(p.ground(), &blocks(*r)),
                "inner_bases": render::sets(p.ground(), &bases(p.inner(), cap)?),
                "spectrum": render::finite_spectrum(p.ground(), &spectrum(&p, cap)?),
                "axioms": render::axioms(p.ground(), &check_axioms(p.inner(), AxiomSystem::Independence, cap)?),
            }))
        }
        Command::Rays { family } => {
            let (g, _) = load::family(family)?;
            Ok(json!({"rays": ray_count(&g)?}))
        }
        Command::Dominate { family, vertex, k } => {
            let (g, _) = load::family(family)?;
            let v = Vertex::parse(&g, vertex).ok_or_else(|| MatroidError::UnknownLabel(vertex.clone()))?;
            Ok(to_value(&domination_witness(&g, v, *k)?))
        }
        Command::Bean { family, glue } => {
            let (g, _) = load::family(family)?;
            let gl = load::gluing(&g, glue)?;
            Ok(to_value(&verify_i3_violation(&g, &gl)?))
        }
        Command::PsiSpectrum { family, profile } => {
            let (g, _) = load::family(family)?;
            let gl = load::gluing(&g, &profile.glue)?;
            let mut v = family_spectrum(cli, family, profile)?;
            v["gluing"] = to_value(&gl);
            v["nearly_finitary"] = to_value(&nearly_finitary_verdict(&g, &gl));
            Ok(v)
        }
        Command::Thin { matrix: Some(m), depth, .. } => Ok(to_value(&nearly_thin_count(&load::matrix_spec(m)?, *depth)?)),
        Command::Thin { family, field: f, depth, .. } => {
            let (g, _) = load::family(family.as_deref().expect("clap requires a family"))?;
            Ok(to_value(&nearly_thin_count(&incidence_spec(&g, field(f)?), *depth)?))
        }
        Command::Scan { family, pair, random, profile } => {
            let mut entries = Vec::new();
            let canned = family.is_empty() && pair.is_empty() && *random == 0;
            let families: Vec<String> = if canned {
                ["ladder:1", "ladder:2", "ladder:3", "bean"].map(String::from).to_vec()
            } else {
                family.clone()
            };
            for f in &families {
                let (g, _) = load::family(f)?;
                let gluing = load::gluing(&g, &profile.glue)?;
                entries.push(ScanEntry { label: f.clone(), target: ScanTarget::Graph { graph: g, gluing } });
            }
            let pairs: Vec<String> = if canned { (1..=5).map(|r| format!("ch4:{r}")).collect() } else { pair.clone() };
            for p in &pairs {
                entries.push(ScanEntry { label: p.clone(), target: ScanTarget::Pair(load::pair(p, limits)?) });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            for i in 0..*random {
                let g = random_family(&mut rng);
                let gluing = Gluing::all(&g);
                entries.push(ScanEntry { label: format!("random:{i}"), target: ScanTarget::Graph { graph: g, gluing } });
            }
            let rows = spectrum_scan(&entries, bounds_of(cli, profile), Limits::with_sweep_cap(cli.cap.max(15)));
            let gaps = rows.iter().filter(|r| r.gap.is_some()).count();
            Ok(json!({"rows": rows, "gaps_found": gaps}))
        }
    }
}

fn exit_code(e: &MatroidError) -> u8 {
    if e.is_resource() {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let workers = std::env::var(WORKERS_VAR).ok().and_then(|w| w.parse::<usize>().ok());
    if let Some(n) = workers.filter(|&n| n > 0) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(&cli) {
        Ok(result) => {
            let report = json!({
                "schema": SCHEMA,
                "tool": {"name": "mwb", "version": env!("CARGO_PKG_VERSION")},
                "command": cli.command.name(),
                "config": to_value(&cli),
                "seed": cli.seed,
                "result": result,
            });
            let out = match cli.format {
                Format::Json => Ok(serde_json::to_string_pretty(&report).expect("report serializes") + "\n"),
                Format::Text => Ok(render::text(&report)),
                Format::Csv => render::csv(&report),
            };
            match out {
                Ok(text) => {
                    print!("{text}");
                    ExitCode::SUCCESS
                }
                Err(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

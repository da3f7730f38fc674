mod mu;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use trialab_core::altmap::{canonical_form, validate, AlternatingDimap, Orientation};
use trialab_core::binfun::{BinaryFunction, Coefficients, RawVector};
use trialab_core::enumerate::{enumerate_dimaps_with_cap, is_self_trial, MAX_EDGES};
use trialab_core::io::{parse_adm, parse_bf, parse_raw_adm, write_adm, write_bf};
use trialab_core::minor::{take_minor, MinorSpec};
use trialab_core::reduce::{reduce, ReductionKind};
use trialab_core::transform::{inverse_transform, transform};
use trialab_core::verify::{run_suite, tolerance_from_env, SUITES};

use mu::MuArg;

#[derive(Parser)]
#[command(name = "trialab", version, about = "Binary functions, mu-transforms and alternating dimaps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply L^[mu] to a .bf file.
    Transform {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        mu: MuArg,
        /// Apply L^[1/mu] instead.
        #[arg(long)]
        inverse: bool,
        /// Divide by the empty-set entry when it is nonzero.
        #[arg(long)]
        normalize: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Take the [mu]-minor of a .bf file at one element.
    Minor {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        mu: MuArg,
        #[arg(long)]
        element: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Operations on .adm files.
    Dimap {
        #[command(subcommand)]
        verb: DimapVerb,
    },
    /// Run verification suites; all of them when none are named.
    Verify {
        suites: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum DimapVerb {
    /// Report every structural and alternation violation.
    Validate { input: PathBuf },
    /// Write the trial of a map.
    Trial {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        times: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reduce one edge by 1, w or w2.
    Reduce {
        input: PathBuf,
        #[arg(long)]
        mu: MuArg,
        #[arg(long)]
        edge: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print loop, triloop and semiloop flags per edge.
    Classify { input: PathBuf },
    /// Every map with the given number of edges, up to isomorphism.
    Catalog {
        #[arg(long)]
        edges: usize,
        /// Directory for one .adm file per map and a summary table.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// A run that completed but whose check did not pass.
struct CheckFailed;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_function(path: &Path, tol: f64) -> Result<BinaryFunction> {
    let raw = parse_bf(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    let m = raw.dimension();
    BinaryFunction::make_with_tol(m, raw.into_values(), tol).with_context(|| format!("loading {}", path.display()))
}

fn load_dimap(path: &Path) -> Result<AlternatingDimap> {
    parse_adm(&read(path)?).with_context(|| format!("loading {}", path.display()))
}

fn cmd_transform(input: &Path, mu: MuArg, inverse: bool, normalize: bool, output: Option<&Path>) -> Result<()> {
    let raw = parse_bf(&read(input)?).with_context(|| format!("parsing {}", input.display()))?;
    let out = if inverse { inverse_transform(&raw, mu.value())? } else { transform(&raw, mu.value()) };
    let out: RawVector = if normalize && out.values()[0].norm() != 0.0 {
        let z = out.values()[0];
        RawVector::new(out.dimension(), out.values().iter().map(|v| v / z).collect())?
    } else {
        if normalize {
            eprintln!("warning: empty-set entry is zero; output left unnormalized");
        }
        out
    };
    emit(&write_bf(&out), output)
}

fn cmd_minor(input: &Path, mu: MuArg, element: usize, output: Option<&Path>, tol: f64) -> Result<()> {
    let f = load_function(input, tol)?;
    let g = take_minor(&f, MinorSpec::new(element, mu.value())?, tol)?;
    emit(&write_bf(&g), output)
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_classify(input: &Path) -> Result<()> {
    let g = load_dimap(input)?;
    println!(
        "vertices={} faces={} edges={} components={} genus={:?}",
        g.vertex_count(),
        g.face_count(),
        g.edge_count(),
        g.component_count(),
        g.genus_profile()?
    );
    let faces = g.faces();
    let cw = faces.iter().filter(|f| f.orientation == Orientation::Clockwise).count();
    println!("anticlockwise_faces={} clockwise_faces={cw}", faces.len() - cw);
    println!("edge tail head ultraloop 1-loop w-loop w2-loop triloop proper-triloop 1-semi w-semi w2-semi proper-semi");
    for (e, edge) in g.edges().iter().enumerate() {
        let c = g.classify_edge(e)?;
        let (t, h) = g.endpoints(e)?;
        println!(
            "{} {t} {h} {} {} {} {} {} {} {} {} {} {}",
            edge.label,
            flag(c.is_ultraloop),
            flag(c.is_1loop),
            flag(c.is_omega_loop),
            flag(c.is_omega2_loop),
            flag(c.is_triloop),
            flag(c.is_proper_triloop),
            flag(c.is_mu_semiloop(ReductionKind::One)),
            flag(c.is_mu_semiloop(ReductionKind::Omega)),
            flag(c.is_mu_semiloop(ReductionKind::Omega2)),
            flag(c.is_proper_semiloop),
        );
    }
    Ok(())
}

fn cmd_catalog(edges: usize, output: Option<&Path>) -> Result<()> {
    let catalog = enumerate_dimaps_with_cap(edges, MAX_EDGES)?;
    let mut table = String::from("index vertices faces components genus self_trial form\n");
    for (i, g) in catalog.maps.iter().enumerate() {
        table.push_str(&format!(
            "{i} {} {} {} {:?} {} {}\n",
            g.vertex_count(),
            g.face_count(),
            g.component_count(),
            g.genus_profile()?,
            flag(is_self_trial(g)),
            canonical_form(g)
        ));
    }
    table.push_str(&format!("total {}\n", catalog.len()));
    for (key, n) in &catalog.counts {
        table.push_str(&format!(
            "count components={} genus={:?} self_trial={} -> {n}\n",
            key.components,
            key.genus_profile,
            flag(key.self_trial)
        ));
    }
    if let Some(dir) = output {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (i, g) in catalog.maps.iter().enumerate() {
            let path = dir.join(format!("k{edges}_{i:03}.adm"));
            fs::write(&path, write_adm(g)).with_context(|| format!("writing {}", path.display()))?;
        }
        let path = dir.join("summary.txt");
        fs::write(&path, &table).with_context(|| format!("writing {}", path.display()))?;
    }
    print!("{table}");
    Ok(())
}

fn run(cli: Cli) -> Result<std::result::Result<(), CheckFailed>> {
    let tol = tolerance_from_env().map_err(|e| anyhow!(e))?;
    match cli.command {
        Command::Transform { input, mu, inverse, normalize, output } => {
            cmd_transform(&input, mu, inverse, normalize, output.as_deref())?
        }
        Command::Minor { input, mu, element, output } => cmd_minor(&input, mu, element, output.as_deref(), tol)?,
        Command::Dimap { verb } => match verb {
            DimapVerb::Validate { input } => {
                let raw = parse_raw_adm(&read(&input)?).with_context(|| format!("parsing {}", input.display()))?;
                let report = validate(&raw);
                if !report.is_valid() {
                    println!("invalid: {report}");
                    return Ok(Err(CheckFailed));
                }
                println!("valid");
            }
            DimapVerb::Trial { input, times, output } => {
                let g = load_dimap(&input)?;
                emit(&write_adm(&g.trial_power(times)), output.as_deref())?
            }
            DimapVerb::Reduce { input, mu, edge, output } => {
                let kind = mu.reduction_kind().ok_or_else(|| anyhow!("dimap reductions take mu in {{1, w, w2}}, got {mu}"))?;
                let g = load_dimap(&input)?;
                emit(&write_adm(&reduce(&g, &edge, kind)?), output.as_deref())?
            }
            DimapVerb::Classify { input } => cmd_classify(&input)?,
            DimapVerb::Catalog { edges, output } => cmd_catalog(edges, output.as_deref())?,
        },
        Command::Verify { suites, seed } => {
            let names: Vec<String> = if suites.is_empty() { SUITES.iter().map(|s| s.to_string()).collect() } else { suites };
            if let Some(bad) = names.iter().find(|n| !SUITES.contains(&n.as_str())) {
                bail!("unknown suite `{bad}`; known suites: {}", SUITES.join(", "));
            }
            let mut all = true;
            for name in &names {
                let result = run_suite(name, seed, tol).expect("name checked");
                println!("{result}");
                all &= result.passed;
            }
            if !all {
                return Ok(Err(CheckFailed));
            }
        }
    }
    Ok(Ok(()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CheckFailed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

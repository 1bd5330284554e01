//! `dualcx`: exact dual-complex toolkit.
//!
//! Machine-readable JSON goes to stdout, human summaries to stderr. Exit
//! codes: 0 success/certified, 1 invalid input, 2 certification failure.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use dualcx_core::arrangement::CertificationConfig;
use dualcx_core::blowup::BlowupError;
use dualcx_core::group::{q_superperfect_report, Presentation, TwoCycle};
use dualcx_core::homology::{homology, HomologyProfile};
use dualcx_core::io::{parse_complex_json, ComplexInput, CyclesFile};
use dualcx_core::rational::{parse_rational, Rational};
use dualcx_core::surgery::verify_roundtrip_seeded;
use dualcx_core::{
    run_construction_with, small_resolution_trace, Arrangement, LocalModel, SimplicialComplex,
};

#[derive(Parser)]
#[command(
    name = "dualcx",
    version,
    about = "Exact dual-complex realization, homology, arrangements, surgeries, and presentation complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Realize a simplicial complex as the dual complex of an iterated
    /// blow-up of a general-position hyperplane arrangement.
    Realize {
        /// Simplicial complex JSON ({"vertices": [...], "facets": [[...]]}).
        input: PathBuf,
        /// Construction dimension n (ambient is P^{n+1}); defaults to dim C.
        #[arg(long)]
        ambient_dim: Option<usize>,
        /// Write the full trace JSON here.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Comma-separated rational nodes (e.g. 0,1,2 or 1/2,-3,7/4).
        #[arg(long)]
        nodes: Option<String>,
        /// Seed for sampled certification checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Homology profile of a simplicial or delta complex file.
    Homology {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Ring::Z)]
        ring: Ring,
    },
    /// Build and certify a power-basis hyperplane arrangement.
    Arrangement {
        /// Comma-separated hyperplane labels.
        #[arg(long)]
        labels: String,
        /// Construction dimension n (hyperplanes live in P^{n+1}).
        #[arg(long = "dim")]
        dim: usize,
        /// Comma-separated rational nodes (default 0,1,2,...).
        #[arg(long)]
        nodes: Option<String>,
        /// Certify every stratum dimension, not just general position.
        #[arg(long)]
        check: bool,
    },
    /// Double-cover surgeries.
    Surgery {
        #[command(subcommand)]
        command: SurgeryCommand,
    },
    /// Local singularity chart models.
    Localmodel {
        #[command(subcommand)]
        command: LocalModelCommand,
    },
    /// Presentation complex pipeline for a finitely presented group.
    Group {
        /// Comma-separated single-letter generators (e.g. a,b).
        #[arg(long)]
        gens: String,
        /// Relator word; repeat for several (uppercase = inverse).
        #[arg(long = "rels")]
        rels: Vec<String>,
        /// JSON file {"cycles": [[...]]} of 2-cycles to cone off.
        #[arg(long)]
        cycles: Option<PathBuf>,
        /// Write the double-barycentric simplicialization here.
        #[arg(long)]
        emit_complex: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SurgeryCommand {
    /// Double the top cells, reselect preimages, verify the identity.
    Roundtrip {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum LocalModelCommand {
    /// Resolve the nodal pair with the given number of divisor branches.
    Resolve {
        #[arg(long)]
        branches: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Ring {
    #[value(name = "Z", alias = "z")]
    Z,
    #[value(name = "Q", alias = "q")]
    Q,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            std::process::exit(0);
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    match dispatch(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Realize {
            input,
            ambient_dim,
            trace,
            nodes,
            seed,
        } => realize(
            &input,
            ambient_dim,
            trace.as_deref(),
            nodes.as_deref(),
            seed,
        ),
        Command::Homology { input, ring } => homology_cmd(&input, ring),
        Command::Arrangement {
            labels,
            dim,
            nodes,
            check,
        } => arrangement_cmd(&labels, dim, nodes.as_deref(), check),
        Command::Surgery {
            command: SurgeryCommand::Roundtrip { input, seed },
        } => surgery_roundtrip(&input, seed),
        Command::Localmodel {
            command: LocalModelCommand::Resolve { branches },
        } => localmodel_resolve(branches),
        Command::Group {
            gens,
            rels,
            cycles,
            emit_complex,
        } => group_cmd(&gens, &rels, cycles.as_deref(), emit_complex.as_deref()),
    }
}

fn read_complex(path: &Path) -> Result<ComplexInput> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_complex_json(&text).map_err(|e| anyhow!(e))
}

fn read_simplicial(path: &Path) -> Result<SimplicialComplex> {
    match read_complex(path)? {
        ComplexInput::Simplicial(c) => Ok(c),
        ComplexInput::Delta(_) => {
            bail!(
                "{} holds a delta complex; this command needs a simplicial complex",
                path.display()
            )
        }
    }
}

fn parse_nodes(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .map(|s| parse_rational(s).ok_or_else(|| anyhow!("invalid rational `{s}`")))
        .collect()
}

fn emit(value: &serde_json::Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn realize(
    input: &Path,
    ambient_dim: Option<usize>,
    trace_path: Option<&Path>,
    nodes: Option<&str>,
    seed: u64,
) -> Result<i32> {
    let c = read_simplicial(input)?;
    let nodes = nodes.map(parse_nodes).transpose()?;
    let cfg = CertificationConfig {
        seed,
        ..CertificationConfig::default()
    };
    let trace = match run_construction_with(&c, ambient_dim, nodes, &cfg) {
        Ok(trace) => trace,
        Err(
            e @ (BlowupError::EmptyInput
            | BlowupError::DuplicateLabel(_)
            | BlowupError::AmbientTooSmall { .. }
            | BlowupError::StepOutOfRange { .. }),
        ) => return Err(e.into()),
        Err(BlowupError::Arrangement(e)) => {
            use dualcx_core::arrangement::ArrangementError::*;
            match e {
                Certification { .. } | NotGeneralPosition(_) => {
                    eprintln!("certification failure: {e}");
                    return Ok(2);
                }
                other => return Err(other.into()),
            }
        }
        Err(e) => {
            // internal invariant breach: a claimed identity failed
            eprintln!("certification failure: {e}");
            return Ok(2);
        }
    };
    let value = serde_json::to_value(&trace)?;
    if let Some(path) = trace_path {
        std::fs::write(path, serde_json::to_string_pretty(&value)?)
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    emit(&value)?;
    eprintln!(
        "realized in {} steps; certificate: {}",
        trace.steps.len(),
        if trace.certified { "ok" } else { "FAILED" }
    );
    Ok(if trace.certified { 0 } else { 2 })
}

fn profile_json(profile: &HomologyProfile, ring: Ring) -> serde_json::Value {
    match ring {
        Ring::Z => serde_json::to_value(profile).expect("profile serializes"),
        Ring::Q => json!({ "betti": profile.betti }),
    }
}

fn homology_cmd(input: &Path, ring: Ring) -> Result<i32> {
    let profile = match read_complex(input)? {
        ComplexInput::Simplicial(c) => homology(&c)?,
        ComplexInput::Delta(d) => homology(&d)?,
    };
    emit(&profile_json(&profile, ring))?;
    eprintln!("betti: {:?}", profile.betti);
    Ok(0)
}

fn arrangement_cmd(labels: &str, dim: usize, nodes: Option<&str>, check: bool) -> Result<i32> {
    let labels: Vec<String> = labels.split(',').map(|s| s.trim().to_string()).collect();
    let nodes = nodes.map(parse_nodes).transpose()?;
    let a = Arrangement::build(&labels, dim, nodes)?;
    let gp = a.verify_general_position();
    let mut certified = None;
    if check {
        certified = Some(match a.initial_dual_complex() {
            Ok(complex) => {
                json!({ "ok": true, "dual_complex_f_vector": complex.f_vector() })
            }
            Err(e) => json!({ "ok": false, "error": e.to_string() }),
        });
    }
    let ok = gp.in_general_position
        && certified
            .as_ref()
            .is_none_or(|c| c["ok"].as_bool() == Some(true));
    emit(&json!({
        "arrangement": a.summary(),
        "general_position": gp,
        "strata_certification": certified,
    }))?;
    eprintln!(
        "general position: {}; certification: {}",
        gp.in_general_position,
        if check {
            if ok {
                "ok"
            } else {
                "FAILED"
            }
        } else {
            "skipped"
        }
    );
    Ok(if ok { 0 } else { 2 })
}

fn surgery_roundtrip(input: &Path, seed: u64) -> Result<i32> {
    let c = read_simplicial(input)?;
    let report = verify_roundtrip_seeded(&c, seed)?;
    emit(&serde_json::to_value(&report)?)?;
    eprintln!(
        "roundtrip {} over {} choice functions ({})",
        if report.holds { "holds" } else { "FAILED" },
        report.choices_checked,
        if report.exhaustive {
            "exhaustive"
        } else {
            "sampled"
        }
    );
    Ok(if report.holds { 0 } else { 2 })
}

fn localmodel_resolve(branches: usize) -> Result<i32> {
    let model = LocalModel::nodal_pair(branches)?;
    let trace = small_resolution_trace(&model)?;
    let ok = trace.certificate.holds();
    emit(&serde_json::to_value(&trace)?)?;
    eprintln!(
        "resolved {} branches at depth {} with {} leaves; certificate: {}",
        branches,
        trace.depth,
        trace.leaves,
        if ok { "ok" } else { "FAILED" }
    );
    Ok(if ok { 0 } else { 2 })
}

fn group_cmd(
    gens: &str,
    rels: &[String],
    cycles_path: Option<&Path>,
    emit_complex: Option<&Path>,
) -> Result<i32> {
    let gens: Vec<String> = gens.split(',').map(|s| s.trim().to_string()).collect();
    let p = Presentation::parse(&gens, rels)?;
    let cycles: Option<Vec<TwoCycle>> = match cycles_path {
        None => None,
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            let file: CyclesFile = serde_json::from_str(&text)
                .with_context(|| format!("invalid cycles file {}", path.display()))?;
            Some(
                file.cycles
                    .into_iter()
                    .map(|coefficients| TwoCycle { coefficients })
                    .collect(),
            )
        }
    };
    let report = q_superperfect_report(&p, cycles.as_deref())?;
    if let Some(path) = emit_complex {
        std::fs::write(path, serde_json::to_string_pretty(&report.simplicial)?)
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    let mut value = serde_json::to_value(&report)?;
    value["simplicial_f_vector"] = serde_json::to_value(report.simplicial.f_vector())?;
    emit(&value)?;
    eprintln!(
        "q-superperfect proxy: {}; q-acyclic: {}",
        report.q_superperfect_proxy, report.q_acyclic
    );
    Ok(0)
}

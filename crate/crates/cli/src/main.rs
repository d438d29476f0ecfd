//! `helix` — normal loops on a tetrahedron, their chord diagrams, disk
//! complexes, and certified topological indices.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use helix_cli::catalog::{catalog, find_loop};
use helix_cli::sweep::{run_sweep, SweepConfig};
use helix_core::chords::{chords_from_loop, synthetic_chords, ChordFamilies};
use helix_core::complex::{build_complex, complex_for_loop, FlagComplex};
use helix_core::json::{
    certificate_record, chord_record, complex_record, loop_record,
};
use helix_core::render::chord_diagram_svg;
use helix_core::topology::determine_index;

#[derive(Parser)]
#[command(
    name = "helix",
    version,
    about = "Normal loops on the boundary of a tetrahedron: enumeration, chord \
             diagrams, disk complexes, and certified indices"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Target {
    /// Loop identifier from the catalog, e.g. "12-0".
    #[arg(required_unless_present = "synthetic")]
    id: Option<String>,
    /// Use the synthetic chord diagram with the given parameters instead
    /// of an enumerated loop.
    #[arg(long, num_args = 2, value_names = ["K", "OFFSET"], conflicts_with = "id")]
    synthetic: Option<Vec<usize>>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Svg,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// List every normal loop up to a length, one JSON record per line.
    Enumerate {
        #[arg(long, default_value_t = 24)]
        max_length: usize,
        /// Write into this directory instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the catalog record (class, coordinates, traversal) of a loop.
    Classify {
        id: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the two chord families of a spiral boundary.
    Chords {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the compatibility graph and clique list of the disk complex.
    Complex {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide the index of the disk complex and print the certificate.
    Index {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the chord diagram (SVG) or the compatibility graph (DOT).
    Render {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = RenderFormat::Svg)]
        format: RenderFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification sweep and emit its artifact bundle.
    Verify {
        #[arg(long, default_value_t = 40)]
        max_length: usize,
        /// Write the whole bundle into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Target {
    fn name(&self) -> String {
        match (&self.id, &self.synthetic) {
            (Some(id), _) => id.clone(),
            (None, Some(p)) => format!("synthetic-{}-{}", p[0], p[1]),
            (None, None) => unreachable!("clap enforces one of id/--synthetic"),
        }
    }

    fn families(&self) -> Result<ChordFamilies, String> {
        match (&self.id, &self.synthetic) {
            (Some(id), _) => {
                let lp = find_loop(id)?;
                chords_from_loop(&lp).map_err(|e| format!("loop {id}: {e}"))
            }
            (None, Some(p)) => synthetic_chords(p[0], p[1]).map_err(|e| e.to_string()),
            (None, None) => unreachable!("clap enforces one of id/--synthetic"),
        }
    }

    fn complex(&self) -> Result<FlagComplex, String> {
        match (&self.id, &self.synthetic) {
            (Some(id), _) => {
                let lp = find_loop(id)?;
                complex_for_loop(&lp).map_err(|e| format!("loop {id}: {e}"))
            }
            (None, Some(p)) => {
                Ok(build_complex(&synthetic_chords(p[0], p[1]).map_err(|e| e.to_string())?))
            }
            (None, None) => unreachable!("clap enforces one of id/--synthetic"),
        }
    }
}

fn emit(out: &Option<PathBuf>, filename: &str, bytes: &[u8]) -> Result<(), String> {
    match out {
        None => std::io::stdout().write_all(bytes).map_err(|e| e.to_string()),
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| format!("cannot create {dir:?}: {e}"))?;
            let path = dir.join(filename);
            std::fs::write(&path, bytes).map_err(|e| format!("cannot write {path:?}: {e}"))
        }
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> Vec<u8> {
    let mut bytes = serde_json::to_vec(value).expect("records serialize");
    bytes.push(b'\n');
    bytes
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Enumerate { max_length, out } => {
            let mut bytes = Vec::new();
            for (id, lp) in catalog(max_length) {
                let rec = loop_record(&lp, id).map_err(|e| e.to_string())?;
                bytes.extend_from_slice(&json_line(&rec));
            }
            emit(&out, "loops.jsonl", &bytes)?;
        }
        Cmd::Classify { id, out } => {
            let lp = find_loop(&id)?;
            let rec = loop_record(&lp, id.clone()).map_err(|e| e.to_string())?;
            emit(&out, &format!("{id}.json"), &json_line(&rec))?;
        }
        Cmd::Chords { target, out } => {
            let rec = chord_record(&target.families()?).map_err(|e| e.to_string())?;
            emit(&out, &format!("chords-{}.json", target.name()), &json_line(&rec))?;
        }
        Cmd::Complex { target, format, out } => {
            let complex = target.complex()?;
            match format {
                GraphFormat::Json => {
                    let rec = complex_record(&complex, helix_cli::capacity_from_env()?)
                        .map_err(|e| e.to_string())?;
                    emit(&out, &format!("complex-{}.json", target.name()), &json_line(&rec))?;
                }
                GraphFormat::Dot => {
                    let dot = complex.graph().to_dot();
                    emit(&out, &format!("complex-{}.dot", target.name()), dot.as_bytes())?;
                }
            }
        }
        Cmd::Index { target, out } => {
            let complex = target.complex()?;
            let result = determine_index(&complex, helix_cli::capacity_from_env()?)
                .map_err(|e| e.to_string())?;
            let rec = certificate_record(&result);
            emit(&out, &format!("certificate-{}.json", target.name()), &json_line(&rec))?;
        }
        Cmd::Render { target, format, out } => match format {
            RenderFormat::Svg => {
                let svg = chord_diagram_svg(&target.families()?);
                emit(&out, &format!("{}.svg", target.name()), svg.as_bytes())?;
            }
            RenderFormat::Dot => {
                let dot = target.complex()?.graph().to_dot();
                emit(&out, &format!("{}.dot", target.name()), dot.as_bytes())?;
            }
        },
        Cmd::Verify { max_length, out } => {
            let cfg = SweepConfig { max_length, capacity: helix_cli::capacity_from_env()? };
            let outcome = run_sweep(&cfg).map_err(|e| e.to_string())?;
            for c in &outcome.checks {
                eprintln!(
                    "check {} ({}): {} \u{2014} {}",
                    c.id,
                    c.name,
                    if c.pass { "PASS" } else { "FAIL" },
                    c.detail
                );
            }
            if let Some(dir) = &out {
                for (name, bytes) in &outcome.files {
                    let path = dir.join(name);
                    if let Some(parent) = path.parent() {
                        std::fs::create_dir_all(parent)
                            .map_err(|e| format!("cannot create {parent:?}: {e}"))?;
                    }
                    std::fs::write(&path, bytes)
                        .map_err(|e| format!("cannot write {path:?}: {e}"))?;
                }
                eprintln!("bundle of {} files written to {}", outcome.files.len(), dir.display());
            }
            std::io::stdout()
                .write_all(&outcome.files["report.json"])
                .map_err(|e| e.to_string())?;
            if !outcome.passed {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

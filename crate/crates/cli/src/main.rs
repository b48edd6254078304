use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fanoscope::discriminant::{assemble_global, export_json, render_svg};
use fanoscope::gamma::{bar_t_sections, solve};
use fanoscope::invariants::analyze;
use fanoscope::io::load_manifest;
use fanoscope::minkowski::enumerate_smooth_decompositions;
use fanoscope::{Error, Result};
use fanoscope_cli::batch::{
    all_choices, database_ids, load_database, run_table, verify24, write_identity_csv, write_table_csv, RowStatus,
};
use fanoscope_cli::input::{build_data, load_input, method1_with_choice, polytope_name, DecompositionArg, Input};
use fanoscope_cli::{error_json, exit_code};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "fanoscope", version, about = "Invariants of torus fibration models of Fano threefolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree, node counts, Euler and Betti numbers and the Fano index.
    Analyze {
        /// Polytope file (JSON or text matrix) or fixture.
        input: Option<PathBuf>,
        /// `auto` for every choice, or one decomposition index per facet.
        #[arg(long)]
        decomposition: Option<DecompositionArg>,
        /// Degeneration fixture to analyze instead of a polytope.
        #[arg(long, conflicts_with = "input")]
        fixture: Option<PathBuf>,
    },
    /// Smooth Minkowski decompositions of the facets of a polytope.
    Decompositions {
        polytope: PathBuf,
        #[arg(long)]
        facet: Option<usize>,
    },
    /// Checks Σ ℓ(E)·ℓ(E★) = 24 over the reflexive database.
    Verify24 {
        #[arg(long, env = "FANOSCOPE_DB")]
        db: PathBuf,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        parallel: Option<usize>,
    },
    /// Dimension and basis of Γ, and b₂.
    Gamma {
        input: PathBuf,
        #[arg(long)]
        decomposition: Option<DecompositionArg>,
    },
    /// The discriminant graph as JSON, with SVG drawings on request.
    Discriminant {
        input: PathBuf,
        #[arg(long)]
        decomposition: Option<DecompositionArg>,
        /// Directory for `global.svg` and one `slab_<i>.svg` per slab.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Replays a table manifest as CSV.
    Table {
        manifest: PathBuf,
        #[arg(long, env = "FANOSCOPE_DB")]
        db: Option<PathBuf>,
        #[arg(long)]
        parallel: Option<usize>,
    },
}

fn workers(parallel: Option<usize>) -> usize {
    parallel
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1)
}

fn single_choice(arg: &Option<DecompositionArg>) -> Result<Option<&[usize]>> {
    match arg {
        None => Ok(None),
        Some(DecompositionArg::List(c)) => Ok(Some(c)),
        Some(DecompositionArg::Auto) => Err(Error::Validation(
            "`auto` is only accepted by analyze".into(),
        )),
    }
}

fn pretty(v: &impl serde::Serialize) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Io(e.to_string()))
}

fn cmd_analyze(input: Option<PathBuf>, decomposition: Option<DecompositionArg>, fixture: Option<PathBuf>) -> Result<String> {
    let path = fixture
        .or(input)
        .ok_or_else(|| Error::Validation("analyze needs a polytope or --fixture".into()))?;
    let parsed = load_input(&path)?;
    if let (Some(DecompositionArg::Auto), Input::Polytope(file)) = (&decomposition, &parsed) {
        let name = polytope_name(file, &path);
        let reports: Vec<Value> = all_choices(&file.polytope)?
            .into_iter()
            .map(|c| {
                let result = method1_with_choice(&name, &file.polytope, &c)
                    .and_then(|d| analyze(&d, &Default::default()));
                match result {
                    Ok(r) => json!({ "choice": c, "report": r }),
                    Err(e) => json!({ "choice": c, "error": e.kind(), "message": e.to_string() }),
                }
            })
            .collect();
        return pretty(&reports);
    }
    let (data, known) = build_data(&parsed, &path, single_choice(&decomposition)?)?;
    pretty(&analyze(&data, &known)?)
}

fn cmd_decompositions(path: &Path, facet: Option<usize>) -> Result<String> {
    let Input::Polytope(file) = load_input(path)? else {
        return Err(Error::Validation("decompositions needs a polytope file".into()));
    };
    let decs = (0..file.polytope.facets().len())
        .map(|f| {
            file.polytope
                .facet_polygon(f)
                .map(|q| enumerate_smooth_decompositions(&q))
        })
        .collect::<Result<Vec<_>>>()?;
    let facets: Vec<usize> = match facet {
        Some(f) if f >= decs.len() => {
            return Err(Error::Validation(format!(
                "facet {} out of range; the polytope has {}",
                f,
                decs.len()
            )))
        }
        Some(f) => vec![f],
        None => (0..decs.len()).collect(),
    };
    let out: Vec<Value> = facets
        .into_iter()
        .map(|f| json!({ "facet": f, "count": decs[f].len(), "decompositions": decs[f] }))
        .collect();
    pretty(&out)
}

fn cmd_verify24(db: &Path, parallel: Option<usize>) -> Result<(String, bool)> {
    let (entries, warning) = load_database(db, None)?;
    if let Some(w) = warning {
        eprintln!("{}", json!({ "warning": w }));
    }
    let list: Vec<_> = entries.into_iter().collect();
    let rows = verify24(&list, workers(parallel))?;
    let mut buf = Vec::new();
    write_identity_csv(&rows, &mut buf)?;
    Ok((String::from_utf8_lossy(&buf).into_owned(), rows.iter().all(|r| r.pass)))
}

fn cmd_gamma(path: &Path, decomposition: Option<DecompositionArg>) -> Result<String> {
    let parsed = load_input(path)?;
    let (data, _) = build_data(&parsed, path, single_choice(&decomposition)?)?;
    let solution = solve(&data)?;
    let fast = match bar_t_sections(&data) {
        Ok(n) => json!(n),
        Err(Error::FastPathInapplicable(_)) => Value::Null,
        Err(e) => return Err(e),
    };
    pretty(&json!({
        "dimension": solution.dimension,
        "b2": solution.b2,
        "basis": solution.basis,
        "bar_t_sections": fast,
    }))
}

fn cmd_discriminant(path: &Path, decomposition: Option<DecompositionArg>, svg: Option<PathBuf>) -> Result<String> {
    let parsed = load_input(path)?;
    let (data, _) = build_data(&parsed, path, single_choice(&decomposition)?)?;
    let global = assemble_global(&data)?;
    if let Some(dir) = svg {
        std::fs::create_dir_all(&dir).map_err(|e| Error::Io(format!("{}: {}", dir.display(), e)))?;
        let write = |name: String, body: String| {
            let target = dir.join(name);
            std::fs::write(&target, body).map_err(|e| Error::Io(format!("{}: {}", target.display(), e)))
        };
        write("global.svg".into(), render_svg(&global.graph, None))?;
        for piece in &global.pieces {
            write(format!("slab_{}.svg", piece.slab), render_svg(&global.graph, Some(piece.slab)))?;
        }
    }
    let graph: Value = serde_json::from_str(&export_json(&global.graph)?).map_err(|e| Error::Io(e.to_string()))?;
    pretty(&json!({ "census": global.census, "graph": graph }))
}

fn cmd_table(manifest_path: &Path, db: Option<PathBuf>, parallel: Option<usize>) -> Result<(String, bool)> {
    let manifest = load_manifest(manifest_path)?;
    let base = manifest_path.parent().unwrap_or_else(|| Path::new("."));
    let ids = database_ids(&manifest);
    let database = match db {
        Some(p) if !ids.is_empty() => {
            let (entries, warning) = load_database(&p, Some(&ids))?;
            if let Some(w) = warning {
                eprintln!("{}", json!({ "warning": w }));
            }
            Some(entries)
        }
        _ => None,
    };
    let rows = run_table(&manifest, base, database.as_ref(), workers(parallel))?;
    let mut ok = true;
    for r in &rows {
        if matches!(r.status, RowStatus::Mismatch | RowStatus::Failed) {
            ok = false;
            eprintln!("{}", serde_json::to_string(r).map_err(|e| Error::Io(e.to_string()))?);
        }
    }
    let mut buf = Vec::new();
    write_table_csv(&rows, &mut buf)?;
    Ok((String::from_utf8_lossy(&buf).into_owned(), ok))
}

fn run(cli: Cli) -> Result<(String, bool)> {
    match cli.command {
        Command::Analyze {
            input,
            decomposition,
            fixture,
        } => cmd_analyze(input, decomposition, fixture).map(|s| (s, true)),
        Command::Decompositions { polytope, facet } => cmd_decompositions(&polytope, facet).map(|s| (s, true)),
        Command::Verify24 { db, parallel } => cmd_verify24(&db, parallel),
        Command::Gamma { input, decomposition } => cmd_gamma(&input, decomposition).map(|s| (s, true)),
        Command::Discriminant {
            input,
            decomposition,
            svg,
        } => cmd_discriminant(&input, decomposition, svg).map(|s| (s, true)),
        Command::Table { manifest, db, parallel } => cmd_table(&manifest, db, parallel),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            if !out.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", error_json(&e));
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

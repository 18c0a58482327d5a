//! Subcommands.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use tilework::io::{
    self, AssemblyDocument, IoError, MovieDocument, RngDoc, SystemDocument, TraceDocument,
    WindowDoc,
};
use tilework::render::{render_svg, RenderError, RenderOptions};
use tilework::simcheck::{run_checks, CheckKind, SimBounds, Verdict};
use tilework::systems::{self, ScenarioError, ScenarioResult};
use tilework::{
    check_directed, explore_producibles, extract_movie, find_matching_window_pair, frontier, pump,
    random_run, run_trace, splice, Assembly, AssemblyTrace, Dim, DirectednessVerdict,
    ExploreConfig, ExploreError, ModelVariant, Point, Repetitions, SpliceError, SpliceMode,
    SpliceOptions, TileSystem, TraceError, Validation, Window,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    Fail = 1,
    Unknown = 2,
    Usage = 3,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error(transparent)]
    Splice(#[from] SpliceError),
    #[error(transparent)]
    Explore(#[from] ExploreError),
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error("{0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) | CliError::Io(_) | CliError::Render(_) | CliError::Output(_) => {
                ExitCode::Usage
            }
            CliError::Explore(_) => ExitCode::Unknown,
            CliError::Trace(_) | CliError::Splice(_) | CliError::Scenario(_) => ExitCode::Fail,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::Io(e) => e.kind(),
            CliError::Trace(_) => "InvalidStep",
            CliError::Splice(e) => e.kind(),
            CliError::Explore(ExploreError::StateBudgetExceeded { .. }) => "StateBudgetExceeded",
            CliError::Explore(_) => "ExploreError",
            CliError::Scenario(e) => e.kind(),
            CliError::Render(_) => "SliceOutOfRange",
            CliError::Output(_) => "OutputError",
        }
    }
}

type CmdResult = Result<ExitCode, CliError>;

#[derive(Parser, Debug)]
#[command(name = "tilework", version, about = "Tile-assembly engine and tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a system document for structural problems.
    Validate { system: PathBuf },
    /// Sample one assembly sequence.
    Run {
        system: PathBuf,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
        /// Write the trace document here instead of stdout.
        #[arg(long)]
        trace_out: Option<PathBuf>,
    },
    /// List the placements attachable to the seed, or to a trace's result.
    Frontier {
        system: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Enumerate producible assemblies up to a size bound.
    Explore {
        system: PathBuf,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Decide directedness within a size bound.
    Directed {
        system: PathBuf,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Window movies, splicing and pumping.
    Movie {
        #[command(subcommand)]
        command: MovieCommand,
    },
    /// Bounded checks of a simulation setup.
    Simcheck {
        setup: PathBuf,
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long, default_value_t = 64)]
        max_tiles_simulator: usize,
        #[arg(long, default_value_t = 64)]
        max_tiles_simulated: usize,
        #[arg(long, default_value_t = 200_000)]
        max_states: usize,
    },
    /// Generate one of the built-in systems.
    Gen {
        #[arg(value_enum)]
        which: Generator,
        /// Counter iterations for blocking-counters.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Interior height for chambers.
        #[arg(long, default_value_t = 6)]
        h: i32,
        /// Model variant for ab (atam, patam, atam3d, satam).
        #[arg(long)]
        variant: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a scenario script and write system, trace and report files.
    Scenario {
        #[arg(value_enum)]
        which: Scenario,
        #[arg(long, default_value_t = 6)]
        north_length: i32,
        #[arg(long, default_value_t = 2)]
        arm_count: i32,
        #[arg(long, default_value_t = 6)]
        h: i32,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        prefix: usize,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Render an assembly as SVG.
    Render {
        system: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        slice: Option<i32>,
        #[arg(long)]
        highlight: bool,
        #[arg(long, default_value_t = 24)]
        scale: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lift a 2D system into the z = 0 plane.
    Embed3d {
        system: PathBuf,
        #[arg(long)]
        diffusion: Option<bool>,
    },
    /// Proof constants.
    Bounds {
        #[command(subcommand)]
        which: BoundsCommand,
    },
    /// Start the HTTP session API.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct BoundArgs {
    #[arg(long, default_value_t = 64)]
    max_tiles: usize,
    #[arg(long, default_value_t = 1_000_000)]
    max_states: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl BoundArgs {
    fn config(self) -> ExploreConfig {
        ExploreConfig::with_max_tiles(self.max_tiles)
            .max_states(self.max_states)
            .threads(self.threads)
    }
}

#[derive(Subcommand, Debug)]
enum MovieCommand {
    /// Print the movie of a trace across a window.
    Extract {
        trace: PathBuf,
        #[arg(long)]
        window: String,
    },
    /// Splice trace A with trace B across `window` and `window + c`.
    Splice {
        trace_a: PathBuf,
        trace_b: PathBuf,
        #[arg(long)]
        window: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, value_enum, default_value_t = Mode::Full)]
        mode: Mode,
        #[arg(long)]
        strict: bool,
    },
    /// Repeat the segment between `w1` and `w1 + c`.
    Pump {
        trace: PathBuf,
        #[arg(long)]
        w1: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, conflicts_with = "until_blocked")]
        count: Option<usize>,
        #[arg(long)]
        until_blocked: bool,
        #[arg(long, default_value_t = 1000)]
        max_iterations: usize,
    },
    /// Find two translates of a template window with equal movies.
    FindWindow {
        trace: PathBuf,
        #[arg(long)]
        template: String,
        /// Semicolon-separated translations, e.g. `0,0;0,-1;0,-2`.
        #[arg(long, allow_hyphen_values = true)]
        translations: String,
    },
}

#[derive(Subcommand, Debug)]
enum BoundsCommand {
    /// Pumping bound for dimension, glue count and strength.
    Pumping {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        n: u64,
    },
    /// Chamber size and height bounds from c and p.
    Chamber {
        #[arg(long)]
        c: u64,
        #[arg(long)]
        p: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Full,
    BondForming,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Generator {
    Ab,
    BlockingCounters,
    RectangleArms,
    Chambers,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Scenario {
    SealRectangle,
    PlugChambers,
    PumpArm,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                ExitCode::Usage
            } else {
                ExitCode::Ok
            };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", e.kind());
            e.exit_code()
        }
    }
}

fn write_json(out: &mut dyn Write, v: &serde_json::Value) -> Result<(), CliError> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("values serialize")
    )?;
    Ok(())
}

fn load_system(path: &Path) -> Result<TileSystem, CliError> {
    Ok(io::read_system(path)?)
}

/// A window given inline as JSON or as a path to a JSON file.
fn load_window(arg: &str, dim: Dim) -> Result<Window, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?
    };
    Ok(io::parse_window(&text, dim)?)
}

fn parse_point(s: &str, dim: Dim) -> Result<Point, CliError> {
    let v: Vec<i32> = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<i32>()
                .map_err(|_| CliError::Usage(format!("bad coordinate list {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    Ok(io::vec_to_pos(&v, dim)?)
}

fn assembly_json(a: &Assembly, s: &TileSystem) -> serde_json::Value {
    serde_json::to_value(AssemblyDocument::from_assembly(a, &s.tiles)).expect("serializable")
}

fn trace_json(s: &TileSystem, t: &AssemblyTrace) -> serde_json::Value {
    serde_json::to_value(TraceDocument::inline(s, t, None)).expect("serializable")
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Validate { system } => {
            let text = std::fs::read_to_string(&system).map_err(|source| IoError::File {
                path: system.clone(),
                source,
            })?;
            let doc = io::parse_system(&text)?;
            let report = io::validate_document(&doc)?;
            let violations: Vec<_> = report
                .violations
                .iter()
                .map(|v| json!({"kind": v.kind(), "message": v.to_string()}))
                .collect();
            write_json(
                out,
                &json!({"ok": report.is_ok(), "violations": violations}),
            )?;
            Ok(if report.is_ok() {
                ExitCode::Ok
            } else {
                ExitCode::Fail
            })
        }
        Command::Run {
            system,
            rng_seed,
            max_steps,
            trace_out,
        } => {
            let s = load_system(&system)?;
            let t = random_run(&s, rng_seed, max_steps);
            let doc = TraceDocument::inline(
                &s,
                &t,
                Some(RngDoc {
                    seed: rng_seed,
                    max_steps,
                }),
            );
            let text = io::serialize_trace(&doc);
            match trace_out {
                Some(p) => {
                    std::fs::write(&p, text)?;
                    let a = run_trace(&s, &t)?;
                    write_json(
                        out,
                        &json!({"steps": t.len(), "terminal": frontier(&a, &s).is_empty()}),
                    )?;
                }
                None => out.write_all(text.as_bytes())?,
            }
            Ok(ExitCode::Ok)
        }
        Command::Frontier { system, trace } => {
            let (s, a) = match trace {
                Some(t) => {
                    let (s, t) = io::read_trace(&t)?;
                    let a = run_trace(&s, &t)?;
                    (s, a)
                }
                None => {
                    let s = load_system(&system)?;
                    let a = s.seed.clone();
                    (s, a)
                }
            };
            let f: Vec<_> = frontier(&a, &s)
                .into_iter()
                .map(|p| io::placement_doc(p, &s.tiles))
                .collect();
            write_json(out, &json!({"terminal": f.is_empty(), "frontier": f}))?;
            Ok(ExitCode::Ok)
        }
        Command::Explore { system, bound } => {
            let s = load_system(&system)?;
            let r = explore_producibles(&s, bound.config())?;
            let terminals: Vec<_> = r.terminals.iter().map(|a| assembly_json(a, &s)).collect();
            write_json(
                out,
                &json!({
                    "producibles": r.producibles.len(),
                    "terminals": terminals,
                    "truncated": r.truncated,
                    "sizeBound": r.size_bound,
                }),
            )?;
            Ok(if r.truncated {
                ExitCode::Unknown
            } else {
                ExitCode::Ok
            })
        }
        Command::Directed { system, bound } => {
            let s = load_system(&system)?;
            let v = check_directed(&s, bound.config())?;
            let (code, detail) = match &v {
                DirectednessVerdict::Directed { terminal } => (
                    ExitCode::Ok,
                    json!({"terminal": assembly_json(terminal, &s)}),
                ),
                DirectednessVerdict::Undirected {
                    witness,
                    terminals_found,
                } => {
                    let (a, b) = witness.assemblies();
                    (
                        ExitCode::Fail,
                        json!({"witness": [assembly_json(a, &s), assembly_json(b, &s)], "terminalsFound": terminals_found}),
                    )
                }
                DirectednessVerdict::Unknown {
                    truncated,
                    terminals_found,
                } => (
                    ExitCode::Unknown,
                    json!({"truncated": truncated, "terminalsFound": terminals_found}),
                ),
            };
            write_json(out, &json!({"verdict": v.name(), "detail": detail}))?;
            Ok(code)
        }
        Command::Movie { command } => movie(command, out),
        Command::Simcheck {
            setup,
            check,
            max_tiles_simulator,
            max_tiles_simulated,
            max_states,
        } => {
            let setup = io::read_setup(&setup)?;
            let kinds: Vec<CheckKind> = if check == "all" {
                CheckKind::ALL.to_vec()
            } else {
                check
                    .split(',')
                    .map(|c| {
                        CheckKind::from_name(c.trim())
                            .ok_or_else(|| CliError::Usage(format!("unknown check {c:?}")))
                    })
                    .collect::<Result<_, _>>()?
            };
            let bounds = SimBounds {
                simulator: ExploreConfig::with_max_tiles(max_tiles_simulator)
                    .max_states(max_states),
                simulated: ExploreConfig::with_max_tiles(max_tiles_simulated)
                    .max_states(max_states),
            };
            let reports = run_checks(&setup, bounds, &kinds)?;
            let mut code = ExitCode::Ok;
            let mut items = Vec::new();
            for r in &reports {
                let mut item = json!({
                    "check": r.check.name(),
                    "verdict": r.verdict.name(),
                    "simulatorStates": r.simulator_states,
                    "simulatedStates": r.simulated_states,
                });
                match &r.verdict {
                    Verdict::Pass => {}
                    Verdict::Fail(w) => {
                        code = ExitCode::Fail;
                        let sys = match w.system {
                            tilework::simcheck::WitnessSystem::Simulator => setup.simulator(),
                            tilework::simcheck::WitnessSystem::Simulated => setup.simulated(),
                        };
                        item["witness"] = json!({
                            "system": w.system.name(),
                            "detail": w.detail,
                            "trace": w.trace.placements.iter().map(|&p| io::placement_doc(p, &sys.tiles)).collect::<Vec<_>>(),
                        });
                    }
                    Verdict::Unknown(why) => {
                        if code == ExitCode::Ok {
                            code = ExitCode::Unknown;
                        }
                        item["reason"] = json!(why);
                    }
                }
                items.push(item);
            }
            write_json(out, &json!({"reports": items}))?;
            Ok(code)
        }
        Command::Gen {
            which,
            k,
            h,
            variant,
            out: path,
        } => {
            let s = match which {
                Generator::Ab => {
                    let v = match variant {
                        Some(name) => ModelVariant::from_name(&name)
                            .ok_or_else(|| CliError::Usage(format!("unknown variant {name:?}")))?,
                        None => ModelVariant::ATAM,
                    };
                    systems::undirected_ab(v)
                }
                Generator::BlockingCounters => {
                    if k == 0 {
                        return Err(CliError::Usage("k must be at least 1".into()));
                    }
                    systems::blocking_counters(k)
                }
                Generator::RectangleArms => systems::rectangle_arms(),
                Generator::Chambers => {
                    if h < 3 {
                        return Err(CliError::Usage("h must be at least 3".into()));
                    }
                    systems::chambers(h)
                }
            };
            let text = io::serialize_system(&SystemDocument::from_system(&s));
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(ExitCode::Ok)
        }
        Command::Scenario {
            which,
            north_length,
            arm_count,
            h,
            k,
            prefix,
            out_dir,
        } => {
            let r = match which {
                Scenario::SealRectangle => {
                    systems::scenario_seal_rectangle(systems::RectangleParams {
                        north_length,
                        arm_count,
                    })?
                }
                Scenario::PlugChambers => systems::scenario_plug_chambers(h)?,
                Scenario::PumpArm => systems::scenario_pump_arm(k, prefix)?,
            };
            scenario_output(&r, out_dir.as_deref(), out)?;
            Ok(if r.all_passed() {
                ExitCode::Ok
            } else {
                ExitCode::Fail
            })
        }
        Command::Render {
            system,
            trace,
            slice,
            highlight,
            scale,
            out: path,
        } => {
            let (s, a) = match trace {
                Some(t) => {
                    let (s, t) = io::read_trace(&t)?;
                    let a = run_trace(&s, &t)?;
                    (s, a)
                }
                None => {
                    let s = load_system(&system)?;
                    let a = s.seed.clone();
                    (s, a)
                }
            };
            let svg = render_svg(
                &a,
                &s.tiles,
                RenderOptions {
                    slice,
                    highlight_constrained: highlight,
                    scale,
                },
            )?;
            match path {
                Some(p) => std::fs::write(p, svg)?,
                None => out.write_all(svg.as_bytes())?,
            }
            Ok(ExitCode::Ok)
        }
        Command::Embed3d { system, diffusion } => {
            let s = load_system(&system)?;
            let e = systems::embed_2d_in_3d(&s, diffusion)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            out.write_all(io::serialize_system(&SystemDocument::from_system(&e)).as_bytes())?;
            Ok(ExitCode::Ok)
        }
        Command::Bounds { which } => {
            match which {
                BoundsCommand::Pumping { dim, c, n } => {
                    let d = Dim::from_number(dim)
                        .ok_or_else(|| CliError::Usage(format!("dimension {dim} is not 2 or 3")))?;
                    let p = tilework::pumping_bound(d, c, n);
                    write_json(out, &json!({"pumpingBound": p.to_string()}))?;
                }
                BoundsCommand::Chamber { c, p } => {
                    let p: tilework::bounds::BigUint = p.parse().map_err(|_| {
                        CliError::Usage(format!("p must be a non-negative integer, got {p:?}"))
                    })?;
                    let (b, h) = tilework::chamber_bounds(c, &p);
                    write_json(out, &json!({"b": b.to_string(), "h": h.to_string()}))?;
                }
            }
            Ok(ExitCode::Ok)
        }
        Command::Serve { port } => {
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(crate::api::serve(port))?;
            Ok(ExitCode::Ok)
        }
    }
}

fn scenario_output(
    r: &ScenarioResult,
    dir: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let assertions: Vec<_> = r
        .assertions
        .iter()
        .map(|(n, v)| json!({"name": n, "pass": v}))
        .collect();
    let checkpoints: Vec<_> = r
        .checkpoints
        .iter()
        .map(|c| json!({"name": c.name, "step": c.step, "tiles": c.assembly.len()}))
        .collect();
    let report = json!({
        "scenario": r.name,
        "passed": r.all_passed(),
        "assertions": assertions,
        "checkpoints": checkpoints,
        "steps": r.trace.len(),
    });
    if let Some(d) = dir {
        std::fs::create_dir_all(d)?;
        std::fs::write(
            d.join("system.json"),
            io::serialize_system(&SystemDocument::from_system(&r.system)),
        )?;
        let trace = TraceDocument {
            format: io::FORMAT_VERSION,
            system: io::SystemRef::Path {
                path: "system.json".into(),
            },
            placements: r
                .trace
                .placements
                .iter()
                .map(|&p| io::placement_doc(p, &r.system.tiles))
                .collect(),
            rng: None,
        };
        std::fs::write(d.join("trace.json"), io::serialize_trace(&trace))?;
        std::fs::write(
            d.join("report.json"),
            serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        )?;
    }
    write_json(out, &report)
}

fn movie(cmd: MovieCommand, out: &mut dyn Write) -> CmdResult {
    match cmd {
        MovieCommand::Extract { trace, window } => {
            let (s, t) = io::read_trace(&trace)?;
            let w = load_window(&window, s.dim())?;
            let m = extract_movie(&s, &t, &w).map_err(|e| match e {
                tilework::MovieError::InvalidTrace(t) => CliError::Trace(t),
                tilework::MovieError::Window(w) => CliError::Io(IoError::Window(w)),
            })?;
            out.write_all(io::serialize_movie(&MovieDocument::from_movie(&m, s.dim())).as_bytes())?;
            Ok(ExitCode::Ok)
        }
        MovieCommand::Splice {
            trace_a,
            trace_b,
            window,
            c,
            mode,
            strict,
        } => {
            let (s, ta) = io::read_trace(&trace_a)?;
            let (_, tb) = io::read_trace(&trace_b)?;
            let w = load_window(&window, s.dim())?;
            let c = parse_point(&c, s.dim())?;
            let opts = SpliceOptions {
                mode: match mode {
                    Mode::Full => SpliceMode::Full,
                    Mode::BondForming => SpliceMode::BondForming,
                },
                validation: if strict {
                    Validation::Strict
                } else {
                    Validation::Unrestricted
                },
            };
            let r = splice(&s, &ta, &tb, &w, c, opts)?;
            write_json(
                out,
                &json!({"trace": trace_json(&s, &r.trace), "assembly": assembly_json(&r.assembly, &s)}),
            )?;
            Ok(ExitCode::Ok)
        }
        MovieCommand::Pump {
            trace,
            w1,
            c,
            count,
            until_blocked,
            max_iterations,
        } => {
            let (s, t) = io::read_trace(&trace)?;
            let w1 = load_window(&w1, s.dim())?;
            let c = parse_point(&c, s.dim())?;
            let reps = match (count, until_blocked) {
                (Some(n), false) => Repetitions::Count(n),
                (None, true) => Repetitions::UntilBlocked { max_iterations },
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --count or --until-blocked".into(),
                    ))
                }
            };
            let r = pump(
                &s,
                &t,
                &w1,
                &w1.translate(c),
                c,
                reps,
                SpliceOptions::default(),
            )?;
            write_json(
                out,
                &json!({
                    "iterations": r.iterations,
                    "blocked": r.blocked,
                    "trace": trace_json(&s, &r.trace),
                    "assembly": assembly_json(&r.assembly, &s),
                }),
            )?;
            Ok(ExitCode::Ok)
        }
        MovieCommand::FindWindow {
            trace,
            template,
            translations,
        } => {
            let (s, t) = io::read_trace(&trace)?;
            let w = load_window(&template, s.dim())?;
            let ts = translations
                .split(';')
                .filter(|x| !x.trim().is_empty())
                .map(|x| parse_point(x, s.dim()))
                .collect::<Result<Vec<_>, _>>()?;
            match find_matching_window_pair(&s, &t, &w, &ts)? {
                Some((w1, w2, c)) => {
                    write_json(
                        out,
                        &json!({
                            "found": true,
                            "w1": WindowDoc::from_window(&w1),
                            "w2": WindowDoc::from_window(&w2),
                            "c": io::pos_to_vec(c, s.dim()),
                        }),
                    )?;
                    Ok(ExitCode::Ok)
                }
                None => {
                    write_json(out, &json!({"found": false}))?;
                    Ok(ExitCode::Fail)
                }
            }
        }
    }
}

//! Command-line front end for `liejordan`: argument parsing, runtime
//! dispatch over the field size, and versioned JSON reports.
//!
//! Every command fills a [`Report`]. Its status decides the exit code:
//! 0 when every asserted check passes, 1 when one fails, 2 for an invalid
//! configuration and 3 when an enumeration bound is exceeded (the report
//! then holds whatever was computed before the bound was hit).

mod commands;
mod encode;
pub mod report;
pub mod suite;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use liejordan::groupalg::{Space, DEFAULT_MAX_POINTS};
use liejordan::orbits::{DEFAULT_HEIGHT_BOUND, DEFAULT_MAX_ELEMENTS};
use liejordan::Error;
use serde_json::json;

pub use report::{Check, Report, Status, SCHEMA_VERSION};

#[derive(Parser, Debug)]
#[command(name = "liejordan", version, about = "Exact Jordan decompositions over small finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Roots, coroots, pairings and mod-p criteria of a root datum.
    Rootdata(Opts),
    /// Orbit table of G(F_q) on 𝔤 or 𝔤*.
    Orbits(Opts),
    /// Bounded search for destabilizing cocharacters, per orbit.
    Limits(Opts),
    /// Audited Jordan certificates in 𝔤*.
    Decompose(Opts),
    /// The rank-two counterexample to uniqueness.
    Counterexample(Opts),
    /// The characteristic-2 bridge between SO_{2n+1} and Sp_{2n}.
    Bridge(Opts),
    /// Span of the semisimple locus in 𝔤 or 𝔤*.
    Closure(Opts),
    /// Named verification suites.
    Suite(Opts),
}

#[derive(Args, Debug, Clone)]
struct Opts {
    /// sl2, pgl2, sp4, so5, ...; `rootdata` and `counterexample` also take
    /// datum labels such as g2, f4, b2sc, c2ad
    #[arg(long)]
    group: Option<String>,
    /// Field size: 2, 3, 4 or 5
    #[arg(long)]
    q: Option<usize>,
    /// Characteristic; for `closure` it selects F_p when --q is absent
    #[arg(long)]
    p: Option<u32>,
    /// g or gdual
    #[arg(long, default_value = "gdual")]
    side: String,
    #[arg(long, default_value_t = DEFAULT_HEIGHT_BOUND)]
    height_bound: i64,
    /// Bound on enumerated points and elements
    #[arg(long)]
    max_enum: Option<usize>,
    /// Write the JSON report here (`-` for stdout)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Comma-separated suite names, or `all`
    #[arg(long)]
    suite: Option<String>,
    /// Every element instead of one per orbit
    #[arg(long)]
    all: bool,
    /// Record wall-clock time per check
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandName {
    Rootdata,
    Orbits,
    Limits,
    Decompose,
    Counterexample,
    Bridge,
    Closure,
    Suite,
}

impl CommandName {
    pub fn as_str(self) -> &'static str {
        match self {
            CommandName::Rootdata => "rootdata",
            CommandName::Orbits => "orbits",
            CommandName::Limits => "limits",
            CommandName::Decompose => "decompose",
            CommandName::Counterexample => "counterexample",
            CommandName::Bridge => "bridge",
            CommandName::Closure => "closure",
            CommandName::Suite => "suite",
        }
    }
}

/// A validated configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandName,
    pub group: Option<String>,
    pub q: usize,
    pub p: Option<u32>,
    pub side: Space,
    pub height_bound: i64,
    pub max_enum: Option<usize>,
    pub out: Option<PathBuf>,
    pub suites: Vec<String>,
    pub all: bool,
    pub timing: bool,
}

impl RunConfig {
    fn from_cli(command: CommandName, o: Opts) -> Result<Self, String> {
        let side = Space::parse(&o.side).map_err(|e| e.to_string())?;
        let q = match (o.q, o.p) {
            (Some(q), Some(p)) if q % p as usize != 0 => return Err(format!("--q {q} is not a power of --p {p}")),
            (Some(q), _) => q,
            (None, Some(p)) => p as usize,
            (None, None) => default_q(command, o.group.as_deref()),
        };
        if ![2, 3, 4, 5].contains(&q) {
            return Err(format!("unsupported field size q = {q}; expected 2, 3, 4 or 5"));
        }
        if let Some(p) = o.p {
            if ![2, 3, 5, 7].contains(&p) {
                return Err(format!("unsupported characteristic p = {p}; expected 2, 3, 5 or 7"));
            }
        }
        if o.height_bound < 1 {
            return Err(format!("--height-bound must be positive, not {}", o.height_bound));
        }
        if o.max_enum == Some(0) {
            return Err("--max-enum must be positive".into());
        }
        let suites = match (command, o.suite.as_deref()) {
            (CommandName::Suite, None | Some("all")) => suite::NAMES.iter().map(|s| s.to_string()).collect(),
            (CommandName::Suite, Some(list)) => {
                let names: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
                if let Some(bad) = names.iter().find(|n| !suite::NAMES.contains(&n.as_str())) {
                    return Err(format!("unknown suite {bad:?}; expected one of {}", suite::NAMES.join(", ")));
                }
                names
            }
            (_, Some(_)) => return Err("--suite only applies to the suite command".into()),
            (_, None) => Vec::new(),
        };
        Ok(RunConfig {
            command,
            group: o.group.map(|g| g.to_ascii_lowercase()),
            q,
            p: o.p,
            side,
            height_bound: o.height_bound,
            max_enum: o.max_enum,
            out: o.out,
            suites,
            all: o.all,
            timing: o.timing,
        })
    }

    pub fn max_points(&self) -> usize {
        self.max_enum.unwrap_or(DEFAULT_MAX_POINTS)
    }

    pub fn max_elements(&self) -> usize {
        self.max_enum.unwrap_or(DEFAULT_MAX_ELEMENTS)
    }

    fn echo(&self) -> serde_json::Value {
        json!({
            "group": self.group,
            "q": self.q,
            "p": self.p,
            "side": self.side.to_string(),
            "height_bound": self.height_bound,
            "max_enum": self.max_enum,
            "suites": self.suites,
            "all": self.all,
        })
    }
}

fn default_q(command: CommandName, group: Option<&str>) -> usize {
    match (command, group) {
        (CommandName::Counterexample, Some("g2")) => 3,
        _ => 2,
    }
}

/// Runs `body` with `$f` bound to F_q and `$e` to an extension of it.
macro_rules! with_field {
    ($q:expr, $f:ident, $e:ident, $body:expr) => {
        match $q {
            2 => {
                type $f = liejordan::F2;
                #[allow(dead_code)]
                type $e = liejordan::F16;
                $body
            }
            3 => {
                type $f = liejordan::F3;
                #[allow(dead_code)]
                type $e = liejordan::F9;
                $body
            }
            4 => {
                type $f = liejordan::F4;
                #[allow(dead_code)]
                type $e = liejordan::F16;
                $body
            }
            5 => {
                type $f = liejordan::F5;
                #[allow(dead_code)]
                type $e = liejordan::F25;
                $body
            }
            q => Err(Error::InvalidInput(format!("unsupported field size {q}"))),
        }
    };
}

/// Executes a validated configuration.
pub fn run(cfg: &RunConfig) -> Report {
    let mut r = Report::new(cfg.command.as_str(), cfg.echo(), cfg.timing);
    let result = match cfg.command {
        CommandName::Rootdata => commands::rootdata(cfg, &mut r),
        CommandName::Orbits => with_field!(cfg.q, F, E, commands::orbits::<F>(cfg, &mut r)),
        CommandName::Limits => with_field!(cfg.q, F, E, commands::limits::<F>(cfg, &mut r)),
        CommandName::Decompose => with_field!(cfg.q, F, E, commands::decompose::<F, E>(cfg, &mut r)),
        CommandName::Counterexample => with_field!(cfg.q, F, E, commands::counterexample::<F>(cfg, &mut r)),
        CommandName::Bridge => match cfg.q {
            2 => commands::bridge::<liejordan::F2>(cfg, &mut r),
            4 => commands::bridge::<liejordan::F4>(cfg, &mut r),
            q => Err(Error::InvalidInput(format!("the bridge needs characteristic 2, not q = {q}"))),
        },
        CommandName::Closure => with_field!(cfg.q, F, E, commands::closure::<F>(cfg, &mut r)),
        CommandName::Suite => commands::suite(cfg, &mut r),
    };
    if let Err(e) = result {
        let status = match e {
            Error::BoundExceeded { .. } => Status::BoundExceeded,
            Error::InvalidInput(_) | Error::Parse(_) | Error::Unsupported(_) | Error::NoMatrixModel(_) => Status::InvalidConfig,
            _ => Status::Error,
        };
        r.line(format!("error: {e}"));
        r.fail(status, e.to_string());
    }
    r.finish();
    r
}

fn parse(args: impl IntoIterator<Item = OsString>) -> Result<RunConfig, clap::Error> {
    let cli = Cli::try_parse_from(args)?;
    let (name, opts) = match cli.command {
        Command::Rootdata(o) => (CommandName::Rootdata, o),
        Command::Orbits(o) => (CommandName::Orbits, o),
        Command::Limits(o) => (CommandName::Limits, o),
        Command::Decompose(o) => (CommandName::Decompose, o),
        Command::Counterexample(o) => (CommandName::Counterexample, o),
        Command::Bridge(o) => (CommandName::Bridge, o),
        Command::Closure(o) => (CommandName::Closure, o),
        Command::Suite(o) => (CommandName::Suite, o),
    };
    RunConfig::from_cli(name, opts).map_err(|msg| {
        let mut cmd = <Cli as clap::CommandFactory>::command();
        cmd.error(clap::error::ErrorKind::ValueValidation, msg)
    })
}

/// Result of [`run_args`]: the exit code, the report (absent when the
/// arguments did not parse) and the text printed on the terminal.
pub struct Outcome {
    pub code: i32,
    pub report: Option<Report>,
    pub text: String,
}

/// Parses `args` (including the program name) and runs the command,
/// without touching stdout or the filesystem.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    match parse(args.into_iter().map(Into::into)) {
        Ok(cfg) => {
            let report = run(&cfg);
            let mut text = report.summary.join("\n");
            text.push('\n');
            Outcome { code: report.status.exit_code(), report: Some(report), text }
        }
        Err(e) => {
            let code = if e.use_stderr() { Status::InvalidConfig.exit_code() } else { 0 };
            Outcome { code, report: None, text: e.render().to_string() }
        }
    }
}

/// Entry point of the binary.
pub fn main_with_args(args: impl IntoIterator<Item = OsString>) -> i32 {
    let args: Vec<OsString> = args.into_iter().collect();
    let out = parse(args.clone()).ok().and_then(|c| c.out);
    let outcome = run_args(args);
    let Some(report) = &outcome.report else {
        if outcome.code == 0 {
            print!("{}", outcome.text);
        } else {
            eprint!("{}", outcome.text);
        }
        return outcome.code;
    };
    let json = report.to_json();
    match out.as_deref() {
        Some(p) if p.as_os_str() == "-" => {
            eprint!("{}", outcome.text);
            print!("{json}");
        }
        Some(p) => {
            print!("{}", outcome.text);
            if let Err(e) = std::fs::write(p, json) {
                eprintln!("cannot write {}: {e}", p.display());
                return Status::Error.exit_code();
            }
        }
        None => print!("{}", outcome.text),
    }
    let _ = std::io::stdout().flush();
    outcome.code
}

//! Command surface of the `incchain` binary.
//!
//! Exit codes: `0` success or PASS, `2` FAIL, `3` INCONCLUSIVE, `1` usage,
//! parse or computation errors.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::asymptotics::{
    cm_obstruction, fit_linear, invariant_table, verify_c1_dichotomy, verify_codim_theorem, verify_pd_bounds,
    TableOptions, Verdict, SCHEMA_VERSION,
};
use crate::chain::{orbit, orbit_bruteforce, ChainSpec};
use crate::covers::{big_gamma, default_depth_cap, gamma_bruteforce, gamma_chain};
use crate::decomposition::{codim, codim_bruteforce, BRUTEFORCE_VAR_CAP};
use crate::document::{parse_document, ChainDocument};
use crate::error::Error;
use crate::resolution::{pd_quotient, pd_taylor_oracle, FieldChar, ResolutionOptions, TAYLOR_GUARD};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "incchain",
    version,
    about = "Invariants of Inc-invariant chains of monomial ideals"
)]
pub struct Cli {
    /// Field characteristic for Betti numbers: 0 or a prime.
    #[arg(long = "char", global = true)]
    pub characteristic: Option<u32>,
    /// Largest generator count of a piece resolved exactly.
    #[arg(long, global = true)]
    pub gen_cap: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SpecArg {
    /// Chain description file.
    #[arg(long)]
    pub spec: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Column {
    Pd,
    Codim,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    Codim,
    PdBounds,
    Cm,
    C1,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the minimal generators of I_N.
    Gen {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        n: u32,
    },
    /// Tabulate codim, pd and gamma over a width range `A..B`.
    Invariants {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<u32>,
    },
    /// Fit an eventual linear law to one column.
    Fit {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<u32>,
        #[arg(long, value_enum, default_value_t = Column::Pd)]
        column: Column,
    },
    /// Check a growth law against the table.
    Verify {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<u32>,
        #[arg(long, value_enum, default_value_t = Theorem::Codim)]
        theorem: Theorem,
        /// Depth cap for Gamma (defaults to the document's, else c + 2).
        #[arg(long)]
        depth: Option<usize>,
    },
    /// The cover number gamma_i of the seed, or the depth-capped Gamma_i.
    Gamma {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        big: bool,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Cross-check fast routines against brute-force oracles at width N.
    Oracle {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        n: u32,
    },
}

/// Accepts `A..B`, `A..=B` or a single `N`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<u32>, String> {
    let bad = || format!("expected a width range like 4..7, got '{text}'");
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (text, text),
    };
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

struct Context {
    doc: ChainDocument,
    spec: ChainSpec,
    resolution: ResolutionOptions,
    format: Format,
}

impl Context {
    fn depth(&self, flag: Option<usize>) -> usize {
        flag.or(self.doc.options.depth)
            .unwrap_or_else(|| default_depth_cap(self.spec.rows()))
    }

    fn table_options(&self) -> TableOptions {
        TableOptions {
            resolution: self.resolution,
            skip_pd: false,
        }
    }
}

fn load(cli: &Cli, path: &PathBuf, err: &mut dyn Write) -> Result<Context, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let parsed = parse_document(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    for w in &parsed.warnings {
        let _ = writeln!(err, "warning: {}: {w}", path.display());
    }
    let doc = parsed.document;
    let spec = doc.to_spec().map_err(|e| e.to_string())?;
    let ch = cli.characteristic.or(doc.options.characteristic).unwrap_or(0);
    let field = FieldChar::new(ch).map_err(|e| e.to_string())?;
    let gen_cap = cli
        .gen_cap
        .or(doc.options.gen_cap)
        .unwrap_or(ResolutionOptions::default().gen_cap);
    Ok(Context {
        doc,
        spec,
        resolution: ResolutionOptions::default().with_field(field).with_gen_cap(gen_cap),
        format: cli.format,
    })
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_OK,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
        Verdict::NotApplicable => EXIT_ERROR,
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}

fn io(e: std::io::Error) -> String {
    e.to_string()
}

fn lib(e: Error) -> String {
    e.to_string()
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    match &cli.command {
        Command::Gen { spec, n } => {
            let ctx = load(cli, &spec.spec, err)?;
            let ideal = ctx.spec.generate(*n);
            match ctx.format {
                Format::Csv => {
                    for g in ideal.gens() {
                        writeln!(out, "{g}").map_err(io)?;
                    }
                }
                Format::Json => emit_json(
                    out,
                    &json!({ "schemaVersion": SCHEMA_VERSION, "n": n, "gens": ideal.gens() }),
                )
                .map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Invariants { spec, n } => {
            let ctx = load(cli, &spec.spec, err)?;
            let table = invariant_table(&ctx.spec, *n.start(), *n.end(), &ctx.table_options()).map_err(lib)?;
            match ctx.format {
                Format::Csv => out.write_all(table.to_csv().as_bytes()).map_err(io)?,
                Format::Json => {
                    emit_json(out, &json!({ "schemaVersion": SCHEMA_VERSION, "table": table })).map_err(io)?
                }
            }
            Ok(EXIT_OK)
        }
        Command::Fit { spec, n, column } => {
            let ctx = load(cli, &spec.spec, err)?;
            let mut opts = ctx.table_options();
            opts.skip_pd = *column == Column::Codim;
            let table = invariant_table(&ctx.spec, *n.start(), *n.end(), &opts).map_err(lib)?;
            let points = match column {
                Column::Pd => table.pd_points(),
                Column::Codim => table.codim_points(),
            };
            let fit = fit_linear(&points).map_err(lib)?;
            match ctx.format {
                Format::Csv => writeln!(out, "{fit}").map_err(io)?,
                Format::Json => emit_json(out, &json!({ "schemaVersion": SCHEMA_VERSION, "fit": fit })).map_err(io)?,
            }
            Ok(if fit.conclusive { EXIT_OK } else { EXIT_INCONCLUSIVE })
        }
        Command::Verify {
            spec,
            n,
            theorem,
            depth,
        } => {
            let ctx = load(cli, &spec.spec, err)?;
            let (from, to) = (*n.start(), *n.end());
            let opts = ctx.table_options();
            let depth = ctx.depth(*depth);
            let (code, text, value) = match theorem {
                Theorem::Codim => {
                    let mut o = opts;
                    o.skip_pd = true;
                    let r = verify_codim_theorem(&ctx.spec, from, to, &o).map_err(lib)?;
                    let text = format!("{} {}", r.verdict, r.message);
                    (verdict_code(r.verdict), text, serde_json::to_value(&r))
                }
                Theorem::PdBounds => {
                    let r = verify_pd_bounds(&ctx.spec, from, to, depth, &opts).map_err(lib)?;
                    let text = format!("{} {}", r.verdict, r.message);
                    (verdict_code(r.verdict), text, serde_json::to_value(&r))
                }
                Theorem::Cm => {
                    let r = cm_obstruction(&ctx.spec, depth).map_err(lib)?;
                    let text = format!("{} {}", r.verdict, r.message);
                    (EXIT_OK, text, serde_json::to_value(&r))
                }
                Theorem::C1 => {
                    let r = verify_c1_dichotomy(&ctx.spec, from, to, &opts).map_err(lib)?;
                    let text = format!("{} {}", r.verdict, r.message);
                    (verdict_code(r.verdict), text, serde_json::to_value(&r))
                }
            };
            match ctx.format {
                Format::Csv => writeln!(out, "{text}").map_err(io)?,
                Format::Json => {
                    let report = value.map_err(|e| e.to_string())?;
                    emit_json(
                        out,
                        &json!({ "schemaVersion": SCHEMA_VERSION, "theorem": theorem, "report": report }),
                    )
                    .map_err(io)?
                }
            }
            Ok(code)
        }
        Command::Gamma { spec, big, depth } => {
            let ctx = load(cli, &spec.spec, err)?;
            if *big {
                let report = big_gamma(&ctx.spec, ctx.depth(*depth)).map_err(lib)?;
                match ctx.format {
                    Format::Csv => {
                        writeln!(out, "Gamma = {}", report.value).map_err(io)?;
                        let levels: Vec<String> = report.levels.iter().map(u32::to_string).collect();
                        writeln!(out, "levels = {}", levels.join(",")).map_err(io)?;
                        writeln!(out, "reached_at = {}", report.reached_at).map_err(io)?;
                        writeln!(out, "stabilized = {}", report.stabilized).map_err(io)?;
                        if report.truncated {
                            writeln!(out, "truncated = true").map_err(io)?;
                        }
                    }
                    Format::Json => {
                        emit_json(out, &json!({ "schemaVersion": SCHEMA_VERSION, "bigGamma": report })).map_err(io)?
                    }
                }
            } else {
                let report = gamma_chain(&ctx.spec);
                match ctx.format {
                    Format::Csv => {
                        writeln!(out, "gamma = {}", report.gamma).map_err(io)?;
                        if let Some(w) = &report.witness {
                            writeln!(out, "witness = {w}").map_err(io)?;
                        }
                        let covers: Vec<String> = report.minimal_covers.iter().map(|c| c.to_string()).collect();
                        writeln!(out, "minimal_covers = {}", covers.join(" ")).map_err(io)?;
                    }
                    Format::Json => {
                        emit_json(out, &json!({ "schemaVersion": SCHEMA_VERSION, "gamma": report })).map_err(io)?
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Oracle { spec, n } => {
            let ctx = load(cli, &spec.spec, err)?;
            let checks = oracle_checks(&ctx.spec, *n, &ctx.resolution);
            let failed = checks.iter().any(|c| c.status == "FAIL");
            match ctx.format {
                Format::Csv => {
                    for c in &checks {
                        writeln!(out, "{} {}: {}", c.status, c.name, c.detail).map_err(io)?;
                    }
                }
                Format::Json => {
                    emit_json(out, &json!({ "schemaVersion": SCHEMA_VERSION, "checks": checks })).map_err(io)?
                }
            }
            Ok(if failed { EXIT_FAIL } else { EXIT_OK })
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleCheck {
    pub name: &'static str,
    pub status: &'static str,
    pub detail: String,
}

fn check<T: PartialEq + std::fmt::Debug>(name: &'static str, fast: T, slow: T) -> OracleCheck {
    let ok = fast == slow;
    OracleCheck {
        name,
        status: if ok { "PASS" } else { "FAIL" },
        detail: format!("fast {fast:?}, oracle {slow:?}"),
    }
}

fn skipped(name: &'static str, detail: String) -> OracleCheck {
    OracleCheck {
        name,
        status: "SKIPPED",
        detail,
    }
}

/// Fast routines against their brute-force counterparts on `I_n`.
pub fn oracle_checks(spec: &ChainSpec, n: u32, opts: &ResolutionOptions) -> Vec<OracleCheck> {
    let ideal = spec.generate(n);
    let i = spec.monoid_index();
    let mut checks = Vec::new();

    let orbits_agree = spec.seed().gens().iter().all(|u| {
        (spec.seed_index()..=n).all(|m| {
            let mut fast = orbit(u, i, spec.seed_index(), m).unwrap_or_default();
            let mut slow = orbit_bruteforce(u, i, spec.seed_index(), m);
            fast.sort();
            slow.sort();
            fast == slow
        })
    });
    checks.push(OracleCheck {
        name: "orbit",
        status: if orbits_agree { "PASS" } else { "FAIL" },
        detail: format!("seed generator orbits into widths {}..={n}", spec.seed_index()),
    });

    match codim_bruteforce(&ideal) {
        Ok(slow) => checks.push(check("codim", codim(&ideal), slow)),
        Err(_) => checks.push(skipped(
            "codim",
            format!("more than {BRUTEFORCE_VAR_CAP} variables in the radical support"),
        )),
    }

    checks.push(check(
        "gamma",
        crate::covers::gamma(&ideal, i).gamma,
        gamma_bruteforce(&ideal, i),
    ));

    if ideal.is_unit() {
        checks.push(skipped("pd", "unit ideal".into()));
    } else if ideal.num_gens() > TAYLOR_GUARD {
        checks.push(skipped("pd", format!("more than {TAYLOR_GUARD} generators")));
    } else {
        match (pd_quotient(&ideal, opts), pd_taylor_oracle(&ideal, opts.field)) {
            (Ok(fast), Ok(slow)) => checks.push(check("pd", fast, slow)),
            (a, b) => checks.push(skipped("pd", format!("{a:?} / {b:?}"))),
        }
    }
    checks
}

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use mfalling::bijections::{
    composite_inverse, composite_phi_n_traced, phi_n_traced, psi_n, sk_inverse, stockhofe_keith_traced, Trace,
};
use mfalling::classes::ClassSpec;
use mfalling::series::{class_generating_function, gf_falling_limit_rhs, gf_falling_rhs, Selector, TruncatedSeries, ZMode};
use mfalling::verify::{check_theorem, reproduce_figures, reproduce_table1, Params, TheoremId, VerificationReport};
use mfalling::{Error, Modulus, Partition};

#[derive(Parser)]
#[command(name = "mfalling", version, about = "Exact checks of m-falling partition identities and bijections")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a bijection to one partition.
    Map {
        #[command(subcommand)]
        map: MapCommand,
    },
    /// Verify a theorem up to a weight bound.
    Check(CheckArgs),
    /// Reproduce the table of type-(3,2) pairs for m = n = 3.
    Table1,
    /// Replay the worked examples.
    Figures,
    /// Print a truncated generating function.
    Gf {
        #[command(subcommand)]
        gf: GfCommand,
    },
    /// Render diagrams.
    Show {
        #[command(subcommand)]
        show: ShowCommand,
    },
}

#[derive(Args)]
struct MapArgs {
    #[arg(long)]
    m: u32,
    /// Comma-separated parts, largest first.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<u32>,
    #[arg(long)]
    trace: bool,
}

#[derive(Subcommand)]
enum MapCommand {
    /// Stockhofe-Keith map O_m -> D_m.
    Sk(MapArgs),
    /// Insertion bijection O_{c,m}^n -> L_{c,m}^n.
    Phin {
        #[command(flatten)]
        args: MapArgs,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        n: u32,
    },
    /// Composite bijection O_m-falling^n -> L_m-falling^n.
    Composite {
        #[command(flatten)]
        args: MapArgs,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        c: Option<u32>,
    },
    /// Invert one of the maps.
    Inverse {
        #[arg(long, value_enum)]
        of: MapKind,
        #[command(flatten)]
        args: MapArgs,
        #[arg(long)]
        c: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        /// Search bound for the Stockhofe-Keith inverse.
        #[arg(long, default_value_t = 60)]
        max_weight: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Sk,
    Phin,
    Composite,
}

#[derive(Args)]
struct CheckArgs {
    /// T1.1, T1.2, T1.3, T1.4, T2.3, T3.1, T3.2-limit, GF4, Glaisher, or all.
    id: String,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    c: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    max_weight: Option<u32>,
    #[arg(long, default_value_t = default_jobs())]
    jobs: usize,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassKind {
    All,
    Distinct,
    Regular,
    Flat,
    Falling,
    FallingBounded,
    Residue,
    ResidueBounded,
    DistinctResidue,
    ResidueLectureHall,
    FallingLectureHall,
    LectureHall,
}

#[derive(Clone, Copy, ValueEnum)]
enum SelectorArg {
    Weight,
    SType,
    LType,
    STypeSm,
    LTypeAsc,
    Length,
    AltSum,
}

impl From<SelectorArg> for Selector {
    fn from(s: SelectorArg) -> Self {
        match s {
            SelectorArg::Weight => Selector::Weight,
            SelectorArg::SType => Selector::AltSumType,
            SelectorArg::LType => Selector::LengthType,
            SelectorArg::STypeSm => Selector::AltSumTypeWithSm,
            SelectorArg::LTypeAsc => Selector::LengthTypeWithAsc,
            SelectorArg::Length => Selector::MLength,
            SelectorArg::AltSum => Selector::AltSum,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ZModeArg {
    Multi,
    Single,
}

#[derive(Subcommand)]
enum GfCommand {
    /// Enumerate a class and sum its monomials.
    Class {
        #[arg(long, value_enum)]
        class: ClassKind,
        #[arg(long, value_enum, default_value_t = SelectorArg::Weight)]
        selector: SelectorArg,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        c: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        max_degree: u32,
    },
    /// Closed form for O_m-falling^n, or its n -> infinity limit when n is omitted.
    Rhs {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t = ZModeArg::Multi)]
        z_mode: ZModeArg,
    },
}

#[derive(Subcommand)]
enum ShowCommand {
    /// m-modular Ferrers diagram.
    Ferrers {
        #[arg(long)]
        m: u32,
        #[arg(long, value_delimiter = ',')]
        parts: Vec<u32>,
    },
}

fn line(out: &mut String, value: impl std::fmt::Display) {
    out.push_str(&value.to_string());
    out.push('\n');
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    // A closed pipe downstream is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut String) -> Result<bool, Error> {
    let format = cli.format;
    match &cli.command {
        Command::Map { map } => run_map(map, format, out),
        Command::Check(args) => run_check(args, format, out),
        Command::Table1 => Ok(emit_report(&reproduce_table1()?, format, out)),
        Command::Figures => Ok(emit_report(&reproduce_figures()?, format, out)),
        Command::Gf { gf } => run_gf(gf, format, out),
        Command::Show {
            show: ShowCommand::Ferrers { m, parts },
        } => {
            let m = Modulus::new(*m)?;
            let lambda = Partition::new(parts.iter().copied())?;
            let diagram = lambda.render_modular_ferrers(m);
            match format {
                Format::Text => out.push_str(&diagram),
                Format::Jsonl => line(out, json!({"partition": lambda, "rows": diagram.lines().collect::<Vec<_>>()})),
            }
            Ok(true)
        }
    }
}

fn emit_map(input: &Partition, output: &Partition, trace: Option<&Trace>, format: Format, out: &mut String) {
    match format {
        Format::Text => match trace {
            Some(t) => out.push_str(&t.to_string()),
            None => line(out, output),
        },
        Format::Jsonl => {
            let mut rec = json!({"input": input, "output": output});
            if let Some(t) = trace {
                rec["trace"] = json!(t.steps);
            }
            line(out, rec);
        }
    }
}

fn run_map(map: &MapCommand, format: Format, out: &mut String) -> Result<bool, Error> {
    let parse = |args: &MapArgs| -> Result<(Modulus, Partition), Error> {
        Ok((Modulus::new(args.m)?, Partition::new(args.parts.iter().copied())?))
    };
    let (input, output, trace, show_trace) = match map {
        MapCommand::Sk(args) => {
            let (m, lambda) = parse(args)?;
            let (mu, trace) = stockhofe_keith_traced(&lambda, m)?;
            (lambda, mu, Some(trace), args.trace)
        }
        MapCommand::Phin { args, c, n } => {
            let (m, lambda) = parse(args)?;
            let (mu, trace) = phi_n_traced(&lambda, m, *c, *n)?;
            (lambda, mu, Some(trace), args.trace)
        }
        MapCommand::Composite { args, n, c } => {
            let (m, lambda) = parse(args)?;
            let (mu, trace) = composite_phi_n_traced(&lambda, m, *n, *c)?;
            (lambda, mu, Some(trace), args.trace)
        }
        MapCommand::Inverse {
            of,
            args,
            c,
            n,
            max_weight,
        } => {
            let (m, mu) = parse(args)?;
            let need_n = || n.ok_or_else(|| Error::Usage("--n is required for this inverse".into()));
            let lambda = match of {
                MapKind::Sk => sk_inverse(&mu, m, u64::from(*max_weight))?,
                MapKind::Phin => {
                    let c = c.ok_or_else(|| Error::Usage("--c is required for phin".into()))?;
                    psi_n(&mu, m, c, need_n()?)?
                }
                MapKind::Composite => composite_inverse(&mu, m, need_n()?, *c)?,
            };
            (mu, lambda, None, false)
        }
    };
    emit_map(&input, &output, trace.as_ref().filter(|_| show_trace), format, out);
    Ok(true)
}

fn run_check(args: &CheckArgs, format: Format, out: &mut String) -> Result<bool, Error> {
    let ids: Vec<TheoremId> = if args.id.eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        vec![args.id.parse()?]
    };
    let params = Params {
        m: args.m,
        c: args.c,
        n: args.n,
        max_weight: args.max_weight,
    };
    let mut ok = true;
    for id in ids {
        let report = check_theorem(id, &params, args.jobs)?;
        eprintln!("{id}: {:.2?}", report.elapsed);
        ok &= emit_report(&report, format, out);
    }
    Ok(ok)
}

fn emit_report(report: &VerificationReport, format: Format, out: &mut String) -> bool {
    match format {
        Format::Text => out.push_str(&report.to_text()),
        Format::Jsonl => out.push_str(&report.to_jsonl()),
    }
    report.passed()
}

fn class_spec(kind: ClassKind, m: Option<u32>, c: Option<u32>, n: Option<u32>) -> Result<ClassSpec, Error> {
    let need = |v: Option<u32>, name: &str| v.ok_or_else(|| Error::Usage(format!("--{name} is required for this class")));
    let m = || Modulus::new(need(m, "m")?);
    let c = || need(c, "c");
    let n = || need(n, "n");
    Ok(match kind {
        ClassKind::All => ClassSpec::All,
        ClassKind::Distinct => ClassSpec::Distinct { m: m()? },
        ClassKind::Regular => ClassSpec::Regular { m: m()? },
        ClassKind::Flat => ClassSpec::Flat { m: m()? },
        ClassKind::Falling => ClassSpec::Falling { m: m()? },
        ClassKind::FallingBounded => ClassSpec::FallingBounded { m: m()?, n: n()? },
        ClassKind::Residue => ClassSpec::Residue { m: m()?, c: c()? },
        ClassKind::ResidueBounded => ClassSpec::ResidueBounded { m: m()?, c: c()?, n: n()? },
        ClassKind::DistinctResidue => ClassSpec::DistinctResidue { m: m()?, c: c()? },
        ClassKind::ResidueLectureHall => ClassSpec::ResidueLectureHall { m: m()?, c: c()?, n: n()? },
        ClassKind::FallingLectureHall => ClassSpec::FallingLectureHall { m: m()?, n: n()? },
        ClassKind::LectureHall => ClassSpec::LectureHall { n: n()? },
    })
}

fn emit_series(series: &TruncatedSeries, format: Format, out: &mut String) {
    match format {
        Format::Text => out.push_str(&series.to_canonical_text()),
        Format::Jsonl => {
            for (e, coeff) in series.terms() {
                line(out, json!({"q": e.q, "z": e.z, "coeff": coeff.to_string()}));
            }
        }
    }
}

fn run_gf(gf: &GfCommand, format: Format, out: &mut String) -> Result<bool, Error> {
    let series = match gf {
        GfCommand::Class {
            class,
            selector,
            m,
            c,
            n,
            max_degree,
        } => {
            let spec = class_spec(*class, *m, *c, *n)?;
            class_generating_function(&spec, (*selector).into(), *max_degree)?
        }
        GfCommand::Rhs {
            m,
            n,
            max_degree,
            z_mode,
        } => {
            let m = Modulus::new(*m)?;
            let mode = match z_mode {
                ZModeArg::Multi => ZMode::Multi,
                ZModeArg::Single => ZMode::Single,
            };
            match n {
                Some(n) => gf_falling_rhs(m, *n, mode, *max_degree)?,
                None => gf_falling_limit_rhs(m, mode, *max_degree)?,
            }
        }
    };
    emit_series(&series, format, out);
    Ok(true)
}

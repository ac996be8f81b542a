use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qrank::format::{parse_rat, rat, series_to_json};
use qrank::report::line;
use qrank::tables::write_tables_csv;
use qrank::{default_order_from_env, run_suite, Error, Result, SuiteOptions};
use qrank_core::appell::{o_d_direct, o_d_gen};
use qrank_core::catalog::{entries, named::build_named_series};
use qrank_core::overpartitions::{
    deviation_by_definition, deviation_pair_by_definition, deviation_pair_by_formula, rank_tables,
    rank_tables_by_enumeration, single_deviation, DeviationSpec, GenericParams,
};
use qrank_core::report::compare;
use qrank_core::{Cyclotomic, Monomial, QSeries, Rat, Verdict};

const BUILTIN_ORDER: i64 = 20;

#[derive(Parser)]
#[command(
    name = "qrank",
    version,
    about = "Exact q-series expansions and identity verification for overpartition rank deviations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named series or the generating function O_d(z;q).
    Expand {
        #[command(flatten)]
        series: SeriesArgs,
        /// Write the series as JSON instead of printing it.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print a rank deviation D_d(a,M), or the pair D_d(a,M) + D_d(a-1,M).
    Deviation {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        a: i64,
        #[arg(long = "M")]
        modulus: i64,
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Use the pair D_d(a,M) + D_d(a-1,M) of the pair formulas.
        #[arg(long)]
        pair: bool,
    },
    /// Print the N-dissection components of a series.
    Dissect {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, default_value_t = 3)]
        parts: usize,
    },
    /// Run catalog entries; exits nonzero iff some check fails.
    Verify {
        /// Glob over entry ids.
        #[arg(long, default_value = "*")]
        filter: String,
        #[arg(long)]
        order: Option<String>,
        /// Worker threads, 0 for every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Print only failing checks and the summary.
        #[arg(long)]
        quiet: bool,
    },
    /// Export rank tables N_d(m,n) as CSV.
    Tables {
        #[arg(long)]
        d: u32,
        #[arg(long = "maxN")]
        max_n: u32,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = TableRoute::Fourier)]
        route: TableRoute,
    },
    /// List catalog entries with their coefficient field and exponent denominator.
    List,
}

#[derive(Args)]
struct SeriesArgs {
    /// A catalog name (W0, f1, Bbar0, g-lhs, ...) or `Od`.
    #[arg(long)]
    series: String,
    #[arg(long)]
    d: Option<i64>,
    /// Root spec such as `zeta7^2` or `zeta5^1*q^1/2`.
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long)]
    order: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Definition,
    Formula,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableRoute {
    Fourier,
    Enumeration,
}

fn order_or_default(order: &Option<String>) -> Result<Rat> {
    match order {
        Some(o) => parse_rat(o),
        None => Ok(default_order_from_env()?.unwrap_or_else(|| Rat::from_integer(BUILTIN_ORDER))),
    }
}

fn build_series(args: &SeriesArgs) -> Result<QSeries> {
    let order = order_or_default(&args.order)?;
    if args.series != "Od" {
        return Ok(build_named_series(&args.series, order)?);
    }
    let d = args.d.ok_or_else(|| Error::Format("`Od` needs --d".into()))?;
    let z: Monomial = args
        .z
        .as_deref()
        .ok_or_else(|| Error::Format("`Od` needs --z".into()))?
        .parse()?;
    let one = Cyclotomic::one();
    let unit = z.exp() == Rat::from_integer(0) && (z.coeff() == one || z.coeff() == -one);
    if unit {
        Ok(o_d_gen(d, &z, order)?)
    } else {
        Ok(o_d_direct(d, &z, order)?)
    }
}

fn print_series(out: &mut impl Write, label: &str, s: &QSeries) -> Result<()> {
    writeln!(out, "{label}{s}")?;
    Ok(())
}

fn open(path: &PathBuf) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn run(cli: Cli) -> Result<bool> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Expand { series, json } => {
            let s = build_series(&series)?;
            match json {
                Some(p) => open(&p)?.write_all(series_to_json(&s)?.as_bytes())?,
                None => print_series(&mut out, "", &s)?,
            }
            Ok(true)
        }
        Command::Deviation {
            d,
            a,
            modulus,
            order,
            method,
            pair,
        } => {
            let order = order_or_default(&order)?;
            let spec = DeviationSpec::new(d, a, modulus)?;
            let params = GenericParams::default_for(&spec);
            let definition = || {
                if pair {
                    deviation_pair_by_definition(spec, order)
                } else {
                    deviation_by_definition(spec, order)
                }
            };
            let formula = || {
                if pair {
                    deviation_pair_by_formula(spec, &params, order)
                } else {
                    single_deviation(spec, &params, order)
                }
            };
            match method {
                Method::Definition => print_series(&mut out, "", &definition()?)?,
                Method::Formula => print_series(&mut out, "", &formula()?)?,
                Method::Both => {
                    let (l, r) = (definition(), formula());
                    if let Ok(s) = &l {
                        print_series(&mut out, "definition: ", s)?;
                    }
                    if let Ok(s) = &r {
                        print_series(&mut out, "formula:    ", s)?;
                    }
                    let id = if pair { "deviation-pair" } else { "deviation" };
                    let inst = vec![
                        ("d".into(), d.to_string()),
                        ("a".into(), a.to_string()),
                        ("M".into(), modulus.to_string()),
                    ];
                    let rep = compare(id, inst, l, r, order);
                    writeln!(out, "{}", line(&rep))?;
                    return Ok(rep.verdict != Verdict::Fail);
                }
            }
            Ok(true)
        }
        Command::Dissect { series, parts } => {
            if parts == 0 {
                return Err(Error::Format("--parts must be positive".into()));
            }
            let s = build_series(&series)?;
            for (k, c) in s.dissect(parts)?.iter().enumerate() {
                print_series(&mut out, &format!("{k}: "), c)?;
            }
            Ok(true)
        }
        Command::Verify {
            filter,
            order,
            jobs,
            json,
            csv,
            quiet,
        } => {
            let order = match order {
                Some(o) => Some(parse_rat(&o)?),
                None => default_order_from_env()?,
            };
            let outcome = run_suite(&SuiteOptions { filter, order, jobs })?;
            for r in &outcome.reports {
                if !quiet || r.verdict != Verdict::Pass {
                    writeln!(out, "{}", line(r))?;
                }
            }
            let m = &outcome.report.run;
            writeln!(
                out,
                "{} entries, {} checks: {} pass, {} fail, {} non-generic ({} ms)",
                m.entries, m.checks, m.passed, m.failed, m.non_generic, m.wall_time_ms
            )?;
            if let Some(p) = json {
                open(&p)?.write_all(outcome.report.to_json()?.as_bytes())?;
            }
            if let Some(p) = csv {
                outcome.report.write_csv(open(&p)?)?;
            }
            Ok(!outcome.any_fail())
        }
        Command::Tables { d, max_n, csv, route } => {
            let t = match route {
                TableRoute::Fourier => rank_tables(d, max_n)?,
                TableRoute::Enumeration => rank_tables_by_enumeration(d, max_n)?,
            };
            match csv {
                Some(p) => write_tables_csv(&t, open(&p)?)?,
                None => write_tables_csv(&t, &mut out)?,
            }
            Ok(true)
        }
        Command::List => {
            for e in entries() {
                writeln!(
                    out,
                    "{}\tL={}\tD={}\torder={}\t{}",
                    e.id,
                    e.level(),
                    e.denom(),
                    rat(Rat::from_integer(e.default_order)),
                    e.anchor
                )?;
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

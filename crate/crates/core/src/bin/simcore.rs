use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use simcore::counting;
use simcore::crosscheck::{self, count_consecutive, Method};
use simcore::enumeration::enumerate_cores;
use simcore::finiteness::{analyze, witness};
use simcore::powerseries::{closed_form_counts, series_from_recurrence};
use simcore::{betaset, CorePoset, CoreSpec, Count, Error, Partition, Rational, Series};

const EXIT_NOT_CORE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INFINITE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "simcore", version, about = "Enumerate and count simultaneous core partitions")]
struct Cli {
    /// Output format; `tsv` applies to `series` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Lines)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Structured,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of simultaneous cores, by enumeration or for a consecutive run.
    Count {
        moduli: Vec<String>,
        /// Count (t, t+1, ..., t+p)-cores instead of enumerating explicit moduli.
        #[arg(long, value_name = "T", requires = "p")]
        consecutive: Option<usize>,
        #[arg(long, value_name = "P")]
        p: Option<usize>,
        #[arg(long, default_value = "recurrence")]
        method: Method,
    },
    /// List every core in canonical order.
    Enumerate {
        #[arg(required = true)]
        moduli: Vec<String>,
    },
    /// Exit 0 if the partition is a simultaneous core, 1 otherwise.
    Check {
        partition: String,
        #[arg(required = true)]
        moduli: Vec<String>,
    },
    /// Count, largest size, total and average size, self-conjugate count.
    Stats {
        #[arg(required = true)]
        moduli: Vec<String>,
    },
    /// Coefficients f_0, ..., f_N.
    Series {
        #[arg(long)]
        p: usize,
        #[arg(short = 'N', value_name = "N")]
        order: usize,
        /// Expand the closed-form generating function instead of the recurrence.
        #[arg(long)]
        closed_form: bool,
    },
    /// Members 0..=k of the infinite family for moduli sharing a factor.
    Witness {
        #[arg(required = true)]
        moduli: Vec<String>,
        #[arg(short = 'n', value_name = "K")]
        k: usize,
    },
    /// Interval poset ground set and cover relations.
    Poset {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        p: usize,
    },
    /// Cross-validate all counting routes.
    Selftest {
        #[arg(long, default_value_t = 8)]
        t_max: usize,
        #[arg(long, default_value_t = 3)]
        p_max: usize,
    },
}

enum Failure {
    Usage(String),
    Infinite(usize),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InfiniteFamily { gcd } => Failure::Infinite(gcd),
            Error::InexactDivision { .. }
            | Error::NonVanishingNumerator { .. }
            | Error::NonIntegralCoefficient { .. } => Failure::Internal(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Output {
    stdout: String,
    code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

fn parse_spec(moduli: &[String]) -> Result<CoreSpec, Failure> {
    if moduli.is_empty() {
        return Err(Failure::Usage("no moduli given".into()));
    }
    Ok(moduli.join(" ").parse::<CoreSpec>()?)
}

fn structured(command: &str, spec: Value, result: Value) -> String {
    let doc = json!({ "command": command, "spec": spec, "result": result });
    let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
    s.push('\n');
    s
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().fold(String::new(), |mut acc, line| {
        acc.push_str(&line);
        acc.push('\n');
        acc
    })
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let format = cli.format;
    if format == Format::Tsv && !matches!(cli.command, Command::Series { .. }) {
        return Err(Failure::Usage("--format tsv is only available for series".into()));
    }
    match cli.command {
        Command::Count {
            moduli,
            consecutive,
            p,
            method,
        } => match consecutive {
            Some(t) => {
                if !moduli.is_empty() {
                    return Err(Failure::Usage("give either moduli or --consecutive".into()));
                }
                let p = p.expect("clap enforces --p");
                let value = count_consecutive(t, p, method)?;
                Ok(Output::ok(match format {
                    Format::Structured => structured(
                        "count",
                        json!({ "t": t, "p": p }),
                        json!({ "method": method.name(), "count": value.to_string() }),
                    ),
                    _ => format!("{value}\n"),
                }))
            }
            None => {
                if p.is_some() {
                    return Err(Failure::Usage("--p needs --consecutive".into()));
                }
                let spec = parse_spec(&moduli)?;
                let report = analyze(&spec);
                let family = match enumerate_cores(&spec) {
                    Err(Error::InfiniteFamily { gcd }) => {
                        let stdout = match format {
                            Format::Structured => structured(
                                "count",
                                json!(spec),
                                json!({ "finiteness": report, "count": "infinite" }),
                            ),
                            _ => "infinite\n".to_string(),
                        };
                        eprintln!("moduli share the factor {gcd}");
                        return Ok(Output {
                            stdout,
                            code: EXIT_INFINITE,
                        });
                    }
                    other => other?,
                };
                let count = Count::from(family.len());
                let mut recurrence = None;
                if let Some((t, p)) = spec.as_consecutive() {
                    let f_t = counting::f(t as isize, p);
                    eprintln!("consecutive run t={t} p={p}: recurrence gives f_t = {f_t}");
                    if f_t != count {
                        return Err(Failure::Internal(format!(
                            "enumeration found {count} cores but the recurrence gives {f_t}"
                        )));
                    }
                    recurrence = Some(f_t.to_string());
                }
                Ok(Output::ok(match format {
                    Format::Structured => structured(
                        "count",
                        json!(spec),
                        json!({
                            "finiteness": report,
                            "count": count.to_string(),
                            "recurrence": recurrence,
                        }),
                    ),
                    _ => format!("{count}\n"),
                }))
            }
        },
        Command::Enumerate { moduli } => {
            let spec = parse_spec(&moduli)?;
            let family = enumerate_cores(&spec)?;
            Ok(Output::ok(match format {
                Format::Structured => structured(
                    "enumerate",
                    json!(spec),
                    serde_json::to_value(&family).expect("family serializes"),
                ),
                _ => lines(family.members().iter().map(ToString::to_string)),
            }))
        }
        Command::Check { partition, moduli } => {
            let lambda: Partition = partition.parse()?;
            let spec = parse_spec(&moduli)?;
            let by_hooks = betaset::is_simultaneous_core(&lambda, &spec);
            let by_beta = lambda.beta_set().is_simultaneous_core(&spec);
            if by_hooks != by_beta {
                return Err(Failure::Internal(format!(
                    "hook test says {by_hooks} but beta-set test says {by_beta}"
                )));
            }
            let stdout = match format {
                Format::Structured => structured(
                    "check",
                    json!(spec),
                    json!({ "partition": lambda, "core": by_hooks }),
                ),
                _ => format!("{by_hooks}\n"),
            };
            Ok(Output {
                stdout,
                code: if by_hooks { 0 } else { EXIT_NOT_CORE },
            })
        }
        Command::Stats { moduli } => {
            let spec = parse_spec(&moduli)?;
            let stats = enumerate_cores(&spec)?.stats();
            let average = stats
                .average_size()
                .expect("the empty partition is always a core");
            Ok(Output::ok(match format {
                Format::Structured => structured(
                    "stats",
                    json!(spec),
                    json!({
                        "count": stats.count.to_string(),
                        "max_size": stats.max_size,
                        "total_size": stats.total_size.to_string(),
                        "average": average.to_string(),
                        "self_conjugate_count": stats.self_conjugate_count,
                    }),
                ),
                _ => {
                    let mut s = String::new();
                    writeln!(s, "count: {}", stats.count).unwrap();
                    writeln!(s, "max_size: {}", stats.max_size).unwrap();
                    writeln!(s, "total_size: {}", stats.total_size).unwrap();
                    writeln!(s, "average: {average}").unwrap();
                    writeln!(s, "self_conjugate_count: {}", stats.self_conjugate_count).unwrap();
                    s
                }
            }))
        }
        Command::Series {
            p,
            order,
            closed_form,
        } => {
            if p == 0 {
                return Err(Failure::Usage("--p must be positive".into()));
            }
            let coeffs: Vec<Count> = if closed_form {
                closed_form_counts(p, order)?
            } else {
                series_from_recurrence::<Rational>(p, order).to_counts()?
            };
            let series = Series::new(
                coeffs
                    .iter()
                    .map(|c| Rational::from_integer(c.clone().into()))
                    .collect(),
            );
            Ok(Output::ok(match format {
                Format::Structured => structured(
                    "series",
                    json!({ "p": p, "N": order, "closed_form": closed_form }),
                    json!(series.to_strings()),
                ),
                Format::Tsv => lines(coeffs.iter().enumerate().map(|(t, c)| format!("{t}\t{c}"))),
                Format::Lines => format!("{series}\n"),
            }))
        }
        Command::Witness { moduli, k } => {
            let spec = parse_spec(&moduli)?;
            let members = (0..=k)
                .map(|n| witness(&spec, n))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Output::ok(match format {
                Format::Structured => structured(
                    "witness",
                    json!(spec),
                    json!({ "gcd": spec.gcd(), "members": members }),
                ),
                _ => lines(members.iter().map(ToString::to_string)),
            }))
        }
        Command::Poset { t, p } => {
            if t == 0 || p == 0 {
                return Err(Failure::Usage("--t and --p must be positive".into()));
            }
            let export = CorePoset::new(t, p).export();
            Ok(Output::ok(match format {
                Format::Structured => structured(
                    "poset",
                    json!({ "t": t, "p": p }),
                    serde_json::to_value(&export).expect("poset serializes"),
                ),
                _ => {
                    let ground: Vec<String> = export.ground.iter().map(ToString::to_string).collect();
                    let mut s = format!("ground: {}\n", ground.join(" "));
                    for (lo, hi) in &export.covers {
                        writeln!(s, "{lo} < {hi}").unwrap();
                    }
                    s
                }
            }))
        }
        Command::Selftest { t_max, p_max } => {
            let results = crosscheck::run_matrix(t_max, p_max);
            let failed = results.iter().filter(|r| !r.passed).count();
            let stdout = match format {
                Format::Structured => structured(
                    "selftest",
                    json!({ "t_max": t_max, "p_max": p_max }),
                    json!({ "failed": failed, "checks": results }),
                ),
                _ => {
                    let mut s = lines(results.iter().map(ToString::to_string));
                    writeln!(s, "{} checks, {failed} failed", results.len()).unwrap();
                    s
                }
            };
            Ok(Output {
                stdout,
                code: if failed == 0 { 0 } else { EXIT_INTERNAL },
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Infinite(gcd)) => {
            println!("infinite");
            eprintln!("moduli share the factor {gcd}");
            ExitCode::from(EXIT_INFINITE)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

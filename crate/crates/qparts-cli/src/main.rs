//! qparts: sequence tables, identity verification, and bijection demos for
//! smallest-part partition statistics.
//!
//! ```text
//! qparts seq a --max-n 40 --format bfile      # a(n), OEIS A117989 layout
//! qparts verify all                           # every identity at defaults
//! qparts bijection psi --n 6                  # the seven pairs at n = 6
//! ```
//!
//! Exit status is 0 when every requested check passes, 1 when any
//! verification fails, 2 on usage errors. Verdicts go to standard output;
//! mismatch diagnostics go to standard error. The --format flag only
//! changes rendering, never the checks themselves.

use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use qparts::bijections::{verify_bijection, verify_range, Bijection};
use qparts::identities::{
    verify_cauchy_specializations, verify_chain, verify_formula1, verify_formula2,
    verify_formula2_dp, verify_gm, verify_heine_specialization, Formula1Mode, VerificationSummary,
};
use qparts::partitions::{
    count_no_ones, count_smallest_at_least, count_smallest_exactly_once, p_fixed_diff_dp, p_table,
};

#[derive(Parser)]
#[command(name = "qparts", version, about = "Smallest-part partition statistics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a statistic as a table of n, value rows for n = 1..=max-n.
    Seq {
        /// Which statistic to tabulate.
        #[arg(value_enum)]
        stat: Stat,
        /// Largest n to print.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        /// Multiplicity threshold; required by (and only valid for) a_m.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: Option<u32>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Check an identity family and exit 0 iff every comparison passes.
    Verify {
        /// Which identity family to check.
        #[arg(value_enum)]
        target: Target,
        /// Enumeration bound (default depends on the target).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: Option<u32>,
        /// Series truncation order (default depends on the target).
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..=1_000_000))]
        order: Option<i64>,
        /// Largest multiplicity threshold for the gm target (default 5).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: Option<u32>,
        /// Bound for the formula2 fast-path route (default 30).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        dp_max_n: Option<u32>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Map one family through a bijection and print every source ↦ image pair.
    Bijection {
        /// Which map to demonstrate.
        #[arg(value_enum)]
        which: Map,
        /// The n indexing the source family.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Stat {
    /// p(n): all partitions of n.
    #[value(name = "p")]
    P,
    /// a(n): smallest part occurs at least twice (OEIS A117989).
    #[value(name = "a")]
    A,
    /// c(n): smallest part occurs exactly once.
    #[value(name = "c")]
    C,
    /// d(n): partitions of n+1 with no part 1.
    #[value(name = "d")]
    D,
    /// p(2n, n): partitions of 2n with largest minus smallest equal to n.
    #[value(name = "p2n_n")]
    P2nN,
    /// a_m(n): smallest part occurs at least m times; pass --m.
    #[value(name = "a_m")]
    AM,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    /// a(n) = 2p(n) - p(n+1), by enumeration and by both series routes.
    Formula1,
    /// a(n) = p(2n, n), by enumeration plus the psi image cardinality.
    Formula2,
    /// The six-stage sum rewrites S1..S6 agree coefficientwise.
    Chain,
    /// The S2 = S3 base-change specialization.
    Heine,
    /// The four geometric-specialization summation identities.
    Cauchy,
    /// G_m coefficients against enumerated multiplicity counts.
    Gm,
    /// phi: C(n) -> D(n), exhaustive per n.
    BijectionPhi,
    /// psi: A(n) -> F(n), exhaustive per n.
    BijectionPsi,
    /// Every target above at its own defaults.
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Map {
    Phi,
    Psi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Aligned columns with a header row.
    Table,
    /// Comma-separated with a header row.
    Csv,
    /// OEIS b-file layout: "n value" per line, no header.
    Bfile,
}

/// One verdict row of a verification run.
struct Check {
    label: String,
    pass: bool,
    notes: Vec<String>,
}

/// Optional bounds from the command line; each target resolves its own
/// defaults so `verify all` mixes per-target defaults with any overrides.
#[derive(Clone, Copy)]
struct Bounds {
    max_n: Option<u32>,
    order: Option<i64>,
    m: Option<u32>,
    dp_max_n: Option<u32>,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Seq { stat, max_n, m, format } => run_seq(stat, max_n, m, format),
        Command::Verify { target, max_n, order, m, dp_max_n, format } => {
            run_verify(target, Bounds { max_n, order, m, dp_max_n }, format)
        }
        Command::Bijection { which, n, format } => run_bijection(which, n, format),
    }
}

fn usage_error(message: &str) -> ! {
    Cli::command().error(clap::error::ErrorKind::InvalidValue, message).exit()
}

fn run_seq(stat: Stat, max_n: u32, m: Option<u32>, format: Format) -> ExitCode {
    match (stat, m) {
        (Stat::AM, None) => usage_error("--m is required for a_m"),
        (Stat::AM, Some(_)) | (_, None) => {}
        (_, Some(_)) => usage_error("--m only applies to a_m"),
    }
    let table = match stat {
        Stat::P => Some(p_table(max_n)),
        _ => None,
    };
    let rows: Vec<(u32, BigInt)> = (1..=max_n)
        .map(|n| {
            let value = match stat {
                Stat::P => table.as_ref().unwrap()[n as usize].clone(),
                Stat::A => count_smallest_at_least(n, 2),
                Stat::C => count_smallest_exactly_once(n),
                Stat::D => count_no_ones(n),
                Stat::P2nN => p_fixed_diff_dp(2 * n, n),
                Stat::AM => count_smallest_at_least(n, m.unwrap()),
            };
            (n, value)
        })
        .collect();
    print!("{}", render_rows(&rows, format));
    ExitCode::SUCCESS
}

/// Rows as two columns. The layout depends only on the numbers, not on the
/// statistic, so degenerate statistics print byte-identical tables.
fn render_rows(rows: &[(u32, BigInt)], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Table => {
            let nw = rows.iter().map(|(n, _)| n.to_string().len()).max().unwrap_or(1).max(1);
            let vw =
                rows.iter().map(|(_, v)| v.to_string().len()).max().unwrap_or(1).max("value".len());
            out.push_str(&format!("{:>nw$}  {:>vw$}\n", "n", "value"));
            for (n, value) in rows {
                out.push_str(&format!("{n:>nw$}  {value:>vw$}\n"));
            }
        }
        Format::Csv => {
            out.push_str("n,value\n");
            for (n, value) in rows {
                out.push_str(&format!("{n},{value}\n"));
            }
        }
        Format::Bfile => {
            for (n, value) in rows {
                out.push_str(&format!("{n} {value}\n"));
            }
        }
    }
    out
}

fn run_verify(target: Target, bounds: Bounds, format: Format) -> ExitCode {
    let checks = checks_for(target, bounds);
    emit_checks(&checks, format)
}

fn checks_for(target: Target, b: Bounds) -> Vec<Check> {
    match target {
        Target::Formula1 => {
            let n_max = b.max_n.unwrap_or(40);
            let order = b.order.unwrap_or(200) as u32;
            vec![
                summary_check(verify_formula1(n_max, Formula1Mode::Enumeration)),
                summary_check(verify_formula1(order, Formula1Mode::Series)),
                summary_check(verify_formula1(order, Formula1Mode::ClosedForm)),
            ]
        }
        Target::Formula2 => vec![
            summary_check(verify_formula2(b.max_n.unwrap_or(18))),
            summary_check(verify_formula2_dp(b.dp_max_n.unwrap_or(30))),
        ],
        Target::Chain => {
            let order = b.order.unwrap_or(100);
            let reports = verify_chain(order);
            let mut checks: Vec<Check> = reports
                .windows(2)
                .map(|pair| Check {
                    label: format!("{} = {} [q^1..=q^{order}]", pair[0].stage, pair[1].stage),
                    pass: pair[0].equal_to_next,
                    notes: pair[0]
                        .first_mismatch
                        .map(|e| format!("first differing coefficient at q^{e}"))
                        .into_iter()
                        .collect(),
                })
                .collect();
            let s6 = &reports[reports.len() - 1].series;
            let cancels = s6.lowest_exp() == -1
                && s6.coeff(-1).unwrap() == BigInt::from(0)
                && s6.coeff(0).unwrap() == BigInt::from(0);
            checks.push(Check {
                label: "S6 cancels q^-1 and q^0".into(),
                pass: cancels,
                notes: if cancels {
                    Vec::new()
                } else {
                    vec![format!("S6 opens at q^{}", s6.lowest_exp())]
                },
            });
            checks
        }
        Target::Heine => vec![summary_check(verify_heine_specialization(b.order.unwrap_or(100)))],
        Target::Cauchy => {
            vec![summary_check(verify_cauchy_specializations(b.order.unwrap_or(100)))]
        }
        Target::Gm => {
            let m_max = b.m.unwrap_or(5);
            let n_max = b.max_n.unwrap_or(30);
            let order = b.order.unwrap_or(100);
            if order < n_max as i64 {
                usage_error("gm needs --order at least as large as --max-n");
            }
            vec![summary_check(verify_gm(m_max, n_max, order))]
        }
        Target::BijectionPhi => bijection_checks(Bijection::Phi, b.max_n.unwrap_or(30)),
        Target::BijectionPsi => bijection_checks(Bijection::Psi, b.max_n.unwrap_or(18)),
        Target::All => [
            Target::Formula1,
            Target::Formula2,
            Target::Chain,
            Target::Heine,
            Target::Cauchy,
            Target::Gm,
            Target::BijectionPhi,
            Target::BijectionPsi,
        ]
        .into_iter()
        .flat_map(|t| checks_for(t, b))
        .collect(),
    }
}

fn summary_check(summary: VerificationSummary) -> Check {
    let notes = summary
        .mismatches
        .iter()
        .take(8)
        .map(|m| format!("{} at {}: {} vs {}", m.check, m.at, m.lhs, m.rhs))
        .collect();
    Check {
        label: format!("{} [{}..={}]", summary.identity, summary.lo, summary.hi),
        pass: summary.pass,
        notes,
    }
}

fn bijection_checks(which: Bijection, n_max: u32) -> Vec<Check> {
    verify_range(which, n_max)
        .into_iter()
        .map(|report| {
            let bad_trips = report.traces.iter().filter(|t| !t.round_trip_ok).count();
            let mut notes = Vec::new();
            if !report.image_is_target {
                notes.push("image set differs from the target family".to_string());
            }
            if bad_trips > 0 {
                notes.push(format!("{bad_trips} round trips failed"));
            }
            Check {
                label: format!(
                    "{}: {} -> {} ({} members)",
                    which,
                    which.source_family(report.n),
                    which.target_family(report.n),
                    report.source_size
                ),
                pass: report.pass,
                notes,
            }
        })
        .collect()
}

/// Renders verdict rows in the requested format and maps the overall result
/// to the exit status. Verdicts are fixed before rendering starts.
fn emit_checks(checks: &[Check], format: Format) -> ExitCode {
    let passed = checks.iter().filter(|c| c.pass).count();
    match format {
        Format::Table => {
            for check in checks {
                println!("[{}] {}", if check.pass { "PASS" } else { "FAIL" }, check.label);
            }
            println!("{passed}/{} checks passed", checks.len());
        }
        Format::Csv => {
            println!("check,verdict");
            for check in checks {
                println!("{},{}", check.label, if check.pass { "pass" } else { "fail" });
            }
            eprintln!("{passed}/{} checks passed", checks.len());
        }
        Format::Bfile => {
            for (i, check) in checks.iter().enumerate() {
                println!("{} {}", i + 1, u8::from(check.pass));
            }
            eprintln!("{passed}/{} checks passed", checks.len());
        }
    }
    for check in checks.iter().filter(|c| !c.pass) {
        for note in &check.notes {
            eprintln!("{}: {note}", check.label);
        }
    }
    if all_passed(checks) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

fn run_bijection(which: Map, n: u32, format: Format) -> ExitCode {
    let which = match which {
        Map::Phi => Bijection::Phi,
        Map::Psi => Bijection::Psi,
    };
    let report = verify_bijection(which, n);
    match format {
        Format::Table => {
            for trace in &report.traces {
                let mark = if trace.round_trip_ok { "" } else { "  [round trip FAILED]" };
                println!("{} \u{21a6} {}{mark}", trace.source, trace.image);
            }
            println!(
                "{which}: {} -> {}: {} pairs, image matches target: {}",
                which.source_family(n),
                which.target_family(n),
                report.traces.len(),
                if report.image_is_target { "yes" } else { "no" },
            );
        }
        Format::Csv => {
            println!("source,image,round_trip");
            for trace in &report.traces {
                println!(
                    "{},{},{}",
                    trace.source,
                    trace.image,
                    if trace.round_trip_ok { "ok" } else { "failed" }
                );
            }
        }
        Format::Bfile => {
            for (i, trace) in report.traces.iter().enumerate() {
                println!("{} {}", i + 1, u8::from(trace.round_trip_ok));
            }
        }
    }
    if !report.pass {
        eprintln!(
            "{which} is not a verified bijection at n={n}: image matches target: {}, sizes {} -> {}",
            if report.image_is_target { "yes" } else { "no" },
            report.source_size,
            report.target_size,
        );
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows() -> Vec<(u32, BigInt)> {
        vec![(1, BigInt::from(1)), (12, BigInt::from(77))]
    }

    #[test]
    fn bfile_rows_are_bare_pairs() {
        assert_eq!(render_rows(&rows(), Format::Bfile), "1 1\n12 77\n");
    }

    #[test]
    fn csv_rows_have_header() {
        assert_eq!(render_rows(&rows(), Format::Csv), "n,value\n1,1\n12,77\n");
    }

    #[test]
    fn table_rows_align() {
        let rendered = render_rows(&rows(), Format::Table);
        assert_eq!(rendered, " n  value\n 1      1\n12     77\n");
    }

    #[test]
    fn exit_verdict_tracks_failures() {
        let ok = Check { label: "x".into(), pass: true, notes: Vec::new() };
        let bad = Check { label: "y".into(), pass: false, notes: vec!["boom".into()] };
        assert!(all_passed(&[ok]));
        let both = [Check { label: "x".into(), pass: true, notes: Vec::new() }, bad];
        assert!(!all_passed(&both));
    }
}

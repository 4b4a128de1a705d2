//! Command-line front end. [`run`] takes the full argument vector and returns
//! the exit code with everything that should be printed, so it can be tested
//! without spawning a process.
//!
//! Exit codes: 0 success, 1 a verification check failed or the engine gave
//! up (cap exceeded), 2 the input could not be parsed or does not apply.

use clap::{Parser, Subcommand, ValueEnum};

use crate::blockbij::BlockBijection;
use crate::engine::monoid::{
    cardinality_oracle, enumerate_letters, factorizable_letters, phi_letters, DEFAULT_ELEMENT_CAP,
};
use crate::engine::report::Report;
use crate::engine::todd_coxeter::DEFAULT_CLASS_CAP;
use crate::engine::verify;
use crate::error::{Error, Result};
use crate::words::{phi_eval, Word};

/// Environment variable overriding the Todd–Coxeter class cap.
pub const TC_CAP_VAR: &str = "INSTAR_TC_CAP";

/// Random pairs drawn for the sampled unique-inverse check at degree 5 and up.
pub const INVERSE_SAMPLES: usize = 20_000;

/// Longest word length for the reverse/inverse suite.
pub const SYMMETRIC_WORD_LEN: usize = 6;

#[derive(Debug, Parser)]
#[command(
    name = "instar",
    version,
    about = "Block bijections and the dual symmetric inverse monoid"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Product A·B of two block bijections (A applied first).
    Mul { n: usize, a: String, b: String },
    /// Inverse of a block bijection.
    Inv { n: usize, a: String },
    /// Image of a word over x, t, s1, s2, ... (`1` is the empty word).
    Eval { n: usize, word: String },
    /// Draw a block bijection.
    Render {
        n: usize,
        a: String,
        /// Graphviz output instead of ASCII.
        #[arg(long)]
        dot: bool,
    },
    /// Enumerate the monoid generated by a standard generating set.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t = Gens::Xs)]
        gens: Gens,
        /// Also print every element, in shortlex order of representative words.
        #[arg(long)]
        list: bool,
    },
    /// Number of block bijections of degree n, counted independently of enumeration.
    Card { n: usize },
    /// Run verification suites.
    Verify {
        n: usize,
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Gens {
    /// x, s1, ..., s(n-1)
    Xs,
    /// t, s1, ..., s(n-1)
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Relations,
    Presentation,
    Tables,
    Local,
    NormalForms,
    Inverse,
    Properties,
    All,
}

enum Failure {
    Input(Error),
    Engine(Error),
}

fn input<T>(r: Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(Failure::Input)
}

fn engine<T>(r: Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(Failure::Engine)
}

fn tc_cap() -> std::result::Result<usize, Failure> {
    match std::env::var(TC_CAP_VAR) {
        Err(_) => Ok(DEFAULT_CLASS_CAP),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(Error::Parse(format!("{TC_CAP_VAR}={v} is not a count")))),
    }
}

fn need_degree(n: usize, min: usize) -> std::result::Result<(), Failure> {
    if n < min {
        return Err(Failure::Input(Error::DegreeTooSmall { degree: n, min }));
    }
    Ok(())
}

/// Runs `argv` (including the program name) and returns `(exit code, output)`.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(Failure::Input(e)) => (2, format!("error: {e}\n")),
        Err(Failure::Engine(e)) => (1, format!("error: {e}\n")),
    }
}

fn execute(cmd: Command) -> std::result::Result<(i32, String), Failure> {
    let ok = |s: String| Ok((0, s + "\n"));
    match cmd {
        Command::Mul { n, a, b } => {
            let a = input(BlockBijection::parse(n, &a))?;
            let b = input(BlockBijection::parse(n, &b))?;
            ok(input(a.compose(&b))?.to_string())
        }
        Command::Inv { n, a } => ok(input(BlockBijection::parse(n, &a))?.inverse().to_string()),
        Command::Eval { n, word } => {
            let w: Word = input(word.parse())?;
            ok(input(phi_eval(&w, n))?.to_string())
        }
        Command::Render { n, a, dot } => {
            let a = input(BlockBijection::parse(n, &a))?;
            let text = if dot {
                a.render_dot()
            } else {
                a.render_ascii()
            };
            Ok((0, text.trim_end().to_string() + "\n"))
        }
        Command::Enumerate { n, gens, list } => {
            need_degree(n, 1)?;
            let letters = match gens {
                Gens::Xs => phi_letters(n),
                Gens::F => factorizable_letters(n),
            };
            let m = engine(enumerate_letters(n, &letters, DEFAULT_ELEMENT_CAP))?;
            let mut out = format!("{}\n", m.len());
            if list {
                for (i, a) in m.elements().expect("concrete").iter().enumerate() {
                    out += &format!("{a}\t{}\n", m.rep_word(i));
                }
            }
            Ok((0, out))
        }
        Command::Card { n } => {
            need_degree(n, 1)?;
            ok(cardinality_oracle(n).to_string())
        }
        Command::Verify { n, suite } => {
            let report = run_suite(n, suite)?;
            let code = if report.passed() { 0 } else { 1 };
            Ok((code, report.to_string()))
        }
    }
}

/// Minimum and maximum degree at which a suite applies. The upper bounds keep
/// exhaustive suites at desk scale.
fn degree_range(suite: Suite) -> (usize, usize) {
    match suite {
        Suite::Relations => (2, usize::MAX),
        Suite::Presentation => (3, usize::MAX),
        Suite::Tables => (4, usize::MAX),
        Suite::Local => (4, 5),
        Suite::NormalForms => (3, 3),
        Suite::Inverse => (1, 5),
        Suite::Properties => (3, 5),
        Suite::All => (1, usize::MAX),
    }
}

fn suite_name(suite: Suite) -> String {
    suite
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn run_suite(n: usize, suite: Suite) -> std::result::Result<Report, Failure> {
    if suite == Suite::All {
        need_degree(n, 1)?;
        let mut report = Report::new();
        for s in [
            Suite::Relations,
            Suite::Presentation,
            Suite::Tables,
            Suite::Local,
            Suite::NormalForms,
            Suite::Inverse,
            Suite::Properties,
        ] {
            let (lo, hi) = degree_range(s);
            if n < lo || n > hi {
                report.note(format!("skipped {} at n={n}", suite_name(s)));
            } else {
                report.extend(run_suite(n, s)?);
            }
        }
        return Ok(report);
    }
    let (lo, hi) = degree_range(suite);
    need_degree(n, lo)?;
    if n > hi {
        return Err(Failure::Input(Error::IndexOutOfRange { index: n, lo, hi }));
    }
    let cap = tc_cap()?;
    engine(suite_report(n, suite, cap))
}

fn suite_report(n: usize, suite: Suite, cap: usize) -> Result<Report> {
    match suite {
        Suite::Relations => verify::verify_relations(n),
        Suite::Presentation => verify::check_presentation(n, cap),
        Suite::Tables => {
            let mut r = Report::new();
            if n >= 5 {
                r.extend(verify::verify_table1(n)?);
            } else {
                r.note(format!("skipped table1 at n={n}"));
            }
            r.extend(verify::verify_table2(n)?);
            Ok(r)
        }
        Suite::Local => verify::verify_local_iso(n),
        Suite::NormalForms => verify::verify_normal_forms_3(),
        Suite::Inverse => verify::verify_inverse_structure(n, INVERSE_SAMPLES, cap),
        Suite::Properties => {
            let mut r = verify::verify_prop_conditions(n)?;
            r.extend(verify::verify_property_p(n)?);
            r.extend(verify::verify_symmetric_words(n, SYMMETRIC_WORD_LEN)?);
            Ok(r)
        }
        Suite::All => unreachable!("handled by run_suite"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        run(std::iter::once("instar").chain(args.iter().copied()))
    }

    #[test]
    fn documented_examples() {
        assert_eq!(
            run_args(&["eval", "3", "x x x"]),
            run_args(&["eval", "3", "x"])
        );
        assert_eq!(run_args(&["card", "3"]), (0, "25\n".into()));
        assert_eq!(
            run_args(&["mul", "3", "1;1|2;2|3;3", "1,2;3|3;1,2"]),
            (0, "1,2;3|3;1,2\n".into())
        );
    }

    #[test]
    fn parse_errors_exit_two() {
        assert_eq!(run_args(&["mul", "3", "1;1|2;2", "1;1|2;2|3;3"]).0, 2);
        assert_eq!(run_args(&["eval", "3", "q"]).0, 2);
        assert_eq!(run_args(&["eval", "3", "s3"]).0, 2);
        assert_eq!(run_args(&["bogus"]).0, 2);
        assert_eq!(run_args(&["verify", "2", "presentation"]).0, 2);
        assert_eq!(run_args(&["verify", "4", "normal-forms"]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(run_args(&["enumerate", "3"]), (0, "25\n".into()));
        assert_eq!(
            run_args(&["enumerate", "3", "--gens", "f"]),
            (0, "16\n".into())
        );
        let (_, out) = run_args(&["enumerate", "2", "--list"]);
        assert_eq!(out.lines().count(), 4);
        assert!(out.lines().nth(1).unwrap().starts_with("1;1|2;2\t1"));
    }

    #[test]
    fn verify_three_all() {
        let (code, out) = run_args(&["verify", "3", "all"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("check_presentation n=3 lhs=25 rhs=25 PASS"));
        assert!(out.contains("# skipped local at n=3"));
        assert!(!out.contains("FAIL"));
    }
}

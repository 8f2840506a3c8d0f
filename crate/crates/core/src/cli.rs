//! The `maclagan` command line.
//!
//! Exit codes: 0 ok, 1 violation or counterexample (witness on stdout),
//! 2 usage or input error, 3 cap or budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::One;

use crate::constructions::{
    seq_exp, seq_polypower, seq_rootlog, verify_all, DegreeMode, IdealSequence, MaclaganBuilder,
};
use crate::error::Error;
use crate::hierarchy::{bound_pigeonhole, bound_slow, fgh_inverse_with, fgh_with, CappedNat, ParamFn};
use crate::ordinals::{Convention, Ordinal};
use crate::ramsey::{
    adjacent_ramsey_number, find_adjacent_monotone, reduce_to_coloring, Coloring, RamseyBudget,
};
use crate::search::{max_bad_length, SearchBudget, SearchOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "maclagan", version, about = "Bad sequences of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a bad sequence and write it as JSON.
    Seq(SeqArgs),
    /// Check badness, degree bounds and length of a sequence file.
    Verify(VerifyArgs),
    /// Exhaustively search for the longest bad sequence.
    Search(SearchArgs),
    /// Colorings of pairs and adjacent-Ramsey numbers.
    Ramsey {
        #[command(subcommand)]
        command: RamseyCommand,
    },
    /// Evaluate the fast-growing hierarchy.
    Fgh(FghArgs),
    /// Closed-form upper bounds.
    Bounds {
        #[command(subcommand)]
        command: BoundsCommand,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Maclagan,
    Exp,
    Polypower,
    Rootlog,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ConventionArg {
    Standard,
    Shifted,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Standard => Convention::Standard,
            ConventionArg::Shifted => Convention::Shifted,
        }
    }
}

#[derive(Args, Debug)]
struct SeqArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    alpha: Option<Ordinal>,
    #[arg(long)]
    l: Option<u64>,
    /// Ambient dimension; defaults to the least one that fits `alpha`.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value = "1000000")]
    cap: BigUint,
    #[arg(long)]
    c: Option<u32>,
    #[arg(long)]
    j: Option<u32>,
    /// Emit only this many leading entries.
    #[arg(long)]
    prefix: Option<u64>,
    /// Emit entries 0..=F_alpha(l), enough to certify the length bound.
    #[arg(long)]
    certified: bool,
    #[arg(long, value_enum, default_value = "standard")]
    convention: ConventionArg,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    PlusH,
    Param,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Defaults to plus-h when the file records an ordinal, param otherwise.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Require more than F_ord(l) entries.
    #[arg(long)]
    target_fgh: Option<Ordinal>,
    #[arg(long, default_value = "1000000")]
    cap: BigUint,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    l: u64,
    #[arg(long, default_value = "const:0")]
    param: ParamFn,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    include_zero: bool,
    /// Maximal number of search nodes.
    #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
    budget: u64,
    #[arg(long, default_value_t = SearchBudget::default().max_universe)]
    max_universe: usize,
    #[arg(long)]
    max_seconds: Option<u64>,
    #[arg(long)]
    no_prune: bool,
    #[arg(long)]
    symmetry: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum RamseyCommand {
    /// Turn a bad sequence into a coloring of pairs.
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Look for a monotone adjacent triple in a coloring.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Least R such that every bounded coloring of {l..R} has a monotone triple.
    Number {
        #[arg(long)]
        l: u64,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        rmax: u64,
        #[arg(long, default_value_t = RamseyBudget::default().max_colorings)]
        budget: u128,
    },
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
struct FghArgs {
    #[command(subcommand)]
    command: Option<FghCommand>,
    #[arg(long)]
    alpha: Option<Ordinal>,
    #[arg(long)]
    i: Option<u64>,
    #[arg(long, default_value = "1000000")]
    cap: BigUint,
    #[arg(long, value_enum, default_value = "standard")]
    convention: ConventionArg,
}

#[derive(Subcommand, Debug)]
enum FghCommand {
    /// max { j : F_alpha(j) ≤ i }, or 0.
    Inverse {
        #[arg(long)]
        alpha: Ordinal,
        #[arg(long)]
        i: u64,
        #[arg(long, value_enum, default_value = "standard")]
        convention: ConventionArg,
    },
}

#[derive(Subcommand, Debug)]
enum BoundsCommand {
    /// 2^((l+c+1)^(d+2)) + 1 for constant parameters.
    Pigeonhole {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        c: u64,
        #[arg(long, default_value = "1000000000")]
        cap: BigUint,
    },
    /// 2^(B(l)^(d+2)) with B given as pow2:k (2^(l+k)) or fgh:<ord>.
    Slow {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        b: BoundFn,
        #[arg(long, default_value = "1000000000")]
        cap: BigUint,
    },
}

#[derive(Clone, Debug)]
enum BoundFn {
    Pow2(u64),
    Fgh(Ordinal),
}

impl std::str::FromStr for BoundFn {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.split_once(':') {
            Some(("pow2", k)) => k.trim().parse().map(BoundFn::Pow2).map_err(|e| format!("{e}")),
            Some(("fgh", a)) => a.parse().map(BoundFn::Fgh).map_err(|e| format!("{e}")),
            _ => Err(format!("expected pow2:<k> or fgh:<ordinal>, got {s:?}")),
        }
    }
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::CapExceeded(_) | Error::BudgetExceeded(_) | Error::TargetOverflow => EXIT_BUDGET,
            Error::NotBad(..) => EXIT_VIOLATION,
            _ => EXIT_USAGE,
        };
        Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Writes `body` to `path`, or returns it for stdout.
fn emit(path: &Option<PathBuf>, body: String) -> Result<String, Error> {
    match path {
        Some(p) => {
            fs::write(p, body + "\n")
                .map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            Ok(String::new())
        }
        None => Ok(body + "\n"),
    }
}

fn required<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::Parse(format!("--{flag} is required for {family}")))
}

fn seq(a: SeqArgs) -> Result<Outcome, Error> {
    let s = match a.family {
        Family::Maclagan => {
            let alpha = required(a.alpha, "alpha", "maclagan")?;
            let l = required(a.l, "l", "maclagan")?;
            let d = a.d.unwrap_or_else(|| alpha.min_dimension());
            let b = MaclaganBuilder::new(d, a.cap).convention(a.convention.into());
            match (a.prefix, a.certified) {
                (Some(n), _) => b.prefix(&alpha, l, n)?,
                (None, true) => b.certified(&alpha, l)?,
                (None, false) => b.full(&alpha, l)?,
            }
        }
        Family::Exp => seq_exp(required(a.j, "j", "exp")?)?,
        Family::Polypower => {
            seq_polypower(required(a.c, "c", "polypower")?, required(a.j, "j", "polypower")?)?
        }
        Family::Rootlog => seq_rootlog(
            required(a.c, "c", "rootlog")?,
            a.d.unwrap_or(0),
            required(a.prefix, "prefix", "rootlog")?,
        )?,
    };
    Ok(Outcome::ok(emit(&a.output, s.to_json())?))
}

fn verify(a: VerifyArgs) -> Result<Outcome, Error> {
    let s = IdealSequence::from_json(&read(&a.input)?)?;
    let has_alpha = s.meta.as_ref().is_some_and(|m| m.alpha.is_some());
    let mode = match a.mode {
        Some(ModeArg::PlusH) => DegreeMode::PlusH,
        Some(ModeArg::Param) => DegreeMode::Param,
        None if has_alpha => DegreeMode::PlusH,
        None => DegreeMode::Param,
    };
    let convention = s
        .meta
        .as_ref()
        .and_then(|m| m.convention)
        .map_or(Convention::Standard, Convention::from);
    let target = match a.target_fgh {
        Some(alpha) => Some(fgh_with(convention, &alpha, s.l, &a.cap)),
        None => s.meta.as_ref().and_then(|m| m.target.clone()),
    };
    let record = verify_all(&s, mode, target.as_ref())?;
    let code = if record.is_ok() { EXIT_OK } else { EXIT_VIOLATION };
    let body = serde_json::to_string(&record).expect("records serialize");
    Ok(Outcome::with_code(code, body + "\n"))
}

fn search(a: SearchArgs) -> Result<Outcome, Error> {
    let options =
        SearchOptions { include_zero: a.include_zero, prune: !a.no_prune, symmetry: a.symmetry };
    let budget = SearchBudget {
        max_nodes: a.budget,
        max_universe: a.max_universe,
        max_seconds: a.max_seconds,
    };
    let r = max_bad_length(a.d, a.l, &a.param, &options, &budget)?;
    let code = if r.exhausted { EXIT_OK } else { EXIT_BUDGET };
    Ok(Outcome::with_code(code, emit(&a.output, r.to_json())?))
}

fn ramsey(c: RamseyCommand) -> Result<Outcome, Error> {
    match c {
        RamseyCommand::Reduce { input, output } => {
            let s = IdealSequence::from_json(&read(&input)?)?;
            match reduce_to_coloring(&s) {
                Ok(col) => Ok(Outcome::ok(emit(&output, col.to_json())?)),
                Err(Error::NotBad(i, j)) => Ok(Outcome::with_code(
                    EXIT_VIOLATION,
                    format!("{{\"verdict\":\"violation\",\"witness\":[{i},{j}]}}\n"),
                )),
                Err(e) => Err(e),
            }
        }
        RamseyCommand::Check { input } => {
            let col = Coloring::from_json(&read(&input)?)?;
            Ok(match find_adjacent_monotone(&col) {
                None => Outcome::ok("{\"verdict\":\"ok\"}\n".into()),
                Some((a, b, z)) => Outcome::with_code(
                    EXIT_VIOLATION,
                    format!("{{\"verdict\":\"violation\",\"witness\":[{a},{b},{z}]}}\n"),
                ),
            })
        }
        RamseyCommand::Number { l, r, rmax, budget } => {
            let budget = RamseyBudget { max_colorings: budget, ..RamseyBudget::default() };
            let n = adjacent_ramsey_number(l, r, rmax, &budget)?;
            let mut out = match n.value {
                Some(v) => format!("{v}\n"),
                None => "none\n".to_string(),
            };
            for w in &n.witnesses {
                writeln!(out, "{}", w.to_json()).expect("writing to a String");
            }
            let code = if n.value.is_some() { EXIT_OK } else { EXIT_VIOLATION };
            Ok(Outcome::with_code(code, out))
        }
    }
}

fn capped(v: CappedNat) -> Outcome {
    match v {
        CappedNat::Value(n) => Outcome::ok(format!("{n}\n")),
        CappedNat::Overflow(cap) => Outcome::with_code(EXIT_BUDGET, format!("overflow: > {cap}\n")),
    }
}

fn fgh(a: FghArgs) -> Result<Outcome, Error> {
    if let Some(FghCommand::Inverse { alpha, i, convention }) = a.command {
        return Ok(Outcome::ok(format!("{}\n", fgh_inverse_with(convention.into(), &alpha, i))));
    }
    let alpha = required(a.alpha, "alpha", "fgh")?;
    let i = required(a.i, "i", "fgh")?;
    Ok(capped(fgh_with(a.convention.into(), &alpha, i, &a.cap)))
}

fn bounds(c: BoundsCommand) -> Result<Outcome, Error> {
    match c {
        BoundsCommand::Pigeonhole { d, l, c, cap } => Ok(capped(bound_pigeonhole(d, l, c, &cap))),
        BoundsCommand::Slow { d, l, b, cap } => {
            let bl = match b {
                BoundFn::Pow2(k) => BigUint::one() << (l + k),
                BoundFn::Fgh(alpha) => {
                    // B(l) > cap already puts the bound above cap
                    let floor = BigUint::one() << (l + 3);
                    let bcap = cap.clone().max(floor);
                    match fgh_with(Convention::Standard, &alpha, l, &bcap) {
                        CappedNat::Value(v) => v,
                        CappedNat::Overflow(_) => return Ok(capped(CappedNat::Overflow(cap))),
                    }
                }
            };
            Ok(capped(bound_slow(d, l, |_| bl.clone(), &cap)?))
        }
    }
}

/// Runs one command line (including the program name) without exiting.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let result = match cli.command {
        Command::Seq(a) => seq(a),
        Command::Verify(a) => verify(a),
        Command::Search(a) => search(a),
        Command::Ramsey { command } => ramsey(command),
        Command::Fgh(a) => fgh(a),
        Command::Bounds { command } => bounds(command),
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

pub fn main() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(line: &str) -> Outcome {
        run(std::iter::once("maclagan").chain(line.split_whitespace()))
    }

    #[test]
    fn fgh_commands() {
        assert_eq!(go("fgh --alpha 2 --i 3").stdout, "24\n");
        assert_eq!(go("fgh --alpha w --i 2").stdout, "8\n");
        let o = go("fgh --alpha 3 --i 3 --cap 1000");
        assert_eq!((o.code, o.stdout.as_str()), (EXIT_BUDGET, "overflow: > 1000\n"));
        assert_eq!(go("fgh inverse --alpha 2 --i 7").stdout, "1\n");
        assert_eq!(go("fgh --alpha w^ --i 2").code, EXIT_USAGE);
        assert_eq!(go("fgh --i 2").code, EXIT_USAGE);
    }

    #[test]
    fn bounds_commands() {
        assert_eq!(go("bounds pigeonhole --d 0 --l 1 --c 0").stdout, "17\n");
        assert_eq!(go("bounds pigeonhole --d 2 --l 10 --c 10 --cap 1000").code, EXIT_BUDGET);
        assert_eq!(
            go("bounds slow --d 0 --l 0 --b pow2:3 --cap 340282366920938463463374607431768211456")
                .stdout,
            "18446744073709551616\n"
        );
        assert_eq!(go("bounds slow --d 0 --l 0 --b pow2:2").code, EXIT_USAGE);
        assert_eq!(go("bounds slow --d 0 --l 3 --b fgh:w").code, EXIT_BUDGET);
        assert_eq!(go("bounds slow --d 0 --l 0 --b fgh:w").code, EXIT_USAGE);
        assert_eq!(go("bounds slow --d 0 --l 0 --b nope").code, EXIT_USAGE);
    }

    #[test]
    fn ramsey_number_command() {
        let o = go("ramsey number --l 0 --r 1 --rmax 5");
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.starts_with("3\n"));
        let o = go("ramsey number --l 0 --r 1 --rmax 2");
        assert_eq!(o.code, EXIT_VIOLATION);
        assert!(o.stdout.starts_with("none\n"));
        assert_eq!(go("ramsey number --l 0 --r 3 --rmax 6 --budget 100").code, EXIT_BUDGET);
    }

    #[test]
    fn search_command() {
        let o = go("search --d 0 --l 1 --param const:0");
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.starts_with(r#"{"value":5,"exhausted":true"#));
        let o = go("search --d 0 --l 1 --include-zero false");
        assert!(o.stdout.starts_with(r#"{"value":4,"#));
        assert_eq!(go("search --d 0 --l 2 --budget 2").code, EXIT_BUDGET);
        assert_eq!(go("search --d 0 --l 1 --param sqrt").code, EXIT_USAGE);
    }

    #[test]
    fn seq_to_stdout() {
        let o = go("seq --family maclagan --alpha 0 --l 1 --d 0");
        assert_eq!(o.code, EXIT_OK);
        let s = IdealSequence::from_json(&o.stdout).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(go("seq --family maclagan --alpha 3 --l 2").code, EXIT_BUDGET);
        assert_eq!(go("seq --family maclagan --alpha 3 --l 2 --certified").code, EXIT_OK);
        assert_eq!(go("seq --family maclagan --l 2").code, EXIT_USAGE);
        assert_eq!(go("seq --family maclagan --alpha w --l 0 --d 0").code, EXIT_USAGE);
        assert_eq!(go("seq --family exp --j 2").code, EXIT_OK);
        assert_eq!(go("seq --family polypower --c 1 --j 2").code, EXIT_OK);
        assert_eq!(go("seq --family rootlog --c 1 --prefix 20").code, EXIT_OK);
        assert_eq!(go("seq --family rootlog --c 1").code, EXIT_USAGE);
        assert_eq!(go("seq --family cubic").code, EXIT_USAGE);
    }

    #[test]
    fn help_is_not_an_error() {
        let o = go("--help");
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("ramsey"));
    }
}

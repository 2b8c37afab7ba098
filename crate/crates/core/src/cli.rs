//! Sessions and command dispatch shared by the `calc` binary and the C ABI.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use clap::{Parser, Subcommand};

use crate::error::{Error, ReducibilityError};
use crate::format::{parse_param, parse_table};
use crate::group::GroupForm;
use crate::lfactor::{zero_pole_locus, Style};
use crate::lparam::{build_parameter, factors_through_LG, is_elliptic};
use crate::multisegment::{
    l_parameter, langlands_quotient, validate_param, AParam, SpehParam, ValidationReport,
};
use crate::rational::Rational;
use crate::reconstruction::{reconstruct, red_multiset, RedSet};
use crate::reducibility::{consistency_check, red_points, validate_jord, O2nFlags, Setting};
use crate::symbol::SymbolTable;

/// A loaded symbol table and parameter, with the validation report computed
/// at load time.
#[derive(Debug, Clone)]
pub struct Session {
    pub table: SymbolTable,
    pub param: AParam,
    /// Langlands quotient of `param`.
    pub speh: SpehParam,
    pub form: GroupForm,
    pub flags: O2nFlags,
    pub report: ValidationReport,
}

impl Session {
    /// Parses both texts. Malformed lines and unknown symbols abort;
    /// structural violations are recorded in [`Session::report`].
    pub fn from_text(
        table_text: &str,
        table_name: &str,
        param_text: &str,
        param_name: &str,
        form: GroupForm,
        flags: O2nFlags,
    ) -> Result<Self, Error> {
        let table = parse_table(table_text, table_name)?;
        let param = parse_param(param_text, param_name, &table)?;
        let report = validate_param(&param, &table, &form);
        let speh = langlands_quotient(&param);
        Ok(Session {
            table,
            param,
            speh,
            form,
            flags,
            report,
        })
    }

    pub fn load(
        table_path: &Path,
        param_path: &Path,
        form: GroupForm,
        flags: O2nFlags,
    ) -> Result<Self, Error> {
        let read = |p: &Path| {
            fs::read_to_string(p).map_err(|source| Error::Io {
                path: p.display().to_string(),
                source,
            })
        };
        Self::from_text(
            &read(table_path)?,
            &table_path.display().to_string(),
            &read(param_path)?,
            &param_path.display().to_string(),
            form,
            flags,
        )
    }

    fn setting(&self) -> Setting<'_> {
        Setting::new(&self.table, self.form, self.flags)
    }

    fn require_valid(&self) -> Result<(), Error> {
        if self.report.is_valid() {
            Ok(())
        } else {
            Err(Error::Validation(self.report.to_string().trim_end().to_string()))
        }
    }

    fn require_symbol(&self, rho: &str) -> Result<(), Error> {
        if self.table.contains(rho) {
            Ok(())
        } else {
            Err(Error::Usage(format!("unknown symbol `{rho}`")))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Cuspidal support of the parameter.
    Support,
    /// The Speh parameter (Langlands quotient) as `sblock` lines.
    Aparam,
    /// The Steinberg reading of the Speh parameter.
    Lparam,
    /// The multiset `Jord_{rho,x}`.
    Jord {
        #[arg(long)]
        rho: String,
        #[arg(long, allow_hyphen_values = true)]
        x: Rational,
    },
    /// Reducibility points of `rho |det|^s x pi_0` on `s >= 0`.
    Red {
        #[arg(long)]
        rho: String,
    },
    /// Nonzero orders of the normalization factor on `s >= 0`.
    Norm {
        #[arg(long)]
        rho: String,
        #[arg(long)]
        style: Style,
    },
    /// Recover the couples `(x, a)`, `x in ]0,1/2[`, from reducibility points.
    ///
    /// The points come from `--rho`, from `--set`, or from standard input.
    Reconstruct {
        #[arg(long, conflicts_with = "rho")]
        set: Option<String>,
        #[arg(long)]
        rho: Option<String>,
    },
    /// The formal parameter, its factorization through the dual group and ellipticity.
    Lgroup,
    /// Every structural and bookkeeping check.
    Check,
}

#[derive(Parser)]
#[command(name = "calc", no_binary_name = true)]
struct CommandLine {
    #[command(subcommand)]
    command: Command,
}

impl Command {
    /// Parses a command and its flags, without the program name.
    pub fn parse_words<I, T>(words: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        CommandLine::try_parse_from(words)
            .map(|c| c.command)
            .map_err(|e| match e.kind() {
                clap::error::ErrorKind::InvalidSubcommand => {
                    Error::UnknownCommand(e.to_string().trim_end().to_string())
                }
                _ => Error::Usage(e.to_string().trim_end().to_string()),
            })
    }
}

/// Text report and exit status of a command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn from_error(err: &Error) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: err.exit_code(),
        }
    }
}

/// Runs one command. `stdin` feeds `reconstruct` when neither `--set` nor
/// `--rho` is given.
pub fn run(session: &Session, command: &Command, stdin: Option<&str>) -> Outcome {
    match command {
        Command::Check => check(session),
        other => match execute(session, other, stdin) {
            Ok(out) => Outcome::ok(out),
            Err(e) => Outcome::from_error(&e),
        },
    }
}

fn execute(session: &Session, command: &Command, stdin: Option<&str>) -> Result<String, Error> {
    let mut out = String::new();
    match command {
        Command::Support => {
            for ((sigma, s), mult) in session.param.support().iter_counts() {
                writeln!(out, "sigma={sigma} s={s} mult={mult}").unwrap();
            }
        }
        Command::Aparam => out.push_str(&session.speh.to_string()),
        Command::Lparam => {
            for st in l_parameter(&session.speh).iter() {
                writeln!(out, "{st}").unwrap();
            }
        }
        Command::Jord { rho, x } => {
            session.require_symbol(rho)?;
            writeln!(out, "jord = {}", session.speh.jord(rho, *x)).unwrap();
        }
        Command::Red { rho } => {
            session.require_valid()?;
            session.require_symbol(rho)?;
            let pts = red_points(&session.speh, rho, &session.setting())?;
            let list: Vec<String> = pts.iter().map(ToString::to_string).collect();
            writeln!(out, "red = {{{}}}", list.join(", ")).unwrap();
        }
        Command::Norm { rho, style } => {
            session.require_valid()?;
            session.require_symbol(rho)?;
            writeln!(out, "style={style} rho={rho}").unwrap();
            let ledger = zero_pole_locus(*style, &session.table, rho, &session.speh, &session.form);
            out.push_str(&ledger.to_string());
        }
        Command::Reconstruct { set, rho } => {
            let red = match (set, rho) {
                (_, Some(rho)) => {
                    session.require_valid()?;
                    session.require_symbol(rho)?;
                    red_multiset(&session.speh, rho)?
                }
                (Some(text), None) => RedSet::parse(text)?,
                (None, None) => match stdin {
                    Some(text) => RedSet::parse(text)?,
                    None => {
                        return Err(Error::Usage(
                            "reconstruct needs --set, --rho or points on standard input".into(),
                        ))
                    }
                },
            };
            out.push_str(&reconstruct(&red)?.to_string());
        }
        Command::Lgroup => {
            session.require_valid()?;
            let p = build_parameter(&session.speh, &session.table, &session.form)?;
            let rep = factors_through_LG(&p);
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            writeln!(out, "factors_through_LG: {}", yes_no(rep.ok)).unwrap();
            writeln!(out, "elliptic: {}", yes_no(is_elliptic(&session.speh))).unwrap();
            out.push_str(&p.to_string());
            for failure in &rep.failures {
                writeln!(out, "failure: {failure}").unwrap();
            }
        }
        Command::Check => unreachable!("handled by check()"),
    }
    Ok(out)
}

/// Parameter validation, then Jordan-block and bookkeeping checks for every
/// registered symbol. Exit 1 on any failure, 2 if some symbol is inadmissible.
fn check(session: &Session) -> Outcome {
    let mut out = String::new();
    let mut failed = false;
    let mut inadmissible = false;

    if session.report.is_valid() {
        out.push_str("param: ok\n");
    } else {
        failed = true;
        for v in &session.report.violations {
            writeln!(out, "param: violation: {v}").unwrap();
        }
    }

    let setting = session.setting();
    for rho in session.table.names() {
        let jord = validate_jord(&session.speh, rho, &session.table, &session.form);
        if jord.is_valid() {
            writeln!(out, "jord {rho}: ok").unwrap();
        } else {
            failed = true;
            for v in &jord.violations {
                writeln!(out, "jord {rho}: violation: {v}").unwrap();
            }
        }
        match consistency_check(&session.speh, rho, &setting) {
            Ok(rep) if rep.is_consistent() => writeln!(out, "consistency {rho}: ok").unwrap(),
            Ok(rep) => {
                failed = true;
                for f in &rep.failures {
                    writeln!(out, "consistency {rho}: failure: {f}").unwrap();
                }
            }
            Err(e) => {
                if matches!(e, ReducibilityError::InadmissibleParam { .. }) {
                    inadmissible = true;
                }
                failed = true;
                writeln!(out, "consistency {rho}: error: {e}").unwrap();
            }
        }
    }

    let code = if inadmissible {
        2
    } else if failed {
        1
    } else {
        0
    };
    writeln!(out, "result: {}", if code == 0 { "ok" } else { "fail" }).unwrap();
    Outcome {
        stdout: out,
        stderr: String::new(),
        code,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupKind;

    const TABLE: &str = "symbol rho dim=1 type=orthogonal dual=rho\n";

    fn session(param: &str, kind: GroupKind, n: u32) -> Session {
        Session::from_text(
            TABLE,
            "table",
            param,
            "param",
            GroupForm::new(kind, n),
            O2nFlags::default(),
        )
        .unwrap()
    }

    fn exec(s: &Session, words: &[&str]) -> Outcome {
        run(s, &Command::parse_words(words).unwrap(), None)
    }

    #[test]
    fn red_on_chain() {
        let s = session("sblock sigma=rho a=1 x=0\nsblock sigma=rho a=3 x=0\n", GroupKind::Oeven, 2);
        let o = exec(&s, &["red", "--rho", "rho"]);
        assert_eq!((o.stdout.as_str(), o.code), ("red = {2}\n", 0));
    }

    #[test]
    fn norm_l_has_no_positive_entries() {
        let s = session("sblock sigma=rho a=3 x=0\n", GroupKind::Sp, 1);
        let o = exec(&s, &["norm", "--rho", "rho", "--style", "L"]);
        assert_eq!(o.code, 0);
        let mut lines = o.stdout.lines();
        assert_eq!(lines.next(), Some("style=L rho=rho"));
        for line in lines {
            let s: Rational = line
                .strip_prefix("s=")
                .and_then(|l| l.split_whitespace().next())
                .unwrap()
                .parse()
                .unwrap();
            assert!(!s.is_positive(), "{line}");
        }
    }

    #[test]
    fn check_reports_symmetry_violation() {
        let s = session("sblock sigma=rho a=1 x=1/4\n", GroupKind::Oeven, 0);
        let o = exec(&s, &["check"]);
        assert_ne!(o.code, 0);
        assert!(o.stdout.contains("violation"));
        assert!(o.stdout.ends_with("result: fail\n"));
    }

    #[test]
    fn check_passes_on_chain() {
        let s = session("sblock sigma=rho a=1 x=0\nsblock sigma=rho a=3 x=0\n", GroupKind::Oeven, 2);
        let o = exec(&s, &["check"]);
        assert_eq!(o.code, 0, "{}", o.stdout);
        assert_eq!(o.stdout, "param: ok\njord rho: ok\nconsistency rho: ok\nresult: ok\n");
    }

    #[test]
    fn reconstruct_from_set_and_stdin() {
        let s = session("", GroupKind::Oeven, 0);
        let o = exec(&s, &["reconstruct", "--set", "5/4 3/4"]);
        assert_eq!((o.stdout.as_str(), o.code), ("(1/4, 1) * 1\n", 0));
        let cmd = Command::parse_words(["reconstruct"]).unwrap();
        let o = run(&s, &cmd, Some("5/4\n"));
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("inconsistent"));
    }

    #[test]
    fn jord_with_negative_x() {
        let s = session("sblock sigma=rho a=1 x=1/4\nsblock sigma=rho a=1 x=-1/4\n", GroupKind::Sp, 0);
        let o = exec(&s, &["jord", "--rho", "rho", "--x", "-1/4"]);
        assert_eq!(o.stdout, "jord = {1}\n");
    }

    #[test]
    fn unknown_command() {
        assert!(matches!(
            Command::parse_words(["frobnicate"]),
            Err(Error::UnknownCommand(_))
        ));
    }

    #[test]
    fn commands_needing_valid_param_refuse() {
        let s = session("sblock sigma=rho a=1 x=1/4\n", GroupKind::Sp, 0);
        let o = exec(&s, &["red", "--rho", "rho"]);
        assert_eq!(o.code, 1);
        assert!(o.stderr.contains("validation"));
    }

    #[test]
    fn lgroup_output() {
        let s = session("sblock sigma=rho a=3 x=0\n", GroupKind::Sp, 1);
        let o = exec(&s, &["lgroup"]);
        assert_eq!(
            o.stdout,
            "factors_through_LG: yes\nelliptic: yes\n#0 sigma=rho a=3 x=0 pairing=orthogonal\n"
        );
    }
}

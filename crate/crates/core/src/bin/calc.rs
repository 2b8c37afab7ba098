use std::io::{self, IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Parser};
use redcalc::{run, Command, GroupForm, GroupKind, O2nFlags, Session};

/// Reducibility points, Jordan blocks and normalization orders for
/// cuspidal representations of classical p-adic groups.
#[derive(Parser)]
#[command(name = "calc", version)]
struct Cli {
    /// Symbol table file.
    table: PathBuf,
    /// Parameter file.
    param: PathBuf,
    #[arg(long)]
    group: GroupKind,
    #[arg(long)]
    n: u32,
    /// For O(2n): whether the restriction of pi_0 to SO(2n) is irreducible.
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    so_irreducible: bool,
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    // Usage errors exit 1: status 2 is reserved for inadmissible inputs.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(u8::from(e.use_stderr()));
        }
    };
    let flags = O2nFlags {
        so_restriction_irreducible: cli.so_irreducible,
    };
    let session = match Session::load(&cli.table, &cli.param, GroupForm::new(cli.group, cli.n), flags)
    {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let needs_stdin = matches!(
        cli.command,
        Command::Reconstruct {
            set: None,
            rho: None
        }
    );
    let mut input = String::new();
    let stdin = if needs_stdin && !io::stdin().is_terminal() {
        if let Err(e) = io::stdin().read_to_string(&mut input) {
            eprintln!("error: standard input: {e}");
            return ExitCode::from(1);
        }
        Some(input.as_str())
    } else {
        None
    };
    let outcome = run(&session, &cli.command, stdin);
    let _ = io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}

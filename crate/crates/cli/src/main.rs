//! `permsym`: command-line front-end. One command per invocation; output is
//! deterministic for a given set of flags, seed included.

mod commands;
mod config;

use std::io::Write;
use std::process::ExitCode;

use clap::{ArgMatches, Args, FromArgMatches};

use commands::{Command, Registry};
use config::{CliError, RunArgs, COMMON_FLAGS};

fn cli(registry: &Registry) -> clap::Command {
    let mut app = clap::Command::new("permsym")
        .about("Subsystem permutation symmetry of heterogeneous tensor-product spaces")
        .version(env!("CARGO_PKG_VERSION"))
        .subcommand_required(true)
        .arg_required_else_help(true);
    for cmd in registry.iter() {
        let mut sub = RunArgs::augment_args(clap::Command::new(cmd.name())).about(cmd.about());
        let ids: Vec<String> = sub.get_arguments().map(|a| a.get_id().to_string()).collect();
        for id in ids {
            if !is_accepted(cmd, &id) && id != "help" {
                sub = sub.mut_arg(id, |a| a.hide(true));
            }
        }
        app = app.subcommand(sub);
    }
    app
}

fn is_accepted(cmd: &dyn Command, id: &str) -> bool {
    COMMON_FLAGS.contains(&id) || cmd.flags().contains(&id)
}

/// Rejects flags the command would silently ignore.
fn check_flags(cmd: &dyn Command, m: &ArgMatches) -> Result<(), CliError> {
    for id in m.ids() {
        let id = id.as_str();
        if m.value_source(id) == Some(clap::parser::ValueSource::CommandLine) && !is_accepted(cmd, id) {
            return Err(CliError::Usage(format!(
                "{} does not take --{}",
                cmd.name(),
                id.replace('_', "-")
            )));
        }
    }
    Ok(())
}

fn run(cmd: &dyn Command, m: &ArgMatches) -> Result<(), CliError> {
    check_flags(cmd, m)?;
    let args = RunArgs::from_arg_matches(m).map_err(|e| CliError::Usage(e.to_string()))?;
    let out = cmd.run(&args)?;
    match &args.out {
        Some(path) => std::fs::write(path, out)?,
        None => std::io::stdout().lock().write_all(out.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let registry = Registry::builtin();
    let matches = cli(&registry).get_matches();
    let (name, sub) = matches.subcommand().expect("a subcommand is required");
    let cmd = registry.get(name).expect("subcommands come from the registry");
    match run(cmd, sub) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("permsym {name}: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::process::ExitCode;

use clap::Parser;
use sixvertex_cli::{execute, resolve_config, Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = resolve_config(&cli).and_then(|cfg| execute(cli.command, &cfg));
    match result {
        Ok(sidecar) => {
            if cli.command == Command::Constants {
                let s = &sidecar["summary"];
                println!("a = {}\nb = {}\nc = {}\nd = {}", s["a"], s["b"], s["c"], s["d"]);
            }
            if sidecar["pass"] == true {
                ExitCode::SUCCESS
            } else {
                eprintln!("{}", serde_json::json!({ "pass": false, "failures": sidecar["failures"] }));
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code as u8)
        }
    }
}

use std::process::ExitCode;

use clap::Parser;
use planar_ortho_cli::{resolve, run, Args};

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = resolve(&args).and_then(|cfg| {
        eprintln!("running {} at {} bits, degrees {:?}", cfg.experiment, cfg.precision_bits, cfg.degrees);
        run(&cfg)
    });
    match outcome {
        Ok(summary) => {
            for c in &summary.checks {
                eprintln!("check passed: {} ({})", c.name, c.detail);
            }
            for p in &summary.written {
                println!("{}", p.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("planar-ortho: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

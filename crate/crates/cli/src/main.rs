mod config;

use std::collections::BTreeSet;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cylindric_core::hooks::{hook_values, to_dot, OrderKind};
use cylindric_core::ideals_bruhat::word_of_ideal;
use cylindric_core::render::{render_ascii, render_svg};
use cylindric_core::report::CheckReport;
use cylindric_core::verify::{diagram_json, run_suites, Suite, VerifyConfig};
use cylindric_core::weyl::{reduced_words, DEFAULT_LENGTH_CAP};
use cylindric_core::{CylCell, CylindricDiagram};

use config::{ideal_from_cells, parse_cells, parse_ints, parse_omega, parse_suites, Config, Format, InputError};

#[derive(Parser)]
#[command(name = "cylindric", version, about = "Cylindric diagrams, colored hook lengths and affine inversion sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Period as M,-L
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<String>,
    /// Generalized partition, comma separated
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Window depth: cells with generation at most D
    #[arg(long)]
    depth: Option<usize>,
    /// Largest ideal size
    #[arg(long)]
    max_ideal: Option<usize>,
    /// text, json, dot or svg
    #[arg(long, default_value = "text")]
    format: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Draw the window with contents and bottom-set marks
    Render {
        #[command(flatten)]
        common: Common,
        /// Order drawn by --format dot
        #[arg(long, default_value = "diagram")]
        order: String,
    },
    /// Run verification suites
    Verify {
        #[command(flatten)]
        common: Common,
        /// Suite names, comma separated; all suites when omitted
        #[arg(long)]
        suite: Option<String>,
    },
    /// Stream ideals, hook values or reduced words
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        what: What,
        /// Ideal for `--what words`, as a,b;a,b;...
        #[arg(long, allow_hyphen_values = true)]
        ideal_cells: Option<String>,
        /// Length cap for reduced-word enumeration
        #[arg(long, default_value_t = DEFAULT_LENGTH_CAP)]
        cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Ideals,
    Hooks,
    Words,
}

fn load(common: &Common, suites: Vec<Suite>) -> Result<Config, InputError> {
    let omega = common.omega.as_deref().map(parse_omega).transpose().map_err(InputError)?;
    let lambda = common.lambda.as_deref().map(parse_ints).transpose().map_err(InputError)?;
    let format = common.format.parse::<Format>().map_err(InputError)?;
    let config = Config {
        omega,
        lambda,
        depth: common.depth.unwrap_or(1),
        max_ideal: common.max_ideal.unwrap_or(3),
        suites,
        format,
        seed: common.seed,
    };
    config.diagram()?;
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let result = match &cli.command {
        Command::Render { common, order } => load(common, vec![]).and_then(|c| render(&c, order, &mut out)),
        Command::Verify { common, suite } => {
            let suites = match suite {
                Some(s) => parse_suites(s).map_err(InputError),
                None => Ok(Suite::ALL.to_vec()),
            };
            suites
                .and_then(|s| load(common, s))
                .and_then(|c| verify(&c, common, &mut out))
        }
        Command::Enumerate {
            common,
            what,
            ideal_cells,
            cap,
        } => load(common, vec![]).and_then(|c| enumerate(&c, *what, ideal_cells.as_deref(), *cap, &mut out)),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn io_err(e: io::Error) -> InputError {
    // stdout closed early, e.g. piped into `head`
    if e.kind() == io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    InputError(format!("write failed: {e}"))
}

fn render(c: &Config, order: &str, out: &mut impl Write) -> Result<ExitCode, InputError> {
    let d = c.require_diagram()?;
    let text = match c.format {
        Format::Text => render_ascii(&d, c.depth, &BTreeSet::new()),
        Format::Svg => render_svg(&d, c.depth, &BTreeSet::new()),
        Format::Dot => to_dot(&d, c.depth, order.parse::<OrderKind>().map_err(InputError)?),
        Format::Json => {
            let bottom = d.bottom_set();
            let cells: Vec<Value> = d
                .window(c.depth)
                .into_iter()
                .map(|x| {
                    let kind = bottom.cells().iter().position(|&b| b == x).map(|i| bottom.kind(i));
                    json!({"cell": [x.a(), x.b()], "content": d.content(x).ok(), "generation": d.generation(x), "bottom": kind})
                })
                .collect();
            format!("{}\n", json!({"diagram": diagram_json(&d), "kappa": d.kappa(), "depth": c.depth, "cells": cells}))
        }
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(ExitCode::SUCCESS)
}

fn counterexample_picture(r: &CheckReport) -> Option<String> {
    let c = r.counterexample.as_ref()?;
    let diagram = c.get("diagram")?;
    let m = diagram["omega"][0].as_i64()?;
    let ell = -diagram["omega"][1].as_i64()?;
    let parts: Vec<i64> = diagram["lambda"].as_array()?.iter().filter_map(Value::as_i64).collect();
    let d = CylindricDiagram::from_parts(m, ell, &parts).ok()?;
    let cells: BTreeSet<CylCell> = c
        .get("cells")
        .and_then(Value::as_array)
        .map(|v| {
            v.iter()
                .filter_map(|p| Some(d.cell(p[0].as_i64()?, p[1].as_i64()?)))
                .collect()
        })
        .unwrap_or_default();
    let depth = cells.iter().map(|&x| d.generation(x).max(0) as usize).max().unwrap_or(0);
    Some(render_ascii(&d, depth, &cells))
}

fn verify(c: &Config, common: &Common, out: &mut impl Write) -> Result<ExitCode, InputError> {
    let cfg = VerifyConfig {
        diagrams: c.diagram()?.map(|d| vec![d]),
        depth: common.depth,
        max_ideal: common.max_ideal,
        seed: c.seed,
    };
    let reports = run_suites(&c.suites, &cfg);
    let all_pass = reports.iter().all(|r| r.pass);
    match c.format {
        Format::Json => {
            let text = serde_json::to_string_pretty(&reports).expect("reports serialize");
            writeln!(out, "{text}").map_err(io_err)?;
        }
        Format::Text => {
            for r in &reports {
                writeln!(out, "{} {}: {}", if r.pass { "PASS" } else { "FAIL" }, r.check, r.params["claim"].as_str().unwrap_or(""))
                    .map_err(io_err)?;
                if !r.pass {
                    writeln!(out, "  counterexample: {}", r.counterexample.clone().unwrap_or(Value::Null)).map_err(io_err)?;
                    if let Some(pic) = counterexample_picture(r) {
                        for line in pic.lines() {
                            writeln!(out, "  {line}").map_err(io_err)?;
                        }
                    }
                }
            }
            let passed = reports.iter().filter(|r| r.pass).count();
            writeln!(out, "{passed}/{} suites passed", reports.len()).map_err(io_err)?;
        }
        Format::Dot | Format::Svg => return Err(InputError("verify writes text or json".into())),
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn enumerate(c: &Config, what: What, ideal_cells: Option<&str>, cap: usize, out: &mut impl Write) -> Result<ExitCode, InputError> {
    let d = c.require_diagram()?;
    let json = match c.format {
        Format::Text => false,
        Format::Json => true,
        _ => return Err(InputError("enumerate writes text or json".into())),
    };
    match what {
        What::Ideals => {
            for z in d.ideals_up_to(c.max_ideal).into_iter().flatten() {
                if json {
                    writeln!(out, "{}", serde_json::to_string(&z.to_json(&d)).expect("ideal serializes"))
                } else {
                    writeln!(out, "{z}")
                }
                .map_err(io_err)?;
            }
        }
        What::Hooks => {
            for h in hook_values(&d, c.depth) {
                let x = h.cell;
                let content = d.content(x)?;
                if json {
                    let line = json!({"cell": [x.a(), x.b()], "content": content, "generation": d.generation(x), "hk": h.root});
                    writeln!(out, "{line}")
                } else {
                    writeln!(out, "{x} content {content} hk {}", h.root)
                }
                .map_err(io_err)?;
            }
        }
        What::Words => {
            let spec = ideal_cells.ok_or_else(|| InputError("--what words needs --ideal-cells".into()))?;
            let z = ideal_from_cells(&d, &parse_cells(spec).map_err(InputError)?)?;
            let w = word_of_ideal(&d, &z)?.element;
            for word in reduced_words(&w, cap)? {
                if json {
                    writeln!(out, "{}", serde_json::to_string(&word).expect("word serializes"))
                } else {
                    writeln!(out, "{word}")
                }
                .map_err(io_err)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

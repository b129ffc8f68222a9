mod cli;
mod filter;
mod report;

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;
use twistspec_core::catalog::{save_dir, standard_catalog};
use twistspec_core::spectra::{classify, ClassifyOptions, GroupSummary};
use twistspec_core::{Error, GroupDefinition, Method};

use cli::{Cli, Command};
use filter::Filter;
use report::{survey, SurveyOptions};

const EXIT_INPUT: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_BATTERY: u8 = 3;

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::OrderCapExceeded { .. } | Error::BudgetExceeded { .. }) => EXIT_BUDGET,
        Some(Error::MethodDisagreement { .. }) => EXIT_BATTERY,
        _ => EXIT_INPUT,
    }
}

fn load(file: &Path) -> Result<GroupDefinition> {
    GroupDefinition::load(file).with_context(|| format!("loading {}", file.display()))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Info {
            file,
            json,
            order_cap,
        } => {
            let def = load(&file)?;
            let g = def.materialize_with_cap(order_cap)?;
            let summary = GroupSummary::new(&def.name, &g);
            if json {
                print!("{}", report::to_json(&summary));
            } else {
                print!("{}", report::render_info(&summary));
            }
            Ok(0)
        }
        Command::Spectrum {
            file,
            extended,
            method,
            limits,
            json,
        } => {
            let def = load(&file)?;
            let g = def.materialize_with_cap(limits.order_cap)?;
            let options = ClassifyOptions {
                method: method.into(),
                product_cap: limits.budget,
                extended,
                battery: false,
            };
            let r = classify(&def.name, &g, options)?;
            if json {
                print!("{}", report::to_json(&r));
            } else {
                print!("{}", report::render_spectrum(&r));
            }
            Ok(0)
        }
        Command::Verify { file, limits, json } => {
            let def = load(&file)?;
            let g = def.materialize_with_cap(limits.order_cap)?;
            let options = ClassifyOptions {
                method: Method::Checked,
                product_cap: limits.budget,
                extended: true,
                battery: true,
            };
            let r = classify(&def.name, &g, options)?;
            if json {
                print!("{}", report::to_json(&r));
            } else {
                print!("{}", report::render_battery(&r));
            }
            Ok(if r.battery_passed() { 0 } else { EXIT_BATTERY })
        }
        Command::Survey {
            dir,
            filter,
            jobs,
            method,
            limits,
            out,
        } => {
            let filter = Filter::parse(filter.as_deref().unwrap_or(""))?;
            let options = SurveyOptions {
                classify: ClassifyOptions {
                    method: method.into(),
                    product_cap: limits.budget,
                    extended: true,
                    battery: true,
                },
                order_cap: limits.order_cap,
                jobs,
            };
            let s = survey(&dir, &filter, &options)
                .with_context(|| format!("surveying {}", dir.display()))?;
            fs::write(&out, report::to_json(&s))
                .with_context(|| format!("writing {}", out.display()))?;
            print!("{}", report::render_survey(&s));
            Ok(if s.summary.battery_failures > 0 {
                EXIT_BATTERY
            } else {
                0
            })
        }
        Command::ExportCatalog { dir } => {
            for path in save_dir(&dir, &standard_catalog())? {
                println!("{}", path.display());
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

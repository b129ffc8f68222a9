//! Report envelopes and the fixed-width text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use anyhow::Result;
use rayon::prelude::*;
use serde::Serialize;
use twistspec_core::catalog::load_dir;
use twistspec_core::spectra::{
    classify, CheckStatus, ClassifyOptions, ExtendedStatus, Flags, GroupSummary, Spectrum,
};
use twistspec_core::{Error, SpectrumReport};

use crate::filter::Filter;

pub const SCHEMA: u32 = 1;
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub schema: u32,
    pub tool_version: &'static str,
    #[serde(flatten)]
    pub body: &'a T,
}

pub fn envelope<T: Serialize>(body: &T) -> Envelope<'_, T> {
    Envelope {
        schema: SCHEMA,
        tool_version: VERSION,
        body,
    }
}

pub fn to_json<T: Serialize>(body: &T) -> String {
    let mut s = serde_json::to_string_pretty(&envelope(body)).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    Input,
    Budget,
    Internal,
}

impl FailureKind {
    pub fn of(e: &Error) -> Self {
        match e {
            Error::OrderCapExceeded { .. } | Error::BudgetExceeded { .. } => FailureKind::Budget,
            Error::MethodDisagreement { .. } | Error::NotAHomomorphism => FailureKind::Internal,
            _ => FailureKind::Input,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyFailure {
    pub file: String,
    pub kind: FailureKind,
    pub error: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyBudget {
    pub product_cap: u64,
    pub order_cap: usize,
    pub method: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SurveySummary {
    pub classified: usize,
    pub listed: usize,
    pub failed: usize,
    pub extended_skipped: usize,
    pub battery_failures: usize,
    pub flag_counts: BTreeMap<&'static str, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyReport {
    pub budget: SurveyBudget,
    pub filter: Vec<String>,
    pub summary: SurveySummary,
    pub groups: Vec<SpectrumReport>,
    pub failures: Vec<SurveyFailure>,
}

pub struct SurveyOptions {
    pub classify: ClassifyOptions,
    pub order_cap: usize,
    pub jobs: usize,
}

/// Classifies every definition in `dir`. Per-group failures are recorded,
/// never propagated; the output does not depend on `jobs`.
pub fn survey(dir: &Path, filter: &Filter, options: &SurveyOptions) -> Result<SurveyReport> {
    let entries = load_dir(dir)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs.max(1))
        .build()?;
    let results: Vec<(String, std::result::Result<SpectrumReport, Error>)> = pool.install(|| {
        entries
            .into_par_iter()
            .map(|(path, def)| {
                let file = path
                    .file_name()
                    .map(|f| f.to_string_lossy().into_owned())
                    .unwrap_or_default();
                let result = def.and_then(|d| {
                    let g = d.materialize_with_cap(options.order_cap)?;
                    classify(&d.name, &g, options.classify)
                });
                (file, result)
            })
            .collect()
    });

    let mut groups = Vec::new();
    let mut failures = Vec::new();
    for (file, result) in results {
        match result {
            Ok(r) => groups.push(r),
            Err(e) => failures.push(SurveyFailure {
                file,
                kind: FailureKind::of(&e),
                error: e.to_string(),
            }),
        }
    }
    let classified = groups.len();
    groups.retain(|r| filter.matches(r));
    groups.sort_by(|a, b| (a.order, &a.name).cmp(&(b.order, &b.name)));
    failures.sort_by(|a, b| a.file.cmp(&b.file));

    let mut summary = SurveySummary {
        classified,
        listed: groups.len(),
        failed: failures.len(),
        ..Default::default()
    };
    for name in Flags::NAMES {
        summary.flag_counts.insert(
            name,
            groups
                .iter()
                .filter(|r| r.flags.get(name) == Some(true))
                .count(),
        );
    }
    summary.extended_skipped = groups
        .iter()
        .filter(|r| r.extended_status == ExtendedStatus::Skipped)
        .count();
    summary.battery_failures = groups.iter().filter(|r| !r.battery_passed()).count();

    Ok(SurveyReport {
        budget: SurveyBudget {
            product_cap: options.classify.product_cap,
            order_cap: options.order_cap,
            method: options.classify.method.to_string(),
        },
        filter: filter.terms().to_vec(),
        summary,
        groups,
        failures,
    })
}

pub fn set(values: &[usize]) -> String {
    let body: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("{{{}}}", body.join(", "))
}

fn multiplicities(s: &Spectrum) -> String {
    let body: Vec<String> = s
        .multiplicities()
        .iter()
        .map(|(v, m)| format!("{v}x{m}"))
        .collect();
    body.join(" ")
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    match b {
        Some(b) => yn(b),
        None => "skipped",
    }
}

pub fn render_info(s: &GroupSummary) -> String {
    let mut out = String::new();
    let sizes: Vec<String> = s.class_sizes.iter().map(usize::to_string).collect();
    let rows = [
        ("group", s.name.clone()),
        ("degree", s.degree.to_string()),
        ("order", s.order.to_string()),
        ("k(G)", s.class_number.to_string()),
        ("class sizes", sizes.join(" ")),
        ("|Z(G)|", s.center_order.to_string()),
        ("abelian", yn(s.abelian).into()),
        ("nilpotent", yn(s.nilpotent).into()),
        ("perfect", yn(s.perfect).into()),
        ("simple", yn(s.simple).into()),
        ("quasisimple", yn(s.quasisimple).into()),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<14}{v}");
    }
    out
}

pub fn render_spectrum(r: &SpectrumReport) -> String {
    let mut out = String::new();
    let mut rows = vec![
        ("group", r.name.clone()),
        ("order", r.order.to_string()),
        ("k(G)", r.class_number.to_string()),
        ("|Aut(G)|", r.aut_count.to_string()),
        ("|Out(G)|", r.out_order.to_string()),
        ("class-pres.", r.class_preserving_aut_count.to_string()),
        ("spectrum", set(&r.spectrum.values())),
        ("  mult.", multiplicities(&r.spectrum)),
    ];
    match (&r.extended_status, &r.extended_spectrum) {
        (ExtendedStatus::Computed, Some(e)) => {
            rows.push(("|End(G)|", r.end_count.unwrap_or(0).to_string()));
            rows.push(("extended", set(&e.values())));
            rows.push(("  mult.", multiplicities(e)));
        }
        (ExtendedStatus::Skipped, _) => rows.push(("extended", "skipped (budget)".into())),
        _ => {}
    }
    rows.push(("trivial", yn(r.flags.trivial_spectrum).into()));
    if r.extended_status != ExtendedStatus::NotRequested {
        rows.push((
            "trivial ext.",
            opt(r.flags.trivial_extended_spectrum).into(),
        ));
        rows.push(("full ext.", opt(r.flags.full_extended_spectrum).into()));
    }
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<14}{v}");
    }
    out
}

pub fn render_battery(r: &SpectrumReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} (order {}, k = {})",
        r.name, r.order, r.class_number
    );
    for c in &r.theorem_battery {
        let status = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "n/a",
        };
        let _ = writeln!(out, "  {status:<5} {:<36} {}", c.name, c.detail);
        if let Some(w) = &c.witness {
            let _ = writeln!(out, "        witness generator images: {w:?}");
        }
    }
    out
}

pub fn render_survey(s: &SurveyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<14}{:>6}{:>5}{:>6}  {:<22}{:<36}flags",
        "group", "order", "k", "|Out|", "spectrum", "extended"
    );
    for r in &s.groups {
        let ext = match &r.extended_spectrum {
            Some(e) => set(&e.values()),
            None => "skipped".into(),
        };
        let mut flags = Vec::new();
        if r.flags.trivial_spectrum {
            flags.push("trivial");
        }
        if r.flags.trivial_extended_spectrum == Some(true) {
            flags.push("trivial-ext");
        }
        if r.flags.full_extended_spectrum == Some(true) {
            flags.push("full-ext");
        }
        if !r.battery_passed() {
            flags.push("BATTERY-FAIL");
        }
        let _ = writeln!(
            out,
            "{:<14}{:>6}{:>5}{:>6}  {:<22}{:<36}{}",
            r.name,
            r.order,
            r.class_number,
            r.out_order,
            set(&r.spectrum.values()),
            ext,
            flags.join(",")
        );
    }
    for f in &s.failures {
        let _ = writeln!(out, "failed: {} ({:?}): {}", f.file, f.kind, f.error);
    }
    let _ = writeln!(
        out,
        "{} classified, {} listed, {} failed",
        s.summary.classified, s.summary.listed, s.summary.failed
    );
    out
}

use std::fs;
use std::path::Path;

use lefschetz_core::fukaya::IntersectionData;
use lefschetz_core::slf::FibrationStatus;
use lefschetz_core::{
    category_from_slf, classify_fiber, critical_levels, flag_diamond, lg2_category, mirror_consistency_report,
    slf_report, CartanType, CartanVector, ComplexRational, DirectedCategory, Error, HodgeDiamond, RootSystem,
};
use serde::Serialize;

use crate::args::{Basis, Cli, Command, DiamondCommand, Format, FukayaCommand, MirrorCommand, OrbitArgs};

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_DEGENERATE: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { message: message.into(), code: EXIT_INPUT }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OrbitTooLarge { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        CliError { message: e.to_string(), code }
    }
}

pub struct Outcome {
    pub body: String,
    pub code: u8,
    pub warnings: Vec<String>,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, code: 0, warnings: Vec::new() }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::input(e.to_string()))
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> Result<String, CliError> {
    match format {
        Format::Json => to_json(value),
        Format::Text => Ok(text()),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Orbit(args) => cmd_orbit(cli.format, args),
        Command::Diamond(sub) => cmd_diamond(cli.format, sub),
        Command::Fukaya(sub) => cmd_fukaya(cli.format, sub),
        Command::Mirror(sub) => cmd_mirror(cli.format, sub),
    }
}

fn parse_type(text: &str) -> Result<RootSystem, CliError> {
    let t: CartanType = text.parse()?;
    Ok(RootSystem::new(t))
}

fn parse_vector(rs: &RootSystem, text: &str, basis: Basis, name: &str) -> Result<CartanVector, CliError> {
    let raw = CartanVector::parse(text).map_err(|e| CliError::input(format!("--{name}: {e}")))?;
    if raw.len() != rs.rank() {
        return Err(CliError::input(format!(
            "--{name}: {} expects {} coordinates, got {}",
            rs.cartan_type(),
            rs.rank(),
            raw.len()
        )));
    }
    Ok(match basis {
        Basis::SimpleRoot => raw,
        Basis::FundamentalWeight => rs.from_fundamental_weights(&raw)?,
    })
}

fn orbit_report(args: &OrbitArgs) -> Result<lefschetz_core::SlfReport, CliError> {
    let rs = parse_type(&args.cartan_type)?;
    let h0 = parse_vector(&rs, &args.h0, args.basis, "h0")?;
    let h = parse_vector(&rs, &args.h, args.basis, "h")?;
    Ok(slf_report(&rs, &h0, &h, args.cap)?)
}

fn status_code(status: FibrationStatus) -> u8 {
    match status {
        FibrationStatus::Lefschetz => 0,
        FibrationStatus::Degenerate => EXIT_DEGENERATE,
        FibrationStatus::SizeOnly => EXIT_CAP,
    }
}

pub fn cmd_orbit(format: Format, args: &OrbitArgs) -> Result<Outcome, CliError> {
    let report = orbit_report(args)?;
    let body = render(format, &report, || report.summary())?;
    Ok(Outcome { body, code: status_code(report.status), warnings: report.notes.clone() })
}

fn parse_theta(rs: &RootSystem, text: &str) -> Result<Vec<usize>, CliError> {
    let mut theta = Vec::new();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let label: usize = token
            .parse()
            .map_err(|_| CliError::input(format!("--theta: invalid simple root label {token:?}")))?;
        if label == 0 || label > rs.rank() {
            return Err(CliError::input(format!(
                "--theta: simple root label {label} out of range 1..={}",
                rs.rank()
            )));
        }
        if !theta.contains(&(label - 1)) {
            theta.push(label - 1);
        }
    }
    theta.sort_unstable();
    Ok(theta)
}

fn read_diamond(path: &Path) -> Result<HodgeDiamond, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub fn cmd_diamond(format: Format, sub: &DiamondCommand) -> Result<Outcome, CliError> {
    match sub {
        DiamondCommand::Flag { cartan_type, theta, cap } => {
            let rs = parse_type(cartan_type)?;
            let theta = parse_theta(&rs, theta)?;
            let d = flag_diamond(&rs, &theta, *cap)?;
            Ok(Outcome::ok(render(format, &d, || d.pyramid())?))
        }
        DiamondCommand::Reflect { input } => {
            let d = read_diamond(input)?.mirror_reflect();
            Ok(Outcome::ok(render(format, &d, || d.pyramid())?))
        }
        DiamondCommand::Check { input } => {
            let checks = read_diamond(input)?.checks();
            Ok(Outcome::ok(render(format, &checks, || {
                format!(
                    "serre         {}\nconjugation   {}\nconnected     {}\nvampire_flag  {}",
                    checks.serre, checks.conjugation, checks.connected, checks.vampire_flag
                )
            })?))
        }
    }
}

/// Parses `i,j:deg:rank,deg:rank`.
pub fn parse_hom_spec(spec: &str, data: &mut IntersectionData) -> Result<(), CliError> {
    let bad = |why: &str| CliError::input(format!("--hom {spec:?}: {why}"));
    let (pair, ranks) = spec.split_once(':').ok_or_else(|| bad("expected i,j:deg:rank"))?;
    let (i, j) = pair.split_once(',').ok_or_else(|| bad("expected a pair i,j"))?;
    let i: usize = i.trim().parse().map_err(|_| bad(&format!("invalid object index {i:?}")))?;
    let j: usize = j.trim().parse().map_err(|_| bad(&format!("invalid object index {j:?}")))?;
    let mut graded = Vec::new();
    for entry in ranks.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let (deg, rank) = entry.split_once(':').ok_or_else(|| bad(&format!("expected deg:rank, got {entry:?}")))?;
        let deg: i64 = deg.trim().parse().map_err(|_| bad(&format!("invalid degree {deg:?}")))?;
        let rank: u64 = rank.trim().parse().map_err(|_| bad(&format!("invalid rank {rank:?}")))?;
        graded.push((deg, rank));
    }
    data.entry((i, j)).or_default().extend(graded);
    Ok(())
}

fn category_text(cat: &DirectedCategory) -> String {
    let mut out = Vec::new();
    for (i, obj) in cat.objects.iter().enumerate() {
        let value = obj
            .critical_value
            .as_ref()
            .map(|v| format!(" (critical value {})", lefschetz_core::format_rational(v)))
            .unwrap_or_default();
        out.push(format!("object {i}: {}{value}", obj.label));
    }
    for i in 0..cat.len() {
        for j in 0..cat.len() {
            let ranks = &cat.hom_ranks[i][j];
            if ranks.is_empty() {
                continue;
            }
            let parts: Vec<String> = ranks.iter().map(|(d, r)| format!("rank {r} in degree {d}")).collect();
            out.push(format!("Hom(L{i}, L{j}): {}", parts.join(", ")));
        }
    }
    out.push(format!(
        "products vanish except identity compositions: {}",
        cat.products_all_vanish_except_identity
    ));
    out.join("\n")
}

pub fn cmd_fukaya(format: Format, sub: &FukayaCommand) -> Result<Outcome, CliError> {
    let cat = match sub {
        FukayaCommand::Lg2 => lg2_category(),
        FukayaCommand::FromOrbit { orbit, homs } => {
            let mut data = IntersectionData::new();
            for spec in homs {
                parse_hom_spec(spec, &mut data)?;
            }
            let report = orbit_report(orbit)?;
            category_from_slf(&report, &data)?
        }
    };
    Ok(Outcome::ok(render(format, &cat, || category_text(&cat))?))
}

pub fn cmd_mirror(format: Format, sub: &MirrorCommand) -> Result<Outcome, CliError> {
    let body = match sub {
        MirrorCommand::Fiber { level } => {
            let c = ComplexRational::parse(level).map_err(|e| CliError::input(format!("--level: {e}")))?;
            let report = classify_fiber(&c);
            render(format, &report, || report.summary())?
        }
        MirrorCommand::CriticalLevels => {
            let levels = critical_levels();
            render(format, &levels, || levels.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n"))?
        }
        MirrorCommand::Consistency => {
            let report = mirror_consistency_report();
            render(format, &report, || report.table())?
        }
    };
    Ok(Outcome::ok(body))
}

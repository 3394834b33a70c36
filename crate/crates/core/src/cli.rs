//! Command-line surface. Exit codes: 0 success or full match, 1 mismatch,
//! 2 usage or input error.

use std::ffi::OsString;
use std::fs::File;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bijection::{base_partition, retreat, DecomposeJson};
use crate::diagram::{for_each_admissible, enumerate_admissible, CmppPartition, DiagramConfig, Part, Variant};
use crate::error::{CmppError, Result};
use crate::heights::{relative_heights, relative_heights_traced, HeightsReport};
use crate::qseries::{bounded_p0_series, series_for_family, HeightProfile, SeriesFamily};
use crate::verify::{verify, BoundSemantics, VerifyFamily, VerifyRequest};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cmpp", version, about = "CMPP partitions: enumeration, relative heights, decomposition and series verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compare a series against brute-force enumeration.
    Verify(VerifyArgs),
    /// Count admissible partitions by part count and weight.
    Enumerate(EnumerateArgs),
    /// Print series coefficients.
    Series(SeriesArgs),
    /// Relative heights of a partition.
    Heights(HeightsArgs),
    /// Split a partition into base partition and vector partition.
    Decompose(PartitionArgs),
    /// Base partition for a height profile.
    Base(BaseArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Main,
    Star,
    Starstar,
    Ag,
    Bressoud,
    BoundedP0,
}

impl From<FamilyArg> for VerifyFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Main => VerifyFamily::Main,
            FamilyArg::Star => VerifyFamily::Star,
            FamilyArg::Starstar => VerifyFamily::Starstar,
            FamilyArg::Ag => VerifyFamily::Ag,
            FamilyArg::Bressoud => VerifyFamily::Bressoud,
            FamilyArg::BoundedP0 => VerifyFamily::BoundedP0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SemanticsArg {
    AtMost,
    BelowBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Stream,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub ell: usize,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long, default_value_t = 20)]
    pub max_weight: usize,
    #[arg(long)]
    pub max_z: Option<usize>,
    /// Bound M for bounded-p0.
    #[arg(long)]
    pub bound: Option<usize>,
    #[arg(long, value_enum, default_value = "at-most")]
    pub bound_semantics: SemanticsArg,
    /// Add this to every non-empty linear form (negative control).
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub perturb: i64,
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ConfigArgs {
    #[arg(long)]
    pub ell: usize,
    /// Initial conditions k_0,...,k_l.
    #[arg(long)]
    pub k: Option<String>,
    /// Shorthand for k_i = 1, others 0.
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long, default_value = "standard")]
    pub variant: String,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[arg(long, default_value_t = 10)]
    pub max_weight: usize,
    #[arg(long)]
    pub max_part: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub ell: usize,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub bound: Option<usize>,
    #[arg(long, default_value_t = 20)]
    pub max_weight: usize,
    #[arg(long)]
    pub max_z: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct PartitionArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    /// Parts as "m:a,m:a,...".
    #[arg(long)]
    pub parts: String,
}

#[derive(Args, Debug)]
pub struct HeightsArgs {
    #[command(flatten)]
    pub partition: PartitionArgs,
    /// Include the fold trace (JSON only).
    #[arg(long)]
    pub trace: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: TableFormat,
}

#[derive(Args, Debug)]
pub struct BaseArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    /// Height profile "n1,n2,...".
    #[arg(long)]
    pub profile: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: TableFormat,
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CmppError::Usage(format!("bad {what} entry '{s}'")))
        })
        .collect()
}

pub fn parse_parts(text: &str) -> Result<Vec<Part>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            let (m, a) = item
                .trim()
                .split_once(':')
                .ok_or_else(|| CmppError::Usage(format!("part '{item}' is not m:a")))?;
            let m = m
                .parse()
                .map_err(|_| CmppError::Usage(format!("bad magnitude in '{item}'")))?;
            let a = a
                .parse()
                .map_err(|_| CmppError::Usage(format!("bad height in '{item}'")))?;
            Ok(Part::new(m, a))
        })
        .collect()
}

impl ConfigArgs {
    fn build(&self) -> Result<DiagramConfig> {
        let variant: Variant = self.variant.parse()?;
        match (&self.k, self.i) {
            (Some(k), None) => DiagramConfig::new(self.ell, parse_list(k, "k")?, variant),
            (None, Some(i)) => DiagramConfig::single(self.ell, i, variant),
            (None, None) => Err(CmppError::Usage("give --k or --i".into())),
            (Some(_), Some(_)) => Err(CmppError::Usage("give only one of --k and --i".into())),
        }
    }
}

fn index_for(family: FamilyArg, i: Option<usize>, a: Option<usize>) -> Result<usize> {
    let fam: VerifyFamily = family.into();
    match (fam.uses_a(), i, a) {
        (true, None, Some(a)) => Ok(a),
        (true, _, _) => Err(CmppError::Usage(format!("--family {fam} takes --a"))),
        (false, Some(i), None) => Ok(i),
        (false, None, None) if fam == VerifyFamily::BoundedP0 => Ok(0),
        (false, _, _) => Err(CmppError::Usage(format!("--family {fam} takes --i"))),
    }
}

fn to_json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string(value).map_err(|e| CmppError::Usage(e.to_string()))?;
    writeln!(out, "{text}").map_err(io_err)
}

fn io_err(e: std::io::Error) -> CmppError {
    CmppError::Usage(format!("i/o: {e}"))
}

fn csv_err(e: csv::Error) -> CmppError {
    CmppError::Usage(format!("csv: {e}"))
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let index = index_for(args.family, args.i, args.a)?;
    let family: VerifyFamily = args.family.into();
    if family == VerifyFamily::BoundedP0 && args.bound.is_none() {
        return Err(CmppError::Usage("--family bounded-p0 needs --bound".into()));
    }
    let mut request = VerifyRequest::new(family, args.ell, index, args.max_weight)
        .with_max_z(args.max_z.unwrap_or(args.max_weight))
        .with_offset(args.perturb);
    if let Some(b) = args.bound {
        let semantics = match args.bound_semantics {
            SemanticsArg::AtMost => BoundSemantics::AtMost,
            SemanticsArg::BelowBound => BoundSemantics::BelowBound,
        };
        request = request.with_bound(b, semantics);
    }
    let report = verify(&request)?;
    if let Some(path) = &args.json {
        let file = File::create(path).map_err(io_err)?;
        serde_json::to_writer_pretty(file, &report).map_err(|e| CmppError::Usage(e.to_string()))?;
    }
    if let Some(path) = &args.csv {
        report.write_csv(File::create(path).map_err(io_err)?).map_err(io_err)?;
    }
    let bad = report.mismatches().count();
    writeln!(
        out,
        "{} family={} ell={} index={} max_weight={} max_z={} cells={} mismatches={}",
        if report.pass { "PASS" } else { "FAIL" },
        family,
        args.ell,
        index,
        args.max_weight,
        request.max_z,
        report.cells.len(),
        bad
    )
    .map_err(io_err)?;
    for c in report.mismatches().take(10) {
        writeln!(out, "  j={} n={} series={} count={}", c.j, c.n, c.series, c.count).map_err(io_err)?;
    }
    Ok(if report.pass { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Result<i32> {
    let config = args.config.build()?;
    match args.format {
        Format::Stream => {
            let mut failure = None;
            for_each_admissible(&config, args.max_weight, args.max_part, |parts| {
                if failure.is_none() {
                    let p = CmppPartition::new_unchecked(config.clone(), parts.to_vec());
                    if let Err(e) = to_json_line(out, &p.to_json()) {
                        failure = Some(e);
                    }
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
        }
        Format::Csv => enumerate_admissible(&config, args.max_weight, args.max_part)
            .write_csv(out)
            .map_err(io_err)?,
        Format::Json => {
            let counts = enumerate_admissible(&config, args.max_weight, args.max_part);
            let rows: Vec<_> = counts
                .entries()
                .into_iter()
                .map(|(j, n, c)| json!({"j": j, "n": n, "count": c.to_string()}))
                .collect();
            let totals: Vec<String> = counts.totals().iter().map(|t| t.to_string()).collect();
            to_json_line(out, &json!({"counts": rows, "totals": totals}))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_series(args: &SeriesArgs, out: &mut dyn Write) -> Result<i32> {
    let index = index_for(args.family, args.i, args.a)?;
    let z = args.max_z.unwrap_or(args.max_weight);
    let series = match args.family {
        FamilyArg::BoundedP0 => {
            let bound = args
                .bound
                .ok_or_else(|| CmppError::Usage("--family bounded-p0 needs --bound".into()))?;
            bounded_p0_series(args.ell, bound, args.max_weight, z)?
        }
        f => {
            let family = match f {
                FamilyArg::Main => SeriesFamily::Main,
                FamilyArg::Star => SeriesFamily::Star,
                FamilyArg::Starstar => SeriesFamily::StarStar,
                FamilyArg::Ag => SeriesFamily::Ag,
                FamilyArg::Bressoud => SeriesFamily::Bressoud,
                FamilyArg::BoundedP0 => unreachable!(),
            };
            series_for_family(family, args.ell, index, args.max_weight, z)?
        }
    };
    match args.format {
        Format::Json => to_json_line(out, &series.to_json())?,
        _ => series.write_csv(out).map_err(io_err)?,
    }
    Ok(EXIT_OK)
}

fn build_partition(args: &PartitionArgs) -> Result<CmppPartition> {
    let config = args.config.build()?;
    CmppPartition::new(config, parse_parts(&args.parts)?)
}

fn cmd_heights(args: &HeightsArgs, out: &mut dyn Write) -> Result<i32> {
    let partition = build_partition(&args.partition)?;
    if args.format == TableFormat::Csv {
        if args.trace {
            return Err(CmppError::Usage("--trace needs --format json".into()));
        }
        let heights = relative_heights(&partition)?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["magnitude", "absolute_height", "relative_height"]).map_err(csv_err)?;
        for (p, h) in partition.parts().iter().zip(heights.heights()) {
            w.serialize((p.magnitude, p.absolute_height, h)).map_err(csv_err)?;
        }
        w.flush().map_err(io_err)?;
        return Ok(EXIT_OK);
    }
    let report = if args.trace {
        let (a, t) = relative_heights_traced(&partition)?;
        HeightsReport::new(&partition, &a, Some(t))
    } else {
        HeightsReport::new(&partition, &relative_heights(&partition)?, None)
    };
    to_json_line(out, &report)?;
    Ok(EXIT_OK)
}

fn cmd_decompose(args: &PartitionArgs, out: &mut dyn Write) -> Result<i32> {
    let partition = build_partition(args)?;
    let result = retreat(&partition)?;
    to_json_line(out, &DecomposeJson::new(&result, partition.weight()))?;
    Ok(EXIT_OK)
}

fn cmd_base(args: &BaseArgs, out: &mut dyn Write) -> Result<i32> {
    let config = args.config.build()?;
    let profile = HeightProfile::new(parse_list(&args.profile, "profile")?);
    let base = base_partition(&config, &profile)?;
    if args.format == TableFormat::Csv {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["magnitude", "absolute_height"]).map_err(csv_err)?;
        for p in base.parts() {
            w.serialize((p.magnitude, p.absolute_height)).map_err(csv_err)?;
        }
        w.flush().map_err(io_err)?;
        return Ok(EXIT_OK);
    }
    let value = json!({
        "partition": base.to_json(),
        "weight": base.weight(),
    });
    to_json_line(out, &value)?;
    Ok(EXIT_OK)
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Verify(a) => cmd_verify(a, out),
        Command::Enumerate(a) => cmd_enumerate(a, out),
        Command::Series(a) => cmd_series(a, out),
        Command::Heights(a) => cmd_heights(a, out),
        Command::Decompose(a) => cmd_decompose(a, out),
        Command::Base(a) => cmd_base(a, out),
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
/// Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("cmpp").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn parse_helpers() {
        assert_eq!(parse_parts("3:0, 7:1").unwrap(), vec![Part::new(3, 0), Part::new(7, 1)]);
        assert!(parse_parts("3-0").is_err());
        assert_eq!(parse_list("2,2,2", "profile").unwrap(), vec![2, 2, 2]);
        assert!(parse_list("2,x", "profile").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["verify", "--family", "main", "--ell", "1", "--i", "1", "--max-weight", "20"]).0, 0);
        assert_eq!(
            call(&["verify", "--family", "main", "--ell", "1", "--i", "1", "--max-weight", "20", "--perturb", "1"]).0,
            1
        );
        assert_eq!(call(&["verify", "--family", "ag", "--ell", "1", "--i", "1"]).0, 2);
        assert_eq!(call(&["heights", "--ell", "3", "--k", "0,0,1,0", "--parts", "3:x"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn base_command() {
        let (code, out) = call(&["base", "--ell", "3", "--i", "2", "--profile", "2,2,2"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["weight"], 56);
    }

    #[test]
    fn enumerate_command() {
        let (code, out) = call(&["enumerate", "--ell", "1", "--k", "0,1", "--max-weight", "4", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["totals"], json!(["1", "1", "1", "1", "2"]));
    }
}

//! Command-line front end. Exit codes: 0 success, 1 failed check, 2 usage
//! error (including bad arguments and unreadable inputs).

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sl3_billiards_core::hecke::{Basis, DescentChoice};
use sl3_billiards_core::treegen::LambdaVariant;
use sl3_billiards_core::zeta::zeta;

use crate::diagram::{AlcoveDiagram, Placement};
use crate::document::PatternDocument;
use crate::error::{IoError, Result};
use crate::external::{diff_external, zeta_table, DiffMode, ExternalTable};
use crate::growth::growth_report;
use crate::parallel;
use crate::svg::{render, SvgOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sl3-billiards", version, about = "Billiards bouncing in alcoves for SL3")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build Z̃ and write it as JSON, CSV or SVG.
    Generate {
        #[command(flatten)]
        common: Common,
        #[arg(long, short = 'n', default_value_t = 82)]
        max_label: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_enum, default_value_t = PlacementArg::Lower)]
        placement: PlacementArg,
    },
    /// Check that both constructions give the same multiset.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, short = 'n', default_value_t = 60)]
        max_label: u32,
        #[arg(long, value_enum, default_value_t = VariantArg::Corrected)]
        lambda_variant: VariantArg,
    },
    /// Emit the coefficients of ζ_i for i ≤ max-i.
    Zeta {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 12)]
        max_i: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, value_enum, default_value_t = BasisArg::Standard)]
        basis: BasisArg,
    },
    /// Draw Z̃, or the collapsed ζ diagram, as SVG.
    Render {
        #[command(flatten)]
        common: Common,
        #[arg(long, short = 'n', default_value_t = 82)]
        max_label: u32,
        /// Render a previously generated JSON document instead.
        #[arg(long, conflicts_with = "max_label")]
        input: Option<PathBuf>,
        /// Build the picture from ζ_i, i ≤ N, with triples collapsed.
        #[arg(long, conflicts_with = "input")]
        from_zeta: Option<u32>,
        #[arg(long, value_enum, default_value_t = PlacementArg::Lower)]
        placement: PlacementArg,
    },
    /// Largest multiplicity per label, and the doubling family at ℓ = 5.
    Growth {
        #[command(flatten)]
        common: Common,
        #[arg(long, short = 'n', default_value_t = 133)]
        max_label: u32,
    },
    /// Compare an external coefficient table with the predicted ζ_i.
    Compare {
        #[command(flatten)]
        common: Common,
        /// CSV with columns i,y,minDeg,coeffs.
        #[arg(long)]
        table: PathBuf,
        /// Defaults to the largest index in the table.
        #[arg(long)]
        max_i: Option<u32>,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// The parameter ℓ (or p), at least 3.
    #[arg(long, short = 'l', value_parser = clap::value_parser!(i64).range(3..))]
    pub ell: i64,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "1")]
    pub jobs: NonZeroUsize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PlacementArg {
    Lower,
    Upper,
}

impl From<PlacementArg> for Placement {
    fn from(p: PlacementArg) -> Self {
        match p {
            PlacementArg::Lower => Placement::Lower,
            PlacementArg::Upper => Placement::Upper,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VariantArg {
    Printed,
    Corrected,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BasisArg {
    Standard,
    Canonical,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Full,
    Truncated,
}

enum Outcome {
    Ok,
    Failed,
}

fn usage(msg: impl Into<String>) -> IoError {
    IoError::Invalid(msg.into())
}

/// Checks done before any computation.
fn validate(cmd: &Command) -> Result<()> {
    match cmd {
        Command::Zeta { format: Format::Svg, .. } => Err(usage("zeta supports --format json or csv")),
        Command::Render { input: Some(p), .. } if !p.is_file() => {
            Err(usage(format!("cannot read {}", p.display())))
        }
        Command::Compare { table, .. } if !table.is_file() => {
            Err(usage(format!("cannot read {}", table.display())))
        }
        _ => Ok(()),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ZetaRow {
    i: u32,
    y: String,
    min_deg: i32,
    coeffs: Vec<i64>,
}

fn zeta_output(ell: i64, max_i: u32, basis: BasisArg, format: Format) -> Result<String> {
    let z = sl3_billiards_core::billiards::build_ztilde(ell, max_i)?;
    let table = match basis {
        BasisArg::Standard => zeta_table(ell, max_i, &z, max_i, DescentChoice::Smallest)?,
        BasisArg::Canonical => {
            let mut t = ExternalTable::default();
            for i in 0..=max_i {
                let v = zeta(ell, i, &z, max_i)?;
                debug_assert_eq!(v.basis, Basis::Canonical);
                for (x, c) in v.iter() {
                    t.rows.insert((i, *x), c.clone());
                }
            }
            t
        }
    };
    Ok(match format {
        Format::Json => {
            let rows: Vec<ZetaRow> = table
                .rows
                .iter()
                .map(|((i, y), p)| {
                    let (min_deg, coeffs) = p.to_coeffs();
                    ZetaRow {
                        i: *i,
                        y: y.word_string(),
                        min_deg,
                        coeffs,
                    }
                })
                .collect();
            serde_json::to_string_pretty(&rows)? + "\n"
        }
        _ => table.to_csv(),
    })
}

fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Generate {
            common,
            max_label,
            format,
            placement,
        } => {
            let z = parallel::build_ztilde(common.ell, max_label, common.jobs)?;
            let text = match format {
                Format::Json => PatternDocument::new(common.ell, max_label, &z).to_json(),
                Format::Csv => PatternDocument::new(common.ell, max_label, &z).to_csv(),
                Format::Svg => render(
                    &AlcoveDiagram::from_ztilde(&z, placement.into()),
                    SvgOptions { ell: common.ell, extent: 0 },
                ),
            };
            emit(common.out.as_deref(), &text)?;
            Ok(Outcome::Ok)
        }
        Command::Verify {
            common,
            max_label,
            lambda_variant,
        } => {
            let variant = match lambda_variant {
                VariantArg::Printed => LambdaVariant::Printed,
                VariantArg::Corrected => LambdaVariant::Corrected,
            };
            let r = parallel::verify_lemma(common.ell, max_label, variant, common.jobs)?;
            let mut text = format!(
                "ell={} maxLabel={} variant={:?} ztilde={} zprime={} rejectedSeeds={} discrepancies={}\n",
                r.ell,
                r.max_n,
                r.variant,
                r.ztilde_total,
                r.zprime_total,
                r.rejected_seeds.len(),
                r.discrepancies.len()
            );
            for d in r.discrepancies.iter().take(20) {
                text += &format!("  {} {} delta {}\n", d.point.mu, d.point.label, d.delta);
            }
            emit(common.out.as_deref(), &text)?;
            Ok(if r.is_equal() { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Zeta {
            common,
            max_i,
            format,
            basis,
        } => {
            emit(common.out.as_deref(), &zeta_output(common.ell, max_i, basis, format)?)?;
            Ok(Outcome::Ok)
        }
        Command::Render {
            common,
            max_label,
            input,
            from_zeta,
            placement,
        } => {
            let diagram = if let Some(path) = input {
                let doc = PatternDocument::from_json(&fs::read_to_string(path)?)?;
                if doc.ell != common.ell {
                    return Err(usage(format!("document has ell = {}", doc.ell)));
                }
                AlcoveDiagram::from_ztilde(&doc.multiset(), placement.into())
            } else if let Some(max_i) = from_zeta {
                let z = parallel::build_ztilde(common.ell, max_i, common.jobs)?;
                let c = AlcoveDiagram::from_zeta(common.ell, max_i, &z, max_i)?.collapse_triples();
                for (x, s) in &c.unmatched {
                    eprintln!("unmatched {s} at {}", x.word_string());
                }
                c.diagram
            } else {
                let z = parallel::build_ztilde(common.ell, max_label, common.jobs)?;
                AlcoveDiagram::from_ztilde(&z, placement.into())
            };
            let svg = render(&diagram, SvgOptions { ell: common.ell, extent: 0 });
            emit(common.out.as_deref(), &svg)?;
            Ok(Outcome::Ok)
        }
        Command::Growth { common, max_label } => {
            let z = parallel::build_ztilde(common.ell, max_label, common.jobs)?;
            let r = growth_report(&z, common.ell, max_label);
            emit(common.out.as_deref(), &r.to_text())?;
            Ok(if r.family_holds() { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Compare {
            common,
            table,
            max_i,
            mode,
        } => {
            let ext = ExternalTable::read(fs::File::open(&table)?)?;
            let max_i = max_i.or_else(|| ext.indices().last().copied()).unwrap_or(0);
            let z = parallel::build_ztilde(common.ell, max_i, common.jobs)?;
            let predicted = zeta_table(common.ell, max_i, &z, max_i, DescentChoice::Smallest)?;
            let mode = match mode {
                ModeArg::Full => DiffMode::Full,
                ModeArg::Truncated => DiffMode::Truncated,
            };
            let r = diff_external(&ext, &predicted, max_i, mode)?;
            let mut text = format!(
                "indices={} compared={} mismatches={}\n",
                r.indices,
                r.compared,
                r.mismatches.len()
            );
            for m in &r.mismatches {
                text += &format!(
                    "  i={} y={} predicted {} external {}\n",
                    m.i,
                    m.y.word_string(),
                    m.predicted,
                    m.external
                );
            }
            emit(common.out.as_deref(), &text)?;
            Ok(if r.is_clean() { Outcome::Ok } else { Outcome::Failed })
        }
    }
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    if let Err(e) = validate(&cli.command) {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    match execute(cli.command) {
        Ok(Outcome::Ok) => EXIT_OK,
        Ok(Outcome::Failed) => EXIT_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                IoError::Core(_) => EXIT_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}

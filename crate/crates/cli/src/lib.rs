//! Command-line interface: bundle expressions, the extension table, case
//! reports and the catalog, rendered as text, JSON or TSV.

pub mod expr;
pub mod render;

use acmcalc::{analyze, catalog, extension_cases, CaseReport, Hypersurface, SplitOptions};
use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::render::{CaseReportJson, CatalogEntryJson, ExtensionCaseJson};

#[derive(Debug, Parser)]
#[command(
    name = "acmcalc",
    version,
    about = "Chern-class calculus for ACM bundles on hypersurface threefolds"
)]
pub struct Cli {
    /// Degree r of the hypersurface X_r in P^4.
    #[arg(
        long,
        global = true,
        default_value_t = 5,
        allow_negative_numbers = true
    )]
    pub degree: i64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QueryArg {
    Chi,
    Chern,
    Ch,
    Rank,
}

impl From<QueryArg> for expr::Query {
    fn from(q: QueryArg) -> Self {
        match q {
            QueryArg::Chi => expr::Query::Chi,
            QueryArg::Chern => expr::Query::Chern,
            QueryArg::Ch => expr::Query::Ch,
            QueryArg::Rank => expr::Query::Rank,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a bundle expression, e.g. "bundle(2,4,30)(-1) * dual(cat(0,3))".
    Eval {
        #[arg(value_enum)]
        query: QueryArg,
        expr: String,
    },
    /// The seven extension rows F(m) -> G -> E.
    Table,
    /// Splitting analysis of the extension rows.
    Analyze {
        /// Row number, 1..=7.
        #[arg(long)]
        case: Option<usize>,
        /// All rows (the default when --case is absent).
        #[arg(long, conflicts_with = "case")]
        all: bool,
        /// Also list pairs rejected by the Chern filter.
        #[arg(long)]
        verbose: bool,
        /// Require c3 to match in the Chern filter as well.
        #[arg(long)]
        c3_filter: bool,
    },
    /// Normalized indecomposable rank-2 ACM bundles on the quintic.
    Catalog,
}

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Well-formed input the library rejects; exit code 1.
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl From<acmcalc::Error> for CliError {
    fn from(e: acmcalc::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Domain(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn quintic_only(x: &Hypersurface, what: &str) -> Result<(), CliError> {
    if x.degree() == 5 {
        Ok(())
    } else {
        Err(CliError::Domain(format!(
            "{what} is only defined on the quintic (degree 5), got degree {}",
            x.degree()
        )))
    }
}

/// Runs one command and returns what goes to standard output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let x = Hypersurface::new(cli.degree)?;
    match &cli.command {
        Command::Eval { query, expr: text } => {
            let e = expr::parse(text).map_err(|e| CliError::Usage(e.to_string()))?;
            let value = expr::evaluate(&e, (*query).into(), &x)?;
            match cli.format {
                Format::Text => Ok(format!("{}\n", render::value_text(&value))),
                Format::Json => to_json(&render::value_json(&value)),
                Format::Tsv => Ok(render::value_tsv(&value)),
            }
        }
        Command::Table => {
            let cases = extension_cases(&x)?;
            match cli.format {
                Format::Text => Ok(render::table_text(&cases)),
                Format::Json => to_json(
                    &cases
                        .iter()
                        .map(ExtensionCaseJson::from)
                        .collect::<Vec<_>>(),
                ),
                Format::Tsv => Ok(render::table_tsv(&cases)),
            }
        }
        Command::Analyze {
            case,
            all: _,
            verbose,
            c3_filter,
        } => {
            let cases = extension_cases(&x)?;
            let opts = SplitOptions {
                include_rejected: *verbose,
                c3_filter: *c3_filter,
            };
            let selected: Vec<_> = match case {
                Some(i) if (1..=cases.len()).contains(i) => vec![&cases[i - 1]],
                Some(i) => return Err(acmcalc::Error::UnknownCase(*i).into()),
                None => cases.iter().collect(),
            };
            let reports: Vec<CaseReport> = selected.into_iter().map(|c| analyze(c, opts)).collect();
            match cli.format {
                Format::Text => Ok(reports
                    .iter()
                    .map(render::report_text)
                    .collect::<Vec<_>>()
                    .join("\n")),
                Format::Json => {
                    let dtos: Vec<CaseReportJson> = reports.iter().map(Into::into).collect();
                    if case.is_some() {
                        to_json(&dtos[0])
                    } else {
                        to_json(&dtos)
                    }
                }
                Format::Tsv => Ok(render::reports_tsv(&reports)),
            }
        }
        Command::Catalog => {
            quintic_only(&x, "the catalog")?;
            let entries = catalog();
            match cli.format {
                Format::Text => Ok(render::catalog_text(&entries)),
                Format::Json => to_json(
                    &entries
                        .iter()
                        .map(CatalogEntryJson::from)
                        .collect::<Vec<_>>(),
                ),
                Format::Tsv => Ok(render::catalog_tsv(&entries)),
            }
        }
    }
}

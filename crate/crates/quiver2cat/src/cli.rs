//! Command-line front end: check-licit, build, gabriel, cells, fiat,
//! construct, fixtures. Exit codes: 0 certified, 1 failed checks, 2 input
//! errors.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructions::{self, fixtures, QuiverBundle};
use crate::fileio::{self, Document, FileError};
use crate::gabriel;
use crate::quiver2::{check_licit, two_level_acyclic};
use crate::report::{Certification, Report, ReportStatus};
use crate::structure;
use crate::twocat::{build_two_category, verify_two_category, TwoCatPresentation};

#[derive(Debug, Parser)]
#[command(
    name = "quiver2cat",
    about = "Construct, verify and deconstruct finitary 2-categories presented by 2-quivers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Input file (JSON document)
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Output file for emitted documents
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Report rendering
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    pub report: ReportFormat,
    /// Cap for auto-derived path bounds on ideal-free acyclic inputs
    #[arg(long, global = true, default_value_t = 32)]
    pub max_degree: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify the licitness of a quiver document's rewrite table
    CheckLicit,
    /// Assemble and certify the quiver 2-category of a quiver document
    Build,
    /// Extract the Gabriel 2-quiver (building first when given a quiver)
    Gabriel,
    /// Left, right and two-sided cells of the 1-composition table
    Cells,
    /// Fiatness report for a fiat document (presentation + involution +
    /// adjunctions)
    Fiat,
    /// Builders for the example families
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Shipped fixtures
    Fixtures {
        #[command(subcommand)]
        what: FixturesCmd,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    /// Quiver 2-category of an ordered monoid document
    Monoid,
    /// The n-th Catalan monoid as a monoid document
    Catalan { n: usize },
    /// Identity-free projective presentation of an algebra document
    Projective,
    /// Concrete bimodule 2-category (with identity) of an algebra document
    ProjectiveId,
}

#[derive(Debug, Subcommand)]
pub enum FixturesCmd {
    /// List the available fixture names
    List,
    /// Dump a fixture as a canonical document
    Dump { name: String },
}

pub struct Outcome {
    pub report: Report,
    pub emitted: Option<String>,
    pub stdout: Option<String>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self.report.status {
            ReportStatus::Certified => 0,
            ReportStatus::Failed => 1,
            ReportStatus::Error => 2,
        }
    }
}

fn read_input(cli: &Cli) -> Result<String, FileError> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| FileError::Document("--input is required".into()))?;
    Ok(std::fs::read_to_string(path)?)
}

fn load_bundle(cli: &Cli) -> Result<QuiverBundle, FileError> {
    let text = read_input(cli)?;
    match fileio::parse_document(&text)? {
        Document::Quiver(doc) => fileio::bundle_from_doc(&doc),
        _ => Err(FileError::Document("expected a quiver document".into())),
    }
}

fn load_presentation_like(cli: &Cli) -> Result<TwoCatPresentation, FileError> {
    let text = read_input(cli)?;
    match fileio::parse_document(&text)? {
        Document::TwoCategory(doc) => fileio::presentation_from_doc(&doc),
        Document::Quiver(doc) => {
            let bundle = fileio::bundle_from_doc(&doc)?;
            let cat = bundle.build()?;
            build_two_category(&cat)
                .map_err(|e| FileError::Document(format!("build failed: {e}")))
        }
        _ => Err(FileError::Document("expected a quiver or two_category document".into())),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let result = dispatch(cli);
    let elapsed = start.elapsed().as_millis();
    match result {
        Ok((cert, emitted, stdout)) => Outcome {
            report: Report::from_certification(&cert, elapsed),
            emitted,
            stdout,
        },
        Err(message) => Outcome {
            report: Report::error(message, elapsed),
            emitted: None,
            stdout: None,
        },
    }
}

type Dispatch = Result<(Certification, Option<String>, Option<String>), String>;

fn dispatch(cli: &Cli) -> Dispatch {
    match &cli.command {
        Command::CheckLicit => cmd_check_licit(cli),
        Command::Build => cmd_build(cli),
        Command::Gabriel => cmd_gabriel(cli),
        Command::Cells => cmd_cells(cli),
        Command::Fiat => cmd_fiat(cli),
        Command::Construct { kind } => cmd_construct(cli, kind),
        Command::Fixtures { what } => cmd_fixtures(cli, what),
    }
}

fn cmd_check_licit(cli: &Cli) -> Dispatch {
    let text = read_input(cli).map_err(|e| e.to_string())?;
    let doc = match fileio::parse_document(&text).map_err(|e| e.to_string())? {
        Document::Quiver(doc) => doc,
        _ => return Err("expected a quiver document".into()),
    };
    // build the raw quiver and rewrite map without certification so
    // compatibility failures become report content
    let mut quiver = crate::quiver2::TwoQuiver::new();
    for v in &doc.vertices {
        quiver.add_vertex(v).map_err(|e| e.to_string())?;
    }
    for e in &doc.one_edges {
        let s = quiver.vertex_ix(&e.src).map_err(|e| e.to_string())?;
        let t = quiver.vertex_ix(&e.tgt).map_err(|e| e.to_string())?;
        quiver.add_edge(&e.id, s, t).map_err(|e| e.to_string())?;
    }
    for (v, e) in &doc.stationary {
        let vix = quiver.vertex_ix(v).map_err(|e| e.to_string())?;
        let eix = quiver.edge_ix(e).map_err(|e| e.to_string())?;
        quiver.set_stationary(vix, eix).map_err(|e| e.to_string())?;
    }
    for e in &doc.two_edges {
        let s = quiver.edge_ix(&e.src).map_err(|e| e.to_string())?;
        let t = quiver.edge_ix(&e.tgt).map_err(|e| e.to_string())?;
        quiver.add_two_edge(&e.id, s, t).map_err(|e| e.to_string())?;
    }
    let mut rewrites = std::collections::BTreeMap::new();
    for r in &doc.one_rewrites {
        let p = quiver.edge_ix(&r.lhs[0]).map_err(|e| e.to_string())?;
        let qe = quiver.edge_ix(&r.lhs[1]).map_err(|e| e.to_string())?;
        let rhs: Result<Vec<_>, _> = r.rhs.iter().map(|n| quiver.edge_ix(n)).collect();
        rewrites.insert((p, qe), rhs.map_err(|e| e.to_string())?);
    }
    let check = check_licit(&quiver, &rewrites).map_err(|e| e.to_string())?;
    let mut cert = Certification::new();
    if check.certified() {
        cert.pass(format!("licit ({} triples)", check.triples_checked));
    } else {
        for f in &check.failures {
            cert.fail(
                format!("licit triple ({}, {}, {})", f.p, f.q, f.r),
                format!("{:?} vs {:?}", f.lhs, f.rhs),
            );
        }
    }
    Ok((cert, None, None))
}

fn cmd_build(cli: &Cli) -> Dispatch {
    let bundle = load_bundle(cli).map_err(|e| e.to_string())?;
    let mut cert = Certification::new();
    cert.pass("licit");
    if bundle.ideal.is_none() {
        if let Err(cycle) = two_level_acyclic(bundle.licit.quiver()) {
            let q = bundle.licit.quiver();
            let names: Vec<&str> = cycle.iter().map(|&a| q.two_edge_name(a)).collect();
            cert.fail(
                "two_level_acyclic",
                format!("2-level cycle: ({})", names.join(", ")),
            );
            return Ok((cert, None, None));
        }
        cert.pass("two_level_acyclic");
    }
    let cat = bundle.build().map_err(|e| e.to_string())?;
    cert.pass("quotient");
    let drop_cert = crate::drop::verify_drop(&cat).map_err(|e| e.to_string())?;
    cert.merge("drop", drop_cert);
    if !cert.certified() {
        return Ok((cert, None, None));
    }
    let pres = build_two_category(&cat).map_err(|e| e.to_string())?;
    let suite = verify_two_category(&pres).map_err(|e| e.to_string())?;
    cert.merge("two_category", suite);
    let emitted = if cert.certified() {
        Some(fileio::render_document(&Document::TwoCategory(fileio::presentation_to_doc(&pres))))
    } else {
        None
    };
    Ok((cert, emitted, None))
}

fn cmd_gabriel(cli: &Cli) -> Dispatch {
    let pres = load_presentation_like(cli).map_err(|e| e.to_string())?;
    let result = gabriel::gabriel_quiver(&pres).map_err(|e| e.to_string())?;
    let mut cert = Certification::new();
    cert.pass(format!(
        "gabriel ({} two-edges, nilpotency {})",
        result.bundle.licit.quiver().two_edge_count(),
        result.nilpotency
    ));
    cert.merge("rebuilt", result.rebuilt_certification.clone());
    let emitted = Some(fileio::render_document(&Document::Quiver(fileio::bundle_to_doc(
        &result.bundle,
    ))));
    Ok((cert, emitted, None))
}

fn cmd_cells(cli: &Cli) -> Dispatch {
    let pres = load_presentation_like(cli).map_err(|e| e.to_string())?;
    let partition = structure::cells(&pres);
    let mut cert = Certification::new();
    let render = |cells: &[Vec<String>]| {
        cells
            .iter()
            .map(|c| format!("{{{}}}", c.join(", ")))
            .collect::<Vec<_>>()
            .join(" ")
    };
    cert.pass(format!("left cells: {}", render(&partition.left_cell_names())));
    cert.pass(format!("right cells: {}", render(&partition.right_cell_names())));
    cert.pass(format!("two-sided cells: {}", render(&partition.two_cell_names())));
    Ok((cert, None, None))
}

fn cmd_fiat(cli: &Cli) -> Dispatch {
    let text = read_input(cli).map_err(|e| e.to_string())?;
    let doc = match fileio::parse_document(&text).map_err(|e| e.to_string())? {
        Document::Fiat(doc) => doc,
        _ => return Err("expected a fiat document".into()),
    };
    let bundle = fileio::bundle_from_doc(&doc.presentation).map_err(|e| e.to_string())?;
    let cat = bundle.build().map_err(|e| e.to_string())?;
    let pres = build_two_category(&cat).map_err(|e| e.to_string())?;
    let inv = fileio::involution_from_doc(&cat.licit, &doc.involution).map_err(|e| e.to_string())?;
    let adj = fileio::adjunctions_from_doc(&cat.licit, &doc.adjunctions).map_err(|e| e.to_string())?;
    let report = structure::fiat_report(&cat, &pres, &inv, &adj).map_err(|e| e.to_string())?;
    let mut cert = report.cert.clone();
    for (cell, dual) in report.left_cells.iter().zip(&report.self_dual_members) {
        let duals = if dual.is_empty() {
            "no self-dual member".to_string()
        } else {
            format!("self-dual: {}", dual.join(", "))
        };
        cert.pass(format!("left cell {{{}}}: {}", cell.join(", "), duals));
    }
    Ok((cert, None, None))
}

fn cmd_construct(cli: &Cli, kind: &ConstructKind) -> Dispatch {
    match kind {
        ConstructKind::Catalan { n } => {
            let m = constructions::catalan_monoid(*n).map_err(|e| e.to_string())?;
            let mut cert = Certification::new();
            cert.pass(format!("catalan monoid C_{n} with {} elements", m.len()));
            let emitted =
                Some(fileio::render_document(&Document::Monoid(fileio::monoid_to_doc(&m))));
            Ok((cert, emitted, None))
        }
        ConstructKind::Monoid => {
            let text = read_input(cli).map_err(|e| e.to_string())?;
            let doc = match fileio::parse_document(&text).map_err(|e| e.to_string())? {
                Document::Monoid(doc) => doc,
                _ => return Err("expected a monoid document".into()),
            };
            let m = fileio::monoid_from_doc(&doc).map_err(|e| e.to_string())?;
            let bundle = constructions::monoid_two_category(&m).map_err(|e| e.to_string())?;
            let mut cert = Certification::new();
            cert.pass(format!(
                "monoid 2-category: {} one-edges, {} two-edges",
                bundle.licit.quiver().edge_count(),
                bundle.licit.quiver().two_edge_count()
            ));
            let emitted = Some(fileio::render_document(&Document::Quiver(
                fileio::bundle_to_doc(&bundle),
            )));
            Ok((cert, emitted, None))
        }
        ConstructKind::Projective => {
            let text = read_input(cli).map_err(|e| e.to_string())?;
            let doc = match fileio::parse_document(&text).map_err(|e| e.to_string())? {
                Document::Algebra(doc) => doc,
                _ => return Err("expected an algebra document".into()),
            };
            let alg = fileio::algebra_from_doc(&doc).map_err(|e| e.to_string())?;
            let bundle =
                constructions::projective_semicategory(&alg).map_err(|e| e.to_string())?;
            let mut cert = Certification::new();
            cert.pass(format!(
                "projective semicategory: {} one-edges, {} two-edges",
                bundle.licit.quiver().edge_count(),
                bundle.licit.quiver().two_edge_count()
            ));
            let emitted = Some(fileio::render_document(&Document::Quiver(
                fileio::bundle_to_doc(&bundle),
            )));
            Ok((cert, emitted, None))
        }
        ConstructKind::ProjectiveId => {
            let text = read_input(cli).map_err(|e| e.to_string())?;
            let doc = match fileio::parse_document(&text).map_err(|e| e.to_string())? {
                Document::Algebra(doc) => doc,
                _ => return Err("expected an algebra document".into()),
            };
            let alg = fileio::algebra_from_doc(&doc).map_err(|e| e.to_string())?;
            let pres =
                constructions::projective_two_category(&alg).map_err(|e| e.to_string())?;
            let suite = verify_two_category(&pres).map_err(|e| e.to_string())?;
            let mut cert = Certification::new();
            cert.merge("two_category", suite);
            let emitted = Some(fileio::render_document(&Document::TwoCategory(
                fileio::presentation_to_doc(&pres),
            )));
            Ok((cert, emitted, None))
        }
    }
}

fn cmd_fixtures(_cli: &Cli, what: &FixturesCmd) -> Dispatch {
    match what {
        FixturesCmd::List => {
            let mut cert = Certification::new();
            cert.pass(format!("fixtures: {}", fixtures::FIXTURE_NAMES.join(", ")));
            Ok((cert, None, Some(fixtures::FIXTURE_NAMES.join("\n") + "\n")))
        }
        FixturesCmd::Dump { name } => {
            let mut cert = Certification::new();
            let emitted = match name.as_str() {
                "CV" => {
                    let pres = fixtures::fixture_cv().map_err(|e| e.to_string())?;
                    fileio::render_document(&Document::TwoCategory(fileio::presentation_to_doc(
                        &pres,
                    )))
                }
                "M" => {
                    // bundle plus fiat data
                    let bundle = fixtures::fixture_m().map_err(|e| e.to_string())?;
                    let (inv, adj) =
                        fixtures::fixture_m_fiat(&bundle.licit).map_err(|e| e.to_string())?;
                    let doc = fileio::FiatDoc {
                        kind: "fiat".into(),
                        presentation: fileio::bundle_to_doc(&bundle),
                        involution: fileio::involution_to_doc(&bundle.licit, &inv),
                        adjunctions: fileio::adjunctions_to_doc(&bundle.licit, &adj),
                    };
                    fileio::render_document(&Document::Fiat(doc))
                }
                other => {
                    let bundle = fixtures::fixture(other).map_err(|e| e.to_string())?;
                    fileio::render_document(&Document::Quiver(fileio::bundle_to_doc(&bundle)))
                }
            };
            cert.pass(format!("fixture {name}"));
            Ok((cert, Some(emitted), None))
        }
    }
}

/// Renders the outcome, writes any emitted document, and returns the exit
/// code.
pub fn finish(cli: &Cli, outcome: &Outcome) -> i32 {
    match cli.report {
        ReportFormat::Text => print!("{}", outcome.report.render_text()),
        ReportFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&outcome.report).expect("report json"))
        }
    }
    if let Some(text) = &outcome.stdout {
        print!("{text}");
    }
    if let Some(emitted) = &outcome.emitted {
        match &cli.output {
            Some(path) => {
                if let Err(e) = std::fs::write(path, emitted) {
                    eprintln!("cannot write output: {e}");
                    return 2;
                }
            }
            None => print!("{emitted}"),
        }
    }
    outcome.exit_code()
}

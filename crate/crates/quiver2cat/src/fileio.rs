//! The UTF-8 JSON presentation formats: bound 2-quiver documents, assembled
//! 2-category documents, ordered monoids and algebra presentations.
//! Rationals are serialized as `"num/den"` strings and paths in application
//! order (first applied first). Serialization is canonical: dump → parse →
//! dump is byte-identical.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cells::Cell;
use crate::constructions::{AlgebraPresentation, ConstructionError, OrderedMonoid, QuiverBundle};
use crate::exactlin::Rat;
use crate::pathcat::{PathVector, TwoCell, TwoPath};
use crate::quiver2::{EdgeIx, LicitPresentation, OneCell, QuiverError, TwoQuiver};
use crate::quotient::AdmissibleIdeal;
use crate::structure::{AdjunctionSpec, WeakInvolution};
use crate::twocat::{BasisCell, BasisIx, HomElt, PresCell, TwoCatPresentation};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("json parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid rational `{0}`")]
    BadRational(String),
    #[error("document error: {0}")]
    Document(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn parse_rational(s: &str) -> Result<Rat, FileError> {
    let bad = || FileError::BadRational(s.to_string());
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
        Some((a, b)) => {
            let n: BigInt = a.parse().map_err(|_| bad())?;
            let d: BigInt = b.parse().map_err(|_| bad())?;
            if d <= BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
    }
}

pub fn render_rational(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// ------------------------------------------------------------------
// document shapes
// ------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RewriteDoc {
    pub lhs: [String; 2],
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coefficient: String,
    /// 2-edges in application order (first applied first)
    pub path: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellDoc {
    pub src_components: Vec<String>,
    pub tgt_components: Vec<String>,
    /// entries[j][i] joins source component i to target component j
    pub entries: Vec<Vec<Vec<TermDoc>>>,
}

/// A bound 2-quiver document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDoc {
    pub kind: String, // "quiver"
    pub vertices: Vec<String>,
    pub one_edges: Vec<EdgeDoc>,
    pub stationary: BTreeMap<String, String>,
    pub one_rewrites: Vec<RewriteDoc>,
    pub two_edges: Vec<EdgeDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilpotency_degree: Option<usize>,
    pub admissible_generators: Vec<Vec<TermDoc>>,
    pub drop_lower: BTreeMap<String, BTreeMap<String, CellDoc>>,
    pub drop_upper: BTreeMap<String, BTreeMap<String, CellDoc>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffTermDoc {
    pub coefficient: String,
    pub cell: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub src: String,
    pub tgt: String,
    pub cells: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VcompDoc {
    pub later: String,
    pub first: String,
    pub value: Vec<CoeffTermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresCellDoc {
    pub src_components: Vec<String>,
    pub tgt_components: Vec<String>,
    pub entries: Vec<Vec<Vec<CoeffTermDoc>>>,
}

/// An assembled finitary 2-category document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoCategoryDoc {
    pub kind: String, // "two_category"
    pub vertices: Vec<String>,
    pub one_edges: Vec<EdgeDoc>,
    pub stationary: BTreeMap<String, String>,
    pub one_rewrites: Vec<RewriteDoc>,
    pub hom_basis: Vec<HomDoc>,
    pub identities: BTreeMap<String, String>,
    pub vertical: Vec<VcompDoc>,
    pub drop_lower: BTreeMap<String, BTreeMap<String, PresCellDoc>>,
    pub drop_upper: BTreeMap<String, BTreeMap<String, PresCellDoc>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidDoc {
    pub kind: String, // "monoid"
    pub elements: Vec<String>,
    pub unit: String,
    /// table[i][j] = name of the product elements[i] · elements[j]
    pub table: Vec<Vec<String>>,
    /// strict or non-strict related pairs [x, y] meaning x ≤ y; reflexive
    /// pairs are implied
    pub order: Vec<[String; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub kind: String, // "algebra"
    pub vertices: Vec<String>,
    pub arrows: Vec<EdgeDoc>,
    /// each relation: list of terms with arrow paths in application order
    pub relations: Vec<Vec<TermDoc>>,
    pub nilpotency_degree: usize,
}

/// Involution and adjunction data accompanying a quiver document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvolutionDoc {
    pub vertices: BTreeMap<String, String>,
    pub one_edges: BTreeMap<String, String>,
    pub two_edges: BTreeMap<String, Vec<TermDoc>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdjunctionDoc {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub unit: CellDoc,
    pub counit: CellDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiatDoc {
    pub kind: String, // "fiat"
    pub presentation: QuiverDoc,
    pub involution: InvolutionDoc,
    pub adjunctions: Vec<AdjunctionDoc>,
}

/// Any top-level document, distinguished by its `kind` field.
#[derive(Debug, Clone)]
pub enum Document {
    Quiver(QuiverDoc),
    TwoCategory(TwoCategoryDoc),
    Monoid(MonoidDoc),
    Algebra(AlgebraDoc),
    Fiat(FiatDoc),
}

pub fn parse_document(text: &str) -> Result<Document, FileError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| FileError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| FileError::Document("missing `kind` field".into()))?
        .to_string();
    let reparse = |e: serde_json::Error| FileError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    };
    match kind.as_str() {
        "quiver" => Ok(Document::Quiver(serde_json::from_value(value).map_err(reparse)?)),
        "two_category" => {
            Ok(Document::TwoCategory(serde_json::from_value(value).map_err(reparse)?))
        }
        "monoid" => Ok(Document::Monoid(serde_json::from_value(value).map_err(reparse)?)),
        "algebra" => Ok(Document::Algebra(serde_json::from_value(value).map_err(reparse)?)),
        "fiat" => Ok(Document::Fiat(serde_json::from_value(value).map_err(reparse)?)),
        other => Err(FileError::Document(format!("unknown document kind `{other}`"))),
    }
}

pub fn render_document(doc: &Document) -> String {
    let mut out = match doc {
        Document::Quiver(d) => serde_json::to_string_pretty(d),
        Document::TwoCategory(d) => serde_json::to_string_pretty(d),
        Document::Monoid(d) => serde_json::to_string_pretty(d),
        Document::Algebra(d) => serde_json::to_string_pretty(d),
        Document::Fiat(d) => serde_json::to_string_pretty(d),
    }
    .expect("document serialization");
    out.push('\n');
    out
}

// ------------------------------------------------------------------
// conversions: quiver documents
// ------------------------------------------------------------------

fn terms_to_vector(
    q: &TwoQuiver,
    terms: &[TermDoc],
    src: Option<EdgeIx>,
    tgt: Option<EdgeIx>,
) -> Result<PathVector, FileError> {
    let mut out: Option<PathVector> = None;
    for t in terms {
        let coeff = parse_rational(&t.coefficient)?;
        let edges: Result<Vec<_>, _> = t.path.iter().map(|n| q.two_edge_ix(n)).collect();
        let edges = edges?;
        let path = if edges.is_empty() {
            let (Some(s), Some(tt)) = (src, tgt) else {
                return Err(FileError::Document(
                    "stationary term without endpoint context".into(),
                ));
            };
            if s != tt {
                return Err(FileError::Document(
                    "stationary term between distinct 1-edges".into(),
                ));
            }
            TwoPath::stationary(s)
        } else {
            TwoPath::from_application_order(q, &edges).ok_or_else(|| {
                FileError::Document(format!(
                    "path {:?} does not chain",
                    t.path.clone()
                ))
            })?
        };
        if let (Some(s), Some(tt)) = (src, tgt) {
            if path.src != s || path.tgt != tt {
                return Err(FileError::Document(format!(
                    "path {:?} has wrong endpoints",
                    t.path.clone()
                )));
            }
        }
        match &mut out {
            None => out = Some(PathVector::single(path, coeff)),
            Some(v) => {
                if (v.src, v.tgt) != (path.src, path.tgt) {
                    return Err(FileError::Document("generator terms mix endpoints".into()));
                }
                v.add_term(path, coeff);
            }
        }
    }
    out.ok_or_else(|| FileError::Document("empty term list".into()))
}

fn vector_to_terms(q: &TwoQuiver, v: &PathVector) -> Vec<TermDoc> {
    v.terms
        .iter()
        .map(|(p, c)| TermDoc {
            coefficient: render_rational(c),
            path: p.application_order().iter().map(|&e| q.two_edge_name(e).to_string()).collect(),
        })
        .collect()
}

fn cell_from_doc(q: &TwoQuiver, licit: &LicitPresentation, doc: &CellDoc) -> Result<TwoCell, FileError> {
    let src_edges: Result<Vec<_>, _> = doc.src_components.iter().map(|n| q.edge_ix(n)).collect();
    let tgt_edges: Result<Vec<_>, _> = doc.tgt_components.iter().map(|n| q.edge_ix(n)).collect();
    let src_edges = src_edges?;
    let tgt_edges = tgt_edges?;
    let (src, tgt) = if src_edges.is_empty() || tgt_edges.is_empty() {
        // infer endpoints from whichever side is nonempty; a doubly empty
        // cell cannot be validated and is rejected
        let probe = src_edges.first().or(tgt_edges.first()).copied();
        match probe {
            None => {
                return Err(FileError::Document(
                    "cell with empty source and target components".into(),
                ))
            }
            Some(e) => {
                let sv = q.edge_src(e);
                let tv = q.edge_tgt(e);
                (
                    OneCell::from_edges(q, sv, tv, &src_edges)?,
                    OneCell::from_edges(q, sv, tv, &tgt_edges)?,
                )
            }
        }
    } else {
        let sv = q.edge_src(src_edges[0]);
        let tv = q.edge_tgt(src_edges[0]);
        (
            OneCell::from_edges(q, sv, tv, &src_edges)?,
            OneCell::from_edges(q, sv, tv, &tgt_edges)?,
        )
    };
    if doc.entries.len() != tgt.len() {
        return Err(FileError::Document("cell grid has the wrong number of rows".into()));
    }
    let mut entries = Vec::new();
    for (j, row) in doc.entries.iter().enumerate() {
        if row.len() != src.len() {
            return Err(FileError::Document("cell grid has a ragged row".into()));
        }
        for (i, terms) in row.iter().enumerate() {
            let s = src.comps[i];
            let t = tgt.comps[j];
            let v = if terms.is_empty() {
                PathVector::zero(s, t)
            } else {
                terms_to_vector(q, terms, Some(s), Some(t))?
            };
            entries.push(v);
        }
    }
    let _ = licit;
    Ok(Cell { src, tgt, entries })
}

fn cell_to_doc(q: &TwoQuiver, cell: &TwoCell) -> CellDoc {
    let mut entries = Vec::new();
    for j in 0..cell.tgt.len() {
        let mut row = Vec::new();
        for i in 0..cell.src.len() {
            row.push(vector_to_terms(q, cell.at(j, i)));
        }
        entries.push(row);
    }
    CellDoc {
        src_components: cell.src.comps.iter().map(|&e| q.edge_name(e).to_string()).collect(),
        tgt_components: cell.tgt.comps.iter().map(|&e| q.edge_name(e).to_string()).collect(),
        entries,
    }
}

/// Builds the internal bundle from a quiver document.
pub fn bundle_from_doc(doc: &QuiverDoc) -> Result<QuiverBundle, FileError> {
    if doc.kind != "quiver" {
        return Err(FileError::Document("expected a quiver document".into()));
    }
    let mut quiver = TwoQuiver::new();
    for v in &doc.vertices {
        quiver.add_vertex(v)?;
    }
    for e in &doc.one_edges {
        let s = quiver.vertex_ix(&e.src)?;
        let t = quiver.vertex_ix(&e.tgt)?;
        quiver.add_edge(&e.id, s, t)?;
    }
    for (v, e) in &doc.stationary {
        let vix = quiver.vertex_ix(v)?;
        let eix = quiver.edge_ix(e)?;
        quiver.set_stationary(vix, eix)?;
    }
    for e in &doc.two_edges {
        let s = quiver.edge_ix(&e.src)?;
        let t = quiver.edge_ix(&e.tgt)?;
        quiver.add_two_edge(&e.id, s, t)?;
    }
    let mut rewrites = BTreeMap::new();
    for r in &doc.one_rewrites {
        let p = quiver.edge_ix(&r.lhs[0])?;
        let qe = quiver.edge_ix(&r.lhs[1])?;
        let rhs: Result<Vec<_>, _> = r.rhs.iter().map(|n| quiver.edge_ix(n)).collect();
        rewrites.insert((p, qe), rhs?);
    }
    let (licit, _) = LicitPresentation::certify(quiver, rewrites)
        .map_err(|e| FileError::Document(format!("licit certification failed: {e}")))?;
    let q = licit.quiver();

    let ideal = match doc.nilpotency_degree {
        None => {
            if !doc.admissible_generators.is_empty() {
                return Err(FileError::Document(
                    "admissible generators require a nilpotency degree".into(),
                ));
            }
            None
        }
        Some(n) => {
            let mut gens = Vec::new();
            for terms in &doc.admissible_generators {
                gens.push(terms_to_vector(q, terms, None, None)?);
            }
            Some(AdmissibleIdeal::new(gens, n))
        }
    };

    let mut lower = BTreeMap::new();
    for (edge, cells) in &doc.drop_lower {
        let f = q.edge_ix(edge)?;
        for (two_edge, cdoc) in cells {
            let a = q.two_edge_ix(two_edge)?;
            lower.insert((f, a), cell_from_doc(q, &licit, cdoc)?);
        }
    }
    let mut upper = BTreeMap::new();
    for (edge, cells) in &doc.drop_upper {
        let f = q.edge_ix(edge)?;
        for (two_edge, cdoc) in cells {
            let a = q.two_edge_ix(two_edge)?;
            upper.insert((f, a), cell_from_doc(q, &licit, cdoc)?);
        }
    }

    Ok(QuiverBundle { name: "document".into(), licit, ideal, lower, upper })
}

/// Serializes a bundle as a quiver document in canonical form.
pub fn bundle_to_doc(bundle: &QuiverBundle) -> QuiverDoc {
    let q = bundle.licit.quiver();
    let vertices: Vec<String> = q.vertices().map(|v| q.vertex_name(v).to_string()).collect();
    let one_edges: Vec<EdgeDoc> = q
        .edges()
        .map(|e| EdgeDoc {
            id: q.edge_name(e).into(),
            src: q.vertex_name(q.edge_src(e)).into(),
            tgt: q.vertex_name(q.edge_tgt(e)).into(),
        })
        .collect();
    let stationary: BTreeMap<String, String> = q
        .stationary_map()
        .iter()
        .map(|(&v, &e)| (q.vertex_name(v).to_string(), q.edge_name(e).to_string()))
        .collect();
    let one_rewrites: Vec<RewriteDoc> = bundle
        .licit
        .rewrites()
        .iter()
        .map(|(&(p, r), target)| RewriteDoc {
            lhs: [q.edge_name(p).into(), q.edge_name(r).into()],
            rhs: target.iter().map(|&e| q.edge_name(e).to_string()).collect(),
        })
        .collect();
    let two_edges: Vec<EdgeDoc> = q
        .two_edges()
        .map(|a| EdgeDoc {
            id: q.two_edge_name(a).into(),
            src: q.edge_name(q.two_edge_src(a)).into(),
            tgt: q.edge_name(q.two_edge_tgt(a)).into(),
        })
        .collect();
    let (nilpotency_degree, admissible_generators) = match &bundle.ideal {
        None => (None, Vec::new()),
        Some(ideal) => (
            Some(ideal.nilpotency_degree),
            ideal.generators.iter().map(|g| vector_to_terms(q, g)).collect(),
        ),
    };
    let mut drop_lower: BTreeMap<String, BTreeMap<String, CellDoc>> = BTreeMap::new();
    for (&(f, a), cell) in &bundle.lower {
        drop_lower
            .entry(q.edge_name(f).into())
            .or_default()
            .insert(q.two_edge_name(a).into(), cell_to_doc(q, cell));
    }
    let mut drop_upper: BTreeMap<String, BTreeMap<String, CellDoc>> = BTreeMap::new();
    for (&(f, a), cell) in &bundle.upper {
        drop_upper
            .entry(q.edge_name(f).into())
            .or_default()
            .insert(q.two_edge_name(a).into(), cell_to_doc(q, cell));
    }
    QuiverDoc {
        kind: "quiver".into(),
        vertices,
        one_edges,
        stationary,
        one_rewrites,
        two_edges,
        nilpotency_degree,
        admissible_generators,
        drop_lower,
        drop_upper,
    }
}

// ------------------------------------------------------------------
// conversions: two-category documents
// ------------------------------------------------------------------

pub fn presentation_to_doc(pres: &TwoCatPresentation) -> TwoCategoryDoc {
    let q = pres.quiver();
    let elt_to_terms = |e: &HomElt| -> Vec<CoeffTermDoc> {
        e.terms
            .iter()
            .map(|(&b, c)| CoeffTermDoc {
                coefficient: render_rational(c),
                cell: pres.cell(b).name.clone(),
            })
            .collect()
    };
    let cell_to_doc = |cell: &PresCell| -> PresCellDoc {
        let mut entries = Vec::new();
        for j in 0..cell.tgt.len() {
            let mut row = Vec::new();
            for i in 0..cell.src.len() {
                row.push(elt_to_terms(cell.at(j, i)));
            }
            entries.push(row);
        }
        PresCellDoc {
            src_components: cell.src.comps.iter().map(|&e| q.edge_name(e).to_string()).collect(),
            tgt_components: cell.tgt.comps.iter().map(|&e| q.edge_name(e).to_string()).collect(),
            entries,
        }
    };
    TwoCategoryDoc {
        kind: "two_category".into(),
        vertices: q.vertices().map(|v| q.vertex_name(v).to_string()).collect(),
        one_edges: q
            .edges()
            .map(|e| EdgeDoc {
                id: q.edge_name(e).into(),
                src: q.vertex_name(q.edge_src(e)).into(),
                tgt: q.vertex_name(q.edge_tgt(e)).into(),
            })
            .collect(),
        stationary: q
            .stationary_map()
            .iter()
            .map(|(&v, &e)| (q.vertex_name(v).to_string(), q.edge_name(e).to_string()))
            .collect(),
        one_rewrites: pres
            .licit
            .rewrites()
            .iter()
            .map(|(&(p, r), target)| RewriteDoc {
                lhs: [q.edge_name(p).into(), q.edge_name(r).into()],
                rhs: target.iter().map(|&e| q.edge_name(e).to_string()).collect(),
            })
            .collect(),
        hom_basis: pres
            .homs
            .iter()
            .map(|(&(f, g), list)| HomDoc {
                src: q.edge_name(f).into(),
                tgt: q.edge_name(g).into(),
                cells: list.iter().map(|&b| pres.cell(b).name.clone()).collect(),
            })
            .collect(),
        identities: pres
            .identities
            .iter()
            .map(|(&f, &b)| (q.edge_name(f).to_string(), pres.cell(b).name.clone()))
            .collect(),
        vertical: pres
            .vcomp
            .iter()
            .map(|(&(l, f), v)| VcompDoc {
                later: pres.cell(l).name.clone(),
                first: pres.cell(f).name.clone(),
                value: elt_to_terms(v),
            })
            .collect(),
        drop_lower: {
            let mut out: BTreeMap<String, BTreeMap<String, PresCellDoc>> = BTreeMap::new();
            for (&(f, b), cell) in &pres.lower {
                out.entry(q.edge_name(f).into())
                    .or_default()
                    .insert(pres.cell(b).name.clone(), cell_to_doc(cell));
            }
            out
        },
        drop_upper: {
            let mut out: BTreeMap<String, BTreeMap<String, PresCellDoc>> = BTreeMap::new();
            for (&(f, b), cell) in &pres.upper {
                out.entry(q.edge_name(f).into())
                    .or_default()
                    .insert(pres.cell(b).name.clone(), cell_to_doc(cell));
            }
            out
        },
    }
}

pub fn presentation_from_doc(doc: &TwoCategoryDoc) -> Result<TwoCatPresentation, FileError> {
    if doc.kind != "two_category" {
        return Err(FileError::Document("expected a two_category document".into()));
    }
    let mut quiver = TwoQuiver::new();
    for v in &doc.vertices {
        quiver.add_vertex(v)?;
    }
    for e in &doc.one_edges {
        let s = quiver.vertex_ix(&e.src)?;
        let t = quiver.vertex_ix(&e.tgt)?;
        quiver.add_edge(&e.id, s, t)?;
    }
    for (v, e) in &doc.stationary {
        let vix = quiver.vertex_ix(v)?;
        let eix = quiver.edge_ix(e)?;
        quiver.set_stationary(vix, eix)?;
    }
    let mut rewrites = BTreeMap::new();
    for r in &doc.one_rewrites {
        let p = quiver.edge_ix(&r.lhs[0])?;
        let qe = quiver.edge_ix(&r.lhs[1])?;
        let rhs: Result<Vec<_>, _> = r.rhs.iter().map(|n| quiver.edge_ix(n)).collect();
        rewrites.insert((p, qe), rhs?);
    }
    let (licit, _) = LicitPresentation::certify(quiver, rewrites)
        .map_err(|e| FileError::Document(format!("licit certification failed: {e}")))?;
    let q = licit.quiver();

    let mut cells: Vec<BasisCell> = Vec::new();
    let mut homs: BTreeMap<(EdgeIx, EdgeIx), Vec<BasisIx>> = BTreeMap::new();
    for h in &doc.hom_basis {
        let f = q.edge_ix(&h.src)?;
        let g = q.edge_ix(&h.tgt)?;
        let mut list = Vec::new();
        for name in &h.cells {
            let ix = BasisIx(cells.len() as u32);
            cells.push(BasisCell { name: name.clone(), src: f, tgt: g });
            list.push(ix);
        }
        homs.insert((f, g), list);
    }
    let cell_ix = |name: &str| -> Result<BasisIx, FileError> {
        cells
            .iter()
            .position(|c| c.name == name)
            .map(|i| BasisIx(i as u32))
            .ok_or_else(|| FileError::Document(format!("unknown basis cell `{name}`")))
    };
    let terms_to_elt = |terms: &[CoeffTermDoc], src: EdgeIx, tgt: EdgeIx| -> Result<HomElt, FileError> {
        let mut out = HomElt::zero(src, tgt);
        for t in terms {
            let b = cell_ix(&t.cell)?;
            out.add_term(b, parse_rational(&t.coefficient)?);
        }
        Ok(out)
    };
    let mut identities = BTreeMap::new();
    for (edge, cname) in &doc.identities {
        identities.insert(q.edge_ix(edge)?, cell_ix(cname)?);
    }
    let mut vcomp = BTreeMap::new();
    for vd in &doc.vertical {
        let l = cell_ix(&vd.later)?;
        let f = cell_ix(&vd.first)?;
        let src = cells[f.0 as usize].src;
        let tgt = cells[l.0 as usize].tgt;
        vcomp.insert((l, f), terms_to_elt(&vd.value, src, tgt)?);
    }
    let cell_from = |cdoc: &PresCellDoc| -> Result<PresCell, FileError> {
        let src_edges: Result<Vec<_>, _> =
            cdoc.src_components.iter().map(|n| q.edge_ix(n)).collect();
        let tgt_edges: Result<Vec<_>, _> =
            cdoc.tgt_components.iter().map(|n| q.edge_ix(n)).collect();
        let src_edges = src_edges?;
        let tgt_edges = tgt_edges?;
        let probe = src_edges.first().or(tgt_edges.first()).copied();
        let Some(e0) = probe else {
            return Err(FileError::Document("cell with no components".into()));
        };
        let sv = q.edge_src(e0);
        let tv = q.edge_tgt(e0);
        let src = OneCell::from_edges(q, sv, tv, &src_edges)?;
        let tgt = OneCell::from_edges(q, sv, tv, &tgt_edges)?;
        if cdoc.entries.len() != tgt.len() || cdoc.entries.iter().any(|r| r.len() != src.len()) {
            return Err(FileError::Document("cell grid shape mismatch".into()));
        }
        let mut entries = Vec::new();
        for (j, row) in cdoc.entries.iter().enumerate() {
            for (i, terms) in row.iter().enumerate() {
                entries.push(terms_to_elt(terms, src.comps[i], tgt.comps[j])?);
            }
        }
        Ok(Cell { src, tgt, entries })
    };
    let mut lower = BTreeMap::new();
    for (edge, m) in &doc.drop_lower {
        let f = q.edge_ix(edge)?;
        for (cname, cdoc) in m {
            lower.insert((f, cell_ix(cname)?), cell_from(cdoc)?);
        }
    }
    let mut upper = BTreeMap::new();
    for (edge, m) in &doc.drop_upper {
        let f = q.edge_ix(edge)?;
        for (cname, cdoc) in m {
            upper.insert((f, cell_ix(cname)?), cell_from(cdoc)?);
        }
    }
    let pres = TwoCatPresentation { licit, cells, homs, vcomp, identities, lower, upper };
    pres.validate().map_err(|e| FileError::Document(e.to_string()))?;
    Ok(pres)
}

// ------------------------------------------------------------------
// conversions: monoids, algebras, fiat data
// ------------------------------------------------------------------

pub fn monoid_from_doc(doc: &MonoidDoc) -> Result<OrderedMonoid, FileError> {
    if doc.kind != "monoid" {
        return Err(FileError::Document("expected a monoid document".into()));
    }
    let n = doc.elements.len();
    let index = |name: &str| -> Result<usize, FileError> {
        doc.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| FileError::Document(format!("unknown monoid element `{name}`")))
    };
    if doc.table.len() != n || doc.table.iter().any(|r| r.len() != n) {
        return Err(FileError::Document("monoid table shape mismatch".into()));
    }
    let mut table = vec![0usize; n * n];
    for (i, row) in doc.table.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            table[i * n + j] = index(v)?;
        }
    }
    let mut le = vec![false; n * n];
    for i in 0..n {
        le[i * n + i] = true;
    }
    for [x, y] in &doc.order {
        le[index(x)? * n + index(y)?] = true;
    }
    let m = OrderedMonoid { elements: doc.elements.clone(), unit: index(&doc.unit)?, table, le };
    m.validate()?;
    Ok(m)
}

pub fn monoid_to_doc(m: &OrderedMonoid) -> MonoidDoc {
    let n = m.len();
    MonoidDoc {
        kind: "monoid".into(),
        elements: m.elements.clone(),
        unit: m.elements[m.unit].clone(),
        table: (0..n)
            .map(|i| (0..n).map(|j| m.elements[m.mul(i, j)].clone()).collect())
            .collect(),
        order: {
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j && m.le(i, j) {
                        out.push([m.elements[i].clone(), m.elements[j].clone()]);
                    }
                }
            }
            out
        },
    }
}

pub fn algebra_from_doc(doc: &AlgebraDoc) -> Result<AlgebraPresentation, FileError> {
    if doc.kind != "algebra" {
        return Err(FileError::Document("expected an algebra document".into()));
    }
    let vindex = |name: &str| -> Result<usize, FileError> {
        doc.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| FileError::Document(format!("unknown vertex `{name}`")))
    };
    let mut arrows = Vec::new();
    for a in &doc.arrows {
        arrows.push((a.id.clone(), vindex(&a.src)?, vindex(&a.tgt)?));
    }
    let aindex = |name: &str| -> Result<usize, FileError> {
        arrows
            .iter()
            .position(|a| a.0 == name)
            .ok_or_else(|| FileError::Document(format!("unknown arrow `{name}`")))
    };
    let mut relations = Vec::new();
    for rel in &doc.relations {
        let mut terms = Vec::new();
        for t in rel {
            let coeff = parse_rational(&t.coefficient)?;
            let path: Result<Vec<usize>, FileError> =
                t.path.iter().map(|n| aindex(n)).collect();
            terms.push((coeff, path?));
        }
        relations.push(terms);
    }
    Ok(AlgebraPresentation {
        vertices: doc.vertices.clone(),
        arrows,
        relations,
        nilpotency_degree: doc.nilpotency_degree,
    })
}

pub fn involution_from_doc(
    licit: &LicitPresentation,
    doc: &InvolutionDoc,
) -> Result<WeakInvolution, FileError> {
    let q = licit.quiver();
    let mut vertex_map = BTreeMap::new();
    for (a, b) in &doc.vertices {
        vertex_map.insert(q.vertex_ix(a)?, q.vertex_ix(b)?);
    }
    let mut edge_map = BTreeMap::new();
    for (a, b) in &doc.one_edges {
        edge_map.insert(q.edge_ix(a)?, q.edge_ix(b)?);
    }
    let mut two_edge_map = BTreeMap::new();
    for (a, terms) in &doc.two_edges {
        let ix = q.two_edge_ix(a)?;
        let src_star = edge_map
            .get(&q.two_edge_tgt(ix))
            .copied()
            .ok_or_else(|| FileError::Document("involution misses a 1-edge image".into()))?;
        let tgt_star = edge_map
            .get(&q.two_edge_src(ix))
            .copied()
            .ok_or_else(|| FileError::Document("involution misses a 1-edge image".into()))?;
        two_edge_map.insert(ix, terms_to_vector(q, terms, Some(src_star), Some(tgt_star))?);
    }
    Ok(WeakInvolution { vertex_map, edge_map, two_edge_map })
}

pub fn adjunctions_from_doc(
    licit: &LicitPresentation,
    docs: &[AdjunctionDoc],
) -> Result<Vec<AdjunctionSpec>, FileError> {
    let q = licit.quiver();
    let mut out = Vec::new();
    for d in docs {
        let left_edges: Result<Vec<_>, _> = d.left.iter().map(|n| q.edge_ix(n)).collect();
        let right_edges: Result<Vec<_>, _> = d.right.iter().map(|n| q.edge_ix(n)).collect();
        let left_edges = left_edges?;
        let right_edges = right_edges?;
        let le = *left_edges
            .first()
            .ok_or_else(|| FileError::Document("empty left adjoint".into()))?;
        let left = OneCell::from_edges(q, q.edge_src(le), q.edge_tgt(le), &left_edges)?;
        let re = *right_edges
            .first()
            .ok_or_else(|| FileError::Document("empty right adjoint".into()))?;
        let right = OneCell::from_edges(q, q.edge_src(re), q.edge_tgt(re), &right_edges)?;
        out.push(AdjunctionSpec {
            left,
            right,
            unit: cell_from_doc(q, licit, &d.unit)?,
            counit: cell_from_doc(q, licit, &d.counit)?,
        });
    }
    Ok(out)
}

pub fn involution_to_doc(licit: &LicitPresentation, inv: &WeakInvolution) -> InvolutionDoc {
    let q = licit.quiver();
    InvolutionDoc {
        vertices: inv
            .vertex_map
            .iter()
            .map(|(&a, &b)| (q.vertex_name(a).to_string(), q.vertex_name(b).to_string()))
            .collect(),
        one_edges: inv
            .edge_map
            .iter()
            .map(|(&a, &b)| (q.edge_name(a).to_string(), q.edge_name(b).to_string()))
            .collect(),
        two_edges: inv
            .two_edge_map
            .iter()
            .map(|(&a, v)| (q.two_edge_name(a).to_string(), vector_to_terms(q, v)))
            .collect(),
    }
}

pub fn adjunctions_to_doc(
    licit: &LicitPresentation,
    specs: &[AdjunctionSpec],
) -> Vec<AdjunctionDoc> {
    let q = licit.quiver();
    specs
        .iter()
        .map(|s| AdjunctionDoc {
            left: s.left.comps.iter().map(|&e| q.edge_name(e).to_string()).collect(),
            right: s.right.comps.iter().map(|&e| q.edge_name(e).to_string()).collect(),
            unit: cell_to_doc(q, &s.unit),
            counit: cell_to_doc(q, &s.counit),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fixtures;

    #[test]
    fn rational_round_trip() {
        for s in ["0", "1", "-3", "2/3", "-7/2"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(render_rational(&r), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn m_bundle_document_round_trips_byte_identically() {
        let bundle = fixtures::fixture_m().unwrap();
        let doc = bundle_to_doc(&bundle);
        let text = render_document(&Document::Quiver(doc.clone()));
        let parsed = parse_document(&text).unwrap();
        let Document::Quiver(doc2) = parsed else { panic!("kind") };
        let bundle2 = bundle_from_doc(&doc2).unwrap();
        let text2 = render_document(&Document::Quiver(bundle_to_doc(&bundle2)));
        assert_eq!(text, text2);
    }

    #[test]
    fn two_category_document_round_trips() {
        let bundle = fixtures::fixture_m().unwrap();
        let cat = bundle.build().unwrap();
        let pres = crate::twocat::build_two_category(&cat).unwrap();
        let doc = presentation_to_doc(&pres);
        let text = render_document(&Document::TwoCategory(doc.clone()));
        let Document::TwoCategory(doc2) = parse_document(&text).unwrap() else {
            panic!("kind")
        };
        let pres2 = presentation_from_doc(&doc2).unwrap();
        let text2 = render_document(&Document::TwoCategory(presentation_to_doc(&pres2)));
        assert_eq!(text, text2);
    }

    #[test]
    fn parse_error_carries_position() {
        match parse_document("{ not json") {
            Err(FileError::Parse { line, column, .. }) => {
                assert!(line >= 1 && column >= 1);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}

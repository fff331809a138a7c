//! Vertical radicals, Gabriel 2-quiver extraction, and the round trip:
//! rebuilding a quiver 2-category from a finite presentation and comparing
//! the underlying 2-quivers.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::cells::{self, CalcError, Cell, TwoCalc};
use crate::constructions::{ConstructionError, QuiverBundle};
use crate::drop::verify_drop;
use crate::exactlin::{algebra_radical, kernel_basis, solve_exact, ExactLinError, Matrix, Rat, Span, StructureConstants};
use crate::pathcat::{enumerate_paths, PathVector, TwoCell, TwoPath};
use crate::quiver2::{EdgeIx, LicitPresentation, OneCell, QuiverError, TwoQuiver, VertexIx};
use crate::quotient::{build_quotient, AdmissibleIdeal};
use crate::report::Certification;
use crate::twocat::{build_two_category, verify_two_category, BasisIx, HomElt, TwoCatPresentation};

#[derive(Debug, Error)]
pub enum GabrielError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Calc(#[from] CalcError),
    #[error(transparent)]
    ExactLin(#[from] ExactLinError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("0-cells `{0}` and `{1}` are equivalent; the presentation is not reduced")]
    EquivalentZeroCells(String, String),
    #[error("1-cells `{0}` and `{1}` are isomorphic; the presentation is not reduced")]
    IsomorphicOneCells(String, String),
    #[error("field not split: End({0}) modulo its radical is not 1-dimensional")]
    FieldNotSplit(String),
    #[error("extraction failed: {0}")]
    Extraction(String),
}

/// Per-hom-pair radical data for one ordered pair of 0-cells.
#[derive(Debug, Clone, Default)]
pub struct VerticalRadical {
    /// per (F, G): echelon radical vectors in hom coordinates
    pub blocks: BTreeMap<(EdgeIx, EdgeIx), Vec<Vec<Rat>>>,
}

/// Assembles the hom algebra of all 2-cells between 1-cells `X → Y`,
/// computes its radical by the trace form, certifies it nilpotent with a
/// discrete quotient at the category level, and intersects it back into
/// the per-(F, G) blocks.
pub fn vertical_radical(
    pres: &TwoCatPresentation,
    x: VertexIx,
    y: VertexIx,
) -> Result<VerticalRadical, GabrielError> {
    let q = pres.quiver();
    let one_cells: Vec<EdgeIx> = q
        .edges()
        .filter(|&e| q.edge_src(e) == x && q.edge_tgt(e) == y)
        .collect();
    if one_cells.is_empty() {
        return Ok(VerticalRadical::default());
    }
    // global coordinates: concatenation of hom bases
    let mut offset: BTreeMap<(EdgeIx, EdgeIx), usize> = BTreeMap::new();
    let mut order: Vec<BasisIx> = Vec::new();
    for &f in &one_cells {
        for &g in &one_cells {
            offset.insert((f, g), order.len());
            order.extend(pres.hom(f, g).iter().copied());
        }
    }
    let dim = order.len();
    let pos_of: BTreeMap<BasisIx, usize> =
        order.iter().enumerate().map(|(i, &b)| (b, i)).collect();

    let mut sc = StructureConstants::new(dim);
    for (i, &bi) in order.iter().enumerate() {
        let ci = pres.cell(bi);
        for (j, &bj) in order.iter().enumerate() {
            // product b_i · b_j = b_i ∘ b_j (b_j first)
            if pres.cell(bj).tgt != ci.src {
                continue;
            }
            let val = &pres.vcomp[&(bi, bj)];
            for (&bk, c) in &val.terms {
                sc.set(i, j, pos_of[&bk], c.clone());
            }
        }
    }
    let mut unit = vec![Rat::zero(); dim];
    for &f in &one_cells {
        unit[pos_of[&pres.identities[&f]]] = Rat::one();
    }
    sc.unit = Some(unit);

    let result = algebra_radical(&sc, false)?;

    // project per block
    let mut blocks: BTreeMap<(EdgeIx, EdgeIx), Span> = BTreeMap::new();
    for &f in &one_cells {
        for &g in &one_cells {
            blocks.insert((f, g), Span::empty(pres.hom(f, g).len()));
        }
    }
    for v in &result.basis {
        for &f in &one_cells {
            for &g in &one_cells {
                let off = offset[&(f, g)];
                let len = pres.hom(f, g).len();
                let part: Vec<Rat> = v[off..off + len].to_vec();
                if part.iter().any(|c| !c.is_zero()) {
                    blocks.get_mut(&(f, g)).unwrap().insert(&part);
                }
            }
        }
    }

    // discrete quotient at the category level
    for &f in &one_cells {
        for &g in &one_cells {
            let rad_dim = blocks[&(f, g)].rank();
            let hom_dim = pres.hom(f, g).len();
            if f == g {
                if rad_dim + 1 != hom_dim {
                    return Err(GabrielError::FieldNotSplit(q.edge_name(f).into()));
                }
            } else if rad_dim != hom_dim {
                return Err(GabrielError::IsomorphicOneCells(
                    q.edge_name(f).into(),
                    q.edge_name(g).into(),
                ));
            }
        }
    }

    Ok(VerticalRadical {
        blocks: blocks
            .into_iter()
            .map(|(k, s)| (k, s.basis.rows_iter().map(<[Rat]>::to_vec).collect()))
            .collect(),
    })
}

/// Radical data for the whole presentation plus the square and the
/// nilpotency index of the radical.
#[derive(Debug, Clone)]
pub struct RadicalAnalysis {
    pub rad: BTreeMap<(EdgeIx, EdgeIx), Vec<Vec<Rat>>>,
    pub rad_square: BTreeMap<(EdgeIx, EdgeIx), Vec<Vec<Rat>>>,
    pub nilpotency: usize,
}

fn hom_elt(pres: &TwoCatPresentation, f: EdgeIx, g: EdgeIx, coords: &[Rat]) -> HomElt {
    let mut out = HomElt::zero(f, g);
    for (i, &b) in pres.hom(f, g).iter().enumerate() {
        if !coords[i].is_zero() {
            out.add_term(b, coords[i].clone());
        }
    }
    out
}

fn coords_of(pres: &TwoCatPresentation, e: &HomElt) -> Vec<Rat> {
    let list = pres.hom(e.src, e.tgt);
    list.iter()
        .map(|b| e.terms.get(b).cloned().unwrap_or_else(Rat::zero))
        .collect()
}

pub fn radical_analysis(pres: &TwoCatPresentation) -> Result<RadicalAnalysis, GabrielError> {
    let q = pres.quiver();
    let mut rad: BTreeMap<(EdgeIx, EdgeIx), Vec<Vec<Rat>>> = BTreeMap::new();
    for x in q.vertices() {
        for y in q.vertices() {
            let vr = vertical_radical(pres, x, y)?;
            rad.extend(vr.blocks);
        }
    }
    let calc = pres.calc();
    // powers of the radical until they vanish
    let compose_blocks =
        |a: &BTreeMap<(EdgeIx, EdgeIx), Vec<Vec<Rat>>>,
         b: &BTreeMap<(EdgeIx, EdgeIx), Vec<Vec<Rat>>>|
         -> Result<BTreeMap<(EdgeIx, EdgeIx), Vec<Vec<Rat>>>, GabrielError> {
            let mut spans: BTreeMap<(EdgeIx, EdgeIx), Span> = BTreeMap::new();
            for (&(f, g), vs) in b {
                for (&(g2, h), ws) in a {
                    if g2 != g {
                        continue;
                    }
                    for v in vs {
                        for w in ws {
                            let ve = hom_elt(pres, f, g, v);
                            let we = hom_elt(pres, g, h, w);
                            let prod = calc.compose(&we, &ve)?;
                            if prod.is_zero() {
                                continue;
                            }
                            let coords = coords_of(pres, &prod);
                            spans
                                .entry((f, h))
                                .or_insert_with(|| Span::empty(pres.hom(f, h).len()))
                                .insert(&coords);
                        }
                    }
                }
            }
            Ok(spans
                .into_iter()
                .filter(|(_, s)| s.rank() > 0)
                .map(|(k, s)| (k, s.basis.rows_iter().map(<[Rat]>::to_vec).collect()))
                .collect())
        };

    let rad_square = compose_blocks(&rad, &rad)?;
    let mut power = rad.clone();
    let mut nilpotency = 1;
    while !power.is_empty() {
        nilpotency += 1;
        power = compose_blocks(&rad, &power)?;
        if nilpotency > pres.cells.len() + 2 {
            return Err(GabrielError::Extraction("radical does not nilpotate".into()));
        }
    }
    Ok(RadicalAnalysis { rad, rad_square, nilpotency })
}

/// The result of a Gabriel extraction: the reduced bound 2-quiver with its
/// licit table, admissible generators and drop tables, the chosen radical
/// lifts, and the certification of the rebuilt category.
#[derive(Debug)]
pub struct GabrielResult {
    pub bundle: QuiverBundle,
    /// hom coordinates (in the source presentation) of each lifted 2-edge
    pub lifts: BTreeMap<String, (String, String, Vec<Rat>)>,
    pub nilpotency: usize,
    pub rebuilt_certification: Certification,
}

/// Extracts the Gabriel 2-quiver of a finitary presentation: vertices are
/// the 0-cells (equivalent pairs are an error), 1-edges the indecomposable
/// 1-cells, 2-edge counts the dimensions of Rad/Rad² per pair with first
/// echelon representatives as lifts, the licit table copied, admissible
/// generators the kernel of the path evaluation, and drop tables obtained
/// by evaluating the lifts against every 1-cell.
pub fn gabriel_quiver(pres: &TwoCatPresentation) -> Result<GabrielResult, GabrielError> {
    let q = pres.quiver();
    // 0-cell equivalence guard (needs identity 1-cells to talk about I)
    for x in q.vertices() {
        for y in q.vertices() {
            if x >= y {
                continue;
            }
            let (Some(ix), Some(iy)) = (q.stationary_at(x), q.stationary_at(y)) else {
                continue;
            };
            for f in q.edges().filter(|&f| q.edge_src(f) == x && q.edge_tgt(f) == y) {
                for g in q.edges().filter(|&g| q.edge_src(g) == y && q.edge_tgt(g) == x) {
                    let gf = pres.licit.rewrite(g, f);
                    let fg = pres.licit.rewrite(f, g);
                    if gf == [ix] && fg == [iy] {
                        return Err(GabrielError::EquivalentZeroCells(
                            q.vertex_name(x).into(),
                            q.vertex_name(y).into(),
                        ));
                    }
                }
            }
        }
    }

    let analysis = radical_analysis(pres)?;
    let n = analysis.nilpotency.max(2);

    // lifts: extend the echelon basis of Rad² to one of Rad
    let mut lift_coords: BTreeMap<(EdgeIx, EdgeIx), Vec<Vec<Rat>>> = BTreeMap::new();
    for (&(f, g), rad_rows) in &analysis.rad {
        let dim = pres.hom(f, g).len();
        let mut span = match analysis.rad_square.get(&(f, g)) {
            Some(rows) => Span::from_rows(dim, rows),
            None => Span::empty(dim),
        };
        let mut lifts = Vec::new();
        for row in rad_rows {
            if span.insert(row) {
                lifts.push(row.clone());
            }
        }
        if !lifts.is_empty() {
            lift_coords.insert((f, g), lifts);
        }
    }

    // extracted quiver: same vertices, edges and stationarity
    let mut quiver2 = TwoQuiver::new();
    for v in q.vertices() {
        quiver2.add_vertex(q.vertex_name(v))?;
    }
    for e in q.edges() {
        quiver2.add_edge(q.edge_name(e), q.edge_src(e), q.edge_tgt(e))?;
    }
    for (&v, &e) in q.stationary_map() {
        quiver2.set_stationary(v, e)?;
    }
    let mut lift_values: BTreeMap<crate::quiver2::TwoEdgeIx, HomElt> = BTreeMap::new();
    let mut lifts_out = BTreeMap::new();
    for (&(f, g), lifts) in &lift_coords {
        for (k, coords) in lifts.iter().enumerate() {
            let name = format!("{}>{}#{}", q.edge_name(f), q.edge_name(g), k);
            let ix = quiver2.add_two_edge(&name, f, g)?;
            lift_values.insert(ix, hom_elt(pres, f, g, coords));
            lifts_out.insert(
                name,
                (q.edge_name(f).to_string(), q.edge_name(g).to_string(), coords.clone()),
            );
        }
    }
    let (licit2, _) = LicitPresentation::certify(quiver2, pres.licit.rewrites().clone())
        .map_err(|e| GabrielError::Extraction(format!("licit table did not recertify: {e}")))?;
    let q2 = licit2.quiver();

    // evaluation map on paths, pair by pair, degree by degree
    let calc = pres.calc();
    let eval_path = |p: &TwoPath| -> Result<HomElt, GabrielError> {
        let mut acc = pres.identity_elt(p.src);
        for &e in p.application_order().iter() {
            acc = calc.compose(&lift_values[&e], &acc)?;
        }
        Ok(acc)
    };
    let mut generators: Vec<PathVector> = Vec::new();
    for f in q2.edges() {
        for g in q2.edges() {
            if q2.edge_src(f) != q2.edge_src(g) || q2.edge_tgt(f) != q2.edge_tgt(g) {
                continue;
            }
            let paths = enumerate_paths(q2, f, g, n - 1);
            if paths.is_empty() {
                continue;
            }
            let hom_dim = pres.hom(f, g).len();
            let mut m = Matrix::zero(paths.len(), hom_dim);
            for (i, p) in paths.iter().enumerate() {
                let val = eval_path(p)?;
                for (j, c) in coords_of(pres, &val).into_iter().enumerate() {
                    *m.at_mut(i, j) = c;
                }
            }
            for ker in kernel_basis(&m.transpose()) {
                let mut gen = PathVector::zero(f, g);
                for (i, c) in ker.into_iter().enumerate() {
                    if !c.is_zero() {
                        gen.add_term(paths[i].clone(), c);
                    }
                }
                if !gen.is_zero() {
                    for p in gen.terms.keys() {
                        if p.len() < 2 {
                            return Err(GabrielError::Extraction(format!(
                                "kernel element has a degree-{} term",
                                p.len()
                            )));
                        }
                    }
                    generators.push(gen);
                }
            }
        }
    }
    // degree by degree: keep only kernel elements not already generated in
    // lower degrees
    generators.sort_by_key(|g| (g.max_len(), g.src, g.tgt));
    let mut minimal: Vec<PathVector> = Vec::new();
    for gen in generators {
        let current = build_quotient(&licit2, &AdmissibleIdeal::new(minimal.clone(), n))
            .map_err(|e| GabrielError::Extraction(format!("generator sweep failed: {e}")))?;
        if !current.reduce_vector(&gen).is_zero() {
            minimal.push(gen);
        }
    }
    let ideal = AdmissibleIdeal::new(minimal, n);

    // quotient of the extracted quiver, for canonical classes
    let quot2 = build_quotient(&licit2, &ideal)
        .map_err(|e| GabrielError::Extraction(format!("extracted ideal rejected: {e}")))?;

    // per-pair change of basis: canonical classes → hom coordinates
    let mut class_eval: BTreeMap<(EdgeIx, EdgeIx), Matrix> = BTreeMap::new();
    for (&(f, g), _) in quot2.pairs() {
        let classes = quot2.classes(f, g);
        let hom_dim = pres.hom(f, g).len();
        if classes.len() != hom_dim {
            return Err(GabrielError::Extraction(format!(
                "quotient dimension {} does not match hom dimension {} at ({}, {})",
                classes.len(),
                hom_dim,
                q2.edge_name(f),
                q2.edge_name(g)
            )));
        }
        let mut m = Matrix::zero(classes.len(), hom_dim);
        for (i, p) in classes.iter().enumerate() {
            let val = eval_path(p)?;
            for (j, c) in coords_of(pres, &val).into_iter().enumerate() {
                *m.at_mut(i, j) = c;
            }
        }
        class_eval.insert((f, g), m);
    }
    let to_path_vector = |e: &HomElt| -> Result<PathVector, GabrielError> {
        let m = class_eval.get(&(e.src, e.tgt)).ok_or_else(|| {
            GabrielError::Extraction("missing class evaluation for a pair".into())
        })?;
        let target = coords_of(pres, e);
        let coeffs = solve_exact(&m.transpose(), &target)
            .ok_or_else(|| GabrielError::Extraction("class evaluation not invertible".into()))?;
        let mut out = PathVector::zero(e.src, e.tgt);
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                out.add_term(quot2.classes(e.src, e.tgt)[i].clone(), c);
            }
        }
        Ok(out)
    };

    // drop tables by evaluating lifts against every 1-cell
    let mut lower = BTreeMap::new();
    let mut upper = BTreeMap::new();
    for fx in q2.edges() {
        if q2.is_stationary(fx) {
            continue; // determined entries
        }
        for (&a, val) in &lift_values {
            let a_src = q2.two_edge_src(a);
            let a_tgt = q2.two_edge_tgt(a);
            let base = Cell {
                src: OneCell::edge(q, a_src),
                tgt: OneCell::edge(q, a_tgt),
                entries: vec![val.clone()],
            };
            if q.edge_tgt(a_src) == q.edge_src(fx) {
                let out = cells::lower_cell(&calc, &OneCell::edge(q, fx), &base)?;
                let mut entries = Vec::with_capacity(out.entries.len());
                for e in &out.entries {
                    entries.push(to_path_vector(e)?);
                }
                lower.insert((fx, a), TwoCell { src: out.src, tgt: out.tgt, entries });
            }
            if q.edge_src(a_src) == q.edge_tgt(fx) {
                let out = cells::upper_cell(&calc, &OneCell::edge(q, fx), &base)?;
                let mut entries = Vec::with_capacity(out.entries.len());
                for e in &out.entries {
                    entries.push(to_path_vector(e)?);
                }
                upper.insert((fx, a), TwoCell { src: out.src, tgt: out.tgt, entries });
            }
        }
    }

    let bundle = QuiverBundle {
        name: "gabriel".into(),
        licit: licit2,
        ideal: Some(ideal),
        lower,
        upper,
    };

    // rebuild and certify
    let cat2 = bundle.build()?;
    let mut cert = verify_drop(&cat2)?;
    let pres2 = build_two_category(&cat2)
        .map_err(|e| GabrielError::Extraction(format!("rebuild failed: {e}")))?;
    cert.merge("rebuilt", verify_two_category(&pres2)?);
    if !cert.certified() {
        return Err(GabrielError::Extraction(format!(
            "rebuilt category failed verification: {:?}",
            cert.failures().collect::<Vec<_>>()
        )));
    }

    Ok(GabrielResult {
        bundle,
        lifts: lifts_out,
        nilpotency: n,
        rebuilt_certification: cert,
    })
}

/// Outcome of a round trip: explicit vertex and 1-edge bijections plus a
/// per-pair pairing of the original and extracted 2-edges, or a witness of
/// the first discrepancy.
#[derive(Debug)]
pub struct RoundTripReport {
    pub cert: Certification,
    pub vertex_pairs: Vec<(String, String)>,
    pub edge_pairs: Vec<(String, String)>,
    pub two_edge_pairs: Vec<(String, String)>,
}

impl RoundTripReport {
    pub fn isomorphic(&self) -> bool {
        self.cert.certified()
    }
}

/// Builds the quiver 2-category of a bundle, extracts its Gabriel 2-quiver,
/// and produces an explicit 2-quiver isomorphism (or a discrepancy
/// witness).
pub fn round_trip(bundle: &QuiverBundle) -> Result<RoundTripReport, GabrielError> {
    let cat = bundle.build()?;
    let pres = build_two_category(&cat)
        .map_err(|e| GabrielError::Extraction(format!("build failed: {e}")))?;
    let result = gabriel_quiver(&pres)?;
    let q1 = bundle.licit.quiver();
    let q2 = result.bundle.licit.quiver();
    let mut cert = Certification::new();
    let mut vertex_pairs = Vec::new();
    let mut edge_pairs = Vec::new();
    let mut two_edge_pairs = Vec::new();

    // vertices and 1-edges are preserved by construction; verify anyway
    let mut ok = q1.vertex_count() == q2.vertex_count();
    for v in q1.vertices() {
        if q2.vertex_ix(q1.vertex_name(v)).is_err() {
            ok = false;
        } else {
            vertex_pairs.push((q1.vertex_name(v).into(), q1.vertex_name(v).into()));
        }
    }
    cert.record(
        "round_trip.vertices",
        if ok { Ok(()) } else { Err("vertex sets differ".into()) },
    );
    let mut ok = q1.edge_count() == q2.edge_count();
    for e in q1.edges() {
        match q2.edge_ix(q1.edge_name(e)) {
            Ok(e2)
                if q2.vertex_name(q2.edge_src(e2)) == q1.vertex_name(q1.edge_src(e))
                    && q2.vertex_name(q2.edge_tgt(e2)) == q1.vertex_name(q1.edge_tgt(e))
                    && q1.is_stationary(e) == q2.is_stationary(e2) =>
            {
                edge_pairs.push((q1.edge_name(e).into(), q1.edge_name(e).into()));
            }
            _ => ok = false,
        }
    }
    cert.record(
        "round_trip.one_edges",
        if ok { Ok(()) } else { Err("1-edge data differs".into()) },
    );

    // licit tables agree
    let tables_equal = bundle
        .licit
        .rewrites()
        .iter()
        .all(|(&(p, r), target)| {
            let p2 = q2.edge_ix(q1.edge_name(p)).unwrap();
            let r2 = q2.edge_ix(q1.edge_name(r)).unwrap();
            let t2: Vec<String> = result.bundle.licit.rewrite(p2, r2)
                .iter()
                .map(|&e| q2.edge_name(e).to_string())
                .collect();
            let t1: Vec<String> = target.iter().map(|&e| q1.edge_name(e).to_string()).collect();
            t1 == t2
        });
    cert.record(
        "round_trip.licit_table",
        if tables_equal { Ok(()) } else { Err("binding tables differ".into()) },
    );

    // 2-edge counts per parallel pair
    let mut mismatches = Vec::new();
    for f in q1.edges() {
        for g in q1.edges() {
            if q1.edge_src(f) != q1.edge_src(g) || q1.edge_tgt(f) != q1.edge_tgt(g) {
                continue;
            }
            let orig: Vec<String> = q1
                .two_edges()
                .filter(|&a| q1.two_edge_src(a) == f && q1.two_edge_tgt(a) == g)
                .map(|a| q1.two_edge_name(a).to_string())
                .collect();
            let f2 = q2.edge_ix(q1.edge_name(f)).unwrap();
            let g2 = q2.edge_ix(q1.edge_name(g)).unwrap();
            let ext: Vec<String> = q2
                .two_edges()
                .filter(|&a| q2.two_edge_src(a) == f2 && q2.two_edge_tgt(a) == g2)
                .map(|a| q2.two_edge_name(a).to_string())
                .collect();
            if orig.len() == ext.len() {
                for (a, b) in orig.into_iter().zip(ext) {
                    two_edge_pairs.push((a, b));
                }
            } else {
                mismatches.push(format!(
                    "({}, {}): {} vs {}",
                    q1.edge_name(f),
                    q1.edge_name(g),
                    orig.len(),
                    ext.len()
                ));
            }
        }
    }
    cert.record(
        "round_trip.two_edge_counts",
        if mismatches.is_empty() { Ok(()) } else { Err(mismatches.join("; ")) },
    );

    Ok(RoundTripReport { cert, vertex_pairs, edge_pairs, two_edge_pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fixtures;
    use crate::constructions::projective::AlgebraPresentation;

    #[test]
    fn discrete_presentation_has_zero_radical() {
        let m = crate::constructions::OrderedMonoid {
            elements: vec!["1".into()],
            unit: 0,
            table: vec![0],
            le: vec![true],
        };
        let bundle = crate::constructions::monoid_two_category(&m).unwrap();
        let cat = bundle.build().unwrap();
        let pres = build_two_category(&cat).unwrap();
        let q = pres.quiver();
        let v = q.vertices().next().unwrap();
        let vr = vertical_radical(&pres, v, v).unwrap();
        assert!(vr.blocks.values().all(Vec::is_empty));
    }

    #[test]
    fn m_radical_is_the_positive_degree_span() {
        let bundle = fixtures::fixture_m().unwrap();
        let cat = bundle.build().unwrap();
        let pres = build_two_category(&cat).unwrap();
        let analysis = radical_analysis(&pres).unwrap();
        // per pair, the radical dimension equals the number of positive
        // classes
        let q = pres.quiver();
        for (&(f, g), rows) in &analysis.rad {
            let positive = cat
                .quot
                .classes(f, g)
                .iter()
                .filter(|c| !c.is_empty())
                .count();
            assert_eq!(rows.len(), positive, "({}, {})", q.edge_name(f), q.edge_name(g));
        }
        assert_eq!(analysis.nilpotency, 4);
    }

    #[test]
    fn gabriel_quiver_of_m_returns_the_original() {
        let bundle = fixtures::fixture_m().unwrap();
        let report = round_trip(&bundle).unwrap();
        assert!(report.isomorphic(), "{:?}", report.cert.failures().collect::<Vec<_>>());
        assert_eq!(report.two_edge_pairs.len(), 5);
    }

    #[test]
    fn gabriel_quiver_of_sa_a2_returns_the_square() {
        let bundle = fixtures::fixture_sa_a2().unwrap();
        let report = round_trip(&bundle).unwrap();
        assert!(report.isomorphic(), "{:?}", report.cert.failures().collect::<Vec<_>>());
        assert_eq!(report.two_edge_pairs.len(), 4);
    }

    #[test]
    fn cv_radical_contains_the_generators_but_not_identities() {
        let pres = fixtures::fixture_cv().unwrap();
        let q = pres.quiver();
        let v = q.vertices().next().unwrap();
        let vr = vertical_radical(&pres, v, v).unwrap();
        let p1 = q.edge_ix("P1").unwrap();
        let q1 = q.edge_ix("Q1").unwrap();
        // α_{11} spans Rad(P1, Q1)
        assert_eq!(vr.blocks[&(p1, q1)].len(), 1);
        // ι_{P1} is not radical: End(P1) has radical 0
        assert!(vr.blocks[&(p1, p1)].is_empty());
    }

    /// The extracted 2-edge counts of C_V: dim Rad/Rad² retains the
    /// β-generators, the γs and the ηs; the αs, δs and ζs are products.
    #[test]
    fn cv_gabriel_counts_follow_rad_mod_rad_square() {
        let pres = fixtures::fixture_cv().unwrap();
        let analysis = radical_analysis(&pres).unwrap();
        let q = pres.quiver();
        let e = |n: &str| q.edge_ix(n).unwrap();
        let dim_top = |f: &str, g: &str| -> usize {
            let key = (e(f), e(g));
            let rad = analysis.rad.get(&key).map_or(0, Vec::len);
            let rad2 = analysis.rad_square.get(&key).map_or(0, Vec::len);
            rad - rad2
        };
        // β_{ij} survive
        assert_eq!(dim_top("Q1", "P1"), 1);
        assert_eq!(dim_top("Q1", "P2"), 1);
        assert_eq!(dim_top("Q2", "P1"), 1);
        assert_eq!(dim_top("Q2", "P2"), 1);
        // γ_i and η_i survive
        assert_eq!(dim_top("P1", "V"), 1);
        assert_eq!(dim_top("P2", "V"), 1);
        assert_eq!(dim_top("V", "Q1"), 1);
        assert_eq!(dim_top("V", "Q2"), 1);
        // α, δ, ζ are radical squares
        assert_eq!(dim_top("P1", "Q1"), 0);
        assert_eq!(dim_top("Q1", "V"), 0);
        assert_eq!(dim_top("V", "P1"), 0);
        // total: eight 2-edges
        let total: usize = analysis
            .rad
            .iter()
            .map(|(&(f, g), rows)| {
                rows.len() - analysis.rad_square.get(&(f, g)).map_or(0, Vec::len)
            })
            .sum();
        assert_eq!(total, 8);
        assert_eq!(analysis.nilpotency, 4);
    }

    #[test]
    fn cv_extraction_rebuilds_and_certifies() {
        let pres = fixtures::fixture_cv().unwrap();
        let result = gabriel_quiver(&pres).unwrap();
        assert!(result.rebuilt_certification.certified());
        assert_eq!(result.bundle.licit.quiver().two_edge_count(), 8);
    }

    #[test]
    fn ca_a2_two_category_extracts_the_printed_quiver() {
        let pres =
            crate::constructions::projective_two_category(&AlgebraPresentation::a2()).unwrap();
        let result = gabriel_quiver(&pres).unwrap();
        let q2 = result.bundle.licit.quiver();
        assert_eq!(q2.edge_count(), 5);
        assert_eq!(q2.two_edge_count(), 5);
        let pair_count = |f: &str, g: &str| -> usize {
            let fe = q2.edge_ix(f).unwrap();
            let ge = q2.edge_ix(g).unwrap();
            q2.two_edges()
                .filter(|&a| q2.two_edge_src(a) == fe && q2.two_edge_tgt(a) == ge)
                .count()
        };
        assert_eq!(pair_count("Ffe", "Fee"), 1); // γ₁
        assert_eq!(pair_count("Ffe", "Fff"), 1); // γ₂
        assert_eq!(pair_count("Fee", "I"), 1); // β₁
        assert_eq!(pair_count("Fff", "I"), 1); // β₂
        assert_eq!(pair_count("I", "Fef"), 1); // α
        // one admissible generator: β₁∘γ₁ − β₂∘γ₂
        let ideal = result.bundle.ideal.as_ref().unwrap();
        assert_eq!(ideal.generators.len(), 1);
        let gen = &ideal.generators[0];
        assert_eq!(q2.edge_name(gen.src), "Ffe");
        assert_eq!(q2.edge_name(gen.tgt), "I");
        assert_eq!(gen.terms.len(), 2);
    }

    #[test]
    fn equivalent_one_cells_are_rejected() {
        // the point-algebra 2-category has I ≅ F_ee
        let k = AlgebraPresentation {
            vertices: vec!["e".into()],
            arrows: vec![],
            relations: vec![],
            nilpotency_degree: 2,
        };
        let pres = crate::constructions::projective_two_category(&k).unwrap();
        match gabriel_quiver(&pres) {
            Err(GabrielError::IsomorphicOneCells(_, _)) => {}
            other => panic!("expected isomorphic 1-cells, got {other:?}"),
        }
    }
}

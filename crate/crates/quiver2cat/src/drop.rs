//! Vertical drop tables: verification of their axioms, extension from
//! generator 2-edges to arbitrary cells, and the induced horizontal
//! composition.

use std::collections::BTreeMap;

use crate::cells::{self, CalcError};
use crate::pathcat::{enumerate_paths, PathCalc, PathVector, TwoCell, TwoPath};
use crate::quiver2::{EdgeIx, LicitPresentation, OneCell, TwoEdgeIx};
use crate::quotient::{AdmissibleIdeal, QuotientTable};
use crate::report::Certification;
use num_traits::One;

/// The maps `F_*` and `F^*` on generator 2-edges, stored as reduced cells
/// between the appropriate composite 1-cells. Entries for stationary
/// 1-edges and entries with a zero source and target are filled in
/// automatically.
#[derive(Debug, Clone)]
pub struct DropTable {
    lower: BTreeMap<(EdgeIx, TwoEdgeIx), TwoCell>,
    upper: BTreeMap<(EdgeIx, TwoEdgeIx), TwoCell>,
}

impl DropTable {
    /// Validates entry shapes against the licit composites, reduces every
    /// entry, and fills the determined entries (stationary 1-edges, zero
    /// composites).
    pub fn from_entries(
        licit: &LicitPresentation,
        quot: &QuotientTable,
        lower_in: BTreeMap<(EdgeIx, TwoEdgeIx), TwoCell>,
        upper_in: BTreeMap<(EdgeIx, TwoEdgeIx), TwoCell>,
    ) -> Result<DropTable, CalcError> {
        let q = licit.quiver();
        let mut lower = BTreeMap::new();
        let mut upper = BTreeMap::new();

        let expect_lower = |f: EdgeIx, a: TwoEdgeIx| -> Result<(OneCell, OneCell), CalcError> {
            let fc = OneCell::edge(q, f);
            let src = licit.compose_one_cells(&fc, &OneCell::edge(q, q.two_edge_src(a)))?;
            let tgt = licit.compose_one_cells(&fc, &OneCell::edge(q, q.two_edge_tgt(a)))?;
            Ok((src, tgt))
        };
        let expect_upper = |f: EdgeIx, a: TwoEdgeIx| -> Result<(OneCell, OneCell), CalcError> {
            let fc = OneCell::edge(q, f);
            let src = licit.compose_one_cells(&OneCell::edge(q, q.two_edge_src(a)), &fc)?;
            let tgt = licit.compose_one_cells(&OneCell::edge(q, q.two_edge_tgt(a)), &fc)?;
            Ok((src, tgt))
        };

        for ((f, a), cell) in lower_in {
            let (src, tgt) = expect_lower(f, a)?;
            if cell.src != src || cell.tgt != tgt {
                return Err(CalcError::Shape(format!(
                    "lower entry ({}, {}) has endpoints {} -> {}, expected {} -> {}",
                    q.edge_name(f),
                    q.two_edge_name(a),
                    cell.src.display(q),
                    cell.tgt.display(q),
                    src.display(q),
                    tgt.display(q),
                )));
            }
            lower.insert((f, a), quot.reduce(&cell));
        }
        for ((f, a), cell) in upper_in {
            let (src, tgt) = expect_upper(f, a)?;
            if cell.src != src || cell.tgt != tgt {
                return Err(CalcError::Shape(format!(
                    "upper entry ({}, {}) has endpoints {} -> {}, expected {} -> {}",
                    q.edge_name(f),
                    q.two_edge_name(a),
                    cell.src.display(q),
                    cell.tgt.display(q),
                    src.display(q),
                    tgt.display(q),
                )));
            }
            upper.insert((f, a), quot.reduce(&cell));
        }

        // determined entries
        for f in q.edges() {
            for a in q.two_edges() {
                let a_vertex_src = q.edge_src(q.two_edge_src(a));
                let a_vertex_tgt = q.edge_tgt(q.two_edge_src(a));
                // lower applies when the 2-edge's 1-cells target src(F)
                if a_vertex_tgt == q.edge_src(f) && !lower.contains_key(&(f, a)) {
                    if q.is_stationary(f) {
                        let cell = TwoCell {
                            src: OneCell::edge(q, q.two_edge_src(a)),
                            tgt: OneCell::edge(q, q.two_edge_tgt(a)),
                            entries: vec![PathVector::single(
                                TwoPath {
                                    src: q.two_edge_src(a),
                                    tgt: q.two_edge_tgt(a),
                                    edges: vec![a],
                                },
                                crate::exactlin::Rat::one(),
                            )],
                        };
                        lower.insert((f, a), quot.reduce(&cell));
                    } else {
                        let (src, tgt) = expect_lower(f, a)?;
                        if src.is_zero() || tgt.is_zero() {
                            lower.insert(
                                (f, a),
                                TwoCell { src, tgt, entries: Vec::new() },
                            );
                        }
                    }
                }
                // upper applies when the 2-edge's 1-cells start at tgt(F)
                if a_vertex_src == q.edge_tgt(f) && !upper.contains_key(&(f, a)) {
                    if q.is_stationary(f) {
                        let cell = TwoCell {
                            src: OneCell::edge(q, q.two_edge_src(a)),
                            tgt: OneCell::edge(q, q.two_edge_tgt(a)),
                            entries: vec![PathVector::single(
                                TwoPath {
                                    src: q.two_edge_src(a),
                                    tgt: q.two_edge_tgt(a),
                                    edges: vec![a],
                                },
                                crate::exactlin::Rat::one(),
                            )],
                        };
                        upper.insert((f, a), quot.reduce(&cell));
                    } else {
                        let (src, tgt) = expect_upper(f, a)?;
                        if src.is_zero() || tgt.is_zero() {
                            upper.insert(
                                (f, a),
                                TwoCell { src, tgt, entries: Vec::new() },
                            );
                        }
                    }
                }
            }
        }

        Ok(DropTable { lower, upper })
    }

    pub fn lower_entry(
        &self,
        licit: &LicitPresentation,
        f: EdgeIx,
        a: TwoEdgeIx,
    ) -> Result<&TwoCell, CalcError> {
        self.lower.get(&(f, a)).ok_or_else(|| CalcError::MissingDropEntry {
            edge: licit.quiver().edge_name(f).into(),
            two_edge: licit.quiver().two_edge_name(a).into(),
        })
    }

    pub fn upper_entry(
        &self,
        licit: &LicitPresentation,
        f: EdgeIx,
        a: TwoEdgeIx,
    ) -> Result<&TwoCell, CalcError> {
        self.upper.get(&(f, a)).ok_or_else(|| CalcError::MissingDropEntry {
            edge: licit.quiver().edge_name(f).into(),
            two_edge: licit.quiver().two_edge_name(a).into(),
        })
    }

    pub(crate) fn lower(
        &self,
        calc: &PathCalc<'_>,
        f: EdgeIx,
        a: TwoEdgeIx,
    ) -> Result<TwoCell, CalcError> {
        self.lower_entry(calc.licit, f, a).cloned()
    }

    pub(crate) fn upper(
        &self,
        calc: &PathCalc<'_>,
        f: EdgeIx,
        a: TwoEdgeIx,
    ) -> Result<TwoCell, CalcError> {
        self.upper_entry(calc.licit, f, a).cloned()
    }

    pub fn lower_entries(&self) -> impl Iterator<Item = (&(EdgeIx, TwoEdgeIx), &TwoCell)> {
        self.lower.iter()
    }

    pub fn upper_entries(&self) -> impl Iterator<Item = (&(EdgeIx, TwoEdgeIx), &TwoCell)> {
        self.upper.iter()
    }
}

/// A fully assembled quiver 2-category: certified licit presentation,
/// admissible ideal, quotient normal forms and a drop table.
#[derive(Debug, Clone)]
pub struct QuiverCategory {
    pub licit: LicitPresentation,
    pub ideal: AdmissibleIdeal,
    pub quot: QuotientTable,
    pub drop: DropTable,
}

impl QuiverCategory {
    pub fn calc(&self) -> PathCalc<'_> {
        PathCalc::full(&self.licit, &self.quot, &self.drop)
    }

    /// Reduced extension `f_*(c)`.
    pub fn extend_lower(&self, f: &OneCell, c: &TwoCell) -> Result<TwoCell, CalcError> {
        cells::lower_cell(&self.calc(), f, c)
    }

    /// Reduced extension `f^*(c)`.
    pub fn extend_upper(&self, f: &OneCell, c: &TwoCell) -> Result<TwoCell, CalcError> {
        cells::upper_cell(&self.calc(), f, c)
    }

    /// Reduced vertical composition.
    pub fn vcompose(&self, a: &TwoCell, b: &TwoCell) -> Result<TwoCell, CalcError> {
        cells::vcompose(&self.calc(), a, b)
    }

    pub fn identity(&self, f: &OneCell) -> TwoCell {
        cells::identity_cell(&self.calc(), f)
    }

    pub fn reduce(&self, c: &TwoCell) -> TwoCell {
        self.quot.reduce(c)
    }
}

/// Horizontal composition via the drop formulas. Both routes are computed;
/// disagreement (an uncertified or corrupted table) is an error.
pub fn horizontal_compose(
    cat: &QuiverCategory,
    a: &TwoCell,
    b: &TwoCell,
) -> Result<TwoCell, CalcError> {
    let calc = cat.calc();
    let (first, second) = cells::horizontal_both(&calc, a, b)?;
    if first != second {
        return Err(CalcError::HorizontalMismatch);
    }
    Ok(first)
}

/// Cap for the summand-relabeling searches in the verifier.
const COPY_BUDGET: usize = 100_000;

fn one_cell_pairs_for_lower(
    licit: &LicitPresentation,
    a: TwoEdgeIx,
) -> impl Iterator<Item = EdgeIx> + '_ {
    let q = licit.quiver();
    let v = q.edge_tgt(q.two_edge_src(a));
    q.edges().filter(move |&f| q.edge_src(f) == v)
}

/// Verifies a drop table against its quotient: Axioms V and VI pointwise on
/// generators, plus well-definedness (every ideal generator and every path
/// of the nilpotency length is sent into the ideal; extensions along the
/// two sides of every licit rewrite agree). Failures are report content,
/// not errors.
pub fn verify_drop(cat: &QuiverCategory) -> Result<Certification, CalcError> {
    let licit = &cat.licit;
    let q = licit.quiver();
    let quot = &cat.quot;
    let calc = cat.calc();
    let mut cert = Certification::new();

    // completeness
    let mut missing = Vec::new();
    for a in q.two_edges() {
        for f in one_cell_pairs_for_lower(licit, a) {
            if cat.drop.lower_entry(licit, f, a).is_err() {
                missing.push(format!("lower({}, {})", q.edge_name(f), q.two_edge_name(a)));
            }
        }
        let v_src = q.edge_src(q.two_edge_src(a));
        for f in q.edges().filter(|&f| q.edge_tgt(f) == v_src) {
            if cat.drop.upper_entry(licit, f, a).is_err() {
                missing.push(format!("upper({}, {})", q.edge_name(f), q.two_edge_name(a)));
            }
        }
    }
    if missing.is_empty() {
        cert.pass("drop.complete");
    } else {
        cert.fail("drop.complete", missing.join(", "));
        return Ok(cert); // nothing further can be evaluated
    }

    let edge_cell = |a: TwoEdgeIx| -> TwoCell {
        TwoCell {
            src: OneCell::edge(q, q.two_edge_src(a)),
            tgt: OneCell::edge(q, q.two_edge_tgt(a)),
            entries: vec![PathVector::single(
                TwoPath { src: q.two_edge_src(a), tgt: q.two_edge_tgt(a), edges: vec![a] },
                crate::exactlin::Rat::one(),
            )],
        }
    };

    // Axiom V: F_* G^* = G^* F_* on all generators with compatible types.
    // The two sides decompose the same triple composite along different
    // routes, so they are compared up to a relabeling of like summands.
    let mut v_fail = Vec::new();
    for a in q.two_edges() {
        let av_src = q.edge_src(q.two_edge_src(a));
        let av_tgt = q.edge_tgt(q.two_edge_src(a));
        for f in q.edges().filter(|&f| q.edge_src(f) == av_tgt) {
            for g in q.edges().filter(|&g| q.edge_tgt(g) == av_src) {
                let fc = OneCell::edge(q, f);
                let gc = OneCell::edge(q, g);
                let base = edge_cell(a);
                let lhs = cells::lower_cell(&calc, &fc, &cells::upper_cell(&calc, &gc, &base)?)?;
                let rhs = cells::upper_cell(&calc, &gc, &cells::lower_cell(&calc, &fc, &base)?)?;
                if !cells::cells_equal_up_to_copies(
                    &calc,
                    &quot.reduce(&lhs),
                    &quot.reduce(&rhs),
                    COPY_BUDGET,
                )? {
                    v_fail.push(format!(
                        "F={}, G={}, alpha={}",
                        q.edge_name(f),
                        q.edge_name(g),
                        q.two_edge_name(a)
                    ));
                }
            }
        }
    }
    if v_fail.is_empty() {
        cert.pass("drop.axiom_v");
    } else {
        cert.fail("drop.axiom_v", v_fail.join("; "));
    }

    // Axiom VI: both horizontal formulas agree on composable generator
    // pairs.
    let mut vi_fail = Vec::new();
    for a in q.two_edges() {
        let a_src_vertex = q.edge_src(q.two_edge_src(a));
        for b in q.two_edges() {
            if q.edge_tgt(q.two_edge_src(b)) != a_src_vertex {
                continue;
            }
            let ca = edge_cell(a);
            let cb = edge_cell(b);
            let (f1, f2) = cells::horizontal_both(&calc, &ca, &cb)?;
            if f1 != f2 {
                vi_fail.push(format!(
                    "alpha={}, beta={}",
                    q.two_edge_name(a),
                    q.two_edge_name(b)
                ));
            }
        }
    }
    if vi_fail.is_empty() {
        cert.pass("drop.axiom_vi");
    } else {
        cert.fail("drop.axiom_vi", vi_fail.join("; "));
    }

    // Well-definedness over the ideal generators.
    let mut ideal_fail = Vec::new();
    for (gi, gen) in cat.ideal.generators.iter().enumerate() {
        let gen_cell = TwoCell {
            src: OneCell::edge(q, gen.src),
            tgt: OneCell::edge(q, gen.tgt),
            entries: vec![gen.clone()],
        };
        let v_src = q.edge_src(gen.src);
        let v_tgt = q.edge_tgt(gen.src);
        for f in q.edges().filter(|&f| q.edge_src(f) == v_tgt) {
            let out = cells::lower_cell(&calc, &OneCell::edge(q, f), &gen_cell)?;
            if !cells::cell_is_zero(&calc, &quot.reduce(&out)) {
                ideal_fail.push(format!("lower({}, generator {})", q.edge_name(f), gi));
            }
        }
        for f in q.edges().filter(|&f| q.edge_tgt(f) == v_src) {
            let out = cells::upper_cell(&calc, &OneCell::edge(q, f), &gen_cell)?;
            if !cells::cell_is_zero(&calc, &quot.reduce(&out)) {
                ideal_fail.push(format!("upper({}, generator {})", q.edge_name(f), gi));
            }
        }
    }
    // Paths of the nilpotency length must also land in the ideal.
    let n = quot.nilpotency_degree;
    for src in q.edges() {
        for tgt in q.edges() {
            if q.edge_src(src) != q.edge_src(tgt) || q.edge_tgt(src) != q.edge_tgt(tgt) {
                continue;
            }
            for p in enumerate_paths(q, src, tgt, n) {
                if p.len() != n {
                    continue;
                }
                let pv = PathVector::single(p.clone(), crate::exactlin::Rat::one());
                let pcell = TwoCell {
                    src: OneCell::edge(q, src),
                    tgt: OneCell::edge(q, tgt),
                    entries: vec![pv],
                };
                let v_tgt = q.edge_tgt(src);
                for f in q.edges().filter(|&f| q.edge_src(f) == v_tgt) {
                    let out = cells::lower_cell(&calc, &OneCell::edge(q, f), &pcell)?;
                    if !cells::cell_is_zero(&calc, &quot.reduce(&out)) {
                        ideal_fail.push(format!(
                            "lower({}, {}-path {})",
                            q.edge_name(f),
                            n,
                            p.display(q)
                        ));
                    }
                }
                let v_src = q.edge_src(src);
                for f in q.edges().filter(|&f| q.edge_tgt(f) == v_src) {
                    let out = cells::upper_cell(&calc, &OneCell::edge(q, f), &pcell)?;
                    if !cells::cell_is_zero(&calc, &quot.reduce(&out)) {
                        ideal_fail.push(format!(
                            "upper({}, {}-path {})",
                            q.edge_name(f),
                            n,
                            p.display(q)
                        ));
                    }
                }
            }
        }
    }
    if ideal_fail.is_empty() {
        cert.pass("drop.ideal_preserved");
    } else {
        cert.fail("drop.ideal_preserved", ideal_fail.join("; "));
    }

    // Licit transport: for every rewrite (p, q) → g and every generator,
    // the two extension routes agree.
    let mut transport_fail = Vec::new();
    for (&(p, qe), target) in licit.rewrites() {
        let pq_cell = OneCell::from_edges(q, q.edge_src(qe), q.edge_tgt(p), target)
            .expect("rewrite endpoints");
        for a in q.two_edges() {
            let base = edge_cell(a);
            // lower: (p ∘ q)_* = p_* q_*, up to summand relabeling
            if q.edge_tgt(q.two_edge_src(a)) == q.edge_src(qe) {
                let via_pair = cells::lower_cell(
                    &calc,
                    &OneCell::edge(q, p),
                    &cells::lower_cell(&calc, &OneCell::edge(q, qe), &base)?,
                )?;
                let via_normal = cells::lower_cell(&calc, &pq_cell, &base)?;
                if !cells::cells_equal_up_to_copies(
                    &calc,
                    &quot.reduce(&via_pair),
                    &quot.reduce(&via_normal),
                    COPY_BUDGET,
                )? {
                    transport_fail.push(format!(
                        "lower ({} ∘ {}) on {}",
                        q.edge_name(p),
                        q.edge_name(qe),
                        q.two_edge_name(a)
                    ));
                }
            }
            // upper: (p ∘ q)^* = q^* p^*, up to summand relabeling
            if q.edge_src(q.two_edge_src(a)) == q.edge_tgt(p) {
                let via_pair = cells::upper_cell(
                    &calc,
                    &OneCell::edge(q, qe),
                    &cells::upper_cell(&calc, &OneCell::edge(q, p), &base)?,
                )?;
                let via_normal = cells::upper_cell(&calc, &pq_cell, &base)?;
                if !cells::cells_equal_up_to_copies(
                    &calc,
                    &quot.reduce(&via_pair),
                    &quot.reduce(&via_normal),
                    COPY_BUDGET,
                )? {
                    transport_fail.push(format!(
                        "upper ({} ∘ {}) on {}",
                        q.edge_name(p),
                        q.edge_name(qe),
                        q.two_edge_name(a)
                    ));
                }
            }
        }
    }
    if transport_fail.is_empty() {
        cert.pass("drop.licit_transport");
    } else {
        cert.fail("drop.licit_transport", transport_fail.join("; "));
    }

    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::Cell;
    use crate::constructions::fixtures;
    use crate::exactlin::rat_int;
    use crate::quotient::build_quotient;

    fn m_category() -> QuiverCategory {
        fixtures::fixture_m().unwrap().build().unwrap()
    }

    #[test]
    fn m_drop_table_is_certified() {
        let cat = m_category();
        let cert = verify_drop(&cat).unwrap();
        assert!(cert.certified(), "{:?}", cert.failures().collect::<Vec<_>>());
    }

    #[test]
    fn stationary_extension_is_identity() {
        let cat = m_category();
        let q = cat.licit.quiver();
        let i = OneCell::edge(q, q.edge_ix("I").unwrap());
        let alpha = q.two_edge_ix("alpha").unwrap();
        let base = TwoCell {
            src: OneCell::edge(q, q.two_edge_src(alpha)),
            tgt: OneCell::edge(q, q.two_edge_tgt(alpha)),
            entries: vec![PathVector::single(
                TwoPath {
                    src: q.two_edge_src(alpha),
                    tgt: q.two_edge_tgt(alpha),
                    edges: vec![alpha],
                },
                rat_int(1),
            )],
        };
        let out = cat.extend_lower(&i, &base).unwrap();
        assert_eq!(out, cat.reduce(&base));
        let out = cat.extend_upper(&i, &base).unwrap();
        assert_eq!(out, cat.reduce(&base));
    }

    #[test]
    fn lower_p_gamma_matches_the_table() {
        let cat = m_category();
        let q = cat.licit.quiver();
        let p = q.edge_ix("P").unwrap();
        let gamma = q.two_edge_ix("gamma").unwrap();
        let cell = cat.drop.lower_entry(&cat.licit, p, gamma).unwrap();
        // P_*(γ) = (ι_P, β̃) : P ⊕ Q → P
        assert_eq!(cell.src.comps.len(), 2);
        assert_eq!(cell.tgt.comps, vec![p]);
        let iota = PathVector::identity(p);
        assert_eq!(cell.at(0, 0), &iota);
        let betat = q.two_edge_ix("betat").unwrap();
        let qq = q.edge_ix("Q").unwrap();
        let bt = PathVector::single(
            TwoPath { src: qq, tgt: p, edges: vec![betat] },
            rat_int(1),
        );
        assert_eq!(cell.at(0, 1), &bt);
    }

    #[test]
    fn mutated_table_fails_axiom_vi_with_witness() {
        let fx = fixtures::fixture_m().unwrap();
        let quot = build_quotient(&fx.licit, fx.ideal.as_ref().unwrap()).unwrap();
        let q = fx.licit.quiver();
        let p = q.edge_ix("P").unwrap();
        let betat = q.two_edge_ix("betat").unwrap();
        let mut lower = fx.lower.clone();
        // flip one sign in P_*(β̃)
        let cell = lower.get_mut(&(p, betat)).unwrap();
        for e in &mut cell.entries {
            *e = e.neg();
        }
        let drop = DropTable::from_entries(&fx.licit, &quot, lower, fx.upper.clone()).unwrap();
        let cat = QuiverCategory { licit: fx.licit, ideal: fx.ideal.unwrap(), quot, drop };
        let cert = verify_drop(&cat).unwrap();
        assert!(!cert.certified());
        let failed: Vec<&str> =
            cert.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"drop.axiom_vi"), "failed: {failed:?}");
    }

    #[test]
    fn horizontal_identities_compose_to_identity() {
        let cat = m_category();
        let q = cat.licit.quiver();
        let v = q.vertex_ix("*").unwrap();
        let p = q.edge_ix("P").unwrap();
        let qq = q.edge_ix("Q").unwrap();
        let f = OneCell::from_edges(q, v, v, &[p]).unwrap();
        let g = OneCell::from_edges(q, v, v, &[p, qq]).unwrap();
        let fg = cat.licit.compose_one_cells(&f, &g).unwrap();
        let id_f = cat.identity(&f);
        let id_g = cat.identity(&g);
        let prod = horizontal_compose(&cat, &id_f, &id_g).unwrap();
        assert_eq!(prod, cat.identity(&fg));
    }

    #[test]
    fn empty_two_edge_set_is_vacuously_certified() {
        // one vertex, I only, no 2-edges
        use std::collections::BTreeMap as Map;
        let mut q = crate::quiver2::TwoQuiver::new();
        let v = q.add_vertex("*").unwrap();
        let i = q.add_edge("I", v, v).unwrap();
        q.set_stationary(v, i).unwrap();
        let mut rw = Map::new();
        rw.insert((i, i), vec![i]);
        let (licit, _) = LicitPresentation::certify(q, rw).unwrap();
        let ideal = AdmissibleIdeal::new(vec![], 2);
        let quot = build_quotient(&licit, &ideal).unwrap();
        let drop = DropTable::from_entries(&licit, &quot, Map::new(), Map::new()).unwrap();
        let cat = QuiverCategory { licit, ideal, quot, drop };
        let cert = verify_drop(&cat).unwrap();
        assert!(cert.certified());
    }

    #[test]
    fn adjunction_intermediate_value_is_identity_on_q() {
        // ε ι_Q ∘ ι_Q ξ = ι_Q, following the displayed computation.
        let cat = m_category();
        let q = cat.licit.quiver();
        let v = q.vertex_ix("*").unwrap();
        let p = q.edge_ix("P").unwrap();
        let qq = q.edge_ix("Q").unwrap();
        let i = q.edge_ix("I").unwrap();
        let icell = OneCell::edge(q, i);
        let qcell = OneCell::edge(q, qq);
        let pq = OneCell::from_edges(q, v, v, &[p, qq]).unwrap();
        let e2 = |n: &str| q.two_edge_ix(n).unwrap();
        let path = |edges: &[&str]| {
            let ixs: Vec<_> = edges.iter().map(|n| e2(n)).collect();
            PathVector::single(TwoPath::from_application_order(q, &ixs).unwrap(), rat_int(1))
        };
        // ξ : I → Q ⊕ P with rows (η ; β∘η), in the printed block order
        let qp = OneCell::from_edges(q, v, v, &[qq, p]).unwrap();
        let xi = Cell {
            src: icell.clone(),
            tgt: qp,
            entries: vec![path(&["eta"]), path(&["eta", "beta"])],
        };
        // ε : P ⊕ Q → I with columns (γ, −γ∘β)
        let eps = Cell {
            src: pq.clone(),
            tgt: icell.clone(),
            entries: vec![path(&["gamma"]), path(&["beta", "gamma"]).neg()],
        };
        let id_q = cat.identity(&qcell);
        let left = horizontal_compose(&cat, &eps, &id_q).unwrap();
        let right = horizontal_compose(&cat, &id_q, &xi).unwrap();
        let total = cat.vcompose(&left, &right).unwrap();
        assert_eq!(total, cat.identity(&qcell));
    }
}

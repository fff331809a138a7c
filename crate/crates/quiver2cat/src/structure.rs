//! Cell combinatorics, weak involutions, adjunction verification, and
//! fiatness reports.

use std::collections::BTreeMap;

use num_traits::One;
use thiserror::Error;

use crate::cells::CalcError;
use crate::drop::{horizontal_compose, QuiverCategory};
use crate::pathcat::{PathVector, TwoCell};
use crate::quiver2::{EdgeIx, OneCell, TwoEdgeIx, VertexIx};
use crate::report::Certification;
use crate::twocat::TwoCatPresentation;

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("involution is not total: missing image for {0}")]
    NotTotal(String),
    #[error(transparent)]
    Calc(#[from] CalcError),
    #[error("{0}")]
    Shape(String),
}

/// Left/right/two-sided preorders on indecomposable 1-cells and their
/// mutual-reachability classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPartition {
    pub names: Vec<String>,
    pub le_left: Vec<bool>,
    pub le_right: Vec<bool>,
    pub le_two: Vec<bool>,
    pub left_cells: Vec<Vec<usize>>,
    pub right_cells: Vec<Vec<usize>>,
    pub two_cells: Vec<Vec<usize>>,
}

impl CellPartition {
    pub fn left_cell_names(&self) -> Vec<Vec<String>> {
        self.left_cells
            .iter()
            .map(|c| c.iter().map(|&i| self.names[i].clone()).collect())
            .collect()
    }

    pub fn right_cell_names(&self) -> Vec<Vec<String>> {
        self.right_cells
            .iter()
            .map(|c| c.iter().map(|&i| self.names[i].clone()).collect())
            .collect()
    }

    pub fn two_cell_names(&self) -> Vec<Vec<String>> {
        self.two_cells
            .iter()
            .map(|c| c.iter().map(|&i| self.names[i].clone()).collect())
            .collect()
    }
}

fn transitive_closure(n: usize, rel: &mut [bool]) {
    for k in 0..n {
        for i in 0..n {
            if rel[i * n + k] {
                for j in 0..n {
                    if rel[k * n + j] {
                        rel[i * n + j] = true;
                    }
                }
            }
        }
    }
}

fn mutual_classes(n: usize, rel: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut class = Vec::new();
        for j in 0..n {
            if rel[i * n + j] && rel[j * n + i] {
                class.push(j);
                seen[j] = true;
            }
        }
        out.push(class);
    }
    out
}

/// Computes the left, right and two-sided cells from the licit 1-table:
/// `F ≤_L G` iff `F` occurs in some composite `H ∘ G`.
pub fn cells(pres: &TwoCatPresentation) -> CellPartition {
    let q = pres.quiver();
    let n = q.edge_count();
    let names: Vec<String> = q.edges().map(|e| q.edge_name(e).to_string()).collect();
    let mut le_left = vec![false; n * n];
    let mut le_right = vec![false; n * n];
    let mut le_two = vec![false; n * n];
    for i in 0..n {
        le_left[i * n + i] = true;
        le_right[i * n + i] = true;
        le_two[i * n + i] = true;
    }
    let edges: Vec<EdgeIx> = q.edges().collect();
    for (gi, &g) in edges.iter().enumerate() {
        for &h in &edges {
            if q.edge_tgt(g) == q.edge_src(h) {
                // H ∘ G
                for &f in pres.licit.rewrite(h, g) {
                    le_left[(f.0 as usize) * n + gi] = true;
                }
            }
            if q.edge_tgt(h) == q.edge_src(g) {
                // G ∘ H
                for &f in pres.licit.rewrite(g, h) {
                    le_right[(f.0 as usize) * n + gi] = true;
                }
            }
        }
        for &h in &edges {
            for &k in &edges {
                // H ∘ G ∘ K
                if q.edge_tgt(k) != q.edge_src(g) || q.edge_tgt(g) != q.edge_src(h) {
                    continue;
                }
                for &m in pres.licit.rewrite(g, k) {
                    for &f in pres.licit.rewrite(h, m) {
                        le_two[(f.0 as usize) * n + gi] = true;
                    }
                }
            }
        }
    }
    transitive_closure(n, &mut le_left);
    transitive_closure(n, &mut le_right);
    transitive_closure(n, &mut le_two);
    let left_cells = mutual_classes(n, &le_left);
    let right_cells = mutual_classes(n, &le_right);
    let two_cells = mutual_classes(n, &le_two);
    CellPartition { names, le_left, le_right, le_two, left_cells, right_cells, two_cells }
}

/// A weak involution candidate: order-2 maps on 0-cells and 1-edges plus a
/// linear assignment on generator 2-edges, extended contravariantly to path
/// classes.
#[derive(Debug, Clone)]
pub struct WeakInvolution {
    pub vertex_map: BTreeMap<VertexIx, VertexIx>,
    pub edge_map: BTreeMap<EdgeIx, EdgeIx>,
    pub two_edge_map: BTreeMap<TwoEdgeIx, PathVector>,
}

#[derive(Debug, Clone)]
pub struct InvolutionReport {
    pub cert: Certification,
    /// 1-edges fixed by the involution
    pub fixed_one_cells: Vec<String>,
    /// scope statement recorded with the report
    pub scope: String,
}

impl WeakInvolution {
    /// Contravariant linear extension to a path polynomial, reduced in the
    /// quotient.
    pub fn apply_vector(
        &self,
        cat: &QuiverCategory,
        v: &PathVector,
    ) -> Result<PathVector, StructureError> {
        let q = cat.licit.quiver();
        let src_star = *self
            .edge_map
            .get(&v.tgt)
            .ok_or_else(|| StructureError::NotTotal(q.edge_name(v.tgt).into()))?;
        let tgt_star = *self
            .edge_map
            .get(&v.src)
            .ok_or_else(|| StructureError::NotTotal(q.edge_name(v.src).into()))?;
        let mut out = PathVector::zero(src_star, tgt_star);
        for (path, coeff) in &v.terms {
            // ⋆(e_n ∘ … ∘ e_1) = ⋆(e_1) ∘ … ∘ ⋆(e_n)
            let mut acc: Option<PathVector> = None;
            for &e in path.application_order().iter().rev() {
                let img = self
                    .two_edge_map
                    .get(&e)
                    .ok_or_else(|| StructureError::NotTotal(q.two_edge_name(e).into()))?;
                acc = Some(match acc {
                    None => img.clone(),
                    Some(prev) => PathVector::compose(img, &prev),
                });
            }
            let term = match acc {
                None => PathVector::identity(src_star), // stationary path
                Some(x) => x,
            };
            out = out.add(&term.scale(coeff));
        }
        Ok(cat.quot.reduce_vector(&out))
    }
}

/// Verifies a weak involution: order 2 on 0- and 1-cells, contravariance
/// against the licit 1-table, well-definedness over the admissible ideal,
/// and order 2 on the canonical 2-cell classes. The generator assignments
/// are extended linearly and contravariantly; that scope is recorded in the
/// report.
pub fn check_involution(
    cat: &QuiverCategory,
    inv: &WeakInvolution,
) -> Result<InvolutionReport, StructureError> {
    let q = cat.licit.quiver();
    let mut cert = Certification::new();

    // totality
    for v in q.vertices() {
        if !inv.vertex_map.contains_key(&v) {
            return Err(StructureError::NotTotal(q.vertex_name(v).into()));
        }
    }
    for e in q.edges() {
        if !inv.edge_map.contains_key(&e) {
            return Err(StructureError::NotTotal(q.edge_name(e).into()));
        }
    }
    for a in q.two_edges() {
        if !inv.two_edge_map.contains_key(&a) {
            return Err(StructureError::NotTotal(q.two_edge_name(a).into()));
        }
    }

    // order 2 on 0- and 1-cells, and 1-edge endpoints reverse
    let mut fails = Vec::new();
    for v in q.vertices() {
        if inv.vertex_map[&inv.vertex_map[&v]] != v {
            fails.push(q.vertex_name(v).to_string());
        }
    }
    for e in q.edges() {
        if inv.edge_map[&inv.edge_map[&e]] != e {
            fails.push(q.edge_name(e).to_string());
        }
        let star = inv.edge_map[&e];
        if q.edge_src(star) != inv.vertex_map[&q.edge_tgt(e)]
            || q.edge_tgt(star) != inv.vertex_map[&q.edge_src(e)]
        {
            fails.push(format!("{} endpoints", q.edge_name(e)));
        }
    }
    cert.record(
        "involution.order_two_cells_01",
        if fails.is_empty() { Ok(()) } else { Err(fails.join(", ")) },
    );

    // contravariance on the 1-table: (F ∘ G)^⋆ = G^⋆ ∘ F^⋆ as multisets
    let mut fails = Vec::new();
    for (&(p, qe), target) in cat.licit.rewrites() {
        let lhs: Vec<EdgeIx> = target.iter().map(|&e| inv.edge_map[&e]).collect();
        let rhs = cat.licit.rewrite(inv.edge_map[&qe], inv.edge_map[&p]);
        if q.sorted_multiset(&lhs) != q.sorted_multiset(rhs) {
            fails.push(format!("({}, {})", q.edge_name(p), q.edge_name(qe)));
        }
    }
    cert.record(
        "involution.contravariant_on_1_table",
        if fails.is_empty() { Ok(()) } else { Err(fails.join(", ")) },
    );

    // 2-edge images must join the starred 1-cells
    let mut fails = Vec::new();
    for a in q.two_edges() {
        let img = &inv.two_edge_map[&a];
        let want_src = inv.edge_map[&q.two_edge_tgt(a)];
        let want_tgt = inv.edge_map[&q.two_edge_src(a)];
        if img.src != want_src || img.tgt != want_tgt {
            fails.push(q.two_edge_name(a).to_string());
        }
    }
    cert.record(
        "involution.two_cell_typing",
        if fails.is_empty() { Ok(()) } else { Err(fails.join(", ")) },
    );
    if !cert.certified() {
        return Ok(InvolutionReport {
            cert,
            fixed_one_cells: Vec::new(),
            scope: SCOPE_NOTE.into(),
        });
    }

    // well-definedness: the ideal is preserved
    let mut fails = Vec::new();
    for (gi, g) in cat.ideal.generators.iter().enumerate() {
        let img = inv.apply_vector(cat, g)?;
        if !img.is_zero() {
            fails.push(format!("generator {gi}"));
        }
    }
    cert.record(
        "involution.ideal_preserved",
        if fails.is_empty() { Ok(()) } else { Err(fails.join(", ")) },
    );

    // order 2 on canonical classes
    let mut fails = Vec::new();
    for (&(f, g), _) in cat.quot.pairs() {
        for class in cat.quot.classes(f, g) {
            let v = PathVector::single(class.clone(), crate::exactlin::Rat::one());
            let twice = inv.apply_vector(cat, &inv.apply_vector(cat, &v)?)?;
            if twice != cat.quot.reduce_vector(&v) {
                fails.push(format!(
                    "{} in hom({}, {})",
                    class.display(q),
                    q.edge_name(f),
                    q.edge_name(g)
                ));
            }
        }
    }
    cert.record(
        "involution.order_two_on_classes",
        if fails.is_empty() { Ok(()) } else { Err(fails.join(", ")) },
    );

    let fixed: Vec<String> = q
        .edges()
        .filter(|&e| inv.edge_map[&e] == e)
        .map(|e| q.edge_name(e).to_string())
        .collect();

    Ok(InvolutionReport { cert, fixed_one_cells: fixed, scope: SCOPE_NOTE.into() })
}

const SCOPE_NOTE: &str = "verified on the listed generator assignments extended linearly and \
                          contravariantly to path classes";

/// Adjunction data: a candidate unit `I → right ∘ left` and counit
/// `left ∘ right → I`.
#[derive(Debug, Clone)]
pub struct AdjunctionSpec {
    pub left: OneCell,
    pub right: OneCell,
    pub unit: TwoCell,
    pub counit: TwoCell,
}

#[derive(Debug, Clone)]
pub struct AdjunctionReport {
    pub cert: Certification,
    /// the two reduced triangle composites, keyed by identity name
    pub composites: Vec<(String, TwoCell)>,
}

/// Verifies the two triangle identities
/// `(ε ι_F) ∘ (ι_F ξ) = ι_F` and `(ι_G ε) ∘ (ξ ι_G) = ι_G`
/// using the drop-induced horizontal composition; equality is exact on
/// reduced forms.
pub fn check_adjunction(
    cat: &QuiverCategory,
    f: &OneCell,
    g: &OneCell,
    unit: &TwoCell,
    counit: &TwoCell,
) -> Result<AdjunctionReport, StructureError> {
    let q = cat.licit.quiver();
    let x = f.src;
    let y = f.tgt;
    if g.src != y || g.tgt != x {
        return Err(StructureError::Shape("right adjoint endpoints do not oppose".into()));
    }
    let ix = q
        .stationary_at(x)
        .ok_or_else(|| StructureError::Shape(format!("no identity 1-cell at {}", q.vertex_name(x))))?;
    let iy = q
        .stationary_at(y)
        .ok_or_else(|| StructureError::Shape(format!("no identity 1-cell at {}", q.vertex_name(y))))?;
    let gf = cat.licit.compose_one_cells(g, f).map_err(CalcError::from)?;
    let fg = cat.licit.compose_one_cells(f, g).map_err(CalcError::from)?;
    // unit and counit may carry their own summand order; they must agree
    // with the licit composites as multisets
    let same_sum = |a: &OneCell, b: &OneCell| {
        a.src == b.src && a.tgt == b.tgt
            && q.sorted_multiset(&a.comps) == q.sorted_multiset(&b.comps)
    };
    if unit.src != OneCell::edge(q, ix) || !same_sum(&unit.tgt, &gf) {
        return Err(StructureError::Shape("unit endpoints must be I → GF".into()));
    }
    if !same_sum(&counit.src, &fg) || counit.tgt != OneCell::edge(q, iy) {
        return Err(StructureError::Shape("counit endpoints must be FG → I".into()));
    }

    let mut cert = Certification::new();
    let mut composites = Vec::new();

    // (ε ι_F) ∘ (ι_F ξ) = ι_F
    let id_f = cat.identity(f);
    let left = horizontal_compose(cat, counit, &id_f)?;
    let right = horizontal_compose(cat, &id_f, unit)?;
    let tri_f = cat.vcompose(&left, &right)?;
    let name_f = format!("triangle_on_{}", f.display(q));
    if tri_f == cat.identity(f) {
        cert.pass(&name_f);
    } else {
        cert.fail(&name_f, "composite differs from the identity");
    }
    composites.push((name_f, tri_f));

    // (ι_G ε) ∘ (ξ ι_G) = ι_G
    let id_g = cat.identity(g);
    let left = horizontal_compose(cat, &id_g, counit)?;
    let right = horizontal_compose(cat, unit, &id_g)?;
    let tri_g = cat.vcompose(&left, &right)?;
    let name_g = format!("triangle_on_{}", g.display(q));
    if tri_g == cat.identity(g) {
        cert.pass(&name_g);
    } else {
        cert.fail(&name_g, "composite differs from the identity");
    }
    composites.push((name_g, tri_g));

    Ok(AdjunctionReport { cert, composites })
}

#[derive(Debug, Clone)]
pub struct FiatReport {
    pub cert: Certification,
    pub left_cells: Vec<Vec<String>>,
    /// per left cell, the ⋆-self-dual members
    pub self_dual_members: Vec<Vec<String>>,
}

/// Aggregates finitariness, the involution report, and per-pair (F, F^⋆)
/// adjunction checks; lists the ⋆-self-dual members of every left cell.
pub fn fiat_report(
    cat: &QuiverCategory,
    pres: &TwoCatPresentation,
    inv: &WeakInvolution,
    adjunctions: &[AdjunctionSpec],
) -> Result<FiatReport, StructureError> {
    let q = cat.licit.quiver();
    let mut cert = Certification::new();

    // finitary by construction: finite data, identities indecomposable
    let has_identities = q.stationary_map().len() == q.vertex_count();
    cert.record(
        "fiat.finitary",
        if has_identities {
            Ok(())
        } else {
            Err("missing identity 1-cells".into())
        },
    );

    let inv_report = check_involution(cat, inv)?;
    cert.merge("fiat.involution", inv_report.cert.clone());

    // every 1-edge needs certified adjunction data against its ⋆-image
    for e in q.edges() {
        let star = inv.edge_map[&e];
        let f_cell = OneCell::edge(q, e);
        let g_cell = OneCell::edge(q, star);
        let spec = adjunctions
            .iter()
            .find(|s| s.left == f_cell && s.right == g_cell);
        match spec {
            None => cert.fail(
                format!("fiat.adjunction_{}", q.edge_name(e)),
                format!("no adjunction data for ({}, {})", q.edge_name(e), q.edge_name(star)),
            ),
            Some(s) => {
                let rep = check_adjunction(cat, &s.left, &s.right, &s.unit, &s.counit)?;
                cert.merge(&format!("fiat.adjunction_{}", q.edge_name(e)), rep.cert);
            }
        }
    }

    let partition = cells(pres);
    let left_cells = partition.left_cell_names();
    let self_dual: Vec<Vec<String>> = left_cells
        .iter()
        .map(|cell| {
            cell.iter()
                .filter(|name| inv_report.fixed_one_cells.contains(name))
                .cloned()
                .collect()
        })
        .collect();

    Ok(FiatReport { cert, left_cells, self_dual_members: self_dual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fixtures;
    use crate::exactlin::rat_int;
    use crate::pathcat::TwoPath;
    use crate::twocat::build_two_category;

    fn m_setup() -> (QuiverCategory, TwoCatPresentation, WeakInvolution, Vec<AdjunctionSpec>) {
        let bundle = fixtures::fixture_m().unwrap();
        let cat = bundle.build().unwrap();
        let pres = build_two_category(&cat).unwrap();
        let (inv, adj) = fixtures::fixture_m_fiat(&cat.licit).unwrap();
        (cat, pres, inv, adj)
    }

    #[test]
    fn m_left_cells_are_i_and_pq() {
        let (_, pres, _, _) = m_setup();
        let partition = cells(&pres);
        let mut got = partition.left_cell_names();
        for c in &mut got {
            c.sort();
        }
        got.sort();
        assert_eq!(got, vec![vec!["I".to_string()], vec!["P".to_string(), "Q".to_string()]]);
    }

    #[test]
    fn discrete_category_has_singleton_cells() {
        let m = crate::constructions::OrderedMonoid {
            elements: vec!["1".into()],
            unit: 0,
            table: vec![0],
            le: vec![true],
        };
        let bundle = crate::constructions::monoid_two_category(&m).unwrap();
        let cat = bundle.build().unwrap();
        let pres = build_two_category(&cat).unwrap();
        let partition = cells(&pres);
        assert_eq!(partition.left_cells.len(), 1);
        assert_eq!(partition.left_cells[0].len(), 1);
    }

    #[test]
    fn m_involution_certifies_with_no_fixed_point_in_pq() {
        let (cat, _, inv, _) = m_setup();
        let report = check_involution(&cat, &inv).unwrap();
        assert!(report.cert.certified(), "{:?}", report.cert.failures().collect::<Vec<_>>());
        assert_eq!(report.fixed_one_cells, vec!["I".to_string()]);
    }

    #[test]
    fn mutated_involution_fails_order_two() {
        let (cat, _, mut inv, _) = m_setup();
        let q = cat.licit.quiver();
        let beta = q.two_edge_ix("beta").unwrap();
        let betat = q.two_edge_ix("betat").unwrap();
        let qq = q.edge_ix("Q").unwrap();
        let p = q.edge_ix("P").unwrap();
        // β ↦ β instead of β̃ (β̃ still maps to β)
        inv.two_edge_map.insert(
            beta,
            PathVector::single(TwoPath { src: qq, tgt: p, edges: vec![beta] }, rat_int(1)),
        );
        let _ = betat;
        let report = check_involution(&cat, &inv).unwrap();
        assert!(!report.cert.certified());
        let failed: Vec<&str> = report.cert.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"involution.order_two_on_classes"), "{failed:?}");
    }

    #[test]
    fn m_adjunctions_certify_all_four_triangles() {
        let (cat, _, _, adj) = m_setup();
        let mut triangles = 0;
        for spec in &adj[..2] {
            let rep = check_adjunction(&cat, &spec.left, &spec.right, &spec.unit, &spec.counit)
                .unwrap();
            assert!(rep.cert.certified(), "{:?}", rep.cert.failures().collect::<Vec<_>>());
            triangles += rep.composites.len();
        }
        assert_eq!(triangles, 4);
    }

    #[test]
    fn identity_adjunction_certifies() {
        let (cat, _, _, adj) = m_setup();
        let spec = &adj[2];
        let rep =
            check_adjunction(&cat, &spec.left, &spec.right, &spec.unit, &spec.counit).unwrap();
        assert!(rep.cert.certified());
    }

    #[test]
    fn sign_flipped_counit_fails_with_witness() {
        let (cat, _, _, adj) = m_setup();
        let spec = &adj[0];
        let mut bad = spec.counit.clone();
        for e in &mut bad.entries {
            *e = e.neg();
        }
        let rep = check_adjunction(&cat, &spec.left, &spec.right, &spec.unit, &bad).unwrap();
        assert!(!rep.cert.certified());
        // the residual composite is recorded as a witness
        assert!(rep.composites.iter().any(|(_, c)| c != &cat.identity(&spec.left)));
    }

    #[test]
    fn adjunction_check_is_symmetric_under_transposition() {
        let (cat, _, _, adj) = m_setup();
        let fwd = &adj[0];
        let bwd = &adj[1];
        let r1 = check_adjunction(&cat, &fwd.left, &fwd.right, &fwd.unit, &fwd.counit).unwrap();
        let r2 = check_adjunction(&cat, &bwd.left, &bwd.right, &bwd.unit, &bwd.counit).unwrap();
        assert!(r1.cert.certified() && r2.cert.certified());
    }

    #[test]
    fn m_is_fiat_and_pq_has_no_self_dual_member() {
        let (cat, pres, inv, adj) = m_setup();
        let report = fiat_report(&cat, &pres, &inv, &adj).unwrap();
        assert!(report.cert.certified(), "{:?}", report.cert.failures().collect::<Vec<_>>());
        for (cell, dual) in report.left_cells.iter().zip(&report.self_dual_members) {
            let mut sorted = cell.clone();
            sorted.sort();
            if sorted == vec!["P".to_string(), "Q".to_string()] {
                assert!(dual.is_empty(), "cell {{P, Q}} must have no self-dual member");
            }
        }
    }

    #[test]
    fn removing_adjunction_data_breaks_fiatness() {
        let (cat, pres, inv, adj) = m_setup();
        let trimmed: Vec<AdjunctionSpec> =
            adj.into_iter().filter(|s| s.left.comps != vec![cat.licit.quiver().edge_ix("P").unwrap()]).collect();
        let report = fiat_report(&cat, &pres, &inv, &trimmed).unwrap();
        assert!(!report.cert.certified());
    }

    #[test]
    fn partitions_refine_the_two_sided_one() {
        for pres in [
            {
                let cat = fixtures::fixture_m().unwrap().build().unwrap();
                build_two_category(&cat).unwrap()
            },
            fixtures::fixture_cv().unwrap(),
        ] {
            let part = cells(&pres);
            // every left cell and right cell sits inside one two-sided cell
            for cell in part.left_cells.iter().chain(&part.right_cells) {
                let holder: Vec<&Vec<usize>> = part
                    .two_cells
                    .iter()
                    .filter(|t| cell.iter().all(|m| t.contains(m)))
                    .collect();
                assert_eq!(holder.len(), 1, "cell {cell:?} split across two-sided cells");
            }
        }
    }

    #[test]
    fn cv_left_cells_from_the_table() {
        let pres = fixtures::fixture_cv().unwrap();
        let part = cells(&pres);
        let mut got = part.left_cell_names();
        for c in &mut got {
            c.sort();
        }
        got.sort();
        assert_eq!(
            got,
            vec![
                vec!["P1".to_string(), "Q1".to_string()],
                vec!["P2".to_string(), "Q2".to_string()],
                vec!["V".to_string()],
            ]
        );
    }

    #[test]
    fn involution_carries_left_cells_to_right_cells() {
        let (cat, pres, inv, _) = m_setup();
        let q = cat.licit.quiver();
        let part = cells(&pres);
        let right: Vec<Vec<String>> = {
            let mut r = part.right_cell_names();
            for c in &mut r {
                c.sort();
            }
            r
        };
        for cell in part.left_cell_names() {
            let mut image: Vec<String> = cell
                .iter()
                .map(|n| q.edge_name(inv.edge_map[&q.edge_ix(n).unwrap()]).to_string())
                .collect();
            image.sort();
            assert!(right.contains(&image), "⋆-image {image:?} is not a right cell");
        }
    }

    #[test]
    fn cell_partition_is_stable_under_relabeling() {
        // permute 1-cell names in the monoid C_3 category and compare
        // partition shapes
        let m = crate::constructions::catalan_monoid(3).unwrap();
        let bundle = crate::constructions::monoid_two_category(&m).unwrap();
        let cat = bundle.build().unwrap();
        let pres = build_two_category(&cat).unwrap();
        let part = cells(&pres);
        let shape = |p: &CellPartition| {
            let mut sizes: Vec<usize> = p.left_cells.iter().map(Vec::len).collect();
            sizes.sort_unstable();
            sizes
        };
        // relabeling: rebuild with permuted element names; the partition
        // must have the same shape
        let mut m2 = m.clone();
        m2.elements.rotate_left(2);
        // rotating names while keeping the table permutes the labels only
        let bundle2 = crate::constructions::monoid_two_category(&m2).unwrap();
        let cat2 = bundle2.build().unwrap();
        let pres2 = build_two_category(&cat2).unwrap();
        let part2 = cells(&pres2);
        assert_eq!(shape(&part), shape(&part2));
    }
}

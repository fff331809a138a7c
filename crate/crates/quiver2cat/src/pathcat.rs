//! The path 1½-category of a bound 2-quiver: 2-paths, matrices of path
//! polynomials, vertical composition, and the path-length gradation.

use std::collections::BTreeMap;

use crate::cells::{self, CalcError, Cell, TwoCalc};
use crate::drop::DropTable;
use crate::exactlin::Rat;
use crate::quiver2::{EdgeIx, LicitPresentation, OneCell, TwoEdgeIx, TwoQuiver};
use crate::quotient::QuotientTable;
use num_traits::Zero;

/// A sequence of vertically composable 2-edges, stored in composition order
/// (last applied first). The empty sequence is the stationary 2-path `ι_F`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoPath {
    pub src: EdgeIx,
    pub tgt: EdgeIx,
    /// composition order: `edges[0]` is applied last
    pub edges: Vec<TwoEdgeIx>,
}

impl TwoPath {
    pub fn stationary(f: EdgeIx) -> Self {
        TwoPath { src: f, tgt: f, edges: Vec::new() }
    }

    /// Builds a path from 2-edges listed in application order (first
    /// applied first), checking that consecutive edges chain up.
    pub fn from_application_order(q: &TwoQuiver, edges: &[TwoEdgeIx]) -> Option<Self> {
        let first = *edges.first()?;
        let mut cur = q.two_edge_src(first);
        let src = cur;
        for &e in edges {
            if q.two_edge_src(e) != cur {
                return None;
            }
            cur = q.two_edge_tgt(e);
        }
        let mut comp: Vec<TwoEdgeIx> = edges.to_vec();
        comp.reverse();
        Some(TwoPath { src, tgt: cur, edges: comp })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in application order (first applied first).
    pub fn application_order(&self) -> Vec<TwoEdgeIx> {
        let mut v = self.edges.clone();
        v.reverse();
        v
    }

    /// Concatenation `later ∘ first`.
    pub fn compose(later: &TwoPath, first: &TwoPath) -> Option<TwoPath> {
        if later.src != first.tgt {
            return None;
        }
        let mut edges = later.edges.clone();
        edges.extend_from_slice(&first.edges);
        Some(TwoPath { src: first.src, tgt: later.tgt, edges })
    }

    /// Total order by length, then lexicographically on the application
    /// order edge sequence. Canonical forms eliminate the largest paths.
    pub fn length_lex_key(&self) -> (usize, Vec<TwoEdgeIx>) {
        (self.len(), self.application_order())
    }

    pub fn display(&self, q: &TwoQuiver) -> String {
        if self.edges.is_empty() {
            format!("iota_{}", q.edge_name(self.src))
        } else {
            self.edges
                .iter()
                .map(|&e| q.two_edge_name(e).to_string())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A rational linear combination of parallel 2-paths. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathVector {
    pub src: EdgeIx,
    pub tgt: EdgeIx,
    pub terms: BTreeMap<TwoPath, Rat>,
}

impl PathVector {
    pub fn zero(src: EdgeIx, tgt: EdgeIx) -> Self {
        PathVector { src, tgt, terms: BTreeMap::new() }
    }

    pub fn single(path: TwoPath, coeff: Rat) -> Self {
        let mut v = PathVector::zero(path.src, path.tgt);
        if !coeff.is_zero() {
            v.terms.insert(path, coeff);
        }
        v
    }

    pub fn identity(f: EdgeIx) -> Self {
        PathVector::single(TwoPath::stationary(f), Rat::from_integer(1.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, path: TwoPath, coeff: Rat) {
        debug_assert_eq!((path.src, path.tgt), (self.src, self.tgt));
        let entry = self.terms.entry(path).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, c)| c.is_zero())
                .map(|(p, _)| p.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &PathVector) -> PathVector {
        debug_assert_eq!((self.src, self.tgt), (other.src, other.tgt));
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> PathVector {
        if k.is_zero() {
            return PathVector::zero(self.src, self.tgt);
        }
        PathVector {
            src: self.src,
            tgt: self.tgt,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * k)).collect(),
        }
    }

    pub fn neg(&self) -> PathVector {
        self.scale(&-Rat::from_integer(1.into()))
    }

    /// Bilinear extension of path concatenation: `later ∘ first`.
    pub fn compose(later: &PathVector, first: &PathVector) -> PathVector {
        let mut out = PathVector::zero(first.src, later.tgt);
        for (p, c) in &later.terms {
            for (q, d) in &first.terms {
                let path = TwoPath::compose(p, q).expect("parallel term endpoints");
                out.add_term(path, c * d);
            }
        }
        out
    }

    /// Splits into homogeneous parts by path length; the parts sum back to
    /// the input and empty buckets are omitted.
    pub fn degree_split(&self) -> BTreeMap<usize, PathVector> {
        let mut out: BTreeMap<usize, PathVector> = BTreeMap::new();
        for (p, c) in &self.terms {
            out.entry(p.len())
                .or_insert_with(|| PathVector::zero(self.src, self.tgt))
                .add_term(p.clone(), c.clone());
        }
        out
    }

    /// Membership in the edge ideal: the degree-0 part vanishes.
    pub fn in_edge_ideal(&self) -> bool {
        self.terms.keys().all(|p| p.len() >= 1)
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(TwoPath::len).max().unwrap_or(0)
    }

    pub fn display(&self, q: &TwoQuiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (p, c) in &self.terms {
            parts.push(format!("{} {}", c, p.display(q)));
        }
        parts.join(" + ")
    }
}

/// 2-cells of the path 1½-category: matrices of path polynomials.
pub type TwoCell = Cell<PathVector>;

/// The path-level scalar calculus. With `quot` present every product is
/// reduced to canonical form; with `drop` present the drop operators extend
/// to arbitrary cells.
#[derive(Clone, Copy)]
pub struct PathCalc<'a> {
    pub licit: &'a LicitPresentation,
    pub quot: Option<&'a QuotientTable>,
    pub drop: Option<&'a DropTable>,
}

impl<'a> PathCalc<'a> {
    pub fn raw(licit: &'a LicitPresentation) -> Self {
        PathCalc { licit, quot: None, drop: None }
    }

    pub fn reduced(licit: &'a LicitPresentation, quot: &'a QuotientTable) -> Self {
        PathCalc { licit, quot: Some(quot), drop: None }
    }

    pub fn full(
        licit: &'a LicitPresentation,
        quot: &'a QuotientTable,
        drop: &'a DropTable,
    ) -> Self {
        PathCalc { licit, quot: Some(quot), drop: Some(drop) }
    }

    fn reduce(&self, v: PathVector) -> PathVector {
        match self.quot {
            Some(t) => t.reduce_vector(&v),
            None => v,
        }
    }
}

impl<'a> TwoCalc for PathCalc<'a> {
    type S = PathVector;

    fn licit(&self) -> &LicitPresentation {
        self.licit
    }

    fn zero_scalar(&self, src: EdgeIx, tgt: EdgeIx) -> PathVector {
        PathVector::zero(src, tgt)
    }

    fn scalar_is_zero(&self, s: &PathVector) -> bool {
        s.is_zero()
    }

    fn add(&self, a: &PathVector, b: &PathVector) -> PathVector {
        a.add(b)
    }

    fn scale(&self, c: &Rat, s: &PathVector) -> PathVector {
        s.scale(c)
    }

    fn compose(&self, later: &PathVector, first: &PathVector) -> Result<PathVector, CalcError> {
        if later.src != first.tgt {
            return Err(CalcError::Shape("path vector composition endpoint mismatch".into()));
        }
        Ok(self.reduce(PathVector::compose(later, first)))
    }

    fn identity_scalar(&self, f: EdgeIx) -> PathVector {
        PathVector::identity(f)
    }

    fn lower_edge(
        &self,
        f: EdgeIx,
        s: &PathVector,
        src: EdgeIx,
        tgt: EdgeIx,
    ) -> Result<TwoCell, CalcError> {
        let table = self.drop.ok_or(CalcError::NoDropTable)?;
        let q = self.licit.quiver();
        let fcell = OneCell::edge(q, f);
        let src_cell = self.licit.compose_one_cells(&fcell, &OneCell::edge(q, src))?;
        let tgt_cell = self.licit.compose_one_cells(&fcell, &OneCell::edge(q, tgt))?;
        let mut acc = cells::zero_cell(self, &src_cell, &tgt_cell);
        for (path, coeff) in &s.terms {
            let cell = if path.is_empty() {
                cells::identity_cell(self, &src_cell)
            } else {
                let app = path.application_order();
                let mut chain: Vec<TwoCell> = Vec::with_capacity(app.len());
                // composition order for vcompose_chain: last applied first
                for &e in app.iter().rev() {
                    chain.push(table.lower(self, f, e)?);
                }
                cells::vcompose_chain(self, &chain)?
            };
            acc = cells::add_cells(self, &acc, &cells::scale_cell(self, coeff, &cell))?;
        }
        Ok(acc)
    }

    fn upper_edge(
        &self,
        f: EdgeIx,
        s: &PathVector,
        src: EdgeIx,
        tgt: EdgeIx,
    ) -> Result<TwoCell, CalcError> {
        let table = self.drop.ok_or(CalcError::NoDropTable)?;
        let q = self.licit.quiver();
        let fcell = OneCell::edge(q, f);
        let src_cell = self.licit.compose_one_cells(&OneCell::edge(q, src), &fcell)?;
        let tgt_cell = self.licit.compose_one_cells(&OneCell::edge(q, tgt), &fcell)?;
        let mut acc = cells::zero_cell(self, &src_cell, &tgt_cell);
        for (path, coeff) in &s.terms {
            let cell = if path.is_empty() {
                cells::identity_cell(self, &src_cell)
            } else {
                let app = path.application_order();
                let mut chain: Vec<TwoCell> = Vec::with_capacity(app.len());
                for &e in app.iter().rev() {
                    chain.push(table.upper(self, f, e)?);
                }
                cells::vcompose_chain(self, &chain)?
            };
            acc = cells::add_cells(self, &acc, &cells::scale_cell(self, coeff, &cell))?;
        }
        Ok(acc)
    }
}

/// Vertical composition of path-level 2-cells (no reduction): matrix
/// product whose scalar multiplication is path concatenation.
pub fn vertical_compose(
    licit: &LicitPresentation,
    a: &TwoCell,
    b: &TwoCell,
) -> Result<TwoCell, CalcError> {
    let calc = PathCalc::raw(licit);
    cells::vcompose(&calc, a, b)
}

/// The identity 2-cell of a 1-cell: a diagonal matrix of stationary paths.
pub fn identity_cell(licit: &LicitPresentation, f: &OneCell) -> TwoCell {
    let calc = PathCalc::raw(licit);
    cells::identity_cell(&calc, f)
}

/// All 2-paths from `src` to `tgt` of length at most `max_len`, in
/// deterministic order (by length, then lexicographically on the
/// application-order edge sequence).
pub fn enumerate_paths(q: &TwoQuiver, src: EdgeIx, tgt: EdgeIx, max_len: usize) -> Vec<TwoPath> {
    let mut out = Vec::new();
    // arrows out of each 1-edge, sorted for the lexicographic order
    let mut adj: Vec<Vec<TwoEdgeIx>> = vec![Vec::new(); q.edge_count()];
    for a in q.two_edges() {
        adj[q.two_edge_src(a).0 as usize].push(a);
    }
    for row in &mut adj {
        row.sort();
    }
    // iterative deepening keeps the output graded by length
    for len in 0..=max_len {
        let mut stack: Vec<(EdgeIx, Vec<TwoEdgeIx>)> = vec![(src, Vec::new())];
        let mut found: Vec<Vec<TwoEdgeIx>> = Vec::new();
        while let Some((at, prefix)) = stack.pop() {
            if prefix.len() == len {
                if at == tgt {
                    found.push(prefix);
                }
                continue;
            }
            // push in reverse so the lexicographically smallest pops first
            for &a in adj[at.0 as usize].iter().rev() {
                let mut next = prefix.clone();
                next.push(a);
                stack.push((q.two_edge_tgt(a), next));
            }
        }
        found.sort();
        for app in found {
            out.push(TwoPath::from_application_order(q, &app).unwrap_or_else(|| {
                debug_assert!(app.is_empty());
                TwoPath::stationary(src)
            }));
        }
    }
    out
}

/// See [`PathVector::degree_split`].
pub fn degree_split(v: &PathVector) -> BTreeMap<usize, PathVector> {
    v.degree_split()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat_int, Rat};
    use std::collections::BTreeMap as Map;

    /// The non-finitary one-vertex quiver: edges I, F with F² = I ⊕ F and
    /// 2-edges α: I → F, β: F → I.
    fn xquiver() -> LicitPresentation {
        let mut q = TwoQuiver::new();
        let v = q.add_vertex("X").unwrap();
        let i = q.add_edge("I", v, v).unwrap();
        let f = q.add_edge("F", v, v).unwrap();
        q.set_stationary(v, i).unwrap();
        q.add_two_edge("alpha", i, f).unwrap();
        q.add_two_edge("beta", f, i).unwrap();
        let mut rw = Map::new();
        rw.insert((i, i), vec![i]);
        rw.insert((i, f), vec![f]);
        rw.insert((f, i), vec![f]);
        rw.insert((f, f), vec![i, f]);
        LicitPresentation::certify(q, rw).unwrap().0
    }

    #[test]
    fn stationary_path_enumeration() {
        let lp = xquiver();
        let q = lp.quiver();
        let f = q.edge_ix("F").unwrap();
        let paths = enumerate_paths(q, f, f, 0);
        assert_eq!(paths, vec![TwoPath::stationary(f)]);
    }

    #[test]
    fn xquiver_paths_up_to_length_two() {
        let lp = xquiver();
        let q = lp.quiver();
        let i = q.edge_ix("I").unwrap();
        let alpha = q.two_edge_ix("alpha").unwrap();
        let beta = q.two_edge_ix("beta").unwrap();
        let paths = enumerate_paths(q, i, i, 2);
        // ι_I and β ∘ α
        assert_eq!(paths.len(), 2);
        assert_eq!(paths[0], TwoPath::stationary(i));
        assert_eq!(paths[1], TwoPath::from_application_order(q, &[alpha, beta]).unwrap());
    }

    #[test]
    fn vertical_composition_of_generators() {
        let lp = xquiver();
        let q = lp.quiver();
        let i = q.edge_ix("I").unwrap();
        let f = q.edge_ix("F").unwrap();
        let alpha = q.two_edge_ix("alpha").unwrap();
        let beta = q.two_edge_ix("beta").unwrap();
        let icell = OneCell::edge(q, i);
        let fcell = OneCell::edge(q, f);
        let pa = TwoPath::from_application_order(q, &[alpha]).unwrap();
        let pb = TwoPath::from_application_order(q, &[beta]).unwrap();
        let ca = Cell { src: icell.clone(), tgt: fcell.clone(), entries: vec![PathVector::single(pa.clone(), rat_int(1))] };
        let cb = Cell { src: fcell.clone(), tgt: icell.clone(), entries: vec![PathVector::single(pb.clone(), rat_int(1))] };
        // α ∘ β : F → F
        let ab = vertical_compose(&lp, &ca, &cb).unwrap();
        let expected = TwoPath::from_application_order(q, &[beta, alpha]).unwrap();
        assert_eq!(ab.entries[0].terms.keys().next().unwrap(), &expected);
        // β ∘ α : I → I appears in ι_I + 2 β∘α
        let ba = vertical_compose(&lp, &cb, &ca).unwrap();
        let ba_path = TwoPath::from_application_order(q, &[alpha, beta]).unwrap();
        let mut v = PathVector::identity(i);
        v.add_term(ba_path.clone(), rat_int(2));
        assert!(v.terms.contains_key(&ba_path));
        assert_eq!(ba.entries[0].terms.keys().next().unwrap(), &ba_path);
    }

    #[test]
    fn identity_cell_shapes() {
        let lp = xquiver();
        let q = lp.quiver();
        let v = q.vertex_ix("X").unwrap();
        let zero = OneCell::zero(v, v);
        let idz = identity_cell(&lp, &zero);
        assert_eq!(idz.entries.len(), 0);
        let f = q.edge_ix("F").unwrap();
        let fc = OneCell::edge(q, f);
        let idf = identity_cell(&lp, &fc);
        assert_eq!(idf.entries.len(), 1);
        assert_eq!(idf.entries[0], PathVector::identity(f));
    }

    #[test]
    fn identity_is_neutral_for_vertical_composition() {
        let lp = xquiver();
        let q = lp.quiver();
        let v = q.vertex_ix("X").unwrap();
        let i = q.edge_ix("I").unwrap();
        let f = q.edge_ix("F").unwrap();
        let alpha = q.two_edge_ix("alpha").unwrap();
        let beta = q.two_edge_ix("beta").unwrap();
        let sum = OneCell::from_edges(q, v, v, &[i, f]).unwrap();
        let id = identity_cell(&lp, &sum);
        // random-ish 2×2 cell on I ⊕ F
        let pa = TwoPath::from_application_order(q, &[alpha]).unwrap();
        let pb = TwoPath::from_application_order(q, &[beta]).unwrap();
        let ba = TwoPath::from_application_order(q, &[alpha, beta]).unwrap();
        let mut diag0 = PathVector::identity(i);
        diag0.add_term(ba, rat_int(2));
        let c = Cell {
            src: sum.clone(),
            tgt: sum.clone(),
            entries: vec![
                diag0,
                PathVector::single(pb.clone(), rat_int(1)),
                PathVector::single(pa.clone(), rat_int(-1)),
                PathVector::single(TwoPath::from_application_order(q, &[beta, alpha]).unwrap(), rat_int(1)),
            ],
        };
        let left = vertical_compose(&lp, &id, &c).unwrap();
        let right = vertical_compose(&lp, &c, &id).unwrap();
        assert_eq!(left, c);
        assert_eq!(right, c);
    }

    #[test]
    fn degree_split_reconstructs() {
        let lp = xquiver();
        let q = lp.quiver();
        let i = q.edge_ix("I").unwrap();
        let alpha = q.two_edge_ix("alpha").unwrap();
        let beta = q.two_edge_ix("beta").unwrap();
        let ba = TwoPath::from_application_order(q, &[alpha, beta]).unwrap();
        let baba = TwoPath::from_application_order(q, &[alpha, beta, alpha, beta]).unwrap();
        let mut v = PathVector::identity(i);
        v.add_term(ba, rat_int(2));
        v.add_term(baba, rat_int(-3));
        let parts = degree_split(&v);
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[&0], PathVector::identity(i));
        let mut sum = PathVector::zero(i, i);
        for p in parts.values() {
            sum = sum.add(p);
        }
        assert_eq!(sum, v);
        assert!(!v.in_edge_ideal());
        let mut w = v.clone();
        w.add_term(TwoPath::stationary(i), rat_int(-1));
        assert!(w.in_edge_ideal());
    }

    #[test]
    fn grading_is_multiplicative() {
        let lp = xquiver();
        let q = lp.quiver();
        let i = q.edge_ix("I").unwrap();
        let f = q.edge_ix("F").unwrap();
        let alpha = q.two_edge_ix("alpha").unwrap();
        let beta = q.two_edge_ix("beta").unwrap();
        let ba = TwoPath::from_application_order(q, &[alpha, beta]).unwrap();
        let a1 = TwoPath::from_application_order(q, &[alpha]).unwrap();
        let mut u = PathVector::identity(i);
        u.add_term(ba.clone(), rat_int(1));
        let w = PathVector::single(a1, rat_int(2)); // I → F, degree 1
        let prod = PathVector::compose(&w, &u);
        let degrees: Vec<usize> = prod.degree_split().keys().copied().collect();
        assert_eq!(degrees, vec![1, 3]);
        let _ = f;
    }

    #[test]
    fn m_quiver_paths_p_to_p_up_to_length_two() {
        let fx = crate::constructions::fixtures::fixture_m().unwrap();
        let q = fx.licit.quiver();
        let p = q.edge_ix("P").unwrap();
        let paths = enumerate_paths(q, p, p, 2);
        let alpha = q.two_edge_ix("alpha").unwrap();
        let beta = q.two_edge_ix("beta").unwrap();
        let betat = q.two_edge_ix("betat").unwrap();
        assert_eq!(
            paths,
            vec![
                TwoPath::stationary(p),
                TwoPath::from_application_order(q, &[alpha, beta]).unwrap(),
                TwoPath::from_application_order(q, &[alpha, betat]).unwrap(),
            ]
        );
    }

    #[test]
    fn matrix_product_entries_sum_concatenations() {
        // 2×2 cells over the M quiver: each product entry is the sum of the
        // two middle concatenations
        let fx = crate::constructions::fixtures::fixture_m().unwrap();
        let lp = &fx.licit;
        let q = lp.quiver();
        let v = q.vertex_ix("*").unwrap();
        let p = q.edge_ix("P").unwrap();
        let qq = q.edge_ix("Q").unwrap();
        let alpha = q.two_edge_ix("alpha").unwrap();
        let beta = q.two_edge_ix("beta").unwrap();
        let betat = q.two_edge_ix("betat").unwrap();
        let pq = OneCell::from_edges(q, v, v, &[p, qq]).unwrap();
        let path1 = |e: TwoEdgeIx| {
            PathVector::single(TwoPath::from_application_order(q, &[e]).unwrap(), rat_int(1))
        };
        // a : P ⊕ Q → P ⊕ Q with both β-entries in the top row
        let a = Cell {
            src: pq.clone(),
            tgt: pq.clone(),
            entries: vec![
                PathVector::zero(p, p),
                path1(beta),
                PathVector::zero(p, qq),
                PathVector::zero(qq, qq),
            ],
        };
        let b = Cell {
            src: pq.clone(),
            tgt: pq.clone(),
            entries: vec![
                PathVector::zero(p, p),
                path1(betat),
                path1(alpha),
                PathVector::zero(qq, qq),
            ],
        };
        let prod = vertical_compose(lp, &a, &b).unwrap();
        // entry (0, 0) = 0∘0 + β∘α
        let expected = PathVector::single(
            TwoPath::from_application_order(q, &[alpha, beta]).unwrap(),
            rat_int(1),
        );
        assert_eq!(prod.at(0, 0), &expected);
        // entry (0, 1) = 0∘β̃ + β∘0 = 0
        assert!(prod.at(0, 1).is_zero());
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let lp = xquiver();
        let q = lp.quiver();
        let i = q.edge_ix("I").unwrap();
        let mut v = PathVector::identity(i);
        v.add_term(TwoPath::stationary(i), rat_int(-1));
        assert!(v.is_zero());
        assert_eq!(v.terms.len(), 0);
        assert_eq!(PathVector::identity(i).scale(&Rat::zero()).terms.len(), 0);
        let _ = lp;
    }
}

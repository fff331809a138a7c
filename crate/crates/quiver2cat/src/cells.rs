//! Generic 2-cell matrix calculus.
//!
//! A 2-cell between formal direct sums of 1-edges is a matrix whose entry
//! `(j, i)` joins the `i`-th source component to the `j`-th target
//! component. The same block bookkeeping (vertical matrix products,
//! identity cells, extension of drop operators over direct sums, and the
//! two-sided horizontal composition formula) applies whether the scalars
//! are path polynomials or coordinates in the hom bases of an assembled
//! 2-category, so it is written once against the [`TwoCalc`] trait.

use crate::exactlin::Rat;
use crate::quiver2::{EdgeIx, LicitPresentation, OneCell, QuiverError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CalcError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("cell shape mismatch: {0}")]
    Shape(String),
    #[error("drop table has no entry for 1-edge `{edge}` on 2-edge `{two_edge}`")]
    MissingDropEntry { edge: String, two_edge: String },
    #[error("operation requires a drop table")]
    NoDropTable,
    #[error("operation requires a quotient table")]
    NoQuotient,
    #[error("the two horizontal composition formulas disagree")]
    HorizontalMismatch,
    #[error("{0}")]
    Other(String),
}

/// Matrix of scalars between two parallel 1-cells, stored row-major:
/// `entries[j * src.len() + i]` joins `src.comps[i]` to `tgt.comps[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell<S> {
    pub src: OneCell,
    pub tgt: OneCell,
    pub entries: Vec<S>,
}

impl<S: Clone> Cell<S> {
    pub fn build(src: OneCell, tgt: OneCell, mut fill: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(src.len() * tgt.len());
        for j in 0..tgt.len() {
            for i in 0..src.len() {
                entries.push(fill(j, i));
            }
        }
        Cell { src, tgt, entries }
    }

    pub fn at(&self, j: usize, i: usize) -> &S {
        &self.entries[j * self.src.len() + i]
    }

    pub fn at_mut(&mut self, j: usize, i: usize) -> &mut S {
        let w = self.src.len();
        &mut self.entries[j * w + i]
    }
}

/// The scalar calculus a cell algebra is generic over.
pub trait TwoCalc {
    type S: Clone + PartialEq + std::fmt::Debug;

    fn licit(&self) -> &LicitPresentation;
    fn zero_scalar(&self, src: EdgeIx, tgt: EdgeIx) -> Self::S;
    fn scalar_is_zero(&self, s: &Self::S) -> bool;
    fn add(&self, a: &Self::S, b: &Self::S) -> Self::S;
    fn scale(&self, c: &Rat, s: &Self::S) -> Self::S;
    /// Vertical product `later ∘ first`, in canonical (reduced) form.
    fn compose(&self, later: &Self::S, first: &Self::S) -> Result<Self::S, CalcError>;
    fn identity_scalar(&self, f: EdgeIx) -> Self::S;
    /// `F_*(s)` for a single 1-edge `F` and a scalar `s : src → tgt`.
    fn lower_edge(&self, f: EdgeIx, s: &Self::S, src: EdgeIx, tgt: EdgeIx)
        -> Result<Cell<Self::S>, CalcError>;
    /// `F^*(s)` for a single 1-edge `F` and a scalar `s : src → tgt`.
    fn upper_edge(&self, f: EdgeIx, s: &Self::S, src: EdgeIx, tgt: EdgeIx)
        -> Result<Cell<Self::S>, CalcError>;
}

pub fn zero_cell<C: TwoCalc>(c: &C, src: &OneCell, tgt: &OneCell) -> Cell<C::S> {
    Cell::build(src.clone(), tgt.clone(), |j, i| c.zero_scalar(src.comps[i], tgt.comps[j]))
}

pub fn identity_cell<C: TwoCalc>(c: &C, f: &OneCell) -> Cell<C::S> {
    Cell::build(f.clone(), f.clone(), |j, i| {
        if i == j {
            c.identity_scalar(f.comps[i])
        } else {
            c.zero_scalar(f.comps[i], f.comps[j])
        }
    })
}

pub fn add_cells<C: TwoCalc>(c: &C, a: &Cell<C::S>, b: &Cell<C::S>) -> Result<Cell<C::S>, CalcError> {
    if a.src != b.src || a.tgt != b.tgt {
        return Err(CalcError::Shape("cell addition endpoint mismatch".into()));
    }
    Ok(Cell {
        src: a.src.clone(),
        tgt: a.tgt.clone(),
        entries: a.entries.iter().zip(&b.entries).map(|(x, y)| c.add(x, y)).collect(),
    })
}

pub fn scale_cell<C: TwoCalc>(c: &C, k: &Rat, a: &Cell<C::S>) -> Cell<C::S> {
    Cell {
        src: a.src.clone(),
        tgt: a.tgt.clone(),
        entries: a.entries.iter().map(|x| c.scale(k, x)).collect(),
    }
}

pub fn cell_is_zero<C: TwoCalc>(c: &C, a: &Cell<C::S>) -> bool {
    a.entries.iter().all(|s| c.scalar_is_zero(s))
}

/// Vertical composition `a ∘ b` for `b : E → F`, `a : F → G`.
pub fn vcompose<C: TwoCalc>(c: &C, a: &Cell<C::S>, b: &Cell<C::S>) -> Result<Cell<C::S>, CalcError> {
    if a.src != b.tgt {
        return Err(CalcError::Shape(format!(
            "vertical composition endpoint mismatch: {} vs {}",
            a.src.display(c.licit().quiver()),
            b.tgt.display(c.licit().quiver())
        )));
    }
    let mid = a.src.len();
    let mut out = zero_cell(c, &b.src, &a.tgt);
    for k in 0..a.tgt.len() {
        for i in 0..b.src.len() {
            let mut acc = c.zero_scalar(b.src.comps[i], a.tgt.comps[k]);
            for j in 0..mid {
                let prod = c.compose(a.at(k, j), b.at(j, i))?;
                acc = c.add(&acc, &prod);
            }
            *out.at_mut(k, i) = acc;
        }
    }
    Ok(out)
}

/// Left-to-right fold of vertical composition, first applied last in the
/// slice: `vcompose_chain([a, b, c]) = a ∘ b ∘ c`.
pub fn vcompose_chain<C: TwoCalc>(c: &C, cells: &[Cell<C::S>]) -> Result<Cell<C::S>, CalcError> {
    let mut it = cells.iter().rev();
    let Some(first) = it.next() else {
        return Err(CalcError::Shape("empty composition chain".into()));
    };
    let mut acc = first.clone();
    for next in it {
        acc = vcompose(c, next, &acc)?;
    }
    Ok(acc)
}

/// `f_*(x)`: extends the drop operator over a direct-sum 1-cell `f`
/// (block-diagonal over the components of `f`) and an arbitrary cell `x`
/// (blockwise over its entries). Blocks land at their expansion offsets,
/// so the result is a cell between the expansion-ordered composites.
pub fn lower_cell<C: TwoCalc>(c: &C, f: &OneCell, x: &Cell<C::S>) -> Result<Cell<C::S>, CalcError> {
    let licit = c.licit();
    if x.src.tgt != f.src {
        return Err(CalcError::Shape("lower extension endpoint mismatch".into()));
    }
    let src_exp = licit.expand_compose(f, &x.src)?;
    let tgt_exp = licit.expand_compose(f, &x.tgt)?;
    let w = src_exp.cell.len();
    let mut out = zero_cell(c, &src_exp.cell, &tgt_exp.cell);
    for (bi, &fe) in f.comps.iter().enumerate() {
        for (k, &hk) in x.tgt.comps.iter().enumerate() {
            for (j, &gj) in x.src.comps.iter().enumerate() {
                let block = c.lower_edge(fe, x.at(k, j), gj, hk)?;
                let col0 = src_exp.offsets[bi][j];
                let row0 = tgt_exp.offsets[bi][k];
                for bj in 0..block.tgt.len() {
                    for bi2 in 0..block.src.len() {
                        out.entries[(row0 + bj) * w + (col0 + bi2)] = block.at(bj, bi2).clone();
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `f^*(x)`: the pre-composition analogue of [`lower_cell`], block-diagonal
/// over the components of `f`.
pub fn upper_cell<C: TwoCalc>(c: &C, f: &OneCell, x: &Cell<C::S>) -> Result<Cell<C::S>, CalcError> {
    let licit = c.licit();
    if f.tgt != x.src.src {
        return Err(CalcError::Shape("upper extension endpoint mismatch".into()));
    }
    let src_exp = licit.expand_compose(&x.src, f)?;
    let tgt_exp = licit.expand_compose(&x.tgt, f)?;
    let w = src_exp.cell.len();
    let mut out = zero_cell(c, &src_exp.cell, &tgt_exp.cell);
    for (bj, &fe) in f.comps.iter().enumerate() {
        for (k, &hk) in x.tgt.comps.iter().enumerate() {
            for (i, &gi) in x.src.comps.iter().enumerate() {
                let block = c.upper_edge(fe, x.at(k, i), gi, hk)?;
                let col0 = src_exp.offsets[i][bj];
                let row0 = tgt_exp.offsets[k][bj];
                for bk in 0..block.tgt.len() {
                    for bi2 in 0..block.src.len() {
                        out.entries[(row0 + bk) * w + (col0 + bi2)] = block.at(bk, bi2).clone();
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Equality of two cells up to a relabeling of like summands: both cells
/// must join the same component lists, and there must exist edge-preserving
/// permutations of the source and target positions carrying one entry grid
/// onto the other.
///
/// Cells computed along different decomposition routes of the same
/// composite represent the same abstract 2-cell only up to such a
/// relabeling; the identities the extension operators satisfy by
/// definition are therefore compared with this notion. Positionally equal
/// cells short-circuit. A relabeling search larger than the given budget
/// is reported as an error.
pub fn cells_equal_up_to_copies<C: TwoCalc>(
    c: &C,
    a: &Cell<C::S>,
    b: &Cell<C::S>,
    budget: usize,
) -> Result<bool, CalcError> {
    if a.src != b.src || a.tgt != b.tgt {
        return Ok(false);
    }
    if a.entries == b.entries {
        return Ok(true);
    }
    // group positions by edge
    fn groups(comps: &[EdgeIx]) -> Vec<Vec<usize>> {
        let mut map: std::collections::BTreeMap<EdgeIx, Vec<usize>> = Default::default();
        for (i, &e) in comps.iter().enumerate() {
            map.entry(e).or_default().push(i);
        }
        map.into_values().filter(|g| g.len() > 1).collect()
    }
    fn perms(groups: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
        // all products of within-group permutations, as position swaps
        fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
            if items.len() <= 1 {
                return vec![items.to_vec()];
            }
            let mut out = Vec::new();
            for (i, &first) in items.iter().enumerate() {
                let rest: Vec<usize> =
                    items.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
                for mut tail in permutations(&rest) {
                    let mut v = vec![first];
                    v.append(&mut tail);
                    out.push(v);
                }
            }
            out
        }
        let mut acc: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        for g in groups {
            let mut next = Vec::new();
            for image in permutations(g) {
                for base in &acc {
                    let mut v = base.clone();
                    for (&from, &to) in g.iter().zip(&image) {
                        v.push((from, to));
                    }
                    next.push(v);
                }
            }
            acc = next;
        }
        acc
    }
    let src_groups = groups(&a.src.comps);
    let tgt_groups = groups(&a.tgt.comps);
    let count = |gs: &[Vec<usize>]| -> usize {
        gs.iter().map(|g| (1..=g.len()).product::<usize>()).product()
    };
    if count(&src_groups).saturating_mul(count(&tgt_groups)) > budget {
        return Err(CalcError::Other(
            "copy-relabeling search exceeds the comparison budget".into(),
        ));
    }
    let w = a.src.len();
    for src_perm in perms(&src_groups) {
        for tgt_perm in perms(&tgt_groups) {
            let mut smap: Vec<usize> = (0..w).collect();
            for &(from, to) in &src_perm {
                smap[from] = to;
            }
            let mut tmap: Vec<usize> = (0..a.tgt.len()).collect();
            for &(from, to) in &tgt_perm {
                tmap[from] = to;
            }
            let mut ok = true;
            'outer: for j in 0..a.tgt.len() {
                for i in 0..w {
                    if b.entries[tmap[j] * w + smap[i]] != a.entries[j * w + i] {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok {
                let _ = c;
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Both horizontal-composition formulas for `a : F → F̃` (1-cells `Y → X`)
/// and `b : G → G̃` (1-cells `Z → Y`):
///
/// * `G̃^*(a) ∘ F_*(b)`
/// * `F̃_*(b) ∘ G^*(a)`
///
/// Returns the pair so callers can assert agreement.
pub fn horizontal_both<C: TwoCalc>(
    c: &C,
    a: &Cell<C::S>,
    b: &Cell<C::S>,
) -> Result<(Cell<C::S>, Cell<C::S>), CalcError> {
    if a.src.src != b.src.tgt {
        return Err(CalcError::Shape("horizontal composition vertex mismatch".into()));
    }
    let first = {
        let fb = lower_cell(c, &a.src, b)?;
        let ga = upper_cell(c, &b.tgt, a)?;
        vcompose(c, &ga, &fb)?
    };
    let second = {
        let ga = upper_cell(c, &b.src, a)?;
        let fb = lower_cell(c, &a.tgt, b)?;
        vcompose(c, &fb, &ga)?
    };
    Ok((first, second))
}

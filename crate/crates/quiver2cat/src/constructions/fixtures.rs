//! Hand-transcribed fixtures: the fiat quiver 2-category M, the concrete
//! 2-category C_V over the cyclic Kronecker algebra, the projective
//! semicategory presentation S_A(A2), the bound quiver C_A(A2), and the
//! non-finitary one-vertex example.

use std::collections::BTreeMap;

use num_traits::One;

use super::{ConstructionError, QuiverBundle};
use crate::cells::Cell;
use crate::exactlin::Rat;
use crate::pathcat::{PathVector, TwoCell, TwoPath};
use crate::quiver2::{EdgeIx, LicitPresentation, OneCell, TwoEdgeIx, TwoQuiver};
use crate::quotient::AdmissibleIdeal;
use crate::structure::{AdjunctionSpec, WeakInvolution};
use crate::twocat::{BasisCell, BasisIx, HomElt, PresCell, TwoCatPresentation};

pub const FIXTURE_NAMES: [&str; 5] = ["M", "CV", "SA_A2", "CA_A2", "XQUIVER"];

/// Returns the quiver-level fixtures by name; `CV` is presentation-level
/// and lives in [`fixture_cv`].
pub fn fixture(name: &str) -> Result<QuiverBundle, ConstructionError> {
    match name {
        "M" => fixture_m(),
        "SA_A2" => fixture_sa_a2(),
        "CA_A2" => fixture_ca_a2(),
        "XQUIVER" => fixture_xquiver(),
        other => Err(ConstructionError::Other(format!("unknown fixture `{other}`"))),
    }
}

fn pv(
    q: &TwoQuiver,
    terms: &[(i64, &[&str])],
    src: EdgeIx,
    tgt: EdgeIx,
) -> PathVector {
    let mut out = PathVector::zero(src, tgt);
    for &(c, edges) in terms {
        let ixs: Vec<TwoEdgeIx> = edges.iter().map(|n| q.two_edge_ix(n).unwrap()).collect();
        let path = if ixs.is_empty() {
            debug_assert_eq!(src, tgt);
            TwoPath::stationary(src)
        } else {
            TwoPath::from_application_order(q, &ixs).expect("fixture path chains")
        };
        out.add_term(path, Rat::from_integer(c.into()));
    }
    out
}

/// The fiat quiver 2-category M: one 0-cell, 1-edges I, P, Q with
/// P² = PQ = QP = Q² = P ⊕ Q, five generator 2-edges, seven admissible
/// relations and the transcribed vertical drop tables.
pub fn fixture_m() -> Result<QuiverBundle, ConstructionError> {
    let mut quiver = TwoQuiver::new();
    let v = quiver.add_vertex("*")?;
    let i = quiver.add_edge("I", v, v)?;
    let p = quiver.add_edge("P", v, v)?;
    let qq = quiver.add_edge("Q", v, v)?;
    quiver.set_stationary(v, i)?;
    quiver.add_two_edge("alpha", p, qq)?;
    quiver.add_two_edge("beta", qq, p)?;
    quiver.add_two_edge("betat", qq, p)?;
    quiver.add_two_edge("gamma", p, i)?;
    quiver.add_two_edge("eta", i, qq)?;

    let mut rw = BTreeMap::new();
    for &e in &[i, p, qq] {
        rw.insert((i, e), vec![e]);
        rw.insert((e, i), vec![e]);
    }
    rw.insert((i, i), vec![i]);
    for &a in &[p, qq] {
        for &b in &[p, qq] {
            rw.insert((a, b), vec![p, qq]);
        }
    }
    let (licit, _) = LicitPresentation::certify(quiver, rw)?;
    let q = licit.quiver();

    // seven admissible relations
    let generators = vec![
        pv(q, &[(1, &["alpha", "beta"])], p, p),                               // β∘α
        pv(q, &[(1, &["beta", "alpha"])], qq, qq),                             // α∘β
        pv(q, &[(1, &["beta", "gamma"]), (-1, &["betat", "gamma"])], qq, i),   // γ∘β − γ∘β̃
        pv(q, &[(1, &["eta", "beta"]), (-1, &["eta", "betat"])], i, p),        // β∘η − β̃∘η
        pv(q, &[(1, &["gamma", "eta", "beta"]), (-1, &["alpha", "betat"])], p, p), // β∘η∘γ − β̃∘α
        pv(q, &[(1, &["beta", "gamma", "eta"]), (-1, &["betat", "alpha"])], qq, qq), // η∘γ∘β − α∘β̃
        pv(q, &[(1, &["eta", "beta", "gamma"])], i, i),                        // γ∘β∘η
    ];
    let ideal = AdmissibleIdeal::new(generators, 4);

    let pq_cell = OneCell::from_edges(q, v, v, &[p, qq]).unwrap();
    let p_cell = OneCell::edge(q, p);
    let q_cell = OneCell::edge(q, qq);
    let i_cell = OneCell::edge(q, i);

    let grid = |src: &OneCell, tgt: &OneCell, entries: Vec<PathVector>| TwoCell {
        src: src.clone(),
        tgt: tgt.clone(),
        entries,
    };

    // entry shortcuts; matrices are row-major over canonical order [P, Q]
    let zero = |s: EdgeIx, t: EdgeIx| PathVector::zero(s, t);
    let iota_p = pv(q, &[(1, &[])], p, p);
    let iota_q = pv(q, &[(1, &[])], qq, qq);
    let v_alpha = pv(q, &[(1, &["alpha"])], p, qq);
    let v_beta = pv(q, &[(1, &["beta"])], qq, p);
    let v_betat = pv(q, &[(1, &["betat"])], qq, p);
    let malpha_etagamma = pv(q, &[(-1, &["alpha"]), (1, &["gamma", "eta"])], p, qq);

    let mut lower = BTreeMap::new();
    let mut upper = BTreeMap::new();
    let a_ix = q.two_edge_ix("alpha").unwrap();
    let b_ix = q.two_edge_ix("beta").unwrap();
    let bt_ix = q.two_edge_ix("betat").unwrap();
    let g_ix = q.two_edge_ix("gamma").unwrap();
    let e_ix = q.two_edge_ix("eta").unwrap();

    // P_* table
    lower.insert(
        (p, a_ix),
        grid(&pq_cell, &pq_cell, vec![iota_p.clone(), zero(qq, p), zero(p, qq), zero(qq, qq)]),
    );
    lower.insert(
        (p, b_ix),
        grid(&pq_cell, &pq_cell, vec![zero(p, p), zero(qq, p), zero(p, qq), iota_q.clone()]),
    );
    lower.insert(
        (p, bt_ix),
        grid(
            &pq_cell,
            &pq_cell,
            vec![zero(p, p), v_betat.clone(), malpha_etagamma.clone(), zero(qq, qq)],
        ),
    );
    lower.insert(
        (p, g_ix),
        grid(&pq_cell, &p_cell, vec![iota_p.clone(), v_betat.clone()]),
    );
    lower.insert(
        (p, e_ix),
        grid(&p_cell, &pq_cell, vec![iota_p.clone(), malpha_etagamma.clone()]),
    );

    // Q_* table
    lower.insert(
        (qq, a_ix),
        grid(&pq_cell, &pq_cell, vec![zero(p, p), zero(qq, p), zero(p, qq), iota_q.clone()]),
    );
    lower.insert(
        (qq, b_ix),
        grid(&pq_cell, &pq_cell, vec![iota_p.clone(), zero(qq, p), zero(p, qq), zero(qq, qq)]),
    );
    lower.insert(
        (qq, bt_ix),
        grid(
            &pq_cell,
            &pq_cell,
            vec![zero(p, p), v_betat.clone(), malpha_etagamma.clone(), zero(qq, qq)],
        ),
    );
    lower.insert(
        (qq, g_ix),
        grid(&pq_cell, &q_cell, vec![malpha_etagamma.clone(), iota_q.clone()]),
    );
    lower.insert(
        (qq, e_ix),
        grid(&q_cell, &pq_cell, vec![v_betat.clone(), iota_q.clone()]),
    );

    // P^* table
    upper.insert(
        (p, a_ix),
        grid(&pq_cell, &pq_cell, vec![zero(p, p), v_beta.clone(), v_alpha.clone(), zero(qq, qq)]),
    );
    upper.insert(
        (p, b_ix),
        grid(&pq_cell, &pq_cell, vec![zero(p, p), v_beta.clone(), v_alpha.clone(), zero(qq, qq)]),
    );
    upper.insert(
        (p, bt_ix),
        grid(&pq_cell, &pq_cell, vec![zero(p, p), zero(qq, p), zero(p, qq), iota_q.clone()]),
    );
    upper.insert(
        (p, g_ix),
        grid(&pq_cell, &p_cell, vec![iota_p.clone(), v_beta.clone()]),
    );
    upper.insert(
        (p, e_ix),
        grid(&p_cell, &pq_cell, vec![iota_p.clone(), v_alpha.clone()]),
    );

    // Q^* table
    upper.insert(
        (qq, a_ix),
        grid(&pq_cell, &pq_cell, vec![zero(p, p), v_beta.clone(), v_alpha.clone(), zero(qq, qq)]),
    );
    upper.insert(
        (qq, b_ix),
        grid(&pq_cell, &pq_cell, vec![zero(p, p), v_beta.clone(), v_alpha.clone(), zero(qq, qq)]),
    );
    upper.insert(
        (qq, bt_ix),
        grid(&pq_cell, &pq_cell, vec![iota_p.clone(), zero(qq, p), zero(p, qq), zero(qq, qq)]),
    );
    upper.insert(
        (qq, g_ix),
        grid(&pq_cell, &q_cell, vec![v_alpha.clone(), iota_q.clone()]),
    );
    upper.insert(
        (qq, e_ix),
        grid(&q_cell, &pq_cell, vec![v_beta.clone(), iota_q.clone()]),
    );

    let _ = i_cell;
    Ok(QuiverBundle { name: "M".into(), licit, ideal: Some(ideal), lower, upper })
}

/// The weak involution and bi-adjunction data of M: ⋆ interchanges P and Q
/// and transforms α ↦ −α + η∘γ, β ↦ β̃, γ ↦ η; the unit is
/// ξ = (β∘η ; η) : I → P ⊕ Q and the counit ε = (γ, −γ∘β) : P ⊕ Q → I.
pub fn fixture_m_fiat(
    licit: &LicitPresentation,
) -> Result<(WeakInvolution, Vec<AdjunctionSpec>), ConstructionError> {
    let q = licit.quiver();
    let v = q.vertex_ix("*")?;
    let i = q.edge_ix("I")?;
    let p = q.edge_ix("P")?;
    let qq = q.edge_ix("Q")?;
    let mut vertex_map = BTreeMap::new();
    vertex_map.insert(v, v);
    let mut edge_map = BTreeMap::new();
    edge_map.insert(i, i);
    edge_map.insert(p, qq);
    edge_map.insert(qq, p);
    let mut two_edge_map = BTreeMap::new();
    two_edge_map.insert(
        q.two_edge_ix("alpha")?,
        pv(q, &[(-1, &["alpha"]), (1, &["gamma", "eta"])], p, qq),
    );
    two_edge_map.insert(q.two_edge_ix("beta")?, pv(q, &[(1, &["betat"])], qq, p));
    two_edge_map.insert(q.two_edge_ix("betat")?, pv(q, &[(1, &["beta"])], qq, p));
    two_edge_map.insert(q.two_edge_ix("gamma")?, pv(q, &[(1, &["eta"])], i, qq));
    two_edge_map.insert(q.two_edge_ix("eta")?, pv(q, &[(1, &["gamma"])], p, i));
    let inv = WeakInvolution { vertex_map, edge_map, two_edge_map };

    let i_cell = OneCell::edge(q, i);
    let pq_cell = OneCell::from_edges(q, v, v, &[p, qq]).unwrap();
    // unit ξ = (η ; β∘η) : I → Q ⊕ P, counit ε = (γ, −γ∘β) : P ⊕ Q → I,
    // blocks in the printed order
    let qp_cell = OneCell::from_edges(q, v, v, &[qq, p]).unwrap();
    let xi = TwoCell {
        src: i_cell.clone(),
        tgt: qp_cell,
        entries: vec![pv(q, &[(1, &["eta"])], i, qq), pv(q, &[(1, &["eta", "beta"])], i, p)],
    };
    let eps = TwoCell {
        src: pq_cell.clone(),
        tgt: i_cell.clone(),
        entries: vec![pv(q, &[(1, &["gamma"])], p, i), pv(q, &[(-1, &["beta", "gamma"])], qq, i)],
    };
    let adjunctions = vec![
        AdjunctionSpec {
            left: OneCell::edge(q, p),
            right: OneCell::edge(q, qq),
            unit: xi.clone(),
            counit: eps.clone(),
        },
        AdjunctionSpec {
            left: OneCell::edge(q, qq),
            right: OneCell::edge(q, p),
            unit: xi,
            counit: eps,
        },
        AdjunctionSpec {
            left: i_cell.clone(),
            right: i_cell.clone(),
            unit: TwoCell {
                src: i_cell.clone(),
                tgt: i_cell.clone(),
                entries: vec![pv(q, &[(1, &[])], i, i)],
            },
            counit: TwoCell {
                src: i_cell.clone(),
                tgt: i_cell.clone(),
                entries: vec![pv(q, &[(1, &[])], i, i)],
            },
        },
    ];
    Ok((inv, adjunctions))
}

/// The non-finitary one-vertex example: F² = I ⊕ F with a 2-level cycle
/// α : I → F, β : F → I. Ships without an admissible ideal.
pub fn fixture_xquiver() -> Result<QuiverBundle, ConstructionError> {
    let mut quiver = TwoQuiver::new();
    let v = quiver.add_vertex("X")?;
    let i = quiver.add_edge("I", v, v)?;
    let f = quiver.add_edge("F", v, v)?;
    quiver.set_stationary(v, i)?;
    quiver.add_two_edge("alpha", i, f)?;
    quiver.add_two_edge("beta", f, i)?;
    let mut rw = BTreeMap::new();
    rw.insert((i, i), vec![i]);
    rw.insert((i, f), vec![f]);
    rw.insert((f, i), vec![f]);
    rw.insert((f, f), vec![i, f]);
    let (licit, _) = LicitPresentation::certify(quiver, rw)?;
    Ok(QuiverBundle {
        name: "XQUIVER".into(),
        licit,
        ideal: None,
        lower: BTreeMap::new(),
        upper: BTreeMap::new(),
    })
}

/// The projective semicategory presentation over the A2 algebra: the square
/// quiver on F_ee, F_ef, F_fe, F_ff with the binding
/// `F_ab ∘ F_cd = F_ad` when `(b, c) = (e, f)` and zero otherwise, and the
/// single commutation relation.
pub fn fixture_sa_a2() -> Result<QuiverBundle, ConstructionError> {
    let mut quiver = TwoQuiver::new();
    let v = quiver.add_vertex("*")?;
    let fee = quiver.add_edge("Fee", v, v)?;
    let fef = quiver.add_edge("Fef", v, v)?;
    let ffe = quiver.add_edge("Ffe", v, v)?;
    let fff = quiver.add_edge("Fff", v, v)?;
    quiver.add_two_edge("a_e_x", fee, fef)?;
    quiver.add_two_edge("a_f_x", ffe, fff)?;
    quiver.add_two_edge("a_x_e", ffe, fee)?;
    quiver.add_two_edge("a_x_f", fff, fef)?;

    // second index of the left factor and first index of the right factor
    // must be (e, f)
    let second = |e: EdgeIx| -> char {
        match e {
            x if x == fee || x == ffe => 'e',
            _ => 'f',
        }
    };
    let first = |e: EdgeIx| -> char {
        match e {
            x if x == fee || x == fef => 'e',
            _ => 'f',
        }
    };
    let target = |p: EdgeIx, q: EdgeIx| -> EdgeIx {
        // F_ad from F_ab ∘ F_cd
        let a = first(p);
        let d = second(q);
        match (a, d) {
            ('e', 'e') => fee,
            ('e', 'f') => fef,
            ('f', 'e') => ffe,
            _ => fff,
        }
    };
    let mut rw = BTreeMap::new();
    for &pe in &[fee, fef, ffe, fff] {
        for &qe in &[fee, fef, ffe, fff] {
            if second(pe) == 'e' && first(qe) == 'f' {
                rw.insert((pe, qe), vec![target(pe, qe)]);
            } else {
                rw.insert((pe, qe), vec![]);
            }
        }
    }
    let (licit, _) = LicitPresentation::certify(quiver, rw)?;
    let q = licit.quiver();

    let generators = vec![pv(
        q,
        &[(1, &["a_x_e", "a_e_x"]), (-1, &["a_f_x", "a_x_f"])],
        ffe,
        fef,
    )];
    let ideal = AdmissibleIdeal::new(generators, 3);

    // nonzero drop entries; all others have a zero source or target
    let cell1 = |src: EdgeIx, tgt: EdgeIx, edge: &str| TwoCell {
        src: OneCell::edge(q, src),
        tgt: OneCell::edge(q, tgt),
        entries: vec![pv(q, &[(1, &[edge])], src, tgt)],
    };
    let mut lower = BTreeMap::new();
    let mut upper = BTreeMap::new();
    lower.insert((fee, q.two_edge_ix("a_f_x")?), cell1(fee, fef, "a_e_x"));
    lower.insert((ffe, q.two_edge_ix("a_f_x")?), cell1(ffe, fff, "a_f_x"));
    upper.insert((ffe, q.two_edge_ix("a_x_e")?), cell1(ffe, fee, "a_x_e"));
    upper.insert((fff, q.two_edge_ix("a_x_e")?), cell1(fff, fef, "a_x_f"));

    Ok(QuiverBundle { name: "SA_A2".into(), licit, ideal: Some(ideal), lower, upper })
}

/// The bound Gabriel 2-quiver of C_A over A2, exactly as printed: five
/// 1-edges including the identity, five 2-edges, and the admissible
/// generator β₁∘γ₁ − β₂∘γ₂. No drop data is printed for it.
pub fn fixture_ca_a2() -> Result<QuiverBundle, ConstructionError> {
    let mut quiver = TwoQuiver::new();
    let v = quiver.add_vertex("*")?;
    let i = quiver.add_edge("I", v, v)?;
    let fee = quiver.add_edge("Fee", v, v)?;
    let fef = quiver.add_edge("Fef", v, v)?;
    let ffe = quiver.add_edge("Ffe", v, v)?;
    let fff = quiver.add_edge("Fff", v, v)?;
    quiver.set_stationary(v, i)?;
    quiver.add_two_edge("g1", ffe, fee)?;
    quiver.add_two_edge("g2", ffe, fff)?;
    quiver.add_two_edge("b1", fee, i)?;
    quiver.add_two_edge("b2", fff, i)?;
    quiver.add_two_edge("a", i, fef)?;

    let second = |e: EdgeIx| -> char {
        match e {
            x if x == fee || x == ffe => 'e',
            _ => 'f',
        }
    };
    let first = |e: EdgeIx| -> char {
        match e {
            x if x == fee || x == fef => 'e',
            _ => 'f',
        }
    };
    let target = |p: EdgeIx, q: EdgeIx| -> EdgeIx {
        let a = first(p);
        let d = second(q);
        match (a, d) {
            ('e', 'e') => fee,
            ('e', 'f') => fef,
            ('f', 'e') => ffe,
            _ => fff,
        }
    };
    let mut rw = BTreeMap::new();
    let all = [i, fee, fef, ffe, fff];
    for &e in &all {
        rw.insert((i, e), vec![e]);
        rw.insert((e, i), vec![e]);
    }
    rw.insert((i, i), vec![i]);
    for &pe in &[fee, fef, ffe, fff] {
        for &qe in &[fee, fef, ffe, fff] {
            if second(pe) == 'e' && first(qe) == 'f' {
                rw.insert((pe, qe), vec![target(pe, qe)]);
            } else {
                rw.insert((pe, qe), vec![]);
            }
        }
    }
    let (licit, _) = LicitPresentation::certify(quiver, rw)?;
    let q = licit.quiver();
    let generators =
        vec![pv(q, &[(1, &["g1", "b1"]), (-1, &["g2", "b2"])], ffe, i)];
    let ideal = AdmissibleIdeal::new(generators, 4);
    Ok(QuiverBundle {
        name: "CA_A2".into(),
        licit,
        ideal: Some(ideal),
        lower: BTreeMap::new(),
        upper: BTreeMap::new(),
    })
}

// ------------------------------------------------------------------
// C_V: transcription of the three tables over the cyclic Kronecker algebra
// ------------------------------------------------------------------

/// Generator 2-cells of C_V; indices run over {1, 2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum CvGen {
    A(u8, u8), // α_{ij} : P_i → Q_j
    B(u8, u8), // β_{ij} : Q_i → P_j
    G(u8),     // γ_i : P_i → V
    D(u8),     // δ_i : Q_i → V
    Z(u8),     // ζ_i : V → P_i
    H(u8),     // η_i : V → Q_i
}

/// 1-cells of C_V.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum CvObj {
    V,
    P(u8),
    Q(u8),
}

use CvGen::*;
use CvObj::*;

fn gen_src(g: CvGen) -> CvObj {
    match g {
        A(i, _) => P(i),
        B(i, _) => Q(i),
        G(i) => P(i),
        D(i) => Q(i),
        Z(_) => V,
        H(_) => V,
    }
}

fn gen_tgt(g: CvGen) -> CvObj {
    match g {
        A(_, j) => Q(j),
        B(_, j) => P(j),
        G(_) => V,
        D(_) => V,
        Z(i) => P(i),
        H(i) => Q(i),
    }
}

fn swap_obj(o: CvObj) -> CvObj {
    match o {
        V => V,
        P(i) => P(3 - i),
        Q(i) => Q(3 - i),
    }
}

fn swap_gen(g: CvGen) -> CvGen {
    match g {
        A(i, j) => A(3 - i, 3 - j),
        B(i, j) => B(3 - i, 3 - j),
        G(i) => G(3 - i),
        D(i) => D(3 - i),
        Z(i) => Z(3 - i),
        H(i) => H(3 - i),
    }
}

/// 1-cell composition table of C_V (`second ∘ first`).
fn cv_compose_obj(second: CvObj, first: CvObj) -> CvObj {
    match (second, first) {
        (V, x) | (x, V) => x,
        (P(1), P(1)) => P(1),
        (P(1), P(2)) => Q(2),
        (P(1), Q(1)) => P(1),
        (P(1), Q(2)) => Q(2),
        (P(2), P(1)) => Q(1),
        (P(2), P(2)) => P(2),
        (P(2), Q(1)) => Q(1),
        (P(2), Q(2)) => P(2),
        (Q(1), P(1)) => Q(1),
        (Q(1), P(2)) => P(2),
        (Q(1), Q(1)) => Q(1),
        (Q(1), Q(2)) => P(2),
        (Q(2), P(1)) => P(1),
        (Q(2), P(2)) => Q(2),
        (Q(2), Q(1)) => P(1),
        (Q(2), Q(2)) => Q(2),
        _ => unreachable!("indices are 1 or 2"),
    }
}

/// Reduction of a generator pair `second ∘ first`; `None` is zero and
/// `Comp` is one of the four normal-form composites ζ_k∘γ_i or η_k∘δ_i.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GenRed {
    Zero,
    Single(CvGen),
    Comp(CvGen, CvGen),
}

fn compose_gens(second: CvGen, first: CvGen) -> GenRed {
    debug_assert_eq!(gen_tgt(first), gen_src(second));
    match (second, first) {
        (B(_, k), A(i, _)) => {
            if i == k {
                GenRed::Zero
            } else {
                GenRed::Comp(Z(k), G(i))
            }
        }
        (A(_, k), B(i, _)) => {
            if i == k {
                GenRed::Zero
            } else {
                GenRed::Comp(H(k), D(i))
            }
        }
        (D(_), A(_, _)) => GenRed::Zero,
        (G(_), B(i, _)) => GenRed::Single(D(i)),
        (A(_, _), Z(_)) => GenRed::Zero,
        (B(_, j), H(_)) => GenRed::Single(Z(j)),
        (G(_), Z(_)) => GenRed::Zero,
        (Z(k), G(i)) => {
            if i == k {
                GenRed::Zero
            } else {
                GenRed::Comp(Z(k), G(i))
            }
        }
        (D(_), H(_)) => GenRed::Zero,
        (H(k), D(i)) => {
            if i == k {
                GenRed::Zero
            } else {
                GenRed::Comp(H(k), D(i))
            }
        }
        (Z(_), D(_)) => GenRed::Zero,
        (H(j), G(i)) => GenRed::Single(A(i, j)),
        other => unreachable!("non-composable generator pair {other:?}"),
    }
}

/// Basis 2-cells of C_V: identities, the sixteen generators, and the four
/// radical-square composites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum CvBasis {
    Iota(CvObj),
    Gen(CvGen),
    Word2(CvGen, CvGen), // second ∘ first, in normal form
}

fn basis_src(b: CvBasis) -> CvObj {
    match b {
        CvBasis::Iota(o) => o,
        CvBasis::Gen(g) => gen_src(g),
        CvBasis::Word2(_, f) => gen_src(f),
    }
}

fn basis_tgt(b: CvBasis) -> CvObj {
    match b {
        CvBasis::Iota(o) => o,
        CvBasis::Gen(g) => gen_tgt(g),
        CvBasis::Word2(s, _) => gen_tgt(s),
    }
}

fn swap_basis(b: CvBasis) -> CvBasis {
    match b {
        CvBasis::Iota(o) => CvBasis::Iota(swap_obj(o)),
        CvBasis::Gen(g) => CvBasis::Gen(swap_gen(g)),
        CvBasis::Word2(s, f) => CvBasis::Word2(swap_gen(s), swap_gen(f)),
    }
}

/// Reduces a composition-order word of generators to zero, a generator, or
/// a normal-form pair, using the vertical composition table.
fn reduce_word(word: &[CvGen]) -> Option<CvBasis> {
    match word.len() {
        0 => unreachable!("empty words carry no endpoint"),
        1 => Some(CvBasis::Gen(word[0])),
        _ => {
            let n = word.len();
            match compose_gens(word[n - 2], word[n - 1]) {
                GenRed::Zero => None,
                GenRed::Single(g) => {
                    let mut next = word[..n - 2].to_vec();
                    next.push(g);
                    reduce_word(&next)
                }
                GenRed::Comp(a, b) => {
                    if n == 2 {
                        Some(CvBasis::Word2(a, b))
                    } else {
                        match compose_gens(word[n - 3], a) {
                            GenRed::Zero => None,
                            GenRed::Single(g2) => {
                                let mut next = word[..n - 3].to_vec();
                                next.push(g2);
                                next.push(b);
                                reduce_word(&next)
                            }
                            GenRed::Comp(_, _) => {
                                unreachable!("composites absorb on the left")
                            }
                        }
                    }
                }
            }
        }
    }
}

fn compose_basis(second: CvBasis, first: CvBasis) -> Option<CvBasis> {
    debug_assert_eq!(basis_tgt(first), basis_src(second));
    let mut word: Vec<CvGen> = Vec::new();
    match second {
        CvBasis::Iota(_) => {}
        CvBasis::Gen(g) => word.push(g),
        CvBasis::Word2(s, f) => {
            word.push(s);
            word.push(f);
        }
    }
    match first {
        CvBasis::Iota(_) => {}
        CvBasis::Gen(g) => word.push(g),
        CvBasis::Word2(s, f) => {
            word.push(s);
            word.push(f);
        }
    }
    if word.is_empty() {
        return Some(CvBasis::Iota(basis_src(first)));
    }
    reduce_word(&word)
}

/// Horizontal table rows for ι_{P_1} and ι_{Q_1}, as printed; `None` is a
/// zero entry.
fn cv_lower_p1(g: CvGen) -> Option<CvBasis> {
    Some(match g {
        A(1, 1) => CvBasis::Iota(P(1)),
        A(1, 2) => CvBasis::Gen(A(1, 2)),
        A(2, 1) => CvBasis::Gen(B(2, 1)),
        A(2, 2) => return None,
        B(1, 1) => return None,
        B(1, 2) => CvBasis::Gen(A(1, 2)),
        B(2, 1) => CvBasis::Gen(B(2, 1)),
        B(2, 2) => CvBasis::Iota(Q(2)),
        G(1) => CvBasis::Iota(P(1)),
        G(2) => CvBasis::Gen(B(2, 1)),
        D(1) => return None,
        D(2) => CvBasis::Gen(B(2, 1)),
        Z(1) => return None,
        Z(2) => CvBasis::Gen(A(1, 2)),
        H(1) => CvBasis::Iota(P(1)),
        H(2) => CvBasis::Gen(A(1, 2)),
        _ => unreachable!(),
    })
}

fn cv_upper_p1(g: CvGen) -> Option<CvBasis> {
    Some(match g {
        A(1, 1) => CvBasis::Gen(A(1, 1)),
        A(1, 2) => CvBasis::Iota(P(1)),
        A(2, 1) => return None,
        A(2, 2) => CvBasis::Gen(B(1, 1)),
        B(1, 1) => CvBasis::Gen(B(1, 1)),
        B(1, 2) => CvBasis::Iota(Q(1)),
        B(2, 1) => return None,
        B(2, 2) => CvBasis::Gen(A(1, 1)),
        G(1) => CvBasis::Iota(P(1)),
        G(2) => CvBasis::Gen(B(1, 1)),
        D(1) => CvBasis::Gen(B(1, 1)),
        D(2) => return None,
        Z(1) => return None,
        Z(2) => CvBasis::Gen(A(1, 1)),
        H(1) => CvBasis::Gen(A(1, 1)),
        H(2) => CvBasis::Iota(P(1)),
        _ => unreachable!(),
    })
}

fn cv_lower_q1(g: CvGen) -> Option<CvBasis> {
    Some(match g {
        A(1, 1) => CvBasis::Iota(Q(1)),
        A(1, 2) => CvBasis::Gen(B(1, 2)),
        A(2, 1) => CvBasis::Gen(A(2, 1)),
        A(2, 2) => return None,
        B(1, 1) => return None,
        B(1, 2) => CvBasis::Gen(B(1, 2)),
        B(2, 1) => CvBasis::Gen(A(2, 1)),
        B(2, 2) => CvBasis::Iota(P(2)),
        G(1) => CvBasis::Iota(Q(1)),
        G(2) => CvBasis::Gen(A(2, 1)),
        D(1) => return None,
        D(2) => CvBasis::Gen(A(2, 1)),
        Z(1) => return None,
        Z(2) => CvBasis::Gen(B(1, 2)),
        H(1) => CvBasis::Iota(Q(1)),
        H(2) => CvBasis::Gen(B(1, 2)),
        _ => unreachable!(),
    })
}

fn cv_upper_q1(g: CvGen) -> Option<CvBasis> {
    Some(match g {
        A(1, 1) => CvBasis::Gen(A(1, 1)),
        A(1, 2) => return None,
        A(2, 1) => CvBasis::Iota(Q(1)),
        A(2, 2) => CvBasis::Gen(B(1, 1)),
        B(1, 1) => CvBasis::Gen(B(1, 1)),
        B(1, 2) => return None,
        B(2, 1) => CvBasis::Iota(P(1)),
        B(2, 2) => CvBasis::Gen(A(1, 1)),
        G(1) => CvBasis::Gen(A(1, 1)),
        G(2) => CvBasis::Iota(Q(1)),
        D(1) => return None,
        D(2) => CvBasis::Gen(A(1, 1)),
        Z(1) => CvBasis::Gen(B(1, 1)),
        Z(2) => return None,
        H(1) => CvBasis::Iota(Q(1)),
        H(2) => CvBasis::Gen(B(1, 1)),
        _ => unreachable!(),
    })
}

/// Drop value `(ι_F)_*(b)` for an arbitrary 1-cell F and basis cell b,
/// derived from the printed rows by the 1 ↔ 2 symmetry and extended
/// multiplicatively to the composite basis cells.
fn cv_lower(f: CvObj, b: CvBasis) -> Option<CvBasis> {
    match b {
        CvBasis::Iota(o) => Some(CvBasis::Iota(cv_compose_obj(f, o))),
        CvBasis::Gen(g) => match f {
            V => Some(CvBasis::Gen(g)),
            P(1) => cv_lower_p1(g),
            Q(1) => cv_lower_q1(g),
            P(2) => cv_lower_p1(swap_gen(g)).map(swap_basis),
            Q(2) => cv_lower_q1(swap_gen(g)).map(swap_basis),
            _ => unreachable!(),
        },
        CvBasis::Word2(s, fe) => {
            let vs = cv_lower(f, CvBasis::Gen(s))?;
            let vf = cv_lower(f, CvBasis::Gen(fe))?;
            compose_basis(vs, vf)
        }
    }
}

fn cv_upper(f: CvObj, b: CvBasis) -> Option<CvBasis> {
    match b {
        CvBasis::Iota(o) => Some(CvBasis::Iota(cv_compose_obj(o, f))),
        CvBasis::Gen(g) => match f {
            V => Some(CvBasis::Gen(g)),
            P(1) => cv_upper_p1(g),
            Q(1) => cv_upper_q1(g),
            P(2) => cv_upper_p1(swap_gen(g)).map(swap_basis),
            Q(2) => cv_upper_q1(swap_gen(g)).map(swap_basis),
            _ => unreachable!(),
        },
        CvBasis::Word2(s, fe) => {
            let vs = cv_upper(f, CvBasis::Gen(s))?;
            let vf = cv_upper(f, CvBasis::Gen(fe))?;
            compose_basis(vs, vf)
        }
    }
}

fn obj_name(o: CvObj) -> &'static str {
    match o {
        V => "V",
        P(1) => "P1",
        P(2) => "P2",
        Q(1) => "Q1",
        Q(2) => "Q2",
        _ => unreachable!(),
    }
}

fn basis_name(b: CvBasis) -> String {
    fn gen_name(g: CvGen) -> String {
        match g {
            A(i, j) => format!("a{i}{j}"),
            B(i, j) => format!("b{i}{j}"),
            G(i) => format!("g{i}"),
            D(i) => format!("d{i}"),
            Z(i) => format!("z{i}"),
            H(i) => format!("h{i}"),
        }
    }
    match b {
        CvBasis::Iota(o) => format!("i{}", obj_name(o)),
        CvBasis::Gen(g) => gen_name(g),
        CvBasis::Word2(Z(k), G(i)) => format!("p{i}{k}"),
        CvBasis::Word2(H(k), D(i)) => format!("q{i}{k}"),
        CvBasis::Word2(s, f) => format!("{}*{}", gen_name(s), gen_name(f)),
    }
}

/// Assembles the transcribed C_V tables into a presentation: 25 basis
/// 2-cells over the five indecomposables, vertical composition from the
/// printed rules, and the horizontal tables with the 1 ↔ 2 symmetry.
pub fn fixture_cv() -> Result<TwoCatPresentation, ConstructionError> {
    let objs = [V, P(1), P(2), Q(1), Q(2)];
    let mut quiver = TwoQuiver::new();
    let vx = quiver.add_vertex("*")?;
    let mut edge_of: BTreeMap<CvObj, EdgeIx> = BTreeMap::new();
    for &o in &objs {
        edge_of.insert(o, quiver.add_edge(obj_name(o), vx, vx)?);
    }
    quiver.set_stationary(vx, edge_of[&V])?;
    let mut rw = BTreeMap::new();
    for &a in &objs {
        for &b in &objs {
            rw.insert((edge_of[&a], edge_of[&b]), vec![edge_of[&cv_compose_obj(a, b)]]);
        }
    }
    let (licit, _) = LicitPresentation::certify(quiver, rw)?;
    let q = licit.quiver();

    // basis cells
    let gens: Vec<CvGen> = {
        let mut v = Vec::new();
        for i in 1u8..=2 {
            for j in 1u8..=2 {
                v.push(A(i, j));
            }
        }
        for i in 1u8..=2 {
            for j in 1u8..=2 {
                v.push(B(i, j));
            }
        }
        for i in 1u8..=2 {
            v.push(G(i));
            v.push(D(i));
            v.push(Z(i));
            v.push(H(i));
        }
        v
    };
    let mut basis_list: Vec<CvBasis> = objs.iter().map(|&o| CvBasis::Iota(o)).collect();
    basis_list.extend(gens.iter().map(|&g| CvBasis::Gen(g)));
    basis_list.push(CvBasis::Word2(Z(2), G(1))); // p12
    basis_list.push(CvBasis::Word2(Z(1), G(2))); // p21
    basis_list.push(CvBasis::Word2(H(2), D(1))); // q12
    basis_list.push(CvBasis::Word2(H(1), D(2))); // q21

    let ix_of = |b: CvBasis| -> BasisIx {
        BasisIx(basis_list.iter().position(|&x| x == b).expect("basis member") as u32)
    };
    let cells: Vec<BasisCell> = basis_list
        .iter()
        .map(|&b| BasisCell {
            name: basis_name(b),
            src: edge_of[&basis_src(b)],
            tgt: edge_of[&basis_tgt(b)],
        })
        .collect();
    let mut homs: BTreeMap<(EdgeIx, EdgeIx), Vec<BasisIx>> = BTreeMap::new();
    for (i, &b) in basis_list.iter().enumerate() {
        homs.entry((edge_of[&basis_src(b)], edge_of[&basis_tgt(b)]))
            .or_default()
            .push(BasisIx(i as u32));
    }
    for &f in edge_of.values() {
        for &g in edge_of.values() {
            homs.entry((f, g)).or_default();
        }
    }

    let elt_of = |b: Option<CvBasis>, src: CvObj, tgt: CvObj| -> HomElt {
        match b {
            None => HomElt::zero(edge_of[&src], edge_of[&tgt]),
            Some(x) => {
                debug_assert_eq!(basis_src(x), src);
                debug_assert_eq!(basis_tgt(x), tgt);
                HomElt::single(edge_of[&src], edge_of[&tgt], ix_of(x), Rat::one())
            }
        }
    };

    let mut vcomp = BTreeMap::new();
    for &later in &basis_list {
        for &first in &basis_list {
            if basis_tgt(first) != basis_src(later) {
                continue;
            }
            let prod = compose_basis(later, first);
            vcomp.insert(
                (ix_of(later), ix_of(first)),
                elt_of(prod, basis_src(first), basis_tgt(later)),
            );
        }
    }

    let mut identities = BTreeMap::new();
    for &o in &objs {
        identities.insert(edge_of[&o], ix_of(CvBasis::Iota(o)));
    }

    let mut lower: BTreeMap<(EdgeIx, BasisIx), PresCell> = BTreeMap::new();
    let mut upper: BTreeMap<(EdgeIx, BasisIx), PresCell> = BTreeMap::new();
    for &f in &objs {
        for &b in &basis_list {
            let bs = basis_src(b);
            let bt = basis_tgt(b);
            // every 1-cell lives over the single 0-cell, so both apply
            let ls = cv_compose_obj(f, bs);
            let lt = cv_compose_obj(f, bt);
            lower.insert(
                (edge_of[&f], ix_of(b)),
                Cell {
                    src: OneCell::edge(q, edge_of[&ls]),
                    tgt: OneCell::edge(q, edge_of[&lt]),
                    entries: vec![elt_of(cv_lower(f, b), ls, lt)],
                },
            );
            let us = cv_compose_obj(bs, f);
            let ut = cv_compose_obj(bt, f);
            upper.insert(
                (edge_of[&f], ix_of(b)),
                Cell {
                    src: OneCell::edge(q, edge_of[&us]),
                    tgt: OneCell::edge(q, edge_of[&ut]),
                    entries: vec![elt_of(cv_upper(f, b), us, ut)],
                },
            );
        }
    }

    let pres = TwoCatPresentation { licit, cells, homs, vcomp, identities, lower, upper };
    pres.validate().map_err(|e| ConstructionError::Other(e.to_string()))?;
    Ok(pres)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_bundle_builds() {
        let fx = fixture_m().unwrap();
        let cat = fx.build().unwrap();
        assert_eq!(cat.quot.nilpotency_degree, 4);
    }

    #[test]
    fn cv_vertical_rules_match_the_table() {
        // η_j ∘ γ_i = α_{ij}
        assert_eq!(
            compose_basis(CvBasis::Gen(H(2)), CvBasis::Gen(G(1))),
            Some(CvBasis::Gen(A(1, 2)))
        );
        // γ_j ∘ β_{ij} = δ_i
        assert_eq!(
            compose_basis(CvBasis::Gen(G(2)), CvBasis::Gen(B(1, 2))),
            Some(CvBasis::Gen(D(1)))
        );
        // β_{ij} ∘ η_i = ζ_j
        assert_eq!(
            compose_basis(CvBasis::Gen(B(1, 2)), CvBasis::Gen(H(1))),
            Some(CvBasis::Gen(Z(2)))
        );
        // ζ_j ∘ δ_i = 0
        assert_eq!(compose_basis(CvBasis::Gen(Z(2)), CvBasis::Gen(D(1))), None);
        // α_{ji} ∘ β_{ij} = 0
        assert_eq!(compose_basis(CvBasis::Gen(A(2, 1)), CvBasis::Gen(B(1, 2))), None);
        // α_{jk} ∘ β_{ij} = η_k ∘ δ_i
        assert_eq!(
            compose_basis(CvBasis::Gen(A(2, 2)), CvBasis::Gen(B(1, 2))),
            Some(CvBasis::Word2(H(2), D(1)))
        );
    }

    #[test]
    fn cv_fixture_validates() {
        let pres = fixture_cv().unwrap();
        assert_eq!(pres.cells.len(), 25);
        pres.validate().unwrap();
    }

    #[test]
    fn cv_one_composition_rows() {
        // P1 ∘ P2 = Q2 and Q1 ∘ Q2 = P2, straight from the table
        let pres = fixture_cv().unwrap();
        let q = pres.quiver();
        let e = |n: &str| q.edge_ix(n).unwrap();
        assert_eq!(pres.licit.rewrite(e("P1"), e("P2")), &[e("Q2")]);
        assert_eq!(pres.licit.rewrite(e("Q1"), e("Q2")), &[e("P2")]);
        // δ and η compose to the α classes: η_j ∘ γ_i = α_{ij}
        let h2 = pres.cell_by_name("h2").unwrap();
        let g1 = pres.cell_by_name("g1").unwrap();
        let a12 = pres.cell_by_name("a12").unwrap();
        let value = &pres.vcomp[&(h2, g1)];
        assert_eq!(value.terms.len(), 1);
        assert!(value.terms.contains_key(&a12));
    }

    #[test]
    fn ca_a2_quotient_identifies_the_two_length_two_paths() {
        let fx = fixture_ca_a2().unwrap();
        let cat_quot =
            crate::quotient::build_quotient(&fx.licit, fx.ideal.as_ref().unwrap()).unwrap();
        let q = fx.licit.quiver();
        let ffe = q.edge_ix("Ffe").unwrap();
        let fef = q.edge_ix("Fef").unwrap();
        let i = q.edge_ix("I").unwrap();
        // β₁∘γ₁ = β₂∘γ₂ leaves a single class F_fe → I
        assert_eq!(cat_quot.dim(ffe, i), 1);
        // and the two length-3 paths F_fe → F_ef collapse to one class
        assert_eq!(cat_quot.dim(ffe, fef), 1);
    }

    #[test]
    fn xquiver_has_no_ideal() {
        let fx = fixture_xquiver().unwrap();
        assert!(fx.ideal.is_none());
        assert!(matches!(fx.build(), Err(ConstructionError::NonFinitary(_))));
    }

    #[test]
    fn fixture_lookup_by_name() {
        for name in ["M", "SA_A2", "CA_A2", "XQUIVER"] {
            assert!(fixture(name).is_ok(), "{name}");
        }
        assert!(fixture("nope").is_err());
    }
}

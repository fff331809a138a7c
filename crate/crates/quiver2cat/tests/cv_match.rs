//! The transcribed C_V tables against the bimodule 2-category computed from
//! the cyclic Kronecker algebra: the two presentations must agree tablewise
//! after matching basis cells (each hom space is 1-dimensional) and solving
//! for the per-cell rescaling the different basis choices introduce.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use quiver2cat::constructions::fixtures::fixture_cv;
use quiver2cat::constructions::projective::{projective_two_category, AlgebraPresentation};
use quiver2cat::exactlin::Rat;
use quiver2cat::quiver2::EdgeIx;
use quiver2cat::twocat::{BasisIx, TwoCatPresentation};

const OBJ_MAP: [(&str, &str); 5] =
    [("V", "I"), ("P1", "Fee"), ("P2", "Fff"), ("Q1", "Ffe"), ("Q2", "Fef")];

struct Match<'a> {
    fix: &'a TwoCatPresentation,
    comp: &'a TwoCatPresentation,
    edge_map: BTreeMap<EdgeIx, EdgeIx>,
    cell_map: BTreeMap<BasisIx, BasisIx>,
}

impl<'a> Match<'a> {
    fn new(fix: &'a TwoCatPresentation, comp: &'a TwoCatPresentation) -> Self {
        let mut edge_map = BTreeMap::new();
        for (a, b) in OBJ_MAP {
            edge_map.insert(
                fix.quiver().edge_ix(a).unwrap(),
                comp.quiver().edge_ix(b).unwrap(),
            );
        }
        let mut cell_map = BTreeMap::new();
        for (&(f, g), cells) in &fix.homs {
            let cf = comp.hom(edge_map[&f], edge_map[&g]);
            assert_eq!(cells.len(), 1, "fixture hom is 1-dimensional");
            assert_eq!(cf.len(), 1, "computed hom is 1-dimensional");
            cell_map.insert(cells[0], cf[0]);
        }
        Match { fix, comp, edge_map, cell_map }
    }
}

#[test]
fn kronecker_two_category_matches_the_cv_tables() {
    let fix = fixture_cv().unwrap();
    let comp = projective_two_category(&AlgebraPresentation::cyclic_kronecker()).unwrap();
    let m = Match::new(&fix, &comp);

    // 1-composition tables correspond
    for (&(p, q), target) in m.fix.licit.rewrites() {
        let tc = m.comp.licit.rewrite(m.edge_map[&p], m.edge_map[&q]);
        let mapped: Vec<EdgeIx> = target.iter().map(|e| m.edge_map[e]).collect();
        assert_eq!(mapped, tc, "binding table mismatch at ({p:?}, {q:?})");
    }

    // identities correspond
    for (&f, &b) in &m.fix.identities {
        assert_eq!(m.cell_map[&b], m.comp.identities[&m.edge_map[&f]]);
    }

    // Solve for a rescaling s(cell) making the structure constants and the
    // horizontal tables agree; identities are pinned to 1.
    //
    // vcomp:  s(l) s(f) c' = c s(w)      (fixture l∘f = c w)
    // tables: s(b) c' = c s(w)           (fixture F_*(b) = c w)
    #[derive(Debug)]
    enum Constraint {
        Product(BasisIx, BasisIx, BasisIx, Rat), // s(a)·s(b) = k·s(w)
        Direct(BasisIx, BasisIx, Rat),           // s(b) = k·s(w)
    }
    let mut constraints = Vec::new();
    for (&(l, f), value) in &m.fix.vcomp {
        let cv = &m.comp.vcomp[&(m.cell_map[&l], m.cell_map[&f])];
        match (value.terms.len(), cv.terms.len()) {
            (0, 0) => {}
            (1, 1) => {
                let (&w, c) = value.terms.iter().next().unwrap();
                let (&wc, cc) = cv.terms.iter().next().unwrap();
                assert_eq!(m.cell_map[&w], wc, "product lands on a different cell");
                constraints.push(Constraint::Product(l, f, w, c / cc));
            }
            other => panic!("support mismatch in vertical table: {other:?}"),
        }
    }
    let mut table_constraints = |fix_table: &BTreeMap<(EdgeIx, BasisIx), quiver2cat::twocat::PresCell>,
                                 comp_table: &BTreeMap<(EdgeIx, BasisIx), quiver2cat::twocat::PresCell>| {
        for (&(f, b), cell) in fix_table {
            let cc = &comp_table[&(m.edge_map[&f], m.cell_map[&b])];
            assert_eq!(cell.entries.len(), 1);
            assert_eq!(cc.entries.len(), 1);
            let e = &cell.entries[0];
            let ec = &cc.entries[0];
            match (e.terms.len(), ec.terms.len()) {
                (0, 0) => {}
                (1, 1) => {
                    let (&w, c) = e.terms.iter().next().unwrap();
                    let (&wc, ccf) = ec.terms.iter().next().unwrap();
                    assert_eq!(m.cell_map[&w], wc, "table value lands on a different cell");
                    constraints.push(Constraint::Direct(b, w, c / ccf));
                }
                other => panic!("support mismatch in horizontal table: {other:?}"),
            }
        }
    };
    table_constraints(&m.fix.lower, &m.comp.lower);
    table_constraints(&m.fix.upper, &m.comp.upper);

    let mut s: BTreeMap<BasisIx, Rat> = BTreeMap::new();
    for &b in m.fix.identities.values() {
        s.insert(b, Rat::one());
    }
    // fixpoint solve
    loop {
        let mut progress = false;
        for c in &constraints {
            match c {
                Constraint::Direct(b, w, k) => {
                    match (s.get(b).cloned(), s.get(w).cloned()) {
                        (None, Some(sw)) => {
                            s.insert(*b, k * sw);
                            progress = true;
                        }
                        (Some(sb), None) => {
                            s.insert(*w, sb / k);
                            progress = true;
                        }
                        _ => {}
                    }
                }
                Constraint::Product(a, b, w, k) => {
                    let (sa, sb, sw) = (s.get(a).cloned(), s.get(b).cloned(), s.get(w).cloned());
                    match (sa, sb, sw) {
                        (Some(x), Some(y), None) => {
                            s.insert(*w, x * y / keep(k));
                            progress = true;
                        }
                        (Some(x), None, Some(z)) => {
                            s.insert(*b, k * z / x);
                            progress = true;
                        }
                        (None, Some(y), Some(z)) => {
                            s.insert(*a, k * z / y);
                            progress = true;
                        }
                        _ => {}
                    }
                }
            }
        }
        if !progress {
            break;
        }
    }
    fn keep(k: &Rat) -> Rat {
        k.clone()
    }
    assert_eq!(s.len(), m.fix.cells.len(), "every cell is rescaled");
    for v in s.values() {
        assert!(!v.is_zero());
    }
    // verify all constraints
    for c in &constraints {
        match c {
            Constraint::Direct(b, w, k) => {
                assert_eq!(&s[b], &(k * &s[w]), "direct constraint violated for {b:?}");
            }
            Constraint::Product(a, b, w, k) => {
                assert_eq!(&(&s[a] * &s[b]), &(k * &s[w]), "product constraint violated");
            }
        }
    }
}

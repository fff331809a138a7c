//! dim Rad/Rad² is independent of the chosen hom bases: rerun the radical
//! analysis after a random (seeded) invertible change of basis on every
//! hom space and compare the per-pair dimensions.

use std::collections::BTreeMap;

use num_traits::Zero;
use quiver2cat::cells::Cell;
use quiver2cat::constructions::fixtures::fixture_m;
use quiver2cat::exactlin::{solve_exact, Matrix, Rat};
use quiver2cat::gabriel::radical_analysis;
use quiver2cat::quiver2::EdgeIx;
use quiver2cat::twocat::{build_two_category, BasisIx, HomElt, TwoCatPresentation};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Invertible change of basis per hom pair that keeps every designated
/// identity cell fixed (unit row and column at its coordinate).
fn random_transforms(
    pres: &TwoCatPresentation,
    rng: &mut StdRng,
) -> BTreeMap<(EdgeIx, EdgeIx), Matrix> {
    let mut out = BTreeMap::new();
    for (&(f, g), cells) in &pres.homs {
        let n = cells.len();
        if n == 0 {
            out.insert((f, g), Matrix::zero(0, 0));
            continue;
        }
        let fixed: Vec<usize> = cells
            .iter()
            .enumerate()
            .filter(|(_, b)| pres.identities.values().any(|i| i == *b))
            .map(|(i, _)| i)
            .collect();
        // unitriangular with random integer off-diagonal entries away from
        // the fixed coordinates; always invertible
        let mut t = Matrix::identity(n);
        for i in 0..n {
            for j in 0..i {
                if fixed.contains(&i) || fixed.contains(&j) {
                    continue;
                }
                *t.at_mut(i, j) = Rat::from_integer(rng.gen_range(-2i64..=2).into());
            }
        }
        out.insert((f, g), t);
    }
    out
}

fn transform(pres: &TwoCatPresentation, ts: &BTreeMap<(EdgeIx, EdgeIx), Matrix>) -> TwoCatPresentation {
    let coords = |e: &HomElt| -> Vec<Rat> {
        pres.hom(e.src, e.tgt)
            .iter()
            .map(|b| e.terms.get(b).cloned().unwrap_or_else(Rat::zero))
            .collect()
    };
    // old coordinates of the new basis vectors are the rows of T; an old
    // element with coordinates v has new coordinates x where Tᵀ x = v
    let to_new = |e: &HomElt| -> HomElt {
        let t = &ts[&(e.src, e.tgt)];
        let v = coords(e);
        if v.is_empty() {
            return e.clone();
        }
        let x = solve_exact(&t.transpose(), &v).expect("invertible transform");
        let mut out = HomElt::zero(e.src, e.tgt);
        for (i, c) in x.into_iter().enumerate() {
            if !c.is_zero() {
                out.add_term(pres.hom(e.src, e.tgt)[i], c);
            }
        }
        out
    };
    // expand a new basis cell into old coordinates
    let new_in_old = |b: BasisIx| -> HomElt {
        let cell = pres.cell(b);
        let list = pres.hom(cell.src, cell.tgt);
        let pos = list.iter().position(|x| *x == b).unwrap();
        let t = &ts[&(cell.src, cell.tgt)];
        let mut out = HomElt::zero(cell.src, cell.tgt);
        for (j, &old) in list.iter().enumerate() {
            let c = t.at(pos, j);
            if !c.is_zero() {
                out.add_term(old, c.clone());
            }
        }
        out
    };
    let calc = pres.calc();
    let mut vcomp = BTreeMap::new();
    for &(l, f) in pres.vcomp.keys() {
        let prod = {
            use quiver2cat::cells::TwoCalc;
            calc.compose(&new_in_old(l), &new_in_old(f)).unwrap()
        };
        vcomp.insert((l, f), to_new(&prod));
    }
    // tables are linear in the basis cell: recompute from the old tables
    // applied to the expansion of each new cell
    let mut lower = BTreeMap::new();
    for (&(fx, b), _) in &pres.lower {
        let expansion = new_in_old(b);
        let mut entries: Option<Vec<HomElt>> = None;
        let mut src = None;
        let mut tgt = None;
        for (&old, c) in &expansion.terms {
            let table = &pres.lower[&(fx, old)];
            src = Some(table.src.clone());
            tgt = Some(table.tgt.clone());
            let scaled: Vec<HomElt> = table.entries.iter().map(|e| e.scale(c)).collect();
            entries = Some(match entries {
                None => scaled,
                Some(a) => a.iter().zip(&scaled).map(|(x, y)| x.add(y)).collect(),
            });
        }
        let entries = entries.unwrap().iter().map(&to_new).collect();
        lower.insert((fx, b), Cell { src: src.unwrap(), tgt: tgt.unwrap(), entries });
    }
    let mut upper = BTreeMap::new();
    for (&(fx, b), _) in &pres.upper {
        let expansion = new_in_old(b);
        let mut entries: Option<Vec<HomElt>> = None;
        let mut src = None;
        let mut tgt = None;
        for (&old, c) in &expansion.terms {
            let table = &pres.upper[&(fx, old)];
            src = Some(table.src.clone());
            tgt = Some(table.tgt.clone());
            let scaled: Vec<HomElt> = table.entries.iter().map(|e| e.scale(c)).collect();
            entries = Some(match entries {
                None => scaled,
                Some(a) => a.iter().zip(&scaled).map(|(x, y)| x.add(y)).collect(),
            });
        }
        let entries = entries.unwrap().iter().map(&to_new).collect();
        upper.insert((fx, b), Cell { src: src.unwrap(), tgt: tgt.unwrap(), entries });
    }
    TwoCatPresentation {
        licit: pres.licit.clone(),
        cells: pres.cells.clone(),
        homs: pres.homs.clone(),
        vcomp,
        identities: pres.identities.clone(),
        lower,
        upper,
    }
}

#[test]
fn rad_top_dimensions_survive_basis_changes() {
    let cat = fixture_m().unwrap().build().unwrap();
    let pres = build_two_category(&cat).unwrap();
    let base = radical_analysis(&pres).unwrap();
    let dims = |a: &quiver2cat::gabriel::RadicalAnalysis| -> BTreeMap<(EdgeIx, EdgeIx), usize> {
        a.rad
            .iter()
            .map(|(&k, rows)| {
                (k, rows.len() - a.rad_square.get(&k).map_or(0, Vec::len))
            })
            .collect()
    };
    let base_dims = dims(&base);
    let mut rng = StdRng::seed_from_u64(20260809);
    for _ in 0..3 {
        let ts = random_transforms(&pres, &mut rng);
        let transformed = transform(&pres, &ts);
        transformed.validate().unwrap();
        let analysis = radical_analysis(&transformed).unwrap();
        assert_eq!(dims(&analysis), base_dims);
        assert_eq!(analysis.nilpotency, base.nilpotency);
    }
}

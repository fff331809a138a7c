//! Builders for the example families: ordered-monoid 2-categories, Catalan
//! monoids, projective (semi)categories over quiver algebras, and the
//! hand-transcribed fixtures.

pub mod fixtures;
pub mod projective;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::drop::{DropTable, QuiverCategory};
use crate::exactlin::Rat;
use crate::pathcat::{PathVector, TwoCell, TwoPath};
use crate::quiver2::{
    two_level_acyclic, EdgeIx, LicitError, LicitPresentation, QuiverError, TwoEdgeIx, TwoQuiver,
};
use crate::quotient::{build_quotient, AdmissibleIdeal, QuotientError};
use num_traits::One;

pub use projective::{projective_semicategory, projective_two_category, AlgebraPresentation};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Licit(#[from] LicitError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Calc(#[from] crate::cells::CalcError),
    #[error("monoid is not associative at ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("declared unit is not a unit")]
    BadUnit,
    #[error("order relation is not a partial order: {0}")]
    BadOrder(String),
    #[error("order is not compatible with multiplication at x={x}, y={y}, z={z}")]
    IncompatibleOrder { x: String, y: String, z: String },
    #[error("the quiver has a 2-level cycle and no nilpotency degree was supplied")]
    NonFinitary(Vec<String>),
    #[error("no admissible ideal supplied")]
    MissingIdeal,
    #[error("{0}")]
    Other(String),
}

/// A bound 2-quiver bundle: everything needed to assemble a quiver
/// 2-category. The ideal is absent for fixtures that present a bare path
/// category (the non-finitary example ships without one).
#[derive(Debug, Clone)]
pub struct QuiverBundle {
    pub name: String,
    pub licit: LicitPresentation,
    pub ideal: Option<AdmissibleIdeal>,
    pub lower: BTreeMap<(EdgeIx, TwoEdgeIx), TwoCell>,
    pub upper: BTreeMap<(EdgeIx, TwoEdgeIx), TwoCell>,
}

impl QuiverBundle {
    /// Assembles the quiver 2-category: quotient normal forms plus the
    /// validated drop table. Refuses 2-level-cyclic quivers without a
    /// declared nilpotency degree.
    pub fn build(&self) -> Result<QuiverCategory, ConstructionError> {
        let ideal = match &self.ideal {
            Some(i) => i.clone(),
            None => {
                let q = self.licit.quiver();
                match two_level_acyclic(q) {
                    Ok(()) => {
                        // all paths are shorter than #2-edges + 2
                        let bound = q.two_edge_count() + 2;
                        AdmissibleIdeal::new(Vec::new(), bound)
                    }
                    Err(cycle) => {
                        return Err(ConstructionError::NonFinitary(
                            cycle.iter().map(|&a| q.two_edge_name(a).to_string()).collect(),
                        ))
                    }
                }
            }
        };
        let quot = build_quotient(&self.licit, &ideal)?;
        let drop =
            DropTable::from_entries(&self.licit, &quot, self.lower.clone(), self.upper.clone())?;
        Ok(QuiverCategory { licit: self.licit.clone(), ideal, quot, drop })
    }
}

/// A finite monoid with a compatible partial order.
#[derive(Debug, Clone)]
pub struct OrderedMonoid {
    pub elements: Vec<String>,
    pub unit: usize,
    /// table[i * n + j] = index of the product x_i · x_j
    pub table: Vec<usize>,
    /// le[i * n + j] = (x_i ≤ x_j)
    pub le: Vec<bool>,
}

impl OrderedMonoid {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.len() + j]
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i * self.len() + j]
    }

    /// Associativity, unit, partial-order and compatibility checks.
    pub fn validate(&self) -> Result<(), ConstructionError> {
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)) {
                        return Err(ConstructionError::NotAssociative(
                            self.elements[i].clone(),
                            self.elements[j].clone(),
                            self.elements[k].clone(),
                        ));
                    }
                }
            }
        }
        for i in 0..n {
            if self.mul(self.unit, i) != i || self.mul(i, self.unit) != i {
                return Err(ConstructionError::BadUnit);
            }
        }
        for i in 0..n {
            if !self.le(i, i) {
                return Err(ConstructionError::BadOrder(format!(
                    "not reflexive at {}",
                    self.elements[i]
                )));
            }
            for j in 0..n {
                if i != j && self.le(i, j) && self.le(j, i) {
                    return Err(ConstructionError::BadOrder(format!(
                        "not antisymmetric at ({}, {})",
                        self.elements[i], self.elements[j]
                    )));
                }
                for k in 0..n {
                    if self.le(i, j) && self.le(j, k) && !self.le(i, k) {
                        return Err(ConstructionError::BadOrder(format!(
                            "not transitive at ({}, {}, {})",
                            self.elements[i], self.elements[j], self.elements[k]
                        )));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !self.le(x, y) {
                    continue;
                }
                for z in 0..n {
                    if !self.le(self.mul(x, z), self.mul(y, z))
                        || !self.le(self.mul(z, x), self.mul(z, y))
                    {
                        return Err(ConstructionError::IncompatibleOrder {
                            x: self.elements[x].clone(),
                            y: self.elements[y].clone(),
                            z: self.elements[z].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Cover pairs (x, y): x < y with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x == y || !self.le(x, y) {
                    continue;
                }
                let blocked = (0..n)
                    .any(|z| z != x && z != y && self.le(x, z) && self.le(z, y));
                if !blocked {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// The n-th Catalan monoid: all order-preserving and order-decreasing full
/// transformations of {1, …, n} under composition, with the pointwise
/// order. Compatibility is machine-verified before the monoid is returned.
pub fn catalan_monoid(n: usize) -> Result<OrderedMonoid, ConstructionError> {
    assert!(n >= 1, "n must be positive");
    // enumerate all maps f with f(i) ≤ f(j) for i ≤ j and f(i) ≤ i
    let mut maps: Vec<Vec<usize>> = Vec::new();
    let mut cur = vec![0usize; n];
    loop {
        let ok = (0..n).all(|i| cur[i] <= i) && (1..n).all(|i| cur[i - 1] <= cur[i]);
        if ok {
            maps.push(cur.clone());
        }
        // odometer
        let mut pos = n;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < n {
                break;
            }
            cur[pos] = 0;
        }
        if cur.iter().all(|&c| c == 0) {
            break;
        }
    }
    maps.sort();
    let size = maps.len();
    let index = |m: &Vec<usize>| maps.binary_search(m).expect("closed under composition");
    let elements: Vec<String> = maps
        .iter()
        .map(|m| m.iter().map(|&v| (v + 1).to_string()).collect::<Vec<_>>().join(""))
        .collect();
    let mut table = vec![0usize; size * size];
    for (i, f) in maps.iter().enumerate() {
        for (j, g) in maps.iter().enumerate() {
            // (f · g)(x) = f(g(x))
            let comp: Vec<usize> = (0..n).map(|x| f[g[x]]).collect();
            table[i * size + j] = index(&comp);
        }
    }
    let mut le = vec![false; size * size];
    for (i, f) in maps.iter().enumerate() {
        for (j, g) in maps.iter().enumerate() {
            le[i * size + j] = f.iter().zip(g).all(|(a, b)| a <= b);
        }
    }
    let unit: Vec<usize> = (0..n).collect();
    let m = OrderedMonoid { elements, unit: index(&unit), table, le };
    m.validate()?;
    Ok(m)
}

/// Builds the quiver 2-category of an ordered monoid: 1-edges per element
/// (stationary at the unit), the binding `F_x F_y = F_{xy}`, one 2-edge per
/// cover pair, converging-path differences as the admissible ideal, and
/// drop entries read off the multiplication.
pub fn monoid_two_category(m: &OrderedMonoid) -> Result<QuiverBundle, ConstructionError> {
    m.validate()?;
    let n = m.len();
    let mut quiver = TwoQuiver::new();
    let v = quiver.add_vertex("*")?;
    let mut edge_of = Vec::with_capacity(n);
    for name in &m.elements {
        edge_of.push(quiver.add_edge(&format!("F_{name}"), v, v)?);
    }
    quiver.set_stationary(v, edge_of[m.unit])?;
    let covers = m.covers();
    let mut two_edge_of: BTreeMap<(usize, usize), TwoEdgeIx> = BTreeMap::new();
    for &(x, y) in &covers {
        let name = format!("eps({},{})", m.elements[x], m.elements[y]);
        let a = quiver.add_two_edge(&name, edge_of[x], edge_of[y])?;
        two_edge_of.insert((x, y), a);
    }
    let mut rewrites = BTreeMap::new();
    for p in 0..n {
        for q in 0..n {
            rewrites.insert((edge_of[p], edge_of[q]), vec![edge_of[m.mul(p, q)]]);
        }
    }
    let (licit, _) = LicitPresentation::certify(quiver, rewrites)?;
    let q = licit.quiver();

    // cover-chain enumeration between comparable pairs
    let chains_between = |x: usize, z: usize| -> Vec<Vec<TwoEdgeIx>> {
        // all cover chains x ⋖ … ⋖ z as 2-edge sequences (application order)
        let mut out = Vec::new();
        let mut stack: Vec<(usize, Vec<TwoEdgeIx>)> = vec![(x, Vec::new())];
        while let Some((at, path)) = stack.pop() {
            if at == z && !path.is_empty() {
                out.push(path);
                continue;
            }
            for &(a, b) in &covers {
                if a == at && m.le(b, z) {
                    let mut next = path.clone();
                    next.push(two_edge_of[&(a, b)]);
                    stack.push((b, next));
                }
            }
        }
        out.sort();
        out
    };

    // height of the poset = longest cover chain
    let mut height = 0usize;
    for x in 0..n {
        for z in 0..n {
            if x != z && m.le(x, z) {
                for chain in chains_between(x, z) {
                    height = height.max(chain.len());
                }
            }
        }
    }
    let nilpotency = (height + 1).max(2);

    // converging-path differences
    let mut generators = Vec::new();
    for x in 0..n {
        for z in 0..n {
            if x == z || !m.le(x, z) {
                continue;
            }
            let chains = chains_between(x, z);
            if chains.len() < 2 {
                continue;
            }
            let to_path = |chain: &Vec<TwoEdgeIx>| {
                TwoPath::from_application_order(q, chain).expect("cover chain is a path")
            };
            let first = to_path(&chains[0]);
            for other in &chains[1..] {
                let mut gen = PathVector::single(first.clone(), Rat::one());
                gen.add_term(to_path(other), -Rat::one());
                if !gen.is_zero() {
                    generators.push(gen);
                }
            }
        }
    }
    let ideal = AdmissibleIdeal::new(generators, nilpotency);

    // drop entries: F_z applied to ε_{x,y} is the class of any cover chain
    // from zx to zy (resp. xz to yz); the smallest chain is chosen.
    let chain_vector = |from: usize, to: usize| -> PathVector {
        if from == to {
            return PathVector::identity(edge_of[from]);
        }
        let chains = chains_between(from, to);
        let chain = chains.first().expect("compatible order guarantees a chain");
        PathVector::single(
            TwoPath::from_application_order(q, chain).expect("cover chain is a path"),
            Rat::one(),
        )
    };
    let mut lower = BTreeMap::new();
    let mut upper = BTreeMap::new();
    for z in 0..n {
        if z == m.unit {
            continue; // stationary entries are derived
        }
        for &(x, y) in &covers {
            let a = two_edge_of[&(x, y)];
            let lo = TwoCell {
                src: crate::quiver2::OneCell::edge(q, edge_of[m.mul(z, x)]),
                tgt: crate::quiver2::OneCell::edge(q, edge_of[m.mul(z, y)]),
                entries: vec![chain_vector(m.mul(z, x), m.mul(z, y))],
            };
            lower.insert((edge_of[z], a), lo);
            let up = TwoCell {
                src: crate::quiver2::OneCell::edge(q, edge_of[m.mul(x, z)]),
                tgt: crate::quiver2::OneCell::edge(q, edge_of[m.mul(y, z)]),
                entries: vec![chain_vector(m.mul(x, z), m.mul(y, z))],
            };
            upper.insert((edge_of[z], a), up);
        }
    }

    Ok(QuiverBundle { name: "monoid".into(), licit, ideal: Some(ideal), lower, upper })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drop::verify_drop;
    use crate::twocat::{build_two_category, verify_two_category};

    #[test]
    fn catalan_sizes_match_the_catalan_numbers() {
        // independent oracle: C_n = binom(2n, n) / (n + 1)
        fn catalan_number(n: usize) -> usize {
            let mut c: u64 = 1;
            for i in 0..n as u64 {
                c = c * 2 * (2 * i + 1) / (i + 2);
            }
            c as usize
        }
        let expected = [1usize, 2, 5, 14, 42];
        for (i, &e) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(catalan_number(n), e);
            assert_eq!(catalan_monoid(n).unwrap().len(), e, "n = {n}");
        }
    }

    #[test]
    fn trivial_monoid_gives_the_discrete_category() {
        let m = OrderedMonoid {
            elements: vec!["1".into()],
            unit: 0,
            table: vec![0],
            le: vec![true],
        };
        let bundle = monoid_two_category(&m).unwrap();
        let q = bundle.licit.quiver();
        assert_eq!(q.edge_count(), 1);
        assert_eq!(q.two_edge_count(), 0);
        assert!(q.is_stationary(q.edge_ix("F_1").unwrap()));
        let cat = bundle.build().unwrap();
        assert!(verify_drop(&cat).unwrap().certified());
    }

    #[test]
    fn two_element_monoid_passes_the_axiom_suite() {
        // {1, c} with c² = c and c < 1
        let m = OrderedMonoid {
            elements: vec!["1".into(), "c".into()],
            unit: 0,
            table: vec![0, 1, 1, 1],
            le: vec![true, false, true, true], // c ≤ 1, both reflexive
        };
        let bundle = monoid_two_category(&m).unwrap();
        let q = bundle.licit.quiver();
        assert_eq!(q.two_edge_count(), 1); // just ε_{c,1}
        let cat = bundle.build().unwrap();
        assert!(verify_drop(&cat).unwrap().certified());
        let pres = build_two_category(&cat).unwrap();
        let cert = verify_two_category(&pres).unwrap();
        assert!(cert.certified(), "{:?}", cert.failures().collect::<Vec<_>>());
    }

    #[test]
    fn catalan_three_passes_the_axiom_suite() {
        let m = catalan_monoid(3).unwrap();
        assert_eq!(m.len(), 5);
        let bundle = monoid_two_category(&m).unwrap();
        let cat = bundle.build().unwrap();
        let drop_cert = verify_drop(&cat).unwrap();
        assert!(drop_cert.certified(), "{:?}", drop_cert.failures().collect::<Vec<_>>());
        let pres = build_two_category(&cat).unwrap();
        let cert = verify_two_category(&pres).unwrap();
        assert!(cert.certified(), "{:?}", cert.failures().collect::<Vec<_>>());
    }

    #[test]
    fn monoid_drop_entries_do_not_depend_on_the_chain() {
        // build C_3 and compare reduced chain classes along distinct chains
        let m = catalan_monoid(3).unwrap();
        let bundle = monoid_two_category(&m).unwrap();
        let cat = bundle.build().unwrap();
        let q = cat.licit.quiver();
        let n = m.len();
        for x in 0..n {
            for z in 0..n {
                if x == z || !m.le(x, z) {
                    continue;
                }
                // reduce every chain class and compare with the first
                let covers = m.covers();
                let mut chains: Vec<Vec<TwoEdgeIx>> = Vec::new();
                let mut stack: Vec<(usize, Vec<TwoEdgeIx>)> = vec![(x, Vec::new())];
                while let Some((at, path)) = stack.pop() {
                    if at == z && !path.is_empty() {
                        chains.push(path);
                        continue;
                    }
                    for &(a, b) in &covers {
                        if a == at && m.le(b, z) {
                            let mut next = path.clone();
                            let name = format!("eps({},{})", m.elements[a], m.elements[b]);
                            next.push(q.two_edge_ix(&name).unwrap());
                            stack.push((b, next));
                        }
                    }
                }
                let reduced: Vec<PathVector> = chains
                    .iter()
                    .map(|c| {
                        cat.quot.reduce_vector(&PathVector::single(
                            TwoPath::from_application_order(q, c).unwrap(),
                            Rat::one(),
                        ))
                    })
                    .collect();
                for r in &reduced[1..] {
                    assert_eq!(r, &reduced[0]);
                }
            }
        }
    }
}

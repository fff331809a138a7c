//! Exact rational scalars and the dense linear algebra everything else
//! reduces to: reduced row echelon forms, subspace membership, and Jacobson
//! radicals of finite-dimensional associative algebras given by structure
//! constants.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar. Always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactLinError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("structure constants are not associative at basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("declared unit is not a two-sided unit (fails at basis index {index})")]
    BadUnit { index: usize },
    #[error("radical candidate failed certification: {0}")]
    RadicalCertification(String),
    #[error("field not split: the semisimple quotient is not discrete over the rationals ({0})")]
    FieldNotSplit(String),
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Rat>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix { rows: self.rows + other.rows, cols: self.cols, entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }
}

/// Reduced row echelon form together with the pivot column list.
///
/// The row space is preserved; zero rows are dropped from the result, so the
/// number of rows of the returned matrix equals the rank.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        // find a pivot row at or below r
        let Some(p) = (r..a.rows).find(|&i| !a.at(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                let tmp = a.at(p, j).clone();
                *a.at_mut(p, j) = a.at(r, j).clone();
                *a.at_mut(r, j) = tmp;
            }
        }
        let inv = a.at(r, c).clone();
        for j in 0..a.cols {
            let v = a.at(r, j).clone() / inv.clone();
            *a.at_mut(r, j) = v;
        }
        for i in 0..a.rows {
            if i != r && !a.at(i, c).is_zero() {
                let f = a.at(i, c).clone();
                for j in 0..a.cols {
                    let v = a.at(i, j).clone() - f.clone() * a.at(r, j);
                    *a.at_mut(i, j) = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.rows {
            break;
        }
    }
    a.entries.truncate(r * a.cols);
    a.rows = r;
    (a, pivots)
}

/// Decides whether `v` lies in the row space of `space` (which must be in
/// reduced echelon form with pivot list `pivots`) and returns the coordinates
/// with respect to the echelon rows when it does.
pub fn membership(
    space: &Matrix,
    pivots: &[usize],
    v: &[Rat],
) -> Result<Option<Vec<Rat>>, ExactLinError> {
    if v.len() != space.cols {
        return Err(ExactLinError::DimensionMismatch { expected: space.cols, got: v.len() });
    }
    let mut rem: Vec<Rat> = v.to_vec();
    let mut coords = vec![Rat::zero(); space.rows];
    for (row, &pc) in pivots.iter().enumerate() {
        let c = rem[pc].clone();
        if c.is_zero() {
            continue;
        }
        coords[row] = c.clone();
        for j in 0..space.cols {
            let s = space.at(row, j);
            if !s.is_zero() {
                rem[j] = rem[j].clone() - c.clone() * s;
            }
        }
    }
    if rem.iter().all(Rat::is_zero) {
        Ok(Some(coords))
    } else {
        Ok(None)
    }
}

/// Row-space span with incremental insertion, used for closures.
#[derive(Debug, Clone)]
pub struct Span {
    pub dim_ambient: usize,
    pub basis: Matrix,
    pub pivots: Vec<usize>,
}

impl Span {
    pub fn empty(dim_ambient: usize) -> Self {
        Span { dim_ambient, basis: Matrix::zero(0, dim_ambient), pivots: Vec::new() }
    }

    pub fn from_rows(dim_ambient: usize, rows: &[Vec<Rat>]) -> Self {
        let mut s = Span::empty(dim_ambient);
        for r in rows {
            s.insert(r);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    /// Inserts a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim_ambient);
        if membership(&self.basis, &self.pivots, v).unwrap().is_some() {
            return false;
        }
        let stacked = self.basis.vstack(&Matrix::from_rows(vec![v.to_vec()]));
        let (b, p) = rref(&stacked);
        self.basis = b;
        self.pivots = p;
        true
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        membership(&self.basis, &self.pivots, v).unwrap().is_some()
    }
}

/// A finite-dimensional algebra over the rationals presented by structure
/// constants: `b_i · b_j = Σ_k table[i][j][k] b_k`.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    pub dim: usize,
    /// Flattened `dim³` table, indexed `[i * dim * dim + j * dim + k]`.
    pub table: Vec<Rat>,
    /// Coordinates of a two-sided unit, when one is declared.
    pub unit: Option<Vec<Rat>>,
}

impl StructureConstants {
    pub fn new(dim: usize) -> Self {
        StructureConstants { dim, table: vec![Rat::zero(); dim * dim * dim], unit: None }
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rat) {
        let d = self.dim;
        self.table[i * d * d + j * d + k] = v;
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rat {
        let d = self.dim;
        &self.table[i * d * d + j * d + k]
    }

    /// Product of two coordinate vectors.
    pub fn mul_vec(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let d = self.dim;
        let mut out = vec![Rat::zero(); d];
        for i in 0..d {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if y[j].is_zero() {
                    continue;
                }
                let f = x[i].clone() * &y[j];
                for k in 0..d {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] += f.clone() * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by the coordinate vector `x`.
    pub fn left_mul_matrix(&self, x: &[Rat]) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zero(d, d);
        for j in 0..d {
            let mut e = vec![Rat::zero(); d];
            e[j] = Rat::one();
            let col = self.mul_vec(x, &e);
            for k in 0..d {
                *m.at_mut(k, j) = col[k].clone();
            }
        }
        m
    }

    fn verify_associative(&self) -> Result<(), ExactLinError> {
        let d = self.dim;
        let basis = |i: usize| {
            let mut e = vec![Rat::zero(); d];
            e[i] = Rat::one();
            e
        };
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_vec(&basis(i), &basis(j));
                for k in 0..d {
                    let left = self.mul_vec(&ij, &basis(k));
                    let jk = self.mul_vec(&basis(j), &basis(k));
                    let right = self.mul_vec(&basis(i), &jk);
                    if left != right {
                        return Err(ExactLinError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn verify_unit(&self) -> Result<(), ExactLinError> {
        if let Some(u) = &self.unit {
            let d = self.dim;
            for j in 0..d {
                let mut e = vec![Rat::zero(); d];
                e[j] = Rat::one();
                if self.mul_vec(u, &e) != e || self.mul_vec(&e, u) != e {
                    return Err(ExactLinError::BadUnit { index: j });
                }
            }
        }
        Ok(())
    }
}

/// Result of a radical computation: an echelon basis for the radical plus
/// the orthogonal idempotents certifying the discrete quotient when that
/// certification was requested.
#[derive(Debug, Clone)]
pub struct RadicalResult {
    pub basis: Vec<Vec<Rat>>,
    /// Nilpotency index actually certified (`radical^index = 0`).
    pub nilpotency_index: usize,
    /// Present when the discrete-quotient certification was requested:
    /// coordinate vectors of a complete set of orthogonal idempotents
    /// spanning the quotient.
    pub idempotents: Option<Vec<Vec<Rat>>>,
}

/// Computes the Jacobson radical of an associative algebra over the
/// rationals via the trace form: `{x : trace(L_{x·y}) = 0 for all basis y}`.
///
/// The candidate is then certified to be a nilpotent two-sided ideal; with
/// `require_discrete` the quotient is additionally certified discrete
/// (spanned by orthogonal idempotents with 1-dimensional components), and a
/// failure of that certification is reported as a distinct "field not split"
/// error.
pub fn algebra_radical(
    a: &StructureConstants,
    require_discrete: bool,
) -> Result<RadicalResult, ExactLinError> {
    a.verify_associative()?;
    a.verify_unit()?;
    let d = a.dim;
    if d == 0 {
        return Ok(RadicalResult {
            basis: Vec::new(),
            nilpotency_index: 1,
            idempotents: Some(Vec::new()),
        });
    }

    // Trace form: rows indexed by basis y, columns by basis x:
    // t[y][x] = trace(L_{b_x · b_y}).
    let mut gram = Matrix::zero(d, d);
    let basis = |i: usize| {
        let mut e = vec![Rat::zero(); d];
        e[i] = Rat::one();
        e
    };
    for x in 0..d {
        for y in 0..d {
            let prod = a.mul_vec(&basis(x), &basis(y));
            let lm = a.left_mul_matrix(&prod);
            let mut tr = Rat::zero();
            for i in 0..d {
                tr += lm.at(i, i);
            }
            *gram.at_mut(y, x) = tr;
        }
    }
    let radical = kernel_basis(&gram);

    // Certify: two-sided ideal.
    let span = Span::from_rows(d, &radical);
    for r in &radical {
        for j in 0..d {
            let e = basis(j);
            let left = a.mul_vec(&e, r);
            let right = a.mul_vec(r, &e);
            if !span.contains(&left) || !span.contains(&right) {
                return Err(ExactLinError::RadicalCertification(
                    "candidate is not a two-sided ideal".into(),
                ));
            }
        }
    }
    // Certify: nilpotent, index at most dim + 1.
    let mut power: Vec<Vec<Rat>> = radical.clone();
    let mut index = 1;
    while !power.is_empty() {
        if index > d + 1 {
            return Err(ExactLinError::RadicalCertification(
                "candidate is not nilpotent within the dimension bound".into(),
            ));
        }
        let mut next = Span::empty(d);
        for p in &power {
            for r in &radical {
                let v = a.mul_vec(p, r);
                next.insert(&v);
            }
        }
        power = next.basis.rows_iter().map(<[Rat]>::to_vec).collect();
        index += 1;
    }

    let idempotents = if require_discrete {
        Some(certify_discrete_quotient(a, &span)?)
    } else {
        None
    };

    Ok(RadicalResult { basis: radical, nilpotency_index: index, idempotents })
}

/// Basis of the kernel of `m` (as column vectors, returned as coordinate
/// rows).
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rat>> {
    let (r, pivots) = rref(m);
    let mut free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.sort_unstable();
    let mut out = Vec::new();
    for &f in &free {
        let mut v = vec![Rat::zero(); m.cols];
        v[f] = Rat::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.at(row, f).clone();
        }
        out.push(v);
    }
    out
}

/// Builds the quotient algebra modulo the radical span and certifies it is
/// discrete: commutative and simultaneously diagonalisable over the
/// rationals, with the resulting eigenbasis giving orthogonal idempotents.
/// Returns lifts of those idempotents (coordinates in the original algebra).
fn certify_discrete_quotient(
    a: &StructureConstants,
    radical: &Span,
) -> Result<Vec<Vec<Rat>>, ExactLinError> {
    let d = a.dim;
    let rad_dim = radical.rank();
    let qdim = d - rad_dim;
    if qdim == 0 {
        return Err(ExactLinError::RadicalCertification(
            "unital algebra cannot equal its radical".into(),
        ));
    }
    // Coordinates on the quotient: complement of the pivot columns.
    let comp: Vec<usize> = (0..d).filter(|c| !radical.pivots.contains(c)).collect();
    let reduce = |v: &[Rat]| -> Vec<Rat> {
        // canonical representative: v minus its projection on the radical
        let mut rem = v.to_vec();
        for (row, &pc) in radical.pivots.iter().enumerate() {
            let c = rem[pc].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                let s = radical.basis.at(row, j);
                if !s.is_zero() {
                    rem[j] = rem[j].clone() - c.clone() * s;
                }
            }
        }
        comp.iter().map(|&c| rem[c].clone()).collect()
    };
    let lift = |q: &[Rat]| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); d];
        for (idx, &c) in comp.iter().enumerate() {
            v[c] = q[idx].clone();
        }
        v
    };
    // Quotient structure constants.
    let mut q = StructureConstants::new(qdim);
    for i in 0..qdim {
        for j in 0..qdim {
            let mut ei = vec![Rat::zero(); qdim];
            ei[i] = Rat::one();
            let mut ej = vec![Rat::zero(); qdim];
            ej[j] = Rat::one();
            let prod = reduce(&a.mul_vec(&lift(&ei), &lift(&ej)));
            for k in 0..qdim {
                q.set(i, j, k, prod[k].clone());
            }
        }
    }
    // Commutativity.
    for i in 0..qdim {
        for j in 0..qdim {
            for k in 0..qdim {
                if q.c(i, j, k) != q.c(j, i, k) {
                    return Err(ExactLinError::FieldNotSplit(
                        "semisimple quotient is not commutative".into(),
                    ));
                }
            }
        }
    }
    // Simultaneous rational eigenspace splitting.
    let mut subspaces: Vec<Matrix> = vec![Matrix::identity(qdim)];
    for b in 0..qdim {
        let mut e = vec![Rat::zero(); qdim];
        e[b] = Rat::one();
        let lm = q.left_mul_matrix(&e);
        let mut next = Vec::new();
        for sub in &subspaces {
            if sub.rows == 1 {
                next.push(sub.clone());
                continue;
            }
            next.extend(split_rational_eigenspaces(&lm, sub)?);
        }
        subspaces = next;
    }
    if subspaces.iter().any(|s| s.rows != 1) {
        return Err(ExactLinError::FieldNotSplit(
            "no rational eigenbasis: a component is not 1-dimensional".into(),
        ));
    }
    // Each 1-dimensional invariant subspace carries an idempotent: scale v
    // so that v·v = v.
    let mut idems = Vec::new();
    for s in &subspaces {
        let v: Vec<Rat> = s.row(0).to_vec();
        let vv = q.mul_vec(&v, &v);
        // vv = λ v for some rational λ ≠ 0 (semisimplicity).
        let pos = v.iter().position(|x| !x.is_zero()).unwrap();
        let lambda = vv[pos].clone() / v[pos].clone();
        if lambda.is_zero() || vv != v.iter().map(|x| lambda.clone() * x).collect::<Vec<_>>() {
            return Err(ExactLinError::FieldNotSplit(
                "eigenvector does not scale to an idempotent".into(),
            ));
        }
        let idem: Vec<Rat> = v.iter().map(|x| x / lambda.clone()).collect();
        idems.push(lift(&idem));
    }
    // Orthogonality check in the quotient.
    for (i, u) in idems.iter().enumerate() {
        for (j, v) in idems.iter().enumerate() {
            let prod = reduce(&a.mul_vec(u, v));
            let expect = if i == j { reduce(u) } else { vec![Rat::zero(); qdim] };
            if prod != expect {
                return Err(ExactLinError::FieldNotSplit(
                    "components are not orthogonal idempotents".into(),
                ));
            }
        }
    }
    Ok(idems)
}

/// Splits the rows of `sub` (a basis of an `lm`-invariant subspace) into
/// rational eigenspaces of `lm`. Errors when `lm` does not act split
/// semisimply on the subspace.
fn split_rational_eigenspaces(lm: &Matrix, sub: &Matrix) -> Result<Vec<Matrix>, ExactLinError> {
    let k = sub.rows;
    // Restriction of lm to the subspace: solve sub · lmᵀ = r · sub.
    let image = sub.mul(&lm.transpose());
    let (echelon, pivots) = rref(sub);
    let mut restr = Matrix::zero(k, k);
    for i in 0..k {
        match membership(&echelon, &pivots, image.row(i)).unwrap() {
            Some(_) => {}
            None => {
                return Err(ExactLinError::RadicalCertification(
                    "subspace not invariant during splitting".into(),
                ))
            }
        }
        // coordinates w.r.t. the original rows of sub: solve via rref of sub
        // augmented; since sub rows are independent we can reuse echelon
        // coordinates through a change of basis. Simpler: solve the small
        // linear system subᵀ · x = image_rowᵀ.
        let coords = solve_exact(&sub.transpose(), image.row(i)).ok_or_else(|| {
            ExactLinError::RadicalCertification("restriction solve failed".into())
        })?;
        for j in 0..k {
            *restr.at_mut(i, j) = coords[j].clone();
        }
    }
    // Eigenvalues are rational roots of the characteristic polynomial of the
    // restriction (transposed action; same spectrum).
    let poly = char_poly(&restr);
    let roots = rational_roots(&poly);
    let mut out = Vec::new();
    let mut covered = 0;
    for lambda in roots {
        // Kernel of (restr − λ) acting on coordinate rows.
        let mut m = restr.transpose();
        for i in 0..k {
            *m.at_mut(i, i) = m.at(i, i).clone() - lambda.clone();
        }
        let kern = kernel_basis(&m);
        if kern.is_empty() {
            continue;
        }
        // Map coordinates back to ambient vectors.
        let mut rows = Vec::new();
        for c in &kern {
            let mut v = vec![Rat::zero(); sub.cols];
            for (i, ci) in c.iter().enumerate() {
                if !ci.is_zero() {
                    for j in 0..sub.cols {
                        v[j] += ci.clone() * sub.at(i, j);
                    }
                }
            }
            rows.push(v);
        }
        covered += rows.len();
        out.push(Matrix::from_rows(rows));
    }
    if covered != k {
        return Err(ExactLinError::FieldNotSplit(format!(
            "only {covered} of {k} dimensions split over the rationals"
        )));
    }
    Ok(out)
}

/// Solves `m · x = b` exactly; returns None when inconsistent or
/// underdetermined columns are involved (any solution is accepted).
pub fn solve_exact(m: &Matrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(m.rows, b.len());
    // Augment and eliminate.
    let mut aug = Matrix::zero(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            *aug.at_mut(i, j) = m.at(i, j).clone();
        }
        *aug.at_mut(i, m.cols) = b[i].clone();
    }
    let (r, pivots) = rref(&aug);
    if pivots.contains(&m.cols) {
        return None; // inconsistent
    }
    let mut x = vec![Rat::zero(); m.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r.at(row, m.cols).clone();
    }
    Some(x)
}

/// Characteristic polynomial coefficients (monic, degree n), low degree
/// first, via the Faddeev–LeVerrier recurrence.
pub fn char_poly(m: &Matrix) -> Vec<Rat> {
    let n = m.rows;
    assert_eq!(n, m.cols);
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut acc = Matrix::identity(n);
    for k in 1..=n {
        acc = m.mul(&acc);
        let mut tr = Rat::zero();
        for i in 0..n {
            tr += acc.at(i, i);
        }
        let c = -tr / Rat::from_integer(BigInt::from(k as i64));
        coeffs[n - k] = c.clone();
        for i in 0..n {
            *acc.at_mut(i, i) += c.clone();
        }
    }
    coeffs
}

/// All rational roots of a rational-coefficient polynomial (low degree
/// first), found by clearing denominators and testing divisor candidates.
pub fn rational_roots(poly: &[Rat]) -> Vec<Rat> {
    // strip leading zeros and trailing zero coefficients (roots at 0)
    let mut p: Vec<Rat> = poly.to_vec();
    while p.last().is_some_and(Rat::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let mut low = 0;
    while low < p.len() && p[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(Rat::zero());
        p.drain(0..low);
    }
    if p.len() <= 1 {
        return roots;
    }
    // clear denominators
    let mut denom = BigInt::one();
    for c in &p {
        denom = lcm(&denom, c.denom());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rat::from_integer(denom.clone())).to_integer()).collect();
    let a0 = ints[0].clone();
    let an = ints.last().unwrap().clone();
    let eval = |x: &Rat| -> bool {
        let mut acc = Rat::zero();
        for c in p.iter().rev() {
            acc = acc * x + c;
        }
        acc.is_zero()
    };
    for num in divisors(&a0.abs()) {
        for den in divisors(&an.abs()) {
            for sign in [1i64, -1] {
                let cand = Rat::new(num.clone() * BigInt::from(sign), den.clone());
                if eval(&cand) && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    (a * b).abs() / gcd(a, b)
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let q = n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(
            rows.into_iter().map(|r| r.into_iter().map(rat_int).collect()).collect(),
        )
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(2);
        let (r, p) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let a = m(vec![vec![1, 2], vec![2, 4]]);
        let (r, p) = rref(&a);
        assert_eq!(r, m(vec![vec![1, 2]]));
        assert_eq!(p, vec![0]);
    }

    /// Independent rank oracle: largest k with a non-vanishing k×k minor.
    fn minor_rank(a: &Matrix) -> usize {
        fn det(a: &Matrix, rows: &[usize], cols: &[usize]) -> Rat {
            if rows.is_empty() {
                return Rat::one();
            }
            let mut acc = Rat::zero();
            let r0 = rows[0];
            for (pos, &c) in cols.iter().enumerate() {
                let sub_rows = &rows[1..];
                let sub_cols: Vec<usize> =
                    cols.iter().copied().filter(|&x| x != c).collect();
                let sign = if pos % 2 == 0 { Rat::one() } else { -Rat::one() };
                let e = a.at(r0, c);
                if !e.is_zero() {
                    acc += sign * e * det(a, sub_rows, &sub_cols);
                }
            }
            acc
        }
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 0..n {
                for mut rest in combos(n, k - 1) {
                    if rest.iter().all(|&x| x > first) {
                        let mut v = vec![first];
                        v.append(&mut rest);
                        out.push(v);
                    }
                }
            }
            out
        }
        for k in (1..=a.rows.min(a.cols)).rev() {
            for rows in combos(a.rows, k) {
                for cols in combos(a.cols, k) {
                    if !det(a, &rows, &cols).is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rref_rank_matches_minor_oracle() {
        // Deterministic pseudo-random 5×7 rational matrix of rank 3.
        let mut seed: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % 7) as i64 - 3
        };
        let u = Matrix::from_rows(
            (0..5).map(|_| (0..3).map(|_| rat_int(next())).collect()).collect(),
        );
        let v = Matrix::from_rows(
            (0..3).map(|_| (0..7).map(|_| rat_int(next())).collect()).collect(),
        );
        let a = u.mul(&v);
        let (r, p) = rref(&a);
        assert_eq!(p.len(), minor_rank(&a));
        assert_eq!(r.rows, p.len());
    }

    #[test]
    fn rref_is_idempotent() {
        let a = m(vec![vec![2, 4, 1], vec![1, 2, 3], vec![3, 6, 4]]);
        let (r1, p1) = rref(&a);
        let (r2, p2) = rref(&r1);
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
    }

    #[test]
    fn membership_trivial_cases() {
        let basis = m(vec![vec![1, 0, 2], vec![0, 1, 3]]);
        let (e, p) = rref(&basis);
        let zero = vec![Rat::zero(); 3];
        // coordinates are taken with respect to the two basis rows
        assert_eq!(membership(&e, &p, &zero).unwrap(), Some(vec![Rat::zero(); 2]));
        let row1: Vec<Rat> = e.row(0).to_vec();
        let coords = membership(&e, &p, &row1).unwrap().unwrap();
        assert_eq!(coords, vec![Rat::one(), Rat::zero()]);
        assert_eq!(
            membership(&e, &p, &[Rat::zero()]).unwrap_err(),
            ExactLinError::DimensionMismatch { expected: 3, got: 1 }
        );
    }

    #[test]
    fn membership_outside_subspace_detected_by_rank() {
        // 3-dim subspace of Q^5; v outside it.
        let basis = m(vec![
            vec![1, 0, 0, 1, 2],
            vec![0, 1, 0, 3, 1],
            vec![0, 0, 1, 1, 1],
        ]);
        let (e, p) = rref(&basis);
        let v: Vec<Rat> = vec![rat_int(1), rat_int(1), rat_int(1), rat_int(0), rat_int(0)];
        assert!(membership(&e, &p, &v).unwrap().is_none());
        // rank-comparison oracle: appending v increases the rank
        let stacked = e.vstack(&Matrix::from_rows(vec![v]));
        let (_, p2) = rref(&stacked);
        assert_eq!(p2.len(), p.len() + 1);
    }

    /// K × K: semisimple, radical zero.
    #[test]
    fn radical_of_split_semisimple_is_zero() {
        let mut a = StructureConstants::new(2);
        a.set(0, 0, 0, Rat::one());
        a.set(1, 1, 1, Rat::one());
        a.unit = Some(vec![Rat::one(), Rat::one()]);
        let r = algebra_radical(&a, true).unwrap();
        assert!(r.basis.is_empty());
        assert_eq!(r.idempotents.as_ref().unwrap().len(), 2);
    }

    /// K[x]/(x²): radical is span{x}.
    #[test]
    fn radical_of_dual_numbers() {
        let mut a = StructureConstants::new(2);
        // basis: 1, x
        a.set(0, 0, 0, Rat::one());
        a.set(0, 1, 1, Rat::one());
        a.set(1, 0, 1, Rat::one());
        a.unit = Some(vec![Rat::one(), Rat::zero()]);
        let r = algebra_radical(&a, true).unwrap();
        assert_eq!(r.basis, vec![vec![Rat::zero(), Rat::one()]]);
        assert_eq!(r.nilpotency_index, 2);
    }

    /// Path algebra of A2: basis e, f, x with e·x = x = x·f (arrow read as
    /// x: e → f composed left to right).
    fn a2_algebra() -> StructureConstants {
        let mut a = StructureConstants::new(3);
        let one = Rat::one;
        a.set(0, 0, 0, one()); // e·e = e
        a.set(1, 1, 1, one()); // f·f = f
        a.set(0, 2, 2, one()); // e·x = x
        a.set(2, 1, 2, one()); // x·f = x
        a.unit = Some(vec![one(), one(), Rat::zero()]);
        a
    }

    /// Brute-force oracle: the radical of this 3-dimensional monomial
    /// algebra is the largest nilpotent two-sided ideal spanned by a subset
    /// of the standard basis.
    #[test]
    fn radical_of_a2_path_algebra_matches_subset_search() {
        let a = a2_algebra();
        let d = 3;
        let mut best: Vec<usize> = Vec::new();
        for mask in 0u32..(1 << d) {
            let subset: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
            let rows: Vec<Vec<Rat>> = subset
                .iter()
                .map(|&i| {
                    let mut v = vec![Rat::zero(); d];
                    v[i] = Rat::one();
                    v
                })
                .collect();
            let span = Span::from_rows(d, &rows);
            // two-sided ideal?
            let mut ok = true;
            for r in &rows {
                for j in 0..d {
                    let mut e = vec![Rat::zero(); d];
                    e[j] = Rat::one();
                    if !span.contains(&a.mul_vec(&e, r)) || !span.contains(&a.mul_vec(r, &e)) {
                        ok = false;
                    }
                }
            }
            if !ok {
                continue;
            }
            // nilpotent?
            let mut power = rows.clone();
            let mut nil = false;
            for _ in 0..=d {
                if power.is_empty() {
                    nil = true;
                    break;
                }
                let mut next = Span::empty(d);
                for p in &power {
                    for r in &rows {
                        next.insert(&a.mul_vec(p, r));
                    }
                }
                power = next.basis.rows_iter().map(<[Rat]>::to_vec).collect();
            }
            if nil && subset.len() > best.len() {
                best = subset;
            }
        }
        assert_eq!(best, vec![2]); // span{x}
        let r = algebra_radical(&a, true).unwrap();
        assert_eq!(r.basis, vec![vec![Rat::zero(), Rat::zero(), Rat::one()]]);
    }

    /// Q(i) presented as a 2-dimensional algebra: radical 0 but the quotient
    /// is not discrete over Q.
    #[test]
    fn gaussian_rationals_are_not_split() {
        let mut a = StructureConstants::new(2);
        a.set(0, 0, 0, Rat::one());
        a.set(0, 1, 1, Rat::one());
        a.set(1, 0, 1, Rat::one());
        a.set(1, 1, 0, -Rat::one()); // i² = −1
        a.unit = Some(vec![Rat::one(), Rat::zero()]);
        assert!(algebra_radical(&a, false).unwrap().basis.is_empty());
        match algebra_radical(&a, true) {
            Err(ExactLinError::FieldNotSplit(_)) => {}
            other => panic!("expected FieldNotSplit, got {other:?}"),
        }
    }

    #[test]
    fn non_associative_input_rejected() {
        let mut a = StructureConstants::new(2);
        a.set(0, 0, 1, Rat::one());
        a.set(1, 1, 0, Rat::one());
        a.set(0, 1, 0, Rat::one());
        assert!(matches!(
            algebra_radical(&a, false),
            Err(ExactLinError::NotAssociative { .. })
        ));
    }

    #[test]
    fn char_poly_and_roots() {
        // diag(1, 2): χ = (x−1)(x−2) = x² − 3x + 2
        let a = m(vec![vec![1, 0], vec![0, 2]]);
        let p = char_poly(&a);
        assert_eq!(p, vec![rat_int(2), rat_int(-3), rat_int(1)]);
        let mut roots = rational_roots(&p);
        roots.sort();
        assert_eq!(roots, vec![rat_int(1), rat_int(2)]);
    }
}

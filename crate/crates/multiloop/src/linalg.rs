//! Exact linear algebra over cyclotomic scalars, plus integer lattice tools.
//!
//! Everything is dense and exact. Subspaces are kept in a canonical form
//! (reduced row-echelon basis), so subspace equality is plain structural
//! equality and membership tests are back-substitutions.

use crate::cyclo::{gcd64, lcm64, phi_degree, rint, CycNum, Rat};
use crate::error::Error;
use crate::Result;
use num::{One, Signed, Zero};

/// Dense matrix over the cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<CycNum>>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in &self.data {
            let cells: Vec<String> = r.iter().map(|c| format!("{c}")).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![vec![CycNum::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = CycNum::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &CycNum {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycNum) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[CycNum] {
        &self.data[r]
    }

    pub fn col(&self, c: usize) -> Vec<CycNum> {
        (0..self.rows).map(|r| self.data[r][c].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c][r] = self.data[r][c].clone();
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|x| x * s).collect())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] = out.data[i][j].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = CycNum::zero();
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self.data[i][k].is_zero() {
                        acc = acc.add(&self.data[i][k].mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        self.data.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|v| v.is_zero()))
    }

    pub fn trace(&self) -> CycNum {
        assert_eq!(self.rows, self.cols);
        let mut t = CycNum::zero();
        for i in 0..self.rows {
            t = t.add(&self.data[i][i]);
        }
        t
    }

    /// Reduced row-echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            let Some(pr) = (prow..m.rows).find(|&r| !m.data[r][col].is_zero()) else {
                continue;
            };
            m.data.swap(prow, pr);
            let inv = m.data[prow][col].inv().expect("pivot nonzero");
            for c in col..m.cols {
                m.data[prow][c] = m.data[prow][c].mul(&inv);
            }
            for r in 0..m.rows {
                if r != prow && !m.data[r][col].is_zero() {
                    let f = m.data[r][col].clone();
                    for c in col..m.cols {
                        let t = f.mul(&m.data[prow][c]);
                        m.data[r][c] = m.data[r][c].sub(&t);
                    }
                }
            }
            pivots.push(col);
            prow += 1;
            if prow == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : A x = 0}`, canonicalized.
    pub fn nullspace(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![CycNum::zero(); self.cols];
            v[fc] = CycNum::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = r.data[i][fc].neg();
            }
            basis.push(v);
        }
        Subspace::from_span(self.cols, basis)
    }

    /// One solution of `A x = b`, if consistent.
    pub fn solve(&self, b: &[CycNum]) -> Result<Vec<CycNum>> {
        assert_eq!(self.rows, b.len());
        let mut aug = self.clone();
        for (r, v) in b.iter().enumerate() {
            aug.data[r].push(v.clone());
        }
        aug.cols += 1;
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = vec![CycNum::zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.data[i][self.cols].clone();
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = self.clone();
        for (r, row) in aug.data.iter_mut().enumerate() {
            for j in 0..n {
                row.push(if r == j { CycNum::one() } else { CycNum::zero() });
            }
        }
        aug.cols = 2 * n;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::NotInvertible);
        }
        let data = r.data.into_iter().map(|row| row[n..].to_vec()).collect();
        Ok(Matrix { rows: n, cols: n, data })
    }

    pub fn det(&self) -> CycNum {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = m.rows;
        let mut det = CycNum::one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !m.data[r][col].is_zero()) else {
                return CycNum::zero();
            };
            if pr != col {
                m.data.swap(col, pr);
                det = det.neg();
            }
            let p = m.data[col][col].clone();
            det = det.mul(&p);
            let pinv = p.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if !m.data[r][col].is_zero() {
                    let f = m.data[r][col].mul(&pinv);
                    for c in col..n {
                        let t = f.mul(&m.data[col][c]);
                        m.data[r][c] = m.data[r][c].sub(&t);
                    }
                }
            }
        }
        det
    }

    /// Characteristic polynomial (monic, ascending coefficients) via the
    /// Faddeev-LeVerrier recursion, exact over the field.
    pub fn charpoly(&self) -> CPoly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![CycNum::zero(); n + 1];
        coeffs[n] = CycNum::one();
        let mut mk = Matrix::identity(n);
        for k in 1..=n {
            mk = self.mul(&mk);
            let ck = mk.trace().scale(&-Rat::new(1.into(), (k as i64).into()));
            coeffs[n - k] = ck.clone();
            for i in 0..n {
                mk.data[i][i] = mk.data[i][i].add(&ck);
            }
        }
        CPoly::new(coeffs)
    }
}

/// A linear subspace in canonical (reduced row-echelon basis) form.
///
/// Basis vectors are the rows; two subspaces are equal iff their canonical
/// bases are equal, which makes `PartialEq` exact subspace equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    amb: usize,
    basis: Vec<Vec<CycNum>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(amb: usize) -> Self {
        Subspace { amb, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(amb: usize) -> Self {
        let id = Matrix::identity(amb);
        Subspace {
            amb,
            basis: id.data,
            pivots: (0..amb).collect(),
        }
    }

    /// Canonical subspace spanned by the given vectors.
    pub fn from_span(amb: usize, vectors: Vec<Vec<CycNum>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(amb);
        }
        let m = Matrix::from_rows(vectors);
        let (r, pivots) = m.rref();
        let basis = r.data.into_iter().take(pivots.len()).collect();
        Subspace { amb, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.amb
    }

    pub fn basis(&self) -> &[Vec<CycNum>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coords(&self, v: &[CycNum]) -> Option<Vec<CycNum>> {
        assert_eq!(v.len(), self.amb);
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = rem[p].clone();
            coords.push(c.clone());
            if !c.is_zero() {
                for (j, b) in row.iter().enumerate() {
                    if !b.is_zero() {
                        rem[j] = rem[j].sub(&c.mul(b));
                    }
                }
            }
        }
        if rem.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Smallest subspace containing both.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.amb, other.amb);
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::from_span(self.amb, all)
    }

    /// Intersection, computed through the kernel of the stacked basis.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.amb, other.amb);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.amb);
        }
        // columns: basis of self, then basis of other; kernel rows give
        // coefficient pairs (a, b) with sum_a a_i u_i = sum_b b_j v_j
        let k = self.dim() + other.dim();
        let mut m = Matrix::zeros(self.amb, k);
        for (j, u) in self.basis.iter().enumerate() {
            for i in 0..self.amb {
                m.data[i][j] = u[i].clone();
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for i in 0..self.amb {
                m.data[i][self.dim() + j] = v[i].neg();
            }
        }
        let ker = m.nullspace();
        let vectors = ker
            .basis
            .iter()
            .map(|coef| {
                let mut w = vec![CycNum::zero(); self.amb];
                for (j, u) in self.basis.iter().enumerate() {
                    if !coef[j].is_zero() {
                        for i in 0..self.amb {
                            w[i] = w[i].add(&coef[j].mul(&u[i]));
                        }
                    }
                }
                w
            })
            .collect();
        Subspace::from_span(self.amb, vectors)
    }
}

// ---------------------------------------------------------------------------
// polynomials over the cyclotomic field
// ---------------------------------------------------------------------------

/// Dense univariate polynomial with cyclotomic coefficients (ascending).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CPoly {
    coeffs: Vec<CycNum>,
}

impl CPoly {
    pub fn new(coeffs: Vec<CycNum>) -> Self {
        let mut p = CPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        CPoly { coeffs: vec![CycNum::zero()] }
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().is_zero() {
            self.coeffs.pop();
        }
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        let mut acc = CycNum::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> CPoly {
        if self.coeffs.len() == 1 {
            return CPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&rint(i as i64)))
            .collect();
        CPoly::new(coeffs)
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        if self.is_zero() || other.is_zero() {
            return CPoly::zero();
        }
        let mut out = vec![CycNum::zero(); self.deg() + other.deg() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        CPoly::new(out)
    }

    /// Division with remainder; divisor must be nonzero.
    pub fn divrem(&self, d: &CPoly) -> (CPoly, CPoly) {
        assert!(!d.is_zero());
        if self.deg() < d.deg() || self.is_zero() {
            return (CPoly::zero(), self.clone());
        }
        let lead_inv = d.coeffs.last().unwrap().inv().expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![CycNum::zero(); self.deg() - d.deg() + 1];
        for i in (0..quo.len()).rev() {
            let c = rem[i + d.deg()].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            quo[i] = c.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] = rem[i + j].sub(&c.mul(dc));
                }
            }
        }
        (CPoly::new(quo), CPoly::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &CPoly) -> CPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead_inv = a.coeffs.last().unwrap().inv().unwrap();
        CPoly::new(a.coeffs.iter().map(|c| c.mul(&lead_inv)).collect())
    }

    /// Product of the distinct irreducible factors (radical).
    pub fn squarefree_part(&self) -> CPoly {
        let g = self.gcd(&self.derivative());
        if g.deg() == 0 {
            return self.clone();
        }
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        q
    }

    /// True if every coefficient is a rational number.
    pub fn has_rational_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.as_rat().is_some())
    }

    /// Product of all Galois conjugates of the polynomial (coefficients
    /// mapped by each automorphism of the joint coefficient field); the
    /// result has rational coefficients and is divisible by `self`'s
    /// rational multiples of interest.
    pub fn galois_norm(&self) -> CPoly {
        let order = self
            .coeffs
            .iter()
            .fold(1u64, |acc, c| lcm64(acc, c.order()));
        if order <= 2 {
            return self.clone();
        }
        let mut prod = CPoly::new(vec![CycNum::one()]);
        for j in 1..order {
            if gcd64(j, order) != 1 {
                continue;
            }
            let conj = CPoly::new(
                self.coeffs
                    .iter()
                    .map(|c| c.lift(order).unwrap().galois(j).unwrap())
                    .collect(),
            );
            prod = prod.mul(&conj);
        }
        prod
    }
}

/// All distinct roots of `p` that lie in the cyclotomic field of the given
/// order **and** have the shape rational-times-root-of-unity. If stripping
/// those roots leaves a nonconstant polynomial, the remaining eigenvalues
/// are outside the searched family and the call fails with `FieldTooSmall`.
pub fn roots_in_field(p: &CPoly, field_order: u64) -> Result<Vec<CycNum>> {
    assert!(!p.is_zero());
    let mut sf = p.squarefree_part();
    let mut roots = Vec::new();
    if sf.eval(&CycNum::zero()).is_zero() {
        roots.push(CycNum::zero());
        let (q, _) = sf.divrem(&CPoly::new(vec![CycNum::zero(), CycNum::one()]));
        sf = q;
    }
    if sf.deg() == 0 {
        return Ok(roots);
    }
    // rational-coefficient companion whose roots include all roots of sf
    let q = if sf.has_rational_coeffs() {
        sf.clone()
    } else {
        sf.galois_norm()
    };
    if !q.has_rational_coeffs() {
        return Err(Error::FieldTooSmall { order: field_order });
    }
    // clear denominators to an integer polynomial
    let rats: Vec<Rat> = q.coeffs().iter().map(|c| c.as_rat().unwrap()).collect();
    let den_lcm = rats.iter().fold(num::BigInt::one(), |acc, r| {
        let d = r.denom().clone();
        let g = num::Integer::gcd(&acc, &d);
        acc / g * d
    });
    let ints: Vec<num::BigInt> = rats.iter().map(|r| (r * &den_lcm).to_integer()).collect();
    let lead = ints.last().unwrap().clone();
    let trail = ints
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero polynomial")
        .clone();
    let num_divs = positive_divisors(&trail.abs());
    let den_divs = positive_divisors(&lead.abs());
    // deterministic candidate sweep: rationals (and their root-of-unity
    // multiples) ordered by size
    let mut cand_rats: Vec<Rat> = Vec::new();
    for a in &num_divs {
        for b in &den_divs {
            let r = Rat::new(a.clone(), b.clone());
            if !cand_rats.contains(&r) {
                cand_rats.push(r);
            }
        }
    }
    cand_rats.sort();
    for r in cand_rats {
        for k in 0..field_order {
            if sf.deg() == 0 {
                break;
            }
            for sign in [1i64, -1] {
                let base = CycNum::zeta_pow(field_order, k as i64);
                let cand = base.scale(&(&r * &rint(sign)));
                if sf.eval(&cand).is_zero() {
                    roots.push(cand.clone());
                    // divide out the linear factor (x - cand)
                    let lin = CPoly::new(vec![cand.neg(), CycNum::one()]);
                    let (qq, rr) = sf.divrem(&lin);
                    debug_assert!(rr.is_zero());
                    sf = qq;
                }
            }
        }
        if sf.deg() == 0 {
            break;
        }
    }
    if sf.deg() > 0 {
        return Err(Error::FieldTooSmall { order: field_order });
    }
    Ok(roots)
}

fn positive_divisors(n: &num::BigInt) -> Vec<num::BigInt> {
    use num::BigInt;
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut divs = vec![BigInt::one()];
    let mut m = n.abs();
    let mut p = BigInt::from(2);
    // trial division; the integers arising here are products of small primes
    while &p * &p <= m {
        if (&m % &p).is_zero() {
            let mut powers = vec![BigInt::one()];
            while (&m % &p).is_zero() {
                m /= &p;
                let last = powers.last().unwrap() * &p;
                powers.push(last);
            }
            let mut next = Vec::new();
            for d in &divs {
                for q in &powers {
                    next.push(d * q);
                }
            }
            divs = next;
        }
        p += 1;
    }
    if m > BigInt::one() {
        let mut next = Vec::new();
        for d in &divs {
            next.push(d.clone());
            next.push(d * &m);
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}

// ---------------------------------------------------------------------------
// integer matrices: determinants, Smith normal form, lattice bases
// ---------------------------------------------------------------------------

/// Small dense integer matrix (row-major).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<i128>>,
}

impl IMat {
    pub fn from_rows(data: Vec<Vec<i128>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols));
        IMat { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut d = vec![vec![0; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = 1;
        }
        IMat::from_rows(d)
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.cols, other.rows);
        let mut out = vec![vec![0i128; other.cols]; self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k] == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[i][j] += self.data[i][k] * other.data[k][j];
                }
            }
        }
        IMat::from_rows(out)
    }

    pub fn transpose(&self) -> IMat {
        let mut out = vec![vec![0i128; self.rows]; self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[j][i] = self.data[i][j];
            }
        }
        IMat::from_rows(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i128 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut m = self.data.clone();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k][k] == 0 {
                let Some(sw) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                    return 0;
                };
                m.swap(k, sw);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        sign * m[n - 1][n - 1]
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs() == 1
    }

    /// Inverse of a unimodular matrix (integer entries), via adjugate-free
    /// Gauss-Jordan over rationals with an exactness check.
    pub fn inverse_unimodular(&self) -> Result<IMat> {
        let d = self.det();
        if d.abs() != 1 {
            return Err(Error::NotUnimodular { det: d });
        }
        let n = self.rows;
        // rational elimination with i128 fractions is overkill; reuse the
        // cyclotomic machinery at order 1
        let m = Matrix::from_rows(
            self.data
                .iter()
                .map(|r| r.iter().map(|&v| CycNum::from_rat(Rat::from_integer(v.into()))).collect())
                .collect(),
        );
        let inv = m.inverse()?;
        let mut out = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                let r = inv.at(i, j).as_rat().ok_or(Error::NotInvertible)?;
                if !r.is_integer() {
                    return Err(Error::NotUnimodular { det: d });
                }
                out[i][j] = int_to_i128(&r.to_integer())?;
            }
        }
        Ok(IMat::from_rows(out))
    }
}

fn int_to_i128(v: &num::BigInt) -> Result<i128> {
    v.try_into()
        .map_err(|_| Error::Parse("integer overflow in lattice computation".into()))
}

/// Smith normal form: returns `(u, d, v)` with `u * a * v = d` diagonal,
/// `u`, `v` unimodular, and the diagonal entries in divisibility order.
pub fn smith_normal_form(a: &IMat) -> (IMat, IMat, IMat) {
    let mut d = a.data.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut u = IMat::identity(rows);
    let mut v = IMat::identity(cols);

    fn swap_rows(d: &mut [Vec<i128>], u: &mut IMat, a: usize, b: usize) {
        d.swap(a, b);
        u.data.swap(a, b);
    }
    fn swap_cols(d: &mut [Vec<i128>], v: &mut IMat, a: usize, b: usize) {
        for row in d.iter_mut() {
            row.swap(a, b);
        }
        for row in v.data.iter_mut() {
            row.swap(a, b);
        }
    }
    fn add_row(d: &mut [Vec<i128>], u: &mut IMat, src: usize, dst: usize, f: i128) {
        for j in 0..d[0].len() {
            d[dst][j] += f * d[src][j];
        }
        for j in 0..u.cols {
            u.data[dst][j] += f * u.data[src][j];
        }
    }
    fn add_col(d: &mut [Vec<i128>], v: &mut IMat, src: usize, dst: usize, f: i128) {
        for row in d.iter_mut() {
            row[dst] += f * row[src];
        }
        for row in v.data.iter_mut() {
            row[dst] += f * row[src];
        }
    }
    fn negate_row(d: &mut [Vec<i128>], u: &mut IMat, r: usize) {
        for x in d[r].iter_mut() {
            *x = -*x;
        }
        for x in u.data[r].iter_mut() {
            *x = -*x;
        }
    }

    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // find a nonzero pivot in the remaining block
        let mut pivot = None;
        'search: for i in t..rows {
            for j in t..cols {
                if d[i][j] != 0 {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut d, &mut u, t, pi);
        swap_cols(&mut d, &mut v, t, pj);
        // clear row and column t by repeated division
        loop {
            let mut done = true;
            for i in t + 1..rows {
                if d[i][t] != 0 {
                    let f = -(d[i][t] / d[t][t]);
                    add_row(&mut d, &mut u, t, i, f);
                    if d[i][t] != 0 {
                        swap_rows(&mut d, &mut u, t, i);
                        done = false;
                    }
                }
            }
            for j in t + 1..cols {
                if d[t][j] != 0 {
                    let f = -(d[t][j] / d[t][t]);
                    add_col(&mut d, &mut v, t, j, f);
                    if d[t][j] != 0 {
                        swap_cols(&mut d, &mut v, t, j);
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if d[t][t] < 0 {
            negate_row(&mut d, &mut u, t);
        }
        t += 1;
    }
    // enforce divisibility chain
    loop {
        let mut fixed = true;
        for i in 0..n.saturating_sub(1) {
            let (a0, b0) = (d[i][i], d[i + 1][i + 1]);
            if a0 != 0 && b0 % a0 != 0 {
                // standard trick: add column i+1 to column i, re-reduce block
                add_col(&mut d, &mut v, i + 1, i, 1);
                // re-run a mini SNF on the 2x2 block via full restart
                let (u2, d2, v2) = smith_normal_form(&IMat::from_rows(d.clone()));
                return (u2.mul(&u), d2, v.mul(&v2));
            }
            if a0 == 0 && b0 != 0 {
                swap_rows(&mut d, &mut u, i, i + 1);
                swap_cols(&mut d, &mut v, i, i + 1);
                fixed = false;
            }
        }
        if fixed {
            break;
        }
    }
    (u, IMat::from_rows(d), v)
}

/// Canonical basis (rows) of the sublattice of `Z^n` generated by the rows
/// of `gens`, via Smith normal form: the lattice equals the row space of
/// `D V^{-1}`, whose nonzero rows form a basis.
pub fn lattice_basis(gens: &IMat) -> Vec<Vec<i128>> {
    if gens.rows == 0 {
        return Vec::new();
    }
    let (_, d, v) = smith_normal_form(gens);
    let v_inv = v.inverse_unimodular().expect("SNF transform unimodular");
    let n = gens.cols;
    let mut rows = Vec::new();
    for i in 0..gens.rows.min(n) {
        let di = if i < d.rows && i < d.cols { d.data[i][i] } else { 0 };
        if di != 0 {
            let row: Vec<i128> = (0..n).map(|j| di * v_inv.data[i][j]).collect();
            rows.push(row);
        }
    }
    rows
}

/// Rank over `Q` of an integer matrix.
pub fn int_rank(m: &IMat) -> usize {
    let cm = Matrix::from_rows(
        m.data
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| CycNum::from_rat(Rat::from_integer(v.into())))
                    .collect()
            })
            .collect(),
    );
    cm.rank()
}

/// Check membership of an integer vector in the lattice spanned by `basis`
/// rows (solving over rationals and checking integrality).
pub fn in_lattice(basis: &[Vec<i128>], v: &[i128]) -> bool {
    if basis.is_empty() {
        return v.iter().all(|&x| x == 0);
    }
    let n = v.len();
    let a = Matrix::from_rows(
        (0..n)
            .map(|i| {
                basis
                    .iter()
                    .map(|b| CycNum::from_rat(Rat::from_integer(b[i].into())))
                    .collect()
            })
            .collect(),
    );
    let bvec: Vec<CycNum> = v
        .iter()
        .map(|&x| CycNum::from_rat(Rat::from_integer(x.into())))
        .collect();
    match a.solve(&bvec) {
        Ok(x) => x
            .iter()
            .all(|c| c.as_rat().map(|r| r.is_integer()).unwrap_or(false)),
        Err(_) => false,
    }
}

/// Degree of the cyclotomic field needed to watch this module's unit tests:
/// kept here so the tests read naturally.
#[allow(dead_code)]
fn _phi(n: u64) -> usize {
    phi_degree(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;

    fn c(k: i64) -> CycNum {
        CycNum::from_int(k)
    }

    #[test]
    fn rank_nullspace_solve_small() {
        // A = [[1,2],[2,4]] has rank 1, kernel spanned by (-2, 1)
        let a = Matrix::from_rows(vec![vec![c(1), c(2)], vec![c(2), c(4)]]);
        assert_eq!(a.rank(), 1);
        let ns = a.nullspace();
        assert_eq!(ns.dim(), 1);
        assert!(ns.contains(&[c(-2), c(1)]));
        let x = a.solve(&[c(3), c(6)]).unwrap();
        let ax = a.apply(&x);
        assert_eq!(ax, vec![c(3), c(6)]);
        assert!(a.solve(&[c(1), c(0)]).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let a = Matrix::from_rows(vec![
            vec![c(2), c(1), c(0)],
            vec![c(0), c(1), c(3)],
            vec![c(1), c(0), c(1)],
        ]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
    }

    #[test]
    fn determinant_matches_cofactor_oracle() {
        // oracle: 2x2 determinant ad - bc by hand
        let a = Matrix::from_rows(vec![vec![c(3), c(7)], vec![c(2), c(5)]]);
        assert_eq!(a.det(), c(1));
        let z = CycNum::zeta(4);
        let b = Matrix::from_rows(vec![
            vec![z.clone(), c(1)],
            vec![c(1), z.clone()],
        ]);
        // z^2 - 1 = -2 for z = zeta_4
        assert_eq!(b.det(), c(-2));
    }

    #[test]
    fn charpoly_of_companion() {
        // companion of x^2 - x - 1
        let a = Matrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(1)]]);
        let p = a.charpoly();
        assert_eq!(p.coeffs(), &[c(-1), c(-1), c(1)]);
    }

    #[test]
    fn roots_of_quadratic_with_cyclotomic_roots() {
        // x^2 + 4 has roots ±2i; ask inside the order-4 field
        let p = CPoly::new(vec![c(4), c(0), c(1)]);
        let roots = roots_in_field(&p, 4).unwrap();
        assert_eq!(roots.len(), 2);
        let two_i = CycNum::zeta(4).scale(&rat(2, 1));
        assert!(roots.contains(&two_i));
        assert!(roots.contains(&two_i.neg()));
        // and the order-2 field is too small
        assert!(matches!(
            roots_in_field(&p, 2),
            Err(Error::FieldTooSmall { order: 2 })
        ));
    }

    #[test]
    fn roots_with_multiplicity_and_zero() {
        // x^3 (x - 2)^2 (x + 1/2)
        let lin1 = CPoly::new(vec![c(-2), c(1)]);
        let lin2 = CPoly::new(vec![CycNum::from_rat(rat(1, 2)), c(1)]);
        let x3 = CPoly::new(vec![c(0), c(0), c(0), c(1)]);
        let p = x3.mul(&lin1).mul(&lin1).mul(&lin2);
        let mut roots = roots_in_field(&p, 1).unwrap();
        roots.sort_by_key(|r| r.sort_key());
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&c(0)));
        assert!(roots.contains(&c(2)));
        assert!(roots.contains(&CycNum::from_rat(rat(-1, 2))));
    }

    #[test]
    fn subspace_canonical_equality() {
        let s1 = Subspace::from_span(3, vec![vec![c(1), c(1), c(0)], vec![c(0), c(2), c(2)]]);
        let s2 = Subspace::from_span(3, vec![vec![c(1), c(0), c(-1)], vec![c(0), c(1), c(1)]]);
        assert_eq!(s1, s2);
        assert!(s1.contains(&[c(2), c(1), c(-1)]));
        assert!(!s1.contains(&[c(0), c(0), c(1)]));
        let i = s1.intersect(&Subspace::from_span(3, vec![vec![c(1), c(0), c(-1)]]));
        assert_eq!(i.dim(), 1);
    }

    #[test]
    fn smith_form_and_lattice_basis() {
        // lattice generated by (2,0) and (0,3) plus (2,3): still 2Z x 3Z...
        // actually (2,3) = (2,0)+(0,3); basis should present the same lattice
        let g = IMat::from_rows(vec![vec![2, 0], vec![0, 3], vec![2, 3]]);
        let basis = lattice_basis(&g);
        assert_eq!(basis.len(), 2);
        assert!(in_lattice(&basis, &[2, 0]));
        assert!(in_lattice(&basis, &[0, 3]));
        assert!(!in_lattice(&basis, &[1, 0]));
        assert!(!in_lattice(&basis, &[0, 1]));
        // index = |det| of basis = 6
        let bm = IMat::from_rows(basis);
        assert_eq!(bm.det().abs(), 6);
    }

    #[test]
    fn snf_divisibility_chain() {
        let a = IMat::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let (u, d, v) = smith_normal_form(&a);
        assert!(u.is_unimodular());
        assert!(v.is_unimodular());
        assert_eq!(u.mul(&a).mul(&v).data, d.data);
        let diag: Vec<i128> = (0..3).map(|i| d.data[i][i]).collect();
        for w in diag.windows(2) {
            if w[0] != 0 {
                assert_eq!(w[1] % w[0], 0);
            }
        }
    }

    #[test]
    fn unimodular_inverse() {
        let p = IMat::from_rows(vec![vec![1, 0], vec![1, 1]]);
        let pi = p.inverse_unimodular().unwrap();
        assert_eq!(p.mul(&pi).data, IMat::identity(2).data);
        let bad = IMat::from_rows(vec![vec![2, 0], vec![0, 1]]);
        assert!(bad.inverse_unimodular().is_err());
    }
}

//! Finite-dimensional Lie algebras with exact structure constants.
//!
//! An algebra is a validated bracket table over the cyclotomic field.
//! Constructors for the classical families build the table from a faithful
//! matrix realization (trace-zero matrices, split orthogonal/symplectic
//! matrices, derivations of the split octonions), so the structure constants
//! are never typed in by hand; antisymmetry and the Jacobi identity are
//! re-verified on every constructed table.

use crate::cyclo::{rint, CycNum, Rat};
use crate::error::Error;
use crate::linalg::{Matrix, Subspace};
use crate::Result;
use num::{One, Zero};

/// Sparse coordinate vector: (basis index, coefficient), sorted by index.
pub type SparseVec = Vec<(usize, CycNum)>;

/// Root-space bookkeeping attached by the classical constructors: which
/// basis elements span the Cartan subalgebra, and the coordinates of each
/// root vector's root in the simple-root basis.
#[derive(Clone, Debug)]
pub struct RootAnnotation {
    pub cartan: Vec<usize>,
    pub root_of: Vec<Option<Vec<i64>>>,
}

/// Supported classical types for the built-in constructors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChevType {
    A,
    B,
    C,
    D,
    G,
}

impl std::str::FromStr for ChevType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(ChevType::A),
            "B" | "b" => Ok(ChevType::B),
            "C" | "c" => Ok(ChevType::C),
            "D" | "d" => Ok(ChevType::D),
            "G" | "g" => Ok(ChevType::G),
            other => Err(Error::Unsupported(format!("algebra type {other:?}"))),
        }
    }
}

#[derive(Clone)]
pub struct LieAlgebra {
    dim: usize,
    table: Vec<Vec<SparseVec>>,
    labels: Vec<String>,
    killing: Matrix,
    realization: Option<Vec<Matrix>>,
    expressor: Option<Matrix>,
    root_info: Option<RootAnnotation>,
    family: Option<(ChevType, usize)>,
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra(dim {}, basis {:?})", self.dim, self.labels)
    }
}

fn sparse_from_dense(v: &[CycNum]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn dense_from_sparse(s: &SparseVec, dim: usize) -> Vec<CycNum> {
    let mut v = vec![CycNum::zero(); dim];
    for (i, c) in s {
        v[*i] = c.clone();
    }
    v
}

impl LieAlgebra {
    /// Build and validate an algebra from sparse structure triples
    /// `(i, j, k, c)` meaning `[e_i, e_j]` has coefficient `c` on `e_k`.
    /// Missing mirror entries are filled by antisymmetry; conflicting
    /// mirrors are rejected.
    pub fn from_table(
        dim: usize,
        triples: &[(usize, usize, usize, CycNum)],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut dense = vec![vec![vec![CycNum::zero(); dim]; dim]; dim];
        let mut given = vec![vec![false; dim]; dim];
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "structure triple ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            dense[*i][*j][*k] = dense[*i][*j][*k].add(c);
            given[*i][*j] = true;
        }
        for i in 0..dim {
            for j in 0..dim {
                if given[i][j] && !given[j][i] {
                    dense[j][i] = dense[i][j].iter().map(|c| c.neg()).collect();
                    given[j][i] = true;
                }
            }
        }
        let table: Vec<Vec<SparseVec>> = dense
            .iter()
            .map(|row| row.iter().map(|v| sparse_from_dense(v)).collect())
            .collect();
        let labels =
            labels.unwrap_or_else(|| (0..dim).map(|i| format!("x{i}")).collect());
        if labels.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for dim {dim}",
                labels.len()
            )));
        }
        let mut alg = LieAlgebra {
            dim,
            table,
            labels,
            killing: Matrix::zeros(dim, dim),
            realization: None,
            expressor: None,
            root_info: None,
            family: None,
        };
        alg.validate()?;
        alg.killing = alg.compute_killing();
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in 0..=i {
                let a = dense_from_sparse(&self.table[i][j], self.dim);
                let b = dense_from_sparse(&self.table[j][i], self.dim);
                for k in 0..self.dim {
                    if !a[k].add(&b[k]).is_zero() {
                        return Err(Error::NotAntisymmetric { i, j });
                    }
                }
            }
        }
        // Jacobi on all basis triples i < j < k
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let bij = dense_from_sparse(&self.table[i][j], self.dim);
                for k in j + 1..self.dim {
                    let bjk = dense_from_sparse(&self.table[j][k], self.dim);
                    let bki = dense_from_sparse(&self.table[k][i], self.dim);
                    let t1 = self.bracket_basis_vec(i, &bjk);
                    let t2 = self.bracket_basis_vec(j, &bki);
                    let t3 = self.bracket_basis_vec(k, &bij);
                    for r in 0..self.dim {
                        if !t1[r].add(&t2[r]).add(&t3[r]).is_zero() {
                            return Err(Error::JacobiFails { i, j, k });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn bracket_basis_vec(&self, i: usize, y: &[CycNum]) -> Vec<CycNum> {
        let mut out = vec![CycNum::zero(); self.dim];
        for (j, c) in y.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, t) in &self.table[i][j] {
                out[*k] = out[*k].add(&c.mul(t));
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn root_info(&self) -> Option<&RootAnnotation> {
        self.root_info.as_ref()
    }

    /// Classical family this algebra was constructed as, if any.
    pub fn family(&self) -> Option<(ChevType, usize)> {
        self.family
    }

    pub fn realization(&self) -> Option<&[Matrix]> {
        self.realization.as_deref()
    }

    /// Sparse structure triples (only i < j, nonzero entries).
    pub fn structure_triples(&self) -> Vec<(usize, usize, usize, CycNum)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for (k, c) in &self.table[i][j] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[CycNum], y: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(x.len(), self.dim, "left operand dimension");
        assert_eq!(y.len(), self.dim, "right operand dimension");
        let mut out = vec![CycNum::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, t) in &self.table[i][j] {
                    out[*k] = out[*k].add(&ab.mul(t));
                }
            }
        }
        out
    }

    /// Matrix of `ad x` acting on coordinate columns.
    pub fn ad(&self, x: &[CycNum]) -> Matrix {
        assert_eq!(x.len(), self.dim);
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, t) in &self.table[i][j] {
                    let add = a.mul(t);
                    let cur = m.at(*k, j).add(&add);
                    m.set(*k, j, cur);
                }
            }
        }
        m
    }

    pub fn basis_vector(&self, i: usize) -> Vec<CycNum> {
        let mut v = vec![CycNum::zero(); self.dim];
        v[i] = CycNum::one();
        v
    }

    fn compute_killing(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad(&self.basis_vector(i))).collect();
        let mut gram = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..=i {
                // trace(ad e_i ∘ ad e_j) = Σ_{r,s} (ad e_i)[r][s] (ad e_j)[s][r]
                let mut t = CycNum::zero();
                for r in 0..self.dim {
                    for s in 0..self.dim {
                        let a = ads[i].at(r, s);
                        if !a.is_zero() {
                            let b = ads[j].at(s, r);
                            if !b.is_zero() {
                                t = t.add(&a.mul(b));
                            }
                        }
                    }
                }
                gram.set(i, j, t.clone());
                gram.set(j, i, t);
            }
        }
        gram
    }

    /// Gram matrix of the Killing form in the basis.
    pub fn killing_gram(&self) -> &Matrix {
        &self.killing
    }

    pub fn killing(&self, x: &[CycNum], y: &[CycNum]) -> CycNum {
        let ky = self.killing.apply(y);
        let mut acc = CycNum::zero();
        for (a, b) in x.iter().zip(&ky) {
            if !a.is_zero() && !b.is_zero() {
                acc = acc.add(&a.mul(b));
            }
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        self.table
            .iter()
            .all(|row| row.iter().all(|s| s.is_empty()))
    }

    /// Exact nullspace of the stacked ad-matrices of `elems`: all vectors
    /// commuting with every element of the list.
    pub fn centralizer(&self, elems: &[Vec<CycNum>]) -> Subspace {
        if elems.is_empty() {
            return Subspace::full(self.dim);
        }
        let mut rows = Vec::new();
        for x in elems {
            let ad = self.ad(x);
            for r in 0..self.dim {
                rows.push(ad.row(r).to_vec());
            }
        }
        Matrix::from_rows(rows).nullspace()
    }

    /// Restrict the bracket to a subspace that is closed under it, returning
    /// the subalgebra as a standalone algebra in the subspace basis. If the
    /// subspace is the full space, the original algebra (with any
    /// annotations) is returned unchanged.
    pub fn subalgebra_on(&self, space: &Subspace) -> Result<LieAlgebra> {
        assert_eq!(space.ambient_dim(), self.dim);
        if space.dim() == self.dim {
            return Ok(self.clone());
        }
        let d = space.dim();
        let mut triples = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let b = self.bracket(&space.basis()[i], &space.basis()[j]);
                let Some(coords) = space.coords(&b) else {
                    return Err(Error::DimensionMismatch(
                        "subspace is not closed under the bracket".into(),
                    ));
                };
                for (k, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        triples.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        LieAlgebra::from_table(d, &triples, None)
    }

    /// Direct sum with block-diagonal bracket.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let d = self.dim + other.dim;
        let mut triples = Vec::new();
        for (i, j, k, c) in self.structure_triples() {
            triples.push((i, j, k, c));
        }
        for (i, j, k, c) in other.structure_triples() {
            triples.push((i + self.dim, j + self.dim, k + self.dim, c));
        }
        let labels = self
            .labels
            .iter()
            .map(|l| format!("l.{l}"))
            .chain(other.labels.iter().map(|l| format!("r.{l}")))
            .collect();
        LieAlgebra::from_table(d, &triples, Some(labels)).expect("sum of valid tables")
    }

    /// Express a matrix of the realization's ambient space in the basis.
    pub fn express_matrix(&self, m: &Matrix) -> Result<Vec<CycNum>> {
        let (mats, expr) = match (&self.realization, &self.expressor) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Unsupported("algebra has no matrix realization".into())),
        };
        let n = mats[0].nrows();
        let mut flat = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                flat.push(m.at(r, c).clone());
            }
        }
        let coords = expr.apply(&flat);
        // defensive residual check: the expressor is a left inverse only on
        // the span of the realization
        let mut recon = vec![CycNum::zero(); n * n];
        for (i, co) in coords.iter().enumerate() {
            if co.is_zero() {
                continue;
            }
            for r in 0..n {
                for c in 0..n {
                    let idx = r * n + c;
                    recon[idx] = recon[idx].add(&co.mul(mats[i].at(r, c)));
                }
            }
        }
        if recon.iter().zip(&flat).any(|(a, b)| a != b) {
            return Err(Error::NoSolution);
        }
        Ok(coords)
    }

    /// Dimension of the space of linear maps commuting with every `ad x`,
    /// computed by exact row reduction of the full intertwining system.
    pub fn centroid_dimension(&self) -> usize {
        let d = self.dim;
        let unknowns = d * d;
        let ads: Vec<Matrix> = (0..d).map(|i| self.ad(&self.basis_vector(i))).collect();
        // row-echelon accumulation keyed by pivot column
        let mut pivot_rows: Vec<Option<Vec<CycNum>>> = vec![None; unknowns];
        let mut rank = 0usize;
        for a in &ads {
            for r in 0..d {
                for s in 0..d {
                    // equation: Σ_k a[r][k] C[k][s] − C[r][k] a[k][s] = 0
                    let mut row = vec![CycNum::zero(); unknowns];
                    for k in 0..d {
                        let coeff = a.at(r, k);
                        if !coeff.is_zero() {
                            let idx = k * d + s;
                            row[idx] = row[idx].add(coeff);
                        }
                        let coeff2 = a.at(k, s);
                        if !coeff2.is_zero() {
                            let idx = r * d + k;
                            row[idx] = row[idx].sub(coeff2);
                        }
                    }
                    // reduce against existing pivots
                    for col in 0..unknowns {
                        if row[col].is_zero() {
                            continue;
                        }
                        match &pivot_rows[col] {
                            Some(p) => {
                                let f = row[col].clone();
                                for c2 in col..unknowns {
                                    if !p[c2].is_zero() {
                                        row[c2] = row[c2].sub(&f.mul(&p[c2]));
                                    }
                                }
                            }
                            None => {
                                let inv = row[col].inv().expect("nonzero");
                                for c2 in col..unknowns {
                                    if !row[c2].is_zero() {
                                        row[c2] = row[c2].mul(&inv);
                                    }
                                }
                                pivot_rows[col] = Some(row);
                                rank += 1;
                                break;
                            }
                        }
                    }
                    if rank == unknowns {
                        return 0;
                    }
                }
            }
        }
        unknowns - rank
    }

    /// True iff the Killing form is nondegenerate and the adjoint
    /// representation is irreducible. With constructor annotations present
    /// this reduces to connectivity of the root set; otherwise the exact
    /// commutant (centroid) of the adjoint action is computed and must be
    /// one-dimensional.
    pub fn is_simple(&self) -> bool {
        if self.dim == 0 {
            return false;
        }
        if self.killing.det().is_zero() {
            return false;
        }
        if let Some(count) = self.annotated_component_count() {
            return count == 1;
        }
        self.centroid_dimension() == 1
    }

    /// Number of connected components of the annotated root set under the
    /// transferred Killing pairing, or None if annotations are absent or
    /// fail their self-checks.
    fn annotated_component_count(&self) -> Option<usize> {
        let info = self.root_info.as_ref()?;
        let hs: Vec<Vec<CycNum>> = info.cartan.iter().map(|&i| self.basis_vector(i)).collect();
        let l = hs.len();
        if l == 0 {
            return None;
        }
        // verify the annotations describe a genuine simultaneous
        // eigendecomposition: Cartan abelian, each root vector a joint
        // eigenvector with nonzero functional, non-root elements all Cartan
        let mut root_rows: Vec<Vec<CycNum>> = Vec::new();
        let mut root_indices: Vec<usize> = Vec::new();
        for i in 0..self.dim {
            match &info.root_of[i] {
                None => {
                    if !info.cartan.contains(&i) {
                        return None;
                    }
                }
                Some(_) => {
                    let mut row = Vec::with_capacity(l);
                    for h in &hs {
                        let b = self.bracket(h, &self.basis_vector(i));
                        // must be a multiple of e_i
                        let mut scal = CycNum::zero();
                        for (k, c) in b.iter().enumerate() {
                            if !c.is_zero() {
                                if k != i {
                                    return None;
                                }
                                scal = c.clone();
                            }
                        }
                        row.push(scal);
                    }
                    if row.iter().all(|c| c.is_zero()) {
                        return None;
                    }
                    root_rows.push(row);
                    root_indices.push(i);
                }
            }
        }
        for (a, ha) in hs.iter().enumerate() {
            for hb in hs.iter().skip(a + 1) {
                if self.bracket(ha, hb).iter().any(|c| !c.is_zero()) {
                    return None;
                }
            }
        }
        if root_rows.len() + l != self.dim {
            return None;
        }
        // transferred pairing (α|β) = α G⁻¹ βᵀ with G the Killing Gram on h
        let mut g = Matrix::zeros(l, l);
        for a in 0..l {
            for b in 0..l {
                g.set(a, b, self.killing(&hs[a], &hs[b]));
            }
        }
        let ginv = g.inverse().ok()?;
        let pair = |x: &[CycNum], y: &[CycNum]| -> CycNum {
            let gy = ginv.apply(y);
            let mut acc = CycNum::zero();
            for (a, b) in x.iter().zip(&gy) {
                acc = acc.add(&a.mul(b));
            }
            acc
        };
        // union-find over roots connected by nonzero pairing
        let n = root_rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..n {
            for j in i + 1..n {
                if !pair(&root_rows[i], &root_rows[j]).is_zero() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut reps: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        reps.sort_unstable();
        reps.dedup();
        Some(reps.len())
    }

    /// Classical simple Lie algebras in a root-adapted basis built from a
    /// faithful matrix realization. Supported: A1–A3, B2, C2, D4, G2.
    pub fn chevalley(kind: ChevType, rank: usize) -> Result<LieAlgebra> {
        let mut alg = match (kind, rank) {
            (ChevType::A, r) if (1..=3).contains(&r) => Self::special_linear(r + 1),
            (ChevType::B, 2) => Self::orthogonal_or_symplectic(ChevType::B, 2),
            (ChevType::C, 2) => Self::orthogonal_or_symplectic(ChevType::C, 2),
            (ChevType::D, 4) => Self::orthogonal_or_symplectic(ChevType::D, 4),
            (ChevType::G, 2) => Self::octonion_derivations(),
            (k, r) => Err(Error::Unsupported(format!("type {k:?} rank {r}"))),
        }?;
        alg.family = Some((kind, rank));
        Ok(alg)
    }

    fn assemble_from_realization(
        mats: Vec<Matrix>,
        labels: Vec<String>,
        root_info: Option<RootAnnotation>,
    ) -> Result<LieAlgebra> {
        let dim = mats.len();
        let n = mats[0].nrows();
        // stacked flattened basis and its least-squares left inverse
        let mut cols = Matrix::zeros(n * n, dim);
        for (j, m) in mats.iter().enumerate() {
            for r in 0..n {
                for c in 0..n {
                    cols.set(r * n + c, j, m.at(r, c).clone());
                }
            }
        }
        let colst = cols.transpose();
        let gram = colst.mul(&cols);
        let expressor = gram
            .inverse()
            .map_err(|_| Error::DimensionMismatch("realization matrices dependent".into()))?
            .mul(&colst);
        let express = |m: &Matrix| -> Vec<CycNum> {
            let mut flat = Vec::with_capacity(n * n);
            for r in 0..n {
                for c in 0..n {
                    flat.push(m.at(r, c).clone());
                }
            }
            expressor.apply(&flat)
        };
        let mut triples = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let comm = mats[i].mul(&mats[j]).sub(&mats[j].mul(&mats[i]));
                let coords = express(&comm);
                // exactness check: commutator must lie in the span
                let mut recon2 = Matrix::zeros(n, n);
                for (k, co) in coords.iter().enumerate() {
                    if !co.is_zero() {
                        for r in 0..n {
                            for c in 0..n {
                                let v = recon2.at(r, c).add(&co.mul(mats[k].at(r, c)));
                                recon2.set(r, c, v);
                            }
                        }
                    }
                }
                if recon2 != comm {
                    return Err(Error::DimensionMismatch(
                        "realization not closed under commutators".into(),
                    ));
                }
                for (k, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        triples.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        let mut alg = LieAlgebra::from_table(dim, &triples, Some(labels))?;
        alg.realization = Some(mats);
        alg.expressor = Some(expressor);
        alg.root_info = root_info;
        Ok(alg)
    }

    fn special_linear(n: usize) -> Result<LieAlgebra> {
        let unit = |i: usize, j: usize| {
            let mut m = Matrix::zeros(n, n);
            m.set(i, j, CycNum::one());
            m
        };
        // ε-weights live in R^n; simple roots α_k = ε_k − ε_{k+1}
        let simples: Vec<Vec<Rat>> = (0..n - 1)
            .map(|k| {
                let mut v = vec![Rat::zero(); n];
                v[k] = Rat::one();
                v[k + 1] = -Rat::one();
                v
            })
            .collect();
        let mut positives: Vec<(Vec<i64>, usize, usize)> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i < j {
                    let mut w = vec![Rat::zero(); n];
                    w[i] = Rat::one();
                    w[j] = -Rat::one();
                    let coords = solve_root_coords(&simples, &w)?;
                    positives.push((coords, i, j));
                }
            }
        }
        sort_positives(&mut positives);
        let mut mats = Vec::new();
        let mut labels = Vec::new();
        let mut root_of = Vec::new();
        for (coords, i, j) in &positives {
            mats.push(unit(*i, *j));
            labels.push(format!("E{}{}", i + 1, j + 1));
            root_of.push(Some(coords.clone()));
        }
        let cartan_start = mats.len();
        for k in 0..n - 1 {
            let mut m = Matrix::zeros(n, n);
            m.set(k, k, CycNum::one());
            m.set(k + 1, k + 1, CycNum::from_int(-1));
            mats.push(m);
            labels.push(format!("H{}", k + 1));
            root_of.push(None);
        }
        for (coords, i, j) in &positives {
            mats.push(unit(*j, *i));
            labels.push(format!("E{}{}", j + 1, i + 1));
            root_of.push(Some(coords.iter().map(|c| -c).collect()));
        }
        let cartan = (cartan_start..cartan_start + n - 1).collect();
        Self::assemble_from_realization(mats, labels, Some(RootAnnotation { cartan, root_of }))
    }

    /// Split orthogonal (B: odd, D: even) and symplectic (C) algebras in the
    /// bilinear-form realization X ↦ −(form-adjoint), with the form
    /// antidiagonal. Basis elements are E_ab − j_a j_b E_{b'a'} on deduped
    /// index pairs, where a' = n+1−a and j is the sign vector of the form.
    fn orthogonal_or_symplectic(kind: ChevType, l: usize) -> Result<LieAlgebra> {
        let n = match kind {
            ChevType::B => 2 * l + 1,
            ChevType::C | ChevType::D => 2 * l,
            _ => unreachable!(),
        };
        let conj = |a: usize| n + 1 - a; // 1-based index reflection
        let sign = |a: usize| -> i64 {
            if kind == ChevType::C && a > l {
                -1
            } else {
                1
            }
        };
        // ε̂: 1-based index → (coordinate, sign) in R^l, middle index → zero
        let eps_hat = |a: usize| -> Vec<Rat> {
            let mut v = vec![Rat::zero(); l];
            if a <= l {
                v[a - 1] = Rat::one();
            } else if conj(a) <= l {
                v[conj(a) - 1] = -Rat::one();
            }
            v
        };
        let simples: Vec<Vec<Rat>> = (0..l)
            .map(|k| {
                let mut v = vec![Rat::zero(); l];
                match kind {
                    ChevType::B => {
                        if k + 1 < l {
                            v[k] = Rat::one();
                            v[k + 1] = -Rat::one();
                        } else {
                            v[k] = Rat::one();
                        }
                    }
                    ChevType::C => {
                        if k + 1 < l {
                            v[k] = Rat::one();
                            v[k + 1] = -Rat::one();
                        } else {
                            v[k] = rint(2);
                        }
                    }
                    ChevType::D => {
                        if k + 1 < l {
                            v[k] = Rat::one();
                            v[k + 1] = -Rat::one();
                        } else {
                            v[k - 1] = Rat::one();
                            v[k] = Rat::one();
                        }
                    }
                    _ => unreachable!(),
                }
                v
            })
            .collect();
        // enumerate canonical index-pair classes {(a,b), (b',a')}
        let mut classes: Vec<(usize, usize)> = Vec::new();
        for a in 1..=n {
            for b in 1..=n {
                if a == b {
                    continue;
                }
                if kind != ChevType::C && b == conj(a) {
                    continue; // vanishes in the orthogonal algebra
                }
                let mirror = (conj(b), conj(a));
                if mirror != (a, b) && mirror < (a, b) {
                    continue; // keep lex-smallest representative
                }
                classes.push((a, b));
            }
        }
        let build = |a: usize, b: usize| -> Matrix {
            let mut m = Matrix::zeros(n, n);
            m.set(a - 1, b - 1, CycNum::one());
            let (c, d) = (conj(b), conj(a));
            if (c, d) != (a, b) {
                let s = -sign(a) * sign(b);
                let prev = m.at(c - 1, d - 1).add(&CycNum::from_int(s));
                m.set(c - 1, d - 1, prev);
            }
            m
        };
        let mut positives: Vec<(Vec<i64>, usize, usize)> = Vec::new();
        let mut negatives: Vec<(Vec<i64>, usize, usize)> = Vec::new();
        for (a, b) in classes {
            let mut w = eps_hat(a);
            for (wi, e) in w.iter_mut().zip(eps_hat(b)) {
                *wi -= e;
            }
            if w.iter().all(|x| x.is_zero()) {
                continue; // not a root vector (cannot happen off-diagonal)
            }
            let coords = solve_root_coords(&simples, &w)?;
            let first = coords.iter().find(|&&c| c != 0).copied().unwrap_or(0);
            if first > 0 {
                positives.push((coords, a, b));
            } else {
                negatives.push((coords.iter().map(|c| -c).collect(), a, b));
            }
        }
        sort_positives(&mut positives);
        let mut mats = Vec::new();
        let mut labels = Vec::new();
        let mut root_of = Vec::new();
        for (coords, a, b) in &positives {
            mats.push(build(*a, *b));
            labels.push(format!("G{a}{b}"));
            root_of.push(Some(coords.clone()));
        }
        let cartan_start = mats.len();
        for a in 1..=l {
            let mut m = Matrix::zeros(n, n);
            m.set(a - 1, a - 1, CycNum::one());
            m.set(conj(a) - 1, conj(a) - 1, CycNum::from_int(-1));
            mats.push(m);
            labels.push(format!("H{a}"));
            root_of.push(None);
        }
        // negatives ordered to mirror the positives
        for (pcoords, _, _) in &positives {
            let neg: Vec<i64> = pcoords.clone();
            let found = negatives
                .iter()
                .find(|(c, _, _)| c == &neg)
                .expect("mirror root vector");
            mats.push(build(found.1, found.2));
            labels.push(format!("G{}{}", found.1, found.2));
            root_of.push(Some(neg.iter().map(|c| -c).collect()));
        }
        let cartan = (cartan_start..cartan_start + l).collect();
        Self::assemble_from_realization(mats, labels, Some(RootAnnotation { cartan, root_of }))
    }

    /// The exceptional 14-dimensional algebra as the derivation algebra of
    /// the split octonions in the vector-matrix model.
    fn octonion_derivations() -> Result<LieAlgebra> {
        let prod = octonion_table();
        // derivation condition: D(x_i ∘ x_j) = D(x_i) ∘ x_j + x_i ∘ D(x_j)
        // unknowns: D[r][k] laid out as r*8 + k
        let mut rows = Vec::new();
        for i in 0..8 {
            for j in 0..8 {
                for r in 0..8 {
                    let mut row = vec![CycNum::zero(); 64];
                    // D applied to the product: Σ_k prod[i][j][k] D[r][k]
                    for (k, c) in &prod[i][j] {
                        let idx = r * 8 + k;
                        row[idx] = row[idx].add(&CycNum::from_rat(c.clone()));
                    }
                    // − (D x_i) ∘ x_j: −Σ_k D[k][i] prod[k][j][r]
                    for k in 0..8 {
                        for (t, c) in &prod[k][j] {
                            if *t == r {
                                let idx = k * 8 + i;
                                row[idx] = row[idx].sub(&CycNum::from_rat(c.clone()));
                            }
                        }
                    }
                    // − x_i ∘ (D x_j): −Σ_k D[k][j] prod[i][k][r]
                    for k in 0..8 {
                        for (t, c) in &prod[i][k] {
                            if *t == r {
                                let idx = k * 8 + j;
                                row[idx] = row[idx].sub(&CycNum::from_rat(c.clone()));
                            }
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let ker = Matrix::from_rows(rows).nullspace();
        let dim = ker.dim();
        if dim != 14 {
            return Err(Error::DimensionMismatch(format!(
                "octonion derivation space has dim {dim}, expected 14"
            )));
        }
        let mats: Vec<Matrix> = ker
            .basis()
            .iter()
            .map(|v| {
                let mut m = Matrix::zeros(8, 8);
                for r in 0..8 {
                    for k in 0..8 {
                        m.set(r, k, v[r * 8 + k].clone());
                    }
                }
                m
            })
            .collect();
        let labels = (1..=14).map(|i| format!("D{i}")).collect();
        Self::assemble_from_realization(mats, labels, None)
    }
}

fn sort_positives(positives: &mut [(Vec<i64>, usize, usize)]) {
    // ascending height; within a height level, earlier simple roots first
    positives.sort_by(|a, b| {
        let ha: i64 = a.0.iter().sum();
        let hb: i64 = b.0.iter().sum();
        ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
    });
}

fn solve_root_coords(simples: &[Vec<Rat>], weight: &[Rat]) -> Result<Vec<i64>> {
    let rows = weight.len();
    let cols = simples.len();
    let mut m = Matrix::zeros(rows, cols);
    for (j, s) in simples.iter().enumerate() {
        for (i, v) in s.iter().enumerate() {
            m.set(i, j, CycNum::from_rat(v.clone()));
        }
    }
    let b: Vec<CycNum> = weight.iter().map(|v| CycNum::from_rat(v.clone())).collect();
    let x = m.solve(&b)?;
    x.iter()
        .map(|c| {
            let r = c.as_rat().ok_or(Error::NonIntegralPairing)?;
            if !r.is_integer() {
                return Err(Error::NonIntegralPairing);
            }
            let i: i128 = (&r.to_integer())
                .try_into()
                .map_err(|_| Error::NonIntegralPairing)?;
            Ok(i as i64)
        })
        .collect()
}

/// Multiplication table of the split octonions (vector-matrix model):
/// basis e1, e2 (diagonal idempotents), u1..u3, v1..v3 with
/// (a, v; w, b)(a', v'; w', b') =
///   (aa' + v·w', av' + b'v − w×w'; a'w + bw' + v×v', bb' + w·v').
fn octonion_table() -> Vec<Vec<Vec<(usize, Rat)>>> {
    // index: 0 = e1, 1 = e2, 2..5 = u1..u3, 5..8 = v1..v3
    #[derive(Clone)]
    struct Oct {
        a: Rat,
        v: [Rat; 3],
        w: [Rat; 3],
        b: Rat,
    }
    fn basis(i: usize) -> Oct {
        let z = Rat::zero();
        let mut o = Oct {
            a: z.clone(),
            v: [z.clone(), z.clone(), z.clone()],
            w: [z.clone(), z.clone(), z.clone()],
            b: z,
        };
        match i {
            0 => o.a = Rat::one(),
            1 => o.b = Rat::one(),
            2..=4 => o.v[i - 2] = Rat::one(),
            _ => o.w[i - 5] = Rat::one(),
        }
        o
    }
    fn dot(x: &[Rat; 3], y: &[Rat; 3]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..3 {
            acc += &x[i] * &y[i];
        }
        acc
    }
    fn cross(x: &[Rat; 3], y: &[Rat; 3]) -> [Rat; 3] {
        [
            &x[1] * &y[2] - &x[2] * &y[1],
            &x[2] * &y[0] - &x[0] * &y[2],
            &x[0] * &y[1] - &x[1] * &y[0],
        ]
    }
    fn mul(p: &Oct, q: &Oct) -> Oct {
        let cw = cross(&p.w, &q.w);
        let cv = cross(&p.v, &q.v);
        let mut v = [Rat::zero(), Rat::zero(), Rat::zero()];
        let mut w = [Rat::zero(), Rat::zero(), Rat::zero()];
        for i in 0..3 {
            v[i] = &p.a * &q.v[i] + &q.b * &p.v[i] - &cw[i];
            w[i] = &q.a * &p.w[i] + &p.b * &q.w[i] + &cv[i];
        }
        Oct {
            a: &p.a * &q.a + dot(&p.v, &q.w),
            v,
            w,
            b: &p.b * &q.b + dot(&p.w, &q.v),
        }
    }
    fn coords(o: &Oct) -> Vec<Rat> {
        let mut out = vec![o.a.clone(), o.b.clone()];
        out.extend(o.v.iter().cloned());
        out.extend(o.w.iter().cloned());
        out
    }
    let mut table = vec![vec![Vec::new(); 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let p = mul(&basis(i), &basis(j));
            let c = coords(&p);
            table[i][j] = c
                .into_iter()
                .enumerate()
                .filter(|(_, r)| !r.is_zero())
                .collect();
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(k: i64) -> CycNum {
        CycNum::from_int(k)
    }

    fn sl2() -> LieAlgebra {
        LieAlgebra::chevalley(ChevType::A, 1).unwrap()
    }

    #[test]
    fn sl2_basis_order_and_brackets() {
        let g = sl2();
        assert_eq!(g.dim(), 3);
        assert_eq!(g.labels(), &["E12", "H1", "E21"]);
        let (e, h, f) = (g.basis_vector(0), g.basis_vector(1), g.basis_vector(2));
        assert_eq!(g.bracket(&e, &f), h);
        assert_eq!(g.bracket(&h, &e), vec![c(2), c(0), c(0)]);
        assert_eq!(g.bracket(&h, &f), vec![c(0), c(0), c(-2)]);
        assert_eq!(g.bracket(&e, &e), vec![c(0); 3]);
    }

    #[test]
    fn sl2_killing_values() {
        let g = sl2();
        let (e, h, f) = (g.basis_vector(0), g.basis_vector(1), g.basis_vector(2));
        assert_eq!(g.killing(&h, &h), c(8));
        assert_eq!(g.killing(&e, &f), c(4));
        assert_eq!(g.killing(&e, &e), c(0));
        assert_eq!(g.killing(&e, &h), c(0));
    }

    #[test]
    fn constructor_dimensions() {
        let dims = [
            (ChevType::A, 1, 3),
            (ChevType::A, 2, 8),
            (ChevType::A, 3, 15),
            (ChevType::B, 2, 10),
            (ChevType::C, 2, 10),
            (ChevType::D, 4, 28),
            (ChevType::G, 2, 14),
        ];
        for (k, r, d) in dims {
            let g = LieAlgebra::chevalley(k, r).unwrap();
            assert_eq!(g.dim(), d, "dim of {k:?}{r}");
        }
        assert!(LieAlgebra::chevalley(ChevType::B, 3).is_err());
        assert!(LieAlgebra::chevalley(ChevType::G, 1).is_err());
    }

    #[test]
    fn all_constructors_simple_with_nondegenerate_killing() {
        for (k, r) in [
            (ChevType::A, 1),
            (ChevType::A, 2),
            (ChevType::A, 3),
            (ChevType::B, 2),
            (ChevType::C, 2),
            (ChevType::D, 4),
            (ChevType::G, 2),
        ] {
            let g = LieAlgebra::chevalley(k, r).unwrap();
            assert!(!g.killing_gram().det().is_zero(), "killing degenerate {k:?}{r}");
            assert!(g.is_simple(), "not simple: {k:?}{r}");
        }
    }

    #[test]
    fn abelian_and_direct_sum_are_not_simple() {
        let ab = LieAlgebra::from_table(2, &[], None).unwrap();
        assert!(!ab.is_simple());
        assert!(ab.is_abelian());
        let s = sl2().direct_sum(&sl2());
        assert_eq!(s.dim(), 6);
        assert!(!s.killing_gram().det().is_zero());
        assert!(!s.is_simple());
        assert_eq!(s.centroid_dimension(), 2);
    }

    #[test]
    fn centroid_of_sl2_is_scalars() {
        assert_eq!(sl2().centroid_dimension(), 1);
    }

    #[test]
    fn killing_invariance_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [sl2(), LieAlgebra::chevalley(ChevType::A, 2).unwrap()] {
            for _ in 0..100 {
                let rv = |rng: &mut ChaCha8Rng| -> Vec<CycNum> {
                    (0..g.dim())
                        .map(|_| c(rng.gen_range(-3i64..=3)))
                        .collect()
                };
                let (x, y, z) = (rv(&mut rng), rv(&mut rng), rv(&mut rng));
                let lhs = g.killing(&g.bracket(&x, &y), &z);
                let rhs = g.killing(&x, &g.bracket(&y, &z));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let g = sl2();
        let h = g.basis_vector(1);
        let ch = g.centralizer(&[h]);
        assert_eq!(ch.dim(), 1);
        assert!(ch.contains(&g.basis_vector(1)));
        let e = g.basis_vector(0);
        let ce = g.centralizer(&[e]);
        assert_eq!(ce.dim(), 1);
        assert!(ce.contains(&g.basis_vector(0)));
        assert_eq!(g.centralizer(&[]).dim(), 3);
    }

    #[test]
    fn bad_tables_are_rejected() {
        // [x0, x1] = x0 but [x1, x0] = x0 breaks antisymmetry
        let bad = LieAlgebra::from_table(
            2,
            &[(0, 1, 0, c(1)), (1, 0, 0, c(1))],
            None,
        );
        assert!(matches!(bad, Err(Error::NotAntisymmetric { .. })));
        // a bracket violating Jacobi: [x0,x1]=x2, [x1,x2]=x0, [x2,x0]=x0
        let bad2 = LieAlgebra::from_table(
            3,
            &[
                (0, 1, 2, c(1)),
                (1, 2, 0, c(1)),
                (2, 0, 0, c(1)),
            ],
            None,
        );
        assert!(matches!(bad2, Err(Error::JacobiFails { .. })));
    }

    #[test]
    fn subalgebra_restriction() {
        let g = LieAlgebra::chevalley(ChevType::A, 2).unwrap();
        // fixed algebra of the order-2 diagram symmetry: span{e1+e2, f1+f2, h1+h2}
        let e1 = g.basis_vector(0);
        let e2 = g.basis_vector(1);
        let idx = |label: &str| g.labels().iter().position(|l| l == label).unwrap();
        let add = |a: &[CycNum], b: &[CycNum]| -> Vec<CycNum> {
            a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
        };
        let f1 = g.basis_vector(idx("E21"));
        let f2 = g.basis_vector(idx("E32"));
        let h1 = g.basis_vector(idx("H1"));
        let h2 = g.basis_vector(idx("H2"));
        let span = Subspace::from_span(
            8,
            vec![add(&e1, &e2), add(&f1, &f2), add(&h1, &h2)],
        );
        let sub = g.subalgebra_on(&span).unwrap();
        assert_eq!(sub.dim(), 3);
        assert!(!sub.killing_gram().det().is_zero());
        assert!(sub.is_simple());
    }

    #[test]
    fn octonion_realization_brackets_match_table() {
        let g = LieAlgebra::chevalley(ChevType::G, 2).unwrap();
        let mats = g.realization().unwrap();
        // spot-check: the table bracket of two basis elements equals the
        // expressed matrix commutator
        let m = mats[0].mul(&mats[5]).sub(&mats[5].mul(&mats[0]));
        let coords = g.express_matrix(&m).unwrap();
        let table = g.bracket(&g.basis_vector(0), &g.basis_vector(5));
        assert_eq!(coords, table);
    }

    #[test]
    fn root_annotations_are_consistent() {
        for (k, r) in [
            (ChevType::A, 2),
            (ChevType::B, 2),
            (ChevType::C, 2),
            (ChevType::D, 4),
        ] {
            let g = LieAlgebra::chevalley(k, r).unwrap();
            let info = g.root_info().unwrap();
            let n_roots = info.root_of.iter().filter(|r| r.is_some()).count();
            assert_eq!(n_roots + info.cartan.len(), g.dim());
            // each annotated vector is a joint eigenvector of the Cartan
            for (i, ro) in info.root_of.iter().enumerate() {
                if ro.is_some() {
                    for &hidx in &info.cartan {
                        let b = g.bracket(&g.basis_vector(hidx), &g.basis_vector(i));
                        for (kk, v) in b.iter().enumerate() {
                            if kk != i {
                                assert!(v.is_zero(), "{k:?}{r}: basis {i} not eigen");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn scaled_bracket_bilinearity() {
        let g = sl2();
        let x = vec![c(2), c(-1), c(3)];
        let y = vec![c(0), c(5), c(-2)];
        let sx: Vec<CycNum> = x.iter().map(|v| v.scale(&rat(3, 2))).collect();
        let lhs = g.bracket(&sx, &y);
        let rhs: Vec<CycNum> = g.bracket(&x, &y).iter().map(|v| v.scale(&rat(3, 2))).collect();
        assert_eq!(lhs, rhs);
    }
}

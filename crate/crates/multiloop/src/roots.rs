//! Cartan subalgebras, root decompositions, coroots, sl2-pairs,
//! reflections, and finite-root-system verification.
//!
//! Roots are stored as coordinate rows: the row of α lists ⟨α, h_j⟩ over
//! the chosen Cartan basis h_1, …, h_r. All eigenvalue computations are
//! exact; eigenvalues must lie in the session cyclotomic field or the
//! decomposition reports `FieldTooSmall`.

use crate::aut::AutTuple;
use crate::cyclo::{CycNum, Rat};
use crate::error::Error;
use crate::lie::LieAlgebra;
use crate::linalg::{roots_in_field, Matrix, Subspace};
use crate::Result;
use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bounded retries for the seeded Cartan search.
pub const CARTAN_RETRIES: usize = 8;

/// Simultaneous fixed space of a tuple: nullspace of the stacked (M_i − I).
pub fn fixed_subalgebra(g: &LieAlgebra, tuple: &AutTuple) -> Subspace {
    let d = g.dim();
    if tuple.n() == 0 {
        return Subspace::full(d);
    }
    let mut rows = Vec::new();
    for a in tuple.auts() {
        let m = a.matrix();
        for r in 0..d {
            let mut row = m.row(r).to_vec();
            row[r] = row[r].sub(&CycNum::one());
            rows.push(row);
        }
    }
    Matrix::from_rows(rows).nullspace()
}

/// A root datum: Cartan basis, roots as coordinate rows, root spaces
/// refined by grading class, coroots, and the transferred form.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub h_basis: Vec<Vec<CycNum>>,
    /// grading periods (empty for an ungraded decomposition)
    pub m: Vec<u64>,
    /// nonzero roots as rows ⟨α, h_j⟩, deterministically ordered
    pub delta: Vec<Vec<CycNum>>,
    /// per root: (class λ̄, subspace of g_α^λ̄), classes sorted
    pub root_pieces: Vec<Vec<(Vec<u64>, Subspace)>>,
    /// the zero-weight space g_0, refined by class
    pub zero_pieces: Vec<(Vec<u64>, Subspace)>,
    /// coroots h_α as ambient vectors
    pub coroots: Vec<Vec<CycNum>>,
    /// coordinates of h_α in the Cartan basis
    pub coroot_in_h: Vec<Vec<CycNum>>,
    /// (α_i | α_j) transferred form on the root rows
    pub form_on_hstar: Matrix,
    /// Killing Gram of the ambient algebra restricted to h
    pub gram_h: Matrix,
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.h_basis.len()
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    /// −λ̄ componentwise mod m.
    pub fn neg_class(&self, class: &[u64]) -> Vec<u64> {
        class
            .iter()
            .zip(&self.m)
            .map(|(&l, &mi)| (mi - l % mi) % mi)
            .collect()
    }

    /// Index of a root row, comparing exactly (orders promoted as needed).
    pub fn root_index(&self, row: &[CycNum]) -> Option<usize> {
        self.delta.iter().position(|r| r.as_slice() == row)
    }

    /// The piece g_α^λ̄ if present.
    pub fn root_space(&self, alpha: usize, class: &[u64]) -> Option<&Subspace> {
        self.root_pieces[alpha]
            .iter()
            .find(|(c, _)| c.as_slice() == class)
            .map(|(_, s)| s)
    }

    /// All grading classes that occur anywhere in the decomposition.
    pub fn classes(&self) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = Vec::new();
        for (c, _) in &self.zero_pieces {
            if !out.contains(c) {
                out.push(c.clone());
            }
        }
        for pieces in &self.root_pieces {
            for (c, _) in pieces {
                if !out.contains(c) {
                    out.push(c.clone());
                }
            }
        }
        out.sort();
        out
    }

    /// The full grading component g^λ̄ as one subspace.
    pub fn class_space(&self, class: &[u64]) -> Subspace {
        let d = self.ambient_dim();
        let mut acc = Subspace::zero(d);
        for (c, s) in &self.zero_pieces {
            if c.as_slice() == class {
                acc = acc.sum(s);
            }
        }
        for pieces in &self.root_pieces {
            for (c, s) in pieces {
                if c.as_slice() == class {
                    acc = acc.sum(s);
                }
            }
        }
        acc
    }

    /// g_0 across all classes.
    pub fn zero_space(&self) -> Subspace {
        let d = self.ambient_dim();
        let mut acc = Subspace::zero(d);
        for (_, s) in &self.zero_pieces {
            acc = acc.sum(s);
        }
        acc
    }

    fn ambient_dim(&self) -> usize {
        self.h_basis[0].len()
    }

    /// ⟨γ, h_α⟩ for a functional row γ.
    pub fn pairing(&self, gamma: &[CycNum], alpha: usize) -> CycNum {
        let mut acc = CycNum::zero();
        for (gj, cj) in gamma.iter().zip(&self.coroot_in_h[alpha]) {
            acc = acc.add(&gj.mul(cj));
        }
        acc
    }

    /// (α_i | α_j) read from the transferred form.
    pub fn form(&self, i: usize, j: usize) -> &CycNum {
        self.form_on_hstar.at(i, j)
    }

    /// Total dimension of all stored pieces plus nothing else; equals
    /// dim g when the decomposition is complete.
    pub fn dimension_sum(&self) -> usize {
        let mut total = 0;
        for (_, s) in &self.zero_pieces {
            total += s.dim();
        }
        for pieces in &self.root_pieces {
            for (_, s) in pieces {
                total += s.dim();
            }
        }
        total
    }
}

/// An exact sl2-pair attached to (α, λ̄): [h_α, x±] = ±2x±, [x₊, x₋] = h_α.
#[derive(Clone, Debug)]
pub struct Sl2Triple {
    pub x_plus: Vec<CycNum>,
    pub x_minus: Vec<CycNum>,
    pub h_alpha: Vec<CycNum>,
    pub alpha: usize,
    pub lambda_bar: Vec<u64>,
}

fn row_is_zero(row: &[CycNum]) -> bool {
    row.iter().all(|c| c.is_zero())
}

fn row_sort_key(row: &[CycNum]) -> Vec<(u64, Vec<Rat>)> {
    row.iter().map(|c| c.sort_key()).collect()
}

/// Operator restricted to an invariant subspace, in that subspace's basis.
fn restrict_operator(m: &Matrix, sp: &Subspace) -> Result<Matrix> {
    let k = sp.dim();
    let mut cols = Vec::with_capacity(k);
    for b in sp.basis() {
        let img = m.apply(b);
        let c = sp.coords(&img).ok_or_else(|| {
            Error::DimensionMismatch("operator does not preserve the subspace".into())
        })?;
        cols.push(c);
    }
    let mut out = Matrix::zeros(k, k);
    for (j, c) in cols.iter().enumerate() {
        for (i, v) in c.iter().enumerate() {
            out.set(i, j, v.clone());
        }
    }
    Ok(out)
}

/// Kernel of (T − λ) inside the subspace, lifted back to ambient coords.
fn eigenspace_in(t_restricted: &Matrix, sp: &Subspace, lambda: &CycNum) -> Subspace {
    let k = sp.dim();
    let mut shifted = t_restricted.clone();
    for i in 0..k {
        let v = shifted.at(i, i).sub(lambda);
        shifted.set(i, i, v);
    }
    let ker = shifted.nullspace();
    let amb = sp.ambient_dim();
    let vecs: Vec<Vec<CycNum>> = ker
        .basis()
        .iter()
        .map(|c| {
            let mut v = vec![CycNum::zero(); amb];
            for (idx, coeff) in c.iter().enumerate() {
                if !coeff.is_zero() {
                    for (vi, bi) in v.iter_mut().zip(&sp.basis()[idx]) {
                        *vi = vi.add(&coeff.mul(bi));
                    }
                }
            }
            v
        })
        .collect();
    Subspace::from_span(amb, vecs)
}

struct Block {
    class: Vec<u64>,
    row: Vec<CycNum>,
    space: Subspace,
}

fn decompose(
    g: &LieAlgebra,
    tuple: Option<&AutTuple>,
    h: &Subspace,
    field_order: u64,
) -> Result<RootDatum> {
    let d = g.dim();
    let m: Vec<u64> = tuple.map(|t| t.periods().to_vec()).unwrap_or_default();
    let mut blocks = vec![Block {
        class: Vec::new(),
        row: Vec::new(),
        space: Subspace::full(d),
    }];
    // stage 1: joint eigenspaces of the commuting finite-order tuple; the
    // minimal polynomial of σ_i divides x^{m_i} − 1, which splits with
    // distinct roots, so the class dimensions always sum up
    if let Some(t) = tuple {
        for (i, a) in t.auts().iter().enumerate() {
            let mi = t.periods()[i];
            let mut next = Vec::new();
            for b in blocks {
                let restricted = restrict_operator(a.matrix(), &b.space)?;
                let mut seen = 0;
                for l in 0..mi {
                    let lambda = CycNum::zeta_pow(mi, l as i64);
                    let es = eigenspace_in(&restricted, &b.space, &lambda);
                    if es.dim() > 0 {
                        seen += es.dim();
                        let mut class = b.class.clone();
                        class.push(l);
                        next.push(Block {
                            class,
                            row: Vec::new(),
                            space: es,
                        });
                    }
                }
                if seen != b.space.dim() {
                    return Err(Error::NotDiagonalizable {
                        found: seen,
                        dim: b.space.dim(),
                    });
                }
            }
            blocks = next;
        }
    }
    // stage 2: refine by each ad h_j; eigenvalues located by exact trial
    // division of the squarefree characteristic polynomial
    let h_basis: Vec<Vec<CycNum>> = h.basis().to_vec();
    for hj in &h_basis {
        let ad = g.ad(hj);
        let mut next = Vec::new();
        for b in blocks {
            let restricted = restrict_operator(&ad, &b.space)?;
            let eigs = roots_in_field(&restricted.charpoly(), field_order)?;
            let mut seen = 0;
            for lambda in &eigs {
                let es = eigenspace_in(&restricted, &b.space, lambda);
                if es.dim() > 0 {
                    seen += es.dim();
                    let mut row = b.row.clone();
                    row.push(lambda.clone());
                    next.push(Block {
                        class: b.class.clone(),
                        row,
                        space: es,
                    });
                }
            }
            if seen != b.space.dim() {
                return Err(Error::NotDiagonalizable {
                    found: seen,
                    dim: b.space.dim(),
                });
            }
        }
        blocks = next;
    }
    // assemble: group blocks by root row
    let mut delta: Vec<Vec<CycNum>> = Vec::new();
    let mut root_pieces: Vec<Vec<(Vec<u64>, Subspace)>> = Vec::new();
    let mut zero_pieces: Vec<(Vec<u64>, Subspace)> = Vec::new();
    let mut order: Vec<usize> = Vec::new();
    for b in blocks {
        if row_is_zero(&b.row) {
            zero_pieces.push((b.class, b.space));
        } else {
            match delta.iter().position(|r| r.as_slice() == b.row.as_slice()) {
                Some(i) => root_pieces[i].push((b.class, b.space)),
                None => {
                    delta.push(b.row);
                    root_pieces.push(vec![(b.class, b.space)]);
                }
            }
        }
    }
    // deterministic ordering of roots and pieces
    for i in 0..delta.len() {
        order.push(i);
    }
    order.sort_by(|&a, &b| row_sort_key(&delta[a]).cmp(&row_sort_key(&delta[b])));
    let delta: Vec<Vec<CycNum>> = order.iter().map(|&i| delta[i].clone()).collect();
    let mut root_pieces: Vec<Vec<(Vec<u64>, Subspace)>> =
        order.iter().map(|&i| root_pieces[i].clone()).collect();
    for pieces in &mut root_pieces {
        pieces.sort_by(|a, b| a.0.cmp(&b.0));
    }
    zero_pieces.sort_by(|a, b| a.0.cmp(&b.0));
    // transferred form and coroots
    let r = h_basis.len();
    let mut gram = Matrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            gram.set(i, j, g.killing(&h_basis[i], &h_basis[j]));
        }
    }
    let gram_inv = gram.inverse().map_err(|_| Error::DegenerateCartanForm)?;
    let mut coroots = Vec::new();
    let mut coroot_in_h = Vec::new();
    for row in &delta {
        // ν⁻¹(α) in h-coords solves Gram · c = α-row
        let nu = gram_inv.apply(row);
        let mut aa = CycNum::zero();
        for (rv, cv) in row.iter().zip(&nu) {
            aa = aa.add(&rv.mul(cv));
        }
        if aa.is_zero() {
            return Err(Error::IsotropicRoot);
        }
        let two_over = CycNum::from_int(2).mul(&aa.inv()?);
        let ch: Vec<CycNum> = nu.iter().map(|c| c.mul(&two_over)).collect();
        let mut amb = vec![CycNum::zero(); d];
        for (c, hb) in ch.iter().zip(&h_basis) {
            if !c.is_zero() {
                for (a, b) in amb.iter_mut().zip(hb) {
                    *a = a.add(&c.mul(b));
                }
            }
        }
        // exactness: ⟨α, h_α⟩ = 2
        let mut pair = CycNum::zero();
        for (rv, cv) in row.iter().zip(&ch) {
            pair = pair.add(&rv.mul(cv));
        }
        debug_assert!(pair == CycNum::from_int(2));
        coroots.push(amb);
        coroot_in_h.push(ch);
    }
    let nd = delta.len();
    let mut form = Matrix::zeros(nd, nd);
    for i in 0..nd {
        let nui = gram_inv.apply(&delta[i]);
        for j in 0..nd {
            let mut v = CycNum::zero();
            for (a, b) in delta[j].iter().zip(&nui) {
                v = v.add(&a.mul(b));
            }
            form.set(i, j, v);
        }
    }
    Ok(RootDatum {
        h_basis,
        m,
        delta,
        root_pieces,
        zero_pieces,
        coroots,
        coroot_in_h,
        form_on_hstar: form,
        gram_h: gram,
    })
}

/// Root decomposition of g relative to h, ungraded.
pub fn root_decomposition(g: &LieAlgebra, h: &Subspace, field_order: u64) -> Result<RootDatum> {
    decompose(g, None, h, field_order)
}

/// Root decomposition refined by the joint eigenclasses of a commuting
/// tuple (the Λ̄-grading).
pub fn root_decomposition_graded(
    g: &LieAlgebra,
    tuple: &AutTuple,
    h: &Subspace,
    field_order: u64,
) -> Result<RootDatum> {
    decompose(g, Some(tuple), h, field_order)
}

/// Find a Cartan subalgebra of the subalgebra spanned by `g0` (assumed
/// reductive), verified maximal abelian and ad-diagonalizable on all of g.
/// Candidates: constructor annotations when `g0` is the full algebra, then
/// basis vectors of `g0`, then seeded pseudorandom combinations.
pub fn cartan_subalgebra(
    g: &LieAlgebra,
    g0: &Subspace,
    seed: u64,
    field_order: u64,
) -> Result<Subspace> {
    if g0.dim() == 0 {
        return Err(Error::ZeroFixedAlgebra);
    }
    // annotation fast path for the whole algebra
    if g0.dim() == g.dim() {
        if let Some(info) = g.root_info() {
            let span: Vec<Vec<CycNum>> =
                info.cartan.iter().map(|&i| g.basis_vector(i)).collect();
            let h = Subspace::from_span(g.dim(), span);
            decompose(g, None, &h, field_order)?;
            return Ok(h);
        }
    }
    let sub = g.subalgebra_on(g0)?;
    if sub.is_abelian() {
        decompose(g, None, g0, field_order)?;
        return Ok(g0.clone());
    }
    let d0 = sub.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Vec<CycNum>> = (0..d0).map(|i| sub.basis_vector(i)).collect();
    for _ in 0..CARTAN_RETRIES {
        candidates.push(
            (0..d0)
                .map(|_| CycNum::from_int(rng.gen_range(-9i64..=9)))
                .collect(),
        );
    }
    let mut field_issue = false;
    for x in candidates {
        if x.iter().all(|c| c.is_zero()) {
            continue;
        }
        // Engel subalgebra: generalized 0-eigenspace of ad x within g0
        let adx = sub.ad(&x);
        let engel = adx.pow(d0 as u64).nullspace();
        if engel.dim() == 0 || engel.dim() == d0 {
            continue;
        }
        // abelian?
        let eb = engel.basis();
        let mut abelian = true;
        'ab: for i in 0..eb.len() {
            for j in i + 1..eb.len() {
                if sub.bracket(&eb[i], &eb[j]).iter().any(|c| !c.is_zero()) {
                    abelian = false;
                    break 'ab;
                }
            }
        }
        if !abelian {
            continue;
        }
        // self-normalizing within g0: v with [v, E] ⊆ E must lie in E
        let normalizer = normalizer_in(&sub, &engel);
        if normalizer != engel {
            continue;
        }
        // lift to ambient coordinates
        let lifted: Vec<Vec<CycNum>> = eb
            .iter()
            .map(|c| {
                let mut v = vec![CycNum::zero(); g.dim()];
                for (idx, coeff) in c.iter().enumerate() {
                    if !coeff.is_zero() {
                        for (vi, bi) in v.iter_mut().zip(&g0.basis()[idx]) {
                            *vi = vi.add(&coeff.mul(bi));
                        }
                    }
                }
                v
            })
            .collect();
        let h = Subspace::from_span(g.dim(), lifted);
        // verified ad-diagonalizable on g
        match decompose(g, None, &h, field_order) {
            Ok(_) => return Ok(h),
            Err(Error::FieldTooSmall { .. }) => {
                field_issue = true;
                continue;
            }
            Err(Error::NotDiagonalizable { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    if field_issue {
        Err(Error::FieldTooSmall { order: field_order })
    } else {
        Err(Error::CartanSearchFailed {
            retries: CARTAN_RETRIES,
        })
    }
}

/// {v ∈ algebra | [v, E] ⊆ E} as a subspace in the algebra's own coords.
fn normalizer_in(sub: &LieAlgebra, engel: &Subspace) -> Subspace {
    let d0 = sub.dim();
    // complement coordinates: extend the engel basis to a full basis and
    // read quotient coordinates through the inverse of the combined matrix
    let mut combined: Vec<Vec<CycNum>> = engel.basis().to_vec();
    for i in 0..d0 {
        let cand = sub.basis_vector(i);
        let trial = Subspace::from_span(d0, {
            let mut v = combined.clone();
            v.push(cand.clone());
            v
        });
        if trial.dim() > combined.len() {
            combined.push(cand);
        }
        if combined.len() == d0 {
            break;
        }
    }
    let mut bmat = Matrix::zeros(d0, d0);
    for (j, v) in combined.iter().enumerate() {
        for (i, c) in v.iter().enumerate() {
            bmat.set(i, j, c.clone());
        }
    }
    let binv = bmat.inverse().expect("completed basis invertible");
    let e_dim = engel.dim();
    let mut rows = Vec::new();
    for ek in engel.basis() {
        // v ↦ quotient coords of [v, e_k]
        for qrow in e_dim..d0 {
            let mut row = vec![CycNum::zero(); d0];
            for (i, item) in row.iter_mut().enumerate() {
                let br = sub.bracket(&sub.basis_vector(i), ek);
                let q = binv.apply(&br);
                *item = q[qrow].clone();
            }
            rows.push(row);
        }
    }
    Matrix::from_rows(rows).nullspace()
}

/// Build the exact sl2-pair for (α, λ̄): x₊ spans g_α^λ̄, x₋ ∈ g_{−α}^{−λ̄}
/// scaled so that [x₊, x₋] = h_α.
pub fn coroot_and_triple(
    g: &LieAlgebra,
    rd: &RootDatum,
    alpha: usize,
    class: &[u64],
) -> Result<Sl2Triple> {
    let plus_space = rd
        .root_space(alpha, class)
        .ok_or(Error::EmptyComponent)?;
    let neg_row: Vec<CycNum> = rd.delta[alpha].iter().map(|c| c.neg()).collect();
    let neg_idx = rd.root_index(&neg_row).ok_or(Error::EmptyComponent)?;
    let neg_class = rd.neg_class(class);
    let minus_space = rd
        .root_space(neg_idx, &neg_class)
        .ok_or(Error::EmptyComponent)?;
    let x_plus = plus_space.basis()[0].clone();
    // find a partner with nonzero Killing pairing
    let mut partner = None;
    for y in minus_space.basis() {
        let k = g.killing(&x_plus, y);
        if !k.is_zero() {
            partner = Some((y.clone(), k));
            break;
        }
    }
    let (y, kappa) = partner.ok_or(Error::DegenerateCartanForm)?;
    // (α|α) from the stored form
    let aa = rd.form(alpha, alpha).clone();
    // x₋ = y · 2 / ((α|α) κ(x₊,y))
    let scale = CycNum::from_int(2).mul(&aa.mul(&kappa).inv()?);
    let x_minus: Vec<CycNum> = y.iter().map(|c| c.mul(&scale)).collect();
    let h_alpha = rd.coroots[alpha].clone();
    // exact verification of the sl2 relations
    let br = g.bracket(&x_plus, &x_minus);
    if br != h_alpha {
        return Err(Error::DimensionMismatch(
            "sl2 normalization failed: [x+, x-] differs from the coroot".into(),
        ));
    }
    let two = CycNum::from_int(2);
    let hp = g.bracket(&h_alpha, &x_plus);
    let expect_p: Vec<CycNum> = x_plus.iter().map(|c| c.mul(&two)).collect();
    let hm = g.bracket(&h_alpha, &x_minus);
    let expect_m: Vec<CycNum> = x_minus.iter().map(|c| c.mul(&two).neg()).collect();
    if hp != expect_p || hm != expect_m {
        return Err(Error::DimensionMismatch(
            "sl2 relations [h, x±] = ±2x± failed".into(),
        ));
    }
    Ok(Sl2Triple {
        x_plus,
        x_minus,
        h_alpha,
        alpha,
        lambda_bar: class.to_vec(),
    })
}

/// s_α(γ) = γ − ⟨γ, h_α⟩ α on coordinate rows.
pub fn reflect(rd: &RootDatum, alpha: usize, gamma: &[CycNum]) -> Vec<CycNum> {
    let factor = rd.pairing(gamma, alpha);
    gamma
        .iter()
        .zip(&rd.delta[alpha])
        .map(|(gj, aj)| gj.sub(&factor.mul(aj)))
        .collect()
}

/// Verification report for the finite-root-system properties, with the
/// classified type when recognizable.
#[derive(Clone, Debug)]
pub struct RootSystemReport {
    pub dimension_sum_ok: bool,
    pub spanning: bool,
    pub integral: bool,
    pub reflection_stable: bool,
    pub irreducible: bool,
    pub reduced: bool,
    pub isotropic_free: bool,
    pub rank: usize,
    pub base: Vec<usize>,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub type_label: Option<String>,
    pub failures: Vec<String>,
}

impl RootSystemReport {
    pub fn all_pass(&self) -> bool {
        self.dimension_sum_ok
            && self.spanning
            && self.integral
            && self.reflection_stable
            && self.irreducible
            && self.isotropic_free
    }
}

pub fn verify_root_system(g: &LieAlgebra, rd: &RootDatum) -> RootSystemReport {
    let mut failures = Vec::new();
    let dimension_sum_ok = rd.dimension_sum() == g.dim();
    if !dimension_sum_ok {
        failures.push(format!(
            "piece dimensions sum to {} instead of {}",
            rd.dimension_sum(),
            g.dim()
        ));
    }
    // spanning: root rows span the dual of h
    let rank = rd.rank();
    let spanning = if rd.delta.is_empty() {
        rank == 0
    } else {
        Matrix::from_rows(rd.delta.clone()).rank() == rank
    };
    if !spanning {
        failures.push("roots do not span the dual of the Cartan".into());
    }
    // integrality of all Cartan pairings
    let mut integral = true;
    'outer: for (bi, beta) in rd.delta.iter().enumerate() {
        for ai in 0..rd.delta.len() {
            let p = rd.pairing(beta, ai);
            match p.as_rat() {
                Some(r) if r.is_integer() => {}
                _ => {
                    integral = false;
                    failures.push(format!("pairing of roots {bi} and {ai} is not an integer"));
                    break 'outer;
                }
            }
        }
    }
    // s_α-stability
    let mut reflection_stable = true;
    'outer2: for ai in 0..rd.delta.len() {
        for beta in &rd.delta {
            let img = reflect(rd, ai, beta);
            if rd.root_index(&img).is_none() {
                reflection_stable = false;
                failures.push(format!("reflection by root {ai} leaves the root set"));
                break 'outer2;
            }
        }
    }
    // isotropy re-check from the stored form
    let mut isotropic_free = true;
    for i in 0..rd.delta.len() {
        if rd.form(i, i).is_zero() {
            isotropic_free = false;
            failures.push(format!("root {i} is isotropic"));
        }
    }
    // irreducibility: connectivity under (α|β) ≠ 0
    let nroots = rd.delta.len();
    let irreducible = if nroots == 0 {
        false
    } else {
        let mut parent: Vec<usize> = (0..nroots).collect();
        fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for i in 0..nroots {
            for j in i + 1..nroots {
                if !rd.form(i, j).is_zero() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let r0 = find(&mut parent, 0);
        (0..nroots).all(|i| find(&mut parent, i) == r0)
    };
    if !irreducible {
        failures.push("root graph is disconnected".into());
    }
    // reducedness: does any 2α lie in Δ?
    let mut reduced = true;
    for row in &rd.delta {
        let doubled: Vec<CycNum> = row.iter().map(|c| c.scale(&Rat::from_integer(2.into()))).collect();
        if rd.root_index(&doubled).is_some() {
            reduced = false;
            break;
        }
    }
    let (base, cartan_matrix, type_label) = classify(rd, reduced, irreducible);
    RootSystemReport {
        dimension_sum_ok,
        spanning,
        integral,
        reflection_stable,
        irreducible,
        reduced,
        isotropic_free,
        rank,
        base,
        cartan_matrix,
        type_label,
        failures,
    }
}

/// Choose a base (simple system) and classify the Cartan matrix against the
/// standard rank ≤ 4 list, labelling the rank-2 double bond as B2 and
/// non-reduced irreducible systems as BC_n.
fn classify(
    rd: &RootDatum,
    reduced: bool,
    irreducible: bool,
) -> (Vec<usize>, Vec<Vec<i64>>, Option<String>) {
    let nroots = rd.delta.len();
    if nroots == 0 || !irreducible {
        return (Vec::new(), Vec::new(), None);
    }
    // coordinates w.r.t. the first maximal independent subset of Δ
    let mut frame: Vec<usize> = Vec::new();
    for i in 0..nroots {
        let mut rows: Vec<Vec<CycNum>> = frame.iter().map(|&k| rd.delta[k].clone()).collect();
        rows.push(rd.delta[i].clone());
        let rk = Matrix::from_rows(rows).rank();
        if rk > frame.len() {
            frame.push(i);
        }
        if frame.len() == rd.rank() {
            break;
        }
    }
    let frame_rows: Vec<Vec<CycNum>> = frame.iter().map(|&k| rd.delta[k].clone()).collect();
    let rank = frame.len();
    let mut fm = Matrix::zeros(rd.rank(), rank);
    for (j, row) in frame_rows.iter().enumerate() {
        for (i, v) in row.iter().enumerate() {
            fm.set(i, j, v.clone());
        }
    }
    let coords_of = |row: &[CycNum]| -> Option<Vec<Rat>> {
        let sol = fm.solve(row).ok()?;
        sol.iter().map(|c| c.as_rat()).collect()
    };
    let mut positives: Vec<usize> = Vec::new();
    for i in 0..nroots {
        let Some(c) = coords_of(&rd.delta[i]) else {
            return (Vec::new(), Vec::new(), None);
        };
        let first = c.iter().find(|v| !v.is_zero());
        if matches!(first, Some(v) if v.is_positive()) {
            positives.push(i);
        }
    }
    // simple roots: positives that are not sums of two positives
    let mut base: Vec<usize> = Vec::new();
    'cand: for &i in &positives {
        for &a in &positives {
            for &b in &positives {
                let sum: Vec<CycNum> = rd.delta[a]
                    .iter()
                    .zip(&rd.delta[b])
                    .map(|(x, y)| x.add(y))
                    .collect();
                if sum.as_slice() == rd.delta[i].as_slice() {
                    continue 'cand;
                }
            }
        }
        base.push(i);
    }
    if base.len() != rank {
        return (base, Vec::new(), None);
    }
    // Cartan matrix C[i][j] = ⟨α_j, h_{α_i}⟩
    let mut cm = vec![vec![0i64; rank]; rank];
    for (i, &ai) in base.iter().enumerate() {
        for (j, &aj) in base.iter().enumerate() {
            let p = rd.pairing(&rd.delta[aj], ai);
            let Some(r) = p.as_rat() else {
                return (base, Vec::new(), None);
            };
            if !r.is_integer() {
                return (base, Vec::new(), None);
            }
            let Ok(v) = i64::try_from(i128::try_from(&r.to_integer()).unwrap_or(i64::MAX as i128))
            else {
                return (base, Vec::new(), None);
            };
            cm[i][j] = v;
        }
    }
    let label = if !reduced {
        Some(format!("BC{rank}"))
    } else {
        match_standard_type(&cm)
    };
    (base, cm, label)
}

fn match_standard_type(cm: &[Vec<i64>]) -> Option<String> {
    let rank = cm.len();
    let standards: Vec<(String, Vec<Vec<i64>>)> = match rank {
        1 => vec![("A1".into(), vec![vec![2]])],
        2 => vec![
            ("A2".into(), vec![vec![2, -1], vec![-1, 2]]),
            ("B2".into(), vec![vec![2, -2], vec![-1, 2]]),
            ("B2".into(), vec![vec![2, -1], vec![-2, 2]]),
            ("G2".into(), vec![vec![2, -1], vec![-3, 2]]),
            ("G2".into(), vec![vec![2, -3], vec![-1, 2]]),
        ],
        3 => vec![(
            "A3".into(),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        )],
        4 => vec![(
            "D4".into(),
            // node 2 is the center of the star
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, -1],
                vec![0, -1, 2, 0],
                vec![0, -1, 0, 2],
            ],
        )],
        _ => vec![],
    };
    let perms = permutations(rank);
    for (label, std_cm) in &standards {
        for p in &perms {
            let mut ok = true;
            'chk: for i in 0..rank {
                for j in 0..rank {
                    if cm[p[i]][p[j]] != std_cm[i][j] {
                        ok = false;
                        break 'chk;
                    }
                }
            }
            if ok {
                return Some(label.clone());
            }
        }
    }
    None
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let rest = permutations(n - 1);
    for p in rest {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Δ_ind (indivisible roots) and Δ_en (Δ, enlarged by doubled short roots
/// exactly in type B_l).
pub fn indivisible_and_enlarged(
    rd: &RootDatum,
    report: &RootSystemReport,
) -> Result<(Vec<usize>, Vec<Vec<CycNum>>)> {
    let Some(label) = &report.type_label else {
        return Err(Error::UnclassifiedType);
    };
    let half = Rat::new(1.into(), 2.into());
    let mut indivisible = Vec::new();
    for (i, row) in rd.delta.iter().enumerate() {
        let halved: Vec<CycNum> = row.iter().map(|c| c.scale(&half)).collect();
        if rd.root_index(&halved).is_none() {
            indivisible.push(i);
        }
    }
    let mut enlarged: Vec<Vec<CycNum>> = rd.delta.clone();
    if label.starts_with('B') && !label.starts_with("BC") {
        // doubled short roots join the set; short = minimal (α|α)
        let norms: Vec<Rat> = (0..rd.delta.len())
            .map(|i| rd.form(i, i).as_rat().expect("rational norms in classified system"))
            .collect();
        let min = norms.iter().min().expect("nonempty").clone();
        for (i, row) in rd.delta.iter().enumerate() {
            if norms[i] == min {
                enlarged.push(row.iter().map(|c| c.scale(&Rat::from_integer(2.into()))).collect());
            }
        }
    }
    Ok((indivisible, enlarged))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{
        chevalley_involution, diagram_automorphism, identity_auto, torus_automorphism, AutTuple,
    };
    use crate::lie::ChevType;

    fn c(k: i64) -> CycNum {
        CycNum::from_int(k)
    }

    fn sl2() -> LieAlgebra {
        LieAlgebra::chevalley(ChevType::A, 1).unwrap()
    }

    fn sl3() -> LieAlgebra {
        LieAlgebra::chevalley(ChevType::A, 2).unwrap()
    }

    #[test]
    fn fixed_space_of_identity_and_involution() {
        let g = sl2();
        let idt = AutTuple::identities(&g, 1);
        assert_eq!(fixed_subalgebra(&g, &idt).dim(), 3);
        let inv = chevalley_involution(&g).unwrap();
        let t = AutTuple::new(vec![inv], vec![2]).unwrap();
        let fixed = fixed_subalgebra(&g, &t);
        assert_eq!(fixed.dim(), 1);
        // e − f spans the fixed line
        let mut ef = vec![c(1), c(0), c(-1)];
        assert!(fixed.contains(&ef));
        ef[0] = c(2);
        assert!(!fixed.contains(&ef));
    }

    #[test]
    fn jointly_fixed_space_can_vanish() {
        let g = sl2();
        let inv = chevalley_involution(&g).unwrap();
        let flip = torus_automorphism(&g, 2, &[1]).unwrap();
        let t = AutTuple::new(vec![inv, flip], vec![2, 2]).unwrap();
        assert_eq!(fixed_subalgebra(&g, &t).dim(), 0);
    }

    #[test]
    fn cartan_of_full_sl2_and_abelian_fixed_line() {
        let g = sl2();
        let h = cartan_subalgebra(&g, &Subspace::full(3), 0, 1).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(h.contains(&g.basis_vector(1)));
        // twisted: 1-dimensional fixed space is its own Cartan
        let inv = chevalley_involution(&g).unwrap();
        let t = AutTuple::new(vec![inv], vec![2]).unwrap();
        let fixed = fixed_subalgebra(&g, &t);
        let h2 = cartan_subalgebra(&g, &fixed, 0, 4).unwrap();
        assert_eq!(h2, fixed);
    }

    #[test]
    fn cartan_search_on_diagram_fixed_subalgebra() {
        let g = sl3();
        let sigma = diagram_automorphism(&g).unwrap();
        let t = AutTuple::new(vec![sigma], vec![2]).unwrap();
        let fixed = fixed_subalgebra(&g, &t);
        assert_eq!(fixed.dim(), 3);
        let h = cartan_subalgebra(&g, &fixed, 0, 1).unwrap();
        assert_eq!(h.dim(), 1);
        // the Cartan line is h1 + h2
        let idx = |l: &str| g.labels().iter().position(|x| x == l).unwrap();
        let mut v = vec![c(0); 8];
        v[idx("H1")] = c(1);
        v[idx("H2")] = c(1);
        assert!(h.contains(&v));
    }

    #[test]
    fn zero_fixed_space_is_an_error() {
        let g = sl2();
        assert!(matches!(
            cartan_subalgebra(&g, &Subspace::zero(3), 0, 1),
            Err(Error::ZeroFixedAlgebra)
        ));
    }

    #[test]
    fn sl2_standard_root_datum() {
        let g = sl2();
        let h = Subspace::from_span(3, vec![g.basis_vector(1)]);
        let rd = root_decomposition(&g, &h, 1).unwrap();
        assert_eq!(rd.delta.len(), 2);
        assert_eq!(rd.dimension_sum(), 3);
        // rows are ⟨±α, h⟩ = ±2
        let rows: Vec<Vec<CycNum>> = rd.delta.clone();
        assert!(rows.contains(&vec![c(2)]));
        assert!(rows.contains(&vec![c(-2)]));
        let ai = rd.root_index(&[c(2)]).unwrap();
        // (α|α) = 1/2 and h_α = h
        assert_eq!(rd.form(ai, ai).as_rat().unwrap(), crate::cyclo::rat(1, 2));
        assert_eq!(rd.coroots[ai], g.basis_vector(1));
        assert_eq!(g.killing(&rd.coroots[ai], &rd.coroots[ai]), c(8));
        // ⟨α, h_α⟩ = 2
        assert_eq!(rd.pairing(&rd.delta[ai], ai), c(2));
    }

    #[test]
    fn twisted_sl2_root_datum_over_order_four() {
        let g = sl2();
        let ef = vec![c(1), c(0), c(-1)];
        let h = Subspace::from_span(3, vec![ef.clone()]);
        // eigenvalues ±2ζ4 need the order-4 field
        assert!(matches!(
            root_decomposition(&g, &h, 2),
            Err(Error::FieldTooSmall { .. })
        ));
        let rd = root_decomposition(&g, &h, 4).unwrap();
        assert_eq!(rd.delta.len(), 2);
        assert_eq!(rd.zero_space().dim(), 1);
        let i4 = CycNum::zeta(4);
        let two_i = i4.scale(&Rat::from_integer(2.into()));
        let bi = rd.root_index(&[two_i]).expect("2i row present");
        assert_eq!(rd.form(bi, bi).as_rat().unwrap(), crate::cyclo::rat(1, 2));
        // coroot relations are exact
        assert_eq!(rd.pairing(&rd.delta[bi], bi), c(2));
        assert_eq!(g.killing(&rd.coroots[bi], &rd.coroots[bi]), c(8));
        let triple = coroot_and_triple(&g, &rd, bi, &[]).unwrap();
        assert_eq!(g.bracket(&triple.x_plus, &triple.x_minus), triple.h_alpha);
    }

    #[test]
    fn sl3_has_six_roots() {
        let g = sl3();
        let h = cartan_subalgebra(&g, &Subspace::full(8), 0, 1).unwrap();
        let rd = root_decomposition(&g, &h, 1).unwrap();
        assert_eq!(rd.delta.len(), 6);
        assert_eq!(rd.dimension_sum(), 8);
        for pieces in &rd.root_pieces {
            assert_eq!(pieces.len(), 1);
            assert_eq!(pieces[0].1.dim(), 1);
        }
    }

    #[test]
    fn reflection_is_involution_and_permutes_roots() {
        let g = sl3();
        let h = cartan_subalgebra(&g, &Subspace::full(8), 0, 1).unwrap();
        let rd = root_decomposition(&g, &h, 1).unwrap();
        for ai in 0..rd.delta.len() {
            for beta in &rd.delta {
                let img = reflect(&rd, ai, beta);
                assert!(rd.root_index(&img).is_some());
                let back = reflect(&rd, ai, &img);
                assert_eq!(&back, beta);
            }
            // s_α(α) = −α
            let neg: Vec<CycNum> = rd.delta[ai].iter().map(|x| x.neg()).collect();
            assert_eq!(reflect(&rd, ai, &rd.delta[ai]), neg);
        }
    }

    #[test]
    fn sl3_simple_reflection_adds_roots() {
        let g = sl3();
        let h = cartan_subalgebra(&g, &Subspace::full(8), 0, 1).unwrap();
        let rd = root_decomposition(&g, &h, 1).unwrap();
        let report = verify_root_system(&g, &rd);
        assert_eq!(report.type_label.as_deref(), Some("A2"));
        let [a1, a2] = report.base[..] else {
            panic!("rank-2 base")
        };
        // s_{α1}(α2) = α1 + α2
        let img = reflect(&rd, a1, &rd.delta[a2]);
        let sum: Vec<CycNum> = rd.delta[a1]
            .iter()
            .zip(&rd.delta[a2])
            .map(|(x, y)| x.add(y))
            .collect();
        assert_eq!(img, sum);
    }

    #[test]
    fn classification_across_constructors() {
        for (k, r, label, count) in [
            (ChevType::A, 1, "A1", 2),
            (ChevType::A, 2, "A2", 6),
            (ChevType::A, 3, "A3", 12),
            (ChevType::B, 2, "B2", 8),
            (ChevType::C, 2, "B2", 8),
            (ChevType::G, 2, "G2", 12),
        ] {
            let g = LieAlgebra::chevalley(k, r).unwrap();
            let h = cartan_subalgebra(&g, &Subspace::full(g.dim()), 0, 1).unwrap();
            let rd = root_decomposition(&g, &h, 1).unwrap();
            assert_eq!(rd.delta.len(), count, "{k:?}{r}");
            let report = verify_root_system(&g, &rd);
            assert!(report.all_pass(), "{k:?}{r}: {:?}", report.failures);
            assert!(report.reduced);
            assert_eq!(report.type_label.as_deref(), Some(label), "{k:?}{r}");
        }
    }

    #[test]
    fn graded_decomposition_for_diagram_twist() {
        let g = sl3();
        let sigma = diagram_automorphism(&g).unwrap();
        let t = AutTuple::new(vec![sigma], vec![2]).unwrap();
        let fixed = fixed_subalgebra(&g, &t);
        let h = cartan_subalgebra(&g, &fixed, 0, 1).unwrap();
        let rd = root_decomposition_graded(&g, &t, &h, 1).unwrap();
        // BC1: Δ = {±β, ±2β}
        assert_eq!(rd.delta.len(), 4);
        let report = verify_root_system(&g, &rd);
        assert!(report.all_pass(), "{:?}", report.failures);
        assert!(!report.reduced);
        assert_eq!(report.type_label.as_deref(), Some("BC1"));
        // β components: class 0 and class 1 each one-dimensional
        let bi = report.base[0];
        assert_eq!(rd.root_pieces[bi].len(), 2);
        for (cls, sp) in &rd.root_pieces[bi] {
            assert_eq!(sp.dim(), 1, "class {cls:?}");
        }
        // 2β lives purely in class 1
        let doubled: Vec<CycNum> = rd.delta[bi]
            .iter()
            .map(|c| c.scale(&Rat::from_integer(2.into())))
            .collect();
        let di = rd.root_index(&doubled).unwrap();
        assert_eq!(rd.root_pieces[di].len(), 1);
        assert_eq!(rd.root_pieces[di][0].0, vec![1]);
        // enlargement: BC1 gains nothing, indivisibles are ±β
        let (ind, en) = indivisible_and_enlarged(&rd, &report).unwrap();
        assert_eq!(ind.len(), 2);
        assert_eq!(en.len(), 4);
    }

    #[test]
    fn b2_enlargement_adds_doubled_short_roots() {
        let g = LieAlgebra::chevalley(ChevType::B, 2).unwrap();
        let h = cartan_subalgebra(&g, &Subspace::full(10), 0, 1).unwrap();
        let rd = root_decomposition(&g, &h, 1).unwrap();
        let report = verify_root_system(&g, &rd);
        assert_eq!(report.type_label.as_deref(), Some("B2"));
        let (ind, en) = indivisible_and_enlarged(&rd, &report).unwrap();
        assert_eq!(ind.len(), 8);
        assert_eq!(en.len(), 12);
        // A1 for contrast: no enlargement
        let g1 = sl2();
        let h1 = cartan_subalgebra(&g1, &Subspace::full(3), 0, 1).unwrap();
        let rd1 = root_decomposition(&g1, &h1, 1).unwrap();
        let rep1 = verify_root_system(&g1, &rd1);
        assert_eq!(rep1.type_label.as_deref(), Some("A1"));
        let (ind1, en1) = indivisible_and_enlarged(&rd1, &rep1).unwrap();
        assert_eq!(ind1.len(), 2);
        assert_eq!(en1.len(), 2);
    }

    #[test]
    fn triples_across_all_sl3_roots() {
        let g = sl3();
        let idt = AutTuple::identities(&g, 1);
        let h = cartan_subalgebra(&g, &Subspace::full(8), 0, 1).unwrap();
        let rd = root_decomposition_graded(&g, &idt, &h, 1).unwrap();
        for ai in 0..rd.delta.len() {
            let (cls, _) = &rd.root_pieces[ai][0];
            let tr = coroot_and_triple(&g, &rd, ai, cls).unwrap();
            assert_eq!(g.bracket(&tr.x_plus, &tr.x_minus), tr.h_alpha);
            // pairing of any β with h_α is an integer
            for beta in &rd.delta {
                let p = rd.pairing(beta, ai);
                assert!(p.as_rat().unwrap().is_integer());
            }
        }
        // missing component is reported
        assert!(matches!(
            coroot_and_triple(&g, &rd, 0, &[5]),
            Err(Error::EmptyComponent)
        ));
    }
}

//! Validated automorphisms of a Lie algebra and commuting tuples of them.
//!
//! Every `Automorphism` has been checked to be invertible and
//! bracket-preserving on all basis pairs, and carries its exact
//! multiplicative order (computed by power iteration with a cap).

use crate::cyclo::{CycNum, Rat};
use crate::error::Error;
use crate::lie::{ChevType, LieAlgebra};
use crate::linalg::{IMat, Matrix};
use crate::Result;

/// Default cap for order computation and group closure.
pub const ORDER_CAP: u64 = 360;

#[derive(Clone, Debug)]
pub struct Automorphism {
    matrix: Matrix,
    order: u64,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Automorphism {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn apply(&self, x: &[CycNum]) -> Vec<CycNum> {
        self.matrix.apply(x)
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    /// Inverse automorphism; same order, no revalidation needed.
    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            matrix: self.matrix.inverse().expect("validated invertible"),
            order: self.order,
        }
    }

    /// Integer power (negative allowed). The order of σ^k is
    /// ord(σ)/gcd(ord(σ), k).
    pub fn pow(&self, k: i64) -> Automorphism {
        let ord = self.order as i64;
        let mut e = k.rem_euclid(ord);
        let mut base = self.matrix.clone();
        let mut acc = Matrix::identity(self.matrix.nrows());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        let g = gcd_u64(self.order, k.rem_euclid(ord) as u64);
        Automorphism {
            matrix: acc,
            order: if g == 0 { 1 } else { self.order / g },
        }
    }

    /// Composition self ∘ other. Both are validated automorphisms, so the
    /// product is one too; only the order needs recomputing.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        let m = self.matrix.mul(&other.matrix);
        let order = matrix_order(&m, ORDER_CAP)?;
        Ok(Automorphism { matrix: m, order })
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            ds.push(d);
            if d != n / d {
                ds.push(n / d);
            }
        }
        d += 1;
    }
    ds.sort_unstable();
    ds
}

/// Multiplicative order of a scalar, if it is a root of unity. Torsion
/// units of the field of order N are ±powers of ζ_N, so the order divides
/// N (N even) or 2N (N odd).
fn scalar_order(x: &CycNum) -> Option<u64> {
    if x.is_zero() {
        return None;
    }
    let n = x.order();
    let bound = if n % 2 == 0 { n } else { 2 * n };
    divisors(bound)
        .into_iter()
        .find(|&d| x.pow(d as i64).map(|p| p.is_one()).unwrap_or(false))
}

fn matrix_order(m: &Matrix, cap: u64) -> Result<u64> {
    // diagonal fast path: lcm of entry orders, no power iteration
    let d = m.nrows();
    let diagonal = (0..d).all(|r| (0..d).all(|c| r == c || m.at(r, c).is_zero()));
    if diagonal {
        let mut l: u64 = 1;
        for r in 0..d {
            match scalar_order(m.at(r, r)) {
                Some(o) => l = lcm_u64(l, o),
                None => return Err(Error::OrderBoundExceeded { cap }),
            }
            if l > cap {
                return Err(Error::OrderBoundExceeded { cap });
            }
        }
        return Ok(l);
    }
    let mut p = m.clone();
    for k in 1..=cap {
        if p.is_identity() {
            return Ok(k);
        }
        p = p.mul(m);
    }
    Err(Error::OrderBoundExceeded { cap })
}

/// Validate a matrix as a Lie algebra automorphism: invertible,
/// bracket-preserving on every basis pair, of finite order within the cap.
pub fn check_automorphism(g: &LieAlgebra, matrix: Matrix) -> Result<Automorphism> {
    let d = g.dim();
    if matrix.nrows() != d || matrix.ncols() != d {
        return Err(Error::DimensionMismatch(format!(
            "automorphism matrix {}x{} on algebra of dim {d}",
            matrix.nrows(),
            matrix.ncols()
        )));
    }
    matrix.inverse().map_err(|_| Error::NotInvertible)?;
    let cols: Vec<Vec<CycNum>> = (0..d).map(|j| matrix.col(j)).collect();
    for i in 0..d {
        for j in i + 1..d {
            let lhs = g.bracket(&cols[i], &cols[j]);
            let rhs = matrix.apply(&g.bracket(&g.basis_vector(i), &g.basis_vector(j)));
            if lhs != rhs {
                return Err(Error::NotBracketPreserving { i, j });
            }
        }
    }
    let order = matrix_order(&matrix, ORDER_CAP)?;
    Ok(Automorphism { matrix, order })
}

/// The identity automorphism.
pub fn identity_auto(g: &LieAlgebra) -> Automorphism {
    Automorphism {
        matrix: Matrix::identity(g.dim()),
        order: 1,
    }
}

/// X ↦ −Xᵀ at the level of the matrix realization. Defined for the
/// classical constructors; acts as the standard split involution
/// (h ↦ −h, root spaces swapped in sign pairs).
pub fn chevalley_involution(g: &LieAlgebra) -> Result<Automorphism> {
    let mats = g
        .realization()
        .ok_or_else(|| Error::Unsupported("involution needs a matrix realization".into()))?;
    if g.family() == Some((ChevType::G, 2)) {
        return Err(Error::Unsupported(
            "negative transpose is not an automorphism of the exceptional realization".into(),
        ));
    }
    let d = g.dim();
    let mut m = Matrix::zeros(d, d);
    for (i, b) in mats.iter().enumerate() {
        let target = b.transpose().scale(&CycNum::from_int(-1));
        let coords = g.express_matrix(&target)?;
        for (r, c) in coords.iter().enumerate() {
            m.set(r, i, c.clone());
        }
    }
    check_automorphism(g, m)
}

/// The order-2 diagram symmetry of the type-A constructors:
/// E_ij ↦ (−1)^{j−i+1} E_{n+1−j, n+1−i}, realized as X ↦ −W Xᵀ W⁻¹ with W
/// the alternating antidiagonal.
pub fn diagram_automorphism(g: &LieAlgebra) -> Result<Automorphism> {
    let (kind, rank) = g
        .family()
        .ok_or_else(|| Error::Unsupported("diagram symmetry needs a constructor algebra".into()))?;
    if kind != ChevType::A || rank < 1 {
        return Err(Error::Unsupported(format!(
            "diagram symmetry implemented for type A only, not {kind:?}{rank}"
        )));
    }
    let mats = g.realization().expect("constructor algebras carry realizations");
    let n = rank + 1;
    let mut w = Matrix::zeros(n, n);
    for a in 0..n {
        // 1-based sign (−1)^a on the antidiagonal
        let s = if (a + 1) % 2 == 0 { 1 } else { -1 };
        w.set(a, n - 1 - a, CycNum::from_int(s));
    }
    let winv = w.inverse().expect("antidiagonal invertible");
    let d = g.dim();
    let mut m = Matrix::zeros(d, d);
    for (i, b) in mats.iter().enumerate() {
        let target = w
            .mul(&b.transpose())
            .mul(&winv)
            .scale(&CycNum::from_int(-1));
        let coords = g.express_matrix(&target)?;
        for (r, c) in coords.iter().enumerate() {
            m.set(r, i, c.clone());
        }
    }
    check_automorphism(g, m)
}

/// Diagonal automorphism from integer weights on the simple roots: the
/// basis vector of root γ = Σ c_k α_k is scaled by ζ_order^{Σ c_k w_k};
/// the Cartan subalgebra is fixed.
pub fn torus_automorphism(g: &LieAlgebra, order: u64, weights: &[i64]) -> Result<Automorphism> {
    let info = g
        .root_info()
        .ok_or_else(|| Error::Unsupported("torus automorphism needs root annotations".into()))?;
    if weights.len() != info.cartan.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} weights for rank {}",
            weights.len(),
            info.cartan.len()
        )));
    }
    if order == 0 {
        return Err(Error::Unsupported("torus automorphism of order 0".into()));
    }
    let d = g.dim();
    let mut m = Matrix::zeros(d, d);
    for i in 0..d {
        let scal = match &info.root_of[i] {
            None => CycNum::one(),
            Some(coords) => {
                let e: i64 = coords.iter().zip(weights).map(|(c, w)| c * w).sum();
                CycNum::zeta_pow(order, e)
            }
        };
        m.set(i, i, scal);
    }
    check_automorphism(g, m)
}

/// exp(ad x) for ad-nilpotent x, as an exact terminating series.
pub fn exp_ad(g: &LieAlgebra, x: &[CycNum]) -> Result<Matrix> {
    let d = g.dim();
    let ad = g.ad(x);
    let mut acc = Matrix::identity(d);
    let mut term = Matrix::identity(d);
    for k in 1..=d {
        term = term.mul(&ad);
        let kfact_inv = CycNum::from_rat(Rat::new(1.into(), factorial(k)));
        let mut scaled = term.clone();
        for r in 0..d {
            for c in 0..d {
                scaled.set(r, c, term.at(r, c).mul(&kfact_inv));
            }
        }
        if term.is_zero() {
            return Ok(acc);
        }
        acc = acc.add(&scaled);
    }
    // a nilpotent operator on a dim-dimensional space vanishes by power dim,
    // so reaching this point means ad x is not nilpotent
    Err(Error::NotNilpotent)
}

fn factorial(k: usize) -> num::BigInt {
    let mut acc: num::BigInt = 1.into();
    for i in 2..=k {
        acc *= i;
    }
    acc
}

/// The inner automorphism exp(ad x₊) exp(−ad x₋) exp(ad x₊) attached to an
/// sl2-pair; sends h = [x₊, x₋] to −h.
pub fn inner_reflection(
    g: &LieAlgebra,
    x_plus: &[CycNum],
    x_minus: &[CycNum],
) -> Result<Automorphism> {
    let a = exp_ad(g, x_plus)?;
    let neg: Vec<CycNum> = x_minus.iter().map(|c| c.neg()).collect();
    let b = exp_ad(g, &neg)?;
    check_automorphism(g, a.mul(&b).mul(&a))
}

/// A commuting tuple (σ_1, …, σ_n) with declared periods m: σ_i^{m_i} = id.
/// The periods may be proper multiples of the orders; equality is a
/// separate, downstream condition.
#[derive(Clone, Debug)]
pub struct AutTuple {
    auts: Vec<Automorphism>,
    m: Vec<u64>,
}

impl AutTuple {
    pub fn new(auts: Vec<Automorphism>, m: Vec<u64>) -> Result<AutTuple> {
        if auts.len() != m.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} automorphisms, {} periods",
                auts.len(),
                m.len()
            )));
        }
        for (i, a) in auts.iter().enumerate() {
            for (j, b) in auts.iter().enumerate().skip(i + 1) {
                if a.matrix.mul(&b.matrix) != b.matrix.mul(&a.matrix) {
                    return Err(Error::NotCommuting { i, j });
                }
            }
        }
        for (i, (a, &mi)) in auts.iter().zip(&m).enumerate() {
            if mi == 0 || mi % a.order != 0 {
                return Err(Error::PeriodMismatch { i, m: mi });
            }
        }
        Ok(AutTuple { auts, m })
    }

    /// Identity tuple with all periods 1 (the untwisted case).
    pub fn identities(g: &LieAlgebra, n: usize) -> AutTuple {
        AutTuple {
            auts: (0..n).map(|_| identity_auto(g)).collect(),
            m: vec![1; n],
        }
    }

    pub fn n(&self) -> usize {
        self.auts.len()
    }

    pub fn auts(&self) -> &[Automorphism] {
        &self.auts
    }

    pub fn periods(&self) -> &[u64] {
        &self.m
    }

    /// The same automorphisms with periods reset to their exact orders.
    pub fn with_exact_periods(&self) -> AutTuple {
        AutTuple {
            auts: self.auts.clone(),
            m: self.auts.iter().map(|a| a.order()).collect(),
        }
    }
}

/// Right action of GL_n(Z): (σ^P)_j = ∏_i σ_i^{P[i][j]}. The result carries
/// recomputed componentwise orders as its periods.
pub fn gl_action(tuple: &AutTuple, p: &IMat) -> Result<AutTuple> {
    let n = tuple.n();
    if p.rows != n || p.cols != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} action matrix on a {n}-tuple",
            p.rows, p.cols
        )));
    }
    if !p.is_unimodular() {
        return Err(Error::NotUnimodular { det: p.det() });
    }
    let dim = if n > 0 {
        tuple.auts[0].matrix.nrows()
    } else {
        0
    };
    let mut auts = Vec::with_capacity(n);
    for j in 0..n {
        let mut m = Matrix::identity(dim);
        for (i, a) in tuple.auts.iter().enumerate() {
            let e = p.data[i][j];
            if e != 0 {
                m = m.mul(&a.pow(e as i64).matrix);
            }
        }
        let order = matrix_order(&m, ORDER_CAP)?;
        auts.push(Automorphism { matrix: m, order });
    }
    let m = auts.iter().map(|a| a.order()).collect();
    Ok(AutTuple { auts, m })
}

/// Cardinality of the abelian group generated by the tuple, by
/// breadth-first closure with matrix-equality dedup.
pub fn group_order_capped(tuple: &AutTuple, cap: u64) -> Result<u64> {
    if tuple.n() == 0 {
        return Ok(1);
    }
    let dim = tuple.auts[0].matrix.nrows();
    let mut seen: Vec<Matrix> = vec![Matrix::identity(dim)];
    let mut queue: Vec<usize> = vec![0];
    while let Some(idx) = queue.pop() {
        let cur = seen[idx].clone();
        for a in &tuple.auts {
            let next = cur.mul(&a.matrix);
            if !seen.iter().any(|s| *s == next) {
                if seen.len() as u64 >= cap {
                    return Err(Error::OrderBoundExceeded { cap });
                }
                seen.push(next);
                queue.push(seen.len() - 1);
            }
        }
    }
    Ok(seen.len() as u64)
}

pub fn group_order(tuple: &AutTuple) -> Result<u64> {
    group_order_capped(tuple, ORDER_CAP)
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

    fn sl3() -> LieAlgebra {
        LieAlgebra::chevalley(ChevType::A, 2).unwrap()
    }

    #[test]
    fn involution_on_sl2() {
        let g = sl2();
        let inv = chevalley_involution(&g).unwrap();
        assert_eq!(inv.order(), 2);
        // e ↦ −f, h ↦ −h, f ↦ −e
        assert_eq!(inv.apply(&g.basis_vector(0)), vec![c(0), c(0), c(-1)]);
        assert_eq!(inv.apply(&g.basis_vector(1)), vec![c(0), c(-1), c(0)]);
        assert_eq!(inv.apply(&g.basis_vector(2)), vec![c(-1), c(0), c(0)]);
    }

    #[test]
    fn involution_on_orthogonal_and_symplectic() {
        for (k, r) in [(ChevType::B, 2), (ChevType::C, 2), (ChevType::D, 4)] {
            let g = LieAlgebra::chevalley(k, r).unwrap();
            let inv = chevalley_involution(&g).unwrap();
            assert_eq!(inv.order(), 2, "{k:?}{r}");
            // Cartan elements are negated
            for &hidx in &g.root_info().unwrap().cartan {
                let img = inv.apply(&g.basis_vector(hidx));
                let expect: Vec<CycNum> = g
                    .basis_vector(hidx)
                    .iter()
                    .map(|v| v.neg())
                    .collect();
                assert_eq!(img, expect);
            }
        }
    }

    #[test]
    fn diagram_symmetry_on_sl3() {
        let g = sl3();
        let idx = |l: &str| g.labels().iter().position(|x| x == l).unwrap();
        let sigma = diagram_automorphism(&g).unwrap();
        assert_eq!(sigma.order(), 2);
        // E12 ↦ E23, E23 ↦ E12, E13 ↦ −E13, H1 ↦ H2
        let mut e23 = vec![c(0); 8];
        e23[idx("E23")] = c(1);
        assert_eq!(sigma.apply(&g.basis_vector(idx("E12"))), e23);
        let mut e13neg = vec![c(0); 8];
        e13neg[idx("E13")] = c(-1);
        assert_eq!(sigma.apply(&g.basis_vector(idx("E13"))), e13neg);
        let mut h2 = vec![c(0); 8];
        h2[idx("H2")] = c(1);
        assert_eq!(sigma.apply(&g.basis_vector(idx("H1"))), h2);
    }

    #[test]
    fn diagram_symmetry_unsupported_off_type_a() {
        let g = LieAlgebra::chevalley(ChevType::B, 2).unwrap();
        assert!(diagram_automorphism(&g).is_err());
        let table_alg = LieAlgebra::from_table(2, &[], None).unwrap();
        assert!(diagram_automorphism(&table_alg).is_err());
    }

    #[test]
    fn torus_automorphism_scales_root_vectors() {
        let g = sl2();
        let t = torus_automorphism(&g, 3, &[1]).unwrap();
        assert_eq!(t.order(), 3);
        let e_img = t.apply(&g.basis_vector(0));
        assert_eq!(e_img[0], CycNum::zeta(3));
        let f_img = t.apply(&g.basis_vector(2));
        assert_eq!(f_img[2], CycNum::zeta(3).pow(-1).unwrap());
        let h_img = t.apply(&g.basis_vector(1));
        assert_eq!(h_img[1], c(1));
    }

    #[test]
    fn order_cap_is_enforced() {
        let g = sl2();
        let err = torus_automorphism(&g, 361, &[1]);
        assert!(matches!(err, Err(Error::OrderBoundExceeded { cap: 360 })));
    }

    #[test]
    fn bad_matrices_rejected() {
        let g = sl2();
        // not bracket-preserving: swap e and h
        let mut m = Matrix::identity(3);
        m.set(0, 0, c(0));
        m.set(1, 1, c(0));
        m.set(0, 1, c(1));
        m.set(1, 0, c(1));
        assert!(matches!(
            check_automorphism(&g, m),
            Err(Error::NotBracketPreserving { .. })
        ));
        let z = Matrix::zeros(3, 3);
        assert!(matches!(check_automorphism(&g, z), Err(Error::NotInvertible)));
    }

    #[test]
    fn killing_form_preserved_by_named_automorphisms() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = sl3();
        let autos = vec![
            chevalley_involution(&g).unwrap(),
            diagram_automorphism(&g).unwrap(),
            torus_automorphism(&g, 4, &[1, 2]).unwrap(),
        ];
        for a in autos {
            for _ in 0..30 {
                let rv = |rng: &mut ChaCha8Rng| -> Vec<CycNum> {
                    (0..8).map(|_| c(rng.gen_range(-3i64..=3))).collect()
                };
                let (x, y) = (rv(&mut rng), rv(&mut rng));
                assert_eq!(
                    g.killing(&a.apply(&x), &a.apply(&y)),
                    g.killing(&x, &y)
                );
            }
        }
    }

    #[test]
    fn tuple_validation() {
        let g = sl2();
        let inv = chevalley_involution(&g).unwrap();
        let rot = torus_automorphism(&g, 3, &[1]).unwrap();
        // the involution and a root-scaling of order 3 do not commute on sl2
        assert!(matches!(
            AutTuple::new(vec![inv.clone(), rot.clone()], vec![2, 3]),
            Err(Error::NotCommuting { .. })
        ));
        // declared period must be a multiple of the order
        assert!(matches!(
            AutTuple::new(vec![inv.clone()], vec![3]),
            Err(Error::PeriodMismatch { .. })
        ));
        // multiples are fine (exactness is a separate downstream check)
        assert!(AutTuple::new(vec![inv.clone()], vec![4]).is_ok());
        assert!(AutTuple::new(vec![inv], vec![2]).is_ok());
    }

    #[test]
    fn gl_action_examples_and_right_action() {
        let g = sl2();
        let omega = torus_automorphism(&g, 3, &[1]).unwrap();
        let id = identity_auto(&g);
        let tuple = AutTuple::new(vec![omega.clone(), id.clone()], vec![3, 1]).unwrap();
        // identity action
        let same = gl_action(&tuple, &IMat::identity(2)).unwrap();
        assert_eq!(same.auts()[0], tuple.auts()[0]);
        assert_eq!(same.auts()[1], tuple.auts()[1]);
        // swap: (ω, id)^P = (id, ω) for the permutation P
        let p = IMat::from_rows(vec![vec![0, 1], vec![1, 0]]);
        let swapped = gl_action(&tuple, &p).unwrap();
        assert!(swapped.auts()[0].is_identity());
        assert_eq!(swapped.auts()[1], omega);
        assert_eq!(swapped.periods(), &[1, 3]);
        // round trip via P⁻¹
        let back = gl_action(&swapped, &p).unwrap();
        assert_eq!(back.auts()[0], omega);
        // right action on random unimodular pairs
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut found = 0;
        while found < 10 {
            let r = |rng: &mut ChaCha8Rng| rng.gen_range(-2i128..=2);
            let pm = IMat::from_rows(vec![
                vec![r(&mut rng), r(&mut rng)],
                vec![r(&mut rng), r(&mut rng)],
            ]);
            let qm = IMat::from_rows(vec![
                vec![r(&mut rng), r(&mut rng)],
                vec![r(&mut rng), r(&mut rng)],
            ]);
            if !pm.is_unimodular() || !qm.is_unimodular() {
                continue;
            }
            found += 1;
            let lhs = gl_action(&gl_action(&tuple, &pm).unwrap(), &qm).unwrap();
            let rhs = gl_action(&tuple, &pm.mul(&qm)).unwrap();
            for (a, b) in lhs.auts().iter().zip(rhs.auts()) {
                assert_eq!(a, b);
            }
        }
        // non-unimodular rejected
        let bad = IMat::from_rows(vec![vec![2, 0], vec![0, 1]]);
        assert!(matches!(
            gl_action(&tuple, &bad),
            Err(Error::NotUnimodular { det: 2 })
        ));
    }

    #[test]
    fn group_order_examples() {
        let g = sl2();
        let id_tuple = AutTuple::identities(&g, 1);
        assert_eq!(group_order(&id_tuple).unwrap(), 1);
        let inv = chevalley_involution(&g).unwrap();
        let two = AutTuple::new(vec![inv.clone(), inv.clone()], vec![2, 2]).unwrap();
        assert_eq!(group_order(&two).unwrap(), 2);
        let mixed = AutTuple::new(vec![inv.clone(), identity_auto(&g)], vec![2, 1]).unwrap();
        assert_eq!(group_order(&mixed).unwrap(), 2);
        let rot = torus_automorphism(&g, 3, &[1]).unwrap();
        // ζ3-scaling and the full-order case: ⟨ω⟩ has order 3
        let t3 = AutTuple::new(vec![rot], vec![3]).unwrap();
        assert_eq!(group_order(&t3).unwrap(), 3);
    }

    #[test]
    fn inner_reflection_on_sl2_triple() {
        let g = sl2();
        let theta = inner_reflection(&g, &g.basis_vector(0), &g.basis_vector(2)).unwrap();
        // θ(h) = −h exactly
        let h = g.basis_vector(1);
        let img = theta.apply(&h);
        assert_eq!(img, vec![c(0), c(-1), c(0)]);
        // applying twice returns h
        assert_eq!(theta.apply(&img), h);
        // e ↦ −f, f ↦ −e for the standard triple
        assert_eq!(theta.apply(&g.basis_vector(0)), vec![c(0), c(0), c(-1)]);
    }

    #[test]
    fn exp_ad_rejects_non_nilpotent() {
        let g = sl2();
        let h = g.basis_vector(1);
        assert!(matches!(exp_ad(&g, &h), Err(Error::NotNilpotent)));
    }

    #[test]
    fn exp_ad_with_rational_coefficients() {
        let g = sl2();
        let x: Vec<CycNum> = vec![CycNum::from_rat(rat(1, 2)), c(0), c(0)];
        let m = exp_ad(&g, &x).unwrap();
        // exp(ad(e/2)) h = h − e, since [e/2, h] = −e
        let img = m.apply(&g.basis_vector(1));
        assert_eq!(img, vec![c(-1), c(1), c(0)]);
    }
}

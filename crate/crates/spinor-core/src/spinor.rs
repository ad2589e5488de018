//! Semi-spinors of Spin(2d) modelled as exterior forms on C^d,
//! with creation/annihilation Clifford action and the invariant inner product.
//!
//! A basis pure spinor is `e^{i_1 i_2 ... i_k}` for an index set written in
//! ascending order; `a_i^dag` wedges `e^i` on the left, `a_i` contracts with
//! alternating signs. Indices are 1-based throughout, matching the usual
//! physics labelling.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::GaussianRational;

/// Largest supported half-dimension. Index sets live in a u32 mask.
pub const MAX_HALF_DIM: usize = 30;

/// A subset of {1, ..., d} stored as a bit mask (bit i-1 represents index i).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexSet(pub u32);

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet(0)
    }

    /// Builds from 1-based indices. Panics if an index repeats or is 0.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u32;
        for &i in indices {
            assert!(i >= 1 && i <= MAX_HALF_DIM, "index out of range: {}", i);
            let b = 1u32 << (i - 1);
            assert!(bits & b == 0, "repeated index {}", i);
            bits |= b;
        }
        IndexSet(bits)
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= MAX_HALF_DIM && self.0 >> (i - 1) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn insert(&self, i: usize) -> Self {
        IndexSet(self.0 | 1 << (i - 1))
    }

    pub fn remove(&self, i: usize) -> Self {
        IndexSet(self.0 & !(1 << (i - 1)))
    }

    /// Ascending 1-based indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=MAX_HALF_DIM).filter(move |&i| self.contains(i))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Number of members strictly below `i`.
    pub fn count_below(&self, i: usize) -> usize {
        (self.0 & ((1u32 << (i - 1)) - 1)).count_ones() as usize
    }

    pub fn union(&self, other: IndexSet) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn sym_diff(&self, other: IndexSet) -> Self {
        IndexSet(self.0 ^ other.0)
    }

    /// Complement within {1..d}.
    pub fn complement(&self, d: usize) -> Self {
        IndexSet(!self.0 & ((1u32 << d) - 1))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i)?;
        }
        write!(f, "}}")
    }
}

/// Errors from spinor-level operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpinorError {
    IndexOutOfRange { index: usize, max: usize },
    DimensionMismatch { left: usize, right: usize },
    OddIndexSet { len: usize },
    ZeroSpinor,
}

impl fmt::Display for SpinorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpinorError::IndexOutOfRange { index, max } => {
                write!(f, "index {} out of range 1..={}", index, max)
            }
            SpinorError::DimensionMismatch { left, right } => {
                write!(f, "half-dimension mismatch: {} vs {}", left, right)
            }
            SpinorError::OddIndexSet { len } => {
                write!(f, "index set has odd cardinality {} (violates S^+ chirality)", len)
            }
            SpinorError::ZeroSpinor => write!(f, "operation undefined on the zero spinor"),
        }
    }
}

/// A sparse exterior form on C^d with Gaussian-rational coefficients.
///
/// `S^+` members have only even-cardinality terms; odd terms are permitted so
/// that compound operator strings can pass through `S^-`.
#[derive(Clone, PartialEq, Eq)]
pub struct Spinor {
    half_dim: usize,
    terms: BTreeMap<IndexSet, GaussianRational>,
}

impl Spinor {
    pub fn zero(half_dim: usize) -> Self {
        assert!(half_dim >= 1 && half_dim <= MAX_HALF_DIM);
        Spinor {
            half_dim,
            terms: BTreeMap::new(),
        }
    }

    /// The vacuum state (the empty form, coefficient 1).
    pub fn vacuum(half_dim: usize) -> Self {
        let mut s = Spinor::zero(half_dim);
        s.add_term(IndexSet::empty(), GaussianRational::one());
        s
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexSet, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s: IndexSet) -> GaussianRational {
        self.terms.get(&s).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// True when every stored term has even cardinality.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|s| s.len() % 2 == 0)
    }

    pub fn add_term(&mut self, s: IndexSet, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(s).or_insert_with(GaussianRational::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn add(&self, other: &Spinor) -> Result<Spinor, SpinorError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(*s, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Spinor {
        let mut out = Spinor::zero(self.half_dim);
        if c.is_zero() {
            return out;
        }
        for (s, v) in self.terms() {
            out.terms.insert(*s, v * c);
        }
        out
    }

    pub fn neg(&self) -> Spinor {
        self.scale(&(-GaussianRational::one()))
    }

    pub fn sub(&self, other: &Spinor) -> Result<Spinor, SpinorError> {
        self.add(&other.neg())
    }

    fn check_dim(&self, other: &Spinor) -> Result<(), SpinorError> {
        if self.half_dim != other.half_dim {
            return Err(SpinorError::DimensionMismatch {
                left: self.half_dim,
                right: other.half_dim,
            });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<(), SpinorError> {
        if i < 1 || i > self.half_dim {
            return Err(SpinorError::IndexOutOfRange {
                index: i,
                max: self.half_dim,
            });
        }
        Ok(())
    }

    /// Creation operator a_i^dag: wedges e^i in front, sorting it into place.
    /// Terms already containing i drop out.
    pub fn create(&self, i: usize) -> Result<Spinor, SpinorError> {
        self.check_index(i)?;
        let mut out = Spinor::zero(self.half_dim);
        for (s, c) in self.terms() {
            if s.contains(i) {
                continue;
            }
            let sign = if s.count_below(i) % 2 == 0 { c.clone() } else { -c };
            out.add_term(s.insert(i), sign);
        }
        Ok(out)
    }

    /// Annihilation operator a_i: contraction with alternating signs.
    pub fn annihilate(&self, i: usize) -> Result<Spinor, SpinorError> {
        self.check_index(i)?;
        let mut out = Spinor::zero(self.half_dim);
        for (s, c) in self.terms() {
            if !s.contains(i) {
                continue;
            }
            let sign = if s.count_below(i) % 2 == 0 { c.clone() } else { -c };
            out.add_term(s.remove(i), sign);
        }
        Ok(out)
    }

    /// Reversal: each degree-k term picks up (-1)^{k(k-1)/2}.
    pub fn reversal(&self) -> Spinor {
        let mut out = Spinor::zero(self.half_dim);
        for (s, c) in self.terms() {
            let k = s.len();
            let v = if (k * (k.saturating_sub(1)) / 2) % 2 == 0 {
                c.clone()
            } else {
                -c
            };
            out.terms.insert(*s, v);
        }
        out
    }

    pub fn display(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (n, (set, c)) in self.terms().enumerate() {
            if n > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "({})", c.display());
            if set.is_empty() {
                s.push('1');
            } else {
                s.push('e');
                s.push('^');
                s.push('{');
                for i in set.iter() {
                    let _ = write!(s, "{}", i);
                }
                s.push('}');
            }
        }
        s
    }
}

impl fmt::Debug for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// Builds the basis pure spinor e^S. Requires |S| even.
pub fn basis_pure(s: IndexSet, half_dim: usize) -> Result<Spinor, SpinorError> {
    if s.len() % 2 != 0 {
        return Err(SpinorError::OddIndexSet { len: s.len() });
    }
    if let Some(top) = s.indices().last() {
        assert!(*top <= half_dim, "index set exceeds half dimension");
    }
    let mut out = Spinor::zero(half_dim);
    out.add_term(s, GaussianRational::one());
    Ok(out)
}

/// An element of C^{2d} in the canonical null basis: `sum ann_i a_i + cre_i a_i^dag`.
#[derive(Clone, PartialEq, Eq)]
pub struct Vector2d {
    pub ann: Vec<GaussianRational>,
    pub cre: Vec<GaussianRational>,
}

impl Vector2d {
    pub fn zero(half_dim: usize) -> Self {
        Vector2d {
            ann: alloc::vec![GaussianRational::zero(); half_dim],
            cre: alloc::vec![GaussianRational::zero(); half_dim],
        }
    }

    pub fn half_dim(&self) -> usize {
        self.ann.len()
    }

    /// The basis vector a_i.
    pub fn basis_ann(i: usize, half_dim: usize) -> Self {
        let mut v = Vector2d::zero(half_dim);
        v.ann[i - 1] = GaussianRational::one();
        v
    }

    /// The basis vector a_i^dag.
    pub fn basis_cre(i: usize, half_dim: usize) -> Self {
        let mut v = Vector2d::zero(half_dim);
        v.cre[i - 1] = GaussianRational::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.ann.iter().all(|c| c.is_zero()) && self.cre.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Vector2d {
            ann: self.ann.iter().map(|x| x * c).collect(),
            cre: self.cre.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Vector2d) -> Self {
        assert_eq!(self.half_dim(), other.half_dim());
        Vector2d {
            ann: self.ann.iter().zip(&other.ann).map(|(a, b)| a + b).collect(),
            cre: self.cre.iter().zip(&other.cre).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Debug for Vector2d {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.ann.iter().enumerate() {
            if !c.is_zero() {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "({})a_{}", c.display(), i + 1)?;
                first = false;
            }
        }
        for (i, c) in self.cre.iter().enumerate() {
            if !c.is_zero() {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "({})a_{}^+", c.display(), i + 1)?;
                first = false;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The metric of the canonical null basis: g(a_i, a_j^dag) = delta_ij, null otherwise.
pub fn metric(u: &Vector2d, v: &Vector2d) -> GaussianRational {
    assert_eq!(u.half_dim(), v.half_dim());
    let mut acc = GaussianRational::zero();
    for i in 0..u.half_dim() {
        acc += &(&u.ann[i] * &v.cre[i]);
        acc += &(&u.cre[i] * &v.ann[i]);
    }
    acc
}

/// Clifford multiplication by a vector: sum_i (ann_i a_i + cre_i a_i^dag) acting on psi.
pub fn clifford_mul(v: &Vector2d, psi: &Spinor) -> Result<Spinor, SpinorError> {
    if v.half_dim() != psi.half_dim() {
        return Err(SpinorError::DimensionMismatch {
            left: v.half_dim(),
            right: psi.half_dim(),
        });
    }
    let mut out = Spinor::zero(psi.half_dim());
    for i in 1..=psi.half_dim() {
        if !v.ann[i - 1].is_zero() {
            out = out.add(&psi.annihilate(i)?.scale(&v.ann[i - 1]))?;
        }
        if !v.cre[i - 1].is_zero() {
            out = out.add(&psi.create(i)?.scale(&v.cre[i - 1]))?;
        }
    }
    Ok(out)
}

/// The gamma vector: Gamma_a = a_a + a_a^dag for a <= d,
/// Gamma_{i+d} = sqrt(-1)(a_i - a_i^dag).
pub fn gamma_vector(a: usize, half_dim: usize) -> Result<Vector2d, SpinorError> {
    if a < 1 || a > 2 * half_dim {
        return Err(SpinorError::IndexOutOfRange {
            index: a,
            max: 2 * half_dim,
        });
    }
    let mut v = Vector2d::zero(half_dim);
    if a <= half_dim {
        v.ann[a - 1] = GaussianRational::one();
        v.cre[a - 1] = GaussianRational::one();
    } else {
        let i = a - half_dim;
        v.ann[i - 1] = GaussianRational::i();
        v.cre[i - 1] = -GaussianRational::i();
    }
    Ok(v)
}

/// Gamma_a acting on psi by Clifford multiplication.
pub fn gamma(a: usize, psi: &Spinor) -> Result<Spinor, SpinorError> {
    clifford_mul(&gamma_vector(a, psi.half_dim())?, psi)
}

/// Invariant inner product: coefficient of the top form in `psi ^ reversal(phi)`.
pub fn inner(psi: &Spinor, phi: &Spinor) -> Result<GaussianRational, SpinorError> {
    if psi.half_dim() != phi.half_dim() {
        return Err(SpinorError::DimensionMismatch {
            left: psi.half_dim(),
            right: phi.half_dim(),
        });
    }
    let d = psi.half_dim();
    let mut acc = GaussianRational::zero();
    for (s, c) in psi.terms() {
        let t = s.complement(d);
        let ct = phi.coeff(t);
        if ct.is_zero() {
            continue;
        }
        // sign of e^S ^ e^T relative to e^{1..d}: inversions between S and T,
        // then the reversal sign on the degree of T
        let mut inv = 0usize;
        for a in s.iter() {
            inv += (1..a).filter(|&b| t.contains(b)).count();
        }
        let k = t.len();
        let total = inv + k * k.saturating_sub(1) / 2;
        let term = c * &ct;
        acc += &(if total % 2 == 0 { term } else { -term });
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(idx: &[usize]) -> IndexSet {
        IndexSet::from_indices(idx)
    }

    #[test]
    fn create_signs() {
        let d = 3;
        // create(1, e^{23}) = e^{123}
        let s = basis_pure(set(&[2, 3]), d).unwrap();
        let r = s.create(1).unwrap();
        assert_eq!(r.coeff(set(&[1, 2, 3])), GaussianRational::one());
        // create(2, e^{13}) = -e^{123}: one transposition to sort
        let s = basis_pure(set(&[1, 3]), d).unwrap();
        let r = s.create(2).unwrap();
        assert_eq!(r.coeff(set(&[1, 2, 3])), GaussianRational::from_int(-1));
        // create(1, e^{12}) = 0 by nilpotency
        let s = basis_pure(set(&[1, 2]), d).unwrap();
        assert!(s.create(1).unwrap().is_zero());
    }

    #[test]
    fn annihilate_signs() {
        let d = 3;
        let s = basis_pure(set(&[1, 2]), d).unwrap();
        // a_1 e^{12} = e^2
        assert_eq!(s.annihilate(1).unwrap().coeff(set(&[2])), GaussianRational::one());
        // a_2 e^{12} = -e^1
        assert_eq!(
            s.annihilate(2).unwrap().coeff(set(&[1])),
            GaussianRational::from_int(-1)
        );
        // a_3 e^{12} = 0
        assert!(s.annihilate(3).unwrap().is_zero());
    }

    #[test]
    fn nilpotency() {
        let d = 4;
        let mut psi = Spinor::zero(d);
        psi.add_term(set(&[1, 2]), GaussianRational::from_int(3));
        psi.add_term(set(&[3, 4]), GaussianRational::i());
        psi.add_term(IndexSet::empty(), GaussianRational::from_parts(1, 2, 0, 1));
        for i in 1..=d {
            assert!(psi.create(i).unwrap().create(i).unwrap().is_zero());
            assert!(psi.annihilate(i).unwrap().annihilate(i).unwrap().is_zero());
        }
    }

    #[test]
    fn clifford_vacuum() {
        let d = 2;
        let vac = Spinor::vacuum(d);
        let a1 = Vector2d::basis_ann(1, d);
        assert!(clifford_mul(&a1, &vac).unwrap().is_zero());
        let v = a1.add(&Vector2d::basis_cre(1, d));
        let r = clifford_mul(&v, &vac).unwrap();
        assert_eq!(r.coeff(set(&[1])), GaussianRational::one());
    }

    #[test]
    fn gamma_action_and_metric() {
        let d = 2;
        let vac = Spinor::vacuum(d);
        // Gamma_1 vac = e^1
        let r = gamma(1, &vac).unwrap();
        assert_eq!(r.coeff(set(&[1])), GaussianRational::one());
        // Gamma_{d+1} vac = -i e^1
        let r = gamma(d + 1, &vac).unwrap();
        assert_eq!(r.coeff(set(&[1])), -GaussianRational::i());
        // g(Gamma_a, Gamma_b) = 2 delta_ab at d = 3
        let d = 3;
        for a in 1..=2 * d {
            for b in 1..=2 * d {
                let g = metric(&gamma_vector(a, d).unwrap(), &gamma_vector(b, d).unwrap());
                let expect = if a == b {
                    GaussianRational::from_int(2)
                } else {
                    GaussianRational::zero()
                };
                assert_eq!(g, expect, "a={} b={}", a, b);
            }
        }
    }

    #[test]
    fn reversal_signs() {
        let d = 4;
        let s = basis_pure(set(&[1, 2]), d).unwrap();
        assert_eq!(s.reversal().coeff(set(&[1, 2])), GaussianRational::from_int(-1));
        let s = basis_pure(set(&[1, 2, 3, 4]), d).unwrap();
        assert_eq!(s.reversal().coeff(set(&[1, 2, 3, 4])), GaussianRational::one());
        let one = Spinor::vacuum(d);
        assert_eq!(one.reversal(), one);
        // involution on each fixed degree
        let mut psi = Spinor::zero(d);
        psi.add_term(set(&[1, 3]), GaussianRational::from_int(2));
        psi.add_term(set(&[2]), GaussianRational::i());
        assert_eq!(psi.reversal().reversal(), psi);
    }

    #[test]
    fn inner_examples() {
        // d=2: <1, e^{12}> = -1
        let d = 2;
        let one = Spinor::vacuum(d);
        let top = basis_pure(set(&[1, 2]), d).unwrap();
        assert_eq!(inner(&one, &top).unwrap(), GaussianRational::from_int(-1));
        // d=4: <1, e^{1234}> = +1
        let d = 4;
        let one = Spinor::vacuum(d);
        let top = basis_pure(set(&[1, 2, 3, 4]), d).unwrap();
        assert_eq!(inner(&one, &top).unwrap(), GaussianRational::one());
        // <psi, psi> = 0 for a single basis pure spinor (below top degree)
        let psi = basis_pure(set(&[1, 2]), d).unwrap();
        assert!(inner(&psi, &psi).unwrap().is_zero());
    }

    #[test]
    fn basis_pure_chirality() {
        assert!(basis_pure(set(&[1, 2, 3]), 4).is_err());
        let vac = basis_pure(IndexSet::empty(), 4).unwrap();
        assert_eq!(vac, Spinor::vacuum(4));
    }

    // Clifford relation: (uv + vu) psi = g(u,v) psi with the canonical-basis
    // metric. The operator model realises the pairing without a factor of two;
    // see the geometric-map module docs for where the conventions are pinned.
    #[test]
    fn clifford_relation_random() {
        use crate::testutil::{rand_spinor, rand_vec, Rng};
        let mut rng = Rng(0x5eed);
        for d in 2..=5 {
            for _ in 0..20 {
                let u = rand_vec(&mut rng, d);
                let v = rand_vec(&mut rng, d);
                let psi = rand_spinor(&mut rng, d);
                let uv = clifford_mul(&u, &clifford_mul(&v, &psi).unwrap()).unwrap();
                let vu = clifford_mul(&v, &clifford_mul(&u, &psi).unwrap()).unwrap();
                let lhs = uv.add(&vu).unwrap();
                let rhs = psi.scale(&metric(&u, &v));
                assert_eq!(lhs, rhs, "d={}", d);
            }
        }
    }

}

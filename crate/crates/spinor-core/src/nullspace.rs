//! Annihilator subspaces M(psi) = { u : u psi = 0 }, purity tests, and
//! intersection dimensions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::linalg::{self, Row};
use crate::scalar::GaussianRational;
use crate::spinor::{metric, IndexSet, Spinor, SpinorError, Vector2d};

/// A totally null subspace of C^{2d}, stored as a row-reduced exact basis.
#[derive(Clone, Debug)]
pub struct NullSubspace {
    half_dim: usize,
    basis: Vec<Vector2d>,
}

impl NullSubspace {
    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector2d] {
        &self.basis
    }

    /// Checks g(u, v) = 0 on all basis pairs.
    pub fn is_totally_null(&self) -> bool {
        for u in &self.basis {
            for v in &self.basis {
                if !metric(u, v).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    fn rows(&self) -> Vec<Row> {
        self.basis.iter().map(vector_row).collect()
    }
}

fn vector_row(v: &Vector2d) -> Row {
    let mut row = Vec::with_capacity(2 * v.half_dim());
    row.extend(v.ann.iter().cloned());
    row.extend(v.cre.iter().cloned());
    row
}

fn row_vector(row: &[GaussianRational], half_dim: usize) -> Vector2d {
    let mut v = Vector2d::zero(half_dim);
    v.ann.clone_from_slice(&row[..half_dim]);
    v.cre.clone_from_slice(&row[half_dim..]);
    v
}

/// The annihilator subspace of a nonzero spinor: the exact kernel of
/// v -> clifford_mul(v, psi) over the 2d-dimensional vector space.
pub fn annihilator(psi: &Spinor) -> Result<NullSubspace, SpinorError> {
    if psi.is_zero() {
        return Err(SpinorError::ZeroSpinor);
    }
    let d = psi.half_dim();
    // column a: image of the a-th basis vector (a_1..a_d then a_1^dag..a_d^dag)
    let mut images: Vec<Spinor> = Vec::with_capacity(2 * d);
    for i in 1..=d {
        images.push(psi.annihilate(i)?);
    }
    for i in 1..=d {
        images.push(psi.create(i)?);
    }
    let mut keys: BTreeMap<IndexSet, usize> = BTreeMap::new();
    for im in &images {
        for (s, _) in im.terms() {
            let next = keys.len();
            keys.entry(*s).or_insert(next);
        }
    }
    let mut rows = alloc::vec![alloc::vec![GaussianRational::zero(); 2 * d]; keys.len()];
    for (col, im) in images.iter().enumerate() {
        for (s, c) in im.terms() {
            rows[keys[s]][col] = c.clone();
        }
    }
    let kernel = linalg::kernel_basis(&rows, 2 * d);
    let mut basis_rows = kernel;
    linalg::rref(&mut basis_rows);
    let basis = basis_rows
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .map(|r| row_vector(r, d))
        .collect();
    Ok(NullSubspace {
        half_dim: d,
        basis,
    })
}

/// dim M(psi); between 0 and d.
pub fn nullity(psi: &Spinor) -> Result<usize, SpinorError> {
    Ok(annihilator(psi)?.dim())
}

/// A spinor is pure iff its annihilator has the maximal dimension d.
pub fn is_pure(psi: &Spinor) -> Result<bool, SpinorError> {
    Ok(nullity(psi)? == psi.half_dim())
}

/// Exact dimension of the intersection of two null subspaces.
pub fn intersection_dim(m1: &NullSubspace, m2: &NullSubspace) -> Result<usize, SpinorError> {
    if m1.half_dim() != m2.half_dim() {
        return Err(SpinorError::DimensionMismatch {
            left: m1.half_dim(),
            right: m2.half_dim(),
        });
    }
    let r1 = m1.dim();
    let r2 = m2.dim();
    let joint = linalg::joint_rank(&m1.rows(), &m2.rows());
    Ok(r1 + r2 - joint)
}

/// The subspace intersection itself: vectors expressible in both bases.
/// Solved as the kernel of [A^T | -B^T], mapped back through A^T.
pub fn intersect(m1: &NullSubspace, m2: &NullSubspace) -> Result<NullSubspace, SpinorError> {
    if m1.half_dim() != m2.half_dim() {
        return Err(SpinorError::DimensionMismatch {
            left: m1.half_dim(),
            right: m2.half_dim(),
        });
    }
    let d = m1.half_dim();
    let ra = m1.dim();
    let rb = m2.dim();
    let mut rows = alloc::vec![alloc::vec![GaussianRational::zero(); ra + rb]; 2 * d];
    for (col, v) in m1.basis().iter().enumerate() {
        let r = vector_row(v);
        for (i, x) in r.into_iter().enumerate() {
            rows[i][col] = x;
        }
    }
    for (col, v) in m2.basis().iter().enumerate() {
        let r = vector_row(v);
        for (i, x) in r.into_iter().enumerate() {
            rows[i][ra + col] = -&x;
        }
    }
    let kernel = linalg::kernel_basis(&rows, ra + rb);
    let mut vec_rows: Vec<Row> = Vec::new();
    for kv in &kernel {
        let mut out = alloc::vec![GaussianRational::zero(); 2 * d];
        for (col, v) in m1.basis().iter().enumerate() {
            let r = vector_row(v);
            for (i, x) in r.into_iter().enumerate() {
                let t = &kv[col] * &x;
                out[i] += &t;
            }
        }
        vec_rows.push(out);
    }
    linalg::rref(&mut vec_rows);
    let basis = vec_rows
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .map(|r| row_vector(r, d))
        .collect();
    Ok(NullSubspace {
        half_dim: d,
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::{basis_pure, clifford_mul};

    fn set(idx: &[usize]) -> IndexSet {
        IndexSet::from_indices(idx)
    }

    fn word_sum(d: usize, words: &[&[usize]]) -> Spinor {
        let mut psi = Spinor::zero(d);
        for w in words {
            psi = psi.add(&basis_pure(set(w), d).unwrap()).unwrap();
        }
        psi
    }

    #[test]
    fn vacuum_annihilator() {
        let d = 4;
        let m = annihilator(&Spinor::vacuum(d)).unwrap();
        assert_eq!(m.dim(), 4);
        assert!(m.is_totally_null());
        // spanned by the a_i: each basis vector has zero creation part
        for v in m.basis() {
            assert!(v.cre.iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn e12_annihilator() {
        let d = 4;
        let psi = basis_pure(set(&[1, 2]), d).unwrap();
        let m = annihilator(&psi).unwrap();
        assert_eq!(m.dim(), 4);
        // span{a_1^dag, a_2^dag, a_3, a_4}: each kernel vector annihilates psi
        for v in m.basis() {
            assert!(clifford_mul(v, &psi).unwrap().is_zero());
            assert!(v.ann[0].is_zero() && v.ann[1].is_zero());
            assert!(v.cre[2].is_zero() && v.cre[3].is_zero());
        }
    }

    #[test]
    fn impure_8d_nullity_zero() {
        let d = 4;
        let psi = word_sum(d, &[&[], &[1, 2, 3, 4]]);
        assert_eq!(nullity(&psi).unwrap(), 0);
        assert!(!is_pure(&psi).unwrap());
    }

    #[test]
    fn shared_direction_14d() {
        // the k=2 e=1 configuration at d=7 shares exactly a_7
        let d = 7;
        let psi = word_sum(d, &[&[], &[1, 2, 3, 4, 5, 6]]);
        let m = annihilator(&psi).unwrap();
        assert_eq!(m.dim(), 1);
        let v = &m.basis()[0];
        assert!(!v.ann[6].is_zero());
        assert!(v.cre.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn purity_at_distance_two() {
        let d = 4;
        let psi = word_sum(d, &[&[], &[1, 2]]);
        assert!(is_pure(&psi).unwrap());
        let psi = word_sum(d, &[&[], &[1, 2, 3, 4]]);
        assert!(!is_pure(&psi).unwrap());
    }

    #[test]
    fn zero_spinor_rejected() {
        let z = Spinor::zero(3);
        assert_eq!(nullity(&z), Err(SpinorError::ZeroSpinor));
    }

    #[test]
    fn intersection_matches_hamming() {
        // exact linear algebra equals d - HammingDistance for basis pure spinors
        for d in 2..=5usize {
            let masks: Vec<u32> = (0..1u32 << d).filter(|m| m.count_ones() % 2 == 0).collect();
            for &m1 in &masks {
                for &m2 in &masks {
                    let p1 = basis_pure(IndexSet(m1), d).unwrap();
                    let p2 = basis_pure(IndexSet(m2), d).unwrap();
                    let n1 = annihilator(&p1).unwrap();
                    let n2 = annihilator(&p2).unwrap();
                    let got = intersection_dim(&n1, &n2).unwrap();
                    let expect = d - (m1 ^ m2).count_ones() as usize;
                    assert_eq!(got, expect, "d={} m1={:b} m2={:b}", d, m1, m2);
                }
            }
        }
    }

    #[test]
    fn intersection_self_is_d() {
        let d = 3;
        let m = annihilator(&Spinor::vacuum(d)).unwrap();
        assert_eq!(intersection_dim(&m, &m).unwrap(), d);
    }

    #[test]
    fn annihilator_totally_null_random() {
        use crate::testutil::{rand_spinor, Rng};
        let mut rng = Rng(0xabcd);
        for d in 2..=5 {
            for _ in 0..10 {
                let psi = rand_spinor(&mut rng, d);
                if psi.is_zero() {
                    continue;
                }
                let m = annihilator(&psi).unwrap();
                assert!(m.is_totally_null());
                for v in m.basis() {
                    assert!(clifford_mul(v, &psi).unwrap().is_zero());
                }
            }
        }
    }
}

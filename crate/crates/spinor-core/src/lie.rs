//! The Lie algebra spin(2d, C) in the quadratic-oscillator parametrisation,
//! its action on spinors, brackets, stabilizer subalgebras, and the Cartan
//! rescaling rank test.
//!
//! An element is `X = 1/2 A^{ij}(a_i a_j^dag - a_j^dag a_i)
//! + 1/2 beta^{ij} a_i^dag a_j^dag + 1/2 B^{ij} a_i a_j` with A arbitrary and
//! beta, B antisymmetric.

use alloc::vec::Vec;

use num_rational::BigRational;

use crate::linalg::{self, Row};
use crate::scalar::GaussianRational;
use crate::spinor::{IndexSet, Spinor, SpinorError};

pub type Mat = Vec<Vec<GaussianRational>>;

fn zmat(d: usize) -> Mat {
    alloc::vec![alloc::vec![GaussianRational::zero(); d]; d]
}

fn mat_is_antisymmetric(m: &Mat) -> bool {
    let d = m.len();
    for i in 0..d {
        for j in 0..d {
            if &m[i][j] + &m[j][i] != GaussianRational::zero() {
                return false;
            }
        }
    }
    true
}

fn mat_mul(x: &Mat, y: &Mat) -> Mat {
    let d = x.len();
    let mut out = zmat(d);
    for i in 0..d {
        for k in 0..d {
            if x[i][k].is_zero() {
                continue;
            }
            for j in 0..d {
                if y[k][j].is_zero() {
                    continue;
                }
                let p = &x[i][k] * &y[k][j];
                out[i][j] += &p;
            }
        }
    }
    out
}

fn mat_t(x: &Mat) -> Mat {
    let d = x.len();
    let mut out = zmat(d);
    for i in 0..d {
        for j in 0..d {
            out[i][j] = x[j][i].clone();
        }
    }
    out
}

fn mat_add(x: &Mat, y: &Mat) -> Mat {
    let d = x.len();
    let mut out = zmat(d);
    for i in 0..d {
        for j in 0..d {
            out[i][j] = &x[i][j] + &y[i][j];
        }
    }
    out
}

fn mat_sub(x: &Mat, y: &Mat) -> Mat {
    let d = x.len();
    let mut out = zmat(d);
    for i in 0..d {
        for j in 0..d {
            out[i][j] = &x[i][j] - &y[i][j];
        }
    }
    out
}

/// An element of spin(2d, C).
#[derive(Clone, PartialEq, Eq)]
pub struct LieElement {
    half_dim: usize,
    pub a: Mat,
    pub beta: Mat,
    pub b: Mat,
}

impl LieElement {
    /// Builds an element, checking the antisymmetry invariants.
    pub fn new(a: Mat, beta: Mat, b: Mat) -> Self {
        let d = a.len();
        assert!(d >= 1, "empty matrices");
        assert!(beta.len() == d && b.len() == d, "matrix size mismatch");
        assert!(mat_is_antisymmetric(&beta), "beta must be antisymmetric");
        assert!(mat_is_antisymmetric(&b), "B must be antisymmetric");
        LieElement {
            half_dim: d,
            a,
            beta,
            b,
        }
    }

    pub fn zero(d: usize) -> Self {
        LieElement {
            half_dim: d,
            a: zmat(d),
            beta: zmat(d),
            b: zmat(d),
        }
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn is_zero(&self) -> bool {
        let z = GaussianRational::zero();
        self.a.iter().flatten().all(|c| *c == z)
            && self.beta.iter().flatten().all(|c| *c == z)
            && self.b.iter().flatten().all(|c| *c == z)
    }

    /// Coordinates in the standard basis order: A row-major, then the upper
    /// triangles of beta and B.
    pub fn coords(&self) -> Row {
        let d = self.half_dim;
        let mut v = Vec::with_capacity(d * (2 * d - 1));
        for i in 0..d {
            for j in 0..d {
                v.push(self.a[i][j].clone());
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                v.push(self.beta[i][j].clone());
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                v.push(self.b[i][j].clone());
            }
        }
        v
    }

    pub fn from_coords(d: usize, v: &[GaussianRational]) -> Self {
        assert_eq!(v.len(), d * (2 * d - 1));
        let mut a = zmat(d);
        let mut beta = zmat(d);
        let mut b = zmat(d);
        let mut idx = 0;
        for row in a.iter_mut() {
            for cell in row.iter_mut() {
                *cell = v[idx].clone();
                idx += 1;
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                beta[i][j] = v[idx].clone();
                beta[j][i] = -&v[idx];
                idx += 1;
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                b[i][j] = v[idx].clone();
                b[j][i] = -&v[idx];
                idx += 1;
            }
        }
        LieElement {
            half_dim: d,
            a,
            beta,
            b,
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let sc = |m: &Mat| -> Mat {
            m.iter()
                .map(|row| row.iter().map(|x| x * c).collect())
                .collect()
        };
        LieElement {
            half_dim: self.half_dim,
            a: sc(&self.a),
            beta: sc(&self.beta),
            b: sc(&self.b),
        }
    }

    pub fn add(&self, other: &LieElement) -> Self {
        assert_eq!(self.half_dim, other.half_dim);
        LieElement {
            half_dim: self.half_dim,
            a: mat_add(&self.a, &other.a),
            beta: mat_add(&self.beta, &other.beta),
            b: mat_add(&self.b, &other.b),
        }
    }
}

impl core::fmt::Debug for LieElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "LieElement(d={}, A={:?}, beta={:?}, B={:?})",
            self.half_dim, self.a, self.beta, self.b
        )
    }
}

/// The standard basis: d^2 elements E_ij for A, then d(d-1)/2 each for the
/// upper triangles of beta and B. Total d(2d - 1) = dim so(2d).
pub fn lie_basis(d: usize) -> Vec<LieElement> {
    let n = d * (2 * d - 1);
    let mut out = Vec::with_capacity(n);
    for idx in 0..n {
        let mut v = alloc::vec![GaussianRational::zero(); n];
        v[idx] = GaussianRational::one();
        out.push(LieElement::from_coords(d, &v));
    }
    out
}

/// The Cartan generator t_i = a_i a_i^dag - a_i^dag a_i, i.e. A = 2 E_ii.
/// Its eigenvalue on a basis pure spinor is +1 when i is unoccupied, -1
/// when occupied.
pub fn cartan_t(i: usize, d: usize) -> LieElement {
    let mut a = zmat(d);
    a[i - 1][i - 1] = GaussianRational::from_int(2);
    LieElement::new(a, zmat(d), zmat(d))
}

/// Applies X to a spinor. Chirality is preserved.
pub fn act(x: &LieElement, psi: &Spinor) -> Result<Spinor, SpinorError> {
    if x.half_dim() != psi.half_dim() {
        return Err(SpinorError::DimensionMismatch {
            left: x.half_dim(),
            right: psi.half_dim(),
        });
    }
    let d = psi.half_dim();
    let half = GaussianRational::from_parts(1, 2, 0, 1);
    let mut out = Spinor::zero(d);
    for i in 1..=d {
        for j in 1..=d {
            let a = &x.a[i - 1][j - 1];
            if !a.is_zero() {
                // 1/2 A^{ij} (a_i a_j^dag - a_j^dag a_i)
                let t1 = psi.create(j)?.annihilate(i)?;
                let t2 = psi.annihilate(i)?.create(j)?;
                let term = t1.sub(&t2)?.scale(&(a * &half));
                out = out.add(&term)?;
            }
            let be = &x.beta[i - 1][j - 1];
            if !be.is_zero() {
                // 1/2 beta^{ij} a_i^dag a_j^dag
                let term = psi.create(j)?.create(i)?.scale(&(be * &half));
                out = out.add(&term)?;
            }
            let bb = &x.b[i - 1][j - 1];
            if !bb.is_zero() {
                // 1/2 B^{ij} a_i a_j
                let term = psi.annihilate(j)?.annihilate(i)?.scale(&(bb * &half));
                out = out.add(&term)?;
            }
        }
    }
    Ok(out)
}

/// Structural bracket [X, Y] in (A, beta, B) coordinates.
pub fn bracket(x: &LieElement, y: &LieElement) -> LieElement {
    assert_eq!(x.half_dim, y.half_dim);
    let a = {
        let comm = mat_sub(&mat_mul(&x.a, &y.a), &mat_mul(&y.a, &x.a));
        let cross = mat_sub(&mat_mul(&x.b, &y.beta), &mat_mul(&y.b, &x.beta));
        mat_add(&comm, &cross)
    };
    let beta = {
        let t1 = mat_add(&mat_mul(&mat_t(&y.a), &x.beta), &mat_mul(&x.beta, &y.a));
        let t2 = mat_add(&mat_mul(&mat_t(&x.a), &y.beta), &mat_mul(&y.beta, &x.a));
        mat_sub(&t1, &t2)
    };
    let b = {
        let t1 = mat_add(&mat_mul(&x.a, &y.b), &mat_mul(&y.b, &mat_t(&x.a)));
        let t2 = mat_add(&mat_mul(&y.a, &x.b), &mat_mul(&x.b, &mat_t(&y.a)));
        mat_sub(&t1, &t2)
    };
    LieElement {
        half_dim: x.half_dim,
        a,
        beta,
        b,
    }
}

/// The stabilizer subalgebra of a nonzero spinor: the exact kernel of
/// X -> act(X, psi) over the lie_basis coordinates. Returns its dimension
/// and a reduced basis.
pub fn stabilizer_algebra(psi: &Spinor) -> Result<(usize, Vec<LieElement>), SpinorError> {
    if psi.is_zero() {
        return Err(SpinorError::ZeroSpinor);
    }
    let d = psi.half_dim();
    let basis = lie_basis(d);
    let images: Vec<Spinor> = basis
        .iter()
        .map(|x| act(x, psi))
        .collect::<Result<_, _>>()?;
    let mut keys: alloc::collections::BTreeMap<IndexSet, usize> = alloc::collections::BTreeMap::new();
    for im in &images {
        for (s, _) in im.terms() {
            let next = keys.len();
            keys.entry(*s).or_insert(next);
        }
    }
    let ncols = basis.len();
    let mut rows = alloc::vec![alloc::vec![GaussianRational::zero(); ncols]; keys.len()];
    for (col, im) in images.iter().enumerate() {
        for (s, c) in im.terms() {
            rows[keys[s]][col] = c.clone();
        }
    }
    let mut kernel = linalg::kernel_basis(&rows, ncols);
    linalg::rref(&mut kernel);
    let elems: Vec<LieElement> = kernel
        .iter()
        .filter(|v| v.iter().any(|c| !c.is_zero()))
        .map(|v| LieElement::from_coords(d, v))
        .collect();
    Ok((elems.len(), elems))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieError {
    NotClosed,
    ZeroCoefficient,
}

impl core::fmt::Display for LieError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LieError::NotClosed => write!(f, "input basis is not closed under bracket"),
            LieError::ZeroCoefficient => write!(f, "configuration has a zero coefficient"),
        }
    }
}

/// True when every pairwise bracket lies back in the span of the input.
pub fn is_closed_under_bracket(basis: &[LieElement]) -> bool {
    if basis.is_empty() {
        return true;
    }
    let span: Vec<Row> = basis.iter().map(|e| e.coords()).collect();
    let r0 = linalg::rank(&span);
    let mut all = span;
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            all.push(bracket(&basis[i], &basis[j]).coords());
        }
    }
    linalg::rank(&all) == r0
}

/// Dimension of the span of all pairwise brackets. Errors if the input is
/// not closed under bracket.
pub fn derived_subalgebra_dim(basis: &[LieElement]) -> Result<usize, LieError> {
    if !is_closed_under_bracket(basis) {
        return Err(LieError::NotClosed);
    }
    let mut rows: Vec<Row> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            rows.push(bracket(&basis[i], &basis[j]).coords());
        }
    }
    Ok(linalg::rank(&rows))
}

/// The matrix of Cartan eigenvalues of a configuration: row per constituent,
/// entry +1 where the index is unoccupied and -1 where occupied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanVector {
    pub half_dim: usize,
    pub eigen: Vec<Vec<i8>>,
}

impl CartanVector {
    pub fn from_words(d: usize, words: &[IndexSet]) -> Self {
        let eigen = words
            .iter()
            .map(|w| {
                (1..=d)
                    .map(|i| if w.contains(i) { -1i8 } else { 1i8 })
                    .collect()
            })
            .collect();
        CartanVector {
            half_dim: d,
            eigen,
        }
    }
}

/// Whether arbitrary nonzero coefficients on the constituents can be made
/// equal by the Cartan subgroup: exactly the condition that the eigenvalue
/// matrix extended by an all-ones column has full row rank over Q.
pub fn cartan_equalizable(
    cv: &CartanVector,
    coeffs: Option<&[GaussianRational]>,
) -> Result<bool, LieError> {
    if let Some(cs) = coeffs {
        if cs.iter().any(|c| c.is_zero()) {
            return Err(LieError::ZeroCoefficient);
        }
    }
    let k = cv.eigen.len();
    let rows: Vec<Row> = cv
        .eigen
        .iter()
        .map(|row| {
            let mut r: Row = row
                .iter()
                .map(|&e| {
                    GaussianRational::new(
                        BigRational::from_integer(e.into()),
                        BigRational::from_integer(0.into()),
                    )
                })
                .collect();
            r.push(GaussianRational::one());
            r
        })
        .collect();
    Ok(linalg::rank(&rows) == k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::basis_pure;
    use crate::testutil::{rand_even_spinor, rand_spinor, Rng};

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
    fn basis_counts() {
        assert_eq!(lie_basis(4).len(), 28);
        assert_eq!(lie_basis(6).len(), 66);
        assert_eq!(lie_basis(7).len(), 91);
    }

    #[test]
    fn cartan_eigenvalues() {
        let d = 4;
        let t1 = cartan_t(1, d);
        let vac = Spinor::vacuum(d);
        assert_eq!(act(&t1, &vac).unwrap(), vac);
        let e12 = basis_pure(set(&[1, 2]), d).unwrap();
        assert_eq!(act(&t1, &e12).unwrap(), e12.neg());
    }

    #[test]
    fn act_preserves_chirality() {
        let mut rng = Rng(0x1414);
        let d = 4;
        for x in lie_basis(d) {
            let psi = rand_even_spinor(&mut rng, d);
            assert!(act(&x, &psi).unwrap().is_even());
        }
    }

    #[test]
    fn bracket_matches_action() {
        // [X, Y] acting as X(Y psi) - Y(X psi), over random basis pairs
        let d = 3;
        let basis = lie_basis(d);
        let mut rng = Rng(0xfeed);
        for _ in 0..40 {
            let x = &basis[rng.usize_below(basis.len())];
            let y = &basis[rng.usize_below(basis.len())];
            let z = bracket(x, y);
            let psi = rand_spinor(&mut rng, d);
            let lhs = act(&z, &psi).unwrap();
            let rhs = act(x, &act(y, &psi).unwrap())
                .unwrap()
                .sub(&act(y, &act(x, &psi).unwrap()).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn bracket_closure_membership() {
        // [X, Y] stays inside the span of lie_basis: closure at small d
        for d in 2..=4usize {
            assert!(is_closed_under_bracket(&lie_basis(d)));
        }
    }

    #[test]
    fn inner_product_invariance() {
        use crate::spinor::inner;
        let mut rng = Rng(0xc0de);
        for d in 2..=5usize {
            let basis = lie_basis(d);
            for _ in 0..6 {
                let x = &basis[rng.usize_below(basis.len())];
                let psi = rand_spinor(&mut rng, d);
                let phi = rand_spinor(&mut rng, d);
                let lhs = inner(&act(x, &psi).unwrap(), &phi).unwrap();
                let rhs = inner(&psi, &act(x, &phi).unwrap()).unwrap();
                assert!((&lhs + &rhs).is_zero(), "d={}", d);
            }
        }
    }

    #[test]
    fn stabilizer_of_8d_pair() {
        let psi = word_sum(4, &[&[], &[1, 2, 3, 4]]);
        let (dim, basis) = stabilizer_algebra(&psi).unwrap();
        assert_eq!(dim, 21);
        assert!(is_closed_under_bracket(&basis));
        for x in &basis {
            assert!(act(x, &psi).unwrap().is_zero());
        }
    }

    #[test]
    fn derived_dims() {
        assert_eq!(derived_subalgebra_dim(&lie_basis(4)).unwrap(), 28);
        let cartan: Vec<LieElement> = (1..=4).map(|i| cartan_t(i, 4)).collect();
        assert_eq!(derived_subalgebra_dim(&cartan).unwrap(), 0);
        // a non-closed input errors
        let d = 3;
        let basis = lie_basis(d);
        assert_eq!(
            derived_subalgebra_dim(&[basis[1].clone()]),
            Ok(0),
            "single element is abelian"
        );
    }

    #[test]
    fn cartan_rank_tests() {
        // 8D pair
        let cv = CartanVector::from_words(4, &[set(&[]), set(&[1, 2, 3, 4])]);
        assert!(cartan_equalizable(&cv, None).unwrap());
        // repeated rows at d=3 are rank deficient
        let cv = CartanVector::from_words(3, &[set(&[]), set(&[1, 2]), set(&[1, 2])]);
        assert!(!cartan_equalizable(&cv, None).unwrap());
        // k = d + 2 can never reach full row rank
        let cv = CartanVector::from_words(
            4,
            &[
                set(&[]),
                set(&[1, 2]),
                set(&[1, 3]),
                set(&[1, 4]),
                set(&[2, 3]),
                set(&[2, 4]),
            ],
        );
        assert!(!cartan_equalizable(&cv, None).unwrap());
        // zero coefficients are rejected
        let cv = CartanVector::from_words(3, &[set(&[])]);
        assert_eq!(
            cartan_equalizable(&cv, Some(&[GaussianRational::zero()])),
            Err(LieError::ZeroCoefficient)
        );
    }

    #[test]
    fn stabilizer_invariant_under_relabeling() {
        // permuting coordinates and flipping constituent signs (a Cartan
        // group image) must not change the stabilizer dimension
        let d = 4;
        let psi = word_sum(d, &[&[], &[1, 2, 3, 4]]);
        let (dim0, _) = stabilizer_algebra(&psi).unwrap();
        // relabel 1<->3 (same words here), flip sign of the top word
        let mut flipped = Spinor::zero(d);
        flipped.add_term(set(&[]), GaussianRational::one());
        flipped.add_term(set(&[1, 2, 3, 4]), GaussianRational::from_int(-1));
        let (dim1, _) = stabilizer_algebra(&flipped).unwrap();
        assert_eq!(dim0, dim1);
        // scale the whole spinor
        let (dim2, _) = stabilizer_algebra(&psi.scale(&GaussianRational::from_parts(3, 7, 1, 2)))
            .unwrap();
        assert_eq!(dim0, dim2);
    }

    #[test]
    fn stabilizer_invariant_under_permutation_and_cartan_images() {
        use crate::testutil::Rng;
        let d = 5;
        let words: [&[usize]; 2] = [&[1, 2], &[3, 4]];
        let psi = word_sum(d, &words);
        let (dim0, _) = stabilizer_algebra(&psi).unwrap();
        let mut rng = Rng(0x7a5e);
        for _ in 0..5 {
            // random coordinate relabeling applied to the words
            let mut perm: [usize; 5] = [1, 2, 3, 4, 5];
            for i in (1..5usize).rev() {
                let j = rng.usize_below(i + 1);
                perm.swap(i, j);
            }
            let mut moved = Spinor::zero(d);
            for w in words {
                let mapped: alloc::vec::Vec<usize> = w.iter().map(|&i| perm[i - 1]).collect();
                moved = moved.add(&basis_pure(set(&mapped), d).unwrap()).unwrap();
            }
            let (dim1, _) = stabilizer_algebra(&moved).unwrap();
            assert_eq!(dim0, dim1);
            // random diagonal Cartan image: each term e^S picks up
            // prod_{i not in S} mu_i * prod_{i in S} mu_i^{-1}
            let mus: alloc::vec::Vec<GaussianRational> = (0..d)
                .map(|_| {
                    let c = crate::testutil::rand_scalar(&mut rng);
                    if c.is_zero() {
                        GaussianRational::from_int(2)
                    } else {
                        c
                    }
                })
                .collect();
            let mut image = Spinor::zero(d);
            for (s, c) in psi.terms() {
                let mut factor = GaussianRational::one();
                for i in 1..=d {
                    factor = if s.contains(i) {
                        &factor * &mus[i - 1].inv()
                    } else {
                        &factor * &mus[i - 1]
                    };
                }
                image.add_term(*s, &factor * c);
            }
            let (dim2, _) = stabilizer_algebra(&image).unwrap();
            assert_eq!(dim0, dim2);
        }
    }
}

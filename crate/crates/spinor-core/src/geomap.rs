//! The geometric map: spinor bilinears realised as exterior forms on C^{2d}.
//!
//! `B_k(psi, phi)` expands the k-fold product of `(a_i e^i + a_i^dag eb^i)`
//! over index assignments, applies each operator string to `phi` right to
//! left, pairs with `psi` through the invariant inner product, and attaches
//! the corresponding wedge of 1-form labels.
//!
//! Normalisation, fixed here once and for all: an index tuple with
//! multiplicities `m_1, m_2, ...` carries weight `prod_i m_i! / k!`. For
//! tuples of distinct indices this is the plain `1/k!`; tuples with repeated
//! indices (an index acted on by both its creation and its annihilation
//! operator) are averaged over their arrangements instead of summed. This is
//! the unique rational weighting under which the vacuum/top-form pair at
//! d = 4 produces `B_0 = 1`, `B_2 = omega`, `B_4 = omega^2/2`, and the
//! vacuum diagonal produces `B_4 = eb_1^eb_2^eb_3^eb_4` — the reference
//! values the whole test corpus is anchored to. The gamma-string evaluation
//! below uses the same weights keyed by underlying index, which keeps the two
//! routes exactly equal.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::One;

use crate::extform::{wedge, ExtForm, FormError, Label2d};
use crate::scalar::GaussianRational;
use crate::spinor::{inner, IndexSet, Spinor, SpinorError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeoMapError {
    Spinor(SpinorError),
    Form(FormError),
    DegreeOutOfRange { k: usize, dim2d: usize },
}

impl core::fmt::Display for GeoMapError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GeoMapError::Spinor(e) => write!(f, "{}", e),
            GeoMapError::Form(e) => write!(f, "{}", e),
            GeoMapError::DegreeOutOfRange { k, dim2d } => {
                write!(f, "form degree {} out of range 0..={}", k, dim2d)
            }
        }
    }
}

impl From<SpinorError> for GeoMapError {
    fn from(e: SpinorError) -> Self {
        GeoMapError::Spinor(e)
    }
}

impl From<FormError> for GeoMapError {
    fn from(e: FormError) -> Self {
        GeoMapError::Form(e)
    }
}

fn check_args(psi: &Spinor, phi: &Spinor, k: usize) -> Result<usize, GeoMapError> {
    if psi.half_dim() != phi.half_dim() {
        return Err(GeoMapError::Spinor(SpinorError::DimensionMismatch {
            left: psi.half_dim(),
            right: phi.half_dim(),
        }));
    }
    let d = psi.half_dim();
    if k > 2 * d {
        return Err(GeoMapError::DegreeOutOfRange { k, dim2d: 2 * d });
    }
    Ok(d)
}

/// Weight of an index tuple: prod (multiplicity!) / k!.
fn tuple_weight(tuple: &[usize], k: usize) -> BigRational {
    let mut mult = [0usize; 32];
    for &i in tuple {
        mult[i] += 1;
    }
    let mut num = BigRational::one();
    for &m in mult.iter() {
        for f in 2..=m {
            num *= BigRational::from_integer(f.into());
        }
    }
    let mut den = BigRational::one();
    for f in 2..=k {
        den *= BigRational::from_integer(f.into());
    }
    num / den
}

/// The geometric map B_k(psi, phi) in the null-basis expansion.
pub fn geometric_map(psi: &Spinor, phi: &Spinor, k: usize) -> Result<ExtForm, GeoMapError> {
    let d = check_args(psi, phi, k)?;
    let mut out = ExtForm::zero(2 * d);
    if k == 0 {
        let c = inner(psi, phi)?;
        out.add_term(&[], c);
        return Ok(out);
    }
    let mut tuple = alloc::vec![1usize; k];
    loop {
        let w = tuple_weight(&tuple, k);
        // all 2^k creation/annihilation choices for this index tuple
        for ops in 0u32..1 << k {
            // operators apply right to left
            let mut cur = phi.clone();
            let mut dead = false;
            for slot in (0..k).rev() {
                let i = tuple[slot];
                cur = if ops >> slot & 1 == 1 {
                    cur.create(i)?
                } else {
                    cur.annihilate(i)?
                };
                if cur.is_zero() {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            let val = inner(psi, &cur)?;
            if val.is_zero() {
                continue;
            }
            let labs: Vec<Label2d> = (0..k)
                .map(|slot| {
                    if ops >> slot & 1 == 1 {
                        Label2d::eb(tuple[slot])
                    } else {
                        Label2d::e(tuple[slot])
                    }
                })
                .collect();
            out.add_term(&labs, val.scale(&w));
        }
        // odometer over {1..d}^k
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if tuple[pos] < d {
                tuple[pos] += 1;
                for t in tuple.iter_mut().skip(pos + 1) {
                    *t = 1;
                }
                break;
            }
        }
    }
}

/// The same map evaluated through gamma strings: B_k = sum over b-tuples of
/// `<psi, Gamma_{b_1}...Gamma_{b_k} phi> E^{b_1}^...^E^{b_k}` with
/// `E^i = (e^i + eb^i)/2`, `E^{i+d} = (e^i - eb^i)/(2 sqrt(-1))`, weighted by
/// the multiplicities of the underlying indices b mod d. Exactly equal to
/// `geometric_map`; kept as an independent evaluation route for tests.
pub fn geometric_map_gamma(psi: &Spinor, phi: &Spinor, k: usize) -> Result<ExtForm, GeoMapError> {
    let d = check_args(psi, phi, k)?;
    let mut out = ExtForm::zero(2 * d);
    if k == 0 {
        let c = inner(psi, phi)?;
        out.add_term(&[], c);
        return Ok(out);
    }
    let half = GaussianRational::from_parts(1, 2, 0, 1);
    let neg_half_i = GaussianRational::from_parts(0, 1, -1, 2);
    let mut tuple = alloc::vec![1usize; k];
    loop {
        let proj: Vec<usize> = tuple.iter().map(|&b| if b > d { b - d } else { b }).collect();
        let w = tuple_weight(&proj, k);
        // expand each slot: Gamma_b (2 operator parts) x E^b (2 label parts)
        expand_gamma_slots(psi, phi, &tuple, 0, &phi.clone(), &mut out, d, &w, &half, &neg_half_i)?;
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if tuple[pos] < 2 * d {
                tuple[pos] += 1;
                for t in tuple.iter_mut().skip(pos + 1) {
                    *t = 1;
                }
                break;
            }
        }
    }
}

// Recursively applies the operator factors of Gamma_{b_slot}..Gamma_{b_k} to
// phi (right to left), then pairs and attaches the label expansion.
#[allow(clippy::too_many_arguments)]
fn expand_gamma_slots(
    psi: &Spinor,
    phi: &Spinor,
    tuple: &[usize],
    _depth: usize,
    _cur: &Spinor,
    out: &mut ExtForm,
    d: usize,
    w: &BigRational,
    half: &GaussianRational,
    neg_half_i: &GaussianRational,
) -> Result<(), GeoMapError> {
    let k = tuple.len();
    // operator strings: each slot contributes one of two ops with a scalar
    // Gamma_i = a_i + a_i^dag ; Gamma_{i+d} = i a_i - i a_i^dag
    // label parts: E^i = (e^i + eb^i)/2 ; E^{i+d} = -i/2 e^i + i/2 eb^i
    let i_unit = GaussianRational::i();
    for ops in 0u32..1 << k {
        // apply right to left
        let mut cur = phi.clone();
        let mut coeff = GaussianRational::one();
        let mut dead = false;
        for slot in (0..k).rev() {
            let b = tuple[slot];
            let idx = if b > d { b - d } else { b };
            let creation = ops >> slot & 1 == 1;
            if b > d {
                // i a_i - i a_i^dag
                coeff = if creation { &coeff * &(-&i_unit) } else { &coeff * &i_unit };
            }
            cur = if creation { cur.create(idx)? } else { cur.annihilate(idx)? };
            if cur.is_zero() {
                dead = true;
                break;
            }
        }
        if dead {
            continue;
        }
        let val = inner(psi, &cur)?;
        if val.is_zero() {
            continue;
        }
        let op_val = &val * &coeff;
        // expand the label choices independently of the operator choices
        for labels in 0u32..1 << k {
            let mut lcoeff = GaussianRational::one();
            let labs: Vec<Label2d> = (0..k)
                .map(|slot| {
                    let b = tuple[slot];
                    let idx = if b > d { b - d } else { b };
                    let barred = labels >> slot & 1 == 1;
                    if b <= d {
                        lcoeff = &lcoeff * half;
                    } else if barred {
                        lcoeff = &lcoeff * &(-neg_half_i);
                    } else {
                        lcoeff = &lcoeff * neg_half_i;
                    }
                    if barred {
                        Label2d::eb(idx)
                    } else {
                        Label2d::e(idx)
                    }
                })
                .collect();
            let total = (&op_val * &lcoeff).scale(w);
            out.add_term(&labs, total);
        }
    }
    Ok(())
}

/// The form the paper attaches to a sum of basis pure constituents: the
/// diagonal terms plus each unordered pair counted once,
/// `sum_a c_a^2 B_k(psi_a, psi_a) + sum_{a<b} c_a c_b B_k(psi_a, psi_b)`.
pub fn configuration_form(
    constituents: &[(Spinor, GaussianRational)],
    k: usize,
) -> Result<ExtForm, GeoMapError> {
    assert!(!constituents.is_empty(), "empty configuration");
    let d = constituents[0].0.half_dim();
    let mut out = ExtForm::zero(2 * d);
    for (a, (pa, ca)) in constituents.iter().enumerate() {
        for (pb, cb) in constituents.iter().skip(a).map(|x| (&x.0, &x.1)) {
            let c = ca * cb;
            if c.is_zero() {
                continue;
            }
            let g = geometric_map(pa, pb, k)?;
            out = out.add(&g.scale(&c))?;
        }
    }
    Ok(out)
}

/// The Cayley 4-form in 8D: eb_1^eb_2^eb_3^eb_4 + e_1^e_2^e_3^e_4 + omega^2/2.
pub fn cayley_form() -> ExtForm {
    let mut f = ExtForm::zero(8);
    f.add_term(
        &[Label2d::eb(1), Label2d::eb(2), Label2d::eb(3), Label2d::eb(4)],
        GaussianRational::one(),
    );
    f.add_term(
        &[Label2d::e(1), Label2d::e(2), Label2d::e(3), Label2d::e(4)],
        GaussianRational::one(),
    );
    let om = crate::extform::omega(4, &[1, 2, 3, 4]);
    let sq = wedge(&om, &om).expect("same dimension");
    f.add(&sq.scale(&GaussianRational::from_parts(1, 2, 0, 1)))
        .expect("same dimension")
}

/// Convenience: the basis pure spinors and coefficients of a word list.
pub fn words_to_constituents(
    d: usize,
    words: &[IndexSet],
    coeffs: Option<&[GaussianRational]>,
) -> Result<Vec<(Spinor, GaussianRational)>, SpinorError> {
    let mut out = Vec::with_capacity(words.len());
    for (n, w) in words.iter().enumerate() {
        let c = coeffs
            .map(|cs| cs[n].clone())
            .unwrap_or_else(GaussianRational::one);
        out.push((crate::spinor::basis_pure(*w, d)?, c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extform::omega;
    use crate::spinor::basis_pure;

    fn set(idx: &[usize]) -> IndexSet {
        IndexSet::from_indices(idx)
    }

    fn pure(d: usize, idx: &[usize]) -> Spinor {
        basis_pure(set(idx), d).unwrap()
    }

    #[test]
    fn vacuum_diagonal_b4() {
        let d = 4;
        let vac = Spinor::vacuum(d);
        let b4 = geometric_map(&vac, &vac, 4).unwrap();
        let mut expect = ExtForm::zero(8);
        expect.add_term(
            &[Label2d::eb(1), Label2d::eb(2), Label2d::eb(3), Label2d::eb(4)],
            GaussianRational::one(),
        );
        assert_eq!(b4, expect);
        // B_k vanishes off the top degree for a pure spinor
        for k in [0usize, 1, 2, 3] {
            assert!(geometric_map(&vac, &vac, k).unwrap().is_zero(), "k={}", k);
        }
    }

    #[test]
    fn complementary_pair_tower() {
        let d = 4;
        let vac = Spinor::vacuum(d);
        let top = pure(d, &[1, 2, 3, 4]);
        let b0 = geometric_map(&vac, &top, 0).unwrap();
        assert_eq!(b0.coeff(&[]), GaussianRational::one());
        let b2 = geometric_map(&vac, &top, 2).unwrap();
        assert_eq!(b2, omega(4, &[1, 2, 3, 4]));
        let b4 = geometric_map(&vac, &top, 4).unwrap();
        let om = omega(4, &[1, 2, 3, 4]);
        let expect = wedge(&om, &om)
            .unwrap()
            .scale(&GaussianRational::from_parts(1, 2, 0, 1));
        assert_eq!(b4, expect);
    }

    #[test]
    fn cayley_from_configuration() {
        let d = 4;
        let cons = words_to_constituents(d, &[set(&[]), set(&[1, 2, 3, 4])], None).unwrap();
        let got = configuration_form(&cons, 4).unwrap();
        assert_eq!(got, cayley_form());
        assert_eq!(cayley_form().num_terms(), 8);
    }

    #[test]
    fn cayley_square_tops() {
        let c = cayley_form();
        let sq = wedge(&c, &c).unwrap();
        assert!(!sq.is_zero());
        assert_eq!(sq.degrees(), alloc::vec![8]);
        assert_eq!(sq.num_terms(), 1);
    }

    #[test]
    fn twelve_d_triple_display() {
        // representative signs (-1, 1, 1) reproduce the displayed three-term form
        let d = 6;
        let words = [set(&[]), set(&[1, 2, 3, 4]), set(&[3, 4, 5, 6])];
        let coeffs = [
            GaussianRational::from_int(-1),
            GaussianRational::one(),
            GaussianRational::one(),
        ];
        let cons = words_to_constituents(d, &words, Some(&coeffs)).unwrap();
        let got = configuration_form(&cons, 2).unwrap();
        let mut expect = ExtForm::zero(12);
        expect.add_term(&[Label2d::eb(5), Label2d::eb(6)], GaussianRational::one());
        expect.add_term(&[Label2d::eb(1), Label2d::eb(2)], GaussianRational::one());
        expect.add_term(&[Label2d::e(3), Label2d::e(4)], GaussianRational::one());
        assert_eq!(got, expect);
    }

    #[test]
    fn gamma_route_matches_null_route() {
        let d = 3;
        let mut rng = crate::testutil::Rng(0x9137);
        for _ in 0..4 {
            let psi = crate::testutil::rand_spinor(&mut rng, d);
            let phi = crate::testutil::rand_spinor(&mut rng, d);
            for k in 0..=3usize {
                let a = geometric_map(&psi, &phi, k).unwrap();
                let b = geometric_map_gamma(&psi, &phi, k).unwrap();
                assert_eq!(a, b, "k={}", k);
            }
        }
        // and on the 8D pair at the degree that matters
        let vac = Spinor::vacuum(4);
        let top = pure(4, &[1, 2, 3, 4]);
        for k in 0..=4usize {
            assert_eq!(
                geometric_map(&vac, &top, k).unwrap(),
                geometric_map_gamma(&vac, &top, k).unwrap(),
                "k={}",
                k
            );
        }
    }

    #[test]
    fn bilinearity() {
        let d = 3;
        let mut rng = crate::testutil::Rng(0x77aa);
        let p1 = crate::testutil::rand_spinor(&mut rng, d);
        let p2 = crate::testutil::rand_spinor(&mut rng, d);
        let q = crate::testutil::rand_spinor(&mut rng, d);
        let c = GaussianRational::from_parts(2, 3, -1, 1);
        for k in 0..=2usize {
            let lhs = geometric_map(&p1.scale(&c).add(&p2).unwrap(), &q, k).unwrap();
            let rhs = geometric_map(&p1, &q, k)
                .unwrap()
                .scale(&c)
                .add(&geometric_map(&p2, &q, k).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs, "left slot k={}", k);
            let lhs = geometric_map(&q, &p1.scale(&c).add(&p2).unwrap(), k).unwrap();
            let rhs = geometric_map(&q, &p1, k)
                .unwrap()
                .scale(&c)
                .add(&geometric_map(&q, &p2, k).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs, "right slot k={}", k);
        }
    }

    #[test]
    fn lowest_degree_is_shared_nulls() {
        // two basis pure spinors meeting in m dimensions: B_k = 0 below m,
        // B_m decomposable on the shared directions
        let d = 4;
        let p = pure(d, &[]);
        let q = pure(d, &[1, 2]); // shared: a_3, a_4 -> expect eb_3 ^ eb_4 at k = 2
        assert!(geometric_map(&p, &q, 0).unwrap().is_zero());
        assert!(geometric_map(&p, &q, 1).unwrap().is_zero());
        let b2 = geometric_map(&p, &q, 2).unwrap();
        assert_eq!(b2.num_terms(), 1);
        let (labs, _) = b2.terms().next().unwrap();
        assert_eq!(labs.as_slice(), &[Label2d::eb(3), Label2d::eb(4)]);
    }

    #[test]
    fn single_pure_diagonal_decomposable() {
        // B_d(psi, psi) for e^{12} at d=4: product of its annihilator directions
        let d = 4;
        let psi = pure(d, &[1, 2]);
        for k in [0usize, 1, 2, 3] {
            assert!(geometric_map(&psi, &psi, k).unwrap().is_zero(), "k={}", k);
        }
        let b4 = geometric_map(&psi, &psi, 4).unwrap();
        assert_eq!(b4.num_terms(), 1);
        let (labs, _) = b4.terms().next().unwrap();
        // annihilator of e^{12} is span{a_1^dag, a_2^dag, a_3, a_4}
        assert_eq!(
            labs.as_slice(),
            &[Label2d::e(1), Label2d::e(2), Label2d::eb(3), Label2d::eb(4)]
        );
    }
}

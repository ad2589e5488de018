//! The twelve-dimensional impurity-four reduction: a new canonically
//! normalised null frame in which the 2-form of the square configuration
//! becomes proportional to `sum_i bbar_i ^ b_i`, exhibiting the spinor as a
//! member of the impurity-two orbit.
//!
//! For the square with coefficients (c_A, c_B, c_C, c_D) the computed 2-form
//! is, block by block, `q eb_x ^ eb_y + p e_x ^ e_y` with
//! q = -c_A c_*, p = c_* c_*; the frame change uses one square root,
//! lambda = sqrt(c_A c_B c_C c_D), taken in Q(i) with the canonical choice
//! (re > 0, or re = 0 and im >= 0). Coefficient patterns whose lambda falls
//! outside Q(i) are reported as errors rather than extending scalars.

use alloc::vec::Vec;

use crate::comb::{canonical_form, Codeword, Configuration};
use crate::extform::{one_form_metric, wedge, ExtForm, Label2d};
use crate::geomap::{configuration_form, words_to_constituents, GeoMapError};
use crate::scalar::GaussianRational;

/// The paper's square: vacuum, {1,2,3,4}, {3,4,5,6}, {1,2,5,6}.
pub fn square_words() -> Vec<Codeword> {
    alloc::vec![
        Codeword(0b000000),
        Codeword(0b001111),
        Codeword(0b111100),
        Codeword(0b110011),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReduceError {
    NotTheSquare,
    ZeroCoefficient,
    RootOutsideField { lambda_sq: GaussianRational },
    GeoMap(GeoMapError),
}

impl core::fmt::Display for ReduceError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ReduceError::NotTheSquare => {
                write!(f, "configuration is not equivalent to the 12D k=4 square")
            }
            ReduceError::ZeroCoefficient => {
                write!(f, "a zero coefficient degenerates the square to k=3")
            }
            ReduceError::RootOutsideField { lambda_sq } => write!(
                f,
                "lambda^2 = {} has no square root in Q(i); scalar extension not supported",
                lambda_sq.display()
            ),
            ReduceError::GeoMap(e) => write!(f, "{}", e),
        }
    }
}

impl From<GeoMapError> for ReduceError {
    fn from(e: GeoMapError) -> Self {
        ReduceError::GeoMap(e)
    }
}

impl From<crate::spinor::SpinorError> for ReduceError {
    fn from(e: crate::spinor::SpinorError) -> Self {
        ReduceError::GeoMap(GeoMapError::Spinor(e))
    }
}

/// The new null frame and the proportionality constant.
#[derive(Clone, Debug)]
pub struct ReducedFrame {
    /// b_1..b_6 as 1-forms in the original labels.
    pub b: Vec<ExtForm>,
    /// bbar_1..bbar_6.
    pub bbar: Vec<ExtForm>,
    /// B_2(config) = lambda * sum_i bbar_i ^ b_i.
    pub lambda: GaussianRational,
    /// A reference impurity-two spinor in the same orbit
    /// (vacuum + top word at d = 6).
    pub impurity_two: crate::spinor::Spinor,
}

/// Runs the reduction for a configuration equivalent to the square.
///
/// Builds the frame, verifies `g(bbar_i, b_j) = delta_ij` and the
/// proportionality `B_2 = lambda * sum_i bbar_i ^ b_i` exactly, and returns
/// the frame.
pub fn reduce_12d_k4(config: &Configuration) -> Result<ReducedFrame, ReduceError> {
    let d = 6usize;
    if config.half_dim != d || config.k() != 4 {
        return Err(ReduceError::NotTheSquare);
    }
    let square = Configuration::new(d, square_words(), None).expect("static words");
    if canonical_form(config).canonical_words != canonical_form(&square).canonical_words {
        return Err(ReduceError::NotTheSquare);
    }
    if let Some(cs) = &config.coeffs {
        if cs.iter().any(|c| c.is_zero()) {
            return Err(ReduceError::ZeroCoefficient);
        }
    }
    let words: Vec<crate::spinor::IndexSet> =
        config.words.iter().map(|w| w.as_index_set()).collect();
    let coeffs: Vec<GaussianRational> = (0..4).map(|a| config.coeff(a)).collect();
    let cons = words_to_constituents(d, &words, Some(&coeffs))?;
    let b2 = configuration_form(&cons, 2)?;

    // lambda^2 = product of all four coefficients (for every block the
    // computed 2-form satisfies -q*p = c_A c_B c_C c_D)
    let mut lambda_sq = GaussianRational::one();
    for c in &coeffs {
        lambda_sq = &lambda_sq * c;
    }
    let lambda = lambda_sq
        .sqrt()
        .ok_or(ReduceError::RootOutsideField { lambda_sq })?;

    // blocks pair label indices (1,2), (3,4), (5,6); read q and p off B_2
    let mut b = Vec::with_capacity(6);
    let mut bbar = Vec::with_capacity(6);
    let half = GaussianRational::from_parts(1, 2, 0, 1);
    for block in 0..3usize {
        let x = 2 * block + 1;
        let y = 2 * block + 2;
        let q = coeff_of(&b2, &[Label2d::eb(x), Label2d::eb(y)]);
        let p = coeff_of(&b2, &[Label2d::e(x), Label2d::e(y)]);
        if q.is_zero() || p.is_zero() {
            return Err(ReduceError::NotTheSquare);
        }
        // bbar_x = alpha eb_x + beta e_y, b_x = gamma eb_y + delta e_x,
        // bbar_y = alpha eb_y - beta e_x, b_y = delta e_y - gamma eb_x
        // with beta = 1, alpha = q / lambda, gamma = 1/2, delta = 1/(2 alpha).
        let alpha = &q / &lambda;
        let beta = GaussianRational::one();
        let gamma = half.clone();
        let delta = &half / &alpha;
        let mut bbar_x = ExtForm::zero(2 * d);
        bbar_x.add_term(&[Label2d::eb(x)], alpha.clone());
        bbar_x.add_term(&[Label2d::e(y)], beta.clone());
        let mut b_x = ExtForm::zero(2 * d);
        b_x.add_term(&[Label2d::eb(y)], gamma.clone());
        b_x.add_term(&[Label2d::e(x)], delta.clone());
        let mut bbar_y = ExtForm::zero(2 * d);
        bbar_y.add_term(&[Label2d::eb(y)], alpha.clone());
        bbar_y.add_term(&[Label2d::e(x)], -&beta);
        let mut b_y = ExtForm::zero(2 * d);
        b_y.add_term(&[Label2d::e(y)], delta.clone());
        b_y.add_term(&[Label2d::eb(x)], -&gamma);
        bbar.push(bbar_x);
        bbar.push(bbar_y);
        b.push(b_x);
        b.push(b_y);
    }

    // canonical normalisation: g(bbar_i, b_j) = delta_ij, all else null
    for i in 0..6 {
        for j in 0..6 {
            let expect = if i == j {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            };
            debug_assert_eq!(one_form_metric(&bbar[i], &b[j]), expect);
            if one_form_metric(&bbar[i], &b[j]) != expect {
                return Err(ReduceError::NotTheSquare);
            }
            if !one_form_metric(&bbar[i], &bbar[j]).is_zero()
                || !one_form_metric(&b[i], &b[j]).is_zero()
            {
                return Err(ReduceError::NotTheSquare);
            }
        }
    }

    // the promised proportionality, verified exactly
    let mut sum = ExtForm::zero(2 * d);
    for i in 0..6 {
        sum = sum.add(&wedge(&bbar[i], &b[i]).expect("same dimension")).expect("same dimension");
    }
    let target = sum.scale(&lambda);
    if b2 != target {
        return Err(ReduceError::NotTheSquare);
    }

    let impurity_two = {
        use crate::spinor::{basis_pure, IndexSet};
        let vac = basis_pure(IndexSet::empty(), d).expect("even");
        let top = basis_pure(IndexSet::from_indices(&[1, 2, 3, 4, 5, 6]), d).expect("even");
        vac.add(&top).expect("same dimension")
    };

    Ok(ReducedFrame {
        b,
        bbar,
        lambda,
        impurity_two,
    })
}

fn coeff_of(f: &ExtForm, labs: &[Label2d]) -> GaussianRational {
    // normalise the label order through a probe form
    let mut probe = ExtForm::zero(f.dim2d());
    probe.add_term(labs, GaussianRational::one());
    let (key, sign) = probe
        .terms()
        .next()
        .map(|(k, c)| (k.clone(), c.clone()))
        .expect("nonzero probe");
    &f.coeff(&key) / &sign
}

//! Exterior algebra on C^{2d} in the null 1-form basis {e_i, ebar_i}.
//!
//! The fixed total order is unbarred 1..d then barred 1..d; all stored terms
//! are strictly sorted under it and signs are normalised at insertion.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::GaussianRational;

/// A null 1-form label: e_i (unbarred) or ebar_i (barred), 1-based index.
/// Field order gives the total order used everywhere: unbarred before barred.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label2d {
    pub barred: bool,
    pub index: usize,
}

impl Label2d {
    pub fn e(index: usize) -> Self {
        Label2d { barred: false, index }
    }

    pub fn eb(index: usize) -> Self {
        Label2d { barred: true, index }
    }
}

impl fmt::Debug for Label2d {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "eb{}", self.index)
        } else {
            write!(f, "e{}", self.index)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormError {
    DimensionMismatch { left: usize, right: usize },
    LabelOutOfRange { index: usize, half_dim: usize },
}

impl fmt::Display for FormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormError::DimensionMismatch { left, right } => {
                write!(f, "form dimension mismatch: {} vs {}", left, right)
            }
            FormError::LabelOutOfRange { index, half_dim } => {
                write!(f, "label index {} out of range 1..={}", index, half_dim)
            }
        }
    }
}

/// A sparse exterior form on C^{2d}, exact coefficients, mixed degree allowed.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtForm {
    dim2d: usize,
    terms: BTreeMap<Vec<Label2d>, GaussianRational>,
}

impl ExtForm {
    pub fn zero(dim2d: usize) -> Self {
        assert!(dim2d % 2 == 0, "dim2d must be even");
        ExtForm {
            dim2d,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(dim2d: usize, c: GaussianRational) -> Self {
        let mut f = ExtForm::zero(dim2d);
        f.add_term(&[], c);
        f
    }

    /// The 1-form for a single label.
    pub fn one_form(dim2d: usize, lab: Label2d) -> Self {
        let mut f = ExtForm::zero(dim2d);
        f.add_term(&[lab], GaussianRational::one());
        f
    }

    pub fn dim2d(&self) -> usize {
        self.dim2d
    }

    pub fn half_dim(&self) -> usize {
        self.dim2d / 2
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Label2d>, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, labs: &[Label2d]) -> GaussianRational {
        self.terms
            .get(labs)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Restriction to homogeneous degree k.
    pub fn degree_part(&self, k: usize) -> ExtForm {
        let mut out = ExtForm::zero(self.dim2d);
        for (labs, c) in self.terms() {
            if labs.len() == k {
                out.terms.insert(labs.clone(), c.clone());
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|l| l.len()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Inserts a term given in arbitrary label order, normalising the sign.
    /// Repeated labels vanish.
    pub fn add_term(&mut self, labs: &[Label2d], c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let mut ls: Vec<Label2d> = labs.to_vec();
        for l in &ls {
            assert!(
                l.index >= 1 && l.index <= self.half_dim(),
                "label index {} out of range",
                l.index
            );
        }
        // insertion sort counting transpositions
        let mut sign = false;
        for i in 1..ls.len() {
            let mut j = i;
            while j > 0 && ls[j - 1] > ls[j] {
                ls.swap(j - 1, j);
                sign = !sign;
                j -= 1;
            }
        }
        for w in ls.windows(2) {
            if w[0] == w[1] {
                return;
            }
        }
        let v = if sign { -c } else { c };
        let entry = self
            .terms
            .entry(ls.clone())
            .or_insert_with(GaussianRational::zero);
        *entry += &v;
        if entry.is_zero() {
            self.terms.remove(&ls);
        }
    }

    pub fn add(&self, other: &ExtForm) -> Result<ExtForm, FormError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (labs, c) in other.terms() {
            let entry = out
                .terms
                .entry(labs.clone())
                .or_insert_with(GaussianRational::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(labs);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> ExtForm {
        let mut out = ExtForm::zero(self.dim2d);
        if c.is_zero() {
            return out;
        }
        for (labs, v) in self.terms() {
            out.terms.insert(labs.clone(), v * c);
        }
        out
    }

    pub fn neg(&self) -> ExtForm {
        self.scale(&(-GaussianRational::one()))
    }

    pub fn sub(&self, other: &ExtForm) -> Result<ExtForm, FormError> {
        self.add(&other.neg())
    }

    fn check_dim(&self, other: &ExtForm) -> Result<(), FormError> {
        if self.dim2d != other.dim2d {
            return Err(FormError::DimensionMismatch {
                left: self.dim2d,
                right: other.dim2d,
            });
        }
        Ok(())
    }

    /// If `self == c * other` for a single nonzero scalar c, returns c.
    pub fn proportionality(&self, other: &ExtForm) -> Option<GaussianRational> {
        if self.dim2d != other.dim2d || self.terms.len() != other.terms.len() {
            return None;
        }
        let mut ratio: Option<GaussianRational> = None;
        for (labs, c) in self.terms() {
            let oc = other.terms.get(labs)?;
            let r = c / oc;
            match &ratio {
                None => ratio = Some(r),
                Some(prev) if *prev == r => {}
                _ => return None,
            }
        }
        ratio
    }

    /// Pretty form matching the paper notation: `eb` renders a barred label.
    pub fn display(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (n, (labs, c)) in self.terms().enumerate() {
            if n > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "({})", c.display());
            if labs.is_empty() {
                s.push('1');
            } else {
                for (m, l) in labs.iter().enumerate() {
                    if m > 0 {
                        s.push('^');
                    }
                    let _ = write!(s, "{:?}", l);
                }
            }
        }
        s
    }
}

impl fmt::Debug for ExtForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// Graded-commutative exterior product with exact sign bookkeeping.
pub fn wedge(a: &ExtForm, b: &ExtForm) -> Result<ExtForm, FormError> {
    if a.dim2d() != b.dim2d() {
        return Err(FormError::DimensionMismatch {
            left: a.dim2d(),
            right: b.dim2d(),
        });
    }
    let mut out = ExtForm::zero(a.dim2d());
    for (la, ca) in a.terms() {
        for (lb, cb) in b.terms() {
            let mut labs = la.clone();
            labs.extend_from_slice(lb);
            out.add_term(&labs, ca * cb);
        }
    }
    Ok(out)
}

/// The metric on null 1-form labels: g(e_i, eb_j) = delta_ij, e and eb null.
pub fn label_metric(a: Label2d, b: Label2d) -> GaussianRational {
    if a.index == b.index && a.barred != b.barred {
        GaussianRational::one()
    } else {
        GaussianRational::zero()
    }
}

/// Metric pairing of two 1-forms (degree-1 ExtForms).
pub fn one_form_metric(a: &ExtForm, b: &ExtForm) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (la, ca) in a.terms() {
        if la.len() != 1 {
            continue;
        }
        for (lb, cb) in b.terms() {
            if lb.len() != 1 {
                continue;
            }
            let g = label_metric(la[0], lb[0]);
            if !g.is_zero() {
                acc += &(&(ca * cb) * &g);
            }
        }
    }
    acc
}

/// omega = sum_i eb_i ^ e_i over the given indices.
pub fn omega(half_dim: usize, indices: &[usize]) -> ExtForm {
    let mut f = ExtForm::zero(2 * half_dim);
    for &i in indices {
        f.add_term(&[Label2d::eb(i), Label2d::e(i)], GaussianRational::one());
    }
    f
}

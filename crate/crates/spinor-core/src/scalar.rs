//! Exact Gaussian-rational arithmetic: the coefficient field for everything here.
//!
//! Scalars are `re + im*sqrt(-1)` with both parts arbitrary-precision rationals.
//! `num_rational::BigRational` keeps fractions reduced with positive denominators,
//! which gives us exact equality for free.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of the Gaussian rationals Q(i).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit sqrt(-1).
    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// re_num/re_den + (im_num/im_den) i. Panics on zero denominators.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussianRational {
            re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|^2 = z * conj(z), a rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        GaussianRational {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    /// Exact square root in Q(i), if one exists. The root returned is the one
    /// with re > 0, or re = 0 and im >= 0.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // For w = u + vi with w^2 = x + yi: u^2 - v^2 = x, 2uv = y, and
        // u^2 + v^2 = sqrt(x^2 + y^2) must be rational.
        let n = rational_sqrt(&self.norm_sq())?;
        let two = BigRational::from_integer(BigInt::from(2));
        let u2 = (&n + &self.re) / &two;
        let v2 = (&n - &self.re) / &two;
        let u = rational_sqrt(&u2)?;
        let mut v = rational_sqrt(&v2)?;
        if self.im.is_negative() {
            v = -v;
        }
        // final check handles the u=0 / v=0 edge cases uniformly
        let cand = GaussianRational { re: u, im: v };
        if &(&cand * &cand) == self {
            Some(canonical_root(cand))
        } else {
            None
        }
    }

    /// Render as a compact human-readable string, e.g. `1`, `-1/2`, `i`, `2-3/2i`.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        if !self.re.is_zero() {
            s.push_str(&self.re.to_string());
        }
        if !self.im.is_zero() {
            if self.im.is_one() {
                if s.is_empty() {
                    s.push('i');
                } else {
                    s.push_str("+i");
                }
            } else if (-self.im.clone()).is_one() {
                s.push_str("-i");
            } else {
                if !s.is_empty() && !self.im.is_negative() {
                    s.push('+');
                }
                s.push_str(&self.im.to_string());
                s.push('i');
            }
        }
        s
    }
}

fn canonical_root(w: GaussianRational) -> GaussianRational {
    let flip = w.re.is_negative() || (w.re.is_zero() && w.im.is_negative());
    if flip {
        -w
    } else {
        w
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv()
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

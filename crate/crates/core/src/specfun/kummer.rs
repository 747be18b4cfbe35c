//! Confluent hypergeometric function M(a, b, y) (Kummer's function).

use crate::error::{Error, Result};
use crate::specfun::gamma::log_gamma;

/// Parameters of M(a, b, y). `b` may not be zero or a negative integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerParams {
    pub a: f64,
    pub b: f64,
    pub y: f64,
}

impl KummerParams {
    pub fn new(a: f64, b: f64, y: f64) -> Result<Self> {
        let p = KummerParams { a, b, y };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        if !(self.a.is_finite() && self.b.is_finite() && self.y.is_finite()) {
            return Err(Error::InvalidParameter(format!("non-finite Kummer parameters {self:?}")));
        }
        if self.b <= 0.0 && self.b == self.b.floor() {
            return Err(Error::InvalidParameter(format!(
                "Kummer b = {} is zero or a negative integer",
                self.b
            )));
        }
        if self.y < 0.0 {
            return Err(Error::InvalidParameter(format!("Kummer argument y = {} < 0", self.y)));
        }
        Ok(())
    }

    /// `Some(n)` when a = -n, in which case M is a polynomial of degree n.
    pub fn terminating_degree(&self) -> Option<usize> {
        (self.a <= 0.0 && self.a == self.a.floor()).then(|| (-self.a) as usize)
    }
}

const RELATIVE_TOLERANCE: f64 = 1e-16;
const CONSECUTIVE_SMALL: usize = 3;
const MAX_TERMS: usize = 10_000;

/// Sums the power series and reports the number of terms added.
pub(crate) fn kummer_series(p: &KummerParams) -> Result<(f64, usize)> {
    p.validate()?;
    let KummerParams { a, b, y } = *p;
    let mut term = 1.0;
    let mut sum = 1.0;

    if let Some(n) = p.terminating_degree() {
        // The polynomial alternates in sign; near its roots the terms exceed the
        // result by many orders of magnitude, so sum in double-double.
        let mut term = DoubleDouble::from(1.0);
        let mut sum = DoubleDouble::from(1.0);
        for j in 0..n {
            let j = j as f64;
            term = term.mul_f64(a + j).mul_f64(y) / (DoubleDouble::sum(b, j) * (j + 1.0));
            sum = sum + term;
        }
        return Ok((sum.to_f64(), n + 1));
    }

    let mut small = 0;
    for j in 0..MAX_TERMS {
        let jf = j as f64;
        term *= (a + jf) / (b + jf) * y / (jf + 1.0);
        sum += term;
        if term.abs() < RELATIVE_TOLERANCE * sum.abs() {
            small += 1;
            if small == CONSECUTIVE_SMALL {
                return Ok((sum, j + 2));
            }
        } else {
            small = 0;
        }
    }
    Err(Error::SeriesNonConvergence {
        a,
        b,
        y,
        iterations: MAX_TERMS,
    })
}

/// Unevaluated sum hi + lo with |lo| ≤ ulp(hi)/2.
#[derive(Debug, Clone, Copy)]
struct DoubleDouble {
    hi: f64,
    lo: f64,
}

impl DoubleDouble {
    fn from(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        DoubleDouble { hi: s, lo: err }
    }

    fn quick_two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        DoubleDouble { hi: s, lo: b - (s - a) }
    }

    /// Exact a + b.
    fn sum(a: f64, b: f64) -> Self {
        Self::two_sum(a, b)
    }

    fn mul_f64(self, b: f64) -> Self {
        let p = self.hi * b;
        let err = self.hi.mul_add(b, -p);
        Self::quick_two_sum(p, err + self.lo * b)
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

impl std::ops::Add for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = Self::two_sum(self.hi, rhs.hi);
        let t = Self::two_sum(self.lo, rhs.lo);
        let s = Self::quick_two_sum(s.hi, s.lo + t.hi);
        Self::quick_two_sum(s.hi, s.lo + t.lo)
    }
}

impl std::ops::Mul<f64> for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.mul_f64(rhs)
    }
}

impl std::ops::Div for DoubleDouble {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        // one Newton correction of the leading quotient
        let q1 = self.hi / rhs.hi;
        let r = self + DoubleDouble { hi: -rhs.hi, lo: -rhs.lo }.mul_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r + DoubleDouble { hi: -rhs.hi, lo: -rhs.lo }.mul_f64(q2);
        let q3 = r.hi / rhs.hi;
        Self::quick_two_sum(q1, q2) + DoubleDouble::from(q3)
    }
}

/// M(a, b, y) by direct summation of its power series.
pub fn kummer_m(p: KummerParams) -> Result<f64> {
    kummer_series(&p).map(|(v, _)| v)
}

/// The exponentially growing term Γ(b)/Γ(a)·e^y·y^(a-b) of the large-y expansion.
///
/// This term is absent when a is zero or a negative integer, which is reported
/// as a pole of Γ(a).
pub fn kummer_asymptotic_dominant(p: KummerParams) -> Result<f64> {
    p.validate()?;
    let KummerParams { a, b, y } = p;
    let ga = log_gamma(a)?;
    let gb = log_gamma(b)?;
    if y == 0.0 {
        return Err(Error::InvalidParameter("asymptotic form needs y > 0".into()));
    }
    let ln = gb.ln_abs - ga.ln_abs + y + (a - b) * y.ln();
    Ok(ga.sign * gb.sign * ln.exp())
}

//! Laurent polynomials in one variable `t` with arbitrary-precision integer
//! coefficients.
//!
//! This is the codomain for every generating polynomial in the crate:
//! graded dimension series, flag multiplicity polynomials, and Gaussian
//! binomials.  Supported exponents may be negative, coefficients are exact
//! `BigInt`s, and no zero coefficient is ever stored.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    /// The single term `c * t^e`; the zero polynomial when `c = 0`.
    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        let mut poly = LaurentPoly::default();
        poly.add_term(e, c.into());
        poly
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, impl Into<BigInt>)>) -> Self {
        let mut poly = LaurentPoly::default();
        for (e, c) in terms {
            poly.add_term(e, c.into());
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^e` (zero when absent).
    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Adds `c * t^e` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplication by `t^k`.
    pub fn shifted(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Evaluation at `t = 1`, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Exact division: returns `Some(q)` with `self = q * other` when the
    /// quotient exists over the integers, `None` otherwise.
    ///
    /// `t` is a unit here, so both operands are first normalized to have
    /// lowest exponent 0 and the shift difference is restored at the end.
    pub fn div_exact(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let shift = self.min_exp().unwrap() - other.min_exp().unwrap();
        let mut rem = self.shifted(-self.min_exp().unwrap());
        let den = other.shifted(-other.min_exp().unwrap());
        let den_deg = den.max_exp().unwrap();
        let den_lead = den.coeff(den_deg);
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let rem_deg = rem.max_exp().unwrap();
            if rem_deg < den_deg {
                return None;
            }
            let rem_lead = rem.coeff(rem_deg);
            let (q, r) = num_integer::Integer::div_rem(&rem_lead, &den_lead);
            if !r.is_zero() {
                return None;
            }
            let e = rem_deg - den_deg;
            quot.add_term(e, q.clone());
            for (de, dc) in den.terms() {
                rem.add_term(e + de, -(&q * dc));
            }
        }
        Some(quot.shifted(shift))
    }

    /// Stable JSON form: an object mapping exponent (as a decimal string) to
    /// coefficient (as a decimal string, exact at any magnitude).
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in self.terms() {
            map.insert(e.to_string(), serde_json::Value::String(c.to_string()));
        }
        serde_json::Value::Object(map)
    }
}

impl std::fmt::Display for LaurentPoly {
    /// Human form in ascending exponents, e.g. `6 + 4t + 6t^2`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_part = if mag.is_one() && e != 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var_part = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{}", e),
            };
            write!(f, "{}{}", coeff_part, var_part)?;
        }
        Ok(())
    }
}

//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Polynomial in one variable (printed as `λ`), coefficients in ascending
/// degree order. Trailing zeros are always trimmed, so the zero polynomial
/// has no coefficients and equality is exact coefficient-wise equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

/// Term order used when rendering a polynomial as text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TermOrder {
    #[default]
    Descending,
    Ascending,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The indeterminate `λ`.
    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·λ^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `λ - root`.
    pub fn linear_factor(root: BigRational) -> Self {
        Self::from_coeffs(vec![-root, BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// Integer coefficients in ascending order.
    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Coefficients as `(numerator, denominator)` pairs in ascending order.
    pub fn from_fracs<I: IntoIterator<Item = (i64, i64)>>(coeffs: I) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(|(p, q)| frac(p, q)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `λ^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `λ^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RatPoly { coeffs }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Renders with `λ` as the variable, e.g. `λ^4 - 5/4·λ^2 + 1/4`.
    pub fn to_text(&self, order: TermOrder) -> String {
        let mut terms: Vec<(usize, &BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if terms.is_empty() {
            return "0".to_string();
        }
        if order == TermOrder::Descending {
            terms.reverse();
        }
        let mut out = String::new();
        for (i, (k, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let magnitude = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "λ".to_string(),
                _ => format!("λ^{k}"),
            };
            if k == 0 {
                out.push_str(&rational_to_string(&magnitude));
            } else if magnitude.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&rational_to_string(&magnitude));
                out.push('·');
                out.push_str(&var);
            }
        }
        out
    }

    /// `{"degree": d, "coeffs_ascending": ["p/q", ...]}`; the zero
    /// polynomial has `"degree": null` and no coefficients.
    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.degree(),
            "coeffs_ascending": self.coeffs.iter().map(rational_to_string).collect::<Vec<_>>(),
        })
    }

    /// Decodes the object produced by [`RatPoly::to_json`].
    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |message: &str| Error::Parse {
            line: 0,
            message: message.to_string(),
        };
        let obj = value.as_object().ok_or_else(|| bad("expected an object"))?;
        let coeffs = obj
            .get("coeffs_ascending")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"coeffs_ascending\" array"))?;
        let coeffs = coeffs
            .iter()
            .map(|c| {
                c.as_str()
                    .ok_or_else(|| bad("coefficients must be strings"))
                    .and_then(parse_rational)
            })
            .collect::<Result<Vec<_>>>()?;
        let poly = RatPoly::from_coeffs(coeffs);
        match obj.get("degree") {
            Some(Value::Null) if poly.is_zero() => {}
            Some(d) if d.as_u64().is_some() && d.as_u64() == poly.degree().map(|d| d as u64) => {}
            Some(_) => return Err(bad("\"degree\" disagrees with the coefficients")),
            None => return Err(bad("missing \"degree\"")),
        }
        Ok(poly)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(TermOrder::Descending))
    }
}

/// `p/q` as a rational (panics on `q == 0`).
pub fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `p/q`, or just `p` when the denominator is one.
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `-?[0-9]+(/[0-9]+)?` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse {
        line: 0,
        message: format!("{s:?} is not a rational of the form p or p/q"),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) || den.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

fn add_coeffs(a: &[BigRational], b: &[BigRational], negate_b: bool) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $method(self, rhs: RatPoly) -> RatPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatPoly> for RatPoly {
            type Output = RatPoly;
            fn $method(self, rhs: &RatPoly) -> RatPoly {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

impl std::iter::Product for RatPoly {
    fn product<I: Iterator<Item = RatPoly>>(iter: I) -> Self {
        iter.fold(RatPoly::one(), |acc, p| acc * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = RatPoly::from_ints([1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(RatPoly::from_ints([0, 0]).is_zero());
        assert_eq!(RatPoly::from_ints([0]), RatPoly::zero());
    }

    #[test]
    fn text_rendering() {
        let p = RatPoly::from_fracs([(1, 4), (0, 1), (-5, 4), (0, 1), (1, 1)]);
        assert_eq!(p.to_string(), "λ^4 - 5/4·λ^2 + 1/4");
        assert_eq!(p.to_text(TermOrder::Ascending), "1/4 - 5/4·λ^2 + λ^4");
        let q = RatPoly::from_fracs([(-1, 4), (-3, 4), (0, 1), (1, 1)]);
        assert_eq!(q.to_string(), "λ^3 - 3/4·λ - 1/4");
        assert_eq!(RatPoly::from_ints([0, -1]).to_string(), "-λ");
        assert_eq!(RatPoly::zero().to_string(), "0");
        assert_eq!(RatPoly::from_ints([-7]).to_string(), "-7");
    }

    #[test]
    fn arithmetic() {
        // (λ - 1)(λ + 1) = λ^2 - 1
        let a = RatPoly::linear_factor(frac(1, 1));
        let b = RatPoly::linear_factor(frac(-1, 1));
        assert_eq!(&a * &b, RatPoly::from_ints([-1, 0, 1]));
        assert_eq!(&a - &a, RatPoly::zero());
        assert_eq!(&a + &b, RatPoly::from_ints([0, 2]));
        assert_eq!(a.pow(3), RatPoly::from_ints([-1, 3, -3, 1]));
        assert_eq!(a.pow(0), RatPoly::one());
        assert_eq!(RatPoly::x().shift(2), RatPoly::monomial(frac(1, 1), 3));
    }

    #[test]
    fn evaluation() {
        let p = RatPoly::from_fracs([(1, 4), (0, 1), (-5, 4), (0, 1), (1, 1)]);
        assert!(p.eval(&frac(1, 2)).is_zero());
        assert!(p.eval_f64(1.0).abs() < 1e-15);
        assert_eq!(p.eval(&frac(0, 1)), frac(1, 4));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("-5/4").unwrap(), frac(-5, 4));
        assert_eq!(parse_rational("6/8").unwrap(), frac(3, 4));
        assert_eq!(parse_rational("0").unwrap(), frac(0, 1));
        for bad in ["", "-", "1/", "/2", "1/0", "+1", " 1", "1.5", "1/-2", "--1", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
        assert_eq!(rational_to_string(&frac(-5, 4)), "-5/4");
        assert_eq!(rational_to_string(&frac(4, 2)), "2");
    }

    #[test]
    fn json_shape() {
        let p = RatPoly::from_fracs([(1, 4), (0, 1), (-5, 4), (0, 1), (1, 1)]);
        let v = p.to_json();
        assert_eq!(v["degree"], 4);
        assert_eq!(
            v["coeffs_ascending"],
            serde_json::json!(["1/4", "0", "-5/4", "0", "1"])
        );
        assert_eq!(RatPoly::from_json(&v).unwrap(), p);
        assert_eq!(RatPoly::from_json(&RatPoly::zero().to_json()).unwrap(), RatPoly::zero());
        let wrong = serde_json::json!({"degree": 3, "coeffs_ascending": ["1", "1"]});
        assert!(RatPoly::from_json(&wrong).is_err());
    }

    fn small_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec((-20i64..20, 1i64..9), 0..7).prop_map(RatPoly::from_fracs)
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn json_round_trip(a in small_poly()) {
            prop_assert_eq!(RatPoly::from_json(&a.to_json()).unwrap(), a);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in small_poly(), b in small_poly(), x in -5i64..5) {
            let x = frac(x, 3);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        }
    }
}

//! Rational interval arithmetic.
//!
//! All certified numeric statements in this crate reduce to arithmetic on
//! closed intervals with exact rational endpoints. Operations round outward
//! by construction (endpoint arithmetic is exact), so an interval computed
//! from enclosures of real quantities always encloses the true value.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A closed interval `[lo, hi]` with rational endpoints, `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Self {
        Self::point(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::point(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::point(rat_int(n))
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn intersects(&self, other: &RatInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Definite sign of every point in the interval, if there is one.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let p1 = &self.lo * &other.lo;
        let p2 = &self.lo * &other.hi;
        let p3 = &self.hi * &other.lo;
        let p4 = &self.hi * &other.hi;
        let mut lo = p1.clone();
        let mut hi = p1;
        for p in [p2, p3, p4] {
            if p < lo {
                lo = p.clone();
            }
            if p > hi {
                hi = p;
            }
        }
        RatInterval::new(lo, hi)
    }

    /// Division; the divisor interval must not contain zero.
    pub fn div(&self, other: &RatInterval) -> RatInterval {
        assert!(
            !other.contains_zero(),
            "interval division by an interval containing zero"
        );
        let inv = RatInterval::new(other.hi.recip(), other.lo.recip());
        self.mul(&inv)
    }

    pub fn scale(&self, c: &BigRational) -> RatInterval {
        if c.is_negative() {
            RatInterval::new(&self.hi * c, &self.lo * c)
        } else {
            RatInterval::new(&self.lo * c, &self.hi * c)
        }
    }

    pub fn abs(&self) -> RatInterval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let hi = if -&self.lo > self.hi { -self.lo.clone() } else { self.hi.clone() };
            RatInterval::new(BigRational::zero(), hi)
        }
    }

    /// `self^k`, tight for even powers of intervals straddling zero.
    pub fn pow(&self, k: u32) -> RatInterval {
        if k == 0 {
            return RatInterval::one();
        }
        if k % 2 == 1 {
            return RatInterval::new(pow_rat(&self.lo, k), pow_rat(&self.hi, k));
        }
        let a = self.abs();
        RatInterval::new(pow_rat(&a.lo, k), pow_rat(&a.hi, k))
    }

    pub fn max_with(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(
            if self.lo > other.lo { self.lo.clone() } else { other.lo.clone() },
            if self.hi > other.hi { self.hi.clone() } else { other.hi.clone() },
        )
    }

    /// Intersection with another enclosure of the same quantity.
    pub fn meet(&self, other: &RatInterval) -> RatInterval {
        let lo = if self.lo > other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi < other.hi { self.hi.clone() } else { other.hi.clone() };
        // Both inputs enclose the same real number, so they overlap.
        assert!(lo <= hi, "meet of disjoint enclosures");
        RatInterval::new(lo, hi)
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

pub fn pow_rat(x: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = x.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// A certified enclosure of a real quantity together with the working
/// precision (in bits) it was computed at. Refinement only shrinks it.
#[derive(Debug, Clone)]
pub struct RealBound {
    pub value: RatInterval,
    pub precision: u32,
}

impl RealBound {
    pub fn new(value: RatInterval, precision: u32) -> Self {
        RealBound { value, precision }
    }

    pub fn lo(&self) -> &BigRational {
        &self.value.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.value.hi
    }

    /// Tighten with a second enclosure of the same quantity.
    pub fn refine_with(&self, other: &RealBound) -> RealBound {
        RealBound {
            value: self.value.meet(&other.value),
            precision: self.precision.max(other.precision),
        }
    }
}

impl fmt::Display for RealBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} bits)", self.value, self.precision)
    }
}

/// `2^-bits` as a rational tolerance.
pub fn eps(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits as usize)
}

fn to_f64_approx(x: &BigRational) -> f64 {
    let num = x.numer();
    let den = x.denom();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    // Shift so both parts fit comfortably in f64.
    let shift = (nb.max(db) - 52).max(0);
    let n = (num >> shift as usize).to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = (den >> shift as usize).to_string().parse::<f64>().unwrap_or(f64::NAN);
    if d == 0.0 { if n >= 0.0 { f64::INFINITY } else { f64::NEG_INFINITY } } else { n / d }
}

/// Approximate conversion for diagnostics and numeric seeding; never used
/// in certified decisions.
pub fn rat_to_f64(x: &BigRational) -> f64 {
    to_f64_approx(x)
}

pub fn f64_to_rat(x: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let (mantissa, exponent, sign) = {
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        if exp == 0 {
            (frac, -1074i64, sign)
        } else {
            (frac | (1u64 << 52), exp - 1075, sign)
        }
    };
    let mut num = BigInt::from(mantissa) * BigInt::from(sign);
    let mut den = BigInt::one();
    if exponent >= 0 {
        num <<= exponent as usize;
    } else {
        den <<= (-exponent) as usize;
    }
    Some(BigRational::new(num, den))
}

/// Floor of a rational as a BigInt.
pub fn rat_floor(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

/// Ceiling of a rational as a BigInt.
pub fn rat_ceil(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

/// Certified enclosure of `ln x` for a positive rational `x`, with
/// truncation error below `2^-bits`.
pub fn ln_enclosure(x: &BigRational, bits: u32) -> RatInterval {
    assert!(x.is_positive(), "ln of a non-positive rational");
    if x.is_one() {
        return RatInterval::zero();
    }
    if x < &BigRational::one() {
        return ln_enclosure(&x.recip(), bits).neg();
    }
    // Range-reduce x = 2^k * y with y in [1, 2).
    let two = rat_int(2);
    let mut y = x.clone();
    let mut k = 0u32;
    while y >= two {
        y /= &two;
        k += 1;
    }
    let mut enc = atanh_series(&ratio_z(&y), bits + 2).scale(&rat_int(2));
    if k > 0 {
        let ln2 = atanh_series(&rat(1, 3), bits + 8).scale(&rat_int(2));
        enc = enc.add(&ln2.scale(&rat_int(k as i64)));
    }
    enc
}

/// Enclosure of `ln` over a positive interval.
pub fn ln_interval(x: &RatInterval, bits: u32) -> RatInterval {
    assert!(x.lo.is_positive(), "ln over an interval reaching 0");
    RatInterval::new(
        ln_enclosure(&x.lo, bits).lo,
        ln_enclosure(&x.hi, bits).hi,
    )
}

fn ratio_z(y: &BigRational) -> BigRational {
    (y - BigRational::one()) / (y + BigRational::one())
}

/// Enclosure of `atanh z` for `0 <= z <= 1/3 + slack`, by the odd power
/// series with a certified tail bound.
fn atanh_series(z: &BigRational, bits: u32) -> RatInterval {
    assert!(!z.is_negative() && z < &rat(1, 2));
    if z.is_zero() {
        return RatInterval::zero();
    }
    let tol = eps(bits);
    let z2 = z * z;
    let mut term = z.clone(); // z^(2j+1)
    let mut sum = BigRational::zero();
    let mut j = 0u32;
    loop {
        sum += &term / rat_int((2 * j + 1) as i64);
        term *= &z2;
        j += 1;
        // Tail from exponent 2j+1: sum_{i>=j} z^(2i+1)/(2i+1)
        //   <= z^(2j+1) / ((2j+1)(1-z^2)).
        let tail = &term / (rat_int((2 * j + 1) as i64) * (BigRational::one() - &z2));
        if tail < tol {
            return RatInterval::new(sum.clone(), sum + tail);
        }
    }
}

/// Rational enclosure `[l, u]` of `q^(1/m)` for a positive rational `q`,
/// with `u - l <= 2^-bits * max(1, u)`.
pub fn mth_root_enclosure(q: &BigRational, m: u32, bits: u32) -> RatInterval {
    assert!(q.is_positive() && m >= 1);
    if m == 1 || q.is_one() {
        return if m == 1 { RatInterval::point(q.clone()) } else { RatInterval::one() };
    }
    // Bracket with powers of two, then bisect.
    let mut hi = BigRational::one();
    let two = rat_int(2);
    while pow_rat(&hi, m) < *q {
        hi *= &two;
    }
    let mut lo = hi.clone() / &two;
    if pow_rat(&hi, m) == *q {
        return RatInterval::point(hi);
    }
    while pow_rat(&lo, m) > *q {
        hi = lo.clone();
        lo /= &two;
    }
    for _ in 0..(bits as usize + 2) {
        let mid = (&lo + &hi) / &two;
        let p = pow_rat(&mid, m);
        match p.cmp(q) {
            Ordering::Equal => return RatInterval::point(mid),
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
        }
    }
    RatInterval::new(lo, hi)
}

/// Enclosure of `x^(1/m)` over a non-negative interval.
pub fn mth_root_interval(x: &RatInterval, m: u32, bits: u32) -> RatInterval {
    assert!(!x.lo.is_negative());
    let lo = if x.lo.is_zero() {
        BigRational::zero()
    } else {
        mth_root_enclosure(&x.lo, m, bits).lo
    };
    let hi = if x.hi.is_zero() {
        BigRational::zero()
    } else {
        mth_root_enclosure(&x.hi, m, bits).hi
    };
    RatInterval::new(lo, hi)
}

/// Exact integer square root check: returns `s` with `s^2 == n` if `n` is a
/// perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    match n.sign() {
        Sign::Minus => None,
        Sign::NoSign => Some(BigInt::zero()),
        Sign::Plus => {
            let s = n.sqrt();
            if &s * &s == *n {
                Some(s)
            } else {
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_mul_signs() {
        let a = RatInterval::new(rat_int(-2), rat_int(1));
        let b = RatInterval::new(rat_int(3), rat_int(4));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat_int(-8));
        assert_eq!(p.hi, rat_int(4));
    }

    #[test]
    fn even_pow_of_straddling_interval() {
        let a = RatInterval::new(rat_int(-2), rat_int(1));
        let p = a.pow(2);
        assert_eq!(p.lo, rat_int(0));
        assert_eq!(p.hi, rat_int(4));
        let c = a.pow(3);
        assert_eq!(c.lo, rat_int(-8));
        assert_eq!(c.hi, rat_int(1));
    }

    #[test]
    fn ln_enclosure_brackets_known_values() {
        // ln 2 = 0.693147...
        let enc = ln_enclosure(&rat_int(2), 64);
        assert!(enc.lo < rat(693148, 1000000));
        assert!(enc.hi > rat(693147, 1000000));
        assert!(enc.width() < eps(60));
        // ln 5 via ln(1/5) symmetry
        let enc5 = ln_enclosure(&rat(1, 5), 64);
        assert!(enc5.hi < rat(-1609437, 1000000));
        assert!(enc5.lo > rat(-1609439, 1000000));
    }

    #[test]
    fn mth_root_bounds() {
        let enc = mth_root_enclosure(&rat_int(7), 2, 64);
        assert!(pow_rat(&enc.lo, 2) <= rat_int(7));
        assert!(pow_rat(&enc.hi, 2) >= rat_int(7));
        assert!(enc.width() < eps(50));
        let exact = mth_root_enclosure(&rat_int(16), 4, 32);
        assert!(exact.is_point());
        assert_eq!(exact.lo, rat_int(2));
    }

    #[test]
    fn f64_round_trip() {
        let x = f64_to_rat(0.5).unwrap();
        assert_eq!(x, rat(1, 2));
        assert_eq!(rat_to_f64(&rat(1, 4)), 0.25);
    }

    #[test]
    fn exact_sqrt_detects_squares() {
        assert_eq!(exact_sqrt(&BigInt::from(49)), Some(BigInt::from(7)));
        assert_eq!(exact_sqrt(&BigInt::from(50)), None);
        assert_eq!(exact_sqrt(&BigInt::from(-4)), None);
    }
}

//! Arbitrary-precision real arithmetic with explicit precision contexts and
//! directed rounding, plus exact rational arithmetic for certification.
//!
//! [`BigReal`] wraps an MPFR float tagged with a decimal-digit precision
//! context. Every value is a dyadic rational (mantissa times a power of two),
//! so a value can always be re-read exactly — the basis for the exact
//! certification path in [`crate::certifier`]. Directed rounding (`Down`/`Up`)
//! gives one-sided bounds through chained computations.
//!
//! [`ExactRational`] wraps a GMP rational. Finite decimal strings parse into
//! it without rounding, and all arithmetic on it is exact.

use std::cmp::Ordering;
use std::fmt;

use rug::float::Round;
use rug::ops::Pow;
use rug::{Assign, Float, Integer, Rational};

/// Minimum decimal precision for all computations.
pub const MIN_DIGITS: u32 = 20;

const LOG2_10: f64 = 3.321928094887362;

/// Guard bits added on top of the requested decimal digits.
const GUARD_BITS: u32 = 32;

#[derive(Debug, thiserror::Error)]
pub enum NumericsError {
    #[error("square root of negative value")]
    NegativeSqrt,
    #[error("invalid decimal literal `{0}`")]
    BadDecimal(String),
    #[error("precision too low: need at least {needed} decimal digits")]
    PrecisionTooLow { needed: u32 },
}

/// Rounding mode for [`BigReal`] operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Nearest,
    /// Toward negative infinity: the result never exceeds the true value.
    Down,
    /// Toward positive infinity: the result is never below the true value.
    Up,
}

impl Rounding {
    fn mpfr(self) -> Round {
        match self {
            Rounding::Nearest => Round::Nearest,
            Rounding::Down => Round::Down,
            Rounding::Up => Round::Up,
        }
    }
}

fn bits_for(digits: u32) -> u32 {
    let d = digits.max(MIN_DIGITS);
    (d as f64 * LOG2_10).ceil() as u32 + GUARD_BITS
}

/// An arbitrary-precision real number carrying its decimal precision context.
///
/// Arithmetic between two values widens to the larger of the two contexts.
/// The stored value is always dyadic, so `to_rational` is exact.
#[derive(Debug, Clone)]
pub struct BigReal {
    f: Float,
    digits: u32,
}

impl BigReal {
    pub fn zero(digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        BigReal {
            f: Float::new(bits_for(digits)),
            digits,
        }
    }

    pub fn from_u32(v: u32, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        BigReal {
            f: Float::with_val(bits_for(digits), v),
            digits,
        }
    }

    pub fn from_i64(v: i64, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        BigReal {
            f: Float::with_val(bits_for(digits), v),
            digits,
        }
    }

    /// 10^exp at the given context, rounded as requested.
    pub fn ten_pow(exp: i64, digits: u32, rounding: Rounding) -> Self {
        let digits = digits.max(MIN_DIGITS);
        let prec = bits_for(digits);
        let base = Float::with_val(prec, 10);
        let (f, _) = Float::with_val_round(prec, (&base).pow(exp as i32), rounding.mpfr());
        BigReal { f, digits }
    }

    /// √x for a small integer operand, e.g. √2.
    pub fn sqrt_u32(x: u32, digits: u32, rounding: Rounding) -> Self {
        BigReal::from_u32(x, digits)
            .sqrt(rounding)
            .expect("non-negative operand")
    }

    pub fn from_rational(r: &ExactRational, digits: u32, rounding: Rounding) -> Self {
        let digits = digits.max(MIN_DIGITS);
        let (f, _) = Float::with_val_round(bits_for(digits), &r.r, rounding.mpfr());
        BigReal { f, digits }
    }

    /// Exact conversion: every `BigReal` is a dyadic rational.
    pub fn to_rational(&self) -> ExactRational {
        ExactRational {
            r: self.f.to_rational().expect("finite value"),
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Re-round to a new precision context.
    pub fn with_digits(&self, digits: u32, rounding: Rounding) -> Self {
        let digits = digits.max(MIN_DIGITS);
        let (f, _) = Float::with_val_round(bits_for(digits), &self.f, rounding.mpfr());
        BigReal { f, digits }
    }

    fn merged_digits(&self, other: &Self) -> u32 {
        self.digits.max(other.digits)
    }

    pub fn add_r(&self, other: &Self, rounding: Rounding) -> Self {
        let digits = self.merged_digits(other);
        let (f, _) = Float::with_val_round(bits_for(digits), &self.f + &other.f, rounding.mpfr());
        BigReal { f, digits }
    }

    pub fn sub_r(&self, other: &Self, rounding: Rounding) -> Self {
        let digits = self.merged_digits(other);
        let (f, _) = Float::with_val_round(bits_for(digits), &self.f - &other.f, rounding.mpfr());
        BigReal { f, digits }
    }

    pub fn mul_r(&self, other: &Self, rounding: Rounding) -> Self {
        let digits = self.merged_digits(other);
        let (f, _) = Float::with_val_round(bits_for(digits), &self.f * &other.f, rounding.mpfr());
        BigReal { f, digits }
    }

    pub fn div_r(&self, other: &Self, rounding: Rounding) -> Self {
        let digits = self.merged_digits(other);
        let (f, _) = Float::with_val_round(bits_for(digits), &self.f / &other.f, rounding.mpfr());
        BigReal { f, digits }
    }

    /// Exact sum: the result precision is widened so no rounding occurs.
    pub fn exact_add(&self, other: &Self) -> Self {
        let prec = exact_linear_prec(&self.f, &other.f);
        let f = Float::with_val(prec, &self.f + &other.f);
        BigReal {
            f,
            digits: self.merged_digits(other),
        }
    }

    /// Exact difference: the result precision is widened so no rounding occurs.
    pub fn exact_sub(&self, other: &Self) -> Self {
        let prec = exact_linear_prec(&self.f, &other.f);
        let f = Float::with_val(prec, &self.f - &other.f);
        BigReal {
            f,
            digits: self.merged_digits(other),
        }
    }

    /// Exact product: the result precision is widened so no rounding occurs.
    pub fn exact_mul(&self, other: &Self) -> Self {
        let prec = self.f.prec() + other.f.prec() + 4;
        let f = Float::with_val(prec, &self.f * &other.f);
        BigReal {
            f,
            digits: self.merged_digits(other),
        }
    }

    /// Exact halving (binary shift).
    pub fn exact_half(&self) -> Self {
        let f = Float::with_val(self.f.prec(), &self.f / 2u32);
        BigReal {
            f,
            digits: self.digits,
        }
    }

    pub fn neg(&self) -> Self {
        let f = Float::with_val(self.f.prec(), -&self.f);
        BigReal {
            f,
            digits: self.digits,
        }
    }

    pub fn abs(&self) -> Self {
        let f = Float::with_val(self.f.prec(), self.f.abs_ref());
        BigReal {
            f,
            digits: self.digits,
        }
    }

    /// Directed square root.
    ///
    /// `Down` guarantees `result² ≤ x`, `Up` guarantees `result² ≥ x`.
    pub fn sqrt(&self, rounding: Rounding) -> Result<Self, NumericsError> {
        if self.f.is_sign_negative() && !self.f.is_zero() {
            return Err(NumericsError::NegativeSqrt);
        }
        let (f, _) = Float::with_val_round(self.f.prec(), self.f.sqrt_ref(), rounding.mpfr());
        Ok(BigReal {
            f,
            digits: self.digits,
        })
    }

    /// Directed square root with the result carried at `prec_bits` mantissa
    /// bits. With enough bits an exact square yields the exact root.
    pub fn sqrt_with_prec(&self, prec_bits: u32, rounding: Rounding) -> Result<Self, NumericsError> {
        if self.f.is_sign_negative() && !self.f.is_zero() {
            return Err(NumericsError::NegativeSqrt);
        }
        let (f, _) = Float::with_val_round(prec_bits, self.f.sqrt_ref(), rounding.mpfr());
        Ok(BigReal {
            f,
            digits: self.digits,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.f.is_sign_positive() && !self.f.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.f.is_sign_negative() && !self.f.is_zero()
    }

    /// Floor of log10 of |x|; `None` for zero.
    pub fn floor_log10(&self) -> Option<i64> {
        if self.f.is_zero() {
            return None;
        }
        // Decimal exponent from the textual representation: value =
        // 0.d1d2… × 10^exp with d1 ≠ 0, so floor(log10 |x|) = exp − 1.
        let (_, _, exp) = self.f.to_sign_string_exp(10, Some(4));
        exp.map(|e| e as i64 - 1)
    }

    /// Exact decimal rendering of the dyadic value (no rounding).
    pub fn to_exact_decimal(&self) -> String {
        rational_to_exact_decimal(&self.f.to_rational().expect("finite value"))
            .expect("dyadic denominators are 2^k")
    }

    /// Scientific notation with `sig` significant digits, e.g. `8.24e-11`.
    ///
    /// With `Rounding::Down` the printed value never exceeds the true one.
    pub fn to_scientific(&self, sig: u32, rounding: Rounding) -> String {
        if self.f.is_zero() {
            return "0".to_string();
        }
        let sig = sig.max(1);
        // Round the value to slightly more bits than the target digits so the
        // final decimal conversion cannot cross back over the true value.
        let prec = ((sig + 4) as f64 * LOG2_10).ceil() as u32;
        let (r, _) = Float::with_val_round(prec.max(8), &self.f, rounding.mpfr());
        let (neg, mantissa, exp) = r.to_sign_string_exp(10, Some(sig as usize));
        let exp = exp.unwrap_or(0);
        let digits: Vec<char> = mantissa.chars().collect();
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        s.push(digits[0]);
        if digits.len() > 1 {
            s.push('.');
            s.extend(&digits[1..]);
        }
        s.push('e');
        s.push_str(&(exp - 1).to_string());
        s
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.f == other.f
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.f.partial_cmp(&other.f)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{}", self.to_scientific(self.digits, Rounding::Nearest))
    }
}

fn exact_linear_prec(a: &Float, b: &Float) -> u32 {
    match (a.get_exp(), b.get_exp()) {
        (None, None) => 32,
        (Some(_), None) => a.prec(),
        (None, Some(_)) => b.prec(),
        (Some(ea), Some(eb)) => {
            let la = ea as i64 - a.prec() as i64;
            let lb = eb as i64 - b.prec() as i64;
            let span = (ea.max(eb) as i64) - la.min(lb);
            (span.max(2) as u32) + 4
        }
    }
}

/// The unique positive root of `a⁴ + 4a³ + 8a² − 8 = 0`.
///
/// Bisection brackets the root in (0, 1), Newton refines it, and a directed
/// sign-change evaluation verifies the enclosure. The residual at the result
/// is below `10^(−digits+2)`.
pub fn quartic_root_a(digits: u32) -> BigReal {
    let digits = digits.max(MIN_DIGITS);
    let work = bits_for(digits) + 64;

    let eval = |x: &Float, prec: u32, round: Round| -> Float {
        // ((x + 4)·x + 8)·x² − 8, all partial terms positive for x > 0, so a
        // uniform rounding direction yields a one-sided bound.
        let t1 = Float::with_val_round(prec, x + 4u32, round).0;
        let t2 = Float::with_val_round(prec, &t1 * x, round).0;
        let t3 = Float::with_val_round(prec, &t2 + 8u32, round).0;
        let x2 = Float::with_val_round(prec, x * x, round).0;
        let t4 = Float::with_val_round(prec, &t3 * &x2, round).0;
        Float::with_val_round(prec, &t4 - 8u32, round).0
    };

    // Bracket: f(0) = −8 < 0 < f(1) = 5.
    let mut lo = Float::with_val(work, 0);
    let mut hi = Float::with_val(work, 1);
    for _ in 0..32 {
        let mid = Float::with_val(work, (&lo + &hi) / 2u32);
        if eval(&mid, work, Round::Nearest).is_sign_positive() {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    // Newton: f'(x) = ((4x + 12)x + 16)x, quadratic convergence from the
    // bracket midpoint.
    let mut x = Float::with_val(work, (&lo + &hi) / 2u32);
    let tol = Float::with_val(work, Float::i_exp(1, -(work as i32 - 8)));
    for _ in 0..64 {
        let fx = eval(&x, work, Round::Nearest);
        let d1 = Float::with_val(work, 4u32 * &x + 12u32);
        let d2 = Float::with_val(work, &d1 * &x + 16u32);
        let dfx = Float::with_val(work, &d2 * &x);
        let step = Float::with_val(work, &fx / &dfx);
        let next = Float::with_val(work, &x - &step);
        let done = Float::with_val(work, step.abs_ref()) < tol;
        x = next;
        if done {
            break;
        }
    }

    // Certified enclosure: an upper bound of f at x−ε is negative and a lower
    // bound of f at x+ε is positive, so the root lies in (x−ε, x+ε).
    let eps = Float::with_val(work, Float::i_exp(1, -(bits_for(digits) as i32)));
    let lo_pt = Float::with_val(work, &x - &eps);
    let hi_pt = Float::with_val(work, &x + &eps);
    debug_assert!(eval(&lo_pt, work, Round::Up).is_sign_negative());
    debug_assert!(eval(&hi_pt, work, Round::Down).is_sign_positive());

    let (f, _) = Float::with_val_round(bits_for(digits), &x, Round::Nearest);
    BigReal { f, digits }
}

/// An exact rational number (reduced, positive denominator).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactRational {
    r: Rational,
}

impl ExactRational {
    pub fn zero() -> Self {
        ExactRational {
            r: Rational::new(),
        }
    }

    pub fn from_integer(v: i64) -> Self {
        ExactRational {
            r: Rational::from(v),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ExactRational {
            r: Rational::from((num, den)),
        }
    }

    /// Parse a finite decimal string (`[±]digits[.digits]`) without rounding.
    pub fn from_decimal_str(s: &str) -> Result<Self, NumericsError> {
        let t = s.trim();
        let bad = || NumericsError::BadDecimal(s.to_string());
        if t.is_empty() {
            return Err(bad());
        }
        let (sign, rest) = match t.as_bytes()[0] {
            b'+' => (1, &t[1..]),
            b'-' => (-1, &t[1..]),
            _ => (1, t),
        };
        if rest.is_empty() {
            return Err(bad());
        }
        let (int_part, frac_part) = match rest.split_once('.') {
            Some((i, f)) => (i, f),
            None => (rest, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let mut digits = String::with_capacity(int_part.len() + frac_part.len());
        digits.push_str(int_part);
        digits.push_str(frac_part);
        if digits.is_empty() {
            return Err(bad());
        }
        let num = Integer::from_str_radix(&digits, 10).map_err(|_| bad())?;
        let den = Integer::from(Integer::u_pow_u(10, frac_part.len() as u32));
        let mut r = Rational::from((num, den));
        if sign < 0 {
            r = -r;
        }
        Ok(ExactRational { r })
    }

    /// Exact decimal rendering; `None` when the reduced denominator has a
    /// prime factor other than 2 or 5.
    pub fn to_exact_decimal(&self) -> Option<String> {
        rational_to_exact_decimal(&self.r)
    }

    pub fn add(&self, other: &Self) -> Self {
        ExactRational {
            r: Rational::from(&self.r + &other.r),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        ExactRational {
            r: Rational::from(&self.r - &other.r),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        ExactRational {
            r: Rational::from(&self.r * &other.r),
        }
    }

    pub fn mul_u32(&self, k: u32) -> Self {
        ExactRational {
            r: Rational::from(&self.r * k),
        }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn is_negative(&self) -> bool {
        self.r.cmp0() == Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        self.r.cmp0() == Ordering::Greater
    }

    pub fn is_zero(&self) -> bool {
        self.r.cmp0() == Ordering::Equal
    }

    pub fn cmp_u32(&self, v: u32) -> Ordering {
        self.r.partial_cmp(&v).expect("total order")
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{}", self.r)
    }
}

fn rational_to_exact_decimal(r: &Rational) -> Option<String> {
    if r.cmp0() == Ordering::Equal {
        return Some("0".to_string());
    }
    let num = r.numer().clone();
    let den = r.denom();

    // Strip factors of 2 and 5 from the denominator.
    let mut d = den.clone();
    let two = Integer::from(2);
    let five = Integer::from(5);
    let mut twos = 0u32;
    let mut fives = 0u32;
    while d.is_divisible(&two) {
        d /= &two;
        twos += 1;
    }
    while d.is_divisible(&five) {
        d /= &five;
        fives += 1;
    }
    if d != 1 {
        return None;
    }
    // num / (2^a·5^b) = num·2^(k−a)·5^(k−b) / 10^k with k = max(a, b).
    let k = twos.max(fives);
    let mut scaled = num;
    if k > twos {
        scaled *= Integer::from(Integer::u_pow_u(2, k - twos));
    }
    if k > fives {
        scaled *= Integer::from(Integer::u_pow_u(5, k - fives));
    }
    let neg = scaled < 0;
    let mut digits = scaled.abs().to_string_radix(10);
    if (k as usize) >= digits.len() {
        let pad = k as usize - digits.len() + 1;
        let mut padded = "0".repeat(pad);
        padded.push_str(&digits);
        digits = padded;
    }
    let split = digits.len() - k as usize;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&digits[..split]);
    if k > 0 {
        out.push('.');
        out.push_str(&digits[split..]);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_zero_is_zero() {
        let z = BigReal::zero(20);
        assert!(z.sqrt(Rounding::Nearest).unwrap().is_zero());
    }

    #[test]
    fn sqrt_two_at_30_digits() {
        // Independent high-precision evaluation.
        let expect = "1.41421356237309504880168872421";
        let s = BigReal::sqrt_u32(2, 30, Rounding::Nearest);
        assert_eq!(s.to_scientific(30, Rounding::Nearest), {
            let mut e = String::from("1.");
            e.push_str(&expect[2..]);
            e.push_str("e0");
            e
        });
    }

    #[test]
    fn sqrt_four_rounded_down() {
        let v = BigReal::sqrt_u32(4, 25, Rounding::Down);
        let sq = v.exact_mul(&v);
        let four = BigReal::from_u32(4, 25);
        assert!(sq <= four);
        let gap = four.exact_sub(&sq);
        assert!(gap < BigReal::ten_pow(-24, 25, Rounding::Up));
    }

    #[test]
    fn sqrt_negative_rejected() {
        let m = BigReal::from_i64(-1, 20);
        assert!(matches!(
            m.sqrt(Rounding::Nearest),
            Err(NumericsError::NegativeSqrt)
        ));
    }

    #[test]
    fn directed_sqrt_sandwich() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        for _ in 0..200 {
            let digits = 25;
            let x = BigReal::from_u32(rng.gen_range(0..10_000_000), digits)
                .div_r(&BigReal::from_u32(1_000_000, digits), Rounding::Nearest);
            let down = x.sqrt(Rounding::Down).unwrap();
            let near = x.sqrt(Rounding::Nearest).unwrap();
            let up = x.sqrt(Rounding::Up).unwrap();
            assert!(down <= near && near <= up);
            let spread = up.exact_sub(&down);
            let mut bound = BigReal::ten_pow(-(digits as i64) + 2, digits, Rounding::Down);
            if x > BigReal::from_u32(1, digits) {
                bound = bound.mul_r(&x, Rounding::Up);
            }
            assert!(spread < bound);
            // One-sided contracts.
            assert!(down.exact_mul(&down) <= x);
            assert!(up.exact_mul(&up) >= x);
        }
    }

    #[test]
    fn quartic_root_first_digits() {
        let a = quartic_root_a(20);
        let s = a.to_scientific(7, Rounding::Nearest);
        assert!(s.starts_with("8.184249"), "got {s}");
        assert_eq!(a.to_scientific(6, Rounding::Nearest), "8.18425e-1");
    }

    #[test]
    fn quartic_root_matches_bisection_oracle() {
        // Plain bisection on the quartic, no Newton, entirely independent of
        // the implementation path under test.
        let digits = 20u32;
        let prec = 256;
        let mut lo = Float::with_val(prec, 0);
        let mut hi = Float::with_val(prec, 1);
        let f = |x: &Float| -> Float {
            let x2 = Float::with_val(prec, x * x);
            let x3 = Float::with_val(prec, &x2 * x);
            let x4 = Float::with_val(prec, &x2 * &x2);
            Float::with_val(prec, &x4 + 4u32 * &x3 + 8u32 * &x2 - 8u32)
        };
        for _ in 0..200 {
            let mid = Float::with_val(prec, (&lo + &hi) / 2u32);
            if f(&mid).is_sign_positive() {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let oracle = Float::with_val(prec, (&lo + &hi) / 2u32);
        let a = quartic_root_a(digits);
        let diff = Float::with_val(prec, &oracle - &a.f).abs();
        let tol = Float::with_val(prec, Float::parse("1e-18").unwrap());
        assert!(diff < tol, "bisection oracle disagrees: {diff}");
    }

    #[test]
    fn quartic_root_residual_contract() {
        for digits in [20u32, 40, 80] {
            let a = quartic_root_a(digits);
            let a2 = a.exact_mul(&a);
            let a3 = a2.exact_mul(&a);
            let a4 = a2.exact_mul(&a2);
            let four = BigReal::from_u32(4, digits);
            let eight = BigReal::from_u32(8, digits);
            let res = a4
                .exact_add(&four.exact_mul(&a3))
                .exact_add(&eight.exact_mul(&a2))
                .exact_sub(&eight);
            let bound = BigReal::ten_pow(-(digits as i64) + 2, digits, Rounding::Down);
            assert!(res.abs() < bound, "residual too large at {digits} digits");
        }
    }

    #[test]
    fn quartic_root_refinement() {
        // Doubling the precision moves the root by less than 10^(−d+2).
        let d = 30u32;
        let a1 = quartic_root_a(d);
        let a2 = quartic_root_a(2 * d);
        let diff = a1.sub_r(&a2, Rounding::Nearest).abs();
        assert!(diff < BigReal::ten_pow(-(d as i64) + 2, 2 * d, Rounding::Down));
    }

    #[test]
    fn quartic_root_below_tau1_threshold() {
        // a < 2√2 − 2, so τ₁(3) = 2√2 − 2 − a > 0.
        let digits = 20;
        let a = quartic_root_a(digits);
        let two_sqrt2 = BigReal::sqrt_u32(2, digits, Rounding::Down)
            .mul_r(&BigReal::from_u32(2, digits), Rounding::Down);
        let rhs = two_sqrt2.sub_r(&BigReal::from_u32(2, digits), Rounding::Down);
        assert!(a < rhs);
    }

    #[test]
    fn exact_decimal_round_trip() {
        for s in ["0", "1", "12.5", "-3.125", "0.0009765625", "42.000", "-0.5"] {
            let r = ExactRational::from_decimal_str(s).unwrap();
            let rendered = r.to_exact_decimal().unwrap();
            let back = ExactRational::from_decimal_str(&rendered).unwrap();
            assert_eq!(r, back, "{s} → {rendered}");
        }
    }

    #[test]
    fn decimal_parse_rejects_garbage() {
        for s in ["", ".", "1.2.3", "abc", "--4", "1e5", " "] {
            assert!(
                ExactRational::from_decimal_str(s).is_err(),
                "{s:?} should fail"
            );
        }
    }

    #[test]
    fn decimal_parse_is_exact() {
        let r = ExactRational::from_decimal_str("0.1").unwrap();
        assert_eq!(r, ExactRational::from_ratio(1, 10));
        let r = ExactRational::from_decimal_str("-2.50").unwrap();
        assert_eq!(r, ExactRational::from_ratio(-5, 2));
    }

    #[test]
    fn bigreal_dyadic_round_trips_through_rational() {
        let x = BigReal::from_u32(3, 20).div_r(&BigReal::from_u32(7, 20), Rounding::Nearest);
        let r = x.to_rational();
        let y = BigReal::from_rational(&r, 20, Rounding::Nearest);
        assert_eq!(x, y);
    }

    #[test]
    fn exact_decimal_of_dyadic() {
        // 3/8 = 0.375 exactly.
        let x = BigReal::from_u32(3, 20).div_r(&BigReal::from_u32(8, 20), Rounding::Nearest);
        assert_eq!(x.to_exact_decimal(), "0.375");
    }

    #[test]
    fn widening_to_max_precision() {
        let a = BigReal::from_u32(1, 25);
        let b = BigReal::from_u32(2, 60);
        assert_eq!(a.add_r(&b, Rounding::Nearest).digits(), 60);
    }

    #[test]
    fn scientific_rendering() {
        let x = BigReal::ten_pow(-11, 30, Rounding::Nearest)
            .mul_r(&BigReal::from_u32(8235, 30), Rounding::Nearest)
            .div_r(&BigReal::from_u32(1000, 30), Rounding::Nearest);
        let s = x.to_scientific(4, Rounding::Down);
        assert!(s.starts_with("8.23") && s.ends_with("e-11"), "got {s}");
    }

    proptest::proptest! {
        #[test]
        fn rational_decimal_round_trip_prop(num in -1_000_000i64..1_000_000, scale in 0u32..12) {
            let den = 10i64.pow(scale);
            let r = ExactRational::from_ratio(num, den);
            let s = r.to_exact_decimal().unwrap();
            let back = ExactRational::from_decimal_str(&s).unwrap();
            proptest::prop_assert_eq!(r, back);
        }
    }
}

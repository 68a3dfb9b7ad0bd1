//! Lossless conversions between `f64` and big rationals, and exact sums of
//! float sequences.
//!
//! Several invariants in this crate are stated as exact inequalities over
//! finite data. Floating-point accumulation can flip such inequalities near
//! their boundaries, so the oracles here sum mantissas as big integers and
//! compare as rationals.

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{BigRational, One, Signed, ToPrimitive, Zero};

/// Exact rational value of a finite `f64`.
pub fn big_ratio(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float required")
}

/// `(mantissa, exponent)` with `x == mantissa * 2^exponent`.
fn decompose(x: f64) -> (i64, i64) {
    let bits = x.to_bits();
    let sign: i64 = if bits >> 63 == 0 { 1 } else { -1 };
    let raw_exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & 0x000f_ffff_ffff_ffff;
    let (mantissa, exp) = if raw_exp == 0 {
        (frac, -1074)
    } else {
        (frac | 0x0010_0000_0000_0000, raw_exp - 1075)
    };
    (sign * mantissa as i64, exp)
}

fn pow2_ratio(m: BigInt, e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from(m << e as usize)
    } else {
        BigRational::new(m, BigInt::one() << (-e) as usize)
    }
}

/// Exact sum of a slice of finite floats.
///
/// Accumulates mantissas over a common power-of-two scale, so the result is
/// the true rational sum with no rounding.
pub fn exact_sum(values: &[f64]) -> BigRational {
    let mut acc = BigInt::zero();
    let mut acc_exp: i64 = 0;
    for &v in values {
        assert!(v.is_finite(), "exact_sum requires finite values");
        if v == 0.0 {
            continue;
        }
        let (m, e) = decompose(v);
        if acc.is_zero() {
            acc = BigInt::from(m);
            acc_exp = e;
        } else if e >= acc_exp {
            acc += BigInt::from(m) << (e - acc_exp) as usize;
        } else {
            acc <<= (acc_exp - e) as usize;
            acc_exp = e;
            acc += BigInt::from(m);
        }
    }
    pow2_ratio(acc, acc_exp)
}

/// Exact mean of a nonempty slice of finite floats.
pub fn exact_mean(values: &[f64]) -> BigRational {
    assert!(!values.is_empty(), "exact_mean requires a nonempty slice");
    exact_sum(values) / BigRational::from(BigInt::from(values.len()))
}

/// `f64` value of a big rational, correct to within one unit in the last
/// place even when numerator and denominator are far beyond `f64` range.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let negative = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().clone();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    // Shift so the integer quotient carries ~80 significant bits.
    let shift = 80 - (nb - db);
    let q = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    let qf = q.to_f64().unwrap_or(f64::INFINITY);
    let out = ldexp(qf, -shift);
    if negative {
        -out
    } else {
        out
    }
}

fn ldexp(mut x: f64, mut e: i64) -> f64 {
    while e > 900 {
        x *= 2f64.powi(900);
        e -= 900;
    }
    while e < -900 {
        x *= 2f64.powi(-900);
        e += 900;
    }
    x * 2f64.powi(e as i32)
}

/// Exact comparison `r < x` between a small rational and a finite float.
pub fn ratio_lt_f64(r: &Ratio<u64>, x: f64) -> bool {
    let left = BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()));
    left < big_ratio(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_ratio_matches_decompose() {
        for &x in &[0.1, -3.75, 1e-300, 123456789.123, 2f64.powi(-1074)] {
            let (m, e) = decompose(x);
            assert_eq!(pow2_ratio(BigInt::from(m), e), big_ratio(x));
        }
    }

    #[test]
    fn exact_sum_agrees_with_rational_sum() {
        let xs = [0.1, 0.2, 0.3, 1e-17, -0.25];
        let direct: BigRational = xs.iter().map(|&x| big_ratio(x)).sum();
        assert_eq!(exact_sum(&xs), direct);
    }

    #[test]
    fn exact_sum_of_zeros_is_zero() {
        assert!(exact_sum(&[0.0, 0.0]).is_zero());
        assert!(exact_sum(&[]).is_zero());
    }

    #[test]
    fn ratio_to_f64_roundtrips_floats() {
        for &x in &[0.5, 0.1, 1.0 / 3.0, 1e300, 1e-300, -7.25] {
            assert_eq!(ratio_to_f64(&big_ratio(x)), x);
        }
    }

    #[test]
    fn ratio_to_f64_handles_huge_denominators() {
        // 1/2^5000 underflows to zero.
        let tiny = BigRational::new(BigInt::one(), BigInt::one() << 5000);
        assert_eq!(ratio_to_f64(&tiny), 0.0);
        // (2^5000 + 1) / 2^5000 is about 1.
        let near_one = BigRational::new(
            (BigInt::one() << 5000) + BigInt::one(),
            BigInt::one() << 5000,
        );
        assert_eq!(ratio_to_f64(&near_one), 1.0);
        // A third with a 4000-bit denominator scale stays a third.
        let third = BigRational::new(BigInt::one() << 4000, BigInt::from(3) << 4000);
        assert!((ratio_to_f64(&third) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn ratio_lt_f64_is_strict() {
        let half = Ratio::new(1u64, 2);
        assert!(!ratio_lt_f64(&half, 0.5));
        assert!(ratio_lt_f64(&half, 0.5 + 1e-16));
        assert!(!ratio_lt_f64(&half, 0.5 - 1e-16));
    }
}

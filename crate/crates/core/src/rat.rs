//! Exact rational scalars.
//!
//! Every quantity that enters a feasibility or separation verdict is a
//! [`Rat`]: an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. There is no floating point anywhere in a decision
//! path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced, denominator > 0.
pub type Rat = BigRational;

/// Integer-valued rational.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `num/den`; panics on a zero denominator (use [`parse_rat`] for untrusted input).
pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses an integer (`-3`) or a fraction (`7/2`). A zero denominator is an error.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::invalid(format!("malformed rational `{s}`"));
    let (num_s, den_s) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let num: BigInt = num_s.parse().map_err(|_| bad())?;
    let den: BigInt = match den_s {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::invalid(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(num, den))
}

/// Lowest terms and positive denominator. `Rat` maintains this by
/// construction; the check documents the invariant for debug builds.
pub fn debug_check_reduced(r: &Rat) {
    debug_assert!(r.denom().is_positive(), "denominator must be positive");
    debug_assert!(
        num_integer::gcd(r.numer().clone(), r.denom().clone()).is_one() || r.numer().is_zero(),
        "rational not in lowest terms"
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["0", "5", "-3", "7/2", "-9/4", "10/5"] {
            let r = parse_rat(s).unwrap();
            debug_check_reduced(&r);
        }
        assert_eq!(parse_rat("10/5").unwrap(), rat(2));
        assert_eq!(parse_rat("-4/6").unwrap(), rat_frac(-2, 3));
        assert_eq!(parse_rat("7/2").unwrap().to_string(), "7/2");
        assert_eq!(parse_rat("-8/2").unwrap().to_string(), "-4");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("0/0").is_err());
    }

    #[test]
    fn garbage_rejected() {
        for s in ["", "a", "1/2/3", "1.5", "--2", "3/"] {
            assert!(parse_rat(s).is_err(), "accepted `{s}`");
        }
    }

    #[test]
    fn arithmetic_normalizes() {
        let a = rat_frac(1, 6) + rat_frac(1, 3);
        assert_eq!(a, rat_frac(1, 2));
        let b = rat_frac(2, 3) * rat_frac(3, 2);
        assert_eq!(b, rat(1));
        debug_check_reduced(&a);
        debug_check_reduced(&b);
        // spot checks of ring laws
        let (x, y, z) = (rat_frac(3, 7), rat_frac(-5, 2), rat_frac(11, 13));
        assert_eq!(&x + &y, &y + &x);
        assert_eq!((&x + &y) + &z, &x + (&y + &z));
        assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
    }
}

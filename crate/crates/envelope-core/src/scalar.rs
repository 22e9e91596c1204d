//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

/// The scalar field: arbitrary-precision rationals.
pub type Rat = Ratio<BigInt>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// n! as a rational, for series coefficients.
pub fn factorial(n: u64) -> Rat {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rat::from_integer(acc)
}

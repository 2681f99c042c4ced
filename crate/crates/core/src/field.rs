//! Coefficient fields.
//!
//! Everything above this module is generic over [`Field`]. Two families are
//! provided: arbitrary-precision rationals ([`Rational`]) and prime fields
//! with a compile-time modulus ([`Fp`]).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational numbers, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// An exact field of coefficients.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Short descriptor used in certificates: `"Q"` or `"F<p>"`.
    fn descriptor() -> String;

    /// Characteristic of the field (0 for the rationals).
    fn characteristic() -> u64;

    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// `a * x`, for implementations that can skip work the operators do.
    fn mul_by(a: &Self, x: &Self) -> Self {
        a.clone() * x.clone()
    }

    /// `a * x - b * y`.
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Self {
        Self::mul_by(a, x) - Self::mul_by(b, y)
    }

    /// Returns `(a, b)` with `a * x == b * y` and `a` nonzero, choosing small
    /// integral factors when possible so reductions stay fraction-free.
    fn cancel_factors(x: &Self, y: &Self) -> (Self, Self) {
        (Self::one(), x.clone() / y.clone())
    }

    /// Scalar that turns the given coefficient list into its canonical
    /// primitive form (coprime integers with positive leading entry over Q,
    /// monic over a prime field). The list is nonempty and its first entry
    /// is the leading coefficient.
    fn primitive_scale(coeffs: &[&Self]) -> Self {
        coeffs[0].inv()
    }

    /// True for the values printed with a leading minus sign.
    fn is_negative(&self) -> bool {
        false
    }
}

impl Field for Rational {
    fn descriptor() -> String {
        "Q".to_string()
    }

    fn characteristic() -> u64 {
        0
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn inv(&self) -> Self {
        self.recip()
    }

    // Integer-valued rationals skip the normalizing gcds of the operators,
    // which dominate fraction-free reduction on large coefficients.
    fn mul_by(a: &Self, x: &Self) -> Self {
        if a.is_integer() && x.is_integer() {
            return BigRational::from_integer(a.numer() * x.numer());
        }
        if x.is_integer() && a.numer().is_one() {
            let (q, r) = x.numer().div_rem(a.denom());
            if r.is_zero() {
                return BigRational::from_integer(q);
            }
        }
        a * x
    }

    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Self {
        if a.is_integer() && x.is_integer() && b.is_integer() && y.is_integer() {
            return BigRational::from_integer(a.numer() * x.numer() - b.numer() * y.numer());
        }
        a * x - b * y
    }

    fn cancel_factors(x: &Self, y: &Self) -> (Self, Self) {
        if x.is_integer() && y.is_integer() {
            let (xn, yn) = (x.numer(), y.numer());
            let g = gcd(xn, yn);
            let mut a = yn / &g;
            let mut b = xn / &g;
            if a.is_negative() {
                a = -a;
                b = -b;
            }
            (BigRational::from_integer(a), BigRational::from_integer(b))
        } else {
            (Self::one(), x / y)
        }
    }

    fn primitive_scale(coeffs: &[&Self]) -> Self {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in coeffs {
            if !num_gcd.is_one() {
                num_gcd = gcd(&num_gcd, c.numer());
            }
            if !c.denom().is_one() {
                den_lcm = &den_lcm / gcd(&den_lcm, c.denom()) * c.denom();
            }
        }
        let mut scale = BigRational::new(den_lcm, num_gcd);
        if Signed::is_negative(coeffs[0]) {
            scale = -scale;
        }
        scale
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Nonnegative gcd. Division steps shrink a much larger operand first,
/// since the binary algorithm is slow on unbalanced inputs.
fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    loop {
        if a < b {
            std::mem::swap(&mut a, &mut b);
        }
        if b.is_zero() {
            return a;
        }
        if a.bits() <= b.bits() + 32 {
            return a.gcd(&b);
        }
        a %= &b;
    }
}

/// Element of the prime field with `P` elements, stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 > P / 2 {
            write!(f, "-{}", P - self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + P - rhs.0
        })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn descriptor() -> String {
        format!("F{}", P)
    }

    fn characteristic() -> u64 {
        P
    }

    fn from_bigint(n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(P));
        Fp(r.try_into().expect("residue fits in u64"))
    }

    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F{}", P);
        self.pow(P - 2)
    }

    fn is_negative(&self) -> bool {
        self.0 > P / 2
    }
}

/// Primes accepted for `field F p` declarations by the front end.
pub const SUPPORTED_PRIMES: &[u64] = &[2, 3, 5, 7, 32003];

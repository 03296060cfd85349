//! Exact scalar arithmetic over the rationals and over prime fields.
//!
//! Every scalar carries the field it lives in. Arithmetic between scalars
//! of different fields is a programming error and panics; there is no
//! implicit coercion between characteristics.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A coefficient field: the rationals (characteristic 0) or the prime
/// field of characteristic `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    /// The rationals.
    pub fn rationals() -> Self {
        FieldSpec { characteristic: 0 }
    }

    /// The field of the given characteristic: 0 for the rationals,
    /// otherwise a prime.
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(Error::InvalidCharacteristic(characteristic))
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn zero(&self) -> Scalar {
        self.lift_integer(0)
    }

    pub fn one(&self) -> Scalar {
        self.lift_integer(1)
    }

    /// The image of the integer `m` in this field.
    pub fn lift_integer(&self, m: i64) -> Scalar {
        let repr = match self.characteristic {
            0 => Repr::Rational(BigRational::from_integer(BigInt::from(m))),
            p => Repr::Residue((m as i128).rem_euclid(p as i128) as u64),
        };
        Scalar { repr, characteristic: self.characteristic }
    }

    /// Whether the image of `m` is zero or a zero divisor. In a field this
    /// is simply whether the image vanishes: `m == 0` over the rationals,
    /// `p | m` in characteristic `p`.
    pub fn is_zero_divisor_image(&self, m: i64) -> bool {
        self.lift_integer(m).is_zero()
    }

    /// Parses the canonical scalar string: `a` or `a/b` in lowest terms
    /// over the rationals, a decimal residue in characteristic `p`.
    /// Accepts a leading sign and non-reduced input; output of
    /// [`Scalar::to_string`] always round-trips.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidScalar("empty string".into()));
        }
        match self.characteristic {
            0 => {
                let (numer, denom) = match s.split_once('/') {
                    Some((a, b)) => (parse_bigint(a)?, parse_bigint(b)?),
                    None => (parse_bigint(s)?, BigInt::one()),
                };
                if denom.is_zero() {
                    return Err(Error::InvalidScalar(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar {
                    repr: Repr::Rational(BigRational::new(numer, denom)),
                    characteristic: 0,
                })
            }
            p => {
                let value = parse_bigint(s)?;
                let residue = ((&value % p) + p) % p;
                let digits = residue.to_u64_digits().1;
                Ok(Scalar {
                    repr: Repr::Residue(digits.first().copied().unwrap_or(0)),
                    characteristic: p,
                })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F_{p}"),
        }
    }
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| Error::InvalidScalar(format!("not an integer: {s:?}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue(u64),
}

/// An exact field element. See [`FieldSpec`] for construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    repr: Repr,
    characteristic: u64,
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        FieldSpec { characteristic: self.characteristic }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue(r) => *r == 1,
        }
    }

    /// The underlying rational, if this scalar lives over the rationals.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(q) => Some(q),
            Repr::Residue(_) => None,
        }
    }

    /// The underlying residue in `[0, p)`, if this scalar lives in
    /// characteristic `p`.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Rational(_) => None,
            Repr::Residue(r) => Some(*r),
        }
    }

    fn check_same_field(&self, rhs: &Scalar) {
        assert_eq!(
            self.characteristic, rhs.characteristic,
            "arithmetic between scalars of different fields (char {} vs char {})",
            self.characteristic, rhs.characteristic
        );
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        self.check_same_field(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a + b),
            (Repr::Residue(a), Repr::Residue(b)) => {
                Repr::Residue(add_mod(*a, *b, self.characteristic))
            }
            _ => unreachable!("repr always matches characteristic"),
        };
        Scalar { repr, characteristic: self.characteristic }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        self.check_same_field(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a * b),
            (Repr::Residue(a), Repr::Residue(b)) => {
                Repr::Residue(mul_mod(*a, *b, self.characteristic))
            }
            _ => unreachable!("repr always matches characteristic"),
        };
        Scalar { repr, characteristic: self.characteristic }
    }

    pub fn neg(&self) -> Scalar {
        let repr = match &self.repr {
            Repr::Rational(q) => Repr::Rational(-q),
            Repr::Residue(0) => Repr::Residue(0),
            Repr::Residue(r) => Repr::Residue(self.characteristic - r),
        };
        Scalar { repr, characteristic: self.characteristic }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let repr = match &self.repr {
            Repr::Rational(q) => Repr::Rational(q.recip()),
            Repr::Residue(r) => {
                let p = self.characteristic;
                Repr::Residue(pow_mod(*r, p - 2, p))
            }
        };
        Some(Scalar { repr, characteristic: self.characteristic })
    }

    /// Division; `None` when `rhs` is zero.
    pub fn div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|inverse| self.mul(&inverse))
    }
}

impl fmt::Display for Scalar {
    /// Canonical form: `a/b` in lowest terms with `b > 0` (plain `a` when
    /// `b = 1`) over the rationals; the decimal residue in characteristic
    /// `p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Residue(r) => write!(f, "{r}"),
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for `u64`.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

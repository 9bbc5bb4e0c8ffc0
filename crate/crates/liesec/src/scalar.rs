//! Exact scalars over ℚ and GF(p).
//!
//! A [`Scalar`] is either an arbitrary-precision reduced rational or a
//! residue in `[0, p)`; a [`FieldSpec`] names the field and owns all
//! arithmetic. No floating point appears anywhere in the crate.
//!
//! ## Canonical form
//!
//! Every value has a unique representation: rationals are stored reduced with
//! positive denominator (enforced by `num-rational`), residues are stored in
//! `[0, p)`. Canonical string form (used by the JSON algebra format) is
//! `"a/b"` in lowest terms with `b > 0`, or a bare integer string, for ℚ; and
//! the decimal residue for GF(p). Parsing is strict: non-canonical strings
//! (unreduced fractions, out-of-range residues) are rejected so that files
//! round-trip bit-exactly.
//!
//! Mixing scalars from different fields in one arithmetic call is a
//! programmer error and panics.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// The field a computation runs over: ℚ or GF(p) with p prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FieldSpec {
    /// The rational numbers.
    Rationals,
    /// The prime field GF(p).
    PrimeField(u64),
}

/// An exact field element. Construct and combine through [`FieldSpec`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    /// Reduced fraction with positive denominator.
    Rat(BigRational),
    /// Residue in `[0, p)`; the modulus lives in the ambient [`FieldSpec`].
    Mod(u64),
}

impl FieldSpec {
    /// Checks the invariants of the field description (primality of p).
    pub fn validate(self) -> Result<()> {
        match self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::PrimeField(p) => {
                if is_prime(p) {
                    Ok(())
                } else {
                    Err(Error::InvalidInput {
                        detail: format!("{p} is not prime"),
                    })
                }
            }
        }
    }

    /// True for GF(p).
    pub fn is_finite(self) -> bool {
        matches!(self, FieldSpec::PrimeField(_))
    }

    /// Field characteristic: 0 for ℚ, p for GF(p).
    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }

    /// Additive identity.
    pub fn zero(self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Mod(0),
        }
    }

    /// Multiplicative identity.
    pub fn one(self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::PrimeField(_) => Scalar::Mod(1),
        }
    }

    /// Embeds a machine integer.
    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let r = n.rem_euclid(p as i64);
                Scalar::Mod(r as u64)
            }
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldSpec::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 + *y as u128) % p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch in add"),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldSpec::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch in mul"),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldSpec::PrimeField(p), Scalar::Mod(x)) => {
                Scalar::Mod(if *x == 0 { 0 } else { p - *x })
            }
            _ => panic!("scalar/field mismatch in neg"),
        }
    }

    /// Multiplicative inverse. Panics on zero (programmer error: callers
    /// check for zero pivots first).
    pub fn inv(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Rat(x.recip())
            }
            (FieldSpec::PrimeField(p), Scalar::Mod(x)) => {
                assert!(*x != 0, "inverse of zero");
                // Fermat: x^(p-2) mod p.
                Scalar::Mod(pow_mod(*x, p - 2, p))
            }
            _ => panic!("scalar/field mismatch in inv"),
        }
    }

    pub fn div(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Strict parse of the canonical string form.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let bad = |detail: String| Error::InvalidInput { detail };
        match self {
            FieldSpec::Rationals => {
                let (num_str, den_str) = match s.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (s, None),
                };
                let num: BigInt = num_str
                    .parse()
                    .map_err(|_| bad(format!("bad rational numerator in {s:?}")))?;
                // Re-format to reject non-canonical integer spellings ("+1", "007", "-0").
                if num.to_string() != num_str {
                    return Err(bad(format!("non-canonical integer in {s:?}")));
                }
                match den_str {
                    None => Ok(Scalar::Rat(BigRational::from(num))),
                    Some(d) => {
                        let den: BigInt = d
                            .parse()
                            .map_err(|_| bad(format!("bad rational denominator in {s:?}")))?;
                        if den.to_string() != d {
                            return Err(bad(format!("non-canonical denominator in {s:?}")));
                        }
                        if !den.is_positive() {
                            return Err(bad(format!("denominator must be positive in {s:?}")));
                        }
                        if den.is_one() {
                            return Err(bad(format!("denominator 1 must be omitted in {s:?}")));
                        }
                        let r = BigRational::new(num, den);
                        // BigRational::new reduces; reject unreduced input.
                        if self.format_scalar(&Scalar::Rat(r.clone())) != s {
                            return Err(bad(format!("fraction not in lowest terms: {s:?}")));
                        }
                        Ok(Scalar::Rat(r))
                    }
                }
            }
            FieldSpec::PrimeField(p) => {
                let v: u64 = s
                    .parse()
                    .map_err(|_| bad(format!("bad residue in {s:?}")))?;
                if v.to_string() != s {
                    return Err(bad(format!("non-canonical residue in {s:?}")));
                }
                if v >= p {
                    return Err(bad(format!("residue {v} out of range for GF({p})")));
                }
                Ok(Scalar::Mod(v))
            }
        }
    }

    /// Canonical string form (inverse of [`FieldSpec::parse_scalar`]).
    pub fn format_scalar(self, a: &Scalar) -> String {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            (FieldSpec::PrimeField(_), Scalar::Mod(v)) => v.to_string(),
            _ => panic!("scalar/field mismatch in format"),
        }
    }

    /// All residues of a finite field, ascending.
    pub fn residues(self) -> Result<impl Iterator<Item = Scalar>> {
        match self {
            FieldSpec::Rationals => Err(Error::InfiniteField { op: "residues" }),
            FieldSpec::PrimeField(p) => Ok((0..p).map(Scalar::Mod)),
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_one(),
            Scalar::Mod(v) => *v == 1,
        }
    }

    /// The underlying residue of a finite-field scalar; `None` for a
    /// rational.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Mod(v) => Some(*v),
        }
    }

    /// Total order used for canonical lexicographic comparisons. Residues
    /// order by value; rationals by numeric value. Comparing across variants
    /// is a programmer error.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Mod(a), Scalar::Mod(b)) => a.cmp(b),
            _ => panic!("scalar variant mismatch in canonical_cmp"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Mod(v) => write!(f, "{v}"),
        }
    }
}

/// Modular exponentiation with u128 intermediates.
pub(crate) fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller–Rabin, exact for all u64.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;
    const F5: FieldSpec = FieldSpec::PrimeField(5);

    #[test]
    fn field_validation() {
        assert!(Q.validate().is_ok());
        assert!(FieldSpec::PrimeField(2).validate().is_ok());
        assert!(FieldSpec::PrimeField(7).validate().is_ok());
        assert!(FieldSpec::PrimeField(1).validate().is_err());
        assert!(FieldSpec::PrimeField(6).validate().is_err());
        assert!(FieldSpec::PrimeField(91).validate().is_err()); // 7 * 13
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let a = Q.parse_scalar("1/3").unwrap();
        let b = Q.parse_scalar("1/6").unwrap();
        let s = Q.add(&a, &b);
        assert_eq!(Q.format_scalar(&s), "1/2");
        let p = Q.mul(&a, &b);
        assert_eq!(Q.format_scalar(&p), "1/18");
        let d = Q.div(&a, &b);
        assert_eq!(Q.format_scalar(&d), "2");
    }

    #[test]
    fn gf_arithmetic_wraps() {
        let a = Scalar::Mod(3);
        let b = Scalar::Mod(4);
        assert_eq!(F5.add(&a, &b), Scalar::Mod(2));
        assert_eq!(F5.mul(&a, &b), Scalar::Mod(2));
        assert_eq!(F5.neg(&a), Scalar::Mod(2));
        assert_eq!(F5.inv(&a), Scalar::Mod(2)); // 3 * 2 = 6 = 1 mod 5
        assert_eq!(F5.from_i64(-7), Scalar::Mod(3));
    }

    #[test]
    fn strict_canonical_parsing() {
        assert!(Q.parse_scalar("2/4").is_err());
        assert!(Q.parse_scalar("1/-2").is_err());
        assert!(Q.parse_scalar("3/1").is_err());
        assert!(Q.parse_scalar("+1").is_err());
        assert!(Q.parse_scalar("007").is_err());
        assert_eq!(Q.format_scalar(&Q.parse_scalar("-5/3").unwrap()), "-5/3");
        assert!(F5.parse_scalar("5").is_err());
        assert!(F5.parse_scalar("-1").is_err());
        assert!(F5.parse_scalar("04").is_err());
        assert_eq!(F5.format_scalar(&F5.parse_scalar("4").unwrap()), "4");
    }

    #[test]
    fn roundtrip_format_parse() {
        for s in ["0", "1", "-1", "22/7", "-22/7", "1000000000000000000000/7"] {
            let v = Q.parse_scalar(s).unwrap();
            assert_eq!(Q.format_scalar(&v), s);
        }
    }
}

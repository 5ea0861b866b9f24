use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Z[r]/(r^2 = p r + q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QRing {
    pub p: i64,
    pub q: i64,
}

/// Sixth root of unity e^{i pi/3}: r^2 = r - 1. Here i*sqrt(3) = 2r - 1.
pub const OMEGA: QRing = QRing { p: 1, q: -1 };
/// Golden point (sqrt5 - 1)/2: r^2 = -r + 1. Here sqrt5 = 2r + 1 and r^{-1} = r + 1.
pub const GOLDEN: QRing = QRing { p: -1, q: 1 };

/// a + b r in a quadratic ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticInt {
    ring: QRing,
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadraticInt {
    pub fn new(ring: QRing, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadraticInt { ring, a: a.into(), b: b.into() }
    }

    pub fn zero(ring: QRing) -> Self {
        Self::new(ring, 0, 0)
    }

    pub fn one(ring: QRing) -> Self {
        Self::new(ring, 1, 0)
    }

    pub fn from_int(ring: QRing, a: BigInt) -> Self {
        QuadraticInt { ring, a, b: BigInt::zero() }
    }

    /// The generator r.
    pub fn root(ring: QRing) -> Self {
        Self::new(ring, 0, 1)
    }

    pub fn ring(&self) -> QRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The other root is p - r, so a + b r -> (a + b p) - b r.
    pub fn conj(&self) -> Self {
        QuadraticInt { ring: self.ring, a: &self.a + &self.b * self.ring.p, b: -&self.b }
    }

    /// x * conj(x), an integer.
    pub fn norm(&self) -> BigInt {
        let n = self * &self.conj();
        debug_assert!(n.b.is_zero());
        n.a
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.abs().is_one() {
            let c = self.conj();
            Some(QuadraticInt { ring: self.ring, a: &c.a * &n, b: &c.b * &n })
        } else {
            None
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.ring);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn scale(&self, c: i64) -> Self {
        QuadraticInt { ring: self.ring, a: &self.a * c, b: &self.b * c }
    }
}

impl fmt::Debug for QuadraticInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QuadraticInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = if self.ring == OMEGA { "w" } else if self.ring == GOLDEN { "r" } else { "s" };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}{}", self.b, r),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}{}", self.a, sign, self.b.abs(), r)
            }
        }
    }
}

impl<'a> Add<&'a QuadraticInt> for &'a QuadraticInt {
    type Output = QuadraticInt;
    fn add(self, o: &QuadraticInt) -> QuadraticInt {
        assert_eq!(self.ring, o.ring);
        QuadraticInt { ring: self.ring, a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl<'a> Sub<&'a QuadraticInt> for &'a QuadraticInt {
    type Output = QuadraticInt;
    fn sub(self, o: &QuadraticInt) -> QuadraticInt {
        assert_eq!(self.ring, o.ring);
        QuadraticInt { ring: self.ring, a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl<'a> Mul<&'a QuadraticInt> for &'a QuadraticInt {
    type Output = QuadraticInt;
    fn mul(self, o: &QuadraticInt) -> QuadraticInt {
        assert_eq!(self.ring, o.ring);
        // (a + b r)(c + d r) = ac + bd q + (ad + bc + bd p) r
        let bd = &self.b * &o.b;
        QuadraticInt {
            ring: self.ring,
            a: &self.a * &o.a + &bd * self.ring.q,
            b: &self.a * &o.b + &self.b * &o.a + &bd * self.ring.p,
        }
    }
}

impl Neg for &QuadraticInt {
    type Output = QuadraticInt;
    fn neg(self) -> QuadraticInt {
        QuadraticInt { ring: self.ring, a: -&self.a, b: -&self.b }
    }
}

impl Add for QuadraticInt {
    type Output = QuadraticInt;
    fn add(self, o: QuadraticInt) -> QuadraticInt {
        &self + &o
    }
}

impl Sub for QuadraticInt {
    type Output = QuadraticInt;
    fn sub(self, o: QuadraticInt) -> QuadraticInt {
        &self - &o
    }
}

impl Mul for QuadraticInt {
    type Output = QuadraticInt;
    fn mul(self, o: QuadraticInt) -> QuadraticInt {
        &self * &o
    }
}

impl Neg for QuadraticInt {
    type Output = QuadraticInt;
    fn neg(self) -> QuadraticInt {
        -&self
    }
}

/// i*sqrt(3) = 2w - 1 in the omega ring.
pub fn i_sqrt3() -> QuadraticInt {
    QuadraticInt::new(OMEGA, -1, 2)
}

/// sqrt(5) = 2r + 1 in the golden ring.
pub fn sqrt5() -> QuadraticInt {
    QuadraticInt::new(GOLDEN, 1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_identities() {
        assert_eq!(i_sqrt3().pow(2), QuadraticInt::new(OMEGA, -3, 0));
        assert_eq!(QuadraticInt::root(OMEGA).pow(6), QuadraticInt::one(OMEGA));
        assert_eq!(QuadraticInt::root(OMEGA).pow(3), QuadraticInt::new(OMEGA, -1, 0));
        assert_eq!(sqrt5().pow(2), QuadraticInt::new(GOLDEN, 5, 0));
        let r = QuadraticInt::root(GOLDEN);
        assert_eq!(r.inverse().unwrap(), QuadraticInt::new(GOLDEN, 1, 1));
        let w = QuadraticInt::root(OMEGA);
        assert_eq!(w.inverse().unwrap(), QuadraticInt::new(OMEGA, 1, -1));
    }

    #[test]
    fn conj_is_complex_conjugate() {
        // conj(i sqrt3) = -i sqrt3
        assert_eq!(i_sqrt3().conj(), -i_sqrt3());
        let x = QuadraticInt::new(OMEGA, 4, -7);
        assert_eq!(x.conj().conj(), x);
    }
}

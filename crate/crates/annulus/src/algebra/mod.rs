//! Exact arithmetic: Laurent polynomials, quadratic integer rings, integer matrices.

pub mod matrix;
pub mod poly;
pub mod quadratic;

pub use matrix::IntMatrix;
pub use poly::{LaurentPoly, Var};
pub use quadratic::{QRing, QuadraticInt, GOLDEN, OMEGA};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("signature needs a symmetric matrix")]
    NotSymmetric,
    #[error("evaluation point is not a unit but the polynomial has negative exponents")]
    NotInvertible,
    #[error("cannot parse polynomial {0:?}: {1}")]
    Parse(String, String),
    #[error("polynomial is not a Conway polynomial: {0}")]
    NotConway(String),
}

/// det(s V - V^T) as a polynomial in s, via Bareiss at n+1 integer points and interpolation.
pub fn alexander_pencil(v: &IntMatrix) -> LaurentPoly {
    let n = v.rows();
    let vt = v.transpose();
    let xs: Vec<i64> = (0..=n as i64).collect();
    let ys: Vec<BigInt> = xs.iter().map(|&s| v.scale(s).sub(&vt).det().unwrap()).collect();
    interpolate(&xs, &ys)
}

/// Lagrange interpolation with exact rationals; the result must have integer coefficients.
fn interpolate(xs: &[i64], ys: &[BigInt]) -> LaurentPoly {
    let n = xs.len();
    let mut coeffs = vec![BigRational::zero(); n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (s - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigInt::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(BigInt::from(xs[j]));
            }
            basis = next;
            denom *= xs[i] - xs[j];
        }
        let f = BigRational::new(ys[i].clone(), denom);
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &f;
        }
    }
    LaurentPoly::from_terms(
        Var::Q,
        coeffs.into_iter().enumerate().map(|(k, c)| {
            assert!(c.is_integer(), "non-integral interpolation");
            (k as i64, c.to_integer())
        }),
    )
}

/// Rewrite a Laurent polynomial in q with q -> -q^{-1} symmetry as a polynomial in z = q - q^{-1}.
pub fn q_to_z(p: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
    let mut rest = p.clone().with_var(Var::Q);
    let mut out = LaurentPoly::zero(Var::Z);
    let zq = LaurentPoly::from_terms(Var::Q, [(1, 1), (-1, -1)]);
    while let Some(top) = rest.max_exp() {
        if top < 0 {
            return Err(AlgebraError::NotConway(p.render_raw()));
        }
        let c = rest.coeff(top);
        out += &LaurentPoly::mono(Var::Z, top, c.clone());
        rest -= &zq.pow(top as u32).scale(&c);
    }
    Ok(out)
}

/// Conway polynomial from a Seifert matrix: (-1)^n det(q V - q^{-1} V^T) in z = q - q^{-1}.
/// The sign makes the unknot 1 and the positive Hopf link +z.
pub fn conway_from_seifert(v: &IntMatrix) -> Result<LaurentPoly, AlgebraError> {
    conway_from_seifert_bounded(v, v.rows())
}

/// As [`conway_from_seifert`], given that the result has degree at most `degree` in z
/// (for instance the first Betti number of any Seifert surface of the link). Large
/// matrices are evaluated modulo two primes at `degree + 1` points only.
pub fn conway_from_seifert_bounded(v: &IntMatrix, degree: usize) -> Result<LaurentPoly, AlgebraError> {
    let n = v.rows();
    if n == 0 {
        return Ok(LaurentPoly::one(Var::Z));
    }
    let degree = degree.min(n);
    // det(q^2 V - V^T) = q^n det(q V - q^{-1} V^T), supported on s^lo ..= s^(lo + degree)
    let pencil = if n <= MODULAR_THRESHOLD {
        alexander_pencil(v)
    } else {
        modular::pencil_window(v, (n - degree) / 2, degree + 1)?
    };
    let d = pencil.subst_power(2, Var::Q).shift(-(n as i64));
    let z = q_to_z(&d)?;
    Ok(if n % 2 == 1 { -z } else { z })
}

const MODULAR_THRESHOLD: usize = 24;

mod modular {
    use super::{AlgebraError, IntMatrix, LaurentPoly, Var};
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;

    const PRIMES: [u64; 2] = [(1 << 61) - 1, (1 << 62) - 57];

    fn mul(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, a, p);
            }
            a = mul(a, a, p);
            e >>= 1;
        }
        r
    }

    fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    fn reduce(x: &BigInt, p: u64) -> u64 {
        let r = x % BigInt::from(p);
        let r = if r < BigInt::from(0) { r + p } else { r };
        r.to_u64().unwrap()
    }

    fn det(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
        let n = m.len();
        let mut d = 1u64;
        for k in 0..n {
            let Some(piv) = (k..n).find(|&r| m[r][k] != 0) else { return 0 };
            if piv != k {
                m.swap(piv, k);
                d = (p - d) % p;
            }
            d = mul(d, m[k][k], p);
            let iv = inv(m[k][k], p);
            for r in k + 1..n {
                if m[r][k] == 0 {
                    continue;
                }
                let f = mul(m[r][k], iv, p);
                for c in k..n {
                    let t = mul(f, m[k][c], p);
                    m[r][c] = (m[r][c] + p - t) % p;
                }
            }
        }
        d
    }

    /// Coefficients of det(sV - V^T) known to vanish outside s^lo .. s^(lo + len - 1).
    pub(super) fn pencil_window(v: &IntMatrix, lo: usize, len: usize) -> Result<LaurentPoly, AlgebraError> {
        let n = v.rows();
        let mut residues = vec![];
        for &p in &PRIMES {
            let vm: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| reduce(v.get(i, j), p)).collect()).collect();
            let xs: Vec<u64> = (1..=len as u64).collect();
            let ys: Vec<u64> = xs
                .iter()
                .map(|&s| {
                    let m = (0..n)
                        .map(|i| (0..n).map(|j| (mul(s, vm[i][j], p) + p - vm[j][i]) % p).collect())
                        .collect();
                    mul(det(m, p), inv(pow(s, lo as u64, p), p), p)
                })
                .collect();
            residues.push(interpolate_mod(&xs, &ys, p));
        }
        // combine by CRT into the symmetric range
        let (p1, p2) = (BigInt::from(PRIMES[0]), BigInt::from(PRIMES[1]));
        let modulus = &p1 * &p2;
        let half = &modulus / 2;
        let inv1 = BigInt::from(inv(PRIMES[0] % PRIMES[1], PRIMES[1]));
        let mut terms = vec![];
        for k in 0..len {
            let (a, b) = (BigInt::from(residues[0][k]), BigInt::from(residues[1][k]));
            let t = (((&b - &a) % &p2 + &p2) % &p2 * &inv1) % &p2;
            let mut x = a + &p1 * t;
            if x > half {
                x -= &modulus;
            }
            if x.bits() > 100 {
                return Err(AlgebraError::NotConway("coefficient out of modular range".into()));
            }
            terms.push(((lo + k) as i64, x));
        }
        Ok(LaurentPoly::from_terms(Var::Q, terms))
    }

    fn interpolate_mod(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
        let n = xs.len();
        let mut out = vec![0u64; n];
        for i in 0..n {
            let mut basis = vec![1u64];
            let mut denom = 1u64;
            for j in 0..n {
                if j == i {
                    continue;
                }
                let mut next = vec![0u64; basis.len() + 1];
                for (k, &c) in basis.iter().enumerate() {
                    next[k + 1] = (next[k + 1] + c) % p;
                    next[k] = (next[k] + p - mul(c, xs[j] % p, p)) % p;
                }
                basis = next;
                denom = mul(denom, (xs[i] + p - xs[j]) % p, p);
            }
            let f = mul(ys[i], inv(denom, p), p);
            for (k, &c) in basis.iter().enumerate() {
                out[k] = (out[k] + mul(c, f, p)) % p;
            }
        }
        out
    }
}

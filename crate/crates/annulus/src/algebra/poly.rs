use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::quadratic::QuadraticInt;

/// Variable tag. `Q` is t^{1/2}; Jones polynomials live in `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    Q,
    Z,
    X,
    T,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::A => 'A',
            Var::Q => 'q',
            Var::Z => 'z',
            Var::X => 'x',
            Var::T => 't',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        Some(match c {
            'A' => Var::A,
            'q' => Var::Q,
            'z' => Var::Z,
            'x' => Var::X,
            't' => Var::T,
            _ => return None,
        })
    }
}

/// Integer Laurent polynomial in one variable. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, 1)
    }

    pub fn constant(var: Var, c: impl Into<BigInt>) -> Self {
        Self::mono(var, 0, c)
    }

    pub fn mono(var: Var, exp: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, c.into());
        p
    }

    /// The variable itself.
    pub fn gen(var: Var) -> Self {
        Self::mono(var, 1, 1)
    }

    pub fn from_terms<I, C>(var: Var, it: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(var);
        for (e, c) in it {
            p.add_term(e, c.into());
        }
        p
    }

    /// Coefficients listed from exponent `low` upward.
    pub fn from_coeffs(var: Var, low: i64, cs: &[i64]) -> Self {
        Self::from_terms(var, cs.iter().enumerate().map(|(i, &c)| (low + i as i64, c)))
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn join_var(&self, other: &Self) -> Var {
        if self.is_constant() {
            other.var
        } else {
            debug_assert!(
                other.is_constant() || self.var == other.var,
                "mixing variables {:?} and {:?}",
                self.var,
                other.var
            );
            self.var
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Multiply by var^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(e, x)| (e + k, x.clone())).collect() }
    }

    /// Substitute var -> var^k (k may be negative), retagging as `to`.
    pub fn subst_power(&self, k: i64, to: Var) -> Self {
        let mut p = Self::zero(to);
        for (e, c) in &self.terms {
            p.add_term(e * k, c.clone());
        }
        p
    }

    /// Exact division of every exponent by `k`; `None` if some exponent is not divisible.
    pub fn compress(&self, k: i64, to: Var) -> Option<Self> {
        if self.terms.keys().any(|e| e % k != 0) {
            return None;
        }
        Some(LaurentPoly { var: to, terms: self.terms.iter().map(|(e, c)| (e / k, c.clone())).collect() })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `self` raised to an integer power; only monomials with unit coefficient may take negative powers.
    pub fn powi(&self, n: i64) -> Self {
        if n >= 0 {
            return self.pow(n as u32);
        }
        assert!(self.len() == 1, "negative power of a non-monomial");
        let (e, c) = self.terms.iter().next().unwrap();
        assert!(c.abs().is_one(), "negative power of a non-unit");
        let sign = if c.is_negative() && n % 2 != 0 { -1 } else { 1 };
        Self::mono(self.var, e * n, sign)
    }

    pub fn eval_i64(&self, x: i64) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        let xb = BigInt::from(x);
        for (e, c) in &self.terms {
            if *e < 0 {
                if x.abs() != 1 {
                    return None;
                }
                let term = if x == -1 && (-e) % 2 == 1 { -c } else { c.clone() };
                acc += term;
            } else {
                acc += c * xb.pow(*e as u32);
            }
        }
        Some(acc)
    }

    /// Exact evaluation in a quadratic ring at `point`.
    pub fn eval_quadratic(&self, point: &QuadraticInt) -> Result<QuadraticInt, super::AlgebraError> {
        let ring = point.ring();
        let mut acc = QuadraticInt::zero(ring);
        if self.is_zero() {
            return Ok(acc);
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let inv = if lo < 0 { Some(point.inverse().ok_or(super::AlgebraError::NotInvertible)?) } else { None };
        // Horner from the top, then multiply by point^lo
        let mut e = hi;
        loop {
            acc = &acc + &QuadraticInt::from_int(ring, self.coeff(e));
            if e == lo {
                break;
            }
            acc = &acc * point;
            e -= 1;
        }
        if lo > 0 {
            acc = &acc * &point.pow(lo as u32);
        } else if lo < 0 {
            acc = &acc * &inv.unwrap().pow((-lo) as u32);
        }
        Ok(acc)
    }

    /// Ascending rendering, e.g. `z - z^3 - z^5`. Jones polynomials in `q` render in `t`
    /// with half-integer exponents written `t^(k/2)`.
    pub fn render(&self) -> String {
        if self.var == Var::Q {
            return self.render_with('t', |e| {
                if e % 2 == 0 {
                    (e / 2).to_string()
                } else {
                    format!("({}/2)", e)
                }
            });
        }
        self.render_with(self.var.symbol(), |e| e.to_string())
    }

    /// Rendering in the tagged variable itself (no q -> t conversion).
    pub fn render_raw(&self) -> String {
        self.render_with(self.var.symbol(), |e| e.to_string())
    }

    fn render_with(&self, sym: char, fmt_exp: impl Fn(i64) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match (*e, fmt_exp(*e)) {
                (0, _) => String::new(),
                (_, ex) if ex == "1" => sym.to_string(),
                (_, ex) => format!("{}^{}", sym, ex),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}{}", mag, mono));
            }
        }
        out
    }

    /// Parse a polynomial such as `-z^5 - z^3 + z`, `1+4x+6x^2`, `-t^(5/2)-t^(1/2)`,
    /// `2x^-1`, `3*z^{3}`. Unicode minus is accepted. A `t` polynomial is returned in `q = t^{1/2}`.
    pub fn parse(text: &str) -> Result<Self, super::AlgebraError> {
        let s: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        if s.is_empty() {
            return Err(super::AlgebraError::Parse(text.to_string(), "empty".into()));
        }
        let err = |m: &str| super::AlgebraError::Parse(text.to_string(), m.to_string());
        let b = s.as_bytes();
        let mut i = 0;
        let mut var: Option<Var> = None;
        // exponents kept doubled so half-integers survive
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        while i < b.len() {
            let mut sign = 1;
            if b[i] == b'+' || b[i] == b'-' {
                if b[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if !terms.is_empty() {
                return Err(err("expected + or -"));
            }
            let start = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let mut coeff: BigInt = if i > start { s[start..i].parse().unwrap() } else { BigInt::one() };
            let had_digits = i > start;
            if i < b.len() && b[i] == b'*' {
                i += 1;
            }
            let mut exp2 = 0i64;
            if i < b.len() && (b[i] as char).is_ascii_alphabetic() {
                let v = Var::from_symbol(b[i] as char).ok_or_else(|| err("unknown variable"))?;
                if let Some(w) = var {
                    if w != v {
                        return Err(err("mixed variables"));
                    }
                }
                var = Some(v);
                i += 1;
                exp2 = 2;
                if i < b.len() && b[i] == b'^' {
                    i += 1;
                    let (close, open) = match b.get(i) {
                        Some(b'(') => (Some(b')'), true),
                        Some(b'{') => (Some(b'}'), true),
                        _ => (None, false),
                    };
                    if open {
                        i += 1;
                    }
                    let es = i;
                    if i < b.len() && (b[i] == b'-' || b[i] == b'+') {
                        i += 1;
                    }
                    while i < b.len() && (b[i].is_ascii_digit() || (close.is_some() && b[i] == b'/')) {
                        i += 1;
                    }
                    let body = &s[es..i];
                    if let Some(cl) = close {
                        if b.get(i) != Some(&cl) {
                            return Err(err("unclosed exponent"));
                        }
                        i += 1;
                    }
                    exp2 = if let Some((n, d)) = body.split_once('/') {
                        let n: i64 = n.parse().map_err(|_| err("bad exponent"))?;
                        let d: i64 = d.parse().map_err(|_| err("bad exponent"))?;
                        match d {
                            1 => 2 * n,
                            2 => n,
                            _ => return Err(err("exponent denominator must be 1 or 2")),
                        }
                    } else {
                        2 * body.parse::<i64>().map_err(|_| err("bad exponent"))?
                    };
                }
            } else if !had_digits {
                return Err(err("empty term"));
            }
            coeff *= sign;
            terms.push((exp2, coeff));
        }
        let var = var.unwrap_or(Var::Z);
        let mut p = LaurentPoly::zero(var);
        for (e2, c) in terms {
            p.add_term(e2, c);
        }
        if var == Var::T {
            Ok(p.with_var(Var::Q))
        } else {
            p.compress(2, var).ok_or_else(|| err("half-integer exponent outside t"))
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.var.symbol(), self.render_raw())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.var = self.join_var(rhs);
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.var = self.join_var(rhs);
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.join_var(rhs));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.var = self.join_var(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.var = self.join_var(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

/// Convenience: an i64 coefficient vector `[c_lo, c_lo+1, ...]` if every coefficient fits.
pub fn coeff_vec(p: &LaurentPoly) -> Option<(i64, Vec<i64>)> {
    let lo = p.min_exp()?;
    let hi = p.max_exp()?;
    let v = (lo..=hi).map(|e| p.coeff(e).to_i64()).collect::<Option<Vec<_>>>()?;
    Some((lo, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_parse_roundtrip() {
        let p = LaurentPoly::from_coeffs(Var::Z, 1, &[1, 0, -1, 0, -1]);
        assert_eq!(p.render(), "z - z^3 - z^5");
        assert_eq!(LaurentPoly::parse(&p.render()).unwrap(), p);
        let h = LaurentPoly::from_terms(Var::Q, [(5, -1), (1, -1)]);
        assert_eq!(h.render(), "-t^(1/2) - t^(5/2)");
        assert_eq!(LaurentPoly::parse("-t^{5/2}-t^{1/2}").unwrap(), h);
        let q = LaurentPoly::from_terms(Var::X, [(-1, -2), (0, 1), (1, 2)]);
        assert_eq!(q.render(), "-2x^-1 + 1 + 2x");
        assert_eq!(LaurentPoly::parse("-2x^-1+1+2x").unwrap(), q);
    }

    #[test]
    fn parse_latex_style() {
        let p = LaurentPoly::parse("−z^{5}−3z^{3}+z").unwrap();
        assert_eq!(p, LaurentPoly::from_coeffs(Var::Z, 1, &[1, 0, -3, 0, -1]));
        assert!(LaurentPoly::parse("z^(1/2)").is_err());
        assert!(LaurentPoly::parse("z+x").is_err());
    }

    #[test]
    fn powi_monomial() {
        let m = LaurentPoly::mono(Var::A, 3, -1);
        assert_eq!(m.powi(-2), LaurentPoly::mono(Var::A, -6, 1));
        assert_eq!(m.powi(-1), LaurentPoly::mono(Var::A, -3, -1));
    }
}

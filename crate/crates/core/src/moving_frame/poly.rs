//! Sparse multivariate polynomials over ℚ in the frame unknowns
//! `a₁, a₂, a₃, b₁` and their first derivatives along `e₁`, `e₂`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::{Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A1,
    A2,
    A3,
    B1,
    E1A1,
    E2A1,
    E1A2,
    E2A2,
    E1A3,
    E2A3,
    E1B1,
    E2B1,
}

pub const NVARS: usize = 12;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::A1,
        Var::A2,
        Var::A3,
        Var::B1,
        Var::E1A1,
        Var::E2A1,
        Var::E1A2,
        Var::E2A2,
        Var::E1A3,
        Var::E2A3,
        Var::E1B1,
        Var::E2B1,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        [
            "a1", "a2", "a3", "b1", "e1(a1)", "e2(a1)", "e1(a2)", "e2(a2)", "e1(a3)", "e2(a3)", "e1(b1)",
            "e2(b1)",
        ][self.index()]
    }

    /// `e_dir(self)` for a base unknown; `None` for derivative symbols.
    pub fn derivative(self, dir: usize) -> Option<Var> {
        let pair = match self {
            Var::A1 => (Var::E1A1, Var::E2A1),
            Var::A2 => (Var::E1A2, Var::E2A2),
            Var::A3 => (Var::E1A3, Var::E2A3),
            Var::B1 => (Var::E1B1, Var::E2B1),
            _ => return None,
        };
        Some(if dir == 1 { pair.0 } else { pair.1 })
    }
}

type Exp = [u8; NVARS];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Exp, Rational>,
}

pub fn rat(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(q: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term([0; NVARS], q);
        p
    }

    pub fn int(n: i128) -> Self {
        Self::constant(Rational::from_integer(n))
    }

    pub fn ratio(n: i128, d: i128) -> Self {
        Self::constant(rat(n, d))
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        let mut p = Self::zero();
        p.add_term(e, Rational::one());
        p
    }

    fn add_term(&mut self, e: Exp, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().map(|&k| k as u32).sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, k: Rational) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, *c * k);
        }
        out
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.terms.get(&[0; NVARS]).copied().unwrap_or_else(Rational::zero)
    }

    /// Whether only the listed variables occur.
    pub fn uses_only(&self, vars: &[Var]) -> bool {
        self.terms.keys().all(|e| {
            e.iter()
                .enumerate()
                .all(|(i, &k)| k == 0 || vars.iter().any(|v| v.index() == i))
        })
    }

    pub fn partial(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let k = e[v.index()];
            if k > 0 {
                let mut e2 = *e;
                e2[v.index()] -= 1;
                out.add_term(e2, *c * Rational::from_integer(k as i128));
            }
        }
        out
    }

    /// Frame derivative `e_dir(p)` by the chain rule. Returns `None` if `p`
    /// already contains derivative symbols.
    pub fn frame_derivative(&self, dir: usize) -> Option<Self> {
        let mut out = Self::zero();
        for v in Var::ALL {
            let dp = self.partial(v);
            if dp.is_zero() {
                continue;
            }
            let dv = v.derivative(dir)?;
            out = out + dp * Poly::var(dv);
        }
        Some(out)
    }

    /// Coefficients of `p` as a polynomial in `v`: `p = Σ cₖ vᵏ`.
    pub fn coefficients_in(&self, v: Var) -> Vec<Poly> {
        let deg = self.terms.keys().map(|e| e[v.index()] as usize).max().unwrap_or(0);
        let mut out = vec![Poly::zero(); deg + 1];
        for (e, c) in &self.terms {
            let k = e[v.index()] as usize;
            let mut e2 = *e;
            e2[v.index()] = 0;
            out[k].add_term(e2, *c);
        }
        out
    }

    /// Substitutes a rational value for `v`.
    pub fn substitute(&self, v: Var, value: Rational) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let k = e[v.index()] as i32;
            let mut e2 = *e;
            e2[v.index()] = 0;
            out.add_term(e2, *c * num_traits::pow::pow(value, k as usize));
        }
        out
    }

    pub fn eval<S: Scalar>(&self, vals: &[S; NVARS]) -> S {
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut term = to_scalar::<S>(c);
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term *= vals[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// `q` with `self = q·other` when the division is exact by a constant.
    pub fn constant_ratio(&self, other: &Poly) -> Option<Rational> {
        let (e, c) = other.terms.iter().next()?;
        let k = self.terms.get(e).copied().unwrap_or_else(Rational::zero) / *c;
        (*self == other.scale(k)).then_some(k)
    }
}

pub fn to_scalar<S: Scalar>(q: &Rational) -> S {
    S::from_ratio(*q.numer() as i64, *q.denom() as i64)
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, r: Poly) -> Poly {
        for (e, c) in r.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, r: Poly) -> Poly {
        self + (-r)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-Rational::one())
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, r: Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &r.terms {
                let mut e = *e1;
                for i in 0..NVARS {
                    e[i] += e2[i];
                }
                out.add_term(e, *c1 * *c2);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Highest total degree first.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| std::cmp::Reverse((e.iter().map(|&k| k as u32).sum::<u32>(), **e)));
        for (n, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let name = Var::ALL[i].name();
                    if k == 1 {
                        name.to_string()
                    } else {
                        format!("{name}^{k}")
                    }
                })
                .collect();
            if monomial.is_empty() || !a.is_one() {
                write!(f, "{a}")?;
            }
            f.write_str(&monomial.join("*"))?;
        }
        Ok(())
    }
}

/// Dense univariate polynomial `Σ cₖ xᵏ` over a [`Scalar`] field.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<S>(pub Vec<S>);

impl<S: Scalar> UPoly<S> {
    pub fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        let t = self.clone().trimmed();
        (!t.0.is_empty()).then(|| t.0.len() - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn eval(&self, x: S) -> S {
        self.0.iter().rev().fold(S::zero(), |acc, c| acc * x + *c)
    }

    /// Polynomial remainder.
    pub fn rem(&self, d: &UPoly<S>) -> UPoly<S> {
        let d = d.clone().trimmed();
        let mut r = self.clone().trimmed();
        let dd = d.0.len() - 1;
        let lead = *d.0.last().expect("division by zero polynomial");
        while r.0.len() > dd && !r.0.is_empty() {
            let k = *r.0.last().unwrap() / lead;
            let shift = r.0.len() - 1 - dd;
            for (i, c) in d.0.iter().enumerate() {
                r.0[shift + i] -= k * *c;
            }
            r.0.pop();
            r = r.trimmed();
        }
        r
    }

    /// Quotient by `(x − root)`.
    pub fn deflate(&self, root: S) -> UPoly<S> {
        let c = &self.clone().trimmed().0;
        let n = c.len();
        let mut q = vec![S::zero(); n.saturating_sub(1)];
        let mut carry = S::zero();
        for i in (1..n).rev() {
            carry = c[i] + carry * root;
            q[i - 1] = carry;
        }
        UPoly(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UPoly<S>) -> UPoly<S> {
        let (mut a, mut b) = (self.clone().trimmed(), other.clone().trimmed());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        match a.0.last().copied() {
            Some(l) => UPoly(a.0.iter().map(|c| *c / l).collect()),
            None => a,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QSqrt3;

    #[test]
    fn arithmetic_and_display() {
        let a2 = Poly::var(Var::A2);
        let a3 = Poly::var(Var::A3);
        let p = a2.clone() * a2.clone() + a3.clone() * a3.clone();
        assert_eq!(p.to_string(), "a2^2 + a3^2");
        let q = (a2.clone() + Poly::int(1)) * (a2.clone() - Poly::int(1));
        assert_eq!(q, a2.clone() * a2 - Poly::int(1));
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn frame_derivative_uses_chain_rule() {
        let a1 = Poly::var(Var::A1);
        let p = a1.clone() * a1.clone() * Poly::int(3);
        let d = p.frame_derivative(2).unwrap();
        assert_eq!(d, Poly::int(6) * a1 * Poly::var(Var::E2A1));
        assert!(Poly::var(Var::E1A2).frame_derivative(1).is_none());
    }

    #[test]
    fn evaluation_and_substitution() {
        let p = Poly::var(Var::A2) * Poly::var(Var::A2) * Poly::ratio(2, 3) + Poly::var(Var::A3);
        let mut v = [QSqrt3::zero(); NVARS];
        v[Var::A2.index()] = QSqrt3::sqrt3_times(1, 4);
        v[Var::A3.index()] = QSqrt3::ratio(-1, 8);
        assert!(p.eval(&v).is_zero());
        let s = p.substitute(Var::A3, rat(1, 2));
        assert_eq!(s.constant_term(), rat(1, 2));
    }

    #[test]
    fn univariate_gcd_and_deflation() {
        let q = |n, d| QSqrt3::from_ratio(n, d);
        // (x − 1)(x + 2) and (x − 1)(x − 3)
        let a = UPoly(vec![q(-2, 1), q(1, 1), q(1, 1)]);
        let b = UPoly(vec![q(3, 1), q(-4, 1), q(1, 1)]);
        assert_eq!(a.gcd(&b), UPoly(vec![q(-1, 1), q(1, 1)]));
        assert_eq!(a.deflate(q(1, 1)), UPoly(vec![q(2, 1), q(1, 1)]));
    }
}

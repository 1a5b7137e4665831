//! Exact integer polynomials in one and two variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

pub(crate) fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// A polynomial in `t`; `coeffs[d]` is the coefficient of `t^d`. The
/// highest stored coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: i64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    /// Divides by `t^k`, if `t^k` divides.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|&c| c != 0) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().skip(k).copied().collect()))
    }

    /// Coefficients from the leading term down, with the factor `t^u` of
    /// lowest-degree zeros removed.
    pub fn coefficients_descending(&self) -> Vec<i64> {
        let low = self.coeffs.iter().take_while(|&&c| c == 0).count();
        self.coeffs[low..].iter().rev().copied().collect()
    }

    /// `p(1 - t)`.
    pub fn substitute_one_minus_t(&self) -> Self {
        let mut out = vec![0i64; self.coeffs.len()];
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            // (1 - t)^k = sum_j C(k, j) (-t)^j
            for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
                let b = binomial(k as i64, j as i64);
                let sign = if j % 2 == 0 { 1 } else { -1 };
                *slot += c * b * sign;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        self.scale(-1)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if d == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

/// A polynomial in `x` and `y`, stored sparsely by `(x-degree, y-degree)`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(c: i64, x_deg: u32, y_deg: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(x_deg, y_deg, c);
        p
    }

    pub fn add_term(&mut self, x_deg: u32, y_deg: u32, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry((x_deg, y_deg)).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&(x_deg, y_deg));
        }
    }

    pub fn coeff(&self, x_deg: u32, y_deg: u32) -> i64 {
        self.terms.get(&(x_deg, y_deg)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.terms.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by `x^a y^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), &c)| ((i + a, j + b), c))
                .collect(),
        }
    }

    /// `p(y, x)`.
    pub fn swap_variables(&self) -> Self {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(&(i, j), &c)| ((j, i), c)).collect(),
        }
    }

    /// `p(x, y)` with `x`, `y` replaced by univariate polynomials in `t`.
    pub fn substitute(&self, x: &IntPolynomial, y: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (&(i, j), &c) in &self.terms {
            let mut term = IntPolynomial::monomial(c, 0);
            for _ in 0..i {
                term = &term * x;
            }
            for _ in 0..j {
                term = &term * y;
            }
            out = &out + &term;
        }
        out
    }

    /// `p(t, 0)`.
    pub fn at_y_zero(&self) -> IntPolynomial {
        let max = self.terms.keys().filter(|k| k.1 == 0).map(|k| k.0).max();
        let Some(max) = max else {
            return IntPolynomial::zero();
        };
        IntPolynomial::new((0..=max).map(|i| self.coeff(i, 0)).collect())
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.terms
            .iter()
            .map(|(&(i, j), &c)| c * x.pow(i) * y.pow(j))
            .sum()
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.terms {
            out.add_term(i, j, c);
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(i, j), &a) in &self.terms {
            for (&(k, l), &b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), &c)| {
                let mut s = String::new();
                if i == 0 && j == 0 {
                    s.push_str(&c.to_string());
                } else if c == -1 {
                    s.push('-');
                } else if c != 1 {
                    s.push_str(&c.to_string());
                }
                for (v, d) in [("x", i), ("y", j)] {
                    match d {
                        0 => {}
                        1 => s.push_str(v),
                        _ => s.push_str(&format!("{v}^{d}")),
                    }
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + ").replace("+ -", "- "))
    }
}

/// Serialized as a list of `[x_degree, y_degree, coefficient]` triples.
impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<(u32, u32, i64)> = self.terms().collect();
        triples.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(3, -1), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn one_minus_t() {
        // t^2 -> 1 - 2t + t^2
        let p = IntPolynomial::monomial(1, 2).substitute_one_minus_t();
        assert_eq!(p.coeffs(), &[1, -2, 1]);
        let h = IntPolynomial::new(vec![0, 1, 3, 2, 1]);
        assert_eq!(h.substitute_one_minus_t().substitute_one_minus_t(), h);
    }

    #[test]
    fn display() {
        let p = IntPolynomial::new(vec![0, 1, 3, 2, 1]);
        assert_eq!(p.to_string(), "t^4 + 2t^3 + 3t^2 + t");
        assert_eq!(
            IntPolynomial::new(vec![2, -3, 1]).to_string(),
            "t^2 - 3t + 2"
        );
        let mut b = BivariatePolynomial::zero();
        b.add_term(2, 0, 1);
        b.add_term(1, 0, 1);
        b.add_term(0, 1, 1);
        assert_eq!(b.to_string(), "x^2 + x + y");
        b.add_term(1, 1, -2);
        assert_eq!(b.to_string(), "x^2 - 2xy + x + y");
    }

    #[test]
    fn arithmetic() {
        let a = IntPolynomial::new(vec![0, 1, 1]);
        assert_eq!((&a * &a).coeffs(), &[0, 0, 1, 2, 1]);
        assert!((&a - &a).is_zero());
        assert_eq!(
            a.shift(2).unshift(3).unwrap(),
            IntPolynomial::new(vec![1, 1])
        );
        assert!(a.unshift(2).is_none());
        assert_eq!(a.shift(1).coefficients_descending(), vec![1, 1]);
    }
}

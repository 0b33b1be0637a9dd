//! Sparse multivariate polynomials with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial over a fixed, named list of variables. Exponent vectors are
/// indexed like `vars`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl ExactPoly {
    pub fn zero(vars: &[&str]) -> Self {
        ExactPoly { vars: vars.iter().map(|v| v.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c.into());
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, 1)
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &[&str], name: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        let i = p.index_of(name)?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        p.add_term(e, BigInt::one());
        Ok(p)
    }

    pub fn monomial(vars: &[&str], exponents: Vec<u32>, c: impl Into<BigInt>) -> Self {
        assert_eq!(exponents.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.add_term(exponents, c.into());
        p
    }

    pub fn vars(&self) -> Vec<&str> {
        self.vars.iter().map(String::as_str).collect()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| Error::Invariant(format!("no variable `{name}`")))
    }

    /// Same polynomial with its variables renamed in place.
    pub fn with_var_names(mut self, names: &[&str]) -> Self {
        assert_eq!(names.len(), self.vars.len(), "variable count");
        self.vars = names.iter().map(|v| v.to_string()).collect();
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Sum of all coefficients, i.e. the value at `(1, .., 1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Drops every term whose exponent of `var` exceeds `max_degree`.
    pub fn truncate(&self, var: usize, max_degree: u32) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| e[var] <= max_degree).map(|(e, c)| (e.clone(), c.clone())).collect();
        ExactPoly { vars: self.vars.clone(), terms }
    }

    /// Coefficient of `var^k`, as a polynomial over the same variables.
    pub fn coefficient_of(&self, var: usize, k: u32) -> Self {
        let mut out = ExactPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in self.terms.iter().filter(|(e, _)| e[var] == k) {
            let mut e = e.clone();
            e[var] = 0;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Product with every term of degree above `max_degree` in `var` dropped.
    pub fn mul_truncated(&self, other: &Self, var: usize, max_degree: u32) -> Self {
        self.check_vars(other);
        let mut out = ExactPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                if ea[var] + eb[var] > max_degree {
                    continue;
                }
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.vars());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Replaces `var` by the polynomial `with`.
    pub fn substitute(&self, var: usize, with: &Self) -> Self {
        self.check_vars(with);
        let mut powers: Vec<Self> = vec![Self::one(&self.vars())];
        let mut out = ExactPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            while powers.len() <= k {
                let next = &powers[powers.len() - 1] * with;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[var] = 0;
            for (pe, pc) in &powers[k].terms {
                let ex = rest.iter().zip(pe).map(|(a, b)| a + b).collect();
                out.add_term(ex, c * pc);
            }
        }
        out
    }

    /// Sets `var` to the integer `value`.
    pub fn evaluate(&self, var: usize, value: i64) -> Self {
        self.substitute(var, &Self::constant(&self.vars(), value))
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = ExactPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in self.terms.iter().filter(|(e, _)| e[var] > 0) {
            let mut e = e.clone();
            let k = e[var];
            e[var] -= 1;
            out.add_term(e, c * BigInt::from(k));
        }
        out
    }

    /// Exact quotient by `x_a - x_b`; errors if the remainder is non-zero.
    pub fn div_by_difference(&self, a: usize, b: usize) -> Result<Self> {
        let vars = self.vars();
        let xb = Self::var(&vars, &self.vars[b])?;
        let Some(d) = self.degree_in(a) else {
            return Ok(Self::zero(&vars));
        };
        // Synthetic division in x_a by the root x_a = x_b.
        let mut quotient = Self::zero(&vars);
        let mut carry = Self::zero(&vars);
        for k in (0..=d).rev() {
            let c = &self.coefficient_of(a, k) + &(&carry * &xb);
            if k == 0 {
                if !c.is_zero() {
                    return Err(Error::Invariant(format!(
                        "division by {} - {} leaves remainder {c}",
                        self.vars[a], self.vars[b]
                    )));
                }
                break;
            }
            for (e, coef) in &c.terms {
                let mut e = e.clone();
                e[a] += k - 1;
                quotient.add_term(e, coef.clone());
            }
            carry = c;
        }
        Ok(quotient)
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomials over different variables");
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;

    fn add(self, other: &ExactPoly) -> ExactPoly {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;

    fn neg(self) -> ExactPoly {
        ExactPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;

    fn sub(self, other: &ExactPoly) -> ExactPoly {
        self + &(-other)
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;

    fn mul(self, other: &ExactPoly) -> ExactPoly {
        self.mul_truncated(other, 0, u32::MAX)
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let abs = c.abs();
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, v)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            match (abs.is_one(), mono.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => f.write_str(&mono.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

//! The bivariate recursion for `f_n(u,v)`, the closed form of `A(t)` and
//! univariate series output.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::ExactPoly;
use crate::error::{Error, Result};

/// Coefficients `c_0, c_1, ..` of a truncated power series in one variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    pub var: String,
    pub coeffs: Vec<BigInt>,
}

impl Series {
    pub fn new(var: &str, coeffs: Vec<BigInt>) -> Self {
        Series { var: var.to_string(), coeffs }
    }

    /// `{"var":"t","coeffs":[...]}` with coefficients as JSON integers of any size.
    pub fn to_json(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        format!("{{\"var\":\"{}\",\"coeffs\":[{}]}}", self.var, body.join(","))
    }

    /// b-file lines `n a(n)` for `n >= 1`, i.e. without the constant term.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (n, c) in self.coeffs.iter().enumerate().skip(1) {
            writeln!(out, "{n} {c}").expect("writing to a String");
        }
        out
    }

    pub fn to_poly(&self) -> ExactPoly {
        let vars = [self.var.as_str()];
        let mut p = ExactPoly::zero(&vars);
        for (k, c) in self.coeffs.iter().enumerate() {
            p.add_term(vec![k as u32], c.clone());
        }
        p
    }
}

const UV: [&str; 2] = ["u", "v"];

/// `f_n(u,v)`: the generating polynomial of the labels `(p,q)` at level `n`.
///
/// The quotient by `1 - v/u` is computed as an exact division of
/// `u (u f(u,v) - v f(v,v))` by `u - v`.
pub fn f_poly(n: usize) -> Result<ExactPoly> {
    f_polys(n).map(|mut all| all.pop().unwrap_or_else(|| ExactPoly::zero(&UV)))
}

/// `f_1, .., f_n`.
pub fn f_polys(n: usize) -> Result<Vec<ExactPoly>> {
    let u = ExactPoly::var(&UV, "u")?;
    let v = ExactPoly::var(&UV, "v")?;
    let mut out: Vec<ExactPoly> = Vec::with_capacity(n);
    if n == 0 {
        return Ok(out);
    }
    out.push(&u * &v);
    for _ in 1..n {
        let f = out.last().expect("non-empty");
        let f_vv = f.substitute(0, &v);
        let numerator = &u * &(&(&u * f) - &(&v * &f_vv));
        let head = numerator.div_by_difference(0, 1)?;
        let tail = &f.derivative(1).evaluate(1, 1) - &f.evaluate(1, 1);
        let next = &head + &(&(&u.pow(2) * &v) * &tail);
        out.push(next);
    }
    Ok(out)
}

fn rational_sqrt_one_minus_8t(degree: usize) -> Vec<BigRational> {
    // binom(1/2, k) (-8)^k, built term by term.
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut out = Vec::with_capacity(degree + 1);
    let mut c = BigRational::one();
    for k in 0..=degree {
        out.push(c.clone());
        let kk = BigRational::from_integer(BigInt::from(k as u64));
        c = c * (&half - &kk) / (&kk + BigRational::one()) * BigRational::from_integer(BigInt::from(-8));
    }
    out
}

/// `A(t) = (3t - 4t^2 - t sqrt(1-8t)) / (4t^2 - 4t + 2)` through `t^n`.
///
/// Every coefficient must come out a non-negative integer.
pub fn closed_form_series(n: usize) -> Result<Series> {
    let root = rational_sqrt_one_minus_8t(n);
    let mut numer = vec![BigRational::zero(); n + 1];
    for k in 1..=n {
        numer[k] = -root[k - 1].clone();
    }
    let add = |numer: &mut Vec<BigRational>, k: usize, c: i64| {
        if k <= n {
            numer[k] += BigRational::from_integer(BigInt::from(c));
        }
    };
    add(&mut numer, 1, 3);
    add(&mut numer, 2, -4);
    // Divide by 2 - 4t + 4t^2.
    let denom = [BigInt::from(2), BigInt::from(-4), BigInt::from(4)];
    let mut a: Vec<BigRational> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut c = numer[k].clone();
        for (j, d) in denom.iter().enumerate().skip(1) {
            if j <= k {
                c -= &a[k - j] * BigRational::from_integer(d.clone());
            }
        }
        a.push(c / BigRational::from_integer(denom[0].clone()));
    }
    let coeffs = a
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            if c.is_integer() && !c.is_negative() {
                Ok(c.to_integer())
            } else {
                Err(Error::Invariant(format!("coefficient of t^{k} is {c}, not a non-negative integer")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Series::new("t", coeffs))
}

fn mul_trunc(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `(2t^2-2t+1)A^2 + (4t^2-3t)A + 2t^2` modulo `t^(n+1)`.
pub fn algebraic_residual(a: &[BigInt], n: usize) -> Vec<BigInt> {
    let poly = |cs: &[i64]| cs.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
    let a2 = mul_trunc(a, a, n);
    let first = mul_trunc(&poly(&[1, -2, 2]), &a2, n);
    let second = mul_trunc(&poly(&[0, -3, 4]), a, n);
    let mut out: Vec<BigInt> = first.into_iter().zip(second).map(|(x, y)| x + y).collect();
    if n >= 2 {
        out[2] += 2;
    }
    out
}

/// Whether the closed form satisfies the quadratic equation through `t^n`.
pub fn verify_algebraic_equation(n: usize) -> Result<bool> {
    let a = closed_form_series(n)?;
    Ok(algebraic_residual(&a.coeffs, n).iter().all(Zero::is_zero))
}

//! Saturated entries: the refinement `A(t,q)` and its functional equation.

use num_bigint::BigInt;

use super::poly::ExactPoly;
use super::series::closed_form_series;
use crate::error::Result;
use crate::invseq::{avoiders_201_210, inv_statistics};

const TQ: [&str; 2] = ["t", "q"];

/// `sum_{n=1..n_max} t^n sum_{e in I_n(201,210)} q^satu(e)`, by enumeration.
pub fn satu_series(n_max: usize) -> ExactPoly {
    let mut out = ExactPoly::zero(&TQ);
    for n in 1..=n_max {
        for e in avoiders_201_210(n) {
            out.add_term(vec![n as u32, inv_statistics(&e).satu as u32], BigInt::from(1));
        }
    }
    out
}

/// Which sign the `q^2 (A(t) - t) / 2` term carries on the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatuForm {
    /// `-`, as collecting the case analysis gives.
    Derived,
    /// `+`, as the equation is usually printed.
    Printed,
}

/// Left minus right side of the saturated-entry equation multiplied by
/// `2(1-q)`, through `t^n_max`, with `A(t,q)` by enumeration and `A(t)` from
/// the closed form:
///
/// `(2(1-q) + 2tq^2 - q(1-q)(1-tq)H) A(t,q) - 2tq(1-q) -/+ q^2(1-q)(A-t) - 2tqA`
/// where `H = (A(t) - t)/t`.
pub fn satu_residual(n_max: usize, form: SatuForm) -> Result<ExactPoly> {
    let a_q = satu_series(n_max);
    let a = closed_form_series(n_max + 1)?;
    let lift = |coeffs: &[BigInt], shift: usize| {
        let mut p = ExactPoly::zero(&TQ);
        for (k, c) in coeffs.iter().enumerate().skip(shift) {
            p.add_term(vec![(k - shift) as u32, 0], c.clone());
        }
        p
    };
    let a_t = lift(&a.coeffs, 0).truncate(0, n_max as u32);
    let t = ExactPoly::var(&TQ, "t")?;
    let q = ExactPoly::var(&TQ, "q")?;
    let c = |k: i64| ExactPoly::constant(&TQ, k);
    let n = n_max as u32;
    let mul = |x: &ExactPoly, y: &ExactPoly| x.mul_truncated(y, 0, n);
    let h = (&lift(&a.coeffs, 1) - &c(1)).truncate(0, n);

    let one_minus_q = &c(1) - &q;
    let tq = &t * &q;
    let q2 = &q * &q;
    let kernel = &(&(&c(2) * &one_minus_q) + &(&c(2) * &(&t * &q2))) - &mul(&(&q * &one_minus_q), &mul(&(&c(1) - &tq), &h));
    let lhs = mul(&kernel, &a_q);
    let a_minus_t = &a_t - &t;
    let middle = mul(&(&q2 * &one_minus_q), &a_minus_t);
    let mut rhs = &(&c(2) * &mul(&tq, &one_minus_q)) + &(&c(2) * &mul(&tq, &a_t));
    rhs = match form {
        SatuForm::Derived => &rhs - &middle,
        SatuForm::Printed => &rhs + &middle,
    };
    Ok((&lhs - &rhs).truncate(0, n))
}

/// Whether the saturated-entry equation holds through `t^n_max`.
pub fn verify_satu_equation(n_max: usize) -> Result<bool> {
    Ok(satu_residual(n_max, SatuForm::Derived)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_coefficients() {
        let a = satu_series(2);
        assert_eq!(a.coeff(&[1, 1]), BigInt::from(1));
        assert_eq!(a.coeff(&[2, 1]), BigInt::from(1));
        assert_eq!(a.coeff(&[2, 2]), BigInt::from(1));
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn equation_holds_with_derived_sign() {
        assert!(verify_satu_equation(7).unwrap());
        assert!(!satu_residual(7, SatuForm::Printed).unwrap().is_zero());
    }
}

//! Truncated formal power series and the closed-form generating function
//!
//! ```text
//! F(x) = (A(x) - sqrt(A(x)^2 - 4 x^p)) / (2 x^p),    A(x) = 1 - x - ... - x^(p-1)
//! ```
//!
//! of the core counts, which satisfies `F - 1 = (x + ... + x^(p-1)) F + x^p F^2`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_integer::Integer as _;
use num_traits::{Num, Signed};

use crate::counting::CountTable;
use crate::error::{Error, Result};
use crate::{Count, Rational};

/// Scalars usable as series coefficients.
pub trait Coeff: Num + Clone + fmt::Debug {}

impl<T: Num + Clone + fmt::Debug> Coeff for T {}

/// `c_0 + c_1 x + ... + c_N x^N + O(x^(N+1))`.
#[derive(Debug, Clone, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    /// Order is `coeffs.len() - 1`; an empty vector becomes the zero series
    /// of order 0.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(C::zero());
        }
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    /// A polynomial read as a series of the given order, padded or cut.
    pub fn from_polynomial(poly: &[C], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (dst, src) in s.coeffs.iter_mut().zip(poly) {
            *dst = src.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_polynomial(&self.coeffs[..=order.min(self.order())], order.min(self.order()))
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order());
        for n in k..=self.order() {
            s.coeffs[n] = self.coeffs[n - k].clone();
        }
        s
    }

    /// Divides by `x^k`; the first `k` coefficients must be zero. The order
    /// drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        assert!(k <= self.order(), "shift exceeds order");
        if let Some(index) = (0..k).find(|&n| !self.coeffs[n].is_zero()) {
            return Err(Error::NonVanishingNumerator {
                index,
                value: format!("{:?}", self.coeffs[index]),
            });
        }
        Ok(Series {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn scale(&self, c: &C) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Branch with constant term 1: `R_n = (q_n - sum_{k=1}^{n-1} R_k R_{n-k}) / 2`.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantTerm);
        }
        let two = C::one() + C::one();
        let mut root = Vec::with_capacity(self.coeffs.len());
        root.push(C::one());
        for n in 1..=self.order() {
            let cross = (1..n).fold(C::zero(), |acc, k| acc + root[k].clone() * root[n - k].clone());
            root.push((self.coeffs[n].clone() - cross) / two.clone());
        }
        Ok(Series { coeffs: root })
    }
}

impl<C: Coeff> Add for &Series<C> {
    type Output = Series<C>;

    fn add(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|n| self.coeffs[n].clone() + rhs.coeffs[n].clone())
                .collect(),
        }
    }
}

impl<C: Coeff> Sub for &Series<C> {
    type Output = Series<C>;

    fn sub(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|n| self.coeffs[n].clone() - rhs.coeffs[n].clone())
                .collect(),
        }
    }
}

/// Cauchy product truncated to the smaller order.
impl<C: Coeff> Mul for &Series<C> {
    type Output = Series<C>;

    fn mul(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|n| {
                    (0..=n).fold(C::zero(), |acc, k| {
                        acc + self.coeffs[k].clone() * rhs.coeffs[n - k].clone()
                    })
                })
                .collect(),
        }
    }
}

impl<C: fmt::Display> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<C: fmt::Display> Series<C> {
    /// Machine-readable coefficients as decimal strings (`a/b` for rationals).
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl Series<Rational> {
    /// Converts to counts, failing on any negative or non-integral entry.
    pub fn to_counts(&self) -> Result<Vec<Count>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if !c.is_integer() || c.is_negative() {
                    return Err(Error::NonIntegralCoefficient {
                        index,
                        value: c.to_string(),
                    });
                }
                Ok(c.to_integer().to_biguint().expect("nonnegative"))
            })
            .collect()
    }
}

pub fn sqrt_series<C: Coeff>(q: &Series<C>) -> Result<Series<C>> {
    q.sqrt()
}

/// `f_0, ..., f_n` from the recurrence.
pub fn series_from_recurrence<C: Coeff>(p: usize, n: usize) -> Series<C> {
    Series::new(CountTable::<C>::new(p).prefix(n).to_vec())
}

/// `x + x^2 + ... + x^(p-1)` to the given order.
fn linear_part<C: Coeff>(p: usize, order: usize) -> Series<C> {
    let mut s = Series::zero(order);
    for i in 1..p.min(order + 1) {
        s.coeffs[i] = C::one();
    }
    s
}

/// Checks `F - 1 = (x + ... + x^(p-1)) F + x^p F^2` coefficientwise through
/// the order of `s`. Every compared coefficient depends only on known
/// coefficients of `s`.
pub fn check_functional_equation<C: Coeff>(s: &Series<C>, p: usize) -> bool {
    let order = s.order();
    let lhs = s - &Series::one(order);
    let rhs = &(&linear_part(p, order) * s) + &(s * s).shift_up(p);
    lhs == rhs
}

/// `(A - sqrt(A^2 - 4 x^p)) / x^p` to order `n`. The numerator is computed
/// to order `n + p` and its first `p` coefficients must vanish.
fn closed_form_numerator<C: Coeff>(p: usize, n: usize) -> Result<Series<C>> {
    assert!(p >= 1, "p must be positive");
    let order = n + p;
    let a = &Series::one(order) - &linear_part(p, order);
    let four = C::one() + C::one() + C::one() + C::one();
    let radicand = &(&a * &a) - &Series::one(order).shift_up(p).scale(&four);
    let numerator = &a - &radicand.sqrt()?;
    numerator.shift_down(p)
}

fn halve<C: Coeff>(s: Series<C>) -> Series<C> {
    let two = C::one() + C::one();
    Series {
        coeffs: s.coeffs.into_iter().map(|c| c / two.clone()).collect(),
    }
}

/// Expands the closed-form generating function to order `n`.
pub fn closed_form_series<C: Coeff>(p: usize, n: usize) -> Result<Series<C>> {
    Ok(halve(closed_form_numerator(p, n)?))
}

/// Closed-form coefficients as exact counts. The numerator must consist of
/// even integers, and the halved coefficients must be nonnegative.
pub fn closed_form_counts(p: usize, n: usize) -> Result<Vec<Count>> {
    let numerator = closed_form_numerator::<Rational>(p, n)?;
    if let Some(c) = numerator
        .coeffs
        .iter()
        .find(|c| !(c.is_integer() && c.to_integer().is_even()))
    {
        return Err(Error::InexactDivision {
            numerator: c.to_string(),
            denominator: "2".into(),
        });
    }
    halve(numerator).to_counts()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExactSeries;
    use proptest::prelude::*;

    fn q(xs: &[i64]) -> ExactSeries {
        Series::new(xs.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    fn counts(xs: &[u64]) -> Vec<Count> {
        xs.iter().map(|&x| Count::from(x)).collect()
    }

    #[test]
    fn recurrence_prefixes() {
        assert_eq!(series_from_recurrence::<Rational>(2, 6), q(&[1, 1, 2, 4, 9, 21, 51]));
        assert_eq!(series_from_recurrence::<Rational>(1, 5), q(&[1, 1, 2, 5, 14, 42]));
        assert_eq!(series_from_recurrence::<Rational>(3, 5), q(&[1, 1, 2, 4, 8, 17]));
    }

    #[test]
    fn functional_equation_examples() {
        assert!(check_functional_equation(&q(&[1, 1, 2, 5, 14, 42]), 1));
        assert!(check_functional_equation(&series_from_recurrence::<Rational>(2, 12), 2));
        assert!(!check_functional_equation(&q(&[1, 1, 1, 1]), 1));
    }

    #[test]
    fn sqrt_examples() {
        let r = q(&[1, -4, 0, 0]).sqrt().unwrap();
        assert_eq!(r, q(&[1, -2, -2, -4]));
        let r = q(&[1, -2, -3, 0]).sqrt().unwrap();
        assert_eq!(r, q(&[1, -1, -2, -2]));
        assert_eq!(q(&[1, 0, 0, 0, 0]).sqrt().unwrap(), q(&[1, 0, 0, 0, 0]));
        assert_eq!(q(&[2, 1]).sqrt(), Err(Error::SqrtConstantTerm));
        // square back
        let r = q(&[1, -2, -3, 0, 0, 0, 0]).sqrt().unwrap();
        assert_eq!(&r * &r, q(&[1, -2, -3, 0, 0, 0, 0]));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_counts(2, 6).unwrap(), counts(&[1, 1, 2, 4, 9, 21, 51]));
        assert_eq!(closed_form_counts(1, 4).unwrap(), counts(&[1, 1, 2, 5, 14]));
        assert_eq!(closed_form_counts(3, 5).unwrap(), counts(&[1, 1, 2, 4, 8, 17]));
    }

    #[test]
    fn closed_form_matches_recurrence() {
        for p in 1..=4 {
            for n in [0, 1, 7, 30] {
                let closed = closed_form_series::<Rational>(p, n).unwrap();
                assert_eq!(closed, series_from_recurrence::<Rational>(p, n), "p={p} n={n}");
                assert!(check_functional_equation(&closed, p));
            }
        }
    }

    #[test]
    fn float_closed_form_is_exact_at_small_order() {
        for p in 1..=4 {
            let closed = closed_form_series::<f64>(p, 20).unwrap();
            let rec = series_from_recurrence::<f64>(p, 20);
            assert_eq!(closed, rec);
        }
    }

    #[test]
    fn display_and_strings() {
        assert_eq!(q(&[1, 1, 2]).to_string(), "1, 1, 2");
        let half = Series::new(vec![Rational::new(1.into(), 2.into())]);
        assert_eq!(half.to_strings(), vec!["1/2".to_string()]);
        assert!(half.to_counts().is_err());
        assert!(q(&[1, -1]).to_counts().is_err());
    }

    proptest! {
        #[test]
        fn sqrt_squares_back(tail in prop::collection::vec(-20i64..=20, 0..15)) {
            let mut coeffs = vec![1];
            coeffs.extend(tail);
            let s = q(&coeffs);
            let r = s.sqrt().unwrap();
            prop_assert_eq!(&r * &r, s);
        }
    }
}

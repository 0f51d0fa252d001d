//! Counting `(t, t + 1, ..., t + p)`-cores by recurrence, plus closed forms
//! for the Catalan and Motzkin cases and the classical `(t1, t2)` results.
//!
//! For fixed `p` the counts satisfy `f_t = 0` for `t < 0`, `f_0 = 1`, and
//!
//! ```text
//! f_t = sum_{i=1}^{p-1} f_{t-i} + sum_{j=0}^{t-p} f_j f_{t-p-j}    (t >= 1)
//! ```

use std::ops::{Add, Mul};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{Count, Rational};

/// Memoized values of the recurrence for one `p`, over any semiring-like
/// scalar. With `Count` the values are exact.
#[derive(Debug, Clone)]
pub struct CountTable<N> {
    p: usize,
    values: Vec<N>,
}

impl<N> CountTable<N>
where
    N: Clone + Zero + One + Add<Output = N> + Mul<Output = N>,
{
    pub fn new(p: usize) -> Self {
        assert!(p >= 1, "p must be positive");
        CountTable {
            p,
            values: vec![N::one()],
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// `f_t`; zero for negative `t`.
    pub fn get(&mut self, t: isize) -> N {
        if t < 0 {
            return N::zero();
        }
        let t = t as usize;
        self.extend_to(t);
        self.values[t].clone()
    }

    /// `f_0, ..., f_n`.
    pub fn prefix(&mut self, n: usize) -> &[N] {
        self.extend_to(n);
        &self.values[..=n]
    }

    fn extend_to(&mut self, n: usize) {
        let p = self.p;
        while self.values.len() <= n {
            let t = self.values.len();
            let f = &self.values;
            let linear = (1..p)
                .filter(|&i| i <= t)
                .fold(N::zero(), |acc, i| acc + f[t - i].clone());
            let quadratic = match t.checked_sub(p) {
                Some(m) => (0..=m).fold(N::zero(), |acc, j| acc + f[j].clone() * f[m - j].clone()),
                None => N::zero(),
            };
            self.values.push(linear + quadratic);
        }
    }
}

/// Number of `(t, ..., t + p)`-cores.
pub fn f(t: isize, p: usize) -> Count {
    CountTable::<Count>::new(p).get(t)
}

/// `n / d`, failing unless the remainder is zero.
pub fn exact_div(n: &Count, d: &Count) -> Result<Count> {
    let (q, r) = n.div_rem(d);
    if !r.is_zero() || &(&q * d) != n {
        return Err(Error::InexactDivision {
            numerator: n.to_string(),
            denominator: d.to_string(),
        });
    }
    Ok(q)
}

pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    // Each partial product is a binomial coefficient, so every step divides.
    (0..k).fold(Count::one(), |acc, i| {
        exact_div(&(acc * Count::from(n - i)), &Count::from(i + 1))
            .expect("partial products of binomials are integral")
    })
}

/// `C(2t + 1, t) / (2t + 1)`.
pub fn catalan(t: usize) -> Count {
    exact_div(&binomial(2 * t + 1, t), &Count::from(2 * t + 1))
        .expect("Catalan quotient is integral")
}

/// `sum_k C(t, 2k) C(2k, k) / (k + 1)`, each term an integer.
pub fn motzkin(t: usize) -> Count {
    (0..=t / 2)
        .map(|k| {
            exact_div(&(binomial(t, 2 * k) * binomial(2 * k, k)), &Count::from(k + 1))
                .expect("Motzkin terms are integral")
        })
        .fold(Count::zero(), |acc, term| acc + term)
}

fn require_coprime(t1: usize, t2: usize) -> Result<()> {
    if t1.gcd(&t2) != 1 {
        return Err(Error::NotCoprime(t1, t2));
    }
    Ok(())
}

/// Number of `(t1, t2)`-cores for coprime `t1, t2`: `C(t1 + t2, t1) / (t1 + t2)`.
pub fn anderson(t1: usize, t2: usize) -> Result<Count> {
    require_coprime(t1, t2)?;
    exact_div(&binomial(t1 + t2, t1), &Count::from(t1 + t2))
}

/// Largest size of a `(t1, t2)`-core: `(t1² - 1)(t2² - 1) / 24`.
pub fn oracle_max_size(t1: usize, t2: usize) -> Result<Count> {
    require_coprime(t1, t2)?;
    if t1 == 0 || t2 == 0 {
        return Err(Error::InvalidSpec("moduli must be positive".into()));
    }
    let a = Count::from(t1 * t1 - 1);
    let b = Count::from(t2 * t2 - 1);
    exact_div(&(a * b), &Count::from(24u32))
}

/// Average size of a `(t, t + 1)`-core: `C(t + 1, 3) / 2`.
pub fn oracle_avg_size_consecutive(t: usize) -> Rational {
    Rational::new(binomial(t + 1, 3).into(), 2.into())
}

/// Number of self-conjugate `(t1, t2)`-cores: `C(⌊t1/2⌋ + ⌊t2/2⌋, ⌊t1/2⌋)`.
pub fn oracle_self_conjugate(t1: usize, t2: usize) -> Result<Count> {
    require_coprime(t1, t2)?;
    Ok(binomial(t1 / 2 + t2 / 2, t1 / 2))
}

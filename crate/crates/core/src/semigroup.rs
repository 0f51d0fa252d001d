//! Membership in the numerical semigroup generated by a set of moduli.

/// `reach[n]` is true iff `n = Σ a_k g_k` for nonnegative integers `a_k`,
/// for every `n` in `0..=limit`.
pub fn reachable_up_to(generators: &[usize], limit: usize) -> Vec<bool> {
    let mut reach = vec![false; limit + 1];
    reach[0] = true;
    for n in 1..=limit {
        reach[n] = generators.iter().any(|&g| g > 0 && g <= n && reach[n - g]);
    }
    reach
}

/// Precomputed membership table covering `0..=limit`.
#[derive(Debug, Clone)]
pub struct Semigroup {
    generators: Vec<usize>,
    reach: Vec<bool>,
}

impl Semigroup {
    pub fn new(generators: &[usize], limit: usize) -> Self {
        Semigroup {
            generators: generators.to_vec(),
            reach: reachable_up_to(generators, limit),
        }
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn limit(&self) -> usize {
        self.reach.len() - 1
    }

    /// Panics if `n` exceeds the precomputed limit.
    pub fn contains(&self, n: usize) -> bool {
        self.reach[n]
    }
}

//! Weyl chambers as realizable sign vectors over the positive roots.

use std::fmt;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::roots::RootDatum;
use crate::Rational;

/// Sign vector `(ε_μ)_{μ ∈ Φ⁺}`, written as a string over `{+, -}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChamberId(String);

impl ChamberId {
    pub fn new(signs: Vec<bool>) -> Self {
        ChamberId(signs.iter().map(|&s| if s { '+' } else { '-' }).collect())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn signs(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.chars().map(|c| c == '+')
    }
}

impl fmt::Display for ChamberId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Exact feasibility of `{x : a·x ≥ b}` by Fourier–Motzkin elimination.
pub fn fourier_motzkin_feasible(mut system: Vec<(Vec<Rational>, Rational)>, vars: usize) -> bool {
    for j in 0..vars {
        let mut keep = Vec::new();
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for (a, b) in system {
            let c = a[j].clone();
            if c.is_zero() {
                keep.push((a, b));
                continue;
            }
            // normalize so the coefficient of x_j is ±1
            let s = c.abs();
            let a: Vec<Rational> = a.iter().map(|x| x / &s).collect();
            let b = b / &s;
            if c.is_positive() {
                lower.push((a, b));
            } else {
                upper.push((a, b));
            }
        }
        for (la, lb) in &lower {
            for (ua, ub) in &upper {
                let a: Vec<Rational> = la.iter().zip(ua).map(|(x, y)| x + y).collect();
                keep.push((a, lb + ub));
            }
        }
        keep.sort();
        keep.dedup();
        system = keep;
    }
    system.iter().all(|(_, b)| !b.is_positive())
}

/// All realizable sign vectors, in increasing bitmask order (bit `i` set
/// means root `i` is negative).
pub fn enumerate(positive: &[RootDatum]) -> Vec<ChamberId> {
    let p = positive.len();
    let k = positive.first().map_or(0, |r| r.functional.len());
    (0u64..1u64 << p)
        .into_par_iter()
        .filter_map(|mask| {
            let signs: Vec<bool> = (0..p).map(|i| mask >> i & 1 == 0).collect();
            let system = positive
                .iter()
                .zip(&signs)
                .map(|(r, &s)| {
                    let a = r.functional.iter().map(|c| if s { c.clone() } else { -c }).collect();
                    (a, Rational::from_integer(1.into()))
                })
                .collect();
            fourier_motzkin_feasible(system, k).then(|| ChamberId::new(signs))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    #[test]
    fn infeasible_pair() {
        // x >= 1 and -x >= 1
        let sys = vec![(vec![qi(1)], qi(1)), (vec![qi(-1)], qi(1))];
        assert!(!fourier_motzkin_feasible(sys, 1));
    }

    #[test]
    fn feasible_cone() {
        // x - y >= 1, y >= 1
        let sys = vec![(vec![qi(1), qi(-1)], qi(1)), (vec![qi(0), qi(1)], qi(1))];
        assert!(fourier_motzkin_feasible(sys, 2));
    }

    #[test]
    fn three_way_contradiction() {
        // x >= 1, y - x >= 1, -y >= 1
        let sys = vec![
            (vec![qi(1), qi(0)], qi(1)),
            (vec![qi(-1), qi(1)], qi(1)),
            (vec![qi(0), qi(-1)], qi(1)),
        ];
        assert!(!fourier_motzkin_feasible(sys, 2));
    }

    #[test]
    fn chamber_display() {
        assert_eq!(ChamberId::new(vec![true, false, true]).to_string(), "+-+");
    }
}

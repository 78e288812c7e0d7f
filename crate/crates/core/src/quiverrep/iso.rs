//! Bounded searches for invertible elements of affine spaces of morphisms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exactlin::PrimeField;

use super::{hom_basis, Rep, RepMorphism};

/// Bounds shared by every invertibility search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Exhaustive enumeration when `p^dim` is at most this.
    pub enumeration_limit: u64,
    /// Random candidates tried otherwise.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            enumeration_limit: 1 << 16,
            samples: 512,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Search<T> {
    Found(T),
    /// Exhaustive search came up empty.
    NotFound,
    /// Sampling came up empty; nothing is known.
    Unknown,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::NotFound => Search::NotFound,
            Search::Unknown => Search::Unknown,
        }
    }
}

/// Searches `base + Σ c_i·directions[i]` for a vector passing `accept`.
///
/// Coefficients run in lexicographic order from all zeros, so `base` itself is
/// tried first.
pub fn search_affine(
    field: PrimeField,
    base: &[u32],
    directions: &[Vec<u32>],
    cfg: &SearchConfig,
    mut accept: impl FnMut(&[u32]) -> bool,
) -> Search<Vec<u32>> {
    let p = field.p();
    let k = directions.len();
    let combine = |coeffs: &[u32]| -> Vec<u32> {
        let mut v = base.to_vec();
        for (c, d) in coeffs.iter().zip(directions) {
            if *c != 0 {
                for (x, y) in v.iter_mut().zip(d) {
                    *x = field.add(*x, field.mul(*c, *y));
                }
            }
        }
        v
    };
    let count = (p as u64).checked_pow(k as u32);
    if count.is_some_and(|c| c <= cfg.enumeration_limit) {
        let mut coeffs = vec![0u32; k];
        loop {
            let v = combine(&coeffs);
            if accept(&v) {
                return Search::Found(v);
            }
            // Odometer increment, last coefficient fastest.
            let mut i = k;
            loop {
                if i == 0 {
                    return Search::NotFound;
                }
                i -= 1;
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
            }
        }
    }
    let v = combine(&vec![0; k]);
    if accept(&v) {
        return Search::Found(v);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples {
        let coeffs: Vec<u32> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        let v = combine(&coeffs);
        if accept(&v) {
            return Search::Found(v);
        }
    }
    Search::Unknown
}

/// An isomorphism `m -> n`, if the bounded search finds one.
pub fn iso_find(m: &Rep, n: &Rep, cfg: &SearchConfig) -> Search<RepMorphism> {
    if m.dims() != n.dims() {
        return Search::NotFound;
    }
    if m == n {
        return Search::Found(RepMorphism::identity(m));
    }
    let basis: Vec<Vec<u32>> = hom_basis(m, n).iter().map(RepMorphism::to_vec).collect();
    let zero = vec![0; RepMorphism::zero(m, n).to_vec().len()];
    search_affine(m.field(), &zero, &basis, cfg, |v| RepMorphism::from_vec(m, n, v).is_iso())
        .map(|v| RepMorphism::from_vec(m, n, &v))
}

//! Deterministic search over coordinate spaces.
//!
//! Spaces with at most 2^20 elements are enumerated in lexicographic order
//! of scalar encodings (first coordinate most significant); larger or
//! infinite spaces are sampled from a ChaCha8 stream with an explicit seed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;

pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub seed: u64,
    pub budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            seed: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl SearchOptions {
    pub fn with_seed(seed: u64) -> Self {
        SearchOptions {
            seed,
            ..Self::default()
        }
    }

    /// Derived options for a sub-search, so nested searches use independent
    /// streams.
    pub fn fork(&self, salt: u64) -> Self {
        SearchOptions {
            seed: self
                .seed
                .wrapping_mul(0x9E37_79B9_7F4A_7C15)
                .wrapping_add(salt.wrapping_mul(0xBF58_476D_1CE4_E5B9))
                .rotate_left(17),
            budget: self.budget,
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Size of F^dim if it is at most the exhaustive limit.
pub fn exhaustive_size<F: Field>(f: &F, dim: usize) -> Option<u64> {
    let q = f.cardinality()?;
    let mut n = 1u64;
    for _ in 0..dim {
        n = n.checked_mul(q)?;
        if n > EXHAUSTIVE_LIMIT {
            return None;
        }
    }
    Some(n)
}

/// Runs `test` on coordinate vectors until it returns `Some`.
pub fn search<F: Field, T>(
    f: &F,
    dim: usize,
    opts: &SearchOptions,
    what: &str,
    mut test: impl FnMut(&[F::Elem]) -> Option<T>,
) -> Result<T> {
    match exhaustive_size(f, dim) {
        Some(size) => {
            let elems = f.elements().expect("finite field");
            let q = elems.len();
            let mut idx = vec![0usize; dim];
            let limit = size.min(opts.budget);
            for _ in 0..limit {
                let v: Vec<F::Elem> = idx.iter().map(|&i| elems[i].clone()).collect();
                if let Some(t) = test(&v) {
                    return Ok(t);
                }
                // increment, last coordinate fastest
                for k in (0..dim).rev() {
                    idx[k] += 1;
                    if idx[k] < q {
                        break;
                    }
                    idx[k] = 0;
                }
            }
            Err(Error::NotFound {
                what: what.to_string(),
                budget: limit,
            })
        }
        None => {
            let mut rng = opts.rng();
            for _ in 0..opts.budget {
                let v: Vec<F::Elem> = (0..dim).map(|_| f.random(&mut rng)).collect();
                if let Some(t) = test(&v) {
                    return Ok(t);
                }
            }
            Err(Error::NotFound {
                what: what.to_string(),
                budget: opts.budget,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Rationals};

    #[test]
    fn exhaustive_order_is_lexicographic() {
        let f = FiniteField::prime(3).unwrap();
        let mut seen = Vec::new();
        let r: Result<()> = search(&f, 2, &SearchOptions::default(), "x", |v| {
            seen.push(v.to_vec());
            None
        });
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[3], vec![1, 0]);
        assert_eq!(r.unwrap_err(), Error::NotFound { what: "x".into(), budget: 9 });
    }

    #[test]
    fn random_search_is_reproducible() {
        let opts = SearchOptions { seed: 42, budget: 5 };
        let mut a = Vec::new();
        let mut b = Vec::new();
        let _ = search(&Rationals, 3, &opts, "x", |v| -> Option<()> {
            a.push(v.to_vec());
            None
        });
        let _ = search(&Rationals, 3, &opts, "x", |v| -> Option<()> {
            b.push(v.to_vec());
            None
        });
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
    }
}

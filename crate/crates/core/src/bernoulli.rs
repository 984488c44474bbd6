//! Even-index Bernoulli numbers as exact rationals.

use std::sync::OnceLock;

/// `(numerator, denominator)` of B_{2k} for k = 1..=16.
const EVEN_BERNOULLI: [(i64, i64); 16] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
    (8553103, 6),
    (-23749461029, 870),
    (8615841276005, 14322),
    (-7709321041217, 510),
];

/// Largest k for which B_{2k} is tabulated.
pub const MAX_INDEX: usize = EVEN_BERNOULLI.len();

/// B_{2k} as a float, for 1 <= k <= [`MAX_INDEX`].
pub fn bernoulli_even(k: usize) -> f64 {
    let (n, d) = EVEN_BERNOULLI[k - 1];
    n as f64 / d as f64
}

/// B_{2k} / (2k)!, for 1 <= k <= [`MAX_INDEX`]. Built once, then read-only.
pub fn scaled_bernoulli(k: usize) -> f64 {
    static TABLE: OnceLock<[f64; MAX_INDEX]> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut out = [0.0; MAX_INDEX];
        let mut factorial = 1.0f64;
        for (i, slot) in out.iter_mut().enumerate() {
            let two_k = 2 * (i + 1);
            factorial *= (two_k - 1) as f64 * two_k as f64;
            *slot = bernoulli_even(i + 1) / factorial;
        }
        out
    });
    table[k - 1]
}

use num_rational::Ratio;

use crate::scalar::Real;

/// B_2, B_4, …, B_30.
const EVEN: [(i64, i64); 15] = [
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
];

pub const MAX_INDEX: usize = 15;

/// Exact B_{2n} for 1 ≤ n ≤ 15.
pub fn b2n(n: usize) -> Option<Ratio<i64>> {
    if n == 0 || n > MAX_INDEX {
        return None;
    }
    let (p, q) = EVEN[n - 1];
    Some(Ratio::new(p, q))
}

pub fn b2n_as<T: Real>(n: usize) -> Option<T> {
    b2n(n).map(T::from_ratio)
}

//! Constants from the pumping arguments: the pumping bound and chamber sizes.

pub use num_bigint::BigUint;
use num_traits::One;

use crate::geometry::Dim;

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of window slices to scan before two movies must repeat.
///
/// Planar: `(3c)! (n+1)^(3c)`; spatial: `(9c²)! (n+1)^(9c²)`, where `c` is
/// the simulation scale and `n` the number of tile types.
pub fn pumping_bound(dim: Dim, c: u64, n: u64) -> BigUint {
    let e = match dim {
        Dim::Two => 3 * c,
        Dim::Three => 9 * c * c,
    };
    factorial(e) * BigUint::from(n + 1).pow(e as u32)
}

/// Chamber wall thickness `b = 25c²` and height `h = (p+1)(b+2)+2`.
pub fn chamber_bounds(c: u64, p: &BigUint) -> (BigUint, BigUint) {
    let b = BigUint::from(25 * c * c);
    let h = (p + 1u32) * (&b + 2u32) + 2u32;
    (b, h)
}

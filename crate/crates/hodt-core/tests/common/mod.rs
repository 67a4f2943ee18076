//! Shared test utilities: an arbitrary-precision rational oracle for the two
//! geometric predicates, independent of the production implementation.

#![allow(dead_code)]

use hodt_core::geom::Point;
use hodt_core::PointSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite input")
}

/// Exact sign of the orientation determinant: 1 counterclockwise, 0 collinear,
/// -1 clockwise.
pub fn orient_sign_exact(a: Point, b: Point, c: Point) -> i32 {
    let (ax, ay) = (rational(a.x), rational(a.y));
    let (bx, by) = (rational(b.x), rational(b.y));
    let (cx, cy) = (rational(c.x), rational(c.y));
    let det = (&bx - &ax) * (&cy - &ay) - (&by - &ay) * (&cx - &ax);
    sign(&det)
}

/// Exact sign of the in-circle determinant, normalized so that positive means
/// strictly inside the circle regardless of the orientation of `(a, b, c)`.
pub fn in_circle_sign_exact(a: Point, b: Point, c: Point, p: Point) -> i32 {
    let o = orient_sign_exact(a, b, c);
    assert!(o != 0, "oracle called on a collinear triple");
    let row = |q: Point| {
        let dx = rational(q.x) - rational(p.x);
        let dy = rational(q.y) - rational(p.y);
        let d2 = &dx * &dx + &dy * &dy;
        (dx, dy, d2)
    };
    let (ax, ay, ad) = row(a);
    let (bx, by, bd) = row(b);
    let (cx, cy, cd) = row(c);
    let det = &ax * (&by * &cd - &bd * &cy) - &ay * (&bx * &cd - &bd * &cx)
        + &ad * (&bx * &cy - &by * &cx);
    o * sign(&det)
}

fn sign(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn nudge(x: f64, ulps: i64) -> f64 {
    let bits = x.to_bits() as i64;
    f64::from_bits((bits + ulps) as u64)
}

pub fn random_point_set(n: usize, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PointSet::new(
        (0..n)
            .map(|_| Point::new(rng.gen::<f64>(), rng.gen::<f64>()))
            .collect(),
    )
    .unwrap()
}

/// Keeps sampling seeds until `n` distinct general-position sets built without
/// degeneracy errors are collected (uniform sampling almost never degenerates,
/// but the guard keeps the tests honest).
pub fn seeded_sets(count: usize, n: usize, base_seed: u64) -> Vec<PointSet> {
    let mut out = Vec::new();
    let mut seed = base_seed;
    while out.len() < count {
        let ps = random_point_set(n, seed);
        if hodt_core::delaunay::delaunay_triangulate(&ps).is_ok() {
            out.push(ps);
        }
        seed += 1;
    }
    out
}

pub fn big_int(x: u64) -> BigInt {
    BigInt::from(x)
}

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact coordinate. `BigRational` keeps itself reduced with a positive
/// denominator, which is the canonical form the JSON format relies on.
pub type Coord = BigRational;

/// Builds an integer coordinate.
pub fn int(v: i64) -> Coord {
    Coord::from_integer(BigInt::from(v))
}

/// Builds the coordinate `n / d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Coord {
    Coord::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: Coord, y: Coord) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    /// Small integer view used by the fast predicate path.
    pub(crate) fn as_i64(&self) -> Option<(i64, i64)> {
        if self.x.is_integer() && self.y.is_integer() {
            Some((self.x.numer().to_i64()?, self.y.numer().to_i64()?))
        } else {
            None
        }
    }

    pub fn sub(&self, other: &Point) -> (Coord, Coord) {
        (&self.x - &other.x, &self.y - &other.y)
    }

    /// `self + t (other - self)`.
    pub fn lerp(&self, other: &Point, t: &Coord) -> Point {
        Point::new(&self.x + (&other.x - &self.x) * t, &self.y + (&other.y - &self.y) * t)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        self.lerp(other, &frac(1, 2))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64().unwrap_or(f64::NAN), self.y.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn sign_of(v: &Coord) -> Ordering {
    if v.is_positive() {
        Ordering::Greater
    } else if v.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

/// Sign of the cross product `(b - a) x (c - a)`: `Greater` when `c` lies to
/// the left of the directed line `a -> b`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    if let (Some(a), Some(b), Some(c)) = (a.as_i64(), b.as_i64(), c.as_i64()) {
        let d = (b.0 as i128 - a.0 as i128) * (c.1 as i128 - a.1 as i128)
            - (b.1 as i128 - a.1 as i128) * (c.0 as i128 - a.0 as i128);
        return d.cmp(&0);
    }
    let (bx, by) = b.sub(a);
    let (cx, cy) = c.sub(a);
    sign_of(&(bx * cy - by * cx))
}

/// Sign of the cross product of two direction vectors.
pub fn cross_sign(u: &(Coord, Coord), v: &(Coord, Coord)) -> Ordering {
    // Cross-multiplied so no gcd reduction happens; denominators are positive.
    let lhs = u.0.numer() * v.1.numer() * u.1.denom() * v.0.denom();
    let rhs = u.1.numer() * v.0.numer() * u.0.denom() * v.1.denom();
    lhs.cmp(&rhs)
}

/// Which half of the turn a nonzero direction falls in: directions with
/// angle in `[0, pi)` come first.
fn half(d: &(Coord, Coord)) -> u8 {
    if d.1.is_positive() || (d.1.is_zero() && d.0.is_positive()) {
        0
    } else {
        1
    }
}

/// Total order of nonzero directions by angle in `[0, 2 pi)`.
pub fn angle_cmp(u: &(Coord, Coord), v: &(Coord, Coord)) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| cross_sign(v, u))
}

/// Squared euclidean distance.
pub fn dist2(a: &Point, b: &Point) -> Coord {
    let (dx, dy) = a.sub(b);
    &dx * &dx + &dy * &dy
}

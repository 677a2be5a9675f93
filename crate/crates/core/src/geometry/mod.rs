//! Plane-disc primitives.
//!
//! Predicates compare with plain `<`, `<=` and `>=` on binary64 values and no
//! epsilon, so that the classicalisation loop and the classicality test agree
//! on every input. Tolerances belong to the verifiers, not here.

use std::fmt;

use crate::error::{Error, Result};

mod limits;

pub use limits::{
    limit_of_nested_closed_chain, limit_of_nested_open_chain, Chain, ChainLimitOptions,
};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Point { x, y })
        } else {
            Err(Error::NonFinitePoint { x, y })
        }
    }

    pub const fn origin() -> Self {
        Point { x: 0.0, y: 0.0 }
    }

    pub fn distance(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

fn check_radius(radius: f64) -> Result<()> {
    if radius.is_finite() && radius > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidRadius(radius))
    }
}

/// An open disc `{z : |z - center| < radius}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OpenDisc {
    center: Point,
    radius: f64,
}

impl OpenDisc {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        check_radius(radius)?;
        Point::new(center.x, center.y)?;
        Ok(OpenDisc { center, radius })
    }

    /// Shorthand for `OpenDisc::new(Point::new(x, y)?, radius)`.
    pub fn at(x: f64, y: f64, radius: f64) -> Result<Self> {
        OpenDisc::new(Point::new(x, y)?, radius)
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }
}

/// A closed disc `{z : |z - center| <= radius}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedDisc {
    center: Point,
    radius: f64,
}

impl ClosedDisc {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        check_radius(radius)?;
        Point::new(center.x, center.y)?;
        Ok(ClosedDisc { center, radius })
    }

    pub fn at(x: f64, y: f64, radius: f64) -> Result<Self> {
        ClosedDisc::new(Point::new(x, y)?, radius)
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Closed-disc inclusion `other ⊆ self`.
    pub fn contains_disc(&self, other: &ClosedDisc) -> bool {
        self.center.distance(other.center) + other.radius <= self.radius
    }
}

/// An open disc or the complement of a closed disc.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GeneralizedDisc {
    Open(OpenDisc),
    ComplementOfClosed(ClosedDisc),
}

impl GeneralizedDisc {
    pub fn center(&self) -> Point {
        match self {
            GeneralizedDisc::Open(d) => d.center,
            GeneralizedDisc::ComplementOfClosed(d) => d.center,
        }
    }

    /// Radius of the underlying disc.
    pub fn radius(&self) -> f64 {
        match self {
            GeneralizedDisc::Open(d) => d.radius,
            GeneralizedDisc::ComplementOfClosed(d) => d.radius,
        }
    }

    pub fn is_complement(&self) -> bool {
        matches!(self, GeneralizedDisc::ComplementOfClosed(_))
    }

    pub fn as_open(&self) -> Option<&OpenDisc> {
        match self {
            GeneralizedDisc::Open(d) => Some(d),
            GeneralizedDisc::ComplementOfClosed(_) => None,
        }
    }

    pub fn contains_point(&self, z: Point) -> bool {
        point_in(self, z)
    }
}

impl From<OpenDisc> for GeneralizedDisc {
    fn from(d: OpenDisc) -> Self {
        GeneralizedDisc::Open(d)
    }
}

impl fmt::Display for GeneralizedDisc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneralizedDisc::Open(d) => write!(f, "open({}, {:?})", d.center, d.radius),
            GeneralizedDisc::ComplementOfClosed(d) => {
                write!(f, "complement({}, {:?})", d.center, d.radius)
            }
        }
    }
}

pub fn point_in(g: &GeneralizedDisc, z: Point) -> bool {
    match g {
        GeneralizedDisc::Open(d) => z.distance(d.center) < d.radius,
        GeneralizedDisc::ComplementOfClosed(d) => z.distance(d.center) > d.radius,
    }
}

/// Whether the closures of `a` and `b` meet. Tangency counts as meeting.
pub fn closures_intersect(a: &GeneralizedDisc, b: &GeneralizedDisc) -> Result<bool> {
    use GeneralizedDisc::*;
    match (a, b) {
        (Open(p), Open(q)) => Ok(p.center.distance(q.center) <= p.radius + q.radius),
        (Open(p), ComplementOfClosed(c)) | (ComplementOfClosed(c), Open(p)) => {
            Ok(p.center.distance(c.center) + p.radius >= c.radius)
        }
        (ComplementOfClosed(_), ComplementOfClosed(_)) => Err(Error::BothComplements),
    }
}

/// Signed margin by which `inner ⊆ outer` holds; non-negative iff it holds.
///
/// For two complements the margin is that of the reversed closed-disc
/// inclusion, since `C \ A ⊇ C \ B` iff `A ⊆ B`.
pub fn containment_slack(outer: &GeneralizedDisc, inner: &GeneralizedDisc) -> Result<f64> {
    use GeneralizedDisc::*;
    match (outer, inner) {
        (Open(o), Open(i)) => Ok(o.radius - (o.center.distance(i.center) + i.radius)),
        (ComplementOfClosed(o), ComplementOfClosed(i)) => {
            Ok(i.radius - (o.center.distance(i.center) + o.radius))
        }
        _ => Err(Error::MixedKinds),
    }
}

pub fn disc_contains(outer: &GeneralizedDisc, inner: &GeneralizedDisc) -> Result<bool> {
    Ok(containment_slack(outer, inner)? >= 0.0)
}

/// Smallest open disc containing `d1 ∪ d2`, for discs whose closures meet.
///
/// The radius never exceeds `r1 + r2`, so replacing the pair by the result
/// cannot decrease the slack of a cheese.
pub fn merge_open_discs(d1: &OpenDisc, d2: &OpenDisc) -> Result<OpenDisc> {
    let (c1, r1) = (d1.center, d1.radius);
    let (c2, r2) = (d2.center, d2.radius);
    let dist = c1.distance(c2);
    if dist > r1 + r2 {
        return Err(Error::NotColliding {
            distance: dist,
            radius_sum: r1 + r2,
        });
    }
    if dist + r2 <= r1 {
        return Ok(*d1);
    }
    if dist + r1 <= r2 {
        return Ok(*d2);
    }
    // dist > 0 here, otherwise one of the containment branches fires.
    let radius = (r1 + r2 + dist) / 2.0;
    let t = (dist + r2 - r1) / 2.0 / dist;
    let center = Point {
        x: c1.x + t * (c2.x - c1.x),
        y: c1.y + t * (c2.y - c1.y),
    };
    OpenDisc::new(center, radius)
}

/// Largest closed disc inside `outer` that avoids `d`, found along the line
/// of centres.
///
/// The result is internally tangent to `outer` and externally tangent to `d`,
/// with radius `(R + dist - r) / 2 >= R - r`. When `d` already misses `outer`
/// the outer disc is returned unchanged. `d` must reach the boundary of
/// `outer` (its closure meets the complement), otherwise `NotColliding`.
pub fn avoid_disc(outer: &ClosedDisc, d: &OpenDisc) -> Result<ClosedDisc> {
    let (big_c, big_r) = (outer.center, outer.radius);
    let (a, r) = (d.center, d.radius);
    if r >= big_r {
        return Err(Error::DiscTooLarge {
            disc_radius: r,
            outer_radius: big_r,
        });
    }
    let dist = big_c.distance(a);
    if dist >= big_r + r {
        return Ok(*outer);
    }
    if dist + r < big_r {
        // d̄ lies in the interior of outer; nothing to avoid along a unique
        // axis and the radius bound R - r would not hold.
        return Err(Error::NotColliding {
            distance: dist,
            radius_sum: big_r - r,
        });
    }
    let radius = (big_r + dist - r) / 2.0;
    let step = (r + radius) / dist;
    let center = Point {
        x: a.x + step * (big_c.x - a.x),
        y: a.y + step * (big_c.y - a.y),
    };
    ClosedDisc::new(center, radius)
}

use std::cmp::Ordering;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A primitive integer direction, standing for the open ray `R₊·(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RayDir {
    x: i64,
    y: i64,
}

impl RayDir {
    /// Normalizes `(x, y)` to its primitive representative.
    pub fn new(x: i64, y: i64) -> Result<Self> {
        if x == 0 && y == 0 {
            return Err(Error::ZeroRay);
        }
        let g = x.gcd(&y);
        Ok(RayDir { x: x / g, y: y / g })
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    /// Reflection across the diagonal, `(x, y) ↦ (y, x)`.
    pub fn swapped(&self) -> Self {
        RayDir {
            x: self.y,
            y: self.x,
        }
    }

    pub fn cross(&self, other: &RayDir) -> i64 {
        self.x * other.y - self.y * other.x
    }

    pub fn dot(&self, other: &RayDir) -> i64 {
        self.x * other.x + self.y * other.y
    }

    /// Counterclockwise comparison of two rays lying in a common open
    /// half-plane.
    pub fn angular_cmp(&self, other: &RayDir) -> Ordering {
        0.cmp(&self.cross(other))
    }

    /// True iff `(x, y)` is a positive multiple of this direction.
    pub fn contains(&self, x: i64, y: i64) -> bool {
        self.x * y == self.y * x && self.x * x + self.y * y > 0
    }
}

impl Serialize for RayDir {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x, self.y].serialize(s)
    }
}

impl std::fmt::Display for RayDir {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

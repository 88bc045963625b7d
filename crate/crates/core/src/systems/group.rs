use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `(n, s) ∈ Z ⋊ Z₂`, acting as `φⁿσˢ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub n: i64,
    pub s: bool,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { n: 0, s: false };

    pub const fn new(n: i64, s: bool) -> Self {
        GroupElement { n, s }
    }

    pub const fn phi() -> Self {
        GroupElement::new(1, false)
    }

    pub const fn sigma() -> Self {
        GroupElement::new(0, true)
    }

    pub const fn phi_sigma() -> Self {
        GroupElement::new(1, true)
    }

    pub fn is_identity(&self) -> bool {
        *self == GroupElement::IDENTITY
    }

    /// `(n, s)(m, t) = (n + (−1)ˢ m, s ⊕ t)`.
    pub fn mul(self, other: GroupElement) -> GroupElement {
        let m = if self.s { -other.n } else { other.n };
        GroupElement { n: self.n + m, s: self.s ^ other.s }
    }

    pub fn inverse(self) -> GroupElement {
        if self.s {
            self
        } else {
            GroupElement::new(-self.n, false)
        }
    }

    pub fn conjugate_by(self, b: GroupElement) -> GroupElement {
        b.inverse().mul(self).mul(b)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.s as u8)
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.n, self.s as u8).serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (n, s): (i64, u8) = Deserialize::deserialize(d)?;
        match s {
            0 | 1 => Ok(GroupElement::new(n, s == 1)),
            _ => Err(D::Error::custom("flip bit must be 0 or 1")),
        }
    }
}

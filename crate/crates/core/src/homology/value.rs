use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::abgroups::{FGAbGroup, LocalizationDescriptor};

/// A homology group: finitely generated, or a rank-one localization of `Z`
/// plus finite torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupValue {
    Finite(FGAbGroup),
    Localized { descriptor: LocalizationDescriptor, torsion: Vec<BigInt> },
}

impl GroupValue {
    pub fn trivial() -> Self {
        GroupValue::Finite(FGAbGroup::trivial())
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, GroupValue::Finite(g) if g.is_trivial())
    }

    pub fn as_finite(&self) -> Option<&FGAbGroup> {
        match self {
            GroupValue::Finite(g) => Some(g),
            GroupValue::Localized { .. } => None,
        }
    }

    /// `self ⊕ g`, for finite `g` when `self` is a localization.
    pub fn plus(&self, g: &FGAbGroup) -> GroupValue {
        match self {
            GroupValue::Finite(h) => GroupValue::Finite(h.direct_sum(g)),
            GroupValue::Localized { descriptor, torsion } => {
                debug_assert_eq!(g.rank, 0);
                let t = FGAbGroup { rank: 0, torsion: torsion.clone() }.direct_sum(g);
                GroupValue::Localized { descriptor: descriptor.clone(), torsion: t.torsion }
            }
        }
    }

    /// Same iso type; localizations compare by their inverted primes.
    pub fn same_type(&self, other: &GroupValue) -> bool {
        match (self, other) {
            (GroupValue::Finite(a), GroupValue::Finite(b)) => a == b,
            (
                GroupValue::Localized { descriptor: a, torsion: s },
                GroupValue::Localized { descriptor: b, torsion: t },
            ) => a.same_type(b) && s == t,
            _ => false,
        }
    }
}

impl fmt::Display for GroupValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupValue::Finite(g) => write!(f, "{g}"),
            GroupValue::Localized { descriptor, torsion } => {
                write!(f, "{}", descriptor.localization)?;
                for t in torsion {
                    write!(f, " ⊕ Z/{t}")?;
                }
                Ok(())
            }
        }
    }
}

impl Serialize for GroupValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GroupValue::Finite(g) => g.serialize(s),
            GroupValue::Localized { descriptor, torsion } => {
                let mut m = s.serialize_map(None)?;
                m.serialize_entry("localization", &descriptor.localization)?;
                m.serialize_entry("primes", &descriptor.primes)?;
                m.serialize_entry("multipliers", &descriptor.multipliers)?;
                if let Some(p) = &descriptor.period {
                    m.serialize_entry("period", p)?;
                }
                if !torsion.is_empty() {
                    let t: Vec<String> = torsion.iter().map(|x| x.to_string()).collect();
                    m.serialize_entry("torsion", &t)?;
                }
                m.end()
            }
        }
    }
}

/// `H₀ … H₅` and the two-periodic tail from degree 2 on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTable {
    pub h0: GroupValue,
    pub h1: FGAbGroup,
    pub odd: FGAbGroup,
    pub even: FGAbGroup,
}

impl HomologyTable {
    pub const SHOWN: usize = 6;

    pub fn degree(&self, n: usize) -> GroupValue {
        match n {
            0 => self.h0.clone(),
            1 => GroupValue::Finite(self.h1.clone()),
            n if n % 2 == 1 => GroupValue::Finite(self.odd.clone()),
            _ => GroupValue::Finite(self.even.clone()),
        }
    }

    pub fn same_type(&self, other: &HomologyTable) -> bool {
        self.h0.same_type(&other.h0) && self.h1 == other.h1 && self.odd == other.odd && self.even == other.even
    }

    /// Degrees in which the two tables differ.
    pub fn differences(&self, other: &HomologyTable) -> Vec<usize> {
        (0..Self::SHOWN).filter(|&n| !self.degree(n).same_type(&other.degree(n))).collect()
    }
}

#[derive(Serialize)]
struct Tail<'a> {
    odd: &'a FGAbGroup,
    even: &'a FGAbGroup,
    from: usize,
}

impl Serialize for HomologyTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(Self::SHOWN + 1))?;
        for n in 0..Self::SHOWN {
            m.serialize_entry(&format!("H{n}"), &self.degree(n))?;
        }
        m.serialize_entry("tail", &Tail { odd: &self.odd, even: &self.even, from: 2 })?;
        m.end()
    }
}

impl fmt::Display for HomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in 0..Self::SHOWN {
            writeln!(f, "H{n} = {}", self.degree(n))?;
        }
        write!(f, "H_odd = {}, H_even = {} for n ≥ 2", self.odd, self.even)
    }
}

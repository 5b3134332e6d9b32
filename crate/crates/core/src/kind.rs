use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    /// Fixed rank of an exceptional family.
    pub fn exceptional_rank(self) -> Option<usize> {
        match self {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }

    pub const CLASSICAL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];
    pub const EXCEPTIONAL: [Family; 5] =
        [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G2" => Ok(Family::G2),
            "F4" => Ok(Family::F4),
            "E6" => Ok(Family::E6),
            "E7" => Ok(Family::E7),
            "E8" => Ok(Family::E8),
            other => Err(Error::InvalidKind(other.to_string())),
        }
    }
}

/// A simple Lie algebra type: family plus rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieKind {
    family: Family,
    rank: usize,
}

impl LieKind {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            exc => exc.exceptional_rank() == Some(rank),
        };
        if ok {
            Ok(LieKind { family, rank })
        } else {
            Err(Error::InvalidKind(format!("{family}{rank}")))
        }
    }

    pub fn exceptional(family: Family) -> Result<Self> {
        let rank = family
            .exceptional_rank()
            .ok_or_else(|| Error::InvalidKind(family.to_string()))?;
        LieKind::new(family, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_classical(&self) -> bool {
        self.family.is_classical()
    }

    /// Size N of the defining matrix realization, classical types only.
    pub fn matrix_size(&self) -> Option<usize> {
        let n = self.rank;
        match self.family {
            Family::A => Some(n + 1),
            Family::B => Some(2 * n + 1),
            Family::C | Family::D => Some(2 * n),
            _ => None,
        }
    }

    /// Dimension of the Lie algebra.
    pub fn dim(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * n + 2 * n,
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::G2 => 14,
            Family::F4 => 52,
            Family::E6 => 78,
            Family::E7 => 133,
            Family::E8 => 248,
        }
    }

    /// True for the orthogonal families, where `epsilon = 0`.
    pub fn is_orthogonal(&self) -> bool {
        matches!(self.family, Family::B | Family::D)
    }

    pub fn is_symplectic(&self) -> bool {
        self.family == Family::C
    }

    pub(crate) fn require_classical(&self) -> Result<usize> {
        self.matrix_size().ok_or(Error::UnsupportedKind {
            kind: *self,
            reason: "a classical type is required",
        })
    }
}

impl fmt::Display for LieKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_classical() {
            write!(f, "{}{}", self.family, self.rank)
        } else {
            write!(f, "{}", self.family)
        }
    }
}

impl FromStr for LieKind {
    type Err = Error;

    /// Parses `A3`, `c4`, `E7`, `G2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        if let Ok(fam) = t.parse::<Family>() {
            if !fam.is_classical() {
                return LieKind::exceptional(fam);
            }
        }
        let mut chars = t.chars();
        let head = chars
            .next()
            .ok_or_else(|| Error::InvalidKind(s.to_string()))?;
        let family: Family = head.to_string().parse()?;
        if !family.is_classical() {
            return Err(Error::InvalidKind(s.to_string()));
        }
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidKind(s.to_string()))?;
        LieKind::new(family, rank)
    }
}

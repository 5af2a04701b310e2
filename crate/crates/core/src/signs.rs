//! The five ±1 phases that label members of the amplifier family.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Minus => -1.0,
            Sign::Plus => 1.0,
        }
    }

    /// Sign of `x`, with zero mapped to `Plus`.
    pub fn of(x: f64) -> Self {
        if x < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        match s {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = Error;

    fn try_from(v: i8) -> Result<Self, Error> {
        match v {
            -1 => Ok(Sign::Minus),
            1 => Ok(Sign::Plus),
            other => Err(Error::InvalidSign(other.to_string())),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-1",
            Sign::Plus => "1",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "-1" | "-" => Ok(Sign::Minus),
            "1" | "+1" | "+" => Ok(Sign::Plus),
            other => Err(Error::InvalidSign(other.to_string())),
        }
    }
}

/// `(ε₁, …, ε₅)`.
///
/// `eps1` and `eps2` are the output phases on the target and the tail,
/// `eps3` and `eps4` select the branch of the coefficient solution. `eps5`
/// fixes the sign of `γ₀` in the `β₀` form of the family; once the family is
/// parametrized by an angle on the full circle that sign is carried by
/// `sin θ`, so this crate records `eps5` but the operator does not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignChoice {
    pub eps1: Sign,
    pub eps2: Sign,
    pub eps3: Sign,
    pub eps4: Sign,
    pub eps5: Sign,
}

impl Default for SignChoice {
    /// All plus. Admits a reflection form.
    fn default() -> Self {
        Self::from_array([Sign::Plus; 5])
    }
}

impl SignChoice {
    pub const fn from_array([eps1, eps2, eps3, eps4, eps5]: [Sign; 5]) -> Self {
        Self {
            eps1,
            eps2,
            eps3,
            eps4,
            eps5,
        }
    }

    pub fn to_array(self) -> [Sign; 5] {
        [self.eps1, self.eps2, self.eps3, self.eps4, self.eps5]
    }

    /// The choice that reproduces textbook Grover: `ε₁ε₄ = ε₃ = ε₅ = 1`, `ε₂ = -1`.
    pub const fn grover() -> Self {
        Self::from_array([Sign::Plus, Sign::Minus, Sign::Plus, Sign::Plus, Sign::Plus])
    }

    /// All 32 choices, enumerated with `eps1` as the most significant bit.
    pub fn all() -> impl Iterator<Item = SignChoice> {
        (0u8..32).map(|bits| {
            let pick = |shift: u8| {
                if bits >> shift & 1 == 1 {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            };
            Self::from_array([pick(4), pick(3), pick(2), pick(1), pick(0)])
        })
    }

    /// `ε₂ = ε₁ε₄ε₃`.
    pub fn admits_reflection(self) -> bool {
        self.eps2 == self.eps1 * self.eps4 * self.eps3
    }

    /// `ε₁ε₄ε₃`, the phase of the target component after amplification.
    pub fn target_phase(self) -> Sign {
        self.eps1 * self.eps4 * self.eps3
    }
}

impl fmt::Display for SignChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = self.to_array();
        write!(f, "{a},{b},{c},{d},{e}")
    }
}

impl FromStr for SignChoice {
    type Err = Error;

    /// Comma-separated quintuple such as `1,-1,1,1,1`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 5 {
            return Err(Error::InvalidSign(format!(
                "expected five comma-separated signs, got {s:?}"
            )));
        }
        let mut out = [Sign::Plus; 5];
        for (slot, part) in out.iter_mut().zip(parts) {
            *slot = part.parse()?;
        }
        Ok(Self::from_array(out))
    }
}

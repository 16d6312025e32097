use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A rapidly converging series family for odd zeta values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesFamily {
    /// Ewell's series for `zeta(3)`.
    Ewell,
    /// The Cvijovic-Klinowski recurrence.
    Ck,
    M3,
    M4,
    M6,
}

impl SeriesFamily {
    pub const ALL: [SeriesFamily; 5] = [
        SeriesFamily::Ewell,
        SeriesFamily::Ck,
        SeriesFamily::M3,
        SeriesFamily::M4,
        SeriesFamily::M6,
    ];

    /// Modulus of the `m^-2k` decay.
    pub fn m(self) -> u32 {
        match self {
            SeriesFamily::Ewell | SeriesFamily::Ck => 2,
            SeriesFamily::M3 => 3,
            SeriesFamily::M4 => 4,
            SeriesFamily::M6 => 6,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            SeriesFamily::Ewell => "ewell",
            SeriesFamily::Ck => "ck",
            SeriesFamily::M3 => "m3",
            SeriesFamily::M4 => "m4",
            SeriesFamily::M6 => "m6",
        }
    }

    /// The `M` family for modulus 3, 4 or 6.
    pub fn from_modulus(m: u32) -> Result<SeriesFamily> {
        match m {
            3 => Ok(SeriesFamily::M3),
            4 => Ok(SeriesFamily::M4),
            6 => Ok(SeriesFamily::M6),
            _ => Err(Error::precondition(format!(
                "modulus m = {m} is not one of 3, 4, 6"
            ))),
        }
    }

    pub fn is_modular(self) -> bool {
        matches!(self, SeriesFamily::M3 | SeriesFamily::M4 | SeriesFamily::M6)
    }

    /// Largest order the family covers, if bounded.
    pub fn max_order(self) -> Option<u32> {
        match self {
            SeriesFamily::Ewell => Some(1),
            _ => None,
        }
    }
}

impl fmt::Display for SeriesFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SeriesFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ewell" => Ok(SeriesFamily::Ewell),
            "ck" => Ok(SeriesFamily::Ck),
            "m3" => Ok(SeriesFamily::M3),
            "m4" => Ok(SeriesFamily::M4),
            "m6" => Ok(SeriesFamily::M6),
            other => Err(Error::Config(format!(
                "unknown series family {other:?}; expected ewell, ck, m3, m4 or m6"
            ))),
        }
    }
}

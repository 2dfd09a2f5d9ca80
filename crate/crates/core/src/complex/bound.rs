use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Degree cap selecting a stage of the forest filtration.
///
/// Variant order gives `Finite(0) < Finite(1) < ... < Unbounded`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DegreeBound {
    Finite(usize),
    Unbounded,
}

impl DegreeBound {
    pub fn allows(self, degree: usize) -> bool {
        match self {
            DegreeBound::Finite(d) => degree <= d,
            DegreeBound::Unbounded => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            DegreeBound::Finite(d) => Some(d),
            DegreeBound::Unbounded => None,
        }
    }

    /// The next stage; the unbounded stage is its own successor.
    pub fn succ(self) -> Self {
        match self {
            DegreeBound::Finite(d) => DegreeBound::Finite(d + 1),
            DegreeBound::Unbounded => DegreeBound::Unbounded,
        }
    }
}

impl fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeBound::Finite(d) => write!(f, "{d}"),
            DegreeBound::Unbounded => f.write_str("inf"),
        }
    }
}

impl FromStr for DegreeBound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(DegreeBound::Unbounded),
            other => other
                .parse::<usize>()
                .map(DegreeBound::Finite)
                .map_err(|_| Error::Parse(format!("degree bound must be a count or \"inf\", got {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering() {
        assert!(DegreeBound::Finite(0) < DegreeBound::Finite(1));
        assert!(DegreeBound::Finite(1000) < DegreeBound::Unbounded);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "3", "inf"] {
            assert_eq!(s.parse::<DegreeBound>().unwrap().to_string(), s);
        }
        assert!("-1".parse::<DegreeBound>().is_err());
        assert!("two".parse::<DegreeBound>().is_err());
    }
}

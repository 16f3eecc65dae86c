use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// Names one chain of the catalogue. Parsed from and rendered to the
/// descriptor text grammar (`C`, `LukStd`, `MV(5)`, `C ++ LukStd`, `omega*V`, ...).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    /// `{0, 1/(k-1), ..., 1}` with `*` = min.
    FiniteGodel(usize),
    /// `{0, 1/(k-1), ..., 1}` as a subalgebra of the standard MV chain.
    FiniteMV(usize),
    StandardMV,
    StandardGodel,
    /// Realized as `G(2) ++ Canc`.
    StandardProduct,
    /// `(0, 1]` under multiplication; unbounded.
    StandardCancellativeHoop,
    Chang,
    Rotation(Box<Descriptor>),
    OrdinalSum(Vec<Descriptor>),
    OmegaSum(Box<Descriptor>),
}

impl Descriptor {
    /// The disconnected rotation of the standard cancellative hoop.
    pub fn v() -> Self {
        Descriptor::Rotation(Box::new(Descriptor::StandardCancellativeHoop))
    }

    pub fn omega_v() -> Self {
        Descriptor::OmegaSum(Box::new(Descriptor::v()))
    }

    /// `C ++ LukStd`.
    pub fn chang_plus_luk() -> Self {
        Descriptor::OrdinalSum(vec![Descriptor::Chang, Descriptor::StandardMV])
    }

    pub fn is_sum(&self) -> bool {
        matches!(
            self,
            Descriptor::OrdinalSum(_) | Descriptor::OmegaSum(_) | Descriptor::StandardProduct
        )
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::FiniteGodel(k) => write!(f, "G({k})"),
            Descriptor::FiniteMV(k) => write!(f, "MV({k})"),
            Descriptor::StandardMV => write!(f, "LukStd"),
            Descriptor::StandardGodel => write!(f, "GodStd"),
            Descriptor::StandardProduct => write!(f, "ProdStd"),
            Descriptor::StandardCancellativeHoop => write!(f, "Canc"),
            Descriptor::Chang => write!(f, "C"),
            Descriptor::Rotation(inner) if **inner == Descriptor::StandardCancellativeHoop => {
                write!(f, "V")
            }
            Descriptor::Rotation(inner) => write!(f, "Rot({inner})"),
            Descriptor::OrdinalSum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ++ ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Descriptor::OmegaSum(inner) => write!(f, "omega*{inner}"),
        }
    }
}

const ATOMS: &[&str] = &[
    "C",
    "LukStd",
    "GodStd",
    "ProdStd",
    "Canc",
    "V",
    "MV(k)",
    "G(k)",
    "Rot(Canc)",
];

impl FromStr for Descriptor {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        // Whitespace-insensitive: positions below refer to the compacted text.
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseError::new(0, ATOMS, "end of input"));
        }
        if let Some(rest) = compact.strip_prefix("omega*") {
            let inner = parse_atom(rest, 6)?;
            if inner.is_sum() {
                return Err(ParseError::new(6, &["a non-sum atom"], rest));
            }
            return Ok(Descriptor::OmegaSum(Box::new(inner)));
        }
        let mut parts = Vec::new();
        let mut offset = 0;
        for piece in compact.split("++") {
            if piece.starts_with("omega*") {
                return Err(ParseError::new(offset, &["atom"], piece));
            }
            match parse_atom(piece, offset)? {
                Descriptor::StandardProduct if compact.contains("++") => {
                    parts.push(Descriptor::FiniteGodel(2));
                    parts.push(Descriptor::StandardCancellativeHoop);
                }
                d => parts.push(d),
            }
            offset += piece.len() + 2;
        }
        if parts.len() == 1 {
            Ok(parts.pop().unwrap())
        } else {
            Ok(Descriptor::OrdinalSum(parts))
        }
    }
}

fn parse_atom(text: &str, offset: usize) -> Result<Descriptor, ParseError> {
    let fixed = match text {
        "C" => Some(Descriptor::Chang),
        "LukStd" => Some(Descriptor::StandardMV),
        "GodStd" => Some(Descriptor::StandardGodel),
        "ProdStd" => Some(Descriptor::StandardProduct),
        "Canc" => Some(Descriptor::StandardCancellativeHoop),
        "V" => Some(Descriptor::v()),
        _ => None,
    };
    if let Some(d) = fixed {
        return Ok(d);
    }
    let call = |name: &str| -> Option<&str> { text.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')') };
    if let Some(arg) = call("MV").or_else(|| call("G")) {
        let k: usize = arg
            .parse()
            .map_err(|_| ParseError::new(offset + text.find('(').unwrap() + 1, &["natural number"], arg))?;
        return Ok(if text.starts_with("MV") {
            Descriptor::FiniteMV(k)
        } else {
            Descriptor::FiniteGodel(k)
        });
    }
    if let Some(arg) = call("Rot") {
        return Ok(Descriptor::Rotation(Box::new(parse_atom(arg, offset + 4)?)));
    }
    let found = if text.is_empty() { "end of input" } else { text };
    Err(ParseError::new(offset, ATOMS, found))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Descriptor {
        s.parse().unwrap()
    }

    #[test]
    fn atoms() {
        assert_eq!(p("C"), Descriptor::Chang);
        assert_eq!(p(" MV( 5 )"), Descriptor::FiniteMV(5));
        assert_eq!(p("G(3)"), Descriptor::FiniteGodel(3));
        assert_eq!(p("Rot(Canc)"), Descriptor::v());
        assert_eq!(p("V"), Descriptor::v());
    }

    #[test]
    fn sums_and_omega() {
        assert_eq!(p("C ++ LukStd"), Descriptor::chang_plus_luk());
        assert_eq!(p("omega * V"), Descriptor::omega_v());
        assert_eq!(
            p("MV(2)++ProdStd"),
            Descriptor::OrdinalSum(vec![
                Descriptor::FiniteMV(2),
                Descriptor::FiniteGodel(2),
                Descriptor::StandardCancellativeHoop
            ])
        );
    }

    #[test]
    fn display_round_trip() {
        for s in [
            "C",
            "LukStd",
            "GodStd",
            "ProdStd",
            "Canc",
            "V",
            "MV(4)",
            "G(2)",
            "C ++ LukStd",
            "omega*V",
            "Rot(LukStd)",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn errors() {
        assert!("".parse::<Descriptor>().is_err());
        assert!("X".parse::<Descriptor>().is_err());
        assert!("MV(x)".parse::<Descriptor>().is_err());
        assert!("C ++".parse::<Descriptor>().is_err());
        assert!("C ++ omega*V".parse::<Descriptor>().is_err());
        let err = "C ++ Foo".parse::<Descriptor>().unwrap_err();
        assert_eq!(err.position, 3);
    }
}

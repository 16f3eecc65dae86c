use crate::error::CheckError;
use crate::formula;

use super::{Equation, Term};

const CATALOG: &[(&str, &str)] = &[
    ("cha", "pow(nuplus(2, x), 2) = nuplus(2, pow(x, 2))"),
    ("cha-mv", "pow(nsum(2, x), 2) = nsum(2, pow(x, 2))"),
    ("p0", "!pow(!pow(x, 2), 2) = pow(!pow(!x, 2), 2)"),
    ("involution", "!!x = x"),
    ("uplus-oplus", "uplus(x, y) = oplus(x, y)"),
    ("uplus-top", "uplus(x, y) = 1"),
    ("wajsberg", "(x -> y) -> y = (y -> x) -> x"),
    ("cancellative", "x = y -> (x & y)"),
    ("divisibility", "x /\\ y = x & (x -> y)"),
    ("prelinearity", "(x -> y) \\/ (y -> x) = 1"),
];

/// Names of the built-in equations.
pub fn equation_names() -> Vec<&'static str> {
    CATALOG.iter().map(|(n, _)| *n).collect()
}

/// A built-in equation by (case-insensitive) name.
pub fn equation(name: &str) -> Option<Equation> {
    CATALOG
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(n, text)| Equation::parse(*n, text).expect("built-in equation parses"))
}

/// Resolves a check target: a built-in equation name, then a schema name
/// (instantiated with `p, q, r` and compared with `1`), then inline
/// `lhs = rhs` text, then a formula compared with `1`.
pub fn resolve(target: &str) -> Result<Equation, CheckError> {
    let target = target.trim();
    if let Some(e) = equation(target) {
        return Ok(e);
    }
    if let Some(s) = formula::schema(target) {
        return Ok(Equation::new(
            s.name,
            Term::from_formula(&s.instantiate_simple()),
            Term::One,
        ));
    }
    if target.contains('=') {
        return Equation::parse("inline", target);
    }
    Ok(Equation::new(
        "inline",
        Term::from_formula(&formula::parse(target)?),
        Term::One,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_parse() {
        for n in equation_names() {
            let e = equation(n).unwrap();
            assert!(!e.vars.is_empty(), "{n}");
        }
        assert_eq!(equation("P0").unwrap().vars, vec!["x"]);
    }

    #[test]
    fn resolution_order() {
        assert_eq!(resolve("cha").unwrap().name, "cha");
        let a1 = resolve("A1").unwrap();
        assert_eq!(a1.vars, vec!["p", "q", "r"]);
        assert_eq!(a1.rhs, Term::One);
        assert_eq!(resolve("x & y = y & x").unwrap().vars, vec!["x", "y"]);
        assert_eq!(resolve("p -> p").unwrap().rhs, Term::One);
        assert!(resolve("p ->").is_err());
    }
}

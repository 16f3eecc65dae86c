use super::{parse, Formula};

/// Metavariables of the schema templates, in substitution order.
pub const METAVARIABLES: [&str; 3] = ["phi", "psi", "chi"];

/// An axiom or equation schema over the metavariables `phi`, `psi`, `chi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schema {
    pub name: &'static str,
    pub template: Formula,
}

impl Schema {
    fn new(name: &'static str, text: &str) -> Schema {
        Schema {
            name,
            template: parse(text).expect("built-in schema parses"),
        }
    }

    /// Simultaneous substitution for the metavariables; unlisted ones stay.
    pub fn instantiate(&self, subst: &[(&str, Formula)]) -> Formula {
        self.template
            .substitute(&|name| subst.iter().find(|(m, _)| *m == name).map(|(_, f)| f.clone()))
    }

    /// `phi, psi, chi := p, q, r`.
    pub fn instantiate_simple(&self) -> Formula {
        self.instantiate(&[
            ("phi", Formula::var("p")),
            ("psi", Formula::var("q")),
            ("chi", Formula::var("r")),
        ])
    }
}

/// The BL axioms (A5 in its two halves), INV, CHA and P0.
pub fn schemas() -> Vec<Schema> {
    vec![
        Schema::new("A1", "(phi -> psi) -> ((psi -> chi) -> (phi -> chi))"),
        Schema::new("A2", "(phi & psi) -> phi"),
        Schema::new("A3", "(phi & psi) -> (psi & phi)"),
        Schema::new("A4", "(phi & (phi -> psi)) -> (psi & (psi -> phi))"),
        Schema::new("A5a", "(phi -> (psi -> chi)) -> ((phi & psi) -> chi)"),
        Schema::new("A5b", "((phi & psi) -> chi) -> (phi -> (psi -> chi))"),
        Schema::new("A6", "((phi -> psi) -> chi) -> (((psi -> phi) -> chi) -> chi)"),
        Schema::new("A7", "0 -> phi"),
        Schema::new("INV", "!!phi -> phi"),
        Schema::new("CHA", "pow(nuplus(2, phi), 2) <-> nuplus(2, pow(phi, 2))"),
        Schema::new("P0", "!(pow(!pow(phi, 2), 2)) <-> pow(!pow(!phi, 2), 2)"),
    ]
}

/// Case-insensitive lookup by name.
pub fn schema(name: &str) -> Option<Schema> {
    schemas().into_iter().find(|s| s.name.eq_ignore_ascii_case(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue() {
        let names: Vec<_> = schemas().iter().map(|s| s.name).collect();
        assert_eq!(
            names,
            ["A1", "A2", "A3", "A4", "A5a", "A5b", "A6", "A7", "INV", "CHA", "P0"]
        );
        assert_eq!(
            schema("a7").unwrap().template,
            Formula::imp(Formula::Bottom, Formula::var("phi"))
        );
    }

    #[test]
    fn instantiation_is_simultaneous() {
        let a1 = schema("A1").unwrap();
        let f = a1.instantiate(&[("phi", Formula::var("psi")), ("psi", Formula::var("phi"))]);
        assert_eq!(f.to_string(), "(psi -> phi) -> (phi -> chi) -> psi -> chi");
        assert_eq!(schema("P0").unwrap().instantiate_simple().free_vars(), vec!["p"]);
    }
}

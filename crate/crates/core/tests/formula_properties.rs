mod common;

use blchang_core::formula::{evaluate, parse, schemas, Formula};
use blchang_core::{Chain, Valuation};
use common::{chain, element, formula, raw, Raw, BOUNDED, MV_CHAINS};
use proptest::prelude::*;

fn valuation(c: &Chain, rs: &[Raw; 3]) -> Valuation {
    let mut v = Valuation::new();
    for (name, r) in ["p", "q", "r"].iter().zip(rs) {
        v.set(*name, element(c, r));
    }
    v
}

fn raws() -> impl Strategy<Value = [Raw; 3]> {
    [raw(), raw(), raw()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn render_parse_round_trip(f in formula()) {
        prop_assert_eq!(parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn lattice_connectives_are_meet_and_join(f in formula(), g in formula(), rs in raws()) {
        for s in BOUNDED {
            let c = chain(s);
            let v = valuation(&c, &rs);
            let (x, y) = (evaluate(&f, &c, &v).unwrap(), evaluate(&g, &c, &v).unwrap());
            let m = evaluate(&Formula::meet(f.clone(), g.clone()), &c, &v).unwrap();
            let j = evaluate(&Formula::join(f.clone(), g.clone()), &c, &v).unwrap();
            prop_assert_eq!(m, c.meet(&x, &y).unwrap(), "{}", s);
            prop_assert_eq!(j, c.join(&x, &y).unwrap(), "{}", s);
        }
    }

    #[test]
    fn expansion_preserves_value(f in formula(), rs in raws()) {
        for s in ["MV(5)", "C", "V", "C ++ LukStd"] {
            let c = chain(s);
            let v = valuation(&c, &rs);
            prop_assert_eq!(evaluate(&f, &c, &v).unwrap(), evaluate(&f.expand(), &c, &v).unwrap());
        }
    }

    #[test]
    fn vee_bar_is_strong_disjunction_on_mv_chains(f in formula(), g in formula(), rs in raws()) {
        for s in MV_CHAINS {
            let c = chain(s);
            let v = valuation(&c, &rs);
            let a = evaluate(&Formula::vee_bar(f.clone(), g.clone()), &c, &v).unwrap();
            let b = evaluate(&Formula::strong_disj(f.clone(), g.clone()), &c, &v).unwrap();
            prop_assert_eq!(a, b, "{}", s);
        }
    }

    #[test]
    fn schemas_are_valid_where_their_logic_holds(
        phi in formula(), psi in formula(), chi in formula(), rs in raws()
    ) {
        let subst = [("phi", phi), ("psi", psi), ("chi", chi)];
        for schema in schemas() {
            let chains: &[&str] = match schema.name {
                "INV" => MV_CHAINS,
                "CHA" => &["C", "V", "omega*V", "GodStd", "ProdStd", "G(4)"],
                "P0" => &["C", "V", "omega*V", "GodStd", "ProdStd", "C ++ LukStd"],
                _ => BOUNDED,
            };
            let f = schema.instantiate(&subst);
            for s in chains {
                let c = chain(s);
                let v = valuation(&c, &rs);
                prop_assert_eq!(evaluate(&f, &c, &v).unwrap(), c.top(), "{} on {}", schema.name, s);
            }
        }
    }
}

#[test]
fn grammar_precedence() {
    let f = parse("!p & q /\\ r \\/ p -> q -> r <-> p").unwrap();
    let expected = Formula::iff(
        Formula::imp(
            Formula::join(
                Formula::meet(
                    Formula::conj(Formula::negation(Formula::var("p")), Formula::var("q")),
                    Formula::var("r"),
                ),
                Formula::var("p"),
            ),
            Formula::imp(Formula::var("q"), Formula::var("r")),
        ),
        Formula::var("p"),
    );
    assert_eq!(f, expected);
}

#[test]
fn hoops_refuse_formula_evaluation() {
    let c = chain("Canc");
    let v = Valuation::new().with("p", blchang_core::ChainElement::rat(1, 2));
    assert!(evaluate(&parse("p -> p").unwrap(), &c, &v).is_err());
}

use illoc_core::syntax::{parse, parse_formula, print, print_document, ActDefinitions, Formula, ParseError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_formula(rng: &mut ChaCha8Rng, depth: usize) -> Formula {
    if depth == 0 || rng.gen_ratio(1, 5) {
        let names = ["p", "q", "r1", "long_name", "x_2"];
        return Formula::atom(names[rng.gen_range(0..names.len())]);
    }
    let d = depth - 1;
    match rng.gen_range(0..5) {
        0 => Formula::not(random_formula(rng, d)),
        1 => Formula::and(random_formula(rng, d), random_formula(rng, d)),
        2 => Formula::or(random_formula(rng, d), random_formula(rng, d)),
        3 => Formula::implies(random_formula(rng, d), random_formula(rng, d)),
        _ => {
            let forces = ["think", "promise", "order", "f"];
            Formula::force(forces[rng.gen_range(0..forces.len())], random_formula(rng, d))
        }
    }
}

#[test]
fn print_then_parse_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let f = random_formula(&mut rng, 6);
        assert!(f.depth() <= 7);
        let text = print(&f);
        assert_eq!(parse_formula(&text).unwrap(), f, "{text}");
    }
}

#[test]
fn documents_round_trip() {
    let src = "act x = [promise](~y);\n# comment\nact y = [order](x & p);\nx -> y\n";
    let doc = parse(src).unwrap();
    assert_eq!(doc.definitions.len(), 2);
    assert_eq!(doc.formula, Some(Formula::implies(Formula::act_ref("x"), Formula::act_ref("y"))));
    let printed = print_document(&doc);
    assert_eq!(parse(&printed).unwrap(), doc);
}

#[test]
fn minimal_parentheses() {
    let f = Formula::and(Formula::atom("p"), Formula::or(Formula::atom("q"), Formula::atom("r")));
    assert_eq!(print(&f), "p & (q | r)");
    let g = Formula::implies(Formula::atom("p"), Formula::implies(Formula::atom("q"), Formula::atom("r")));
    assert_eq!(print(&g), "p -> q -> r");
    let h = Formula::implies(Formula::implies(Formula::atom("p"), Formula::atom("q")), Formula::atom("r"));
    assert_eq!(print(&h), "(p -> q) -> r");
    let i = Formula::and(Formula::and(Formula::atom("p"), Formula::atom("q")), Formula::atom("r"));
    assert_eq!(print(&i), "p & q & r");
    let j = Formula::and(Formula::atom("p"), Formula::and(Formula::atom("q"), Formula::atom("r")));
    assert_eq!(print(&j), "p & (q & r)");
}

fn err(src: &str) -> ParseError {
    parse(src).expect_err(src)
}

#[test]
fn grammar_errors_carry_positions() {
    let cases: &[(&str, usize, usize)] = &[
        ("p &", 1, 4),
        ("p q", 1, 3),
        ("(p", 1, 3),
        ("[think] p", 1, 9),
        ("[think](p", 1, 10),
        ("[](p)", 1, 2),
        ("[Think](p)", 1, 2),
        ("p -> -> q", 1, 6),
        ("~", 1, 2),
        ("p $ q", 1, 3),
        ("act x = p", 1, 10),
        ("act = p;", 1, 5),
        ("act x p;", 1, 7),
        ("act x = p;\nact x = q;\nx", 2, 5),
        ("p\n  & )", 2, 5),
        ("act", 1, 4),
        ("p -> act", 1, 6),
    ];
    for &(src, line, column) in cases {
        let e = err(src);
        assert_eq!((e.line, e.column), (line, column), "{src:?}: {e}");
        assert!(!e.expected.is_empty(), "{src:?}");
        let shown = e.to_string();
        assert!(shown.starts_with(&format!("{line}:{column}: expected ")), "{shown}");
    }
}

#[test]
fn column_counts_characters() {
    let e = err("[f](α) & ");
    assert_eq!(e.line, 1);
    assert!(e.column <= 10);
}

#[test]
fn parse_formula_rejects_definitions() {
    assert!(parse_formula("act x = p; x").is_err());
    assert!(parse_formula("act x = p;").is_err());
}

#[test]
fn forward_references_resolve() {
    let doc = parse("act x = [f](y);\nact y = p;\nx").unwrap();
    assert_eq!(doc.definitions.get("x"), Some(&Formula::force("f", Formula::act_ref("y"))));
    let defs: &ActDefinitions = &doc.definitions;
    assert_eq!(defs.inline(&Formula::act_ref("x")).unwrap(), Formula::force("f", Formula::atom("p")));
}

#[test]
fn force_sets() {
    let defs = ActDefinitions::new();
    let f = |s: &str| parse_formula(s).unwrap();
    assert!(defs.is_force_free(&f("p & q")).unwrap());
    assert_eq!(f("[promise](p) | q").forces().into_iter().collect::<Vec<_>>(), ["promise"]);
    assert_eq!(f("[a]([b](p))").forces().into_iter().collect::<Vec<_>>(), ["a", "b"]);
    let doc = parse("act x = [f](p);\nx & q").unwrap();
    assert!(!doc.definitions.is_force_free(doc.formula.as_ref().unwrap()).unwrap());
}

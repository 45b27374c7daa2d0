use alloc::string::String;

use super::{Document, Formula};

const IMPLIES: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Implies(..) => IMPLIES,
        Formula::Or(..) => OR,
        Formula::And(..) => AND,
        _ => UNARY,
    }
}

fn write(f: &Formula, min: u8, out: &mut String) {
    let parens = precedence(f) < min;
    if parens {
        out.push('(');
    }
    match f {
        Formula::Atom(n) | Formula::ActRef(n) => out.push_str(n),
        Formula::Not(x) => {
            out.push('~');
            write(x, UNARY, out);
        }
        Formula::Force(n, x) => {
            out.push('[');
            out.push_str(n);
            out.push_str("](");
            write(x, 0, out);
            out.push(')');
        }
        Formula::And(l, r) => {
            write(l, AND, out);
            out.push_str(" & ");
            write(r, UNARY, out);
        }
        Formula::Or(l, r) => {
            write(l, OR, out);
            out.push_str(" | ");
            write(r, AND, out);
        }
        Formula::Implies(l, r) => {
            write(l, OR, out);
            out.push_str(" -> ");
            write(r, IMPLIES, out);
        }
    }
    if parens {
        out.push(')');
    }
}

/// Canonical text with the fewest parentheses the grammar allows.
pub fn print(f: &Formula) -> String {
    let mut out = String::new();
    write(f, 0, &mut out);
    out
}

/// One `act` line per definition, then the main formula if any.
pub fn print_document(doc: &Document) -> String {
    let mut out = String::new();
    for (name, body) in doc.definitions.iter() {
        out.push_str("act ");
        out.push_str(name);
        out.push_str(" = ");
        write(body, 0, &mut out);
        out.push_str(";\n");
    }
    if let Some(f) = &doc.formula {
        write(f, 0, &mut out);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::parse_formula;
    use super::*;

    fn a(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn minimal_parentheses() {
        assert_eq!(print(&Formula::and(a("p"), Formula::or(a("q"), a("r")))), "p & (q | r)");
        assert_eq!(print(&Formula::implies(a("p"), Formula::implies(a("q"), a("r")))), "p -> q -> r");
        assert_eq!(print(&Formula::implies(Formula::implies(a("p"), a("q")), a("r"))), "(p -> q) -> r");
        assert_eq!(print(&Formula::or(a("p"), Formula::or(a("q"), a("r")))), "p | (q | r)");
        assert_eq!(print(&Formula::not(Formula::and(a("p"), a("q")))), "~(p & q)");
        assert_eq!(print(&Formula::force("f", Formula::implies(a("p"), a("q")))), "[f](p -> q)");
    }

    #[test]
    fn canonical_form_is_stable() {
        for s in ["~[order](p & ~p)", "[a]([b](p)) -> ~~q", "(p | q) & r"] {
            assert_eq!(print(&parse_formula(s).unwrap()), s);
        }
        assert_eq!(print(&parse_formula("((p))&(q)").unwrap()), "p & q");
    }
}

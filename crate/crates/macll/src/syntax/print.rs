//! Printers for the ASCII syntax and a LaTeX form for proof-tree output.

use super::{Formula, Sequent, Structure, Symbols};

fn var_name(i: u32, symbols: Option<&Symbols>) -> String {
    match symbols.and_then(|s| s.name_of(i)) {
        Some(name) => name.to_string(),
        None => format!("p{i}"),
    }
}

fn is_binary(f: &Formula) -> bool {
    matches!(
        f,
        Formula::Tensor(..) | Formula::RImpl(..) | Formula::LImpl(..)
    )
}

fn atom_or_parens(f: &Formula, symbols: Option<&Symbols>) -> String {
    if is_binary(f) {
        format!("({})", display_formula(f, symbols))
    } else {
        display_formula(f, symbols)
    }
}

/// Canonical ASCII print. Every nested binary connective is parenthesized,
/// so the output always re-parses.
pub fn display_formula(f: &Formula, symbols: Option<&Symbols>) -> String {
    match f {
        Formula::Var(i) => var_name(*i, symbols),
        Formula::Unit => "1".to_string(),
        Formula::Bang(g) => format!("!{}", atom_or_parens(g, symbols)),
        Formula::Tensor(l, r) => format!(
            "{} * {}",
            atom_or_parens(l, symbols),
            atom_or_parens(r, symbols)
        ),
        Formula::RImpl(arg, res) => format!(
            "{} \\ {}",
            atom_or_parens(arg, symbols),
            atom_or_parens(res, symbols)
        ),
        Formula::LImpl(res, arg) => format!(
            "{} / {}",
            atom_or_parens(res, symbols),
            atom_or_parens(arg, symbols)
        ),
    }
}

pub fn display_structure(g: &Structure, symbols: Option<&Symbols>) -> String {
    match g {
        Structure::Empty => "()".to_string(),
        Structure::Leaf(f) => display_formula(f, symbols),
        Structure::Node(l, r) => format!(
            "({}, {})",
            display_structure(l, symbols),
            display_structure(r, symbols)
        ),
    }
}

pub fn display_sequent(s: &Sequent, symbols: Option<&Symbols>) -> String {
    format!(
        "{} |- {}",
        display_structure(&s.antecedent, symbols),
        display_formula(&s.succedent, symbols)
    )
}

fn latex_atom_or_parens(f: &Formula, symbols: Option<&Symbols>) -> String {
    if is_binary(f) {
        format!("({})", latex_formula(f, symbols))
    } else {
        latex_formula(f, symbols)
    }
}

pub fn latex_formula(f: &Formula, symbols: Option<&Symbols>) -> String {
    match f {
        Formula::Var(i) => match symbols.and_then(|s| s.name_of(*i)) {
            Some(name) => format!("\\mathit{{{name}}}"),
            None => format!("p_{{{i}}}"),
        },
        Formula::Unit => "\\mathbf{1}".to_string(),
        Formula::Bang(g) => format!("{{!}}{}", latex_atom_or_parens(g, symbols)),
        Formula::Tensor(l, r) => format!(
            "{} \\otimes {}",
            latex_atom_or_parens(l, symbols),
            latex_atom_or_parens(r, symbols)
        ),
        Formula::RImpl(arg, res) => format!(
            "{} \\to {}",
            latex_atom_or_parens(arg, symbols),
            latex_atom_or_parens(res, symbols)
        ),
        Formula::LImpl(res, arg) => format!(
            "{} \\leftarrow {}",
            latex_atom_or_parens(res, symbols),
            latex_atom_or_parens(arg, symbols)
        ),
    }
}

/// LaTeX for a structure; the empty structure prints as nothing, matching
/// the usual sequent display `⊢ C`.
pub fn latex_structure(g: &Structure, symbols: Option<&Symbols>) -> String {
    match g {
        Structure::Empty => String::new(),
        Structure::Leaf(f) => latex_formula(f, symbols),
        Structure::Node(l, r) => format!(
            "({}, {})",
            latex_structure(l, symbols),
            latex_structure(r, symbols)
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    #[test]
    fn printing_parenthesizes_nested_binaries() {
        let mut syms = Symbols::new();
        let f = parse_formula("(a * b) * c", &mut syms).unwrap();
        assert_eq!(display_formula(&f, Some(&syms)), "(a * b) * c");
        let g = parse_formula("!(a \\ b)", &mut syms).unwrap();
        assert_eq!(display_formula(&g, Some(&syms)), "!(a \\ b)");
    }

    #[test]
    fn unnamed_variables_print_indexed() {
        let f = Formula::var(7);
        assert_eq!(display_formula(&f, None), "p7");
    }
}

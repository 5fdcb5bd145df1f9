//! The bang-eliminating translation into the pure multiplicative fragment.
//!
//! Variables move to odd indices, `!A` collapses to a fresh even-indexed
//! variable determined by the interner code of `A`, and the unit maps to
//! itself. The image is always bang-free and the map is injective for a
//! fixed interner.

use super::{Formula, Interner, Structure};

pub fn tau(f: &Formula, interner: &mut Interner) -> Formula {
    match f {
        Formula::Var(i) => Formula::Var(2 * *i + 1),
        Formula::Unit => Formula::Unit,
        Formula::Bang(a) => Formula::Var(2 * interner.code(a)),
        Formula::Tensor(l, r) => Formula::tensor(tau(l, interner), tau(r, interner)),
        Formula::RImpl(arg, res) => Formula::rimpl(tau(arg, interner), tau(res, interner)),
        Formula::LImpl(res, arg) => Formula::limpl(tau(res, interner), tau(arg, interner)),
    }
}

/// Pointwise extension to structures.
pub fn tau_structure(g: &Structure, interner: &mut Interner) -> Structure {
    match g {
        Structure::Empty => Structure::Empty,
        Structure::Leaf(f) => Structure::Leaf(tau(f, interner)),
        Structure::Node(l, r) => Structure::Node(
            Box::new(tau_structure(l, interner)),
            Box::new(tau_structure(r, interner)),
        ),
    }
}

/// Inverse of [`tau`] where defined: odd variables map back to their source
/// variable, even variables to the banged formula behind their code.
pub fn untau(f: &Formula, interner: &Interner) -> Option<Formula> {
    match f {
        Formula::Var(i) => {
            if i % 2 == 1 {
                Some(Formula::Var((i - 1) / 2))
            } else {
                interner.formula(i / 2).map(|a| Formula::bang(a.clone()))
            }
        }
        Formula::Unit => Some(Formula::Unit),
        Formula::Bang(_) => None,
        Formula::Tensor(l, r) => Some(Formula::tensor(untau(l, interner)?, untau(r, interner)?)),
        Formula::RImpl(arg, res) => {
            Some(Formula::rimpl(untau(arg, interner)?, untau(res, interner)?))
        }
        Formula::LImpl(res, arg) => {
            Some(Formula::limpl(untau(res, interner)?, untau(arg, interner)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variables_move_to_odd_indices() {
        let mut interner = Interner::new();
        assert_eq!(tau(&Formula::var(3), &mut interner), Formula::var(7));
    }

    #[test]
    fn homomorphic_on_implication() {
        let mut interner = Interner::new();
        let f = Formula::rimpl(Formula::var(0), Formula::var(1));
        assert_eq!(
            tau(&f, &mut interner),
            Formula::rimpl(Formula::var(1), Formula::var(3))
        );
    }

    #[test]
    fn bang_collapses_to_even_variable_by_code() {
        let mut interner = Interner::new();
        // first interned formula gets code 0, so !a maps to p0
        let f = Formula::bang(Formula::var(0));
        assert_eq!(tau(&f, &mut interner), Formula::var(0));
        // a second banged body gets code 1, hence p2
        let g = Formula::bang(Formula::var(5));
        assert_eq!(tau(&g, &mut interner), Formula::var(2));
    }

    #[test]
    fn unit_maps_to_itself() {
        let mut interner = Interner::new();
        assert_eq!(tau(&Formula::Unit, &mut interner), Formula::Unit);
    }

    #[test]
    fn output_is_bang_free_and_untau_inverts() {
        let mut interner = Interner::new();
        let f = Formula::tensor(
            Formula::bang(Formula::rimpl(Formula::var(0), Formula::Unit)),
            Formula::limpl(Formula::var(1), Formula::bang(Formula::var(0))),
        );
        let t = tau(&f, &mut interner);
        assert!(t.is_bang_free());
        assert_eq!(untau(&t, &interner), Some(f));
    }
}

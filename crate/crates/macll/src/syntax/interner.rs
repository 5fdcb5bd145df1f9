//! An injective encoding of formulas into naturals, assigned in first-seen
//! order. Codes are stable for the lifetime of one interner.

use super::Formula;
use std::collections::HashMap;

#[derive(Debug, Clone, Default)]
pub struct Interner {
    codes: HashMap<Formula, u32>,
    formulas: Vec<Formula>,
}

impl Interner {
    pub fn new() -> Interner {
        Interner::default()
    }

    /// Code of `f`, allocating the next natural on first sight.
    pub fn code(&mut self, f: &Formula) -> u32 {
        if let Some(&c) = self.codes.get(f) {
            return c;
        }
        let c = self.formulas.len() as u32;
        self.codes.insert(f.clone(), c);
        self.formulas.push(f.clone());
        c
    }

    /// Code of `f` if already assigned.
    pub fn lookup(&self, f: &Formula) -> Option<u32> {
        self.codes.get(f).copied()
    }

    /// Formula behind a code.
    pub fn formula(&self, code: u32) -> Option<&Formula> {
        self.formulas.get(code as usize)
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }
}

/// Spec operation name: the injective encoding.
pub fn intern_code(f: &Formula, interner: &mut Interner) -> u32 {
    interner.code(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_seen_order_and_stability() {
        let mut interner = Interner::new();
        let a = Formula::var(0);
        let b = Formula::var(1);
        assert_eq!(interner.code(&a), 0);
        assert_eq!(interner.code(&b), 1);
        assert_eq!(interner.code(&a), 0);
        assert_eq!(interner.formula(1), Some(&b));
    }

    #[test]
    fn distinct_formulas_get_distinct_codes() {
        let mut interner = Interner::new();
        let fs = [
            Formula::var(0),
            Formula::Unit,
            Formula::bang(Formula::var(0)),
            Formula::tensor(Formula::var(0), Formula::var(0)),
        ];
        let codes: Vec<u32> = fs.iter().map(|f| interner.code(f)).collect();
        let mut sorted = codes.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), codes.len());
    }
}

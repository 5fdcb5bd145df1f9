//! Backward reading of the rule schemas: all instances of all active rules
//! whose conclusion is a given sequent.

use super::{active_rules, RuleId, RulePos, SplitKind, SystemConfig};
use crate::syntax::{Address, Formula, Sequent, Side, Structure};

/// One rule instance read bottom-up: applying `rule` at `position` to
/// premises with the listed conclusions yields the original sequent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleInstance {
    pub rule: RuleId,
    pub position: Option<RulePos>,
    pub premises: Vec<Sequent>,
}

impl RuleInstance {
    fn new(rule: RuleId, position: Option<RulePos>, premises: Vec<Sequent>) -> RuleInstance {
        RuleInstance {
            rule,
            position,
            premises,
        }
    }
}

/// Complete enumeration of the instances of every active rule with
/// conclusion `s`. Cut is never enumerated. Structural rules come last so
/// that searches reach cheap refutations early.
pub fn premise_candidates(s: &Sequent, config: &SystemConfig) -> Vec<RuleInstance> {
    let rules = active_rules(config);
    let mut out = Vec::new();
    let ant = &s.antecedent;
    let succ = &s.succedent;

    // init
    if let Structure::Leaf(f) = ant {
        if f == succ {
            out.push(RuleInstance::new(RuleId::Init, None, vec![]));
        }
    }

    // 1R
    if ant.is_empty() && *succ == Formula::Unit {
        out.push(RuleInstance::new(RuleId::UnitR, None, vec![]));
    }

    // right bang rules
    if let Formula::Bang(c) = succ {
        if let Structure::Leaf(Formula::Bang(a)) = ant {
            if rules.contains(&RuleId::BangR) {
                out.push(RuleInstance::new(
                    RuleId::BangR,
                    None,
                    vec![Sequent::new(Structure::leaf((**a).clone()), (**c).clone())],
                ));
            }
            if rules.contains(&RuleId::BangR4) {
                out.push(RuleInstance::new(
                    RuleId::BangR4,
                    None,
                    vec![Sequent::new(ant.clone(), (**c).clone())],
                ));
            }
        }
        if rules.contains(&RuleId::BangRK) && ant.all_leaves_banged() {
            let stripped = ant.strip_leaf_bangs().expect("all leaves banged");
            out.push(RuleInstance::new(
                RuleId::BangRK,
                None,
                vec![Sequent::new(stripped, (**c).clone())],
            ));
        }
        if rules.contains(&RuleId::BangRK4) && ant.all_leaves_banged() {
            let leaves = ant.leaf_addresses();
            let n = leaves.len();
            for mask in 0..(1u64 << n) {
                let retention: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
                let premise_ant = apply_retention(ant, &retention);
                out.push(RuleInstance::new(
                    RuleId::BangRK4,
                    Some(RulePos::Retention(retention)),
                    vec![Sequent::new(premise_ant, (**c).clone())],
                ));
            }
        }
    }

    // unary left rules over leaves
    for addr in ant.leaf_addresses() {
        let Some(Structure::Leaf(f)) = ant.subtree(&addr) else {
            continue;
        };
        match f {
            Formula::Unit => {
                let premise = ant.replace_at(&addr, Structure::Empty).unwrap();
                out.push(RuleInstance::new(
                    RuleId::UnitL,
                    Some(RulePos::At(addr.clone())),
                    vec![Sequent::new(premise, succ.clone())],
                ));
            }
            Formula::Tensor(a, b) => {
                let pair = Structure::node(
                    Structure::leaf((**a).clone()),
                    Structure::leaf((**b).clone()),
                );
                let premise = ant.replace_at(&addr, pair).unwrap();
                out.push(RuleInstance::new(
                    RuleId::TensorL,
                    Some(RulePos::At(addr.clone())),
                    vec![Sequent::new(premise, succ.clone())],
                ));
            }
            Formula::Bang(a) => {
                if rules.contains(&RuleId::BangL) {
                    let premise = ant
                        .replace_at(&addr, Structure::leaf((**a).clone()))
                        .unwrap();
                    out.push(RuleInstance::new(
                        RuleId::BangL,
                        Some(RulePos::At(addr.clone())),
                        vec![Sequent::new(premise, succ.clone())],
                    ));
                }
            }
            _ => {}
        }
    }

    // right implication rules
    if let Formula::RImpl(a, b) = succ {
        let premise_ant = Structure::node(Structure::leaf((**a).clone()), ant.clone());
        out.push(RuleInstance::new(
            RuleId::RImplR,
            None,
            vec![Sequent::new(premise_ant, (**b).clone())],
        ));
    }
    if let Formula::LImpl(b, a) = succ {
        let premise_ant = Structure::node(ant.clone(), Structure::leaf((**a).clone()));
        out.push(RuleInstance::new(
            RuleId::LImplR,
            None,
            vec![Sequent::new(premise_ant, (**b).clone())],
        ));
    }

    // tensor right: all splits whose normalized pair is the antecedent
    if let Formula::Tensor(a, b) = succ {
        if let Structure::Node(l, r) = ant {
            out.push(RuleInstance::new(
                RuleId::TensorR,
                Some(RulePos::Split(SplitKind::Children)),
                vec![
                    Sequent::new((**l).clone(), (**a).clone()),
                    Sequent::new((**r).clone(), (**b).clone()),
                ],
            ));
        }
        out.push(RuleInstance::new(
            RuleId::TensorR,
            Some(RulePos::Split(SplitKind::EmptyLeft)),
            vec![
                Sequent::new(Structure::Empty, (**a).clone()),
                Sequent::new(ant.clone(), (**b).clone()),
            ],
        ));
        if !ant.is_empty() {
            out.push(RuleInstance::new(
                RuleId::TensorR,
                Some(RulePos::Split(SplitKind::EmptyRight)),
                vec![
                    Sequent::new(ant.clone(), (**a).clone()),
                    Sequent::new(Structure::Empty, (**b).clone()),
                ],
            ));
        }
    }

    // left implication rules: the group (Δ, A→B) resp. (B←A, Δ), with the
    // empty-argument instance always available at the operator leaf itself
    for addr in ant.leaf_addresses() {
        let Some(Structure::Leaf(f)) = ant.subtree(&addr) else {
            continue;
        };
        match f {
            Formula::RImpl(a, b) => {
                let host = ant
                    .replace_at(&addr, Structure::leaf((**b).clone()))
                    .unwrap();
                out.push(RuleInstance::new(
                    RuleId::RImplL,
                    Some(RulePos::At(addr.clone())),
                    vec![
                        Sequent::new(Structure::Empty, (**a).clone()),
                        Sequent::new(host, succ.clone()),
                    ],
                ));
                if addr.0.last() == Some(&Side::Right) {
                    let parent = Address(addr.0[..addr.0.len() - 1].to_vec());
                    if let Some(Structure::Node(delta, _)) = ant.subtree(&parent) {
                        let host = ant
                            .replace_at(&parent, Structure::leaf((**b).clone()))
                            .unwrap();
                        out.push(RuleInstance::new(
                            RuleId::RImplL,
                            Some(RulePos::At(parent)),
                            vec![
                                Sequent::new((**delta).clone(), (**a).clone()),
                                Sequent::new(host, succ.clone()),
                            ],
                        ));
                    }
                }
            }
            Formula::LImpl(b, a) => {
                let host = ant
                    .replace_at(&addr, Structure::leaf((**b).clone()))
                    .unwrap();
                out.push(RuleInstance::new(
                    RuleId::LImplL,
                    Some(RulePos::At(addr.clone())),
                    vec![
                        Sequent::new(Structure::Empty, (**a).clone()),
                        Sequent::new(host, succ.clone()),
                    ],
                ));
                if addr.0.last() == Some(&Side::Left) {
                    let parent = Address(addr.0[..addr.0.len() - 1].to_vec());
                    if let Some(Structure::Node(_, delta)) = ant.subtree(&parent) {
                        let host = ant
                            .replace_at(&parent, Structure::leaf((**b).clone()))
                            .unwrap();
                        out.push(RuleInstance::new(
                            RuleId::LImplL,
                            Some(RulePos::At(parent)),
                            vec![
                                Sequent::new((**delta).clone(), (**a).clone()),
                                Sequent::new(host, succ.clone()),
                            ],
                        ));
                    }
                }
            }
            _ => {}
        }
    }

    // structural rules last
    if rules.contains(&RuleId::C) {
        for addr in ant.leaf_addresses() {
            if let Some(Structure::Leaf(f @ Formula::Bang(_))) = ant.subtree(&addr) {
                let pair = Structure::node(Structure::leaf(f.clone()), Structure::leaf(f.clone()));
                let premise = ant.replace_at(&addr, pair).unwrap();
                out.push(RuleInstance::new(
                    RuleId::C,
                    Some(RulePos::At(addr.clone())),
                    vec![Sequent::new(premise, succ.clone())],
                ));
            }
        }
    }
    if rules.contains(&RuleId::CK) {
        for addr in ant.subtree_addresses() {
            let sub = ant.subtree(&addr).unwrap();
            if !sub.is_empty() && sub.all_leaves_banged() {
                let pair = Structure::node(sub.clone(), sub.clone());
                let premise = ant.replace_at(&addr, pair).unwrap();
                out.push(RuleInstance::new(
                    RuleId::CK,
                    Some(RulePos::At(addr.clone())),
                    vec![Sequent::new(premise, succ.clone())],
                ));
            }
        }
    }
    if rules.contains(&RuleId::W) {
        for addr in ant.leaf_addresses() {
            if let Some(Structure::Leaf(Formula::Bang(_))) = ant.subtree(&addr) {
                let premise = ant.replace_at(&addr, Structure::Empty).unwrap();
                out.push(RuleInstance::new(
                    RuleId::W,
                    Some(RulePos::At(addr.clone())),
                    vec![Sequent::new(premise, succ.clone())],
                ));
            }
        }
    }

    out
}

/// Premise antecedent of a K4 right instance: leaves with `true` retention
/// keep their bang, the rest lose it.
pub fn apply_retention(ant: &Structure, retention: &[bool]) -> Structure {
    fn go(g: &Structure, retention: &[bool], next: &mut usize) -> Structure {
        match g {
            Structure::Empty => Structure::Empty,
            Structure::Leaf(f) => {
                let keep = retention.get(*next).copied().unwrap_or(true);
                *next += 1;
                if keep {
                    Structure::Leaf(f.clone())
                } else {
                    match f {
                        Formula::Bang(inner) => Structure::Leaf((**inner).clone()),
                        other => Structure::Leaf(other.clone()),
                    }
                }
            }
            Structure::Node(l, r) => Structure::Node(
                Box::new(go(l, retention, next)),
                Box::new(go(r, retention, next)),
            ),
        }
    }
    let mut next = 0;
    go(ant, retention, &mut next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_sequent, Symbols};

    fn seq(text: &str) -> Sequent {
        parse_sequent(text, &mut Symbols::new()).unwrap()
    }

    #[test]
    fn tensor_right_split_after_first_leaf() {
        let s = seq("(a, b) |- a * b");
        let cands = premise_candidates(&s, &SystemConfig::new());
        let found = cands.iter().any(|c| {
            c.rule == RuleId::TensorR
                && c.position == Some(RulePos::Split(SplitKind::Children))
                && c.premises == vec![seq("a |- a"), seq("b |- b")]
        });
        assert!(found, "missing children split: {cands:?}");
    }

    #[test]
    fn four_system_enumerates_both_bang_rules_and_init() {
        let s = seq("!a |- !a");
        let cfg = SystemConfig::new().with_four();
        let cands = premise_candidates(&s, &cfg);
        assert!(cands
            .iter()
            .any(|c| c.rule == RuleId::BangR && c.premises == vec![seq("a |- a")]));
        assert!(cands
            .iter()
            .any(|c| c.rule == RuleId::BangR4 && c.premises == vec![seq("!a |- a")]));
        assert!(cands
            .iter()
            .any(|c| c.rule == RuleId::Init && c.premises.is_empty()));
    }

    #[test]
    fn ck_candidate_per_banged_substructure() {
        let s = seq("((!a, !b), c) |- c");
        let cfg = SystemConfig::new().with_contraction().with_k();
        let cands: Vec<_> = premise_candidates(&s, &cfg)
            .into_iter()
            .filter(|c| c.rule == RuleId::CK)
            .collect();
        // banged substructures: (!a,!b), !a, !b
        assert_eq!(cands.len(), 3);
        assert!(cands
            .iter()
            .any(|c| c.premises == vec![seq("(((!a, !b), (!a, !b)), c) |- c")]));
    }

    #[test]
    fn no_cut_is_ever_enumerated() {
        for text in ["a |- a", "(a, b) |- a * b", "!a |- !a"] {
            let s = seq(text);
            for cfg in SystemConfig::all() {
                assert!(premise_candidates(&s, &cfg)
                    .iter()
                    .all(|c| c.rule != RuleId::Cut));
            }
        }
    }

    #[test]
    fn empty_argument_implication_instances_exist() {
        // (1 \ a) |- a must expose the Δ = ∅ instance of the left rule
        let s = seq("1 \\ a |- a");
        let cands = premise_candidates(&s, &SystemConfig::new());
        assert!(cands.iter().any(|c| {
            c.rule == RuleId::RImplL && c.premises == vec![seq("() |- 1"), seq("a |- a")]
        }));
    }

    #[test]
    fn retention_enumerates_all_subsets() {
        let s = seq("(!a, !b) |- !(a * b)");
        let cfg = SystemConfig::new().with_k().with_four();
        let cands: Vec<_> = premise_candidates(&s, &cfg)
            .into_iter()
            .filter(|c| c.rule == RuleId::BangRK4)
            .collect();
        assert_eq!(cands.len(), 4);
        assert!(cands
            .iter()
            .any(|c| c.premises == vec![seq("(a, b) |- a * b")]));
        assert!(cands
            .iter()
            .any(|c| c.premises == vec![seq("(!a, !b) |- a * b")]));
        assert!(cands
            .iter()
            .any(|c| c.premises == vec![seq("(!a, b) |- a * b")]));
    }
}

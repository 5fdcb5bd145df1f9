//! The proof checker: every node must instantiate an active rule schema.

use super::candidates::{apply_retention, premise_candidates};
use super::{RuleId, RuleInstance, RulePos, SplitKind, SystemConfig};
use crate::calculus::{active_rules, Proof};
use crate::syntax::{Formula, Sequent, Structure};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckReason {
    InactiveRule,
    CutNotAllowed,
    BadInstance(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid {rule} node at path {path:?} ({sequent}): {reason:?}")]
pub struct CheckError {
    /// Premise indices from the root to the failing node.
    pub path: Vec<usize>,
    pub sequent: Sequent,
    pub rule: RuleId,
    pub reason: CheckReason,
}

/// Check a proof against a configuration. `allow_cut` admits cut nodes, as
/// needed when validating inputs to cut elimination.
pub fn check_proof(p: &Proof, config: &SystemConfig, allow_cut: bool) -> Result<(), CheckError> {
    let mut path = Vec::new();
    check_rec(p, config, allow_cut, &mut path)
}

fn check_rec(
    p: &Proof,
    config: &SystemConfig,
    allow_cut: bool,
    path: &mut Vec<usize>,
) -> Result<(), CheckError> {
    let premises: Vec<Sequent> = p.premises.iter().map(|q| q.conclusion.clone()).collect();
    check_node(
        &p.conclusion,
        p.rule,
        p.position.as_ref(),
        &premises,
        config,
        allow_cut,
    )
    .map_err(|reason| CheckError {
        path: path.clone(),
        sequent: p.conclusion.clone(),
        rule: p.rule,
        reason,
    })?;
    for (i, q) in p.premises.iter().enumerate() {
        path.push(i);
        check_rec(q, config, allow_cut, path)?;
        path.pop();
    }
    Ok(())
}

/// Check a single inference without recursing into subproofs.
pub fn check_node(
    conclusion: &Sequent,
    rule: RuleId,
    position: Option<&RulePos>,
    premises: &[Sequent],
    config: &SystemConfig,
    allow_cut: bool,
) -> Result<(), CheckReason> {
    if rule == RuleId::Cut {
        if !allow_cut {
            return Err(CheckReason::CutNotAllowed);
        }
        return check_cut(conclusion, position, premises);
    }
    if !active_rules(config).contains(&rule) {
        return Err(CheckReason::InactiveRule);
    }
    if let Some(pos) = position {
        let expected = instance_premises(conclusion, rule, Some(pos))
            .map_err(CheckReason::BadInstance)?;
        if expected == premises {
            Ok(())
        } else {
            Err(CheckReason::BadInstance(format!(
                "premises do not match the {rule} instance at the given position"
            )))
        }
    } else {
        match instance_premises(conclusion, rule, None) {
            Ok(expected) => {
                if expected == premises {
                    return Ok(());
                }
                Err(CheckReason::BadInstance(format!(
                    "premises do not match the unique {rule} instance"
                )))
            }
            Err(_) => {
                // positional rule without position data: search the schema
                if rule == RuleId::BangRK4 {
                    return check_retention_no_position(conclusion, premises);
                }
                let found = premise_candidates(conclusion, config)
                    .into_iter()
                    .any(|c| c.rule == rule && c.premises == premises);
                if found {
                    Ok(())
                } else {
                    Err(CheckReason::BadInstance(format!(
                        "no {rule} instance with these premises"
                    )))
                }
            }
        }
    }
}

fn check_cut(
    conclusion: &Sequent,
    position: Option<&RulePos>,
    premises: &[Sequent],
) -> Result<(), CheckReason> {
    let bad = |msg: &str| Err(CheckReason::BadInstance(msg.to_string()));
    if premises.len() != 2 {
        return bad("cut takes two premises");
    }
    let left = &premises[0];
    let right = &premises[1];
    if right.succedent != conclusion.succedent {
        return bad("cut conclusion succedent must come from the right premise");
    }
    let cut_formula = &left.succedent;
    let try_addr = |addr: &crate::syntax::Address| -> bool {
        match right.antecedent.subtree(addr) {
            Some(Structure::Leaf(f)) if f == cut_formula => {
                right
                    .antecedent
                    .replace_at(addr, left.antecedent.clone())
                    .map(|g| g == conclusion.antecedent)
                    .unwrap_or(false)
            }
            _ => false,
        }
    };
    match position {
        Some(RulePos::CutAt(addr)) => {
            if try_addr(addr) {
                Ok(())
            } else {
                bad("cut position does not reproduce the conclusion")
            }
        }
        Some(_) => bad("cut position must be a cut address"),
        None => {
            if right.antecedent.leaf_addresses().iter().any(try_addr) {
                Ok(())
            } else {
                bad("no occurrence of the cut formula reproduces the conclusion")
            }
        }
    }
}

/// Premises forced by (conclusion, rule, position). Errors when the rule
/// needs a position that is absent, or the position does not fit.
fn instance_premises(
    conclusion: &Sequent,
    rule: RuleId,
    position: Option<&RulePos>,
) -> Result<Vec<Sequent>, String> {
    let ant = &conclusion.antecedent;
    let succ = &conclusion.succedent;
    let fail = |msg: &str| Err(msg.to_string());
    match rule {
        RuleId::Init => match ant {
            Structure::Leaf(f) if f == succ => Ok(vec![]),
            _ => fail("init requires A |- A"),
        },
        RuleId::UnitR => {
            if ant.is_empty() && *succ == Formula::Unit {
                Ok(vec![])
            } else {
                fail("1R concludes () |- 1")
            }
        }
        RuleId::BangR => match (ant, succ) {
            (Structure::Leaf(Formula::Bang(a)), Formula::Bang(c)) => Ok(vec![Sequent::new(
                Structure::leaf((**a).clone()),
                (**c).clone(),
            )]),
            _ => fail("!R concludes !A |- !C"),
        },
        RuleId::BangR4 => match (ant, succ) {
            (Structure::Leaf(Formula::Bang(_)), Formula::Bang(c)) => {
                Ok(vec![Sequent::new(ant.clone(), (**c).clone())])
            }
            _ => fail("!R4 concludes !A |- !C"),
        },
        RuleId::BangRK => match succ {
            Formula::Bang(c) => match ant.strip_leaf_bangs() {
                Some(stripped) => Ok(vec![Sequent::new(stripped, (**c).clone())]),
                None => fail("!RK requires every antecedent leaf banged"),
            },
            _ => fail("!RK concludes !Γ |- !C"),
        },
        RuleId::BangRK4 => {
            let Formula::Bang(c) = succ else {
                return fail("!RK4 concludes !Γ |- !C");
            };
            if !ant.all_leaves_banged() {
                return fail("!RK4 requires every antecedent leaf banged");
            }
            match position {
                Some(RulePos::Retention(keep)) => {
                    if keep.len() != ant.leaf_count() {
                        return fail("retention length does not match leaf count");
                    }
                    Ok(vec![Sequent::new(
                        apply_retention(ant, keep),
                        (**c).clone(),
                    )])
                }
                _ => fail("!RK4 needs a retention position"),
            }
        }
        RuleId::RImplR => match succ {
            Formula::RImpl(a, b) => Ok(vec![Sequent::new(
                Structure::node(Structure::leaf((**a).clone()), ant.clone()),
                (**b).clone(),
            )]),
            _ => fail("\\R concludes Γ |- A \\ B"),
        },
        RuleId::LImplR => match succ {
            Formula::LImpl(b, a) => Ok(vec![Sequent::new(
                Structure::node(ant.clone(), Structure::leaf((**a).clone())),
                (**b).clone(),
            )]),
            _ => fail("/R concludes Γ |- B / A"),
        },
        RuleId::TensorR => {
            let Formula::Tensor(a, b) = succ else {
                return fail("*R concludes Γ |- A * B");
            };
            match position {
                Some(RulePos::Split(SplitKind::Children)) => match ant {
                    Structure::Node(l, r) => Ok(vec![
                        Sequent::new((**l).clone(), (**a).clone()),
                        Sequent::new((**r).clone(), (**b).clone()),
                    ]),
                    _ => fail("children split needs a node antecedent"),
                },
                Some(RulePos::Split(SplitKind::EmptyLeft)) => Ok(vec![
                    Sequent::new(Structure::Empty, (**a).clone()),
                    Sequent::new(ant.clone(), (**b).clone()),
                ]),
                Some(RulePos::Split(SplitKind::EmptyRight)) => Ok(vec![
                    Sequent::new(ant.clone(), (**a).clone()),
                    Sequent::new(Structure::Empty, (**b).clone()),
                ]),
                _ => fail("*R needs a split position"),
            }
        }
        RuleId::UnitL | RuleId::TensorL | RuleId::BangL | RuleId::C | RuleId::CK | RuleId::W => {
            let Some(RulePos::At(addr)) = position else {
                return fail("left rule needs an address position");
            };
            let Some(sub) = ant.subtree(addr) else {
                return fail("position address is invalid");
            };
            let replacement = match (rule, sub) {
                (RuleId::UnitL, Structure::Leaf(Formula::Unit)) => Structure::Empty,
                (RuleId::TensorL, Structure::Leaf(Formula::Tensor(a, b))) => Structure::node(
                    Structure::leaf((**a).clone()),
                    Structure::leaf((**b).clone()),
                ),
                (RuleId::BangL, Structure::Leaf(Formula::Bang(a))) => {
                    Structure::leaf((**a).clone())
                }
                (RuleId::C, Structure::Leaf(f @ Formula::Bang(_))) => {
                    Structure::node(Structure::leaf(f.clone()), Structure::leaf(f.clone()))
                }
                (RuleId::CK, sub) if !sub.is_empty() && sub.all_leaves_banged() => {
                    Structure::node(sub.clone(), sub.clone())
                }
                (RuleId::W, Structure::Leaf(Formula::Bang(_))) => Structure::Empty,
                _ => return fail("rule does not apply at the addressed subtree"),
            };
            let premise_ant = ant.replace_at(addr, replacement).unwrap();
            Ok(vec![Sequent::new(premise_ant, succ.clone())])
        }
        RuleId::RImplL | RuleId::LImplL => {
            let Some(RulePos::At(addr)) = position else {
                return fail("implication left rule needs a group address");
            };
            let Some(group) = ant.subtree(addr) else {
                return fail("position address is invalid");
            };
            let (delta, arg, res) = match (rule, group) {
                (RuleId::RImplL, Structure::Leaf(Formula::RImpl(a, b))) => {
                    (Structure::Empty, (**a).clone(), (**b).clone())
                }
                (RuleId::RImplL, Structure::Node(d, op)) => match op.as_ref() {
                    Structure::Leaf(Formula::RImpl(a, b)) => {
                        ((**d).clone(), (**a).clone(), (**b).clone())
                    }
                    _ => return fail("group is not (Δ, A \\ B)"),
                },
                (RuleId::LImplL, Structure::Leaf(Formula::LImpl(b, a))) => {
                    (Structure::Empty, (**a).clone(), (**b).clone())
                }
                (RuleId::LImplL, Structure::Node(op, d)) => match op.as_ref() {
                    Structure::Leaf(Formula::LImpl(b, a)) => {
                        ((**d).clone(), (**a).clone(), (**b).clone())
                    }
                    _ => return fail("group is not (B / A, Δ)"),
                },
                _ => return fail("rule does not apply at the addressed subtree"),
            };
            let host = ant.replace_at(addr, Structure::leaf(res)).unwrap();
            Ok(vec![
                Sequent::new(delta, arg),
                Sequent::new(host, succ.clone()),
            ])
        }
        RuleId::Cut => fail("cut handled separately"),
    }
}

fn check_retention_no_position(
    conclusion: &Sequent,
    premises: &[Sequent],
) -> Result<(), CheckReason> {
    let bad = |msg: &str| Err(CheckReason::BadInstance(msg.to_string()));
    if premises.len() != 1 {
        return bad("!RK4 takes one premise");
    }
    match infer_retention(&conclusion.antecedent, &premises[0].antecedent) {
        Some(keep) => {
            let expected = instance_premises(
                conclusion,
                RuleId::BangRK4,
                Some(&RulePos::Retention(keep)),
            )
            .map_err(CheckReason::BadInstance)?;
            if expected == premises {
                Ok(())
            } else {
                bad("premise does not match any retention")
            }
        }
        None => bad("premise shape does not match any retention"),
    }
}

/// Leafwise comparison of a K4 conclusion antecedent against a premise
/// antecedent: each premise leaf must be the conclusion leaf or its
/// bang-stripped form.
pub fn infer_retention(conclusion: &Structure, premise: &Structure) -> Option<Vec<bool>> {
    fn go(c: &Structure, p: &Structure, out: &mut Vec<bool>) -> bool {
        match (c, p) {
            (Structure::Empty, Structure::Empty) => true,
            (Structure::Leaf(cf), Structure::Leaf(pf)) => {
                if cf == pf {
                    out.push(true);
                    true
                } else if matches!(cf, Formula::Bang(inner) if **inner == *pf) {
                    out.push(false);
                    true
                } else {
                    false
                }
            }
            (Structure::Node(cl, cr), Structure::Node(pl, pr)) => {
                go(cl, pl, out) && go(cr, pr, out)
            }
            _ => false,
        }
    }
    let mut out = Vec::new();
    if go(conclusion, premise, &mut out) {
        Some(out)
    } else {
        None
    }
}

/// Resolve the concrete instance a proof node applies: its rule, a definite
/// position where the rule is positional, and the premise sequents. Fails
/// exactly when the node would fail the checker.
pub fn resolve_instance(
    p: &Proof,
    config: &SystemConfig,
    allow_cut: bool,
) -> Result<RuleInstance, CheckError> {
    let premises: Vec<Sequent> = p.premises.iter().map(|q| q.conclusion.clone()).collect();
    let err = |reason: CheckReason| CheckError {
        path: vec![],
        sequent: p.conclusion.clone(),
        rule: p.rule,
        reason,
    };
    check_node(
        &p.conclusion,
        p.rule,
        p.position.as_ref(),
        &premises,
        config,
        allow_cut,
    )
    .map_err(&err)?;
    if let Some(pos) = &p.position {
        return Ok(RuleInstance {
            rule: p.rule,
            position: Some(pos.clone()),
            premises,
        });
    }
    match p.rule {
        RuleId::Cut => {
            let left = &premises[0];
            let right = &premises[1];
            let cut_formula = &left.succedent;
            for addr in right.antecedent.leaf_addresses() {
                if matches!(right.antecedent.subtree(&addr), Some(Structure::Leaf(f)) if f == cut_formula)
                    && right
                        .antecedent
                        .replace_at(&addr, left.antecedent.clone())
                        .map(|g| g == p.conclusion.antecedent)
                        .unwrap_or(false)
                {
                    return Ok(RuleInstance {
                        rule: RuleId::Cut,
                        position: Some(RulePos::CutAt(addr)),
                        premises,
                    });
                }
            }
            Err(err(CheckReason::BadInstance("unresolvable cut".into())))
        }
        RuleId::BangRK4 => {
            let keep = infer_retention(&p.conclusion.antecedent, &premises[0].antecedent)
                .ok_or_else(|| err(CheckReason::BadInstance("unresolvable retention".into())))?;
            Ok(RuleInstance {
                rule: p.rule,
                position: Some(RulePos::Retention(keep)),
                premises,
            })
        }
        _ => {
            if let Some(inst) = premise_candidates(&p.conclusion, config)
                .into_iter()
                .find(|c| c.rule == p.rule && c.premises == premises)
            {
                return Ok(inst);
            }
            // non-positional rules (init, 1R, !R, !R4, !RK, \R, /R) land here
            // only if candidates missed them, which check_node rules out
            Ok(RuleInstance {
                rule: p.rule,
                position: None,
                premises,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::Proof;
    use crate::syntax::{parse_sequent, Symbols};

    fn seq(s: &str, syms: &mut Symbols) -> Sequent {
        parse_sequent(s, syms).unwrap()
    }

    /// The displayed cut-free contraction derivation of
    /// `!(a*b) |- (a*b)*(a*b)` in the contraction+k+t system, where the
    /// single-formula contraction is the one-leaf instance of the
    /// substructure rule.
    #[test]
    fn paper_style_ck_derivation_checks() {
        let mut sy = Symbols::new();
        let init = Proof::leaf(seq("a * b |- a * b", &mut sy), RuleId::Init);
        let bang_l = Proof::node(
            seq("!(a * b) |- a * b", &mut sy),
            RuleId::BangL,
            None,
            vec![init],
        );
        let tensor_r = Proof::node(
            seq("(!(a * b), !(a * b)) |- (a * b) * (a * b)", &mut sy),
            RuleId::TensorR,
            Some(RulePos::Split(SplitKind::Children)),
            vec![bang_l.clone(), bang_l],
        );
        let ck = Proof::node(
            seq("!(a * b) |- (a * b) * (a * b)", &mut sy),
            RuleId::CK,
            None,
            vec![tensor_r],
        );
        let cfg = SystemConfig::new().with_contraction().with_k().with_t();
        assert!(check_proof(&ck, &cfg, false).is_ok());
    }

    #[test]
    fn init_with_distinct_formulas_fails() {
        let mut sy = Symbols::new();
        let p = Proof::leaf(seq("a |- b", &mut sy), RuleId::Init);
        let e = check_proof(&p, &SystemConfig::new(), false).unwrap_err();
        assert!(matches!(e.reason, CheckReason::BadInstance(_)));
    }

    #[test]
    fn inactive_rule_fails() {
        let mut sy = Symbols::new();
        let a = Proof::leaf(seq("a |- a", &mut sy), RuleId::Init);
        let p = Proof::node(seq("!a |- !a", &mut sy), RuleId::BangR, None, vec![a]);
        let cfg = SystemConfig::new().with_k();
        let e = check_proof(&p, &cfg, false).unwrap_err();
        assert_eq!(e.reason, CheckReason::InactiveRule);
        assert!(check_proof(&p, &SystemConfig::new(), false).is_ok());
    }

    #[test]
    fn cut_nodes_require_permission() {
        let mut sy = Symbols::new();
        let left = Proof::leaf(seq("a |- a", &mut sy), RuleId::Init);
        let right = Proof::leaf(seq("a |- a", &mut sy), RuleId::Init);
        let cut = Proof::node(
            seq("a |- a", &mut sy),
            RuleId::Cut,
            None,
            vec![left, right],
        );
        assert!(check_proof(&cut, &SystemConfig::new(), false).is_err());
        assert!(check_proof(&cut, &SystemConfig::new(), true).is_ok());
    }

    #[test]
    fn every_candidate_instance_checks() {
        let mut sy = Symbols::new();
        let cases = [
            "(a, b) |- a * b",
            "!a |- !a",
            "(!a, (b, 1)) |- b * 1",
            "(!a, !b) |- !(a * b)",
            "(a \\ b, b / a) |- c",
            "1 \\ a |- a",
        ];
        for cfg in SystemConfig::all() {
            for text in cases {
                let s = seq(text, &mut sy);
                for inst in premise_candidates(&s, &cfg) {
                    assert_eq!(
                        check_node(
                            &s,
                            inst.rule,
                            inst.position.as_ref(),
                            &inst.premises,
                            &cfg,
                            false
                        ),
                        Ok(()),
                        "candidate {inst:?} of {s} fails in {cfg}"
                    );
                }
            }
        }
    }
}

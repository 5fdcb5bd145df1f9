//! System configuration, rule instances, proof objects and the proof checker.

mod candidates;
mod check;
mod latex;
mod serial;

pub use candidates::{premise_candidates, RuleInstance};
pub use check::{check_proof, resolve_instance, CheckError, CheckReason};
pub use latex::latex_proof;
pub use serial::{proof_from_json, proof_to_json};

use crate::syntax::{Address, Sequent};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// The pair (S ⊆ {c,w}, M ⊆ {k,t,4}) selecting the active rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SystemConfig {
    pub contraction: bool,
    pub weakening: bool,
    pub k: bool,
    pub t: bool,
    pub four: bool,
}

impl SystemConfig {
    pub fn new() -> SystemConfig {
        SystemConfig::default()
    }

    pub fn with_contraction(mut self) -> Self {
        self.contraction = true;
        self
    }

    pub fn with_weakening(mut self) -> Self {
        self.weakening = true;
        self
    }

    pub fn with_k(mut self) -> Self {
        self.k = true;
        self
    }

    pub fn with_t(mut self) -> Self {
        self.t = true;
        self
    }

    pub fn with_four(mut self) -> Self {
        self.four = true;
        self
    }

    /// Parse comma-separated label lists, e.g. `("c,w", "k,t")`. Empty
    /// strings select the empty set.
    pub fn parse(structural: &str, modal: &str) -> Result<SystemConfig, String> {
        let mut cfg = SystemConfig::new();
        for part in structural.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "c" => cfg.contraction = true,
                "w" => cfg.weakening = true,
                other => return Err(format!("unknown structural label '{other}' (expected c or w)")),
            }
        }
        for part in modal.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "k" => cfg.k = true,
                "t" => cfg.t = true,
                "4" => cfg.four = true,
                other => return Err(format!("unknown modal label '{other}' (expected k, t or 4)")),
            }
        }
        Ok(cfg)
    }

    /// A light system has no normal modal rule: k ∉ M.
    pub fn is_light(&self) -> bool {
        !self.k
    }

    /// All 16 light configurations (S ⊆ {c,w} × M ⊆ {t,4}).
    pub fn all_light() -> Vec<SystemConfig> {
        let mut out = Vec::new();
        for c in [false, true] {
            for w in [false, true] {
                for t in [false, true] {
                    for four in [false, true] {
                        out.push(SystemConfig {
                            contraction: c,
                            weakening: w,
                            k: false,
                            t,
                            four,
                        });
                    }
                }
            }
        }
        out
    }

    /// All 32 configurations.
    pub fn all() -> Vec<SystemConfig> {
        let mut out = Vec::new();
        for k in [false, true] {
            for cfg in SystemConfig::all_light() {
                out.push(SystemConfig { k, ..cfg });
            }
        }
        out
    }
}

impl fmt::Display for SystemConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = Vec::new();
        if self.contraction {
            s.push("c");
        }
        if self.weakening {
            s.push("w");
        }
        let mut m = Vec::new();
        if self.k {
            m.push("k");
        }
        if self.t {
            m.push("t");
        }
        if self.four {
            m.push("4");
        }
        write!(f, "({{{}}},{{{}}})", s.join(","), m.join(","))
    }
}

/// Closed enumeration of the rule schemas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    Init,
    TensorL,
    TensorR,
    RImplL,
    RImplR,
    LImplL,
    LImplR,
    UnitL,
    UnitR,
    BangL,
    BangR,
    BangRK,
    BangR4,
    BangRK4,
    C,
    CK,
    W,
    Cut,
}

impl RuleId {
    pub const ALL: [RuleId; 18] = [
        RuleId::Init,
        RuleId::TensorL,
        RuleId::TensorR,
        RuleId::RImplL,
        RuleId::RImplR,
        RuleId::LImplL,
        RuleId::LImplR,
        RuleId::UnitL,
        RuleId::UnitR,
        RuleId::BangL,
        RuleId::BangR,
        RuleId::BangRK,
        RuleId::BangR4,
        RuleId::BangRK4,
        RuleId::C,
        RuleId::CK,
        RuleId::W,
        RuleId::Cut,
    ];

    pub fn label(self) -> &'static str {
        match self {
            RuleId::Init => "init",
            RuleId::TensorL => "*L",
            RuleId::TensorR => "*R",
            RuleId::RImplL => "\\L",
            RuleId::RImplR => "\\R",
            RuleId::LImplL => "/L",
            RuleId::LImplR => "/R",
            RuleId::UnitL => "1L",
            RuleId::UnitR => "1R",
            RuleId::BangL => "!L",
            RuleId::BangR => "!R",
            RuleId::BangRK => "!RK",
            RuleId::BangR4 => "!R4",
            RuleId::BangRK4 => "!RK4",
            RuleId::C => "C",
            RuleId::CK => "CK",
            RuleId::W => "W",
            RuleId::Cut => "cut",
        }
    }

    /// Stable identifier used in proof serialization.
    pub fn json_id(self) -> &'static str {
        match self {
            RuleId::Init => "init",
            RuleId::TensorL => "tensor_l",
            RuleId::TensorR => "tensor_r",
            RuleId::RImplL => "rimpl_l",
            RuleId::RImplR => "rimpl_r",
            RuleId::LImplL => "limpl_l",
            RuleId::LImplR => "limpl_r",
            RuleId::UnitL => "unit_l",
            RuleId::UnitR => "unit_r",
            RuleId::BangL => "bang_l",
            RuleId::BangR => "bang_r",
            RuleId::BangRK => "bang_rk",
            RuleId::BangR4 => "bang_r4",
            RuleId::BangRK4 => "bang_rk4",
            RuleId::C => "contraction",
            RuleId::CK => "contraction_k",
            RuleId::W => "weakening",
            RuleId::Cut => "cut",
        }
    }

    pub fn from_json_id(s: &str) -> Option<RuleId> {
        RuleId::ALL.iter().copied().find(|r| r.json_id() == s)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Rules active in a configuration. Cut is admissible and never active.
pub fn active_rules(config: &SystemConfig) -> BTreeSet<RuleId> {
    let mut rules: BTreeSet<RuleId> = [
        RuleId::Init,
        RuleId::TensorL,
        RuleId::TensorR,
        RuleId::RImplL,
        RuleId::RImplR,
        RuleId::LImplL,
        RuleId::LImplR,
        RuleId::UnitL,
        RuleId::UnitR,
    ]
    .into_iter()
    .collect();
    // (!R) if M − t = ∅ or {4}; in a 4-system both (!R) and (!R4) are active.
    if !config.k {
        rules.insert(RuleId::BangR);
    }
    if config.k && !config.four {
        rules.insert(RuleId::BangRK);
    }
    if !config.k && config.four {
        rules.insert(RuleId::BangR4);
    }
    if config.k && config.four {
        rules.insert(RuleId::BangRK4);
    }
    if config.t {
        rules.insert(RuleId::BangL);
    }
    if config.contraction && !config.k {
        rules.insert(RuleId::C);
    }
    if config.contraction && config.k {
        rules.insert(RuleId::CK);
    }
    if config.weakening {
        rules.insert(RuleId::W);
    }
    rules
}

/// How the split point of a tensor-right instance relates to the conclusion
/// antecedent: its two children, or one side empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitKind {
    Children,
    EmptyLeft,
    EmptyRight,
}

/// Rule-specific position data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RulePos {
    /// Address of the acted-on leaf, contracted substructure, or the whole
    /// `(Δ, A→B)` group of an implication-left instance, within the
    /// conclusion antecedent.
    At(Address),
    /// Antecedent split for tensor right.
    Split(SplitKind),
    /// Bang retention per antecedent leaf, left to right, for the K4 right
    /// rule: `true` keeps the bang in the premise.
    Retention(Vec<bool>),
    /// Address of the cut formula within the right premise's antecedent.
    CutAt(Address),
}

/// A checkable proof tree. Each node records the rule and, optionally,
/// where it acted; premises are shared to keep memoized search cheap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub conclusion: Sequent,
    pub rule: RuleId,
    pub position: Option<RulePos>,
    pub premises: Vec<Arc<Proof>>,
}

impl Proof {
    pub fn leaf(conclusion: Sequent, rule: RuleId) -> Arc<Proof> {
        Arc::new(Proof {
            conclusion,
            rule,
            position: None,
            premises: Vec::new(),
        })
    }

    pub fn node(
        conclusion: Sequent,
        rule: RuleId,
        position: Option<RulePos>,
        premises: Vec<Arc<Proof>>,
    ) -> Arc<Proof> {
        Arc::new(Proof {
            conclusion,
            rule,
            position,
            premises,
        })
    }

    /// True iff some node of the tree is a cut.
    pub fn has_cut(&self) -> bool {
        self.rule == RuleId::Cut || self.premises.iter().any(|p| p.has_cut())
    }

    pub fn is_cut_free(&self) -> bool {
        !self.has_cut()
    }

    /// Number of rule applications in the tree.
    pub fn rule_count(&self) -> usize {
        1 + self.premises.iter().map(|p| p.rule_count()).sum::<usize>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn macll_core_always_active() {
        for cfg in SystemConfig::all() {
            let rules = active_rules(&cfg);
            for r in [
                RuleId::Init,
                RuleId::TensorL,
                RuleId::TensorR,
                RuleId::RImplL,
                RuleId::RImplR,
                RuleId::LImplL,
                RuleId::LImplR,
                RuleId::UnitL,
                RuleId::UnitR,
            ] {
                assert!(rules.contains(&r), "{r} missing in {cfg}");
            }
            assert!(!rules.contains(&RuleId::Cut), "cut active in {cfg}");
        }
    }

    #[test]
    fn plain_system_has_bang_r_only() {
        let rules = active_rules(&SystemConfig::new());
        assert!(rules.contains(&RuleId::BangR));
        for r in [
            RuleId::BangRK,
            RuleId::BangR4,
            RuleId::BangRK4,
            RuleId::BangL,
            RuleId::C,
            RuleId::CK,
            RuleId::W,
        ] {
            assert!(!rules.contains(&r));
        }
    }

    #[test]
    fn ckt_system_selects_k_rules() {
        let cfg = SystemConfig::new().with_contraction().with_k().with_t();
        let rules = active_rules(&cfg);
        assert!(rules.contains(&RuleId::BangRK));
        assert!(rules.contains(&RuleId::BangL));
        assert!(rules.contains(&RuleId::CK));
        assert!(!rules.contains(&RuleId::BangR));
        assert!(!rules.contains(&RuleId::C));
        assert!(!rules.contains(&RuleId::W));
    }

    #[test]
    fn w4_system_keeps_both_right_bang_rules() {
        let cfg = SystemConfig::new().with_weakening().with_four();
        let rules = active_rules(&cfg);
        assert!(rules.contains(&RuleId::BangR));
        assert!(rules.contains(&RuleId::BangR4));
        assert!(rules.contains(&RuleId::W));
        assert!(!rules.contains(&RuleId::BangRK4));
        assert!(!rules.contains(&RuleId::BangL));
    }

    #[test]
    fn exact_rule_table_over_all_configs() {
        for cfg in SystemConfig::all() {
            let rules = active_rules(&cfg);
            assert_eq!(rules.contains(&RuleId::BangR), !cfg.k);
            assert_eq!(rules.contains(&RuleId::BangRK), cfg.k && !cfg.four);
            assert_eq!(rules.contains(&RuleId::BangR4), !cfg.k && cfg.four);
            assert_eq!(rules.contains(&RuleId::BangRK4), cfg.k && cfg.four);
            assert_eq!(rules.contains(&RuleId::BangL), cfg.t);
            assert_eq!(rules.contains(&RuleId::C), cfg.contraction && !cfg.k);
            assert_eq!(rules.contains(&RuleId::CK), cfg.contraction && cfg.k);
            assert_eq!(rules.contains(&RuleId::W), cfg.weakening);
        }
    }

    #[test]
    fn config_parsing() {
        let cfg = SystemConfig::parse("c,w", "k,t,4").unwrap();
        assert!(cfg.contraction && cfg.weakening && cfg.k && cfg.t && cfg.four);
        let cfg = SystemConfig::parse("", "").unwrap();
        assert_eq!(cfg, SystemConfig::new());
        assert!(SystemConfig::parse("x", "").is_err());
        assert!(SystemConfig::parse("", "5").is_err());
    }
}

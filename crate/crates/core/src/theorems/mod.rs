//! Exhaustive checkers for statements about prime, weakly prime and almost
//! prime ideals, run over a corpus of finite rings.
//!
//! Every checker evaluates its statement instance by instance as a material
//! implication. A violation carries the sets involved and the truth value of
//! each side, so it can be replayed through the raw definitions.

mod checks;
mod context;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::BitSet;
use crate::corpus::Corpus;
use crate::ring::FiniteRing;

pub use context::Judge;
pub use report::{explain_report, explain_violation, CorpusMeta, SuiteReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("unknown theorem id `{0}`")]
    UnknownTheoremId(String),
}

macro_rules! theorem_ids {
    ($($variant:ident => $id:literal, $statement:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $id,)*
                }
            }

            pub fn statement(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $statement,)*
                }
            }
        }

        impl FromStr for TheoremId {
            type Err = TheoremError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s.trim() {
                    $($id => Ok(TheoremId::$variant),)*
                    other => Err(TheoremError::UnknownTheoremId(other.to_string())),
                }
            }
        }
    };
}

theorem_ids! {
    DefChain => "def-chain",
        "prime, weakly prime and idempotent right ideals are almost prime";
    PropRightVsIdeal => "prop-right-vs-ideal",
        "with identity, a two-sided ideal is almost prime among right ideals iff among two-sided ideals";
    PropUnion => "prop-union",
        "a right ideal inside the union of two right ideals lies inside one of them";
    ThmEquiv5 => "thm-equiv-5",
        "with identity, five ideal, element and colon conditions for almost primeness of a two-sided ideal agree";
    ThmColonCollapse => "thm-colon-collapse",
        "with identity, if (P^2:P) lies in P then P is almost prime iff prime";
    ThmP2Zero => "thm-p2zero",
        "if P^2 = 0 then P is almost prime iff weakly prime";
    LemBrauer => "lem-brauer",
        "with identity, a minimal right ideal squares to zero or is generated by an idempotent";
    CorMinimal => "cor-minimal",
        "with identity, a minimal almost prime right ideal that is not idempotent is weakly prime";
    ThmQuotientWeakly => "thm-quotient-weakly",
        "a two-sided P is almost prime iff P/P^2 is weakly prime in R/P^2";
    ThmEpiImage => "thm-epi-image",
        "epimorphisms carry almost prime right ideals containing the kernel to almost prime right ideals";
    ThmEpiPreimage => "thm-epi-preimage",
        "if ker f lies in P^2 and f(P) is almost prime then P is almost prime";
    ThmQuotientTransfer => "thm-quotient-transfer",
        "if I lies in P and P is almost prime then P/I is almost prime in R/I";
    FullyRingThms => "fully-ring-thms",
        "fully almost prime right rings pass to epimorphic images and quotients, and back under a kernel condition";
    CommThm11 => "comm-thm-1-1",
        "commutative with identity: P almost prime iff P:{a} = P u (P^2:{a}) iff P:{a} is P or P^2:{a}";
    CommThm12 => "comm-thm-1-2",
        "almost prime ideals of a product of commutative unital rings are I x S, R x J or a product of idempotents";
    AsWeaklySquareZero => "as-weakly-square-zero",
        "commutative with identity: weakly prime but not prime implies P^2 = 0";
    AsProductWeakly => "as-product-weakly",
        "in a product of commutative unital rings a weakly prime ideal is zero or prime";
    HiranoWeaklyEquiv => "hirano-weakly-equiv",
        "with identity, weak primeness over ideals, over right ideals and elementwise via aRb agree";
    GroenewaldColon => "groenewald-colon",
        "P weakly prime iff P:<a) = P u (0:<a)) iff P:<a) is P or 0:<a), for the left ideal <a)";
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `all` or a comma-separated list of ids, deduplicated in canonical order.
pub fn parse_selection(s: &str) -> Result<Vec<TheoremId>, TheoremError> {
    if s.trim() == "all" {
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut ids = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<TheoremId>, _>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

/// A deliberate defect injected into the predicates, to show that checkers
/// are able to fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Almost prime is decided as prime.
    AlmostPrimeIgnoresSquare,
    /// Weakly prime is decided as prime.
    WeaklyPrimeIgnoresNonzero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedSet {
    pub name: String,
    pub ring: String,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub statement: String,
    pub value: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub theorem_id: TheoremId,
    pub ring: String,
    pub condition: String,
    pub sets: Vec<NamedSet>,
    pub facts: Vec<Fact>,
}

impl Violation {
    pub(crate) fn new(theorem_id: TheoremId, ring: &str, condition: impl Into<String>) -> Self {
        Violation {
            theorem_id,
            ring: ring.to_string(),
            condition: condition.into(),
            sets: Vec::new(),
            facts: Vec::new(),
        }
    }

    pub(crate) fn set(mut self, name: impl Into<String>, ring: &FiniteRing, bits: &BitSet) -> Self {
        self.sets.push(NamedSet {
            name: name.into(),
            ring: ring.name().to_string(),
            elements: bits.iter().map(|x| ring.label(x).to_string()).collect(),
        });
        self
    }

    pub(crate) fn fact(mut self, statement: impl Into<String>, value: bool) -> Self {
        self.facts.push(Fact {
            statement: statement.into(),
            value,
        });
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub statement: String,
    pub rings_checked: usize,
    pub rings_filtered: usize,
    /// Rings skipped because they fail the hypotheses.
    pub filtered: Vec<String>,
    pub instances_checked: usize,
    /// No instance satisfied the hypotheses.
    pub vacuous: bool,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
    pub elapsed_ms: f64,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    pub mutation: Option<Mutation>,
}

/// What one checker found in one ring.
#[derive(Debug, Default)]
pub(crate) struct RingOutcome {
    pub applicable: bool,
    pub instances: usize,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl RingOutcome {
    pub fn filtered() -> Self {
        RingOutcome::default()
    }

    pub fn applicable() -> Self {
        RingOutcome {
            applicable: true,
            ..RingOutcome::default()
        }
    }
}

/// Runs `selection` over `corpus`. Reports follow the selection order and,
/// within a report, the corpus order.
pub fn run_checks(corpus: &Corpus, selection: &[TheoremId], options: CheckOptions) -> Vec<TheoremReport> {
    let judge = Judge {
        mutation: options.mutation,
    };
    let contexts: Vec<_> = corpus
        .entries
        .par_iter()
        .map(|e| context::RingContext::new(e, judge))
        .collect();
    let pairs: Vec<(TheoremId, usize)> = selection
        .iter()
        .flat_map(|&t| (0..contexts.len()).map(move |r| (t, r)))
        .collect();
    let outcomes: Vec<(RingOutcome, f64)> = pairs
        .par_iter()
        .map(|&(t, r)| {
            let start = Instant::now();
            let out = checks::run(t, &contexts[r]);
            (out, start.elapsed().as_secs_f64() * 1000.0)
        })
        .collect();

    let mut reports = Vec::with_capacity(selection.len());
    let mut it = outcomes.into_iter();
    for &t in selection {
        let mut rep = TheoremReport {
            theorem_id: t,
            statement: t.statement().to_string(),
            rings_checked: 0,
            rings_filtered: 0,
            filtered: Vec::new(),
            instances_checked: 0,
            vacuous: false,
            violations: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: 0.0,
        };
        for ctx in &contexts {
            let (out, ms) = it.next().expect("one outcome per pair");
            rep.elapsed_ms += ms;
            if out.applicable {
                rep.rings_checked += 1;
            } else {
                rep.rings_filtered += 1;
                rep.filtered.push(ctx.name().to_string());
            }
            rep.instances_checked += out.instances;
            rep.violations.extend(out.violations);
            rep.notes.extend(out.notes);
        }
        rep.vacuous = rep.instances_checked == 0;
        if t == TheoremId::ThmQuotientTransfer && rep.notes.is_empty() {
            rep.notes.push("non-converse: not found in corpus".to_string());
        }
        reports.push(rep);
    }
    reports
}

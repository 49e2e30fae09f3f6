//! The six shipped strength semantics behind one selector.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::bipolar::{apply_abstract_to_sg, DfQuad, Qem};
use crate::cst::{eval_tnorm, CstError, DeMorganTriple};
use crate::model::{StatementGraph, StatementId};
use crate::modular::eval_dc;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EvalError {
    #[error(transparent)]
    Cst(#[from] CstError),
}

/// Selector for the shipped semantics. Compositions of other aggregators
/// with other abstract semantics are available through the library only.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Semantics {
    /// Support-tree semantics over product / probabilistic sum.
    TnormP,
    /// Support-tree semantics over minimum / maximum.
    TnormM,
    /// Dialectical conjunction supported by DF-QuAD.
    DcDfquad,
    /// Dialectical conjunction supported by QEM.
    DcQem,
    /// DF-QuAD applied to statements as atomic nodes.
    Dfquad,
    /// QEM applied to statements as atomic nodes.
    Qem,
}

impl Semantics {
    pub const ALL: [Semantics; 6] = [
        Semantics::TnormP,
        Semantics::TnormM,
        Semantics::DcDfquad,
        Semantics::DcQem,
        Semantics::Dfquad,
        Semantics::Qem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::TnormP => "tnorm-p",
            Semantics::TnormM => "tnorm-m",
            Semantics::DcDfquad => "dc-dfquad",
            Semantics::DcQem => "dc-qem",
            Semantics::Dfquad => "dfquad",
            Semantics::Qem => "qem",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Semantics::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Structured semantics inspect premises; abstract ones do not.
    pub fn is_structured(self) -> bool {
        !matches!(self, Semantics::Dfquad | Semantics::Qem)
    }

    pub fn evaluate(self, graph: &StatementGraph) -> Result<BTreeMap<StatementId, f64>, EvalError> {
        let strengths = match self {
            Semantics::TnormP => eval_tnorm(graph, &DeMorganTriple::product())?,
            Semantics::TnormM => eval_tnorm(graph, &DeMorganTriple::minimum())?,
            Semantics::DcDfquad => eval_dc(graph, &DfQuad),
            Semantics::DcQem => eval_dc(graph, &Qem),
            Semantics::Dfquad => apply_abstract_to_sg(graph, &DfQuad),
            Semantics::Qem => apply_abstract_to_sg(graph, &Qem),
        };
        Ok(strengths)
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_sg;

    #[test]
    fn names_round_trip() {
        for sem in Semantics::ALL {
            assert_eq!(Semantics::from_name(sem.name()), Some(sem));
        }
        assert_eq!(Semantics::from_name("nope"), None);
    }

    #[test]
    fn all_six_score_the_running_example() {
        let g =
            parse_sg("a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\na4: d => ~a @ 0.7")
                .unwrap();
        let sid = |s: &str| StatementId::new(s).unwrap();
        for sem in Semantics::ALL {
            let strengths = sem.evaluate(&g).unwrap();
            assert_eq!(strengths.len(), 4);
            for v in strengths.values() {
                assert!((0.0..=1.0).contains(v));
            }
            if sem == Semantics::TnormP {
                assert!((strengths[&sid("a1")] - 0.432).abs() < 1e-12);
            }
        }
    }
}

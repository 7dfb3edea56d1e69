//! The solvability-bound battery.
//!
//! Each check is a one-directional implication "average below the bound
//! implies solvability" evaluated on exact rationals; a non-solvable group
//! sitting below a bound is an implementation bug, never a tolerated outcome.
//! Bounds:
//!
//! * A1/A2: acd*_C(G), acd*_R(G) < 29/8  => G solvable
//! * A3:    acd*_Q(G) < 9/2              => G solvable
//! * B1/B2: 0 < acd_{C/R,even}(G|N) < 18/5 => N solvable
//! * B3:    0 < acd_{Q,even}(G|N) < 4      => N solvable
//! * C1/C2: acd_{C/R,even}(G) < 18/5       => G solvable
//! * C3:    0 < acd_{Q,even}(G) < 4        => G solvable
//! * D1/D2: 0 < acd_{C/R,even}(G|N) < 7/2  => G solvable
//! * D3:    0 < acd_{Q,even}(G|N) < 4      => G solvable
//!
//! The sharp witnesses are SL2(5) (with N = G, N = Z) and Alt5 (with N = G);
//! a result is marked sharp only when its value equals the bound on the
//! designated witness.

use std::fmt;

use num_traits::Zero;

use crate::acd::{AcdReport, FieldLabel, NormalAcd};
use crate::cyclotomic::{rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TheoremId {
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
    C1,
    C2,
    C3,
    D1,
    D2,
    D3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::A1,
        TheoremId::A2,
        TheoremId::A3,
        TheoremId::B1,
        TheoremId::B2,
        TheoremId::B3,
        TheoremId::C1,
        TheoremId::C2,
        TheoremId::C3,
        TheoremId::D1,
        TheoremId::D2,
        TheoremId::D3,
    ];

    pub fn bound(self) -> Rational {
        match self {
            TheoremId::A1 | TheoremId::A2 => rational(29, 8),
            TheoremId::A3 => rational(9, 2),
            TheoremId::B1 | TheoremId::B2 | TheoremId::C1 | TheoremId::C2 => rational(18, 5),
            TheoremId::B3 | TheoremId::C3 | TheoremId::D3 => rational(4, 1),
            TheoremId::D1 | TheoremId::D2 => rational(7, 2),
        }
    }

    fn field(self) -> FieldLabel {
        match self {
            TheoremId::A1 | TheoremId::B1 | TheoremId::C1 | TheoremId::D1 => FieldLabel::C,
            TheoremId::A2 | TheoremId::B2 | TheoremId::C2 | TheoremId::D2 => FieldLabel::R,
            _ => FieldLabel::Q,
        }
    }

    fn per_normal(self) -> bool {
        matches!(
            self,
            TheoremId::B1
                | TheoremId::B2
                | TheoremId::B3
                | TheoremId::D1
                | TheoremId::D2
                | TheoremId::D3
        )
    }

    /// Positivity guard: a zero average (empty selection) never triggers the
    /// hypothesis. C1/C2 deliberately have no guard.
    fn requires_positive(self) -> bool {
        !matches!(self, TheoremId::A1 | TheoremId::A2 | TheoremId::A3 | TheoremId::C1 | TheoremId::C2)
    }

    /// Whose solvability the theorem concludes: B concludes N, the rest G.
    fn concludes_normal(self) -> bool {
        matches!(self, TheoremId::B1 | TheoremId::B2 | TheoremId::B3)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The normal subgroup a per-N check ran against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalRef {
    pub order: u64,
    pub class_indices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct TheoremCheckResult {
    pub theorem: TheoremId,
    pub group: String,
    pub normal: Option<NormalRef>,
    pub value: Rational,
    pub bound: Rational,
    pub hypothesis_held: bool,
    pub conclusion_held: bool,
    pub implication_ok: bool,
    pub sharp: bool,
}

fn is_designated_witness(theorem: TheoremId, group: &str, normal: Option<&NormalAcd>) -> bool {
    let normal_order = normal.map(|n| n.subgroup.order);
    match theorem {
        TheoremId::A1 | TheoremId::A2 | TheoremId::C1 | TheoremId::C2 => group == "sl2:5",
        TheoremId::A3 | TheoremId::C3 => group == "alt:5",
        TheoremId::B1 | TheoremId::B2 => group == "sl2:5" && normal_order == Some(120),
        TheoremId::B3 | TheoremId::D3 => group == "alt:5" && normal_order == Some(60),
        TheoremId::D1 | TheoremId::D2 => group == "sl2:5" && normal_order == Some(2),
    }
}

fn evaluate(
    theorem: TheoremId,
    report: &AcdReport,
    value: Rational,
    normal: Option<&NormalAcd>,
) -> TheoremCheckResult {
    let bound = theorem.bound();
    let positive_ok = !theorem.requires_positive() || !value.is_zero();
    let hypothesis_held = positive_ok && value < bound;
    let conclusion_held = if theorem.concludes_normal() {
        normal.map(|n| n.solvable).unwrap_or(true)
    } else {
        report.solvable
    };
    let sharp = value == bound && is_designated_witness(theorem, &report.group, normal);
    TheoremCheckResult {
        theorem,
        group: report.group.clone(),
        normal: normal.map(|n| NormalRef {
            order: n.subgroup.order,
            class_indices: n.subgroup.class_indices.iter().copied().collect(),
        }),
        value,
        bound,
        hypothesis_held,
        conclusion_held,
        implication_ok: !hypothesis_held || conclusion_held,
        sharp,
    }
}

/// Run every applicable check on one group's report. Per-normal theorems
/// produce one result per nontrivial normal subgroup, in lattice order.
pub fn check_theorems(report: &AcdReport) -> Vec<TheoremCheckResult> {
    let mut results = Vec::new();
    for theorem in TheoremId::ALL {
        if theorem.per_normal() {
            for block in &report.per_normal {
                let value = block.even.get(theorem.field()).value.clone();
                results.push(evaluate(theorem, report, value, Some(block)));
            }
        } else {
            let value = match theorem {
                TheoremId::A1 | TheoremId::A2 | TheoremId::A3 => {
                    report.acd_star.get(theorem.field()).clone()
                }
                _ => report.acd_even.get(theorem.field()).value.clone(),
            };
            results.push(evaluate(theorem, report, value, None));
        }
    }
    results
}

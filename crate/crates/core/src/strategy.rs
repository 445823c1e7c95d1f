//! Response strategies over food pairs and the transitivity classifier.
//!
//! A player's behaviour on the three possible pairs is stored as a
//! three-parameter vector `t = (t0, t1, t2)`, `t_j ∈ [-1, 1]`. The pair that
//! excludes food `j` is written `B_j`. For Cat 2 the parameterization is
//!
//! ```text
//! P(C_{j+2} | B_j) = (1 + t_j) / 2,   P(C_{j+1} | B_j) = (1 - t_j) / 2
//! ```
//!
//! (indices mod 3); Cat 1 uses the opposite signs. Storing the parameters
//! instead of the six probabilities makes each complementary pair sum to 1 by
//! construction.

use std::fmt;

use crate::error::{Error, Result};
use crate::types::{FoodIndex, Owner};

/// One player's conditional-choice behaviour over the three food pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResponseStrategy {
    owner: Owner,
    params: [f64; 3],
}

impl ResponseStrategy {
    pub fn new(owner: Owner, params: [f64; 3]) -> Result<Self> {
        for t in params {
            if !t.is_finite() || t.abs() > 1.0 {
                return Err(Error::OutOfRange {
                    name: "strategy parameter",
                    value: t,
                });
            }
        }
        Ok(ResponseStrategy { owner, params })
    }

    pub fn owner(&self) -> Owner {
        self.owner
    }

    pub fn params(&self) -> [f64; 3] {
        self.params
    }

    pub fn expect_owner(&self, expected: Owner) -> Result<()> {
        if self.owner != expected {
            return Err(Error::OwnerMismatch {
                expected,
                found: self.owner,
            });
        }
        Ok(())
    }

    /// The food that carries the `+t_j` sign on pair `B_j` for this owner.
    fn plus_food(&self, missing: FoodIndex) -> FoodIndex {
        match self.owner {
            Owner::Cat2 => missing.cycled(2),
            Owner::Cat1 => missing.cycled(1),
        }
    }

    /// Probability that the owner picks `chosen` when the offered pair
    /// excludes `missing`.
    pub fn conditional_probability(&self, chosen: FoodIndex, missing: FoodIndex) -> Result<f64> {
        if chosen == missing {
            return Err(Error::ChosenEqualsMissing(chosen));
        }
        let t = self.params[missing.index()];
        if chosen == self.plus_food(missing) {
            Ok((1.0 + t) / 2.0)
        } else {
            Ok((1.0 - t) / 2.0)
        }
    }
}

/// Free-function form of [`ResponseStrategy::conditional_probability`].
pub fn conditional_probability(
    s: &ResponseStrategy,
    chosen: FoodIndex,
    missing: FoodIndex,
) -> Result<f64> {
    s.conditional_probability(chosen, missing)
}

/// Outcome of classifying a strategy's three pairwise preferences.
#[derive(Debug, Clone, PartialEq)]
pub enum PreferenceClass {
    /// A strict transitive order, strongest food first.
    Transitive([FoodIndex; 3]),
    /// The cycle 1 ≻ 0, 2 ≻ 1, 0 ≻ 2.
    CycleA,
    /// The reversed cycle 0 ≻ 1, 1 ≻ 2, 2 ≻ 0.
    CycleB,
    /// At least one pairwise preference is exactly 1/2; the tied pairs.
    Boundary(Vec<(FoodIndex, FoodIndex)>),
}

impl PreferenceClass {
    pub fn is_intransitive(&self) -> bool {
        matches!(self, PreferenceClass::CycleA | PreferenceClass::CycleB)
    }

    pub fn is_transitive(&self) -> bool {
        matches!(self, PreferenceClass::Transitive(_))
    }

    /// Stable text label, used by the CLI file formats.
    pub fn label(&self) -> String {
        match self {
            PreferenceClass::Transitive([a, b, c]) => format!("transitive:{a}>{b}>{c}"),
            PreferenceClass::CycleA => "cycle_a".to_string(),
            PreferenceClass::CycleB => "cycle_b".to_string(),
            PreferenceClass::Boundary(_) => "boundary".to_string(),
        }
    }
}

impl fmt::Display for PreferenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Classifies a strategy as one of the six strict transitive orders, one of
/// the two cycles, or boundary when some pair is exactly tied.
///
/// Ties are decided by exact comparison of the stored parameter with zero:
/// parameters are inputs, not computed values.
pub fn classify_preferences(s: &ResponseStrategy) -> PreferenceClass {
    let mut ties = Vec::new();
    // wins[f] = pairs on which food f is strictly preferred.
    let mut wins = [0usize; 3];
    // prefers_forward[j]: on pair B_j, food j+2 is preferred over food j+1.
    let mut prefers_forward = [false; 3];

    for missing in FoodIndex::ALL {
        let j = missing.index();
        if s.params[j] == 0.0 {
            let (a, b) = (missing.cycled(1), missing.cycled(2));
            ties.push((a.min(b), a.max(b)));
            continue;
        }
        let forward = missing.cycled(2);
        let backward = missing.cycled(1);
        // Food j+2 carries the +t_j sign for Cat 2 and the -t_j sign for
        // Cat 1; compare the sign of the stored parameter rather than the
        // derived probability so that tiny parameters keep their preference.
        let forward_preferred = match s.owner {
            Owner::Cat2 => s.params[j] > 0.0,
            Owner::Cat1 => s.params[j] < 0.0,
        };
        if forward_preferred {
            prefers_forward[j] = true;
            wins[forward.index()] += 1;
        } else {
            wins[backward.index()] += 1;
        }
    }

    if !ties.is_empty() {
        ties.sort();
        return PreferenceClass::Boundary(ties);
    }
    if prefers_forward.iter().all(|&b| b) {
        return PreferenceClass::CycleA;
    }
    if prefers_forward.iter().all(|&b| !b) {
        return PreferenceClass::CycleB;
    }
    // Mixed signs form a transitive tournament: win counts are {2, 1, 0}.
    let mut order = FoodIndex::ALL;
    order.sort_by_key(|f| std::cmp::Reverse(wins[f.index()]));
    PreferenceClass::Transitive(order)
}

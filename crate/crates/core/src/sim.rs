//! Seeded simulator of the repeated division game, the empirical oracle for
//! the analytic diet frequencies.
//!
//! Per iteration: Cat 1 keeps a food drawn from its first-move frequencies;
//! Cat 2 chooses from the remaining pair and eats its choice; the kept food
//! and Cat 2's rejected food form the final pair, from which Cat 1 chooses
//! and eats; the last food is discarded. Random numbers are consumed in that
//! fixed order (first move, Cat 2 draw, Cat 1 draw) so golden-seed runs are
//! stable.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classical::PureChoiceFunction;
use crate::error::{Error, Result};
use crate::quantum::strategy_from_sphere;
use crate::strategy::ResponseStrategy;
use crate::types::{FoodIndex, FrequencyTriple, Owner, SimplexPoint, SpherePoint};

/// How one player behaves on offered pairs. The simulator only ever consumes
/// conditional probabilities, so qubit strategies are resolved to their
/// equivalent response strategies up front.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PlayerStrategy {
    Mixed(ResponseStrategy),
    Qubit(SpherePoint),
    /// Deterministic choice function; Cat 1 only.
    Pure(PureChoiceFunction),
}

impl PlayerStrategy {
    /// The equivalent response strategy for the given owner.
    pub fn resolve(&self, owner: Owner) -> Result<ResponseStrategy> {
        match self {
            PlayerStrategy::Mixed(s) => {
                s.expect_owner(owner)?;
                Ok(*s)
            }
            PlayerStrategy::Qubit(x) => Ok(strategy_from_sphere(x, owner)),
            PlayerStrategy::Pure(f) => {
                if owner != Owner::Cat1 {
                    return Err(Error::PureStrategyForCat2);
                }
                Ok(f.as_strategy())
            }
        }
    }
}

/// A full simulation scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct GameConfig {
    pub first_move: SimplexPoint,
    pub cat1: PlayerStrategy,
    pub cat2: PlayerStrategy,
    pub iterations: u64,
    pub seed: u64,
}

/// Food counts after a run: per iteration exactly one food goes to each of
/// Cat 1, Cat 2 and the discard pile, all distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GameTally {
    cat1_counts: [u64; 3],
    cat2_counts: [u64; 3],
    discarded_counts: [u64; 3],
    iterations: u64,
}

impl GameTally {
    pub fn new(
        cat1_counts: [u64; 3],
        cat2_counts: [u64; 3],
        discarded_counts: [u64; 3],
        iterations: u64,
    ) -> Result<Self> {
        if iterations == 0 {
            return Err(Error::NoIterations);
        }
        for counts in [&cat1_counts, &cat2_counts, &discarded_counts] {
            let sum: u64 = counts.iter().sum();
            if sum != iterations {
                return Err(Error::NotNormalized {
                    name: "tally counts",
                    sum: sum as f64 / iterations as f64,
                });
            }
        }
        Ok(GameTally {
            cat1_counts,
            cat2_counts,
            discarded_counts,
            iterations,
        })
    }

    pub fn cat1_counts(&self) -> [u64; 3] {
        self.cat1_counts
    }

    pub fn cat2_counts(&self) -> [u64; 3] {
        self.cat2_counts
    }

    pub fn discarded_counts(&self) -> [u64; 3] {
        self.discarded_counts
    }

    pub fn iterations(&self) -> u64 {
        self.iterations
    }
}

fn other_member(pair_missing: FoodIndex, member: FoodIndex) -> FoodIndex {
    FoodIndex::ALL
        .into_iter()
        .find(|&f| f != pair_missing && f != member)
        .expect("three distinct foods")
}

/// Runs the repeated game. Deterministic given the config seed.
pub fn run_game(cfg: &GameConfig) -> Result<GameTally> {
    if cfg.iterations == 0 {
        return Err(Error::NoIterations);
    }
    let s1 = cfg.cat1.resolve(Owner::Cat1)?;
    let s2 = cfg.cat2.resolve(Owner::Cat2)?;
    let [p0, p1, _] = cfg.first_move.components();

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut cat1_counts = [0u64; 3];
    let mut cat2_counts = [0u64; 3];
    let mut discarded_counts = [0u64; 3];

    for _ in 0..cfg.iterations {
        // First move: Cat 1 keeps a food.
        let u = rng.random::<f64>();
        let kept = if u < p0 {
            FoodIndex::ALL[0]
        } else if u < p0 + p1 {
            FoodIndex::ALL[1]
        } else {
            FoodIndex::ALL[2]
        };

        // Cat 2 chooses from the pair that excludes the kept food.
        let candidate = kept.cycled(1);
        let p_candidate = s2.conditional_probability(candidate, kept)?;
        let cat2_eats = if rng.random::<f64>() < p_candidate {
            candidate
        } else {
            other_member(kept, candidate)
        };
        let rejected = other_member(kept, cat2_eats);

        // Final pair: kept food plus Cat 2's rejected food, i.e. the pair
        // that excludes what Cat 2 ate.
        let p_kept = s1.conditional_probability(kept, cat2_eats)?;
        let cat1_eats = if rng.random::<f64>() < p_kept {
            kept
        } else {
            rejected
        };
        let discarded = other_member(cat2_eats, cat1_eats);

        cat1_counts[cat1_eats.index()] += 1;
        cat2_counts[cat2_eats.index()] += 1;
        discarded_counts[discarded.index()] += 1;
    }

    GameTally::new(cat1_counts, cat2_counts, discarded_counts, cfg.iterations)
}

/// Empirical `(λ, ω)` from a tally: counts divided by iterations.
pub fn empirical_frequencies(t: &GameTally) -> (FrequencyTriple, FrequencyTriple) {
    let n = t.iterations as f64;
    let freq = |counts: [u64; 3]| {
        FrequencyTriple::new(counts.map(|c| c as f64 / n)).expect("counts sum to iterations")
    };
    (freq(t.cat1_counts), freq(t.cat2_counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{cat1_diet, cat2_diet};

    fn mixed(owner: Owner, t: [f64; 3]) -> PlayerStrategy {
        PlayerStrategy::Mixed(ResponseStrategy::new(owner, t).unwrap())
    }

    #[test]
    fn degenerate_config_follows_single_path() {
        // P = (1,0,0); Cat 2 always takes food 1 from {1,2} (l0 = -1);
        // Cat 1 always takes food 0 from {0,2} (Q(C0|B1) = 1 → L1 = -1).
        let cfg = GameConfig {
            first_move: SimplexPoint::new([1.0, 0.0, 0.0]).unwrap(),
            cat1: mixed(Owner::Cat1, [0.0, -1.0, 0.0]),
            cat2: mixed(Owner::Cat2, [-1.0, 0.0, 0.0]),
            iterations: 100,
            seed: 3,
        };
        let tally = run_game(&cfg).unwrap();
        assert_eq!(tally.cat1_counts(), [100, 0, 0]);
        assert_eq!(tally.cat2_counts(), [0, 100, 0]);
        assert_eq!(tally.discarded_counts(), [0, 0, 100]);
    }

    #[test]
    fn seed_determinism() {
        let cfg = GameConfig {
            first_move: SimplexPoint::new([0.2, 0.5, 0.3]).unwrap(),
            cat1: mixed(Owner::Cat1, [0.3, -0.2, 0.6]),
            cat2: mixed(Owner::Cat2, [-0.1, 0.8, 0.4]),
            iterations: 10_000,
            seed: 42,
        };
        assert_eq!(run_game(&cfg).unwrap(), run_game(&cfg).unwrap());
        let other = GameConfig { seed: 43, ..cfg.clone() };
        assert_ne!(run_game(&cfg).unwrap(), run_game(&other).unwrap());
    }

    #[test]
    fn qubit_strategy_equals_equivalent_mixed_strategy() {
        let x = SpherePoint::normalized([0.6, -0.5, 0.4]).unwrap();
        let as_qubit = GameConfig {
            first_move: SimplexPoint::new([0.3, 0.4, 0.3]).unwrap(),
            cat1: PlayerStrategy::Qubit(x),
            cat2: PlayerStrategy::Qubit(x),
            iterations: 5_000,
            seed: 7,
        };
        let as_mixed = GameConfig {
            cat1: PlayerStrategy::Mixed(strategy_from_sphere(&x, Owner::Cat1)),
            cat2: PlayerStrategy::Mixed(strategy_from_sphere(&x, Owner::Cat2)),
            ..as_qubit.clone()
        };
        assert_eq!(run_game(&as_qubit).unwrap(), run_game(&as_mixed).unwrap());
    }

    #[test]
    fn pure_strategy_rejected_for_cat2() {
        let cfg = GameConfig {
            first_move: SimplexPoint::centroid(),
            cat1: mixed(Owner::Cat1, [0.0; 3]),
            cat2: PlayerStrategy::Pure(PureChoiceFunction::new(0).unwrap()),
            iterations: 1,
            seed: 0,
        };
        assert!(matches!(run_game(&cfg), Err(Error::PureStrategyForCat2)));
    }

    #[test]
    fn owner_mismatch_rejected() {
        let cfg = GameConfig {
            first_move: SimplexPoint::centroid(),
            cat1: mixed(Owner::Cat2, [0.0; 3]),
            cat2: mixed(Owner::Cat2, [0.0; 3]),
            iterations: 1,
            seed: 0,
        };
        assert!(matches!(run_game(&cfg), Err(Error::OwnerMismatch { .. })));
    }

    #[test]
    fn empirical_matches_analytic_frequencies() {
        // Non-optimal scenario: empirical λ, ω within 3σ of the diet
        // equations at n = 200k (σ ≈ 0.0011).
        let p = SimplexPoint::new([0.25, 0.45, 0.3]).unwrap();
        let l = [0.55, -0.3, 0.2];
        let big_l = [-0.4, 0.15, 0.7];
        let cfg = GameConfig {
            first_move: p,
            cat1: mixed(Owner::Cat1, big_l),
            cat2: mixed(Owner::Cat2, l),
            iterations: 200_000,
            seed: 11,
        };
        let tally = run_game(&cfg).unwrap();
        let (lambda_emp, omega_emp) = empirical_frequencies(&tally);

        let s2 = ResponseStrategy::new(Owner::Cat2, l).unwrap();
        let s1 = ResponseStrategy::new(Owner::Cat1, big_l).unwrap();
        let omega = cat2_diet(&p, &s2).unwrap().components();
        let lambda = cat1_diet(&p, &s2, &s1).unwrap().components();
        for k in 0..3 {
            assert!((omega_emp.components()[k] - omega[k]).abs() < 0.0035);
            assert!((lambda_emp.components()[k] - lambda[k]).abs() < 0.0035);
        }
    }

    #[test]
    fn tally_invariants_enforced() {
        assert!(GameTally::new([1, 0, 0], [0, 1, 0], [0, 0, 1], 1).is_ok());
        assert!(GameTally::new([2, 0, 0], [0, 1, 0], [0, 0, 1], 1).is_err());
        assert!(GameTally::new([0; 3], [0; 3], [0; 3], 0).is_err());
    }

    #[test]
    fn frequencies_normalize() {
        let tally = GameTally::new([10, 10, 10], [5, 20, 5], [15, 0, 15], 30).unwrap();
        let (lambda, omega) = empirical_frequencies(&tally);
        assert_eq!(lambda.components(), [1.0 / 3.0; 3]);
        assert!((omega.components().iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }
}

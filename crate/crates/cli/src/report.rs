//! JSON simulation report: counts, empirical frequencies, the analytic
//! predictions and a three-sigma comparison between the two.

use serde::Serialize;

use trifood::classical::{cat1_diet, cat2_diet};
use trifood::sim::{empirical_frequencies, run_game, GameConfig, PlayerStrategy};
use trifood::{Owner, Result, SimplexPoint};

#[derive(Serialize)]
pub struct Frequencies {
    pub lambda: [f64; 3],
    pub omega: [f64; 3],
}

#[derive(Serialize)]
pub struct Counts {
    pub cat1: [u64; 3],
    pub cat2: [u64; 3],
    pub discarded: [u64; 3],
}

/// Full report of one simulation run. Field order is the JSON key order.
#[derive(Serialize)]
pub struct SimulationReport {
    pub iterations: u64,
    pub seed: u64,
    pub first_move: [f64; 3],
    pub counts: Counts,
    pub empirical: Frequencies,
    pub analytic: Frequencies,
    pub deviation: Frequencies,
    pub three_sigma: Frequencies,
    pub within_three_sigma: bool,
}

/// Runs the game and compares the empirical frequencies against the diet
/// equations, component by component, at three binomial standard deviations.
pub fn simulate(
    first_move: SimplexPoint,
    cat1: PlayerStrategy,
    cat2: PlayerStrategy,
    iterations: u64,
    seed: u64,
) -> Result<SimulationReport> {
    let s1 = cat1.resolve(Owner::Cat1)?;
    let s2 = cat2.resolve(Owner::Cat2)?;
    let omega = cat2_diet(&first_move, &s2)?.components();
    let lambda = cat1_diet(&first_move, &s2, &s1)?.components();

    let cfg = GameConfig {
        first_move,
        cat1,
        cat2,
        iterations,
        seed,
    };
    let tally = run_game(&cfg)?;
    let (lambda_emp, omega_emp) = empirical_frequencies(&tally);
    let lambda_emp = lambda_emp.components();
    let omega_emp = omega_emp.components();

    let n = iterations as f64;
    let sigma3 = |p: f64| 3.0 * (p * (1.0 - p) / n).sqrt();
    let dev = |emp: [f64; 3], exact: [f64; 3]| -> [f64; 3] {
        std::array::from_fn(|k| (emp[k] - exact[k]).abs())
    };
    let lambda_dev = dev(lambda_emp, lambda);
    let omega_dev = dev(omega_emp, omega);
    let lambda_sigma = lambda.map(sigma3);
    let omega_sigma = omega.map(sigma3);
    // Degenerate components (analytic 0 or 1) get a zero bound; the empirical
    // count is then exact, so compare with a hair of slack.
    let within = (0..3).all(|k| {
        lambda_dev[k] <= lambda_sigma[k] + 1e-12 && omega_dev[k] <= omega_sigma[k] + 1e-12
    });

    Ok(SimulationReport {
        iterations,
        seed,
        first_move: first_move.components(),
        counts: Counts {
            cat1: tally.cat1_counts(),
            cat2: tally.cat2_counts(),
            discarded: tally.discarded_counts(),
        },
        empirical: Frequencies {
            lambda: lambda_emp,
            omega: omega_emp,
        },
        analytic: Frequencies {
            lambda,
            omega,
        },
        deviation: Frequencies {
            lambda: lambda_dev,
            omega: omega_dev,
        },
        three_sigma: Frequencies {
            lambda: lambda_sigma,
            omega: omega_sigma,
        },
        within_three_sigma: within,
    })
}

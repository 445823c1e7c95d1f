//! Python bindings: the main analysis operations exposed as plain functions
//! over tuples and strings, so the module needs no wrapper classes on the
//! Python side.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use trifood::classical::{
    cat1_diet as core_cat1_diet, cat1_optimality_residual, cat2_classical_feasible,
    cat2_diet as core_cat2_diet, optimal_first_move, pure_choice_function_audit,
    PureChoiceFunction,
};
use trifood::quantum::{cat1_quantum_optima, cat2_quantum_feasible, strategy_from_sphere};
use trifood::regions::{
    hexagon_membership, montecarlo_map, quantum_membership, star_membership, ClassFilter, Model,
    RegionQuery, StarMembership,
};
use trifood::sim::{empirical_frequencies, run_game, GameConfig, PlayerStrategy};
use trifood::{classify_preferences, Owner, ResponseStrategy, SimplexPoint, SpherePoint};

fn err(e: trifood::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn simplex(p: (f64, f64, f64)) -> PyResult<SimplexPoint> {
    SimplexPoint::new([p.0, p.1, p.2]).map_err(err)
}

fn strategy(owner: Owner, t: (f64, f64, f64)) -> PyResult<ResponseStrategy> {
    ResponseStrategy::new(owner, [t.0, t.1, t.2]).map_err(err)
}

fn triple(a: [f64; 3]) -> (f64, f64, f64) {
    (a[0], a[1], a[2])
}

fn owner_from(name: &str) -> PyResult<Owner> {
    match name {
        "cat1" => Ok(Owner::Cat1),
        "cat2" => Ok(Owner::Cat2),
        other => Err(PyValueError::new_err(format!(
            "owner must be 'cat1' or 'cat2', got {other:?}"
        ))),
    }
}

fn model_from(name: &str) -> PyResult<Model> {
    match name {
        "classical" => Ok(Model::Classical),
        "quantum" => Ok(Model::Quantum),
        other => Err(PyValueError::new_err(format!(
            "model must be 'classical' or 'quantum', got {other:?}"
        ))),
    }
}

fn filter_from(name: &str) -> PyResult<ClassFilter> {
    match name {
        "any" => Ok(ClassFilter::Any),
        "transitive" => Ok(ClassFilter::Transitive),
        "intransitive" => Ok(ClassFilter::Intransitive),
        other => Err(PyValueError::new_err(format!(
            "class filter must be 'any', 'transitive' or 'intransitive', got {other:?}"
        ))),
    }
}

/// Closed-form first move balancing Cat 2's diet for parameters `l`.
#[pyfunction]
fn solve(l: (f64, f64, f64)) -> PyResult<(f64, f64, f64)> {
    Ok(triple(
        optimal_first_move([l.0, l.1, l.2]).map_err(err)?.components(),
    ))
}

/// Preference-class label ('transitive:a>b>c', 'cycle_a', 'cycle_b',
/// 'boundary') of a strategy for the given owner ('cat1' or 'cat2').
#[pyfunction]
fn classify(owner: &str, params: (f64, f64, f64)) -> PyResult<String> {
    let s = strategy(owner_from(owner)?, params)?;
    Ok(classify_preferences(&s).label())
}

/// Cat 2's long-run diet frequencies ω.
#[pyfunction]
fn cat2_diet(p: (f64, f64, f64), l: (f64, f64, f64)) -> PyResult<(f64, f64, f64)> {
    let omega = core_cat2_diet(&simplex(p)?, &strategy(Owner::Cat2, l)?).map_err(err)?;
    Ok(triple(omega.components()))
}

/// Cat 1's long-run diet frequencies λ.
#[pyfunction]
fn cat1_diet(
    p: (f64, f64, f64),
    l: (f64, f64, f64),
    big_l: (f64, f64, f64),
) -> PyResult<(f64, f64, f64)> {
    let lambda = core_cat1_diet(
        &simplex(p)?,
        &strategy(Owner::Cat2, l)?,
        &strategy(Owner::Cat1, big_l)?,
    )
    .map_err(err)?;
    Ok(triple(lambda.components()))
}

/// Maximum absolute residual of Cat 1's balance equations.
#[pyfunction]
fn cat1_residual(
    p: (f64, f64, f64),
    l: (f64, f64, f64),
    big_l: (f64, f64, f64),
) -> PyResult<f64> {
    let res = cat1_optimality_residual(&simplex(p)?, [l.0, l.1, l.2], [big_l.0, big_l.1, big_l.2])
        .map_err(err)?;
    Ok(res.iter().map(|r| r.abs()).fold(0.0, f64::max))
}

/// Feasible parameter interval of the classical balance line, or None.
#[pyfunction]
fn classical_feasible(p: (f64, f64, f64)) -> PyResult<Option<(f64, f64)>> {
    cat2_classical_feasible(&simplex(p)?).map_err(err)
}

/// Sphere points of the balanced one-qubit strategies (0, 1 or 2), each with
/// its class label.
#[pyfunction]
fn quantum_feasible(p: (f64, f64, f64)) -> PyResult<Vec<((f64, f64, f64), String)>> {
    Ok(cat2_quantum_feasible(&simplex(p)?)
        .map_err(err)?
        .into_iter()
        .map(|x| {
            let class = classify_preferences(&strategy_from_sphere(&x, Owner::Cat2));
            (triple(x.components()), class.label())
        })
        .collect())
}

/// The two one-qubit optima for Cat 1, each with its class label.
#[pyfunction]
fn quantum_optima() -> Vec<((f64, f64, f64), String)> {
    cat1_quantum_optima()
        .into_iter()
        .map(|x| {
            let class = classify_preferences(&strategy_from_sphere(&x, Owner::Cat1));
            (triple(x.components()), class.label())
        })
        .collect()
}

/// Region membership flags for a first move: (hexagon, star, quantum-any).
/// `star` is 'cycle_a', 'cycle_b', 'both' or None.
#[pyfunction]
fn membership(p: (f64, f64, f64)) -> PyResult<(bool, Option<String>, bool)> {
    let p = simplex(p)?;
    let star = star_membership(&p).map(|m| {
        match m {
            StarMembership::CycleA => "cycle_a",
            StarMembership::CycleB => "cycle_b",
            StarMembership::Both => "both",
        }
        .to_string()
    });
    let quantum = if p.is_interior() {
        quantum_membership(&p, ClassFilter::Any).map_err(err)?
    } else {
        false
    };
    Ok((hexagon_membership(&p), star, quantum))
}

/// Whether some balanced one-qubit strategy of the given class exists at `p`.
#[pyfunction]
fn quantum_class_available(p: (f64, f64, f64), class_filter: &str) -> PyResult<bool> {
    quantum_membership(&simplex(p)?, filter_from(class_filter)?).map_err(err)
}

/// Deterministic region samples: a list of ((P0, P1, P2), class_label).
#[pyfunction]
fn region_samples(
    model: &str,
    class_filter: &str,
    n: usize,
    seed: u64,
) -> PyResult<Vec<((f64, f64, f64), String)>> {
    let query = RegionQuery {
        model: model_from(model)?,
        class_filter: filter_from(class_filter)?,
    };
    Ok(montecarlo_map(&query, n, seed)
        .into_iter()
        .map(|lp| (triple(lp.point.components()), lp.class.label()))
        .collect())
}

/// Seeded game run with mixed strategies. Returns
/// (cat1_counts, cat2_counts, discarded_counts, lambda, omega).
#[pyfunction]
#[allow(clippy::type_complexity)]
fn simulate(
    p: (f64, f64, f64),
    big_l: (f64, f64, f64),
    l: (f64, f64, f64),
    iterations: u64,
    seed: u64,
) -> PyResult<(
    (u64, u64, u64),
    (u64, u64, u64),
    (u64, u64, u64),
    (f64, f64, f64),
    (f64, f64, f64),
)> {
    let cfg = GameConfig {
        first_move: simplex(p)?,
        cat1: PlayerStrategy::Mixed(strategy(Owner::Cat1, big_l)?),
        cat2: PlayerStrategy::Mixed(strategy(Owner::Cat2, l)?),
        iterations,
        seed,
    };
    let tally = run_game(&cfg).map_err(err)?;
    let (lambda, omega) = empirical_frequencies(&tally);
    let ints = |a: [u64; 3]| (a[0], a[1], a[2]);
    Ok((
        ints(tally.cat1_counts()),
        ints(tally.cat2_counts()),
        ints(tally.discarded_counts()),
        triple(lambda.components()),
        triple(omega.components()),
    ))
}

/// λ of each of the eight deterministic choice functions:
/// a list of (index, lambda, balanced).
#[pyfunction]
fn audit_pure(
    p: (f64, f64, f64),
    l: (f64, f64, f64),
) -> PyResult<Vec<(u8, (f64, f64, f64), bool)>> {
    Ok(pure_choice_function_audit(&simplex(p)?, [l.0, l.1, l.2])
        .map_err(err)?
        .into_iter()
        .map(|e| (e.function.index(), triple(e.lambda.components()), e.balanced))
        .collect())
}

/// The ±1-corner Cat 1 parameters of a deterministic choice function.
#[pyfunction]
fn pure_as_params(index: u8) -> PyResult<(f64, f64, f64)> {
    let f = PureChoiceFunction::new(index).map_err(err)?;
    Ok(triple(f.as_strategy().params()))
}

/// Classical parameters of the one-qubit strategy at sphere point `x`.
#[pyfunction]
fn sphere_strategy(owner: &str, x: (f64, f64, f64)) -> PyResult<(f64, f64, f64)> {
    let point = SpherePoint::new([x.0, x.1, x.2]).map_err(err)?;
    Ok(triple(
        strategy_from_sphere(&point, owner_from(owner)?).params(),
    ))
}

#[pymodule]
fn trifood_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(cat2_diet, m)?)?;
    m.add_function(wrap_pyfunction!(cat1_diet, m)?)?;
    m.add_function(wrap_pyfunction!(cat1_residual, m)?)?;
    m.add_function(wrap_pyfunction!(classical_feasible, m)?)?;
    m.add_function(wrap_pyfunction!(quantum_feasible, m)?)?;
    m.add_function(wrap_pyfunction!(quantum_optima, m)?)?;
    m.add_function(wrap_pyfunction!(membership, m)?)?;
    m.add_function(wrap_pyfunction!(quantum_class_available, m)?)?;
    m.add_function(wrap_pyfunction!(region_samples, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(audit_pure, m)?)?;
    m.add_function(wrap_pyfunction!(pure_as_params, m)?)?;
    m.add_function(wrap_pyfunction!(sphere_strategy, m)?)?;
    Ok(())
}

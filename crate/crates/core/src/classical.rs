//! Classical mixed-strategy analysis: diet frequencies, the closed-form
//! balanced first move, inversion of the balance system, Cat 1's optimal
//! family and the deterministic choice-function audit.

use crate::error::{Error, Result};
use crate::strategy::ResponseStrategy;
use crate::types::{FoodIndex, FrequencyTriple, Owner, SimplexPoint, SOLVE_TOL};

/// Cat 2's long-run diet frequencies ω for first-move frequencies `p` and
/// Cat 2 response strategy `s2`:
///
/// ```text
/// ω_k = Σ_{j≠k} P(C_k | B_j) · P_j
/// ```
pub fn cat2_diet(p: &SimplexPoint, s2: &ResponseStrategy) -> Result<FrequencyTriple> {
    s2.expect_owner(Owner::Cat2)?;
    let mut omega = [0.0; 3];
    for k in FoodIndex::ALL {
        for j in FoodIndex::ALL {
            if j == k {
                continue;
            }
            omega[k.index()] += s2.conditional_probability(k, j)? * p.get(j);
        }
    }
    FrequencyTriple::new(omega)
}

/// Cat 1's long-run diet frequencies λ. The pair Cat 1 faces in its second
/// move is missing exactly the food Cat 2 ate, so
///
/// ```text
/// λ_k = Σ_{j≠k} Q(C_k | B_j) · ω_j
/// ```
pub fn cat1_diet(
    p: &SimplexPoint,
    s2: &ResponseStrategy,
    s1: &ResponseStrategy,
) -> Result<FrequencyTriple> {
    s1.expect_owner(Owner::Cat1)?;
    let omega = cat2_diet(p, s2)?;
    let mut lambda = [0.0; 3];
    for k in FoodIndex::ALL {
        for j in FoodIndex::ALL {
            if j == k {
                continue;
            }
            lambda[k.index()] += s1.conditional_probability(k, j)? * omega.get(j);
        }
    }
    FrequencyTriple::new(lambda)
}

fn check_params(l: [f64; 3]) -> Result<()> {
    for t in l {
        if !t.is_finite() || t.abs() > 1.0 {
            return Err(Error::OutOfRange {
                name: "strategy parameter",
                value: t,
            });
        }
    }
    Ok(())
}

/// Closed-form first move that balances Cat 2's diet for parameters `l`:
///
/// ```text
/// P_0 = (1 + l1 - l2 + 3 l1 l2) / (3 (1 + l0 l1 + l0 l2 + l1 l2))
/// ```
///
/// and its two cyclic companions. Fails when the denominator is singular or
/// when the formal solution leaves the simplex (no balanced first move exists
/// for such `l`).
pub fn optimal_first_move(l: [f64; 3]) -> Result<SimplexPoint> {
    check_params(l)?;
    let [l0, l1, l2] = l;
    let q = 1.0 + l0 * l1 + l0 * l2 + l1 * l2;
    if q <= 1e-12 {
        return Err(Error::SingularDenominator(q));
    }
    let d = 3.0 * q;
    let mut p = [
        (1.0 + l1 - l2 + 3.0 * l1 * l2) / d,
        (1.0 - l0 + l2 + 3.0 * l0 * l2) / d,
        (1.0 + l0 - l1 + 3.0 * l0 * l1) / d,
    ];
    for v in &mut p {
        // Absorb rounding at exact-zero components.
        if *v < 0.0 && *v > -1e-15 {
            *v = 0.0;
        }
    }
    if p.iter().any(|&v| v < 0.0) {
        return Err(Error::InfeasibleFirstMove(p[0], p[1], p[2]));
    }
    SimplexPoint::new(p)
}

/// Residuals of the three ω-balance equations at `(p, l)`:
///
/// ```text
/// e_0 = l1 P1 - l2 P2 - (2/3 - (P1 + P2))
/// e_1 = l2 P2 - l0 P0 - (2/3 - (P0 + P2))
/// e_2 = l0 P0 - l1 P1 - (2/3 - (P0 + P1))
/// ```
///
/// The three expressions sum to zero identically, so the system has rank 2.
pub fn balance_residual(p: &SimplexPoint, l: [f64; 3]) -> [f64; 3] {
    let [p0, p1, p2] = p.components();
    let [l0, l1, l2] = l;
    [
        l1 * p1 - l2 * p2 - (2.0 / 3.0 - (p1 + p2)),
        l2 * p2 - l0 * p0 - (2.0 / 3.0 - (p0 + p2)),
        l0 * p0 - l1 * p1 - (2.0 / 3.0 - (p0 + p1)),
    ]
}

/// The one-dimensional solution set of the ω-balance system for a fixed
/// interior first move: every `anchor + s · direction` balances Cat 2's diet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyLine {
    anchor: [f64; 3],
    direction: [f64; 3],
}

impl StrategyLine {
    pub fn anchor(&self) -> [f64; 3] {
        self.anchor
    }

    /// Unit direction, first component positive.
    pub fn direction(&self) -> [f64; 3] {
        self.direction
    }

    pub fn point_at(&self, s: f64) -> [f64; 3] {
        std::array::from_fn(|i| self.anchor[i] + s * self.direction[i])
    }

    /// Parameter interval where the line stays inside the cube `[-1, 1]^3`,
    /// or `None` when it misses the cube entirely.
    pub fn cube_segment(&self) -> Option<(f64, f64)> {
        let mut lo = f64::NEG_INFINITY;
        let mut hi = f64::INFINITY;
        for i in 0..3 {
            let d = self.direction[i];
            let a = self.anchor[i];
            // Interior directions have all components strictly positive.
            lo = lo.max((-1.0 - a) / d);
            hi = hi.min((1.0 - a) / d);
        }
        if lo <= hi + 1e-12 {
            let mid = (lo + hi) / 2.0;
            Some((lo.min(mid), hi.max(mid)))
        } else {
            None
        }
    }
}

/// Inverts the ω-balance system at an interior `p`: the rank-2 linear system
/// in `l` is solved for its minimum-norm anchor, and the null direction is
/// `(1/P0, 1/P1, 1/P2)` normalized.
pub fn cat2_solution_line(p: &SimplexPoint) -> Result<StrategyLine> {
    if !p.is_interior() {
        return Err(Error::BoundaryFirstMove);
    }
    let [p0, p1, p2] = p.components();
    // Two independent equations: rows of the coefficient matrix and their
    // right-hand sides.
    let r1 = [0.0, p1, -p2];
    let r2 = [-p0, 0.0, p2];
    let b = [2.0 / 3.0 - (p1 + p2), 2.0 / 3.0 - (p0 + p2)];

    let dot = |u: [f64; 3], v: [f64; 3]| u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    // Minimum-norm solution l = R^T (R R^T)^{-1} b with R = [r1; r2].
    let g11 = dot(r1, r1);
    let g12 = dot(r1, r2);
    let g22 = dot(r2, r2);
    let det = g11 * g22 - g12 * g12;
    let y1 = (b[0] * g22 - b[1] * g12) / det;
    let y2 = (g11 * b[1] - g12 * b[0]) / det;
    let anchor = std::array::from_fn(|i| y1 * r1[i] + y2 * r2[i]);

    let raw = [1.0 / p0, 1.0 / p1, 1.0 / p2];
    let norm = dot(raw, raw).sqrt();
    let direction = raw.map(|v| v / norm);

    Ok(StrategyLine { anchor, direction })
}

/// Parameter interval of [`cat2_solution_line`] that stays inside the cube of
/// admissible strategies, or `None` when no classical balanced strategy
/// exists. Nonempty exactly when `max_j P_j ≤ 2/3`.
pub fn cat2_classical_feasible(p: &SimplexPoint) -> Result<Option<(f64, f64)>> {
    Ok(cat2_solution_line(p)?.cube_segment())
}

/// Left-hand sides of Cat 1's three balance equations minus 4/3, written in
/// the expanded product form
///
/// ```text
/// (1 - L1)(1 - l0) P0 + (1 + L2)(1 + l0) P0
///     + (1 + L2)(1 - l1) P1 + (1 - L1)(1 + l2) P2  - 4/3
/// ```
///
/// and its two companions. All three vanish exactly when λ = (1/3, 1/3, 1/3).
pub fn cat1_optimality_residual(p: &SimplexPoint, l: [f64; 3], big_l: [f64; 3]) -> Result<[f64; 3]> {
    check_params(l)?;
    check_params(big_l)?;
    let [p0, p1, p2] = p.components();
    let [l0, l1, l2] = l;
    let [b0, b1, b2] = big_l;
    let four_thirds = 4.0 / 3.0;
    Ok([
        (1.0 - b1) * (1.0 - l0) * p0
            + (1.0 + b2) * (1.0 + l0) * p0
            + (1.0 + b2) * (1.0 - l1) * p1
            + (1.0 - b1) * (1.0 + l2) * p2
            - four_thirds,
        (1.0 - b2) * (1.0 + l0) * p0
            + (1.0 + b0) * (1.0 + l1) * p1
            + (1.0 - b2) * (1.0 - l1) * p1
            + (1.0 + b0) * (1.0 - l2) * p2
            - four_thirds,
        (1.0 + b1) * (1.0 - l0) * p0
            + (1.0 - b0) * (1.0 + l1) * p1
            + (1.0 - b0) * (1.0 - l2) * p2
            + (1.0 + b1) * (1.0 + l2) * p2
            - four_thirds,
    ])
}

/// Cat 1's optimal strategies once Cat 2 balances its own diet: the
/// one-parameter family `L0 = L1 = L2 = c`, `c ∈ [-1, 1]`.
#[derive(Debug, Clone, Copy)]
pub struct Cat1OptimalFamily(());

impl Cat1OptimalFamily {
    pub fn member(&self, c: f64) -> Result<ResponseStrategy> {
        ResponseStrategy::new(Owner::Cat1, [c, c, c])
    }
}

/// Checks that `(p, l)` balances Cat 2's diet and returns the family of
/// Cat 1 responses that then balance Cat 1's diet as well.
pub fn cat1_optimal_family(p: &SimplexPoint, l: [f64; 3]) -> Result<Cat1OptimalFamily> {
    let s2 = ResponseStrategy::new(Owner::Cat2, l)?;
    let residual = cat2_diet(p, &s2)?.balance_residual();
    if residual > SOLVE_TOL {
        return Err(Error::NotAtOptimum(residual));
    }
    Ok(Cat1OptimalFamily(()))
}

/// One of the eight deterministic maps from food pairs to a member of the
/// pair. Bit `i` of the index selects the larger element of the `i`-th pair
/// in the order `(0,1), (0,2), (1,2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PureChoiceFunction {
    index: u8,
}

impl PureChoiceFunction {
    pub fn new(index: u8) -> Result<Self> {
        if index > 7 {
            return Err(Error::OutOfRange {
                name: "choice function index",
                value: index as f64,
            });
        }
        Ok(PureChoiceFunction { index })
    }

    pub fn all() -> [PureChoiceFunction; 8] {
        std::array::from_fn(|i| PureChoiceFunction { index: i as u8 })
    }

    pub fn index(&self) -> u8 {
        self.index
    }

    /// The food chosen from the pair that excludes `missing`.
    pub fn choose(&self, missing: FoodIndex) -> FoodIndex {
        let (lo, hi) = match missing.index() {
            2 => (0u8, 1u8),
            1 => (0, 2),
            _ => (1, 2),
        };
        let bit = match missing.index() {
            2 => 0,
            1 => 1,
            _ => 2,
        };
        let picked = if self.index >> bit & 1 == 1 { hi } else { lo };
        FoodIndex::new(picked).expect("pair members are valid foods")
    }

    /// The equivalent Cat 1 response strategy: a corner of the parameter
    /// cube with `L_j = ±1`.
    pub fn as_strategy(&self) -> ResponseStrategy {
        let params = std::array::from_fn(|j| {
            let missing = FoodIndex::new(j as u8).expect("valid");
            if self.choose(missing) == missing.cycled(1) {
                1.0
            } else {
                -1.0
            }
        });
        ResponseStrategy::new(Owner::Cat1, params).expect("corner parameters are in range")
    }
}

/// λ achieved by one deterministic choice function in a fixed scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct PureAuditEntry {
    pub function: PureChoiceFunction,
    pub lambda: FrequencyTriple,
    pub balanced: bool,
}

/// Evaluates Cat 1's diet under each of the eight deterministic choice
/// functions, against Cat 2 playing `l` over first move `p`.
pub fn pure_choice_function_audit(p: &SimplexPoint, l: [f64; 3]) -> Result<Vec<PureAuditEntry>> {
    let s2 = ResponseStrategy::new(Owner::Cat2, l)?;
    PureChoiceFunction::all()
        .into_iter()
        .map(|f| {
            let lambda = cat1_diet(p, &s2, &f.as_strategy())?;
            let balanced = lambda.balance_residual() < SOLVE_TOL;
            Ok(PureAuditEntry {
                function: f,
                lambda,
                balanced,
            })
        })
        .collect()
}

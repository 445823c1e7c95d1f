//! One-qubit strategy machinery: the three mutually unbiased bases, the
//! conditional probabilities of a projective-line point `z`, the
//! stereographic sphere chart, and the quantum feasibility results.
//!
//! The chart is fixed as `z = (x1 + i·x2) / (1 - x3)` with the north pole
//! `(0, 0, 1)` mapped to `z = ∞`; this is the unique standard chart under
//! which the `z`-form and the sphere-form probability tables agree.

use num_complex::Complex64;

use crate::classical::cat2_solution_line;
use crate::error::Result;
use crate::strategy::ResponseStrategy;
use crate::types::{ExtendedComplex, Owner, SimplexPoint, SpherePoint};

/// An orthonormal basis of the one-qubit state space.
#[derive(Debug, Clone, PartialEq)]
pub struct QubitBasis {
    states: [[Complex64; 2]; 2],
}

impl QubitBasis {
    fn new(states: [[Complex64; 2]; 2]) -> Self {
        for a in &states {
            let norm: f64 = a.iter().map(|c| c.norm_sqr()).sum();
            debug_assert!((norm - 1.0).abs() < 1e-12);
        }
        debug_assert!(overlap_sq(&states[0], &states[1]) < 1e-12);
        QubitBasis { states }
    }

    pub fn states(&self) -> &[[Complex64; 2]; 2] {
        &self.states
    }
}

/// `|⟨a|b⟩|²` for two state vectors.
pub fn overlap_sq(a: &[Complex64; 2], b: &[Complex64; 2]) -> f64 {
    let inner = a[0].conj() * b[0] + a[1].conj() * b[1];
    inner.norm_sqr()
}

/// The computational basis, the ± basis and the ±i basis. Every cross-basis
/// squared overlap equals 1/2.
pub fn mub_triple() -> [QubitBasis; 3] {
    let zero = Complex64::new(1.0, 0.0);
    let one = Complex64::new(0.0, 0.0);
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let ih = Complex64::new(0.0, std::f64::consts::FRAC_1_SQRT_2);
    [
        QubitBasis::new([[zero, one], [one, zero]]),
        QubitBasis::new([[h, h], [h, -h]]),
        QubitBasis::new([[h, ih], [h, -ih]]),
    ]
}

/// Squared-modulus split `|den|² / (|den|² + |num|²)` of the Möbius image
/// `num/den`, which is the first-component probability for that pair.
fn first_prob(num: Complex64, den: Complex64) -> f64 {
    let n = num.norm_sqr();
    let d = den.norm_sqr();
    d / (d + n)
}

/// The six conditional probabilities of the strategy `|z⟩`, encoded as a
/// Cat 2 response strategy:
///
/// ```text
/// P(C0|B2) = 1 / (1 + |z|²)
/// P(C0|B1) = 1 / (1 + |(1-z)/(1+z)|²)
/// P(C1|B0) = 1 / (1 + |(1+iz)/(1-iz)|²)
/// ```
///
/// At `z = ∞` the limiting values apply: `P(C0|B2) = 0` and both Möbius
/// ratios tend to modulus 1.
pub fn probs_from_z(z: ExtendedComplex) -> ResponseStrategy {
    let (p02, p01, p10) = match z {
        ExtendedComplex::Finite(z) => {
            let i = Complex64::new(0.0, 1.0);
            let one = Complex64::new(1.0, 0.0);
            (
                first_prob(z, one),
                first_prob(one - z, one + z),
                first_prob(one + i * z, one - i * z),
            )
        }
        ExtendedComplex::Infinity => (0.0, 0.5, 0.5),
    };
    // P(C0|B2) = (1 - l2)/2, P(C0|B1) = (1 + l1)/2, P(C1|B0) = (1 - l0)/2.
    let params = [1.0 - 2.0 * p10, 2.0 * p01 - 1.0, 1.0 - 2.0 * p02];
    ResponseStrategy::new(Owner::Cat2, params).expect("probabilities stay in [0, 1]")
}

/// Inverse stereographic projection of `z` onto the unit sphere.
pub fn sphere_from_z(z: ExtendedComplex) -> SpherePoint {
    match z {
        ExtendedComplex::Finite(z) => {
            let d = 1.0 + z.norm_sqr();
            SpherePoint::normalized([2.0 * z.re / d, 2.0 * z.im / d, (z.norm_sqr() - 1.0) / d])
                .expect("image of a finite point is a unit vector")
        }
        ExtendedComplex::Infinity => SpherePoint::new([0.0, 0.0, 1.0]).expect("north pole"),
    }
}

/// Stereographic projection of a sphere point back to the extended plane.
pub fn z_from_sphere(x: &SpherePoint) -> ExtendedComplex {
    let [x1, x2, x3] = x.components();
    if x3 == 1.0 {
        return ExtendedComplex::Infinity;
    }
    ExtendedComplex::finite(x1 / (1.0 - x3), x2 / (1.0 - x3))
}

/// The identification between sphere coordinates and the classical strategy
/// parameters, read off by matching the two probability tables:
/// `l = (-x2, x1, x3)`.
pub fn cat2_params_from_sphere(x: &SpherePoint) -> [f64; 3] {
    let [x1, x2, x3] = x.components();
    [-x2, x1, x3]
}

/// Inverse of [`cat2_params_from_sphere`]: `x = (l1, -l0, l2)`.
pub fn sphere_coords_from_cat2_params(l: [f64; 3]) -> [f64; 3] {
    [l[1], -l[0], l[2]]
}

/// A one-qubit pure strategy as a response strategy for either player. Cat 1
/// probabilities use the same sphere table, so its classical parameters pick
/// up the opposite sign: `L = (x2, -x1, -x3)`.
pub fn strategy_from_sphere(x: &SpherePoint, owner: Owner) -> ResponseStrategy {
    let [l0, l1, l2] = cat2_params_from_sphere(x);
    let params = match owner {
        Owner::Cat2 => [l0, l1, l2],
        Owner::Cat1 => [-l0, -l1, -l2],
    };
    ResponseStrategy::new(owner, params).expect("sphere coordinates lie in [-1, 1]")
}

/// All one-qubit strategies that balance Cat 2's diet over the first move
/// `p`: the intersection of the balance line with the unit sphere. Returns
/// 0, 1 (tangency) or 2 points.
pub fn cat2_quantum_feasible(p: &SimplexPoint) -> Result<Vec<SpherePoint>> {
    let line = cat2_solution_line(p)?;
    let a = line.anchor();
    let d = line.direction();
    let ad: f64 = (0..3).map(|i| a[i] * d[i]).sum();
    let aa: f64 = a.iter().map(|v| v * v).sum();
    // |a + s d|² = 1 with unit d: s² + 2(a·d)s + (|a|² - 1) = 0.
    let disc = ad * ad - aa + 1.0;
    let roots: Vec<f64> = if disc > 1e-12 {
        let sq = disc.sqrt();
        vec![-ad - sq, -ad + sq]
    } else if disc >= -1e-12 {
        vec![-ad]
    } else {
        vec![]
    };
    roots
        .into_iter()
        .map(|s| {
            let l = line.point_at(s);
            SpherePoint::normalized(sphere_coords_from_cat2_params(l))
        })
        .collect()
}

/// The two one-qubit strategies that balance Cat 1's diet when Cat 2 is at a
/// balanced optimum: `±(1/√3)·(-1, 1, -1)`, both intransitive.
pub fn cat1_quantum_optima() -> [SpherePoint; 2] {
    let t = 1.0 / 3.0_f64.sqrt();
    [
        SpherePoint::new([-t, t, -t]).expect("unit"),
        SpherePoint::new([t, -t, t]).expect("unit"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategy::classify_preferences;
    use crate::types::FoodIndex;

    fn food(i: u8) -> FoodIndex {
        FoodIndex::new(i).unwrap()
    }

    fn prob(s: &ResponseStrategy, chosen: u8, missing: u8) -> f64 {
        s.conditional_probability(food(chosen), food(missing))
            .unwrap()
    }

    #[test]
    fn mub_overlaps() {
        let bases = mub_triple();
        for i in 0..3 {
            for j in 0..3 {
                for a in bases[i].states() {
                    for b in bases[j].states() {
                        let o = overlap_sq(a, b);
                        if i == j {
                            assert!(o < 1e-14 || (o - 1.0).abs() < 1e-14);
                        } else {
                            assert!((o - 0.5).abs() < 1e-14, "cross overlap {o}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn probs_at_special_points() {
        // z = 0: P(C0|B2) = 1, the other two pairs indifferent.
        let s = probs_from_z(ExtendedComplex::finite(0.0, 0.0));
        assert_eq!(prob(&s, 0, 2), 1.0);
        assert_eq!(prob(&s, 0, 1), 0.5);
        assert_eq!(prob(&s, 1, 0), 0.5);

        // z = 1: (1-z)/(1+z) = 0 so P(C0|B1) = 1.
        let s = probs_from_z(ExtendedComplex::finite(1.0, 0.0));
        assert_eq!(prob(&s, 1, 2), 0.5);
        assert_eq!(prob(&s, 0, 1), 1.0);
        assert_eq!(prob(&s, 1, 0), 0.5);

        // z = -i: (1+iz)/(1-iz) blows up, so P(C1|B0) = 0, P(C2|B0) = 1.
        let s = probs_from_z(ExtendedComplex::finite(0.0, -1.0));
        assert_eq!(prob(&s, 1, 0), 0.0);
        assert_eq!(prob(&s, 2, 0), 1.0);
        // Verify the limit by approaching z = -i.
        let s = probs_from_z(ExtendedComplex::finite(1e-9, -1.0 + 1e-9));
        assert!(prob(&s, 1, 0) < 1e-8);

        // z = ∞.
        let s = probs_from_z(ExtendedComplex::Infinity);
        assert_eq!(prob(&s, 0, 2), 0.0);
        assert_eq!(prob(&s, 1, 2), 1.0);
        assert_eq!(prob(&s, 0, 1), 0.5);
        assert_eq!(prob(&s, 1, 0), 0.5);
    }

    #[test]
    fn chart_poles() {
        let south = sphere_from_z(ExtendedComplex::finite(0.0, 0.0));
        assert_eq!(south.components(), [0.0, 0.0, -1.0]);
        let north = sphere_from_z(ExtendedComplex::Infinity);
        assert_eq!(north.components(), [0.0, 0.0, 1.0]);
        assert!(z_from_sphere(&north).is_infinite());
    }

    #[test]
    fn chart_consistency_at_x_axis() {
        // x = (1, 0, 0) ↔ z = 1; the sphere table gives P(C0|B1) = 1.
        let x = SpherePoint::new([1.0, 0.0, 0.0]).unwrap();
        match z_from_sphere(&x) {
            ExtendedComplex::Finite(z) => {
                assert!((z.re - 1.0).abs() < 1e-15 && z.im.abs() < 1e-15)
            }
            _ => panic!("finite point expected"),
        }
        let s = strategy_from_sphere(&x, Owner::Cat2);
        assert_eq!(prob(&s, 0, 1), 1.0);
    }

    #[test]
    fn sphere_strategy_matches_z_route() {
        // The Möbius-ratio route through z and the sphere table must agree.
        let x = SpherePoint::normalized([0.3, -0.8, 0.52]).unwrap();
        let via_table = strategy_from_sphere(&x, Owner::Cat2).params();
        let via_z = probs_from_z(z_from_sphere(&x)).params();
        for k in 0..3 {
            assert!((via_table[k] - via_z[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn quantum_feasible_at_centroid() {
        let pts = cat2_quantum_feasible(&SimplexPoint::centroid()).unwrap();
        assert_eq!(pts.len(), 2);
        let t = 1.0 / 3.0_f64.sqrt();
        let expected = [[t, -t, t], [-t, t, -t]];
        for x in &pts {
            let c = x.components();
            assert!(
                expected
                    .iter()
                    .any(|e| (0..3).all(|i| (c[i] - e[i]).abs() < 1e-12)),
                "unexpected intersection {c:?}"
            );
            let class = classify_preferences(&strategy_from_sphere(x, Owner::Cat2));
            assert!(class.is_intransitive());
        }
    }

    #[test]
    fn quantum_feasible_miss() {
        let p = SimplexPoint::new([0.7, 0.2, 0.1]).unwrap();
        assert!(cat2_quantum_feasible(&p).unwrap().is_empty());
    }

    #[test]
    fn quantum_feasible_points_balance_diet() {
        let p = SimplexPoint::new([0.45, 0.3, 0.25]).unwrap();
        for x in cat2_quantum_feasible(&p).unwrap() {
            let s = strategy_from_sphere(&x, Owner::Cat2);
            let omega = crate::classical::cat2_diet(&p, &s).unwrap();
            assert!(omega.balance_residual() < 1e-10);
        }
    }

    #[test]
    fn cat1_optima_values_and_class() {
        let [a, b] = cat1_quantum_optima();
        let t = 1.0 / 3.0_f64.sqrt();
        assert_eq!(a.components(), [-t, t, -t]);
        assert_eq!(b.components(), [t, -t, t]);
        let ca = classify_preferences(&strategy_from_sphere(&a, Owner::Cat1));
        let cb = classify_preferences(&strategy_from_sphere(&b, Owner::Cat1));
        assert!(ca.is_intransitive());
        assert!(cb.is_intransitive());
        assert_ne!(ca, cb);
    }

    #[test]
    fn cat1_optima_balance_lambda() {
        use crate::classical::{cat1_diet, optimal_first_move};
        let l = [0.4, -0.1, 0.2];
        let p = optimal_first_move(l).unwrap();
        let s2 = ResponseStrategy::new(Owner::Cat2, l).unwrap();
        for x in cat1_quantum_optima() {
            let s1 = strategy_from_sphere(&x, Owner::Cat1);
            let lambda = cat1_diet(&p, &s2, &s1).unwrap();
            assert!(lambda.balance_residual() < 1e-10);
        }
    }

    #[test]
    fn optima_line_sphere_intersection_is_exact() {
        // The constraint line X1 = X3 = -X2 meets the sphere only at the two
        // returned points.
        let [a, b] = cat1_quantum_optima();
        for x in [a, b] {
            let [x1, x2, x3] = x.components();
            assert!((x1 - x3).abs() < 1e-14);
            assert!((x2 + x3).abs() < 1e-14);
            assert!((x1 + x2).abs() < 1e-14);
        }
    }
}

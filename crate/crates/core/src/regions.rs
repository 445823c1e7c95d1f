//! Membership tests and Monte Carlo mapping for the strategy-availability
//! regions over first-move frequencies.
//!
//! The analytic fast paths: Cat 2 has some balanced classical strategy
//! exactly on the hexagon `max_j P_j ≤ 2/3`; it has a balanced *intransitive*
//! classical strategy exactly on a six-armed star made of two triangles, one
//! per cycle orientation. The triangles are validated against the brute-force
//! image-sampling oracle in the test suite before being trusted.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classical::optimal_first_move;
use crate::error::Result;
use crate::quantum::{cat2_quantum_feasible, strategy_from_sphere};
use crate::strategy::{classify_preferences, PreferenceClass, ResponseStrategy};
use crate::types::{Owner, SimplexPoint, SpherePoint};

/// Which variant of the game a region query refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    Classical,
    Quantum,
}

impl Model {
    pub fn label(&self) -> &'static str {
        match self {
            Model::Classical => "classical",
            Model::Quantum => "quantum",
        }
    }
}

/// Restriction on the preference type of the balanced strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassFilter {
    Any,
    Transitive,
    Intransitive,
}

impl ClassFilter {
    pub fn admits(&self, class: &PreferenceClass) -> bool {
        match self {
            ClassFilter::Any => true,
            ClassFilter::Transitive => class.is_transitive(),
            ClassFilter::Intransitive => class.is_intransitive(),
        }
    }
}

/// A region-mapping request: which player/model/class combination to sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionQuery {
    pub model: Model,
    pub class_filter: ClassFilter,
}

/// A sampled first-move point together with the class of the balanced
/// strategy that generated it.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledPoint {
    pub point: SimplexPoint,
    pub model: Model,
    pub class: PreferenceClass,
}

impl LabeledPoint {
    /// Membership labels implied by the generating class: `Any` always,
    /// plus the strict class when there is one.
    pub fn labels(&self) -> Vec<(Model, ClassFilter)> {
        let mut labels = vec![(self.model, ClassFilter::Any)];
        if self.class.is_transitive() {
            labels.push((self.model, ClassFilter::Transitive));
        } else if self.class.is_intransitive() {
            labels.push((self.model, ClassFilter::Intransitive));
        }
        labels
    }
}

/// True when Cat 2 has some balanced classical strategy: `max_j P_j ≤ 2/3`
/// (closed region).
pub fn hexagon_membership(p: &SimplexPoint) -> bool {
    p.max_component() <= 2.0 / 3.0 + 1e-12
}

/// Which cycle triangles a point lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarMembership {
    CycleA,
    CycleB,
    Both,
}

/// Membership in the six-armed star of balanced intransitive availability.
///
/// The cycle-A triangle has vertices (1/3, 0, 2/3), (2/3, 1/3, 0) and
/// (0, 2/3, 1/3), equivalently `P_j - P_{j+1} ≤ 1/3` for all j (cyclic); the
/// cycle-B triangle is its mirror image. Boundaries are inclusive.
pub fn star_membership(p: &SimplexPoint) -> Option<StarMembership> {
    const TOL: f64 = 1e-12;
    let [p0, p1, p2] = p.components();
    let in_a =
        p0 - p1 <= 1.0 / 3.0 + TOL && p1 - p2 <= 1.0 / 3.0 + TOL && p2 - p0 <= 1.0 / 3.0 + TOL;
    let in_b =
        p1 - p0 <= 1.0 / 3.0 + TOL && p2 - p1 <= 1.0 / 3.0 + TOL && p0 - p2 <= 1.0 / 3.0 + TOL;
    match (in_a, in_b) {
        (true, true) => Some(StarMembership::Both),
        (true, false) => Some(StarMembership::CycleA),
        (false, true) => Some(StarMembership::CycleB),
        (false, false) => None,
    }
}

/// Whether some one-qubit strategy balancing Cat 2's diet at `p` has the
/// requested preference class.
pub fn quantum_membership(p: &SimplexPoint, filter: ClassFilter) -> Result<bool> {
    let points = cat2_quantum_feasible(p)?;
    Ok(points.iter().any(|x| {
        let class = classify_preferences(&strategy_from_sphere(x, Owner::Cat2));
        filter.admits(&class)
    }))
}

/// SplitMix64 step, used to derive an independent stream per sample index.
fn mix(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn sample_cube(rng: &mut ChaCha8Rng) -> [f64; 3] {
    std::array::from_fn(|_| rng.random::<f64>() * 2.0 - 1.0)
}

fn sample_sphere(rng: &mut ChaCha8Rng) -> SpherePoint {
    // Uniform area measure: cos(polar angle) uniform, azimuth uniform.
    let x3 = rng.random::<f64>() * 2.0 - 1.0;
    let phi = rng.random::<f64>() * std::f64::consts::TAU;
    let r = (1.0 - x3 * x3).sqrt();
    SpherePoint::normalized([r * phi.cos(), r * phi.sin(), x3]).expect("nonzero vector")
}

/// Samples `n` first-move points admitting a balanced Cat 2 strategy of the
/// requested model and class.
///
/// Classical: strategy parameters are drawn uniformly from the cube and
/// mapped through the closed-form first move. Quantum: strategies are drawn
/// uniformly (area measure) from the sphere. Draws whose class does not match
/// the filter, or that admit no balanced first move, are rejected and redrawn.
/// Each sample index derives its own random stream from `seed`, so the output
/// is deterministic and independent of any parallel schedule.
pub fn montecarlo_map(query: &RegionQuery, n: usize, seed: u64) -> Vec<LabeledPoint> {
    (0..n as u64)
        .map(|index| {
            let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, index));
            loop {
                let (params, owner_strategy) = match query.model {
                    Model::Classical => {
                        let l = sample_cube(&mut rng);
                        let Ok(s) = ResponseStrategy::new(Owner::Cat2, l) else {
                            continue;
                        };
                        (l, s)
                    }
                    Model::Quantum => {
                        let x = sample_sphere(&mut rng);
                        let s = strategy_from_sphere(&x, Owner::Cat2);
                        (s.params(), s)
                    }
                };
                let class = classify_preferences(&owner_strategy);
                if !query.class_filter.admits(&class) {
                    continue;
                }
                let Ok(point) = optimal_first_move(params) else {
                    continue;
                };
                return LabeledPoint {
                    point,
                    model: query.model,
                    class,
                };
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(p: [f64; 3]) -> SimplexPoint {
        SimplexPoint::new(p).unwrap()
    }

    #[test]
    fn hexagon_examples() {
        assert!(hexagon_membership(&SimplexPoint::centroid()));
        assert!(!hexagon_membership(&simplex([0.7, 0.2, 0.1])));
        assert!(hexagon_membership(&simplex([2.0 / 3.0, 1.0 / 3.0, 0.0])));
    }

    #[test]
    fn star_examples() {
        assert_eq!(
            star_membership(&SimplexPoint::centroid()),
            Some(StarMembership::Both)
        );
        // Cycle-A triangle vertex, the image of l = (1, 1, 0).
        assert_eq!(
            star_membership(&simplex([1.0 / 3.0, 0.0, 2.0 / 3.0])),
            Some(StarMembership::CycleA)
        );
        // Inside the hexagon but outside both triangles.
        assert_eq!(star_membership(&simplex([0.55, 0.40, 0.05])), None);
    }

    #[test]
    fn star_triangles_cover_positive_cube_images() {
        // Forward validation of the analytic triangles: the image of the
        // all-nonnegative parameter cube lies in the cycle-A triangle, and
        // mirrored for cycle B.
        let steps = 12;
        for i in 0..=steps {
            for j in 0..=steps {
                for k in 0..=steps {
                    let l = [
                        i as f64 / steps as f64,
                        j as f64 / steps as f64,
                        k as f64 / steps as f64,
                    ];
                    let p = optimal_first_move(l).expect("nonnegative cube is nonsingular");
                    match star_membership(&p) {
                        Some(StarMembership::CycleA) | Some(StarMembership::Both) => {}
                        other => panic!("image {:?} of {l:?} not in triangle A ({other:?})",
                            p.components()),
                    }
                    let neg = [-l[0], -l[1], -l[2]];
                    let p = optimal_first_move(neg).expect("nonpositive cube is nonsingular");
                    match star_membership(&p) {
                        Some(StarMembership::CycleB) | Some(StarMembership::Both) => {}
                        other => panic!("image {:?} of {neg:?} not in triangle B ({other:?})",
                            p.components()),
                    }
                }
            }
        }
    }

    #[test]
    fn quantum_membership_centroid_contrast() {
        let c = SimplexPoint::centroid();
        assert!(quantum_membership(&c, ClassFilter::Any).unwrap());
        assert!(quantum_membership(&c, ClassFilter::Intransitive).unwrap());
        assert!(!quantum_membership(&c, ClassFilter::Transitive).unwrap());
    }

    #[test]
    fn montecarlo_classical_stays_in_hexagon_and_star() {
        let query = RegionQuery {
            model: Model::Classical,
            class_filter: ClassFilter::Any,
        };
        let points = montecarlo_map(&query, 2000, 17);
        assert_eq!(points.len(), 2000);
        for lp in &points {
            assert!(hexagon_membership(&lp.point));
        }

        let query = RegionQuery {
            model: Model::Classical,
            class_filter: ClassFilter::Intransitive,
        };
        for lp in montecarlo_map(&query, 2000, 17) {
            assert!(lp.class.is_intransitive());
            assert!(star_membership(&lp.point).is_some());
        }
    }

    #[test]
    fn montecarlo_is_deterministic() {
        let query = RegionQuery {
            model: Model::Quantum,
            class_filter: ClassFilter::Any,
        };
        let a = montecarlo_map(&query, 500, 99);
        let b = montecarlo_map(&query, 500, 99);
        assert_eq!(a, b);
        let c = montecarlo_map(&query, 500, 100);
        assert_ne!(a, c);
    }

    #[test]
    fn labels_nest() {
        for model in [Model::Classical, Model::Quantum] {
            for filter in [ClassFilter::Transitive, ClassFilter::Intransitive] {
                let query = RegionQuery {
                    model,
                    class_filter: filter,
                };
                for lp in montecarlo_map(&query, 300, 5) {
                    let labels = lp.labels();
                    assert!(labels.contains(&(model, ClassFilter::Any)));
                    assert!(labels.contains(&(model, filter)));
                }
            }
        }
    }
}

//! Orbit of a direction in the projectivized homology of the genus-2 base
//! under symplectic transvections, measured by its covering radius against
//! random target directions.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use sha2::{Digest, Sha256};

use crate::surface::symplectic_product;

/// Covering radius (radians) that the genus-2 orbit of `a1` must fall below
/// after 100000 elements with seed 0 and 2048 targets.
pub const RADIUS_THRESHOLD: f64 = 0.4;

/// Target count used by the reference measurement.
pub const DEFAULT_TARGETS: usize = 2048;

/// Curve classes `a1, b1, a2, b2, a1 + a2` in coordinates `(a1, b1, a2, b2)`.
pub const TRANSVECTIONS: [[i64; 4]; 5] = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 1, 0]];

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitRow {
    pub steps: usize,
    pub orbit_size: usize,
    pub radius: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitReport {
    pub seed: u64,
    pub targets: usize,
    pub transvection_hash: String,
    pub rows: Vec<OrbitRow>,
}

impl OrbitReport {
    pub fn final_radius(&self) -> f64 {
        self.rows.last().map_or(f64::NAN, |r| r.radius)
    }

    pub fn is_non_increasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].radius <= w[0].radius)
    }
}

impl fmt::Display for OrbitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# seed\t{}", self.seed)?;
        writeln!(f, "# targets\t{}", self.targets)?;
        writeln!(f, "# transvections\tsha256:{}", self.transvection_hash)?;
        writeln!(f, "steps\torbit_size\tradius")?;
        for r in &self.rows {
            writeln!(f, "{}\t{}\t{:.6}", r.steps, r.orbit_size, r.radius)?;
        }
        Ok(())
    }
}

/// `x + <x, c> c`, or its inverse `x - <x, c> c`.
pub fn transvect(x: &[i64], c: &[i64], inverse: bool) -> Vec<i64> {
    let k = symplectic_product(x, c) * if inverse { -1 } else { 1 };
    x.iter().zip(c).map(|(a, b)| a + k * b).collect()
}

/// Hex sha256 of the transvection classes, one comma-separated line each.
pub fn transvection_hash() -> String {
    let mut h = Sha256::new();
    for c in TRANSVECTIONS {
        let line: Vec<String> = c.iter().map(i64::to_string).collect();
        h.update(line.join(","));
        h.update("\n");
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Sign-normalized so that `x` and `-x` name the same direction.
fn projective_key(x: &[i64]) -> Vec<i64> {
    match x.iter().find(|&&a| a != 0) {
        Some(&a) if a < 0 => x.iter().map(|v| -v).collect(),
        _ => x.to_vec(),
    }
}

fn unit(x: &[i64]) -> [f64; 4] {
    let n = x.iter().map(|&a| (a as f64) * (a as f64)).sum::<f64>().sqrt();
    [x[0] as f64 / n, x[1] as f64 / n, x[2] as f64 / n, x[3] as f64 / n]
}

/// Projective angle between unit vectors.
pub fn angle(u: &[f64; 4], v: &[f64; 4]) -> f64 {
    let dot: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
    dot.abs().min(1.0).acos()
}

/// Uniform random directions on the unit 3-sphere.
pub fn sample_targets(count: usize, seed: u64) -> Vec<[f64; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let g: Vec<f64> = (0..4).map(|_| StandardNormal.sample(&mut rng)).collect();
            let n = g.iter().map(|a| a * a).sum::<f64>().sqrt();
            [g[0] / n, g[1] / n, g[2] / n, g[3] / n]
        })
        .collect()
}

/// Breadth-first orbit of `a1` under the transvections and their inverses.
/// `steps` counts orbit elements beyond the start; a row is reported at
/// 0, 1, 2, 4, ... and at `steps` itself.
pub fn orbit_density_experiment(steps: usize, targets: usize, seed: u64) -> OrbitReport {
    let targets_v = sample_targets(targets, seed);
    let start = vec![1, 0, 0, 0];
    let mut best: Vec<f64> = vec![f64::INFINITY; targets_v.len()];
    let absorb = |x: &[i64], best: &mut Vec<f64>| {
        let u = unit(x);
        for (b, t) in best.iter_mut().zip(&targets_v) {
            let a = angle(&u, t);
            if a < *b {
                *b = a;
            }
        }
    };
    let radius = |best: &[f64]| best.iter().cloned().fold(0.0, f64::max);

    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(projective_key(&start));
    absorb(&start, &mut best);
    let mut rows = vec![OrbitRow { steps: 0, orbit_size: 1, radius: radius(&best) }];
    let mut next_checkpoint = 1;
    let mut added = 0;
    let mut queue = VecDeque::from([start]);
    'bfs: while let Some(x) = queue.pop_front() {
        for c in TRANSVECTIONS {
            for inverse in [false, true] {
                if added >= steps {
                    break 'bfs;
                }
                let y = transvect(&x, &c, inverse);
                if !seen.insert(projective_key(&y)) {
                    continue;
                }
                absorb(&y, &mut best);
                added += 1;
                if added == next_checkpoint || added == steps {
                    rows.push(OrbitRow { steps: added, orbit_size: added + 1, radius: radius(&best) });
                    next_checkpoint *= 2;
                }
                queue.push_back(y);
            }
        }
    }
    OrbitReport { seed, targets, transvection_hash: transvection_hash(), rows }
}

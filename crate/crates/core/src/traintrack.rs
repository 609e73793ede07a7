//! Train tracks given combinatorially: switches with two ordered sides of
//! half-branch slots, and branches recorded as path words in the one-vertex
//! skeleton. A track may live on a cover, in which case each switch sits at a
//! sheet and each branch word lifts from the sheet of its start switch to the
//! sheet of its end switch.

use serde::{Deserialize, Serialize};

use crate::covers::{CoverArrow, CoverSpec};
use crate::error::{Error, Result};
use crate::homology::{add_trace, CoverCycle};
use crate::linalg;
use crate::surface::{GroupWord, HomologyClass, Surface};
use crate::Rational;

/// One end of a branch: `end = 0` is where its word starts, `end = 1` where it ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfBranch {
    pub branch: usize,
    pub end: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Switch {
    #[serde(default)]
    pub sheet: usize,
    pub side_a: Vec<HalfBranch>,
    pub side_b: Vec<HalfBranch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrainTrack {
    base: Surface,
    switches: Vec<Switch>,
    words: Vec<GroupWord>,
    /// `(switch, side)` of each half-branch, side 0 = A.
    ends: Vec<[(usize, usize); 2]>,
}

impl TrainTrack {
    pub fn new(base: Surface, switches: Vec<Switch>, words: Vec<GroupWord>) -> Result<Self> {
        let mut ends = vec![[(usize::MAX, 0); 2]; words.len()];
        for (i, sw) in switches.iter().enumerate() {
            for (side, slots) in [&sw.side_a, &sw.side_b].into_iter().enumerate() {
                for h in slots {
                    if h.branch >= words.len() || h.end > 1 {
                        return Err(Error::InvalidInput(format!("slot refers to missing half-branch {:?}", h)));
                    }
                    if ends[h.branch][h.end].0 != usize::MAX {
                        return Err(Error::InvalidInput(format!("half-branch {:?} occupies two slots", h)));
                    }
                    ends[h.branch][h.end] = (i, side);
                }
            }
        }
        if let Some(b) = ends.iter().position(|e| e[0].0 == usize::MAX || e[1].0 == usize::MAX) {
            return Err(Error::InvalidInput(format!("branch {} has an end in no slot", b + 1)));
        }
        for w in &words {
            base.check_word(w)?;
        }
        Ok(TrainTrack { base, switches, words, ends })
    }

    pub fn base(&self) -> Surface {
        self.base
    }

    pub fn switches(&self) -> &[Switch] {
        &self.switches
    }

    pub fn words(&self) -> &[GroupWord] {
        &self.words
    }

    pub fn num_branches(&self) -> usize {
        self.words.len()
    }

    pub fn num_switches(&self) -> usize {
        self.switches.len()
    }

    /// Switch at the start and at the end of branch `b`.
    pub fn endpoints(&self, b: usize) -> (usize, usize) {
        (self.ends[b][0].0, self.ends[b][1].0)
    }

    /// Check the track against the cover it lives on: switch sheets in
    /// range and branch words lifting between the right sheets.
    pub fn check_on(&self, cover: &CoverSpec) -> Result<()> {
        if cover.base() != self.base {
            return Err(Error::BaseMismatch);
        }
        for (i, sw) in self.switches.iter().enumerate() {
            if sw.sheet >= cover.degree() {
                return Err(Error::InvalidInput(format!("switch {} sits on missing sheet {}", i + 1, sw.sheet + 1)));
            }
        }
        for b in 0..self.num_branches() {
            let (s, t) = self.endpoints(b);
            if cover.trace(self.switches[s].sheet, &self.words[b]) != self.switches[t].sheet {
                return Err(Error::InvalidInput(format!("branch {} does not lift between its switches", b + 1)));
            }
        }
        Ok(())
    }

    /// One row per switch: side-A weights minus side-B weights.
    pub fn switch_matrix(&self) -> Vec<Vec<i64>> {
        self.switches
            .iter()
            .map(|sw| {
                let mut row = vec![0; self.num_branches()];
                sw.side_a.iter().for_each(|h| row[h.branch] += 1);
                sw.side_b.iter().for_each(|h| row[h.branch] -= 1);
                row
            })
            .collect()
    }

    pub fn validate_weights(&self, w: &WeightVector) -> Result<()> {
        if w.0.len() != self.num_branches() {
            return Err(Error::DimensionMismatch { expected: self.num_branches(), found: w.0.len() });
        }
        if let Some(b) = w.0.iter().position(|x| *x < Rational::from_integer(0)) {
            return Err(Error::NegativeWeight { branch: b + 1 });
        }
        for (i, row) in self.switch_matrix().iter().enumerate() {
            let sum: Rational = row.iter().zip(&w.0).map(|(&c, x)| Rational::from_integer(c) * x).sum();
            if sum != Rational::from_integer(0) {
                return Err(Error::SwitchViolation { switch: i + 1 });
            }
        }
        Ok(())
    }

    /// Dimension of the span of the weight cone.
    pub fn chart_dimension(&self) -> usize {
        self.num_branches() - linalg::rank(&self.switch_matrix(), self.num_branches())
    }

    /// Extreme rays of the weight cone, as primitive integer vectors, found
    /// as the supports on which the switch equations have a one-dimensional
    /// positive solution space.
    pub fn extreme_rays(&self, budget: usize) -> Result<Vec<Vec<i64>>> {
        let n = self.num_branches();
        if n >= usize::BITS as usize - 1 || (1usize << n) > budget {
            return Err(Error::SearchBudgetExceeded { budget });
        }
        let m = self.switch_matrix();
        let mut rays = Vec::new();
        for mask in 1usize..(1 << n) {
            let cols: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
            let sub: Vec<Vec<i64>> = m.iter().map(|r| cols.iter().map(|&j| r[j]).collect()).collect();
            let sub = if sub.is_empty() { vec![vec![0; cols.len()]] } else { sub };
            let ker = linalg::kernel(&sub, cols.len());
            if ker.len() != 1 {
                continue;
            }
            let v = &ker[0];
            let sign = if v.iter().all(|&x| x > 0) {
                1
            } else if v.iter().all(|&x| x < 0) {
                -1
            } else {
                continue;
            };
            let mut ray = vec![0; n];
            for (k, &j) in cols.iter().enumerate() {
                ray[j] = sign * v[k];
            }
            rays.push(ray);
        }
        Ok(rays)
    }

    /// Edge chain on `cover` of the weighted track: each branch contributes
    /// its weight times the lift of its word from the sheet of its start switch.
    pub fn cover_cycle(&self, cover: &CoverSpec, w: &WeightVector) -> Result<CoverCycle> {
        self.check_on(cover)?;
        let ints = w.to_integers()?;
        let mut z = CoverCycle::zero(cover);
        for (b, &k) in ints.iter().enumerate() {
            let (s, _) = self.endpoints(b);
            add_trace(cover, &mut z.coeffs, self.switches[s].sheet, &self.words[b], k);
        }
        Ok(z)
    }
}

/// `sum_b w(b) * abelianize(word(b))` for a track on the base surface.
pub fn track_homology_class(t: &TrainTrack, w: &WeightVector) -> Result<HomologyClass> {
    let ints = w.to_integers()?;
    if ints.len() != t.num_branches() {
        return Err(Error::DimensionMismatch { expected: t.num_branches(), found: ints.len() });
    }
    let mut acc = HomologyClass::zero(&t.base);
    for (b, &k) in ints.iter().enumerate() {
        acc = acc.add(&t.base.abelianize(&t.words[b])?.scale(k));
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(pub Vec<Rational>);

impl WeightVector {
    pub fn from_integers(xs: &[i64]) -> Self {
        WeightVector(xs.iter().map(|&x| Rational::from_integer(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        WeightVector(vec![Rational::from_integer(0); n])
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn to_integers(&self) -> Result<Vec<i64>> {
        if !self.is_integral() {
            return Err(Error::NonIntegerWeights);
        }
        Ok(self.0.iter().map(|x| x.to_integer()).collect())
    }
}

/// A nonnegative integer matrix taking weights on `source` to weights on
/// `target` (rows index target branches, columns source branches).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarryingMatrix {
    source: TrainTrack,
    target: TrainTrack,
    matrix: Vec<Vec<i64>>,
}

/// Subset budget for extreme-ray enumeration during validation.
pub const RAY_BUDGET: usize = 1 << 22;

impl CarryingMatrix {
    /// Validate a supplied matrix: shape, nonnegativity, and that every
    /// extreme ray of the source cone lands in the target cone.
    pub fn new(source: TrainTrack, target: TrainTrack, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.len() != target.num_branches() {
            return Err(Error::DimensionMismatch { expected: target.num_branches(), found: matrix.len() });
        }
        if let Some(r) = matrix.iter().find(|r| r.len() != source.num_branches()) {
            return Err(Error::DimensionMismatch { expected: source.num_branches(), found: r.len() });
        }
        if matrix.iter().flatten().any(|&x| x < 0) {
            return Err(Error::ConeViolation);
        }
        let m = CarryingMatrix { source, target, matrix };
        m.check_cone()?;
        Ok(m)
    }

    pub fn identity(t: &TrainTrack) -> Self {
        let n = t.num_branches();
        let matrix = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
        CarryingMatrix { source: t.clone(), target: t.clone(), matrix }
    }

    fn check_cone(&self) -> Result<()> {
        let tm = self.target.switch_matrix();
        for ray in self.source.extreme_rays(RAY_BUDGET)? {
            let image = linalg::mat_vec(&self.matrix, &ray);
            if linalg::mat_vec(&tm, &image).iter().any(|&x| x != 0) {
                return Err(Error::ConeViolation);
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &TrainTrack {
        &self.source
    }

    pub fn target(&self) -> &TrainTrack {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn apply(&self, w: &WeightVector) -> Result<WeightVector> {
        if w.0.len() != self.source.num_branches() {
            return Err(Error::DimensionMismatch { expected: self.source.num_branches(), found: w.0.len() });
        }
        Ok(WeightVector(
            self.matrix.iter().map(|r| r.iter().zip(&w.0).map(|(&c, x)| Rational::from_integer(c) * x).sum()).collect(),
        ))
    }
}

/// `second` after `first`: the product `second * first`.
pub fn carrying_compose(first: &CarryingMatrix, second: &CarryingMatrix) -> Result<CarryingMatrix> {
    if second.source.num_branches() != first.target.num_branches() {
        return Err(Error::DimensionMismatch {
            expected: first.target.num_branches(),
            found: second.source.num_branches(),
        });
    }
    if second.source != first.target {
        return Err(Error::InvalidInput("composed carrying maps do not share a track".into()));
    }
    let matrix =
        linalg::mat_mul(&second.matrix, &first.matrix, first.target.num_branches(), first.source.num_branches());
    let m = CarryingMatrix { source: first.source.clone(), target: second.target.clone(), matrix };
    m.check_cone()?;
    Ok(m)
}

/// Lift a track on `arrow.to` to `arrow.from`. Switch `i` at sheet `c`
/// lifts to one copy per sheet over `c`; branch `b` lifts to one branch per
/// sheet over its start switch, running along the lift of its word.
pub fn lift_track_along(t: &TrainTrack, arrow: &CoverArrow) -> Result<(TrainTrack, CarryingMatrix)> {
    t.check_on(&arrow.to)?;
    let fine = &arrow.from;
    let mut switch_index = vec![Vec::new(); t.num_switches()];
    let mut switches = Vec::new();
    for (i, sw) in t.switches.iter().enumerate() {
        for p in arrow.fiber(sw.sheet) {
            switch_index[i].push((p, switches.len()));
            switches.push(Switch { sheet: p, side_a: Vec::new(), side_b: Vec::new() });
        }
    }
    // lifted branch (b, p) for each p over the start sheet of b
    let mut branch_index: Vec<Vec<(usize, usize)>> = vec![Vec::new(); t.num_branches()];
    let mut words = Vec::new();
    let mut column = Vec::new();
    for b in 0..t.num_branches() {
        let (s, _) = t.endpoints(b);
        for p in arrow.fiber(t.switches[s].sheet) {
            branch_index[b].push((p, words.len()));
            words.push(t.words[b].clone());
            column.push(b);
        }
    }
    let lifted_branch_ending_at = |b: usize, end: usize, sheet: usize| -> usize {
        let w = &t.words[b];
        let start = if end == 0 { sheet } else { fine.trace(sheet, &w.inverse()) };
        branch_index[b].iter().find(|&&(p, _)| p == start).expect("start sheet lies over the start switch").1
    };
    for (i, sw) in t.switches.iter().enumerate() {
        for &(p, k) in &switch_index[i] {
            let lift_slots = |slots: &[HalfBranch]| -> Vec<HalfBranch> {
                slots
                    .iter()
                    .map(|h| HalfBranch { branch: lifted_branch_ending_at(h.branch, h.end, p), end: h.end })
                    .collect()
            };
            switches[k].side_a = lift_slots(&sw.side_a);
            switches[k].side_b = lift_slots(&sw.side_b);
        }
    }
    let lifted = TrainTrack::new(t.base, switches, words)?;
    let matrix = column.iter().map(|&b| (0..t.num_branches()).map(|j| (j == b) as i64).collect()).collect();
    let l = CarryingMatrix { source: t.clone(), target: lifted.clone(), matrix };
    Ok((lifted, l))
}

/// Lift a track on the base surface through a cover.
pub fn lift_track(t: &TrainTrack, cover: &CoverSpec) -> Result<(TrainTrack, CarryingMatrix)> {
    if t.base != cover.base() {
        return Err(Error::BaseMismatch);
    }
    let trivial = CoverSpec::trivial(cover.base());
    let arrow = CoverArrow { from: cover.clone(), to: trivial, sheet_map: vec![0; cover.degree()] };
    lift_track_along(t, &arrow)
}

/// Two switches joined by three branches with `w1 = w2 + w3` at both; the
/// branch words are `a1`, `a1` and the empty word.
pub fn three_branch_track(base: Surface) -> TrainTrack {
    let hb = |branch, end| HalfBranch { branch, end };
    let switches = vec![
        Switch { sheet: 0, side_a: vec![hb(0, 0)], side_b: vec![hb(1, 0), hb(2, 0)] },
        Switch { sheet: 0, side_a: vec![hb(0, 1)], side_b: vec![hb(1, 1), hb(2, 1)] },
    ];
    let a1 = GroupWord::generator(0);
    TrainTrack::new(base, switches, vec![a1.clone(), a1, GroupWord::empty()]).expect("well-formed track")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::CoverComplex;

    fn g2() -> Surface {
        Surface::new(2).unwrap()
    }

    fn swap_a1() -> CoverSpec {
        CoverSpec::new(g2(), vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![0, 1]]).unwrap()
    }

    #[test]
    fn weight_validation() {
        let t = three_branch_track(g2());
        assert!(t.validate_weights(&WeightVector::zero(3)).is_ok());
        assert!(t.validate_weights(&WeightVector::from_integers(&[2, 1, 1])).is_ok());
        assert!(matches!(
            t.validate_weights(&WeightVector::from_integers(&[1, 1, 1])),
            Err(Error::SwitchViolation { .. })
        ));
        assert!(matches!(
            t.validate_weights(&WeightVector::from_integers(&[0, 1, -1])),
            Err(Error::NegativeWeight { .. })
        ));
        let half = Rational::new(1, 2);
        assert!(t.validate_weights(&WeightVector(vec![Rational::from_integer(1), half, half])).is_ok());
    }

    #[test]
    fn chart_dimensions() {
        let t = three_branch_track(g2());
        assert_eq!(t.chart_dimension(), 2);
        let hb = |branch, end| HalfBranch { branch, end };
        let loops = TrainTrack::new(
            g2(),
            vec![],
            vec![GroupWord::generator(0), GroupWord::generator(1), GroupWord::generator(2)],
        );
        assert!(loops.is_err(), "branch ends must sit in slots");
        let loops = TrainTrack::new(
            g2(),
            (0..3).map(|b| Switch { sheet: 0, side_a: vec![hb(b, 1)], side_b: vec![hb(b, 0)] }).collect(),
            vec![GroupWord::generator(0), GroupWord::generator(1), GroupWord::generator(2)],
        )
        .unwrap();
        // each loop's switch row cancels, so the conditions are vacuous
        assert_eq!(loops.chart_dimension(), 3);
        let (lifted, _) = lift_track(&t, &swap_a1()).unwrap();
        // four lifted switch rows with one relation among them
        assert_eq!(lifted.chart_dimension(), 3);
    }

    #[test]
    fn lift_examples() {
        let t = three_branch_track(g2());
        let (same, l) = lift_track(&t, &CoverSpec::trivial(g2())).unwrap();
        assert_eq!(same.num_branches(), 3);
        assert_eq!(l.matrix(), CarryingMatrix::identity(&t).matrix());

        let (lifted, l) = lift_track(&t, &swap_a1()).unwrap();
        lifted.check_on(&swap_a1()).unwrap();
        assert_eq!(lifted.num_branches(), 6);
        assert_eq!(lifted.num_switches(), 4);
        for j in 0..3 {
            assert_eq!(l.matrix().iter().map(|r| r[j]).sum::<i64>(), 2);
        }
        assert!(l.matrix().iter().flatten().all(|&x| x == 0 || x == 1));
        let w = WeightVector::from_integers(&[3, 1, 2]);
        lifted.validate_weights(&l.apply(&w).unwrap()).unwrap();
    }

    #[test]
    fn extreme_rays_of_three_branch_track() {
        let t = three_branch_track(g2());
        let mut rays = t.extreme_rays(RAY_BUDGET).unwrap();
        rays.sort();
        assert_eq!(rays, vec![vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn carrying_validation_and_composition() {
        let t = three_branch_track(g2());
        let id = CarryingMatrix::identity(&t);
        let m = CarryingMatrix::new(t.clone(), t.clone(), vec![vec![2, 1, 1], vec![1, 1, 0], vec![1, 0, 1]]).unwrap();
        assert_eq!(carrying_compose(&id, &m).unwrap(), m);
        assert_eq!(carrying_compose(&m, &id).unwrap(), m);
        let bad = CarryingMatrix::new(t.clone(), t.clone(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]);
        assert!(matches!(bad, Err(Error::ConeViolation)));
        let neg = CarryingMatrix::new(t.clone(), t.clone(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, -1]]);
        assert!(matches!(neg, Err(Error::ConeViolation)));
        let (lifted, l) = lift_track(&t, &swap_a1()).unwrap();
        let wrong = carrying_compose(&l, &m);
        assert!(matches!(wrong, Err(Error::DimensionMismatch { .. })));
        let sq = carrying_compose(&m, &m).unwrap();
        assert!(sq.matrix().iter().flatten().all(|&x| x >= 0));
        let _ = lifted;
    }

    #[test]
    fn homology_of_weighted_track() {
        let s = g2();
        let t = three_branch_track(s);
        assert!(track_homology_class(&t, &WeightVector::zero(3)).unwrap().is_zero());
        let hb = |branch, end| HalfBranch { branch, end };
        let single = TrainTrack::new(
            s,
            vec![Switch { sheet: 0, side_a: vec![hb(0, 1)], side_b: vec![hb(0, 0)] }],
            vec![GroupWord::generator(0)],
        )
        .unwrap();
        let cls = track_homology_class(&single, &WeightVector::from_integers(&[3])).unwrap();
        assert_eq!(cls.coords, vec![3, 0, 0, 0]);
        let half = WeightVector(vec![Rational::new(1, 2)]);
        assert!(matches!(track_homology_class(&single, &half), Err(Error::NonIntegerWeights)));

        // transfer of the base class equals the chain of the lifted weights
        let c = swap_a1();
        let w = WeightVector::from_integers(&[3, 1, 2]);
        let (lifted, l) = lift_track(&t, &c).unwrap();
        let lifted_chain = lifted.cover_cycle(&c, &l.apply(&w).unwrap()).unwrap();
        let k = CoverComplex::new(&c).unwrap();
        let transferred = k.transfer(&track_homology_class(&t, &w).unwrap()).unwrap();
        assert_eq!(lifted_chain, transferred);
    }
}

//! The directed system of pointed covers and its direct-limit elements.
//!
//! A limit element is a pair (cover, payload) where the payload is either a
//! 1-cycle on the cover or a weighted train track on it. Two pairs are equal
//! in the limit when their lifts to the fiber product of the two covers agree.

pub mod automorphism;
pub mod characteristic;
pub mod orbit;
pub mod vaut;

pub use automorphism::{genus2_automorphisms, Automorphism};
pub use characteristic::{certify_characteristic, characteristic_refinement, is_characteristic};
pub use orbit::{orbit_density_experiment, OrbitReport};
pub use vaut::{is_mapping_class_like, pairing_preserved, vaut_act, vaut_compose, vaut_inverse, TwoArrowVaut};

use crate::covers::{factors_through, fiber_product, CoverArrow, CoverSpec};
use crate::error::{Error, Result};
use crate::homology::{self, CoverComplex, CoverCycle};
use crate::surface::HomologyClass;
use crate::traintrack::{lift_track_along, TrainTrack, WeightVector};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Homology,
    Track,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Homology(CoverCycle),
    Track { track: TrainTrack, weights: WeightVector },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitElement {
    pub cover: CoverSpec,
    pub payload: Payload,
}

impl LimitElement {
    pub fn homology(cycle: CoverCycle) -> Result<Self> {
        CoverComplex::new(&cycle.cover)?.check_cycle(&cycle)?;
        Ok(LimitElement { cover: cycle.cover.clone(), payload: Payload::Homology(cycle) })
    }

    /// A base class placed at the bottom of the tower.
    pub fn base_class(cover_base: &CoverSpec, u: &HomologyClass) -> Result<Self> {
        let k = CoverComplex::new(cover_base)?;
        Self::homology(k.transfer(u)?)
    }

    pub fn track(cover: CoverSpec, track: TrainTrack, weights: WeightVector) -> Result<Self> {
        track.check_on(&cover)?;
        track.validate_weights(&weights)?;
        Ok(LimitElement { cover, payload: Payload::Track { track, weights } })
    }

    pub fn kind(&self) -> Kind {
        match self.payload {
            Payload::Homology(_) => Kind::Homology,
            Payload::Track { .. } => Kind::Track,
        }
    }

    pub fn cycle(&self) -> Option<&CoverCycle> {
        match &self.payload {
            Payload::Homology(z) => Some(z),
            Payload::Track { .. } => None,
        }
    }

    /// The representative over a finer cover.
    pub fn lift(&self, arrow: &CoverArrow) -> Result<LimitElement> {
        if arrow.to != self.cover {
            return Err(Error::IncompatibleTower);
        }
        let payload = match &self.payload {
            Payload::Homology(z) => Payload::Homology(CoverComplex::new(&self.cover)?.lift_along(z, arrow)?),
            Payload::Track { track, weights } => {
                let (lifted, l) = lift_track_along(track, arrow)?;
                Payload::Track { track: lifted, weights: l.apply(weights)? }
            }
        };
        Ok(LimitElement { cover: arrow.from.clone(), payload })
    }

    pub fn lift_to(&self, finer: &CoverSpec) -> Result<LimitElement> {
        let arrow = factors_through(finer, &self.cover).ok_or(Error::IncompatibleTower)?;
        self.lift(&arrow)
    }

    /// Weighted 1-chain of the payload on its cover.
    pub fn chain(&self) -> Result<CoverCycle> {
        match &self.payload {
            Payload::Homology(z) => Ok(z.clone()),
            Payload::Track { track, weights } => track.cover_cycle(&self.cover, weights),
        }
    }

    /// Data of a track payload that survives sliding switches along paths:
    /// sorted nonzero branch weights and sorted per-switch side weights.
    fn track_signature(&self) -> (Vec<Rational>, Vec<(Vec<Rational>, Vec<Rational>)>) {
        let Payload::Track { track, weights } = &self.payload else { return Default::default() };
        let zero = Rational::from_integer(0);
        let mut branches: Vec<Rational> = weights.0.iter().copied().filter(|w| *w != zero).collect();
        branches.sort();
        let side = |hs: &[crate::traintrack::HalfBranch]| {
            let mut v: Vec<Rational> = hs.iter().map(|h| weights.0[h.branch]).filter(|w| *w != zero).collect();
            v.sort();
            v
        };
        let mut switches: Vec<_> = track
            .switches()
            .iter()
            .map(|sw| {
                let (a, b) = (side(&sw.side_a), side(&sw.side_b));
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .filter(|(a, b)| !a.is_empty() || !b.is_empty())
            .collect();
        switches.sort();
        (branches, switches)
    }
}

/// Equality in the direct limit.
pub fn limit_equal(e1: &LimitElement, e2: &LimitElement) -> Result<bool> {
    if e1.kind() != e2.kind() {
        return Err(Error::KindMismatch);
    }
    if e1.cover.base() != e2.cover.base() {
        return Err(Error::IncompatibleTower);
    }
    let common = fiber_product(&e1.cover, &e2.cover)?;
    let (l1, l2) = (e1.lift_to(&common)?, e2.lift_to(&common)?);
    match (&l1.payload, &l2.payload) {
        (Payload::Homology(a), Payload::Homology(b)) => CoverComplex::new(&common)?.homologous(a, b),
        _ => tracks_match(&l1, &l2),
    }
}

/// Track payloads on a common cover agree when their weight signatures
/// match and their carried chains are homologous (or both fail to close up
/// with equal boundaries). Switch positions are only defined up to sliding
/// along paths, which these invariants ignore.
fn tracks_match(l1: &LimitElement, l2: &LimitElement) -> Result<bool> {
    if l1.track_signature() != l2.track_signature() {
        return Ok(false);
    }
    let k = CoverComplex::new(&l1.cover)?;
    let (c1, c2) = (l1.chain()?, l2.chain()?);
    match (k.check_cycle(&c1).is_ok(), k.check_cycle(&c2).is_ok()) {
        (true, true) => k.homologous(&c1, &c2),
        (false, false) => Ok(k.boundary(&c1.coeffs) == k.boundary(&c2.coeffs)),
        _ => Ok(false),
    }
}

/// Intersection number of the two payloads on a common cover, divided by
/// that cover's genus minus one. Track payloads pair through their chains.
pub fn normalized_pairing(e1: &LimitElement, e2: &LimitElement) -> Result<Rational> {
    homology::normalized_pairing((&e1.cover, &e1.chain()?), (&e2.cover, &e2.chain()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::{enumerate_covers, DEFAULT_BUDGET};
    use crate::surface::Surface;
    use crate::traintrack::three_branch_track;

    fn g2() -> Surface {
        Surface::new(2).unwrap()
    }

    #[test]
    fn limit_equal_examples() {
        let s = g2();
        let base = CoverSpec::trivial(s);
        let a1 = LimitElement::base_class(&base, &s.basis_class(0)).unwrap();
        let b1 = LimitElement::base_class(&base, &s.basis_class(1)).unwrap();
        assert!(limit_equal(&a1, &a1).unwrap());
        assert!(!limit_equal(&a1, &b1).unwrap());
        for c in enumerate_covers(s, 2, DEFAULT_BUDGET).unwrap() {
            let lifted = LimitElement::base_class(&c, &s.basis_class(0)).unwrap();
            assert!(limit_equal(&a1, &lifted).unwrap());
            assert!(limit_equal(&lifted, &a1.lift_to(&c).unwrap()).unwrap());
        }
    }

    #[test]
    fn kinds_must_match() {
        let s = g2();
        let base = CoverSpec::trivial(s);
        let a1 = LimitElement::base_class(&base, &s.basis_class(0)).unwrap();
        let t = LimitElement::track(base, three_branch_track(s), WeightVector::from_integers(&[2, 1, 1])).unwrap();
        assert!(matches!(limit_equal(&a1, &t), Err(Error::KindMismatch)));
        assert!(limit_equal(&t, &t).unwrap());
    }

    #[test]
    fn track_elements_compare_after_lifting() {
        let s = g2();
        let base = CoverSpec::trivial(s);
        let t =
            LimitElement::track(base.clone(), three_branch_track(s), WeightVector::from_integers(&[2, 1, 1])).unwrap();
        let u = LimitElement::track(base, three_branch_track(s), WeightVector::from_integers(&[2, 2, 0])).unwrap();
        let covers = enumerate_covers(s, 2, DEFAULT_BUDGET).unwrap();
        let lifted = t.lift_to(&covers[3]).unwrap();
        assert!(limit_equal(&t, &lifted).unwrap());
        assert!(!limit_equal(&u, &lifted).unwrap());
        // a track pairs through its chain: 2 a1 + a1 = 3 a1 against b1
        let b1 = LimitElement::base_class(&CoverSpec::trivial(s), &s.basis_class(1)).unwrap();
        assert_eq!(normalized_pairing(&t, &b1).unwrap(), Rational::from_integer(3));
    }
}

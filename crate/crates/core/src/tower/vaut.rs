//! Virtual automorphisms as two-arrow diagrams `X <- Z -> X`.
//!
//! The left and right covers have stabilizers `H_L` and `H_R`; the
//! identification of the two copies of `Z` is an isomorphism `H_L -> H_R`
//! recorded on Schreier generators: `forward[gen * d + s]` is the image of the
//! Schreier generator of left edge `(gen, s)` (a word lying in `H_R`) and
//! `backward` does the same for right edges, giving the inverse.

use crate::covers::{compose_with, factors_through, fiber_product, CoverSpec};
use crate::error::{Error, Result};
use crate::homology::{add_trace, CoverCycle};
use crate::surface::{GroupWord, Surface};
use crate::traintrack::{Switch, TrainTrack};

use super::{automorphism::Automorphism, normalized_pairing, LimitElement, Payload};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoArrowVaut {
    pub left: CoverSpec,
    pub right: CoverSpec,
    pub forward: Vec<GroupWord>,
    pub backward: Vec<GroupWord>,
}

impl TwoArrowVaut {
    pub fn new(left: CoverSpec, right: CoverSpec, forward: Vec<GroupWord>, backward: Vec<GroupWord>) -> Result<Self> {
        let v = TwoArrowVaut { left, right, forward, backward };
        v.check()?;
        Ok(v)
    }

    pub fn identity(base: Surface) -> Self {
        let gens: Vec<GroupWord> = (0..base.num_generators()).map(GroupWord::generator).collect();
        TwoArrowVaut {
            left: CoverSpec::trivial(base),
            right: CoverSpec::trivial(base),
            forward: gens.clone(),
            backward: gens,
        }
    }

    /// The restriction of an automorphism `phi` to the stabilizer of `left`,
    /// landing on `phi(H_L)`.
    pub fn from_automorphism(phi: &Automorphism, left: &CoverSpec) -> Result<Self> {
        let base = left.base();
        phi.check(&base)?;
        let left = left.canonical();
        // g acts on G / phi(H_L) as phi^-1(g) acts on G / H_L
        let perms = (0..base.num_generators())
            .map(|g| {
                let w = phi.apply_inverse(&GroupWord::generator(g));
                (0..left.degree()).map(|s| left.trace(s, &w)).collect()
            })
            .collect();
        let right = CoverSpec::new(base, perms)?.canonical();
        let forward = left.schreier_generators().iter().map(|t| phi.apply(t)).collect();
        let backward = right.schreier_generators().iter().map(|t| phi.apply_inverse(t)).collect();
        TwoArrowVaut::new(left, right, forward, backward)
    }

    pub fn base(&self) -> Surface {
        self.left.base()
    }

    /// Genus of the common total surface.
    pub fn total_genus(&self) -> usize {
        self.left.cover_genus()
    }

    /// Structural checks: matching bases and total genus, and every edge
    /// image lying in the subgroup on the other side.
    pub fn check(&self) -> Result<()> {
        if self.left.base() != self.right.base() {
            return Err(Error::BaseMismatch);
        }
        if self.left.cover_genus() != self.right.cover_genus() {
            return Err(Error::GenusMismatch { expected: self.left.cover_genus(), found: self.right.cover_genus() });
        }
        self.left.validate()?;
        self.right.validate()?;
        if !self.left.is_canonical() || !self.right.is_canonical() {
            return Err(Error::InvalidIdentification("arrows must be in canonical form".into()));
        }
        let n = self.base().num_generators() * self.left.degree();
        if self.forward.len() != n || self.backward.len() != n {
            return Err(Error::InvalidIdentification(format!("expected {n} edge images on each side")));
        }
        for (images, target) in [(&self.forward, &self.right), (&self.backward, &self.left)] {
            for w in images {
                self.base().check_word(w).map_err(|e| Error::InvalidIdentification(e.to_string()))?;
                if target.trace(0, w) != 0 {
                    return Err(Error::InvalidIdentification(format!("edge image {w} leaves the target subgroup")));
                }
            }
        }
        Ok(())
    }

    /// Finite-quotient test that `backward` inverts `forward`: in every probe
    /// cover, each Schreier generator and its round trip act alike.
    pub fn check_inverse_in(&self, probes: &[CoverSpec]) -> Result<()> {
        for (gens, there, back) in [
            (self.left.schreier_generators(), (&self.left, &self.forward), (&self.right, &self.backward)),
            (self.right.schreier_generators(), (&self.right, &self.backward), (&self.left, &self.forward)),
        ] {
            for t in &gens {
                let round = rewrite(&rewrite(t, there.0, there.1)?, back.0, back.1)?;
                for p in probes {
                    if (0..p.degree()).any(|s| p.trace(s, t) != p.trace(s, &round)) {
                        return Err(Error::InvalidIdentification("edge maps are not mutually inverse".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// The isomorphism on a word lying in `H_L`.
    pub fn apply_forward(&self, w: &GroupWord) -> Result<GroupWord> {
        rewrite(w, &self.left, &self.forward)
    }

    pub fn apply_backward(&self, w: &GroupWord) -> Result<GroupWord> {
        rewrite(w, &self.right, &self.backward)
    }

    /// The cover with stabilizer `alpha(Stab(c) ∩ H_L)`, together with the
    /// fiber product `W = c x left` it is homeomorphic to.
    fn act_on_cover(&self, c: &CoverSpec) -> Result<(CoverSpec, CoverSpec)> {
        if c.base() != self.base() {
            return Err(Error::BaseMismatch);
        }
        let w = fiber_product(c, &self.left)?;
        let to_left = factors_through(&w, &self.left).expect("fiber product factors through its factors");
        let fiber0 = to_left.fiber(0);
        let mut index = vec![usize::MAX; w.degree()];
        for (i, &p) in fiber0.iter().enumerate() {
            index[p] = i;
        }
        let d = self.right.degree();
        let t = compose_with(
            &self.right,
            fiber0.len(),
            |gen, r| self.backward[gen * d + r].clone(),
            |f, word| index[w.trace(fiber0[f], word)],
        )?;
        Ok((t, w))
    }

    /// The equivalent diagram whose left arrow is the finer cover `finer`.
    pub fn restrict(&self, finer: &CoverSpec) -> Result<TwoArrowVaut> {
        let finer = finer.canonical();
        if factors_through(&finer, &self.left).is_none() {
            return Err(Error::IncompatibleTower);
        }
        let (right, _) = self.act_on_cover(&finer)?;
        let forward = finer.schreier_generators().iter().map(|t| self.apply_forward(t)).collect::<Result<_>>()?;
        let backward = right.schreier_generators().iter().map(|t| self.apply_backward(t)).collect::<Result<_>>()?;
        TwoArrowVaut::new(finer, right, forward, backward)
    }
}

/// Rewrite a word lying in the stabilizer of `cover` through its Schreier
/// generators and substitute their images.
fn rewrite(w: &GroupWord, cover: &CoverSpec, images: &[GroupWord]) -> Result<GroupWord> {
    let d = cover.degree();
    let mut cur = 0;
    let mut out = GroupWord::empty();
    for &l in w.letters() {
        if l.inv {
            cur = cover.act(cur, l);
            out = out.mul(&images[l.gen * d + cur].inverse());
        } else {
            out = out.mul(&images[l.gen * d + cur]);
            cur = cover.act(cur, l);
        }
    }
    if cur != 0 {
        return Err(Error::InvalidInput(format!("word {w} is not in the subgroup of the cover")));
    }
    Ok(out)
}

/// Act on a limit element: lift it to `W = e.cover x left`, regard `W` as a
/// cover of the total surface, and push it down along the right arrow.
pub fn vaut_act(v: &TwoArrowVaut, e: &LimitElement) -> Result<LimitElement> {
    let (t, w) = v.act_on_cover(&e.cover)?;
    let lifted = e.lift_to(&w)?;
    let loop_words = w.tree_words();
    let into_t = |word: &GroupWord| -> Result<GroupWord> { v.apply_forward(word) };
    let payload = match &lifted.payload {
        Payload::Homology(z) => {
            // z is the sum over non-tree edges of its coefficient times the
            // fundamental loop of that edge
            let mut out = CoverCycle::zero(&t);
            for (gen, s, c) in z.entries() {
                let target = w.perms()[gen][s];
                let lp = loop_words[s].mul(&GroupWord::generator(gen)).mul(&loop_words[target].inverse());
                if lp.is_empty() {
                    continue;
                }
                let image = into_t(&lp)?;
                let end = add_trace(&t, &mut out.coeffs, 0, &image, c);
                debug_assert_eq!(end, 0);
            }
            Payload::Homology(out)
        }
        Payload::Track { track, weights } => {
            let mut words = Vec::with_capacity(track.num_branches());
            for b in 0..track.num_branches() {
                let (s, e2) = track.endpoints(b);
                let (ws, we) = (track.switches()[s].sheet, track.switches()[e2].sheet);
                let lp = loop_words[ws].mul(&track.words()[b]).mul(&loop_words[we].inverse());
                words.push(into_t(&lp)?);
            }
            let switches = track
                .switches()
                .iter()
                .map(|sw| Switch { sheet: 0, side_a: sw.side_a.clone(), side_b: sw.side_b.clone() })
                .collect();
            let moved = TrainTrack::new(track.base(), switches, words)?;
            Payload::Track { track: moved, weights: weights.clone() }
        }
    };
    Ok(LimitElement { cover: t, payload })
}

pub fn vaut_inverse(v: &TwoArrowVaut) -> TwoArrowVaut {
    TwoArrowVaut {
        left: v.right.clone(),
        right: v.left.clone(),
        forward: v.backward.clone(),
        backward: v.forward.clone(),
    }
}

/// The composite acting as `inner` first and then `outer`.
pub fn vaut_compose(outer: &TwoArrowVaut, inner: &TwoArrowVaut) -> Result<TwoArrowVaut> {
    if outer.base() != inner.base() {
        return Err(Error::BaseMismatch);
    }
    let middle = fiber_product(&inner.right, &outer.left)?;
    let (left, _) = vaut_inverse(inner).act_on_cover(&middle)?;
    let (right, _) = outer.act_on_cover(&middle)?;
    let forward = left
        .schreier_generators()
        .iter()
        .map(|t| outer.apply_forward(&inner.apply_forward(t)?))
        .collect::<Result<_>>()?;
    let backward = right
        .schreier_generators()
        .iter()
        .map(|t| inner.apply_backward(&outer.apply_backward(t)?))
        .collect::<Result<_>>()?;
    TwoArrowVaut::new(left, right, forward, backward)
}

/// Representative-level test: both arrows are the same pointed cover.
pub fn is_mapping_class_like(v: &TwoArrowVaut) -> bool {
    v.left.pointed_equal(&v.right)
}

/// Whether the normalized pairing of two homology elements survives the action.
pub fn pairing_preserved(v: &TwoArrowVaut, e1: &LimitElement, e2: &LimitElement) -> Result<bool> {
    let before = normalized_pairing(e1, e2)?;
    let after = normalized_pairing(&vaut_act(v, e1)?, &vaut_act(v, e2)?)?;
    Ok(before == after)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::{enumerate_covers, DEFAULT_BUDGET};
    use crate::tower::{genus2_automorphisms, limit_equal};
    use crate::Rational;

    fn g2() -> Surface {
        Surface::new(2).unwrap()
    }

    fn aut(name: &str) -> Automorphism {
        genus2_automorphisms().into_iter().find(|a| a.name == name).unwrap()
    }

    fn swap_on(gen: usize) -> CoverSpec {
        let mut perms = vec![vec![0, 1]; 4];
        perms[gen] = vec![1, 0];
        CoverSpec::new(g2(), perms).unwrap().canonical()
    }

    #[test]
    fn identity_acts_trivially() {
        let s = g2();
        let id = TwoArrowVaut::identity(s);
        id.check().unwrap();
        assert!(is_mapping_class_like(&id));
        for c in enumerate_covers(s, 2, DEFAULT_BUDGET).unwrap() {
            let e = LimitElement::base_class(&c, &s.basis_class(1)).unwrap();
            assert!(limit_equal(&vaut_act(&id, &e).unwrap(), &e).unwrap());
        }
    }

    #[test]
    fn automorphism_at_base_matches_abelianization() {
        let s = g2();
        let base = CoverSpec::trivial(s);
        for phi in genus2_automorphisms() {
            let v = TwoArrowVaut::from_automorphism(&phi, &base).unwrap();
            assert!(is_mapping_class_like(&v));
            for g in 0..4 {
                let e = LimitElement::base_class(&base, &s.basis_class(g)).unwrap();
                let moved = vaut_act(&v, &e).unwrap();
                let expected =
                    LimitElement::base_class(&base, &phi.act_on_class(&s, &s.basis_class(g)).unwrap()).unwrap();
                assert!(limit_equal(&moved, &expected).unwrap(), "{} on generator {g}", phi.name);
            }
        }
    }

    #[test]
    fn handle_swap_moves_double_covers() {
        let v = TwoArrowVaut::from_automorphism(&aut("handle_swap"), &swap_on(0)).unwrap();
        assert!(v.right.pointed_equal(&swap_on(2)));
        assert!(!is_mapping_class_like(&v));
        assert_eq!(v.total_genus(), 3);
        let probes = enumerate_covers(g2(), 2, DEFAULT_BUDGET).unwrap();
        v.check_inverse_in(&probes).unwrap();
    }

    #[test]
    fn inverse_law_and_pairing() {
        let s = g2();
        let v = TwoArrowVaut::from_automorphism(&aut("twist_a1a2"), &swap_on(1)).unwrap();
        let base = CoverSpec::trivial(s);
        let a1 = LimitElement::base_class(&base, &s.basis_class(0)).unwrap();
        let b1 = LimitElement::base_class(&base, &s.basis_class(1)).unwrap();
        let back = vaut_act(&v, &vaut_act(&vaut_inverse(&v), &a1).unwrap()).unwrap();
        assert!(limit_equal(&back, &a1).unwrap());
        assert!(pairing_preserved(&v, &a1, &b1).unwrap());
        let moved = (vaut_act(&v, &a1).unwrap(), vaut_act(&v, &b1).unwrap());
        assert_eq!(normalized_pairing(&moved.0, &moved.1).unwrap(), Rational::from_integer(1));
    }

    #[test]
    fn reflection_negates_pairing() {
        let s = g2();
        let v = TwoArrowVaut::from_automorphism(&aut("reflection"), &swap_on(0)).unwrap();
        let base = CoverSpec::trivial(s);
        let a1 = LimitElement::base_class(&base, &s.basis_class(0)).unwrap();
        let b1 = LimitElement::base_class(&base, &s.basis_class(1)).unwrap();
        let p = normalized_pairing(&vaut_act(&v, &a1).unwrap(), &vaut_act(&v, &b1).unwrap()).unwrap();
        assert_eq!(p, Rational::from_integer(-1));
    }

    #[test]
    fn compose_with_identity() {
        let s = g2();
        let v = TwoArrowVaut::from_automorphism(&aut("twist_b1"), &swap_on(0)).unwrap();
        let id = TwoArrowVaut::identity(s);
        let base = CoverSpec::trivial(s);
        for g in 0..4 {
            let e = LimitElement::base_class(&base, &s.basis_class(g)).unwrap();
            let direct = vaut_act(&v, &e).unwrap();
            assert!(limit_equal(&vaut_act(&vaut_compose(&v, &id).unwrap(), &e).unwrap(), &direct).unwrap());
            assert!(limit_equal(&vaut_act(&vaut_compose(&id, &v).unwrap(), &e).unwrap(), &direct).unwrap());
            let vv = vaut_inverse(&vaut_inverse(&v));
            assert_eq!(vv, v);
        }
    }

    #[test]
    fn restriction_is_the_same_vaut() {
        let s = g2();
        let v = TwoArrowVaut::from_automorphism(&aut("twist_a1a2"), &CoverSpec::trivial(s)).unwrap();
        let r = v.restrict(&swap_on(3)).unwrap();
        assert_eq!(r.left.degree(), 2);
        let base = CoverSpec::trivial(s);
        for g in 0..4 {
            let e = LimitElement::base_class(&base, &s.basis_class(g)).unwrap();
            assert!(limit_equal(&vaut_act(&v, &e).unwrap(), &vaut_act(&r, &e).unwrap()).unwrap());
        }
    }

    #[test]
    fn bad_identification_is_rejected() {
        let v = TwoArrowVaut::from_automorphism(&aut("handle_swap"), &swap_on(0)).unwrap();
        let mut forward = v.forward.clone();
        forward[0] = GroupWord::generator(2);
        let err = TwoArrowVaut::new(v.left.clone(), v.right.clone(), forward, v.backward.clone());
        assert!(matches!(err, Err(Error::InvalidIdentification(_))));
    }
}

use crate::covers::{enumerate_covers, factors_through, pointed_component, CoverSpec, DEFAULT_BUDGET};
use crate::error::Result;
use crate::surface::{GroupWord, Letter};

use super::automorphism::Automorphism;
use super::vaut::TwoArrowVaut;

/// Default cap on the number of sheets of a refinement.
pub const REFINEMENT_BUDGET: usize = 200_000;

/// Whether the stabilizer of the marked sheet is normal and invariant under
/// every supplied automorphism. Only as strong as the supplied generating set.
pub fn is_characteristic(c: &CoverSpec, auts: &[Automorphism]) -> Result<bool> {
    for phi in auts {
        phi.check_on(c)?;
    }
    let gens = c.schreier_generators();
    // normal iff the stabilizer fixes every sheet
    if gens.iter().any(|h| (0..c.degree()).any(|s| c.trace(s, h) != s)) {
        return Ok(false);
    }
    Ok(auts.iter().all(|phi| gens.iter().all(|h| c.trace(0, &phi.apply(h)) == 0)))
}

/// The intersection of all subgroups of index at most `degree(c)`: the
/// pointed component of the diagonal action on every coset space of that
/// size. Fails once the component outgrows `budget` sheets.
pub fn characteristic_refinement(c: &CoverSpec, budget: usize) -> Result<CoverSpec> {
    c.validate()?;
    let base = c.base();
    let mut family = Vec::new();
    for d in 2..=c.degree() {
        family.extend(enumerate_covers(base, d, DEFAULT_BUDGET)?);
    }
    if family.is_empty() {
        return Ok(CoverSpec::trivial(base));
    }
    let start = vec![0usize; family.len()];
    let (result, _) = pointed_component(base, start, budget, |state: &Vec<usize>, l: Letter| {
        state.iter().zip(&family).map(|(&s, f)| f.act(s, l)).collect()
    })?;
    debug_assert!(factors_through(&result, c).is_some());
    Ok(result)
}

/// Depth-one semi-decision for membership in the characteristic subgroup of
/// virtual automorphisms: restrict to the refinement of the left arrow and
/// check that the right arrow of that representative is characteristic too.
/// Returns the certifying representative, or `None` if none was found.
pub fn certify_characteristic(v: &TwoArrowVaut, auts: &[Automorphism], budget: usize) -> Result<Option<TwoArrowVaut>> {
    let refined = characteristic_refinement(&v.left, budget)?;
    let r = v.restrict(&refined)?;
    if is_characteristic(&r.left, auts)? && is_characteristic(&r.right, auts)? {
        Ok(Some(r))
    } else {
        Ok(None)
    }
}

/// Whether `w` acts trivially on every sheet of `c`.
pub fn acts_trivially(c: &CoverSpec, w: &GroupWord) -> bool {
    (0..c.degree()).all(|s| c.trace(s, w) == s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::surface::Surface;
    use crate::tower::genus2_automorphisms;

    fn g2() -> Surface {
        Surface::new(2).unwrap()
    }

    fn swap_on(gen: usize) -> CoverSpec {
        let mut perms = vec![vec![0, 1]; 4];
        perms[gen] = vec![1, 0];
        CoverSpec::new(g2(), perms).unwrap()
    }

    #[test]
    fn trivial_cover_is_characteristic() {
        let t = CoverSpec::trivial(g2());
        assert!(is_characteristic(&t, &genus2_automorphisms()).unwrap());
        assert_eq!(characteristic_refinement(&t, REFINEMENT_BUDGET).unwrap(), t);
    }

    #[test]
    fn index_two_refines_to_mod_two_cover() {
        let auts = genus2_automorphisms();
        let single = swap_on(0);
        assert!(!is_characteristic(&single, &auts).unwrap());
        let k = characteristic_refinement(&single, REFINEMENT_BUDGET).unwrap();
        assert_eq!(k.degree(), 16);
        assert!(factors_through(&k, &single).is_some());
        assert!(is_characteristic(&k, &auts).unwrap());
        // every generator squared and every commutator dies mod 2
        assert!(acts_trivially(&k, &GroupWord::from_signed(&[1, 1]).unwrap()));
        assert!(acts_trivially(&k, &GroupWord::from_signed(&[1, 3, -1, -3]).unwrap()));
        assert!(!acts_trivially(&k, &GroupWord::from_signed(&[2]).unwrap()));
    }

    #[test]
    fn degree_three_exceeds_budget() {
        let c = enumerate_covers(g2(), 3, DEFAULT_BUDGET).unwrap().remove(0);
        assert!(matches!(characteristic_refinement(&c, 20_000), Err(Error::SearchBudgetExceeded { .. })));
    }

    #[test]
    fn invalid_automorphism_is_reported() {
        let w = |xs: &[i64]| GroupWord::from_signed(xs).unwrap();
        let bad = Automorphism {
            name: "bad".into(),
            images: vec![w(&[1, 1]), w(&[2]), w(&[3]), w(&[4])],
            inverse: vec![w(&[1]), w(&[2]), w(&[3]), w(&[4])],
        };
        let covers = enumerate_covers(g2(), 3, DEFAULT_BUDGET).unwrap();
        let c = covers.iter().find(|c| bad.check_on(c).is_err()).expect("some cover sees the broken relator");
        assert!(matches!(is_characteristic(c, &[bad]), Err(Error::InvalidAutomorphism(_))));
    }

    #[test]
    fn automorphism_vauts_over_characteristic_covers_certify() {
        let auts = genus2_automorphisms();
        for phi in &auts {
            let v = TwoArrowVaut::from_automorphism(phi, &swap_on(1)).unwrap();
            let r = certify_characteristic(&v, &auts, REFINEMENT_BUDGET).unwrap().expect("certified");
            assert_eq!(r.left.degree(), 16);
            assert!(r.left.pointed_equal(&r.right));
        }
    }
}

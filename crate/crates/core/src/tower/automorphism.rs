use serde::{Deserialize, Serialize};

use crate::covers::CoverSpec;
use crate::error::{Error, Result};
use crate::surface::{GroupWord, HomologyClass, Surface};

/// An automorphism of the surface group given by the images of the
/// standard generators, together with the images under its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Automorphism {
    pub name: String,
    pub images: Vec<GroupWord>,
    pub inverse: Vec<GroupWord>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AutomorphismList {
    pub schema: String,
    pub genus: usize,
    pub automorphisms: Vec<Automorphism>,
}

const GENUS2: &str = include_str!("../../data/genus2_automorphisms.json");

/// Twists about `a1, b1, a2, b2` and a curve in the class `a1 + a2`, the
/// handle swap, and an orientation-reversing involution.
pub fn genus2_automorphisms() -> Vec<Automorphism> {
    let list: AutomorphismList = serde_json::from_str(GENUS2).expect("shipped automorphism list parses");
    list.automorphisms
}

impl Automorphism {
    pub fn apply(&self, w: &GroupWord) -> GroupWord {
        w.substitute(&self.images)
    }

    pub fn apply_inverse(&self, w: &GroupWord) -> GroupWord {
        w.substitute(&self.inverse)
    }

    pub fn inverted(&self) -> Automorphism {
        Automorphism { name: format!("{}^-1", self.name), images: self.inverse.clone(), inverse: self.images.clone() }
    }

    /// Shape checks, plus the free-group certificate that the relator maps
    /// to a cyclic conjugate of itself or its inverse, and that the two
    /// substitutions are mutually inverse on generators.
    pub fn check(&self, surface: &Surface) -> Result<()> {
        let n = surface.num_generators();
        if self.images.len() != n || self.inverse.len() != n {
            return Err(Error::InvalidAutomorphism(format!("{}: expected {n} generator images", self.name)));
        }
        for w in self.images.iter().chain(&self.inverse) {
            surface.check_word(w).map_err(|e| Error::InvalidAutomorphism(e.to_string()))?;
        }
        let rel = surface.relator();
        for (label, imgs) in [("forward", &self.images), ("inverse", &self.inverse)] {
            let image = rel.substitute(imgs);
            if !is_cyclic_conjugate(&image, &rel) && !is_cyclic_conjugate(&image, &rel.inverse()) {
                return Err(Error::InvalidAutomorphism(format!(
                    "{} ({label}) does not preserve the relator",
                    self.name
                )));
            }
        }
        for g in 0..n {
            let x = GroupWord::generator(g);
            if self.apply(&self.apply_inverse(&x)) != x || self.apply_inverse(&self.apply(&x)) != x {
                return Err(Error::InvalidAutomorphism(format!("{}: images and inverse images disagree", self.name)));
            }
        }
        Ok(())
    }

    /// Whether the images define a permutation representation through `c`
    /// that kills the relator.
    pub fn check_on(&self, c: &CoverSpec) -> Result<()> {
        let rel = c.base().relator().substitute(&self.images);
        for s in 0..c.degree() {
            if c.trace(s, &rel) != s {
                return Err(Error::InvalidAutomorphism(format!(
                    "{}: image of the relator acts nontrivially on the cover",
                    self.name
                )));
            }
        }
        Ok(())
    }

    /// Columns are the abelianized images of the generators.
    pub fn abelianization_matrix(&self, surface: &Surface) -> Result<Vec<Vec<i64>>> {
        let cols: Vec<HomologyClass> = self.images.iter().map(|w| surface.abelianize(w)).collect::<Result<_>>()?;
        let n = surface.homology_rank();
        Ok((0..n).map(|i| (0..n).map(|j| cols[j].coords[i]).collect()).collect())
    }

    /// Whether the induced map on homology preserves the intersection form
    /// (rather than negating it).
    pub fn preserves_orientation(&self, surface: &Surface) -> Result<bool> {
        let a = surface.abelianize(&self.images[0])?;
        let b = surface.abelianize(&self.images[1])?;
        Ok(crate::surface::symplectic_product(&a.coords, &b.coords) == 1)
    }

    pub fn act_on_class(&self, surface: &Surface, u: &HomologyClass) -> Result<HomologyClass> {
        let m = self.abelianization_matrix(surface)?;
        Ok(HomologyClass::new(crate::linalg::mat_vec(&m, &u.coords)))
    }
}

fn cyclic_reduce(w: &GroupWord) -> Vec<crate::surface::Letter> {
    let mut ls = w.reduce().letters().to_vec();
    while ls.len() > 1 && ls[0] == ls[ls.len() - 1].inverse() {
        ls.pop();
        ls.remove(0);
    }
    ls
}

fn is_cyclic_conjugate(w: &GroupWord, r: &GroupWord) -> bool {
    let (a, b) = (cyclic_reduce(w), cyclic_reduce(r));
    if a.len() != b.len() {
        return false;
    }
    (0..b.len().max(1)).any(|k| a.iter().enumerate().all(|(i, l)| *l == b[(i + k) % b.len()]))
}

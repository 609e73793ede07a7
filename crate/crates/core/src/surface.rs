//! Closed oriented surfaces, words in the standard generators, and the
//! symplectic intersection form on first homology.
//!
//! Generators are ordered `a1, b1, a2, b2, ..., ag, bg`. Internally a generator
//! is a zero-based index `0..2g` (so `a_i = 2(i-1)` and `b_i = 2(i-1)+1`); on
//! the wire a letter is a signed one-based integer, negative for the inverse.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A closed oriented surface of genus at least two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Surface {
    genus: usize,
}

impl Surface {
    pub fn new(genus: usize) -> Result<Self> {
        if genus < 2 {
            return Err(Error::InvalidInput(format!("genus must be at least 2, got {genus}")));
        }
        Ok(Surface { genus })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64
    }

    /// Rank of `H1`, which is also the number of standard generators.
    pub fn homology_rank(&self) -> usize {
        2 * self.genus
    }

    pub fn num_generators(&self) -> usize {
        2 * self.genus
    }

    /// The standard relator `[a1,b1][a2,b2]...[ag,bg]` with `[a,b] = a b a^-1 b^-1`.
    pub fn relator(&self) -> GroupWord {
        let mut letters = Vec::with_capacity(4 * self.genus);
        for i in 0..self.genus {
            let (a, b) = (2 * i, 2 * i + 1);
            letters.push(Letter::new(a, false));
            letters.push(Letter::new(b, false));
            letters.push(Letter::new(a, true));
            letters.push(Letter::new(b, true));
        }
        GroupWord { letters }
    }

    /// Unit vector of generator `gen` in the basis `a1, b1, ..., ag, bg`.
    pub fn basis_class(&self, gen: usize) -> HomologyClass {
        let mut coords = vec![0; self.homology_rank()];
        coords[gen] = 1;
        HomologyClass { coords }
    }

    pub fn check_word(&self, w: &GroupWord) -> Result<()> {
        for l in &w.letters {
            if l.gen >= self.num_generators() {
                return Err(Error::InvalidInput(format!(
                    "generator index {} out of range for genus {}",
                    l.gen + 1,
                    self.genus
                )));
            }
        }
        Ok(())
    }

    pub fn abelianize(&self, w: &GroupWord) -> Result<HomologyClass> {
        self.check_word(w)?;
        let mut coords = vec![0; self.homology_rank()];
        for l in &w.letters {
            coords[l.gen] += l.sign();
        }
        Ok(HomologyClass { coords })
    }

    /// `sum_i u[a_i] v[b_i] - u[b_i] v[a_i]`.
    pub fn intersection_form(&self, u: &HomologyClass, v: &HomologyClass) -> Result<i64> {
        let n = self.homology_rank();
        if u.coords.len() != n || v.coords.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: if u.coords.len() != n { u.coords.len() } else { v.coords.len() },
            });
        }
        Ok(symplectic_product(&u.coords, &v.coords))
    }

    /// Gram matrix of the intersection form in the standard basis.
    pub fn gram_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.homology_rank();
        (0..n)
            .map(|i| {
                (0..n).map(|j| symplectic_product(&self.basis_class(i).coords, &self.basis_class(j).coords)).collect()
            })
            .collect()
    }
}

impl TryFrom<usize> for Surface {
    type Error = Error;
    fn try_from(genus: usize) -> Result<Self> {
        Surface::new(genus)
    }
}

impl From<Surface> for usize {
    fn from(s: Surface) -> usize {
        s.genus
    }
}

pub(crate) fn symplectic_product(u: &[i64], v: &[i64]) -> i64 {
    u.chunks(2).zip(v.chunks(2)).map(|(x, y)| x[0] * y[1] - x[1] * y[0]).sum()
}

/// One letter of a word: a generator, possibly inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn sign(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    /// Signed one-based encoding used in documents.
    pub fn to_signed(self) -> i64 {
        (self.gen as i64 + 1) * self.sign()
    }

    pub fn from_signed(x: i64) -> Result<Self> {
        if x == 0 {
            return Err(Error::InvalidInput("letter 0 is not a generator".into()));
        }
        Ok(Letter { gen: (x.unsigned_abs() - 1) as usize, inv: x < 0 })
    }

    /// Column index in a coset table with columns `x1, x1^-1, x2, x2^-1, ...`.
    pub(crate) fn column(self) -> usize {
        2 * self.gen + self.inv as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.gen.is_multiple_of(2) { 'a' } else { 'b' };
        write!(f, "{}{}", name, self.gen / 2 + 1)?;
        if self.inv {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in the free group on the standard generators. Only free reduction
/// is ever applied; relator equality is decided through covers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        GroupWord { letters }
    }

    pub fn generator(gen: usize) -> Self {
        GroupWord { letters: vec![Letter::new(gen, false)] }
    }

    pub fn from_signed(xs: &[i64]) -> Result<Self> {
        Ok(GroupWord { letters: xs.iter().map(|&x| Letter::from_signed(x)).collect::<Result<_>>()? })
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Concatenation followed by free reduction at the seam.
    pub fn mul(&self, other: &GroupWord) -> Self {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        GroupWord { letters }
    }

    pub fn reduce(&self) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            push_reduced(&mut letters, l);
        }
        GroupWord { letters }
    }

    /// Replace every generator by a word (an endomorphism of the free group).
    pub fn substitute(&self, images: &[GroupWord]) -> Self {
        let mut letters = Vec::new();
        for l in &self.letters {
            let img = &images[l.gen];
            if l.inv {
                for &m in img.letters.iter().rev() {
                    push_reduced(&mut letters, m.inverse());
                }
            } else {
                for &m in &img.letters {
                    push_reduced(&mut letters, m);
                }
            }
        }
        GroupWord { letters }
    }
}

fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    if letters.last() == Some(&l.inverse()) {
        letters.pop();
    } else {
        letters.push(l);
    }
}

/// Free reduction, checking generator indices against the surface.
pub fn reduce_word(surface: &Surface, w: &GroupWord) -> Result<GroupWord> {
    surface.check_word(w)?;
    Ok(w.reduce())
}

impl TryFrom<Vec<i64>> for GroupWord {
    type Error = Error;
    fn try_from(xs: Vec<i64>) -> Result<Self> {
        GroupWord::from_signed(&xs)
    }
}

impl From<GroupWord> for Vec<i64> {
    fn from(w: GroupWord) -> Vec<i64> {
        w.to_signed()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// An integral class in `H1` of the base surface, in the basis `a1, b1, ..., ag, bg`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyClass {
    pub coords: Vec<i64>,
}

impl HomologyClass {
    pub fn new(coords: Vec<i64>) -> Self {
        HomologyClass { coords }
    }

    pub fn zero(surface: &Surface) -> Self {
        HomologyClass { coords: vec![0; surface.homology_rank()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        HomologyClass { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn add(&self, other: &HomologyClass) -> Self {
        HomologyClass { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(xs: &[i64]) -> GroupWord {
        GroupWord::from_signed(xs).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let s = Surface::new(2).unwrap();
        assert!(reduce_word(&s, &w(&[1, -1])).unwrap().is_empty());
        assert_eq!(reduce_word(&s, &w(&[1, 2, -2, 3])).unwrap(), w(&[1, 3]));
        assert!(reduce_word(&s, &GroupWord::empty()).unwrap().is_empty());
        assert!(reduce_word(&s, &w(&[5])).is_err());
    }

    #[test]
    fn relator_shape() {
        let s2 = Surface::new(2).unwrap();
        assert_eq!(s2.relator().to_signed(), vec![1, 2, -1, -2, 3, 4, -3, -4]);
        assert!(s2.abelianize(&s2.relator()).unwrap().is_zero());
        assert_eq!(Surface::new(3).unwrap().relator().len(), 12);
        assert!(Surface::new(1).is_err());
    }

    #[test]
    fn form_examples() {
        let s = Surface::new(2).unwrap();
        let (a1, b1, a2) = (s.basis_class(0), s.basis_class(1), s.basis_class(2));
        assert_eq!(s.intersection_form(&a1, &b1).unwrap(), 1);
        assert_eq!(s.intersection_form(&b1, &a1).unwrap(), -1);
        assert_eq!(s.intersection_form(&a1, &a2).unwrap(), 0);
        assert!(s.intersection_form(&a1, &HomologyClass::new(vec![1, 0])).is_err());
    }

    #[test]
    fn gram_matrix_is_standard_symplectic() {
        let s = Surface::new(3).unwrap();
        let g = s.gram_matrix();
        for (i, row) in g.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let expected = if i % 2 == 0 && j == i + 1 {
                    1
                } else if i % 2 == 1 && j + 1 == i {
                    -1
                } else {
                    0
                };
                assert_eq!(x, expected);
            }
        }
        let det = crate::linalg::det_i64(&g);
        assert_eq!(det, 1);
    }

    fn arb_word(g: usize) -> impl Strategy<Value = GroupWord> {
        prop::collection::vec((0..2 * g, any::<bool>()), 0..24)
            .prop_map(|v| GroupWord::from_letters(v.into_iter().map(|(g, i)| Letter::new(g, i)).collect()))
    }

    proptest! {
        #[test]
        fn reduce_idempotent_and_cancels(w in arb_word(2)) {
            let r = w.reduce();
            prop_assert_eq!(r.reduce(), r.clone());
            prop_assert!(w.mul(&w.inverse()).is_empty());
            let s = Surface::new(2).unwrap();
            prop_assert_eq!(s.abelianize(&r).unwrap(), s.abelianize(&w).unwrap());
        }

        #[test]
        fn abelianize_is_additive(u in arb_word(2), v in arb_word(2)) {
            let s = Surface::new(2).unwrap();
            let lhs = s.abelianize(&u.mul(&v)).unwrap();
            prop_assert_eq!(lhs, s.abelianize(&u).unwrap().add(&s.abelianize(&v).unwrap()));
        }

        #[test]
        fn form_bilinear_skew(u in prop::collection::vec(-9i64..9, 4), v in prop::collection::vec(-9i64..9, 4),
                              x in prop::collection::vec(-9i64..9, 4), m in -5i64..5, n in -5i64..5) {
            let s = Surface::new(2).unwrap();
            let (u, v, x) = (HomologyClass::new(u), HomologyClass::new(v), HomologyClass::new(x));
            let lhs = s.intersection_form(&u.scale(m).add(&v.scale(n)), &x).unwrap();
            prop_assert_eq!(lhs, m * s.intersection_form(&u, &x).unwrap() + n * s.intersection_form(&v, &x).unwrap());
            prop_assert_eq!(s.intersection_form(&u, &v).unwrap(), -s.intersection_form(&v, &u).unwrap());
            prop_assert_eq!(s.intersection_form(&u, &u).unwrap(), 0);
        }
    }
}

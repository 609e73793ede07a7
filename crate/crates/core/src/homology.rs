//! The cell complex of a cover lifted from the one-vertex structure of the
//! base, its integral first homology, and the algebraic intersection number
//! of cellular 1-cycles.
//!
//! Edge `(gen, s)` runs from sheet `s` to `s.gen` and has index `gen * d + s`.
//! Face `s` is the lift of the relator starting at sheet `s`.

use std::sync::OnceLock;

use crate::covers::{CoverArrow, CoverSpec};
use crate::error::{Error, Result};
use crate::linalg::{self, SmithForm};
use crate::surface::{GroupWord, HomologyClass, Letter};
use crate::Rational;

/// A half-edge label at a vertex: the tail (`end = 0`) or head (`end = 1`)
/// of the edge of generator `gen`. Index `2 * gen + end`.
type HalfLabel = usize;

/// Orientation convention fixing `<a1, b1> = +1` on the base.
const ORIENTATION: i64 = 1;

/// An integral 1-chain on a cover complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverCycle {
    pub cover: CoverSpec,
    pub coeffs: Vec<i64>,
}

impl CoverCycle {
    pub fn zero(cover: &CoverSpec) -> Self {
        CoverCycle { cover: cover.clone(), coeffs: vec![0; cover.base().num_generators() * cover.degree()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &CoverCycle) -> Result<CoverCycle> {
        if self.cover != other.cover {
            return Err(Error::ComplexMismatch);
        }
        Ok(CoverCycle {
            cover: self.cover.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, k: i64) -> CoverCycle {
        CoverCycle { cover: self.cover.clone(), coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Nonzero entries as `(gen, sheet, coeff)`, zero-based.
    pub fn entries(&self) -> Vec<(usize, usize, i64)> {
        let d = self.cover.degree();
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(e, &c)| (e / d, e % d, c)).collect()
    }

    pub fn from_entries(cover: &CoverSpec, entries: &[(usize, usize, i64)]) -> Result<CoverCycle> {
        let d = cover.degree();
        let mut z = CoverCycle::zero(cover);
        for &(gen, sheet, c) in entries {
            if gen >= cover.base().num_generators() || sheet >= d {
                return Err(Error::InvalidInput(format!("edge ({}, {}) out of range", gen + 1, sheet + 1)));
            }
            z.coeffs[gen * d + sheet] += c;
        }
        Ok(z)
    }
}

pub struct CoverComplex {
    cover: CoverSpec,
    /// Counterclockwise successor of each half-edge label around a vertex.
    ccw_next: Vec<HalfLabel>,
    tree: SpanningTree,
    smith: OnceLock<SmithForm>,
}

struct SpanningTree {
    /// Chain of the tree path from sheet 0 to each sheet.
    path_chains: Vec<Vec<i64>>,
    non_tree: Vec<usize>,
}

impl CoverComplex {
    pub fn new(cover: &CoverSpec) -> Result<Self> {
        cover.validate()?;
        let ccw_next = base_rotation(cover);
        let tree = spanning_tree(cover);
        Ok(CoverComplex { cover: cover.clone(), ccw_next, tree, smith: OnceLock::new() })
    }

    pub fn cover(&self) -> &CoverSpec {
        &self.cover
    }

    fn d(&self) -> usize {
        self.cover.degree()
    }

    fn ngen(&self) -> usize {
        self.cover.base().num_generators()
    }

    pub fn num_vertices(&self) -> usize {
        self.d()
    }

    pub fn num_edges(&self) -> usize {
        self.ngen() * self.d()
    }

    pub fn num_faces(&self) -> usize {
        self.d()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_faces() as i64
    }

    /// Genus read off the Euler characteristic of the complex.
    pub fn genus_from_euler(&self) -> usize {
        ((2 - self.euler_characteristic()) / 2) as usize
    }

    pub fn edge_index(&self, gen: usize, sheet: usize) -> usize {
        gen * self.d() + sheet
    }

    /// Chain of the lifted path of `w` starting at `sheet`, and its end sheet.
    pub fn trace_chain(&self, sheet: usize, w: &GroupWord) -> (Vec<i64>, usize) {
        let mut chain = vec![0; self.num_edges()];
        let end = add_trace(&self.cover, &mut chain, sheet, w, 1);
        (chain, end)
    }

    /// Boundary of face `s` as an edge chain together with the number of
    /// edges traversed.
    pub fn face_boundary(&self, s: usize) -> (Vec<i64>, usize) {
        let rel = self.cover.base().relator();
        let (chain, end) = self.trace_chain(s, &rel);
        debug_assert_eq!(end, s);
        (chain, rel.len())
    }

    pub fn boundary(&self, chain: &[i64]) -> Vec<i64> {
        let d = self.d();
        let mut b = vec![0; d];
        for gen in 0..self.ngen() {
            for s in 0..d {
                let c = chain[gen * d + s];
                b[self.cover.perms()[gen][s]] += c;
                b[s] -= c;
            }
        }
        b
    }

    pub fn check_cycle(&self, z: &CoverCycle) -> Result<()> {
        if z.cover != self.cover {
            return Err(Error::ComplexMismatch);
        }
        if let Some(v) = self.boundary(&z.coeffs).iter().position(|&x| x != 0) {
            return Err(Error::NotACycle { vertex: v + 1 });
        }
        Ok(())
    }

    /// Cycle of the lifted loop of `w` from `sheet`; `w` must close up.
    pub fn loop_cycle(&self, sheet: usize, w: &GroupWord) -> Result<CoverCycle> {
        let (coeffs, end) = self.trace_chain(sheet, w);
        if end != sheet {
            return Err(Error::InvalidInput(format!("word {w} does not close at sheet {}", sheet + 1)));
        }
        Ok(CoverCycle { cover: self.cover.clone(), coeffs })
    }

    /// Sum of all `d` lifts of each base generator loop, weighted by `u`.
    pub fn transfer(&self, u: &HomologyClass) -> Result<CoverCycle> {
        if u.coords.len() != self.ngen() {
            return Err(Error::DimensionMismatch { expected: self.ngen(), found: u.coords.len() });
        }
        let d = self.d();
        let mut z = CoverCycle::zero(&self.cover);
        for (gen, &c) in u.coords.iter().enumerate() {
            for s in 0..d {
                z.coeffs[gen * d + s] = c;
            }
        }
        Ok(z)
    }

    /// Image in the base homology: edge `(gen, s)` maps to generator `gen`.
    pub fn pushforward(&self, z: &CoverCycle) -> Result<HomologyClass> {
        self.check_cycle(z)?;
        let d = self.d();
        Ok(HomologyClass::new((0..self.ngen()).map(|g| z.coeffs[g * d..(g + 1) * d].iter().sum()).collect()))
    }

    fn smith(&self) -> &SmithForm {
        self.smith.get_or_init(|| {
            let m = self.tree.non_tree.len();
            let d = self.d();
            let mut b = vec![vec![0i64; d]; m];
            for f in 0..d {
                let (chain, _) = self.face_boundary(f);
                for (i, &e) in self.tree.non_tree.iter().enumerate() {
                    b[i][f] = chain[e];
                }
            }
            linalg::smith_normal_form(&b, m, d)
        })
    }

    /// Torsion coefficients of `H1`; empty for every closed orientable surface.
    pub fn torsion(&self) -> Vec<i64> {
        self.smith().torsion()
    }

    pub fn betti_number(&self) -> usize {
        self.tree.non_tree.len() - self.smith().rank()
    }

    fn fundamental_cycle(&self, e: usize) -> Vec<i64> {
        let d = self.d();
        let (gen, s) = (e / d, e % d);
        let t = self.cover.perms()[gen][s];
        let mut chain: Vec<i64> =
            self.tree.path_chains[s].iter().zip(&self.tree.path_chains[t]).map(|(a, b)| a - b).collect();
        chain[e] += 1;
        chain
    }

    /// Integral basis of `H1` (length `2 * cover genus`).
    pub fn homology_basis(&self) -> Vec<CoverCycle> {
        let smith = self.smith();
        let m = self.tree.non_tree.len();
        (smith.rank()..m)
            .map(|j| {
                let mut coeffs = vec![0; self.num_edges()];
                for (i, &e) in self.tree.non_tree.iter().enumerate() {
                    let x = smith.left_inverse[i][j];
                    if x != 0 {
                        for (c, f) in coeffs.iter_mut().zip(self.fundamental_cycle(e)) {
                            *c += x * f;
                        }
                    }
                }
                CoverCycle { cover: self.cover.clone(), coeffs }
            })
            .collect()
    }

    /// Coordinates of the class of `z` in the basis of [`Self::homology_basis`].
    pub fn class_coords(&self, z: &CoverCycle) -> Result<Vec<i64>> {
        self.check_cycle(z)?;
        let x: Vec<i64> = self.tree.non_tree.iter().map(|&e| z.coeffs[e]).collect();
        let smith = self.smith();
        let y = linalg::mat_vec(&smith.left, &x);
        Ok(y[smith.rank()..].to_vec())
    }

    pub fn homologous(&self, a: &CoverCycle, b: &CoverCycle) -> Result<bool> {
        Ok(self.class_coords(a)? == self.class_coords(b)?)
    }

    /// Algebraic intersection number of two 1-cycles.
    ///
    /// `c2` is pushed off to its left. Around each vertex the pushed copy
    /// turns from an incoming half-edge to an outgoing one through the sector
    /// on its left, crossing the half-edges of `c1` found strictly between
    /// the outgoing and incoming half-edge in counterclockwise order.
    pub fn pairing(&self, c1: &CoverCycle, c2: &CoverCycle) -> Result<i64> {
        self.check_cycle(c1)?;
        self.check_cycle(c2)?;
        let halves = 2 * self.ngen();
        let mut total = 0i64;
        for v in 0..self.d() {
            let out1: Vec<i64> = (0..halves).map(|h| self.outflow(&c1.coeffs, v, h)).collect();
            let out2: Vec<i64> = (0..halves).map(|h| self.outflow(&c2.coeffs, v, h)).collect();
            let mut incoming: Vec<(HalfLabel, i64)> =
                (0..halves).filter(|&h| out2[h] < 0).map(|h| (h, -out2[h])).collect();
            let mut outgoing: Vec<(HalfLabel, i64)> =
                (0..halves).filter(|&h| out2[h] > 0).map(|h| (h, out2[h])).collect();
            let (mut i, mut o) = (0, 0);
            while i < incoming.len() && o < outgoing.len() {
                let m = incoming[i].1.min(outgoing[o].1);
                let (h_in, h_out) = (incoming[i].0, outgoing[o].0);
                let mut h = self.ccw_next[h_out];
                let mut crossed = 0;
                while h != h_in {
                    crossed -= out1[h];
                    h = self.ccw_next[h];
                }
                total += m * crossed;
                incoming[i].1 -= m;
                outgoing[o].1 -= m;
                if incoming[i].1 == 0 {
                    i += 1;
                }
                if outgoing[o].1 == 0 {
                    o += 1;
                }
            }
        }
        Ok(ORIENTATION * total)
    }

    /// Flow of `chain` leaving vertex `v` through half-edge label `h`.
    fn outflow(&self, chain: &[i64], v: usize, h: HalfLabel) -> i64 {
        let (gen, end) = (h / 2, h % 2);
        let d = self.d();
        if end == 0 {
            chain[gen * d + v]
        } else {
            let s = self.cover.act(v, Letter::new(gen, true));
            -chain[gen * d + s]
        }
    }

    /// Chain-level transfer along an arrow `fine -> self.cover`: each edge is
    /// replaced by the sum of the edges above it.
    pub fn lift_along(&self, z: &CoverCycle, arrow: &CoverArrow) -> Result<CoverCycle> {
        if arrow.to != self.cover || z.cover != self.cover {
            return Err(Error::ComplexMismatch);
        }
        let (d, dd) = (self.d(), arrow.from.degree());
        let mut out = CoverCycle::zero(&arrow.from);
        for gen in 0..self.ngen() {
            for p in 0..dd {
                out.coeffs[gen * dd + p] = z.coeffs[gen * d + arrow.sheet_map[p]];
            }
        }
        Ok(out)
    }

    /// Gram matrix of [`Self::pairing`] on the homology basis.
    pub fn intersection_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let basis = self.homology_basis();
        basis.iter().map(|a| basis.iter().map(|b| self.pairing(a, b)).collect()).collect()
    }
}

/// Add `sign` times the lifted path of `w` from `sheet` to `chain`.
pub(crate) fn add_trace(cover: &CoverSpec, chain: &mut [i64], sheet: usize, w: &GroupWord, sign: i64) -> usize {
    let d = cover.degree();
    let mut cur = sheet;
    for &l in w.letters() {
        if l.inv {
            cur = cover.act(cur, l);
            chain[l.gen * d + cur] -= sign;
        } else {
            chain[l.gen * d + cur] += sign;
            cur = cover.act(cur, l);
        }
    }
    cur
}

/// Rotation at the single base vertex, read off from the corners of the
/// relator polygon; every vertex of a cover carries the same rotation.
fn base_rotation(cover: &CoverSpec) -> Vec<HalfLabel> {
    let rel = cover.base().relator();
    let ls = rel.letters();
    let n = ls.len();
    let arrive = |l: Letter| 2 * l.gen + if l.inv { 0 } else { 1 };
    let depart = |l: Letter| 2 * l.gen + if l.inv { 1 } else { 0 };
    let mut ccw_next = vec![usize::MAX; n];
    for k in 0..n {
        // the face corner sits counterclockwise from the departing half-edge
        ccw_next[depart(ls[(k + 1) % n])] = arrive(ls[k]);
    }
    ccw_next
}

fn spanning_tree(cover: &CoverSpec) -> SpanningTree {
    let d = cover.degree();
    let ngen = cover.base().num_generators();
    let mut path_chains: Vec<Option<Vec<i64>>> = vec![None; d];
    path_chains[0] = Some(vec![0; ngen * d]);
    let mut is_tree_edge = vec![false; ngen * d];
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let s = queue[head];
        head += 1;
        for c in 0..2 * ngen {
            let l = Letter::new(c / 2, c % 2 == 1);
            let t = cover.act(s, l);
            if path_chains[t].is_none() {
                let mut chain = path_chains[s].clone().unwrap();
                let e = if l.inv { l.gen * d + t } else { l.gen * d + s };
                chain[e] += if l.inv { -1 } else { 1 };
                is_tree_edge[e] = true;
                path_chains[t] = Some(chain);
                queue.push(t);
            }
        }
    }
    let non_tree = (0..ngen * d).filter(|&e| !is_tree_edge[e]).collect();
    SpanningTree { path_chains: path_chains.into_iter().map(Option::unwrap).collect(), non_tree }
}

/// Intersection number on the common fiber product divided by `g_k - 1`.
pub fn normalized_pairing(a: (&CoverSpec, &CoverCycle), b: (&CoverSpec, &CoverCycle)) -> Result<Rational> {
    let (ca, za) = a;
    let (cb, zb) = b;
    if ca.base() != cb.base() {
        return Err(Error::IncompatibleTower);
    }
    let common = crate::covers::fiber_product(ca, cb)?;
    let lift = |c: &CoverSpec, z: &CoverCycle| -> Result<CoverCycle> {
        let arrow = crate::covers::factors_through(&common, c).ok_or(Error::IncompatibleTower)?;
        CoverComplex::new(c)?.lift_along(z, &arrow)
    };
    let (ua, ub) = (lift(ca, za)?, lift(cb, zb)?);
    normalized_on(&common, &ua, &ub)
}

/// `(u, v) / (g - 1)` for cycles on a single cover of genus `g`.
pub fn normalized_on(cover: &CoverSpec, u: &CoverCycle, v: &CoverCycle) -> Result<Rational> {
    let k = CoverComplex::new(cover)?;
    let p = k.pairing(u, v)?;
    Ok(Rational::new(p, cover.cover_genus() as i64 - 1))
}

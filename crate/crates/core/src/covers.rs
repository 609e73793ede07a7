//! Finite pointed covers of a surface as transitive permutation
//! representations of the surface group.
//!
//! Sheets are zero-based internally (sheet 0 is the marked sheet) and
//! one-based in documents. Generators act on the right: the lift of a word
//! starting at sheet `s` ends at `s.trace(word)`, and the subgroup of the
//! cover is the stabilizer of sheet 0.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::surface::{GroupWord, Letter, Surface};

/// Default node budget for backtracking and orbit searches.
pub const DEFAULT_BUDGET: usize = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoverSpec {
    base: Surface,
    perms: Vec<Vec<usize>>,
    inverses: Vec<Vec<usize>>,
}

impl CoverSpec {
    /// Build and validate a cover from zero-based permutation images.
    pub fn new(base: Surface, perms: Vec<Vec<usize>>) -> Result<Self> {
        let c = Self::from_perms(base, perms)?;
        c.validate()?;
        Ok(c)
    }

    /// Shape checks only: one permutation per generator, all of one degree.
    pub fn from_perms(base: Surface, perms: Vec<Vec<usize>>) -> Result<Self> {
        if perms.len() != base.num_generators() {
            return Err(Error::BadDegree(format!(
                "expected {} permutations, found {}",
                base.num_generators(),
                perms.len()
            )));
        }
        let d = perms[0].len();
        if d == 0 {
            return Err(Error::BadDegree("degree must be at least 1".into()));
        }
        let mut inverses = Vec::with_capacity(perms.len());
        for (i, p) in perms.iter().enumerate() {
            if p.len() != d {
                return Err(Error::BadDegree(format!("permutation {} has length {}, expected {d}", i + 1, p.len())));
            }
            let mut inv = vec![usize::MAX; d];
            for (s, &t) in p.iter().enumerate() {
                if t >= d || inv[t] != usize::MAX {
                    return Err(Error::BadDegree(format!("generator {} does not act as a permutation", i + 1)));
                }
                inv[t] = s;
            }
            inverses.push(inv);
        }
        Ok(CoverSpec { base, perms, inverses })
    }

    /// The identity cover of degree one.
    pub fn trivial(base: Surface) -> Self {
        let perms = vec![vec![0]; base.num_generators()];
        CoverSpec { base, inverses: perms.clone(), perms }
    }

    pub fn base(&self) -> Surface {
        self.base
    }

    pub fn degree(&self) -> usize {
        self.perms[0].len()
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    /// Genus of the covering surface, `d(g-1)+1`.
    pub fn cover_genus(&self) -> usize {
        self.degree() * (self.base.genus() - 1) + 1
    }

    /// The covering surface as a `Surface` value.
    pub fn total_surface(&self) -> Surface {
        Surface::new(self.cover_genus()).expect("cover genus is at least the base genus")
    }

    pub fn act(&self, sheet: usize, l: Letter) -> usize {
        if l.inv {
            self.inverses[l.gen][sheet]
        } else {
            self.perms[l.gen][sheet]
        }
    }

    pub fn trace(&self, sheet: usize, w: &GroupWord) -> usize {
        w.letters().iter().fold(sheet, |s, &l| self.act(s, l))
    }

    /// Relator acts trivially and the action is transitive.
    pub fn validate(&self) -> Result<()> {
        let rel = self.base.relator();
        for s in 0..self.degree() {
            if self.trace(s, &rel) != s {
                return Err(Error::RelatorNotTrivial { sheet: s + 1 });
            }
        }
        if self.spanning_words().iter().any(Option::is_none) {
            return Err(Error::NotTransitive);
        }
        Ok(())
    }

    /// Breadth-first Schreier tree from sheet 0, columns in the order
    /// `x1, x1^-1, x2, x2^-1, ...`. Entry `s` is the tree word from 0 to `s`.
    pub fn spanning_words(&self) -> Vec<Option<GroupWord>> {
        let d = self.degree();
        let mut words: Vec<Option<GroupWord>> = vec![None; d];
        words[0] = Some(GroupWord::empty());
        let mut queue = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let s = queue[head];
            head += 1;
            for l in letters(self.base.num_generators()) {
                let t = self.act(s, l);
                if words[t].is_none() {
                    let w = words[s].as_ref().unwrap().mul(&GroupWord::from_letters(vec![l]));
                    words[t] = Some(w);
                    queue.push(t);
                }
            }
        }
        words
    }

    /// Tree words for a valid (transitive) cover.
    pub fn tree_words(&self) -> Vec<GroupWord> {
        self.spanning_words().into_iter().map(|w| w.expect("cover is transitive")).collect()
    }

    /// Schreier generators `p(s) x p(s.x)^-1` of the stabilizer of sheet 0,
    /// one per edge `(x, s)`, indexed `gen * d + s`.
    pub fn schreier_generators(&self) -> Vec<GroupWord> {
        let p = self.tree_words();
        let d = self.degree();
        let mut out = Vec::with_capacity(self.base.num_generators() * d);
        for gen in 0..self.base.num_generators() {
            for s in 0..d {
                let t = self.perms[gen][s];
                out.push(p[s].mul(&GroupWord::generator(gen)).mul(&p[t].inverse()));
            }
        }
        out
    }

    /// Relabel sheets in breadth-first order from sheet 0.
    pub fn canonical(&self) -> CoverSpec {
        let d = self.degree();
        let mut label = vec![usize::MAX; d];
        let mut order = vec![0];
        label[0] = 0;
        let mut head = 0;
        while head < order.len() {
            let s = order[head];
            head += 1;
            for l in letters(self.base.num_generators()) {
                let t = self.act(s, l);
                if label[t] == usize::MAX {
                    label[t] = order.len();
                    order.push(t);
                }
            }
        }
        assert_eq!(order.len(), d, "canonical form requires a transitive cover");
        let perms = self.perms.iter().map(|p| order.iter().map(|&s| label[p[s]]).collect()).collect();
        CoverSpec::from_perms(self.base, perms).expect("relabeling preserves shape")
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical().perms == self.perms
    }

    /// Same stabilizer of the marked sheet.
    pub fn pointed_equal(&self, other: &CoverSpec) -> bool {
        self.base == other.base && self.degree() == other.degree() && self.canonical().perms == other.canonical().perms
    }

    /// One-based permutation images, as used in documents.
    pub fn perms_one_based(&self) -> Vec<Vec<usize>> {
        self.perms.iter().map(|p| p.iter().map(|&x| x + 1).collect()).collect()
    }
}

/// Letters in coset-table column order.
pub(crate) fn letters(num_gens: usize) -> impl Iterator<Item = Letter> {
    (0..2 * num_gens).map(|c| Letter::new(c / 2, c % 2 == 1))
}

/// An arrow between pointed covers: an equivariant map of sheets fixing the
/// marked sheet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverArrow {
    pub from: CoverSpec,
    pub to: CoverSpec,
    pub sheet_map: Vec<usize>,
}

impl CoverArrow {
    pub fn identity(c: &CoverSpec) -> Self {
        CoverArrow { from: c.clone(), to: c.clone(), sheet_map: (0..c.degree()).collect() }
    }

    pub fn fiber_size(&self) -> usize {
        self.from.degree() / self.to.degree()
    }

    /// Sheets of `from` lying over sheet `s` of `to`, ascending.
    pub fn fiber(&self, s: usize) -> Vec<usize> {
        (0..self.from.degree()).filter(|&p| self.sheet_map[p] == s).collect()
    }

    pub fn check(&self) -> Result<()> {
        if self.sheet_map[0] != 0 {
            return Err(Error::InvalidInput("arrow does not preserve the marked sheet".into()));
        }
        for l in letters(self.from.base.num_generators()) {
            for s in 0..self.from.degree() {
                if self.sheet_map[self.from.act(s, l)] != self.to.act(self.sheet_map[s], l) {
                    return Err(Error::InvalidInput("sheet map is not equivariant".into()));
                }
            }
        }
        let m = self.fiber_size();
        if !self.from.degree().is_multiple_of(self.to.degree())
            || (0..self.to.degree()).any(|s| self.fiber(s).len() != m)
        {
            return Err(Error::InvalidInput("fibers have unequal sizes".into()));
        }
        Ok(())
    }
}

/// The unique pointed arrow `fine -> coarse` if the stabilizer of `fine` is
/// contained in that of `coarse`.
///
/// Sheet 0 is transported along the Schreier tree of `fine`; every non-tree
/// edge is a Schreier generator and must close up in `coarse`.
pub fn factors_through(fine: &CoverSpec, coarse: &CoverSpec) -> Option<CoverArrow> {
    if fine.base != coarse.base || !fine.degree().is_multiple_of(coarse.degree()) {
        return None;
    }
    let words = fine.spanning_words();
    let mut sheet_map = Vec::with_capacity(fine.degree());
    for w in &words {
        sheet_map.push(coarse.trace(0, w.as_ref()?));
    }
    for gen in 0..fine.base.num_generators() {
        for s in 0..fine.degree() {
            if sheet_map[fine.perms[gen][s]] != coarse.perms[gen][sheet_map[s]] {
                return None;
            }
        }
    }
    Some(CoverArrow { from: fine.clone(), to: coarse.clone(), sheet_map })
}

/// Breadth-first pointed component of an action on arbitrary states, with
/// sheets labeled in discovery order (so the result is canonical).
///
/// Returns the cover and the list of states in sheet order.
pub(crate) fn pointed_component<S, F>(base: Surface, start: S, budget: usize, mut act: F) -> Result<(CoverSpec, Vec<S>)>
where
    S: Clone + Eq + Hash,
    F: FnMut(&S, Letter) -> S,
{
    let ngen = base.num_generators();
    let mut index: HashMap<S, usize> = HashMap::new();
    let mut states = vec![start.clone()];
    index.insert(start, 0);
    let mut table: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < states.len() {
        let s = states[head].clone();
        let mut row = vec![0; ngen];
        for l in letters(ngen) {
            let t = act(&s, l);
            let next = index.len();
            let ti = *index.entry(t.clone()).or_insert_with(|| next);
            if ti == next {
                if states.len() >= budget {
                    return Err(Error::SearchBudgetExceeded { budget });
                }
                states.push(t);
            }
            if !l.inv {
                row[l.gen] = ti;
            }
        }
        table.push(row);
        head += 1;
    }
    let d = states.len();
    let perms = (0..ngen).map(|g| (0..d).map(|s| table[s][g]).collect()).collect();
    Ok((CoverSpec::from_perms(base, perms)?, states))
}

/// Pullback of two covers: the pointed component of the diagonal action,
/// whose stabilizer is the intersection of the two stabilizers.
pub fn fiber_product(p: &CoverSpec, q: &CoverSpec) -> Result<CoverSpec> {
    if p.base != q.base {
        return Err(Error::BaseMismatch);
    }
    let (c, _) = pointed_component(p.base, (0usize, 0usize), usize::MAX, |&(s, t), l| (p.act(s, l), q.act(t, l)))?;
    Ok(c)
}

/// Identification of the total space of a cover with a standard surface:
/// a word over that surface's generators for every edge `(gen, sheet)` of
/// the cover's lifted complex, indexed `gen * d + sheet`. It describes the
/// image of the loop `p(s) x p(s.x)^-1` in the fundamental group of the
/// identified surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub target: Surface,
    pub edge_words: Vec<GroupWord>,
}

impl Identification {
    /// For the degree-one cover, whose total space is the base itself.
    pub fn tautological(base: Surface) -> Self {
        Identification { target: base, edge_words: (0..base.num_generators()).map(GroupWord::generator).collect() }
    }
}

/// Compose `top` (a cover of `Y`) with `bottom` (a cover of `X` whose total
/// space is identified with `Y`). Sheets of the result are pairs
/// `(bottom sheet, top sheet)`.
pub fn compose_covers(top: &CoverSpec, bottom: &CoverSpec, ident: &Identification) -> Result<CoverSpec> {
    if top.base != ident.target || top.base.genus() != bottom.cover_genus() {
        return Err(Error::GenusMismatch { expected: bottom.cover_genus(), found: top.base.genus() });
    }
    let d = bottom.degree();
    if ident.edge_words.len() != bottom.base.num_generators() * d {
        return Err(Error::InvalidIdentification(format!(
            "expected {} edge words, found {}",
            bottom.base.num_generators() * d,
            ident.edge_words.len()
        )));
    }
    for w in &ident.edge_words {
        top.base.check_word(w).map_err(|e| Error::InvalidIdentification(e.to_string()))?;
    }
    compose_with(bottom, top.degree(), |gen, s| ident.edge_words[gen * d + s].clone(), |t, w| top.trace(t, w)).map_err(
        |e| match e {
            Error::RelatorNotTrivial { .. } | Error::NotTransitive => Error::InvalidIdentification(e.to_string()),
            e => e,
        },
    )
}

/// Shared construction behind composition and the action of virtual
/// automorphisms: pairs `(bottom sheet, fiber point)` where crossing edge
/// `(x, s)` of `bottom` moves the fiber point along `edge_word(x, s)`.
pub(crate) fn compose_with<W, A>(bottom: &CoverSpec, fiber_size: usize, edge_word: W, act_word: A) -> Result<CoverSpec>
where
    W: Fn(usize, usize) -> GroupWord,
    A: Fn(usize, &GroupWord) -> usize,
{
    let d = bottom.degree();
    let ngen = bottom.base.num_generators();
    let mut fwd = vec![vec![0usize; fiber_size]; ngen * d];
    for gen in 0..ngen {
        for s in 0..d {
            let w = edge_word(gen, s);
            for (t, slot) in fwd[gen * d + s].iter_mut().enumerate() {
                *slot = act_word(t, &w);
            }
        }
    }
    let mut bwd = vec![vec![usize::MAX; fiber_size]; ngen * d];
    for (e, row) in fwd.iter().enumerate() {
        for (t, &u) in row.iter().enumerate() {
            if u >= fiber_size || bwd[e][u] != usize::MAX {
                return Err(Error::InvalidIdentification("edge word does not act as a permutation".into()));
            }
            bwd[e][u] = t;
        }
    }
    let (c, states) = pointed_component(bottom.base, (0usize, 0usize), usize::MAX, |&(s, t), l| {
        if l.inv {
            let s2 = bottom.act(s, l);
            (s2, bwd[l.gen * d + s2][t])
        } else {
            (bottom.act(s, l), fwd[l.gen * d + s][t])
        }
    })?;
    if states.len() != d * fiber_size {
        return Err(Error::NotTransitive);
    }
    c.validate()?;
    Ok(c)
}

/// All pointed covers of degree `d` (equivalently all subgroups of index
/// `d`), in canonical form and lexicographic order of permutation tuples.
pub fn enumerate_covers(surface: Surface, d: usize, budget: usize) -> Result<Vec<CoverSpec>> {
    if d == 0 {
        return Err(Error::BadDegree("degree must be at least 1".into()));
    }
    let search = LowIndexSearch::new(surface, d, budget);
    let mut root = search.root();
    // Split the tree a few levels down and explore the subtrees in parallel.
    let mut frontier = Vec::new();
    search.expand_to(&mut root, 3, &mut frontier)?;
    let results: Vec<Result<Vec<Table>>> = frontier
        .into_par_iter()
        .map(|mut t| {
            let mut out = Vec::new();
            search.dfs(&mut t, &mut out)?;
            Ok(out)
        })
        .collect();
    let mut covers = Vec::new();
    for r in results {
        for table in r? {
            covers.push(search.to_cover(&table)?);
        }
    }
    covers.sort_by(|a, b| a.perms.cmp(&b.perms));
    Ok(covers)
}

#[derive(Clone)]
struct Table {
    rows: Vec<Vec<Option<usize>>>,
    defined: usize,
}

struct LowIndexSearch {
    surface: Surface,
    degree: usize,
    relator: Vec<Letter>,
    budget: usize,
    nodes: AtomicUsize,
}

impl LowIndexSearch {
    fn new(surface: Surface, degree: usize, budget: usize) -> Self {
        LowIndexSearch {
            surface,
            degree,
            relator: surface.relator().letters().to_vec(),
            budget,
            nodes: AtomicUsize::new(0),
        }
    }

    fn cols(&self) -> usize {
        2 * self.surface.num_generators()
    }

    fn root(&self) -> Table {
        Table { rows: vec![vec![None; self.cols()]; self.degree], defined: 1 }
    }

    fn first_gap(&self, t: &Table) -> Option<(usize, usize)> {
        (0..t.defined).flat_map(|s| (0..self.cols()).map(move |c| (s, c))).find(|&(s, c)| t.rows[s][c].is_none())
    }

    /// Candidate targets for a gap: existing sheets with a free inverse slot,
    /// then a fresh sheet.
    fn candidates(&self, t: &Table, col: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..t.defined).filter(|&u| t.rows[u][col ^ 1].is_none()).collect();
        if t.defined < self.degree {
            out.push(t.defined);
        }
        out
    }

    fn assign(&self, t: &mut Table, s: usize, col: usize, u: usize) {
        if u == t.defined {
            t.defined += 1;
        }
        t.rows[s][col] = Some(u);
        t.rows[u][col ^ 1] = Some(s);
    }

    fn unassign(&self, t: &mut Table, s: usize, col: usize, u: usize, was_new: bool) {
        t.rows[s][col] = None;
        t.rows[u][col ^ 1] = None;
        if was_new {
            t.defined -= 1;
        }
    }

    /// No fully defined relator trace from any sheet fails to close.
    fn consistent(&self, t: &Table) -> bool {
        'sheets: for s in 0..t.defined {
            let mut cur = s;
            for l in &self.relator {
                match t.rows[cur][l.column()] {
                    Some(n) => cur = n,
                    None => continue 'sheets,
                }
            }
            if cur != s {
                return false;
            }
        }
        true
    }

    fn tick(&self) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Error::SearchBudgetExceeded { budget: self.budget });
        }
        Ok(())
    }

    fn expand_to(&self, t: &mut Table, depth: usize, out: &mut Vec<Table>) -> Result<()> {
        if depth == 0 {
            out.push(t.clone());
            return Ok(());
        }
        self.tick()?;
        let Some((s, col)) = self.first_gap(t) else {
            out.push(t.clone());
            return Ok(());
        };
        for u in self.candidates(t, col) {
            let was_new = u == t.defined;
            self.assign(t, s, col, u);
            if self.consistent(t) {
                self.expand_to(t, depth - 1, out)?;
            }
            self.unassign(t, s, col, u, was_new);
        }
        Ok(())
    }

    fn dfs(&self, t: &mut Table, out: &mut Vec<Table>) -> Result<()> {
        self.tick()?;
        let Some((s, col)) = self.first_gap(t) else {
            if t.defined == self.degree {
                out.push(t.clone());
            }
            return Ok(());
        };
        for u in self.candidates(t, col) {
            let was_new = u == t.defined;
            self.assign(t, s, col, u);
            if self.consistent(t) {
                self.dfs(t, out)?;
            }
            self.unassign(t, s, col, u, was_new);
        }
        Ok(())
    }

    fn to_cover(&self, t: &Table) -> Result<CoverSpec> {
        let perms = (0..self.surface.num_generators())
            .map(|g| (0..self.degree).map(|s| t.rows[s][2 * g].expect("complete table")).collect())
            .collect();
        CoverSpec::new(self.surface, perms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> Surface {
        Surface::new(2).unwrap()
    }

    fn swap_on(gen: usize) -> CoverSpec {
        let mut perms = vec![vec![0, 1]; 4];
        perms[gen] = vec![1, 0];
        CoverSpec::new(g2(), perms).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(CoverSpec::new(g2(), vec![vec![0]; 4]).is_ok());
        assert!(CoverSpec::new(g2(), vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![0, 1]]).is_ok());
        assert!(matches!(CoverSpec::new(g2(), vec![vec![0, 1]; 4]), Err(Error::NotTransitive)));
        // a 3-cycle and a transposition do not commute
        let bad = CoverSpec::new(g2(), vec![vec![1, 2, 0], vec![1, 0, 2], vec![0, 1, 2], vec![0, 1, 2]]);
        assert!(matches!(bad, Err(Error::RelatorNotTrivial { .. })));
        assert!(matches!(CoverSpec::from_perms(g2(), vec![vec![0, 0]; 4]), Err(Error::BadDegree(_))));
        assert!(matches!(CoverSpec::from_perms(g2(), vec![vec![0]; 3]), Err(Error::BadDegree(_))));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(CoverSpec::trivial(g2()).cover_genus(), 2);
        assert_eq!(swap_on(0).cover_genus(), 3);
        let c3 = CoverSpec::new(g2(), vec![vec![1, 2, 0], vec![0, 1, 2], vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        assert_eq!(c3.cover_genus(), 4);
    }

    #[test]
    fn enumerate_small_degrees() {
        assert_eq!(enumerate_covers(g2(), 1, DEFAULT_BUDGET).unwrap().len(), 1);
        let two = enumerate_covers(g2(), 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(two.len(), 15);
        for c in &two {
            c.validate().unwrap();
            assert!(c.is_canonical());
        }
        assert!(matches!(enumerate_covers(g2(), 3, 10), Err(Error::SearchBudgetExceeded { .. })));
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = enumerate_covers(g2(), 3, DEFAULT_BUDGET).unwrap();
        let b = enumerate_covers(g2(), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn factoring_examples() {
        let c = swap_on(0);
        let id = factors_through(&c, &c).unwrap();
        assert_eq!(id.sheet_map, vec![0, 1]);
        let triv = factors_through(&c, &CoverSpec::trivial(g2())).unwrap();
        assert_eq!(triv.sheet_map, vec![0, 0]);
        assert!(factors_through(&c, &swap_on(1)).is_none());
        assert!(factors_through(&CoverSpec::trivial(g2()), &c).is_none());
    }

    #[test]
    fn fiber_product_examples() {
        let (p, q) = (swap_on(0), swap_on(1));
        let f = fiber_product(&p, &q).unwrap();
        assert_eq!(f.degree(), 4);
        assert_eq!(f.cover_genus(), 5);
        f.validate().unwrap();
        factors_through(&f, &p).unwrap().check().unwrap();
        factors_through(&f, &q).unwrap().check().unwrap();
        assert!(fiber_product(&p, &CoverSpec::trivial(g2())).unwrap().pointed_equal(&p));
        assert!(fiber_product(&p, &p).unwrap().pointed_equal(&p));
    }

    #[test]
    fn compose_identity_laws() {
        let c = swap_on(2);
        let triv_x = CoverSpec::trivial(g2());
        let composed = compose_covers(&c, &triv_x, &Identification::tautological(g2())).unwrap();
        assert!(composed.pointed_equal(&c));

        // trivial cover over Y composed with c: any identification works since
        // the top has a single sheet
        let y = c.total_surface();
        let ident = Identification { target: y, edge_words: vec![GroupWord::empty(); 8] };
        let composed = compose_covers(&CoverSpec::trivial(y), &c, &ident).unwrap();
        assert!(composed.pointed_equal(&c));

        let err = compose_covers(&c, &c, &Identification::tautological(g2()));
        assert!(matches!(err, Err(Error::GenusMismatch { .. })));
    }

    #[test]
    fn compose_degree_two_over_degree_two() {
        // bottom: a1 -> (1 2); Y has genus 3. The top is the double cover of Y
        // given by y1 -> (1 2); the identification sends both lifts of b1 to y1,
        // which is the class on the bottom cover counting b1 mod 2.
        let bottom = swap_on(0);
        let y = bottom.total_surface();
        let mut top_perms = vec![vec![0, 1]; 6];
        top_perms[0] = vec![1, 0];
        let top = CoverSpec::new(y, top_perms).unwrap();
        let mut edge_words = vec![GroupWord::empty(); 8];
        edge_words[2] = GroupWord::generator(0);
        edge_words[3] = GroupWord::generator(0);
        let c = compose_covers(&top, &bottom, &Identification { target: y, edge_words }).unwrap();
        assert_eq!(c.degree(), 4);
        assert_eq!(c.cover_genus(), 5);
        factors_through(&c, &bottom).unwrap().check().unwrap();

        // sending only one lift of b1 to y1 violates the lifted relators
        let mut bad = vec![GroupWord::empty(); 8];
        bad[2] = GroupWord::generator(0);
        let err = compose_covers(&top, &bottom, &Identification { target: y, edge_words: bad });
        assert!(matches!(err, Err(Error::InvalidIdentification(_))));
    }
}

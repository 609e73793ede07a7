//! JSON documents exchanged by the command-line tool.
//!
//! Every top-level document carries `"schema": "covertower/1"`. Sheets,
//! generators, branches and switches are one-based in documents; words are
//! signed one-based letters. Rationals are written as `"p/q"` strings.

use serde::{Deserialize, Serialize};

use crate::covers::CoverSpec;
use crate::error::{Error, Result};
use crate::homology::CoverCycle;
use crate::surface::{GroupWord, HomologyClass, Surface};
use crate::tower::{Automorphism, LimitElement, Payload, TwoArrowVaut};
use crate::traintrack::{HalfBranch, Switch, TrainTrack, WeightVector};
use crate::Rational;

pub const SCHEMA: &str = "covertower/1";

fn schema() -> String {
    SCHEMA.to_string()
}

fn check_schema(s: &str) -> Result<()> {
    if s == SCHEMA {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("unsupported schema {s:?}, expected {SCHEMA:?}")))
    }
}

fn one_based(x: usize, what: &str) -> Result<usize> {
    x.checked_sub(1).ok_or_else(|| Error::InvalidInput(format!("{what} indices are one-based")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub genus: usize,
    pub degree: usize,
    pub perms: Vec<Vec<usize>>,
}

impl CoverDoc {
    /// Written in canonical form.
    pub fn from_cover(c: &CoverSpec) -> Self {
        let c = c.canonical();
        CoverDoc { schema: schema(), genus: c.base().genus(), degree: c.degree(), perms: c.perms_one_based() }
    }

    /// Accepts any sheet labeling.
    pub fn to_cover(&self) -> Result<CoverSpec> {
        check_schema(&self.schema)?;
        let base = Surface::new(self.genus)?;
        if self.perms.len() != base.num_generators() {
            return Err(Error::DimensionMismatch { expected: base.num_generators(), found: self.perms.len() });
        }
        let perms = self
            .perms
            .iter()
            .map(|p| {
                if p.len() != self.degree {
                    return Err(Error::DimensionMismatch { expected: self.degree, found: p.len() });
                }
                p.iter().map(|&x| one_based(x, "sheet")).collect()
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        CoverSpec::new(base, perms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub cover: CoverDoc,
    /// `[gen, sheet, coeff]` with one-based generator and sheet.
    pub edges: Vec<[i64; 3]>,
}

fn edges_of(z: &CoverCycle) -> Vec<[i64; 3]> {
    z.entries().into_iter().map(|(g, s, c)| [g as i64 + 1, s as i64 + 1, c]).collect()
}

fn cycle_from(cover: &CoverSpec, edges: &[[i64; 3]]) -> Result<CoverCycle> {
    let entries = edges
        .iter()
        .map(|&[g, s, c]| {
            if g < 1 || s < 1 {
                return Err(Error::InvalidInput("edge indices are one-based".into()));
            }
            Ok((g as usize - 1, s as usize - 1, c))
        })
        .collect::<Result<Vec<_>>>()?;
    CoverCycle::from_entries(cover, &entries)
}

/// Relabels a cycle onto the canonical form of its cover.
fn canonical_cycle(z: &CoverCycle) -> CoverCycle {
    let canon = z.cover.canonical();
    let arrow = crate::covers::factors_through(&z.cover, &canon).expect("a cover maps onto its canonical form");
    let d = canon.degree();
    let mut out = CoverCycle::zero(&canon);
    for (g, s, c) in z.entries() {
        out.coeffs[g * d + arrow.sheet_map[s]] += c;
    }
    out
}

impl CycleDoc {
    pub fn from_cycle(z: &CoverCycle) -> Self {
        let z = canonical_cycle(z);
        CycleDoc { schema: schema(), cover: CoverDoc::from_cover(&z.cover), edges: edges_of(&z) }
    }

    pub fn to_cycle(&self) -> Result<CoverCycle> {
        check_schema(&self.schema)?;
        let cover = self.cover.to_cover()?;
        cycle_from(&cover, &self.edges)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SwitchDoc {
    #[serde(default = "one")]
    pub sheet: usize,
    /// `[branch, end]`, one-based branch, end 0 at the start of its word and 1 at the end.
    pub side_a: Vec<[usize; 2]>,
    pub side_b: Vec<[usize; 2]>,
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrackDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub genus: usize,
    pub switches: Vec<SwitchDoc>,
    pub words: Vec<GroupWord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
}

pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|_| Error::InvalidInput(format!("not a rational: {s:?}")))
}

pub fn weights_to_strings(w: &WeightVector) -> Vec<String> {
    w.0.iter().map(rational_to_string).collect()
}

pub fn weights_from_strings(w: &[String]) -> Result<WeightVector> {
    Ok(WeightVector(w.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?))
}

impl TrackDoc {
    pub fn from_track(t: &TrainTrack, weights: Option<&WeightVector>) -> Self {
        let half = |hs: &[HalfBranch]| hs.iter().map(|h| [h.branch + 1, h.end]).collect();
        TrackDoc {
            schema: schema(),
            genus: t.base().genus(),
            switches: t
                .switches()
                .iter()
                .map(|s| SwitchDoc { sheet: s.sheet + 1, side_a: half(&s.side_a), side_b: half(&s.side_b) })
                .collect(),
            words: t.words().to_vec(),
            weights: weights.map(weights_to_strings),
        }
    }

    pub fn to_track(&self) -> Result<(TrainTrack, Option<WeightVector>)> {
        check_schema(&self.schema)?;
        let base = Surface::new(self.genus)?;
        let half = |hs: &[[usize; 2]]| {
            hs.iter()
                .map(|&[b, end]| Ok(HalfBranch { branch: one_based(b, "branch")?, end }))
                .collect::<Result<Vec<_>>>()
        };
        let switches = self
            .switches
            .iter()
            .map(|s| {
                Ok(Switch { sheet: one_based(s.sheet, "sheet")?, side_a: half(&s.side_a)?, side_b: half(&s.side_b)? })
            })
            .collect::<Result<Vec<_>>>()?;
        let track = TrainTrack::new(base, switches, self.words.clone())?;
        let weights = self.weights.as_deref().map(weights_from_strings).transpose()?;
        Ok((track, weights))
    }
}

/// A direct-limit element: a cover with either a cycle or a weighted track.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub kind: String,
    pub cover: CoverDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[i64; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub track: Option<TrackDoc>,
}

impl ElementDoc {
    pub fn from_element(e: &LimitElement) -> Self {
        match &e.payload {
            Payload::Homology(z) => {
                let z = canonical_cycle(z);
                ElementDoc {
                    schema: schema(),
                    kind: "homology".into(),
                    cover: CoverDoc::from_cover(&z.cover),
                    edges: Some(edges_of(&z)),
                    track: None,
                }
            }
            Payload::Track { track, weights } => {
                // relabel switch sheets onto the canonical cover
                let canon = e.cover.canonical();
                let arrow =
                    crate::covers::factors_through(&e.cover, &canon).expect("a cover maps onto its canonical form");
                let switches =
                    track.switches().iter().map(|s| Switch { sheet: arrow.sheet_map[s.sheet], ..s.clone() }).collect();
                let relabeled =
                    TrainTrack::new(track.base(), switches, track.words().to_vec()).expect("same combinatorics");
                ElementDoc {
                    schema: schema(),
                    kind: "track".into(),
                    cover: CoverDoc::from_cover(&canon),
                    edges: None,
                    track: Some(TrackDoc::from_track(&relabeled, Some(weights))),
                }
            }
        }
    }

    pub fn to_element(&self) -> Result<LimitElement> {
        check_schema(&self.schema)?;
        let cover = self.cover.to_cover()?;
        match self.kind.as_str() {
            "homology" => {
                let edges =
                    self.edges.as_deref().ok_or_else(|| Error::InvalidInput("homology element needs edges".into()))?;
                LimitElement::homology(cycle_from(&cover, edges)?)
            }
            "track" => {
                let t = self.track.as_ref().ok_or_else(|| Error::InvalidInput("track element needs a track".into()))?;
                let (track, weights) = t.to_track()?;
                let weights = weights.ok_or_else(|| Error::InvalidInput("track element needs weights".into()))?;
                LimitElement::track(cover, track, weights)
            }
            k => Err(Error::InvalidInput(format!("unknown element kind {k:?}"))),
        }
    }
}

/// Edge images of a vaut: `[gen, sheet, word]` for every edge of the source arrow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentificationDoc {
    pub forward: Vec<(usize, usize, GroupWord)>,
    pub backward: Vec<(usize, usize, GroupWord)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VautDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub base_genus: usize,
    pub left: CoverDoc,
    pub right: CoverDoc,
    pub identification: IdentificationDoc,
}

fn edge_list(images: &[GroupWord], d: usize) -> Vec<(usize, usize, GroupWord)> {
    images.iter().enumerate().map(|(e, w)| (e / d + 1, e % d + 1, w.clone())).collect()
}

fn edge_images(list: &[(usize, usize, GroupWord)], ngen: usize, d: usize) -> Result<Vec<GroupWord>> {
    let mut out: Vec<Option<GroupWord>> = vec![None; ngen * d];
    for (g, s, w) in list {
        let (g, s) = (one_based(*g, "generator")?, one_based(*s, "sheet")?);
        if g >= ngen || s >= d {
            return Err(Error::InvalidIdentification(format!("edge ({}, {}) out of range", g + 1, s + 1)));
        }
        if out[g * d + s].replace(w.clone()).is_some() {
            return Err(Error::InvalidIdentification(format!("edge ({}, {}) given twice", g + 1, s + 1)));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(e, w)| {
            w.ok_or_else(|| Error::InvalidIdentification(format!("edge ({}, {}) missing", e / d + 1, e % d + 1)))
        })
        .collect()
}

impl VautDoc {
    pub fn from_vaut(v: &TwoArrowVaut) -> Self {
        VautDoc {
            schema: schema(),
            base_genus: v.base().genus(),
            left: CoverDoc::from_cover(&v.left),
            right: CoverDoc::from_cover(&v.right),
            identification: IdentificationDoc {
                forward: edge_list(&v.forward, v.left.degree()),
                backward: edge_list(&v.backward, v.right.degree()),
            },
        }
    }

    pub fn to_vaut(&self) -> Result<TwoArrowVaut> {
        check_schema(&self.schema)?;
        let (left, right) = (self.left.to_cover()?, self.right.to_cover()?);
        if left.base().genus() != self.base_genus || right.base().genus() != self.base_genus {
            return Err(Error::BaseMismatch);
        }
        let ngen = left.base().num_generators();
        let forward = edge_images(&self.identification.forward, ngen, left.degree())?;
        let backward = edge_images(&self.identification.backward, ngen, right.degree())?;
        TwoArrowVaut::new(left, right, forward, backward)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismsDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub genus: usize,
    pub automorphisms: Vec<Automorphism>,
}

impl AutomorphismsDoc {
    pub fn to_list(&self) -> Result<Vec<Automorphism>> {
        check_schema(&self.schema)?;
        let base = Surface::new(self.genus)?;
        for a in &self.automorphisms {
            a.check(&base)?;
        }
        Ok(self.automorphisms.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub genus: usize,
    pub coords: Vec<i64>,
}

impl ClassDoc {
    pub fn to_class(&self) -> Result<(Surface, HomologyClass)> {
        check_schema(&self.schema)?;
        let s = Surface::new(self.genus)?;
        if self.coords.len() != s.homology_rank() {
            return Err(Error::DimensionMismatch { expected: s.homology_rank(), found: self.coords.len() });
        }
        Ok((s, HomologyClass::new(self.coords.clone())))
    }
}

/// A failed check together with the inputs that reproduce it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleDoc {
    pub schema: String,
    pub suite: String,
    pub message: String,
    pub inputs: serde_json::Value,
}

impl CounterexampleDoc {
    pub fn new(suite: &str, message: impl Into<String>, inputs: serde_json::Value) -> Self {
        CounterexampleDoc { schema: schema(), suite: suite.into(), message: message.into(), inputs }
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

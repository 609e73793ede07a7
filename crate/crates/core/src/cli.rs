//! Command-line front end. All output is deterministic for fixed inputs.
//!
//! Exit codes: 0 success, 1 verification failed (a counterexample document is
//! printed), 2 invalid input, 3 search budget exceeded.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::covers::{enumerate_covers, fiber_product, CoverSpec, DEFAULT_BUDGET};
use crate::doc::{
    self, AutomorphismsDoc, ClassDoc, CounterexampleDoc, CoverDoc, CycleDoc, ElementDoc, TrackDoc, VautDoc,
};
use crate::error::{Error, Result};
use crate::homology::{normalized_on, CoverComplex};
use crate::surface::{HomologyClass, Surface};
use crate::tower::characteristic::REFINEMENT_BUDGET;
use crate::tower::{
    characteristic_refinement, genus2_automorphisms, is_characteristic, limit_equal, normalized_pairing,
    orbit_density_experiment, vaut_act, vaut_compose, vaut_inverse, Automorphism, LimitElement, TwoArrowVaut,
};
use crate::traintrack::{lift_track, three_branch_track, WeightVector};
use crate::Rational;

pub const BUDGET_ENV: &str = "COVERTOWER_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "covertower", version, about = "Exact computations on the tower of finite covers of a closed surface")]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every pointed cover of the given degree, one document per line.
    Enumerate {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Genus of the total surface of a cover.
    Genus {
        #[arg(long)]
        cover: PathBuf,
    },
    /// Fiber product of two covers.
    FiberProduct { a: PathBuf, b: PathBuf },
    /// Transfer of a base class to a cover. The class is a document path or
    /// comma-separated coordinates.
    LiftCycle {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        class: String,
    },
    /// Normalized intersection pairing of two elements or cycles.
    Pairing {
        #[arg(long)]
        e1: PathBuf,
        #[arg(long)]
        e2: PathBuf,
    },
    /// Lift a train track on the base to a cover, with its lifting matrix.
    LiftTrack {
        #[arg(long)]
        track: PathBuf,
        #[arg(long)]
        cover: PathBuf,
    },
    /// Intersection of all subgroups of index at most the degree of the cover.
    CharRefine {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Test a cover against a list of automorphisms (the shipped genus-2 list by default).
    IsChar {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        auts: Option<PathBuf>,
    },
    /// Restrict a named automorphism to a cover, giving a two-arrow vaut.
    VautFromAut {
        #[arg(long)]
        name: String,
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        auts: Option<PathBuf>,
    },
    /// Act on a limit element by a vaut.
    VautAct {
        #[arg(long)]
        vaut: PathBuf,
        #[arg(long)]
        elem: PathBuf,
    },
    /// Run a verification suite over all covers up to a degree.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        max_degree: usize,
        /// Cap on worker threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Covering radius of the transvection orbit of a1 at genus 2.
    Orbit {
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = crate::tower::orbit::DEFAULT_TARGETS)]
        targets: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    RiemannHurwitz,
    TransferScaling,
    PairingInvariance,
    VautLaws,
    Theorem3,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::RiemannHurwitz => "riemann-hurwitz",
            Suite::TransferScaling => "transfer-scaling",
            Suite::PairingInvariance => "pairing-invariance",
            Suite::VautLaws => "vaut-laws",
            Suite::Theorem3 => "theorem3",
        }
    }
}

/// Result of a command: text for the output stream and an exit code.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

pub fn main() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    run(&args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    let result = execute(cli.command).and_then(|o| {
        match &cli.out {
            Some(path) => std::fs::write(path, &o.text)?,
            None => out.write_all(o.text.as_bytes())?,
        }
        Ok(o.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SearchBudgetExceeded { .. } => 3,
        _ => 2,
    }
}

/// `COVERTOWER_BUDGET` if set, otherwise `default`.
pub fn budget(default: usize) -> Result<usize> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Error::InvalidInput(format!("{BUDGET_ENV} must be a positive integer"))),
        Err(_) => Ok(default),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn read_cover(path: &Path) -> Result<CoverSpec> {
    doc::from_json::<CoverDoc>(&read(path)?)?.to_cover()
}

fn read_auts(path: Option<&Path>) -> Result<Vec<Automorphism>> {
    match path {
        Some(p) => doc::from_json::<AutomorphismsDoc>(&read(p)?)?.to_list(),
        None => Ok(genus2_automorphisms()),
    }
}

/// An element document, or a cycle document read as a homology element.
fn read_element(path: &Path) -> Result<LimitElement> {
    let text = read(path)?;
    match doc::from_json::<ElementDoc>(&text) {
        Ok(d) => d.to_element(),
        Err(_) => LimitElement::homology(doc::from_json::<CycleDoc>(&text)?.to_cycle()?),
    }
}

fn parse_class(spec: &str, surface: Surface) -> Result<HomologyClass> {
    let path = Path::new(spec);
    if path.exists() {
        let (s, u) = doc::from_json::<ClassDoc>(&read(path)?)?.to_class()?;
        if s != surface {
            return Err(Error::BaseMismatch);
        }
        return Ok(u);
    }
    let coords = spec
        .trim_matches(|c| c == '[' || c == ']')
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::InvalidInput(format!("bad class coordinate {x:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != surface.homology_rank() {
        return Err(Error::DimensionMismatch { expected: surface.homology_rank(), found: coords.len() });
    }
    Ok(HomologyClass::new(coords))
}

fn line<T: serde::Serialize>(doc: &T) -> String {
    let mut s = doc::to_json(doc);
    s.push('\n');
    s
}

fn execute(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Enumerate { genus, degree } => {
            let covers = enumerate_covers(Surface::new(genus)?, degree, budget(DEFAULT_BUDGET)?)?;
            Ok(Output::ok(covers.iter().map(|c| line(&CoverDoc::from_cover(c))).collect()))
        }
        Command::Genus { cover } => {
            let c = read_cover(&cover)?;
            Ok(Output::ok(format!("{}\n", CoverComplex::new(&c)?.genus_from_euler())))
        }
        Command::FiberProduct { a, b } => {
            let p = fiber_product(&read_cover(&a)?, &read_cover(&b)?)?;
            Ok(Output::ok(line(&CoverDoc::from_cover(&p))))
        }
        Command::LiftCycle { cover, class } => {
            let c = read_cover(&cover)?;
            let u = parse_class(&class, c.base())?;
            let z = CoverComplex::new(&c)?.transfer(&u)?;
            Ok(Output::ok(line(&CycleDoc::from_cycle(&z))))
        }
        Command::Pairing { e1, e2 } => {
            let (a, b) = (read_element(&e1)?, read_element(&e2)?);
            let common = fiber_product(&a.cover, &b.cover)?;
            let p = normalized_pairing(&a, &b)?;
            let raw = p * Rational::from_integer(common.cover_genus() as i64 - 1);
            let mut t = String::from("common_degree\tcommon_genus\tpairing\tnormalized\n");
            writeln!(t, "{}\t{}\t{}\t{}", common.degree(), common.cover_genus(), raw, p).unwrap();
            Ok(Output::ok(t))
        }
        Command::LiftTrack { track, cover } => {
            let (t, weights) = doc::from_json::<TrackDoc>(&read(&track)?)?.to_track()?;
            let c = read_cover(&cover)?.canonical();
            let (lifted, l) = lift_track(&t, &c)?;
            let weights = weights.map(|w| l.apply(&w)).transpose()?;
            let out = json!({
                "schema": doc::SCHEMA,
                "cover": CoverDoc::from_cover(&c),
                "track": TrackDoc::from_track(&lifted, weights.as_ref()),
                "matrix": l.matrix(),
            });
            Ok(Output::ok(line(&out)))
        }
        Command::CharRefine { cover, budget: b } => {
            let b = match b {
                Some(b) => b,
                None => budget(REFINEMENT_BUDGET)?,
            };
            let k = characteristic_refinement(&read_cover(&cover)?, b)?;
            Ok(Output::ok(line(&CoverDoc::from_cover(&k))))
        }
        Command::IsChar { cover, auts } => {
            let c = read_cover(&cover)?;
            let auts = read_auts(auts.as_deref())?;
            Ok(Output::ok(format!("{}\n", is_characteristic(&c, &auts)?)))
        }
        Command::VautFromAut { name, cover, auts } => {
            let auts = read_auts(auts.as_deref())?;
            let phi = auts
                .iter()
                .find(|a| a.name == name)
                .ok_or_else(|| Error::InvalidInput(format!("no automorphism named {name:?}")))?;
            let v = TwoArrowVaut::from_automorphism(phi, &read_cover(&cover)?)?;
            Ok(Output::ok(line(&VautDoc::from_vaut(&v))))
        }
        Command::VautAct { vaut, elem } => {
            let v = doc::from_json::<VautDoc>(&read(&vaut)?)?.to_vaut()?;
            let e = read_element(&elem)?;
            Ok(Output::ok(line(&ElementDoc::from_element(&vaut_act(&v, &e)?))))
        }
        Command::Verify { suite, genus, max_degree, jobs } => {
            let surface = Surface::new(genus)?;
            if max_degree == 0 {
                return Err(Error::BadDegree("max degree must be at least 1".into()));
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| Error::InvalidInput(e.to_string()))?;
            pool.install(|| verify(suite, surface, max_degree))
        }
        Command::Orbit { steps, targets, seed } => {
            Ok(Output::ok(orbit_density_experiment(steps, targets, seed).to_string()))
        }
    }
}

/// A failed check: message and the inputs that reproduce it.
type Failure = (String, serde_json::Value);

fn failed(suite: Suite, f: Failure) -> Output {
    Output { text: line(&CounterexampleDoc::new(suite.name(), f.0, f.1)), code: 1 }
}

fn all_covers(surface: Surface, max_degree: usize) -> Result<Vec<CoverSpec>> {
    let b = budget(DEFAULT_BUDGET)?;
    let mut out = Vec::new();
    for d in 1..=max_degree {
        out.extend(enumerate_covers(surface, d, b)?);
    }
    Ok(out)
}

/// The first failure in input order, so that reports are deterministic.
fn first_failure(results: Vec<Result<Option<Failure>>>) -> Result<Option<Failure>> {
    for r in results {
        if let Some(f) = r? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn class_json(u: &HomologyClass) -> serde_json::Value {
    json!(u.coords)
}

fn verify(suite: Suite, surface: Surface, max_degree: usize) -> Result<Output> {
    match suite {
        Suite::RiemannHurwitz => verify_riemann_hurwitz(surface, max_degree),
        Suite::TransferScaling => verify_transfer(surface, max_degree),
        Suite::PairingInvariance => verify_pairing_invariance(surface, max_degree),
        Suite::VautLaws => verify_vaut_laws(surface, max_degree),
        Suite::Theorem3 => verify_theorem3(surface, max_degree),
    }
}

fn degree_table(
    header: &str,
    covers: &[CoverSpec],
    per_cover: &[usize],
    max_degree: usize,
    extra: impl Fn(usize) -> String,
) -> String {
    let mut t = format!("{header}\n");
    for d in 1..=max_degree {
        let n = covers.iter().filter(|c| c.degree() == d).count();
        let checks: usize = covers.iter().zip(per_cover).filter(|(c, _)| c.degree() == d).map(|(_, k)| k).sum();
        writeln!(t, "{d}\t{n}\t{}\t{checks}", extra(d)).unwrap();
    }
    t
}

fn verify_riemann_hurwitz(surface: Surface, max_degree: usize) -> Result<Output> {
    let covers = all_covers(surface, max_degree)?;
    let g = surface.genus();
    let results: Vec<Result<Option<Failure>>> = covers
        .par_iter()
        .map(|c| {
            let k = CoverComplex::new(c)?;
            let formula = c.degree() * (g - 1) + 1;
            let chi = c.degree() as i64 * surface.euler_characteristic();
            if k.genus_from_euler() != formula || k.euler_characteristic() != chi {
                return Ok(Some((
                    format!("genus {} from the complex, {formula} from the degree", k.genus_from_euler()),
                    json!({ "cover": CoverDoc::from_cover(c), "euler_characteristic": k.euler_characteristic() }),
                )));
            }
            Ok(None)
        })
        .collect();
    if let Some(f) = first_failure(results)? {
        return Ok(failed(Suite::RiemannHurwitz, f));
    }
    let ones = vec![1; covers.len()];
    Ok(Output::ok(degree_table("degree\tcovers\tgenus\tchecks", &covers, &ones, max_degree, |d| {
        (d * (g - 1) + 1).to_string()
    })))
}

fn verify_transfer(surface: Surface, max_degree: usize) -> Result<Output> {
    let covers = all_covers(surface, max_degree)?;
    let n = surface.homology_rank();
    let results: Vec<Result<Option<Failure>>> = covers
        .par_iter()
        .map(|c| {
            let k = CoverComplex::new(c)?;
            let d = c.degree() as i64;
            let lifts = (0..n).map(|i| k.transfer(&surface.basis_class(i))).collect::<Result<Vec<_>>>()?;
            for i in 0..n {
                let u = surface.basis_class(i);
                if k.pushforward(&lifts[i])? != u.scale(d) {
                    return Ok(Some((
                        "pushforward of the transfer is not d times the class".into(),
                        json!({ "cover": CoverDoc::from_cover(c), "class": class_json(&u) }),
                    )));
                }
                for j in 0..n {
                    let v = surface.basis_class(j);
                    let (lhs, rhs) = (k.pairing(&lifts[i], &lifts[j])?, d * surface.intersection_form(&u, &v)?);
                    if lhs != rhs {
                        return Ok(Some((
                            format!("pairing of transfers is {lhs}, expected {rhs}"),
                            json!({ "cover": CoverDoc::from_cover(c), "u": class_json(&u), "v": class_json(&v) }),
                        )));
                    }
                }
            }
            Ok(None)
        })
        .collect();
    if let Some(f) = first_failure(results)? {
        return Ok(failed(Suite::TransferScaling, f));
    }
    let per = vec![n + n * n; covers.len()];
    Ok(Output::ok(degree_table("degree\tcovers\tscale\tchecks", &covers, &per, max_degree, |d| d.to_string())))
}

/// Lifting invariance: the transfer of `u` on one cover and of `v` on another
/// always pair to the normalized base pairing. Second covers range over
/// degree at most 2 to keep the common covers small.
fn verify_pairing_invariance(surface: Surface, max_degree: usize) -> Result<Output> {
    let covers = all_covers(surface, max_degree)?;
    let partners: Vec<CoverSpec> = covers.iter().filter(|c| c.degree() <= 2).cloned().collect();
    let n = surface.homology_rank();
    let base = CoverSpec::trivial(surface);
    let kb = CoverComplex::new(&base)?;
    let base_lifts = (0..n).map(|i| kb.transfer(&surface.basis_class(i))).collect::<Result<Vec<_>>>()?;
    let results: Vec<Result<Option<Failure>>> = covers
        .par_iter()
        .map(|c| {
            let k = CoverComplex::new(c)?;
            let lifts = (0..n).map(|i| k.transfer(&surface.basis_class(i))).collect::<Result<Vec<_>>>()?;
            for p in &partners {
                let kp = CoverComplex::new(p)?;
                let plifts = (0..n).map(|i| kp.transfer(&surface.basis_class(i))).collect::<Result<Vec<_>>>()?;
                for i in 0..n {
                    for j in 0..n {
                        let expected = normalized_on(&base, &base_lifts[i], &base_lifts[j])?;
                        let got = crate::homology::normalized_pairing((c, &lifts[i]), (p, &plifts[j]))?;
                        if got != expected {
                            return Ok(Some((
                                format!("normalized pairing {got} after lifting, {expected} on the base"),
                                json!({
                                    "e1": CycleDoc::from_cycle(&lifts[i]),
                                    "e2": CycleDoc::from_cycle(&plifts[j]),
                                }),
                            )));
                        }
                    }
                }
            }
            Ok(None)
        })
        .collect();
    if let Some(f) = first_failure(results)? {
        return Ok(failed(Suite::PairingInvariance, f));
    }
    let per = vec![partners.len() * n * n; covers.len()];
    Ok(Output::ok(degree_table("degree\tcovers\tpartners\tchecks", &covers, &per, max_degree, |_| {
        partners.len().to_string()
    })))
}

fn require_genus2(surface: Surface) -> Result<()> {
    if surface.genus() != 2 {
        return Err(Error::InvalidInput("vaut suites use the shipped genus-2 automorphism list".into()));
    }
    Ok(())
}

/// Base classes and the three-branch track at the bottom of the tower.
fn test_elements(surface: Surface) -> Result<Vec<LimitElement>> {
    let base = CoverSpec::trivial(surface);
    let mut out = (0..surface.homology_rank())
        .map(|i| LimitElement::base_class(&base, &surface.basis_class(i)))
        .collect::<Result<Vec<_>>>()?;
    out.push(LimitElement::track(base, three_branch_track(surface), WeightVector::from_integers(&[2, 1, 1]))?);
    Ok(out)
}

fn vaut_failure(msg: String, v: &TwoArrowVaut, e: &LimitElement) -> Option<Failure> {
    Some((msg, json!({ "vaut": VautDoc::from_vaut(v), "elem": ElementDoc::from_element(e) })))
}

fn verify_vaut_laws(surface: Surface, max_degree: usize) -> Result<Output> {
    require_genus2(surface)?;
    let covers = all_covers(surface, max_degree.min(2))?;
    let auts = genus2_automorphisms();
    let elements = test_elements(surface)?;
    let id = TwoArrowVaut::identity(surface);
    let jobs: Vec<(usize, &CoverSpec)> = (0..auts.len()).flat_map(|a| covers.iter().map(move |c| (a, c))).collect();
    let results: Vec<Result<Option<Failure>>> = jobs
        .par_iter()
        .map(|&(a, c)| {
            let v = TwoArrowVaut::from_automorphism(&auts[a], c)?;
            let inv = vaut_inverse(&v);
            let next = TwoArrowVaut::from_automorphism(&auts[(a + 1) % auts.len()], c)?;
            let vn = vaut_compose(&v, &next)?;
            for e in &elements {
                let direct = vaut_act(&v, e)?;
                if !limit_equal(&vaut_act(&v, &vaut_act(&inv, e)?)?, e)? {
                    return Ok(vaut_failure("inverse law fails".into(), &v, e));
                }
                if !limit_equal(&vaut_act(&vaut_compose(&v, &id)?, e)?, &direct)? {
                    return Ok(vaut_failure("composition with the identity changes the action".into(), &v, e));
                }
                if !limit_equal(&vaut_act(&vn, e)?, &vaut_act(&v, &vaut_act(&next, e)?)?)? {
                    return Ok(vaut_failure("composition is not functorial".into(), &v, e));
                }
                if !limit_equal(&vaut_act(&v, &e.lift_to(c)?)?, &direct)? {
                    return Ok(vaut_failure("action depends on the representative".into(), &v, e));
                }
            }
            Ok(None)
        })
        .collect();
    if let Some(f) = first_failure(results)? {
        return Ok(failed(Suite::VautLaws, f));
    }
    let mut t = String::from("degree\tcovers\tvauts\tchecks\n");
    for d in 1..=max_degree.min(2) {
        let n = covers.iter().filter(|c| c.degree() == d).count();
        writeln!(t, "{d}\t{n}\t{}\t{}", n * auts.len(), n * auts.len() * elements.len() * 4).unwrap();
    }
    Ok(Output::ok(t))
}

/// Pairings of base classes before and after every orientation-preserving
/// automorphism restricted to every cover, as exact rationals.
fn verify_theorem3(surface: Surface, max_degree: usize) -> Result<Output> {
    require_genus2(surface)?;
    let covers = all_covers(surface, max_degree.min(2))?;
    let mut auts = Vec::new();
    for a in genus2_automorphisms() {
        if a.preserves_orientation(&surface)? {
            auts.push(a);
        }
    }
    let elements = test_elements(surface)?;
    let n = surface.homology_rank();
    let jobs: Vec<(usize, usize)> = (0..auts.len()).flat_map(|a| (0..covers.len()).map(move |c| (a, c))).collect();
    type Row = (usize, usize, usize, usize, Rational, Rational);
    let results: Vec<Result<std::result::Result<Vec<Row>, Failure>>> = jobs
        .par_iter()
        .map(|&(a, ci)| {
            let v = TwoArrowVaut::from_automorphism(&auts[a], &covers[ci])?;
            let moved = elements[..n].iter().map(|e| vaut_act(&v, e)).collect::<Result<Vec<_>>>()?;
            let mut rows = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let before = normalized_pairing(&elements[i], &elements[j])?;
                    let after = normalized_pairing(&moved[i], &moved[j])?;
                    if before != after {
                        return Ok(Err((
                            format!("pairing {before} became {after}"),
                            json!({
                                "vaut": VautDoc::from_vaut(&v),
                                "e1": ElementDoc::from_element(&elements[i]),
                                "e2": ElementDoc::from_element(&elements[j]),
                            }),
                        )));
                    }
                    rows.push((a, ci, i, j, before, after));
                }
            }
            Ok(Ok(rows))
        })
        .collect();
    let mut t = String::from("vaut\tcover_degree\tcover\tu\tv\tbefore\tafter\n");
    let names = ["a1", "b1", "a2", "b2"];
    for r in results {
        match r? {
            Err(f) => return Ok(failed(Suite::Theorem3, f)),
            Ok(rows) => {
                for (a, ci, i, j, before, after) in rows {
                    writeln!(
                        t,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        auts[a].name,
                        covers[ci].degree(),
                        ci + 1,
                        names[i],
                        names[j],
                        before,
                        after
                    )
                    .unwrap();
                }
            }
        }
    }
    Ok(Output::ok(t))
}

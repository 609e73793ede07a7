#![allow(dead_code)]

use covertower::covers::{enumerate_covers, CoverSpec, DEFAULT_BUDGET};
use covertower::tower::{genus2_automorphisms, LimitElement, TwoArrowVaut};
use covertower::traintrack::{three_branch_track, WeightVector};
use covertower::Surface;

pub fn g2() -> Surface {
    Surface::new(2).unwrap()
}

pub fn covers_up_to(s: Surface, d: usize) -> Vec<CoverSpec> {
    (1..=d).flat_map(|k| enumerate_covers(s, k, DEFAULT_BUDGET).unwrap()).collect()
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(d - 1) {
        for i in 0..d {
            let mut q = p.clone();
            q.insert(i, d - 1);
            out.push(q);
        }
    }
    out
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // right action: first p, then q
    p.iter().map(|&i| q[i]).collect()
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        out[j] = i;
    }
    out
}

fn transitive(gens: &[&Vec<usize>], d: usize) -> bool {
    let mut seen = vec![false; d];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(s) = stack.pop() {
        for g in gens {
            let t = g[s];
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    seen.iter().all(|&x| x)
}

/// Index-`d` subgroups of the genus-2 surface group counted by brute force:
/// transitive homomorphisms to `S_d` divided by `(d - 1)!`.
pub fn brute_force_subgroup_count(d: usize) -> usize {
    let perms = permutations(d);
    let id: Vec<usize> = (0..d).collect();
    let comm = |a: &Vec<usize>, b: &Vec<usize>| compose(&compose(&compose(a, b), &inverse(a)), &inverse(b));
    let mut homs = 0;
    for a1 in &perms {
        for b1 in &perms {
            let c1 = comm(a1, b1);
            for a2 in &perms {
                for b2 in &perms {
                    if compose(&c1, &comm(a2, b2)) == id && transitive(&[a1, b1, a2, b2], d) {
                        homs += 1;
                    }
                }
            }
        }
    }
    let fact: usize = (1..d).product();
    homs / fact
}

/// Automorphism-derived vauts over every cover of degree at most `d`.
pub fn automorphism_vauts(d: usize) -> Vec<TwoArrowVaut> {
    let mut out = Vec::new();
    for c in covers_up_to(g2(), d) {
        for phi in genus2_automorphisms() {
            out.push(TwoArrowVaut::from_automorphism(&phi, &c).unwrap());
        }
    }
    out
}

/// Base classes on every cover of degree at most 2, plus the three-branch track.
pub fn test_elements() -> Vec<LimitElement> {
    let s = g2();
    let mut out = Vec::new();
    for c in covers_up_to(s, 2) {
        for i in 0..4 {
            out.push(LimitElement::base_class(&c, &s.basis_class(i)).unwrap());
        }
    }
    out.push(
        LimitElement::track(CoverSpec::trivial(s), three_branch_track(s), WeightVector::from_integers(&[2, 1, 1]))
            .unwrap(),
    );
    out
}

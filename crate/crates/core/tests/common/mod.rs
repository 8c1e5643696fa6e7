//! Random instance generators shared by the integration tests.

#![allow(dead_code)]

use admissible::{classify, Arrangement, LocalSystem, ProjLine, ProjPoint, QComplex, Rational};
use rand::seq::SliceRandom;
use rand::Rng;

const DENOMS: [i64; 10] = [1, 2, 2, 2, 3, 3, 4, 4, 6, 12];

pub fn rand_rational<R: Rng>(rng: &mut R, max_num: i64, denoms: &[i64]) -> Rational {
    let d = *denoms.choose(rng).unwrap();
    Rational::new(rng.gen_range(-max_num..=max_num), d)
}

fn rand_line<R: Rng>(rng: &mut R) -> ProjLine {
    loop {
        let a = rand_rational(rng, 4, &[1, 1, 2]);
        let b = rand_rational(rng, 4, &[1, 1, 3]);
        let c = rand_rational(rng, 4, &[1, 2]);
        if let Ok(l) = ProjLine::new(a, b, c) {
            return l;
        }
    }
}

/// A random point on `l` (two free parameters, projectively one).
fn point_on<R: Rng>(rng: &mut R, l: &ProjLine) -> ProjPoint {
    loop {
        let other = rand_line(rng);
        if other != *l {
            return admissible::intersect(l, &other).unwrap();
        }
    }
}

fn rand_point<R: Rng>(rng: &mut R) -> ProjPoint {
    loop {
        let p = ProjPoint::new(
            rand_rational(rng, 4, &[1, 2]),
            rand_rational(rng, 4, &[1, 3]),
            Rational::one(),
        );
        if let Ok(p) = p {
            return p;
        }
    }
}

fn line_through<R: Rng>(rng: &mut R, p: &ProjPoint) -> ProjLine {
    loop {
        let q = rand_point(rng);
        if let Ok(l) = ProjLine::through(p, &q) {
            return l;
        }
    }
}

/// An arrangement with `k(A) ≤ max_k` (for `max_k ≤ 2`) and between `min_lines`
/// and `max_lines` lines. Multiple points are planted on one or two
/// "spine" lines; candidates that pick up an accidental extra multiple point
/// off the spines are rejected by classification.
pub fn rand_small_k_arrangement<R: Rng>(
    rng: &mut R,
    min_lines: usize,
    max_lines: usize,
    max_k: usize,
) -> Arrangement {
    loop {
        let n = rng.gen_range(min_lines..=max_lines);
        let spines = *[0, 1, 2, 2, 2].choose(rng).unwrap().min(&max_k.min(2));
        let mut lines: Vec<ProjLine> = Vec::new();
        let mut pools: Vec<Vec<ProjPoint>> = Vec::new();
        for _ in 0..spines {
            let l = rand_line(rng);
            let pool = (0..rng.gen_range(1..=3)).map(|_| point_on(rng, &l)).collect();
            lines.push(l);
            pools.push(pool);
        }
        while lines.len() < n {
            let mode = rng.gen_range(0..4);
            let candidate = match (mode, pools.len()) {
                (0 | 1, 1..) => {
                    let pool = pools.choose(rng).unwrap();
                    let p = pool.choose(rng).unwrap().clone();
                    line_through(rng, &p)
                }
                (2, 2) => {
                    let p = pools[0].choose(rng).unwrap();
                    let q = pools[1].choose(rng).unwrap();
                    match ProjLine::through(p, q) {
                        Ok(l) => l,
                        Err(_) => continue,
                    }
                }
                _ => rand_line(rng),
            };
            if !lines.contains(&candidate) {
                lines.push(candidate);
            }
        }
        // random labels, so the spines are not always first
        lines.shuffle(rng);
        // two spines may coincide
        let Ok(arr) = Arrangement::build(lines) else {
            continue;
        };
        if classify(&arr).k <= max_k {
            return arr;
        }
    }
}

/// Like [`rand_small_k_arrangement`], with `k(A)` exactly `k`.
pub fn rand_arrangement_with_k<R: Rng>(
    rng: &mut R,
    min_lines: usize,
    max_lines: usize,
    k: usize,
) -> Arrangement {
    loop {
        let arr = rand_small_k_arrangement(rng, min_lines, max_lines, k);
        if classify(&arr).k == k {
            return arr;
        }
    }
}

/// Gaussian-rational classes with denominators ≤ 12 and product one.
pub fn rand_local_system<R: Rng>(rng: &mut R, n: usize) -> LocalSystem {
    let mut classes: Vec<QComplex> = (0..n)
        .map(|_| {
            let re = rand_rational(rng, 12, &DENOMS);
            let im = if rng.gen_bool(0.25) {
                rand_rational(rng, 3, &DENOMS)
            } else {
                Rational::zero()
            };
            QComplex::new(re, im)
        })
        .collect();
    let rest: QComplex = classes[..n - 1].iter().sum();
    classes[n - 1] = -rest;
    LocalSystem::new(classes).unwrap()
}

/// Classes with denominators 2, 3 or 6, mostly real, so that point residues
/// are often positive integers.
pub fn rand_resonant_local_system<R: Rng>(rng: &mut R, n: usize) -> LocalSystem {
    let denoms = [1, 2, 2, 3, 3, 6];
    let mut classes: Vec<QComplex> = (0..n)
        .map(|_| {
            let im = if rng.gen_bool(0.1) {
                rand_rational(rng, 2, &denoms)
            } else {
                Rational::zero()
            };
            QComplex::new(rand_rational(rng, 6, &denoms), im)
        })
        .collect();
    let rest: QComplex = classes[..n - 1].iter().sum();
    classes[n - 1] = -rest;
    LocalSystem::new(classes).unwrap()
}

/// Real classes only, denominators ≤ 12.
pub fn rand_real_local_system<R: Rng>(rng: &mut R, n: usize) -> LocalSystem {
    let mut classes: Vec<QComplex> = (0..n)
        .map(|_| QComplex::real(rand_rational(rng, 12, &DENOMS)))
        .collect();
    let rest: QComplex = classes[..n - 1].iter().sum();
    classes[n - 1] = -rest;
    LocalSystem::new(classes).unwrap()
}

/// A random arrangement with no restriction on `k`: a mix of generic lines
/// and lines through already existing intersection points.
pub fn rand_arrangement<R: Rng>(rng: &mut R, min_lines: usize, max_lines: usize) -> Arrangement {
    let n = rng.gen_range(min_lines..=max_lines);
    let mut lines: Vec<ProjLine> = Vec::new();
    while lines.len() < n {
        let candidate = if lines.len() >= 2 && rng.gen_bool(0.6) {
            let a = lines.choose(rng).unwrap();
            let b = lines.choose(rng).unwrap();
            if a == b {
                continue;
            }
            let p = admissible::intersect(a, b).unwrap();
            line_through(rng, &p)
        } else {
            rand_line(rng)
        };
        if !lines.contains(&candidate) {
            lines.push(candidate);
        }
    }
    Arrangement::build(lines).unwrap()
}

/// A residue vector with small Gaussian-rational entries summing to zero.
pub fn rand_residue_vector<R: Rng>(rng: &mut R, n: usize) -> admissible::ResidueVector {
    let mut entries: Vec<QComplex> = (0..n)
        .map(|_| {
            QComplex::new(
                rand_rational(rng, 12, &DENOMS),
                if rng.gen_bool(0.5) { rand_rational(rng, 3, &DENOMS) } else { Rational::zero() },
            )
        })
        .collect();
    let rest: QComplex = entries[..n - 1].iter().sum();
    entries[n - 1] = -rest;
    admissible::ResidueVector::new(entries).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

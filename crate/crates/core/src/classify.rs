//! The C_k classification: the fewest lines of the arrangement that together
//! contain every point of multiplicity at least 3.

use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::error::ArrangementError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CkClassification {
    pub k: usize,
    /// Every cover of size `k`, each sorted, listed in lexicographic order.
    pub minimal_covers: Vec<Vec<usize>>,
    /// For `k = 3`: some minimal cover consists of three concurrent lines.
    pub concurrent_flag: bool,
}

impl CkClassification {
    /// Minimal covers whose lines all pass through one point.
    pub fn concurrent_covers<'a>(&'a self, arr: &'a Arrangement) -> impl Iterator<Item = &'a Vec<usize>> + 'a {
        self.minimal_covers
            .iter()
            .filter(move |c| c.len() >= 2 && arr.common_point(c).is_some())
    }
}

/// Bitsets over the multiple points: `masks[j]` has bit `t` set iff point `t` is on line `j`.
struct Incidence {
    masks: Vec<Vec<u64>>,
    full: Vec<u64>,
}

impl Incidence {
    fn new(arr: &Arrangement) -> Self {
        let pts = arr.triple_points();
        let words = pts.len().div_ceil(64);
        let mut masks = vec![vec![0u64; words]; arr.num_lines()];
        for (t, p) in pts.iter().enumerate() {
            for &j in &p.incident {
                masks[j][t / 64] |= 1 << (t % 64);
            }
        }
        let mut full = vec![0u64; words];
        for t in 0..pts.len() {
            full[t / 64] |= 1 << (t % 64);
        }
        Incidence { masks, full }
    }

    fn covers(&self, set: &[usize]) -> bool {
        self.full.iter().enumerate().all(|(w, &need)| {
            let got = set.iter().fold(0u64, |acc, &j| acc | self.masks[j][w]);
            got & need == need
        })
    }
}

/// Calls `f` on every `size`-subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, size: usize, mut f: impl FnMut(&[usize])) {
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        f(&idx);
        // advance to the next combination
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - size {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// True iff every point of multiplicity ≥ 3 lies on some line of `set`.
pub fn covers(arr: &Arrangement, set: &[usize]) -> Result<bool, ArrangementError> {
    for &j in set {
        arr.check_index(j)?;
    }
    Ok(Incidence::new(arr).covers(set))
}

pub fn classify(arr: &Arrangement) -> CkClassification {
    let inc = Incidence::new(arr);
    let n = arr.num_lines();
    for size in 0..=n {
        let mut found = Vec::new();
        for_each_subset(n, size, |s| {
            if inc.covers(s) {
                found.push(s.to_vec());
            }
        });
        if !found.is_empty() {
            let concurrent_flag =
                size == 3 && found.iter().any(|c| arr.common_point(c).is_some());
            return CkClassification {
                k: size,
                minimal_covers: found,
                concurrent_flag,
            };
        }
    }
    unreachable!("the full set of lines always covers")
}

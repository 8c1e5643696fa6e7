//! Admissibility of rank-one local systems.
//!
//! A local system `L` is admissible when some lift `α` with `exp(α) = L` has
//! no residue `a_j` and no point sum `a(p)` (over points of multiplicity ≥ 3)
//! in `{1, 2, 3, ...}`. This module checks that condition for a given lift
//! and builds lifts that satisfy it:
//!
//! * `C0`/`C1`: the standard lift based at the covering line already works.
//! * `C2`: shift the second covering line down by the largest positive
//!   integral point residue on it, and the base line up by the same amount.
//! * three concurrent covering lines: the double shift, valid under one of
//!   three combinatorial conditions on the extremal points.
//! * anything else: a bounded search over integer shifts of the standard lift.
//!
//! Every certificate is run through [`verify`] before it is handed out. The
//! procedures never conclude non-admissibility; they answer `Unknown`.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, MultiplePoint, ProjPoint};
use crate::classify::{classify, covers};
use crate::error::{AdmissibilityError, LocalSystemError};
use crate::exact::{QComplex, Rational};
use crate::local_system::{
    point_residues, standard_lift, LocalSystem, PointResidue, ResidueVector,
};

/// Default bound for [`bounded_shift_search`].
pub const DEFAULT_SEARCH_BOUND: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    C0,
    C1,
    C2,
    #[serde(rename = "C3_PROP")]
    C3Prop,
    #[serde(rename = "SEARCH")]
    Search,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::C0 => "C0",
            Method::C1 => "C1",
            Method::C2 => "C2",
            Method::C3Prop => "C3_PROP",
            Method::Search => "SEARCH",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NotExpCompatible { line: usize },
    ResiduePositiveInteger { line: usize, value: QComplex },
    PointPositiveInteger {
        point: ProjPoint,
        incident: Vec<usize>,
        value: QComplex,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the admissibility conditions literally for one lift.
pub fn verify(
    arr: &Arrangement,
    alpha: &ResidueVector,
    ls: &LocalSystem,
) -> Result<VerifyReport, AdmissibilityError> {
    let n = arr.num_lines();
    for len in [alpha.len(), ls.len()] {
        if len != n {
            return Err(LocalSystemError::LengthMismatch { expected: n, got: len }.into());
        }
    }
    let total: QComplex = alpha.entries().iter().sum();
    if !total.is_zero() {
        return Err(LocalSystemError::NonzeroSum(total.to_string()).into());
    }

    let mut violations = Vec::new();
    for (line, (a, c)) in alpha.entries().iter().zip(ls.classes()).enumerate() {
        if !(a - c).is_integer() {
            violations.push(Violation::NotExpCompatible { line });
        }
    }
    for (line, a) in alpha.entries().iter().enumerate() {
        if a.is_positive_integer() {
            violations.push(Violation::ResiduePositiveInteger {
                line,
                value: a.clone(),
            });
        }
    }
    for pr in point_residues(arr, alpha)? {
        if pr.a_p.is_positive_integer() {
            violations.push(Violation::PointPositiveInteger {
                point: pr.point.point,
                incident: pr.point.incident,
                value: pr.a_p,
            });
        }
    }
    Ok(VerifyReport { violations })
}

/// A lift together with its point residues, known to pass [`verify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub method: Method,
    pub cover_used: Vec<usize>,
    #[serde(rename = "residues")]
    pub alpha: ResidueVector,
    pub point_residues: Vec<PointResidue>,
}

impl Certificate {
    /// Verifies `alpha` and wraps it; a failing lift is an internal error
    /// because every caller is backed by a proof that it passes.
    fn issue(
        arr: &Arrangement,
        ls: &LocalSystem,
        alpha: ResidueVector,
        method: Method,
        cover_used: Vec<usize>,
    ) -> Result<Self, AdmissibilityError> {
        let report = verify(arr, &alpha, ls)?;
        if !report.is_ok() {
            return Err(AdmissibilityError::Invariant(format!(
                "{method} certificate for cover {cover_used:?} fails verification: {:?}",
                report.violations
            )));
        }
        Ok(Certificate {
            method,
            cover_used,
            point_residues: point_residues(arr, &alpha)?,
            alpha,
        })
    }

    /// Re-runs [`verify`] against the given arrangement and system.
    pub fn check(&self, arr: &Arrangement, ls: &LocalSystem) -> Result<bool, AdmissibilityError> {
        Ok(verify(arr, &self.alpha, ls)?.is_ok())
    }
}

/// The maximal positive integral point residue on one line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalData {
    pub line: usize,
    /// `m_j`; zero when no candidate point has a positive integral residue.
    pub m: u64,
    /// Points attaining `m`, in canonical order; empty iff `m = 0`.
    pub points: Vec<MultiplePoint>,
}

impl ExtremalData {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn in_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r < Rational::one()
}

/// Extremal points on `line`: among points of multiplicity ≥ 3 on `line`,
/// other than `exclude_point` and off `exclude_line`, those whose residue
/// `a(p)` is a positive integer of maximal size.
///
/// `alpha` must be a standard lift: at most one entry may have real part
/// outside `[0, 1)`, and no candidate point may lie on that entry's line.
pub fn extremal(
    arr: &Arrangement,
    alpha: &ResidueVector,
    line: usize,
    exclude_point: Option<&ProjPoint>,
    exclude_line: Option<usize>,
) -> Result<ExtremalData, AdmissibilityError> {
    arr.check_index(line)?;
    if let Some(l) = exclude_line {
        arr.check_index(l)?;
    }
    if alpha.len() != arr.num_lines() {
        return Err(LocalSystemError::LengthMismatch {
            expected: arr.num_lines(),
            got: alpha.len(),
        }
        .into());
    }
    let outside: Vec<usize> = (0..alpha.len())
        .filter(|&j| !in_unit_interval(&alpha.entries()[j].re))
        .collect();
    if outside.len() > 1 {
        return Err(AdmissibilityError::NotNormalized);
    }

    let mut best: u64 = 0;
    let mut points = Vec::new();
    for p in arr.triple_points() {
        if !p.is_on(line)
            || exclude_point == Some(&p.point)
            || exclude_line.is_some_and(|l| p.is_on(l))
        {
            continue;
        }
        if outside.iter().any(|&b| p.is_on(b)) {
            return Err(AdmissibilityError::NotNormalized);
        }
        let a_p = alpha.point_sum(&p.incident);
        if !a_p.is_positive_integer() {
            continue;
        }
        let value = a_p
            .re
            .to_i64()
            .and_then(|v| u64::try_from(v).ok())
            .ok_or(AdmissibilityError::NotNormalized)?;
        if value > best {
            best = value;
            points.clear();
        }
        if value == best {
            points.push(p);
        }
    }
    Ok(ExtremalData {
        line,
        m: best,
        points,
    })
}

fn check_cover(arr: &Arrangement, cover: &[usize]) -> Result<(), AdmissibilityError> {
    if !covers(arr, cover)? {
        return Err(AdmissibilityError::NotACover(cover.to_vec()));
    }
    let mut sorted = cover.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != cover.len() {
        return Err(AdmissibilityError::NotACover(cover.to_vec()));
    }
    Ok(())
}

fn check_lengths(arr: &Arrangement, ls: &LocalSystem) -> Result<(), AdmissibilityError> {
    if ls.len() != arr.num_lines() {
        return Err(LocalSystemError::LengthMismatch {
            expected: arr.num_lines(),
            got: ls.len(),
        }
        .into());
    }
    Ok(())
}

/// For arrangements covered by at most one line: the standard lift based at
/// the covering line (or at line 0 if there are no multiple points).
pub fn certify_c0_c1(
    arr: &Arrangement,
    ls: &LocalSystem,
    cover: &[usize],
) -> Result<Certificate, AdmissibilityError> {
    check_lengths(arr, ls)?;
    if cover.len() > 1 {
        return Err(AdmissibilityError::CoverSize {
            expected: 1,
            got: cover.len(),
        });
    }
    check_cover(arr, cover)?;
    let base = cover.first().copied().unwrap_or(0);
    let alpha = standard_lift(ls, base)?;
    let method = if cover.is_empty() { Method::C0 } else { Method::C1 };
    Certificate::issue(arr, ls, alpha, method, cover.to_vec())
}

/// The C2 construction with the ordered cover `(l0, l1)`.
pub fn certify_c2(
    arr: &Arrangement,
    ls: &LocalSystem,
    cover: (usize, usize),
) -> Result<Certificate, AdmissibilityError> {
    check_lengths(arr, ls)?;
    let (l0, l1) = cover;
    check_cover(arr, &[l0, l1])?;
    let mut alpha = standard_lift(ls, l0)?;
    let ext = extremal(arr, &alpha, l1, None, Some(l0))?;
    if ext.m > 0 {
        let m = Rational::from(ext.m as i64);
        alpha.add_to(l1, &-&m);
        alpha.add_to(l0, &m);
    }
    Certificate::issue(arr, ls, alpha, Method::C2, vec![l0, l1])
}

/// Intermediate data of the concurrent three-line construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleShift {
    pub cover: [usize; 3],
    /// Common point of the three cover lines.
    pub center: ProjPoint,
    pub lift: ResidueVector,
    pub first: ExtremalData,
    pub second: ExtremalData,
    /// `a_1 − m_1`, `a_2 − m_2`, `a_0 + m_1 + m_2`, other entries unchanged.
    pub shifted: ResidueVector,
}

/// Computes the extremal data on `l1`, `l2` (excluding the common point) for
/// the standard lift based at `l0`, and the doubly shifted lift.
pub fn double_shift(
    arr: &Arrangement,
    ls: &LocalSystem,
    cover: (usize, usize, usize),
) -> Result<DoubleShift, AdmissibilityError> {
    check_lengths(arr, ls)?;
    let (l0, l1, l2) = cover;
    check_cover(arr, &[l0, l1, l2])?;
    let center = arr
        .common_point(&[l0, l1, l2])
        .ok_or_else(|| AdmissibilityError::NotConcurrent(vec![l0, l1, l2]))?;
    let lift = standard_lift(ls, l0)?;
    let first = extremal(arr, &lift, l1, Some(&center), None)?;
    let second = extremal(arr, &lift, l2, Some(&center), None)?;
    let mut shifted = lift.clone();
    let m1 = Rational::from(first.m as i64);
    let m2 = Rational::from(second.m as i64);
    shifted.add_to(l1, &-&m1);
    shifted.add_to(l2, &-&m2);
    shifted.add_to(l0, &(&m1 + &m2));
    Ok(DoubleShift {
        cover: [l0, l1, l2],
        center,
        lift,
        first,
        second,
        shifted,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QFailureReason {
    /// Every extremal point on both lines lies on a line through `q`.
    BothDifferencesEmpty,
    /// One difference set is nonempty, but every candidate pair of extremal
    /// points spans a line of the arrangement.
    NoAdmissiblePair,
}

/// A point `q ≠ O` on the base line at which the three-line condition fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QFailure {
    pub q: ProjPoint,
    pub incident: Vec<usize>,
    /// Extremal points on the first line not on any line through `q`.
    pub first_outside: Vec<ProjPoint>,
    pub second_outside: Vec<ProjPoint>,
    pub reason: QFailureReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ConcurrentOutcome {
    Certified { certificate: Certificate },
    ConditionFailed {
        cover: [usize; 3],
        m1: u64,
        m2: u64,
        failures: Vec<QFailure>,
    },
}

fn shares_line(p: &MultiplePoint, lines: &[usize]) -> bool {
    p.incident.iter().any(|j| lines.binary_search(j).is_ok())
}

fn spanned_line_in_arrangement(p: &MultiplePoint, q: &MultiplePoint) -> bool {
    p.incident.iter().any(|&j| q.is_on(j))
}

/// The three-concurrent-lines construction for the ordered cover `(l0, l1, l2)`.
///
/// Succeeds when one of the extremal sets is empty, or when for every
/// multiple point `q ≠ O` on `l0` either both extremal sets have a point off
/// every line through `q`, or one has such a point `p1` and the other has a
/// point `p2` with the line `p1 p2` not in the arrangement. Otherwise every
/// offending `q` is reported.
pub fn certify_c3_concurrent(
    arr: &Arrangement,
    ls: &LocalSystem,
    cover: (usize, usize, usize),
) -> Result<ConcurrentOutcome, AdmissibilityError> {
    let ds = double_shift(arr, ls, cover)?;
    let [l0, l1, l2] = ds.cover;
    let order = vec![l0, l1, l2];

    let mut failures = Vec::new();
    if !ds.first.is_empty() && !ds.second.is_empty() {
        for q in arr.triple_points() {
            if !q.is_on(l0) || q.point == ds.center {
                continue;
            }
            let p1_out: Vec<&MultiplePoint> = ds
                .first
                .points
                .iter()
                .filter(|p| !shares_line(p, &q.incident))
                .collect();
            let p2_out: Vec<&MultiplePoint> = ds
                .second
                .points
                .iter()
                .filter(|p| !shares_line(p, &q.incident))
                .collect();
            let ok = if !p1_out.is_empty() && !p2_out.is_empty() {
                true
            } else {
                let via_first = p1_out.iter().any(|p1| {
                    ds.second
                        .points
                        .iter()
                        .any(|p2| !spanned_line_in_arrangement(p1, p2))
                });
                let via_second = p2_out.iter().any(|p2| {
                    ds.first
                        .points
                        .iter()
                        .any(|p1| !spanned_line_in_arrangement(p1, p2))
                });
                via_first || via_second
            };
            if !ok {
                let reason = if p1_out.is_empty() && p2_out.is_empty() {
                    QFailureReason::BothDifferencesEmpty
                } else {
                    QFailureReason::NoAdmissiblePair
                };
                failures.push(QFailure {
                    q: q.point.clone(),
                    incident: q.incident.clone(),
                    first_outside: p1_out.iter().map(|p| p.point.clone()).collect(),
                    second_outside: p2_out.iter().map(|p| p.point.clone()).collect(),
                    reason,
                });
            }
        }
    }

    if !failures.is_empty() {
        return Ok(ConcurrentOutcome::ConditionFailed {
            cover: ds.cover,
            m1: ds.first.m,
            m2: ds.second.m,
            failures,
        });
    }
    let certificate = Certificate::issue(arr, ls, ds.shifted, Method::C3Prop, order)?;
    Ok(ConcurrentOutcome::Certified { certificate })
}

/// Integer data for fast screening of shifted lifts: `Some(v)` when the
/// entry (or point sum) is the integer `v`, `None` when it can never become
/// a positive integer under integer shifts.
struct ShiftScreen {
    entries: Vec<Option<i64>>,
    points: Vec<(Vec<usize>, Option<i64>)>,
}

impl ShiftScreen {
    fn new(arr: &Arrangement, alpha: &ResidueVector) -> Self {
        let int_value = |z: &QComplex| {
            if z.is_integer() {
                Some(z.re.to_i64().expect("residue fits in i64"))
            } else {
                None
            }
        };
        ShiftScreen {
            entries: alpha.entries().iter().map(int_value).collect(),
            points: arr
                .triple_points()
                .into_iter()
                .map(|p| {
                    let v = int_value(&alpha.point_sum(&p.incident));
                    (p.incident, v)
                })
                .collect(),
        }
    }

    fn passes(&self, shift: &[i64]) -> bool {
        self.points.iter().all(|(inc, v)| match v {
            Some(v) => v + inc.iter().map(|&j| shift[j]).sum::<i64>() <= 0,
            None => true,
        })
    }
}

/// Visits every `shift` with `|shift_j| ≤ hi_j`-style bounds, `Σ shift = 0`
/// and `Σ |shift_j| = total`, in lexicographic order.
fn visit_shifts(
    lo: &[i64],
    hi: &[i64],
    total: i64,
    f: &mut impl FnMut(&[i64]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn rec(
        pos: usize,
        lo: &[i64],
        hi: &[i64],
        sum: i64,
        abs_left: i64,
        cur: &mut Vec<i64>,
        f: &mut impl FnMut(&[i64]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let n = lo.len();
        if pos == n {
            if sum == 0 && abs_left == 0 {
                return f(cur);
            }
            return ControlFlow::Continue(());
        }
        // remaining capacity for absolute value after this position
        let cap: i64 = (pos + 1..n).map(|j| lo[j].abs().max(hi[j].abs())).sum();
        for v in lo[pos]..=hi[pos] {
            let rest_abs = abs_left - v.abs();
            if rest_abs < 0 {
                continue;
            }
            let rest_sum = -(sum + v);
            if rest_sum.abs() > rest_abs || rest_abs > cap || (rest_abs - rest_sum.abs()) % 2 != 0 {
                continue;
            }
            cur.push(v);
            rec(pos + 1, lo, hi, sum + v, rest_abs, cur, f)?;
            cur.pop();
        }
        ControlFlow::Continue(())
    }
    let mut cur = Vec::with_capacity(lo.len());
    rec(0, lo, hi, 0, total, &mut cur, f)
}

/// Outcome of the bounded search; `tried` counts shifts that reached the
/// full point check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub bound: u32,
    pub tried: u64,
    pub certificate: Option<Certificate>,
}

/// Searches integer shifts `n` with `|n_j| ≤ bound`, `Σ n_j = 0` of the
/// standard lift based at line 0, ordered by `Σ |n_j|` and then
/// lexicographically, returning the first that passes [`verify`].
pub fn shift_search(
    arr: &Arrangement,
    ls: &LocalSystem,
    bound: u32,
) -> Result<SearchOutcome, AdmissibilityError> {
    check_lengths(arr, ls)?;
    let base = standard_lift(ls, 0)?;
    let screen = ShiftScreen::new(arr, &base);
    let b = bound as i64;
    let lo = vec![-b; base.len()];
    // an integral entry v must end up ≤ 0, so its shift is at most −v
    let hi: Vec<i64> = screen
        .entries
        .iter()
        .map(|e| e.map_or(b, |v| b.min(-v)))
        .collect();
    if hi.iter().zip(&lo).any(|(h, l)| h < l) {
        return Ok(SearchOutcome {
            bound,
            tried: 0,
            certificate: None,
        });
    }

    let mut tried = 0u64;
    let mut found: Option<Vec<i64>> = None;
    let max_total = b * base.len() as i64;
    for total in (0..=max_total).step_by(2) {
        let flow = visit_shifts(&lo, &hi, total, &mut |shift| {
            tried += 1;
            if screen.passes(shift) {
                found = Some(shift.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if flow.is_break() {
            break;
        }
    }
    let certificate = match found {
        Some(shift) => {
            let alpha = base.shifted(&shift)?;
            Some(Certificate::issue(arr, ls, alpha, Method::Search, Vec::new())?)
        }
        None => None,
    };
    Ok(SearchOutcome {
        bound,
        tried,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Attempt {
    /// A concurrent-cover attempt whose condition failed.
    ConcurrentFailed {
        cover: [usize; 3],
        m1: u64,
        m2: u64,
        failures: Vec<QFailure>,
    },
    /// A method that was not applicable.
    Skipped { method: Method, reason: String },
    SearchExhausted { bound: u32, tried: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Diagnostics {
    pub k: usize,
    pub attempts: Vec<Attempt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Admissible { certificate: Certificate },
    Unknown { diagnostics: Diagnostics },
}

impl Verdict {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Verdict::Admissible { .. })
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Admissible { certificate } => Some(certificate),
            Verdict::Unknown { .. } => None,
        }
    }

    pub fn diagnostics(&self) -> Option<&Diagnostics> {
        match self {
            Verdict::Admissible { .. } => None,
            Verdict::Unknown { diagnostics } => Some(diagnostics),
        }
    }
}

/// The search on its own, as a verdict.
pub fn bounded_shift_search(
    arr: &Arrangement,
    ls: &LocalSystem,
    bound: u32,
) -> Result<Verdict, AdmissibilityError> {
    let out = shift_search(arr, ls, bound)?;
    Ok(match out.certificate {
        Some(certificate) => Verdict::Admissible { certificate },
        None => Verdict::Unknown {
            diagnostics: Diagnostics {
                k: classify(arr).k,
                attempts: vec![Attempt::SearchExhausted {
                    bound,
                    tried: out.tried,
                }],
            },
        },
    })
}

/// Classifies the arrangement and runs the matching construction over every
/// minimal cover and ordering, falling back to the bounded search.
///
/// For `k ≤ 2` the constructions cannot fail; if one does, this returns
/// [`AdmissibilityError::Invariant`].
pub fn decide(
    arr: &Arrangement,
    ls: &LocalSystem,
    search_bound: u32,
) -> Result<Verdict, AdmissibilityError> {
    check_lengths(arr, ls)?;
    let class = classify(arr);
    let admissible = |certificate| Ok(Verdict::Admissible { certificate });
    if class.k <= 2 {
        // any cover and labeling works; failure of all of them is a defect
        let mut last_err = None;
        for cover in &class.minimal_covers {
            let result = match cover.as_slice() {
                [] | [_] => certify_c0_c1(arr, ls, cover),
                &[a, b] => certify_c2(arr, ls, (a, b)).or_else(|_| certify_c2(arr, ls, (b, a))),
                _ => unreachable!("cover size equals k"),
            };
            match result {
                Ok(certificate) => return admissible(certificate),
                Err(e) => last_err = Some(e),
            }
        }
        return Err(last_err.unwrap_or_else(|| {
            AdmissibilityError::Invariant("no minimal cover found".into())
        }));
    }

    let mut attempts = Vec::new();
    if class.k == 3 {
        let concurrent: Vec<&Vec<usize>> = class.concurrent_covers(arr).collect();
        if concurrent.is_empty() {
            attempts.push(Attempt::Skipped {
                method: Method::C3Prop,
                reason: "no minimal cover of three concurrent lines".into(),
            });
        }
        for cover in concurrent {
            for (a, b, c) in orderings3(cover) {
                match certify_c3_concurrent(arr, ls, (a, b, c))? {
                    ConcurrentOutcome::Certified { certificate } => return admissible(certificate),
                    ConcurrentOutcome::ConditionFailed {
                        cover,
                        m1,
                        m2,
                        failures,
                    } => attempts.push(Attempt::ConcurrentFailed {
                        cover,
                        m1,
                        m2,
                        failures,
                    }),
                }
            }
        }
    } else {
        attempts.push(Attempt::Skipped {
            method: Method::C3Prop,
            reason: format!("arrangement is of class C_{}", class.k),
        });
    }

    let out = shift_search(arr, ls, search_bound)?;
    if let Some(certificate) = out.certificate {
        return admissible(certificate);
    }
    attempts.push(Attempt::SearchExhausted {
        bound: search_bound,
        tried: out.tried,
    });
    Ok(Verdict::Unknown {
        diagnostics: Diagnostics {
            k: class.k,
            attempts,
        },
    })
}

/// The six orderings of a three-element cover, each one used as `(L0, L1, L2)`.
fn orderings3(c: &[usize]) -> Vec<(usize, usize, usize)> {
    let (a, b, d) = (c[0], c[1], c[2]);
    vec![
        (a, b, d),
        (a, d, b),
        (b, a, d),
        (b, d, a),
        (d, a, b),
        (d, b, a),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::ProjLine;

    fn arr(lines: &[(i64, i64, i64)]) -> Arrangement {
        Arrangement::build(
            lines
                .iter()
                .map(|&(a, b, c)| ProjLine::from_ints(a, b, c).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn triangle() -> Arrangement {
        arr(&[(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    }

    #[test]
    fn trivial_system_verifies() {
        let a = triangle();
        let ls = LocalSystem::trivial(3);
        let r = verify(&a, &ResidueVector::zero(3), &ls).unwrap();
        assert!(r.is_ok());
    }

    #[test]
    fn verify_reports_each_violation() {
        let a = triangle();
        let ls = LocalSystem::trivial(3);
        let alpha = ResidueVector::new(vec![(-2).into(), 1.into(), 1.into()]).unwrap();
        let r = verify(&a, &alpha, &ls).unwrap();
        assert_eq!(r.violations.len(), 2);
        let half = LocalSystem::from_real_ratios(&[(1, 2), (1, 2), (0, 1)]).unwrap();
        let r = verify(&a, &ResidueVector::zero(3), &half).unwrap();
        assert_eq!(
            r.violations,
            vec![Violation::NotExpCompatible { line: 0 }, Violation::NotExpCompatible { line: 1 }]
        );
        assert!(verify(&a, &ResidueVector::zero(2), &ls).is_err());
    }

    #[test]
    fn nodal_certificate() {
        let a = triangle();
        let ls = LocalSystem::from_real_ratios(&[(1, 3), (1, 3), (1, 3)]).unwrap();
        let c = certify_c0_c1(&a, &ls, &[]).unwrap();
        assert_eq!(c.method, Method::C0);
        assert!(c.check(&a, &ls).unwrap());
        assert!(matches!(
            certify_c0_c1(&a, &ls, &[0, 1]),
            Err(AdmissibilityError::CoverSize { .. })
        ));
    }

    #[test]
    fn near_pencil_c1() {
        // x=0, y=0, x=y, x=-y through the origin, plus z=0
        let a = arr(&[(1, 0, 0), (0, 1, 0), (1, -1, 0), (1, 1, 0), (0, 0, 1)]);
        let ls = LocalSystem::from_real_ratios(&[(1, 2), (1, 2), (1, 2), (1, 2), (0, 1)]).unwrap();
        let c = certify_c0_c1(&a, &ls, &[0]).unwrap();
        assert_eq!(c.method, Method::C1);
        // center residue = -(sum of residues off the center) <= 0
        assert_eq!(c.point_residues[0].b_p, Rational::zero());
        assert!(matches!(
            certify_c0_c1(&a, &ls, &[4]),
            Err(AdmissibilityError::NotACover(_))
        ));
    }

    #[test]
    fn extremal_trivial_is_empty() {
        let a = arr(&[(1, 0, 0), (0, 1, 0), (1, -1, 0), (0, 0, 1)]);
        let e = extremal(&a, &ResidueVector::zero(4), 0, None, None).unwrap();
        assert_eq!(e.m, 0);
        assert!(e.is_empty());
        assert!(extremal(&a, &ResidueVector::zero(4), 9, None, None).is_err());
    }

    #[test]
    fn extremal_rejects_unnormalized() {
        let a = arr(&[(1, 0, 0), (0, 1, 0), (1, -1, 0), (0, 0, 1)]);
        let alpha = ResidueVector::new(vec![(-2).into(), 2.into(), 1.into(), (-1).into()]).unwrap();
        assert_eq!(
            extremal(&a, &alpha, 0, None, None),
            Err(AdmissibilityError::NotNormalized)
        );
    }

    #[test]
    fn shift_enumeration_order() {
        let lo = vec![-1; 3];
        let hi = vec![1; 3];
        let mut seen = Vec::new();
        for total in [0, 2, 4] {
            let _ = visit_shifts(&lo, &hi, total, &mut |s| {
                seen.push(s.to_vec());
                ControlFlow::Continue(())
            });
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 0, 0],
                vec![-1, 0, 1],
                vec![-1, 1, 0],
                vec![0, -1, 1],
                vec![0, 1, -1],
                vec![1, -1, 0],
                vec![1, 0, -1],
            ]
        );
    }

    #[test]
    fn search_trivial_bound_zero() {
        let a = triangle();
        let v = bounded_shift_search(&a, &LocalSystem::trivial(3), 0).unwrap();
        let c = v.certificate().unwrap();
        assert!(c.alpha.is_zero());
        assert_eq!(c.method, Method::Search);
    }

    #[test]
    fn concurrent_requires_common_point() {
        let a = triangle();
        assert!(matches!(
            certify_c3_concurrent(&a, &LocalSystem::trivial(3), (0, 1, 2)),
            Err(AdmissibilityError::NotConcurrent(_))
        ));
    }
}

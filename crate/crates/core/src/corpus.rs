//! Built-in worked examples, encoded exactly.
//!
//! * `suciu_deleted_b3`: the deleted B3 arrangement (8 lines, `z = 0` last).
//! * `c3_all_admissible`: eleven affine lines, three concurrent ones covering
//!   every triple point.
//! * `c3_partial`: seven affine lines plus the line at infinity.
//!
//! Documented coordinates are recorded as published. Where they disagree
//! with the intersection of the listed equations, a [`Note`] says so and the
//! computed value is the one to trust.

use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, ProjPoint};
use crate::error::ArrangementError;
use crate::exact::{QComplex, Rational};
use crate::format::{ArrangementFile, LineSpec};
use crate::local_system::LocalSystem;

pub const NAMES: [&str; 3] = ["suciu_deleted_b3", "c3_all_admissible", "c3_partial"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentedPoint {
    pub label: String,
    pub incident: Vec<usize>,
    /// As published; `None` where no coordinates were given.
    pub coords: Option<ProjPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Note {
    CoordinateDiscrepancy {
        label: String,
        documented: ProjPoint,
        computed: ProjPoint,
    },
    LineCountDiscrepancy { announced: usize, listed: usize },
    /// Multiple points produced by the listed equations but not documented.
    UndocumentedPoints { points: Vec<DocumentedPoint> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedSystem {
    pub name: String,
    pub classes: Vec<QComplex>,
}

impl NamedSystem {
    pub fn local_system(&self) -> LocalSystem {
        LocalSystem::new(self.classes.clone()).expect("corpus systems multiply to one")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub lines: Vec<LineSpec>,
    pub documented_multiple_points: Vec<DocumentedPoint>,
    pub documented_k: usize,
    pub notes: Vec<Note>,
    pub systems: Vec<NamedSystem>,
}

impl CorpusEntry {
    pub fn arrangement(&self) -> Arrangement {
        self.file().build().expect("corpus arrangements are valid")
    }

    pub fn file(&self) -> ArrangementFile {
        ArrangementFile {
            lines: self.lines.clone(),
        }
    }

    /// Multiple points the equations produce beyond the documented ones.
    pub fn undocumented_points(&self) -> Vec<&DocumentedPoint> {
        self.notes
            .iter()
            .flat_map(|n| match n {
                Note::UndocumentedPoints { points } => points.iter().collect(),
                _ => Vec::new(),
            })
            .collect()
    }

    pub fn point(&self, label: &str) -> Option<&DocumentedPoint> {
        self.documented_multiple_points.iter().find(|p| p.label == label)
    }

    pub fn system(&self, name: &str) -> Option<LocalSystem> {
        self.systems
            .iter()
            .find(|s| s.name == name)
            .map(NamedSystem::local_system)
    }

    /// The coordinates a documented point should have after taking the
    /// recorded discrepancies into account.
    pub fn expected_coords(&self, label: &str) -> Option<ProjPoint> {
        for note in &self.notes {
            if let Note::CoordinateDiscrepancy { label: l, computed, .. } = note {
                if l == label {
                    return Some(computed.clone());
                }
            }
        }
        self.point(label).and_then(|p| p.coords.clone())
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("unknown corpus entry `{0}` (known: suciu_deleted_b3, c3_all_admissible, c3_partial)")]
pub struct UnknownEntry(pub String);

pub fn list() -> Vec<&'static str> {
    NAMES.to_vec()
}

pub fn get(name: &str) -> Result<CorpusEntry, UnknownEntry> {
    match name {
        "suciu_deleted_b3" => Ok(suciu_deleted_b3()),
        "c3_all_admissible" => Ok(c3_all_admissible()),
        "c3_partial" => Ok(c3_partial()),
        _ => Err(UnknownEntry(name.to_string())),
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn aff(x: Rational, y: Rational) -> Option<ProjPoint> {
    Some(ProjPoint::affine(x, y))
}

fn proj(x: i64, y: i64, z: i64) -> Option<ProjPoint> {
    ProjPoint::from_ints(x, y, z).ok()
}

fn doc(label: &str, incident: &[usize], coords: Option<ProjPoint>) -> DocumentedPoint {
    DocumentedPoint {
        label: label.to_string(),
        incident: incident.to_vec(),
        coords,
    }
}

fn slope(m: Rational, b: Rational) -> LineSpec {
    LineSpec::affine(m, b)
}

fn real_classes(parts: &[(i64, i64)]) -> Vec<QComplex> {
    parts.iter().map(|&(n, d)| QComplex::from_ratio(n, d)).collect()
}

fn suciu_deleted_b3() -> CorpusEntry {
    let lines = vec![
        LineSpec::Vertical(r(0, 1)),  // L0: x = 0
        LineSpec::homog(1, -1, 0),    // L1: x = y
        LineSpec::homog(0, 1, 0),     // L2: y = 0
        LineSpec::homog(1, 0, -1),    // L3: x = z
        LineSpec::homog(0, 1, -1),    // L4: y = z
        LineSpec::homog(1, -1, 1),    // L5: x - y + z = 0
        LineSpec::homog(1, -1, -1),   // L6: x - y - z = 0
        LineSpec::Infinity,           // L7: z = 0
    ];
    let points = vec![
        doc("O", &[0, 1, 2], proj(0, 0, 1)),
        doc("p1", &[1, 3, 4], proj(1, 1, 1)),
        doc("p1'", &[1, 5, 6, 7], proj(1, 1, 0)),
        doc("p2", &[2, 3, 6], proj(1, 0, 1)),
        doc("p2'", &[2, 4, 7], proj(1, 0, 0)),
        doc("q1", &[0, 4, 5], None),
        doc("q2", &[0, 3, 7], proj(0, 1, 0)),
    ];
    // ρ = (1,-1,-1,-1,1,1,1,-1): classes 0 or 1/2
    let rho = real_classes(&[(0, 1), (1, 2), (1, 2), (1, 2), (0, 1), (0, 1), (0, 1), (1, 2)]);
    // ρ ⊗ (t,1,t⁻¹,t⁻¹,t,t⁻²,t²,1) at t = exp(2πi/3)
    let w_dir = [1i64, 0, -1, -1, 1, -2, 2, 0];
    let rho_w: Vec<QComplex> = rho
        .iter()
        .zip(w_dir)
        .map(|(c, e)| c + &QComplex::from_ratio(e, 3))
        .collect();
    CorpusEntry {
        name: "suciu_deleted_b3".into(),
        lines,
        documented_multiple_points: points,
        documented_k: 3,
        notes: Vec::new(),
        systems: vec![
            NamedSystem {
                name: "rho".into(),
                classes: rho,
            },
            NamedSystem {
                name: "rho_w_third".into(),
                classes: rho_w,
            },
        ],
    }
}

fn c3_all_admissible() -> CorpusEntry {
    let lines = vec![
        LineSpec::Vertical(r(0, 1)),     // L0: x = 0
        slope(r(1, 2), r(3, 2)),         // L1: y = 1/2 (x + 3)
        slope(r(-1, 2), r(3, 2)),        // L2: y = -1/2 (x - 3)
        slope(r(1, 1), r(1, 1)),         // L3: y = x + 1
        slope(r(-1, 1), r(1, 1)),        // L4: y = -(x - 1)
        slope(r(2, 1), r(2, 1)),         // L5: y = 2 (x + 1)
        slope(r(-2, 1), r(2, 1)),        // L6: y = -2 (x - 1)
        slope(r(3, 2), r(9, 2)),         // L7: y = 3/2 (x + 3)
        slope(r(-3, 2), r(-9, 2)),       // L8: y = -3/2 (x + 3)
        slope(r(5, 2), r(-15, 2)),       // L9: y = 5/2 (x - 3)
        slope(r(-5, 2), r(15, 2)),       // L10: y = -5/2 (x - 3)
    ];
    let points = vec![
        doc("O", &[0, 1, 2], aff(r(0, 1), r(3, 2))),
        doc("q1", &[0, 3, 4], aff(r(0, 1), r(1, 1))),
        doc("q2", &[0, 5, 6], aff(r(0, 1), r(2, 1))),
        doc("p1", &[1, 7, 8], aff(r(-3, 1), r(0, 1))),
        doc("p2", &[2, 9, 10], aff(r(3, 1), r(0, 1))),
    ];
    CorpusEntry {
        name: "c3_all_admissible".into(),
        lines,
        documented_multiple_points: points,
        documented_k: 3,
        notes: vec![
            Note::LineCountDiscrepancy {
                announced: 10,
                listed: 11,
            },
            Note::UndocumentedPoints {
                points: vec![
                    doc("L1∩L4∩L5", &[1, 4, 5], aff(r(-1, 3), r(4, 3))),
                    doc("L2∩L3∩L6", &[2, 3, 6], aff(r(1, 3), r(4, 3))),
                ],
            },
        ],
        systems: Vec::new(),
    }
}

fn c3_partial() -> CorpusEntry {
    let lines = vec![
        LineSpec::Vertical(r(0, 1)),     // L0: x = 0
        slope(r(-2, 1), r(2, 1)),        // L1: y = -2 (x - 1)
        slope(r(2, 1), r(2, 1)),         // L2: y = 2 (x + 1)
        slope(r(-1, 1), r(1, 1)),        // L3: y = -(x - 1)
        slope(r(1, 1), r(1, 1)),         // L4: y = x + 1
        slope(r(-1, 3), r(-1, 3)),       // L5: y = -1/3 (x + 1)
        slope(r(1, 3), r(-1, 3)),        // L6: y = 1/3 (x - 1)
        LineSpec::Infinity,              // L7
    ];
    let points = vec![
        doc("O", &[0, 1, 2], aff(r(0, 1), r(2, 1))),
        doc("p1", &[1, 3, 6], aff(r(0, 1), r(1, 1))),
        doc("p2", &[2, 4, 5], aff(r(-1, 1), r(0, 1))),
        doc("q1", &[0, 5, 6], aff(r(0, 1), r(-1, 3))),
        doc("q2", &[0, 3, 4], aff(r(0, 1), r(1, 1))),
    ];
    // a(p1) = a1 + a3 + a6 = 1 and a(p2) = a2 + a4 + a5 = 1, with
    // cancelling imaginary parts on L3, L6 and an imaginary part on L7
    let third = r(1, 3);
    let mut classes = real_classes(&[(4, 5), (1, 2), (1, 2), (1, 4), (1, 3), (1, 6), (1, 4), (1, 5)]);
    classes[3].im = third.clone();
    classes[6].im = -&third;
    classes[7].im = r(1, 7);
    classes[0].im = r(-1, 7);
    CorpusEntry {
        name: "c3_partial".into(),
        lines,
        documented_multiple_points: points,
        documented_k: 3,
        notes: vec![Note::CoordinateDiscrepancy {
            label: "p1".into(),
            documented: ProjPoint::affine(r(0, 1), r(1, 1)),
            computed: ProjPoint::affine(r(1, 1), r(0, 1)),
        }],
        systems: vec![NamedSystem {
            name: "both_extremal".into(),
            classes,
        }],
    }
}

/// Looks up an arrangement by corpus name.
pub fn arrangement(name: &str) -> Result<Arrangement, UnknownEntry> {
    get(name).map(|e| e.arrangement())
}

/// Compares a rebuilt arrangement with the documented incidences; returns
/// the labels that do not match.
pub fn mismatches(entry: &CorpusEntry) -> Result<Vec<String>, ArrangementError> {
    let arr = entry.file().build()?;
    let computed = arr.triple_points();
    let mut bad = Vec::new();
    let undocumented = entry.undocumented_points();
    for p in entry.documented_multiple_points.iter().chain(undocumented.iter().copied()) {
        let found = computed.iter().find(|c| c.incident == p.incident);
        let ok = match found {
            None => false,
            Some(c) => match entry.expected_coords(&p.label) {
                Some(expected) => expected == c.point,
                None => true,
            },
        };
        if !ok {
            bad.push(p.label.clone());
        }
    }
    let expected = entry.documented_multiple_points.len() + undocumented.len();
    if computed.len() != expected {
        bad.push(format!("count: expected {expected}, computed {}", computed.len()));
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;

    #[test]
    fn every_entry_matches_its_documentation() {
        for name in list() {
            let e = get(name).unwrap();
            assert_eq!(mismatches(&e).unwrap(), Vec::<String>::new(), "{name}");
            assert_eq!(classify(&e.arrangement()).k, e.documented_k, "{name}");
        }
    }

    #[test]
    fn sizes() {
        let s = get("suciu_deleted_b3").unwrap().arrangement();
        assert_eq!((s.num_lines(), s.triple_points().len()), (8, 7));
        let a = get("c3_all_admissible").unwrap().arrangement();
        // five documented triple points plus two the equations also produce
        assert_eq!((a.num_lines(), a.triple_points().len()), (11, 7));
        assert_eq!(get("c3_all_admissible").unwrap().undocumented_points().len(), 2);
        let p = get("c3_partial").unwrap().arrangement();
        assert_eq!((p.num_lines(), p.triple_points().len()), (8, 5));
    }

    #[test]
    fn p1_discrepancy_is_real() {
        let e = get("c3_partial").unwrap();
        let arr = e.arrangement();
        let p1 = arr
            .triple_points()
            .into_iter()
            .find(|p| p.incident == [1, 3, 6])
            .unwrap();
        assert_eq!(p1.point, ProjPoint::affine(r(1, 1), r(0, 1)));
        assert_ne!(Some(p1.point), e.point("p1").unwrap().coords);
    }

    #[test]
    fn unknown_name() {
        assert!(get("nope").is_err());
    }

    #[test]
    fn systems_are_valid() {
        let e = get("suciu_deleted_b3").unwrap();
        let rho = e.system("rho").unwrap();
        assert_eq!(rho.len(), 8);
        let w = e.system("rho_w_third").unwrap();
        assert_eq!(w.classes()[5], QComplex::from_ratio(1, 3));
        assert!(get("c3_partial").unwrap().system("both_extremal").is_some());
    }
}

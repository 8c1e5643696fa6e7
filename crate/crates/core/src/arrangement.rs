//! Projective lines over Q, their intersection points, and deconing.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ArrangementError;
use crate::exact::Rational;

/// Scales a nonzero triple so that its first nonzero entry is 1.
fn normalize(mut v: [Rational; 3]) -> Option<[Rational; 3]> {
    let lead = v.iter().find(|x| !x.is_zero())?.clone();
    for x in v.iter_mut() {
        *x = &*x / &lead;
    }
    Some(v)
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// The line `a·x + b·y + c·z = 0`, normalized so the first nonzero coefficient is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ProjLine {
    coeffs: [Rational; 3],
}

impl ProjLine {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, ArrangementError> {
        normalize([a, b, c])
            .map(|coeffs| ProjLine { coeffs })
            .ok_or(ArrangementError::ZeroLine)
    }

    /// `y = slope·x + intercept`, i.e. `slope·x − y + intercept·z = 0`.
    pub fn affine(slope: Rational, intercept: Rational) -> Self {
        Self::new(slope, Rational::from_integer(-1), intercept).expect("nonzero y coefficient")
    }

    /// `x = c`.
    pub fn vertical(c: Rational) -> Self {
        Self::new(Rational::one(), Rational::zero(), -c).expect("nonzero x coefficient")
    }

    /// `z = 0`.
    pub fn infinity() -> Self {
        ProjLine {
            coeffs: [Rational::zero(), Rational::zero(), Rational::one()],
        }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self, ArrangementError> {
        Self::new(a.into(), b.into(), c.into())
    }

    /// The line through two distinct points.
    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<Self, ArrangementError> {
        let c = cross(&p.coords, &q.coords);
        normalize(c)
            .map(|coeffs| ProjLine { coeffs })
            .ok_or(ArrangementError::DegeneratePair)
    }

    pub fn coeffs(&self) -> &[Rational; 3] {
        &self.coeffs
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        dot(&self.coeffs, &p.coords).is_zero()
    }

    pub fn is_infinity(&self) -> bool {
        *self == Self::infinity()
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coeffs;
        write!(f, "[{a} : {b} : {c}]")
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coeffs;
        write!(f, "({a})x + ({b})y + ({c})z = 0")
    }
}

/// A point of the projective plane, normalized so the first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ProjPoint {
    coords: [Rational; 3],
}

impl ProjPoint {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Result<Self, ArrangementError> {
        normalize([x, y, z])
            .map(|coords| ProjPoint { coords })
            .ok_or(ArrangementError::ZeroPoint)
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self, ArrangementError> {
        Self::new(x.into(), y.into(), z.into())
    }

    /// The affine point `(x, y)` in the chart `z = 1`.
    pub fn affine(x: Rational, y: Rational) -> Self {
        Self::new(x, y, Rational::one()).expect("z = 1")
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords[2].is_zero()
    }

    /// Affine coordinates in the chart `z = 1`, if the point is finite.
    pub fn to_affine(&self) -> Option<(Rational, Rational)> {
        let [x, y, z] = &self.coords;
        if z.is_zero() {
            None
        } else {
            Some((x / z, y / z))
        }
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.coords;
        write!(f, "({x}:{y}:{z})")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for ProjLine {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [a, b, c] = <[Rational; 3]>::deserialize(deserializer)?;
        ProjLine::new(a, b, c).map_err(serde::de::Error::custom)
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [x, y, z] = <[Rational; 3]>::deserialize(deserializer)?;
        ProjPoint::new(x, y, z).map_err(serde::de::Error::custom)
    }
}

/// Intersection of two distinct lines.
pub fn intersect(l1: &ProjLine, l2: &ProjLine) -> Result<ProjPoint, ArrangementError> {
    normalize(cross(&l1.coeffs, &l2.coeffs))
        .map(|coords| ProjPoint { coords })
        .ok_or(ArrangementError::DegeneratePair)
}

/// An intersection point together with the sorted indices of the lines through it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntersectionPoint {
    pub point: ProjPoint,
    pub incident: Vec<usize>,
}

impl IntersectionPoint {
    pub fn multiplicity(&self) -> usize {
        self.incident.len()
    }

    pub fn is_on(&self, line: usize) -> bool {
        self.incident.binary_search(&line).is_ok()
    }
}

/// A point of multiplicity at least 3.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiplePoint {
    pub point: ProjPoint,
    pub incident: Vec<usize>,
    pub multiplicity: usize,
}

impl MultiplePoint {
    pub fn is_on(&self, line: usize) -> bool {
        self.incident.binary_search(&line).is_ok()
    }
}

impl From<&IntersectionPoint> for MultiplePoint {
    fn from(p: &IntersectionPoint) -> Self {
        MultiplePoint {
            point: p.point.clone(),
            incident: p.incident.clone(),
            multiplicity: p.incident.len(),
        }
    }
}

/// A finite set of distinct projective lines with all their intersection points.
///
/// Points are stored in canonical order (lexicographic on incident index lists),
/// double points included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    lines: Vec<ProjLine>,
    points: Vec<IntersectionPoint>,
}

impl Arrangement {
    pub fn build(lines: Vec<ProjLine>) -> Result<Self, ArrangementError> {
        if lines.len() < 2 {
            return Err(ArrangementError::TooFewLines(lines.len()));
        }
        let mut seen: BTreeMap<&ProjLine, usize> = BTreeMap::new();
        for (j, l) in lines.iter().enumerate() {
            if let Some(&i) = seen.get(l) {
                return Err(ArrangementError::DuplicateLine { first: i, second: j });
            }
            seen.insert(l, j);
        }

        let mut groups: BTreeMap<ProjPoint, BTreeSet<usize>> = BTreeMap::new();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let p = intersect(&lines[i], &lines[j])?;
                let set = groups.entry(p).or_default();
                set.insert(i);
                set.insert(j);
            }
        }
        let mut points: Vec<IntersectionPoint> = groups
            .into_iter()
            .map(|(point, incident)| IntersectionPoint {
                point,
                incident: incident.into_iter().collect(),
            })
            .collect();
        points.sort_by(|a, b| a.incident.cmp(&b.incident));
        Ok(Arrangement { lines, points })
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    /// All intersection points, including double points.
    pub fn points(&self) -> &[IntersectionPoint] {
        &self.points
    }

    pub fn check_index(&self, index: usize) -> Result<(), ArrangementError> {
        if index < self.lines.len() {
            Ok(())
        } else {
            Err(ArrangementError::InvalidIndex {
                index,
                len: self.lines.len(),
            })
        }
    }

    /// Points with at least `min_mult` incident lines, in canonical order.
    pub fn multiple_points(&self, min_mult: usize) -> Vec<MultiplePoint> {
        self.points
            .iter()
            .filter(|p| p.multiplicity() >= min_mult)
            .map(MultiplePoint::from)
            .collect()
    }

    /// The points of multiplicity at least 3.
    pub fn triple_points(&self) -> Vec<MultiplePoint> {
        self.multiple_points(3)
    }

    pub fn index_of(&self, line: &ProjLine) -> Option<usize> {
        self.lines.iter().position(|l| l == line)
    }

    pub fn contains_line(&self, line: &ProjLine) -> bool {
        self.index_of(line).is_some()
    }

    /// Index of the line `z = 0`, if it belongs to the arrangement.
    pub fn infinity_index(&self) -> Option<usize> {
        self.lines.iter().position(ProjLine::is_infinity)
    }

    /// The stored point at `p`, if `p` is an intersection point.
    pub fn point_at(&self, p: &ProjPoint) -> Option<&IntersectionPoint> {
        self.points.iter().find(|ip| &ip.point == p)
    }

    /// Sorted indices of the lines through `p` (may be empty or a single line).
    pub fn lines_through(&self, p: &ProjPoint) -> Vec<usize> {
        (0..self.lines.len())
            .filter(|&j| self.lines[j].contains(p))
            .collect()
    }

    /// The common point of the given lines, if they are concurrent.
    pub fn common_point(&self, indices: &[usize]) -> Option<ProjPoint> {
        let (&a, rest) = indices.split_first()?;
        let &b = rest.first()?;
        let p = intersect(&self.lines[a], &self.lines[b]).ok()?;
        indices
            .iter()
            .all(|&j| self.lines[j].contains(&p))
            .then_some(p)
    }

    /// Same lines, reordered so that new line `k` is old line `perm[k]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, ArrangementError> {
        let lines = perm.iter().map(|&i| self.lines[i].clone()).collect();
        Self::build(lines)
    }

    /// Sends line `i` to infinity and describes what remains affinely.
    pub fn decone(&self, i: usize) -> Result<AffineArrangement, ArrangementError> {
        self.check_index(i)?;
        let affine_points: Vec<IntersectionPoint> =
            self.points.iter().filter(|p| !p.is_on(i)).cloned().collect();
        let mut parallel_classes: Vec<Vec<usize>> = self
            .points
            .iter()
            .filter(|p| p.is_on(i))
            .map(|p| p.incident.iter().copied().filter(|&j| j != i).collect())
            .collect();
        parallel_classes.sort();
        Ok(AffineArrangement {
            removed_line: i,
            remaining: (0..self.lines.len()).filter(|&j| j != i).collect(),
            affine_points,
            parallel_classes,
        })
    }
}

/// An arrangement seen in the affine chart complementary to one removed line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineArrangement {
    pub removed_line: usize,
    /// Indices (in the projective arrangement) of the lines that stay affine.
    pub remaining: Vec<usize>,
    pub affine_points: Vec<IntersectionPoint>,
    /// Remaining lines grouped by their point on the removed line.
    pub parallel_classes: Vec<Vec<usize>>,
}

impl AffineArrangement {
    pub fn are_parallel(&self, a: usize, b: usize) -> bool {
        self.parallel_classes
            .iter()
            .any(|c| c.contains(&a) && c.contains(&b))
    }

    /// Rebuilds the projective incidence data: affine points plus one point per
    /// parallel class on the removed line.
    pub fn recone_incidences(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .affine_points
            .iter()
            .map(|p| p.incident.clone())
            .collect();
        for class in &self.parallel_classes {
            let mut inc = class.clone();
            inc.push(self.removed_line);
            inc.sort_unstable();
            out.push(inc);
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(a: i64, b: i64, c: i64) -> ProjLine {
        ProjLine::from_ints(a, b, c).unwrap()
    }

    fn pt(x: i64, y: i64, z: i64) -> ProjPoint {
        ProjPoint::from_ints(x, y, z).unwrap()
    }

    #[test]
    fn normalization_makes_equal_lines_equal() {
        assert_eq!(line(2, -2, 4), line(1, -1, 2));
        assert_eq!(line(0, -3, 3), line(0, 1, -1));
        assert!(ProjLine::from_ints(0, 0, 0).is_err());
        assert!(ProjPoint::from_ints(0, 0, 0).is_err());
    }

    #[test]
    fn intersections() {
        // x=0, y=0
        assert_eq!(intersect(&line(1, 0, 0), &line(0, 1, 0)).unwrap(), pt(0, 0, 1));
        // x=y, x-y-z=0
        assert_eq!(intersect(&line(1, -1, 0), &line(1, -1, -1)).unwrap(), pt(1, 1, 0));
        // x=z, y=z
        assert_eq!(intersect(&line(1, 0, -1), &line(0, 1, -1)).unwrap(), pt(1, 1, 1));
        assert_eq!(
            intersect(&line(1, 2, 3), &line(2, 4, 6)),
            Err(ArrangementError::DegeneratePair)
        );
    }

    #[test]
    fn intersection_lies_on_both() {
        let a = line(3, -7, 2);
        let b = line(-1, 5, 11);
        let p = intersect(&a, &b).unwrap();
        assert!(a.contains(&p) && b.contains(&p));
    }

    #[test]
    fn generic_triangle() {
        let arr = Arrangement::build(vec![line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)]).unwrap();
        assert_eq!(arr.points().len(), 3);
        assert!(arr.points().iter().all(|p| p.multiplicity() == 2));
        assert!(arr.triple_points().is_empty());
        let aff = arr.decone(1).unwrap();
        assert_eq!(aff.affine_points.len(), 1);
        assert_eq!(aff.parallel_classes, vec![vec![0], vec![2]]);
    }

    #[test]
    fn duplicate_lines_are_named() {
        let err = Arrangement::build(vec![line(1, 0, 0), line(0, 1, 0), line(2, 0, 0)]).unwrap_err();
        assert_eq!(err, ArrangementError::DuplicateLine { first: 0, second: 2 });
        assert_eq!(
            Arrangement::build(vec![line(1, 0, 0)]).unwrap_err(),
            ArrangementError::TooFewLines(1)
        );
    }

    #[test]
    fn pencil_deconed_at_member() {
        // four lines through (0:0:1)
        let arr = Arrangement::build(vec![
            line(1, 0, 0),
            line(0, 1, 0),
            line(1, -1, 0),
            line(1, 1, 0),
        ])
        .unwrap();
        assert_eq!(arr.points().len(), 1);
        let aff = arr.decone(2).unwrap();
        assert!(aff.affine_points.is_empty());
        assert_eq!(aff.parallel_classes, vec![vec![0, 1, 3]]);
        assert!(arr.decone(4).is_err());
    }

    #[test]
    fn common_point_detection() {
        let arr = Arrangement::build(vec![
            line(1, 0, 0),
            line(0, 1, 0),
            line(1, -1, 0),
            line(0, 0, 1),
        ])
        .unwrap();
        assert_eq!(arr.common_point(&[0, 1, 2]), Some(pt(0, 0, 1)));
        assert_eq!(arr.common_point(&[0, 1, 3]), None);
        assert_eq!(arr.infinity_index(), Some(3));
    }

    #[test]
    fn points_deserialize_normalized() {
        let p: ProjPoint = serde_json::from_str(r#"["0", "2", "4"]"#).unwrap();
        assert_eq!(p, pt(0, 1, 2));
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["0","1","2"]"#);
        assert!(serde_json::from_str::<ProjLine>(r#"["0", "0", "0"]"#).is_err());
    }

    #[test]
    fn line_through_points() {
        let l = ProjLine::through(&pt(1, 0, 1), &pt(1, 1, 0)).unwrap();
        assert_eq!(l, line(1, -1, -1));
        assert!(ProjLine::through(&pt(1, 2, 3), &pt(2, 4, 6)).is_err());
    }
}

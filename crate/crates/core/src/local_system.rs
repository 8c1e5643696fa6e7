//! Rank-one local systems as residue classes modulo Z, their exact lifts,
//! and point residues.
//!
//! A local system on the complement of `n + 1` lines is a choice of monodromies
//! `λ_j = exp(2πi a_j)` with product one. Since `exp(2πi ·)` has kernel Z, the
//! class of `a_j` modulo Z determines `λ_j`, and the product-one condition
//! becomes: the classes sum to an integer. We store the class with real part
//! reduced to `[0, 1)` and imaginary part as given.

use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, MultiplePoint};
use crate::error::LocalSystemError;
use crate::exact::{QComplex, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalSystem {
    classes: Vec<QComplex>,
}

impl LocalSystem {
    /// Reduces real parts modulo Z and checks that the classes multiply to one.
    pub fn new(classes: Vec<QComplex>) -> Result<Self, LocalSystemError> {
        let total: QComplex = classes.iter().sum();
        if !total.im.is_zero() {
            return Err(LocalSystemError::ImaginarySum(total.im.to_string()));
        }
        if !total.re.is_integer() {
            return Err(LocalSystemError::RealSumNotIntegral(total.re.to_string()));
        }
        let classes = classes
            .into_iter()
            .map(|c| QComplex::new(c.re.fractional_part(), c.im))
            .collect();
        Ok(LocalSystem { classes })
    }

    /// Convenience constructor from real parts `(numerator, denominator)`.
    pub fn from_real_ratios(parts: &[(i64, i64)]) -> Result<Self, LocalSystemError> {
        Self::new(parts.iter().map(|&(n, d)| QComplex::from_ratio(n, d)).collect())
    }

    pub fn trivial(n: usize) -> Self {
        LocalSystem {
            classes: vec![QComplex::zero(); n],
        }
    }

    pub fn classes(&self) -> &[QComplex] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.classes.iter().all(QComplex::is_zero)
    }

    /// Tensor product of local systems: classes add.
    pub fn tensor(&self, other: &LocalSystem) -> Result<Self, LocalSystemError> {
        if self.len() != other.len() {
            return Err(LocalSystemError::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Self::new(
            self.classes
                .iter()
                .zip(&other.classes)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Same system with lines reordered: new line `k` is old line `perm[k]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        LocalSystem {
            classes: perm.iter().map(|&i| self.classes[i].clone()).collect(),
        }
    }
}

impl<'de> Deserialize<'de> for LocalSystem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            classes: Vec<QComplex>,
        }
        let raw = Raw::deserialize(deserializer)?;
        LocalSystem::new(raw.classes).map_err(serde::de::Error::custom)
    }
}

/// An exact residue vector `(a_0, ..., a_n)` with `Σ a_j = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ResidueVector {
    entries: Vec<QComplex>,
}

impl ResidueVector {
    pub fn new(entries: Vec<QComplex>) -> Result<Self, LocalSystemError> {
        let total: QComplex = entries.iter().sum();
        if !total.is_zero() {
            return Err(LocalSystemError::NonzeroSum(total.to_string()));
        }
        Ok(ResidueVector { entries })
    }

    pub fn zero(n: usize) -> Self {
        ResidueVector {
            entries: vec![QComplex::zero(); n],
        }
    }

    pub fn entries(&self) -> &[QComplex] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(QComplex::is_zero)
    }

    /// Adds an integer vector with zero sum.
    pub fn shifted(&self, shift: &[i64]) -> Result<Self, LocalSystemError> {
        if shift.len() != self.len() {
            return Err(LocalSystemError::LengthMismatch {
                expected: self.len(),
                got: shift.len(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(shift)
            .map(|(a, &s)| a + &QComplex::from_integer(s))
            .collect();
        Self::new(entries)
    }

    /// Adds `delta` to entry `j`. Callers keep the total at zero.
    pub(crate) fn add_to(&mut self, j: usize, delta: &Rational) {
        self.entries[j].re += delta;
    }

    pub fn relabel(&self, perm: &[usize]) -> Self {
        ResidueVector {
            entries: perm.iter().map(|&i| self.entries[i].clone()).collect(),
        }
    }

    /// `a(p)`: the sum of the residues of the lines through a point.
    pub fn point_sum(&self, incident: &[usize]) -> QComplex {
        incident.iter().map(|&j| &self.entries[j]).sum()
    }
}

impl<'de> Deserialize<'de> for ResidueVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<QComplex>::deserialize(deserializer)?;
        ResidueVector::new(entries).map_err(serde::de::Error::custom)
    }
}

/// `a(p)` and `b(p) = Re a(p)` at a multiple point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointResidue {
    pub point: MultiplePoint,
    pub a_p: QComplex,
    pub b_p: Rational,
}

/// The lift with real parts in `[0, 1)` off `base`, and `a_base = −Σ_{j≠base} a_j`.
pub fn standard_lift(ls: &LocalSystem, base: usize) -> Result<ResidueVector, LocalSystemError> {
    if base >= ls.len() {
        return Err(LocalSystemError::InvalidBase {
            index: base,
            len: ls.len(),
        });
    }
    let mut entries = ls.classes.clone();
    let others: QComplex = entries
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != base)
        .map(|(_, a)| a)
        .sum();
    entries[base] = -others;
    Ok(ResidueVector { entries })
}

/// True iff `exp(α) = L`, i.e. every `a_j − class_j` is an integer.
pub fn exp_compatible(alpha: &ResidueVector, ls: &LocalSystem) -> Result<bool, LocalSystemError> {
    if alpha.len() != ls.len() {
        return Err(LocalSystemError::LengthMismatch {
            expected: ls.len(),
            got: alpha.len(),
        });
    }
    Ok(alpha
        .entries
        .iter()
        .zip(&ls.classes)
        .all(|(a, c)| (a - c).is_integer()))
}

/// Point residues at every point of multiplicity at least 3.
pub fn point_residues(
    arr: &Arrangement,
    alpha: &ResidueVector,
) -> Result<Vec<PointResidue>, LocalSystemError> {
    if alpha.len() != arr.num_lines() {
        return Err(LocalSystemError::LengthMismatch {
            expected: arr.num_lines(),
            got: alpha.len(),
        });
    }
    Ok(arr
        .triple_points()
        .into_iter()
        .map(|point| {
            let a_p = alpha.point_sum(&point.incident);
            let b_p = a_p.re.clone();
            PointResidue { point, a_p, b_p }
        })
        .collect())
}

//! The Aomoto complex `(A^•, α∧)` in degrees ≤ 2, where `A` is the
//! Orlik–Solomon algebra of the arrangement deconed at a base line.
//!
//! Degree 1 has one generator `e_j` per affine line. Degree 2 has the basis
//! `(p, i_a)`, `a ≥ 2`, for each affine point `p` with incident lines
//! `i_1 < i_2 < ... < i_m`, standing for the product `e_{i_1} e_{i_a}`.
//! Products of parallel lines vanish, and for `1 < a < b` the relation
//! `e_{i_a} e_{i_b} = e_{i_1} e_{i_b} − e_{i_1} e_{i_a}` holds.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arrangement::{AffineArrangement, Arrangement};
use crate::error::{ArrangementError, LocalSystemError};
use crate::exact::{ExactMatrix, QComplex};
use crate::local_system::ResidueVector;

/// Degree-2 basis of the deconed Orlik–Solomon algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OSDegree2Basis {
    affine: AffineArrangement,
    /// `(point index into affine_points, line)` per basis element.
    elements: Vec<(usize, usize)>,
    index: BTreeMap<(usize, usize), usize>,
    /// For an unordered pair of non-parallel affine lines, their meeting point.
    meet: BTreeMap<(usize, usize), usize>,
}

impl OSDegree2Basis {
    pub fn new(arr: &Arrangement, base: usize) -> Result<Self, ArrangementError> {
        let affine = arr.decone(base)?;
        let mut elements = Vec::new();
        let mut meet = BTreeMap::new();
        for (pi, p) in affine.affine_points.iter().enumerate() {
            for &line in &p.incident[1..] {
                elements.push((pi, line));
            }
            for (x, &i) in p.incident.iter().enumerate() {
                for &j in &p.incident[x + 1..] {
                    meet.insert((i, j), pi);
                }
            }
        }
        let index = elements.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        Ok(OSDegree2Basis {
            affine,
            elements,
            index,
            meet,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn base(&self) -> usize {
        self.affine.removed_line
    }

    pub fn affine(&self) -> &AffineArrangement {
        &self.affine
    }

    /// Basis elements as `(affine point index, line)`.
    pub fn elements(&self) -> &[(usize, usize)] {
        &self.elements
    }

    /// `e_i · e_j` as a sparse combination `(basis index, coefficient)`.
    pub fn reduce_product(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        assert!(i != j, "e_i · e_i is zero and never requested");
        assert!(
            i != self.base() && j != self.base(),
            "the base line has no generator"
        );
        if i > j {
            return self
                .reduce_product(j, i)
                .into_iter()
                .map(|(k, c)| (k, -c))
                .collect();
        }
        let Some(&pi) = self.meet.get(&(i, j)) else {
            // parallel
            return Vec::new();
        };
        let first = self.affine.affine_points[pi].incident[0];
        let idx = |line| self.index[&(pi, line)];
        if i == first {
            vec![(idx(j), 1)]
        } else {
            vec![(idx(j), 1), (idx(i), -1)]
        }
    }
}

/// `(b0, b1, b2)` of the complement.
pub fn betti(arr: &Arrangement, base: usize) -> Result<(usize, usize, usize), ArrangementError> {
    let basis = OSDegree2Basis::new(arr, base)?;
    Ok((1, arr.num_lines() - 1, basis.len()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AomotoResult {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
    pub rank_d0: usize,
    pub rank_d1: usize,
    pub b1: usize,
    pub b2: usize,
}

impl AomotoResult {
    pub fn euler_characteristic(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64
    }
}

/// The two differentials of the Aomoto complex for `α`, deconed at `base`.
pub struct AomotoComplex {
    pub basis: OSDegree2Basis,
    /// Affine generators, in the column order of `d0` and `d1`.
    pub generators: Vec<usize>,
    /// `d0`: one column, the coefficients of `α` on the generators.
    pub d0: ExactMatrix,
    /// `d1`: rows indexed by the degree-2 basis, columns by generators.
    pub d1: ExactMatrix,
}

impl AomotoComplex {
    pub fn new(arr: &Arrangement, alpha: &ResidueVector, base: usize) -> Result<Self, AomotoError> {
        if alpha.len() != arr.num_lines() {
            return Err(LocalSystemError::LengthMismatch {
                expected: arr.num_lines(),
                got: alpha.len(),
            }
            .into());
        }
        let total: QComplex = alpha.entries().iter().sum();
        if !total.is_zero() {
            return Err(LocalSystemError::NonzeroSum(total.to_string()).into());
        }
        let basis = OSDegree2Basis::new(arr, base)?;
        let generators = basis.affine().remaining.clone();
        let col_of: BTreeMap<usize, usize> =
            generators.iter().enumerate().map(|(c, &g)| (g, c)).collect();

        let mut d0 = ExactMatrix::zeros(generators.len(), 1);
        for (c, &g) in generators.iter().enumerate() {
            d0.set(c, 0, alpha.entries()[g].clone());
        }

        // α ∧ e_i = Σ_j a_j e_j e_i
        let mut d1 = ExactMatrix::zeros(basis.len(), generators.len());
        for &i in &generators {
            let col = col_of[&i];
            for &j in &generators {
                let a_j = &alpha.entries()[j];
                if j == i || a_j.is_zero() {
                    continue;
                }
                for (row, coeff) in basis.reduce_product(j, i) {
                    let v = d1.get(row, col) + &(a_j * &QComplex::from_integer(coeff));
                    d1.set(row, col, v);
                }
            }
        }
        Ok(AomotoComplex {
            basis,
            generators,
            d0,
            d1,
        })
    }

    /// `d1 ∘ d0`, which must vanish.
    pub fn composite(&self) -> Vec<QComplex> {
        let alpha_col: Vec<QComplex> = (0..self.d0.rows()).map(|r| self.d0.get(r, 0).clone()).collect();
        self.d1.apply(&alpha_col)
    }

    pub fn dims(&self) -> AomotoResult {
        let rank_d0 = self.d0.rank();
        let rank_d1 = self.d1.rank();
        let b1 = self.generators.len();
        let b2 = self.basis.len();
        AomotoResult {
            h0: 1 - rank_d0,
            h1: b1 - rank_d1 - rank_d0,
            h2: b2 - rank_d1,
            rank_d0,
            rank_d1,
            b1,
            b2,
        }
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum AomotoError {
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    LocalSystem(#[from] LocalSystemError),
}

pub fn aomoto_dims(
    arr: &Arrangement,
    alpha: &ResidueVector,
    base: usize,
) -> Result<AomotoResult, AomotoError> {
    Ok(AomotoComplex::new(arr, alpha, base)?.dims())
}

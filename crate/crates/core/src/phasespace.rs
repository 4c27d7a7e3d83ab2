//! Discrete phase space over the d² DAPG lines.
//!
//! An operator `B` maps to `V(j; B) = tr(B P_j)`. Because
//! `tr(P_j P_j') = d δ_{jj'}`, the map is inverted by
//! `B = (1/d) Σ_j V(j; B) P_j` and expectation values pair as
//! `tr(ρB) = (1/d) Σ_j V(j; ρ) V(j; B)`.
//!
//! Tomography goes through the point probabilities `p_α = tr(ρ A_α)`:
//! `V(j; ρ) = Σ_{α∈j} p_α - 1`, and back again with
//! `p_α = (1/d) Σ_{j∋α} V(j; ρ)`.

use std::collections::BTreeMap;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::geometry::{line_points, lines_through_point, Basis, LineLabel, PointLabel};
use crate::matrix::{CMatrix, Tolerance};
use crate::modular::Modulus;
use crate::operators::OperatorSet;
use crate::scalar::Real;

/// Hermitian, unit-trace matrix. Positivity is not checked.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    matrix: CMatrix<T>,
}

impl<T: Real> DensityMatrix<T> {
    pub fn new(matrix: CMatrix<T>, tol: Tolerance<T>) -> Result<Self> {
        check_hermitian(&matrix, tol)?;
        let tr = matrix.trace();
        let err = (tr - Complex::new(T::one(), T::zero())).norm();
        if !tol.scaled(matrix.dim()).accepts(err) {
            return Err(Error::InvalidTrace(tr.re.to_f64_lossy()));
        }
        Ok(DensityMatrix { matrix })
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn into_inner(self) -> CMatrix<T> {
        self.matrix
    }
}

fn check_hermitian<T: Real>(m: &CMatrix<T>, tol: Tolerance<T>) -> Result<()> {
    let (row, col, dev) = m.hermiticity_defect();
    if tol.accepts(dev) {
        Ok(())
    } else {
        Err(Error::NonHermitianInput {
            row,
            col,
            deviation: dev.to_f64_lossy(),
        })
    }
}

/// Real values on all d² lines, stored in lexicographic line order.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiDistribution<T> {
    d: Modulus,
    values: Vec<T>,
}

impl<T: Real> QuasiDistribution<T> {
    /// Requires exactly one value per line.
    pub fn from_entries(d: Modulus, entries: impl IntoIterator<Item = (LineLabel, T)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (j, v) in entries {
            if j.modulus() != d {
                return Err(Error::InvalidLabel(format!("line {j} is not of dimension {d}")));
            }
            if map.insert(j, v).is_some() {
                return Err(Error::DuplicateLine(j.to_string()));
            }
        }
        let mut values = Vec::with_capacity(d.dim() * d.dim());
        for j in LineLabel::all(d) {
            match map.get(&j) {
                Some(&v) => values.push(v),
                None => return Err(Error::MissingLine(j.to_string())),
            }
        }
        Ok(QuasiDistribution { d, values })
    }

    /// From values already in lexicographic line order.
    pub fn from_values(d: Modulus, values: Vec<T>) -> Result<Self> {
        let expected = d.dim() * d.dim();
        if values.len() != expected {
            return Err(Error::DimensionMismatch(expected, values.len()));
        }
        Ok(QuasiDistribution { d, values })
    }

    pub fn modulus(&self) -> Modulus {
        self.d
    }

    pub fn get(&self, j: LineLabel) -> T {
        self.values[j.index()]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (LineLabel, T)> + '_ {
        LineLabel::all(self.d).zip(self.values.iter().copied())
    }

    /// `(1/d) Σ_j V(j)`, the trace of the mapped operator.
    pub fn normalization(&self) -> T {
        self.values.iter().copied().sum::<T>() / T::from_count(self.d.dim())
    }

    /// `(1/d) Σ_{j∋α} V(j)`, which is `tr(B A_α)` for the mapped operator.
    pub fn marginalize(&self, alpha: PointLabel) -> T {
        let s: T = lines_through_point(alpha).into_iter().map(|j| self.get(j)).sum();
        s / T::from_count(self.d.dim())
    }
}

/// `p_α = tr(ρ A_α)` for all d(d+1) points, stored in `PointLabel::index` order.
#[derive(Debug, Clone, PartialEq)]
pub struct MubProbabilities<T> {
    d: Modulus,
    values: Vec<T>,
}

impl<T: Real> MubProbabilities<T> {
    pub fn from_entries(d: Modulus, entries: impl IntoIterator<Item = (PointLabel, T)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (a, v) in entries {
            if a.modulus() != d {
                return Err(Error::InvalidLabel(format!("point {a} is not of dimension {d}")));
            }
            if map.insert(a, v).is_some() {
                return Err(Error::DuplicatePoint(a.to_string()));
            }
        }
        let mut values = Vec::with_capacity(d.dim() * (d.dim() + 1));
        for a in PointLabel::all(d) {
            match map.get(&a) {
                Some(&v) => values.push(v),
                None => return Err(Error::IncompleteProbabilities(a.to_string())),
            }
        }
        Ok(MubProbabilities { d, values })
    }

    pub fn modulus(&self) -> Modulus {
        self.d
    }

    pub fn get(&self, alpha: PointLabel) -> T {
        self.values[alpha.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (PointLabel, T)> + '_ {
        PointLabel::all(self.d).zip(self.values.iter().copied())
    }

    pub fn column_sum(&self, b: Basis) -> T {
        self.d.residues().map(|m| self.get(PointLabel::new(m, b))).sum()
    }

    /// Fails on the first column whose probabilities do not sum to 1.
    pub fn check_normalized(&self, tol: Tolerance<T>) -> Result<()> {
        for b in Basis::all(self.d) {
            let sum = self.column_sum(b);
            if !tol.accepts((sum - T::one()).abs()) {
                return Err(Error::ColumnNotNormalized {
                    b: b.to_index(),
                    sum: sum.to_f64_lossy(),
                });
            }
        }
        Ok(())
    }
}

/// Phase-space transforms for one dimension, sharing a cached operator set.
#[derive(Debug, Clone)]
pub struct PhaseSpace<T> {
    ops: OperatorSet<T>,
    tol: Tolerance<T>,
}

impl<T: Real> PhaseSpace<T> {
    pub fn new(d: Modulus) -> Self {
        Self::with_tolerance(d, Tolerance::default())
    }

    pub fn with_tolerance(d: Modulus, tol: Tolerance<T>) -> Self {
        PhaseSpace {
            ops: OperatorSet::new(d),
            tol,
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.ops.modulus()
    }

    pub fn operators(&self) -> &OperatorSet<T> {
        &self.ops
    }

    pub fn tolerance(&self) -> Tolerance<T> {
        self.tol
    }

    fn check_dim(&self, m: &CMatrix<T>) -> Result<()> {
        let n = self.modulus().dim();
        if m.dim() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(n, m.dim()))
        }
    }

    fn check_same(&self, d: Modulus) -> Result<()> {
        if d == self.modulus() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.modulus().dim(), d.dim()))
        }
    }

    /// `V(j; B) = tr(B P_j)`. Only Hermitian `B` is accepted, so every value is real.
    pub fn map_operator(&self, b: &CMatrix<T>) -> Result<QuasiDistribution<T>> {
        self.check_dim(b)?;
        check_hermitian(b, self.tol)?;
        let values = self
            .ops
            .lines()
            .iter()
            .map(|p| b.trace_product(&p.matrix).map(|t| t.re))
            .collect::<Result<Vec<_>>>()?;
        QuasiDistribution::from_values(self.modulus(), values)
    }

    /// `(1/d) Σ_j V(j) P_j`.
    pub fn reconstruct(&self, v: &QuasiDistribution<T>) -> Result<CMatrix<T>> {
        self.check_same(v.modulus())?;
        let n = self.modulus().dim();
        let inv_d = T::one() / T::from_count(n);
        let mut out = CMatrix::zeros(n);
        for (p, &value) in self.ops.lines().iter().zip(v.values()) {
            out.axpy(value * inv_d, &p.matrix);
        }
        Ok(out)
    }

    /// `(1/d) Σ_j V_ρ(j) V_B(j)`, equal to `tr(ρB)`.
    pub fn pair_expectation(&self, v_rho: &QuasiDistribution<T>, v_b: &QuasiDistribution<T>) -> Result<T> {
        self.check_same(v_rho.modulus())?;
        self.check_same(v_b.modulus())?;
        let s: T = v_rho.values().iter().zip(v_b.values()).map(|(&a, &b)| a * b).sum();
        Ok(s / T::from_count(self.modulus().dim()))
    }

    pub fn probabilities_from_state(&self, rho: &DensityMatrix<T>) -> Result<MubProbabilities<T>> {
        self.check_dim(rho.matrix())?;
        let values = self
            .ops
            .points()
            .iter()
            .map(|a| rho.matrix().trace_product(&a.matrix).map(|t| t.re))
            .collect::<Result<Vec<_>>>()?;
        Ok(MubProbabilities {
            d: self.modulus(),
            values,
        })
    }

    /// `V(j) = Σ_{α∈j} p_α - 1`. Columns must sum to 1 within `d·eps`.
    pub fn quasi_from_probabilities(&self, p: &MubProbabilities<T>) -> Result<QuasiDistribution<T>> {
        self.check_same(p.modulus())?;
        p.check_normalized(self.tol.scaled(self.modulus().dim()))?;
        let values = LineLabel::all(self.modulus())
            .map(|j| line_points(j).into_iter().map(|a| p.get(a)).sum::<T>() - T::one())
            .collect();
        QuasiDistribution::from_values(self.modulus(), values)
    }

    /// Full tomography: point probabilities to the reconstructed operator.
    pub fn tomography(&self, p: &MubProbabilities<T>) -> Result<(QuasiDistribution<T>, CMatrix<T>)> {
        let v = self.quasi_from_probabilities(p)?;
        let rho = self.reconstruct(&v)?;
        Ok((v, rho))
    }

    pub fn marginalize(&self, v: &QuasiDistribution<T>, alpha: PointLabel) -> T {
        v.marginalize(alpha)
    }
}

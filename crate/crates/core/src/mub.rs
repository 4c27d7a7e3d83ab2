//! Computational basis, the clock/shift pair and the d+1 mutually unbiased
//! bases of a prime dimension.
//!
//! State `m` of basis `b >= 0` has amplitudes
//! `<n|m;b> = ω^{(b/2) n(n-1) - n m} / √d` and is the `ω^m` eigenvector of
//! `X Z^b`. Basis `b = -1` is the computational basis itself.

use num_complex::Complex;
use num_traits::Zero;

use crate::geometry::{Basis, PointLabel};
use crate::matrix::{CMatrix, Tolerance};
use crate::modular::{omega, omega_power, Modulus};
use crate::report::{Audit, AxiomReport};
use crate::scalar::Real;

/// Clock matrix `Z|n> = ω^n |n>`.
pub fn z_matrix<T: Real>(d: Modulus) -> CMatrix<T> {
    CMatrix::from_fn(d.dim(), |r, c| {
        if r == c {
            omega_power(d, r as i64)
        } else {
            Complex::zero()
        }
    })
}

/// Shift matrix `X|n> = |n+1>`.
pub fn x_matrix<T: Real>(d: Modulus) -> CMatrix<T> {
    let n = d.dim();
    CMatrix::from_fn(n, |r, c| {
        if r == (c + 1) % n {
            Complex::new(T::one(), T::zero())
        } else {
            Complex::zero()
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MubState<T> {
    pub label: PointLabel,
    /// Amplitudes `<n|m;b>` for `n = 0..d`.
    pub amplitudes: Vec<Complex<T>>,
}

impl<T: Real> MubState<T> {
    pub fn projector(&self) -> CMatrix<T> {
        CMatrix::outer(&self.amplitudes)
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &MubState<T>) -> Complex<T> {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

pub fn mub_state<T: Real>(label: PointLabel) -> MubState<T> {
    let d = label.modulus();
    let amplitudes = match label.b {
        Basis::Computational => (0..d.dim())
            .map(|n| {
                if n == label.m.index() {
                    Complex::new(T::one(), T::zero())
                } else {
                    Complex::zero()
                }
            })
            .collect(),
        Basis::Mub(b) => {
            let norm = T::one() / T::from_count(d.dim()).sqrt();
            let one = d.elem(1);
            d.residues()
                .map(|n| {
                    // the exponent lives in Z_d; n(n-1)/2 is taken as 2^{-1} n(n-1)
                    let exponent = b.half() * n * (n - one) - n * label.m;
                    omega::<T>(exponent) * norm
                })
                .collect()
        }
    };
    MubState { label, amplitudes }
}

/// All d(d+1) states, grouped by basis in `b = -1, 0, .., d-1` order.
#[derive(Debug, Clone)]
pub struct MubFamily<T> {
    d: Modulus,
    bases: Vec<Vec<MubState<T>>>,
}

impl<T: Real> MubFamily<T> {
    pub fn new(d: Modulus) -> Self {
        let bases = Basis::all(d)
            .map(|b| d.residues().map(|m| mub_state(PointLabel::new(m, b))).collect())
            .collect();
        MubFamily { d, bases }
    }

    pub fn modulus(&self) -> Modulus {
        self.d
    }

    pub fn basis(&self, b: Basis) -> &[MubState<T>] {
        &self.bases[b.ordinal()]
    }

    pub fn state(&self, label: PointLabel) -> &MubState<T> {
        &self.bases[label.b.ordinal()][label.m.index()]
    }

    pub fn states(&self) -> impl Iterator<Item = &MubState<T>> {
        self.bases.iter().flatten()
    }
}

fn residual<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> T {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm_sqr())
        .fold(T::zero(), |s, v| s + v)
        .sqrt()
}

/// `X Z^b |m;b> = ω^m |m;b>` for every state with `b >= 0`, and
/// `Z|m> = ω^m |m>` for the computational basis.
pub fn verify_eigenrelation<T: Real>(d: Modulus, tol: Tolerance<T>) -> AxiomReport {
    let family = MubFamily::<T>::new(d);
    let z = z_matrix::<T>(d);
    let x = x_matrix::<T>(d);
    let mut report = AxiomReport::new(d.get());

    let mut cb = Audit::new("mub.cb_diagonalizes_z");
    let mut eig = Audit::new("mub.eigenrelation");
    for b in Basis::all(d) {
        let op = match b {
            Basis::Computational => z.clone(),
            Basis::Mub(b) => &x * &z.pow(b.value() as u32),
        };
        let audit = match b {
            Basis::Computational => &mut cb,
            Basis::Mub(_) => &mut eig,
        };
        for state in family.basis(b) {
            let lhs = op.apply(&state.amplitudes).expect("state has length d");
            let phase = omega::<T>(state.label.m);
            let rhs: Vec<_> = state.amplitudes.iter().map(|a| a * phase).collect();
            let err = residual(&lhs, &rhs);
            audit.expect(tol.accepts(err), || format!("state {} residual {err:e}", state.label));
        }
    }
    report.push(cb.finish());
    report.push(eig.finish());
    report
}

/// Orthonormality within each basis, overlap `1/√d` across bases, and the
/// resolution of the identity by each basis.
pub fn verify_unbiasedness<T: Real>(d: Modulus, tol: Tolerance<T>) -> AxiomReport {
    let family = MubFamily::<T>::new(d);
    let mut report = AxiomReport::new(d.get());
    let cross_target = T::one() / T::from_count(d.dim()).sqrt();

    let mut ortho = Audit::new("mub.orthonormal");
    let mut unbiased = Audit::new("mub.unbiased");
    let states: Vec<_> = family.states().collect();
    for (i, u) in states.iter().enumerate() {
        for v in &states[i..] {
            let overlap = u.inner(v);
            if u.label.b == v.label.b {
                let target = if u.label.m == v.label.m { T::one() } else { T::zero() };
                let err = (overlap - Complex::new(target, T::zero())).norm();
                ortho.expect(tol.accepts(err), || format!("<{}|{}> off by {err:e}", u.label, v.label));
            } else {
                let err = (overlap.norm() - cross_target).abs();
                unbiased.expect(tol.accepts(err), || {
                    format!("|<{}|{}>| off by {err:e}", u.label, v.label)
                });
            }
        }
    }
    report.push(ortho.finish());
    report.push(unbiased.finish());

    let mut resolution = Audit::new("mub.resolution_of_identity");
    let id = CMatrix::<T>::identity(d.dim());
    for b in Basis::all(d) {
        let mut sum = CMatrix::zeros(d.dim());
        for s in family.basis(b) {
            sum = &sum + &s.projector();
        }
        let err = sum.max_abs_diff(&id).expect("same size");
        resolution.expect(tol.scaled(d.dim()).accepts(err), || format!("basis {b} off by {err:e}"));
    }
    report.push(resolution.finish());
    report
}

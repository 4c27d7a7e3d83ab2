use mubgeo::{CMatrix64, Complex64};
use rand::Rng;

/// Random Hermitian, trace-one matrix `G G† / tr(G G†)`.
pub fn random_density<R: Rng>(rng: &mut R, n: usize) -> CMatrix64 {
    let g = random_matrix(rng, n);
    let h = &g * &g.adjoint();
    let tr = h.trace().re;
    h.scale_real(1.0 / tr)
}

/// Random Hermitian matrix with entries of order one.
pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize) -> CMatrix64 {
    let g = random_matrix(rng, n);
    (&g + &g.adjoint()).scale_real(0.5)
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize) -> CMatrix64 {
    CMatrix64::from_fn(n, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

mod common;

use common::{random_density, random_hermitian};
use mubgeo::phasespace::DensityMatrix;
use mubgeo::{Modulus, PhaseSpace64, PointLabel, Tolerance64};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn random_states_roundtrip_and_marginalize() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [3u64, 5, 7] {
        let d = Modulus::new(n).unwrap();
        let ps = PhaseSpace64::new(d);
        let dim = n as usize;
        let eps = 1e-10;
        for _ in 0..20 {
            let rho = random_density(&mut rng, dim);
            let v = ps.map_operator(&rho).unwrap();
            let back = ps.reconstruct(&v).unwrap();
            assert!(back.max_abs_diff(&rho).unwrap() <= eps);
            assert!((v.normalization() - 1.0).abs() <= (dim * dim) as f64 * eps);

            let state = DensityMatrix::new(rho.clone(), Tolerance64::default()).unwrap();
            let p = ps.probabilities_from_state(&state).unwrap();
            let via_p = ps.quasi_from_probabilities(&p).unwrap();
            for (a, b) in v.values().iter().zip(via_p.values()) {
                assert!((a - b).abs() <= dim as f64 * eps);
            }
            for alpha in PointLabel::all(d) {
                assert!((ps.marginalize(&v, alpha) - p.get(alpha)).abs() <= dim as f64 * eps);
                assert!(p.get(alpha) >= -eps && p.get(alpha) <= 1.0 + eps);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pairing_equals_trace(seed in any::<u64>(), pick in 0usize..3) {
        let n = [3u64, 5, 7][pick];
        let dim = n as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ps = PhaseSpace64::new(Modulus::new(n).unwrap());
        let rho = random_density(&mut rng, dim);
        let b = random_hermitian(&mut rng, dim);
        let direct = rho.trace_product(&b).unwrap().re;
        let paired = ps
            .pair_expectation(&ps.map_operator(&rho).unwrap(), &ps.map_operator(&b).unwrap())
            .unwrap();
        prop_assert!((direct - paired).abs() <= (dim * dim) as f64 * 1e-10);
    }

    #[test]
    fn hermitian_roundtrip(seed in any::<u64>(), pick in 0usize..3) {
        let n = [3u64, 5, 7][pick];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ps = PhaseSpace64::new(Modulus::new(n).unwrap());
        let b = random_hermitian(&mut rng, n as usize);
        let back = ps.reconstruct(&ps.map_operator(&b).unwrap()).unwrap();
        prop_assert!(back.max_abs_diff(&b).unwrap() <= 1e-10);
    }
}

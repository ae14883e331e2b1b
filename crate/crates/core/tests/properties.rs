use lieball_core::blattner::{multiplicity, MuLambda};
use lieball_core::harmonic::laplacian;
use lieball_core::kostant::{euler_character, Kostant};
use lieball_core::repdata::{orbit_equal, weyl_dim_so2m};
use lieball_core::weyl::{enumerate_group, is_gl_dominant};
use lieball_core::{KTypeParam, SparsePolynomial, Weight};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn dominant(m: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(0i64..=4, m).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn signed_dominant(m: usize) -> impl Strategy<Value = Vec<i64>> {
    (dominant(m), any::<bool>()).prop_map(|(mut v, neg)| {
        let last = v.len() - 1;
        if neg {
            v[last] = -v[last];
        }
        v
    })
}

fn poly(nvars: usize, seed: u64, d: u32) -> SparsePolynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    SparsePolynomial::random_homogeneous(&mut rng, nvars, d, 6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplicities_at_m_minus_1_live_on_the_harmonic_line(
        m in 2usize..=4,
        mu in signed_dominant(4),
        mu0 in -3i64..=10,
    ) {
        let mu = mu[4 - m..].to_vec();
        let pi = KTypeParam::new(mu0, mu.clone()).unwrap();
        let mult = multiplicity(m, m as i64 - 1, &pi).unwrap();
        let l = mu0 - (m as i64 - 1);
        let on_line = l >= 0 && mu[0] == l && mu[1..].iter().all(|&x| x == 0);
        prop_assert_eq!(mult, i64::from(on_line));
    }

    #[test]
    fn kostant_terms_are_distinct_and_gl_dominant(m in 2usize..=5, mu in signed_dominant(5), mu0 in -4i64..=4) {
        let pi = KTypeParam::new(mu0, mu[5 - m..].to_vec()).unwrap();
        let chi = euler_character(m, &pi).unwrap();
        prop_assert_eq!(chi.len(), 1 << (m - 1));
        let mut seen = std::collections::BTreeSet::new();
        for (lk, _) in &chi {
            prop_assert!(is_gl_dominant(lk.hw()));
            prop_assert_eq!(lk.charge(), mu0);
            prop_assert!(seen.insert(lk.clone()));
        }
    }

    #[test]
    fn weyl_dimension_is_invariant_under_the_outer_flip(m in 2usize..=5, mu in dominant(5)) {
        let mu = mu[5 - m..].to_vec();
        let mut flipped = mu.clone();
        flipped[m - 1] = -flipped[m - 1];
        let d = weyl_dim_so2m(m, &mu).unwrap();
        prop_assert!(d >= 1);
        prop_assert_eq!(d, weyl_dim_so2m(m, &flipped).unwrap());
    }

    #[test]
    fn orbit_equal_is_invariant_under_the_group(coords in proptest::collection::vec(-3i64..=3, 3), pick in 0usize..192) {
        let w = Weight::from_ints(&coords);
        let group = enumerate_group(3).unwrap();
        let g = &group[pick % group.len()];
        let image = g.act(&w).unwrap();
        prop_assert!(orbit_equal(&w, &image).unwrap());
        prop_assert!(orbit_equal(&image, &w).unwrap());
    }

    #[test]
    fn laplacian_obeys_the_product_rule(s1 in any::<u64>(), s2 in any::<u64>(), d1 in 0u32..=3, d2 in 0u32..=3) {
        // Δ(fg) = Δf·g + 2 ∇f·∇g + f·Δg
        let n = 4;
        let (f, g) = (poly(n, s1, d1), poly(n, s2, d2));
        let two = BigRational::from_integer(2.into());
        let mut rhs = laplacian(&f).mul(&g).add(&f.mul(&laplacian(&g)));
        for i in 0..n {
            rhs = rhs.add(&f.derivative(i).mul(&g.derivative(i)).scale(&two));
        }
        prop_assert_eq!(laplacian(&f.mul(&g)), rhs);
    }

    #[test]
    fn polynomial_ring_laws(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (f, g, h) = (poly(3, s1, 2), poly(3, s2, 1), poly(3, s3, 3));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
    }
}

#[test]
fn mu_lambda_is_dominant_only_from_m_minus_1_on() {
    for m in 2..=5usize {
        let top = Kostant::new(m).unwrap().top_degree();
        assert_eq!(top, m * (m - 1) / 2);
        for lambda in -3..=8i64 {
            let ml = MuLambda::new(m, lambda).unwrap();
            assert_eq!(ml.as_lk.charge(), lambda);
            assert!(ml.as_lk.hw().iter().all(|&c| c == lambda - m as i64 + 1));
        }
    }
}

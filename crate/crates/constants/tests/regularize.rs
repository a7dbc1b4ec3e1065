mod common;

use common::{corpus, setting};
use constants::{absolute_part, regularized_tau, tau_infinity, ConstantsError, HeightSpec, PhasePoly};
use group_core::Qz;
use num_bigint::BigInt;
use num_rational::BigRational;
use zeta_conf::closed_points;

/// Largest relative disagreement tolerated between a closed form and a partial product,
/// on top of the reported tail bound.
const FLOAT_SLACK: f64 = 1e-12;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn z2_closed_form_is_exact() {
    for q in [3u64, 5, 7, 11] {
        let s = setting("Z2", &[0, 1], q, None);
        let zero = s.index_of(&s.brauer.zero()).unwrap();
        let r = regularized_tau(&s, zero, Qz::ZERO, 20).unwrap();
        assert!(r.closed_form);
        let q = q as i64;
        assert_eq!(r.value.as_rational().unwrap(), rat(q - 1, q));
        let tau = tau_infinity(&s, zero, Qz::ZERO, &HeightSpec::standard()).unwrap();
        let full = (tau * r.value).as_rational().unwrap();
        assert_eq!(full, rat(q * q - 1, q * q));
    }
}

#[test]
fn z2_partial_products_of_the_naive_product() {
    // ∏_{D ≤ N} ((1 − q^{−D})(1 + q^{−D}))^{N_D} converges absolutely to 1 − 1/q
    let q = 3u64;
    let s = setting("Z2", &[0, 1], q, None);
    let zero = s.index_of(&s.brauer.zero()).unwrap();
    let naive: f64 = (1..=30u64)
        .map(|d| closed_points(q, d) as f64 * (-(q as f64).powi(-2 * d as i32)).ln_1p())
        .sum::<f64>()
        .exp();
    let r = regularized_tau(&s, zero, Qz::ZERO, 30).unwrap();
    assert!((naive - r.partial.re).abs() <= r.tail_bound + FLOAT_SLACK);
    assert!((naive - (1.0 - 1.0 / q as f64)).abs() < 1e-12);
}

#[test]
fn cutoffs_agree_within_tail_bounds() {
    for (name, f, q, twist) in corpus() {
        let s = setting(name, &f, q, twist);
        let n = s.group.order() as i64;
        let fmin = s.fmin() as i64;
        for beta in 0..s.brauer.order() {
            for j in 0..fmin * n * n {
                let alpha = Qz::new(j, fmin * n * n);
                if !s.in_subset(beta, alpha.scale(fmin)) {
                    continue;
                }
                let r: Vec<_> = [10, 15, 20].iter().map(|&d| regularized_tau(&s, beta, alpha, d).unwrap()).collect();
                for x in &r {
                    assert!(x.tail_bound.is_finite() && x.tail_bound < 1e-3, "{name} q={q}: bound {}", x.tail_bound);
                    let gap = (x.partial - r[2].partial).norm();
                    assert!(gap <= x.tail_bound + r[2].tail_bound, "{name} q={q} β={beta} α={alpha}: {gap:e} vs {:e}", x.tail_bound);
                    if x.closed_form {
                        let gap = (x.partial - x.value.approx).norm();
                        assert!(gap <= x.tail_bound + FLOAT_SLACK, "{name} q={q}: closed form off by {gap:e}");
                    }
                }
            }
        }
    }
}

#[test]
fn outside_the_subset_is_an_error() {
    let s = setting("Z2", &[0, 1], 3, None);
    let zero = s.index_of(&s.brauer.zero()).unwrap();
    assert!(matches!(regularized_tau(&s, zero, Qz::new(1, 2), 10), Err(ConstantsError::NotInSubset(_))));
    assert!(matches!(regularized_tau(&s, 1 - zero, Qz::ZERO, 10), Err(ConstantsError::NotInSubset(_))));
    assert!(regularized_tau(&s, 1 - zero, Qz::new(1, 2), 10).is_ok());
}

#[test]
fn first_order_terms_cancel() {
    for (name, f, q, twist) in corpus() {
        let s = setting(name, &f, q, twist);
        let n = s.group.order() as i64;
        let fmin = s.fmin() as i64;
        for beta in 0..s.brauer.order() {
            for j in 0..fmin * n * n {
                let alpha = Qz::new(j, fmin * n * n);
                if !s.in_subset(beta, alpha.scale(fmin)) {
                    continue;
                }
                let g = absolute_part(&s, beta, alpha, &s.c_beta(beta)).unwrap();
                assert!(g.terms().all(|(d, _, _)| d == 0 || d > fmin as usize), "{name} q={q}");
            }
        }
    }
}

#[test]
fn plethystic_exponents_of_simple_products() {
    // (1 − t²)(1 − [1/3] t³)² 
    let a = PhasePoly::binomial(2, Qz::ZERO, 1, 20);
    let b = PhasePoly::binomial(3, Qz::new(1, 3), 2, 20);
    let g = a.mul(&b, 20);
    let mut e = g.plethystic_exponents(g.degree());
    e.sort();
    assert_eq!(e, vec![(2, Qz::ZERO, -1), (3, Qz::new(1, 3), -2)]);
    // 1/(1 − t) has a single positive exponent
    let h = PhasePoly::binomial(1, Qz::ZERO, -1, 8);
    assert_eq!(h.plethystic_exponents(8), vec![(1, Qz::ZERO, 1)]);
}

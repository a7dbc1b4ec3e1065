use constants::{HInf, HeightSpec, Omega};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use oracles::{kummer_brute, kummer_count, kummer_multidegree, quadratic_closed_form, OracleError};
use zeta_conf::{conf_count, ColorSpec};

const BUDGET: u128 = 10_000_000;

fn count(n: u64, q: u64, d: u64, f: &[u64], h: &HeightSpec) -> BigUint {
    kummer_count(n, q, d, f, h, BUDGET).unwrap()
}

#[test]
fn quadratic_counts() {
    let h = HeightSpec::standard();
    for q in [3u64, 5, 7] {
        for d in 3..=9 {
            let n = count(2, q, d, &[0, 1], &h);
            if d % 2 == 0 {
                let closed = quadratic_closed_form(q, d);
                assert_eq!(BigRational::from_integer(BigInt::from(n)), closed, "q={q} d={d}");
            } else {
                // the number of geometric branch points of a double cover is even
                assert_eq!(n, BigUint::from(0u32), "q={q} d={d}");
            }
        }
        // y² = c·(t − a) and y² = c·(quadratic): 2q + 2(q² − q)
        assert_eq!(count(2, q, 2, &[0, 1], &h), BigUint::from(2 * q * q));
        assert_eq!(count(2, q, 0, &[0, 1], &h), BigUint::from(0u32));
    }
    assert_eq!(quadratic_closed_form(3, 3), BigRational::from_integer(48.into()));
    assert_eq!(quadratic_closed_form(5, 4), BigRational::from_integer(1200.into()));
    assert_eq!(quadratic_closed_form(3, 2), BigRational::from_integer(16.into()));
}

#[test]
fn cubic_fixture() {
    // two split points with exponents 1 and 2 (7·6), or one split point and a branch
    // point at ∞ (7·2); three classes of c each
    assert_eq!(count(3, 7, 2, &[0, 1, 1], &HeightSpec::standard()), BigUint::from(168u32));
}

#[test]
fn shapes_match_factoring_every_polynomial() {
    let heights = [
        HeightSpec::standard(),
        HeightSpec { h_inf: HInf::Zero, omega: Omega::All },
        HeightSpec { h_inf: HInf::Weight, omega: Omega::Unramified },
        HeightSpec { h_inf: HInf::Weight, omega: Omega::Points(vec![(1, 0), (1, 1)]) },
    ];
    let cases: [(u64, u64, &[u64], u64); 5] =
        [(2, 3, &[0, 1], 6), (2, 5, &[0, 1], 4), (3, 7, &[0, 1, 1], 2), (3, 7, &[0, 1, 2], 3), (4, 5, &[0, 1, 1, 1], 2)];
    for (n, q, f, top) in cases {
        for h in &heights {
            for d in 0..=top {
                let a = count(n, q, d, f, h);
                let b = kummer_brute(n, q, d, f, h, BUDGET).unwrap();
                assert_eq!(a, BigUint::from(b), "Z/{n} q={q} f={f:?} d={d} {h:?}");
            }
        }
    }
}

#[test]
fn local_conditions_partition_the_count() {
    for (n, q, f) in [(2u64, 5u64, vec![0u64, 1]), (3, 7, vec![0, 1, 2]), (4, 5, vec![0, 2, 1, 2])] {
        for d in 1..=6 {
            let total = count(n, q, d, &f, &HeightSpec::standard());
            let by_gamma: BigUint = (0..n as usize)
                .map(|c| count(n, q, d, &f, &HeightSpec { h_inf: HInf::Weight, omega: Omega::GammaClasses(vec![c]) }))
                .sum();
            let by_point: BigUint = (0..n as usize)
                .flat_map(|s| (0..n as usize).map(move |g| (s, g)))
                .map(|p| count(n, q, d, &f, &HeightSpec { h_inf: HInf::Weight, omega: Omega::Points(vec![p]) }))
                .sum();
            assert_eq!(by_gamma, total, "Z/{n} q={q} d={d}");
            assert_eq!(by_point, total, "Z/{n} q={q} d={d}");
            // unramified at ∞ is one of the pieces; the Frobenius there is equidistributed
            let un = count(n, q, d, &f, &HeightSpec { h_inf: HInf::Weight, omega: Omega::Unramified });
            let one = count(n, q, d, &f, &HeightSpec { h_inf: HInf::Weight, omega: Omega::Points(vec![(1, 0)]) });
            assert_eq!(un, one * BigUint::from(n), "Z/{n} q={q} d={d}");
        }
    }
}

#[test]
fn multidegrees_match_configuration_counts() {
    for (n, q) in [(2u64, 3u64), (3, 7), (4, 5)] {
        let colors = ColorSpec::new(vec![1; n as usize - 1]);
        let mut grid = vec![vec![]];
        for _ in 1..n {
            grid = grid.into_iter().flat_map(|v: Vec<u64>| (0..=3).map(move |k| [v.clone(), vec![k]].concat())).collect();
        }
        for nbar in grid {
            let g = nbar.iter().enumerate().filter(|(_, &k)| k > 0).fold(n, |g, (i, _)| g.gcd(&(i as u64 + 1)));
            let conf = conf_count(q, &colors, &nbar.iter().map(|&k| k as usize).collect::<Vec<_>>()).unwrap();
            let expect = if g == 1 { conf * BigInt::from(n) } else { BigInt::from(0) };
            let got = kummer_multidegree(n, q, &nbar, BUDGET).unwrap();
            assert_eq!(BigInt::from(got), expect, "Z/{n} q={q} n̄={nbar:?}");
        }
    }
}

#[test]
fn invalid_inputs() {
    let h = HeightSpec::standard();
    assert!(matches!(kummer_count(3, 5, 2, &[0, 1, 1], &h, BUDGET), Err(OracleError::InvalidKummer { .. })));
    assert!(matches!(kummer_count(2, 3, 2, &[0, 0], &h, BUDGET), Err(OracleError::BadWeight(2))));
    assert!(matches!(kummer_count(2, 3, 12, &[0, 1], &h, 10), Err(OracleError::BudgetExceeded { .. })));
}

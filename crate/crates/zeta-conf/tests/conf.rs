use num_bigint::BigInt;
use zeta_conf::*;

const BUDGET: u128 = 10_000_000;

#[test]
fn conf_examples() {
    let one = ColorSpec::new(vec![1]);
    assert_eq!(conf_count(3, &one, &[2]).unwrap(), BigInt::from(6));
    assert_eq!(conf_count(7, &one, &[0]).unwrap(), BigInt::from(1));
    let two = ColorSpec::new(vec![1, 1]);
    assert_eq!(conf_count(3, &two, &[1, 1]).unwrap(), BigInt::from(6));
    assert_eq!(brute_conf(3, &one, &[2], BUDGET).unwrap(), 6);
    assert_eq!(brute_conf(5, &one, &[3], BUDGET).unwrap(), 100);
    assert_eq!(conf_count(5, &one, &[3]).unwrap(), BigInt::from(100));
    // an orbit of two classes only colors even-degree points, in two ways
    let inert = ColorSpec::new(vec![2]);
    let expect = 2 * closed_points(3, 2);
    assert_eq!(conf_count(3, &inert, &[1]).unwrap(), BigInt::from(expect));
    assert_eq!(brute_conf(3, &inert, &[1], BUDGET).unwrap(), expect);
}

#[test]
fn squarefree_counts() {
    // squarefree monics of degree n ≥ 2 number q^n − q^{n−1}
    let one = ColorSpec::new(vec![1]);
    for q in [2u64, 3, 4, 5, 7] {
        for n in 2..7usize {
            let want = BigInt::from(q).pow(n as u32) - BigInt::from(q).pow(n as u32 - 1);
            assert_eq!(conf_count(q, &one, &[n]).unwrap(), want);
        }
    }
}

#[test]
fn euler_product_matches_enumeration() {
    let specs = [vec![1], vec![2], vec![1, 1], vec![1, 2], vec![2, 2], vec![1, 1, 2]];
    for q in [2u64, 3, 4, 5] {
        for degs in &specs {
            let colors = ColorSpec::new(degs.clone());
            let k = degs.len();
            let mut nbar = vec![0usize; k];
            loop {
                let total: usize = nbar.iter().zip(degs).map(|(n, m)| n * m).sum();
                if total <= 5 {
                    let a = conf_count(q, &colors, &nbar).unwrap();
                    let b = brute_conf(q, &colors, &nbar, BUDGET).unwrap();
                    assert_eq!(a, BigInt::from(b), "q={q} {degs:?} {nbar:?}");
                    assert!(conf_bound_check(q, &colors, &nbar).unwrap().holds);
                }
                let mut i = 0;
                while i < k {
                    nbar[i] += 1;
                    if nbar.iter().zip(degs).map(|(n, m)| n * m).sum::<usize>() <= 5 {
                        break;
                    }
                    nbar[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
    }
}

#[test]
fn bound_examples() {
    let one = ColorSpec::new(vec![1]);
    let b = conf_bound_check(3, &one, &[2]).unwrap();
    assert_eq!((b.count.as_str(), b.bound.as_str(), b.holds), ("6", "9", true));
    let b = conf_bound_check(3, &one, &[0]).unwrap();
    assert_eq!((b.count.as_str(), b.bound.as_str(), b.holds), ("1", "1", true));
    let b = conf_bound_check(2, &one, &[3]).unwrap();
    assert!(b.holds);
    assert_eq!(b.bound, "8");
}

#[test]
fn budget_and_shape_errors() {
    let one = ColorSpec::new(vec![1]);
    assert!(matches!(brute_conf(5, &one, &[12], 1000), Err(ConfError::BudgetExceeded { .. })));
    assert!(matches!(conf_count(5, &one, &[1, 2]), Err(ConfError::BadColors(_))));
}

#[test]
fn diagonal_specialization() {
    // merging the colors gives the single-variable product with summed point counts
    for q in [2u64, 3, 5] {
        let colors = ColorSpec::new(vec![1, 2, 1]);
        let order = 6;
        let multi = conf_series(q, &colors, &[order, order, order]).specialize_diagonal(order);
        let mut direct = vec![BigInt::from(0); order + 1];
        direct[0] = BigInt::from(1);
        for d in 1..=order {
            let w: usize = (0..3).map(|c| colors.points(c, d)).sum();
            for _ in 0..closed_points(q, d as u64) {
                for n in (d..=order).rev() {
                    let add = direct[n - d].clone() * BigInt::from(w);
                    direct[n] += add;
                }
            }
        }
        assert_eq!(multi.to_vec(), direct, "q={q}");
    }
}

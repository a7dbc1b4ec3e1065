use constants::{constant_data, HInf, HeightSpec, Omega, Setting};
use group_core::{builtin_group, frobenius_structure, WeightFunction};
use oracles::kummer_count;

const BUDGET: u128 = 100_000_000;
const CUTOFF: u64 = 20;
/// Relative gap allowed between an exact count and a single-pole main term.
const REL_TOL: f64 = 0.01;

#[test]
fn point_counts_follow_the_main_term() {
    // C_f is a single rational class, so there is one pole of order one; f(e) = e forces n | d
    for (n, q, f, d) in [(3u64, 7u64, vec![0u64, 1, 2], 9u64), (3, 13, vec![0, 1, 2], 6), (4, 5, vec![0, 1, 2, 3], 8)] {
        let g = builtin_group(&format!("Z{n}")).unwrap();
        let frob = frobenius_structure(&g, q, None).unwrap();
        let w = WeightFunction::from_classes(&frob, &f).unwrap();
        let s = Setting::new(&g, q, None, w, BUDGET).unwrap();
        assert_eq!(s.b(), 1);
        for sigma in 0..n as usize {
            for gamma in 0..n as usize {
                let h = HeightSpec { h_inf: HInf::Weight, omega: Omega::Points(vec![(sigma, gamma)]) };
                let main = constant_data(&s, &h, CUTOFF).unwrap().record(d).main_term.approx.re;
                let exact: f64 = kummer_count(n, q, d, &f, &h, BUDGET).unwrap().to_string().parse().unwrap();
                assert!((exact / main - 1.0).abs() < REL_TOL, "Z/{n} q={q} ({sigma},{gamma}): {exact} vs {main}");
                let off = constant_data(&s, &h, CUTOFF).unwrap().record(d - 1).main_term.approx.norm();
                assert!(off < 1e-6 * main, "Z/{n} q={q} d={}", d - 1);
            }
        }
    }
}

use group_core::Qz;
use num_traits::{One, Zero};
use zeta_conf::{closed_points, Cyclo};

use crate::error::ConstantsError;
use crate::phase::PhasePoly;
use crate::setting::Setting;
use crate::value::Value;

fn check(s: &Setting, beta: usize) -> Result<(), ConstantsError> {
    if beta >= s.brauer.order() {
        return Err(ConstantsError::UnknownElement(beta));
    }
    Ok(())
}

/// Local factor at a closed point of degree `deg`, summed over the orbits in `C_β`.
pub fn euler_factor(s: &Setting, beta: usize, alpha: Qz, deg: u64) -> Result<Value, ConstantsError> {
    euler_factor_on(s, beta, alpha, deg, &s.c_beta(beta))
}

/// As [`euler_factor`], restricted to the given orbits (which must lie in `C_β`).
pub fn euler_factor_on(s: &Setting, beta: usize, alpha: Qz, deg: u64, orbits: &[usize]) -> Result<Value, ConstantsError> {
    check(s, beta)?;
    let mut total = Value::int(1);
    for &o in orbits {
        let od = &s.orbits[o];
        let m = od.degree as u64;
        if deg % m != 0 {
            continue;
        }
        let v = s.residues[beta][o].ok_or(ConstantsError::NotInSubset(format!("orbit {o} has no algebraic residue")))?;
        let phase = v.scale((deg / m) as i64) - alpha.scale((deg * od.weight) as i64);
        let term = Value::int(m as i64)
            * Value::e(phase.num(), phase.den() as u64)
            * Value::q_power(s.q, -((deg * od.weight) as i64), s.fmin());
        total = total + term;
    }
    Ok(total)
}

fn poly_mul(a: &[Cyclo], b: &[Cyclo], n: usize) -> Vec<Cyclo> {
    let mut out = vec![Cyclo::zero(); n + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            if !y.is_zero() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
    }
    out
}

fn poly_pow(a: &[Cyclo], mut e: u128, n: usize) -> Vec<Cyclo> {
    let mut acc = vec![Cyclo::zero(); n + 1];
    acc[0] = Cyclo::one();
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul(&acc, &base, n);
        }
        e >>= 1;
        if e > 0 {
            base = poly_mul(&base, &base, n);
        }
    }
    acc
}

/// Coefficients of `X⁰..X^n` in `F_β(X) = ∏_P (1 + Σ_{c ∈ C_β(F_q(P))} e(cor ∂_c β) X^{deg P·f(c)})`.
pub fn f_series(s: &Setting, beta: usize, n: usize) -> Result<Vec<Cyclo>, ConstantsError> {
    f_series_on(s, beta, n, &s.c_beta(beta))
}

pub fn f_series_on(s: &Setting, beta: usize, n: usize, orbits: &[usize]) -> Result<Vec<Cyclo>, ConstantsError> {
    check(s, beta)?;
    let mut acc = vec![Cyclo::zero(); n + 1];
    acc[0] = Cyclo::one();
    for d in 1..=n as u64 {
        let mut factor = vec![Cyclo::zero(); n + 1];
        factor[0] = Cyclo::one();
        let mut any = false;
        for &o in orbits {
            let od = &s.orbits[o];
            let m = od.degree as u64;
            let e = (d * od.weight) as usize;
            if d % m != 0 || e > n {
                continue;
            }
            let v = s.residues[beta][o].ok_or(ConstantsError::NotInSubset(format!("orbit {o} has no algebraic residue")))?;
            let phase = v.scale((d / m) as i64);
            factor[e] = factor[e].clone() + Cyclo::from_int(m as i64) * Cyclo::e(phase.num(), phase.den() as u64);
            any = true;
        }
        if any {
            acc = poly_mul(&acc, &poly_pow(&factor, closed_points(s.q, d), n), n);
        }
    }
    Ok(acc)
}

/// `E(t)·∏_{o ⊆ C_f} ∏_{k=1}^{m_o} (1 − [k/m_o] t^{fmin})` as a formal phase polynomial,
/// where `E` is the Euler factor at degree one with `t = q^{−a(f)}`.
pub fn absolute_part(s: &Setting, beta: usize, alpha: Qz, orbits: &[usize]) -> Result<PhasePoly, ConstantsError> {
    check(s, beta)?;
    let fmin = s.fmin() as usize;
    let mut e = PhasePoly::one();
    let mut removal = PhasePoly::one();
    let mut top = 0;
    for &o in orbits {
        let od = &s.orbits[o];
        let m = od.degree as i64;
        let v = s.residues[beta][o].ok_or(ConstantsError::NotInSubset(format!("orbit {o} has no algebraic residue")))?;
        let shift = Qz::new(v.num(), v.den() * m) - alpha.scale(od.weight as i64);
        for k in 1..=m {
            e.add_term(od.weight as usize, Qz::new(k, m) + shift, 1);
        }
        top = top.max(od.weight as usize);
    }
    for od in s.orbits.iter().filter(|od| od.in_c_f) {
        let m = od.degree as i64;
        for k in 1..=m {
            top += fmin;
            removal = removal.mul(&PhasePoly::binomial(fmin, Qz::new(k, m), 1, usize::MAX), usize::MAX);
        }
    }
    Ok(e.mul(&removal, top))
}

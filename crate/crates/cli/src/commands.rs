use anyhow::{bail, ensure, Context, Result};
use braid_hurwitz::{default_budget, multidegree, orbit_enumerate};
use brauer::enumerate_brauer;
use constants::{constant_data, constant_data_unbalanced, ConstantData, HeightSpec, Setting, Value};
use group_core::{
    abelianization, conjugacy_classes, frobenius_structure, moebius_abelian, subgroup_interval,
    AbelianGroup, FiniteGroup, WeightFunction,
};
use lifting::{build_lifting_data, frobenius_on_u, LiftingData};
use oracles::kummer_count;
use serde_json::json;
use zeta_conf::{brute_conf, conf_bound_check, conf_count, ColorSpec};

use crate::config::{self, RunConfig};
use crate::report::{Report, Table, CONVENTIONS};
use crate::{Cli, Command, FieldArgs, HeightArgs};

fn report(command: &'static str, config: RunConfig, result: serde_json::Value, table: Option<Table>) -> Report {
    Report { command, version: env!("CARGO_PKG_VERSION"), config, conventions: CONVENTIONS, result, passed: true, table }
}

fn exact_or_float(v: &Value) -> String {
    match &v.exact {
        Some(c) => c.to_string(),
        None => format!("{:.12e}", v.approx.re),
    }
}

fn lifting_for(g: &FiniteGroup, classes: &[usize], budget: u128) -> Result<LiftingData> {
    let ct = conjugacy_classes(g);
    let elems = ct.union(classes);
    build_lifting_data(g, &elems, budget).context("building U(G,C)")
}

struct Prepared {
    setting: Setting,
    height: HeightSpec,
    m: Option<Vec<usize>>,
    config: RunConfig,
}

fn prepare(gspec: &str, field: &FieldArgs, h: &HeightArgs, budget: u128) -> Result<Prepared> {
    let g = config::group(gspec)?;
    let frob = frobenius_structure(&g, field.q, field.twist).context("--q/--twist")?;
    let f = match &h.f {
        Some(s) => config::weights(&frob, s)?,
        None => {
            let mut v = vec![1; frob.classes.len()];
            v[0] = 0;
            v
        }
    };
    let w = WeightFunction::from_classes(&frob, &f).context("--f")?;
    let height = config::height(&g, &h.h_inf, &h.omega)?;
    let m = h.m.as_deref().map(|s| config::list_usize("--m", s)).transpose()?;
    let setting = Setting::new(&g, field.q, field.twist, w, budget).context("setting up the Brauer data")?;
    let config = RunConfig {
        group: Some(g.name().to_string()),
        group_order: Some(g.order()),
        q: Some(field.q),
        twist: field.twist,
        f: Some(f),
        height: Some(height.clone()),
        cutoff: Some(h.cutoff),
        budget,
        ..Default::default()
    };
    Ok(Prepared { setting, height, m, config })
}

fn data_for(p: &Prepared, cutoff: u64) -> Result<ConstantData> {
    match &p.m {
        Some(m) => Ok(constant_data_unbalanced(&p.setting, m, &p.height, cutoff)?),
        None => constant_data(&p.setting, &p.height, cutoff).map_err(|e| match e {
            constants::ConstantsError::UnbalancedInput => {
                anyhow::anyhow!("C_f does not generate G; pass --m with the subgroup it generates")
            }
            e => e.into(),
        }),
    }
}

/// Rejects `d` with `q^{a d} > 2^63`, beyond which float projections lose meaning.
fn check_d(q: u64, fmin: u64, ds: &[u64]) -> Result<()> {
    let cap = 63.0 * 2f64.ln();
    for &d in ds {
        ensure!(
            (d as f64 / fmin as f64) * (q as f64).ln() <= cap,
            "--d: q^(a·d) exceeds 2^63 at d = {d}; use a smaller range"
        );
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Report> {
    let budget = cli.budget.unwrap_or_else(default_budget);
    match &cli.command {
        Command::Group(a) => {
            let g = config::group(&a.group)?;
            let ct = conjugacy_classes(&g);
            let ab = abelianization(&g);
            let mut t = Table::new(&["class", "size", "element_order", "representative"]);
            let classes: Vec<_> = ct
                .classes
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let ord = g.element_order(c[0]);
                    t.push(vec![i.to_string(), c.len().to_string(), ord.to_string(), c[0].to_string()]);
                    json!({"class": i, "size": c.len(), "element_order": ord, "elements": c})
                })
                .collect();
            let result = json!({
                "name": g.name(),
                "order": g.order(),
                "exponent": g.exponent(),
                "abelian": g.is_abelian(),
                "center": g.center(),
                "abelianization": ab.group.invariants,
                "classes": classes,
            });
            let cfg = RunConfig { group: Some(g.name().into()), group_order: Some(g.order()), budget, ..Default::default() };
            Ok(report("group", cfg, result, Some(t)))
        }
        Command::Orbits { group, nbar, gamma, connected } => {
            let g = config::group(&group.group)?;
            let ct = conjugacy_classes(&g);
            let mut n = config::list_usize("--nbar", nbar)?;
            if n.len() + 1 == ct.len() {
                n.insert(0, 0);
            }
            ensure!(n.len() == ct.len(), "--nbar: expected {} entries, got {}", ct.len() - 1, n.len());
            ensure!(n[ct.class_of[g.identity()]] == 0, "--nbar: the identity class must have multiplicity 0");
            ensure!(*gamma < g.order(), "--gamma: element {gamma} out of range");
            let cat = orbit_enumerate(&g, &ct, &n, *gamma, *connected, budget)?;
            let mut t = Table::new(&["orbit", "size", "representative", "multidegree"]);
            for (i, o) in cat.orbits.iter().enumerate() {
                let md = multidegree(&ct, &o.representative);
                t.push(vec![i.to_string(), o.size.to_string(), format!("{:?}", o.representative), format!("{md:?}")]);
            }
            let cfg = RunConfig {
                group: Some(g.name().into()),
                group_order: Some(g.order()),
                nbar: Some(n),
                gamma: Some(*gamma),
                budget,
                ..Default::default()
            };
            Ok(report("orbits", cfg, serde_json::to_value(&cat)?, Some(t)))
        }
        Command::H2 { group, classes } => {
            let g = config::group(&group.group)?;
            let cl = config::classes(&g, classes)?;
            let l = lifting_for(&g, &cl, budget)?;
            let result = json!({
                "h2_order": l.h2_order(),
                "h2_invariants": l.a_torsion,
                "a_free_rank": l.a_free_rank,
                "schreier_rank": l.schreier_rank,
                "c_classes": l.c_classes,
                "snf_certificate": l.snf,
            });
            let mut t = Table::new(&["invariant"]);
            for d in &l.a_torsion {
                t.push(vec![d.to_string()]);
            }
            let cfg = RunConfig {
                group: Some(g.name().into()),
                group_order: Some(g.order()),
                classes: Some(cl),
                budget,
                ..Default::default()
            };
            Ok(report("h2", cfg, result, Some(t)))
        }
        Command::Lifting { group, classes, tuple } => {
            let g = config::group(&group.group)?;
            let cl = config::classes(&g, classes)?;
            let l = lifting_for(&g, &cl, budget)?;
            let t = config::list_usize("--tuple", tuple)?;
            let u = l.lifting_invariant(&t).context("--tuple")?;
            let coords = l.a_coordinates(&l.mul(&u, &l.inv(&l.section_element(u.g))));
            let result = json!({"tuple": t, "invariant": u, "a_coordinates": coords, "c_classes": l.c_classes});
            let cfg = RunConfig {
                group: Some(g.name().into()),
                group_order: Some(g.order()),
                classes: Some(cl),
                budget,
                ..Default::default()
            };
            Ok(report("lifting", cfg, result, None))
        }
        Command::Brauer { group, field, classes } => {
            let g = config::group(&group.group)?;
            let cl = config::classes(&g, classes)?;
            let l = lifting_for(&g, &cl, budget)?;
            let frob = frobenius_structure(&g, field.q, field.twist).context("--q/--twist")?;
            let fu = frobenius_on_u(&l, &frob)?;
            let br = enumerate_brauer(&l, &fu);
            let gab = abelianization(&g).fixed_points(&g, &frob);
            let h2f = fu.h2_fixed_count(&l);
            let mut t = Table::new(&["index", "alpha", "psi"]);
            for (i, b) in br.elements.iter().enumerate() {
                let s = |v: &[group_core::Qz]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                t.push(vec![i.to_string(), s(&b.alpha), s(&b.psi)]);
            }
            let result = json!({
                "order": br.order(),
                "gab_twisted_points": gab,
                "h2_frobenius_fixed": h2f,
                "size_identity_holds": br.order() as u64 == gab * h2f,
                "group": br,
            });
            let cfg = RunConfig {
                group: Some(g.name().into()),
                group_order: Some(g.order()),
                q: Some(field.q),
                twist: field.twist,
                classes: Some(cl),
                budget,
                ..Default::default()
            };
            let mut r = report("brauer", cfg, result, Some(t));
            r.passed = br.order() as u64 == gab * h2f;
            Ok(r)
        }
        Command::Conf { q, degrees, nbar, brute } => {
            let colors = ColorSpec::new(config::list_usize("--degrees", degrees)?);
            let n = config::list_usize("--nbar", nbar)?;
            ensure!(n.len() == colors.degrees.len(), "--nbar: one entry per color ({} colors)", colors.degrees.len());
            let count = conf_count(*q, &colors, &n)?;
            let bound = conf_bound_check(*q, &colors, &n)?;
            let brute_count = if *brute { Some(brute_conf(*q, &colors, &n, budget)?.to_string()) } else { None };
            let agrees = brute_count.as_ref().map(|b| *b == count.to_string());
            let mut t = Table::new(&["q", "degrees", "nbar", "count", "brute", "bound"]);
            t.push(vec![
                q.to_string(),
                degrees.clone(),
                nbar.clone(),
                count.to_string(),
                brute_count.clone().unwrap_or_default(),
                bound.bound.clone(),
            ]);
            let result = json!({"count": count.to_string(), "brute": brute_count, "agrees": agrees, "bound": bound});
            let cfg = RunConfig { q: Some(*q), nbar: Some(n), budget, ..Default::default() };
            let mut r = report("conf", cfg, result, Some(t));
            r.passed = agrees != Some(false) && bound.holds;
            Ok(r)
        }
        Command::Constant { group, field, height } => {
            let p = prepare(&group.group, field, height, budget)?;
            let data = data_for(&p, height.cutoff)?;
            let mut t = Table::new(&["alpha", "pole_order", "coeff_exact", "coeff_re", "coeff_im"]);
            for pole in &data.poles.poles {
                t.push(vec![
                    (-pole.z).to_string(),
                    pole.order.to_string(),
                    pole.coeff.exact.as_ref().map(|c| c.to_string()).unwrap_or_default(),
                    format!("{:.12e}", pole.coeff.approx.re),
                    format!("{:.12e}", pole.coeff.approx.im),
                ]);
            }
            Ok(report("constant", p.config, serde_json::to_value(&data)?, Some(t)))
        }
        Command::Predict { group, field, height, d } => {
            let mut p = prepare(&group.group, field, height, budget)?;
            let ds = config::range("--d", d)?;
            check_d(field.q, p.setting.fmin(), &ds)?;
            let data = data_for(&p, height.cutoff)?;
            let mut t = Table::new(&["d", "c_h", "c_h_re", "c_h_im", "main_term", "main_term_re", "period"]);
            let rows: Vec<_> = ds
                .iter()
                .map(|&d| {
                    let r = data.record(d);
                    t.push(vec![
                        d.to_string(),
                        r.c_h.exact.as_ref().map(|c| c.to_string()).unwrap_or_default(),
                        format!("{:.12e}", r.c_h.approx.re),
                        format!("{:.12e}", r.c_h.approx.im),
                        r.main_term.exact.as_ref().map(|c| c.to_string()).unwrap_or_default(),
                        format!("{:.12e}", r.main_term.approx.re),
                        r.period.to_string(),
                    ]);
                    json!({"d": d, "c_h": r.c_h, "main_term": r.main_term})
                })
                .collect();
            p.config.d = Some(ds);
            let result = json!({"period": data.period, "b": data.b, "a": data.a, "poles": data.poles, "predictions": rows});
            Ok(report("predict", p.config, result, Some(t)))
        }
        Command::CompareOracle { group, q, height, d, check, tolerance } => {
            let g = config::group(&group.group)?;
            let n = g.order() as u64;
            ensure!(
                (0..g.order()).all(|a| (0..g.order()).all(|b| g.mul(a, b) == (a + b) % g.order())),
                "compare-oracle needs Z/n with element k standing for k (a builtin Zn)"
            );
            let field = FieldArgs { q: *q, twist: None };
            let mut p = prepare(&group.group, &field, height, budget)?;
            let ds = config::range("--d", d)?;
            check_d(*q, p.setting.fmin(), &ds)?;
            let data = data_for(&p, height.cutoff)?;
            let f = p.config.f.clone().expect("set by prepare");
            let mut t = Table::new(&["d", "oracle", "predicted", "deviation", "relative"]);
            let mut ok = true;
            let mut rows = Vec::new();
            for &dd in &ds {
                let oracle = kummer_count(n, *q, dd, &f, &p.height, budget)?;
                let main = data.record(dd).main_term;
                let o: f64 = oracle.to_string().parse().expect("integer");
                let (dev, rel) = match main.as_rational() {
                    Some(r) => {
                        let dev = constants::Value::ratio(num_rational_from(&oracle) - r);
                        let dv = dev.approx.re;
                        (dev.to_string(), if o == 0.0 { dv.abs() } else { dv / o })
                    }
                    None => {
                        let dv = o - main.approx.re;
                        (format!("{dv:.6e}"), if o == 0.0 { dv.abs() } else { dv / o })
                    }
                };
                if rel.abs() > *tolerance {
                    ok = false;
                }
                t.push(vec![dd.to_string(), oracle.to_string(), exact_or_float(&main), dev.clone(), format!("{rel:.3e}")]);
                rows.push(json!({"d": dd, "oracle": oracle.to_string(), "predicted": main, "deviation": dev, "relative": rel}));
            }
            p.config.d = Some(ds);
            let result = json!({"period": data.period, "rows": rows, "tolerance": tolerance, "within_tolerance": ok});
            let mut r = report("compare-oracle", p.config, result, Some(t));
            r.passed = ok || !*check;
            Ok(r)
        }
        Command::Mobius { invariants, group, m } => match (invariants, group, m) {
            (Some(inv), None, None) => {
                let a = AbelianGroup::from_cyclic(&config::list_u64("--invariants", inv)?);
                let mu = moebius_abelian(&a);
                let mut t = Table::new(&["invariants", "mu"]);
                t.push(vec![format!("{:?}", a.invariants), mu.to_string()]);
                let result = json!({"invariants": a.invariants, "order": a.order(), "mu": mu});
                Ok(report("mobius", RunConfig { budget, ..Default::default() }, result, Some(t)))
            }
            (None, Some(gs), Some(ms)) => {
                let g = config::group(gs)?;
                let m = config::list_usize("--m", ms)?;
                let entries = subgroup_interval(&g, &m).context("--m")?;
                let mut t = Table::new(&["subgroup_order", "quotient", "mu"]);
                let rows: Vec<_> = entries
                    .iter()
                    .map(|e| {
                        let mu = moebius_abelian(&e.quotient);
                        t.push(vec![e.elements.len().to_string(), format!("{:?}", e.quotient.invariants), mu.to_string()]);
                        json!({"elements": e.elements, "quotient": e.quotient.invariants, "mu": mu})
                    })
                    .collect();
                let cfg = RunConfig { group: Some(g.name().into()), group_order: Some(g.order()), budget, ..Default::default() };
                Ok(report("mobius", cfg, json!({"interval": rows}), Some(t)))
            }
            _ => bail!("mobius: give --invariants, or --group together with --m"),
        },
    }
}

fn num_rational_from(n: &num_bigint::BigUint) -> num_rational::BigRational {
    num_rational::BigRational::from_integer(num_bigint::BigInt::from(n.clone()))
}

//! Dispatch of task-file operations to the library, filling a [`Report`].

use anyhow::{Context, Result};
use serde_json::{json, Value};

use snhom_core::complexes::SnComplex;
use snhom_core::groups::{
    bot_section, bounded_cohomology, classical_l1, duality_check, hausdorff_les, hausdorffified,
    hausdorffified_comparison, l1_homology, les_coefficients, q_comparison_l1, GPairModule, Limits, SesMorphism,
};
use snhom_core::hearts::{h_left, h_right, realization_witness, HeartInvariants};
use snhom_core::io::{IoError, Resolved};
use snhom_core::laws;
use snhom_core::sn::{HomologyLadder, PairMap, PairSpace};

use crate::report::Report;

pub const OPS: [&str; 10] = [
    "ladder",
    "h_left",
    "h_right",
    "l1_homology",
    "bounded_cohomology",
    "classical",
    "duality",
    "les",
    "bot_projective",
    "check",
];

/// Settings that do not come from the task file.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub max_degree: usize,
    pub limits: Limits,
}

fn space(a: &PairSpace) -> Value {
    json!({ "dim": a.dim(), "null_dim": a.null_dim() })
}

fn invariants(x: HeartInvariants) -> Value {
    json!({ "w": x.w, "h_null": x.h_null, "h_quot": x.h_quot })
}

fn map_props(f: &PairMap) -> Value {
    json!({ "monic": f.is_monic(), "epic": f.is_epic(), "strict": f.is_strict(), "iso": f.is_iso() })
}

fn invalid(at: &str, message: impl Into<String>) -> anyhow::Error {
    IoError::Invalid { at: at.into(), message: message.into() }.into()
}

/// Degree window for complex operations: the task's, else the complex's support.
fn complex_degrees(r: &Resolved, c: &SnComplex) -> Result<Vec<i64>> {
    let [lo, hi] = r.task.degrees.unwrap_or([c.lo(), c.hi()]);
    if lo > hi {
        return Err(invalid("task.degrees", format!("empty window [{lo}, {hi}]")));
    }
    Ok((lo..=hi).collect())
}

/// Degree window for group operations: the task's, else `0..=max_degree`.
fn group_degrees(r: &Resolved, s: &Settings) -> Result<Vec<usize>> {
    let [lo, hi] = r.task.degrees.unwrap_or([0, s.max_degree as i64]);
    if lo < 0 || lo > hi {
        return Err(invalid("task.degrees", format!("expected 0 <= lo <= hi, got [{lo}, {hi}]")));
    }
    Ok((lo as usize..=hi as usize).collect())
}

fn top_degree(r: &Resolved, s: &Settings) -> Result<usize> {
    Ok(*group_degrees(r, s)?.last().expect("window is nonempty"))
}

pub fn run(r: &Resolved, s: &Settings, report: &mut Report) -> Result<()> {
    match r.task.op.as_str() {
        "ladder" => ladder(r, report),
        "h_left" => left(r, report),
        "h_right" => right(r, report),
        "l1_homology" => homology(r, s, report),
        "bounded_cohomology" => cohomology(r, s, report),
        "classical" => classical(r, s, report),
        "duality" => duality(r, s, report),
        "les" => les(r, s, report),
        "bot_projective" => bot_projective(r, report),
        "check" => check(r, s, report),
        other => Err(invalid("task.op", format!("unknown operation {other:?}; expected one of {}", OPS.join(", ")))),
    }
}

fn ladder(r: &Resolved, report: &mut Report) -> Result<()> {
    let (f, g) = (r.map_arg("f")?, r.map_arg("g")?);
    let l = HomologyLadder::new(f, g).map_err(|e| invalid("task.args", e.to_string()))?;
    report.results.push(json!({
        "objects": {
            "coim_f": space(&l.coim_f.object),
            "ker_g": space(&l.ker_g.object),
            "coker_f": space(&l.coker_f.object),
            "im_g": space(&l.im_g.object),
            "im_f": space(&l.im_f.object),
            "x": space(&l.x.object),
        },
        "phi": map_props(&l.phi),
        "psi": map_props(&l.psi),
        "u": map_props(&l.u),
    }));
    let failures = l.failures();
    for name in ["phi monic", "psi epic", "u strict", "X = Coker phi", "X = Ker psi", "X = Im u", "Ker u = Im f", "Coker u = Coim g"] {
        report.check(name, !failures.contains(&name));
    }
    for (name, w) in [
        ("X -> Coker phi", &l.x_to_coker_phi),
        ("X -> Ker psi", &l.x_to_ker_psi),
        ("X -> Im u", &l.x_to_im_u),
        ("Coim u -> Im u", &l.coim_u_to_im_u),
        ("Im f -> Ker u", &l.im_f_to_ker_u),
        ("Coker u -> Coim g", &l.coker_u_to_coim_g),
    ] {
        report.witness(name, json!(w.matrix()));
    }
    Ok(())
}

fn left(r: &Resolved, report: &mut Report) -> Result<()> {
    let c = r.complex_arg("complex")?;
    for n in complex_degrees(r, c)? {
        let x = h_left(c, n)?;
        let t = x.realization();
        report.results.push(json!({
            "degree": n,
            "invariants": invariants(x.invariants()),
            "realized": { "top": t.rep.top, "bottom": t.rep.bottom },
            "q_l": space(&x.q_l().object),
        }));
        let w = realization_witness(c, n)?;
        report.check(format!("realization in degree {n}"), w.is_iso());
        report.witness(format!("realization in degree {n}"), json!({ "top": w.top, "bottom": w.bottom }));
    }
    Ok(())
}

fn right(r: &Resolved, report: &mut Report) -> Result<()> {
    let c = r.complex_arg("complex")?;
    for n in complex_degrees(r, c)? {
        let h = h_right(c, n)?;
        report.results.push(json!({
            "degree": n,
            "invariants": invariants(h.direct.invariants()),
            "q_r": space(&h.direct.q_r().object),
        }));
        report.check(format!("transport agrees in degree {n}"), h.direct.invariants() == h.transported.invariants());
        report.check(format!("alpha invertible in degree {n}"), h.alpha.is_iso());
        report.check(format!("beta invertible in degree {n}"), h.beta.is_iso());
        report.witness(format!("alpha in degree {n}"), json!(h.alpha.matrix()));
        report.witness(format!("beta in degree {n}"), json!(h.beta.matrix()));
    }
    Ok(())
}

fn homology(r: &Resolved, s: &Settings, report: &mut Report) -> Result<()> {
    let m = r.module_arg("module")?;
    for n in group_degrees(r, s)? {
        let h = l1_homology(m, n, &s.limits)?;
        let mut entry = json!({
            "degree": n,
            "invariants": invariants(h.invariants()),
            "q_r": space(&h.q_r().object),
            "classical": space(&classical_l1(m, n, &s.limits)?),
            "hausdorffified_dim": hausdorffified(m, n, &s.limits)?.dim(),
        });
        if n == 0 {
            entry["coinvariants"] = space(&m.coinvariants().object);
        }
        report.results.push(entry);
        let hd = hausdorffified_comparison(m, n, &s.limits)?;
        report.check(format!("Hd comparison in degree {n}"), hd.is_iso());
        let q = q_comparison_l1(m, n, &s.limits)?;
        report.check(format!("q_l/q_r comparison in degree {n}"), q.is_iso());
    }
    Ok(())
}

fn cohomology(r: &Resolved, s: &Settings, report: &mut Report) -> Result<()> {
    let m = r.module_arg("module")?;
    for n in group_degrees(r, s)? {
        let h = bounded_cohomology(m, n, &s.limits)?;
        let mut entry = json!({
            "degree": n,
            "invariants": invariants(h.invariants()),
            "q_l": space(&h.q_l().object),
        });
        if n == 0 {
            entry["invariant_vectors"] = space(&m.invariants().object);
        }
        report.results.push(entry);
    }
    Ok(())
}

fn classical(r: &Resolved, s: &Settings, report: &mut Report) -> Result<()> {
    let m = r.module_arg("module")?;
    for n in group_degrees(r, s)? {
        report.results.push(json!({
            "degree": n,
            "classical": space(&classical_l1(m, n, &s.limits)?),
            "hausdorffified_dim": hausdorffified(m, n, &s.limits)?.dim(),
        }));
    }
    Ok(())
}

fn duality(r: &Resolved, s: &Settings, report: &mut Report) -> Result<()> {
    let m = r.module_arg("module")?;
    let d = duality_check(m, top_degree(r, s)?, &s.limits)?;
    report.check("D(↑E) ≅ ⇑D(E)", d.induced_dual);
    report.check("coinvariants and invariants intertwine with D", d.intertwining);
    for deg in &d.degrees {
        report.results.push(json!({
            "degree": deg.degree,
            "homology_dual": invariants(deg.homology_dual),
            "cohomology": invariants(deg.cohomology),
        }));
        report.check(format!("duality in degree {}", deg.degree), deg.passed);
        report.witness(
            format!("duality in degree {}", deg.degree),
            json!({ "domain": deg.witness_domain, "codomain": deg.witness_codomain }),
        );
    }
    Ok(())
}

fn les(r: &Resolved, s: &Settings, report: &mut Report) -> Result<()> {
    let sigma = r.sequence_arg("sequence")?;
    let top = top_degree(r, s)?;
    let id = SesMorphism::identity(sigma);
    let (les, natural) = les_coefficients(sigma, top, Some((sigma, &id)), &s.limits)?;
    for (k, node) in les.nodes.iter().enumerate() {
        let (w, h_null, h_quot) = node.homology.rep.invariants();
        report.results.push(json!({
            "node": k,
            "cohomological_degree": node.degree,
            "kind": node.kind,
            "realized": { "top": node.homology.rep.top, "bottom": node.homology.rep.bottom },
            "invariants": { "w": w, "h_null": h_null, "h_quot": h_quot },
        }));
        report.check(format!("exact at node {k}"), les.exact_at(k));
    }
    report.check("connecting maps natural", natural == Some(true));
    let hd = hausdorff_les(sigma, top, &s.limits)?;
    report.extra.insert(
        "hausdorffified".into(),
        json!({ "dims": hd.dims, "non_exact_nodes": hd.failures, "heart_exact": hd.heart_exact }),
    );
    Ok(())
}

fn bot_projective(r: &Resolved, report: &mut Report) -> Result<()> {
    let m: &GPairModule = r.module_arg("module")?;
    let section = bot_section(m)?;
    report.results.push(json!({ "bot_projective": section.is_some() }));
    if let Some(sec) = section {
        report.witness("section of the counit", json!(sec.map().matrix()));
    }
    Ok(())
}

fn check(r: &Resolved, s: &Settings, report: &mut Report) -> Result<()> {
    let (suite, instance) = laws::instance_from_task(r)?;
    let out = laws::check(suite, &instance, &s.limits);
    report.results.push(json!({
        "suite": suite.name(),
        "checks": out.checks,
        "witnesses": out.witnesses,
        "failures": out.failures,
    }));
    report.check(format!("suite {} on the given instance", suite.name()), out.failures.is_empty());
    Ok(())
}

/// The `les` and `duality` commands run their own operation on the task's objects.
pub fn force_op(r: &mut Resolved, op: &str) {
    r.task.op = op.into();
}

pub fn read(path: &std::path::Path) -> Result<Vec<u8>> {
    std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))
}

//! Seeded law suites. Each case draws an instance from its own random stream,
//! checks it, and on failure reduces it to a standalone task file.

use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::SnComplex;
use crate::gen;
use crate::groups::{
    bar_resolution, bounded_cohomology, coinvariant_oracle, duality_check, equivariant_splitting, hausdorff_les,
    hausdorff_les_witness, hausdorffified_comparison, hom_g, is_bot_projective, l1_homology, les_coefficients,
    q_comparison_l1, tensor_over_g, verify_adjunctions, FiniteGroup, GMap, GPairModule, Limits, ModuleSes,
    SesMorphism,
};
use crate::hearts::{
    adjunction_failures, h_left, h_right, heart_dual_witness, iota_r, q_comparison, q_r_non_exactness_witness,
    realization_witness, HeartInvariants,
};
use crate::io::{IoError, Resolved, TaskBuilder, TaskFile};
use crate::linalg::Field;
use crate::oracle::{trivial_homology_dims, RoofOracle};
use crate::sn::{
    biduality_unit, curry_iso, delta_map, delta_space, dual_cokernel_iso, dual_image_iso, dual_map, dual_space,
    hausdorffify, is_kernel_cokernel_pair, null_map, null_part, HomologyLadder, PairMap, PairSpace, Pullback, Pushout,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Ladder,
    Sn,
    Classification,
    Realization,
    Hearts,
    Modules,
    DeltaFunctor,
    RankOracle,
    Duality,
    Comparison,
    Counterexamples,
    Splitting,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Ladder,
        Suite::Sn,
        Suite::Classification,
        Suite::Realization,
        Suite::Hearts,
        Suite::Modules,
        Suite::DeltaFunctor,
        Suite::RankOracle,
        Suite::Duality,
        Suite::Comparison,
        Suite::Counterexamples,
        Suite::Splitting,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ladder => "ladder",
            Suite::Sn => "sn",
            Suite::Classification => "classification",
            Suite::Realization => "realization",
            Suite::Hearts => "hearts",
            Suite::Modules => "modules",
            Suite::DeltaFunctor => "delta-functor",
            Suite::RankOracle => "rank-oracle",
            Suite::Duality => "duality",
            Suite::Comparison => "comparison",
            Suite::Counterexamples => "counterexamples",
            Suite::Splitting => "splitting",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Suites drawing coefficient samples share one stream, so they see the same modules.
    fn salt(self) -> u64 {
        match self {
            Suite::DeltaFunctor | Suite::Duality | Suite::Comparison | Suite::Splitting => 6,
            s => Suite::ALL.iter().position(|&t| t == s).expect("listed") as u64 + 100,
        }
    }
}

/// One instance of a law.
#[derive(Clone, Debug)]
pub enum Instance {
    Pair(PairMap, PairMap),
    Monic(PairMap),
    Complex(SnComplex),
    Sequence(ModuleSes),
    Modules(Vec<GPairModule>),
    Group(FiniteGroup, Field),
    Battery(Field),
}

const FIELDS: [Field; 3] = [Field::Rationals, Field::Prime { p: 2 }, Field::Prime { p: 5 }];

fn sample_group(index: usize) -> (FiniteGroup, Field) {
    gen::sample_groups().swap_remove(index % 3)
}

/// Coefficient samples: a strict short exact sequence and a non-Hausdorff module.
pub fn coefficient_sample(seed: u64, index: usize) -> (ModuleSes, GPairModule) {
    let (g, f) = sample_group(index);
    let mut r = gen::case_rng(seed, Suite::DeltaFunctor.salt(), index as u64);
    let s = gen::module_ses(&g, f, 3, &mut r);
    let m = gen::non_hausdorff_module(&g, f, 3, &mut r);
    (s, m)
}

pub fn generate(suite: Suite, seed: u64, index: usize) -> Instance {
    let mut r = gen::case_rng(seed, suite.salt(), index as u64);
    let field = FIELDS[index % 3];
    match suite {
        Suite::Ladder => {
            let (f, g) = gen::composable_pair(field, 6, &mut r);
            Instance::Pair(f, g)
        }
        Suite::Sn => {
            let (f, g) = gen::composable_pair(field, 4, &mut r);
            Instance::Pair(f, g)
        }
        Suite::Classification => {
            let o = RoofOracle::small();
            Instance::Monic(o.objects[index % o.objects.len()].clone())
        }
        Suite::Realization | Suite::Hearts => {
            let lo = rand::Rng::gen_range(&mut r, -2..=0);
            Instance::Complex(gen::complex(field, lo, 4, 4, &mut r))
        }
        Suite::Modules => {
            let (g, f) = sample_group(index);
            let a = gen::module(&g, f, 3, &mut r);
            let b = gen::module(&g, f, 3, &mut r);
            Instance::Modules(vec![a, b])
        }
        Suite::DeltaFunctor => Instance::Sequence(coefficient_sample(seed, index).0),
        Suite::Duality | Suite::Comparison | Suite::Splitting => {
            let (s, m) = coefficient_sample(seed, index);
            Instance::Modules(vec![s.sub().clone(), s.total().clone(), s.quotient().clone(), m])
        }
        Suite::RankOracle => {
            let (g, f) = sample_group(index);
            Instance::Group(g, f)
        }
        Suite::Counterexamples => Instance::Battery(FIELDS[index % 3]),
    }
}

/// Result of checking one instance.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub checks: usize,
    pub witnesses: usize,
    pub failures: Vec<String>,
    /// The smallest part of the instance that still fails.
    pub culprit: Option<Instance>,
}

impl Outcome {
    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures.push(name.into());
        }
    }

    fn witnessed<T, E: std::fmt::Display>(&mut self, name: &str, r: Result<T, E>) -> Option<T> {
        self.checks += 1;
        match r {
            Ok(v) => {
                self.witnesses += 1;
                Some(v)
            }
            Err(e) => {
                self.failures.push(format!("{name}: {e}"));
                None
            }
        }
    }

    fn merge(&mut self, other: Outcome) {
        self.checks += other.checks;
        self.witnesses += other.witnesses;
        self.failures.extend(other.failures);
    }
}

pub fn check(suite: Suite, instance: &Instance, limits: &Limits) -> Outcome {
    let mut out = match (suite, instance) {
        (Suite::Ladder, Instance::Pair(f, g)) => check_ladder(f, g),
        (Suite::Sn, Instance::Pair(f, g)) => check_sn(f, g),
        (Suite::Classification, Instance::Monic(x)) => check_classification(x),
        (Suite::Realization, Instance::Complex(c)) => check_realization(c),
        (Suite::Hearts, Instance::Complex(c)) => check_hearts(c),
        (Suite::DeltaFunctor, Instance::Sequence(s)) => check_delta_functor(s, limits),
        (Suite::RankOracle, Instance::Group(g, f)) => check_rank_oracle(g, *f, limits),
        (Suite::Counterexamples, Instance::Battery(f)) => check_battery(*f, limits),
        (Suite::Modules, Instance::Modules(ms)) => check_modules(ms, limits),
        (Suite::Duality | Suite::Comparison | Suite::Splitting, Instance::Modules(ms)) => {
            let mut out = Outcome::default();
            for (k, m) in ms.iter().enumerate() {
                let mut one = match suite {
                    Suite::Duality => check_duality(m, limits),
                    Suite::Comparison => check_comparison(m, limits),
                    _ => check_splitting(m, limits),
                };
                if !one.failures.is_empty() && out.culprit.is_none() {
                    out.culprit = Some(Instance::Modules(vec![m.clone()]));
                }
                one.failures.iter_mut().for_each(|f| *f = format!("module {k}: {f}"));
                out.merge(one);
            }
            return out;
        }
        _ => {
            let mut out = Outcome::default();
            out.check(format!("instance kind does not match suite {}", suite.name()), false);
            return out;
        }
    };
    if !out.failures.is_empty() {
        out.culprit = Some(instance.clone());
    }
    out
}

fn check_ladder(f: &PairMap, g: &PairMap) -> Outcome {
    let mut out = Outcome::default();
    if let Some(l) = out.witnessed("ladder construction", HomologyLadder::new(f, g)) {
        // eight identities, six of them carried by explicit isomorphisms
        let failures = l.failures();
        out.checks += 8;
        out.witnesses += 6;
        out.failures.extend(failures.into_iter().map(String::from));
    }
    out
}

fn check_sn(f: &PairMap, g: &PairMap) -> Outcome {
    let mut out = Outcome::default();
    let ker_g = g.kernel();
    let coker_f = f.cokernel();
    // universal properties: f factors through Ker g, g through Coker f
    if let Some(l) = out.witnessed("kernel factorization", ker_g.lift(f)) {
        out.check("kernel factorization commutes", ker_g.inclusion.after(&l) == *f);
        out.check("kernel inclusion is monic", ker_g.inclusion.is_monic());
    }
    if let Some(d) = out.witnessed("cokernel factorization", coker_f.descend(g)) {
        out.check("cokernel factorization commutes", d.after(&coker_f.projection) == *g);
        out.check("cokernel projection is surjective", coker_f.projection.is_surjective());
    }
    for (name, h) in [("f", f), ("g", g)] {
        let explicit = {
            let image_null = h.domain().null().image_under(h.matrix()).expect("shapes agree");
            let closure = h.matrix().image_basis().intersect(h.codomain().null()).expect("shapes agree");
            image_null == closure
        };
        out.check(format!("strictness criteria agree on {name}"), h.is_strict() == h.comparison().is_iso());
        out.check(format!("strictness formula agrees on {name}"), h.is_strict() == explicit);
        out.witnessed(&format!("D(Coker {name}) ≅ Ker D({name})"), dual_cokernel_iso(h).map(|m| m.is_iso()))
            .map(|ok| out.check(format!("D(Coker {name}) map is iso"), ok));
        out.witnessed(&format!("D(Im {name}) ≅ Coim D({name})"), dual_image_iso(h));
        out.check(format!("D = Nul∘Δ on {name}"), dual_map(h) == null_map(&delta_map(h)));
    }
    for (name, a) in [("A", f.domain()), ("B", f.codomain()), ("C", g.codomain())] {
        out.check(format!("D = Nul∘Δ on {name}"), dual_space(a) == null_part(&delta_space(a)));
        out.check(format!("ΔΔ ≅ id on {name}"), delta_space(&delta_space(a)).is_isomorphic(a));
        let unit = biduality_unit(a);
        let hd = hausdorffify(a);
        out.check(
            format!("biduality unit is Hausdorffification on {name}"),
            unit.kernel().subspace() == hd.projection.kernel().subspace() && unit.is_surjective(),
        );
    }
    // exact structure
    let i1 = ker_g.inclusion.clone();
    let p1 = coker_f.projection.clone();
    out.check("kernel inclusion is a kernel of its cokernel", is_kernel_cokernel_pair(&i1, &i1.cokernel().projection));
    out.check("cokernel projection is a cokernel of its kernel", is_kernel_cokernel_pair(&p1.kernel().inclusion, &p1));
    let u = p1.after(&i1);
    let i2 = u.kernel().inclusion;
    let comp = i1.after(&i2);
    out.check("strict monics compose", comp.is_monic() && comp.is_strict());
    let p2 = u.cokernel().projection;
    let comp = p2.after(&p1);
    out.check("strict epics compose", comp.is_surjective() && comp.is_strict());
    if let Some(po) = out.witnessed("pushout", Pushout::of(&i1, &u)) {
        out.check("pushout of a strict monic is a strict monic", po.from_right.is_monic() && po.from_right.is_strict());
    }
    if let Some(pb) = out.witnessed("pullback", Pullback::of(&p1, &u)) {
        out.check(
            "pullback of a strict epic is a strict epic",
            pb.to_right.is_surjective() && pb.to_right.is_strict(),
        );
    }
    let (iso, _, _) = curry_iso(f.domain(), f.codomain(), g.codomain());
    out.check("tensor-hom adjunction map is iso", iso.is_iso());
    out
}

fn check_classification(x: &PairMap) -> Outcome {
    let mut out = Outcome::default();
    let o = RoofOracle::small();
    match o.index_of(x) {
        None => out.check("object belongs to the enumeration", false),
        Some(i) => {
            let bad = o.disagreements(i);
            out.checks += o.objects.len();
            out.witnesses += (0..o.objects.len()).filter(|&j| o.roof_apex(i, j).is_some()).count();
            out.failures.extend(bad.into_iter().map(|j| format!("invariants and roof search disagree against object {j}")));
        }
    }
    out
}

fn degrees(c: &SnComplex) -> std::ops::RangeInclusive<i64> {
    (c.lo() - 1)..=(c.hi() + 1)
}

fn check_realization(c: &SnComplex) -> Outcome {
    let mut out = Outcome::default();
    for n in degrees(c) {
        if let Some(w) = out.witnessed(&format!("realization in degree {n}"), realization_witness(c, n)) {
            out.check(format!("realization witness invertible in degree {n}"), w.is_iso());
            let x = h_left(c, n).expect("witness computed it");
            out.check(
                format!("realized invariants in degree {n}"),
                x.invariants().triple() == c.embed_to_a2().cohomology(n).rep.invariants(),
            );
        }
        if let Some(r) = out.witnessed(&format!("transport against ψ in degree {n}"), h_right(c, n)) {
            out.check(format!("transport invariants in degree {n}"), r.direct.invariants() == r.transported.invariants());
        }
    }
    out
}

fn check_hearts(c: &SnComplex) -> Outcome {
    let mut out = Outcome::default();
    for n in degrees(c) {
        out.witnessed(&format!("q_l H_l ≅ q_r H_r in degree {n}"), q_comparison(c, n));
        out.witnessed(&format!("dual of H_r^{} ≅ H_l^{n} of D", -n), heart_dual_witness(c, -n));
        if let (Ok(x), Ok(y)) = (h_left(c, n), h_right(c, n)) {
            let f = adjunction_failures(&x, &y.direct);
            out.check(format!("adjunction triangles in degree {n}: {f:?}"), f.is_empty());
        }
    }
    out
}

fn check_modules(ms: &[GPairModule], limits: &Limits) -> Outcome {
    let mut out = Outcome::default();
    let group = ms[0].group().clone();
    let field = ms[0].field();
    let spaces: Vec<PairSpace> = ms.iter().map(|m| m.forget()).collect();
    let mut maps: Vec<GMap> = Vec::new();
    let mut space_maps: Vec<PairMap> = Vec::new();
    for m in ms {
        maps.push(crate::groups::induction_counit(m));
        maps.push(crate::groups::coinduction_unit(m));
        space_maps.push(m.space().identity());
    }
    if spaces.len() >= 2 {
        let mut r = gen::rng(spaces[0].dim() as u64);
        space_maps.push(gen::pair_map(&spaces[0], &spaces[1], &mut r));
    }
    let report = verify_adjunctions(&group, ms, &spaces, &maps, &space_maps);
    out.checks += report.checks.len();
    out.failures.extend(report.failures().into_iter().map(String::from));
    let unit = GPairModule::trivial(&group, &PairSpace::hausdorff(field, 1));
    for (k, m) in ms.iter().enumerate() {
        if let Some(t) = out.witnessed("tensor over G", tensor_over_g(&unit, m)) {
            out.check(format!("trivial ⊗_G M ≅ M_G on module {k}"), t.object.is_isomorphic(&m.coinvariants().object));
        }
        if let Some((_, h)) = out.witnessed("hom over G", hom_g(&unit, m)) {
            out.check(format!("Hom_G(trivial, M) ≅ M^G on module {k}"), h.object.is_isomorphic(&m.invariants().object));
        }
        let up = GPairModule::induce(&group, m.space());
        out.check(format!("induced module {k} is ⊥-projective"), is_bot_projective(&up).unwrap_or(false));
        if let Some(res) = out.witnessed("bar resolution", bar_resolution(m, 2, limits)) {
            out.witnessed(&format!("homogeneous and inhomogeneous chains agree on module {k}"), coinvariant_oracle(&res, limits));
        }
    }
    out
}

fn check_delta_functor(s: &ModuleSes, limits: &Limits) -> Outcome {
    let mut out = Outcome::default();
    for (name, m) in [("sub", s.sub()), ("total", s.total()), ("quotient", s.quotient())] {
        if let Some(h) = out.witnessed(&format!("ℋ_0 of {name}"), l1_homology(m, 0, limits)) {
            out.check(format!("normalization on {name}"), h == iota_r(&m.coinvariants().object));
        }
    }
    let up = GPairModule::induce(s.total().group(), s.total().space());
    for n in 1..=3 {
        if let Some(h) = out.witnessed(&format!("ℋ_{n} of induced"), l1_homology(&up, n, limits)) {
            out.check(format!("vanishing in degree {n}"), h.invariants().is_zero());
        }
    }
    let id = SesMorphism::identity(s);
    if let Some((les, natural)) = out.witnessed("long exact sequence", les_coefficients(s, 3, Some((s, &id)), limits)) {
        for k in 0..les.nodes.len() {
            out.check(format!("exact at node {k}"), les.exact_at(k));
        }
        out.check("connecting maps natural", natural == Some(true));
    }
    out
}

fn check_rank_oracle(g: &FiniteGroup, field: Field, limits: &Limits) -> Outcome {
    let mut out = Outcome::default();
    let p = field.characteristic();
    let dims = trivial_homology_dims(g, p, 3);
    let expected: Vec<usize> = if g.order() == 4 { vec![1, 2, 3, 4] } else { vec![1; 4] };
    out.check(format!("oracle dims {dims:?} match {expected:?}"), dims == expected);
    let m = GPairModule::trivial(g, &PairSpace::hausdorff(field, 1));
    for (n, &d) in dims.iter().enumerate() {
        let want = HeartInvariants::from_triple((0, 0, d));
        if let Some(h) = out.witnessed(&format!("ℋ_{n}"), l1_homology(&m, n, limits)) {
            out.check(format!("ℋ_{n} invariants {:?} vs oracle {d}", h.invariants().triple()), h.invariants() == want);
        }
        if let Some(h) = out.witnessed(&format!("ℋ_b^{n}"), bounded_cohomology(&m, n, limits)) {
            out.check(format!("ℋ_b^{n} invariants {:?} vs oracle {d}", h.invariants().triple()), h.invariants() == want);
        }
    }
    out
}

fn check_duality(m: &GPairModule, limits: &Limits) -> Outcome {
    let mut out = Outcome::default();
    if let Some(r) = out.witnessed("duality", duality_check(m, 3, limits)) {
        out.witnesses += 2 * r.degrees.len();
        out.check("D(↑E) ≅ ⇑D(E)", r.induced_dual);
        out.check("coinvariants and invariants intertwine", r.intertwining);
        for d in &r.degrees {
            out.check(format!("duality triples in degree {}", d.degree), d.passed);
        }
    }
    out
}

fn check_comparison(m: &GPairModule, limits: &Limits) -> Outcome {
    let mut out = Outcome::default();
    for n in 0..=3 {
        out.witnessed(&format!("Hd comparison in degree {n}"), hausdorffified_comparison(m, n, limits));
        out.witnessed(&format!("q_l ≅ q_r in degree {n}"), q_comparison_l1(m, n, limits));
    }
    out
}

/// Truncation bounds for the splitting suite. `↑E` is `|G|` times larger than `E`,
/// so its resolution stops one degree earlier at the same top dimension.
pub const SPLIT_TOP: usize = 3;
pub const SPLIT_TOP_INDUCED: usize = 2;

fn check_splitting(m: &GPairModule, limits: &Limits) -> Outcome {
    let mut out = Outcome::default();
    if let Some(res) = out.witnessed("bar resolution", bar_resolution(m, SPLIT_TOP, limits)) {
        let f = res.structure_failures();
        out.check(format!("simplicial identities: {f:?}"), f.is_empty());
        let f = res.contraction_failures(&res.homotopy);
        out.check(format!("underlying contraction: {f:?}"), f.is_empty());
    }
    if let Some((res, s)) = out.witnessed("equivariant splitting", equivariant_splitting(m.group(), m.space(), SPLIT_TOP_INDUCED, limits)) {
        let maps: Vec<PairMap> = s.iter().map(|g| g.map().clone()).collect();
        let f = res.contraction_failures(&maps);
        out.check(format!("equivariant contraction: {f:?}"), f.is_empty());
    }
    out
}

/// The model ℓ¹/c₀ ladder `(F,0) -> (F,F) ⊕ (F,0) -> (F,F)`.
pub fn mirror_pair(field: Field) -> (PairMap, PairMap) {
    let l1 = PairSpace::hausdorff(field, 1);
    let c0 = PairSpace::indiscrete(field, 1);
    let mid = crate::sn::Biproduct::of(&c0, &l1);
    let f = mid.inj[0].after(&PairMap::new(l1.clone(), c0.clone(), crate::Matrix::identity(field, 1)).expect("bounded"));
    let g = PairMap::new(mid.object.clone(), c0, mid.proj[1].matrix().clone()).expect("bounded");
    (f, g)
}

fn check_battery(field: Field, limits: &Limits) -> Outcome {
    let mut out = Outcome::default();
    let l1 = PairSpace::hausdorff(field, 1);
    let c0 = PairSpace::indiscrete(field, 1);
    let (f, g) = mirror_pair(field);
    if let Some(l) = out.witnessed("mirror ladder", HomologyLadder::new(&f, &g)) {
        out.check("Coim f = (F,0)", l.coim_f.object == l1);
        out.check("Ker g = (F,F)", l.ker_g.object.is_isomorphic(&c0));
        out.check("Coker f = (F,0)", l.coker_f.object.is_isomorphic(&l1));
        out.check("Im g = (F,F)", l.im_g.object == c0);
        out.check("X = 0", l.x.object.is_zero());
        out.check("φ not strict, not iso", !l.phi.is_strict() && !l.phi.is_iso());
        out.check("ψ not strict, not iso", !l.psi.is_strict() && !l.psi.is_iso());
        out.check("ladder identities", l.failures().is_empty());
    }
    let c = SnComplex::new(field, -1, vec![l1.clone(), f.codomain().clone(), c0.clone()], vec![f.clone(), g.clone()])
        .expect("g f = 0");
    if let Some(h) = out.witnessed("singular heart homology", h_left(&c, 0)) {
        out.check("H_l^0 is singular", h.invariants().triple() == (1, 0, 0));
        out.check("q_l H_l^0 = 0", h.q_l().object.is_zero());
    }
    let incl = PairMap::new(l1.clone(), c0.clone(), crate::Matrix::identity(field, 1)).expect("bounded");
    out.check("inclusion (F,0) -> (F,F) is monic", incl.is_monic());
    out.check("its D-dual is not epic", !dual_map(&incl).is_epic());
    let w = hausdorff_les_witness();
    if let Some(h) = out.witnessed("stored Hausdorffified sequence", hausdorff_les(&w, 2, limits)) {
        out.check("stored sequence: heart LES exact", h.heart_exact);
        out.check("stored sequence: Hausdorffified LES not exact", !h.failures.is_empty());
    }
    let q = q_r_non_exactness_witness(field);
    out.check("q_r witness: exact in the heart", q.heart_exact());
    out.check("q_r witness: q_r image not exact", !q.q_r_exact());
    out
}

/// A task file reproducing an instance under `op = "check"`.
pub fn instance_task(suite: Suite, instance: &Instance) -> TaskFile {
    let field = match instance {
        Instance::Pair(f, _) | Instance::Monic(f) => f.field(),
        Instance::Complex(c) => c.field(),
        Instance::Sequence(s) => s.total().field(),
        Instance::Modules(ms) => ms[0].field(),
        Instance::Group(_, f) | Instance::Battery(f) => *f,
    };
    let b = TaskBuilder::new(field, "check").arg("suite", suite.name());
    match instance {
        Instance::Pair(f, g) => b.map("f", f).map("g", g).arg("f", "f").arg("g", "g"),
        Instance::Monic(x) => b.map("x", x).arg("map", "x"),
        Instance::Complex(c) => b.complex("A", c).arg("complex", "A"),
        Instance::Sequence(s) => b.sequence("sigma", s).arg("sequence", "sigma"),
        Instance::Modules(ms) => ms.iter().enumerate().fold(b, |b, (k, m)| b.module(&format!("M{k}"), m)),
        Instance::Group(g, _) => b.group(g),
        Instance::Battery(_) => b,
    }
    .build()
}

/// Reads back an instance written by [`instance_task`].
pub fn instance_from_task(r: &Resolved) -> Result<(Suite, Instance), IoError> {
    let name = r.string_arg("suite")?;
    let suite = Suite::from_name(name)
        .ok_or_else(|| IoError::Invalid { at: "task.args.suite".into(), message: format!("unknown suite {name:?}") })?;
    let missing_group = || IoError::Unresolved(vec!["group".into()]);
    let instance = match suite {
        Suite::Ladder | Suite::Sn => Instance::Pair(r.map_arg("f")?.clone(), r.map_arg("g")?.clone()),
        Suite::Classification => Instance::Monic(r.map_arg("map")?.clone()),
        Suite::Realization | Suite::Hearts => Instance::Complex(r.complex_arg("complex")?.clone()),
        Suite::DeltaFunctor => Instance::Sequence(r.sequence_arg("sequence")?.clone()),
        Suite::Modules | Suite::Duality | Suite::Comparison | Suite::Splitting => {
            if r.modules.is_empty() {
                return Err(IoError::Unresolved(vec!["at least one module".into()]));
            }
            Instance::Modules(r.modules.values().cloned().collect())
        }
        Suite::RankOracle => Instance::Group(r.group.clone().ok_or_else(missing_group)?, r.field),
        Suite::Counterexamples => Instance::Battery(r.field),
    };
    Ok((suite, instance))
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub index: usize,
    pub checks: usize,
    pub witnesses: usize,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub instance: Option<TaskFile>,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_case(suite: Suite, seed: u64, index: usize, limits: &Limits) -> CaseResult {
    let instance = generate(suite, seed, index);
    let out = check(suite, &instance, limits);
    CaseResult {
        index,
        checks: out.checks,
        witnesses: out.witnesses,
        instance: out.culprit.as_ref().map(|c| instance_task(suite, c)),
        failures: out.failures,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub cases: usize,
    pub passed: bool,
    pub checks: usize,
    pub witnesses: usize,
    /// Failing cases in index order.
    pub failed: Vec<CaseResult>,
}

/// Runs cases `0..cases` in parallel and merges them in index order.
pub fn run_suite(suite: Suite, seed: u64, cases: usize, limits: &Limits) -> SuiteReport {
    let results: Vec<CaseResult> = (0..cases).into_par_iter().map(|i| run_case(suite, seed, i, limits)).collect();
    SuiteReport {
        suite,
        seed,
        cases,
        passed: results.iter().all(CaseResult::passed),
        checks: results.iter().map(|r| r.checks).sum(),
        witnesses: results.iter().map(|r| r.witnesses).sum(),
        failed: results.into_iter().filter(|r| !r.passed()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_a_few_cases() {
        for suite in Suite::ALL {
            let r = run_suite(suite, 3, 3, &Limits::default());
            assert!(r.passed, "{suite:?}: {:?}", r.failed);
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn instances_round_trip_through_task_files() {
        for suite in Suite::ALL {
            let inst = generate(suite, 11, 2);
            let file = instance_task(suite, &inst);
            let text = serde_json::to_string(&file).unwrap();
            let back = crate::io::resolve(&crate::io::parse_task(&text).unwrap(), &Limits::default()).unwrap();
            let (s, again) = instance_from_task(&back).unwrap();
            assert_eq!(s, suite);
            assert_eq!(instance_task(s, &again), file);
        }
    }

    #[test]
    fn zero_cases_is_an_empty_pass() {
        let r = run_suite(Suite::Ladder, 1, 0, &Limits::default());
        assert!(r.passed && r.checks == 0 && r.failed.is_empty());
    }
}

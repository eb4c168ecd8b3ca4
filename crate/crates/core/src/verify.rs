//! Machine-checkable reports for the flip-flop rebuilds, the BGP square and
//! the structural properties of the torsion-class order.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cluster::{ClusterCategory, ClusterError, ClusterIndec, ClusterTilting, SummandKind, TorsionFingerprint};
use crate::functors::BgpPair;
use crate::poset::{find_isomorphism, flip_flop, is_order_isomorphism, FinitePoset, FlipFlopSign, OrderMap};
use crate::quiver::Quiver;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    /// Number of instances examined.
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Value>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}

/// Collects instances of one named check and keeps the first failure.
struct Tally {
    check: String,
    cases: usize,
    counterexample: Option<Value>,
}

impl Tally {
    fn new(check: &str) -> Self {
        Tally { check: check.to_string(), cases: 0, counterexample: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            status: if self.counterexample.is_some() { Status::Fail } else { Status::Pass },
            check: self.check,
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

/// Enumerated objects with their poset and fingerprints, indexed in
/// enumeration order.
struct Indexed<'a> {
    cat: &'a ClusterCategory,
    objects: &'a [ClusterTilting],
    poset: FinitePoset<ClusterTilting>,
    fingerprints: Vec<TorsionFingerprint>,
}

impl<'a> Indexed<'a> {
    fn new(cat: &'a ClusterCategory) -> Result<Self, ClusterError> {
        let objects = cat.enumerate()?;
        let poset = cat.tilting_poset()?;
        let fingerprints = objects.iter().map(|t| cat.fac_fingerprint(t)).collect::<Result<_, _>>()?;
        Ok(Indexed { cat, objects, poset, fingerprints })
    }

    fn index(&self, t: &ClusterTilting) -> usize {
        self.objects.binary_search(t).expect("object was enumerated")
    }

    fn le(&self, a: usize, b: usize) -> bool {
        self.poset.le(a, b)
    }

    fn containing(&self, c: &ClusterIndec) -> Vec<usize> {
        (0..self.objects.len()).filter(|&i| self.objects[i].contains(c)).collect()
    }

    fn label(&self, x: usize) -> &str {
        self.cat.quiver().label(x)
    }

    fn obj(&self, i: usize) -> Value {
        self.objects[i].to_json()
    }
}

fn complement(n: usize, part: &[usize]) -> Vec<usize> {
    (0..n).filter(|i| !part.contains(i)).collect()
}

/// Both flip-flop rebuilds for the sink `x` of `q`:
/// the `+` gluing along `f` against `T(C_Q)`, the `-` gluing along `g` on the
/// reflected quiver against `T(C_Q')`, and the `-` gluing along `f` itself
/// against `T(C_Q')` (the two posets are related by a flip-flop).
pub fn verify_flip_flop(q: &Quiver, x: usize) -> Result<Vec<CheckReport>, ClusterError> {
    if !q.is_sink(x) {
        return Err(ClusterError::NotSink(q.label(x).to_string()));
    }
    let q2 = q.reflect(x)?;
    let cat = ClusterCategory::new(q)?;
    let cat2 = ClusterCategory::new(&q2)?;
    let source = Indexed::new(&cat)?;
    let target = Indexed::new(&cat2)?;
    let mut reports = Vec::new();

    let sx = cat.summand_for(SummandKind::Projective(x));
    let tx = source.containing(&sx);
    let rest = complement(source.objects.len(), &tx);
    let f_images: Vec<usize> =
        tx.iter().map(|&i| cat.f_map(x, &source.objects[i]).map(|t| source.index(&t))).collect::<Result<_, _>>()?;

    let shifted = ClusterIndec::Shifted(x);
    let ty = target.containing(&shifted);
    let rest2 = complement(target.objects.len(), &ty);
    let g_images: Vec<usize> =
        ty.iter().map(|&i| cat2.g_map(x, &target.objects[i]).map(|t| target.index(&t))).collect::<Result<_, _>>()?;

    reports.push(rebuild_check(
        "sink rebuild with f and the + order is isomorphic to the tilting poset",
        &source,
        &tx,
        &rest,
        &f_images,
        FlipFlopSign::Plus,
        &source,
    ));
    reports.push(rebuild_check(
        "source rebuild with g and the - order is isomorphic to the reflected tilting poset",
        &target,
        &ty,
        &rest2,
        &g_images,
        FlipFlopSign::Minus,
        &target,
    ));
    reports.push(rebuild_check(
        "the - order on the sink data is isomorphic to the reflected tilting poset",
        &source,
        &tx,
        &rest,
        &f_images,
        FlipFlopSign::Minus,
        &target,
    ));
    Ok(reports)
}

/// Glue `X = part`, `Y = rest` of `data` along `map` and compare with `whole`.
/// When `data` and `whole` coincide the identity is tried as witness first.
fn rebuild_check(
    name: &str,
    data: &Indexed,
    part: &[usize],
    rest: &[usize],
    map: &[usize],
    sign: FlipFlopSign,
    whole: &Indexed,
) -> CheckReport {
    let mut tally = Tally::new(name);
    let x_poset = data.poset.restrict(part);
    let y_poset = data.poset.restrict(rest);
    let assignment: Result<Vec<usize>, Value> = map
        .iter()
        .zip(part)
        .map(|(&img, &src)| {
            rest.iter().position(|&r| r == img).ok_or_else(|| json!({ "map_leaves_complement": data.obj(src) }))
        })
        .collect();
    let assignment = match assignment {
        Ok(a) => a,
        Err(e) => {
            tally.record(false, || e);
            return tally.finish();
        }
    };
    let order_map = match OrderMap::new(&x_poset, &y_poset, assignment) {
        Ok(m) => m,
        Err(e) => {
            tally.record(false, || json!({ "map_not_order_preserving": e.to_string() }));
            return tally.finish();
        }
    };
    let glued = match flip_flop(&x_poset, &y_poset, &order_map, sign) {
        Ok(p) => p,
        Err(e) => {
            tally.record(false, || json!({ "gluing_not_a_poset": e.to_string() }));
            return tally.finish();
        }
    };
    let identity: Vec<usize> = part.iter().chain(rest).copied().collect();
    let same = std::ptr::eq(data, whole) && is_order_isomorphism(&glued, &whole.poset, &identity);
    let ok = same || find_isomorphism(&glued, &whole.poset).is_some();
    tally.record(ok, || {
        json!({
            "glued_size": glued.len(),
            "glued_covers": glued.hasse().len(),
            "poset_size": whole.poset.len(),
            "poset_covers": whole.poset.hasse().len(),
        })
    });
    tally.finish()
}

/// The BGP square at the sink `x`: `rho` maps the objects containing `S_x`
/// onto those containing `P'_x[1]` and the rest onto the rest, both
/// restrictions are order isomorphisms, `rho f = g rho`, and `rho` reflects
/// the order on every pair except those where only `rho(T')` contains
/// `P'_x[1]`.
pub fn verify_square(q: &Quiver, x: usize) -> Result<Vec<CheckReport>, ClusterError> {
    if !q.is_sink(x) {
        return Err(ClusterError::NotSink(q.label(x).to_string()));
    }
    let cat = ClusterCategory::new(q)?;
    let cat2 = ClusterCategory::new(&q.reflect(x)?)?;
    let source = Indexed::new(&cat)?;
    let target = Indexed::new(&cat2)?;
    let pair = BgpPair::new(&cat, &cat2, x)?;
    square_reports(&source, &target, &pair)
}

fn square_reports(source: &Indexed, target: &Indexed, pair: &BgpPair) -> Result<Vec<CheckReport>, ClusterError> {
    let x = pair.vertex();
    let cat = source.cat;
    let n = source.objects.len();
    let rho: Vec<usize> =
        source.objects.iter().map(|t| pair.rho(t).map(|r| target.index(&r))).collect::<Result<_, _>>()?;
    let tx = source.containing(&cat.summand_for(SummandKind::Projective(x)));
    let rest = complement(n, &tx);
    let ty = target.containing(&ClusterIndec::Shifted(x));
    let rest2 = complement(target.objects.len(), &ty);

    let mut reports = Vec::new();
    for (name, from, to) in [
        ("rho maps the objects containing S_x onto those containing P'_x[1]", &tx, &ty),
        ("rho maps the remaining objects onto the remaining objects", &rest, &rest2),
    ] {
        let mut tally = Tally::new(name);
        let mut image: Vec<usize> = from.iter().map(|&i| rho[i]).collect();
        for &i in from.iter() {
            tally.record(to.contains(&rho[i]), || json!({ "object": source.obj(i), "image": target.obj(rho[i]) }));
        }
        image.sort_unstable();
        image.dedup();
        tally.record(
            image.len() == to.len() && image.len() == from.len(),
            || json!({ "domain": from.len(), "distinct_images": image.len(), "codomain": to.len() }),
        );
        reports.push(tally.finish());
    }
    for (name, part) in [
        ("rho is an order isomorphism on the objects containing S_x", &tx),
        ("rho is an order isomorphism on the remaining objects", &rest),
    ] {
        let mut tally = Tally::new(name);
        for &a in part.iter() {
            for &b in part.iter() {
                tally.record(
                    source.le(a, b) == target.le(rho[a], rho[b]),
                    || json!({ "first": source.obj(a), "second": source.obj(b) }),
                );
            }
        }
        reports.push(tally.finish());
    }
    let mut tally = Tally::new("rho f = g rho");
    for &i in &tx {
        let f = cat.f_map(x, &source.objects[i])?;
        let lhs = pair.rho(&f)?;
        let rhs = target.cat.g_map(x, &target.objects[rho[i]])?;
        tally.record(lhs == rhs, || json!({ "object": source.obj(i), "rho_f": lhs.to_json(), "g_rho": rhs.to_json() }));
    }
    reports.push(tally.finish());
    // A pair with only rho(T') containing P'_x[1] can satisfy rho(T) <= rho(T')
    // while T' < T (e.g. T the maximum, T' = max with S_x in place of P_x[1]);
    // those pairs are covered by `rho_reflects_order_globally` instead.
    let mut tally = Tally::new("rho reflects the order unless only the larger image contains P'_x[1]");
    for a in 0..n {
        for b in 0..n {
            if !ty.contains(&rho[a]) && ty.contains(&rho[b]) {
                continue;
            }
            tally.record(
                !target.le(rho[a], rho[b]) || source.le(a, b),
                || json!({ "first": source.obj(a), "second": source.obj(b) }),
            );
        }
    }
    reports.push(tally.finish());
    Ok(reports)
}

/// The unrestricted statement `rho(T) <= rho(T') => T <= T'` over all pairs.
fn rho_reflects_order_globally(
    source: &Indexed,
    target: &Indexed,
    pair: &BgpPair,
) -> Result<CheckReport, ClusterError> {
    let rho: Vec<usize> =
        source.objects.iter().map(|t| pair.rho(t).map(|r| target.index(&r))).collect::<Result<_, _>>()?;
    let n = source.objects.len();
    let mut tally = Tally::new("rho reflects the order on all pairs");
    for a in 0..n {
        for b in 0..n {
            tally.record(!target.le(rho[a], rho[b]) || source.le(a, b), || {
                json!({
                    "vertex": source.label(pair.vertex()),
                    "first": source.obj(a),
                    "second": source.obj(b),
                    "first_image": target.obj(rho[a]),
                    "second_image": target.obj(rho[b]),
                })
            });
        }
    }
    Ok(tally.finish())
}

/// Every structural property of the torsion-class order, at every admissible
/// vertex of `q`. Sink-only checks run at sinks, source-only checks at
/// sources, and the rest at every vertex.
pub fn lemma_suite(q: &Quiver) -> Result<Vec<CheckReport>, ClusterError> {
    let cat = ClusterCategory::new(q)?;
    let data = Indexed::new(&cat)?;
    let mut reports = vec![fingerprints_distinct(&data)];
    reports.extend(any_vertex_checks(&data)?);
    reports.extend(sink_checks(&data)?);
    reports.extend(source_checks(&data)?);
    reports.push(complement_count(&data)?);

    let mut reflected = Vec::new();
    for x in q.sinks() {
        let cat2 = ClusterCategory::new(&q.reflect(x)?)?;
        let target_reports = {
            let target = Indexed::new(&cat2)?;
            let pair = BgpPair::new(&cat, &cat2, x)?;
            let mut r = square_reports(&data, &target, &pair)?;
            r.push(rho_reflects_order_globally(&data, &target, &pair)?);
            r.push(rho_preserves_mutation(&data, &pair)?);
            r
        };
        reflected.push(target_reports);
    }
    reports.extend(merge(reflected));
    Ok(reports)
}

/// Merge per-vertex reports that share check names.
fn merge(groups: Vec<Vec<CheckReport>>) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = Vec::new();
    for group in groups {
        for r in group {
            match out.iter_mut().find(|o| o.check == r.check) {
                Some(o) => {
                    o.cases += r.cases;
                    if o.counterexample.is_none() && r.counterexample.is_some() {
                        o.counterexample = r.counterexample;
                        o.status = Status::Fail;
                    }
                }
                None => out.push(r),
            }
        }
    }
    out
}

fn fingerprints_distinct(data: &Indexed) -> CheckReport {
    let mut tally = Tally::new("torsion classes of distinct objects are distinct");
    for a in 0..data.objects.len() {
        for b in a + 1..data.objects.len() {
            tally.record(data.fingerprints[a] != data.fingerprints[b], || json!([data.obj(a), data.obj(b)]));
        }
    }
    tally.finish()
}

fn any_vertex_checks(data: &Indexed) -> Result<Vec<CheckReport>, ClusterError> {
    let cat = data.cat;
    let n = data.objects.len();
    let mut membership = Tally::new("P_x is a summand iff P_x lies in fac T");
    let mut down = Tally::new("objects containing P_x are closed downwards");
    let mut mutation_up = Tally::new("mutation at P_x goes strictly up");
    let mut up = Tally::new("objects containing P_x[1] are closed upwards");
    let mut mutation_down = Tally::new("mutation at P_x[1] goes strictly down");

    for x in 0..cat.rank() {
        let px = cat.projective_root(x);
        let px_summand = ClusterIndec::Module(px.clone());
        let shifted = ClusterIndec::Shifted(x);
        let vertex = data.label(x).to_string();
        for i in 0..n {
            let t = &data.objects[i];
            membership.record(
                t.contains(&px_summand) == data.fingerprints[i].contains(&px),
                || json!({ "vertex": vertex, "object": data.obj(i) }),
            );
            for j in 0..n {
                if data.le(j, i) && t.contains(&px_summand) {
                    down.record(
                        data.objects[j].contains(&px_summand),
                        || json!({ "vertex": vertex, "object": data.obj(i), "smaller": data.obj(j) }),
                    );
                }
                if data.le(i, j) && t.contains(&shifted) {
                    up.record(
                        data.objects[j].contains(&shifted),
                        || json!({ "vertex": vertex, "object": data.obj(i), "larger": data.obj(j) }),
                    );
                }
            }
            if t.contains(&px_summand) {
                let m = data.index(&cat.mutate(t, &px_summand)?);
                mutation_up.record(data.le(i, m) && m != i, || json!({ "vertex": vertex, "object": data.obj(i) }));
            }
            if t.contains(&shifted) {
                let m = data.index(&cat.mutate(t, &shifted)?);
                mutation_down.record(data.le(m, i) && m != i, || json!({ "vertex": vertex, "object": data.obj(i) }));
            }
        }
    }
    Ok(vec![membership.finish(), down.finish(), mutation_up.finish(), up.finish(), mutation_down.finish()])
}

fn sink_checks(data: &Indexed) -> Result<Vec<CheckReport>, ClusterError> {
    let cat = data.cat;
    let q = cat.quiver();
    let n = data.objects.len();
    let mut drop = Tally::new("at a sink, fac f(T) is fac T without S_x");
    let mut sandwich = Tally::new("at a sink, T < T' outside the subset forces f(T) <= T'");
    let mut monotone = Tally::new("at a sink, f is order preserving");
    for x in q.sinks() {
        let vertex = data.label(x).to_string();
        let sx = cat.summand_for(SummandKind::Projective(x));
        let tx = data.containing(&sx);
        let f: Vec<usize> =
            tx.iter().map(|&i| cat.f_map(x, &data.objects[i]).map(|t| data.index(&t))).collect::<Result<_, _>>()?;
        let ex = q.unit_vector(x);
        for (k, &i) in tx.iter().enumerate() {
            let mut expected = data.fingerprints[i].0.clone();
            expected.remove(&ex);
            drop.record(data.fingerprints[f[k]].0 == expected, || json!({ "vertex": vertex, "object": data.obj(i) }));
            for j in 0..n {
                if !tx.contains(&j) && data.lt_strict(i, j) {
                    sandwich.record(
                        data.le(f[k], j),
                        || json!({ "vertex": vertex, "object": data.obj(i), "larger": data.obj(j) }),
                    );
                }
            }
            for (l, &j) in tx.iter().enumerate() {
                if data.le(i, j) {
                    monotone.record(
                        data.le(f[k], f[l]),
                        || json!({ "vertex": vertex, "first": data.obj(i), "second": data.obj(j) }),
                    );
                }
            }
        }
    }
    Ok(vec![drop.finish(), sandwich.finish(), monotone.finish()])
}

fn source_checks(data: &Indexed) -> Result<Vec<CheckReport>, ClusterError> {
    let cat = data.cat;
    let q = cat.quiver();
    let n = data.objects.len();
    let mut simple = Tally::new("at a source, S_x lies in fac T iff T is supported at x");
    let mut shifted_iff = Tally::new("at a source, P_x[1] is a summand iff S_x is not in fac T");
    let mut sandwich = Tally::new("at a source, T' < T outside the subset forces T' <= g(T)");
    let mut monotone = Tally::new("at a source, g is order preserving");
    let mut torsion = Tally::new("at a source, torsion classes containing fac U and S_x contain the complement of U");
    for x in q.sources() {
        let vertex = data.label(x).to_string();
        let ex = q.unit_vector(x);
        let shifted = ClusterIndec::Shifted(x);
        for i in 0..n {
            let t = &data.objects[i];
            let has_simple = data.fingerprints[i].contains(&ex);
            simple.record(
                has_simple == t.module_support().contains(&x),
                || json!({ "vertex": vertex, "object": data.obj(i) }),
            );
            shifted_iff
                .record(t.contains(&shifted) == !has_simple, || json!({ "vertex": vertex, "object": data.obj(i) }));
        }
        let ty = data.containing(&shifted);
        let g: Vec<usize> =
            ty.iter().map(|&i| cat.g_map(x, &data.objects[i]).map(|t| data.index(&t))).collect::<Result<_, _>>()?;
        for (k, &i) in ty.iter().enumerate() {
            for j in 0..n {
                if !ty.contains(&j) && data.lt_strict(j, i) {
                    sandwich.record(
                        data.le(j, g[k]),
                        || json!({ "vertex": vertex, "object": data.obj(i), "smaller": data.obj(j) }),
                    );
                }
            }
            for (l, &j) in ty.iter().enumerate() {
                if data.le(i, j) {
                    monotone.record(
                        data.le(g[k], g[l]),
                        || json!({ "vertex": vertex, "first": data.obj(i), "second": data.obj(j) }),
                    );
                }
            }
        }
        for u in cat.almost_complete_tilting_modules() {
            if u.iter().any(|d| d.get(x) != 0) {
                continue;
            }
            let complements = cat.module_complements(&u)?;
            let [m] = complements.as_slice() else {
                torsion.record(false, || json!({ "vertex": vertex, "almost_complete": u, "complements": complements }));
                continue;
            };
            let fac_u = cat.fac_of_modules(&u)?;
            for j in 0..n {
                let fp = &data.fingerprints[j];
                if fp.is_superset(&fac_u) && fp.contains(&ex) {
                    torsion.record(
                        fp.contains(m),
                        || json!({ "vertex": vertex, "almost_complete": u, "object": data.obj(j) }),
                    );
                }
            }
        }
    }
    Ok(vec![simple.finish(), shifted_iff.finish(), sandwich.finish(), monotone.finish(), torsion.finish()])
}

fn complement_count(data: &Indexed) -> Result<CheckReport, ClusterError> {
    let cat = data.cat;
    let mut tally = Tally::new("an almost complete tilting module has two complements iff it is sincere");
    for u in cat.almost_complete_tilting_modules() {
        let sincere = (0..cat.rank()).all(|v| u.iter().any(|d| d.get(v) != 0));
        let count = cat.module_complements(&u)?.len();
        tally.record(count == if sincere { 2 } else { 1 }, || json!({ "almost_complete": u, "complements": count }));
    }
    Ok(tally.finish())
}

fn rho_preserves_mutation(data: &Indexed, pair: &BgpPair) -> Result<CheckReport, ClusterError> {
    let mut tally = Tally::new("rho commutes with mutation");
    for (i, t) in data.objects.iter().enumerate() {
        let image = pair.rho(t)?;
        for s in t.summands() {
            let lhs = pair.rho(&data.cat.mutate(t, s)?)?;
            let rhs = pair.target().mutate(&image, &pair.rho_indec(s))?;
            tally.record(
                lhs == rhs,
                || json!({ "object": data.obj(i), "summand": s.almost_positive_root(data.cat.rank()) }),
            );
        }
    }
    Ok(tally.finish())
}

impl Indexed<'_> {
    fn lt_strict(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin3() -> Quiver {
        Quiver::linear_a(3)
    }

    #[test]
    fn flip_flop_on_linear_a3() {
        let reports = verify_flip_flop(&lin3(), 2).unwrap();
        assert_eq!(reports.len(), 3);
        assert!(all_passed(&reports), "{reports:#?}");
    }

    #[test]
    fn square_on_linear_a3() {
        let reports = verify_square(&lin3(), 2).unwrap();
        assert!(all_passed(&reports), "{reports:#?}");
        let commute = reports.iter().find(|r| r.check == "rho f = g rho").unwrap();
        assert_eq!(commute.cases, 5);
    }

    #[test]
    fn square_on_a2() {
        assert!(all_passed(&verify_square(&Quiver::linear_a(2), 1).unwrap()));
    }

    #[test]
    fn requires_a_sink() {
        assert!(matches!(verify_square(&lin3(), 1), Err(ClusterError::NotSink(_))));
        assert!(matches!(verify_flip_flop(&lin3(), 0), Err(ClusterError::NotSink(_))));
    }

    #[test]
    fn lemmas_on_a3_orientations() {
        for q in lin3().orientations() {
            let reports = lemma_suite(&q).unwrap();
            let failing: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.check.as_str()).collect();
            assert_eq!(failing, vec!["rho reflects the order on all pairs"], "{q}");
            assert!(reports.iter().all(|r| r.cases > 0), "{q}: {reports:#?}");
        }
    }

    #[test]
    fn global_order_reflection_fails_on_a2() {
        let q = Quiver::linear_a(2);
        let cat = ClusterCategory::new(&q).unwrap();
        let cat2 = ClusterCategory::new(&q.reflect(1).unwrap()).unwrap();
        let pair = BgpPair::new(&cat, &cat2, 1).unwrap();
        let top = cat.object_from_roots(&[vec![-1, 0], vec![0, -1]]).unwrap();
        let below = cat.object_from_roots(&[vec![-1, 0], vec![0, 1]]).unwrap();
        assert!(cat2.leq(&pair.rho(&top).unwrap(), &pair.rho(&below).unwrap()).unwrap());
        assert!(!cat.leq(&top, &below).unwrap());
    }

    #[test]
    fn report_json_shape() {
        let r = Tally::new("demo").finish();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v, json!({ "check": "demo", "status": "pass", "cases": 0 }));
        let mut t = Tally::new("demo");
        t.record(false, || json!(1));
        t.record(false, || json!(2));
        let r = t.finish();
        assert_eq!(r.counterexample, Some(json!(1)));
        assert!(!r.passed());
    }
}

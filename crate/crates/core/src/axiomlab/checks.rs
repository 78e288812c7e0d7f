//! The checks. Each sampler draws inputs; each verifier runs the library
//! construction and then re-asserts the defining identities of its output.

use crate::basecat::{Backend, Category};
use crate::error::{ensure, Error, Result};
use crate::karoubi::{Completion, FClass, FTriangle, KarMorphism, KarObject};
use crate::quiverrep::{
    biproduct, ext_direct_sum, quotient_rep, ses_to_cocycle, Conflation, ExtCocycle, RepMorphism, Search,
};
use crate::weakcomp::SplitWitness;

use super::{Check, Datum, Generator, Lab, Outcome, Sample, Want};

/// Adds one to the corner entry of every nonempty block.
fn corrupt(m: &RepMorphism) -> RepMorphism {
    let f = m.field();
    let mut maps = m.maps().to_vec();
    for block in maps.iter_mut().filter(|b| b.rows() > 0 && b.cols() > 0) {
        block.set(0, 0, f.add(block.get(0, 0), 1));
    }
    RepMorphism::unchecked(m.src().clone(), m.dst().clone(), maps)
}

/// Moves `k` by a corner perturbation squeezed between the idempotents, so
/// the result is still compatible with them whenever that is possible.
fn corrupt_kar(k: &KarMorphism) -> KarMorphism {
    let bump = corrupt(&RepMorphism::zero(k.src().rep(), k.dst().rep()));
    let squeezed = &(k.dst().idem() * &bump) * k.src().idem();
    let bump = if squeezed.is_zero() { bump } else { squeezed };
    KarMorphism::unchecked(k.src().clone(), k.dst().clone(), k.map() + &bump)
}

fn tampered(tamper: bool, m: &RepMorphism) -> RepMorphism {
    if tamper {
        corrupt(m)
    } else {
        m.clone()
    }
}

fn tampered_kar(tamper: bool, k: &KarMorphism) -> KarMorphism {
    if tamper {
        corrupt_kar(k)
    } else {
        k.clone()
    }
}

fn found<T>(s: Search<T>, what: &str) -> Result<T> {
    match s {
        Search::Found(t) => Ok(t),
        Search::NotFound => Err(Error::Assertion(format!("{what}: none exists"))),
        Search::Unknown => Err(Error::Inconclusive(what.into())),
    }
}

/// `x` and `y` form a short exact sequence whose class is `cls`.
fn check_conflation(cat: &Category, x: &RepMorphism, y: &RepMorphism, cls: &ExtCocycle) -> Result<()> {
    ensure(x.dst() == y.src(), || "maps are not composable".into())?;
    ensure(x.src() == cls.sub() && y.dst() == cls.quotient(), || "ends differ from the class".into())?;
    ensure(x.first_noncommuting_arrow().is_none(), || "inflation is not a morphism".into())?;
    ensure(y.first_noncommuting_arrow().is_none(), || "deflation is not a morphism".into())?;
    ensure((y * x).is_zero(), || "y∘x ≠ 0".into())?;
    ensure(x.is_injective(), || "inflation is not injective".into())?;
    ensure(y.is_surjective(), || "deflation is not surjective".into())?;
    for v in 0..x.maps().len() {
        ensure(x.map(v).rank() + y.map(v).rank() == y.src().dim(v), || {
            format!("not exact in the middle at vertex {v}")
        })?;
    }
    ensure(cat.membership(x.dst()), || "middle term left the category".into())?;
    let read = ses_to_cocycle(x, y)?;
    ensure(cat.same_class(&read, cls), || "sequence realizes a different class".into())
}

fn equiv_triangles(k: &Completion, t1: &FTriangle, t2: &FTriangle, tamper: bool, what: &str) -> Result<KarMorphism> {
    let h = tampered_kar(tamper, &found(k.f_seq_equivalent(t1, t2), what)?);
    ensure(h.is_iso(), || format!("{what}: comparison is not invertible"))?;
    ensure(&h * &t1.u == t2.u, || format!("{what}: h∘u ≠ u'"))?;
    ensure(&t2.v * &h == t1.v, || format!("{what}: v'∘h ≠ v"))?;
    Ok(h)
}

fn realizes(k: &Completion, t: &FTriangle, what: &str) -> Result<()> {
    ensure((&t.v * &t.u).is_zero(), || format!("{what}: v∘u ≠ 0"))?;
    let canon = k.r_realize(&t.cls)?;
    equiv_triangles(k, t, &canon, false, what).map(|_| ())
}

fn witness_holds(cat: &Category, w: &SplitWitness, p: &RepMorphism, tamper: bool) -> Result<()> {
    let w = SplitWitness {
        retraction: tampered(tamper, &w.retraction),
        ..w.clone()
    };
    w.verify(cat, p)
}

fn total(dims: &[usize]) -> usize {
    dims.iter().sum()
}

fn obj(g: &mut Generator<'_>, want: Option<Want>) -> KarObject {
    match want {
        None => KarObject::trivial(&g.object()),
        Some(w) => g.kar_object(w),
    }
}

// ---------------------------------------------------------------- base

fn gen_delta(g: &mut Generator<'_>) -> Result<Sample> {
    let (c, a) = (g.object(), g.object());
    Ok(Sample::default().with("delta", Datum::Cocycle(g.cocycle(&c, &a))))
}

fn verify_realization(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let delta = s.cocycle("delta")?;
    let conf = cat.s_realize(delta)?;
    let (a, c) = (delta.sub(), delta.quotient());
    let sums: Vec<usize> = a.dims().iter().zip(c.dims()).map(|(x, y)| x + y).collect();
    ensure(conf.mid().dims() == sums.as_slice(), || "middle dimensions are not additive".into())?;
    check_conflation(cat, &tampered(t, conf.x()), conf.y(), delta)?;
    Ok(Outcome::new(vec![cat.e_group(c, a).dim()], &conf))
}

fn gen_two_deltas(g: &mut Generator<'_>) -> Result<Sample> {
    let (c1, a1, c2, a2) = (g.object(), g.object(), g.object(), g.object());
    Ok(Sample::default()
        .with("delta1", Datum::Cocycle(g.cocycle(&c1, &a1)))
        .with("delta2", Datum::Cocycle(g.cocycle(&c2, &a2))))
}

fn verify_additivity(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let (d1, d2) = (s.cocycle("delta1")?, s.cocycle("delta2")?);
    let sum = cat.s_realize(&ext_direct_sum(d1, d2))?;
    let parts = cat.s_realize(d1)?.direct_sum(&cat.s_realize(d2)?);
    let b = tampered(t, &found(cat.seq_equivalent(&sum, &parts), "realization of δ⊕δ'")?);
    ensure(b.is_iso(), || "comparison is not invertible".into())?;
    ensure(&b * sum.x() == *parts.x(), || "b∘x ≠ x'".into())?;
    ensure(parts.y() * &b == *sum.y(), || "y'∘b ≠ y".into())?;
    let zero = cat.s_realize(&ExtCocycle::zero(d1.quotient(), d1.sub()))?;
    let [i1, _, _, p2] = biproduct(d1.sub(), d1.quotient());
    let split = Conflation::from_maps(i1, p2)?;
    found(cat.seq_equivalent(&zero, &split), "realization of 0")?;
    let dims = vec![
        cat.e_group(d1.quotient(), d1.sub()).dim(),
        cat.e_group(d2.quotient(), d2.sub()).dim(),
    ];
    Ok(Outcome::new(dims, &b))
}

fn gen_two_out_of_three(g: &mut Generator<'_>) -> Result<Sample> {
    let (c, a) = (g.object(), g.object());
    let delta = g.cocycle(&c, &a);
    Ok(Sample::default()
        .with("delta", Datum::Cocycle(delta))
        .with("a", Datum::Map(g.automorphism(&a)))
        .with("c", Datum::Map(g.automorphism(&c))))
}

fn verify_two_out_of_three(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let (delta, a, c) = (s.cocycle("delta")?, s.map("a")?, s.map("c")?);
    let target = delta.pushforward(a).pullback(&c.inverse()?);
    let (from, to) = (cat.s_realize(delta)?, cat.s_realize(&target)?);
    let b = tampered(t, &cat.lift_fill(&from, &to, a, c)?);
    ensure(&b * from.x() == to.x() * a, || "b∘x ≠ x'∘a".into())?;
    ensure(to.y() * &b == c * from.y(), || "y'∘b ≠ c∘y".into())?;
    ensure(b.is_iso(), || "middle map of two isomorphisms is not invertible".into())?;
    Ok(Outcome::new(vec![cat.e_group(delta.quotient(), delta.sub()).dim()], &b))
}

fn gen_closed_under_iso(g: &mut Generator<'_>) -> Result<Sample> {
    let (c, a) = (g.object(), g.object());
    let delta = g.cocycle(&c, &a);
    let mid = g.category().s_realize(&delta)?.mid().clone();
    Ok(Sample::default()
        .with("f", Datum::Map(g.automorphism(&a)))
        .with("g", Datum::Map(g.automorphism(&mid)))
        .with("h", Datum::Map(g.automorphism(&c)))
        .with("delta", Datum::Cocycle(delta)))
}

fn verify_closed_under_iso(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let (delta, f, g, h) = (s.cocycle("delta")?, s.map("f")?, s.map("g")?, s.map("h")?);
    let conf = cat.s_realize(delta)?;
    let moved = cat.transport_along_isos(&conf, f, g, h)?;
    let expected = delta.pullback(&h.inverse()?).pushforward(f);
    check_conflation(cat, &tampered(t, moved.x()), moved.y(), &expected)?;
    Ok(Outcome::new(vec![total(moved.mid().dims())], &moved))
}

fn verify_weak_kernel_cokernel(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let delta = s.cocycle("delta")?;
    let conf = cat.s_realize(delta)?;
    let x = tampered(t, conf.x());
    check_conflation(cat, &x, conf.y(), delta)?;
    ensure(
        cat.e_group(conf.quotient(), conf.mid()).is_trivial_class(&delta.pushforward(&x)),
        || "x_*δ ≠ 0".into(),
    )?;
    ensure(
        cat.e_group(conf.mid(), conf.sub()).is_trivial_class(&delta.pullback(conf.y())),
        || "y^*δ ≠ 0".into(),
    )?;
    Ok(Outcome::new(vec![cat.e_group(delta.quotient(), delta.sub()).dim()], &conf))
}

fn gen_delta_and_test(g: &mut Generator<'_>) -> Result<Sample> {
    let (c, a, w) = (g.object(), g.object(), g.object());
    Ok(Sample::default()
        .with("delta", Datum::Cocycle(g.cocycle(&c, &a)))
        .with("test", Datum::Rep(w)))
}

fn exactness(k: &Completion, tri: &FTriangle, test: &KarObject, t: bool) -> Result<Outcome> {
    let mut tri = tri.clone();
    tri.v = tampered_kar(t, &tri.v);
    let report = k.f_exactness_check(&tri, test)?;
    for n in report.covariant.iter().chain(&report.contravariant) {
        ensure(n.incoming_rank + n.outgoing_rank == n.dim, || format!("not exact at {}", n.label))?;
    }
    let dims = report.covariant.iter().chain(&report.contravariant).map(|n| n.dim).collect();
    Ok(Outcome::new(dims, &report))
}

fn verify_long_exact(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let conf = lab.cat().s_realize(s.cocycle("delta")?)?;
    let tri = lab.tilde().embed_conflation(&conf)?;
    exactness(lab.tilde(), &tri, &KarObject::trivial(s.rep("test")?), t)
}

fn gen_et3(g: &mut Generator<'_>) -> Result<Sample> {
    let cat = g.category();
    let (c, a, c2, a2) = (g.object(), g.object(), g.object(), g.object());
    let delta = g.cocycle(&c, &a);
    let extra = g.cocycle(&c2, &a2);
    let am = g.morphism(&a, &a2);
    let [i1, _, p1, p2] = biproduct(&c, &c2);
    let target = delta.pushforward(&am).pullback(&p1).add(&extra.pullback(&p2));
    let (from, to) = (cat.s_realize(&delta)?, cat.s_realize(&target)?);
    let b0 = cat.lift_fill(&from, &to, &am, &i1)?;
    let m = g.morphism(&c, to.mid());
    let b = &b0 + &(&m * from.y());
    Ok(Sample::default()
        .with("delta", Datum::Cocycle(delta))
        .with("target", Datum::Cocycle(target))
        .with("a", Datum::Map(am))
        .with("b", Datum::Map(b)))
}

fn verify_et3(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let (delta, target, a, b) = (s.cocycle("delta")?, s.cocycle("target")?, s.map("a")?, s.map("b")?);
    let (from, to) = (cat.s_realize(delta)?, cat.s_realize(target)?);
    ensure(b * from.x() == to.x() * a, || "input square does not commute".into())?;
    let c = tampered(t, &cat.et3_complete(&from, &to, a, b)?);
    ensure(&c * from.y() == to.y() * b, || "c∘y ≠ y'∘b".into())?;
    ensure(cat.same_class(&delta.pushforward(a), &target.pullback(&c)), || "a_*δ ≠ c^*δ'".into())?;
    Ok(Outcome::new(vec![cat.e_group(delta.quotient(), delta.sub()).dim()], &c))
}

fn gen_et3_op(g: &mut Generator<'_>) -> Result<Sample> {
    let cat = g.category();
    let (c, c2, a2, a3) = (g.object(), g.object(), g.object(), g.object());
    let target = g.cocycle(&c2, &a2);
    let extra = g.cocycle(&c, &a3);
    let cm = g.morphism(&c, &c2);
    let [i1, i2, p1, _] = biproduct(&a2, &a3);
    let delta = target.pullback(&cm).pushforward(&i1).add(&extra.pushforward(&i2));
    let (from, to) = (cat.s_realize(&delta)?, cat.s_realize(&target)?);
    let b0 = cat.lift_fill(&from, &to, &p1, &cm)?;
    let m = g.morphism(from.mid(), &a2);
    let b = &b0 + &(to.x() * &m);
    Ok(Sample::default()
        .with("delta", Datum::Cocycle(delta))
        .with("target", Datum::Cocycle(target))
        .with("b", Datum::Map(b))
        .with("c", Datum::Map(cm)))
}

fn verify_et3_op(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let (delta, target, b, c) = (s.cocycle("delta")?, s.cocycle("target")?, s.map("b")?, s.map("c")?);
    let (from, to) = (cat.s_realize(delta)?, cat.s_realize(target)?);
    ensure(to.y() * b == c * from.y(), || "input square does not commute".into())?;
    let op = cat.opposite();
    let a_op = op.et3_complete(&to.opposite(), &from.opposite(), &c.opposite(), &b.opposite())?;
    let a = tampered(t, &a_op.opposite());
    ensure(to.x() * &a == b * from.x(), || "x'∘a ≠ b∘x".into())?;
    ensure(cat.same_class(&delta.pushforward(&a), &target.pullback(c)), || "a_*δ ≠ c^*δ'".into())?;
    Ok(Outcome::new(vec![cat.e_group(delta.quotient(), delta.sub()).dim()], &a))
}

fn et4_holds(cat: &Category, first: &Conflation, second: &Conflation, t: bool) -> Result<Outcome> {
    let r = cat.et4_base(first, second)?;
    let d = tampered(t, &r.d);
    ensure(*r.h() == second.x() * first.x(), || "h ≠ g∘f".into())?;
    check_conflation(cat, r.h(), r.h_prime(), r.composite.cls())?;
    check_conflation(cat, &d, &r.e, &second.cls().pushforward(first.y()))?;
    ensure(&d * first.y() == r.h_prime() * second.x(), || "d∘f' ≠ h'∘g".into())?;
    ensure(&r.e * r.h_prime() == *second.y(), || "e∘h' ≠ g'".into())?;
    let dd = r.composite.cls();
    ensure(cat.same_class(&dd.pullback(&d), first.cls()), || "d^*δ'' ≠ δ".into())?;
    ensure(
        cat.same_class(&dd.pushforward(first.x()), &second.cls().pullback(&r.e)),
        || "f_*δ'' ≠ e^*δ'".into(),
    )?;
    Ok(Outcome::new(r.e_obj().dims().to_vec(), &r.composite))
}

fn gen_et4(g: &mut Generator<'_>) -> Result<Sample> {
    let (d, a, f) = (g.object(), g.object(), g.object());
    let delta = g.cocycle(&d, &a);
    let b = g.category().s_realize(&delta)?.mid().clone();
    let second = g.cocycle(&f, &b);
    Ok(Sample::default()
        .with("delta", Datum::Cocycle(delta))
        .with("second", Datum::Cocycle(second)))
}

fn verify_et4(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let first = cat.s_realize(s.cocycle("delta")?)?;
    let second = cat.s_realize(s.cocycle("second")?)?;
    et4_holds(cat, &first, &second, t)
}

/// Two composable deflations `B -> A` and `C -> B`.
fn gen_et4_op(g: &mut Generator<'_>) -> Result<Sample> {
    let (a, d, f) = (g.object(), g.object(), g.object());
    let delta = g.cocycle(&a, &d);
    let b = g.category().s_realize(&delta)?.mid().clone();
    let second = g.cocycle(&b, &f);
    Ok(Sample::default()
        .with("delta", Datum::Cocycle(delta))
        .with("second", Datum::Cocycle(second)))
}

fn verify_et4_op(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let first = cat.s_realize(s.cocycle("delta")?)?.opposite();
    let second = cat.s_realize(s.cocycle("second")?)?.opposite();
    et4_holds(&cat.opposite(), &first, &second, t)
}

fn gen_mapping_cone(g: &mut Generator<'_>) -> Result<Sample> {
    let (c, a, d) = (g.object(), g.object(), g.object());
    let delta = g.cocycle(&c, &a);
    Ok(Sample::default()
        .with("f", Datum::Map(g.morphism(&a, &d)))
        .with("delta", Datum::Cocycle(delta)))
}

fn verify_mapping_cone(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let (delta, f) = (s.cocycle("delta")?, s.map("f")?);
    let conf = cat.s_realize(delta)?;
    let (pushed, g, cone) = cat.mapping_cone_base(&conf, f)?;
    let g = tampered(t, &g);
    ensure(&g * conf.x() == pushed.x() * f, || "g∘x ≠ d∘f".into())?;
    ensure(pushed.y() * &g == *conf.y(), || "e∘g ≠ y".into())?;
    ensure(*cone.x() == RepMorphism::column(&[&-f, conf.x()]), || "cone inflation is not (−f, x)".into())?;
    check_conflation(cat, cone.x(), cone.y(), &delta.pullback(pushed.y()))?;
    Ok(Outcome::new(vec![total(cone.mid().dims())], &cone))
}

fn gen_summand_cancel(g: &mut Generator<'_>) -> Result<Sample> {
    let (z, x, a) = (g.object(), g.object(), g.object());
    let delta = g.cocycle(&z, &x);
    let y = g.category().s_realize(&delta)?.mid().clone();
    Ok(Sample::default()
        .with("u", Datum::Map(g.morphism(&a, &y)))
        .with("v", Datum::Map(g.morphism(&x, &a)))
        .with("delta", Datum::Cocycle(delta)))
}

fn verify_summand_cancel(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let (delta, u, v) = (s.cocycle("delta")?, s.map("u")?, s.map("v")?);
    let conf = cat.s_realize(delta)?;
    let (x_obj, y_obj, a_obj) = (conf.sub(), conf.mid(), u.src());
    let one = RepMorphism::identity(a_obj);
    let top = conf.x() + &(u * v);
    let infl = RepMorphism::column(&[&RepMorphism::row(&[&top, u]), &RepMorphism::row(&[v, &one])]);
    let (_, proj) = quotient_rep(&y_obj.direct_sum(a_obj), &infl)?;
    let big = Conflation::from_maps(infl, proj)?;
    let reduced = cat.summand_cancel(&big, x_obj, y_obj, a_obj)?;
    let x = tampered(t, reduced.x());
    ensure(x == *conf.x(), || "reduced inflation is not x' − u∘v".into())?;
    let [_, _, px, _] = biproduct(x_obj, a_obj);
    check_conflation(cat, &x, reduced.y(), &big.cls().pushforward(&px))?;
    Ok(Outcome::new(vec![total(a_obj.dims())], &reduced))
}

fn verify_opposite_transport(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let op = cat.opposite();
    let delta = s.cocycle("delta")?;
    let (a, c) = (delta.sub(), delta.quotient());
    let dim = cat.e_group(c, a).dim();
    ensure(op.e_group(&a.opposite(), &c.opposite()).dim() == dim, || "extension dimension changed".into())?;
    ensure(delta.opposite().opposite() == *delta, || "transporting twice is not the identity".into())?;
    let conf = cat.s_realize(delta)?;
    ensure(conf.opposite().opposite() == conf, || "conflation transported twice differs".into())?;
    let oc = conf.opposite();
    check_conflation(&op, &tampered(t, oc.x()), oc.y(), &delta.opposite())?;
    Ok(Outcome::new(vec![dim], &oc))
}

// ------------------------------------------------------- shared by both

fn gen_cone_corollary(g: &mut Generator<'_>, want: Option<Want>) -> Result<Sample> {
    let k = g.completion();
    let (c, a, w) = (obj(g, want), obj(g, want), obj(g, want));
    let eps = g.class(&c, &a);
    let psi = g.class(&w, &a);
    let [_, _, p1, p2] = k.biproduct(&c, &w);
    let delta = k.add(&k.pullback(&eps, &p1)?, &k.pullback(&psi, &p2)?)?;
    let (te, td) = (k.r_realize(&eps)?, k.r_realize(&delta)?);
    let u = g.kar_solution(te.mid(), td.mid(), |m| (m * &te.u).map().to_vec(), &td.u.map().to_vec())?;
    Ok(Sample::default()
        .with("eps", Datum::Class(eps))
        .with("delta", Datum::Class(delta))
        .with("u", Datum::KarMap(u)))
}

fn verify_cone_corollary(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let k = lab.tilde();
    let (eps, delta, u) = (s.class("eps")?, s.class("delta")?, s.kar_map("u")?);
    let (te, td) = (k.r_realize(eps)?, k.r_realize(delta)?);
    let (w, cone) = k.f_cone_corollary(&te, &td, u)?;
    let w = tampered_kar(t, &w);
    ensure(&w * &te.v == &td.v * u, || "w∘v_ε ≠ v_δ∘u".into())?;
    ensure(k.pullback(delta, &w)? == *eps, || "w^*δ ≠ ε".into())?;
    ensure(cone.cls == k.pushforward(delta, &te.u)?, || "cone class differs".into())?;
    realizes(k, &cone, "corollary cone")?;
    Ok(Outcome::new(cone.mid().image_dims(), &w))
}

fn gen_biadditivity(g: &mut Generator<'_>, want: Option<Want>) -> Result<Sample> {
    Ok(Sample::default()
        .with("x", Datum::Object(obj(g, want)))
        .with("u", Datum::Object(obj(g, want)))
        .with("v", Datum::Object(obj(g, want))))
}

fn verify_biadditivity(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let k = lab.tilde();
    let (x, u, v) = (s.object("x")?, s.object("u")?, s.object("v")?);
    let second = k.f_biadditivity_check(x, u, v)?;
    let first = k.f_biadditivity_check_first(u, v, x)?;
    let [i1, i2, p1, p2] = k.biproduct(u, v);
    let i1 = tampered_kar(t, &i1);
    for xi in k.f_space(x, &u.direct_sum(v)).basis() {
        let back = k.add(
            &k.pushforward(&k.pushforward(&xi, &p1)?, &i1)?,
            &k.pushforward(&k.pushforward(&xi, &p2)?, &i2)?,
        )?;
        ensure(back == xi, || "class is not the sum of its components".into())?;
    }
    for xi in k.f_space(&u.direct_sum(v), x).basis() {
        let back = k.add(
            &k.pullback(&k.pullback(&xi, &i1)?, &p1)?,
            &k.pullback(&k.pullback(&xi, &i2)?, &p2)?,
        )?;
        ensure(back == xi, || "class is not the sum of its restrictions".into())?;
    }
    let dims = second.iter().chain(&first).copied().collect();
    Ok(Outcome::new(dims, &(second, first)))
}

// ------------------------------------------------------------- karoubi

fn gen_class(g: &mut Generator<'_>, want: Want) -> Result<Sample> {
    let (z, x) = (g.kar_object(want), g.kar_object(want));
    Ok(Sample::default().with("phi", Datum::Class(g.class(&z, &x))))
}

fn gen_any_class(g: &mut Generator<'_>) -> Result<Sample> {
    gen_class(g, Want::Any)
}

fn gen_weak_class(g: &mut Generator<'_>) -> Result<Sample> {
    gen_class(g, Want::Weak)
}

fn gen_subgroup(g: &mut Generator<'_>) -> Result<Sample> {
    let (z, x) = (g.kar_object(Want::Any), g.kar_object(Want::Any));
    let xi = g.cocycle(z.rep(), x.rep());
    Ok(Sample::default()
        .with("z", Datum::Object(z))
        .with("x", Datum::Object(x))
        .with("xi", Datum::Cocycle(xi)))
}

fn verify_subgroup(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let (cat, k) = (lab.cat(), lab.tilde());
    let (z, x, xi) = (s.object("z")?, s.object("x")?, s.cocycle("xi")?);
    let space = k.f_space(z, x);
    let ambient = cat.e_group(z.rep(), x.rep());
    let q = tampered(t, x.idem());
    let fixed = |c: &ExtCocycle| ambient.same_class(&c.pullback(z.idem()).pushforward(&q), c);
    let cls = space.project(xi);
    ensure(space.contains(cls.cocycle()), || "projection left the subgroup".into())?;
    ensure(fixed(cls.cocycle()), || "projected class is not fixed by (p, q)".into())?;
    let basis = space.basis();
    for b in &basis {
        ensure(fixed(b.cocycle()), || "basis class is not fixed by (p, q)".into())?;
    }
    if let [b0, b1, ..] = basis.as_slice() {
        ensure(space.contains(&b0.cocycle().add(b1.cocycle())), || "subgroup is not closed under sums".into())?;
    }
    ensure(space.dim() <= ambient.dim(), || "subgroup is larger than the group".into())?;
    Ok(Outcome::new(vec![space.dim(), ambient.dim()], &cls))
}

fn verify_idem_fill(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let (cat, k) = (lab.cat(), lab.tilde());
    let phi = s.class("phi")?;
    let (e, f) = (phi.sub().idem(), phi.quotient().idem());
    let conf = cat.s_realize(phi.cocycle())?;
    let g = tampered(t, &k.idem_fill(&conf, e, f)?);
    ensure(&g * &g == g, || "g∘g ≠ g".into())?;
    ensure(&g * conf.x() == conf.x() * e, || "g∘x ≠ x∘e".into())?;
    ensure(conf.y() * &g == f * conf.y(), || "y∘g ≠ f∘y".into())?;
    let image: Vec<usize> = g.maps().iter().map(|m| m.rank()).collect();
    Ok(Outcome::new(image, &g))
}

fn gen_well_defined(g: &mut Generator<'_>) -> Result<Sample> {
    let (z, x) = (g.kar_object(Want::Any), g.kar_object(Want::Any));
    let phi = g.class(&z, &x);
    let mid = g.category().s_realize(phi.cocycle())?.mid().clone();
    Ok(Sample::default()
        .with("auto", Datum::Map(g.automorphism(&mid)))
        .with("shift", Datum::Map(g.morphism(z.rep(), x.rep())))
        .with("phi", Datum::Class(phi)))
}

fn verify_well_defined(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let (cat, k) = (lab.cat(), lab.tilde());
    let (phi, auto, shift) = (s.class("phi")?, s.map("auto")?, s.map("shift")?);
    let canonical = k.r_realize(phi)?;
    let conf = cat.s_realize(phi.cocycle())?;
    let x2 = auto * conf.x();
    let y2 = conf.y() * &auto.inverse()?;
    let other = Conflation::with_class(x2.clone(), y2.clone(), phi.cocycle().clone())?;
    let fill = cat.lift_fill(&other, &other, phi.sub().idem(), phi.quotient().idem())?;
    let fill = tampered(t, &(&fill + &(&(&x2 * shift) * &y2)));
    let alternate = k.r_realize_with(phi, &other, &fill)?;
    let h = equiv_triangles(k, &canonical, &alternate, false, "alternate realization")?;
    Ok(Outcome::new(canonical.mid().image_dims(), &h))
}

fn verify_standard_form(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let k = lab.tilde();
    let phi = s.class("phi")?;
    let tri = k.r_realize(phi)?;
    let u = tampered_kar(t, &tri.u);
    let (q, r, p) = (tri.sub().idem(), tri.mid().idem(), tri.quotient().idem());
    ensure(tri.is_standard_form(), || "triangle is not in standard form".into())?;
    ensure(u.map() * q == *u.map() && r * u.map() == *u.map(), || "u is not compatible with q and r".into())?;
    ensure(tri.v.map() * r == *tri.v.map() && p * tri.v.map() == *tri.v.map(), || {
        "v is not compatible with r and p".into()
    })?;
    ensure(r.is_idempotent(), || "middle idempotent is not idempotent".into())?;
    ensure((&tri.v * &u).is_zero(), || "v∘u ≠ 0".into())?;
    let base = tri.base()?;
    ensure(*u.map() == base.x() * q && *tri.v.map() == p * base.y(), || "maps are not x∘q and p∘y".into())?;
    Ok(Outcome::new(tri.mid().image_dims(), &tri))
}

fn gen_additive(g: &mut Generator<'_>) -> Result<Sample> {
    let (z1, x1, z2, x2) = (
        g.kar_object(Want::Any),
        g.kar_object(Want::Any),
        g.kar_object(Want::Any),
        g.kar_object(Want::Any),
    );
    Ok(Sample::default()
        .with("phi1", Datum::Class(g.class(&z1, &x1)))
        .with("phi2", Datum::Class(g.class(&z2, &x2))))
}

fn verify_additive(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let k = lab.tilde();
    let (phi1, phi2) = (s.class("phi1")?, s.class("phi2")?);
    let sum = k.r_realize(&k.direct_sum_class(phi1, phi2)?)?;
    let parts = k.direct_sum_triangle(&k.r_realize(phi1)?, &k.r_realize(phi2)?)?;
    let h = equiv_triangles(k, &sum, &parts, t, "realization of φ⊕φ'")?;
    let zero_cls = k.f_space(phi1.quotient(), phi1.sub()).zero();
    let zero = k.r_realize(&zero_cls)?;
    let [i1, _, _, p2] = k.biproduct(phi1.sub(), phi1.quotient());
    let split = FTriangle {
        u: i1,
        v: p2,
        cls: zero_cls,
        base: None,
    };
    equiv_triangles(k, &zero, &split, false, "realization of 0")?;
    Ok(Outcome::new(sum.mid().image_dims(), &h))
}

fn gen_kar_et3(g: &mut Generator<'_>) -> Result<Sample> {
    let k = g.completion();
    let (z1, x1, x2, z3) = (
        g.kar_object(Want::Any),
        g.kar_object(Want::Any),
        g.kar_object(Want::Any),
        g.kar_object(Want::Any),
    );
    let phi1 = g.class(&z1, &x1);
    let a = g.kar_morphism(&x1, &x2);
    let psi = g.class(&z3, &x2);
    let [_, _, p1, p3] = k.biproduct(&z1, &z3);
    let phi2 = k.add(&k.pullback(&k.pushforward(&phi1, &a)?, &p1)?, &k.pullback(&psi, &p3)?)?;
    let (t1, t2) = (k.r_realize(&phi1)?, k.r_realize(&phi2)?);
    let rhs = (&t2.u * &a).map().to_vec();
    let b = g.kar_solution(t1.mid(), t2.mid(), |m| (m * &t1.u).map().to_vec(), &rhs)?;
    Ok(Sample::default()
        .with("phi1", Datum::Class(phi1))
        .with("phi2", Datum::Class(phi2))
        .with("a", Datum::KarMap(a))
        .with("b", Datum::KarMap(b)))
}

fn verify_kar_et3(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let k = lab.tilde();
    let (phi1, phi2, a, b) = (s.class("phi1")?, s.class("phi2")?, s.kar_map("a")?, s.kar_map("b")?);
    let (t1, t2) = (k.r_realize(phi1)?, k.r_realize(phi2)?);
    let c = tampered_kar(t, &k.et3_tilde(&t1, &t2, a, b)?);
    ensure(&c * &t1.v == &t2.v * b, || "c∘v ≠ v'∘b".into())?;
    ensure(k.pushforward(phi1, a)? == k.pullback(phi2, &c)?, || "a_*φ ≠ c^*φ'".into())?;
    Ok(Outcome::new(t1.mid().image_dims(), &c))
}

fn gen_kar_et3_op(g: &mut Generator<'_>) -> Result<Sample> {
    let k = g.completion();
    let (z2, x2, z1, x3) = (
        g.kar_object(Want::Any),
        g.kar_object(Want::Any),
        g.kar_object(Want::Any),
        g.kar_object(Want::Any),
    );
    let phi2 = g.class(&z2, &x2);
    let c = g.kar_morphism(&z1, &z2);
    let psi = g.class(&z1, &x3);
    let [i2, i3, _, _] = k.biproduct(&x2, &x3);
    let phi1 = k.add(&k.pushforward(&k.pullback(&phi2, &c)?, &i2)?, &k.pushforward(&psi, &i3)?)?;
    let (t1, t2) = (k.r_realize(&phi1)?, k.r_realize(&phi2)?);
    let rhs = (&c * &t1.v).map().to_vec();
    let b = g.kar_solution(t1.mid(), t2.mid(), |m| (&t2.v * m).map().to_vec(), &rhs)?;
    Ok(Sample::default()
        .with("phi1", Datum::Class(phi1))
        .with("phi2", Datum::Class(phi2))
        .with("b", Datum::KarMap(b))
        .with("c", Datum::KarMap(c)))
}

fn verify_kar_et3_op(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let k = lab.tilde();
    let (phi1, phi2, b, c) = (s.class("phi1")?, s.class("phi2")?, s.kar_map("b")?, s.kar_map("c")?);
    let (t1, t2) = (k.r_realize(phi1)?, k.r_realize(phi2)?);
    let a = tampered_kar(t, &k.et3_tilde_op(&t1, &t2, b, c)?);
    ensure(b * &t1.u == &t2.u * &a, || "b∘u ≠ u'∘a".into())?;
    ensure(k.pushforward(phi1, &a)? == k.pullback(phi2, c)?, || "a_*φ ≠ c^*φ'".into())?;
    Ok(Outcome::new(t1.mid().image_dims(), &a))
}

fn kar_et4_holds(k: &Completion, t1: &FTriangle, phi2: &FClass, t: bool) -> Result<Outcome> {
    let res = k.et4_tilde(t1, phi2)?;
    let d = tampered_kar(t, &res.d);
    let t2 = k.r_realize(phi2)?;
    ensure(res.h == &t2.u * &t1.u, || "h ≠ (g r)∘(f q)".into())?;
    ensure(&d * &t1.v == &res.h_prime * &t2.u, || "d∘(p f') ≠ h'∘(g r)".into())?;
    ensure(&res.e * &res.h_prime == t2.v, || "e∘h' ≠ t g'".into())?;
    ensure(res.lower.u == d && res.lower.v == res.e, || "lower row is not (d, e)".into())?;
    ensure(res.lower.cls == k.pushforward(phi2, &t1.v)?, || "lower class is not (p f')_*φ'".into())?;
    realizes(k, &res.lower, "compatibility (1)")?;
    ensure(k.pullback(&res.middle_class, &d)? == t1.cls, || "compatibility (2): d^*φ'' ≠ φ".into())?;
    ensure(
        k.pushforward(&res.middle_class, &t1.u)? == k.pullback(phi2, &res.e)?,
        || "compatibility (3): (f q)_*φ'' ≠ e^*φ'".into(),
    )?;
    let middle = FTriangle {
        u: res.h.clone(),
        v: res.h_prime.clone(),
        cls: res.middle_class.clone(),
        base: None,
    };
    realizes(k, &middle, "middle row")?;
    Ok(Outcome::new(res.e_obj.image_dims(), &res))
}

fn gen_kar_et4(g: &mut Generator<'_>) -> Result<Sample> {
    let k = g.completion();
    let (d, a, f) = (g.kar_object(Want::Any), g.kar_object(Want::Any), g.kar_object(Want::Any));
    let phi1 = g.class(&d, &a);
    let b = k.r_realize(&phi1)?.mid().clone();
    let phi2 = g.class(&f, &b);
    Ok(Sample::default()
        .with("phi1", Datum::Class(phi1))
        .with("phi2", Datum::Class(phi2)))
}

fn verify_kar_et4(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let k = lab.tilde();
    let phi1 = s.class("phi1")?;
    kar_et4_holds(k, &k.r_realize(phi1)?, s.class("phi2")?, t)
}

/// A triangle `(D,p) -> (B,r) -> (A,q)` and a class with quotient `(B,r)`.
fn gen_kar_et4_op(g: &mut Generator<'_>) -> Result<Sample> {
    let k = g.completion();
    let (a, d, f) = (g.kar_object(Want::Any), g.kar_object(Want::Any), g.kar_object(Want::Any));
    let phi1 = g.class(&a, &d);
    let b = k.r_realize(&phi1)?.mid().clone();
    let phi2 = g.class(&b, &f);
    Ok(Sample::default()
        .with("phi1", Datum::Class(phi1))
        .with("phi2", Datum::Class(phi2)))
}

fn verify_kar_et4_op(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let k = lab.tilde();
    let t1 = k.opposite_triangle(&k.r_realize(s.class("phi1")?)?)?;
    let phi2 = k.opposite_class(s.class("phi2")?)?;
    kar_et4_holds(&k.opposite(), &t1, &phi2, t)
}

fn gen_weak_cokernel(g: &mut Generator<'_>) -> Result<Sample> {
    let k = g.completion();
    let (z, x, w) = (g.kar_object(Want::Any), g.kar_object(Want::Any), g.kar_object(Want::Any));
    let phi = g.class(&z, &x);
    let tri = k.r_realize(&phi)?;
    let zero = vec![0; (&KarMorphism::zero(tri.mid(), &w) * &tri.u).map().to_vec().len()];
    let gm = g.kar_solution(tri.mid(), &w, |m| (m * &tri.u).map().to_vec(), &zero)?;
    Ok(Sample::default()
        .with("phi", Datum::Class(phi))
        .with("g", Datum::KarMap(gm)))
}

fn verify_weak_cokernel(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let k = lab.tilde();
    let (phi, g) = (s.class("phi")?, s.kar_map("g")?);
    let tri = k.r_realize(phi)?;
    let h = tampered_kar(t, &k.weak_cokernel_solve(&tri, g)?);
    ensure(&h * &tri.v == *g, || "h∘v ≠ g".into())?;
    Ok(Outcome::new(g.dst().image_dims(), &h))
}

fn gen_kar_long_exact(g: &mut Generator<'_>) -> Result<Sample> {
    let (z, x, w) = (g.kar_object(Want::Any), g.kar_object(Want::Any), g.kar_object(Want::Any));
    Ok(Sample::default()
        .with("phi", Datum::Class(g.class(&z, &x)))
        .with("test", Datum::Object(w)))
}

fn verify_kar_long_exact(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let k = lab.tilde();
    let tri = k.r_realize(s.class("phi")?)?;
    exactness(k, &tri, s.object("test")?, t)
}

fn gen_kar_mapping_cone(g: &mut Generator<'_>) -> Result<Sample> {
    let (c, a, e) = (g.kar_object(Want::Any), g.kar_object(Want::Any), g.kar_object(Want::Any));
    let phi = g.class(&c, &a);
    Ok(Sample::default()
        .with("h", Datum::KarMap(g.kar_morphism(&e, &c)))
        .with("phi", Datum::Class(phi)))
}

fn verify_kar_mapping_cone(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let k = lab.tilde();
    let (phi, h) = (s.class("phi")?, s.kar_map("h")?);
    let tri = k.r_realize(phi)?;
    let (g, cone) = k.f_mapping_cone(&tri, h)?;
    let g = tampered_kar(t, &g);
    let pulled = k.r_realize(&k.pullback(phi, h)?)?;
    ensure(&g * &pulled.u == tri.u, || "g∘u' ≠ u".into())?;
    ensure(&tri.v * &g == h * &pulled.v, || "v∘g ≠ h∘v'".into())?;
    ensure(cone.cls == k.pushforward(phi, &pulled.u)?, || "cone class differs".into())?;
    realizes(k, &cone, "mapping cone")?;
    Ok(Outcome::new(cone.mid().image_dims(), &g))
}

fn gen_embedding(g: &mut Generator<'_>) -> Result<Sample> {
    let (c, a, a2, c0) = (g.object(), g.object(), g.object(), g.object());
    let delta = g.cocycle(&c, &a);
    Ok(Sample::default()
        .with("a", Datum::Map(g.morphism(&a, &a2)))
        .with("c", Datum::Map(g.morphism(&c0, &c)))
        .with("delta", Datum::Cocycle(delta)))
}

fn verify_embedding(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let k = lab.tilde();
    let (delta, a, c) = (s.cocycle("delta")?, s.map("a")?, s.map("c")?);
    k.embedding_functor_check(delta, a, c)?;
    let cls = k.embed_class(delta)?;
    let tri = k.r_realize(&cls)?;
    ensure(tri.mid().idem().is_iso(), || "embedded realization carries a proper idempotent".into())?;
    let acted = k.f_act(&KarMorphism::trivial(c), &KarMorphism::trivial(&tampered(t, a)), &cls)?;
    ensure(acted == k.embed_class(&delta.pullback(c).pushforward(a))?, || "Γ is not natural".into())?;
    Ok(Outcome::new(vec![lab.cat().e_group(delta.quotient(), delta.sub()).dim()], &acted))
}

fn gen_idempotent_split(g: &mut Generator<'_>) -> Result<Sample> {
    let (o, sigma) = g.nested_idempotents();
    Ok(Sample::default()
        .with("object", Datum::Object(o))
        .with("sigma", Datum::KarMap(sigma)))
}

fn verify_idempotent_split(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let k = lab.tilde();
    let (o, sigma) = (s.object("object")?, s.kar_map("sigma")?);
    let d = k.split_in_tilde(o, sigma)?;
    let r = tampered_kar(t, &d.retraction);
    ensure(&d.section * &r == *sigma, || "c∘r ≠ σ".into())?;
    ensure(&r * &d.section == d.image.identity(), || "r∘c ≠ 1".into())?;
    ensure(&d.kernel_section * &d.kernel_retraction == &o.identity() - sigma, || "kernel c∘r ≠ 1 − σ".into())?;
    ensure(&d.kernel_retraction * &d.kernel_section == d.kernel.identity(), || "kernel r∘c ≠ 1".into())?;
    ensure(&d.from_sum * &d.to_sum == o.identity(), || "summands do not recover the object".into())?;
    let dims = vec![total(&d.image.image_dims()), total(&d.kernel.image_dims())];
    Ok(Outcome::new(dims, &d))
}

// ---------------------------------------------------------------- weak

fn gen_any_object(g: &mut Generator<'_>) -> Result<Sample> {
    Ok(Sample::default().with("object", Datum::Object(g.kar_object(Want::Any))))
}

fn verify_split_verdict(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let o = s.object("object")?;
    let image = o.image_dims();
    let verdict = lab.weak().splits_in_base(o.rep(), o.idem())?;
    if let Backend::Balanced { constraint } = cat.backend() {
        let balanced = constraint.holds(&image);
        ensure(matches!(verdict, Search::Found(_)) == balanced, || {
            format!("verdict disagrees with the dimension test on image {image:?}")
        })?;
    }
    if let Search::Found(w) = &verdict {
        witness_holds(cat, w, o.idem(), t)?;
    }
    Ok(Outcome::new(image, &verdict.found()))
}

fn verify_split_idem_fill(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let (cat, w) = (lab.cat(), lab.weak());
    let phi = s.class("phi")?;
    let (ew, fw) = (w.certify(phi.sub())?, w.certify(phi.quotient())?);
    let (e, f) = (phi.sub().idem(), phi.quotient().idem());
    let conf = cat.s_realize(phi.cocycle())?;
    let fill = w.split_idem_fill(&conf, ew.witness(), fw.witness())?;
    let g = tampered(t, &fill.g);
    ensure(&g * &g == g, || "g∘g ≠ g".into())?;
    ensure(&g * conf.x() == conf.x() * e, || "g∘x ≠ x∘e".into())?;
    ensure(conf.y() * &g == f * conf.y(), || "y∘g ≠ f∘y".into())?;
    witness_holds(cat, &fill.witness, &g, false)?;
    Ok(Outcome::new(fill.witness.object.dims().to_vec(), &fill))
}

fn verify_extension_closure(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let (cat, w) = (lab.cat(), lab.weak());
    let phi = s.class("phi")?;
    let report = w.weak_extension_closed_check(phi)?;
    ensure(report.middle.underlying() == report.triangle.mid(), || "certificate is for another object".into())?;
    witness_holds(cat, report.middle.witness(), report.triangle.mid().idem(), t)?;
    let canonical = lab.tilde().r_realize(phi)?;
    ensure(report.canonical_middle.underlying() == canonical.mid(), || {
        "transported certificate is for another object".into()
    })?;
    witness_holds(cat, report.canonical_middle.witness(), canonical.mid().idem(), false)?;
    Ok(Outcome::new(report.triangle.mid().image_dims(), &report.middle))
}

fn gen_retraction(g: &mut Generator<'_>) -> Result<Sample> {
    let (a, b) = g.weak_summand();
    let p1 = b.idem().clone();
    Ok(Sample::default()
        .with("rho", Datum::KarMap(KarMorphism::new(a.clone(), b.clone(), p1.clone())?))
        .with("sigma", Datum::KarMap(KarMorphism::new(b, a, p1)?)))
}

fn verify_retraction_kernel(lab: &Lab, s: &Sample, t: bool) -> Result<Outcome> {
    let cat = lab.cat();
    let (rho, sigma) = (s.kar_map("rho")?, s.kar_map("sigma")?);
    let rk = lab.weak().retraction_kernel(rho, sigma)?;
    let incl = tampered_kar(t, &rk.inclusion);
    let a = rho.src();
    ensure((rho * &incl).is_zero(), || "ρ∘i ≠ 0".into())?;
    ensure(&rk.projection * &incl == rk.kernel.underlying().identity(), || "kernel inclusion is not split".into())?;
    ensure(&(&incl * &rk.projection) + &(sigma * rho) == a.identity(), || "i∘π + σ∘ρ ≠ 1".into())?;
    witness_holds(cat, rk.kernel.witness(), rk.kernel.underlying().idem(), false)?;
    Ok(Outcome::new(rk.kernel.underlying().image_dims(), &rk.kernel))
}

pub(super) fn catalogue() -> Vec<Check> {
    macro_rules! check {
        ($name:expr, $gen:expr, $verify:expr) => {
            Check {
                name: $name,
                generate: $gen,
                verify: $verify,
            }
        };
    }
    vec![
        check!("base.realization", gen_delta, verify_realization),
        check!("base.additivity", gen_two_deltas, verify_additivity),
        check!("base.two_out_of_three", gen_two_out_of_three, verify_two_out_of_three),
        check!("base.closed_under_iso", gen_closed_under_iso, verify_closed_under_iso),
        check!("base.weak_kernel_cokernel", gen_delta, verify_weak_kernel_cokernel),
        check!("base.long_exact", gen_delta_and_test, verify_long_exact),
        check!("base.et3", gen_et3, verify_et3),
        check!("base.et3_op", gen_et3_op, verify_et3_op),
        check!("base.et4", gen_et4, verify_et4),
        check!("base.et4_op", gen_et4_op, verify_et4_op),
        check!("base.mapping_cone", gen_mapping_cone, verify_mapping_cone),
        check!("base.cone_corollary", |g| gen_cone_corollary(g, None), verify_cone_corollary),
        check!("base.summand_cancel", gen_summand_cancel, verify_summand_cancel),
        check!("base.biadditivity", |g| gen_biadditivity(g, None), verify_biadditivity),
        check!("base.opposite_transport", gen_delta, verify_opposite_transport),
        check!("karoubi.subgroup", gen_subgroup, verify_subgroup),
        check!("karoubi.biadditivity", |g| gen_biadditivity(g, Some(Want::Any)), verify_biadditivity),
        check!("karoubi.idem_fill", gen_any_class, verify_idem_fill),
        check!("karoubi.well_defined", gen_well_defined, verify_well_defined),
        check!("karoubi.standard_form", gen_any_class, verify_standard_form),
        check!("karoubi.additive_realization", gen_additive, verify_additive),
        check!("karoubi.et3", gen_kar_et3, verify_kar_et3),
        check!("karoubi.et3_op", gen_kar_et3_op, verify_kar_et3_op),
        check!("karoubi.et4", gen_kar_et4, verify_kar_et4),
        check!("karoubi.et4_op", gen_kar_et4_op, verify_kar_et4_op),
        check!("karoubi.weak_cokernel", gen_weak_cokernel, verify_weak_cokernel),
        check!("karoubi.long_exact", gen_kar_long_exact, verify_kar_long_exact),
        check!("karoubi.mapping_cone", gen_kar_mapping_cone, verify_kar_mapping_cone),
        check!("karoubi.cone_corollary", |g| gen_cone_corollary(g, Some(Want::Any)), verify_cone_corollary),
        check!("karoubi.embedding", gen_embedding, verify_embedding),
        check!("karoubi.idempotent_split", gen_idempotent_split, verify_idempotent_split),
        check!("weak.split_verdict", gen_any_object, verify_split_verdict),
        check!("weak.split_idem_fill", gen_weak_class, verify_split_idem_fill),
        check!("weak.extension_closure", gen_weak_class, verify_extension_closure),
        check!("weak.retraction_kernel", gen_retraction, verify_retraction_kernel),
    ]
}

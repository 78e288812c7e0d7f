//! The weak idempotent completion: the full subcategory of the idempotent
//! completion on objects `(A, p)` whose idempotent already splits in the base.

use serde::Serialize;

use crate::basecat::{Backend, Category};
use crate::error::{ensure, Error, Result};
use crate::karoubi::{Completion, FClass, FTriangle, KarMorphism, KarObject};
use crate::quiverrep::{image_subrep, iso_find, Conflation, Rep, RepMorphism, Search};

/// A factorization `p = section ∘ retraction` through `object` with
/// `retraction ∘ section = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitWitness {
    pub object: Rep,
    pub retraction: RepMorphism,
    pub section: RepMorphism,
}

impl SplitWitness {
    /// The idempotent `section ∘ retraction`.
    pub fn idempotent(&self) -> RepMorphism {
        &self.section * &self.retraction
    }

    /// Checks both identities against `p` and membership of the object.
    pub fn verify(&self, cat: &Category, p: &RepMorphism) -> Result<()> {
        ensure(self.retraction.src() == p.src() && self.section.dst() == p.dst(), || {
            "witness does not factor the idempotent's object".into()
        })?;
        ensure(self.retraction.dst() == &self.object && self.section.src() == &self.object, || {
            "witness maps do not pass through its object".into()
        })?;
        ensure(self.idempotent() == *p, || "c∘r ≠ p".into())?;
        ensure(
            &self.retraction * &self.section == RepMorphism::identity(&self.object),
            || "r∘c ≠ 1".into(),
        )?;
        ensure(cat.membership(&self.object), || {
            format!("splitting object {:?} is not in the category", self.object.dims())
        })
    }
}

/// An object of the weak completion with its certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakObject {
    underlying: KarObject,
    witness: SplitWitness,
}

impl WeakObject {
    pub fn new(cat: &Category, underlying: KarObject, witness: SplitWitness) -> Result<Self> {
        witness.verify(cat, underlying.idem())?;
        Ok(WeakObject { underlying, witness })
    }

    pub fn underlying(&self) -> &KarObject {
        &self.underlying
    }

    pub fn witness(&self) -> &SplitWitness {
        &self.witness
    }
}

/// An idempotent fill `g` together with its splitting through the middle of
/// a realization of the compressed class.
#[derive(Debug, Clone, Serialize)]
pub struct SplitFill {
    pub g: RepMorphism,
    pub witness: SplitWitness,
    /// The realization `X' -> Y -> Z'` of the class compressed to the splitting objects.
    pub compressed: Conflation,
}

/// Output of the extension-closure check.
#[derive(Debug, Clone, Serialize)]
pub struct ClosureReport {
    pub triangle: FTriangle,
    pub middle: WeakObject,
    pub fill: SplitFill,
    /// The middle of the canonical realization, certified by transport along
    /// the equivalence of triangles.
    pub canonical_middle: WeakObject,
}

/// A triangle of the weak completion with all three objects certified.
#[derive(Debug, Clone, Serialize)]
pub struct HatTriangle {
    pub triangle: FTriangle,
    pub sub: WeakObject,
    pub mid: WeakObject,
    pub quotient: WeakObject,
}

/// The kernel `(A, p − σρ)` of a retraction `ρ` with section `σ`.
#[derive(Debug, Clone, Serialize)]
pub struct RetractionKernel {
    pub kernel: WeakObject,
    pub inclusion: KarMorphism,
    pub projection: KarMorphism,
}

/// The weak idempotent completion of a base category.
#[derive(Debug, Clone)]
pub struct WeakCompletion {
    tilde: Completion,
}

impl WeakCompletion {
    pub fn new(base: Category) -> Self {
        WeakCompletion {
            tilde: Completion::new(base),
        }
    }

    pub fn completion(&self) -> &Completion {
        &self.tilde
    }

    pub fn base(&self) -> &Category {
        self.tilde.base()
    }

    /// A splitting of the idempotent `p` on `a` through an object of the base.
    pub fn splits_in_base(&self, a: &Rep, p: &RepMorphism) -> Result<Search<SplitWitness>> {
        let cat = self.base();
        if p.src() != a || p.dst() != a {
            return Err(Error::Shape("idempotent is not an endomorphism of the object".into()));
        }
        if !p.is_idempotent() {
            return Err(Error::NotIdempotent("p∘p ≠ p".into()));
        }
        if !cat.membership(a) {
            return Err(Error::NotMember(format!("dims {:?}", a.dims())));
        }
        let (image, inclusion, corestriction) = image_subrep(p);
        let witness = match cat.backend() {
            Backend::Ambient | Backend::Balanced { .. } => {
                if !cat.membership(&image) {
                    return Ok(Search::NotFound);
                }
                SplitWitness {
                    object: image,
                    retraction: corestriction,
                    section: inclusion,
                }
            }
            Backend::Formal { generators } => {
                let formal = match cat.formal_decomposition(&image) {
                    Search::Found(f) => f,
                    Search::NotFound => return Ok(Search::NotFound),
                    Search::Unknown => return Ok(Search::Unknown),
                };
                let object = formal.to_rep(generators, &cat.zero_object());
                let iso = match iso_find(&object, &image, cat.search()) {
                    Search::Found(i) => i,
                    Search::NotFound => return Ok(Search::NotFound),
                    Search::Unknown => return Ok(Search::Unknown),
                };
                SplitWitness {
                    retraction: &iso.inverse()? * &corestriction,
                    section: &inclusion * &iso,
                    object,
                }
            }
        };
        witness.verify(cat, p)?;
        Ok(Search::Found(witness))
    }

    pub fn weak_object(&self, k: &KarObject) -> Result<Search<WeakObject>> {
        Ok(self.splits_in_base(k.rep(), k.idem())?.map(|w| WeakObject {
            underlying: k.clone(),
            witness: w,
        }))
    }

    pub fn is_weak_object(&self, k: &KarObject) -> Result<bool> {
        match self.splits_in_base(k.rep(), k.idem())? {
            Search::Found(_) => Ok(true),
            Search::NotFound => Ok(false),
            Search::Unknown => Err(Error::Inconclusive(format!("splitting of an idempotent on {:?}", k.rep().dims()))),
        }
    }

    /// The object with its certificate, or an error if it is not weak.
    pub fn certify(&self, k: &KarObject) -> Result<WeakObject> {
        match self.weak_object(k)? {
            Search::Found(w) => Ok(w),
            Search::NotFound => Err(Error::NotMember(format!(
                "idempotent with image {:?} does not split",
                k.image_dims()
            ))),
            Search::Unknown => Err(Error::Inconclusive(format!("splitting of an idempotent on {:?}", k.rep().dims()))),
        }
    }

    /// An idempotent fill of `(e, f)` on `conf` which splits in the base.
    ///
    /// With `e = s₁r₁` and `f = s₂r₂`, the class `(r₁)_*(s₂)^*δ` is realized
    /// by `X' -> Y -> Z'`; fills `Y -> B` of `(s₁, s₂)` and `B -> Y` of
    /// `(r₁, r₂)` compose to an automorphism `t` of `Y`, and
    /// `g = (Y -> B)∘t⁻¹∘(B -> Y)`.
    pub fn split_idem_fill(&self, conf: &Conflation, e: &SplitWitness, f: &SplitWitness) -> Result<SplitFill> {
        let cat = self.base();
        let (ei, fi) = (e.idempotent(), f.idempotent());
        if ei.src() != conf.sub() || fi.src() != conf.quotient() {
            return Err(Error::Shape("idempotents do not act on the conflation ends".into()));
        }
        e.verify(cat, &ei)?;
        f.verify(cat, &fi)?;
        let delta = conf.cls();
        if !cat.same_class(&delta.pushforward(&ei), &delta.pullback(&fi)) {
            return Err(Error::Precondition("(e, f) is not a morphism of extensions".into()));
        }
        let compressed_cls = delta.pullback(&f.section).pushforward(&e.retraction);
        let compressed = cat.s_realize(&compressed_cls)?;
        let from_split = cat.lift_fill(&compressed, conf, &e.section, &f.section)?;
        let to_split = cat.lift_fill(conf, &compressed, &e.retraction, &f.retraction)?;
        let auto = &to_split * &from_split;
        ensure(auto.is_iso(), || "composite of the two fills is not invertible".into())?;
        let retraction = &auto.inverse()? * &to_split;
        let witness = SplitWitness {
            object: compressed.mid().clone(),
            retraction,
            section: from_split,
        };
        let g = witness.idempotent();
        ensure(g.is_idempotent(), || "g∘g ≠ g".into())?;
        ensure(&g * conf.x() == conf.x() * &ei, || "g∘x ≠ x∘e".into())?;
        ensure(conf.y() * &g == &fi * conf.y(), || "y∘g ≠ f∘y".into())?;
        witness.verify(cat, &g)?;
        Ok(SplitFill { g, witness, compressed })
    }

    /// Moves a certificate along an isomorphism of the completion.
    pub fn transport(&self, w: &WeakObject, iso: &KarMorphism) -> Result<WeakObject> {
        if iso.src() != &w.underlying {
            return Err(Error::Shape("isomorphism does not start at the object".into()));
        }
        let inv = self.tilde.inverse(iso)?;
        let witness = SplitWitness {
            object: w.witness.object.clone(),
            retraction: &w.witness.retraction * inv.map(),
            section: iso.map() * &w.witness.section,
        };
        WeakObject::new(self.base(), iso.dst().clone(), witness)
    }

    /// Realizes a class between weak objects through a split fill and
    /// certifies the middle, directly and through the canonical realization.
    pub fn weak_extension_closed_check(&self, phi: &FClass) -> Result<ClosureReport> {
        let sub = self.certify(phi.sub())?;
        let quotient = self.certify(phi.quotient())?;
        let conf = self.base().s_realize(phi.cocycle())?;
        let fill = self.split_idem_fill(&conf, &sub.witness, &quotient.witness)?;
        let triangle = self.tilde.r_realize_with(phi, &conf, &fill.g)?;
        let middle = WeakObject::new(self.base(), triangle.mid().clone(), fill.witness.clone())?;
        ensure(self.is_weak_object(triangle.mid())?, || {
            "image test disagrees with the split fill".into()
        })?;
        let canonical = self.tilde.r_realize(phi)?;
        let iso = match self.tilde.f_seq_equivalent(&triangle, &canonical) {
            Search::Found(i) => i,
            Search::NotFound => return Err(Error::Assertion("realizations are not equivalent".into())),
            Search::Unknown => return Err(Error::Inconclusive("equivalence of realizations".into())),
        };
        let canonical_middle = self.transport(&middle, &iso)?;
        Ok(ClosureReport {
            triangle,
            middle,
            fill,
            canonical_middle,
        })
    }

    /// The realization of a class between weak objects, inside the weak completion.
    pub fn hat_realize(&self, phi: &FClass) -> Result<HatTriangle> {
        let report = self.weak_extension_closed_check(phi)?;
        Ok(HatTriangle {
            sub: self.certify(phi.sub())?,
            quotient: self.certify(phi.quotient())?,
            mid: report.middle,
            triangle: report.triangle,
        })
    }

    /// The kernel of a retraction `rho` with section `sigma` between weak objects.
    pub fn retraction_kernel(&self, rho: &KarMorphism, sigma: &KarMorphism) -> Result<RetractionKernel> {
        if sigma.src() != rho.dst() || sigma.dst() != rho.src() {
            return Err(Error::Shape("section and retraction are not opposite".into()));
        }
        if rho * sigma != rho.dst().identity() {
            return Err(Error::Precondition("ρ∘σ ≠ 1".into()));
        }
        self.certify(rho.src())?;
        self.certify(rho.dst())?;
        let a = rho.src();
        let rest = a.idem() - &(sigma.map() * rho.map());
        let kernel = self.certify(&KarObject::new(a.rep().clone(), rest.clone())?)?;
        let inclusion = KarMorphism::new(kernel.underlying.clone(), a.clone(), rest.clone())?;
        let projection = KarMorphism::new(a.clone(), kernel.underlying.clone(), rest)?;
        ensure((rho * &inclusion).is_zero(), || "ρ does not kill the kernel".into())?;
        ensure(&projection * &inclusion == kernel.underlying.identity(), || {
            "kernel inclusion is not split".into()
        })?;
        ensure(&(&inclusion * &projection) + &(sigma * rho) == a.identity(), || {
            "kernel and section do not decompose the object".into()
        })?;
        Ok(RetractionKernel {
            kernel,
            inclusion,
            projection,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basecat::fixtures::*;
    use crate::quiverrep::{ext_direct_sum, ExtCocycle};

    fn ge(c: &Category) -> KarObject {
        KarObject::new(g(c), diag(&g(c), &[1, 0])).unwrap()
    }

    fn gf(c: &Category) -> KarObject {
        KarObject::new(g(c), diag(&g(c), &[0, 1])).unwrap()
    }

    #[test]
    fn splitting_verdicts() {
        let c = cat(2);
        let w = WeakCompletion::new(c.clone());
        let gg = g(&c);
        let one = w.splits_in_base(&gg, &RepMorphism::identity(&gg)).unwrap().found().unwrap();
        assert_eq!(one.object, gg);
        let zero = w.splits_in_base(&gg, &RepMorphism::zero(&gg, &gg)).unwrap().found().unwrap();
        assert!(zero.object.is_zero());
        assert!(matches!(w.splits_in_base(&gg, &diag(&gg, &[1, 0])).unwrap(), Search::NotFound));
        assert!(w.is_weak_object(&KarObject::trivial(&gg)).unwrap());
        assert!(!w.is_weak_object(&ge(&c)).unwrap());
        assert!(w.is_weak_object(&ge(&c).direct_sum(&gf(&c))).unwrap());
    }

    #[test]
    fn formal_backend_splitting() {
        let c = cat(2);
        let gens = Backend::Formal {
            generators: vec![s1(&c), s2(&c)],
        };
        let w = WeakCompletion::new(Category::new(c.quiver().clone(), c.field(), gens).unwrap());
        let split = w.splits_in_base(&g(&c), &diag(&g(&c), &[1, 0])).unwrap().found().unwrap();
        assert_eq!(split.object.dims(), &[1, 0]);
        let only_g = Backend::Formal {
            generators: vec![g(&c)],
        };
        let w = WeakCompletion::new(Category::new(c.quiver().clone(), c.field(), only_g).unwrap());
        assert!(matches!(w.splits_in_base(&g(&c), &diag(&g(&c), &[1, 0])).unwrap(), Search::NotFound));
        assert!(w.is_weak_object(&ge(&c).direct_sum(&gf(&c))).unwrap());
    }

    #[test]
    fn split_fill_identity_and_zero() {
        let c = cat(3);
        let w = WeakCompletion::new(c.clone());
        let conf = c.s_realize(&c.e_group(&g(&c), &g(&c)).basis_cocycles().remove(0)).unwrap();
        let one = |r: &Rep| w.splits_in_base(r, &RepMorphism::identity(r)).unwrap().found().unwrap();
        let fill = w.split_idem_fill(&conf, &one(conf.sub()), &one(conf.quotient())).unwrap();
        assert!(fill.g.is_iso());
        let split = c.s_realize(&ExtCocycle::zero(&g(&c), &g(&c))).unwrap();
        let zero = |r: &Rep| w.splits_in_base(r, &RepMorphism::zero(r, r)).unwrap().found().unwrap();
        let fill = w.split_idem_fill(&split, &zero(split.sub()), &zero(split.quotient())).unwrap();
        assert!(fill.g.is_zero());
        assert!(fill.witness.object.is_zero());
    }

    fn padded_generator(w: &WeakCompletion) -> FClass {
        let c = w.base();
        let gen = c.e_group(&g(c), &g(c)).basis_cocycles().remove(0);
        let delta = ext_direct_sum(&gen, &ExtCocycle::zero(&g(c), &g(c)));
        let quotient = ge(c).direct_sum(&gf(c));
        let sub = gf(c).direct_sum(&ge(c));
        w.completion().f_class(&quotient, &sub, &delta).unwrap()
    }

    #[test]
    fn split_fill_on_padded_generator() {
        let c = cat(2);
        let w = WeakCompletion::new(c.clone());
        let phi = padded_generator(&w);
        assert!(!phi.is_zero());
        let conf = c.s_realize(phi.cocycle()).unwrap();
        let e = w.certify(phi.sub()).unwrap();
        let f = w.certify(phi.quotient()).unwrap();
        let fill = w.split_idem_fill(&conf, e.witness(), f.witness()).unwrap();
        assert_eq!(fill.witness.object.dims(), &[2, 2]);
        assert!(!fill.compressed.cls().is_zero());
    }

    #[test]
    fn extension_closure() {
        let c = cat(2);
        let w = WeakCompletion::new(c.clone());
        let phi = padded_generator(&w);
        let report = w.weak_extension_closed_check(&phi).unwrap();
        assert_eq!(report.triangle.mid().image_dims(), vec![2, 2]);
        assert_eq!(report.canonical_middle.underlying(), w.completion().r_realize(&phi).unwrap().mid());
        let zero = w.completion().f_space(phi.quotient(), phi.sub()).zero();
        let hat = w.hat_realize(&zero).unwrap();
        assert_eq!(hat.mid.underlying().image_dims(), vec![2, 2]);
        let gen = c.e_group(&g(&c), &g(&c)).basis_cocycles().remove(0);
        let embedded = w.hat_realize(&w.completion().embed_class(&gen).unwrap()).unwrap();
        assert_eq!(embedded.mid.witness().object.dims(), &[2, 2]);
        assert!(embedded.mid.underlying().idem().is_iso());
    }

    #[test]
    fn retraction_kernels() {
        let c = cat(2);
        let w = WeakCompletion::new(c.clone());
        let k = w.completion();
        let whole = KarObject::trivial(&g(&c)).direct_sum(&ge(&c).direct_sum(&gf(&c)));
        let target = KarObject::trivial(&g(&c));
        let [incl, _, proj, _] = k.biproduct(&target, &ge(&c).direct_sum(&gf(&c)));
        let ker = w.retraction_kernel(&proj, &incl).unwrap();
        assert_eq!(ker.inclusion.dst(), &whole);
        assert_eq!(ker.kernel.underlying().image_dims(), vec![1, 1]);
        let bad = KarObject::trivial(&g(&c)).direct_sum(&ge(&c));
        let [i, _, p, _] = k.biproduct(&KarObject::trivial(&g(&c)), &ge(&c));
        assert!(w.retraction_kernel(&p, &i).is_err());
        let _ = bad;
    }
}

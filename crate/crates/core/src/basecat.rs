//! The base extriangulated category and the sequence calculus built on it.
//!
//! Two backends carry an exact structure: a dimension-constrained subcategory of
//! representations (all short exact sequences between members) and a formal
//! additive closure of a generator list with the split structure.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};
use crate::exactlin::PrimeField;
use crate::quiverrep::{
    biproduct, cocycle_to_ses, iso_find, quotient_rep, Conflation, ExtCocycle, ExtSpace, Quiver, Rep, RepMorphism,
    Search, SearchConfig,
};

/// Largest multiplicity tried when decomposing into formal generators.
pub const FORMAL_MULTIPLICITY_BOUND: usize = 4;

/// A homogeneous linear constraint `Σ w_v·dim_v = 0` on dimension vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimConstraint {
    pub weights: Vec<i64>,
}

impl DimConstraint {
    /// Weights `(1, -1, 0, …)`.
    pub fn balanced(vertices: usize) -> Self {
        let mut weights = vec![0; vertices];
        if vertices > 0 {
            weights[0] = 1;
        }
        if vertices > 1 {
            weights[1] = -1;
        }
        DimConstraint { weights }
    }

    pub fn value(&self, dims: &[usize]) -> i64 {
        self.weights.iter().zip(dims).map(|(w, &d)| w * d as i64).sum()
    }

    pub fn holds(&self, dims: &[usize]) -> bool {
        self.value(dims) == 0
    }
}

/// Multiplicities of the generators in a formal direct sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalObject {
    pub multiplicities: Vec<usize>,
}

impl FormalObject {
    pub fn to_rep(&self, generators: &[Rep], zero: &Rep) -> Rep {
        let mut out = zero.clone();
        for (g, &m) in generators.iter().zip(&self.multiplicities) {
            for _ in 0..m {
                out = out.direct_sum(g);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Backend {
    /// Every representation, all short exact sequences.
    Ambient,
    /// Representations satisfying a dimension constraint.
    Balanced { constraint: DimConstraint },
    /// Direct sums of generators, split sequences only.
    Formal { generators: Vec<Rep> },
}

/// A base category: a quiver, a field, a backend and the search bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Category {
    quiver: Arc<Quiver>,
    field: PrimeField,
    backend: Backend,
    search: SearchConfig,
}

/// A representation certified to belong to a category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CObject {
    rep: Rep,
}

impl CObject {
    pub fn rep(&self) -> &Rep {
        &self.rep
    }

    pub fn into_rep(self) -> Rep {
        self.rep
    }
}

/// Output of the octahedral construction on two composable inflations.
#[derive(Debug, Clone)]
pub struct Et4Base {
    /// `A -h-> C -h'-> E`, with `h = g∘f`.
    pub composite: Conflation,
    /// `D -d-> E -e-> F`.
    pub lower: Conflation,
    pub d: RepMorphism,
    pub e: RepMorphism,
}

impl Et4Base {
    pub fn e_obj(&self) -> &Rep {
        self.composite.quotient()
    }

    pub fn h(&self) -> &RepMorphism {
        self.composite.x()
    }

    pub fn h_prime(&self) -> &RepMorphism {
        self.composite.y()
    }
}

impl Category {
    pub fn new(quiver: Arc<Quiver>, field: PrimeField, backend: Backend) -> Result<Self> {
        match &backend {
            Backend::Ambient => {}
            Backend::Balanced { constraint } => {
                if constraint.weights.len() != quiver.vertices() {
                    return Err(Error::Shape(format!(
                        "{} weights for {} vertices",
                        constraint.weights.len(),
                        quiver.vertices()
                    )));
                }
            }
            Backend::Formal { generators } => {
                for g in generators {
                    if **g.quiver() != *quiver || g.field() != field {
                        return Err(Error::Shape("generator over a different quiver or field".into()));
                    }
                }
            }
        }
        Ok(Category {
            quiver,
            field,
            backend,
            search: SearchConfig::default(),
        })
    }

    pub fn with_search(mut self, search: SearchConfig) -> Self {
        self.search = search;
        self
    }

    /// Balanced category on the linearly oriented `A_n`.
    pub fn balanced_linear(n: usize, p: u32) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let constraint = DimConstraint::balanced(n);
        Category::new(Arc::new(Quiver::linear(n)), field, Backend::Balanced { constraint })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn search(&self) -> &SearchConfig {
        &self.search
    }

    pub fn is_formal(&self) -> bool {
        matches!(self.backend, Backend::Formal { .. })
    }

    pub fn zero_object(&self) -> Rep {
        Rep::zero(self.quiver.clone(), self.field)
    }

    /// Decomposition into generators, for the formal backend.
    pub fn formal_decomposition(&self, m: &Rep) -> Search<FormalObject> {
        let Backend::Formal { generators } = &self.backend else {
            return Search::NotFound;
        };
        let zero = self.zero_object();
        let mut inconclusive = false;
        let mut mult = vec![0usize; generators.len()];
        loop {
            let mut dims = vec![0usize; m.dims().len()];
            for (g, &k) in generators.iter().zip(&mult) {
                for (d, &gd) in dims.iter_mut().zip(g.dims()) {
                    *d += k * gd;
                }
            }
            if dims == m.dims() {
                let candidate = FormalObject {
                    multiplicities: mult.clone(),
                };
                match iso_find(&candidate.to_rep(generators, &zero), m, &self.search) {
                    Search::Found(_) => return Search::Found(candidate),
                    Search::Unknown => inconclusive = true,
                    Search::NotFound => {}
                }
            }
            let mut i = 0;
            loop {
                if i == mult.len() {
                    return if inconclusive { Search::Unknown } else { Search::NotFound };
                }
                mult[i] += 1;
                if mult[i] <= FORMAL_MULTIPLICITY_BOUND {
                    break;
                }
                mult[i] = 0;
                i += 1;
            }
        }
    }

    pub fn membership(&self, m: &Rep) -> bool {
        if **m.quiver() != *self.quiver || m.field() != self.field {
            return false;
        }
        match &self.backend {
            Backend::Ambient => true,
            Backend::Balanced { constraint } => constraint.holds(m.dims()),
            Backend::Formal { .. } => matches!(self.formal_decomposition(m), Search::Found(_)),
        }
    }

    pub fn object(&self, rep: Rep) -> Result<CObject> {
        if !self.membership(&rep) {
            return Err(Error::NotMember(format!("dims {:?}", rep.dims())));
        }
        Ok(CObject { rep })
    }

    /// The extension group 𝔼(c, a).
    pub fn e_group(&self, c: &Rep, a: &Rep) -> ExtSpace {
        if self.is_formal() {
            ExtSpace::split_structure(c, a)
        } else {
            ExtSpace::new(c, a)
        }
    }

    /// The canonical conflation realizing `delta`.
    pub fn s_realize(&self, delta: &ExtCocycle) -> Result<Conflation> {
        for end in [delta.sub(), delta.quotient()] {
            if !self.membership(end) {
                return Err(Error::NotMember(format!("end with dims {:?}", end.dims())));
            }
        }
        let conf = if self.is_formal() {
            cocycle_to_ses(&self.e_group(delta.quotient(), delta.sub()).reduce(delta))
        } else {
            cocycle_to_ses(delta)
        };
        ensure(self.membership(conf.mid()), || {
            format!("middle term {:?} left the category", conf.mid().dims())
        })?;
        Ok(conf)
    }

    /// Whether two conflations carry the same class in this category.
    pub fn same_class(&self, a: &ExtCocycle, b: &ExtCocycle) -> bool {
        self.e_group(a.quotient(), a.sub()).same_class(a, b)
    }

    /// An isomorphism `b` of middle terms compatible with identities on the ends.
    ///
    /// Any solution of `b∘x₁ = x₂`, `y₂∘b = y₁` is invertible, so a single
    /// solve decides equivalence.
    pub fn seq_equivalent(&self, s1: &Conflation, s2: &Conflation) -> Search<RepMorphism> {
        if s1.sub() != s2.sub() || s1.quotient() != s2.quotient() {
            return Search::NotFound;
        }
        let ia = RepMorphism::identity(s1.sub());
        let ic = RepMorphism::identity(s1.quotient());
        match crate::quiverrep::fill_between(s1, s2, &ia, &ic) {
            Ok(b) => {
                debug_assert!(b.is_iso());
                Search::Found(b)
            }
            Err(_) => Search::NotFound,
        }
    }

    /// The canonical middle map `b` completing `(a, c)` to a morphism of conflations.
    pub fn lift_fill(&self, from: &Conflation, to: &Conflation, a: &RepMorphism, c: &RepMorphism) -> Result<RepMorphism> {
        if a.src() != from.sub() || a.dst() != to.sub() || c.src() != from.quotient() || c.dst() != to.quotient() {
            return Err(Error::Shape("fill legs do not match the conflation ends".into()));
        }
        let space = self.e_group(from.quotient(), to.sub());
        if !space.same_class(&from.cls().pushforward(a), &to.cls().pullback(c)) {
            return Err(Error::Precondition("(a, c) is not a morphism of extensions".into()));
        }
        crate::quiverrep::fill_between(from, to, a, c)
    }

    /// The map `c` on quotients induced by `(a, b)`, with `a_*δ = c^*δ'` asserted.
    pub fn et3_complete(&self, from: &Conflation, to: &Conflation, a: &RepMorphism, b: &RepMorphism) -> Result<RepMorphism> {
        if b * from.x() != to.x() * a {
            return Err(Error::Precondition("left square does not commute".into()));
        }
        let sections = from.sections();
        let maps = (0..sections.len())
            .map(|v| &(to.y().map(v) * b.map(v)) * &sections[v])
            .collect();
        let c = RepMorphism::new(from.quotient().clone(), to.quotient().clone(), maps)
            .map_err(|e| Error::Assertion(format!("induced quotient map: {e}")))?;
        ensure(&c * from.y() == to.y() * b, || "right square does not commute".into())?;
        let space = self.e_group(from.quotient(), to.sub());
        ensure(
            space.same_class(&from.cls().pushforward(a), &to.cls().pullback(&c)),
            || "a_*δ differs from c^*δ'".into(),
        )?;
        Ok(c)
    }

    /// Octahedral completion of `A -f-> B -f'-> D` and `B -g-> C -g'-> F`.
    pub fn et4_base(&self, first: &Conflation, second: &Conflation) -> Result<Et4Base> {
        if first.mid() != second.sub() {
            return Err(Error::Precondition("conflations do not share the middle object".into()));
        }
        let (f, f_prime) = (first.x(), first.y());
        let (g, g_prime) = (second.x(), second.y());
        let h = g * f;
        let (e_obj, h_prime) = quotient_rep(second.mid(), &h)?;
        let composite = Conflation::from_maps(h.clone(), h_prime.clone())?;
        let f_sections = first.sections();
        let h_sections = composite.sections();
        let n = self.quiver.vertices();
        let d_maps = (0..n)
            .map(|v| &(h_prime.map(v) * g.map(v)) * &f_sections[v])
            .collect();
        let d = RepMorphism::new(first.quotient().clone(), e_obj.clone(), d_maps)
            .map_err(|e| Error::Assertion(format!("induced map d: {e}")))?;
        let e_maps = (0..n).map(|v| g_prime.map(v) * &h_sections[v]).collect();
        let e = RepMorphism::new(e_obj.clone(), second.quotient().clone(), e_maps)
            .map_err(|e| Error::Assertion(format!("induced map e: {e}")))?;
        let lower = Conflation::with_class(d.clone(), e.clone(), second.cls().pushforward(f_prime))
            .map_err(|e| Error::Assertion(format!("lower row does not realize f'_*δ': {e}")))?;
        ensure(self.membership(&e_obj), || "octahedral object left the category".into())?;
        ensure(&d * f_prime == &h_prime * g, || "d∘f' ≠ h'∘g".into())?;
        ensure(&e * &h_prime == *g_prime, || "e∘h' ≠ g'".into())?;
        let delta2 = composite.cls();
        ensure(
            self.same_class(&delta2.pullback(&d), first.cls()),
            || "d^*δ'' ≠ δ".into(),
        )?;
        ensure(
            self.same_class(&delta2.pushforward(f), &second.cls().pullback(&e)),
            || "f_*δ'' ≠ e^*δ'".into(),
        )?;
        Ok(Et4Base { composite, lower, d, e })
    }

    /// For `A -x-> B -y-> C` with class δ and `f: A -> D`: a map `g: B -> E` from
    /// the realization `D -d-> E -e-> C` of `f_*δ`, and the conflation
    /// `A -(-f, x)-> D⊕B -(d g)-> E` with class `e^*δ`.
    pub fn mapping_cone_base(&self, conf: &Conflation, f: &RepMorphism) -> Result<(Conflation, RepMorphism, Conflation)> {
        let pushed = self.s_realize(&conf.cls().pushforward(f))?;
        let g = self.lift_fill(conf, &pushed, f, &RepMorphism::identity(conf.quotient()))?;
        let infl = RepMorphism::column(&[&-f, conf.x()]);
        let defl = RepMorphism::row(&[pushed.x(), &g]);
        let cone = Conflation::with_class(infl, defl, conf.cls().pullback(pushed.y()))
            .map_err(|e| Error::Assertion(format!("mapping cone: {e}")))?;
        Ok((pushed, g, cone))
    }

    /// Cancels the summand `a` from `X⊕A -[[x,u],[v,1]]-> Y⊕A -> Z`.
    ///
    /// Returns `X -(x - u∘v)-> Y -> Z` with the class pushed along the projection to `X`.
    pub fn summand_cancel(&self, conf: &Conflation, x_obj: &Rep, y_obj: &Rep, a_obj: &Rep) -> Result<Conflation> {
        if conf.sub() != &x_obj.direct_sum(a_obj) || conf.mid() != &y_obj.direct_sum(a_obj) {
            return Err(Error::Shape("conflation is not of the form X⊕A -> Y⊕A -> Z".into()));
        }
        let [ix, ia, px, _] = biproduct(x_obj, a_obj);
        let [iy, _, py, pa] = biproduct(y_obj, a_obj);
        let infl = conf.x();
        let x = &(&py * infl) * &ix;
        let u = &(&py * infl) * &ia;
        let v = &(&pa * infl) * &ix;
        let one = &(&pa * infl) * &ia;
        if one != RepMorphism::identity(a_obj) {
            return Err(Error::Precondition("lower-right block is not the identity".into()));
        }
        let t = &x - &(&u * &v);
        let y = conf.y() * &iy;
        Conflation::with_class(t, y, conf.cls().pushforward(&px))
            .map_err(|e| Error::Assertion(format!("cancelled row: {e}")))
    }

    /// Transports a conflation along isomorphisms of its three terms.
    ///
    /// The result has class `f_*(h⁻¹)^*δ`.
    pub fn transport_along_isos(
        &self,
        conf: &Conflation,
        f: &RepMorphism,
        g: &RepMorphism,
        h: &RepMorphism,
    ) -> Result<Conflation> {
        let (fi, gi, hi) = (f.inverse()?, g.inverse()?, h.inverse()?);
        let x = &(g * conf.x()) * &fi;
        let y = &(h * conf.y()) * &gi;
        Conflation::with_class(x, y, conf.cls().pullback(&hi).pushforward(f))
            .map_err(|e| Error::Assertion(format!("transported conflation: {e}")))
    }

    /// The same category over the opposite quiver.
    pub fn opposite(&self) -> Category {
        let backend = match &self.backend {
            Backend::Formal { generators } => Backend::Formal {
                generators: generators.iter().map(Rep::opposite).collect(),
            },
            other => other.clone(),
        };
        Category {
            quiver: Arc::new(self.quiver.opposite()),
            field: self.field,
            backend,
            search: self.search,
        }
    }
}

/// Data that can be moved to the opposite quiver; moving twice is the identity.
pub trait Opposite {
    fn opposite(&self) -> Self;
}

impl Opposite for Rep {
    fn opposite(&self) -> Self {
        Rep::opposite(self)
    }
}

impl Opposite for RepMorphism {
    fn opposite(&self) -> Self {
        RepMorphism::opposite(self)
    }
}

impl Opposite for ExtCocycle {
    fn opposite(&self) -> Self {
        ExtCocycle::opposite(self)
    }
}

impl Opposite for Conflation {
    fn opposite(&self) -> Self {
        Conflation::opposite(self)
    }
}

impl Opposite for Category {
    fn opposite(&self) -> Self {
        Category::opposite(self)
    }
}

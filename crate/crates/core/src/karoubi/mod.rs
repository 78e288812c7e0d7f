//! The idempotent completion: objects `(A, p)`, the restricted extension
//! bifunctor and its realization by idempotent fills.

mod axioms;

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::basecat::Category;
use crate::error::{ensure, Error, Result};
use crate::exactlin::{Matrix, PrimeField};
use crate::quiverrep::system::{solve_in_span, span_kernel};
use crate::quiverrep::{
    biproduct, ext_direct_sum, search_affine, Conflation, ExtCocycle, ExtSpace, Rep, RepMorphism, Search,
};

pub use axioms::{Decomposition, Et4Tilde, ExactnessReport};

/// An object `(A, p)` with `p` an idempotent endomorphism of `A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "KarObjectData")]
pub struct KarObject {
    rep: Rep,
    idem: RepMorphism,
}

#[derive(Deserialize)]
struct KarObjectData {
    rep: Rep,
    idem: RepMorphism,
}

impl TryFrom<KarObjectData> for KarObject {
    type Error = Error;
    fn try_from(d: KarObjectData) -> Result<Self> {
        KarObject::new(d.rep, d.idem)
    }
}

impl KarObject {
    pub fn new(rep: Rep, idem: RepMorphism) -> Result<Self> {
        if idem.src() != &rep || idem.dst() != &rep {
            return Err(Error::Shape("idempotent is not an endomorphism of the object".into()));
        }
        if let Some(a) = idem.first_noncommuting_arrow() {
            return Err(Error::NotCommuting(format!("idempotent fails at arrow {a}")));
        }
        if !idem.is_idempotent() {
            return Err(Error::NotIdempotent("p∘p ≠ p".into()));
        }
        Ok(KarObject { rep, idem })
    }

    /// The embedded object `(A, 1)`.
    pub fn trivial(rep: &Rep) -> Self {
        KarObject {
            rep: rep.clone(),
            idem: RepMorphism::identity(rep),
        }
    }

    pub fn rep(&self) -> &Rep {
        &self.rep
    }

    pub fn idem(&self) -> &RepMorphism {
        &self.idem
    }

    /// Identity morphism, which is the idempotent itself.
    pub fn identity(&self) -> KarMorphism {
        KarMorphism {
            src: self.clone(),
            dst: self.clone(),
            map: self.idem.clone(),
        }
    }

    /// Whether the object is isomorphic to zero.
    pub fn is_zero(&self) -> bool {
        self.idem.is_zero()
    }

    pub fn direct_sum(&self, other: &KarObject) -> KarObject {
        KarObject {
            rep: self.rep.direct_sum(&other.rep),
            idem: self.idem.direct_sum(&other.idem),
        }
    }

    pub fn opposite(&self) -> KarObject {
        KarObject {
            rep: self.rep.opposite(),
            idem: self.idem.opposite(),
        }
    }

    /// Vertexwise ranks of the idempotent.
    pub fn image_dims(&self) -> Vec<usize> {
        self.idem.maps().iter().map(Matrix::rank).collect()
    }
}

/// A morphism `σ: (A, p) -> (B, q)` with `σ∘p = σ = q∘σ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "KarMorphismData")]
pub struct KarMorphism {
    src: KarObject,
    dst: KarObject,
    map: RepMorphism,
}

#[derive(Deserialize)]
struct KarMorphismData {
    src: KarObject,
    dst: KarObject,
    map: RepMorphism,
}

impl TryFrom<KarMorphismData> for KarMorphism {
    type Error = Error;
    fn try_from(d: KarMorphismData) -> Result<Self> {
        KarMorphism::new(d.src, d.dst, d.map)
    }
}

impl KarMorphism {
    pub fn new(src: KarObject, dst: KarObject, map: RepMorphism) -> Result<Self> {
        if map.src() != &src.rep || map.dst() != &dst.rep {
            return Err(Error::Shape("morphism does not join the underlying objects".into()));
        }
        if let Some(a) = map.first_noncommuting_arrow() {
            return Err(Error::NotCommuting(format!("square at arrow {a}")));
        }
        if &map * &src.idem != map || &dst.idem * &map != map {
            return Err(Error::Precondition("morphism is not compatible with the idempotents".into()));
        }
        Ok(KarMorphism { src, dst, map })
    }

    pub(crate) fn unchecked(src: KarObject, dst: KarObject, map: RepMorphism) -> Self {
        KarMorphism { src, dst, map }
    }

    /// The embedded morphism between `(A, 1)` and `(B, 1)`.
    pub fn trivial(map: &RepMorphism) -> Self {
        KarMorphism {
            src: KarObject::trivial(map.src()),
            dst: KarObject::trivial(map.dst()),
            map: map.clone(),
        }
    }

    pub fn zero(src: &KarObject, dst: &KarObject) -> Self {
        KarMorphism {
            src: src.clone(),
            dst: dst.clone(),
            map: RepMorphism::zero(&src.rep, &dst.rep),
        }
    }

    pub fn src(&self) -> &KarObject {
        &self.src
    }

    pub fn dst(&self) -> &KarObject {
        &self.dst
    }

    pub fn map(&self) -> &RepMorphism {
        &self.map
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }

    pub fn scale(&self, k: u32) -> KarMorphism {
        KarMorphism {
            map: self.map.scale(k),
            ..self.clone()
        }
    }

    /// Invertibility in the completion: vertexwise the map is a bijection
    /// from the image of `p` onto the image of `q`.
    pub fn is_iso(&self) -> bool {
        (0..self.map.maps().len()).all(|v| {
            let r = self.map.map(v).rank();
            r == self.src.idem.map(v).rank() && r == self.dst.idem.map(v).rank()
        })
    }

    /// The map `src -> parts[0].dst ⊕ …` with the given components.
    pub fn column(parts: &[&KarMorphism]) -> KarMorphism {
        let maps: Vec<&RepMorphism> = parts.iter().map(|m| &m.map).collect();
        let dst = parts[1..].iter().fold(parts[0].dst.clone(), |acc, m| acc.direct_sum(&m.dst));
        KarMorphism::unchecked(parts[0].src.clone(), dst, RepMorphism::column(&maps))
    }

    /// The map `parts[0].src ⊕ … -> dst` with the given components.
    pub fn row(parts: &[&KarMorphism]) -> KarMorphism {
        let maps: Vec<&RepMorphism> = parts.iter().map(|m| &m.map).collect();
        let src = parts[1..].iter().fold(parts[0].src.clone(), |acc, m| acc.direct_sum(&m.src));
        KarMorphism::unchecked(src, parts[0].dst.clone(), RepMorphism::row(&maps))
    }

    pub fn direct_sum(&self, other: &KarMorphism) -> KarMorphism {
        KarMorphism::unchecked(
            self.src.direct_sum(&other.src),
            self.dst.direct_sum(&other.dst),
            self.map.direct_sum(&other.map),
        )
    }

    pub fn opposite(&self) -> KarMorphism {
        KarMorphism::unchecked(self.dst.opposite(), self.src.opposite(), self.map.opposite())
    }
}

impl<'a> Mul<&'a KarMorphism> for &'a KarMorphism {
    type Output = KarMorphism;
    fn mul(self, rhs: &'a KarMorphism) -> KarMorphism {
        debug_assert!(rhs.dst == self.src, "composing non-composable morphisms");
        KarMorphism::unchecked(rhs.src.clone(), self.dst.clone(), &self.map * &rhs.map)
    }
}

impl<'a> Add<&'a KarMorphism> for &'a KarMorphism {
    type Output = KarMorphism;
    fn add(self, rhs: &'a KarMorphism) -> KarMorphism {
        KarMorphism::unchecked(self.src.clone(), self.dst.clone(), &self.map + &rhs.map)
    }
}

impl<'a> Sub<&'a KarMorphism> for &'a KarMorphism {
    type Output = KarMorphism;
    fn sub(self, rhs: &'a KarMorphism) -> KarMorphism {
        KarMorphism::unchecked(self.src.clone(), self.dst.clone(), &self.map - &rhs.map)
    }
}

impl Neg for &KarMorphism {
    type Output = KarMorphism;
    fn neg(self) -> KarMorphism {
        KarMorphism::unchecked(self.src.clone(), self.dst.clone(), -&self.map)
    }
}

/// An element of 𝔽((Z,p),(X,q)), stored as its canonical coset representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FClass {
    quotient: KarObject,
    sub: KarObject,
    cocycle: ExtCocycle,
}

impl FClass {
    pub fn quotient(&self) -> &KarObject {
        &self.quotient
    }

    pub fn sub(&self) -> &KarObject {
        &self.sub
    }

    pub fn cocycle(&self) -> &ExtCocycle {
        &self.cocycle
    }

    pub fn is_zero(&self) -> bool {
        self.cocycle.is_zero()
    }
}

/// The subgroup `q_*p^*𝔼(Z, X)` of `𝔼(Z, X)`.
#[derive(Debug, Clone)]
pub struct FSpace {
    quotient: KarObject,
    sub: KarObject,
    ambient: ExtSpace,
    projector: Matrix,
    image: Matrix,
}

impl FSpace {
    pub fn quotient(&self) -> &KarObject {
        &self.quotient
    }

    pub fn sub(&self) -> &KarObject {
        &self.sub
    }

    pub fn ambient(&self) -> &ExtSpace {
        &self.ambient
    }

    /// Matrix of `δ ↦ q_*p^*δ` on ambient class coordinates.
    pub fn projector(&self) -> &Matrix {
        &self.projector
    }

    /// Columns span the subgroup inside the ambient class coordinates.
    pub fn image_basis(&self) -> &Matrix {
        &self.image
    }

    pub fn dim(&self) -> usize {
        self.image.cols()
    }

    fn field(&self) -> PrimeField {
        self.quotient.rep.field()
    }

    pub fn contains(&self, xi: &ExtCocycle) -> bool {
        let c = self.ambient.coords(xi);
        let col = Matrix::column_vector(self.field(), &c);
        (&self.projector * &col).data() == c.as_slice()
    }

    /// The class of `xi`, which must lie in the subgroup.
    pub fn class(&self, xi: &ExtCocycle) -> Result<FClass> {
        if xi.quotient() != &self.quotient.rep || xi.sub() != &self.sub.rep {
            return Err(Error::Shape("cocycle ends differ from the space".into()));
        }
        if !self.contains(xi) {
            return Err(Error::NotMember("class is not fixed by the idempotents".into()));
        }
        Ok(self.wrap(self.ambient.reduce(xi)))
    }

    fn wrap(&self, cocycle: ExtCocycle) -> FClass {
        FClass {
            quotient: self.quotient.clone(),
            sub: self.sub.clone(),
            cocycle,
        }
    }

    /// `q_*p^*xi` for any cocycle `xi` of the ambient group.
    pub fn project(&self, xi: &ExtCocycle) -> FClass {
        let moved = xi.pullback(&self.quotient.idem).pushforward(&self.sub.idem);
        self.wrap(self.ambient.reduce(&moved))
    }

    pub fn basis(&self) -> Vec<FClass> {
        (0..self.dim())
            .map(|j| self.wrap(self.ambient.from_coords(&self.image.column(j))))
            .collect()
    }

    /// Combination of the basis with the given coefficients.
    pub fn element(&self, coeffs: &[u32]) -> FClass {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count");
        let c = &self.image * &Matrix::column_vector(self.field(), coeffs);
        self.wrap(self.ambient.from_coords(c.data()))
    }

    /// Coefficients of a member in the basis.
    pub fn express(&self, cls: &FClass) -> Option<Vec<u32>> {
        let columns: Vec<Vec<u32>> = (0..self.dim()).map(|j| self.image.column(j)).collect();
        solve_in_span(self.field(), &columns, &self.ambient.coords(&cls.cocycle))
    }

    pub fn zero(&self) -> FClass {
        self.wrap(ExtCocycle::zero(&self.quotient.rep, &self.sub.rep))
    }
}

/// A realized triangle `(X,q) -u-> (Y,r) -v-> (Z,p)` with its class.
///
/// `base` is the underlying conflation when the triangle is in standard form
/// (`u = x∘q`, `v = p∘y` with `r∘x = x∘q` and `y∘r = p∘y`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FTriangle {
    pub u: KarMorphism,
    pub v: KarMorphism,
    pub cls: FClass,
    pub base: Option<Conflation>,
}

impl FTriangle {
    pub fn sub(&self) -> &KarObject {
        &self.u.src
    }

    pub fn mid(&self) -> &KarObject {
        &self.u.dst
    }

    pub fn quotient(&self) -> &KarObject {
        &self.v.dst
    }

    pub fn base(&self) -> Result<&Conflation> {
        self.base
            .as_ref()
            .ok_or_else(|| Error::Precondition("triangle is not in standard form".into()))
    }

    /// Whether `u = u₁∘q` and `v = p∘v₁` for the underlying maps.
    pub fn is_standard_form(&self) -> bool {
        let Some(conf) = &self.base else {
            return false;
        };
        let (q, r, p) = (self.sub().idem(), self.mid().idem(), self.quotient().idem());
        self.u.map == conf.x() * q
            && self.v.map == p * conf.y()
            && r * conf.x() == conf.x() * q
            && conf.y() * r == p * conf.y()
    }
}

/// Solves `Σ c_i·columns[i] = rhs`, returning a particular solution and the
/// homogeneous directions.
pub(crate) fn solve_affine(
    field: PrimeField,
    columns: &[Vec<u32>],
    rhs: &[u32],
) -> Option<(Vec<u32>, Vec<Vec<u32>>)> {
    let base = solve_in_span(field, columns, rhs)?;
    Some((base, span_kernel(field, rhs.len(), columns)))
}

pub(crate) fn combine(field: PrimeField, basis: &[KarMorphism], coeffs: &[u32], src: &KarObject, dst: &KarObject) -> KarMorphism {
    let mut acc = RepMorphism::zero(&src.rep, &dst.rep);
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = &acc + &b.map.scale(c % field.p());
        }
    }
    KarMorphism::unchecked(src.clone(), dst.clone(), acc)
}

/// The idempotent completion of a base category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    base: Category,
}

impl Completion {
    pub fn new(base: Category) -> Self {
        Completion { base }
    }

    pub fn base(&self) -> &Category {
        &self.base
    }

    pub fn field(&self) -> PrimeField {
        self.base.field()
    }

    pub fn opposite(&self) -> Completion {
        Completion {
            base: self.base.opposite(),
        }
    }

    pub fn zero_object(&self) -> KarObject {
        KarObject::trivial(&self.base.zero_object())
    }

    /// Canonical basis of `{σ : σ∘p = σ = q∘σ}` inside Hom(A, B).
    pub fn hom_basis(&self, a: &KarObject, b: &KarObject) -> Vec<KarMorphism> {
        let f = self.field();
        let mut sys = crate::quiverrep::system::MapSystem::new(f, a.rep.dims(), b.rep.dims());
        sys.commuting(&a.rep, &b.rep);
        for v in 0..a.rep.dims().len() {
            let id_a = Matrix::identity(f, a.rep.dim(v));
            let id_b = Matrix::identity(f, b.rep.dim(v));
            let right = a.idem.map(v) - &id_a;
            let left = b.idem.map(v) - &id_b;
            sys.equation(&[(v, &id_b, &right)]);
            sys.equation(&[(v, &left, &id_a)]);
        }
        sys.kernel()
            .into_iter()
            .map(|maps| KarMorphism::unchecked(a.clone(), b.clone(), RepMorphism::from_parts(a.rep.clone(), b.rep.clone(), maps).expect("kernel shapes")))
            .collect()
    }

    /// The two-sided inverse of an isomorphism in the completion.
    pub fn inverse(&self, s: &KarMorphism) -> Result<KarMorphism> {
        let basis = self.hom_basis(&s.dst, &s.src);
        let columns: Vec<Vec<u32>> = basis
            .iter()
            .map(|b| {
                let mut c = (&b.map * &s.map).to_vec();
                c.extend((&s.map * &b.map).to_vec());
                c
            })
            .collect();
        let mut rhs = s.src.idem.to_vec();
        rhs.extend(s.dst.idem.to_vec());
        let coeffs = solve_in_span(self.field(), &columns, &rhs)
            .ok_or_else(|| Error::Precondition("morphism is not invertible in the completion".into()))?;
        Ok(combine(self.field(), &basis, &coeffs, &s.dst, &s.src))
    }

    /// The subgroup 𝔽((Z,p),(X,q)).
    pub fn f_space(&self, zp: &KarObject, xq: &KarObject) -> FSpace {
        let ambient = self.base.e_group(&zp.rep, &xq.rep);
        let f = self.field();
        let d = ambient.dim();
        let mut projector = Matrix::zeros(f, d, d);
        for (j, b) in ambient.basis_cocycles().iter().enumerate() {
            let moved = b.pullback(&zp.idem).pushforward(&xq.idem);
            for (i, c) in ambient.coords(&moved).into_iter().enumerate() {
                projector.set(i, j, c);
            }
        }
        let image = projector.column_space_basis();
        FSpace {
            quotient: zp.clone(),
            sub: xq.clone(),
            ambient,
            projector,
            image,
        }
    }

    /// The class of `xi` in 𝔽((Z,p),(X,q)).
    pub fn f_class(&self, zp: &KarObject, xq: &KarObject, xi: &ExtCocycle) -> Result<FClass> {
        self.f_space(zp, xq).class(xi)
    }

    pub fn same_class(&self, a: &FClass, b: &FClass) -> bool {
        a.quotient == b.quotient && a.sub == b.sub && a.cocycle == b.cocycle
    }

    /// `β_*α^*ε`, asserted to land in the completion's extension group.
    pub fn f_act(&self, alpha: &KarMorphism, beta: &KarMorphism, eps: &FClass) -> Result<FClass> {
        if alpha.dst != eps.quotient || beta.src != eps.sub {
            return Err(Error::Shape("morphisms do not meet the class".into()));
        }
        let moved = eps.cocycle.pullback(&alpha.map).pushforward(&beta.map);
        self.f_class(&alpha.src, &beta.dst, &moved)
            .map_err(|e| Error::Assertion(format!("acted class left the subgroup: {e}")))
    }

    pub fn pushforward(&self, eps: &FClass, beta: &KarMorphism) -> Result<FClass> {
        self.f_act(&eps.quotient.identity(), beta, eps)
    }

    pub fn pullback(&self, eps: &FClass, alpha: &KarMorphism) -> Result<FClass> {
        self.f_act(alpha, &eps.sub.identity(), eps)
    }

    pub fn add(&self, a: &FClass, b: &FClass) -> Result<FClass> {
        self.f_class(&a.quotient, &a.sub, &a.cocycle.add(&b.cocycle))
    }

    pub fn direct_sum_class(&self, a: &FClass, b: &FClass) -> Result<FClass> {
        self.f_class(
            &a.quotient.direct_sum(&b.quotient),
            &a.sub.direct_sum(&b.sub),
            &ext_direct_sum(&a.cocycle, &b.cocycle),
        )
    }

    /// The idempotent fill `g = i + h − 2ih`, `h = i² − i`, from a fill `i` of `(e, f)`.
    pub fn idem_fill_from(&self, conf: &Conflation, e: &RepMorphism, f: &RepMorphism, i: &RepMorphism) -> Result<RepMorphism> {
        if i * conf.x() != conf.x() * e || conf.y() * i != f * conf.y() {
            return Err(Error::Precondition("middle map is not a fill of (e, f)".into()));
        }
        let h = &(i * i) - i;
        let g = &(i + &h) - &(i * &h).scale(2);
        ensure(g.is_idempotent(), || "g∘g ≠ g".into())?;
        ensure(&g * conf.x() == conf.x() * e, || "g∘x ≠ x∘e".into())?;
        ensure(conf.y() * &g == f * conf.y(), || "y∘g ≠ f∘y".into())?;
        Ok(g)
    }

    /// An idempotent middle map realizing the idempotent morphism `(e, f)` of `conf`'s class.
    pub fn idem_fill(&self, conf: &Conflation, e: &RepMorphism, f: &RepMorphism) -> Result<RepMorphism> {
        if !e.is_idempotent() || !f.is_idempotent() {
            return Err(Error::NotIdempotent("fill ends must be idempotent".into()));
        }
        let i = self.base.lift_fill(conf, conf, e, f)?;
        self.idem_fill_from(conf, e, f, &i)
    }

    /// Given idempotents `e` on the sub and `i` on the middle with `i∘x = x∘e`,
    /// an idempotent `g` on the quotient with `g∘y = y∘i` and `g^*δ = e_*δ`.
    pub fn idem_fill_codomain(&self, conf: &Conflation, e: &RepMorphism, i: &RepMorphism) -> Result<RepMorphism> {
        let f0 = self.base.et3_complete(conf, conf, e, i)?;
        let h = &(&f0 * &f0) - &f0;
        let g = &(&f0 + &h) - &(&f0 * &h).scale(2);
        ensure(g.is_idempotent(), || "g∘g ≠ g".into())?;
        ensure(&g * conf.y() == conf.y() * i, || "g∘y ≠ y∘i".into())?;
        ensure(
            self.base.same_class(&conf.cls().pullback(&g), &conf.cls().pushforward(e)),
            || "g^*δ ≠ e_*δ".into(),
        )?;
        Ok(g)
    }

    /// The realization of `phi` through a given base conflation and fill of `(q, p)`.
    pub fn r_realize_with(&self, phi: &FClass, conf: &Conflation, fill: &RepMorphism) -> Result<FTriangle> {
        if conf.sub() != phi.sub.rep() || conf.quotient() != phi.quotient.rep() {
            return Err(Error::Shape("conflation ends differ from the class".into()));
        }
        if !self.base.same_class(conf.cls(), &phi.cocycle) {
            return Err(Error::Precondition("conflation does not realize the class".into()));
        }
        let (q, p) = (&phi.sub.idem, &phi.quotient.idem);
        let r = self.idem_fill_from(conf, q, p, fill)?;
        let mid = KarObject {
            rep: conf.mid().clone(),
            idem: r,
        };
        let u = KarMorphism::new(phi.sub.clone(), mid.clone(), conf.x() * q)?;
        let v = KarMorphism::new(mid, phi.quotient.clone(), p * conf.y())?;
        Ok(FTriangle {
            u,
            v,
            cls: phi.clone(),
            base: Some(conf.clone()),
        })
    }

    /// The canonical realization `(X,q) -x∘q-> (Y,r) -p∘y-> (Z,p)`.
    pub fn r_realize(&self, phi: &FClass) -> Result<FTriangle> {
        let conf = self.base.s_realize(&phi.cocycle)?;
        let i = self.base.lift_fill(&conf, &conf, &phi.sub.idem, &phi.quotient.idem)?;
        self.r_realize_with(phi, &conf, &i)
    }

    /// An isomorphism `h` of middle objects with `h∘u₁ = u₂` and `v₂∘h = v₁`.
    pub fn f_seq_equivalent(&self, t1: &FTriangle, t2: &FTriangle) -> Search<KarMorphism> {
        if t1.sub() != t2.sub() || t1.quotient() != t2.quotient() {
            return Search::NotFound;
        }
        let basis = self.hom_basis(t1.mid(), t2.mid());
        let columns: Vec<Vec<u32>> = basis
            .iter()
            .map(|b| {
                let mut c = (&b.map * &t1.u.map).to_vec();
                c.extend((&t2.v.map * &b.map).to_vec());
                c
            })
            .collect();
        let mut rhs = t2.u.map.to_vec();
        rhs.extend(t1.v.map.to_vec());
        let f = self.field();
        let Some((base, directions)) = solve_affine(f, &columns, &rhs) else {
            return Search::NotFound;
        };
        let build = |c: &[u32]| combine(f, &basis, c, t1.mid(), t2.mid());
        search_affine(f, &base, &directions, self.base.search(), |c| build(c).is_iso()).map(|c| build(&c))
    }

    /// The triangle moved to the opposite category.
    pub fn opposite_triangle(&self, t: &FTriangle) -> Result<FTriangle> {
        let op = self.opposite();
        let cls = op.f_class(&t.cls.sub.opposite(), &t.cls.quotient.opposite(), &t.cls.cocycle.opposite())?;
        Ok(FTriangle {
            u: t.v.opposite(),
            v: t.u.opposite(),
            cls,
            base: t.base.as_ref().map(Conflation::opposite),
        })
    }

    pub fn opposite_class(&self, c: &FClass) -> Result<FClass> {
        self.opposite()
            .f_class(&c.sub.opposite(), &c.quotient.opposite(), &c.cocycle.opposite())
    }

    /// Direct sum of triangles, with the class `δ ⊕ δ'`.
    pub fn direct_sum_triangle(&self, t1: &FTriangle, t2: &FTriangle) -> Result<FTriangle> {
        let base = match (&t1.base, &t2.base) {
            (Some(a), Some(b)) => Some(a.direct_sum(b)),
            _ => None,
        };
        Ok(FTriangle {
            u: t1.u.direct_sum(&t2.u),
            v: t1.v.direct_sum(&t2.v),
            cls: self.direct_sum_class(&t1.cls, &t2.cls)?,
            base,
        })
    }

    /// Inclusions and projections of `a ⊕ b` in the completion.
    pub fn biproduct(&self, a: &KarObject, b: &KarObject) -> [KarMorphism; 4] {
        let sum = a.direct_sum(b);
        let [i1, i2, p1, p2] = biproduct(&a.rep, &b.rep);
        [
            KarMorphism::unchecked(a.clone(), sum.clone(), &i1 * &a.idem),
            KarMorphism::unchecked(b.clone(), sum.clone(), &i2 * &b.idem),
            KarMorphism::unchecked(sum.clone(), a.clone(), &a.idem * &p1),
            KarMorphism::unchecked(sum, b.clone(), &b.idem * &p2),
        ]
    }

    /// The embedding of the base category.
    pub fn embed_class(&self, delta: &ExtCocycle) -> Result<FClass> {
        self.f_class(
            &KarObject::trivial(delta.quotient()),
            &KarObject::trivial(delta.sub()),
            delta,
        )
    }

    /// The base conflation viewed as a triangle between embedded objects.
    pub fn embed_conflation(&self, conf: &Conflation) -> Result<FTriangle> {
        Ok(FTriangle {
            u: KarMorphism::trivial(conf.x()),
            v: KarMorphism::trivial(conf.y()),
            cls: self.embed_class(conf.cls())?,
            base: Some(conf.clone()),
        })
    }
}

/// Canonical basis of Hom((A,p),(B,q)) over the full representation category.
pub fn kar_hom_basis(a: &KarObject, b: &KarObject) -> Vec<KarMorphism> {
    let cat = Category::new(a.rep.quiver().clone(), a.rep.field(), crate::basecat::Backend::Ambient)
        .expect("ambient category");
    Completion::new(cat).hom_basis(a, b)
}

/// 𝔽((Z,p),(X,q)) over the full representation category.
pub fn f_space(zp: &KarObject, xq: &KarObject) -> FSpace {
    let cat = Category::new(zp.rep.quiver().clone(), zp.rep.field(), crate::basecat::Backend::Ambient)
        .expect("ambient category");
    Completion::new(cat).f_space(zp, xq)
}

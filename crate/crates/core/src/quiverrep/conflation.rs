//! Short exact sequences and their classes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::Matrix;

use super::{ExtCocycle, ExtSpace, Rep, RepMorphism};

/// A short exact sequence `A -x-> B -y-> C` with a class in Ext¹(C, A).
///
/// Alongside the maps it keeps a *frame*: an isomorphism from the canonical
/// middle term of `split` onto `B`, under which `x` and `y` become the
/// standard inclusion and projection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConflationData", into = "ConflationData")]
pub struct Conflation {
    x: RepMorphism,
    y: RepMorphism,
    cls: ExtCocycle,
    split: ExtCocycle,
    frame: RepMorphism,
    frame_inv: RepMorphism,
}

#[derive(Serialize, Deserialize)]
struct ConflationData {
    x: RepMorphism,
    y: RepMorphism,
    cls: ExtCocycle,
}

impl TryFrom<ConflationData> for Conflation {
    type Error = Error;
    fn try_from(d: ConflationData) -> Result<Self> {
        Conflation::with_class(d.x, d.y, d.cls)
    }
}

impl From<Conflation> for ConflationData {
    fn from(c: Conflation) -> Self {
        ConflationData {
            x: c.x,
            y: c.y,
            cls: c.cls,
        }
    }
}

/// The canonical conflation with middle term glued by `xi`'s blocks.
pub fn cocycle_to_ses(xi: &ExtCocycle) -> Conflation {
    let a = xi.sub();
    let c = xi.quotient();
    let f = a.field();
    let q = a.quiver().clone();
    let n = q.vertices();
    let mid_maps = q
        .arrows()
        .iter()
        .zip(xi.blocks())
        .enumerate()
        .map(|(i, (&(s, t), blk))| {
            let top = a.map(i).hstack(blk);
            let bottom = Matrix::zeros(f, c.dim(t), a.dim(s)).hstack(c.map(i));
            top.vstack(&bottom)
        })
        .collect();
    let dims = (0..n).map(|v| a.dim(v) + c.dim(v)).collect();
    let b = Rep::new(q, f, dims, mid_maps).expect("canonical middle term is well formed");
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for v in 0..n {
        let (da, dc) = (a.dim(v), c.dim(v));
        xs.push(Matrix::identity(f, da).vstack(&Matrix::zeros(f, dc, da)));
        ys.push(Matrix::zeros(f, dc, da).hstack(&Matrix::identity(f, dc)));
    }
    let x = RepMorphism::unchecked(a.clone(), b.clone(), xs);
    let y = RepMorphism::unchecked(b.clone(), c.clone(), ys);
    let id = RepMorphism::identity(&b);
    Conflation {
        x,
        y,
        cls: xi.clone(),
        split: xi.clone(),
        frame: id.clone(),
        frame_inv: id,
    }
}

/// A cocycle whose canonical conflation is equivalent to `x`, `y`.
pub fn ses_to_cocycle(x: &RepMorphism, y: &RepMorphism) -> Result<ExtCocycle> {
    Ok(split_sequence(x, y)?.0)
}

fn split_sequence(x: &RepMorphism, y: &RepMorphism) -> Result<(ExtCocycle, RepMorphism, RepMorphism)> {
    if x.dst() != y.src() {
        return Err(Error::NotExact("maps are not composable".into()));
    }
    if !(y * x).is_zero() {
        return Err(Error::NotExact("y∘x is nonzero".into()));
    }
    if !x.is_injective() {
        return Err(Error::NotExact("x is not injective".into()));
    }
    if !y.is_surjective() {
        return Err(Error::NotExact("y is not surjective".into()));
    }
    let (a, b, c) = (x.src(), x.dst(), y.dst());
    let n = a.dims().len();
    if (0..n).any(|v| b.dim(v) != a.dim(v) + c.dim(v)) {
        return Err(Error::NotExact("middle dimension is not the sum of the ends".into()));
    }
    let mut frame = Vec::with_capacity(n);
    let mut frame_inv = Vec::with_capacity(n);
    for v in 0..n {
        let k = Matrix::complement_basis(x.map(v), b.dim(v))?;
        let u = (y.map(v) * &k).invert()?;
        let t = x.map(v).hstack(&(&k * &u));
        frame_inv.push(t.invert()?);
        frame.push(t);
    }
    let arrows = a.quiver().arrows();
    let mut blocks = Vec::with_capacity(arrows.len());
    for (i, &(s, t)) in arrows.iter().enumerate() {
        let conj = &(&frame_inv[t] * b.map(i)) * &frame[s];
        let (as_, at, cs, ct) = (a.dim(s), a.dim(t), c.dim(s), c.dim(t));
        debug_assert_eq!(conj.submatrix(0, at, 0, as_), *a.map(i));
        debug_assert!(conj.submatrix(at, ct, 0, as_).is_zero());
        debug_assert_eq!(conj.submatrix(at, ct, as_, cs), *c.map(i));
        blocks.push(conj.submatrix(0, at, as_, cs));
    }
    let split = ExtCocycle::new(c.clone(), a.clone(), blocks)?;
    let canon = cocycle_to_ses(&split);
    let frame = RepMorphism::new(canon.x.dst().clone(), b.clone(), frame)
        .map_err(|e| Error::Assertion(format!("splitting frame: {e}")))?;
    let frame_inv = RepMorphism::unchecked(b.clone(), canon.x.dst().clone(), frame_inv);
    Ok((split, frame, frame_inv))
}

impl Conflation {
    /// Conflation carrying the class read off from its own splitting.
    pub fn from_maps(x: RepMorphism, y: RepMorphism) -> Result<Self> {
        let (split, frame, frame_inv) = split_sequence(&x, &y)?;
        Ok(Conflation {
            x,
            y,
            cls: split.clone(),
            split,
            frame,
            frame_inv,
        })
    }

    /// Conflation with a prescribed class; errors unless the sequence realizes it.
    pub fn with_class(x: RepMorphism, y: RepMorphism, cls: ExtCocycle) -> Result<Self> {
        let (split, frame, frame_inv) = split_sequence(&x, &y)?;
        if cls.quotient() != split.quotient() || cls.sub() != split.sub() {
            return Err(Error::Shape("class ends differ from the sequence ends".into()));
        }
        if !ExtSpace::new(split.quotient(), split.sub()).same_class(&split, &cls) {
            return Err(Error::Precondition("sequence does not realize the given class".into()));
        }
        Ok(Conflation {
            x,
            y,
            cls,
            split,
            frame,
            frame_inv,
        })
    }

    pub fn x(&self) -> &RepMorphism {
        &self.x
    }

    pub fn y(&self) -> &RepMorphism {
        &self.y
    }

    pub fn cls(&self) -> &ExtCocycle {
        &self.cls
    }

    pub fn sub(&self) -> &Rep {
        self.x.src()
    }

    pub fn mid(&self) -> &Rep {
        self.x.dst()
    }

    pub fn quotient(&self) -> &Rep {
        self.y.dst()
    }

    /// The cocycle the middle term is glued by, in the splitting frame.
    pub fn split_cocycle(&self) -> &ExtCocycle {
        &self.split
    }

    /// Isomorphism from the canonical middle term of `split_cocycle` onto `mid`.
    pub fn frame(&self) -> &RepMorphism {
        &self.frame
    }

    pub fn frame_inv(&self) -> &RepMorphism {
        &self.frame_inv
    }

    /// Vertexwise right inverses of `y` (linear maps, not morphisms).
    pub fn sections(&self) -> Vec<Matrix> {
        let f = self.mid().field();
        (0..self.mid().dims().len())
            .map(|v| {
                let (da, dc) = (self.sub().dim(v), self.quotient().dim(v));
                self.frame.map(v) * &Matrix::zeros(f, da, dc).vstack(&Matrix::identity(f, dc))
            })
            .collect()
    }

    /// Vertexwise left inverses of `x` (linear maps, not morphisms).
    pub fn retractions(&self) -> Vec<Matrix> {
        let f = self.mid().field();
        (0..self.mid().dims().len())
            .map(|v| {
                let (da, dc) = (self.sub().dim(v), self.quotient().dim(v));
                &Matrix::identity(f, da).hstack(&Matrix::zeros(f, da, dc)) * self.frame_inv.map(v)
            })
            .collect()
    }

    pub fn direct_sum(&self, other: &Conflation) -> Conflation {
        Conflation::with_class(
            self.x.direct_sum(&other.x),
            self.y.direct_sum(&other.y),
            super::ext_direct_sum(&self.cls, &other.cls),
        )
        .expect("direct sums of conflations are conflations")
    }

    /// The dual conflation `C^op -> B^op -> A^op` over the opposite quiver.
    pub fn opposite(&self) -> Conflation {
        Conflation::with_class(self.y.opposite(), self.x.opposite(), self.cls.opposite())
            .expect("transposed conflations are conflations")
    }

    /// Morphisms `b: mid -> other.mid` with `b∘x = 0` and `other.y∘b = 0`, one per basis
    /// element of Hom(C, A').
    pub fn fill_kernel(&self, other: &Conflation) -> Vec<RepMorphism> {
        super::hom_basis(self.quotient(), other.sub())
            .iter()
            .map(|k| &(other.x() * k) * self.y())
            .collect()
    }
}

/// The canonical `b` with `b∘x = x'∘a`, `y'∘b = c∘y`, given `a_*δ ≡ c^*δ'`.
///
/// Solved in the splitting frames, where `b = [[a, k], [0, c]]` and the
/// equation on `k` is a coboundary equation.
pub fn fill_between(
    from: &Conflation,
    to: &Conflation,
    a: &RepMorphism,
    c: &RepMorphism,
) -> Result<RepMorphism> {
    if a.src() != from.sub() || a.dst() != to.sub() || c.src() != from.quotient() || c.dst() != to.quotient() {
        return Err(Error::Shape("fill legs do not match the conflation ends".into()));
    }
    let target = to.split.pullback(c).sub_cocycle(&from.split.pushforward(a));
    let space = ExtSpace::new(from.quotient(), to.sub());
    let k = space
        .solve_coboundary(&target)
        .ok_or_else(|| Error::Precondition("(a, c) is not a morphism of extensions".into()))?;
    let f = a.field();
    let canon_from = from.frame_inv.dst().clone();
    let canon_to = to.frame.src().clone();
    let maps = (0..k.len())
        .map(|v| {
            let bottom = Matrix::zeros(f, c.dst().dim(v), a.src().dim(v)).hstack(c.map(v));
            a.map(v).hstack(&k[v]).vstack(&bottom)
        })
        .collect();
    let b_can = RepMorphism::new(canon_from, canon_to, maps)
        .map_err(|e| Error::Assertion(format!("canonical fill does not commute: {e}")))?;
    let b = &(&to.frame * &b_can) * &from.frame_inv;
    debug_assert!(&b * from.x() == to.x() * a);
    debug_assert!(to.y() * &b == c * from.y());
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{iso_find, Search, SearchConfig};
    use super::*;

    #[test]
    fn zero_cocycle_gives_split_sequence() {
        let conf = cocycle_to_ses(&ExtCocycle::zero(&s1(2), &s2(2)));
        assert_eq!(conf.mid(), &g(2));
        assert!((conf.y() * conf.x()).is_zero());
    }

    #[test]
    fn generator_glues_projective() {
        let gen = ExtSpace::new(&s1(2), &s2(2)).basis_cocycles().remove(0);
        let conf = cocycle_to_ses(&gen);
        assert_eq!(conf.mid(), &p1(2));
        let cfg = SearchConfig::default();
        assert!(matches!(iso_find(conf.mid(), &g(2), &cfg), Search::NotFound));
    }

    #[test]
    fn round_trip_recovers_class() {
        let space = ExtSpace::new(&g(3), &p1(3).direct_sum(&s2(3)));
        for xi in space.basis_cocycles() {
            let conf = cocycle_to_ses(&xi);
            let back = ses_to_cocycle(conf.x(), conf.y()).unwrap();
            assert_eq!(space.reduce(&back), space.reduce(&xi));
        }
    }

    #[test]
    fn hand_built_sequence_is_nonsplit() {
        let f = field(2);
        let x = RepMorphism::new(s2(2), p1(2), vec![Matrix::zeros(f, 1, 0), Matrix::identity(f, 1)]).unwrap();
        let y = RepMorphism::new(p1(2), s1(2), vec![Matrix::identity(f, 1), Matrix::zeros(f, 0, 1)]).unwrap();
        let xi = ses_to_cocycle(&x, &y).unwrap();
        assert!(!ExtSpace::new(&s1(2), &s2(2)).is_trivial_class(&xi));
    }

    #[test]
    fn rejects_non_exact_data() {
        let f = field(2);
        let x = RepMorphism::zero(&s2(2), &p1(2));
        let y = RepMorphism::new(p1(2), s1(2), vec![Matrix::identity(f, 1), Matrix::zeros(f, 0, 1)]).unwrap();
        assert!(matches!(ses_to_cocycle(&x, &y), Err(Error::NotExact(_))));
    }

    #[test]
    fn fill_on_a_rescaled_sequence() {
        let f = field(3);
        let two = Matrix::from_vec(f, 1, 1, vec![2]).unwrap();
        let x = RepMorphism::new(s2(3), p1(3), vec![Matrix::zeros(f, 1, 0), two]).unwrap();
        let y = RepMorphism::new(p1(3), s1(3), vec![Matrix::identity(f, 1), Matrix::zeros(f, 0, 1)]).unwrap();
        let conf = Conflation::from_maps(x, y).unwrap();
        let ids = (RepMorphism::identity(conf.sub()), RepMorphism::identity(conf.quotient()));
        let b = fill_between(&conf, &conf, &ids.0, &ids.1).unwrap();
        assert_eq!(&b * conf.x(), *conf.x());
        assert_eq!(conf.y() * &b, *conf.y());
    }

    #[test]
    fn fill_between_conjugated_presentation() {
        let gg = g(3);
        let xi = ExtSpace::new(&gg, &gg).basis_cocycles().remove(0);
        let conf = cocycle_to_ses(&xi);
        let e = diag(&gg, &[1, 0]);
        let f = diag(&gg, &[0, 1]);
        let b = fill_between(&conf, &conf, &f, &e).unwrap();
        assert_eq!(&b * conf.x(), conf.x() * &f);
        assert_eq!(conf.y() * &b, &e * conf.y());
    }
}

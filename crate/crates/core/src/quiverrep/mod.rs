//! Representations of finite acyclic quivers over a prime field.

mod conflation;
mod ext;
mod iso;
mod subquot;
pub(crate) mod system;

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, PrimeField};

pub use conflation::{cocycle_to_ses, fill_between, ses_to_cocycle, Conflation};
pub use ext::{ext_add, ext_direct_sum, ExtCocycle, ExtSpace};
pub use iso::{iso_find, search_affine, Search, SearchConfig};
pub use subquot::{image_subrep, quotient_rep, solve_left};

use system::MapSystem;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuiverData")]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct QuiverData {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

impl TryFrom<QuiverData> for Quiver {
    type Error = Error;
    fn try_from(d: QuiverData) -> Result<Self> {
        Quiver::new(d.vertices, d.arrows)
    }
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(s, t)) = arrows.iter().find(|&&(s, t)| s >= vertices || t >= vertices) {
            return Err(Error::Quiver(format!("arrow {s}->{t} leaves the {vertices} vertices")));
        }
        // Kahn's algorithm; leftover vertices sit on a cycle.
        let mut indegree = vec![0usize; vertices];
        for &(_, t) in &arrows {
            indegree[t] += 1;
        }
        let mut ready: Vec<usize> = (0..vertices).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for &(s, t) in &arrows {
                if s == v {
                    indegree[t] -= 1;
                    if indegree[t] == 0 {
                        ready.push(t);
                    }
                }
            }
        }
        if seen != vertices {
            return Err(Error::Quiver("quiver has a directed cycle".into()));
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Linear orientation 0 -> 1 -> ... -> n-1.
    pub fn linear(n: usize) -> Self {
        Quiver::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("linear quivers are acyclic")
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices,
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RepData")]
pub struct Rep {
    quiver: Arc<Quiver>,
    field: PrimeField,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

#[derive(Deserialize)]
struct RepData {
    quiver: Quiver,
    field: PrimeField,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl TryFrom<RepData> for Rep {
    type Error = Error;
    fn try_from(d: RepData) -> Result<Self> {
        Rep::new(Arc::new(d.quiver), d.field, d.dims, d.maps)
    }
}

impl Rep {
    pub fn new(quiver: Arc<Quiver>, field: PrimeField, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != quiver.vertices() {
            return Err(Error::Shape(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.vertices()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Shape(format!(
                "{} arrow maps for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (i, (&(s, t), m)) in quiver.arrows().iter().zip(&maps).enumerate() {
            if m.shape() != (dims[t], dims[s]) || m.field() != field {
                return Err(Error::Shape(format!(
                    "arrow {i} map is {:?}, expected {:?} over F{}",
                    m.shape(),
                    (dims[t], dims[s]),
                    field.p()
                )));
            }
        }
        Ok(Rep {
            quiver,
            field,
            dims,
            maps,
        })
    }

    pub fn zero(quiver: Arc<Quiver>, field: PrimeField) -> Self {
        let dims = vec![0; quiver.vertices()];
        let maps = quiver.arrows().iter().map(|_| Matrix::zeros(field, 0, 0)).collect();
        Rep {
            quiver,
            field,
            dims,
            maps,
        }
    }

    /// The simple representation at vertex `v`.
    pub fn simple(quiver: Arc<Quiver>, field: PrimeField, v: usize) -> Self {
        let mut dims = vec![0; quiver.vertices()];
        dims[v] = 1;
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| Matrix::zeros(field, dims[t], dims[s]))
            .collect();
        Rep {
            quiver,
            field,
            dims,
            maps,
        }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Same quiver and field.
    pub fn compatible(&self, other: &Rep) -> bool {
        self.field == other.field && self.quiver == other.quiver
    }

    pub fn direct_sum(&self, other: &Rep) -> Rep {
        assert!(self.compatible(other), "direct sum across categories");
        Rep {
            quiver: self.quiver.clone(),
            field: self.field,
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.block_diag(b)).collect(),
        }
    }

    /// Dual representation on the opposite quiver.
    pub fn opposite(&self) -> Rep {
        Rep {
            quiver: Arc::new(self.quiver.opposite()),
            field: self.field,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepMorphism {
    src: Rep,
    dst: Rep,
    maps: Vec<Matrix>,
}

impl RepMorphism {
    /// Validates shapes and commuting squares.
    pub fn new(src: Rep, dst: Rep, maps: Vec<Matrix>) -> Result<Self> {
        let m = RepMorphism::from_parts(src, dst, maps)?;
        if let Some(a) = m.first_noncommuting_arrow() {
            return Err(Error::NotCommuting(format!("square at arrow {a} does not commute")));
        }
        Ok(m)
    }

    /// Validates shapes only.
    pub fn from_parts(src: Rep, dst: Rep, maps: Vec<Matrix>) -> Result<Self> {
        if !src.compatible(&dst) {
            return Err(Error::Shape("source and target live over different quivers".into()));
        }
        if maps.len() != src.quiver.vertices() {
            return Err(Error::Shape(format!("{} vertex maps", maps.len())));
        }
        for (v, m) in maps.iter().enumerate() {
            if m.shape() != (dst.dims[v], src.dims[v]) {
                return Err(Error::Shape(format!(
                    "vertex {v} map is {:?}, expected {:?}",
                    m.shape(),
                    (dst.dims[v], src.dims[v])
                )));
            }
        }
        Ok(RepMorphism { src, dst, maps })
    }

    pub(crate) fn unchecked(src: Rep, dst: Rep, maps: Vec<Matrix>) -> Self {
        debug_assert!(RepMorphism::from_parts(src.clone(), dst.clone(), maps.clone()).is_ok());
        RepMorphism { src, dst, maps }
    }

    pub fn identity(rep: &Rep) -> Self {
        let maps = rep.dims.iter().map(|&d| Matrix::identity(rep.field, d)).collect();
        RepMorphism::unchecked(rep.clone(), rep.clone(), maps)
    }

    pub fn zero(src: &Rep, dst: &Rep) -> Self {
        let maps = src
            .dims
            .iter()
            .zip(&dst.dims)
            .map(|(&s, &d)| Matrix::zeros(src.field, d, s))
            .collect();
        RepMorphism::unchecked(src.clone(), dst.clone(), maps)
    }

    pub fn src(&self) -> &Rep {
        &self.src
    }

    pub fn dst(&self) -> &Rep {
        &self.dst
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    pub fn field(&self) -> PrimeField {
        self.src.field
    }

    pub fn first_noncommuting_arrow(&self) -> Option<usize> {
        self.src
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .find(|&(a, &(s, t))| &self.dst.maps[a] * &self.maps[s] != &self.maps[t] * &self.src.maps[a])
            .map(|(a, _)| a)
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_endo(&self) -> bool {
        self.src == self.dst
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_endo() && &(self * self) == self
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(|m| m.is_square() && m.rank() == m.rows())
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn inverse(&self) -> Result<RepMorphism> {
        let maps = self.maps.iter().map(Matrix::invert).collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(RepMorphism::unchecked(self.dst.clone(), self.src.clone(), maps))
    }

    pub fn scale(&self, k: u32) -> RepMorphism {
        RepMorphism {
            maps: self.maps.iter().map(|m| m.scale(k)).collect(),
            ..self.clone()
        }
    }

    /// Row-major concatenation of the vertex maps.
    pub fn to_vec(&self) -> Vec<u32> {
        self.maps.iter().flat_map(|m| m.data().iter().copied()).collect()
    }

    pub fn from_vec(src: &Rep, dst: &Rep, v: &[u32]) -> RepMorphism {
        let maps = system::unpack(src.field, src.dims(), dst.dims(), v);
        RepMorphism::unchecked(src.clone(), dst.clone(), maps)
    }

    pub fn direct_sum(&self, other: &RepMorphism) -> RepMorphism {
        RepMorphism::unchecked(
            self.src.direct_sum(&other.src),
            self.dst.direct_sum(&other.dst),
            self.maps.iter().zip(&other.maps).map(|(a, b)| a.block_diag(b)).collect(),
        )
    }

    /// The map `src -> parts[0].dst ⊕ parts[1].dst ⊕ …` with the given components.
    pub fn column(parts: &[&RepMorphism]) -> RepMorphism {
        let src = parts[0].src.clone();
        let dst = parts[1..].iter().fold(parts[0].dst.clone(), |acc, m| acc.direct_sum(&m.dst));
        let maps = (0..src.dims.len())
            .map(|v| {
                parts[1..]
                    .iter()
                    .fold(parts[0].maps[v].clone(), |acc, m| acc.vstack(&m.maps[v]))
            })
            .collect();
        RepMorphism::unchecked(src, dst, maps)
    }

    /// The map `parts[0].src ⊕ parts[1].src ⊕ … -> dst` with the given components.
    pub fn row(parts: &[&RepMorphism]) -> RepMorphism {
        let dst = parts[0].dst.clone();
        let src = parts[1..].iter().fold(parts[0].src.clone(), |acc, m| acc.direct_sum(&m.src));
        let maps = (0..dst.dims.len())
            .map(|v| {
                parts[1..]
                    .iter()
                    .fold(parts[0].maps[v].clone(), |acc, m| acc.hstack(&m.maps[v]))
            })
            .collect();
        RepMorphism::unchecked(src, dst, maps)
    }

    /// Dual morphism `dst^op -> src^op`.
    pub fn opposite(&self) -> RepMorphism {
        RepMorphism::unchecked(
            self.dst.opposite(),
            self.src.opposite(),
            self.maps.iter().map(Matrix::transpose).collect(),
        )
    }
}

/// Inclusions and projections of `a ⊕ b`.
pub fn biproduct(a: &Rep, b: &Rep) -> [RepMorphism; 4] {
    let sum = a.direct_sum(b);
    let f = a.field();
    let n = a.dims().len();
    let mut i1 = Vec::with_capacity(n);
    let mut i2 = Vec::with_capacity(n);
    for v in 0..n {
        let (da, db) = (a.dim(v), b.dim(v));
        i1.push(Matrix::identity(f, da).vstack(&Matrix::zeros(f, db, da)));
        i2.push(Matrix::zeros(f, da, db).vstack(&Matrix::identity(f, db)));
    }
    let p1: Vec<Matrix> = i1.iter().map(Matrix::transpose).collect();
    let p2: Vec<Matrix> = i2.iter().map(Matrix::transpose).collect();
    [
        RepMorphism::unchecked(a.clone(), sum.clone(), i1),
        RepMorphism::unchecked(b.clone(), sum.clone(), i2),
        RepMorphism::unchecked(sum.clone(), a.clone(), p1),
        RepMorphism::unchecked(sum, b.clone(), p2),
    ]
}

/// Canonical basis of Hom(m, n), in RREF order.
pub fn hom_basis(m: &Rep, n: &Rep) -> Vec<RepMorphism> {
    assert!(m.compatible(n), "hom across categories");
    let mut sys = MapSystem::new(m.field(), m.dims(), n.dims());
    sys.commuting(m, n);
    sys.kernel()
        .into_iter()
        .map(|maps| RepMorphism::unchecked(m.clone(), n.clone(), maps))
        .collect()
}

impl<'a> Mul<&'a RepMorphism> for &'a RepMorphism {
    type Output = RepMorphism;
    /// Composition: `g * f` is g after f.
    fn mul(self, rhs: &'a RepMorphism) -> RepMorphism {
        assert_eq!(rhs.dst.dims, self.src.dims, "composing non-composable morphisms");
        debug_assert!(rhs.dst == self.src, "composing non-composable morphisms");
        RepMorphism::unchecked(
            rhs.src.clone(),
            self.dst.clone(),
            self.maps.iter().zip(&rhs.maps).map(|(a, b)| a * b).collect(),
        )
    }
}

impl<'a> Add<&'a RepMorphism> for &'a RepMorphism {
    type Output = RepMorphism;
    fn add(self, rhs: &'a RepMorphism) -> RepMorphism {
        debug_assert!(self.src == rhs.src && self.dst == rhs.dst, "adding parallel morphisms only");
        RepMorphism {
            maps: self.maps.iter().zip(&rhs.maps).map(|(a, b)| a + b).collect(),
            ..self.clone()
        }
    }
}

impl<'a> Sub<&'a RepMorphism> for &'a RepMorphism {
    type Output = RepMorphism;
    fn sub(self, rhs: &'a RepMorphism) -> RepMorphism {
        debug_assert!(self.src == rhs.src && self.dst == rhs.dst, "subtracting parallel morphisms only");
        RepMorphism {
            maps: self.maps.iter().zip(&rhs.maps).map(|(a, b)| a - b).collect(),
            ..self.clone()
        }
    }
}

impl Neg for &RepMorphism {
    type Output = RepMorphism;
    fn neg(self) -> RepMorphism {
        RepMorphism {
            maps: self.maps.iter().map(|m| -m).collect(),
            ..self.clone()
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn field(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    pub fn a2() -> Arc<Quiver> {
        Arc::new(Quiver::linear(2))
    }

    pub fn rep(q: &Arc<Quiver>, p: u32, dims: &[usize], maps: &[Vec<Vec<i64>>]) -> Rep {
        let f = field(p);
        let maps = q
            .arrows()
            .iter()
            .zip(maps)
            .map(|(&(s, t), rows)| {
                if rows.is_empty() {
                    Matrix::zeros(f, dims[t], dims[s])
                } else {
                    Matrix::from_rows(f, rows)
                }
            })
            .collect();
        Rep::new(q.clone(), f, dims.to_vec(), maps).unwrap()
    }

    pub fn s1(p: u32) -> Rep {
        rep(&a2(), p, &[1, 0], &[vec![]])
    }

    pub fn s2(p: u32) -> Rep {
        rep(&a2(), p, &[0, 1], &[vec![]])
    }

    pub fn p1(p: u32) -> Rep {
        rep(&a2(), p, &[1, 1], &[vec![vec![1]]])
    }

    pub fn g(p: u32) -> Rep {
        s1(p).direct_sum(&s2(p))
    }

    /// Vertexwise diagonal endomorphism of a rep with one-dimensional vertex spaces.
    pub fn diag(r: &Rep, entries: &[i64]) -> RepMorphism {
        let f = r.field();
        let maps = entries.iter().map(|&e| Matrix::from_rows(f, &[vec![e]])).collect();
        RepMorphism::new(r.clone(), r.clone(), maps).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn cyclic_quivers_are_rejected() {
        assert!(Quiver::new(2, vec![(0, 1), (1, 0)]).is_err());
        assert!(Quiver::new(1, vec![(0, 0)]).is_err());
        assert!(Quiver::new(2, vec![(0, 2)]).is_err());
        assert!(Quiver::new(3, vec![(0, 1), (0, 2), (1, 2)]).is_ok());
    }

    #[test]
    fn hom_dimensions_on_a2() {
        assert_eq!(hom_basis(&s1(2), &s1(2)).len(), 1);
        assert_eq!(hom_basis(&s1(2), &s2(2)).len(), 0);
        let gg = hom_basis(&g(2), &g(2));
        assert_eq!(gg.len(), 2);
        assert!(gg.contains(&diag(&g(2), &[1, 0])));
        assert!(gg.contains(&diag(&g(2), &[0, 1])));
    }

    #[test]
    fn morphism_validation_checks_squares() {
        let p1 = p1(2);
        let bad = RepMorphism::new(p1.clone(), p1.clone(), vec![Matrix::identity(field(2), 1), Matrix::zeros(field(2), 1, 1)]);
        assert!(matches!(bad, Err(Error::NotCommuting(_))));
    }

    #[test]
    fn biproduct_identities() {
        let [i1, i2, r1, r2] = biproduct(&s1(3), &p1(3));
        assert_eq!(&r1 * &i1, RepMorphism::identity(&s1(3)));
        assert!((&r2 * &i1).is_zero());
        let sum = &(&i1 * &r1) + &(&i2 * &r2);
        assert_eq!(sum, RepMorphism::identity(&s1(3).direct_sum(&p1(3))));
    }
}

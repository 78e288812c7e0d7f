//! Ext¹ as cocycles modulo coboundaries.
//!
//! For a quotient `M` and a sub `N`, a cocycle assigns to each arrow `α: s -> t`
//! a block `N_t × M_s`; coboundaries are the image of
//! `Φ(f)_α = f_t·M_α − N_α·f_s` over vertexwise maps `f_v: M_v -> N_v`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{CosetReducer, Matrix};

use super::system::MapSystem;
use super::{Rep, RepMorphism};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CocycleData")]
pub struct ExtCocycle {
    quotient: Rep,
    sub: Rep,
    blocks: Vec<Matrix>,
}

#[derive(Deserialize)]
struct CocycleData {
    quotient: Rep,
    sub: Rep,
    blocks: Vec<Matrix>,
}

impl TryFrom<CocycleData> for ExtCocycle {
    type Error = Error;
    fn try_from(d: CocycleData) -> Result<Self> {
        ExtCocycle::new(d.quotient, d.sub, d.blocks)
    }
}

fn block_shape(quotient: &Rep, sub: &Rep, s: usize, t: usize) -> (usize, usize) {
    (sub.dim(t), quotient.dim(s))
}

impl ExtCocycle {
    pub fn new(quotient: Rep, sub: Rep, blocks: Vec<Matrix>) -> Result<Self> {
        if !quotient.compatible(&sub) {
            return Err(Error::Shape("cocycle ends live over different quivers".into()));
        }
        let arrows = quotient.quiver().arrows();
        if blocks.len() != arrows.len() {
            return Err(Error::Shape(format!("{} blocks for {} arrows", blocks.len(), arrows.len())));
        }
        for (a, (&(s, t), b)) in arrows.iter().zip(&blocks).enumerate() {
            let want = block_shape(&quotient, &sub, s, t);
            if b.shape() != want || b.field() != quotient.field() {
                return Err(Error::Shape(format!("block {a} is {:?}, expected {want:?}", b.shape())));
            }
        }
        Ok(ExtCocycle { quotient, sub, blocks })
    }

    pub fn zero(quotient: &Rep, sub: &Rep) -> Self {
        let f = quotient.field();
        let blocks = quotient
            .quiver()
            .arrows()
            .iter()
            .map(|&(s, t)| {
                let (r, c) = block_shape(quotient, sub, s, t);
                Matrix::zeros(f, r, c)
            })
            .collect();
        ExtCocycle {
            quotient: quotient.clone(),
            sub: sub.clone(),
            blocks,
        }
    }

    pub fn from_flat(quotient: &Rep, sub: &Rep, v: &[u32]) -> Self {
        let f = quotient.field();
        let mut off = 0;
        let blocks = quotient
            .quiver()
            .arrows()
            .iter()
            .map(|&(s, t)| {
                let (r, c) = block_shape(quotient, sub, s, t);
                let m = Matrix::from_vec(f, r, c, v[off..off + r * c].to_vec()).expect("slice length");
                off += r * c;
                m
            })
            .collect();
        assert_eq!(off, v.len(), "flat cocycle length");
        ExtCocycle {
            quotient: quotient.clone(),
            sub: sub.clone(),
            blocks,
        }
    }

    pub fn flat(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(|b| b.data().iter().copied()).collect()
    }

    pub fn quotient(&self) -> &Rep {
        &self.quotient
    }

    pub fn sub(&self) -> &Rep {
        &self.sub
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    fn zip_with(&self, other: &ExtCocycle, op: impl Fn(&Matrix, &Matrix) -> Matrix) -> ExtCocycle {
        assert!(
            self.quotient == other.quotient && self.sub == other.sub,
            "cocycles have different ends"
        );
        ExtCocycle {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| op(a, b)).collect(),
            ..self.clone()
        }
    }

    /// Blockwise sum.
    pub fn add(&self, other: &ExtCocycle) -> ExtCocycle {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub_cocycle(&self, other: &ExtCocycle) -> ExtCocycle {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: u32) -> ExtCocycle {
        ExtCocycle {
            blocks: self.blocks.iter().map(|b| b.scale(k)).collect(),
            ..self.clone()
        }
    }

    /// `a_*ξ` for `a: sub -> sub'`.
    pub fn pushforward(&self, a: &RepMorphism) -> ExtCocycle {
        assert_eq!(a.src(), &self.sub, "pushforward along a map out of another object");
        let arrows = self.quotient.quiver().arrows();
        ExtCocycle {
            quotient: self.quotient.clone(),
            sub: a.dst().clone(),
            blocks: arrows.iter().zip(&self.blocks).map(|(&(_, t), b)| a.map(t) * b).collect(),
        }
    }

    /// `c^*ξ` for `c: quotient' -> quotient`.
    pub fn pullback(&self, c: &RepMorphism) -> ExtCocycle {
        assert_eq!(c.dst(), &self.quotient, "pullback along a map into another object");
        let arrows = self.quotient.quiver().arrows();
        ExtCocycle {
            quotient: c.src().clone(),
            sub: self.sub.clone(),
            blocks: arrows.iter().zip(&self.blocks).map(|(&(s, _), b)| b * c.map(s)).collect(),
        }
    }

    /// The corresponding cocycle over the opposite quiver, with ends swapped.
    pub fn opposite(&self) -> ExtCocycle {
        ExtCocycle {
            quotient: self.sub.opposite(),
            sub: self.quotient.opposite(),
            blocks: self.blocks.iter().map(Matrix::transpose).collect(),
        }
    }
}

/// Block-diagonal cocycle on `quotient ⊕ quotient'`, `sub ⊕ sub'`.
pub fn ext_direct_sum(xi: &ExtCocycle, xi2: &ExtCocycle) -> ExtCocycle {
    ExtCocycle {
        quotient: xi.quotient.direct_sum(&xi2.quotient),
        sub: xi.sub.direct_sum(&xi2.sub),
        blocks: xi.blocks.iter().zip(&xi2.blocks).map(|(a, b)| a.block_diag(b)).collect(),
    }
}

/// `δ + δ'` through the diagonal and codiagonal; agrees with the blockwise sum.
pub fn ext_add(xi: &ExtCocycle, xi2: &ExtCocycle) -> ExtCocycle {
    let c = &xi.quotient;
    let a = &xi.sub;
    let one_c = RepMorphism::identity(c);
    let one_a = RepMorphism::identity(a);
    let diagonal = RepMorphism::column(&[&one_c, &one_c]);
    let codiagonal = RepMorphism::row(&[&one_a, &one_a]);
    let out = ext_direct_sum(xi, xi2).pullback(&diagonal).pushforward(&codiagonal);
    assert_eq!(out, xi.add(xi2), "codiagonal/diagonal sum disagrees with blockwise sum");
    out
}

/// The group Ext¹(quotient, sub) with canonical coset representatives.
///
/// Class coordinates are the entries of the reduced representative at the
/// coordinates that reduction never eliminates.
#[derive(Debug, Clone)]
pub struct ExtSpace {
    quotient: Rep,
    sub: Rep,
    phi: Matrix,
    reducer: CosetReducer,
    free: Vec<usize>,
}

impl ExtSpace {
    pub fn new(quotient: &Rep, sub: &Rep) -> Self {
        let phi = coboundary_matrix(quotient, sub);
        let reducer = CosetReducer::new(&phi);
        ExtSpace::assemble(quotient, sub, phi, reducer)
    }

    /// Every cocycle counts as a coboundary: the split exact structure.
    pub fn split_structure(quotient: &Rep, sub: &Rep) -> Self {
        let phi = coboundary_matrix(quotient, sub);
        let reducer = CosetReducer::new(&Matrix::identity(quotient.field(), phi.rows()));
        ExtSpace::assemble(quotient, sub, phi, reducer)
    }

    fn assemble(quotient: &Rep, sub: &Rep, phi: Matrix, reducer: CosetReducer) -> Self {
        let free = reducer.free_coordinates();
        ExtSpace {
            quotient: quotient.clone(),
            sub: sub.clone(),
            phi,
            reducer,
            free,
        }
    }

    pub fn quotient(&self) -> &Rep {
        &self.quotient
    }

    pub fn sub(&self) -> &Rep {
        &self.sub
    }

    pub fn cocycle_dim(&self) -> usize {
        self.phi.rows()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Columns span the coboundaries.
    pub fn coboundary_image(&self) -> Matrix {
        self.phi.column_space_basis()
    }

    /// The matrix of Φ from flattened vertex maps to flattened cocycles.
    pub fn coboundary_map(&self) -> &Matrix {
        &self.phi
    }

    /// Columns are the canonical class representatives.
    pub fn class_basis(&self) -> Matrix {
        let mut m = Matrix::zeros(self.quotient.field(), self.cocycle_dim(), self.dim());
        for (j, &c) in self.free.iter().enumerate() {
            m.set(c, j, 1);
        }
        m
    }

    pub fn basis_cocycles(&self) -> Vec<ExtCocycle> {
        (0..self.dim())
            .map(|j| {
                let mut v = vec![0; self.dim()];
                v[j] = 1;
                self.from_coords(&v)
            })
            .collect()
    }

    fn check_ends(&self, xi: &ExtCocycle) {
        assert!(
            xi.quotient == self.quotient && xi.sub == self.sub,
            "cocycle does not belong to this Ext space"
        );
    }

    pub fn reduce(&self, xi: &ExtCocycle) -> ExtCocycle {
        self.check_ends(xi);
        ExtCocycle::from_flat(&self.quotient, &self.sub, &self.reducer.reduce(&xi.flat()))
    }

    pub fn coords(&self, xi: &ExtCocycle) -> Vec<u32> {
        self.check_ends(xi);
        self.coords_of_flat(&xi.flat())
    }

    pub fn coords_of_flat(&self, v: &[u32]) -> Vec<u32> {
        let r = self.reducer.reduce(v);
        self.free.iter().map(|&c| r[c]).collect()
    }

    pub fn from_coords(&self, coords: &[u32]) -> ExtCocycle {
        assert_eq!(coords.len(), self.dim(), "class coordinate count");
        let mut v = vec![0; self.cocycle_dim()];
        for (&c, &x) in self.free.iter().zip(coords) {
            v[c] = x % self.quotient.field().p();
        }
        ExtCocycle::from_flat(&self.quotient, &self.sub, &v)
    }

    pub fn same_class(&self, a: &ExtCocycle, b: &ExtCocycle) -> bool {
        self.coords(a) == self.coords(b)
    }

    pub fn is_trivial_class(&self, xi: &ExtCocycle) -> bool {
        self.coords(xi).iter().all(|&x| x == 0)
    }

    /// The canonical `k` with Φ(k) = target, if the target is a coboundary.
    pub fn solve_coboundary(&self, target: &ExtCocycle) -> Option<Vec<Matrix>> {
        self.check_ends(target);
        let x = self
            .phi
            .solve_canonical(&Matrix::column_vector(self.quotient.field(), &target.flat()))
            .ok()?;
        Some(super::system::unpack(
            self.quotient.field(),
            self.quotient.dims(),
            self.sub.dims(),
            x.data(),
        ))
    }
}

/// Matrix of Φ; its kernel is Hom(quotient, sub).
fn coboundary_matrix(quotient: &Rep, sub: &Rep) -> Matrix {
    let f = quotient.field();
    let mut sys = MapSystem::new(f, quotient.dims(), sub.dims());
    for (a, &(s, t)) in quotient.quiver().arrows().iter().enumerate() {
        let id_t = Matrix::identity(f, sub.dim(t));
        let id_s = Matrix::identity(f, quotient.dim(s));
        let neg_n = -sub.map(a);
        sys.equation(&[(t, &id_t, quotient.map(a)), (s, &neg_n, &id_s)]);
    }
    let m = sys.matrix();
    let cocycle_dim: usize = quotient
        .quiver()
        .arrows()
        .iter()
        .map(|&(s, t)| sub.dim(t) * quotient.dim(s))
        .sum();
    assert_eq!(m.rows(), cocycle_dim, "coboundary rows");
    m
}

//! Seeded samplers for objects, idempotents, morphisms and classes.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::basecat::{Backend, Category};
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::karoubi::{combine, solve_affine, Completion, FClass, KarMorphism, KarObject};
use crate::quiverrep::{hom_basis, ExtCocycle, Rep, RepMorphism};

/// Which idempotent objects to sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Want {
    Any,
    /// The idempotent splits in the base.
    Weak,
}

const RETRIES: usize = 64;

/// A sampler bound to one category and one random stream.
pub struct Generator<'a> {
    rng: ChaCha8Rng,
    tilde: &'a Completion,
    max_dim: usize,
}

impl<'a> Generator<'a> {
    pub fn new(rng: ChaCha8Rng, tilde: &'a Completion, max_dim: usize) -> Self {
        Generator { rng, tilde, max_dim }
    }

    pub fn completion(&self) -> &'a Completion {
        self.tilde
    }

    pub fn category(&self) -> &'a Category {
        self.tilde.base()
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    fn entry(&mut self) -> u32 {
        let p = self.category().field().p();
        self.rng.gen_range(0..p)
    }

    fn entries(&mut self, n: usize) -> Vec<u32> {
        (0..n).map(|_| self.entry()).collect()
    }

    fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        let data = self.entries(rows * cols);
        Matrix::from_vec(self.category().field(), rows, cols, data).expect("sized data")
    }

    fn invertible(&mut self, n: usize) -> Matrix {
        loop {
            let m = self.matrix(n, n);
            if m.rank() == n {
                return m;
            }
        }
    }

    fn raw_rep(&mut self, dims: &[usize]) -> Rep {
        let cat = self.category();
        let maps = cat
            .quiver()
            .arrows()
            .iter()
            .map(|&(s, t)| self.matrix(dims[t], dims[s]))
            .collect();
        Rep::new(cat.quiver().clone(), cat.field(), dims.to_vec(), maps).expect("shaped maps")
    }

    fn fits(&self, dims: &[usize]) -> bool {
        dims.iter().all(|&d| d <= self.max_dim)
    }

    /// Random summands whose sum is a member of the category.
    pub fn pieces(&mut self) -> Vec<Rep> {
        let cat = self.category();
        let n = cat.quiver().vertices();
        let piece_cap = self.max_dim.min(2);
        for _ in 0..RETRIES {
            let count = 1 + self.below(3);
            let mut pieces: Vec<Rep> = Vec::new();
            let mut total = vec![0usize; n];
            for _ in 0..count {
                let dims: Vec<usize> = (0..n).map(|_| self.below(piece_cap + 1)).collect();
                if dims.iter().all(|&d| d == 0) {
                    continue;
                }
                for (t, d) in total.iter_mut().zip(&dims) {
                    *t += d;
                }
                pieces.push(self.raw_rep(&dims));
            }
            if let Backend::Balanced { constraint } = cat.backend() {
                let mut value = constraint.value(&total);
                while value != 0 {
                    let Some(v) = (0..n).find(|&v| constraint.weights[v] == -value.signum()) else {
                        break;
                    };
                    value += constraint.weights[v];
                    total[v] += 1;
                    pieces.push(Rep::simple(cat.quiver().clone(), cat.field(), v));
                }
            }
            if self.fits(&total) && cat.membership(&self.sum(&pieces)) {
                return pieces;
            }
        }
        Vec::new()
    }

    fn sum(&self, pieces: &[Rep]) -> Rep {
        pieces
            .iter()
            .fold(self.category().zero_object(), |acc, p| acc.direct_sum(p))
    }

    fn projection(&self, pieces: &[Rep], keep: &[bool]) -> RepMorphism {
        let zero = self.category().zero_object();
        pieces
            .iter()
            .zip(keep)
            .fold(RepMorphism::identity(&zero), |acc, (p, &k)| {
                let block = if k {
                    RepMorphism::identity(p)
                } else {
                    RepMorphism::zero(p, p)
                };
                acc.direct_sum(&block)
            })
    }

    /// A random invertible change of basis at every vertex, as an isomorphism `a -> a'`.
    pub fn base_change(&mut self, a: &Rep) -> RepMorphism {
        let cat = self.category();
        let t: Vec<Matrix> = a.dims().iter().map(|&d| self.invertible(d)).collect();
        let t_inv: Vec<Matrix> = t.iter().map(|m| m.invert().expect("invertible")).collect();
        let maps = cat
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, &(s, tt))| &(&t[tt] * a.map(i)) * &t_inv[s])
            .collect();
        let moved = Rep::new(cat.quiver().clone(), cat.field(), a.dims().to_vec(), maps).expect("conjugated maps");
        RepMorphism::new(a.clone(), moved, t).expect("base change commutes")
    }

    /// A random element of `Hom(a, b)`.
    pub fn morphism(&mut self, a: &Rep, b: &Rep) -> RepMorphism {
        let mut acc = RepMorphism::zero(a, b);
        for m in hom_basis(a, b) {
            let c = self.entry();
            if c != 0 {
                acc = &acc + &m.scale(c);
            }
        }
        acc
    }

    /// A random automorphism, or the identity if none turns up.
    pub fn automorphism(&mut self, a: &Rep) -> RepMorphism {
        for _ in 0..RETRIES / 2 {
            let m = self.morphism(a, a);
            if m.is_iso() {
                return m;
            }
        }
        RepMorphism::identity(a)
    }

    /// A member of the category.
    pub fn object(&mut self) -> Rep {
        let pieces = self.pieces();
        let sum = self.sum(&pieces);
        self.base_change(&sum).dst().clone()
    }

    /// Projections onto the kept summands, all conjugated by one random
    /// automorphism followed by a change of basis.
    fn conjugated(&mut self, pieces: &[Rep], keeps: &[Vec<bool>]) -> Vec<RepMorphism> {
        let sum = self.sum(pieces);
        let c = self.automorphism(&sum);
        let c_inv = c.inverse().expect("automorphism");
        let t = self.base_change(&sum);
        let t_inv = t.inverse().expect("base change");
        keeps
            .iter()
            .map(|k| {
                let p = self.projection(pieces, k);
                &(&(&t * &c) * &p) * &(&c_inv * &t_inv)
            })
            .collect()
    }

    fn subsets(&self, pieces: &[Rep], want: Want) -> Vec<Vec<bool>> {
        let cat = self.category();
        (0..1usize << pieces.len())
            .map(|mask| (0..pieces.len()).map(|i| mask >> i & 1 == 1).collect::<Vec<bool>>())
            .filter(|keep| {
                want == Want::Any || {
                    let kept: Vec<Rep> = pieces
                        .iter()
                        .zip(keep)
                        .filter(|(_, &k)| k)
                        .map(|(p, _)| p.clone())
                        .collect();
                    cat.membership(&self.sum(&kept))
                }
            })
            .collect()
    }

    /// An object `(A, p)` with `p` conjugate to a projection onto summands.
    pub fn kar_object(&mut self, want: Want) -> KarObject {
        let pieces = self.pieces();
        let options = self.subsets(&pieces, want);
        let keep = options[self.below(options.len())].clone();
        let p = self.conjugated(&pieces, &[keep]).remove(0);
        KarObject::new(p.src().clone(), p).expect("conjugated projection")
    }

    /// An object `(A, p)` and an idempotent `σ` of it.
    pub fn nested_idempotents(&mut self) -> (KarObject, KarMorphism) {
        let pieces = self.pieces();
        let outer: Vec<bool> = (0..pieces.len()).map(|_| self.coin()).collect();
        let inner: Vec<bool> = outer.iter().map(|&o| o && self.coin()).collect();
        let mut ps = self.conjugated(&pieces, &[outer, inner]);
        let sigma = ps.pop().expect("two projections");
        let p = ps.pop().expect("two projections");
        let obj = KarObject::new(p.src().clone(), p).expect("conjugated projection");
        let sigma = KarMorphism::new(obj.clone(), obj.clone(), sigma).expect("nested projection");
        (obj, sigma)
    }

    /// A weak object `(A, p)` with a weak summand `(A, p₁)`, `p₁∘p = p₁`.
    pub fn weak_summand(&mut self) -> (KarObject, KarObject) {
        let pieces = self.pieces();
        let options = self.subsets(&pieces, Want::Weak);
        let outer = options[self.below(options.len())].clone();
        let inner: Vec<Vec<bool>> = options
            .iter()
            .filter(|k| k.iter().zip(&outer).all(|(&i, &o)| !i || o))
            .cloned()
            .collect();
        let inner = inner[self.below(inner.len())].clone();
        let mut ps = self.conjugated(&pieces, &[outer, inner]);
        let p1 = ps.pop().expect("two projections");
        let p = ps.pop().expect("two projections");
        let a = p.src().clone();
        (
            KarObject::new(a.clone(), p).expect("conjugated projection"),
            KarObject::new(a, p1).expect("conjugated projection"),
        )
    }

    pub fn kar_morphism(&mut self, a: &KarObject, b: &KarObject) -> KarMorphism {
        let basis = self.tilde.hom_basis(a, b);
        let coeffs = self.entries(basis.len());
        combine(self.category().field(), &basis, &coeffs, a, b)
    }

    /// A random kar morphism whose image under a linear map is `rhs`.
    pub fn kar_solution(
        &mut self,
        a: &KarObject,
        b: &KarObject,
        image: impl Fn(&KarMorphism) -> Vec<u32>,
        rhs: &[u32],
    ) -> Result<KarMorphism> {
        let basis = self.tilde.hom_basis(a, b);
        let columns: Vec<Vec<u32>> = basis.iter().map(&image).collect();
        let coeffs = self.affine_point(&columns, rhs)?;
        Ok(combine(self.category().field(), &basis, &coeffs, a, b))
    }

    /// A random point of `{c : Σ c_i·columns[i] = rhs}`.
    pub fn affine_point(&mut self, columns: &[Vec<u32>], rhs: &[u32]) -> Result<Vec<u32>> {
        let f = self.category().field();
        let (mut point, directions) =
            solve_affine(f, columns, rhs).ok_or_else(|| Error::Precondition("linear system has no solution".into()))?;
        for d in directions {
            let c = self.entry();
            for (x, y) in point.iter_mut().zip(&d) {
                *x = f.add(*x, f.mul(c, *y));
            }
        }
        Ok(point)
    }

    /// A random cocycle, not reduced.
    pub fn cocycle(&mut self, quotient: &Rep, sub: &Rep) -> ExtCocycle {
        let len = ExtCocycle::zero(quotient, sub).flat().len();
        let v = self.entries(len);
        ExtCocycle::from_flat(quotient, sub, &v)
    }

    /// A random class, nonzero three times in four when the group is nonzero.
    pub fn class(&mut self, zp: &KarObject, xq: &KarObject) -> FClass {
        let space = self.tilde.f_space(zp, xq);
        let force = self.below(4) != 0;
        for _ in 0..RETRIES {
            let coords = self.entries(space.dim());
            if !force || space.dim() == 0 || coords.iter().any(|&c| c != 0) {
                return space.element(&coords);
            }
        }
        space.zero()
    }
}

//! Brute-force enumeration over tiny fields, independent of the library's
//! elimination code. Each count is frozen below and compared with the library.

use std::collections::HashSet;

type Mat = Vec<Vec<u32>>;

/// A representation of the quiver with arrows `arrows`, as plain nested vectors.
#[derive(Clone)]
struct Plain {
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

fn mul(p: u32, a: &Mat, b: &Mat, rows: usize, inner: usize, cols: usize) -> Mat {
    let mut out = vec![vec![0; cols]; rows];
    for i in 0..rows {
        for j in 0..cols {
            let mut acc = 0;
            for k in 0..inner {
                acc += a[i][k] * b[k][j];
            }
            out[i][j] = acc % p;
        }
    }
    out
}

fn sub(p: u32, a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| (x + p - y) % p).collect())
        .collect()
}

/// All matrices of a given shape over F_p.
fn all_matrices(p: u32, rows: usize, cols: usize) -> Vec<Mat> {
    let n = rows * cols;
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut m = vec![vec![0; cols]; rows];
            for i in 0..rows {
                for j in 0..cols {
                    m[i][j] = (code % p as usize) as u32;
                    code /= p as usize;
                }
            }
            m
        })
        .collect()
}

/// All families of vertex maps `m_v -> n_v`.
fn all_vertex_maps(p: u32, m: &Plain, n: &Plain) -> Vec<Vec<Mat>> {
    let mut out: Vec<Vec<Mat>> = vec![vec![]];
    for v in 0..m.dims.len() {
        let choices = all_matrices(p, n.dims[v], m.dims[v]);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    out
}

fn commutes(p: u32, arrows: &[(usize, usize)], m: &Plain, n: &Plain, f: &[Mat]) -> bool {
    arrows.iter().enumerate().all(|(a, &(s, t))| {
        let left = mul(p, &n.maps[a], &f[s], n.dims[t], n.dims[s], m.dims[s]);
        let right = mul(p, &f[t], &m.maps[a], n.dims[t], m.dims[t], m.dims[s]);
        left == right
    })
}

fn log_p(p: u32, count: usize) -> usize {
    let mut d = 0;
    let mut c = 1;
    while c < count {
        c *= p as usize;
        d += 1;
    }
    assert_eq!(c, count, "count is not a power of p");
    d
}

fn hom_count(p: u32, arrows: &[(usize, usize)], m: &Plain, n: &Plain) -> usize {
    all_vertex_maps(p, m, n).iter().filter(|f| commutes(p, arrows, m, n, f)).count()
}

/// Coboundary `f_t·M_α − N_α·f_s` for every arrow.
fn coboundary(p: u32, arrows: &[(usize, usize)], m: &Plain, n: &Plain, f: &[Mat]) -> Vec<Mat> {
    arrows
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            let left = mul(p, &f[t], &m.maps[a], n.dims[t], m.dims[t], m.dims[s]);
            let right = mul(p, &n.maps[a], &f[s], n.dims[t], n.dims[s], m.dims[s]);
            sub(p, &left, &right)
        })
        .collect()
}

fn all_cocycles(p: u32, arrows: &[(usize, usize)], m: &Plain, n: &Plain) -> Vec<Vec<Mat>> {
    let mut out: Vec<Vec<Mat>> = vec![vec![]];
    for &(s, t) in arrows {
        let choices = all_matrices(p, n.dims[t], m.dims[s]);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    out
}

fn coboundaries(p: u32, arrows: &[(usize, usize)], m: &Plain, n: &Plain) -> HashSet<Vec<Mat>> {
    all_vertex_maps(p, m, n)
        .iter()
        .map(|f| coboundary(p, arrows, m, n, f))
        .collect()
}

fn ext_dim(p: u32, arrows: &[(usize, usize)], m: &Plain, n: &Plain) -> usize {
    let cocycles = all_cocycles(p, arrows, m, n).len();
    let bounds = coboundaries(p, arrows, m, n).len();
    log_p(p, cocycles / bounds)
}

/// Dimension of the image of `β ↦ q·β·p` on classes (quotient idempotent `pq`, sub idempotent `qs`).
fn idempotent_ext_dim(p: u32, arrows: &[(usize, usize)], m: &Plain, n: &Plain, pq: &[Mat], qs: &[Mat]) -> usize {
    let bounds = coboundaries(p, arrows, m, n);
    let mut classes: HashSet<Vec<Vec<Mat>>> = HashSet::new();
    for beta in all_cocycles(p, arrows, m, n) {
        let moved: Vec<Mat> = arrows
            .iter()
            .zip(&beta)
            .map(|(&(s, t), b)| {
                let left = mul(p, &qs[t], b, n.dims[t], n.dims[t], m.dims[s]);
                mul(p, &left, &pq[s], n.dims[t], m.dims[s], m.dims[s])
            })
            .collect();
        let mut coset: Vec<Vec<Mat>> = bounds
            .iter()
            .map(|c| {
                moved
                    .iter()
                    .zip(c)
                    .map(|(x, y)| x.iter().zip(y).map(|(r, s)| r.iter().zip(s).map(|(a, b)| (a + b) % p).collect()).collect())
                    .collect()
            })
            .collect();
        coset.sort();
        classes.insert(coset);
    }
    log_p(p, classes.len())
}

/// Dimension of `{σ : σ·p = σ = q·σ}` inside Hom(m, n).
fn idempotent_hom_dim(p: u32, arrows: &[(usize, usize)], m: &Plain, n: &Plain, pm: &[Mat], qn: &[Mat]) -> usize {
    let count = all_vertex_maps(p, m, n)
        .iter()
        .filter(|f| commutes(p, arrows, m, n, f))
        .filter(|f| {
            (0..m.dims.len()).all(|v| {
                let right = mul(p, &f[v], &pm[v], n.dims[v], m.dims[v], m.dims[v]);
                let left = mul(p, &qn[v], &f[v], n.dims[v], n.dims[v], m.dims[v]);
                right == f[v] && left == f[v]
            })
        })
        .count();
    log_p(p, count)
}

const A2: &[(usize, usize)] = &[(0, 1)];

fn s1() -> Plain {
    Plain { dims: vec![1, 0], maps: vec![vec![]] }
}

fn s2() -> Plain {
    Plain { dims: vec![0, 1], maps: vec![vec![vec![]]] }
}

fn p1() -> Plain {
    Plain { dims: vec![1, 1], maps: vec![vec![vec![1]]] }
}

fn g() -> Plain {
    Plain { dims: vec![1, 1], maps: vec![vec![vec![0]]] }
}

fn e() -> Vec<Mat> {
    vec![vec![vec![1]], vec![vec![0]]]
}

fn f() -> Vec<Mat> {
    vec![vec![vec![0]], vec![vec![1]]]
}

// Values frozen from the enumeration above.
const HOM_S1_S1: usize = 1;
const HOM_S1_S2: usize = 0;
const HOM_G_G: usize = 2;
const EXT_S1_S2: usize = 1;
const EXT_S2_S1: usize = 0;
const EXT_G_G: usize = 1;
const F_GE_GF: usize = 1;
const F_GF_GE: usize = 0;
const KHOM_GE_GE: usize = 1;
const KHOM_GE_GF: usize = 0;

#[test]
fn enumeration_matches_frozen_values() {
    assert_eq!(log_p(2, hom_count(2, A2, &s1(), &s1())), HOM_S1_S1);
    assert_eq!(log_p(2, hom_count(2, A2, &s1(), &s2())), HOM_S1_S2);
    assert_eq!(log_p(2, hom_count(2, A2, &g(), &g())), HOM_G_G);
    assert_eq!(ext_dim(2, A2, &s1(), &s2()), EXT_S1_S2);
    assert_eq!(ext_dim(2, A2, &s2(), &s1()), EXT_S2_S1);
    assert_eq!(ext_dim(2, A2, &g(), &g()), EXT_G_G);
    assert_eq!(idempotent_ext_dim(2, A2, &g(), &g(), &e(), &f()), F_GE_GF);
    assert_eq!(idempotent_ext_dim(2, A2, &g(), &g(), &f(), &e()), F_GF_GE);
    assert_eq!(idempotent_hom_dim(2, A2, &g(), &g(), &e(), &e()), KHOM_GE_GE);
    assert_eq!(idempotent_hom_dim(2, A2, &g(), &g(), &e(), &f()), KHOM_GE_GF);
}

#[test]
fn projective_has_no_extensions_up_to_dims_two() {
    for d0 in 0..=2 {
        for d1 in 0..=2 {
            for arrow in all_matrices(2, d1, d0) {
                let m = Plain { dims: vec![d0, d1], maps: vec![arrow] };
                assert_eq!(ext_dim(2, A2, &p1(), &m), 0);
            }
        }
    }
}

mod library {
    use super::*;
    use extri_core::exactlin::{Matrix, PrimeField};
    use extri_core::karoubi::{f_space, kar_hom_basis, KarObject};
    use extri_core::quiverrep::{hom_basis, ExtSpace, Quiver, Rep, RepMorphism};
    use std::sync::Arc;

    fn lift(p: u32, r: &Plain) -> Rep {
        let field = PrimeField::new(p).unwrap();
        let q = Arc::new(Quiver::linear(r.dims.len()));
        let maps = A2
            .iter()
            .zip(&r.maps)
            .map(|(&(s, t), m)| {
                let data = m.iter().flatten().copied().collect();
                Matrix::from_vec(field, r.dims[t], r.dims[s], data).unwrap()
            })
            .collect();
        Rep::new(q, field, r.dims.clone(), maps).unwrap()
    }

    fn endo(rep: &Rep, maps: &[Mat]) -> RepMorphism {
        let field = rep.field();
        let maps = maps
            .iter()
            .enumerate()
            .map(|(v, m)| Matrix::from_vec(field, rep.dim(v), rep.dim(v), m.iter().flatten().copied().collect()).unwrap())
            .collect();
        RepMorphism::new(rep.clone(), rep.clone(), maps).unwrap()
    }

    #[test]
    fn library_agrees_with_enumeration() {
        let (s1, s2, g) = (lift(2, &s1()), lift(2, &s2()), lift(2, &g()));
        assert_eq!(hom_basis(&s1, &s1).len(), HOM_S1_S1);
        assert_eq!(hom_basis(&s1, &s2).len(), HOM_S1_S2);
        assert_eq!(hom_basis(&g, &g).len(), HOM_G_G);
        assert_eq!(ExtSpace::new(&s1, &s2).dim(), EXT_S1_S2);
        assert_eq!(ExtSpace::new(&s2, &s1).dim(), EXT_S2_S1);
        assert_eq!(ExtSpace::new(&g, &g).dim(), EXT_G_G);
        let ge = KarObject::new(g.clone(), endo(&g, &e())).unwrap();
        let gf = KarObject::new(g.clone(), endo(&g, &f())).unwrap();
        assert_eq!(f_space(&ge, &gf).dim(), F_GE_GF);
        assert_eq!(f_space(&gf, &ge).dim(), F_GF_GE);
        assert_eq!(kar_hom_basis(&ge, &ge).len(), KHOM_GE_GE);
        assert_eq!(kar_hom_basis(&ge, &gf).len(), KHOM_GE_GF);
    }

    #[test]
    fn library_agrees_on_random_small_reps_over_f3() {
        // Every A2 rep with dims at most (1,1) over F_3, all pairs.
        let mut reps = Vec::new();
        for d0 in 0..=1 {
            for d1 in 0..=1 {
                for arrow in all_matrices(3, d1, d0) {
                    reps.push(Plain { dims: vec![d0, d1], maps: vec![arrow] });
                }
            }
        }
        for m in &reps {
            for n in &reps {
                let (lm, ln) = (lift(3, m), lift(3, n));
                assert_eq!(hom_basis(&lm, &ln).len(), log_p(3, hom_count(3, A2, m, n)));
                assert_eq!(ExtSpace::new(&lm, &ln).dim(), ext_dim(3, A2, m, n));
            }
        }
    }
}

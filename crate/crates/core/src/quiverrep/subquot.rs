//! Images and quotients.

use crate::error::{Error, Result};
use crate::exactlin::{LinalgError, Matrix};

use super::{Rep, RepMorphism};

/// Canonical `X` with `a·X = b`, column by column.
pub fn solve_left(a: &Matrix, b: &Matrix) -> Result<Matrix, LinalgError> {
    let mut out = Matrix::zeros(a.field(), a.cols(), b.cols());
    for j in 0..b.cols() {
        let col = a.solve_canonical(&Matrix::column_vector(a.field(), &b.column(j)))?;
        for i in 0..a.cols() {
            out.set(i, j, col.get(i, 0));
        }
    }
    Ok(out)
}

/// Image of `f` with its inclusion and corestriction, `f = inclusion ∘ corestriction`.
pub fn image_subrep(f: &RepMorphism) -> (Rep, RepMorphism, RepMorphism) {
    let n = f.dst();
    let q = n.quiver().clone();
    let incl: Vec<Matrix> = f.maps().iter().map(Matrix::column_space_basis).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| solve_left(&incl[t], &(n.map(a) * &incl[s])).expect("images are subrepresentations"))
        .collect();
    let dims = incl.iter().map(Matrix::cols).collect();
    let image = Rep::new(q, n.field(), dims, maps).expect("image is well formed");
    let cores = incl
        .iter()
        .zip(f.maps())
        .map(|(i, m)| solve_left(i, m).expect("f factors through its image"))
        .collect();
    let inclusion = RepMorphism::unchecked(image.clone(), n.clone(), incl);
    let corestriction = RepMorphism::unchecked(f.src().clone(), image.clone(), cores);
    (image, inclusion, corestriction)
}

/// Quotient of `c` by the image of an injective morphism, with the projection.
pub fn quotient_rep(c: &Rep, sub_inclusion: &RepMorphism) -> Result<(Rep, RepMorphism)> {
    if sub_inclusion.dst() != c {
        return Err(Error::Shape("inclusion does not land in the representation".into()));
    }
    if !sub_inclusion.is_injective() {
        return Err(Error::Precondition("quotient by a non-injective map".into()));
    }
    let q = c.quiver().clone();
    let f = c.field();
    let mut complements = Vec::new();
    let mut projections = Vec::new();
    for (v, inc) in sub_inclusion.maps().iter().enumerate() {
        let k = Matrix::complement_basis(inc, c.dim(v))?;
        let t_inv = inc.hstack(&k).invert()?;
        projections.push(t_inv.submatrix(inc.cols(), k.cols(), 0, c.dim(v)));
        complements.push(k);
    }
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| &(&projections[t] * c.map(a)) * &complements[s])
        .collect();
    let dims = complements.iter().map(Matrix::cols).collect();
    let quotient = Rep::new(q, f, dims, maps)?;
    let projection = RepMorphism::new(c.clone(), quotient.clone(), projections)
        .map_err(|e| Error::Assertion(format!("quotient projection: {e}")))?;
    Ok((quotient, projection))
}

//! Semilinear groups of a field, `SL_2`, and restriction of scalars.

use std::sync::Arc;

use super::field::{Elem, Field};
use super::group::{ClosedGroup, MatrixGroup, Subgroup};
use super::matrix::Matrix;
use super::ModError;

/// `Γ(r^n)` acting on `GF(r^n)` viewed as `GF(r)^n` through the basis
/// `1, x, ..., x^(n-1)`, together with its multiplication subgroup `Γ₀`.
#[derive(Debug, Clone)]
pub struct GammaGroup {
    pub r: u32,
    pub n: u32,
    pub full: ClosedGroup,
    pub multiplicative: Subgroup,
}

fn linear_map(ext: &Field, image: impl Fn(Elem) -> Elem) -> Matrix {
    let x = ext.generator_x();
    let columns: Vec<Vec<Elem>> = (0..ext.degree())
        .map(|j| ext.coeffs(image(ext.pow(x, j as u64))))
        .collect();
    Matrix::from_columns(&columns)
}

/// Generators: multiplication by the primitive element, then `y -> y^r`.
pub fn gamma_generators(r: u32, n: u32) -> Result<MatrixGroup, ModError> {
    let ext = Field::new(r, n, None)?;
    let omega = ext.primitive_element();
    let mult = linear_map(&ext, |y| ext.mul(omega, y));
    let frob = linear_map(&ext, |y| ext.frobenius(y));
    MatrixGroup::new(Arc::new(Field::prime(r)?), n as usize, vec![mult, frob])
}

pub fn gamma_group(r: u32, n: u32) -> Result<GammaGroup, ModError> {
    let full = gamma_generators(r, n)?.close()?;
    let mult = full.generator_indices()[0];
    let multiplicative = full.subgroup(&[mult]);
    Ok(GammaGroup {
        r,
        n,
        full,
        multiplicative,
    })
}

/// `SL_2(F)` from `diag(w, w^-1)` and the two elementary transvections.
pub fn sl2(field: Arc<Field>) -> Result<MatrixGroup, ModError> {
    let w = field.primitive_element();
    let w_inv = field.inv(w).expect("primitive element is non-zero");
    let gens = vec![
        Matrix::from_rows(vec![vec![w, 0], vec![0, w_inv]]),
        Matrix::from_rows(vec![vec![1, 1], vec![0, 1]]),
        Matrix::from_rows(vec![vec![1, 0], vec![1, 1]]),
    ]
    .into_iter()
    .map(|m| m.expect("2x2"))
    .collect();
    MatrixGroup::new(field, 2, gens)
}

/// Views `GF(p^k)^m` as `GF(p)^(km)`: every entry `a` becomes the `k × k`
/// matrix of `y -> a y` in the basis `1, x, ..., x^(k-1)`, so a vector's
/// coordinates are the coefficient lists of its entries, concatenated.
pub fn blow_up(group: &MatrixGroup) -> Result<MatrixGroup, ModError> {
    let ext = group.field();
    let k = ext.degree() as usize;
    let m = group.dim();
    let prime = Arc::new(Field::prime(ext.characteristic())?);
    if k == 1 {
        return MatrixGroup::new(prime, m, group.generators().to_vec())
            .map(|g| g.with_cap(group.cap()));
    }
    let gens = group
        .generators()
        .iter()
        .map(|g| {
            let mut rows = vec![vec![0; k * m]; k * m];
            for bi in 0..m {
                for bj in 0..m {
                    let a = g.get(bi, bj);
                    let block = linear_map(ext, |y| ext.mul(a, y));
                    for i in 0..k {
                        for j in 0..k {
                            rows[bi * k + i][bj * k + j] = block.get(i, j);
                        }
                    }
                }
            }
            Matrix::from_rows(rows).expect("square")
        })
        .collect();
    MatrixGroup::new(prime, k * m, gens).map(|g| g.with_cap(group.cap()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_orders() {
        for (r, n, full, mult) in [(2, 3, 21, 7), (3, 2, 16, 8), (5, 1, 4, 4), (2, 1, 1, 1)] {
            let g = gamma_group(r, n).unwrap();
            assert_eq!(g.full.order(), full, "({r},{n})");
            assert_eq!(g.multiplicative.order(), mult, "({r},{n})");
        }
    }

    #[test]
    fn multiplications_normal_and_fixed_point_free() {
        let g = gamma_group(2, 3).unwrap();
        let all: Vec<usize> = (0..g.full.order()).collect();
        assert!(g.full.normalizes(&all, &g.multiplicative));
        let f = g.full.field();
        for &m in &g.multiplicative.members()[1..] {
            for i in 1..8 {
                let v = super::super::matrix::vector_at(i, 3, f);
                assert_ne!(g.full.element(m).apply(&v, f), v);
            }
        }
    }

    #[test]
    fn sl2_8_and_its_blow_up() {
        let f = Arc::new(Field::new(2, 3, None).unwrap());
        let g = sl2(f).unwrap();
        assert_eq!(g.close().unwrap().order(), 504);
        let b = blow_up(&g).unwrap();
        assert_eq!(b.dim(), 6);
        assert_eq!(b.field().order(), 2);
        assert_eq!(b.close().unwrap().order(), 504);
    }
}

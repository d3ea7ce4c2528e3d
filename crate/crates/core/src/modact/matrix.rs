//! Dense square matrices and vectors over a [`Field`].
//!
//! Matrices act on column vectors. Vectors of `F^n` are indexed by the
//! integer whose base-`|F|` digits are the coordinates, first coordinate
//! least significant.

use super::field::{Elem, Field};

/// Row-major square matrix. The derived ordering is lexicographic on the
/// entries and is the canonical order used in reports.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    n: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Option<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Self {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Self { n, data }
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<Elem>]) -> Self {
        let n = columns.len();
        let mut data = vec![0; n * n];
        for (j, col) in columns.iter().enumerate() {
            for (i, &v) in col.iter().enumerate() {
                data[i * n + j] = v;
            }
        }
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> Elem {
        self.data[row * self.n + col]
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.data.chunks(self.n).map(<[Elem]>::to_vec).collect()
    }

    /// Big-endian bytes of the entries, row by row.
    pub fn encode(&self) -> Vec<u8> {
        self.data.iter().flat_map(|e| e.to_be_bytes()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Matrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.data[k * n + j];
                    if b != 0 {
                        let cell = &mut data[i * n + j];
                        *cell = f.add(*cell, f.mul(a, b));
                    }
                }
            }
        }
        Matrix { n, data }
    }

    pub fn apply(&self, v: &[Elem], f: &Field) -> Vec<Elem> {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(0, |acc, j| f.add(acc, f.mul(self.data[i * self.n + j], v[j])))
            })
            .collect()
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self, f: &Field) -> Option<Matrix> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r * n + col] != 0)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let scale = f.inv(a[col * n + col]).expect("pivot is non-zero");
            for j in 0..n {
                a[col * n + j] = f.mul(a[col * n + j], scale);
                inv[col * n + j] = f.mul(inv[col * n + j], scale);
            }
            for r in 0..n {
                let factor = a[r * n + col];
                if r == col || factor == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                    inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
                }
            }
        }
        Some(Matrix { n, data: inv })
    }
}

pub fn vector_index(v: &[Elem], f: &Field) -> usize {
    v.iter()
        .rev()
        .fold(0usize, |acc, &c| acc * f.order() as usize + c as usize)
}

pub fn vector_at(mut index: usize, dim: usize, f: &Field) -> Vec<Elem> {
    let q = f.order() as usize;
    (0..dim)
        .map(|_| {
            let c = (index % q) as Elem;
            index /= q;
            c
        })
        .collect()
}

/// Reduced row-echelon basis of a subspace, grown one vector at a time.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Subspace {
    // rows in reduced echelon form, with their pivot columns
    rows: Vec<(usize, Vec<Elem>)>,
}

impl Subspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Elem], f: &Field) -> Vec<Elem> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Elem], f: &Field) -> bool {
        self.reduce(v, f).iter().all(|&x| x == 0)
    }

    /// Adds `v`, returning whether the dimension grew.
    pub fn insert(&mut self, v: &[Elem], f: &Field) -> bool {
        let mut v = self.reduce(v, f);
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let scale = f.inv(v[pivot]).expect("non-zero pivot");
        for x in v.iter_mut() {
            *x = f.mul(*x, scale);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        self.rows.push((pivot, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

    pub fn basis(&self) -> Vec<Vec<Elem>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let f = Field::new(3, 1, None).unwrap();
        let m = Matrix::from_rows(vec![vec![1, 2], vec![0, 1]]).unwrap();
        let inv = m.inverse(&f).unwrap();
        assert!(m.mul(&inv, &f).is_identity());
        let singular = Matrix::from_rows(vec![vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(singular.inverse(&f), None);
    }

    #[test]
    fn vector_indexing() {
        let f = Field::new(3, 1, None).unwrap();
        assert_eq!(vector_at(1, 2, &f), vec![1, 0]);
        assert_eq!(vector_at(3, 2, &f), vec![0, 1]);
        for i in 0..9 {
            assert_eq!(vector_index(&vector_at(i, 2, &f), &f), i);
        }
    }

    #[test]
    fn subspace_growth() {
        let f = Field::new(2, 1, None).unwrap();
        let mut s = Subspace::new();
        assert!(s.insert(&[1, 1, 0], &f));
        assert!(s.insert(&[0, 1, 1], &f));
        assert!(!s.insert(&[1, 0, 1], &f));
        assert!(s.contains(&[1, 0, 1], &f));
        assert_eq!(s.dim(), 2);
        assert_eq!(s.basis(), vec![vec![1, 0, 1], vec![0, 1, 1]]);
    }
}

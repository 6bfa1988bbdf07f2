//! Dense exact linear algebra over a [`Field`]: reduced row echelon form,
//! kernels and subspaces.

use crate::field::{Field, FieldElement};

pub type Vector = Vec<FieldElement>;

/// Reduced row echelon form of `rows` (each of length `width`), zero rows dropped.
/// Pivots are the first nonzero entry in each column scan.
pub fn rref(mut rows: Vec<Vector>, width: usize) -> Vec<Vector> {
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for v in rows[rank].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

fn pivot_column(row: &[FieldElement]) -> usize {
    row.iter().position(|x| !x.is_zero()).expect("nonzero row")
}

/// Basis of `{a : M a = 0}` for `M` given by its rows.
pub fn kernel(field: Field, rows: Vec<Vector>, width: usize) -> Vec<Vector> {
    let reduced = rref(rows, width);
    let pivots: Vec<usize> = reduced.iter().map(|r| pivot_column(r)).collect();
    let mut basis = Vec::new();
    for free in (0..width).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); width];
        v[free] = field.one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            v[p] = row[free].neg();
        }
        basis.push(v);
    }
    basis
}

/// A subspace of `k^D`, stored as the nonzero rows of its reduced row echelon
/// basis (pivot columns strictly increasing).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
}

impl Subspace {
    pub fn span(field: Field, ambient: usize, vectors: Vec<Vector>) -> Subspace {
        let vectors = vectors
            .into_iter()
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        Subspace {
            field,
            ambient,
            rows: rref(vectors, ambient),
        }
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace {
            field,
            ambient,
            rows,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        rref(rows, self.ambient).len() == self.rows.len()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.sum(other).dimension() == self.dimension()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Subspace::span(self.field, self.ambient, rows)
    }

    /// Zassenhaus: reduce `[u | u]` and `[w | 0]`; rows `[0 | z]` span the intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let d = self.ambient;
        let zero = self.field.zero();
        let mut rows = Vec::with_capacity(self.rows.len() + other.rows.len());
        for u in &self.rows {
            let mut r = u.clone();
            r.extend(u.iter().cloned());
            rows.push(r);
        }
        for w in &other.rows {
            let mut r = w.clone();
            r.extend(std::iter::repeat_n(zero.clone(), d));
            rows.push(r);
        }
        let reduced = rref(rows, 2 * d);
        let meet = reduced
            .into_iter()
            .filter(|r| r[..d].iter().all(FieldElement::is_zero))
            .map(|r| r[d..].to_vec())
            .collect();
        Subspace::span(self.field, d, meet)
    }
}

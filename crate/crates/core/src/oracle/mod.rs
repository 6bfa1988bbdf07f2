//! Linear-algebra model of an Artinian quotient `A = R/J`.
//!
//! `A` is represented by its standard-monomial basis together with one
//! multiplication matrix per variable. Everything here (ideal images,
//! products, powers, annihilators, lengths) is derived from those matrices by
//! exact row reduction. Gröbner machinery enters only through the single-step
//! normal forms `NF(x_i · b_j)` that fill the matrices, which keeps this module
//! an independent check on the colon, intersection and power routines.

mod linalg;

use std::collections::HashMap;

pub use linalg::{kernel, rref, Subspace, Vector};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::groebner::{normal_form, Ideal};
use crate::hilbert::{HilbertTable, TableKind};
use crate::ideal_ops::QuotientRing;
use crate::poly::{Monomial, Polynomial};

type Matrix = Vec<Vector>;

/// Multiplication matrices of `A` over its standard-monomial basis.
#[derive(Clone, Debug)]
pub struct VectorSpaceModel {
    field: Field,
    basis: Vec<Monomial>,
    /// `mult[i][r][c]`: coefficient of `basis[r]` in `x_i · basis[c]`.
    mult: Vec<Matrix>,
}

fn mat_vec(m: &Matrix, v: &[FieldElement], field: Field) -> Vector {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(field.zero(), |acc, (a, b)| &acc + &(a * b))
        })
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix, field: Field) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    (0..n).fold(field.zero(), |acc, k| {
                        if a[r][k].is_zero() || b[k][c].is_zero() {
                            acc
                        } else {
                            &acc + &(&a[r][k] * &b[k][c])
                        }
                    })
                })
                .collect()
        })
        .collect()
}

impl VectorSpaceModel {
    /// Builds the model and checks that the multiplication matrices commute.
    pub fn build(quotient: &QuotientRing) -> Result<VectorSpaceModel> {
        let ring = quotient.ring();
        let field = ring.field();
        let gb = quotient.defining().gb();
        let basis = quotient.standard_monomials().to_vec();
        let d = basis.len();
        let index: HashMap<&[u32], usize> = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.exponents(), i))
            .collect();
        let n = ring.nvars();
        let mut mult = Vec::with_capacity(n);
        for var in 0..n {
            let x = Monomial::var_power(n, var, 1);
            let mut m = vec![vec![field.zero(); d]; d];
            for (c, b) in basis.iter().enumerate() {
                let image = normal_form(&Polynomial::monomial(ring, b.mul(&x)), gb);
                for t in image.terms() {
                    let r = *index.get(t.monomial.exponents()).ok_or_else(|| {
                        Error::internal("normal form left the standard-monomial span")
                    })?;
                    m[r][c] = t.coeff.clone();
                }
            }
            mult.push(m);
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if mat_mul(&mult[i], &mult[j], field) != mat_mul(&mult[j], &mult[i], field) {
                    return Err(Error::internal(format!(
                        "multiplication matrices of {} and {} do not commute",
                        ring.vars()[i],
                        ring.vars()[j]
                    )));
                }
            }
        }
        Ok(VectorSpaceModel { field, basis, mult })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn multiplication_matrix(&self, var: usize) -> &[Vector] {
        &self.mult[var]
    }

    pub fn apply_var(&self, var: usize, v: &[FieldElement]) -> Vector {
        mat_vec(&self.mult[var], v, self.field)
    }

    fn apply_monomial(&self, m: &Monomial, v: &[FieldElement]) -> Vector {
        let mut out = v.to_vec();
        for (var, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                out = self.apply_var(var, &out);
            }
        }
        out
    }

    /// The coordinate vector of `1`.
    pub fn unit_vector(&self) -> Vector {
        let mut v = vec![self.field.zero(); self.dimension()];
        if let Some(pos) = self.basis.iter().position(Monomial::is_one) {
            v[pos] = self.field.one();
        }
        v
    }

    /// Coordinates of the image of `f` in `A`, computed as `f(M)·1`.
    pub fn coordinates(&self, f: &Polynomial) -> Vector {
        let one = self.unit_vector();
        let mut acc = vec![self.field.zero(); self.dimension()];
        for t in f.terms() {
            let image = self.apply_monomial(&t.monomial, &one);
            for (a, b) in acc.iter_mut().zip(&image) {
                if !b.is_zero() {
                    *a = &*a + &(&t.coeff * b);
                }
            }
        }
        acc
    }

    /// The product `a · v` of two elements of `A`.
    pub fn multiply(&self, a: &[FieldElement], v: &[FieldElement]) -> Vector {
        let mut acc = vec![self.field.zero(); self.dimension()];
        for (coeff, b) in a.iter().zip(&self.basis) {
            if coeff.is_zero() {
                continue;
            }
            let image = self.apply_monomial(b, v);
            for (x, y) in acc.iter_mut().zip(&image) {
                if !y.is_zero() {
                    *x = &*x + &(coeff * y);
                }
            }
        }
        acc
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dimension())
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dimension())
    }

    fn span(&self, vectors: Vec<Vector>) -> Subspace {
        Subspace::span(self.field, self.dimension(), vectors)
    }

    /// Whether `v` is stable under every multiplication matrix (an ideal of `A`).
    pub fn is_ideal(&self, v: &Subspace) -> bool {
        v.rows()
            .iter()
            .all(|row| (0..self.mult.len()).all(|var| v.contains(&self.apply_var(var, row))))
    }

    /// Smallest multiplication-stable subspace containing `v`.
    fn ideal_closure(&self, mut v: Subspace) -> Subspace {
        loop {
            let mut vectors: Vec<Vector> = v.rows().to_vec();
            for row in v.rows() {
                for var in 0..self.mult.len() {
                    vectors.push(self.apply_var(var, row));
                }
            }
            let next = self.span(vectors);
            if next.dimension() == v.dimension() {
                return v;
            }
            v = next;
        }
    }

    /// The image of `K` in `A`.
    pub fn subspace_of_ideal(&self, ideal: &Ideal) -> Subspace {
        let gens = ideal
            .generators()
            .iter()
            .map(|g| self.coordinates(g))
            .collect();
        self.ideal_closure(self.span(gens))
    }

    /// `{a ∈ A : a·V = 0}`.
    pub fn annihilator(&self, v: &Subspace) -> Result<Subspace> {
        if !self.is_ideal(v) {
            return Err(Error::usage(
                "annihilator of a subspace that is not an ideal",
            ));
        }
        let d = self.dimension();
        // rows of the stacked maps a ↦ a·v_k; column j holds basis_j · v_k
        let mut rows: Vec<Vector> = Vec::with_capacity(d * v.dimension());
        for vk in v.rows() {
            let columns: Vec<Vector> = self
                .basis
                .iter()
                .map(|b| self.apply_monomial(b, vk))
                .collect();
            for r in 0..d {
                rows.push(columns.iter().map(|col| col[r].clone()).collect());
            }
        }
        Ok(self.span(kernel(self.field, rows, d)))
    }

    /// `V · W`, spanned by pairwise products of basis vectors.
    pub fn product(&self, v: &Subspace, w: &Subspace) -> Subspace {
        let mut vectors = Vec::with_capacity(v.dimension() * w.dimension());
        for a in v.rows() {
            for b in w.rows() {
                vectors.push(self.multiply(a, b));
            }
        }
        self.span(vectors)
    }

    /// `V^k` with `V^0 = A`.
    pub fn power(&self, v: &Subspace, k: u32) -> Subspace {
        let mut acc = self.full_space();
        for step in 0..k {
            acc = if step == 0 {
                v.clone()
            } else {
                self.product(v, &acc)
            };
        }
        acc
    }

    /// Powers `V^0, V^1, ..., V^(δ+1) = 0`. Fails unless `V` is nilpotent.
    pub fn power_chain(&self, v: &Subspace) -> Result<Vec<Subspace>> {
        if !self.is_ideal(v) {
            return Err(Error::usage("powers of a subspace that is not an ideal"));
        }
        let mut chain = vec![self.full_space()];
        let mut current = v.clone();
        loop {
            let done = current.is_zero();
            chain.push(current.clone());
            if done {
                return Ok(chain);
            }
            if chain.len() > self.dimension() + 1 {
                return Err(Error::precondition("subspace is not nilpotent"));
            }
            current = self.product(v, &current);
        }
    }

    /// `H(K, i) = dim K^i − dim K^(i+1)` for the image of `K` in `A`.
    pub fn filtration_hilbert(&self, ideal: &Ideal) -> Result<HilbertTable> {
        let v = self.subspace_of_ideal(ideal);
        if v.dimension() == self.dimension() {
            return Err(Error::usage("the ideal is not proper in the quotient"));
        }
        let chain = self.power_chain(&v)?;
        let values = chain
            .windows(2)
            .map(|w| w[0].dimension() - w[1].dimension())
            .collect();
        HilbertTable::new(values, TableKind::FiltrationQuotients)
    }
}

pub fn build_model(quotient: &QuotientRing) -> Result<VectorSpaceModel> {
    VectorSpaceModel::build(quotient)
}

pub fn oracle_length(v: &Subspace) -> usize {
    v.dimension()
}

//! Ideal arithmetic: sums, products, powers, intersections, colons, and
//! Artinian quotients with their socles.
//!
//! Ideals of a quotient `R/J` are represented by their preimages in `R`, so
//! `0 :_{R/J} K` is computed as `J : K` and every routine runs on one
//! Gröbner engine.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{ensure_same_ring, normal_form, Ideal};
use crate::poly::{monomials_of_degree, Monomial, Polynomial, Ring};

/// Drops zeros, makes generators monic and removes duplicates (by printed form).
fn clean_generators(gens: impl IntoIterator<Item = Polynomial>) -> Vec<Polynomial> {
    let mut seen = HashSet::new();
    gens.into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .filter(|g| seen.insert(g.to_string()))
        .collect()
}

fn ideal_from_clean(ring: &Arc<Ring>, gens: impl IntoIterator<Item = Polynomial>) -> Ideal {
    Ideal::new(ring, clean_generators(gens)).expect("generators from the same ring")
}

/// `I + J`.
pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    ensure_same_ring(a, b)?;
    Ok(ideal_from_clean(
        a.ring(),
        a.generators().iter().chain(b.generators()).cloned(),
    ))
}

/// `I·J`, generated by pairwise products.
pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    ensure_same_ring(a, b)?;
    let products = a
        .generators()
        .iter()
        .flat_map(|f| b.generators().iter().map(move |g| f.mul_unchecked(g)));
    Ok(ideal_from_clean(a.ring(), products))
}

/// `I^k` with `I^0 = (1)`.
pub fn ideal_power(ideal: &Ideal, k: u32) -> Ideal {
    let ring = ideal.ring();
    let mut acc = Ideal::unit(ring);
    for step in 0..k {
        if step > 0 {
            // the reduced basis of the previous power keeps generator counts small
            acc = acc.reduced();
        }
        acc = ideal_product(&acc, ideal).expect("same ring");
    }
    acc
}

/// `m^i` for `m = (x_1, ..., x_n)`: all monomials of total degree `i`.
pub fn irrelevant_power(ring: &Arc<Ring>, i: u32) -> Ideal {
    let gens = monomials_of_degree(ring.nvars(), i)
        .into_iter()
        .map(|m| Polynomial::monomial(ring, m))
        .collect();
    Ideal::new(ring, gens).expect("same ring")
}

/// The maximal ideal `m = (x_1, ..., x_n)`.
pub fn irrelevant_ideal(ring: &Arc<Ring>) -> Ideal {
    irrelevant_power(ring, 1)
}

/// `I ∩ J` by elimination: the `t`-free part of `<t·I, (1−t)·J>` under a
/// block order with a fresh greatest variable `t`.
pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    ensure_same_ring(a, b)?;
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if a.is_unit() {
        return Ok(b.reduced());
    }
    if b.is_unit() {
        return Ok(a.reduced());
    }
    let ext = ring.with_elimination_var();
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = Polynomial::one(&ext).add_unchecked(&t.neg());
    let mut gens = Vec::with_capacity(a.gb().len() + b.gb().len());
    for f in a.gb() {
        gens.push(f.embed_prepended(&ext, 1).mul_unchecked(&t));
    }
    for g in b.gb() {
        gens.push(g.embed_prepended(&ext, 1).mul_unchecked(&one_minus_t));
    }
    let elim = Ideal::new(&ext, gens)?;
    let kept: Vec<Polynomial> = elim
        .gb()
        .iter()
        .filter_map(|g| g.project_dropping(ring, 1))
        .collect();
    Ideal::new(ring, kept)
}

/// `I : f = (I ∩ (f)) / f`, with the division checked to be exact.
fn colon_by_element(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let ring = ideal.ring();
    let principal = Ideal::new(ring, vec![f.clone()])?;
    let meet = ideal_intersect(ideal, &principal)?;
    let mut quotients = Vec::with_capacity(meet.generators().len());
    for g in meet.generators() {
        let q = g.div_exact(f).ok_or_else(|| {
            Error::internal(format!(
                "intersection generator {g} is not divisible by {f}"
            ))
        })?;
        quotients.push(q);
    }
    Ok(ideal_from_clean(ring, quotients))
}

/// `I : J = {g : gJ ⊆ I}`, as the intersection of `I : f` over the generators `f` of `J`.
pub fn colon(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    ensure_same_ring(ideal, by)?;
    if by.generators().iter().all(Polynomial::is_zero) {
        return Err(Error::usage("colon by the zero ideal"));
    }
    let ring = ideal.ring();
    // I : f depends only on f modulo I
    let mut seen = HashSet::new();
    let reduced: Vec<Polynomial> = by
        .generators()
        .iter()
        .map(|f| normal_form(f, ideal.gb()).monic())
        .filter(|f| !f.is_zero())
        .filter(|f| seen.insert(f.to_string()))
        .collect();
    let mut acc: Option<Ideal> = None;
    for f in &reduced {
        let part = colon_by_element(ideal, f)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => ideal_intersect(&prev, &part)?,
        });
    }
    Ok(match acc {
        Some(result) => ideal_from_clean(ring, result.gb().iter().cloned()),
        None => Ideal::unit(ring),
    })
}

/// An Artinian quotient `R/J` together with its standard-monomial basis.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    defining: Ideal,
    standard: Vec<Monomial>,
}

/// Monomials outside the leading-monomial ideal of `gb`, ascending in the ring order.
///
/// Fails if some variable has no pure power among the leading monomials.
fn standard_monomials(ring: &Arc<Ring>, gb: &[Polynomial]) -> Result<Vec<Monomial>> {
    let leads: Vec<&Monomial> = gb.iter().filter_map(Polynomial::leading_monomial).collect();
    if leads.iter().any(|m| m.is_one()) {
        return Ok(Vec::new());
    }
    for (j, name) in ring.vars().iter().enumerate() {
        if !leads.iter().any(|m| m.pure_power_var() == Some(j)) {
            return Err(Error::precondition(format!(
                "quotient is not Artinian: no leading monomial is a pure power of {name}"
            )));
        }
    }
    let n = ring.nvars();
    let is_standard = |m: &Monomial| !leads.iter().any(|l| l.divides(m));
    let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut frontier = vec![Monomial::one(n)];
    found.insert(Monomial::one(n).exponents().to_vec());
    while let Some(m) = frontier.pop() {
        for j in 0..n {
            let next = m.mul(&Monomial::var_power(n, j, 1));
            if is_standard(&next) && found.insert(next.exponents().to_vec()) {
                frontier.push(next);
            }
        }
    }
    let order = ring.order();
    let mut out: Vec<Monomial> = found.into_iter().map(Monomial::new).collect();
    out.sort_by(|a, b| order.cmp(a, b));
    Ok(out)
}

impl QuotientRing {
    /// `R/J`; fails with a precondition error when the quotient is not Artinian.
    pub fn new(defining: &Ideal) -> Result<QuotientRing> {
        let standard = standard_monomials(defining.ring(), defining.gb())?;
        Ok(QuotientRing {
            defining: defining.reduced(),
            standard,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.defining.ring()
    }

    /// The defining ideal `J`, with its reduced basis as generators.
    pub fn defining(&self) -> &Ideal {
        &self.defining
    }

    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.standard
    }

    /// `ℓ(R/J)`.
    pub fn length(&self) -> usize {
        self.standard.len()
    }

    /// Whether `J` is homogeneous (its reduced basis consists of forms).
    pub fn is_homogeneous(&self) -> bool {
        self.defining.gb().iter().all(Polynomial::is_homogeneous)
    }

    pub fn maximal_ideal(&self) -> Ideal {
        irrelevant_ideal(self.ring())
    }

    /// The preimage `J + K` of the image of `K` in `R/J`.
    pub fn lift(&self, ideal: &Ideal) -> Result<Ideal> {
        ideal_sum(&self.defining, ideal)
    }

    /// `0 :_{R/J} m`, as the ambient ideal `J : m`.
    pub fn socle(&self) -> Result<Ideal> {
        colon(&self.defining, &self.maximal_ideal())
    }

    /// Dimension of the socle, `ℓ(R/J) − ℓ(R/(J : m))`.
    pub fn socle_dimension(&self) -> Result<usize> {
        let socle = self.socle()?;
        let outside = standard_monomials(self.ring(), socle.gb())?.len();
        Ok(self.length() - outside)
    }

    /// One-dimensional socle.
    pub fn is_gorenstein(&self) -> Result<bool> {
        Ok(self.socle_dimension()? == 1)
    }
}

pub fn make_quotient(defining: &Ideal) -> Result<QuotientRing> {
    QuotientRing::new(defining)
}

//! Normal forms, Buchberger's algorithm and reduced Gröbner bases.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::poly::{check_same_ring, Polynomial, Ring, Term};

/// Full reduction of `f` by `basis`.
///
/// Repeatedly rewrites the greatest reducible term using the first element of
/// `basis` (in listed order) whose leading monomial divides it. The result has
/// no term divisible by any leading monomial of `basis`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut rest = f.clone();
    let mut remainder: Vec<Term> = Vec::new();
    while let Some(lead) = rest.leading_term() {
        let divisor = basis.iter().find(|g| {
            g.leading_monomial()
                .is_some_and(|m| m.divides(&lead.monomial))
        });
        match divisor {
            Some(g) => {
                let glead = g.leading_term().expect("nonzero divisor");
                let m = lead.monomial.div(&glead.monomial).expect("divisible");
                let c = lead
                    .coeff
                    .try_div(&glead.coeff)
                    .expect("nonzero leading coefficient");
                rest = rest.sub_mul_term(&c, &m, g);
            }
            None => {
                remainder.push(lead.clone());
                rest = rest.without_leading_term();
            }
        }
    }
    Polynomial::from_sorted_terms(f.ring(), remainder)
}

/// `(L/lt(f))·f − (L/lt(g))·g` with `L` the lcm of the leading monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (Some(a), Some(b)) = (f.leading_term(), g.leading_term()) else {
        return Polynomial::zero(f.ring());
    };
    let lcm = a.monomial.lcm(&b.monomial);
    let ma = lcm.div(&a.monomial).expect("lcm divisible");
    let mb = lcm.div(&b.monomial).expect("lcm divisible");
    let ca = a.coeff.inv().expect("nonzero leading coefficient");
    let cb = b.coeff.inv().expect("nonzero leading coefficient");
    f.mul_term(&ca, &ma).sub_mul_term(&cb, &mb, g)
}

/// Tuning switches for [`buchberger_with`].
#[derive(Clone, Copy, Debug)]
pub struct BuchbergerOptions {
    /// Skip pairs covered by Buchberger's chain criterion.
    pub chain_criterion: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            chain_criterion: true,
        }
    }
}

/// A Gröbner basis of the ideal generated by `gens` (not necessarily reduced).
pub fn buchberger(gens: &[Polynomial]) -> Vec<Polynomial> {
    buchberger_with(gens, BuchbergerOptions::default())
}

pub fn buchberger_with(gens: &[Polynomial], options: BuchbergerOptions) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(Polynomial::monic)
        .collect();
    if let Some(unit) = basis.iter().find(|g| g.is_unit()) {
        return vec![unit.clone()];
    }
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push((i, j));
        }
    }
    let mut pending_set: HashSet<(usize, usize)> = pending.iter().copied().collect();

    let lcm_degree = |basis: &[Polynomial], (i, j): (usize, usize)| {
        let a = basis[i].leading_monomial().expect("nonzero");
        let b = basis[j].leading_monomial().expect("nonzero");
        a.lcm(b).degree()
    };

    while !pending.is_empty() {
        // normal strategy: least lcm degree, ties by pair index
        let (pos, _) = pending
            .iter()
            .enumerate()
            .min_by_key(|(_, &pair)| (lcm_degree(&basis, pair), pair))
            .expect("nonempty");
        let (i, j) = pending.swap_remove(pos);
        pending_set.remove(&(i, j));

        let lm_i = basis[i].leading_monomial().expect("nonzero");
        let lm_j = basis[j].leading_monomial().expect("nonzero");
        if lm_i.is_coprime(lm_j) {
            continue;
        }
        if options.chain_criterion {
            let lcm = lm_i.lcm(lm_j);
            let key = |a: usize, b: usize| (a.min(b), a.max(b));
            let covered = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && !pending_set.contains(&key(i, k))
                    && !pending_set.contains(&key(j, k))
                    && basis[k].leading_monomial().is_some_and(|m| m.divides(&lcm))
            });
            if covered {
                continue;
            }
        }

        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if r.is_unit() {
            return vec![r];
        }
        let new = basis.len();
        basis.push(r);
        for k in 0..new {
            pending.push((k, new));
            pending_set.insert((k, new));
        }
    }
    basis
}

/// Autoreduces `basis`: every element is made monic and replaced by its normal
/// form against the others until nothing changes. The output generates the same
/// ideal; when `basis` is a Gröbner basis it is the reduced Gröbner basis,
/// sorted by descending leading monomial.
pub fn reduce_gb(basis: &[Polynomial]) -> Vec<Polynomial> {
    let Some(first) = basis.first() else {
        return Vec::new();
    };
    let order = first.ring().order();
    let mut elems: Vec<Polynomial> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(Polynomial::monic)
        .collect();
    if let Some(unit) = elems.iter().find(|g| g.is_unit()) {
        return vec![unit.clone()];
    }
    let mut changed = true;
    while changed {
        changed = false;
        let mut idx = 0;
        while idx < elems.len() {
            let g = elems.swap_remove(idx);
            let r = normal_form(&g, &elems).monic();
            if r.is_zero() {
                changed = true;
                continue;
            }
            if r.is_unit() {
                return vec![r];
            }
            if r != g {
                changed = true;
            }
            // restore position so the scan order is stable
            elems.push(r);
            let last = elems.len() - 1;
            elems.swap(idx, last);
            idx += 1;
        }
    }
    elems.sort_by(|a, b| {
        order.cmp(
            b.leading_monomial().expect("nonzero"),
            a.leading_monomial().expect("nonzero"),
        )
    });
    elems
}

/// An ideal of a polynomial ring; its reduced Gröbner basis is computed on
/// first use and cached.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            check_same_ring(ring, g.ring())?;
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            gb: OnceLock::new(),
        })
    }

    /// Parses each generator in `ring`.
    pub fn parse<S: AsRef<str>>(ring: &Arc<Ring>, generators: &[S]) -> Result<Ideal> {
        let gens = generators
            .iter()
            .map(|g| Polynomial::parse(g.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("no generators")
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// An ideal whose generators are already known to be its reduced Gröbner basis.
    pub(crate) fn from_reduced_gb(ring: &Arc<Ring>, gb: Vec<Polynomial>) -> Ideal {
        let cell = OnceLock::new();
        let _ = cell.set(gb.clone());
        Ideal {
            ring: ring.clone(),
            generators: gb,
            gb: cell,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The reduced Gröbner basis.
    pub fn gb(&self) -> &[Polynomial] {
        self.gb
            .get_or_init(|| reduce_gb(&buchberger(&self.generators)))
    }

    pub fn is_zero(&self) -> bool {
        self.gb().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().first().is_some_and(Polynomial::is_unit)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, f.ring())?;
        Ok(normal_form(f, self.gb()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        check_same_ring(&self.ring, &other.ring)?;
        Ok(other
            .generators
            .iter()
            .all(|g| normal_form(g, self.gb()).is_zero()))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        check_same_ring(&self.ring, &other.ring)?;
        Ok(self.gb() == other.gb())
    }

    /// The reduced basis viewed as a fresh ideal with those generators.
    pub fn reduced(&self) -> Ideal {
        Ideal::from_reduced_gb(&self.ring, self.gb().to_vec())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.equals(b)
}

/// Checks that every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    (0..basis.len())
        .all(|j| (0..j).all(|i| normal_form(&s_polynomial(&basis[i], &basis[j]), basis).is_zero()))
}

pub(crate) fn ensure_same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    check_same_ring(&a.ring, &b.ring)
        .map_err(|_| Error::usage("ideals live in different polynomial rings"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::MonomialOrder;

    fn ring(field: Field) -> Arc<Ring> {
        Ring::new(&["x", "y"], field, MonomialOrder::DegRevLex).unwrap()
    }

    fn p(s: &str, r: &Arc<Ring>) -> Polynomial {
        Polynomial::parse(s, r).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let q = ring(Field::Rationals);
        assert!(normal_form(&p("x^2", &q), &[p("x", &q)]).is_zero());
        let r = normal_form(&p("x^2*y + y", &q), &[p("x^2 - 1", &q)]);
        assert_eq!(r, p("2*y", &q));
    }

    #[test]
    fn s_polynomial_examples() {
        let q = ring(Field::Rationals);
        assert!(s_polynomial(&p("x^2", &q), &p("y^2", &q)).is_zero());
        let f = p("x^2 + 3*y", &q);
        assert!(s_polynomial(&f, &f).is_zero());

        let f2 = ring(Field::prime(2).unwrap());
        let f = p("x^2+y^2", &f2);
        let g = p("x*y+y^2+y^3", &f2);
        let s = s_polynomial(&f, &g);
        let lcm = f
            .leading_monomial()
            .unwrap()
            .lcm(g.leading_monomial().unwrap());
        assert_eq!(
            f2.order().cmp(s.leading_monomial().unwrap(), &lcm),
            std::cmp::Ordering::Less
        );
    }

    #[test]
    fn buchberger_examples() {
        let q = ring(Field::Rationals);
        let gb = reduce_gb(&buchberger(&[p("x^2", &q), p("y^2", &q)]));
        assert_eq!(gb, vec![p("x^2", &q), p("y^2", &q)]);
        assert!(buchberger(&[]).is_empty());
        assert!(reduce_gb(&[]).is_empty());
    }

    #[test]
    fn reduction_examples() {
        let q = ring(Field::Rationals);
        assert_eq!(
            reduce_gb(&[p("x^2", &q), p("x^2+y^2", &q)]),
            vec![p("x^2", &q), p("y^2", &q)]
        );
        assert_eq!(reduce_gb(&[p("2*x", &q)]), vec![p("x", &q)]);
    }

    #[test]
    fn membership_and_equality() {
        let q = ring(Field::Rationals);
        let i = Ideal::parse(&q, &["x^2", "y^2"]).unwrap();
        assert!(i.contains(&p("x^2*y", &q)).unwrap());
        assert!(!i.contains(&p("x", &q)).unwrap());

        let a = Ideal::parse(&q, &["x", "y"]).unwrap();
        let b = Ideal::parse(&q, &["y", "x+y"]).unwrap();
        assert!(a.equals(&b).unwrap());
        let c = Ideal::parse(&q, &["x"]).unwrap();
        let d = Ideal::parse(&q, &["x^2"]).unwrap();
        assert!(!c.equals(&d).unwrap());
    }

    #[test]
    fn unit_and_zero_ideals() {
        let q = ring(Field::Rationals);
        assert!(Ideal::unit(&q).is_unit());
        assert!(Ideal::zero(&q).is_zero());
        let i = Ideal::parse(&q, &["x + 1", "x"]).unwrap();
        assert!(i.is_unit());
    }

    #[test]
    fn chain_criterion_does_not_change_the_answer() {
        let q = ring(Field::Rationals);
        let gens = vec![p("x^3 - 2*x*y", &q), p("x^2*y - 2*y^2 + x", &q)];
        let with = reduce_gb(&buchberger_with(
            &gens,
            BuchbergerOptions {
                chain_criterion: true,
            },
        ));
        let without = reduce_gb(&buchberger_with(
            &gens,
            BuchbergerOptions {
                chain_criterion: false,
            },
        ));
        assert_eq!(with, without);
        // the classic example has reduced basis (x^2, xy, y^2 - x/2)
        assert_eq!(with, vec![p("x^2", &q), p("x*y", &q), p("y^2 - 1/2*x", &q)]);
    }

    #[test]
    fn mixed_rings_rejected() {
        let q = ring(Field::Rationals);
        let f = ring(Field::prime(5).unwrap());
        assert!(Ideal::new(&q, vec![p("x", &f)]).is_err());
        let i = Ideal::parse(&q, &["x"]).unwrap();
        assert!(i.contains(&p("x", &f)).is_err());
    }
}

//! Polynomial rings, sparse polynomials and their canonical text form.

mod monomial;
mod order;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

pub use monomial::{monomials_of_degree, Monomial};
pub use order::MonomialOrder;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// `k[x_1, ..., x_n]` with a fixed monomial order, `x_1 > x_2 > ... > x_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ring {
    vars: Vec<String>,
    field: Field,
    order: MonomialOrder,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], field: Field, order: MonomialOrder) -> Result<Arc<Ring>> {
        if vars.is_empty() {
            return Err(Error::usage("a ring needs at least one variable"));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().trim().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::usage(format!("invalid variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::usage(format!("duplicate variable {v:?}")));
            }
        }
        Ok(Arc::new(Ring { vars, field, order }))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring {
            vars: self.vars.clone(),
            field: self.field,
            order,
        })
    }

    /// This ring with one extra variable prepended as the greatest, under `Elim(1)`.
    pub(crate) fn with_elimination_var(&self) -> Arc<Ring> {
        let mut name = String::from("t");
        while self.vars.contains(&name) {
            name.push('_');
        }
        let mut vars = vec![name];
        vars.extend(self.vars.iter().cloned());
        Arc::new(Ring {
            vars,
            field: self.field,
            order: MonomialOrder::Elim(1),
        })
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::usage("operands live in different polynomial rings"))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub coeff: FieldElement,
    pub monomial: Monomial,
}

/// A sparse polynomial: nonzero terms strictly descending in the ring's order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: FieldElement) -> Self {
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn term(ring: &Arc<Ring>, c: FieldElement, monomial: Monomial) -> Self {
        debug_assert_eq!(monomial.nvars(), ring.nvars());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term { coeff: c, monomial }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<Ring>, monomial: Monomial) -> Self {
        Self::term(ring, ring.field().one(), monomial)
    }

    pub fn var(ring: &Arc<Ring>, index: usize) -> Self {
        Self::monomial(ring, Monomial::var_power(ring.nvars(), index, 1))
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<(FieldElement, Monomial)>) -> Result<Self> {
        let field = ring.field();
        let order = ring.order();
        let mut terms: Vec<Term> = terms
            .into_iter()
            .map(|(coeff, monomial)| {
                if coeff.field() != field {
                    return Err(Error::usage("coefficient from a different field"));
                }
                if monomial.nvars() != ring.nvars() {
                    return Err(Error::usage("monomial with wrong variable count"));
                }
                Ok(Term { coeff, monomial })
            })
            .collect::<Result<_>>()?;
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = &last.coeff + &t.coeff;
                }
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Ok(Polynomial {
            ring: ring.clone(),
            terms: merged,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Whether this is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// True iff all terms share one total degree. The zero polynomial counts as
    /// homogeneous (of no particular degree).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.monomial.degree();
                self.terms.iter().all(|s| s.monomial.degree() == d)
            }
        }
    }

    /// The common degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            Some(self.terms[0].monomial.degree())
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        Ok(self.combine(other, None))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        Ok(self.combine(other, Some(&self.ring.field().one().neg())))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Polynomial> {
        if c.field() != self.ring.field() {
            return Err(Error::usage("scalar from a different field"));
        }
        Ok(self.scale_unchecked(c))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.neg(),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..exp {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// The polynomial divided by its leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale_unchecked(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<Term>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn without_leading_term(mut self) -> Polynomial {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
        self
    }

    /// `self * c * m`.
    pub(crate) fn mul_term(&self, c: &FieldElement, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    monomial: t.monomial.mul(m),
                })
                .collect(),
        }
    }

    pub(crate) fn scale_unchecked(&self, c: &FieldElement) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub(crate) fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, None)
    }

    /// `self - c * m * g`, merged in one pass.
    pub(crate) fn sub_mul_term(
        &self,
        c: &FieldElement,
        m: &Monomial,
        g: &Polynomial,
    ) -> Polynomial {
        let scaled = g.mul_term(&c.neg(), m);
        self.combine(&scaled, None)
    }

    /// `self + factor * other` (factor defaults to 1).
    fn combine(&self, other: &Polynomial, factor: Option<&FieldElement>) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let scaled = |t: &Term| match factor {
            Some(f) => Term {
                coeff: &t.coeff * f,
                monomial: t.monomial.clone(),
            },
            None => t.clone(),
        };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.cmp(&a.monomial, &b.monomial) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(scaled(b));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = match factor {
                        Some(f) => &a.coeff + &(&b.coeff * f),
                        None => &a.coeff + &b.coeff,
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            monomial: a.monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(scaled));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(&self.ring);
        for t in &other.terms {
            acc = acc.add_unchecked(&self.mul_term(&t.coeff, &t.monomial));
        }
        acc
    }

    /// Exact quotient `self / divisor`; `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let lead = divisor.leading_term()?;
        let lead_inv = lead.coeff.inv().ok()?;
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some(t) = rest.leading_term() {
            let m = t.monomial.div(&lead.monomial)?;
            let c = &t.coeff * &lead_inv;
            rest = rest.sub_mul_term(&c, &m, divisor);
            quotient.push(Term {
                coeff: c,
                monomial: m,
            });
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: quotient,
        })
    }

    /// Maps into `target`, which has `extra` new variables prepended.
    pub(crate) fn embed_prepended(&self, target: &Arc<Ring>, extra: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| (t.coeff.clone(), t.monomial.prepend_zeros(extra)))
            .collect();
        Polynomial::from_terms(target, terms).expect("embedding preserves the field")
    }

    /// Maps back from a ring with `extra` prepended variables; `None` if any
    /// term involves them.
    pub(crate) fn project_dropping(&self, target: &Arc<Ring>, extra: usize) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.monomial.drop_leading(extra).map(|m| (t.coeff.clone(), m)))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial::from_terms(target, terms).expect("projection preserves the field"))
    }

    /// Reinterprets the polynomial in a ring with the same variables and field
    /// but possibly another order.
    pub fn reorder(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        if target.vars() != self.ring.vars() || target.field() != self.ring.field() {
            return Err(Error::usage("reorder needs the same variables and field"));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| (t.coeff.clone(), t.monomial.clone()))
            .collect();
        Polynomial::from_terms(target, terms)
    }

    pub fn parse(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
        parse::parse_polynomial(text, ring)
    }
}

/// Canonical form: descending terms, `^` for powers, `*` between factors,
/// unit coefficients omitted.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let c = t.coeff.abs();
            if t.monomial.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", t.monomial.display(vars))?;
            } else {
                write!(f, "{c}*{}", t.monomial.display(vars))?;
            }
        }
        Ok(())
    }
}

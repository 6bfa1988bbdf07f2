//! Hilbert functions of Artinian quotients: graded pieces `ℓ(S_i)` and
//! filtration quotients `H(I,i) = ℓ(I^i / I^(i+1))`.
//!
//! All lengths are standard-monomial counts against reduced Gröbner bases.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideal_ops::{ideal_product, ideal_sum, make_quotient, QuotientRing};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TableKind {
    /// `ℓ(S_i)` for a standard graded quotient.
    GradedPieces,
    /// `ℓ(I^i / I^(i+1))` for an ideal filtration.
    FiltrationQuotients,
}

/// Lengths indexed `0..=δ`; the last entry is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HilbertTable {
    values: Vec<usize>,
    kind: TableKind,
}

impl HilbertTable {
    pub fn new(values: Vec<usize>, kind: TableKind) -> Result<HilbertTable> {
        match values.last() {
            None => Err(Error::usage("a Hilbert table needs at least one entry")),
            Some(0) => Err(Error::usage(
                "the top entry of a Hilbert table must be nonzero",
            )),
            Some(_) => Ok(HilbertTable { values, kind }),
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn delta(&self) -> usize {
        self.values.len() - 1
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }
}

impl fmt::Display for HilbertTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// `ℓ(R/J)`, the number of standard monomials of `J`.
pub fn length_of_quotient(ideal: &Ideal) -> Result<usize> {
    Ok(make_quotient(ideal)?.length())
}

/// Graded Hilbert function of a homogeneous Artinian quotient.
pub fn graded_hilbert(quotient: &QuotientRing) -> Result<HilbertTable> {
    if !quotient.is_homogeneous() {
        return Err(Error::precondition("defining ideal is not homogeneous"));
    }
    if quotient.length() == 0 {
        return Err(Error::precondition("quotient is the zero ring"));
    }
    let top = quotient
        .standard_monomials()
        .iter()
        .map(|m| m.degree() as usize)
        .max()
        .expect("nonempty staircase");
    let mut values = vec![0; top + 1];
    for m in quotient.standard_monomials() {
        values[m.degree() as usize] += 1;
    }
    HilbertTable::new(values, TableKind::GradedPieces)
}

/// Preimages `J + I^k` for `k = 0, 1, ..., δ+1`. The first entry is the unit
/// ideal and the last equals `J`.
///
/// Fails if `I` is not proper in `R/J`, or if no power of `I` up to `ℓ(R/J)+1`
/// vanishes (so `I` is not primary to a maximal ideal of a local quotient).
pub fn filtration_powers(quotient: &QuotientRing, ideal: &Ideal) -> Result<Vec<Ideal>> {
    let defining = quotient.defining();
    let first = quotient.lift(ideal)?;
    if first.is_unit() {
        return Err(Error::usage("the ideal is not proper in the quotient"));
    }
    let mut powers = vec![Ideal::unit(quotient.ring())];
    let mut current = first.reduced();
    let limit = quotient.length() + 1;
    loop {
        let done = current.equals(defining)?;
        powers.push(current.clone());
        if done {
            return Ok(powers);
        }
        if powers.len() > limit {
            return Err(Error::precondition(
                "ideal is not nilpotent in the quotient (not primary to the maximal ideal)",
            ));
        }
        // J + I^(k+1) = J + (J + I^k)·I
        let next = ideal_sum(defining, &ideal_product(&current, ideal)?)?;
        current = next.reduced();
    }
}

/// `δ = max{i : I^i ≠ 0}` in `R/J`.
pub fn nilpotency_index(quotient: &QuotientRing, ideal: &Ideal) -> Result<usize> {
    Ok(filtration_powers(quotient, ideal)?.len() - 2)
}

/// Lengths `ℓ(A/I^k)` for `k = 0..=δ+1`, from [`filtration_powers`].
pub fn filtration_colengths(powers: &[Ideal]) -> Result<Vec<usize>> {
    powers.iter().map(length_of_quotient).collect()
}

/// `H(I,i) = ℓ(A/I^(i+1)) − ℓ(A/I^i)` for `i = 0..=δ`.
pub fn filtration_hilbert(quotient: &QuotientRing, ideal: &Ideal) -> Result<HilbertTable> {
    let powers = filtration_powers(quotient, ideal)?;
    let colengths = filtration_colengths(&powers)?;
    table_from_colengths(&colengths)
}

pub(crate) fn table_from_colengths(colengths: &[usize]) -> Result<HilbertTable> {
    let values = colengths.windows(2).map(|w| w[1] - w[0]).collect();
    HilbertTable::new(values, TableKind::FiltrationQuotients)
}

/// `values[i] == values[δ-i]` for all `i`.
pub fn is_symmetric(table: &HilbertTable) -> bool {
    let v = table.values();
    v.iter().eq(v.iter().rev())
}

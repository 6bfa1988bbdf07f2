//! Verifiers for the colon-ideal identities.
//!
//! * [`verify_macaulay_ladder`]: for a homogeneous complete intersection `I` in
//!   `n` variables with degrees `d_1..d_n` and `δ = Σd_i − n`, checks
//!   `I : m^i = I + m^(δ+1−i)` for `i = 0..=δ+1`.
//! * [`verify_symmetry`]: the graded Hilbert function of a standard graded
//!   Artinian Gorenstein quotient is symmetric.
//! * [`verify_main_equivalence`]: in an Artinian Gorenstein local quotient with
//!   `δ = max{i : I^i ≠ 0}`, `0 : I^i = I^(δ+1−i)` for all `i ≤ δ` exactly when
//!   `H(I,i) = H(I,δ−i)` for all `i ≤ δ`.
//! * [`verify_corollary`]: the special case `I = m` of a standard graded quotient.

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::Ideal;
use crate::hilbert::{
    filtration_colengths, filtration_powers, graded_hilbert, is_symmetric, table_from_colengths,
    HilbertTable,
};
use crate::ideal_ops::{
    colon, ideal_sum, irrelevant_ideal, irrelevant_power, make_quotient, QuotientRing,
};
use crate::poly::{monomials_of_degree, MonomialOrder, Polynomial, Ring};

/// One rung `i` of a colon ladder.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rung {
    pub i: usize,
    pub lhs_gb_size: usize,
    pub rhs_gb_size: usize,
    pub equal: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LadderReport {
    pub delta: usize,
    pub rungs: Vec<Rung>,
    pub holds: bool,
}

impl LadderReport {
    fn from_rungs(delta: usize, rungs: Vec<Rung>) -> LadderReport {
        let holds = rungs.iter().all(|r| r.equal);
        LadderReport {
            delta,
            rungs,
            holds,
        }
    }

    /// Indices of rungs where the two sides differ.
    pub fn failures(&self) -> Vec<usize> {
        self.rungs
            .iter()
            .filter(|r| !r.equal)
            .map(|r| r.i)
            .collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivalenceReport {
    pub delta: usize,
    /// Rungs `0 : I^i` vs `I^(δ+1−i)` for `i = 0..=δ`.
    pub ladder: LadderReport,
    pub ladder_holds: bool,
    pub table: HilbertTable,
    pub symmetric: bool,
    /// `ladder_holds == symmetric`.
    pub consistent: bool,
    /// `ℓ(A/I^i)` for `i = 0..=δ+1`.
    pub colengths: Vec<usize>,
}

fn rung(i: usize, lhs: &Ideal, rhs: &Ideal) -> Result<Rung> {
    Ok(Rung {
        i,
        lhs_gb_size: lhs.gb().len(),
        rhs_gb_size: rhs.gb().len(),
        equal: lhs.equals(rhs)?,
    })
}

/// Checks the hypotheses of the complete-intersection ladder and returns the
/// ideal, its quotient and the generator degrees.
fn complete_intersection(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
) -> Result<(Ideal, QuotientRing, Vec<u32>)> {
    let n = ring.nvars();
    if gens.len() != n {
        return Err(Error::precondition(format!(
            "expected {n} generators for {n} variables, got {}",
            gens.len()
        )));
    }
    let mut degrees = Vec::with_capacity(n);
    for g in gens {
        if g.ring().as_ref() != ring.as_ref() {
            return Err(Error::usage("generator from a different ring"));
        }
        match g.homogeneous_degree() {
            Some(d) if d > 0 => degrees.push(d),
            Some(_) => {
                return Err(Error::precondition(format!(
                    "generator {g} has degree 0; generators must lie in m"
                )))
            }
            None if g.is_zero() => return Err(Error::precondition("zero generator")),
            None => {
                return Err(Error::precondition(format!(
                    "generator {g} is not homogeneous"
                )))
            }
        }
    }
    let ideal = Ideal::new(ring, gens.to_vec())?;
    let quotient = make_quotient(&ideal)?;
    Ok((ideal, quotient, degrees))
}

/// `δ = Σd_i − n`.
pub fn socle_degree(degrees: &[u32]) -> usize {
    degrees.iter().map(|&d| d as usize).sum::<usize>() - degrees.len()
}

/// Checks `I : m^i = I + m^(δ+1−i)` for `i = 0..=δ+1`.
pub fn verify_macaulay_ladder(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<LadderReport> {
    let (ideal, _, degrees) = complete_intersection(ring, gens)?;
    let delta = socle_degree(&degrees);
    let mut rungs = Vec::with_capacity(delta + 2);
    for i in 0..=delta + 1 {
        let lhs = colon(&ideal, &irrelevant_power(ring, i as u32))?;
        let rhs = ideal_sum(&ideal, &irrelevant_power(ring, (delta + 1 - i) as u32))?;
        rungs.push(rung(i, &lhs, &rhs)?);
    }
    Ok(LadderReport::from_rungs(delta, rungs))
}

/// True iff the top degree of the graded Hilbert function of `R/I` is
/// `Σd_i − n` and the top value is 1.
pub fn check_delta_identity(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<bool> {
    let (_, quotient, degrees) = complete_intersection(ring, gens)?;
    let table = graded_hilbert(&quotient)?;
    Ok(table.delta() == socle_degree(&degrees) && table.values()[table.delta()] == 1)
}

fn graded_gorenstein(defining: &Ideal) -> Result<QuotientRing> {
    let quotient = make_quotient(defining)?;
    if !quotient.is_homogeneous() {
        return Err(Error::precondition("defining ideal is not homogeneous"));
    }
    if !quotient.is_gorenstein()? {
        return Err(Error::precondition(format!(
            "quotient is not Gorenstein (socle dimension {})",
            quotient.socle_dimension()?
        )));
    }
    Ok(quotient)
}

/// Graded Hilbert function of a standard graded Artinian Gorenstein quotient and
/// whether it is symmetric.
pub fn verify_symmetry(defining: &Ideal) -> Result<(HilbertTable, bool)> {
    let quotient = graded_gorenstein(defining)?;
    let table = graded_hilbert(&quotient)?;
    let symmetric = is_symmetric(&table);
    Ok((table, symmetric))
}

/// Checks `0 : I^i = I^(δ+1−i)` for `i = 0..=δ` against the symmetry of
/// `H(I, ·)` in a Gorenstein quotient.
pub fn verify_main_equivalence(
    quotient: &QuotientRing,
    ideal: &Ideal,
) -> Result<EquivalenceReport> {
    if !quotient.is_gorenstein()? {
        return Err(Error::precondition(format!(
            "quotient is not Gorenstein (socle dimension {})",
            quotient.socle_dimension()?
        )));
    }
    let defining = quotient.defining();
    let powers = filtration_powers(quotient, ideal)?;
    let delta = powers.len() - 2;
    let mut rungs = Vec::with_capacity(delta + 1);
    for i in 0..=delta {
        let lhs = colon(defining, &powers[i])?;
        rungs.push(rung(i, &lhs, &powers[delta + 1 - i])?);
    }
    let ladder = LadderReport::from_rungs(delta, rungs);
    let colengths = filtration_colengths(&powers)?;
    let table = table_from_colengths(&colengths)?;
    let symmetric = is_symmetric(&table);
    Ok(EquivalenceReport {
        delta,
        ladder_holds: ladder.holds,
        consistent: ladder.holds == symmetric,
        ladder,
        table,
        symmetric,
        colengths,
    })
}

/// Checks `0 : m^i = m^(δ+1−i)` for `i = 0..=δ` in a standard graded
/// Artinian Gorenstein quotient.
pub fn verify_corollary(defining: &Ideal) -> Result<LadderReport> {
    let quotient = graded_gorenstein(defining)?;
    let ring = quotient.ring();
    let delta = graded_hilbert(&quotient)?.delta();
    let j = quotient.defining();
    let mut rungs = Vec::with_capacity(delta + 1);
    for i in 0..=delta {
        let lhs = colon(j, &irrelevant_power(ring, i as u32))?;
        let rhs = ideal_sum(j, &irrelevant_power(ring, (delta + 1 - i) as u32))?;
        rungs.push(rung(i, &lhs, &rhs)?);
    }
    Ok(LadderReport::from_rungs(delta, rungs))
}

/// The Hilbert series published for the Storch example, `1 + 2λ + λ^2 + λ^3`.
pub const PUBLISHED_STORCH_SERIES: [usize; 4] = [1, 2, 1, 1];

/// `F_2[X,Y] / (X^2 + Y^2, X^2 + XY + Y^3)` and its maximal ideal.
pub fn storch_fixture() -> Result<(QuotientRing, Ideal)> {
    let ring = Ring::new(&["X", "Y"], Field::prime(2)?, MonomialOrder::DegRevLex)?;
    let defining = Ideal::parse(&ring, &["X^2+Y^2", "X^2+X*Y+Y^3"])?;
    let quotient = make_quotient(&defining)?;
    let m = irrelevant_ideal(&ring);
    Ok((quotient, m))
}

/// Runs [`verify_main_equivalence`] on the Storch fixture with `I = m`.
pub fn storch_counterexample() -> Result<EquivalenceReport> {
    let (quotient, m) = storch_fixture()?;
    verify_main_equivalence(&quotient, &m)
}

/// A dense homogeneous polynomial of degree `degree` with uniform coefficients.
pub fn random_form<R: Rng + ?Sized>(rng: &mut R, ring: &Arc<Ring>, degree: u32) -> Polynomial {
    let field = ring.field();
    let terms = monomials_of_degree(ring.nvars(), degree)
        .into_iter()
        .map(|m| (field.random(rng), m))
        .collect();
    Polynomial::from_terms(ring, terms).expect("coefficients from the ring's field")
}

const MAX_CI_ATTEMPTS: usize = 100;

/// Samples `n` random forms of the given degrees until their quotient is
/// Artinian, at most 100 attempts.
pub fn random_complete_intersection<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &Arc<Ring>,
    degrees: &[u32],
) -> Result<Vec<Polynomial>> {
    if degrees.len() != ring.nvars() || degrees.contains(&0) {
        return Err(Error::usage(
            "need one positive degree per variable for a complete intersection",
        ));
    }
    for _ in 0..MAX_CI_ATTEMPTS {
        let gens: Vec<Polynomial> = degrees.iter().map(|&d| random_form(rng, ring, d)).collect();
        if gens.iter().any(Polynomial::is_zero) {
            continue;
        }
        let ideal = Ideal::new(ring, gens.clone())?;
        match make_quotient(&ideal) {
            Ok(_) => return Ok(gens),
            Err(Error::Precondition(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::precondition(format!(
        "no Artinian sample in {MAX_CI_ATTEMPTS} attempts for degrees {degrees:?}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(vars: &[&str], field: Field) -> Arc<Ring> {
        Ring::new(vars, field, MonomialOrder::DegRevLex).unwrap()
    }

    fn polys(r: &Arc<Ring>, gens: &[&str]) -> Vec<Polynomial> {
        gens.iter()
            .map(|g| Polynomial::parse(g, r).unwrap())
            .collect()
    }

    #[test]
    fn ladder_on_monomial_complete_intersections() {
        let r = ring(&["x", "y"], Field::Rationals);
        let report = verify_macaulay_ladder(&r, &polys(&r, &["x^2", "y^2"])).unwrap();
        assert_eq!(report.delta, 2);
        assert_eq!(report.rungs.len(), 4);
        assert!(report.holds);

        let report = verify_macaulay_ladder(&r, &polys(&r, &["x^2", "y^3"])).unwrap();
        assert_eq!(report.delta, 3);
        assert!(report.holds);
    }

    #[test]
    fn ladder_hypotheses() {
        let r = ring(&["x", "y"], Field::Rationals);
        let err = |gens: &[&str]| verify_macaulay_ladder(&r, &polys(&r, gens)).unwrap_err();
        assert!(matches!(err(&["x^2", "x*y"]), Error::Precondition(m) if m.contains("Artinian")));
        assert!(matches!(err(&["x^2"]), Error::Precondition(m) if m.contains("expected 2")));
        assert!(
            matches!(err(&["x^2", "y^2 + y^3"]), Error::Precondition(m) if m.contains("homogeneous"))
        );
    }

    #[test]
    fn ladder_endpoints() {
        let r = ring(&["x", "y", "z"], Field::prime(32003).unwrap());
        let gens = polys(&r, &["x^2 + y*z", "y^2 + x*z", "z^2"]);
        let report = verify_macaulay_ladder(&r, &gens).unwrap();
        assert_eq!(report.delta, 3);
        assert!(report.holds);
        assert_eq!(report.rungs.last().unwrap().lhs_gb_size, 1);
    }

    #[test]
    fn delta_identity() {
        let r = ring(&["x", "y"], Field::Rationals);
        assert!(check_delta_identity(&r, &polys(&r, &["x^2", "y^2"])).unwrap());
        assert!(check_delta_identity(&r, &polys(&r, &["x^3", "y^4"])).unwrap());
        let r3 = ring(&["x", "y", "z"], Field::Rationals);
        assert!(check_delta_identity(&r3, &polys(&r3, &["x^2", "y^2", "z^2"])).unwrap());
    }

    #[test]
    fn symmetry_checks() {
        let r = ring(&["x", "y"], Field::Rationals);
        let (t, sym) = verify_symmetry(&Ideal::parse(&r, &["x^2", "y^2"]).unwrap()).unwrap();
        assert_eq!(t.values(), &[1, 2, 1]);
        assert!(sym);
        let r3 = ring(&["x", "y", "z"], Field::Rationals);
        let (t, sym) =
            verify_symmetry(&Ideal::parse(&r3, &["x^3", "y^3", "z^2"]).unwrap()).unwrap();
        assert_eq!(t.delta(), 3 + 3 + 2 - 3);
        assert_eq!(t.values().len(), 6);
        assert!(sym);
        assert!(matches!(
            verify_symmetry(&Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap()),
            Err(Error::Precondition(m)) if m.contains("Gorenstein")
        ));
    }

    #[test]
    fn equivalence_on_symmetric_instance() {
        let r = ring(&["x", "y"], Field::Rationals);
        let a = make_quotient(&Ideal::parse(&r, &["x^2", "y^2"]).unwrap()).unwrap();
        let report = verify_main_equivalence(&a, &irrelevant_ideal(&r)).unwrap();
        assert!(report.ladder_holds);
        assert_eq!(report.table.values(), &[1, 2, 1]);
        assert!(report.symmetric);
        assert!(report.consistent);
    }

    #[test]
    fn equivalence_refuses_non_gorenstein() {
        let r = ring(&["x", "y"], Field::Rationals);
        let a = make_quotient(&Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap()).unwrap();
        assert!(matches!(
            verify_main_equivalence(&a, &irrelevant_ideal(&r)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn storch_as_computed() {
        let report = storch_counterexample().unwrap();
        assert_eq!(report.table.values(), &[1, 2, 1, 1, 1]);
        assert_eq!(report.delta, 4);
        assert!(!report.symmetric);
        assert!(!report.ladder_holds);
        assert!(report.consistent);
        assert_eq!(report.ladder.failures(), vec![2, 3]);
        assert_eq!(report.colengths, vec![0, 1, 3, 4, 5, 6]);
    }

    #[test]
    fn corollary_checks() {
        let r = ring(&["x", "y"], Field::Rationals);
        let report = verify_corollary(&Ideal::parse(&r, &["x^2", "y^2"]).unwrap()).unwrap();
        assert_eq!(report.delta, 2);
        assert!(report.holds);
        let r1 = ring(&["x"], Field::Rationals);
        let report = verify_corollary(&Ideal::parse(&r1, &["x^3"]).unwrap()).unwrap();
        assert_eq!(report.delta, 2);
        assert_eq!(report.rungs.len(), 3);
        assert!(report.holds);
        let (storch, _) = storch_fixture().unwrap();
        assert!(matches!(
            verify_corollary(storch.defining()),
            Err(Error::Precondition(m)) if m.contains("homogeneous")
        ));
    }

    #[test]
    fn random_complete_intersections_are_artinian() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let r = ring(&["x", "y", "z"], Field::prime(32003).unwrap());
        let gens = random_complete_intersection(&mut rng, &r, &[2, 2, 3]).unwrap();
        assert_eq!(
            gens.iter()
                .map(|g| g.homogeneous_degree().unwrap())
                .collect::<Vec<_>>(),
            vec![2, 2, 3]
        );
        assert!(random_complete_intersection(&mut rng, &r, &[2, 2]).is_err());
    }
}

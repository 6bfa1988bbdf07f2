mod common;

use colonlab_core::groebner::normal_form;
use colonlab_core::ideal_ops::{
    colon, ideal_power, ideal_product, irrelevant_ideal, irrelevant_power, make_quotient,
};
use colonlab_core::oracle::build_model;
use colonlab_core::theorems::{storch_fixture, verify_macaulay_ladder};
use colonlab_core::{Field, FieldElement, Ideal, Monomial, MonomialOrder, Polynomial};
use proptest::prelude::*;

use common::{corpus, ring};

fn monomial_ideal(r: &std::sync::Arc<colonlab_core::Ring>, exps: &[Vec<u32>]) -> Ideal {
    let gens = exps
        .iter()
        .map(|e| Polynomial::monomial(r, Monomial::new(e.clone())))
        .collect();
    Ideal::new(r, gens).unwrap()
}

fn exponent_sets() -> impl Strategy<Value = Vec<Vec<u32>>> {
    proptest::collection::vec(proptest::collection::vec(0u32..4, 2), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn colon_laws_on_monomial_ideals(i in exponent_sets(), j in exponent_sets(), extra in exponent_sets()) {
        let r = ring(&["x", "y"], Field::Rationals, MonomialOrder::DegRevLex);
        let ii = monomial_ideal(&r, &i);
        let jj = monomial_ideal(&r, &j);
        let c = colon(&ii, &jj).unwrap();
        // (I : J)·J ⊆ I
        prop_assert!(ii.contains_ideal(&ideal_product(&c, &jj).unwrap()).unwrap());
        // I ⊆ I : J
        prop_assert!(c.contains_ideal(&ii).unwrap());
        // J' = J + extra ⊇ J gives I : J' ⊆ I : J
        let mut bigger = j.clone();
        bigger.extend(extra);
        let c2 = colon(&ii, &monomial_ideal(&r, &bigger)).unwrap();
        prop_assert!(c.contains_ideal(&c2).unwrap());
    }
}

#[test]
fn irrelevant_power_matches_generic_power() {
    for n in 1..=3 {
        let r = ring(
            &["x", "y", "z"][..n],
            Field::prime(32003).unwrap(),
            MonomialOrder::DegRevLex,
        );
        let m = irrelevant_ideal(&r);
        for i in 0..=6 {
            assert!(
                irrelevant_power(&r, i).equals(&ideal_power(&m, i)).unwrap(),
                "n={n} i={i}"
            );
        }
    }
}

#[test]
fn reduced_basis_ignores_presentation() {
    let r = ring(&["x", "y"], Field::Rationals, MonomialOrder::DegRevLex);
    let a = Ideal::parse(&r, &["x^2", "y^2", "x*y^2"]).unwrap();
    let b = Ideal::parse(&r, &["y^2 + x^2", "x^2", "x^2*y", "3*y^2"]).unwrap();
    assert_eq!(a.gb(), b.gb());
    assert!(a.equals(&b).unwrap());
}

#[test]
fn normal_form_residue_lies_in_the_ideal() {
    // f − NF(f) ∈ J, checked through the oracle's evaluation f(M)·1
    for inst in corpus() {
        let a = &inst.quotient;
        let model = build_model(a).unwrap();
        let r = a.ring();
        for text in ["x^5 + 3*x*y^2 - 1", "y^4*x + x^3 + x*y", "(x + y)^6 - x"] {
            let text = if r.vars()[0] == "X" {
                text.replace('x', "X").replace('y', "Y")
            } else {
                text.to_string()
            };
            let f = Polynomial::parse(&text, r).unwrap();
            let nf = normal_form(&f, a.defining().gb());
            let diff = f.sub(&nf).unwrap();
            assert!(
                model.coordinates(&diff).iter().all(FieldElement::is_zero),
                "{}: {f}",
                inst.name
            );
            assert_eq!(model.coordinates(&f), model.coordinates(&nf));
        }
    }
}

#[test]
fn storch_normal_forms() {
    let (a, _) = storch_fixture().unwrap();
    let r = a.ring();
    let y3 = Polynomial::parse("Y^3", r).unwrap();
    let nf = normal_form(&y3, a.defining().gb());
    let leads: Vec<&Monomial> = a
        .defining()
        .gb()
        .iter()
        .map(|g| g.leading_monomial().unwrap())
        .collect();
    assert!(nf
        .terms()
        .iter()
        .all(|t| !leads.iter().any(|l| l.divides(&t.monomial))));
    // Y^3 ≡ XY + Y^2 since XY + Y^2 + Y^3 lies in the ideal
    assert_eq!(nf, Polynomial::parse("X*Y + Y^2", r).unwrap());
    // m^4 does not vanish here: X^4 ≡ Y^4 ≢ 0; m^5 does
    assert!(!a
        .defining()
        .contains(&Polynomial::parse("X^4", r).unwrap())
        .unwrap());
    assert!(a
        .defining()
        .contains_ideal(&irrelevant_power(r, 5))
        .unwrap());
}

#[test]
fn ladder_endpoints_are_trivial() {
    let r = ring(
        &["x", "y", "z"],
        Field::prime(32003).unwrap(),
        MonomialOrder::DegRevLex,
    );
    let gens: Vec<Polynomial> = ["x^2 + y*z", "y^3 + x*z^2", "z^2 - x*y"]
        .iter()
        .map(|g| Polynomial::parse(g, &r).unwrap())
        .collect();
    let i = Ideal::new(&r, gens.clone()).unwrap();
    make_quotient(&i).unwrap();
    let report = verify_macaulay_ladder(&r, &gens).unwrap();
    assert_eq!(report.delta, 4);
    assert!(report.holds);
    // i = 0: I : 1 = I = I + m^(δ+1)
    assert_eq!(report.rungs[0].lhs_gb_size, i.gb().len());
    assert!(i.contains_ideal(&irrelevant_power(&r, 5)).unwrap());
    // i = δ + 1: both sides are the unit ideal
    let last = report.rungs.last().unwrap();
    assert_eq!((last.lhs_gb_size, last.rhs_gb_size), (1, 1));
}

#[test]
fn model_matrices_commute_and_are_nilpotent() {
    for inst in corpus() {
        let model = build_model(&inst.quotient).unwrap();
        let d = model.dimension();
        let n = inst.quotient.ring().nvars();
        for var in 0..n {
            // x^d · v = 0 for every basis vector v
            for col in 0..d {
                let mut v: Vec<FieldElement> = (0..d)
                    .map(|r| {
                        if r == col {
                            model.field().one()
                        } else {
                            model.field().zero()
                        }
                    })
                    .collect();
                for _ in 0..d {
                    v = model.apply_var(var, &v);
                }
                assert!(
                    v.iter().all(FieldElement::is_zero),
                    "{} var {var}",
                    inst.name
                );
            }
        }
    }
}

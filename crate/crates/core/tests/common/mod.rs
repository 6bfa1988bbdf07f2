#![allow(dead_code)]

use std::sync::Arc;

use colonlab_core::ideal_ops::{ideal_power, irrelevant_ideal, make_quotient, QuotientRing};
use colonlab_core::{Field, Ideal, MonomialOrder, Ring};

pub struct Instance {
    pub name: &'static str,
    pub quotient: QuotientRing,
    /// Ideals of the quotient (as ambient ideals) to run filtrations on.
    pub ideals: Vec<(&'static str, Ideal)>,
}

pub fn ring(vars: &[&str], field: Field, order: MonomialOrder) -> Arc<Ring> {
    Ring::new(vars, field, order).unwrap()
}

fn instance(
    name: &'static str,
    vars: &[&str],
    field: Field,
    order: MonomialOrder,
    gens: &[&str],
    extra: &[(&'static str, &[&str])],
) -> Instance {
    let r = ring(vars, field, order);
    let quotient = make_quotient(&Ideal::parse(&r, gens).unwrap()).unwrap();
    let m = irrelevant_ideal(&r);
    let mut ideals = vec![("m", m.clone()), ("m^2", ideal_power(&m, 2))];
    for (label, g) in extra {
        ideals.push((label, Ideal::parse(&r, g).unwrap()));
    }
    Instance {
        name,
        quotient,
        ideals,
    }
}

/// Artinian local quotients used across the acceptance checks.
pub fn corpus() -> Vec<Instance> {
    let q = Field::Rationals;
    let f2 = Field::prime(2).unwrap();
    let fp = Field::prime(32003).unwrap();
    let drl = MonomialOrder::DegRevLex;
    vec![
        instance(
            "Q[x,y]/(x^2,y^2)",
            &["x", "y"],
            q,
            drl,
            &["x^2", "y^2"],
            &[("(x)", &["x"])],
        ),
        instance(
            "Q[x,y]/(x^2,y^3)",
            &["x", "y"],
            q,
            drl,
            &["x^2", "y^3"],
            &[("(x,y^2)", &["x", "y^2"])],
        ),
        instance(
            "Q[x,y]/(x^3,y^4) lex",
            &["x", "y"],
            q,
            MonomialOrder::Lex,
            &["x^3", "y^4"],
            &[],
        ),
        instance(
            "Q[x,y,z]/(x^2,y^2,z^2)",
            &["x", "y", "z"],
            q,
            drl,
            &["x^2", "y^2", "z^2"],
            &[],
        ),
        instance(
            "F32003[x,y,z]/(x^2+yz,y^2+xz,z^2)",
            &["x", "y", "z"],
            fp,
            drl,
            &["x^2 + y*z", "y^2 + x*z", "z^2"],
            &[],
        ),
        instance(
            "F32003[x,y]/(x^3+y^3-xy^2,x^2y-7y^3)",
            &["x", "y"],
            fp,
            drl,
            &["x^3 + y^3 - x*y^2", "x^2*y - 7*y^3"],
            &[("(x+y,y^2)", &["x + y", "y^2"])],
        ),
        instance(
            "Q[x,y]/(x^2-y^3,xy)",
            &["x", "y"],
            q,
            drl,
            &["x^2 - y^3", "x*y"],
            &[],
        ),
        instance(
            "F2[X,Y]/storch",
            &["X", "Y"],
            f2,
            drl,
            &["X^2+Y^2", "X^2+X*Y+Y^3"],
            &[],
        ),
        instance(
            "Q[x,y]/(x^2,xy,y^2)",
            &["x", "y"],
            q,
            drl,
            &["x^2", "x*y", "y^2"],
            &[],
        ),
        instance(
            "Q[x,y]/(x^3,xy,y^3)",
            &["x", "y"],
            q,
            drl,
            &["x^3", "x*y", "y^3"],
            &[],
        ),
    ]
}

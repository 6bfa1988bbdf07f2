use std::cmp::Ordering;
use std::fmt;

use super::Monomial;
use crate::error::{Error, Result};

/// A monomial order on exponent vectors, variables ranked by position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    DegRevLex,
    Lex,
    /// Block order: the first `k` variables under degrevlex dominate, ties
    /// broken by degrevlex on the remaining variables.
    Elim(usize),
}

fn revlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

impl MonomialOrder {
    /// Compares two monomials. Fails if their variable counts differ.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::usage(format!(
                "comparing monomials in {} and {} variables",
                a.nvars(),
                b.nvars()
            )));
        }
        Ok(self.cmp(a, b))
    }

    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_tail(ea, eb)),
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::Elim(k) => {
                let k = k.min(ea.len());
                degrevlex(&ea[..k], &eb[..k]).then_with(|| degrevlex(&ea[k..], &eb[k..]))
            }
        }
    }

    /// Parses `degrevlex` or `lex`.
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim().to_ascii_lowercase().as_str() {
            "degrevlex" | "grevlex" | "drl" => Ok(MonomialOrder::DegRevLex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(Error::usage(format!(
                "unknown monomial order {other:?}, expected degrevlex or lex"
            ))),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elim(k) => write!(f, "elim({k})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        assert_eq!(
            o.compare(&m(&[2, 0]), &m(&[1, 1])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            o.compare(&m(&[1, 1]), &m(&[1, 1])).unwrap(),
            Ordering::Equal
        );
        // x*z^2 < y^3 in degrevlex with x > y > z
        assert_eq!(
            o.compare(&m(&[1, 0, 2]), &m(&[0, 3, 0])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            o.compare(&m(&[0, 0, 1]), &m(&[2, 0, 0])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::Lex;
        assert_eq!(
            o.compare(&m(&[1, 0]), &m(&[0, 7])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn elimination_property() {
        let o = MonomialOrder::Elim(1);
        assert_eq!(
            o.compare(&m(&[1, 0, 0]), &m(&[0, 2, 5])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn length_mismatch() {
        assert!(matches!(
            MonomialOrder::Lex.compare(&m(&[1]), &m(&[1, 0])),
            Err(Error::Usage(_))
        ));
    }

    fn order_strategy() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::DegRevLex),
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::Elim(1)),
            Just(MonomialOrder::Elim(2)),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..6, 4).prop_map(Monomial::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn order_laws(o in order_strategy(), a in mono(), b in mono(), c in mono()) {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            // multiplicative
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
            // 1 is minimal
            prop_assert_ne!(o.cmp(&Monomial::one(4), &a), Ordering::Greater);
            // transitive
            if ab != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
            }
            if let MonomialOrder::Elim(k) = o {
                let a_hits = a.exponents()[..k].iter().any(|e| *e > 0);
                let b_hits = b.exponents()[..k].iter().any(|e| *e > 0);
                if a_hits && !b_hits {
                    prop_assert_eq!(ab, Ordering::Greater);
                }
            }
        }
    }
}

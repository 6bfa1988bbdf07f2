use std::fmt;

/// A power product `x_1^e_1 ... x_n^e_n` over a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exponents: vec![0; nvars],
            degree: 0,
        }
    }

    /// `x_var^power` in `nvars` variables.
    pub fn var_power(nvars: usize, var: usize, power: u32) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[var] = power;
        Monomial {
            exponents,
            degree: power,
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a - b)
                .collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// The single variable index if this is a pure power `x_j^k` with `k > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut support = self.exponents.iter().enumerate().filter(|(_, e)| **e > 0);
        let first = support.next()?;
        if support.next().is_some() {
            None
        } else {
            Some(first.0)
        }
    }

    /// Prepends `extra` zero exponents.
    pub(crate) fn prepend_zeros(&self, extra: usize) -> Monomial {
        let mut exponents = vec![0; extra];
        exponents.extend_from_slice(&self.exponents);
        Monomial {
            exponents,
            degree: self.degree,
        }
    }

    /// Drops the first `count` exponents, which must be zero.
    pub(crate) fn drop_leading(&self, count: usize) -> Option<Monomial> {
        if self.exponents[..count].iter().any(|e| *e != 0) {
            return None;
        }
        Some(Monomial {
            exponents: self.exponents[count..].to_vec(),
            degree: self.degree,
        })
    }

    /// Writes the monomial with the given variable names, `1` for the empty product.
    pub fn display<'a>(&'a self, vars: &'a [String]) -> impl fmt::Display + 'a {
        MonomialDisplay { mono: self, vars }
    }
}

struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    vars: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, &e) in self.vars.iter().zip(&self.mono.exponents) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree exactly `degree` in `nvars` variables, in
/// descending lexicographic order of exponent vectors.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn go(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            go(nvars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    go(nvars, degree, &mut Vec::with_capacity(nvars), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::new(vec![2, 1]);
        let b = Monomial::new(vec![1, 3]);
        assert_eq!(a.lcm(&b), Monomial::new(vec![2, 3]));
        assert!(Monomial::new(vec![1, 1]).divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(
            a.div(&Monomial::new(vec![1, 0])),
            Some(Monomial::new(vec![1, 1]))
        );
        assert_eq!(a.div(&b), None);
        assert!(Monomial::new(vec![2, 0]).is_coprime(&Monomial::new(vec![0, 5])));
    }

    #[test]
    fn pure_powers() {
        assert_eq!(Monomial::new(vec![0, 3, 0]).pure_power_var(), Some(1));
        assert_eq!(Monomial::new(vec![1, 3, 0]).pure_power_var(), None);
        assert_eq!(Monomial::one(3).pure_power_var(), None);
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(monomials_of_degree(2, 2).len(), 3);
        assert_eq!(monomials_of_degree(3, 1).len(), 3);
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(2, 0), vec![Monomial::one(2)]);
        assert!(monomials_of_degree(3, 3).iter().all(|m| m.degree() == 3));
    }

    #[test]
    fn printing() {
        let vars = vec!["x".to_string(), "y".to_string()];
        assert_eq!(
            Monomial::new(vec![2, 1]).display(&vars).to_string(),
            "x^2*y"
        );
        assert_eq!(Monomial::one(2).display(&vars).to_string(), "1");
    }
}

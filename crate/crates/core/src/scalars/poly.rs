use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// Exponent triple `(a, b, c)` of the monomial `λ1^a λ2^b λ3^c`.
pub type Exponent = [u16; 3];

/// Sparse polynomial in `λ1, λ2, λ3` with rational coefficients.
///
/// Terms are kept sorted by exponent (lexicographic) with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly3 {
    terms: Vec<(Exponent, Rational)>,
}

impl Poly3 {
    pub fn zero() -> Self {
        Poly3 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly3::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly3::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: Rational, exp: Exponent) -> Self {
        if c.is_zero() {
            Poly3::zero()
        } else {
            Poly3 { terms: vec![(exp, c)] }
        }
    }

    /// The indeterminate `λ_{i+1}` for `i ∈ {0, 1, 2}`.
    pub fn var(i: usize) -> Self {
        let mut exp = [0; 3];
        exp[i] = 1;
        Poly3::monomial(Rational::one(), exp)
    }

    /// Collects terms, merging duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut map: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += &c;
        }
        Poly3 {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Exponent, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial has no λ-dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [([0, 0, 0], c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, k: &Rational) -> Poly3 {
        if k.is_zero() {
            return Poly3::zero();
        }
        Poly3 {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Substitutes `λ = point` exactly.
    pub fn eval(&self, point: &[Rational; 3]) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = c.clone();
                for (x, &k) in point.iter().zip(e) {
                    for _ in 0..k {
                        v = v * x;
                    }
                }
                v
            })
            .sum()
    }

    fn merge(&self, other: &Poly3, negate_other: bool) -> Poly3 {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: &Rational| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, rhs(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (*e, rhs(c))));
        Poly3 { terms: out }
    }

    fn product(&self, other: &Poly3) -> Poly3 {
        if self.is_zero() || other.is_zero() {
            return Poly3::zero();
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        Poly3::from_terms(self.terms.iter().flat_map(|(ea, ca)| {
            other.terms.iter().map(move |(eb, cb)| {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                (e, ca * cb)
            })
        }))
    }
}

impl From<Rational> for Poly3 {
    fn from(c: Rational) -> Self {
        Poly3::constant(c)
    }
}

impl Add<&Poly3> for &Poly3 {
    type Output = Poly3;
    fn add(self, rhs: &Poly3) -> Poly3 {
        self.merge(rhs, false)
    }
}

impl Sub<&Poly3> for &Poly3 {
    type Output = Poly3;
    fn sub(self, rhs: &Poly3) -> Poly3 {
        self.merge(rhs, true)
    }
}

impl Mul<&Poly3> for &Poly3 {
    type Output = Poly3;
    fn mul(self, rhs: &Poly3) -> Poly3 {
        self.product(rhs)
    }
}

impl Neg for &Poly3 {
    type Output = Poly3;
    fn neg(self) -> Poly3 {
        Poly3 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.numer().sign() == num_bigint::Sign::Minus;
            let abs = if neg { -c } else { c.clone() };
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if !abs.is_one() || *e == [0, 0, 0] {
                factors.push(abs.to_string());
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(format!("l{}", i + 1)),
                    _ => factors.push(format!("l{}^{}", i + 1, k)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    coeff: Rational,
    exp: Exponent,
}

impl Serialize for Poly3 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(e, c)| TermRecord {
            coeff: c.clone(),
            exp: *e,
        }))
    }
}

impl<'de> Deserialize<'de> for Poly3 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        Ok(Poly3::from_terms(records.into_iter().map(|t| (t.exp, t.coeff))))
    }
}

/// Parses the compact text form produced by `Display`, e.g. `2 + 6*l1*l2 - l3^2`.
impl std::str::FromStr for Poly3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid polynomial `{s}`"));
        let text = s.replace('\u{2212}', "-").replace(' ', "");
        if text.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            rest = tail;
            if term.is_empty() {
                return Err(bad());
            }
            let mut coeff = Rational::from(sign);
            let mut exp = [0u16; 3];
            for factor in term.split('*') {
                if let Some(v) = factor.strip_prefix('l') {
                    let (var, pow) = match v.split_once('^') {
                        Some((var, pow)) => (var, pow.parse::<u16>().map_err(|_| bad())?),
                        None => (v, 1),
                    };
                    let i = match var {
                        "1" => 0,
                        "2" => 1,
                        "3" => 2,
                        _ => return Err(bad()),
                    };
                    exp[i] += pow;
                } else {
                    coeff = coeff * factor.parse::<Rational>()?;
                }
            }
            terms.push((exp, coeff));
        }
        Ok(Poly3::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Poly3 {
        Poly3::constant(Rational::from(n))
    }

    fn l(i: usize) -> Poly3 {
        Poly3::var(i - 1)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&l(1) + &c(1)) * &(&l(1) - &c(1));
        assert_eq!(p, &(&l(1) * &l(1)) - &c(1));
        assert_eq!(p.to_string(), "-1 + l1^2");
    }

    #[test]
    fn psi_scalar_part() {
        let l12 = &l(1) * &l(2);
        let l13 = &l(1) * &l(3);
        let part = &l12.scale(&6.into()) + &l13.scale(&3.into());
        assert_eq!(part.terms().len(), 2);
        let psi0 = &(&c(2) + &part) - &(&l(2) * &l(3)).scale(&2.into());
        let one = [Rational::one(), Rational::one(), Rational::one()];
        assert_eq!(psi0.eval(&one), Rational::from(9));
    }

    #[test]
    fn eval_table_rows() {
        let l123 = &(&l(1) * &l(2)) * &l(3);
        let one = Rational::one();
        assert_eq!(l123.eval(&[one.clone(), one.clone(), one.clone()]), one);
        let split = [one.clone(), one.clone(), -&one];
        assert_eq!((&l(1) * &l(2)).eval(&split), one);
    }

    #[test]
    fn zero_terms_are_dropped() {
        let p = &l(1) - &l(1);
        assert!(p.is_zero());
        assert_eq!(p, Poly3::zero());
        assert_eq!(Poly3::from_terms([([1, 0, 0], Rational::zero())]), Poly3::zero());
    }

    #[test]
    fn terms_sorted() {
        let p = Poly3::from_terms([
            ([0, 1, 1], Rational::from(1)),
            ([1, 0, 0], Rational::from(2)),
            ([0, 0, 0], Rational::from(3)),
        ]);
        let exps: Vec<_> = p.terms().iter().map(|t| t.0).collect();
        assert_eq!(exps, vec![[0, 0, 0], [0, 1, 1], [1, 0, 0]]);
    }

    #[test]
    fn json_form() {
        let p = &c(2) + &(&l(1) * &l(2)).scale(&Rational::new(-1, 2).unwrap());
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[{"coeff":"2","exp":[0,0,0]},{"coeff":"-1/2","exp":[1,1,0]}]"#);
        let back: Poly3 = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn text_round_trip() {
        let p: Poly3 = "2 + 6*l1*l2 + 3*l1*l3 - 2*l2*l3".parse().unwrap();
        assert_eq!(p.to_string().parse::<Poly3>().unwrap(), p);
        assert_eq!("-l3^2 + 1/2".parse::<Poly3>().unwrap().to_string(), "1/2 - l3^2");
        assert!("l4".parse::<Poly3>().is_err());
    }
}

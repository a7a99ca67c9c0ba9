//! The identity catalog and a checker that evaluates each identity's two sides
//! along separate paths.
//!
//! Left sides use only the definitional sequences ([`QuatSequences`]) plus
//! quaternion arithmetic. Right sides use only the closed forms: `X_n`,
//! powers of two, the named constants and the helper quaternions. The two
//! paths share nothing above scalar/quaternion arithmetic.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use super::{
    genfun_coeffs, helper_y, helper_y1, jg_binet, jg_binet_cases, kg_binet, kg_binet_cases, xs, Constants,
    QuatSeqKind, QuatSequences,
};
use crate::error::{Error, Result};
use crate::quaternions::{LambdaSig, Quaternion, QuaternionRecord};
use crate::scalars::{Poly3, Rational, Ring};
use crate::sequences::Family;

macro_rules! identity_ids {
    ($($variant:ident => $name:literal,)*) => {
        /// Every checkable identity.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }
        }

        impl FromStr for IdentityId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(IdentityId::$variant),)*
                    _ => Err(Error::UnknownIdentity(s.to_string())),
                }
            }
        }
    };
}

identity_ids! {
    Shift3J => "shift3_j",
    Shift3K => "shift3_k",
    BinetJ => "binet_j",
    BinetK => "binet_k",
    GenfunJ => "genfun_j",
    GenfunK => "genfun_k",
    VajdaJ => "vajda_j",
    VajdaK => "vajda_k",
    CatalanJ => "catalan_j",
    CatalanK => "catalan_k",
    CassiniJ => "cassini_j",
    CassiniK => "cassini_k",
    CassiniExample => "cassini_example",
    DocagneJ => "docagne_j",
    DocagneK => "docagne_k",
    TriplesumJ => "triplesum_j",
    TriplesumK => "triplesum_k",
    KFromJ => "k_from_j",
    JFromK => "j_from_k",
    PartialSumJ => "partial_sum_j",
    PartialSumK => "partial_sum_k",
    Shift2m4J => "shift2m4_j",
    Shift2m4K => "shift2m4_k",
    CombPlus => "comb_plus",
    CombMinus => "comb_minus",
    ProdM1 => "prod_m1",
    ProdM2 => "prod_m2",
    ProdM3 => "prod_m3",
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Which integer parameters an identity quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamShape {
    /// `n`
    N,
    /// `n`, `a`
    NA,
    /// `n`, `a`, `b`
    NAB,
    /// `n` and an equation index
    NPart(u8),
    /// an equation index only
    Part(u8),
}

/// Whether a parameter tuple lies in the range the identity is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Stated,
    /// Outside the stated range but still meaningful; checked and reported
    /// without counting as a conformance failure.
    Probe,
    /// The expression is undefined (e.g. a partial sum with `n < 0`).
    Undefined,
}

impl IdentityId {
    pub fn shape(self) -> ParamShape {
        use IdentityId::*;
        match self {
            VajdaJ | VajdaK => ParamShape::NAB,
            CatalanJ | CatalanK | DocagneJ | DocagneK => ParamShape::NA,
            BinetJ | BinetK => ParamShape::NPart(2),
            ProdM1 | ProdM2 | ProdM3 => ParamShape::Part(2),
            CassiniExample => ParamShape::Part(3),
            _ => ParamShape::N,
        }
    }

    /// Whether the identity involves the `K` sequence.
    pub fn uses_k(self) -> bool {
        use IdentityId::*;
        matches!(
            self,
            Shift3K
                | BinetK
                | GenfunK
                | VajdaK
                | CatalanK
                | CassiniK
                | DocagneK
                | TriplesumK
                | KFromJ
                | JFromK
                | PartialSumK
                | Shift2m4K
                | CombPlus
                | CombMinus
        )
    }

    pub fn domain(self, p: &Params) -> Domain {
        use IdentityId::*;
        let n = p.n.unwrap_or(0);
        match self {
            PartialSumJ | PartialSumK | GenfunJ | GenfunK if n < 0 => Domain::Undefined,
            VajdaJ | VajdaK | DocagneJ | DocagneK => Domain::Stated,
            CatalanJ | CatalanK if n < p.a.unwrap_or(0) => Domain::Probe,
            CatalanJ | CatalanK => Domain::Stated,
            CassiniJ | CassiniK if n < 1 => Domain::Probe,
            ProdM1 | ProdM2 | ProdM3 | CassiniExample => Domain::Stated,
            _ if n < 0 => Domain::Probe,
            _ => Domain::Stated,
        }
    }
}

/// Integer parameters of one check. `part` selects one equation of a
/// multi-equation display.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub part: Option<u8>,
}

impl Params {
    pub fn n(n: i64) -> Self {
        Params { n: Some(n), ..Default::default() }
    }

    pub fn na(n: i64, a: i64) -> Self {
        Params { n: Some(n), a: Some(a), ..Default::default() }
    }

    pub fn nab(n: i64, a: i64, b: i64) -> Self {
        Params { n: Some(n), a: Some(a), b: Some(b), part: None }
    }

    pub fn part(part: u8) -> Self {
        Params { part: Some(part), ..Default::default() }
    }

    pub fn with_part(mut self, part: u8) -> Self {
        self.part = Some(part);
        self
    }

    fn validate(&self, id: IdentityId) -> Result<()> {
        let malformed = |reason: String| Error::MalformedParams { id: id.name(), reason };
        let (need_n, need_a, need_b, parts) = match id.shape() {
            ParamShape::N => (true, false, false, None),
            ParamShape::NA => (true, true, false, None),
            ParamShape::NAB => (true, true, true, None),
            ParamShape::NPart(k) => (true, false, false, Some(k)),
            ParamShape::Part(k) => (false, false, false, Some(k)),
        };
        for (name, need, have) in [("n", need_n, self.n.is_some()), ("a", need_a, self.a.is_some()), ("b", need_b, self.b.is_some())] {
            if need && !have {
                return Err(malformed(format!("missing `{name}`")));
            }
            if !need && have {
                return Err(malformed(format!("unexpected `{name}`")));
            }
        }
        match (parts, self.part) {
            (Some(k), Some(p)) if p < k => {}
            (Some(k), Some(p)) => return Err(malformed(format!("part {p} out of range 0..{k}"))),
            (Some(_), None) => return Err(malformed("missing `part`".into())),
            (None, Some(_)) => return Err(malformed("unexpected `part`".into())),
            (None, None) => {}
        }
        if id.domain(self) == Domain::Undefined {
            return Err(malformed(format!("requires n ≥ 0, got {}", self.n.unwrap_or(0))));
        }
        Ok(())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(a) = self.a {
            parts.push(format!("a={a}"));
        }
        if let Some(b) = self.b {
            parts.push(format!("b={b}"));
        }
        if let Some(p) = self.part {
            parts.push(format!("part={p}"));
        }
        f.write_str(&parts.join(" "))
    }
}

/// λ as indeterminates, or a rational point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaTag {
    Symbolic,
    Point([Rational; 3]),
}

impl Serialize for LambdaTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LambdaTag::Symbolic => serializer.serialize_str("symbolic"),
            LambdaTag::Point(p) => {
                let mut seq = serializer.serialize_seq(Some(3))?;
                for x in p {
                    seq.serialize_element(x)?;
                }
                seq.end()
            }
        }
    }
}

impl fmt::Display for LambdaTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaTag::Symbolic => f.write_str("symbolic"),
            LambdaTag::Point([a, b, c]) => write!(f, "{a},{b},{c}"),
        }
    }
}

/// Outcome of one check: `pass` iff `lhs - rhs` is exactly zero.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationResult {
    pub id: IdentityId,
    pub params: Params,
    pub lambda_mode: LambdaTag,
    pub pass: bool,
    /// Set when the parameters lie outside the identity's stated range.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informative: bool,
    pub lhs: QuaternionRecord,
    pub rhs: QuaternionRecord,
}

impl VerificationResult {
    /// A failure that counts against conformance.
    pub fn is_failure(&self) -> bool {
        !self.pass && !self.informative
    }
}

/// Evaluates identities over one algebra.
#[derive(Debug, Clone)]
pub struct Checker<S: Ring> {
    seqs: QuatSequences<S>,
    k: Constants<S>,
}

impl<S: Ring> Checker<S> {
    pub fn new(sig: &LambdaSig<S>) -> Self {
        Checker::with_k_family(sig, Family::k3())
    }

    /// Uses `k_family` for the definitional `K` sequence (e.g. [`Family::k3_paper`]).
    pub fn with_k_family(sig: &LambdaSig<S>, k_family: Family) -> Self {
        Checker {
            seqs: QuatSequences::with_families(sig, Family::j3(), k_family),
            k: Constants::new(sig),
        }
    }

    pub fn sig(&self) -> &LambdaSig<S> {
        self.seqs.sig()
    }

    pub fn constants(&self) -> &Constants<S> {
        &self.k
    }

    pub fn sequences(&self) -> &QuatSequences<S> {
        &self.seqs
    }

    /// Both sides of `id` at `params`, unsimplified.
    pub fn sides(&self, id: IdentityId, params: &Params) -> Result<(Quaternion<S>, Quaternion<S>)> {
        params.validate(id)?;
        let n = params.n.unwrap_or(0);
        let a = params.a.unwrap_or(0);
        let b = params.b.unwrap_or(0);
        let part = params.part.unwrap_or(0);
        Ok((self.lhs(id, n, a, b, part), self.rhs(id, n, a, b, part)))
    }

    pub fn check(&self, id: IdentityId, params: &Params, tag: LambdaTag) -> Result<VerificationResult> {
        let (lhs, rhs) = self.sides(id, params)?;
        Ok(VerificationResult {
            id,
            params: *params,
            lambda_mode: tag,
            pass: (&lhs - &rhs).is_zero(),
            informative: id.domain(params) != Domain::Stated,
            lhs: lhs.to_record(),
            rhs: rhs.to_record(),
        })
    }

    fn lhs(&self, id: IdentityId, n: i64, a: i64, b: i64, part: u8) -> Quaternion<S> {
        use IdentityId::*;
        let jg = |i| self.seqs.jg(i);
        let kg = |i| self.seqs.kg(i);
        let k = &self.k;
        match id {
            Shift3J => jg(n + 3),
            Shift3K => kg(n + 3),
            BinetJ | GenfunJ => jg(n),
            BinetK | GenfunK => kg(n),
            VajdaJ => &(&jg(n + a) * &jg(n + b)) - &(&jg(n) * &jg(n + a + b)),
            VajdaK => &(&kg(n + a) * &kg(n + b)) - &(&kg(n) * &kg(n + a + b)),
            CatalanJ => &(&jg(n + a) * &jg(n - a)) - &jg(n).square(),
            CatalanK => &(&kg(n + a) * &kg(n - a)) - &kg(n).square(),
            CassiniJ => &(&jg(n + 1) * &jg(n - 1)) - &jg(n).square(),
            CassiniK => &(&kg(n + 1) * &kg(n - 1)) - &kg(n).square(),
            DocagneJ => &(&jg(n + a) * &jg(n + 1)) - &(&jg(n) * &jg(n + a + 1)),
            DocagneK => &(&kg(n + a) * &kg(n + 1)) - &(&kg(n) * &kg(n + a + 1)),
            TriplesumJ => &(&jg(n) + &jg(n + 1)) + &jg(n + 2),
            TriplesumK => &(&kg(n) + &kg(n + 1)) + &kg(n + 2),
            KFromJ => kg(n + 2),
            JFromK => jg(n + 2),
            PartialSumJ => (0..=n).map(jg).reduce(|x, y| &x + &y).expect("n ≥ 0"),
            PartialSumK => (0..=n).map(kg).reduce(|x, y| &x + &y).expect("n ≥ 0"),
            Shift2m4J => &jg(n + 2) - &jg(n).scale_int(4),
            Shift2m4K => &kg(n + 2) - &kg(n).scale_int(4),
            CombPlus => &jg(n).scale_int(7) + &kg(n),
            CombMinus => &jg(n).scale_int(7) - &kg(n),
            // Parameter-free displays: the left side is the product as written.
            ProdM1 if part == 0 => &k.b * &k.a,
            ProdM1 => &k.a * &k.b,
            ProdM2 if part == 0 => &k.d * &k.c,
            ProdM2 => &k.c * &k.d,
            ProdM3 if part == 0 => &k.b * &k.a,
            ProdM3 => &k.d * &k.c,
            CassiniExample => match part {
                0 => (&(&jg(2) * &jg(0)) - &jg(1).square()).scale_int(49),
                1 => helper_y(0, 1, QuatSeqKind::JG, k),
                _ => helper_y(1, 1, QuatSeqKind::JG, k),
            },
        }
    }

    fn rhs(&self, id: IdentityId, n: i64, a: i64, b: i64, part: u8) -> Quaternion<S> {
        use IdentityId::*;
        use QuatSeqKind::{JG, KG};
        let k = &self.k;
        let sig = self.seqs.sig();
        let p2 = Rational::pow2;
        let th = &k.theta;
        match id {
            Shift3J => &self.jg_closed(n) + &th.scale_rat(&p2(n + 1)),
            Shift3K => &self.kg_closed(n) + &th.scale_rat(&(p2(n) * Rational::from(7))),
            BinetJ if part == 0 => jg_binet(n, k),
            BinetJ => jg_binet_cases(n, k),
            BinetK if part == 0 => kg_binet(n, k),
            BinetK => kg_binet_cases(n, k),
            GenfunJ => genfun_coeffs(JG, sig, n as usize + 1).pop().expect("count ≥ 1"),
            GenfunK => genfun_coeffs(KG, sig, n as usize + 1).pop().expect("count ≥ 1"),
            VajdaJ => {
                let bracket = &(th * &helper_y(n + b, a, JG, k)) - &(&helper_y(n, a, JG, k) * th).scale_rat(&p2(b));
                let tail = xs(a, &(&xs(b, &k.xi) - &xs(b + 2, &k.omega).scale_int(14)));
                (&bracket.scale_rat(&p2(n + 1)) + &tail).scale_rat(&r(1, 49))
            }
            VajdaK => {
                let bracket = &(th * &helper_y(n + b, a, KG, k)) - &(&helper_y(n, a, KG, k) * th).scale_rat(&p2(b));
                let tail = xs(a, &(&xs(b, &k.xi_star) - &xs(b + 2, &k.omega).scale_int(6)));
                &bracket.scale_rat(&p2(n)) + &tail
            }
            CatalanJ => {
                let bracket = &(th * &helper_y(n - a, a, JG, k)) - &(&helper_y(n, a, JG, k) * th).scale_rat(&p2(-a));
                let tail = xs(a, &(&xs(a, &k.xi) - &xs(a + 1, &k.omega).scale_int(14)));
                (&bracket.scale_rat(&p2(n + 1)) - &tail).scale_rat(&r(1, 49))
            }
            CatalanK => {
                let bracket = &(th * &helper_y(n - a, a, KG, k)) - &(&helper_y(n, a, KG, k) * th).scale_rat(&p2(-a));
                let tail = xs(a, &(&xs(a, &k.xi_star) - &xs(a + 1, &k.omega).scale_int(6)));
                &bracket.scale_rat(&p2(n)) - &tail
            }
            CassiniJ => {
                let bracket = &(th * &helper_y1(n - 1, JG, k)).scale_int(2) - &(&helper_y1(n, JG, k) * th);
                (&bracket.scale_rat(&p2(n)) - &(&k.xi + &k.omega.scale_int(14))).scale_rat(&r(1, 49))
            }
            CassiniK => {
                let bracket = &(th * &helper_y1(n - 1, KG, k)).scale_int(2) - &(&helper_y1(n, KG, k) * th);
                &bracket.scale_rat(&p2(n - 1)) - &(&k.xi_star + &k.omega.scale_int(6))
            }
            CassiniExample => match part {
                0 => {
                    let a3b = &k.a + &k.b.scale_int(3);
                    let a2b = &k.a.scale_int(3) + &k.b.scale_int(2);
                    let quad = &(&k.a.square() + &(&k.b * &k.a)) + &k.b.square();
                    &(&(th * &a3b).scale_int(-4) - &(&a2b * th).scale_int(2)) - &quad
                }
                1 => -(&k.a + &k.b.scale_int(3)),
                _ => &k.a.scale_int(3) + &k.b.scale_int(2),
            },
            DocagneJ => {
                let bracket = &(th * &helper_y(n + 1, a, JG, k)) - &(&helper_y(n, a, JG, k) * th).scale_int(2);
                (&bracket.scale_rat(&p2(n + 1)) + &xs(a, &k.xi)).scale_rat(&r(1, 49))
            }
            DocagneK => {
                let bracket = &(th * &helper_y(n + 1, a, KG, k)) - &(&helper_y(n, a, KG, k) * th).scale_int(2);
                &bracket.scale_rat(&p2(n)) + &xs(a, &k.xi_star)
            }
            TriplesumJ => th.scale_rat(&p2(n + 1)),
            TriplesumK => th.scale_rat(&(p2(n) * Rational::from(7))),
            KFromJ => {
                let (j2, j1, j0) = (self.jg_closed(n + 2), self.jg_closed(n + 1), self.jg_closed(n));
                &(&j2 + &j1.scale_int(2)) + &j0.scale_int(6)
            }
            JFromK => {
                let (k2, k1, k0) = (self.kg_closed(n + 2), self.kg_closed(n + 1), self.kg_closed(n));
                (&(&k2.scale_int(13) + &k1.scale_int(48)) + &k0.scale_int(20)).scale_rat(&r(1, 147))
            }
            PartialSumJ => {
                let corr = Quaternion::from_ints(sig, [1, 1, 4, 7]);
                (&(&self.jg_closed(n + 2) + &self.jg_closed(n).scale_int(2)) - &corr).scale_rat(&r(1, 3))
            }
            PartialSumK => {
                let corr = Quaternion::from_ints(sig, [0, 9, 12, 21]);
                (&(&self.kg_closed(n + 2) + &self.kg_closed(n).scale_int(2)) - &corr).scale_rat(&r(1, 3))
            }
            Shift2m4J => {
                let v = &xs(n, &(&k.a.scale_int(5) + &k.b)) + &xs(n + 1, &(&k.a - &k.b.scale_int(4)));
                v.scale_rat(&r(-1, 7))
            }
            Shift2m4K => -(&xs(n, &(&k.c.scale_int(5) + &k.d)) + &xs(n + 1, &(&k.c - &k.d.scale_int(4)))),
            CombPlus => {
                let main = th.scale_rat(&(p2(n) * Rational::from(3)));
                &(&main + &xs(n, &(&k.a + &k.c))) - &xs(n + 1, &(&k.b + &k.d))
            }
            CombMinus => {
                let main = th.scale_rat(&p2(n));
                &(&main + &xs(n, &(&k.a - &k.c))) - &xs(n + 1, &(&k.b - &k.d))
            }
            ProdM1 if part == 0 => &k.psi + &k.omega.scale_int(7),
            ProdM1 => &k.psi - &k.omega.scale_int(7),
            ProdM2 if part == 0 => &k.phi + &k.omega.scale_int(3),
            ProdM2 => &k.phi - &k.omega.scale_int(3),
            ProdM3 if part == 0 => &(&k.a * &k.b) + &k.omega.scale_int(14),
            ProdM3 => &(&k.c * &k.d) + &k.omega.scale_int(6),
        }
    }

    /// Right-side occurrences of `JG_m` are expanded through the Binet form
    /// so the two sides never share a sequence evaluation.
    fn jg_closed(&self, m: i64) -> Quaternion<S> {
        jg_binet(m, &self.k)
    }

    fn kg_closed(&self, m: i64) -> Quaternion<S> {
        kg_binet(m, &self.k)
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

impl Checker<Poly3> {
    pub fn symbolic() -> Self {
        Checker::new(&LambdaSig::symbolic())
    }
}

/// Checks one identity in symbolic mode (`lambda = None`) or at a rational point.
pub fn check_identity(
    id: IdentityId,
    params: &Params,
    lambda: Option<[Rational; 3]>,
    k_family: &Family,
) -> Result<VerificationResult> {
    match lambda {
        None => Checker::with_k_family(&LambdaSig::<Poly3>::symbolic(), k_family.clone()).check(
            id,
            params,
            LambdaTag::Symbolic,
        ),
        Some(point) => Checker::with_k_family(&LambdaSig::point(point.clone()), k_family.clone()).check(
            id,
            params,
            LambdaTag::Point(point),
        ),
    }
}

//! Jacobsthal quaternion sequences `JG_n`, `KG_n` and their identity catalog.
//!
//! `JG_n = J_n + J_{n+1} e1 + J_{n+2} e2 + J_{n+3} e3`, and `KG_n` likewise
//! with `K`. The closed forms here (Binet, generating function, helper
//! quaternions `Y`, `Y*`, `Z`) are the right-hand sides checked by
//! [`identities`]; the definitional values come from [`QuatSequences`].

pub mod identities;
pub mod suite;

pub use identities::{check_identity, Checker, IdentityId, Params, VerificationResult};
pub use suite::{run_suite, sample_points, LambdaMode, SuiteConfig, SuiteReport};

use std::sync::Arc;

use crate::quaternions::{named_constant, LambdaSig, NamedConstant, Quaternion};
use crate::scalars::{Rational, Ring};
use crate::sequences::{x_cyclic, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuatSeqKind {
    JG,
    KG,
}

/// Scalar terms cached for indices in `TABLE_LO..=TABLE_HI`.
const TABLE_LO: i64 = -64;
const TABLE_HI: i64 = 256;

#[derive(Debug)]
struct Table {
    family: Family,
    values: Vec<Rational>,
}

impl Table {
    fn new(family: Family) -> Self {
        let values = family.range(TABLE_LO, TABLE_HI);
        Table { family, values }
    }

    fn get(&self, n: i64) -> Rational {
        if (TABLE_LO..=TABLE_HI).contains(&n) {
            self.values[(n - TABLE_LO) as usize].clone()
        } else {
            self.family.term(n)
        }
    }
}

/// Definitional `JG_n` / `KG_n` over one algebra.
#[derive(Debug, Clone)]
pub struct QuatSequences<S: Ring> {
    sig: LambdaSig<S>,
    j: Arc<Table>,
    k: Arc<Table>,
}

impl<S: Ring> QuatSequences<S> {
    pub fn new(sig: &LambdaSig<S>) -> Self {
        QuatSequences::with_families(sig, Family::j3(), Family::k3())
    }

    pub fn with_families(sig: &LambdaSig<S>, j: Family, k: Family) -> Self {
        QuatSequences {
            sig: sig.clone(),
            j: Arc::new(Table::new(j)),
            k: Arc::new(Table::new(k)),
        }
    }

    pub fn sig(&self) -> &LambdaSig<S> {
        &self.sig
    }

    fn quat_from(&self, table: &Table, n: i64) -> Quaternion<S> {
        Quaternion::from_rationals(&self.sig, [0, 1, 2, 3].map(|i| table.get(n + i)))
    }

    pub fn jg(&self, n: i64) -> Quaternion<S> {
        self.quat_from(&self.j, n)
    }

    pub fn kg(&self, n: i64) -> Quaternion<S> {
        self.quat_from(&self.k, n)
    }

    pub fn term(&self, kind: QuatSeqKind, n: i64) -> Quaternion<S> {
        match kind {
            QuatSeqKind::JG => self.jg(n),
            QuatSeqKind::KG => self.kg(n),
        }
    }
}

/// `JG_n` over `sig`.
pub fn jg<S: Ring>(n: i64, sig: &LambdaSig<S>) -> Quaternion<S> {
    QuatSequences::new(sig).jg(n)
}

/// `KG_n` over `sig` (with `K_0 = 3`).
pub fn kg<S: Ring>(n: i64, sig: &LambdaSig<S>) -> Quaternion<S> {
    QuatSequences::new(sig).kg(n)
}

/// The named quaternions, instantiated once per algebra.
#[derive(Debug, Clone)]
pub struct Constants<S: Ring> {
    pub theta: Quaternion<S>,
    pub a: Quaternion<S>,
    pub b: Quaternion<S>,
    pub c: Quaternion<S>,
    pub d: Quaternion<S>,
    pub omega: Quaternion<S>,
    pub psi: Quaternion<S>,
    pub phi: Quaternion<S>,
    pub xi: Quaternion<S>,
    pub xi_star: Quaternion<S>,
}

impl<S: Ring> Constants<S> {
    pub fn new(sig: &LambdaSig<S>) -> Self {
        let n = |c| named_constant(c, sig);
        Constants {
            theta: n(NamedConstant::Theta),
            a: n(NamedConstant::A),
            b: n(NamedConstant::B),
            c: n(NamedConstant::C),
            d: n(NamedConstant::D),
            omega: n(NamedConstant::Omega),
            psi: n(NamedConstant::Psi),
            phi: n(NamedConstant::Phi),
            xi: n(NamedConstant::Xi),
            xi_star: n(NamedConstant::XiStar),
        }
    }

    /// `(P, Q) = (A, B)` for J, `(C, D)` for K.
    pub fn pair(&self, kind: QuatSeqKind) -> (&Quaternion<S>, &Quaternion<S>) {
        match kind {
            QuatSeqKind::JG => (&self.a, &self.b),
            QuatSeqKind::KG => (&self.c, &self.d),
        }
    }
}

/// `X_n · q`.
pub(crate) fn xs<S: Ring>(n: i64, q: &Quaternion<S>) -> Quaternion<S> {
    q.scale_int(x_cyclic(n))
}

pub(crate) fn seventh() -> Rational {
    Rational::new(1, 7).expect("nonzero")
}

/// `(1/7)[2^{n+1}Θ + X_n A - X_{n+1} B]`.
pub fn jg_binet<S: Ring>(n: i64, k: &Constants<S>) -> Quaternion<S> {
    let v = &(&k.theta.scale_rat(&Rational::pow2(n + 1)) + &xs(n, &k.a)) - &xs(n + 1, &k.b);
    v.scale_rat(&seventh())
}

/// `2^n Θ + X_n C - X_{n+1} D`.
pub fn kg_binet<S: Ring>(n: i64, k: &Constants<S>) -> Quaternion<S> {
    &(&k.theta.scale_rat(&Rational::pow2(n)) + &xs(n, &k.c)) - &xs(n + 1, &k.d)
}

/// Residue-class form of [`jg_binet`]: `2^{n+1}Θ` plus `-B`, `A + B` or `-A`.
pub fn jg_binet_cases<S: Ring>(n: i64, k: &Constants<S>) -> Quaternion<S> {
    let main = k.theta.scale_rat(&Rational::pow2(n + 1));
    let v = match n.rem_euclid(3) {
        0 => &main - &k.b,
        1 => &(&main + &k.a) + &k.b,
        _ => &main - &k.a,
    };
    v.scale_rat(&seventh())
}

/// Residue-class form of [`kg_binet`]: `2^nΘ` plus `-D`, `C + D` or `-C`.
pub fn kg_binet_cases<S: Ring>(n: i64, k: &Constants<S>) -> Quaternion<S> {
    let main = k.theta.scale_rat(&Rational::pow2(n));
    match n.rem_euclid(3) {
        0 => &main - &k.d,
        1 => &(&main + &k.c) + &k.d,
        _ => &main - &k.c,
    }
}

/// Numerator quaternions `N_0, N_1, N_2` of `Σ G_n x^n = (N_0 + N_1 x + N_2 x²)/σ(x)`.
pub fn genfun_numerator<S: Ring>(kind: QuatSeqKind, sig: &LambdaSig<S>) -> [Quaternion<S>; 3] {
    let q = |c| Quaternion::from_ints(sig, c);
    match kind {
        QuatSeqKind::JG => [q([0, 1, 1, 2]), q([1, 0, 1, 3]), q([0, 0, 2, 2])],
        QuatSeqKind::KG => [q([3, 1, 3, 10]), -q([2, -2, -7, -5]), -q([1, -6, -2, -6])],
    }
}

/// First `count` power-series coefficients of the generating function.
pub fn genfun_coeffs<S: Ring>(kind: QuatSeqKind, sig: &LambdaSig<S>, count: usize) -> Vec<Quaternion<S>> {
    let numerator = genfun_numerator(kind, sig);
    let mut out: Vec<Quaternion<S>> = Vec::with_capacity(count);
    for i in 0..count {
        let mut c = numerator.get(i).cloned().unwrap_or_else(|| Quaternion::zero(sig));
        if i >= 1 {
            c = &c + &out[i - 1];
        }
        if i >= 2 {
            c = &c + &out[i - 2];
        }
        if i >= 3 {
            c = &c + &out[i - 3].scale_int(2);
        }
        out.push(c);
    }
    out
}

/// `Y_n(a)` (family J, with A, B) or `Y*_n(a)` (family K, with C, D):
///
/// `X_n(2^a P + X_{a+2} P - X_a Q) - X_{n+1}(2^a Q + X_a P - X_{a+1} Q)`.
pub fn helper_y<S: Ring>(n: i64, a: i64, kind: QuatSeqKind, k: &Constants<S>) -> Quaternion<S> {
    let (p, q) = k.pair(kind);
    let two_a = Rational::pow2(a);
    let first = &(&p.scale_rat(&two_a) + &xs(a + 2, p)) - &xs(a, q);
    let second = &(&q.scale_rat(&two_a) + &xs(a, p)) - &xs(a + 1, q);
    &xs(n, &first) - &xs(n + 1, &second)
}

/// `Y_n(1) = X_n(2P - Q) - X_{n+1}(3Q + P)`, the `a = 1` display.
pub fn helper_y1<S: Ring>(n: i64, kind: QuatSeqKind, k: &Constants<S>) -> Quaternion<S> {
    let (p, q) = k.pair(kind);
    let first = &p.scale_int(2) - q;
    let second = &q.scale_int(3) + p;
    &xs(n, &first) - &xs(n + 1, &second)
}

/// `Z_n = X_n P - X_{n+1} Q`.
pub fn helper_z<S: Ring>(n: i64, kind: QuatSeqKind, k: &Constants<S>) -> Quaternion<S> {
    let (p, q) = k.pair(kind);
    &xs(n, p) - &xs(n + 1, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Poly3;

    fn sym() -> LambdaSig<Poly3> {
        LambdaSig::symbolic()
    }

    fn q(sig: &LambdaSig<Poly3>, c: [i64; 4]) -> Quaternion<Poly3> {
        Quaternion::from_ints(sig, c)
    }

    #[test]
    fn jg_examples() {
        let sig = sym();
        assert_eq!(jg(0, &sig), q(&sig, [0, 1, 1, 2]));
        assert_eq!(jg(1, &sig), q(&sig, [1, 1, 2, 5]));
        let k = Constants::new(&sig);
        let worked = (&k.theta.scale_int(8) - &k.a).scale_rat(&seventh());
        assert_eq!(jg(2, &sig), worked);
        assert_eq!(jg(2, &sig), q(&sig, [1, 2, 5, 9]));
    }

    #[test]
    fn kg_examples() {
        let sig = sym();
        assert_eq!(kg(0, &sig), q(&sig, [3, 1, 3, 10]));
        assert_eq!(kg(1, &sig), q(&sig, [1, 3, 10, 15]));
        let k = Constants::new(&sig);
        let back = &kg(0, &sig) - &k.theta.scale_rat(&(Rational::from(7) * Rational::pow2(-3)));
        assert_eq!(kg(-3, &sig), back);
    }

    #[test]
    fn binet_examples() {
        let sig = sym();
        let k = Constants::new(&sig);
        let jg0 = (&k.theta.scale_int(2) - &k.b).scale_rat(&seventh());
        assert_eq!(jg_binet(0, &k), jg0);
        assert_eq!(jg_binet(0, &k), q(&sig, [0, 1, 1, 2]));
        let kg1 = &(&k.theta.scale_int(2) + &k.c) + &k.d;
        assert_eq!(kg_binet(1, &k), kg1);
        assert_eq!(kg1, q(&sig, [1, 3, 10, 15]));
        assert_eq!(jg_binet(5, &k), q(&sig, [9, 18, 37, 73]));
        assert_eq!(jg(5, &sig), q(&sig, [9, 18, 37, 73]));
    }

    #[test]
    fn genfun_examples() {
        let sig = sym();
        assert_eq!(genfun_coeffs(QuatSeqKind::JG, &sig, 1), vec![q(&sig, [0, 1, 1, 2])]);
        let k2 = genfun_coeffs(QuatSeqKind::KG, &sig, 2);
        assert_eq!(&k2[1] - &k2[0], q(&sig, [-2, 2, 7, 5]));
        let j10 = genfun_coeffs(QuatSeqKind::JG, &sig, 10);
        for (i, c) in j10.iter().enumerate() {
            assert_eq!(c, &jg(i as i64, &sig));
        }
    }

    #[test]
    fn helper_examples() {
        let sig = sym();
        let k = Constants::new(&sig);
        let y01 = helper_y(0, 1, QuatSeqKind::JG, &k);
        assert_eq!(y01, -(&k.a + &k.b.scale_int(3)));
        assert_eq!(helper_y(1, 1, QuatSeqKind::JG, &k), &k.a.scale_int(3) + &k.b.scale_int(2));
        for n in 0..3 {
            let display = &xs(n, &(&k.a.scale_int(2) - &k.b)) - &xs(n + 1, &(&k.b.scale_int(3) + &k.a));
            assert_eq!(helper_y(n, 1, QuatSeqKind::JG, &k), display);
            assert_eq!(helper_y1(n, QuatSeqKind::JG, &k), display);
        }
        assert_eq!(helper_z(0, QuatSeqKind::JG, &k), -k.b.clone());
    }
}

//! Third-order Jacobsthal sequences `J_n`, `K_n` and the cyclic sequence `X_n`.
//!
//! All three satisfy `s_n = s_{n-1} + s_{n-2} + 2 s_{n-3}` (X satisfies the
//! shorter `X_{n+2} = -X_{n+1} - X_n`, which implies it). Negative indices are
//! reached with the backward step `s_{n-3} = (s_n - s_{n-1} - s_{n-2}) / 2`,
//! so values are rational there.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::Rational;

/// `X_n`: 0, 1, -1 repeating, with `n` reduced by the non-negative modulus.
pub fn x_cyclic(n: i64) -> i64 {
    match n.rem_euclid(3) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqKind {
    J3,
    K3,
}

/// A solution of the third-order recurrence, fixed by `(s_0, s_1, s_2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    seeds: [BigInt; 3],
}

impl Family {
    pub fn new(s0: i64, s1: i64, s2: i64) -> Self {
        Family {
            seeds: [s0.into(), s1.into(), s2.into()],
        }
    }

    /// `J^(3)`: 0, 1, 1, 2, 5, 9, 18, ...
    pub fn j3() -> Self {
        Family::new(0, 1, 1)
    }

    /// `K^(3)`: 3, 1, 3, 10, 15, 31, 66, ...
    ///
    /// `K_0 = 3` is the value forced by the generating function, the closed
    /// form and the partial-sum formula.
    pub fn k3() -> Self {
        Family::new(3, 1, 3)
    }

    /// `K^(3)` with the literal initial value `K_0 = 0`. Kept only so the
    /// inconsistency can be demonstrated; most identities fail with it.
    pub fn k3_paper() -> Self {
        Family::new(0, 1, 3)
    }

    pub fn of(kind: SeqKind) -> Self {
        match kind {
            SeqKind::J3 => Family::j3(),
            SeqKind::K3 => Family::k3(),
        }
    }

    pub fn seeds(&self) -> &[BigInt; 3] {
        &self.seeds
    }

    /// `s_n` by stepping the recurrence forward or backward from the seeds.
    pub fn term(&self, n: i64) -> Rational {
        if (0..3).contains(&n) {
            return Rational::from(self.seeds[n as usize].clone());
        }
        if n > 0 {
            let [mut a, mut b, mut c] = self.seeds.clone();
            for _ in 2..n {
                let next = &c + &b + (&a << 1);
                a = std::mem::replace(&mut b, std::mem::replace(&mut c, next));
            }
            return Rational::from(c);
        }
        let [s0, s1, s2] = self.seeds.clone().map(Rational::from);
        let (mut a, mut b, mut c) = (s0, s1, s2);
        let half = Rational::new(1, 2).expect("nonzero");
        for _ in n..0 {
            let prev = (&c - &b - &a) * &half;
            c = std::mem::replace(&mut b, std::mem::replace(&mut a, prev));
        }
        a
    }

    /// `s_lo ..= s_hi` in one pass.
    pub fn range(&self, lo: i64, hi: i64) -> Vec<Rational> {
        if lo > hi {
            return Vec::new();
        }
        let mut out = Vec::with_capacity((hi - lo + 1) as usize);
        let (mut a, mut b, mut c) = (self.term(lo), self.term(lo + 1), self.term(lo + 2));
        for _ in lo..=hi {
            let next = &c + &b + (&a + &a);
            out.push(a);
            a = std::mem::replace(&mut b, std::mem::replace(&mut c, next));
        }
        out
    }

    /// `s_n` for `n ≥ 0` via `M^n (s_2, s_1, s_0)`.
    pub fn term_fast(&self, n: i64) -> Result<BigInt> {
        if n < 0 {
            return Err(Error::NegativeFastIndex);
        }
        let m = CompanionMatrix::power(n as u64);
        let [s0, s1, s2] = &self.seeds;
        let row = &m.0[2];
        Ok(&row[0] * s2 + &row[1] * s1 + &row[2] * s0)
    }
}

/// `J_n^(3)` for any integer `n`.
pub fn j3(n: i64) -> Rational {
    Family::j3().term(n)
}

/// `K_n^(3)` for any integer `n` (with `K_0 = 3`).
pub fn k3(n: i64) -> Rational {
    Family::k3().term(n)
}

/// `(1/7)(2^{n+1} + X_n - 2 X_{n+1})`.
pub fn j3_binet(n: i64) -> Rational {
    let periodic = Rational::from(x_cyclic(n) - 2 * x_cyclic(n + 1));
    (Rational::pow2(n + 1) + periodic) * Rational::new(1, 7).expect("nonzero")
}

/// `2^n + X_n + 2 X_{n+1}`.
pub fn k3_binet(n: i64) -> Rational {
    Rational::pow2(n) + Rational::from(x_cyclic(n) + 2 * x_cyclic(n + 1))
}

/// Matrix-power evaluation, `O(M(n) log n)`.
pub fn seq_fast(kind: SeqKind, n: i64) -> Result<Rational> {
    Family::of(kind).term_fast(n).map(Rational::from)
}

/// `Σ_{l=0}^{n} J_l = (1/3)(J_{n+2} + 2J_n - 1)`.
pub fn sum_j3(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::NegativeIndex { what: "sum_j3", n });
    }
    let f = Family::j3();
    let v = f.term(n + 2) + f.term(n) * Rational::from(2) - Rational::one();
    Ok(v * Rational::new(1, 3)?)
}

/// `Σ_{l=0}^{n} K_l = (1/3)(K_{n+2} + 2K_n)`, evaluated on the given family so
/// the `K_0 = 0` variant can be checked against the same formula.
pub fn sum_k3_with(family: &Family, n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::NegativeIndex { what: "sum_k3", n });
    }
    let v = family.term(n + 2) + family.term(n) * Rational::from(2);
    Ok(v * Rational::new(1, 3)?)
}

pub fn sum_k3(n: i64) -> Result<Rational> {
    sum_k3_with(&Family::k3(), n)
}

/// `σ(x) = 1 - x - x² - 2x³`; the series of `numerator / σ(x)` satisfies
/// `c_i = N_i + c_{i-1} + c_{i-2} + 2 c_{i-3}`.
pub fn sigma_series(numerator: &[Rational], count: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    for i in 0..count {
        let mut c = numerator.get(i).cloned().unwrap_or_default();
        if i >= 1 {
            c += &out[i - 1];
        }
        if i >= 2 {
            c += &out[i - 2];
        }
        if i >= 3 {
            c += &(&out[i - 3] + &out[i - 3]);
        }
        out.push(c);
    }
    out
}

/// Numerator of the ordinary generating function: `x` for J, `3 - 2x - x²` for K.
pub fn genfun_numerator(kind: SeqKind) -> Vec<Rational> {
    match kind {
        SeqKind::J3 => vec![0.into(), 1.into()],
        SeqKind::K3 => vec![3.into(), (-2).into(), (-1).into()],
    }
}

/// The fundamental matrix `[[1,1,2],[1,0,0],[0,1,0]]` and its powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompanionMatrix(pub [[BigInt; 3]; 3]);

impl CompanionMatrix {
    pub fn base() -> Self {
        let m = [[1, 1, 2], [1, 0, 0], [0, 1, 0]];
        CompanionMatrix(m.map(|row| row.map(BigInt::from)))
    }

    pub fn identity() -> Self {
        let mut m: [[BigInt; 3]; 3] = Default::default();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = BigInt::one();
        }
        CompanionMatrix(m)
    }

    pub fn mul(&self, other: &CompanionMatrix) -> CompanionMatrix {
        let mut out: [[BigInt; 3]; 3] = Default::default();
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = BigInt::zero();
                for k in 0..3 {
                    acc += &self.0[i][k] * &other.0[k][j];
                }
                *cell = acc;
            }
        }
        CompanionMatrix(out)
    }

    pub fn determinant(&self) -> BigInt {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// `M^n` by left-to-right binary exponentiation.
    pub fn power(n: u64) -> CompanionMatrix {
        let mut acc = CompanionMatrix::identity();
        if n == 0 {
            return acc;
        }
        let base = CompanionMatrix::base();
        for bit in (0..64 - n.leading_zeros()).rev() {
            acc = acc.mul(&acc);
            if (n >> bit) & 1 == 1 {
                acc = acc.mul(&base);
            }
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Recurrence,
    Binet,
    Matrix,
}

/// Evaluates `kind` at `n` with the chosen engine.
pub fn evaluate(kind: SeqKind, n: i64, engine: Engine) -> Result<Rational> {
    match (engine, kind) {
        (Engine::Recurrence, _) => Ok(Family::of(kind).term(n)),
        (Engine::Binet, SeqKind::J3) => Ok(j3_binet(n)),
        (Engine::Binet, SeqKind::K3) => Ok(k3_binet(n)),
        (Engine::Matrix, _) => seq_fast(kind, n),
    }
}

#[derive(Debug, Clone)]
pub struct Timing {
    pub value: Rational,
    pub seconds: Vec<f64>,
}

/// Runs `evaluate` `repetitions` times (at least once) and records wall time.
pub fn time_engine(kind: SeqKind, n: i64, engine: Engine, repetitions: usize) -> Result<Timing> {
    let mut seconds = Vec::with_capacity(repetitions.max(1));
    let mut value = Rational::zero();
    for _ in 0..repetitions.max(1) {
        let start = Instant::now();
        value = evaluate(kind, n, engine)?;
        seconds.push(start.elapsed().as_secs_f64());
    }
    Ok(Timing { value, seconds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn x_examples() {
        assert_eq!(x_cyclic(0), 0);
        assert_eq!(x_cyclic(4), 1);
        assert_eq!(x_cyclic(-2), 1);
        assert_eq!(x_cyclic(-2), -x_cyclic(2));
    }

    #[test]
    fn j3_examples() {
        assert_eq!(j3(4), 5.into());
        assert_eq!(j3(0), 0.into());
        assert_eq!(j3(-2), q(1, 2));
        assert_eq!(j3(-1), 0.into());
    }

    #[test]
    fn k3_examples() {
        assert_eq!(k3(2), 3.into());
        assert_eq!(k3(0), 3.into());
        assert_eq!(k3(5), 31.into());
    }

    #[test]
    fn binet_examples() {
        assert_eq!(j3_binet(3), 2.into());
        assert_eq!(j3_binet(1), 1.into());
        assert_eq!(j3_binet(-1), 0.into());
        assert_eq!(j3_binet(-2), q(1, 2));
        assert_eq!(k3_binet(1), 1.into());
        assert_eq!(k3_binet(4), 15.into());
        assert_eq!(k3_binet(6), 66.into());
    }

    #[test]
    fn fast_examples() {
        assert_eq!(seq_fast(SeqKind::J3, 6).unwrap(), 18.into());
        assert_eq!(seq_fast(SeqKind::K3, 0).unwrap(), 3.into());
        // Recurrence, closed form and matrix all agree on this value.
        assert_eq!(seq_fast(SeqKind::J3, 40).unwrap(), 314_146_179_365i64.into());
        assert_eq!(j3(40), 314_146_179_365i64.into());
        assert_eq!(seq_fast(SeqKind::J3, -1), Err(Error::NegativeFastIndex));
        assert_eq!(Error::NegativeFastIndex.to_string(), "fast engine requires n ≥ 0");
    }

    #[test]
    fn sum_examples() {
        assert_eq!(sum_j3(2).unwrap(), 2.into());
        assert_eq!(sum_j3(0).unwrap(), 0.into());
        assert_eq!(sum_j3(5).unwrap(), 18.into());
        assert_eq!(sum_k3(0).unwrap(), 3.into());
        assert_eq!(sum_k3(2).unwrap(), 7.into());
        assert_eq!(sum_k3(4).unwrap(), 32.into());
        assert!(sum_j3(-1).is_err());
        assert!(sum_k3(-1).is_err());
    }

    #[test]
    fn k0_zero_breaks_partial_sum() {
        let paper = Family::k3_paper();
        let brute: Rational = (0..=0).map(|l| paper.term(l)).sum();
        assert_ne!(sum_k3_with(&paper, 0).unwrap(), brute);
    }

    #[test]
    fn companion_determinant() {
        assert_eq!(CompanionMatrix::base().determinant(), BigInt::from(2));
        assert_eq!(CompanionMatrix::power(0), CompanionMatrix::identity());
        assert_eq!(CompanionMatrix::power(1), CompanionMatrix::base());
    }

    #[test]
    fn range_matches_term() {
        let f = Family::k3();
        let r = f.range(-7, 9);
        for (i, v) in (-7..=9).zip(&r) {
            assert_eq!(&f.term(i), v);
        }
        assert!(f.range(3, 2).is_empty());
    }

    #[test]
    fn series_heads() {
        let j = sigma_series(&genfun_numerator(SeqKind::J3), 7);
        assert_eq!(j, [0, 1, 1, 2, 5, 9, 18].map(Rational::from).to_vec());
        let k = sigma_series(&genfun_numerator(SeqKind::K3), 7);
        assert_eq!(k, [3, 1, 3, 10, 15, 31, 66].map(Rational::from).to_vec());
    }
}

use jacobsthal_quat::scalars::Rational;
use jacobsthal_quat::sequences::{
    evaluate, genfun_numerator, j3, j3_binet, k3, k3_binet, seq_fast, sigma_series, x_cyclic, Engine, Family, SeqKind,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn x_period_and_parity() {
    for n in -300..=300 {
        assert_eq!(x_cyclic(n + 3), x_cyclic(n));
        assert_eq!(x_cyclic(-n), -x_cyclic(n));
        assert_eq!(x_cyclic(n) + x_cyclic(n + 1) + x_cyclic(n + 2), 0);
    }
}

#[test]
fn x_vajda() {
    for n in -9..=9 {
        for a in -9..=9 {
            for b in -9..=9 {
                let x = x_cyclic;
                assert_eq!(x(n + a) * x(n + b) - x(n) * x(n + a + b), x(a) * x(b), "n={n} a={a} b={b}");
            }
        }
    }
}

#[test]
fn binet_matches_recurrence() {
    for n in -50..=200 {
        assert_eq!(j3_binet(n), j3(n), "J at {n}");
        assert_eq!(k3_binet(n), k3(n), "K at {n}");
    }
}

#[test]
fn shift_identities() {
    for n in 0..=100 {
        assert_eq!(j3(n + 3) - Rational::pow2(n + 1), j3(n));
        assert_eq!(k3(n + 3) - Rational::from(7) * Rational::pow2(n), k3(n));
    }
}

#[test]
fn integral_at_nonnegative_indices() {
    for n in 0..=300 {
        assert!(j3(n).is_integer() && k3(n).is_integer());
    }
}

#[test]
fn fast_engine_matches_recurrence() {
    for kind in [SeqKind::J3, SeqKind::K3] {
        let iterative = Family::of(kind).range(0, 2000);
        for (n, v) in iterative.iter().enumerate() {
            assert_eq!(&seq_fast(kind, n as i64).unwrap(), v, "{kind:?} at {n}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let samples: Vec<i64> = (0..50).map(|_| rng.gen_range(2000..=100_000)).collect();
    for &n in &samples {
        assert_eq!(seq_fast(SeqKind::J3, n).unwrap(), j3_binet(n), "J at {n}");
    }
    // One full iterative walk to the top of the range.
    let top = *samples.iter().max().unwrap();
    assert_eq!(Family::j3().range(top, top)[0], evaluate(SeqKind::J3, top, Engine::Matrix).unwrap());
}

#[test]
fn fast_engine_rejects_negative() {
    assert!(seq_fast(SeqKind::J3, -1).is_err());
}

#[test]
fn generating_function_series() {
    let j = sigma_series(&genfun_numerator(SeqKind::J3), 65);
    let k = sigma_series(&genfun_numerator(SeqKind::K3), 65);
    for n in 0..=64 {
        assert_eq!(j[n], j3(n as i64));
        assert_eq!(k[n], k3(n as i64));
    }
}

#[test]
fn initial_values() {
    let ints = |f: fn(i64) -> Rational| (0..=6).map(|n| f(n).to_string()).collect::<Vec<_>>();
    assert_eq!(ints(j3), ["0", "1", "1", "2", "5", "9", "18"]);
    assert_eq!(ints(k3), ["3", "1", "3", "10", "15", "31", "66"]);
}

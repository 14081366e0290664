use volkenborn::padic::{
    convergence_report, fermionic_approx, q_bracket, q_integral_approx, valuation_of_rational,
    volkenborn_approx, ConvergenceKind,
};
use volkenborn::{bernoulli_number, euler_number, PadicScalar, Prime, QParameter, Rational, Valuation};

fn p(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

fn int(n: i64) -> Rational {
    Rational::from(n)
}

#[test]
fn riemann_sums_by_hand() {
    for prime in [2, 3, 5, 7] {
        for big_n in 1..=3 {
            assert_eq!(volkenborn_approx(0, p(prime), big_n).unwrap(), int(1));
        }
    }
    assert_eq!(volkenborn_approx(1, p(3), 2).unwrap(), int(4));
    // 0^2 + ... + 24^2 = 4900
    let a = volkenborn_approx(2, p(5), 2).unwrap();
    assert_eq!(a, int(196));
    // 196 - 1/6 = 1175/6
    assert_eq!(valuation_of_rational(&(a - bernoulli_number(2)), p(5)), Valuation::Finite(2));

    for prime in [3, 5, 7] {
        assert_eq!(fermionic_approx(0, p(prime), 2).unwrap(), int(1));
    }
    assert_eq!(fermionic_approx(1, p(3), 1).unwrap(), int(1));
    // 0 - 1 + 4 - 9 + 16 - 25 + 36 - 49 + 64
    assert_eq!(fermionic_approx(2, p(3), 2).unwrap(), int(36));
    assert_eq!(valuation_of_rational(&(int(1) - euler_number(1)), p(3)), Valuation::Finite(1));
}

#[test]
fn convergence_reports() {
    let r = convergence_report(ConvergenceKind::Volkenborn, 1, p(3), 3).unwrap();
    assert_eq!(r, [(1, Valuation::Finite(1)), (2, Valuation::Finite(2)), (3, Valuation::Finite(3))]);
    let r = convergence_report(ConvergenceKind::Volkenborn, 0, p(7), 3).unwrap();
    assert!(r.iter().all(|(_, v)| *v == Valuation::Infinite));
    let r = convergence_report(ConvergenceKind::Fermionic, 1, p(3), 2).unwrap();
    assert_eq!(r[0].1, Valuation::Finite(1));
    assert!(r[1].1 >= Valuation::Finite(2));
    assert!(convergence_report(ConvergenceKind::Fermionic, 1, p(2), 2).is_err());
}

#[test]
fn q_brackets_at_one_plus_p() {
    let q = QParameter::one_plus_prime_power(p(5), 1, 10).unwrap();
    let b = q_bracket(3, &q).unwrap();
    assert!(b.agreement_with_rational(&int(43)).is_indistinguishable());
    let expected = PadicScalar::from_rational(&int(43), p(5), 10).unwrap();
    assert_eq!(b, expected);
}

#[test]
fn q_integral_of_one_is_one() {
    for (prime, big_n) in [(3, 1), (3, 3), (5, 2), (7, 2)] {
        let q = QParameter::one_plus_prime_power(p(prime), 1, 12).unwrap();
        let s = q_integral_approx(0, &q, big_n, 12).unwrap();
        assert!(s.agreement_with_rational(&int(1)).is_indistinguishable());
    }
}

use proptest::prelude::*;
use smashcyc_exact::cyclotomic::{cyclotomic_polynomial, Cyclotomic};
use smashcyc_exact::{inverse, kernel, rank, Matrix, Rational, Scalar, Subquotient};

/// Plain dense Gaussian elimination over rationals, used as an oracle.
fn dense_rank(m: &Matrix) -> usize {
    let mut a: Vec<Vec<Rational>> = m
        .to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(|s| s.as_rational().unwrap().clone()).collect())
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for k in 0..cols {
                    let t = &f * &a[r][k];
                    a[i][k] = &a[i][k] - &t;
                }
            }
        }
        r += 1;
    }
    r
}

fn small_matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(prop_oneof![4 => Just(0i64), 1 => -3i64..=3], r * c).prop_map(move |v| {
            Matrix::from_triplets(r, c, v.iter().enumerate().map(|(k, &x)| (k / c, k % c, Scalar::int(x))))
        })
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (-50i64..50, 1i64..50).prop_map(|(n, d)| Rational::new(n, d)),
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Rational::new(n, d)),
    ]
}

proptest! {
    #[test]
    fn rank_matches_dense_oracle(m in small_matrix(7)) {
        prop_assert_eq!(rank(&m), dense_rank(&m));
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn rank_nullity(m in small_matrix(7)) {
        let k = kernel(&m);
        prop_assert_eq!(k.cols() + rank(&m), m.cols());
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(rank(&k), k.cols());
    }

    #[test]
    fn rank_of_product_is_bounded(a in small_matrix(6), b in small_matrix(6)) {
        if a.cols() == b.rows() {
            let p = a.mul(&b);
            prop_assert!(rank(&p) <= rank(&a).min(rank(&b)));
        }
    }

    #[test]
    fn unitriangular_products_invert(m in small_matrix(6)) {
        let n = m.rows().min(m.cols());
        // u is unitriangular, so u * u^T is invertible
        let u = Matrix::from_fn(n, n, |j| {
            let mut col: Vec<(usize, Scalar)> = (0..j).map(|i| (i, m.get(i, j))).collect();
            col.push((j, Scalar::ONE));
            col
        });
        let a = u.mul(&u.transpose());
        let inv = inverse(&a).unwrap();
        prop_assert!(a.mul(&inv).is_identity());
    }

    #[test]
    fn subquotient_dimension(m in small_matrix(6)) {
        let sq = Subquotient::quotient_of(m.rows(), &m).unwrap();
        prop_assert_eq!(sq.dim(), m.rows() - rank(&m));
    }

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
    }

    #[test]
    fn cyclotomic_ring_laws(n in 3u32..=24, xs in proptest::collection::vec(-5i64..5, 3), k in -30i64..30) {
        let x = Cyclotomic::from_poly(n, xs.iter().map(|&v| Rational::from_int(v)).collect());
        let z = Cyclotomic::zeta_pow(n, k);
        let y = Cyclotomic::zeta_pow(n, 1);
        prop_assert_eq!(x.mul(&z).mul(&y), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&z), z.mul(&x));
        // zeta^k * zeta^-k = 1
        prop_assert_eq!(z.mul(&Cyclotomic::zeta_pow(n, -k)).as_rational(), Some(Rational::ONE));
        if !x.is_zero() {
            prop_assert_eq!(x.mul(&x.inv().unwrap()).as_rational(), Some(Rational::ONE));
        }
    }
}

#[test]
fn zeta_is_a_root_of_its_cyclotomic_polynomial() {
    for n in 1..=24u32 {
        let phi = cyclotomic_polynomial(n);
        let mut acc = Scalar::ZERO;
        for (k, c) in phi.iter().enumerate() {
            acc = &acc + &(&Scalar::int(*c) * &Scalar::zeta_pow(n, k as i64));
        }
        assert!(acc.is_zero(), "Phi_{n}(zeta) != 0");
        assert_eq!(Scalar::zeta_pow(n, n as i64), Scalar::ONE);
    }
}

#[test]
fn order_two_arithmetic_is_rational_arithmetic() {
    let z = Scalar::zeta_pow(2, 1);
    let q = Scalar::frac(3, 7);
    assert_eq!(&z * &q, Scalar::frac(-3, 7));
    assert!(z.as_rational().is_some());
}

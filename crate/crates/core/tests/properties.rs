use proptest::prelude::*;
use smashcyc::cyclic::algebra_cyclic_module;
use smashcyc::descriptor::{AlgebraDescriptor, Descriptor};
use smashcyc::homology::{ChainComplex, CoefficientW};
use smashcyc::presets;
use smashcyc::spectral::{FilteredComplex, Filtration};
use smashcyc::{Factor, TensorMap, TensorSpace};
use smashcyc_exact::{Matrix, Scalar};

fn factor(name: usize, dim: usize) -> Factor {
    Factor::new(&format!("F{name}"), (0..dim).map(|i| format!("e{i}")).collect())
}

fn space() -> impl Strategy<Value = TensorSpace> {
    proptest::collection::vec(1usize..4, 0..4).prop_map(|ds| TensorSpace::new(ds.iter().enumerate().map(|(i, &d)| factor(i, d)).collect()))
}

fn square(dim: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-2i64..3, dim * dim).prop_map(move |v| Matrix::from_fn(dim, dim, |c| (0..dim).filter(|&r| v[r * dim + c] != 0).map(|r| (r, Scalar::int(v[r * dim + c]))).collect()))
}

fn smash_presets() -> Vec<smashcyc::SmashAlgebra> {
    let k2 = presets::cyclic_group(2).unwrap().algebra().clone();
    vec![presets::pareigis_surrogate(1).unwrap(), presets::taft_module_algebra(2).unwrap(), presets::tensor_flip(&k2, &k2).unwrap()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flat_index_round_trip(sp in space()) {
        for i in 0..sp.dim() {
            prop_assert_eq!(sp.encode(&sp.decode(i)), i);
        }
    }

    #[test]
    fn flips_are_mutually_inverse(x in space(), y in space()) {
        let there = TensorMap::flip(&x, &y);
        let back = TensorMap::flip(&y, &x);
        prop_assert!(back.after(&there).mat.is_identity());
    }

    #[test]
    fn disjoint_operators_commute(
        (d1, d2, mid, a, b) in (1usize..4, 1usize..4, 1usize..3).prop_flat_map(|(d1, d2, m)| (Just(d1), Just(d2), Just(m), square(d1), square(d2)))
    ) {
        let (f1, f2) = (factor(0, d1), factor(1, d2));
        let sp = TensorSpace::new(vec![f1.clone(), factor(2, mid), f2.clone()]);
        let u = TensorMap::new(TensorSpace::single(&f1), TensorSpace::single(&f1), a).at(&sp, 0);
        let v = TensorMap::new(TensorSpace::single(&f2), TensorSpace::single(&f2), b).at(&sp, 2);
        prop_assert_eq!(u.after(&v).mat, v.after(&u).mat);
    }

    #[test]
    fn euler_characteristic_of_homology(rows in 1usize..6, cols in 1usize..6, v in proptest::collection::vec(-2i64..3, 36)) {
        let d1 = Matrix::from_fn(rows, cols, |c| (0..rows).filter(|&r| v[r * 6 + c] != 0).map(|r| (r, Scalar::int(v[r * 6 + c]))).collect());
        let k = smashcyc_exact::kernel(&d1);
        let cc = ChainComplex::new(vec![rows, cols, k.cols()], vec![Matrix::zeros(0, rows), d1, k]).unwrap();
        cc.check().unwrap();
        let h = cc.homology("x", 1).unwrap();
        let chi = |d: &[usize]| d[0] as i64 - d[1] as i64 + d[2] as i64;
        prop_assert_eq!(&h.dims()[1..], &[0, 0]);
        prop_assert_eq!(chi(&h.dims()), chi(&cc.dims));
    }

    #[test]
    fn spectral_sequence_converges_to_homology(
        rows in 1usize..5,
        cols in 1usize..5,
        v in proptest::collection::vec(-1i64..2, 16),
        f1 in proptest::collection::vec(0usize..2, 4),
    ) {
        // filtration degrees bounded by the total degree
        let filt = vec![vec![0; rows], f1[..cols].to_vec(), vec![]];
        let d1 = Matrix::from_fn(rows, cols, |c| (0..rows).filter(|&r| v[r * 4 + c] != 0).map(|r| (r, Scalar::int(v[r * 4 + c]))).collect());
        let cc = ChainComplex::new(vec![rows, cols, 0], vec![Matrix::zeros(0, rows), d1, Matrix::zeros(cols, 0)]).unwrap();
        let fc = FilteredComplex { cc, filt };
        let ss = fc.spectral_sequence(Filtration::Rows, CoefficientW::Hochschild, 1).unwrap();
        for n in 0..=1 {
            prop_assert_eq!(ss.infinity_total(n), ss.homology[n]);
        }
    }

    #[test]
    fn algebra_descriptor_round_trip(n in 1usize..6) {
        let a = presets::cyclic_group(n).unwrap().algebra().clone();
        let d = Descriptor::Algebra(AlgebraDescriptor::from_algebra(&a));
        let back = Descriptor::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(&back, &d);
        let Descriptor::Algebra(ad) = back else { unreachable!() };
        let built = ad.build().unwrap();
        prop_assert_eq!(built.mult(), a.mult());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn smash_cyclic_modules_satisfy_connes_relations(which in 0usize..3, top in 1usize..4) {
        let s = &smash_presets()[which];
        let m = algebra_cyclic_module(s.algebra(), top);
        prop_assert!(m.check_cyclic().passed());
        prop_assert!(m.check_connes_relations().passed());
        let mc = m.mixed_complex();
        prop_assert!(mc.check().passed());
    }

    #[test]
    fn rows_and_columns_satisfy_connes_relations(which in 0usize..3, k in 0usize..3) {
        let c = smashcyc::CylindricalModule::new(&smash_presets()[which]).unwrap();
        prop_assert!(c.row(k, 2).check_connes_relations().passed());
        prop_assert!(c.column(k, 2).check_connes_relations().passed());
        prop_assert!(c.row(k, 2).check_paracyclic().passed());
    }
}

use proptest::prelude::*;

use polyhopf::polygons::{fiber_act_frame, sample_frame, su2_apply_frame, word_apply_frame};
use polyhopf::random::{rng_from_seed, unit_element};
use polyhopf::spin::word_from_rotation;
use polyhopf::{
    adjoint_rotation, equivalent_mod_o, equivalent_mod_so, fiber_act, fiber_witness, generator_apply,
    generator_rotation, hopf_phi, hopf_preimage, lift, normalize, phi_k, quotient_invariant, rotate_polygon,
    su2_apply, su2_random, word_apply, word_rotation, AlgebraElement, AlgebraTag, GeneratorWord, HopfImage,
    Orientation, Rotation, SpinGenerator, Spinor, UnitElement, Vector,
};

const O: AlgebraTag = AlgebraTag::Octonion;

fn tag() -> impl Strategy<Value = AlgebraTag> {
    prop::sample::select(AlgebraTag::ALL.to_vec())
}

fn element(tag: AlgebraTag) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec(-4.0..4.0f64, tag.dim()).prop_map(move |c| AlgebraElement::new(tag, &c).unwrap())
}

fn octonion() -> impl Strategy<Value = AlgebraElement> {
    element(O)
}

fn unit(tag: AlgebraTag) -> impl Strategy<Value = UnitElement> {
    element(tag).prop_filter_map("near zero", |x| UnitElement::normalize(x).ok())
}

fn spinor(tag: AlgebraTag) -> impl Strategy<Value = Spinor> {
    (element(tag), element(tag))
        .prop_filter("near zero", |(x, y)| x.norm_sq() + y.norm_sq() > 1e-3)
        .prop_map(|(x, y)| Spinor::new(x, y).unwrap())
}

fn tagged_spinor() -> impl Strategy<Value = Spinor> {
    tag().prop_flat_map(spinor)
}

fn generator() -> impl Strategy<Value = SpinGenerator> {
    prop::collection::vec(-1.0..1.0f64, 9)
        .prop_filter_map("near zero", |c| Vector::from_slice(&c).ok().filter(|w| w.norm() > 1e-3))
        .prop_map(|w| SpinGenerator::from_normal(&w.scale(1.0 / w.norm())).unwrap())
}

fn word() -> impl Strategy<Value = GeneratorWord> {
    prop::collection::vec(generator(), 0..7).prop_map(GeneratorWord::new)
}

fn scale3(a: &AlgebraElement, b: &AlgebraElement, c: &AlgebraElement) -> f64 {
    (a.norm() * b.norm() * c.norm()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn composition_law(t in tag(), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let (a, b) = (polyhopf::random::gaussian_element(t, &mut rng), polyhopf::random::gaussian_element(t, &mut rng));
        prop_assert!(((a * b).norm() - a.norm() * b.norm()).abs() <= 1e-12 * (a.norm() * b.norm()).max(1.0));
    }

    #[test]
    fn conjugation_reverses_products(a in octonion(), b in octonion()) {
        let lhs = (a * b).conj();
        prop_assert!(lhs.distance(&(b.conj() * a.conj())) <= 1e-12 * (a.norm() * b.norm()).max(1.0));
    }

    #[test]
    fn conjugate_is_inverse_up_to_norm(a in octonion()) {
        let p = a * a.conj();
        prop_assert!(p.distance(&AlgebraElement::real(O, a.norm_sq())) <= 1e-12 * a.norm_sq().max(1.0));
    }

    #[test]
    fn moufang_identities(a in octonion(), x in octonion(), y in octonion()) {
        let tol = 1e-12 * a.norm() * scale3(&a, &x, &y);
        prop_assert!(((a * x) * (y * a)).distance(&(a * ((x * y) * a))) <= tol);
        prop_assert!((a * (x * (a * y))).distance(&((a * (x * a)) * y)) <= tol);
        prop_assert!((x * (a * (y * a))).distance(&(((x * a) * y) * a)) <= tol);
    }

    #[test]
    fn alternative_laws(x in octonion(), y in octonion()) {
        let tol = 1e-12 * scale3(&x, &x, &y);
        prop_assert!((x * (x * y)).distance(&((x * x) * y)) <= tol);
        prop_assert!(((y * x) * x).distance(&(y * (x * x))) <= tol);
        prop_assert!(((x * y) * x).distance(&(x * (y * x))) <= tol);
    }

    #[test]
    fn rank_equation(x in octonion()) {
        let rhs = x.scale(2.0 * x.real_part()) - AlgebraElement::real(O, x.norm_sq());
        prop_assert!((x * x).distance(&rhs) <= 1e-12 * x.norm_sq().max(1.0));
    }

    #[test]
    fn quaternions_associate(t in prop::sample::select(AlgebraTag::ASSOCIATIVE.to_vec()), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let mut g = || polyhopf::random::gaussian_element(t, &mut rng);
        let (a, b, c) = (g(), g(), g());
        prop_assert!(((a * b) * c).distance(&(a * (b * c))) <= 1e-12 * scale3(&a, &b, &c));
    }

    #[test]
    fn hopf_norm_lemma(v in tagged_spinor()) {
        prop_assert!((hopf_phi(&v).norm() - 0.5 * v.norm_sq()).abs() <= 1e-12 * v.norm_sq());
    }

    #[test]
    fn preimage_round_trip(t in tag(), lambda in -4.0..4.0f64, seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let alpha = polyhopf::random::gaussian_element(t, &mut rng);
        let target = HopfImage::new(lambda, alpha);
        let theta = unit_element(t, &mut rng);
        let v = hopf_preimage(&target, &theta).unwrap();
        prop_assert!(hopf_phi(&v).distance(&target) <= 1e-10 * target.norm().max(1e-300));
    }

    #[test]
    fn fiber_action_preserves_image_and_is_witnessed((v, c) in tag().prop_flat_map(|t| (spinor(t), unit(t)))) {
        let w = fiber_act(&v, &c).unwrap();
        prop_assert!(hopf_phi(&w).distance(&hopf_phi(&v)) <= 1e-9 * v.norm_sq());
        prop_assert!((w.norm() - v.norm()).abs() <= 1e-12 * v.norm());
        let witness = fiber_witness(&v, &w, 1e-9).unwrap();
        prop_assert!(witness.is_some());
        let back = fiber_act(&v, &witness.unwrap()).unwrap();
        prop_assert!(back.distance(&w) <= 1e-9 * v.norm());
    }

    #[test]
    fn fiber_action_by_one_is_identity(v in tagged_spinor()) {
        let w = fiber_act(&v, &UnitElement::one(v.tag())).unwrap();
        prop_assert!(w.distance(&v) <= 1e-12 * v.norm());
    }

    #[test]
    fn generator_equivariance(g in generator(), v in spinor(O)) {
        let lhs = hopf_phi(&generator_apply(&g, &v).unwrap()).to_vector();
        let rhs = generator_rotation(&g).apply(&hopf_phi(&v).to_vector());
        prop_assert!(lhs.distance(&rhs) <= 1e-9 * v.norm_sq());
    }

    #[test]
    fn generators_are_involutions(g in generator(), v in spinor(O)) {
        let twice = generator_apply(&g, &generator_apply(&g, &v).unwrap()).unwrap();
        prop_assert!(twice.distance(&v) <= 1e-12 * v.norm());
    }

    #[test]
    fn word_equivariance(w in word(), v in spinor(O)) {
        let lhs = hopf_phi(&word_apply(&w, &v).unwrap()).to_vector();
        let rhs = word_rotation(&w).apply(&hopf_phi(&v).to_vector());
        prop_assert!(lhs.distance(&rhs) <= 1e-9 * v.norm_sq());
    }

    #[test]
    fn word_rotation_is_homomorphic(a in word(), b in word()) {
        let lhs = word_rotation(&a.concat(&b));
        prop_assert!(lhs.frobenius_distance(&(word_rotation(&a) * word_rotation(&b))) <= 1e-12);
    }

    #[test]
    fn su2_equivariance(t in prop::sample::select(AlgebraTag::ASSOCIATIVE.to_vec()), seed in any::<u64>(), s in any::<u64>()) {
        let a = su2_random(t, seed).unwrap();
        let v = polyhopf::random::spinor(t, &mut rng_from_seed(s));
        let av = su2_apply(&a, &v).unwrap();
        let lhs = hopf_phi(&av).to_vector();
        let rhs = adjoint_rotation(&a).unwrap().apply(&hopf_phi(&v).to_vector());
        prop_assert!(lhs.distance(&rhs) <= 1e-9 * v.norm_sq().max(1e-300));
        prop_assert!((av.norm() - v.norm()).abs() <= 1e-12 * v.norm());
    }

    #[test]
    fn rotations_decompose_into_words(seed in any::<u64>()) {
        let r = Rotation::random(9, &mut rng_from_seed(seed));
        let w = word_from_rotation(&r).unwrap();
        prop_assert!(w.len() <= 9);
        prop_assert!(word_rotation(&w).frobenius_distance(&r) <= 1e-8);
    }

    #[test]
    fn sampled_polygons_close_with_unit_perimeter(t in tag(), k in 3usize..40, seed in any::<u64>()) {
        let p = phi_k(&sample_frame(t, k, seed, 0).unwrap()).unwrap();
        prop_assert_eq!(p.n(), t.euclidean_dim());
        prop_assert!(p.closure_residual() <= 1e-10);
        prop_assert!((p.perimeter() - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn lift_is_a_section(t in tag(), k in 3usize..40, seed in any::<u64>(), default_fiber in any::<bool>()) {
        let p = phi_k(&sample_frame(t, k, seed, 0).unwrap()).unwrap();
        let mut rng = rng_from_seed(seed ^ 1);
        let thetas: Vec<_> = (0..k).map(|_| unit_element(t, &mut rng)).collect();
        let x = lift(&p, (!default_fiber).then_some(thetas.as_slice())).unwrap();
        prop_assert!(phi_k(&x).unwrap().distance(&p) <= 1e-9);
    }

    #[test]
    fn normalize_is_idempotent(t in tag(), k in 3usize..20, seed in any::<u64>(), scale in 0.01..100.0f64) {
        let p = phi_k(&sample_frame(t, k, seed, 0).unwrap()).unwrap();
        let scaled: Vec<_> = p.edges().iter().map(|e| e.scale(scale)).collect();
        let q = normalize(&scaled).unwrap();
        prop_assert!(q.distance(&p) <= 1e-12);
        prop_assert!(normalize(q.edges()).unwrap().distance(&q) <= 1e-15);
    }

    #[test]
    fn quotient_invariant_is_rotation_invariant(t in tag(), k in 3usize..20, seed in any::<u64>()) {
        let p = phi_k(&sample_frame(t, k, seed, 0).unwrap()).unwrap();
        let r = Rotation::random(p.n(), &mut rng_from_seed(seed ^ 2));
        let q = rotate_polygon(&r, &p).unwrap();
        let (a, b) = (quotient_invariant(&p), quotient_invariant(&q));
        prop_assert_eq!(a.orientation(), b.orientation());
        prop_assert!(a.gram_deviation(&b).unwrap() <= 1e-12);
        prop_assert!(equivalent_mod_so(&p, &q, 1e-9).unwrap());
    }

    #[test]
    fn mirror_flips_orientation_of_full_rank_polygons(t in tag(), k in 3usize..20, seed in any::<u64>()) {
        let p = phi_k(&sample_frame(t, k, seed, 0).unwrap()).unwrap();
        let m = p.mirror();
        let (a, b) = (quotient_invariant(&p), quotient_invariant(&m));
        prop_assert!(a.gram_deviation(&b).unwrap() <= 1e-15);
        prop_assert!(equivalent_mod_o(&p, &m, 1e-9).unwrap());
        match a.orientation() {
            Orientation::Null => prop_assert_eq!(b.orientation(), Orientation::Null),
            o => {
                prop_assert_ne!(b.orientation(), o);
                prop_assert!(!equivalent_mod_so(&p, &m, 1e-9).unwrap());
            }
        }
    }

    #[test]
    fn group_and_fiber_actions_preserve_quotient_class(t in tag(), k in 3usize..16, seed in any::<u64>(), w in word()) {
        let x = sample_frame(t, k, seed, 0).unwrap();
        let mut rng = rng_from_seed(seed ^ 3);
        let c: Vec<_> = (0..k).map(|_| unit_element(t, &mut rng)).collect();
        let xc = fiber_act_frame(&x, &c).unwrap();
        let y = if t.is_associative() {
            su2_apply_frame(&su2_random(t, seed ^ 4).unwrap(), &xc).unwrap()
        } else {
            word_apply_frame(&w, &xc).unwrap()
        };
        let (p, q) = (phi_k(&x).unwrap(), phi_k(&y).unwrap());
        prop_assert!(equivalent_mod_so(&p, &q, 1e-9).unwrap());
    }

    #[test]
    fn sampling_is_deterministic(t in tag(), k in 3usize..12, seed in any::<u64>(), index in 0u64..1000) {
        let a = sample_frame(t, k, seed, index).unwrap();
        let b = sample_frame(t, k, seed, index).unwrap();
        prop_assert_eq!(a.columns(), b.columns());
    }
}

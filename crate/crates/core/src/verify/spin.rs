use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::{check, rel, PropertyResult, Suite, VerifyConfig};
use crate::algebra::{AlgebraElement, AlgebraTag};
use crate::hopf::{fiber_act, hopf_phi, Spinor};
use crate::linalg::Matrix;
use crate::random::{gaussian, gaussian_element, gaussian_vector, spinor, unit_element, SeededRng};
use crate::spin::{
    adjoint_rotation, generator_apply, generator_rotation, mat2_adjoint, mat2_mul, mat4_adjoint,
    mat4_distance, mat4_mul, mat4_trace, quaternion_complexify, su2_apply, su2_random_with,
    word_apply, word_from_rotation, word_rotation, GeneratorWord, Matrix2, Rotation,
    SpinGenerator,
};

const IDENTITY_TRIALS: usize = 10_000;
const ACTION_TRIALS: usize = 1_000;
const CARTAN_TRIALS: usize = 100;
const SPINORS_PER_GENERATOR: usize = 10;
const MAX_WORD: usize = 6;
const IDENTITY_TOL: f64 = 1e-10;
const ROTATION_TOL: f64 = 1e-10;
const CARTAN_TOL: f64 = 1e-8;

const O: AlgebraTag = AlgebraTag::Octonion;

fn random_word(rng: &mut SeededRng) -> GeneratorWord {
    let len = rng.random_range(0..=MAX_WORD);
    GeneratorWord::random(len, rng)
}

fn induced_residual(before: &Spinor, after: &Spinor, rotation: &Rotation) -> f64 {
    let lhs = hopf_phi(after).to_vector();
    let rhs = rotation.apply(&hopf_phi(before).to_vector());
    rel(lhs.distance(&rhs), before.norm_sq())
}

fn rotation_defect(m: &Matrix) -> f64 {
    m.orthogonality_residual().max(libm::fabs(m.det() - 1.0))
}

/// A random Hermitian 2×2 quaternion matrix.
fn hermitian(rng: &mut SeededRng) -> Matrix2 {
    let q = gaussian_element(AlgebraTag::Quaternion, rng);
    let a = AlgebraElement::real(AlgebraTag::Quaternion, gaussian(rng));
    let d = AlgebraElement::real(AlgebraTag::Quaternion, gaussian(rng));
    [[a, q], [q.conj(), d]]
}

pub(super) fn spin_suite(config: &VerifyConfig) -> Vec<PropertyResult> {
    let composite = config.tolerances.composite;
    let single = config.tolerances.single;
    let mut out = Vec::new();
    let mut prop = |name: &str, trials: usize, tol: f64, body: &mut dyn FnMut(&mut SeededRng) -> f64| {
        out.extend(check(Suite::Spin, name.into(), config.trials_or(trials), tol, config, body));
    };

    prop("key-identity-lambda", IDENTITY_TRIALS, IDENTITY_TOL, &mut |rng| {
        let g = SpinGenerator::random(rng);
        let (r, u) = (g.r(), g.u());
        let (x, y) = (gaussian_element(O, rng), gaussian_element(O, rng));
        let lhs = 0.5 * ((x.scale(r) + u.conj() * y).norm_sq() - (u * x - y.scale(r)).norm_sq());
        let lambda = 0.5 * (x.norm_sq() - y.norm_sq());
        let rhs = (r * r - u.norm_sq()) * lambda + 2.0 * r * u.conj().inner(&(x * y.conj()));
        rel(libm::fabs(lhs - rhs), x.norm_sq() + y.norm_sq())
    });
    prop("key-identity-alpha", IDENTITY_TRIALS, IDENTITY_TOL, &mut |rng| {
        let g = SpinGenerator::random(rng);
        let (r, u) = (g.r(), g.u());
        let (x, y) = (gaussian_element(O, rng), gaussian_element(O, rng));
        let lhs = (x.scale(r) + u.conj() * y) * (u * x - y.scale(r)).conj();
        let lambda = 0.5 * (x.norm_sq() - y.norm_sq());
        let alpha = x * y.conj();
        let rhs = u.conj().scale(2.0 * r * lambda) - alpha + u.conj().scale(2.0 * u.conj().inner(&alpha));
        rel(lhs.distance(&rhs), x.norm_sq() + y.norm_sq())
    });
    prop("generator-rotation-structure", ACTION_TRIALS, composite, &mut |rng| {
        let m = *generator_rotation(&SpinGenerator::random(rng)).matrix();
        m.symmetry_residual().max(rotation_defect(&m))
    });
    prop("generator-equivariance", ACTION_TRIALS, composite, &mut |rng| {
        let g = SpinGenerator::random(rng);
        let rho = generator_rotation(&g);
        (0..SPINORS_PER_GENERATOR)
            .map(|_| {
                let v = spinor(O, rng);
                induced_residual(&v, &generator_apply(&g, &v).expect("octonion spinor"), &rho)
            })
            .fold(0.0, f64::max)
    });
    prop("generator-involution", ACTION_TRIALS, single, &mut |rng| {
        let g = SpinGenerator::random(rng);
        let v = spinor(O, rng);
        let twice = generator_apply(&g, &generator_apply(&g, &v).expect("octonion")).expect("octonion");
        let rho = generator_rotation(&g);
        rel(twice.distance(&v), v.norm()).max((rho * rho).frobenius_distance(&Rotation::identity(9)))
    });
    prop("reflection-property", ACTION_TRIALS, single, &mut |rng| {
        let g = SpinGenerator::random(rng);
        let w = g.normal();
        let reflection = -*generator_rotation(&g).matrix();
        let z = gaussian_vector(9, rng);
        let perp = z - w.scale(w.dot(&z));
        let fixed = reflection.apply(&perp).distance(&perp);
        let flipped = reflection.apply(&w).distance(&-w);
        rel(fixed, perp.norm()).max(flipped)
    });
    prop("kernel-word", 1, 0.0, &mut |rng| {
        let one = AlgebraElement::one(O);
        let word = GeneratorWord::new(vec![
            SpinGenerator::new(0.0, one).expect("unit"),
            SpinGenerator::new(0.0, -one).expect("unit"),
        ]);
        let v = spinor(O, rng);
        let image = word_apply(&word, &v).expect("octonion");
        let rotation = word_rotation(&word);
        image.distance(&v.scale(-1.0)) + rotation.matrix().frobenius_distance(&Matrix::identity(9))
    });
    prop("word-equivariance", ACTION_TRIALS, composite, &mut |rng| {
        let word = random_word(rng);
        let v = spinor(O, rng);
        induced_residual(&v, &word_apply(&word, &v).expect("octonion"), &word_rotation(&word))
    });
    prop("word-fiberwise", ACTION_TRIALS, composite, &mut |rng| {
        let word = random_word(rng);
        let v = spinor(O, rng);
        let w = fiber_act(&v, &unit_element(O, rng)).expect("octonion");
        let (a, b) = (word_apply(&word, &v).expect("octonion"), word_apply(&word, &w).expect("octonion"));
        rel(hopf_phi(&a).distance(&hopf_phi(&b)), v.norm_sq())
    });
    prop("word-homomorphism", ACTION_TRIALS, single, &mut |rng| {
        let (a, b) = (random_word(rng), random_word(rng));
        word_rotation(&a.concat(&b)).frobenius_distance(&(word_rotation(&a) * word_rotation(&b)))
    });
    prop("cartan-dieudonne", CARTAN_TRIALS, CARTAN_TOL, &mut |rng| {
        let r = Rotation::random(9, rng);
        let word = word_from_rotation(&r).expect("9x9 rotation");
        if word.len() > 9 {
            return f64::INFINITY;
        }
        word_rotation(&word).frobenius_distance(&r)
    });

    for tag in AlgebraTag::ASSOCIATIVE {
        let s = tag.symbol();
        prop(&format!("su2-equivariance[{s}]"), ACTION_TRIALS, composite, &mut |rng| {
            let a = su2_random_with(tag, rng).expect("associative");
            let v = spinor(tag, rng);
            let av = su2_apply(&a, &v).expect("tags agree");
            let norm = rel(libm::fabs(av.norm() - v.norm()), v.norm());
            induced_residual(&v, &av, &adjoint_rotation(&a).expect("unitary")).max(norm)
        });
        prop(&format!("adjoint-rotation-special-orthogonal[{s}]"), ACTION_TRIALS, ROTATION_TOL, &mut |rng| {
            let a = su2_random_with(tag, rng).expect("associative");
            adjoint_rotation(&a).map_or(f64::INFINITY, |r| rotation_defect(r.matrix()))
        });
    }

    prop("trace-invariance", ACTION_TRIALS, composite, &mut |rng| {
        let a = *su2_random_with(AlgebraTag::Quaternion, rng).expect("associative").entries();
        let x = hermitian(rng);
        let (ha, hx) = (quaternion_complexify(&a).expect("ℍ"), quaternion_complexify(&x).expect("ℍ"));
        let conjugated = mat4_mul(&mat4_mul(&ha, &hx), &mat4_adjoint(&ha));
        let tr = mat4_trace(&conjugated).scale(0.5);
        let tr_x = (x[0][0] + x[1][1]).real_part();
        let direct = mat2_mul(&mat2_mul(&a, &x), &mat2_adjoint(&a));
        let tr_direct = direct[0][0] + direct[1][1];
        let scale = libm::sqrt(x.iter().flatten().map(AlgebraElement::norm_sq).sum::<f64>()).max(1.0);
        let via_h = tr.distance(&AlgebraElement::real(AlgebraTag::Complex, tr_x));
        let plain = tr_direct.distance(&AlgebraElement::real(AlgebraTag::Quaternion, tr_x));
        rel(via_h.max(plain), scale)
    });
    prop("complexify-homomorphism", ACTION_TRIALS, composite, &mut |rng| {
        let mut m = || -> Matrix2 {
            let mut g = || gaussian_element(AlgebraTag::Quaternion, rng);
            [[g(), g()], [g(), g()]]
        };
        let (a, b) = (m(), m());
        let h = |x: &Matrix2| quaternion_complexify(x).expect("ℍ");
        let product = mat4_distance(&h(&mat2_mul(&a, &b)), &mat4_mul(&h(&a), &h(&b)));
        let adjoint = mat4_distance(&h(&mat2_adjoint(&a)), &mat4_adjoint(&h(&a)));
        let tr = mat4_trace(&h(&a));
        let trace = libm::fabs(tr.real_part() - 2.0 * (a[0][0] + a[1][1]).real_part()) + tr.imag_part().norm();
        let scale: f64 = a.iter().chain(&b).flatten().map(AlgebraElement::norm_sq).sum();
        rel(product.max(adjoint).max(trace), scale.max(1.0))
    });
    out
}

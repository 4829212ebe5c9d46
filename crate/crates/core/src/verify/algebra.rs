use alloc::format;
use alloc::vec::Vec;

use super::{check, rel, PropertyResult, Suite, VerifyConfig};
use crate::algebra::{
    octonion_relations, AlgebraElement, AlgebraTag, StructureTable, CAYLEY_DICKSON_RELABEL,
    COMPLEX_BASIS, QUATERNION_BASIS,
};
use crate::random::{gaussian_element, SeededRng};

const TRIALS: usize = 10_000;

/// Products through one fixed table.
struct Arith<'a> {
    table: &'a StructureTable,
    tag: AlgebraTag,
}

impl Arith<'_> {
    fn m(&self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement {
        self.table.mul(&a, &b).expect("operands drawn for this table")
    }

    fn draw(&self, rng: &mut SeededRng) -> AlgebraElement {
        gaussian_element(self.tag, rng)
    }
}

/// The algebra properties with every octonion product taken through
/// `table`; ℂ and ℍ use its restrictions to `{e, e₁}` and `{e, e₁, e₂, e₄}`.
pub fn algebra_suite_with_table(table: &StructureTable, config: &VerifyConfig) -> Vec<PropertyResult> {
    let tol = config.tolerances.single;
    let n = config.trials_or(TRIALS);
    let one_shot = |name: &str, residual: f64| check(Suite::Algebra, name.into(), 1, 0.0, config, |_| residual);
    let mut out = Vec::new();

    let relations = octonion_relations();
    out.extend(check(Suite::Algebra, "octonion-relations".into(), relations.len(), 0.0, config, {
        let mut i = 0;
        move |_| {
            let (a, b, c) = relations[i];
            i += 1;
            if table.entry(a, b) == c { 0.0 } else { 1.0 }
        }
    }));

    let cd = StructureTable::cayley_dickson(3).relabeled(&CAYLEY_DICKSON_RELABEL);
    let differing = (0..8).flat_map(|i| (0..8).map(move |j| (i, j))).filter(|&(i, j)| table.entry(i, j) != cd.entry(i, j));
    out.extend(one_shot("cayley-dickson-agreement", differing.count() as f64));

    let subalgebras = [
        (table.restricted(&COMPLEX_BASIS), StructureTable::cayley_dickson(1)),
        (table.restricted(&QUATERNION_BASIS), StructureTable::cayley_dickson(2)),
    ];
    let bad = subalgebras.iter().filter(|(r, c)| !r.const_eq(c)).count();
    out.extend(one_shot("subalgebra-consistency", bad as f64));

    let o = Arith { table, tag: AlgebraTag::Octonion };
    let e = |i| AlgebraElement::basis(AlgebraTag::Octonion, i).expect("index < 8");
    let lhs = o.m(o.m(e(1), e(2)), o.m(e(2), e(3)));
    let rhs = o.m(e(1), o.m(o.m(e(2), e(2)), e(3)));
    let witness = lhs.distance(&e(7)) + rhs.distance(&-e(7));
    out.extend(one_shot("non-associativity-witness", witness));

    let restricted = [
        (AlgebraTag::Real, table.restricted(&[0])),
        (AlgebraTag::Complex, subalgebras[0].0),
        (AlgebraTag::Quaternion, subalgebras[1].0),
        (AlgebraTag::Octonion, *table),
    ];
    for (tag, t) in &restricted {
        let f = Arith { table: t, tag: *tag };
        out.extend(check(Suite::Algebra, format!("composition-law[{}]", tag.symbol()), n, tol, config, |rng| {
            let (a, b) = (f.draw(rng), f.draw(rng));
            let scale = a.norm() * b.norm();
            rel(libm::fabs(f.m(a, b).norm() - scale), scale)
        }));
        out.extend(check(Suite::Algebra, format!("conjugation-antihomomorphism[{}]", tag.symbol()), n, tol, config, |rng| {
            let (a, b) = (f.draw(rng), f.draw(rng));
            rel(f.m(a, b).conj().distance(&f.m(b.conj(), a.conj())), a.norm() * b.norm())
        }));
    }

    let mut prop = |name: &str, body: &dyn Fn(&mut SeededRng) -> f64| {
        out.extend(check(Suite::Algebra, name.into(), n, tol, config, body));
    };
    prop("rank-equation", &|rng| {
        let x = o.draw(rng);
        let rhs = x.scale(2.0 * x.real_part()) - AlgebraElement::real(x.tag(), x.norm_sq());
        rel(o.m(x, x).distance(&rhs), x.norm_sq())
    });
    prop("inner-product-scaling", &|rng| {
        let (a, b, x) = (o.draw(rng), o.draw(rng), o.draw(rng));
        let lhs = o.m(a, x).inner(&o.m(b, x));
        rel(libm::fabs(lhs - a.inner(&b) * x.norm_sq()), a.norm() * b.norm() * x.norm_sq())
    });
    prop("conjugation-left-cancel", &|rng| {
        let (x, y) = (o.draw(rng), o.draw(rng));
        rel(o.m(x, o.m(x.conj(), y)).distance(&y.scale(x.norm_sq())), x.norm_sq() * y.norm())
    });
    prop("conjugation-right-cancel", &|rng| {
        let (x, y) = (o.draw(rng), o.draw(rng));
        rel(o.m(o.m(x, y.conj()), y).distance(&x.scale(y.norm_sq())), x.norm() * y.norm_sq())
    });
    prop("conjugation-polarized", &|rng| {
        let (x, y, z) = (o.draw(rng), o.draw(rng), o.draw(rng));
        let lhs = o.m(x, o.m(y.conj(), z)) + o.m(y, o.m(x.conj(), z));
        rel(lhs.distance(&z.scale(2.0 * x.inner(&y))), x.norm() * y.norm() * z.norm())
    });
    prop("alternative-flexible", &|rng| {
        let (x, y) = (o.draw(rng), o.draw(rng));
        rel(o.m(o.m(x, y), x).distance(&o.m(x, o.m(y, x))), x.norm_sq() * y.norm())
    });
    prop("alternative-left", &|rng| {
        let (x, y) = (o.draw(rng), o.draw(rng));
        rel(o.m(x, o.m(x, y)).distance(&o.m(o.m(x, x), y)), x.norm_sq() * y.norm())
    });
    prop("alternative-right", &|rng| {
        let (x, y) = (o.draw(rng), o.draw(rng));
        rel(o.m(o.m(x, y), y).distance(&o.m(x, o.m(y, y))), x.norm() * y.norm_sq())
    });
    prop("moufang-middle", &|rng| {
        let (a, x, y) = (o.draw(rng), o.draw(rng), o.draw(rng));
        let lhs = o.m(o.m(a, x), o.m(y, a));
        let rhs = o.m(a, o.m(o.m(x, y), a));
        rel(lhs.distance(&rhs), a.norm_sq() * x.norm() * y.norm())
    });
    prop("moufang-left", &|rng| {
        let (a, x, y) = (o.draw(rng), o.draw(rng), o.draw(rng));
        let lhs = o.m(a, o.m(x, o.m(a, y)));
        let rhs = o.m(o.m(a, o.m(x, a)), y);
        rel(lhs.distance(&rhs), a.norm_sq() * x.norm() * y.norm())
    });
    prop("moufang-right", &|rng| {
        let (a, x, y) = (o.draw(rng), o.draw(rng), o.draw(rng));
        let lhs = o.m(x, o.m(a, o.m(y, a)));
        let rhs = o.m(o.m(o.m(x, a), y), a);
        rel(lhs.distance(&rhs), a.norm_sq() * x.norm() * y.norm())
    });
    out
}

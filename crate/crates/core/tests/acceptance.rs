//! One line per acceptance criterion; exits non-zero if any criterion fails.
//!
//! Runs without the libtest harness so the lines always appear in `cargo test` output.

use std::collections::BTreeMap;
use std::sync::Arc;

use fgre::chartheory::{
    complex_character_table, complex_wedderburn, decompose, real_character_table, real_wedderburn, Character,
    CharacterTable, DivisionRing,
};
use fgre::clifford::{
    clifford_verify, gamma_products_rank, lie_closure_dim, paper_gammas, right_mult_group, sl2_generators,
    u2_generators,
};
use fgre::cycarith::{rational, Cyc};
use fgre::groupalgebra::{
    block_dimension, central_idempotents, enumerate_idempotents_commutative, integral_idempotent_check,
    parse_element, q8_decompose, q8_reconstruct, verify_idempotent, AlgebraElement,
};
use fgre::groupcore::{automorphism_group, builtin_group, matrix_group_closure, FiniteGroup, Payload, BUILTIN_NAMES};
use fgre::reps::{builtin_rep, rep_character_on, verify_homomorphism, BUILTIN_REPS};
use fgre::{CycMatrix, Matrix, Quaternion, Rational};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Failures = Vec<String>;

fn check(failures: &mut Failures, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

fn group(name: &str) -> Arc<FiniteGroup> {
    builtin_group(name).expect("builtin group")
}

fn q(g: &FiniteGroup, a: i64, b: i64, c: i64, d: i64, den: i64) -> usize {
    g.find_quaternion(&Quaternion::from_frac(a, b, c, d, den)).expect("quaternion in group")
}

fn real_table_2t() -> CharacterTable {
    real_character_table(&complex_character_table(&group("2T")).unwrap()).unwrap()
}

fn classes() -> Failures {
    let g = group("2T");
    let mut f = Failures::new();
    check(&mut f, g.class_sizes() == [1, 1, 6, 4, 4, 4, 4], || format!("sizes {:?}", g.class_sizes()));
    check(&mut f, g.class_orders() == [1, 2, 4, 3, 3, 6, 6], || format!("orders {:?}", g.class_orders()));
    let m1 = q(&g, -1, 0, 0, 0, 1);
    let units = [q(&g, 0, 1, 0, 0, 1), q(&g, 0, 0, 1, 0, 1), q(&g, 0, 0, 0, 1, 1)];
    let (w, v) = (q(&g, -1, 1, 1, 1, 2), q(&g, -1, -1, -1, -1, 2));
    let w_class: Vec<usize> = std::iter::once(w).chain(units.iter().map(|&u| g.mul(w, u))).collect();
    let v_class: Vec<usize> = std::iter::once(v).chain(units.iter().map(|&u| g.mul(m1, g.mul(v, u)))).collect();
    let neg = |xs: &[usize]| xs.iter().map(|&x| g.mul(m1, x)).collect::<Vec<_>>();
    let printed: Vec<Vec<usize>> = vec![
        vec![g.identity()],
        vec![m1],
        [units.to_vec(), neg(&units)].concat(),
        w_class.clone(),
        v_class.clone(),
        neg(&w_class),
        neg(&v_class),
    ];
    for mut members in printed {
        members.sort_unstable();
        let c = g.class_of(members[0]);
        check(&mut f, g.classes()[c].members == members, || format!("class of {} differs", g.label(members[0])));
    }
    f
}

fn complex_table() -> Failures {
    let g = group("2T");
    let ct = complex_character_table(&g).unwrap();
    let m1 = q(&g, -1, 0, 0, 0, 1);
    let (w, v) = (q(&g, -1, 1, 1, 1, 2), q(&g, -1, -1, -1, -1, 2));
    let cols = [g.identity(), m1, q(&g, 0, 1, 0, 0, 1), w, g.mul(m1, w), v, g.mul(m1, v)];
    let om = Cyc::omega();
    let ob = om.conj();
    let n = Cyc::from_int;
    let mut printed = vec![
        vec![n(1), n(1), n(1), n(1), n(1), n(1), n(1)],
        vec![n(1), n(1), n(1), om.clone(), om.clone(), ob.clone(), ob.clone()],
        vec![n(1), n(1), n(1), ob.clone(), ob.clone(), om.clone(), om.clone()],
        vec![n(3), n(3), n(-1), n(0), n(0), n(0), n(0)],
        vec![n(2), n(-2), n(0), n(-1), n(1), n(-1), n(1)],
        vec![n(2), n(-2), n(0), -&om, om.clone(), -&ob, ob.clone()],
        vec![n(2), n(-2), n(0), -&ob, ob.clone(), -&om, om.clone()],
    ];
    let mut computed: Vec<Vec<Cyc>> =
        ct.irreducibles.iter().map(|chi| cols.iter().map(|&x| chi.values[ct.class_of[x]].clone()).collect()).collect();
    printed.sort();
    computed.sort();
    let mut f = Failures::new();
    check(&mut f, computed == printed, || "7×7 table differs".into());
    // canonical class order puts v's class (smallest coordinates) before w's
    let positions: Vec<usize> = cols.iter().map(|&x| ct.class_of[x]).collect();
    check(&mut f, positions == [0, 1, 2, 4, 5, 3, 6], || format!("column positions {positions:?}"));
    f
}

fn real_table() -> Failures {
    let g = group("2T");
    let rt = real_table_2t();
    let m1 = q(&g, -1, 0, 0, 0, 1);
    let w = q(&g, -1, 1, 1, 1, 2);
    let cols = [g.identity(), m1, q(&g, 0, 1, 0, 0, 1), w, g.mul(m1, w)];
    let printed: [(&str, [i64; 5]); 5] = [
        ("1", [1, 1, 1, 1, 1]),
        ("2", [2, 2, 2, -1, -1]),
        ("3", [3, 3, -1, 0, 0]),
        ("4H", [4, -4, 0, -2, 2]),
        ("4C", [4, -4, 0, 1, -1]),
    ];
    let mut f = Failures::new();
    check(&mut f, rt.len() == 5 && rt.classes.len() == 5, || format!("{} rows", rt.len()));
    for (label, row) in printed {
        let chi = rt.character(label).unwrap();
        let got: Vec<Cyc> = cols.iter().map(|&x| chi.values[rt.class_of[x]].clone()).collect();
        let want: Vec<Cyc> = row.iter().map(|&v| Cyc::from_int(v)).collect();
        check(&mut f, got == want, || format!("row {label}: {got:?}"));
    }
    f
}

fn wedderburn() -> Failures {
    let mut f = Failures::new();
    let q8 = real_wedderburn(&group("Q8")).unwrap();
    check(&mut f, q8.to_string() == "4ℝ + ℍ", || format!("ℝQ8 = {q8}"));
    let t = real_wedderburn(&group("2T")).unwrap();
    check(&mut f, t.to_string() == "ℝ + ℂ + ℍ + M2(ℂ) + M3(ℝ)", || format!("ℝ2T = {t}"));
    check(&mut f, t.dims() == [1, 2, 4, 8, 9], || format!("dims {:?}", t.dims()));
    let c = complex_wedderburn(&group("2T")).unwrap();
    let mut census = BTreeMap::new();
    for b in &c.blocks {
        check(&mut f, b.ring == DivisionRing::Complex, || format!("block {b:?}"));
        *census.entry(b.size).or_insert(0) += 1;
    }
    check(&mut f, census == BTreeMap::from([(1, 3), (2, 3), (3, 1)]), || format!("ℂ2T = {c}"));
    f
}

/// `4H4C4C` → sorted labels.
fn labels_of(printed: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut chars = printed.chars().peekable();
    while let Some(c) = chars.next() {
        match chars.peek() {
            Some(&s) if s.is_ascii_alphabetic() => {
                out.push(format!("{c}{s}"));
                chars.next();
            }
            _ => out.push(c.to_string()),
        }
    }
    out.sort();
    out
}

fn terms(chi: &Character, rt: &CharacterTable) -> Vec<String> {
    let mut t: Vec<String> = decompose(chi, rt).unwrap().terms().iter().map(|s| s.to_string()).collect();
    t.sort();
    t
}

fn tensor() -> Failures {
    let rt = real_table_2t();
    let chi = |l: &str| rt.character(l).unwrap().clone();
    let names = ["2", "3", "4H", "4C"];
    let printed = [
        ["13", "123", "4C4C", "4H4C"],
        ["123", "1233", "4H4C4C", "4H4C4C"],
        ["4C4C", "4H4C4C", "11113333", "223333"],
        ["4H4C", "4H4C4C", "223333", "1123333"],
    ];
    let mut f = Failures::new();
    for (a, row) in names.iter().zip(printed) {
        for (b, entry) in names.iter().zip(row) {
            let got = terms(&chi(a).product(&chi(b)).unwrap(), &rt);
            check(&mut f, got == labels_of(entry), || format!("{a}⊗{b} = {} (printed {entry})", got.concat()));
        }
    }
    let one_two = chi("1").sum(&chi("2")).unwrap();
    for r in names {
        let lhs = terms(&one_two.product(&chi(r)).unwrap(), &rt);
        let rhs = terms(&chi("3").product(&chi(r)).unwrap(), &rt);
        check(&mut f, lhs == rhs, || format!("(1+2)⊗{r} = {} ≠ 3⊗{r} = {}", lhs.concat(), rhs.concat()));
    }
    let a = terms(&chi("3").product(&chi("4H")).unwrap(), &rt);
    let b = terms(&chi("3").product(&chi("4C")).unwrap(), &rt);
    check(&mut f, a == b, || "3⊗4H ≠ 3⊗4C".into());
    let one_three = chi("1").sum(&chi("3")).unwrap();
    let sq = terms(&one_three.product(&one_three).unwrap(), &rt);
    let cc = terms(&chi("4C").product(&chi("4C")).unwrap(), &rt);
    let want = labels_of("1123333");
    check(&mut f, sq == want && cc == want, || format!("(1+3)⊗(1+3) = {}, 4C⊗4C = {}", sq.concat(), cc.concat()));
    f
}

fn matrices() -> Failures {
    let ct = complex_character_table(&group("2T")).unwrap();
    let rt = real_character_table(&ct).unwrap();
    let mut f = Failures::new();
    for name in BUILTIN_REPS {
        let r = builtin_rep(name).unwrap();
        if !verify_homomorphism(&r) {
            f.push(format!("{name} is not a homomorphism"));
            continue;
        }
        if name == "2T.4H_complex" {
            let chi = rep_character_on(&r, &ct).unwrap();
            let row = ct.irreducibles.iter().position(|c| *c == chi);
            check(&mut f, row.is_some_and(|i| ct.fs[i] == -1), || format!("{name}: {chi:?}"));
            let real = rep_character_on(&r.realify().unwrap(), &rt).unwrap();
            check(&mut f, *rt.character("4H").unwrap() == real, || format!("{name} realified"));
        } else {
            let chi = rep_character_on(&r, &rt).unwrap();
            let label = name.trim_start_matches("2T.");
            check(&mut f, *rt.character(label).unwrap() == chi, || format!("{name}: {chi:?}"));
        }
    }
    f
}

fn order_three_sum(g: &Arc<FiniteGroup>) -> AlgebraElement {
    let xs: Vec<usize> = (0..g.order()).filter(|&x| g.element_order(x) == 3).collect();
    AlgebraElement::sum_of(g, &xs)
}

fn idempotents() -> Failures {
    let g = group("2T");
    let e = AlgebraElement::one(&g);
    let s = order_three_sum(&g);
    let fermion = parse_element(&g, "e-i^2").unwrap();
    let h = fermion.mul(&e.scale_rational(&rational(2, 1)).sub(&s).unwrap()).unwrap().scale_rational(&rational(1, 12));
    let m2c = fermion.mul(&e.scale_rational(&rational(4, 1)).add(&s).unwrap()).unwrap().scale_rational(&rational(1, 12));
    let list = [
        (parse_element(&g, "(e+i^2)(e+i)(e+j)(e+w+v)/24").unwrap(), 1),
        (parse_element(&g, "(e+i^2)(e+i)(e+j)(2e-w-v)/24").unwrap(), 2),
        (parse_element(&g, "(e+i^2)(3e-i-j-k)/8").unwrap(), 9),
        (h, 4),
        (m2c, 8),
    ];
    let mut f = Failures::new();
    let mut total = AlgebraElement::zero(&g);
    for (n, (a, dim)) in list.iter().enumerate() {
        let r = verify_idempotent(a);
        check(&mut f, r.idempotent && r.central, || format!("idempotent {n}: {r:?}"));
        if r.idempotent {
            let d = block_dimension(a).unwrap();
            check(&mut f, d == *dim, || format!("idempotent {n} has block dimension {d}"));
        }
        for (b, _) in &list[n + 1..] {
            check(&mut f, a.mul(b).unwrap().is_zero(), || format!("idempotent {n} not orthogonal"));
        }
        total = total.add(a).unwrap();
    }
    check(&mut f, total == e, || "sum is not e".into());
    for text in ["(e+i^2)/2", "(e-i^2)/2"] {
        let p = parse_element(&g, text).unwrap();
        check(&mut f, verify_idempotent(&p).idempotent && block_dimension(&p).unwrap() == 12, || text.into());
    }
    let a = e.scale_rational(&rational(2, 1)).sub(&s).unwrap().scale_rational(&rational(1, 6));
    let b = e.scale_rational(&rational(4, 1)).add(&s).unwrap().scale_rational(&rational(1, 6));
    check(&mut f, a.coeff(g.identity()) == &Cyc::from_frac(1, 3), || "(2e-s)/6 identity coefficient".into());
    check(&mut f, b.coeff(g.identity()) == &Cyc::from_frac(2, 3), || "(4e+s)/6 identity coefficient".into());
    f
}

fn z3_toy() -> Failures {
    let g = group("Z3");
    let all = enumerate_idempotents_commutative(&g).unwrap();
    let mut f = Failures::new();
    check(&mut f, all.len() == 4, || format!("{} idempotents", all.len()));
    for text in ["(e+v+w)/3", "(2e-v-w)/3"] {
        check(&mut f, all.contains(&parse_element(&g, text).unwrap()), || format!("{text} missing"));
    }
    for a in &all {
        check(&mut f, verify_idempotent(a).idempotent, || format!("{a} is not idempotent"));
    }
    let integral = integral_idempotent_check(&g).unwrap();
    check(&mut f, integral == [AlgebraElement::zero(&g), AlgebraElement::one(&g)], || format!("{} integral", integral.len()));
    f
}

fn q8_decomposition() -> Failures {
    let g = group("Q8");
    let mut f = Failures::new();
    for x in 0..g.order() {
        let a = AlgebraElement::basis(&g, x);
        let d = q8_decompose(&a).unwrap();
        check(&mut f, q8_reconstruct(&g, &d.raw).unwrap() == a, || format!("{} does not round-trip", g.label(x)));
    }
    let d = q8_decompose(&AlgebraElement::one(&g)).unwrap();
    let pairs: Vec<(Rational, Rational)> =
        d.quantum_numbers.iter().map(|n| (n.charge.clone(), n.weak_isospin.clone())).collect();
    let want = vec![
        (rational(0, 1), rational(1, 2)),
        (rational(-1, 1), rational(-1, 2)),
        (rational(1, 1), rational(1, 2)),
        (rational(0, 1), rational(-1, 2)),
    ];
    check(&mut f, pairs == want, || format!("{pairs:?}"));
    f
}

fn automorphisms() -> Failures {
    let a = automorphism_group(&group("Q8")).unwrap();
    let mut f = Failures::new();
    check(&mut f, a.order() == 24, || format!("order {}", a.order()));
    check(&mut f, a.inner_count() == 4, || format!("{} inner", a.inner_count()));
    let census = a.order_census();
    check(&mut f, census == BTreeMap::from([(1, 1), (2, 9), (3, 8), (4, 6)]), || format!("{census:?}"));
    f
}

fn dirac() -> Failures {
    let gs = paper_gammas();
    let mut f = Failures::new();
    check(&mut f, clifford_verify(&gs) == Ok(vec![1, -1, -1, -1]), || format!("{:?}", clifford_verify(&gs)));
    let q8 = right_mult_group(&gs).unwrap();
    check(&mut f, q8.order() == 8 && q8.class_sizes() == [1, 1, 2, 2, 2], || format!("right group {}", q8.order()));
    let u2 = lie_closure_dim(&u2_generators(&gs));
    check(&mut f, u2 == 4, || format!("u(2) closure dimension {u2}"));
    let sl = lie_closure_dim(&sl2_generators(&gs));
    check(&mut f, sl == 6, || format!("closure of {{iγ1γ2, iγ2γ3}} has dimension {sl}, expected 6"));
    check(&mut f, gamma_products_rank(&gs) == 16, || "gamma products dependent".into());
    f
}

fn closure() -> Failures {
    let g = group("2T");
    let mut gens = Vec::new();
    for x in 0..g.order() {
        let Payload::Quaternion(u) = g.payload(x) else { unreachable!("2T is a quaternion group") };
        gens.push(u.left_matrix());
        gens.push(u.right_matrix());
    }
    let order = matrix_group_closure(&gens, 10_000).unwrap().order;
    if order == 288 { vec![] } else { vec![format!("order {order}")] }
}

fn arb_cyc() -> impl Strategy<Value = Cyc> {
    prop::array::uniform8((-9i64..=9, 1i64..=6)).prop_map(|c| Cyc::from_coeffs(c.map(|(n, d)| rational(n, d))))
}

fn properties() -> Failures {
    let mut f = Failures::new();
    for name in BUILTIN_NAMES {
        let g = group(name);
        let ct = complex_character_table(&g).unwrap();
        let rt = real_character_table(&ct).unwrap();
        for t in [&ct, &rt] {
            check(&mut f, t.check_row_orthogonality().is_ok(), || format!("{name}: row orthogonality"));
            check(&mut f, t.check_column_orthogonality().is_ok(), || format!("{name}: column orthogonality"));
        }
        let sum: usize = ct.degrees().iter().map(|d| d * d).sum();
        check(&mut f, sum == g.order(), || format!("{name}: Σd² = {sum}"));
        let ids = central_idempotents(&ct, &g).unwrap();
        let total = ids.iter().fold(AlgebraElement::zero(&g), |acc, e| acc.add(e).unwrap());
        check(&mut f, total == AlgebraElement::one(&g), || format!("{name}: idempotents incomplete"));
        for (n, a) in ids.iter().enumerate() {
            for (m, b) in ids.iter().enumerate() {
                let p = a.mul(b).unwrap();
                let ok = if n == m { p == *a } else { p.is_zero() };
                check(&mut f, ok, || format!("{name}: e{n}·e{m}"));
            }
        }
    }
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
    let axioms = runner.run(&(arb_cyc(), arb_cyc(), arb_cyc()), |(a, b, c)| {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Cyc::one());
        }
        Ok(())
    });
    check(&mut f, axioms.is_ok(), || format!("field axioms: {axioms:?}"));
    let entries = prop::collection::vec(-2i64..=2, 1..=36);
    let rank_nullity = runner.run(&(1usize..=6, entries), |(cols, data)| {
        let rows = data.len().div_ceil(cols);
        let mut data = data;
        data.resize(rows * cols, 0);
        let m = Matrix::<Rational>::new(rows, cols, data.iter().map(|&x| rational(x, 1)).collect());
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in kernel {
            prop_assert!(m.matmul(&Matrix::new(cols, 1, v)).is_zero());
        }
        Ok(())
    });
    check(&mut f, rank_nullity.is_ok(), || format!("rank–nullity: {rank_nullity:?}"));
    let cyc_rank = CycMatrix::from_rows(vec![vec![Cyc::one(), Cyc::i()], vec![Cyc::i(), Cyc::from_int(-1)]]);
    check(&mut f, cyc_rank.rank() + cyc_rank.kernel().len() == 2, || "rank–nullity over ℚ(ζ₂₄)".into());
    f
}

fn main() {
    let criteria: [(&str, fn() -> Failures); 13] = [
        ("classes-2.2", classes),
        ("chartable-complex-2.2", complex_table),
        ("chartable-real-2.2", real_table),
        ("wedderburn", wedderburn),
        ("tensor-2.3", tensor),
        ("matrices-2.4", matrices),
        ("idempotents-2.5", idempotents),
        ("z3-toy-2.5", z3_toy),
        ("q8-decompose-1.3", q8_decomposition),
        ("aut-1.4", automorphisms),
        ("dirac-3.1", dirac),
        ("closure-1.4", closure),
        ("property-suites", properties),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let failures = run();
        if failures.is_empty() {
            println!("criterion {:>2} {name}: PASS", n + 1);
        } else {
            failed += 1;
            println!("criterion {:>2} {name}: FAIL: {}", n + 1, failures.join("; "));
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

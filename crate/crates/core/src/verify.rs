//! Named end-to-end checks of the published results on Q8, 2T and Z3.
//!
//! Each check recomputes a result from scratch and compares it with the expected values
//! stored here. Checks run on separate threads; the report keeps the fixed order of
//! [`CHECK_NAMES`].

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chartheory::{
    complex_character_table, complex_wedderburn, decompose, real_character_table, real_wedderburn, CharacterTable,
    DivisionRing, TensorDecomposition,
};
use crate::clifford::{
    clifford_verify, gamma_products_rank, lie_closure_dim, paper_gammas, right_mult_group, sl2_generators,
    u2_generators,
};
use crate::cycarith::{rational, Cyc, CycMatrix, Matrix, Rational};
use crate::error::{Error, Result};
use crate::groupalgebra::{
    block_dimension, central_idempotents, enumerate_idempotents_commutative, integral_idempotent_check,
    parse_element, q8_decompose, q8_reconstruct, verify_idempotent, AlgebraElement, QuantumNumbers,
};
use crate::groupcore::{
    automorphism_group, builtin_closure_set, builtin_group, matrix_group_closure, FiniteGroup, Payload, Quaternion,
    BUILTIN_CLOSURE_SETS, BUILTIN_NAMES, DEFAULT_CAP,
};
use crate::reps::{builtin_rep, rep_character_on, verify_homomorphism, MatrixRep, BUILTIN_REPS};

pub const CHECK_NAMES: [&str; 14] = [
    "classes-2.2",
    "chartable-complex-2.2",
    "chartable-real-2.2",
    "wedderburn",
    "tensor-2.3",
    "matrices-2.4",
    "idempotents-2.5",
    "z3-toy-2.5",
    "q8-decompose-1.3",
    "aut-1.4",
    "dirac-3.1",
    "closure-1.4",
    "closure-f4",
    "property-suites",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn status_of(&self, name: &str) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("report: {e}")))
    }

    pub fn to_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{} {:<width$} {:>9.1} ms  {}", c.status.as_str(), c.name, c.elapsed_ms, c.detail);
        }
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} skipped",
            count(CheckStatus::Pass),
            count(CheckStatus::Fail),
            count(CheckStatus::Skip)
        );
        out
    }
}

/// Replaces one generator image of a built-in representation before the checks run.
#[derive(Clone, Debug)]
pub struct Corruption {
    pub rep: String,
    pub generator: String,
    pub matrix: CycMatrix,
}

impl Corruption {
    /// Negates the top-left entry of a generator image.
    pub fn sign_flip(rep: &str, generator: &str) -> Result<Self> {
        let r = builtin_rep(rep)?;
        let (_, m) = r
            .generators()
            .find(|(n, _)| *n == generator)
            .ok_or_else(|| Error::UnknownName(generator.to_string()))?;
        let mut matrix = m.clone();
        matrix.set(0, 0, -matrix.get(0, 0));
        Ok(Corruption { rep: rep.to_string(), generator: generator.to_string(), matrix })
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Restrict to these checks; `None` runs all.
    pub only: Option<Vec<String>>,
    pub corrupt: Option<Corruption>,
}

struct Outcome {
    status: CheckStatus,
    detail: String,
}

impl Outcome {
    fn judge(ok: bool, detail: impl Into<String>) -> Self {
        Outcome { status: if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail: detail.into() }
    }
}

/// Collects mismatches; a check passes when none were recorded.
#[derive(Default)]
struct Mismatches(Vec<String>);

impl Mismatches {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn outcome(self, summary: &str) -> Outcome {
        if self.0.is_empty() {
            Outcome::judge(true, summary)
        } else {
            Outcome::judge(false, self.0.join("; "))
        }
    }
}

pub fn run_checks(opts: &VerifyOptions) -> Result<VerificationReport> {
    let selected: Vec<&str> = match &opts.only {
        None => CHECK_NAMES.to_vec(),
        Some(names) => {
            for n in names {
                if !CHECK_NAMES.contains(&n.as_str()) {
                    return Err(Error::UnknownName(n.clone()));
                }
            }
            CHECK_NAMES.iter().copied().filter(|c| names.iter().any(|n| n == c)).collect()
        }
    };
    let checks = std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|&name| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let outcome = run_one(name, opts).unwrap_or_else(|e| Outcome::judge(false, format!("error: {e}")));
                    CheckResult {
                        name: name.to_string(),
                        status: outcome.status,
                        detail: outcome.detail,
                        elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .zip(&selected)
            .map(|(h, name)| {
                h.join().unwrap_or_else(|_| CheckResult {
                    name: name.to_string(),
                    status: CheckStatus::Fail,
                    detail: "check panicked".into(),
                    elapsed_ms: 0.0,
                })
            })
            .collect()
    });
    Ok(VerificationReport { checks })
}

fn run_one(name: &str, opts: &VerifyOptions) -> Result<Outcome> {
    match name {
        "classes-2.2" => check_classes(),
        "chartable-complex-2.2" => check_complex_table(),
        "chartable-real-2.2" => check_real_table(),
        "wedderburn" => check_wedderburn(),
        "tensor-2.3" => check_tensor(),
        "matrices-2.4" => check_matrices(opts.corrupt.as_ref()),
        "idempotents-2.5" => check_idempotents(),
        "z3-toy-2.5" => check_z3(),
        "q8-decompose-1.3" => check_q8(),
        "aut-1.4" => check_aut(),
        "dirac-3.1" => check_dirac(),
        "closure-1.4" => check_closure(),
        "closure-f4" => check_f4(),
        "property-suites" => check_properties(),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// Element of a quaternion group written as (a, b, c, d) over a common denominator.
fn quat(g: &FiniteGroup, a: i64, b: i64, c: i64, d: i64, den: i64) -> Result<usize> {
    g.find_quaternion(&Quaternion::from_frac(a, b, c, d, den))
        .ok_or_else(|| Error::InternalInconsistency(format!("({a},{b},{c},{d})/{den} not in {}", g.name())))
}

fn q_mul(g: &FiniteGroup, xs: &[usize]) -> usize {
    xs.iter().fold(g.identity(), |acc, &x| g.mul(acc, x))
}

/// The classes of 2T as printed: size, order, members.
fn expected_classes(g: &FiniteGroup) -> Result<Vec<(usize, usize, Vec<usize>)>> {
    let one = quat(g, 1, 0, 0, 0, 1)?;
    let m1 = quat(g, -1, 0, 0, 0, 1)?;
    let (i, j, k) = (quat(g, 0, 1, 0, 0, 1)?, quat(g, 0, 0, 1, 0, 1)?, quat(g, 0, 0, 0, 1, 1)?);
    let (w, v) = (quat(g, -1, 1, 1, 1, 2)?, quat(g, -1, -1, -1, -1, 2)?);
    let neg = |x: usize| g.mul(m1, x);
    let units = [i, j, k];
    let w_class: Vec<usize> = std::iter::once(w).chain(units.iter().map(|&u| q_mul(g, &[w, u]))).collect();
    let v_class: Vec<usize> = std::iter::once(v).chain(units.iter().map(|&u| neg(q_mul(g, &[v, u])))).collect();
    Ok(vec![
        (1, 1, vec![one]),
        (1, 2, vec![m1]),
        (6, 4, vec![i, j, k, neg(i), neg(j), neg(k)]),
        (4, 3, w_class.clone()),
        (4, 3, v_class.clone()),
        (4, 6, w_class.iter().map(|&x| neg(x)).collect()),
        (4, 6, v_class.iter().map(|&x| neg(x)).collect()),
    ])
}

fn check_classes() -> Result<Outcome> {
    let g = builtin_group("2T")?;
    let mut m = Mismatches::default();
    m.expect(g.class_sizes() == [1, 1, 6, 4, 4, 4, 4], || format!("sizes {:?}", g.class_sizes()));
    m.expect(g.class_orders() == [1, 2, 4, 3, 3, 6, 6], || format!("orders {:?}", g.class_orders()));
    for (size, order, members) in expected_classes(&g)? {
        let c = g.class_of(members[0]);
        let mut actual = g.classes()[c].members.clone();
        let mut want = members.clone();
        actual.sort_unstable();
        want.sort_unstable();
        m.expect(actual == want, || format!("class of {} is {:?}", g.label(members[0]), actual));
        m.expect(g.classes()[c].size() == size && g.element_order(members[0]) == order, || {
            format!("class of {} has size {} order {}", g.label(members[0]), g.classes()[c].size(), g.element_order(members[0]))
        });
    }
    Ok(m.outcome("7 classes, sizes [1,1,6,4,4,4,4], orders [1,2,4,3,3,6,6]"))
}

fn omega() -> (Cyc, Cyc) {
    let w = Cyc::omega();
    let wb = w.conj();
    (w, wb)
}

/// The printed table restricted to columns in the printed order, rows sorted.
fn table_rows_at(ct: &CharacterTable, columns: &[usize]) -> Vec<Vec<Cyc>> {
    let mut rows: Vec<Vec<Cyc>> =
        ct.irreducibles.iter().map(|chi| columns.iter().map(|&c| chi.values[ct.class_of[c]].clone()).collect()).collect();
    rows.sort();
    rows
}

fn printed_columns(g: &FiniteGroup, with_v: bool) -> Result<Vec<usize>> {
    let m1 = quat(g, -1, 0, 0, 0, 1)?;
    let (w, v) = (quat(g, -1, 1, 1, 1, 2)?, quat(g, -1, -1, -1, -1, 2)?);
    let mut cols = vec![g.identity(), m1, quat(g, 0, 1, 0, 0, 1)?, w, g.mul(m1, w)];
    if with_v {
        cols.extend([v, g.mul(m1, v)]);
    }
    Ok(cols)
}

fn check_complex_table() -> Result<Outcome> {
    let g = builtin_group("2T")?;
    let ct = complex_character_table(&g)?;
    let (w, wb) = omega();
    let c = |n: i64| Cyc::from_int(n);
    let mut expected = vec![
        vec![c(1), c(1), c(1), c(1), c(1), c(1), c(1)],
        vec![c(1), c(1), c(1), w.clone(), w.clone(), wb.clone(), wb.clone()],
        vec![c(1), c(1), c(1), wb.clone(), wb.clone(), w.clone(), w.clone()],
        vec![c(3), c(3), c(-1), c(0), c(0), c(0), c(0)],
        vec![c(2), c(-2), c(0), c(-1), c(1), c(-1), c(1)],
        vec![c(2), c(-2), c(0), -&w, w.clone(), -&wb, wb.clone()],
        vec![c(2), c(-2), c(0), -&wb, wb.clone(), -&w, w.clone()],
    ];
    expected.sort();
    let actual = table_rows_at(&ct, &printed_columns(&g, true)?);
    let mut m = Mismatches::default();
    m.expect(ct.len() == 7, || format!("{} rows", ct.len()));
    m.expect(actual == expected, || "rows differ from the printed 7×7 table".into());
    m.expect(ct.check_row_orthogonality().is_ok() && ct.check_column_orthogonality().is_ok(), || {
        "orthogonality fails".into()
    });
    Ok(m.outcome("7×7 table matches up to row order; columns 1,-1,i,w,-w,v,-v"))
}

fn check_real_table() -> Result<Outcome> {
    let g = builtin_group("2T")?;
    let rt = real_character_table(&complex_character_table(&g)?)?;
    let rows: [(&str, [i64; 5]); 5] = [
        ("1", [1, 1, 1, 1, 1]),
        ("2", [2, 2, 2, -1, -1]),
        ("3", [3, 3, -1, 0, 0]),
        ("4H", [4, -4, 0, -2, 2]),
        ("4C", [4, -4, 0, 1, -1]),
    ];
    let cols = printed_columns(&g, false)?;
    let mut m = Mismatches::default();
    m.expect(rt.len() == 5 && rt.classes.len() == 5, || format!("{}×{} table", rt.len(), rt.classes.len()));
    for (label, values) in rows {
        let Some(r) = rt.row_by_label(label) else {
            m.expect(false, || format!("no row {label}"));
            continue;
        };
        let got: Vec<Cyc> = cols.iter().map(|&c| rt.irreducibles[r].values[rt.class_of[c]].clone()).collect();
        let want: Vec<Cyc> = values.iter().map(|&v| Cyc::from_int(v)).collect();
        m.expect(got == want, || format!("row {label} is {got:?}"));
    }
    Ok(m.outcome("5×5 table matches, 4H = (4,-4,0,-2,2), 4C = (4,-4,0,1,-1)"))
}

fn check_wedderburn() -> Result<Outcome> {
    let mut m = Mismatches::default();
    let q8 = real_wedderburn(&*builtin_group("Q8")?)?;
    m.expect(q8.to_string() == "4ℝ + ℍ", || format!("ℝQ8 = {q8}"));
    let t = real_wedderburn(&*builtin_group("2T")?)?;
    m.expect(t.to_string() == "ℝ + ℂ + ℍ + M2(ℂ) + M3(ℝ)", || format!("ℝ2T = {t}"));
    m.expect(t.dims() == [1, 2, 4, 8, 9], || format!("ℝ2T dims {:?}", t.dims()));
    let c = complex_wedderburn(&*builtin_group("2T")?)?;
    let mut census: BTreeMap<(usize, DivisionRing), usize> = BTreeMap::new();
    for b in &c.blocks {
        *census.entry((b.size, b.ring)).or_default() += 1;
    }
    let want = BTreeMap::from([((1, DivisionRing::Complex), 3), ((2, DivisionRing::Complex), 3), ((3, DivisionRing::Complex), 1)]);
    m.expect(census == want, || format!("ℂ2T = {c}"));
    Ok(m.outcome(&format!("ℝQ8 = {q8}; ℝ2T = {t}; ℂ2T = {c}")))
}

/// Splits a run-together decomposition such as `4H4C4C` into labels.
fn split_compact(s: &str) -> Vec<String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if i + 1 < chars.len() && chars[i + 1].is_ascii_alphabetic() {
            out.push(chars[i..i + 2].iter().collect());
            i += 2;
        } else {
            out.push(chars[i].to_string());
            i += 1;
        }
    }
    out.sort();
    out
}

pub const TENSOR_LABELS: [&str; 4] = ["2", "3", "4H", "4C"];

/// The printed tensor table, rows and columns in [`TENSOR_LABELS`] order.
pub const PRINTED_TENSOR_TABLE: [[&str; 4]; 4] = [
    ["13", "123", "4C4C", "4H4C"],
    ["123", "1233", "4H4C4C", "4H4C4C"],
    ["4C4C", "4H4C4C", "11113333", "223333"],
    ["4H4C", "4H4C4C", "223333", "1123333"],
];

fn sorted_terms(d: &TensorDecomposition) -> Vec<String> {
    let mut t: Vec<String> = d.terms().iter().map(|s| s.to_string()).collect();
    t.sort();
    t
}

fn check_tensor() -> Result<Outcome> {
    let rt = real_character_table(&complex_character_table(&*builtin_group("2T")?)?)?;
    let chi = |l: &str| rt.character(l).cloned();
    let mut m = Mismatches::default();
    for (a, row) in TENSOR_LABELS.iter().zip(PRINTED_TENSOR_TABLE) {
        for (b, printed) in TENSOR_LABELS.iter().zip(row) {
            let d = decompose(&chi(a)?.product(&chi(b)?)?, &rt)?;
            m.expect(sorted_terms(&d) == split_compact(printed), || format!("{a}⊗{b} = {} (printed {printed})", d.compact()));
        }
    }
    let one_two = chi("1")?.sum(&chi("2")?)?;
    for r in TENSOR_LABELS {
        let lhs = decompose(&one_two.product(&chi(r)?)?, &rt)?;
        let rhs = decompose(&chi("3")?.product(&chi(r)?)?, &rt)?;
        m.expect(lhs == rhs, || format!("(1+2)⊗{r} = {} but 3⊗{r} = {}", lhs.compact(), rhs.compact()));
    }
    let a = decompose(&chi("3")?.product(&chi("4H")?)?, &rt)?;
    let b = decompose(&chi("3")?.product(&chi("4C")?)?, &rt)?;
    m.expect(a == b, || format!("3⊗4H = {} but 3⊗4C = {}", a.compact(), b.compact()));
    let one_three = chi("1")?.sum(&chi("3")?)?;
    let sq = decompose(&one_three.product(&one_three)?, &rt)?;
    let cc = decompose(&chi("4C")?.product(&chi("4C")?)?, &rt)?;
    let want = split_compact("1123333");
    m.expect(sorted_terms(&sq) == want && sorted_terms(&cc) == want, || {
        format!("(1+3)⊗(1+3) = {}, 4C⊗4C = {}", sq.compact(), cc.compact())
    });
    Ok(m.outcome("16 entries and the three isomorphism families reproduced"))
}

/// Row of `ct` a built-in representation should realize.
fn rep_row(name: &str) -> &str {
    match name {
        "2T.4H_complex" => "2",
        other => other.trim_start_matches("2T."),
    }
}

fn check_matrices(corrupt: Option<&Corruption>) -> Result<Outcome> {
    let ct = complex_character_table(&*builtin_group("2T")?)?;
    let rt = real_character_table(&ct)?;
    let mut m = Mismatches::default();
    for name in BUILTIN_REPS {
        let mut r: MatrixRep = builtin_rep(name)?;
        if let Some(c) = corrupt.filter(|c| c.rep == name) {
            r = r.with_generator(&c.generator, c.matrix.clone())?;
        }
        if !verify_homomorphism(&r) {
            m.expect(false, || format!("{name} is not a homomorphism"));
            continue;
        }
        if name == "2T.4H_complex" {
            // the quaternionic 2-dimensional complex irreducible: real-valued, FS = -1
            let chi = rep_character_on(&r, &ct)?;
            let row = ct.irreducibles.iter().position(|c| *c == chi);
            m.expect(row.is_some_and(|i| ct.fs[i] == -1), || format!("{name} has character {chi:?}"));
            let real = rep_character_on(&r.realify()?, &rt)?;
            m.expect(rt.character("4H").is_ok_and(|c| *c == real), || format!("{name} realified is not 4H"));
        } else {
            let chi = rep_character_on(&r, &rt)?;
            let label = rep_row(name);
            m.expect(rt.character(label).is_ok_and(|c| *c == chi), || format!("{name} has character {chi:?}"));
        }
    }
    Ok(m.outcome("6 built-in representations are homomorphisms with the computed characters"))
}

/// Sum of the order-3 elements of 2T.
fn order_three_sum(g: &Arc<FiniteGroup>) -> AlgebraElement {
    let xs: Vec<usize> = (0..g.order()).filter(|&x| g.element_order(x) == 3).collect();
    AlgebraElement::sum_of(g, &xs)
}

/// The five printed idempotents of ℚ2T and the blocks they should cut out.
pub fn printed_idempotents(g: &Arc<FiniteGroup>) -> Result<Vec<(String, AlgebraElement, usize)>> {
    let s = order_three_sum(g);
    let e = AlgebraElement::one(g);
    let fermion = parse_element(g, "e-i^2")?;
    let two_minus = e.scale_rational(&rational(2, 1)).sub(&s)?;
    let four_plus = e.scale_rational(&rational(4, 1)).add(&s)?;
    let twelfth = rational(1, 12);
    Ok(vec![
        ("ℝ".into(), parse_element(g, "(e+i^2)(e+i)(e+j)(e+w+v)/24")?, 1),
        ("ℂ".into(), parse_element(g, "(e+i^2)(e+i)(e+j)(2e-w-v)/24")?, 2),
        ("M3(ℝ)".into(), parse_element(g, "(e+i^2)(3e-i-j-k)/8")?, 9),
        ("ℍ".into(), fermion.mul(&two_minus)?.scale_rational(&twelfth), 4),
        ("M2(ℂ)".into(), fermion.mul(&four_plus)?.scale_rational(&twelfth), 8),
    ])
}

fn check_idempotents() -> Result<Outcome> {
    let g = builtin_group("2T")?;
    let mut m = Mismatches::default();
    let list = printed_idempotents(&g)?;
    let mut total = AlgebraElement::zero(&g);
    for (n, (label, a, dim)) in list.iter().enumerate() {
        let report = verify_idempotent(a);
        m.expect(report.idempotent && report.central, || format!("{label}: {report:?}"));
        if report.idempotent {
            let got = block_dimension(a)?;
            m.expect(got == *dim, || format!("{label} block has dimension {got}"));
        }
        for (other_label, b, _) in &list[n + 1..] {
            m.expect(a.mul(b)?.is_zero(), || format!("{label}·{other_label} ≠ 0"));
        }
        total = total.add(a)?;
    }
    m.expect(total == AlgebraElement::one(&g), || "the five idempotents do not sum to e".into());
    let half = rational(1, 2);
    for (sign, text) in [("+", "e+i^2"), ("-", "e-i^2")] {
        let p = parse_element(&g, text)?.scale_rational(&half);
        let ok = verify_idempotent(&p).idempotent && block_dimension(&p)? == 12;
        m.expect(ok, || format!("(e{sign}i²)/2 is not a 12-dimensional projection"));
    }
    let s = order_three_sum(&g);
    let e = AlgebraElement::one(&g);
    let sixth = rational(1, 6);
    let a = e.scale_rational(&rational(2, 1)).sub(&s)?.scale_rational(&sixth);
    let b = e.scale_rational(&rational(4, 1)).add(&s)?.scale_rational(&sixth);
    let id = g.identity();
    m.expect(a.coeff(id) == &Cyc::from_frac(1, 3), || format!("(2e-s)/6 has identity coefficient {}", a.coeff(id)));
    m.expect(b.coeff(id) == &Cyc::from_frac(2, 3), || format!("(4e+s)/6 has identity coefficient {}", b.coeff(id)));
    Ok(m.outcome("five central orthogonal idempotents summing to e, blocks 1,2,9,4,8; bosons/fermions 12+12"))
}

fn check_z3() -> Result<Outcome> {
    let g = builtin_group("Z3")?;
    let mut m = Mismatches::default();
    let all = enumerate_idempotents_commutative(&g)?;
    m.expect(all.len() == 4, || format!("{} idempotents in ℚZ3", all.len()));
    for text in ["(e+v+w)/3", "(2e-v-w)/3"] {
        let a = parse_element(&g, text)?;
        m.expect(all.contains(&a), || format!("{text} missing"));
    }
    let integral = integral_idempotent_check(&g)?;
    m.expect(integral == [AlgebraElement::zero(&g), AlgebraElement::one(&g)], || {
        format!("ℤZ3 idempotents: {}", integral.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", "))
    });
    Ok(m.outcome("ℚZ3 has 4 idempotents; ℤZ3 only 0 and e"))
}

fn check_q8() -> Result<Outcome> {
    let g = builtin_group("Q8")?;
    let mut m = Mismatches::default();
    for x in 0..g.order() {
        let a = AlgebraElement::basis(&g, x);
        let d = q8_decompose(&a)?;
        m.expect(q8_reconstruct(&g, &d.raw)? == a, || format!("{} does not round-trip", g.label(x)));
    }
    let d = q8_decompose(&AlgebraElement::one(&g))?;
    let (zero, half) = (rational(0, 1), rational(1, 2));
    let want = [
        QuantumNumbers { charge: zero.clone(), weak_isospin: half.clone() },
        QuantumNumbers { charge: rational(-1, 1), weak_isospin: -half.clone() },
        QuantumNumbers { charge: rational(1, 1), weak_isospin: half.clone() },
        QuantumNumbers { charge: zero, weak_isospin: -half },
    ];
    m.expect(d.quantum_numbers == want, || format!("quantum numbers {:?}", d.quantum_numbers));
    Ok(m.outcome("basis change invertible; (charge, isospin) = (0,½), (−1,−½), (1,½), (0,−½)"))
}

fn check_aut() -> Result<Outcome> {
    let a = automorphism_group(&*builtin_group("Q8")?)?;
    let census = a.order_census();
    let want = BTreeMap::from([(1, 1), (2, 9), (3, 8), (4, 6)]);
    let mut m = Mismatches::default();
    m.expect(a.order() == 24, || format!("|Aut(Q8)| = {}", a.order()));
    m.expect(a.inner_count() == 4, || format!("{} inner automorphisms", a.inner_count()));
    m.expect(census == want, || format!("order census {census:?}"));
    Ok(m.outcome("|Aut(Q8)| = 24, 4 inner, census {1:1, 2:9, 3:8, 4:6}"))
}

fn check_dirac() -> Result<Outcome> {
    let gs = paper_gammas();
    let mut m = Mismatches::default();
    let sig = clifford_verify(&gs)?;
    m.expect(sig == [1, -1, -1, -1], || format!("signature {sig:?}"));
    let q = right_mult_group(&gs)?;
    m.expect(q.order() == 8 && q.class_sizes() == [1, 1, 2, 2, 2], || format!("right group order {}", q.order()));
    let u2 = lie_closure_dim(&u2_generators(&gs));
    m.expect(u2 == 4, || format!("u(2) closure has dimension {u2}"));
    let sl = lie_closure_dim(&sl2_generators(&gs));
    m.expect(sl == 6, || format!("closure of {{iγ1γ2, iγ2γ3}} has dimension {sl}, expected 6"));
    let rank = gamma_products_rank(&gs);
    m.expect(rank == 16, || format!("gamma products have rank {rank}"));
    Ok(m.outcome("signature (+,−,−,−); right group Q8; Lie dimensions 4 and 6; 16 independent products"))
}

fn lr_generators(g: &FiniteGroup) -> Vec<CycMatrix> {
    (0..g.order())
        .filter_map(|x| match g.payload(x) {
            Payload::Quaternion(q) => Some([q.left_matrix(), q.right_matrix()]),
            _ => None,
        })
        .flatten()
        .collect()
}

fn check_closure() -> Result<Outcome> {
    let g = builtin_group("2T")?;
    let order = matrix_group_closure(&lr_generators(&g), DEFAULT_CAP)?.order;
    Ok(Outcome::judge(order == 288, format!("⟨L(q), R(q) : q ∈ 2T⟩ has order {order}")))
}

/// Candidate F4 generator sets; reported, not judged.
fn check_f4() -> Result<Outcome> {
    let mut parts = Vec::new();
    for name in BUILTIN_CLOSURE_SETS {
        let order = builtin_closure_set(name)?.close(DEFAULT_CAP)?.order;
        parts.push(format!("{name}: {order}"));
    }
    Ok(Outcome { status: CheckStatus::Skip, detail: parts.join(", ") })
}

fn random_cyc(rng: &mut ChaCha8Rng) -> Cyc {
    let coeffs: [Rational; crate::cycarith::DEGREE] = std::array::from_fn(|_| rational(rng.random_range(-6..=6), rng.random_range(1..=4)));
    Cyc::from_coeffs(coeffs)
}

fn random_rational_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<Rational> {
    // low rank is likely with small entries and a sparse pattern
    let data = (0..rows * cols)
        .map(|_| if rng.random_bool(0.5) { rational(0, 1) } else { rational(rng.random_range(-2..=2), 1) })
        .collect();
    Matrix::new(rows, cols, data)
}

/// Orthogonality, Σd² = |G|, rank–nullity, field axioms on 1000 samples and idempotent
/// completeness.
fn check_properties() -> Result<Outcome> {
    let mut m = Mismatches::default();
    for name in BUILTIN_NAMES {
        let g = builtin_group(name)?;
        let ct = complex_character_table(&g)?;
        let rt = real_character_table(&ct)?;
        for t in [&ct, &rt] {
            m.expect(t.check_row_orthogonality().is_ok() && t.check_column_orthogonality().is_ok(), || {
                format!("{name} {:?} table not orthogonal", t.field)
            });
        }
        let sum_sq: usize = ct.degrees().iter().map(|d| d * d).sum();
        m.expect(sum_sq == g.order(), || format!("{name}: Σd² = {sum_sq}"));
        let ids = central_idempotents(&ct, &g)?;
        let total = ids.iter().try_fold(AlgebraElement::zero(&g), |acc, e| acc.add(e))?;
        m.expect(total == AlgebraElement::one(&g), || format!("{name}: central idempotents do not sum to e"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let mut field_failures = 0;
    for _ in 0..1000 {
        let (a, b, c) = (random_cyc(&mut rng), random_cyc(&mut rng), random_cyc(&mut rng));
        let mut ok = &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &a * &b == &b * &a
            && &a + &(-&a) == Cyc::zero()
            && (&a * &b).conj() == &a.conj() * &b.conj();
        if !a.is_zero() {
            ok &= a.inv().is_ok_and(|inv| (&a * &inv) == Cyc::one());
        }
        if !ok {
            field_failures += 1;
        }
    }
    m.expect(field_failures == 0, || format!("{field_failures} of 1000 field-axiom samples fail"));
    for _ in 0..200 {
        let (r, c) = (rng.random_range(1..=6), rng.random_range(1..=6));
        let a = random_rational_matrix(&mut rng, r, c);
        let kernel = a.kernel();
        let ok = a.rank() + kernel.len() == c
            && kernel.iter().all(|v| a.matmul(&Matrix::new(c, 1, v.clone())).is_zero());
        m.expect(ok, || format!("rank–nullity fails for {a:?}"));
    }
    Ok(m.outcome("orthogonality, Σd² = |G|, idempotent completeness on all built-in groups; 1000 field samples; 200 rank–nullity samples"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_splitting() {
        assert_eq!(split_compact("4H4C4C"), vec!["4C", "4C", "4H"]);
        assert_eq!(split_compact("1123333"), vec!["1", "1", "2", "3", "3", "3", "3"]);
    }

    #[test]
    fn only_filters_and_rejects_unknown() {
        let opts = VerifyOptions { only: Some(vec!["aut-1.4".into()]), corrupt: None };
        let r = run_checks(&opts).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.status_of("aut-1.4"), Some(CheckStatus::Pass));
        let bad = VerifyOptions { only: Some(vec!["nope".into()]), corrupt: None };
        assert_eq!(run_checks(&bad).unwrap_err(), Error::UnknownName("nope".into()));
    }

    #[test]
    fn corrupted_matrix_fails_matrices_check() {
        let opts = VerifyOptions {
            only: Some(vec!["matrices-2.4".into()]),
            corrupt: Some(Corruption::sign_flip("2T.2", "w").unwrap()),
        };
        let r = run_checks(&opts).unwrap();
        assert_eq!(r.status_of("matrices-2.4"), Some(CheckStatus::Fail));
        assert!(r.checks[0].detail.contains("2T.2"));
        let clean = VerifyOptions { only: opts.only.clone(), corrupt: None };
        assert!(run_checks(&clean).unwrap().passed());
    }
}

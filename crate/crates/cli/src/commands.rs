use std::path::Path;
use std::sync::Arc;

use fgre::chartheory::{character_table, tensor_by_label, wedderburn_from_table, TableField, TableJson};
use fgre::clifford::{
    clifford_verify, gamma_products_rank, lie_closure_dim, lie_closure_dim_over_field, paper_gammas,
    right_mult_group, sl2_generators, spin_generators, u2_generators,
};
use fgre::cycarith::format_rational;
use fgre::groupalgebra::{
    enumerate_idempotents_commutative, integral_idempotent_check, parse_element, q8_decompose,
    real_block_idempotents, AlgebraElement, BASIS_NAMES,
};
use fgre::groupcore::{builtin_closure_set, ClosureSet, GroupSummary, BUILTIN_CLOSURE_SETS};
use fgre::verify::{run_checks, Corruption, VerifyOptions};
use fgre::{Error, FiniteGroup};
use serde::Serialize;
use serde_json::Value;

use crate::output::{closure_cap, csv, json, load_group, CliError, Format};
use crate::Field;

fn table_field(f: Field) -> TableField {
    match f {
        Field::Complex => TableField::Complex,
        Field::Real => TableField::Real,
    }
}

pub fn group_info(spec: &str, fmt: Format) -> Result<String, CliError> {
    let g = load_group(spec)?;
    let s = GroupSummary::of(&g);
    Ok(match fmt {
        Format::Text => s.to_text(),
        Format::Json => format!("{}\n", s.to_json()),
        Format::Csv => {
            let mut rows = vec![vec!["size".into(), "order".into(), "representative".into(), "elements".into()]];
            for c in &s.classes {
                rows.push(vec![c.size.to_string(), c.order.to_string(), c.representative.clone(), c.elements.join(" ")]);
            }
            csv(&rows)
        }
    })
}

pub fn chartable(spec: &str, field: Field, check: bool, fmt: Format) -> Result<String, CliError> {
    let g = load_group(spec)?;
    let ct = character_table(&g, table_field(field))?;
    if check {
        ct.check_row_orthogonality()?;
        ct.check_column_orthogonality()?;
    }
    Ok(match fmt {
        Format::Text => ct.to_text(),
        Format::Json => {
            let text = ct.to_json();
            // the model parses back to the same bytes
            debug_assert_eq!(TableJson::from_json(&text).map(|t| t.to_json()).ok().as_deref(), Some(text.as_str()));
            format!("{text}\n")
        }
        Format::Csv => ct.to_csv(),
    })
}

#[derive(Serialize)]
struct TensorJson {
    group: String,
    field: TableField,
    products: Vec<TensorEntry>,
}

#[derive(Serialize)]
struct TensorEntry {
    left: String,
    right: String,
    decomposition: String,
    terms: Vec<String>,
    degree: usize,
}

pub fn tensor(spec: &str, field: Field, reps: &[String], all: bool, fmt: Format) -> Result<String, CliError> {
    let g = load_group(spec)?;
    let field = table_field(field);
    let ct = character_table(&g, field)?;
    let pairs: Vec<(String, String)> = if all {
        // the trivial row is skipped: 1⊗R = R
        let labels: Vec<&String> = ct.labels.iter().skip(1).collect();
        labels.iter().flat_map(|a| labels.iter().map(move |b| (a.to_string(), b.to_string()))).collect()
    } else if reps.len() == 2 {
        vec![(reps[0].clone(), reps[1].clone())]
    } else {
        return Err(CliError::Usage("tensor needs --reps A,B (two labels) or --all".into()));
    };
    let mut products = Vec::new();
    for (a, b) in pairs {
        let d = tensor_by_label(&a, &b, &ct)?;
        products.push(TensorEntry {
            decomposition: d.compact(),
            terms: d.terms().into_iter().map(str::to_string).collect(),
            degree: d.total_degree(),
            left: a,
            right: b,
        });
    }
    Ok(match fmt {
        Format::Json => json(&TensorJson { group: g.name().to_string(), field, products }),
        Format::Csv => {
            let mut rows = vec![vec!["left".into(), "right".into(), "decomposition".into(), "degree".into()]];
            rows.extend(
                products.iter().map(|p| vec![p.left.clone(), p.right.clone(), p.decomposition.clone(), p.degree.to_string()]),
            );
            csv(&rows)
        }
        Format::Text if !all => format!("{}\n", products[0].decomposition),
        Format::Text => {
            let labels: Vec<&String> = ct.labels.iter().skip(1).collect();
            let n = labels.len();
            let width = products.iter().map(|p| p.decomposition.chars().count()).chain(labels.iter().map(|l| l.len())).max().unwrap_or(1);
            let lw = labels.iter().map(|l| l.len()).max().unwrap_or(1);
            let mut out = format!("{:lw$} |", "⊗");
            for l in &labels {
                out.push_str(&format!(" {l:>width$}"));
            }
            out.push('\n');
            out.push_str(&format!("{}\n", "-".repeat(lw + 2 + n * (width + 1))));
            for (r, l) in labels.iter().enumerate() {
                out.push_str(&format!("{l:lw$} |"));
                for p in &products[r * n..(r + 1) * n] {
                    let pad = width - p.decomposition.chars().count();
                    out.push_str(&format!(" {}{}", " ".repeat(pad), p.decomposition));
                }
                out.push('\n');
            }
            out
        }
    })
}

pub fn verify_paper(only: &[String], corrupt: Option<&str>, fmt: Format) -> Result<(String, bool), CliError> {
    let corrupt = match corrupt {
        Some(spec) => {
            let (rep, generator) = spec
                .split_once(':')
                .ok_or_else(|| CliError::Usage(format!("--corrupt expects REP:GENERATOR, got {spec:?}")))?;
            Some(Corruption::sign_flip(rep, generator)?)
        }
        None => None,
    };
    let opts = VerifyOptions { only: (!only.is_empty()).then(|| only.to_vec()), corrupt };
    let report = run_checks(&opts)?;
    let text = match fmt {
        Format::Text => report.to_text(),
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => {
            let mut rows = vec![vec!["name".into(), "status".into(), "elapsed_ms".into(), "detail".into()]];
            rows.extend(report.checks.iter().map(|c| {
                vec![c.name.clone(), c.status.as_str().into(), format!("{:.1}", c.elapsed_ms), c.detail.clone()]
            }));
            csv(&rows)
        }
    };
    Ok((text, report.passed()))
}

fn element_value(a: &AlgebraElement) -> Value {
    serde_json::from_str(&a.to_json()).expect("element json is valid")
}

#[derive(Serialize)]
struct IdempotentJson {
    label: String,
    block: String,
    dim: usize,
    element: Value,
}

pub fn idempotents(spec: &str, field: Field, all: bool, integral: bool, fmt: Format) -> Result<String, CliError> {
    let g = load_group(spec)?;
    if all {
        let list = if integral { integral_idempotent_check(&g)? } else { enumerate_idempotents_commutative(&g)? };
        return Ok(match fmt {
            Format::Text => list.iter().map(|a| format!("{a}\n")).collect(),
            Format::Json => json(&list.iter().map(element_value).collect::<Vec<_>>()),
            Format::Csv => {
                let mut rows = vec![std::iter::once("index".to_string()).chain(g.labels().iter().cloned()).collect()];
                for (n, a) in list.iter().enumerate() {
                    rows.push(std::iter::once(n.to_string()).chain(a.coeffs().iter().map(|c| c.to_string())).collect());
                }
                csv(&rows)
            }
        });
    }
    let blocks = match table_field(field) {
        TableField::Real => real_block_idempotents(&g)?,
        TableField::Complex => {
            let ct = character_table(&g, TableField::Complex)?;
            fgre::groupalgebra::block_idempotents(&ct, &g)?
        }
    };
    let block_name = |b: &fgre::chartheory::WedderburnBlock| {
        if b.size == 1 {
            b.ring.ascii().to_string()
        } else {
            format!("M{}({})", b.size, b.ring.ascii())
        }
    };
    Ok(match fmt {
        Format::Text => {
            let lw = blocks.iter().map(|b| b.label.len()).max().unwrap_or(1);
            let bw = blocks.iter().map(|b| block_name(&b.block).len()).max().unwrap_or(1);
            blocks
                .iter()
                .map(|b| format!("{:lw$}  {:bw$}  {}\n", b.label, block_name(&b.block), b.element))
                .collect()
        }
        Format::Json => json(
            &blocks
                .iter()
                .map(|b| IdempotentJson {
                    label: b.label.clone(),
                    block: block_name(&b.block),
                    dim: b.block.dim,
                    element: element_value(&b.element),
                })
                .collect::<Vec<_>>(),
        ),
        Format::Csv => {
            let mut rows = vec![["label", "block", "dim"].iter().map(|s| s.to_string()).chain(g.labels().iter().cloned()).collect()];
            for b in &blocks {
                rows.push(
                    [b.label.clone(), block_name(&b.block), b.block.dim.to_string()]
                        .into_iter()
                        .chain(b.element.coeffs().iter().map(|c| c.to_string()))
                        .collect(),
                );
            }
            csv(&rows)
        }
    })
}

pub fn wedderburn(spec: &str, field: Field, fmt: Format) -> Result<String, CliError> {
    let g = load_group(spec)?;
    let ct = character_table(&g, table_field(field))?;
    let w = wedderburn_from_table(&ct);
    Ok(match fmt {
        Format::Text => format!("{}\n", w.ascii()),
        Format::Json => {
            let mut v = serde_json::to_value(&w).expect("structure serializes");
            let obj = v.as_object_mut().expect("object");
            obj.insert("group".into(), g.name().into());
            obj.insert("ascii".into(), w.ascii().into());
            obj.insert("unicode".into(), w.to_string().into());
            obj.insert("dim".into(), w.total_dim().into());
            json(&v)
        }
        Format::Csv => {
            let mut rows = vec![vec!["size".into(), "ring".into(), "dim".into()]];
            rows.extend(w.blocks.iter().map(|b| vec![b.size.to_string(), b.ring.ascii().into(), b.dim.to_string()]));
            csv(&rows)
        }
    })
}

#[derive(Serialize)]
struct DiracJson {
    signature: Vec<i8>,
    right_group_order: usize,
    right_group_classes: usize,
    u2_dim: usize,
    sl2_dim: usize,
    sl2_complex_dim: usize,
    spin_dim: usize,
    gamma_products_rank: usize,
}

pub fn dirac(fmt: Format) -> Result<String, CliError> {
    let gs = paper_gammas();
    let right = right_mult_group(&gs)?;
    let d = DiracJson {
        signature: clifford_verify(&gs)?,
        right_group_order: right.order(),
        right_group_classes: right.classes().len(),
        u2_dim: lie_closure_dim(&u2_generators(&gs)),
        sl2_dim: lie_closure_dim(&sl2_generators(&gs)),
        sl2_complex_dim: lie_closure_dim_over_field(&sl2_generators(&gs)),
        spin_dim: lie_closure_dim(&spin_generators(&gs)),
        gamma_products_rank: gamma_products_rank(&gs),
    };
    let sig: Vec<String> = d.signature.iter().map(|s| if *s > 0 { "+".into() } else { "-".into() }).collect();
    let rows: Vec<(&str, String)> = vec![
        ("signature", sig.join("")),
        ("right group order", d.right_group_order.to_string()),
        ("right group classes", d.right_group_classes.to_string()),
        ("u(2) dim", d.u2_dim.to_string()),
        ("sl(2) real dim", d.sl2_dim.to_string()),
        ("sl(2) complex dim", d.sl2_complex_dim.to_string()),
        ("spin dim", d.spin_dim.to_string()),
        ("gamma products rank", d.gamma_products_rank.to_string()),
    ];
    Ok(match fmt {
        Format::Text => rows.iter().map(|(k, v)| format!("{k:<20} {v}\n")).collect(),
        Format::Json => json(&d),
        Format::Csv => {
            let mut out = vec![vec!["quantity".to_string(), "value".to_string()]];
            out.extend(rows.iter().map(|(k, v)| vec![k.to_string(), v.clone()]));
            csv(&out)
        }
    })
}

#[derive(Serialize)]
struct DecomposeJson {
    group: String,
    basis: Vec<String>,
    raw: Vec<String>,
    normalized: Vec<String>,
    quantum_numbers: Vec<QuantumJson>,
}

#[derive(Serialize)]
struct QuantumJson {
    component: String,
    charge: String,
    weak_isospin: String,
}

pub fn decompose(spec: &str, element: Option<&str>, file: Option<&Path>, fmt: Format) -> Result<String, CliError> {
    let g: Arc<FiniteGroup> = load_group(spec)?;
    let a = match (element, file) {
        (Some(expr), _) => parse_element(&g, expr)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            AlgebraElement::from_json_in(&text, &g)?
        }
        (None, None) => return Err(CliError::Usage("decompose needs --element or --file".into())),
    };
    let d = q8_decompose(&a)?;
    let out = DecomposeJson {
        group: g.name().to_string(),
        basis: BASIS_NAMES.iter().map(|s| s.to_string()).collect(),
        raw: d.raw.iter().map(format_rational).collect(),
        normalized: d.normalized.iter().map(format_rational).collect(),
        quantum_numbers: d
            .quantum_numbers
            .iter()
            .zip(BASIS_NAMES)
            .map(|(q, name)| QuantumJson {
                component: name.to_string(),
                charge: format_rational(&q.charge),
                weak_isospin: format_rational(&q.weak_isospin),
            })
            .collect(),
    };
    Ok(match fmt {
        Format::Json => json(&out),
        Format::Text => {
            let mut s = format!("{:<5} {:>10} {:>12} {:>8} {:>8}\n", "basis", "raw", "normalized", "charge", "isospin");
            for (n, name) in BASIS_NAMES.iter().enumerate() {
                let (c, t) = out
                    .quantum_numbers
                    .get(n)
                    .map_or((String::new(), String::new()), |q| (q.charge.clone(), q.weak_isospin.clone()));
                s.push_str(&format!("{name:<5} {:>10} {:>12} {c:>8} {t:>8}\n", out.raw[n], out.normalized[n]));
            }
            s
        }
        Format::Csv => {
            let mut rows = vec![vec!["basis".into(), "raw".into(), "normalized".into(), "charge".into(), "weak_isospin".into()]];
            for (n, name) in BASIS_NAMES.iter().enumerate() {
                let q = out.quantum_numbers.get(n);
                rows.push(vec![
                    name.to_string(),
                    out.raw[n].clone(),
                    out.normalized[n].clone(),
                    q.map_or(String::new(), |q| q.charge.clone()),
                    q.map_or(String::new(), |q| q.weak_isospin.clone()),
                ]);
            }
            csv(&rows)
        }
    })
}

#[derive(Serialize)]
struct ClosureJson {
    name: String,
    generators: usize,
    order: usize,
    expected_order: Option<usize>,
}

pub fn closure(file: Option<&Path>, set: Option<&str>, all: bool, cap: Option<usize>, fmt: Format) -> Result<String, CliError> {
    let cap = closure_cap(cap)?;
    let sets: Vec<ClosureSet> = if all {
        BUILTIN_CLOSURE_SETS.iter().map(|n| builtin_closure_set(n)).collect::<Result<_, Error>>()?
    } else if let Some(name) = set {
        vec![builtin_closure_set(name)?]
    } else if let Some(path) = file {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        vec![ClosureSet::from_json(&text)?]
    } else {
        return Err(CliError::Usage("closure needs --file, --set or --all".into()));
    };
    let mut results = Vec::new();
    for s in &sets {
        let g = s.close(cap)?;
        results.push(ClosureJson {
            name: s.name.clone(),
            generators: s.generators.len(),
            order: g.order,
            expected_order: s.expected_order,
        });
    }
    Ok(match fmt {
        Format::Json => json(&results),
        Format::Text => {
            let w = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
            results.iter().map(|r| format!("{:w$}  {}\n", r.name, r.order)).collect()
        }
        Format::Csv => {
            let mut rows = vec![vec!["name".into(), "generators".into(), "order".into(), "expected_order".into()]];
            rows.extend(results.iter().map(|r| {
                vec![
                    r.name.clone(),
                    r.generators.to_string(),
                    r.order.to_string(),
                    r.expected_order.map_or(String::new(), |o| o.to_string()),
                ]
            }));
            csv(&rows)
        }
    })
}

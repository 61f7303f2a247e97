//! Complex character tables by Dixon's modular method.
//!
//! Class-sum structure constants are reduced mod a prime p ≡ 1 (mod exponent). Their
//! common eigenvectors over F_p are the central characters; each is rescaled to a
//! character mod p and lifted to Q(ζ₂₄) by counting how often each root of unity occurs
//! as an eigenvalue of g.

use crate::cycarith::{int, Cyc, Rational};
use crate::error::{Error, Result};
use crate::groupcore::FiniteGroup;

use super::table::{make_labels, Character, CharacterTable, ClassInfo, TableField};

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Smallest prime p with p ≡ 1 (mod exponent) and p > 2√order.
pub fn dixon_prime(exponent: usize, order: usize) -> u64 {
    let (e, n) = (exponent as u64, order as u64);
    (1..)
        .map(|k| k * e + 1)
        .find(|&p| is_prime(p) && p * p > 4 * n)
        .expect("primes in arithmetic progression")
}

fn primitive_root(p: u64) -> u64 {
    let phi = p - 1;
    let factors: Vec<u64> = (2..=phi).filter(|&q| phi.is_multiple_of(q) && is_prime(q)).collect();
    (2..p)
        .find(|&g| factors.iter().all(|&q| mod_pow(g, phi / q, p) != 1))
        .expect("prime has a primitive root")
}

/// Basis of `{y : m·y = 0}` over F_p; `m` has `rows` rows of length `cols`.
fn kernel_mod_p(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(piv) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, piv);
        let inv = mod_inv(m[row][col], p);
        for v in m[row].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..m.len() {
            if r != row && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..cols {
                    m[r][c] = (m[r][c] + p * p - f * m[row][c] % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[r][free]) % p;
            }
            v
        })
        .collect()
}

/// Common eigenvectors of commuting matrices, each spanning a one-dimensional space.
fn split_common_eigenvectors(mats: &[Vec<Vec<u64>>], k: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    // Each space is a list of basis vectors of length k.
    let identity: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
    let mut spaces = vec![identity];
    for m in mats {
        let mut next = Vec::new();
        for basis in spaces {
            let d = basis.len();
            if d == 1 {
                next.push(basis);
                continue;
            }
            // (M − λ)·B as a k×d matrix, for every λ in F_p
            let mb: Vec<Vec<u64>> = (0..k)
                .map(|r| (0..d).map(|c| (0..k).map(|s| m[r][s] * basis[c][s] % p).sum::<u64>() % p).collect())
                .collect();
            let mut found = 0;
            for lambda in 0..p {
                let shifted: Vec<Vec<u64>> = (0..k)
                    .map(|r| (0..d).map(|c| (mb[r][c] + p - lambda * basis[c][r] % p) % p).collect())
                    .collect();
                let ys = kernel_mod_p(shifted, d, p);
                if ys.is_empty() {
                    continue;
                }
                found += ys.len();
                let sub: Vec<Vec<u64>> = ys
                    .iter()
                    .map(|y| (0..k).map(|r| (0..d).map(|c| y[c] * basis[c][r] % p).sum::<u64>() % p).collect())
                    .collect();
                next.push(sub);
            }
            if found != d {
                return Err(Error::InternalInconsistency(format!(
                    "class matrix not diagonalizable mod {p}: {found} of {d} dimensions split"
                )));
            }
        }
        spaces = next;
    }
    spaces
        .into_iter()
        .map(|s| {
            if s.len() == 1 {
                Ok(s.into_iter().next().expect("one vector"))
            } else {
                Err(Error::InternalInconsistency("class sums do not separate characters".into()))
            }
        })
        .collect()
}

/// Column data shared by every table of a group.
pub(crate) fn class_columns(g: &FiniteGroup) -> (Vec<ClassInfo>, Vec<usize>) {
    let classes = g
        .classes()
        .iter()
        .map(|c| ClassInfo {
            rep: c.representative,
            label: g.label(c.representative).to_string(),
            size: c.size(),
            order: c.order,
            members: c.members.clone(),
            inverse: g.class_of(g.inv(c.representative)),
        })
        .collect();
    let class_of = (0..g.order()).map(|x| g.class_of(x)).collect();
    (classes, class_of)
}

/// `ν(χ) = (1/|G|) Σ_g χ(g²)` by enumeration over the elements.
pub fn fs_indicator(chi: &Character, g: &FiniteGroup) -> Result<i8> {
    if chi.len() != g.classes().len() {
        return Err(Error::NotAClassFunction("character does not match the group's classes".into()));
    }
    let mut acc = Cyc::zero();
    for x in 0..g.order() {
        acc += &chi.values[g.class_of(g.mul(x, x))];
    }
    let nu = acc.scale(&Rational::new(1.into(), (g.order() as i64).into()));
    [1i8, 0, -1]
        .into_iter()
        .find(|&v| nu == Cyc::from_int(v.into()))
        .ok_or_else(|| Error::InternalInconsistency(format!("Frobenius-Schur indicator {nu} not in {{-1,0,1}}")))
}

pub fn complex_character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let exponent = g.exponent();
    if 24 % exponent != 0 {
        return Err(Error::UnsupportedExponent { exponent });
    }
    let n = g.order();
    let k = g.classes().len();
    let p = dixon_prime(exponent, n);
    let sizes = g.class_sizes();

    // structure constants: mats[r][s][t] = #{x ∈ C_r : x⁻¹·z_t ∈ C_s}
    let mut mats = vec![vec![vec![0u64; k]; k]; k];
    for (t, ct) in g.classes().iter().enumerate() {
        let z = ct.representative;
        for x in 0..n {
            let r = g.class_of(x);
            let s = g.class_of(g.mul(g.inv(x), z));
            mats[r][s][t] += 1;
        }
    }
    for m in mats.iter_mut() {
        for row in m.iter_mut() {
            for v in row.iter_mut() {
                *v %= p;
            }
        }
    }

    let vectors = split_common_eigenvectors(&mats, k, p)?;
    let z_e = mod_pow(primitive_root(p), (p - 1) / exponent as u64, p);
    let inverse_class: Vec<usize> = g.classes().iter().map(|c| g.class_of(g.inv(c.representative))).collect();
    let max_degree = (1..=n).take_while(|d| d * d <= n).last().unwrap_or(1);

    let mut rows = Vec::with_capacity(k);
    for v in vectors {
        if v[0] == 0 {
            return Err(Error::InternalInconsistency("central character vanishes at identity".into()));
        }
        let norm = mod_inv(v[0], p);
        let omega: Vec<u64> = v.iter().map(|x| x * norm % p).collect();
        let s = (0..k).fold(0, |acc, t| {
            (acc + omega[t] * omega[inverse_class[t]] % p * mod_inv(sizes[t] as u64 % p, p)) % p
        });
        let d2 = (n as u64 % p) * mod_inv(s, p) % p;
        let degree = (1..=max_degree as u64)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::InternalInconsistency("no degree matches mod p".into()))?;
        let chi_mod: Vec<u64> = (0..k).map(|t| degree * omega[t] % p * mod_inv(sizes[t] as u64 % p, p) % p).collect();

        let mut values = Vec::with_capacity(k);
        for class in g.classes() {
            let o = class.order as u64;
            let z_o = mod_pow(z_e, exponent as u64 / o, p);
            let inv_o = mod_inv(o % p, p);
            let mut value = Cyc::zero();
            for kk in 0..o {
                let mut m = 0;
                for j in 0..o {
                    let gj = g.pow(class.representative, j as i64);
                    let twist = mod_pow(z_o, (o - (j * kk) % o) % o, p);
                    m = (m + chi_mod[g.class_of(gj)] * twist) % p;
                }
                m = m * inv_o % p;
                if m > degree {
                    return Err(Error::InternalInconsistency(format!(
                        "eigenvalue multiplicity {m} exceeds degree {degree}"
                    )));
                }
                if m > 0 {
                    let root = Cyc::zeta_pow((kk * (24 / o)) as i64);
                    value += &root.scale(&int(m as i64));
                }
            }
            values.push(value);
        }
        rows.push(Character::new(values));
    }

    rows.sort_by(|a, b| {
        let trivial = |c: &Character| c.values.iter().all(|v| *v == Cyc::one());
        a.degree_usize()
            .cmp(&b.degree_usize())
            .then(trivial(b).cmp(&trivial(a)))
            .then_with(|| a.values.cmp(&b.values))
    });

    let (classes, class_of) = class_columns(g);
    let fs = rows.iter().map(|chi| fs_indicator(chi, g)).collect::<Result<Vec<_>>>()?;
    let degrees: Vec<usize> = rows
        .iter()
        .map(|c| c.degree_usize().ok_or_else(|| Error::InternalInconsistency("non-integral degree".into())))
        .collect::<Result<_>>()?;
    let suffixes: Vec<&str> = fs.iter().map(|&f| if f == -1 { "H" } else { "" }).collect();
    let table = CharacterTable {
        field: TableField::Complex,
        group_name: g.name().to_string(),
        group_order: n,
        classes,
        class_of,
        labels: make_labels(&degrees, &suffixes),
        constituents: (0..rows.len()).map(|i| vec![i]).collect(),
        irreducibles: rows,
        fs,
    };
    if degrees.iter().map(|d| d * d).sum::<usize>() != n {
        return Err(Error::InternalInconsistency("squared degrees do not sum to the group order".into()));
    }
    table.check_row_orthogonality()?;
    Ok(table)
}

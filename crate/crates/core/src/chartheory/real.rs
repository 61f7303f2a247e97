use crate::cycarith::{int, Cyc};
use crate::error::{Error, Result};

use super::table::{make_labels, Character, CharacterTable, ClassInfo, TableField};

/// Real irreducibles from a complex table.
///
/// Real-type characters are kept, complex-type characters are summed with their
/// conjugates and quaternionic ones are doubled. Each class is merged with its inverse
/// class; merged columns keep the order of their first complex column.
pub fn real_character_table(ct: &CharacterTable) -> Result<CharacterTable> {
    if ct.field != TableField::Complex {
        return Err(Error::InvalidInput("real table needs a complex table as input".into()));
    }

    let mut columns: Vec<ClassInfo> = Vec::new();
    let mut merged_of = vec![usize::MAX; ct.classes.len()];
    for (c, info) in ct.classes.iter().enumerate() {
        if merged_of[c] != usize::MAX {
            continue;
        }
        let idx = columns.len();
        let mut col = info.clone();
        col.inverse = idx;
        merged_of[c] = idx;
        if info.inverse != c {
            let other = &ct.classes[info.inverse];
            col.size += other.size;
            col.members.extend(&other.members);
            col.members.sort_unstable();
            merged_of[info.inverse] = idx;
        }
        columns.push(col);
    }
    let pick: Vec<usize> = (0..columns.len())
        .map(|m| merged_of.iter().position(|&x| x == m).expect("merged column has a source"))
        .collect();

    let mut used = vec![false; ct.len()];
    let mut rows: Vec<(Character, i8, Vec<usize>)> = Vec::new();
    for (i, chi) in ct.irreducibles.iter().enumerate() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let (full, parts) = match ct.fs[i] {
            1 => (chi.clone(), vec![i]),
            -1 => (chi.scale(&int(2)), vec![i]),
            _ => {
                let bar = chi.conj();
                let j = (0..ct.len())
                    .find(|&j| !used[j] && ct.irreducibles[j] == bar)
                    .ok_or_else(|| Error::InternalInconsistency(format!("row {i} has no conjugate partner")))?;
                used[j] = true;
                (chi.sum(&bar)?, vec![i, j])
            }
        };
        let values: Vec<Cyc> = pick.iter().map(|&c| full.values[c].clone()).collect();
        rows.push((Character::new(values), ct.fs[i], parts));
    }
    rows.sort_by(|a, b| {
        let trivial = |c: &Character| c.values.iter().all(|v| *v == Cyc::one());
        a.0.degree_usize()
            .cmp(&b.0.degree_usize())
            .then(trivial(&b.0).cmp(&trivial(&a.0)))
            .then_with(|| a.0.values.cmp(&b.0.values))
    });

    let degrees: Vec<usize> = rows.iter().map(|r| r.0.degree_usize().expect("integral degree")).collect();
    let suffixes: Vec<&str> = rows
        .iter()
        .map(|r| match r.1 {
            1 => "",
            0 => "C",
            _ => "H",
        })
        .collect();
    let table = CharacterTable {
        field: TableField::Real,
        group_name: ct.group_name.clone(),
        group_order: ct.group_order,
        classes: columns,
        class_of: ct.class_of.iter().map(|&c| merged_of[c]).collect(),
        labels: make_labels(&degrees, &suffixes),
        fs: rows.iter().map(|r| r.1).collect(),
        constituents: rows.iter().map(|r| r.2.clone()).collect(),
        irreducibles: rows.into_iter().map(|r| r.0).collect(),
    };
    table.check_row_orthogonality()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartheory::complex_character_table;
    use crate::groupcore::builtin_group;

    fn real(name: &str) -> CharacterTable {
        real_character_table(&complex_character_table(&builtin_group(name).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn binary_tetrahedral() {
        let t = real("2T");
        assert_eq!(t.labels, vec!["1", "2", "3", "4H", "4C"]);
        let expected = [
            [1, 1, 1, 1, 1],
            [2, 2, 2, -1, -1],
            [3, 3, -1, 0, 0],
            [4, -4, 0, -2, 2],
            [4, -4, 0, 1, -1],
        ];
        for (row, want) in t.irreducibles.iter().zip(expected) {
            assert_eq!(*row, Character::from_ints(&want));
        }
        assert_eq!(t.class_sizes(), vec![1, 1, 6, 8, 8]);
        assert_eq!(t.fs, vec![1, 0, 1, -1, 0]);
    }

    #[test]
    fn q8_and_z3() {
        let q = real("Q8");
        assert_eq!(q.degrees(), vec![1, 1, 1, 1, 4]);
        let z = real("Z3");
        assert_eq!(z.irreducibles, vec![Character::from_ints(&[1, 1]), Character::from_ints(&[2, -1])]);
        assert_eq!(z.class_sizes(), vec![1, 2]);
    }
}

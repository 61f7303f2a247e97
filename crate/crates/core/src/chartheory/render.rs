use serde::{Deserialize, Serialize};

use crate::cycarith::Cyc;
use crate::error::{Error, Result};

use super::table::{CharacterTable, TableField};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub rep: String,
    pub size: usize,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub label: String,
    pub degree: usize,
    pub values: Vec<Cyc>,
    pub fs: i8,
}

/// Serialized form of a character table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub group: String,
    pub field: TableField,
    pub classes: Vec<ClassJson>,
    pub rows: Vec<RowJson>,
}

impl TableJson {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }
}

impl CharacterTable {
    pub fn to_json_model(&self) -> TableJson {
        TableJson {
            group: self.group_name.clone(),
            field: self.field,
            classes: self
                .classes
                .iter()
                .map(|c| ClassJson { rep: c.label.clone(), size: c.size, order: c.order })
                .collect(),
            rows: self
                .irreducibles
                .iter()
                .zip(&self.labels)
                .zip(&self.fs)
                .map(|((chi, label), &fs)| RowJson {
                    label: label.clone(),
                    degree: chi.degree_usize().unwrap_or(0),
                    values: chi.values.clone(),
                    fs,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_json_model().to_json()
    }

    /// Header of class representatives, then one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("label,degree,fs");
        for c in &self.classes {
            out.push(',');
            out.push_str(&csv_field(&c.label));
        }
        out.push('\n');
        for ((chi, label), fs) in self.irreducibles.iter().zip(&self.labels).zip(&self.fs) {
            out.push_str(&format!("{},{},{}", csv_field(label), chi.degree(), fs));
            for v in &chi.values {
                out.push(',');
                out.push_str(&csv_field(&v.to_string()));
            }
            out.push('\n');
        }
        out
    }

    /// Aligned grid: class representatives across the top, a size and order line, then
    /// the rows with their labels and indicators.
    pub fn to_text(&self) -> String {
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut head = vec![String::new()];
        head.extend(self.classes.iter().map(|c| c.label.clone()));
        head.push("FS".into());
        grid.push(head);
        let mut sizes = vec!["size".to_string()];
        sizes.extend(self.classes.iter().map(|c| c.size.to_string()));
        sizes.push(String::new());
        grid.push(sizes);
        let mut orders = vec!["order".to_string()];
        orders.extend(self.classes.iter().map(|c| c.order.to_string()));
        orders.push(String::new());
        grid.push(orders);
        for ((chi, label), fs) in self.irreducibles.iter().zip(&self.labels).zip(&self.fs) {
            let mut line = vec![label.clone()];
            line.extend(chi.values.iter().map(ToString::to_string));
            line.push(fs.to_string());
            grid.push(line);
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = format!("{} character table of {} (order {})\n", self.field, self.group_name, self.group_order);
        for (i, row) in grid.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{}{cell}", " ".repeat(w - cell.chars().count())))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
            if i == 2 {
                let total = widths.iter().sum::<usize>() + 2 * (widths.len() - 1);
                out.push_str(&"-".repeat(total));
                out.push('\n');
            }
        }
        out
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

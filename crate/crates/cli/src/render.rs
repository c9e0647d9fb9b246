use std::collections::HashMap;
use std::fmt::Write;

use chardeg_core::chartab::CharacterTable;
use chardeg_core::classifier::{Check, Outcome};

/// ATLAS-style class names: element order followed by a letter.
pub fn class_labels(table: &CharacterTable) -> Vec<String> {
    let mut seen: HashMap<u32, usize> = HashMap::new();
    table
        .classes()
        .element_orders()
        .iter()
        .map(|&o| {
            let k = seen.entry(o).or_insert(0);
            *k += 1;
            format!("{o}{}", letters(*k - 1))
        })
        .collect()
}

/// `a`, …, `z`, `aa`, `ab`, …
fn letters(mut k: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (k % 26) as u8);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii")
}

pub fn table(table: &CharacterTable) -> String {
    let labels = class_labels(table);
    let sizes: Vec<String> = table.classes().sizes().iter().map(|s| s.to_string()).collect();
    let rows: Vec<Vec<String>> = (0..table.len())
        .map(|i| table.values(i).iter().map(|v| v.to_string()).collect())
        .collect();
    let width: Vec<usize> = (0..labels.len())
        .map(|j| {
            rows.iter()
                .map(|r| r[j].len())
                .chain([labels[j].len(), sizes[j].len()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let head = 6.max(format!("χ{}", table.len()).chars().count());

    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}  |G| = {}  {} classes  computed mod {}",
        table.name(),
        table.group_order(),
        table.len(),
        table.prime()
    );
    let mut line = |name: &str, cells: &[String]| {
        let _ = write!(out, "{name:<head$}");
        for (cell, w) in cells.iter().zip(&width) {
            let _ = write!(out, "  {cell:>w$}");
        }
        out.push('\n');
    };
    line("class", &labels);
    line("size", &sizes);
    for (i, row) in rows.iter().enumerate() {
        line(&format!("χ{}", i + 1), row);
    }
    out
}

pub fn checks(name: &str, checks: &[Check]) -> String {
    let mut out = format!("{name}\n");
    for c in checks {
        let _ = write!(out, "  {:<8} {}", c.outcome.to_string(), c.name);
        if !c.detail.is_empty() && c.outcome != Outcome::Pass {
            let _ = write!(out, " ({})", c.detail);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::letters;

    #[test]
    fn class_letters() {
        assert_eq!(letters(0), "a");
        assert_eq!(letters(25), "z");
        assert_eq!(letters(26), "aa");
        assert_eq!(letters(27), "ab");
    }
}

//! Ordering classification at `r = π/4`, as a text table or JSON.

use rindler_core::entanglement::{classify_orderings, CONVERGENCE_TOL};
use rindler_core::StateFamily;
use serde::{Deserialize, Serialize};

use crate::config::format_family;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderingRow {
    pub permutation: String,
    pub name: Option<String>,
    pub spread: f64,
    pub convergent: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderingsReport {
    pub family: String,
    #[serde(rename = "q_R")]
    pub q_r: Vec<f64>,
    pub tolerance: f64,
    pub rows: Vec<OrderingRow>,
}

pub fn cmd_orderings(
    family: &StateFamily,
    qr_grid: &[f64],
    include_alice_moves: bool,
) -> Result<OrderingsReport> {
    let rows = classify_orderings(family, qr_grid, include_alice_moves)?
        .into_iter()
        .map(|o| OrderingRow {
            permutation: o.ordering.digits(),
            name: o.ordering.name().map(String::from),
            spread: o.spread,
            convergent: o.convergent,
        })
        .collect();
    Ok(OrderingsReport {
        family: format_family(family),
        q_r: qr_grid.to_vec(),
        tolerance: CONVERGENCE_TOL,
        rows,
    })
}

impl OrderingsReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Spreads are printed in exponent form with the shortest digits that
    /// round-trip, so the table and the JSON carry the same values.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "# family={} convergent when spread <= {:e}\n{:<11} {:<20} {:<24} {}\n",
            self.family, self.tolerance, "permutation", "name", "spread", "convergent"
        );
        for row in &self.rows {
            s.push_str(&format!(
                "{:<11} {:<20} {:<24e} {}\n",
                row.permutation,
                row.name.as_deref().unwrap_or("-"),
                row.spread,
                if row.convergent { "yes" } else { "no" }
            ));
        }
        s
    }

    /// Inverse of [`OrderingsReport::to_text`] for the table rows.
    pub fn rows_from_text(text: &str) -> Vec<OrderingRow> {
        text.lines()
            .skip(2)
            .filter_map(|line| {
                let cols: Vec<&str> = line.split_whitespace().collect();
                let [perm, name, spread, conv] = cols.as_slice() else {
                    return None;
                };
                Some(OrderingRow {
                    permutation: perm.to_string(),
                    name: (*name != "-").then(|| name.to_string()),
                    spread: spread.parse().ok()?,
                    convergent: *conv == "yes",
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rindler_core::unruh::default_qr_grid;

    #[test]
    fn text_and_json_agree() {
        let rep = cmd_orderings(&StateFamily::maximally_entangled(), &default_qr_grid(), false)
            .unwrap();
        assert_eq!(rep.rows.len(), 24);
        let from_json: OrderingsReport = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(from_json, rep);
        assert_eq!(OrderingsReport::rows_from_text(&rep.to_text()), rep.rows);

        let phys = rep.rows.iter().find(|r| r.permutation == "01234").unwrap();
        assert!(phys.convergent);
        assert_eq!(phys.name.as_deref(), Some("physical"));
        let legacy = rep.rows.iter().find(|r| r.permutation == "01423").unwrap();
        assert!(!legacy.convergent);
    }
}

//! Negativity over the `(ordering, q_R, r)` grid, written as CSV.

use rayon::prelude::*;
use rindler_core::entanglement::ordering_negativity;
use rindler_core::unruh::r_grid;
use rindler_core::{OperatorOrdering, UnruhParams};
use serde::Serialize;

use crate::config::SweepConfig;
use crate::format::sig12;
use crate::Result;

pub const CSV_HEADER: &str = "r,q_R,ordering,negativity";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    pub r: f64,
    pub q_r: f64,
    pub ordering: String,
    pub negativity: f64,
}

impl SweepRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            sig12(self.r),
            sig12(self.q_r),
            self.ordering,
            sig12(self.negativity)
        )
    }
}

/// One record per grid point, ordered by ordering, then `q_R` as given, then
/// `r` ascending. `parallel` only changes how points are scheduled.
pub fn run_sweep(cfg: &SweepConfig, parallel: bool) -> Result<Vec<SweepRecord>> {
    let rs = r_grid(cfg.r_points);
    let points: Vec<(&OperatorOrdering, f64, f64)> = cfg
        .orderings
        .iter()
        .flat_map(|ord| {
            let rs = &rs;
            cfg.qr_values
                .iter()
                .flat_map(move |&q| rs.iter().map(move |&r| (ord, q, r)))
        })
        .collect();
    let eval = |&(ord, q, r): &(&OperatorOrdering, f64, f64)| -> Result<SweepRecord> {
        let p = UnruhParams::real(r, q)?;
        Ok(SweepRecord {
            r,
            q_r: q,
            ordering: ord.to_string(),
            negativity: ordering_negativity(&cfg.family, &p, ord)?,
        })
    };
    if parallel {
        points.par_iter().map(eval).collect()
    } else {
        points.iter().map(eval).collect()
    }
}

pub fn to_csv(records: &[SweepRecord]) -> String {
    let mut out = String::with_capacity(32 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for rec in records {
        out.push_str(&rec.csv_row());
        out.push('\n');
    }
    out
}

/// Runs the sweep and returns the CSV text.
pub fn cmd_sweep(cfg: &SweepConfig, parallel: bool) -> Result<String> {
    Ok(to_csv(&run_sweep(cfg, parallel)?))
}

/// A gnuplot script that draws one curve per `(ordering, q_R)` from the CSV
/// at `csv_path`: physical ordering solid, everything else dashed.
pub fn gnuplot_script(cfg: &SweepConfig, csv_path: &str) -> String {
    let mut s = String::new();
    s.push_str("set datafile separator ','\n");
    s.push_str("set key outside right\n");
    s.push_str("set xlabel 'r'\nset ylabel 'negativity'\n");
    s.push_str("set xrange [0:pi/4]\n");
    let mut curves = Vec::new();
    for ord in &cfg.orderings {
        let dash = if ord.name() == Some(rindler_core::entanglement::PHYSICAL) {
            1
        } else {
            2
        };
        for &q in &cfg.qr_values {
            curves.push(format!(
                "'{csv_path}' every ::1 using 1:((strcol(3) eq '{ord}' && abs($2-{q}) < 1e-9) ? $4 : 1/0) \
                 with lines dt {dash} title '{ord} q_R={}'",
                sig12(q)
            ));
        }
    }
    s.push_str("plot ");
    s.push_str(&curves.join(", \\\n     "));
    s.push('\n');
    s
}

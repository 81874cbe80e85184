//! One `(family, r, q_R, ordering)` point with every available route.

use rindler_core::entanglement::{
    infinite_acceleration_reduced_state, negativity, partial_transpose_spectrum, reduced_state,
    subalgebra_reduced_state,
};
use rindler_core::unruh::{build_state, is_infinite_acceleration};
use rindler_core::{OperatorOrdering, StateFamily, UnruhParams};
use serde::{Deserialize, Serialize};

use crate::config::format_family;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RouteNegativities {
    pub qubit_trace: f64,
    pub subalgebra: f64,
    /// Only at `r = π/4`.
    pub infinite_acceleration: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingleReport {
    pub r: f64,
    #[serde(rename = "q_R")]
    pub q_r: f64,
    pub ordering: String,
    pub family: String,
    /// `[2, 2, 2]`: Alice, then the two region-I modes in ordering order.
    pub dims: Vec<usize>,
    /// Row-major `[re, im]` pairs of the qubit-trace reduced state.
    pub reduced_density_matrix: Vec<[f64; 2]>,
    /// Ascending spectrum of the partial transpose over Alice.
    pub partial_transpose_spectrum: Vec<f64>,
    pub negativity: RouteNegativities,
}

pub fn cmd_single(
    family: &StateFamily,
    r: f64,
    q_r: f64,
    ordering: &OperatorOrdering,
) -> Result<SingleReport> {
    let p = UnruhParams::real(r, q_r)?;
    let rho = reduced_state(family, &p, ordering)?;
    let spectrum = partial_transpose_spectrum(&rho, 1)?;
    let sub = subalgebra_reduced_state(&build_state(family, &p)?)?;
    let limit = if is_infinite_acceleration(r) {
        Some(negativity(&infinite_acceleration_reduced_state(family, &p)?, 1)?)
    } else {
        None
    };
    let m = rho.matrix();
    let entries = (0..m.nrows())
        .flat_map(|i| (0..m.ncols()).map(move |j| [m[(i, j)].re, m[(i, j)].im]))
        .collect();
    Ok(SingleReport {
        r,
        q_r,
        ordering: ordering.to_string(),
        family: format_family(family),
        dims: rho.dims().to_vec(),
        reduced_density_matrix: entries,
        partial_transpose_spectrum: spectrum.clone(),
        negativity: RouteNegativities {
            qubit_trace: rindler_core::entanglement::negativity_from_spectrum(&spectrum),
            subalgebra: negativity(&sub, 1)?,
            infinite_acceleration: limit,
        },
    })
}

impl SingleReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn zero_acceleration_bell_point() {
        let rep = cmd_single(
            &StateFamily::maximally_entangled(),
            0.0,
            1.0,
            &OperatorOrdering::physical(),
        )
        .unwrap();
        assert!((rep.negativity.qubit_trace - 0.5).abs() < 1e-12);
        assert!((rep.negativity.subalgebra - 0.5).abs() < 1e-12);
        assert_eq!(rep.negativity.infinite_acceleration, None);
        assert_eq!(rep.reduced_density_matrix.len(), 64);
        assert_eq!(rep.partial_transpose_spectrum.len(), 8);
    }

    #[test]
    fn limit_point_has_three_agreeing_routes() {
        let rep = cmd_single(
            &StateFamily::maximally_entangled(),
            FRAC_PI_4,
            0.8,
            &OperatorOrdering::physical(),
        )
        .unwrap();
        let n = &rep.negativity;
        let lim = n.infinite_acceleration.unwrap();
        assert!((n.qubit_trace - n.subalgebra).abs() <= 1e-10);
        assert!((n.qubit_trace - lim).abs() <= 1e-10);
        assert!((n.subalgebra - lim).abs() <= 1e-10);
    }

    #[test]
    fn json_keys_are_stable() {
        let rep =
            cmd_single(&StateFamily::vacuum(), 0.3, 0.5, &OperatorOrdering::physical()).unwrap();
        let json = rep.to_json();
        let keys = [
            "\"r\"",
            "\"q_R\"",
            "\"ordering\"",
            "\"family\"",
            "\"dims\"",
            "\"reduced_density_matrix\"",
            "\"partial_transpose_spectrum\"",
            "\"negativity\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(rep.negativity.qubit_trace, 0.0);
    }

    #[test]
    fn rejects_bad_parameters() {
        let f = StateFamily::maximally_entangled();
        let o = OperatorOrdering::physical();
        assert!(cmd_single(&f, 1.0, 0.5, &o).is_err());
        assert!(cmd_single(&f, 0.3, 1.5, &o).is_err());
    }
}

//! Least constant capacity for which a colouring property holds.

use super::{is_dp_f_colourable, is_f_choosable, DpPainter, Painter};
use crate::graph::{CapMap, Graph};
use crate::{Budget, Exhausted};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parameter {
    /// choice number
    Ch,
    /// DP-chromatic number
    ChiDp,
    /// paint number
    ChiP,
    /// DP-paint number
    ChiDpp,
}

impl Parameter {
    pub fn name(self) -> &'static str {
        match self {
            Parameter::Ch => "ch",
            Parameter::ChiDp => "chi_DP",
            Parameter::ChiP => "chi_P",
            Parameter::ChiDpp => "chi_DPP",
        }
    }
}

/// Every parameter lies between 1 and `max degree + 1`, so the scan stops.
pub fn parameter(g: &Graph, which: Parameter, budget: &mut Budget) -> Result<i64, Exhausted> {
    let n = g.n();
    let mut painter = match which {
        Parameter::ChiP => Some(Painter::new(g)?),
        _ => None,
    };
    let mut dp = match which {
        Parameter::ChiDpp => Some(DpPainter::new(g)?),
        _ => None,
    };
    let top = g.max_degree() as i64 + 1;
    for k in 1..top {
        let f = CapMap::constant(n, k);
        let ok = match which {
            Parameter::Ch => is_f_choosable(g, &f, budget)?.holds(),
            Parameter::ChiDp => is_dp_f_colourable(g, &f, budget)?.holds(),
            Parameter::ChiP => painter.as_mut().unwrap().decide(&f, budget)?,
            Parameter::ChiDpp => dp.as_mut().unwrap().decide(&f, budget)?,
        };
        if ok {
            return Ok(k);
        }
    }
    Ok(top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::all_graphs;
    use crate::graph::families;

    #[test]
    fn spot_values() {
        let mut b = Budget::default();
        assert_eq!(parameter(&families::complete_bipartite(2, 4), Parameter::Ch, &mut b).unwrap(), 3);
        assert_eq!(parameter(&families::cycle(5), Parameter::ChiDpp, &mut b).unwrap(), 3);
        assert_eq!(parameter(&Graph::empty(1), Parameter::Ch, &mut b).unwrap(), 1);
        assert_eq!(parameter(&families::cycle(4), Parameter::ChiP, &mut b).unwrap(), 2);
        assert_eq!(parameter(&families::cycle(4), Parameter::ChiDp, &mut b).unwrap(), 3);
    }

    #[test]
    fn chain_on_small_graphs() {
        let mut b = Budget::new(u64::MAX);
        for n in 1..=4 {
            for g in all_graphs(n) {
                let [ch, dp, p, dpp] =
                    [Parameter::Ch, Parameter::ChiDp, Parameter::ChiP, Parameter::ChiDpp]
                        .map(|w| parameter(&g, w, &mut b).unwrap());
                assert!(ch <= p && p <= dpp && dp <= dpp, "{ch} {dp} {p} {dpp}");
                assert!(dpp <= 4);
            }
        }
    }
}

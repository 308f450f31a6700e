//! Total-variation curves against the theoretical bound.

use std::fmt::Write as _;

use super::bounds::theoretical_bound;
use super::distribution::Distance;
use super::evolution::FactoredChain;
use crate::combinatorics::ParkingFunction;
use crate::error::Result;
use crate::rational::{format_rational, to_f64_round_up};

#[derive(Debug, Clone, PartialEq)]
pub struct TvRow {
    pub t: usize,
    pub tv: Distance,
    pub bound: f64,
}

impl TvRow {
    /// The distance rounded up, so float error never reports a pass.
    pub fn tv_upper(&self) -> f64 {
        match &self.tv {
            Distance::Exact(r) => to_f64_round_up(r),
            Distance::Approx(x) => *x,
        }
    }

    pub fn within_bound(&self) -> bool {
        self.tv_upper() <= self.bound
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TvCurve {
    pub n: usize,
    /// `None` for the worst case over all starts.
    pub start: Option<ParkingFunction>,
    pub rows: Vec<TvRow>,
}

impl TvCurve {
    fn from_exact(n: usize, start: Option<ParkingFunction>, tvs: Vec<crate::rational::Rational>) -> Self {
        let rows = tvs
            .into_iter()
            .enumerate()
            .map(|(t, tv)| TvRow {
                t,
                tv: Distance::Exact(tv),
                bound: theoretical_bound(n, t),
            })
            .collect();
        Self { n, start, rows }
    }

    /// Exact `d(t)` for `t = 0..=t_max`, `n <= 5`.
    pub fn worst_case(n: usize, t_max: usize) -> Result<Self> {
        let chain = FactoredChain::parking(n)?;
        Ok(Self::from_exact(n, None, chain.worst_case_curve(t_max)))
    }

    /// Exact `|| K^t(x0, ·) - pi ||_TV` for `t = 0..=t_max`, `n <= 5`.
    pub fn from_start(x0: &ParkingFunction, t_max: usize) -> Result<Self> {
        let chain = FactoredChain::parking(x0.len())?;
        let i = chain.space().index_of(x0.entries()).expect("valid parking function is enumerated");
        Ok(Self::from_exact(x0.len(), Some(x0.clone()), chain.tv_curve_from(i, t_max)))
    }

    pub fn all_within_bound(&self) -> bool {
        self.rows.iter().all(TvRow::within_bound)
    }

    pub fn start_label(&self) -> String {
        match &self.start {
            Some(x) => x.to_string(),
            None => "worst-case".to_string(),
        }
    }

    /// `t,tv,bound[,tv_exact]` with `tv` to 12 decimals.
    pub fn to_csv(&self, exact_column: bool) -> String {
        let mut out = String::from(if exact_column { "t,tv,bound,tv_exact\n" } else { "t,tv,bound\n" });
        for row in &self.rows {
            write!(out, "{},{:.12},{}", row.t, row.tv.to_f64(), row.bound).unwrap();
            if exact_column {
                match &row.tv {
                    Distance::Exact(r) => write!(out, ",{}", format_rational(r)).unwrap(),
                    Distance::Approx(_) => out.push(','),
                }
            }
            out.push('\n');
        }
        out
    }
}

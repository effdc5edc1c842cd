//! Parameter grids, sweeps and term-count benchmarks.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::eval::{evaluate, MethodChoice};
use crate::par::{map, Execution};
use crate::params::{validate, EvalResult, SumKind, SumParams, TruncationPolicy};

/// Cartesian grid over `(kind, ν, p, a, x, μ)`, expanded in that order.
/// The `μ` axis applies to `Smu` only.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSpec {
    pub kinds: Vec<SumKind>,
    pub nu: Vec<f64>,
    pub p: Vec<f64>,
    pub a: Vec<f64>,
    pub x: Vec<f64>,
    pub mu: Vec<f64>,
    pub methods: Vec<MethodChoice>,
    pub policy: TruncationPolicy,
}

impl SweepSpec {
    pub fn check(&self) -> Result<()> {
        for (name, empty) in [
            ("kind", self.kinds.is_empty()),
            ("nu", self.nu.is_empty()),
            ("p", self.p.is_empty()),
            ("a", self.a.is_empty()),
            ("x", self.x.is_empty()),
            ("method", self.methods.is_empty()),
        ] {
            if empty {
                return Err(Error::domain(format!("sweep grid '{name}' is empty")));
            }
        }
        self.policy.check()
    }

    /// Grid points in deterministic order. Invalid points are kept; they
    /// turn into error rows.
    pub fn points(&self) -> Vec<SumParams> {
        let mut out = Vec::new();
        let shifts: &[f64] = if self.mu.is_empty() { &[0.0] } else { &self.mu };
        for &kind in &self.kinds {
            for &nu in &self.nu {
                for &p in &self.p {
                    for &a in &self.a {
                        for &x in &self.x {
                            let base = SumParams { nu, p, a, x, mu: None, kind };
                            if kind == SumKind::Smu {
                                out.extend(shifts.iter().map(|&m| SumParams { mu: Some(m), ..base }));
                            } else {
                                out.push(base);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// One output row: a grid point, the requested method and its outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub params: SumParams,
    pub requested: MethodChoice,
    pub outcome: std::result::Result<EvalResult, Error>,
}

/// Evaluates every grid point with every requested method; rows follow the
/// grid order, methods innermost.
pub fn run_sweep(spec: &SweepSpec, exec: Execution) -> Result<Vec<SweepRow>> {
    spec.check()?;
    let jobs: Vec<(SumParams, MethodChoice)> = spec
        .points()
        .into_iter()
        .flat_map(|p| spec.methods.iter().map(move |&m| (p, m)))
        .collect();
    Ok(map(&jobs, exec, |&(params, requested)| SweepRow {
        params,
        requested,
        outcome: evaluate(&params, requested, &spec.policy),
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BenchRecord {
    pub params: SumParams,
    pub method: MethodChoice,
    pub terms_used: usize,
    /// Seconds.
    pub wall_time: f64,
    pub value: f64,
    /// Difference to the other method at the same point.
    pub abs_diff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    /// Log-log slope of direct `terms_used` against `a`.
    pub direct_exponent: Option<f64>,
    /// Direct over expansion `terms_used` at the smallest `a`.
    pub speedup: Option<f64>,
}

fn timed(params: &SumParams, method: MethodChoice, policy: &TruncationPolicy) -> Result<(EvalResult, f64)> {
    let start = Instant::now();
    let r = evaluate(params, method, policy)?;
    Ok((r, start.elapsed().as_secs_f64()))
}

/// Runs direct summation and the expansion along a schedule of `a`.
pub fn run_bench(
    template: SumParams,
    a_schedule: &[f64],
    policy: &TruncationPolicy,
    exec: Execution,
) -> Result<BenchReport> {
    if a_schedule.is_empty() {
        return Err(Error::domain("bench schedule is empty"));
    }
    let points: Vec<SumParams> = a_schedule.iter().map(|&a| SumParams { a, ..template }).collect();
    for p in &points {
        validate(*p)?;
    }
    let pairs = map(&points, exec, |p| -> Result<[BenchRecord; 2]> {
        let (d, td) = timed(p, MethodChoice::Direct, policy)?;
        let (e, te) = timed(p, MethodChoice::Expansion, policy)?;
        let diff = (d.value - e.value).abs();
        let rec = |method, r: EvalResult, wall_time| BenchRecord {
            params: *p,
            method,
            terms_used: r.terms_used,
            wall_time,
            value: r.value,
            abs_diff: diff,
        };
        Ok([rec(MethodChoice::Direct, d, td), rec(MethodChoice::Expansion, e, te)])
    });
    let mut records = Vec::with_capacity(2 * points.len());
    for pair in pairs {
        records.extend(pair?);
    }
    let direct: Vec<&BenchRecord> = records.iter().filter(|r| r.method == MethodChoice::Direct).collect();
    let direct_exponent = (direct.len() >= 2).then(|| {
        let xs: Vec<f64> = direct.iter().map(|r| r.params.a).collect();
        let ys: Vec<f64> = direct.iter().map(|r| r.terms_used as f64).collect();
        fit_exponent(&xs, &ys)
    });
    let smallest = records
        .iter()
        .map(|r| r.params.a)
        .fold(f64::INFINITY, f64::min);
    let at = |m| records.iter().find(|r| r.method == m && r.params.a == smallest).map(|r| r.terms_used as f64);
    let speedup = match (at(MethodChoice::Direct), at(MethodChoice::Expansion)) {
        (Some(d), Some(e)) if e > 0.0 => Some(d / e),
        _ => None,
    };
    Ok(BenchReport { records, direct_exponent, speedup })
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn fit_exponent(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> SweepSpec {
        SweepSpec {
            kinds: vec![SumKind::S],
            nu: vec![0.0],
            p: vec![1.0],
            a: vec![0.1, 0.2, 0.4],
            x: vec![0.5, 1.0, 2.0],
            mu: vec![],
            methods: vec![MethodChoice::Direct, MethodChoice::Expansion],
            policy: TruncationPolicy::default(),
        }
    }

    #[test]
    fn row_count_and_order() {
        let rows = run_sweep(&spec(), Execution::Parallel).unwrap();
        assert_eq!(rows.len(), 18);
        assert_eq!(rows[0].params.a, 0.1);
        assert_eq!(rows[1].params.x, 0.5);
        assert_eq!(rows[1].requested, MethodChoice::Expansion);
        assert_eq!(rows[2].params.x, 1.0);
        let seq = run_sweep(&spec(), Execution::Sequential).unwrap();
        assert_eq!(rows, seq);
    }

    #[test]
    fn invalid_point_is_isolated() {
        let mut s = spec();
        s.a = vec![0.1, -1.0];
        let rows = run_sweep(&s, Execution::Sequential).unwrap();
        assert_eq!(rows.len(), 12);
        assert!(rows.iter().filter(|r| r.outcome.is_err()).count() == 6);
    }

    #[test]
    fn exponent_of_power_law() {
        let xs = [1e-1, 1e-2, 1e-3];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 3.0 * x.powf(-0.5)).collect();
        assert!((fit_exponent(&xs, &ys) + 0.5).abs() < 1e-12);
    }
}

use std::collections::HashMap;

use super::SweepRecord;
use crate::centrality::Strategy;
use crate::error::{Error, Result};

/// One `(beta, mu, lambda)` operating point, independent of strategy.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Condition {
    pub beta: f64,
    pub mu: f64,
    pub lambda: f64,
}

impl Condition {
    fn key(&self) -> [u64; 3] {
        [
            self.beta.to_bits(),
            self.mu.to_bits(),
            self.lambda.to_bits(),
        ]
    }
}

/// DEG fraction over NBNC fraction for one network and condition.
/// `ratio` is `None` when the NBNC fraction is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioRecord {
    pub network: String,
    pub beta: f64,
    pub mu: f64,
    pub lambda: f64,
    pub ratio: Option<f64>,
}

impl RatioRecord {
    pub fn condition(&self) -> Condition {
        Condition {
            beta: self.beta,
            mu: self.mu,
            lambda: self.lambda,
        }
    }
}

/// Pairs the NBNC and DEG record of every `(network, condition)` cell, in
/// order of first appearance.
pub fn compute_ratios(records: &[SweepRecord]) -> Result<Vec<RatioRecord>> {
    type Pair<'a> = (Option<&'a SweepRecord>, Option<&'a SweepRecord>);
    let mut order: Vec<(&str, [u64; 3])> = Vec::new();
    let mut cells: HashMap<(&str, [u64; 3]), Pair<'_>> = HashMap::new();
    for r in records {
        let key = (r.network.as_str(), r.condition().key());
        let slot = cells.entry(key).or_insert_with(|| {
            order.push(key);
            (None, None)
        });
        let target = match r.strategy {
            Strategy::Nbnc => &mut slot.0,
            Strategy::Deg => &mut slot.1,
        };
        if target.is_some() {
            return Err(Error::Data(format!(
                "duplicate {} record for {}",
                r.strategy,
                describe(r)
            )));
        }
        *target = Some(r);
    }
    order
        .into_iter()
        .map(|key| match cells[&key] {
            (Some(nbnc), Some(deg)) => Ok(RatioRecord {
                network: nbnc.network.clone(),
                beta: nbnc.beta,
                mu: nbnc.mu,
                lambda: nbnc.lambda,
                ratio: (nbnc.avg_infected_fraction > 0.0)
                    .then(|| deg.avg_infected_fraction / nbnc.avg_infected_fraction),
            }),
            (Some(r), None) | (None, Some(r)) => Err(Error::Data(format!(
                "missing strategy pair for {}",
                describe(r)
            ))),
            (None, None) => unreachable!("every key has at least one record"),
        })
        .collect()
}

fn describe(r: &SweepRecord) -> String {
    format!(
        "network {} beta={} mu={} lambda={}",
        r.network, r.beta, r.mu, r.lambda
    )
}

#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub beta: f64,
    pub mu: f64,
    pub lambda: f64,
    pub median: f64,
    pub q1: f64,
    pub q3: f64,
    pub min: f64,
    pub max: f64,
    pub n_defined: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioSummary {
    pub rows: Vec<SummaryRow>,
    /// Conditions where no network had a defined ratio.
    pub excluded: Vec<Condition>,
}

/// Order statistics of the defined ratios across networks, per condition.
pub fn summarize_ratios(ratios: &[RatioRecord]) -> RatioSummary {
    let mut order: Vec<Condition> = Vec::new();
    let mut groups: HashMap<[u64; 3], Vec<f64>> = HashMap::new();
    for r in ratios {
        let c = r.condition();
        let values = groups.entry(c.key()).or_insert_with(|| {
            order.push(c);
            Vec::new()
        });
        if let Some(x) = r.ratio {
            values.push(x);
        }
    }
    let mut summary = RatioSummary {
        rows: Vec::new(),
        excluded: Vec::new(),
    };
    for c in order {
        let mut values = groups.remove(&c.key()).unwrap_or_default();
        if values.is_empty() {
            summary.excluded.push(c);
            continue;
        }
        values.sort_by(f64::total_cmp);
        summary.rows.push(SummaryRow {
            beta: c.beta,
            mu: c.mu,
            lambda: c.lambda,
            median: quantile(&values, 0.5),
            q1: quantile(&values, 0.25),
            q3: quantile(&values, 0.75),
            min: values[0],
            max: values[values.len() - 1],
            n_defined: values.len(),
        });
    }
    summary
}

/// Linear-interpolation quantile of sorted, non-empty data: position
/// `q * (n - 1)`. For `q = 0.5` and even `n` this is the mean of the two
/// middle values.
pub fn quantile(sorted: &[f64], q: f64) -> f64 {
    assert!(!sorted.is_empty(), "quantile of empty data");
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(network: &str, lambda: f64, strategy: Strategy, frac: f64) -> SweepRecord {
        SweepRecord {
            network: network.into(),
            beta: 0.3,
            mu: 0.25,
            lambda,
            strategy,
            avg_infected_fraction: frac,
            n_trials: 50,
            std_error: None,
        }
    }

    fn ratio(network: &str, lambda: f64, value: Option<f64>) -> RatioRecord {
        RatioRecord {
            network: network.into(),
            beta: 0.3,
            mu: 0.25,
            lambda,
            ratio: value,
        }
    }

    #[test]
    fn ratio_arithmetic() {
        let records = vec![
            record("a", 0.05, Strategy::Nbnc, 0.25),
            record("a", 0.05, Strategy::Deg, 0.30),
            record("a", 0.10, Strategy::Deg, 0.4),
            record("a", 0.10, Strategy::Nbnc, 0.4),
            record("a", 0.15, Strategy::Nbnc, 0.0),
            record("a", 0.15, Strategy::Deg, 0.2),
        ];
        let ratios = compute_ratios(&records).unwrap();
        assert_eq!(ratios.len(), 3);
        assert!((ratios[0].ratio.unwrap() - 1.2).abs() < 1e-12);
        assert_eq!(ratios[1].ratio, Some(1.0));
        assert_eq!(ratios[2].ratio, None);
    }

    #[test]
    fn missing_pair_names_cell() {
        let records = vec![record("net7", 0.05, Strategy::Nbnc, 0.25)];
        let err = compute_ratios(&records).unwrap_err().to_string();
        assert!(err.contains("net7") && err.contains("lambda=0.05"), "{err}");
        let dup = vec![
            record("a", 0.05, Strategy::Nbnc, 0.25),
            record("a", 0.05, Strategy::Nbnc, 0.25),
        ];
        assert!(compute_ratios(&dup).is_err());
    }

    #[test]
    fn medians() {
        let s = summarize_ratios(&[
            ratio("a", 0.05, Some(1.4)),
            ratio("b", 0.05, Some(1.0)),
            ratio("c", 0.05, Some(1.2)),
            ratio("a", 0.10, Some(0.9)),
        ]);
        assert_eq!(s.rows.len(), 2);
        assert!((s.rows[0].median - 1.2).abs() < 1e-12);
        assert_eq!(
            (s.rows[0].min, s.rows[0].max, s.rows[0].n_defined),
            (1.0, 1.4, 3)
        );
        assert_eq!(s.rows[1].median, 0.9);
        assert_eq!((s.rows[1].q1, s.rows[1].q3), (0.9, 0.9));
    }

    #[test]
    fn all_undefined_group_is_excluded() {
        let s = summarize_ratios(&[
            ratio("a", 0.05, None),
            ratio("b", 0.05, None),
            ratio("a", 0.10, Some(1.1)),
            ratio("b", 0.10, None),
        ]);
        assert_eq!(s.rows.len(), 1);
        assert_eq!(s.rows[0].n_defined, 1);
        assert_eq!(s.excluded.len(), 1);
        assert_eq!(s.excluded[0].lambda, 0.05);
    }

    #[test]
    fn quantiles() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(quantile(&xs, 0.5), 2.5);
        assert_eq!(quantile(&xs, 0.25), 1.75);
        assert_eq!(quantile(&xs, 0.75), 3.25);
        assert_eq!(quantile(&xs, 0.0), 1.0);
        assert_eq!(quantile(&xs, 1.0), 4.0);
    }
}

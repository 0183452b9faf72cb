//! CSV emission and re-reading. Reals are written with six decimals.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use super::{RatioRecord, RatioSummary, SweepRecord};
use crate::error::{Error, Result};

pub const RECORDS_HEADER: [&str; 7] = [
    "network",
    "beta",
    "mu",
    "lambda",
    "strategy",
    "avg_infected_fraction",
    "n_trials",
];
pub const RATIOS_HEADER: [&str; 6] = ["network", "beta", "mu", "lambda", "ratio", "defined"];
pub const SUMMARY_HEADER: [&str; 9] = [
    "beta",
    "mu",
    "lambda",
    "median",
    "q1",
    "q3",
    "min",
    "max",
    "n_defined",
];

fn real(x: f64) -> String {
    format!("{x:.6}")
}

fn writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub fn write_records_csv<W: Write>(records: &[SweepRecord], out: W) -> io::Result<()> {
    let mut w = writer(out);
    w.write_record(RECORDS_HEADER)?;
    for r in records {
        w.write_record([
            r.network.clone(),
            real(r.beta),
            real(r.mu),
            real(r.lambda),
            r.strategy.to_string(),
            real(r.avg_infected_fraction),
            r.n_trials.to_string(),
        ])?;
    }
    w.flush()
}

/// Undefined ratios are written as `NA` with `defined = false`.
pub fn write_ratios_csv<W: Write>(ratios: &[RatioRecord], out: W) -> io::Result<()> {
    let mut w = writer(out);
    w.write_record(RATIOS_HEADER)?;
    for r in ratios {
        let (ratio, defined) = match r.ratio {
            Some(x) => (real(x), "true"),
            None => ("NA".to_string(), "false"),
        };
        w.write_record([
            r.network.clone(),
            real(r.beta),
            real(r.mu),
            real(r.lambda),
            ratio,
            defined.to_string(),
        ])?;
    }
    w.flush()
}

pub fn write_summary_csv<W: Write>(summary: &RatioSummary, out: W) -> io::Result<()> {
    let mut w = writer(out);
    w.write_record(SUMMARY_HEADER)?;
    for s in &summary.rows {
        w.write_record([
            real(s.beta),
            real(s.mu),
            real(s.lambda),
            real(s.median),
            real(s.q1),
            real(s.q3),
            real(s.min),
            real(s.max),
            s.n_defined.to_string(),
        ])?;
    }
    w.flush()
}

/// Creates `path` and hands a buffered writer to `emit`; any failure is
/// reported against the path.
pub fn write_file<F>(path: &Path, emit: F) -> Result<()>
where
    F: FnOnce(&mut BufWriter<File>) -> io::Result<()>,
{
    let wrap = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(wrap)?;
    let mut out = BufWriter::new(file);
    emit(&mut out).map_err(wrap)?;
    out.flush().map_err(wrap)
}

/// Parses a records CSV as written by [`write_records_csv`]. Errors carry
/// the 1-based line number (the header is line 1).
pub fn read_records_csv<R: Read>(input: R) -> Result<Vec<SweepRecord>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(input);
    let header = reader
        .headers()
        .map_err(|e| Error::Data(format!("line 1: {e}")))?;
    if header.iter().ne(RECORDS_HEADER) {
        return Err(Error::Data(format!(
            "line 1: expected header {}",
            RECORDS_HEADER.join(",")
        )));
    }
    let mut records = Vec::new();
    for (idx, row) in reader.records().enumerate() {
        let line = idx + 2;
        let row = row.map_err(|e| Error::Data(format!("line {line}: {e}")))?;
        if row.len() != RECORDS_HEADER.len() {
            return Err(Error::Data(format!(
                "line {line}: expected {} fields, found {}",
                RECORDS_HEADER.len(),
                row.len()
            )));
        }
        let field = |i: usize| -> Result<f64> {
            row[i].trim().parse::<f64>().map_err(|_| {
                Error::Data(format!(
                    "line {line}: invalid {} {:?}",
                    RECORDS_HEADER[i], &row[i]
                ))
            })
        };
        let strategy = row[4]
            .parse()
            .map_err(|_| Error::Data(format!("line {line}: invalid strategy {:?}", &row[4])))?;
        let n_trials = row[6]
            .trim()
            .parse()
            .map_err(|_| Error::Data(format!("line {line}: invalid n_trials {:?}", &row[6])))?;
        let avg_infected_fraction = field(5)?;
        if !(0.0..=1.0).contains(&avg_infected_fraction) {
            return Err(Error::Data(format!(
                "line {line}: avg_infected_fraction {avg_infected_fraction} outside [0, 1]"
            )));
        }
        records.push(SweepRecord {
            network: row[0].to_string(),
            beta: field(1)?,
            mu: field(2)?,
            lambda: field(3)?,
            strategy,
            avg_infected_fraction,
            n_trials,
            std_error: None,
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::Strategy;
    use crate::experiment::{Condition, SummaryRow};

    fn sample() -> Vec<SweepRecord> {
        vec![SweepRecord {
            network: "karate".into(),
            beta: 0.3,
            mu: 0.25,
            lambda: 0.05,
            strategy: Strategy::Nbnc,
            avg_infected_fraction: 0.123_456_78,
            n_trials: 50,
            std_error: Some(0.01),
        }]
    }

    #[test]
    fn records_layout() {
        let mut buf = Vec::new();
        write_records_csv(&sample(), &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "network,beta,mu,lambda,strategy,avg_infected_fraction,n_trials\n\
             karate,0.300000,0.250000,0.050000,NBNC,0.123457,50\n"
        );
    }

    #[test]
    fn ratios_layout() {
        let ratios = vec![
            RatioRecord {
                network: "a".into(),
                beta: 0.5,
                mu: 0.5,
                lambda: 0.1,
                ratio: Some(1.2),
            },
            RatioRecord {
                network: "b".into(),
                beta: 0.5,
                mu: 0.5,
                lambda: 0.1,
                ratio: None,
            },
        ];
        let mut buf = Vec::new();
        write_ratios_csv(&ratios, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "network,beta,mu,lambda,ratio,defined\n\
             a,0.500000,0.500000,0.100000,1.200000,true\n\
             b,0.500000,0.500000,0.100000,NA,false\n"
        );
    }

    #[test]
    fn summary_layout() {
        let summary = RatioSummary {
            rows: vec![SummaryRow {
                beta: 0.7,
                mu: 0.25,
                lambda: 0.3,
                median: 1.15,
                q1: 1.1,
                q3: 1.2,
                min: 0.9,
                max: 1.5,
                n_defined: 10,
            }],
            excluded: vec![Condition {
                beta: 0.3,
                mu: 0.5,
                lambda: 0.3,
            }],
        };
        let mut buf = Vec::new();
        write_summary_csv(&summary, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "beta,mu,lambda,median,q1,q3,min,max,n_defined\n\
             0.700000,0.250000,0.300000,1.150000,1.100000,1.200000,0.900000,1.500000,10\n"
        );
    }

    #[test]
    fn names_with_commas_are_quoted_and_read_back() {
        let mut records = sample();
        records[0].network = "law firm, partners".into();
        let mut buf = Vec::new();
        write_records_csv(&records, &mut buf).unwrap();
        let back = read_records_csv(buf.as_slice()).unwrap();
        assert_eq!(back[0].network, "law firm, partners");
        assert_eq!(back[0].avg_infected_fraction, 0.123457);
    }

    #[test]
    fn malformed_rows_report_line() {
        let text = "network,beta,mu,lambda,strategy,avg_infected_fraction,n_trials\n\
                    a,0.3,0.25,0.05,NBNC,0.1,50\n\
                    a,0.3,0.25,0.05,DEG,oops,50\n";
        let err = read_records_csv(text.as_bytes()).unwrap_err().to_string();
        assert!(err.contains("line 3"), "{err}");
        let bad_header = "net,beta\nx,1\n";
        assert!(read_records_csv(bad_header.as_bytes())
            .unwrap_err()
            .to_string()
            .contains("line 1"));
        let short = "network,beta,mu,lambda,strategy,avg_infected_fraction,n_trials\na,0.3\n";
        assert!(read_records_csv(short.as_bytes())
            .unwrap_err()
            .to_string()
            .contains("line 2"));
    }

    #[test]
    fn io_failure_names_path() {
        let path = Path::new("/nonexistent-dir/records.csv");
        let err = write_file(path, |w| write_records_csv(&sample(), w)).unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/records.csv"));
    }
}

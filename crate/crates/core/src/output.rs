//! Machine-readable output: metadata blocks and sample serializations.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bijections::{dyck_to_triangulation, orbit_dyck_path, pf_to_labeled_dyck};
use crate::burnside::run_replicas;
use crate::combinatorics::word::format_entries;
use crate::error::{invalid, Error, Result};
use crate::rng::RNG_ID;
use crate::ParkingFunction;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => invalid(format!("unknown format {s:?}; expected csv or json")),
        }
    }
}

/// Provenance attached to every output stream. In CSV it is the first line,
/// written as `# ` followed by the JSON object.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metadata {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub n: usize,
    pub t: Option<usize>,
    pub replicas: Option<usize>,
    pub seed: Option<u64>,
    pub rng_id: &'static str,
    pub start_state: Option<String>,
    pub version: &'static str,
}

impl Metadata {
    pub fn new(command: &str, n: usize) -> Self {
        Self {
            command: command.to_string(),
            kind: None,
            n,
            t: None,
            replicas: None,
            seed: None,
            rng_id: RNG_ID,
            start_state: None,
            version: VERSION,
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("metadata serializes")
    }

    pub fn csv_comment(&self) -> String {
        format!("# {}", self.to_json())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleKind {
    Pf,
    Ipf,
    Dyck,
    LabeledDyck,
    Triangulation,
}

impl SampleKind {
    pub const NAMES: [&'static str; 5] = ["pf", "ipf", "dyck", "labeled-dyck", "triangulation"];
}

impl fmt::Display for SampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(Self::NAMES[*self as usize])
    }
}

impl FromStr for SampleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match Self::NAMES.iter().position(|&name| name == s) {
            Some(0) => Ok(SampleKind::Pf),
            Some(1) => Ok(SampleKind::Ipf),
            Some(2) => Ok(SampleKind::Dyck),
            Some(3) => Ok(SampleKind::LabeledDyck),
            Some(4) => Ok(SampleKind::Triangulation),
            _ => invalid(format!("unknown sample kind {s:?}; expected one of {}", Self::NAMES.join(", "))),
        }
    }
}

/// A chain state rendered as the requested structure. Everything except
/// `Pf` and `LabeledDyck` is an orbit projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    kind: SampleKind,
    text: String,
    json: Value,
}

impl Sample {
    pub fn project(kind: SampleKind, x: &ParkingFunction) -> Result<Self> {
        Ok(match kind {
            SampleKind::Pf => Sample {
                kind,
                text: x.to_string(),
                json: json!(x.entries()),
            },
            SampleKind::Ipf => {
                let u = x.sorted();
                Sample {
                    kind,
                    text: u.to_string(),
                    json: json!(u.entries()),
                }
            }
            SampleKind::Dyck => {
                let d = orbit_dyck_path(x).to_string();
                Sample {
                    kind,
                    json: json!(d),
                    text: d,
                }
            }
            SampleKind::LabeledDyck => {
                let ld = pf_to_labeled_dyck(x).to_string();
                Sample {
                    kind,
                    json: json!(ld),
                    text: ld,
                }
            }
            SampleKind::Triangulation => {
                let t = dyck_to_triangulation(&orbit_dyck_path(x))?;
                let pairs: Vec<[usize; 2]> = t.diagonals().iter().map(|&(a, b)| [a, b]).collect();
                Sample {
                    kind,
                    text: t.to_string(),
                    json: json!(pairs),
                }
            }
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn json(&self) -> &Value {
        &self.json
    }

    /// One CSV row. Word-valued samples spread over one column per entry;
    /// the others are a single, quoted-when-needed field.
    pub fn csv_row(&self) -> String {
        match self.kind {
            SampleKind::Pf | SampleKind::Ipf => self.text.clone(),
            _ if self.text.contains([',', '"']) => format!("\"{}\"", self.text.replace('"', "\"\"")),
            _ => self.text.clone(),
        }
    }
}

/// Runs `replicas` chains for `steps` steps from `start` and projects each
/// final state; replica order is preserved.
pub fn collect_samples(
    kind: SampleKind,
    start: &ParkingFunction,
    steps: usize,
    seed: u64,
    replicas: usize,
) -> Result<Vec<Sample>> {
    if replicas == 0 {
        return invalid("replicas must be at least 1");
    }
    run_replicas(start, steps, seed, replicas)
        .iter()
        .map(|x| Sample::project(kind, x))
        .collect()
}

pub fn render_samples(meta: &Metadata, samples: &[Sample], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = meta.csv_comment();
            out.push('\n');
            for s in samples {
                out.push_str(&s.csv_row());
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let samples: Vec<&Value> = samples.iter().map(Sample::json).collect();
            let doc = json!({ "metadata": meta.to_json(), "samples": samples });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializes"))
        }
    }
}

/// Drops the `# ` metadata line and returns the data lines of a CSV stream.
pub fn csv_data_lines(csv: &str) -> impl Iterator<Item = &str> {
    csv.lines().filter(|l| !l.starts_with('#'))
}

pub fn start_label(x: &ParkingFunction) -> String {
    format_entries(x.entries())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_round_trip() {
        for name in SampleKind::NAMES {
            assert_eq!(name.parse::<SampleKind>().unwrap().to_string(), name);
        }
        assert!("tree".parse::<SampleKind>().is_err());
    }

    #[test]
    fn projections() {
        let x: ParkingFunction = "4,1,3,4,1".parse().unwrap();
        assert_eq!(Sample::project(SampleKind::Ipf, &x).unwrap().text(), "1,1,3,4,4");
        assert_eq!(Sample::project(SampleKind::Dyck, &x).unwrap().text(), "NNEENENNEE");
        let ld = Sample::project(SampleKind::LabeledDyck, &x).unwrap();
        assert_eq!(ld.csv_row(), "\"NNEENENNEE | [2,5];[3];[1,4]\"");
        let t = Sample::project(SampleKind::Triangulation, &"1,1".parse().unwrap()).unwrap();
        assert_eq!(t.text(), "[[1,3]]");
    }

    #[test]
    fn csv_has_metadata_line() {
        let meta = Metadata::new("sample", 1);
        let samples = collect_samples(SampleKind::Ipf, &ParkingFunction::identity(1), 3, 7, 2).unwrap();
        let csv = render_samples(&meta, &samples, Format::Csv);
        assert!(csv.starts_with("# {"));
        assert_eq!(csv_data_lines(&csv).collect::<Vec<_>>(), ["1", "1"]);
    }
}

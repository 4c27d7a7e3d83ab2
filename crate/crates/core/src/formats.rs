//! File formats: matrices as JSON, distributions as CSV.
//!
//! Every float is written with 17 significant digits in scientific notation,
//! which round-trips an `f64` exactly and keeps output byte-stable.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::geometry::{LineLabel, PointLabel};
use crate::matrix::CMatrix;
use crate::modular::Modulus;
use crate::mub::MubState;
use crate::phasespace::{MubProbabilities, QuasiDistribution};
use num_complex::Complex;

pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// `{"d": .., "re": [[..]], "im": [[..]]}`. Rows are computational-basis
/// indices; a state vector is stored as a single column.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct MatrixFile {
    pub d: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &CMatrix<f64>) -> Self {
        MatrixFile {
            d: m.dim(),
            re: m.rows().map(|r| r.iter().map(|z| z.re).collect()).collect(),
            im: m.rows().map(|r| r.iter().map(|z| z.im).collect()).collect(),
        }
    }

    pub fn from_state(s: &MubState<f64>) -> Self {
        MatrixFile {
            d: s.amplitudes.len(),
            re: s.amplitudes.iter().map(|z| vec![z.re]).collect(),
            im: s.amplitudes.iter().map(|z| vec![z.im]).collect(),
        }
    }

    pub fn parse(json: &str) -> Result<Self> {
        let f: MatrixFile = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        if self.re.len() != self.d || self.im.len() != self.d {
            return Err(Error::Parse(format!(
                "expected {} rows, got re={} im={}",
                self.d,
                self.re.len(),
                self.im.len()
            )));
        }
        let width = self.re.first().map_or(0, Vec::len);
        if width != self.d && width != 1 {
            return Err(Error::Parse(format!("row width {width} is neither {} nor 1", self.d)));
        }
        for (i, (r, m)) in self.re.iter().zip(&self.im).enumerate() {
            if r.len() != width || m.len() != width {
                return Err(Error::Parse(format!("row {i} is ragged")));
            }
        }
        Ok(())
    }

    pub fn to_matrix(&self) -> Result<CMatrix<f64>> {
        self.validate()?;
        if self.re.first().map_or(0, Vec::len) != self.d {
            return Err(Error::Parse(format!("not a {0}x{0} matrix", self.d)));
        }
        let rows = self
            .re
            .iter()
            .zip(&self.im)
            .map(|(r, i)| r.iter().zip(i).map(|(&a, &b)| Complex::new(a, b)).collect())
            .collect();
        CMatrix::from_rows(rows)
    }

    pub fn to_json(&self) -> String {
        let grid = |g: &[Vec<f64>]| {
            let rows: Vec<String> = g
                .iter()
                .map(|r| {
                    let cells: Vec<String> = r.iter().map(|&x| format_float(x)).collect();
                    format!("    [{}]", cells.join(", "))
                })
                .collect();
            format!("[\n{}\n  ]", rows.join(",\n"))
        };
        format!(
            "{{\n  \"d\": {},\n  \"re\": {},\n  \"im\": {}\n}}\n",
            self.d,
            grid(&self.re),
            grid(&self.im)
        )
    }
}

pub fn matrix_to_json(m: &CMatrix<f64>) -> String {
    MatrixFile::from_matrix(m).to_json()
}

pub fn matrix_from_json(json: &str) -> Result<CMatrix<f64>> {
    MatrixFile::parse(json)?.to_matrix()
}

pub fn quasi_to_csv(v: &QuasiDistribution<f64>) -> String {
    let mut out = String::from("m_minus1,m0,value\n");
    for (j, x) in v.iter() {
        out.push_str(&format!("{},{},{}\n", j.m_minus1, j.m0, format_float(x)));
    }
    out
}

pub fn quasi_to_json(v: &QuasiDistribution<f64>) -> String {
    let rows: Vec<String> = v
        .iter()
        .map(|(j, x)| {
            format!(
                "    {{\"m_minus1\": {}, \"m0\": {}, \"value\": {}}}",
                j.m_minus1,
                j.m0,
                format_float(x)
            )
        })
        .collect();
    format!(
        "{{\n  \"d\": {},\n  \"values\": [\n{}\n  ]\n}}\n",
        v.modulus(),
        rows.join(",\n")
    )
}

#[derive(Deserialize)]
struct QuasiRow {
    m_minus1: i64,
    m0: i64,
    value: f64,
}

pub fn quasi_from_csv(d: Modulus, csv_text: &str) -> Result<QuasiDistribution<f64>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(csv_text.as_bytes());
    let mut entries = Vec::new();
    for row in reader.deserialize::<QuasiRow>() {
        let row = row.map_err(|e| Error::Parse(e.to_string()))?;
        entries.push((LineLabel::from_ints(d, row.m_minus1, row.m0)?, row.value));
    }
    QuasiDistribution::from_entries(d, entries)
}

pub fn probabilities_to_csv(p: &MubProbabilities<f64>) -> String {
    let mut out = String::from("m,b,value\n");
    for (a, x) in p.iter() {
        out.push_str(&format!("{},{},{}\n", a.m, a.b, format_float(x)));
    }
    out
}

#[derive(Deserialize)]
struct ProbRow {
    m: i64,
    b: i64,
    value: f64,
}

pub fn probabilities_from_csv(d: Modulus, csv_text: &str) -> Result<MubProbabilities<f64>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(csv_text.as_bytes());
    let mut entries = Vec::new();
    for row in reader.deserialize::<ProbRow>() {
        let row = row.map_err(|e| Error::Parse(e.to_string()))?;
        entries.push((PointLabel::from_ints(d, row.m, row.b)?, row.value));
    }
    MubProbabilities::from_entries(d, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn float_format_has_17_significant_digits() {
        assert_eq!(format_float(1.0 / 3.0), "3.3333333333333331e-1");
        assert_eq!(format_float(-2.0), "-2.0000000000000000e0");
        assert_eq!(format_float(0.0), "0.0000000000000000e0");
    }

    #[test]
    fn matrix_json_shape() {
        let m = CMatrix::<f64>::identity(3);
        let v: serde_json::Value = serde_json::from_str(&matrix_to_json(&m)).unwrap();
        assert_eq!(v["d"], 3);
        assert_eq!(v["re"][1][1], 1.0);
        assert_eq!(v["im"][0].as_array().unwrap().len(), 3);
    }

    #[test]
    fn matrix_json_rejects_bad_shapes() {
        assert!(matrix_from_json(r#"{"d":2,"re":[[1,0]],"im":[[0,0]]}"#).is_err());
        assert!(matrix_from_json(r#"{"d":2,"re":[[1,0],[0]],"im":[[0,0],[0,0]]}"#).is_err());
        assert!(matrix_from_json(r#"{"d":2,"re":[[1],[0]],"im":[[0],[0]]}"#).is_err());
        assert!(matrix_from_json("not json").is_err());
    }

    #[test]
    fn quasi_csv_layout() {
        let d = Modulus::new(3).unwrap();
        let v = QuasiDistribution::from_values(d, (0..9).map(f64::from).collect()).unwrap();
        let text = quasi_to_csv(&v);
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "m_minus1,m0,value");
        assert_eq!(lines[1], "0,0,0.0000000000000000e0");
        assert_eq!(lines[9], "2,2,8.0000000000000000e0");
        assert_eq!(quasi_from_csv(d, &text).unwrap(), v);
    }

    #[test]
    fn quasi_csv_missing_and_duplicate_rows() {
        let d = Modulus::new(3).unwrap();
        let v = QuasiDistribution::from_values(d, vec![0.5; 9]).unwrap();
        let text = quasi_to_csv(&v);
        let short: String = text.lines().take(9).map(|l| format!("{l}\n")).collect();
        assert!(matches!(quasi_from_csv(d, &short), Err(Error::MissingLine(_))));
        let dup = format!("{text}2,2,0.5\n");
        assert!(matches!(quasi_from_csv(d, &dup), Err(Error::DuplicateLine(_))));
        assert!(matches!(
            quasi_from_csv(d, "m_minus1,m0,value\n0,x,1\n"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn probabilities_csv_writes_cb_column_as_minus_one() {
        let d = Modulus::new(3).unwrap();
        let p = MubProbabilities::from_entries(d, PointLabel::all(d).map(|a| (a, 1.0 / 3.0))).unwrap();
        let text = probabilities_to_csv(&p);
        assert!(text.starts_with("m,b,value\n0,-1,"));
        assert_eq!(probabilities_from_csv(d, &text).unwrap(), p);
    }

    proptest! {
        #[test]
        fn matrix_json_roundtrips_exactly(vals in proptest::collection::vec(-1e6f64..1e6, 18)) {
            let m = CMatrix::from_fn(3, |r, c| Complex::new(vals[r * 3 + c], vals[9 + r * 3 + c]));
            let back = matrix_from_json(&matrix_to_json(&m)).unwrap();
            prop_assert_eq!(back, m);
        }
    }
}

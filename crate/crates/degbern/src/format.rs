//! Output formats: the basis-row CSV, the verifier JSON report, and
//! half-even decimal rendering for display.

use std::io::Write;

use degbern_core::bernstein::BernsteinBasisRow;
use degbern_core::verify::{Params, VerifyReport};
use degbern_core::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

pub const BASIS_CSV_HEADER: [&str; 5] = ["k", "x", "lambda", "value_num", "value_den"];

/// One `k,x,lambda,value_num,value_den` record.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisSample {
    pub k: usize,
    pub x: Rational,
    pub lambda: Rational,
    pub value: Rational,
}

impl BasisSample {
    pub fn from_row(
        row: &BernsteinBasisRow<Rational>,
        x: &Rational,
        lambda: &Rational,
    ) -> Vec<Self> {
        row.values
            .iter()
            .enumerate()
            .map(|(k, v)| BasisSample {
                k,
                x: x.clone(),
                lambda: lambda.clone(),
                value: v.clone(),
            })
            .collect()
    }
}

pub fn write_basis_csv<W: Write>(out: W, samples: &[BasisSample]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(BASIS_CSV_HEADER)?;
    for s in samples {
        w.write_record([
            s.k.to_string(),
            s.x.to_string(),
            s.lambda.to_string(),
            s.value.numer().to_string(),
            s.value.denom().to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Rounds to `places` decimal digits, ties to even, and renders with a
/// fixed number of fractional digits.
pub fn to_decimal(value: &Rational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let scaled = value.abs() * Rational::from_integer(scale.clone());
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let twice: BigInt = r * 2;
    let rounded = match twice.cmp(scaled.denom()) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal if q.is_even() => q,
        std::cmp::Ordering::Equal => q + 1,
    };
    let sign = if value.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        return format!("{sign}{rounded}");
    }
    let (int_part, frac) = rounded.div_rem(&scale);
    format!(
        "{sign}{int_part}.{:0>width$}",
        frac.to_string(),
        width = places as usize
    )
}

struct ParamsMap<'a>(&'a Params);

impl Serialize for ParamsMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0 .0.len()))?;
        for (k, v) in &self.0 .0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct FailureJson<'a> {
    params: ParamsMap<'a>,
    difference: String,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    id: &'a str,
    interpretation: Option<&'a str>,
    checked: usize,
    status: &'static str,
    first_failure: Option<FailureJson<'a>>,
}

impl<'a> From<&'a VerifyReport> for ReportJson<'a> {
    fn from(r: &'a VerifyReport) -> Self {
        ReportJson {
            id: &r.id,
            interpretation: r.interpretation.as_deref(),
            checked: r.checked,
            status: r.status.as_str(),
            first_failure: r.first_failure.as_ref().map(|f| FailureJson {
                params: ParamsMap(&f.params),
                difference: f.difference.to_string(),
            }),
        }
    }
}

/// The report list as pretty JSON, keys in schema order.
pub fn reports_to_json(reports: &[VerifyReport]) -> String {
    let view: Vec<ReportJson<'_>> = reports.iter().map(ReportJson::from).collect();
    serde_json::to_string_pretty(&view).expect("reports serialize")
}

pub fn report_to_json_value(report: &VerifyReport) -> serde_json::Value {
    serde_json::to_value(ReportJson::from(report)).expect("report serializes")
}

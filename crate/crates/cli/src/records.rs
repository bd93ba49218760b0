use lerch::engines::{EngineKind, EngineReport, Warning};
use lerch::{Complex64, CutSide, LerchPoint};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `eval` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub z: Complex64,
    pub s: Complex64,
    pub a: Complex64,
    pub cut_side: CutSide,
    pub engine: EngineKind,
    pub value_re: f64,
    pub value_im: f64,
    pub abs_err_estimate: f64,
    pub n_terms: usize,
    pub m_terms: usize,
    pub warnings: Vec<Warning>,
}

impl EvalRecord {
    pub fn new(p: &LerchPoint, r: &EngineReport) -> Self {
        Self {
            z: p.z,
            s: p.s,
            a: p.a,
            cut_side: p.cut_side,
            engine: r.engine,
            value_re: r.value.re,
            value_im: r.value.im,
            abs_err_estimate: r.abs_err_estimate,
            n_terms: r.n_terms,
            m_terms: r.m_terms,
            warnings: r.warnings.clone(),
        }
    }
}

/// One row of the verification table, recomputed next to the printed values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1Row {
    pub z: Complex64,
    pub reference: Option<Complex64>,
    pub printed_reference: Complex64,
    pub approximation: Option<Complex64>,
    pub printed_approximation: Complex64,
    pub m_opt: Option<usize>,
    pub printed_m_opt: usize,
    pub scaled_remainder: Option<f64>,
    pub printed_scaled_remainder: f64,
    pub pass: bool,
    pub error: Option<String>,
}

/// Sweep parameter: a real number, or a complex one written as `re,im`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamValue {
    Real(f64),
    Complex(Complex64),
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            ParamValue::Real(x) => ser.serialize_f64(*x),
            ParamValue::Complex(z) => ser.serialize_str(&format!("{},{}", z.re, z.im)),
        }
    }
}

impl<'de> Deserialize<'de> for ParamValue {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(x) => Ok(ParamValue::Real(x)),
            Raw::Text(t) => match t.split_once(',') {
                Some((re, im)) => {
                    let re = re.trim().parse().map_err(serde::de::Error::custom)?;
                    let im = im.trim().parse().map_err(serde::de::Error::custom)?;
                    Ok(ParamValue::Complex(Complex64::new(re, im)))
                }
                // csv hands numbers over as text
                None => t.trim().parse().map(ParamValue::Real).map_err(serde::de::Error::custom),
            },
        }
    }
}

/// One row of a sweep. `marked` flags the automatically chosen M in the
/// m-landscape; `scaled_remainder` is |z^{N+1} R_N| in the z-scaling mode.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub param_name: String,
    pub param_value: ParamValue,
    pub engine: String,
    pub value_re: f64,
    pub value_im: f64,
    pub abs_err_vs_reference: Option<f64>,
    pub est_err: f64,
    pub n_terms: usize,
    pub m_terms: usize,
    pub marked: bool,
    pub scaled_remainder: Option<f64>,
}

/// One coefficient in a `coeffs` dump.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffRow {
    pub n: usize,
    pub re: f64,
    pub im: f64,
    pub method: String,
}

pub fn to_json_line<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string(x).expect("records serialize to JSON");
    s.push('\n');
    s
}

pub fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("records serialize to CSV");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("CSV is UTF-8")
}

pub fn from_csv<T: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<T>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().collect()
}

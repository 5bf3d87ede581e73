//! Amplitude file ingestion.

use crate::CliError;
use serde_json::Value;
use triprep::Complex64;

/// Relative slack on the input norm before it is rejected.
pub const EPS_INPUT: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct InputSpec {
    pub amplitudes: Vec<Complex64>,
    pub relabel: Option<Vec<usize>>,
    /// Set when the amplitudes were rescaled to unit norm.
    pub renormalized: bool,
}

impl InputSpec {
    pub fn qubits(&self) -> usize {
        self.amplitudes.len().trailing_zeros() as usize
    }
}

fn number(v: &Value) -> Result<f64, CliError> {
    v.as_f64()
        .ok_or_else(|| CliError::Parse(format!("expected a number, found `{v}`")))
}

fn pair(v: &Value) -> Result<Complex64, CliError> {
    match v {
        Value::Array(xs) if xs.len() == 2 => Ok(Complex64::new(number(&xs[0])?, number(&xs[1])?)),
        Value::Number(_) => Ok(Complex64::new(number(v)?, 0.0)),
        _ => Err(CliError::Parse(format!("expected [re, im], found `{v}`"))),
    }
}

fn parse_json(text: &str) -> Result<(Vec<Complex64>, Option<String>), CliError> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("invalid JSON: {e}")))?;
    let amps = v
        .get("amplitudes")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Parse("missing \"amplitudes\" array".into()))?
        .iter()
        .map(pair)
        .collect::<Result<Vec<_>, _>>()?;
    let relabel = match v.get("relabel") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(o) => {
            return Err(CliError::Parse(format!(
                "\"relabel\" must be a string, found `{o}`"
            )))
        }
    };
    Ok((amps, relabel))
}

fn parse_text(text: &str) -> Result<Vec<Complex64>, CliError> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
        .map(|tok| {
            let (re, im) = tok.split_once(',').unwrap_or((tok, "0"));
            let f = |s: &str| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::Parse(format!("bad amplitude `{tok}`")))
            };
            Ok(Complex64::new(f(re)?, f(im)?))
        })
        .collect()
}

/// Parses a permutation such as `CAB` or `2,0,1`; entry k names the old qubit placed at position k.
pub fn parse_perm(s: &str, n: usize) -> Result<Vec<usize>, CliError> {
    let s = s.trim();
    let idx: Vec<usize> = if s.chars().all(|c| c.is_ascii_alphabetic()) {
        s.chars()
            .map(|c| match c.to_ascii_uppercase() {
                'A' => Ok(0),
                'B' => Ok(1),
                'C' => Ok(2),
                o => Err(CliError::Parse(format!("unknown qubit label `{o}`"))),
            })
            .collect::<Result<_, _>>()?
    } else {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Parse(format!("bad permutation `{s}`")))
            })
            .collect::<Result<_, _>>()?
    };
    let mut seen = vec![false; n];
    let ok = idx.len() == n
        && idx
            .iter()
            .all(|&k| k < n && !std::mem::replace(&mut seen[k], true));
    if ok {
        Ok(idx)
    } else {
        Err(CliError::Parse(format!(
            "`{s}` is not a permutation of {n} qubits"
        )))
    }
}

/// Moves old qubit `perm[k]` to position `k`; qubit 0 is the most significant bit.
pub fn permute(amps: &[Complex64], perm: &[usize]) -> Vec<Complex64> {
    let n = perm.len();
    let bit = |j: usize, q: usize| (j >> (n - 1 - q)) & 1;
    (0..amps.len())
        .map(|jn| {
            let jo = (0..n).fold(0, |acc, k| acc | bit(jn, k) << (n - 1 - perm[k]));
            amps[jo]
        })
        .collect()
}

/// Parses JSON or plain text amplitudes and applies the normalization policy.
pub fn parse_input(text: &str) -> Result<InputSpec, CliError> {
    let (amps, relabel) = if text.trim_start().starts_with('{') {
        parse_json(text)?
    } else {
        (parse_text(text)?, None)
    };
    if ![2, 4, 8].contains(&amps.len()) {
        return Err(CliError::Parse(format!(
            "expected 2, 4 or 8 amplitudes, found {}",
            amps.len()
        )));
    }
    if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
        return Err(CliError::Parse("amplitudes must be finite".into()));
    }
    let n = amps.len().trailing_zeros() as usize;
    let relabel = relabel.map(|s| parse_perm(&s, n)).transpose()?;
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > EPS_INPUT {
        return Err(CliError::Normalization(format!(
            "state norm {norm} differs from 1 by more than {EPS_INPUT}"
        )));
    }
    let renormalized = (norm - 1.0).abs() > 1e-12;
    let amplitudes = amps.into_iter().map(|a| a / norm).collect();
    Ok(InputSpec {
        amplitudes,
        relabel,
        renormalized,
    })
}

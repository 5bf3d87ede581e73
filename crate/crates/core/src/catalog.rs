//! Registry of named states from the four restricted classes.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{apply_gate_matrix, hadamard, mat2_mul, pauli_x, Mat2};
use crate::random::{class_amplitudes, StateKind};
use crate::synth::{synth_r1, synth_r2, synth_r3, synth_r4, zyz, Circuit};
use crate::{State3, Tolerances64};

/// Restricted class of a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassId {
    R1,
    R2,
    R3,
    R4,
}

impl ClassId {
    pub fn kind(&self) -> StateKind {
        match self {
            ClassId::R1 => StateKind::R1,
            ClassId::R2 => StateKind::R2,
            ClassId::R3 => StateKind::R3,
            ClassId::R4 => StateKind::R4,
        }
    }

    /// Entanglement type of every state in the class.
    pub fn expected_type(&self) -> &'static str {
        self.kind().label().expect("restricted class")
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// Local unitary appended on one qubit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Lu {
    I,
    H,
    X,
    /// `H·X`: X first, then H.
    HX,
}

impl Lu {
    pub fn matrix(&self) -> Mat2<f64> {
        match self {
            Lu::I => crate::linalg::mat2_identity(),
            Lu::H => hadamard(),
            Lu::X => pauli_x(),
            Lu::HX => mat2_mul(&hadamard(), &pauli_x()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Parameters {
    pub r: Vec<f64>,
    pub phi: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub class: ClassId,
    pub parameters: Parameters,
    /// One local unitary per qubit A, B, C.
    pub post_lu: [Lu; 3],
    pub citation_note: String,
}

impl CatalogEntry {
    fn new(
        name: impl Into<String>,
        class: ClassId,
        r: Vec<f64>,
        phi: Vec<f64>,
        note: &str,
    ) -> Self {
        Self {
            name: name.into(),
            class,
            parameters: Parameters { r, phi },
            post_lu: [Lu::I; 3],
            citation_note: note.into(),
        }
    }

    fn with_lu(mut self, lu: [Lu; 3]) -> Self {
        self.post_lu = lu;
        self
    }

    /// Class amplitudes before the local unitaries.
    pub fn class_state(&self) -> State3 {
        class_amplitudes(self.class.kind(), &self.parameters.r, &self.parameters.phi)
    }
}

const BASES: [&str; 19] = [
    "ghz",
    "ghz_type",
    "generalized_ghz",
    "cluster_p3",
    "maximal_slice",
    "type_iv2",
    "type_3b3",
    "w",
    "w_n",
    "w_like",
    "w_class",
    "generalized_w",
    "dicke_d23",
    "ghz_like_pm",
    "graph_k3",
    "phase_flip_code",
    "phase_flip_code_x",
    "decay",
    "perm_symmetric",
];

fn args_f64(args: &[&str]) -> Result<Vec<f64>> {
    args.iter()
        .map(|a| {
            a.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidParameters(format!("`{a}` is not a number")))
        })
        .collect()
}

fn arity(name: &str, args: &[f64], n: usize) -> Result<()> {
    if args.len() == n {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!(
            "{name} takes {n} argument(s), got {}",
            args.len()
        )))
    }
}

fn fmt_args(xs: &[f64]) -> String {
    xs.iter()
        .map(|x| format!("{x}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn build(base: &str, raw: Option<&[&str]>) -> Result<CatalogEntry> {
    use ClassId::*;
    let s = FRAC_1_SQRT_2;
    let third = 1.0 / 3f64.sqrt();
    let plain = |e: CatalogEntry| -> Result<CatalogEntry> {
        match raw {
            Some(a) if !a.is_empty() => Err(Error::InvalidParameters(format!(
                "{base} takes no arguments"
            ))),
            _ => Ok(e),
        }
    };
    let nums = |defaults: &[f64]| -> Result<Vec<f64>> {
        match raw {
            None => Ok(defaults.to_vec()),
            Some(a) => {
                let v = args_f64(a)?;
                arity(base, &v, defaults.len())?;
                Ok(v)
            }
        }
    };
    let x3 = [Lu::X; 3];
    match base {
        "ghz" => plain(CatalogEntry::new(
            "ghz",
            R1,
            vec![s, s],
            vec![0.0, 0.0],
            "GHZ state",
        )),
        "ghz_type" => {
            let v = nums(&[2.0])?;
            let p = v[0];
            if !(p > 0.0 && p.is_finite()) {
                return Err(Error::InvalidParameters("p must be positive".into()));
            }
            let n = (1.0 + p * p).sqrt();
            Ok(CatalogEntry::new(
                format!("ghz_type({})", fmt_args(&v)),
                R1,
                vec![1.0 / n, p / n],
                vec![0.0, 0.0],
                "GHZ-type state",
            ))
        }
        "generalized_ghz" => {
            let v = nums(&[0.4f64.cos(), 0.4f64.sin(), 0.3, 1.1])?;
            Ok(CatalogEntry::new(
                format!("generalized_ghz({})", fmt_args(&v)),
                R1,
                vec![v[0], v[1]],
                vec![v[2], v[3]],
                "GHZ-like state; generalized GHZ state",
            ))
        }
        "cluster_p3" => plain(
            CatalogEntry::new(
                "cluster_p3",
                R1,
                vec![s, s],
                vec![0.0, 0.0],
                "Cluster state; graph state P3",
            )
            .with_lu([Lu::H, Lu::I, Lu::H]),
        ),
        "maximal_slice" => {
            let v = nums(&[s, s])?;
            Ok(CatalogEntry::new(
                format!("maximal_slice({})", fmt_args(&v)),
                R2,
                vec![s, v[0] * s, v[1] * s],
                vec![0.0; 3],
                "Maximal slice state",
            ))
        }
        "type_iv2" => {
            let v = nums(&[0.5, 0.5, s, 0.0, PI / 3.0, -PI / 4.0])?;
            Ok(CatalogEntry::new(
                format!("type_iv2({})", fmt_args(&v)),
                R2,
                v[..3].to_vec(),
                v[3..].to_vec(),
                "Type IV'' state",
            ))
        }
        "type_3b3" => {
            let v = nums(&[0.6, 0.64, 0.48])?;
            Ok(CatalogEntry::new(
                format!("type_3b3({})", fmt_args(&v)),
                R2,
                v,
                vec![0.0; 3],
                "Type 3b-3 state",
            ))
        }
        "w" => plain(CatalogEntry::new(
            "w",
            R3,
            vec![third; 3],
            vec![0.0; 3],
            "W state; Dicke state D(1,3)",
        )),
        "w_n" => {
            let v = nums(&[2.0])?;
            let n = v[0];
            if !(n >= 1.0 && n.fract() == 0.0 && n.is_finite()) {
                return Err(Error::InvalidParameters(
                    "n must be a positive integer".into(),
                ));
            }
            let d = (2.0 * n + 2.0).sqrt();
            Ok(CatalogEntry::new(
                format!("w_n({n})"),
                R3,
                vec![s, n.sqrt() / d, 1.0 / d],
                vec![0.0; 3],
                "W_n state",
            ))
        }
        "w_like" => {
            let v = nums(&[0.7, 0.6, 0.15f64.sqrt()])?;
            if !(v[0] >= v[1] && v[1] >= v[2]) {
                return Err(Error::InvalidParameters(
                    "w_like expects q0 >= q1 >= q2".into(),
                ));
            }
            Ok(CatalogEntry::new(
                format!("w_like({})", fmt_args(&v)),
                R3,
                v,
                vec![0.0; 3],
                "W-like state",
            ))
        }
        "w_class" => plain(CatalogEntry::new(
            "w_class",
            R3,
            vec![s, 0.5, 0.5],
            vec![0.0; 3],
            "W-class state",
        )),
        "generalized_w" => {
            let v = nums(&[0.5, 0.5, s, 0.2, -1.0, 2.5])?;
            Ok(CatalogEntry::new(
                format!("generalized_w({})", fmt_args(&v)),
                R3,
                v[..3].to_vec(),
                v[3..].to_vec(),
                "Generalized W state; W-like state",
            ))
        }
        "dicke_d23" => plain(
            CatalogEntry::new(
                "dicke_d23",
                R3,
                vec![third; 3],
                vec![0.0; 3],
                "Dicke state D(2,3); cluster Werner state",
            )
            .with_lu(x3),
        ),
        "ghz_like_pm" => {
            let signs: Vec<f64> = match raw {
                None => vec![1.0; 3],
                Some(a) => {
                    let v = a
                        .iter()
                        .map(|t| match t.trim() {
                            "+" | "+1" | "1" => Ok(1.0),
                            "-" | "-1" => Ok(-1.0),
                            o => Err(Error::InvalidParameters(format!("`{o}` is not a sign"))),
                        })
                        .collect::<Result<Vec<_>>>()?;
                    arity(base, &v, 3)?;
                    v
                }
            };
            let tag: Vec<&str> = signs
                .iter()
                .map(|&x| if x > 0.0 { "+" } else { "-" })
                .collect();
            let mut phi = vec![0.0];
            phi.extend(signs.iter().map(|&x| if x > 0.0 { 0.0 } else { PI }));
            Ok(CatalogEntry::new(
                format!("ghz_like_pm({})", tag.join(",")),
                R4,
                vec![0.5; 4],
                phi,
                "GHZ-like state",
            ))
        }
        "graph_k3" => plain(
            CatalogEntry::new(
                "graph_k3",
                R4,
                vec![0.5; 4],
                vec![PI, 0.0, 0.0, 0.0],
                "Graph state K3",
            )
            .with_lu([Lu::HX; 3]),
        ),
        "phase_flip_code" => plain(CatalogEntry::new(
            "phase_flip_code",
            R4,
            vec![0.5; 4],
            vec![0.0; 4],
            "Phase-flip code",
        )),
        "phase_flip_code_x" => plain(
            CatalogEntry::new(
                "phase_flip_code_x",
                R4,
                vec![0.5; 4],
                vec![0.0; 4],
                "Phase-flip code",
            )
            .with_lu(x3),
        ),
        "decay" => {
            let t = 1.0 / (2.0 * 3f64.sqrt());
            plain(
                CatalogEntry::new(
                    "decay",
                    R4,
                    vec![3f64.sqrt() / 2.0, t, t, t],
                    vec![0.0; 4],
                    "Decay state",
                )
                .with_lu(x3),
            )
        }
        "perm_symmetric" => {
            let t = 1.0 / 6f64.sqrt();
            plain(
                CatalogEntry::new(
                    "perm_symmetric",
                    R4,
                    vec![s, t, t, t],
                    vec![0.0, PI, 0.0, 0.0],
                    "Permutation-symmetric state",
                )
                .with_lu(x3),
            )
        }
        _ => unreachable!("base names are checked by the caller"),
    }
}

/// Looks up `name` or `name(arg, ...)`; parameterized entries fall back to defaults without arguments.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let name = name.trim();
    let (base, args) = match name.split_once('(') {
        Some((b, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(|| {
                Error::InvalidParameters(format!("unbalanced parentheses in `{name}`"))
            })?;
            let args: Vec<&str> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner.split(',').collect()
            };
            (b.trim(), Some(args))
        }
        None => (name, None),
    };
    let base_lc = base.to_ascii_lowercase();
    if !BASES.contains(&base_lc.as_str()) {
        let mut near: Vec<(usize, &str)> = BASES
            .iter()
            .map(|b| (strsim::levenshtein(&base_lc, b), *b))
            .filter(|(d, b)| *d <= 3 || b.starts_with(&base_lc) || base_lc.starts_with(b))
            .collect();
        near.sort();
        return Err(Error::UnknownName {
            name: name.to_string(),
            suggestions: near
                .into_iter()
                .take(3)
                .map(|(_, b)| b.to_string())
                .collect(),
        });
    }
    build(&base_lc, args.as_deref())
}

/// Every registered entry with default parameters, plus all sign patterns of `ghz_like_pm`.
pub fn list() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for b in BASES {
        if b == "ghz_like_pm" {
            for mask in 0..8u8 {
                let sg: Vec<&str> = (0..3)
                    .map(|k| if mask >> (2 - k) & 1 == 1 { "-" } else { "+" })
                    .collect();
                out.push(build(b, Some(&sg)).expect("valid sign pattern"));
            }
        } else {
            out.push(build(b, None).expect("defaults are valid"));
        }
    }
    out
}

/// JSON array describing `entries`.
pub fn to_json(entries: &[CatalogEntry]) -> String {
    serde_json::to_string_pretty(entries).expect("catalog entries serialize")
}

/// Target amplitudes and preparation circuit of an entry.
pub fn realize(e: &CatalogEntry, tol: &Tolerances64) -> Result<(State3, Circuit<f64>)> {
    let (r, p) = (&e.parameters.r, &e.parameters.phi);
    let mut circuit = match e.class {
        ClassId::R1 if r.len() == 2 && p.len() == 2 => synth_r1([r[0], r[1]], [p[0], p[1]], tol)?,
        ClassId::R2 if r.len() == 3 && p.len() == 3 => {
            synth_r2([r[0], r[1], r[2]], [p[0], p[1], p[2]], tol)?
        }
        ClassId::R3 if r.len() == 3 && p.len() == 3 => {
            synth_r3([r[0], r[1], r[2]], [p[0], p[1], p[2]], tol)?
        }
        ClassId::R4 if r.len() == 4 && p.len() == 4 => {
            synth_r4([r[0], r[1], r[2], r[3]], [p[0], p[1], p[2], p[3]], tol)?
        }
        _ => {
            return Err(Error::InvalidParameters(format!(
                "wrong parameter count for {}",
                e.class
            )))
        }
    };
    let mut target = e.class_state().to_vec();
    for (q, lu) in e.post_lu.iter().enumerate() {
        if *lu == Lu::I {
            continue;
        }
        let m = lu.matrix();
        circuit.append_mapped(&zyz(&m, tol)?, &[q]);
        target = apply_gate_matrix(&m, q, &target)?;
    }
    let mut out = [num_complex::Complex::new(0.0, 0.0); 8];
    out.copy_from_slice(&target);
    Ok((out, circuit))
}

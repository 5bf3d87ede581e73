//! Reference helpers built from dense matrices, independent of the crate's simulator.
#![allow(dead_code, clippy::needless_range_loop)]

use num_complex::Complex64 as C;
use triprep::synth::{Circuit, Gate};

pub type Dense = Vec<Vec<C>>;

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn basis(n: usize, j: usize) -> Vec<C> {
    let mut v = vec![c(0.0, 0.0); n];
    v[j] = c(1.0, 0.0);
    v
}

pub fn identity(n: usize) -> Dense {
    (0..n).map(|i| basis(n, i)).collect()
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn matvec(a: &Dense, v: &[C]) -> Vec<C> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn kron(a: &Dense, b: &Dense) -> Dense {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![c(0.0, 0.0); n * m]; n * m];
    for i in 0..n * m {
        for j in 0..n * m {
            out[i][j] = a[i / m][j / m] * b[i % m][j % m];
        }
    }
    out
}

/// Textbook single-qubit matrices, written out independently.
pub fn gate2(g: &Gate<f64>) -> Dense {
    match *g {
        Gate::Ry { angle, .. } => {
            let (s, co) = (angle / 2.0).sin_cos();
            vec![vec![c(co, 0.0), c(-s, 0.0)], vec![c(s, 0.0), c(co, 0.0)]]
        }
        Gate::Rz { angle, .. } => vec![
            vec![C::from_polar(1.0, -angle / 2.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), C::from_polar(1.0, angle / 2.0)],
        ],
        Gate::P { angle, .. } => vec![
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), C::from_polar(1.0, angle)],
        ],
        Gate::X { .. } => vec![
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ],
        Gate::Cx { .. } => panic!("not a single-qubit gate"),
    }
}

/// Full `2^n × 2^n` matrix of a gate, qubit 0 most significant.
pub fn full_matrix(g: &Gate<f64>, n: usize) -> Dense {
    let dim = 1 << n;
    match *g {
        Gate::Cx { control, target } => {
            let mut m = vec![vec![c(0.0, 0.0); dim]; dim];
            for j in 0..dim {
                let cb = (j >> (n - 1 - control)) & 1;
                let i = if cb == 1 {
                    j ^ (1 << (n - 1 - target))
                } else {
                    j
                };
                m[i][j] = c(1.0, 0.0);
            }
            m
        }
        _ => {
            let (q, _) = g.qubits();
            let mut m = vec![vec![c(1.0, 0.0)]];
            for k in 0..n {
                m = kron(&m, &if k == q { gate2(g) } else { identity(2) });
            }
            m
        }
    }
}

/// Unitary of the whole gate list (without global phase).
pub fn circuit_matrix(gates: &[Gate<f64>], n: usize) -> Dense {
    gates
        .iter()
        .fold(identity(1 << n), |acc, g| matmul(&full_matrix(g, n), &acc))
}

/// Output state on `|0…0⟩` including the global phase.
pub fn run(c: &Circuit<f64>) -> Vec<C> {
    let m = circuit_matrix(&c.gates, c.qubits);
    let ph = C::from_polar(1.0, c.global_phase);
    matvec(&m, &basis(1 << c.qubits, 0))
        .into_iter()
        .map(|x| x * ph)
        .collect()
}

pub fn overlap_sq(a: &[C], b: &[C]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.conj() * y)
        .sum::<C>()
        .norm_sqr()
}

pub fn max_diff(a: &[C], b: &[C]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Largest entry difference after removing the best global phase.
pub fn diff_up_to_phase(a: &[C], b: &[C]) -> f64 {
    let ov: C = a.iter().zip(b).map(|(x, y)| x.conj() * y).sum();
    let ph = if ov.norm() > 0.0 {
        ov / ov.norm()
    } else {
        c(1.0, 0.0)
    };
    a.iter()
        .zip(b)
        .map(|(x, y)| (x * ph - y).norm())
        .fold(0.0, f64::max)
}

pub fn state(amps: &[(usize, C)]) -> [C; 8] {
    let mut s = [c(0.0, 0.0); 8];
    for &(j, a) in amps {
        s[j] = a;
    }
    s
}

pub fn counts(circ: &Circuit<f64>) -> (usize, usize, usize, usize, usize) {
    let m = triprep::sim::metrics(circ);
    (m.n_ry, m.n_rz, m.n_cnot, m.total(), m.depth)
}

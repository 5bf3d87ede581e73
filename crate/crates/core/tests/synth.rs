mod common;

use common::{
    basis, c, circuit_matrix, counts, diff_up_to_phase, matvec, max_diff, overlap_sq, run,
};
use num_complex::Complex64 as C;
use proptest::prelude::*;
use std::f64::consts::{FRAC_1_SQRT_2 as S, FRAC_PI_2, PI};
use triprep::analysis::{classify, schmidt2, EntanglementType, Side};
use triprep::linalg::{kron2, kron24, mat2_scale, Mat2};
use triprep::random::{class_amplitudes, random_class_params, random_state, RngStream, StateKind};
use triprep::scalar::cis;
use triprep::synth::*;
use triprep::{Error, Tolerances};

fn tol() -> Tolerances<f64> {
    Tolerances::standard()
}

fn mat_of(c: &Circuit<f64>) -> Mat2<f64> {
    let m = circuit_matrix(&c.gates, 1);
    mat2_scale(
        &[[m[0][0], m[0][1]], [m[1][0], m[1][1]]],
        cis(c.global_phase),
    )
}

fn mat_diff(a: &Mat2<f64>, b: &Mat2<f64>) -> f64 {
    (0..4)
        .map(|k| (a[k / 2][k % 2] - b[k / 2][k % 2]).norm())
        .fold(0.0, f64::max)
}

#[test]
fn zyz_examples() {
    let id = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
    let z = zyz(&id, &tol()).unwrap();
    assert!(z.gates.is_empty() && z.global_phase == 0.0);

    let x = [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]];
    let z = zyz(&x, &tol()).unwrap();
    assert!(
        matches!(z.gates[..], [Gate::Ry { angle: a, .. }, Gate::Rz { angle: b, .. }]
        if (a - PI).abs() < 1e-15 && (b.abs() - PI).abs() < 1e-15)
    );
    assert!(mat_diff(&mat_of(&z), &x) < 1e-15);

    let h = [[c(S, 0.0), c(S, 0.0)], [c(S, 0.0), c(-S, 0.0)]];
    let z = zyz(&h, &tol()).unwrap();
    assert!(z.gates.len() <= 3);
    assert!(mat_diff(&mat_of(&z), &h) < 1e-12);
}

#[test]
fn prep1_round_trips() {
    let mut rng = RngStream::new(3);
    for _ in 0..200 {
        let t: [C; 2] = rng.unit_vector();
        let circ = prep1(&t, &tol()).unwrap();
        assert!(circ.gates.len() <= 2);
        assert!(max_diff(&run(&circ), &t) < 1e-12);
    }
}

#[test]
fn prep2_examples() {
    let d = [
        c(0.8f64.sqrt(), 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.2f64.sqrt(), 0.0),
    ];
    let circ = prep2(&d, &schmidt2(&d, &tol()).unwrap(), &tol()).unwrap();
    assert_eq!(circ.gates.len(), 2);
    assert!(
        matches!(circ.gates[0], Gate::Ry { q: 0, angle } if (angle - 2.0 * 0.8f64.sqrt().acos()).abs() < 1e-14)
    );
    let mut rng = RngStream::new(5);
    for _ in 0..200 {
        let d: [C; 4] = rng.unit_vector();
        let circ = prep2(&d, &schmidt2(&d, &tol()).unwrap(), &tol()).unwrap();
        assert_eq!(circ.cnot_pairs().count(), 1);
        assert!(1.0 - overlap_sq(&run(&circ), &d) < 1e-10);
        let simple = simplify(&circ, &tol());
        let (ry, rz, _, _, _) = counts(&simple);
        assert!(ry <= 3 && rz <= 3);
    }
}

/// Images of |00⟩ and |10⟩ under a two-qubit gate list.
fn images(gates: &[Gate<f64>]) -> (Vec<C>, Vec<C>) {
    let m = circuit_matrix(gates, 2);
    (matvec(&m, &basis(4, 0)), matvec(&m, &basis(4, 2)))
}

#[test]
fn core_ss_boundaries_and_generic() {
    let (i0, i1) = images(&core_ss(PI / 2.0, 0.0, 0.0));
    assert!(max_diff(&i0, &basis(4, 0)) < 1e-15 && max_diff(&i1, &basis(4, 2)) < 1e-15);
    let (_, i1) = images(&core_ss(0.0, 0.0, 0.0));
    assert!(max_diff(&i1, &basis(4, 3)) < 1e-15);
    let (th, p0, p1) = (0.7, 1.3, -2.1);
    let (i0, i1) = images(&core_ss(th, p0, p1));
    let want = [
        c(0.0, 0.0),
        c(0.0, 0.0),
        C::from_polar(th.sin(), p0),
        C::from_polar(th.cos(), p1),
    ];
    assert!(max_diff(&i0, &basis(4, 0)) < 1e-12 && max_diff(&i1, &want) < 1e-12);
    assert_eq!(
        core_ss(th, p0, p1).iter().filter(|g| g.is_cnot()).count(),
        1
    );
}

#[test]
fn core_se_examples() {
    let (i0, i1) = images(&core_se(PI / 2.0, PI / 2.0, 0.0, 0.0, 0.0));
    assert!(max_diff(&i0, &basis(4, 0)) < 1e-12 && max_diff(&i1, &basis(4, 1)) < 1e-12);
    let (t0, t1) = (0.4, 1.1);
    let (i0, i1) = images(&core_se(t0, t1, 0.0, 0.0, 0.0));
    let want = [0.0, t0.sin() * t1.sin(), t0.cos(), t0.sin() * t1.cos()].map(|x| c(x, 0.0));
    assert!(max_diff(&i0, &basis(4, 0)) < 1e-12 && max_diff(&i1, &want) < 1e-12);
    let (p1, p2, p3) = (0.3, -1.7, 2.9);
    let (_, i1) = images(&core_se(t0, t1, p1, p2, p3));
    let want = [
        c(0.0, 0.0),
        C::from_polar(t0.sin() * t1.sin(), p1),
        C::from_polar(t0.cos(), p2),
        C::from_polar(t0.sin() * t1.cos(), p3),
    ];
    assert!(max_diff(&i1, &want) < 1e-12);
    assert_eq!(
        core_se(t0, t1, p1, p2, p3)
            .iter()
            .filter(|g| g.is_cnot())
            .count(),
        2
    );
}

fn ee_target(t: [f64; 3], p: [f64; 3]) -> (Vec<C>, Vec<C>) {
    let [t0, t1, t2] = t;
    let i0 = vec![
        c(t0.cos(), 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-t0.sin(), 0.0),
    ];
    let e = C::from_polar(t1.cos(), p[0]);
    let i1 = vec![
        e * t0.sin(),
        C::from_polar(t1.sin() * t2.sin(), p[1]),
        C::from_polar(t1.sin() * t2.cos(), p[2]),
        e * t0.cos(),
    ];
    (i0, i1)
}

#[test]
fn core_ee_boundary_and_generic() {
    let t0 = 0.5;
    let (i0, i1) = images(&core_ee(t0, 0.0, 0.8, 0.0, 0.4, -0.2));
    let want1 = [c(t0.sin(), 0.0), c(0.0, 0.0), c(0.0, 0.0), c(t0.cos(), 0.0)];
    assert!(max_diff(&i1, &want1) < 1e-12);
    assert!(max_diff(&i0, &ee_target([t0, 0.0, 0.8], [0.0; 3]).0) < 1e-12);
    let (t, p) = ([0.3, 1.2, 0.6], [2.0, -0.5, 1.4]);
    let (i0, i1) = images(&core_ee(t[0], t[1], t[2], p[0], p[1], p[2]));
    let (w0, w1) = ee_target(t, p);
    assert!(max_diff(&i0, &w0) < 1e-12 && max_diff(&i1, &w1) < 1e-12);
    assert_eq!(
        core_ee(0.3, 1.2, 0.6, 2.0, -0.5, 1.4)
            .iter()
            .filter(|g| g.is_cnot())
            .count(),
        3
    );
}

proptest! {
    #[test]
    fn core_images_are_orthonormal(
        t0 in 0.01f64..1.56, t1 in 0.0f64..FRAC_PI_2, t2 in 0.0f64..FRAC_PI_2,
        p0 in -3.1f64..3.1, p1 in -3.1f64..3.1, p2 in -3.1f64..3.1,
    ) {
        for gates in [core_se(t0, t1.max(0.01), p0, p1, p2), core_ee(t0, t1, t2, p0, p1, p2)] {
            let (a, b) = images(&gates);
            let n = |v: &[C]| v.iter().map(|x| x.norm_sqr()).sum::<f64>();
            let ip: C = a.iter().zip(&b).map(|(x, y)| x.conj() * y).sum();
            prop_assert!((n(&a) - 1.0).abs() < 1e-12 && (n(&b) - 1.0).abs() < 1e-12 && ip.norm() < 1e-12);
        }
    }

    #[test]
    fn core_ee_matches_mapping(
        t0 in 0.01f64..1.56, t1 in 0.0f64..FRAC_PI_2, t2 in 0.0f64..FRAC_PI_2,
        p0 in -3.1f64..3.1, p1 in -3.1f64..3.1, p2 in -3.1f64..3.1,
    ) {
        let (i0, i1) = images(&core_ee(t0, t1, t2, p0, p1, p2));
        let (w0, w1) = ee_target([t0, t1, t2], [p0, p1, p2]);
        prop_assert!(max_diff(&i0, &w0) < 1e-12 && max_diff(&i1, &w1) < 1e-12);
    }

    #[test]
    fn zyz_recomposes(v in prop::array::uniform4(-1.0f64..1.0), chi in -3.2f64..3.2, g in -3.2f64..3.2) {
        let a = C::new(v[0], v[1]);
        let b = C::new(v[2], v[3]);
        let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
        prop_assume!(n > 1e-3);
        let (a, b) = (a / n, b / n);
        let e = C::from_polar(1.0, chi);
        let u = mat2_scale(&[[a, -(b.conj()) * e], [b, a.conj() * e]], cis(g));
        let z = zyz(&u, &tol()).unwrap();
        prop_assert!(z.gates.len() <= 3);
        prop_assert!(mat_diff(&mat_of(&z), &u) < 1e-10);
    }
}

#[test]
fn prep3_ground_state_is_empty() {
    let s = common::state(&[(0, c(1.0, 0.0))]);
    let (_, circ) = compile(&s, &tol()).unwrap();
    assert!(circ.gates.is_empty());
}

#[test]
fn prep3_ghz_after_simplify() {
    let s = common::state(&[(0, c(S, 0.0)), (7, c(S, 0.0))]);
    let (_, circ) = compile(&s, &tol()).unwrap();
    assert_eq!(circ.gates.len(), 3);
    assert!(matches!(circ.gates[0], Gate::Ry { q: 0, angle } if (angle - PI / 2.0).abs() < 1e-15));
    assert_eq!(
        circ.gates[1],
        Gate::Cx {
            control: 0,
            target: 1
        }
    );
    assert_eq!(
        circ.gates[2],
        Gate::Cx {
            control: 1,
            target: 2
        }
    );
    assert!(diff_up_to_phase(&run(&circ), &s) < 1e-15);
}

#[test]
fn prep3_rejects_foreign_classification() {
    let ghz = common::state(&[(0, c(S, 0.0)), (7, c(S, 0.0))]);
    let w = common::state(&[(1, c(0.6, 0.0)), (2, c(0.0, 0.64)), (4, c(0.48, 0.0))]);
    let cl = classify(&ghz, &tol()).unwrap();
    assert!(matches!(
        prep3(&cl, &w, &tol()),
        Err(Error::InconsistentClassification(_))
    ));
}

#[test]
fn prep3_cnot_budget_per_type() {
    let mut rng = RngStream::new(17);
    for kind in StateKind::TYPED {
        for _ in 0..100 {
            let s = random_state::<f64>(kind, &mut rng);
            let (cl, circ) = compile(&s, &tol()).unwrap();
            assert_eq!(circ.cnot_pairs().count(), cl.kind().cnot_budget());
            assert!(circ.adjacency_ok());
            assert!(1.0 - overlap_sq(&run(&circ), &s) < 1e-10);
        }
    }
}

#[test]
fn ss_with_orthogonal_c_pair() {
    let mut rng = RngStream::new(23);
    for _ in 0..100 {
        let alpha: [C; 2] = rng.unit_vector();
        let alpha1 = [-alpha[1].conj(), alpha[0].conj()];
        let (g0, g1): ([C; 2], [C; 2]) = (rng.unit_vector(), rng.unit_vector());
        let d0: [C; 2] = rng.unit_vector();
        let d1 = [-d0[1].conj() * cis(0.4), d0[0].conj() * cis(0.4)];
        let (l0, l1) = (0.8f64.sqrt(), 0.2f64.sqrt());
        let (x, y) = (
            kron24(&alpha, &kron2(&g0, &d0)),
            kron24(&alpha1, &kron2(&g1, &d1)),
        );
        let mut s = [c(0.0, 0.0); 8];
        for j in 0..8 {
            s[j] = x[j] * l0 + y[j] * l1;
        }
        let (cl, circ) = compile(&s, &tol()).unwrap();
        assert_eq!(
            cl.kind(),
            EntanglementType::Ss {
                orthogonal: Side::C
            }
        );
        assert!(circ.adjacency_ok());
        assert_eq!(circ.cnot_pairs().count(), 3);
        assert!(1.0 - overlap_sq(&run(&circ), &s) < 1e-10);
    }
}

#[test]
fn r1_examples() {
    let circ = simplify(&synth_r1([S, S], [0.0, 0.0], &tol()).unwrap(), &tol());
    assert_eq!(counts(&circ), (1, 0, 2, 3, 3));
    let circ = simplify(&synth_r1([S, S], [0.0, PI], &tol()).unwrap(), &tol());
    let want = common::state(&[(0, c(S, 0.0)), (7, c(-S, 0.0))]);
    assert!(diff_up_to_phase(&run(&circ), &want) < 1e-15);
    assert_eq!(counts(&circ).1, 1);
    assert!(matches!(
        synth_r1([1.0, 0.0], [0.0, 0.0], &tol()),
        Err(Error::InvalidParameters(_))
    ));
}

#[test]
fn r2_examples() {
    let t = 1.0 / 3f64.sqrt();
    let circ = synth_r2([t, t, t], [0.0; 3], &tol()).unwrap();
    let want = common::state(&[(0, c(t, 0.0)), (6, c(t, 0.0)), (7, c(t, 0.0))]);
    assert!(max_diff(&run(&circ), &want) < 1e-15);
    assert!(matches!(
        synth_r2([1.0, 0.0, 0.0], [0.0; 3], &tol()),
        Err(Error::InvalidParameters(_))
    ));
    assert!(matches!(
        synth_r2([0.5, 0.5, 0.5], [0.0; 3], &tol()),
        Err(Error::InvalidParameters(_))
    ));
}

#[test]
fn r3_examples() {
    let t = 1.0 / 3f64.sqrt();
    let w = common::state(&[(1, c(t, 0.0)), (2, c(t, 0.0)), (4, c(t, 0.0))]);
    let circ = simplify(&synth_r3([t, t, t], [0.0; 3], &tol()).unwrap(), &tol());
    assert!(1.0 - overlap_sq(&run(&circ), &w) < 1e-14);
    // W_n with n = 1 coincides with the W-class amplitudes (1/√2, 1/2, 1/2).
    let wn = common::state(&[(1, c(S, 0.0)), (2, c(0.5, 0.0)), (4, c(0.5, 0.0))]);
    let circ = synth_r3([S, 1.0 / 2f64.sqrt() / 2f64.sqrt(), 0.5], [0.0; 3], &tol()).unwrap();
    assert!(1.0 - overlap_sq(&run(&circ), &wn) < 1e-14);
}

#[test]
fn r4_examples() {
    let pf = common::state(&[
        (0, c(0.5, 0.0)),
        (3, c(0.5, 0.0)),
        (5, c(0.5, 0.0)),
        (6, c(0.5, 0.0)),
    ]);
    let circ = synth_r4([0.5; 4], [0.0; 4], &tol()).unwrap();
    assert!(diff_up_to_phase(&run(&circ), &pf) < 1e-15);
    let a = 1.0 / (2.0 * 3f64.sqrt());
    let decay = common::state(&[
        (0, c(3f64.sqrt() / 2.0, 0.0)),
        (3, c(a, 0.0)),
        (5, c(a, 0.0)),
        (6, c(a, 0.0)),
    ]);
    let circ = synth_r4([3f64.sqrt() / 2.0, a, a, a], [0.0; 4], &tol()).unwrap();
    assert!(diff_up_to_phase(&run(&circ), &decay) < 1e-15);
    let ghz_like = common::state(&[
        (0, c(0.5, 0.0)),
        (3, c(-0.5, 0.0)),
        (5, c(-0.5, 0.0)),
        (6, c(-0.5, 0.0)),
    ]);
    let circ = synth_r4([0.5; 4], [0.0, PI, PI, PI], &tol()).unwrap();
    assert!(diff_up_to_phase(&run(&circ), &ghz_like) < 1e-15);
}

#[test]
fn class_paths_match_direct_amplitudes() {
    let mut rng = RngStream::new(29);
    for kind in StateKind::CLASSES {
        for _ in 0..200 {
            let (r, p) = random_class_params::<f64>(kind, &mut rng);
            let want = class_amplitudes(kind, &r, &p);
            let circ = match kind {
                StateKind::R1 => synth_r1([r[0], r[1]], [p[0], p[1]], &tol()),
                StateKind::R2 => synth_r2([r[0], r[1], r[2]], [p[0], p[1], p[2]], &tol()),
                StateKind::R3 => synth_r3([r[0], r[1], r[2]], [p[0], p[1], p[2]], &tol()),
                _ => synth_r4([r[0], r[1], r[2], r[3]], [p[0], p[1], p[2], p[3]], &tol()),
            }
            .unwrap();
            // Exact including the global phase.
            assert!(max_diff(&run(&circ), &want) < 1e-12, "{kind:?}");
            assert!(
                max_diff(&run(&simplify(&circ, &tol())), &want) < 1e-12,
                "{kind:?}"
            );
        }
    }
}

#[test]
fn simplify_examples() {
    let mut c1 = Circuit::new(1);
    c1.push(Gate::Rz { q: 0, angle: 0.3 })
        .push(Gate::Rz { q: 0, angle: -0.3 });
    assert!(simplify(&c1, &tol()).gates.is_empty());
    let mut c2 = Circuit::new(1);
    c2.push(Gate::Ry { q: 0, angle: 0.0 });
    assert!(simplify(&c2, &tol()).gates.is_empty());
    let mut rng = RngStream::new(31);
    let s = random_state::<f64>(StateKind::Ee, &mut rng);
    let cl = classify(&s, &tol()).unwrap();
    let circ = simplify(&prep3(&cl, &s, &tol()).unwrap(), &tol());
    assert_eq!(counts(&circ), (8, 7, 4, 19, 10));
}

fn arb_gate() -> impl Strategy<Value = Gate<f64>> {
    prop_oneof![
        (0usize..3, -4.0f64..4.0).prop_map(|(q, angle)| Gate::Ry { q, angle }),
        (0usize..3, -4.0f64..4.0).prop_map(|(q, angle)| Gate::Rz { q, angle }),
        (0usize..3, -4.0f64..4.0).prop_map(|(q, angle)| Gate::P { q, angle }),
        (0usize..3).prop_map(|q| Gate::X { q }),
        prop_oneof![Just((0, 1)), Just((1, 0)), Just((1, 2)), Just((2, 1))]
            .prop_map(|(control, target)| Gate::Cx { control, target }),
    ]
}

proptest! {
    #[test]
    fn simplify_preserves_semantics(gates in prop::collection::vec(arb_gate(), 0..30), g in -3.0f64..3.0) {
        let circ = Circuit { qubits: 3, gates, global_phase: g };
        let s = simplify(&circ, &tol());
        let (a, b) = (run(&circ), run(&s));
        prop_assert!(1.0 - overlap_sq(&a, &b) < 1e-12);
        prop_assert!(max_diff(&a, &b) < 1e-10);
        let cx = |c: &Circuit<f64>| c.gates.iter().filter(|g| g.is_cnot()).copied().collect::<Vec<_>>();
        prop_assert_eq!(cx(&circ), cx(&s));
        let native = s.gates.iter().all(|g| matches!(g, Gate::Ry { .. } | Gate::Rz { .. } | Gate::Cx { .. }));
        prop_assert!(native);
    }
}

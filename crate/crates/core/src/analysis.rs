//! Entanglement analysis across the A|BC cut and five-way classification.

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eig2, inner, kron2, kron24, max_abs_diff, norm, norm_sq, normalized, scale, Mat2,
    Vec2, Vec4, Vec8, C,
};
use crate::scalar::{cr, cz, lit, Real, Tolerances};

pub type ThreeQubitState<T> = Vec8<T>;
pub type TwoQubitState<T> = Vec4<T>;

/// Schmidt decomposition of a two-qubit state, `Σ τ_j b_j ⊗ c_j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchmidtData2<T> {
    /// Descending.
    pub tau: [T; 2],
    pub b: [Vec2<T>; 2],
    pub c: [Vec2<T>; 2],
    /// Set when the closed form was ill-conditioned and the eigen route was used.
    pub used_fallback: bool,
}

/// Schmidt decomposition across A|BC, `Σ λ_j α_j ⊗ β_j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchmidtData3<T> {
    /// Descending, up to the degeneracy threshold when `degenerate_basis_fixed`.
    pub lambda: [T; 2],
    pub alpha: [Vec2<T>; 2],
    pub beta: [Vec4<T>; 2],
    pub degenerate_basis_fixed: bool,
}

/// Factors of a product two-qubit state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProductPair<T> {
    pub b: Vec2<T>,
    pub c: Vec2<T>,
}

impl<T: Real> ProductPair<T> {
    pub fn state(&self) -> Vec4<T> {
        kron2(&self.b, &self.c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    B,
    C,
}

/// Five-way type with its sub-flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EntanglementType {
    FullySeparable,
    Biseparable,
    /// Both BC vectors are products; `orthogonal` names the side whose local pair is orthogonal.
    Ss {
        orthogonal: Side,
    },
    /// One BC vector is a product; `separable` is its index (0 or 1).
    Se {
        separable: usize,
    },
    Ee,
}

impl EntanglementType {
    pub fn name(&self) -> &'static str {
        match self {
            Self::FullySeparable => "FullySeparable",
            Self::Biseparable => "Biseparable",
            Self::Ss { .. } => "SS",
            Self::Se { .. } => "SE",
            Self::Ee => "EE",
        }
    }

    /// Number of CNOTs used by the general synthesis path.
    pub fn cnot_budget(&self) -> usize {
        match self {
            Self::FullySeparable => 0,
            Self::Biseparable => 1,
            Self::Ss { .. } => 2,
            Self::Se { .. } => 3,
            Self::Ee => 4,
        }
    }
}

/// Classification with exactly the structural data its type needs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Classification<T> {
    FullySeparable {
        a: Vec2<T>,
        bc: ProductPair<T>,
    },
    Biseparable {
        a: Vec2<T>,
        bc: Vec4<T>,
        bc_schmidt: SchmidtData2<T>,
        concurrence: T,
    },
    Ss {
        schmidt: SchmidtData3<T>,
        products: [ProductPair<T>; 2],
        orthogonal: Side,
    },
    Se {
        schmidt: SchmidtData3<T>,
        separable: usize,
        product: ProductPair<T>,
        concurrences: [T; 2],
    },
    Ee {
        schmidt: SchmidtData3<T>,
        bc_schmidt: SchmidtData2<T>,
        concurrences: [T; 2],
    },
}

impl<T: Real> Classification<T> {
    pub fn kind(&self) -> EntanglementType {
        match self {
            Self::FullySeparable { .. } => EntanglementType::FullySeparable,
            Self::Biseparable { .. } => EntanglementType::Biseparable,
            Self::Ss { orthogonal, .. } => EntanglementType::Ss {
                orthogonal: *orthogonal,
            },
            Self::Se { separable, .. } => EntanglementType::Se {
                separable: *separable,
            },
            Self::Ee { .. } => EntanglementType::Ee,
        }
    }

    pub fn schmidt3(&self) -> Option<&SchmidtData3<T>> {
        match self {
            Self::Ss { schmidt, .. } | Self::Se { schmidt, .. } | Self::Ee { schmidt, .. } => {
                Some(schmidt)
            }
            _ => None,
        }
    }

    /// Concurrences of the two BC Schmidt vectors, when the state is A|BC entangled.
    pub fn beta_concurrences(&self) -> Option<[T; 2]> {
        match self {
            Self::Ss { .. } => Some([T::zero(); 2]),
            Self::Se { concurrences, .. } | Self::Ee { concurrences, .. } => Some(*concurrences),
            _ => None,
        }
    }

    /// Rebuilds the amplitude vector from the attached structural data.
    pub fn reconstruct(&self) -> ThreeQubitState<T> {
        match self {
            Self::FullySeparable { a, bc } => kron24(a, &bc.state()),
            Self::Biseparable { a, bc_schmidt, .. } => kron24(a, &schmidt2_state(bc_schmidt)),
            Self::Ss {
                schmidt, products, ..
            } => schmidt3_state(schmidt, &[products[0].state(), products[1].state()]),
            Self::Se {
                schmidt,
                separable,
                product,
                ..
            } => {
                let mut beta = schmidt.beta;
                beta[*separable] = product.state();
                schmidt3_state(schmidt, &beta)
            }
            Self::Ee {
                schmidt,
                bc_schmidt,
                ..
            } => schmidt3_state(schmidt, &[schmidt2_state(bc_schmidt), schmidt.beta[1]]),
        }
    }
}

fn schmidt3_state<T: Real>(s: &SchmidtData3<T>, beta: &[Vec4<T>; 2]) -> Vec8<T> {
    let t0 = kron24(&s.alpha[0], &beta[0]);
    let t1 = kron24(&s.alpha[1], &beta[1]);
    let mut out = [cz(); 8];
    for j in 0..8 {
        out[j] = t0[j] * cr(s.lambda[0]) + t1[j] * cr(s.lambda[1]);
    }
    out
}

/// Rebuilds `Σ τ_j b_j ⊗ c_j`.
pub fn schmidt2_state<T: Real>(s: &SchmidtData2<T>) -> Vec4<T> {
    let t0 = kron2(&s.b[0], &s.c[0]);
    let t1 = kron2(&s.b[1], &s.c[1]);
    let mut out = [cz(); 4];
    for j in 0..4 {
        out[j] = t0[j] * cr(s.tau[0]) + t1[j] * cr(s.tau[1]);
    }
    out
}

/// Rebuilds `Σ λ_j α_j ⊗ β_j`.
pub fn schmidt3_reconstruct<T: Real>(s: &SchmidtData3<T>) -> Vec8<T> {
    schmidt3_state(s, &s.beta)
}

pub fn check_normalized<T: Real>(s: &[C<T>], tol: &Tolerances<T>) -> Result<()> {
    let n = norm_sq(s);
    if (n - T::one()).abs() > tol.norm || !n.is_finite() {
        return Err(Error::NotNormalized {
            norm_sq: n.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

fn halves<T: Real>(s: &Vec8<T>) -> (Vec4<T>, Vec4<T>) {
    ([s[0], s[1], s[2], s[3]], [s[4], s[5], s[6], s[7]])
}

/// Cauchy-Schwarz gap `‖u‖‖v‖ - |⟨u,v⟩|` of the two A-halves; zero for A|BC products.
pub fn separability_gap<T: Real>(s: &ThreeQubitState<T>) -> T {
    let (u, v) = halves(s);
    (norm(&u) * norm(&v) - inner(&u, &v).norm()).max(T::zero())
}

/// Splits `s = a ⊗ bc` when the state is a product across A|BC.
pub fn abc_separability<T: Real>(
    s: &ThreeQubitState<T>,
    tol: &Tolerances<T>,
) -> Result<Option<(Vec2<T>, TwoQubitState<T>)>> {
    check_normalized(s, tol)?;
    if separability_gap(s) > tol.sep {
        return Ok(None);
    }
    let (u, v) = halves(s);
    let j = (0..4)
        .max_by(|&x, &y| {
            let wx = s[x].norm_sqr() + s[x + 4].norm_sqr();
            let wy = s[y].norm_sqr() + s[y + 4].norm_sqr();
            wx.partial_cmp(&wy).unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap_or(0);
    let a = normalized(&[s[j], s[j + 4]]);
    let mut bc = [cz(); 4];
    for k in 0..4 {
        bc[k] = a[0].conj() * u[k] + a[1].conj() * v[k];
    }
    Ok(Some((a, normalized(&bc))))
}

/// `2|d0 d3 - d1 d2|`.
pub fn concurrence<T: Real>(d: &TwoQubitState<T>) -> T {
    (d[0] * d[3] - d[1] * d[2]).norm() * lit(2.0)
}

/// `D = d0* d1 + d2* d3`.
pub fn diagonal_coeff<T: Real>(d: &TwoQubitState<T>) -> C<T> {
    d[0].conj() * d[1] + d[2].conj() * d[3]
}

/// Factors a product two-qubit state with the phase chosen so `b ⊗ c = d`.
pub fn bc_product_form<T: Real>(
    d: &TwoQubitState<T>,
    tol: &Tolerances<T>,
) -> Result<ProductPair<T>> {
    let conc = concurrence(d);
    if conc > tol.zero {
        return Err(Error::EntangledInput {
            concurrence: conc.to_f64().unwrap_or(f64::NAN),
        });
    }
    let k = (0..4)
        .max_by(|&x, &y| {
            d[x].norm()
                .partial_cmp(&d[y].norm())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap_or(0);
    let row = k / 2;
    let c = normalized(&[d[2 * row], d[2 * row + 1]]);
    let b = [
        d[0] * c[0].conj() + d[1] * c[1].conj(),
        d[2] * c[0].conj() + d[3] * c[1].conj(),
    ];
    Ok(ProductPair {
        b: normalized(&b),
        c,
    })
}

/// Reduced state of qubit C.
fn rho_c<T: Real>(d: &TwoQubitState<T>) -> Mat2<T> {
    let off = diagonal_coeff(d);
    [
        [cr(d[0].norm_sqr() + d[2].norm_sqr()), off.conj()],
        [off, cr(d[1].norm_sqr() + d[3].norm_sqr())],
    ]
}

/// `M conj(c)` for the coefficient matrix `M = [[d0, d1], [d2, d3]]`.
fn contract_c<T: Real>(d: &TwoQubitState<T>, c: &Vec2<T>) -> Vec2<T> {
    [
        d[0] * c[0].conj() + d[1] * c[1].conj(),
        d[2] * c[0].conj() + d[3] * c[1].conj(),
    ]
}

/// Closed-form two-qubit Schmidt decomposition.
pub fn schmidt2<T: Real>(d: &TwoQubitState<T>, tol: &Tolerances<T>) -> Result<SchmidtData2<T>> {
    let conc = concurrence(d);
    if conc <= tol.zero {
        return Err(Error::SeparableInput);
    }
    let dd = diagonal_coeff(d);
    if dd.norm() <= tol.zero {
        let t = [
            (d[0].norm_sqr() + d[2].norm_sqr()).sqrt(),
            (d[1].norm_sqr() + d[3].norm_sqr()).sqrt(),
        ];
        let b0 = [d[0] / cr(t[0]), d[2] / cr(t[0])];
        let b1 = [d[1] / cr(t[1]), d[3] / cr(t[1])];
        let e0 = crate::linalg::basis2(0);
        let e1 = crate::linalg::basis2(1);
        let out = if t[0] >= t[1] {
            SchmidtData2 {
                tau: t,
                b: [b0, b1],
                c: [e0, e1],
                used_fallback: false,
            }
        } else {
            SchmidtData2 {
                tau: [t[1], t[0]],
                b: [b1, b0],
                c: [e1, e0],
                used_fallback: false,
            }
        };
        return Ok(out);
    }

    let half = lit::<T>(0.5);
    let disc = (T::one() - conc * conc).max(T::zero()).sqrt();
    let t0sq = half * (T::one() + disc);
    // Product form τ0²τ1² = C²/4 avoids cancellation for weakly entangled inputs.
    let t1sq = conc * conc / (lit::<T>(4.0) * t0sq);
    let p00 = d[0].norm_sqr() + d[2].norm_sqr();
    let p11 = d[1].norm_sqr() + d[3].norm_sqr();
    let mut b = [[cz(); 2]; 2];
    let mut c = [[cz(); 2]; 2];
    let mut ok = true;
    for (j, tsq) in [t0sq, t1sq].into_iter().enumerate() {
        let direct = tsq - p00;
        let other = tsq - p11;
        // Both expressions equal B_j; pick the better-conditioned one.
        let bj = if direct.abs() >= other.abs() {
            direct
        } else {
            dd.norm_sqr() / other
        };
        let e = d[0] * dd + d[1] * cr(bj);
        let f = d[2] * dd + d[3] * cr(bj);
        if e.norm_sqr() + f.norm_sqr() < tol.zero * tol.zero {
            ok = false;
            break;
        }
        b[j] = normalized(&[e, f]);
        c[j] = normalized(&[dd.conj(), cr(bj)]);
    }
    if ok {
        return Ok(SchmidtData2 {
            tau: [t0sq.sqrt(), t1sq.sqrt()],
            b,
            c,
            used_fallback: false,
        });
    }
    let eig = hermitian_eig2(&rho_c(d), tol)?;
    for j in 0..2 {
        c[j] = eig.vectors[j];
        b[j] = normalized(&contract_c(d, &c[j]));
    }
    let tau = [norm(&contract_c(d, &c[0])), norm(&contract_c(d, &c[1]))];
    Ok(SchmidtData2 {
        tau,
        b,
        c,
        used_fallback: true,
    })
}

/// Reduced density matrix of qubit A.
pub fn reduced_rho_a<T: Real>(s: &ThreeQubitState<T>) -> Mat2<T> {
    let (u, v) = halves(s);
    let off = inner(&v, &u);
    [[cr(norm_sq(&u)), off], [off.conj(), cr(norm_sq(&v))]]
}

/// Schmidt decomposition across A|BC via the projection identity.
///
/// The weights are taken as the norms of the projections `(⟨α_j| ⊗ I) s`, which
/// equal the square roots of the eigenvalues of `ρ_A` and make the reconstruction
/// exact to rounding.
pub fn schmidt3<T: Real>(s: &ThreeQubitState<T>, tol: &Tolerances<T>) -> Result<SchmidtData3<T>> {
    check_normalized(s, tol)?;
    let eig = hermitian_eig2(&reduced_rho_a(s), tol)?;
    let (u, v) = halves(s);
    let mut lambda = [T::zero(); 2];
    let mut beta = [[cz(); 4]; 2];
    for j in 0..2 {
        let a = eig.vectors[j];
        let mut p = [cz(); 4];
        for k in 0..4 {
            p[k] = a[0].conj() * u[k] + a[1].conj() * v[k];
        }
        lambda[j] = norm(&p);
        beta[j] = if lambda[j] > T::zero() {
            scale(&p, cr(lambda[j].recip()))
        } else {
            p
        };
    }
    if lambda[0].min(lambda[1]) <= tol.zero {
        return Err(Error::SeparableInput);
    }
    Ok(SchmidtData3 {
        lambda,
        alpha: eig.vectors,
        beta,
        degenerate_basis_fixed: eig.degenerate,
    })
}

/// Classifies a normalized three-qubit state.
pub fn classify<T: Real>(s: &ThreeQubitState<T>, tol: &Tolerances<T>) -> Result<Classification<T>> {
    if let Some((a, bc)) = abc_separability(s, tol)? {
        let conc = concurrence(&bc);
        if conc <= tol.zero {
            return Ok(Classification::FullySeparable {
                a,
                bc: bc_product_form(&bc, tol)?,
            });
        }
        let bc_schmidt = schmidt2(&bc, tol)?;
        return Ok(Classification::Biseparable {
            a,
            bc,
            bc_schmidt,
            concurrence: conc,
        });
    }
    let schmidt = schmidt3(s, tol)?;
    let conc = [concurrence(&schmidt.beta[0]), concurrence(&schmidt.beta[1])];
    let sep = [conc[0] <= tol.zero, conc[1] <= tol.zero];
    match sep {
        [true, true] => {
            let products = [
                bc_product_form(&schmidt.beta[0], tol)?,
                bc_product_form(&schmidt.beta[1], tol)?,
            ];
            let ob = inner(&products[0].b, &products[1].b).norm();
            let oc = inner(&products[0].c, &products[1].c).norm();
            let orthogonal = if ob <= oc { Side::B } else { Side::C };
            Ok(Classification::Ss {
                schmidt,
                products,
                orthogonal,
            })
        }
        [true, false] | [false, true] => {
            let separable = if sep[0] { 0 } else { 1 };
            let product = bc_product_form(&schmidt.beta[separable], tol)?;
            Ok(Classification::Se {
                schmidt,
                separable,
                product,
                concurrences: conc,
            })
        }
        [false, false] => {
            let bc_schmidt = schmidt2(&schmidt.beta[0], tol)?;
            Ok(Classification::Ee {
                schmidt,
                bc_schmidt,
                concurrences: conc,
            })
        }
    }
}

/// Largest entrywise deviation between the classification payload and `s`.
pub fn reconstruction_error<T: Real>(c: &Classification<T>, s: &ThreeQubitState<T>) -> T {
    max_abs_diff(&c.reconstruct(), s)
}

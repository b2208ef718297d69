//! Single-input single-output discrete linear systems
//! `x_{n+1} = A x_n + u_n b`, output `c^T x_n`, in exact arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{self, dot, int, interpolate, IntPoly, Matrix, RationalFunction, Scalar};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteSystem {
    a: Matrix,
    b: Vec<Scalar>,
    c: Vec<Scalar>,
    x0: Vec<Scalar>,
}

fn check_len(expected: usize, v: &[Scalar]) -> Result<()> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found: v.len() })
    }
}

impl DiscreteSystem {
    pub fn new(a: Matrix, b: Vec<Scalar>, c: Vec<Scalar>, x0: Vec<Scalar>) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
        }
        let d = a.rows();
        check_len(d, &b)?;
        check_len(d, &c)?;
        check_len(d, &x0)?;
        Ok(DiscreteSystem { a, b, c, x0 })
    }

    pub fn dimension(&self) -> usize {
        self.a.rows()
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &[Scalar] {
        &self.b
    }

    pub fn c(&self) -> &[Scalar] {
        &self.c
    }

    pub fn x0(&self) -> &[Scalar] {
        &self.x0
    }

    pub fn output(&self, state: &[Scalar]) -> Scalar {
        dot(&self.c, state)
    }
}

/// Truncated formal power series `sum_{n < order} coeffs[n] t^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeriesPrefix {
    coeffs: Vec<Scalar>,
}

impl PowerSeriesPrefix {
    /// The first `order` coefficients of `coeffs`, padded with zeros.
    pub fn new(mut coeffs: Vec<Scalar>, order: usize) -> Self {
        coeffs.resize(order, Scalar::zero());
        PowerSeriesPrefix { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Scalar {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }
}

/// Exact trajectory `x_0, ..., x_steps`.
pub fn simulate(sys: &DiscreteSystem, inputs: &[Scalar], steps: usize) -> Result<Vec<Vec<Scalar>>> {
    if inputs.len() < steps {
        return Err(Error::TooShort { needed: steps, got: inputs.len() });
    }
    let mut states = Vec::with_capacity(steps + 1);
    let mut x = sys.x0.clone();
    for u in &inputs[..steps] {
        let mut next = sys.a.mul_vec(&x);
        for (n, b) in next.iter_mut().zip(&sys.b) {
            *n += u * b;
        }
        states.push(core::mem::replace(&mut x, next));
    }
    states.push(x);
    Ok(states)
}

/// `(b, Ab, ..., A^{d-1} b)`.
pub fn controllability_matrix(a: &Matrix, b: &[Scalar]) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    check_len(a.rows(), b)?;
    Ok(crate::control::krylov_columns(a, b, a.rows()))
}

/// Rows `c^T, c^T A, ..., c^T A^{d-1}`.
pub fn observability_matrix(a: &Matrix, c: &[Scalar]) -> Result<Matrix> {
    Ok(controllability_matrix(&a.transpose(), c)?.transpose())
}

pub fn is_controllable(sys: &DiscreteSystem) -> Result<bool> {
    Ok(controllability_matrix(&sys.a, &sys.b)?.rank() == sys.dimension())
}

pub fn is_observable(sys: &DiscreteSystem) -> Result<bool> {
    Ok(observability_matrix(&sys.a, &sys.c)?.rank() == sys.dimension())
}

/// `c^T (I - tA)^{-1} b` as `c^T adj(I - tA) b / det(I - tA)`, unreduced.
///
/// Both polynomials are found by exact evaluation at integer points and
/// interpolation. With fractional data both sides are scaled by the lcm of
/// the coefficient denominators; for integer data the denominator is exactly
/// `det(I - tA)`.
pub fn transfer_function(sys: &DiscreteSystem) -> Result<RationalFunction> {
    let d = sys.dimension();
    let mut den_pts = Vec::with_capacity(d + 1);
    let mut num_pts = Vec::with_capacity(d);
    let mut c = 0i64;
    // det(I - tA) has degree <= d and is 1 at t = 0
    while den_pts.len() < d + 1 || num_pts.len() < d {
        let t = int(c);
        let m = &Matrix::identity(d) - &sys.a.scale(&t);
        let det = m.det()?;
        if den_pts.len() < d + 1 {
            den_pts.push((t.clone(), det.clone()));
        }
        if num_pts.len() < d && !det.is_zero() {
            let x = m.solve(&sys.b)?;
            num_pts.push((t, dot(&sys.c, &x) * det));
        }
        c += 1;
    }
    let den = interpolate(&den_pts);
    let num = interpolate(&num_pts);
    let mut all = den.clone();
    all.extend(num.iter().cloned());
    let (_, lcm) = algebra::clear_denominators(&all);
    let scale = Scalar::from_integer(lcm);
    let to_int = |coeffs: &[Scalar]| {
        let scaled: Vec<Scalar> = coeffs.iter().map(|x| x * &scale).collect();
        algebra::rational_to_int_poly(&scaled)
            .ok_or_else(|| Error::Inconsistency("transfer function scaling failed".into()))
    };
    RationalFunction::new(to_int(&num)?, to_int(&den)?)
}

/// Outcome of comparing a trajectory's generating series with the closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub first_mismatch: Option<usize>,
}

/// Checks `X(t) = (I - tA)^{-1} x_0 + t u(t) (I - tA)^{-1} b` through
/// `t^{order-1}`, using a fresh simulation for the left side.
pub fn generating_identity_check(sys: &DiscreteSystem, inputs: &[Scalar], order: usize) -> Result<IdentityCheck> {
    let steps = order.saturating_sub(1);
    let traj = simulate(sys, inputs, steps)?;
    generating_identity_check_trajectory(sys, inputs, &traj, order)
}

/// As [`generating_identity_check`] but against a caller-supplied trajectory.
///
/// The right side is expanded independently through the Neumann series:
/// the coefficient of `t^n` is `A^n x_0 + sum_{k<n} u_k A^{n-1-k} b`.
pub fn generating_identity_check_trajectory(
    sys: &DiscreteSystem,
    inputs: &[Scalar],
    trajectory: &[Vec<Scalar>],
    order: usize,
) -> Result<IdentityCheck> {
    if trajectory.len() < order {
        return Err(Error::TooShort { needed: order, got: trajectory.len() });
    }
    let u = PowerSeriesPrefix::new(inputs.to_vec(), order);
    let d = sys.dimension();
    let mut pow_x0 = Vec::with_capacity(order);
    let mut pow_b = Vec::with_capacity(order);
    let (mut px, mut pb) = (sys.x0.clone(), sys.b.clone());
    for _ in 0..order {
        let nx = sys.a.mul_vec(&px);
        let nb = sys.a.mul_vec(&pb);
        pow_x0.push(core::mem::replace(&mut px, nx));
        pow_b.push(core::mem::replace(&mut pb, nb));
    }
    for (n, state) in trajectory.iter().take(order).enumerate() {
        let mut rhs = pow_x0[n].clone();
        for k in 0..n {
            let uk = u.coeff(k);
            if uk.is_zero() {
                continue;
            }
            for (r, b) in rhs.iter_mut().zip(&pow_b[n - 1 - k]) {
                *r += &uk * b;
            }
        }
        if rhs.len() != d || &rhs != state {
            return Ok(IdentityCheck { holds: false, first_mismatch: Some(n) });
        }
    }
    Ok(IdentityCheck { holds: true, first_mismatch: None })
}

/// Recovers `x_m` from the `d` outputs `c^T x_m, ..., c^T x_{m+d-1}`, taken
/// with zero input from time `m` on, by solving the observability system.
/// `_start` only labels the window.
pub fn recover_state(sys: &DiscreteSystem, outputs: &[Scalar], _start: usize) -> Result<Vec<Scalar>> {
    let d = sys.dimension();
    check_len(d, outputs)?;
    let obs = observability_matrix(&sys.a, &sys.c)?;
    if obs.rank() < d {
        return Err(Error::Singular);
    }
    obs.solve(outputs)
}

/// `det(I - tA) = t^d phi(1/t)`, as an integer polynomial.
pub fn reversed_char_poly(a: &Matrix) -> Result<IntPoly> {
    Ok(algebra::char_poly(a)?.reversed(a.rows()))
}

/// Zero-input outputs `c^T A^k x` for `k < d`.
pub fn free_outputs(sys: &DiscreteSystem, x: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![];
    let mut cur = x.to_vec();
    for _ in 0..sys.dimension() {
        out.push(sys.output(&cur));
        cur = sys.a.mul_vec(&cur);
    }
    out
}

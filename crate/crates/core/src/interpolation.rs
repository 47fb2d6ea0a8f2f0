//! Lagrange and Hermite interpolation, and the minimal Bezout solution built
//! from interpolation data at the roots of `A` and `B`.

use crate::error::{Error, Result};
use crate::poly::{Polynomial, RootSet};
use crate::scalar::{Real, Scalar};
use crate::sylvester::{degenerate_solution, finish, BezoutSolution, Method, SolveMode};
use crate::tol;
use num_complex::Complex;
use num_traits::{Float, One};

/// Nodes with prescribed derivative values.
///
/// `targets[j][k]` is the value of `p^{(k)}(nodes[j])` for `k < orders[j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct HermiteData<T> {
    pub nodes: Vec<T>,
    pub orders: Vec<usize>,
    pub targets: Vec<Vec<T>>,
}

impl<T: Scalar> HermiteData<T> {
    /// Total number of conditions `L`; the interpolant has degree below `L`.
    pub fn total_order(&self) -> usize {
        self.orders.iter().sum()
    }

    pub fn validate(&self) -> Result<()> {
        if self.nodes.len() != self.orders.len() || self.nodes.len() != self.targets.len() {
            return Err(Error::InvalidHermiteData(format!(
                "{} nodes, {} orders, {} target lists",
                self.nodes.len(),
                self.orders.len(),
                self.targets.len()
            )));
        }
        for (j, (&ord, t)) in self.orders.iter().zip(&self.targets).enumerate() {
            if ord == 0 {
                return Err(Error::InvalidHermiteData(format!("node {j} has order 0")));
            }
            if t.len() != ord {
                return Err(Error::InvalidHermiteData(format!(
                    "node {j} has order {ord} but {} targets",
                    t.len()
                )));
            }
        }
        if self.total_order() == 0 {
            return Err(Error::InvalidHermiteData("no conditions".into()));
        }
        check_distinct(&self.nodes)
    }

    /// Taylor coefficients `y^k / k!` per node.
    fn taylor_targets(&self) -> Vec<Vec<T>> {
        self.targets
            .iter()
            .map(|t| {
                let mut fact = T::one();
                t.iter()
                    .enumerate()
                    .map(|(k, y)| {
                        if k > 0 {
                            fact = fact.clone() * T::from_usize(k);
                        }
                        y.clone() / fact.clone()
                    })
                    .collect()
            })
            .collect()
    }
}

fn check_distinct<T: Scalar>(nodes: &[T]) -> Result<()> {
    let gap = T::Real::tol(tol::CLUSTER_EPS);
    for (i, x) in nodes.iter().enumerate() {
        for y in &nodes[i + 1..] {
            let d = x.clone() - y.clone();
            let same = if T::EXACT { d.is_zero() } else { d.modulus() <= gap };
            if same {
                return Err(Error::DuplicateNodes);
            }
        }
    }
    Ok(())
}

/// The interpolant of degree below `t = nodes.len()`, as
/// `sum_j y_j prod_{i != j} (z - x_i) / (x_j - x_i)`.
pub fn lagrange_interpolate<T: Scalar>(nodes: &[T], targets: &[T]) -> Result<Polynomial<T>> {
    if nodes.len() != targets.len() {
        return Err(Error::InvalidInput(format!(
            "{} nodes but {} targets",
            nodes.len(),
            targets.len()
        )));
    }
    if nodes.is_empty() {
        return Err(Error::EmptyInput);
    }
    check_distinct(nodes)?;
    let mut p = Polynomial::zero();
    for (j, (xj, yj)) in nodes.iter().zip(targets).enumerate() {
        let mut basis = Polynomial::one();
        let mut denom = T::one();
        for (i, xi) in nodes.iter().enumerate() {
            if i != j {
                basis = &basis * &Polynomial::linear(xi.clone());
                denom = denom * (xj.clone() - xi.clone());
            }
        }
        p = &p + &basis.scale(&(yj.clone() / denom));
    }
    Ok(p)
}

/// The unique polynomial of degree below `L` matching all prescribed
/// derivatives.
pub fn hermite_interpolate<T: Scalar>(data: &HermiteData<T>) -> Result<Polynomial<T>> {
    data.validate()?;
    Ok(newton_hermite(&data.nodes, &data.taylor_targets()))
}

/// Splits the interpolant into `p = sum_j p_j`, where `p_j` carries the
/// conditions at node `j` and has vanishing derivatives up to the prescribed
/// order at every other node.
pub fn hermite_decompose<T: Scalar>(data: &HermiteData<T>) -> Result<Vec<Polynomial<T>>> {
    data.validate()?;
    let taylor = data.taylor_targets();
    Ok((0..data.nodes.len())
        .map(|j| newton_hermite(&data.nodes, &isolate(&taylor, j)))
        .collect())
}

fn isolate<T: Scalar>(taylor: &[Vec<T>], j: usize) -> Vec<Vec<T>> {
    taylor
        .iter()
        .enumerate()
        .map(|(i, t)| {
            if i == j {
                t.clone()
            } else {
                vec![T::zero(); t.len()]
            }
        })
        .collect()
}

/// Newton divided differences on the node sequence with repetitions.
///
/// `taylor[j][k]` is the `k`-th Taylor coefficient at `nodes[j]`, which is the
/// divided difference over `k + 1` copies of that node.
fn newton_hermite<T: Scalar>(nodes: &[T], taylor: &[Vec<T>]) -> Polynomial<T> {
    let mut z: Vec<T> = Vec::new();
    let mut owner: Vec<usize> = Vec::new();
    for (j, (x, t)) in nodes.iter().zip(taylor).enumerate() {
        for _ in 0..t.len() {
            z.push(x.clone());
            owner.push(j);
        }
    }
    let n = z.len();
    if n == 0 {
        return Polynomial::zero();
    }
    // column k holds f[z_i .. z_{i+k}] for i = 0..n-k
    let mut col: Vec<T> = (0..n).map(|i| taylor[owner[i]][0].clone()).collect();
    let mut newton = vec![col[0].clone()];
    for k in 1..n {
        let next: Vec<T> = (0..n - k)
            .map(|i| {
                if owner[i] == owner[i + k] {
                    taylor[owner[i]][k].clone()
                } else {
                    (col[i + 1].clone() - col[i].clone()) / (z[i + k].clone() - z[i].clone())
                }
            })
            .collect();
        newton.push(next[0].clone());
        col = next;
    }
    // p = c_0 + (z - z_0)(c_1 + (z - z_1)(c_2 + ...))
    let mut p = Polynomial::constant(newton[n - 1].clone());
    for k in (0..n - 1).rev() {
        p = &(&p * &Polynomial::linear(z[k].clone())) + &Polynomial::constant(newton[k].clone());
    }
    p
}

/// Taylor coefficients at `x` of `1 / q` up to order `count`, from those of `q`.
fn reciprocal_taylor<T: Scalar>(q_taylor: &[T], count: usize) -> Vec<T> {
    let q0 = q_taylor[0].clone();
    let mut out: Vec<T> = Vec::with_capacity(count);
    for k in 0..count {
        if k == 0 {
            out.push(T::one() / q0.clone());
            continue;
        }
        // coefficient k of (1/q) q vanishes: sum_{i<=k} r_i q_{k-i} = 0
        let mut acc = T::zero();
        for (i, r) in out.iter().enumerate() {
            let qk = q_taylor.get(k - i).cloned().unwrap_or_else(T::zero);
            acc = acc + r.clone() * qk;
        }
        out.push(-acc / q0.clone());
    }
    out
}

/// Interpolation targets for `R` at the roots of `B` (or `S` at the roots of
/// `A`): `R (A)` has Taylor expansion `1 + O((z - beta)^nu)` at each root.
fn bezout_targets<T: Scalar>(other: &Polynomial<T>, roots: &RootSet<T>) -> Result<Vec<Vec<T>>> {
    let scale = other.norm_coeff();
    let deg = other.degree_or_zero() as i32;
    roots
        .iter()
        .map(|root| {
            let taylor = other.taylor_at(&root.value);
            let v = taylor.first().cloned().unwrap_or_else(T::zero);
            let vanishes = if T::EXACT {
                v.is_zero()
            } else {
                let grow = root.value.modulus().max(T::Real::one()).powi(deg);
                v.modulus() <= T::Real::tol(tol::DIV_EPS) * scale * grow
            };
            if vanishes {
                return Err(Error::CommonRoots { rcond: None });
            }
            Ok(reciprocal_taylor(&taylor, root.multiplicity))
        })
        .collect()
}

/// Minimal Bezout solution from known roots of `A` and `B`.
///
/// `roots_a` and `roots_b` must list the distinct roots with multiplicities
/// summing to the degrees; a constant polynomial has an empty root set.
pub fn bezout_by_interpolation_with_roots<T: Scalar>(
    a: &Polynomial<T>,
    b: &Polynomial<T>,
    roots_a: &RootSet<T>,
    roots_b: &RootSet<T>,
) -> Result<BezoutSolution<T>> {
    let (r_parts, s_parts) = bezout_parts_with_roots(a, b, roots_a, roots_b)?;
    if let Some(sol) = degenerate_solution(a, b, Method::Interpolation)? {
        return Ok(sol);
    }
    let r = r_parts.iter().fold(Polynomial::zero(), |acc, p| &acc + p);
    let s = s_parts.iter().fold(Polynomial::zero(), |acc, p| &acc + p);
    let mode = if T::EXACT { SolveMode::Exact } else { SolveMode::Approximate };
    Ok(finish(a, b, r, s, Method::Interpolation, mode, None))
}

/// The pieces `R = sum_j R_j` (one per distinct root of `B`) and
/// `S = sum_i S_i` (one per distinct root of `A`).
pub fn bezout_parts_with_roots<T: Scalar>(
    a: &Polynomial<T>,
    b: &Polynomial<T>,
    roots_a: &RootSet<T>,
    roots_b: &RootSet<T>,
) -> Result<(Vec<Polynomial<T>>, Vec<Polynomial<T>>)> {
    if a.is_constant() && b.is_constant() {
        return Err(Error::BothConstant);
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::CommonRoots { rcond: None });
    }
    for (p, roots) in [(a, roots_a), (b, roots_b)] {
        if roots.degree() != p.degree_or_zero() {
            return Err(Error::InvalidInput(format!(
                "root multiplicities sum to {} for a polynomial of degree {}",
                roots.degree(),
                p.degree_or_zero()
            )));
        }
    }
    let parts = |other: &Polynomial<T>, roots: &RootSet<T>| -> Result<Vec<Polynomial<T>>> {
        let taylor = bezout_targets(other, roots)?;
        let nodes: Vec<T> = roots.values().cloned().collect();
        check_distinct(&nodes)?;
        Ok((0..nodes.len())
            .map(|j| newton_hermite(&nodes, &isolate(&taylor, j)))
            .collect())
    };
    Ok((parts(a, roots_b)?, parts(b, roots_a)?))
}

/// Minimal Bezout solution by interpolation, locating the roots numerically.
pub fn bezout_by_interpolation<F: Real>(
    a: &Polynomial<Complex<F>>,
    b: &Polynomial<Complex<F>>,
) -> Result<BezoutSolution<Complex<F>>> {
    if a.is_constant() && b.is_constant() {
        return Err(Error::BothConstant);
    }
    let roots_of = |p: &Polynomial<Complex<F>>| {
        if p.is_constant() {
            Ok(RootSet::new(Vec::new()))
        } else {
            p.roots()
        }
    };
    bezout_by_interpolation_with_roots(a, b, &roots_of(a)?, &roots_of(b)?)
}

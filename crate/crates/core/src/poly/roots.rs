use super::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::{binomial, Real, Scalar};
use crate::tol;
use num_complex::Complex;
use num_traits::{One, Zero};

/// A root together with its multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Root<T> {
    pub value: T,
    pub multiplicity: usize,
}

impl<T> Root<T> {
    pub fn new(value: T, multiplicity: usize) -> Self {
        Root {
            value,
            multiplicity,
        }
    }
}

/// Distinct roots with multiplicities.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct RootSet<T> {
    entries: Vec<Root<T>>,
}

impl<T: Scalar> RootSet<T> {
    pub fn new(entries: Vec<Root<T>>) -> Self {
        RootSet { entries }
    }

    /// Each value once.
    pub fn simple(values: impl IntoIterator<Item = T>) -> Self {
        Self::new(values.into_iter().map(|v| Root::new(v, 1)).collect())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Root<T>> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities.
    pub fn degree(&self) -> usize {
        self.entries.iter().map(|r| r.multiplicity).sum()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.entries.iter().map(|r| r.multiplicity).max().unwrap_or(0)
    }

    pub fn values(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|r| &r.value)
    }

    pub fn entries(&self) -> &[Root<T>] {
        &self.entries
    }
}

impl<T> IntoIterator for RootSet<T> {
    type Item = Root<T>;
    type IntoIter = std::vec::IntoIter<Root<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.into_iter()
    }
}

impl<F: Real> Polynomial<Complex<F>> {
    /// All roots with multiplicities.
    ///
    /// Aberth–Ehrlich iteration produces one approximation per root counted
    /// with multiplicity. Approximations are then grouped: components of the
    /// single-linkage graph at a ladder of radii from `CLUSTER_WIDE` down to
    /// `CLUSTER_EPS` are accepted as one multiple root when the Taylor
    /// coefficients of `p` below the group size vanish at the (Newton
    /// refined) centre; components at `CLUSTER_EPS` are always merged.
    pub fn roots(&self) -> Result<RootSet<Complex<F>>> {
        let deg = match self.degree() {
            Some(d) if d > 0 => d,
            _ => return Err(Error::ConstantPolynomial),
        };
        let coeffs = self.coeffs();
        let zeros_at_origin = coeffs.iter().take_while(|c| c.is_zero()).count();
        let reduced = &coeffs[zeros_at_origin..];

        let mut entries = Vec::new();
        if zeros_at_origin > 0 {
            entries.push(Root::new(Complex::zero(), zeros_at_origin));
        }
        if reduced.len() > 1 {
            let approx = aberth(reduced)?;
            let reduced_poly = Polynomial::new(reduced.to_vec());
            entries.extend(cluster_roots(&reduced_poly, approx));
        }
        debug_assert_eq!(entries.iter().map(|r| r.multiplicity).sum::<usize>(), deg);
        Ok(RootSet::new(entries))
    }
}

/// Simultaneous Aberth–Ehrlich iteration on a polynomial with nonzero
/// constant term.
fn aberth<F: Real>(coeffs: &[Complex<F>]) -> Result<Vec<Complex<F>>> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex<F>> = coeffs.iter().map(|c| *c / lead).collect();
    if n == 1 {
        return Ok(vec![-monic[0]]);
    }
    let radius = F::one()
        + monic[..n]
            .iter()
            .map(|c| c.norm())
            .fold(F::zero(), F::max);
    let offset = F::lit(0.4);
    let mut z: Vec<Complex<F>> = (0..n)
        .map(|k| {
            let theta = F::TAU() * F::lit(k as f64) / F::lit(n as f64) + offset;
            Complex::from_polar(radius, theta)
        })
        .collect();

    let tol_step = F::tol(tol::ROOT_CONVERGENCE);
    let mut frozen = vec![false; n];
    for _ in 0..tol::ROOT_MAX_ITER {
        for k in 0..n {
            if frozen[k] {
                continue;
            }
            let (p, dp) = horner_with_derivative(&monic, z[k]);
            if p.is_zero() {
                frozen[k] = true;
                continue;
            }
            let ratio = p / dp;
            let sum = (0..n)
                .filter(|&j| j != k)
                .fold(Complex::zero(), |acc: Complex<F>, j| {
                    acc + (z[k] - z[j]).inv()
                });
            let step: Complex<F> = ratio / (Complex::<F>::one() - ratio * sum);
            if !(step.re.is_finite() && step.im.is_finite()) {
                // stationary point or coincident iterates: nudge off it
                z[k] = z[k] + Complex::from_polar(tol_step.sqrt() * (F::one() + z[k].norm()), F::lit(1.3) + F::lit(k as f64));
                continue;
            }
            z[k] = z[k] - step;
            if step.norm() <= tol_step * (F::one() + z[k].norm()) {
                frozen[k] = true;
            }
        }
        if frozen.iter().all(|&f| f) {
            break;
        }
    }
    if z.iter().any(|r| !(r.re.is_finite() && r.im.is_finite())) {
        return Err(Error::RootFindingFailed("non-finite iterate".into()));
    }
    Ok(z)
}

fn horner_with_derivative<F: Real>(coeffs: &[Complex<F>], z: Complex<F>) -> (Complex<F>, Complex<F>) {
    let mut p = Complex::zero();
    let mut dp = Complex::zero();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + *c;
    }
    (p, dp)
}

const LADDER: [f64; 5] = [tol::CLUSTER_WIDE, 1e-3, 1e-4, 1e-5, tol::CLUSTER_EPS];

fn cluster_roots<F: Real>(p: &Polynomial<Complex<F>>, approx: Vec<Complex<F>>) -> Vec<Root<Complex<F>>> {
    let mut out = Vec::new();
    let all: Vec<usize> = (0..approx.len()).collect();
    split_cluster(p, &approx, &all, 0, &mut out);
    out
}

fn split_cluster<F: Real>(
    p: &Polynomial<Complex<F>>,
    approx: &[Complex<F>],
    members: &[usize],
    level: usize,
    out: &mut Vec<Root<Complex<F>>>,
) {
    let radius = F::tol(LADDER[level]);
    for component in components(approx, members, radius) {
        let m = component.len();
        let centroid = component
            .iter()
            .fold(Complex::zero(), |acc, &i| acc + approx[i])
            / F::lit(m as f64);
        if m == 1 {
            out.push(Root::new(centroid, 1));
            continue;
        }
        let spread = component
            .iter()
            .map(|&i| (approx[i] - centroid).norm())
            .fold(F::zero(), F::max);
        let centre = refine_multiple_root(p, centroid, m, spread);
        if level + 1 == LADDER.len() || is_multiple_root(p, &centre, m) {
            out.push(Root::new(centre, m));
        } else {
            split_cluster(p, approx, &component, level + 1, out);
        }
    }
}

/// Connected components of the graph linking points closer than
/// `radius * max(1, |z|)`.
fn components<F: Real>(approx: &[Complex<F>], members: &[usize], radius: F) -> Vec<Vec<usize>> {
    let n = members.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for a in 0..n {
        for b in a + 1..n {
            let (za, zb) = (approx[members[a]], approx[members[b]]);
            let scale = F::one().max(za.norm()).max(zb.norm());
            if (za - zb).norm() <= radius * scale {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_slot: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        match root_slot[r] {
            Some(g) => groups[g].push(members[i]),
            None => {
                root_slot[r] = Some(groups.len());
                groups.push(vec![members[i]]);
            }
        }
    }
    groups
}

/// Newton iteration on `p^{(m-1)}`, which has a simple root at an `m`-fold
/// root of `p`. Falls back to the centroid if the iteration wanders off.
fn refine_multiple_root<F: Real>(
    p: &Polynomial<Complex<F>>,
    centroid: Complex<F>,
    m: usize,
    spread: F,
) -> Complex<F> {
    let d = p.derivative(m - 1);
    let dd = d.derivative(1);
    let mut z = centroid;
    let limit = spread.max(F::tol(tol::CLUSTER_EPS)) * F::lit(2.0) + F::epsilon();
    for _ in 0..8 {
        let denom = dd.eval(&z);
        if denom.is_zero() {
            break;
        }
        let step = d.eval(&z) / denom;
        if !(step.re.is_finite() && step.im.is_finite()) {
            break;
        }
        z = z - step;
        if step.norm() <= F::epsilon() * (F::one() + z.norm()) {
            break;
        }
    }
    if (z - centroid).norm() <= limit {
        z
    } else {
        centroid
    }
}

/// `|p^{(k)}(c) / k!|` is at rounding level for every `k < m`.
fn is_multiple_root<F: Real>(p: &Polynomial<Complex<F>>, c: &Complex<F>, m: usize) -> bool {
    let taylor = p.taylor_at(c);
    let r = c.norm();
    let tol = F::tol(tol::MULTIPLICITY_TOL);
    (0..m).all(|k| {
        // bound on |p^{(k)}(c)/k!| from the coefficient moduli
        let scale = p
            .coeffs()
            .iter()
            .enumerate()
            .skip(k)
            .map(|(j, pj)| pj.norm() * binomial::<Complex<F>>(j, k).re * r.powi((j - k) as i32))
            .fold(F::zero(), |a, b| a + b);
        taylor[k].norm() <= tol * scale
    })
}

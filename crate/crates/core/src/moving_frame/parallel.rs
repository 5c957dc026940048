//! The algebraic system for parallel second fundamental form, its exact
//! solution set in ℚ(√3), and the resulting certificate.

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::scalar::{QSqrt3, Rational, Scalar};

use super::connection::gauss_constraint;
use super::poly::{rat, Poly, UPoly, Var, NVARS};

/// The four equations, in `a₁, a₂, a₃` and `e₁(a₂), e₁(a₃)`:
/// ```text
/// ⅔a₂² + ⅓(1 − 2a₃)a₃ = 0
/// ⅔a₂a₃ + ⅓(1 + 2a₃)a₂ = 0
/// 2a₁a₃ + e₁(a₂) = 0
/// −2a₁a₂ + e₁(a₃) = 0
/// ```
pub fn parallel_system() -> [Poly; 4] {
    let v = Poly::var;
    let (a1, a2, a3) = (v(Var::A1), v(Var::A2), v(Var::A3));
    [
        (a2.clone() * a2.clone()).scale(rat(2, 3))
            + ((Poly::int(1) - a3.clone().scale(rat(2, 1))) * a3.clone()).scale(rat(1, 3)),
        (a2.clone() * a3.clone()).scale(rat(2, 3))
            + ((Poly::int(1) + a3.clone().scale(rat(2, 1))) * a2.clone()).scale(rat(1, 3)),
        (a1.clone() * a3).scale(rat(2, 1)) + v(Var::E1A2),
        (a1 * a2).scale(rat(-2, 1)) + v(Var::E1A3),
    ]
}

/// What the derivative equations force on `a₁` along a branch. Isolated
/// solutions make `a₂, a₃` locally constant, so `e₁(a₂) = e₁(a₃) = 0` and
/// the last two equations reduce to `a₁a₃ = a₁a₂ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BranchConstraint {
    A1Free,
    A1Zero,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParallelSolution {
    pub a2: QSqrt3,
    pub a3: QSqrt3,
    pub norm_sq: QSqrt3,
    pub branch: BranchConstraint,
}

impl ParallelSolution {
    fn new(a2: QSqrt3, a3: QSqrt3) -> Self {
        let branch = if a2.is_zero() && a3.is_zero() { BranchConstraint::A1Free } else { BranchConstraint::A1Zero };
        Self { a2, a3, norm_sq: a2 * a2 + a3 * a3, branch }
    }
}

fn sort_solutions(mut v: Vec<ParallelSolution>) -> Vec<ParallelSolution> {
    v.sort_by(|x, y| {
        x.a3.to_f64()
            .partial_cmp(&y.a3.to_f64())
            .unwrap()
            .then(x.a2.to_f64().partial_cmp(&y.a2.to_f64()).unwrap())
    });
    v.dedup_by(|x, y| x.a2 == y.a2 && x.a3 == y.a3);
    v
}

/// Univariate restriction of a polynomial in `a₂, a₃` at a fixed `a₃`.
fn restrict(p: &Poly, a3: QSqrt3) -> UPoly<QSqrt3> {
    let mut vals = [QSqrt3::zero(); NVARS];
    vals[Var::A3.index()] = a3;
    UPoly(p.coefficients_in(Var::A2).iter().map(|c| c.eval(&vals)).collect()).trimmed()
}

fn univariate(p: &Poly, v: Var) -> UPoly<QSqrt3> {
    UPoly(p.coefficients_in(v).iter().map(|c| QSqrt3::from_rational(c.constant_term())).collect()).trimmed()
}

/// Solves the algebraic pair by factoring the second equation as
/// `a₂·(4a₃ + 1)/3` and substituting each factor into the first.
pub fn solve_by_factoring() -> Result<Vec<ParallelSolution>> {
    let [p1, p2, ..] = parallel_system();
    let a2 = Poly::var(Var::A2);
    let cofactor = p2.partial(Var::A2);
    if cofactor.clone() * a2 != p2 || !cofactor.uses_only(&[Var::A3]) || cofactor.degree() != 1 {
        return Err(GeometryError::NonQuadraticRoot("second equation does not factor as a₂·(linear)".into()));
    }
    let mut out = Vec::new();
    // a₂ = 0: the first equation becomes univariate in a₃.
    for r in exact_roots(&univariate(&p1.substitute(Var::A2, Rational::zero()), Var::A3))? {
        out.push(ParallelSolution::new(QSqrt3::zero(), r));
    }
    // Linear factor in a₃.
    let lin = univariate(&cofactor, Var::A3);
    let a3 = -lin.0[0] / lin.0[1];
    for r in exact_roots(&restrict(&p1, a3))? {
        out.push(ParallelSolution::new(r, a3));
    }
    Ok(sort_solutions(out))
}

fn det(m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        0 => Poly::int(1),
        1 => m[0][0].clone(),
        n => (0..n).fold(Poly::zero(), |acc, c| {
            if m[0][c].is_zero() {
                return acc;
            }
            let minor: Vec<Vec<Poly>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, p)| p.clone()).collect())
                .collect();
            let term = m[0][c].clone() * det(&minor);
            if c % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        }),
    }
}

/// Sylvester resultant of `p` and `q` with respect to `v`.
pub fn resultant(p: &Poly, q: &Poly, v: Var) -> Poly {
    let (cp, cq) = (p.coefficients_in(v), q.coefficients_in(v));
    let (m, n) = (cp.len() - 1, cq.len() - 1);
    let size = m + n;
    if size == 0 {
        return Poly::int(1);
    }
    let mut rows = Vec::with_capacity(size);
    for (coeffs, deg, count) in [(&cp, m, n), (&cq, n, m)] {
        for shift in 0..count {
            let mut row = vec![Poly::zero(); size];
            for k in 0..=deg {
                row[shift + k] = coeffs[deg - k].clone();
            }
            rows.push(row);
        }
    }
    det(&rows)
}

fn divisors(n: i128) -> Result<Vec<i128>> {
    let n = n.abs();
    if n > 1_000_000_000 {
        return Err(GeometryError::NonQuadraticRoot(format!("coefficient {n} too large for root search")));
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    Ok(out)
}

/// Rational roots of a polynomial with rational coefficients.
fn rational_roots(p: &UPoly<QSqrt3>) -> Result<Vec<Rational>> {
    let lcm = p.0.iter().fold(1i128, |l, c| l.lcm(c.rational.denom()));
    let ints: Vec<i128> = p.0.iter().map(|c| (c.rational * Rational::from_integer(lcm)).to_integer()).collect();
    let (lead, tail) = (*ints.last().unwrap(), ints[0]);
    let mut out = Vec::new();
    for num in divisors(tail)? {
        for den in divisors(lead)? {
            for sign in [1, -1] {
                let r = Rational::new(sign * num, den);
                if p.eval(QSqrt3::from_rational(r)).is_zero() && !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    Ok(out)
}

/// All real roots in ℚ(√3), without multiplicity. Degrees above two need
/// rational coefficients and enough rational roots to deflate to a
/// quadratic.
pub fn exact_roots(p: &UPoly<QSqrt3>) -> Result<Vec<QSqrt3>> {
    let mut p = p.clone().trimmed();
    if p.is_zero() {
        return Err(GeometryError::NonQuadraticRoot("identically zero polynomial".into()));
    }
    let mut roots = Vec::new();
    while p.0.len() > 1 && p.0[0].is_zero() {
        p.0.remove(0);
        if !roots.contains(&QSqrt3::zero()) {
            roots.push(QSqrt3::zero());
        }
    }
    if p.degree().unwrap() > 2 {
        if !p.0.iter().all(|c| c.is_rational()) {
            return Err(GeometryError::NonQuadraticRoot(format!("degree {} over Q(√3)", p.0.len() - 1)));
        }
        for r in rational_roots(&p)? {
            let r = QSqrt3::from_rational(r);
            while p.degree().unwrap() > 0 && p.eval(r).is_zero() {
                p = p.deflate(r);
            }
            roots.push(r);
        }
    }
    match p.degree().unwrap() {
        0 => {}
        1 => roots.push(-p.0[0] / p.0[1]),
        2 => {
            let (c, b, a) = (p.0[0], p.0[1], p.0[2]);
            let disc = b * b - QSqrt3::from_int(4) * a * c;
            if disc.signum() >= 0 {
                let s = disc
                    .sqrt_exact()
                    .ok_or_else(|| GeometryError::NonQuadraticRoot(format!("sqrt({disc})")))?;
                let two_a = QSqrt3::from_int(2) * a;
                roots.push((-b + s) / two_a);
                roots.push((-b - s) / two_a);
            }
        }
        d => return Err(GeometryError::NonQuadraticRoot(format!("irreducible factor of degree {d}"))),
    }
    let mut out: Vec<QSqrt3> = Vec::new();
    for r in roots {
        if !out.contains(&r) {
            out.push(r);
        }
    }
    Ok(out)
}

/// Generic route: eliminate `a₂` by a resultant, solve for `a₃`, then take
/// common roots of the two restricted equations.
pub fn solve_by_resultant() -> Result<Vec<ParallelSolution>> {
    let [p1, p2, ..] = parallel_system();
    let res = resultant(&p1, &p2, Var::A2);
    if !res.uses_only(&[Var::A3]) {
        return Err(GeometryError::NonQuadraticRoot("resultant is not univariate".into()));
    }
    let mut out = Vec::new();
    for a3 in exact_roots(&univariate(&res, Var::A3))? {
        let (q1, q2) = (restrict(&p1, a3), restrict(&p2, a3));
        let common = match (q1.is_zero(), q2.is_zero()) {
            (true, true) => return Err(GeometryError::NonQuadraticRoot("positive-dimensional solution set".into())),
            (true, false) => q2,
            (false, true) => q1,
            (false, false) => q1.gcd(&q2),
        };
        for a2 in exact_roots(&common)? {
            out.push(ParallelSolution::new(a2, a3));
        }
    }
    Ok(sort_solutions(out))
}

/// Newton's method on the algebraic pair from a grid of starting points.
/// Returns the distinct limits found.
pub fn newton_solutions(grid: usize, radius: f64) -> Vec<(f64, f64)> {
    let f = |a2: f64, a3: f64| {
        [2.0 / 3.0 * a2 * a2 + (1.0 - 2.0 * a3) * a3 / 3.0, 2.0 / 3.0 * a2 * a3 + (1.0 + 2.0 * a3) * a2 / 3.0]
    };
    let jac = |a2: f64, a3: f64| [[4.0 / 3.0 * a2, (1.0 - 4.0 * a3) / 3.0], [(1.0 + 4.0 * a3) / 3.0, 4.0 / 3.0 * a2]];
    let mut found: Vec<(f64, f64)> = Vec::new();
    let n = grid.max(2);
    for i in 0..n {
        for j in 0..n {
            let mut x = -radius + 2.0 * radius * (i as f64 + 0.37) / n as f64;
            let mut y = -radius + 2.0 * radius * (j as f64 + 0.61) / n as f64;
            let mut converged = false;
            for _ in 0..100 {
                let r = f(x, y);
                if r[0].abs().max(r[1].abs()) < 1e-15 {
                    converged = true;
                    break;
                }
                let Some(inv) = crate::linalg::inverse2(jac(x, y)) else { break };
                x -= inv[0][0] * r[0] + inv[0][1] * r[1];
                y -= inv[1][0] * r[0] + inv[1][1] * r[1];
                if !(x.is_finite() && y.is_finite()) {
                    break;
                }
            }
            if converged && !found.iter().any(|(u, v)| (u - x).abs().max((v - y).abs()) < 1e-9) {
                found.push((x, y));
            }
        }
    }
    found.sort_by(|p, q| (p.1, p.0).partial_cmp(&(q.1, q.0)).unwrap());
    found
}

/// Largest distance from a float solution to the nearest exact one, and
/// whether the two sets match one-to-one.
pub fn cross_check(exact: &[ParallelSolution], float: &[(f64, f64)]) -> (f64, bool) {
    let mut worst = 0.0f64;
    for s in exact {
        let d = float
            .iter()
            .map(|(a2, a3)| (a2 - s.a2.to_f64()).abs().max((a3 - s.a3.to_f64()).abs()))
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(d);
    }
    (worst, exact.len() == float.len())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NonexistenceCertificate {
    pub gauss_curvature: String,
    pub required_norm_sq: String,
    pub solutions: Vec<SolutionRecord>,
    pub any_match: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolutionRecord {
    pub a2: String,
    pub a3: String,
    pub norm_sq: String,
    pub branch: BranchConstraint,
}

impl NonexistenceCertificate {
    pub fn witness(&self) -> String {
        let vals: Vec<String> =
            self.solutions.iter().map(|s| format!("({}, {}) -> {}", s.a2, s.a3, s.norm_sq)).collect();
        format!(
            "K = {} needs a2^2 + a3^2 = {}; solutions give {}",
            self.gauss_curvature,
            self.required_norm_sq,
            vals.join(", ")
        )
    }
}

/// For a surface of constant curvature `k` with parallel second fundamental
/// form, compares every solution's `a₂² + a₃²` with [`gauss_constraint`].
pub fn nonexistence_certificate(k: Rational) -> Result<NonexistenceCertificate> {
    let sols = solve_by_resultant()?;
    let target = QSqrt3::from_rational(gauss_constraint(k));
    Ok(NonexistenceCertificate {
        gauss_curvature: k.to_string(),
        required_norm_sq: target.to_string(),
        any_match: sols.iter().any(|s| s.norm_sq == target),
        solutions: sols
            .iter()
            .map(|s| SolutionRecord {
                a2: s.a2.to_string(),
                a3: s.a3.to_string(),
                norm_sq: s.norm_sq.to_string(),
                branch: s.branch,
            })
            .collect(),
    })
}

/// Residuals of the four equations at a solution, with `a₁` free only on
/// the branch that allows it and the derivatives set to zero.
pub fn system_residuals(s: &ParallelSolution, a1: QSqrt3) -> [QSqrt3; 4] {
    let mut vals = [QSqrt3::zero(); NVARS];
    vals[Var::A1.index()] = if s.branch == BranchConstraint::A1Free { a1 } else { QSqrt3::zero() };
    vals[Var::A2.index()] = s.a2;
    vals[Var::A3.index()] = s.a3;
    parallel_system().map(|p| p.eval(&vals))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i128, d: i128) -> QSqrt3 {
        QSqrt3::ratio(n, d)
    }

    fn expected() -> Vec<(QSqrt3, QSqrt3)> {
        vec![
            (QSqrt3::sqrt3_times(-1, 4), q(-1, 4)),
            (QSqrt3::sqrt3_times(1, 4), q(-1, 4)),
            (q(0, 1), q(0, 1)),
            (q(0, 1), q(1, 2)),
        ]
    }

    #[test]
    fn factoring_route() {
        let s = solve_by_factoring().unwrap();
        assert_eq!(s.iter().map(|x| (x.a2, x.a3)).collect::<Vec<_>>(), expected());
    }

    #[test]
    fn resultant_route() {
        let s = solve_by_resultant().unwrap();
        assert_eq!(s.iter().map(|x| (x.a2, x.a3)).collect::<Vec<_>>(), expected());
        assert_eq!(s.iter().filter(|x| x.branch == BranchConstraint::A1Free).count(), 1);
        for x in &s {
            assert!(system_residuals(x, q(5, 7)).iter().all(|r| r.is_zero()));
        }
    }

    #[test]
    fn resultant_of_linear_pair() {
        // x − a3 and x + a3 − 2 meet at a3 = 1.
        let x = Poly::var(Var::A2);
        let y = Poly::var(Var::A3);
        let r = resultant(&(x.clone() - y.clone()), &(x + y - Poly::int(2)), Var::A2);
        assert_eq!(r.substitute(Var::A3, rat(1, 1)), Poly::zero());
        assert_eq!(r.degree(), 1);
    }

    #[test]
    fn newton_agrees() {
        let exact = solve_by_resultant().unwrap();
        let float = newton_solutions(12, 1.5);
        let (d, same) = cross_check(&exact, &float);
        assert!(same, "{float:?}");
        assert!(d < 1e-12, "{d}");
    }

    #[test]
    fn certificate() {
        let c = nonexistence_certificate(rat(-5, 9)).unwrap();
        assert_eq!(c.required_norm_sq, "7/12");
        assert!(!c.any_match);
        let norms: Vec<_> = c.solutions.iter().map(|s| s.norm_sq.as_str()).collect();
        assert_eq!(norms, vec!["1/4", "1/4", "0", "1/4"]);
        // Curvature −1 needs a₂² + a₃² = 1/4, which is attained.
        assert!(nonexistence_certificate(rat(-1, 1)).unwrap().any_match);
    }

    #[test]
    fn quadratic_roots_in_field() {
        // x² − 3 = 0
        let p = UPoly(vec![q(-3, 1), q(0, 1), q(1, 1)]);
        let r = exact_roots(&p).unwrap();
        assert!(r.contains(&QSqrt3::sqrt3()) && r.contains(&-QSqrt3::sqrt3()));
        // x² + 1 has no real roots; x² − 2 leaves the field.
        assert!(exact_roots(&UPoly(vec![q(1, 1), q(0, 1), q(1, 1)])).unwrap().is_empty());
        assert!(exact_roots(&UPoly(vec![q(-2, 1), q(0, 1), q(1, 1)])).is_err());
    }
}

//! Central finite differences with one Richardson level.
//!
//! The base stencils are the 5-point O(h⁴) formulas; combining steps `h`
//! and `h/2` as `(16·D(h/2) − D(h))/15` removes the h⁴ term.

use crate::error::Result;

/// A derivative estimate with the Richardson correction size as an error
/// indicator.
#[derive(Clone, Copy, Debug)]
pub struct Estimate<const N: usize> {
    pub value: [f64; N],
    pub error: f64,
}

fn lin<const N: usize>(terms: &[(f64, &[f64; N])]) -> [f64; N] {
    let mut out = [0.0; N];
    for (w, v) in terms {
        for (o, x) in out.iter_mut().zip(v.iter()) {
            *o += w * x;
        }
    }
    out
}

fn richardson<const N: usize>(coarse: [f64; N], fine: [f64; N]) -> Estimate<N> {
    let value = lin(&[(16.0 / 15.0, &fine), (-1.0 / 15.0, &coarse)]);
    let error = coarse
        .iter()
        .zip(fine.iter())
        .map(|(c, f)| (c - f).abs() / 15.0)
        .fold(0.0, f64::max);
    Estimate { value, error }
}

fn first_5pt<const N: usize>(f: &impl Fn(f64) -> Result<[f64; N]>, x: f64, h: f64) -> Result<[f64; N]> {
    let (p1, m1, p2, m2) = (f(x + h)?, f(x - h)?, f(x + 2.0 * h)?, f(x - 2.0 * h)?);
    let k = 1.0 / (12.0 * h);
    let v = lin(&[(8.0, &p1), (-8.0, &m1), (-1.0, &p2), (1.0, &m2)]);
    Ok(v.map(|x| x * k))
}

fn second_5pt<const N: usize>(f: &impl Fn(f64) -> Result<[f64; N]>, x: f64, h: f64) -> Result<[f64; N]> {
    let (p1, m1, p2, m2, c) = (f(x + h)?, f(x - h)?, f(x + 2.0 * h)?, f(x - 2.0 * h)?, f(x)?);
    let k = 1.0 / (12.0 * h * h);
    let v = lin(&[(16.0, &p1), (16.0, &m1), (-1.0, &p2), (-1.0, &m2), (-30.0, &c)]);
    Ok(v.map(|x| x * k))
}

/// `f′(x)`.
pub fn first<const N: usize>(f: impl Fn(f64) -> Result<[f64; N]>, x: f64, h: f64) -> Result<Estimate<N>> {
    Ok(richardson(first_5pt(&f, x, h)?, first_5pt(&f, x, h / 2.0)?))
}

/// `f″(x)`.
pub fn second<const N: usize>(f: impl Fn(f64) -> Result<[f64; N]>, x: f64, h: f64) -> Result<Estimate<N>> {
    Ok(richardson(second_5pt(&f, x, h)?, second_5pt(&f, x, h / 2.0)?))
}

/// `∂²f/∂s∂t` as the 5-point `t`-derivative of 5-point `s`-derivatives.
pub fn mixed<const N: usize>(
    f: impl Fn(f64, f64) -> Result<[f64; N]>,
    s: f64,
    t: f64,
    h: f64,
) -> Result<Estimate<N>> {
    let at = |h: f64| first_5pt(&|tt: f64| first_5pt(&|ss: f64| f(ss, tt), s, h), t, h);
    Ok(richardson(at(h)?, at(h / 2.0)?))
}

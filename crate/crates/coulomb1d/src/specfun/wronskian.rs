use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{cx, Real};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WronskianEstimate<T> {
    pub value: Complex<T>,
    /// |difference between the two Richardson levels|.
    pub error: T,
}

fn sample<T: Real, F>(f: &F, z: Complex<T>) -> Result<Complex<T>>
where
    F: Fn(Complex<T>) -> Result<Complex<T>>,
{
    let v = f(z)?;
    if cx::is_finite(v) {
        Ok(v)
    } else {
        Err(Error::NonFinite { context: format!("wronskian sample at {}", cx::to_string(z)) })
    }
}

/// Central difference with one Richardson level; returns (estimate, level gap).
pub fn central_derivative<T: Real, F>(f: &F, z: Complex<T>, h: T) -> Result<(Complex<T>, T)>
where
    F: Fn(Complex<T>) -> Result<Complex<T>>,
{
    let two = T::lit(2.0);
    let d = |h: T| -> Result<Complex<T>> { Ok((sample(f, z + h)? - sample(f, z - h)?) / (two * h)) };
    let d1 = d(h)?;
    let d2 = d(h / two)?;
    let est = (d2 * T::lit(4.0) - d1) / T::lit(3.0);
    Ok((est, (d2 - d1).norm()))
}

/// f·g′ − f′·g with derivatives by differences along the real direction.
pub fn numeric_wronskian<T: Real, F, G>(f: F, g: G, z: Complex<T>, h: T) -> Result<WronskianEstimate<T>>
where
    F: Fn(Complex<T>) -> Result<Complex<T>>,
    G: Fn(Complex<T>) -> Result<Complex<T>>,
{
    if !(h > T::zero()) {
        return Err(Error::Domain("numeric_wronskian: h must be positive".into()));
    }
    let fv = sample(&f, z)?;
    let gv = sample(&g, z)?;
    let (fp, ef) = central_derivative(&f, z, h)?;
    let (gp, eg) = central_derivative(&g, z, h)?;
    Ok(WronskianEstimate { value: fv * gp - fp * gv, error: fv.norm() * eg + gv.norm() * ef })
}

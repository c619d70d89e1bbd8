use crate::error::{FluidError, Result};

/// Cell-centered scalar grid. Layout is x-fastest, then y, then z.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    pub nx: usize,
    pub ny: usize,
    pub nz: usize,
    pub data: Vec<f32>,
}

impl ScalarField {
    pub fn zeros(nx: usize, ny: usize, nz: usize) -> Self {
        Self {
            nx,
            ny,
            nz,
            data: vec![0.0; nx * ny * nz],
        }
    }

    pub fn constant(nx: usize, ny: usize, nz: usize, value: f32) -> Self {
        Self {
            nx,
            ny,
            nz,
            data: vec![value; nx * ny * nz],
        }
    }

    pub fn from_fn(nx: usize, ny: usize, nz: usize, mut f: impl FnMut(usize, usize, usize) -> f32) -> Self {
        let mut data = Vec::with_capacity(nx * ny * nz);
        for z in 0..nz {
            for y in 0..ny {
                for x in 0..nx {
                    data.push(f(x, y, z));
                }
            }
        }
        Self { nx, ny, nz, data }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.nx, self.ny, self.nz)
    }

    #[inline]
    pub fn idx(&self, x: usize, y: usize, z: usize) -> usize {
        x + self.nx * (y + self.ny * z)
    }

    #[inline]
    pub fn at(&self, x: usize, y: usize, z: usize) -> f32 {
        self.data[self.idx(x, y, z)]
    }

    #[inline]
    pub fn at_mut(&mut self, x: usize, y: usize, z: usize) -> &mut f32 {
        let i = self.idx(x, y, z);
        &mut self.data[i]
    }

    /// Trilinear sample at a position in cell units; the center of cell
    /// (i,j,k) sits at (i+0.5, j+0.5, k+0.5). Outside positions clamp to
    /// the boundary values.
    pub fn sample(&self, px: f32, py: f32, pz: f32) -> f32 {
        trilinear(&self.data, self.nx, self.ny, self.nz, px - 0.5, py - 0.5, pz - 0.5)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn max_abs(&self) -> f32 {
        self.data.iter().fold(0.0f32, |m, v| m.max(v.abs()))
    }

    pub fn clamp_min(&mut self, lo: f32) {
        for v in &mut self.data {
            if *v < lo {
                *v = lo;
            }
        }
    }

    /// Mean of all cells, accumulated in f64.
    pub fn mean(&self) -> f64 {
        if self.data.is_empty() {
            return 0.0;
        }
        self.data.iter().map(|&v| v as f64).sum::<f64>() / self.data.len() as f64
    }

    pub fn check_same_dims(&self, other: &ScalarField, context: &'static str) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(FluidError::DimensionMismatch {
                context,
                expected: self.dims(),
                got: other.dims(),
            });
        }
        Ok(())
    }
}

/// MAC-staggered velocity field over an nx*ny*nz cell grid: u on x-faces
/// (nx+1, ny, nz), v on y-faces (nx, ny+1, nz), w on z-faces (nx, ny, nz+1).
/// Units are cells per time-unit; displacement per step is velocity * dt.
#[derive(Debug, Clone, PartialEq)]
pub struct StaggeredVelocityField {
    pub nx: usize,
    pub ny: usize,
    pub nz: usize,
    pub u: Vec<f32>,
    pub v: Vec<f32>,
    pub w: Vec<f32>,
}

impl StaggeredVelocityField {
    pub fn zeros(nx: usize, ny: usize, nz: usize) -> Self {
        Self {
            nx,
            ny,
            nz,
            u: vec![0.0; (nx + 1) * ny * nz],
            v: vec![0.0; nx * (ny + 1) * nz],
            w: vec![0.0; nx * ny * (nz + 1)],
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.nx, self.ny, self.nz)
    }

    #[inline]
    pub fn uidx(&self, x: usize, y: usize, z: usize) -> usize {
        x + (self.nx + 1) * (y + self.ny * z)
    }

    #[inline]
    pub fn vidx(&self, x: usize, y: usize, z: usize) -> usize {
        x + self.nx * (y + (self.ny + 1) * z)
    }

    #[inline]
    pub fn widx(&self, x: usize, y: usize, z: usize) -> usize {
        x + self.nx * (y + self.ny * z)
    }

    /// Interpolated velocity vector at a position in cell units.
    pub fn sample(&self, px: f32, py: f32, pz: f32) -> (f32, f32, f32) {
        let u = trilinear(&self.u, self.nx + 1, self.ny, self.nz, px, py - 0.5, pz - 0.5);
        let v = trilinear(&self.v, self.nx, self.ny + 1, self.nz, px - 0.5, py, pz - 0.5);
        let w = trilinear(&self.w, self.nx, self.ny, self.nz + 1, px - 0.5, py - 0.5, pz);
        (u, v, w)
    }

    pub fn is_finite(&self) -> bool {
        self.u.iter().chain(&self.v).chain(&self.w).all(|x| x.is_finite())
    }

    pub fn max_abs(&self) -> f32 {
        self.u
            .iter()
            .chain(&self.v)
            .chain(&self.w)
            .fold(0.0f32, |m, x| m.max(x.abs()))
    }

    /// Zero the wall-normal face components (closed-box boundary).
    pub fn enforce_closed_box(&mut self) {
        let (nx, ny, nz) = (self.nx, self.ny, self.nz);
        for z in 0..nz {
            for y in 0..ny {
                let a = self.uidx(0, y, z);
                let b = self.uidx(nx, y, z);
                self.u[a] = 0.0;
                self.u[b] = 0.0;
            }
        }
        for z in 0..nz {
            for x in 0..nx {
                let a = self.vidx(x, 0, z);
                let b = self.vidx(x, ny, z);
                self.v[a] = 0.0;
                self.v[b] = 0.0;
            }
        }
        for y in 0..ny {
            for x in 0..nx {
                let a = self.widx(x, y, 0);
                let b = self.widx(x, y, nz);
                self.w[a] = 0.0;
                self.w[b] = 0.0;
            }
        }
    }

    /// Discrete divergence of cell (x,y,z): net outflow across its six faces.
    #[inline]
    pub fn divergence_at(&self, x: usize, y: usize, z: usize) -> f64 {
        let du = self.u[self.uidx(x + 1, y, z)] as f64 - self.u[self.uidx(x, y, z)] as f64;
        let dv = self.v[self.vidx(x, y + 1, z)] as f64 - self.v[self.vidx(x, y, z)] as f64;
        let dw = self.w[self.widx(x, y, z + 1)] as f64 - self.w[self.widx(x, y, z)] as f64;
        du + dv + dw
    }

    pub fn max_abs_divergence(&self) -> f64 {
        let mut m = 0.0f64;
        for z in 0..self.nz {
            for y in 0..self.ny {
                for x in 0..self.nx {
                    m = m.max(self.divergence_at(x, y, z).abs());
                }
            }
        }
        m
    }

    pub fn check_same_dims(&self, other: &StaggeredVelocityField, context: &'static str) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(FluidError::DimensionMismatch {
                context,
                expected: self.dims(),
                got: other.dims(),
            });
        }
        Ok(())
    }
}

/// Clamped trilinear interpolation on a lattice where sample (i,j,k) sits at
/// coordinate (i,j,k). Positions outside clamp to the border samples.
pub(crate) fn trilinear(data: &[f32], nx: usize, ny: usize, nz: usize, x: f32, y: f32, z: f32) -> f32 {
    let (i0, fx) = cell_weight(x, nx);
    let (j0, fy) = cell_weight(y, ny);
    let (k0, fz) = cell_weight(z, nz);
    let i1 = (i0 + 1).min(nx - 1);
    let j1 = (j0 + 1).min(ny - 1);
    let k1 = (k0 + 1).min(nz - 1);
    let at = |i: usize, j: usize, k: usize| data[i + nx * (j + ny * k)];
    let lerp = |a: f32, b: f32, t: f32| a + (b - a) * t;
    let c00 = lerp(at(i0, j0, k0), at(i1, j0, k0), fx);
    let c10 = lerp(at(i0, j1, k0), at(i1, j1, k0), fx);
    let c01 = lerp(at(i0, j0, k1), at(i1, j0, k1), fx);
    let c11 = lerp(at(i0, j1, k1), at(i1, j1, k1), fx);
    lerp(lerp(c00, c10, fy), lerp(c01, c11, fy), fz)
}

/// Base index and fractional weight for clamped interpolation along one axis.
#[inline]
pub(crate) fn cell_weight(p: f32, n: usize) -> (usize, f32) {
    if n == 1 {
        return (0, 0.0);
    }
    let max = (n - 1) as f32;
    let q = p.clamp(0.0, max);
    let mut i = q.floor() as usize;
    if i >= n - 1 {
        i = n - 2;
    }
    (i, q - i as f32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trilinear_reproduces_lattice_values() {
        let f = ScalarField::from_fn(4, 3, 2, |x, y, z| (x + 10 * y + 100 * z) as f32);
        for z in 0..2 {
            for y in 0..3 {
                for x in 0..4 {
                    let got = f.sample(x as f32 + 0.5, y as f32 + 0.5, z as f32 + 0.5);
                    assert_eq!(got, f.at(x, y, z));
                }
            }
        }
    }

    #[test]
    fn trilinear_clamps_outside() {
        let f = ScalarField::from_fn(4, 4, 4, |x, _, _| x as f32);
        assert_eq!(f.sample(-5.0, 2.0, 2.0), 0.0);
        assert_eq!(f.sample(50.0, 2.0, 2.0), 3.0);
    }

    #[test]
    fn trilinear_is_linear_along_axis() {
        let f = ScalarField::from_fn(8, 2, 2, |x, _, _| x as f32);
        // Position 3.25 in cell units is lattice coordinate 2.75.
        let got = f.sample(3.25, 1.0, 1.0);
        assert!((got - 2.75).abs() < 1e-6);
    }

    #[test]
    fn divergence_of_zero_field_is_zero() {
        let v = StaggeredVelocityField::zeros(4, 4, 4);
        assert_eq!(v.max_abs_divergence(), 0.0);
    }
}

//! Colon kernels of the parameter multiplications, the submodule they
//! span on top of the parameter ideal, and the saturated variant built
//! from torsion of the one-parameter quotients. Everything here is a
//! degreewise subspace computation inside the graded ring; dimensions
//! are the only outputs the rest of the workspace consumes.
//!
//! All subspaces live in the monomial coordinates of a fixed `R_i`,
//! pulled back from the quotients they conceptually belong to. Pulling
//! back keeps every operation a plain subspace sum or preimage, and the
//! pullback always contains the ideal slice, so quotient dimensions
//! fall out by subtraction.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lsop::ThetaContext;
use crate::subspace::Subspace;

impl ThetaContext {
    /// Elements of degree i that the j-th parameter multiplies into
    /// the ideal generated by the other parameters: the degree-i piece
    /// of the colon of that ideal by the j-th parameter, pulled back
    /// to ring coordinates. Always contains the other parameters'
    /// ideal slice.
    pub fn colon_kernel(&mut self, j: usize, i: usize) -> Arc<Subspace> {
        let mask = self.mask_without(j);
        self.sat_lift(mask, j, i, 1)
    }

    /// Degree-i piece of the parameter ideal enlarged by every colon
    /// kernel.
    pub fn sigma_slice(&mut self, i: usize) -> Subspace {
        let mut s = (*self.ideal_slice(self.full_mask(), i)).clone();
        for j in 1..=self.d() {
            s = s.sum(self.field, &self.colon_kernel(j, i));
        }
        s
    }

    /// Codimension of the enlarged slice: the reduced Hilbert function
    /// in degree i.
    pub fn h_sigma(&mut self, i: usize) -> i64 {
        self.hilbert(i) - self.sigma_slice(i).dim() as i64
    }

    /// Degrees 0 through d.
    pub fn h_sigma_vector(&mut self) -> Vec<i64> {
        (0..=self.d()).map(|i| self.h_sigma(i)).collect()
    }

    /// Degree-i elements sent into the masked parameters' ideal by the
    /// `steps`-th power of the j-th parameter, which must lie outside
    /// the mask. Step 0 is that ideal's own slice; each further step is
    /// one preimage under the multiplication map, so the chain is
    /// increasing in `steps`.
    fn sat_lift(&mut self, mask: u32, j: usize, i: usize, steps: u32) -> Arc<Subspace> {
        debug_assert_eq!(mask & (1 << (j - 1)), 0);
        if let Some(s) = self.sat_cache.get(&(mask, j, i, steps)) {
            return Arc::clone(s);
        }
        let result = if steps == 0 {
            self.ideal_slice(mask, i)
        } else {
            let target = self.sat_lift(mask, j, i + 1, steps - 1);
            let images = self.mult_images(j, i);
            let domain = self.ring_dim_at(i);
            Arc::new(target.preimage(self.field, domain, &images))
        };
        self.sat_cache
            .insert((mask, j, i, steps), Arc::clone(&result));
        result
    }

    /// Stable end of the power chain of the parameter `aux` over the
    /// masked ideal in degree i. The chain must stop growing because
    /// the torsion it fills up is finite-length; a chain still growing
    /// at exponent d+2 signals a bug or a badly degenerate parameter
    /// choice and is reported as an error.
    fn stable_sat(&mut self, mask: u32, aux: usize, i: usize) -> Result<Arc<Subspace>> {
        let cap = (self.d() + 2) as u32;
        let mut prev = self.sat_lift(mask, aux, i, 0);
        for n in 1..=cap {
            let next = self.sat_lift(mask, aux, i, n);
            debug_assert!(next.contains_subspace(self.field, &prev));
            if next.dim() == prev.dim() {
                return Ok(next);
            }
            prev = next;
        }
        Err(Error::SaturationDivergence(cap))
    }

    /// Degree-i torsion of the j-th parameter acting on the quotient
    /// by the others, pulled back to ring coordinates.
    pub fn saturation_kernel(&mut self, j: usize, i: usize) -> Result<Arc<Subspace>> {
        let mask = self.mask_without(j);
        self.stable_sat(mask, j, i)
    }

    /// Dimension of the degree-i torsion of the quotient by all
    /// parameters but the j-th (the saturation kernel modulo the ideal
    /// slice it contains).
    pub fn m0_dim(&mut self, j: usize, i: usize) -> Result<usize> {
        let mask = self.mask_without(j);
        self.slice_torsion_dim(mask, j, i)
    }

    /// Degree-i torsion dimension of the quotient by any proper subset
    /// of the parameters, selected by `mask`. Because the torsion
    /// submodule is killed by a power of the irrelevant ideal while
    /// the quotient modulo its torsion admits some parameter outside
    /// the mask as a nonzerodivisor, saturating by the single
    /// parameter `aux` outside the mask already captures all of it.
    pub fn slice_torsion_dim(&mut self, mask: u32, aux: usize, i: usize) -> Result<usize> {
        let stable = self.stable_sat(mask, aux, i)?;
        let base = self.ideal_slice(mask, i);
        Ok(stable.dim() - base.dim())
    }

    /// Degree-i piece of the parameter ideal enlarged by every
    /// parameter's saturation kernel instead of its colon kernel.
    /// Contains the sigma slice, because one application of the
    /// parameter is the first step of the power chain.
    pub fn tau_slice(&mut self, i: usize) -> Result<Subspace> {
        let mut s = (*self.ideal_slice(self.full_mask(), i)).clone();
        for j in 1..=self.d() {
            let w = self.saturation_kernel(j, i)?;
            s = s.sum(self.field, &w);
        }
        Ok(s)
    }

    /// Codimension of the saturated slice. Experimental: reported and
    /// compared, never asserted against a closed form.
    pub fn h_tau(&mut self, i: usize) -> Result<i64> {
        Ok(self.hilbert(i) - self.tau_slice(i)?.dim() as i64)
    }

    /// Degrees 0 through d.
    pub fn h_tau_vector(&mut self) -> Result<Vec<i64>> {
        (0..=self.d()).map(|i| self.h_tau(i)).collect()
    }
}

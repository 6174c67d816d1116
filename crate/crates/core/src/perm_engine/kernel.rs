//! Interchangeable ways of computing the label image `π(d, σ)(L)`.
//!
//! Every kernel must agree with [`MixedRadix`] wherever it claims support; the
//! specialised ones exist as independent cross-checks and for speed on the
//! shapes they cover.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::index_map::{digits_into, from_digits};
use crate::partitions::Dims;
use crate::perm_engine::{LabelPerm, SubsystemPerm};

pub trait LabelKernel: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn supports(&self, d: &Dims, sigma: &SubsystemPerm) -> bool;

    /// Image of `label`. Callers guarantee `supports(d, sigma)` and `label < N`.
    fn image(&self, label: usize, d: &Dims, sigma: &SubsystemPerm) -> usize;

    fn label_perm(&self, d: &Dims, sigma: &SubsystemPerm) -> Result<LabelPerm> {
        if !self.supports(d, sigma) {
            return Err(Error::domain(format!(
                "kernel {} does not handle shape {d} with permutation {sigma}",
                self.name()
            )));
        }
        let image = (0..d.n()).map(|l| self.image(l, d, sigma)).collect();
        Ok(LabelPerm::from_images_unchecked(image))
    }
}

/// General kernel: split into digits, move digit `i` to slot `σ(i)`, read back
/// in the permuted shape.
pub struct MixedRadix;

impl MixedRadix {
    /// Whole image table with one scratch buffer.
    pub fn table(d: &Dims, sigma: &SubsystemPerm) -> Vec<usize> {
        let k = d.k();
        let target: Vec<usize> = {
            let inv = sigma.inverse();
            (0..k).map(|r| d.entries()[inv.apply(r)]).collect()
        };
        let mut digits = vec![0; k];
        let mut moved = vec![0; k];
        (0..d.n())
            .map(|l| {
                digits_into(l, d.entries(), &mut digits);
                for (i, &x) in digits.iter().enumerate() {
                    moved[sigma.apply(i)] = x;
                }
                from_digits(&moved, &target)
            })
            .collect()
    }
}

impl LabelKernel for MixedRadix {
    fn name(&self) -> &'static str {
        "mixed-radix"
    }

    fn description(&self) -> &'static str {
        "digit permutation in mixed radix; any shape and permutation"
    }

    fn supports(&self, d: &Dims, sigma: &SubsystemPerm) -> bool {
        d.k() == sigma.k()
    }

    fn image(&self, label: usize, d: &Dims, sigma: &SubsystemPerm) -> usize {
        let k = d.k();
        let mut digits = vec![0; k];
        digits_into(label, d.entries(), &mut digits);
        let mut moved = vec![0; k];
        let mut target = vec![0; k];
        for i in 0..k {
            moved[sigma.apply(i)] = digits[i];
            target[sigma.apply(i)] = d.entries()[i];
        }
        from_digits(&moved, &target)
    }

    fn label_perm(&self, d: &Dims, sigma: &SubsystemPerm) -> Result<LabelPerm> {
        if !self.supports(d, sigma) {
            return Err(Error::domain(format!(
                "permutation {sigma} acts on {} slots but shape {d} has {}",
                sigma.k(),
                d.k()
            )));
        }
        Ok(LabelPerm::from_images_unchecked(Self::table(d, sigma)))
    }
}

/// `L' = d1·L − ⌊L/d2⌋·(N−1)` for a two-slot exchange.
pub struct ExchangeRecurrence;

/// One step of the exchange recurrence on `[d1, d2]`.
#[inline]
pub fn exchange_step(label: usize, d1: usize, d2: usize) -> usize {
    let n = (d1 * d2) as u128;
    let l = label as u128;
    (d1 as u128 * l - (l / d2 as u128) * (n - 1)) as usize
}

impl LabelKernel for ExchangeRecurrence {
    fn name(&self) -> &'static str {
        "exchange-recurrence"
    }

    fn description(&self) -> &'static str {
        "closed-form recurrence for the exchange of two subsystems"
    }

    fn supports(&self, d: &Dims, sigma: &SubsystemPerm) -> bool {
        d.k() == 2 && sigma.k() == 2 && !sigma.is_identity()
    }

    fn image(&self, label: usize, d: &Dims, _sigma: &SubsystemPerm) -> usize {
        exchange_step(label, d.entries()[0], d.entries()[1])
    }
}

/// Scans the closed-form matrix elements of the exchange operator for the
/// unique nonzero entry in column `L`. Quadratic in `N`; a reference only.
pub struct MatrixElement;

/// Exchange operator entry `[T]_{m,n}` with 1-based `m, n`, as a 0/1 rule on
/// floors and residues.
pub fn exchange_matrix_entry(m: usize, n: usize, d1: usize, d2: usize) -> bool {
    (m - 1) / d1 == (n - 1) % d2 && (n - 1) / d2 == (m - 1) % d1
}

impl LabelKernel for MatrixElement {
    fn name(&self) -> &'static str {
        "matrix-element"
    }

    fn description(&self) -> &'static str {
        "column scan of the closed-form exchange matrix elements"
    }

    fn supports(&self, d: &Dims, sigma: &SubsystemPerm) -> bool {
        d.k() == 2 && sigma.k() == 2 && !sigma.is_identity()
    }

    fn image(&self, label: usize, d: &Dims, _sigma: &SubsystemPerm) -> usize {
        let (d1, d2) = (d.entries()[0], d.entries()[1]);
        (1..=d.n())
            .find(|&m| exchange_matrix_entry(m, label + 1, d1, d2))
            .map(|m| m - 1)
            .expect("every column of a permutation matrix has a nonzero entry")
    }
}

/// The cyclic shift `σ_c` and its inverse behave like an exchange of a merged
/// pair: `π(d, σ_c) = π(N/d_k, d_k)` and `π(d, σ_c⁻¹) = π(d_1, N/d_1)`.
pub struct CyclicReduction;

impl LabelKernel for CyclicReduction {
    fn name(&self) -> &'static str {
        "cyclic-reduction"
    }

    fn description(&self) -> &'static str {
        "cyclic shifts reduced to a two-slot exchange of merged subsystems"
    }

    fn supports(&self, d: &Dims, sigma: &SubsystemPerm) -> bool {
        let k = d.k();
        sigma.k() == k && {
            let c = SubsystemPerm::cyclic_shift(k);
            *sigma == c || *sigma == c.inverse()
        }
    }

    fn image(&self, label: usize, d: &Dims, sigma: &SubsystemPerm) -> usize {
        let k = d.k();
        let n = d.n();
        if *sigma == SubsystemPerm::cyclic_shift(k) {
            let dk = d.entries()[k - 1];
            exchange_step(label, n / dk, dk)
        } else {
            let d1 = d.entries()[0];
            exchange_step(label, d1, n / d1)
        }
    }
}

/// Kernels addressable by name.
pub struct KernelRegistry {
    kernels: Vec<Box<dyn LabelKernel>>,
}

impl KernelRegistry {
    pub fn empty() -> Self {
        KernelRegistry {
            kernels: Vec::new(),
        }
    }

    /// The built-in kernels, general one first.
    pub fn with_builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(MixedRadix)).unwrap();
        r.register(Box::new(ExchangeRecurrence)).unwrap();
        r.register(Box::new(CyclicReduction)).unwrap();
        r.register(Box::new(MatrixElement)).unwrap();
        r
    }

    pub fn register(&mut self, kernel: Box<dyn LabelKernel>) -> Result<()> {
        if self.get(kernel.name()).is_some() {
            return Err(Error::domain(format!(
                "a kernel named {} is already registered",
                kernel.name()
            )));
        }
        self.kernels.push(kernel);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&dyn LabelKernel> {
        self.kernels
            .iter()
            .find(|k| k.name() == name)
            .map(|k| k.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.kernels.iter().map(|k| k.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn LabelKernel> {
        self.kernels.iter().map(|k| k.as_ref())
    }

    /// The named kernel, or the first registered one that supports `(d, σ)`.
    pub fn select(
        &self,
        name: Option<&str>,
        d: &Dims,
        sigma: &SubsystemPerm,
    ) -> Result<&dyn LabelKernel> {
        match name {
            Some(name) => {
                let k = self.get(name).ok_or_else(|| {
                    Error::domain(format!(
                        "unknown kernel {name:?}; available: {}",
                        self.names().join(", ")
                    ))
                })?;
                if !k.supports(d, sigma) {
                    return Err(Error::domain(format!(
                        "kernel {name} does not handle shape {d} with permutation {sigma}"
                    )));
                }
                Ok(k)
            }
            None => self
                .iter()
                .find(|k| k.supports(d, sigma))
                .ok_or_else(|| Error::domain(format!("no kernel handles shape {d} with {sigma}"))),
        }
    }
}

impl Default for KernelRegistry {
    fn default() -> Self {
        Self::with_builtin()
    }
}

/// Process-wide registry of the built-in kernels.
pub fn builtin_kernels() -> &'static KernelRegistry {
    static REG: OnceLock<KernelRegistry> = OnceLock::new();
    REG.get_or_init(KernelRegistry::with_builtin)
}

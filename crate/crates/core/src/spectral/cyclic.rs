use crate::error::{Error, Result};
use crate::partitions::{is_prime, Dims};
use crate::perm_engine::{cycle_decomposition, SubsystemPerm};
use crate::spectral::{spectrum, RootOfUnity};

/// Closed form `⌊(d^k−2)/k⌋ + ((d^k−2) mod k) + 2` for the dimension of the
/// cyclic-shift invariant subspace of `[d; k]`, `k` prime.
pub fn cyclic_sym_dim(d: u64, k: u64) -> Result<u64> {
    if !is_prime(k) {
        return Err(Error::domain(format!("k = {k} is not prime")));
    }
    if d < 2 {
        return Err(Error::domain(format!("subsystem dimension {d} < 2")));
    }
    let dk = u32::try_from(k)
        .ok()
        .and_then(|e| d.checked_pow(e))
        .ok_or_else(|| Error::domain(format!("{d}^{k} overflows")))?;
    let m = dk - 2;
    Ok(m / k + m % k + 2)
}

/// Number of cycles of `π([d; k], σ_c)`, counted directly.
pub fn cyclic_sym_dim_enumerated(d: usize, k: usize) -> Result<usize> {
    let dims = Dims::homogeneous(d, k)?;
    Ok(cycle_decomposition(&dims, &SubsystemPerm::cyclic_shift(k))?.cycles.len())
}

/// `(η, dim S^η)` for the cyclic shift on `d`, ordered by angle.
pub fn cyclic_shift_dims(d: &Dims) -> Result<Vec<(RootOfUnity, usize)>> {
    Ok(spectrum(d, &SubsystemPerm::cyclic_shift(d.k()))?.entries)
}

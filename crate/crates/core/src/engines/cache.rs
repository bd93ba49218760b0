//! Process-wide memo of `b_{n,N}` tables keyed by `(a, N, count)`.

use num_complex::Complex64;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::coeffs::{shifted_coeffs, CoeffMethod, CoefficientTable};
use crate::Result;

type Key = (u64, u64, usize, usize);

fn memo() -> &'static RwLock<HashMap<Key, Arc<CoefficientTable>>> {
    static MEMO: OnceLock<RwLock<HashMap<Key, Arc<CoefficientTable>>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Stable-zeta `b_{n,N}` table, built once per key and shared.
pub fn cached_shifted_coeffs(a: Complex64, n_sub: usize, count: usize) -> Result<Arc<CoefficientTable>> {
    let key = (a.re.to_bits(), a.im.to_bits(), n_sub, count);
    if let Some(t) = memo().read().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(shifted_coeffs(a, n_sub, count, CoeffMethod::StableZeta)?);
    let mut map = memo().write().unwrap_or_else(|e| e.into_inner());
    Ok(Arc::clone(map.entry(key).or_insert(table)))
}

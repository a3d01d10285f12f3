//! JSON result cache for `c_n` enclosures and characteristic polynomial
//! coefficients. Cache hits are re-verified before use: the stored
//! polynomial must reproduce the independent value of `p_n(4/5)` and the
//! closed-form trace, and the stored enclosure must still satisfy the sign
//! conditions on `p_n`.

use crate::bounds::trace_closed_form;
use crate::charpoly::pn_at_four_fifths;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::roots::CnResult;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CacheEntry {
    /// Coefficients of `p_n`, ascending degree, decimal strings.
    charpoly: Vec<String>,
    /// Exact rational endpoints "p/q" of the `c_n` enclosure.
    cn_lo: String,
    cn_hi: String,
    /// Relative digits the enclosure was computed to.
    digits: u32,
    /// Working precision recorded for reproducibility.
    precision_bits: u32,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
struct CacheFile {
    entries: BTreeMap<usize, CacheEntry>,
}

#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    data: CacheFile,
    dirty: bool,
}

fn rational_to_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn rational_from_string(s: &str) -> Result<BigRational> {
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| Error::Cache(format!("malformed rational {s:?}")))?;
    let num = BigInt::from_str(num).map_err(|e| Error::Cache(e.to_string()))?;
    let den = BigInt::from_str(den).map_err(|e| Error::Cache(e.to_string()))?;
    if !den.is_positive() {
        return Err(Error::Cache("rational with nonpositive denominator".into()));
    }
    Ok(BigRational::new(num, den))
}

impl ResultCache {
    /// Load from `path`; a missing file is an empty cache.
    pub fn load(path: &Path) -> Result<Self> {
        let data = match std::fs::read_to_string(path) {
            Ok(text) => serde_json::from_str(&text)
                .map_err(|e| Error::Cache(format!("unreadable cache {path:?}: {e}")))?,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => CacheFile::default(),
            Err(e) => return Err(e.into()),
        };
        Ok(ResultCache {
            path: path.to_path_buf(),
            data,
            dirty: false,
        })
    }

    pub fn save(&mut self) -> Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let text =
            serde_json::to_string_pretty(&self.data).map_err(|e| Error::Cache(e.to_string()))?;
        if let Some(parent) = self.path.parent() {
            if !parent.as_os_str().is_empty() {
                std::fs::create_dir_all(parent)?;
            }
        }
        std::fs::write(&self.path, text)?;
        self.dirty = false;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.data.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.entries.is_empty()
    }

    /// Verified lookup: returns the stored enclosure only if it was
    /// computed to at least `digits` relative digits and its certificate
    /// re-verifies.
    pub fn get_cn(&self, n: usize, digits: u32) -> Option<(BigRational, BigRational)> {
        let entry = self.data.entries.get(&n)?;
        if entry.digits < digits {
            return None;
        }
        self.verify_entry(n, entry).ok()
    }

    fn verify_entry(&self, n: usize, entry: &CacheEntry) -> Result<(BigRational, BigRational)> {
        let coeffs: std::result::Result<Vec<BigInt>, _> =
            entry.charpoly.iter().map(|s| BigInt::from_str(s)).collect();
        let p = IntPolynomial::new(coeffs.map_err(|e| Error::Cache(e.to_string()))?);
        if p.degree() != Some(n) {
            return Err(Error::Cache(format!("stored p_{n} has the wrong degree")));
        }
        // independent spot checks of the stored polynomial
        let at_45 = p.eval_rational(&BigRational::new(BigInt::from(4), BigInt::from(5)));
        if at_45 != pn_at_four_fifths(n)? {
            return Err(Error::Cache(format!("stored p_{n} fails the 4/5 check")));
        }
        if p.coeff(n - 1) != -trace_closed_form(n)? {
            return Err(Error::Cache(format!("stored p_{n} fails the trace check")));
        }
        let cn_lo = rational_from_string(&entry.cn_lo)?;
        let cn_hi = rational_from_string(&entry.cn_hi)?;
        if !(cn_lo.is_positive() && cn_lo <= cn_hi) {
            return Err(Error::Cache(format!("stored c_{n} enclosure inverted")));
        }
        if n == 1 {
            if cn_lo.is_one() && cn_hi.is_one() {
                return Ok((cn_lo, cn_hi));
            }
            return Err(Error::Cache("stored c_1 must be exactly 1".into()));
        }
        // sign conditions on the λ₁ bracket [1/cn_hi, 1/cn_lo]
        let lam_lo = cn_hi.recip();
        let lam_hi = cn_lo.recip();
        let four_fifths = BigRational::new(BigInt::from(4), BigInt::from(5));
        if lam_lo <= four_fifths {
            return Err(Error::Cache(format!(
                "stored λ₁ bracket for n = {n} dips below 4/5"
            )));
        }
        let s_lo = p.sign_at_rational(lam_lo.numer(), lam_lo.denom());
        let s_hi = p.sign_at_rational(lam_hi.numer(), lam_hi.denom());
        let sign_ok = if lam_lo == lam_hi {
            s_lo == 0
        } else {
            s_lo * s_hi < 0 || s_lo == 0 || s_hi == 0
        };
        if !sign_ok {
            return Err(Error::Cache(format!(
                "stored enclosure for n = {n} fails the sign re-verification"
            )));
        }
        Ok((cn_lo, cn_hi))
    }

    pub fn put_cn(&mut self, result: &CnResult, precision_bits: u32) -> Result<()> {
        let n = result.n;
        let keep = match self.data.entries.get(&n) {
            Some(existing) => existing.digits < result.requested_digits,
            None => true,
        };
        if !keep {
            return Ok(());
        }
        let p = crate::charpoly::charpoly_recurrence(n)?;
        let entry = CacheEntry {
            charpoly: p.coeffs().iter().map(|c| c.to_string()).collect(),
            cn_lo: rational_to_string(&result.cn_lo),
            cn_hi: rational_to_string(&result.cn_hi),
            digits: result.requested_digits,
            precision_bits,
        };
        self.data.entries.insert(n, entry);
        self.dirty = true;
        Ok(())
    }
}

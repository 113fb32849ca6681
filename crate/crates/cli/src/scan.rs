//! Range scanner for field overlaps.
//!
//! Candidates are generated through the square condition: (4m+27)(4n+27)
//! must be a square, so with 4m+27 = s a^2 (s squarefree) the partners
//! satisfy 4n+27 = s b^2. Each candidate pair runs a modular pre-filter and
//! then the exact resolvent root test. Work is sharded by m; results merge
//! into a deterministic order.

use rayon::prelude::*;
use splitcubic_core::cubic::form_value;
use splitcubic_core::exact::SpfSieve;
use splitcubic_core::pairing::partner_root;
use splitcubic_core::resolvent::resolvent_int_poly;
use splitcubic_core::roots::{has_rational_root_prefilter, rational_roots};
use splitcubic_core::{Int, Rat};

/// Inclusive scan ranges. The first parameter of an emitted pair lies in
/// `m_range`, the second in `n_range`, oriented so that |4m+27| < |4n+27|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub m_range: (i64, i64),
    pub n_range: (i64, i64),
    pub y_bound: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        // the totally-imaginary survey range
        ScanConfig {
            m_range: (-6, 200_000),
            n_range: (-6, 200_000),
            y_bound: 1000,
        }
    }
}

impl ScanConfig {
    /// The totally-real survey range.
    pub fn real_range() -> Self {
        ScanConfig {
            m_range: (-200_000, -7),
            n_range: (-200_000, -7),
            y_bound: 1000,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        for (lo, hi) in [self.m_range, self.n_range] {
            if lo > hi {
                return Err(format!("empty range {lo}..{hi}"));
            }
        }
        if self.y_bound == 0 {
            return Err("y_bound must be at least 1".into());
        }
        Ok(())
    }
}

/// One matched solution pair across the two orientations of an overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRecord {
    pub m: Int,
    pub n: Int,
    pub x: Int,
    pub y: Int,
    pub lambda: Int,
    pub x2: Int,
    pub y2: Int,
    pub lambda2: Int,
}

/// Partner candidates for m: every n in range with matching squarefree part
/// and |4n+27| > |4m+27|.
pub fn candidate_partners(sieve: &SpfSieve, m: i64, n_lo: i64, n_hi: i64) -> Vec<i64> {
    let d = 4 * m + 27;
    let s = sieve.squarefree_part(d);
    let bound = 4 * n_lo.abs().max(n_hi.abs()) + 27;
    let mut out = Vec::new();
    let mut b = 1i64;
    loop {
        let v = match s.checked_mul(b * b) {
            Some(v) if v.abs() <= bound => v,
            _ => break,
        };
        b += 2;
        if (v - 27) % 4 != 0 {
            continue;
        }
        let n = (v - 27) / 4;
        if n == 0 || n == m || v.abs() <= d.abs() {
            continue;
        }
        if n < n_lo || n > n_hi {
            continue;
        }
        out.push(n);
    }
    out.sort();
    out
}

/// All matched rows for a pair already known (or about to be tested) to
/// overlap; empty when the splitting fields differ.
pub fn pair_records(m: &Int, n: &Int) -> Vec<ScanRecord> {
    let r = resolvent_int_poly(m, n);
    if !has_rational_root_prefilter(&r, 6) {
        return Vec::new();
    }
    let roots = rational_roots(&r).expect("resolvent is nonzero");
    let mut rows: Vec<ScanRecord> = roots
        .iter()
        .map(|u| {
            let (x, y) = (u.numer().clone(), u.denom().clone());
            let lambda = form_value(m, &x, &y);
            let partner: Rat = partner_root(m, n, u).expect("verified resolvent root");
            let (x2, y2) = (partner.numer().clone(), partner.denom().clone());
            let lambda2 = form_value(n, &x2, &y2);
            ScanRecord {
                m: m.clone(),
                n: n.clone(),
                x,
                y,
                lambda,
                x2,
                y2,
                lambda2,
            }
        })
        .collect();
    rows.sort_by(|a, b| (&a.y, &a.x).cmp(&(&b.y, &b.x)));
    rows
}

/// Scan the configured ranges; rows are sorted by (m, n, y, x).
pub fn scan(config: &ScanConfig) -> Vec<ScanRecord> {
    let (m_lo, m_hi) = config.m_range;
    let (n_lo, n_hi) = config.n_range;
    let limit = 4 * [m_lo.abs(), m_hi.abs(), n_lo.abs(), n_hi.abs()]
        .into_iter()
        .max()
        .unwrap()
        + 28;
    let sieve = SpfSieve::new(limit as usize);
    let mut rows: Vec<ScanRecord> = (m_lo..=m_hi)
        .into_par_iter()
        .filter(|&m| m != 0)
        .flat_map_iter(|m| {
            let mi = Int::from(m);
            candidate_partners(&sieve, m, n_lo, n_hi)
                .into_iter()
                .flat_map(move |n| pair_records(&mi, &Int::from(n)))
                .collect::<Vec<_>>()
        })
        .collect();
    rows.sort_by(|a, b| (&a.m, &a.n, &a.y, &a.x).cmp(&(&b.m, &b.n, &b.y, &b.x)));
    rows
}

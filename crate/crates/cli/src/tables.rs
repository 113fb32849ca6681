//! Regression checks: recompute the reference datasets from scratch and
//! diff them cell by cell against the embedded golden rows.

use crate::golden;
use crate::scan::{pair_records, scan, ScanConfig, ScanRecord};
use splitcubic_core::thue::{enumerate_overlaps, integer_overlaps, Excluded};
use splitcubic_core::{Int, Rat};
use std::collections::BTreeSet;

/// Outcome of one table comparison.
#[derive(Debug, Clone)]
pub struct TableReport {
    pub name: &'static str,
    pub matched: usize,
    pub missing: Vec<String>,
    pub extra: Vec<String>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!("{}: ok ({} rows)", self.name, self.matched)
        } else {
            let mut s = format!(
                "{}: MISMATCH ({} matched, {} missing, {} unexpected)",
                self.name,
                self.matched,
                self.missing.len(),
                self.extra.len()
            );
            for r in &self.missing {
                s.push_str(&format!("\n  missing: {r}"));
            }
            for r in &self.extra {
                s.push_str(&format!("\n  unexpected: {r}"));
            }
            s
        }
    }
}

fn diff(name: &'static str, want: BTreeSet<String>, got: BTreeSet<String>) -> TableReport {
    TableReport {
        name,
        matched: want.intersection(&got).count(),
        missing: want.difference(&got).cloned().collect(),
        extra: got.difference(&want).cloned().collect(),
    }
}

fn mark_of(e: Option<Excluded>) -> u8 {
    match e {
        None => golden::MARK_NONE,
        Some(Excluded::NZero) => golden::MARK_N_ZERO,
        Some(Excluded::NCritical) => golden::MARK_N_CRITICAL,
    }
}

/// Recompute every overlap row for -10 <= m <= 5 and compare against the
/// reference blocks, including exclusion markers and rational partners.
pub fn check_enumeration_blocks(y_bound: u64) -> TableReport {
    let mut want = BTreeSet::new();
    for (m, rows) in golden::ENUMERATION_BLOCKS {
        for (lam, x, y, nn, nd, mark) in rows.iter() {
            want.insert(format!(
                "m={m} lambda={lam} x={x} y={y} n={nn}/{nd} mark={mark}"
            ));
        }
    }
    let mut got = BTreeSet::new();
    for (m, _) in golden::ENUMERATION_BLOCKS {
        let rows = enumerate_overlaps(&Int::from(*m), y_bound).expect("m nonzero");
        for r in rows {
            got.insert(format!(
                "m={m} lambda={} x={} y={} n={}/{} mark={}",
                r.solution.lambda,
                r.solution.x,
                r.solution.y,
                r.n.numer(),
                r.n.denom(),
                mark_of(r.excluded)
            ));
        }
    }
    diff("enumeration blocks (-10..5)", want, got)
}

/// The distinct integer pairs induced by the enumeration blocks.
pub fn check_integer_pairs(y_bound: u64) -> TableReport {
    let want: BTreeSet<String> = golden::INTEGER_PAIRS_SMALL_RANGE
        .iter()
        .map(|(m, n)| format!("({m}, {n})"))
        .collect();
    let mut got = BTreeSet::new();
    for (m, _) in golden::ENUMERATION_BLOCKS {
        let mi = Int::from(*m);
        let rows = enumerate_overlaps(&mi, y_bound).expect("m nonzero");
        for n in integer_overlaps(&rows) {
            if n != mi {
                got.insert(format!("({m}, {n})"));
            }
        }
    }
    diff("integer pairs (-10..5)", want, got)
}

fn pair_row_key(r: &ScanRecord) -> String {
    format!(
        "m={} n={} (x,y)=({},{}) lambda={} (x2,y2)=({},{}) lambda2={}",
        r.m, r.n, r.x, r.y, r.lambda, r.x2, r.y2, r.lambda2
    )
}

fn golden_pair_key(r: &golden::PairRow) -> String {
    format!(
        "m={} n={} (x,y)=({},{}) lambda={} (x2,y2)=({},{}) lambda2={}",
        r.0, r.1, r.2, r.3, r.4, r.5, r.6, r.7
    )
}

/// Full survey of the totally imaginary range -6 <= m < n <= 200000.
pub fn check_imaginary_rows() -> TableReport {
    let want: BTreeSet<String> = golden::IMAGINARY_RANGE_ROWS
        .iter()
        .map(golden_pair_key)
        .collect();
    let got: BTreeSet<String> = scan(&ScanConfig::default())
        .iter()
        .map(pair_row_key)
        .collect();
    diff("imaginary-range survey", want, got)
}

/// Survey of the totally real range. The reduced form scans
/// -50000 <= n < m <= -7 and checks the out-of-range reference rows
/// individually through the resolvent test.
pub fn check_real_rows(full: bool) -> TableReport {
    if full {
        let want: BTreeSet<String> = golden::REAL_RANGE_ROWS
            .iter()
            .map(golden_pair_key)
            .collect();
        let got: BTreeSet<String> = scan(&ScanConfig::real_range())
            .iter()
            .map(pair_row_key)
            .collect();
        return diff("real-range survey (full)", want, got);
    }
    const N_CUTOFF: i64 = -50_000;
    let want_in: BTreeSet<String> = golden::REAL_RANGE_ROWS
        .iter()
        .filter(|r| r.1 >= N_CUTOFF)
        .map(golden_pair_key)
        .collect();
    let cfg = ScanConfig {
        m_range: (N_CUTOFF, -7),
        n_range: (N_CUTOFF, -7),
        y_bound: 1000,
    };
    let mut got: BTreeSet<String> = scan(&cfg).iter().map(pair_row_key).collect();

    // the rows beyond the reduced range, pair by pair
    let out_pairs: BTreeSet<(i64, i64)> = golden::REAL_RANGE_ROWS
        .iter()
        .filter(|r| r.1 < N_CUTOFF)
        .map(|r| (r.0, r.1))
        .collect();
    let mut want = want_in;
    for r in golden::REAL_RANGE_ROWS.iter().filter(|r| r.1 < N_CUTOFF) {
        want.insert(golden_pair_key(r));
    }
    for (m, n) in out_pairs {
        for r in pair_records(&Int::from(m), &Int::from(n)) {
            got.insert(pair_row_key(&r));
        }
    }
    diff("real-range survey (reduced + direct checks)", want, got)
}

/// The certificate sweep behind `splitcubic verify`.
pub fn run_verify(m_lo: i64, m_hi: i64, y_bound: u64, out: &mut dyn std::io::Write) -> bool {
    use splitcubic_core::{cubic, identities, resolvent};
    let mut ok = true;
    let mut step = |name: &str, pass: bool, detail: String, out: &mut dyn std::io::Write| {
        writeln!(
            out,
            "verify {name}: {}{}",
            if pass { "ok" } else { "FAIL" },
            if detail.is_empty() {
                String::new()
            } else {
                format!(" ({detail})")
            }
        )
        .ok();
        ok &= pass;
    };

    let ms: Vec<i64> = (m_lo..=m_hi).filter(|&m| m != 0).collect();
    let mut fail: Option<(String, i64)> = None;
    for &m in &ms {
        let mi = Int::from(m);
        for (name, pass) in [
            ("resultant_value", identities::resultant_value_check(&mi)),
            ("bezout_identity", identities::bezout_identity_check(&mi)),
            ("tschirnhausen", cubic::tschirnhausen_check(&mi)),
            (
                "self_resolvent_factor",
                resolvent::self_resolvent_factor_check(&mi),
            ),
        ] {
            if !pass.unwrap_or(false) {
                fail = Some((name.to_string(), m));
                break;
            }
        }
        if fail.is_some() {
            break;
        }
    }
    step(
        "certificates",
        fail.is_none(),
        match &fail {
            Some((name, m)) => format!("first failure: {name} at m = {m}"),
            None => format!("m in {m_lo}..{m_hi}"),
        },
        out,
    );

    let mut disc_fail: Option<(i64, i64)> = None;
    for w in ms.windows(2) {
        if let [a, b] = w {
            if *a != *b
                && !resolvent::resolvent_discriminant_check(&Int::from(*a), &Int::from(*b))
                    .unwrap_or(false)
            {
                disc_fail = Some((*a, *b));
                break;
            }
        }
    }
    step(
        "resolvent_discriminant",
        disc_fail.is_none(),
        match disc_fail {
            Some((a, b)) => format!("first failure at (m, n) = ({a}, {b})"),
            None => "consecutive pairs".into(),
        },
        out,
    );

    let pairs = resolvent::constant_term_pairs();
    let pairs_ok = pairs.len() == 8
        && pairs.iter().all(|(m, n)| {
            resolvent::isom_test(m, n)
                .map(|rep| rep.same_field && rep.roots.contains(&Rat::from_integer(Int::from(0))))
                .unwrap_or(false)
        });
    step(
        "constant_term_pairs",
        pairs_ok,
        format!("{} pairs", pairs.len()),
        out,
    );

    let rep = check_integer_pairs(y_bound);
    step(
        "integer_pairs_reference",
        rep.passed(),
        format!("{} pairs", rep.matched),
        out,
    );

    ok
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_rows_are_self_consistent() {
        // every golden cell re-derives exactly: the form evaluations, the
        // partner parameter, and the pairing across orientations
        use splitcubic_core::cubic::form_value;
        use splitcubic_core::pairing::partner_root;
        use splitcubic_core::thue::{n_from_solution, PrimitiveSolution};

        for (m, rows) in golden::ENUMERATION_BLOCKS {
            let mi = Int::from(*m);
            for (lam, x, y, nn, nd, _) in rows.iter() {
                let s = PrimitiveSolution::new(&mi, Int::from(*x), Int::from(*y)).unwrap();
                assert_eq!(s.lambda, Int::from(*lam), "m={m} ({x},{y})");
                assert_eq!(
                    n_from_solution(&mi, &s),
                    Rat::new(Int::from(*nn), Int::from(*nd))
                );
            }
        }
        for r in golden::IMAGINARY_RANGE_ROWS
            .iter()
            .chain(golden::REAL_RANGE_ROWS)
        {
            let (m, n) = (Int::from(r.0), Int::from(r.1));
            assert_eq!(
                form_value(&m, &Int::from(r.2), &Int::from(r.3)),
                Int::from(r.4)
            );
            assert_eq!(
                form_value(&n, &Int::from(r.5), &Int::from(r.6)),
                Int::from(r.7)
            );
            let u = Rat::new(Int::from(r.2), Int::from(r.3));
            let up = partner_root(&m, &n, &u).unwrap();
            assert_eq!(
                up,
                Rat::new(Int::from(r.5), Int::from(r.6)),
                "pair ({}, {})",
                r.0,
                r.1
            );
            let s = PrimitiveSolution::new(&m, Int::from(r.2), Int::from(r.3)).unwrap();
            assert_eq!(n_from_solution(&m, &s), Rat::from_integer(n.clone()));
            let s2 = PrimitiveSolution::new(&n, Int::from(r.5), Int::from(r.6)).unwrap();
            assert_eq!(n_from_solution(&n, &s2), Rat::from_integer(m.clone()));
        }
    }

    #[test]
    fn golden_block_shapes() {
        assert_eq!(golden::ENUMERATION_BLOCKS.len(), 15);
        let total: usize = golden::ENUMERATION_BLOCKS
            .iter()
            .map(|(_, r)| r.len())
            .sum();
        assert_eq!(total, 106);
        assert_eq!(golden::IMAGINARY_RANGE_ROWS.len(), 10);
        assert_eq!(golden::REAL_RANGE_ROWS.len(), 54);
        assert_eq!(golden::INTEGER_PAIRS_SMALL_RANGE.len(), 17);
    }
}

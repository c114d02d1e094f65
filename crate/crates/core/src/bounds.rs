//! Closed-form bounds on the monogamy-game values: the binomial sum that
//! the proof chain terminates in, the analytic envelope √e·cos(π/8)ⁿ, and
//! the all-string reference bound cos²(π/8)ⁿ for comparison.
//!
//! Binomial coefficients are computed in exact big-integer arithmetic and
//! converted to floats only in the final ratio.

use num_bigint::BigUint;

use crate::{Error, Result};

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

fn require_even(n: u64) -> Result<()> {
    if n < 2 || !n.is_multiple_of(2) {
        Err(Error::invalid(format!("n must be an even integer >= 2, got {n}")))
    } else {
        Ok(())
    }
}

fn to_f64(b: &BigUint) -> f64 {
    // Exact for values below 2^53; beyond that, nearest-f64 of the integer.
    let mut out = 0.0f64;
    for digit in b.to_u64_digits().iter().rev() {
        out = out * 18446744073709551616.0 + *digit as f64;
    }
    out
}

/// (1/C(n,n/2)) · Σ_k C(n/2,k)² · 2^{−k/2}, the terminal quantity of the
/// proof chain for both games.
pub fn binomial_sum_bound(n: u64) -> Result<f64> {
    require_even(n)?;
    let h = n / 2;
    let mut sum = 0.0f64;
    for k in 0..=h {
        let c = binomial(h, k);
        sum += to_f64(&(&c * &c)) * 0.5f64.powf(k as f64 / 2.0);
    }
    Ok(sum / to_f64(&binomial(n, h)))
}

/// √e · cos(π/8)ⁿ, the analytic bound on both game values.
pub fn analytic_bound(n: u64) -> Result<f64> {
    require_even(n)?;
    Ok(std::f64::consts::E.sqrt() * (std::f64::consts::PI / 8.0).cos().powi(n as i32))
}

/// (1/2 + 1/(2√2))ⁿ = cos²(π/8)ⁿ, the bound on the harder all-string
/// variant of the game, for reference.
pub fn tfkw_reference_bound(n: u64) -> f64 {
    (0.5 + 0.5 / 2.0f64.sqrt()).powi(n as i32)
}

/// Guessing-floor 2^{−n/2}: the value achieved by answering blind.
pub fn trivial_floor(n: u64) -> f64 {
    0.5f64.powf(n as f64 / 2.0)
}

/// One table row per even n.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundTableRow {
    pub n: u64,
    pub binomial_sum: f64,
    pub analytic: f64,
    pub tfkw_ref: f64,
    pub trivial_floor: f64,
}

/// Bound table for all even n up to `n_max`.
pub fn bound_table(n_max: u64) -> Result<Vec<BoundTableRow>> {
    require_even(n_max)?;
    (1..=n_max / 2)
        .map(|h| {
            let n = 2 * h;
            Ok(BoundTableRow {
                n,
                binomial_sum: binomial_sum_bound(n)?,
                analytic: analytic_bound(n)?,
                tfkw_ref: tfkw_reference_bound(n),
                trivial_floor: trivial_floor(n),
            })
        })
        .collect()
}

/// Outcome of checking the binomial-sum ≤ analytic inequality, with the
/// intermediate central-binomial-ratio inequality where n is divisible
/// by 4.
#[derive(Debug, Clone)]
pub struct BinomialLemmaReport {
    pub n_max: u64,
    pub failures: Vec<u64>,
    pub checked: usize,
}

impl BinomialLemmaReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every even n ≤ n_max assert binomial_sum ≤ analytic (relative slack
/// 1e−12), and for n divisible by 4 the intermediate step
/// C(n/2,n/4)/C(n,n/2) ≤ √e/2^{n/2}.
pub fn verify_binomial_lemma(n_max: u64) -> Result<BinomialLemmaReport> {
    require_even(n_max)?;
    let mut failures = Vec::new();
    let mut checked = 0;
    for h in 1..=n_max / 2 {
        let n = 2 * h;
        let lhs = binomial_sum_bound(n)?;
        let rhs = analytic_bound(n)?;
        checked += 1;
        if lhs > rhs * (1.0 + 1e-12) {
            failures.push(n);
        }
        if n % 4 == 0 {
            let ratio = to_f64(&binomial(h, n / 4)) / to_f64(&binomial(n, h));
            let cap = std::f64::consts::E.sqrt() / 2.0f64.powf(h as f64);
            checked += 1;
            if ratio > cap * (1.0 + 1e-12) {
                failures.push(n);
            }
        }
    }
    Ok(BinomialLemmaReport { n_max, failures, checked })
}

/// Format a float with 17 significant digits (round-trip exact for f64).
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// CSV rendering: header plus one row per even n, LF line endings.
pub fn table_to_csv(rows: &[BoundTableRow]) -> String {
    let mut out = String::from("n,binomial_sum,analytic,tfkw,trivial_floor\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            fmt_f64(r.binomial_sum),
            fmt_f64(r.analytic),
            fmt_f64(r.tfkw_ref),
            fmt_f64(r.trivial_floor)
        ));
    }
    out
}

/// JSON rendering with the same 17-significant-digit float format.
pub fn table_to_json(rows: &[BoundTableRow]) -> String {
    let mut out = String::from("[");
    for (i, r) in rows.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!(
            "{{\"n\":{},\"binomial_sum\":{},\"analytic\":{},\"tfkw\":{},\"trivial_floor\":{}}}",
            r.n,
            fmt_f64(r.binomial_sum),
            fmt_f64(r.analytic),
            fmt_f64(r.tfkw_ref),
            fmt_f64(r.trivial_floor)
        ));
    }
    out.push(']');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(5, 7), BigUint::from(0u32));
        // C(64,32) needs more than 60 bits.
        assert_eq!(
            binomial(64, 32).to_string(),
            "1832624140942590534"
        );
    }

    #[test]
    fn binomial_sum_bound_hand_values() {
        // n=2: (1/2)(1 + 2^{-1/2}).
        let expect2 = 0.5 * (1.0 + 0.5f64.sqrt());
        assert!((binomial_sum_bound(2).unwrap() - expect2).abs() < 1e-15);
        assert!((binomial_sum_bound(2).unwrap() - 0.85355339).abs() < 1e-8);

        // n=4: (1/6)(1 + 4·2^{-1/2} + 1/2).
        let expect4 = (1.0 + 4.0 * 0.5f64.sqrt() + 0.5) / 6.0;
        assert!((binomial_sum_bound(4).unwrap() - expect4).abs() < 1e-15);
        assert!((binomial_sum_bound(4).unwrap() - 0.72140452).abs() < 1e-8);

        // Half-angle identity: the n=2 value is cos²(π/8).
        let cos2 = (std::f64::consts::PI / 8.0).cos().powi(2);
        assert!((binomial_sum_bound(2).unwrap() - cos2).abs() < 1e-15);
    }

    #[test]
    fn binomial_sum_bound_rejects_odd() {
        assert!(binomial_sum_bound(3).is_err());
        assert!(binomial_sum_bound(0).is_err());
    }

    #[test]
    fn analytic_bound_values() {
        // √e·cos²(π/8) recomputed from the constants: 1.6487212707…×0.8535533906….
        let b2 = analytic_bound(2).unwrap();
        assert!((b2 - 1.4072716307).abs() < 1e-9, "n=2 value {b2} is vacuous (>1)");
        assert!(b2 > 1.0);

        let b8 = analytic_bound(8).unwrap();
        assert!((b8 - 0.87512).abs() < 1e-4);

        // Geometric decay with ratio cos²(π/8).
        let ratio = analytic_bound(10).unwrap() / analytic_bound(8).unwrap();
        let cos2 = (std::f64::consts::PI / 8.0).cos().powi(2);
        assert!((ratio - cos2).abs() < 1e-12);
    }

    #[test]
    fn analytic_bound_below_one_iff_n_at_least_eight() {
        for n in (2..=64).step_by(2) {
            let b = analytic_bound(n).unwrap();
            assert_eq!(b < 1.0, n >= 8, "n={n}, bound={b}");
        }
    }

    #[test]
    fn tfkw_reference_values() {
        assert!((tfkw_reference_bound(1) - 0.8535534).abs() < 1e-7);
        assert!((tfkw_reference_bound(2) - 0.7285534).abs() < 1e-7);
        for n in (2..=64).step_by(2) {
            assert!(tfkw_reference_bound(n) <= analytic_bound(n).unwrap());
        }
    }

    #[test]
    fn binomial_lemma_holds_up_to_64() {
        let report = verify_binomial_lemma(64).unwrap();
        assert!(report.pass(), "failures at n = {:?}", report.failures);
        // The slack grows slowly because the sum decays strictly faster
        // than cos²(π/8)ⁿ; at n=64 the ratio is ≈ 2.084.
        let ratio = analytic_bound(64).unwrap() / binomial_sum_bound(64).unwrap();
        assert!(ratio >= 1.0);
        assert!((ratio - 2.0840902419).abs() < 1e-6, "ratio {ratio}");
    }

    #[test]
    fn binomial_sum_strictly_decreasing() {
        let mut prev = f64::INFINITY;
        for n in (2..=64).step_by(2) {
            let b = binomial_sum_bound(n).unwrap();
            assert!(b < prev, "not strictly decreasing at n={n}");
            assert!(b > 0.0 && b <= 1.0);
            prev = b;
        }
    }

    #[test]
    fn csv_table_shape() {
        let rows = bound_table(8).unwrap();
        assert_eq!(rows.len(), 4);
        let csv = table_to_csv(&rows);
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.starts_with("n,binomial_sum,analytic,tfkw,trivial_floor\n"));
        assert!(!csv.contains('\r'));
        // Deterministic output.
        assert_eq!(csv, table_to_csv(&bound_table(8).unwrap()));
    }

    #[test]
    fn fmt_f64_round_trips() {
        for v in [0.1, 2.0 / 3.0, 0.853_553_390_593_273_7, 1e-300] {
            let s = fmt_f64(v);
            assert_eq!(s.parse::<f64>().unwrap(), v);
        }
    }
}

//! Combinatorial helpers shared by the moment and oracle enumerations.

/// `C(n, k)` as an `f64`, 0 when `k > n`.
///
/// Computed by the prefix-product recurrence; exact while intermediate values
/// stay below 2^53, which covers every enumeration budget in this crate.
pub fn choose(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut p = 1.0f64;
    for t in 0..k {
        p = p * (n - t) as f64 / (t + 1) as f64;
    }
    p
}

/// ln C(n, k); requires `k <= n`.
pub fn ln_choose(n: u64, k: u64) -> f64 {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    let mut s = 0.0f64;
    for t in 0..k {
        s += ((n - t) as f64).ln() - ((t + 1) as f64).ln();
    }
    s
}

/// Falling-factorial ratio `m(m-1)...(m-k+1) / (n(n-1)...(n-k+1))`.
///
/// Equals `C(n-k, m-k) / C(n, m)` for `k <= m <= n`, the binomial weight of
/// a vertex class. Exactly 0 as soon as the numerator reaches a nonpositive
/// factor, so callers need not special-case small `m`.
pub fn falling_ratio(m: u64, n: u64, k: u64) -> f64 {
    let mut p = 1.0f64;
    for t in 0..k {
        if m <= t {
            return 0.0;
        }
        p *= (m - t) as f64 / (n - t) as f64;
    }
    p
}

/// ln of [`falling_ratio`], `None` when the ratio is exactly 0.
pub fn ln_falling_ratio(m: u64, n: u64, k: u64) -> Option<f64> {
    let mut s = 0.0f64;
    for t in 0..k {
        if m <= t {
            return None;
        }
        s += ((m - t) as f64).ln() - ((n - t) as f64).ln();
    }
    Some(s)
}

/// Falling factorial `x(x-1)...(x-k+1)` as an `f64` (0 when `k > x`).
pub fn falling(x: u64, k: u64) -> f64 {
    let mut p = 1.0f64;
    for t in 0..k {
        if x <= t {
            return 0.0;
        }
        p *= (x - t) as f64;
    }
    p
}

/// Calls `f` on every k-subset of `{0, .., n-1}` in lexicographic order.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance odometer
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if idx[pos] != pos + n - k {
                break;
            }
            if pos == 0 {
                return;
            }
        }
        idx[pos] += 1;
        for t in pos + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// Numerically stable `ln(sum(exp(x_i)))` over `(value, weight)` terms,
/// i.e. `ln(sum(w_i * exp(x_i)))` with positive weights.
pub fn log_sum_exp_weighted(terms: &[(f64, f64)]) -> f64 {
    let max = terms
        .iter()
        .filter(|(_, w)| *w > 0.0)
        .map(|&(x, _)| x)
        .fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let mut s = 0.0f64;
    for &(x, w) in terms {
        if w > 0.0 {
            s += w * (x - max).exp();
        }
    }
    max + s.ln()
}

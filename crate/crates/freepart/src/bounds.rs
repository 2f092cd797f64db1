//! Closed-form part-count bounds. All arithmetic saturates at `u128::MAX`.

pub fn sat_pow(base: u128, exp: u128) -> u128 {
    let Ok(e) = u32::try_from(exp) else {
        return if base <= 1 { base } else { u128::MAX };
    };
    base.checked_pow(e).unwrap_or(u128::MAX)
}

pub fn sat_mul(a: u128, b: u128) -> u128 {
    a.checked_mul(b).unwrap_or(u128::MAX)
}

pub fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = match r.checked_mul(n - i) {
            Some(x) => x / (i + 1),
            None => return u128::MAX,
        };
    }
    r
}

/// Blocks per side of the recursive bipartite matching partition.
pub fn f_nm(n: usize, m: usize) -> u128 {
    if n <= 2 || m <= 2 {
        return 1;
    }
    let q2 = 2 * (n as u128 - 1) * (m as u128 - 1);
    let inner = f_nm(n, m - 1).max(f_nm(n - 1, m));
    sat_mul(q2, sat_pow(inner, q2))
}

/// Cochromatic bound for `Free(nK2, co-mK2)`.
pub fn z_nm(n: usize, m: usize) -> u128 {
    let e = (n.max(2) - 2) + (m.max(2) - 2);
    sat_mul(3, sat_pow(6, e as u128))
}

/// Block bound of the matching partition of `Free(F_{n,1})`.
pub fn t_matching(n: usize) -> u128 {
    let z = z_nm(n, n);
    sat_mul(z, sat_pow(f_nm(n, n), z))
}

fn u(x: usize) -> u128 {
    x as u128
}

/// Split bound for the bag after a start bag: `C(nk, k) + nk^5`.
pub fn pi1(n: usize, k: usize) -> u128 {
    binom(sat_mul(u(n), u(k)), u(k)).saturating_add(sat_mul(u(n), sat_pow(u(k), 5)))
}

/// Split bound for bags away from a start: `C((n-1)r, r)`.
pub fn pi2(n: usize, r: usize) -> u128 {
    binom(sat_mul(u(n.saturating_sub(1)), u(r)), u(r))
}

/// Size bound of the exceptional singleton sets: `(n-1)r(k+1)`.
pub fn pi3(n: usize, r: usize, k: usize) -> u128 {
    sat_mul(sat_mul(u(n.saturating_sub(1)), u(r)), u(k) + 1)
}

pub fn pi_max(n: usize, k: usize, r: usize) -> u128 {
    pi1(n, k).max(pi2(n, r)).max(pi3(n, r, k))
}

/// Number of marked classes: `3nkd^2`.
pub fn marked_classes(n: usize, k: usize, d: usize) -> u128 {
    sat_mul(sat_mul(3 * u(n), u(k)), sat_pow(u(d), 2))
}

/// Blocks per side of one induction step: `4 pi^2 + 3nkd^2`.
pub fn step_blocks(n: usize, k: usize, r: usize, d: usize) -> u128 {
    sat_mul(4, sat_pow(pi_max(n, k, r), 2)).saturating_add(marked_classes(n, k, d))
}

/// Block bound of the star-splitting refinement: `3nk(nks^2)^2 + 1`.
pub fn phi(n: usize, k: usize, s: usize) -> u128 {
    let delta = sat_mul(sat_mul(u(n), u(k)), sat_pow(u(s), 2));
    sat_mul(sat_mul(3 * u(n), u(k)), sat_pow(delta, 2)).saturating_add(1)
}

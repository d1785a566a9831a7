use crate::error::JetError;
use crate::jet::Jet;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// Solves `F(s) = r^4` for `s` as a series in `r`, where
/// `F(s) = c s^k (1 + O(s))`, `c > 0`, `k` in `{2, 4}`.
///
/// With `F = s^k G`, put `h = s G^{1/4}` (k = 4) or `h = s G^{1/2}` (k = 2).
/// Then `h(s) = ±r` resp. `h(s) = ±r^2`, and the branch is read off the
/// reverted series. For `k = 4` the result has order `N - 3`; for `k = 2`
/// it has order `2N - 1`, where `N` is the order of `F`.
pub fn solve_norm_equation<T: Scalar>(f: &Jet<T>, k: usize, branch: Branch) -> Result<Jet<T>, JetError> {
    if k != 2 && k != 4 {
        return Err(JetError::BadLeadingExponent(k));
    }
    let g = f.shift_down(k).map_err(|_| JetError::BadLeadingExponent(k))?;
    if !g.coeffs()[0].is_positive() {
        return Err(JetError::NonPositiveLeading);
    }
    let root = g.pow_ratio(1, k as u32)?;
    let h = root.shift_up(1);
    let inv = h.reversion()?;
    let inv = match branch {
        Branch::Plus => inv,
        Branch::Minus => inv.reflect(),
    };
    if k == 4 {
        Ok(inv)
    } else {
        // odd powers of r vanish, so the top coefficient r^{2N-1} is known too
        let sq = inv.substitute_power(2);
        let order = sq.order() + 1;
        Ok(sq.with_order(order))
    }
}

//! Kauffman-bracket state sum on the closed braid diagram.
//!
//! Independent of the walk machinery; used to check `J'(2)`.

use crate::braid::{BraidWord, Sign};
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::scalar::Coeff;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Number of loops after smoothing every crossing; `vertical[j]` keeps the
/// strands running through crossing `j + 1`, otherwise they turn back.
fn loop_count(braid: &BraidWord, vertical: &[bool]) -> usize {
    let m = braid.strands();
    let k = braid.len();
    // Gap k is glued to gap 0 by the closure.
    let node = |gap: usize, p: usize| (gap % k.max(1)) * m + (p - 1);
    let mut uf = UnionFind::new(k.max(1) * m);
    for j in 1..=k {
        let l = braid.crossing(j).index;
        for p in 1..=m {
            if p != l && p != l + 1 {
                uf.union(node(j, p), node(j - 1, p));
            }
        }
        if vertical[j - 1] {
            uf.union(node(j, l), node(j - 1, l));
            uf.union(node(j, l + 1), node(j - 1, l + 1));
        } else {
            uf.union(node(j, l), node(j, l + 1));
            uf.union(node(j - 1, l), node(j - 1, l + 1));
        }
    }
    let total = k.max(1) * m;
    (0..total).filter(|&x| uf.find(x) == x).count()
}

/// The Jones polynomial of the closure at `N = 2`, as `V(t)` with `t -> q^-1`.
///
/// `⟨D⟩ = Σ_states A^{#A - #B} (-A² - A⁻²)^{loops - 1}` and
/// `V = (-A³)^{-w} ⟨D⟩`. The A-smoothing of a positive crossing keeps the
/// strands vertical, and the result is read off with `A^{4e} -> q^{-e}`.
/// Both choices are pinned by the positive trefoil `σ₁³`, whose invariant
/// must start at `+q`; the figure-eight fixes nothing since it is amphichiral.
pub fn bracket_jones_oracle<R: Coeff>(braid: &BraidWord) -> Result<LaurentPoly<R>> {
    braid.require_knot()?;
    let k = braid.len();
    let delta: LaurentPoly<R> = -(LaurentPoly::q_pow(2) + LaurentPoly::q_pow(-2));
    let mut bracket = LaurentPoly::<R>::zero();
    let mut vertical = vec![false; k];
    for state in 0u64..(1 << k) {
        let mut a_minus_b = 0i64;
        for (j, v) in vertical.iter_mut().enumerate() {
            let a_smoothing = state & (1 << j) == 0;
            let sign = braid.letters()[j].sign;
            *v = match sign {
                Sign::Pos => a_smoothing,
                Sign::Neg => !a_smoothing,
            };
            a_minus_b += if a_smoothing { 1 } else { -1 };
        }
        let loops = loop_count(braid, &vertical) as u32;
        bracket += delta.pow(loops - 1).shift(a_minus_b);
    }
    // Multiply by (-A³)^{-w} = (-1)^w A^{-3w}.
    let w = braid.writhe();
    let sign = if w % 2 == 0 { R::one() } else { -R::one() };
    let v_in_a = bracket.shift(-3 * w).scale(&sign);
    let mut out = LaurentPoly::zero();
    for (e, c) in v_in_a.terms() {
        assert!(e % 4 == 0, "knot bracket exponent {e} not divisible by 4");
        out += LaurentPoly::monomial(c.clone(), -e / 4);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<i64>;

    fn oracle(text: &str, m: usize) -> P {
        bracket_jones_oracle(&BraidWord::parse(text, m).unwrap()).unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(oracle("1 -2 1 -2", 3).to_string(), "q^-2 - q^-1 + 1 - q + q^2");
        assert_eq!(oracle("1 1 1", 2), "q + q^3 - q^4".parse().unwrap());
        assert_eq!(oracle("-1 -1 -1", 2), "-q^-4 + q^-3 + q^-1".parse().unwrap());
        assert_eq!(oracle("", 1), P::one());
        assert_eq!(oracle("1 -2", 3), P::one());
    }

    #[test]
    fn rejects_links() {
        assert!(bracket_jones_oracle::<i64>(&BraidWord::parse("1 1", 2).unwrap()).is_err());
    }
}

//! Basis blades of `X_d`.
//!
//! Generator `e_j` (1-based, `1 <= j <= d+2`) is bit `j-1` of the mask, and a
//! blade is the product of its generators in ascending order. Generators
//! `e_1..e_{d+1}` square to `-1` and pairwise anticommute; `e_{d+2}` squares
//! to zero and commutes with everything.

use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;

thread_local! {
    static SIGN_FAULT: Cell<bool> = const { Cell::new(false) };
}

/// Corrupts the sign table on the current thread (`e_2 e_1` comes out as
/// `+e_1 e_2`). Only for exercising the failure paths of the verification
/// suites.
#[doc(hidden)]
pub fn set_sign_fault(on: bool) {
    SIGN_FAULT.with(|f| f.set(on));
}

/// Largest supported number of base generators.
pub const MAX_DIM: usize = 8;
/// Smallest supported number of base generators.
pub const MIN_DIM: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade {
    mask: u16,
    dim: u8,
}

impl Blade {
    /// The blade with the given mask. Panics if the mask uses generators
    /// beyond `e_{d+2}` or `d` is out of the supported range.
    pub fn new(dim: usize, mask: u16) -> Self {
        assert!(
            (MIN_DIM..=MAX_DIM).contains(&dim),
            "dimension {dim} outside {MIN_DIM}..={MAX_DIM}"
        );
        assert!(
            mask >> (dim + 2) == 0,
            "mask {mask:#b} uses generators beyond e_{}",
            dim + 2
        );
        Blade {
            mask,
            dim: dim as u8,
        }
    }

    pub fn scalar(dim: usize) -> Self {
        Blade::new(dim, 0)
    }

    /// The single generator `e_j`.
    pub fn generator(dim: usize, j: usize) -> Self {
        assert!((1..=dim + 2).contains(&j), "generator e_{j} out of range");
        Blade::new(dim, 1 << (j - 1))
    }

    /// Builds the blade from strictly increasing 1-based generator indices.
    pub fn from_indices(dim: usize, indices: &[usize]) -> Self {
        let mut mask = 0u16;
        for w in indices.windows(2) {
            assert!(w[0] < w[1], "indices must be strictly increasing");
        }
        for &j in indices {
            assert!((1..=dim + 2).contains(&j), "generator e_{j} out of range");
            mask |= 1 << (j - 1);
        }
        Blade::new(dim, mask)
    }

    pub fn mask(self) -> u16 {
        self.mask
    }

    pub fn dim(self) -> usize {
        self.dim as usize
    }

    /// 1-based generator indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.mask;
        (0..16).filter(move |b| mask >> b & 1 == 1).map(|b| b + 1)
    }

    pub fn contains(self, j: usize) -> bool {
        j >= 1 && self.mask >> (j - 1) & 1 == 1
    }

    /// Mask of the anticommuting generators `e_1..e_{d+1}`.
    fn signed_bits(dim: usize) -> u16 {
        (1u16 << (dim + 1)) - 1
    }

    /// Mask of the base generators `e_1..e_d`.
    fn base_bits(dim: usize) -> u16 {
        (1u16 << dim) - 1
    }

    fn pair_bits(dim: usize) -> u16 {
        0b11 << dim
    }

    /// Number of generators among `e_1..e_{d+1}`.
    pub fn signed_count(self) -> u32 {
        (self.mask & Self::signed_bits(self.dim())).count_ones()
    }

    /// True when `e_{d+1}` and `e_{d+2}` are both present.
    pub fn has_pair(self) -> bool {
        let p = Self::pair_bits(self.dim());
        self.mask & p == p
    }

    /// `m`-term grade: base generators count one each and the pair
    /// `e_{d+1}e_{d+2}` counts as a single element. Only meaningful when
    /// the pair bits are both set or both clear.
    pub fn grade(self) -> u32 {
        (self.mask & Self::base_bits(self.dim())).count_ones() + u32::from(self.has_pair())
    }

    /// Membership in the basis of `Z_d^0`.
    pub fn in_z0(self) -> bool {
        let p = self.mask & Self::pair_bits(self.dim());
        (p == 0 || p == Self::pair_bits(self.dim())) && self.grade() % 2 == 0
    }

    /// Basis blade of `Cl_k` (only generators `e_1..e_k`).
    pub fn in_clifford(self, k: usize) -> bool {
        self.mask >> k == 0
    }

    /// Basis blade of the even subalgebra `Cl_k^0`.
    pub fn in_even_clifford(self, k: usize) -> bool {
        self.in_clifford(k) && self.mask.count_ones() % 2 == 0
    }

    /// Blade of `i(R^d)`: a single base generator.
    pub fn is_vector(self) -> bool {
        self.mask.count_ones() == 1 && self.mask & Self::base_bits(self.dim()) != 0
    }

    /// Product of two blades as `(sign, blade)`; `sign == 0` when `e_{d+2}`
    /// appears in both factors.
    pub fn product(self, other: Blade) -> (i8, Blade) {
        debug_assert_eq!(self.dim, other.dim);
        let d = self.dim();
        let top = 1u16 << (d + 1);
        if self.mask & other.mask & top != 0 {
            return (0, Blade::scalar(d));
        }
        let signed = Self::signed_bits(d);
        let a = self.mask & signed;
        let b = other.mask & signed;
        // Move each generator of `b` left past the larger generators of `a`.
        let mut swaps = 0u32;
        let mut rest = b;
        while rest != 0 {
            let j = rest.trailing_zeros();
            rest &= rest - 1;
            swaps += (a >> (j + 1)).count_ones();
        }
        // Each repeated generator squares to -1.
        swaps += (a & b).count_ones();
        if a == 0b10 && b == 0b01 && SIGN_FAULT.with(Cell::get) {
            swaps += 1;
        }
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        (
            sign,
            Blade {
                mask: self.mask ^ other.mask,
                dim: self.dim,
            },
        )
    }

    /// Sign picked up by the main involution alpha.
    pub fn alpha_sign(self) -> i8 {
        if self.signed_count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sign picked up by reversing the generator string.
    pub fn reverse_sign(self) -> i8 {
        let m = self.signed_count();
        if (m * m.saturating_sub(1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Ordering used for rendering and for coordinates of `Z_d^0`.
    pub fn grade_order(self, other: Blade) -> Ordering {
        (self.grade(), self.mask).cmp(&(other.grade(), other.mask))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.dim, self.mask).cmp(&(other.dim, other.mask))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return f.write_str("1");
        }
        for j in self.indices() {
            write!(f, "e{j}")?;
        }
        Ok(())
    }
}

/// The `2^d` basis blades of `Z_d^0`, ordered by grade then mask. For `d = 3`
/// this is `1, e1e2, e1e3, e2e3, e1e4e5, e2e4e5, e3e4e5, e1e2e3e4e5`.
pub fn z0_basis(dim: usize) -> Vec<Blade> {
    let mut blades: Vec<Blade> = (0..1u16 << (dim + 2))
        .map(|m| Blade::new(dim, m))
        .filter(|b| b.in_z0())
        .collect();
    blades.sort_by_key(|b| (b.grade(), b.mask()));
    blades
}

/// The `2^{k-1}` basis blades of `Cl_k^0` inside `X_d`, ordered by grade
/// then mask.
pub fn even_clifford_basis(dim: usize, k: usize) -> Vec<Blade> {
    assert!(k <= dim);
    let mut blades: Vec<Blade> = (0..1u16 << k)
        .filter(|m| m.count_ones() % 2 == 0)
        .map(|m| Blade::new(dim, m))
        .collect();
    blades.sort_by_key(|b| (b.grade(), b.mask()));
    blades
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(d: usize, idx: &[usize]) -> Blade {
        Blade::from_indices(d, idx)
    }

    #[test]
    fn generator_squares() {
        for d in 2..=6 {
            for j in 1..=d + 1 {
                let e = Blade::generator(d, j);
                assert_eq!(e.product(e), (-1, Blade::scalar(d)));
            }
            let last = Blade::generator(d, d + 2);
            assert_eq!(last.product(last).0, 0);
        }
    }

    #[test]
    fn degenerate_generator_commutes() {
        let d = 3;
        let top = Blade::generator(d, 5);
        for j in 1..=4 {
            let e = Blade::generator(d, j);
            assert_eq!(top.product(e), e.product(top));
        }
    }

    #[test]
    fn hand_computed_products() {
        // e1e2 * e2e3 = e1 (e2 e2) e3 = -e1e3
        assert_eq!(b(4, &[1, 2]).product(b(4, &[2, 3])), (-1, b(4, &[1, 3])));
        // d = 2: e3e4 * e1 = -e1e3e4
        assert_eq!(b(2, &[3, 4]).product(b(2, &[1])), (-1, b(2, &[1, 3, 4])));
        // e2 e1 = -e1e2
        assert_eq!(b(3, &[2]).product(b(3, &[1])), (-1, b(3, &[1, 2])));
    }

    #[test]
    fn z0_membership() {
        let d = 4;
        assert!(b(d, &[]).in_z0());
        assert!(b(d, &[1, 2]).in_z0());
        assert!(b(d, &[1, 5, 6]).in_z0());
        assert!(!b(d, &[1]).in_z0());
        assert!(!b(d, &[1, 5]).in_z0());
        assert!(!b(d, &[1, 2, 5, 6]).in_z0());
        assert_eq!(z0_basis(d).len(), 16);
        assert_eq!(b(3, &[1, 2, 3, 4, 5]).grade(), 4);
    }

    #[test]
    fn z0_basis_order_d3() {
        let names: Vec<String> = z0_basis(3).iter().map(|b| b.to_string()).collect();
        assert_eq!(
            names,
            ["1", "e1e2", "e1e3", "e2e3", "e1e4e5", "e2e4e5", "e3e4e5", "e1e2e3e4e5"]
        );
    }

    #[test]
    fn involution_signs() {
        // d = 4 worked example: e3e4, e1e5e6, e2e6
        assert_eq!(b(4, &[3, 4]).alpha_sign(), 1);
        assert_eq!(b(4, &[1, 5, 6]).alpha_sign(), 1);
        assert_eq!(b(4, &[2, 6]).alpha_sign(), -1);
        assert_eq!(b(4, &[3, 4]).reverse_sign(), -1);
        assert_eq!(b(4, &[1, 5, 6]).reverse_sign(), -1);
        assert_eq!(b(4, &[2, 6]).reverse_sign(), 1);
    }
}

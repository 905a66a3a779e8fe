//! Three ways to pack two naturals into one.
//!
//! * [`kuratowski_pair`] codes the literal set {{x},{x,y}}: injective,
//!   doubly exponential, degenerate on the diagonal, never surjective.
//! * [`cantor_pair`] walks the diagonals of the quarter plane; its inverse
//!   here is exact, built on an integer square root, no floats anywhere.
//! * [`bitmerge_pair`] interleaves bit patterns, x on even and y on odd
//!   positions, a bijection that roughly multiplies magnitudes instead of
//!   stacking exponentials.

use num_traits::{One, Zero};

use crate::natset::nat_adduction;
use crate::{exp2, Error, Nat, Result};

/// Largest exponent [`kuratowski_pair`] will materialize; the pair code is
/// 2^2^max(x,y)-sized, so this caps x and y near 20.
const KURATOWSKI_EXP_LIMIT: u64 = 1 << 20;

/// Code of the Kuratowski pair {{x}, {x,y}}.
pub fn kuratowski_pair(x: &Nat, y: &Nat) -> Result<Nat> {
    let sx = kexp2(x)?; // {x}
    let sy = kexp2(y)?; // {y}
    let sxy = nat_adduction(x, &sy)?; // {x,y}
    let ssxy = kexp2(&sxy)?; // {{x,y}}
    kcheck(&sx)?;
    nat_adduction(&sx, &ssxy) // {{x},{x,y}}
}

fn kexp2(e: &Nat) -> Result<Nat> {
    kcheck(e)?;
    exp2(e)
}

fn kcheck(e: &Nat) -> Result<()> {
    if *e > Nat::from(KURATOWSKI_EXP_LIMIT) {
        Err(Error::TooLarge(format!(
            "kuratowski pair exponent {e} (limit 2^20)"
        )))
    } else {
        Ok(())
    }
}

/// Cantor's diagonal pairing (x+y)(x+y+1)/2 + y.
pub fn cantor_pair(x: &Nat, y: &Nat) -> Nat {
    let s = x + y;
    ((&s * (&s + 1u32)) >> 1) + y
}

/// Exact inverse of [`cantor_pair`].
///
/// The diagonal index is w = (isqrt(8z+1) - 1) div 2; subtracting its
/// triangle number leaves y, and x is the rest of the diagonal.
pub fn cantor_unpair(z: &Nat) -> (Nat, Nat) {
    let w = (isqrt(&((z << 3u32) + 1u32)) - 1u32) >> 1;
    let t = (&w * (&w + 1u32)) >> 1;
    let y = z - &t;
    let x = &w - &y;
    (x, y)
}

/// Floor of the square root, Newton's method on integers.
///
/// The seed 2^ceil(bits/2) is at least the root; every step from above
/// stays at or above floor(sqrt n) while strictly shrinking, so the first
/// step that fails to shrink has landed exactly on it.
pub fn isqrt(n: &Nat) -> Nat {
    if n.is_zero() {
        return Nat::zero();
    }
    let mut x: Nat = Nat::one() << n.bits().div_ceil(2);
    loop {
        let next = (&x + n / &x) >> 1;
        if next >= x {
            return x;
        }
        x = next;
    }
}

/// Interleave bits: x on even positions, y on odd ones.
pub fn bitmerge_pair(x: &Nat, y: &Nat) -> Nat {
    let mut z = Nat::zero();
    for i in 0..x.bits() {
        if x.bit(i) {
            z.set_bit(2 * i, true);
        }
    }
    for i in 0..y.bits() {
        if y.bit(i) {
            z.set_bit(2 * i + 1, true);
        }
    }
    z
}

/// Split the even-position bits from the odd-position ones.
pub fn bitmerge_unpair(z: &Nat) -> (Nat, Nat) {
    let mut x = Nat::zero();
    let mut y = Nat::zero();
    for i in 0..z.bits() {
        if z.bit(i) {
            if i & 1 == 0 {
                x.set_bit(i / 2, true);
            } else {
                y.set_bit(i / 2, true);
            }
        }
    }
    (x, y)
}

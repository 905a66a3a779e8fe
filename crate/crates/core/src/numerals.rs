//! Positional numerals, plus the bijective base-2 code under which *every*
//! finite bit string names a distinct natural number.
//!
//! Ordinary binary wastes strings: `[1]`, `[1,0]`, `[1,0,0]` (most
//! significant last) all mean 1 once leading zeros are allowed. The
//! bijective code fixes this by reading a string `bs` as the number
//! `from_bits(bs ++ [1]) - 1`, which pairs strings and naturals one to one.

use num_integer::Integer;
use num_traits::Zero;

use crate::{Error, Nat, Result};

/// Digits of `n` in base `base`, least significant first.
///
/// Zero still gets a digit, so the result is never empty.
pub fn to_base(base: &Nat, n: &Nat) -> Result<Vec<Nat>> {
    check_base(base)?;
    let mut digits = Vec::new();
    let mut rest = n.clone();
    loop {
        let (q, d) = rest.div_rem(base);
        digits.push(d);
        rest = q;
        if rest.is_zero() {
            return Ok(digits);
        }
    }
}

/// Value of a least-significant-first digit string in base `base`.
pub fn from_base(base: &Nat, digits: &[Nat]) -> Result<Nat> {
    check_base(base)?;
    if let Some(d) = digits.iter().find(|d| *d >= base) {
        return Err(Error::InvalidDigit {
            digit: d.clone(),
            base: base.clone(),
        });
    }
    let mut n = Nat::zero();
    for d in digits.iter().rev() {
        n = n * base + d;
    }
    Ok(n)
}

fn check_base(base: &Nat) -> Result<()> {
    if *base < Nat::from(2u32) {
        Err(Error::InvalidBase(base.clone()))
    } else {
        Ok(())
    }
}

/// Binary digits of `n`, least significant first; `[0]` for zero.
///
/// Same value as `to_base(2, n)`, computed straight off the bit pattern.
pub fn to_bits(n: &Nat) -> Vec<u8> {
    if n.is_zero() {
        return vec![0];
    }
    (0..n.bits()).map(|i| u8::from(n.bit(i))).collect()
}

/// Value of a least-significant-first bit string.
pub fn from_bits(bits: &[u8]) -> Result<Nat> {
    let mut n = Nat::zero();
    for (i, &b) in bits.iter().enumerate() {
        match b {
            0 => {}
            1 => n.set_bit(i as u64, true),
            _ => {
                return Err(Error::InvalidDigit {
                    digit: Nat::from(b),
                    base: Nat::from(2u32),
                })
            }
        }
    }
    Ok(n)
}

/// Bijective base-2 code of `n`: the binary digits of `n + 1` with the
/// final (always 1) bit dropped. Sends 0 to the empty string.
pub fn nat_to_bijbits(n: &Nat) -> Vec<u8> {
    let mut bits = to_bits(&(n + 1u32));
    bits.pop();
    bits
}

/// Inverse of [`nat_to_bijbits`], total on bit strings.
pub fn bijbits_to_nat(bits: &[u8]) -> Result<Nat> {
    let mut n = from_bits(bits)?;
    n.set_bit(bits.len() as u64, true); // the dropped leading 1
    Ok(n - 1u32)
}

/// All finite bit strings, one per natural, in code order:
/// `[], [0], [1], [0,0], [1,0], [0,1], [1,1], [0,0,0], ...`
pub fn all_bitstrings() -> impl Iterator<Item = Vec<u8>> {
    crate::nats().map(|n| nat_to_bijbits(&n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Nat {
        Nat::from(n)
    }

    fn nat_vec(ns: &[u64]) -> Vec<Nat> {
        ns.iter().copied().map(Nat::from).collect()
    }

    #[test]
    fn digits_of_2008() {
        assert_eq!(
            to_base(&nat(10), &nat(2008)).unwrap(),
            nat_vec(&[8, 0, 0, 2])
        );
        assert_eq!(to_bits(&nat(2008)), vec![0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn zero_still_has_a_digit() {
        assert_eq!(to_base(&nat(2), &nat(0)).unwrap(), nat_vec(&[0]));
        assert_eq!(to_base(&nat(10), &nat(0)).unwrap(), nat_vec(&[0]));
        assert_eq!(to_bits(&nat(0)), vec![0]);
    }

    #[test]
    fn from_base_small_values() {
        assert_eq!(from_base(&nat(3), &nat_vec(&[2, 1])).unwrap(), nat(5));
        assert_eq!(
            from_base(&nat(10), &nat_vec(&[8, 0, 0, 2])).unwrap(),
            nat(2008)
        );
        assert_eq!(from_base(&nat(16), &[]).unwrap(), nat(0));
    }

    #[test]
    fn bad_bases_and_digits_are_rejected() {
        assert!(matches!(
            to_base(&nat(1), &nat(5)),
            Err(Error::InvalidBase(_))
        ));
        assert!(matches!(
            from_base(&nat(0), &[]),
            Err(Error::InvalidBase(_))
        ));
        assert!(matches!(
            from_base(&nat(2), &nat_vec(&[2])),
            Err(Error::InvalidDigit { .. })
        ));
        assert!(matches!(
            from_bits(&[1, 0, 3]),
            Err(Error::InvalidDigit { .. })
        ));
    }

    #[test]
    fn bits_agree_with_base_2() {
        for k in 0..2000u64 {
            let n = nat(k);
            let bits: Vec<Nat> = to_bits(&n).iter().map(|&b| Nat::from(b)).collect();
            assert_eq!(to_base(&nat(2), &n).unwrap(), bits);
            assert_eq!(from_bits(&to_bits(&n)).unwrap(), n);
        }
    }

    #[test]
    fn bijbits_first_sixteen() {
        let expected: Vec<Vec<u8>> = vec![
            vec![],
            vec![0],
            vec![1],
            vec![0, 0],
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![1, 1, 0],
            vec![0, 0, 1],
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![1, 1, 1],
            vec![0, 0, 0, 0],
        ];
        let got: Vec<Vec<u8>> = (0..16).map(|k| nat_to_bijbits(&nat(k))).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn bijbits_of_42() {
        assert_eq!(nat_to_bijbits(&nat(42)), vec![1, 1, 0, 1, 0]);
    }

    #[test]
    fn bijbits_inverse_examples() {
        assert_eq!(bijbits_to_nat(&[]).unwrap(), nat(0));
        assert_eq!(bijbits_to_nat(&[0, 0, 0]).unwrap(), nat(7));
        assert_eq!(bijbits_to_nat(&[1, 1, 0, 1, 0]).unwrap(), nat(42));
    }

    #[test]
    fn bijbits_runs_of_equal_bits() {
        // n+1 = 2^k is k zeros; n+1 = 2^(k+1)-1 is k ones.
        for k in 0..12u64 {
            let zeros = nat_to_bijbits(&nat((1 << k) - 1));
            assert_eq!(zeros, vec![0u8; k as usize]);
            let ones = nat_to_bijbits(&nat((1 << (k + 1)) - 2));
            assert_eq!(ones, vec![1u8; k as usize]);
        }
    }

    #[test]
    fn bijbits_length_is_log2() {
        for k in 0..4096u64 {
            let len = nat_to_bijbits(&nat(k)).len() as u32;
            assert_eq!(len, (k + 1).ilog2());
        }
    }

    #[test]
    fn all_bitstrings_starts_at_the_empty_string() {
        let first: Vec<Vec<u8>> = all_bitstrings().take(4).collect();
        assert_eq!(first, vec![vec![], vec![0], vec![1], vec![0, 0]]);
    }
}

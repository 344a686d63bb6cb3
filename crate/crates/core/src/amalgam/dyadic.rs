use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

/// `num / 2^exp`, kept normalized: `exp = 0` or `num` odd.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyadicRational<I> {
    pub num: I,
    pub exp: u32,
}

fn two<I: Integer>() -> I {
    I::one() + I::one()
}

fn pow2<I: Integer + Clone>(e: u32) -> I {
    let mut p = I::one();
    for _ in 0..e {
        p = p * two();
    }
    p
}

impl<I: Integer + Signed + Clone> DyadicRational<I> {
    pub fn new(num: I, exp: u32) -> Self {
        let (mut num, mut exp) = (num, exp);
        while exp > 0 && num.is_even() {
            num = num / two();
            exp -= 1;
        }
        if num.is_zero() {
            exp = 0;
        }
        DyadicRational { num, exp }
    }

    pub fn zero() -> Self {
        DyadicRational { num: I::zero(), exp: 0 }
    }

    pub fn from_integer(n: I) -> Self {
        DyadicRational { num: n, exp: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    /// `self · 2^k` for any integer `k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if k >= 0 {
            let k = u32::try_from(k).expect("shift fits in u32");
            let back = k.min(self.exp);
            DyadicRational::new(self.num.clone() * pow2::<I>(k - back), self.exp - back)
        } else {
            let k = u32::try_from(-k).expect("shift fits in u32");
            DyadicRational::new(self.num.clone(), self.exp + k)
        }
    }

    /// Greatest integer not above the value.
    pub fn floor(&self) -> I {
        self.num.div_floor(&pow2(self.exp))
    }

    /// The value minus its floor, in `[0, 1)`.
    pub fn fract(&self) -> Self {
        let den: I = pow2(self.exp);
        DyadicRational::new(self.num.mod_floor(&den), self.exp)
    }
}

impl<I: Integer + Signed + Clone> Add for DyadicRational<I> {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        let e = self.exp.max(o.exp);
        let x = self.num * pow2::<I>(e - self.exp);
        let y = o.num * pow2::<I>(e - o.exp);
        DyadicRational::new(x + y, e)
    }
}

impl<I: Integer + Signed + Clone> Neg for DyadicRational<I> {
    type Output = Self;

    fn neg(self) -> Self {
        DyadicRational { num: -self.num, exp: self.exp }
    }
}

impl<I: Integer + Signed + Clone> Sub for DyadicRational<I> {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<I: fmt::Display> fmt::Display for DyadicRational<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::{Dyadic, SmallDyadic};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    #[test]
    fn normalizes() {
        assert_eq!(SmallDyadic::new(6, 2), SmallDyadic { num: 3, exp: 1 });
        assert_eq!(SmallDyadic::new(0, 5), SmallDyadic::zero());
        assert_eq!(SmallDyadic::new(-3, 1).floor(), -2);
        assert_eq!(SmallDyadic::new(-3, 1).fract(), SmallDyadic::new(1, 1));
        assert_eq!(SmallDyadic::new(5, 2).to_string(), "5/2^2");
    }

    #[test]
    fn big_shifts() {
        let x = Dyadic::from_integer(BigInt::from(3)).mul_pow2(200).mul_pow2(-200);
        assert_eq!(x, Dyadic::from_integer(BigInt::from(3)));
    }

    proptest! {
        #[test]
        fn sums_and_shifts_round_trip(a in -1000i64..1000, ea in 0u32..8, b in -1000i64..1000, eb in 0u32..8, k in -6i64..6) {
            let x = SmallDyadic::new(a, ea);
            let y = SmallDyadic::new(b, eb);
            let s = x.clone() + y.clone();
            prop_assert_eq!(s.clone() - y.clone(), x.clone());
            prop_assert!(s.exp == 0 || s.num % 2 != 0);
            prop_assert_eq!(x.mul_pow2(k).mul_pow2(-k), x.clone());
            // exact rational check against a common denominator
            let lhs = (a as i128) * (1i128 << (16 - ea)) + (b as i128) * (1i128 << (16 - eb));
            prop_assert_eq!(lhs, (s.num as i128) * (1i128 << (16 - s.exp)));
            let f = x.fract();
            prop_assert_eq!(SmallDyadic::from_integer(x.floor()) + f.clone(), x);
            prop_assert!(f.num >= 0 && (f.exp > 0 || f.num == 0));
        }
    }
}

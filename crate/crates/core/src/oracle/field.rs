//! Table-driven finite fields of order at most 9.
//!
//! Elements are indices `0..order`; `0` and `1` are the additive and
//! multiplicative identities. Index-2 extensions are built as
//! `F_4 = F_2[x]/(x^2+x+1)` and `F_9 = F_3[x]/(x^2+1)` with element `a + b x`
//! stored as `a + p b`. The field axioms are checked exhaustively at
//! construction.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallField {
    order: usize,
    characteristic: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    frobenius: Vec<u8>,
    involution: Option<Vec<u8>>,
}

impl SmallField {
    pub fn new(order: usize) -> Result<SmallField> {
        let (p, k) = match order {
            2 | 3 | 5 | 7 => (order, 1),
            4 => (2, 2),
            9 => (3, 2),
            _ => return Err(Error::domain(format!("unsupported field order {order}"))),
        };
        // x^2 = r0 + r1 x in the quadratic extensions
        let (r0, r1) = match order {
            4 => (1u8, 1u8),  // x^2 + x + 1 = 0
            9 => (2u8, 0u8),  // x^2 + 1 = 0
            _ => (0, 0),
        };
        let q = order;
        let pair = |e: usize| -> (usize, usize) { (e % p, e / p) };
        let unpair = |a: usize, b: usize| -> u8 { (a % p + p * (b % p)) as u8 };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for e1 in 0..q {
            for e2 in 0..q {
                let (a1, b1) = pair(e1);
                let (a2, b2) = pair(e2);
                add[e1 * q + e2] = unpair(a1 + a2, b1 + b2);
                if k == 1 {
                    mul[e1 * q + e2] = ((a1 * a2) % p) as u8;
                } else {
                    // (a1 + b1 x)(a2 + b2 x) with x^2 = r0 + r1 x
                    let c0 = a1 * a2 + b1 * b2 * r0 as usize;
                    let c1 = a1 * b2 + a2 * b1 + b1 * b2 * r1 as usize;
                    mul[e1 * q + e2] = unpair(c0, c1);
                }
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for e in 0..q {
            neg[e] = (0..q).find(|&f| add[e * q + f] == 0).unwrap() as u8;
            if e != 0 {
                inv[e] = (0..q)
                    .find(|&f| mul[e * q + f] == 1)
                    .ok_or_else(|| Error::inconsistent("element without inverse"))?
                    as u8;
            }
        }
        let pow = |mut base: usize, mut e: usize| -> u8 {
            let mut acc = 1usize;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul[acc * q + base] as usize;
                }
                base = mul[base * q + base] as usize;
                e >>= 1;
            }
            acc as u8
        };
        let frobenius: Vec<u8> = (0..q).map(|e| pow(e, p)).collect();
        let involution = (k == 2).then(|| frobenius.clone());

        let field = SmallField {
            order: q,
            characteristic: p,
            add,
            mul,
            neg,
            inv,
            frobenius,
            involution,
        };
        field.check_axioms()?;
        Ok(field)
    }

    fn check_axioms(&self) -> Result<()> {
        let q = self.order;
        let bad = |msg: &str| Err(Error::inconsistent(format!("field axiom failed: {msg}")));
        for a in 0..q as u8 {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.mul(a, 0) != 0 {
                return bad("identities");
            }
            for b in 0..q as u8 {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return bad("commutativity");
                }
                for c in 0..q as u8 {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return bad("additive associativity");
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return bad("multiplicative associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return bad("distributivity");
                    }
                }
            }
        }
        if let Some(inv) = &self.involution {
            for a in 0..q as u8 {
                if inv[inv[a as usize] as usize] != a {
                    return bad("involution order");
                }
            }
            // fixed points are exactly the prime subfield
            let fixed = (0..q as u8).filter(|&a| inv[a as usize] == a).count();
            if fixed != self.characteristic {
                return bad("involution fixed field");
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.order + b as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.order + b as usize]
    }

    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            return Err(Error::domain("inverse of zero"));
        }
        Ok(self.inv[a as usize])
    }

    pub fn frobenius(&self, a: u8) -> u8 {
        self.frobenius[a as usize]
    }

    /// The conjugation `x -> x^{q0}` on index-2 extensions.
    pub fn conjugate(&self, a: u8) -> Result<u8> {
        match &self.involution {
            Some(t) => Ok(t[a as usize]),
            None => Err(Error::domain("field has no involution")),
        }
    }

    pub fn has_involution(&self) -> bool {
        self.involution.is_some()
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.order as u8
    }

    /// Some non-square element; exists iff the order is odd.
    pub fn non_square(&self) -> Result<u8> {
        let squares: std::collections::BTreeSet<u8> =
            self.elements().map(|a| self.mul(a, a)).collect();
        self.elements()
            .find(|a| !squares.contains(a))
            .ok_or_else(|| Error::domain("every element is a square"))
    }

    pub fn is_square(&self, a: u8) -> bool {
        self.elements().any(|b| self.mul(b, b) == a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_orders_construct() {
        for q in [2, 3, 4, 5, 7, 9] {
            let f = SmallField::new(q).unwrap();
            assert_eq!(f.order(), q);
            // the multiplicative group is cyclic of order q - 1
            if q > 2 {
                let has_generator = (2..q as u8).any(|g| {
                    let mut x = g;
                    let mut ord = 1;
                    while x != 1 {
                        x = f.mul(x, g);
                        ord += 1;
                    }
                    ord == q - 1
                });
                assert!(has_generator, "no generator in F_{q}");
            }
            assert_eq!(f.add(1, f.neg(1)), 0);
        }
        assert!(SmallField::new(6).is_err());
        assert!(SmallField::new(8).is_err());
    }

    #[test]
    fn involution_is_conjugation() {
        let f4 = SmallField::new(4).unwrap();
        assert!(f4.has_involution());
        // x and x+1 = x^2 are swapped
        assert_eq!(f4.conjugate(2).unwrap(), 3);
        assert_eq!(f4.conjugate(3).unwrap(), 2);
        assert_eq!(f4.conjugate(1).unwrap(), 1);
        let f9 = SmallField::new(9).unwrap();
        for a in f9.elements() {
            assert_eq!(f9.conjugate(a).unwrap(), f9.frobenius(a));
        }
        assert!(SmallField::new(5).unwrap().conjugate(2).is_err());
    }

    #[test]
    fn squares() {
        let f3 = SmallField::new(3).unwrap();
        assert_eq!(f3.non_square().unwrap(), 2);
        let f2 = SmallField::new(2).unwrap();
        assert!(f2.non_square().is_err());
        let f9 = SmallField::new(9).unwrap();
        let squares = f9.elements().filter(|&a| a != 0 && f9.is_square(a)).count();
        assert_eq!(squares, 4);
    }
}
